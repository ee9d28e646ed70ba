"""Shared frozen reference values for the test suite.

The decimal strings below were produced by an independent high-precision
computation (mpmath at 60 significant digits) run before the package was
built, then truncated to 40 places.  Parsing them with Fraction is exact,
so each constant is a rational within 10**-39 of the true real value; the
REF_SLACK constant accounts for that truncation wherever a test compares
against them.
"""

from fractions import Fraction

REF_ARCTAN_1 = Fraction("0.7853981633974483096156608458198757210493")
REF_ARCTAN_HALF = Fraction("0.4636476090008061162142562314612144020285")
REF_ARCTAN_THIRD = Fraction("0.3217505543966421934014046143586613190208")
REF_ARCTAN_95 = Fraction("0.7597627548757708289229611953999818240055")
REF_PI = Fraction("3.141592653589793238462643383279502884197")

REF_SLACK = Fraction(1, 10**39)
