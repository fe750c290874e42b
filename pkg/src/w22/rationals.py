"""Exact scalars.

Every coefficient in this package is a ``fractions.Fraction``.  The two
helpers here pin down the single accepted text form: ``p`` or ``p/q`` with
an optional leading minus, no decimals, no whitespace tricks.
"""

import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^-?\d+(?:/[1-9]\d*)?$")


def rat(text):
    """Parse ``p`` or ``p/q`` into a Fraction; reject anything else."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    s = str(text).strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError("not a rational: %r (expected p or p/q)" % (text,))
    return Fraction(s)


def rat_str(value):
    """Render a Fraction as ``p`` or ``p/q`` (lowest terms, positive q)."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)
