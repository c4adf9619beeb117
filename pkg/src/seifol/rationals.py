"""Exact rational numbers and continued-fraction conversion.

All arithmetic in this package is exact; floating point is never used.
``Rational`` is the stdlib ``fractions.Fraction``, re-exported so every
other module has a single import point for the scalar type.

Continued fractions follow the convention

    a/b = p_1 + 1/(p_2 + 1/(... + 1/p_m))

with every term a nonzero integer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateExpansion, NoEvenExpansion, NotationError

Rational = Fraction

CANONICAL_POSITIVE = "canonical-positive"
EVEN_TERMS = "even-terms"

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Rational:
    """Parse ``"a/b"`` or ``"a"`` into an exact rational."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise NotationError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise NotationError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(value: Rational) -> str:
    return str(value)


@dataclass(frozen=True)
class ContinuedFraction:
    """A bracket expansion ``[p_1, ..., p_m]`` with nonzero integer terms."""

    terms: tuple[int, ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("continued fraction needs at least one term")
        for t in self.terms:
            if not isinstance(t, int) or isinstance(t, bool):
                raise ValueError(f"term {t!r} is not an integer")
            if t == 0:
                raise ValueError("continued fraction terms must be nonzero")

    def __str__(self) -> str:
        return "[" + ",".join(str(t) for t in self.terms) + "]"


def parse_continued_fraction(text: str) -> ContinuedFraction:
    """Parse a bracketed comma list such as ``"[2,-2]"``."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise NotationError(f"not a bracketed list: {text!r}")
    body = s[1:-1].strip()
    if not body:
        raise NotationError("empty continued fraction")
    try:
        terms = tuple(int(tok.strip()) for tok in body.split(","))
        return ContinuedFraction(terms)
    except ValueError as exc:
        raise NotationError(f"bad continued fraction {text!r}: {exc}") from exc


def cf_eval(cf: ContinuedFraction) -> Rational:
    """Evaluate a continued fraction to the exact rational it represents.

    Raises DegenerateExpansion if a tail evaluates to zero, which would
    force division by zero on the next step.
    """
    value = Fraction(cf.terms[-1])
    for p in reversed(cf.terms[:-1]):
        if value == 0:
            raise DegenerateExpansion(f"zero intermediate denominator in {cf}")
        value = p + 1 / value
    return value


def cf_expand(r: Rational, policy: str = CANONICAL_POSITIVE) -> ContinuedFraction:
    """Expand a rational into a continued fraction under the given policy.

    canonical-positive is greedy floor division.  Values in [0, 1) have no
    expansion with a nonzero leading term, so they are rejected.

    even-terms produces an expansion with every term even.  Such an
    expansion exists exactly when one of numerator and denominator is even
    and |r| > 1; otherwise NoEvenExpansion is raised.
    """
    r = Fraction(r)
    if policy == CANONICAL_POSITIVE:
        return _expand_canonical(r)
    if policy == EVEN_TERMS:
        return _expand_even(r)
    raise ValueError(f"unknown expansion policy {policy!r}")


def _expand_canonical(r: Fraction) -> ContinuedFraction:
    if 0 <= r < 1:
        raise DegenerateExpansion(
            f"{r} lies in [0, 1); greedy expansion would need a zero leading term"
        )
    terms = []
    x = r
    while True:
        p = x.numerator // x.denominator
        rem = x - p
        if rem == 0:
            terms.append(p)
            return ContinuedFraction(tuple(terms))
        terms.append(p)
        x = 1 / rem  # rem in (0, 1), so x > 1 and later terms are >= 1


def _expand_even(r: Fraction) -> ContinuedFraction:
    a, b = r.numerator, r.denominator
    if a % 2 == 1 and b % 2 == 1:
        raise NoEvenExpansion(f"{r} has odd numerator and denominator")
    if -1 < r < 1:
        raise NoEvenExpansion(f"{r} lies in (-1, 1); all tails of an even expansion exceed 1")
    terms = []
    while True:
        if b == 1:
            terms.append(a)
            return ContinuedFraction(tuple(terms))
        # Nearest even integer to a/b; parity forces |a - p*b| < b, so no ties.
        p = 2 * ((a + b) // (2 * b))
        terms.append(p)
        na, nb = b, a - p * b
        if nb < 0:
            na, nb = -na, -nb
        a, b = na, nb
