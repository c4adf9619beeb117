"""Dehn fillings of torus-link exteriors along regular fibers.

The exterior of the (dr, ds) torus link, with the d components realized
as parallel regular fibers of a Seifert fibration of the three-sphere, is
filled along one slope per component.  In the meridian-fiber basis the
fiber slope is excluded; every other multislope yields a Seifert manifold
over the two-sphere whose invariants are written down directly.

Slopes are primitive integer pairs ``(a, c)`` read against a named basis;
``a/c``-notation puts the meridian coefficient first.  The longitude and
fiber differ by ``fiber = longitude + rs * meridian``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import FiberSlopeFilling, NotationError
from .foliation import ExcellenceVerdict, decide_excellence
from .seifert import SeifertInvariants, normalize, reverse_orientation

MERIDIAN_LONGITUDE = "meridian-longitude"
MERIDIAN_FIBER = "meridian-fiber"
SECTION_FIBER = "section-fiber"
_BASES = (MERIDIAN_LONGITUDE, MERIDIAN_FIBER, SECTION_FIBER)


@dataclass(frozen=True)
class Slope:
    a: int
    c: int
    basis: str = MERIDIAN_LONGITUDE

    def __post_init__(self):
        if (self.a, self.c) == (0, 0):
            raise ValueError("slope cannot be zero")
        if gcd(abs(self.a), abs(self.c)) != 1:
            raise ValueError(f"slope ({self.a}, {self.c}) is not primitive")
        if self.basis not in _BASES:
            raise ValueError(f"unknown basis {self.basis!r}")

    def __str__(self) -> str:
        return f"{self.a}/{self.c}"


def parse_slope(text: str, basis: str = MERIDIAN_LONGITUDE) -> Slope:
    parts = text.strip().split("/")
    try:
        if len(parts) == 1:
            return Slope(int(parts[0]), 1, basis)
        if len(parts) == 2:
            return Slope(int(parts[0]), int(parts[1]), basis)
    except ValueError as exc:
        raise NotationError(f"bad slope {text!r}: {exc}") from exc
    raise NotationError(f"bad slope {text!r}")


@dataclass(frozen=True)
class TorusLinkExterior:
    """Exterior of the (dr, ds) torus link; gcd(r, s) = 1.

    A single component needs r, s >= 2, and the unlink-like case
    r = s = 1 needs at least three components; those hypotheses make the
    filling recipe valid.
    """

    d: int
    r: int
    s: int

    def __post_init__(self):
        if self.d < 1 or self.r < 1 or self.s < 1:
            raise ValueError("component count and torus parameters must be positive")
        if gcd(self.r, self.s) != 1:
            raise ValueError(f"r = {self.r} and s = {self.s} must be coprime")
        if self.d == 1 and (self.r < 2 or self.s < 2):
            raise ValueError("a single component requires r, s >= 2")
        if self.r == 1 and self.s == 1 and self.d < 3:
            raise ValueError("r = s = 1 requires at least 3 components")


def ml_to_mf(sl: Slope, r: int, s: int) -> Slope:
    """Rewrite a meridian-longitude slope in the meridian-fiber basis:
    a*mu + c*lambda = (a - c*r*s)*mu + c*phi."""
    if sl.basis != MERIDIAN_LONGITUDE:
        raise ValueError(f"expected a meridian-longitude slope, got basis {sl.basis!r}")
    return Slope(sl.a - sl.c * r * s, sl.c, MERIDIAN_FIBER)


def base_fibers(ext: TorusLinkExterior) -> tuple[tuple[int, int], ...]:
    """Exceptional fibers of the ambient fibration that survive in the
    exterior.  For r, s >= 2 these are beta_1'/r and beta_2/s with
    beta_1 s + beta_2 r = -1, 0 < beta_2 < s and beta_1' = beta_1 + r."""
    r, s = ext.r, ext.s
    if r >= 2 and s >= 2:
        beta2 = (-pow(r, -1, s)) % s
        beta1, rem = divmod(-1 - beta2 * r, s)
        assert rem == 0
        return ((r, beta1 + r), (s, beta2))
    if r == 1 and s == 1:
        return ()
    t = max(r, s)
    return ((t, t - 1),)


def fill(ext: TorusLinkExterior, slopes, mirror: bool = False) -> SeifertInvariants:
    """Normalized invariants of the filled exterior.

    One meridian-longitude slope per component.  A slope with
    ``a - c*r*s = 0`` runs along the fiber and is rejected: that filling is
    not covered by this recipe.  With ``mirror=True`` the surgery is done on
    the mirror link, computed by negating every slope and reversing the
    orientation of the result.
    """
    slopes = tuple(slopes)
    if len(slopes) != ext.d:
        raise ValueError(f"expected {ext.d} slopes, got {len(slopes)}")
    if mirror:
        flipped = tuple(Slope(-sl.a, sl.c, sl.basis) for sl in slopes)
        return normalize(reverse_orientation(fill(ext, flipped)))
    rs = ext.r * ext.s
    filled = []
    for sl in slopes:
        if sl.basis != MERIDIAN_LONGITUDE:
            raise ValueError("fill expects meridian-longitude slopes")
        am = sl.a - sl.c * rs
        if am == 0:
            raise FiberSlopeFilling(f"slope {sl} is the fiber slope of T({ext.d * ext.r},{ext.d * ext.s})")
        frac = Fraction(-sl.c, am)
        filled.append((frac.denominator, frac.numerator))
    return normalize(SeifertInvariants(-1, base_fibers(ext) + tuple(filled)))


def negative_surgery_is_excellent(ext: TorusLinkExterior, ks) -> ExcellenceVerdict:
    """Verdict for the multislope (-k_1, ..., -k_d) with every k_i >= 2."""
    ks = tuple(ks)
    if len(ks) != ext.d:
        raise ValueError(f"expected {ext.d} surgery coefficients, got {len(ks)}")
    if any(k < 2 for k in ks):
        raise ValueError("surgery coefficients must be at least 2")
    return decide_excellence(fill(ext, tuple(Slope(-k, 1) for k in ks)))


def reference_witness(r: int, s: int) -> tuple[int, int]:
    """The pair (m, a) = (rs + 1, beta_2 r + 1) that always validates the
    negative-surgery fillings when r, s >= 2."""
    if r < 2 or s < 2:
        raise ValueError("reference witness needs r, s >= 2")
    beta2 = (-pow(r, -1, s)) % s
    return r * s + 1, beta2 * r + 1
