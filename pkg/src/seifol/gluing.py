"""Integer slope-map calculus and the parametrized cable Seifert families.

A SlopeMap is a determinant +/-1 integer 2x2 matrix acting on primitive
slope pairs by plain matrix-vector multiplication.  Slopes here are bare
pairs ``(a, c)`` with the meridian coefficient first, printed ``a/c``;
reduction fixes the sign by making the second coordinate nonnegative.

Named matrices from the satellite decompositions come in two ordered
bases.  The cable gluing matrix ``[[1, 0], [2r+1, -1]]`` is derived in the
(longitude, meridian) order, while the doubling matrix ``[[-2, 1], [-3, 2]]``
is in (meridian, longitude) order; ``swap_basis`` converts between the two.

Cable families: filling the branched-cover complement of the companion
along a one-parameter family of lifted slopes yields Seifert invariants
whose last fiber is a linear-fractional function of the parameter k.  The
families are data, one manifest row per case and orientation variant, and
``cable_family_check`` verifies the expected horizontal range.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import gcd

from .errors import DegenerateParameter, NotationError
from .foliation import FoliationDecision, decide_horizontal
from .seifert import SeifertInvariants, normalize, reverse_orientation


@dataclass(frozen=True)
class SlopeMap:
    m11: int
    m12: int
    m21: int
    m22: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise ValueError(f"slope map must have determinant +/-1, got {self.det}")

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.m11, self.m12), (self.m21, self.m22))

    @classmethod
    def identity(cls) -> "SlopeMap":
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: "SlopeMap") -> "SlopeMap":
        return SlopeMap(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def inverse(self) -> "SlopeMap":
        d = self.det
        return SlopeMap(self.m22 * d, -self.m12 * d, -self.m21 * d, self.m11 * d)


def reduce_slope(pair: tuple[int, int]) -> tuple[int, int]:
    """Primitive representative with nonnegative second coordinate."""
    a, c = pair
    if (a, c) == (0, 0):
        raise ValueError("zero slope")
    g = gcd(abs(a), abs(c))
    a, c = a // g, c // g
    if c < 0 or (c == 0 and a < 0):
        a, c = -a, -c
    return a, c


def apply_slope_map(f: SlopeMap, slope: tuple[int, int]) -> tuple[int, int]:
    a, c = slope
    return reduce_slope((f.m11 * a + f.m12 * c, f.m21 * a + f.m22 * c))


def compose_slope_maps(maps) -> SlopeMap:
    """Composite of the maps listed in application order (first applied first)."""
    maps = tuple(maps)
    if not maps:
        raise ValueError("need at least one slope map")
    out = maps[0]
    for f in maps[1:]:
        out = f @ out
    return out


def swap_basis(f: SlopeMap) -> SlopeMap:
    """Conjugate by the basis swap, converting between the two coordinate
    orders of a boundary torus."""
    return SlopeMap(f.m22, f.m21, f.m12, f.m11)


class AllIntegers:
    """Symbolic value: every integer qualifies."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "All"

    def __contains__(self, k):
        return isinstance(k, int)


ALL_INTEGERS = AllIntegers()


def fixed_unit_fraction_slopes(f: SlopeMap):
    """All integers k with f(1/k) again of the form 1/k'.

    The image of (1, k) is (m11 + m12 k, m21 + m22 k).  Because the
    determinant is a unit, any common divisor of the two coordinates
    divides it, so the image numerator is already reduced: the unit-fraction
    condition is exactly m11 + m12 k = +/-1.  No search is needed.
    """
    if f.m12 == 0:
        return ALL_INTEGERS  # m11 is forced to +/-1 by the determinant
    out = set()
    for target in (1, -1):
        q, r = divmod(target - f.m11, f.m12)
        if r == 0:
            out.add(q)
    return frozenset(out)


def cable_gluing_matrix(p: int) -> SlopeMap:
    """Gluing between the two companion copies in the double branched cover
    of a (p, 2) cable, in the (longitude, meridian) ordered basis; sends the
    slope value x to p - x."""
    return SlopeMap(1, 0, p, -1)


def cable_composition_factors(r: int) -> tuple[SlopeMap, SlopeMap, SlopeMap]:
    """The factors A, B, A^-1 whose application-order composite is the cable
    gluing matrix for p = 2r + 1."""
    a = SlopeMap(r + 1, -1, -r, 1)
    b = SlopeMap(0, 1, 1, 0)
    return a, b, a.inverse()


def whitehead_gluing_matrix() -> SlopeMap:
    """Gluing between two companion copies in a cyclic branched cover of an
    untwisted double, in the (meridian, longitude) ordered basis."""
    return SlopeMap(-2, 1, -3, 2)


def whitehead_composition_factors() -> tuple[SlopeMap, SlopeMap, SlopeMap]:
    """Application-order factors of the doubling matrix: rewrite boundary
    coordinates into the clasp-link basis (meridian m, zero-framed
    longitude b), swap the two components, and rewrite back."""
    into_clasp = SlopeMap(-2, 1, 1, 0)  # mu -> -2m + b, lambda -> m
    swap = SlopeMap(0, 1, 1, 0)  # m <-> b
    back = SlopeMap(0, 1, 1, 2)  # m -> lambda, b -> mu + 2 lambda
    return into_clasp, swap, back


@dataclass(frozen=True)
class CableCaseRow:
    """One parametrized Seifert family from a satellite decomposition.

    The filled manifold is M(b; base fibers, f(k) repeated ``count`` times)
    with f(k) = (num_k * k + num_c) / (den_k * k + den_c); ``reversed_``
    asks for an orientation flip after assembly, and the family is expected
    horizontal for k <= k_max.  Provisional rows were derived here by the
    same procedure as the published ones but have no printed counterpart.
    """

    label: str
    cover: tuple[int, int, int]
    variant: str
    count: int
    b: int
    base_fibers: tuple[tuple[int, int], ...]
    num: tuple[int, int]
    den: tuple[int, int]
    reversed_: bool
    k_max: int
    provisional: bool


_LINEAR_RE = re.compile(r"^(?:(-?\d*)k)?([+-]?\d+)?$")


def parse_linear(text: str) -> tuple[int, int]:
    """Parse a linear polynomial in k, e.g. '2k-3', '-k+4', 'k', '7'."""
    s = text.strip().replace(" ", "")
    m = _LINEAR_RE.match(s)
    if not m or (m.group(1) is None and m.group(2) is None):
        raise NotationError(f"bad linear polynomial {text!r}")
    coeff_txt, const_txt = m.groups()
    if coeff_txt is None:
        coeff = 0
    elif coeff_txt in ("", "+"):
        coeff = 1
    elif coeff_txt == "-":
        coeff = -1
    else:
        coeff = int(coeff_txt)
    const = int(const_txt) if const_txt else 0
    return coeff, const


def format_linear(pair: tuple[int, int]) -> str:
    a, b = pair
    if a == 0:
        return str(b)
    ka = "k" if a == 1 else ("-k" if a == -1 else f"{a}k")
    if b == 0:
        return ka
    return f"{ka}{b:+d}"


def _parse_row(line: str) -> CableCaseRow:
    parts = [p.strip() for p in line.split("|")]
    if len(parts) != 10:
        raise NotationError(f"manifest row needs 10 fields, got {len(parts)}: {line!r}")
    label, cover_s, variant, count_s, b_s, base_s, fiber_s, orient, pred_s, status = parts
    cover = tuple(int(x) for x in cover_s.split(","))
    if len(cover) != 3:
        raise NotationError(f"bad cover triple {cover_s!r}")
    base = []
    if base_s != "-":
        for tok in base_s.split(","):
            num, den = tok.split("/")
            base.append((int(den), int(num)))
    fm = re.match(r"^\((.+)\)/\((.+)\)$", fiber_s)
    if not fm:
        raise NotationError(f"bad fiber fraction {fiber_s!r}")
    pm = re.match(r"^k<=(-?\d+)$", pred_s)
    if not pm:
        raise NotationError(f"bad range predicate {pred_s!r}")
    if orient not in ("+", "-"):
        raise NotationError(f"bad orientation flag {orient!r}")
    if status not in ("displayed", "provisional"):
        raise NotationError(f"bad status {status!r}")
    return CableCaseRow(
        label=label,
        cover=cover,  # type: ignore[arg-type]
        variant=variant,
        count=int(count_s),
        b=int(b_s),
        base_fibers=tuple(base),
        num=parse_linear(fm.group(1)),
        den=parse_linear(fm.group(2)),
        reversed_=orient == "-",
        k_max=int(pm.group(1)),
        provisional=status == "provisional",
    )


@lru_cache(maxsize=1)
def load_cable_rows() -> dict[str, CableCaseRow]:
    text = resources.files("seifol").joinpath("data/cable_families.txt").read_text()
    rows: dict[str, CableCaseRow] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        row = _parse_row(line)
        if row.label in rows:
            raise NotationError(f"duplicate manifest label {row.label!r}")
        rows[row.label] = row
    return rows


def get_cable_row(label: str) -> CableCaseRow:
    rows = load_cable_rows()
    if label not in rows:
        raise NotationError(f"unknown cable case {label!r}; known: {', '.join(sorted(rows))}")
    return rows[label]


def cable_family_fiber(row: CableCaseRow, k: int) -> Fraction:
    num = row.num[0] * k + row.num[1]
    den = row.den[0] * k + row.den[1]
    if den == 0:
        raise DegenerateParameter(f"{row.label}: fiber undefined at k = {k}")
    return Fraction(num, den)


def cable_family_raw(row: CableCaseRow, k: int) -> SeifertInvariants:
    """Assembled invariants before normalization, as displayed."""
    frac = cable_family_fiber(row, k)
    fiber = (frac.denominator, frac.numerator)
    return SeifertInvariants(row.b, row.base_fibers + (fiber,) * row.count)


def cable_family_invariants(row: CableCaseRow, k: int) -> SeifertInvariants:
    """Normalized invariants of the family member at parameter k."""
    si = normalize(cable_family_raw(row, k))
    if len(si.fibers) < 3:
        raise DegenerateParameter(
            f"{row.label}: k = {k} collapses to {len(si.fibers)} exceptional fibers"
        )
    if row.reversed_:
        si = reverse_orientation(si)
    return si


@dataclass(frozen=True)
class CableCheckReport:
    label: str
    checked: tuple[int, ...]
    failures: tuple[tuple[int, str], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def cable_family_check(row: CableCaseRow, k_min: int, k_max: int) -> CableCheckReport:
    """Decide horizontality for every k in [k_min, k_max] that lies in the
    row's expected-horizontal range, reporting violations."""
    checked = []
    failures = []
    for k in range(k_min, k_max + 1):
        if k > row.k_max:
            continue
        checked.append(k)
        decision: FoliationDecision = decide_horizontal(cable_family_invariants(row, k))
        if not decision.horizontal:
            failures.append((k, decision.kind))
    return CableCheckReport(row.label, tuple(checked), tuple(failures))
