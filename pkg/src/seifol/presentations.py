"""Group presentations of branched covers and the coarse order obstruction.

The obstruction is sign-level only: in a left-ordered group a product of
elements that are all positive (or all negative) cannot be the identity.
A {+,-} labeling of the generators under which some relator becomes such a
product is impossible, so if every labeling is impossible the group admits
no left order in which all generators are nontrivial.  Refined inequality
arguments that kill individual surviving labelings are out of scope here;
survivors are reported as data.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import IndivisibleSurgery, NotationError, TooManyGenerators
from .snf import cokernel_order
from .words import Word

PLUS = "+"
MINUS = "-"
MIXED = "mixed"
ABSENT = "absent"

GENERATOR_CAP = 24


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        declared = set(self.generators)
        for rel in self.relators:
            undeclared = rel.generators() - declared
            if undeclared:
                raise ValueError(f"relator uses undeclared generators {sorted(undeclared)}")

    def abelianization_matrix(self) -> list[list[int]]:
        return [[rel.exponent_sum(g) for g in self.generators] for rel in self.relators]

    def abelianization_order(self) -> int | None:
        """Order of the abelianized group via Smith normal form; None if infinite."""
        return cokernel_order(self.abelianization_matrix(), len(self.generators))


def sign_profile(rel: Word, generators) -> dict[str, str]:
    """Per-generator exponent signs in one relator: "+", "-", "mixed" or "absent"."""
    out = {}
    for g in generators:
        signs = {e > 0 for gg, e in rel.letters if gg == g}
        if not signs:
            out[g] = ABSENT
        elif signs == {True}:
            out[g] = PLUS
        elif signs == {False}:
            out[g] = MINUS
        else:
            out[g] = MIXED
    return out


@dataclass(frozen=True)
class ObstructionReport:
    obstructed: bool
    assignments_checked: int
    survivors: tuple[tuple[str, ...], ...] = ()
    # The certificate assumes every generator is nontrivial; trivial
    # generators must be excluded by a separate argument.
    nontriviality_assumed: bool = field(default=True)


def coarse_obstruction(pres: GroupPresentation, cap: int = GENERATOR_CAP) -> ObstructionReport:
    """Enumerate all {+,-} assignments and reject those under which some
    relator is a same-sign product.

    A letter (g, e) contributes sign(e) * sigma(g); a relator is violated
    when every contribution agrees.  Generators appearing with both
    exponent signs can never force a violation on their own.  Survivors are
    returned sorted; an empty survivor list is the obstruction certificate.
    """
    gens = pres.generators
    if len(gens) > cap:
        raise TooManyGenerators(f"{len(gens)} generators exceeds cap {cap}")
    index = {g: i for i, g in enumerate(gens)}
    compiled = [
        tuple((index[g], 1 if e > 0 else -1) for g, e in rel.letters)
        for rel in pres.relators
        if rel.letters
    ]
    survivors = []
    checked = 0
    for sigma in product((1, -1), repeat=len(gens)):
        checked += 1
        violated = False
        for rel in compiled:
            first = rel[0][1] * sigma[rel[0][0]]
            if all(s * sigma[i] == first for i, s in rel[1:]):
                violated = True
                break
        if not violated:
            survivors.append(tuple(PLUS if s == 1 else MINUS for s in sigma))
    survivors.sort()
    return ObstructionReport(not survivors, checked, tuple(survivors))


def present_two_bridge_cover(k: int, l: int, n: int, names=None) -> GroupPresentation:
    """Fundamental group of the n-fold cyclic branched cover of the
    two-bridge knot with bracket expansion [2l, -2k].

    Generators x_0 ... x_{n-1} (or ``names``); for each i mod n the relator

        (x_i^-k x_{i+1}^k)^l (x_{i+2}^-k x_{i+1}^k)^(l-1) (x_{i+2}^-k x_{i+1}^(k-1))

    plus the product relation x_0 x_1 ... x_{n-1} = 1.
    """
    if k < 1 or l < 1:
        raise ValueError("twist parameters must be positive")
    if n < 2:
        raise ValueError("cover order must be at least 2")
    if names is None:
        names = tuple(f"x{i}" for i in range(n))
    else:
        names = tuple(names)
        if len(names) != n:
            raise ValueError(f"need {n} generator names, got {len(names)}")
    relators = []
    for i in range(n):
        xi, xi1, xi2 = names[i], names[(i + 1) % n], names[(i + 2) % n]
        letters = []
        letters += [(xi, -k), (xi1, k)] * l
        letters += [(xi2, -k), (xi1, k)] * (l - 1)
        letters.append((xi2, -k))
        if k > 1:
            letters.append((xi1, k - 1))
        relators.append(Word(letters))
    relators.append(Word([(g, 1) for g in names]))
    return GroupPresentation(names, tuple(relators))


def present_pretzel_cover(k: int, l: int, m: int) -> GroupPresentation:
    """Fundamental group of the threefold cyclic branched cover of the
    (2k+1, 2l+1, 2m+1) pretzel knot.

    Generators x_0, x_1, x_2, y_0, y_1, y_2; for each i mod 3 the relators

        (x_i y_i^-1)^m x_i (x_{i+1} y_{i+1}^-1)^-m y_{i+1}^(k+1) y_i^-(k+1)
        y_i^(k+1) y_{i+1}^-k x_{i+1}^-(l+1) x_i^l

    plus the branching relations x_0 x_1 x_2 = 1 and y_0 y_1 y_2 = 1,
    which are ordinary relators here.
    """
    if k < 1 or l < 1 or m < 1:
        raise ValueError("pretzel parameters must be positive")
    xs = ("x0", "x1", "x2")
    ys = ("y0", "y1", "y2")
    relators = []
    for i in range(3):
        j = (i + 1) % 3
        first = [(xs[i], 1), (ys[i], -1)] * m
        first += [(xs[i], 1)]
        first += [(ys[j], 1), (xs[j], -1)] * m  # (x_j y_j^-1)^-m expanded
        first += [(ys[j], k + 1), (ys[i], -(k + 1))]
        relators.append(Word(first))
    for i in range(3):
        j = (i + 1) % 3
        relators.append(Word([(ys[i], k + 1), (ys[j], -k), (xs[j], -(l + 1)), (xs[i], l)]))
    relators.append(Word([(g, 1) for g in xs]))
    relators.append(Word([(g, 1) for g in ys]))
    return GroupPresentation(xs + ys, tuple(relators))


def pretzel_exterior_relators(k: int, l: int, m: int) -> tuple[Word, Word, Word]:
    """The three relators of the (2k+1, 2l+1, 2m+1) pretzel knot group on
    meridians x, y, z.  Their product is trivial in the free group, which is
    why one of them is redundant."""
    if k < 1 or l < 1 or m < 1:
        raise ValueError("pretzel parameters must be positive")
    r1 = Word(
        [("x", 1), ("y", -1)] * m
        + [("x", 1)]
        + [("y", 1), ("x", -1)] * m
        + [("y", 1), ("z", -1)] * (k + 1)
        + [("z", -1)]
        + [("z", 1), ("y", -1)] * (k + 1)
    )
    r2 = Word(
        [("y", 1), ("z", -1)] * k
        + [("y", 1)]
        + [("z", 1), ("y", -1)] * k
        + [("z", 1), ("x", -1)] * (l + 1)
        + [("x", -1)]
        + [("x", 1), ("z", -1)] * (l + 1)
    )
    r3 = Word(
        [("z", 1), ("x", -1)] * l
        + [("z", 1)]
        + [("x", 1), ("z", -1)] * l
        + [("x", 1), ("y", -1)] * (m + 1)
        + [("y", -1)]
        + [("y", 1), ("x", -1)] * (m + 1)
    )
    return r1, r2, r3


@dataclass(frozen=True)
class PretzelSurgery:
    """Surgery description of a branched cover of a two-bridge knot from the
    [2(2k+1), +/-(2l+1)] family: 1/d surgery on an n-strand pretzel knot."""

    strands: tuple[int, ...]
    coefficient: Fraction
    orientation_reversed: bool


def pretzel_surgery_description(n: int, k: int, l: int, sign: str) -> PretzelSurgery:
    """For n dividing 2k+1, the n-fold cover is (sign 1/d)-surgery on the
    pretzel knot with n strands of 2l+1 half-twists, d = (2k+1)/n; the
    positive-sign cover carries the reversed orientation."""
    if n <= 1 or k < 1 or l < 1:
        raise ValueError("need n > 1 and positive twist parameters")
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    if (2 * k + 1) % n != 0:
        raise IndivisibleSurgery(f"{n} does not divide 2k+1 = {2 * k + 1}")
    d = (2 * k + 1) // n
    coeff = Fraction(1, d) if sign == "+" else Fraction(-1, d)
    return PretzelSurgery(((2 * l + 1),) * n, coeff, sign == "+")


_GEN_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?$")


def parse_presentation(text: str) -> GroupPresentation:
    """Parse ``gens: a b c; rel: a b c; rel: a^-1 b`` into a presentation."""
    chunks = [c.strip() for c in text.replace("\n", ";").split(";") if c.strip()]
    gens: tuple[str, ...] | None = None
    relators = []
    for chunk in chunks:
        if chunk.startswith("gens:"):
            if gens is not None:
                raise NotationError("multiple 'gens:' sections")
            gens = tuple(chunk[len("gens:") :].split())
        elif chunk.startswith("rel:"):
            letters = []
            for tok in chunk[len("rel:") :].split():
                m = _GEN_TOKEN.match(tok)
                if not m:
                    raise NotationError(f"bad letter {tok!r}")
                exp = int(m.group(2)) if m.group(2) else 1
                if exp == 0:
                    raise NotationError(f"zero exponent in {tok!r}")
                letters.append((m.group(1), exp))
            relators.append(Word(letters))
        else:
            raise NotationError(f"unrecognized section {chunk!r}")
    if gens is None:
        raise NotationError("missing 'gens:' section")
    try:
        return GroupPresentation(gens, tuple(relators))
    except ValueError as exc:
        raise NotationError(str(exc)) from exc


def format_presentation(pres: GroupPresentation) -> str:
    parts = ["gens: " + " ".join(pres.generators)]
    for rel in pres.relators:
        body = " ".join(g if e == 1 else f"{g}^{e}" for g, e in rel.letters)
        parts.append("rel: " + body)
    return "; ".join(parts)
