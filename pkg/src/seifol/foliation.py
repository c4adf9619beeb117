"""Existence of horizontal foliations and the excellence verdict.

A normalized Seifert manifold over the two-sphere with ``n >= 3``
exceptional fibers carries a horizontal foliation exactly when one of
three conditions holds:

1. ``-(n - 2) <= b <= -2``;
2. ``b = -1`` and there are integers ``0 < a < m`` such that, after
   permuting the fibers, ``beta_1/alpha_1 < a/m``,
   ``beta_2/alpha_2 < (m - a)/m`` and ``beta_j/alpha_j < 1/m`` for the
   rest;
3. ``b = -(n - 1)`` and condition 2 holds for the orientation reversal.

Coprimality of ``a`` and ``m`` is deliberately not tested; it is redundant.

The witness search in condition 2 is exhaustive for ``m`` up to the largest
fiber multiplicity: any fiber in the last role forces
``m < alpha/beta <= max(alpha)``, and with ``n >= 3`` at least one fiber
plays that role, so no witness exists beyond the bound.  The first witness
in the order (smallest ``m``, then ``a``, then the ordered index pair) is
returned, so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .seifert import SeifertInvariants, euler_number, is_lens_type, normalize, reverse_orientation

HORIZONTAL = "horizontal"
NO_HORIZONTAL = "no-horizontal"
INAPPLICABLE = "inapplicable"

REASON_POSITIVE_B1 = "positive-b1"
REASON_HORIZONTAL = "horizontal-foliation"
REASON_LENS = "lens-type"
REASON_NO_HORIZONTAL = "no-horizontal-foliation"
DECIDER_REASONS = (
    REASON_POSITIVE_B1,
    REASON_HORIZONTAL,
    REASON_LENS,
    REASON_NO_HORIZONTAL,
)


@dataclass(frozen=True)
class Witness:
    """Condition-2 data: ``0 < a < m`` and the ordered pair of fiber indices
    playing the first two roles.  ``on_reverse`` marks a witness certified on
    the orientation reversal (condition 3)."""

    m: int
    a: int
    roles: tuple[int, int]
    on_reverse: bool = False


@dataclass(frozen=True)
class FoliationDecision:
    kind: str
    condition: int | None = None
    witness: Witness | None = None
    reason: str | None = None

    @property
    def horizontal(self) -> bool:
        return self.kind == HORIZONTAL


@dataclass(frozen=True)
class ExcellenceVerdict:
    excellent: bool
    reason: str

    @property
    def kind(self) -> str:
        return "Excellent" if self.excellent else "TotalLSpace"


def witness_search(
    fibers: tuple[tuple[int, int], ...], m_max: int | None = None
) -> tuple[int, int, tuple[int, int]] | None:
    """First (m, a, (i, j)) satisfying the condition-2 inequalities.

    ``m`` runs from 2 to ``m_max`` (default: the largest multiplicity).
    Pure integer arithmetic; exactness is preserved by cross-multiplying.
    """
    n = len(fibers)
    if m_max is None:
        m_max = max(a for a, _ in fibers)
    for m in range(2, m_max + 1):
        # role-3 test beta/alpha < 1/m, precomputed per fiber
        hard = [idx for idx, (al, be) in enumerate(fibers) if be * m >= al]
        if len(hard) > 2:
            continue
        hard_set = set(hard)
        for a in range(1, m):
            for i in range(n):
                ai, bi = fibers[i]
                if bi * m >= a * ai:
                    continue
                for j in range(n):
                    if j == i:
                        continue
                    aj, bj = fibers[j]
                    if bj * m >= (m - a) * aj:
                        continue
                    if hard_set <= {i, j}:
                        return m, a, (i, j)
    return None


def verify_witness(si: SeifertInvariants, m: int, a: int, roles: tuple[int, int]) -> bool:
    """Re-check the three strict inequalities for an explicit witness."""
    if not (0 < a < m):
        return False
    i, j = roles
    fibers = si.fibers
    if i == j or not (0 <= i < len(fibers) and 0 <= j < len(fibers)):
        return False
    ai, bi = fibers[i]
    aj, bj = fibers[j]
    if bi * m >= a * ai or bj * m >= (m - a) * aj:
        return False
    return all(be * m < al for idx, (al, be) in enumerate(fibers) if idx not in (i, j))


def has_witness(si: SeifertInvariants, m: int, a: int) -> bool:
    """True when some role assignment validates the pair ``(m, a)``."""
    n = len(si.fibers)
    return any(
        verify_witness(si, m, a, (i, j)) for i in range(n) for j in range(n) if i != j
    )


def decide_horizontal(si: SeifertInvariants) -> FoliationDecision:
    """Apply the three-condition criterion to a normalized Seifert form.

    Inapplicable for unnormalized input or fewer than three fibers; those
    cases belong to :func:`decide_excellence`.
    """
    if not si.normalized:
        return FoliationDecision(INAPPLICABLE, reason="not-normalized")
    n = len(si.fibers)
    if n < 3:
        return FoliationDecision(INAPPLICABLE, reason="fewer-than-3-fibers")
    b = si.b
    if -(n - 2) <= b <= -2:
        return FoliationDecision(HORIZONTAL, condition=1)
    if b == -1:
        found = witness_search(si.fibers)
        if found:
            m, a, roles = found
            return FoliationDecision(HORIZONTAL, condition=2, witness=Witness(m, a, roles))
        return FoliationDecision(NO_HORIZONTAL)
    if b == -(n - 1):
        rev = reverse_orientation(si)
        found = witness_search(rev.fibers)
        if found:
            m, a, roles = found
            return FoliationDecision(
                HORIZONTAL, condition=3, witness=Witness(m, a, roles, on_reverse=True)
            )
        return FoliationDecision(NO_HORIZONTAL)
    return FoliationDecision(NO_HORIZONTAL)


def decide_excellence(si: SeifertInvariants) -> ExcellenceVerdict:
    """Excellent versus total-L-space status of a Seifert manifold.

    Zero Euler number means positive first Betti number, hence excellent.
    A lens-type manifold (at most two fibers) has finite cyclic fundamental
    group, never left-orderable.  Otherwise the horizontal-foliation
    criterion decides.
    """
    nsi = normalize(si)
    if euler_number(nsi) == 0:
        return ExcellenceVerdict(True, REASON_POSITIVE_B1)
    if is_lens_type(nsi):
        return ExcellenceVerdict(False, REASON_LENS)
    decision = decide_horizontal(nsi)
    if decision.horizontal:
        return ExcellenceVerdict(True, REASON_HORIZONTAL)
    return ExcellenceVerdict(False, REASON_NO_HORIZONTAL)
