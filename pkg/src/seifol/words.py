"""Words in a free group, stored as syllables (generator, nonzero exponent).

Construction performs one merging pass: maximal runs of a single generator
are summed and runs cancelling to zero are dropped.  It does not cascade,
so cancellations exposed by a dropped run are left for :func:`free_reduce`.
"""

from __future__ import annotations

from itertools import groupby

from .errors import ZeroExponent


class Word:
    """Immutable word over named generators."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        merged = []
        for gen, run in groupby(letters, key=lambda letter: letter[0]):
            total = 0
            for _, e in run:
                if not isinstance(e, int) or isinstance(e, bool) or e == 0:
                    raise ZeroExponent(f"letter ({gen!r}, {e!r}) has no valid exponent")
                total += e
            if total:
                merged.append((gen, total))
        object.__setattr__(self, "letters", tuple(merged))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        """Total letter count, exponents counted with multiplicity."""
        return sum(abs(e) for _, e in self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if not isinstance(n, int):
            raise TypeError("word powers must be integers")
        if n == 0:
            return Word()
        base = self if n > 0 else self.inverse()
        return Word(base.letters * abs(n))

    def generators(self) -> set:
        return {g for g, _ in self.letters}

    def exponent_sum(self, gen) -> int:
        return sum(e for g, e in self.letters if g == gen)

    def __repr__(self):
        return f"Word({self!s})"

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(g if e == 1 else f"{g}^{e}" for g, e in self.letters)


EMPTY_WORD = Word()


def word_power_product(factors) -> Word:
    """Expand a product of powers of subwords into a single word.

    ``factors`` is a sequence of (subword, power) pairs, where a subword is
    a Word or an iterable of letters.  Zero powers are rejected: an empty
    factor in a template is almost always a transcription mistake.
    """
    out = Word()
    for sub, power in factors:
        if power == 0:
            raise ZeroExponent("zero power in word template")
        w = sub if isinstance(sub, Word) else Word(tuple(sub))
        out = out * w**power
    return out


def free_reduce(w: Word) -> Word:
    """Freely reduced normal form: cascaded cancellation of adjacent
    inverse syllables.  Idempotent, and independent of reduction order."""
    stack: list[tuple] = []
    for g, e in w.letters:
        if stack and stack[-1][0] == g:
            total = stack[-1][1] + e
            stack.pop()
            if total:
                stack.append((g, total))
        else:
            stack.append((g, e))
    return Word(tuple(stack))
