from itertools import product

import pytest

from seifol.errors import IndivisibleSurgery, TooManyGenerators
from seifol.presentations import (
    GroupPresentation,
    coarse_obstruction,
    format_presentation,
    parse_presentation,
    present_pretzel_cover,
    present_two_bridge_cover,
    pretzel_exterior_relators,
    pretzel_surgery_description,
    sign_profile,
)
from seifol.words import Word, free_reduce

# expected sign tables for the threefold pretzel cover; columns are
# x0 x1 x2 y0 y1 y2 and "o" marks an absent generator
TABLE_FIRST = {
    0: "+-o-+o",
    1: "o+-o-+",
    2: "-o++o-",
}
TABLE_SECOND = {
    0: "+-o+-o",
    1: "o+-o+-",
    2: "-o+-o+",
}


def profile_string(pres, rel):
    symbols = {"+": "+", "-": "-", "absent": "o", "mixed": "!"}
    prof = sign_profile(rel, pres.generators)
    return "".join(symbols[prof[g]] for g in pres.generators)


def orbit_of_plus_plus_minus_minus():
    """Rotation-and-global-negation orbit of (+,+,-,-)."""
    base = ("+", "+", "-", "-")
    orbit = set()
    for r in range(4):
        rotated = base[r:] + base[:r]
        orbit.add(rotated)
        orbit.add(tuple("-" if s == "+" else "+" for s in rotated))
    return orbit


class TestTwoBridgePresentation:
    def test_relators_at_base_parameters(self):
        pres = present_two_bridge_cover(1, 1, 4, names="abcd")
        assert [str(r) for r in pres.relators] == [
            "a^-1 b c^-1",
            "b^-1 c d^-1",
            "c^-1 d a^-1",
            "d^-1 a b^-1",
            "a b c d",
        ]

    def test_structure_counts(self):
        pres = present_two_bridge_cover(1, 1, 2)
        assert len(pres.generators) == 2
        assert len(pres.relators) == 3

    def test_sign_profile_of_first_relator(self):
        pres = present_two_bridge_cover(2, 3, 4, names="abcd")
        assert profile_string(pres, pres.relators[0]) == "-+-o"

    def test_profiles_parameter_independent(self):
        reference = None
        for k, l in product(range(1, 4), repeat=2):
            pres = present_two_bridge_cover(k, l, 4)
            profiles = tuple(profile_string(pres, r) for r in pres.relators)
            if reference is None:
                reference = profiles
            assert profiles == reference

    def test_abelianization_finite(self):
        # rational homology spheres for all small parameters
        for k, l in product(range(1, 4), repeat=2):
            order = present_two_bridge_cover(k, l, 4).abelianization_order()
            assert order is not None and order >= 1

    def test_abelianization_matches_branched_cover_homology(self):
        # k = l = 1 is the fourfold cover of the (2,3) torus knot: |H1| = 3
        assert present_two_bridge_cover(1, 1, 4).abelianization_order() == 3


class TestPretzelPresentation:
    def test_sign_tables_cell_for_cell(self):
        for k, l, m in product(range(1, 4), repeat=3):
            pres = present_pretzel_cover(k, l, m)
            for i in range(3):
                assert profile_string(pres, pres.relators[i]) == TABLE_FIRST[i], (k, l, m, i)
                assert profile_string(pres, pres.relators[3 + i]) == TABLE_SECOND[i], (k, l, m, i)

    def test_branching_relators_all_positive(self):
        pres = present_pretzel_cover(1, 1, 1)
        assert profile_string(pres, pres.relators[6]) == "+++ooo"
        assert profile_string(pres, pres.relators[7]) == "ooo+++"

    def test_spec_like_examples(self):
        pres = present_pretzel_cover(1, 1, 1)
        prof = sign_profile(pres.relators[0], pres.generators)
        assert prof == {"x0": "+", "x1": "-", "x2": "absent", "y0": "-", "y1": "+", "y2": "absent"}
        prof = sign_profile(pres.relators[4], pres.generators)
        assert prof["x1"] == "+" and prof["x2"] == "-" and prof["y1"] == "+" and prof["y2"] == "-"


class TestExteriorRelators:
    def test_product_freely_trivial(self):
        for k, l, m in product(range(1, 4), repeat=3):
            r1, r2, r3 = pretzel_exterior_relators(k, l, m)
            assert not free_reduce(r1 * r2 * r3), (k, l, m)

    def test_individual_relators_nontrivial(self):
        r1, r2, r3 = pretzel_exterior_relators(1, 1, 1)
        assert free_reduce(r1) and free_reduce(r2) and free_reduce(r3)


class TestCoarseObstruction:
    def test_single_generator_torsion(self):
        report = coarse_obstruction(GroupPresentation(("a",), (Word([("a", 1)]),)))
        assert report.obstructed and report.assignments_checked == 2

    def test_pretzel_covers_obstructed(self):
        for k, l, m in product(range(1, 4), repeat=3):
            report = coarse_obstruction(present_pretzel_cover(k, l, m))
            assert report.obstructed, (k, l, m)
            assert report.assignments_checked == 64

    def test_two_bridge_survivors_form_the_orbit(self):
        expected = orbit_of_plus_plus_minus_minus()
        for k, l in product(range(1, 4), repeat=2):
            report = coarse_obstruction(present_two_bridge_cover(k, l, 4))
            assert not report.obstructed
            assert set(report.survivors) == expected, (k, l)

    def test_invariance_under_renaming_and_relator_moves(self):
        import random

        rng = random.Random(71)
        for builder in (
            lambda: present_two_bridge_cover(2, 2, 4),
            lambda: present_pretzel_cover(1, 2, 3),
        ):
            pres = builder()
            base = coarse_obstruction(pres)

            # renaming, transported to the survivor tuples
            renamed = GroupPresentation(
                tuple(f"g{i}" for i in range(len(pres.generators))),
                tuple(
                    Word(
                        [
                            (f"g{pres.generators.index(g)}", e)
                            for g, e in rel.letters
                        ]
                    )
                    for rel in pres.relators
                ),
            )
            assert coarse_obstruction(renamed).survivors == base.survivors

            # cyclic permutation, inversion, and exponent-magnitude changes
            mutated_relators = []
            for rel in pres.relators:
                ls = list(rel.letters)
                cut = rng.randrange(len(ls))
                ls = ls[cut:] + ls[:cut]
                w = Word(ls)
                if rng.random() < 0.5:
                    w = w.inverse()
                w = Word([(g, (1 if e > 0 else -1) * rng.randint(1, 5)) for g, e in w.letters])
                mutated_relators.append(w)
            mutated = GroupPresentation(pres.generators, tuple(mutated_relators))
            assert coarse_obstruction(mutated).survivors == base.survivors

    def test_generator_cap(self):
        gens = tuple(f"t{i}" for i in range(25))
        with pytest.raises(TooManyGenerators):
            coarse_obstruction(GroupPresentation(gens, ()))

    def test_mixed_sign_generator_cannot_violate_alone(self):
        # x occurs with both exponent signs, so no assignment makes the
        # relator a same-sign product
        pres = GroupPresentation(("x", "y"), (Word([("x", 1), ("y", 1), ("x", -1)]),))
        report = coarse_obstruction(pres)
        assert not report.obstructed and len(report.survivors) == 4


class TestPretzelSurgery:
    def test_examples(self):
        d = pretzel_surgery_description(3, 1, 1, "+")
        assert d.strands == (3, 3, 3) and str(d.coefficient) == "1" and d.orientation_reversed
        d = pretzel_surgery_description(3, 4, 1, "-")
        assert d.strands == (3, 3, 3) and str(d.coefficient) == "-1/3"
        assert not d.orientation_reversed
        d = pretzel_surgery_description(5, 2, 2, "+")
        assert d.strands == (5, 5, 5, 5, 5) and str(d.coefficient) == "1"

    def test_indivisible(self):
        with pytest.raises(IndivisibleSurgery):
            pretzel_surgery_description(3, 2, 1, "+")


def test_presentation_text_round_trip():
    pres = present_two_bridge_cover(2, 1, 3)
    text = format_presentation(pres)
    back = parse_presentation(text)
    assert back == pres
    assert parse_presentation("gens: a b; rel: a^-1 b^2").relators[0].letters == (
        ("a", -1),
        ("b", 2),
    )
