"""Registered maps: worked examples, bijectivity, involutions, orbit orders."""

from itertools import permutations

import pytest

from permsieve.bijections import MAPS, get_map, map_keys, position_swap_involution
from permsieve.bijections.basic import (
    complement,
    conjugate_by_long_cycle,
    lehmer_code_rotation,
    reverse,
    rotation,
    toric_promotion,
)
from permsieve.bijections.involutions import (
    alexandersson_kebede,
    psi_32_1,
    psi_3star,
    psi_block,
)
from permsieve.permutations import identity, parse_permutation
from permsieve.statistics import get_statistic
from permsieve.statistics.extrema import r2l_min_values


def S(n):
    return permutations(range(1, n + 1))


class TestSymmetries:
    def test_reverse_complement(self):
        assert reverse((1, 2, 3, 4, 5)) == (5, 4, 3, 2, 1)
        assert complement((1, 2, 3, 4, 5)) == (5, 4, 3, 2, 1)

    def test_rotation(self):
        assert rotation((2, 4, 3, 1)) == (4, 3, 1, 2)

    def test_involutions_on_s6(self):
        for p in S(6):
            assert reverse(reverse(p)) == p
            assert complement(complement(p)) == p

    def test_conjugation(self):
        # c maps i to i+1 (mod n); conjugation relabels every cycle entry
        p = (2, 1, 3)
        assert conjugate_by_long_cycle(p) == (1, 3, 2)


class TestLehmerCodeRotation:
    def test_identity_maps_to_231(self):
        assert lehmer_code_rotation(identity(3)) == (2, 3, 1)

    def test_orbit_size_s3(self):
        p = identity(3)
        seen = set()
        for _ in range(6):
            seen.add(p)
            p = lehmer_code_rotation(p)
        assert p == identity(3) and len(seen) == 6

    def test_orbits_s4_all_size_12(self):
        from permsieve.orbits import decompose

        dec = decompose("lehmer_code_rotation", 4)
        assert dec.size_multiset() == {12: 2}


class TestToricPromotion:
    def test_orbit_sizes(self):
        from permsieve.orbits import decompose

        for n in range(4, 7):
            dec = decompose("toric_promotion", n)
            assert set(dec.size_multiset()) == {n - 1}
        assert decompose("toric_promotion", 4).size_multiset() == {3: 8}

    def test_guard_no_op(self):
        # on (1, 2) every value pair sits adjacent, so every stage is skipped
        assert toric_promotion((1, 2)) == (1, 2)
        assert toric_promotion((2, 1)) == (2, 1)


class TestAlexanderssonKebede:
    def test_worked_example(self):
        assert alexandersson_kebede(parse_permutation("2134756")) == parse_permutation("2134576")

    def test_fixed_points_are_decisive(self):
        for n in (4, 5, 6):
            count = 0
            for p in S(n):
                if alexandersson_kebede(p) == p:
                    count += 1
                    assert all(
                        {p[i - 1], p[i]} == {i, i + 1} for i in range(1, n, 2)
                    )
            assert count == 2 ** (n // 2)

    def test_preserves_r2l_minima_on_s7(self):
        for p in S(7):
            assert r2l_min_values(alexandersson_kebede(p)) == r2l_min_values(p)

    def test_involution_s7(self):
        for p in S(7):
            assert alexandersson_kebede(alexandersson_kebede(p)) == p


class TestPsi3Star:
    def test_worked_examples(self):
        assert psi_3star((2, 5, 1, 3, 4, 6)) == (2, 5, 1, 4, 3, 6)
        assert psi_3star((3, 5, 2, 4, 6, 1)) == (3, 5, 2, 1, 6, 4)

    def test_fixed_points_avoid_321_and_312(self):
        from permsieve.statistics.patterns import PatternSpec, pattern_count

        p321 = PatternSpec.from_string("321")
        p312 = PatternSpec.from_string("312")
        for n in range(4, 7):
            count = 0
            for p in S(n):
                if psi_3star(p) == p:
                    count += 1
                    assert pattern_count(p, p321) == 0 and pattern_count(p, p312) == 0
            assert count == 2 ** (n - 1)

    def test_changes_371_by_one(self):
        st = get_statistic("st371")
        for p in S(6):
            q = psi_3star(p)
            if q != p:
                assert abs(st(p) - st(q)) == 1


class TestPsi321:
    def test_worked_examples(self):
        assert psi_32_1((1, 4, 3, 2)) == (1, 4, 2, 3)
        assert psi_32_1((1, 3, 4, 2)) == (1, 3, 4, 2)

    def test_fixed_count_and_statistic_step(self):
        st = get_statistic("st360")
        for n in range(2, 8):
            fixed = 0
            for p in S(n):
                q = psi_32_1(p)
                if q == p:
                    fixed += 1
                else:
                    assert abs(st(p) - st(q)) == 1
            assert fixed == 2 ** (n - 1)


class TestPsiBlock:
    def test_worked_examples(self):
        assert psi_block(parse_permutation("21534687")) == parse_permutation("21634587")
        assert psi_block(parse_permutation("215346879")) == parse_permutation("215346978")
        assert psi_block(parse_permutation("132456789")) == parse_permutation("132456789")

    def test_fixed_counts(self):
        for n in range(2, 8):
            assert sum(1 for p in S(n) if psi_block(p) == p) == 2 ** (n // 2)


class TestPositionSwaps:
    def test_lookup_aliases(self):
        assert position_swap_involution("last-two").key == "swap_last_two"
        assert position_swap_involution("prefix-reverse-3").key == "prefix_reverse_3"
        with pytest.raises(KeyError):
            position_swap_involution("nope")

    def test_example(self):
        mp = position_swap_involution("last-two")
        assert mp(parse_permutation("21534687")) == parse_permutation("21534678")

    @pytest.mark.parametrize(
        "spec", ["last-two", "first-third", "prefix-reverse-3", "first-last",
                 "first-two", "second-third"]
    )
    def test_fixed_point_free_involutions_s6(self, spec):
        mp = position_swap_involution(spec)
        for p in S(6):
            q = mp(p)
            assert q != p
            assert mp(q) == p

    def test_parity_ledger_483(self):
        st = get_statistic("st483")
        mp = position_swap_involution("last-two")
        for p in S(6):
            assert (st(p) - st(mp(p))) % 2 == 1


class TestRegistry:
    def test_every_map_is_a_bijection_on_s5(self):
        full = set(S(5))
        for key in map_keys():
            mp = get_map(key)
            image = {mp(p) for p in full}
            assert image == full, key

    def test_declared_involutions_square_to_identity_s5(self):
        for key, desc in MAPS.items():
            if desc.involution:
                for p in S(5):
                    assert desc(desc(p)) == p, key

    def test_declared_orbit_sizes_s5(self):
        from permsieve.orbits import decompose

        for key, desc in MAPS.items():
            if desc.orbit_size is not None and desc.min_n <= 5:
                dec = decompose(key, 5)
                assert set(dec.size_multiset()) == {desc.orbit_size(5)}, key

    def test_n1_everything_is_identity(self):
        for key in map_keys():
            desc = get_map(key)
            if desc.min_n <= 1:
                assert desc((1,)) == (1,)
