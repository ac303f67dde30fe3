"""Tests for the tournament encoding, canonical forms, and free enumeration."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orient.tournaments import (
    CapExceeded,
    ForbiddenSet,
    Tournament,
    canonical_by_bits,
    canonical_form,
    enumerate_labeled,
    forbidden_witness,
    free_tournaments,
    induced,
    is_free,
    is_isomorphic,
    is_transitive,
    pair_count,
    pair_list,
    transitive_tournaments,
)

T4 = Tournament.from_arcs(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
TC4 = Tournament.from_arcs(4, [(1, 2), (2, 3), (3, 4), (1, 3), (4, 1), (4, 2)])
PARITY_SET = ForbiddenSet((T4, TC4))


def tournaments_of_order(n: int):
    """Strategy: a random labeled tournament of the given order."""
    return st.integers(0, (1 << pair_count(n)) - 1).map(lambda b: Tournament(n, b))


class TestEncoding:
    def test_pair_count(self):
        assert [pair_count(n) for n in range(1, 7)] == [0, 1, 3, 6, 10, 15]

    def test_pair_list_order_4(self):
        assert pair_list(4) == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

    def test_bits_to_arcs(self):
        # mask 0b101 at order 3: 1->2, 3->1, 2->3
        t = Tournament(3, 5)
        assert t.arcs() == ((1, 2), (2, 3), (3, 1))

    def test_from_arcs_round_trip(self):
        for bits in range(1 << pair_count(3)):
            t = Tournament(3, bits)
            assert Tournament.from_arcs(3, t.arcs()) == t

    def test_has_arc(self):
        t = Tournament(3, 5)
        assert t.has_arc(1, 2) and not t.has_arc(2, 1)
        assert t.has_arc(3, 1) and not t.has_arc(1, 3)

    def test_all_ones_is_index_order(self):
        t = Tournament(4, (1 << 6) - 1)
        assert t.arcs() == pair_list(4)

    def test_rejects_out_of_range_bits(self):
        with pytest.raises(ValueError):
            Tournament(3, 8)
        with pytest.raises(ValueError):
            Tournament(3, -1)

    def test_rejects_nonpositive_order(self):
        with pytest.raises(ValueError):
            Tournament(0, 0)

    def test_from_arcs_rejects_loop(self):
        with pytest.raises(ValueError):
            Tournament.from_arcs(2, [(1, 1), (1, 2)])

    def test_from_arcs_rejects_double_arc(self):
        with pytest.raises(ValueError):
            Tournament.from_arcs(2, [(1, 2), (2, 1)])

    def test_from_arcs_rejects_missing_pair(self):
        with pytest.raises(ValueError) as exc:
            Tournament.from_arcs(3, [(1, 2), (2, 3)])
        assert "(1, 3)" in str(exc.value)

    def test_from_arcs_rejects_stray_vertex(self):
        with pytest.raises(ValueError):
            Tournament.from_arcs(2, [(1, 3)])


class TestRelabel:
    def test_identity(self):
        t = Tournament(4, 37)
        assert t.relabel((1, 2, 3, 4)) == t

    def test_known_swap(self):
        # swapping the endpoints of the single arc flips its bit
        assert Tournament(2, 1).relabel((2, 1)) == Tournament(2, 0)

    def test_three_cycle_rotation_fixed_point(self):
        # 1->2->3->1 is invariant under the rotation (2, 3, 1)
        c3 = Tournament.from_arcs(3, [(1, 2), (2, 3), (3, 1)])
        assert c3.relabel((2, 3, 1)) == c3

    def test_arcs_commute_with_relabel(self):
        t = Tournament(4, 51)
        perm = (3, 1, 4, 2)
        relabeled = t.relabel(perm)
        expected = sorted(
            (perm[a - 1], perm[b - 1]) for a, b in t.arcs()
        )
        assert sorted(relabeled.arcs()) == expected

    @given(st.permutations(list(range(1, 5))), tournaments_of_order(4))
    def test_relabel_then_inverse_is_identity(self, perm, t):
        inverse = [0] * 4
        for i, p in enumerate(perm):
            inverse[p - 1] = i + 1
        assert t.relabel(tuple(perm)).relabel(tuple(inverse)) == t


class TestCanonicalForm:
    def test_transitive_canonical_is_zero(self):
        rep, _ = canonical_form(Tournament(4, (1 << 6) - 1))
        assert rep.bits == 0

    def test_canonical_is_orbit_minimum(self):
        t = Tournament(4, 51)
        rep, _ = canonical_form(t)
        orbit = {
            t.relabel(p).bits
            for p in itertools.permutations(range(1, 5))
        }
        assert rep.bits == min(orbit)

    def test_witness_maps_to_canonical(self):
        t = Tournament(5, 777)
        rep, wit = canonical_form(t)
        assert t.relabel(wit.permutation) == rep

    @given(tournaments_of_order(4), st.permutations(list(range(1, 5))))
    @settings(max_examples=200)
    def test_relabel_invariance(self, t, perm):
        assert canonical_form(t)[0] == canonical_form(t.relabel(tuple(perm)))[0]

    def test_isomorphism_via_canonical(self):
        # the two labeled 3-cycles are one class; a 3-cycle is not transitive
        assert is_isomorphic(Tournament(3, 2), Tournament(3, 5))
        assert not is_isomorphic(Tournament(3, 2), Tournament(3, 7))

    def test_isomorphism_mixed_orders_is_false(self):
        assert not is_isomorphic(Tournament(3, 0), Tournament(4, 0))

    def test_class_counts_small_orders(self):
        # 1, 1, 2, 4 classes at orders 1..4
        for n, expected in [(1, 1), (2, 1), (3, 2), (4, 4)]:
            reps = {canonical_form(t)[0].bits for t in enumerate_labeled(n)}
            assert len(reps) == expected

    def test_order_4_class_representatives(self):
        reps = sorted({canonical_form(t)[0].bits for t in enumerate_labeled(4)})
        assert reps == [0, 2, 8, 9]

    def test_canonical_by_bits_matches_per_mask_canonical(self):
        table = canonical_by_bits(4)
        for t in enumerate_labeled(4):
            assert table[t.bits] == canonical_form(t)[0].bits


class TestInduced:
    def test_full_vertex_set_is_identity(self):
        t = Tournament(4, 29)
        assert induced(t, (1, 2, 3, 4)) == t

    def test_sub_tournament_of_transitive(self):
        t = Tournament(5, (1 << 10) - 1)
        assert induced(t, (2, 4, 5)).bits == (1 << 3) - 1

    def test_selection_order_flips_arcs(self):
        # picking vertices against the index order reverses the arc
        t = Tournament(3, 7)
        assert induced(t, (3, 1)).bits == 0
        assert induced(t, (1, 3)).bits == 1

    @given(tournaments_of_order(5))
    @settings(max_examples=100)
    def test_induced_transitivity_is_hereditary(self, t):
        if is_transitive(t):
            for vs in itertools.combinations(range(1, 6), 3):
                assert is_transitive(induced(t, vs))


class TestForbiddenSet:
    def test_deduplicates_isomorphic_members(self):
        # bits 53 and 46 are relabelings of the same strongly connected pattern
        f = ForbiddenSet((T4, Tournament(4, 53), Tournament(4, 46)))
        assert len(f.members) == 2

    def test_bound(self):
        assert ForbiddenSet(()).bound == 2
        assert PARITY_SET.bound == 4
        c3 = Tournament.from_arcs(3, [(1, 2), (2, 3), (3, 1)])
        assert ForbiddenSet((c3, T4)).bound == 4

    def test_witness_on_transitive_five(self):
        t5 = Tournament(5, (1 << 10) - 1)
        hit = forbidden_witness(t5, PARITY_SET)
        assert hit is not None
        member, vertices = hit
        assert member == 0  # the transitive member, on the first 4-subset
        assert vertices == (1, 2, 3, 4)

    def test_free_when_too_small(self):
        assert is_free(Tournament(3, 2), PARITY_SET)
        assert forbidden_witness(Tournament(3, 2), PARITY_SET) is None

    def test_witness_vertices_actually_induce_a_member(self):
        t5 = Tournament(5, 700)
        hit = forbidden_witness(t5, PARITY_SET)
        if hit is not None:
            member, vertices = hit
            sub = induced(t5, vertices)
            assert is_isomorphic(sub, PARITY_SET.members[member])

    def test_one_member_forbids_both_labelings(self):
        # a single-arc member rules out every 2-tournament
        f = ForbiddenSet((Tournament(2, 1),))
        assert not is_free(Tournament(2, 0), f)
        assert not is_free(Tournament(2, 1), f)


class TestEnumeration:
    def test_enumerate_labeled_count_and_order(self):
        ts = list(enumerate_labeled(3))
        assert [t.bits for t in ts] == list(range(8))

    def test_free_tournaments_empty_forbidden(self):
        assert len(free_tournaments(3, ForbiddenSet(()))) == 8

    def test_free_count_order_4(self):
        free = free_tournaments(4, PARITY_SET)
        assert len(free) == 16
        assert sorted(t.bits for t in free) == [
            2, 5, 9, 14, 16, 23, 27, 28, 35, 36, 40, 47, 49, 54, 58, 61,
        ]

    def test_free_classes_order_4(self):
        free = free_tournaments(4, PARITY_SET)
        assert sorted({canonical_form(t)[0].bits for t in free}) == [2, 9]

    def test_is_transitive(self):
        assert is_transitive(Tournament(3, 7))
        assert not is_transitive(Tournament(3, 2))
        assert not is_transitive(Tournament(3, 5))
        assert is_transitive(Tournament(2, 0))
        assert is_transitive(Tournament(1, 0))

    def test_transitive_tournaments_order_3(self):
        assert [t.bits for t in transitive_tournaments(3)] == [0, 1, 3, 4, 6, 7]

    def test_transitive_count_is_factorial_over_classes(self):
        # n! labelings, one per permutation, all distinct up to order 5
        assert len(transitive_tournaments(4)) == 24

    @given(tournaments_of_order(4))
    @settings(max_examples=100)
    def test_transitive_iff_canonical_zero(self, t):
        assert is_transitive(t) == (canonical_form(t)[0].bits == 0)

    def test_cap_blocks_wide_enumerations(self):
        with pytest.raises(CapExceeded):
            free_tournaments(7, ForbiddenSet(()))

    def test_cap_env_override(self, monkeypatch):
        monkeypatch.setenv("ORIENT_CAP_BITS", "9")
        with pytest.raises(CapExceeded):
            free_tournaments(5, ForbiddenSet(()))
        monkeypatch.setenv("ORIENT_CAP_BITS", "10")
        assert len(free_tournaments(5, ForbiddenSet(()))) == 1024

    def test_explicit_cap_argument(self):
        with pytest.raises(CapExceeded):
            free_tournaments(5, ForbiddenSet(()), cap_bits=9)
