"""Arcwise votes and preservation scans."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orient.classify import ARROW, Relation
from orient.tournaments import ForbiddenSet, Tournament, pair_count, transitive_tournaments
from orient.voting import (
    Vote,
    free_sets_preserved,
    majority_closure_consistent,
    relation_preserved,
    set_preserved,
    vote,
)

T4 = Tournament(4, 63)
TC4 = Tournament(4, 53)
PARITY_SET = ForbiddenSet((T4, TC4))

masks3 = st.integers(0, 7)
masks4 = st.integers(0, 63)


def t3(bits: int) -> Tournament:
    return Tournament(3, bits)


def test_vote_enum_has_exactly_two_operations():
    assert {v.name for v in Vote} == {"MINORITY", "MAJORITY"}


def test_single_edge_vote_tables():
    zero, one = Tournament(2, 0), Tournament(2, 1)
    assert vote(Vote.MINORITY, zero, zero, one) == one
    assert vote(Vote.MINORITY, one, one, one) == one
    assert vote(Vote.MAJORITY, zero, zero, one) == zero
    assert vote(Vote.MAJORITY, zero, one, one) == one


def test_vote_rejects_mixed_orders():
    with pytest.raises(ValueError):
        vote(Vote.MINORITY, Tournament(2, 0), t3(0), t3(1))


# The two drawn triples used throughout: the first votes to a transitive
# pattern equal to none of its inputs under minority and to the third input
# under majority; the second votes to the two different 3-cycles.
FIG_A = (
    Tournament.from_arcs(3, [(1, 2), (3, 1), (2, 3)]),  # bits 5
    Tournament.from_arcs(3, [(2, 1), (1, 3), (2, 3)]),  # bits 3
    Tournament.from_arcs(3, [(2, 1), (3, 1), (2, 3)]),  # bits 1
)
FIG_B = (
    Tournament.from_arcs(3, [(1, 2), (1, 3), (2, 3)]),  # bits 7
    Tournament.from_arcs(3, [(1, 2), (3, 1), (3, 2)]),  # bits 4
    Tournament.from_arcs(3, [(2, 1), (3, 1), (2, 3)]),  # bits 1
)


def test_first_drawn_triple():
    assert [t.bits for t in FIG_A] == [5, 3, 1]
    minority = vote(Vote.MINORITY, *FIG_A)
    assert minority.bits == 7
    assert minority.arcs() == ((1, 2), (1, 3), (2, 3))
    assert vote(Vote.MAJORITY, *FIG_A) == FIG_A[2]


def test_second_drawn_triple():
    assert [t.bits for t in FIG_B] == [7, 4, 1]
    assert vote(Vote.MINORITY, *FIG_B).bits == 2  # the 3-cycle 1->3->2->1
    assert vote(Vote.MAJORITY, *FIG_B).bits == 5  # the 3-cycle 1->2->3->1


@given(masks3, masks3, masks3)
def test_minority_is_arcwise_xor(a, b, c):
    assert vote(Vote.MINORITY, t3(a), t3(b), t3(c)).bits == a ^ b ^ c


@given(masks4, masks4)
def test_repeated_argument_identities(x, y):
    tx, ty = Tournament(4, x), Tournament(4, y)
    for args in [(tx, tx, ty), (tx, ty, tx), (ty, tx, tx)]:
        assert vote(Vote.MINORITY, *args) == ty
        assert vote(Vote.MAJORITY, *args) == tx


@given(masks4, masks4, masks4, st.permutations([0, 1, 2]))
@settings(max_examples=300)
def test_total_symmetry(a, b, c, perm):
    ts = (Tournament(4, a), Tournament(4, b), Tournament(4, c))
    shuffled = tuple(ts[i] for i in perm)
    for op in Vote:
        assert vote(op, *ts) == vote(op, *shuffled)


class TestSetPreserved:
    def test_full_order_3_set_is_closed_under_both(self):
        everything = [t3(b) for b in range(8)]
        assert set_preserved(everything, Vote.MINORITY).preserved
        assert set_preserved(everything, Vote.MAJORITY).preserved

    def test_small_sets_are_trivially_preserved(self):
        assert set_preserved([], Vote.MINORITY).preserved
        assert set_preserved([t3(2), t3(5)], Vote.MAJORITY).preserved

    def test_mixed_orders_rejected_even_when_small(self):
        with pytest.raises(ValueError):
            set_preserved([Tournament(2, 0), t3(0)], Vote.MINORITY)

    def test_gf2_span_is_minority_closed(self):
        span = {0}
        for basis in (9, 20, 35):
            span |= {s ^ basis for s in span}
        verdict = set_preserved([Tournament(4, b) for b in span], Vote.MINORITY)
        assert verdict.preserved and verdict.counterexample is None

    def test_counterexample_is_first_in_ascending_triple_order(self):
        triples = [t3(b) for b in (0, 1, 3, 4, 6, 7)]
        verdict = set_preserved(triples, Vote.MINORITY)
        assert not verdict.preserved
        ce = verdict.counterexample
        assert tuple(t.bits for t in ce.triple) == (0, 1, 3)
        assert ce.result.bits == 2

    def test_counterexample_result_really_escapes(self):
        triples = [t3(b) for b in (0, 1, 3, 4, 6, 7)]
        for op in Vote:
            ce = set_preserved(triples, op).counterexample
            assert ce.result.bits not in {0, 1, 3, 4, 6, 7}
            assert vote(op, *ce.triple) == ce.result


class TestRelationPreserved:
    def test_majority_triple_relation(self):
        rel = Relation("vote3", 3, FIG_A)
        minority = relation_preserved(rel, Vote.MINORITY)
        assert not minority.preserved
        assert tuple(t.bits for t in minority.counterexample.triple) == (1, 3, 5)
        assert minority.counterexample.result.bits == 7
        assert relation_preserved(rel, Vote.MAJORITY).preserved

    def test_three_transitive_triples_preserve_neither(self):
        rel = Relation("three", 3, FIG_B)
        for op, escape in [(Vote.MINORITY, 2), (Vote.MAJORITY, 5)]:
            verdict = relation_preserved(rel, op)
            assert not verdict.preserved
            assert verdict.counterexample.result.bits == escape

    def test_all_transitive_triples_relation(self):
        rel = Relation("tt3", 3, tuple(transitive_tournaments(3)))
        assert not relation_preserved(rel, Vote.MINORITY).preserved
        assert not relation_preserved(rel, Vote.MAJORITY).preserved
        # both scans stop at the bitstring-least failing triple
        mce = relation_preserved(rel, Vote.MINORITY).counterexample
        jce = relation_preserved(rel, Vote.MAJORITY).counterexample
        assert tuple(t.bits for t in mce.triple) == (0, 1, 3)
        assert tuple(t.bits for t in jce.triple) == (0, 3, 6)
        assert (mce.result.bits, jce.result.bits) == (2, 2)

    def test_builtin_arrow_relation_is_closed_under_both(self):
        assert relation_preserved(ARROW, Vote.MINORITY).preserved
        assert relation_preserved(ARROW, Vote.MAJORITY).preserved


class TestFreeSetsPreserved:
    def test_parity_set_minority_all_orders(self):
        verdict = free_sets_preserved(PARITY_SET, Vote.MINORITY)
        assert verdict.preserved
        assert sorted(verdict.by_order) == [2, 3, 4]
        assert all(v.preserved for v in verdict.by_order.values())

    def test_parity_set_majority_fails_at_the_top_order(self):
        verdict = free_sets_preserved(PARITY_SET, Vote.MAJORITY)
        assert not verdict.preserved
        assert verdict.by_order[2].preserved
        assert verdict.by_order[3].preserved
        ce = verdict.by_order[4].counterexample
        assert tuple(t.bits for t in ce.triple) == (2, 5, 9)
        assert ce.result.bits == 1

    def test_empty_forbidden_set(self):
        verdict = free_sets_preserved(ForbiddenSet(()), Vote.MAJORITY)
        assert verdict.preserved
        assert sorted(verdict.by_order) == [2]


class TestMajorityClosureProbe:
    def test_consistent_for_the_worked_examples(self):
        c3 = Tournament.from_arcs(3, [(1, 2), (2, 3), (3, 1)])
        assert majority_closure_consistent(PARITY_SET)
        assert majority_closure_consistent(ForbiddenSet((c3, T4)))
        assert majority_closure_consistent(ForbiddenSet(()))
