"""Tractability classification for forbidden-tournament orientation problems.

The decision problem: orient every edge of a graph so that no clique induces
a forbidden tournament and every constrained vertex tuple induces one of its
relation's allowed tournaments.  Four conditions, each checkable within the
family bound, separate the polynomial cases from the NP-complete rest:

1. every transitive tournament is free and every relation allows every
   transitive tuple (any linear order works);
2. as in 1 below some order n, with nothing free at n+1 (cliques past the
   bound are impossible, small ones are decided by lookup);
3. the free sets and all relations are closed under the minority vote
   (solving reduces to parity equations);
4. same for the majority vote (solving reduces to 2-SAT).

If none holds, the problem is NP-complete.  All four are always computed --
the verdict carries complete, replayable evidence -- and the first that
holds is the primary case.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum

from .tournaments import (
    ForbiddenSet,
    Tournament,
    _cap,
    _free_bits,
    is_free,
    transitive_tournaments,
)
from .voting import (
    FreeSetsVerdict,
    PreservationVerdict,
    Vote,
    free_sets_preserved,
    relation_preserved,
)

__all__ = [
    "ARROW",
    "Case",
    "Classification",
    "ModelClass",
    "NoveltyReport",
    "Relation",
    "classify",
    "contains_all_transitive",
    "largest_free_transitive",
    "no_free_tournament_at",
    "novelty_report",
    "validate",
]

RESERVED_RELATION = "->"


@dataclass(frozen=True)
class Relation:
    """A named arity-k constraint: the tournaments a k-tuple may induce."""

    name: str
    arity: int
    tournaments: tuple[Tournament, ...]

    def __post_init__(self) -> None:
        if self.arity < 2:
            raise ValueError(f"relation {self.name!r}: arity must be >= 2")
        if not self.tournaments:
            raise ValueError(f"relation {self.name!r}: needs at least one tournament")
        seen = set()
        kept = []
        for t in self.tournaments:
            if t.order != self.arity:
                raise ValueError(
                    f"relation {self.name!r}: tournament of order {t.order}"
                    f" in an arity-{self.arity} relation"
                )
            if t.bits not in seen:
                seen.add(t.bits)
                kept.append(t)
        object.__setattr__(self, "tournaments", tuple(kept))


# Pre-oriented edges desugar onto this builtin relation; its name is
# reserved so user files cannot redefine what an oriented edge means.
ARROW = Relation(RESERVED_RELATION, 2, (Tournament(2, 1),))


def validate(forbidden: ForbiddenSet, relations=()) -> list[str]:
    """Input problems, empty when fine: bad names, non-free relation members."""
    problems = []
    names = set()
    for rel in relations:
        if rel == ARROW:
            continue  # the builtin is exempt (clique constraints cover it)
        if rel.name == RESERVED_RELATION:
            problems.append(
                f"relation name {RESERVED_RELATION!r} is reserved for pre-oriented edges"
            )
        if rel.name in names:
            problems.append(f"duplicate relation name {rel.name!r}")
        names.add(rel.name)
        for idx, t in enumerate(rel.tournaments):
            if not is_free(t, forbidden):
                problems.append(
                    f"relation {rel.name!r}: tournament #{idx} embeds a forbidden pattern"
                )
    return problems


def contains_all_transitive(relation: Relation) -> bool:
    """Does the relation allow every transitive tuple at its arity?"""
    have = {t.bits for t in relation.tournaments}
    return all(t.bits in have for t in transitive_tournaments(relation.arity))


def largest_free_transitive(forbidden: ForbiddenSet) -> int | None:
    """Largest order whose transitive tournament is free; None means all are.

    Only orders up to the family bound need checking: a forbidden member
    embeds in some transitive tournament iff the member is itself
    transitive, so freeness of the transitive tournament at the bound
    settles every larger order too.
    """
    for n in range(forbidden.bound, 0, -1):
        if is_free(Tournament.transitive(n), forbidden):
            return None if n == forbidden.bound else n
    raise AssertionError("unreachable: the one-vertex tournament is always free")


def no_free_tournament_at(
    forbidden: ForbiddenSet, n: int, cap_bits: int | None = None
) -> bool:
    """True iff every labeled tournament of order n embeds a forbidden pattern."""
    return not _free_bits(n, forbidden, _cap(cap_bits))


class Case(IntEnum):
    ALL_TRANSITIVE = 1
    CLIQUE_BOUND = 2
    MINORITY = 3
    MAJORITY = 4


@dataclass(frozen=True)
class Classification:
    """Verdict plus every ingredient needed to replay it."""

    polynomial: bool
    primary: Case | None  # None = NP-complete
    holds: tuple[Case, ...]
    largest_free_transitive: int | None  # None = unbounded
    no_free_above: bool | None  # at largest+1; None when unbounded
    reps_all_transitive: dict[str, bool]
    free_minority: FreeSetsVerdict
    free_majority: FreeSetsVerdict
    rel_minority: dict[str, PreservationVerdict]
    rel_majority: dict[str, PreservationVerdict]

    @property
    def np_complete(self) -> bool:
        return self.primary is None

    @property
    def case2_bound(self) -> int | None:
        if Case.CLIQUE_BOUND in self.holds:
            return self.largest_free_transitive
        return None

    def summary(self) -> str:
        if self.primary is None:
            return "NP-complete"
        return f"P, case {int(self.primary)}"


def classify(
    forbidden: ForbiddenSet, relations=(), cap_bits: int | None = None
) -> Classification:
    """Decide polynomial vs NP-complete for the orientation problem.

    All four case conditions are evaluated (no short-circuiting across
    cases, so the evidence is complete); scans within a single condition
    stop at the first counterexample.  Raises ValueError on invalid input
    (see validate).
    """
    problems = validate(forbidden, relations)
    if problems:
        raise ValueError("; ".join(problems))
    largest = largest_free_transitive(forbidden)
    rat = {rel.name: contains_all_transitive(rel) for rel in relations}
    all_rat = all(rat.values())
    no_above = (
        None
        if largest is None
        else no_free_tournament_at(forbidden, largest + 1, cap_bits)
    )
    fmin = free_sets_preserved(forbidden, Vote.MINORITY, cap_bits)
    fmaj = free_sets_preserved(forbidden, Vote.MAJORITY, cap_bits)
    rmin = {rel.name: relation_preserved(rel, Vote.MINORITY) for rel in relations}
    rmaj = {rel.name: relation_preserved(rel, Vote.MAJORITY) for rel in relations}
    truth = {
        Case.ALL_TRANSITIVE: largest is None and all_rat,
        Case.CLIQUE_BOUND: largest is not None and bool(no_above) and all_rat,
        Case.MINORITY: fmin.preserved and all(v.preserved for v in rmin.values()),
        Case.MAJORITY: fmaj.preserved and all(v.preserved for v in rmaj.values()),
    }
    holds = tuple(c for c in Case if truth[c])
    return Classification(
        polynomial=bool(holds),
        primary=holds[0] if holds else None,
        holds=holds,
        largest_free_transitive=largest,
        no_free_above=no_above,
        reps_all_transitive=rat,
        free_minority=fmin,
        free_majority=fmaj,
        rel_minority=rmin,
        rel_majority=rmaj,
    )


class ModelClass(Enum):
    """Previously understood families an input may collapse to."""

    ONE_ELEMENT = "one-element"
    TOURNAMENT_REDUCT = "tournament-reduct"
    CLIQUE_REDUCT = "clique-reduct"
    HENSON = "henson"
    NOVEL = "novel"


@dataclass(frozen=True)
class NoveltyReport:
    status: ModelClass
    henson_order: int | None = None


def novelty_report(
    forbidden: ForbiddenSet, relations=(), cap_bits: int | None = None
) -> NoveltyReport:
    """Which known family, if any, the input's structure collapses to.

    One-element: some 2-vertex tournament is forbidden, so no edge can be
    oriented at all.  Tournament reduct: nothing is forbidden.  Clique
    reduct: every transitive tournament is free and every relation allows
    all transitive tuples, with a nonempty forbidden family.  Henson-style:
    free tournaments exist exactly below some order n > 2 (reported), again
    with all-transitive relations.  Anything else is novel.
    """
    if any(m.order == 2 for m in forbidden.members):
        return NoveltyReport(ModelClass.ONE_ELEMENT)
    if not forbidden.members:
        return NoveltyReport(ModelClass.TOURNAMENT_REDUCT)
    largest = largest_free_transitive(forbidden)
    reps_ok = all(contains_all_transitive(r) for r in relations)
    if largest is None and reps_ok:
        return NoveltyReport(ModelClass.CLIQUE_REDUCT)
    if largest is not None and largest + 1 > 2 and reps_ok:
        if no_free_tournament_at(forbidden, largest + 1, cap_bits):
            return NoveltyReport(ModelClass.HENSON, henson_order=largest + 1)
    return NoveltyReport(ModelClass.NOVEL)
