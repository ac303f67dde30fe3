"""Ternary votes on tournaments and closure of sets under them.

Both votes act pairwise on arc directions.  The majority vote keeps, per
pair, the direction two of the three inputs agree on; the minority vote
keeps the majority direction only when all three agree and otherwise flips
to the odd one out -- on bits that is plain xor.  Both are totally
symmetric and collapse on repeated arguments (minority(x, x, y) = y,
majority(x, x, y) = x), so closure of a set only ever hinges on unordered
triples of distinct elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import _kernels
from .tournaments import (
    ForbiddenSet,
    Tournament,
    _free_bits,
    _perm_tables,
    _relabel_bits,
    _cap,
    pair_count,
)

__all__ = [
    "Counterexample",
    "FreeSetsVerdict",
    "PreservationVerdict",
    "Vote",
    "free_sets_preserved",
    "majority_closure_consistent",
    "relation_preserved",
    "set_preserved",
    "vote",
]


class Vote(Enum):
    MINORITY = "minority"
    MAJORITY = "majority"


def vote(op: Vote, a: Tournament, b: Tournament, c: Tournament) -> Tournament:
    """Apply the vote pair by pair; the result is again a tournament."""
    if not a.order == b.order == c.order:
        raise ValueError("vote needs three tournaments of the same order")
    if op is Vote.MINORITY:
        bits = a.bits ^ b.bits ^ c.bits
    else:
        bits = (a.bits & b.bits) | ((a.bits ^ b.bits) & c.bits)
    return Tournament(a.order, bits)


@dataclass(frozen=True)
class Counterexample:
    """A distinct triple whose vote leaves the set, and where it landed."""

    triple: tuple[Tournament, Tournament, Tournament]
    result: Tournament


@dataclass(frozen=True)
class PreservationVerdict:
    preserved: bool
    counterexample: Counterexample | None = None


def set_preserved(tournaments, op: Vote) -> PreservationVerdict:
    """Is the set closed under the vote?

    Only unordered triples of distinct elements are scanned (the identities
    above cover the rest), in ascending bitstring order, so a failing verdict
    always carries the least counterexample triple.
    """
    ts = sorted(set(tournaments), key=lambda t: t.bits)
    orders = {t.order for t in ts}
    if len(orders) > 1:
        raise ValueError(f"mixed orders in set: {sorted(orders)}")
    if len(ts) < 3:
        return PreservationVerdict(True)
    order = ts[0].order
    hit = _kernels.scan_triples(
        [t.bits for t in ts],
        0 if op is Vote.MINORITY else 1,
        pair_count(order),
    )
    if hit is None:
        return PreservationVerdict(True)
    i, j, k, r = hit
    return PreservationVerdict(
        False, Counterexample((ts[i], ts[j], ts[k]), Tournament(order, r))
    )


def relation_preserved(relation, op: Vote) -> PreservationVerdict:
    """Closure check for a constraint relation's allowed-tournament set."""
    return set_preserved(relation.tournaments, op)


@dataclass(frozen=True)
class FreeSetsVerdict:
    """Per-order closure verdicts for the full forbidden-pattern-free sets."""

    by_order: dict[int, PreservationVerdict]

    @property
    def preserved(self) -> bool:
        return all(v.preserved for v in self.by_order.values())


def free_sets_preserved(
    forbidden: ForbiddenSet, op: Vote, cap_bits: int | None = None
) -> FreeSetsVerdict:
    """Closure of the free set at every order from 2 up to the family bound."""
    out = {}
    for n in range(2, forbidden.bound + 1):
        masks = _free_bits(n, forbidden, _cap(cap_bits))
        hit = _kernels.scan_triples(
            list(masks), 0 if op is Vote.MINORITY else 1, pair_count(n)
        )
        if hit is None:
            out[n] = PreservationVerdict(True)
        else:
            i, j, k, r = hit
            out[n] = PreservationVerdict(
                False,
                Counterexample(
                    (
                        Tournament(n, masks[i]),
                        Tournament(n, masks[j]),
                        Tournament(n, masks[k]),
                    ),
                    Tournament(n, r),
                ),
            )
    return FreeSetsVerdict(out)


def majority_closure_consistent(
    forbidden: ForbiddenSet, cap_bits: int | None = None
) -> bool:
    """Sanity probe behind the majority case: no closure stalls mid-way.

    For each order n up to the family bound and each isomorphism class of
    free n-tournaments, grow the class's closure under relabeling plus
    majority votes of distinct triples, with no freeness filtering.  The
    probe passes iff every closure either escapes the free set, reaches all
    2^C(n,2) labeled tournaments, or never has three elements for the vote
    to act on.  A closure that stalls strictly inside a bigger free set
    would contradict the dichotomy the majority case rests on.

    Cost is cubic in the closure size per round; fine for bounds up to 4,
    increasingly slow past that.
    """
    for n in range(2, forbidden.bound + 1):
        npairs = pair_count(n)
        free = set(_free_bits(n, forbidden, _cap(cap_bits)))
        full = 1 << npairs
        _, tables = _perm_tables(n)
        classes: dict[int, frozenset[int]] = {}
        for b in free:
            cls = frozenset(
                _relabel_bits(b, npairs, dst, flip) for dst, flip in tables
            )
            classes.setdefault(min(cls), cls)
        for seed in sorted(classes):
            cur = set(classes[seed])
            while True:
                if not cur <= free:
                    break  # escaped: consistent
                if len(cur) == full:
                    break  # everything: consistent
                if len(cur) < 3:
                    break  # vote cannot act: consistent
                new: set[int] = set()
                lst = sorted(cur)
                m = len(lst)
                for i in range(m):
                    a = lst[i]
                    for j in range(i + 1, m):
                        ab = a & lst[j]
                        xab = a ^ lst[j]
                        for k in range(j + 1, m):
                            r = ab | (xab & lst[k])
                            if r not in cur:
                                new.add(r)
                if not new:
                    return False  # stalled strictly inside the free set
                for r in list(new):
                    for dst, flip in tables:
                        new.add(_relabel_bits(r, npairs, dst, flip))
                cur |= new
    return True
