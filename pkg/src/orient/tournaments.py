"""Tournaments as packed bitstrings: relabeling, canonical forms, freeness.

A tournament on vertices 1..n stores one bit per unordered pair.  Pairs are
ordered lexicographically -- (1,2), (1,3), ..., (n-1,n) -- and pair (1,2)
occupies the *most significant* bit, so comparing the packed integers is the
same as comparing the bitstrings left to right.  A set bit on pair (i, j)
with i < j means the arc runs i -> j.
"""

from __future__ import annotations

import itertools
import os
from array import array
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import _kernels

__all__ = [
    "CapExceeded",
    "DEFAULT_CAP_BITS",
    "ForbiddenSet",
    "IsoWitness",
    "Tournament",
    "canonical_by_bits",
    "canonical_form",
    "enumerate_labeled",
    "forbidden_witness",
    "free_tournaments",
    "induced",
    "is_free",
    "is_isomorphic",
    "is_transitive",
    "pair_count",
    "pair_list",
    "transitive_tournaments",
]

DEFAULT_CAP_BITS = 15


class CapExceeded(ValueError):
    """An enumeration would need more pair bits than the configured cap."""


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    """Unordered pairs (i, j), i < j, over 1..n in lexicographic order."""
    return tuple(
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
    )


@lru_cache(maxsize=None)
def _pair_pos(n: int) -> dict[tuple[int, int], int]:
    # pair -> bit position; the first pair (1,2) sits at the top bit.
    pairs = pair_list(n)
    top = len(pairs) - 1
    return {pq: top - k for k, pq in enumerate(pairs)}


@dataclass(frozen=True, order=True)
class Tournament:
    """An orientation of the complete graph on vertices 1..order."""

    order: int
    bits: int

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")
        if not 0 <= self.bits < 1 << pair_count(self.order):
            raise ValueError(
                f"bits {self.bits:#x} out of range for order {self.order}"
            )

    @classmethod
    def from_arcs(cls, order: int, arcs: Iterable[tuple[int, int]]) -> "Tournament":
        """Build from an arc list; every unordered pair must appear exactly once."""
        pos = _pair_pos(order)
        bits = 0
        seen: set[tuple[int, int]] = set()
        for a, b in arcs:
            if a == b:
                raise ValueError(f"loop arc {a}->{b}")
            if not (1 <= a <= order and 1 <= b <= order):
                raise ValueError(f"arc {a}->{b} outside 1..{order}")
            key = (a, b) if a < b else (b, a)
            if key in seen:
                raise ValueError(f"pair {key} oriented twice")
            seen.add(key)
            if a < b:
                bits |= 1 << pos[key]
        if len(seen) != pair_count(order):
            missing = [pq for pq in pair_list(order) if pq not in seen]
            raise ValueError(f"unoriented pairs: {missing}")
        return cls(order, bits)

    @classmethod
    def transitive(cls, order: int) -> "Tournament":
        """The transitive tournament along the index order (all bits set)."""
        return cls(order, (1 << pair_count(order)) - 1)

    def has_arc(self, a: int, b: int) -> bool:
        if a == b:
            raise ValueError("a vertex cannot beat itself")
        pos = _pair_pos(self.order)
        if a < b:
            return bool((self.bits >> pos[(a, b)]) & 1)
        return not (self.bits >> pos[(b, a)]) & 1

    def arcs(self) -> tuple[tuple[int, int], ...]:
        """All arcs, sorted."""
        out = []
        for k, (i, j) in enumerate(pair_list(self.order)):
            if (self.bits >> (pair_count(self.order) - 1 - k)) & 1:
                out.append((i, j))
            else:
                out.append((j, i))
        return tuple(sorted(out))

    def relabel(self, perm: Sequence[int]) -> "Tournament":
        """Rename vertex k to perm[k-1]; perm must be a permutation of 1..order."""
        n = self.order
        if sorted(perm) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {perm!r}")
        pos = _pair_pos(n)
        top = pair_count(n) - 1
        out = 0
        for k, (i, j) in enumerate(pair_list(n)):
            bit = (self.bits >> (top - k)) & 1
            si, sj = perm[i - 1], perm[j - 1]
            if si < sj:
                out |= bit << pos[(si, sj)]
            else:
                out |= (bit ^ 1) << pos[(sj, si)]
        return Tournament(n, out)

    def bitstring(self) -> str:
        return format(self.bits, f"0{pair_count(self.order)}b") if self.order > 1 else ""


@dataclass(frozen=True)
class IsoWitness:
    """Relabeling permutation: entry k is the new name of vertex k+1."""

    permutation: tuple[int, ...]


@lru_cache(maxsize=None)
def _perm_tables(n: int):
    """Per permutation of 1..n: destination bit position and flip per source pair.

    relabel(bits, sigma)'s bit for source pair index p lands at dst[p], xored
    with flip[p] (the pair's endpoints swap order under sigma exactly when
    flip[p] is 1).  Source position of pair p is simply pairs-1-p.
    """
    perms = tuple(itertools.permutations(range(1, n + 1)))
    pos = _pair_pos(n)
    tables = []
    for sigma in perms:
        dst, flip = [], []
        for i, j in pair_list(n):
            si, sj = sigma[i - 1], sigma[j - 1]
            if si < sj:
                dst.append(pos[(si, sj)])
                flip.append(0)
            else:
                dst.append(pos[(sj, si)])
                flip.append(1)
        tables.append((tuple(dst), tuple(flip)))
    return perms, tuple(tables)


@lru_cache(maxsize=None)
def _perm_arrays(n: int):
    # Flattened kernel-ready copies of _perm_tables.
    perms, tables = _perm_tables(n)
    dst = array("i")
    flip = array("B")
    for d, f in tables:
        dst.extend(d)
        flip.extend(f)
    return perms, dst, flip


def _relabel_bits(bits: int, npairs: int, dst: Sequence[int], flip: Sequence[int]) -> int:
    out = 0
    for p in range(npairs):
        out |= (((bits >> (npairs - 1 - p)) & 1) ^ flip[p]) << dst[p]
    return out


def canonical_form(t: Tournament) -> tuple[Tournament, IsoWitness]:
    """Lexicographically least relabeling of t, with a witnessing permutation.

    The witness is the first permutation (in itertools.permutations order)
    achieving the minimum; two tournaments are isomorphic iff their canonical
    forms have equal bits.
    """
    perms, dst, flip = _perm_arrays(t.order)
    best, idx = _kernels.canonical_min(
        t.bits, len(perms), pair_count(t.order), dst, flip
    )
    return Tournament(t.order, best), IsoWitness(perms[idx])


def is_isomorphic(a: Tournament, b: Tournament) -> bool:
    if a.order != b.order:
        return False
    return canonical_form(a)[0].bits == canonical_form(b)[0].bits


def induced(t: Tournament, vertices: Sequence[int]) -> Tournament:
    """Subtournament on the given vertices, renamed 1..k in the order given.

    The vertex list need not be sorted: induced(t, vs).has_arc(a, b) iff
    t.has_arc(vs[a-1], vs[b-1]).
    """
    k = len(vertices)
    if k < 1:
        raise ValueError("need at least one vertex")
    if len(set(vertices)) != k:
        raise ValueError(f"repeated vertex in {vertices!r}")
    for v in vertices:
        if not 1 <= v <= t.order:
            raise ValueError(f"vertex {v} outside 1..{t.order}")
    pos = _pair_pos(k)
    out = 0
    for a in range(1, k + 1):
        for b in range(a + 1, k + 1):
            if t.has_arc(vertices[a - 1], vertices[b - 1]):
                out |= 1 << pos[(a, b)]
    return Tournament(k, out)


@dataclass(frozen=True)
class ForbiddenSet:
    """A finite family of forbidden tournaments, deduplicated up to isomorphism.

    Members must have order >= 2; the `bound` is the largest member order
    (2 for the empty family), which caps every quantification the classifier
    performs.
    """

    members: tuple[Tournament, ...] = ()

    def __post_init__(self) -> None:
        kept: list[Tournament] = []
        seen: set[tuple[int, int]] = set()
        for m in self.members:
            if m.order < 2:
                raise ValueError("forbidden tournaments must have order >= 2")
            key = (m.order, canonical_form(m)[0].bits)
            if key not in seen:
                seen.add(key)
                kept.append(m)
        object.__setattr__(self, "members", tuple(kept))

    @property
    def bound(self) -> int:
        return max((m.order for m in self.members), default=2)


@lru_cache(maxsize=None)
def _member_bad_bits(forbidden: ForbiddenSet) -> dict[int, dict[int, int]]:
    # order -> {bits of every labeled copy of a member: member index}
    out: dict[int, dict[int, int]] = {}
    for idx, m in enumerate(forbidden.members):
        _, tables = _perm_tables(m.order)
        npairs = pair_count(m.order)
        d = out.setdefault(m.order, {})
        for dst, flip in tables:
            d.setdefault(_relabel_bits(m.bits, npairs, dst, flip), idx)
    return out


@lru_cache(maxsize=None)
def _subset_tables(n: int, k: int):
    # All k-subsets of 1..n with the source bit position of each induced pair.
    pos = _pair_pos(n)
    out = []
    for vs in itertools.combinations(range(1, n + 1), k):
        src = tuple(
            pos[(vs[a], vs[b])] for a in range(k) for b in range(a + 1, k)
        )
        out.append((vs, src))
    return tuple(out)


def forbidden_witness(
    t: Tournament, forbidden: ForbiddenSet
) -> tuple[int, tuple[int, ...]] | None:
    """First embedded forbidden pattern as (member index, vertex subset), or None.

    Scans member orders ascending, vertex subsets in lexicographic order.
    """
    bad = _member_bad_bits(forbidden)
    for k in sorted(bad):
        if k > t.order:
            continue
        table = bad[k]
        for vs, src in _subset_tables(t.order, k):
            sub = 0
            for s in src:
                sub = (sub << 1) | ((t.bits >> s) & 1)
            if sub in table:
                return table[sub], vs
    return None


def is_free(t: Tournament, forbidden: ForbiddenSet) -> bool:
    """True iff no vertex subset of t induces a forbidden tournament."""
    return forbidden_witness(t, forbidden) is None


def _cap(cap_bits: int | None) -> int:
    if cap_bits is not None:
        return cap_bits
    env = os.environ.get("ORIENT_CAP_BITS")
    return int(env) if env else DEFAULT_CAP_BITS


def _check_cap(n: int, cap_bits: int | None) -> None:
    need = pair_count(n)
    cap = _cap(cap_bits)
    if need > cap:
        raise CapExceeded(
            f"order {n} needs {need} pair bits, cap is {cap}"
            " (raise ORIENT_CAP_BITS to enumerate further)"
        )


def enumerate_labeled(n: int, cap_bits: int | None = None) -> Iterator[Tournament]:
    """All 2^C(n,2) labeled tournaments on 1..n, ascending by bits."""
    _check_cap(n, cap_bits)
    return (Tournament(n, b) for b in range(1 << pair_count(n)))


@lru_cache(maxsize=None)
def _free_bits(n: int, forbidden: ForbiddenSet, cap: int) -> tuple[int, ...]:
    return tuple(
        t.bits for t in enumerate_labeled(n, cap) if is_free(t, forbidden)
    )


def free_tournaments(
    n: int, forbidden: ForbiddenSet, cap_bits: int | None = None
) -> list[Tournament]:
    """The labeled forbidden-pattern-free tournaments on 1..n, ascending."""
    return [
        Tournament(n, b) for b in _free_bits(n, forbidden, _cap(cap_bits))
    ]


def is_transitive(t: Tournament) -> bool:
    """True iff no three vertices induce a directed cycle."""
    for _, src in _subset_tables(t.order, 3):
        sub = 0
        for s in src:
            sub = (sub << 1) | ((t.bits >> s) & 1)
        if sub in (0b010, 0b101):
            return False
    return True


def transitive_tournaments(n: int) -> list[Tournament]:
    """All n! transitive labeled tournaments (one per linear order), ascending."""
    _, tables = _perm_tables(n)
    npairs = pair_count(n)
    base = (1 << npairs) - 1
    bits = {_relabel_bits(base, npairs, dst, flip) for dst, flip in tables}
    return [Tournament(n, b) for b in sorted(bits)]


def canonical_by_bits(n: int, cap_bits: int | None = None) -> list[int]:
    """Canonical bits for every labeled tournament on 1..n, indexed by bits.

    Sweeps orbits in ascending order, so each class is labeled by its least
    member; costs one relabeling per (class, permutation) pair rather than
    one per (tournament, permutation) pair.
    """
    _check_cap(n, cap_bits)
    _, tables = _perm_tables(n)
    npairs = pair_count(n)
    canon = [-1] * (1 << npairs)
    for m in range(1 << npairs):
        if canon[m] >= 0:
            continue
        for dst, flip in tables:
            canon[_relabel_bits(m, npairs, dst, flip)] = m
    return canon
