"""Concrete instances: normalization, compilation, solving, verification.

An instance is a graph whose edges want orientations.  Compilation turns it
into a CSP over one Boolean variable per edge {u, v} (u < v; value 1 means
u -> v): each k-clique must induce a free tournament for every forbidden
member order k, and each constrained tuple must induce one of its relation's
tournaments.  Solving picks a route by classification (index-order
orientation, clique lookup, parity equations, 2-SAT) or brute force, and
every satisfying answer is re-verified independently before it is returned.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import _kernels
from .classify import (
    ARROW,
    Case,
    Classification,
    RESERVED_RELATION,
    Relation,
    classify,
)
from .tournaments import (
    ForbiddenSet,
    Tournament,
    _cap,
    _free_bits,
    is_free,
    pair_count,
    pair_list,
)

__all__ = [
    "ARROW",
    "BoundExceeded",
    "CliqueBudgetExceeded",
    "Compiled",
    "CompiledConstraint",
    "Constraint",
    "DEFAULT_BF_VARS",
    "DEFAULT_CLIQUE_BUDGET",
    "DEFAULT_TWOSAT_WIDTH",
    "InputError",
    "Instance",
    "InternalError",
    "Normalized",
    "NotAffine",
    "NotBijunctive",
    "Orientation",
    "ParitySystem",
    "SolveResult",
    "TwoSat",
    "Unsat",
    "VerifyResult",
    "Violation",
    "WidthExceeded",
    "affine_compile",
    "brute_force_solve",
    "compile_instance",
    "decode",
    "gf2_solve",
    "normalize",
    "solve",
    "trivial_solve",
    "twosat_compile",
    "twosat_solve",
    "verify",
]

DEFAULT_BF_VARS = 24
DEFAULT_CLIQUE_BUDGET = 1_000_000
DEFAULT_TWOSAT_WIDTH = 15


class InputError(ValueError):
    """Malformed instance: bad references rather than unsatisfiable content."""


class InternalError(RuntimeError):
    """A solver produced an answer its own verification rejected."""


class BoundExceeded(RuntimeError):
    """Brute force refused: too many variables."""


class CliqueBudgetExceeded(RuntimeError):
    """Compilation refused: too many clique constraints."""


@dataclass(frozen=True)
class Constraint:
    relation: str
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class Instance:
    """A graph (vertices 1..vertex_count) with optional orientation demands."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()
    oriented: tuple[tuple[int, int], ...] = ()
    constraints: tuple[Constraint, ...] = ()


@dataclass(frozen=True)
class Orientation:
    """One arc per edge; stored sorted for deterministic output."""

    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(sorted(set(self.arcs))))


@dataclass(frozen=True)
class Unsat:
    reason: str


@dataclass(frozen=True)
class Normalized:
    """Solver form: explicit edge set, constraints only (sugar expanded)."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    constraints: tuple[Constraint, ...]
    uses_arrow: bool


def normalize(inst: Instance, relations=()) -> Normalized | Unsat:
    """Check an instance and expand its sugar.

    Pre-oriented edges become arity-2 constraints on the builtin arrow
    relation; every pair inside a constrained tuple becomes an edge (the
    tuple's vertices must form a clique).  Structural contradictions (loop
    edges, repeated vertices in a tuple) yield Unsat; dangling references
    (unknown relation, arity mismatch, vertex out of range) raise
    InputError.
    """
    rel_by_name = {r.name: r for r in relations}
    n = inst.vertex_count
    if n < 0:
        raise InputError(f"vertex count must be >= 0, got {n}")

    def check_range(v: int, what: str) -> None:
        if not 1 <= v <= n:
            raise InputError(f"{what}: vertex {v} outside 1..{n}")

    edges: set[tuple[int, int]] = set()
    cons: list[Constraint] = []
    for a, b in inst.edges:
        check_range(a, f"edge ({a}, {b})")
        check_range(b, f"edge ({a}, {b})")
        if a == b:
            return Unsat(f"edge ({a}, {b}): a vertex cannot beat itself")
        edges.add((min(a, b), max(a, b)))
    for a, b in inst.oriented:
        check_range(a, f"oriented edge ({a}, {b})")
        check_range(b, f"oriented edge ({a}, {b})")
        if a == b:
            return Unsat(f"oriented edge ({a}, {b}): a vertex cannot beat itself")
        edges.add((min(a, b), max(a, b)))
        cons.append(Constraint(RESERVED_RELATION, (a, b)))
    for c in inst.constraints:
        rel = ARROW if c.relation == RESERVED_RELATION else rel_by_name.get(c.relation)
        if rel is None:
            raise InputError(f"unknown relation {c.relation!r}")
        if len(c.vertices) != rel.arity:
            raise InputError(
                f"relation {c.relation!r} has arity {rel.arity},"
                f" got tuple {c.vertices}"
            )
        for v in c.vertices:
            check_range(v, f"tuple {c.vertices}")
        if len(set(c.vertices)) != len(c.vertices):
            return Unsat(f"tuple {c.vertices}: repeated vertex")
        for a, b in itertools.combinations(c.vertices, 2):
            edges.add((min(a, b), max(a, b)))
        cons.append(Constraint(c.relation, tuple(c.vertices)))
    uses_arrow = any(c.relation == RESERVED_RELATION for c in cons)
    return Normalized(n, tuple(sorted(edges)), tuple(cons), uses_arrow)


def _adjacency(n: int, edges) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n + 1)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _cliques(adj: list[set[int]], n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-cliques as ascending vertex tuples, in lexicographic order."""

    def grow(path: tuple[int, ...], cands: set[int]) -> Iterator[tuple[int, ...]]:
        if len(path) == k:
            yield path
            return
        for v in sorted(cands):
            yield from grow(path + (v,), {u for u in cands & adj[v] if u > v})

    if k == 1:
        yield from ((v,) for v in range(1, n + 1))
        return
    for v in range(1, n + 1):
        yield from grow((v,), {u for u in adj[v] if u > v})


@dataclass(frozen=True)
class CompiledConstraint:
    """Allowed slot-vectors over a tuple of edge variables.

    Slots follow the pair order of the underlying tuple; the first slot is
    the most significant bit of each allowed vector, matching tournament
    bit layout.
    """

    scope: tuple[int, ...]
    allowed: frozenset[int]
    source: str


@dataclass(frozen=True)
class Compiled:
    """Edge-variable CSP; variable i is edges[i], value 1 orients low -> high."""

    num_vars: int
    edges: tuple[tuple[int, int], ...]
    constraints: tuple[CompiledConstraint, ...]


def compile_instance(
    norm: Normalized,
    forbidden: ForbiddenSet,
    relations=(),
    cap_bits: int | None = None,
    clique_budget: int | None = None,
) -> Compiled:
    """Compile to constraints over edge variables.

    One constraint per k-clique for every forbidden member order k (allowed
    vectors: the free tournaments at order k, read along the clique's sorted
    vertices) and one per constrained tuple (the relation's tournaments,
    with a bit complemented wherever the tuple visits an edge against the
    low -> high direction).
    """
    var = {e: i for i, e in enumerate(norm.edges)}
    adj = _adjacency(norm.vertex_count, norm.edges)
    rel_by_name = {r.name: r for r in relations}
    rel_by_name.setdefault(RESERVED_RELATION, ARROW)
    budget = DEFAULT_CLIQUE_BUDGET if clique_budget is None else clique_budget
    cons: list[CompiledConstraint] = []
    count = 0
    for k in sorted({m.order for m in forbidden.members}):
        allowed = frozenset(_free_bits(k, forbidden, _cap(cap_bits)))
        for clique in _cliques(adj, norm.vertex_count, k):
            count += 1
            if count > budget:
                raise CliqueBudgetExceeded(
                    f"more than {budget} clique constraints; raise the budget"
                )
            scope = tuple(
                var[(clique[a], clique[b])]
                for a in range(k)
                for b in range(a + 1, k)
            )
            cons.append(
                CompiledConstraint(scope, allowed, f"{k}-clique {clique}")
            )
    for c in norm.constraints:
        rel = rel_by_name[c.relation]
        k = rel.arity
        npairs = pair_count(k)
        scope = []
        flips = 0
        for p, (a, b) in enumerate(pair_list(k)):
            u, v = c.vertices[a - 1], c.vertices[b - 1]
            if u < v:
                scope.append(var[(u, v)])
            else:
                scope.append(var[(v, u)])
                flips |= 1 << (npairs - 1 - p)
        allowed = frozenset(t.bits ^ flips for t in rel.tournaments)
        cons.append(
            CompiledConstraint(
                tuple(scope), allowed, f"{c.relation}{c.vertices}"
            )
        )
    return Compiled(len(norm.edges), norm.edges, tuple(cons))


def decode(compiled: Compiled, assignment: int) -> Orientation:
    """Assignment bits (LSB = variable 0) to arcs."""
    arcs = []
    for i, (u, v) in enumerate(compiled.edges):
        arcs.append((u, v) if (assignment >> i) & 1 else (v, u))
    return Orientation(tuple(arcs))


def _bf_bound(max_vars: int | None) -> int:
    if max_vars is not None:
        return max_vars
    env = os.environ.get("ORIENT_BF_VARS")
    return int(env) if env else DEFAULT_BF_VARS


def brute_force_solve(compiled: Compiled, max_vars: int | None = None) -> int | None:
    """Exhaustive backtracking; assignment bits, or None when unsatisfiable.

    Variables are searched in descending constraint-degree order (ties by
    index), value 0 before 1, each constraint checked as soon as its scope
    completes.  Instances above the variable bound (ORIENT_BF_VARS, default
    24) are refused with BoundExceeded.
    """
    bound = _bf_bound(max_vars)
    if compiled.num_vars > bound:
        raise BoundExceeded(
            f"{compiled.num_vars} edge variables exceed the brute-force bound {bound}"
        )
    if any(not c.allowed for c in compiled.constraints):
        return None
    degree = [0] * compiled.num_vars
    for c in compiled.constraints:
        for v in c.scope:
            degree[v] += 1
    order = sorted(range(compiled.num_vars), key=lambda v: (-degree[v], v))
    depth_of = {v: d for d, v in enumerate(order)}
    scope_depths = [
        tuple(depth_of[v] for v in c.scope) for c in compiled.constraints
    ]
    alloweds = [c.allowed for c in compiled.constraints]
    return _kernels.backtrack(compiled.num_vars, order, scope_depths, alloweds)


@dataclass(frozen=True)
class ParitySystem:
    """Linear equations over GF(2): coefficient mask (bit v = variable v), rhs."""

    num_vars: int
    equations: tuple[tuple[int, int], ...]


class NotAffine(ValueError):
    def __init__(self, index: int, source: str):
        super().__init__(f"constraint {index} ({source}) is not affine")
        self.index = index
        self.source = source


def affine_compile(compiled: Compiled) -> ParitySystem:
    """Parity equations equivalent to the constraints, or NotAffine.

    Per constraint: with s0 the least allowed vector, the allowed set is
    affine iff its size is exactly 2^rank of the span of {s ^ s0}; the
    equations are the span's null space, each check c.x = c.s0 rewritten
    onto the global variables.  An empty allowed set emits 0 = 1.
    """
    equations: list[tuple[int, int]] = []
    for idx, con in enumerate(compiled.constraints):
        w = len(con.scope)
        if not con.allowed:
            equations.append((0, 1))
            continue
        s0 = min(con.allowed)
        basis: list[int] = []
        for s in con.allowed:
            d = s ^ s0
            for b in basis:
                d = min(d, d ^ b)
            if d:
                basis.append(d)
                basis.sort(reverse=True)
        if len(con.allowed) != 1 << len(basis):
            raise NotAffine(idx, con.source)
        # Null space of the span: RREF the basis, read checks off free columns.
        rref = list(basis)
        for i, row in enumerate(rref):
            top = row.bit_length() - 1
            for j, other in enumerate(rref):
                if j != i and (other >> top) & 1:
                    rref[j] = other ^ row
        pivots = {row.bit_length() - 1: row for row in rref}
        for col in range(w):
            if col in pivots:
                continue
            check = 1 << col
            for p, row in pivots.items():
                if (row >> col) & 1:
                    check |= 1 << p
            if any((s & check).bit_count() & 1 != (s0 & check).bit_count() & 1
                   for s in con.allowed):
                raise AssertionError("null-space check rejected an allowed vector")
            gmask = 0
            for q in range(w):
                if (check >> q) & 1:
                    gmask |= 1 << con.scope[w - 1 - q]
            equations.append((gmask, (s0 & check).bit_count() & 1))
    return ParitySystem(compiled.num_vars, tuple(equations))


def gf2_solve(system: ParitySystem) -> int | None:
    """Gaussian elimination; solution bits with free variables 0, or None.

    Pivot rows are kept reduced against each other, so once every equation
    is folded in, each pivot variable's value is just its row's rhs (free
    variables contribute nothing).
    """
    pivots: dict[int, tuple[int, int]] = {}
    for mask, rhs in system.equations:
        for v, (pm, pr) in pivots.items():
            if (mask >> v) & 1:
                mask ^= pm
                rhs ^= pr
        if mask == 0:
            if rhs:
                return None
            continue
        v = (mask & -mask).bit_length() - 1
        for u, (pm, pr) in list(pivots.items()):
            if (pm >> v) & 1:
                pivots[u] = (pm ^ mask, pr ^ rhs)
        pivots[v] = (mask, rhs)
    x = 0
    for v, (_, rhs) in pivots.items():
        if rhs:
            x |= 1 << v
    return x


@dataclass(frozen=True)
class TwoSat:
    """Clauses of exactly two literals; literal 2v is x_v, 2v+1 its negation."""

    num_vars: int
    clauses: tuple[tuple[int, int], ...]


class NotBijunctive(ValueError):
    def __init__(self, index: int, source: str):
        super().__init__(f"constraint {index} ({source}) is not expressible in 2-SAT")
        self.index = index
        self.source = source


class WidthExceeded(ValueError):
    """A constraint scope is too wide for exhaustive 2-SAT verification."""


def twosat_compile(compiled: Compiled, max_width: int | None = None) -> TwoSat:
    """Two-literal clauses equivalent to the constraints, or NotBijunctive.

    Per constraint, collects every unit and two-literal clause over its
    scope that all allowed vectors satisfy, then verifies by exhausting the
    scope that those clauses admit exactly the allowed set.  Units are
    emitted as a doubled literal.  An empty allowed set collects clashing
    units and passes verification trivially (nothing satisfies them).
    """
    width_cap = DEFAULT_TWOSAT_WIDTH if max_width is None else max_width
    clauses: list[tuple[int, int]] = []
    for idx, con in enumerate(compiled.constraints):
        w = len(con.scope)
        if w > width_cap:
            raise WidthExceeded(
                f"constraint {idx} ({con.source}): scope width {w}"
                f" exceeds the 2-SAT verification cap {width_cap}"
            )
        local: list[tuple[int, int]] = []

        def bit(vec: int, p: int) -> int:
            return (vec >> (w - 1 - p)) & 1

        for p in range(w):
            for want in (0, 1):
                if all(bit(s, p) == want for s in con.allowed):
                    local.append((p, want, p, want))
        for p in range(w):
            for q in range(p + 1, w):
                for wp in (0, 1):
                    for wq in (0, 1):
                        if all(
                            bit(s, p) == wp or bit(s, q) == wq
                            for s in con.allowed
                        ):
                            local.append((p, wp, q, wq))
        solutions = {
            vec
            for vec in range(1 << w)
            if all(
                bit(vec, p) == wp or bit(vec, q) == wq
                for (p, wp, q, wq) in local
            )
        }
        if solutions != con.allowed:
            raise NotBijunctive(idx, con.source)
        for p, wp, q, wq in local:
            lp = 2 * con.scope[p] + (1 - wp)
            lq = 2 * con.scope[q] + (1 - wq)
            clauses.append((lp, lq))
    return TwoSat(compiled.num_vars, tuple(clauses))


def twosat_solve(ts: TwoSat) -> int | None:
    """Implication-graph 2-SAT; assignment bits (absent variables 0) or None."""
    size = 2 * ts.num_vars
    succ: list[list[int]] = [[] for _ in range(size)]
    pred: list[list[int]] = [[] for _ in range(size)]
    present = [False] * ts.num_vars
    for a, b in ts.clauses:
        present[a >> 1] = present[b >> 1] = True
        for x, y in ((a ^ 1, b), (b ^ 1, a)):  # falsified literal forces the other
            succ[x].append(y)
            pred[y].append(x)
    seen = [False] * size
    finish: list[int] = []
    for start in range(size):
        if seen[start]:
            continue
        stack = [(start, 0)]
        seen[start] = True
        while stack:
            node, i = stack.pop()
            if i < len(succ[node]):
                stack.append((node, i + 1))
                nxt = succ[node][i]
                if not seen[nxt]:
                    seen[nxt] = True
                    stack.append((nxt, 0))
            else:
                finish.append(node)
    comp = [-1] * size
    ncomp = 0
    for start in reversed(finish):
        if comp[start] >= 0:
            continue
        stack = [start]
        comp[start] = ncomp
        while stack:
            node = stack.pop()
            for nxt in pred[node]:
                if comp[nxt] < 0:
                    comp[nxt] = ncomp
                    stack.append(nxt)
        ncomp += 1
    bits = 0
    for v in range(ts.num_vars):
        if not present[v]:
            continue  # unmentioned variables default to 0
        if comp[2 * v] == comp[2 * v + 1]:
            return None
        if comp[2 * v] > comp[2 * v + 1]:
            bits |= 1 << v
    return bits


def trivial_solve(
    norm: Normalized, classification: Classification
) -> tuple[Orientation | None, str | None]:
    """The two lookup-free routes; (orientation, None) or (None, reason).

    Case 1: orient every edge along the vertex index order -- acyclic, so
    every clique and constrained tuple induces a transitive tournament,
    which this case guarantees acceptable.  Case 2 first reports UNSAT when
    the graph has a clique one past the largest free transitive order,
    since no tournament at all is free there.
    """
    if classification.primary not in (Case.ALL_TRANSITIVE, Case.CLIQUE_BOUND):
        raise ValueError("trivial routes need a case 1 or case 2 classification")
    if classification.primary is Case.CLIQUE_BOUND:
        k = classification.case2_bound + 1
        adj = _adjacency(norm.vertex_count, norm.edges)
        for clique in _cliques(adj, norm.vertex_count, k):
            return None, f"vertices {clique} form a {k}-clique and no order-{k} tournament is free"
    return Orientation(norm.edges), None


@dataclass(frozen=True)
class Violation:
    kind: str  # "coverage" | "forbidden" | "relation" | "instance"
    detail: str


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    violations: tuple[Violation, ...] = ()


def verify(
    inst: Instance,
    forbidden: ForbiddenSet,
    relations,
    orientation: Orientation,
) -> VerifyResult:
    """Independent check of an orientation against an instance.

    Re-derives the edge set and the cliques from the instance itself (no
    compiled artifacts): the orientation must cover exactly the instance's
    edges, every k-clique must induce a free tournament for each forbidden
    member order k, and every constrained tuple (including pre-oriented
    edges) must induce one of its relation's tournaments.
    """
    norm = normalize(inst, relations)
    if isinstance(norm, Unsat):
        return VerifyResult(
            False, (Violation("instance", f"instance is unsatisfiable: {norm.reason}"),)
        )
    violations: list[Violation] = []
    edge_set = set(norm.edges)
    direction: dict[tuple[int, int], tuple[int, int]] = {}
    for a, b in orientation.arcs:
        key = (min(a, b), max(a, b))
        if a == b or key not in edge_set:
            violations.append(Violation("coverage", f"arc ({a}, {b}) is not an instance edge"))
        elif key in direction:
            violations.append(Violation("coverage", f"edge {key} oriented more than once"))
        else:
            direction[key] = (a, b)
    for e in sorted(edge_set - set(direction)):
        violations.append(Violation("coverage", f"edge {e} left unoriented"))
    if violations:
        return VerifyResult(False, tuple(violations))

    def arc(u: int, v: int) -> bool:
        key = (min(u, v), max(u, v))
        return direction[key] == (u, v)

    def induced_on(vs: Sequence[int]) -> Tournament:
        arcs = []
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                arcs.append((a + 1, b + 1) if arc(vs[a], vs[b]) else (b + 1, a + 1))
        return Tournament.from_arcs(len(vs), arcs)

    for k in sorted({m.order for m in forbidden.members}):
        for vs in itertools.combinations(range(1, norm.vertex_count + 1), k):
            if all(
                (min(p), max(p)) in edge_set
                for p in itertools.combinations(vs, 2)
            ):
                t = induced_on(vs)
                if not is_free(t, forbidden):
                    violations.append(
                        Violation("forbidden", f"clique {vs} induces a forbidden pattern")
                    )
    rel_by_name = {r.name: r for r in relations}
    rel_by_name.setdefault(RESERVED_RELATION, ARROW)
    for c in norm.constraints:
        rel = rel_by_name[c.relation]
        t = induced_on(c.vertices)
        if t.bits not in {m.bits for m in rel.tournaments}:
            violations.append(
                Violation(
                    "relation",
                    f"tuple {c.vertices} induces a tournament outside {c.relation!r}",
                )
            )
    return VerifyResult(not violations, tuple(violations))


@dataclass(frozen=True)
class SolveResult:
    status: str  # "sat" | "unsat" | "refused"
    orientation: Orientation | None
    reason: str | None
    route: str
    classification: Classification | None


def _effective_relations(relations, norm: Normalized):
    if norm.uses_arrow:
        return tuple(relations) + (ARROW,)
    return tuple(relations)


def solve(
    forbidden: ForbiddenSet,
    relations,
    inst: Instance,
    method: str = "auto",
    *,
    max_vars: int | None = None,
    clique_budget: int | None = None,
    cap_bits: int | None = None,
) -> SolveResult:
    """Solve an instance; every satisfying answer is verified before return.

    Methods: "auto" (classify, then the matched route), or force one of
    "brute", "affine", "2sat", "trivial".  Forced routes that cannot handle
    the input (brute-force bound, non-affine or non-bijunctive constraints,
    a classification outside cases 1/2 for "trivial") return status
    "refused" rather than failing.

    With "auto", classification runs over the *effective* relation list:
    the caller's relations plus the builtin arrow relation whenever the
    instance pre-orients edges, since those edges are part of the problem
    being classified.
    """
    norm = normalize(inst, relations)
    if isinstance(norm, Unsat):
        return SolveResult("unsat", None, norm.reason, "normalize", None)
    eff = _effective_relations(relations, norm)
    classification: Classification | None = None
    route = method
    assignment: int | None = None
    compiled: Compiled | None = None

    def compiled_now() -> Compiled:
        return compile_instance(norm, forbidden, eff, cap_bits, clique_budget)

    if method == "auto":
        classification = classify(forbidden, eff, cap_bits)
        primary = classification.primary
        if primary in (Case.ALL_TRANSITIVE, Case.CLIQUE_BOUND):
            route = "index-order" if primary is Case.ALL_TRANSITIVE else "clique-bound"
            orientation, reason = trivial_solve(norm, classification)
            if orientation is None:
                return SolveResult("unsat", None, reason, route, classification)
            result = SolveResult("sat", orientation, None, route, classification)
            return _verified(result, inst, forbidden, relations)
        compiled = compiled_now()
        if primary is Case.MINORITY:
            route = "parity"
            try:
                assignment = gf2_solve(affine_compile(compiled))
            except NotAffine as exc:  # the classification promised affine
                raise InternalError(str(exc)) from exc
        elif primary is Case.MAJORITY:
            route = "two-sat"
            try:
                assignment = twosat_solve(twosat_compile(compiled))
            except NotBijunctive as exc:  # the classification promised 2-SAT
                raise InternalError(str(exc)) from exc
            except WidthExceeded as exc:
                return SolveResult("refused", None, str(exc), route, classification)
        else:
            route = "brute-force"
            try:
                assignment = brute_force_solve(compiled, max_vars)
            except BoundExceeded as exc:
                return SolveResult("refused", None, str(exc), route, classification)
    elif method == "brute":
        compiled = compiled_now()
        try:
            assignment = brute_force_solve(compiled, max_vars)
        except BoundExceeded as exc:
            return SolveResult("refused", None, str(exc), "brute-force", None)
        route = "brute-force"
    elif method == "affine":
        compiled = compiled_now()
        try:
            assignment = gf2_solve(affine_compile(compiled))
        except NotAffine as exc:
            return SolveResult("refused", None, str(exc), "parity", None)
        route = "parity"
    elif method == "2sat":
        compiled = compiled_now()
        try:
            assignment = twosat_solve(twosat_compile(compiled))
        except (NotBijunctive, WidthExceeded) as exc:
            return SolveResult("refused", None, str(exc), "two-sat", None)
        route = "two-sat"
    elif method == "trivial":
        classification = classify(forbidden, eff, cap_bits)
        if classification.primary not in (Case.ALL_TRANSITIVE, Case.CLIQUE_BOUND):
            return SolveResult(
                "refused",
                None,
                f"classification is {classification.summary()};"
                " the trivial routes need case 1 or 2",
                "trivial",
                classification,
            )
        route = (
            "index-order"
            if classification.primary is Case.ALL_TRANSITIVE
            else "clique-bound"
        )
        orientation, reason = trivial_solve(norm, classification)
        if orientation is None:
            return SolveResult("unsat", None, reason, route, classification)
        result = SolveResult("sat", orientation, None, route, classification)
        return _verified(result, inst, forbidden, relations)
    else:
        raise InputError(f"unknown method {method!r}")

    if assignment is None:
        return SolveResult("unsat", None, "no orientation satisfies the constraints", route, classification)
    result = SolveResult(
        "sat", decode(compiled, assignment), None, route, classification
    )
    return _verified(result, inst, forbidden, relations)


def _verified(result: SolveResult, inst, forbidden, relations) -> SolveResult:
    check = verify(inst, forbidden, relations, result.orientation)
    if not check.ok:
        raise InternalError(
            "solver returned an orientation that fails verification: "
            + "; ".join(v.detail for v in check.violations)
        )
    return result
