"""Pure-Python kernels, mirroring the compiled extension's behavior.

Selected by orient._kernels when the extension is missing or when
ORIENT_PURE_PYTHON is set.  Everything here works on plain ints, so there
is no width limit; the compiled paths cap out at 63/22 bits and fall back
here beyond that.
"""

from __future__ import annotations

NAME = "fallback"


def canonical_min(bits, nperms, npairs, dst, flip):
    """Minimum relabeling of `bits` over all permutations, with its index.

    dst/flip are the flattened per-permutation tables: the bit of source
    pair p lands at dst[base+p] xored with flip[base+p].
    """
    best = -1
    best_idx = 0
    base = 0
    for idx in range(nperms):
        out = 0
        for p in range(npairs):
            out |= (((bits >> (npairs - 1 - p)) & 1) ^ flip[base + p]) << dst[base + p]
        if best < 0 or out < best:
            best = out
            best_idx = idx
        base += npairs
    return best, best_idx


def scan_triples(masks, op):
    """First vote on three distinct set elements that leaves the set.

    masks must be sorted ascending; op 0 is the xor vote, 1 the two-of-three
    vote.  Scans unordered index triples i < j < k in lexicographic order and
    returns (i, j, k, result) for the first escape, or None if the set is
    closed.
    """
    member = set(masks)
    m = len(masks)
    for i in range(m):
        a = masks[i]
        for j in range(i + 1, m):
            b = masks[j]
            ab = a & b
            xab = a ^ b
            for k in range(j + 1, m):
                c = masks[k]
                r = (xab ^ c) if op == 0 else (ab | (xab & c))
                if r not in member:
                    return i, j, k, r
    return None


def backtrack(num_vars, order, scope_depths, alloweds):
    """Depth-first search over 0/1 variables; returns assignment bits or None.

    order[d] is the variable assigned at depth d; value 0 is tried before 1.
    scope_depths[c] gives, per constraint, the depth of each scope slot (slot
    order preserved); the constraint is checked as soon as its deepest slot
    is assigned, against alloweds[c], a set of slot-vectors with the first
    slot at the most significant bit.
    """
    by_trigger: list[list[int]] = [[] for _ in range(num_vars)]
    for c, depths in enumerate(scope_depths):
        by_trigger[max(depths)].append(c)
    val = [0] * num_vars
    branch = [0] * (num_vars + 1)
    depth = 0
    while True:
        if depth == num_vars:
            bits = 0
            for d in range(num_vars):
                if val[d]:
                    bits |= 1 << order[d]
            return bits
        v = branch[depth]
        if v == 2:
            branch[depth] = 0
            depth -= 1
            if depth < 0:
                return None
            continue
        branch[depth] = v + 1
        val[depth] = v
        ok = True
        for c in by_trigger[depth]:
            vec = 0
            for d in scope_depths[c]:
                vec = (vec << 1) | val[d]
            if vec not in alloweds[c]:
                ok = False
                break
        if ok:
            depth += 1
