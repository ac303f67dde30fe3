"""Ready-made input documents, one per solver route.

Used by `orient examples` and by the test suite; every document round-trips
through the parsers in orient.io.
"""

from __future__ import annotations

_TRANSITIVE_4 = {
    "n": 4,
    "arcs": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]],
}
# The transitive tournament's single-arc perturbation that, forbidden
# together with it, leaves exactly the two "vertex versus 3-cycle" forms
# at order 4 (one vertex beating a 3-cycle, or beaten by one).
_SWAPPED_4 = {
    "n": 4,
    "arcs": [[1, 2], [3, 1], [1, 4], [2, 3], [2, 4], [4, 3]],
}
_CYCLE_3 = {"n": 3, "arcs": [[1, 2], [2, 3], [3, 1]]}

_TRANSITIVE_TRIPLES = [
    {"n": 3, "arcs": [[1, 2], [1, 3], [2, 3]]},
    {"n": 3, "arcs": [[1, 2], [3, 1], [3, 2]]},
    {"n": 3, "arcs": [[2, 1], [1, 3], [2, 3]]},
    {"n": 3, "arcs": [[2, 1], [3, 1], [2, 3]]},
    {"n": 3, "arcs": [[1, 2], [1, 3], [3, 2]]},
    {"n": 3, "arcs": [[2, 1], [3, 1], [3, 2]]},
]

# Closed under the majority vote but not the minority vote.
_MAJORITY_TRIPLE = [
    {"n": 3, "arcs": [[1, 2], [3, 1], [2, 3]]},
    {"n": 3, "arcs": [[2, 1], [1, 3], [2, 3]]},
    {"n": 3, "arcs": [[2, 1], [3, 1], [2, 3]]},
]


def documents() -> dict[str, tuple[str, dict]]:
    """filename -> (one-line description, document object)."""
    return {
        "forbidden-parity.json": (
            "forbidden pair routing 4-clique orientation to parity equations",
            {"tournaments": [_TRANSITIVE_4, _SWAPPED_4]},
        ),
        "forbidden-none.json": (
            "empty forbidden set; constraints come from relations only",
            {"tournaments": []},
        ),
        "forbidden-clique.json": (
            "3-cycle plus transitive-4: nothing is free at order 4 (clique-bound case)",
            {"tournaments": [_CYCLE_3, _TRANSITIVE_4]},
        ),
        "relation-arrow.json": (
            "arity-2 relation fixing an edge's direction",
            {
                "relations": [
                    {
                        "name": "arrow",
                        "arity": 2,
                        "tournaments": [{"n": 2, "arcs": [[1, 2]]}],
                    }
                ]
            },
        ),
        "relation-transitive-triples.json": (
            "arity-3 relation allowing every transitive triple",
            {
                "relations": [
                    {"name": "tt3", "arity": 3, "tournaments": _TRANSITIVE_TRIPLES}
                ]
            },
        ),
        "relation-majority-triple.json": (
            "arity-3 relation closed under majority votes but not minority",
            {
                "relations": [
                    {"name": "maj3", "arity": 3, "tournaments": _MAJORITY_TRIPLE}
                ]
            },
        ),
        "instance-k4.json": (
            "complete graph on four vertices, no extra constraints",
            {
                "vertices": 4,
                "edges": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]],
            },
        ),
        "instance-triangle-constrained.json": (
            "triangle constrained by maj3 (pair with relation-majority-triple.json)",
            {
                "vertices": 3,
                "edges": [[1, 2], [1, 3], [2, 3]],
                "constraints": [{"relation": "maj3", "tuple": [1, 2, 3]}],
            },
        ),
        "instance-oriented-diamond.json": (
            "two triangles sharing an edge, two edges pre-oriented",
            {
                "vertices": 4,
                "edges": [[1, 2], [1, 3], [2, 3], [2, 4], [3, 4]],
                "oriented": [[2, 1], [3, 4]],
            },
        ),
    }
