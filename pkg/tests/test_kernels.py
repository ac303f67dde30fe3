"""The compiled extension and the pure-Python fallback must agree exactly."""

from __future__ import annotations

import random
import subprocess
import sys
from array import array

import pytest

from orient import _fallback, _kernels
from orient.tournaments import _perm_arrays, pair_count

needs_core = pytest.mark.skipif(
    _kernels._core is None, reason="compiled extension not built"
)


def test_implementation_is_reported():
    assert _kernels.implementation() in ("compiled", "fallback")


def test_pure_python_env_forces_the_fallback():
    out = subprocess.run(
        [sys.executable, "-c",
         "import orient; print(orient.kernel_implementation())"],
        capture_output=True, text=True, check=True,
        env={"PATH": "/usr/bin:/bin", "ORIENT_PURE_PYTHON": "1"},
    )
    assert out.stdout.strip() == "fallback"


@needs_core
class TestCanonicalMin:
    def test_agreement_over_all_order_4_masks(self):
        perms, dst, flip = _perm_arrays(4)
        npairs = pair_count(4)
        for bits in range(1 << npairs):
            fb = _fallback.canonical_min(bits, len(perms), npairs, dst, flip)
            cc = _kernels._core.canonical_min(bits, len(perms), npairs, dst, flip)
            assert fb == cc

    def test_agreement_on_random_order_6_masks(self):
        perms, dst, flip = _perm_arrays(6)
        npairs = pair_count(6)
        rng = random.Random(99)
        for _ in range(40):
            bits = rng.getrandbits(npairs)
            fb = _fallback.canonical_min(bits, len(perms), npairs, dst, flip)
            cc = _kernels._core.canonical_min(bits, len(perms), npairs, dst, flip)
            assert fb == cc


@needs_core
class TestScanTriples:
    def random_sets(self):
        rng = random.Random(1234)
        for _ in range(60):
            width = rng.randint(1, 10)
            size = rng.randint(0, min(12, 1 << width))
            yield width, sorted(rng.sample(range(1 << width), size))

    def test_agreement_on_random_sets(self):
        for width, masks in self.random_sets():
            for op in (0, 1):
                fb = _fallback.scan_triples(masks, op)
                cc = _kernels._core.scan_triples(array("Q", masks), op, width)
                assert fb == cc

    def test_closed_set_yields_none_in_both(self):
        span = {0}
        for b in (3, 12, 48):
            span |= {s ^ b for s in span}
        masks = sorted(span)
        assert _fallback.scan_triples(masks, 0) is None
        assert _kernels._core.scan_triples(array("Q", masks), 0, 6) is None

    def test_wide_bitset_path_matches_binary_search_path(self):
        # width 23 exceeds the compiled bitset cut-off, exercising its
        # binary-search branch; results must not change
        rng = random.Random(5)
        masks = sorted(rng.sample(range(1 << 23), 9))
        for op in (0, 1):
            fb = _fallback.scan_triples(masks, op)
            cc = _kernels._core.scan_triples(array("Q", masks), op, 23)
            assert fb == cc


class TestBacktrackDispatch:
    def test_no_constraints_returns_all_zero(self):
        assert _kernels.backtrack(5, list(range(5)), [], []) == 0

    def test_dispatcher_agrees_with_fallback_on_random_csps(self):
        rng = random.Random(777)
        for _ in range(80):
            nv = rng.randint(1, 10)
            order = list(range(nv))
            rng.shuffle(order)
            depth_of = {v: d for d, v in enumerate(order)}
            scope_depths = []
            alloweds = []
            for _ in range(rng.randint(0, 5)):
                w = rng.randint(1, min(5, nv))
                scope = rng.sample(range(nv), w)
                scope_depths.append(tuple(depth_of[v] for v in scope))
                alloweds.append(frozenset(
                    v for v in range(1 << w) if rng.random() < 0.5
                ))
            fb = _fallback.backtrack(nv, order, scope_depths, alloweds)
            via = _kernels.backtrack(nv, order, scope_depths, alloweds)
            assert fb == via

    @needs_core
    def test_wide_num_vars_falls_back(self, monkeypatch):
        # 70 variables exceed the compiled 64-bit assignment word
        called = {}
        real = _fallback.backtrack

        def spy(*args):
            called["hit"] = True
            return real(*args)

        monkeypatch.setattr(_kernels._fallback, "backtrack", spy)
        out = _kernels.backtrack(70, list(range(70)), [(0, 1)], [frozenset({0, 1, 2})])
        assert out is not None
        assert called.get("hit")
