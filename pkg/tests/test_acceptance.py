"""Acceptance suite: eleven end-to-end criteria, each with a one-line verdict.

Run with ``pytest tests/test_acceptance.py`` (verdicts are listed in the
terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import random
import sys
import time
from math import comb
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from helpers import make_basis, make_ctx, small_instances  # noqa: E402
from minchev.chevgroup import (  # noqa: E402
    center,
    enumerate_group,
    gen_x,
    gen_y,
    h_product,
    torus_kernel_test,
    torus_suite,
    unipotent_factorize,
    verify_commutator,
    x_product,
)
from minchev.exactring.matrix import SparseMatrix  # noqa: E402
from minchev.liealg import (  # noqa: E402
    LieGenSet,
    check_structure_constants,
    lie_closure_dimension,
    verify_braid,
    verify_serre,
)
from minchev.minuscule import orbit  # noqa: E402
from minchev.rootdata import build_root_datum  # noqa: E402

RESULTS: dict[int, str] = {}

E6_NODE1 = (
    "+00000 -0+000 00-+00 0+0-+0 0-00+0 0+00-+ 0-0+-+ 0+000- 00+-0+ 0-0+0- +0-00+ 00+-+- -0000+ "
    "+0-0+- 00+0-0 -000+- +0-+-0 -00+-0 ++0-00 -++-00 +-0000 --+000 0+-000 0--+00 000-+0 0000-+ 00000-"
)


def record(k: int, ok: bool, detail: str) -> bool:
    RESULTS[k] = f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(RESULTS[k])
    return ok


def expected_orbit_size(name: str, i0: int) -> int:
    fam, n = name[0], int(name[1:])
    if fam == "A":
        return comb(n + 1, i0)
    if fam == "B":
        return 2 ** n
    if fam == "C":
        return 2 * n
    if fam == "D":
        return 2 ** (n - 1) if i0 in (1, 2) else 2 * n
    return {6: 27, 7: 56}[n]


def _gens(name, i0):
    return LieGenSet(make_basis(name, [i0]))


# ---------------------------------------------------------------- criteria


def criterion_1():
    t0 = time.perf_counter()
    bad = []
    for name, i0 in small_instances():
        size = len(orbit(build_root_datum(name), i0))
        if size != expected_orbit_size(name, i0):
            bad.append((name, i0, size))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 5
    return record(1, ok, f"orbit sizes, {len(small_instances())} instances, {dt:.2f}s (< 5s) {bad or ''}")


def criterion_2():
    expected = {tuple({"+": 1, "-": -1, "0": 0}[c] for c in w) for w in E6_NODE1.split()}
    got = set(orbit(build_root_datum("E6"), 1))
    ok = len(expected) == 27 and got == expected
    return record(2, ok, f"E6 node-1 orbit equals the 27 golden tuples ({len(got & expected)}/27 matched)")


def criterion_3():
    t0 = time.perf_counter()
    bad, n_rel = [], 0
    for name, i0 in small_instances():
        rep = verify_serre(_gens(name, i0))
        n_rel += len(rep.results)
        if not rep.passed:
            bad.append((name, i0, rep.failures[:3]))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 30
    return record(3, ok, f"Serre relations, {n_rel} identities, {dt:.2f}s (< 30s) {bad or ''}")


def criterion_4():
    t0 = time.perf_counter()
    bad, n_pairs = [], 0
    for name, i0 in small_instances():
        g = _gens(name, i0)
        for i, j in itertools.combinations(g.datum.nodes, 2):
            n_pairs += 1
            if not verify_braid(g, i, j):
                bad.append((name, i0, i, j))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 30
    return record(4, ok, f"braid relations, {n_pairs} node pairs, {dt:.2f}s (< 30s) {bad or ''}")


COMMUTATOR_CASES = [("A2", [1]), ("A3", [1]), ("B2", [1]), ("B3", [1]), ("C2", [2]), ("C3", [3]),
                    ("D4", [1]), ("E6", [1])]


def criterion_5():
    t0 = time.perf_counter()
    bad, n_pairs = [], 0
    for name, nodes in COMMUTATOR_CASES:
        ctx = make_ctx(name, nodes, "poly:t,u")
        consts = check_structure_constants(ctx.gens, ctx.structure_constants)
        if not consts.passed:
            bad.append((name, consts.failures[:3]))
        for a, b in itertools.permutations(ctx.datum.positive_roots, 2):
            n_pairs += 1
            rep = verify_commutator(ctx, a, b)
            if not rep.passed:
                bad.append((name, rep.failures))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 300
    return record(5, ok, f"commutator formulas over Z[t,u], {n_pairs} ordered pairs, {dt:.2f}s (< 300s) {bad[:3] or ''}")


def criterion_6():
    t0 = time.perf_counter()
    bad, n_checks = [], 0
    for p in (5, 7):
        for k, (name, i0) in enumerate(small_instances()):
            ctx = make_ctx(name, [i0], f"gfp:{p}")
            rep = torus_suite(ctx, draws=100, rng=random.Random(1000 * p + k))
            n_checks += len(rep.results)
            if not rep.passed:
                bad.append((name, i0, p, rep.failures[:3]))
    # listed edge cases
    # (-1, -1, 1, 1) pairs evenly with every weight of the D4 node-4 orbit
    so8 = make_ctx("D4", [4], "gfp:5")
    edge = {
        "A1/3 t=-1 not in kernel": not torus_kernel_test(make_ctx("A1", [1], "gfp:3"), [2]),
        "D4 node 4 kernel class": torus_kernel_test(so8, [4, 4, 1, 1]),
        "all ones in kernel": torus_kernel_test(so8, [1, 1, 1, 1]),
    }
    failed_edges = [name for name, ok in edge.items() if not ok]
    dt = time.perf_counter() - t0
    ok = not bad and not failed_edges
    return record(6, ok, f"torus identities, {n_checks} checks over gfp:5 and gfp:7, {dt:.2f}s "
                         f"{bad[:2] or ''}{failed_edges or ''}")


def _brute_center_size(ctx):
    p, d = ctx.ring.p, ctx.datum
    mats = set()
    for ts in itertools.product(range(1, p), repeat=d.rank):
        ok = True
        for alpha in d.roots:
            v = 1
            for t, k in zip(ts, alpha.weight):
                v = v * pow(t, k, p) % p
            if v != 1:
                ok = False
                break
        if ok:
            mats.add(h_product(ctx, list(ts)).matrix)
    return mats


def criterion_7():
    cases = [("A1", [1], "gfp:3", 2, None), ("A2", [1], "gfp:7", 3, None),
             ("D4", [1, 2], "gfp:5", 4, (2, 2)), ("D5", [1, 2], "gfp:5", 4, (4,))]
    bad = []
    for name, nodes, ring, order, factors in cases:
        ctx = make_ctx(name, nodes, ring)
        desc = center(ctx)
        central = all(
            h @ g == g @ h
            for h in desc.elements
            for i in ctx.datum.nodes
            for g in (gen_x(ctx, i, 1), gen_y(ctx, i, 1))
        )
        brute = _brute_center_size(ctx) == {h.matrix for h in desc.elements}
        shape = factors is None or desc.invariant_factors == factors
        if not (desc.order == order and central and brute and shape):
            bad.append((name, nodes, desc.order, desc.invariant_factors))
    return record(7, not bad, f"centers of A1/3, A2/7, D4 spin/5 = Z2xZ2, D5 spin/5 = Z4 {bad or ''}")


def order_formula(q, n_pos, degrees):
    out = q ** n_pos
    for d in degrees:
        out *= q ** d - 1
    return out


def criterion_8():
    cases = [("A1", [1], 2, 1, [2]), ("A1", [1], 3, 1, [2]), ("A2", [1], 2, 3, [2, 3]),
             ("C2", [2], 2, 4, [2, 4]), ("A3", [1], 2, 6, [2, 3, 4])]
    t0 = time.perf_counter()
    got = []
    ok = True
    for name, nodes, p, n_pos, degrees in cases:
        res = enumerate_group(make_ctx(name, nodes, f"gfp:{p}"))
        got.append(res.order)
        ok = ok and res.completed and res.order == order_formula(p, n_pos, degrees)
    dt = time.perf_counter() - t0
    ok = ok and got == [6, 24, 168, 720, 20160] and dt < 120
    return record(8, ok, f"enumerated orders {got}, {dt:.2f}s (< 120s)")


def criterion_9():
    ok = True
    for n in range(1, 5):
        ctx = make_ctx(f"A{n}", [1], "poly:t,u")
        R = ctx.ring
        t = R.gen("t")
        for i in ctx.datum.nodes:
            up = ctx.identity() + SparseMatrix(n + 1, R, [(i - 1, i, t)])
            down = ctx.identity() + SparseMatrix(n + 1, R, [(i, i - 1, t)])
            ok = ok and gen_x(ctx, i, t).matrix == up and gen_y(ctx, i, t).matrix == down
    return record(9, ok, "A1..A4 on the natural module: x_i(t) = 1 + t E(i,i+1), y_i(t) = 1 + t E(i+1,i)")


def criterion_10():
    rng = random.Random(2024)
    bad = []
    for name in ("A3", "B3", "D4"):
        ctx = make_ctx(name, [1], "gfp:7")
        roots = ctx.datum.positive_roots_ordered()
        for _ in range(200):
            coeffs = [rng.randrange(7) for _ in roots]
            if unipotent_factorize(ctx, x_product(ctx, roots, coeffs)) != coeffs:
                bad.append((name, coeffs))
    return record(10, not bad, f"unipotent round trip, 3 x 200 tuples over gfp:7 {bad[:1] or ''}")


def criterion_11():
    bad = []
    for name, i0 in small_instances():
        g = _gens(name, i0)
        dim = lie_closure_dimension(g)
        if dim != len(g.datum.roots) + g.datum.rank:
            bad.append((name, i0, dim))
    return record(11, not bad, f"Lie closure dimension = |roots| + rank on {len(small_instances())} instances {bad or ''}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("k", range(1, 12))
def test_criterion(k):
    assert CRITERIA[k - 1]()


if __name__ == "__main__":
    results = [check() for check in CRITERIA]
    sys.exit(0 if all(results) else 1)
