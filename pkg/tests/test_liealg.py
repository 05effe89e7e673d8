from __future__ import annotations

import itertools

import pytest

from helpers import make_basis
from minchev.exactring.matrix import SparseMatrix, commutator
from minchev.liealg import (
    LieGenSet,
    braid_order,
    check_structure_constants,
    chevalley_generators,
    lie_closure_dimension,
    n_matrix,
    root_vector,
    structure_constants,
    verify_braid,
    verify_cartan_conjugation,
    verify_root_vector,
    verify_serre,
)

CASES = [("A1", [1]), ("A2", [1]), ("A3", [2]), ("B2", [1]), ("C2", [2]), ("B3", [1]), ("C3", [3]),
         ("D4", [1, 2]), ("D5", [5]), ("E6", [1]), ("E7", [7])]


def gens_for(name, nodes):
    return chevalley_generators(make_basis(name, nodes))


def test_a1_generators():
    g = gens_for("A1", [1])
    assert g.e[1].to_dense() == [[0, 1], [0, 0]]
    assert g.f[1].to_dense() == [[0, 0], [1, 0]]
    assert g.h[1].to_dense() == [[1, 0], [0, -1]]


def test_c2_h2_diagonal():
    g = gens_for("C2", [2])
    assert g.h[2].diagonal_values() == [1, -1, 1, -1]


@pytest.mark.parametrize("name,nodes", CASES)
def test_generator_shapes(name, nodes):
    g = gens_for(name, nodes)
    for i in g.datum.nodes:
        assert g.e[i].is_strictly_upper()
        assert g.f[i].is_strictly_lower()
        assert g.h[i].is_diagonal()
        assert set(g.h[i].diagonal_values()) <= {-1, 0, 1}
        assert g.f[i] == g.e[i].T
        # the highest weight of each block is killed by every e_i
        for i0 in nodes:
            top = tuple(int(k == i0) for k in g.datum.nodes)
            col = g.basis.index(top)
            assert all(c != col for _, c, _ in g.e[i].entries())


@pytest.mark.parametrize("name,nodes", CASES)
def test_serre(name, nodes):
    rep = verify_serre(gens_for(name, nodes))
    assert rep.passed, rep.failures


@pytest.mark.parametrize("name", ["B2", "C3", "B4"])
def test_weight_relation_uses_transposed_cartan_entry(name):
    # [h_j, e_i] is a_ji e_i; the transposed entry a_ij is wrong off the simply-laced case
    nodes = [1] if name.startswith("B") else [int(name[1:])]
    g = gens_for(name, nodes)
    d = g.datum
    mismatched = 0
    for i, j in itertools.product(d.nodes, repeat=2):
        br = commutator(g.h[j], g.e[i])
        assert br == g.e[i].scale(d.a(j, i))
        if d.a(i, j) != d.a(j, i):
            assert br != g.e[i].scale(d.a(i, j))
            mismatched += 1
    assert mismatched == 2


def test_n_matrix_a1():
    g = gens_for("A1", [1])
    # (1 + E12)(1 - E21)(1 + E12), acting on columns: z_top -> -z_low, z_low -> z_top
    assert n_matrix(g, 1).to_dense() == [[0, 1], [-1, 0]]
    assert n_matrix(g, 1) @ n_matrix(g, 1, -1) == g.identity()
    with pytest.raises(ValueError):
        n_matrix(g, 1, 2)


@pytest.mark.parametrize("name,nodes", CASES)
def test_n_matrix_properties(name, nodes):
    g = gens_for(name, nodes)
    basis, d = g.basis, g.datum
    for i in d.nodes:
        n = g.n[i]
        assert n.is_monomial()
        assert all(v in (1, -1) for _, _, v in n.entries())
        assert (n ** 4).is_identity()
        assert n @ g.n_inv[i] == g.identity()
        sq = (n @ n).diagonal_values()
        for p, mu in enumerate(basis.weights):
            k = mu[i - 1]
            assert sq[p] == (-1) ** abs(k)
            target = basis.index(tuple(m - k * a for m, a in zip(mu, d.simple_root_weight(i))))
            assert n[target, p] != 0
            if k == 0:
                assert dict(n.row(p)) == {p: 1}


@pytest.mark.parametrize("name,nodes", CASES)
def test_braid(name, nodes):
    g = gens_for(name, nodes)
    for i, j in itertools.combinations(g.datum.nodes, 2):
        assert verify_braid(g, i, j)
    with pytest.raises(ValueError):
        verify_braid(g, 1, 1)


def test_braid_orders():
    assert braid_order(make_basis("A2", [1]).datum, 1, 2) == 3
    assert braid_order(make_basis("B2", [1]).datum, 1, 2) == 4
    assert braid_order(make_basis("D4", [1]).datum, 1, 2) == 2


def test_braid_fails_with_wrong_order():
    g = gens_for("A2", [1])
    n1, n2 = g.n[1], g.n[2]
    assert n1 @ n2 != n2 @ n1


@pytest.mark.parametrize("name,nodes", CASES)
def test_root_vectors(name, nodes):
    g = gens_for(name, nodes)
    d = g.datum
    for alpha in d.roots:
        rep = verify_root_vector(g, alpha)
        assert rep.passed, (str(alpha), rep.failures)
    for i in d.nodes:
        assert g.root_vector(d.simple_root(i)) == g.e[i]
        neg = g.root_vector(d.negative(d.simple_root(i)))
        assert neg in (g.f[i], -g.f[i])


def test_a2_highest_root_vector():
    g = gens_for("A2", [1])
    top = g.datum.root_of((1, 1))
    m = root_vector(g, top).matrix
    entries = list(m.entries())
    assert len(entries) == 1
    r, c, v = entries[0]
    assert (r, c) == (0, 2) and v in (1, -1)


@pytest.mark.parametrize("name,nodes", CASES[:-1])
def test_structure_constants(name, nodes):
    g = gens_for(name, nodes)
    sc = structure_constants(g)
    rep = check_structure_constants(g, sc)
    assert rep.passed, rep.failures
    d = g.datum
    for (ia, ib), c in sc.c.items():
        a, b = d.roots[ia], d.roots[ib]
        s = d.root_of(tuple(x + y for x, y in zip(a.weight, b.weight)))
        assert commutator(g.root_vector(a), g.root_vector(b)) == g.root_vector(s).scale(c)


def test_structure_constant_examples():
    a2 = gens_for("A2", [1])
    d = a2.datum
    sc = structure_constants(a2)
    assert abs(sc.c[d.simple_root(1).index, d.simple_root(2).index]) == 1
    c2 = gens_for("C2", [2])
    d = c2.datum
    sc = structure_constants(c2)
    # pairs with both a+b and a-b roots: the two orthogonal short roots
    pairs = [(a, b) for (ia, ib) in sc.c for a, b in [(d.roots[ia], d.roots[ib])]
             if a.positive and b.positive and d.is_root(tuple(x - y for x, y in zip(a.weight, b.weight)))]
    assert len(pairs) == 2
    for a, b in pairs:
        assert abs(sc.c[a.index, b.index]) == 2
        assert sc.c[b.index, a.index] == -sc.c[a.index, b.index]


@pytest.mark.parametrize("name,nodes,dim", [("A1", [1], 3), ("A2", [1], 8), ("B2", [1], 10), ("C3", [3], 21),
                                            ("D4", [1], 28), ("D4", [1, 2, 4], 28), ("E6", [1], 78), ("E7", [7], 133)])
def test_closure_dimension(name, nodes, dim):
    g = gens_for(name, nodes)
    assert lie_closure_dimension(g) == dim == len(g.datum.roots) + g.datum.rank


@pytest.mark.parametrize("name,nodes", CASES)
def test_cartan_conjugation(name, nodes):
    g = gens_for(name, nodes)
    for i, j in itertools.product(g.datum.nodes, repeat=2):
        assert verify_cartan_conjugation(g, i, j)
    for i in g.datum.nodes:
        assert g.n_inv[i] @ g.h[i] @ g.n[i] == -g.h[i]


def test_cartan_conjugation_a2_example():
    g = gens_for("A2", [1])
    assert g.n_inv[1] @ g.h[2] @ g.n[1] == g.h[2] + g.h[1]


def test_lie_gen_set_is_deterministic():
    a, b = LieGenSet(make_basis("E6", [6])), LieGenSet(make_basis("E6", [6]))
    for alpha in a.datum.roots:
        assert a.root_vector(alpha) == b.root_vector(alpha)
    assert isinstance(a.identity(), SparseMatrix)
