"""Chevalley groups over a commutative ring, realized on a minuscule module.

Generators are built from the integer matrices of :mod:`minchev.liealg`
pushed through Z -> R.  Every group element carries an explicit inverse,
taken from the inverses of its generator factors.
"""

from __future__ import annotations

import itertools
import random
from math import gcd
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Optional, Sequence

from .errors import (
    CapExceeded,
    FactorizationFailed,
    NonUnit,
    NotUnipotent,
    RingMismatch,
    Unsupported,
    VerificationError,
)
from .exactring.matrix import SparseMatrix, _raw
from .exactring.rings import Integers, IntPolynomial, PrimeField, Ring
from .exactring.smith import abelian_invariants, smith_normal_form
from .liealg import CheckReport, LieGenSet, StructureConstants, structure_constants
from .minuscule import WeightBasis
from .rootdata import Root, simple_reflection


class GroupContext:
    """Generator matrices of G_R(Psi) for a fixed weight basis and ring."""

    def __init__(self, basis: WeightBasis, ring: Ring, gens: Optional[LieGenSet] = None):
        self.basis = basis
        self.ring = ring
        self.gens = gens if gens is not None else LieGenSet(basis)
        self.datum = basis.datum
        self.e = {i: m.change_ring(ring) for i, m in self.gens.e.items()}
        self.f = {i: m.change_ring(ring) for i, m in self.gens.f.items()}
        self._root_vectors: dict[int, SparseMatrix] = {}
        self._torus_cache: dict[tuple, "GroupElement"] = {}  # (kind, node, raw t) -> n or h

    @property
    def dim(self) -> int:
        return self.basis.dim

    def identity(self) -> SparseMatrix:
        return SparseMatrix.identity(self.dim, self.ring)

    def root_vector(self, alpha: Root) -> SparseMatrix:
        m = self._root_vectors.get(alpha.index)
        if m is None:
            m = self.gens.root_vector(alpha).change_ring(self.ring)
            self._root_vectors[alpha.index] = m
        return m

    @cached_property
    def structure_constants(self) -> StructureConstants:
        return structure_constants(self.gens)

    def scalar(self, t: Any) -> Any:
        """Raw value of ``t`` in the context ring; foreign ring elements raise RingMismatch."""
        return _raw(t, self.ring)

    def unit(self, t: Any) -> tuple[Any, Any]:
        """(t, t^-1) as raw values, or NonUnit."""
        t = self.scalar(t)
        inv = self.ring.try_invert(t)
        if inv is None:
            raise NonUnit(f"{self.ring.format(t)} is not a unit of {self.ring.spec}")
        return t, inv


@dataclass(frozen=True, eq=False)
class GroupElement:
    matrix: SparseMatrix
    inverse: SparseMatrix
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        if self.check:
            if not (self.matrix @ self.inverse).is_identity() or not (self.inverse @ self.matrix).is_identity():
                raise VerificationError("inverse does not invert the matrix")

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.matrix @ other.matrix, other.inverse @ self.inverse, check=False)

    def inv(self) -> "GroupElement":
        return GroupElement(self.inverse, self.matrix, check=False)

    def __pow__(self, k: int) -> "GroupElement":
        if k < 0:
            return self.inv() ** (-k)
        return GroupElement(self.matrix ** k, self.inverse ** k, check=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def is_identity(self) -> bool:
        return self.matrix.is_identity()


def _unipotent(ctx: GroupContext, nil: SparseMatrix, t) -> GroupElement:
    one = ctx.identity()
    t = ctx.scalar(t)
    return GroupElement(one + nil.scale(t), one + nil.scale(ctx.ring.neg(t)), check=False)


def gen_x(ctx: GroupContext, i: int, t) -> GroupElement:
    """x_i(t) = 1 + t e_i."""
    return _unipotent(ctx, ctx.e[i], t)


def gen_y(ctx: GroupContext, i: int, t) -> GroupElement:
    """y_i(t) = 1 + t f_i."""
    return _unipotent(ctx, ctx.f[i], t)


def gen_x_root(ctx: GroupContext, alpha: Root, t) -> GroupElement:
    return _unipotent(ctx, ctx.root_vector(alpha), t)


def gen_n(ctx: GroupContext, i: int, t=1) -> GroupElement:
    """x_i(t) y_i(-t^-1) x_i(t); monomial, with inverse n_i(-t)."""
    t, t_inv = ctx.unit(t)
    key = ("n", i, t)
    g = ctx._torus_cache.get(key)
    if g is None:
        x = gen_x(ctx, i, t)
        g = ctx._torus_cache[key] = x @ gen_y(ctx, i, ctx.ring.neg(t_inv)) @ x
    return g


def gen_h(ctx: GroupContext, i: int, t) -> GroupElement:
    """n_i(t) n_i(-1); diagonal with entry t^(mu, alpha_i^vee) at weight mu."""
    t, _ = ctx.unit(t)
    key = ("h", i, t)
    g = ctx._torus_cache.get(key)
    if g is None:
        g = ctx._torus_cache[key] = gen_n(ctx, i, t) @ gen_n(ctx, i, ctx.ring.neg(ctx.ring.one))
    return g


def h_product(ctx: GroupContext, t_vec: Sequence) -> GroupElement:
    out = GroupElement(ctx.identity(), ctx.identity(), check=False)
    for i, t in zip(ctx.datum.nodes, t_vec):
        out = out @ gen_h(ctx, i, t)
    return out


def x_product(ctx: GroupContext, roots: Sequence[Root], coeffs: Sequence) -> GroupElement:
    out = GroupElement(ctx.identity(), ctx.identity(), check=False)
    for alpha, t in zip(roots, coeffs):
        out = out @ gen_x_root(ctx, alpha, t)
    return out


# ---------------------------------------------------------------- relations


def commutator_case(ctx: GroupContext, alpha: Root, beta: Root) -> str:
    d = ctx.datum
    s = d.root_of(_add(alpha.weight, beta.weight))
    if s is None:
        return "commute"
    if d.is_root(_add(s.weight, alpha.weight)):
        return "c"
    if d.is_root(_add(s.weight, beta.weight)):
        return "b"
    return "a"


def verify_commutator(ctx: GroupContext, alpha: Root, beta: Root) -> CheckReport:
    """x_b(-u) x_a(t) x_b(u) against the product formula, symbolically in t, u."""
    R = ctx.ring
    if not isinstance(R, IntPolynomial):
        raise Unsupported("commutator relations are verified over poly:t,u")
    if beta.index == alpha.index or beta.weight == tuple(-x for x in alpha.weight):
        raise ValueError("need beta != +-alpha")
    t, u = R.gen(R.variables[0]), R.gen(R.variables[1])
    tu = R.mul(t, u)
    d = ctx.datum
    rep = CheckReport(f"commutator {alpha},{beta}")
    case = commutator_case(ctx, alpha, beta)
    xa = gen_x_root(ctx, alpha, t)
    xb = gen_x_root(ctx, beta, u)
    if case == "commute":
        rep.add(f"[{alpha},{beta}] commute", xa @ xb == xb @ xa)
        return rep
    lhs = gen_x_root(ctx, beta, R.neg(u)) @ xa @ xb
    sc = ctx.structure_constants
    key = (alpha.index, beta.index)
    c = sc.c[key]
    s = d.root_of(_add(alpha.weight, beta.weight))
    factors = [xa, gen_x_root(ctx, s, R.mul(R.from_int(c), tu))]
    if case == "b":
        s2 = d.root_of(_add(s.weight, beta.weight))
        cp = sc.c_prime[key]
        factors.append(gen_x_root(ctx, s2, R.mul(R.from_int(-cp), R.mul(tu, u))))
        for f1, f2 in itertools.combinations(factors, 2):
            rep.add(f"({alpha},{beta}) case b factors commute", f1 @ f2 == f2 @ f1)
    elif case == "c":
        s3 = d.root_of(_add(s.weight, alpha.weight))
        cpp = sc.c_dprime[key]
        factors.append(gen_x_root(ctx, s3, R.mul(R.from_int(cpp), R.mul(tu, t))))
    rhs = factors[0]
    for f in factors[1:]:
        rhs = rhs @ f
    rep.add(f"({alpha},{beta}) case {case}, c={c}", lhs == rhs)
    return rep


def verify_torus_conjugation(ctx: GroupContext, i: int, alpha: Root, t, u) -> bool:
    """h_i(t) x_a(u) h_i(t)^-1 == x_a(u t^(alpha, alpha_i^vee))."""
    t, _ = ctx.unit(t)
    u = ctx.scalar(u)
    h = gen_h(ctx, i, t)
    lhs = h @ gen_x_root(ctx, alpha, u) @ h.inv()
    k = alpha.weight[i - 1]
    return lhs == gen_x_root(ctx, alpha, ctx.ring.mul(u, ctx.ring.power(t, k)))


def verify_n_h_normalization(ctx: GroupContext, i: int, j: int, t) -> bool:
    """n_i h_j(t) n_i^-1 == h_j(t) h_i(t)^(-a_ji); n_i not diagonal; n_i^2 == h_i(-1)."""
    t, _ = ctx.unit(t)
    n = gen_n(ctx, i)
    lhs = n @ gen_h(ctx, j, t) @ n.inv()
    rhs = gen_h(ctx, j, t) @ gen_h(ctx, i, t) ** (-ctx.datum.a(j, i))
    n2 = n @ n
    minus_one = ctx.ring.neg(ctx.ring.one)
    return (
        lhs == rhs
        and not n.matrix.is_diagonal()
        and n2.matrix.is_diagonal()
        and n2 == gen_h(ctx, i, minus_one)
    )


def torus_kernel_test(ctx: GroupContext, t_vec: Sequence) -> bool:
    """Whether prod h_i(t_i) is the identity; cross-checked against the weights."""
    raw = [ctx.unit(t)[0] for t in t_vec]
    if len(raw) != ctx.datum.rank:
        raise ValueError("need one parameter per node")
    by_matrix = h_product(ctx, raw).is_identity()
    R = ctx.ring
    by_weights = True
    for mu in ctx.basis.weights:
        prod = R.one
        for ti, k in zip(raw, mu):
            prod = R.mul(prod, R.power(ti, k))
        if prod != R.one:
            by_weights = False
            break
    if by_matrix != by_weights:
        raise VerificationError("torus kernel: matrix and weight criteria disagree")
    return by_matrix


def perfectness_identity(ctx: GroupContext, i: int, t, u) -> bool:
    """h_i(t) x_i(u) h_i(t)^-1 x_i(u)^-1 == x_i(u (t^2 - 1))."""
    t, _ = ctx.unit(t)
    u = ctx.scalar(u)
    R = ctx.ring
    h = gen_h(ctx, i, t)
    x = gen_x(ctx, i, u)
    lhs = h @ x @ h.inv() @ x.inv()
    return lhs == gen_x(ctx, i, R.mul(u, R.sub(R.mul(t, t), R.one)))


def torus_suite(ctx: GroupContext, draws: int = 100, rng: Optional[random.Random] = None) -> CheckReport:
    """Randomized torus identities over a finite ring, plus the t = 1 edge cases."""
    R = ctx.ring
    if not R.is_finite:
        raise Unsupported("torus suite draws parameters from a finite ring")
    rng = rng or random.Random(0)
    units = [a for a in R.elements() if R.is_unit(a)]
    elements = list(R.elements())
    nodes = list(ctx.datum.nodes)
    roots = ctx.datum.roots
    rep = CheckReport(f"torus over {R.spec}")
    for i in nodes:
        for alpha in roots:
            rep.add(f"h{i}(1) fixes x_{alpha}", verify_torus_conjugation(ctx, i, alpha, 1, 1))
        rep.add(f"h{i}(1)=1", gen_h(ctx, i, 1).is_identity())
        rep.add(f"[h{i}(1),x{i}] trivial", perfectness_identity(ctx, i, 1, 1))
    rep.add("kernel at t=1", torus_kernel_test(ctx, [1] * len(nodes)))
    for k in range(draws):
        t, u = rng.choice(units), rng.choice(elements)
        i, j = rng.choice(nodes), rng.choice(nodes)
        alpha = rng.choice(roots)
        tag = f"#{k} t={R.format(t)} u={R.format(u)}"
        rep.add(f"{tag} h{i} x_{alpha}", verify_torus_conjugation(ctx, i, alpha, t, u))
        rep.add(f"{tag} n{i} h{j}", verify_n_h_normalization(ctx, i, j, t))
        rep.add(f"{tag} perfect {i}", perfectness_identity(ctx, i, t, u))
        t_vec = [rng.choice(units) for _ in nodes]
        try:
            torus_kernel_test(ctx, t_vec)
            agree = True
        except VerificationError:
            agree = False
        rep.add(f"{tag} kernel criteria agree", agree)
    return rep


# ---------------------------------------------------------------- center


@dataclass
class CenterDescription:
    order: int
    invariant_factors: tuple[int, ...]
    elements: list[GroupElement]
    parameterizations: list[tuple[int, ...]]  # exponents x_i with t_i = generator^x_i
    generator: int


def center(ctx: GroupContext) -> CenterDescription:
    """Z(G) over a prime field as the torus elements trivial on every root."""
    R = ctx.ring
    if not isinstance(R, PrimeField):
        raise Unsupported("center is computed over prime fields only")
    p, q, g = R.p, R.p - 1, R.generator
    datum = ctx.datum
    n = datum.rank
    # sum_i x_i a_ij == 0 mod q for every simple root alpha_j
    A = [list(row) for row in datum.cartan]
    snf = smith_normal_form(A)
    steps, orders = [], []
    for k in range(n):
        dk = snf.diagonal[k]
        gk = gcd(dk, q)
        orders.append(gk)
        steps.append(q // gk)
    L = snf.left

    def x_of(ys):
        return tuple(sum(ys[k] * L[k][i] for k in range(n)) % q for i in range(n))

    seen: dict = {}
    for ms in itertools.product(*(range(o) for o in orders)):
        x = x_of([m * s for m, s in zip(ms, steps)])
        h = h_product(ctx, [pow(g, xi, p) for xi in x])
        if h.matrix not in seen:
            seen[h.matrix] = (h, x)
    elements, params = [], []
    for h, x in sorted(seen.values(), key=lambda hx: hx[1]):
        for i in datum.nodes:
            for gen in (gen_x(ctx, i, 1), gen_y(ctx, i, 1)):
                if h @ gen != gen @ h:
                    raise VerificationError(f"center candidate {x} does not commute with a generator")
        elements.append(h)
        params.append(x)
    weights = ctx.basis.weights
    gens_exp = []
    for k in range(n):
        if orders[k] > 1:
            x = x_of([steps[j] if j == k else 0 for j in range(n)])
            gens_exp.append([sum(xi * m for xi, m in zip(x, mu)) % q for mu in weights])
    factors = abelian_invariants(gens_exp, q) if gens_exp else ()
    order = 1
    for f in factors:
        order *= f
    if order != len(elements):
        raise VerificationError(f"center order {len(elements)} vs invariant factors {factors}")
    return CenterDescription(order, factors, elements, params, g)


# ---------------------------------------------------------------- unipotent part


def unipotent_factorize(ctx: GroupContext, g, order: Optional[Sequence[Root]] = None) -> list:
    """Coefficients (t_a) with g = prod_a x_a(t_a) over positive roots in ``order``.

    ``order`` must be by nondecreasing height; the default is the datum's
    positive-root order.  Peels factors off the left: the coefficient of the
    lowest remaining root is read from one entry of the remaining matrix.
    """
    m = g.matrix if isinstance(g, GroupElement) else g
    if m.ring != ctx.ring:
        raise RingMismatch(f"{m.ring.spec} vs {ctx.ring.spec}")
    if not m.is_upper_unitriangular():
        raise NotUnipotent("matrix is not upper unitriangular in basis order")
    roots = list(order) if order is not None else ctx.datum.positive_roots_ordered()
    if any(not r.positive for r in roots):
        raise ValueError("order must list positive roots")
    if any(a.height > b.height for a, b in zip(roots, roots[1:])):
        raise ValueError("order must be by nondecreasing height")
    R = ctx.ring
    coeffs = []
    for alpha in roots:
        e = ctx.root_vector(alpha)
        r, c, v = next(e.entries())
        t = R.mul(m[r, c], v)  # v is +-1
        coeffs.append(t)
        if not R.is_zero(t):
            m = gen_x_root(ctx, alpha, R.neg(t)).matrix @ m
    if not m.is_identity():
        raise FactorizationFailed("remainder is not the identity; element is not in U+")
    return coeffs


# ---------------------------------------------------------------- Weyl group


def weyl_group_elements(datum, cap: int = 10**5) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (permutation of root indices, reduced word) pairs, by breadth-first search."""
    N = len(datum.roots)
    perms = {
        j: tuple(datum.addition_table[simple_reflection(datum, j, r.weight)] for r in datum.roots)
        for j in datum.nodes
    }
    start = tuple(range(N))
    words = {start: ()}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for j in datum.nodes:
            sw = tuple(perms[j][k] for k in w)
            if sw not in words:
                words[sw] = (j,) + words[w]
                if len(words) > cap:
                    raise CapExceeded(f"Weyl group larger than cap {cap}", partial=len(words))
                queue.append(sw)
    return list(words.items())


def weyl_lift_check(ctx: GroupContext, cap: int = 10**5) -> bool:
    """s_i -> n_i H is injective on W: distinct w give distinct monomial patterns.

    Also checks each pattern is the permutation mu -> w(mu) of the basis.
    """
    if not isinstance(ctx.ring, Integers):
        raise Unsupported("Weyl lift check runs over the integers")
    datum, basis = ctx.datum, ctx.basis
    elements = weyl_group_elements(datum, cap)
    n = {i: gen_n(ctx, i).matrix for i in datum.nodes}
    products = {(): ctx.identity()}
    patterns = set()
    for _, word in sorted(elements, key=lambda pw: (len(pw[1]), pw[1])):
        if word:
            products[word] = n[word[0]] @ products[word[1:]]
        mat = products[word]
        pat = mat.pattern()
        expected = set()
        for p, mu in enumerate(basis.weights):
            nu = mu
            for j in reversed(word):
                nu = simple_reflection(datum, j, nu)
            expected.add((basis.index(nu), p))
        if pat != expected or not mat.is_monomial():
            return False
        patterns.add(pat)
    return len(patterns) == len(elements)


# ---------------------------------------------------------------- enumeration


@dataclass(frozen=True)
class EnumerationResult:
    order: int
    completed: bool


def enumerate_group(ctx: GroupContext, cap: int = 10**6, generator_order: Optional[Iterable] = None) -> EnumerationResult:
    """Breadth-first closure of {x_i(t), y_i(t)} over a prime field.

    Elements are dense row-major residue tuples; right multiplication by
    1 + t E is a column update.  Stops once more than ``cap`` elements are found.
    """
    R = ctx.ring
    if not isinstance(R, PrimeField):
        raise Unsupported("enumeration needs a prime field")
    p, d = R.p, ctx.dim
    gens = []
    for i in ctx.datum.nodes:
        for kind, mat in (("x", ctx.gens.e[i]), ("y", ctx.gens.f[i])):
            for t in range(1, p):
                gens.append(((kind, i, t), [(q, c, v * t % p) for q, c, v in mat.entries()]))
    if generator_order is not None:
        keyed = dict(gens)
        gens = [(k, keyed[k]) for k in generator_order]

    start = tuple(int(r == c) for r in range(d) for c in range(d))
    seen = {start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for _, upd in gens:
            new = list(g)
            for q, c, s in upd:
                for r in range(d):
                    a = g[r * d + q]
                    if a:
                        idx = r * d + c
                        new[idx] = (new[idx] + s * a) % p
            tup = tuple(new)
            if tup not in seen:
                seen.add(tup)
                if len(seen) > cap:
                    return EnumerationResult(order=len(seen), completed=False)
                queue.append(tup)
    return EnumerationResult(order=len(seen), completed=True)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))
