"""Integer matrices of the Chevalley generators on a minuscule module.

The basis vector z_mu (mu in the weight basis) is column ``basis.index(mu)``;
matrices act on column vectors, so e_i(z_mu) = z_{mu+alpha_i} puts a 1 at
row index(mu+alpha_i), column index(mu).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional

from .errors import InconsistentConstant
from .exactring.matrix import SparseMatrix, commutator
from .exactring.rings import Integers
from .minuscule import WeightBasis
from .rootdata import Root, RootDatum, simple_reflection

ZZ = Integers()


@dataclass
class CheckReport:
    """Named pass/fail results of a batch of exact identity checks."""

    title: str
    results: list[tuple[str, bool]] = field(default_factory=list)

    def add(self, name: str, ok: bool) -> bool:
        self.results.append((name, bool(ok)))
        return bool(ok)

    def extend(self, other: "CheckReport") -> None:
        self.results.extend(other.results)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.results)

    @property
    def failures(self) -> list[str]:
        return [name for name, ok in self.results if not ok]

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        n_ok = sum(ok for _, ok in self.results)
        return f"{self.title}: {n_ok}/{len(self.results)} passed"


@dataclass(frozen=True)
class RootVector:
    root: Root
    matrix: SparseMatrix


@dataclass
class StructureConstants:
    """c[(a, b)] with [e_a, e_b] = c e_{a+b}; c1 for e_b e_a e_b, c2 for e_a e_b e_a.

    Keys are pairs of root indices.
    """

    c: dict = field(default_factory=dict)
    c_prime: dict = field(default_factory=dict)
    c_dprime: dict = field(default_factory=dict)


class LieGenSet:
    """e_i, f_i, h_i on the module with basis indexed by ``basis``."""

    def __init__(self, basis: WeightBasis):
        self.basis = basis
        self.datum: RootDatum = basis.datum
        d = basis.dim
        self.e: dict[int, SparseMatrix] = {}
        self.f: dict[int, SparseMatrix] = {}
        self.h: dict[int, SparseMatrix] = {}
        for i in self.datum.nodes:
            alpha = self.datum.simple_root_weight(i)
            e_ent, f_ent, h_ent = [], [], []
            for p, mu in enumerate(basis.weights):
                c = mu[i - 1]
                if c == -1:
                    e_ent.append((basis.index(_add(mu, alpha)), p, 1))
                elif c == 1:
                    f_ent.append((basis.index(_sub(mu, alpha)), p, 1))
                if c:
                    h_ent.append((p, p, c))
            self.e[i] = SparseMatrix(d, ZZ, e_ent)
            self.f[i] = SparseMatrix(d, ZZ, f_ent)
            self.h[i] = SparseMatrix(d, ZZ, h_ent)
        self._root_vectors: dict[int, SparseMatrix] = {}

    @property
    def dim(self) -> int:
        return self.basis.dim

    def identity(self) -> SparseMatrix:
        return SparseMatrix.identity(self.dim, ZZ)

    @cached_property
    def n(self) -> dict[int, SparseMatrix]:
        return {i: n_matrix(self, i, 1) for i in self.datum.nodes}

    @cached_property
    def n_inv(self) -> dict[int, SparseMatrix]:
        return {i: n_matrix(self, i, -1) for i in self.datum.nodes}

    def root_vector(self, alpha: Root) -> SparseMatrix:
        return root_vector(self, alpha).matrix

    def all_root_vectors(self) -> dict[int, SparseMatrix]:
        return {r.index: self.root_vector(r) for r in self.datum.roots}


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def chevalley_generators(basis: WeightBasis) -> LieGenSet:
    return LieGenSet(basis)


def verify_serre(gens: LieGenSet) -> CheckReport:
    """Commuting Cartan part, weight relations, [e_i, f_j] and Serre relations.

    The weight relation is checked in the form [h_j, e_i] = (alpha_i, alpha_j^vee) e_i,
    i.e. with the Cartan entry a_ji.
    """
    datum = gens.datum
    nodes = list(datum.nodes)
    rep = CheckReport("serre")
    for i in nodes:
        for j in nodes:
            rep.add(f"[h{i},h{j}]=0", commutator(gens.h[i], gens.h[j]).is_zero())
    rep.add("h independent", _rank_over_q([gens.h[i] for i in nodes]) == len(nodes))
    for i in nodes:
        for j in nodes:
            a_ji = datum.a(j, i)
            rep.add(f"[h{j},e{i}]={a_ji}e{i}", commutator(gens.h[j], gens.e[i]) == gens.e[i].scale(a_ji))
            rep.add(f"[h{j},f{i}]={-a_ji}f{i}", commutator(gens.h[j], gens.f[i]) == gens.f[i].scale(-a_ji))
    for i in nodes:
        for j in nodes:
            br = commutator(gens.e[i], gens.f[j])
            if i == j:
                rep.add(f"[e{i},f{i}]=h{i}", br == gens.h[i])
            else:
                rep.add(f"[e{i},f{j}]=0", br.is_zero())
    for i in nodes:
        for j in nodes:
            if i == j:
                continue
            k = 1 - datum.a(i, j)
            xe, xf = gens.e[j], gens.f[j]
            for _ in range(k):
                xe = commutator(gens.e[i], xe)
                xf = commutator(gens.f[i], xf)
            rep.add(f"ad(e{i})^{k}(e{j})=0", xe.is_zero())
            rep.add(f"ad(f{i})^{k}(f{j})=0", xf.is_zero())
    for i in nodes:
        rep.add(f"e{i}^2=0", (gens.e[i] @ gens.e[i]).is_zero())
        rep.add(f"f{i}^2=0", (gens.f[i] @ gens.f[i]).is_zero())
    return rep


def n_matrix(gens: LieGenSet, i: int, t: int = 1) -> SparseMatrix:
    """(1 + t e_i)(1 - t^-1 f_i)(1 + t e_i) for t = +-1."""
    if t not in (1, -1):
        raise ValueError("integer n_i(t) needs t = +-1")
    one = gens.identity()
    x = one + gens.e[i].scale(t)
    y = one - gens.f[i].scale(t)  # t^-1 == t
    return x @ y @ x


def braid_order(datum: RootDatum, i: int, j: int) -> int:
    return {0: 2, 1: 3, 2: 4, 3: 6}[datum.a(i, j) * datum.a(j, i)]


def _alternating(first, second, m: int):
    out = None
    for k in range(m):
        factor = first if k % 2 == 0 else second
        out = factor if out is None else out @ factor
    return out


def verify_braid(gens: LieGenSet, i: int, j: int) -> bool:
    if i == j:
        raise ValueError("braid relation needs distinct nodes")
    m = braid_order(gens.datum, i, j)
    ni, nj = gens.n[i], gens.n[j]
    return _alternating(ni, nj, m) == _alternating(nj, ni, m)


def root_vector(gens: LieGenSet, alpha: Root) -> RootVector:
    """n_{i_1} ... n_{i_k} e_base n_{i_k}^-1 ... n_{i_1}^-1 along the stored word of alpha."""
    cache = gens._root_vectors
    if alpha.index in cache:
        return RootVector(alpha, cache[alpha.index])
    if not alpha.word:
        mat = gens.e[alpha.base]
    else:
        i1 = alpha.word[0]
        rest = gens.datum.root_of(simple_reflection(gens.datum, i1, alpha.weight))
        if rest is not None and rest.word == alpha.word[1:] and rest.base == alpha.base:
            inner = root_vector(gens, rest).matrix
        else:
            inner = gens.e[alpha.base]
            for j in reversed(alpha.word[1:]):
                inner = gens.n[j] @ inner @ gens.n_inv[j]
        mat = gens.n[i1] @ inner @ gens.n_inv[i1]
    cache[alpha.index] = mat
    return RootVector(alpha, mat)


def _scalar_multiple(a: SparseMatrix, b: SparseMatrix) -> Optional[int]:
    """The integer c with a == c b, for b with unit entries; None if there is none."""
    entries = list(b.entries())
    if not entries:
        raise ValueError("zero reference matrix")
    r, col, v = entries[0]
    c = a[r, col] * v  # v is +-1
    return c if a == b.scale(c) else None


def structure_constants(gens: LieGenSet) -> StructureConstants:
    datum = gens.datum
    vec = gens.all_root_vectors()
    sc = StructureConstants()
    for a in datum.roots:
        for b in datum.roots:
            if b.index == a.index or b.weight == tuple(-x for x in a.weight):
                continue
            s = datum.root_of(_add(a.weight, b.weight))
            if s is None:
                continue
            ea, eb = vec[a.index], vec[b.index]
            c = _scalar_multiple(commutator(ea, eb), vec[s.index])
            if c is None:
                raise InconsistentConstant(f"[e_{a}, e_{b}] is not a multiple of e_{s}")
            sc.c[a.index, b.index] = c
            s2 = datum.root_of(_add(s.weight, b.weight))
            if s2 is not None:
                cp = _scalar_multiple(eb @ ea @ eb, vec[s2.index])
                if cp is None:
                    raise InconsistentConstant(f"e_b e_a e_b is not a multiple of e_{s2}")
                sc.c_prime[a.index, b.index] = cp
            s3 = datum.root_of(_add(s.weight, a.weight))
            if s3 is not None:
                cpp = _scalar_multiple(ea @ eb @ ea, vec[s3.index])
                if cpp is None:
                    raise InconsistentConstant(f"e_a e_b e_a is not a multiple of e_{s3}")
                sc.c_dprime[a.index, b.index] = cpp
    return sc


def check_structure_constants(gens: LieGenSet, sc: StructureConstants) -> CheckReport:
    datum = gens.datum
    rep = CheckReport("structure constants")
    for (ia, ib), c in sc.c.items():
        a, b = datum.roots[ia], datum.roots[ib]
        diff_is_root = datum.is_root(_sub(a.weight, b.weight))
        rep.add(f"c({a},{b}) in {{+-1,+-2}}", c in (1, -1, 2, -2))
        rep.add(f"|c({a},{b})|=2 iff a-b root", (abs(c) == 2) == diff_is_root)
        rep.add(f"c({b},{a})=-c({a},{b})", sc.c.get((ib, ia)) == -c)
    for (ia, ib), c in list(sc.c_prime.items()) + list(sc.c_dprime.items()):
        rep.add(f"c'({datum.roots[ia]},{datum.roots[ib]}) = +-1", c in (1, -1))
    return rep


def lie_closure_dimension(gens: LieGenSet) -> int:
    """Dimension over Q of the Lie algebra generated by all e_i and f_i.

    Grows a spanning set by bracketing with the generators until no new
    independent matrix appears.
    """
    generators = [gens.e[i] for i in gens.datum.nodes] + [gens.f[i] for i in gens.datum.nodes]
    span = _Echelon()
    queue = []
    for g in generators:
        if span.insert(_flatten(g)):
            queue.append(g)
    while queue:
        x = queue.pop()
        for g in generators:
            y = commutator(g, x)
            if not y.is_zero() and span.insert(_flatten(y)):
                queue.append(y)
    return span.rank


def _flatten(m: SparseMatrix) -> dict:
    return {(r, c): Fraction(v) for r, c, v in m.entries()}


class _Echelon:
    """Incremental row echelon basis of sparse rational vectors."""

    def __init__(self):
        self.rows: dict = {}  # pivot key -> vector normalized to 1 at the pivot

    @property
    def rank(self) -> int:
        return len(self.rows)

    def insert(self, v: dict) -> bool:
        v = dict(v)
        while v:
            key = min(v)
            row = self.rows.get(key)
            if row is None:
                p = v[key]
                self.rows[key] = {k: x / p for k, x in v.items()}
                return True
            f = v[key]
            for k, x in row.items():
                nv = v.get(k, 0) - f * x
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return False


def _rank_over_q(mats: list[SparseMatrix]) -> int:
    ech = _Echelon()
    for m in mats:
        ech.insert(_flatten(m))
    return ech.rank


def verify_cartan_conjugation(gens: LieGenSet, i: int, j: int) -> bool:
    """n_i^-1 h_j n_i == h_j - a_ji h_i."""
    lhs = gens.n_inv[i] @ gens.h[j] @ gens.n[i]
    return lhs == gens.h[j] - gens.h[i].scale(gens.datum.a(j, i))


def verify_root_vector(gens: LieGenSet, alpha: Root) -> CheckReport:
    """Shape, nilpotence and weight-space membership of e_alpha."""
    m = gens.root_vector(alpha)
    basis = gens.basis
    rep = CheckReport(f"e_{alpha}")
    rep.add("entries +-1", all(v in (1, -1) for _, _, v in m.entries()))
    rows = [r for r, _, _ in m.entries()]
    cols = [c for _, c, _ in m.entries()]
    rep.add("one entry per row/col", len(set(rows)) == len(rows) and len(set(cols)) == len(cols))
    rep.add("square zero", (m @ m).is_zero())
    expected = set()
    for p, mu in enumerate(basis.weights):
        if alpha.pair(mu) == -1:
            expected.add((basis.index(_add(mu, alpha.weight)), p))
    rep.add("support", m.pattern() == expected)
    for j in gens.datum.nodes:
        rep.add(f"[h{j},e]", commutator(gens.h[j], m) == m.scale(alpha.weight[j - 1]))
    if alpha.positive:
        rep.add("strictly upper", m.is_strictly_upper())
    else:
        rep.add("strictly lower", m.is_strictly_lower())
    return rep
