"""Cartan matrices, weight arithmetic and root enumeration.

Weights are integer tuples in the fundamental-weight basis, so the i-th
coordinate of a weight is its pairing with the simple coroot of node i+1.
Nodes are labelled 1..rank as in the standard minuscule-weight diagrams;
for B_n node 1 is the short end and for C_n node n is the short end.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

from .errors import RankOutOfRange
from .exactring.smith import rational_inverse

Weight = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        if f in _MIN_RANK:
            ok = isinstance(n, int) and n >= _MIN_RANK[f]
        elif f == "E":
            ok = n in (6, 7)
        else:
            ok = False
        if not ok:
            raise RankOutOfRange(f"no minuscule diagram of type {f}{n}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: Union[str, "LieType"], rank: Optional[int] = None) -> "LieType":
        """Accept ``"E6"``, ``"B3"``, ``("B", 3)`` style inputs."""
        if isinstance(text, LieType):
            return text
        m = re.fullmatch(r"\s*([A-Za-z])\s*(\d*)\s*", text)
        if not m:
            raise RankOutOfRange(f"cannot parse Lie type {text!r}")
        family = m.group(1).upper()
        if m.group(2):
            parsed = int(m.group(2))
            if rank is not None and rank != parsed:
                raise RankOutOfRange(f"rank {rank} conflicts with {text!r}")
            rank = parsed
        if rank is None:
            raise RankOutOfRange(f"missing rank for type {family}")
        return cls(family, rank)


def _edges(lt: LieType) -> list[tuple[int, int]]:
    n = lt.rank
    if lt.family in "ABC":
        return [(k, k + 1) for k in range(1, n)]
    if lt.family == "D":
        return [(1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n)]
    return [(1, 3), (3, 4), (2, 4)] + [(k, k + 1) for k in range(4, n)]


def cartan_matrix(lt: LieType) -> tuple[tuple[int, ...], ...]:
    """Entries ``a[i][j] = (alpha_j, alpha_i^vee)``, 0-based indices."""
    n = lt.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(lt):
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    if lt.family == "B":
        a[0][1] = -2  # node 1 short
    elif lt.family == "C":
        a[1][0] = -2  # node 1 long
    return tuple(map(tuple, a))


def expected_positive_root_count(lt: LieType) -> int:
    n = lt.rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63}.get(n, 0),
    }[lt.family]


@dataclass(frozen=True)
class Root:
    """A root with its chosen reduced description ``s_{i_1}...s_{i_k}(alpha_base)``."""

    index: int
    weight: Weight
    base: int
    word: tuple[int, ...]
    positive: bool
    simple_expansion: tuple[int, ...]
    coroot: tuple[int, ...] = field(compare=False)  # alpha^vee in the simple-coroot basis

    @property
    def height(self) -> int:
        return sum(self.simple_expansion)

    def pair(self, mu: Sequence[int]) -> int:
        """The pairing (mu, alpha^vee)."""
        return sum(m * c for m, c in zip(mu, self.coroot))

    def __str__(self) -> str:
        terms = []
        for j, m in enumerate(self.simple_expansion, start=1):
            if m:
                terms.append(f"{'' if abs(m) == 1 else abs(m)}a{j}")
        sign = "" if self.positive else "-"
        return sign + "(" + "+".join(terms) + ")" if len(terms) > 1 else sign + terms[0]


@dataclass(frozen=True)
class RootDatum:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[Root, ...]
    addition_table: dict
    inverse_cartan: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def a(self, i: int, j: int) -> int:
        """Cartan entry a_ij = (alpha_j, alpha_i^vee) for 1-based nodes."""
        return self.cartan[i - 1][j - 1]

    def simple_root_weight(self, j: int) -> Weight:
        return tuple(self.cartan[i][j - 1] for i in range(self.rank))

    def simple_root(self, j: int) -> Root:
        return self.roots[self.addition_table[self.simple_root_weight(j)]]

    def root_of(self, weight: Sequence[int]) -> Optional[Root]:
        k = self.addition_table.get(tuple(weight))
        return None if k is None else self.roots[k]

    def is_root(self, weight: Sequence[int]) -> bool:
        return tuple(weight) in self.addition_table

    def negative(self, alpha: Root) -> Root:
        return self.roots[self.addition_table[tuple(-x for x in alpha.weight)]]

    @property
    def positive_roots(self) -> list[Root]:
        return [r for r in self.roots if r.positive]

    def positive_roots_ordered(self) -> list[Root]:
        """Positive roots by increasing height, ties by descending simple-root expansion."""
        return sorted(self.positive_roots, key=lambda r: (r.height, tuple(-m for m in r.simple_expansion)))

    def __hash__(self) -> int:
        return hash(self.lie_type)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootDatum) and other.lie_type == self.lie_type


def simple_reflection(datum: RootDatum, j: int, mu: Sequence[int]) -> Weight:
    """s_j(mu) = mu - (mu, alpha_j^vee) alpha_j."""
    c = mu[j - 1]
    if not c:
        return tuple(mu)
    col = j - 1
    return tuple(m - c * datum.cartan[i][col] for i, m in enumerate(mu))


def _reflect_raw(cartan, j: int, mu: Sequence[int]) -> Weight:
    c = mu[j - 1]
    if not c:
        return tuple(mu)
    return tuple(m - c * cartan[i][j - 1] for i, m in enumerate(mu))


def pairing_with_coroot(datum: RootDatum, mu: Sequence[int], alpha: Root) -> int:
    """(mu, alpha^vee) from the word of alpha, without an inner product.

    With alpha = w(alpha_b) the pairing equals (w^-1 mu, alpha_b^vee).
    """
    return _pair_by_word(datum.cartan, mu, alpha.word, alpha.base)


def _pair_by_word(cartan, mu, word, base) -> int:
    v = tuple(mu)
    for j in word:
        v = _reflect_raw(cartan, j, v)
    return v[base - 1]


def root_sum(datum: RootDatum, alpha: Root, beta: Root) -> Optional[Root]:
    return datum.root_of(tuple(x + y for x, y in zip(alpha.weight, beta.weight)))


def root_basis_expansion(datum: RootDatum, mu: Sequence[int]) -> tuple[Fraction, ...]:
    """Coefficients r with mu = sum_j r_j alpha_j."""
    inv = datum.inverse_cartan
    return tuple(sum((inv[j][i] * m for i, m in enumerate(mu)), Fraction(0)) for j in range(len(mu)))


def height(datum: RootDatum, mu: Sequence[int]) -> Fraction:
    return sum(root_basis_expansion(datum, mu), Fraction(0))


def _enumerate_roots(cartan, rank: int):
    """Breadth-first closure of the simple roots under simple reflections.

    Every root keeps the lexicographically least word among its shortest ones
    (compared on ``word + (base,)``).
    """
    def simple_weight(j):
        return tuple(cartan[i][j - 1] for i in range(rank))

    info = {}  # weight -> (word, base, simple_expansion)
    frontier = {}
    for j in range(1, rank + 1):
        e = tuple(int(k == j) for k in range(1, rank + 1))
        frontier[simple_weight(j)] = ((), j, e)
    order = []
    while frontier:
        for w in sorted(frontier, key=lambda w: frontier[w][0] + (frontier[w][1],)):
            info[w] = frontier[w]
            order.append(w)
        nxt = {}
        for w in order[len(order) - len(frontier):]:
            word, base, expn = info[w]
            for j in range(1, rank + 1):
                v = _reflect_raw(cartan, j, w)
                if v in info:
                    continue
                c = w[j - 1]
                new_exp = tuple(m - c * int(k == j) for k, m in enumerate(expn, start=1))
                cand = ((j,) + word, base, new_exp)
                old = nxt.get(v)
                if old is None or cand[0] + (cand[1],) < old[0] + (old[1],):
                    nxt[v] = cand
        frontier = nxt
    return order, info


@lru_cache(maxsize=None)
def build_root_datum(lie_type: Union[LieType, str]) -> RootDatum:
    lt = LieType.parse(lie_type)
    cartan = cartan_matrix(lt)
    n = lt.rank
    order, info = _enumerate_roots(cartan, n)
    # canonical order: positive roots by (height, expansion), then their negatives
    pos = sorted((w for w in order if sum(info[w][2]) > 0), key=lambda w: (sum(info[w][2]), tuple(-m for m in info[w][2])))
    neg = [tuple(-x for x in w) for w in pos]
    roots = []
    table = {}
    for k, w in enumerate(pos + neg):
        word, base, expn = info[w]
        if not (all(m >= 0 for m in expn) or all(m <= 0 for m in expn)):
            raise AssertionError(f"mixed-sign root expansion {expn}")
        coroot = tuple(_pair_by_word(cartan, _unit(i, n), word, base) for i in range(n))
        roots.append(Root(k, w, base, word, sum(expn) > 0, expn, coroot))
        table[w] = k
    inv = tuple(map(tuple, rational_inverse(cartan)))
    datum = RootDatum(lt, cartan, tuple(roots), table, inv)
    _check_orientation(datum)
    return datum


def _unit(i: int, n: int) -> Weight:
    return tuple(int(k == i) for k in range(n))


def _check_orientation(datum: RootDatum) -> None:
    """The minuscule end of B_n / C_n must pair to 0 or 1 with every positive coroot."""
    lt = datum.lie_type
    if lt.family not in "BC":
        return
    i0 = 1 if lt.family == "B" else lt.rank
    varpi = tuple(int(k == i0) for k in datum.nodes)
    for r in datum.positive_roots:
        if r.pair(varpi) not in (0, 1):
            raise AssertionError(f"{lt}: node {i0} is not minuscule; Cartan orientation is wrong")
