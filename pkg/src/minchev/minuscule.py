"""Weyl orbits of minuscule weights and the ordered module basis they index."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import EmptySelection, InvalidSelection, NotMinuscule
from .exactring.smith import in_row_lattice, lattice_index, smith_normal_form
from .rootdata import LieType, RootDatum, Weight, height, root_basis_expansion, simple_reflection


def minuscule_nodes(lie_type: LieType) -> list[int]:
    n = lie_type.rank
    return {
        "A": list(range(1, n + 1)),
        "B": [1],
        "C": [n],
        "D": [1, 2, n],
        "E": [1, 6] if n == 6 else [7],
    }[lie_type.family]


def fundamental_weight(datum: RootDatum, i: int) -> Weight:
    return tuple(int(k == i) for k in datum.nodes)


def orbit(datum: RootDatum, i0: int) -> list[Weight]:
    """The Weyl orbit of the fundamental weight of node ``i0``.

    Returned in basis order: descending height, ties by descending coordinates.
    """
    if i0 not in minuscule_nodes(datum.lie_type):
        raise NotMinuscule(f"node {i0} is not minuscule in {datum.lie_type}")
    start = fundamental_weight(datum, i0)
    seen = {start}
    queue = deque([start])
    while queue:
        mu = queue.popleft()
        for j in datum.nodes:
            nu = simple_reflection(datum, j, mu)
            if nu not in seen:
                seen.add(nu)
                queue.append(nu)
    for mu in seen:
        for r in datum.positive_roots:
            if r.pair(mu) not in (-1, 0, 1):
                raise AssertionError(f"{mu} pairs to {r.pair(mu)} with the coroot of {r}")
    return _sorted(datum, seen)


def _sorted(datum: RootDatum, weights: Iterable[Weight]) -> list[Weight]:
    return sorted(weights, key=lambda mu: (-height(datum, mu), tuple(-x for x in mu)))


@dataclass(frozen=True)
class WeightBasis:
    datum: RootDatum
    nodes: tuple[int, ...]
    weights: tuple[Weight, ...]
    index_of: dict
    block_of: tuple[int, ...]
    height: tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return len(self.weights)

    def index(self, mu: Sequence[int]) -> Optional[int]:
        return self.index_of.get(tuple(mu))

    def __len__(self) -> int:
        return len(self.weights)

    def __hash__(self) -> int:
        return hash((self.datum.lie_type, self.nodes))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeightBasis) and (self.datum, self.nodes) == (other.datum, other.nodes)


def build_basis(datum: RootDatum, nodes: Sequence[int]) -> WeightBasis:
    nodes = tuple(nodes)
    if not nodes:
        raise EmptySelection("select at least one minuscule node")
    if len(set(nodes)) != len(nodes):
        raise InvalidSelection(f"duplicate nodes in {nodes}")
    block: dict[Weight, int] = {}
    for i0 in nodes:
        for mu in orbit(datum, i0):
            # W-orbits are disjoint or equal; keep the first label
            block.setdefault(mu, i0)
    weights = tuple(_sorted(datum, block))
    return WeightBasis(
        datum=datum,
        nodes=nodes,
        weights=weights,
        index_of={mu: k for k, mu in enumerate(weights)},
        block_of=tuple(block[mu] for mu in weights),
        height=tuple(height(datum, mu) for mu in weights),
    )


@dataclass(frozen=True)
class LatticeReport:
    contains_all_roots: bool
    simply_connected: bool
    index_in_lattice: Optional[int]  # None means infinite index


def lattice_report(datum: RootDatum, basis: WeightBasis) -> LatticeReport:
    rows = [list(mu) for mu in basis.weights]
    snf = smith_normal_form(rows)
    contains = all(in_row_lattice(datum.simple_root_weight(j), rows, snf) for j in datum.nodes)
    idx = lattice_index(rows)
    return LatticeReport(contains_all_roots=contains, simply_connected=idx == 1, index_in_lattice=idx)


def is_order_compatible(datum: RootDatum, basis: WeightBasis) -> bool:
    """No later weight lies strictly above an earlier one in the dominance order."""
    for p, mu in enumerate(basis.weights):
        for nu in basis.weights[p + 1:]:
            diff = root_basis_expansion(datum, [a - b for a, b in zip(nu, mu)])
            if all(x.denominator == 1 and x >= 0 for x in diff) and any(diff):
                return False
    return True
