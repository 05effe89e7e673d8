"""Shared instance lists and constructors for the test modules."""

from __future__ import annotations

from minchev.chevgroup import GroupContext
from minchev.exactring.rings import parse_ring
from minchev.minuscule import build_basis
from minchev.rootdata import build_root_datum


def small_instances():
    """(type, node) pairs covering every minuscule diagram up to moderate rank."""
    out = []
    for n in range(1, 7):
        out += [(f"A{n}", i) for i in range(1, n + 1)]
    for n in (2, 3, 4):
        out += [(f"B{n}", 1), (f"C{n}", n)]
    for n in (3, 4, 5):
        out += [(f"D{n}", i) for i in (1, 2, n)]
    out += [("E6", 1), ("E6", 6), ("E7", 7)]
    return out


def make_basis(lie_type, nodes):
    return build_basis(build_root_datum(lie_type), list(nodes))


def make_ctx(lie_type, nodes, ring="int"):
    return GroupContext(make_basis(lie_type, nodes), parse_ring(ring))
