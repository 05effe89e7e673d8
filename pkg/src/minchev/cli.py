"""Command-line interface: ``minchev <command> --type ... --nodes ... --ring ...``.

Exit status: 0 on success, 1 when a verification fails, 2 for invalid
input, 3 when an enumeration hits its cap.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from . import chevgroup as cg
from . import liealg
from .errors import (
    CapExceeded,
    FactorizationFailed,
    InconsistentConstant,
    MinchevError,
    NotUnipotent,
    VerificationError,
)
from .exactring.matrix import SparseMatrix
from .exactring.rings import Integers, IntPolynomial, PrimeField, Ring, parse_ring
from .minuscule import WeightBasis, build_basis, lattice_report, minuscule_nodes, orbit
from .rootdata import LieType, build_root_datum

EXIT_OK, EXIT_FAIL, EXIT_SPEC, EXIT_CAP = 0, 1, 2, 3
SUITES = ("serre", "braid", "commutator", "torus", "weyl", "all")


class SpecError(Exception):
    """Invalid command-line job."""


# ---------------------------------------------------------------- documents


@dataclass
class MatrixDocument:
    """JSON form of one matrix: entries as [row, col, value-string], sorted."""

    dim: int
    ring: str
    entries: list[list]
    basis: list[list[int]]
    metadata: dict = field(default_factory=dict)

    @classmethod
    def from_matrix(cls, m: SparseMatrix, basis: WeightBasis, **metadata: Any) -> "MatrixDocument":
        R = m.ring
        entries = [[r, c, R.format(v)] for r, c, v in sorted(m.entries(), key=lambda e: (e[0], e[1]))]
        return cls(m.dim, R.spec, entries, [list(mu) for mu in basis.weights], dict(metadata))

    def to_matrix(self) -> SparseMatrix:
        R = parse_ring(self.ring)
        return SparseMatrix(self.dim, R, [(r, c, R.parse(v)) for r, c, v in self.entries])

    def to_dict(self) -> dict:
        return {"dim": self.dim, "ring": self.ring, "entries": self.entries, "basis": self.basis, "metadata": self.metadata}

    @classmethod
    def from_dict(cls, d: dict) -> "MatrixDocument":
        try:
            return cls(int(d["dim"]), str(d["ring"]), [list(e) for e in d["entries"]],
                       [list(mu) for mu in d.get("basis", [])], dict(d.get("metadata", {})))
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError(f"malformed matrix document: {exc}") from exc


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------- job setup


def _parse_nodes(values: Optional[Sequence[str]]) -> list[int]:
    out = []
    for v in values or []:
        for part in str(v).split(","):
            if part.strip():
                try:
                    out.append(int(part))
                except ValueError:
                    raise SpecError(f"bad node {part!r}") from None
    return out


def _lie_type(args) -> LieType:
    if not args.type:
        raise SpecError("--type is required")
    return LieType.parse(args.type, args.rank)


def _basis(args) -> WeightBasis:
    lt = _lie_type(args)
    nodes = _parse_nodes(args.nodes) or minuscule_nodes(lt)[:1]
    return build_basis(build_root_datum(lt), nodes)


def _ring(args) -> Ring:
    try:
        return parse_ring(args.ring)
    except (ValueError, TypeError) as exc:
        raise SpecError(str(exc)) from exc


def _meta(basis: WeightBasis, **extra: Any) -> dict:
    lt = basis.datum.lie_type
    return {"type": lt.family, "rank": lt.rank, "nodes": list(basis.nodes), **extra}


def _h_parameter(R: Ring):
    """A fixed unit for h_i: the least primitive root over a prime field, else -1."""
    if isinstance(R, PrimeField):
        return R.generator
    return R.from_int(-1)


def generator_matrices(ctx: cg.GroupContext) -> list[tuple[str, str, SparseMatrix, dict]]:
    """(identifier, label, matrix, metadata) for the standard generator list."""
    R = ctx.ring
    one = R.one
    g = _h_parameter(R)
    out = []
    for i in ctx.datum.nodes:
        out.append((f"x{i}", f"x_{i}(1)", cg.gen_x(ctx, i, one).matrix, {"generator": f"x_{i}", "parameter": "1"}))
        out.append((f"y{i}", f"y_{i}(1)", cg.gen_y(ctx, i, one).matrix, {"generator": f"y_{i}", "parameter": "1"}))
        out.append((f"n{i}", f"n_{i}(1)", cg.gen_n(ctx, i, one).matrix, {"generator": f"n_{i}", "parameter": "1"}))
        out.append((f"h{i}", f"h_{i}({R.format(g)})", cg.gen_h(ctx, i, g).matrix,
                    {"generator": f"h_{i}", "parameter": R.format(g)}))
    for alpha in ctx.datum.roots:
        name = f"xr{alpha.index}"
        out.append((name, f"x_{alpha}(1)", cg.gen_x_root(ctx, alpha, one).matrix,
                    {"generator": f"x_{alpha}", "parameter": "1", "root": list(alpha.simple_expansion)}))
    return out


# ---------------------------------------------------------------- commands


def cmd_orbit(args, out) -> int:
    lt = _lie_type(args)
    datum = build_root_datum(lt)
    nodes = _parse_nodes(args.nodes)
    if len(nodes) != 1:
        raise SpecError("orbit takes exactly one node")
    weights = orbit(datum, nodes[0])
    out.write(dumps({"type": lt.family, "rank": lt.rank, "node": nodes[0], "size": len(weights),
                     "weights": [list(mu) for mu in weights]}) + "\n")
    return EXIT_OK


def cmd_generators(args, out) -> int:
    basis = _basis(args)
    ctx = cg.GroupContext(basis, _ring(args))
    docs = []
    for _, label, m, meta in generator_matrices(ctx):
        docs.append(MatrixDocument.from_matrix(m, basis, **_meta(basis, name=label, **meta)).to_dict())
    out.write(dumps({"documents": docs}) + "\n")
    return EXIT_OK


def _suite_reports(args, basis: WeightBasis) -> list[liealg.CheckReport]:
    suites = SUITES[:-1] if args.suite == "all" else (args.suite,)
    datum = basis.datum
    gens = liealg.LieGenSet(basis)
    reports = []
    if "serre" in suites:
        rep = liealg.verify_serre(gens)
        rep.add("closure dim = |roots| + rank",
                liealg.lie_closure_dimension(gens) == len(datum.roots) + datum.rank)
        reports.append(rep)
    if "braid" in suites:
        rep = liealg.CheckReport("braid")
        for i in datum.nodes:
            for j in datum.nodes:
                if i < j:
                    rep.add(f"braid({i},{j}) m={liealg.braid_order(datum, i, j)}", liealg.verify_braid(gens, i, j))
                rep.add(f"n{i}^-1 h{j} n{i}", liealg.verify_cartan_conjugation(gens, i, j))
        reports.append(rep)
    if "commutator" in suites:
        ctx = cg.GroupContext(basis, IntPolynomial(("t", "u")), gens)
        rep = liealg.check_structure_constants(gens, ctx.structure_constants)
        rep.title = "commutator"
        pos = datum.positive_roots
        for a in pos:
            for b in pos:
                if a.index != b.index:
                    rep.extend(cg.verify_commutator(ctx, a, b))
        reports.append(rep)
    if "torus" in suites:
        R = _ring(args)
        if not R.is_finite:
            R = PrimeField(5)
        ctx = cg.GroupContext(basis, R, gens)
        reports.append(cg.torus_suite(ctx, args.draws, random.Random(args.seed)))
    if "weyl" in suites:
        rep = liealg.CheckReport("weyl")
        ctx = cg.GroupContext(basis, Integers(), gens)
        rep.add("w -> n_w H injective", cg.weyl_lift_check(ctx, args.cap))
        reports.append(rep)
    return reports


def cmd_verify(args, out) -> int:
    basis = _basis(args)
    reports = _suite_reports(args, basis)
    ok = True
    for rep in reports:
        for name, passed in rep.results:
            if args.verbose or not passed:
                out.write(f"{'PASS' if passed else 'FAIL'}  {rep.title}: {name}\n")
        out.write(f"{'PASS' if rep.passed else 'FAIL'}  {rep.summary()}\n")
        ok = ok and rep.passed
    return EXIT_OK if ok else EXIT_FAIL


def cmd_center(args, out) -> int:
    basis = _basis(args)
    R = _ring(args)
    if not isinstance(R, PrimeField):
        raise SpecError("center needs --ring gfp:<p>")
    desc = cg.center(cg.GroupContext(basis, R))
    elements = [
        {"exponents": list(x), "diagonal": [R.format(v) for v in h.matrix.diagonal_values()]}
        for h, x in zip(desc.elements, desc.parameterizations)
    ]
    lat = lattice_report(basis.datum, basis)
    out.write(dumps({**_meta(basis), "ring": R.spec, "order": desc.order,
                     "invariant_factors": list(desc.invariant_factors), "generator": desc.generator,
                     "simply_connected": lat.simply_connected, "elements": elements}) + "\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    basis = _basis(args)
    R = _ring(args)
    if not isinstance(R, PrimeField):
        raise SpecError("enumerate needs --ring gfp:<p>")
    res = cg.enumerate_group(cg.GroupContext(basis, R), cap=args.cap)
    out.write(dumps({"order": res.order, "completed": res.completed}) + "\n")
    return EXIT_OK if res.completed else EXIT_CAP


def cmd_factorize(args, out) -> int:
    try:
        with open(args.input) as fh:
            doc = MatrixDocument.from_dict(json.load(fh))
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecError(f"cannot read {args.input}: {exc}") from exc
    meta = doc.metadata
    if "type" in meta:
        lt = LieType.parse(str(meta["type"]), meta.get("rank"))
    else:
        lt = _lie_type(args)
    nodes = meta.get("nodes") or _parse_nodes(args.nodes)
    basis = build_basis(build_root_datum(lt), nodes)
    if doc.dim != basis.dim:
        raise SpecError(f"document has dim {doc.dim}, basis has {basis.dim}")
    m = doc.to_matrix()
    ctx = cg.GroupContext(basis, m.ring)
    try:
        coeffs = cg.unipotent_factorize(ctx, m)
    except NotUnipotent as exc:
        raise SpecError(str(exc)) from exc
    except FactorizationFailed as exc:
        out.write(dumps({"factorized": False, "reason": str(exc)}) + "\n")
        return EXIT_FAIL
    roots = basis.datum.positive_roots_ordered()
    out.write(dumps({"factorized": True, "ring": m.ring.spec, "factors": [
        {"root": list(a.simple_expansion), "value": m.ring.format(t)} for a, t in zip(roots, coeffs)
    ]}) + "\n")
    return EXIT_OK


def gap_text(ctx: cg.GroupContext) -> str:
    """Generator matrices as ``name := [[...],...];`` lines with ``#`` comments."""
    R = ctx.ring
    fmt = R.pretty if isinstance(R, IntPolynomial) else R.format
    lines = [f"# {ctx.datum.lie_type} nodes {list(ctx.basis.nodes)} over {R.spec}, dim {ctx.dim}"]
    for name, label, m, _ in generator_matrices(ctx):
        rows = ",".join("[" + ",".join(fmt(v) for v in row) + "]" for row in m.to_dense())
        lines.append(f"# {label}")
        lines.append(f"{name} := [{rows}];")
    return "\n".join(lines) + "\n"


def cmd_export(args, out) -> int:
    basis = _basis(args)
    out.write(gap_text(cg.GroupContext(basis, _ring(args))))
    return EXIT_OK


COMMANDS = {
    "orbit": cmd_orbit,
    "generators": cmd_generators,
    "verify": cmd_verify,
    "center": cmd_center,
    "enumerate": cmd_enumerate,
    "factorize": cmd_factorize,
    "export": cmd_export,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse exits 2 already; keep the message on stderr
        self.print_usage(sys.stderr)
        raise SpecError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="family letter, or a full name such as E6")
    common.add_argument("--rank", type=int, help="rank, unless included in --type")
    common.add_argument("--nodes", "--node", nargs="+", help="minuscule node(s), e.g. 1 2 or 1,2")
    common.add_argument("--ring", default="int", help="int, rat, gfp:<p>, mod:<n> or poly:t,u")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = _Parser(prog="minchev", description="Chevalley groups from minuscule weights.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("orbit", parents=[common], help="Weyl orbit of a fundamental weight")
    sub.add_parser("generators", parents=[common], help="generator matrices as JSON documents")
    p = sub.add_parser("verify", parents=[common], help="run relation checks")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--draws", type=int, default=20, help="random draws for the torus suite")
    p.add_argument("--cap", type=int, default=10**5, help="Weyl group size cap")
    p.add_argument("-v", "--verbose", action="store_true", help="list passing checks too")
    sub.add_parser("center", parents=[common], help="center over a prime field")
    p = sub.add_parser("enumerate", parents=[common], help="group order by closure")
    p.add_argument("--cap", type=int, default=10**6)
    p = sub.add_parser("factorize", parents=[common], help="factor an upper unitriangular matrix")
    p.add_argument("--in", dest="input", required=True, help="matrix document (JSON)")
    p = sub.add_parser("export", parents=[common], help="generator matrices as text")
    p.add_argument("--format", choices=["gap"], default="gap")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except CapExceeded as exc:
        print(f"minchev: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (VerificationError, InconsistentConstant) as exc:
        print(f"minchev: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (SpecError, MinchevError) as exc:
        print(f"minchev: error: {exc}", file=sys.stderr)
        return EXIT_SPEC


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
