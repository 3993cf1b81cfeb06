"""Command-line entry point: ``orthogoval <subcommand> ...``.

Exit codes are 0 for success or a true verdict, 1 for a false verdict, 2 for
usage and input errors and 3 when a construction or search fails.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field

import numpy as np

import orthogoval as og
from orthogoval.exception import (
    OrthogovalError,
    OrthogovalException,
    SearchExhaustedError,
)

__all__ = ["RunConfig", "build_parser", "run", "main"]

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_FAILED = 0, 1, 2, 3

FAMILIES = ("cremona-pg", "pencil-ag", "phi-k", "ds13", "sts9-large", "matrix-power")

_GLOBAL_KEYS = ("command", "action", "verbose", "threads", "deterministic")


@dataclass(frozen=True)
class RunConfig:
    """A parsed command line.

    ``command`` is the subcommand path, e.g. ``("ca", "build")``; ``params``
    holds its options. With ``deterministic`` on, a missing seed means 0.
    """

    command: tuple
    params: dict = field(default_factory=dict)
    verbose: int = 0
    threads: int = None
    deterministic: bool = True

    @classmethod
    def from_namespace(cls, ns):
        values = vars(ns)
        command = (ns.command,) + ((ns.action,) if getattr(ns, "action", None) else ())
        params = {k: v for k, v in values.items() if k not in _GLOBAL_KEYS}
        return cls(command, params, ns.verbose, ns.threads, ns.deterministic)

    def seed(self):
        seed = self.params.get("seed")
        if seed is not None:
            return seed
        if self.deterministic:
            return 0
        return int(np.random.SeedSequence().entropy % 2**32)


def _emit(payload):
    print(json.dumps(payload, indent=1, sort_keys=True))


def _two_power(q):
    spec = og.ff_from_order(q)
    if spec.p != 2:
        raise OrthogovalError(f"this family needs q = 2^n, got {q}")
    return spec.n


def _construct(config):
    p = config.params
    family, q = p["family"], p["q"]
    if family == "cremona-pg":
        first, second, _ = og.cremona_pair(og.ff_from_order(q))
        planes = [first, second]
    elif family == "pencil-ag":
        first, second, _ = og.pencil_pair(_two_power(q))
        planes = [first, second]
    elif family == "phi-k":
        planes = og.phi_k_triple(_two_power(q), p["k"] or 1)
    elif family == "ds13":
        planes = og.ds_quadruple()
    elif family == "sts9-large":
        planes = og.large_set_sts9()
    else:
        if p["matrix"]:
            matrix = og.read_matrices(p["matrix"])[0]
        elif q in (4, 8):
            matrix = og.M4 if q == 4 else og.M6
        else:
            raise OrthogovalError("matrix-power needs --matrix unless q is 4 or 8")
        planes, report = og.matrix_power_planes(matrix, p["s"] or 7)
        og.write_planes(planes, p["out"])
        _emit({"planes": len(planes), **report.to_dict()})
        return EXIT_OK if report else EXIT_FALSE
    og.write_planes(planes, p["out"])
    _emit({"planes": len(planes), "provenance": [x.provenance for x in planes]})
    return EXIT_OK


def _verify(config):
    p = config.params
    planes = og.read_planes(p["input"])
    if len(planes) < 2:
        raise OrthogovalError("verification needs at least two planes")
    if p["except_line"] is not None:
        report = og.orthogoval_except_line(planes[0], planes[1], p["except_line"])
    elif p["mutual"]:
        report = og.is_mutually_orthogoval(planes)
    else:
        report = og.is_orthogoval_pair(planes[0], planes[1])
    payload = report.to_dict()
    try:
        payload["packing_bound"] = og.check_packing_bound(planes)
    except og.VerificationError as err:
        payload["packing_bound"] = str(err)
        report = False
    _emit(payload)
    return EXIT_OK if report else EXIT_FALSE


def _bounds(config):
    p = config.params
    if p["johnson"]:
        print(og.johnson_packing_bound(*p["johnson"]))
        return EXIT_OK
    if p["q"] is None:
        raise OrthogovalError("bounds needs --q or --johnson")
    bound = og.orthogoval_set_bound(p["q"], p["kind"])
    print("unbounded" if bound == og.UNBOUNDED else bound)
    return EXIT_OK


def _search_matrices(config):
    p = config.params
    seed = config.seed()
    logger.info("candidate search seed %d", seed)
    try:
        matrices = og.candidate_matrix_search(
            p["n"], p["count"], seed=seed, max_batches=p["max_batches"]
        )
    except SearchExhaustedError as err:
        if p["out"] and err.partial:
            og.write_matrices(err.partial, p["out"])
        raise
    if p["out"]:
        og.write_matrices(matrices, p["out"])
    else:
        print(og.format_matrices(matrices), end="")
    return EXIT_OK


def _search_clique(config):
    p = config.params
    if p["matrices"]:
        items = og.read_matrices(p["matrices"])
    elif p["planes"]:
        items = og.read_planes(p["planes"])
    else:
        raise OrthogovalError("search clique needs --planes or --matrices")
    graph = og.build_compat_graph(items)
    clique = og.max_clique(graph, target=p["target"])
    _emit(
        {
            "vertices": len(graph),
            "edges": graph.graph.number_of_edges(),
            "clique": clique,
            "size": len(clique),
        }
    )
    if p["target"] is not None and len(clique) < p["target"]:
        return EXIT_FALSE
    return EXIT_OK


def _search_ovals(config):
    p = config.params
    report = og.oval_planes_search(p["q"], mode=p["mode"], limit=p["limit"])
    _emit(report.to_dict())
    return EXIT_OK


def _scan_multipliers(config):
    _emit(og.multiplier_scan(config.params["limit"]))
    return EXIT_OK


def _cphf_build(config):
    p = config.params
    planes = og.read_planes(p["planes"])
    if p["rows"]:
        planes = planes[: p["rows"]]
    cphf = og.cphf_from_planes(planes)
    if p["extended"]:
        cphf = og.extend_scphf(cphf, planes)
    og.write_cphf(cphf, p["out"])
    _emit({"n": cphf.n, "k": cphf.k, "q": cphf.q, "index": cphf.index})
    return EXIT_OK


def _cphf_verify(config):
    p = config.params
    cphf = og.read_cphf(p["input"])
    index = og.verify_cphf(cphf)
    wanted = p["lambda_"]
    if wanted is None:
        wanted = cphf.n - 1 if cphf.index is None else cphf.index
    _emit({"index": index, "required": wanted})
    return EXIT_OK if index >= wanted else EXIT_FALSE


def _ca_build(config):
    p = config.params
    cphf = og.read_cphf(p["cphf"])
    if p["rows"]:
        cphf = cphf.take_rows(p["rows"])
    if p["extended"] != cphf.extended:
        raise OrthogovalError(
            f"--extended given as {p['extended']} but the CPHF has "
            f"extended={cphf.extended}"
        )
    if cphf.extended:
        ca = og.ca_from_extended_scphf(cphf, p["lambda_"])
    else:
        ca = og.ca_from_cphf(cphf, p["lambda_"])
    og.write_ca(ca, p["out"])
    print(ca)
    return EXIT_OK


def _ca_verify(config):
    p = config.params
    ca = og.read_ca(p["input"])
    report = og.verify_ca(ca, index=p["lambda_"])
    _emit(report.to_dict())
    return EXIT_OK if report else EXIT_FALSE


def _reproduce(config):
    p = config.params
    if p["list"] or not p["name"]:
        for entry in og.CATALOG.values():
            print(entry.describe())
        return EXIT_OK
    result = og.pipeline_reproduce(p["name"])
    N, k, v, lam = result.actual
    verified = bool(result.report)
    print(f"{result.entry.name}: CA_{lam}({N};3,{k},{v}) verified={verified}")
    if result.matches:
        return EXIT_OK
    for name, (expected, actual) in result.diff().items():
        print(f"{name}: expected {expected}, got {actual}", file=sys.stderr)
    if not result.report:
        print(f"coverage: {result.report.to_dict()}", file=sys.stderr)
    return EXIT_FALSE


def _design(config):
    p = config.params
    planes = og.read_planes(p["input"])
    payload = {"union": og.union_design_check(planes).to_dict()}
    if p["point"] is not None:
        blocks = [line for plane in planes for line in plane.lines]
        derived = og.derived_design(blocks, p["point"])
        payload["derived"] = {
            "point": derived.point,
            "blocks": len(derived.blocks),
            "resolvable": derived.resolvable,
            "parallel_classes": (
                len(derived.parallel_classes) if derived.resolvable else 0
            ),
        }
    _emit(payload)
    return EXIT_OK


_HANDLERS = {
    ("construct",): _construct,
    ("verify",): _verify,
    ("bounds",): _bounds,
    ("search", "matrices"): _search_matrices,
    ("search", "clique"): _search_clique,
    ("search", "ovals"): _search_ovals,
    ("scan", "multipliers"): _scan_multipliers,
    ("cphf", "build"): _cphf_build,
    ("cphf", "verify"): _cphf_verify,
    ("ca", "build"): _ca_build,
    ("ca", "verify"): _ca_verify,
    ("reproduce",): _reproduce,
    ("design",): _design,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="orthogoval",
        description="Orthogoval planes, CPHFs and strength-3 covering arrays.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"orthogoval {og.__version__} (format-version {og.FORMAT_VERSION})",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("--threads", type=int, help="worker processes")
    parser.add_argument(
        "--deterministic",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="seed 0 when --seed is absent (default: on)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("construct", help="build a family of orthogoval planes")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--matrix", help="matrix file for matrix-power")
    p.add_argument("--out", required=True)

    p = commands.add_parser("verify", help="check planes for orthogovality")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--mutual", action="store_true", help="check every pair")
    p.add_argument("--except-line", type=int, help="ignore this line of plane 0")

    p = commands.add_parser("bounds", help="upper bounds on orthogoval sets")
    p.add_argument("--q", type=int)
    p.add_argument("--kind", choices=(og.PROJECTIVE, og.AFFINE), default=og.PROJECTIVE)
    p.add_argument("--johnson", type=int, nargs=2, metavar=("V", "K"))

    search = commands.add_parser("search", help="matrix, clique and oval searches")
    actions = search.add_subparsers(dest="action", required=True)
    p = actions.add_parser("matrices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-batches", type=int, default=1000)
    p.add_argument("--out")
    p = actions.add_parser("clique")
    p.add_argument("--planes")
    p.add_argument("--matrices")
    p.add_argument("--target", type=int)
    p = actions.add_parser("ovals")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--mode", choices=("pair-test", "enumerate"), default="pair-test")
    p.add_argument("--limit", type=int)

    scan = commands.add_parser("scan", help="number-theoretic scans")
    actions = scan.add_subparsers(dest="action", required=True)
    p = actions.add_parser("multipliers")
    p.add_argument("--limit", type=int, required=True)

    cphf = commands.add_parser("cphf", help="covering perfect hash families")
    actions = cphf.add_subparsers(dest="action", required=True)
    p = actions.add_parser("build")
    p.add_argument("--planes", required=True)
    p.add_argument("--rows", type=int)
    p.add_argument("--extended", action="store_true")
    p.add_argument("--out", required=True)
    p = actions.add_parser("verify")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--lambda", dest="lambda_", type=int)

    ca = commands.add_parser("ca", help="covering arrays")
    actions = ca.add_subparsers(dest="action", required=True)
    p = actions.add_parser("build")
    p.add_argument("--cphf", required=True)
    p.add_argument("--lambda", dest="lambda_", type=int, default=1)
    p.add_argument("--rows", type=int, help="expand only the first ROWS CPHF rows")
    p.add_argument("--extended", action="store_true")
    p.add_argument("--out", required=True)
    p = actions.add_parser("verify")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--lambda", dest="lambda_", type=int)

    p = commands.add_parser("reproduce", help="rebuild a catalog covering array")
    p.add_argument("name", nargs="?")
    p.add_argument("--list", action="store_true")

    p = commands.add_parser("design", help="union and derived design reports")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--point", type=int)
    return parser


def run(config):
    """Execute `config` and return the exit code."""
    if config.threads:
        os.environ["ORTHOGOVAL_N_JOBS"] = str(config.threads)
    handler = _HANDLERS.get(config.command)
    if handler is None:
        command = " ".join(config.command)
        print(f"orthogoval: unknown command {command}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return handler(config)
    except OrthogovalError as err:
        print(f"orthogoval: {err}", file=sys.stderr)
        return EXIT_USAGE
    except OrthogovalException as err:
        print(f"orthogoval: {err}", file=sys.stderr)
        return EXIT_FAILED


def main(argv=None):
    args = build_parser().parse_args(argv)
    levels = [logging.WARNING, logging.INFO, logging.DEBUG]
    logging.basicConfig(
        level=levels[min(args.verbose, 2)],
        format="%(levelname)s %(name)s: %(message)s",
    )
    return run(RunConfig.from_namespace(args))
