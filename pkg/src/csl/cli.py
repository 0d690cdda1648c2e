"""Command-line entry point ``csl``.

Every command prints one JSON document, ``{"status": "ok", "payload": ...}``
or ``{"status": "error", "error_code": ..., "message": ...}``, and exits with
0 or with the error's own exit code.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Callable

from csl.errors import CslError, ParseError, SuiteFailed
from csl.exact.normal_forms import snf
from csl.exact.rational import format_rational
from csl.factor_group import class_order, eta_of, eta_of_direction, is_in_kernel
from csl.gaussian import (
    coincidence_index_z2,
    enumerate_soc_z2,
    gauss_norm,
    soc_factorize,
    soc_matrix,
    sos_decompose,
    sos_square_to_soc,
)
from csl.jsonio import (
    gauss_from_json,
    gauss_rational_from_json,
    lattice_from_json,
    lattice_to_json,
    map_from_json,
    matrix_to_json,
    soc_to_json,
    sos_to_json,
)
from csl.lattice import (
    coincidence_index,
    coincidence_site_lattice,
    normalize_to_coincidence,
    validate_similarity,
)
from csl.verify import DEFAULT_SEED, SUITES, VerifyConfig, run_suite


@dataclass
class CommandResult:
    status: str
    payload: Any = None
    error_code: str | None = None
    message: str | None = None

    def to_json(self) -> dict:
        if self.status == "ok":
            return {"status": "ok", "payload": self.payload}
        return {"status": "error", "error_code": self.error_code, "message": self.message}


def _read_source(args: argparse.Namespace) -> str:
    if getattr(args, "expr", None) is not None:
        return args.expr
    source = getattr(args, "source", None)
    if source in (None, "-"):
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from exc


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}") from exc


def _load_literal_or_json(text: str) -> Any:
    text = text.strip()
    if text.startswith(("{", '"')):
        return _load_json(text)
    return text


def cmd_lattice_validate(obj: Any) -> dict:
    return lattice_to_json(lattice_from_json(obj))


def cmd_simmap_check(obj: Any) -> dict:
    lattice, t = map_from_json(obj)
    s = validate_similarity(lattice, t)
    eta = eta_of(s)
    sigma = coincidence_index(s)
    quotient = snf(coincidence_site_lattice(s)).diagonal
    payload = {
        "m": format_rational(s.multiplier),
        "eta": eta.squarefree_part,
        "eta_order": class_order(eta, lattice.dim),
        "sigma": [sigma.sigma1, sigma.sigma2],
        "csl_invariants": list(quotient),
        "in_soc": is_in_kernel(s),
    }
    if payload["in_soc"]:
        payload["rotation"] = matrix_to_json(normalize_to_coincidence(s).T)
    return payload


def cmd_soc_factorize(obj: Any) -> dict:
    q = gauss_rational_from_json(obj)
    f = soc_factorize(q)
    return {**soc_to_json(f), "sigma": coincidence_index_z2(f)}


def cmd_sos_decompose(obj: Any) -> dict:
    z = gauss_from_json(obj)
    s = sos_decompose(z)
    return {
        **sos_to_json(s),
        "eta": eta_of_direction(s).squarefree_part,
        "norm": gauss_norm(z),
        "square": soc_to_json(sos_square_to_soc(s)),
    }


def cmd_soc_enumerate(max_index: int) -> dict:
    if max_index < 1:
        raise ParseError("--max-index must be >= 1")
    elements = []
    for f in enumerate_soc_z2(max_index):
        q = f.reconstruct()
        elements.append(
            {
                **soc_to_json(f),
                "sigma": coincidence_index_z2(f),
                "q": str(q),
                "matrix": matrix_to_json(soc_matrix(q).T),
            }
        )
    return {"max_index": max_index, "count": len(elements), "elements": elements}


def cmd_verify(suite: str, seed: int, trials: int) -> dict:
    reports = run_suite(suite, VerifyConfig(seed=seed, trials=trials))
    payload = {
        "suite": suite,
        "seed": hex(seed),
        "passed": sum(r.passed for r in reports),
        "failed": sum(r.failed for r in reports),
        "suites": {
            r.suite: {"passed": r.passed, "failed": r.failed, "first_counterexample": r.first_counterexample}
            for r in reports
        },
    }
    if payload["failed"]:
        raise SuiteFailed(json.dumps(payload, sort_keys=True))
    return payload


# command -> the library operations it reaches (checked by the test suite)
COMMAND_TABLE: dict[str, tuple[str, ...]] = {
    "lattice validate": ("make_lattice",),
    "map check": (
        "validate_similarity", "coincidence_index", "coordinate_intersection", "index_of_sublattice",
        "hnf", "snf", "rat_inverse", "clear_denominators", "eta_of", "class_order", "is_in_kernel",
        "normalize_to_coincidence",
    ),
    "soc factorize": ("soc_factorize", "gauss_factor", "find_split_prime", "coincidence_index_z2"),
    "sos decompose": ("sos_decompose", "gauss_norm", "eta_of_direction", "sos_square_to_soc"),
    "soc enumerate": ("enumerate_soc_z2", "soc_matrix", "coincidence_index_z2"),
    "verify": (
        "is_commensurate", "lattice_intersection", "quad_arith", "compose", "invert", "class_mul",
        "gauss_gcd", "soc_factorize", "sos_square_to_soc",
    ),
}


def parse_seed(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a hexadecimal seed: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="csl", description="Coincidence and similarity rotations of lattices.")
    parser.add_argument("--json", action="store_true", default=True, help="JSON output (the only format)")
    parser.add_argument("--seed", type=parse_seed, default=DEFAULT_SEED, help="hex seed for verify suites")
    sub = parser.add_subparsers(dest="group", required=True)

    def with_source(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("source", nargs="?", help="input file, '-' or omitted for stdin")
        p.add_argument("-e", "--expr", help="inline input instead of a file")
        return p

    lat = sub.add_parser("lattice").add_subparsers(dest="action", required=True)
    with_source(lat.add_parser("validate", help="validate a lattice {dim, gram}"))

    mp = sub.add_parser("map").add_subparsers(dest="action", required=True)
    with_source(mp.add_parser("check", help="check a similarity map {T, lattice}"))

    soc = sub.add_parser("soc").add_subparsers(dest="action", required=True)
    with_source(soc.add_parser("factorize", help="factorize a unit-modulus Gaussian rational"))
    enum = soc.add_parser("enumerate", help="list coincidence rotations of Z^2 by index")
    enum.add_argument("--max-index", type=int, required=True)

    sos = sub.add_parser("sos").add_subparsers(dest="action", required=True)
    with_source(sos.add_parser("decompose", help="direction data of a nonzero Gaussian integer"))

    ver = sub.add_parser("verify", help="run a seeded property suite")
    ver.add_argument("suite", choices=[*SUITES, "all"])
    ver.add_argument("--trials", type=int, default=VerifyConfig.trials)
    return parser


def dispatch(args: argparse.Namespace) -> Any:
    key = args.group if args.group == "verify" else f"{args.group} {args.action}"
    handlers: dict[str, Callable[[], Any]] = {
        "lattice validate": lambda: cmd_lattice_validate(_load_json(_read_source(args))),
        "map check": lambda: cmd_simmap_check(_load_json(_read_source(args))),
        "soc factorize": lambda: cmd_soc_factorize(_load_literal_or_json(_read_source(args))),
        "sos decompose": lambda: cmd_sos_decompose(_load_literal_or_json(_read_source(args))),
        "soc enumerate": lambda: cmd_soc_enumerate(args.max_index),
        "verify": lambda: cmd_verify(args.suite, args.seed, args.trials),
    }
    return handlers[key]()


def run(argv: list[str] | None = None) -> tuple[CommandResult, int]:
    args = build_parser().parse_args(argv)
    try:
        return CommandResult("ok", dispatch(args)), 0
    except CslError as exc:
        return CommandResult("error", error_code=exc.code, message=str(exc)), exc.exit_code


def main(argv: list[str] | None = None) -> int:
    result, code = run(argv)
    json.dump(result.to_json(), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
