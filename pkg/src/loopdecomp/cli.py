"""Command-line surface: classify, decompose, verify.

All input and output documents are single JSON files.  Input complexes are
{"m": int, "facets": [[int, ...], ...]}; custom pair data is
{"suspensions": [[dims...] per vertex]}.  Exit codes: 0 success, 1 input
error, 2 inadmissible complex, 3 internal-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from random import Random

from .complexes import (
    BadIndex,
    DominatingVertex,
    GhostVertex,
    SimplicialComplex,
    classify_input,
    validate_complex,
)
from .engine import NotFlagSkeleton, PairSpec, decompose_loop, trace_to_doc
from .homotopy import NoSolution, NotADivisor, NotCanonicalP
from .intlinalg import (
    NotIdempotent,
    idempotent_split,
    primitive_bezout,
    random_idempotent,
)
from .oracle import NotApplicable, TooLarge, verify_against_oracle
from .series import DEFAULT_DEGREE

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INADMISSIBLE = 2
EXIT_INTERNAL = 3

_INPUT_ERRORS = (BadIndex, GhostVertex, json.JSONDecodeError, OSError, KeyError)
_INADMISSIBLE_ERRORS = (NotFlagSkeleton, NotApplicable, DominatingVertex, TooLarge)
_INTERNAL_ERRORS = (NotCanonicalP, NotADivisor, NoSolution)


@dataclass
class JobSpec:
    command: str
    input_path: str | None = None
    pairs: str = "moment-angle"
    cutoff: int = DEFAULT_DEGREE
    trace: bool = False
    output_path: str | None = None
    linalg: bool = False
    random_count: int = 100
    seed: int = 0

    def __post_init__(self):
        if self.cutoff < 1:
            raise ValueError("cutoff must be >= 1")


def load_complex(path: str) -> SimplicialComplex:
    with open(path) as handle:
        doc = json.load(handle)
    return validate_complex(doc["facets"], doc["m"])


def resolve_pairs(spec: str, m: int) -> PairSpec:
    if spec == "moment-angle":
        return PairSpec.moment_angle(m)
    if spec.startswith("disks:"):
        dim = int(spec.split(":", 1)[1])
        return PairSpec.disks(dim, m)
    if spec.startswith("custom:"):
        with open(spec.split(":", 1)[1]) as handle:
            doc = json.load(handle)
        dims = doc["suspensions"]
        if len(dims) != m:
            raise ValueError(f"custom pairs cover {len(dims)} vertices, need {m}")
        return PairSpec.from_suspension_dims(dims)
    raise ValueError(f"unknown pair spec {spec!r}")


def _emit(doc: dict, output_path: str | None) -> None:
    text = json.dumps(doc, indent=2)
    if output_path:
        with open(output_path, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def cmd_check(job: JobSpec) -> int:
    K = load_complex(job.input_path)
    cls = classify_input(K)
    _emit(
        {
            "command": "check",
            "input": K.to_doc(),
            "flag": cls.flag,
            "k_skeleton_of_flag": cls.k_skeleton_of_flag,
            "skeleton_of_simplex": list(cls.skeleton_of_simplex)
            if cls.skeleton_of_simplex
            else None,
            "chordal_1_skeleton": cls.chordal_1_skeleton,
            "admissible": cls.k_skeleton_of_flag is not None,
        },
        job.output_path,
    )
    return EXIT_OK


def cmd_decompose(job: JobSpec) -> int:
    K = load_complex(job.input_path)
    pairs = resolve_pairs(job.pairs, K.m)
    product, trace = decompose_loop(K, pairs, job.cutoff)
    doc = {
        "command": "decompose",
        "input": K.to_doc(),
        "pairs": job.pairs,
        "cutoff": job.cutoff,
        **product.to_doc(),
        "expansion": list(product.series.expand(job.cutoff)),
    }
    if job.trace:
        doc["trace"] = trace_to_doc(trace)
    _emit(doc, job.output_path)
    return EXIT_OK


def _split_idempotent_entry(index, matrix) -> dict | None:
    try:
        split = idempotent_split(matrix)
    except NotIdempotent as exc:
        return {"index": index, "status": "FAIL", "detail": str(exc)}
    ok = split.determinant in (1, -1) and len(split.null_basis) + len(
        split.col_basis
    ) == len(matrix)
    return None if ok else {"index": index, "status": "FAIL"}


def _linalg_report(job: JobSpec) -> dict:
    checks = []
    doc = {"command": "verify", "mode": "linalg"}
    if job.input_path:
        with open(job.input_path) as handle:
            matrices = json.load(handle)["matrices"]
        doc["matrices"] = len(matrices)
        for index, matrix in enumerate(matrices):
            entry = _split_idempotent_entry(index, matrix)
            if entry:
                checks.append(entry)
    else:
        rng = Random(job.seed)
        doc["random"] = job.random_count
        doc["seed"] = job.seed
        for index in range(job.random_count):
            n = rng.randint(1, 6)
            entry = _split_idempotent_entry(index, random_idempotent(n, rng))
            if entry:
                checks.append(entry)
            vector = [rng.randint(-9, 9) for _ in range(n)]
            if any(vector):
                cert = primitive_bezout(vector)
                ok = sum(c * x for c, x in zip(cert.coefficients, vector)) == cert.gcd
                if cert.primitive:
                    ok = ok and cert.odd_component
                if not ok:
                    checks.append({"index": index, "status": "FAIL"})
    doc["failures"] = checks
    doc["status"] = "PASS" if not checks else "FAIL"
    return doc


def cmd_verify(job: JobSpec) -> int:
    if job.linalg:
        doc = _linalg_report(job)
        _emit(doc, job.output_path)
        return EXIT_OK if doc["status"] == "PASS" else EXIT_INTERNAL
    K = load_complex(job.input_path)
    pairs = resolve_pairs(job.pairs, K.m)
    report = verify_against_oracle(K, pairs, job.cutoff)
    doc = {"command": "verify", "input": K.to_doc(), "pairs": job.pairs, "cutoff": job.cutoff}
    doc.update(report.to_doc())
    _emit(doc, job.output_path)
    return EXIT_OK if report.passed else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopdecomp",
        description="Loop space decompositions of polyhedral products over "
        "skeleta of flag complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("check", "decompose", "verify"):
        p = sub.add_parser(name)
        p.add_argument("--input", dest="input_path")
        p.add_argument("--pairs", default="moment-angle")
        p.add_argument("--cutoff", type=int, default=DEFAULT_DEGREE)
        p.add_argument("--output", dest="output_path")
        if name == "decompose":
            p.add_argument("--trace", action="store_true")
        if name == "verify":
            p.add_argument("--linalg", action="store_true")
            p.add_argument("--random", dest="random_count", type=int, default=100)
            p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    spec = JobSpec(**vars(args))
    if spec.command != "verify" and spec.input_path is None:
        print("error: --input is required", file=sys.stderr)
        return EXIT_INPUT
    if spec.command == "verify" and not spec.linalg and spec.input_path is None:
        print("error: --input is required without --linalg", file=sys.stderr)
        return EXIT_INPUT
    handler = {"check": cmd_check, "decompose": cmd_decompose, "verify": cmd_verify}[
        spec.command
    ]
    try:
        return handler(spec)
    except _INADMISSIBLE_ERRORS as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except _INTERNAL_ERRORS as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except _INPUT_ERRORS as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
