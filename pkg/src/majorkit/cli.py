"""Command-line interface.

Exit codes: 0 when the command succeeds (and any queried relation
holds), 1 when a decidable query answers "no", 2 on usage, parse, or
precondition errors, 3 if a certificate fails its exact re-verification
(which would indicate a bug, never bad input).  ``--json`` mirrors each
report as machine-readable JSON with rationals rendered as ``p/q``
strings.  All output is deterministic: same inputs, same bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .birkhoff import birkhoff_decompose, reconstruct
from .core import (
    Matrix,
    Vector,
    format_matrix,
    format_rational,
    format_vector,
    read_matrix,
    read_vector,
)
from .errors import (
    DimensionMismatch,
    GroupTooLarge,
    NegativeInput,
    NotDecreasing,
    NotDoublyStochastic,
    NotMajorized,
    NotMember,
    ParseError,
    SubgroupUnsupported,
    VerificationError,
)
from .majorization import (
    DEFAULT_SORT_LIMIT,
    all_sorting_permutations,
    compare,
    decreasing_rearrangement,
    majorizes,
)
from .permutohedron import (
    DEFAULT_GROUP_CAP,
    PermutohedronSpec,
    affine_dimension,
    evaluate_certificate,
    is_member,
    membership_certificate,
    vertices,
)
from .stochastic import Permutation, StochasticClass, classify_stochastic
from .transform import transfer_chain

__all__ = ["build_parser", "main"]


def _vec_payload(v: Vector) -> list[str]:
    return [format_rational(e) for e in v]


def _mat_payload(m: Matrix) -> list[list[str]]:
    return [[format_rational(e) for e in row] for row in m.rows]


def _perm_payload(p: Permutation) -> dict:
    return {"cycles": p.cycle_string(), "images": list(p.images)}


def _emit(args: argparse.Namespace, text_lines: list[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _cmd_check(args: argparse.Namespace) -> int:
    a = read_vector(args.a)
    b = read_vector(args.b)
    holds = majorizes(a, b)
    payload = {
        "command": "check",
        "a": _vec_payload(a),
        "b": _vec_payload(b),
        "holds": holds,
    }
    _emit(args, ["b ⪯ a" if holds else "not (b ⪯ a)"], payload)
    return 0 if holds else 1


def _cmd_sort(args: argparse.Namespace) -> int:
    v = read_vector(args.vector)
    sorted_v, witness = decreasing_rearrangement(v)
    payload = {
        "command": "sort",
        "input": _vec_payload(v),
        "sorted": _vec_payload(sorted_v),
        "witness": _perm_payload(witness),
    }
    _emit(args, [format_vector(sorted_v), f"witness: {witness.cycle_string()}"], payload)
    return 0


def _cmd_sortall(args: argparse.Namespace) -> int:
    v = read_vector(args.vector)
    limit = args.cap if args.cap is not None else DEFAULT_SORT_LIMIT
    perms = all_sorting_permutations(v, limit=limit)
    lines = [p.cycle_string() for p in perms]
    truncated = len(perms) >= limit
    if truncated:
        lines.append(f"# truncated at {limit}")
    payload = {
        "command": "sortall",
        "input": _vec_payload(v),
        "witnesses": [_perm_payload(p) for p in perms],
        "truncated": truncated,
    }
    _emit(args, lines, payload)
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    a = read_vector(args.a)
    b = read_vector(args.b)
    verdict = compare(a, b)
    payload = {
        "command": "compare",
        "a": _vec_payload(a),
        "b": _vec_payload(b),
        "relation": verdict.relation.value,
        "prefix_gaps": [format_rational(g) for g in verdict.prefix_gaps],
    }
    _emit(
        args,
        [
            f"relation: {verdict.relation.value}",
            "prefix-gaps: " + " ".join(format_rational(g) for g in verdict.prefix_gaps),
        ],
        payload,
    )
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    m = read_matrix(args.matrix)
    cls = classify_stochastic(m)
    payload = {"command": "classify", "class": cls.value}
    _emit(args, [cls.value], payload)
    return 0 if cls is not StochasticClass.NOT_STOCHASTIC else 1


def _cmd_apply(args: argparse.Namespace) -> int:
    m = read_matrix(args.matrix)
    v = read_vector(args.vector)
    result = m.apply(v)
    payload = {"command": "apply", "result": _vec_payload(result)}
    _emit(args, [format_vector(result)], payload)
    return 0


def _cmd_pmat(args: argparse.Namespace) -> int:
    sigma = Permutation.from_cycles(args.cycles, args.n)
    m = sigma.matrix()
    payload = {
        "command": "pmat",
        "permutation": _perm_payload(sigma),
        "matrix": _mat_payload(m),
    }
    _emit(args, format_matrix(m).splitlines(), payload)
    return 0


def _cmd_chain(args: argparse.Namespace) -> int:
    a = read_vector(args.a)
    b = read_vector(args.b)
    try:
        chain = transfer_chain(a, b)
    except NotMajorized:
        _emit(args, ["not majorized"], {"command": "chain", "holds": False})
        return 1
    composed = chain.matrix()
    if not chain.verify() or composed.apply(a) != b:
        raise VerificationError("transfer chain failed exact re-verification")
    if classify_stochastic(composed) is not StochasticClass.DOUBLY_STOCHASTIC:
        raise VerificationError("composed chain matrix is not doubly stochastic")
    step_lines = [
        f"{s.k} {s.l} {format_rational(s.weight)}" for s in chain.steps
    ]
    matrix_lines = format_matrix(composed).splitlines()
    if args.emit_steps and args.emit_matrix:
        lines = step_lines + [""] + matrix_lines
    elif args.emit_steps:
        lines = step_lines
    elif args.emit_matrix:
        lines = matrix_lines
    else:
        lines = [
            f"steps: {len(chain.steps)}",
            f"pre-sort: {chain.pre_sort.cycle_string()}",
            f"post-sort: {chain.post_sort.cycle_string()}",
        ] + [
            f"step {i}: k={s.k} l={s.l} weight={format_rational(s.weight)}"
            for i, s in enumerate(chain.steps, start=1)
        ]
    payload = {
        "command": "chain",
        "holds": True,
        "a": _vec_payload(a),
        "b": _vec_payload(b),
        "pre_sort": _perm_payload(chain.pre_sort),
        "post_sort": _perm_payload(chain.post_sort),
        "steps": [
            {"k": s.k, "l": s.l, "weight": format_rational(s.weight)} for s in chain.steps
        ],
        "matrix": _mat_payload(composed),
    }
    _emit(args, lines, payload)
    return 0


def _cmd_birkhoff(args: argparse.Namespace) -> int:
    m = read_matrix(args.matrix)
    decomposition = birkhoff_decompose(m)
    if reconstruct(decomposition) != m:
        raise VerificationError("decomposition failed exact reconstruction")
    lines = [
        f"{format_rational(w)} {p.cycle_string()}" for w, p in decomposition.terms
    ]
    if args.verify:
        lines.append("verified: exact reconstruction")
    payload = {
        "command": "birkhoff",
        "terms": [
            {"weight": format_rational(w), **_perm_payload(p)} for w, p in decomposition.terms
        ],
        "verified": True,
    }
    _emit(args, lines, payload)
    return 0


def _cmd_vertices(args: argparse.Namespace) -> int:
    base = read_vector(args.vector)
    generators = None
    if args.group:
        generators = tuple(Permutation.from_cycles(text, len(base)) for text in args.group)
    spec = PermutohedronSpec(base=base, generators=generators)
    points = sorted(vertices(spec, cap=args.cap), key=lambda v: v.entries)
    payload = {
        "command": "vertices",
        "count": len(points),
        "vertices": [_vec_payload(p) for p in points],
    }
    _emit(args, [format_vector(p) for p in points], payload)
    return 0


def _cmd_member(args: argparse.Namespace) -> int:
    a = read_vector(args.a)
    b = read_vector(args.b)
    spec = PermutohedronSpec(base=a)
    member = is_member(spec, b)
    if not member:
        _emit(args, ["not a member"], {"command": "member", "member": False})
        return 1
    payload: dict = {"command": "member", "member": True}
    lines = ["member"]
    if args.certificate:
        certificate = membership_certificate(spec, b)
        if evaluate_certificate(certificate, a) != b:
            raise VerificationError("membership certificate failed exact evaluation")
        lines += [
            f"{format_rational(w)} {p.cycle_string()}" for w, p in certificate.terms
        ]
        payload["certificate"] = [
            {"weight": format_rational(w), **_perm_payload(p)} for w, p in certificate.terms
        ]
    _emit(args, lines, payload)
    return 0


def _cmd_affdim(args: argparse.Namespace) -> int:
    m = read_matrix(args.points)
    points = [Vector(row) for row in m.rows]
    dim = affine_dimension(points)
    payload = {"command": "affdim", "dimension": dim}
    _emit(args, [str(dim)], payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="majorkit",
        description="Exact majorization, doubly stochastic matrices, and permutohedra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit a JSON report instead of text")
        p.set_defaults(handler=handler)
        return p

    p = add("check", _cmd_check, "decide whether the first vector majorizes the second")
    p.add_argument("a")
    p.add_argument("b")

    p = add("sort", _cmd_sort, "decreasing rearrangement with a sorting witness")
    p.add_argument("vector")

    p = add("sortall", _cmd_sortall, "every permutation that sorts the vector")
    p.add_argument("vector")
    p.add_argument("--cap", type=int, default=None, help=f"maximum witnesses to emit (default {DEFAULT_SORT_LIMIT})")

    p = add("compare", _cmd_compare, "full majorization verdict with prefix gaps")
    p.add_argument("a")
    p.add_argument("b")

    p = add("classify", _cmd_classify, "stochastic class of a matrix (exit 1 if not stochastic)")
    p.add_argument("matrix")

    p = add("apply", _cmd_apply, "multiply a matrix into a vector")
    p.add_argument("matrix")
    p.add_argument("vector")

    p = add("pmat", _cmd_pmat, "permutation matrix from cycle notation")
    p.add_argument("cycles")
    p.add_argument("n", type=int)

    p = add("chain", _cmd_chain, "transfer chain certifying b ⪯ a")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--emit-steps", action="store_true", help="print one 'k l weight' line per step")
    p.add_argument("--emit-matrix", action="store_true", help="print the composed doubly stochastic matrix")

    p = add("birkhoff", _cmd_birkhoff, "decompose a doubly stochastic matrix into permutations")
    p.add_argument("matrix")
    p.add_argument("--verify", action="store_true", help="also print the re-verification line")

    p = add("vertices", _cmd_vertices, "orbit of the base vector under the acting group")
    p.add_argument("vector")
    p.add_argument("--group", action="append", default=None, metavar="CYCLES", help="subgroup generator (repeatable); omit for the full symmetric group")
    p.add_argument("--cap", type=int, default=DEFAULT_GROUP_CAP, help="largest group size to enumerate")

    p = add("member", _cmd_member, "permutohedron membership, optionally with a certificate")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--certificate", action="store_true", help="print a convex-combination certificate")

    p = add("affdim", _cmd_affdim, "affine dimension of a set of points (one per matrix row)")
    p.add_argument("points")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help (0) and usage errors (2)
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (NegativeInput, NotDecreasing, NotDoublyStochastic, GroupTooLarge, SubgroupUnsupported) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 2
    except NotMember as exc:
        print(f"no: {exc}", file=sys.stderr)
        return 1
    except VerificationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, DimensionMismatch, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
