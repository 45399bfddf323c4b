"""Command-line interface: ``optb {classify,certify,verify,lift,normal-form,slope-word,sweep}``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import __version__
from . import matrices as mx
from .classify import classify, geometry_type
from .matrices import Mat2, NotFound
from .monodromy import abelianization, boundary_image_ok, lift
from .torsion import Certificate, decide, verify_ambient, verify_fiber
from .words import slope_word

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


class InputError(ValueError):
    pass


def _matrix(text: str) -> Mat2:
    try:
        return Mat2.parse(text)
    except (ValueError, TypeError, OverflowError) as exc:
        raise InputError(f"bad matrix {text!r}: {exc}") from None


def _sl2(text: str) -> Mat2:
    A = _matrix(text)
    if A.det != 1:
        raise InputError(f"monodromy must have determinant +1, got {A.det}")
    return A


def _emit(payload, out: Optional[str] = None) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_classify(args) -> int:
    _emit(classify(_sl2(args.matrix), args.m_bound, args.p_bound), args.output)
    return EXIT_OK


def cmd_certify(args) -> int:
    decision = decide(_sl2(args.matrix))
    if decision.biorderable:
        _emit({"result": "biorderable"}, args.output)
    else:
        _emit(decision.certificate.to_json(), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.certificate) as fh:
            cert = Certificate.from_json(json.load(fh))
    except OSError as exc:
        raise InputError(str(exc)) from None
    except (ValueError, KeyError, TypeError, OverflowError) as exc:
        raise InputError(f"malformed certificate: {exc!r}") from None
    fiber_ok, ambient_ok = verify_fiber(cert), verify_ambient(cert)
    _emit({"fiber": fiber_ok, "ambient": ambient_ok, "valid": fiber_ok and ambient_ok})
    return EXIT_OK if fiber_ok and ambient_ok else EXIT_INVALID


def cmd_lift(args) -> int:
    m = lift(_sl2(args.matrix))
    _emit(
        {
            "tokens": [t.value for t in m.tokens],
            "img_x": str(m.img_x),
            "img_y": str(m.img_y),
            "abelianization": abelianization(m).rows(),
            "boundary_ok": boundary_image_ok(m),
        },
        args.output,
    )
    return EXIT_OK


def cmd_normal_form(args) -> int:
    A = _sl2(args.matrix)
    try:
        nf = mx.morimoto_normal_form(A, args.bound)
    except NotFound as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID
    _emit(nf.to_json(), args.output)
    return EXIT_OK


def cmd_slope_word(args) -> int:
    try:
        w = slope_word(args.p, args.q)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(str(w), args.output)
    return EXIT_OK


def sweep_lines(bound: int) -> List[str]:
    lines = []
    tally = {"biorderable": 0, "certified": 0, "failed": 0}
    for A in mx.sl2(bound):
        key = f"{A.a},{A.b},{A.c},{A.d}"
        geo = geometry_type(A).value
        decision = decide(A)
        if decision.biorderable:
            tally["biorderable"] += 1
            lines.append(f"{key} trace={A.trace} {geo} biorderable")
            continue
        cert = decision.certificate
        ok = verify_fiber(cert) and verify_ambient(cert)
        tally["certified" if ok else "failed"] += 1
        lines.append(
            f"{key} trace={A.trace} {geo} torsion branch={cert.branch} "
            f"terms={len(cert.terms)} {'verified' if ok else 'FAILED'}"
        )
    total = sum(tally.values())
    lines.append(
        f"total={total} biorderable={tally['biorderable']} "
        f"certified={tally['certified']} failed={tally['failed']}"
    )
    return lines


def cmd_sweep(args) -> int:
    lines = sweep_lines(args.bound)
    _emit("\n".join(lines), args.output)
    return EXIT_OK if lines[-1].endswith("failed=0") else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optb",
        description="Bi-orderability and generalized-torsion certificates for "
        "once-punctured torus bundles.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_matrix(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("-m", "--matrix", required=True, help='row-major entries "a,b,c,d"')
        p.add_argument("-o", "--output", help="write output to a file")
        return p

    p = with_matrix("classify", "trace, bi-orderability, geometry and tunnel verdict")
    p.add_argument("--m-bound", type=int, default=mx.DEFAULT_TUNNEL_BOUND)
    p.add_argument("--p-bound", type=int, default=mx.DEFAULT_TUNNEL_BOUND)
    p.set_defaults(func=cmd_classify)

    with_matrix("certify", "emit a certificate JSON, or report bi-orderable").set_defaults(
        func=cmd_certify
    )

    p = sub.add_parser("verify", help="check a certificate with both verifiers")
    p.add_argument("certificate", help="certificate JSON file")
    p.set_defaults(func=cmd_verify)

    with_matrix("lift", "generator images of the lifted mapping class").set_defaults(
        func=cmd_lift
    )

    p = with_matrix("normal-form", "conjugate into the normal form")
    p.add_argument("--bound", type=int, default=mx.DEFAULT_NORMAL_FORM_BOUND)
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("slope-word", help="cyclic word of the simple loop L(p, q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_slope_word)

    p = sub.add_parser("sweep", help="classify and certify every SL2 matrix up to a bound")
    p.add_argument("--bound", type=int, default=5)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sweep)
    return parser


def _join_matrix_values(argv: Sequence[str]) -> List[str]:
    # "-m -1,0,0,-1" would otherwise be parsed as an option
    out: List[str] = []
    it = iter(argv)
    for arg in it:
        if arg in ("-m", "--matrix"):
            nxt = next(it, None)
            out.append("--matrix" if nxt is None else f"--matrix={nxt}")
        else:
            out.append(arg)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_join_matrix_values(argv))
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
