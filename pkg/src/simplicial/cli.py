"""Command-line front end: ``simplicial <verb> ...``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import faceio
from .chain import induced_chain_map, reduced_simplicial_chain_complex, simplicial_chain_complex
from .errors import InvalidInputError, ParseError, SimplicialError, UndefinedDimensionError, UnsupportedError
from .homology import all_homology, euler_characteristic, format_report, homology, homology_mod, report_json
from .random_models import linial_meshulam, make_rng, random_complex, random_complex_bounded
from .vietoris_rips import read_distance_matrix, vietoris_rips

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_PARSE = 4
EXIT_INVALID = 5
EXIT_UNSUPPORTED = 6

EXIT_HELP = f"""\
exit codes:
  {EXIT_OK}  success
  {EXIT_USAGE}  bad command line (unknown verb, missing or malformed flag)
  {EXIT_IO}  input file missing or unreadable
  {EXIT_PARSE}  input file malformed
  {EXIT_INVALID}  input violates a precondition (e.g. not a subcomplex, void complex)
  {EXIT_UNSUPPORTED}  request not supported (e.g. composite modulus)
"""

U64 = 1 << 64


def _emit(out, args, text: str, payload) -> None:
    if args.json:
        out.write(json.dumps(payload, sort_keys=False) + "\n")
    elif text:
        out.write(text if text.endswith("\n") else text + "\n")


def _faces_payload(faces):
    return [list(f) for f in faces]


def cmd_facets(args, out):
    K = faceio.load(args.file)
    fs = K.facets()
    _emit(out, args, faceio.dumps(fs), {"facets": _faces_payload(fs)})


def cmd_faces(args, out):
    K = faceio.load(args.file)
    fs = K.faces(args.dim)
    _emit(out, args, faceio.dumps(fs), {"dim": args.dim, "faces": _faces_payload(fs)})


def _chain(K, reduced):
    return reduced_simplicial_chain_complex(K) if reduced else simplicial_chain_complex(K)


def cmd_chain(args, out):
    C = _chain(faceio.load(args.file), args.reduced)
    _emit(out, args, C.to_text(), C.to_json())


def cmd_homology(args, out):
    C = _chain(faceio.load(args.file), args.reduced)
    degrees = [args.degree] if args.degree is not None else list(C.degrees())
    if args.mod is not None:
        dims = {i: homology_mod(C, i, args.mod) for i in degrees}
        dims = {i: k for i, k in dims.items() if k}
        text = "\n".join(f"H_{i}(Z/{args.mod}) = (Z/{args.mod})^{k}" for i, k in dims.items()) or "trivial"
        payload = {"reduced": args.reduced, "modulus": args.mod,
                   "groups": {str(i): {"dimension": k} for i, k in dims.items()}}
        _emit(out, args, text, payload)
        return
    if args.degree is not None:
        groups = {args.degree: homology(C, args.degree)}
    else:
        groups = all_homology(C)
    _emit(out, args, format_report(groups), report_json(groups, args.reduced))


def cmd_induced_map(args, out):
    K = faceio.load(args.bigfile)
    L = faceio.load(args.smallfile)
    f = induced_chain_map(K, L, reduced=args.reduced)
    _emit(out, args, f.to_text(), {"reduced": args.reduced, "components": f.to_json()})


def _seed(args, err):
    if args.seed is None:
        seed = time.time_ns() % U64
        err.write(f"seed: {seed}\n")
        return seed
    return args.seed


def _emit_sample(args, out, seed, K):
    fs = K.facets()
    text = f"# seed: {seed}\n" + faceio.dumps(fs)
    _emit(out, args, text, {"seed": seed, "facets": _faces_payload(fs)})


def cmd_random(args, out, err):
    seed = _seed(args, err)
    rng = make_rng(seed)
    if args.r is None:
        K = random_complex(args.n, rng)
    else:
        K = random_complex_bounded(args.n, args.r, rng)
    _emit_sample(args, out, seed, K)


def cmd_lm(args, out, err):
    seed = _seed(args, err)
    _emit_sample(args, out, seed, linial_meshulam(args.n, args.m, args.d, make_rng(seed)))


def cmd_vr(args, out):
    D = read_distance_matrix(args.distfile, args.format)
    K = vietoris_rips(D, args.eps)
    fs = K.facets()
    _emit(out, args, faceio.dumps(fs), {"epsilon": args.eps, "facets": _faces_payload(fs)})


def cmd_euler(args, out):
    chi = euler_characteristic(faceio.load(args.file))
    _emit(out, args, str(chi), {"euler_characteristic": chi})


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < U64:
        raise argparse.ArgumentTypeError(f"seed must fit in 64 unsigned bits, got {text}")
    return value


def _nonneg_float(text: str) -> float:
    value = float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative number, got {text}")
    return value


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = _Parser(
        prog="simplicial",
        description="Abstract simplicial complexes, integral homology, random and Vietoris-Rips complexes.",
        epilog=EXIT_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb", parser_class=_Parser)

    p = sub.add_parser("facets", parents=[common], help="list the facets of a complex")
    p.add_argument("file")
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("faces", parents=[common], help="list the faces of one dimension")
    p.add_argument("file")
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("chain", parents=[common], help="print boundary matrices")
    p.add_argument("file")
    p.add_argument("--reduced", action="store_true")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("homology", parents=[common], help="integral homology (or mod a prime)")
    p.add_argument("file")
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--mod", type=int, metavar="M", help="field Z/M coefficients, M prime")
    p.add_argument("--degree", type=int, metavar="I", help="report only degree I")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("induced-map", parents=[common], help="chain map induced by an inclusion")
    p.add_argument("bigfile")
    p.add_argument("smallfile")
    p.add_argument("--reduced", action="store_true")
    p.set_defaults(func=cmd_induced_map)

    p = sub.add_parser("random", parents=[common], help="sample a random complex on [N]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, help="bound on face cardinality")
    p.add_argument("--seed", type=_u64)
    p.set_defaults(func=cmd_random, wants_err=True)

    p = sub.add_parser("lm", parents=[common], help="sample Y_D(N, M)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=_u64)
    p.set_defaults(func=cmd_lm, wants_err=True)

    p = sub.add_parser("vr", parents=[common], help="Vietoris-Rips complex of a distance CSV")
    p.add_argument("distfile")
    p.add_argument("--eps", type=_nonneg_float, required=True)
    p.add_argument("--format", choices=["full", "upper"], required=True)
    p.set_defaults(func=cmd_vr)

    p = sub.add_parser("euler", parents=[common], help="Euler characteristic")
    p.add_argument("file")
    p.set_defaults(func=cmd_euler)

    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "wants_err", False):
            args.func(args, out, err)
        else:
            args.func(args, out)
    except OSError as exc:
        err.write(f"simplicial: {exc.strerror or exc}: {exc.filename}\n")
        return EXIT_IO
    except ParseError as exc:
        err.write(f"simplicial: parse error: {exc}\n")
        return EXIT_PARSE
    except UnsupportedError as exc:
        err.write(f"simplicial: unsupported: {exc}\n")
        return EXIT_UNSUPPORTED
    except (InvalidInputError, UndefinedDimensionError, SimplicialError) as exc:
        err.write(f"simplicial: invalid input: {exc}\n")
        return EXIT_INVALID
    return EXIT_OK


def main() -> None:
    sys.exit(run())
