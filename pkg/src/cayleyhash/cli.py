"""Command line: hash, combine, analyze.

Exit codes: 0 success, 1 usage error, 2 computation cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hasher
from .analysis import growth, girth, stream
from .analysis.reports import CapExceeded
from .gf2n import FieldSpec
from .matrix_core import Digest, deserialize, serialize

EXIT_USAGE = 1
EXIT_CAP = 2

BROKEN_NOTE = {
    "zemor": "zemor: a preimage attack on this scheme is known",
    "tz": "tz: collision and preimage attacks on this scheme are known",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _hex_int(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hex number: {text!r}")


def _scheme(args, integer: bool = False) -> hasher.SchemeParams:
    modulus = getattr(args, "modulus", None)
    prime = getattr(args, "prime", None)
    try:
        if args.scheme == "tz":
            if prime is not None:
                raise UsageError("tz takes --modulus, not --prime")
            if integer:
                raise UsageError("tz has no integer form; pick a modular scheme")
            return hasher.get_scheme("tz", modulus=None if modulus is None else FieldSpec(modulus))
        if modulus is not None:
            raise UsageError(f"{args.scheme} takes --prime, not --modulus")
        return hasher.get_scheme(args.scheme, prime=prime, integer=integer)
    except ValueError as exc:
        raise UsageError(str(exc))


def _warn_broken(args) -> None:
    if args.scheme in hasher.BROKEN_SCHEMES and not getattr(args, "no_warn", False):
        print(f"warning: {BROKEN_NOTE[args.scheme]} (use --no-warn to silence)", file=sys.stderr)


def _emit(report, as_json: bool) -> None:
    print(report.to_json() if as_json else report.to_text())


def cmd_hash(args) -> int:
    params = _scheme(args)
    _warn_broken(args)
    state = hasher.new_state(params)
    if args.bits is not None:
        state.absorb_bits(args.bits)
    else:
        path = args.input or "-"
        data = sys.stdin.buffer.read() if path == "-" else open(path, "rb").read()
        state.absorb_bytes(data)
    if args.pad:
        if params.C is None:
            print("warning: --pad only affects the cookies scheme", file=sys.stderr)
        else:
            state.absorb_bits("0" * params.rule.release_run)
    print(state.finalize().hex())
    return 0


def cmd_combine(args) -> int:
    params = _scheme(args)
    _warn_broken(args)
    if params.C is not None and not args.pad:
        print(
            "warning: cookie digests combine exactly only when the first segment "
            "was hashed with --pad; pass --pad to confirm",
            file=sys.stderr,
        )
    try:
        x = deserialize(Digest(bytes.fromhex(args.first)), params.domain)
        y = deserialize(Digest(bytes.fromhex(args.second)), params.domain)
    except ValueError as exc:
        raise UsageError(f"malformed digest: {exc}")
    print(serialize(hasher.combine(x, y), params.scheme_id).hex())
    return 0


def cmd_growth(args) -> int:
    params = _scheme(args, integer=True)
    if params.C is not None:
        rep = growth.cookie_triple_growth(params.gens, args.n, args.cap)
    else:
        rep = growth.enumerate_growth(params.gens, args.n, args.cap)
    _emit(rep, args.json)
    return 0


def cmd_jsr(args) -> int:
    params = _scheme(args, integer=True)
    value = growth.periodic_spectral_radius(args.word, params.gens)
    if args.json:
        print(json.dumps({"word": args.word, "per_letter_radius": value}))
    else:
        print(f"word={args.word}\nper_letter_radius={value!r}")
    return 0


def cmd_girth(args) -> int:
    if args.prime is None:
        raise UsageError("girth needs --prime")
    params = _scheme(args)
    definition = "max_of_lengths" if args.definition == "max" else "sum_of_lengths"
    rep = girth.exact_girth_bfs(params, definition, args.cap)
    _emit(rep, args.json)
    return 0 if rep.complete else EXIT_CAP


def cmd_girth_bound(args) -> int:
    if (args.p_bits is None) == (args.prime is None):
        raise UsageError("give exactly one of --p-bits and --prime")
    p = 1 << args.p_bits if args.p_bits is not None else args.prime
    try:
        print(girth.girth_lower_bound(p, args.s))
    except ValueError as exc:
        raise UsageError(str(exc))
    return 0


def cmd_collide(args) -> int:
    params = _scheme(args)
    hit = girth.collision_search_birthday(params, args.length, args.budget, args.seed)
    if hit is None:
        print(f"found=false\nbudget={args.budget}")
    else:
        print(f"found=true\nu={hit[0]}\nv={hit[1]}")
    return 0


def cmd_randwalk(args) -> int:
    params = _scheme(args, integer=True)
    _emit(growth.random_growth(params.gens, args.n, args.trials, args.seed), args.json)
    return 0


def cmd_stream(args) -> int:
    params = _scheme(args)
    data = stream.emit_stream(params, args.count_bits, args.seed, args.mode)
    with open(args.out, "wb") as fh:
        fh.write(data)
    bits = stream.to_bits(data, args.count_bits)
    for test in (stream.monobit_test, stream.runs_test):
        res = test(bits)
        print(f"{res.name}.p_value={res.p_value!r}\n{res.name}.passed={str(res.passed).lower()}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cayleyhash", description="Cayley hash functions and their analysis.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def scheme_flags(p, default="bsv"):
        p.add_argument("--scheme", choices=hasher.SCHEMES, default=default)
        p.add_argument("--prime", type=_hex_int, help="prime modulus, hex")
        p.add_argument("--modulus", type=_hex_int, help="GF(2^n) modulus as hex bit-polynomial (bit 0 = constant)")
        p.add_argument("--no-warn", action="store_true", help="silence broken-scheme warnings")

    p = sub.add_parser("hash", help="hash a file, stdin, or an explicit bit string")
    scheme_flags(p)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--in", dest="input", help="input file ('-' for stdin)")
    src.add_argument("--bits", help="explicit 0/1 string")
    p.add_argument("--pad", action="store_true", help="append release-run zeros (cookies) before finalizing")
    p.set_defaults(func=cmd_hash)

    p = sub.add_parser("combine", help="digest of a concatenation from the digests of its parts")
    scheme_flags(p)
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--pad", action="store_true", help="assert the first segment was hashed with --pad")
    p.set_defaults(func=cmd_combine)

    p = sub.add_parser("analyze", help="growth, spectral radius, girth and randomness analyses")
    asub = p.add_subparsers(dest="analysis", required=True, parser_class=_Parser)

    q = asub.add_parser("growth", help="exhaustive max-entry growth at word length n")
    scheme_flags(q)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--cap", type=int, help="raise the word-length cap")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_growth)

    q = asub.add_parser("jsr", help="per-letter spectral radius of a periodic word")
    scheme_flags(q)
    q.add_argument("--word", default="AB")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_jsr)

    q = asub.add_parser("girth", help="exact girth of the Cayley graph over Z/pZ")
    scheme_flags(q)
    q.add_argument("--definition", choices=("sum", "max"), default="sum")
    q.add_argument("--cap", type=int, default=girth.DEFAULT_STATE_CAP)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_girth)

    q = asub.add_parser("girth-bound", help="floor(log_s p)")
    q.add_argument("--p-bits", type=int, help="use p = 2^bits")
    q.add_argument("--prime", type=_hex_int)
    q.add_argument("--s", type=float, required=True)
    q.set_defaults(func=cmd_girth_bound)

    q = asub.add_parser("collide", help="birthday collision search")
    scheme_flags(q)
    q.add_argument("--length", type=int, default=40)
    q.add_argument("--budget", type=int, default=10 ** 6)
    q.add_argument("--seed", type=int, required=True)
    q.set_defaults(func=cmd_collide)

    q = asub.add_parser("randwalk", help="growth along random products")
    scheme_flags(q)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--trials", type=int, default=100)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_randwalk)

    q = asub.add_parser("stream", help="write a digest bitstream and run monobit/runs tests on it")
    scheme_flags(q)
    q.add_argument("--count-bits", type=int, default=10 ** 6)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--mode", choices=stream.MODES, default="feedback")
    q.add_argument("--out", required=True)
    q.set_defaults(func=cmd_stream)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cayleyhash: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cayleyhash: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (OSError, ValueError) as exc:
        print(f"cayleyhash: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
