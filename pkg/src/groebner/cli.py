"""Command-line surface: parse ideal files, dispatch algorithms, print bases.

Input grammar (line-oriented, '#' starts a comment):

    field <p>
    vars x,y,z
    order lex|grlex|grevlex
    poly <expr>        # one per generator

Exit codes: 0 success, 1 input error, 2 step-limit abort.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .buchberger import buchberger, groebner_witness
from .field import NotPrimeError, PrimeField
from .gvw import StepLimitExceeded, gvw_run, recover_vector, signature_enumerate
from .mmm import NotZeroDimensional, fglm
from .poly import ORDERS, ParseError, PolyRing, Polynomial, interreduce
from .sig import format_module_monomial
from .gvw import GvwState


@dataclass(slots=True)
class ProblemFile:
    field: PrimeField
    names: tuple
    order_name: str
    polys: list[Polynomial]  # zero generators already stripped
    zero_positions: list[int]  # 1-based positions of stripped zero generators
    ngens: int  # generator count before stripping

    def ring(self, order: str | None = None) -> PolyRing:
        return PolyRing(self.field, self.names, order or self.order_name)

    def generators(self, ring: PolyRing) -> list[Polynomial]:
        return [ring.convert(f) for f in self.polys]


def parse_problem_file(path: str) -> ProblemFile:
    field = None
    names = None
    order_name = None
    poly_lines: list[tuple[int, str]] = []
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.read()
    for lineno, line in enumerate(raw.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        keyword = parts[0]
        rest = parts[1].strip() if len(parts) > 1 else ""
        if keyword == "field":
            try:
                field = PrimeField(int(rest))
            except (ValueError, NotPrimeError) as e:
                raise ParseError(f"bad field modulus: {e}", lineno)
        elif keyword == "vars":
            names = tuple(s.strip() for s in rest.split(","))
        elif keyword == "order":
            if rest not in ORDERS:
                raise ParseError(f"unknown order {rest!r}", lineno)
            order_name = rest
        elif keyword == "poly":
            if not rest:
                raise ParseError("empty poly line", lineno)
            poly_lines.append((lineno, rest))
        else:
            raise ParseError(f"unknown directive {keyword!r}", lineno)
    if field is None:
        raise ParseError(f"{path}: missing 'field' line")
    if names is None:
        raise ParseError(f"{path}: missing 'vars' line")
    if not poly_lines:
        raise ParseError(f"{path}: no generators")
    order_name = order_name or "grevlex"
    try:
        ring = PolyRing(field, names, order_name)
    except ValueError as e:
        raise ParseError(f"{path}: {e}")
    polys = []
    zero_positions = []
    for pos, (lineno, text) in enumerate(poly_lines, start=1):
        f = ring.parse(text, line=lineno)
        if f.is_zero:
            zero_positions.append(pos)
        else:
            polys.append(f)
    if not polys:
        raise ParseError(f"{path}: all generators are zero")
    return ProblemFile(field, ring.names, order_name, polys, zero_positions, len(poly_lines))


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; keep 2 reserved for the
    # step-limit abort and treat bad usage as an input error instead.
    def error(self, message):
        raise _CliError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gb", description="Groebner basis engine over prime fields")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("input", help="ideal file")
        p.add_argument("--order", choices=sorted(ORDERS), help="override the file's monomial order")

    gb = sub.add_parser("gb", help="compute a Groebner basis")
    add_common(gb)
    gb.add_argument("--algo", choices=("gvw", "buchberger"), default="gvw")
    gb.add_argument("--sig-order", choices=("pot", "top", "schreyer"), default="schreyer")
    gb.add_argument("--select", choices=("min-sig", "min-degree", "fifo"), default="min-sig")
    gb.add_argument("--syzygies", action="store_true", help="print syzygy leading monomials")
    gb.add_argument("--track-vectors", action="store_true", help="with --syzygies, print full recovered vectors")
    gb.add_argument("--stats", action="store_true", help="print a key=value statistics block")
    gb.add_argument("--reduced", action=argparse.BooleanOptionalAction, default=True,
                    help="interreduce the output (default on)")
    gb.add_argument("--step-limit", type=int, default=10**6, metavar="N")

    fg = sub.add_parser("fglm", help="change the order of a 0-dimensional ideal's basis")
    add_common(fg)
    fg.add_argument("--to", required=True, choices=sorted(ORDERS), help="target order")

    ver = sub.add_parser("verify", help="check that a basis file is a Groebner basis of itself")
    add_common(ver)
    ver.add_argument("basis", help="file with one polynomial per line")

    en = sub.add_parser("enumerate", help="kernel leading monomials up to a degree bound")
    add_common(en)
    en.add_argument("--deg-bound", type=int, required=True, metavar="D")
    en.add_argument("--sig-order", choices=("pot", "top", "schreyer"), default="schreyer")
    return parser


def _print_basis(ring: PolyRing, basis):
    for f in basis:
        print(ring.format(f))


def _print_syzygies(state: GvwState, pf: ProblemFile, track_vectors: bool):
    # zero generators contribute their unit vectors directly; report them in
    # the original numbering, and renumber computed signatures to match.
    remap = {}
    zero = set(pf.zero_positions)
    k = 0
    for orig in range(1, pf.ngens + 1):
        if orig not in zero:
            k += 1
            remap[k] = orig
    for pos in pf.zero_positions:
        print(f"syz e{pos} (zero generator)")
    for rec in state.H:
        sig = rec.sig._replace(index=remap[rec.sig.index])
        if track_vectors:
            vec = recover_vector(state, rec)
            comps = []
            it = iter(vec)
            for orig in range(1, pf.ngens + 1):
                comps.append("0" if orig in zero else state.ring.format(next(it)))
            print(f"syz ({', '.join(comps)})")
        else:
            print(f"syz {format_module_monomial(state.ring, sig)}")


def cmd_gb(args) -> int:
    pf = parse_problem_file(args.input)
    ring = pf.ring(args.order)
    gens = pf.generators(ring)
    for pos in pf.zero_positions:
        print(f"warning: generator {pos} is zero, skipped", file=sys.stderr)
    if args.algo == "gvw":
        state = gvw_run(
            gens,
            sig_order=args.sig_order,
            strategy=args.select.replace("-", "_"),
            track_vectors=args.track_vectors,
            step_limit=args.step_limit,
        )
        raw = state.basis_polys()
        stats_block = state.stats.block() + f"\nbasis_size={len(raw)}\nsyzygy_lms={len(state.H)}"
    else:
        if args.syzygies or args.track_vectors:
            raise _CliError("--syzygies/--track-vectors need --algo gvw")
        raw, bstats = buchberger(gens)
        state = None
        stats_block = bstats.block() + f"\nbasis_size={len(raw)}"
    basis = interreduce(raw) if args.reduced else raw
    _print_basis(ring, basis)
    if args.syzygies:
        _print_syzygies(state, pf, args.track_vectors)
    if args.stats:
        print(stats_block)
    return 0


def cmd_fglm(args) -> int:
    pf = parse_problem_file(args.input)
    ring = pf.ring(args.order)
    gens = pf.generators(ring)
    src_gb = interreduce(gvw_run(gens).basis_polys())
    basis = fglm(src_gb, args.to)
    _print_basis(basis[0].ring if basis else ring, basis)
    return 0


def cmd_verify(args) -> int:
    pf = parse_problem_file(args.input)
    ring = pf.ring(args.order)
    with open(args.basis, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    basis = []
    for lineno, line in enumerate(lines, start=1):
        line = line.split("#", 1)[0].strip()
        if line:
            basis.append(ring.parse(line, line=lineno))
    basis = [f for f in basis if not f.is_zero]
    if not basis:
        raise ParseError(f"{args.basis}: no nonzero polynomials")
    witness = groebner_witness(basis)
    if witness is None:
        print("ok")
        return 0
    i, j, s, h = witness
    print(f"witness S({i},{j}) = {ring.format(s)}")
    print(f"reduces to {ring.format(h)}")
    return 1


def cmd_enumerate(args) -> int:
    pf = parse_problem_file(args.input)
    ring = pf.ring(args.order)
    gens = pf.generators(ring)
    if args.deg_bound < 0:
        raise _CliError("--deg-bound must be non-negative")
    for s in signature_enumerate(gens, args.deg_bound, sig_order=args.sig_order):
        print(format_module_monomial(ring, s))
    return 0


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "gb":
            return cmd_gb(args)
        if args.command == "fglm":
            return cmd_fglm(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_enumerate(args)
    except (_CliError, ParseError, NotZeroDimensional, NotPrimeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except StepLimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
