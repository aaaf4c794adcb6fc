"""Command-line interface: every operation behind one line-oriented binary.

Output is deterministic and machine-diffable: rationals print in lowest
terms as ``a/b`` with positive denominator and the sign on the numerator,
lists print as ``[0,1,2]``.  Exit codes: 0 success, 2 validation error,
3 fuel-exhausted-class outcomes (unresolved searches).  Errors go to the
error channel prefixed ``error:``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Callable, TextIO

from . import coding, combinatorics, fans
from .errors import FuelExhausted, PreconditionFailed, TooLarge
from .ivt import (ContinuousMap, approx_ivt, enumerated_witnesses, f0, f1, f2,
                  identity_map, ivt_countable_exceptions,
                  ivt_locally_nonconstant, middle_third_oracle)
from .real import CReal, RationalInterval, rho0, rho1, rho2, sqrt2
from .streams import NatStream, pattern_indicator, pi_digits


def _fmt_frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _fmt_interval(iv: RationalInterval) -> str:
    return f"{_fmt_frac(iv.lo)} .. {_fmt_frac(iv.hi)}"


def _fmt_list(xs) -> str:
    return "[" + ",".join(str(x) for x in xs) + "]"


class _UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


# Expression DSL: rationals a/b, operators + - *, abs(...), sqrt2,
# rho0(D,L) / rho1(D,L) / rho2(D,L) over the pi digit stream.

_TOKEN = re.compile(r"\s*(\d+|[-+*/(),]|[A-Za-z_][A-Za-z_0-9]*)")


class _ExprParser:
    def __init__(self, text: str, digits: NatStream):
        self.tokens = self._tokenize(text)
        self.pos = 0
        self.digits = digits

    @staticmethod
    def _tokenize(text: str) -> list[str]:
        tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise _UsageError(f"bad character in expression at position {pos}")
            tokens.append(m.group(1))
            pos = m.end()
        return tokens

    def _peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> str:
        tok = self._peek()
        if tok is None:
            raise _UsageError("unexpected end of expression")
        self.pos += 1
        return tok

    def _expect(self, tok: str) -> None:
        got = self._next()
        if got != tok:
            raise _UsageError(f"expected '{tok}', got '{got}'")

    def parse(self) -> CReal:
        value = self._expr()
        if self._peek() is not None:
            raise _UsageError(f"trailing input at '{self._peek()}'")
        return value

    def _expr(self) -> CReal:
        value = self._term()
        while self._peek() in ("+", "-"):
            op = self._next()
            rhs = self._term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _term(self) -> CReal:
        value = self._factor()
        while self._peek() == "*":
            self._next()
            value = value * self._factor()
        return value

    def _factor(self) -> CReal:
        if self._peek() == "-":
            self._next()
            return -self._factor()
        return self._atom()

    def _int(self) -> int:
        tok = self._next()
        if not tok.isdigit():
            raise _UsageError(f"expected a number, got '{tok}'")
        return int(tok)

    def _atom(self) -> CReal:
        tok = self._next()
        if tok.isdigit():
            num = int(tok)
            if self._peek() == "/":
                self._next()
                den = self._int()
                if den == 0:
                    raise _UsageError("zero denominator")
                return CReal.from_rational(Fraction(num, den))
            return CReal.from_rational(num)
        if tok == "(":
            value = self._expr()
            self._expect(")")
            return value
        if tok == "sqrt2":
            return sqrt2()
        if tok == "abs":
            self._expect("(")
            value = self._expr()
            self._expect(")")
            return abs(value)
        if tok in ("rho0", "rho1", "rho2"):
            self._expect("(")
            digit = self._int()
            self._expect(",")
            run = self._int()
            self._expect(")")
            spec = pattern_indicator(self.digits, digit, run)
            return {"rho0": rho0, "rho1": rho1, "rho2": rho2}[tok](spec)
        raise _UsageError(f"unknown token '{tok}' in expression")


def _parse_expr(text: str, digits: NatStream | None = None) -> CReal:
    return _ExprParser(text, digits if digits is not None else pi_digits()).parse()


def _emit(out: TextIO, args, op: str, inputs: dict, result, certificate, plain: str) -> None:
    if args.format == "json":
        obj = {"op": op, "inputs": inputs, "result": result, "certificate": certificate}
        print(json.dumps(obj, sort_keys=True), file=out)
    else:
        print(plain, file=out)


def _cmd_eval(args, out: TextIO, err: TextIO) -> int:
    x = _parse_expr(args.expr)
    iv = x.approx(args.precision, args.fuel)
    _emit(out, args, "eval",
          {"expr": args.expr, "p": args.precision, "fuel": args.fuel},
          {"lo": _fmt_frac(iv.lo), "hi": _fmt_frac(iv.hi)},
          {"width_le": _fmt_frac(Fraction(1, 2 ** args.precision))},
          _fmt_interval(iv))
    return 0


def _cmd_pi(args, out: TextIO, err: TextIO) -> int:
    if args.digits < 1:
        raise _UsageError("--digits must be >= 1")
    stream = pi_digits()
    text = "".join(str(stream[i]) for i in range(args.digits))
    _emit(out, args, "pi", {"digits": args.digits}, text, None, text)
    return 0


def _cmd_hunt(args, out: TextIO, err: TextIO) -> int:
    if args.budget < 1:
        raise _UsageError("--budget must be >= 1")
    spec = pattern_indicator(pi_digits(), args.digit, args.run)
    position = None
    for j in range(args.budget):
        if spec.indicator[j] != 0:
            position = j
            break
    inputs = {"digit": args.digit, "run": args.run, "budget": args.budget}
    if position is None:
        _emit(out, args, "hunt", inputs, None, None,
              f"unresolved after {args.budget} digits")
        return 3
    _emit(out, args, "hunt", inputs, position, {"position": position},
          f"found: {position}")
    return 0


def _cmd_encode(args, out: TextIO, err: TextIO) -> int:
    code = coding.encode(args.values)
    _emit(out, args, "encode", {"values": args.values}, code, None, str(code))
    return 0


def _cmd_decode(args, out: TextIO, err: TextIO) -> int:
    values = coding.decode(args.code)
    _emit(out, args, "decode", {"code": args.code}, values, None, _fmt_list(values))
    return 0


def _cmd_euclid(args, out: TextIO, err: TextIO) -> int:
    q = combinatorics.euclid_extend(args.primes)
    _emit(out, args, "euclid", {"primes": args.primes}, q,
          {"divides_none_of": args.primes}, str(q))
    return 0


def _cmd_dickson(args, out: TextIO, err: TextIO) -> int:
    seqs = []
    for part in args.seqs.split(";"):
        values = [int(v) for v in part.split(",") if v.strip() != ""]
        if not values:
            raise _UsageError("each sequence needs at least one value")
        if any(v < 0 for v in values):
            raise _UsageError("sequence values must be naturals")
        seqs.append(NatStream.eventually_constant(values))
    inst = combinatorics.DicksonInstance(tuple(seqs))
    found = combinatorics.dickson_witness(inst, args.fuel)
    inputs = {"seqs": args.seqs, "fuel": args.fuel}
    if found is None:
        _emit(out, args, "dickson", inputs, None, None,
              f"exhausted after {args.fuel} indices")
        return 3
    i, j = found
    _emit(out, args, "dickson", inputs, {"i": i, "j": j}, {"i": i, "j": j},
          f"found: i={i} j={j}")
    return 0


def _cmd_ramsey(args, out: TextIO, err: TextIO) -> int:
    check = combinatorics.arrow_star_check if args.star else combinatorics.arrow_check
    holds = check(args.M, args.n, args.k, args.r)
    _emit(out, args, "ramsey",
          {"M": args.M, "n": args.n, "k": args.k, "r": args.r, "star": args.star},
          holds, None, f"holds: {'true' if holds else 'false'}")
    return 0


def _parse_bar_spec(spec: str) -> Callable[[int], bool]:
    m = re.fullmatch(r"len=(\d+)", spec)
    if m:
        size = int(m.group(1))
        return lambda code: len(coding.decode(code)) == size
    m = re.fullmatch(r"has1@(\d+)", spec)
    if m:
        window = int(m.group(1))
        return lambda code: 1 in coding.decode(code)[:window]
    m = re.fullmatch(r"sum>=(\d+)", spec)
    if m:
        target = int(m.group(1))
        return lambda code: sum(coding.decode(code)) >= target
    raise _UsageError(f"unknown bar spec '{spec}' (use len=K, has1@K or sum>=K)")


def _cmd_subbar(args, out: TextIO, err: TextIO) -> int:
    bar = fans.DecidableBar(_parse_bar_spec(args.spec), args.depth)
    outcome = fans.finite_subbar(bar)
    inputs = {"spec": args.spec, "depth": args.depth}
    if isinstance(outcome, fans.NotBarWithinDepth):
        path = _fmt_list(outcome.path)
        _emit(out, args, "subbar", inputs, {"not_a_bar": True, "path": list(outcome.path)},
              {"uncovered_path": list(outcome.path)},
              f"not a bar within depth {args.depth}: {path}")
        return 0
    elements = [coding.decode(code) for code in outcome]
    plain = "\n".join(_fmt_list(e) for e in elements) if elements else "(empty bar)"
    _emit(out, args, "subbar", inputs, {"not_a_bar": False, "elements": elements},
          {"elements": elements}, plain)
    return 0


def _parse_game_predicate(text: str) -> tuple[str, int | None]:
    if text == "none":
        return "none", None
    m = re.fullmatch(r"([ni])=(\d+)", text)
    if not m:
        raise _UsageError(f"unknown game predicate '{text}' (use n=K, i=K or none)")
    return m.group(1), int(m.group(2))


def _cmd_game(args, out: TextIO, err: TextIO) -> int:
    var, value = _parse_game_predicate(args.c)
    if args.mode == "omega2":
        if args.bound is None:
            raise _UsageError("--bound is required for --mode omega2")

        def in_c(n: int, i: int) -> bool:
            if var == "none":
                return False
            return (n if var == "n" else i) == value

        outcome = fans.solve_omega2(fans.GameSpecOmega2(in_c, args.bound))
        inputs = {"mode": "omega2", "c": args.c, "bound": args.bound}
        if isinstance(outcome, fans.WinningMove):
            _emit(out, args, "game", inputs, {"winning_move": outcome.move},
                  {"both_replies_in_c": outcome.move}, f"winning move: {outcome.move}")
        else:
            moves = list(outcome.moves)
            _emit(out, args, "game", inputs, {"counter_strategy": moves},
                  {"escaping_replies": moves}, f"counter strategy: {_fmt_list(moves)}")
        return 0

    if args.p0 is None or args.p1 is None:
        raise _UsageError("--p0 and --p1 are required for --mode 2omega")

    def in_c2(i: int, n: int) -> bool:
        if var == "none":
            return False
        return (i if var == "i" else n) == value

    answer = fans.answer_strategy_2omega(fans.GameSpec2Omega(in_c2), args.p0, args.p1)
    inputs = {"mode": "2omega", "c": args.c, "p0": args.p0, "p1": args.p1}
    if answer is None:
        _emit(out, args, "game", inputs, None, None, "no answer")
    else:
        _emit(out, args, "game", inputs, {"answer": answer}, {"move_in_c": answer},
              f"answer: {answer}")
    return 0


def _parse_map(text: str) -> ContinuousMap:
    if text == "id":
        return identity_map()
    m = re.fullmatch(r"(f0|f1|f2):(\d+(?:,\d+)*)", text)
    if not m:
        raise _UsageError(f"unknown map '{text}' (use id, f0:D,L, f1:D,L or f2:D,L,D2,L2)")
    name, params = m.group(1), [int(v) for v in m.group(2).split(",")]
    digits = pi_digits()
    if name in ("f0", "f1"):
        if len(params) != 2:
            raise _UsageError(f"{name} takes two parameters D,L")
        spec = pattern_indicator(digits, params[0], params[1])
        return f0(spec) if name == "f0" else f1(spec)
    if len(params) != 4:
        raise _UsageError("f2 takes four parameters D,L,D2,L2")
    return f2(pattern_indicator(digits, params[0], params[1]),
              pattern_indicator(digits, params[2], params[3]))


def _thirds_depth(target: int) -> int:
    # Smallest d with (2/3)^d <= 2^-target.
    d = 0
    while 3 ** d < (1 << (d + target)):
        d += 1
    return d


def _cmd_ivt(args, out: TextIO, err: TextIO) -> int:
    f = _parse_map(args.map)
    y = _parse_expr(args.y)
    p = args.precision
    fuel = args.fuel
    inputs = {"map": args.map, "y": args.y, "p": p, "mode": args.mode}

    if args.mode == "approx":
        x = approx_ivt(f, y, p, fuel)
        certified_p = p
    elif args.mode == "lnc":
        depth = args.depth if args.depth is not None else _thirds_depth(f.modulus(p + 1)) + 2
        result = ivt_locally_nonconstant(f, y, middle_third_oracle(f, y, fuel), depth, fuel)
        x, certified_p = result.x, result.certified_precision
    else:
        depth = args.depth if args.depth is not None else f.modulus(p + 1) + 2
        result = ivt_countable_exceptions(f, y, enumerated_witnesses(f, y, fuel), depth, fuel)
        x, certified_p = result.x, result.certified_precision

    if certified_p is None or certified_p < p:
        reached = "none" if certified_p is None else f"2^-{certified_p}"
        print(f"error: certified only {reached}, wanted 2^-{p}", file=err)
        return 3

    xi = x.approx(p, fuel)
    img = f.enclose(xi, p + 2)
    yi = y.approx(p + 2, fuel)
    diff = RationalInterval(img.lo - yi.hi, img.hi - yi.lo)
    bound = _fmt_frac(Fraction(1, 2 ** p))
    plain = (f"x in {_fmt_interval(xi)}\n"
             f"f(x) - y in {_fmt_interval(diff)}\n"
             f"certified: |f(x) - y| < {bound}")
    _emit(out, args, "ivt", inputs,
          {"x": {"lo": _fmt_frac(xi.lo), "hi": _fmt_frac(xi.hi)},
           "diff": {"lo": _fmt_frac(diff.lo), "hi": _fmt_frac(diff.hi)}},
          {"certified_below": bound}, plain)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="conreal", description="constructive reals and friends")
    # Global flags, accepted before or after the subcommand.
    common = _Parser(add_help=False)
    common.add_argument("--fuel", type=int, default=argparse.SUPPRESS,
                        help="index budget for semi-decidable searches (default 64)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized demos (reserved; output stays deterministic)")
    common.add_argument("--format", choices=("plain", "json"), default=argparse.SUPPRESS)
    parser.add_argument("--fuel", type=int, default=64, help=argparse.SUPPRESS)
    parser.add_argument("--seed", type=int, default=0, help=argparse.SUPPRESS)
    parser.add_argument("--format", choices=("plain", "json"), default="plain")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an interval expression")
    p.add_argument("expr")
    p.add_argument("-p", "--precision", type=int, required=True)
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("pi", parents=[common], help="decimal digits of pi after the point")
    p.add_argument("--digits", type=int, required=True)
    p.set_defaults(fn=_cmd_pi)

    p = sub.add_parser("hunt", parents=[common], help="hunt a digit run in the pi expansion")
    p.add_argument("--digit", type=int, required=True)
    p.add_argument("--run", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)
    p.set_defaults(fn=_cmd_hunt)

    p = sub.add_parser("encode", parents=[common], help="code of a finite sequence of naturals")
    p.add_argument("values", type=int, nargs="*")
    p.set_defaults(fn=_cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="sequence behind a code")
    p.add_argument("code", type=int)
    p.set_defaults(fn=_cmd_decode)

    p = sub.add_parser("ivt", parents=[common], help="intermediate value procedures")
    p.add_argument("--map", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("-p", "--precision", type=int, required=True)
    p.add_argument("--mode", choices=("approx", "lnc", "countable"), default="approx")
    p.add_argument("--depth", type=int, default=None)
    p.set_defaults(fn=_cmd_ivt)

    p = sub.add_parser("subbar", parents=[common], help="extract a finite subbar or a counterexample path")
    p.add_argument("--spec", required=True)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(fn=_cmd_subbar)

    p = sub.add_parser("game", parents=[common], help="two-move game solvers")
    p.add_argument("--mode", choices=("omega2", "2omega"), default="omega2")
    p.add_argument("--c", required=True)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--p0", type=int, default=None)
    p.add_argument("--p1", type=int, default=None)
    p.set_defaults(fn=_cmd_game)

    p = sub.add_parser("euclid", parents=[common], help="a prime missing from the given list")
    p.add_argument("primes", type=int, nargs="+")
    p.set_defaults(fn=_cmd_euclid)

    p = sub.add_parser("dickson", parents=[common], help="dominance pair over finitely many sequences")
    p.add_argument("--seqs", required=True,
                   help="semicolon-separated sequences, e.g. '3,2,1,0;0,1,2' "
                        "(each continues with its last value)")
    p.set_defaults(fn=_cmd_dickson)

    p = sub.add_parser("ramsey", parents=[common], help="finite Ramsey checkers by exhaustive enumeration")
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--star", action="store_true")
    p.set_defaults(fn=_cmd_ramsey)

    return parser


def run(argv: list[str], out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    """Dispatch one invocation; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.fuel < 1:
            raise _UsageError("--fuel must be >= 1")
        return args.fn(args, out, err)
    except SystemExit as e:  # --help
        return 0 if e.code in (0, None) else int(e.code)
    except FuelExhausted as e:
        print(f"error: {e}", file=err)
        return 3
    except (_UsageError, PreconditionFailed, TooLarge, ValueError) as e:
        print(f"error: {e}", file=err)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
