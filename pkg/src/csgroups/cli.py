"""
Command-line front end.

    csgroups eval "circ_0([1,0],[1,0])"
    csgroups check crossed --instance braid --trials 1000 --seed 7
    csgroups nerve --instance symm --level 2 --dimension 2 --count 3
    csgroups kan-lift horn.json

Exit codes: 0 on success, 1 when a suite finds a counterexample or a
horn cannot be lifted, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys

from . import braids, groupoid, kan, operad, perms
from .core import BRAID, INSTANCES, SYMMETRIC, CsgElement, CsgInstance
from .suites import SUITES, run_suite


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"at position {pos}: {message}")
        self.pos = pos


_TOKEN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<braid>s\d+(?:\^-1)?)"
    r"|(?P<int>\d+)"
    r"|(?P<name>[A-Za-z]+(?:_\d+)?)"
    r"|(?P<punct>[()\[\],@])"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _ExprParser:
    """Permutation literals, braid words with level annotations, and the
    structural operators, as nested calls."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.idx = 0

    def peek(self):
        return self.tokens[self.idx]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.idx]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2])
        if value is not None and tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1]!r}", tok[2])
        self.idx += 1
        return tok

    def parse(self):
        value = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input {text!r}", pos)
        return value

    def expr(self):
        kind, text, pos = self.peek()
        if kind == "punct" and text == "[":
            return self.perm_literal()
        if kind == "braid" or (kind == "int" and text == "1"):
            return self.braid_literal()
        if kind == "name":
            return self.call()
        raise ParseError(f"expected an expression, found {text!r}", pos)

    def perm_literal(self):
        _, _, pos = self.take("punct", "[")
        values = [int(self.take("int")[1])]
        while self.peek()[1] == ",":
            self.take("punct", ",")
            values.append(int(self.take("int")[1]))
        self.take("punct", "]")
        word = tuple(values)
        if not perms.is_perm(word):
            raise ParseError(f"not a permutation of 0..{len(word) - 1}", pos)
        return SYMMETRIC, SYMMETRIC.element(word)

    def braid_literal(self):
        kind, text, pos = self.peek()
        tokens = []
        if kind == "int" and text == "1":
            self.take("int")
        else:
            while self.peek()[0] == "braid":
                tokens.append(self.take("braid")[1])
        self.take("punct", "@")
        level = int(self.take("int")[1])
        try:
            word = braids.parse_letters(" ".join(tokens) or "1", level)
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None
        return BRAID, CsgElement(level, word)

    def call(self):
        _, name, pos = self.take("name")
        self.take("punct", "(")
        args = [self.expr()]
        while self.peek()[1] == ",":
            self.take("punct", ",")
            args.append(self.expr())
        self.take("punct", ")")
        try:
            return self.apply(name, args, pos)
        except (ValueError, IndexError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"{name}: {exc}", pos) from None

    def apply(self, name, args, pos):
        def unary():
            if len(args) != 1:
                raise ParseError(f"{name} takes one argument", pos)
            return args[0]

        def binary():
            if len(args) != 2:
                raise ParseError(f"{name} takes two arguments", pos)
            (ia, a), (ib, b) = args
            if ia is not ib:
                raise ParseError("mixed permutation and braid operands", pos)
            return ia, a, b

        if name == "mul":
            inst, a, b = binary()
            return inst, inst.mul(a, b)
        if name == "boxplus":
            inst, a, b = binary()
            return inst, inst.boxplus(a, b)
        if name == "inv":
            inst, a = unary()
            return inst, inst.inv(a)
        if name == "sL":
            inst, a = unary()
            return inst, inst.s_left(a)
        if name == "sR":
            inst, a = unary()
            return inst, inst.s_right(a)
        m = re.fullmatch(r"d_(\d+)", name)
        if m:
            inst, a = unary()
            return inst, inst.face(int(m.group(1)), a)
        m = re.fullmatch(r"s_(\d+)", name)
        if m:
            inst, a = unary()
            return inst, inst.degeneracy(int(m.group(1)), a)
        m = re.fullmatch(r"circ_(\d+)", name)
        if m:
            inst, a, b = binary()
            return inst, operad.circ_set(inst, a, int(m.group(1)), b)
        raise ParseError(f"unknown operator {name!r}", pos)


def render_element(inst: CsgInstance, g: CsgElement) -> str:
    if inst.name == "symm":
        return perms.format_perm(g.payload)
    word = g.payload
    perm = braids.underlying_perm_word(word)
    is_id = braids.braids_equal(word, braids.empty_word(g.level))
    return (f"{braids.format_letters(word)} @ {g.level}"
            f"  perm={perms.format_perm(perm)}"
            f"  artin={braids.artin_fingerprint(word)}"
            f"  identity={'true' if is_id else 'false'}")


def cmd_eval(args) -> int:
    try:
        inst, value = _ExprParser(args.expression).parse()
    except ParseError as exc:
        print(f"parse error {exc}", file=sys.stderr)
        return 2
    print(render_element(inst, value))
    return 0


def cmd_check(args) -> int:
    try:
        report = run_suite(args.suite, instance=args.instance,
                           max_level=args.max_level, trials=args.trials,
                           seed=args.seed, word_len=args.word_len)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    print(report.to_json() if args.format == "json" else report.to_text())
    return 0 if report.outcome == "pass" else 1


def cmd_nerve(args) -> int:
    inst = INSTANCES[args.instance]
    if args.format == "dot":
        try:
            sys.stdout.write(groupoid.skeleton_to_dot(inst, args.level))
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return 2
        return 0
    rng = random.Random(args.seed)
    simplices = []
    for _ in range(args.count):
        dim = rng.randint(0, args.dimension)
        simplices.append(groupoid.random_simplex(inst, rng, args.level, dim,
                                                 args.word_len))
    print(groupoid.skeleton_to_json(inst, simplices))
    return 0


def cmd_kan_lift(args) -> int:
    try:
        with open(args.horn) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"cannot read horn file: {exc}", file=sys.stderr)
        return 2
    name = args.instance or data.get("instance", "braid")
    if name not in INSTANCES:
        print(f"unknown instance {name!r}", file=sys.stderr)
        return 2
    inst = INSTANCES[name]
    try:
        horn = kan.horn_from_json(inst, data)
    except (ValueError, IndexError) as exc:
        print(f"malformed horn: {exc}", file=sys.stderr)
        return 2
    try:
        lift = kan.lift_horn(inst, horn)
    except (kan.IncompatibleHorn, kan.FillError) as exc:
        print(f"lift failed: {exc}", file=sys.stderr)
        return 1
    print(f"lift: {render_element(inst, lift)}")
    proj_ok = inst.underlying_perm(lift) == horn.base
    print(f"projection == base: {'ok' if proj_ok else 'FAIL'}")
    for r, y in horn.face_items():
        ok = inst.equal(inst.face(r, lift), y)
        print(f"face {r} == y_{r}: {'ok' if ok else 'FAIL'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csgroups",
        description="crossed simplicial groups: evaluation, law suites, "
                    "nerve output, horn lifting")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an element expression")
    p_eval.add_argument("expression")
    p_eval.set_defaults(func=cmd_eval)

    p_check = sub.add_parser("check", help="run a verification suite")
    p_check.add_argument("suite", choices=sorted(SUITES))
    p_check.add_argument("--instance", choices=sorted(INSTANCES), default="symm")
    p_check.add_argument("--max-level", type=int, default=None)
    p_check.add_argument("--trials", type=int, default=None)
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--word-len", type=int, default=None)
    p_check.add_argument("--format", choices=("text", "json"), default="text")
    p_check.set_defaults(func=cmd_check)

    p_nerve = sub.add_parser("nerve", help="emit nerve simplices (JSON) or a "
                                           "1-skeleton (DOT)")
    p_nerve.add_argument("--instance", choices=sorted(INSTANCES), default="symm")
    p_nerve.add_argument("--level", type=int, default=1)
    p_nerve.add_argument("--dimension", type=int, default=2)
    p_nerve.add_argument("--count", type=int, default=3)
    p_nerve.add_argument("--seed", type=int, default=0)
    p_nerve.add_argument("--word-len", type=int, default=6)
    p_nerve.add_argument("--format", choices=("json", "dot"), default="json")
    p_nerve.set_defaults(func=cmd_nerve)

    p_kan = sub.add_parser("kan-lift", help="lift a horn described in JSON")
    p_kan.add_argument("horn")
    p_kan.add_argument("--instance", choices=sorted(INSTANCES), default=None)
    p_kan.set_defaults(func=cmd_kan_lift)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
