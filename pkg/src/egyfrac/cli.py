"""Command-line interface.

Commands: seq, const, verify {identities|theorem|lemma}, score, witness,
compare, greedy. Every command is deterministic given its flags (fuzzing
requires an explicit --seed), all big integers are serialized as decimal
strings in JSON, and decimal renderings are truncations of a certified
enclosure's lower endpoint, annotated with the enclosure width.

Exit codes: 0 ok; 1 verification failed (a theorem-backed check came
back false, which signals a bug); 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass
from typing import Any

from . import _backend as _b
from . import decomposition as dec
from . import lemmas
from .constants import ScoreExpr, score_compare, score_enclosure, score_normalize
from .errors import DigitBudgetError, RefinementLimitError
from .exact import truncate_decimal
from .sylvester import (
    DEFAULT_DIGIT_BUDGET,
    set_digit_budget,
    terms,
    verify_product,
    verify_shift,
    verify_telescoping,
)

_EXIT_CODES = {"ok": 0, "verification-failed": 1, "invalid-input": 2}


@dataclass(frozen=True)
class CommandResult:
    status: str
    text: str
    json_obj: Any

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self.status]


def _invalid(message: str) -> CommandResult:
    return CommandResult("invalid-input", message, {"error": message})


def _failed(message: str, obj: Any = None) -> CommandResult:
    return CommandResult(
        "verification-failed", message, obj if obj is not None else {"error": message}
    )


def cmd_seq(n: int, count: int) -> CommandResult:
    if n < 1:
        return _invalid("need --n >= 1")
    if count < 1:
        return _invalid("need --count >= 1")
    values = [_b.int_str(t) for t in terms(n, count)]
    return CommandResult("ok", "\n".join(values), values)


def cmd_const(n: int, digits: int) -> CommandResult:
    if n < 1:
        return _invalid("need --n >= 1")
    if not 1 <= digits <= 1000:
        return _invalid("need 1 <= --digits <= 1000")
    enclosure = score_enclosure(ScoreExpr(n, 0), digits)
    decimal = truncate_decimal(enclosure.lo, digits)
    text = "\n".join(
        [
            f"c_{n} = {decimal} (width <= 1e-{digits})",
            f"lo = {_b.rat_str(enclosure.lo)}",
            f"hi = {_b.rat_str(enclosure.hi)}",
            f"width = {_b.rat_str(enclosure.width)}",
        ]
    )
    payload = {
        "n": _b.int_str(n),
        "digits": digits,
        "decimal": decimal,
        "lo": _b.rat_str(enclosure.lo),
        "hi": _b.rat_str(enclosure.hi),
        "width": _b.rat_str(enclosure.width),
    }
    return CommandResult("ok", text, payload)


def _verify_identities(max_n: int, max_j: int) -> CommandResult:
    if max_n < 1 or max_j < 1:
        return _invalid("need positive range caps")
    failures = []
    checks = 0
    for n in range(1, max_n + 1):
        for j in range(1, max_j + 1):
            checks += 1
            if not verify_telescoping(n, j):
                failures.append(f"telescoping n={n} j={j}")
            checks += 1
            if not verify_product(n, j):
                failures.append(f"product n={n} j={j}")
    for n in range(1, max_n + 1):
        for i in range(1, max_j + 1):
            for j in range(1, max_j + 2 - i):
                checks += 1
                if not verify_shift(n, i, j):
                    failures.append(f"shift n={n} i={i} j={j}")
    payload = {"suite": "identities", "checks": checks, "failures": failures}
    if failures:
        return _failed("\n".join(["FAIL " + f for f in failures]), payload)
    return CommandResult("ok", f"identities: {checks} checks passed", payload)


def _verify_theorem(max_n: int) -> CommandResult:
    if max_n < 1:
        return _invalid("need positive range caps")
    failures = []
    checks = 0
    for n in range(1, max_n + 1):
        w = dec.witness(n)
        checks += 1
        if dec.is_sylvester(w):
            failures.append(f"witness n={n} degenerated to the canonical form")
        checks += 1
        if not dec.theorem_check(w):
            failures.append(f"witness n={n} does not score below c_{n}")
        checks += 1
        if not dec.verify_comparison_equation(n, 8):
            failures.append(f"comparison equation n={n}")
        if n >= 2:
            checks += 1
            if not dec.verify_l_inequality(n):
                failures.append(f"tail-seed inequality n={n}")
    payload = {"suite": "theorem", "checks": checks, "failures": failures}
    if failures:
        return _failed("\n".join(["FAIL " + f for f in failures]), payload)
    return CommandResult("ok", f"theorem: {checks} checks passed", payload)


def _verify_lemma(seed, cases: int, length: int) -> CommandResult:
    if seed is None:
        return _invalid("verify lemma requires an explicit --seed")
    if cases < 0 or length < 1:
        return _invalid("need --cases >= 0 and --len >= 1")
    comparison = lemmas.fuzz_comparison(seed, cases, length)
    products = lemmas.fuzz_prefix_product(seed, cases, length)
    text = comparison.to_text() + products.to_text().rstrip("\n")
    payload = {
        "suite": "lemma",
        "comparison": comparison.to_json_obj(),
        "prefix_product": products.to_json_obj(),
    }
    if not (comparison.ok and products.ok):
        return _failed(text, payload)
    return CommandResult("ok", text, payload)


def _score_payload(expr: ScoreExpr, digits: int) -> dict:
    enclosure = score_enclosure(expr, digits)
    return {
        "base": _b.int_str(expr.base),
        "halvings": expr.halvings,
        "display": str(expr),
        "decimal": truncate_decimal(enclosure.lo, digits),
        "lo": _b.rat_str(enclosure.lo),
        "hi": _b.rat_str(enclosure.hi),
    }


def cmd_score(document: str, target_n=None, digits: int = 4) -> CommandResult:
    if not 1 <= digits <= 1000:
        return _invalid("need 1 <= --digits <= 1000")
    try:
        obj = json.loads(document)
    except json.JSONDecodeError as exc:
        return _invalid(f"decomposition is not valid JSON: {exc}")
    d = dec.from_json_dict(obj)
    target = d.n if target_n is None else target_n
    if target < 1:
        return _invalid("need --n >= 1")
    canonical = dec.canonicalize(d)
    expr = dec.score(d)
    verdict = score_compare(expr, ScoreExpr(target, 0))
    score_info = _score_payload(expr, digits)
    target_info = _score_payload(ScoreExpr(target, 0), digits)
    text = "\n".join(
        [
            "canonical " + json.dumps(canonical.to_json_dict(), sort_keys=True),
            f"score {score_info['display']} ~ {score_info['decimal']}",
            f"target {target_info['display']} ~ {target_info['decimal']}",
            f"verdict {verdict.value}",
        ]
    )
    payload = {
        "canonical": canonical.to_json_dict(),
        "score": score_info,
        "target": target_info,
        "verdict": verdict.value,
    }
    return CommandResult("ok", text, payload)


def cmd_witness(n: int) -> CommandResult:
    if n < 1:
        return _invalid("need --n >= 1")
    w = dec.witness(n)
    expr = dec.score(w)
    verdict = score_compare(expr, ScoreExpr(n, 0))
    doc = json.dumps(w.to_json_dict(), sort_keys=True)
    payload = {
        "decomposition": w.to_json_dict(),
        "score": {"base": _b.int_str(expr.base), "halvings": expr.halvings},
        "verdict": verdict.value,
    }
    text = doc + "\n" + verdict.value
    if verdict.value != "LT":
        return _failed(text, payload)
    return CommandResult("ok", text, payload)


def _parse_score_expr(text: str) -> ScoreExpr:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(
            f"score expression {text!r} must be 'base,halvings' (e.g. 4,2)"
        )
    try:
        base, halvings = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"score expression {text!r} has non-integer parts") from None
    return ScoreExpr(base, halvings)


def cmd_compare(lhs_text: str, rhs_text: str) -> CommandResult:
    lhs = _parse_score_expr(lhs_text)
    rhs = _parse_score_expr(rhs_text)
    lhs_normal = score_normalize(lhs)
    rhs_normal = score_normalize(rhs)
    verdict = score_compare(lhs, rhs)
    text = "\n".join(
        [
            f"lhs {lhs} -> {lhs_normal}",
            f"rhs {rhs} -> {rhs_normal}",
            f"verdict {verdict.value}",
        ]
    )
    payload = {
        "lhs": {"base": _b.int_str(lhs.base), "halvings": lhs.halvings},
        "lhs_normal": {
            "base": _b.int_str(lhs_normal.base),
            "halvings": lhs_normal.halvings,
        },
        "rhs": {"base": _b.int_str(rhs.base), "halvings": rhs.halvings},
        "rhs_normal": {
            "base": _b.int_str(rhs_normal.base),
            "halvings": rhs_normal.halvings,
        },
        "verdict": verdict.value,
    }
    return CommandResult("ok", text, payload)


def cmd_greedy(fraction: str, max_terms: int) -> CommandResult:
    parts = fraction.split("/")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        return _invalid(f"fraction {fraction!r} must look like p/q")
    expansion = dec.greedy_expand(int(parts[0]), int(parts[1]), max_terms)
    lines = [" ".join(_b.int_str(a) for a in expansion.denominators)]
    if not expansion.complete:
        lines.append(f"incomplete remainder = {_b.rat_str(expansion.remainder)}")
    payload = {
        "target": _b.rat_str(expansion.target),
        "denominators": [_b.int_str(a) for a in expansion.denominators],
        "remainder": _b.rat_str(expansion.remainder),
        "complete": expansion.complete,
    }
    return CommandResult("ok", "\n".join(lines), payload)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit JSON instead of text"
    )
    common.add_argument(
        "--max-digits",
        type=int,
        default=DEFAULT_DIGIT_BUDGET,
        help="per-term decimal digit budget for sequence terms "
        f"(default {DEFAULT_DIGIT_BUDGET})",
    )
    parser = argparse.ArgumentParser(
        prog="egyfrac",
        description="Exact arithmetic for doubly-exponential unit-fraction "
        "decompositions, their limit constants, and growth-score comparisons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common], help="print sequence terms")
    p.add_argument("--n", type=int, required=True, help="seed (decomposes 1/n)")
    p.add_argument("--count", type=int, default=10, help="number of terms")

    p = sub.add_parser("const", parents=[common], help="enclose the constant c_n")
    p.add_argument("--n", type=int, required=True, help="seed")
    p.add_argument("--digits", type=int, default=4, help="enclosure width 1e-digits")

    p = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    p.add_argument("suite", choices=["identities", "theorem", "lemma"])
    p.add_argument("--n", type=int, default=10, help="cap on the seed range")
    p.add_argument(
        "--count", type=int, default=6, help="identities: cap on the term index"
    )
    p.add_argument("--seed", type=int, help="lemma: fuzz seed (required)")
    p.add_argument("--cases", type=int, default=100, help="lemma: number of cases")
    p.add_argument("--len", type=int, default=20, help="lemma: instance length")

    p = sub.add_parser("score", parents=[common], help="score a decomposition")
    p.add_argument("decomposition", help="JSON document, as emitted by witness")
    p.add_argument(
        "--n", type=int, help="target seed to compare against (default: its own)"
    )
    p.add_argument("--digits", type=int, default=4, help="enclosure digits")

    p = sub.add_parser("witness", parents=[common], help="emit a witness for 1/n")
    p.add_argument("--n", type=int, required=True, help="target seed")

    p = sub.add_parser(
        "compare", parents=[common], help="compare two score expressions"
    )
    p.add_argument("lhs", help="'base,halvings' pair, e.g. 4,2")
    p.add_argument("rhs", help="'base,halvings' pair, e.g. 1,0")

    p = sub.add_parser("greedy", parents=[common], help="greedy expansion of p/q")
    p.add_argument("fraction", help="target as p/q, e.g. 4/5")
    p.add_argument("--count", type=int, default=32, help="maximum number of terms")

    return parser


def _dispatch(args: argparse.Namespace) -> CommandResult:
    if args.command == "seq":
        return cmd_seq(args.n, args.count)
    if args.command == "const":
        return cmd_const(args.n, args.digits)
    if args.command == "verify":
        if args.suite == "identities":
            return _verify_identities(args.n, args.count)
        if args.suite == "theorem":
            return _verify_theorem(args.n)
        return _verify_lemma(args.seed, args.cases, args.len)
    if args.command == "score":
        return cmd_score(args.decomposition, args.n, args.digits)
    if args.command == "witness":
        return cmd_witness(args.n)
    if args.command == "compare":
        return cmd_compare(args.lhs, args.rhs)
    if args.command == "greedy":
        return cmd_greedy(args.fraction, args.count)
    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.max_digits < 1:
        result = _invalid("need --max-digits >= 1")
        print(result.text)
        return result.exit_code
    previous_budget = set_digit_budget(args.max_digits)
    try:
        result = _dispatch(args)
    except DigitBudgetError as exc:
        result = _invalid(str(exc))
    except RefinementLimitError as exc:
        result = _failed(str(exc))
    except ValueError as exc:
        result = _invalid(str(exc))
    finally:
        set_digit_budget(previous_budget)
    if args.json:
        print(json.dumps(result.json_obj, sort_keys=True, indent=2))
    else:
        print(result.text)
    return result.exit_code
