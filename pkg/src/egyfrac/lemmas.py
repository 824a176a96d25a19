"""Exact checkers and fuzzers for the comparison and prefix-product lemmas.

The comparison lemma: fix a target u > 0 and a junction index t >= 1.
Suppose a nonincreasing positive sequence (u_i) satisfies, for every
prefix length m >= t,

    sum(u_i, i <= m) + u * prod(u_i, i <= m) == u,

and a nonincreasing positive sequence (v_i) satisfies the companion
inequality (<= u) for every m >= t, together with v_m <= u_m for m < t.
Then every prefix sum of v is bounded by the matching prefix sum of u.

The prefix-product lemma: for nonincreasing positive (x_i), (y_i) of
equal length, if every prefix product of x dominates the matching
prefix product of y, then sum(x) >= sum(y).

Both are theorems, so the fuzzers expect a 100% pass rate; any failure
is serialized verbatim in the report (it would signal a bug).

All checks reduce to integer identities by clearing denominators, so
they involve no rounding and, deliberately, no gcd reductions: prefix
products here grow doubly exponentially (hundreds of thousands of
digits at length 20), where canonicalizing every intermediate rational
costs far more than the bare multiplications.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Sequence

from . import _backend as _b
from ._backend import Rational
from .errors import MonotonicityError

_RETRY_BUDGET = 200


def _as_rational(x) -> Rational:
    # rational-like values (Fraction, mpq, int) pass through untouched;
    # reconstructing them would redo a potentially huge gcd
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        return x
    return _b.mpq(x)


def _check_shape(seq: Sequence, what: str) -> tuple:
    out = tuple(_as_rational(x) for x in seq)
    for x in out:
        if x <= 0:
            raise ValueError(f"{what} terms must be positive")
    for a, b in zip(out, out[1:]):
        if b > a:
            raise MonotonicityError(f"{what} must be nonincreasing")
    return out


@dataclass(frozen=True)
class ComparisonInstance:
    """One instance (u, t, u_seq, v_seq) of the comparison lemma."""

    u: Rational
    t: int
    u_seq: tuple
    v_seq: tuple

    def __post_init__(self):
        u = _as_rational(self.u)
        if u <= 0:
            raise ValueError("target u must be positive")
        t = int(self.t)
        if t < 1:
            raise ValueError("junction index t must be >= 1")
        u_seq = _check_shape(self.u_seq, "u_seq")
        v_seq = _check_shape(self.v_seq, "v_seq")
        if len(u_seq) != len(v_seq):
            raise ValueError("u_seq and v_seq must have equal length")
        if len(u_seq) < t:
            raise ValueError("sequences must have length >= t")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "u_seq", u_seq)
        object.__setattr__(self, "v_seq", v_seq)


def check_equation_hypothesis(inst: ComparisonInstance) -> bool:
    """True iff sum + u*prod == u holds exactly at every m with t <= m <= N.

    With running sum A/Q and product N/Q over a common unreduced
    denominator Q, the equation clears to A*u_den + u_num*N == u_num*Q.
    """
    un, ud = inst.u.numerator, inst.u.denominator
    acc, den, prod = 0, 1, 1
    for m, x in enumerate(inst.u_seq, start=1):
        p, q = x.numerator, x.denominator
        acc = acc * q + p * den
        den = den * q
        prod = prod * p
        if m >= inst.t and acc * ud + un * prod != un * den:
            return False
    return True


def check_inequality_hypothesis(inst: ComparisonInstance) -> bool:
    """True iff v_m <= u_m for m < t and sum + u*prod <= u for t <= m <= N."""
    for vm, um in zip(inst.v_seq[: inst.t - 1], inst.u_seq[: inst.t - 1]):
        if vm > um:
            return False
    un, ud = inst.u.numerator, inst.u.denominator
    acc, den, prod = 0, 1, 1
    for m, x in enumerate(inst.v_seq, start=1):
        p, q = x.numerator, x.denominator
        acc = acc * q + p * den
        den = den * q
        prod = prod * p
        if m >= inst.t and acc * ud + un * prod > un * den:
            return False
    return True


def conclusion_holds(inst: ComparisonInstance) -> bool:
    """True iff every prefix sum of v_seq is <= the matching sum of u_seq."""
    av, dv = 0, 1
    au, du = 0, 1
    for vx, ux in zip(inst.v_seq, inst.u_seq):
        av = av * vx.denominator + vx.numerator * dv
        dv = dv * vx.denominator
        au = au * ux.denominator + ux.numerator * du
        du = du * ux.denominator
        if av * du > au * dv:
            return False
    return True


def check_prefix_product_lemma(x_seq, y_seq) -> tuple[bool, bool]:
    """(hypothesis, conclusion) of the prefix-product lemma, both exact.

    hypothesis: every prefix product of x dominates the matching prefix
    product of y. conclusion: sum(x) >= sum(y). The lemma asserts the
    first implies the second; both are reported unconditionally.
    """
    xs = _check_shape(x_seq, "x_seq")
    ys = _check_shape(y_seq, "y_seq")
    if len(xs) != len(ys):
        raise ValueError("x_seq and y_seq must have equal length")
    hypothesis = True
    px, qx = 1, 1
    py, qy = 1, 1
    for x, y in zip(xs, ys):
        px, qx = px * x.numerator, qx * x.denominator
        py, qy = py * y.numerator, qy * y.denominator
        if px * qy < py * qx:
            hypothesis = False
            break
    ax, dx = 0, 1
    ay, dy = 0, 1
    for x, y in zip(xs, ys):
        ax = ax * x.denominator + x.numerator * dx
        dx = dx * x.denominator
        ay = ay * y.denominator + y.numerator * dy
        dy = dy * y.denominator
    conclusion = ax * dy >= ay * dx
    return hypothesis, conclusion


def extend_equation_sequence(u: Rational, prefix: Sequence) -> Rational:
    """The unique next term keeping sum + u*prod == u at the longer length.

    Subtracting the equation at consecutive lengths forces
    next = z / (1 + z) with z = u * prod(prefix). Raises
    MonotonicityError when that term would exceed the last prefix term.
    """
    u = _b.mpq(u)
    if u <= 0:
        raise ValueError("target u must be positive")
    z = u
    for p in prefix:
        p = _as_rational(p)
        if p <= 0:
            raise ValueError("prefix terms must be positive")
        z = z * p
    nxt = z / (1 + z)
    if len(prefix) and nxt > _as_rational(prefix[-1]):
        raise MonotonicityError(
            f"extending would break the nonincreasing invariant: "
            f"{_b.rat_str(nxt)} exceeds the last prefix term"
        )
    return nxt


@dataclass(frozen=True)
class FuzzReport:
    """Deterministic summary of one fuzz run; serializes byte-stably."""

    kind: str
    seed: int
    cases: int
    length: int
    generated: int
    exhausted: int
    hypotheses_ok: int
    conclusions_ok: int
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_text(self) -> str:
        lines = [
            f"fuzz-{self.kind} seed={self.seed} cases={self.cases} "
            f"length={self.length}",
            f"generated={self.generated} exhausted={self.exhausted}",
            f"hypotheses-ok={self.hypotheses_ok} "
            f"conclusions-ok={self.conclusions_ok}",
            f"failures={len(self.failures)}",
        ]
        lines.extend(self.failures)
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "seed": self.seed,
            "cases": self.cases,
            "length": self.length,
            "generated": self.generated,
            "exhausted": self.exhausted,
            "hypotheses_ok": self.hypotheses_ok,
            "conclusions_ok": self.conclusions_ok,
            "failures": list(self.failures),
        }


def _dump_instance(case: int, inst: ComparisonInstance, stage: str) -> str:
    return json.dumps(
        {
            "case": case,
            "stage": stage,
            "u": _b.rat_str(inst.u),
            "t": inst.t,
            "u_seq": [_b.rat_str(x) for x in inst.u_seq],
            "v_seq": [_b.rat_str(x) for x in inst.v_seq],
        },
        separators=(",", ":"),
        sort_keys=True,
    )


def _draft_instance(rng: random.Random, length: int) -> ComparisonInstance | None:
    """One generation attempt; None signals a rejected draft.

    The target u is drawn with numerator and denominator at most 100,
    biased toward unit fractions: unit targets keep every tail numerator
    equal to 1, which keeps the doubly-exponential tail cheap to reduce.
    Head terms eat at least half the remaining mass each, which makes
    the junction term automatically nonincreasing unless clamping
    interfered; the first tail term is the only other rejection point.
    """
    if rng.random() < 0.25:
        u = _b.mpq(rng.randint(2, 100), rng.randint(1, 100))
    else:
        u = _b.mpq(1, rng.randint(1, 100))
    t = rng.randint(1, min(4, length))

    head = []
    acc = _b.mpq(0)
    for _ in range(t - 1):
        fd = rng.randint(4, 16)
        fn = rng.randint((fd + 1) // 2, fd - 1)
        cand = (u - acc) * _b.mpq(fn, fd)
        if head and cand > head[-1]:
            cand = head[-1]
        head.append(cand)
        acc += cand
    prod = _b.mpq(1)
    for h in head:
        prod *= h
    junction = (u - acc) / (1 + u * prod)
    if head and junction > head[-1]:
        return None
    terms = head + [junction]

    # tail recurrence on raw coprime pairs: z := u * prod(terms) stays
    # reduced, next term z/(1+z) is (zp, zp+zq), and z picks up exactly
    # the new term's factors, so no gcd is ever needed past this point
    z = u * prod * junction
    zp, zq = z.numerator, z.denominator
    if length > t and zp * terms[-1].denominator > terms[-1].numerator * (zp + zq):
        return None
    while len(terms) < length:
        p, q = zp, zp + zq
        terms.append(_b.mpq(p, q))
        zp, zq = zp * p, zq * q

    chosen = set(rng.sample(range(length), rng.randint(1, length)))
    v = []
    for i, ui in enumerate(terms):
        vi = ui
        if i in chosen:
            fd = rng.randint(2, 12)
            vi = ui * _b.mpq(rng.randint(1, fd), fd)
        if v and vi > v[-1]:
            vi = v[-1]
        v.append(vi)
    return ComparisonInstance(u=u, t=t, u_seq=tuple(terms), v_seq=tuple(v))


def fuzz_comparison(seed: int, cases: int, length: int) -> FuzzReport:
    """Generate and check ``cases`` comparison-lemma instances.

    Each instance satisfies both hypotheses by construction (and is
    re-verified through the public checkers); conclusion_holds must then
    be true on every one. Case index i owns the RNG stream seeded by
    "{seed}/cmp/{i}", so reports are reproducible and order-independent.
    """
    if cases < 0:
        raise ValueError("cases must be >= 0")
    if length < 1:
        raise ValueError("length must be >= 1")
    generated = exhausted = hyp_ok = concl_ok = 0
    failures: list[str] = []
    for case in range(cases):
        rng = random.Random(f"{seed}/cmp/{case}")
        inst = None
        for _ in range(_RETRY_BUDGET):
            inst = _draft_instance(rng, length)
            if inst is not None:
                break
        if inst is None:
            exhausted += 1
            continue
        generated += 1
        if not (check_equation_hypothesis(inst) and check_inequality_hypothesis(inst)):
            failures.append(_dump_instance(case, inst, "hypothesis"))
            continue
        hyp_ok += 1
        if conclusion_holds(inst):
            concl_ok += 1
        else:
            failures.append(_dump_instance(case, inst, "conclusion"))
    return FuzzReport(
        kind="comparison",
        seed=seed,
        cases=cases,
        length=length,
        generated=generated,
        exhausted=exhausted,
        hypotheses_ok=hyp_ok,
        conclusions_ok=concl_ok,
        failures=tuple(failures),
    )


def fuzz_prefix_product(seed: int, cases: int, length: int) -> FuzzReport:
    """Generate and check ``cases`` prefix-product-lemma pairs.

    x is a random positive nonincreasing sequence; y multiplies x by a
    nonincreasing sequence of factors <= 1 (occasionally all 1, the
    equality case), which makes the domination hypothesis hold by
    construction. Same per-case seeding scheme as fuzz_comparison.
    """
    if cases < 0:
        raise ValueError("cases must be >= 0")
    if length < 1:
        raise ValueError("length must be >= 1")
    generated = hyp_ok = concl_ok = 0
    failures: list[str] = []
    for case in range(cases):
        rng = random.Random(f"{seed}/prod/{case}")
        xs = []
        val = _b.mpq(rng.randint(1, 100), rng.randint(1, 100))
        for j in range(length):
            if j:
                fd = rng.randint(1, 12)
                val = val * _b.mpq(rng.randint(1, fd), fd)
            xs.append(val)
        if rng.random() < 0.1:
            gains = [_b.mpq(1)] * length
        else:
            gains = []
            g = _b.mpq(rng.randint(1, 12), 12)
            for j in range(length):
                if j:
                    fd = rng.randint(1, 12)
                    g = g * _b.mpq(rng.randint(1, fd), fd)
                gains.append(g)
        ys = [x * g for x, g in zip(xs, gains)]
        generated += 1
        hypothesis, conclusion = check_prefix_product_lemma(xs, ys)
        if not hypothesis:
            failures.append(
                json.dumps(
                    {
                        "case": case,
                        "stage": "hypothesis",
                        "x_seq": [_b.rat_str(x) for x in xs],
                        "y_seq": [_b.rat_str(y) for y in ys],
                    },
                    separators=(",", ":"),
                    sort_keys=True,
                )
            )
            continue
        hyp_ok += 1
        if conclusion:
            concl_ok += 1
        else:
            failures.append(
                json.dumps(
                    {
                        "case": case,
                        "stage": "conclusion",
                        "x_seq": [_b.rat_str(x) for x in xs],
                        "y_seq": [_b.rat_str(y) for y in ys],
                    },
                    separators=(",", ":"),
                    sort_keys=True,
                )
            )
    return FuzzReport(
        kind="prefix-product",
        seed=seed,
        cases=cases,
        length=length,
        generated=generated,
        exhausted=0,
        hypotheses_ok=hyp_ok,
        conclusions_ok=concl_ok,
        failures=tuple(failures),
    )
