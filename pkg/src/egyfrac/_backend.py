"""Integer/rational backend selection.

Every kernel in this package is exact big-integer or big-rational
arithmetic. Two interchangeable lanes provide it:

  * ``gmp``  -- gmpy2's GMP-backed ``mpz``/``mpq``/``isqrt``
  * ``pure`` -- the stdlib's ``int``/``fractions.Fraction``/``math.isqrt``

Both lanes are exact; they differ only in speed (GMP has subquadratic
multiplication and a fast isqrt, which matters once terms reach tens of
thousands of digits). The gmp lane is picked at import when gmpy2 is
importable, unless the ``EGYFRAC_BACKEND`` environment variable forces a
choice (``gmp`` or ``pure``).
"""

from __future__ import annotations

import math
import os
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

# Lane-dependent value types. ``Integer`` is int or gmpy2.mpz; ``Rational``
# is fractions.Fraction or gmpy2.mpq. All are exact and interoperate with
# Python ints transparently.
Integer = Any
Rational = Any

_ENV_VAR = "EGYFRAC_BACKEND"


@dataclass(frozen=True)
class Backend:
    """One arithmetic lane: constructors plus an integer square root."""

    name: str
    mpz: Callable[..., Integer]
    mpq: Callable[..., Rational]
    isqrt: Callable[[Integer], Integer]
    sort_key: int = field(default=0, compare=False)


PURE = Backend(name="pure", mpz=int, mpq=Fraction, isqrt=math.isqrt, sort_key=1)

try:
    import gmpy2 as _gmpy2
except ImportError:  # pragma: no cover - exercised only on gmpy2-less installs
    _gmpy2 = None

if _gmpy2 is not None:
    GMP: Backend | None = Backend(
        name="gmp",
        mpz=_gmpy2.mpz,
        mpq=_gmpy2.mpq,
        isqrt=_gmpy2.isqrt,
        sort_key=0,
    )
else:  # pragma: no cover
    GMP = None

_BY_NAME = {b.name: b for b in (PURE, GMP) if b is not None}


def available_backends() -> tuple[str, ...]:
    """Names of the lanes importable in this environment."""
    return tuple(sorted(_BY_NAME, key=lambda n: _BY_NAME[n].sort_key))


def _initial_backend() -> Backend:
    forced = os.environ.get(_ENV_VAR)
    if forced:
        if forced not in _BY_NAME:
            raise ValueError(
                f"{_ENV_VAR}={forced!r} is not available; "
                f"choose one of {sorted(_BY_NAME)}"
            )
        return _BY_NAME[forced]
    return GMP if GMP is not None else PURE


_active = _initial_backend()


def active() -> Backend:
    """The currently selected lane."""
    return _active


def backend_name() -> str:
    """Name of the currently selected lane (``"gmp"`` or ``"pure"``)."""
    return _active.name


def set_backend(name: str) -> str:
    """Select a lane by name; returns the previous lane's name."""
    if name not in _BY_NAME:
        raise ValueError(f"unknown backend {name!r}; choose one of {sorted(_BY_NAME)}")
    global _active
    previous = _active.name
    _active = _BY_NAME[name]
    return previous


@contextmanager
def use_backend(name: str):
    """Context manager that selects a lane and restores the previous one."""
    previous = set_backend(name)
    try:
        yield _active
    finally:
        set_backend(previous)


def mpz(x: Any) -> Integer:
    return _active.mpz(x)


def mpq(a: Any, b: Any = None) -> Rational:
    if b is None:
        return _active.mpq(a)
    return _active.mpq(a, b)


def isqrt(x: Integer) -> Integer:
    return _active.isqrt(x)


def digits10_bound(x: Integer) -> int:
    """An upper bound on the decimal digit count of ``abs(x)``, cheap to compute.

    Uses bits * 30103/100000 >= bits * log10(2); never underestimates.
    """
    return (x.bit_length() * 30103) // 100000 + 1


def int_str(x: Integer) -> str:
    """Decimal string of an integer, regardless of CPython's int->str cap.

    CPython 3.10.7+ refuses to render ints beyond a digit limit (default
    4300); sequence terms here blow past that almost immediately. gmpy2's
    mpz is unaffected, but the pure lane needs the cap raised.
    """
    try:
        return str(x)
    except ValueError:
        sys.set_int_max_str_digits(max(digits10_bound(x) + 10, 640))
        return str(x)


def rat_str(q: Rational) -> str:
    """``"p/q"`` form of a rational, lane-independent, cap-safe."""
    return f"{int_str(q.numerator)}/{int_str(q.denominator)}"
