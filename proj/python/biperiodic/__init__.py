"""Exact generalized bi-periodic Fibonacci quaternions and octonions.

Values cross the boundary as ``"p/q"`` strings and come back as
:class:`fractions.Fraction`. Parameter tuples are ``(a, b, w0, w1)`` and may
hold ints, Fractions or strings.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

from . import _core

Number = Union[int, Fraction, str]

__all__ = [
    "Params",
    "sequence",
    "quaternion",
    "octonion",
    "binet",
    "quaternion_binet",
    "octonion_binet",
    "genfunc",
    "multiply",
    "norm",
    "identity",
    "verify",
    "run_cli",
]


class Params(NamedTuple):
    a: Number
    b: Number
    w0: Number = 0
    w1: Number = 1


def _text(x: Number) -> str:
    if isinstance(x, str):
        return x
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _params(p: Sequence[Number]) -> tuple:
    if len(p) != 4:
        raise ValueError("params must be (a, b, w0, w1)")
    return tuple(_text(x) for x in p)


def _fractions(values: Iterable[str]) -> list[Fraction]:
    return [Fraction(v) for v in values]


def _report(text: str) -> dict:
    return json.loads(text)


def sequence(params: Sequence[Number], start: int, stop: int) -> list[Fraction]:
    """w_n for start <= n < stop; negative n use the backward recurrence."""
    return _fractions(_core.sequence(_params(params), start, stop))


def quaternion(params: Sequence[Number], n: int) -> list[Fraction]:
    return _fractions(_core.quaternion(_params(params), n))


def octonion(params: Sequence[Number], n: int) -> list[Fraction]:
    return _fractions(_core.octonion(_params(params), n))


def binet(params: Sequence[Number], n: int) -> Fraction:
    return Fraction(_core.binet(_params(params), n))


def quaternion_binet(params: Sequence[Number], n: int) -> list[Fraction]:
    return _fractions(_core.quaternion_binet(_params(params), n))


def octonion_binet(params: Sequence[Number], n: int) -> list[Fraction]:
    return _fractions(_core.octonion_binet(_params(params), n))


def genfunc(params: Sequence[Number], order: int, octonion: bool = False) -> list[list[Fraction]]:
    return [_fractions(c) for c in _core.genfunc(_params(params), order, octonion)]


def multiply(u: Sequence[Number], v: Sequence[Number]) -> list[Fraction]:
    return _fractions(_core.multiply([_text(x) for x in u], [_text(x) for x in v]))


def norm(u: Sequence[Number]) -> Fraction:
    return Fraction(_core.norm([_text(x) for x in u]))


def identity(name: str, params: Sequence[Number], n: int, r: int = 0):
    """One identity report as a dict; the summations return a list of three."""
    reports = [_report(t) for t in _core.identity(name, _params(params), n, r)]
    return reports if name.startswith("sums_") else reports[0]


def verify(params: Sequence[Number], n_max: int) -> list[dict]:
    return [_report(t) for t in _core.verify(_params(params), n_max)]


def run_cli(*args: str) -> tuple[int, str, str]:
    """Runs the command-line front end in-process."""
    return _core.run_cli(list(args))
