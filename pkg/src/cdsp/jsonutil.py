"""Rational-string JSON conventions shared by the serializable types.

Rationals travel as "p/q" strings (or "p" for integers) so that decision
outputs stay exact and byte-stable; floats appear only in quadrature
residual reports.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import SchemaError


def rat_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rat(text, pointer: str = "") -> Fraction:
    if isinstance(text, bool):
        raise SchemaError("expected a rational string or integer", pointer)
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"not a rational: {text!r} ({exc})", pointer) from exc
    raise SchemaError(f"expected a rational string, got {type(text).__name__}", pointer)


def get_field(obj: dict, key: str, pointer: str = ""):
    if not isinstance(obj, dict):
        raise SchemaError("expected an object", pointer)
    if key not in obj:
        raise SchemaError(f"missing field {key!r}", pointer)
    return obj[key]


def rat_field(obj: dict, key: str, pointer: str = "") -> Fraction:
    return parse_rat(get_field(obj, key, pointer), f"{pointer}/{key}")
