"""Exact rationals on the wire, and the canonical JSON encoding.

All JSON emitted by the CLI and the HTTP service goes through ``dumps`` so
both surfaces are byte-identical.  Rationals serialize as strings ("5/3",
"2"); decimal strings parse exactly (json floats are decoded as Fractions,
never as binary floats).
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import BadParameters


def parse_rational(value) -> Fraction:
    """Parse ints, Fractions and strings like "3/2", "1.5" or "7"."""
    if isinstance(value, bool):
        raise BadParameters(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        # Exact wrt the printed decimal, not the binary expansion.
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise BadParameters(f"not a rational: {value!r}") from exc
    raise BadParameters(f"not a rational: {value!r}")


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_cost_vector(values, n: int | None = None) -> tuple[Fraction, ...]:
    if isinstance(values, str):
        values = [v for v in values.split(",") if v.strip()]
    costs = tuple(parse_rational(v) for v in values)
    if n is not None and len(costs) != n:
        raise BadParameters(f"expected {n} costs, got {len(costs)}")
    return costs


def dumps(obj) -> str:
    """Canonical JSON: compact separators, insertion order preserved."""
    return json.dumps(obj, separators=(",", ":"))


def loads(text: str):
    try:
        return json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise BadParameters(f"malformed JSON: {exc}") from exc
