"""Exact prediction of critical-path transitions for single-cost moves.

Moving one activity's cost splits the terms into two slope classes: terms
containing the activity shift linearly with the move, the rest stay flat.
The maximum of each class keeps its own argmax along the whole ray, so the
overall argmax changes at most once, at the rational step where the two
class maxima meet.  ``ray_trace`` computes that breakpoint exactly;
``predict_transitions`` answers the same question combinatorially from the
adjacency graph, without costs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    BadParameters,
    DimensionMismatch,
    IndexOutOfRange,
    OnWall,
    UnknownTerm,
)
from .chambers import LabeledGraph, adjacency_graph
from .network import DEFAULT_CHAIN_CAP, ProjectNetwork
from .realise import eft_polynomial
from .tropical import EvalResult, TropicalPolynomial, term_key


class Crossing(NamedTuple):
    step: Fraction
    value: Fraction
    tie: tuple[frozenset, ...]
    after: tuple[frozenset, ...]


class Horizon(NamedTuple):
    kind: str                 # "stable" or "floor"
    step: Fraction | None     # distance to the cost floor, floor case only
    final: tuple[frozenset, ...]


@dataclass(frozen=True)
class WhatIfResult:
    activity: int
    sign: int
    start_value: Fraction
    start_argmax: tuple[frozenset, ...]
    crossings: tuple[Crossing, ...]
    horizon: Horizon


def critical_paths(network: ProjectNetwork, costs, *,
                   cap: int = DEFAULT_CHAIN_CAP) -> EvalResult:
    """EFT value and the chains attaining it at the given costs."""
    return eft_polynomial(network, cap=cap).evaluate(costs)


def ray_trace(poly: TropicalPolynomial, costs, activity: int,
              sign: int) -> WhatIfResult:
    """Sweep one activity's cost and report the exact argmax breakpoint.

    The start point must have a unique critical term; decreasing traces
    stop at the cost floor (activity cost zero).
    """
    if sign not in (1, -1):
        raise BadParameters(f"sign must be +1 or -1, got {sign!r}")
    if not 1 <= activity <= poly.n:
        raise IndexOutOfRange(activity, poly.n)
    t = [Fraction(x) for x in costs]
    value, argmax = poly.evaluate(t)
    if len(argmax) > 1:
        raise OnWall(argmax)
    current = argmax[0]

    moving = [term for term in poly.support if activity in term]
    flat = [term for term in poly.support if activity not in term]

    def class_max(terms):
        if not terms:
            return None, ()
        vals = [(sum(t[i - 1] for i in term), term) for term in terms]
        best = max(v for v, _ in vals)
        winners = tuple(term for v, term in vals if v == best)
        return best, winners

    moving_max, moving_arg = class_max(moving)
    flat_max, flat_arg = class_max(flat)
    floor = t[activity - 1] if sign == -1 else None

    crossings: list[Crossing] = []
    if sign == 1:
        if activity in current or flat_max is None or moving_max is None:
            # The rising class already leads (or is the only class).
            final = (current,)
        else:
            step = value - moving_max
            tie = _merge(argmax, moving_arg)
            crossings.append(Crossing(step, value, tie, moving_arg))
            final = moving_arg
        horizon = Horizon("stable", None, final)
    else:
        if activity not in current or flat_max is None:
            final = (current,)
        else:
            step = value - flat_max
            if step <= floor:
                tie = _merge(argmax, flat_arg)
                crossings.append(Crossing(step, flat_max, tie, flat_arg))
                final = tie if step == floor else flat_arg
            else:
                final = (current,)
        horizon = Horizon("floor", floor, final)
    return WhatIfResult(
        activity=activity,
        sign=sign,
        start_value=value,
        start_argmax=argmax,
        crossings=tuple(crossings),
        horizon=horizon,
    )


def _merge(*groups) -> tuple[frozenset, ...]:
    seen = set()
    for g in groups:
        seen.update(g)
    return tuple(sorted(seen, key=term_key))


class TransitionPrediction(NamedTuple):
    candidates: tuple[frozenset, ...]
    code: str  # "exit" or "no-exit"


def predict_transitions(poly: TropicalPolynomial, term, activity: int,
                        sign: int, *,
                        graph: LabeledGraph | None = None
                        ) -> TransitionPrediction:
    """Adjacent chambers reachable when one cost moves in one direction.

    Decreasing a cost inside the current critical term can only hand over
    to adjacent terms avoiding the activity; increasing a cost outside it,
    to adjacent terms containing the activity.  The other two combinations
    push deeper into the current chamber and return no candidates.
    """
    current = frozenset(term)
    if current not in set(poly.support):
        raise UnknownTerm(current)
    if not 1 <= activity <= poly.n:
        raise IndexOutOfRange(activity, poly.n)
    if sign not in (1, -1):
        raise BadParameters(f"sign must be +1 or -1, got {sign!r}")
    if graph is None:
        graph = adjacency_graph(poly)
    inside = activity in current
    if (sign == -1 and not inside) or (sign == 1 and inside):
        return TransitionPrediction((), "no-exit")
    neighbours = [
        v for v in graph.vertices
        if v != current and graph.has_edge(current, v)
    ]
    if sign == -1:
        cands = [v for v in neighbours if activity not in v]
    else:
        cands = [v for v in neighbours if activity in v]
    return TransitionPrediction(tuple(sorted(cands, key=term_key)), "exit")
