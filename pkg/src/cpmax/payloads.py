"""Response payloads shared verbatim by the CLI and the HTTP service."""

from __future__ import annotations

from .chambers import ChamberLocation, LabeledGraph
from .serialize import format_rational
from .tropical import EvalResult, TropicalPolynomial, term_key
from .whatif import TransitionPrediction, WhatIfResult


def terms_payload(terms) -> list[list[int]]:
    return [list(term_key(t)) for t in sorted(terms, key=term_key)]


def eval_payload(result: EvalResult, costs=None) -> dict:
    out: dict = {}
    if costs is not None:
        out["costs"] = [format_rational(c) for c in costs]
    out["value"] = format_rational(result.value)
    out["critical"] = terms_payload(result.argmax)
    return out


def chamber_payload(location: ChamberLocation) -> dict:
    return {"kind": location.kind, "terms": terms_payload(location.terms)}


def whatif_payload(result: WhatIfResult,
                   prediction: TransitionPrediction | None = None) -> dict:
    out = {
        "activity": result.activity,
        "direction": "up" if result.sign == 1 else "down",
        "start": {
            "value": format_rational(result.start_value),
            "critical": terms_payload(result.start_argmax),
        },
        "crossings": [
            {
                "step": format_rational(c.step),
                "value": format_rational(c.value),
                "tie": terms_payload(c.tie),
                "next": terms_payload(c.after),
            }
            for c in result.crossings
        ],
        "horizon": {
            "kind": result.horizon.kind,
            **(
                {"step": format_rational(result.horizon.step)}
                if result.horizon.step is not None
                else {}
            ),
            "critical": terms_payload(result.horizon.final),
        },
    }
    if prediction is not None:
        out["predicted"] = terms_payload(prediction.candidates)
        out["prediction"] = prediction.code
    return out
