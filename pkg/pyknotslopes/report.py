from __future__ import annotations

import json
from typing import Iterator, Optional

from pyknotslopes.bracket import BracketValue, SweepTelemetry
from pyknotslopes.diagram import PDDiagram, is_alternating, stats
from pyknotslopes.jones import ColoredJonesTable, SlopeSequences, degree_table
from pyknotslopes.laurent import polynomial_record
from pyknotslopes.morse import MorsePresentation
from pyknotslopes.states import (A, B, KauffmanState, boundary_slopes, is_adequate,
                                 loop_witnesses, seifert_state, state_graph, state_slope)


def adequacy_record(d: PDDiagram) -> dict:
    aAdequate, bAdequate = is_adequate(d)
    graphA = state_graph(d, KauffmanState.all_a(d))
    graphB = state_graph(d, KauffmanState.all_b(d))
    return {
        "name": d.name,
        "A": aAdequate,
        "B": bAdequate,
        "v_A": graphA.vertex_count,
        "v_B": graphB.vertex_count,
        "alternating": is_alternating(d),
        **stats(d).to_json(),
        "loopWitnesses": {A: loop_witnesses(d, A), B: loop_witnesses(d, B)},
        "stateGraphs": {A: graphA.to_json(), B: graphB.to_json()}
    }


def slopes_record(d: PDDiagram) -> dict:
    slopeA, slopeB = boundary_slopes(d)
    seifert = seifert_state(d)
    return {
        "name": d.name,
        **stats(d).to_json(),
        "slope_A": slopeA.to_json(),
        "slope_B": slopeB.to_json(),
        "seifertState": seifert.to_json(),
        "seifertSlope": state_slope(d, seifert).to_json()
    }


def jones_record(table: ColoredJonesTable, sequences: Optional[SlopeSequences]) -> dict:
    record = table.to_json()
    record["degrees"] = {str(n): {"jstar": low, "j": high}
                         for n, (low, high) in degree_table(table).items()}
    record["sequences"] = sequences.to_json() if sequences else None
    return record


def bracket_record(d: PDDiagram, value: BracketValue, engine: str,
                   telemetry: Optional[SweepTelemetry] = None) -> dict:
    return {
        "name": d.name,
        "engine": engine,
        "c": len(d),
        "poly_delta": polynomial_record(value.poly_delta),
        "poly_circle": polynomial_record(value.poly_circle),
        "telemetry": telemetry.to_json() if telemetry else None
    }


def cable_record(cabled: MorsePresentation, pd: PDDiagram, m: int, emitPD: bool = False) -> dict:
    aAdequate, bAdequate = is_adequate(pd)
    record = {
        "name": cabled.name,
        "m": m,
        **stats(pd).to_json(),
        "v_A": state_graph(pd, KauffmanState.all_a(pd)).vertex_count,
        "v_B": state_graph(pd, KauffmanState.all_b(pd)).vertex_count,
        "A": aAdequate,
        "B": bAdequate,
        "maxWidth": cabled.maxWidth
    }
    if emitPD:
        record["pd"] = pd.to_json()
    return record


def _text_lines(value, indent: int = 0) -> Iterator[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        # polynomials render as their text form only
        if set(value) == {"terms", "text"}:
            yield f"{pad}{value['text']}"
            return
        for key, item in value.items():
            if isinstance(item, dict) and set(item) == {"terms", "text"}:
                yield f"{pad}{key}: {item['text']}"
            elif isinstance(item, dict) and set(item) == {"numerator", "denominator"}:
                yield f"{pad}{key}: {_ratio_text(item)}"
            elif isinstance(item, (dict, list)) and item:
                yield f"{pad}{key}:"
                yield from _text_lines(item, indent + 1)
            else:
                yield f"{pad}{key}: {_scalar_text(item)}"
    elif isinstance(value, list):
        if all(not isinstance(x, (dict, list)) for x in value):
            yield f"{pad}{', '.join(_scalar_text(x) for x in value)}"
        else:
            for item in value:
                yield from _text_lines(item, indent)
    else:
        yield f"{pad}{_scalar_text(value)}"


def _ratio_text(item: dict) -> str:
    if item["denominator"] == 1:
        return str(item["numerator"])
    return f"{item['numerator']}/{item['denominator']}"


def _scalar_text(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, dict)) and not value:
        return "none"
    return str(value)


def render(record, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(record, indent=4)
    return "\n".join(_text_lines(record))
