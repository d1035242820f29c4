"""Canonical JSON and CSV forms shared by the verifier and the CLI.

Serialization is deterministic: fixed key order, integers and strings
only, two-space indentation, trailing newline.  Parsing an emitted
document and re-serializing it reproduces the bytes exactly.
"""

from __future__ import annotations

import json
from typing import Any

from .domains import (
    AIIIFiberedS,
    AIIIFiberedT,
    AIIIHermitian,
    CIFibered,
    CIHermitian,
    DomainSpec,
    Prediction,
)
from .rootcore import Root
from .verify import GridEntry, GridReport

__all__ = [
    "CSV_COLUMNS",
    "to_canonical_json",
    "root_to_list",
    "keep_to_str",
    "agreement_to_str",
    "spec_to_dict",
    "entry_to_dict",
    "report_to_dict",
    "spec_csv_fields",
]

CSV_COLUMNS = [
    "family",
    "n",
    "p",
    "q",
    "a",
    "m",
    "keep",
    "connected",
    "defect",
    "prediction",
    "agreement",
]


def to_canonical_json(obj: Any) -> str:
    return json.dumps(obj, indent=2) + "\n"


def root_to_list(root: Root) -> list[int]:
    return list(root)


def keep_to_str(keep: frozenset[int]) -> str:
    # '+'-joined to stay CSV-safe
    return "+".join(str(i) for i in sorted(keep))


def agreement_to_str(agreement: bool | None) -> str:
    if agreement is None:
        return "not_applicable"
    return "true" if agreement else "false"


def spec_to_dict(spec: DomainSpec) -> dict[str, Any]:
    out: dict[str, Any] = {"family": spec.family}
    if isinstance(spec, (CIHermitian, CIFibered)):
        out["n"] = spec.n
        out["a"] = spec.a
        if isinstance(spec, CIFibered):
            out["m"] = spec.m
    else:
        out["p"] = spec.p
        out["q"] = spec.q
        out["a"] = spec.a
        if isinstance(spec, (AIIIFiberedS, AIIIFiberedT)):
            out["keep"] = sorted(spec.keep)
    return out


def spec_csv_fields(spec: DomainSpec) -> dict[str, str]:
    """The family/size columns of a CSV row, blank where not applicable."""
    fields = dict.fromkeys(("family", "n", "p", "q", "a", "m", "keep"), "")
    fields["family"] = spec.family
    fields["a"] = str(spec.a)
    if isinstance(spec, (CIHermitian, CIFibered)):
        fields["n"] = str(spec.n)
        if isinstance(spec, CIFibered):
            fields["m"] = str(spec.m)
    else:
        fields["p"] = str(spec.p)
        fields["q"] = str(spec.q)
        if isinstance(spec, (AIIIFiberedS, AIIIFiberedT)):
            fields["keep"] = keep_to_str(spec.keep)
    return fields


def entry_to_dict(entry: GridEntry) -> dict[str, Any]:
    if entry.oracle_wk is None and entry.oracle_dc is None:
        oracle_results = None
    else:
        oracle_results = [entry.oracle_wk, entry.oracle_dc]
    return {
        "spec": spec_to_dict(entry.spec),
        "predicted": entry.predicted.value,
        "computed": entry.computed,
        "oracle_results": oracle_results,
        "defect": entry.defect,
    }


def report_to_dict(report: GridReport) -> dict[str, Any]:
    # elapsed time is deliberately left out so identical grids serialize
    # to identical bytes
    return {
        "entries": [entry_to_dict(e) for e in report.entries],
        "summary": {
            "entries": len(report.entries),
            "agreements": report.agreements,
            "disagreements": report.disagreements,
        },
    }


def prediction_to_str(prediction: Prediction) -> str:
    return prediction.value
