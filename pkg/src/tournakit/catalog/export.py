"""The catalogue as plain JSON records (the committed ``data/catalog.json``)."""

from __future__ import annotations

import json
from importlib import resources
from typing import Any

from .biexceptions import FAMILY_BIEXCEPTIONS
from .families import FAMILIES
from .figures import FIGURES, exception_tournament, figure_variants
from .records import CORRECTIONS, biexception_records, cycle_exceptions, finite_path_exceptions


def _labels(mask: int) -> list[int]:
    return [v + 1 for v in range(mask.bit_length()) if mask >> v & 1]


def catalog_records() -> list[dict[str, Any]]:
    out: list[dict[str, Any]] = []
    for name in FIGURES:
        out.append({
            "kind": "figure",
            "id": name,
            "tournaments": [t.to_text() for t in figure_variants(name)],
        })
    for rec in finite_path_exceptions():
        out.append({
            "kind": "exception",
            "id": f"Exc {rec.id}",
            "figure": rec.tournament_name,
            "tournament": exception_tournament(rec.tournament_name).to_text(),
            "path": str(rec.path),
            "S": list(rec.s_labels),
            "witnesses": list(rec.witnesses),
        })
    for fam in FAMILIES.values():
        out.append({
            "kind": "family",
            "id": fam.id,
            "figure": fam.figure,
            "path": "+" + fam.type_template,
            "S": fam.s_labels,
            "conditions": fam.conditions,
        })
    for b in biexception_records():
        t, x = b.build()
        out.append({
            "kind": "biexception",
            "id": f"Exc {b.key}",
            "base": f"Exc {b.base}",
            "i": b.i,
            "tournament": t.to_text(),
            "x": x + 1,
            "path": str(b.path),
            "neighbourhood": {"side": b.side, "labels": list(b.neighbourhood)},
            "S": list(b.s_labels),
        })
    for fb in FAMILY_BIEXCEPTIONS:
        out.append({
            "kind": "family-biexception",
            "id": f"Exc {fb.key}",
            "family": fb.family,
            "i": fb.i,
            "base_order": fb.base_order,
            "rule": fb.rule,
        })
    for rec in cycle_exceptions():
        out.append({
            "kind": "cycle",
            "id": rec.name,
            "figure": rec.tournament_name,
            "tournaments": [t.to_text() for t in rec.tournaments()],
            "cycle": str(rec.cycle),
        })
    for entry, field, printed, stored in CORRECTIONS:
        out.append({"kind": "correction", "id": entry, "field": field, "printed": printed, "stored": stored})
    return out


def catalog_json() -> str:
    return json.dumps(catalog_records(), indent=1, ensure_ascii=True) + "\n"


def shipped_catalog_json() -> str:
    return resources.files("tournakit").joinpath("data/catalog.json").read_text()
