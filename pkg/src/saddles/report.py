"""Result documents: the JSON schema and the human-readable rendering.

JSON uses 0-based indices and canonical rational strings ("p" or "p/q"); the
key order is fixed so identical inputs always serialize byte-identically.
Text output uses the games' 1-based display labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import GameInputError

SCHEMA_VERSION = "1"


@dataclass
class ResultDocument:
    game_digest: str = ""
    mode: str = ""
    row_labels: tuple[str, ...] = ()
    col_labels: tuple[str, ...] = ()
    saddles: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = ()
    value: str | None = None
    strategies: dict | None = None
    verdicts: dict | None = None

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "game_digest": self.game_digest,
            "mode": self.mode,
            "row_labels": list(self.row_labels),
            "col_labels": list(self.col_labels),
            "saddles": [[list(rows), list(cols)] for rows, cols in self.saddles],
            "value": self.value,
            "strategies": self.strategies,
            "verdicts": self.verdicts if self.verdicts is not None else {},
        }


def product_label(
    rows: tuple[int, ...],
    cols: tuple[int, ...],
    row_labels: tuple[str, ...],
    col_labels: tuple[str, ...],
) -> str:
    row_names = ",".join(
        row_labels[r] if r < len(row_labels) else f"r{r + 1}" for r in rows
    )
    col_names = ",".join(
        col_labels[c] if c < len(col_labels) else f"c{c + 1}" for c in cols
    )
    return "{" + row_names + "} x {" + col_names + "}"


def _text_lines(doc: ResultDocument) -> list[str]:
    lines = [f"game: {doc.game_digest[:12]}"]
    if doc.mode:
        lines.append(f"mode: {doc.mode}")
    if doc.saddles:
        lines.append(f"saddles ({len(doc.saddles)}):")
        for rows, cols in doc.saddles:
            lines.append(
                "  " + product_label(rows, cols, doc.row_labels, doc.col_labels)
            )
    if doc.value is not None:
        lines.append(f"value: {doc.value}")
    if doc.strategies is not None:
        lines.append("row strategy: " + " ".join(doc.strategies["row"]))
        lines.append("col strategy: " + " ".join(doc.strategies["col"]))
    if doc.verdicts:
        lines.append("checks:")
        for name, result in doc.verdicts.items():
            if isinstance(result, bool):
                lines.append(f"  {name}: {'ok' if result else 'VIOLATED'}")
        for violation in doc.verdicts.get("violations", []):
            lines.append(f"  violation: {violation}")
    return lines


def emit_result(doc: ResultDocument, format: str = "json") -> str:
    """Serialize a document; json output is byte-stable across runs."""
    if format == "json":
        return json.dumps(doc.to_json_dict())
    if format == "text":
        return "\n".join(_text_lines(doc))
    raise GameInputError(f"unknown output format {format!r}")
