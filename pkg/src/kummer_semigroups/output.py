"""Rendering command results as table, json or csv text."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from . import __version__

SCHEMA_VERSION = 1
FORMATS = ("table", "json", "csv")


@dataclass
class OutputDocument:
    command: str
    payload: dict
    params: dict | None = None
    tuple: str | None = None
    # csv/table layout: header plus rows of scalars
    header: list[str] = field(default_factory=list)
    rows: list[list] = field(default_factory=list)
    table_lines: list[str] | None = None

    def to_json_obj(self) -> dict:
        doc = {"schema_version": SCHEMA_VERSION, "tool": "kummer-sg",
               "version": __version__, "command": self.command,
               "params": self.params, "tuple": self.tuple}
        doc.update(self.payload)
        return doc


def _cell(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def render(doc: OutputDocument, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc.to_json_obj(), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(doc.header)
        w.writerows([[_cell(c) for c in row] for row in doc.rows])
        return buf.getvalue()
    if fmt == "table":
        lines = doc.table_lines
        if lines is None:
            lines = [" ".join(_cell(c) for c in row) for row in doc.rows]
        return "".join(line + "\n" for line in lines)
    raise ValueError(f"unknown format {fmt!r}")


def vector_text(v) -> str:
    return "(" + ", ".join(str(c) for c in v) + ")"


def coordinate_header(places) -> list[str]:
    return [str(p) for p in places]
