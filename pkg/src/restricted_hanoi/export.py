"""Writing graphs as DOT, CSV edge lists, or JSON lines."""

from __future__ import annotations

import csv
import enum
import io
import json
from typing import BinaryIO

from .builder import GraphArc, HanoiGraph
from .states import format_state, parse_state, encode


class ExportFormat(str, enum.Enum):
    DOT = "dot"
    CSV = "csv"
    JSONL = "jsonl"


def _labels(g: HanoiGraph) -> list[str]:
    return [format_state(g.state(c)) for c in range(g.vertex_count)]


def to_dot(g: HanoiGraph) -> str:
    labels = _labels(g)
    lines = [f'digraph "H_{g.disc_count}^{g.peg_count}" {{']
    lines += [f'  {c} [label="{label}"];' for c, label in enumerate(labels)]
    lines += [f'  {a} -> {b} [label="{k}"];' for a, b, k in g.arcs]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(g: HanoiGraph) -> str:
    labels = _labels(g)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["from", "to", "disc"])
    for a, b, k in g.arcs:
        writer.writerow([labels[a], labels[b], k])
    return buf.getvalue()


def to_jsonl(g: HanoiGraph) -> str:
    labels = _labels(g)
    return "".join(
        json.dumps({"from": labels[a], "to": labels[b], "disc": k}) + "\n" for a, b, k in g.arcs
    )


_WRITERS = {ExportFormat.DOT: to_dot, ExportFormat.CSV: to_csv, ExportFormat.JSONL: to_jsonl}


def render(g: HanoiGraph, fmt: ExportFormat | str) -> str:
    return _WRITERS[ExportFormat(fmt)](g)


def export(g: HanoiGraph, fmt: ExportFormat | str, sink: BinaryIO) -> None:
    sink.write(render(g, fmt).encode("utf-8"))


def read_csv(text: str, n: int, m: int) -> set[GraphArc]:
    """Parse a CSV export back into ``(from_code, to_code, disc)`` triples."""
    rows = csv.DictReader(io.StringIO(text))
    return {
        (encode(parse_state(r["from"], n, m)), encode(parse_state(r["to"], n, m)), int(r["disc"]))
        for r in rows
    }
