import io
import json

import pytest

from restricted_hanoi import (
    ExportFormat,
    build_by_neighbors,
    build_naive,
    export,
    make_family,
    random_digraph,
    read_csv,
    render,
)


def test_empty_csv():
    g = build_by_neighbors(0, 3, make_family("star", 3))
    assert render(g, "csv") == "from,to,disc\n"


def test_single_disc_cycle_csv():
    g = build_by_neighbors(1, 3, make_family("cycle", 3))
    assert render(g, ExportFormat.CSV) == "from,to,disc\n1,2,1\n2,3,1\n3,1,1\n"


def test_dot_counts():
    g = build_by_neighbors(2, 4, make_family("complete", 4))
    text = render(g, "dot")
    lines = text.splitlines()
    assert lines[0].startswith("digraph") and lines[-1] == "}"
    assert sum(1 for l in lines if "[label=" in l and "->" not in l) == 16
    assert sum(1 for l in lines if "->" in l) == 72
    assert '  0 [label="11"];' in lines
    assert '  0 -> 1 [label="1"];' in lines


def test_jsonl():
    g = build_by_neighbors(2, 3, make_family("complete", 3))
    rows = [json.loads(line) for line in render(g, "jsonl").splitlines()]
    assert len(rows) == 24
    assert rows[0] == {"from": "11", "to": "12", "disc": 1}


def test_export_writes_bytes():
    g = build_by_neighbors(1, 3, make_family("cycle", 3))
    sink = io.BytesIO()
    export(g, "csv", sink)
    assert sink.getvalue() == b"from,to,disc\n1,2,1\n2,3,1\n3,1,1\n"


@pytest.mark.parametrize("n,m", [(2, 3), (3, 4), (2, 11)])
def test_csv_round_trip(n, m):
    g = build_by_neighbors(n, m, make_family("path", m))
    assert read_csv(render(g, "csv"), n, m) == set(g.arcs)


@pytest.mark.parametrize("fmt", list(ExportFormat))
def test_builders_export_identically(fmt):
    import random

    rng = random.Random(3)
    for d in [make_family("star", 4), random_digraph(4, rng), random_digraph(4, rng)]:
        assert render(build_naive(3, 4, d), fmt) == render(build_by_neighbors(3, 4, d), fmt)
