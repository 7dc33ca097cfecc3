"""Movement digraphs: which peg-to-peg moves a variant allows.

Pegs are labelled 1..m everywhere in the public API.  An arc ``(p, q)`` means a
disc may be moved from peg ``p`` to peg ``q``.
"""

from __future__ import annotations

import enum
import json
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import DigraphError

Arc = tuple[int, int]


class Family(str, enum.Enum):
    """The four classical restricted variants."""

    COMPLETE = "complete"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"


@dataclass(frozen=True)
class MovementDigraph:
    """Immutable digraph on pegs ``1..pegs``.

    ``arcs`` is normalised to a lexicographically sorted tuple without
    duplicates.  ``name`` is a display label only and does not take part in
    equality.
    """

    pegs: int
    arcs: tuple[Arc, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.pegs, int) or self.pegs < 3:
            raise DigraphError(f"a movement digraph needs at least 3 pegs, got {self.pegs!r}")
        seen = set()
        for arc in self.arcs:
            p, q = (int(x) for x in arc)
            if not (1 <= p <= self.pegs and 1 <= q <= self.pegs):
                raise DigraphError(f"arc ({p}, {q}) has an endpoint outside 1..{self.pegs}")
            if p == q:
                raise DigraphError(f"self-loop ({p}, {p}) is not a move")
            seen.add((p, q))
        object.__setattr__(self, "arcs", tuple(sorted(seen)))

    def __contains__(self, arc: object) -> bool:
        return arc in self.arc_set

    def __len__(self) -> int:
        return len(self.arcs)

    @cached_property
    def arc_set(self) -> frozenset[Arc]:
        return frozenset(self.arcs)

    @cached_property
    def adjacency(self) -> tuple[tuple[bool, ...], ...]:
        """Boolean table indexed ``[p - 1][q - 1]``."""
        table = [[False] * self.pegs for _ in range(self.pegs)]
        for p, q in self.arcs:
            table[p - 1][q - 1] = True
        return tuple(tuple(row) for row in table)

    def successors(self, p: int) -> list[int]:
        return [q for (a, q) in self.arcs if a == p]

    def to_json(self) -> dict:
        return {"pegs": self.pegs, "arcs": [list(a) for a in self.arcs]}

    def label(self) -> str | dict:
        """Short description for reports: the family name, or the JSON form."""
        return self.name if self.name is not None else self.to_json()


def make_family(family: Family | str, m: int) -> MovementDigraph:
    """Build the movement digraph of one of the four named variants on m pegs."""
    family = Family(family)
    if not isinstance(m, int) or m < 3:
        raise DigraphError(f"a movement digraph needs at least 3 pegs, got {m!r}")
    if family is Family.COMPLETE:
        arcs = [(p, q) for p in range(1, m + 1) for q in range(1, m + 1) if p != q]
    elif family is Family.PATH:
        arcs = [(p, p + 1) for p in range(1, m)] + [(p + 1, p) for p in range(1, m)]
    elif family is Family.CYCLE:
        arcs = [(p, p + 1) for p in range(1, m)] + [(m, 1)]
    else:
        arcs = [(1, p) for p in range(2, m + 1)] + [(p, 1) for p in range(2, m + 1)]
    return MovementDigraph(m, tuple(arcs), name=family.value)


def arc_count(d: MovementDigraph) -> int:
    return len(d.arcs)


def _reaches_all(m: int, adj: Mapping[int, Iterable[int]]) -> bool:
    seen = {1}
    queue = deque([1])
    while queue:
        p = queue.popleft()
        for q in adj.get(p, ()):
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return len(seen) == m


def is_strongly_connected(d: MovementDigraph) -> bool:
    """True iff every peg can reach every other peg along arcs of ``d``.

    Strong connectivity is equivalent to peg 1 reaching everything both in
    ``d`` and in its reverse.
    """
    forward: dict[int, list[int]] = {}
    backward: dict[int, list[int]] = {}
    for p, q in d.arcs:
        forward.setdefault(p, []).append(q)
        backward.setdefault(q, []).append(p)
    return _reaches_all(d.pegs, forward) and _reaches_all(d.pegs, backward)


def random_digraph(m: int, rng: random.Random, p: float = 0.5) -> MovementDigraph:
    """Include each ordered pair of distinct pegs independently with probability p."""
    arcs = [
        (a, b)
        for a in range(1, m + 1)
        for b in range(1, m + 1)
        if a != b and rng.random() < p
    ]
    return MovementDigraph(m, tuple(arcs))


def digraph_from_json(data: Mapping | str) -> MovementDigraph:
    """Read ``{"pegs": m, "arcs": [[p, q], ...]}`` (1-based labels).

    A bare family name is not accepted here because it carries no peg count;
    use :func:`parse_digraph_spec` for that.
    """
    if isinstance(data, str):
        data = json.loads(data)
    try:
        pegs = data["pegs"]
        raw: Sequence = data["arcs"]
    except (KeyError, TypeError) as exc:
        raise DigraphError(f"digraph JSON needs 'pegs' and 'arcs': {exc}") from None
    arcs = []
    for item in raw:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise DigraphError(f"arc must be a pair [p, q], got {item!r}")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in item):
            raise DigraphError(f"arc endpoints must be integers, got {item!r}")
        arcs.append((item[0], item[1]))
    return MovementDigraph(pegs, tuple(arcs))


def parse_digraph_spec(spec: str, m: int) -> MovementDigraph:
    """Resolve a CLI digraph spec: a family name or ``file:PATH`` to a JSON file."""
    if spec.startswith("file:"):
        path = Path(spec[len("file:"):])
        try:
            text = path.read_text()
        except OSError as exc:
            raise DigraphError(f"cannot read digraph file {path}: {exc}") from None
        try:
            d = digraph_from_json(text)
        except json.JSONDecodeError as exc:
            raise DigraphError(f"{path} is not valid JSON: {exc}") from None
        if d.pegs != m:
            raise DigraphError(f"{path} declares {d.pegs} pegs but {m} were requested")
        return MovementDigraph(d.pegs, d.arcs, name=spec)
    try:
        family = Family(spec)
    except ValueError:
        names = ", ".join(f.value for f in Family)
        raise DigraphError(f"unknown digraph {spec!r}; expected one of {names} or file:PATH") from None
    return make_family(family, m)
