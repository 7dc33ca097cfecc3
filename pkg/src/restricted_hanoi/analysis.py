"""Reachability questions on a built graph: shortest transfers and solvability."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .arcs import MoveWitness
from .builder import HanoiGraph
from .errors import StateError


@dataclass(frozen=True)
class MoveSequence:
    start: int
    end: int
    moves: tuple[MoveWitness, ...]

    def __len__(self) -> int:
        return len(self.moves)

    def to_json(self) -> dict:
        return {"length": len(self.moves), "moves": [w.to_json() for w in self.moves]}


def _check_code(g: HanoiGraph, code: int) -> None:
    if not 0 <= code < g.vertex_count:
        raise StateError(f"state code {code} outside [0, {g.vertex_count})")


def bfs_parents(g: HanoiGraph, source: int) -> list[int]:
    """BFS tree from ``source``; -1 marks unreached vertices.

    Successors are visited in ascending code order, which fixes the tie-break
    between equally short paths.
    """
    parent = [-1] * g.vertex_count
    parent[source] = source
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        a = queue.popleft()
        for b in adjacency[a]:
            if parent[b] < 0:
                parent[b] = a
                queue.append(b)
    return parent


def shortest_path(g: HanoiGraph, start: int, end: int) -> MoveSequence | None:
    """Fewest moves from ``start`` to ``end``, or None if unreachable."""
    _check_code(g, start)
    _check_code(g, end)
    parent = bfs_parents(g, start)
    if parent[end] < 0:
        return None
    codes = [end]
    while codes[-1] != start:
        codes.append(parent[codes[-1]])
    codes.reverse()

    m, weight = g.peg_count, [g.peg_count**i for i in range(g.disc_count)]
    moves = []
    for a, b in zip(codes, codes[1:]):
        k = g.move_of[(a, b)]
        source = a // weight[k - 1] % m + 1
        target = b // weight[k - 1] % m + 1
        moves.append(MoveWitness(k, source, target))
    return MoveSequence(start, end, tuple(moves))


def is_h_strongly_connected(g: HanoiGraph) -> bool:
    """True iff every state can reach every other state."""
    if all(p >= 0 for p in bfs_parents(g, 0)):
        reverse = HanoiGraph(
            g.disc_count, g.peg_count, g.digraph, tuple(sorted((b, a, k) for a, b, k in g.arcs))
        )
        return all(p >= 0 for p in bfs_parents(reverse, 0))
    return False
