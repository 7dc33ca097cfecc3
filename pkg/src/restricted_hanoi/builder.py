"""Materialising the restricted Hanoi graph H_n^m(D).

Two generators produce the same graph:

* :func:`build_naive` tests every ordered pair of states with :func:`is_arc`.
  It is quadratic in the number of states and serves as the reference.
* :func:`build_by_neighbors` asks each state for its legal moves directly.

Vertices are implicit: every code in ``range(m ** n)`` is a state.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .arcs import MoveWitness, is_arc
from .digraph import MovementDigraph
from .errors import CapacityError, StateError
from .states import State, all_states, check_capacity, decode

# (from_code, to_code, moved_disc)
GraphArc = tuple[int, int, int]

# Largest vertex count either builder will materialise by default.
BUILD_STATE_LIMIT = 2_000_000


@dataclass(frozen=True)
class HanoiGraph:
    disc_count: int
    peg_count: int
    digraph: MovementDigraph
    arcs: tuple[GraphArc, ...]

    @property
    def vertex_count(self) -> int:
        return self.peg_count**self.disc_count

    def __len__(self) -> int:
        return len(self.arcs)

    def state(self, code: int) -> State:
        return decode(code, self.disc_count, self.peg_count)

    @cached_property
    def adjacency(self) -> list[list[int]]:
        """Successor codes per vertex, ascending."""
        out: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for a, b, _ in self.arcs:
            out[a].append(b)
        return out

    @cached_property
    def move_of(self) -> dict[tuple[int, int], int]:
        return {(a, b): k for a, b, k in self.arcs}

    def arc_set(self) -> frozenset[GraphArc]:
        return frozenset(self.arcs)


def check_buildable(n: int, m: int, d: MovementDigraph, limit: int) -> int:
    if m != d.pegs:
        raise StateError(f"requested {m} pegs but the digraph has {d.pegs}")
    size = check_capacity(n, m)
    if size > limit:
        raise CapacityError(f"{m}**{n} = {size} states exceed the build limit {limit}")
    return size


def build_naive(
    n: int, m: int, d: MovementDigraph, *, limit: int = BUILD_STATE_LIMIT
) -> HanoiGraph:
    """Pairwise generator: keep ``(u, v)`` whenever :func:`is_arc` accepts it.

    The single-differing-disc test is evaluated for a whole row of candidates
    ``v`` at once; the survivors go through the full predicate.
    """
    check_buildable(n, m, d, limit)
    states = list(all_states(n, m))
    table = np.array([s.disc_pegs for s in states], dtype=np.int16).reshape(len(states), n)
    arcs: list[GraphArc] = []
    for i, u in enumerate(states):
        differing = (table != table[i]).sum(axis=1)
        for j in np.flatnonzero(differing == 1):
            w = is_arc(u, states[j], d)
            if w is not None:
                arcs.append((i, int(j), w.disc))
    return HanoiGraph(n, m, d, tuple(arcs))


def _top_discs(disc_pegs: Sequence[int], m: int) -> list[int]:
    """Smallest disc on each peg (index ``p - 1``), 0 for an empty peg."""
    top = [0] * m
    for disc in range(len(disc_pegs), 0, -1):
        top[disc_pegs[disc - 1] - 1] = disc
    return top


def _moves(disc_pegs: Sequence[int], d: MovementDigraph) -> Iterator[MoveWitness]:
    top = _top_discs(disc_pegs, d.pegs)
    for p, q in d.arcs:
        k = top[p - 1]
        if k and (not top[q - 1] or k < top[q - 1]):
            yield MoveWitness(k, p, q)


def neighbors(u: State, d: MovementDigraph) -> list[tuple[State, MoveWitness]]:
    """Legal successors of ``u``, one per admissible arc of ``d`` (arc order)."""
    if u.peg_count != d.pegs:
        raise StateError(f"state uses {u.peg_count} pegs but the digraph has {d.pegs}")
    out = []
    for w in _moves(u.disc_pegs, d):
        pegs = list(u.disc_pegs)
        pegs[w.disc - 1] = w.target
        out.append((State(tuple(pegs), u.peg_count), w))
    return out


def build_by_neighbors(
    n: int, m: int, d: MovementDigraph, *, limit: int = BUILD_STATE_LIMIT
) -> HanoiGraph:
    """Per-state generator: emit each state's legal moves directly."""
    check_buildable(n, m, d, limit)
    weight = [m**i for i in range(n)]
    arcs: list[GraphArc] = []
    for code, s in enumerate(all_states(n, m)):
        for w in _moves(s.disc_pegs, d):
            arcs.append((code, code + (w.target - w.source) * weight[w.disc - 1], w.disc))
    arcs.sort()
    return HanoiGraph(n, m, d, tuple(arcs))


BUILDERS = {"naive": build_naive, "fast": build_by_neighbors}
