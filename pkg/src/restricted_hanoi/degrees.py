"""Outdegree of states, computed two independent ways."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .builder import BUILD_STATE_LIMIT, check_buildable
from .digraph import MovementDigraph
from .states import State, all_states, peg_content


def outdegree_procedural(u: State, d: MovementDigraph) -> int:
    """Count arcs (p, q) of ``d`` whose source top disc may land on ``q``."""
    degree = 0
    for p, q in d.arcs:
        on_p = peg_content(u, p)
        if on_p:
            on_q = peg_content(u, q)
            if not on_q or min(on_p) < min(on_q):
                degree += 1
    return degree


def _x(a: frozenset[int]) -> int:
    return 1 if a else 0


def _y(a: frozenset[int], b: frozenset[int]) -> int:
    return 1 if _x(a) == _x(b) == 1 and min(a) <= min(b) else 0


def outdegree_formula(u: State, d: MovementDigraph) -> int:
    """Sum over arcs of ``x(P) * (y(P, Q) - x(Q) + 1)``.

    ``P``/``Q`` are the disc sets on the arc's source/target peg, ``x`` tests
    non-emptiness and ``y`` tests that both are non-empty with
    ``min P <= min Q``.
    """
    total = 0
    for p, q in d.arcs:
        P, Q = peg_content(u, p), peg_content(u, q)
        total += _x(P) * (_y(P, Q) - _x(Q) + 1)
    return total


@dataclass(frozen=True)
class DegreeProfile:
    n: int
    m: int
    per_state: tuple[int, ...]
    histogram: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.per_state)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "histogram": {str(k): self.histogram[k] for k in sorted(self.histogram)},
            "sum": self.total,
        }


def degree_profile(
    n: int, m: int, d: MovementDigraph, *, limit: int = BUILD_STATE_LIMIT
) -> DegreeProfile:
    """Outdegree of every state (by the indicator formula), indexed by code."""
    check_buildable(n, m, d, limit)
    per_state = tuple(outdegree_formula(u, d) for u in all_states(n, m))
    return DegreeProfile(n, m, per_state, dict(sorted(Counter(per_state).items())))
