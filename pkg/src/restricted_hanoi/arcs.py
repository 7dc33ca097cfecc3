"""Arc membership in the state graph, plus the per-variant peg tests."""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import MovementDigraph
from .errors import StateError
from .states import State


@dataclass(frozen=True)
class MoveWitness:
    """Disc ``disc`` moves from peg ``source`` to peg ``target``."""

    disc: int
    source: int
    target: int

    def to_json(self) -> dict:
        return {"disc": self.disc, "from": self.source, "to": self.target}


def is_arc(u: State, v: State, d: MovementDigraph) -> MoveWitness | None:
    """Return the move taking ``u`` to ``v`` if it is a legal move under ``d``.

    The checks run cheapest first: exactly one disc differs, the pegs are
    joined by an arc of ``d``, then every smaller disc avoids both pegs (the
    moved disc is on top of its source and fits on its target).
    """
    if u.n != v.n or u.peg_count != v.peg_count:
        raise StateError(f"states differ in shape: n={u.n},{v.n} m={u.peg_count},{v.peg_count}")
    if u.peg_count != d.pegs:
        raise StateError(f"states use {u.peg_count} pegs but the digraph has {d.pegs}")

    a, b = u.disc_pegs, v.disc_pegs
    k = -1
    for i in range(len(a)):
        if a[i] != b[i]:
            if k >= 0:
                return None
            k = i
    if k < 0:
        return None
    src, dst = a[k], b[k]
    if not d.adjacency[src - 1][dst - 1]:
        return None
    for i in range(k - 1, -1, -1):
        if a[i] == src or b[i] == dst:
            return None
    return MoveWitness(k + 1, src, dst)


def shortcut_linear(source: int, target: int) -> bool:
    return abs(source - target) == 1


def shortcut_cyclic(source: int, target: int, m: int) -> bool:
    """Move along the directed cycle 1 -> 2 -> ... -> m -> 1."""
    return (target - source) % m == 1


def shortcut_cyclic_literal(source: int, target: int, m: int) -> bool:
    """The difference test ``target - source in {1, m - 1}`` taken at face value.

    Kept only to document that it also admits ``(1, m)``, which is not a move
    of the directed cycle once m >= 4.  Use :func:`shortcut_cyclic`.
    """
    return target - source in (1, m - 1)


def shortcut_star(source: int, target: int) -> bool:
    """Exactly one endpoint is the centre peg 1."""
    return abs(source - target) == max(source, target) - 1
