"""Closed-form arc counts of H_n^m(D) and their enumerated counterparts.

``t_k`` is the number of arcs that move disc ``k``.  Only ``|A(D)|`` matters,
not the shape of ``D``: disc ``k`` moves along some arc ``(p, q)`` of ``D``,
the ``k - 1`` smaller discs must avoid both ``p`` and ``q``, and the
``n - k`` larger discs are unconstrained::

    t_k = |A(D)| * m**(n - k) * (m - 2)**(k - 1)

Summing the geometric series gives ``|A(D)| * (m**n - (m - 2)**n) / 2``.
All arithmetic uses Python integers and is exact at any size.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .builder import HanoiGraph
from .digraph import Family, MovementDigraph
from .errors import HanoiError


class CountSource(str, enum.Enum):
    CLOSED_FORM = "closed_form"
    ENUMERATED = "enumerated"


@dataclass(frozen=True)
class ArcCountReport:
    n: int
    m: int
    per_disc: tuple[int, ...]
    total: int
    source: CountSource
    digraph: str | dict | None = None

    def __post_init__(self) -> None:
        if self.total != sum(self.per_disc):
            raise ValueError("total must equal the sum of the per-disc counts")
        if any(t < 0 for t in self.per_disc):
            raise ValueError("per-disc counts are non-negative")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "digraph": self.digraph,
            "per_disc": list(self.per_disc),
            "total": self.total,
            "source": CountSource(self.source).value,
        }


def _check_k(k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise HanoiError(f"disc index k={k} outside 1..{n}")


def _check_m(m: int) -> None:
    if m < 3:
        raise HanoiError(f"peg count must be at least 3, got {m}")


def t_k_closed(k: int, n: int, m: int, arc_count_d: int) -> int:
    """Number of arcs of H_n^m(D) moving disc k, given |A(D)|."""
    _check_k(k, n)
    _check_m(m)
    return arc_count_d * m ** (n - k) * (m - 2) ** (k - 1)


def t_k_family(k: int, n: int, m: int, family: Family | str) -> int:
    """Per-disc count written out for each named variant."""
    _check_k(k, n)
    _check_m(m)
    family = Family(family)
    if family is Family.COMPLETE:
        return (m - 1) * m ** (n - k + 1) * (m - 2) ** (k - 1)
    if family is Family.CYCLE:
        return m ** (n - k + 1) * (m - 2) ** (k - 1)
    # path and star share the same count
    return 2 * (m - 1) * m ** (n - k) * (m - 2) ** (k - 1)


def total_arcs_closed(n: int, m: int, arc_count_d: int) -> int:
    _check_m(m)
    if n < 0:
        raise HanoiError(f"disc count must be non-negative, got {n}")
    # m**n and (m-2)**n share parity, so the halving is exact
    return arc_count_d * (m**n - (m - 2) ** n) // 2


def total_arcs_family(n: int, m: int, family: Family | str) -> int:
    _check_m(m)
    family = Family(family)
    gap = m**n - (m - 2) ** n
    if family is Family.COMPLETE:
        return m * (m - 1) * gap // 2
    if family is Family.CYCLE:
        return m * gap // 2
    return (m - 1) * gap


def check_recurrences(n: int, m: int, arc_count_d: int) -> bool:
    """Both recurrences of t_k, in integer form.

    ``m * t_{k+1}(n) == (m - 2) * t_k(n)`` for ``1 <= k < n`` and
    ``t_k(n + 1) == m * t_k(n)`` for ``1 <= k <= n``.
    """
    t = [t_k_closed(k, n, m, arc_count_d) for k in range(1, n + 1)]
    for k in range(n - 1):
        if m * t[k + 1] != (m - 2) * t[k]:
            return False
    for k in range(1, n + 1):
        if t_k_closed(k, n + 1, m, arc_count_d) != m * t[k - 1]:
            return False
    return True


def closed_form_report(n: int, m: int, d: MovementDigraph) -> ArcCountReport:
    if n < 0:
        raise HanoiError(f"disc count must be non-negative, got {n}")
    a = len(d.arcs)
    per_disc = tuple(t_k_closed(k, n, m, a) for k in range(1, n + 1))
    return ArcCountReport(n, m, per_disc, sum(per_disc), CountSource.CLOSED_FORM, d.label())


def enumerated_report(g: HanoiGraph) -> ArcCountReport:
    """Group the arcs of a built graph by moved disc."""
    counts = [0] * g.disc_count
    for _, _, k in g.arcs:
        counts[k - 1] += 1
    return ArcCountReport(
        g.disc_count, g.peg_count, tuple(counts), len(g.arcs), CountSource.ENUMERATED, g.digraph.label()
    )
