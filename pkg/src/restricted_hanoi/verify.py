"""Cross-checking closed forms against exhaustive enumeration.

Used by the ``check`` subcommand and by the test suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .analysis import is_h_strongly_connected
from .builder import build_by_neighbors, build_naive, neighbors
from .combinatorics import check_recurrences, enumerated_report, t_k_closed, total_arcs_closed
from .degrees import outdegree_formula, outdegree_procedural
from .digraph import Family, MovementDigraph, is_strongly_connected, make_family, random_digraph
from .states import all_states


def digraph_corpus(m: int, random_count: int = 20, seed: int = 0) -> list[MovementDigraph]:
    """The four families on m pegs followed by ``random_count`` seeded random digraphs."""
    rng = random.Random(seed * 1_000 + m)
    corpus = [make_family(f, m) for f in Family]
    for i in range(random_count):
        d = random_digraph(m, rng)
        corpus.append(MovementDigraph(d.pegs, d.arcs, name=f"random-{seed}-{m}-{i}"))
    return corpus


@dataclass
class CaseResult:
    n: int
    m: int
    digraph: str
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_case(n: int, m: int, d: MovementDigraph) -> CaseResult:
    """Run every identity for one (n, m, D) and collect the ones that fail."""
    result = CaseResult(n, m, str(d.label()))
    fail = result.failures.append
    a = len(d.arcs)

    naive = build_naive(n, m, d)
    fast = build_by_neighbors(n, m, d)
    if naive.arcs != fast.arcs:
        fail("builders disagree")

    expected_total = total_arcs_closed(n, m, a)
    if len(naive.arcs) != expected_total:
        fail(f"arc total {len(naive.arcs)} != closed form {expected_total}")

    report = enumerated_report(naive)
    for k in range(1, n + 1):
        if report.per_disc[k - 1] != t_k_closed(k, n, m, a):
            fail(f"t_{k} enumerated {report.per_disc[k - 1]} != closed form")

    degree_sum = 0
    for u in all_states(n, m):
        f, p, s = outdegree_formula(u, d), outdegree_procedural(u, d), len(neighbors(u, d))
        if not f == p == s:
            fail(f"outdegree mismatch at {u}: formula {f}, procedural {p}, successors {s}")
        degree_sum += f
    if degree_sum != expected_total:
        fail(f"degree sum {degree_sum} != closed form {expected_total}")

    if n >= 1 and not check_recurrences(n, m, a):
        fail("recurrences fail")

    if n >= 1 and is_h_strongly_connected(fast) != is_strongly_connected(d):
        fail("state-graph connectivity does not match digraph connectivity")
    return result


def sweep(max_discs: int, max_pegs: int, random_count: int = 20, seed: int = 0) -> list[CaseResult]:
    results = []
    for m in range(3, max_pegs + 1):
        corpus = digraph_corpus(m, random_count, seed)
        for n in range(0, max_discs + 1):
            results.extend(check_case(n, m, d) for d in corpus)
    return results
