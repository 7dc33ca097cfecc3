"""Reference implementations that share no code with the package.

The move simulator keeps an explicit stack of discs per peg and applies the
three puzzle rules directly: one disc per move, only a top disc moves, and
a disc never lands on a smaller one.
"""

from __future__ import annotations

import itertools
from collections import deque


def stacks_of(disc_pegs, m):
    """Peg -> list of discs bottom to top (largest first)."""
    stacks = {p: [] for p in range(1, m + 1)}
    for disc in range(len(disc_pegs), 0, -1):
        stacks[disc_pegs[disc - 1]].append(disc)
    return stacks


def legal_moves(disc_pegs, m, allowed):
    """All (successor disc_pegs tuple, disc, from, to) reachable in one move."""
    out = []
    stacks = stacks_of(disc_pegs, m)
    for p in range(1, m + 1):
        for q in range(1, m + 1):
            if p == q or (p, q) not in allowed or not stacks[p]:
                continue
            disc = stacks[p][-1]
            if stacks[q] and stacks[q][-1] < disc:
                continue
            new = {r: list(s) for r, s in stacks.items()}
            new[p].pop()
            new[q].append(disc)
            pegs = [0] * len(disc_pegs)
            for r, s in new.items():
                for x in s:
                    pegs[x - 1] = r
            out.append((tuple(pegs), disc, p, q))
    return out


def all_tuples(n, m):
    return [t[::-1] for t in itertools.product(range(1, m + 1), repeat=n)]


def brute_arcs(n, m, allowed):
    """Set of (u_tuple, v_tuple, disc) over the whole state space."""
    arcs = set()
    for u in all_tuples(n, m):
        for v, disc, _, _ in legal_moves(u, m, allowed):
            arcs.add((u, v, disc))
    return arcs


def brute_strongly_connected(m, allowed):
    """Transitive closure by repeated squaring of the reachability relation."""
    reach = {(p, q) for p in range(1, m + 1) for q in range(1, m + 1) if p == q or (p, q) in allowed}
    while True:
        bigger = reach | {(a, c) for (a, b) in reach for (b2, c) in reach if b == b2}
        if bigger == reach:
            break
        reach = bigger
    return len(reach) == m * m


def brute_distance(n, m, allowed, start, end):
    """BFS over disc-stack states; None if unreachable."""
    dist = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        if u == end:
            return dist[u]
        for v, *_ in legal_moves(u, m, allowed):
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return None
