"""Wall-clock comparison of the two builders.

Informal only: the pairwise builder should grow roughly with (m**n)**2 and
the neighbour builder roughly with m**n.
"""

import sys
import time

from restricted_hanoi import build_by_neighbors, build_naive, make_family


def clock(fn, *args):
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0


def main(m: int = 4, max_discs: int = 6) -> None:
    d = make_family("complete", m)
    prev = None
    print(f"{'n':>2} {'states':>7} {'naive s':>9} {'fast s':>9} {'naive ratio':>12}")
    for n in range(1, max_discs + 1):
        naive, fast = clock(build_naive, n, m, d), clock(build_by_neighbors, n, m, d)
        ratio = f"{naive / prev:.1f}" if prev else "-"
        print(f"{n:>2} {m**n:>7} {naive:>9.4f} {fast:>9.4f} {ratio:>12}")
        prev = naive


if __name__ == "__main__":
    main(*(int(a) for a in sys.argv[1:]))
