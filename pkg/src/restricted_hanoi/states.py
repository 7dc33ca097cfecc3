"""States of the puzzle and their dense integer codes.

A state assigns each disc to a peg.  ``State.disc_pegs[d - 1]`` is the peg of
disc ``d`` (disc 1 is the smallest).  Text forms list the pegs from the largest
disc down to the smallest, so ``"21"`` means disc 2 on peg 2 and disc 1 on
peg 1.

Codes are mixed-radix with disc 1 as the least significant digit::

    code = sum((peg(d) - 1) * m ** (d - 1) for d in 1..n)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import CapacityError, StateError

# Codes must fit a signed 64-bit integer.
STATE_CODE_LIMIT = 2**63


@dataclass(frozen=True)
class State:
    disc_pegs: tuple[int, ...]
    peg_count: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "disc_pegs", tuple(self.disc_pegs))
        for d, p in enumerate(self.disc_pegs, 1):
            if not (isinstance(p, int) and 1 <= p <= self.peg_count):
                raise StateError(f"disc {d} is on peg {p!r}, outside 1..{self.peg_count}")

    @property
    def n(self) -> int:
        return len(self.disc_pegs)

    def peg_of(self, disc: int) -> int:
        return self.disc_pegs[disc - 1]

    @classmethod
    def from_largest_first(cls, pegs: tuple[int, ...] | list[int], m: int) -> State:
        """Build from ``(u_n, ..., u_1)``, the largest disc first."""
        return cls(tuple(reversed(pegs)), m)

    def largest_first(self) -> tuple[int, ...]:
        return tuple(reversed(self.disc_pegs))

    @classmethod
    def perfect(cls, n: int, peg: int, m: int) -> State:
        """All n discs stacked on one peg."""
        return cls((peg,) * n, m)

    def __str__(self) -> str:
        return format_state(self)


def check_capacity(n: int, m: int) -> int:
    """Return m**n, or raise CapacityError if codes would not fit."""
    if n < 0:
        raise StateError(f"disc count must be non-negative, got {n}")
    size = m**n
    if size > STATE_CODE_LIMIT:
        raise CapacityError(f"{m}**{n} states exceed the state-code limit 2**63")
    return size


def encode(s: State) -> int:
    check_capacity(s.n, s.peg_count)
    code = 0
    for p in reversed(s.disc_pegs):
        code = code * s.peg_count + (p - 1)
    return code


def decode(code: int, n: int, m: int) -> State:
    size = check_capacity(n, m)
    if not 0 <= code < size:
        raise StateError(f"state code {code} outside [0, {size})")
    pegs = []
    for _ in range(n):
        code, digit = divmod(code, m)
        pegs.append(digit + 1)
    return State(tuple(pegs), m)


def all_states(n: int, m: int) -> Iterator[State]:
    """Yield all m**n states in ascending code order."""
    check_capacity(n, m)
    # product() varies its last slot fastest, i.e. it yields largest-first tuples
    # whose last entry (disc 1) is the least significant digit.
    for row in itertools.product(range(1, m + 1), repeat=n):
        yield State(row[::-1], m)


def peg_content(s: State, p: int) -> frozenset[int]:
    """Discs lying on peg ``p``."""
    return frozenset(d for d, q in enumerate(s.disc_pegs, 1) if q == p)


def format_state(s: State) -> str:
    """Largest-disc-first text: digits when m <= 9, comma separated otherwise."""
    sep = "" if s.peg_count <= 9 else ","
    return sep.join(str(p) for p in s.largest_first())


def parse_state(text: str, n: int, m: int) -> State:
    """Parse a state written largest disc first.

    Accepts ``"3,1,2"`` and, when ``m <= 9``, the digit form ``"312"``.
    """
    text = text.strip()
    if not text:
        parts: list[str] = []
    elif "," in text:
        parts = [t.strip() for t in text.split(",")]
    elif m <= 9:
        parts = list(text)
    else:
        parts = [text]
    if len(parts) != n:
        raise StateError(f"state {text!r} names {len(parts)} pegs, expected {n}")
    try:
        pegs = [int(t) for t in parts]
    except ValueError:
        raise StateError(f"state {text!r} contains a non-integer peg label") from None
    return State.from_largest_first(pegs, m)
