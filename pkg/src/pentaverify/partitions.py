"""Exact base sequences: p(n), overpartitions p-bar(n), and pod(n).

All three tables are built by sparse recurrences costing O(n^{3/2}) big-integer
additions, so exact values up to n = 10^4 take seconds:

  * p(n)     -- Euler's pentagonal number theorem,
                p(n) = sum_{j>=1} (-1)^{j-1} [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)];
  * p-bar(n) -- Gauss' square theta series, (q;q)_inf / (-q;q)_inf = sum_j (-1)^j q^{j^2},
                giving p-bar(n) = 2 sum_{j>=1} (-1)^{j-1} p-bar(n - j^2);
  * pod(n)   -- the analogous theta for odd-parts-distinct partitions,
                pod(n) = sum_{t>=1} (-1)^{t-1} [pod(n - t(2t-1)) + pod(n - t(2t+1))].

Brute-force enumerators for all three families serve as independent oracles at
small n; the qseries module provides a second independent cross-check via
explicit product/inverse series arithmetic.
"""

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import CapExceeded, TableTooSmall


class Family(enum.Enum):
    P = "p"
    OVERP = "overp"
    POD = "pod"


class Mode(enum.Enum):
    PLAIN = "plain"
    OVER = "over"
    POD = "pod"


# Enumeration caps keep the full oracle suites at seconds of runtime.
PLAIN_CAP = 45
OVER_CAP = 30
POD_CAP = 40

_MODE_CAPS = {Mode.PLAIN: PLAIN_CAP, Mode.OVER: OVER_CAP, Mode.POD: POD_CAP}


@dataclass(frozen=True)
class SeqTable:
    """Immutable table of exact sequence values for indices 0..max_n."""

    family: Family
    values: tuple[int, ...]

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def value(self, n: int) -> int:
        """Sequence value, with the convention value(n) = 0 for n < 0."""
        if n < 0:
            return 0
        if n > self.max_n:
            raise TableTooSmall(
                f"{self.family.value} table covers 0..{self.max_n}, asked for {n}"
            )
        return self.values[n]

    def rows(self) -> Iterator[tuple[int, int]]:
        """(n, value) pairs for CSV export."""
        return iter(enumerate(self.values))


def build_p_table(max_n: int) -> SeqTable:
    """Exact p(0..max_n) via the pentagonal-number recurrence."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    vals = [0] * (max_n + 1)
    vals[0] = 1
    for n in range(1, max_n + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            term = vals[n - g1]
            g2 = g1 + j  # j(3j+1)/2
            if g2 <= n:
                term += vals[n - g2]
            total += term if j % 2 else -term
            j += 1
        vals[n] = total
    return SeqTable(Family.P, tuple(vals))


def build_overp_table(max_n: int) -> SeqTable:
    """Exact overpartition counts p-bar(0..max_n) via the square-theta recurrence."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    vals = [0] * (max_n + 1)
    vals[0] = 1
    for n in range(1, max_n + 1):
        total = 0
        j = 1
        while j * j <= n:
            term = vals[n - j * j]
            total += term if j % 2 else -term
            j += 1
        vals[n] = 2 * total
    return SeqTable(Family.OVERP, tuple(vals))


def build_pod_table(max_n: int) -> SeqTable:
    """Exact pod(0..max_n): partitions whose odd parts are not repeated."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    vals = [0] * (max_n + 1)
    vals[0] = 1
    for n in range(1, max_n + 1):
        total = 0
        t = 1
        while True:
            e1 = t * (2 * t - 1)
            if e1 > n:
                break
            term = vals[n - e1]
            e2 = e1 + 2 * t  # t(2t+1)
            if e2 <= n:
                term += vals[n - e2]
            total += term if t % 2 else -term
            t += 1
        vals[n] = total
    return SeqTable(Family.POD, tuple(vals))


def build_table(family: Family, max_n: int) -> SeqTable:
    builder = {
        Family.P: build_p_table,
        Family.OVERP: build_overp_table,
        Family.POD: build_pod_table,
    }[family]
    return builder(max_n)


@dataclass(frozen=True)
class Partition:
    """A partition with nonincreasing parts.

    In overpartition mode `overlined` marks the distinct parts whose first
    occurrence carries an overline.
    """

    parts: tuple[int, ...]
    overlined: frozenset[int] = frozenset()

    @property
    def total(self) -> int:
        return sum(self.parts)


def _plain_parts(n: int, maxpart: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in _plain_parts(n - first, first):
            yield (first,) + rest


def _pod_parts(n: int, maxpart: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        # an odd first part may not be repeated further down
        cap = first - 1 if first % 2 else first
        for rest in _pod_parts(n - first, cap):
            yield (first,) + rest


def enumerate_partitions(n: int, mode: Mode) -> Iterator[Partition]:
    """Yield each admissible partition of n exactly once.

    The number of items equals p(n), p-bar(n) or pod(n) according to mode.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    cap = _MODE_CAPS[mode]
    if n > cap:
        raise CapExceeded(f"enumeration cap for {mode.value} is {cap}, asked for {n}")
    if mode is Mode.PLAIN:
        for parts in _plain_parts(n, n):
            yield Partition(parts)
    elif mode is Mode.POD:
        for parts in _pod_parts(n, n):
            yield Partition(parts)
    else:
        for parts in _plain_parts(n, n):
            distinct = sorted(set(parts))
            for size in range(len(distinct) + 1):
                for marked in combinations(distinct, size):
                    yield Partition(parts, frozenset(marked))
