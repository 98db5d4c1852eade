"""Exact truncated alternating sums M_k, M-bar_k, MP_k and their counting oracles.

The sums are evaluated directly from the base sequence tables, with the
convention that a sequence value at a negative index is 0:

  M_k(n)     = (-1)^{k-1} sum_{j=0}^{k-1} (-1)^j [p(n - j(3j+1)/2) - p(n - j(3j+5)/2 - 1)]
  M-bar_k(n) = (-1)^k sum_{j=-k}^{k} (-1)^j p-bar(n - j^2)
  MP_k(n)    = (-1)^{k-1} sum_{j=0}^{k-1} (-1)^j [pod(n - j(2j+1)) - pod(n - (j+1)(2j+1))]

Each sum has a brute-force oracle that counts partitions matching the
corresponding structural description (valid for n >= 1):

  M_k:     k is the least integer missing from the partition and there are
           more parts > k than parts < k;
  M-bar_k: overpartitions whose least part exceeding k appears >= k+1 times;
  MP_k:    partitions whose least part exceeding 2k-1 is odd and appears
           exactly k times, while every other odd part appears at most once.
"""

import enum
from typing import Iterator

from .errors import CapExceeded
from .partitions import (
    OVER_CAP,
    PLAIN_CAP,
    POD_CAP,
    Mode,
    SeqTable,
    enumerate_partitions,
)


class SumFamily(enum.Enum):
    MK = "mk"
    MKBAR = "mkbar"
    MPK = "mp"


def mk(n: int, k: int, table: SeqTable) -> int:
    """Exact M_k(n) from a p-table covering index n."""
    _check_nk(n, k)
    table.value(n)  # fail fast when the table is too small
    s = 0
    for j in range(k):
        a = table.value(n - j * (3 * j + 1) // 2)
        b = table.value(n - j * (3 * j + 5) // 2 - 1)
        t = a - b
        s += t if j % 2 == 0 else -t
    return s if k % 2 else -s


def mkbar(n: int, k: int, table: SeqTable) -> int:
    """Exact M-bar_k(n) from an overpartition table covering index n."""
    _check_nk(n, k)
    s = table.value(n)
    for j in range(1, k + 1):
        d = 2 * table.value(n - j * j)
        s += -d if j % 2 else d
    return -s if k % 2 else s


def mp(n: int, k: int, table: SeqTable) -> int:
    """Exact MP_k(n) from a pod table covering index n."""
    _check_nk(n, k)
    table.value(n)
    s = 0
    for j in range(k):
        t = table.value(n - j * (2 * j + 1)) - table.value(n - (j + 1) * (2 * j + 1))
        s += t if j % 2 == 0 else -t
    return s if k % 2 else -s


def evaluate(family: SumFamily, n: int, k: int, table: SeqTable) -> int:
    fn = {SumFamily.MK: mk, SumFamily.MKBAR: mkbar, SumFamily.MPK: mp}[family]
    return fn(n, k, table)


def stabilization_k(n: int) -> int:
    """Least k0 with k0(3k0+1)/2 > n; M_k(n) = 0 for every k >= k0 when n >= 1."""
    k0 = 1
    while k0 * (3 * k0 + 1) // 2 <= n:
        k0 += 1
    return k0


def _check_nk(n: int, k: int) -> None:
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 1:
        raise ValueError("k must be >= 1")


# ---------------------------------------------------------------------------
# combinatorial predicates and oracles
# ---------------------------------------------------------------------------

def _least_part_above(parts: tuple[int, ...], bound: int) -> tuple[int, int]:
    """(least part > bound, its multiplicity), or (0, 0) when there is none."""
    least = 0
    for p in parts:  # parts are nonincreasing
        if p > bound:
            least = p
        else:
            break
    if least == 0:
        return 0, 0
    return least, parts.count(least)


def mk_predicate(parts: tuple[int, ...], k: int) -> bool:
    below = above = 0
    present = set()
    for p in parts:
        present.add(p)
        if p < k:
            below += 1
        elif p > k:
            above += 1
    if k in present:
        return False
    if any(i not in present for i in range(1, k)):
        return False
    return above > below


def mkbar_predicate(parts: tuple[int, ...], k: int) -> bool:
    least, mult = _least_part_above(parts, k)
    return least > 0 and mult >= k + 1


def mp_predicate(parts: tuple[int, ...], k: int) -> bool:
    least, mult = _least_part_above(parts, 2 * k - 1)
    if least == 0 or least % 2 == 0 or mult != k:
        return False
    seen = set()
    for p in parts:
        if p % 2 and p != least:
            if p in seen:
                return False
            seen.add(p)
    return True


def mk_oracle(n: int, k: int) -> int:
    """Brute-force count matching M_k(n) for n >= 1 (enumeration-capped)."""
    if n > PLAIN_CAP:
        raise CapExceeded(f"plain enumeration cap is {PLAIN_CAP}")
    return sum(1 for pt in enumerate_partitions(n, Mode.PLAIN) if mk_predicate(pt.parts, k))


def mkbar_oracle(n: int, k: int) -> int:
    """Brute-force count matching M-bar_k(n) for n, k >= 1."""
    if n > OVER_CAP:
        raise CapExceeded(f"overpartition enumeration cap is {OVER_CAP}")
    return sum(1 for pt in enumerate_partitions(n, Mode.OVER) if mkbar_predicate(pt.parts, k))


def mp_oracle(n: int, k: int) -> int:
    """Brute-force count matching MP_k(n) for n, k >= 1.

    The counted objects are unrestricted partitions (the exactly-k repeats of
    the distinguished odd part are allowed); the empty partition has no part
    above 2k-1 and therefore never counts.
    """
    if n > POD_CAP:
        raise CapExceeded(f"pod enumeration cap is {POD_CAP}")
    return sum(1 for pt in enumerate_partitions(n, Mode.PLAIN) if mp_predicate(pt.parts, k))


_ORACLE_SETUP = {
    SumFamily.MK: (PLAIN_CAP, Mode.PLAIN, mk_predicate),
    SumFamily.MKBAR: (OVER_CAP, Mode.OVER, mkbar_predicate),
    SumFamily.MPK: (POD_CAP, Mode.PLAIN, mp_predicate),
}


def oracle_grid(family: SumFamily, n_cap: int, k_max: int) -> dict[tuple[int, int], int]:
    """Oracle counts for 1 <= n <= n_cap, 1 <= k <= k_max in one enumeration pass per n."""
    cap, mode, pred = _ORACLE_SETUP[family]
    if n_cap > cap:
        raise CapExceeded(f"enumeration cap for {family.value} oracle is {cap}")
    counts = {(n, k): 0 for n in range(1, n_cap + 1) for k in range(1, k_max + 1)}
    for n in range(1, n_cap + 1):
        for pt in enumerate_partitions(n, mode):
            for k in range(1, k_max + 1):
                if pred(pt.parts, k):
                    counts[(n, k)] += 1
    return counts


def grid_rows(family: SumFamily, n_cap: int, k_max: int,
              table: SeqTable) -> Iterator[tuple[str, int, int, int]]:
    """(family, n, k, value) rows for CSV export, n ascending then k."""
    for n in range(0, n_cap + 1):
        for k in range(1, k_max + 1):
            yield family.value, n, k, evaluate(family, n, k, table)
