"""Dense truncated formal power series over exact integers.

Everything here is exact: coefficients are Python ints, truncation is strict
at a fixed order N, and infinite products are cut at the first factor that is
identically 1 modulo q^{N+1} (exact at truncation order, not an approximation).

The module provides q-Pochhammer and Gaussian-binomial constructors plus the
four generating-function identities verified coefficientwise by the CLI:

  * the truncated pentagonal sum M_k: closed form vs. manifestly positive form;
  * the Guo-Zeng square-theta identity (overpartitions);
  * the Guo-Zeng odd/even identity (odd-parts-distinct partitions).

Multiplication is schoolbook O(N^2); the identity builders use incremental
multiply/exact-divide by (1 - c q^m), which costs O(N) per factor.
"""

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import InexactDivision, NonUnitConstantTerm, OrderMismatch


@dataclass(frozen=True)
class CoeffSeries:
    """Integer coefficients of q^0..q^N."""

    coeffs: tuple[int, ...]

    @property
    def trunc_order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, e: int) -> int:
        return self.coeffs[e]

    def rows(self) -> Iterator[tuple[int, int]]:
        """(exponent, coefficient) pairs for CSV export."""
        return iter(enumerate(self.coeffs))

    @classmethod
    def from_list(cls, coeffs: list[int], trunc: int) -> "CoeffSeries":
        c = list(coeffs[: trunc + 1])
        c += [0] * (trunc + 1 - len(c))
        return cls(tuple(c))

    @classmethod
    def one(cls, trunc: int) -> "CoeffSeries":
        return cls.from_list([1], trunc)

    @classmethod
    def zero(cls, trunc: int) -> "CoeffSeries":
        return cls.from_list([], trunc)


def first_mismatch(a: CoeffSeries, b: CoeffSeries) -> Optional[tuple[int, int, int]]:
    """First exponent where the two series differ, with both coefficients."""
    if a.trunc_order != b.trunc_order:
        raise OrderMismatch("cannot compare series of different truncation order")
    for e, (ca, cb) in enumerate(zip(a.coeffs, b.coeffs)):
        if ca != cb:
            return e, ca, cb
    return None


# ---------------------------------------------------------------------------
# list-level helpers (internal; operate on mutable coefficient lists)
# ---------------------------------------------------------------------------

def _mul_lists(a: list[int], b: list[int], trunc: int) -> list[int]:
    out = [0] * (trunc + 1)
    for i, ca in enumerate(a):
        if ca and i <= trunc:
            top = trunc - i
            for j, cb in enumerate(b[: top + 1]):
                if cb:
                    out[i + j] += ca * cb
    return out


def _mul_one_minus(a: list[int], m: int, c: int) -> None:
    """a *= (1 - c q^m), in place."""
    if m > len(a) - 1:
        return
    for i in range(len(a) - 1, m - 1, -1):
        a[i] -= c * a[i - m]


def _div_one_minus(a: list[int], m: int, c: int) -> None:
    """a /= (1 - c q^m), in place: geometric-series multiply."""
    for i in range(m, len(a)):
        a[i] += c * a[i - m]


def _inverse_list(a: list[int]) -> list[int]:
    if not a or a[0] not in (1, -1):
        raise NonUnitConstantTerm("series inversion needs constant term +1 or -1")
    u = a[0]
    n = len(a)
    b = [0] * n
    b[0] = u
    for i in range(1, n):
        s = 0
        for j in range(1, i + 1):
            if j < n and a[j]:
                s += a[j] * b[i - j]
        b[i] = -u * s
    return b


# ---------------------------------------------------------------------------
# public series algebra
# ---------------------------------------------------------------------------

def series_mul(a: CoeffSeries, b: CoeffSeries) -> CoeffSeries:
    """Cauchy product truncated at the common order."""
    if a.trunc_order != b.trunc_order:
        raise OrderMismatch(
            f"trunc orders differ: {a.trunc_order} vs {b.trunc_order}"
        )
    return CoeffSeries(tuple(_mul_lists(list(a.coeffs), list(b.coeffs), a.trunc_order)))


def series_add(a: CoeffSeries, b: CoeffSeries) -> CoeffSeries:
    if a.trunc_order != b.trunc_order:
        raise OrderMismatch("trunc orders differ")
    return CoeffSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def series_sub(a: CoeffSeries, b: CoeffSeries) -> CoeffSeries:
    if a.trunc_order != b.trunc_order:
        raise OrderMismatch("trunc orders differ")
    return CoeffSeries(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def series_scale(a: CoeffSeries, c: int) -> CoeffSeries:
    return CoeffSeries(tuple(c * x for x in a.coeffs))


def series_inverse(a: CoeffSeries) -> CoeffSeries:
    """Multiplicative inverse up to the truncation order (unit constant term)."""
    return CoeffSeries(tuple(_inverse_list(list(a.coeffs))))


def pochhammer(c: int, e: int, n: Optional[int], trunc: int, step: int = 1) -> CoeffSeries:
    """(c q^e; q^step)_n = prod_{j=0}^{n-1} (1 - c q^{e + j step}), truncated.

    n=None means the infinite product; it is cut once the factor exponent
    exceeds the truncation order, which is exact modulo q^{trunc+1}.
    """
    if step < 1:
        raise ValueError("step must be >= 1")
    out = [0] * (trunc + 1)
    out[0] = 1
    j = 0
    while True:
        if n is not None and j >= n:
            break
        exp = e + j * step
        if exp > trunc:
            if n is None:
                break
            j += 1
            continue
        if exp == 0:
            # constant factor (1 - c)
            k = 1 - c
            for i in range(trunc + 1):
                out[i] *= k
        else:
            _mul_one_minus(out, exp, c)
        j += 1
    return CoeffSeries(tuple(out))


def euler_series(trunc: int) -> CoeffSeries:
    """(q;q)_inf truncated."""
    return pochhammer(1, 1, None, trunc)


def partition_series(trunc: int) -> CoeffSeries:
    """1/(q;q)_inf: coefficients are p(0..trunc)."""
    return series_inverse(euler_series(trunc))


def overpartition_series(trunc: int) -> CoeffSeries:
    """(-q;q)_inf/(q;q)_inf: coefficients are p-bar(0..trunc)."""
    return series_mul(pochhammer(-1, 1, None, trunc), partition_series(trunc))


def pod_series(trunc: int) -> CoeffSeries:
    """(-q;q^2)_inf/(q^2;q^2)_inf: coefficients are pod(0..trunc)."""
    num = pochhammer(-1, 1, None, trunc, step=2)
    den = pochhammer(1, 2, None, trunc, step=2)
    return series_mul(num, series_inverse(den))


# ---------------------------------------------------------------------------
# Gaussian binomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QBinomial:
    A: int
    B: int
    value: CoeffSeries


def gaussian_poly(a: int, b: int) -> list[int]:
    """Exact coefficient list of the Gaussian binomial [a, b]_q.

    Built as prod_{i=1}^{b} (1 - q^{a-b+i})/(1 - q^i); every partial product
    is itself a Gaussian binomial, so each division is exact.
    """
    if b < 0 or b > a:
        return [0]
    coeffs = [1]
    for i in range(1, b + 1):
        hi = a - b + i
        coeffs = coeffs + [0] * hi
        _mul_one_minus(coeffs, hi, 1)
        _div_one_minus(coeffs, i, 1)
        deg = i * (a - b)
        if any(coeffs[deg + 1:]):
            raise InexactDivision(f"[{a},{b}]_q: non-polynomial partial product")
        del coeffs[deg + 1:]
    return coeffs


def q_binom(a: int, b: int, trunc: Optional[int] = None, base: int = 1) -> QBinomial:
    """Gaussian binomial [a, b] in base q or q^2 as a (possibly truncated) series.

    The zero polynomial is returned when b < 0 or b > a.
    """
    if base not in (1, 2):
        raise ValueError("base must be 1 (q) or 2 (q^2)")
    poly = gaussian_poly(a, b)
    if base == 2:
        stretched = [0] * (2 * len(poly) - 1)
        stretched[::2] = poly
        poly = stretched
    if trunc is None:
        trunc = len(poly) - 1
    return QBinomial(a, b, CoeffSeries.from_list(poly, trunc))


# ---------------------------------------------------------------------------
# generating-function identities
# ---------------------------------------------------------------------------

def mk_gf_closed(k: int, trunc: int) -> CoeffSeries:
    """Truncated pentagonal sum series: coefficient of q^n is M_k(n).

    (-1)^{k-1}/(q;q)_inf * sum_{j=0}^{k-1} (-1)^j q^{j(3j+1)/2} (1 - q^{2j+1}),
    with M_k(0) = (-1)^{k-1}.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    num = [0] * (trunc + 1)
    for j in range(k):
        e1 = j * (3 * j + 1) // 2
        e2 = e1 + 2 * j + 1
        s = 1 if j % 2 == 0 else -1
        if e1 <= trunc:
            num[e1] += s
        if e2 <= trunc:
            num[e2] -= s
        if e1 > trunc:
            break
    sign = 1 if k % 2 else -1
    inv = _inverse_list(list(euler_series(trunc).coeffs))
    return CoeffSeries(tuple(sign * x for x in _mul_lists(num, inv, trunc)))


def _acc_shifted_product(target: list[int], a: list[int], b: list[int],
                         offset: int, scale: int) -> None:
    """target += scale * q^offset * a * b, truncated to len(target)-1."""
    trunc = len(target) - 1
    lim = trunc - offset
    if lim < 0:
        return
    for i, ci in enumerate(a[: lim + 1]):
        if ci:
            base = offset + i
            top = lim - i
            for j, cj in enumerate(b[: top + 1]):
                if cj:
                    target[base + j] += scale * ci * cj


def mk_gf_positive(k: int, trunc: int) -> CoeffSeries:
    """Manifestly positive form of the M_k series:

    (-1)^{k-1} + sum_{n>=1} q^{C(k,2) + (k+1)n}/(q;q)_n * [n-1, k-1]_q.

    Terms with n < k vanish through the Gaussian binomial; the n = k term has
    the leading exponent k(3k+1)/2.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    out = [0] * (trunc + 1)
    out[0] = 1 if k % 2 else -1
    inv = [0] * (trunc + 1)
    inv[0] = 1  # 1/(q;q)_0
    n = 1
    while True:
        offset = k * (k - 1) // 2 + (k + 1) * n
        if offset > trunc:
            break
        _div_one_minus(inv, n, 1)
        qb = gaussian_poly(n - 1, k - 1)
        _acc_shifted_product(out, qb, inv, offset, 1)
        n += 1
    return CoeffSeries(tuple(out))


def guozeng_square_sides(k: int, trunc: int) -> tuple[CoeffSeries, CoeffSeries]:
    """Both sides of the square-theta identity.

    LHS: (-q;q)_inf/(q;q)_inf * sum_{j=-k}^{k} (-1)^j q^{j^2}.
    RHS: 1 + (-1)^k sum_{n>=k+1} (-q;q)_k (-1;q)_{n-k} q^{(k+1)n}/(q;q)_n * [n-1, k]_q.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    theta = [0] * (trunc + 1)
    theta[0] = 1
    for j in range(1, k + 1):
        if j * j <= trunc:
            theta[j * j] += 2 * (1 if j % 2 == 0 else -1)
    lhs = _mul_lists(list(overpartition_series(trunc).coeffs), theta, trunc)

    rhs = [0] * (trunc + 1)
    rhs[0] = 1
    sign = 1 if k % 2 == 0 else -1
    # running state: (-q;q)_k * (-1;q)_{n-k} / (q;q)_n, starting at n = k+1
    state = list(pochhammer(-1, 1, k, trunc).coeffs)
    state = [2 * x for x in state]  # (-1;q)_1 = 2
    for i in range(1, k + 2):
        _div_one_minus(state, i, 1)
    qb = [1]  # [n-1, k]_q at n = k+1 is [k, k]_q = 1
    n = k + 1
    while (k + 1) * n <= trunc:
        _acc_shifted_product(rhs, qb, state, (k + 1) * n, sign)
        # advance n -> n+1
        _mul_one_minus(state, n - k, -1)   # * (1 + q^{n-k})
        _div_one_minus(state, n + 1, 1)    # / (1 - q^{n+1})
        qb = qb + [0] * n
        _mul_one_minus(qb, n, 1)           # [n-1,k] -> [n,k]
        _div_one_minus(qb, n - k, 1)
        deg = k * (n - k)
        if any(qb[deg + 1:]):
            raise InexactDivision(f"[{n},{k}]_q update left a remainder")
        del qb[deg + 1:]
        n += 1
    return CoeffSeries(tuple(lhs)), CoeffSeries(tuple(rhs))


def guozeng_pod_sides(k: int, trunc: int) -> tuple[CoeffSeries, CoeffSeries]:
    """Both sides of the odd/even identity.

    LHS: (-q;q^2)_inf/(q^2;q^2)_inf * sum_{j=0}^{k-1} (-1)^j q^{j(2j+1)} (1 - q^{2j+1}).
    RHS: 1 + (-1)^{k-1} sum_{n>=k} (-q;q^2)_k (-q;q^2)_{n-k} q^{2(k+1)n-k}/(q^2;q^2)_n
         * [n-1, k-1]_{q^2}.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    theta = [0] * (trunc + 1)
    for j in range(k):
        e1 = j * (2 * j + 1)
        e2 = (j + 1) * (2 * j + 1)
        s = 1 if j % 2 == 0 else -1
        if e1 <= trunc:
            theta[e1] += s
        if e2 <= trunc:
            theta[e2] -= s
    lhs = _mul_lists(list(pod_series(trunc).coeffs), theta, trunc)

    rhs = [0] * (trunc + 1)
    rhs[0] = 1
    sign = 1 if k % 2 else -1
    # running state: (-q;q^2)_k * (-q;q^2)_{n-k} / (q^2;q^2)_n, starting at n = k
    state = list(pochhammer(-1, 1, k, trunc, step=2).coeffs)
    for i in range(1, k + 1):
        _div_one_minus(state, 2 * i, 1)
    qb = [1]  # [n-1, k-1]_q at n = k is [k-1, k-1]_q = 1 (kept in base q, stretched on use)
    n = k
    while 2 * (k + 1) * n - k <= trunc:
        stretched = [0] * (2 * len(qb) - 1)
        stretched[::2] = qb
        _acc_shifted_product(rhs, stretched, state, 2 * (k + 1) * n - k, sign)
        # advance n -> n+1
        _mul_one_minus(state, 2 * (n - k) + 1, -1)  # * (1 + q^{2(n-k)+1})
        _div_one_minus(state, 2 * (n + 1), 1)       # / (1 - q^{2(n+1)})
        qb = qb + [0] * n
        _mul_one_minus(qb, n, 1)                    # [n-1,k-1] -> [n,k-1]
        _div_one_minus(qb, n - k + 1, 1)
        deg = (k - 1) * (n - k + 1)
        if any(qb[deg + 1:]):
            raise InexactDivision(f"[{n},{k - 1}]_q update left a remainder")
        del qb[deg + 1:]
        n += 1
    return CoeffSeries(tuple(lhs)), CoeffSeries(tuple(rhs))


# ---------------------------------------------------------------------------
# identity comparison drivers
# ---------------------------------------------------------------------------

IDENTITY_NAMES = ("mk_positive", "gz_square", "gz_pod")


def identity_sides(name: str, k: int, trunc: int) -> tuple[CoeffSeries, CoeffSeries]:
    if name == "mk_positive":
        return mk_gf_closed(k, trunc), mk_gf_positive(k, trunc)
    if name == "gz_square":
        return guozeng_square_sides(k, trunc)
    if name == "gz_pod":
        return guozeng_pod_sides(k, trunc)
    raise ValueError(f"unknown identity {name!r}")


def check_identity(name: str, k: int, trunc: int) -> Optional[tuple[int, int, int]]:
    """None when both sides agree; otherwise (exponent, lhs, rhs) of the first gap."""
    lhs, rhs = identity_sides(name, k, trunc)
    return first_mismatch(lhs, rhs)
