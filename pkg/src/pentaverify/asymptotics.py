"""Floating-point analytic layer: main terms, Bessel/Wright evaluators,
major/minor-arc checks, eta inversion, and circle-method reconstruction.

All circle-method geometry lives on the horizontal line tau = x + iy with
y = 1/(2 sqrt(6n)) and major arc |x| <= M y, where M = sqrt((12/(12-pi^2))^2 - 1).
Huge exact integers are compared against analytic formulas in log space via
LogMagnitude (e.g. e^{2 pi sqrt(1e4/6)} ~ e^{257} overflows doubles).
"""

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from . import truncated
from .errors import CapExceeded, DomainError, RegimeViolation
from .partitions import SeqTable
from .quadrature import integrate_doubling
from .truncated import SumFamily

ARC_M = math.sqrt((12.0 / (12.0 - math.pi ** 2)) ** 2 - 1.0)
PROD_TOL = 1e-18
CIRCLE_N_CAP = 80  # e^{2 pi sqrt(n/6)} must keep double-precision headroom

_LN2 = math.log(2.0)


# ---------------------------------------------------------------------------
# log-space magnitudes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LogMagnitude:
    """sign in {-1, 0, +1} plus ln|value|; sign 0 carries ln_abs = -inf."""

    sign: int
    ln_abs: float

    @classmethod
    def from_int(cls, m: int) -> "LogMagnitude":
        if m == 0:
            return cls(0, float("-inf"))
        a = abs(m)
        bits = a.bit_length()
        if bits <= 53:
            ln = math.log(a)
        else:
            ln = math.log(a >> (bits - 53)) + (bits - 53) * _LN2
        return cls(1 if m > 0 else -1, ln)


def main_term_mk(n: int, k: int) -> LogMagnitude:
    """ln of (pi/(12 sqrt 2)) k n^{-3/2} e^{2 pi sqrt(n/6)}."""
    _require_positive(n, k)
    ln = (math.log(math.pi / (12.0 * math.sqrt(2.0))) + math.log(k)
          - 1.5 * math.log(n) + 2.0 * math.pi * math.sqrt(n / 6.0))
    return LogMagnitude(1, ln)


def main_term_mkbar(n: int, k: int) -> LogMagnitude:
    """ln of (1/8) n^{-1} e^{pi sqrt n}; independent of k."""
    _require_positive(n, k)
    ln = math.log(0.125) - math.log(n) + math.pi * math.sqrt(n)
    return LogMagnitude(1, ln)


def main_term_mp(n: int, k: int) -> LogMagnitude:
    """ln of (pi/16) k n^{-3/2} e^{pi sqrt(n/2)}."""
    _require_positive(n, k)
    ln = (math.log(math.pi / 16.0) + math.log(k)
          - 1.5 * math.log(n) + math.pi * math.sqrt(n / 2.0))
    return LogMagnitude(1, ln)


def hardy_ramanujan_log(n: int) -> float:
    """ln of the classical p(n) main term (1/(4 sqrt 3)) n^{-1} e^{2 pi sqrt(n/6)}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2.0 * math.pi * math.sqrt(n / 6.0) - math.log(4.0 * math.sqrt(3.0)) - math.log(n)


_MAIN_TERMS = {
    SumFamily.MK: main_term_mk,
    SumFamily.MKBAR: main_term_mkbar,
    SumFamily.MPK: main_term_mp,
}


def main_term(family: SumFamily, n: int, k: int) -> LogMagnitude:
    return _MAIN_TERMS[family](n, k)


def regime_check(n: int, k: int, family: SumFamily = SumFamily.MK) -> bool:
    """Constant-free proxy for the theorems' k-vs-n growth hypotheses."""
    exponent = 12 if family is SumFamily.MKBAR else 8
    return k ** exponent <= n


def _require_positive(n: int, k: int) -> None:
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")


# ---------------------------------------------------------------------------
# modified Bessel function of the first kind, two independent routes
# ---------------------------------------------------------------------------

def bessel_i_series(order: float, x: float) -> float:
    """Ascending series sum_m (x/2)^{2m+order} / (m! Gamma(m+order+1))."""
    if x <= 0:
        raise DomainError("bessel_i needs x > 0")
    if order <= -1 and float(order).is_integer():
        raise ValueError("negative integer orders are not supported")
    half = 0.5 * x
    term = half ** order / math.gamma(order + 1.0)
    total = term
    m = 0
    while True:
        m += 1
        term *= half * half / (m * (m + order))
        total += term
        if abs(term) <= 1e-18 * abs(total) and m > half:
            return total
        if m > 100000:
            raise DomainError("bessel series failed to converge")


def bessel_i_half(order: float, x: float) -> float:
    """Closed form for half-integer orders from the I_{1/2}, I_{-1/2} seeds.

    I_{1/2} = sqrt(2/(pi x)) sinh x, I_{-1/2} = sqrt(2/(pi x)) cosh x, joined
    by the three-term recurrence I_{nu-1} = I_{nu+1} + (2 nu / x) I_nu.
    """
    if x <= 0:
        raise DomainError("bessel_i needs x > 0")
    if (2.0 * order) % 2 != 1.0 and (2.0 * order) % 2 != -1.0:
        raise ValueError(f"order {order} is not a half-integer")
    c = math.sqrt(2.0 / (math.pi * x))
    i_plus = c * math.sinh(x)    # I_{1/2}
    i_minus = c * math.cosh(x)   # I_{-1/2}
    if order == 0.5:
        return i_plus
    if order == -0.5:
        return i_minus
    if order > 0:
        nu = 0.5
        prev, cur = i_minus, i_plus  # I_{nu-1}, I_nu
        while nu < order:
            prev, cur = cur, prev - (2.0 * nu / x) * cur
            nu += 1.0
        return cur
    nu = -0.5
    above, cur = i_plus, i_minus  # I_{nu+1}, I_nu
    while nu > order:
        above, cur = cur, above + (2.0 * nu / x) * cur
        nu -= 1.0
    return cur


def bessel_i(order: float, x: float) -> float:
    """I_order(x): closed form for half-integer orders, ascending series otherwise."""
    if (2.0 * order).is_integer() and not float(order).is_integer():
        return bessel_i_half(order, x)
    return bessel_i_series(order, x)


# ---------------------------------------------------------------------------
# Wright's vertical-segment contour integral
# ---------------------------------------------------------------------------

# Extended precision (when the platform provides an 80-bit long double) keeps
# the Wright-vs-Bessel defect measurable at large u: at u = 40 the true defect
# is ~2e-16 relative to the e^{2u}-sized values, at double-precision eps.
_EXTENDED = bool(np.finfo(np.longdouble).eps < 1e-18)
_WRIGHT_REAL = np.longdouble if _EXTENDED else np.float64
_WRIGHT_TOL_FLOOR = 5e-17 if _EXTENDED else 1e-13


def wright_p(s: float, u: float, arc_height: float = ARC_M,
             tol: float = 1e-10) -> complex:
    """(1/(2 pi i)) times the integral of v^s e^{u(v + 1/v)} over the segment
    1 - i*arc_height .. 1 + i*arc_height.

    Conjugate-symmetric for real s, so the imaginary part is a diagnostic and
    should vanish to quadrature accuracy. Asymptotically I_{-s-1}(2u) + O(e^u).
    """
    if u <= 0:
        raise DomainError("wright_p needs u > 0")
    if arc_height <= 0:
        raise DomainError("arc height must be positive")
    ul = _WRIGHT_REAL(u)

    def integrand(ts: np.ndarray) -> np.ndarray:
        v = 1.0 + 1j * ts
        return v ** s * np.exp(ul * (v + 1.0 / v))

    val = integrate_doubling(integrand, -arc_height, arc_height,
                             max(min(tol, 1e-12), _WRIGHT_TOL_FLOOR),
                             confirms=2, node_dtype=_WRIGHT_REAL)
    return complex(val) / (2.0 * math.pi)


# ---------------------------------------------------------------------------
# numerical generating-function evaluation on the circle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexTau:
    """tau = x + iy in the upper half-plane with |x| <= 1/2."""

    x: float
    y: float

    def __post_init__(self):
        if self.y <= 0:
            raise DomainError("need Im tau > 0")
        if abs(self.x) > 0.5 + 1e-15:
            raise DomainError("need |Re tau| <= 1/2")

    @property
    def tau(self) -> complex:
        return complex(self.x, self.y)

    @property
    def q(self) -> complex:
        return cmath.exp(2j * math.pi * self.tau)


def _as_tau(tau: Union[complex, ComplexTau]) -> complex:
    return tau.tau if isinstance(tau, ComplexTau) else complex(tau)


def _factor_count(abs_q: float, tol: float) -> int:
    # least m with |q|^m < tol
    if abs_q >= 1.0:
        raise DomainError("need |q| < 1")
    return max(1, math.ceil(math.log(tol) / math.log(abs_q)))


def euler_product(q: complex, tol: float = PROD_TOL) -> complex:
    """(q;q)_inf, truncated once |q|^m < tol."""
    mmax = _factor_count(abs(q), tol)
    out = 1.0 + 0j
    qm = 1.0 + 0j
    for _ in range(mmax):
        qm *= q
        out *= 1.0 - qm
    return out


def _euler_product_arr(q: np.ndarray, abs_q: float, tol: float) -> np.ndarray:
    mmax = _factor_count(abs_q, tol)
    out = np.ones_like(q)
    qm = np.ones_like(q)
    for _ in range(mmax):
        qm = qm * q
        out = out * (1.0 - qm)
    return out


def theta_sum_mk(q, k: int):
    """sum_{j=0}^{k-1} (-1)^j q^{j(3j+1)/2} (1 - q^{2j+1}); scalar or ndarray q."""
    total = 0
    for j in range(k):
        e = j * (3 * j + 1) // 2
        t = q ** e * (1 - q ** (2 * j + 1))
        total = total + (t if j % 2 == 0 else -t)
    return total


def mgf_from_q(q: complex, k: int, prod_tol: float = PROD_TOL) -> complex:
    """M_k generating function at a point q inside the unit disc."""
    if k < 1:
        raise ValueError("k must be >= 1")
    sign = 1 if k % 2 else -1
    return sign * theta_sum_mk(q, k) / euler_product(q, prod_tol)


def mgf_eval(tau: Union[complex, ComplexTau], k: int,
             prod_tol: float = PROD_TOL) -> complex:
    """M_k generating function at q = e^{2 pi i tau}, Im tau > 0."""
    t = _as_tau(tau)
    if t.imag <= 0:
        raise DomainError("need Im tau > 0")
    return mgf_from_q(cmath.exp(2j * math.pi * t), k, prod_tol)


def _mgf_on_line(xs: np.ndarray, y: float, k: int, prod_tol: float) -> np.ndarray:
    """Vectorized M_k generating function along tau = x + iy."""
    q = np.exp(2j * np.pi * (xs + 1j * y))
    sign = 1 if k % 2 else -1
    return sign * theta_sum_mk(q, k) / _euler_product_arr(q, math.exp(-2 * math.pi * y), prod_tol)


# ---------------------------------------------------------------------------
# contour geometry
# ---------------------------------------------------------------------------

def arc_height_y(n: int) -> float:
    return 1.0 / (2.0 * math.sqrt(6.0 * n))


@dataclass(frozen=True)
class ContourSpec:
    """Circle-method geometry for index n and truncation depth k."""

    n: int
    k: int
    y: float
    M: float
    major_pts: int = 8
    minor_pts: int = 8

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError("need n >= 1 and k >= 1")
        if not math.isclose(self.y, arc_height_y(self.n), rel_tol=1e-12):
            raise ValueError("y must equal 1/(2 sqrt(6n))")
        if not (self.M > 0 and math.isclose(self.M, ARC_M, rel_tol=1e-12)):
            raise ValueError("M must equal sqrt((12/(12-pi^2))^2 - 1)")

    @classmethod
    def for_n(cls, n: int, k: int, major_pts: int = 8, minor_pts: int = 8) -> "ContourSpec":
        return cls(n, k, arc_height_y(n), ARC_M, major_pts, minor_pts)


# ---------------------------------------------------------------------------
# eta inversion check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EtaReport:
    tau: complex
    defect_full: float     # against the exact transformation (product at -1/tau kept)
    defect_leading: float  # against the leading form (that product replaced by 1)
    leading_bound: float   # 10 e^{-2 pi Im(-1/tau)}


def eta_inversion_check(tau: Union[complex, ComplexTau],
                        prod_tol: float = PROD_TOL) -> EtaReport:
    """Check (q;q)_inf = (-i tau)^{-1/2} e^{-pi i tau/12 - pi i/(12 tau)} (q';q')_inf
    with q' = e^{-2 pi i/tau}; principal square root (positive on positive reals).
    """
    t = _as_tau(tau)
    if t.imag <= 0:
        raise DomainError("need Im tau > 0")
    q = cmath.exp(2j * math.pi * t)
    lhs = euler_product(q, prod_tol)
    t_inv = -1.0 / t
    q_prime = cmath.exp(2j * math.pi * t_inv)
    base = cmath.exp(-1j * math.pi * t / 12.0 - 1j * math.pi / (12.0 * t)) / cmath.sqrt(-1j * t)
    rhs_full = base * euler_product(q_prime, prod_tol)
    defect_full = abs(lhs / rhs_full - 1.0)
    defect_leading = abs(lhs / base - 1.0)
    bound = 10.0 * math.exp(-2.0 * math.pi * t_inv.imag)
    return EtaReport(t, defect_full, defect_leading, bound)


# ---------------------------------------------------------------------------
# major- and minor-arc lemma checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LemmaReport:
    kind: str
    n: int
    k: int
    defect: float       # normalized so it should stay bounded as n grows
    samples: int
    theta_max: float    # max |theta sum| over the samples (<= 2k trivially)


def lemma_near1_check(n: int, k: int, samples: int = 257,
                      prod_tol: float = PROD_TOL, force: bool = False) -> LemmaReport:
    """Max major-arc defect of the saddle approximation
    -2 e^{i pi/4} pi k tau^{3/2} e^{i pi/(12 tau)}, normalized by the error
    shape k^3 n^{-5/4} e^{pi sqrt(n/6)}.
    """
    if not force and not regime_check(n, k, SumFamily.MK):
        raise RegimeViolation(f"(n={n}, k={k}) outside k^8 <= n; pass force=True to override")
    y = arc_height_y(n)
    xs = np.linspace(-ARC_M * y, ARC_M * y, samples)
    tau = xs + 1j * y
    vals = _mgf_on_line(xs, y, k, prod_tol)
    approx = -2.0 * np.exp(0.25j * np.pi) * np.pi * k * tau ** 1.5 \
        * np.exp(1j * np.pi / (12.0 * tau))
    diff = float(np.max(np.abs(vals - approx)))
    scale = math.exp(-math.pi * math.sqrt(n / 6.0)) * n ** 1.25 / k ** 3
    theta_max = float(np.max(np.abs(theta_sum_mk(np.exp(2j * np.pi * tau), k))))
    return LemmaReport("near1", n, k, diff * scale, samples, theta_max)


def lemma_away1_check(n: int, k: int, per_side: int = 512,
                      prod_tol: float = PROD_TOL, force: bool = False) -> LemmaReport:
    """Max minor-arc magnitude of the generating function, normalized by the
    bound shape k n^{-1/4} e^{pi sqrt n/(2 sqrt 6)}.
    """
    if not force and not regime_check(n, k, SumFamily.MK):
        raise RegimeViolation(f"(n={n}, k={k}) outside k^8 <= n; pass force=True to override")
    y = arc_height_y(n)
    lo = ARC_M * y
    if lo >= 0.5:
        raise DomainError("minor arc is empty at this n")
    xs_pos = np.linspace(lo, 0.5, per_side + 2)  # endpoints included
    xs = np.concatenate([-xs_pos[::-1], xs_pos])
    vals = _mgf_on_line(xs, y, k, prod_tol)
    peak = float(np.max(np.abs(vals)))
    scale = n ** 0.25 * math.exp(-math.pi * math.sqrt(n) / (2.0 * math.sqrt(6.0))) / k
    q = np.exp(2j * np.pi * (xs + 1j * y))
    theta_max = float(np.max(np.abs(theta_sum_mk(q, k))))
    return LemmaReport("away1", n, k, peak * scale, 2 * (per_side + 2), theta_max)


# ---------------------------------------------------------------------------
# circle-method coefficient reconstruction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CircleResult:
    n: int
    k: int
    integral: float
    imag_residual: float
    rounded: int


def circle_method_report(n: int, k: int, spec: Optional[ContourSpec] = None,
                         tol: float = 1e-10, prod_tol: float = PROD_TOL) -> CircleResult:
    """Quadrature of the coefficient integral int_{-1/2}^{1/2} of the
    generating function times e^{-2 pi i n tau} at height y = 1/(2 sqrt(6n)),
    split at the major/minor-arc boundary |x| = M y.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > CIRCLE_N_CAP:
        raise CapExceeded(f"circle method supports n <= {CIRCLE_N_CAP} in double precision")
    if spec is None:
        spec = ContourSpec.for_n(n, k)
    y = spec.y

    def integrand(xs: np.ndarray) -> np.ndarray:
        return _mgf_on_line(xs, y, k, prod_tol) * np.exp(-2j * np.pi * n * (xs + 1j * y))

    split = min(spec.M * y, 0.5)
    total = complex(integrate_doubling(integrand, -split, split, tol, abs_tol=1e-4,
                                       panels=spec.major_pts, confirms=2))
    if split < 0.5:
        # the left half is the conjugate of the right half
        right = complex(integrate_doubling(integrand, split, 0.5, tol, abs_tol=1e-4,
                                           panels=spec.minor_pts, confirms=2))
        total += 2.0 * right.real
    return CircleResult(n, k, total.real, abs(total.imag), round(total.real))


def circle_method_mk(n: int, k: int, spec: Optional[ContourSpec] = None,
                     tol: float = 1e-10, prod_tol: float = PROD_TOL) -> float:
    """Real value of the coefficient integral; rounds to the exact M_k(n)."""
    return circle_method_report(n, k, spec, tol, prod_tol).integral


# ---------------------------------------------------------------------------
# asymptotic ratio tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RatioReport:
    family: str
    n: int
    k: int
    ln_exact: float
    ln_main: float
    rel_dev: float  # exact/main - 1, computed in log space; nan when exact <= 0
    in_regime: bool


def ratio_row(family: SumFamily, n: int, k: int, table: SeqTable) -> RatioReport:
    exact = truncated.evaluate(family, n, k, table)
    lm = LogMagnitude.from_int(exact)
    main = main_term(family, n, k)
    if lm.sign > 0:
        rel_dev = math.expm1(lm.ln_abs - main.ln_abs)
    else:
        rel_dev = float("nan")
    return RatioReport(family.value, n, k, lm.ln_abs, main.ln_abs, rel_dev,
                       regime_check(n, k, family))


def ratio_table(family: SumFamily, n_list: list[int], k_list: list[int],
                table: SeqTable) -> list[RatioReport]:
    """One row per (n, k), in input order (n outer, k inner)."""
    return [ratio_row(family, n, k, table) for n in n_list for k in k_list]
