"""Exact and asymptotic verification of truncated pentagonal-type partition sums.

The package computes the alternating sums M_k(n) (partitions), Mbar_k(n)
(overpartitions) and MP_k(n) (odd-parts-distinct partitions) exactly, verifies
their generating-function identities coefficientwise, checks the combinatorial
interpretations against brute-force enumeration, and reproduces the asymptotic
main terms and circle-method machinery numerically at desk scale.
"""

__version__ = "0.1.0"

from .asymptotics import (
    ContourSpec,
    LogMagnitude,
    RatioReport,
    bessel_i,
    circle_method_mk,
    eta_inversion_check,
    lemma_away1_check,
    lemma_near1_check,
    main_term_mk,
    main_term_mkbar,
    main_term_mp,
    mgf_eval,
    ratio_table,
    regime_check,
    wright_p,
)
from .partitions import (
    Family,
    Mode,
    Partition,
    SeqTable,
    build_overp_table,
    build_p_table,
    build_pod_table,
    enumerate_partitions,
)
from .qseries import (
    CoeffSeries,
    QBinomial,
    guozeng_pod_sides,
    guozeng_square_sides,
    mk_gf_closed,
    mk_gf_positive,
    pochhammer,
    q_binom,
    series_inverse,
    series_mul,
)
from .truncated import (
    SumFamily,
    mk,
    mk_oracle,
    mkbar,
    mkbar_oracle,
    mp,
    mp_oracle,
)

__all__ = [
    "__version__",
    "ContourSpec", "LogMagnitude", "RatioReport",
    "bessel_i", "circle_method_mk", "eta_inversion_check",
    "lemma_away1_check", "lemma_near1_check",
    "main_term_mk", "main_term_mkbar", "main_term_mp",
    "mgf_eval", "ratio_table", "regime_check", "wright_p",
    "Family", "Mode", "Partition", "SeqTable",
    "build_overp_table", "build_p_table", "build_pod_table",
    "enumerate_partitions",
    "CoeffSeries", "QBinomial",
    "guozeng_pod_sides", "guozeng_square_sides",
    "mk_gf_closed", "mk_gf_positive", "pochhammer", "q_binom",
    "series_inverse", "series_mul",
    "SumFamily", "mk", "mk_oracle", "mkbar", "mkbar_oracle", "mp", "mp_oracle",
]
