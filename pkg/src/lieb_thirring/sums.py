import logging
from typing import Iterable, NamedTuple

from src.conformal.maps import dist_to_ray
from src.lieb_thirring.exponents import ExponentSpec

logger = logging.getLogger(__name__)


class LtSum(NamedTuple):
    value: float
    terms: int
    excluded: int


def lt_sum(candidates: Iterable[complex], spec: ExponentSpec) -> LtSum:
    """sum of d(lambda, R+)^q / (|lambda|^alpha (1+|lambda|)^beta) over discrete candidates.

    lambda = 0 with alpha > 0 is skipped and counted in `excluded`.
    """
    total = 0.0
    terms = 0
    excluded = 0
    for lam in candidates:
        lam = complex(lam)
        if lam == 0 and spec.alpha > 0.0:
            excluded += 1
            continue
        total += dist_to_ray(lam) ** spec.q / spec.denominator(lam)
        terms += 1
    if excluded:
        logger.warning(f"lt_sum skipped {excluded} eigenvalue(s) at lambda = 0")
    return LtSum(total, terms, excluded)
