"""Closed-form constants for the plane punctured at the n-th roots of unity."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from functools import lru_cache

from .specfun import HypergeometricParams, check_index, hyp2f1, log_gamma


def _gamma(x: float) -> float:
    return math.exp(log_gamma(x).real)


@dataclass(frozen=True)
class RootConstants:
    n: int
    gamma_n: float
    k2: float
    k3: float
    r_n: float
    schwarz_factor: float
    covering_derivative: float
    lambda_at_zero: float

    def as_dict(self) -> dict:
        return asdict(self)


@lru_cache(maxsize=None)
def _hyp_at_half(n: int) -> tuple[float, float]:
    """(2F1(a,a;1;1/2), 2F1(a,a;(n-1)/n;1/2)) with a = (n-1)/(2n)."""
    a = (n - 1) / (2 * n)
    comp = n > 50
    f_one = hyp2f1(HypergeometricParams(a, a, 1.0), 0.5, compensated=comp).value.real
    f_c = hyp2f1(HypergeometricParams(a, a, (n - 1) / n), 0.5, compensated=comp).value.real
    return f_one, f_c


@lru_cache(maxsize=None)
def gamma_n(n: int) -> float:
    """gamma_n = 1 / lambda(e^{i pi/n}), from its hypergeometric closed form."""
    n = check_index(n)
    f_one, f_c = _hyp_at_half(n)
    scale = 2.0 ** (1.0 / n) / n
    g_half = _gamma((n - 1) / (2 * n))
    first = scale * math.sin(math.pi / n) * _gamma(1.0 / n) * g_half**2 / math.pi * f_one * f_c
    second = scale * math.pi * math.tan(math.pi / (2 * n)) * f_one**2
    return first - second


def k_constants(n: int) -> tuple[float, float]:
    """(K2, K3) of the explicit metric formula."""
    n = check_index(n)
    k2 = -_gamma((n + 1) / (2 * n)) ** 2 / _gamma(1.0 / n)
    k3 = _gamma((n - 1) / n) / _gamma((n - 1) / (2 * n)) ** 2
    return k2, k3


def _r_from_gamma(g: float) -> float:
    return 1.0 + g - math.sqrt(g * g + 2.0 * g)


def r_n(n: int) -> float:
    """Radius of validity of the Schwarz-type bound."""
    return _r_from_gamma(gamma_n(n))


def schwarz_factor(n: int) -> float:
    g = gamma_n(n)
    return math.exp(math.sqrt(g * g + 2.0 * g) - g) / _r_from_gamma(g)


def covering_derivative(n: int) -> float:
    """|f_n'(0)| for a universal covering f_n of C minus S_n with f_n(0) = 0."""
    n = check_index(n)
    x = 1.0 / n
    num = _gamma((1.0 - x) / 2) ** 2 * _gamma(x)
    den = n * _gamma(1.0 - x) * _gamma((1.0 + x) / 2) ** 2
    return num / den


def hempel_constant() -> float:
    """Gamma(1/4)^4 / (4 pi^2), the limit of n * gamma_n."""
    return _gamma(0.25) ** 4 / (4.0 * math.pi**2)


def schwarz_limit_constant() -> float:
    """8 Gamma(5/4) / Gamma(3/4): leading coefficient of schwarz_factor(n) - 1 in 1/sqrt(n)."""
    return 8.0 * _gamma(1.25) / _gamma(0.75)


def schwarz_factor_asymptotic_residual(n: int) -> float:
    return (schwarz_factor(n) - 1.0) * math.sqrt(n) - schwarz_limit_constant()


@lru_cache(maxsize=None)
def root_constants(n: int) -> RootConstants:
    """All constants for one n, computed once and cached."""
    n = check_index(n)
    g = gamma_n(n)
    k2, k3 = k_constants(n)
    cd = covering_derivative(n)
    return RootConstants(
        n=n,
        gamma_n=g,
        k2=k2,
        k3=k3,
        r_n=_r_from_gamma(g),
        schwarz_factor=schwarz_factor(n),
        covering_derivative=cd,
        lambda_at_zero=2.0 / cd,
    )
