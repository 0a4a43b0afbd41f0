"""Independent reference computations used to check the main pipeline.

Nothing here goes through :mod:`omitroots.specfun`'s 2F1 code: the series is
summed in double-double arithmetic, analytic continuation integrates the
hypergeometric ODE with an adaptive Runge-Kutta pair, and Gamma values come
from mpmath at 30 digits.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath
import numpy as np
from scipy.integrate import solve_ivp

from . import bounds, constants, metrics, specfun
from .ddouble import CDD, DD
from .errors import DomainError, PathError, StepSizeError
from .specfun import HypergeometricParams

SERIES_RADIUS = 0.7
ODE_RTOL = 1e-12
TABLE_RTOL = 5e-6
# beyond this t^n underflows at the extrapolation radius
PULLBACK_MAX_N = 30

GAMMA_TABLE = {
    2: 3.52993,
    3: 1.79372,
    4: 1.22801,
    5: 0.942245,
    10: 0.445789,
    100: 0.0437768,
    1000: 0.00437689,
}
R_TABLE = {
    2: 0.111756,
    3: 0.185105,
    4: 0.237023,
    5: 0.277218,
    10: 0.401612,
    100: 0.744661,
    1000: 0.910713,
}
SCHWARZ_TABLE = {
    2: 21.7516,
    3: 12.2035,
    4: 9.0483,
    5: 7.43155,
    10: 4.5297,
    100: 1.73354,
    1000: 1.20059,
}

_mp = mpmath.mp.clone() if hasattr(mpmath.mp, "clone") else mpmath.mp


@dataclass(frozen=True)
class OracleReport:
    quantity: str
    main_value: complex | float
    oracle_value: complex | float
    relative_error: float
    tolerance: float
    passed: bool

    def to_json(self) -> str:
        def enc(v):
            if isinstance(v, complex):
                return {"re": v.real, "im": v.imag}
            return v

        return json.dumps(
            {
                "quantity": self.quantity,
                "main_value": enc(self.main_value),
                "oracle_value": enc(self.oracle_value),
                "relative_error": self.relative_error,
                "tolerance": self.tolerance,
                "pass": self.passed,
            },
            sort_keys=False,
        )


def to_jsonl(reports: Iterable[OracleReport]) -> str:
    return "".join(r.to_json() + "\n" for r in reports)


# -- double-double series ----------------------------------------------------


def _dd_param(x) -> DD:
    return DD.of(x if isinstance(x, Fraction) else float(x))


def dd_series(a, b, c, z) -> CDD:
    """Power series of 2F1 summed in double-double; |z| <= 0.7."""
    z = complex(z)
    if abs(z) > SERIES_RADIUS:
        raise DomainError(f"reference series needs |z| <= {SERIES_RADIUS}, got |z| = {abs(z):.6g}")
    a, b, c = _dd_param(a), _dd_param(b), _dd_param(c)
    zz = CDD.of(z)
    term = CDD.of(1.0)
    total = CDD.of(1.0)
    small = 0
    for k in range(100_000):
        ratio = (a + k) * (b + k) / ((c + k) * (k + 1))
        term = term * zz * ratio
        total = total + term
        mag = term.abs_hi()
        if mag == 0.0:
            break
        if mag < 1e-34 * total.abs_hi():
            small += 1
            if small == 3:
                break
        else:
            small = 0
    return total


def series_2f1_highprec(p: HypergeometricParams, z: complex) -> complex:
    """Reference value of 2F1 inside |z| <= 0.7 (double-double accumulation).

    Parameters may be floats or :class:`fractions.Fraction`.
    """
    return complex(dd_series(p.a, p.b, p.c, z))


def _dd_to_mp(x: DD):
    return _mp.mpf(x.hi) + _mp.mpf(x.lo)


def _cdd_to_mp(z: CDD):
    return _mp.mpc(_dd_to_mp(z.re), _dd_to_mp(z.im))


# -- ODE continuation --------------------------------------------------------


def _crosses_cut(s: complex, e: complex) -> bool:
    if s.imag * e.imag >= 0.0:
        return s.imag == 0.0 and e.imag == 0.0 and s.real > 1.0 and e.real > 1.0
    t = s.imag / (s.imag - e.imag)
    return (s + t * (e - s)).real > 1.0


def _auto_path(path_end: complex, side: int) -> tuple[complex, list[complex]]:
    r = abs(path_end)
    anchor = 0.5 * path_end / r if r > 0.5 else complex(0.5, 0.0)
    if path_end.imag == 0.0:
        anchor = complex(anchor.real, 0.0)
    waypoints = []
    if r > 1.0 and metrics_distance(1.0 + 0j, anchor, path_end) < 0.3:
        sgn = 1 if path_end.imag > 0 else -1 if path_end.imag < 0 else side
        waypoints = [complex(1.0, 0.5 * sgn)]
    return anchor, waypoints


def metrics_distance(p: complex, s: complex, e: complex) -> float:
    d = e - s
    L2 = abs(d) ** 2
    if L2 == 0.0:
        return abs(p - s)
    t = min(1.0, max(0.0, ((p - s) * d.conjugate()).real / L2))
    return abs(p - (s + t * d))


def ode_continuation(
    p: HypergeometricParams,
    path_end: complex,
    *,
    anchor: complex | None = None,
    waypoints: Sequence[complex] = (),
    side: int = 1,
) -> complex:
    """2F1 at ``path_end`` by integrating the hypergeometric ODE.

    Starts from a point ``anchor`` inside the reference-series disk and runs
    along the polyline anchor -> waypoints -> path_end.  Without an explicit
    anchor one is placed on the ray towards ``path_end`` (|anchor| = 1/2) and a
    detour around z = 1 is added when needed; ``side`` picks the half plane
    of that detour for end points on the cut [1, inf).
    """
    path_end = complex(path_end)
    if anchor is None:
        anchor, auto = _auto_path(path_end, side)
        waypoints = list(waypoints) or auto
    anchor = complex(anchor)
    a, b, c = float(p.a), float(p.b), float(p.c)
    f = complex(dd_series(p.a, p.b, p.c, anchor))
    df = complex(dd_series(Fraction(p.a) + 1 if isinstance(p.a, Fraction) else a + 1,
                           Fraction(p.b) + 1 if isinstance(p.b, Fraction) else b + 1,
                           Fraction(p.c) + 1 if isinstance(p.c, Fraction) else c + 1,
                           anchor)) * (a * b / c)

    nodes = [anchor, *map(complex, waypoints), path_end]
    for s, e in zip(nodes, nodes[1:]):
        if metrics_distance(0j, s, e) < 1e-3 or metrics_distance(1 + 0j, s, e) < 1e-3:
            raise PathError(f"segment {s} -> {e} passes through a singular point of the ODE")
        if _crosses_cut(s, e):
            raise PathError(f"segment {s} -> {e} crosses the branch cut [1, inf)")

    def rhs(_t, y, z0, dz):
        z = z0 + _t * dz
        F, dF = y
        d2F = (a * b * F - (c - (a + b + 1.0) * z) * dF) / (z * (1.0 - z))
        return [dF * dz, d2F * dz]

    y = np.array([f, df], dtype=complex)
    for s, e in zip(nodes, nodes[1:]):
        for z0, z1 in _subdivide(s, e):
            sol = solve_ivp(rhs, (0.0, 1.0), y, method="DOP853", rtol=ODE_RTOL, atol=1e-14, args=(z0, z1 - z0))
            if sol.status != 0:
                raise StepSizeError(f"ODE integration failed on {z0} -> {z1}: {sol.message}")
            y = sol.y[:, -1]
    return complex(y[0])


def _subdivide(s: complex, e: complex) -> list[tuple[complex, complex]]:
    """Split a segment so that each piece is short next to z = 0 or z = 1."""
    pieces = []
    p = s
    while p != e:
        near = min(abs(p), abs(1.0 - p))
        hmax = max(0.02, 0.25 * near) if near < 0.2 else max(0.05, 0.5 * near)
        d = e - p
        if abs(d) <= hmax:
            pieces.append((p, e))
            break
        q = p + d * (hmax / abs(d))
        pieces.append((p, q))
        p = q
    return pieces


# -- high-precision chains ---------------------------------------------------


def _mp_gamma(x):
    return _mp.gamma(_mp.mpf(x) if not isinstance(x, Fraction) else _mp.mpf(x.numerator) / x.denominator)


def oracle_gamma_n(n: int):
    """gamma_n in mpmath precision from double-double series at 1/2."""
    with _mp.workdps(30):
        a = Fraction(n - 1, 2 * n)
        f_one = _dd_to_mp(dd_series(a, a, 1, 0.5).re)
        f_c = _dd_to_mp(dd_series(a, a, Fraction(n - 1, n), 0.5).re)
        pi = _mp.pi
        scale = _mp.mpf(2) ** (_mp.mpf(1) / n) / n
        first = scale * _mp.sin(pi / n) * _mp_gamma(Fraction(1, n)) * _mp_gamma(a) ** 2 / pi * f_one * f_c
        second = scale * pi * _mp.tan(pi / (2 * n)) * f_one**2
        return first - second


def oracle_covering_derivative(n: int):
    with _mp.workdps(30):
        x = _mp.mpf(1) / n
        return _mp.gamma((1 - x) / 2) ** 2 * _mp.gamma(x) / (n * _mp.gamma(1 - x) * _mp.gamma((1 + x) / 2) ** 2)


def oracle_hempel():
    with _mp.workdps(30):
        return _mp.gamma(_mp.mpf(1) / 4) ** 4 / (4 * _mp.pi**2)


def oracle_schwarz_residual(n: int):
    with _mp.workdps(30):
        g = oracle_gamma_n(n)
        s = _mp.sqrt(g * g + 2 * g)
        factor = _mp.exp(s - g) / (1 + g - s)
        return (factor - 1) * _mp.sqrt(n) - 8 * _mp.gamma(_mp.mpf(5) / 4) / _mp.gamma(_mp.mpf(3) / 4)


def oracle_lambda_general_half(n: int):
    """The explicit metric formula at w = 1/2 assembled from reference values."""
    with _mp.workdps(30):
        a = Fraction(n - 1, 2 * n)
        p1 = _dd_to_mp(dd_series(a, a, Fraction(n - 1, n), 0.5).re)
        p2 = _dd_to_mp(dd_series(a, a, 1, 0.5).re)
        k2 = -_mp_gamma(Fraction(n + 1, 2 * n)) ** 2 / _mp_gamma(Fraction(1, n))
        k3 = _mp_gamma(Fraction(n - 1, n)) / _mp_gamma(a) ** 2
        half = _mp.mpf(1) / 2
        return 1 / (half ** (1 - _mp.mpf(1) / n) * half) / (k2 / (2 * k3) * p2**2 + p1 * p2 / k3)


def pullback_limit_at_zero(n: int, t: float = 1e-4) -> float:
    """lim_{z->0} n|z|^(n-1) lambda_general(z^n) by Richardson extrapolation
    along z = t e^{i pi/(2n)}, using the explicit formula (not the closed form).

    The pulled-back density is smooth and even along the ray to leading
    order, so the error is O(t^2).
    """
    def pulled(r: float) -> float:
        z = r * cmath.exp(1j * math.pi / (2 * n))
        return n * r ** (n - 1) * metrics.lambda_general(n, z**n).value

    return (4.0 * pulled(t / 2) - pulled(t)) / 3.0


# -- suite -------------------------------------------------------------------


def _report(label: str, main, oracle, tol: float, *, mode: str = "rel") -> OracleReport:
    """mode 'rel': |main-oracle|/|oracle|; 'abs': |main-oracle|; 'le': main <= oracle."""
    main_c = complex(main)
    oracle_c = complex(oracle)
    if mode == "rel":
        err = abs(main_c - oracle_c) / abs(oracle_c) if oracle_c != 0 else abs(main_c)
    elif mode == "abs":
        err = abs(main_c - oracle_c)
    else:
        err = max(0.0, main_c.real - oracle_c.real)
    def plain(v: complex):
        return v.real if v.imag == 0.0 else v
    return OracleReport(label, plain(main_c), plain(oracle_c), float(err), tol, bool(err <= tol))


def _global_entries() -> list[OracleReport]:
    out = []
    quarter = Fraction(1, 4)
    with _mp.workdps(30):
        out.append(_report("specfun.log_gamma(1/4)", specfun.log_gamma(0.25), _mp.loggamma(_mp.mpf(1) / 4), 1e-13))
        z = complex(0.3, 0.7)
        out.append(_report("specfun.log_gamma(0.3+0.7i)", specfun.log_gamma(z), _mp.loggamma(_mp.mpc(z)), 1e-13))
        out.append(_report("specfun.reflection_check(0.3+0.7i)", specfun.reflection_check(z), 0.0, 1e-12, mode="abs"))
        out.append(_report("specfun.reflection_check(1/4)", specfun.reflection_check(0.25), 0.0, 1e-12, mode="abs"))

        gauss = _mp.gamma(1) * _mp.gamma(_mp.mpf(1) / 4) / _mp.gamma(_mp.mpf(5) / 8) ** 2
        p4 = HypergeometricParams(3 / 8, 3 / 8, 1.0)
        out.append(_report("specfun.hyp2f1(3/8,3/8,1;1) gauss", specfun.hyp2f1(p4, 1.0).value, gauss, 1e-10))

        p112 = HypergeometricParams(1.0, 1.0, 2.0)
        closed = -_mp.log(1 - _mp.mpf(0.3)) / _mp.mpf(0.3)
        out.append(_report("specfun.hyp2f1(1,1,2;0.3)", specfun.hyp2f1(p112, 0.3).value, closed, 1e-13))
        ref = dd_series(1, 1, 2, 0.3)
        out.append(_report("verify.series_2f1_highprec(1,1,2;0.3) vs closed form", _cdd_to_mp(ref), closed, 1e-25))
        out.append(_report("verify.series_2f1_highprec(z=0)", series_2f1_highprec(p112, 0.0), 1.0, 0.0))

    p_phi1 = HypergeometricParams(quarter, quarter, Fraction(1, 2))
    p_phi2 = HypergeometricParams(quarter, quarter, 1)
    out.append(_report("specfun.phi1(n=2,z=1/2)", specfun.phi1(2, 0.5).value, series_2f1_highprec(p_phi1, 0.5), 1e-11))
    out.append(_report("specfun.phi2(n=2,z=1/2)", specfun.phi2(2, 0.5).value, series_2f1_highprec(p_phi2, 0.5), 1e-11))
    out.append(_report("specfun.phi1(n=2,z=-3)", specfun.phi1(2, -3.0).value, ode_continuation(p_phi1, -3.0), 1e-9))
    out.append(
        _report(
            "verify.ode_continuation phi1(n=2) anchor 0.5 -> -3",
            ode_continuation(p_phi1, -3.0, anchor=0.5, waypoints=[0.5j]),
            ode_continuation(p_phi1, -3.0),
            1e-10,
        )
    )
    third = Fraction(1, 3)
    p3 = HypergeometricParams(third, third, 1)
    # phi2(3, 4) = 2F1(1/3,1/3,1;-3)
    out.append(_report("specfun.phi2(n=3,z=4)", specfun.phi2(3, 4.0).value, ode_continuation(p3, -3.0), 1e-9))

    inside = complex(0.3, 0.3)
    out.append(
        _report(
            "verify.ode_continuation inside series disk",
            ode_continuation(p_phi1, inside),
            series_2f1_highprec(p_phi1, inside),
            1e-11,
        )
    )
    loop_end = ode_continuation(p_phi1, 0.5, anchor=0.5, waypoints=[0.5 + 0.4j, -0.2 + 0.4j, -0.2 - 0.4j, 0.5 - 0.4j])
    out.append(_report("verify.ode_continuation closed loop", loop_end, series_2f1_highprec(p_phi1, 0.5), 1e-10))

    with _mp.workdps(30):
        k2, k3 = constants.k_constants(2)
        out.append(_report("constants.k3(n=2)", k3, _mp.sqrt(_mp.pi) / _mp.gamma(_mp.mpf(1) / 4) ** 2, 1e-12))
        k2b, k3b = constants.k_constants(1000)
        exact = -2 * _mp.pi * _mp.tan(_mp.pi / 2000)
        out.append(_report("constants.k2/k3(n=1000)", k2b / k3b, exact, 1e-12))
        out.append(
            _report("constants.k2/k3(n=1000) + pi^2/n <= 1/n^2", abs(k2b / k3b + math.pi**2 / 1000), 1e-6, 0.0, mode="le")
        )
        hempel = oracle_hempel()
        out.append(_report("constants.covering_derivative(2) vs Gamma(1/4)^4/(4pi^2)", constants.covering_derivative(2), hempel, 1e-10))
        out.append(_report("constants.hempel_constant() vs covering_derivative(2)", constants.hempel_constant(), constants.covering_derivative(2), 1e-10))
        out.append(
            _report(
                "constants.schwarz_limit_constant",
                constants.schwarz_limit_constant(),
                8 * _mp.gamma(_mp.mpf(5) / 4) / _mp.gamma(_mp.mpf(3) / 4),
                1e-13,
            )
        )
        out.append(
            _report(
                "constants.schwarz_factor_asymptotic_residual(1000)",
                constants.schwarz_factor_asymptotic_residual(1000),
                oracle_schwarz_residual(1000),
                1e-8,
            )
        )
        residuals = [abs(oracle_schwarz_residual(n)) for n in (100, 1000, 10000, 100000)]
        main_res = [abs(constants.schwarz_factor_asymptotic_residual(n)) for n in (100, 1000, 10000, 100000)]
        rises = sum(1 for x, y in zip(main_res, main_res[1:]) if y >= x)
        oracle_rises = sum(1 for x, y in zip(residuals, residuals[1:]) if y >= x)
        out.append(_report("constants.schwarz residual monotone over n=1e2..1e5 (rises)", rises, oracle_rises, 0.0, mode="abs"))

        out.append(
            _report("metrics.lambda_general(n=2,w=1/2)", metrics.lambda_general(2, 0.5).value, oracle_lambda_general_half(2), 1e-12)
        )
        out.append(_report("metrics.lambda_punctured(n=2,z=0)", metrics.lambda_punctured(2, 0).value, 2 / hempel, 1e-10))

        g2 = GAMMA_TABLE[2]
        s2 = math.sqrt(1 + g2 * g2)
        display = (1 + 2 * g2 * g2 + 2 * g2 * s2) / (g2 + s2)
        out.append(_report("bounds.landau_bound(n=2,a0=0) vs table gamma_2", bounds.landau_bound(2, 0), display, TABLE_RTOL))
        out.append(
            _report(
                "bounds.hempel_landau_bound(a0=1)",
                bounds.hempel_landau_bound(1).value,
                4 * hempel,
                1e-12,
            )
        )
        out.append(
            _report("cli.density(n=2,z=i)", metrics.lambda_punctured(2, 1j).value, 1 / GAMMA_TABLE[2], TABLE_RTOL)
        )
        out.append(
            _report(
                "cli.density(n=2,z=i) ratio to lower bound",
                metrics.lambda_punctured(2, 1j).value / metrics.lower_bound(2, 1j),
                1.0,
                1e-9,
            )
        )
        out.append(
            _report("cli.density(n=3,z=0)", metrics.lambda_punctured(3, 0).value, 2 / oracle_covering_derivative(3), 1e-10)
        )
        out.append(_report("cli.bound landau(n=2,a0=0)", bounds.landau_bound(2, 0), display, TABLE_RTOL))
    return out


def _per_n_entries(n: int) -> list[OracleReport]:
    out = []
    with _mp.workdps(30):
        out.append(_report(f"constants.gamma_n(n={n})", constants.gamma_n(n), oracle_gamma_n(n), 1e-10))
        out.append(
            _report(f"constants.covering_derivative(n={n})", constants.covering_derivative(n), oracle_covering_derivative(n), 1e-12)
        )
    if n <= PULLBACK_MAX_N:
        out.append(
            _report(
                f"constants.2/covering_derivative(n={n}) vs pullback limit",
                2.0 / constants.covering_derivative(n),
                pullback_limit_at_zero(n),
                1e-9,
            )
        )
    if n in GAMMA_TABLE:
        out.append(_report(f"table.gamma_n(n={n})", constants.gamma_n(n), GAMMA_TABLE[n], TABLE_RTOL))
        out.append(_report(f"table.r_n(n={n})", constants.r_n(n), R_TABLE[n], TABLE_RTOL))
        out.append(_report(f"table.schwarz_factor(n={n})", constants.schwarz_factor(n), SCHWARZ_TABLE[n], TABLE_RTOL))
    return out


def run_oracle_suite(n_values: Iterable[int]) -> list[OracleReport]:
    """Every oracle check, sorted by label.  An empty n list gives an empty report."""
    ns = sorted({specfun.check_index(n) for n in n_values})
    if not ns:
        return []
    reports = _global_entries()
    for n in ns:
        reports.extend(_per_n_entries(n))
    return sorted(reports, key=lambda r: r.quantity)
