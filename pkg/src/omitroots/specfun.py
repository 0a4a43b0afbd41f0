"""Complex log-Gamma and the Gauss hypergeometric function 2F1.

``hyp2f1`` covers real parameters and any complex argument.  The argument is
mapped into a disk of convergence by one of six transformations
(z, z/(z-1), 1-z, 1/z, 1/(1-z), 1-1/z).  The connection formulas at 1 and
infinity are implemented for both the generic and the logarithmic case
(c-a-b = 0, a = b), since the metric on the plane punctured at the roots of
unity only ever needs the logarithmic ones.  Near exp(+-i*pi/3), where none of
the transformations helps, or when a connection formula cancels badly, the
hypergeometric ODE is continued from the origin by Taylor re-expansion.

Branch cuts: 2F1 is cut along [1, inf).  Points exactly on a cut get the limit
from the upper half plane and are flagged in :class:`BranchedValue`.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import BranchPointError, ConvergenceError, DomainError, GammaPoleError

SERIES_RTOL = 1e-16
SERIES_MAX_TERMS = 100_000
DIRECT_RADIUS = 0.6
TRANSFORM_RADIUS = 0.8
MAX_AMPLIFICATION = 1e4
PHI2_LOCAL_RADIUS = 0.5

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
# B_2k / (2k (2k-1)), k = 1..8
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)
_STIRLING_MIN_RE = 15.0


def _is_nonpositive_int(x: float, tol: float = 1e-14) -> bool:
    return x <= 0.0 and abs(x - round(x)) <= tol


# -- Gamma family ------------------------------------------------------------


def log_gamma(z: complex) -> complex:
    """Principal branch of log Gamma(z).

    The branch is the analytic continuation of the real log Gamma on
    (0, inf) to the plane cut along (-inf, 0]; on the cut itself the limit
    from above is returned.  Raises :class:`GammaPoleError` at 0, -1, -2, ...
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"log_gamma needs a finite argument, got {z}")
    if z.imag == 0.0:
        if _is_nonpositive_int(z.real):
            raise GammaPoleError(f"Gamma has a pole at {z.real:g}")
        if z.real > 0.0:
            return complex(math.lgamma(z.real), 0.0)

    shift = max(0, math.ceil(_STIRLING_MIN_RE - z.real))
    acc = 0j
    for k in range(shift):
        acc += cmath.log(z + k)
    w = z + shift
    inv = 1.0 / w
    inv2 = inv * inv
    tail = 0j
    for coef in reversed(_STIRLING):
        tail = tail * inv2 + coef
    return (w - 0.5) * cmath.log(w) - w + _LOG_SQRT_2PI + tail * inv - acc


def gamma(z: complex) -> complex:
    return cmath.exp(log_gamma(z))


def reflection_check(z: complex) -> float:
    """Relative residual of Gamma(z) Gamma(1-z) = pi / sin(pi z)."""
    z = complex(z)
    lhs = cmath.exp(log_gamma(z) + log_gamma(1.0 - z))
    rhs = math.pi / cmath.sin(math.pi * z)
    return abs(lhs - rhs) / abs(rhs)


def _gamma_real(x: float) -> float:
    if _is_nonpositive_int(x):
        raise GammaPoleError(f"Gamma has a pole at {x:g}")
    return math.gamma(x)


def _rgamma(x: float) -> float:
    """1/Gamma(x), zero at the poles."""
    if _is_nonpositive_int(x):
        return 0.0
    return 1.0 / math.gamma(x)


def digamma(x: float) -> float:
    """psi(x) for real x."""
    if _is_nonpositive_int(x):
        raise GammaPoleError(f"digamma has a pole at {x:g}")
    if x < 0.5:
        return digamma(1.0 - x) - math.pi / math.tan(math.pi * x)
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    r = 1.0 / (x * x)
    series = r * (1 / 12 - r * (1 / 120 - r * (1 / 252 - r * (1 / 240 - r * (1 / 132 - r * (691 / 32760 - r / 12))))))
    return acc + math.log(x) - 0.5 / x - series


# -- parameter types ---------------------------------------------------------


@dataclass(frozen=True)
class HypergeometricParams:
    a: float
    b: float
    c: float

    def __post_init__(self):
        if _is_nonpositive_int(self.c):
            raise DomainError(f"2F1 is undefined for c = {self.c:g}")

    @property
    def excess(self) -> float:
        """c - a - b; decides the behaviour at z = 1."""
        return self.c - self.a - self.b


@dataclass(frozen=True)
class BranchedValue:
    value: complex
    on_cut: bool = False

    def __complex__(self) -> complex:
        return self.value


def check_index(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or n < 2:
        raise DomainError(f"puncture index must be an integer >= 2, got {n!r}")
    return int(n)


def root_params(n: int) -> tuple[float, float, float]:
    """(a, c1, c2) with a = (n-1)/(2n), c1 = (n-1)/n, c2 = 1."""
    n = check_index(n)
    return (n - 1) / (2 * n), (n - 1) / n, 1.0


# -- branch helpers ----------------------------------------------------------


def _log_neg(z: complex, side: int) -> complex:
    """log(-z); for z on (0, inf) the limit from Im z = side*0+."""
    if z.imag == 0.0 and z.real > 0.0:
        return complex(math.log(z.real), -math.pi * side)
    return cmath.log(-z)


def _log_1m(z: complex, side: int) -> complex:
    """log(1-z); for z on (1, inf) the limit from Im z = side*0+."""
    if z.imag == 0.0 and z.real > 1.0:
        return complex(math.log(z.real - 1.0), -math.pi * side)
    return cmath.log(1.0 - z)


# -- series ------------------------------------------------------------------


def _series(a: float, b: float, c: float, z: complex, compensated: bool = False) -> complex:
    term = 1 + 0j
    if not compensated:
        total = 1 + 0j
        small = 0
        for k in range(SERIES_MAX_TERMS):
            term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
            total += term
            if term == 0:
                return total
            if abs(term) < SERIES_RTOL * abs(total):
                small += 1
                if small == 3:
                    return total
            else:
                small = 0
        raise ConvergenceError(f"2F1 series did not converge at z={z}")

    # Neumaier summation, componentwise
    sr, cr, si, ci = 1.0, 0.0, 0.0, 0.0
    small = 0
    for k in range(SERIES_MAX_TERMS):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        x = term.real
        t = sr + x
        cr += (sr - t) + x if abs(sr) >= abs(x) else (x - t) + sr
        sr = t
        x = term.imag
        t = si + x
        ci += (si - t) + x if abs(si) >= abs(x) else (x - t) + si
        si = t
        if term == 0:
            break
        if abs(term) < SERIES_RTOL * abs(complex(sr, si)):
            small += 1
            if small == 3:
                break
        else:
            small = 0
    else:
        raise ConvergenceError(f"2F1 series did not converge at z={z}")
    return complex(sr + cr, si + ci)


def _log_series(t_ratio, h0: float, h_step, log_term: complex, u: complex) -> tuple[complex, float]:
    """sum_k t_k (h_k + log_term) u^k with t_0 = 1, t_{k+1} = t_k * t_ratio(k),
    h_{k+1} = h_k + h_step(k).  Returns the sum and its amplification
    sum |terms| / |sum|."""
    t = 1.0
    h = h0
    upow = 1 + 0j
    total = h + log_term
    mag = abs(total)
    small = 0
    for k in range(SERIES_MAX_TERMS):
        t *= t_ratio(k)
        h += h_step(k)
        upow *= u
        term = t * upow * (h + log_term)
        total += term
        mag += abs(term)
        if term == 0 or abs(term) < SERIES_RTOL * abs(total):
            small += 1
            if small == 3:
                return total, mag / max(abs(total), 1e-300)
        else:
            small = 0
    raise ConvergenceError(f"logarithmic 2F1 series did not converge at u={u}")


def _series_with_derivative(a: float, b: float, c: float, z: complex) -> tuple[complex, complex]:
    return _series(a, b, c, z), a * b / c * _series(a + 1, b + 1, c + 1, z)


# -- connection formulas -----------------------------------------------------


class _NeedsFallback(Exception):
    pass


def _near_int(x: float, tol: float = 1e-12) -> int | None:
    r = round(x)
    return int(r) if abs(x - r) <= tol else None


def _connect_one_minus(
    a: float, b: float, c: float, z: complex, side: int, comp: bool, u: complex | None = None
) -> tuple[complex, float]:
    """2F1 via local solutions at z = 1 (needs |1-z| < 1).

    ``u`` is 1 - z when the caller can form it without cancellation.
    """
    if u is None:
        u = 1.0 - z
        lg = _log_1m(z, side)
    elif u.imag == 0.0 and u.real < 0.0:
        lg = complex(math.log(-u.real), -math.pi * side)
    else:
        lg = cmath.log(u)
    s = c - a - b
    m = _near_int(s)
    if m is None:
        A = math.gamma(c) * _gamma_real(s) * _rgamma(c - a) * _rgamma(c - b)
        B = math.gamma(c) * _gamma_real(-s) * _rgamma(a) * _rgamma(b)
        t1 = A * _series(a, b, 1.0 - s, u, comp)
        t2 = B * cmath.exp(s * lg) * _series(c - a, c - b, 1.0 + s, u, comp)
        total = t1 + t2
        return total, (abs(t1) + abs(t2)) / max(abs(total), 1e-300)
    if m != 0:
        raise _NeedsFallback
    # c = a + b:  sum_k (a)_k (b)_k / k!^2 [2 psi(k+1) - psi(a+k) - psi(b+k) - log(1-z)] (1-z)^k
    coef = math.gamma(a + b) * _rgamma(a) * _rgamma(b)
    h0 = 2.0 * digamma(1.0) - digamma(a) - digamma(b)
    total, amp = _log_series(
        lambda k: (a + k) * (b + k) / ((k + 1) ** 2),
        h0,
        lambda k: 2.0 / (k + 1) - 1.0 / (a + k) - 1.0 / (b + k),
        -lg,
        u,
    )
    return coef * total, amp


def _connect_inverse(
    a: float, b: float, c: float, z: complex, side: int, comp: bool, v: complex | None = None
) -> tuple[complex, float]:
    """2F1 via local solutions at infinity (needs |z| > 1); ``v`` as 1/z if known exactly."""
    if v is None:
        v = 1.0 / z
    ln = _log_neg(z, side)
    d = b - a
    m = _near_int(d)
    if m is None:
        A = math.gamma(c) * _gamma_real(d) * _rgamma(b) * _rgamma(c - a)
        B = math.gamma(c) * _gamma_real(-d) * _rgamma(a) * _rgamma(c - b)
        t1 = A * cmath.exp(-a * ln) * _series(a, 1.0 - c + a, 1.0 - d, v, comp)
        t2 = B * cmath.exp(-b * ln) * _series(b, 1.0 - c + b, 1.0 + d, v, comp)
        total = t1 + t2
        return total, (abs(t1) + abs(t2)) / max(abs(total), 1e-300)
    if m != 0 or _near_int(c - a) is not None:
        raise _NeedsFallback
    # a = b:  (-z)^-a sum_k (a)_k (1-c+a)_k / k!^2 z^-k [log(-z) + 2 psi(k+1) - psi(a+k) - psi(c-a-k)]
    coef = math.gamma(c) * _rgamma(a) * _rgamma(c - a)
    h0 = 2.0 * digamma(1.0) - digamma(a) - digamma(c - a)
    total, amp = _log_series(
        lambda k: (a + k) * (1.0 - c + a + k) / ((k + 1) ** 2),
        h0,
        lambda k: 2.0 / (k + 1) - 1.0 / (a + k) + 1.0 / (c - a - k - 1),
        ln,
        v,
    )
    return coef * cmath.exp(-a * ln) * total, amp


# -- ODE continuation (fallback) ---------------------------------------------


def _segment_distance(p: complex, s: complex, e: complex) -> float:
    d = e - s
    L2 = abs(d) ** 2
    if L2 == 0.0:
        return abs(p - s)
    t = min(1.0, max(0.0, ((p - s) * d.conjugate()).real / L2))
    return abs(p - (s + t * d))


def _taylor_step(a: float, b: float, c: float, p: complex, f: complex, df: complex, h: complex) -> tuple[complex, complex]:
    """Advance (F, F') from p to p + h by re-expanding the ODE solution at p."""
    P0 = p * (1.0 - p)
    P1 = 1.0 - 2.0 * p
    Q0 = c - (a + b + 1.0) * p
    Q1 = -(a + b + 1.0)
    R = -a * b
    c0, c1 = f, df
    val = c0 + c1 * h
    der = c1
    hk = h  # h**(k+1)
    small = 0
    for k in range(5000):
        c2 = -((P1 * k * (k + 1) + Q0 * (k + 1)) * c1 + (-k * (k - 1) + Q1 * k + R) * c0) / (P0 * (k + 2) * (k + 1))
        dterm = (k + 2) * c2 * hk
        hk = hk * h
        vterm = c2 * hk
        val += vterm
        der += dterm
        if abs(vterm) <= 1e-17 * abs(val) and abs(dterm) <= 1e-17 * abs(der):
            small += 1
            if small == 3:
                return val, der
        else:
            small = 0
        c0, c1 = c1, c2
    raise ConvergenceError(f"Taylor re-expansion did not converge at {p}")


def _ode_continue(a: float, b: float, c: float, z: complex, side: int) -> complex:
    """Continue 2F1 from |z| = 1/2 along the ray to z (detouring round z = 1)."""
    r = abs(z)
    start = 0.5 * z / r
    f, df = _series_with_derivative(a, b, c, start)
    sgn = 1 if z.imag > 0 else -1 if z.imag < 0 else side
    if z.imag == 0.0 and z.real > 0.5:
        start = complex(start.real, 0.0)
    path = [z]
    if r > 1.0 and _segment_distance(1.0 + 0j, start, z) < 0.3:
        path = [complex(1.0, 0.5 * sgn), z]
    p = start
    for target in path:
        while p != target:
            radius = min(abs(p), abs(1.0 - p))
            if radius < 1e-300:
                raise ConvergenceError("continuation path hit a singular point")
            d = target - p
            hmax = 0.5 * radius
            if abs(d) <= hmax:
                h = d
                nxt = target
            else:
                h = d * (hmax / abs(d))
                nxt = p + h
            f, df = _taylor_step(a, b, c, p, f, df, h)
            p = nxt
    return f


# -- dispatcher --------------------------------------------------------------


def _gauss_at_one(a: float, b: float, c: float) -> complex:
    s = c - a - b
    if s <= 0.0:
        raise BranchPointError(f"2F1 diverges at z = 1 when c - a - b = {s:g} <= 0")
    return complex(math.gamma(c) * _gamma_real(s) * _rgamma(c - a) * _rgamma(c - b))


def _f21(a: float, b: float, c: float, z: complex, side: int, comp: bool) -> complex:
    if z == 0:
        return 1 + 0j
    if _is_nonpositive_int(a) or _is_nonpositive_int(b):
        return _series(a, b, c, z, comp)
    if z == 1:
        return _gauss_at_one(a, b, c)
    az = abs(z)
    if az <= DIRECT_RADIUS:
        return _series(a, b, c, z, comp)
    lg = _log_1m(z, side)
    w = z / (z - 1.0)
    if abs(w) <= DIRECT_RADIUS:
        return cmath.exp(-a * lg) * _series(a, c - b, c, w, comp)

    az1 = abs(1.0 - z)
    zones = sorted(
        [
            (az, "direct"),
            (abs(w), "pfaff"),
            (az1, "one_minus"),
            (1.0 / az, "inverse"),
            (1.0 / az1, "pfaff_one_minus"),
            (abs(1.0 - 1.0 / z), "pfaff_inverse"),
        ],
        key=lambda t: t[0],
    )
    rho, zone = zones[0]
    if rho <= TRANSFORM_RADIUS:
        try:
            if zone == "direct":
                return _series(a, b, c, z, comp)
            if zone == "pfaff":
                return cmath.exp(-a * lg) * _series(a, c - b, c, w, comp)
            if zone == "one_minus":
                value, amp = _connect_one_minus(a, b, c, z, side, comp)
            elif zone == "inverse":
                value, amp = _connect_inverse(a, b, c, z, side, comp)
            elif zone == "pfaff_one_minus":
                # 1 - w = -1/(z-1); forming it from w would cancel for large |z|
                inner, amp = _connect_one_minus(a, c - b, c, w, -side, comp, u=-1.0 / (z - 1.0))
                value = cmath.exp(-a * lg) * inner
            else:
                inner, amp = _connect_inverse(a, c - b, c, w, -side, comp, v=(z - 1.0) / z)
                value = cmath.exp(-a * lg) * inner
            if amp <= MAX_AMPLIFICATION:
                return value
        except _NeedsFallback:
            pass
    return _ode_continue(a, b, c, z, side)


def _auto_compensated(p: HypergeometricParams) -> bool:
    return 0.0 < abs(p.excess) < 0.02


def hyp2f1(p: HypergeometricParams, z: complex, *, compensated: bool | None = None) -> BranchedValue:
    """Gauss hypergeometric function continued to C minus [1, inf).

    On the cut the limit from the upper half plane is returned with
    ``on_cut=True``.  At z = 1 Gauss's closed form is used when c - a - b > 0
    and :class:`BranchPointError` is raised otherwise.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"2F1 needs a finite argument, got {z}")
    if compensated is None:
        compensated = _auto_compensated(p)
    on_cut = z.imag == 0.0 and z.real > 1.0
    if on_cut:
        z = complex(z.real, 0.0)
    return BranchedValue(_f21(p.a, p.b, p.c, z, +1, compensated), on_cut)


def phi1(n: int, z: complex) -> BranchedValue:
    """2F1((n-1)/2n, (n-1)/2n, (n-1)/n; z), cut along [1, inf)."""
    a, c1, _ = root_params(n)
    return hyp2f1(HypergeometricParams(a, a, c1), z, compensated=n > 50)


def phi2(n: int, z: complex) -> BranchedValue:
    """2F1((n-1)/2n, (n-1)/2n, 1; 1-z), cut along (-inf, 0] in z.

    On the cut the limit from Im z > 0 is returned, which is the limit from
    below for the 2F1 argument 1 - z.
    """
    a, _, c2 = root_params(n)
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"phi2 needs a finite argument, got {z}")
    on_cut = z.imag == 0.0 and z.real <= 0.0
    if z == 0:
        return BranchedValue(_gauss_at_one(a, a, c2), True)
    u = complex(1.0 - z.real, -z.imag) if not on_cut else complex(1.0 - z.real, 0.0)
    if abs(z) <= PHI2_LOCAL_RADIUS:
        # expand about the 2F1 argument 1 with z itself as the local variable;
        # 1 - z rounds to 1 for tiny z and would drop the z^(1/n) term.
        # The two local terms cancel by at most ~ n / |log z|, and no other
        # strategy does better this close to the singular point.
        value, _ = _connect_one_minus(a, a, c2, u, -1, n > 50, u=z if not on_cut else complex(z.real, 0.0))
        return BranchedValue(value, on_cut)
    value = _f21(a, a, c2, u, -1, n > 50)
    return BranchedValue(value, on_cut)
