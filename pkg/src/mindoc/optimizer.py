"""
Minimum-DOC cruise: optimality polynomial, costate dynamics and shooting.

At every instant the optimal airspeed v is a positive real root of

    a5 v^5 + a4 v^4 - a2' v^2 - a1' v - a0' = 0

whose coefficients depend on the weight W and on the shifted weight costate
Jbar = (1 - C_E) kappa_f - J_W.  J_W obeys its own ODE and must vanish at the
end of the flight, which turns the cruise into a two-point boundary-value
problem solved here by single shooting on J_W(0).
"""

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from mindoc import roots
from mindoc.aero import drag, min_drag_speed
from mindoc.costmodel import ConversionFactors, derive_tradeoffs
from mindoc.errors import (
    DegenerateConfigurationError,
    DomainError,
    InfeasibleRootError,
    ResourceExhaustedError,
    ShootingError,
)

TSFC_MODES = ("mass", "weight")
TIME_CONVENTIONS = ("doc", "printed")
SECONDS_PER_HOUR = 3600.0


@dataclass(frozen=True)
class Powertrain:
    """Hybrid powertrain.

    Parameters
    ----------
    beta : float
        Hybridization factor, share of thrust produced electrically.
    eta : float
        Total electrical system efficiency.
    supply_voltage : float
        Battery output voltage U [V].
    tsfc_mass : float
        Thrust specific fuel consumption as tabulated [kg/(N s)].
    tsfc_mode : {"mass", "weight"}
        ``"mass"`` treats ``tsfc_mass`` as a mass flow per newton of thrust,
        so the weight flow is g * tsfc_mass * T.  ``"weight"`` uses the number
        directly as a weight flow per newton [1/s].
    """

    beta: float
    eta: float
    supply_voltage: float
    tsfc_mass: float = 0.0
    tsfc_mode: str = "mass"

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise DomainError(f"hybridization factor beta must lie in [0, 1], got {self.beta!r}")
        if not 0.0 < self.eta <= 1.0:
            raise DomainError(f"efficiency eta must lie in (0, 1], got {self.eta!r}")
        if not self.supply_voltage > 0.0:
            raise DomainError(f"supply_voltage must be positive, got {self.supply_voltage!r}")
        if not self.tsfc_mass >= 0.0:
            raise DomainError(f"tsfc must be >= 0, got {self.tsfc_mass!r}")
        if self.tsfc_mode not in TSFC_MODES:
            raise DomainError(f"tsfc_mode must be one of {TSFC_MODES}, got {self.tsfc_mode!r}")

    def tsfc_weight(self, gravity):
        """Weight flow of fuel per newton of jet thrust [1/s]."""
        if self.tsfc_mode == "mass":
            return gravity * self.tsfc_mass
        return self.tsfc_mass


@dataclass(frozen=True)
class CruiseParams:
    """Everything the cruise dynamics need besides the state.

    ``time_convention`` selects the weight of the time cost in the optimality
    polynomial: ``"doc"`` uses C_t / C_mu = C_I / 2, which makes the polynomial
    the exact stationarity condition of the reported DOC; ``"printed"`` uses
    C_I as it appears in the published polynomial.
    """

    airframe: object
    powertrain: Powertrain
    atmosphere: object
    costs: object
    conversion: ConversionFactors = None
    time_convention: str = "doc"

    def __post_init__(self):
        if self.conversion is None:
            object.__setattr__(self, "conversion", ConversionFactors.from_costs(self.costs))
        if self.time_convention not in TIME_CONVENTIONS:
            raise DomainError(
                f"time_convention must be one of {TIME_CONVENTIONS}, got {self.time_convention!r}"
            )

    @cached_property
    def tradeoffs(self):
        return derive_tradeoffs(self.costs)

    @property
    def time_coefficient(self):
        c_i = self.tradeoffs.c_i_tradeoff
        return 0.5 * c_i if self.time_convention == "doc" else c_i

    @property
    def gravity(self):
        return self.costs.gravity

    @property
    def tsfc_weight(self):
        return self.powertrain.tsfc_weight(self.costs.gravity)

    @property
    def costate_scale(self):
        """Natural magnitude of the weight costate, (1 - C_E) kappa_f."""
        return (1.0 - self.tradeoffs.c_e_tradeoff) * self.conversion.kappa_f

    def replace(self, **changes):
        fields = {
            "airframe": self.airframe,
            "powertrain": self.powertrain,
            "atmosphere": self.atmosphere,
            "costs": self.costs,
            "conversion": self.conversion,
            "time_convention": self.time_convention,
        }
        fields.update(changes)
        return CruiseParams(**fields)


@dataclass(frozen=True)
class CruiseState:
    t: float
    r: float
    weight: float
    charge: float
    costate: float = 0.0


@dataclass(frozen=True)
class QuinticCoefficients:
    a5: float
    a4: float
    a3: float
    a2: float
    a1: float
    a0: float

    def as_list(self):
        return [self.a5, self.a4, self.a3, self.a2, self.a1, self.a0]

    def __call__(self, v):
        return roots.horner(self.as_list(), v)[0]

    def normalized_residual(self, v):
        return abs(self(v)) / (max(abs(a) for a in self.as_list()) * max(1.0, v) ** 5)


def jbar(costate, tradeoffs, kappa_f):
    """Shifted weight costate (1 - C_E) kappa_f - J_W."""
    return (1.0 - tradeoffs.c_e_tradeoff) * kappa_f - costate


class _Kernel:
    """Precomputed constants for the hot integration loop."""

    __slots__ = (
        "k5", "k4", "k2", "k1", "k0", "half_cd0_rs", "two_cd2_over_rs",
        "rs", "cd2", "beta", "eta", "volt", "tsfc", "jbar0", "c_t", "c_i", "c_f",
        "kappa_i", "kappa_f", "one_plus_ce", "last_speed",
    )

    def __init__(self, params):
        af = params.airframe
        pt = params.powertrain
        rho = params.atmosphere.density
        tr = params.tradeoffs
        self.rs = rho * af.wing_area
        self.cd2 = af.c_d2
        self.beta = pt.beta
        self.eta = pt.eta
        self.volt = pt.supply_voltage
        self.tsfc = params.tsfc_weight
        self.kappa_i = params.conversion.kappa_i
        self.kappa_f = params.conversion.kappa_f
        self.one_plus_ce = 1.0 + tr.c_e_tradeoff
        self.jbar0 = (1.0 - tr.c_e_tradeoff) * self.kappa_f
        rs2 = self.rs * self.rs
        # a5; a4 / jbar; a2; a1 / W^2; a0 / (jbar W^2)
        self.k5 = self.one_plus_ce * self.kappa_i * self.beta * rs2 * af.c_d0 / self.eta
        self.k4 = (1.0 - self.beta) * self.tsfc * rs2 * af.c_d0 / 2.0
        self.k2 = -params.time_coefficient * self.rs
        self.k1 = -4.0 * self.one_plus_ce * self.kappa_i * self.beta * af.c_d2 / self.eta
        self.k0 = -6.0 * (1.0 - self.beta) * self.tsfc * af.c_d2
        self.half_cd0_rs = 0.5 * af.c_d0 * self.rs
        self.two_cd2_over_rs = 2.0 * af.c_d2 / self.rs
        self.c_t = params.costs.time_cost
        self.c_i = params.costs.electricity_cost
        self.c_f = params.costs.fuel_cost
        self.last_speed = None

    def coefficients(self, weight, jb):
        w2 = weight * weight
        return [self.k5, self.k4 * jb, 0.0, self.k2, self.k1 * w2, self.k0 * jb * w2]

    def drag(self, weight, v):
        v2 = v * v
        return self.half_cd0_rs * v2 + self.two_cd2_over_rs * weight * weight / v2

    def doc_rate(self, weight, v):
        d = self.drag(weight, v)
        return (
            self.c_t
            + self.c_i * self.kappa_i * self.beta * d * v / self.eta
            + self.c_f * self.kappa_f * self.tsfc * (1.0 - self.beta) * d
        )


def quintic_coefficients(weight, jbar_value, params):
    """Coefficients (a5 ... a0) of the optimality polynomial at one instant."""
    if not weight > 0.0:
        raise DomainError(f"weight must be positive, got {weight!r}")
    c = QuinticCoefficients(*_Kernel(params).coefficients(weight, jbar_value))
    if all(a == 0.0 for a in c.as_list()):
        raise DegenerateConfigurationError("all optimality-polynomial coefficients vanish")
    return c


def _default_scale(coeffs):
    nz = [(len(coeffs) - 1 - k, abs(a)) for k, a in enumerate(coeffs) if a != 0.0]
    (hi_deg, hi), (lo_deg, lo) = nz[0], nz[-1]
    if hi_deg == lo_deg:
        return 1.0
    return (lo / hi) ** (1.0 / (hi_deg - lo_deg))


def positive_real_roots(coeffs, scale=None):
    """All positive real roots, in ascending order.

    The polynomial is rescaled by v = scale * u before the companion-matrix
    eigenvalue solve, because in SI units the coefficients span many orders
    of magnitude.
    """
    c = coeffs.as_list() if isinstance(coeffs, QuinticCoefficients) else [float(a) for a in coeffs]
    if all(a == 0.0 for a in c):
        raise DegenerateConfigurationError("all polynomial coefficients vanish")
    if scale is None:
        scale = _default_scale(c)
    deg = len(c) - 1
    scaled = [a * scale ** (deg - k) for k, a in enumerate(c)]
    norm = max(abs(a) for a in scaled)
    scaled = [a / norm for a in scaled]
    found = [u * scale for u in roots.real_roots(scaled) if u > 0.0]
    # final polish in the original variable
    found = sorted(roots.newton_polish(c, v, 1) for v in found)
    unique = []
    for v in found:
        if not unique or v - unique[-1] > 1e-9 * max(1.0, v):
            unique.append(v)
    return unique


def positive_real_root(coeffs, scale=None, selector=None):
    """The positive real root of the optimality polynomial.

    When more than one positive root exists, ``selector`` (a cost-per-distance
    function of airspeed) picks the cheapest; without a selector the smallest
    root is returned.
    """
    found = positive_real_roots(coeffs, scale)
    if not found:
        raise InfeasibleRootError(f"no positive real root for coefficients {coeffs!r}")
    if len(found) == 1 or selector is None:
        return found[0]
    return min(found, key=selector)


def optimal_airspeed(weight, costate, params):
    """Optimal airspeed at (W, J_W) and whether the root choice was ambiguous."""
    k = _Kernel(params)
    return _solve_speed(k, weight, costate, params)


def _solve_speed(k, weight, costate, params):
    jb = k.jbar0 - costate
    c = k.coefficients(weight, jb)
    if roots.descartes_positive_bound(c) == 1 and c[0] >= 0.0 and c[-1] <= 0.0:
        # exactly one positive root: warm-started safeguarded Newton
        while c[-1] == 0.0:
            c = c[:-1]
        guess = k.last_speed or min_drag_speed(params.airframe, params.atmosphere.density, weight)
        v = roots.unique_positive_root(c, guess)
        k.last_speed = v
        return v, False
    scale = min_drag_speed(params.airframe, params.atmosphere.density, weight)
    found = positive_real_roots(c, scale)
    if not found:
        raise InfeasibleRootError(
            f"no positive real root at W={weight:.6g} N, J_W={costate:.6g} kWh/N"
        )
    if len(found) == 1:
        return found[0], False
    return min(found, key=lambda v: k.doc_rate(weight, v) / v), True


def electric_quartic_root(weight, params):
    """Closed-form optimal airspeed of an all-electric aircraft.

    With beta = 1 the polynomial loses its v^4 and constant terms; dividing by
    v leaves A v^4 - B v - C = 0, solved here by Ferrari's method.
    """
    if params.powertrain.beta != 1.0:
        raise DomainError(f"electric_quartic_root needs beta = 1, got {params.powertrain.beta!r}")
    k = _Kernel(params)
    a, b, c = k.k5, -k.k2, -k.k1 * weight * weight
    if a == 0.0:
        raise InfeasibleRootError("electricity is free; cost decreases without bound in airspeed")
    s = min_drag_speed(params.airframe, params.atmosphere.density, weight)
    # v = s u keeps the quartic well scaled
    qa, qd, qe = a * s**4, -b * s, -c
    norm = max(abs(qa), abs(qd), abs(qe))
    found = [u for u in roots.solve_quartic(qa / norm, 0.0, 0.0, qd / norm, qe / norm) if u > 0.0]
    if not found:
        raise InfeasibleRootError("electric quartic has no positive root")
    return roots.newton_polish([a, 0.0, 0.0, -b, -c], max(found) * s, 1)


def costate_rate(state, airspeed, params):
    """dJ_W/dt [kWh/N per s]."""
    if not airspeed > 0.0:
        raise DomainError(f"airspeed must be positive, got {airspeed!r}")
    k = _Kernel(params)
    return _costate_rate(k, state.weight, k.jbar0 - state.costate, airspeed)


def _costate_rate(k, weight, jb, v):
    w = 4.0 * k.cd2 * weight / (k.rs * v)
    return -k.one_plus_ce * k.kappa_i * k.beta * w / k.eta - jb * (1.0 - k.beta) * k.tsfc * w / v


def state_rates(state, airspeed, params):
    """(dr/dt, dW/dt, dQ/dt) in steady level flight."""
    if not airspeed > 0.0:
        raise DomainError(f"airspeed must be positive, got {airspeed!r}")
    pt = params.powertrain
    d = drag(params.airframe, params.atmosphere.density, state.weight, airspeed)
    current = pt.beta * d * airspeed / (pt.eta * pt.supply_voltage)
    fuel_flow = params.tsfc_weight * (1.0 - pt.beta) * d
    return airspeed, -fuel_flow, -current


@dataclass(frozen=True)
class ProfileSample:
    state: CruiseState
    airspeed: float
    doc_rate: float


@dataclass(frozen=True)
class ProfileSummary:
    duration: float
    fuel_mass: float
    charge_spent: float
    total_doc: float
    hourly_doc: float
    final_position: float

    def as_dict(self):
        return {
            "duration_s": self.duration,
            "fuel_kg": self.fuel_mass,
            "charge_ah": self.charge_spent,
            "total_doc": self.total_doc,
            "hourly_doc": self.hourly_doc,
            "final_position_m": self.final_position,
        }


@dataclass
class CruiseProfile:
    """Sampled optimal cruise.

    ``summary.total_doc`` is the cost bookkeeping
    C_t t_f + C_i kappa_i U dQ + C_f kappa_f dW, which equals the integral of
    the DOC rate along the integrated trajectory.
    """

    samples: list
    summary: ProfileSummary
    params: CruiseParams
    step: float
    flags: set = field(default_factory=set)
    iterations: int = 1

    def _column(self, getter):
        return np.array([getter(s) for s in self.samples])

    @property
    def t(self):
        return self._column(lambda s: s.state.t)

    @property
    def r(self):
        return self._column(lambda s: s.state.r)

    @property
    def weight(self):
        return self._column(lambda s: s.state.weight)

    @property
    def charge(self):
        return self._column(lambda s: s.state.charge)

    @property
    def costate(self):
        return self._column(lambda s: s.state.costate)

    @property
    def airspeed(self):
        return self._column(lambda s: s.airspeed)

    @property
    def doc_rate(self):
        return self._column(lambda s: s.doc_rate)

    @property
    def initial_costate(self):
        return self.samples[0].state.costate

    @property
    def terminal_costate(self):
        return self.samples[-1].state.costate


def _summarize(samples, params):
    first, last = samples[0].state, samples[-1].state
    costs = params.costs
    duration = last.t - first.t
    d_weight = first.weight - last.weight
    d_charge = first.charge - last.charge
    total = (
        costs.time_cost * duration
        + costs.electricity_cost * params.conversion.kappa_i * params.powertrain.supply_voltage * d_charge
        + costs.fuel_cost * params.conversion.kappa_f * d_weight
    )
    return ProfileSummary(
        duration=duration,
        fuel_mass=d_weight / costs.gravity,
        charge_spent=d_charge / SECONDS_PER_HOUR,
        total_doc=total,
        hourly_doc=total / duration * SECONDS_PER_HOUR if duration > 0.0 else 0.0,
        final_position=last.r,
    )


def integrate_cruise(initial, target_range, params, step=1.0, check_resources=True):
    """Fixed-step RK4 sweep of the cruise dynamics and weight costate.

    The optimal airspeed is re-solved at every stage.  The last step is
    shortened so the profile ends exactly at ``target_range``.
    """
    if not step > 0.0:
        raise DomainError(f"step must be positive, got {step!r}")
    if target_range < initial.r:
        raise DomainError("target_range lies behind the initial position")
    if not (initial.weight > 0.0 and initial.charge >= 0.0):
        raise DomainError("initial weight must be positive and charge non-negative")
    k = _Kernel(params)
    flags = set()
    empty = params.airframe.empty_weight

    def rhs(weight, costate):
        v, ambiguous = _solve_speed(k, weight, costate, params)
        if ambiguous:
            flags.add("multiple_roots")
        jb = k.jbar0 - costate
        if jb < 0.0:
            flags.add("negative_jbar")
        d = k.drag(weight, v)
        return (
            v,
            -k.tsfc * (1.0 - k.beta) * d,
            -k.beta * d * v / (k.eta * k.volt),
            _costate_rate(k, weight, jb, v),
        )

    def sample(t, r, w, q, j):
        v, _ = _solve_speed(k, w, j, params)
        return ProfileSample(CruiseState(t, r, w, q, j), v, k.doc_rate(w, v))

    t, r, w, q, j = initial.t, initial.r, initial.weight, initial.charge, initial.costate
    samples = [sample(t, r, w, q, j)]
    if target_range == initial.r:
        return CruiseProfile(samples, _summarize(samples, params), params, step, flags)

    def rk4(h):
        r1, w1, q1, j1 = rhs(w, j)
        r2, w2, q2, j2 = rhs(w + 0.5 * h * w1, j + 0.5 * h * j1)
        r3, w3, q3, j3 = rhs(w + 0.5 * h * w2, j + 0.5 * h * j2)
        r4, w4, q4, j4 = rhs(w + h * w3, j + h * j3)
        return (
            r + h * (r1 + 2.0 * r2 + 2.0 * r3 + r4) / 6.0,
            w + h * (w1 + 2.0 * w2 + 2.0 * w3 + w4) / 6.0,
            q + h * (q1 + 2.0 * q2 + 2.0 * q3 + q4) / 6.0,
            j + h * (j1 + 2.0 * j2 + 2.0 * j3 + j4) / 6.0,
        )

    while True:
        h = step
        rn, wn, qn, jn = rk4(h)
        if rn >= target_range:
            # shorten the last step (secant on h) so it ends on target_range
            # without dropping below fourth order
            for _ in range(8):
                miss = target_range - rn
                if abs(miss) <= 1e-12 * max(1.0, target_range):
                    break
                h *= (target_range - r) / (rn - r)
                rn, wn, qn, jn = rk4(h)
            t, r, w, q, j = t + h, target_range, wn, qn, jn
        else:
            t, r, w, q, j = t + h, rn, wn, qn, jn
        if check_resources and (w < empty or q < 0.0):
            what = "fuel" if w < empty else "charge"
            raise ResourceExhaustedError(
                f"{what} exhausted at r={r:.1f} m before reaching {target_range:.1f} m",
                state=CruiseState(t, r, w, q, j),
            )
        samples.append(sample(t, r, w, q, j))
        if r >= target_range:
            break
    return CruiseProfile(samples, _summarize(samples, params), params, step, flags)


@dataclass(frozen=True)
class Boundary:
    """Two-point boundary data of a cruise leg."""

    r0: float
    rf: float
    weight: float
    charge: float
    t0: float = 0.0


def _check_resources(profile):
    empty = profile.params.airframe.empty_weight
    for s in profile.samples:
        if s.state.weight < empty or s.state.charge < 0.0:
            what = "fuel" if s.state.weight < empty else "charge"
            raise ResourceExhaustedError(
                f"{what} exhausted at r={s.state.r:.1f} m", state=s.state
            )


def _shift_costate(profile, offset):
    samples = [
        ProfileSample(
            CruiseState(s.state.t, s.state.r, s.state.weight, s.state.charge, s.state.costate + offset),
            s.airspeed,
            s.doc_rate,
        )
        for s in profile.samples
    ]
    return CruiseProfile(samples, profile.summary, profile.params, profile.step, profile.flags, 1)


def costate_scan_grid(params, n=32):
    """Symmetric geometric grid of trial initial costates, ascending."""
    m = params.costate_scale
    if m <= 0.0:
        m = params.conversion.kappa_f
    half = n // 2
    mags = [m * 0.5**i for i in range(half)]
    return sorted([-x for x in mags] + mags)


def shoot(boundary, params, tol=None, step=1.0, max_iter=60):
    """Find J_W(0) such that J_W(t_f) = 0 and return the converged profile.

    The terminal costate is bracketed on a symmetric geometric grid and then
    refined by Illinois-modified regula falsi (secant steps that keep the
    bracket).
    """
    if boundary.rf < boundary.r0:
        raise DomainError("rf must not lie behind r0")
    if tol is None:
        scale = params.costate_scale
        tol = 1e-9 * (scale if scale > 0.0 else params.conversion.kappa_f)
    start = lambda j0: CruiseState(boundary.t0, boundary.r0, boundary.weight, boundary.charge, j0)

    if boundary.rf == boundary.r0:
        return integrate_cruise(start(0.0), boundary.rf, params, step)

    if params.powertrain.beta == 1.0:
        # the costate never feeds back into the airspeed: one sweep, then shift
        profile = integrate_cruise(start(0.0), boundary.rf, params, step)
        return _shift_costate(profile, -profile.terminal_costate)

    evaluations = 0
    cache = {}

    def terminal(j0):
        nonlocal evaluations
        if j0 not in cache:
            evaluations += 1
            try:
                cache[j0] = integrate_cruise(start(j0), boundary.rf, params, step, check_resources=False)
            except InfeasibleRootError:
                cache[j0] = None
        p = cache[j0]
        return None if p is None else p.terminal_costate

    grid = costate_scan_grid(params)
    bracket = _find_bracket(grid, terminal)
    if bracket is None:
        raise ShootingError(
            f"no sign change of J_W(t_f) for J_W(0) in [{grid[0]:.6g}, {grid[-1]:.6g}]",
            scanned=[(x, terminal(x)) for x in grid],
        )

    a, fa, b, fb = bracket
    for j0, f in ((a, fa), (b, fb)):
        if abs(f) <= tol:
            return _finish(cache[j0], evaluations)
    for _ in range(max_iter):
        c = b - fb * (b - a) / (fb - fa)
        fc = terminal(c)
        if fc is None:
            c = 0.5 * (a + b)
            fc = terminal(c)
            if fc is None:
                raise ShootingError(f"airspeed infeasible inside bracket at J_W(0)={c:.6g}")
        if abs(fc) <= tol:
            return _finish(cache[c], evaluations)
        if fc * fb < 0.0:
            a, fa = b, fb
        else:
            fa *= 0.5
        b, fb = c, fc
    raise ShootingError(f"regula falsi did not reach |J_W(t_f)| <= {tol:.3g} in {max_iter} iterations")


def _find_bracket(grid, terminal):
    """Adjacent grid points with opposite terminal costates.

    The two ends are tried first (the shooting map is close to linear); then
    the grid is walked outward from its center, where short legs put the root.
    """
    lo, hi = terminal(grid[0]), terminal(grid[-1])
    if lo is not None and hi is not None and lo * hi <= 0.0:
        return grid[0], lo, grid[-1], hi
    mid = len(grid) // 2
    values = {}
    for i in range(mid):
        for j in (mid - 1 - i, mid + i):
            values[j] = terminal(grid[j])
        # pairs that became adjacent-and-known in this round
        for a in (mid - 1 - i, mid + i - 1):
            b = a + 1
            fa, fb = values.get(a), values.get(b)
            if fa is not None and fb is not None and fa * fb <= 0.0:
                return grid[a], fa, grid[b], fb
    valid = [(grid[j], values[j]) for j in sorted(values) if values[j] is not None]
    for (xa, fa), (xb, fb) in zip(valid, valid[1:]):
        if fa * fb <= 0.0:
            return xa, fa, xb, fb
    return None


def _finish(profile, evaluations):
    _check_resources(profile)
    profile.iterations = evaluations
    return profile


def doc_total(profile, costs=None):
    """Trapezoidal integral of the DOC rate over the profile.

    With ``costs`` the same trajectory is re-priced under other cost
    coefficients.
    """
    if len(profile.samples) < 2:
        return 0.0
    t = profile.t
    if costs is None:
        rate = profile.doc_rate
    else:
        p = profile.params.replace(costs=costs, conversion=ConversionFactors.from_costs(costs))
        k = _Kernel(p)
        rate = np.array([k.doc_rate(s.state.weight, s.airspeed) for s in profile.samples])
    return float(np.sum(0.5 * (rate[1:] + rate[:-1]) * np.diff(t)))
