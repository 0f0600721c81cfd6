"""
Aerodynamic primitives for steady, level cruise.

Drag follows the parabolic polar CD = CD0 + CD2 * CL^2 with CL = 2W/(rho S v^2),
so that

    D = 0.5 * CD0 * rho * S * v^2 + 2 * CD2 * W^2 / (rho * S * v^2)

All quantities are SI (m, s, N, kg/m^3).
"""

import math
from dataclasses import dataclass

from mindoc.errors import DomainError


def _require_positive(**values):
    for name, value in values.items():
        if not (math.isfinite(value) and value > 0.0):
            raise DomainError(f"{name} must be finite and positive, got {value!r}")


@dataclass(frozen=True)
class Airframe:
    """Geometric and aerodynamic constants of a fixed-wing aircraft.

    Parameters
    ----------
    wing_area : float
        Reference wing area S [m^2].
    c_d0 : float
        Zero-lift drag coefficient.
    c_d2 : float
        Induced drag coefficient (drag-due-to-lift factor).
    empty_weight : float
        Operating empty weight [N].
    max_takeoff_weight : float
        Maximum take-off weight [N].
    """

    wing_area: float
    c_d0: float
    c_d2: float
    empty_weight: float
    max_takeoff_weight: float

    def __post_init__(self):
        _require_positive(wing_area=self.wing_area, c_d0=self.c_d0, c_d2=self.c_d2)
        if not 0.0 < self.empty_weight < self.max_takeoff_weight:
            raise DomainError(
                "need 0 < empty_weight < max_takeoff_weight, got "
                f"{self.empty_weight!r} and {self.max_takeoff_weight!r}"
            )


@dataclass(frozen=True)
class Atmosphere:
    """Air density at the (constant) cruise altitude."""

    density: float
    altitude: float = 0.0

    def __post_init__(self):
        _require_positive(density=self.density)
        if not (math.isfinite(self.altitude) and self.altitude >= 0.0):
            raise DomainError(f"altitude must be >= 0, got {self.altitude!r}")


def drag(airframe, density, weight, airspeed):
    """Total drag [N] in steady level flight."""
    _require_positive(airspeed=airspeed, weight=weight, density=density)
    q_s = density * airframe.wing_area * airspeed * airspeed
    return 0.5 * airframe.c_d0 * q_s + 2.0 * airframe.c_d2 * weight * weight / q_s


def min_drag_speed(airframe, density, weight):
    """Airspeed [m/s] at which parasite and induced drag are equal."""
    _require_positive(weight=weight, density=density)
    return math.sqrt(2.0 * weight / (density * airframe.wing_area)) * (
        airframe.c_d2 / airframe.c_d0
    ) ** 0.25


def cd2_from_lift_to_drag(ld_ratio, c_d0):
    """Induced drag coefficient implied by a maximum lift-to-drag ratio.

    Uses L/D = 0.5 * sqrt(pi A e / CD0) together with CD2 = 1 / (pi A e),
    eliminating pi A e.
    """
    _require_positive(ld_ratio=ld_ratio, c_d0=c_d0)
    return 1.0 / (4.0 * ld_ratio * ld_ratio * c_d0)


def lift_to_drag_from_cd2(c_d2, c_d0):
    """Maximum lift-to-drag ratio of the parabolic polar (inverse of the above)."""
    _require_positive(c_d2=c_d2, c_d0=c_d0)
    return 0.5 * math.sqrt((1.0 / c_d2) / c_d0)


# ISA troposphere constants
_T0 = 288.15
_P0 = 101325.0
_LAPSE = 0.0065
_R_AIR = 287.05287
_G0 = 9.80665


def isa_density(altitude):
    """ISA density [kg/m^3] below 11 km.

    Convenience only; scenario files give the density explicitly.
    """
    if not 0.0 <= altitude <= 11000.0:
        raise DomainError(f"isa_density covers 0..11000 m, got {altitude!r}")
    temperature = _T0 - _LAPSE * altitude
    pressure = _P0 * (temperature / _T0) ** (_G0 / (_R_AIR * _LAPSE))
    return pressure / (_R_AIR * temperature)
