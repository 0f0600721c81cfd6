"""
Direct operating cost (DOC) coefficients.

The DOC rate is

    C_t + C_i * kappa_i * U * i + C_f * kappa_f * f

with battery current i = beta D v / (eta U) and fuel weight flow
f = TSFC_w (1 - beta) D.  Prices are in an opaque currency (USD in the
shipped presets); energy prices are per kWh.
"""

import math
from dataclasses import dataclass

from mindoc.errors import DegenerateCostModelError, DomainError

KWH_PER_JOULE = 1.0 / 3.6e6


@dataclass(frozen=True)
class CostInputs:
    """Raw cost coefficients.

    Parameters
    ----------
    time_cost : float
        C_t, currency per second.
    electricity_cost : float
        C_i, currency per kWh.
    fuel_cost : float
        C_f, currency per kWh of fuel heating value.
    heating_value : float
        Fuel heating value e [kWh/kg].
    gravity : float
        Gravitational acceleration [m/s^2].
    """

    time_cost: float
    electricity_cost: float
    fuel_cost: float
    heating_value: float = 11.94
    gravity: float = 9.8

    def __post_init__(self):
        for name in ("time_cost", "electricity_cost", "fuel_cost"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0.0):
                raise DomainError(f"{name} must be >= 0, got {value!r}")
        if self.electricity_cost + self.fuel_cost <= 0.0:
            raise DegenerateCostModelError(
                "electricity_cost + fuel_cost must be positive (C_mu > 0)"
            )
        for name in ("heating_value", "gravity"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise DomainError(f"{name} must be positive, got {value!r}")


@dataclass(frozen=True)
class ConversionFactors:
    """kappa_i [kWh/J] and kappa_f [kWh/N]."""

    kappa_i: float
    kappa_f: float

    def __post_init__(self):
        for name in ("kappa_i", "kappa_f"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise DomainError(f"{name} must be positive, got {value!r}")

    @classmethod
    def from_costs(cls, costs, kappa_i=KWH_PER_JOULE, kappa_f=None):
        if kappa_f is None:
            kappa_f = fuel_conversion(costs.heating_value, costs.gravity)
        return cls(kappa_i=kappa_i, kappa_f=kappa_f)


@dataclass(frozen=True)
class TradeoffCoefficients:
    c_mu: float
    c_delta: float
    c_i_tradeoff: float
    c_e_tradeoff: float


def derive_tradeoffs(inputs):
    """Mean/half-difference energy prices and the C_I, C_E trade-offs."""
    c_mu = 0.5 * (inputs.electricity_cost + inputs.fuel_cost)
    if c_mu <= 0.0:
        raise DegenerateCostModelError("C_i + C_f must be positive")
    c_delta = 0.5 * (inputs.electricity_cost - inputs.fuel_cost)
    return TradeoffCoefficients(
        c_mu=c_mu,
        c_delta=c_delta,
        c_i_tradeoff=2.0 * inputs.time_cost / c_mu,
        c_e_tradeoff=c_delta / c_mu,
    )


def fuel_conversion(heating_value, gravity):
    """kappa_f = e / g, converting fuel weight [N] to energy [kWh]."""
    if heating_value <= 0.0 or gravity <= 0.0:
        raise DomainError("heating_value and gravity must be positive")
    return heating_value / gravity


def doc_terms(weight, airspeed, drag, powertrain, costs, conversion):
    """The (time, electricity, fuel) contributions to the DOC rate [currency/s].

    ``weight`` is accepted for signature symmetry with the dynamics; drag
    already carries the weight dependence.
    """
    if not airspeed > 0.0:
        raise DomainError(f"airspeed must be positive, got {airspeed!r}")
    beta = powertrain.beta
    # C_i * kappa_i * U * i with i = beta D v / (eta U); U cancels
    electricity = costs.electricity_cost * conversion.kappa_i * beta * drag * airspeed / powertrain.eta
    fuel_flow = powertrain.tsfc_weight(costs.gravity) * (1.0 - beta) * drag
    fuel = costs.fuel_cost * conversion.kappa_f * fuel_flow
    return costs.time_cost, electricity, fuel


def doc_rate(weight, airspeed, drag, powertrain, costs, conversion=None):
    """Instantaneous DOC rate [currency/s]."""
    if conversion is None:
        conversion = ConversionFactors.from_costs(costs)
    return sum(doc_terms(weight, airspeed, drag, powertrain, costs, conversion))
