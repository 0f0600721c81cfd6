"""Minimum direct-operating-cost cruise speed and route planning for
hybrid-electric and all-electric aircraft."""

from mindoc.aero import (
    Airframe,
    Atmosphere,
    cd2_from_lift_to_drag,
    drag,
    isa_density,
    lift_to_drag_from_cd2,
    min_drag_speed,
)
from mindoc.costmodel import (
    ConversionFactors,
    CostInputs,
    TradeoffCoefficients,
    derive_tradeoffs,
    doc_rate,
    fuel_conversion,
)
from mindoc.errors import (
    ConfigError,
    DegenerateConfigurationError,
    DegenerateCostModelError,
    DomainError,
    InfeasibleRootError,
    PlanningError,
    ResourceExhaustedError,
    ShootingError,
)
from mindoc.optimizer import (
    CruiseParams,
    CruiseProfile,
    CruiseState,
    Powertrain,
    QuinticCoefficients,
    costate_rate,
    doc_total,
    electric_quartic_root,
    integrate_cruise,
    jbar,
    optimal_airspeed,
    positive_real_root,
    quintic_coefficients,
    shoot,
    state_rates,
)

__version__ = "0.1.0"
