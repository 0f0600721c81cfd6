"""Scenario files: JSON documents validated with pydantic.

Weights enter in kg (converted with the scenario's gravity); everything else
is SI or per-kWh prices.
"""

import json
from importlib import resources
from pathlib import Path
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from mindoc.aero import Airframe, Atmosphere, cd2_from_lift_to_drag
from mindoc.costmodel import KWH_PER_JOULE, ConversionFactors, CostInputs
from mindoc.errors import ConfigError, DomainError
from mindoc.optimizer import Boundary, CruiseParams, Powertrain
from mindoc.planner import PlannerConfig, World, generate_city

PRESETS = ("efanx_intl", "e430_city")


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class AircraftSpec(_Strict):
    name: str = ""
    wing_area_m2: float = Field(gt=0)
    c_d0: float = Field(gt=0)
    c_d2: Optional[float] = Field(default=None, gt=0)
    lift_to_drag: Optional[float] = Field(default=None, gt=0)
    empty_mass_kg: float = Field(gt=0)
    max_takeoff_mass_kg: float = Field(gt=0)
    beta: float = Field(ge=0, le=1, description="hybridization factor")
    eta: float = Field(gt=0, le=1)
    supply_voltage_v: float = Field(gt=0)
    tsfc_kg_per_n_s: float = Field(default=0.0, ge=0)
    battery_capacity_kwh: Optional[float] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _check(self):
        if self.c_d2 is None and self.lift_to_drag is None:
            raise ValueError("one of c_d2 or lift_to_drag is required")
        if not self.empty_mass_kg < self.max_takeoff_mass_kg:
            raise ValueError("empty_mass_kg must be below max_takeoff_mass_kg")
        return self

    @property
    def induced_drag(self):
        if self.c_d2 is not None:
            return self.c_d2
        return cd2_from_lift_to_drag(self.lift_to_drag, self.c_d0)


class CostSpec(_Strict):
    time_cost_per_s: float = Field(ge=0)
    electricity_cost_per_kwh: float = Field(ge=0)
    fuel_cost_per_kwh: float = Field(ge=0)
    heating_value_kwh_per_kg: float = Field(default=11.94, gt=0)
    gravity_m_s2: float = Field(default=9.8, gt=0)
    kappa_i_kwh_per_j: float = Field(default=KWH_PER_JOULE, gt=0)
    kappa_f_kwh_per_n: Optional[float] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _check(self):
        if self.electricity_cost_per_kwh + self.fuel_cost_per_kwh <= 0:
            raise ValueError("electricity and fuel cost cannot both be zero")
        return self


class AtmosphereSpec(_Strict):
    density_kg_m3: float = Field(gt=0)
    altitude_m: float = Field(default=0.0, ge=0)


class BoundarySpec(_Strict):
    r0_m: Optional[float] = None
    rf_m: Optional[float] = None
    start_m: Optional[Tuple[float, float]] = None
    goal_m: Optional[Tuple[float, float]] = None
    initial_weight_n: float = Field(gt=0)
    initial_charge_c: float = Field(ge=0)

    @model_validator(mode="after")
    def _check(self):
        cruise = self.r0_m is not None or self.rf_m is not None
        planar = self.start_m is not None or self.goal_m is not None
        if cruise == planar:
            raise ValueError("give exactly one of {r0_m, rf_m} (cruise) or {start_m, goal_m} (plan)")
        if cruise and (self.r0_m is None or self.rf_m is None):
            raise ValueError("cruise boundary needs both r0_m and rf_m")
        if cruise and self.rf_m < self.r0_m:
            raise ValueError("rf_m must not be smaller than r0_m")
        if planar and (self.start_m is None or self.goal_m is None):
            raise ValueError("plan boundary needs both start_m and goal_m")
        return self

    @property
    def mode(self):
        return "cruise" if self.r0_m is not None else "plan"


class CitySpec(_Strict):
    seed: int = 0
    n_buildings: int = Field(default=500, ge=0)
    extent_m: Tuple[float, float] = (10000.0, 5000.0)
    radius_range_m: Tuple[float, float] = (20.0, 80.0)
    height_range_m: Tuple[float, float] = (200.0, 400.0)
    restricted_margin_m: float = Field(default=100.0, ge=0)
    buffer_m: float = Field(default=10.0, ge=0)

    @model_validator(mode="after")
    def _check(self):
        for name in ("radius_range_m", "height_range_m"):
            lo, hi = getattr(self, name)
            if not 0 < lo <= hi:
                raise ValueError(f"{name} must be positive and ordered")
        if min(self.extent_m) <= 0:
            raise ValueError("extent_m must be positive")
        return self


class PlannerSpec(_Strict):
    n_samples: int = Field(default=250, ge=1)
    steer_step_m: float = Field(default=1000.0, gt=0)
    neighbor_radius_scale: float = Field(default=0.673, gt=0)
    goal_tolerance_m: float = Field(default=1.0, gt=0)
    sampler: Literal["uniform", "gaussian"] = "gaussian"
    sigma_lateral_m: Optional[float] = Field(default=None, gt=0)
    seed: int = 0
    city: Optional[CitySpec] = None
    world_file: Optional[str] = None

    @model_validator(mode="after")
    def _check(self):
        if (self.city is None) == (self.world_file is None):
            raise ValueError("give exactly one of city or world_file")
        return self


class RecostSpec(_Strict):
    tsfc_kg_per_n_s: float = Field(default=1.1e-5, gt=0)
    fuel_cost_per_kwh: float = Field(default=0.115, gt=0)


class ScenarioConfig(_Strict):
    schema_: Literal[1] = Field(default=1, alias="schema")
    name: str = ""
    description: str = ""
    aircraft: AircraftSpec
    costs: CostSpec
    atmosphere: AtmosphereSpec
    boundary: BoundarySpec
    planner: Optional[PlannerSpec] = None
    recost: Optional[RecostSpec] = None
    tsfc_mode: Literal["mass", "weight"] = "mass"
    time_convention: Literal["doc", "printed"] = "doc"
    step_s: float = Field(default=1.0, gt=0)
    shooting_tol: Optional[float] = Field(default=None, gt=0)
    outputs: Optional[dict] = None

    @model_validator(mode="after")
    def _check(self):
        g = self.costs.gravity_m_s2
        if self.boundary.initial_weight_n > self.aircraft.max_takeoff_mass_kg * g:
            raise ValueError("boundary.initial_weight_n exceeds the maximum take-off weight")
        if self.boundary.initial_weight_n <= self.aircraft.empty_mass_kg * g:
            raise ValueError("boundary.initial_weight_n must exceed the empty weight")
        if self.boundary.mode == "plan" and self.planner is None:
            raise ValueError("a start/goal boundary needs a planner section")
        return self

    @property
    def mode(self):
        return self.boundary.mode

    def airframe(self):
        a, g = self.aircraft, self.costs.gravity_m_s2
        return Airframe(a.wing_area_m2, a.c_d0, a.induced_drag, a.empty_mass_kg * g, a.max_takeoff_mass_kg * g)

    def powertrain(self):
        a = self.aircraft
        return Powertrain(a.beta, a.eta, a.supply_voltage_v, a.tsfc_kg_per_n_s, self.tsfc_mode)

    def cost_inputs(self):
        c = self.costs
        return CostInputs(
            c.time_cost_per_s, c.electricity_cost_per_kwh, c.fuel_cost_per_kwh,
            c.heating_value_kwh_per_kg, c.gravity_m_s2,
        )

    def atmosphere_(self):
        return Atmosphere(self.atmosphere.density_kg_m3, self.atmosphere.altitude_m)

    def params(self):
        costs = self.cost_inputs()
        conversion = ConversionFactors.from_costs(
            costs, self.costs.kappa_i_kwh_per_j, self.costs.kappa_f_kwh_per_n
        )
        return CruiseParams(
            self.airframe(), self.powertrain(), self.atmosphere_(), costs, conversion, self.time_convention
        )

    def cruise_boundary(self):
        b = self.boundary
        return Boundary(b.r0_m, b.rf_m, b.initial_weight_n, b.initial_charge_c)

    def initial_state(self):
        return (0.0, self.boundary.initial_weight_n, self.boundary.initial_charge_c)

    def planner_config(self):
        p = self.planner
        return PlannerConfig(
            n_samples=p.n_samples,
            steer_step=p.steer_step_m,
            neighbor_radius_scale=p.neighbor_radius_scale,
            goal_tolerance=p.goal_tolerance_m,
            sampler=p.sampler,
            sigma_lateral=p.sigma_lateral_m,
            rng_seed=p.seed,
        )

    def world(self, base_dir=None):
        p = self.planner
        if p.world_file is not None:
            path = Path(p.world_file)
            if base_dir is not None and not path.is_absolute():
                path = Path(base_dir) / path
            from mindoc.io import load_world

            return load_world(path)
        c = p.city
        b = self.boundary
        return generate_city(
            c.seed,
            c.n_buildings,
            c.extent_m,
            c.radius_range_m,
            c.height_range_m,
            c.restricted_margin_m,
            c.buffer_m,
            keep_clear=(b.start_m, b.goal_m),
            cruise_altitude=self.atmosphere.altitude_m,
            atmosphere=self.atmosphere_(),
        )

    def with_overrides(self, **changes):
        """Copy with dotted-path overrides, revalidated."""
        data = self.model_dump(by_alias=True)
        for dotted, value in changes.items():
            if value is None:
                continue
            node = data
            *parents, leaf = dotted.split(".")
            for key in parents:
                if node.get(key) is None:
                    node[key] = {}
                node = node[key]
            node[leaf] = value
        return parse_config(data, source="<overrides>")


def _format_validation(err, source):
    lines = []
    for e in err.errors():
        loc = ".".join(str(x) for x in e["loc"]) or "<root>"
        lines.append(f"{source}: {loc}: {e['msg']}")
    return "\n".join(lines)


def parse_config(data, source="<config>"):
    try:
        config = ScenarioConfig.model_validate(data)
        # domain invariants beyond the field constraints
        config.params()
    except ValidationError as err:
        raise ConfigError(_format_validation(err, source)) from err
    except DomainError as err:
        raise ConfigError(f"{source}: {err}") from err
    return config


def load_config(path):
    """Load a scenario file, or a shipped preset by name."""
    text, source = _read(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigError(f"{source}:{err.lineno}:{err.colno}: {err.msg}") from err
    config = parse_config(data, source)
    return config


def _read(path):
    p = Path(path)
    if p.is_file():
        return p.read_text(), str(p)
    name = str(path)
    if name in PRESETS:
        return resources.files("mindoc.presets").joinpath(f"{name}.json").read_text(), f"preset:{name}"
    raise ConfigError(f"{path}: no such file or preset (presets: {', '.join(PRESETS)})")
