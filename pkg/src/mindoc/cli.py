"""Command-line entry point: ``mindoc {airspeed,cruise,plan,citygen}``.

Exit codes: 0 success, 1 configuration error, 2 optimizer/shooting failure,
3 planning failure.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from mindoc import io
from mindoc.config import load_config
from mindoc.costmodel import CostInputs, ConversionFactors
from mindoc.errors import (
    ConfigError,
    InfeasibleRootError,
    MindocError,
    PlanningError,
    ResourceExhaustedError,
    ShootingError,
)
from mindoc.optimizer import (
    Boundary,
    Powertrain,
    _Kernel,
    optimal_airspeed,
    quintic_coefficients,
    shoot,
)
from mindoc.planner import generate_city, plan

log = logging.getLogger("mindoc")

EXIT_OK, EXIT_CONFIG, EXIT_SHOOTING, EXIT_PLANNING = 0, 1, 2, 3


@dataclass
class AirspeedReport:
    weight: float
    costate: float
    airspeed: float
    coefficients: object
    residual: float
    doc_rate: float
    ambiguous: bool

    def as_dict(self):
        return {
            "schema": io.SCHEMA,
            "weight_n": self.weight,
            "costate_kwh_per_n": self.costate,
            "airspeed_m_s": self.airspeed,
            "airspeed_kmh": self.airspeed * 3.6,
            "coefficients": dict(zip(("a5", "a4", "a3", "a2", "a1", "a0"), self.coefficients.as_list())),
            "normalized_residual": self.residual,
            "doc_rate_usd_per_s": self.doc_rate,
            "doc_rate_usd_per_h": self.doc_rate * 3600.0,
            "multiple_roots": self.ambiguous,
        }


def run_airspeed(config, weight=None, costate=None):
    """Optimal airspeed at a single (W, J_W) point; J_W defaults to its terminal value 0."""
    params = config.params()
    weight = config.boundary.initial_weight_n if weight is None else weight
    costate = 0.0 if costate is None else costate
    v, ambiguous = optimal_airspeed(weight, costate, params)
    k = _Kernel(params)
    coeffs = quintic_coefficients(weight, k.jbar0 - costate, params)
    return AirspeedReport(weight, costate, v, coeffs, coeffs.normalized_residual(v), k.doc_rate(weight, v), ambiguous)


def airspeed_sweep(config, weights, costate=None):
    return [run_airspeed(config, w, costate) for w in weights]


def run_cruise(config, out=None):
    """Shoot the cruise boundary-value problem and write profile.csv / summary.json."""
    if config.mode != "cruise":
        raise ConfigError("cruise needs an r0_m/rf_m boundary")
    profile = shoot(config.cruise_boundary(), config.params(), tol=config.shooting_tol, step=config.step_s)
    if out is not None:
        out = Path(out)
        out.mkdir(parents=True, exist_ok=True)
        io.save_profile(profile, out / "profile.csv")
        io.dump_json(io.summary_to_dict(profile, config.name), out / "summary.json")
    return profile


def recost_fuel(params, length, tsfc, fuel_cost, initial_weight, initial_charge, step=1.0):
    """Fly the same ground track as a pure jet (beta = 0) at its own optimal airspeed."""
    c = params.costs
    costs = CostInputs(c.time_cost, c.electricity_cost, fuel_cost, c.heating_value, c.gravity)
    jet = params.replace(
        powertrain=Powertrain(0.0, params.powertrain.eta, params.powertrain.supply_voltage, tsfc, params.powertrain.tsfc_mode),
        costs=costs,
        conversion=ConversionFactors.from_costs(costs, params.conversion.kappa_i),
    )
    return shoot(Boundary(0.0, length, initial_weight, initial_charge), jet, step=step)


@dataclass
class PlanResult:
    world: object
    path: object
    recost: object = None


def run_plan(config, out=None, recost=False, base_dir=None):
    """Generate or load the world, run RRT*, and export path, world and profile."""
    if config.mode != "plan":
        raise ConfigError("plan needs a start_m/goal_m boundary")
    world = config.world(base_dir)
    params = config.params()
    path = plan(
        world,
        config.boundary.start_m,
        config.boundary.goal_m,
        params,
        config.planner_config(),
        config.initial_state(),
        step=config.step_s,
    )
    jet = None
    if recost:
        rc = config.recost
        tsfc = rc.tsfc_kg_per_n_s if rc else 1.1e-5
        cf = rc.fuel_cost_per_kwh if rc else 0.115
        jet = recost_fuel(
            params, path.total_length, tsfc, cf,
            config.boundary.initial_weight_n, config.boundary.initial_charge_c, config.step_s,
        )
    if out is not None:
        out = Path(out)
        out.mkdir(parents=True, exist_ok=True)
        io.save_world(world, out / "world.json")
        doc = io.path_to_dict(path, config.name)
        doc["profile_summary"] = io.summary_to_dict(path.profile, config.name)
        if jet is not None:
            doc["recost_fuel"] = io.summary_to_dict(jet, config.name)
            doc["recost_fuel"]["ratio_to_planned_doc"] = jet.summary.total_doc / path.total_doc
        io.dump_json(doc, out / "path.json")
        io.save_profile(path.profile, out / "profile.csv")
        _save_waypoints(path, out / "waypoints.csv")
    return PlanResult(world, path, jet)


def _save_waypoints(path, target):
    prof = path.profile
    r = prof.r
    lines = ["index,x,y,r,t,v,W,Q", "# -,m,m,m,s,m/s,N,C"]
    for i, (p, d) in enumerate(zip(path.waypoints, path.cumulative_length)):
        vals = [float(np.interp(d, r, col)) for col in (prof.t, prof.airspeed, prof.weight, prof.charge)]
        lines.append(",".join([str(i), repr(float(p[0])), repr(float(p[1])), repr(float(d))] + [repr(v) for v in vals]))
    Path(target).write_text("\n".join(lines) + "\n")


def run_citygen(seed, out=None, **params):
    world = generate_city(seed, **params)
    if out is not None:
        out = Path(out)
        out.mkdir(parents=True, exist_ok=True)
        io.save_world(world, out / "world.json")
    return world


def _overrides(args, config):
    changes = {
        "aircraft.beta": args.beta,
        "costs.time_cost_per_s": args.ct,
        "aircraft.tsfc_kg_per_n_s": args.sfc,
        "tsfc_mode": args.tsfc_mode,
        "time_convention": getattr(args, "time_convention", None),
    }
    if args.seed is not None and config.planner is not None:
        changes["planner.seed"] = args.seed
    if getattr(args, "samples", None) is not None and config.planner is not None:
        changes["planner.n_samples"] = args.samples
    if args.sfc is not None and config.recost is not None:
        changes["recost.tsfc_kg_per_n_s"] = args.sfc
    return config.with_overrides(**changes)


def _parse_range(text):
    lo, hi, n = text.split(":")
    return np.linspace(float(lo), float(hi), int(n))


def build_parser():
    parser = argparse.ArgumentParser(prog="mindoc", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, config_required=True):
        p.add_argument("--config", required=config_required, help="scenario JSON file or preset name")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--out", default=None, help="output directory")
        p.add_argument("--beta", type=float, default=None, help="override hybridization factor")
        p.add_argument("--ct", type=float, default=None, help="override time cost [currency/s]")
        p.add_argument("--sfc", type=float, default=None, help="override TSFC [kg/(N s)]")
        p.add_argument("--tsfc-mode", choices=("mass", "weight"), default=None)
        p.add_argument("--time-convention", choices=("doc", "printed"), default=None)

    p = sub.add_parser("airspeed", help="optimal airspeed at one state")
    common(p)
    p.add_argument("--weight", type=float, default=None, help="weight [N]")
    p.add_argument("--costate", type=float, default=None, help="J_W [kWh/N]")
    p.add_argument("--sweep-weight", default=None, metavar="LO:HI:N", help="write a CSV over a weight grid")

    p = sub.add_parser("cruise", help="shoot the cruise boundary-value problem")
    common(p)

    p = sub.add_parser("plan", help="minimum-DOC RRT* route")
    common(p)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--recost-fuel", action="store_true", help="also price the route flown as a jet")

    p = sub.add_parser("citygen", help="write a random city world file")
    common(p, config_required=False)
    p.add_argument("--n-buildings", type=int, default=500)
    p.add_argument("--extent", type=float, nargs=2, default=(10000.0, 5000.0))
    p.add_argument("--radius-range", type=float, nargs=2, default=(20.0, 80.0))
    p.add_argument("--height-range", type=float, nargs=2, default=(200.0, 400.0))
    p.add_argument("--buffer", type=float, default=10.0)
    p.add_argument("--altitude", type=float, default=300.0)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return _dispatch(args)
    except ConfigError as err:
        print(f"config error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except ShootingError as err:
        print(f"shooting failed: {err}", file=sys.stderr)
        for j0, jf in err.scanned:
            print(f"  J_W(0)={j0:+.6e}  J_W(tf)={'infeasible' if jf is None else f'{jf:+.6e}'}", file=sys.stderr)
        return EXIT_SHOOTING
    except (InfeasibleRootError, ResourceExhaustedError) as err:
        print(f"optimizer error: {err}", file=sys.stderr)
        return EXIT_SHOOTING
    except PlanningError as err:
        print(f"planning failed: {err}", file=sys.stderr)
        print(json.dumps(err.stats, sort_keys=True, default=str), file=sys.stderr)
        return EXIT_PLANNING
    except MindocError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG


def _dispatch(args):
    if args.command == "citygen":
        seed = args.seed if args.seed is not None else 0
        world = run_citygen(
            seed,
            out=args.out or ".",
            n_buildings=args.n_buildings,
            extent=tuple(args.extent),
            radius_range=tuple(args.radius_range),
            height_range=tuple(args.height_range),
            buffer=args.buffer,
            cruise_altitude=args.altitude,
        )
        print(f"wrote {len(world.obstacles)} obstacles to {Path(args.out or '.') / 'world.json'}")
        return EXIT_OK

    config = _overrides(args, load_config(args.config))
    base_dir = Path(args.config).parent if Path(args.config).is_file() else None

    if args.command == "airspeed":
        if args.sweep_weight:
            rows = airspeed_sweep(config, _parse_range(args.sweep_weight), args.costate)
            text = "W,v,residual,doc_rate\n# N,m/s,-,USD/s\n" + "".join(
                ",".join(repr(float(x)) for x in (r.weight, r.airspeed, r.residual, r.doc_rate)) + "\n" for r in rows
            )
            if args.out:
                Path(args.out).mkdir(parents=True, exist_ok=True)
                (Path(args.out) / "sweep.csv").write_text(text)
            else:
                sys.stdout.write(text)
            return EXIT_OK
        rep = run_airspeed(config, args.weight, args.costate)
        print(f"v* = {rep.airspeed:.6f} m/s = {rep.airspeed * 3.6:.4f} km/h")
        print("coefficients: " + ", ".join(f"{k}={v:.6e}" for k, v in rep.as_dict()["coefficients"].items()))
        print(f"normalized residual = {rep.residual:.3e}")
        print(f"DOC rate = {rep.doc_rate:.6e} USD/s = {rep.doc_rate * 3600:.4f} USD/h")
        if args.out:
            Path(args.out).mkdir(parents=True, exist_ok=True)
            io.dump_json(rep.as_dict(), Path(args.out) / "airspeed.json")
        return EXIT_OK

    if args.command == "cruise":
        profile = run_cruise(config, args.out)
        s = profile.summary
        print(
            f"duration {s.duration:.1f} s, fuel {s.fuel_mass:.2f} kg, charge {s.charge_spent:.2f} Ah, "
            f"DOC {s.total_doc:.2f} USD ({s.hourly_doc:.2f} USD/h)"
        )
        return EXIT_OK

    if args.command == "plan":
        res = run_plan(config, args.out, recost=args.recost_fuel, base_dir=base_dir)
        p = res.path
        s = p.profile.summary
        print(
            f"path {p.total_length:.1f} m over {len(p.waypoints)} waypoints, DOC {p.total_doc:.4f} USD, "
            f"duration {s.duration:.1f} s, charge {s.charge_spent:.2f} Ah"
        )
        if res.recost is not None:
            j = res.recost.summary.total_doc
            print(f"as a jet: DOC {j:.4f} USD ({j / p.total_doc:.2f}x)")
        return EXIT_OK
    raise AssertionError(args.command)


if __name__ == "__main__":
    sys.exit(main())
