"""JSON and CSV writers/readers for worlds, paths and cruise profiles."""

import csv
import io
import json
import math
from pathlib import Path

from mindoc.aero import Atmosphere
from mindoc.planner import CylinderObstacle, World

SCHEMA = 1

PROFILE_COLUMNS = ("t", "r", "v", "W", "Q", "J_W", "doc_rate")
PROFILE_UNITS = ("s", "m", "m/s", "N", "C", "kWh/N", "USD/s")


def dump_json(obj, path):
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def world_to_dict(world):
    return {
        "schema": SCHEMA,
        "extent_m": list(world.extent),
        "cruise_altitude_m": world.cruise_altitude,
        "density_kg_m3": world.atmosphere.density,
        "altitude_m": world.atmosphere.altitude,
        "obstacles": [
            {
                "center_m": list(ob.center),
                "radius_m": ob.radius,
                "height_m": ob.height,
                "buffer_m": ob.buffer,
            }
            for ob in world.obstacles
        ],
    }


def world_from_dict(data):
    if data.get("schema") != SCHEMA:
        raise ValueError(f"unsupported world schema {data.get('schema')!r}")
    obstacles = tuple(
        CylinderObstacle(tuple(o["center_m"]), o["radius_m"], o["height_m"], o["buffer_m"])
        for o in data["obstacles"]
    )
    return World(
        tuple(data["extent_m"]),
        obstacles,
        data["cruise_altitude_m"],
        Atmosphere(data["density_kg_m3"], data["altitude_m"]),
    )


def save_world(world, path):
    dump_json(world_to_dict(world), path)


def load_world(path):
    return world_from_dict(json.loads(Path(path).read_text()))


def profile_rows(profile):
    for s in profile.samples:
        st = s.state
        yield (st.t, st.r, s.airspeed, st.weight, st.charge, st.costate, s.doc_rate)


def profile_csv(profile):
    buf = io.StringIO()
    buf.write(",".join(PROFILE_COLUMNS) + "\n")
    buf.write("# " + ",".join(PROFILE_UNITS) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    for row in profile_rows(profile):
        writer.writerow([repr(float(x)) for x in row])
    return buf.getvalue()


def save_profile(profile, path):
    Path(path).write_text(profile_csv(profile))


def read_profile_csv(path):
    lines = [ln for ln in Path(path).read_text().splitlines() if not ln.startswith("#")]
    header = lines[0].split(",")
    return header, [[float(x) for x in ln.split(",")] for ln in lines[1:]]


def summary_to_dict(profile, name=""):
    s = profile.summary
    v = profile.airspeed
    return {
        "schema": SCHEMA,
        "scenario": name,
        "duration_s": s.duration,
        "fuel_kg": s.fuel_mass,
        "charge_ah": s.charge_spent,
        "total_doc_usd": s.total_doc,
        "hourly_doc_usd_per_h": s.hourly_doc,
        "final_position_m": s.final_position,
        "initial_costate_kwh_per_n": profile.initial_costate,
        "terminal_costate_kwh_per_n": profile.terminal_costate,
        "airspeed_initial_kmh": float(v[0]) * 3.6,
        "airspeed_final_kmh": float(v[-1]) * 3.6,
        "shooting_evaluations": profile.iterations,
        "flags": sorted(profile.flags),
    }


def path_to_dict(path, name=""):
    cum = path.cumulative_length
    return {
        "schema": SCHEMA,
        "scenario": name,
        "waypoints_m": [list(p) for p in path.waypoints],
        "waypoint_distance_m": [float(x) for x in cum],
        "edges": [
            {"from": i, "to": i + 1, "length_m": math.dist(a, b), "doc_usd": c}
            for i, (a, b, c) in enumerate(zip(path.waypoints, path.waypoints[1:], path.edge_costs))
        ],
        "total_doc_usd": path.total_doc,
        "total_length_m": path.total_length,
        "best_cost_series_usd": [c if math.isfinite(c) else None for c in path.best_cost_series],
        "stats": {k: (v if not isinstance(v, float) or math.isfinite(v) else None) for k, v in path.stats.items()},
    }
