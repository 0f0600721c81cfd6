"""
Minimum-DOC route planning with RRT* among cylindrical obstacles.

The aircraft cruises at a fixed altitude, so every cylinder at least as tall
as the cruise altitude becomes a forbidden disc (radius inflated by its buffer
zone) in the horizontal plane.  Edge cost is the direct operating cost of
flying the segment at the optimal airspeed instead of its length.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from mindoc.aero import Atmosphere
from mindoc.errors import DomainError, PlanningError
from mindoc.optimizer import Boundary, CruiseState, electric_quartic_root, integrate_cruise, shoot


@dataclass(frozen=True)
class CylinderObstacle:
    center: tuple
    radius: float
    height: float
    buffer: float = 10.0

    def __post_init__(self):
        if not (self.radius > 0.0 and self.height > 0.0 and self.buffer >= 0.0):
            raise DomainError("cylinder needs radius > 0, height > 0 and buffer >= 0")


@dataclass(frozen=True)
class World:
    extent: tuple
    obstacles: tuple
    cruise_altitude: float
    atmosphere: Atmosphere

    def __post_init__(self):
        width, depth = self.extent
        if not (width > 0.0 and depth > 0.0):
            raise DomainError(f"world extent must be positive, got {self.extent!r}")
        for ob in self.obstacles:
            x, y = ob.center
            if not (0.0 <= x <= width and 0.0 <= y <= depth):
                raise DomainError(f"obstacle center {ob.center!r} lies outside the world")

    @property
    def diagonal(self):
        return math.hypot(*self.extent)

    def contains(self, point):
        return 0.0 <= point[0] <= self.extent[0] and 0.0 <= point[1] <= self.extent[1]


def generate_city(
    seed,
    n_buildings=500,
    extent=(10000.0, 5000.0),
    radius_range=(20.0, 80.0),
    height_range=(200.0, 400.0),
    restricted_margin=100.0,
    buffer=10.0,
    keep_clear=(),
    cruise_altitude=300.0,
    atmosphere=None,
):
    """Random city of cylindrical restricted-airspace volumes.

    Centers, radii and heights are uniform.  Heights already include the
    restricted airspace above each roof.  A cylinder whose inflated disc comes
    within ``restricted_margin`` of a ``keep_clear`` point is redrawn.
    """
    lo_r, hi_r = radius_range
    lo_h, hi_h = height_range
    if not (0.0 < lo_r <= hi_r and 0.0 < lo_h <= hi_h):
        raise DomainError("radius and height ranges must be positive and ordered")
    if n_buildings < 0:
        raise DomainError("n_buildings must be >= 0")
    if atmosphere is None:
        atmosphere = Atmosphere(1.2, cruise_altitude)
    rng = np.random.default_rng(seed)
    width, depth = extent
    clear = [tuple(map(float, p)) for p in keep_clear]
    obstacles = []
    while len(obstacles) < n_buildings:
        x, y = rng.uniform(0.0, width), rng.uniform(0.0, depth)
        radius = rng.uniform(lo_r, hi_r)
        height = rng.uniform(lo_h, hi_h)
        if any(math.hypot(x - cx, y - cy) < radius + buffer + restricted_margin for cx, cy in clear):
            continue
        obstacles.append(CylinderObstacle((float(x), float(y)), float(radius), float(height), float(buffer)))
    return World((float(width), float(depth)), tuple(obstacles), float(cruise_altitude), atmosphere)


@dataclass(frozen=True)
class Discs:
    """Forbidden discs in the cruise plane, stored column-wise."""

    cx: np.ndarray
    cy: np.ndarray
    radius: np.ndarray

    def __len__(self):
        return self.cx.size

    def as_list(self):
        return [((float(x), float(y)), float(r)) for x, y, r in zip(self.cx, self.cy, self.radius)]


def active_obstacles(world):
    """Discs of every cylinder reaching the cruise altitude (closed comparison)."""
    active = [ob for ob in world.obstacles if ob.height >= world.cruise_altitude]
    return Discs(
        np.array([ob.center[0] for ob in active], dtype=float),
        np.array([ob.center[1] for ob in active], dtype=float),
        np.array([ob.radius + ob.buffer for ob in active], dtype=float),
    )


def _as_discs(discs):
    if isinstance(discs, Discs):
        return discs
    discs = list(discs)
    return Discs(
        np.array([c[0] for c, _ in discs], dtype=float),
        np.array([c[1] for c, _ in discs], dtype=float),
        np.array([r for _, r in discs], dtype=float),
    )


def segment_clearance(p1, p2, discs):
    """Distance from each disc center to the closed segment p1-p2."""
    discs = _as_discs(discs)
    x1, y1 = p1
    dx, dy = p2[0] - x1, p2[1] - y1
    length2 = dx * dx + dy * dy
    if length2 == 0.0:
        return np.hypot(discs.cx - x1, discs.cy - y1)
    s = np.clip(((discs.cx - x1) * dx + (discs.cy - y1) * dy) / length2, 0.0, 1.0)
    return np.hypot(discs.cx - (x1 + s * dx), discs.cy - (y1 + s * dy))


def collision_free(p1, p2, discs):
    """True unless the segment enters some disc interior.

    Touching a disc boundary (distance equal to the radius) is allowed.
    """
    discs = _as_discs(discs)
    if len(discs) == 0:
        return True
    return bool(np.all(segment_clearance(p1, p2, discs) >= discs.radius))


@dataclass
class PlanNode:
    position: tuple
    parent: object
    cost_to_come: float
    arrival_state: tuple
    children: list = field(default_factory=list)


class EdgeCoster:
    """DOC of straight cruise segments for one aircraft.

    All-electric aircraft keep their weight, so the optimal airspeed and the
    cost per meter are constants (cached per weight).  Otherwise the segment
    is integrated from the arrival state with the terminal costate value.
    """

    def __init__(self, params, step=1.0):
        self.params = params
        self.step = step
        self._electric = {}

    def rate(self, weight):
        """(airspeed, cost per meter, current) for an all-electric aircraft."""
        if weight not in self._electric:
            p = self.params
            v = electric_quartic_root(weight, p)
            pt = p.powertrain
            d = 0.5 * p.airframe.c_d0 * p.atmosphere.density * p.airframe.wing_area * v * v + (
                2.0 * p.airframe.c_d2 * weight * weight / (p.atmosphere.density * p.airframe.wing_area * v * v)
            )
            current = pt.beta * d * v / (pt.eta * pt.supply_voltage)
            doc = p.costs.time_cost + p.costs.electricity_cost * p.conversion.kappa_i * pt.supply_voltage * current
            self._electric[weight] = (v, doc / v, current)
        return self._electric[weight]

    def __call__(self, state, length):
        """Cost of flying ``length`` meters from arrival state (t, W, Q)."""
        t, weight, charge = state
        if length == 0.0:
            return 0.0, state
        if self.params.powertrain.beta == 1.0:
            v, per_meter, current = self.rate(weight)
            dt = length / v
            return per_meter * length, (t + dt, weight, charge - current * dt)
        profile = integrate_cruise(
            CruiseState(t, 0.0, weight, charge, 0.0), length, self.params, self.step, check_resources=False
        )
        end = profile.samples[-1].state
        return profile.summary.total_doc, (end.t, end.weight, end.charge)


def edge_cost(from_node, to_point, params, coster=None):
    """(DOC, arrival state) of the straight segment from a node to a point."""
    coster = coster or EdgeCoster(params)
    length = math.dist(from_node.position, to_point)
    return coster(from_node.arrival_state, length)


@dataclass(frozen=True)
class PlannerConfig:
    n_samples: int = 250
    steer_step: float = 1000.0
    neighbor_radius_scale: float = 0.673
    goal_tolerance: float = 1.0
    sampler: str = "gaussian"
    sigma_lateral: float = None
    rng_seed: int = 0
    max_attempts_factor: int = 50

    def __post_init__(self):
        if self.n_samples < 1:
            raise DomainError("n_samples must be >= 1")
        if not self.steer_step > 0.0:
            raise DomainError("steer_step must be positive")
        if not self.goal_tolerance > 0.0:
            raise DomainError("goal_tolerance must be positive")
        if self.sampler not in ("uniform", "gaussian"):
            raise DomainError(f"sampler must be 'uniform' or 'gaussian', got {self.sampler!r}")
        if self.sigma_lateral is not None and not self.sigma_lateral > 0.0:
            raise DomainError("sigma_lateral must be positive")


def default_neighbor_scale(n=250, fraction=0.1):
    """Scale making the shrinking-ball radius ``fraction`` of the diagonal at n nodes."""
    return fraction / math.sqrt(math.log(n) / n)


@dataclass
class Path:
    waypoints: list
    edge_costs: list
    total_doc: float
    total_length: float
    profile: object
    best_cost_series: list
    stats: dict
    tree: list = field(default_factory=list, repr=False)

    @property
    def cumulative_length(self):
        return np.concatenate(([0.0], np.cumsum([math.dist(a, b) for a, b in zip(self.waypoints, self.waypoints[1:])])))


class _Sampler:
    def __init__(self, world, start, goal, config):
        self.rng = np.random.default_rng(config.rng_seed)
        self.world = world
        self.kind = config.sampler
        self.start = np.asarray(start, dtype=float)
        axis = np.asarray(goal, dtype=float) - self.start
        self.length = float(np.hypot(*axis))
        self.along = axis / self.length if self.length > 0 else np.array([1.0, 0.0])
        self.across = np.array([-self.along[1], self.along[0]])
        self.sigma = config.sigma_lateral or world.extent[1] / 4.0

    def __call__(self):
        width, depth = self.world.extent
        if self.kind == "uniform":
            return (float(self.rng.uniform(0.0, width)), float(self.rng.uniform(0.0, depth)))
        s = self.rng.uniform(0.0, self.length)
        n = self.rng.normal(0.0, self.sigma)
        p = self.start + s * self.along + n * self.across
        return (float(np.clip(p[0], 0.0, width)), float(np.clip(p[1], 0.0, depth)))


def plan(world, start, goal, params, config, initial_state=None, step=1.0):
    """RRT* from ``start`` to ``goal`` minimizing direct operating cost.

    ``initial_state`` is (t, W, Q) at the start.  ``n_samples`` counts
    accepted (collision-free) tree extensions.  For aircraft whose edge cost
    depends on the arrival state (beta < 1) rewiring re-propagates states
    through the subtree, and the result is a heuristic.
    """
    start = (float(start[0]), float(start[1]))
    goal = (float(goal[0]), float(goal[1]))
    if initial_state is None:
        raise DomainError("plan needs the initial (t, W, Q) state")
    discs = active_obstacles(world)
    for name, p in (("start", start), ("goal", goal)):
        if not world.contains(p):
            raise DomainError(f"{name} {p!r} lies outside the world")
        if not collision_free(p, p, discs):
            raise DomainError(f"{name} {p!r} lies inside an obstacle")

    coster = EdgeCoster(params, step)
    sampler = _Sampler(world, start, goal, config)
    cap = config.n_samples + 2
    xy = np.empty((cap, 2))
    nodes = [PlanNode(start, None, 0.0, tuple(initial_state))]
    xy[0] = start
    goal_links = {}
    best_series = []
    best = (math.inf, None)
    rewires = 0
    attempts = 0
    diag = world.diagonal

    def free(a, b):
        return collision_free(a, b, discs)

    def goal_cost(i):
        cost, _ = coster(nodes[i].arrival_state, math.dist(nodes[i].position, goal))
        return nodes[i].cost_to_come + cost

    def repropagate(i):
        stack = [i]
        while stack:
            k = stack.pop()
            node = nodes[k]
            for c in node.children:
                child = nodes[c]
                cost, state = coster(node.arrival_state, math.dist(node.position, child.position))
                child.cost_to_come = node.cost_to_come + cost
                child.arrival_state = state
                stack.append(c)

    while len(nodes) - 1 < config.n_samples and attempts < config.max_attempts_factor * config.n_samples:
        attempts += 1
        target = sampler()
        n = len(nodes)
        d2 = np.sum((xy[:n] - target) ** 2, axis=1)
        i_near = int(np.argmin(d2))
        near = nodes[i_near].position
        dist = math.sqrt(d2[i_near])
        if dist == 0.0:
            continue
        if dist > config.steer_step:
            f = config.steer_step / dist
            new = (near[0] + f * (target[0] - near[0]), near[1] + f * (target[1] - near[1]))
        else:
            new = target
        if not free(near, new):
            continue

        radius = config.neighbor_radius_scale * math.sqrt(math.log(n + 1) / (n + 1)) * diag
        dn = np.sqrt(np.sum((xy[:n] - new) ** 2, axis=1))
        neighbors = [int(k) for k in np.flatnonzero(dn <= radius)]
        if i_near not in neighbors:
            neighbors.append(i_near)
        neighbors.sort()

        best_parent, best_cost, best_state = None, math.inf, None
        free_to = {}
        for k in neighbors:
            ok = k == i_near or free(nodes[k].position, new)
            free_to[k] = ok
            if not ok:
                continue
            cost, state = coster(nodes[k].arrival_state, float(dn[k]))
            if nodes[k].cost_to_come + cost < best_cost:
                best_parent, best_cost, best_state = k, nodes[k].cost_to_come + cost, state
        new_index = n
        nodes.append(PlanNode(new, best_parent, best_cost, best_state))
        nodes[best_parent].children.append(new_index)
        xy[new_index] = new

        for k in neighbors:
            if k == best_parent or not free_to[k]:
                continue
            cost, state = coster(best_state, float(dn[k]))
            if best_cost + cost < nodes[k].cost_to_come:
                old = nodes[k].parent
                nodes[old].children.remove(k)
                nodes[k].parent = new_index
                nodes[k].cost_to_come = best_cost + cost
                nodes[k].arrival_state = state
                nodes[new_index].children.append(k)
                repropagate(k)
                rewires += 1

        d_goal = math.dist(new, goal)
        if d_goal <= config.goal_tolerance or (d_goal <= config.steer_step and free(new, goal)):
            goal_links[new_index] = None

        for k in goal_links:
            c = goal_cost(k)
            if c < best[0]:
                best = (c, _trace(nodes, k))
        best_series.append(best[0])

    stats = {
        "nodes": len(nodes),
        "attempts": attempts,
        "rewires": rewires,
        "goal_links": len(goal_links),
        "best_cost": best[0],
    }
    if best[1] is None:
        raise PlanningError(f"no path to the goal after {attempts} attempts", stats=stats)

    chain = best[1]
    waypoints = [nodes[k].position for k in chain]
    if math.dist(waypoints[-1], goal) > 0.0:
        waypoints.append(goal)
    edge_costs = []
    state = tuple(initial_state)
    for a, b in zip(waypoints, waypoints[1:]):
        cost, state = coster(state, math.dist(a, b))
        edge_costs.append(cost)
    total_length = float(sum(math.dist(a, b) for a, b in zip(waypoints, waypoints[1:])))
    t0, w0, q0 = initial_state
    profile = shoot(Boundary(0.0, total_length, w0, q0, t0), params, step=step)
    return Path(
        waypoints=waypoints,
        edge_costs=edge_costs,
        total_doc=float(sum(edge_costs)),
        total_length=total_length,
        profile=profile,
        best_cost_series=best_series,
        stats=stats,
        tree=nodes,
    )


def _trace(nodes, k):
    chain = []
    while k is not None:
        chain.append(k)
        k = nodes[k].parent
    return chain[::-1]
