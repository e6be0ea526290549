"""Round-based activation dynamics, with and without incentives.

A vertex activates once the weight arriving from already-active neighbors
(in-neighbors in directed mode), plus its own incentive if any, reaches its
threshold. Activation within a round is simultaneous and irreversible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .instance import Instance, VertexSet, _coerce


@dataclass(frozen=True)
class ActivationTrace:
    """Per-round record of one activation run.

    rounds[0] holds the initially active vertices; rounds[t] holds the
    vertices newly activated in round t. The rounds are pairwise disjoint,
    their union is final_active, and num_rounds is the index of the last
    round (0 when nothing spreads).
    """

    rounds: tuple[VertexSet, ...]
    final_active: VertexSet
    num_rounds: int


def build_incentives(instance: Instance, values) -> dict[int, Fraction]:
    """Coerce `values` into a full per-vertex incentive map.

    Accepts a map (missing vertices get 0), a sequence in vertex order,
    or a single value broadcast to every vertex.
    """
    if isinstance(values, Mapping):
        p = {v: Fraction(0) for v in instance.vertices}
        for v, x in values.items():
            p[v] = _coerce(x)
        return p
    if isinstance(values, (list, tuple)):
        if len(values) != instance.n:
            raise ValueError(f"{len(values)} incentives for {instance.n} vertices")
        return {v: _coerce(x) for v, x in zip(instance.vertices, values)}
    return {v: _coerce(values) for v in instance.vertices}


def _check_incentives(instance: Instance, p: Mapping[int, Fraction]) -> None:
    for v, x in p.items():
        if v not in instance.vertex_set:
            raise ValueError(f"incentive given for unknown vertex {v}")
        if x < 0:
            raise ValueError(f"negative incentive {x} at vertex {v}")


def _run_rounds(instance: Instance, initially_active, p) -> ActivationTrace:
    tau = instance.tau
    out = instance.out_adjacency
    received = {v: Fraction(0) for v in instance.vertices}
    active = set(initially_active)
    rounds = [frozenset(active)]
    frontier = active
    while frontier:
        for v in frontier:
            for u, w in out[v]:
                received[u] += w
        frontier = {
            x
            for x in instance.vertices
            if x not in active and received[x] + p.get(x, 0) >= tau[x]
        }
        if frontier:
            active |= frontier
            rounds.append(frozenset(frontier))
    return ActivationTrace(tuple(rounds), frozenset(active), len(rounds) - 1)


def _initial_from_seed(instance: Instance, seed) -> set[int]:
    seed = frozenset(seed)
    stray = seed - instance.vertex_set
    if stray:
        raise ValueError(f"seed contains unknown vertices: {sorted(stray)}")
    return set(seed) | {v for v in instance.vertices if instance.tau[v] <= 0}

def run_activation(instance: Instance, seed) -> ActivationTrace:
    """Run the process from a seed set.

    Round 0 activates the seed plus every vertex whose threshold is already
    met with no help (tau <= 0); later rounds follow the threshold rule.
    """
    return _run_rounds(instance, _initial_from_seed(instance, seed), {})


def run_with_incentives(instance: Instance, incentives: Mapping[int, Fraction]) -> ActivationTrace:
    """Run the process driven by an incentive vector.

    Round 0 activates exactly the vertices with p(v) >= tau(v); afterwards a
    vertex activates when active-neighbor weight plus its incentive reaches
    its threshold.
    """
    _check_incentives(instance, incentives)
    start = {v for v in instance.vertices if incentives.get(v, 0) >= instance.tau[v]}
    return _run_rounds(instance, start, incentives)


def _closure_size(instance: Instance, start, p) -> int:
    # Queue-based closure; same final set as the round simulation, cheaper
    # when the round structure is not needed.
    tau = instance.tau
    out = instance.out_adjacency
    received = {v: Fraction(0) for v in instance.vertices}
    active = set(start)
    stack = list(active)
    while stack:
        v = stack.pop()
        for u, w in out[v]:
            if u in active:
                continue
            received[u] += w
            if received[u] + p.get(u, 0) >= tau[u]:
                active.add(u)
                stack.append(u)
    return len(active)


def is_target_set(instance: Instance, seed) -> bool:
    """True iff activating `seed` ends with every vertex active."""
    return _closure_size(instance, _initial_from_seed(instance, seed), {}) == instance.n


def is_target_vector(instance: Instance, incentives: Mapping[int, Fraction]) -> bool:
    """True iff the incentive vector activates every vertex."""
    _check_incentives(instance, incentives)
    start = {v for v in instance.vertices if incentives.get(v, 0) >= instance.tau[v]}
    return _closure_size(instance, start, incentives) == instance.n


def incentive_cost(incentives: Mapping[int, Fraction]) -> Fraction:
    """Exact sum of all incentive payments."""
    return sum(incentives.values(), start=Fraction(0))
