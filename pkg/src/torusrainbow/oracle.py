"""Exact strong-rainbow search on tiny meshes by backtracking over edges.

Ground truth for everything else: enumerates all geodesics per vertex pair
up front, then colors edges one at a time, pruning as soon as some pair has
no potentially-rainbow geodesic left.  A hard budget refuses instances that
would not finish promptly, keeping results deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .colorings import Coloring
from .errors import BudgetExceededError
from .torus import TorusShape


@dataclass(frozen=True)
class SearchBudget:
    """Hard limits for the exact search; exceeding any of them is a refusal."""

    max_edges: int = 18
    max_colors: int = 5
    max_nodes: Optional[int] = None

    def __post_init__(self):
        if self.max_edges < 1 or self.max_colors < 1:
            raise ValueError("budget limits must be positive")
        if self.max_nodes is not None and self.max_nodes < 1:
            raise ValueError("max_nodes must be positive when set")


def _geodesics_as_edge_slots(shape: TorusShape, u, v) -> list[tuple[int, ...]]:
    """All geodesics between two vertices, each as a tuple of edge slots."""
    if u == v:
        return [()]
    out = []
    for w in shape.geodesic_successors(u, v):
        slot = shape.edge_slot(shape.edge_between(u, w))
        for rest in _geodesics_as_edge_slots(shape, w, v):
            out.append((slot,) + rest)
    return out


def is_src_achievable(
    shape: TorusShape, k: int, budget: SearchBudget | None = None
) -> Optional[Coloring]:
    """A witness strong rainbow k-coloring of the mesh, or None if impossible.

    Backtracks over edges (most-constrained first), introducing color c only
    after 0..c-1 already appear, and prunes a partial assignment as soon as
    every geodesic of some pair repeats a color.
    """
    budget = budget or SearchBudget()
    if shape.edge_count > budget.max_edges:
        raise BudgetExceededError(
            f"{shape.edge_count} edges exceed the budget of {budget.max_edges}"
        )
    if k > budget.max_colors:
        raise BudgetExceededError(f"{k} colors exceed the budget of {budget.max_colors}")
    if k < 1:
        return None
    if shape.diameter() > k:
        return None  # some geodesic is longer than the palette

    verts = list(shape.vertices())
    geo_edges: list[tuple[int, ...]] = []  # geodesic id -> edge slots
    geo_pair: list[int] = []  # geodesic id -> pair id
    pair_alive: list[int] = []  # pair id -> geodesics still potentially rainbow
    geos_of_edge: dict[int, list[int]] = {}
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            pid = len(pair_alive)
            geodesics = _geodesics_as_edge_slots(shape, u, v)
            pair_alive.append(len(geodesics))
            for g in geodesics:
                gid = len(geo_edges)
                geo_edges.append(g)
                geo_pair.append(pid)
                for slot in g:
                    geos_of_edge.setdefault(slot, []).append(gid)

    order = sorted(
        (shape.edge_slot(e) for e in shape.edges()),
        key=lambda slot: -len(geos_of_edge.get(slot, ())),
    )
    colors: dict[int, int] = {}
    broken = [False] * len(geo_edges)
    nodes = 0

    def place(slot: int, c: int) -> tuple[bool, list[int]]:
        """Assign and propagate; returns (consistent?, geodesics newly broken)."""
        colors[slot] = c
        changed = []
        ok = True
        for gid in geos_of_edge.get(slot, ()):
            if broken[gid]:
                continue
            for other in geo_edges[gid]:
                if other != slot and colors.get(other) == c:
                    broken[gid] = True
                    changed.append(gid)
                    pid = geo_pair[gid]
                    pair_alive[pid] -= 1
                    if pair_alive[pid] == 0:
                        ok = False
                    break
        return ok, changed

    def undo(slot: int, changed: list[int]) -> None:
        del colors[slot]
        for gid in changed:
            broken[gid] = False
            pair_alive[geo_pair[gid]] += 1

    def backtrack(idx: int, used: int) -> bool:
        nonlocal nodes
        if idx == len(order):
            return True
        nodes += 1
        if budget.max_nodes is not None and nodes > budget.max_nodes:
            raise BudgetExceededError(f"search exceeded {budget.max_nodes} nodes")
        slot = order[idx]
        for c in range(min(used + 1, k)):
            ok, changed = place(slot, c)
            if ok and backtrack(idx + 1, max(used, c + 1)):
                return True
            undo(slot, changed)
        return False

    if not backtrack(0, 0):
        return None
    slots = [-1] * shape.num_edge_slots
    for slot, c in colors.items():
        slots[slot] = c
    return Coloring(shape, k, tuple(slots))


def exact_src(shape: TorusShape, budget: SearchBudget | None = None) -> tuple[int, Coloring]:
    """Smallest k admitting a strong rainbow k-coloring, with a witness.

    Starts at the diameter (always a valid lower bound) and counts up within
    the color budget.
    """
    budget = budget or SearchBudget()
    for k in range(shape.diameter(), budget.max_colors + 1):
        witness = is_src_achievable(shape, k, budget)
        if witness is not None:
            return k, witness
    raise BudgetExceededError(
        f"no strong rainbow coloring within {budget.max_colors} colors; raise the budget"
    )
