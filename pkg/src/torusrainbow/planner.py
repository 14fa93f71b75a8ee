"""Bound formulas and the planner that assembles a full mesh coloring.

The improved upper bound pairs each even cycle with an odd one (each pair
saves one color over coloring the factors separately); leftover same-parity
factors are colored jointly by a recursive prism/lift chain, and everything
is combined with disjoint-palette products.  Plans record which construction
produced each piece so a coloring can be rebuilt from its plan alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .colorings import (
    Coloring,
    PaletteInjection,
    cycle_coloring,
    lift_coloring,
    prism_coloring,
    product_coloring,
    relabel,
)
from .errors import ParityMismatchError
from .torus import make_shape

Plan = Union["CycleLeaf", "PrismLeaf", "Product", "Lift", "Embed"]


@dataclass(frozen=True)
class CycleLeaf:
    n: int
    claimed_colors: int

    @property
    def dims(self) -> tuple[int, ...]:
        return (self.n,)

    def describe(self) -> str:
        return f"Cycle({self.n})"


@dataclass(frozen=True)
class PrismLeaf:
    n: int
    claimed_colors: int

    @property
    def dims(self) -> tuple[int, ...]:
        return (self.n, 2)

    def describe(self) -> str:
        return f"Prism({self.n})"


@dataclass(frozen=True)
class Product:
    children: tuple[Plan, ...]
    claimed_colors: int

    @property
    def dims(self) -> tuple[int, ...]:
        out: tuple[int, ...] = ()
        for child in self.children:
            out += child.dims
        return out

    def describe(self) -> str:
        return f"Product({', '.join(c.describe() for c in self.children)})"


@dataclass(frozen=True)
class Lift:
    """Extension of a prism-style plan over a length-n cycle; the base plan
    recolors the interior layers (its palette embeds into the prism's)."""

    prism: Plan
    base: Plan
    n: int
    claimed_colors: int

    @property
    def dims(self) -> tuple[int, ...]:
        return self.prism.dims[:-1] + (self.n,)

    def describe(self) -> str:
        return f"Lift({self.prism.describe()}, {self.base.describe()}, {self.n})"


@dataclass(frozen=True)
class Embed:
    child: Plan
    claimed_colors: int

    @property
    def dims(self) -> tuple[int, ...]:
        return self.child.dims

    def describe(self) -> str:
        return f"Embed({self.child.describe()}, {self.claimed_colors})"


def plan_to_coloring(plan: Plan) -> Coloring:
    """Rebuild the coloring a plan describes (claimed_colors must match)."""
    if isinstance(plan, CycleLeaf):
        return cycle_coloring(plan.n)
    if isinstance(plan, PrismLeaf):
        return prism_coloring(plan.n)
    if isinstance(plan, Product):
        built = [plan_to_coloring(c) for c in plan.children]
        out = built[0]
        for nxt in built[1:]:
            out = product_coloring(out, nxt)
        return out
    if isinstance(plan, Lift):
        return lift_coloring(plan_to_coloring(plan.prism), plan_to_coloring(plan.base), plan.n)
    if isinstance(plan, Embed):
        inner = plan_to_coloring(plan.child)
        return relabel(
            inner, PaletteInjection.identity(inner.palette_size, plan.claimed_colors)
        )
    raise TypeError(f"unknown plan node {plan!r}")


def plan_to_dict(plan: Plan) -> dict:
    if isinstance(plan, CycleLeaf):
        return {"kind": "cycle", "n": plan.n, "colors": plan.claimed_colors}
    if isinstance(plan, PrismLeaf):
        return {"kind": "prism", "n": plan.n, "colors": plan.claimed_colors}
    if isinstance(plan, Product):
        return {
            "kind": "product",
            "children": [plan_to_dict(c) for c in plan.children],
            "colors": plan.claimed_colors,
        }
    if isinstance(plan, Lift):
        return {
            "kind": "lift",
            "prism": plan_to_dict(plan.prism),
            "base": plan_to_dict(plan.base),
            "n": plan.n,
            "colors": plan.claimed_colors,
        }
    if isinstance(plan, Embed):
        return {"kind": "embed", "child": plan_to_dict(plan.child), "colors": plan.claimed_colors}
    raise TypeError(f"unknown plan node {plan!r}")


def plan_from_dict(data: dict) -> Plan:
    kind = data["kind"]
    colors = int(data["colors"])
    if kind == "cycle":
        return CycleLeaf(int(data["n"]), colors)
    if kind == "prism":
        return PrismLeaf(int(data["n"]), colors)
    if kind == "product":
        return Product(tuple(plan_from_dict(c) for c in data["children"]), colors)
    if kind == "lift":
        return Lift(plan_from_dict(data["prism"]), plan_from_dict(data["base"]), int(data["n"]), colors)
    if kind == "embed":
        return Embed(plan_from_dict(data["child"]), colors)
    raise ValueError(f"unknown plan kind {kind!r}")


# -- bound formulas ----------------------------------------------------------


def old_bounds(dims) -> tuple[int, int]:
    """(sum of floor(n/2), sum of ceil(n/2)): the diameter lower bound and
    the per-factor product upper bound."""
    shape = make_shape(dims)
    return (
        sum(n // 2 for n in shape.dims),
        sum((n + 1) // 2 for n in shape.dims),
    )


def theorem_bound(dims) -> int:
    """Improved upper bound on the strong rainbow connection number.

    With mu even factors among r, every even-odd pairing saves one color:
    ceil((sum - mu)/2) while mu <= floor(r/2), else ceil((sum - r + mu)/2).
    """
    shape = make_shape(dims)
    r = shape.r
    total = sum(shape.dims)
    mu = sum(1 for n in shape.dims if n % 2 == 0)
    if mu <= r // 2:
        return (total - mu + 1) // 2
    return (total - r + mu + 1) // 2


@dataclass(frozen=True)
class BoundsReport:
    """Bound values for one dims tuple plus what the planner achieved.

    axis_order maps each axis of the produced coloring back to the position
    of its factor in the caller's dims order.
    """

    dims: tuple[int, ...]
    mu: int
    diameter_lower: int
    old_upper: int
    new_upper: int
    achieved_colors: int
    axis_order: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "mu": self.mu,
            "diameter_lower": self.diameter_lower,
            "old_upper": self.old_upper,
            "new_upper": self.new_upper,
            "achieved_colors": self.achieved_colors,
            "axis_order": list(self.axis_order),
        }


# -- construction helpers ----------------------------------------------------


def _cycle_pc(n: int) -> tuple[Plan, Coloring]:
    col = cycle_coloring(n)
    return CycleLeaf(n, col.palette_size), col


def _prism_pc(n: int) -> tuple[Plan, Coloring]:
    col = prism_coloring(n)
    return PrismLeaf(n, col.palette_size), col


def _lift_pc(prism_pc, base_pc, n: int) -> tuple[Plan, Coloring]:
    prism_plan, prism_col = prism_pc
    base_plan, base_col = base_pc
    col = lift_coloring(prism_col, base_col, n)
    return Lift(prism_plan, base_plan, n, col.palette_size), col


def _product_fold(components):
    """Combine (plan, coloring, axes) components; a single component passes
    through without a Product wrapper."""
    if len(components) == 1:
        return components[0]
    plans = tuple(c[0] for c in components)
    coloring = components[0][1]
    for _, col, _ in components[1:]:
        coloring = product_coloring(coloring, col)
    axes = [a for _, _, ax in components for a in ax]
    return Product(plans, coloring.palette_size), coloring, axes


def _s7_all_odd(ns: list[int]) -> tuple[Plan, Coloring]:
    """Recursive chain for odd factors (descending): peel the last factor by
    lifting a prism-extended coloring of the rest over it."""
    r = len(ns)
    if r == 1:
        return _cycle_pc(ns[0])
    if r == 2:
        return _lift_pc(_prism_pc(ns[0]), _cycle_pc(ns[0]), ns[1])
    head_plan, head_col = _s7_all_odd(ns[: r - 2])
    prism_plan, prism_col = _prism_pc(ns[r - 2])
    prism_like = (
        Product((head_plan, prism_plan), head_col.palette_size + prism_col.palette_size),
        product_coloring(head_col, prism_col),
    )
    return _lift_pc(prism_like, _s7_all_odd(ns[: r - 1]), ns[r - 1])


def _s7_build(items: list[tuple[int, int]]):
    """(plan, coloring, axes) for arbitrary factors tagged with their
    original positions: odd factors descending via the lift chain, then one
    fresh cycle palette per even factor (descending)."""
    odds = sorted((it for it in items if it[0] % 2 == 1), key=lambda t: (-t[0], t[1]))
    evens = sorted((it for it in items if it[0] % 2 == 0), key=lambda t: (-t[0], t[1]))
    components = []
    if odds:
        plan, col = _s7_all_odd([n for n, _ in odds])
        components.append((plan, col, [i for _, i in odds]))
    for n, i in evens:
        plan, col = _cycle_pc(n)
        components.append((plan, col, [i]))
    return _product_fold(components)


def s7_coloring(dims) -> Coloring:
    """Strong rainbow coloring with at most ceil((n_1 + ... + n_r)/2) colors.

    Axis order of the result: odd factors descending, then even factors
    descending.
    """
    shape = make_shape(dims)
    _, coloring, _ = _s7_build(list(zip(shape.dims, range(shape.r))))
    return coloring


def _pair_build(n_even: int, n_odd: int) -> tuple[Plan, Coloring]:
    if n_even % 2 != 0 or n_even < 2:
        raise ParityMismatchError(f"{n_even} is not an even cycle length")
    if n_odd % 2 != 1 or n_odd < 3:
        raise ParityMismatchError(f"{n_odd} is not an odd cycle length >= 3")
    if n_even == 2:
        return _prism_pc(n_odd)
    return _lift_pc(_prism_pc(n_odd), _cycle_pc(n_odd), n_even)


def pair_coloring(n_even: int, n_odd: int) -> Coloring:
    """Coloring of C_{n_odd} x C_{n_even} with (n_even + n_odd - 1)/2 colors:
    one color fewer than coloring the two factors separately."""
    return _pair_build(n_even, n_odd)[1]


def plan_and_color(dims) -> tuple[Plan, Coloring, BoundsReport]:
    """Assemble a coloring of the whole mesh meeting the improved bound.

    Evens and odds are each sorted descending and paired positionally; every
    pair is colored by pair_coloring, all leftover same-parity factors
    jointly by the recursive chain, and the pieces are combined with
    disjoint-palette products.
    """
    shape = make_shape(dims)
    dims = shape.dims
    evens = sorted(((n, i) for i, n in enumerate(dims) if n % 2 == 0), key=lambda t: (-t[0], t[1]))
    odds = sorted(((n, i) for i, n in enumerate(dims) if n % 2 == 1), key=lambda t: (-t[0], t[1]))
    pair_count = min(len(evens), len(odds))

    components = []
    for j in range(pair_count):
        n_even, even_idx = evens[j]
        n_odd, odd_idx = odds[j]
        plan, col = _pair_build(n_even, n_odd)
        components.append((plan, col, [odd_idx, even_idx]))
    leftover = evens[pair_count:] + odds[pair_count:]
    if leftover:
        components.append(_s7_build(leftover))

    plan, coloring, axes = _product_fold(components)
    lower, old_upper = old_bounds(dims)
    report = BoundsReport(
        dims=dims,
        mu=len(evens),
        diameter_lower=lower,
        old_upper=old_upper,
        new_upper=theorem_bound(dims),
        achieved_colors=coloring.palette_size,
        axis_order=tuple(axes),
    )
    return plan, coloring, report
