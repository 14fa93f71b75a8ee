"""Edge colorings of toroidal meshes and the constructions that compose them.

Every constructor here emits a coloring that the geodesic verifier accepts:
single cycles, prisms C_n x C_2 (separate even/odd rules), disjoint-palette
products, and the layered lift that extends a prism coloring of G x C_2 to
G x C_n at the cost of ceil((n-2)/2) extra colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import (
    ColorOutOfRangeError,
    DimTooSmallError,
    IncompleteColoringError,
    NotInjectiveError,
    PaletteTooLargeError,
    ShapeMismatchError,
)
from .torus import Edge, TorusShape, make_shape


@dataclass(frozen=True)
class Coloring:
    """Total map from the canonical edges of a shape to colors in [0, palette_size).

    The slot table is axis-major (see TorusShape.edge_slot); slots that do
    not correspond to a canonical edge hold -1.
    """

    shape: TorusShape
    palette_size: int
    slots: tuple[int, ...]

    def __post_init__(self):
        if self.palette_size < 1:
            raise ColorOutOfRangeError(f"palette size {self.palette_size} must be >= 1")
        if len(self.slots) != self.shape.num_edge_slots:
            raise IncompleteColoringError(
                f"slot table has {len(self.slots)} entries, shape needs {self.shape.num_edge_slots}"
            )

    def color_of(self, e: Edge) -> int:
        c = self.slots[self.shape.edge_slot(e)]
        if c < 0:
            raise IncompleteColoringError(f"edge {e} has no color")
        return c

    def edge_colors(self) -> Iterator[tuple[Edge, int]]:
        """(edge, color) pairs in canonical edge order."""
        for e in self.shape.edges():
            yield e, self.color_of(e)

    def used_colors(self) -> set[int]:
        return {c for _, c in self.edge_colors()}

    def is_tight(self) -> bool:
        """True when every color in [0, palette_size) appears on some edge."""
        return len(self.used_colors()) == self.palette_size

    def recolored(self, e: Edge, color: int) -> "Coloring":
        """Copy with one edge reassigned (palette unchanged)."""
        if not 0 <= color < self.palette_size:
            raise ColorOutOfRangeError(f"color {color} outside [0, {self.palette_size})")
        slots = list(self.slots)
        slots[self.shape.edge_slot(self.shape.edge(*e))] = color
        return Coloring(self.shape, self.palette_size, tuple(slots))

    @classmethod
    def from_edge_map(
        cls, shape: TorusShape, palette_size: int, mapping: Mapping[Edge, int]
    ) -> "Coloring":
        """Build from an explicit edge -> color mapping; must cover every edge."""
        slots = [-1] * shape.num_edge_slots
        for e in shape.edges():
            if e not in mapping:
                raise IncompleteColoringError(f"edge {e} missing from mapping")
            c = mapping[e]
            if not 0 <= c < palette_size:
                raise ColorOutOfRangeError(f"color {c} on edge {e} outside [0, {palette_size})")
            slots[shape.edge_slot(e)] = c
        return cls(shape, palette_size, tuple(slots))


@dataclass(frozen=True)
class PaletteInjection:
    """Injective color map from a palette of source_size into one of target_size."""

    source_size: int
    target_size: int
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.source_size:
            raise NotInjectiveError(
                f"mapping has {len(self.mapping)} entries for source size {self.source_size}"
            )
        if self.target_size < self.source_size:
            raise NotInjectiveError(
                f"cannot inject {self.source_size} colors into {self.target_size}"
            )
        seen = set()
        for c in self.mapping:
            if not 0 <= c < self.target_size or c in seen:
                raise NotInjectiveError(f"mapping {self.mapping} is not injective into target")
            seen.add(c)

    @classmethod
    def identity(cls, source_size: int, target_size: int) -> "PaletteInjection":
        return cls(source_size, target_size, tuple(range(source_size)))

    def apply(self, color: int) -> int:
        return self.mapping[color]


def _fill(shape: TorusShape, color_fn) -> list[int]:
    slots = [-1] * shape.num_edge_slots
    for e in shape.edges():
        slots[shape.edge_slot(e)] = color_fn(e)
    return slots


def cycle_coloring(n: int) -> Coloring:
    """Strong rainbow coloring of a single cycle.

    One color for n in {2, 3}; otherwise edge i gets i mod ceil(n/2), which
    keeps equal colors at circular distance >= floor(n/2), outside any
    geodesic window.
    """
    if n < 2:
        raise DimTooSmallError(axis=0, value=n)
    shape = make_shape([n])
    if n <= 3:
        return Coloring(shape, 1, tuple(_fill(shape, lambda e: 0)))
    k = (n + 1) // 2
    return Coloring(shape, k, tuple(_fill(shape, lambda e: e.base[0] % k)))


def prism_coloring(n: int) -> Coloring:
    """Strong rainbow coloring of C_n x C_2 with ceil((n+1)/2) colors.

    Axis 0 is the length-n ring, axis 1 the rungs.  Even and odd n use
    different piecewise rules (one extra rung color for even n, a rotated
    rung pattern for odd n).
    """
    if n < 3:
        raise DimTooSmallError(axis=0, value=n, minimum=3)
    shape = make_shape([n, 2])
    k = n // 2

    if n % 2 == 0:

        def color_fn(e: Edge) -> int:
            i = e.base[0]
            if e.axis == 1:  # rung {i0, i1}
                return k
            if i <= k - 1:
                return i
            if i <= 2 * k - 2:
                return i - k
            return k - 1  # closing ring edge {(2k-1)j, 0j}

    else:

        def color_fn(e: Edge) -> int:
            i = e.base[0]
            if e.axis == 1:  # rung {i0, i1}
                if i == 0:
                    return k
                if i <= k:
                    return i
                return i - k - 1
            if i <= k:
                return i
            if i <= 2 * k - 1:
                return i - k - 1
            return k - 1  # closing ring edge {(2k)j, 0j}

    return Coloring(shape, (n + 1 + 1) // 2, tuple(_fill(shape, color_fn)))


def product_coloring(a: Coloring, b: Coloring) -> Coloring:
    """Disjoint-palette coloring of the product: a's axes keep a's colors,
    b's axes get b's colors shifted past a's palette.

    Geodesics in a product project to geodesics in each factor, so the
    output is strong rainbow whenever both inputs are.
    """
    ra = a.shape.r
    shape = make_shape(a.shape.dims + b.shape.dims)
    shift = a.palette_size

    def color_fn(e: Edge) -> int:
        if e.axis < ra:
            return a.color_of(Edge(e.base[:ra], e.axis))
        return b.color_of(Edge(e.base[ra:], e.axis - ra)) + shift

    return Coloring(shape, a.palette_size + b.palette_size, tuple(_fill(shape, color_fn)))


def relabel(c: Coloring, inj: PaletteInjection) -> Coloring:
    """Apply an injective color map; the target palette may leave colors unused."""
    if inj.source_size != c.palette_size:
        raise NotInjectiveError(
            f"injection source {inj.source_size} != palette size {c.palette_size}"
        )
    slots = tuple(inj.mapping[s] if s >= 0 else -1 for s in c.slots)
    return Coloring(c.shape, inj.target_size, slots)


def lift_coloring(prism_like: Coloring, base: Coloring, n: int) -> Coloring:
    """Extend a coloring of G x C_2 to G x C_n with ceil((n-2)/2) fresh colors.

    Two opposite rung positions of the length-n ring are colored like the
    C_2 copy (layers 0/n-1 and floor(n/2)-1/floor(n/2), each with the edges
    between them); the remaining inter-layer bundles take the fresh colors,
    mirrored across the two arcs; every other layer repeats the base
    coloring of G.  n = 3 degenerates to a product with one fresh ring
    color.

    Callers must pass strong rainbow inputs; structural preconditions are
    checked here, rainbow-ness is not re-verified.
    """
    if n < 3:
        raise DimTooSmallError(axis=base.shape.r, value=n, minimum=3)
    if prism_like.shape.dims != base.shape.dims + (2,):
        raise ShapeMismatchError(
            f"prism shape {prism_like.shape.dims} is not base shape {base.shape.dims} + (2,)"
        )
    k2 = prism_like.palette_size
    if base.palette_size > k2:
        raise PaletteTooLargeError(
            f"base palette {base.palette_size} does not fit into prism palette {k2}"
        )

    if n == 3:
        embedded = relabel(base, PaletteInjection.identity(base.palette_size, k2))
        return product_coloring(embedded, cycle_coloring(3))

    rb = base.shape.r
    shape = make_shape(base.shape.dims + (n,))
    half = n // 2
    # layer -> C_2 coordinate inside the prism copy that colors it
    prism_side = {0: 0, n - 1: 1, half - 1: 0, half: 1}

    def color_fn(e: Edge) -> int:
        layer = e.base[rb]
        if e.axis == rb:  # bundle between layer and layer+1 (mod n)
            if layer == n - 1 or layer == half - 1:
                return prism_like.color_of(Edge(e.base[:rb] + (0,), rb))
            if layer <= half - 2:
                return k2 + layer
            return k2 + (layer - half)
        side = prism_side.get(layer)
        if side is not None:
            return prism_like.color_of(Edge(e.base[:rb] + (side,), e.axis))
        return base.color_of(Edge(e.base[:rb], e.axis))

    return Coloring(shape, k2 + (n - 1) // 2, tuple(_fill(shape, color_fn)))
