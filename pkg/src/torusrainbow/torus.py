"""Toroidal meshes: products of cycles with canonical edges and geodesic navigation.

A shape ``(n_1, ..., n_r)`` models the graph whose vertices are coordinate
tuples and whose edges step one coordinate by +-1 modulo its cycle length.
A length-2 factor contributes a single edge per vertex pair (simple graph,
no doubled edges), so its canonical edges are based at coordinate 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

from .errors import (
    CoordOutOfRangeError,
    DimTooSmallError,
    EmptyDimsError,
    NotAdjacentError,
    SameVertexError,
)

Vertex = tuple  # coordinate tuple, coords[k] in [0, n_k)


class Edge(NamedTuple):
    """Canonical unordered mesh edge: the pair {base, base + e_axis mod n}.

    For an axis of length 2 the base always has coordinate 0 on that axis.
    """

    base: Vertex
    axis: int


@dataclass(frozen=True)
class TorusShape:
    """Dimension vector (n_1, ..., n_r) of a toroidal mesh."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(n) for n in self.dims)
        if not dims:
            raise EmptyDimsError("a torus needs at least one cycle length")
        for k, n in enumerate(dims):
            if n < 2:
                raise DimTooSmallError(axis=k, value=n)
        object.__setattr__(self, "dims", dims)

    @property
    def r(self) -> int:
        return len(self.dims)

    @cached_property
    def vertex_count(self) -> int:
        return math.prod(self.dims)

    @cached_property
    def edge_count(self) -> int:
        v = self.vertex_count
        return sum(v if n >= 3 else v // 2 for n in self.dims)

    @cached_property
    def _strides(self) -> tuple[int, ...]:
        # row-major: last coordinate varies fastest
        strides = [1] * self.r
        for k in range(self.r - 2, -1, -1):
            strides[k] = strides[k + 1] * self.dims[k + 1]
        return tuple(strides)

    # -- vertex indexing ---------------------------------------------------

    def check_vertex(self, v: Vertex) -> None:
        if len(v) != self.r:
            raise CoordOutOfRangeError(f"vertex {v} has {len(v)} coords, shape has {self.r} axes")
        for k, c in enumerate(v):
            if not 0 <= c < self.dims[k]:
                raise CoordOutOfRangeError(f"coordinate {c} out of [0, {self.dims[k]}) on axis {k}")

    def vertex_id(self, v: Vertex) -> int:
        vid = 0
        for c, s in zip(v, self._strides):
            vid += c * s
        return vid

    def coords_of(self, vid: int) -> Vertex:
        out = []
        for n, s in zip(self.dims, self._strides):
            out.append((vid // s) % n)
        return tuple(out)

    def vertices(self) -> Iterator[Vertex]:
        """All vertices in row-major order."""
        v = [0] * self.r
        dims = self.dims
        while True:
            yield tuple(v)
            k = self.r - 1
            while k >= 0:
                v[k] += 1
                if v[k] < dims[k]:
                    break
                v[k] = 0
                k -= 1
            if k < 0:
                return

    # -- edges -------------------------------------------------------------

    def edges(self) -> Iterator[Edge]:
        """All canonical edges, axis-major then base vertex in row-major order."""
        for axis in range(self.r):
            two = self.dims[axis] == 2
            for v in self.vertices():
                if two and v[axis] == 1:
                    continue
                yield Edge(v, axis)

    def edge(self, base: Vertex, axis: int) -> Edge:
        """Canonicalize and validate an edge given by a base vertex and axis."""
        self.check_vertex(base)
        if not 0 <= axis < self.r:
            raise CoordOutOfRangeError(f"axis {axis} out of [0, {self.r})")
        if self.dims[axis] == 2 and base[axis] == 1:
            base = base[:axis] + (0,) + base[axis + 1 :]
        return Edge(base, axis)

    def edge_endpoints(self, e: Edge) -> tuple[Vertex, Vertex]:
        n = self.dims[e.axis]
        other = e.base[: e.axis] + ((e.base[e.axis] + 1) % n,) + e.base[e.axis + 1 :]
        return e.base, other

    def edge_between(self, u: Vertex, v: Vertex) -> Edge:
        """The canonical edge joining two adjacent vertices."""
        self.check_vertex(u)
        self.check_vertex(v)
        axis = None
        for k in range(self.r):
            if u[k] != v[k]:
                if axis is not None:
                    raise NotAdjacentError(f"{u} and {v} differ on more than one axis")
                axis = k
        if axis is None:
            raise NotAdjacentError(f"{u} and {v} are the same vertex")
        n = self.dims[axis]
        d = (v[axis] - u[axis]) % n
        if d == 1:
            base = u
        elif d == n - 1:
            base = v
        else:
            raise NotAdjacentError(f"{u} and {v} are {d} apart on axis {axis}")
        if n == 2 and base[axis] == 1:
            base = base[:axis] + (0,) + base[axis + 1 :]
        return Edge(base, axis)

    def edge_slot(self, e: Edge) -> int:
        """Flat index of a canonical edge inside an axis-major slot table."""
        return e.axis * self.vertex_count + self.vertex_id(e.base)

    @property
    def num_edge_slots(self) -> int:
        return self.r * self.vertex_count

    def neighbors(self, v: Vertex) -> list[Vertex]:
        """Adjacent vertices, ascending axis, +1 before -1, no duplicates."""
        self.check_vertex(v)
        out = []
        for k, n in enumerate(self.dims):
            plus = v[:k] + ((v[k] + 1) % n,) + v[k + 1 :]
            out.append(plus)
            if n > 2:
                minus = v[:k] + ((v[k] - 1) % n,) + v[k + 1 :]
                out.append(minus)
        return out

    # -- metric ------------------------------------------------------------

    def distance(self, u: Vertex, v: Vertex) -> int:
        """Shortest-path distance: cyclic distances add over the factors."""
        self.check_vertex(u)
        self.check_vertex(v)
        total = 0
        for k, n in enumerate(self.dims):
            d = abs(u[k] - v[k])
            total += min(d, n - d)
        return total

    def diameter(self) -> int:
        return sum(n // 2 for n in self.dims)

    def geodesic_successors(self, u: Vertex, v: Vertex) -> list[Vertex]:
        """Neighbors of u one step closer to v, ascending axis, +1 before -1.

        On an even axis whose offset is exactly half the cycle both
        directions shorten the path; both are returned (once each -- on a
        length-2 axis they coincide in a single neighbor).
        """
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise SameVertexError(f"no geodesic successors from {u} to itself")
        out = []
        for k, n in enumerate(self.dims):
            d = (v[k] - u[k]) % n
            if d == 0:
                continue
            if 2 * d <= n:
                out.append(u[:k] + ((u[k] + 1) % n,) + u[k + 1 :])
            if 2 * d >= n and n > 2:
                out.append(u[:k] + ((u[k] - 1) % n,) + u[k + 1 :])
        return out


def make_shape(dims) -> TorusShape:
    """Validated shape with deterministic vertex and edge iteration order."""
    return TorusShape(tuple(dims))


def distance(shape: TorusShape, u: Vertex, v: Vertex) -> int:
    return shape.distance(u, v)


def diameter(shape: TorusShape) -> int:
    return shape.diameter()


def geodesic_successors(shape: TorusShape, u: Vertex, v: Vertex) -> list[Vertex]:
    return shape.geodesic_successors(u, v)
