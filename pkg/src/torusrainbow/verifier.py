"""Strong-rainbow verification: find a rainbow geodesic for every vertex pair.

The search walks the geodesic DAG toward the target (every move strictly
decreases the remaining distance), carrying the used colors as a bit set
and memoizing failed (vertex, color-set) states.  Pairs are independent, so
the full sweep can optionally fan out over worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .colorings import Coloring, prism_coloring
from .errors import BadParityError, IncompleteColoringError
from .torus import TorusShape, Vertex


class _GeodesicSearch:
    """Flat-array navigation context for one coloring."""

    def __init__(self, coloring: Coloring):
        shape = coloring.shape
        v_count = shape.vertex_count
        r = shape.r
        dims = shape.dims
        coord = [[0] * v_count for _ in range(r)]
        plus1 = [[0] * v_count for _ in range(r)]
        minus1 = [[0] * v_count for _ in range(r)]
        strides = shape._strides
        for vid in range(v_count):
            for a in range(r):
                n = dims[a]
                s = strides[a]
                c = (vid // s) % n
                coord[a][vid] = c
                plus1[a][vid] = vid + s if c + 1 < n else vid - (n - 1) * s
                minus1[a][vid] = vid - s if c > 0 else vid + (n - 1) * s
        self.shape = shape
        self.v_count = v_count
        self.dims = dims
        self.coord = coord
        self.plus1 = plus1
        self.minus1 = minus1
        self.colors = coloring.slots
        self.palette_size = coloring.palette_size

    def search(self, u: int, v: int) -> Optional[list[int]]:
        """A rainbow geodesic from u to v as vertex ids, or None.

        Successor order matches TorusShape.geodesic_successors (ascending
        axis, +1 before -1), so witnesses are deterministic: the leftmost
        rainbow path of the search tree.  A non-backtracking walk tries the
        leftmost branch first; only a color collision there triggers the
        full memoized DFS.
        """
        if u == v:
            return [u]
        dims = self.dims
        coord = self.coord
        plus1 = self.plus1
        minus1 = self.minus1
        colors = self.colors
        v_count = self.v_count
        r = len(dims)
        kbits = self.palette_size

        tv = [coord[a][v] for a in range(r)]
        w = u
        mask = 0
        path = [u]
        while w != v:
            stuck = True
            for a in range(r):
                ca = coord[a]
                cw = ca[w]
                d = tv[a] - cw
                if d == 0:
                    continue
                n = dims[a]
                d %= n
                if 2 * d <= n:
                    w2 = plus1[a][w]
                    base = w if (n > 2 or cw == 0) else w2
                else:
                    w2 = minus1[a][w]
                    base = w2
                bit = 1 << colors[a * v_count + base]
                if not mask & bit:
                    mask |= bit
                    path.append(w2)
                    w = w2
                    stuck = False
                break
            if stuck:
                break
        if w == v:
            return path

        memo: set[int] = set()

        def dfs(w: int, mask: int) -> Optional[list[int]]:
            state = (w << kbits) | mask
            if state in memo:
                return None
            for a in range(r):
                n = dims[a]
                ca = coord[a]
                cw = ca[w]
                d = ca[v] - cw
                if d == 0:
                    continue
                d %= n
                dd = 2 * d
                if dd <= n:
                    w2 = plus1[a][w]
                    base = w if (n > 2 or cw == 0) else w2
                    bit = 1 << colors[a * v_count + base]
                    if not mask & bit:
                        if w2 == v:
                            return [w, v]
                        rest = dfs(w2, mask | bit)
                        if rest is not None:
                            return [w] + rest
                if dd >= n and n > 2:
                    w2 = minus1[a][w]
                    bit = 1 << colors[a * v_count + w2]
                    if not mask & bit:
                        if w2 == v:
                            return [w, v]
                        rest = dfs(w2, mask | bit)
                        if rest is not None:
                            return [w] + rest
            memo.add(state)
            return None

        return dfs(u, 0)


def _check_complete(coloring: Coloring) -> None:
    shape = coloring.shape
    for e in shape.edges():
        if coloring.slots[shape.edge_slot(e)] < 0:
            raise IncompleteColoringError(f"edge {e} has no color")


def rainbow_geodesic(coloring: Coloring, u: Vertex, v: Vertex) -> Optional[list[Vertex]]:
    """A shortest path from u to v whose edge colors are pairwise distinct.

    Returns the vertex sequence (just [u] when u == v) or None when every
    geodesic repeats a color.
    """
    shape = coloring.shape
    shape.check_vertex(u)
    shape.check_vertex(v)
    _check_complete(coloring)
    ctx = _GeodesicSearch(coloring)
    path = ctx.search(shape.vertex_id(u), shape.vertex_id(v))
    if path is None:
        return None
    return [shape.coords_of(vid) for vid in path]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a full pair sweep; passed iff failing_pairs is empty."""

    shape: TorusShape
    palette_size: int
    pairs_checked: int
    passed: bool
    failing_pairs: tuple[tuple[Vertex, Vertex], ...]
    witnesses: dict = field(default_factory=dict, compare=False)


def _sweep_range(coloring: Coloring, u_lo: int, u_hi: int, witness_cap: int):
    """Check all pairs (u, v) with u_lo <= u < u_hi, u < v; collect failures
    and up to witness_cap witnesses (in pair order)."""
    ctx = _GeodesicSearch(coloring)
    shape = coloring.shape
    v_count = ctx.v_count
    checked = 0
    failing = []
    witnesses = []
    for u in range(u_lo, u_hi):
        for v in range(u + 1, v_count):
            checked += 1
            path = ctx.search(u, v)
            if path is None:
                failing.append((shape.coords_of(u), shape.coords_of(v)))
            elif len(witnesses) < witness_cap:
                coords = [shape.coords_of(w) for w in path]
                witnesses.append(((coords[0], coords[-1]), coords))
    return checked, failing, witnesses


def _sweep_task(args):
    return _sweep_range(*args)


def is_strong_rainbow(
    coloring: Coloring, witness_cap: int = 16, workers: int | None = None
) -> VerificationReport:
    """Decide whether every vertex pair has a rainbow geodesic.

    The verdict and report are deterministic regardless of worker count;
    witnesses are the first witness_cap passing pairs in row-major pair
    order.
    """
    _check_complete(coloring)
    v_count = coloring.shape.vertex_count
    parts = []
    if workers and workers > 1 and v_count >= 64:
        bounds = [round(i * v_count / (workers * 4)) for i in range(workers * 4 + 1)]
        chunks = [
            (coloring, lo, hi, witness_cap)
            for lo, hi in zip(bounds, bounds[1:])
            if lo < hi
        ]
        try:
            import multiprocessing

            with multiprocessing.get_context("fork").Pool(workers) as pool:
                parts = pool.map(_sweep_task, chunks)
        except (ImportError, OSError, ValueError):
            parts = []
    if not parts:
        parts = [_sweep_range(coloring, 0, v_count, witness_cap)]

    checked = 0
    failing: list = []
    witnesses: dict = {}
    for part_checked, part_failing, part_witnesses in parts:
        checked += part_checked
        failing.extend(part_failing)
        for pair, path in part_witnesses:
            if len(witnesses) < witness_cap:
                witnesses[pair] = path
    return VerificationReport(
        shape=coloring.shape,
        palette_size=coloring.palette_size,
        pairs_checked=checked,
        passed=not failing,
        failing_pairs=tuple(failing),
        witnesses=witnesses,
    )


# -- replay of the prism path tables ----------------------------------------


@dataclass(frozen=True)
class RowResult:
    label: str
    instances: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class TablePathsReport:
    n: int
    table: int  # 1 for even n, 2 for odd n
    rows: tuple[RowResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def instances(self) -> int:
        return sum(r.instances for r in self.rows)


def _up(a: int, b: int, s: int) -> list[Vertex]:
    return [(x, s) for x in range(a, b + 1)]


def _down(a: int, b: int, s: int) -> list[Vertex]:
    return [(x, s) for x in range(a, b - 1, -1)]


def _table1_rows(n: int):
    """Path families covering C_n x C_2 with even n: ring arcs in one layer,
    and rung-first arcs across layers, split by arc direction."""
    k = n // 2
    idx = range(n)
    layers = (0, 1)

    def fam(label, gen):
        return label, list(gen)

    return [
        fam(
            "is->js, 1<=j-i<=k: ascend in layer",
            (((i, s), (j, s), _up(i, j, s)) for s in layers for i in idx for j in idx if 1 <= j - i <= k),
        ),
        fam(
            "is->js, j-i>=k+1: ascend from j through the seam",
            (((i, s), (j, s), _up(j, n - 1, s) + _up(0, i, s)) for s in layers for i in idx for j in idx if j - i >= k + 1),
        ),
        fam(
            "is->js, 1<=i-j<=k: ascend from j",
            (((i, s), (j, s), _up(j, i, s)) for s in layers for i in idx for j in idx if 1 <= i - j <= k),
        ),
        fam(
            "is->js, i-j>=k+1: ascend from i through the seam",
            (((i, s), (j, s), _up(i, n - 1, s) + _up(0, j, s)) for s in layers for i in idx for j in idx if i - j >= k + 1),
        ),
        fam(
            "i0->j1, 1<=j-i<=k: rung then ascend",
            (((i, 0), (j, 1), [(i, 0)] + _up(i, j, 1)) for i in idx for j in idx if 1 <= j - i <= k),
        ),
        fam(
            "i0->j1, j-i>=k+1: rung at j then ascend through the seam",
            (((i, 0), (j, 1), [(j, 0)] + _up(j, n - 1, 1) + _up(0, i, 1)) for i in idx for j in idx if j - i >= k + 1),
        ),
        fam(
            "i0->j1, 1<=i-j<=k: rung at j then ascend",
            (((i, 0), (j, 1), [(j, 0)] + _up(j, i, 1)) for i in idx for j in idx if 1 <= i - j <= k),
        ),
        fam(
            "i0->j1, i-j>=k+1: rung at i then ascend through the seam",
            (((i, 0), (j, 1), [(i, 0)] + _up(i, n - 1, 1) + _up(0, j, 1)) for i in idx for j in idx if i - j >= k + 1),
        ),
    ]


def _table2_rows(n: int):
    """Path families covering C_n x C_2 with odd n, organized by the ring
    position of the layer-0 endpoint."""
    k = (n - 1) // 2
    idx = range(n)
    layers = (0, 1)

    def fam(label, gen):
        return label, list(gen)

    return [
        fam(
            "is->js, 1<=j-i<=k: ascend in layer",
            (((i, s), (j, s), _up(i, j, s)) for s in layers for i in idx for j in idx if 1 <= j - i <= k),
        ),
        fam(
            "is->js, j-i>=k+1: ascend from j through the seam",
            (((i, s), (j, s), _up(j, n - 1, s) + _up(0, i, s)) for s in layers for i in idx for j in idx if j - i >= k + 1),
        ),
        fam(
            "is->js, 1<=i-j<=k: ascend from j",
            (((i, s), (j, s), _up(j, i, s)) for s in layers for i in idx for j in idx if 1 <= i - j <= k),
        ),
        fam(
            "is->js, i-j>=k+1: ascend from i through the seam",
            (((i, s), (j, s), _up(i, n - 1, s) + _up(0, j, s)) for s in layers for i in idx for j in idx if i - j >= k + 1),
        ),
        fam(
            "00->j1, 0<=j<=k: rung then ascend",
            (((0, 0), (j, 1), [(0, 0)] + _up(0, j, 1)) for j in idx if j <= k),
        ),
        fam(
            "00->j1, k+1<=j<=2k: rung then descend through the seam",
            (((0, 0), (j, 1), [(0, 0), (0, 1)] + _down(n - 1, j, 1)) for j in idx if k + 1 <= j),
        ),
        fam(
            "10->j1, 1<=j<=k+1: ascend then rung",
            (((1, 0), (j, 1), _up(1, j, 0) + [(j, 1)]) for j in idx if 1 <= j <= k + 1),
        ),
        fam(
            "10->j1, j=0 or k+2<=j<=2k: back through 00 then descend",
            (
                ((1, 0), (j, 1), [(1, 0), (0, 0), (0, 1)] + (_down(n - 1, j, 1) if j else []))
                for j in idx
                if j == 0 or k + 2 <= j
            ),
        ),
        fam(
            "i0->j1, 2<=i<=k-1, 0<=j<=i: rung then descend",
            (((i, 0), (j, 1), [(i, 0)] + _down(i, j, 1)) for i in range(2, k) for j in idx if j <= i),
        ),
        fam(
            "i0->j1, 2<=i<=k-1, i+1<=j<=i+k: ascend then rung",
            (((i, 0), (j, 1), _up(i, j, 0) + [(j, 1)]) for i in range(2, k) for j in idx if i + 1 <= j <= i + k),
        ),
        fam(
            "i0->j1, 2<=i<=k-1, i+k+1<=j<=2k: descend to 00 then seam",
            (
                ((i, 0), (j, 1), _down(i, 0, 0) + [(0, 1)] + _down(n - 1, j, 1))
                for i in range(2, k)
                for j in idx
                if i + k + 1 <= j
            ),
        ),
        fam(
            "k0->j1, 0<=j<=k: rung then descend",
            (((k, 0), (j, 1), [(k, 0)] + _down(k, j, 1)) for j in idx if j <= k),
        ),
        fam(
            "k0->j1, k+1<=j<=2k: ascend then rung",
            (((k, 0), (j, 1), _up(k, j, 0) + [(j, 1)]) for j in idx if k + 1 <= j),
        ),
        fam(
            "i0->j1, k+1<=i<=2k-1, 0<=j<=i-k-1: ascend through the seam to 00",
            (
                ((i, 0), (j, 1), _up(i, n - 1, 0) + [(0, 0)] + _up(0, j, 1))
                for i in range(k + 1, n - 1)
                for j in idx
                if j <= i - k - 1
            ),
        ),
        fam(
            "i0->j1, k+1<=i<=2k-1, i-k<=j<=i: rung then descend",
            (
                ((i, 0), (j, 1), [(i, 0)] + _down(i, j, 1))
                for i in range(k + 1, n - 1)
                for j in idx
                if i - k <= j <= i
            ),
        ),
        fam(
            "i0->j1, k+1<=i<=2k-1, i+1<=j<=2k: ascend then rung",
            (
                ((i, 0), (j, 1), _up(i, j, 0) + [(j, 1)])
                for i in range(k + 1, n - 1)
                for j in idx
                if i + 1 <= j
            ),
        ),
        fam(
            "(2k)0->j1, 0<=j<=k-1: seam to 00 then ascend",
            (((n - 1, 0), (j, 1), [(n - 1, 0), (0, 0)] + _up(0, j, 1)) for j in idx if j <= k - 1),
        ),
        fam(
            "(2k)0->j1, k<=j<=2k: rung then descend",
            (((n - 1, 0), (j, 1), [(n - 1, 0)] + _down(n - 1, j, 1)) for j in idx if k <= j),
        ),
    ]


def _check_listed_path(coloring: Coloring, u: Vertex, v: Vertex, path: list[Vertex]) -> Optional[str]:
    """One table instance: a simple path, geodesic for the row's pair, rainbow."""
    shape = coloring.shape
    if len(set(path)) != len(path):
        return f"{u}->{v}: repeated vertex in {path}"
    seen_colors = set()
    for a, b in zip(path, path[1:]):
        if shape.distance(a, b) != 1:
            return f"{u}->{v}: {a} and {b} not adjacent"
        c = coloring.color_of(shape.edge_between(a, b))
        if c in seen_colors:
            return f"{u}->{v}: color {c} repeated along {path}"
        seen_colors.add(c)
    hops = len(path) - 1
    if hops != shape.distance(u, v):
        return f"{u}->{v}: length {hops} != distance {shape.distance(u, v)}"
    if hops != shape.distance(path[0], path[-1]):
        return f"{u}->{v}: length {hops} != endpoint distance"
    return None


def verify_table_paths(n: int) -> TablePathsReport:
    """Replay every listed path family for C_n x C_2 under the prism coloring.

    Even n >= 4 uses the even-table families, odd n >= 5 the odd-table ones;
    each family is instantiated for every index choice meeting its condition.
    """
    if n % 2 == 0 and n >= 4:
        table, rows = 1, _table1_rows(n)
    elif n % 2 == 1 and n >= 5:
        table, rows = 2, _table2_rows(n)
    else:
        raise BadParityError(f"no path table for n={n} (need even >= 4 or odd >= 5)")
    coloring = prism_coloring(n)
    results = []
    for label, instances in rows:
        failures = []
        for u, v, path in instances:
            problem = _check_listed_path(coloring, u, v, path)
            if problem is not None:
                failures.append(problem)
        results.append(RowResult(label=label, instances=len(instances), failures=tuple(failures)))
    return TablePathsReport(n=n, table=table, rows=tuple(results))
