"""Shared test helpers: independent oracles built on networkx BFS.

Nothing here reuses the package's closed-form distance or geodesic-DAG
navigation; expected values come from explicit graph construction and
shortest-path enumeration so the two routes can disagree loudly.
"""

from __future__ import annotations

import random

import networkx as nx

from torusrainbow import Coloring, TorusShape


def nx_graph(shape: TorusShape) -> nx.Graph:
    """The mesh as an explicit networkx graph (adjacency rule, no package edges)."""
    graph = nx.Graph()
    dims = shape.dims
    for v in shape.vertices():
        graph.add_node(v)
    for v in shape.vertices():
        for k, n in enumerate(dims):
            w = v[:k] + ((v[k] + 1) % n,) + v[k + 1 :]
            if w != v:
                graph.add_edge(v, w)
    return graph


def path_colors(coloring: Coloring, path) -> list[int]:
    shape = coloring.shape
    return [coloring.color_of(shape.edge_between(a, b)) for a, b in zip(path, path[1:])]


def is_rainbow_path(coloring: Coloring, path) -> bool:
    colors = path_colors(coloring, path)
    return len(set(colors)) == len(colors)


def brute_pair_ok(coloring: Coloring, graph: nx.Graph, u, v) -> bool:
    """Exhaustively enumerate all shortest paths and look for a rainbow one."""
    if u == v:
        return True
    return any(is_rainbow_path(coloring, p) for p in nx.all_shortest_paths(graph, u, v))


def brute_failing_pairs(coloring: Coloring) -> list:
    graph = nx_graph(coloring.shape)
    nodes = sorted(graph.nodes)
    bad = []
    for i, u in enumerate(nodes):
        for v in nodes[i + 1 :]:
            if not brute_pair_ok(coloring, graph, u, v):
                bad.append((u, v))
    return bad


def random_coloring(shape: TorusShape, palette_size: int, rng: random.Random) -> Coloring:
    slots = [-1] * shape.num_edge_slots
    for e in shape.edges():
        slots[shape.edge_slot(e)] = rng.randrange(palette_size)
    return Coloring(shape, palette_size, tuple(slots))
