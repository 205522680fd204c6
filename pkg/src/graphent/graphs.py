"""Directed simple graphs, degree bookkeeping, and layered topology generators.

Vertices are 0-based.  Graphs are immutable after construction and simple in
the undirected sense: no self-loops and at most one edge per unordered vertex
pair, whichever way it points.  The generators number layers from the
top/input side and vertices left-to-right within a layer, with all edges
oriented downstream, so identical parameters always produce identical graphs.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "DirectedGraph",
    "DegreeDistribution",
    "TopologySpec",
    "from_edge_list",
    "out_neighbors",
    "in_neighbors",
    "degree",
    "degree_distribution",
    "gen_young_fibonacci",
    "gen_ffnn",
    "gen_full_binary_tree",
    "gen_bridged_cycles",
    "build_topology",
    "permute_vertices",
    "flip_edge",
    "random_graph",
    "to_json",
    "from_json",
    "save_graph",
    "load_graph",
]


@dataclass(frozen=True)
class DirectedGraph:
    """A directed simple graph: vertex count plus an ordered edge list."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.num_vertices < 1:
            raise ValueError(f"num_vertices must be >= 1, got {self.num_vertices}")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        seen: set[tuple[int, int]] = set()
        for a, b in edges:
            if not (0 <= a < self.num_vertices and 0 <= b < self.num_vertices):
                raise ValueError(f"edge ({a},{b}) out of range for {self.num_vertices} vertices")
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            key = (a, b) if a < b else (b, a)
            if key in seen:
                raise ValueError(f"duplicate or anti-parallel edge on pair {key}")
            seen.add(key)

    @property
    def num_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class DegreeDistribution:
    """Map from total degree k to the number of vertices n_k with that degree."""

    counts: Mapping[int, int]

    def __post_init__(self) -> None:
        counts = {int(k): int(n) for k, n in self.counts.items()}
        object.__setattr__(self, "counts", counts)
        if not counts:
            raise ValueError("degree distribution is empty")
        m = sum(counts.values())
        for k, n in counts.items():
            if k < 0 or n < 1:
                raise ValueError(f"invalid entry degree {k} -> count {n}")
            if k > m - 1:
                raise ValueError(f"degree {k} impossible in a simple graph on {m} vertices")

    @property
    def num_vertices(self) -> int:
        return sum(self.counts.values())

    def sorted_items(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())


def from_edge_list(num_vertices: int, edges: Iterable[Sequence[int]]) -> DirectedGraph:
    """Validate and build a graph from an ordered edge list."""
    return DirectedGraph(num_vertices, tuple((e[0], e[1]) for e in edges))


def _check_vertex(g: DirectedGraph, i: int) -> None:
    if not (0 <= i < g.num_vertices):
        raise ValueError(f"vertex {i} out of range for {g.num_vertices} vertices")


def out_neighbors(g: DirectedGraph, i: int) -> set[int]:
    """Vertices reached from i by an outgoing edge."""
    _check_vertex(g, i)
    return {b for a, b in g.edges if a == i}


def in_neighbors(g: DirectedGraph, i: int) -> set[int]:
    """Vertices pointing at i by an incoming edge."""
    _check_vertex(g, i)
    return {a for a, b in g.edges if b == i}


def degree(g: DirectedGraph, i: int) -> int:
    """Total degree of vertex i, ignoring edge orientation."""
    _check_vertex(g, i)
    return sum(1 for a, b in g.edges if a == i or b == i)


def degree_distribution(g: DirectedGraph) -> DegreeDistribution:
    degs = [0] * g.num_vertices
    for a, b in g.edges:
        degs[a] += 1
        degs[b] += 1
    return DegreeDistribution(dict(Counter(degs)))


# ----------------------------------------------------------------------
# Topology generators
# ----------------------------------------------------------------------

def gen_young_fibonacci(num_layers: int) -> DirectedGraph:
    """Triangular layered graph: layer i holds i vertices, and the vertex at
    position j of layer i feeds positions j and j+1 of layer i+1.

    Total vertices: num_layers*(num_layers+1)/2.
    """
    if num_layers < 2:
        raise ValueError(f"need at least 2 layers, got {num_layers}")
    layer_start = []
    nid = 0
    for i in range(1, num_layers + 1):
        layer_start.append(nid)
        nid += i
    edges = []
    for i in range(1, num_layers):  # layer i has i vertices (1-based)
        for j in range(i):
            v = layer_start[i - 1] + j
            edges.append((v, layer_start[i] + j))
            edges.append((v, layer_start[i] + j + 1))
    return DirectedGraph(nid, tuple(edges))


def gen_ffnn(layer_sizes: Sequence[int]) -> DirectedGraph:
    """Layered network with complete bipartite connections between consecutive
    layers, oriented input-to-output."""
    sizes = tuple(int(s) for s in layer_sizes)
    if len(sizes) < 2:
        raise ValueError(f"need at least 2 layers, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise ValueError(f"all layer sizes must be >= 1, got {sizes}")
    layer_start = []
    nid = 0
    for s in sizes:
        layer_start.append(nid)
        nid += s
    edges = []
    for i in range(len(sizes) - 1):
        for u in range(sizes[i]):
            for v in range(sizes[i + 1]):
                edges.append((layer_start[i] + u, layer_start[i + 1] + v))
    return DirectedGraph(nid, tuple(edges))


def gen_full_binary_tree(depth: int) -> DirectedGraph:
    """Full binary tree with `depth` layers (2^depth - 1 vertices), edges
    oriented parent-to-child, heap numbering."""
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    m = 2**depth - 1
    edges = []
    for k in range((m - 1) // 2):
        edges.append((k, 2 * k + 1))
        edges.append((k, 2 * k + 2))
    return DirectedGraph(m, tuple(edges))


def gen_bridged_cycles(cycle_sizes: Sequence[int]) -> DirectedGraph:
    """Chain of directed cycles, consecutive cycles joined by one bridge edge.

    The bridge leaves vertex 0 of cycle i and enters vertex floor(M/2) of
    cycle i+1 (local indices), so the two bridge endpoints inside a middle
    cycle are always distinct for cycle sizes >= 3.
    """
    sizes = tuple(int(s) for s in cycle_sizes)
    if len(sizes) < 2:
        raise ValueError(f"need at least 2 cycles, got {len(sizes)}")
    if any(s < 3 for s in sizes):
        raise ValueError(f"all cycle sizes must be >= 3, got {sizes}")
    cycle_start = []
    nid = 0
    for s in sizes:
        cycle_start.append(nid)
        nid += s
    edges = []
    for i, s in enumerate(sizes):
        for t in range(s):
            edges.append((cycle_start[i] + t, cycle_start[i] + (t + 1) % s))
    for i in range(len(sizes) - 1):
        edges.append((cycle_start[i], cycle_start[i + 1] + sizes[i + 1] // 2))
    return DirectedGraph(nid, tuple(edges))


@dataclass(frozen=True)
class TopologySpec:
    """Parameters selecting one of the four generator families."""

    kind: str  # young-fibonacci | ffnn | binary-tree | bridged-cycles
    layers: int | None = None
    layer_sizes: tuple[int, ...] | None = None
    cycle_sizes: tuple[int, ...] | None = None
    depth: int | None = None

    KINDS = ("young-fibonacci", "ffnn", "binary-tree", "bridged-cycles")

    def __post_init__(self) -> None:
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown topology kind {self.kind!r}")


def build_topology(spec: TopologySpec) -> DirectedGraph:
    if spec.kind == "young-fibonacci":
        if spec.layers is None:
            raise ValueError("young-fibonacci topology needs a layer count")
        return gen_young_fibonacci(spec.layers)
    if spec.kind == "ffnn":
        if spec.layer_sizes is None:
            raise ValueError("ffnn topology needs layer sizes")
        return gen_ffnn(spec.layer_sizes)
    if spec.kind == "binary-tree":
        if spec.depth is None:
            raise ValueError("binary-tree topology needs a depth")
        return gen_full_binary_tree(spec.depth)
    if spec.cycle_sizes is None:
        raise ValueError("bridged-cycles topology needs cycle sizes")
    return gen_bridged_cycles(spec.cycle_sizes)


# ----------------------------------------------------------------------
# Transformations (used to test relabeling / orientation invariance)
# ----------------------------------------------------------------------

def permute_vertices(g: DirectedGraph, permutation: Sequence[int]) -> DirectedGraph:
    """Relabel vertices: old vertex i becomes permutation[i]."""
    perm = [int(x) for x in permutation]
    if sorted(perm) != list(range(g.num_vertices)):
        raise ValueError(f"not a permutation of 0..{g.num_vertices - 1}")
    return DirectedGraph(g.num_vertices, tuple((perm[a], perm[b]) for a, b in g.edges))


def flip_edge(g: DirectedGraph, edge_index: int) -> DirectedGraph:
    """Reverse the orientation of one edge.  Simplicity guarantees the flipped
    edge cannot collide with an existing one."""
    if not (0 <= edge_index < len(g.edges)):
        raise ValueError(f"edge index {edge_index} out of range")
    a, b = g.edges[edge_index]
    edges = list(g.edges)
    edges[edge_index] = (b, a)
    return DirectedGraph(g.num_vertices, tuple(edges))


def random_graph(num_vertices: int, rng: np.random.Generator, edge_prob: float = 0.4) -> DirectedGraph:
    """Erdos-Renyi style directed simple graph: each unordered pair is linked
    with probability edge_prob, then oriented by a fair coin flip."""
    if num_vertices < 1:
        raise ValueError(f"num_vertices must be >= 1, got {num_vertices}")
    edges = []
    for a in range(num_vertices):
        for b in range(a + 1, num_vertices):
            if rng.random() < edge_prob:
                edges.append((a, b) if rng.random() < 0.5 else (b, a))
    return DirectedGraph(num_vertices, tuple(edges))


# ----------------------------------------------------------------------
# Serialization: {"num_vertices": M, "edges": [[a, b], ...]}
# ----------------------------------------------------------------------

def to_json(g: DirectedGraph) -> str:
    return json.dumps({"num_vertices": g.num_vertices, "edges": [[a, b] for a, b in g.edges]})


def from_json(text: str) -> DirectedGraph:
    data = json.loads(text)
    try:
        num_vertices = data["num_vertices"]
        edges = data["edges"]
    except (TypeError, KeyError) as exc:
        raise ValueError(f"malformed graph JSON: missing {exc}") from exc
    return from_edge_list(int(num_vertices), edges)


def save_graph(g: DirectedGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(to_json(g) + "\n")


def load_graph(path: str) -> DirectedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json(fh.read())
