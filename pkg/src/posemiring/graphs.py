"""Zero-divisor graphs: construction, metrics, shape classification, DOT export."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import StructureError

INF = math.inf


@dataclass(frozen=True)
class ZdGraph:
    vertices: tuple[int, ...]            # element indices in the source table
    adjacency: tuple[tuple[bool, ...], ...]  # by vertex position, symmetric
    source_kind: str                     # posemiring | ring | semigroup

    @property
    def n(self) -> int:
        return len(self.vertices)

    def neighbors(self, i: int):
        return [j for j in range(self.n) if self.adjacency[i][j]]

    def degree(self, i: int) -> int:
        return sum(self.adjacency[i])

    def edges(self):
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if self.adjacency[i][j]]


def build_zdgraph(mul, exclude=(), source_kind="semigroup") -> ZdGraph:
    """Graph on the nonzero zero divisors of a commutative table with 0 at index 0."""
    n = len(mul)
    exclude = set(exclude)
    for x in range(n):
        for y in range(n):
            if mul[x][y] != mul[y][x]:
                raise StructureError(f"multiplication not commutative at ({x}, {y})")
        if mul[0][x] != 0:
            raise StructureError(f"0 does not absorb element {x}")
    vertices = tuple(x for x in range(1, n)
                     if x not in exclude
                     and any(mul[x][y] == 0 for y in range(1, n)))
    adjacency = tuple(
        tuple(x != y and mul[x][y] == 0 for y in vertices) for x in vertices)
    return ZdGraph(vertices=vertices, adjacency=adjacency,
                   source_kind=source_kind)


# ---------------------------------------------------------------------------
# Metrics


@dataclass(frozen=True)
class GraphMetrics:
    diameter: float | None      # None for the empty graph, inf when disconnected
    girth: int | None           # None when acyclic
    clique_number: int
    component_count: int
    eccentricity: tuple[float, ...]
    triangle_free: bool
    quadrilateral_free: bool


def _bfs_dist(G: ZdGraph, src: int):
    dist = [INF] * G.n
    dist[src] = 0
    queue = [src]
    while queue:
        nxt = []
        for v in queue:
            for w in G.neighbors(v):
                if dist[w] == INF:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        queue = nxt
    return dist


def _component_count(G: ZdGraph) -> int:
    seen = set()
    count = 0
    for v in range(G.n):
        if v in seen:
            continue
        count += 1
        stack = [v]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            stack.extend(G.neighbors(u))
    return count


def _girth(G: ZdGraph) -> int | None:
    """Length of a shortest cycle by BFS from every vertex."""
    best = None
    for s in range(G.n):
        dist = [None] * G.n
        parent = [None] * G.n
        dist[s] = 0
        queue = [s]
        while queue:
            nxt = []
            for v in queue:
                for w in G.neighbors(v):
                    if dist[w] is None:
                        dist[w] = dist[v] + 1
                        parent[w] = v
                        nxt.append(w)
                    elif w != parent[v]:
                        cyc = dist[v] + dist[w] + 1
                        if best is None or cyc < best:
                            best = cyc
            queue = nxt
    return best


def _max_clique(G: ZdGraph) -> int:
    if G.n == 0:
        return 0
    best = 1
    order = sorted(range(G.n), key=G.degree, reverse=True)
    adj = [set(G.neighbors(v)) for v in range(G.n)]

    def extend(size, cand):
        nonlocal best
        if size > best:
            best = size
        for i, v in enumerate(cand):
            if size + len(cand) - i <= best:
                return
            extend(size + 1, [w for w in cand[i + 1:] if w in adj[v]])

    extend(0, order)
    return best


def _has_quadrilateral(G: ZdGraph) -> bool:
    # a C4 subgraph exists iff some vertex pair has two common neighbors
    for x in range(G.n):
        nx = set(G.neighbors(x))
        for y in range(x + 1, G.n):
            if len(nx.intersection(G.neighbors(y))) >= 2:
                return True
    return False


def _has_triangle(G: ZdGraph) -> bool:
    for x, y in G.edges():
        if set(G.neighbors(x)).intersection(G.neighbors(y)):
            return True
    return False


def graph_metrics(G: ZdGraph) -> GraphMetrics:
    if G.n == 0:
        return GraphMetrics(diameter=None, girth=None, clique_number=0,
                            component_count=0, eccentricity=(),
                            triangle_free=True, quadrilateral_free=True)
    ecc = tuple(max(_bfs_dist(G, v)) for v in range(G.n))
    components = _component_count(G)
    diameter = max(ecc) if components == 1 else INF
    return GraphMetrics(
        diameter=diameter,
        girth=_girth(G),
        clique_number=_max_clique(G),
        component_count=components,
        eccentricity=ecc,
        triangle_free=not _has_triangle(G),
        quadrilateral_free=not _has_quadrilateral(G),
    )


# ---------------------------------------------------------------------------
# Shape classification


@dataclass(frozen=True)
class GraphShape:
    tag: str            # empty | single-vertex | complete | star | two-star |
                        # complete-bipartite | forest | cyclic
    params: tuple[int, ...]
    metrics: GraphMetrics

    def line(self) -> str:
        if self.tag == "complete":
            return f"complete n={self.params[0]}"
        if self.tag == "star":
            return f"star r={self.params[0]}"
        if self.tag == "two-star":
            r, s = self.params
            left = "K1" if r == 1 else f"D_{r}"
            return f"two-star r={r} s={s} ({left}+K1+K1+D_{s})"
        if self.tag == "complete-bipartite":
            return f"complete-bipartite m={self.params[0]} n={self.params[1]}"
        if self.tag == "cyclic":
            return f"cyclic girth={self.metrics.girth}"
        return self.tag


def _star_params(G: ZdGraph):
    degs = [G.degree(i) for i in range(G.n)]
    centers = [i for i, d in enumerate(degs) if d == G.n - 1]
    if len(centers) == 1 and all(d == 1 for i, d in enumerate(degs)
                                 if i != centers[0]):
        return (G.n - 1,)
    return None


def _two_star_params(G: ZdGraph):
    for u, v in G.edges():
        rest = [w for w in range(G.n) if w not in (u, v)]
        if not rest:
            continue
        ok = True
        for w in rest:
            nb = G.neighbors(w)
            if nb != [u] and nb != [v]:
                ok = False
                break
        if ok:
            r = sum(1 for w in rest if G.neighbors(w) == [u])
            s = len(rest) - r
            if r >= 1 and s >= 1:
                return tuple(sorted((r, s)))
    return None


def _complete_bipartite_params(G: ZdGraph):
    color = [None] * G.n
    color[0] = 0
    queue = [0]
    while queue:
        v = queue.pop()
        for w in G.neighbors(v):
            if color[w] is None:
                color[w] = 1 - color[v]
                queue.append(w)
            elif color[w] == color[v]:
                return None
    if any(c is None for c in color):
        return None
    part = [[i for i in range(G.n) if color[i] == c] for c in (0, 1)]
    m, n = len(part[0]), len(part[1])
    if m < 2 or n < 2:
        return None
    for x in part[0]:
        for y in part[1]:
            if not G.adjacency[x][y]:
                return None
    return tuple(sorted((m, n)))


def classify_shape(G: ZdGraph) -> GraphShape:
    """Deterministic shape tag under a fixed precedence; K2 reports as complete."""
    m = graph_metrics(G)
    nedges = len(G.edges())
    if G.n == 0:
        return GraphShape("empty", (), m)
    if G.n == 1:
        return GraphShape("single-vertex", (), m)
    if nedges == G.n * (G.n - 1) // 2:
        return GraphShape("complete", (G.n,), m)
    params = _star_params(G)
    if params and params[0] >= 2:
        return GraphShape("star", params, m)
    params = _two_star_params(G)
    if params:
        return GraphShape("two-star", params, m)
    params = _complete_bipartite_params(G)
    if params:
        return GraphShape("complete-bipartite", params, m)
    if nedges == G.n - m.component_count:
        return GraphShape("forest", (), m)
    return GraphShape("cyclic", (), m)


# ---------------------------------------------------------------------------
# DOT export


def export_dot(G: ZdGraph, labels) -> str:
    def quote(x):
        return '"' + labels[x].replace('"', '\\"') + '"'

    lines = ["graph zd {"]
    for i in range(G.n):
        if G.degree(i) == 0:
            lines.append(f"  {quote(G.vertices[i])};")
    for i, j in G.edges():
        lines.append(f"  {quote(G.vertices[i])} -- {quote(G.vertices[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
