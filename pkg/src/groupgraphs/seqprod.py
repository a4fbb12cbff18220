"""Horizon-truncated model of a countable product of coordinate graphs.

A family holds finitely many coordinate graphs (a horizon-length prefix
of the countable product). Product vertices carry one coordinate vertex
per graph; adjacency with "exception prefix" m means the coordinate
pairs are edges at every index n >= m, standing in for "all but finitely
many". Enlarging the horizon never turns an adjacent pair non-adjacent.

Coordinate graphs are either group mode (the graph of a finite group
under one of the adjacency kinds) or abstract mode (explicit edges or
path graphs). Walk padding to a common target length uses edge bounces
for even surplus and one triangle insertion for odd surplus; in a
generating-kind coordinate the triangle through an edge (a, b) is
{a, a*b, b}, valid because each pair of the three generates the same
subgroup as {a, b}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .build import build_group
from .graphs import KINDS, adjacency_matrix, _bfs_dists
from .group import FiniteGroup, GroupError


class PaddingError(GroupError):
    pass


class CoordinateGraph:
    """Interface: n_vertices, is_edge, dist, isolated, diameter."""

    label: str
    n_vertices: int

    def is_edge(self, u: int, v: int) -> bool:
        raise NotImplementedError

    def dist(self, u: int, v: int) -> int:
        """Graph distance; -1 if unreachable."""
        raise NotImplementedError

    def isolated(self) -> set:
        raise NotImplementedError

    def diameter(self) -> int:
        """Largest finite distance between distinct vertices."""
        raise NotImplementedError

    def neighbors(self, u: int) -> list:
        return [v for v in range(self.n_vertices) if self.is_edge(u, v)]


class GroupCoordinate(CoordinateGraph):
    def __init__(self, group: FiniteGroup, kind: str):
        self.group = group
        self.kind = kind
        self.label = f"group:{group.label}:{kind}"
        self.n_vertices = group.order
        self.adj = adjacency_matrix(group, kind)
        self._dist = np.stack([_bfs_dists(self.adj, v) for v in range(group.order)])

    def is_edge(self, u, v):
        return bool(self.adj[u, v])

    def dist(self, u, v):
        return int(self._dist[u, v])

    def isolated(self):
        return {int(i) for i in np.flatnonzero(self.adj.sum(axis=1) == 0)}

    def diameter(self):
        return int(self._dist.max())

    def neighbors(self, u):
        return [int(v) for v in np.flatnonzero(self.adj[u])]


class PathCoordinate(CoordinateGraph):
    """Path graph on n vertices 0 - 1 - ... - (n-1)."""

    def __init__(self, n: int):
        if n < 1:
            raise GroupError("path length must be >= 1 vertex")
        self.n_vertices = n
        self.label = f"path:{n}"

    def is_edge(self, u, v):
        return abs(u - v) == 1

    def dist(self, u, v):
        return abs(u - v)

    def isolated(self):
        return {0} if self.n_vertices == 1 else set()

    def diameter(self):
        return self.n_vertices - 1


class ExplicitCoordinate(CoordinateGraph):
    def __init__(self, n: int, edges: Sequence, label: str = ""):
        self.n_vertices = n
        self.label = label or f"graph:{n}"
        self.adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise GroupError("loops are not allowed")
            self.adj[u, v] = self.adj[v, u] = True
        self._dist = np.stack([_bfs_dists(self.adj, v) for v in range(n)])

    def is_edge(self, u, v):
        return bool(self.adj[u, v])

    def dist(self, u, v):
        return int(self._dist[u, v])

    def isolated(self):
        return {int(i) for i in np.flatnonzero(self.adj.sum(axis=1) == 0)}

    def diameter(self):
        return int(self._dist.max())

    def neighbors(self, u):
        return [int(v) for v in np.flatnonzero(self.adj[u])]


@dataclass
class CoordinateFamily:
    graphs: list

    @property
    def horizon(self) -> int:
        return len(self.graphs)

    def check_vertex(self, x: Sequence[int]):
        if len(x) != self.horizon:
            raise GroupError(f"vertex needs {self.horizon} coordinates")
        for n, (g, v) in enumerate(zip(self.graphs, x)):
            if not 0 <= v < g.n_vertices:
                raise GroupError(f"coordinate {n}: vertex {v} out of range")


def parse_family_line(line: str) -> CoordinateGraph:
    if line.startswith("path:"):
        return PathCoordinate(int(line[5:]))
    if line.startswith("group:"):
        body = line[6:]
        spec, _, kind = body.rpartition(":")
        if kind not in KINDS:
            raise GroupError(f"unknown graph kind in family line {line!r}")
        return GroupCoordinate(build_group(spec), kind)
    raise GroupError(f"cannot parse family line {line!r}")


def parse_family(text: str) -> CoordinateFamily:
    graphs = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        graphs.append(parse_family_line(line))
    if not graphs:
        raise GroupError("family file has no coordinates")
    return CoordinateFamily(graphs)


def seq_adjacent(F: CoordinateFamily, x, y, m: int = 0) -> bool:
    """Edge at every coordinate n with m <= n < horizon."""
    if not 0 <= m <= F.horizon:
        raise GroupError("exception prefix out of range")
    F.check_vertex(x)
    F.check_vertex(y)
    return all(F.graphs[n].is_edge(x[n], y[n]) for n in range(m, F.horizon))


def non_isolation_prefix(F: CoordinateFamily, x) -> int:
    """Least m such that every coordinate of x from m on is non-isolated.

    x admits a neighbor with exception prefix m exactly when m is at
    least this value, so the prefix plays the role of "all but finitely
    many coordinates live" at the horizon.
    """
    F.check_vertex(x)
    m = F.horizon
    for n in range(F.horizon - 1, -1, -1):
        if x[n] in F.graphs[n].isolated():
            break
        m = n
    return m


def _triangle_midpoint(graph: CoordinateGraph, u: int, v: int) -> int:
    """Vertex w with edges u-w and w-v, for odd-length insertions."""
    if isinstance(graph, GroupCoordinate) and graph.kind == "generating":
        w = graph.group.mul(u, v)
        if graph.is_edge(u, w) and graph.is_edge(w, v):
            return w
    for w in range(graph.n_vertices):
        if w not in (u, v) and graph.is_edge(u, w) and graph.is_edge(w, v):
            return w
    raise PaddingError(
        f"{graph.label}: no odd closed walk available through edge ({u},{v})")


def pad_walk(graph: CoordinateGraph, path: Sequence[int], L: int) -> list:
    """Extend a walk to length exactly L, keeping both endpoints.

    Even surplus bounces on the last edge; odd surplus inserts one
    triangle midpoint into the last edge. A single-vertex path (length
    0) is padded via any incident edge and fails if the vertex is
    isolated or L == 1.
    """
    path = list(path)
    if not path:
        raise GroupError("empty path")
    mu = len(path) - 1
    for a, b in zip(path, path[1:]):
        if not graph.is_edge(a, b):
            raise GroupError(f"invalid path edge ({a},{b}) in {graph.label}")
    if L < mu:
        raise PaddingError(f"target length {L} below path length {mu}")
    if L == mu:
        return path
    if mu == 0:
        v = path[0]
        nbrs = graph.neighbors(v)
        if not nbrs:
            raise PaddingError(f"{graph.label}: vertex {v} is isolated")
        if L == 1:
            raise PaddingError("cannot close a walk of length 1 without a loop")
        u = nbrs[0]
        path = [v, u, v]
        mu = 2
    surplus = L - mu
    if surplus % 2 == 1:
        u, v = path[-2], path[-1]
        path = path[:-1] + [_triangle_midpoint(graph, u, v), v]
        surplus -= 1
    u, v = path[-2], path[-1]
    path.extend([u, v] * (surplus // 2))
    return path


def stitch(F: CoordinateFamily, paths: Sequence[Sequence[int]], m: int) -> list:
    """Zip per-coordinate walks padded to common length m into a product path.

    Every consecutive product pair is verified adjacent with exception
    prefix 0; the result has exactly m + 1 product vertices.
    """
    if len(paths) != F.horizon:
        raise GroupError("need one path per coordinate")
    for p in paths:
        if len(p) - 1 > m:
            raise GroupError("coordinate path longer than target length")
    padded = [pad_walk(g, p, m) for g, p in zip(F.graphs, paths)]
    out = [tuple(p[i] for p in padded) for i in range(m + 1)]
    for a, b in zip(out, out[1:]):
        if not seq_adjacent(F, a, b, 0):
            raise GroupError("stitched path failed adjacency verification")
    return out


def component_criterion(F: CoordinateFamily, x, y, threshold: int) -> dict:
    """Sup of per-coordinate distances over shared support, at horizon.

    Divergent when some shared coordinate is unreachable or the running
    max exceeds `threshold` (then no product path of length <= threshold
    exists between x and y).
    """
    F.check_vertex(x)
    F.check_vertex(y)
    best = 0
    for n, g in enumerate(F.graphs):
        iso = g.isolated()
        if x[n] in iso or y[n] in iso:
            continue
        d = g.dist(x[n], y[n])
        if d < 0 or d > threshold:
            return {"divergent": True, "coordinate": n,
                    "distance": None if d < 0 else d}
        best = max(best, d)
    return {"divergent": False, "bound": best}


def _diametral_base(graph: CoordinateGraph) -> int:
    """Smallest vertex whose eccentricity equals the diameter."""
    D = graph.diameter()
    for v in range(graph.n_vertices):
        ecc = max(graph.dist(v, u) for u in range(graph.n_vertices))
        if ecc == D:
            return v
    return 0


def _vertex_at_distance(graph: CoordinateGraph, base: int, d: int) -> int:
    for v in range(graph.n_vertices):
        if graph.dist(base, v) == d:
            return v
    raise GroupError(f"{graph.label}: no vertex at distance {d} from {base}")


def separation_demo(F: CoordinateFamily, taus: Sequence[float], threshold: int) -> dict:
    """Certify pairwise component separation of the walkers y_tau.

    y_tau sits, per coordinate, at distance min(D, 1 + floor(D / tau))
    from a diametral base vertex, D the coordinate diameter. For every
    pair tau1 < tau2 the report names the first coordinate where
    dist(y_tau1, y_tau2) exceeds the threshold; a missing coordinate is
    an error (horizon too small).
    """
    taus = list(taus)
    if len(set(taus)) != len(taus):
        raise GroupError("taus must be pairwise distinct")
    if any(t <= 1 for t in taus):
        raise GroupError("taus must be greater than 1")
    diams = [g.diameter() for g in F.graphs]
    if any(b <= a for a, b in zip(diams, diams[1:])):
        raise GroupError("coordinate diameters must be strictly increasing")
    bases = [_diametral_base(g) for g in F.graphs]
    walkers = {}
    for tau in taus:
        coords = []
        for g, base, D in zip(F.graphs, bases, diams):
            d = min(D, 1 + int(D / tau)) if D > 0 else 0
            coords.append(_vertex_at_distance(g, base, d))
        walkers[tau] = tuple(coords)
    pairs = []
    for i, t1 in enumerate(sorted(taus)):
        for t2 in sorted(taus)[i + 1:]:
            found = None
            for n, g in enumerate(F.graphs):
                gap = g.dist(walkers[t1][n], walkers[t2][n])
                if gap > threshold:
                    found = {"tau_small": t1, "tau_large": t2,
                             "coordinate": n, "gap": gap}
                    break
            if found is None:
                raise GroupError(
                    f"horizon too small: taus ({t1},{t2}) never separate "
                    f"beyond {threshold}")
            pairs.append(found)
    return {
        "schema_version": 1,
        "horizon": F.horizon,
        "coordinates": [g.label for g in F.graphs],
        "taus": sorted(taus),
        "threshold": threshold,
        "base": [int(b) for b in bases],
        "walkers": {str(t): list(map(int, walkers[t])) for t in taus},
        "pairs": pairs,
        "all_separated": True,
    }
