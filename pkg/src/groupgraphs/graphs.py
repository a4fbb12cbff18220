"""Adjacency oracles and graph reports for the three graph kinds.

Kinds:
    generating        x, y adjacent iff <x, y> = G (identity excluded)
    virt-independence x, y adjacent iff x not in <y> and y not in <x>
    independence      x, y adjacent iff some irredundant generating set
                      of G contains both

The identity is isolated in all three graphs of a nontrivial group: it
lies in <y> for every y, so it never sits in an irredundant set, and the
generating kind excludes it by convention. Reports analyse the induced
subgraph on non-isolated vertices ("the delta graph"): components via
union-find, diameter via BFS from every vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .caps import cap
from .group import CapExceeded, FiniteGroup, GroupError, SubgroupMask
from .lattice import frattini, maximal_subgroups
from .mingen import contains_in_irredundant
from .structure import quotient

KINDS = ("generating", "independence", "virt-independence")


def _check_kind(kind: str):
    if kind not in KINDS:
        raise GroupError(f"unknown graph kind {kind!r}; expected one of {KINDS}")


# -- adjacency oracles -------------------------------------------------------

def adj_generating(G: FiniteGroup, x: int, y: int) -> bool:
    """<x, y> = G, with x != y and the identity excluded by convention.

    Uses maximal-subgroup containment (no maximal contains both) when the
    lattice has already been enumerated, plain closure otherwise.
    """
    if x == y:
        raise GroupError("loops are excluded: x != y required")
    if x == 0 or y == 0:
        return False
    from .lattice import _LATTICE_CACHE

    if id(G) in _LATTICE_CACHE:
        pair = 1 << x | 1 << y
        return not any((m.bits & pair) == pair for m in maximal_subgroups(G))
    return G.extend_subgroup(G.cyclic_bits(x), y).bit_count() == G.order


def adj_virt_independent(G: FiniteGroup, x: int, y: int) -> bool:
    """Mutual cyclic non-containment."""
    if x == y:
        return False
    return not (G.cyclic_bits(y) >> x & 1 or G.cyclic_bits(x) >> y & 1)


def adj_independent(G: FiniteGroup, x: int, y: int) -> bool:
    """Some irredundant generating set of G contains x and y."""
    if x == y:
        raise GroupError("loops are excluded: x != y required")
    return contains_in_irredundant(G, x, y) is not None


def membership_matrix(G: FiniteGroup) -> np.ndarray:
    """M[x, y] = x in <y>."""
    n = G.order
    M = np.zeros((n, n), dtype=bool)
    for y in range(n):
        bits = G.cyclic_bits(y)
        M[list(_bit_ids(bits)), y] = True
    return M


def _bit_ids(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def adjacency_matrix(G: FiniteGroup, kind: str) -> np.ndarray:
    _check_kind(kind)
    n = G.order
    if kind == "virt-independence":
        M = membership_matrix(G)
        adj = ~M & ~M.T
        np.fill_diagonal(adj, False)
        return adj
    if kind == "generating":
        adj = np.zeros((n, n), dtype=bool)
        if n == 1:
            return adj
        if n <= cap("LATTICE_CAP"):
            adj[1:, 1:] = True
            np.fill_diagonal(adj, False)
            for mask in maximal_subgroups(G):
                inm = np.zeros(n, dtype=bool)
                inm[mask.ids()] = True
                adj &= ~(inm[:, None] & inm[None, :])
            adj[0, :] = adj[:, 0] = False
            return adj
        for x in range(1, n):
            cx = G.cyclic_bits(x)
            for y in range(x + 1, n):
                if G.extend_subgroup(cx, y).bit_count() == n:
                    adj[x, y] = adj[y, x] = True
        return adj
    # independence
    if n > cap("INDEPENDENCE_CAP"):
        raise CapExceeded(
            f"|G|={n} exceeds independence cap {cap('INDEPENDENCE_CAP')}")
    virt = adjacency_matrix(G, "virt-independence")
    adj = np.zeros((n, n), dtype=bool)
    for x in range(n):
        for y in range(x + 1, n):
            if virt[x, y] and contains_in_irredundant(G, x, y) is not None:
                adj[x, y] = adj[y, x] = True
    return adj


# -- reports -----------------------------------------------------------------

@dataclass
class GraphReport:
    kind: str
    group: str
    order: int
    isolated: list
    components: list           # lists of ids over non-isolated vertices
    diameter: Union[int, str, None]  # int, "disconnected", or None if empty
    component_diameters: list
    edge_count: int

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "kind": self.kind,
            "group": self.group,
            "order": self.order,
            "vertex_count": self.order,
            "isolated": self.isolated,
            "non_isolated_count": self.order - len(self.isolated),
            "components": self.components,
            "component_count": len(self.components),
            "diameter": self.diameter,
            "component_diameters": self.component_diameters,
            "edge_count": self.edge_count,
        }


def _bfs_dists(adj: np.ndarray, src: int) -> np.ndarray:
    n = adj.shape[0]
    dist = np.full(n, -1, dtype=np.int64)
    dist[src] = 0
    frontier = np.zeros(n, dtype=bool)
    frontier[src] = True
    d = 0
    while frontier.any():
        d += 1
        nxt = adj[frontier].any(axis=0) & (dist < 0)
        dist[nxt] = d
        frontier = nxt
    return dist


def analyze_adjacency(adj: np.ndarray) -> tuple:
    """(isolated ids, components, diameter, per-component diameters, edges)."""
    n = adj.shape[0]
    degree = adj.sum(axis=1)
    isolated = [int(i) for i in np.flatnonzero(degree == 0)]
    live = [int(i) for i in np.flatnonzero(degree > 0)]
    seen = set()
    components = []
    comp_diams = []
    for v in live:
        if v in seen:
            continue
        dist = _bfs_dists(adj, v)
        comp = [int(i) for i in np.flatnonzero(dist >= 0)]
        seen.update(comp)
        ecc = 0
        for u in comp:
            du = _bfs_dists(adj, u)
            ecc = max(ecc, int(du.max()))
        components.append(sorted(comp))
        comp_diams.append(ecc)
    components.sort(key=lambda c: c[0])
    if not components:
        diameter: Union[int, str, None] = None
    elif len(components) == 1:
        diameter = comp_diams[0]
    else:
        diameter = "disconnected"
    edges = int(adj.sum()) // 2
    return isolated, components, diameter, comp_diams, edges


def graph_report(G: FiniteGroup, kind: str) -> GraphReport:
    adj = adjacency_matrix(G, kind)
    isolated, components, diameter, comp_diams, edges = analyze_adjacency(adj)
    return GraphReport(kind, G.label, G.order, isolated, components,
                       diameter, comp_diams, edges)


def edges_csv(adj: np.ndarray) -> str:
    lines = ["u,v"]
    xs, ys = np.nonzero(np.triu(adj, 1))
    for u, v in zip(xs, ys):
        lines.append(f"{int(u)},{int(v)}")
    return "\n".join(lines) + "\n"


def edges_dot(adj: np.ndarray, name: str = "G") -> str:
    lines = [f'graph "{name}" {{']
    degree = adj.sum(axis=1)
    for i in np.flatnonzero(degree == 0):
        lines.append(f"  {int(i)};")
    xs, ys = np.nonzero(np.triu(adj, 1))
    for u, v in zip(xs, ys):
        lines.append(f"  {int(u)} -- {int(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- verification harnesses ---------------------------------------------------

def isolated_ids(G: FiniteGroup, kind: str) -> list:
    adj = adjacency_matrix(G, kind)
    return [int(i) for i in np.flatnonzero(adj.sum(axis=1) == 0)]


def check_isolated_classification(G: FiniteGroup) -> dict:
    """Check the isolated-vertex laws for both delta graphs.

    Virt-independence: a non-trivial, non-generating isolated vertex
    forces the group to be cyclic of prime-power order (everything
    isolated) or generalized quaternion (the central involution is the
    only non-trivial isolated vertex).

    Independence (within cap): isolated = Frattini union single
    generators, exactly.
    """
    from .structure import classify_unique_minimal

    out: dict = {"group": G.label, "passed": True}
    iso = set(isolated_ids(G, "virt-independence"))
    gens = {g for g in range(G.order) if G.cyclic_bits(g).bit_count() == G.order}
    special = [g for g in iso if g != 0 and g not in gens]
    verdict: dict = {"isolated": sorted(iso), "special": sorted(special)}
    if special:
        cls = classify_unique_minimal(G)
        verdict["classification"] = cls.kind
        if cls.kind == "cyclic-p-power":
            verdict["all_isolated"] = len(iso) == G.order
            ok = verdict["all_isolated"]
        elif cls.kind == "generalized-quaternion":
            central = [g for g in cls.unique_minimal.ids() if g != 0]
            verdict["central_involution"] = central
            ok = special == central
        else:
            ok = False
        verdict["passed"] = ok
        out["passed"] &= ok
    else:
        verdict["passed"] = True
    out["virt_independence"] = verdict

    if G.order <= cap("INDEPENDENCE_CAP") and G.order <= cap("LATTICE_CAP"):
        expected = set(frattini(G).ids()) | gens
        got = set(isolated_ids(G, "independence"))
        ok = got == expected
        out["independence"] = {
            "isolated": sorted(got),
            "expected": sorted(expected),
            "passed": ok,
        }
        out["passed"] &= ok
    else:
        out["independence"] = "skipped"
    return out


def check_quotient_lifting(G: FiniteGroup, N: SubgroupMask) -> dict:
    """Adjacency and same-component facts must lift from G/N to G.

    Part 1 (virt-independence): whenever the cosets of x and y are
    adjacent in the quotient graph, x and y are adjacent in G's.
    Part 2 (independence): all elements projecting into one component of
    the quotient delta graph lie in one component of G's delta graph.
    """
    Q, proj = quotient(G, N)
    vG = adjacency_matrix(G, "virt-independence")
    vQ = adjacency_matrix(Q, "virt-independence")
    failures = []
    for x in range(G.order):
        px = int(proj[x])
        for y in range(x + 1, G.order):
            if vQ[px, int(proj[y])] and not vG[x, y]:
                failures.append((x, y))
    out = {
        "group": G.label,
        "normal_subgroup_size": N.size,
        "virt_adjacency_lifts": not failures,
        "virt_counterexamples": failures[:5],
    }
    if G.order <= cap("INDEPENDENCE_CAP"):
        iG = adjacency_matrix(G, "independence")
        iQ = adjacency_matrix(Q, "independence")
        _, comps_q, _, _, _ = analyze_adjacency(iQ)
        _, comps_g, _, _, _ = analyze_adjacency(iG)
        comp_of_g = {}
        for ci, comp in enumerate(comps_g):
            for v in comp:
                comp_of_g[v] = ci
        comp_fail = []
        for comp in comps_q:
            cosets = set(comp)
            members = [g for g in range(G.order) if int(proj[g]) in cosets]
            tags = {comp_of_g.get(g) for g in members}
            if len(tags) != 1 or None in tags:
                comp_fail.append(sorted(members)[:6])
        out["independence_components_lift"] = not comp_fail
        out["independence_counterexamples"] = comp_fail[:3]
        passed = not failures and not comp_fail
    else:
        out["independence_components_lift"] = "skipped"
        passed = not failures
    out["passed"] = passed
    return out
