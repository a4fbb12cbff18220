"""Truncated-product machinery: adjacency, padding, stitching, separation."""

import itertools

import pytest

from groupgraphs.build import build_group
from groupgraphs.group import GroupError
from groupgraphs.seqprod import (CoordinateFamily, ExplicitCoordinate,
                                 GroupCoordinate, PaddingError, PathCoordinate,
                                 component_criterion, non_isolation_prefix,
                                 pad_walk, parse_family, separation_demo,
                                 seq_adjacent, stitch)


def s3_coord():
    return GroupCoordinate(build_group("S:3"), "generating")


def test_seq_adjacent_group_mode():
    g = s3_coord()
    fam = CoordinateFamily([g, g])
    S3 = build_group("S:3")
    t12 = S3.element_names.index("(1 2)")
    t13 = S3.element_names.index("(1 3)")
    c = S3.element_names.index("(1 2 3)")
    assert seq_adjacent(fam, (t12, t12), (c, t13), 0)
    assert not seq_adjacent(fam, (t12, t12), (c, t12), 0)   # loop at slot 1
    assert seq_adjacent(fam, (t12, t12), (c, t12), 2)       # empty tail


def test_exception_prefix_moves_decision():
    g = s3_coord()
    fam = CoordinateFamily([g, g])
    S3 = build_group("S:3")
    t12 = S3.element_names.index("(1 2)")
    c = S3.element_names.index("(1 2 3)")
    x, y = (t12, t12), (t12, c)
    assert not seq_adjacent(fam, x, y, 0)                    # slot 0 is a loop
    assert seq_adjacent(fam, x, y, 1)


def test_pad_walk_triangle_example():
    g = s3_coord()
    S3 = build_group("S:3")
    t12 = S3.element_names.index("(1 2)")
    c = S3.element_names.index("(1 2 3)")
    padded = pad_walk(g, [t12, c], 2)
    assert padded == [t12, S3.mul(t12, c), c]
    # inserted vertex forms edges on both sides
    assert g.is_edge(padded[0], padded[1]) and g.is_edge(padded[1], padded[2])


def test_pad_walk_even_bounce():
    g = s3_coord()
    S3 = build_group("S:3")
    t12 = S3.element_names.index("(1 2)")
    c = S3.element_names.index("(1 2 3)")
    padded = pad_walk(g, [t12, c, t12], 4)     # wait: must stay a valid walk
    assert len(padded) == 5 and padded[0] == t12 and padded[-1] == t12


def test_pad_walk_closed_walk():
    g = s3_coord()
    S3 = build_group("S:3")
    t12 = S3.element_names.index("(1 2)")
    padded = pad_walk(g, [t12], 3)
    assert len(padded) == 4 and padded[0] == padded[-1] == t12
    for a, b in zip(padded, padded[1:]):
        assert g.is_edge(a, b)
    with pytest.raises(PaddingError):
        pad_walk(g, [t12], 1)


def test_pad_walk_parity_obstruction_on_bipartite_graph():
    p = PathCoordinate(4)
    with pytest.raises(PaddingError):
        pad_walk(p, [0, 1], 2)                 # no triangle in a path graph
    assert pad_walk(p, [0, 1], 3) == [0, 1, 0, 1]


def test_pad_walk_preserves_endpoints_all_lengths():
    g = s3_coord()
    S3 = build_group("S:3")
    t12 = S3.element_names.index("(1 2)")
    c = S3.element_names.index("(1 2 3)")
    for L in range(1, 8):
        padded = pad_walk(g, [t12, c], L)
        assert len(padded) == L + 1
        assert padded[0] == t12 and padded[-1] == c
        for a, b in zip(padded, padded[1:]):
            assert g.is_edge(a, b)
    with pytest.raises(PaddingError):
        pad_walk(g, [t12, c], 0)


def test_stitch_mixed_lengths():
    g = s3_coord()
    fam = CoordinateFamily([g, g])
    S3 = build_group("S:3")
    t12 = S3.element_names.index("(1 2)")
    t13 = S3.element_names.index("(1 3)")
    c = S3.element_names.index("(1 2 3)")
    short = [t12, c]                            # length 1
    longer = [t12, c, t13, c]                   # length 3
    out = stitch(fam, [short, longer], 3)
    assert len(out) == 4
    assert out[0] == (t12, t12) and out[-1] == (c, c)
    for a, b in zip(out, out[1:]):
        assert seq_adjacent(fam, a, b, 0)


def test_stitch_constant_coordinate_needs_closed_walk():
    g = s3_coord()
    fam = CoordinateFamily([g, g])
    S3 = build_group("S:3")
    t12 = S3.element_names.index("(1 2)")
    t13 = S3.element_names.index("(1 3)")
    c = S3.element_names.index("(1 2 3)")
    out = stitch(fam, [[t12], [t12, c, t13, c]], 3)
    assert out[0] == (t12, t12) and out[-1] == (t12, c)


def test_stitch_rejects_overlong_coordinate():
    g = s3_coord()
    fam = CoordinateFamily([g])
    S3 = build_group("S:3")
    t12 = S3.element_names.index("(1 2)")
    c = S3.element_names.index("(1 2 3)")
    with pytest.raises(GroupError):
        stitch(fam, [[t12, c, t12, c]], 2)


def test_component_criterion_max():
    fam = CoordinateFamily([PathCoordinate(8), PathCoordinate(8), PathCoordinate(8)])
    out = component_criterion(fam, (0, 0, 0), (1, 2, 2), threshold=10)
    assert out == {"divergent": False, "bound": 2}
    assert component_criterion(fam, (3, 3, 3), (3, 3, 3), 10) == {
        "divergent": False, "bound": 0}


def test_component_criterion_divergence_matches_growth_formula():
    # walkers at clamped distance 1 + floor(n / 1.5) on ten growing paths
    fam = CoordinateFamily([PathCoordinate(2 ** n) for n in range(10)])
    x = tuple(0 for _ in range(10))
    y = tuple(min(2 ** n - 1, 1 + int(n / 1.5)) for n in range(10))
    out = component_criterion(fam, x, y, threshold=5)
    assert out["divergent"] and out["coordinate"] == 8 and out["distance"] == 6


def test_component_criterion_vs_bfs_on_explicit_products():
    specs = [("S:3", "S:3"), ("S:3", "D:4")]
    for s1, s2 in specs:
        g1 = GroupCoordinate(build_group(s1), "generating")
        g2 = GroupCoordinate(build_group(s2), "generating")
        fam = CoordinateFamily([g1, g2])
        live = [[v for v in range(g.n_vertices) if v not in g.isolated()]
                for g in (g1, g2)]
        verts = [vv for vv in itertools.product(*live)]
        index = {v: i for i, v in enumerate(verts)}
        adj = [[] for _ in verts]
        for a in verts:
            for b in verts:
                if a != b and seq_adjacent(fam, a, b, 0):
                    adj[index[a]].append(index[b])
        import collections
        for src in verts[::5]:
            dist = {index[src]: 0}
            dq = collections.deque([index[src]])
            while dq:
                u = dq.popleft()
                for v in adj[u]:
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        dq.append(v)
            for dst in verts[::3]:
                if index[dst] in dist:
                    bound = component_criterion(fam, src, dst, 10 ** 6)["bound"]
                    assert bound <= dist[index[dst]]


def test_separation_demo_certifies_spec_parameters():
    fam = CoordinateFamily([PathCoordinate(2 ** n) for n in range(13)])
    rep = separation_demo(fam, [1.5, 2, 3], 4)
    assert rep["all_separated"] and len(rep["pairs"]) == 3
    for pair in rep["pairs"]:
        assert pair["gap"] > 4


def test_separation_demo_single_tau_vacuous():
    fam = CoordinateFamily([PathCoordinate(2 ** n) for n in range(6)])
    rep = separation_demo(fam, [2], 4)
    assert rep["all_separated"] and rep["pairs"] == []


def test_separation_demo_rejections():
    fam = CoordinateFamily([PathCoordinate(2 ** n) for n in range(6)])
    with pytest.raises(GroupError):
        separation_demo(fam, [2, 2], 4)
    with pytest.raises(GroupError):
        separation_demo(fam, [0.5, 2], 4)
    with pytest.raises(GroupError):
        separation_demo(fam, [1.5, 2], 10 ** 9)      # horizon too small
    flat = CoordinateFamily([PathCoordinate(4), PathCoordinate(4)])
    with pytest.raises(GroupError):
        separation_demo(flat, [1.5, 2], 1)           # diameters not increasing


def test_non_isolation_prefix_characterizes_adjacency():
    g = s3_coord()
    fam = CoordinateFamily([g, g, g])
    S3 = build_group("S:3")
    t12 = S3.element_names.index("(1 2)")
    c = S3.element_names.index("(1 2 3)")
    live = (t12, c, t12)
    dead_tail = (t12, c, 0)          # identity is isolated
    assert non_isolation_prefix(fam, live) == 0
    assert non_isolation_prefix(fam, dead_tail) == 3
    assert non_isolation_prefix(fam, (0, c, t12)) == 1
    # exhaustive: a neighbor with prefix m exists iff m >= the prefix
    import itertools
    for x in itertools.product(range(6), repeat=3):
        p = non_isolation_prefix(fam, x)
        for m in range(fam.horizon + 1):
            exists = any(seq_adjacent(fam, x, y, m)
                         for y in itertools.product(range(6), repeat=3))
            assert exists == (m >= p)


def test_parse_family():
    fam = parse_family("# demo\npath:8\ngroup:S:3:generating\n\n")
    assert fam.horizon == 2
    assert fam.graphs[0].n_vertices == 8
    assert fam.graphs[1].n_vertices == 6
    with pytest.raises(GroupError):
        parse_family("ring:5\n")
    with pytest.raises(GroupError):
        parse_family("group:S:3:rainbow\n")
    with pytest.raises(GroupError):
        parse_family("# only comments\n")


def test_explicit_coordinate_distances():
    tri = ExplicitCoordinate(4, [(0, 1), (1, 2), (2, 0)])
    assert tri.dist(0, 2) == 1
    assert tri.dist(0, 3) == -1
    assert tri.isolated() == {3}
    assert pad_walk(tri, [0, 1], 2) == [0, 2, 1]     # triangle midpoint found
