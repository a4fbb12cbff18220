"""Irredundant generating-set machinery."""

import pytest

from groupgraphs.build import build_group
from groupgraphs.group import CapExceeded, GroupError
from groupgraphs.mingen import (contains_in_irredundant, enumerate_irredundant,
                                gaschutz_search, lift_minimal, rank_d,
                                subgroup_chain_bound, tarski_csv, tarski_table)


def test_chain_bound():
    assert subgroup_chain_bound(24) == 4       # 2^3 * 3
    assert subgroup_chain_bound(60) == 4
    assert subgroup_chain_bound(1) == 0


def test_rank_examples():
    assert rank_d(build_group("S:4")) == 2
    assert rank_d(build_group("C:2*C:2*C:2")) == 3
    assert rank_d(build_group("C:1")) == 0
    assert rank_d(build_group("C:6")) == 1
    assert rank_d(build_group("Q:8")) == 2


def test_enumerate_c6():
    C6 = build_group("C:6")
    sets = {s.members for s in enumerate_irredundant(C6, 2)}
    assert (2, 3) in sets                       # the g^2, g^3 witness
    assert (1,) in sets and (5,) in sets        # the two generators
    for s in enumerate_irredundant(C6, 2):
        s.validate()


def test_enumerate_unique_and_valid():
    for spec in ["S:4", "Q:8", "C:2*C:2", "Dic:3"]:
        G = build_group(spec)
        seen = []
        for s in enumerate_irredundant(G, subgroup_chain_bound(G.order)):
            s.validate()
            assert s.members == tuple(sorted(s.members))
            seen.append(s.members)
        assert len(seen) == len(set(seen))      # each set exactly once


def test_enumerate_q8_max_size_two():
    Q8 = build_group("Q:8")
    assert max(len(s.members) for s in enumerate_irredundant(Q8, 3)) == 2


def test_enumerate_klein_all_size_two():
    V = build_group("C:2*C:2")
    assert {len(s.members) for s in enumerate_irredundant(V, 3)} == {2}


def test_tarski_tables():
    t = tarski_table(build_group("S:4"))
    assert (t.d, t.m) == (2, 3) and sorted(t.witnesses) == [2, 3]
    assert tarski_table(build_group("Q:8")).m == 2
    t16 = tarski_table(build_group("C:2*C:2*C:2*C:2"))
    assert (t16.d, t16.m) == (4, 4)
    t1 = tarski_table(build_group("C:1"))
    assert (t1.d, t1.m) == (0, 0)


def test_s4_three_transpositions_are_a_size_three_witness():
    from groupgraphs.mingen import IrredundantSet

    S4 = build_group("S:4")
    ids = tuple(sorted(S4.element_names.index(n)
                       for n in ("(1 2)", "(1 3)", "(1 4)")))
    IrredundantSet(ids, S4).validate()


def test_tarski_csv_format():
    table = tarski_table(build_group("S:4"))
    text = tarski_csv("S:4", table)
    lines = text.strip().splitlines()
    assert lines[0] == "group,d,m,size,witness"
    assert lines[1].startswith("S:4,2,3,2,")
    assert len(lines) == 3


def test_contains_examples():
    S4 = build_group("S:4")
    # (12) and (34): disjoint transpositions extend to an irredundant set
    t12 = S4.element_names.index("(1 2)")
    t34 = S4.element_names.index("(3 4)")
    got = contains_in_irredundant(S4, t12, t34)
    assert got is not None
    got.validate()
    assert {t12, t34} <= set(got.members)

    Q8 = build_group("Q:8")
    a = Q8.generators["a"]
    minus_one = Q8.mul(a, a)
    assert contains_in_irredundant(Q8, minus_one, a) is None

    C6 = build_group("C:6")
    assert contains_in_irredundant(C6, 2, 3).members == (2, 3)


def test_contains_requires_distinct():
    with pytest.raises(GroupError):
        contains_in_irredundant(build_group("C:6"), 2, 2)


def test_contains_implies_mutual_noncontainment():
    G = build_group("Dic:3")
    for x in range(G.order):
        for y in range(x + 1, G.order):
            got = contains_in_irredundant(G, x, y)
            if got is not None:
                assert not G.cyclic_bits(x) >> y & 1
                assert not G.cyclic_bits(y) >> x & 1


def test_contains_cap(monkeypatch):
    monkeypatch.setenv("GROUPGRAPHS_INDEPENDENCE_CAP", "10")
    with pytest.raises(CapExceeded):
        contains_in_irredundant(build_group("S:4"), 1, 2)


def test_lift_minimal_examples():
    C4 = build_group("C:4")
    assert lift_minimal(C4, C4.closure([2]), [1]).members == (1,)

    V = build_group("C:2*C:2")
    got = lift_minimal(V, V.closure([1]), [2])
    assert set(got.members) == {1, 2}

    S4 = build_group("S:4")
    trivial = S4.closure([])
    reps = [S4.generators["t"], S4.generators["c"]]
    assert lift_minimal(S4, trivial, reps).members == tuple(sorted(reps))


def test_lift_minimal_rejects_bad_quotient_set():
    C4 = build_group("C:4")
    with pytest.raises(GroupError):
        lift_minimal(C4, C4.closure([2]), [2])   # projects to the identity coset


def test_lift_projection_covers_input():
    from groupgraphs.structure import quotient

    Q16 = build_group("Q:16")
    N = Q16.closure([Q16.power(Q16.generators["a"], 4)])
    Q, proj = quotient(Q16, N)
    # pick an irredundant generating pair of the quotient, lift it
    from groupgraphs.mingen import enumerate_irredundant as enum
    pair = next(s for s in enum(Q, 2) if len(s.members) == 2)
    reps = [int(min(g for g in range(Q16.order) if int(proj[g]) == c))
            for c in pair.members]
    lifted = lift_minimal(Q16, N, reps)
    assert set(reps) <= set(lifted.members)
    assert len(lifted.members) >= len(pair.members)


def test_gaschutz_examples():
    C6 = build_group("C:6")
    N = C6.closure([2])
    got = gaschutz_search(C6, N, [3])
    assert len(got) == 1 and C6.element_order(C6.mul(3, got[0])) == 6

    S4 = build_group("S:4")
    trivial = S4.closure([])
    reps = [S4.generators["t"], S4.generators["c"]]
    assert gaschutz_search(S4, trivial, reps) == [0, 0]

    V = build_group("C:2*C:2")
    whole = V.closure([1, 2])
    ns = gaschutz_search(V, whole, [0, 0])
    assert V.closure(ns).size == 4


def test_gaschutz_search_space_cap(monkeypatch):
    monkeypatch.setenv("GROUPGRAPHS_GASCHUTZ_CAP", "3")
    V = build_group("C:2*C:2")
    with pytest.raises(CapExceeded):
        gaschutz_search(V, V.closure([1, 2]), [0, 0])


def test_rank_cap(monkeypatch):
    monkeypatch.setenv("GROUPGRAPHS_RANK_CAP", "5")
    with pytest.raises(CapExceeded):
        rank_d(build_group("S:4"))


def test_enumeration_cap(monkeypatch):
    monkeypatch.setenv("GROUPGRAPHS_ENUMERATION_CAP", "5")
    with pytest.raises(CapExceeded):
        tarski_table(build_group("S:4"))


def test_gaschutz_rejects_non_generating_cosets():
    C6 = build_group("C:6")
    # g^2 projects to the identity of C6/<g^2>, so the coset cannot generate
    with pytest.raises(GroupError):
        gaschutz_search(C6, C6.closure([2]), [2])
