"""Group engine tests: builders, closures, masks, the spec mini-language."""

import random

import pytest

from groupgraphs.build import (SpecParseError, build_group, parse_permutation,
                               semidirect_product)
from groupgraphs.group import CapExceeded, GroupError, mask_from_ids


def naive_closure(G, ids):
    """Independent oracle: saturate the set under multiplication."""
    cur = {0} | set(ids)
    while True:
        new = {G.mul(a, b) for a in cur for b in cur}
        if new <= cur:
            return cur
        cur |= new


SAMPLE_SPECS = ["C:12", "D:6", "Q:16", "Dic:3", "S:4", "A:4", "SL2:4",
                "C:2*C:2*C:2", "C:3*Q:8"]


@pytest.mark.parametrize("spec", SAMPLE_SPECS)
def test_axioms(spec):
    build_group(spec).validate(random.Random(1))


@pytest.mark.parametrize("spec,order", [
    ("S:3", 6), ("SL2:8", 504), ("Dic:3", 12), ("C:32", 32), ("D:12", 24),
    ("Q:32", 32), ("A:5", 60), ("SL2:4", 60), ("C:2*C:2*C:2", 8),
    ("C:3*Q:8", 24), ("S:1", 1), ("A:2", 1),
])
def test_orders(spec, order):
    assert build_group(spec).order == order


def test_sl2_order_formula():
    # |SL(2,q)| = q^3 - q, independently of the matrix enumeration
    for q in (2, 4, 8):
        assert build_group(f"SL2:{q}").order == q ** 3 - q


def test_closure_examples():
    S3 = build_group("S:3")
    c3 = S3.generators["c"]
    t = S3.generators["t"]
    assert S3.closure([c3]).size == 3
    assert S3.closure([]).ids() == [0]
    assert S3.closure([t, c3]).size == 6
    assert S3.closure([c3]).bits == mask_from_ids(S3, naive_closure(S3, [c3])).bits


@pytest.mark.parametrize("spec", ["S:4", "Dic:3", "C:12", "Q:16"])
def test_closure_matches_naive_oracle(spec):
    G = build_group(spec)
    rng = random.Random(7)
    for _ in range(12):
        ids = rng.sample(range(G.order), rng.randrange(0, 3))
        assert set(G.closure(ids).ids()) == naive_closure(G, ids)


@pytest.mark.parametrize("spec", SAMPLE_SPECS)
def test_lagrange(spec):
    G = build_group(spec)
    for g in range(G.order):
        assert G.cyclic_bits(g).bit_count() == G.element_order(g)
    rng = random.Random(3)
    for _ in range(10):
        ids = rng.sample(range(G.order), rng.randrange(0, 4))
        assert G.order % G.closure(ids).size == 0


def test_quaternion_relations():
    # a^(2^(n-1)) = 1, b^2 = a^(2^(n-2)), b^-1 a b = a^-1
    for m in (8, 16, 32):
        Q = build_group(f"Q:{m}")
        a, b = Q.generators["a"], Q.generators["b"]
        assert Q.power(a, m // 2) == 0
        assert Q.mul(b, b) == Q.power(a, m // 4)
        assert Q.mul(Q.mul(Q.inv(b), a), b) == Q.inv(a)
        assert Q.closure([a, b]).size == m


def test_q8_paper_presentation_relation():
    # in Q8 conjugation by a also inverts b (fails for larger 2-powers)
    Q = build_group("Q:8")
    a, b = Q.generators["a"], Q.generators["b"]
    assert Q.mul(Q.mul(Q.inv(a), b), a) == Q.inv(b)


def test_dicyclic_relations():
    # a^4 = 1, b^n = 1, a^-1 b a = b^-1, order 4n
    for n in (2, 3, 5, 6):
        D = build_group(f"Dic:{n}")
        a, b = D.generators["a"], D.generators["b"]
        assert D.power(a, 4) == 0
        assert D.power(b, n) == 0
        assert D.mul(D.mul(D.inv(a), b), a) == D.inv(b)
        assert D.order == 4 * n
        assert D.closure([a, b]).size == 4 * n


def test_dihedral_relations():
    D = build_group("D:6")
    r, s = D.generators["r"], D.generators["s"]
    assert D.power(r, 6) == 0
    assert D.mul(s, s) == 0
    assert D.mul(D.mul(s, r), s) == D.inv(r)


def test_identity_is_zero_and_names():
    G = build_group("Dic:3")
    assert G.name_of(0) == "1"
    assert G.mul(0, 5) == 5
    a = G.generators["a"]
    assert G.name_of(a) == "a"


def test_hash_backend_beyond_table_cap():
    S7 = build_group("S:7")        # 5040 > table cap
    assert S7.table is None
    assert S7.order == 5040
    t, c = S7.generators["t"], S7.generators["c"]
    assert S7.closure([t, c]).size == 5040
    assert S7.mul(t, S7.inv(t)) == 0
    assert S7.element_order(c) == 7


def test_parse_errors():
    for bad in ["Q:4", "Q:12", "X:3", "C:0", "", "C:3**C:2", "dic:3"]:
        with pytest.raises(SpecParseError):
            build_group(bad)


def test_order_cap(monkeypatch):
    monkeypatch.setenv("GROUPGRAPHS_ORDER_CAP", "100")
    with pytest.raises(CapExceeded):
        build_group("S:5")


def test_permutation_parsing():
    assert parse_permutation("(1 2 3)(4 5)") == (1, 2, 0, 4, 3)
    assert parse_permutation("(1,2)") == (1, 0)
    with pytest.raises(SpecParseError):
        parse_permutation("(1 2")
    with pytest.raises(SpecParseError):
        parse_permutation("(0 1)")
    with pytest.raises(SpecParseError):
        parse_permutation("(1 1)")


def test_file_group(tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text("# one six-cycle as two disjoint cycles\n(1 2 3)(4 5)\n")
    G = build_group(f"file:{path}")
    assert G.order == 6
    assert G.is_abelian()
    empty = tmp_path / "empty.txt"
    empty.write_text("\n")
    with pytest.raises(SpecParseError):
        build_group(f"file:{empty}")


def test_direct_product_structure():
    G = build_group("C:3*C:4")
    assert G.order == 12
    assert G.is_abelian()
    assert G.element_order(G.generators["g.1"]) == 3
    assert G.element_order(G.generators["g.2"]) == 4


def test_semidirect_product_action_checks():
    import numpy as np

    C3 = build_group("C:3")
    C2 = build_group("C:2")
    inversion = np.array([[0, 1, 2], [0, 2, 1]])
    G = semidirect_product(C3, C2, inversion, label="S3-like")
    assert G.order == 6
    assert not G.is_abelian()
    G.validate()
    bad = np.array([[0, 1, 2], [1, 2, 0]])   # order-3 permutation, not an involution action
    with pytest.raises(GroupError):
        semidirect_product(C3, C2, bad)


def test_subgroup_mask_verify():
    S3 = build_group("S:3")
    sub = S3.closure([S3.generators["c"]])
    assert sub.verify_subgroup()
    assert not mask_from_ids(S3, [0, 1, 3]).verify_subgroup()


def test_subgroup_as_group_roundtrip():
    from groupgraphs.group import subgroup_as_group

    S4 = build_group("S:4")
    mask = S4.closure([S4.generators["c"]])       # C4
    H, to_sub, ids = subgroup_as_group(S4, mask)
    assert H.order == 4
    H.validate()
    for a in range(H.order):
        for b in range(H.order):
            assert ids[H.mul(a, b)] == S4.mul(ids[a], ids[b])
