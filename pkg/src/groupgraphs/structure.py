"""Quotients, solubility, and unique-minimal-subgroup classification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .group import FiniteGroup, GroupError, SubgroupMask
from .lattice import minimal_subgroups


def is_normal(G: FiniteGroup, N: SubgroupMask) -> bool:
    """Conjugation scan: g n g^-1 in N for all g in G, n in N."""
    ids = N.ids()
    for g in range(G.order):
        gi = G.inv(g)
        for n in ids:
            if not N.contains(G.mul(G.mul(g, n), gi)):
                return False
    return True


def quotient(G: FiniteGroup, N: SubgroupMask) -> tuple:
    """Coset group G/N plus the projection array (element id -> coset id).

    N must be normal (verified). Coset 0 is N itself; cosets are numbered
    by their smallest member so the construction is deterministic.
    """
    if not N.verify_subgroup():
        raise GroupError("N is not a subgroup")
    if not is_normal(G, N):
        raise GroupError("N is not normal in G")
    n_ids = N.ids()
    coset_of = [-1] * G.order
    reps = []
    for g in range(G.order):
        if coset_of[g] != -1:
            continue
        cid = len(reps)
        reps.append(g)
        for n in n_ids:
            coset_of[G.mul(g, n)] = cid
    order = len(reps)
    table = np.empty((order, order), dtype=np.int64)
    for a, ra in enumerate(reps):
        for b, rb in enumerate(reps):
            table[a, b] = coset_of[G.mul(ra, rb)]
    proj = np.asarray(coset_of, dtype=np.int64)
    Q = FiniteGroup(
        order,
        f"{G.label}/N{N.size}",
        table=table,
        element_names=[f"{G.name_of(r)}N" for r in reps],
    )
    # spot-check that projection is a homomorphism
    step = max(1, G.order // 16)
    for a in range(0, G.order, step):
        for b in range(0, G.order, step):
            if proj[G.mul(a, b)] != Q.mul(int(proj[a]), int(proj[b])):
                raise GroupError("projection failed homomorphism spot-check")
    return Q, proj


def derived_subgroup(G: FiniteGroup, within: Optional[int] = None) -> int:
    """Bits of the commutator subgroup of the subgroup given by `within`."""
    ids = list(range(G.order)) if within is None else list(_bits_ids(within))
    comms = set()
    if G.table is not None:
        arr = np.asarray(ids, dtype=np.int64)
        inv = np.asarray([G.inv(i) for i in ids], dtype=np.int64)
        ab = G.table[np.ix_(arr, arr)]
        iab = G.table[np.ix_(inv, inv)]
        comms = set(int(v) for v in np.unique(G.table[iab, ab]))
    else:
        for a in ids:
            ia = G.inv(a)
            for b in ids:
                comms.add(G.mul(G.mul(G.inv(b), ia), G.mul(b, a)))
    return G.closure_bits(comms)


def _bits_ids(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def is_soluble(G: FiniteGroup) -> bool:
    """Derived series reaches the trivial subgroup."""
    bits = G.full_bits()
    for _ in range(G.order + 1):
        if bits == 1:
            return True
        nxt = derived_subgroup(G, bits if bits != G.full_bits() else None)
        if nxt == bits:
            return False
        bits = nxt
    return False


@dataclass
class MinimalClassification:
    kind: str                      # cyclic-p-power | generalized-quaternion | neither
    unique_minimal: Optional[SubgroupMask]


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True  # n itself prime


def is_cyclic(G: FiniteGroup) -> bool:
    return any(G.cyclic_bits(g).bit_count() == G.order for g in range(G.order))


def _quaternion_presentation_match(G: FiniteGroup) -> bool:
    """Search for a, b with a^(m/2)=1, b^2=a^(m/4), a^b=a^-1, <a,b>=G."""
    m = G.order
    half, quarter = m // 2, m // 4
    orders = G.element_orders()
    for a in range(1, m):
        if orders[a] != half:
            continue
        a_bits = G.cyclic_bits(a)
        target_sq = G.power(a, quarter)
        a_inv = G.inv(a)
        for b in range(1, m):
            if a_bits >> b & 1:
                continue
            if G.mul(b, b) != target_sq:
                continue
            if G.mul(G.mul(G.inv(b), a), b) != a_inv:
                continue
            if G.extend_subgroup(a_bits, b).bit_count() == m:
                return True
    return False


def classify_unique_minimal(G: FiniteGroup) -> MinimalClassification:
    """Detect cyclic p-power groups and generalized quaternion groups.

    Quaternion recognition is by explicit presentation match against the
    order-2^n Cayley relations, not by invariant heuristics.
    """
    minimal = minimal_subgroups(G)
    unique = minimal[0] if len(minimal) == 1 else None
    if G.order > 1 and _is_prime_power(G.order) and is_cyclic(G):
        return MinimalClassification("cyclic-p-power", unique)
    if (
        unique is not None
        and G.order >= 8
        and G.order & (G.order - 1) == 0
        and not G.is_abelian()
        and _quaternion_presentation_match(G)
    ):
        return MinimalClassification("generalized-quaternion", unique)
    return MinimalClassification("neither", unique)
