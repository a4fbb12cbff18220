"""Subgroup lattice enumeration, maximal subgroups, Frattini subgroup."""

from __future__ import annotations

from .caps import cap
from .group import CapExceeded, FiniteGroup, SubgroupMask

_LATTICE_CACHE: dict = {}


def all_subgroups(G: FiniteGroup) -> list:
    """Every subgroup of G as a SubgroupMask, by closure-extension BFS.

    Refuses groups above the lattice cap rather than truncating.
    """
    if G.order > cap("LATTICE_CAP"):
        raise CapExceeded(
            f"|G|={G.order} exceeds lattice cap {cap('LATTICE_CAP')}; "
            "subgroup enumeration refused"
        )
    key = id(G)
    hit = _LATTICE_CACHE.get(key)
    if hit is not None:
        return hit
    trivial = 1
    found = {trivial}
    frontier = [trivial]
    while frontier:
        new = []
        for bits in frontier:
            for g in range(1, G.order):
                if bits >> g & 1:
                    continue
                ext = G.extend_subgroup(bits, g)
                if ext not in found:
                    found.add(ext)
                    new.append(ext)
        frontier = new
    masks = [SubgroupMask(b, G) for b in sorted(found, key=lambda b: (b.bit_count(), b))]
    _LATTICE_CACHE[key] = masks
    return masks


def maximal_subgroups(G: FiniteGroup) -> list:
    """Exactly the maximal proper subgroups of G."""
    subs = all_subgroups(G)
    proper = [m for m in subs if m.size < G.order]
    out = []
    for m in proper:
        if any(o.size > m.size and (m.bits & o.bits) == m.bits for o in proper):
            continue
        out.append(m)
    return out


def frattini(G: FiniteGroup) -> SubgroupMask:
    """Intersection of all maximal subgroups (whole group if none exist)."""
    maxes = maximal_subgroups(G)
    bits = G.full_bits()
    for m in maxes:
        bits &= m.bits
    return SubgroupMask(bits, G)


def minimal_subgroups(G: FiniteGroup) -> list:
    """Subgroups of prime order (trivial group has none)."""
    seen = set()
    out = []
    for g in range(1, G.order):
        bits = G.cyclic_bits(g)
        if _is_prime(bits.bit_count()) and bits not in seen:
            seen.add(bits)
            out.append(SubgroupMask(bits, G))
    return out


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True
