"""Irredundant generating sets: d(G), m(G), Tarski tables, lifting.

An irredundant (minimal) generating set is one no proper subset of which
generates. The enumerator walks ascending-id member tuples depth-first,
pruning any prefix that is redundant as a set; every prefix of an
irredundant set is irredundant, so the walk is exhaustive.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .caps import cap
from .group import CapExceeded, FiniteGroup, GroupError, SubgroupMask
from .structure import quotient


@dataclass(frozen=True)
class IrredundantSet:
    members: tuple
    parent: FiniteGroup

    def validate(self) -> "IrredundantSet":
        G = self.parent
        if G.closure_bits(self.members).bit_count() != G.order:
            raise GroupError("set does not generate")
        for m in self.members:
            rest = [x for x in self.members if x != m]
            if G.closure_bits(rest).bit_count() == G.order:
                raise GroupError(f"member {m} is redundant")
        return self


@dataclass
class TarskiTable:
    d: int
    m: int
    witnesses: dict  # size -> IrredundantSet


def subgroup_chain_bound(n: int) -> int:
    """Longest strictly increasing subgroup chain: sum of prime exponents."""
    k, p = 0, 2
    while n > 1:
        while n % p == 0:
            n //= p
            k += 1
        p += 1
    return k


def rank_d(G: FiniteGroup) -> int:
    """Least size of a generating set; 0 for the trivial group."""
    if G.order > cap("RANK_CAP"):
        raise CapExceeded(f"|G|={G.order} exceeds rank cap {cap('RANK_CAP')}")
    if G.order == 1:
        return 0
    full = G.full_bits()
    memo: dict = {}

    def reachable(bits: int, budget: int) -> bool:
        if bits == full:
            return True
        if budget == 0:
            return False
        key = (bits, budget)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out = False
        for z in range(1, G.order):
            if bits >> z & 1:
                continue
            if reachable(G.extend_subgroup(bits, z), budget - 1):
                out = True
                break
        memo[key] = out
        return out

    for k in range(1, subgroup_chain_bound(G.order) + 1):
        if reachable(1, k):
            return k
    raise GroupError("no generating set found within the chain bound")


def _enum_cap_check(G: FiniteGroup):
    if G.order > cap("ENUMERATION_CAP"):
        raise CapExceeded(
            f"|G|={G.order} exceeds enumeration cap {cap('ENUMERATION_CAP')}")


def enumerate_irredundant(G: FiniteGroup, size_bound: int) -> Iterator[IrredundantSet]:
    """All irredundant generating sets of size <= size_bound, each once."""
    _enum_cap_check(G)
    full = G.full_bits()
    if G.order == 1:
        if size_bound >= 0:
            yield IrredundantSet((), G)
        return
    bound = min(size_bound, subgroup_chain_bound(G.order))

    def walk(members: tuple, clos: int, others: tuple) -> Iterator[IrredundantSet]:
        if clos == full:
            yield IrredundantSet(members, G)
            return
        if len(members) >= bound:
            return
        start = members[-1] + 1 if members else 1
        for z in range(start, G.order):
            if clos >> z & 1:
                continue
            new_others = []
            ok = True
            for m, ob in zip(members, others):
                ext = G.extend_subgroup(ob, z)
                if ext >> m & 1:
                    ok = False
                    break
                new_others.append(ext)
            if not ok:
                continue
            yield from walk(
                members + (z,),
                G.extend_subgroup(clos, z),
                tuple(new_others) + (clos,),
            )

    yield from walk((), 1, ())


def tarski_table(G: FiniteGroup) -> TarskiTable:
    """d(G), m(G) and one witness per size in [d, m]; asserts no gaps.

    The DFS bound is the maximal subgroup-chain length, which no
    irredundant set can exceed, so m is certified by exhaustion.
    """
    _enum_cap_check(G)
    if G.order == 1:
        return TarskiTable(0, 0, {0: IrredundantSet((), G)})
    witnesses: dict = {}
    bound = subgroup_chain_bound(G.order)
    for s in enumerate_irredundant(G, bound):
        witnesses.setdefault(len(s.members), s)
    if not witnesses:
        raise GroupError("no irredundant generating set found")
    d, m = min(witnesses), max(witnesses)
    missing = [k for k in range(d, m + 1) if k not in witnesses]
    if missing:
        raise GroupError(f"witness sizes have gaps at {missing}")
    return TarskiTable(d, m, witnesses)


def tarski_csv(label: str, table: TarskiTable) -> str:
    """CSV rows: group,d,m,size,witness (witness = space-joined ids)."""
    buf = io.StringIO()
    buf.write("group,d,m,size,witness\n")
    for size in sorted(table.witnesses):
        ids = " ".join(str(i) for i in table.witnesses[size].members)
        buf.write(f"{label},{table.d},{table.m},{size},{ids}\n")
    return buf.getvalue()


def contains_in_irredundant(G: FiniteGroup, x: int, y: int) -> Optional[IrredundantSet]:
    """An irredundant generating set of G containing x and y, or None.

    Returns None immediately unless x, y are mutually outside each
    other's cyclic subgroups; otherwise backtracks exhaustively over
    ascending-id extensions.
    """
    if G.order > cap("INDEPENDENCE_CAP"):
        raise CapExceeded(
            f"|G|={G.order} exceeds independence cap {cap('INDEPENDENCE_CAP')}")
    if x == y:
        raise GroupError("need two distinct elements")
    if G.cyclic_bits(y) >> x & 1 or G.cyclic_bits(x) >> y & 1:
        return None
    full = G.full_bits()
    base = (x, y) if x < y else (y, x)
    clos0 = G.extend_subgroup(G.cyclic_bits(base[0]), base[1])
    others0 = (G.cyclic_bits(base[1]), G.cyclic_bits(base[0]))
    bound = subgroup_chain_bound(G.order)

    def walk(members, clos, others, last) -> Optional[tuple]:
        if clos == full:
            return members
        if len(members) >= bound:
            return None
        for z in range(last + 1, G.order):
            if clos >> z & 1 or z in base:
                continue
            new_others = []
            ok = True
            for m, ob in zip(members, others):
                ext = G.extend_subgroup(ob, z)
                if ext >> m & 1:
                    ok = False
                    break
                new_others.append(ext)
            if not ok:
                continue
            got = walk(members + (z,), G.extend_subgroup(clos, z),
                       tuple(new_others) + (clos,), z)
            if got is not None:
                return got
        return None

    got = walk(base, clos0, others0, -1)
    if got is None:
        return None
    return IrredundantSet(tuple(sorted(got)), G)


def generating_subset_of_mask(G: FiniteGroup, mask: SubgroupMask) -> list:
    """Greedy ascending generating list for the subgroup given by mask."""
    bits, gens = 1, []
    for g in mask.ids():
        if g == 0 or bits >> g & 1:
            continue
        bits = G.extend_subgroup(bits, g)
        gens.append(g)
        if bits == mask.bits:
            break
    if bits != mask.bits:
        raise GroupError("mask is not closed")
    return gens


def lift_minimal(G: FiniteGroup, N: SubgroupMask, reps: Sequence[int]) -> IrredundantSet:
    """Lift an irredundant generating set of G/N to one of G.

    `reps` are G-elements whose cosets form an irredundant generating set
    of the quotient (verified). The result is reps + a pruned tail inside
    N; the reps are never pruned, N-elements are pruned in ascending id
    order with generation re-tested after each removal.
    """
    Q, proj = quotient(G, N)
    bar = [int(proj[r]) for r in reps]
    if len(set(bar)) != len(bar) or Q.closure_bits(bar).bit_count() != Q.order:
        raise GroupError("reps do not project to a generating set of G/N")
    for b in bar:
        if Q.closure_bits([v for v in bar if v != b]).bit_count() == Q.order:
            raise GroupError("projected set is not irredundant in G/N")
    tail = generating_subset_of_mask(G, N)
    chosen = list(reps) + [t for t in tail if t not in reps]
    if G.closure_bits(chosen).bit_count() != G.order:
        raise GroupError("lift failed to generate")
    for z in sorted(t for t in chosen if t not in reps):
        trial = [c for c in chosen if c != z]
        if G.closure_bits(trial).bit_count() == G.order:
            chosen = trial
    return IrredundantSet(tuple(sorted(chosen)), G).validate()


def gaschutz_search(G: FiniteGroup, N: SubgroupMask, reps: Sequence[int]) -> list:
    """Find n_i in N with <y_1 n_1, ..., y_k n_k> = G for coset reps y_i.

    Exhaustive lexicographic search over N^k; existence is guaranteed
    when the cosets generate G/N and k >= d(G).
    """
    Q, proj = quotient(G, N)
    if Q.closure_bits([int(proj[r]) for r in reps]).bit_count() != Q.order:
        raise GroupError("cosets do not generate G/N")
    n_ids = N.ids()
    k = len(reps)
    if len(n_ids) ** k > cap("GASCHUTZ_CAP"):
        raise CapExceeded(f"|N|^k = {len(n_ids) ** k} exceeds search cap")
    full = G.full_bits()

    def walk(pos: int, clos: int, picked: tuple) -> Optional[tuple]:
        if pos == k:
            return picked if clos == full else None
        for n in n_ids:
            got = walk(pos + 1,
                       G.extend_subgroup(clos, G.mul(reps[pos], n)),
                       picked + (n,))
            if got is not None:
                return got
        return None

    got = walk(0, 1, ())
    if got is None:
        raise GroupError("no lift found; preconditions violated")
    return list(got)
