"""Finite group engine: element-indexed groups, subgroup masks, closures.

Elements are ints 0..order-1 with 0 the identity. Groups of order up to
the table cap carry a full Cayley table (numpy, O(1) multiplication);
larger groups keep concrete elements behind a hash index and multiply
on demand. Subgroups are bitmasks over element ids.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

import numpy as np

class GroupError(Exception):
    pass


class CapExceeded(GroupError):
    pass


@dataclass(frozen=True)
class SubgroupMask:
    """Bitset of element ids denoting a subgroup of `parent`."""

    bits: int
    parent: "FiniteGroup"

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def contains(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def indices(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def ids(self) -> list:
        return list(self.indices())

    def __and__(self, other: "SubgroupMask") -> "SubgroupMask":
        return SubgroupMask(self.bits & other.bits, self.parent)

    def is_full(self) -> bool:
        return self.size == self.parent.order

    def verify_subgroup(self) -> bool:
        """Full scan: contains identity, closed under mul and inv."""
        g = self.parent
        ids = self.ids()
        if not self.contains(0):
            return False
        for a in ids:
            if not self.contains(g.inv(a)):
                return False
            for b in ids:
                if not self.contains(g.mul(a, b)):
                    return False
        return True


def mask_from_ids(group: "FiniteGroup", ids) -> SubgroupMask:
    bits = 0
    for i in ids:
        bits |= 1 << i
    return SubgroupMask(bits, group)


class FiniteGroup:
    """Immutable finite group on element ids 0..order-1, identity = 0."""

    def __init__(
        self,
        order: int,
        label: str,
        table: Optional[np.ndarray] = None,
        elements: Optional[list] = None,
        mul_fn: Optional[Callable] = None,
        inv_fn: Optional[Callable] = None,
        element_names: Optional[list] = None,
        generators: Optional[dict] = None,
    ):
        if table is None and (elements is None or mul_fn is None):
            raise ValueError("need a Cayley table or elements plus mul_fn")
        self.order = order
        self.label = label
        self.table = table
        self.elements = elements
        self._mul_fn = mul_fn
        self._inv_fn = inv_fn
        self.element_names = element_names
        self.generators = dict(generators or {})
        self._index = {e: i for i, e in enumerate(elements)} if elements else None
        self._inv: Optional[np.ndarray] = None
        self._cyclic: dict = {}
        # closure caches: bits of known subgroups -> generating ids;
        # (subgroup bits, new id) -> extended subgroup bits
        self._subgroup_gens: dict = {1: ()}
        self._extend_cache: dict = {}
        self._element_orders: Optional[list] = None

    # -- element arithmetic -------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if self.table is not None:
            return int(self.table[a, b])
        return self._index[self._mul_fn(self.elements[a], self.elements[b])]

    def inv(self, a: int) -> int:
        if self._inv is None:
            self._inv = self._build_inverses()
        return int(self._inv[a])

    def _build_inverses(self) -> np.ndarray:
        if self.table is not None:
            return (self.table == 0).argmax(axis=1)
        if self._inv_fn is not None:
            return np.array(
                [self._index[self._inv_fn(e)] for e in self.elements], dtype=np.int64
            )
        inv = np.empty(self.order, dtype=np.int64)
        for a in range(self.order):
            # g^(order(g)-1); cheaper than scanning a full row
            x, prev = self.mul(a, a), a
            while x != 0:
                prev, x = x, self.mul(x, a)
            inv[a] = prev if a != 0 else 0
        return inv

    def power(self, a: int, k: int) -> int:
        r = 0
        x = a
        k = int(k)
        if k < 0:
            x = self.inv(a)
            k = -k
        while k:
            if k & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            k >>= 1
        return r

    def element_order(self, a: int) -> int:
        x = a
        n = 1
        while x != 0:
            x = self.mul(x, a)
            n += 1
        return n

    def element_orders(self) -> list:
        if self._element_orders is None:
            self._element_orders = [self.element_order(a) for a in range(self.order)]
        return self._element_orders

    def name_of(self, i: int) -> str:
        if self.element_names is not None:
            return self.element_names[i]
        return str(i)

    def is_abelian(self) -> bool:
        if self.table is not None:
            return bool(np.array_equal(self.table, self.table.T))
        return all(
            self.mul(a, b) == self.mul(b, a)
            for a in range(self.order)
            for b in range(self.order)
        )

    # -- closures ------------------------------------------------------------

    def _close_from_generators(self, gens: Sequence[int]) -> int:
        """Bits of the subgroup generated by `gens` (semigroup BFS)."""
        bits = 1
        members = [0]
        frontier = []
        for g in gens:
            if not bits >> g & 1:
                bits |= 1 << g
                members.append(g)
                frontier.append(g)
        gens = list(gens)
        if self.table is not None and gens:
            garr = np.asarray(gens, dtype=np.int64)
            while frontier:
                prods = self.table[np.asarray(frontier, dtype=np.int64)][:, garr]
                frontier = []
                for p in np.unique(prods):
                    p = int(p)
                    if not bits >> p & 1:
                        bits |= 1 << p
                        frontier.append(p)
        else:
            while frontier:
                new = []
                for x in frontier:
                    for g in gens:
                        p = self.mul(x, g)
                        if not bits >> p & 1:
                            bits |= 1 << p
                            new.append(p)
                frontier = new
        return bits

    def extend_subgroup(self, bits: int, g: int) -> int:
        """Bits of <H, g> for a subgroup H given by `bits`."""
        if bits >> g & 1:
            return bits
        key = (bits, g)
        hit = self._extend_cache.get(key)
        if hit is not None:
            return hit
        gens = self._subgroup_gens.get(bits)
        if gens is not None:
            out = self._close_from_generators(gens + (g,))
            self._subgroup_gens.setdefault(out, gens + (g,))
        else:
            # unknown-provenance mask: multiply by every member
            members = tuple(_bit_ids(bits))
            out = self._close_from_generators(members + (g,))
            self._subgroup_gens.setdefault(out, members + (g,))
        self._extend_cache[key] = out
        return out

    def closure_bits(self, ids: Sequence[int]) -> int:
        bits = 1
        for g in sorted(set(int(i) for i in ids)):
            if not 0 <= g < self.order:
                raise GroupError(f"invalid element id {g}")
            bits = self.extend_subgroup(bits, g)
        return bits

    def closure(self, ids: Sequence[int]) -> SubgroupMask:
        """Least subgroup containing `ids`; closure([]) = {identity}."""
        return SubgroupMask(self.closure_bits(ids), self)

    def cyclic_bits(self, g: int) -> int:
        hit = self._cyclic.get(g)
        if hit is None:
            hit = self.extend_subgroup(1, g)
            self._cyclic[g] = hit
        return hit

    def generates(self, ids: Sequence[int]) -> bool:
        return self.closure_bits(ids).bit_count() == self.order

    def full_bits(self) -> int:
        return (1 << self.order) - 1

    # -- sanity --------------------------------------------------------------

    def validate(self, rng: Optional[random.Random] = None, triples: int = 10_000):
        """Check identity/inverse laws everywhere and associativity either
        exhaustively (order <= 64) or on `triples` random triples."""
        n = self.order
        for g in range(n):
            if self.mul(0, g) != g or self.mul(g, 0) != g:
                raise GroupError(f"identity law fails at {g}")
            if self.mul(g, self.inv(g)) != 0:
                raise GroupError(f"inverse law fails at {g}")
        if self.table is not None:
            t = self.table
            if t.shape != (n, n) or t.min() < 0 or t.max() >= n:
                raise GroupError("multiplication table is not closed")
        if n <= 64 and self.table is not None:
            t = self.table.astype(np.int64)
            if not np.array_equal(t[t, :], t[:, t]):
                raise GroupError("associativity fails")
        else:
            rng = rng or random.Random(0)
            for _ in range(triples):
                a, b, c = (rng.randrange(n) for _ in range(3))
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                    raise GroupError(f"associativity fails at ({a},{b},{c})")
        return self

    def __repr__(self):
        return f"FiniteGroup({self.label}, order={self.order})"


def _bit_ids(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def subgroup_as_group(G: FiniteGroup, mask: SubgroupMask, label: Optional[str] = None) -> tuple:
    """Reindex a subgroup mask as a standalone FiniteGroup.

    Returns (group, to_sub, to_parent): id maps in both directions.
    """
    ids = mask.ids()
    if 0 not in ids:
        raise GroupError("subgroup must contain the identity")
    ids = [0] + [i for i in ids if i != 0]
    to_sub = {p: s for s, p in enumerate(ids)}
    n = len(ids)
    table = np.empty((n, n), dtype=np.int64)
    for a, pa in enumerate(ids):
        for b, pb in enumerate(ids):
            table[a, b] = to_sub[G.mul(pa, pb)]
    sub = FiniteGroup(
        n,
        label or f"{G.label}|sub{n}",
        table=table,
        element_names=[G.name_of(i) for i in ids],
    )
    return sub, to_sub, ids
