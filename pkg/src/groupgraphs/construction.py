"""Symbolic model of a prosoluble semidirect product with t-block sign action.

The ambient group is (prod_s N_s) x| H where H is elementary abelian of
rank 2t with basis flips y_1..y_2t, s ranges over "slots" (F2 vectors of
length 2t with no (0,0) block pair, 3^t of them, each tagged with a
distinct odd prime), and N_s is a rank-3 module whose third coordinate
is negated by y_i exactly when slot bit i is set. Elements are stored
exactly: one integer triple per slot plus the flip vector. Integer
coordinates are canonical representatives of the prime-indexed modules;
a nonzero integer determinant therefore certifies finite index in N_s.

Adjacency machinery:
  * matrix_criterion / common_fixed_slot_exists: dual tests for whether
    two flip vectors annihilate a common slot (which forbids adjacency);
  * openness_witness: per-slot determinant of the squares and commutator
    of a pair, a sufficient certificate that the pair generates an open
    subgroup;
  * common_neighbor: deterministic construction of a third element
    adjacent to two given same-block elements;
  * component_census: seeded sampling demonstration that the non-isolated
    part of the graph splits into exactly t components (one per block).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from .caps import cap
from .group import GroupError


def first_odd_primes(k: int) -> list:
    out = []
    n = 3
    while len(out) < k:
        if all(n % p for p in out) and all(n % d for d in range(3, int(n ** 0.5) + 1, 2)):
            out.append(n)
        n += 2
    return out


def enumerate_slots(t: int) -> list:
    """All F2 vectors of length 2t with every (2i-1, 2i) block nonzero,
    in lexicographic order."""
    out = []
    for bits in itertools.product((0, 1), repeat=2 * t):
        if all(bits[2 * i] or bits[2 * i + 1] for i in range(t)):
            out.append(bits)
    return out


def flip_vector(t: int, *set_bits) -> tuple:
    v = [0] * (2 * t)
    for b in set_bits:
        v[b] ^= 1
    return tuple(v)


def block_of_flips(flips) -> int:
    """1-based block index if the flip vector is supported on a single
    block, else 0 (0 also for the zero vector)."""
    t = len(flips) // 2
    blocks = [i + 1 for i in range(t) if flips[2 * i] or flips[2 * i + 1]]
    return blocks[0] if len(blocks) == 1 else 0


@dataclass(frozen=True)
class Element:
    """coords[s] = integer triple at slot s; flips = F2 vector of len 2t."""

    coords: tuple   # tuple of (z1, z2, z3) triples, one per slot
    flips: tuple

    def coord_array(self) -> np.ndarray:
        return np.asarray(self.coords, dtype=np.int64)


class Construction:
    """Context for fixed t and generator variant ("corrected" or "paper")."""

    V_CONST = (1, 0, 1)
    W_BY_VARIANT = {"paper": (1, 0, -1), "corrected": (0, 1, -1)}

    def __init__(self, t: int, variant: str = "corrected"):
        if t < 1:
            raise GroupError("t must be >= 1")
        if variant not in self.W_BY_VARIANT:
            raise GroupError(f"unknown variant {variant!r}")
        self.t = t
        self.variant = variant
        self.slots = enumerate_slots(t)
        self.n_slots = len(self.slots)
        self.slot_matrix = np.asarray(self.slots, dtype=np.int64)
        self.primes = first_odd_primes(self.n_slots)
        self.slot_prime = dict(zip(self.slots, self.primes))
        self._signs: dict = {}

    # -- elements ------------------------------------------------------------

    def element(self, coords, flips) -> Element:
        coords = tuple(tuple(int(v) for v in c) for c in coords)
        flips = tuple(int(v) & 1 for v in flips)
        if len(coords) != self.n_slots or any(len(c) != 3 for c in coords):
            raise GroupError("need one integer triple per slot")
        if len(flips) != 2 * self.t:
            raise GroupError(f"flip vector must have length {2 * self.t}")
        return Element(coords, flips)

    def constant_element(self, triple, flips) -> Element:
        return self.element([triple] * self.n_slots, flips)

    def identity(self) -> Element:
        return self.constant_element((0, 0, 0), (0,) * (2 * self.t))

    def signs(self, flips) -> np.ndarray:
        """Per-slot action sign of a flip vector: -1 where the F2 pairing
        with the slot is odd, else +1."""
        hit = self._signs.get(flips)
        if hit is None:
            par = (self.slot_matrix @ np.asarray(flips, dtype=np.int64)) % 2
            hit = np.where(par == 1, -1, 1).astype(np.int64)
            self._signs[flips] = hit
        return hit

    def _twist(self, coords: np.ndarray, flips) -> np.ndarray:
        out = coords.copy()
        out[:, 2] *= self.signs(flips)
        return out

    @staticmethod
    def _pack(coords: np.ndarray, flips) -> Element:
        return Element(tuple(map(tuple, coords.tolist())), tuple(flips))

    @staticmethod
    def _xor(f1, f2) -> tuple:
        return tuple(x ^ y for x, y in zip(f1, f2))

    def mul(self, a: Element, b: Element) -> Element:
        coords = a.coord_array() + self._twist(b.coord_array(), a.flips)
        return self._pack(coords, self._xor(a.flips, b.flips))

    def inv(self, a: Element) -> Element:
        return self._pack(-self._twist(a.coord_array(), a.flips), a.flips)

    def square(self, a: Element) -> Element:
        return self.mul(a, a)

    def commutator(self, a: Element, b: Element) -> Element:
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    # array-based twins of the element operations, for the hot loops

    def _square_arr(self, arr: np.ndarray, flips) -> np.ndarray:
        return arr + self._twist(arr, flips)

    def _commutator_arr(self, a1, f1, a2, f2) -> np.ndarray:
        left = -self._twist(a1, f1) + self._twist(-self._twist(a2, f2), f1)
        right = a1 + self._twist(a2, f1)
        return left + self._twist(right, self._xor(f1, f2))

    # -- standard generators ---------------------------------------------------

    def w_const(self) -> tuple:
        return self.W_BY_VARIANT[self.variant]

    def standard_generators(self) -> list:
        """2t generators: odd positions carry (1,0,1), even positions the
        variant-dependent second constant, each with one flip bit set."""
        out = []
        for i in range(self.t):
            out.append(self.constant_element(self.V_CONST, flip_vector(self.t, 2 * i)))
            out.append(self.constant_element(self.w_const(), flip_vector(self.t, 2 * i + 1)))
        return out

    # -- non-isolation conditions ----------------------------------------------

    def non_isolation_conditions(self, g: Element) -> dict:
        """The three slot-wise conditions a non-isolated vertex must meet:
        (1) nonzero flips, (2) (z1,z2) != (0,0) at every slot, (3) z3 != 0
        at every slot the flips act trivially on."""
        failures = []
        if not any(g.flips):
            failures.append("flips are zero")
        arr = g.coord_array()
        bad12 = np.flatnonzero((arr[:, 0] == 0) & (arr[:, 1] == 0))
        for s in bad12:
            failures.append(f"slot {self.slots[int(s)]}: (z1,z2)=(0,0)")
        fixed = self.signs(g.flips) == 1
        bad3 = np.flatnonzero(fixed & (arr[:, 2] == 0))
        for s in bad3:
            failures.append(f"slot {self.slots[int(s)]}: flips act trivially but z3=0")
        return {
            "block": block_of_flips(g.flips),
            "passed": not failures,
            "failures": failures,
        }

    # -- adjacency machinery -----------------------------------------------------

    def witness_rows(self, g1: Element, g2: Element) -> np.ndarray:
        """(n_slots, 3, 3) integer rows: coordinate parts of g1^2, g2^2,
        [g1, g2] per slot."""
        rows = np.stack([
            self.square(g1).coord_array(),
            self.square(g2).coord_array(),
            self.commutator(g1, g2).coord_array(),
        ], axis=1)
        return rows

    def _witness_dets(self, a1, f1, a2, f2) -> np.ndarray:
        rows = (self._square_arr(a1, f1), self._square_arr(a2, f2),
                self._commutator_arr(a1, f1, a2, f2))
        return np.einsum("ij,ij->i", rows[0], np.cross(rows[1], rows[2]))

    def openness_witness(self, g1: Element, g2: Element) -> dict:
        """Pass iff the flip vectors fix no common slot and every slot's
        3x3 determinant (squares + commutator) is nonzero. Sufficient,
        not necessary, for the pair to generate an open subgroup."""
        dets = self._witness_dets(g1.coord_array(), g1.flips,
                                  g2.coord_array(), g2.flips)
        crit = matrix_criterion(g1.flips, g2.flips, self.t)
        return {
            "passed": bool(crit and np.all(dets != 0)),
            "criterion": crit,
            "determinants": [int(d) for d in dets],
        }

    def _block_if_valid(self, arr: np.ndarray, flips) -> int:
        """Block index when all three conditions hold, else 0."""
        b = block_of_flips(flips)
        if not b:
            return 0
        if ((arr[:, 0] == 0) & (arr[:, 1] == 0)).any():
            return 0
        if ((self.signs(flips) == 1) & (arr[:, 2] == 0)).any():
            return 0
        return b

    def _neighbor_arrays(self, a1, f1, a2, f2, block: int) -> tuple:
        i = block - 1
        options = (flip_vector(self.t, 2 * i + 1),
                   flip_vector(self.t, 2 * i),
                   flip_vector(self.t, 2 * i, 2 * i + 1))
        flips = next(f for f in options if f not in (f1, f2))

        z12 = np.zeros((self.n_slots, 2), dtype=np.int64)
        undecided = np.ones(self.n_slots, dtype=bool)
        for cand in ((1, 0), (0, 1), (1, 1), (1, 2), (2, 1)):
            d1 = cand[0] * a1[:, 1] - cand[1] * a1[:, 0]
            d2 = cand[0] * a2[:, 1] - cand[1] * a2[:, 0]
            ok = undecided & (d1 != 0) & (d2 != 0)
            z12[ok] = cand
            undecided &= ~ok
        if undecided.any():
            raise GroupError("no independent (z1,z2) pair found")  # unreachable

        fixed = self.signs(flips) == 1
        z3 = np.zeros(self.n_slots, dtype=np.int64)
        z3[fixed] = 1  # forbidden set {0} where the new flips act trivially
        active = ~fixed  # forbidden set {z3 of g1, z3 of g2}, at most two values
        for _ in range(3):
            clash = active & ((z3 == a1[:, 2]) | (z3 == a2[:, 2]))
            if not clash.any():
                break
            z3[clash] += 1
        return np.column_stack([z12, z3]), flips

    def common_neighbor(self, g1: Element, g2: Element) -> Element:
        """Deterministic third element adjacent to both inputs.

        Flips: lexicographically first nonzero block vector differing
        from both inputs'. Per slot, (z1, z2) is the first of
        (1,0),(0,1),(1,1),(1,2),(2,1) independent of both inputs' (z1,z2)
        pairs, and z3 is the smallest non-negative integer outside the
        forbidden set dictated by which flips act on the slot.
        """
        a1, a2 = g1.coord_array(), g2.coord_array()
        b1 = self._block_if_valid(a1, g1.flips)
        b2 = self._block_if_valid(a2, g2.flips)
        if not b1 or not b2:
            raise GroupError("inputs must satisfy the non-isolation conditions "
                             "within a single block")
        if b1 != b2:
            raise GroupError("inputs must share a single block")
        coords, flips = self._neighbor_arrays(a1, g1.flips, a2, g2.flips, b1)
        out = self._pack(coords, flips)
        for arr, f in ((a1, g1.flips), (a2, g2.flips)):
            if not matrix_criterion(f, flips, self.t) or \
               (self._witness_dets(arr, f, coords, flips) == 0).any():
                raise GroupError("constructed neighbor failed its witness")
        return out

    # -- sampling census -----------------------------------------------------------

    def _sample_arrays(self, rng: random.Random, block: int) -> tuple:
        i = block - 1
        choice = rng.randrange(3)
        flips = (flip_vector(self.t, 2 * i), flip_vector(self.t, 2 * i + 1),
                 flip_vector(self.t, 2 * i, 2 * i + 1))[choice]
        fixed = self.signs(flips) == 1
        coords = np.empty((self.n_slots, 3), dtype=np.int64)
        for s in range(self.n_slots):
            while True:
                z1, z2 = rng.randint(-5, 5), rng.randint(-5, 5)
                if (z1, z2) != (0, 0):
                    break
            while True:
                z3 = rng.randint(-5, 5)
                if z3 != 0 or not fixed[s]:
                    break
            coords[s] = (z1, z2, z3)
        return coords, flips

    def sample_block_element(self, rng: random.Random, block: int) -> Element:
        """Random element in `block` (1-based) meeting the non-isolation
        conditions, coordinates in [-5, 5]."""
        return self._pack(*self._sample_arrays(rng, block))

    def component_census(self, samples: int, seed: int) -> dict:
        """Sampled component count: cross-block pairs must fail the matrix
        criterion (never adjacent); same-block pairs must acquire a
        common neighbor with passing witnesses (distance <= 2). The
        sampled graph then has exactly t components, one per block."""
        if self.t > cap("CENSUS_T_CAP"):
            raise GroupError(f"census capped at t <= {cap('CENSUS_T_CAP')}")
        rng = random.Random(seed)
        by_block = {
            b: [self._sample_arrays(rng, b) for _ in range(samples)]
            for b in range(1, self.t + 1)
        }
        for b, els in by_block.items():
            for arr, flips in els:
                if self._block_if_valid(arr, flips) != b:
                    raise GroupError("sampler produced an invalid element")

        cross_pairs = 0
        cross_adjacent = 0
        for b1 in range(1, self.t + 1):
            for b2 in range(b1 + 1, self.t + 1):
                for _, f1 in by_block[b1]:
                    for _, f2 in by_block[b2]:
                        cross_pairs += 1
                        if matrix_criterion(f1, f2, self.t):
                            cross_adjacent += 1

        same_pairs = 0
        same_linked = 0
        for b in range(1, self.t + 1):
            els = by_block[b]
            for j in range(len(els)):
                a1, f1 = els[j]
                for k in range(j + 1, len(els)):
                    a2, f2 = els[k]
                    same_pairs += 1
                    coords, flips = self._neighbor_arrays(a1, f1, a2, f2, b)
                    ok = True
                    for arr, f in ((a1, f1), (a2, f2)):
                        if not matrix_criterion(f, flips, self.t) or \
                           (self._witness_dets(arr, f, coords, flips) == 0).any():
                            ok = False
                    if ok:
                        same_linked += 1

        passed = samples > 0 and cross_adjacent == 0 and same_linked == same_pairs
        return {
            "schema_version": 1,
            "t": self.t,
            "variant": self.variant,
            "samples_per_block": samples,
            "seed": seed,
            "blocks": [{"block": b, "samples": len(by_block[b])}
                       for b in sorted(by_block)],
            "cross_block_pairs": cross_pairs,
            "cross_block_all_nonadjacent": cross_adjacent == 0,
            "same_block_pairs": same_pairs,
            "same_block_all_distance_le_2": same_linked == same_pairs,
            "passed": passed,
            "component_count": self.t if passed else 0,
            "block_subgroup_index_in_flip_group": 1 << (2 * self.t - 2),
        }


# -- flip-vector criteria (module level, used by the exhaustive checks) --------

def common_fixed_slot_exists(h1, h2, t: int) -> bool:
    """Brute force over all 3^t slots: is some slot annihilated by both
    flip vectors (F2 pairing zero)?"""
    if t > cap("SLOT_T_CAP"):
        raise GroupError(f"slot scan capped at t <= {cap('SLOT_T_CAP')}")
    for slot in enumerate_slots(t):
        p1 = sum(a * b for a, b in zip(h1, slot)) % 2
        p2 = sum(a * b for a, b in zip(h2, slot)) % 2
        if p1 == 0 and p2 == 0:
            return True
    return False


def matrix_criterion(h1, h2, t: int) -> bool:
    """True iff no slot is annihilated by both flip vectors, decided by
    2x2 block matrices: some block matrix is invertible over F2 while
    all remaining columns of both vectors vanish."""
    for i in range(t):
        a1, a2 = h1[2 * i], h1[2 * i + 1]
        b1, b2 = h2[2 * i], h2[2 * i + 1]
        det = (a1 & b2) ^ (a2 & b1)
        if not det:
            continue
        outside = any(h1[j] or h2[j] for j in range(2 * t) if j // 2 != i)
        if not outside:
            return True
    return False


# -- finite-quotient span verification ------------------------------------------

_QUOTIENT_CACHE: dict = {}

SPAN_CHECK_PRIMES = (3, 5, 7)


def _finite_quotient(p: int, bit1: int, bit2: int):
    """(C_p)^3 x| (C_2 x C_2): the two involutions negate the third
    coordinate when their slot bit is set. Element id = n_id * 4 + h_id."""
    from .build import build_cyclic, direct_product, semidirect_product

    key = (p, bit1, bit2)
    hit = _QUOTIENT_CACHE.get(key)
    if hit is not None:
        return hit
    Cp = build_cyclic(p)
    N = direct_product(direct_product(Cp, Cp), Cp)
    H = direct_product(build_cyclic(2), build_cyclic(2))
    ids = np.arange(p ** 3, dtype=np.int64)
    c = ids % p
    negated = ids - c + (-c) % p
    action = np.empty((4, p ** 3), dtype=np.int64)
    for h in range(4):
        h1, h2 = h >> 1, h & 1
        action[h] = negated if (h1 * bit1 + h2 * bit2) % 2 else ids
    G = semidirect_product(N, H, action, label=f"(C{p}^3)x|(C2^2:{bit1}{bit2})")
    _QUOTIENT_CACHE[key] = G
    return G


def _triple_to_nid(triple, p: int) -> int:
    a, b, c = (int(v) % p for v in triple)
    return (a * p + b) * p + c


def verify_generator_spans(t: int, variant: str = "corrected") -> dict:
    """Desk check that each standard generator pair spans every slot module.

    For every slot and block, two routes must agree: (a) symbolic, the
    slot determinant of the pair's openness witness is nonzero; (b)
    oracle, in the finite group (C_p)^3 x| <two involutions> for
    p in {3,5,7}, the closure of the pair's images contains all of
    (C_p)^3. The report also records whether the closure's coordinate
    part is trapped in the z2 = 0 plane (which is what sinks the
    "paper" variant).
    """
    if t > 3:
        raise GroupError("span verification capped at t <= 3")
    ctx = Construction(t, variant)
    checks = []
    all_pass = True
    trapped_everywhere = True
    for block in range(1, t + 1):
        g1 = ctx.constant_element(ctx.V_CONST, flip_vector(t, 2 * (block - 1)))
        g2 = ctx.constant_element(ctx.w_const(), flip_vector(t, 2 * (block - 1) + 1))
        wit = ctx.openness_witness(g1, g2)
        for s, slot in enumerate(ctx.slots):
            bit1, bit2 = slot[2 * (block - 1)], slot[2 * (block - 1) + 1]
            det = wit["determinants"][s]
            entry = {
                "slot": list(slot),
                "block": block,
                "symbolic_det": det,
                "symbolic_pass": det != 0,
                "quotients": {},
            }
            for p in SPAN_CHECK_PRIMES:
                G = _finite_quotient(p, bit1, bit2)
                n1 = _triple_to_nid(ctx.V_CONST, p)
                n2 = _triple_to_nid(ctx.w_const(), p)
                clos = G.closure_bits([n1 * 4 + 2, n2 * 4 + 1])
                contains_all = all(clos >> (n * 4) & 1 for n in range(p ** 3))
                entry["quotients"][str(p)] = contains_all
                z2_vals = {
                    (n // p) % p
                    for n in range(p ** 3)
                    if clos >> (n * 4) & 1
                }
                if z2_vals != {0}:
                    trapped_everywhere = False
            ok = entry["symbolic_pass"] and all(entry["quotients"].values())
            entry["passed"] = ok
            all_pass &= ok
            checks.append(entry)
    return {
        "schema_version": 1,
        "t": t,
        "variant": variant,
        "checks": checks,
        "all_pass": all_pass,
        "coordinate_trapped_at_z2_zero": trapped_everywhere,
    }


def criterion_equivalence_exhaustive(t: int) -> dict:
    """Check matrix_criterion == not common_fixed_slot_exists over every
    ordered pair of flip vectors (2^(4t) pairs), vectorized."""
    slots = np.asarray(enumerate_slots(t), dtype=np.int64)
    vecs = np.asarray(list(itertools.product((0, 1), repeat=2 * t)), dtype=np.int64)
    zero_pair = ((vecs @ slots.T) % 2) == 0            # (V, n_slots)
    solvable = (zero_pair.astype(np.int64) @ zero_pair.T.astype(np.int64)) > 0
    V = len(vecs)
    crit = np.zeros((V, V), dtype=bool)
    for i in range(t):
        a1, a2 = vecs[:, 2 * i], vecs[:, 2 * i + 1]
        det = (a1[:, None] & a2[None, :]) ^ (a2[:, None] & a1[None, :])
        outside_cols = [j for j in range(2 * t) if j // 2 != i]
        clean = ~vecs[:, outside_cols].any(axis=1)
        crit |= det.astype(bool) & clean[:, None] & clean[None, :]
    agree = bool(np.array_equal(crit, ~solvable))
    return {"t": t, "pairs": V * V, "equivalent": agree}
