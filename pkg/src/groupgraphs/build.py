"""Group constructors and the group-spec mini-language.

Grammar:  C:n | D:n | Q:2^n | Dic:n | S:n | A:n | SL2:q | spec*spec | file:PATH

Families:
    C:n    cyclic of order n
    D:n    dihedral of order 2n (symmetries of the n-gon; D:1 = C2)
    Q:m    generalized quaternion, m = 2^n with n >= 3
    Dic:n  order-4n split extension <a,b | a^4, b^n, b^a = b^-1>
    S:n    symmetric on n points
    A:n    alternating on n points
    SL2:q  2x2 determinant-1 matrices over GF(q), q = 2^p, p <= 5
    X*Y    direct product
    file:P permutation generators, one per line, cycles on 1-based points
"""

from __future__ import annotations

import itertools
import re
from pathlib import Path

import numpy as np

from .caps import cap
from .gf2 import BinaryField
from .group import CapExceeded, FiniteGroup, GroupError

_BUILD_CACHE: dict = {}


class SpecParseError(GroupError):
    pass


def _maybe_table(order: int) -> bool:
    return order <= cap("TABLE_CAP")


def _pow_name(sym: str, k: int) -> str:
    if k == 0:
        return ""
    return sym if k == 1 else f"{sym}^{k}"


def _word_name(*parts) -> str:
    out = "".join(_pow_name(sym, k) for sym, k in parts)
    return out or "1"


def _check_order(order: int):
    if order > cap("ORDER_CAP"):
        raise CapExceeded(f"group order {order} exceeds cap {cap('ORDER_CAP')}")


def build_cyclic(n: int) -> FiniteGroup:
    _check_order(n)
    idx = np.arange(n, dtype=np.int64)
    table = (idx[:, None] + idx[None, :]) % n
    names = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    gens = {"g": 1} if n > 1 else {}
    return FiniteGroup(n, f"C:{n}", table=table, element_names=names, generators=gens)


def build_dihedral(n: int) -> FiniteGroup:
    # r^i s^j, id = i + n*j
    order = 2 * n
    _check_order(order)
    i = np.arange(order, dtype=np.int64)
    rot, ref = i % n, i // n
    sign = np.where(ref == 1, -1, 1)
    r = (rot[:, None] + sign[:, None] * rot[None, :]) % n
    f = ref[:, None] ^ ref[None, :]
    table = r + n * f
    names = [_word_name(("r", a), ("s", b)) for b in (0, 1) for a in range(n)]
    gens = {"r": 1, "s": n} if n > 1 else {"s": n}
    return FiniteGroup(order, f"D:{n}", table=table, element_names=names, generators=gens)


def build_quaternion(m: int) -> FiniteGroup:
    if m < 8 or m & (m - 1):
        raise SpecParseError(f"Q:{m}: generalized quaternion needs order 2^n, n >= 3")
    _check_order(m)
    half = m // 2
    i = np.arange(m, dtype=np.int64)
    a, b = i % half, i // half
    sign = np.where(b == 1, -1, 1)
    twist = (b[:, None] & b[None, :]) * (half // 2)
    r = (a[:, None] + sign[:, None] * a[None, :] + twist) % half
    f = b[:, None] ^ b[None, :]
    table = r + half * f
    names = [_word_name(("a", x), ("b", y)) for y in (0, 1) for x in range(half)]
    return FiniteGroup(m, f"Q:{m}", table=table, element_names=names,
                       generators={"a": 1, "b": half})


def build_dicyclic(n: int) -> FiniteGroup:
    # b^i a^j with a^4 = b^n = 1, a^-1 b a = b^-1; id = 4*i + j
    order = 4 * n
    _check_order(order)
    i = np.arange(order, dtype=np.int64)
    bi, aj = i // 4, i % 4
    sign = np.where(aj % 2 == 1, -1, 1)
    bb = (bi[:, None] + sign[:, None] * bi[None, :]) % n
    aa = (aj[:, None] + aj[None, :]) % 4
    table = 4 * bb + aa
    names = [_word_name(("b", x), ("a", y)) for x in range(n) for y in range(4)]
    return FiniteGroup(order, f"Dic:{n}", table=table, element_names=names,
                       generators={"a": 1, "b": 4})


def _perm_name(p: tuple) -> str:
    seen, out = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        cyc, x = [s], p[s]
        while x != s:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        out.append("(" + " ".join(str(v + 1) for v in cyc) + ")")
    return "".join(out) or "()"


def _perm_group(perms: list, label: str, generators: dict) -> FiniteGroup:
    order = len(perms)
    _check_order(order)
    index = {p: i for i, p in enumerate(perms)}
    if _maybe_table(order):
        table = np.empty((order, order), dtype=np.int64)
        for a, pa in enumerate(perms):
            for b, pb in enumerate(perms):
                table[a, b] = index[tuple(pb[x] for x in pa)]
        return FiniteGroup(order, label, table=table, elements=perms,
                           element_names=[_perm_name(p) for p in perms],
                           generators=generators)
    return FiniteGroup(
        order, label, elements=perms,
        mul_fn=lambda pa, pb: tuple(pb[x] for x in pa),
        inv_fn=lambda p: tuple(sorted(range(len(p)), key=p.__getitem__)),
        element_names=[_perm_name(p) for p in perms],
        generators=generators,
    )


def build_symmetric(n: int) -> FiniteGroup:
    perms = sorted(itertools.permutations(range(n)))
    gens = {}
    if n >= 2:
        gens["t"] = perms.index(tuple([1, 0] + list(range(2, n))))
        gens["c"] = perms.index(tuple(list(range(1, n)) + [0]))
    return _perm_group(perms, f"S:{n}", gens)


def _parity(p: tuple) -> int:
    seen, par = set(), 0
    for s in range(len(p)):
        if s in seen:
            continue
        x, ln = s, 0
        while x not in seen:
            seen.add(x)
            x = p[x]
            ln += 1
        par ^= (ln - 1) & 1
    return par


def build_alternating(n: int) -> FiniteGroup:
    perms = sorted(p for p in itertools.permutations(range(n)) if _parity(p) == 0)
    gens = {}
    if n >= 3:
        gens["c3"] = perms.index(tuple([1, 2, 0] + list(range(3, n))))
        long = tuple(list(range(1, n)) + [0]) if n % 2 else tuple([0] + list(range(2, n)) + [1])
        gens["c"] = perms.index(long)
    return _perm_group(perms, f"A:{n}", gens)


def build_sl2(q: int) -> FiniteGroup:
    p = q.bit_length() - 1
    if q < 2 or q != 1 << p:
        raise SpecParseError(f"SL2:{q}: field size must be a power of 2")
    field = BinaryField(p)
    mats = [
        (a, b, c, d)
        for a, b, c, d in itertools.product(range(q), repeat=4)
        if field.mul(a, d) ^ field.mul(b, c) == 1
    ]
    ident = (1, 0, 0, 1)
    mats = [ident] + sorted(m for m in mats if m != ident)
    order = len(mats)
    _check_order(order)

    def mmul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (
            field.mul(a, e) ^ field.mul(b, g),
            field.mul(a, f) ^ field.mul(b, h),
            field.mul(c, e) ^ field.mul(d, g),
            field.mul(c, f) ^ field.mul(d, h),
        )

    names = [f"[{a},{b};{c},{d}]" for a, b, c, d in mats]
    gens = {"u": mats.index((1, 1, 0, 1)), "w": mats.index((0, 1, 1, 0))}
    if _maybe_table(order):
        code = {m: i for i, m in enumerate(mats)}
        arr = np.array(mats, dtype=np.int64)
        fm = np.zeros((q, q), dtype=np.int64)
        for x in range(q):
            for y in range(q):
                fm[x, y] = field.mul(x, y)
        A, B, C, D = (arr[:, k] for k in range(4))
        na = fm[A[:, None], A[None, :]] ^ fm[B[:, None], C[None, :]]
        nb = fm[A[:, None], B[None, :]] ^ fm[B[:, None], D[None, :]]
        nc = fm[C[:, None], A[None, :]] ^ fm[D[:, None], C[None, :]]
        nd = fm[C[:, None], B[None, :]] ^ fm[D[:, None], D[None, :]]
        enc = ((na * q + nb) * q + nc) * q + nd
        lut = np.full(q ** 4, -1, dtype=np.int64)
        for m, i in code.items():
            lut[((m[0] * q + m[1]) * q + m[2]) * q + m[3]] = i
        table = lut[enc]
        return FiniteGroup(order, f"SL2:{q}", table=table, elements=mats,
                           element_names=names, generators=gens)
    return FiniteGroup(order, f"SL2:{q}", elements=mats, mul_fn=mmul,
                       element_names=names, generators=gens)


def direct_product(G1: FiniteGroup, G2: FiniteGroup) -> FiniteGroup:
    order = G1.order * G2.order
    _check_order(order)
    n2 = G2.order
    label = f"{G1.label}*{G2.label}"
    names = [f"({G1.name_of(a)},{G2.name_of(b)})"
             for a in range(G1.order) for b in range(n2)]
    gens = {f"{k}.1": v * n2 for k, v in G1.generators.items()}
    gens.update({f"{k}.2": v for k, v in G2.generators.items()})
    if G1.table is not None and G2.table is not None and _maybe_table(order):
        t1 = G1.table.astype(np.int64)
        t2 = G2.table.astype(np.int64)
        table = (t1[:, None, :, None] * n2 + t2[None, :, None, :]).reshape(order, order)
        return FiniteGroup(order, label, table=table, element_names=names, generators=gens)
    elems = [(a, b) for a in range(G1.order) for b in range(n2)]
    return FiniteGroup(
        order, label, elements=elems,
        mul_fn=lambda x, y: (G1.mul(x[0], y[0]), G2.mul(x[1], y[1])),
        element_names=names, generators=gens,
    )


def semidirect_product(
    N: FiniteGroup, H: FiniteGroup, action: np.ndarray, label: str = "",
    check_action: bool = True,
) -> FiniteGroup:
    """(n, h) pairs with (n1,h1)(n2,h2) = (n1 * h1(n2), h1 h2).

    `action[h]` is the permutation of N's ids given by conjugation by h;
    it must be an automorphism for each h and a homomorphism in h.
    """
    nH, nN = H.order, N.order
    order = nN * nH
    _check_order(order)
    action = np.asarray(action, dtype=np.int64)
    if action.shape != (nH, nN):
        raise GroupError("action must have shape (|H|, |N|)")
    if check_action:
        if not np.array_equal(action[0], np.arange(nN)):
            raise GroupError("identity of H must act trivially")
        step = max(1, nN // 8)
        for h in range(nH):
            a = action[h]
            for x in range(0, nN, step):
                for y in range(0, nN, step):
                    if int(a[N.mul(x, y)]) != N.mul(int(a[x]), int(a[y])):
                        raise GroupError(f"action of h={h} is not an automorphism")
        for h1 in range(nH):
            for h2 in range(nH):
                if not np.array_equal(action[H.mul(h1, h2)], action[h1][action[h2]]):
                    raise GroupError("action is not a homomorphism")
    label = label or f"({N.label})x|({H.label})"
    if N.table is None or not _maybe_table(order):
        elems = [(a, h) for a in range(nN) for h in range(nH)]
        return FiniteGroup(
            order, label, elements=elems,
            mul_fn=lambda x, y: (N.mul(x[0], int(action[x[1], y[0]])), H.mul(x[1], y[1])),
            element_names=[f"({N.name_of(a)},{H.name_of(h)})" for a, h in elems],
        )
    tN = N.table.astype(np.int64)
    tH = H.table.astype(np.int64)
    t4 = np.empty((nN, nH, nN, nH), dtype=np.int64)
    for h1 in range(nH):
        acted = tN[:, action[h1]]                      # n1 * h1(n2)
        t4[:, h1, :, :] = acted[:, :, None] * nH + tH[h1][None, None, :]
    table = t4.reshape(order, order)
    names = [f"({N.name_of(a)},{H.name_of(h)})" for a in range(nN) for h in range(nH)]
    return FiniteGroup(order, label, table=table, element_names=names)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(line: str, degree: int = 0) -> tuple:
    """Parse disjoint cycles like '(1 2 3)(4 5)' on 1-based points."""
    stripped = line.replace(",", " ").strip()
    if not _CYCLE_RE.sub("", stripped).strip() == "":
        raise SpecParseError(f"bad permutation syntax: {line!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        pts = [int(tok) for tok in body.split()]
        if any(p < 1 for p in pts):
            raise SpecParseError(f"points are 1-based: {line!r}")
        if len(set(pts)) != len(pts):
            raise SpecParseError(f"repeated point in cycle: {line!r}")
        cycles.append(pts)
        degree = max(degree, max(pts, default=0))
    img = list(range(degree))
    for cyc in cycles:
        for i, p in enumerate(cyc):
            img[p - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(img)


def build_from_file(path: str) -> FiniteGroup:
    lines = [ln.strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise SpecParseError(f"{path}: no generators")
    degree = 0
    raw = []
    for ln in lines:
        p = parse_permutation(ln)
        degree = max(degree, len(p))
        raw.append(p)
    gens = [tuple(list(p) + list(range(len(p), degree))) for p in raw]
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = tuple(g[v] for v in x)
                if y not in seen:
                    if len(seen) >= cap("ORDER_CAP"):
                        raise CapExceeded(
                            f"{path}: closure exceeds order cap {cap('ORDER_CAP')}")
                    seen.add(y)
                    new.append(y)
        frontier = new
    perms = [ident] + sorted(p for p in seen if p != ident)
    gen_ids = {f"g{i}": perms.index(g) for i, g in enumerate(gens)}
    return _perm_group(perms, f"file:{path}", gen_ids)


_FAMILY_RE = re.compile(r"^(C|D|Q|Dic|S|A|SL2):(\d+)$")


def _build_atom(token: str) -> FiniteGroup:
    token = token.strip()
    if token.startswith("file:"):
        return build_from_file(token[5:])
    m = _FAMILY_RE.match(token)
    if not m:
        raise SpecParseError(f"cannot parse group spec {token!r}")
    fam, n = m.group(1), int(m.group(2))
    if n < 1:
        raise SpecParseError(f"{token}: order parameter must be positive")
    if fam == "C":
        return build_cyclic(n)
    if fam == "D":
        return build_dihedral(n)
    if fam == "Q":
        return build_quaternion(n)
    if fam == "Dic":
        return build_dicyclic(n)
    if fam == "S":
        return build_symmetric(n)
    if fam == "A":
        return build_alternating(n)
    return build_sl2(n)


def build_group(spec: str, validate: bool = True) -> FiniteGroup:
    """Build a group from a spec string (cached per spec)."""
    spec = spec.strip()
    if not spec:
        raise SpecParseError("empty group spec")
    hit = _BUILD_CACHE.get(spec)
    if hit is not None:
        _check_order(hit.order)   # the cap can change via the environment
        return hit
    parts = [p for p in spec.split("*")]
    if any(not p.strip() for p in parts):
        raise SpecParseError(f"cannot parse group spec {spec!r}")
    G = _build_atom(parts[0])
    for p in parts[1:]:
        G = direct_product(G, _build_atom(p))
    _check_order(G.order)
    if validate:
        G.validate()
    _BUILD_CACHE[spec] = G
    return G
