"""Finite groups from generators: multiplication tables, derived subgroups,
abelian invariants, 2-Sylow subgroups, and the recognizers used by the
obstruction tests.

Groups are built by breadth-first closure of a generating set under an
associative compose function and then handled purely as integer indices,
with 0 the identity. Small groups get a dense multiplication table built
through parent links (each non-identity element is parent * generator, so
its row is a permutation composition of two known rows); larger groups fall
back to composing raw elements on demand.
"""

from __future__ import annotations

import re
from array import array
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd

from .exact import factorize

# Hard ceilings so a typo in a generating set fails fast instead of eating
# memory: permutation/matrix closures stop at 10**6 elements, metacyclic
# presentations at 10**5. Tables are dense up to this order, lazy above.
PERM_CLOSURE_CAP = 10**6
METACYCLIC_CAP = 10**5
DENSE_TABLE_LIMIT = 4096


def _perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Apply p, then q."""
    return tuple(q[i] for i in p)


def _parse_cycle_string(s: str) -> tuple[list[list[int]], int]:
    """'(1 2 3)(4 5)' -> ([[1,2,3],[4,5]], 5). Points are 1-based; singleton
    cycles are dropped but still raise the degree; '()' is the identity."""
    if not re.fullmatch(r"(\s*\([^()]*\))+\s*", s):
        raise ValueError(f"bad cycle notation: {s!r}")
    cycles: list[list[int]] = []
    maxpt = 0
    for body in re.findall(r"\(([^()]*)\)", s):
        pts = [int(t) for t in re.split(r"[,\s]+", body.strip()) if t]
        if not pts:
            continue
        if min(pts) < 1:
            raise ValueError(f"points must be positive: {s!r}")
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle ({body})")
        maxpt = max(maxpt, max(pts))
        if len(pts) > 1:
            cycles.append(pts)
    return cycles, maxpt


def _cycle_perm(cycle: list[int], degree: int) -> tuple[int, ...]:
    img = list(range(degree))
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        img[a - 1] = b - 1
    return tuple(img)


@dataclass(frozen=True)
class PermGens:
    """Permutation group given by generators as image tuples on 0..degree-1."""

    degree: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        if not self.generators:
            raise ValueError("at least one generator is required")
        for g in self.generators:
            if sorted(g) != list(range(self.degree)):
                raise ValueError(f"not a permutation of 0..{self.degree - 1}: {g}")

    @classmethod
    def from_cycles(cls, *specs: str) -> PermGens:
        """Build from cycle notation, one string per generator, points
        1-based: PermGens.from_cycles("(1 2)", "(1 2 3 4)")."""
        if not specs:
            raise ValueError("at least one generator is required")
        parsed = [_parse_cycle_string(s) for s in specs]
        degree = max(1, max(maxpt for _, maxpt in parsed))
        identity = tuple(range(degree))
        gens = tuple(
            reduce(_perm_compose, (_cycle_perm(c, degree) for c in cycles), identity)
            for cycles, _ in parsed
        )
        return cls(degree, gens)


@dataclass(frozen=True)
class Metacyclic:
    """<s, t | s**a = 1, t**b = s**c, t*s*t**-1 = s**r>.

    The consistency conditions r**b = 1 and c*(r - 1) = 0 (mod a) make the
    set {s**i t**j} of size a*b a group; construction rejects anything else.
    """

    a: int
    b: int
    c: int
    r: int

    def __post_init__(self) -> None:
        a, b, c, r = self.a, self.b, self.c, self.r
        if a < 1 or b < 1:
            raise ValueError("a and b must be positive")
        if not (0 <= c < a and 0 <= r < a):
            raise ValueError("c and r must lie in [0, a)")
        if gcd(r, a) != 1:
            raise ValueError(f"r = {r} is not invertible mod a = {a}")
        if pow(r, b, a) != 1 % a:
            raise ValueError(f"r**b != 1 mod a for r = {r}, b = {b}, a = {a}")
        if c * (r - 1) % a != 0:
            raise ValueError(f"c*(r - 1) != 0 mod a for c = {c}, r = {r}, a = {a}")
        if a * b > METACYCLIC_CAP:
            raise ValueError(f"order {a * b} exceeds cap {METACYCLIC_CAP}")


@dataclass(frozen=True)
class Catalog:
    """A named group from the built-in catalog."""

    name: str


GroupSpec = PermGens | Metacyclic | Catalog


def _enumerate(identity, gens, compose, cap):
    """BFS closure of the generators. Returns (elements in discovery order,
    index dict, parent links): element k > 0 satisfies
    elems[k] = elems[parents[k][0]] * gens[parents[k][1]], with parent index
    strictly smaller than k."""
    elems = [identity]
    index = {identity: 0}
    parents = [(-1, -1)]
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            xi = index[x]
            for gi, g in enumerate(gens):
                y = compose(x, g)
                if y not in index:
                    if len(elems) >= cap:
                        raise ValueError(f"closure exceeded cap {cap}")
                    index[y] = len(elems)
                    elems.append(y)
                    parents.append((xi, gi))
                    new.append(y)
        frontier = new
    return elems, index, parents


class FiniteGroupTable:
    """A finite group as indices 0..order-1 with 0 the identity."""

    identity = 0

    def __init__(self, elems, index, parents, compose, raw_gens, label):
        self.order = len(elems)
        self.label = label
        self._elems = elems
        self._index = index
        self._compose = compose
        self.generator_indices = tuple(index[g] for g in raw_gens)
        self._inv_cache: dict[int, int] = {}
        self._derived = None
        self._rows = self._build_rows(parents, raw_gens) if self.order <= DENSE_TABLE_LIMIT else None

    @classmethod
    def from_generators(cls, identity, gens, compose, cap, label):
        elems, index, parents = _enumerate(identity, list(gens), compose, cap)
        return cls(elems, index, parents, compose, list(gens), label)

    def _build_rows(self, parents, raw_gens):
        n = self.order
        gen_rows = [
            array("i", (self._index[self._compose(g, e)] for e in self._elems))
            for g in raw_gens
        ]
        rows = [array("i", range(n))]
        # x = p*g, so x*e = p*(g*e) and the row of x is rows[p] o gen_rows[g]
        for k in range(1, n):
            pi, gi = parents[k]
            rows.append(array("i", map(rows[pi].__getitem__, gen_rows[gi])))
        return rows

    def __repr__(self) -> str:
        return f"<group {self.label} of order {self.order}>"

    def mult(self, x: int, y: int) -> int:
        if self._rows is not None:
            return self._rows[x][y]
        return self._index[self._compose(self._elems[x], self._elems[y])]

    def inv(self, x: int) -> int:
        out = self._inv_cache.get(x)
        if out is None:
            if self._rows is not None:
                out = self._rows[x].index(0)
            else:
                out = self.power(x, self.order - 1)
            self._inv_cache[x] = out
        return out

    def power(self, x: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(x), -k)
        out = 0
        while k:
            if k & 1:
                out = self.mult(out, x)
            x = self.mult(x, x)
            k >>= 1
        return out

    def element_order(self, x: int) -> int:
        o = self.order
        for p in factorize(o) if o > 1 else ():
            while o % p == 0 and self.power(x, o // p) == 0:
                o //= p
        return o

    def closure(self, seed) -> frozenset[int]:
        """Subgroup generated by the given element indices. Closing under
        multiplication alone suffices in a finite group."""
        gens = sorted(set(seed) - {0})
        members = {0}
        frontier = [0]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = self.mult(x, g)
                    if y not in members:
                        members.add(y)
                        new.append(y)
            frontier = new
        return frozenset(members)


@dataclass(frozen=True)
class Subgroup:
    """A validated subgroup, stored as a frozenset of parent indices."""

    group: FiniteGroupTable
    members: frozenset[int]

    def __post_init__(self) -> None:
        G, H = self.group, self.members
        if 0 not in H:
            raise ValueError("subgroups contain the identity")
        if G.order % len(H) != 0:
            raise ValueError("subgroup order does not divide the group order")
        if len(H) == G.order:
            return
        for x in H:
            if G.inv(x) not in H:
                raise ValueError(f"not closed under inversion at {x}")
            for y in H:
                if G.mult(x, y) not in H:
                    raise ValueError(f"not closed under multiplication at ({x}, {y})")

    @property
    def order(self) -> int:
        return len(self.members)


def derived_subgroup(G: FiniteGroupTable) -> Subgroup:
    """Commutator subgroup: the normal closure of the commutators of the
    generators. Saturating the generating set under conjugation by the
    group's generators is enough, since conjugation is an automorphism and
    stability forces g*N*g**-1 = N for every generator g."""
    if G._derived is None:
        gi = G.generator_indices
        seed: list[int] = []
        seen = {0}
        for x in gi:
            for y in gi:
                c = G.mult(G.mult(x, y), G.inv(G.mult(y, x)))
                if c not in seen:
                    seen.add(c)
                    seed.append(c)
        members = G.closure(seed)
        changed = True
        while changed:
            changed = False
            for g in gi:
                ginv = G.inv(g)
                for s in list(seed):
                    t = G.mult(G.mult(g, s), ginv)
                    if t not in members:
                        seed.append(t)
                        members = G.closure(seed)
                        changed = True
        G._derived = Subgroup(G, members)
    return G._derived


def quotient_by(G: FiniteGroupTable, N: Subgroup) -> FiniteGroupTable:
    """G/N for a normal subgroup N, as a table over canonical coset
    representatives (the least index in each coset)."""
    if N.group is not G:
        raise ValueError("subgroup belongs to a different group")
    for g in G.generator_indices:
        ginv = G.inv(g)
        for x in N.members:
            if G.mult(G.mult(g, x), ginv) not in N.members:
                raise ValueError("subgroup is not normal")
    rep_of = array("i", [-1]) * G.order
    for x in range(G.order):
        if rep_of[x] == -1:
            for m in N.members:
                rep_of[G.mult(x, m)] = x

    def compose(u: int, v: int) -> int:
        return rep_of[G.mult(u, v)]

    gens = [rep_of[g] for g in G.generator_indices]
    label = f"{G.label}/(subgroup of order {N.order})"
    return FiniteGroupTable.from_generators(0, gens, compose, G.order, label)


def abelian_invariants(G: FiniteGroupTable) -> tuple[int, ...]:
    """Invariant factors (n_1, n_2, ...) of G/[G, G], descending, each
    dividing the previous.

    In the abelianization Q the count of x with x**(p**k) = 1 equals
    p**(number of cyclic p-power factors of order >= p**1..p**k summed), so
    successive count ratios read off how many factors have order >= p**k.
    """
    Q = quotient_by(G, derived_subgroup(G))
    n = Q.order
    if n == 1:
        return ()
    orders = [Q.element_order(x) for x in range(n)]
    per_prime: dict[int, list[int]] = {}
    for p, emax in sorted(factorize(n).items()):
        logs = [
            _ilog(sum(1 for o in orders if p**k % o == 0), p)
            for k in range(emax + 2)
        ]
        # lam[k-1] = number of cyclic p-factors of order >= p**k; the last
        # entry is 0 since no factor exceeds p**emax
        lam = [logs[k] - logs[k - 1] for k in range(1, emax + 2)]
        factors = []
        for k in range(emax, 0, -1):
            factors.extend([p**k] * (lam[k - 1] - lam[k]))
        per_prime[p] = factors
    width = max(len(f) for f in per_prime.values())
    invs = []
    for i in range(width):
        m = 1
        for factors in per_prime.values():
            if i < len(factors):
                m *= factors[i]
        invs.append(m)
    return tuple(invs)


def _ilog(n: int, p: int) -> int:
    k = 0
    while n % p == 0 and n > 1:
        n //= p
        k += 1
    return k


def two_sylow(G: FiniteGroupTable) -> Subgroup:
    """A 2-Sylow subgroup, deterministically: seed with the least-index
    element of 2-power order, then repeatedly double through the least-index
    y outside P with y**2 in P that normalizes P. Such y always exists while
    |P| is below the full 2-part, because the normalizer of a proper
    2-subgroup inside a Sylow overgroup is strictly larger and contains an
    involution of the quotient."""
    target = 1
    n = G.order
    while n % 2 == 0:
        target *= 2
        n //= 2
    if target == 1:
        return Subgroup(G, frozenset({0}))
    seed = next(
        x
        for x in range(1, G.order)
        if (o := G.element_order(x)) % 2 == 0 and o & (o - 1) == 0
    )
    gens = [seed]
    members = G.closure(gens)
    while len(members) < target:
        for y in range(1, G.order):
            if y in members or G.mult(y, y) not in members:
                continue
            yinv = G.inv(y)
            if all(G.mult(G.mult(y, g), yinv) in members for g in gens):
                gens.append(y)
                members = G.closure(gens)
                break
        else:
            raise AssertionError("2-Sylow doubling found no witness")
    return Subgroup(G, members)


def is_generalized_quaternion16(H: Subgroup) -> bool:
    """Does H have the presentation <a, b | a**8 = 1, b**2 = a**4,
    b*a*b**-1 = a**-1>?"""
    if H.order != 16:
        return False
    G = H.group
    for a in sorted(H.members):
        if G.element_order(a) != 8:
            continue
        pw = [0]
        for _ in range(7):
            pw.append(G.mult(pw[-1], a))
        cyc = set(pw)
        for b in sorted(H.members - cyc):
            if G.mult(b, b) == pw[4] and G.mult(G.mult(b, a), G.inv(b)) == pw[7]:
                return True
    return False


def max_cyclic_two_quotient(G: FiniteGroupTable) -> int:
    """Largest n such that G surjects onto the cyclic group of order 2**n.

    Cyclic quotients factor through the abelianization, and the largest
    invariant factor carries the maximal 2-part.
    """
    invs = abelian_invariants(G)
    if not invs or invs[0] % 2:
        return 0
    n = 0
    m = invs[0]
    while m % 2 == 0:
        n += 1
        m //= 2
    return n


def _build_metacyclic(m: Metacyclic, label: str | None = None) -> FiniteGroupTable:
    a, b, c, r = m.a, m.b, m.c, m.r
    rpow = [pow(r, j, a) for j in range(b)]

    def compose(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
        # s**i1 t**j1 s**i2 t**j2 = s**(i1 + i2*r**j1) t**(j1 + j2), and a
        # wrapped t**b turns into a central-in-<s> factor s**c
        i = (x[0] + y[0] * rpow[x[1]]) % a
        j = x[1] + y[1]
        if j >= b:
            j -= b
            i = (i + c) % a
        return (i, j)

    gens = [(1 % a, 0), (0, 1 % b)]
    if label is None:
        label = f"metacyclic(a={a},b={b},c={c},r={r})"
    t = FiniteGroupTable.from_generators((0, 0), gens, compose, a * b, label)
    assert t.order == a * b
    return t


def _build_perm(pg: PermGens, label: str | None = None) -> FiniteGroupTable:
    identity = tuple(range(pg.degree))
    if label is None:
        label = f"perm(degree {pg.degree})"
    return FiniteGroupTable.from_generators(
        identity, list(pg.generators), _perm_compose, PERM_CLOSURE_CAP, label
    )


def _sl2_7_table() -> FiniteGroupTable:
    p = 7

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (
            (a * e + b * g) % p,
            (a * f + b * h) % p,
            (c * e + d * g) % p,
            (c * f + d * h) % p,
        )

    t = FiniteGroupTable.from_generators(
        (1, 0, 0, 1), [(1, 1, 0, 1), (1, 0, 1, 1)], mul, PERM_CLOSURE_CAP, "SL2_7"
    )
    assert t.order == 336  # 7 * (49 - 1)
    return t


def _f9_add(x: int, y: int) -> int:
    return (x + y) % 3 + 3 * ((x // 3 + y // 3) % 3)


def _f9_mul(x: int, y: int) -> int:
    # elements u + v*t of F_9 = F_3[t]/(t**2 + 1) coded as u + 3*v, t**2 = 2
    u1, v1 = x % 3, x // 3
    u2, v2 = y % 3, y // 3
    return (u1 * u2 + 2 * v1 * v2) % 3 + 3 * ((u1 * v2 + v1 * u2) % 3)


def _sl2_9_table() -> FiniteGroupTable:
    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (
            _f9_add(_f9_mul(a, e), _f9_mul(b, g)),
            _f9_add(_f9_mul(a, f), _f9_mul(b, h)),
            _f9_add(_f9_mul(c, e), _f9_mul(d, g)),
            _f9_add(_f9_mul(c, f), _f9_mul(d, h)),
        )

    # E12(1) and E21(1) only generate a copy of SL2(F_3); E12(t) is needed
    # to reach the full group
    gens = [(1, 1, 0, 1), (1, 0, 1, 1), (1, 3, 0, 1)]
    t = FiniteGroupTable.from_generators((1, 0, 0, 1), gens, mul, PERM_CLOSURE_CAP, "SL2_9")
    assert t.order == 720  # 9 * (81 - 1)
    return t


def _catalog_spec(name: str) -> GroupSpec | None:
    m = re.fullmatch(r"C([1-9]\d*)", name)
    if m and 1 <= int(m.group(1)) <= 64:
        n = int(m.group(1))
        return Metacyclic(n, 1, 0, 1 % n)
    return {
        "D16": Metacyclic(8, 2, 0, 7),
        "SD16": Metacyclic(8, 2, 0, 3),
        "Q16": Metacyclic(8, 2, 4, 7),
        "S4": PermGens.from_cycles("(1 2)", "(1 2 3 4)"),
        "A4": PermGens.from_cycles("(1 2 3)", "(1 2)(3 4)"),
        "Ex3_3": Metacyclic(64, 16, 32, 7),
    }.get(name)


CATALOG_NAMES = tuple(f"C{n}" for n in range(1, 65)) + (
    "D16",
    "SD16",
    "Q16",
    "S4",
    "A4",
    "SL2_7",
    "SL2_9",
    "Ex3_3",
)


@lru_cache(maxsize=None)
def catalog_group(name: str) -> FiniteGroupTable:
    if name == "SL2_7":
        return _sl2_7_table()
    if name == "SL2_9":
        return _sl2_9_table()
    spec = _catalog_spec(name)
    if spec is None:
        raise ValueError(f"unknown catalog group: {name}")
    if isinstance(spec, Metacyclic):
        return _build_metacyclic(spec, label=name)
    return _build_perm(spec, label=name)


def build_group(spec: GroupSpec) -> FiniteGroupTable:
    """Realize a group spec as a multiplication table."""
    if isinstance(spec, Catalog):
        return catalog_group(spec.name)
    if isinstance(spec, Metacyclic):
        return _build_metacyclic(spec)
    if isinstance(spec, PermGens):
        return _build_perm(spec)
    raise TypeError(f"not a group spec: {spec!r}")
