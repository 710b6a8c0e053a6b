"""Independent cross-checks for the quadratic form machinery.

Nothing here uses Hilbert symbols or Hasse invariants to produce an answer;
local isotropy is decided by counting zeros modulo a fixed prime power, and
global isotropy by exhibiting an integer zero. That makes these functions
slow but trustworthy, which is exactly what the formula-driven code is
tested against.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement, product
from functools import lru_cache
from math import lcm

from .exact import Rational, factorize
from .localfields import DiagonalForm, Place, REAL_PLACE, hilbert_symbol
from .quadforms import isotropic_Q

# Ten small coefficients give 1000 diagonal forms of dim 1..4 whose primes
# of bad reduction all lie in {2, 3, 5, 7}
GRID_COEFFS = (1, -1, 2, -2, 3, -3, 5, -5, 7, -7)


def grid_forms() -> list[DiagonalForm]:
    out = []
    for dim in range(1, 5):
        for combo in combinations_with_replacement(GRID_COEFFS, dim):
            out.append(DiagonalForm.of(*combo))
    return out


class LocalZeroOracle:
    """Decides isotropy over Q_p for small-coefficient forms of dim <= 4 by
    looking for primitive zeros modulo m = p**5 (m = 32 when p = 2).

    Exactness for coefficients with |v_p(a)| <= 1: a zero of the form over
    Q_p scales to a primitive integral zero and reduces mod m; conversely a
    primitive zero mod m has a coordinate x_i that is a unit, so
    v_p(2*a_i*x_i) <= 2 and the valuation slack m demands (at least
    2*v + 1 more than twice the derivative's valuation) lets Hensel's lemma
    lift it back to Z_p. No Hilbert symbol is consulted anywhere.

    Value sets are bitmasks over residues mod m; the set of values of a sum
    of two subforms is an OR of rotations, and representing zero with the
    right primitivity pattern is a single AND against a reflected mask.
    """

    def __init__(self, p: int):
        self.p = p
        self.m = 32 if p == 2 else p**5
        self._full = (1 << self.m) - 1
        self._single: dict[tuple[int, bool], int] = {}
        self._pair: dict[tuple[int, int, bool], int] = {}
        self._refl: dict[int, int] = {}

    def _single_mask(self, c: int, prim: bool) -> int:
        key = (c, prim)
        out = self._single.get(key)
        if out is None:
            m, p = self.m, self.p
            ci = c % m
            out = 0
            for x in range(m):
                if prim and x % p == 0:
                    continue
                out |= 1 << (ci * x * x % m)
            self._single[key] = out
        return out

    def _rotate(self, mask: int, s: int) -> int:
        m = self.m
        s %= m
        if s == 0:
            return mask
        return ((mask << s) | (mask >> (m - s))) & self._full

    def _sumset(self, a: int, b: int) -> int:
        """Values of x + y with x from a, y from b, as a mask."""
        if a.bit_count() > b.bit_count():
            a, b = b, a
        out = 0
        while a:
            out |= self._rotate(b, (a & -a).bit_length() - 1)
            a &= a - 1
        return out

    def _pair_mask(self, c1: int, c2: int, prim: bool) -> int:
        if c1 > c2:
            c1, c2 = c2, c1
        key = (c1, c2, prim)
        out = self._pair.get(key)
        if out is None:
            if prim:
                out = self._sumset(
                    self._single_mask(c1, True), self._single_mask(c2, False)
                ) | self._sumset(self._single_mask(c1, False), self._single_mask(c2, True))
            else:
                out = self._sumset(
                    self._single_mask(c1, False), self._single_mask(c2, False)
                )
            self._pair[key] = out
        return out

    def _reflect(self, mask: int) -> int:
        """Mask of negated values: bit r maps to bit (m - r), bit 0 stays."""
        out = self._refl.get(mask)
        if out is None:
            m = self.m
            rest = mask >> 1
            out = (mask & 1) | (int(format(rest, f"0{m - 1}b")[::-1], 2) << 1)
            self._refl[mask] = out
        return out

    def has_primitive_zero(self, form: DiagonalForm) -> bool:
        cs = []
        for c in form.coeffs:
            if c.denominator != 1:
                raise ValueError("the modular oracle needs integer coefficients")
            cs.append(int(c))
        n = len(cs)
        if n == 1:
            return bool(self._single_mask(cs[0], True) & 1)
        if n == 2:
            a_prim, a_any = self._single_mask(cs[0], True), self._single_mask(cs[0], False)
            b_prim, b_any = self._single_mask(cs[1], True), self._single_mask(cs[1], False)
        elif n == 3:
            a_prim, a_any = self._pair_mask(cs[0], cs[1], True), self._pair_mask(cs[0], cs[1], False)
            b_prim, b_any = self._single_mask(cs[2], True), self._single_mask(cs[2], False)
        elif n == 4:
            a_prim, a_any = self._pair_mask(cs[0], cs[1], True), self._pair_mask(cs[0], cs[1], False)
            b_prim, b_any = self._pair_mask(cs[2], cs[3], True), self._pair_mask(cs[2], cs[3], False)
        else:
            raise ValueError("the modular oracle handles dim <= 4")
        return bool((a_prim & self._reflect(b_any)) | (a_any & self._reflect(b_prim)))


@lru_cache(maxsize=None)
def local_oracle(p: int) -> LocalZeroOracle:
    return LocalZeroOracle(p)


_WITNESS_TABLES: dict[tuple[tuple[int, ...], int], dict[int, tuple[int, ...]]] = {}


def _left_table(coeffs: tuple[int, ...], height: int) -> dict[int, tuple[int, ...]]:
    """value -> some vector over [0, height] attaining it, preferring a
    nonzero vector when the value is attainable by one."""
    key = (coeffs, height)
    table = _WITNESS_TABLES.get(key)
    if table is None:
        table = {}
        for vec in product(range(height + 1), repeat=len(coeffs)):
            val = sum(c * x * x for c, x in zip(coeffs, vec))
            cur = table.get(val)
            if cur is None or (not any(cur) and any(vec)):
                table[val] = vec
        _WITNESS_TABLES[key] = table
    return table


def isotropy_witness(form: DiagonalForm, height: int) -> tuple[int, ...] | None:
    """A nonzero nonnegative integer zero of the form with entries up to
    height, by meeting two half-sums in the middle, or None. Signs never
    matter since only squares of the entries appear."""
    scale = lcm(*(c.denominator for c in form.coeffs))
    cs = tuple(int(c * scale) for c in form.coeffs)
    k = (len(cs) + 1) // 2
    table = _left_table(cs[:k], height)
    right = cs[k:]
    for vec in product(range(height + 1), repeat=len(right)):
        hit = table.get(-sum(c * x * x for c, x in zip(right, vec)))
        if hit is not None and (any(hit) or any(vec)):
            return hit + vec
    return None


def _has_local_obstruction(f: DiagonalForm) -> bool:
    """Is there a visible local reason for f to be anisotropic: definiteness,
    or a prime in {2, 3, 5, 7} where the modular oracle finds no primitive
    zero? Sound for grid forms, whose bad primes all lie in that set."""
    pos, neg = f.signature()
    if pos == 0 or neg == 0:
        return True
    return any(not local_oracle(p).has_primitive_zero(f) for p in (2, 3, 5, 7))


def isotropy_grid_check(height: int = 60) -> int:
    """Cross-check isotropic_Q over the whole coefficient grid: every form
    claimed isotropic must yield an explicit verified integer zero, and
    every form claimed anisotropic must show a local obstruction the oracle
    can see. Returns the number of forms checked."""
    checked = 0
    for f in grid_forms():
        if isotropic_Q(f):
            w = isotropy_witness(f, height)
            assert w is not None, f"no integer zero up to {height} for {f}"
            assert any(w), f"degenerate witness for {f}"
            total = sum(c * x * x for c, x in zip(f.coeffs, w))
            assert total == 0, f"witness {w} fails for {f}"
        else:
            assert _has_local_obstruction(f), f"no local obstruction for {f}"
        checked += 1
    return checked


def three_squares_sieve(bound: int) -> bytearray:
    """out[n] is 1 iff n is a sum of three integer squares, for n <= bound,
    by plain enumeration."""
    out = bytearray(bound + 1)
    x = 0
    while x * x <= bound:
        y = x
        while x * x + y * y <= bound:
            z = y
            while (s := x * x + y * y + z * z) <= bound:
                out[s] = 1
                z += 1
            y += 1
        x += 1
    return out


def reciprocity_failures(samples: int, seed: int = 0) -> int:
    """Count sampled pairs of nonzero rationals violating the product
    formula for Hilbert symbols over the support places. Symbols are +1
    outside the support, so the finite product is the full one."""
    rng = random.Random(seed)
    fails = 0
    for _ in range(samples):
        a = _random_rational(rng)
        b = _random_rational(rng)
        places = {Place(2), REAL_PLACE}
        for x in (a, b):
            places.update(Place(p) for p in factorize(x.numerator) if p != 2)
            places.update(Place(p) for p in factorize(x.denominator) if p != 2)
        prod = 1
        for v in places:
            prod *= hilbert_symbol(a, b, v)
        if prod != 1:
            fails += 1
    return fails


def _random_rational(rng: random.Random) -> Rational:
    num = rng.randint(1, 10**4) * rng.choice((1, -1))
    den = rng.randint(1, 10**4)
    return Fraction(num, den)
