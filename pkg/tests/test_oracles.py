from fractions import Fraction

import pytest

from noethercheck import (
    DiagonalForm,
    GRID_COEFFS,
    grid_forms,
    isotropy_witness,
    local_oracle,
    reciprocity_failures,
    three_squares_nat,
    three_squares_sieve,
)


def test_grid_forms():
    forms = grid_forms()
    assert len(forms) == 1000
    assert len(set(f.coeffs for f in forms)) == 1000
    assert all(1 <= f.dim <= 4 for f in forms)
    assert all(c in GRID_COEFFS for f in forms for c in f.coeffs)


def test_local_oracle_known():
    o2 = local_oracle(2)
    assert o2 is local_oracle(2)
    assert not o2.has_primitive_zero(DiagonalForm.repeated(3))
    assert not o2.has_primitive_zero(DiagonalForm.repeated(4))
    assert not o2.has_primitive_zero(DiagonalForm.of(1, 1, 1, -7))
    assert o2.has_primitive_zero(DiagonalForm.of(1, -1))
    assert not o2.has_primitive_zero(DiagonalForm.of(1, 1))
    assert not o2.has_primitive_zero(DiagonalForm.of(1))
    assert not local_oracle(7).has_primitive_zero(DiagonalForm.of(1, -3))
    assert local_oracle(7).has_primitive_zero(DiagonalForm.of(1, -2))
    assert not local_oracle(5).has_primitive_zero(DiagonalForm.of(1, -3, 5))


def test_local_oracle_rejects():
    with pytest.raises(ValueError):
        local_oracle(3).has_primitive_zero(DiagonalForm.of(Fraction(1, 2)))
    with pytest.raises(ValueError):
        local_oracle(3).has_primitive_zero(DiagonalForm.repeated(5))


def _check_witness(form, w):
    assert w is not None
    assert any(w)
    assert sum(c * x * x for c, x in zip(form.coeffs, w)) == 0


def test_isotropy_witness():
    f = DiagonalForm.of(1, 1, 1, -6)
    _check_witness(f, isotropy_witness(f, 10))
    g = DiagonalForm.of(1, -1)
    _check_witness(g, isotropy_witness(g, 5))
    h = DiagonalForm.of(Fraction(1, 2), Fraction(-3, 2), 1)
    _check_witness(h, isotropy_witness(h, 8))
    assert isotropy_witness(DiagonalForm.of(1, 1, 1, -7), 25) is None
    assert isotropy_witness(DiagonalForm.of(5), 10) is None
    assert isotropy_witness(DiagonalForm.repeated(4), 10) is None


def test_three_squares_sieve():
    sieve = three_squares_sieve(300)
    assert len(sieve) == 301
    assert sieve[0] == 1
    for n in range(1, 301):
        assert bool(sieve[n]) == three_squares_nat(n)


def test_reciprocity_failures():
    assert reciprocity_failures(200) == 0
    assert reciprocity_failures(50, seed=7) == 0
