import random
from fractions import Fraction as F

import pytest

from circuitdual.family import FamilyParam, family_weights
from circuitdual.moments import hausdorff_test
from circuitdual.operators import (
    ConstantTail,
    SquaredWeights,
    construct_2isometry,
    dual_moment_fiber0,
    dual_moment_fiberk,
    dual_weights,
    h_of,
    ones_weights,
)
from circuitdual.oracle import BandedOp, ExactVector, apply, gram_diagonal, hsequence


def test_apply_basis_rules():
    op = BandedOp(ones_weights(), 4)
    image = apply(op, ExactVector.basis(4, 0))
    assert image.entry_value_sq(0) == 1
    assert image.entry_value_sq(1) == 1
    assert image.entry_value_sq(2) == 0

    w = SquaredWeights((F(1), F(1), F(1), F(1), F(9, 4)), ConstantTail(1))
    shifted = apply(BandedOp(w, 6), ExactVector.basis(6, 3))
    assert shifted.support() == (4,)
    assert shifted.entry_value_sq(4) == F(9, 4)


def test_apply_is_linear_on_the_circuit():
    op = BandedOp(ones_weights(), 4)
    v = ExactVector.from_rationals([1, 1, 0, 0])
    image = apply(op, v)
    assert [image.entry_value_sq(i) for i in range(4)] == [1, 1, 1, 0]
    split = apply(op, ExactVector.basis(4, 0)) + apply(op, ExactVector.basis(4, 1))
    assert image.same_values(split)


def test_apply_support_overflow():
    op = BandedOp(ones_weights(), 3)
    with pytest.raises(ValueError, match="overflow"):
        apply(op, ExactVector.basis(3, 2))


def test_entry_addition_reconciles_square_ratios():
    a = ExactVector(((F(1), F(2)),))
    b = ExactVector(((F(1), F(8)),))  # sqrt(8) = 2 sqrt(2)
    total = a + b
    assert total.entry_value_sq(0) == (1 + 2) ** 2 * 2
    incompatible = ExactVector(((F(1), F(3)),))
    with pytest.raises(ValueError, match="incommensurable"):
        a + incompatible


def test_gram_diagonal_small_powers():
    w = construct_2isometry(F(1, 2), 1)
    assert gram_diagonal(w, 0, 1) == w.alpha
    sq = w.sq
    assert gram_diagonal(w, 0, 2) == sq(0) ** 2 + sq(0) * sq(1) + sq(1) * sq(2)


def test_gram_diagonal_matches_closed_form_on_dual():
    w = family_weights(FamilyParam(F(1, 2)))
    assert gram_diagonal(dual_weights(w), 0, 3) == dual_moment_fiber0(w, 3)


def test_gram_diagonal_band_exactness():
    w = family_weights(FamilyParam(F(1, 3)))
    base = gram_diagonal(w, 1, 4)
    assert gram_diagonal(w, 1, 4, size=12) == base
    assert gram_diagonal(w, 1, 4, size=30) == base
    with pytest.raises(ValueError):
        gram_diagonal(w, 1, 4, size=5)


def test_gram_diagonal_phase_independence():
    w = family_weights(FamilyParam(F(2, 5)))
    for k in (0, 1, 3):
        for n in range(6):
            assert gram_diagonal(w, k, n) == gram_diagonal(
                w, k, n, phase="alternating"
            )
    with pytest.raises(ValueError):
        gram_diagonal(w, 0, 1, phase="mystery")


def test_multiplicativity_off_the_circuit():
    rng = random.Random(404)
    for _ in range(20):
        w = SquaredWeights(
            tuple(F(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(4)),
            ConstantTail(F(rng.randint(1, 9), rng.randint(1, 9))),
        )
        for k in (1, 2, 3):
            for n in range(6):
                expected = F(1)
                for j in range(1, n + 1):
                    expected *= w.sq(k + j)
                assert gram_diagonal(w, k, n) == expected


def test_two_isometry_identity_via_oracle():
    rng = random.Random(911)
    for _ in range(15):
        while True:
            sq0 = F(rng.randint(0, 12), 8)
            sq1 = F(rng.randint(1, 16), 8)
            if (sq0 + sq1) * (2 - sq0) - 1 >= sq1:
                break
        w = construct_2isometry(sq0, sq1)
        for k in range(6):
            assert 1 - 2 * gram_diagonal(w, k, 1) + gram_diagonal(w, k, 2) == 0


def test_gram_agrees_with_h_for_single_powers():
    w = family_weights(FamilyParam(F(1, 7)))
    for k in range(5):
        assert gram_diagonal(w, k, 1) == h_of(w, k)


def test_hsequence_isometry_is_constant_one():
    w = SquaredWeights((F(1), F(0)), ConstantTail(1))
    assert hsequence(w, 0, 10).values == (F(1),) * 11
    assert hsequence(w, 3, 6).values == (F(1),) * 7


def test_hsequence_dual_at_zero_parameter():
    w = family_weights(FamilyParam(F(0)))
    assert hsequence(dual_weights(w), 0, 12).values == (F(1),) * 13


def test_hsequence_dual_fails_hausdorff_inside_window():
    w = family_weights(FamilyParam(F(1, 500)))
    prefix = hsequence(dual_weights(w), 0, 8)
    assert prefix.values[0] == 1
    verdict = hausdorff_test(prefix, 5)
    assert not verdict.passed
    assert verdict.witness == (5, 0)


def test_hsequence_matches_fiberk_products():
    w = family_weights(FamilyParam(F(1, 2)))
    dual = dual_weights(w)
    values = hsequence(dual, 2, 8).values
    for n, value in enumerate(values):
        assert value == dual_moment_fiberk(w, 2, n)


def test_oracle_closed_form_equality_random():
    rng = random.Random(7007)
    for _ in range(20):
        while True:
            sq0 = F(rng.randint(0, 12), 8)
            sq1 = F(rng.randint(1, 16), 8)
            if (sq0 + sq1) * (2 - sq0) - 1 >= sq1:
                break
        w = construct_2isometry(sq0, sq1)
        dual = dual_weights(w)
        for n in range(11):
            assert gram_diagonal(dual, 0, n) == dual_moment_fiber0(w, n)
