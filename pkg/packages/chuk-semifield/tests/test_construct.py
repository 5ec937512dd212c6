"""Tests for the two constructions and twisted cyclic semifields."""

import numpy as np
import pytest

from chuk_semifield.admissible import (
    composed_family,
    diag_family,
    trivial_family,
    triang_family,
)
from chuk_semifield.construct import (
    adjugate,
    brute_force_verdicts,
    construction1,
    construction2,
    criterion_verdicts,
    nonsingular_criterion,
    twisted_cyclic,
    twisted_cyclic_condition,
)
from chuk_semifield.errors import ParameterError
from chuk_semifield.semilinear import SemilinearMap, all_vectors
from chuk_semifield.types import FLAG_ETA_ZERO, FLAG_UNCHECKED, ConstructionKind


@pytest.fixture
def companion9(gf9):
    return SemilinearMap.from_rows(gf9, [[0, 4], [1, 0]], k=1)


class TestConstruction1:
    """Tests for y0 x + eta T_y1(x) + det(M_y1)^(sigma^-1) T_y1^-1(x)."""

    def test_diag_is_semifield(self, gf9):
        S = construction1(diag_family(gf9, k=1, l=1, alpha=4), eta=4)
        assert S.verify_axioms().ok
        assert S.metadata["construction"] == ConstructionKind.C1.value
        assert S.metadata["eta"] == 4

    def test_triang_is_semifield(self, gf4):
        S = construction1(triang_family(gf4, k=1, alpha=2, beta=0), eta=0)
        assert S.verify_axioms().ok
        assert FLAG_ETA_ZERO in S.metadata["flags"]

    def test_trivial_is_semifield(self, gf4):
        T = SemilinearMap.from_rows(gf4, [[0, 2], [1, 0]], k=1)
        S = construction1(trivial_family(T), eta=0)
        assert S.verify_axioms().ok

    def test_norm_one_rejected(self, gf9):
        with pytest.raises(ParameterError, match="N_\\(L:K\\)"):
            construction1(diag_family(gf9, k=1, l=1, alpha=4), eta=1)

    def test_non_admissible_rejected(self, gf9):
        with pytest.raises(ParameterError, match="not admissible"):
            construction1(diag_family(gf9, k=1, l=1, alpha=2), eta=4)

    def test_unchecked_flag(self, gf9):
        S = construction1(diag_family(gf9, k=1, l=1, alpha=2), eta=4, check=False)
        assert FLAG_UNCHECKED in S.metadata["flags"]

    def test_y1_zero_gives_scalar_action(self, gf9):
        S = construction1(diag_family(gf9, k=1, l=1, alpha=4), eta=4)
        x = all_vectors(gf9, 2)
        y = np.tile([3, 0], (len(x), 1))
        assert np.array_equal(S.multiply(x, y), gf9.mul(x, 3))

    def test_adjugate(self, gf9):
        M = np.array([[1, 3], [4, 5]])
        assert adjugate(gf9, M).tolist() == [[5, 6], [8, 1]]


class TestConstruction2:
    """Tests for y0 x + T_y1(x)."""

    def test_diag(self, gf9):
        assert construction2(diag_family(gf9, k=1, l=1, alpha=4)).verify_axioms().ok

    def test_triang(self, gf4):
        S = construction2(triang_family(gf4, k=1, alpha=2, beta=0))
        assert S.verify_axioms().ok
        assert S.metadata["admissible"]["variant"] == "triang"

    def test_composed(self, gf9):
        assert construction2(composed_family(gf9, k=1, l=1, alpha=4, eta=4)).verify_axioms().ok

    def test_zero_divisor_without_check(self, gf9):
        S = construction2(diag_family(gf9, k=1, l=1, alpha=2), check=False)
        report = S.verify_axioms()
        assert not report.ok
        x, y = report.witness
        assert not np.any(S.multiply_digits(S.digits_of(x), S.digits_of(y)))

    def test_right_identity(self, gf9):
        # x o (1, 0) = x
        S = construction2(diag_family(gf9, k=1, l=1, alpha=4))
        y = all_vectors(gf9, 2)
        x = np.tile([1, 0], (len(y), 1))
        assert np.array_equal(S.multiply(y, x), y)


class TestTwistedCyclic:
    """Tests for sum y_i T^i(x) + eta y0^rho T^d(x)."""

    def test_cyclic(self, gf4):
        T = SemilinearMap.from_rows(gf4, [[0, 2], [1, 0]], k=1)
        S = twisted_cyclic(T)
        assert S.verify_axioms().ok
        assert S.metadata["eta"] == 0
        assert S.metadata["rho"] == 1

    def test_twisted(self, companion9):
        eta = next(e for e in range(1, 9) if twisted_cyclic_condition(companion9, 2, 1, e))
        assert twisted_cyclic(companion9, eta=eta).verify_axioms().ok

    def test_condition_failure_rejected(self, companion9):
        bad = next(e for e in range(1, 9) if not twisted_cyclic_condition(companion9, 2, 1, e))
        with pytest.raises(ParameterError, match="norm condition"):
            twisted_cyclic(companion9, eta=bad)

    def test_rho_must_fix_subfield(self, gf16):
        T = SemilinearMap.from_rows(gf16, [[0, 2], [1, 0]], k=1)
        with pytest.raises(ParameterError, match="not a subfield"):
            twisted_cyclic_condition(T, 2, 2, 1)

    def test_reducible_rejected(self, gf4):
        T = SemilinearMap.from_rows(gf4, [[0, 1], [1, 0]], k=1)
        with pytest.raises(ParameterError, match="reducible"):
            twisted_cyclic(T)

    def test_dimension_mismatch(self, companion9):
        with pytest.raises(ParameterError, match="acts on"):
            twisted_cyclic(companion9, d=3)


class TestNonsingularity:
    """Tests for the norm criterion against the rank test."""

    def test_agree_on_every_coefficient_vector(self, companion9, gf9):
        ys = all_vectors(gf9, 3)
        assert np.array_equal(criterion_verdicts(companion9, ys), brute_force_verdicts(companion9, ys))

    def test_zero_is_singular(self, companion9):
        assert not nonsingular_criterion(companion9, [0, 0, 0]).nonsingular

    def test_top_coefficient_zero(self, companion9):
        verdict = nonsingular_criterion(companion9, [1, 3, 0])
        assert verdict.nonsingular
        assert verdict.brute_force is True

    def test_wrong_length(self, companion9):
        with pytest.raises(ParameterError, match="coefficients"):
            nonsingular_criterion(companion9, [1, 2])
