"""Tests for admissible mappings and their admissibility verdicts."""

import pytest

from chuk_semifield.admissible import (
    AdmissibleFamily,
    composed_family,
    diag_family,
    is_additive,
    is_admissible,
    oracle_witness,
    require_admissible,
    trivial_family,
    triang_family,
)
from chuk_semifield.errors import ConsistencyError, ParameterError
from chuk_semifield.semilinear import SemilinearMap
from chuk_semifield.types import FLAG_TRIVIAL_EQUIVALENT, FamilyVariant


class TestShapes:
    """Tests for the matrices M_a of each shape."""

    def test_diag_matrices(self, gf9):
        F = diag_family(gf9, k=1, l=1, alpha=4)
        assert F.matrices(3).tolist() == [[0, 5], [6, 0]]
        assert F.matrices(0).tolist() == [[0, 0], [0, 0]]

    def test_triang_matrices(self, gf4):
        F = triang_family(gf4, k=1, alpha=2, beta=1)
        # sigma^2 = id on GF(4)
        assert F.matrices(2).tolist() == [[0, 3], [2, 3]]

    def test_trivial_matrices(self, gf4):
        T = SemilinearMap.from_rows(gf4, [[0, 2], [1, 0]], k=1)
        F = trivial_family(T)
        assert F.matrices(2).tolist() == [[0, 3], [2, 0]]
        assert F.eval_at(1).M.tolist() == [[0, 2], [1, 0]]

    def test_vectorized(self, gf9):
        F = diag_family(gf9, k=1, l=1, alpha=4)
        assert F.matrices([1, 2, 3]).shape == (3, 2, 2)

    def test_exponents_reduced(self, gf9):
        F = diag_family(gf9, k=3, l=-1, alpha=4)
        assert (F.k, F.l) == (1, 1)

    def test_every_shape_additive(self, gf9):
        for F in (
            diag_family(gf9, k=1, l=1, alpha=4),
            triang_family(gf9, k=1, alpha=4, beta=1),
            composed_family(gf9, k=1, l=1, alpha=4, eta=4),
        ):
            assert is_additive(F)

    def test_to_dict(self, gf9):
        assert diag_family(gf9, k=1, l=1, alpha=4).to_dict() == {
            "variant": "diag",
            "k": 1,
            "l": 1,
            "alpha": 4,
        }
        assert composed_family(gf9, 1, 1, 4, 5).to_dict()["eta"] == 5


class TestAdmissibility:
    """Tests for closed-form verdicts cross-checked by the exhaustive scan."""

    def test_diag_nonsquare_admissible(self, gf9):
        verdict = is_admissible(diag_family(gf9, k=1, l=1, alpha=4))
        assert verdict.admissible
        assert verdict.closed_form is True
        assert verdict.oracle is True

    def test_diag_square_not_admissible(self, gf9):
        verdict = is_admissible(diag_family(gf9, k=1, l=1, alpha=2))
        assert not verdict.admissible
        assert verdict.witness is not None

    def test_witness_is_reducible(self, gf9):
        F = diag_family(gf9, k=1, l=1, alpha=2)
        a = oracle_witness(F)
        assert not F.eval_at(a).is_irreducible_oracle()

    def test_diag_identity_tau_flagged(self, gf9, caplog):
        F = diag_family(gf9, k=1, l=0, alpha=4)
        assert FLAG_TRIVIAL_EQUIVALENT in F.flags
        assert "trivial family in disguise" in caplog.text

    def test_diag_degree_one(self, gf8):
        # gcd(2 + 1, 2 - 1, 7) = 1: no alpha works
        verdict = is_admissible(diag_family(gf8, k=1, l=1, alpha=3))
        assert not verdict.admissible
        assert "d = 1" in verdict.reason

    def test_triang(self, gf4):
        assert is_admissible(triang_family(gf4, k=1, alpha=2, beta=0)).admissible
        assert not is_admissible(triang_family(gf4, k=1, alpha=1, beta=0)).admissible

    def test_trivial(self, gf4):
        T = SemilinearMap.from_rows(gf4, [[0, 2], [1, 0]], k=1)
        verdict = is_admissible(trivial_family(T))
        assert verdict.admissible
        assert verdict.reason == "T is irreducible"

    def test_trivial_rejects_reducible(self, gf4):
        T = SemilinearMap.from_rows(gf4, [[0, 1], [1, 0]], k=1)
        with pytest.raises(ParameterError, match="reducible"):
            trivial_family(T)

    def test_composed_norm_one(self, gf9):
        verdict = is_admissible(composed_family(gf9, k=1, l=1, alpha=4, eta=1))
        assert not verdict.admissible
        assert verdict.reason == "N(eta) = 1"

    def test_composed_sufficient_condition(self, gf9):
        verdict = is_admissible(composed_family(gf9, k=1, l=1, alpha=4, eta=4))
        assert verdict.admissible

    def test_undecidable_without_scan(self, gf27):
        F = composed_family(gf27, k=1, l=1, alpha=2, eta=2)
        with pytest.raises(ParameterError, match="cannot decide"):
            is_admissible(F, oracle=False)

    def test_non_additive_mapping_rejected(self, gf9, monkeypatch):
        matrices = AdmissibleFamily.matrices
        # a -> M_(a^2) is not additive in characteristic 3
        monkeypatch.setattr(
            AdmissibleFamily, "matrices", lambda self, a: matrices(self, self.ctx.mul(a, a))
        )
        with pytest.raises(ConsistencyError, match="not additive"):
            is_admissible(diag_family(gf9, k=1, l=1, alpha=4))

    def test_require_admissible(self, gf9):
        with pytest.raises(ParameterError, match="not admissible"):
            require_admissible(diag_family(gf9, k=1, l=1, alpha=2))

    def test_variant_enum(self, gf9):
        assert diag_family(gf9, 1, 1, 4).variant == FamilyVariant.DIAG
