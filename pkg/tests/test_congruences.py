"""Congruence predictors and verification reports."""

import pytest

from polycenter import (
    Theorem,
    catalan_mod,
    predict_mod2,
    predict_mod4,
    verify_congruence,
)
from polycenter.congruences import _first_mismatch, is_prime


class TestPredictors:
    def test_mod2_examples(self):
        assert predict_mod2(0) == 1
        assert predict_mod2(7) == 1
        assert predict_mod2(6) == 0

    def test_mod4_examples(self):
        assert predict_mod4(3) == 1
        assert predict_mod4(4) == 2
        assert predict_mod4(8) == 2  # 9 = 2^3 + 2^0, binary weight 2; C(8) = 1430 = 2 (mod 4)
        assert predict_mod4(10) == 0  # 11 has binary weight 3

    def test_classification_consistency(self):
        for n in range(2000):
            assert predict_mod4(n) % 2 == predict_mod2(n)

    def test_against_actual_residues(self):
        for n in range(512):
            assert predict_mod2(n) == catalan_mod(n, 2)
            assert predict_mod4(n) == catalan_mod(n, 4)


class TestIsPrime:
    def test_small(self):
        primes = {2, 3, 5, 7, 11, 13, 17, 19, 23}
        for n in range(25):
            assert is_prime(n) == (n in primes)


class TestVerify:
    def test_odd_characterization(self):
        report = verify_congruence(Theorem.ODD_CHARACTERIZATION, 1000)
        assert report.passed and report.counterexample is None

    def test_mod4(self):
        report = verify_congruence(Theorem.MOD4_CLASSIFICATION, 1000)
        assert report.passed

    def test_modp_catalan(self):
        report = verify_congruence(Theorem.MODP_CATALAN, 500, p=5)
        assert report.passed
        assert report.bounds == {"max_n": 500, "p": 5}

    def test_modp_kangulation(self):
        report = verify_congruence(Theorem.MODP_KANGULATION, 200, p=5, k=4)
        assert report.passed
        assert report.bounds == {"max_n": 200, "p": 5, "k": 4}

    def test_invalid_primes_rejected(self):
        with pytest.raises(ValueError):
            verify_congruence(Theorem.MODP_CATALAN, 100, p=3)
        with pytest.raises(ValueError):
            verify_congruence(Theorem.MODP_CATALAN, 100, p=9)
        with pytest.raises(ValueError):
            verify_congruence(Theorem.MODP_KANGULATION, 100, p=3, k=3)
        with pytest.raises(ValueError):
            verify_congruence(Theorem.MODP_KANGULATION, 100, p=4, k=3)

    def test_json_shape(self):
        doc = verify_congruence(Theorem.ODD_CHARACTERIZATION, 50).to_json()
        assert doc == {
            "theorem": "odd",
            "range": {"max_n": 50},
            "passed": True,
            "counterexample": None,
        }

    def test_counterexample_reporting(self):
        # first mismatch in index order wins
        cases = [
            ({"n": 0}, 1, 1),
            ({"n": 1}, 0, 1),
            ({"n": 2}, 0, 3),
        ]
        ce = _first_mismatch(iter(cases))
        assert ce == {"n": 1, "expected": 0, "actual": 1}
        assert _first_mismatch(iter(cases[:1])) is None
