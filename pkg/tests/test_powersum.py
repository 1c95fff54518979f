import pytest

from fqzeta import (
    INF,
    Poly,
    PrimePower,
    RationalFn,
    ResourceLimitError,
    bruteforce_power_table,
    field_from_q,
    power_sum_bruteforce,
    power_sum_formula,
    power_sum_valuation,
    vanishes,
)
from fqzeta.compose import HEAD
from fqzeta.powersum import iter_index_tuples

import oracles


class TestFormula:
    def test_remark_values(self, F3):
        assert power_sum_formula(1, -8, F3).value.text() == "2*t^6+2*t^4+2*t^2+2"
        assert power_sum_formula(2, -8, F3).value.text() == "t^6+t^4+t^2"
        assert power_sum_formula(3, -8, F3).value.is_zero

    def test_d0(self, F3):
        res = power_sum_formula(0, -5, F3)
        assert res.value == Poly.one(F3)
        assert res.valuation == 0

    def test_rejects_nonnegative_s(self, F3):
        with pytest.raises(ValueError):
            power_sum_formula(1, 0, F3)
        with pytest.raises(ValueError):
            power_sum_formula(1, 2, F3)

    def test_coefficients_against_multinomials(self, F3):
        # each index tuple carries the mod-p multinomial of the target
        for d in (1, 2):
            for k in (4, 8, 10):
                for parts, w, coeff in iter_index_tuples(k, d, F3.pp):
                    assert coeff == oracles.naive_multinomial_mod(k, parts, 3)
                    assert coeff != 0

    def test_json_record(self, F3):
        rec = power_sum_formula(2, -8, F3).to_json_dict()
        assert rec == {
            "q": 3,
            "p": 3,
            "f": 1,
            "modulus": "x",
            "d": 2,
            "s": -8,
            "method": "formula",
            "value": "t^6+t^4+t^2",
            "valuation": 2,
        }
        rec0 = power_sum_formula(3, -8, F3).to_json_dict()
        assert rec0["value"] == "0" and rec0["valuation"] == "inf"


class TestBruteForce:
    def test_positive_exponent(self, F3):
        res = power_sum_bruteforce(1, 2, F3)
        assert isinstance(res.value, RationalFn)
        assert res.value.text() == "1/(t^6+t^4+t^2)"
        assert res.valuation == -2

    def test_d0(self, F3):
        assert power_sum_bruteforce(0, 7, F3).value == RationalFn(Poly.one(F3))
        assert power_sum_bruteforce(0, -7, F3).value == Poly.one(F3)

    def test_s0_vanishes_for_positive_d(self, F3):
        assert power_sum_bruteforce(2, 0, F3).value.is_zero

    def test_guard(self, F3):
        with pytest.raises(ResourceLimitError):
            power_sum_bruteforce(3, -2, F3, max_terms=5)

    def test_routes_agree_small(self):
        for q in (2, 3, 4, 9):
            field = field_from_q(q)
            for d in (1, 2):
                for k in range(1, 25):
                    a = power_sum_formula(d, -k, field).value
                    b = power_sum_bruteforce(d, -k, field).value
                    assert a == b, (q, d, k)

    def test_table_matches_single_calls(self):
        for q in (3, 4):
            field = field_from_q(q)
            table = bruteforce_power_table(2, 12, field)
            for k in range(1, 13):
                assert table[k] == power_sum_bruteforce(2, -k, field).value
            assert table[0] == power_sum_bruteforce(2, 0, field).value


class TestValuationAndVanishing:
    def test_examples(self, q3):
        assert power_sum_valuation(1, -8, q3) == 0
        assert power_sum_valuation(2, -8, q3) == 2
        assert power_sum_valuation(0, -5, q3) == 0
        assert power_sum_valuation(3, -8, q3) is INF

    def test_vanishes_examples(self, q3):
        assert vanishes(3, -8, q3)
        assert not vanishes(2, -8, q3)
        for q in (2, 3, 4, 9):
            pp = PrimePower.from_q(q)
            assert not vanishes(1, -(q - 1) if q > 2 else -1, pp)

    def test_valuation_matches_formula(self):
        for q in (2, 3, 9):
            pp = PrimePower.from_q(q)
            field = field_from_q(q)
            for d in (0, 1, 2):
                for k in range(1, 30):
                    nu = power_sum_valuation(d, -k, pp)
                    poly = power_sum_formula(d, -k, field).value
                    assert nu == poly.t_valuation, (q, d, k)

    def test_degree_window(self):
        # every exponent sits between the modest and greedy weights
        from fqzeta import greedy, modest

        for q in (3, 4):
            pp = PrimePower.from_q(q)
            field = field_from_q(q)
            for d in (1, 2):
                for k in range(1, 40):
                    poly = power_sum_formula(d, -k, field).value
                    if poly.is_zero:
                        continue
                    lo = modest(k, d, pp, HEAD).weight
                    hi = greedy(k, d, pp).weight
                    assert poly.t_valuation == lo
                    assert poly.degree == hi
                    assert all(
                        lo <= e <= hi
                        for e, c in enumerate(poly.coeffs)
                        if c
                    )
