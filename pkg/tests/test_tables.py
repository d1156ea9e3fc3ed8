import json
import math

import pytest

from recstats.tables import (
    REC,
    SREC,
    big_ln,
    brute_force_tables,
    rec_table,
    srec_max,
    srec_table,
    table_csv,
    table_json,
)


class TestRecTable:
    def test_n1(self):
        assert rec_table(1).coeffs == {0: 0, 1: 1}

    def test_n3_by_hand(self):
        # q(q+1)(q+2) = q^3 + 3q^2 + 2q
        assert rec_table(3).coeffs == {0: 0, 1: 2, 2: 3, 3: 1}

    @pytest.mark.parametrize("n", [1, 2, 5, 17, 64])
    def test_first_and_last_coefficients(self, n):
        table = rec_table(n)
        assert table.coeffs[1] == math.factorial(n - 1)
        assert table.coeffs[n] == 1
        assert table.coeffs[0] == 0

    def test_row_sums(self, rec_rows_300):
        for n in (1, 2, 3, 10, 60, 150, 300):
            assert sum(rec_rows_300[n]) == math.factorial(n)

    def test_matches_polynomial_product(self):
        for n in range(1, 51):
            poly = [0, 1]
            for j in range(1, n):
                poly = [
                    (poly[i] if i < len(poly) else 0) * j
                    + (poly[i - 1] if 0 < i <= len(poly) else 0)
                    for i in range(len(poly) + 1)
                ]
            assert poly == [rec_table(n).coeffs[k] for k in range(n + 1)]

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            rec_table(0)


class TestSrecTable:
    def test_n3_by_hand(self):
        # q(q^2+1)(q^3+2) = q^6 + q^4 + 2q^3 + 2q
        assert srec_table(3).coeffs == {1: 2, 2: 0, 3: 2, 4: 1, 5: 0, 6: 1}

    @pytest.mark.parametrize("n", [3, 4, 9, 30])
    def test_zero_positions(self, n):
        coeffs = srec_table(n).coeffs
        top = srec_max(n)
        assert {k for k, v in coeffs.items() if v == 0} == {2, top - 1}
        assert coeffs[1] == math.factorial(n - 1)
        assert coeffs[top] == 1

    def test_row_sums(self, srec_rows_150):
        for n in (1, 2, 3, 10, 60, 150):
            assert sum(srec_rows_150[n]) == math.factorial(n)

    def test_matches_polynomial_product(self):
        # generic convolution against q * prod (q^j + j - 1), a separate
        # code path from the row recurrence
        def polymul(a, b):
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] += ai * bj
            return out

        for n in range(1, 31):
            poly = [0, 1]
            for j in range(2, n + 1):
                factor = [j - 1] + [0] * (j - 1) + [1]
                poly = polymul(poly, factor)
            table = srec_table(n)
            assert poly == [table.coeffs.get(k, 0) for k in range(srec_max(n) + 1)]

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            srec_table(0)


class TestBruteForce:
    def test_n1(self):
        rec_bf, srec_bf = brute_force_tables(1)
        assert rec_bf.coeffs[1] == 1 and srec_bf.coeffs[1] == 1

    @pytest.mark.parametrize("n", range(1, 8))
    def test_matches_recurrences(self, n):
        rec_bf, srec_bf = brute_force_tables(n)
        assert rec_bf.coeffs == rec_table(n).coeffs
        assert srec_bf.coeffs == srec_table(n).coeffs

    def test_size_cap(self):
        with pytest.raises(ValueError):
            brute_force_tables(10)


class TestBigLn:
    def test_one(self):
        assert big_ln(1) == 0.0

    def test_power_of_two(self):
        assert abs(big_ln(2**1000) - 1000 * math.log(2)) < 1e-9

    def test_factorial_against_summed_logs(self):
        direct = math.fsum(math.log(j) for j in range(1, 101))
        assert abs(big_ln(math.factorial(100)) - direct) <= 1e-9 * direct

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            big_ln(0)


class TestExports:
    def test_rec_csv_n1_single_row(self):
        assert table_csv(rec_table(1)) == "n,k,count\n1,1,1\n"

    def test_srec_csv_keeps_zeros(self):
        lines = table_csv(srec_table(3)).splitlines()
        assert lines[0] == "n,k,count"
        assert lines[1:] == ["3,1,2", "3,2,0", "3,3,2", "3,4,1", "3,5,0", "3,6,1"]

    def test_json_uses_decimal_strings(self):
        doc = json.loads(table_json(srec_table(50)))
        assert doc["n"] == 50 and doc["kind"] == SREC
        assert doc["coeffs"]["1"] == str(math.factorial(49))
        assert all(isinstance(v, str) for v in doc["coeffs"].values())

    def test_rec_json_content(self):
        doc = json.loads(table_json(rec_table(3)))
        assert doc == {"n": 3, "kind": REC, "coeffs": {"1": "2", "2": "3", "3": "1"}}
