import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from recstats.perm import (
    Permutation,
    lehmer_decode,
    lehmer_encode,
    records,
    sample_uniform,
    sample_uniform_many,
)


@st.composite
def permutations(draw, max_n: int = 32) -> Permutation:
    n = draw(st.integers(1, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def codes(draw, max_n: int = 32) -> tuple[int, ...]:
    n = draw(st.integers(1, max_n))
    return tuple(draw(st.integers(0, i - 1)) for i in range(1, n + 1))


class TestRecords:
    def test_worked_example(self):
        profile = records(Permutation((4, 7, 5, 1, 6, 8, 2, 3)))
        assert profile.positions == (1, 2, 6)
        assert profile.rec == 3
        assert profile.srec == 9

    def test_identity_all_records(self):
        profile = records(Permutation((1, 2, 3)))
        assert profile.positions == (1, 2, 3)
        assert (profile.rec, profile.srec) == (3, 6)

    def test_decreasing_single_record(self):
        profile = records(Permutation((3, 2, 1)))
        assert profile.positions == (1,)
        assert (profile.rec, profile.srec) == (1, 1)

    @given(permutations())
    def test_profile_invariants(self, p):
        profile = records(p)
        n = len(p)
        assert profile.positions[0] == 1
        assert all(a < b for a, b in zip(profile.positions, profile.positions[1:]))
        assert 1 <= profile.rec <= n
        assert 1 <= profile.srec <= n * (n + 1) // 2


class TestLehmer:
    def test_encode_worked_example(self):
        assert lehmer_encode(Permutation((4, 7, 5, 1, 6, 8, 2, 3))) == (0, 0, 1, 3, 1, 0, 5, 5)

    def test_encode_identity_is_zero(self):
        for n in (1, 4, 9):
            assert lehmer_encode(Permutation(tuple(range(1, n + 1)))) == (0,) * n

    def test_encode_decreasing(self):
        assert lehmer_encode(Permutation((3, 2, 1))) == (0, 1, 2)

    def test_decode_worked_example(self):
        assert lehmer_decode((0, 0, 1, 3, 1, 0, 5, 5)).entries == (4, 7, 5, 1, 6, 8, 2, 3)

    def test_decode_zero_code_is_identity(self):
        assert lehmer_decode((0, 0, 0, 0)).entries == (1, 2, 3, 4)

    def test_decode_rejects_bad_digits(self):
        with pytest.raises(ValueError):
            lehmer_decode((0, 2))
        with pytest.raises(ValueError):
            lehmer_decode((1,))

    def test_exhaustive_bijection_small_n(self):
        for n in range(1, 7):
            images = set()
            for code in itertools.product(*(range(i) for i in range(1, n + 1))):
                p = lehmer_decode(code)
                assert lehmer_encode(p) == code
                images.add(p.entries)
            assert images == set(itertools.permutations(range(1, n + 1)))

    @given(permutations())
    def test_roundtrip(self, p):
        assert lehmer_decode(lehmer_encode(p)) == p

    @given(codes())
    def test_roundtrip_from_code(self, code):
        assert lehmer_encode(lehmer_decode(code)) == code

    @given(permutations())
    def test_records_sit_at_code_zeros(self, p):
        code = lehmer_encode(p)
        zeros = tuple(i for i, r in enumerate(code, start=1) if r == 0)
        profile = records(p)
        assert profile.positions == zeros
        assert profile.rec == len(zeros)
        assert profile.srec == sum(zeros)


class TestPermutationType:
    def test_rejects_non_bijections(self):
        for bad in ((), (0, 1), (1, 1), (2, 3), (1, 2, 4)):
            with pytest.raises(ValueError):
                Permutation(bad)

    def test_string_roundtrip(self):
        p = Permutation((4, 7, 5, 1, 6, 8, 2, 3))
        assert str(p) == "4,7,5,1,6,8,2,3"
        assert Permutation.from_string(str(p)) == p

    def test_from_string_rejects_junk(self):
        with pytest.raises(ValueError):
            Permutation.from_string("1,two,3")


class TestSampling:
    def test_n1_is_trivial(self):
        assert sample_uniform(1, 12345).entries == (1,)

    def test_deterministic(self):
        assert sample_uniform(20, 99) == sample_uniform(20, 99)
        assert sample_uniform_many(6, 7, 5) == sample_uniform_many(6, 7, 5)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            sample_uniform(0, 1)

    @settings(deadline=None)
    @given(st.integers(1, 40), st.integers(0, 2**64 - 1))
    def test_output_is_valid_permutation(self, n, seed):
        p = sample_uniform(n, seed)
        assert sorted(p.entries) == list(range(1, n + 1))

    def test_rec_distribution_matches_exact_row(self):
        # exact row for n=4 from brute force: c(4, k) = 6, 11, 6, 1
        from recstats.tables import brute_force_tables

        exact = brute_force_tables(4)[0].coeffs
        assert [exact[k] for k in range(1, 5)] == [6, 11, 6, 1]
        count = 100_000
        freq = [0] * 5
        for p in sample_uniform_many(4, 2024, count):
            freq[records(p).rec] += 1
        for k in range(1, 5):
            p_k = exact[k] / 24
            se = math.sqrt(p_k * (1 - p_k) / count)
            assert abs(freq[k] / count - p_k) <= 3 * se

    def test_position_frequencies_near_one_over_k(self):
        n, count = 10, 20_000
        hits = [0] * (n + 1)
        for p in sample_uniform_many(n, 5150, count):
            for pos in records(p).positions:
                hits[pos] += 1
        for k in range(1, n + 1):
            assert abs(hits[k] / count - 1 / k) <= 4 / math.sqrt(count)
