"""Exact linear algebra over GF(q): elimination, spans, circulants."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qpolycodes import GFqMatrix, build_tower, span_vectors

GF2 = build_tower(2, 1, 1).base
GF3 = build_tower(3, 1, 1).base
GF4 = build_tower(2, 2, 1).base


def brute_rank(field, rows):
    """Independent oracle: q^rank = size of the row span."""
    count = len(set(span_vectors(field, rows, len(rows[0]))))
    rank = 0
    while field.size**rank < count:
        rank += 1
    assert field.size**rank == count
    return rank


def brute_nullspace(field, mat):
    """Independent oracle: try every vector."""
    out = set()
    for cand in itertools.product(range(field.size), repeat=mat.cols):
        if all(v == 0 for v in mat.mat_vec(cand)):
            out.add(cand)
    return out


def matrices(field, max_dim=4):
    return st.tuples(st.integers(1, max_dim), st.integers(1, max_dim)).flatmap(
        lambda shape: st.lists(
            st.lists(st.integers(0, field.size - 1), min_size=shape[1], max_size=shape[1]),
            min_size=shape[0],
            max_size=shape[0],
        ).map(lambda rows: GFqMatrix(field, rows))
    )


class TestCirculant:
    def test_shift_by_zero(self):
        assert GFqMatrix.circulant(GF2, (1, 0, 0)) == GFqMatrix.identity(GF2, 3)

    def test_constant_vector(self):
        assert GFqMatrix.circulant(GF2, (1, 1, 1)).entries == ((1, 1, 1),) * 3

    def test_layout(self):
        m = GFqMatrix.circulant(GF2, (1, 0, 1))
        assert m.entries == ((1, 1, 0), (0, 1, 1), (1, 0, 1))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            GFqMatrix.circulant(GF2, ())

    @given(st.lists(st.integers(0, 2), min_size=2, max_size=5))
    def test_first_column(self, v):
        m = GFqMatrix.circulant(GF3, v)
        assert tuple(r[0] for r in m.entries) == tuple(v)

    @given(st.lists(st.integers(0, 1), min_size=2, max_size=5), st.integers(0, 31))
    def test_commutes_with_cyclic_shift(self, v, y_bits):
        # G @ rshift(y) = rshift(G @ y): the cyclicity mechanism
        n = len(v)
        y = tuple((y_bits >> i) & 1 for i in range(n))
        m = GFqMatrix.circulant(GF2, v)
        shifted_y = (y[-1],) + y[:-1]
        lhs = m.mat_vec(shifted_y)
        rhs_base = m.mat_vec(y)
        assert lhs == (rhs_base[-1],) + rhs_base[:-1]


class TestRank:
    def test_identity(self):
        assert GFqMatrix.identity(GF3, 4).rank() == 4

    def test_all_ones(self):
        assert GFqMatrix(GF2, [[1] * 5] * 5).rank() == 1

    def test_hamming_circulant(self):
        assert GFqMatrix.circulant(GF2, (1, 0, 0, 0, 1, 0, 1)).rank() == 4

    @given(matrices(GF2))
    def test_matches_span_oracle_gf2(self, m):
        assert m.rank() == brute_rank(GF2, m.entries)

    @given(matrices(GF4, max_dim=3))
    def test_matches_span_oracle_gf4(self, m):
        assert m.rank() == brute_rank(GF4, m.entries)

    @given(matrices(GF3))
    def test_transpose_invariant(self, m):
        assert m.rank() == m.transpose().rank()


class TestNullspace:
    def test_identity_trivial(self):
        assert GFqMatrix.identity(GF2, 3).nullspace() == ()

    def test_zero_matrix(self):
        ns = GFqMatrix.zeros(GF3, 3, 3).nullspace()
        assert ns == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_parity_check_row(self):
        ns = GFqMatrix(GF2, [[1, 1, 1]]).nullspace()
        assert ns == ((1, 0, 1), (0, 1, 1))  # canonical echelon basis
        spanned = set(span_vectors(GF2, ns, 3))
        assert spanned == brute_nullspace(GF2, GFqMatrix(GF2, [[1, 1, 1]]))

    @given(matrices(GF2))
    def test_rank_nullity_gf2(self, m):
        assert len(m.nullspace()) + m.rank() == m.cols

    @given(matrices(GF3))
    def test_rank_nullity_gf3(self, m):
        assert len(m.nullspace()) + m.rank() == m.cols

    @given(matrices(GF4, max_dim=3))
    def test_kernel_members_gf4(self, m):
        ns = m.nullspace()
        for v in span_vectors(GF4, ns, m.cols):
            assert all(x == 0 for x in m.mat_vec(v))
        assert len(set(span_vectors(GF4, ns, m.cols))) == len(brute_nullspace(GF4, m))


class TestRowSpaceEqual:
    def test_reflexive(self):
        m = GFqMatrix.circulant(GF2, (1, 1, 0))
        assert m.row_space_equal(m)

    def test_identity_vs_zero(self):
        assert not GFqMatrix.identity(GF2, 3).row_space_equal(GFqMatrix.zeros(GF2, 3, 3))

    def test_even_weight_code(self):
        a = GFqMatrix.circulant(GF2, (1, 1, 0))
        b = GFqMatrix(GF2, [(1, 1, 0), (0, 1, 1)])
        assert a.row_space_equal(b)

    def test_column_mismatch(self):
        with pytest.raises(ValueError):
            GFqMatrix.identity(GF2, 2).row_space_equal(GFqMatrix.identity(GF2, 3))

    @given(matrices(GF3, max_dim=3), matrices(GF3, max_dim=3))
    def test_agrees_with_span_comparison(self, a, b):
        if a.cols != b.cols:
            return
        span_a = set(span_vectors(GF3, a.entries, a.cols))
        span_b = set(span_vectors(GF3, b.entries, b.cols))
        assert a.row_space_equal(b) == (span_a == span_b)


class TestMatVec:
    def test_identity(self):
        assert GFqMatrix.identity(GF2, 3).mat_vec((1, 0, 1)) == (1, 0, 1)

    def test_parity(self):
        assert GFqMatrix(GF2, [[1] * 3] * 3).mat_vec((1, 1, 0)) == (0, 0, 0)

    def test_e0_extracts_first_column(self):
        m = GFqMatrix.circulant(GF2, (1, 0, 1))
        assert m.mat_vec((1, 0, 0)) == (1, 0, 1)

    def test_length_check(self):
        with pytest.raises(ValueError):
            GFqMatrix.identity(GF2, 3).mat_vec((1, 0))


class TestInverse:
    def test_round_trip(self):
        m = GFqMatrix(GF3, [(1, 1, 0), (0, 1, 1), (0, 0, 1)])
        assert m.mat_mul(m.inverse()) == GFqMatrix.identity(GF3, 3)

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            GFqMatrix(GF2, [(1, 1), (1, 1)]).inverse()


class TestSpanVectors:
    def test_gf4_span_counts_field_codes(self):
        # regression: coefficient codes are field elements, not integers mod q
        vs = list(span_vectors(GF4, [(1, 0), (0, 1)], 2))
        assert len(vs) == 16 and len(set(vs)) == 16

    def test_empty_basis(self):
        assert list(span_vectors(GF2, [], 3)) == [(0, 0, 0)]

    def test_cap(self):
        with pytest.raises(ValueError):
            list(span_vectors(GF2, [(1, 0), (0, 1)], 2, cap=3))

    @given(st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), max_size=3))
    def test_matches_explicit_combinations(self, rows):
        got = set(span_vectors(GF3, rows, 3))
        expect = set()
        for coeffs in itertools.product(range(3), repeat=len(rows)):
            acc = (0, 0, 0)
            for c, r in zip(coeffs, rows):
                acc = tuple(GF3.add(a, GF3.mul(c, b)) for a, b in zip(acc, r))
            expect.add(acc)
        assert got == expect
