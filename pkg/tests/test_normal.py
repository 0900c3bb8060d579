"""Normal elements and normal-coordinate maps."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qpolycodes import NormalBasis, build_tower, find_normal, is_normal, normal_elements
from qpolycodes.linalg import span_vectors

T8 = build_tower(2, 1, 3)
T16 = build_tower(2, 1, 4)
T9 = build_tower(3, 1, 2)
T64 = build_tower(2, 2, 3)
NB8 = find_normal(T8)
NB64 = find_normal(T64)


def independence_oracle(tower, a):
    """Brute force: do the GF(q)-combinations of the conjugates hit q^n values?"""
    conj = [a]
    for _ in range(tower.n - 1):
        conj.append(tower.ext.frobenius(conj[-1], 1))
    seen = set()
    for coeffs in itertools.product(range(tower.q), repeat=tower.n):
        acc = 0
        for c, v in zip(coeffs, conj):
            acc = tower.ext.add(acc, tower.ext.mul(tower.embed(c), v))
        seen.add(acc)
    return len(seen) == tower.r


class TestIsNormal:
    def test_x_is_not_normal_in_gf8(self):
        # x + x^2 + x^4 = 0 under x^3 + x + 1
        assert not is_normal(T8, 2)

    def test_x_plus_1_is_normal_in_gf8(self):
        assert is_normal(T8, 3)

    def test_zero_never(self):
        assert not is_normal(T8, 0)

    def test_matches_oracle_on_all_of_gf8(self):
        ours = set(normal_elements(T8))
        oracle = {a for a in range(1, 8) if independence_oracle(T8, a)}
        assert ours == oracle

    def test_matches_oracle_on_all_of_gf9(self):
        ours = set(normal_elements(T9))
        oracle = {a for a in range(1, 9) if independence_oracle(T9, a)}
        assert ours == oracle


class TestFindNormal:
    def test_gf8_first_normal(self):
        assert NB8.alpha == 3  # 0, 1, x all fail; x+1 passes

    def test_degree_one_case(self):
        t = build_tower(3, 1, 1)
        assert find_normal(t).alpha == 1  # any nonzero scalar works

    def test_gf4_over_gf2(self):
        t = build_tower(2, 1, 2)
        assert find_normal(t).alpha == 2  # x and x^2 = x+1 are independent

    def test_basis_matrix_invertible(self):
        prod = NB64.basis_matrix.mat_mul(NB64.inverse_matrix)
        from qpolycodes import GFqMatrix

        assert prod == GFqMatrix.identity(T64.base, 3)

    def test_nonnormal_rejected(self):
        with pytest.raises(ValueError):
            NormalBasis.from_element(T8, 2)


class TestCoords:
    def test_alpha_is_e0(self):
        assert NB8.coords(NB8.alpha) == (1, 0, 0)

    def test_zero(self):
        assert NB8.coords(0) == (0, 0, 0)

    def test_one_in_gf8(self):
        # conjugate sum: (1,1,0)+(1,0,1)+(1,1,1) = (1,0,0) = 1
        assert NB8.coords(1) == (1, 1, 1)

    def test_expansion_identity(self):
        # coords really are the expansion coefficients over the conjugates
        for x in range(T64.r):
            c = NB64.coords(x)
            acc = 0
            for ci, conj in zip(c, NB64.conjugate_values):
                acc = T64.ext.add(acc, T64.ext.mul(T64.embed(ci), conj))
            assert acc == x

    @given(st.integers(0, 63))
    def test_round_trip(self, x):
        assert NB64.from_coords(NB64.coords(x)).value == x

    @given(st.lists(st.integers(0, 3), min_size=3, max_size=3))
    def test_round_trip_other_direction(self, v):
        assert NB64.coords(NB64.from_coords(v)) == tuple(v)

    def test_from_coords_basics(self):
        assert NB8.from_coords((1, 0, 0)).value == NB8.alpha
        assert NB8.from_coords((0, 0, 0)).value == 0

    def test_length_checked(self):
        with pytest.raises(ValueError):
            NB8.from_coords((1, 0))

    def test_linear(self):
        F = T8.ext
        for x in range(8):
            for y in range(8):
                cx, cy = NB8.coords(x), NB8.coords(y)
                csum = tuple(T8.base.add(a, b) for a, b in zip(cx, cy))
                assert NB8.coords(F.add(x, y)) == csum


class TestFrobeniusShift:
    @pytest.mark.parametrize("tower", [T8, T16, T9, T64])
    def test_right_shift_everywhere(self, tower):
        nb = find_normal(tower)
        for x in range(tower.r):
            c = nb.coords(x)
            shifted = (c[-1],) + c[:-1]
            assert nb.coords(tower.ext.frobenius(x, 1)) == shifted


class TestCoordsTable:
    @pytest.mark.parametrize("tower", [T8, T9, T64])
    def test_matches_direct_coords(self, tower):
        nb = find_normal(tower)
        table = nb.coords_table()
        q, n = tower.q, tower.n
        for x in range(tower.r):
            packed = table[x]
            digits = []
            v = packed
            for _ in range(n):
                v, d = divmod(v, q)
                digits.append(d)
            assert tuple(digits) == nb.coords(x)

    def test_second_basis_differs(self):
        others = [a for a in normal_elements(T8) if a != NB8.alpha]
        assert others  # more than one normal element exists
        nb2 = NormalBasis.from_element(T8, others[0])
        assert nb2.coords(1) != NB8.coords(1) or nb2.alpha != NB8.alpha
