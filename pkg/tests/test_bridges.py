"""Conversions between the four code representations, checked against oracles."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qpolycodes import (
    CheckElement,
    ImageCodeSpec,
    NormalBasis,
    QPolynomial,
    UnivariatePoly,
    b_lambda_matrix,
    build_tower,
    code_from_generator,
    code_from_lambda,
    codeword_set,
    coset_dimension_bound,
    divisors_of_xn_minus_1,
    ell_from_generator,
    find_normal,
    image_code_by_definition,
    image_code_generator_matrix,
    is_cyclic_set,
    lambda_code_set,
    lambda_from_parity_check,
    matrix_code_basis,
    normal_elements,
    verify_equivalence,
    xn_minus_1,
)
from qpolycodes.linalg import span_vectors

T3 = build_tower(2, 1, 3)
T4 = build_tower(2, 1, 4)
T7 = build_tower(2, 1, 7)
T34 = build_tower(3, 1, 4)
NB3 = find_normal(T3)
NB4 = find_normal(T4)
NB7 = find_normal(T7)
NB34 = find_normal(T34)
GF2 = T3.base


def P(field, *coeffs):
    return UnivariatePoly(field, coeffs)


class TestEllFromGenerator:
    def test_trivial(self):
        assert ell_from_generator(P(GF2, 1), 3, T3).coeffs == (1, 0, 0)

    def test_repetition(self):
        assert ell_from_generator(P(GF2, 1, 1, 1), 3, T3).coeffs == (1, 1, 1)

    def test_hamming_direct_transcription(self):
        # reversed transcription (1,0,0,0,1,0,1) would give the reciprocal code
        got = ell_from_generator(P(GF2, 1, 1, 0, 1), 7, T7)
        assert got.coeffs == (1, 1, 0, 1, 0, 0, 0)

    def test_full_degree_divisor_gives_zero_map(self):
        got = ell_from_generator(xn_minus_1(T34.base, 4), 4, T34)
        assert got.coeffs == (0, 0, 0, 0)

    def test_non_divisor_rejected(self):
        with pytest.raises(ValueError):
            ell_from_generator(P(GF2, 1, 0, 1), 7, T7)

    @pytest.mark.parametrize("tower,nb", [(T7, NB7), (T34, NB34)])
    def test_image_equals_code_for_every_divisor(self, tower, nb):
        for g in divisors_of_xn_minus_1(tower):
            ell = ell_from_generator(g, tower.n, tower)
            image = image_code_by_definition(ImageCodeSpec(ell, nb))
            assert image == codeword_set(code_from_generator(g, tower.n))


class TestImageCodeMatrix:
    def test_identity_map_full_space(self):
        m = image_code_generator_matrix(QPolynomial.from_coeffs(T3, (1,)))
        assert m.rank() == 3

    def test_all_ones_repetition(self):
        m = image_code_generator_matrix(QPolynomial.from_coeffs(T3, (1, 1, 1)))
        assert m.entries == ((1, 1, 1),) * 3
        assert m.rank() == 1

    def test_hamming_rank_and_row_space(self):
        ell = QPolynomial.from_coeffs(T7, (1, 0, 0, 0, 1, 0, 1))
        m = image_code_generator_matrix(ell)
        assert m.rank() == 4
        # rows of this circulant are the shifts of 1 + x + x^3
        std = code_from_generator(P(GF2, 1, 1, 0, 1), 7).generator_matrix
        assert m.row_space_equal(std)

    def test_column_span_is_the_image(self):
        # {G y} agrees with definitional enumeration for each ell over GF(2), n=3
        for bits in range(8):
            ell = QPolynomial.from_coeffs(T3, [(bits >> i) & 1 for i in range(3)])
            definition = image_code_by_definition(ImageCodeSpec(ell, NB3))
            via_matrix = set(span_vectors(GF2, matrix_code_basis(ell), 3))
            assert via_matrix == definition


class TestImageCodeByDefinition:
    def test_zero_map(self):
        ell = QPolynomial.from_coeffs(T3, ())
        assert image_code_by_definition(ImageCodeSpec(ell, NB3)) == {(0, 0, 0)}

    def test_identity_map_full_space(self):
        ell = QPolynomial.from_coeffs(T3, (1,))
        assert len(image_code_by_definition(ImageCodeSpec(ell, NB3))) == 8

    def test_even_weight_code(self):
        ell = QPolynomial.from_coeffs(T3, (1, 0, 1))
        got = image_code_by_definition(ImageCodeSpec(ell, NB3))
        assert got == {(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)}

    def test_matches_matrix_route_exhaustively_n4(self):
        for bits in range(16):
            ell = QPolynomial.from_coeffs(T4, [(bits >> i) & 1 for i in range(4)])
            definition = image_code_by_definition(ImageCodeSpec(ell, NB4))
            via_matrix = set(span_vectors(GF2, matrix_code_basis(ell), 4))
            assert via_matrix == definition
            assert is_cyclic_set(definition)

    @given(st.integers(0, 2**7 - 1))
    def test_matches_matrix_route_sampled_n7(self, bits):
        ell = QPolynomial.from_coeffs(T7, [(bits >> i) & 1 for i in range(7)])
        definition = image_code_by_definition(ImageCodeSpec(ell, NB7))
        via_matrix = set(span_vectors(GF2, matrix_code_basis(ell), 7))
        assert via_matrix == definition

    def test_beta_independent_for_generator_transcriptions(self):
        normals = list(normal_elements(T7))[:2]
        bases = [NormalBasis.from_element(T7, a) for a in normals]
        for g in divisors_of_xn_minus_1(T7):
            ell = ell_from_generator(g, 7, T7)
            sets = [image_code_by_definition(ImageCodeSpec(ell, b)) for b in bases]
            assert sets[0] == sets[1]


class TestLambdaFromParityCheck:
    def test_zero_code(self):
        lam = lambda_from_parity_check(P(GF2, 1), NB3)
        assert lam.value == NB3.alpha
        assert lambda_code_set(lam) == {(0, 0, 0)}

    def test_hamming_transcription(self):
        h = P(GF2, 1, 1, 1, 0, 1)
        lam = lambda_from_parity_check(h, NB7)
        F = T7.ext
        expect = 0
        for i in (0, 1, 2, 4):
            expect = F.add(expect, F.pow(NB7.alpha, 2**i))
        assert lam.value == expect

    def test_n3_bridge(self):
        lam = lambda_from_parity_check(P(GF2, 1, 1), NB3)
        a = NB3.alpha
        assert lam.value == T3.ext.add(a, T3.ext.frobenius(a, 1))
        got = lambda_code_set(lam)
        assert got == codeword_set(code_from_generator(P(GF2, 1, 1, 1), 3))

    def test_full_degree_rejected(self):
        with pytest.raises(ValueError):
            lambda_from_parity_check(xn_minus_1(GF2, 3), NB3)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            lambda_from_parity_check(UnivariatePoly(GF2, ()), NB3)

    def test_non_divisor_rejected(self):
        with pytest.raises(ValueError):
            lambda_from_parity_check(P(GF2, 1, 0, 1), NB7)

    def test_every_proper_divisor_pair_n7(self):
        f = xn_minus_1(GF2, 7)
        for h in divisors_of_xn_minus_1(T7):
            if h.degree >= 7:
                continue
            g = f // h
            lam = lambda_from_parity_check(h, NB7)
            assert lambda_code_set(lam) == codeword_set(code_from_generator(g, 7))


class TestCodeFromLambda:
    def test_normal_element_gives_zero_code(self):
        assert code_from_lambda(CheckElement(T3, NB3.alpha)) == ()

    def test_one_gives_sum_zero_code(self):
        rows = code_from_lambda(CheckElement(T3, 1))
        got = set(span_vectors(GF2, rows, 3))
        assert got == {v for v in got if sum(v) % 2 == 0}
        assert len(rows) == 2

    def test_alpha_plus_alpha_q(self):
        a = NB3.alpha
        lam = CheckElement(T3, T3.ext.add(a, T3.ext.frobenius(a, 1)))
        rows = code_from_lambda(lam)
        assert len(rows) == 1
        expect = codeword_set(code_from_generator(P(GF2, 1, 1, 1), 3))
        assert set(span_vectors(GF2, rows, 3)) == expect

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            CheckElement(T3, 0)

    def test_brute_force_kernel_gf16(self):
        # oracle: test every candidate vector against the defining sum
        import itertools

        for lam_value in range(1, 16):
            lam = CheckElement(T4, lam_value)
            conj = [lam_value]
            for _ in range(3):
                conj.append(T4.ext.frobenius(conj[-1], 1))
            expect = set()
            for c in itertools.product(range(2), repeat=4):
                acc = 0
                for ci, lv in zip(c, conj):
                    if ci:
                        acc = T4.ext.add(acc, lv)
                if acc == 0:
                    expect.add(c)
            got = set(span_vectors(GF2, code_from_lambda(lam), 4))
            assert got == expect


class TestBLambdaMatrix:
    def test_alpha_identity(self):
        from qpolycodes import GFqMatrix

        m = b_lambda_matrix(CheckElement(T3, NB3.alpha), NB3)
        assert m == GFqMatrix.identity(GF2, 3)
        assert m.rank() == 3

    def test_all_ones_coords(self):
        lam = CheckElement(T3, NB3.from_coords((1, 1, 1)).value)
        m = b_lambda_matrix(lam, NB3)
        assert m.rank() == 1
        assert len(code_from_lambda(lam)) == 2  # the sum-zero code

    def test_spec_layout_example(self):
        a = NB3.alpha
        lam = CheckElement(T3, T3.ext.add(a, T3.ext.frobenius(a, 1)))
        m = b_lambda_matrix(lam, NB3)
        assert lam.normal_coords(NB3) == (1, 1, 0)
        assert m.entries == ((1, 0, 1), (1, 1, 0), (0, 1, 1))
        assert m.rank() == 2

    @pytest.mark.parametrize("tower,nb", [(T3, NB3), (T4, NB4)])
    def test_dimension_formula_exhaustive(self, tower, nb):
        for v in range(1, tower.r):
            lam = CheckElement(tower, v)
            assert len(code_from_lambda(lam)) == tower.n - b_lambda_matrix(lam, nb).rank()

    def test_rank_is_basis_invariant(self):
        bases = [NormalBasis.from_element(T4, a) for a in list(normal_elements(T4))[:2]]
        for v in range(1, 16):
            lam = CheckElement(T4, v)
            ranks = {b_lambda_matrix(lam, b).rank() for b in bases}
            assert len(ranks) == 1


class TestCosetDimensionBound:
    def test_lambda_one_tight(self):
        lam = CheckElement(T3, 1)
        assert coset_dimension_bound(lam) == 2  # s = 0, coset {0}
        assert len(code_from_lambda(lam)) == 2

    def test_primitive_gives_zero_bound(self):
        gamma = T3.primitive_element()
        assert coset_dimension_bound(CheckElement(T3, gamma.value)) == 0

    @pytest.mark.parametrize("tower", [T3, T4])
    def test_bound_below_dimension_exhaustive(self, tower):
        gamma = tower.primitive_element()
        for v in range(1, tower.r):
            lam = CheckElement(tower, v)
            assert coset_dimension_bound(lam, gamma) <= len(code_from_lambda(lam))


class TestVerifyEquivalence:
    def test_smallest_nontrivial(self):
        rep = verify_equivalence(P(GF2, 1, 1), 3, NB3)
        assert rep.passed
        ell = ell_from_generator(P(GF2, 1, 1), 3, T3)
        common = image_code_by_definition(ImageCodeSpec(ell, NB3))
        assert common == {(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)}

    def test_full_space(self):
        rep = verify_equivalence(P(GF2, 1), 4, NB4)
        assert rep.passed
        skipped = [a.id for a in rep.assertions if a.status == "skip"]
        assert "set:lambda=standard" in skipped  # theorem degree restriction

    def test_flagship(self):
        rep = verify_equivalence(P(GF2, 1, 1, 0, 1), 7, NB7)
        assert rep.passed
        assert all(a.status == "pass" for a in rep.assertions)

    def test_cap_skips_enumeration(self):
        rep = verify_equivalence(P(GF2, 1, 1, 0, 1), 7, NB7, cap=4)
        assert rep.passed  # skipped checks do not fail the report
        assert any(a.status == "skip" and "cap" in a.detail for a in rep.assertions)

    def test_report_document_shape(self):
        rep = verify_equivalence(P(GF2, 1, 1), 3, NB3)
        doc = rep.to_doc()
        assert doc["passed"] and doc["q"] == 2 and doc["n"] == 3
        assert {a["status"] for a in doc["assertions"]} <= {"pass", "fail", "skip"}
        assert all(line.startswith(("PASS", "FAIL", "SKIP")) for line in rep.lines())

    def test_wrong_field_rejected(self):
        with pytest.raises(ValueError):
            verify_equivalence(UnivariatePoly(T34.base, (1,)), 4, NB4)
