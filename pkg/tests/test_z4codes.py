from collections import Counter
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from framecodes.codes import BinaryCode
from framecodes.constructions import ALPHA, BETA, GAMMA, M_STAR, e8_frame_codes, golay24, hamming8
from framecodes.markings import all_matchings, smwe
from framecodes.polys import HomPoly
from framecodes.z4codes import (ConstructionError, Z4Code, add, apply_monomial, euclidean_weight,
                                gamma_code, gamma_twisted, glue_word, inner, monomial_equivalence,
                                read_z4_text, rs_counts, sigma2, sigma2_generators, swe_from_smwe,
                                z4_predicates, z4_to_text)
from framecodes import reference as ref


def brute_span(rows, n):
    out = {(0,) * n}
    for r in rows:
        out = {tuple((w[i] + k * r[i]) % 4 for i in range(n)) for w in out for k in range(4)}
    return out


def swe_of(words, n):
    terms = Counter()
    for w in words:
        r, s = rs_counts(w)
        terms[(n - r - s, r, s)] += 1
    return HomPoly(3, n, dict(terms))


z4rows = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.tuples(*[st.integers(0, 3)] * n), max_size=4))


def test_euclidean_weights():
    assert euclidean_weight((1, 1, 1, 1)) == 4
    assert euclidean_weight((2, 2)) == 8
    assert euclidean_weight((3, 0, 2)) == 5
    assert rs_counts((1, 3, 2, 0)) == (2, 1)


def test_glue_word():
    assert glue_word(16) == (1, 0) * 8
    assert glue_word(8) == (1, 0, 1, 0, 1, 0, 3, 2)
    with pytest.raises(ValueError):
        glue_word(12)


def test_sigma2_swe():
    A, B, C = HomPoly.gens(3)
    assert sigma2(4).swe() == (A * A + C * C) ** 4
    assert sigma2(4, even=True).cardinality() == 8


@settings(max_examples=60, deadline=None)
@given(z4rows)
def test_span_against_brute_force(rows):
    if not rows:
        return
    n = len(rows[0])
    code = Z4Code.from_generators(rows, n)
    words = brute_span(rows, n)
    assert code.cardinality() == len(words)
    assert code.word_set() == words
    assert code.swe("enumerate") == swe_of(words, n)
    k1, k2 = code.type_counts()
    assert 4 ** k1 * 2 ** k2 == len(words)


@settings(max_examples=40, deadline=None)
@given(z4rows, st.data())
def test_membership_matches_span(rows, data):
    if not rows:
        return
    n = len(rows[0])
    code = Z4Code.from_generators(rows, n)
    words = brute_span(rows, n)
    w = data.draw(st.tuples(*[st.integers(0, 3)] * n))
    assert code.contains(w) == (w in words)


def test_hamming_gamma_codes_swe_and_size():
    H = hamming8()
    for name, m in (("alpha", ALPHA), ("beta", BETA), ("gamma", GAMMA)):
        code = gamma_code(H, m)
        assert code.cardinality() == 16 * 16
        assert code.swe("enumerate") == code.swe("transfer") == swe_of(code.word_set(via="span"), 8)
        assert code.swe() == swe_from_smwe(smwe(H, m), 8, False)


def test_twisted_swe_methods_agree():
    H = hamming8()
    for m in (ALPHA, BETA, GAMMA):
        code = gamma_twisted(H, m)
        assert code.cardinality() == 256
        assert code.swe("enumerate") == code.swe("transfer") == swe_from_smwe(smwe(H, m), 8, True)
        assert code.word_set() == code.word_set(via="span")


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 104))
def test_swe_from_smwe_all_h8_markings(idx):
    H = hamming8()
    m = all_matchings(8)[idx]
    assert gamma_code(H, m).swe() == swe_from_smwe(smwe(H, m), 8, False)
    assert gamma_twisted(H, m).swe("enumerate") == swe_from_smwe(smwe(H, m), 8, True)


def test_e8_codes_self_dual_and_even():
    A, B, C = HomPoly.gens(3)
    for name, code in e8_frame_codes().items():
        p = z4_predicates(code)
        assert p["self_annihilating"] and p["even"] and p["cardinality"] == 256
        W = code.swe()
        assert W == ref.poly(name)
        # symmetrized MacWilliams: a self-dual code is a fixed point
        rhs = W.compose([A + B.scale(2) + C, A - C, A - B.scale(2) + C]).scale(Fraction(1, 256))
        assert rhs == W


def test_hat_labeling_fails_closure():
    H = hamming8()
    gamma_twisted(H, ALPHA, labeling="hat")
    with pytest.raises(ConstructionError):
        gamma_twisted(H, GAMMA, labeling="hat")
    with pytest.raises(ConstructionError):
        gamma_twisted(golay24(), M_STAR, labeling="hat")


def test_monomial_equivalence():
    H = hamming8()
    for A, B in ((gamma_twisted(H, ALPHA), gamma_code(H, BETA)),
                 (gamma_twisted(H, BETA), gamma_code(H, GAMMA))):
        mono = monomial_equivalence(A, B)
        assert mono is not None
        assert {apply_monomial(w, *mono) for w in A.word_set()} == B.word_set()
    codes = e8_frame_codes()
    assert monomial_equivalence(codes["K8"], codes["O8"]) is None


def test_monomial_on_sigma2():
    perm = (1, 0, 3, 2)
    assert monomial_equivalence(sigma2(2), sigma2(2)) is not None
    assert apply_monomial((1, 2, 0, 3), perm, (1, -1, 1, -1)) == (2, 1, 1, 0)


def test_z4_file_roundtrip():
    code = gamma_twisted(hamming8(), BETA)
    again = read_z4_text(z4_to_text(code))
    assert again.cardinality() == 256
    assert all(again.contains(w) for w in code.generators)
    with pytest.raises(ValueError):
        read_z4_text("4 1 generator\n0004\n")


def test_z4_coset_file():
    files = {"h8.code": "8 4\n11110000\n11001100\n10101010\n11111111\n", "g.mark": "1 2\n3 5\n4 7\n6 8\n"}
    code = read_z4_text("8 0 coset\nh8.code\ng.mark\nsigma_even\n", files.__getitem__)
    assert code.swe() == ref.poly("O8")
    with pytest.raises(ValueError):
        read_z4_text("8 0 coset\nh8.code\ng.mark\nsigma_odd\n", files.__getitem__)


def test_leech_code():
    L = gamma_twisted(golay24(), M_STAR)
    assert L.cardinality() == 2 ** 24
    assert L.swe("transfer") == ref.poly("leech_swe")
    assert L.min_euclidean_weight() == 16
    assert all(L.contains(w) for w in sigma2_generators(12, True))
    assert not L.contains(sigma2_generators(12, False)[0])
    g = glue_word(24)
    assert L.contains(g) and euclidean_weight(g) == 16


def test_inner_products_of_leech_family():
    L = gamma_twisted(golay24(), M_STAR)
    fam = L.generators
    assert all(inner(u, v) == 0 for u in fam for v in fam)
    assert all(L.contains(add(u, v)) for u, v in product(fam[:6], fam[-6:]))


def test_length_checks():
    with pytest.raises(ValueError):
        gamma_code(BinaryCode.zero(6), ALPHA)
    with pytest.raises(ValueError):
        swe_from_smwe(HomPoly.gens(3)[0], 8, False)
