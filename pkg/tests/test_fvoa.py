from collections import Counter
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from framecodes import fvoa
from framecodes import reference as ref
from framecodes.codes import BinaryCode, SizeError
from framecodes.constructions import (ALPHA, BETA, GAMMA, H8_MARKINGS, M_STAR, golay24, hamming8,
                                      moonshine_c, moonshine_d)
from framecodes.fvoa import FormalSum, InvariantViolation, Sqrt2Scalar, parse_label
from framecodes.markings import smwe
from framecodes.z4codes import gamma_code, gamma_twisted

scalars = st.builds(Sqrt2Scalar, st.integers(-50, 50), st.integers(-6, 6))


def fs(*pairs):
    return FormalSum({parse_label(lab): c for lab, c in pairs})


def brute_ising(limit):
    """Coefficients of q^(s/2) in the Ising characters, from distinct-part partitions."""
    odd = list(range(1, limit + 1, 2))
    even_sz, odd_sz = Counter(), Counter()
    for k in range(len(odd) + 1):
        for parts in combinations(odd, k):
            s = sum(parts)
            if s <= limit:
                (even_sz if k % 2 == 0 else odd_sz)[s] += 1
    distinct = Counter()
    ints = list(range(1, limit // 2 + 1))
    for k in range(len(ints) + 1):
        for parts in combinations(ints, k):
            if 2 * sum(parts) <= limit:
                distinct[2 * sum(parts)] += 1
    return even_sz, odd_sz, distinct


@settings(max_examples=100)
@given(scalars, scalars, scalars)
def test_sqrt2_scalar_ring_laws(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert abs(float(x * y) - float(x) * float(y)) < 1e-6 * (1 + abs(float(x) * float(y)))
    if (x.e - y.e) % 2 == 0:
        assert abs(float(x + y) - (float(x) + float(y))) < 1e-9 * (1 + abs(float(x)) + abs(float(y)))
    elif x.m and y.m:
        with pytest.raises(InvariantViolation):
            x + y


def test_sqrt2_scalar_values():
    assert fvoa.INV_SQRT2 * fvoa.INV_SQRT2 == fvoa.HALF
    assert str(fvoa.INV_SQRT2) == "1/2*sqrt2"
    assert int(Sqrt2Scalar(3, -4)) == 12
    assert Sqrt2Scalar.coerce(Fraction(3, 4)) == Sqrt2Scalar(3, 4)
    with pytest.raises(ValueError):
        Sqrt2Scalar.coerce(Fraction(1, 3))


def test_r_entries():
    assert fvoa.r_entry(0, "+", 0) == fs(("00", 1))
    assert fvoa.r_entry(0, "+", 2) == fs(("h0", 1))
    assert fvoa.r_entry(0, "-", 0) == fs(("hh", 1))
    assert fvoa.r_entry(0, "+", 1) == fs(("ss", Fraction(1, 2)))
    assert fvoa.r_entry(0, "+", 3) == fvoa.r_entry(0, "+", 1)
    assert fvoa.r_entry(1, "-", 2) == FormalSum({parse_label("s0"): fvoa.INV_SQRT2})
    with pytest.raises(ValueError):
        fvoa.r_entry(2, "+", 0)


def test_n_entries():
    assert fvoa.n_entry(0, 0, "+", "+", (0, 0)) == fs(("0000", 1), ("hhhh", 1))
    assert fvoa.n_entry(0, 1, "+", "-", (0, 1)) == fs(("00ss", Fraction(1, 2)), ("hhss", Fraction(1, 2)))


def test_n_table_differences_are_one_column():
    bad = fvoa.n_table_mismatches()
    assert len(bad) == 8
    assert all(k[:2] == (0, 1) and k[4] in ((0, 1), (1, 0)) for k in bad)


def test_reference_and_derived_tables_give_the_same_decompositions():
    H = hamming8()
    for kind in fvoa.KINDS:
        for m in (ALPHA, BETA, GAMMA):
            assert fvoa.decompose_enumerate(kind, H, m) == fvoa.decompose_enumerate(kind, H, m, table="printed")


@pytest.mark.parametrize("kind", fvoa.KINDS)
@pytest.mark.parametrize("mname", ["alpha", "beta", "gamma"])
def test_enumeration_matches_closed_form(kind, mname):
    H, m = hamming8(), H8_MARKINGS[mname]
    got = fvoa.decompose_enumerate(kind, H, m)
    assert got.rank() == 16
    assert fvoa.weights_integral(got)
    assert fvoa.support_classes_consistent(got)
    assert fvoa.polynomial_of_formal_sum(got) == fvoa.decomposition_polynomial(kind, smwe(H, m), 8)


@pytest.mark.parametrize("mname", ["alpha", "beta", "gamma"])
def test_lattice_route_matches_code_route(mname):
    H, m = hamming8(), H8_MARKINGS[mname]
    pairs = {
        "untwisted": ("V_L", gamma_code(H, m, labeling="frame")),
        "twisted-lattice": ("V_L", gamma_twisted(H, m)),
        "twisted-voa": ("~V_L", gamma_code(H, m, labeling="frame")),
        "double-twist": ("~V_L", gamma_twisted(H, m)),
    }
    for kind, (lk, code) in pairs.items():
        assert fvoa.decompose_from_z4(lk, code) == fvoa.decompose_enumerate(kind, H, m)


def test_e8_origins():
    H = hamming8()
    for case, origins in ref.E8_ORIGINS.items():
        for kind, mname in origins:
            assert fvoa.decomposition_polynomial(kind, smwe(H, H8_MARKINGS[mname]), 8) == ref.poly(case)


def test_literal_double_twist_is_not_integral():
    with pytest.raises(InvariantViolation):
        fvoa.decompose_enumerate("double-twist", hamming8(), GAMMA, literal_n11=True)


def test_omega_details():
    got = fvoa.decompose_enumerate("double-twist", hamming8(), GAMMA)
    assert got.multiplicities()[(2,) * 16] == 8
    P = fvoa.polynomial_of_formal_sum(got)
    assert sum(cf for (i, j, k), cf in P.terms.items() if k == 8) == 3840
    assert P.evaluate((1, 0, 0)) == 1 and P.evaluate((1, 1, 0)) == 2 ** 11


def test_extract_codes_untwisted_alpha():
    got = fvoa.decompose_enumerate("untwisted", hamming8(), ALPHA)
    C, D = fvoa.extract_codes(got)
    # the all-1/16 label occurs (128 copies), so D is the repetition code
    assert len(C) == 2 ** 15 and D == BinaryCode.from_rows(["1" * 16])
    assert got.multiplicities()[(2,) * 16] == 128
    assert fvoa.max_plain_multiplicity(got) == 1
    assert all(ok for _, ok in fvoa.validate_cd(C, D, True))


def test_extract_codes_psi():
    got = fvoa.decompose_enumerate("double-twist", hamming8(), ALPHA)
    C, D = fvoa.extract_codes(got)
    assert len(C) == 2 ** 13
    assert all(ok for _, ok in fvoa.validate_cd(C, D, True))


def test_validate_cd():
    report = dict(fvoa.validate_cd(moonshine_c(), moonshine_d(), True))
    assert all(report.values())
    bad = dict(fvoa.validate_cd(BinaryCode.full(8), BinaryCode.zero(8), False))
    assert not bad["C even"] and bad["D inside dual of C"]
    assert "D equals dual of C" not in bad


def test_extract_codes_rejects_non_linear_support():
    with pytest.raises(InvariantViolation):
        fvoa.extract_codes(fs(("00", 1), ("h0", 1), ("0h", 1)))


def test_delta_code_with_full_sigma_has_multiplicity_two():
    got = fvoa.decompose_from_z4("V_L", [(0,), (1,), (2,), (3,)], 1)
    assert got.multiplicities()[(2, 2)] == 2


def test_enumeration_guard():
    with pytest.raises(SizeError):
        fvoa.decompose_enumerate("untwisted", golay24(), M_STAR)
    with pytest.raises(ValueError):
        fvoa.canonical_kind("sideways")


def test_ising_characters_against_partitions():
    ch0, chh, chs = fvoa.ising_characters(12)
    even_sz, odd_sz, distinct = brute_ising(12)
    for s in range(12):
        assert ch0[-1 + 24 * s] == even_sz[s]
        assert chh[-1 + 24 * s] == odd_sz[s]
        assert chs[2 + 24 * s] == distinct[s]


def test_ising_leading_terms():
    ch0, chh, chs = fvoa.ising_characters(6)
    assert ch0.terms()[:2] == [(Fraction(-1, 48), 1), (Fraction(95, 48), 1)]
    assert chh.terms()[0] == (Fraction(23, 48), 1)
    assert chs.terms()[0] == (Fraction(1, 24), 1)
    with pytest.raises(ValueError):
        fvoa.ising_characters(0)


def test_e8_graded_dimension():
    for case in ("Gamma", "Sigma", "Psi", "Theta", "Omega"):
        g = fvoa.graded_dimension(ref.poly(case), 16, 2)
        assert g[-16] == 1 and g[32] == 248


def test_moonshine_graded_dimension():
    P = fvoa.decomposition_polynomial("double-twist", smwe(golay24(), M_STAR), 24)
    assert P == ref.poly("moonshine")
    g = fvoa.graded_dimension(P, 48, 3)
    assert (g[-48], g[0], g[48]) == (1, 0, 196884)
    assert all(ok for _, ok in fvoa.modular_invariance_check(P, 48))


def test_leech_lattice_voa_graded_dimension():
    # untwisted Leech lattice VOA: 24 currents, no roots
    P = fvoa.decomposition_polynomial("twisted-lattice", smwe(golay24(), M_STAR), 24)
    g = fvoa.graded_dimension(P, 48, 3)
    assert (g[-48], g[0], g[48]) == (1, 24, 196884)


def test_conformal_weight():
    assert fvoa.conformal_weight(parse_label("hs0")) == Fraction(9, 16)
    assert fvoa.label_str((0, 1, 2)) == "0hs"
