import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from framecodes.codes import BinaryCode
from framecodes.constructions import M_STAR, golay24, hamming8, moonshine_c, moonshine_d
from framecodes.markings import act_on_pairs
from framecodes.permgroups import (PermGroup, code_automorphisms, from_cycles, from_images, identity,
                                   inverse, mul, moonshine_aut_generators, moonshine_aut_subgroup,
                                   read_perm_file, write_perm_file)
from framecodes import reference as ref


def brute_closure(n, gens):
    seen = {identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = mul(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


perms = st.integers(1, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.permutations(range(n)).map(tuple), max_size=3)))


def test_mul_applies_left_first():
    p = from_cycles(3, [(1, 2)])
    q = from_cycles(3, [(2, 3)])
    # 1 -> 2 -> 3
    assert mul(p, q)[0] == 2
    assert mul(p, inverse(p)) == identity(3)


def test_from_images_rejects_non_permutation():
    with pytest.raises(ValueError):
        from_images([1, 1, 2])


@settings(max_examples=60, deadline=None)
@given(perms)
def test_order_and_membership_against_closure(case):
    n, gens = case
    G = PermGroup(n, gens)
    elems = brute_closure(n, gens)
    assert G.order() == len(elems)
    assert all(g in G for g in elems)
    outside = [p for p in itertools.permutations(range(n)) if p not in elems]
    assert not any(p in G for p in outside[:20])


@settings(max_examples=40, deadline=None)
@given(perms, st.integers(0, 5))
def test_orbit_stabilizer(case, pt):
    n, gens = case
    pt %= n
    G = PermGroup(n, gens)
    orb = G.orbit(pt)
    assert len(orb) * G.stabilizer_order(pt) == G.order()


def test_symmetric_group_of_zero_code():
    assert code_automorphisms(BinaryCode.zero(4)).order() == 24


def test_hamming_automorphisms():
    G = code_automorphisms(hamming8())
    assert G.order() == 1344
    assert all(hamming8().is_preserved_by(g) for g in G.gens)


def test_golay_automorphisms():
    G = code_automorphisms(golay24())
    assert G.order() == ref.M24_ORDER == 244823040


def test_generator_order_does_not_matter():
    gens = list(code_automorphisms(hamming8()).gens)
    random.Random(5).shuffle(gens)
    assert PermGroup(8, gens).order() == 1344


def test_m_star_orbit_and_stabilizer():
    G = code_automorphisms(golay24())
    key = M_STAR.zero_based()
    orb = G.orbit(key, act_on_pairs)
    assert len(orb) == 26565
    assert G.stabilizer(key, act_on_pairs).order() == 9216
    assert len(orb) * 9216 == G.order()


def test_moonshine_subgroup():
    G = moonshine_aut_subgroup()
    assert G.order() == ref.MOONSHINE_AUT_ORDER == 2 ** 12 * 20160 * 6
    C, D = moonshine_c(), moonshine_d()
    assert all(C.is_preserved_by(g) and D.is_preserved_by(g) for g in moonshine_aut_generators())


def test_translation_fixes_block_rows():
    t = moonshine_aut_generators()[0]
    D = moonshine_d()
    assert all(D.is_preserved_by(g) for g in (t, mul(t, t)))
    assert mul(t, t) == identity(48)


def test_perm_file_roundtrip():
    gens = list(code_automorphisms(hamming8()).gens)
    assert read_perm_file(write_perm_file(gens)) == gens


def test_orders_divide_factorial():
    assert math.factorial(24) % ref.M24_ORDER == 0
