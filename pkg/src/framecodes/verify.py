"""Verification suites: each check compares a computed value with a reference value."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import fvoa, reference as ref
from .codes import BinaryCode
from .constructions import (ALPHA, BETA, GAMMA, H8_MARKINGS, M_STAR, e8_frame_codes, golay24,
                            hamming8, moonshine_c, moonshine_d, shortened_h64)
from .lattices import frame_quotient_code, lattice_predicates, same_code
from .markings import act_on_pairs, classify_orbits, cm_parameters, smwe
from .permgroups import code_automorphisms, moonshine_aut_subgroup
from .polys import HomPoly, cmat_pow, group_closure, invariant_dimension, rho_S, rho_T
from .z4codes import (apply_monomial, gamma_code, gamma_twisted, monomial_equivalence, sigma2_generators,
                      swe_from_smwe, z4_predicates)

SUITES = ("hamming", "e8", "golay", "leech", "moonshine", "appendix")


@dataclass
class Check:
    suite: str
    name: str
    expected: str
    computed: str
    passed: bool
    elapsed: float
    soft: bool = False

    def as_dict(self) -> dict:
        return {"suite": self.suite, "check": self.name, "expected": self.expected,
                "computed": self.computed, "pass": self.passed, "soft": self.soft,
                "seconds": round(self.elapsed, 3)}


class _Runner:
    def __init__(self, suite: str):
        self.suite = suite
        self.checks: list[Check] = []

    def check(self, name: str, expected, fn: Callable[[], object], soft: bool = False,
              compare: Callable[[object, object], bool] | None = None) -> object:
        t = time.perf_counter()
        try:
            got = fn()
            ok = compare(got, expected) if compare else got == expected
        except Exception as exc:  # a crashing check is a failed check
            got, ok = f"{type(exc).__name__}: {exc}", False
        self.checks.append(Check(self.suite, name, _short(expected), _short(got), bool(ok),
                                 time.perf_counter() - t, soft))
        return got


def _short(x, limit: int = 70) -> str:
    s = x.to_str() if isinstance(x, HomPoly) else str(x)
    return s if len(s) <= limit else s[: limit - 3] + "..."


def _eval(p: HomPoly, *vals):
    return p.evaluate(vals)


# ---------------------------------------------------------------------------


def suite_hamming(thorough: bool = False) -> list[Check]:
    r = _Runner("hamming")
    H = hamming8()
    aut = code_automorphisms(H)
    r.check("Aut(H8) order", 1344, aut.order)
    found = classify_orbits(H, aut)
    r.check("marking orbits", [7, 42, 56], lambda: sorted(o.orbit_size for o in found))
    info = {o.orbit_size: o for o in found}
    for name, (_, stab, size, _) in ref.HAMMING_ORBITS.items():
        o = info.get(size)
        r.check(f"{name} stabilizer", stab, lambda o=o: o.stabilizer_order if o else None)
        r.check(f"{name} smwe", ref.poly(name), lambda o=o: o.smwe if o else None)
        r.check(f"{name} representative in orbit", True,
                lambda o=o, m=H8_MARKINGS[name]: o is not None and any(
                    mk.zero_based() == m.zero_based() for mk in o.members))
    return r.checks


def suite_e8(thorough: bool = False) -> list[Check]:
    r = _Runner("e8")
    H = hamming8()
    codes = e8_frame_codes()
    origin = {"K8": (ALPHA, False), "K8'": (ALPHA, True), "L8": (BETA, True), "O8": (GAMMA, True)}
    for name, code in codes.items():
        m, tw = origin[name]
        r.check(f"swe {name} (enumeration)", ref.poly(name), lambda c=code: c.swe("enumerate"))
        r.check(f"swe {name} (smwe substitution)", ref.poly(name),
                lambda m=m, tw=tw: swe_from_smwe(smwe(H, m), 8, tw))
        r.check(f"{name} self-annihilating and even", (True, True, 256),
                lambda c=code: tuple(z4_predicates(c)[k] for k in ("self_annihilating", "even", "cardinality")))
        r.check(f"{name} equals lattice frame quotient", True,
                lambda c=code, m=m, tw=tw: same_code(c, frame_quotient_code(H, m, tw)))
    for lhs, rhs, label in ((gamma_twisted(H, ALPHA), gamma_code(H, BETA), "twisted(alpha) ~ beta"),
                            (gamma_twisted(H, BETA), gamma_code(H, GAMMA), "twisted(beta) ~ gamma")):
        def coincide(A=lhs, B=rhs):
            mono = monomial_equivalence(A, B)
            return mono is not None and {apply_monomial(w, *mono) for w in A.word_set()} == B.word_set()
        r.check(f"origin {label} (monomial image equals set)", True, coincide)
    r.check("four swe pairwise distinct", 4, lambda: len({c.swe().to_str() for c in codes.values()}))

    sizes = {"Gamma": 2 ** 15, "Sigma": 2 ** 14, "Psi": 2 ** 13, "Theta": 2 ** 12, "Omega": 2 ** 11}
    for case, origins in ref.E8_ORIGINS.items():
        for kind, mname in origins:
            r.check(f"{case} from {kind}/{mname}", ref.poly(case),
                    lambda k=kind, mn=mname: fvoa.decomposition_polynomial(k, smwe(H, H8_MARKINGS[mn]), 8))
        P = ref.poly(case)
        r.check(f"{case} P(1,0,0), P(1,1,0)", (1, sizes[case]), lambda P=P: (_eval(P, 1, 0, 0), _eval(P, 1, 1, 0)))
    omega = fvoa.decomposition_polynomial("double-twist", smwe(H, GAMMA), 8)
    r.check("Omega c^8 coefficient of P(1,1,c)", 3840,
            lambda: sum(cf for (i, j, k), cf in omega.terms.items() if k == 8))
    for kind in fvoa.KINDS:
        for mname, m in H8_MARKINGS.items():
            r.check(f"enumeration = closed form {kind}/{mname}", True,
                    lambda k=kind, m=m: fvoa.polynomial_of_formal_sum(fvoa.decompose_enumerate(k, H, m))
                    == fvoa.decomposition_polynomial(k, smwe(H, m), 8))
    S, T = rho_S(), rho_T()
    G = group_closure([S, cmat_pow(T, 3)])
    r.check("|<rho(S), rho(T)^3>|", 384, lambda: len(G))
    r.check("degree-16 invariants", 2, lambda: invariant_dimension(G, 16))
    for case in ref.E8_POLYS:
        r.check(f"{case} invariant under rho(S), rho(T)^3", True,
                lambda c=case: all(ok for _, ok in fvoa.modular_invariance_check(ref.poly(c), 16)))
        r.check(f"{case} dim V_1", 248, lambda c=case: fvoa.graded_dimension(ref.poly(c), 16, 2)[32])
    return r.checks


def suite_golay(thorough: bool = False) -> list[Check]:
    r = _Runner("golay")
    G = golay24()
    r.check("Golay [24,12,8]", (24, 12, 8), lambda: (G.n, G.dim, G.min_weight()))
    r.check("Golay self-dual", True, lambda: G.dual() == G)
    r.check("smwe(Golay, M*)", ref.poly("golay_smwe"), lambda: smwe(G, M_STAR))
    r.check("W_8 split", ref.GOLAY_CM, lambda: cm_parameters(G, M_STAR))
    r.check("octads", 759, lambda: sum(cm_parameters(G, M_STAR)))
    r.check("Aut(Golay) order", ref.M24_ORDER, lambda: code_automorphisms(G).order())
    return r.checks


def suite_leech(thorough: bool = False) -> list[Check]:
    r = _Runner("leech")
    G = golay24()
    L = gamma_twisted(G, M_STAR)
    target = ref.poly("leech_swe")
    r.check("swe (closed form)", target, lambda: swe_from_smwe(smwe(G, M_STAR), 24, True))
    r.check("swe (transfer product)", target, lambda: L.swe("transfer"))
    if thorough:
        r.check("swe (2^24 enumeration)", target, lambda: L.swe("enumerate"))
    r.check("self-annihilating, even, 2^24", (True, True, 2 ** 24),
            lambda: tuple(z4_predicates(L)[k] for k in ("self_annihilating", "even", "cardinality")))
    r.check("minimal Euclidean weight", 16, L.min_euclidean_weight)
    r.check("contains even part of Sigma_2^12", True,
            lambda: all(L.contains(w) for w in sigma2_generators(12, True)))
    r.check("lattice even, self-dual, min norm 4", (True, True, Fraction(4)),
            lambda: tuple(lattice_predicates(L).values()))
    r.check("equals lattice frame quotient", True, lambda: same_code(L, frame_quotient_code(G, M_STAR, True)))
    return r.checks


def suite_moonshine(thorough: bool = False) -> list[Check]:
    r = _Runner("moonshine")
    C, D = moonshine_c(), moonshine_d()
    r.check("dim C, dim D", (41, 7), lambda: (C.dim, D.dim))
    r.check("min weight of C", 4, lambda: _min_weight_via_checks(C, D))
    r.check("C equals shortened H64", True, lambda: C == shortened_h64())
    r.check("weights of D", ref.MOONSHINE_D_WEIGHTS, D.weight_distribution)
    r.check("validate_cd holomorphic", True, lambda: all(ok for _, ok in fvoa.validate_cd(C, D, True)))
    r.check("sphere bound", (True, False), lambda: (2 ** 41 * 48 <= 2 ** 47, 2 ** 42 * 48 <= 2 ** 47))
    P = fvoa.decomposition_polynomial("double-twist", smwe(golay24(), M_STAR), 24)
    r.check("decomposition polynomial", ref.poly("moonshine"), lambda: P)
    spots = {(44, 4, 0): 3300, (23, 1, 24): 184320, (24, 24, 0): 503871835740, (0, 0, 48): 131072}
    for e, v in spots.items():
        r.check(f"coefficient a^{e[0]}b^{e[1]}c^{e[2]}", v, lambda e=e: P.coeff(e))
    r.check("P(1,1,0)", 2 ** 41, lambda: _eval(P, 1, 1, 0))
    for name, ok in (("rho(S)", None), ("rho(T)", None)):
        r.check(f"invariant under {name}", True,
                lambda name=name: dict(fvoa.modular_invariance_check(P, 48))[name])
    r.check("q-series", [(-1, 1), (0, 0), (1, 196884)],
            lambda: (lambda g: [(-1, g[-48]), (0, g[0]), (1, g[48])])(fvoa.graded_dimension(P, 48, 3)))
    G2 = group_closure([rho_S(), rho_T()])
    r.check("|<rho(S), rho(T)>|", 1152, lambda: len(G2), soft=True)
    r.check("degree-48 invariants", 7, lambda: invariant_dimension(G2, 48), soft=True)
    return r.checks


def _min_weight_via_checks(C: BinaryCode, D: BinaryCode) -> int:
    # no weight 1 or 2 words: columns of the check matrix are nonzero and distinct
    cols = [sum(((row >> i) & 1) << k for k, row in enumerate(D.basis)) for i in range(C.n)]
    if 0 in cols:
        return 1
    if len(set(cols)) < len(cols):
        return 2
    # weight 3 impossible in an even code; weight 4: some pair-sum repeats
    sums = {}
    for i in range(C.n):
        for j in range(i + 1, C.n):
            s = cols[i] ^ cols[j]
            if s in sums and not set(sums[s]) & {i, j}:
                return 4
            sums.setdefault(s, (i, j))
    return 6


def suite_appendix(thorough: bool = False) -> list[Check]:
    r = _Runner("appendix")
    H = hamming8()
    r.check("H8 orbit sizes sum to 105", 105,
            lambda: sum(o.orbit_size for o in classify_orbits(H, code_automorphisms(H))))
    G = golay24()
    aut = code_automorphisms(G)
    key = M_STAR.zero_based()
    r.check("M* orbit", ref.M_STAR_ORBIT, lambda: len(aut.orbit(key, act_on_pairs)))
    r.check("M* stabilizer", ref.M_STAR_STABILIZER, lambda: aut.stabilizer(key, act_on_pairs).order())
    grp = moonshine_aut_subgroup()
    r.check("length-48 subgroup order", ref.MOONSHINE_AUT_ORDER, grp.order)
    r.check("subgroup preserves C and D", True,
            lambda: all(moonshine_c().is_preserved_by(g) and moonshine_d().is_preserved_by(g) for g in grp.gens))
    return r.checks


RUNNERS = {
    "hamming": suite_hamming, "e8": suite_e8, "golay": suite_golay,
    "leech": suite_leech, "moonshine": suite_moonshine, "appendix": suite_appendix,
}


def run_suite(name: str, thorough: bool = False) -> list[Check]:
    return RUNNERS[name](thorough)
