"""Virasoro frame decompositions of code VOAs.

Labels are tuples over {0, 1, 2} standing for the weights 0, 1/2, 1/16
(dumped as the characters "0", "h", "s").  Pair values over Z4 use
0, 1, 2, 3 for the D1 cosets 0, 1/2, 1, -1/2.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

from .codes import BinaryCode, SizeError, parity_predicates, weight
from .lattices import coset_label
from .markings import Marking
from .polys import HomPoly, cmat_pow, rho_S, rho_T, substitute
from .z4codes import Z4Code

W0, WH, WS = 0, 1, 2
LABEL_CHARS = "0hs"
WEIGHTS = (Fraction(0), Fraction(1, 2), Fraction(1, 16))
SIGNS = ("+", "-")


class InvariantViolation(ArithmeticError):
    pass


# ---------------------------------------------------------------------------
# scalars m * 2^(-e/2)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Sqrt2Scalar:
    m: int
    e: int = 0

    def __post_init__(self):
        m, e = self.m, self.e
        if m == 0:
            e = 0
        else:
            while m % 2 == 0:
                m //= 2
                e -= 2
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "e", e)

    @classmethod
    def coerce(cls, x) -> "Sqrt2Scalar":
        if isinstance(x, Sqrt2Scalar):
            return x
        x = Fraction(x)
        den = x.denominator
        k = den.bit_length() - 1
        if den != 1 << k:
            raise ValueError(f"{x} is not dyadic")
        return cls(x.numerator, 2 * k)

    def __mul__(self, other):
        o = Sqrt2Scalar.coerce(other)
        return Sqrt2Scalar(self.m * o.m, self.e + o.e)

    __rmul__ = __mul__

    def __add__(self, other):
        o = Sqrt2Scalar.coerce(other)
        if self.m == 0:
            return o
        if o.m == 0:
            return self
        if (self.e - o.e) % 2:
            raise InvariantViolation("adding a rational to an irrational multiple of sqrt2")
        e = max(self.e, o.e)
        return Sqrt2Scalar((self.m << ((e - self.e) // 2)) + (o.m << ((e - o.e) // 2)), e)

    __radd__ = __add__

    def is_zero(self) -> bool:
        return self.m == 0

    def is_rational(self) -> bool:
        return self.e % 2 == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise InvariantViolation(f"{self} is irrational")
        return Fraction(self.m) / Fraction(2) ** (self.e // 2)

    def is_integer(self) -> bool:
        return self.is_rational() and self.e <= 0

    def __int__(self):
        if not self.is_integer():
            raise InvariantViolation(f"{self} is not an integer")
        return self.m << (-self.e // 2)

    def __float__(self):
        return self.m * 2.0 ** (-self.e / 2)

    def __str__(self):
        if self.is_rational():
            return str(self.to_fraction())
        return f"{Sqrt2Scalar(self.m, self.e + 1).to_fraction()}*sqrt2"


ONE = Sqrt2Scalar(1)
HALF = Sqrt2Scalar(1, 2)
INV_SQRT2 = Sqrt2Scalar(1, 1)


# ---------------------------------------------------------------------------
# formal sums
# ---------------------------------------------------------------------------


class FormalSum:
    """Sparse map from labels to Sqrt2Scalar multiplicities."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        self.terms: dict[tuple[int, ...], Sqrt2Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for lab, c in items:
            self.add_term(tuple(lab), c)

    @classmethod
    def single(cls, label, coeff=1) -> "FormalSum":
        return cls({tuple(label): coeff})

    def add_term(self, label: tuple[int, ...], c) -> None:
        c = Sqrt2Scalar.coerce(c)
        v = self.terms.get(label)
        v = c if v is None else v + c
        if v.is_zero():
            self.terms.pop(label, None)
        else:
            self.terms[label] = v

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = FormalSum(self.terms)
        for lab, c in other.terms.items():
            out.add_term(lab, c)
        return out

    def scale(self, s) -> "FormalSum":
        s = Sqrt2Scalar.coerce(s)
        return FormalSum({lab: c * s for lab, c in self.terms.items()})

    def tensor(self, other: "FormalSum") -> "FormalSum":
        out = FormalSum()
        for l1, c1 in self.terms.items():
            for l2, c2 in other.terms.items():
                out.add_term(l1 + l2, c1 * c2)
        return out

    def __eq__(self, other):
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def is_integral(self) -> bool:
        return all(c.is_integer() for c in self.terms.values())

    def multiplicities(self) -> dict[tuple[int, ...], int]:
        bad = [lab for lab, c in self.terms.items() if not c.is_integer() or c.m < 0]
        if bad:
            lab = bad[0]
            raise InvariantViolation(
                f"multiplicity {self.terms[lab]} of {label_str(lab)} is not a nonnegative integer")
        return {lab: int(c) for lab, c in self.terms.items()}

    def rank(self) -> int:
        lens = {len(lab) for lab in self.terms}
        if len(lens) > 1:
            raise ValueError("labels of different lengths")
        return lens.pop() if lens else 0

    def dump(self) -> list[tuple[str, str]]:
        return [(label_str(lab), str(c)) for lab, c in self]

    def __repr__(self):
        return "FormalSum(" + ", ".join(f"{c}*M({label_str(lab)})" for lab, c in self) + ")"


def label_str(label: Iterable[int]) -> str:
    return "".join(LABEL_CHARS[x] for x in label)


def parse_label(s: str) -> tuple[int, ...]:
    return tuple(LABEL_CHARS.index(ch) for ch in s)


def conformal_weight(label: Iterable[int]) -> Fraction:
    return sum((WEIGHTS[x] for x in label), Fraction(0))


# ---------------------------------------------------------------------------
# R and N tables
# ---------------------------------------------------------------------------

_R = {
    (0, "+"): {0: [(ONE, (W0, W0))], 2: [(ONE, (WH, W0))], 1: [(HALF, (WS, WS))]},
    (0, "-"): {0: [(ONE, (WH, WH))], 2: [(ONE, (W0, WH))], 1: [(HALF, (WS, WS))]},
    (1, "+"): {0: [(INV_SQRT2, (WS, WH))], 1: [(INV_SQRT2, (WH, WS))]},
    (1, "-"): {0: [(INV_SQRT2, (WS, W0))], 1: [(INV_SQRT2, (W0, WS))]},
}


def _check_index(a, sign):
    if a not in (0, 1) or sign not in SIGNS:
        raise ValueError("a must be 0 or 1 and the sign '+' or '-'")


@lru_cache(maxsize=None)
def r_entry(a: int, sign: str, z4val: int) -> FormalSum:
    _check_index(a, sign)
    if z4val not in (0, 1, 2, 3):
        raise ValueError("Z4 value must lie in 0..3")
    row = _R[(a, sign)]
    key = z4val if z4val in row else (1 if z4val == 3 else 0)
    return FormalSum({lab: c for c, lab in row[key]})


@lru_cache(maxsize=None)
def n_entry(a: int, b: int, alpha: str, beta: str, pair: tuple[int, int]) -> FormalSum:
    """Sum of R^a_(a',a'') tensor products over a'a'' = alpha at gamma^b_beta(pair)."""
    _check_index(a, alpha)
    x, y = coset_label(b, beta, pair)
    out = FormalSum()
    for s1 in SIGNS:
        s2 = s1 if alpha == "+" else ("-" if s1 == "+" else "+")
        out = out + r_entry(a, s1, x).tensor(r_entry(a, s2, y))
    return out


def printed_n_entry(a: int, b: int, alpha: str, beta: str, pair: tuple[int, int]) -> FormalSum:
    """N entry read from the 64-entry reference table."""
    from .reference import PRINTED_N_TABLE

    col = {(0, 0): "00", (1, 1): "11"}.get(tuple(pair), "odd")
    return FormalSum({parse_label(lab): Fraction(n, d) for n, d, lab in PRINTED_N_TABLE[(a, b, alpha, beta)][col]})


def n_table_mismatches() -> list[tuple]:
    """Entries where the derived N differs from the reference table."""
    out = []
    for a, b, al, be in product((0, 1), (0, 1), SIGNS, SIGNS):
        for pair in ((0, 0), (1, 1), (0, 1), (1, 0)):
            if n_entry(a, b, al, be, pair) != printed_n_entry(a, b, al, be, pair):
                out.append((a, b, al, be, pair))
    return out


# ---------------------------------------------------------------------------
# decompositions
# ---------------------------------------------------------------------------

KINDS = ("untwisted", "twisted-lattice", "twisted-voa", "double-twist")
KIND_ALIASES = {
    "V_LC": "untwisted", "V_L~C": "twisted-lattice", "~V_LC": "twisted-voa", "~V_L~C": "double-twist",
}


def canonical_kind(kind: str) -> str:
    k = KIND_ALIASES.get(kind, kind)
    if k not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    return k


def delta(c: int, m: Marking) -> int:
    return sum(((c >> i) & 1) ^ ((c >> j) & 1) for i, j in m.zero_based())


def _sign_mul(s: str, t: str) -> str:
    return "+" if s == t else "-"


@lru_cache(maxsize=None)
def _doubled_entry(a, b, mu, eps, pair, table) -> tuple[tuple[tuple[int, ...], int], ...]:
    """N entry with every coefficient doubled, as integer pairs (label, 2*coeff)."""
    out = []
    for lab, c in table(a, b, mu, eps, pair).terms.items():
        k = (c * 2).to_fraction()
        if k.denominator != 1:
            raise InvariantViolation("N entry coefficient is not in (1/2)Z")
        out.append((lab, int(k)))
    return tuple(out)


def _pair_dp(a: int, b: int, c: int, m: Marking, table) -> dict[tuple[str, str], FormalSum]:
    """Sum of N^{ab}_{mu,eps}(c) over mu, eps grouped by (prod mu, prod eps)."""
    states: dict = {("+", "+"): {(): 1}}
    for i, j in m.zero_based():
        pair = ((c >> i) & 1, (c >> j) & 1)
        new: dict = defaultdict(lambda: defaultdict(int))
        for (pm, pe), acc in states.items():
            for mu, eps in product(SIGNS, SIGNS):
                ent = _doubled_entry(a, b, mu, eps, pair, table)
                tgt = new[(_sign_mul(pm, mu), _sign_mul(pe, eps))]
                for l1, c1 in acc.items():
                    for l2, c2 in ent:
                        tgt[l1 + l2] += c1 * c2
        states = new
    scale = Sqrt2Scalar(1, 2 * len(m.pairs))
    return {k: FormalSum({lab: Sqrt2Scalar(v) * scale for lab, v in acc.items()})
            for k, acc in states.items()}


def _select(dp, mu=None, eps=None) -> FormalSum:
    out = FormalSum()
    for (pm, pe), fs in dp.items():
        if (mu is None or pm == mu) and (eps is None or pe == eps):
            out = out + fs
    return out


def decompose_enumerate(kind: str, C: BinaryCode, m: Marking, table: str = "derived",
                        literal_n11: bool = False) -> FormalSum:
    """Expand the four code-VOA decompositions term by term (d <= 8).

    In the double twist the N^11 summand runs over prod mu = (-1)^(d/8) and
    all eps (N^11 does not depend on eps, so the factor 1/2 absorbs half of
    the eps sum).  ``literal_n11`` also imposes prod eps = (-1)^(d/8), which
    loses half of that summand and in general leaves fractional multiplicities.
    """
    kind = canonical_kind(kind)
    if C.n != m.d:
        raise ValueError("length mismatch between code and marking")
    if C.n > 8:
        raise SizeError("enumeration is limited to d <= 8; use decomposition_polynomial")
    if C.n % 8:
        raise ValueError("length must be a multiple of 8")
    if not parity_predicates(C)["is_doubly_even"]:
        raise ValueError("code must be doubly-even")
    if table not in ("derived", "printed"):
        raise ValueError("table must be 'derived' or 'printed'")
    tab = n_entry if table == "derived" else printed_n_entry
    s = "+" if (C.n // 8) % 2 == 0 else "-"
    total = FormalSum()
    for c in C.codewords():
        dp00 = _pair_dp(0, 0, c, m, tab)
        if kind == "untwisted":
            total = total + _select(dp00)
            continue
        even = delta(c, m) == 0
        if kind == "twisted-lattice":
            total = total + (_select(dp00, eps="+") if even else _select(dp00).scale(HALF))
            total = total + _select(_pair_dp(0, 1, c, m, tab), eps=s)
        elif kind == "twisted-voa":
            total = total + (_select(dp00, mu="+") if even else _select(dp00).scale(HALF))
            total = total + _select(_pair_dp(1, 0, c, m, tab), mu=s)
        else:
            total = total + (_select(dp00, mu="+", eps="+") if even
                             else _select(dp00).scale(Fraction(1, 4)))
            tw = (_select(_pair_dp(0, 1, c, m, tab), eps=s)
                  + _select(_pair_dp(1, 0, c, m, tab), mu=s)
                  + _select(_pair_dp(1, 1, c, m, tab), mu=s, eps=s if literal_n11 else None))
            total = total + tw.scale(HALF)
    total.multiplicities()
    return total


def decompose_from_z4(kind: str, delta_code: Z4Code | Iterable, n: int | None = None) -> FormalSum:
    """Decomposition of V_L ("V_L" / "untwisted") or its twisted orbifold
    ("~V_L" / "twisted") for the lattice with frame quotient ``delta_code``."""
    if kind in ("V_L", "untwisted"):
        twisted = False
    elif kind in ("~V_L", "twisted"):
        twisted = True
    else:
        raise ValueError("kind must be 'V_L' or '~V_L'")
    if isinstance(delta_code, Z4Code):
        n = delta_code.n
        words = delta_code.word_set() if n <= 8 else None
    else:
        words = {tuple(w) for w in delta_code}
        n = n if n is not None else len(next(iter(words)))
    if n > 8 or words is None:
        raise SizeError("enumeration is limited to length <= 8")
    s = "+" if (n // 8) % 2 == 0 else "-"
    # R^0 coefficients doubled and R^1 coefficients times sqrt2 are integers
    unit = {0: Sqrt2Scalar(1, 2 * n), 1: Sqrt2Scalar(1, n)}
    lift = {0: Sqrt2Scalar(2), 1: Sqrt2Scalar(1, -1)}
    branches = [(0, "+"), (0, "-")] if not twisted else [(0, "+"), (1, s)]
    acc_total: dict = defaultdict(int)
    for a, want in branches:
        ent = {(mu, x): [(lab, int(c * lift[a])) for lab, c in r_entry(a, mu, x).terms.items()]
               for mu in SIGNS for x in range(4)}
        part: dict = defaultdict(int)
        for g in words:
            states: dict = {"+": {(): 1}}
            for x in g:
                new: dict = defaultdict(lambda: defaultdict(int))
                for pm, acc in states.items():
                    for mu in SIGNS:
                        tgt = new[_sign_mul(pm, mu)]
                        for l2, c2 in ent[(mu, x)]:
                            for l1, c1 in acc.items():
                                tgt[l1 + l2] += c1 * c2
                states = new
            for lab, v in states.get(want, {}).items():
                part[lab] += v
        for lab, v in part.items():
            acc_total[(a, lab)] += v
    total = FormalSum()
    for (a, lab), v in acc_total.items():
        total.add_term(lab, Sqrt2Scalar(v) * unit[a])
    return total


# ---------------------------------------------------------------------------
# decomposition polynomials
# ---------------------------------------------------------------------------


def polynomial_of_formal_sum(fs: FormalSum, r: int | None = None) -> HomPoly:
    mult = fs.multiplicities()
    r = fs.rank() if r is None else r
    out = HomPoly(3, r)
    for lab, k in mult.items():
        if len(lab) != r:
            raise ValueError("label length differs from r")
        out._add_term((lab.count(W0), lab.count(WH), lab.count(WS)), k)
    return out


def _abc():
    return HomPoly.gens(3)


def substitution_polys() -> tuple[HomPoly, HomPoly, HomPoly]:
    a, b, c = _abc()
    X = a ** 4 + (a * a * b * b).scale(6) + b ** 4
    Y = (c ** 4).scale(2)
    Z = (a ** 3 * b).scale(4) + (a * b ** 3).scale(4)
    return X, Y, Z


def decomposition_polynomial(kind: str, smwe: HomPoly, d: int) -> HomPoly:
    """Closed-form decomposition polynomial from the marked weight enumerator."""
    kind = canonical_kind(kind)
    if d % 8 or d <= 0:
        raise ValueError("d must be a positive multiple of 8")
    if smwe.nvars != 3 or smwe.degree != d // 2:
        raise ValueError(f"smwe must be trivariate of degree {d // 2}")
    a, b, c = _abc()
    base = smwe.compose(list(substitution_polys()))
    if kind == "untwisted":
        return base
    E = (a ** 4 - (a * a * b * b).scale(2) + b ** 4) ** (d // 2)
    sign = -1 if (d // 8) % 2 else 1
    F = ((a + b) ** d + ((a - b) ** d).scale(sign)) * (c ** d)
    F = F.scale(2 ** (d // 2))
    if kind in ("twisted-lattice", "twisted-voa"):
        return (E + base + F).scale(Fraction(1, 2))
    return (E.scale(3) + base + F.scale(3)).scale(Fraction(1, 4))


# ---------------------------------------------------------------------------
# codes C and D of a decomposition
# ---------------------------------------------------------------------------


def _linear_code(words: set[int], r: int, what: str) -> BinaryCode:
    code = BinaryCode(r, words)
    if len(code) != len(words):
        raise InvariantViolation(f"the {what} support set is not closed under addition")
    return code


def extract_codes(fs: FormalSum) -> tuple[BinaryCode, BinaryCode]:
    mult = fs.multiplicities()
    r = fs.rank()
    cw, dw = set(), set()
    for lab in mult:
        if WS in lab:
            dw.add(sum(1 << i for i, x in enumerate(lab) if x == WS))
        else:
            cw.add(sum(1 << i for i, x in enumerate(lab) if x == WH))
    dw.add(0)
    return _linear_code(cw, r, "C"), _linear_code(dw, r, "D")


def validate_cd(C: BinaryCode, D: BinaryCode, holomorphic: bool) -> list[tuple[str, bool]]:
    if C.n != D.n:
        raise ValueError("length mismatch between C and D")
    report = [
        ("C even", parity_predicates(C)["is_even"]),
        ("D weights divisible by 8", all(weight(w) % 8 == 0 for w in D.basis)
         and all(k % 8 == 0 for k in D.weight_distribution())),
        ("D inside dual of C", D.is_subcode_of(C.dual())),
    ]
    if holomorphic:
        report.append(("D equals dual of C", D == C.dual()))
    return report


def max_plain_multiplicity(fs: FormalSum) -> int:
    """Largest multiplicity among labels without a 1/16 entry."""
    mult = fs.multiplicities()
    return max((k for lab, k in mult.items() if WS not in lab), default=0)


def support_classes_consistent(fs: FormalSum) -> bool:
    """All labels with the same 1/16 positions share one multiplicity."""
    seen: dict[tuple, int] = {}
    for lab, k in fs.multiplicities().items():
        key = tuple(i for i, x in enumerate(lab) if x == WS)
        if seen.setdefault(key, k) != k:
            return False
    return True


def weights_integral(fs: FormalSum) -> bool:
    return all(conformal_weight(lab).denominator == 1 for lab in fs.terms)


# ---------------------------------------------------------------------------
# characters; exponents in units of q^(1/48)
# ---------------------------------------------------------------------------


class QSeries:
    """Truncated Laurent series in q^(1/48): coefficients known below ``prec``."""

    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs: Mapping[int, int], prec: int):
        self.coeffs = {e: c for e, c in coeffs.items() if c and e < prec}
        self.prec = prec

    def valuation(self) -> int:
        return min(self.coeffs, default=self.prec)

    def __add__(self, other: "QSeries") -> "QSeries":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return QSeries(out, min(self.prec, other.prec))

    def __mul__(self, other: "QSeries") -> "QSeries":
        prec = min(self.prec + other.valuation(), other.prec + self.valuation())
        out: dict[int, int] = defaultdict(int)
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                if e1 + e2 < prec:
                    out[e1 + e2] += c1 * c2
        return QSeries(out, prec)

    def scale(self, k: int) -> "QSeries":
        return QSeries({e: c * k for e, c in self.coeffs.items()}, self.prec)

    def __getitem__(self, e: int) -> int:
        if e >= self.prec:
            raise IndexError(f"exponent {e}/48 beyond precision {self.prec}/48")
        return self.coeffs.get(e, 0)

    def terms(self) -> list[tuple[Fraction, int]]:
        return [(Fraction(e, 48), self.coeffs[e]) for e in sorted(self.coeffs)]

    @classmethod
    def one(cls, prec: int) -> "QSeries":
        return cls({0: 1}, prec)


def _product(factors_exps: Iterable[int], sign: int, prec: int) -> dict[int, int]:
    poly = {0: 1}
    for e in factors_exps:
        new = dict(poly)
        for k, v in poly.items():
            if k + e < prec:
                new[k + e] = new.get(k + e, 0) + sign * v
        poly = new
    return poly


def ising_characters(n_terms: int) -> tuple[QSeries, QSeries, QSeries]:
    """Characters of the c = 1/2 modules of weight 0, 1/2, 1/16.

    Each series is correct below q^(n_terms/2) relative to q^(-1/48).
    """
    if not 1 <= n_terms <= 200:
        raise ValueError("n_terms must lie in 1..200")
    rel = 24 * n_terms
    half = [48 * n - 24 for n in range(1, n_terms + 1)]
    plus = _product(half, 1, rel)
    minus = _product(half, -1, rel)
    ch0 = {e - 1: (plus.get(e, 0) + minus.get(e, 0)) // 2 for e in plus}
    chh = {e - 1: (plus.get(e, 0) - minus.get(e, 0)) // 2 for e in plus}
    whole = _product([48 * n for n in range(1, n_terms + 1)], 1, rel)
    chs = {e + 2: v for e, v in whole.items()}
    return QSeries(ch0, rel - 1), QSeries(chh, rel - 1), QSeries(chs, rel + 2)


def graded_dimension(P: HomPoly, r: int | None = None, n_terms: int = 3) -> QSeries:
    """Sum of A_ijk ch0^i chh^j chs^k, exact for the first n_terms integral q-powers."""
    r = P.degree if r is None else r
    if P.nvars != 3 or P.degree != r:
        raise ValueError(f"P must be trivariate of degree {r}")
    need = 48 * n_terms
    ch = ising_characters(2 * n_terms + 1)
    lows = (-1, 23, 2)
    # widen the precision so every product is exact up to valuation + need
    chars = []
    for s, low in zip(ch, lows):
        chars.append(QSeries(s.coeffs, min(s.prec, low + need)))
    powers = [[QSeries.one(need)] for _ in range(3)]

    def power(v: int, k: int) -> QSeries:
        lst = powers[v]
        while len(lst) <= k:
            lst.append(lst[-1] * chars[v])
        return lst[k]

    base = -r
    total = QSeries({}, base + need)
    for (i, j, k), coeff in P.terms.items():
        if Fraction(coeff).denominator != 1:
            raise InvariantViolation("P has non-integral coefficients")
        term = power(0, i) * power(1, j) * power(2, k)
        total = total + QSeries({e: c * int(coeff) for e, c in term.coeffs.items()}, base + need)
    return total


def modular_invariance_check(P: HomPoly, r: int | None = None) -> list[tuple[str, bool]]:
    r = P.degree if r is None else r
    if P.degree != r:
        raise ValueError("degree mismatch")
    report = [
        ("rho(S)", substitute(P, rho_S()) == P),
        ("rho(T)^3", substitute(P, cmat_pow(rho_T(), 3)) == P),
    ]
    if r % 48 == 0:
        report.append(("rho(T)", substitute(P, rho_T()) == P))
    return report
