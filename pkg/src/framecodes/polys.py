"""Exact homogeneous polynomials and the 48th cyclotomic field.

Coefficients are ints, Fractions, or Cyclo48 elements.  Cyclo48 values
that happen to be rational are normalized back to Fraction/int so that
equality of polynomials never depends on how a coefficient was reached.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

# ---------------------------------------------------------------------------
# Q(zeta_48) = Q[x]/(x^16 - x^8 + 1)
# ---------------------------------------------------------------------------

_DIM = 16


def _reduce(c: list[int]) -> list[int]:
    # x^16 = x^8 - 1
    for t in range(len(c) - 1, _DIM - 1, -1):
        v = c[t]
        if v:
            c[t - 8] += v
            c[t - 16] -= v
    return c[:_DIM] + [0] * max(0, _DIM - len(c))


class Cyclo48:
    """Element of Q(zeta) with zeta a primitive 48th root of unity.

    Stored as an integer numerator vector over the power basis
    1, zeta, ..., zeta^15 together with a positive common denominator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence[int], den: int = 1):
        num = list(num)
        if len(num) != _DIM:
            num = _reduce(num + [0] * max(0, _DIM - len(num)))
        if den <= 0:
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            num = [-v for v in num]
            den = -den
        g = den
        for v in num:
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            num = [v // g for v in num]
            den //= g
        self.num = tuple(num)
        self.den = den

    # constructors -------------------------------------------------------
    @classmethod
    def from_rational(cls, q) -> "Cyclo48":
        q = Fraction(q)
        return cls([q.numerator] + [0] * (_DIM - 1), q.denominator)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "Cyclo48":
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for f in fr:
            den = lcm(den, f.denominator)
        return cls([int(f * den) for f in fr], den)

    @classmethod
    def zeta(cls, k: int = 1) -> "Cyclo48":
        k %= 48
        c = [0] * (k + 1)
        c[k] = 1
        return cls(_reduce(c))

    @classmethod
    def sqrt2(cls) -> "Cyclo48":
        # zeta^6 + zeta^-6 = 2 cos(pi/4)
        return cls.zeta(6) + cls.zeta(42)

    @classmethod
    def coerce(cls, x) -> "Cyclo48":
        if isinstance(x, Cyclo48):
            return x
        return cls.from_rational(x)

    # predicates / conversions -------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element")
        return Fraction(self.num[0], self.den)

    def coeffs(self) -> list[Fraction]:
        return [Fraction(v, self.den) for v in self.num]

    def sqrt2_parts(self):
        """Return (r, s) with self = r + s*sqrt2 if self lies in Q(sqrt2), else None."""
        n = self.num
        s = n[6]
        expect = [0] * _DIM
        expect[0] = n[0]
        expect[2] += s
        expect[6] += s
        expect[10] -= s
        if list(n) != expect:
            return None
        return Fraction(n[0], self.den), Fraction(s, self.den)

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / 48)
        return sum(v * z**i for i, v in enumerate(self.num)) / self.den

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Cyclo48):
            if isinstance(other, (int, Fraction)):
                other = Cyclo48.from_rational(other)
            else:
                return NotImplemented
        d = lcm(self.den, other.den)
        a, b = d // self.den, d // other.den
        return Cyclo48([x * a + y * b for x, y in zip(self.num, other.num)], d)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo48([-v for v in self.num], self.den)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Cyclo48([v * q.numerator for v in self.num], self.den * q.denominator)
        if not isinstance(other, Cyclo48):
            return NotImplemented
        acc = [0] * (2 * _DIM - 1)
        bn = [(j, w) for j, w in enumerate(other.num) if w]
        for i, v in enumerate(self.num):
            if v:
                for j, w in bn:
                    acc[i + j] += v * w
        return Cyclo48(_reduce(acc), self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = Cyclo48.from_rational(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Cyclo48):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.num, self.den))

    def __repr__(self):
        if self.is_rational():
            return f"Cyclo48({self.to_fraction()})"
        parts = []
        for i, v in enumerate(self.num):
            if v:
                parts.append(f"{v}*z^{i}" if i else f"{v}")
        body = " + ".join(parts)
        return f"Cyclo48(({body})/{self.den})" if self.den != 1 else f"Cyclo48({body})"


def normalize_coeff(c):
    """Collapse rational Cyclo48 and integral Fractions to the simplest type."""
    if isinstance(c, Cyclo48):
        if not c.is_rational():
            return c
        c = c.to_fraction()
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _is_zero(c) -> bool:
    if isinstance(c, Cyclo48):
        return c.is_zero()
    return c == 0


# ---------------------------------------------------------------------------
# Homogeneous polynomials
# ---------------------------------------------------------------------------

_DENSE_THRESHOLD = 4000


class HomPoly:
    """Homogeneous polynomial stored as {exponent tuple: coefficient}."""

    __slots__ = ("nvars", "degree", "terms")

    def __init__(self, nvars: int, degree: int, terms=None):
        self.nvars = nvars
        self.degree = degree
        self.terms: dict[tuple[int, ...], object] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                self._add_term(tuple(e), c)

    def _add_term(self, e: tuple[int, ...], c) -> None:
        if len(e) != self.nvars or sum(e) != self.degree or min(e) < 0:
            raise ValueError(f"exponent {e} does not fit degree {self.degree} in {self.nvars} variables")
        if e in self.terms:
            c = self.terms[e] + c
        c = normalize_coeff(c)
        if _is_zero(c):
            self.terms.pop(e, None)
        else:
            self.terms[e] = c

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, nvars: int, degree: int) -> "HomPoly":
        return cls(nvars, degree)

    @classmethod
    def constant(cls, nvars: int, value=1) -> "HomPoly":
        return cls(nvars, 0, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "HomPoly":
        exps = tuple(exps)
        return cls(len(exps), sum(exps), {exps: coeff})

    @classmethod
    def gens(cls, nvars: int) -> list["HomPoly"]:
        out = []
        for i in range(nvars):
            e = [0] * nvars
            e[i] = 1
            out.append(cls.monomial(e))
        return out

    # basic queries ------------------------------------------------------
    def coeff(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def copy(self) -> "HomPoly":
        p = HomPoly(self.nvars, self.degree)
        p.terms = dict(self.terms)
        return p

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(), reverse=True))

    def __eq__(self, other):
        if isinstance(other, HomPoly):
            if self.nvars != other.nvars:
                return False
            if not self.terms and not other.terms:
                return True
            return self.degree == other.degree and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, self.degree, frozenset(self.terms.items())))

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "HomPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        self._check(other)
        if not self.terms:
            return other.copy()
        out = self.copy()
        for e, c in other.terms.items():
            out._add_term(e, c)
        return out

    def __neg__(self):
        return HomPoly(self.nvars, self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "HomPoly":
        return HomPoly(self.nvars, self.degree, {e: c * s for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HomPoly):
            return _poly_mul(self, other)
        if isinstance(other, (int, Fraction, Cyclo48)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo48)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int) -> "HomPoly":
        if e < 0:
            raise ValueError("negative power")
        result = HomPoly.constant(self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # evaluation / composition -------------------------------------------
    def __call__(self, *values):
        return self.evaluate(values)

    def evaluate(self, values: Sequence):
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = 0
        cache: dict[tuple[int, int], object] = {}
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = values[i] ** k
                    t = t * cache[key]
            total = total + t
        return normalize_coeff(total) if isinstance(total, (Fraction, Cyclo48)) else total

    def compose(self, subs: Sequence["HomPoly"]) -> "HomPoly":
        """Substitute polynomials for the variables (all of one common degree)."""
        if len(subs) != self.nvars:
            raise ValueError("wrong number of substitutions")
        m = subs[0].nvars
        sdeg = {s.degree for s in subs if s.terms}
        if len(sdeg) > 1:
            raise ValueError("substituted polynomials must share a degree")
        unit = sdeg.pop() if sdeg else 0
        pw: list[list[HomPoly]] = [[HomPoly.constant(m)] for _ in subs]

        def power(i, k):
            while len(pw[i]) <= k:
                pw[i].append(pw[i][-1] * subs[i])
            return pw[i][k]

        out = HomPoly(m, self.degree * unit)
        for e, c in sorted(self.terms.items()):
            t = None
            for i, k in enumerate(e):
                if k:
                    f = power(i, k)
                    t = f if t is None else t * f
            if t is None:
                t = HomPoly.constant(m)
            out = out + t.scale(c)
        return out

    # formatting ---------------------------------------------------------
    def to_str(self, names: Sequence[str] | None = None) -> str:
        names = names or "abcdefgh"[: self.nvars]
        if not self.terms:
            return "0"
        parts = []
        for e, c in self:
            mono = "*".join(f"{n}^{k}" if k > 1 else n for n, k in zip(names, e) if k)
            if mono:
                parts.append(f"{c}*{mono}" if c != 1 else mono)
            else:
                parts.append(str(c))
        return " + ".join(parts)

    def __repr__(self):
        return f"HomPoly({self.to_str()})"

    def to_json(self, names: Sequence[str]) -> dict:
        return {
            "vars": list(names),
            "degree": self.degree,
            "terms": [{"exp": list(e), "coeff": _coeff_str(c)} for e, c in self],
        }

    @classmethod
    def from_json(cls, obj) -> "HomPoly":
        if isinstance(obj, str):
            obj = json.loads(obj)
        nv = len(obj["vars"])
        terms = [(tuple(t["exp"]), _parse_coeff(t["coeff"])) for t in obj["terms"]]
        degree = obj.get("degree")
        if degree is None:
            degree = sum(terms[0][0]) if terms else 0
        return cls(nv, degree, terms)


def _coeff_str(c) -> str:
    if isinstance(c, Cyclo48):
        return "zeta48:" + ",".join(str(v) for v in c.coeffs())
    return str(c)


def _parse_coeff(s: str):
    if s.startswith("zeta48:"):
        return normalize_coeff(Cyclo48.from_coeffs([Fraction(x) for x in s[7:].split(",")]))
    return normalize_coeff(Fraction(s))


def _poly_mul(p: HomPoly, q: HomPoly) -> HomPoly:
    if p.nvars != q.nvars:
        raise ValueError("variable count mismatch")
    n = p.nvars
    deg = p.degree + q.degree
    if not p.terms or not q.terms:
        return HomPoly(n, deg)
    if len(p.terms) < len(q.terms):
        p, q = q, p
    if n < 2 or len(p.terms) * len(q.terms) <= _DENSE_THRESHOLD:
        acc: dict[tuple[int, ...], object] = {}
        for e1, c1 in p.terms.items():
            for e2, c2 in q.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc[e] + c1 * c2 if e in acc else c1 * c2
        return HomPoly(n, deg, acc)
    # dense path: p as an object array over the first n-1 exponents,
    # shifted and scaled once per term of q
    side = p.degree + 1
    A = np.zeros((side,) * (n - 1), dtype=object)
    for e, c in p.terms.items():
        A[e[:-1]] = c
    out = np.zeros((deg + 1,) * (n - 1), dtype=object)
    for e, c in q.terms.items():
        sl = tuple(slice(k, k + side) for k in e[:-1])
        out[sl] += A * c
    res = HomPoly(n, deg)
    for idx in zip(*np.nonzero(out != 0)):
        idx = tuple(int(i) for i in idx)
        c = normalize_coeff(out[idx])
        if not _is_zero(c):
            res.terms[idx + (deg - sum(idx),)] = c
    return res


# ---------------------------------------------------------------------------
# 3x3 cyclotomic matrices
# ---------------------------------------------------------------------------

CycMatrix3 = tuple  # 9-tuple of Cyclo48, row-major


def cmat(rows) -> CycMatrix3:
    return tuple(Cyclo48.coerce(x) for row in rows for x in row)


def cmat_identity() -> CycMatrix3:
    return cmat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def cmat_mul(A: CycMatrix3, B: CycMatrix3) -> CycMatrix3:
    out = []
    for i in range(3):
        for j in range(3):
            s = Cyclo48.from_rational(0)
            for k in range(3):
                a = A[3 * i + k]
                b = B[3 * k + j]
                if not a.is_zero() and not b.is_zero():
                    s = s + a * b
            out.append(s)
    return tuple(out)


def cmat_pow(A: CycMatrix3, e: int) -> CycMatrix3:
    result = cmat_identity()
    while e:
        if e & 1:
            result = cmat_mul(result, A)
        A = cmat_mul(A, A)
        e >>= 1
    return result


def cmat_entry(A: CycMatrix3, i: int, j: int) -> Cyclo48:
    """1-based entry access."""
    return A[3 * (i - 1) + (j - 1)]


def rho_S() -> CycMatrix3:
    h = Fraction(1, 2)
    r = Cyclo48.sqrt2() * h  # 1/sqrt2
    return cmat([[h, h, r], [h, h, -r], [r, -r, 0]])


def rho_T() -> CycMatrix3:
    s = Cyclo48.zeta(-1)
    z = Cyclo48.from_rational(0)
    return (s, z, z, z, -s, z, z, z, s * Cyclo48.zeta(3))


def group_closure(gens: Iterable[CycMatrix3], cap: int = 100000) -> list[CycMatrix3]:
    """All elements of the finite group generated by ``gens`` (BFS)."""
    gens = list(gens)
    ident = cmat_identity()
    seen = {ident}
    order = [ident]
    i = 0
    while i < len(order):
        g = order[i]
        i += 1
        for s in gens:
            h = cmat_mul(g, s)
            if h not in seen:
                seen.add(h)
                order.append(h)
                if len(order) > cap:
                    raise OverflowError(f"group closure exceeded cap {cap}")
    return order


def _char_coeffs(g: CycMatrix3):
    a, b, c, d, e, f, gg, h, i = g
    e1 = a + e + i
    e2 = (a * e - b * d) + (a * i - c * gg) + (e * i - f * h)
    e3 = a * (e * i - f * h) - b * (d * i - f * gg) + c * (d * h - e * gg)
    return e1, e2, e3


def invariant_dimension(group: Sequence[CycMatrix3], degree: int) -> int:
    """Dimension of the degree-n invariants by Molien averaging.

    For each g the coefficient h_n of 1/det(1 - g t) follows the recurrence
    h_n = e1 h_{n-1} - e2 h_{n-2} + e3 h_{n-3} in the elementary symmetric
    functions of its eigenvalues; elements are bucketed by (e1, e2, e3).
    """
    buckets: dict[tuple, int] = {}
    for g in group:
        key = _char_coeffs(g)
        buckets[key] = buckets.get(key, 0) + 1
    total = Cyclo48.from_rational(0)
    for (e1, e2, e3), mult in buckets.items():
        h = [Cyclo48.from_rational(1)]
        for n in range(1, degree + 1):
            v = e1 * h[n - 1]
            if n >= 2:
                v = v - e2 * h[n - 2]
            if n >= 3:
                v = v + e3 * h[n - 3]
            h.append(v)
        total = total + h[degree] * mult
    avg = total / len(group)
    if not avg.is_rational():
        raise ArithmeticError("Molien average is not rational")
    q = avg.to_fraction()
    if q.denominator != 1 or q < 0:
        raise ArithmeticError(f"Molien average {q} is not a nonnegative integer")
    return int(q)


# ---------------------------------------------------------------------------
# Substitution p(x) -> p(M x)
# ---------------------------------------------------------------------------


class _Field:
    """Integer-vector model of Q, Q(sqrt2) or Q(zeta48) used by substitute."""

    def __init__(self, kind: str):
        self.kind = kind
        self.dim = {"Q": 1, "Q2": 2, "Z48": 16}[kind]

    def vec(self, x: Cyclo48) -> list[Fraction]:
        if self.kind == "Q":
            return [x.to_fraction()]
        if self.kind == "Q2":
            return list(x.sqrt2_parts())
        return x.coeffs()

    def mulmat(self, x: Cyclo48) -> list[list[Fraction]]:
        if self.kind == "Q":
            return [[x.to_fraction()]]
        if self.kind == "Q2":
            r, s = x.sqrt2_parts()
            return [[r, 2 * s], [s, r]]
        cols = [(x * Cyclo48.zeta(j)).coeffs() for j in range(_DIM)]
        return [[cols[j][i] for j in range(_DIM)] for i in range(_DIM)]

    def element(self, vec: Sequence[Fraction]) -> Cyclo48:
        if self.kind == "Q":
            return Cyclo48.from_rational(vec[0])
        if self.kind == "Q2":
            return Cyclo48.from_rational(vec[0]) + Cyclo48.sqrt2() * vec[1]
        return Cyclo48.from_coeffs(vec)


def _pick_field(elems: Iterable[Cyclo48]) -> _Field:
    kind = "Q"
    for x in elems:
        if x.is_rational():
            continue
        if x.sqrt2_parts() is not None:
            kind = "Q2"
            continue
        return _Field("Z48")
    return _Field(kind)


def _int_matrix(m, scale: int) -> np.ndarray:
    arr = np.empty((len(m), len(m[0])), dtype=object)
    for i, row in enumerate(m):
        for j, v in enumerate(row):
            w = v * scale
            if w.denominator != 1:
                raise ArithmeticError("scale does not clear denominators")
            arr[i, j] = int(w)
    return arr.T.copy()  # right-multiplication form: vec_row @ arr


def substitute(p: HomPoly, M: CycMatrix3) -> HomPoly:
    """Return p(M (a,b,c)^T), i.e. variable i is replaced by sum_j M[i][j] x_j."""
    if p.nvars != 3:
        raise ValueError("substitute expects a trivariate polynomial")
    M = tuple(Cyclo48.coerce(x) for x in M)
    D = p.degree
    if not p.terms:
        return p.copy()
    if all(M[k].is_zero() for k in (1, 2, 3, 5, 6, 7)):
        diag = (M[0], M[4], M[8])
        cache: dict[tuple[int, int], Cyclo48] = {}
        out = HomPoly(3, D)
        for e, c in p.terms.items():
            f = Cyclo48.coerce(c)
            for i, k in enumerate(e):
                if k:
                    if (i, k) not in cache:
                        cache[(i, k)] = diag[i] ** k
                    f = f * cache[(i, k)]
            out._add_term(e, f)
        return out

    coeffs = {e: Cyclo48.coerce(c) for e, c in p.terms.items()}
    field = _pick_field(list(M) + list(coeffs.values()))
    dim = field.dim

    mats = [field.mulmat(x) for x in M]
    L = 1
    for m in mats:
        for row in m:
            for v in row:
                L = lcm(L, v.denominator)
    forms = [[None if M[3 * i + j].is_zero() else _int_matrix(mats[3 * i + j], L) for j in range(3)]
             for i in range(3)]

    cmats = {e: field.mulmat(c) for e, c in coeffs.items()}
    Q = 1
    for m in cmats.values():
        for row in m:
            for v in row:
                Q = lcm(Q, v.denominator)
    cint = {e: _int_matrix(m, Q) for e, m in cmats.items()}
    unit = np.zeros(dim, dtype=object)
    unit[0] = 1

    side = D + 1

    def mul_linear(X: np.ndarray, deg: int, form) -> np.ndarray:
        Y = np.zeros((side, side, dim), dtype=object)
        s = deg + 1
        src = X[:s, :s]
        if form[0] is not None:
            Y[1:s + 1, :s] += src @ form[0]
        if form[1] is not None:
            Y[:s, 1:s + 1] += src @ form[1]
        if form[2] is not None:
            Y[:s, :s] += src @ form[2]
        return Y

    # powers of the second linear form, needed by the inner Horner loops
    base = np.zeros((side, side, dim), dtype=object)
    base[0, 0] = unit
    l1pow = [base]
    by_k: dict[int, dict[int, np.ndarray]] = {}
    for (i, j, k), m in cint.items():
        by_k.setdefault(k, {})[i] = m
    need = max((D - k for k in by_k), default=0)
    for t in range(1, need + 1):
        l1pow.append(mul_linear(l1pow[-1], t - 1, forms[1]))

    def binary_part(k: int) -> np.ndarray:
        m = D - k
        row = by_k[k]
        R = np.zeros((side, side, dim), dtype=object)
        if m in row:
            R[0, 0] = unit @ row[m]
        for t in range(1, m + 1):
            R = mul_linear(R, t - 1, forms[0])
            cm = row.get(m - t)
            if cm is not None:
                R[: t + 1, : t + 1] += l1pow[t][: t + 1, : t + 1] @ cm
        return R

    R = binary_part(D) if D in by_k else np.zeros((side, side, dim), dtype=object)
    for k in range(D - 1, -1, -1):
        R = mul_linear(R, D - k - 1, forms[2])
        if k in by_k:
            R += binary_part(k)

    scale = Q * L**D
    out = HomPoly(3, D)
    for i in range(side):
        for j in range(side - i):
            v = R[i, j]
            if any(v):
                c = field.element([Fraction(int(x), scale) for x in v])
                out._add_term((i, j, D - i - j), c)
    return out


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))")


def parse_poly(text: str, names: Sequence[str] = ("a", "b", "c")) -> HomPoly:
    """Parse an integer-coefficient expression with + - * ^ and parentheses."""
    toks = []
    for num, name, op in _TOKEN.findall(text):
        if num:
            toks.append(("n", int(num)))
        elif name:
            if name not in names:
                raise ValueError(f"unknown variable {name!r}")
            toks.append(("v", names.index(name)))
        elif op.strip():
            toks.append(("o", op))
    nv = len(names)
    pos = [0]

    def peek():
        return toks[pos[0]] if pos[0] < len(toks) else (None, None)

    def take(op=None):
        t = peek()
        if op is not None and t != ("o", op):
            raise ValueError(f"expected {op!r} at token {pos[0]}")
        pos[0] += 1
        return t

    def atom() -> HomPoly:
        kind, val = take()
        if kind == "n":
            return HomPoly.constant(nv, val)
        if kind == "v":
            return HomPoly.gens(nv)[val]
        if (kind, val) == ("o", "("):
            e = expr()
            take(")")
            return e
        if (kind, val) == ("o", "-"):
            return -factor()
        raise ValueError(f"unexpected token {val!r}")

    def factor() -> HomPoly:
        base = atom()
        if peek() == ("o", "^"):
            take()
            kind, val = take()
            if kind != "n":
                raise ValueError("exponent must be an integer")
            base = base ** val
        return base

    def term() -> HomPoly:
        t = factor()
        while peek() == ("o", "*") or peek()[0] in ("n", "v") or peek() == ("o", "("):
            if peek() == ("o", "*"):
                take()
            t = t * factor()
        return t

    def expr() -> HomPoly:
        e = term()
        while peek() in (("o", "+"), ("o", "-")):
            _, op = take()
            t = term()
            e = e + t if op == "+" else e - t
        return e

    out = expr()
    if pos[0] != len(toks):
        raise ValueError(f"trailing input at token {pos[0]}")
    return out
