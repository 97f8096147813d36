"""Codes over Z/4: echelon form, swe, Euclidean weights and the marked constructions.

A Z4 word is a tuple of ints in 0..3.  Codes built from a marked binary
code keep their coset description (base code, marking, Sigma_2 selector,
glue), which gives cheap membership and weight enumerators; a spanning
family is always available for echelon-form work.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .codes import BinaryCode, SizeError
from .markings import Marking
from .polys import HomPoly

Z4Word = tuple

ENUM_GUARD_LOG2 = 26


class ConstructionError(ValueError):
    """A coset construction failed its closure check."""


# ---------------------------------------------------------------------------
# pair maps
# ---------------------------------------------------------------------------

HAT = {(0, 0): (0, 0), (1, 1): (2, 0), (1, 0): (1, 1), (0, 1): (3, 1)}

# untwisted frame labels (sign +) of the lattice coset table
FRAME = {(0, 0): (0, 0), (1, 1): (2, 0), (1, 0): (1, 1), (0, 1): (1, 3)}

LABELINGS = {"hat": HAT, "frame": FRAME}


def hat_pair(bits: Sequence[int]) -> tuple[int, int]:
    return HAT[(int(bits[0]), int(bits[1]))]


def add(u: Sequence[int], v: Sequence[int]) -> Z4Word:
    return tuple((a + b) % 4 for a, b in zip(u, v))


def neg(u: Sequence[int]) -> Z4Word:
    return tuple((-a) % 4 for a in u)


def inner(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v)) % 4


_EW = (0, 1, 4, 1)


def euclidean_weight(w: Sequence[int]) -> int:
    return sum(_EW[x % 4] for x in w)


def rs_counts(w: Sequence[int]) -> tuple[int, int]:
    r = sum(1 for x in w if x % 2)
    s = sum(1 for x in w if x % 4 == 2)
    return r, s


def glue_word(d: int) -> Z4Word:
    """(1,0,...,1,0) for d = 0 mod 16, last pair replaced by (3,2) for d = 8 mod 16."""
    if d % 8:
        raise ValueError("length must be a multiple of 8")
    g = [1, 0] * (d // 2)
    if d % 16 == 8:
        g[-2:] = [3, 2]
    return tuple(g)


def marked_image(c: int, m: Marking, table=HAT) -> Z4Word:
    out = []
    for a, b in m.zero_based():
        out.extend(table[((c >> a) & 1, (c >> b) & 1)])
    return tuple(out)


def sigma2_generators(h: int, even: bool) -> list[Z4Word]:
    """Generators of Sigma_2^h (pairs (2,2)) or of its even part."""
    gens = []
    for k in range(h):
        w = [0] * (2 * h)
        w[2 * k] = w[2 * k + 1] = 2
        gens.append(w)
    if even:
        gens = [add(gens[k], gens[k + 1]) for k in range(h - 1)]
    return [tuple(g) for g in gens]


# ---------------------------------------------------------------------------
# echelon form over Z4
# ---------------------------------------------------------------------------


def z4_echelon(rows: Iterable[Sequence[int]], n: int) -> list[tuple[int, int, tuple[int, ...]]]:
    """Echelon rows (pivot column, pivot value 1 or 2, row) for the subgroup generated.

    A row whose pivot is 2 may still have order 4; its double is fed back
    into the remaining rows so the pivot list counts |code| exactly.
    """
    pending = [list(int(x) % 4 for x in r) for r in rows]
    for r in pending:
        if len(r) != n:
            raise ValueError("length mismatch")
    pending = [r for r in pending if any(r)]
    out: list[tuple[int, int, tuple[int, ...]]] = []
    for col in range(n):
        unit = next((r for r in pending if r[col] % 2), None)
        if unit is not None:
            pending.remove(unit)
            if unit[col] == 3:
                unit = [(-x) % 4 for x in unit]
            nxt = []
            for r in pending:
                if r[col]:
                    f = r[col]
                    r = [(x - f * y) % 4 for x, y in zip(r, unit)]
                if any(r):
                    nxt.append(r)
            pending = nxt
            out.append((col, 1, tuple(unit)))
            continue
        two = next((r for r in pending if r[col] == 2), None)
        if two is None:
            continue
        pending.remove(two)
        nxt = []
        for r in pending:
            if r[col] == 2:
                r = [(x - y) % 4 for x, y in zip(r, two)]
            if any(r):
                nxt.append(r)
        dbl = [(2 * x) % 4 for x in two]
        if any(dbl):
            nxt.append(dbl)
        pending = nxt
        out.append((col, 2, tuple(two)))
    return out


def echelon_size(ech) -> int:
    s = 1
    for _, pv, _ in ech:
        s *= 4 if pv == 1 else 2
    return s


def echelon_reduce(ech, w: Sequence[int]) -> tuple[int, ...] | None:
    """Residue of w after elimination; None if a 2-pivot meets an odd entry."""
    v = [int(x) % 4 for x in w]
    for col, pv, row in ech:
        a = v[col]
        if not a:
            continue
        if pv == 1:
            v = [(x - a * y) % 4 for x, y in zip(v, row)]
        else:
            if a != 2:
                return None
            v = [(x - y) % 4 for x, y in zip(v, row)]
    return tuple(v)


# ---------------------------------------------------------------------------
# the code type
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CosetData:
    code: BinaryCode
    marking: Marking
    selector: str  # "sigma_full" or "sigma_even"
    glue: Z4Word | None
    labeling: str = "hat"

    @property
    def table(self):
        return LABELINGS[self.labeling]


@dataclass
class Z4Code:
    n: int
    generators: list[Z4Word]
    coset: CosetData | None = None
    _ech: list | None = field(default=None, repr=False)

    # construction -------------------------------------------------------
    @classmethod
    def from_generators(cls, rows: Iterable[Sequence[int]], n: int | None = None) -> "Z4Code":
        rows = [tuple(int(x) % 4 for x in r) for r in rows]
        if n is None:
            if not rows:
                raise ValueError("length needed for an empty generator list")
            n = len(rows[0])
        return cls(n, rows)

    def echelon(self):
        if self._ech is None:
            self._ech = z4_echelon(self.generators, self.n)
        return self._ech

    def type_counts(self) -> tuple[int, int]:
        e = self.echelon()
        k1 = sum(1 for _, pv, _ in e if pv == 1)
        return k1, len(e) - k1

    def cardinality(self) -> int:
        if self.coset is not None:
            cd = self.coset
            h = self.n // 2
            base = len(cd.code) * 2 ** (h if cd.selector == "sigma_full" else h - 1)
            return base * (2 if cd.glue is not None else 1)
        return echelon_size(self.echelon())

    def __len__(self):
        return self.cardinality()

    def generator_form(self) -> "Z4Code":
        return Z4Code(self.n, [r for _, _, r in self.echelon()])

    # membership ---------------------------------------------------------
    def __contains__(self, w: Sequence[int]) -> bool:
        return self.contains(w)

    def contains(self, w: Sequence[int]) -> bool:
        w = tuple(int(x) % 4 for x in w)
        if len(w) != self.n:
            raise ValueError("length mismatch")
        if self.coset is None:
            r = echelon_reduce(self.echelon(), w)
            return r is not None and not any(r)
        cd = self.coset
        if self._coset_member(w, cd):
            return True
        if cd.glue is not None:
            return self._coset_member(add(w, neg(cd.glue)), cd)
        return False

    @staticmethod
    def _coset_member(w: Z4Word, cd: CosetData) -> bool:
        table = cd.table
        c = 0
        flips = 0
        for (a, b), k in zip(cd.marking.zero_based(), range(len(w) // 2)):
            u, v = w[2 * k], w[2 * k + 1]
            if u % 2 != v % 2:
                return False
            if u % 2:
                bits = (1, 0) if u == v else (0, 1)
            else:
                bits = (0, 0) if u == v else (1, 1)
            lab = table[bits]
            du, dv = (u - lab[0]) % 4, (v - lab[1]) % 4
            if (du, dv) == (2, 2):
                flips += 1
            elif (du, dv) != (0, 0):
                return False
            if bits[0]:
                c |= 1 << a
            if bits[1]:
                c |= 1 << b
        if cd.selector == "sigma_even" and flips % 2:
            return False
        return c in cd.code

    # enumeration --------------------------------------------------------
    def _coset_shards(self) -> Iterator[np.ndarray]:
        """Yield blocks of codewords (one block per binary codeword and glue choice)."""
        cd = self.coset
        h = self.n // 2
        choices = np.array(list(product((0, 2), repeat=h)), dtype=np.int8).reshape(-1, h)
        if cd.selector == "sigma_even":
            choices = choices[(choices // 2).sum(axis=1) % 2 == 0]
        sig = np.repeat(choices, 2, axis=1)
        shifts = [np.zeros(self.n, dtype=np.int8)]
        if cd.glue is not None:
            shifts.append(np.array(cd.glue, dtype=np.int8))
        for c in cd.code.codewords():
            lab = np.array(marked_image(c, cd.marking, cd.table), dtype=np.int8)
            for sh in shifts:
                yield (sig + lab + sh) % 4

    def _span_words(self) -> np.ndarray:
        ech = self.echelon()
        words = np.zeros((1, self.n), dtype=np.int8)
        for _, pv, row in ech:
            r = np.array(row, dtype=np.int8)
            mults = range(4) if pv == 1 else range(2)
            words = np.concatenate([(words + k * r) % 4 for k in mults])
        return words

    def words(self, via: str = "auto") -> np.ndarray:
        """All codewords as an int8 array (guarded)."""
        if self.cardinality() > 1 << (ENUM_GUARD_LOG2 - 4):
            raise SizeError("code too large to materialize; use shard-wise swe")
        if self.coset is not None and via != "span":
            return np.concatenate(list(self._coset_shards()))
        return self._span_words()

    def word_set(self, via: str = "auto") -> set[Z4Word]:
        return {tuple(int(x) for x in w) for w in self.words(via)}

    # weight enumerators -------------------------------------------------
    def swe(self, method: str = "auto") -> HomPoly:
        if method == "auto":
            method = "transfer" if self.coset is not None else "enumerate"
        if method == "transfer":
            if self.coset is None:
                raise ValueError("transfer product needs the coset description")
            return _swe_transfer(self)
        if method == "enumerate":
            if self.cardinality() > 1 << ENUM_GUARD_LOG2:
                raise SizeError("code exceeds swe enumeration guard")
            shards = self._coset_shards() if self.coset is not None else iter([self._span_words()])
            hist = np.zeros((self.n + 1, self.n + 1), dtype=np.int64)
            for block in shards:
                r = (block % 2).sum(axis=1)
                s = (block == 2).sum(axis=1)
                np.add.at(hist, (r, s), 1)
            terms = {}
            for r, s in zip(*np.nonzero(hist)):
                terms[(self.n - int(r) - int(s), int(r), int(s))] = int(hist[r, s])
            return HomPoly(3, self.n, terms)
        raise ValueError(f"unknown swe method {method}")

    def min_euclidean_weight(self) -> int:
        p = self.swe()
        return min(r + 4 * s for (a, r, s) in p.terms if (r, s) != (0, 0))


def _pair_monomial(u: int, v: int) -> tuple[int, int, int]:
    e = [0, 0, 0]
    for x in (u, v):
        e[0 if x == 0 else (2 if x == 2 else 1)] += 1
    return tuple(e)


def _swe_transfer(code: Z4Code) -> HomPoly:
    """swe summed per binary codeword as a product of per-pair two-state factors."""
    cd = code.coset
    h = code.n // 2
    even = cd.selector == "sigma_even"
    shifts = [tuple([0] * code.n)]
    if cd.glue is not None:
        shifts.append(cd.glue)
    buckets: Counter = Counter()
    for c in cd.code.codewords():
        lab = marked_image(c, cd.marking, cd.table)
        for sh in shifts:
            w = add(lab, sh)
            buckets[tuple(sorted(Counter((w[2 * k], w[2 * k + 1]) for k in range(h)).items()))] += 1
    total = HomPoly(3, code.n)
    pow_cache: dict = {}

    def factor(u, v, sign):
        a = HomPoly.monomial(_pair_monomial(u, v))
        b = HomPoly.monomial(_pair_monomial((u + 2) % 4, (v + 2) % 4))
        return a + b if sign > 0 else a - b

    def fpow(u, v, sign, k):
        key = (u, v, sign, k)
        if key not in pow_cache:
            pow_cache[key] = factor(u, v, sign) ** k
        return pow_cache[key]

    for key, mult in buckets.items():
        plus = HomPoly.constant(3)
        for (u, v), k in key:
            plus = plus * fpow(u, v, 1, k)
        if even:
            minus = HomPoly.constant(3)
            for (u, v), k in key:
                minus = minus * fpow(u, v, -1, k)
            part = (plus + minus).scale(Fraction(1, 2))
        else:
            part = plus
        total = total + part.scale(mult)
    return total


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------


def spanning_family(code: Z4Code) -> list[Z4Word]:
    if code.coset is None:
        return list(code.generators)
    cd = code.coset
    fam = [marked_image(c, cd.marking, cd.table) for c in cd.code.basis]
    fam += sigma2_generators(code.n // 2, cd.selector == "sigma_even")
    if cd.glue is not None:
        fam.append(cd.glue)
    return fam


def z4_predicates(code: Z4Code) -> dict:
    fam = spanning_family(code)
    card = code.cardinality()
    orth = all(inner(u, v) == 0 for i, u in enumerate(fam) for v in fam[i:])
    sa = orth and card == 2 ** code.n
    p = code.swe()
    even = all((r + 4 * s) % 8 == 0 for (_, r, s) in p.terms)
    return {"self_annihilating": sa, "even": even, "cardinality": card}


def verify_closure(code: Z4Code) -> None:
    """Check that the coset union is a group: family span has the union's size and
    every pairwise sum of family members passes membership."""
    fam = spanning_family(code)
    span = echelon_size(z4_echelon(fam, code.n))
    if span != code.cardinality():
        raise ConstructionError(
            f"coset union of size {code.cardinality()} is not closed (its span has size {span})")
    for i, u in enumerate(fam):
        if not code.contains(u):
            raise ConstructionError("spanning family element outside the coset union")
        for v in fam[i:]:
            if not code.contains(add(u, v)):
                raise ConstructionError("pairwise sum outside the coset union")


# ---------------------------------------------------------------------------
# marked constructions
# ---------------------------------------------------------------------------


def _check_input(C: BinaryCode, m: Marking) -> None:
    if C.n != m.d:
        raise ValueError("length mismatch between code and marking")


def gamma_code(C: BinaryCode, m: Marking, labeling: str = "hat") -> Z4Code:
    """Images of C under the pair map plus all of Sigma_2."""
    _check_input(C, m)
    code = Z4Code(C.n, [], CosetData(C, m, "sigma_full", None, labeling))
    code.generators = spanning_family(code)
    return code


def gamma_twisted(C: BinaryCode, m: Marking, labeling: str = "frame", check: bool = True) -> Z4Code:
    """Images of C plus the even part of Sigma_2, together with its glue translate.

    The default labeling sends a (0,1) pair to (1,3), the coset label of the
    untwisted lattice; with it the union is a group for every doubly-even C.
    """
    _check_input(C, m)
    code = Z4Code(C.n, [], CosetData(C, m, "sigma_even", glue_word(C.n), labeling))
    code.generators = spanning_family(code)
    if check:
        verify_closure(code)
    return code


def sigma2(h: int, even: bool = False) -> Z4Code:
    return Z4Code(2 * h, sigma2_generators(h, even))


def read_z4_rows(lines: Sequence[str]) -> list[Z4Word]:
    return [tuple(int(ch) for ch in ln.strip()) for ln in lines if ln.strip()]


def apply_monomial(w: Sequence[int], perm: Sequence[int], signs: Sequence[int]) -> Z4Word:
    """Coordinate i of w goes to position perm[i], multiplied by signs[i] (+1 or -1)."""
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[perm[i]] = (signs[i] * x) % 4
    return tuple(out)


def monomial_equivalence(A: Z4Code, B: Z4Code, guard: int = 12):
    """(perm, signs) with apply_monomial(A) == B as sets, or None.

    Backtracking on coordinates of A; a partial map survives when the
    projection of A onto the mapped coordinates equals that of B.
    """
    if A.n != B.n or A.cardinality() != B.cardinality():
        return None
    n = A.n
    if n > guard:
        raise SizeError(f"monomial search limited to length {guard}")
    wa = np.array(sorted(A.word_set()), dtype=np.int64)
    wb = np.array(sorted(B.word_set()), dtype=np.int64)
    target = {tuple(r) for r in wb}

    def proj(arr, cols):
        return {tuple(r) for r in arr[:, cols]}

    perm: list[int] = []
    signs: list[int] = []

    def rec(i: int):
        if i == n:
            img = {apply_monomial(w, perm, signs) for w in map(tuple, wa)}
            return img == target
        for j in range(n):
            if j in perm:
                continue
            for s in (1, -1):
                perm.append(j)
                signs.append(s)
                cols_b = perm[:]
                left = {tuple(x) for x in (wa[:, : i + 1] * np.array(signs)) % 4}
                if left == proj(wb, cols_b) and rec(i + 1):
                    return True
                perm.pop()
                signs.pop()
        return False

    return (tuple(perm), tuple(signs)) if rec(0) else None


def z4_to_text(code: Z4Code) -> str:
    """Z4 code file in generator form: "n k generator" then the spanning rows."""
    rows = [r for _, _, r in code.echelon()]
    return f"{code.n} {len(rows)} generator\n" + "".join("".join(map(str, r)) + "\n" for r in rows)


def read_z4_text(text: str, resolve=None) -> Z4Code:
    """Parse a Z4 code file.

    Generator form lists rows over 0..3.  Coset form lists a binary-code file,
    a marking file, the token sigma_full or sigma_even, and an optional glue
    row; ``resolve(path)`` must return the text of a referenced file.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    n, k, form = lines[0].split()
    n, k = int(n), int(k)
    if form == "generator":
        rows = read_z4_rows(lines[1:])
        if len(rows) != k or any(len(r) != n or max(r, default=0) > 3 for r in rows):
            raise ValueError(f"expected {k} rows of length {n} over 0..3")
        return Z4Code.from_generators(rows, n)
    if form == "coset":
        from .codes import read_code_text
        from .markings import read_marking_text

        if resolve is None:
            raise ValueError("coset form needs a file resolver")
        C = read_code_text(resolve(lines[1]))
        m = read_marking_text(resolve(lines[2]), n)
        sel = lines[3]
        if sel == "sigma_full":
            return gamma_code(C, m)
        if sel == "sigma_even":
            code = gamma_twisted(C, m)
            if len(lines) > 4 and read_z4_rows([lines[4]])[0] != glue_word(n):
                raise ValueError("only the standard glue row is supported")
            return code
        raise ValueError("selector must be sigma_full or sigma_even")
    raise ValueError("form must be 'generator' or 'coset'")


def swe_from_smwe(smwe_poly: HomPoly, d: int, twisted: bool) -> HomPoly:
    """swe of Gamma (or its twisted variant) from the marked enumerator of C."""
    if smwe_poly.nvars != 3 or smwe_poly.degree != d // 2:
        raise ValueError(f"smwe must be trivariate of degree {d // 2}")
    A, B, C = HomPoly.gens(3)
    base = smwe_poly.compose([A * A + C * C, (B * B).scale(2), (A * C).scale(2)])
    if not twisted:
        return base
    h = d // 2
    sign = -1 if (d // 8) % 2 else 1
    extra = (A * A - C * C) ** h
    glue = ((A + C) ** h + ((A - C) ** h).scale(sign)) * (B ** h)
    return (base + extra + glue.scale(2 ** h)).scale(Fraction(1, 2))
