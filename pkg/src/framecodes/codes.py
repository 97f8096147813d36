"""Binary linear codes over GF(2).

Words are Python ints: bit i holds coordinate i+1 (coordinates are 1-based
at the API boundary).  Codes keep a fully reduced echelon basis, so two
codes are equal exactly when their bases are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .polys import HomPoly

ENUM_GUARD = 30


class SizeError(ValueError):
    """A requested enumeration exceeds its guard."""


def word_from_bits(bits: Sequence[int] | str) -> int:
    w = 0
    for i, b in enumerate(bits):
        if int(b):
            w |= 1 << i
    return w


def word_to_bits(w: int, n: int) -> list[int]:
    return [(w >> i) & 1 for i in range(n)]


def word_to_str(w: int, n: int) -> str:
    return "".join("1" if (w >> i) & 1 else "0" for i in range(n))


def weight(w: int) -> int:
    return w.bit_count()


def support(w: int) -> list[int]:
    """1-based positions of the ones."""
    out = []
    i = 0
    while w:
        if w & 1:
            out.append(i + 1)
        w >>= 1
        i += 1
    return out


def reduce(generators: Iterable[int], n: int | None = None) -> tuple[list[int], int]:
    """Reduced echelon basis of the span, pivots at the lowest set bit."""
    rows: dict[int, int] = {}
    for g in generators:
        if n is not None and g >> n:
            raise ValueError("dimension mismatch: generator longer than n")
        v = g
        for p, r in rows.items():
            if (v >> p) & 1:
                v ^= r
        if v:
            p = (v & -v).bit_length() - 1
            for q in list(rows):
                if (rows[q] >> p) & 1:
                    rows[q] ^= v
            rows[p] = v
    basis = [rows[p] for p in sorted(rows)]
    return basis, len(basis)


def span_words(basis: Sequence[int]) -> np.ndarray:
    """All 2^k codewords as a uint64 array (numpy fast path, n <= 64)."""
    words = np.zeros(1, dtype=np.uint64)
    for r in basis:
        words = np.concatenate([words, words ^ np.uint64(r)])
    return words


@dataclass(frozen=True, eq=False)
class BinaryCode:
    n: int
    basis: tuple[int, ...]

    def __init__(self, n: int, generators: Iterable[int] = ()):
        if n <= 0 or n > 64:
            raise ValueError("length must be in 1..64")
        basis, _ = reduce(generators, n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", tuple(basis))

    # constructors -------------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int] | str], n: int | None = None) -> "BinaryCode":
        rows = list(rows)
        if n is None:
            if not rows:
                raise ValueError("length needed for an empty generator list")
            n = len(rows[0])
        for r in rows:
            if len(r) != n:
                raise ValueError("dimension mismatch between generator rows")
        return cls(n, [word_from_bits(r) for r in rows])

    @classmethod
    def full(cls, n: int) -> "BinaryCode":
        return cls(n, [1 << i for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "BinaryCode":
        return cls(n, [])

    # basic structure ----------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [(r & -r).bit_length() - 1 for r in self.basis]

    def __len__(self) -> int:
        return 1 << self.dim

    def __eq__(self, other):
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, self.basis))

    def __repr__(self):
        return f"BinaryCode(n={self.n}, k={self.dim})"

    def reduce_word(self, w: int) -> int:
        for r in self.basis:
            p = (r & -r).bit_length() - 1
            if (w >> p) & 1:
                w ^= r
        return w

    def __contains__(self, w: int) -> bool:
        return w >> self.n == 0 and self.reduce_word(w) == 0

    def is_subcode_of(self, other: "BinaryCode") -> bool:
        return self.n == other.n and all(r in other for r in self.basis)

    def rows(self) -> list[str]:
        return [word_to_str(r, self.n) for r in self.basis]

    def all_ones(self) -> int:
        return (1 << self.n) - 1

    # enumeration --------------------------------------------------------
    def _guard(self):
        if self.dim > ENUM_GUARD:
            raise SizeError(f"code of dimension {self.dim} exceeds enumeration guard {ENUM_GUARD}")

    def codeword_array(self) -> np.ndarray:
        self._guard()
        return span_words(self.basis)

    def codewords(self) -> list[int]:
        return [int(x) for x in self.codeword_array()]

    def __iter__(self):
        return iter(self.codewords())

    def weight_distribution(self) -> dict[int, int]:
        arr = self.codeword_array()
        counts = np.bincount(np.bitwise_count(arr).astype(np.int64), minlength=self.n + 1)
        return {w: int(c) for w, c in enumerate(counts) if c}

    def weight_enumerator(self) -> HomPoly:
        dist = self.weight_distribution()
        return HomPoly(2, self.n, {(self.n - w, w): c for w, c in dist.items()})

    def min_weight(self) -> int:
        dist = self.weight_distribution()
        nz = [w for w in dist if w]
        return min(nz) if nz else 0

    # derived codes ------------------------------------------------------
    def dual(self) -> "BinaryCode":
        piv = self.pivots
        pivset = set(piv)
        gens = []
        for f in range(self.n):
            if f in pivset:
                continue
            v = 1 << f
            for r, p in zip(self.basis, piv):
                if (r >> f) & 1:
                    v |= 1 << p
            gens.append(v)
        return BinaryCode(self.n, gens)

    def shorten(self, positions: Iterable[int]) -> "BinaryCode":
        pos = sorted(set(positions))
        for p in pos:
            if not 1 <= p <= self.n:
                raise IndexError(f"position {p} outside 1..{self.n}")
        rows = list(self.basis)
        for p in pos:
            bit = p - 1
            idx = next((i for i, r in enumerate(rows) if (r >> bit) & 1), None)
            if idx is None:
                continue
            pr = rows.pop(idx)
            rows = [r ^ pr if (r >> bit) & 1 else r for r in rows]
        keep = [i for i in range(self.n) if i + 1 not in set(pos)]
        out = []
        for r in rows:
            v = 0
            for j, i in enumerate(keep):
                if (r >> i) & 1:
                    v |= 1 << j
            out.append(v)
        return BinaryCode(len(keep), out)

    def permuted(self, perm: Sequence[int]) -> "BinaryCode":
        """Image under the coordinate map i -> perm[i] (0-based images)."""
        return BinaryCode(self.n, [permute_word(r, perm) for r in self.basis])

    def is_preserved_by(self, perm: Sequence[int]) -> bool:
        return all(permute_word(r, perm) in self for r in self.basis)


def permute_word(w: int, perm: Sequence[int]) -> int:
    out = 0
    i = 0
    while w:
        if w & 1:
            out |= 1 << perm[i]
        w >>= 1
        i += 1
    return out


def parity_predicates(code: BinaryCode) -> dict[str, bool]:
    """Parity facts derived from the basis (no enumeration needed).

    Weight mod 8 of a sum follows from inclusion-exclusion over basis
    intersections, so divisibility by 2, 4 and 8 reduces to conditions on
    single rows, pairs and triples.
    """
    B = code.basis
    even = all(weight(r) % 2 == 0 for r in B)
    pairs_even = all(weight(a & b) % 2 == 0 for a, b in combinations(B, 2))
    doubly = even and all(weight(r) % 4 == 0 for r in B) and pairs_even
    div8 = (
        doubly
        and all(weight(r) % 8 == 0 for r in B)
        and all(weight(a & b) % 4 == 0 for a, b in combinations(B, 2))
        and all(weight(a & b & c) % 2 == 0 for a, b, c in combinations(B, 3))
    )
    return {
        "is_even": even,
        "is_doubly_even": doubly,
        "weights_div_8": div8,
        "contains_all_ones": code.all_ones() in code,
        "self_annihilating": even and pairs_even,
    }


def hadamard_indicator_transform(code: BinaryCode, guard: int = 24) -> np.ndarray:
    """Walsh-Hadamard transform of the indicator function of the code.

    Index v of the returned vector is the word with bit i at coordinate i+1.
    """
    n = code.n
    if n > guard:
        raise SizeError(f"length {n} exceeds transform guard {guard}")
    vec = np.zeros(1 << n, dtype=np.int64)
    vec[code.codeword_array().astype(np.int64)] = 1
    h = 1
    while h < len(vec):
        v = vec.reshape(-1, 2, h)
        a = v[:, 0, :].copy()
        b = v[:, 1, :]
        v[:, 0, :] = a + b
        v[:, 1, :] = a - b
        h *= 2
    return vec


def indicator(code: BinaryCode) -> np.ndarray:
    vec = np.zeros(1 << code.n, dtype=np.int64)
    vec[code.codeword_array().astype(np.int64)] = 1
    return vec


def random_code(n: int, k: int, rng) -> BinaryCode:
    """Span of k random words; rng is a random.Random or numpy Generator."""
    if hasattr(rng, "integers"):
        gens = [word_from_bits(rng.integers(0, 2, size=n).tolist()) for _ in range(k)]
    else:
        gens = [rng.getrandbits(n) for _ in range(k)]
    return BinaryCode(n, gens)


def code_to_text(code: BinaryCode) -> str:
    """Code file: "n k" followed by k generator rows."""
    return f"{code.n} {code.dim}\n" + "".join(r + "\n" for r in code.rows())


def read_code_text(text: str) -> BinaryCode:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty code file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n k'")
    n, k = map(int, head)
    rows = lines[1:]
    if len(rows) != k or any(len(r) != n or set(r) - {"0", "1"} for r in rows):
        raise ValueError(f"expected {k} rows of length {n} over 0/1")
    return BinaryCode.from_rows(rows, n)
