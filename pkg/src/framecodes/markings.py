"""Markings (perfect matchings of coordinates) and the marked weight enumerator."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .codes import BinaryCode, SizeError
from .polys import HomPoly


@dataclass(frozen=True)
class Marking:
    """A perfect matching of {1..d}; pairs are sorted and each pair ascending."""

    d: int
    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs: Iterable[Sequence[int]], d: int | None = None):
        ps = tuple(sorted(tuple(sorted((int(a), int(b)))) for a, b in pairs))
        pts = [x for p in ps for x in p]
        if d is None:
            d = len(pts)
        if sorted(pts) != list(range(1, d + 1)):
            raise ValueError("pairs must partition 1..d")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "pairs", ps)

    @classmethod
    def standard(cls, d: int) -> "Marking":
        return cls([(2 * k + 1, 2 * k + 2) for k in range(d // 2)], d)

    def zero_based(self) -> tuple[tuple[int, int], ...]:
        return tuple((a - 1, b - 1) for a, b in self.pairs)

    def permuted(self, perm: Sequence[int]) -> "Marking":
        """Image under the 0-based coordinate map i -> perm[i]."""
        return Marking([(perm[a - 1] + 1, perm[b - 1] + 1) for a, b in self.pairs], self.d)

    def __str__(self):
        return "{" + ",".join(f"({a},{b})" for a, b in self.pairs) + "}"

    def to_lines(self) -> str:
        return "".join(f"{a} {b}\n" for a, b in self.pairs)


def canonical_pairs(pairs: Iterable[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    """Hashable canonical form for 0-based pair collections (orbit BFS keys)."""
    return tuple(sorted((a, b) if a < b else (b, a) for a, b in pairs))


def act_on_pairs(perm: Sequence[int], pairs: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
    return canonical_pairs((perm[a], perm[b]) for a, b in pairs)


def all_matchings(d: int, guard: int = 12) -> list[Marking]:
    if d % 2 or d <= 0:
        raise ValueError("d must be a positive even number")
    if d > guard:
        raise SizeError(f"d={d} exceeds matching guard {guard}")
    out: list[Marking] = []

    def rec(rest: list[int], acc: list[tuple[int, int]]):
        if not rest:
            out.append(Marking(acc, d))
            return
        a = rest[0]
        for i in range(1, len(rest)):
            b = rest[i]
            rec(rest[1:i] + rest[i + 1:], acc + [(a, b)])

    rec(list(range(1, d + 1)), [])
    return out


def pair_split(c: int, m: Marking) -> tuple[int, int, int]:
    """(weight, number of fully set pairs, number of half set pairs)."""
    if c >> m.d:
        raise ValueError("length mismatch")
    k = c.bit_count()
    l = sum(1 for a, b in m.zero_based() if (c >> a) & 1 and (c >> b) & 1)
    return k, l, k - 2 * l


def _split_arrays(code: BinaryCode, m: Marking):
    if code.n != m.d:
        raise ValueError("length mismatch between code and marking")
    words = code.codeword_array()
    k = np.bitwise_count(words).astype(np.int64)
    l = np.zeros(len(words), dtype=np.int64)
    one = np.uint64(1)
    for a, b in m.zero_based():
        l += ((words >> np.uint64(a)) & (words >> np.uint64(b)) & one).astype(np.int64)
    return k, l


def smwe(code: BinaryCode, m: Marking) -> HomPoly:
    """Sum over codewords of x^(d/2-k+l) y^(k-2l) z^l."""
    k, l = _split_arrays(code, m)
    h = m.d // 2
    keys, counts = np.unique(np.stack([k, l]), axis=1, return_counts=True)
    terms = {}
    for (kk, ll), cnt in zip(keys.T.tolist(), counts.tolist()):
        terms[(h - kk + ll, kk - 2 * ll, ll)] = cnt
    return HomPoly(3, h, terms)


def cm_parameters(code: BinaryCode, m: Marking) -> tuple[int, int, int, int, int]:
    """Weight-8 codeword counts W_{8,l} for l = 0..4."""
    return weight_split_counts(code, m, 8)


def weight_split_counts(code: BinaryCode, m: Marking, w: int) -> tuple[int, ...]:
    k, l = _split_arrays(code, m)
    sel = l[k == w]
    return tuple(int((sel == i).sum()) for i in range(w // 2 + 1))


def contains_even_tetrad_code(code: BinaryCode) -> bool:
    """Whether the even-weight span of the all-ones tetrads (blocks 4i+1..4i+4) lies in the code."""
    if code.n % 4:
        return False
    blocks = [0b1111 << (4 * i) for i in range(code.n // 4)]
    gens = [blocks[i] | blocks[i + 1] for i in range(len(blocks) - 1)]
    return all(g in code for g in gens)


@dataclass
class OrbitInfo:
    representative: Marking
    orbit_size: int
    stabilizer_order: int
    smwe: HomPoly
    members: list[Marking]


def classify_orbits(code: BinaryCode, group, markings: Sequence[Marking] | None = None) -> list[OrbitInfo]:
    """Split markings into orbits of ``group`` (a PermGroup on the code's coordinates)."""
    if markings is None:
        markings = all_matchings(code.n)
    remaining = {mk.zero_based(): mk for mk in markings}
    order = group.order()
    out: list[OrbitInfo] = []
    for mk in markings:
        key = mk.zero_based()
        if key not in remaining:
            continue
        orb = group.orbit(key, act_on_pairs)
        members = []
        for p in orb:
            if p not in remaining:
                raise ValueError("supplied marking list is not closed under the group")
            members.append(remaining.pop(p))
        out.append(OrbitInfo(mk, len(orb), order // len(orb), smwe(code, mk), members))
    return out


def read_marking_text(text: str, d: int | None = None) -> Marking:
    pairs = []
    for ln in text.splitlines():
        ln = ln.strip()
        if ln and not ln.startswith("#"):
            a, b = ln.replace(",", " ").split()
            pairs.append((int(a), int(b)))
    return Marking(pairs, d)
