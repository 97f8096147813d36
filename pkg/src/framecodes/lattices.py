"""D1-framed lattices described by their Z4 frame quotients.

A marked pair (a, b) carries the frame vectors sqrt2(e_a + e_b) and
sqrt2(e_a - e_b).  A lattice point (1/sqrt2) v then has frame coordinates
(v_a + v_b, v_a - v_b) mod 4, in units where 1 stands for the D1 coset 1/2.
Half-integral v are handled by doubling, so every computation is integral.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .codes import BinaryCode, parity_predicates
from .markings import Marking
from .z4codes import Z4Code, z4_echelon, z4_predicates

# Coset labels in Z4 units (half-integral labels doubled), keyed by (b, sign) then pair bits.
COSET_LABELS = {
    (0, "+"): {(0, 0): (0, 0), (1, 1): (2, 0), (1, 0): (1, 1), (0, 1): (1, 3)},
    (0, "-"): {(0, 0): (2, 2), (1, 1): (0, 2), (1, 0): (3, 3), (0, 1): (3, 1)},
    (1, "+"): {(0, 0): (1, 0), (1, 1): (3, 0), (1, 0): (2, 1), (0, 1): (2, 3)},
    (1, "-"): {(0, 0): (3, 2), (1, 1): (1, 2), (1, 0): (0, 3), (0, 1): (0, 1)},
}


def coset_label(b: int, eps: str, pair: Sequence[int]) -> tuple[int, int]:
    if b not in (0, 1) or eps not in ("+", "-"):
        raise ValueError("b must be 0 or 1 and eps '+' or '-'")
    return COSET_LABELS[(b, eps)][(int(pair[0]), int(pair[1]))]


def frame_coset(b: int, eps: Sequence[str], c: int, m: Marking) -> tuple[int, ...]:
    if len(eps) != m.d // 2:
        raise ValueError("length mismatch between sign vector and marking")
    if c >> m.d:
        raise ValueError("length mismatch between word and marking")
    out = []
    for (i, j), e in zip(m.zero_based(), eps):
        out.extend(coset_label(b, e, ((c >> i) & 1, (c >> j) & 1)))
    return tuple(out)


def coset_union(C: BinaryCode, m: Marking, twisted: bool) -> set:
    """Literal union of frame cosets over c in C and admissible sign vectors."""
    h = m.d // 2
    target = "+" if (m.d // 8) % 2 == 0 else "-"
    out = set()
    for c in C.codewords():
        for eps in product("+-", repeat=h):
            sign = "+" if eps.count("-") % 2 == 0 else "-"
            if not twisted:
                out.add(frame_coset(0, eps, c, m))
                continue
            if sign == "+":
                out.add(frame_coset(0, eps, c, m))
            if sign == target:
                out.add(frame_coset(1, eps, c, m))
    return out


def _frame_coords(V: Sequence[int], m: Marking) -> tuple[int, ...]:
    """Frame quotient of (1/sqrt2)(V/2) for an integer vector V (doubled coordinates)."""
    out = []
    for a, b in m.zero_based():
        s, t = V[a] + V[b], V[a] - V[b]
        if s % 2 or t % 2:
            raise ValueError("point is not in the dual of the frame")
        out.extend(((s // 2) % 4, (t // 2) % 4))
    return tuple(out)


def lattice_generators(C: BinaryCode, twisted: bool) -> list[list[int]]:
    """Generators of L_C or its twisted variant, in doubled coordinates."""
    d = C.n
    gens = [[2 * ((c >> i) & 1) for i in range(d)] for c in C.basis]
    unit = lambda i, s=4: [s if k == i else 0 for k in range(d)]  # noqa: E731
    if not twisted:
        gens += [unit(i) for i in range(d)]
        return gens
    for i in range(d - 1):
        gens.append([4 if k in (i, i + 1) else 0 for k in range(d)])
        gens.append([4 if k == i else (-4 if k == i + 1 else 0) for k in range(d)])
    half = [1] * d
    if d % 16 == 8:
        half[-1] += 4
    gens.append(half)
    return gens


def frame_quotient_code(C: BinaryCode, m: Marking, twisted: bool) -> Z4Code:
    """Delta(L) = L / D1^d computed from lattice generators."""
    if C.n != m.d:
        raise ValueError("length mismatch between code and marking")
    if C.n % 8:
        raise ValueError("length must be a multiple of 8")
    if not parity_predicates(C)["is_doubly_even"]:
        raise ValueError("code must be doubly-even")
    rows = [_frame_coords(V, m) for V in lattice_generators(C, twisted)]
    ech = z4_echelon(rows, C.n)
    return Z4Code(C.n, [r for _, _, r in ech], None, ech)


def same_code(A: Z4Code, B: Z4Code) -> bool:
    """Equality as sets: equal size and each spanning element of A lies in B."""
    if A.n != B.n or A.cardinality() != B.cardinality():
        return False
    return all(B.contains(r) for r in A.generators)


@dataclass
class LatticeModel:
    delta: Z4Code

    @property
    def rank(self) -> int:
        return self.delta.n


def lattice_predicates(L: LatticeModel | Z4Code) -> dict:
    delta = L.delta if isinstance(L, LatticeModel) else L
    pred = z4_predicates(delta)
    p = delta.swe()
    ew = [r + 4 * s for (_, r, s) in p.terms if (r, s) != (0, 0)]
    min_norm = Fraction(4)
    if ew:
        min_norm = min(min_norm, Fraction(min(ew), 4))
    return {
        "is_even": pred["even"],
        "is_self_dual": pred["self_annihilating"],
        "min_norm": min_norm,
    }
