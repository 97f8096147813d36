"""Permutation groups: Schreier-Sims, orbits, stabilizers, code automorphisms.

Permutations are tuples of 0-based images.  Products read left to right:
``mul(p, q)`` applies p first, then q.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Hashable, Iterable, Sequence

from .codes import BinaryCode, SizeError

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(q[i] for i in p)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


def from_images(images: Sequence[int], one_based: bool = True) -> Perm:
    p = tuple(int(x) - 1 for x in images) if one_based else tuple(int(x) for x in images)
    if sorted(p) != list(range(len(p))):
        raise ValueError("not a permutation")
    return p


def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Perm:
    """Build from 1-based cycles."""
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            img[a - 1] = b - 1
    return from_images(img, one_based=False)


class PermGroup:
    """Group generated by permutations, with a lazily built base and strong generating set."""

    def __init__(self, degree: int, gens: Iterable[Perm] = ()):
        self.degree = degree
        self.gens: list[Perm] = []
        for g in gens:
            g = tuple(g)
            if len(g) != degree:
                raise ValueError("generator degree mismatch")
            if not is_identity(g):
                self.gens.append(g)
        self._base: list[int] | None = None
        self._levels: list[list[Perm]] = []
        self._trans: list[dict[int, Perm]] = []
        self._itrans: list[dict[int, Perm]] = []

    # BSGS -------------------------------------------------------------
    def _orbit_transversal(self, level: int) -> None:
        b = self._base[level]
        gens = self._levels[level]
        trans = {b: identity(self.degree)}
        queue = [b]
        for x in queue:
            ux = trans[x]
            for s in gens:
                y = s[x]
                if y not in trans:
                    trans[y] = mul(ux, s)
                    queue.append(y)
        self._trans[level] = trans
        self._itrans[level] = {x: inverse(u) for x, u in trans.items()}

    def _strip(self, g: Perm, start: int) -> tuple[Perm, int]:
        for lv in range(start, len(self._base)):
            x = g[self._base[lv]]
            if x not in self._trans[lv]:
                return g, lv
            g = mul(g, self._itrans[lv][x])
        return g, len(self._base)

    def _new_level(self, g: Perm) -> None:
        moved = next(i for i in range(self.degree) if g[i] != i and i not in self._base)
        self._base.append(moved)
        self._levels.append([])
        self._trans.append({})
        self._itrans.append({})

    def _build(self) -> None:
        if self._base is not None:
            return
        self._base = []
        self._levels, self._trans, self._itrans = [], [], []
        for g in self.gens:
            if all(g[b] == b for b in self._base):
                self._new_level(g)
        for lv in range(len(self._base)):
            self._levels[lv] = [g for g in self.gens if all(g[b] == b for b in self._base[:lv])]
            self._orbit_transversal(lv)
        i = len(self._base) - 1
        while i >= 0:
            jumped = False
            trans, itrans = self._trans[i], self._itrans[i]
            for x in list(trans):
                ux = trans[x]
                for s in self._levels[i]:
                    y = s[x]
                    h = mul(mul(ux, s), itrans[y])
                    if is_identity(h):
                        continue
                    h2, j = self._strip(h, i + 1)
                    if j == len(self._base) and is_identity(h2):
                        continue
                    if j == len(self._base):
                        self._new_level(h2)
                    for lv in range(i + 1, j + 1):
                        self._levels[lv].append(h2)
                        self._orbit_transversal(lv)
                    i = j
                    jumped = True
                    break
                if jumped:
                    break
            if not jumped:
                i -= 1

    # queries ------------------------------------------------------------
    def order(self) -> int:
        self._build()
        o = 1
        for t in self._trans:
            o *= len(t)
        return o

    def base(self) -> list[int]:
        self._build()
        return list(self._base)

    def basic_orbit_lengths(self) -> list[int]:
        self._build()
        return [len(t) for t in self._trans]

    def strong_generators(self) -> list[Perm]:
        self._build()
        seen = []
        for lv in self._levels:
            for g in lv:
                if g not in seen:
                    seen.append(g)
        return seen

    def __contains__(self, g: Perm) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        self._build()
        h, j = self._strip(g, 0)
        return j == len(self._base) and is_identity(h)

    def orbit(self, point: Hashable, action: Callable[[Perm, Hashable], Hashable] | None = None,
              cap: int = 10**7) -> list:
        """BFS orbit of a point; ``action(perm, point)`` must return canonical points."""
        act = action or (lambda g, x: g[x])
        seen = {point}
        queue = [point]
        for x in queue:
            for g in self.gens:
                y = act(g, x)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
                    if len(queue) > cap:
                        raise SizeError(f"orbit exceeds cap {cap}")
        return queue

    def stabilizer_order(self, point, action=None, cap: int = 10**7) -> int:
        return self.order() // len(self.orbit(point, action, cap))

    def stabilizer(self, point, action=None, cap: int = 10**7) -> "PermGroup":
        """Stabilizer subgroup via Schreier generators, stopping at the orbit-stabilizer order."""
        act = action or (lambda g, x: g[x])
        trans = {point: identity(self.degree)}
        queue = [point]
        for x in queue:
            for g in self.gens:
                y = act(g, x)
                if y not in trans:
                    trans[y] = mul(trans[x], g)
                    queue.append(y)
                    if len(queue) > cap:
                        raise SizeError(f"orbit exceeds cap {cap}")
        target = self.order() // len(queue)
        H = PermGroup(self.degree)
        if target == 1:
            return H
        for x in queue:
            ux = trans[x]
            for g in self.gens:
                y = act(g, x)
                h = mul(mul(ux, g), inverse(trans[y]))
                if is_identity(h) or h in H:
                    continue
                H = PermGroup(self.degree, H.gens + [h])
                if H.order() == target:
                    return H
        raise ArithmeticError("stabilizer generation did not reach the expected order")


# ---------------------------------------------------------------------------
# Automorphisms of binary codes
# ---------------------------------------------------------------------------


class SearchLimitError(RuntimeError):
    """Backtrack node budget exhausted; ``partial`` holds the generators found so far."""

    def __init__(self, msg: str, partial: list[Perm]):
        super().__init__(msg)
        self.partial = partial


class _Refiner:
    """Colour refinement of coordinates against an invariant block system."""

    def __init__(self, n: int, blocks: Sequence[int]):
        self.n = n
        self.blocks = [[i for i in range(n) if (b >> i) & 1] for b in blocks]
        self.incidence = [[] for _ in range(n)]
        for bi, pts in enumerate(self.blocks):
            for p in pts:
                self.incidence[p].append(bi)

    def refine(self, seq: Sequence[int]):
        colour = [0] * self.n
        for t, p in enumerate(seq):
            colour[p] = t + 1
        trace = []
        ncol = len(set(colour))
        while True:
            bsig = [tuple(sorted(colour[p] for p in pts)) for pts in self.blocks]
            branks = {s: r for r, s in enumerate(sorted(set(bsig)))}
            bcol = [branks[s] for s in bsig]
            psig = [(colour[p], tuple(sorted(Counter(bcol[b] for b in self.incidence[p]).items())))
                    for p in range(self.n)]
            uniq = sorted(set(psig))
            ranks = {s: r for r, s in enumerate(uniq)}
            trace.append(tuple((s, c) for s, c in sorted(Counter(psig).items())))
            colour = [ranks[s] for s in psig]
            if len(uniq) == ncol:
                break
            ncol = len(uniq)
        return colour, tuple(trace)


def code_automorphisms(code: BinaryCode, node_limit: int = 200000) -> PermGroup:
    """Full coordinate-permutation automorphism group of a binary code.

    Backtracking over base images, pruned by colour refinement against the
    minimum-weight codewords and by orbits of the automorphisms already found.
    """
    n = code.n
    dist = code.weight_distribution()
    nz = sorted(w for w in dist if w)
    blocks = []
    if nz:
        wmin = nz[0]
        blocks = [int(w) for w in code.codeword_array() if int(w).bit_count() == wmin]
    ref = _Refiner(n, blocks)
    gens: list[Perm] = []
    nodes = [0]

    def leaf_perm(cl, cr):
        pos = {c: y for y, c in enumerate(cr)}
        return tuple(pos[c] for c in cl)

    def search(left: list[int], right: list[int]):
        nodes[0] += 1
        if nodes[0] > node_limit:
            raise SearchLimitError("automorphism search node limit reached", list(gens))
        cl, tl = ref.refine(left)
        cr, tr = ref.refine(right)
        if tl != tr:
            return None
        if len(set(cl)) == n:
            p = leaf_perm(cl, cr)
            return p if code.is_preserved_by(p) else None
        cnt = Counter(cl)
        col = min(c for c in cnt if cnt[c] > 1)
        x = min(i for i in range(n) if cl[i] == col)
        for y in (i for i in range(n) if cr[i] == col):
            res = search(left + [x], right + [y])
            if res is not None:
                return res
        return None

    # base and candidate cells from the identity branch
    base: list[int] = []
    cells: list[list[int]] = []
    while True:
        colour, _ = ref.refine(base)
        if len(set(colour)) == n:
            break
        cnt = Counter(colour)
        col = min(c for c in cnt if cnt[c] > 1)
        cell = [i for i in range(n) if colour[i] == col]
        base.append(cell[0])
        cells.append(cell)

    for lv in range(len(base) - 1, -1, -1):
        prefix = base[:lv]
        b = base[lv]
        sub = [g for g in gens if all(g[p] == p for p in prefix)]
        orb = set(PermGroup(n, sub).orbit(b))
        for y in cells[lv]:
            if y in orb:
                continue
            p = search(prefix + [b], prefix + [y])
            if p is not None:
                gens.append(p)
                sub.append(p)
                orb = set(PermGroup(n, sub).orbit(b))
    return PermGroup(n, gens)


def read_perm_file(text: str) -> list[Perm]:
    perms = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            perms.append(from_images(line.split()))
    return perms


def write_perm_file(perms: Iterable[Perm]) -> str:
    return "".join(" ".join(str(i + 1) for i in p) + "\n" for p in perms)


def _block_perm(f: Callable[[int, int], tuple[int, int]], blocks: int = 3, size: int = 16) -> Perm:
    """Permutation of blocks*size points from a map (block, t) -> (block', t')."""
    images = [0] * (blocks * size)
    for b in range(blocks):
        for t in range(size):
            b2, t2 = f(b, t)
            images[b * size + t] = b2 * size + t2
    return tuple(images)


def moonshine_aut_generators() -> list[Perm]:
    """Translations inside each 16-block, diagonal GL(4,2) transvections, and
    the block permutations (1 2) and (1 2 3), on 48 points."""
    gens = []
    for blk in range(3):
        for j in range(4):
            gens.append(_block_perm(lambda b, t, blk=blk, j=j: (b, t ^ (1 << j) if b == blk else t)))
    for i in range(4):
        for j in range(4):
            if i != j:
                gens.append(_block_perm(lambda b, t, i=i, j=j: (b, t ^ (((t >> i) & 1) << j))))
    gens.append(_block_perm(lambda b, t: ({0: 1, 1: 0}.get(b, b), t)))
    gens.append(_block_perm(lambda b, t: ((b + 1) % 3, t)))
    return gens


def moonshine_aut_subgroup() -> PermGroup:
    """A subgroup 2^12 (GL(4,2) x Sym_3) of Aut of the length-48 code C = D^perp."""
    from .constructions import ConstructionBug, moonshine_c

    C = moonshine_c()
    gens = moonshine_aut_generators()
    for g in gens:
        if not C.is_preserved_by(g):
            raise ConstructionBug("generator does not preserve the length-48 code")
    return PermGroup(48, gens)
