"""Named codes: Xi_3, the hexacode, the Golay code by double twist, Hamming
codes, the length-48 codes C and D, and the four E8 frame codes.

Four-group letters are 2-bit ints under XOR: for the hexacode alphabet
0, a, b, c -> 0, 1, 2, 3; for Xi_3 the letters 0, 1, s, sbar -> 0, 1, 2, 3
(so 1 + s = sbar).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .codes import BinaryCode, word_from_bits
from .markings import Marking

KLEIN = "0abc"
XI_ALPHABET = ("0", "1", "s", "S")  # S stands for s-bar


class ConstructionBug(AssertionError):
    pass


def klein_add(u, v):
    return tuple(a ^ b for a, b in zip(u, v))


def _closed(words: set) -> bool:
    return all(klein_add(u, v) in words for u in words for v in words)


def _parse(word: str, alphabet) -> tuple[int, ...]:
    return tuple(alphabet.index(ch) for ch in word)


@lru_cache(maxsize=None)
def xi3() -> frozenset:
    words = {_parse(w, XI_ALPHABET) for w in
             ("000", "s11", "1s1", "11s", "0SS", "S0S", "SS0", "sss")}
    if len(words) != 8 or not _closed(words):
        raise ConstructionBug("Xi_3 is not an additive code of size 8")
    return frozenset(words)


# Xi letter -> pair of four-group letters
_XI_TO_KLEIN = {0: (0, 0), 1: (1, 0), 2: (2, 2), 3: (3, 2)}


def _klein_twist(words, glue) -> set:
    """(images + even part of delta_2^h) united with its glue translate."""
    h = len(next(iter(words)))
    deltas = []
    for bits in product((0, 1), repeat=h):
        if sum(bits) % 2 == 0:
            deltas.append(tuple(x for b in bits for x in ((1, 1) if b else (0, 0))))
    out = set()
    for w in words:
        img = tuple(x for letter in w for x in _XI_TO_KLEIN[letter])
        for dl in deltas:
            v = klein_add(img, dl)
            out.add(v)
            out.add(klein_add(v, glue))
    return out


@lru_cache(maxsize=None)
def hexacode() -> frozenset:
    glue = _parse("b0b0ca", KLEIN)
    words = _klein_twist(xi3(), glue)
    if len(words) != 64 or not _closed(words):
        raise ConstructionBug("hexacode construction failed")
    return frozenset(words)


# four-group letter -> 4 bits.  Images of b and c are exchanged relative to
# the naive reading a->1100, b->1010, c->0110, which yields a [24,12,6] code.
_KLEIN_TO_BITS = {0: "0000", 1: "1100", 2: "0110", 3: "1010"}


@lru_cache(maxsize=None)
def golay24() -> BinaryCode:
    blocks = []
    for bits in product((0, 1), repeat=6):
        if sum(bits) % 2 == 0:
            blocks.append("".join("1111" if b else "0000" for b in bits))
    glue = word_from_bits("1000" * 5 + "0111")
    words = set()
    for h in hexacode():
        img = word_from_bits("".join(_KLEIN_TO_BITS[x] for x in h))
        for bl in blocks:
            v = img ^ word_from_bits(bl)
            words.add(v)
            words.add(v ^ glue)
    code = BinaryCode(24, words)
    if len(words) != 4096 or code.dim != 12:
        raise ConstructionBug("double twist did not give a [24,12] code")
    if any(w not in code for w in words):
        raise ConstructionBug("double twist is not linear")
    if code.min_weight() != 8 or code.all_ones() not in code or code.dual() != code:
        raise ConstructionBug("Golay code properties fail")
    return code


HAMMING8_GENERATORS = ("00001111", "00110011", "11000011", "01010101")


@lru_cache(maxsize=None)
def hamming8() -> BinaryCode:
    return BinaryCode.from_rows(HAMMING8_GENERATORS)


def counter_rows(m: int) -> list[str]:
    """Rows t -> bit j of t (most significant first) for t = 0..2^m-1."""
    n = 1 << m
    return ["".join(str((t >> j) & 1) for t in range(n)) for j in range(m - 1, -1, -1)]


@lru_cache(maxsize=None)
def extended_hamming(m: int) -> BinaryCode:
    if not 3 <= m <= 6:
        raise ValueError("m must lie in 3..6")
    n = 1 << m
    check = BinaryCode.from_rows(counter_rows(m) + ["1" * n])
    return check.dual()


MOONSHINE_D_ROWS = (
    "1" * 16 + "0" * 32,
    "0" * 16 + "1" * 16 + "0" * 16,
    "0" * 32 + "1" * 16,
    "0000000011111111" * 3,
    "0000111100001111" * 3,
    "0011001100110011" * 3,
    "0101010101010101" * 3,
)


@lru_cache(maxsize=None)
def moonshine_d() -> BinaryCode:
    return BinaryCode.from_rows(MOONSHINE_D_ROWS)


@lru_cache(maxsize=None)
def moonshine_c() -> BinaryCode:
    return moonshine_d().dual()


def h64_parity_rows() -> list[str]:
    """The 7 rows of moonshine D extended by a fourth 16-block."""
    rows = []
    for i, r in enumerate(MOONSHINE_D_ROWS):
        rows.append(r + ("1" * 16 if i < 3 else r[:16]))
    return rows


def shortened_h64() -> BinaryCode:
    return extended_hamming(6).shorten(range(49, 65))


# markings of H8 (orbit representatives) and of the Golay code
ALPHA = Marking([(1, 2), (3, 4), (5, 6), (7, 8)])
BETA = Marking([(1, 2), (3, 4), (5, 7), (6, 8)])
GAMMA = Marking([(1, 2), (3, 5), (4, 7), (6, 8)])
M_STAR = Marking.standard(24)

H8_MARKINGS = {"alpha": ALPHA, "beta": BETA, "gamma": GAMMA}


def e8_frame_codes() -> dict:
    """K8, K8', L8, O8 from the three H8 markings (untwisted and twisted)."""
    from .z4codes import gamma_code, gamma_twisted

    H = hamming8()
    return {
        "K8": gamma_code(H, ALPHA),
        "K8'": gamma_twisted(H, ALPHA),
        "L8": gamma_twisted(H, BETA),
        "O8": gamma_twisted(H, GAMMA),
    }
