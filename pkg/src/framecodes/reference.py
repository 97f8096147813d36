"""Reference tables used as expected values by the verification suites and tests."""

from __future__ import annotations

from functools import lru_cache

from .polys import HomPoly, parse_poly

XYZ = ("x", "y", "z")
ABC = ("A", "B", "C")

# marking orbits of H8: (representative pairs, stabilizer order, orbit size, smwe)
HAMMING_ORBITS = {
    "alpha": ([(1, 2), (3, 4), (5, 6), (7, 8)], 192, 7, "x^4+6*x^2*z^2+z^4+8*y^4"),
    "beta": ([(1, 2), (3, 4), (5, 7), (6, 8)], 32, 42, "x^4+2*x^2*z^2+z^4+8*x*z*y^2+4*y^4"),
    "gamma": ([(1, 2), (3, 5), (4, 7), (6, 8)], 24, 56, "x^4+z^4+12*x*z*y^2+2*y^4"),
}

E8_SWE = {
    "K8": "A^8+28*A^2*C^6+70*A^4*C^4+28*A^6*C^2+C^8+128*B^8",
    "K8'": "A^8+C^8+12*A^2*C^2*(A^4+C^4)+38*A^4*C^4+64*A*C*(A^2+C^2)*B^4+64*B^8",
    "L8": "A^8+C^8+4*A^2*C^2*(A^4+C^4)+22*A^4*C^4+96*A*C*(A^2+C^2)*B^4+32*B^8",
    "O8": "A^8+C^8+14*A^4*C^4+112*A*C*(A^2+C^2)*B^4+16*B^8",
}

E8_ORBITS = {"K8": (5160960, 135), "K8'": (73728, 9450), "L8": (6144, 113400), "O8": (2688, 259200)}
W_E8_ORDER = 696729600

E8_POLYS = {
    "Gamma": (
        "a^16+b^16+120*(a^14*b^2+a^2*b^14)+1820*(a^12*b^4+a^4*b^12)"
        "+8008*(a^10*b^6+a^6*b^10)+12870*a^8*b^8+128*c^16"
    ),
    "Sigma": (
        "a^16+b^16+56*(a^14*b^2+a^2*b^14)+924*(a^12*b^4+a^4*b^12)"
        "+3976*(a^10*b^6+a^6*b^10)+6470*a^8*b^8"
        "+(128*(a^7*b+a*b^7)+896*(a^5*b^3+a^3*b^5))*c^8+64*c^16"
    ),
    "Psi": (
        "a^16+b^16+24*(a^14*b^2+a^2*b^14)+476*(a^12*b^4+a^4*b^12)"
        "+1960*(a^10*b^6+a^6*b^10)+3270*a^8*b^8"
        "+(192*(a^7*b+a*b^7)+1344*(a^5*b^3+a^3*b^5))*c^8+32*c^16"
    ),
    "Theta": (
        "a^16+b^16+8*(a^14*b^2+a^2*b^14)+252*(a^12*b^4+a^4*b^12)"
        "+952*(a^10*b^6+a^6*b^10)+1670*a^8*b^8"
        "+(224*(a^7*b+a*b^7)+1568*(a^5*b^3+a^3*b^5))*c^8+16*c^16"
    ),
    "Omega": (
        "a^16+b^16+140*(a^12*b^4+a^4*b^12)+448*(a^10*b^6+a^6*b^10)+870*a^8*b^8"
        "+(240*(a^7*b+a*b^7)+1680*(a^5*b^3+a^3*b^5))*c^8+8*c^16"
    ),
}

# case -> (kind, marking) pairs that realize it
E8_ORIGINS = {
    "Gamma": [("untwisted", "alpha")],
    "Sigma": [("untwisted", "beta"), ("twisted-lattice", "alpha"), ("twisted-voa", "alpha")],
    "Psi": [("untwisted", "gamma"), ("twisted-lattice", "beta"), ("twisted-voa", "beta"),
            ("double-twist", "alpha")],
    "Theta": [("twisted-lattice", "gamma"), ("twisted-voa", "gamma"), ("double-twist", "beta")],
    "Omega": [("double-twist", "gamma")],
}

GOLAY_SMWE = (
    "x^12+z^12+39*(x^4*z^8+x^8*z^4)+48*x^6*z^6"
    "+(96*(x^6*z^2+x^2*z^6)+192*x^4*z^4)*y^4"
    "+(576*(x^5*z+x*z^5)+1920*x^3*z^3)*y^6"
    "+(48*(x^4+z^4)+288*x^2*z^2)*y^8+128*y^12"
)
GOLAY_CM = (48, 576, 96, 0, 39)

LEECH_SWE = (
    "A^24+C^24+23439*(A^16*C^8+A^8*C^16)+4032*(A^6*C^18+A^18*C^6)"
    "+378*(A^4*C^20+A^20*C^4)+60480*(A^10*C^14+A^14*C^10)+85484*A^12*C^12"
    "+(3072*(A^2*C^14+A^14*C^2)+43008*(A^12*C^4+A^4*C^12)"
    "+193536*(A^10*C^6+A^6*C^10)+307200*A^8*C^8)*B^8"
    "+(86016*(A^11*C+A*C^11)+1576960*(A^9*C^3+A^3*C^9)+5677056*(A^7*C^5+A^5*C^7))*B^12"
    "+(6144*(A^8+C^8)+172032*(A^6*C^2+A^2*C^6)+430080*A^4*C^4)*B^16"
    "+262144*B^24"
)

MOONSHINE_POLY = (
    "a^48+b^48+3300*(a^44*b^4+a^4*b^44)+189504*(a^42*b^6+a^6*b^42)"
    "+5907810*(a^40*b^8+a^8*b^40)+102156864*(a^38*b^10+a^10*b^38)"
    "+1088684372*(a^36*b^12+a^12*b^36)+7535996160*(a^34*b^14+a^14*b^34)"
    "+35232581487*(a^32*b^16+a^16*b^32)+114215080192*(a^30*b^18+a^18*b^30)"
    "+261496913352*(a^28*b^20+a^20*b^28)+427898196864*(a^26*b^22+a^22*b^26)"
    "+503871835740*a^24*b^24"
    "+(6144*(a^30*b^2+a^2*b^30)+430080*(a^28*b^4+a^4*b^28)"
    "+10881024*(a^26*b^6+a^6*b^26)+126197760*(a^24*b^8+a^8*b^24)"
    "+774199296*(a^22*b^10+a^10*b^22)+2709417984*(a^20*b^12+a^12*b^20)"
    "+5657364480*(a^18*b^14+a^14*b^18)+7212810240*a^16*b^16)*c^16"
    "+(184320*(a^23*b+a*b^23)+15544320*(a^21*b^3+a^3*b^21)"
    "+326430720*(a^19*b^5+a^5*b^19)+2658078720*(a^17*b^7+a^7*b^17)"
    "+10041630720*(a^15*b^9+a^9*b^15)+19170385920*(a^13*b^11+a^11*b^13))*c^24"
    "+(3072*(a^16+b^16)+368640*(a^14*b^2+a^2*b^14)+5591040*(a^12*b^4+a^4*b^12)"
    "+24600576*(a^10*b^6+a^6*b^10)+39536640*a^8*b^8)*c^32"
    "+131072*c^48"
)

MOONSHINE_D_WEIGHTS = {0: 1, 16: 3, 24: 120, 32: 3, 48: 1}
MOONSHINE_AUT_ORDER = 495452160
M24_ORDER = 244823040
M_STAR_STABILIZER = 9216
M_STAR_ORBIT = 26565

# Reference N-table: (a, b, alpha, beta) -> {column: [(coeff_num, coeff_den, label)]}
# columns: "00", "11", "odd" (the (0,1) and (1,0) pairs); labels over 0, h (1/2), s (1/16)
_H = (1, 2)
PRINTED_N_TABLE = {}


def _fill(keys, c00, c11, codd):
    for k in keys:
        PRINTED_N_TABLE[k] = {"00": c00, "11": c11, "odd": codd}


_ssss = [(1, 2, "ssss")]
_fill([(0, 0, "+", "+")], [(1, 1, "0000"), (1, 1, "hhhh")], [(1, 1, "h000"), (1, 1, "0hhh")], _ssss)
_fill([(0, 0, "-", "+")], [(1, 1, "00hh"), (1, 1, "hh00")], [(1, 1, "h0hh"), (1, 1, "0h00")], _ssss)
_fill([(0, 0, "+", "-")], [(1, 1, "h0h0"), (1, 1, "0h0h")], [(1, 1, "00h0"), (1, 1, "hh0h")], _ssss)
_fill([(0, 0, "-", "-")], [(1, 1, "h00h"), (1, 1, "0hh0")], [(1, 1, "000h"), (1, 1, "hhh0")], _ssss)
_b = [(1, 2, "ss00"), (1, 2, "sshh")]
_fill([(0, 1, "+", "+"), (0, 1, "-", "+")], _b, _b, [(1, 2, "00ss"), (1, 2, "hhss")])
_b = [(1, 2, "ssh0"), (1, 2, "ss0h")]
_fill([(0, 1, "+", "-"), (0, 1, "-", "-")], _b, _b, [(1, 2, "h0ss"), (1, 2, "0hss")])
_b = [(1, 2, "s0s0"), (1, 2, "shsh")]
_fill([(1, 0, "+", "+"), (1, 0, "+", "-")], _b, _b, [(1, 2, "0s0s"), (1, 2, "hshs")])
_b = [(1, 2, "shs0"), (1, 2, "s0sh")]
_fill([(1, 0, "-", "+"), (1, 0, "-", "-")], _b, _b, [(1, 2, "hs0s"), (1, 2, "0shs")])
_b = [(1, 2, "0ss0"), (1, 2, "hssh")]
_fill([(1, 1, "+", "+"), (1, 1, "+", "-")], _b, _b, [(1, 2, "s00s"), (1, 2, "shhs")])
_b = [(1, 2, "hss0"), (1, 2, "0ssh")]
_fill([(1, 1, "-", "+"), (1, 1, "-", "-")], _b, _b, [(1, 2, "sh0s"), (1, 2, "s0hs")])
del _b, _H


@lru_cache(maxsize=None)
def poly(name: str) -> HomPoly:
    """Parsed reference polynomial by table name."""
    if name in E8_SWE:
        return parse_poly(E8_SWE[name], ABC)
    if name in E8_POLYS:
        return parse_poly(E8_POLYS[name])
    if name in HAMMING_ORBITS:
        return parse_poly(HAMMING_ORBITS[name][3], XYZ)
    if name == "golay_smwe":
        return parse_poly(GOLAY_SMWE, XYZ)
    if name == "leech_swe":
        return parse_poly(LEECH_SWE, ABC)
    if name == "moonshine":
        return parse_poly(MOONSHINE_POLY)
    raise KeyError(name)
