"""Values transcribed from the printed tables, plus a tiny parser for them.

Entries known to be misprinted are kept verbatim in ``*_MISPRINTS`` next to
the value the independent oracles produce.
"""

from __future__ import annotations

import re
from fractions import Fraction

from hermkp.polyalg import NPoly, rising_product

_TERM = re.compile(r"([+-]?)(?:\((\d+)/(\d+)\)|(\d+)(?:/(\d+))?)?(N(?:\^\{?(\d+)\}?)?)?")


def poly(text: str) -> NPoly:
    """Parse '2N^3+N', '(1/2)N^2-N', '16796N^{11}+59520825N', '0'."""
    text = text.replace(" ", "")
    out: dict[int, Fraction] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        pos = m.end()
        sign, pn, pd, n, d, var, deg = m.groups()
        if pn:
            c = Fraction(int(pn), int(pd))
        elif n:
            c = Fraction(int(n), int(d) if d else 1)
        else:
            c = Fraction(1)
        if sign == "-":
            c = -c
        k = 0 if not var else (int(deg) if deg else 1)
        out[k] = out.get(k, Fraction(0)) + c
    return NPoly(out)


def factored(scalar: Fraction, shifts: list[int]) -> NPoly:
    """scalar * prod (N + s) for s in shifts."""
    out = NPoly.constant(scalar)
    for s in shifts:
        out = out * rising_product(s, s)
    return out


# <p_lambda> / z_lambda in degrees 2 and 4: (lambda, gs exponent, value)
DEGREE_2_4_OVER_Z = [
    ((2,), 0, "(1/2)N^2"),
    ((1, 1), -1, "(1/2)N"),
    ((3, 1), 0, "N^2"),
    ((2, 2), 0, "(1/4)N^2+(1/8)N^4"),
    ((2, 1, 1), -1, "(1/2)N+(1/4)N^3"),
    ((1, 1, 1, 1), -2, "(1/8)N^2"),
]
# printed as (1/2 N^3 + 1/2 N) g_s; the worked Wick computation and the 't Hooft
# table both give (1/2 N^3 + 1/4 N) g_s
DEGREE_4_MISPRINTS = {(4,): ("(1/2)N^3+(1/2)N", "(1/2)N^3+(1/4)N")}
P4 = ((4,), 1, "N+2N^3")

DEGREE_6 = [
    ((6,), 2, "10N^2+5N^4"),
    ((5, 1), 1, "5N+10N^3"),
    ((4, 2), 1, "4N+9N^3+2N^5"),
    ((4, 1, 1), 0, "13N^2+2N^4"),
    ((3, 3), 1, "3N+12N^3"),
    ((3, 2, 1), 0, "12N^2+3N^4"),
    ((3, 1, 1, 1), -1, "6N+9N^3"),
    ((2, 2, 2), 0, "8N^2+6N^4+N^6"),
    ((2, 2, 1, 1), -1, "8N+6N^3+N^5"),
    ((2, 1, 1, 1, 1), -2, "12N^2+3N^4"),
    ((1, 1, 1, 1, 1, 1), -3, "15N^3"),
]

SCHUR = [
    ((2,), Fraction(1, 2), [0, 1]),
    ((1, 1), Fraction(-1, 2), [0, -1]),
    ((4,), Fraction(1, 8), [0, 1, 2, 3]),
    ((3, 1), Fraction(-1, 8), [0, 1, 2, -1]),
    ((2, 2), Fraction(1, 4), [0, 0, 1, -1]),
    ((2, 1, 1), Fraction(-1, 8), [0, 1, -1, -2]),
    ((1, 1, 1, 1), Fraction(1, 8), [0, -1, -2, -3]),
    ((6,), Fraction(1, 48), [0, 1, 2, 3, 4, 5]),
    ((5, 1), Fraction(-1, 48), [0, 1, 2, 3, 4, -1]),
    ((4, 2), Fraction(1, 16), [0, 1, 2, 3, -1, 0]),
    ((4, 1, 1), Fraction(-1, 24), [0, 1, 2, 3, -1, -2]),
    ((3, 3), Fraction(-1, 16), [0, 1, 2, -1, 0, 1]),
    ((3, 2, 1), Fraction(0), []),
    ((3, 1, 1, 1), Fraction(1, 24), [0, 1, 2, -1, -2, -3]),
    ((2, 2, 2), Fraction(1, 16), [0, 1, -1, 0, -2, -1]),
    ((2, 2, 1, 1), Fraction(-1, 16), [0, 1, -1, 0, -2, -3]),
    ((2, 1, 1, 1, 1), Fraction(1, 48), [0, 1, -1, -2, -3, -4]),
    ((1, 1, 1, 1, 1, 1), Fraction(-1, 48), [0, -1, -2, -3, -4, -5]),
]

# free energy: coefficient of g_lambda
FREE_ENERGY = [
    ((2,), 0, "(1/2)N^2"),
    ((1, 1), -1, "(1/2)N"),
    ((4,), 1, "(1/2)N^3+(1/4)N"),
    ((3, 1), 0, "N^2"),
    ((2, 2), 0, "(1/4)N^2"),
    ((2, 1, 1), -1, "(1/2)N"),
    ((6,), 2, "(5/3)N^2+(5/6)N^4"),
    ((5, 1), 1, "N+2N^3"),
    ((4, 2), 1, "(1/2)N+N^3"),
    ((4, 1, 1), 0, "(3/2)N^2"),
    ((3, 3), 1, "(1/6)N+(2/3)N^3"),
    ((3, 2, 1), 0, "2N^2"),
    ((3, 1, 1, 1), -1, "(1/3)N"),
    ((2, 2, 2), 0, "(1/6)N^2"),
    ((2, 2, 1, 1), -1, "(1/2)N"),
]

# 't Hooft forms: (lambda, {(t_exp, gs_exp): coefficient})
THOOFT = [
    ((2,), {(2, -2): 1}),
    ((1, 1), {(1, -2): 1}),
    ((4,), {(1, 0): 1, (3, -2): 2}),
    ((3, 1), {(2, -2): 3}),
    ((2, 2), {(2, -2): 2, (4, -4): 1}),
    ((1, 1, 1, 1), {(2, -4): 3}),
    ((6,), {(2, 0): 10, (4, -2): 5}),
    ((5, 1), {(1, 0): 5, (3, -2): 10}),
    ((4, 2), {(1, 0): 4, (3, -2): 9, (5, -4): 2}),
    ((4, 1, 1), {(2, -2): 13, (4, -4): 2}),
    ((3, 3), {(1, 0): 3, (3, -2): 12}),
    ((3, 2, 1), {(2, -2): 12, (4, -4): 3}),
    ((3, 1, 1, 1), {(1, -2): 6, (3, -4): 9}),
    ((2, 2, 2), {(2, -2): 8, (4, -4): 6, (6, -6): 1}),
    ((2, 2, 1, 1), {(1, -2): 8, (3, -4): 6, (5, -6): 1}),
    ((2, 1, 1, 1, 1), {(2, -4): 12, (4, -6): 3}),
    ((1, 1, 1, 1, 1, 1), {(3, -6): 15}),
]
# printed "2t g_s^-2 + t^3 g_s^2" for <p_2 p_1^2>; N = t/g_s forces t^3 g_s^-4
THOOFT_MISPRINTS = {(2, 1, 1): ({(1, -2): 2, (3, 2): 1}, {(1, -2): 2, (3, -4): 1})}

# A(xi, eta): (p, q, scalar, k, l) meaning scalar [N]_k^l xi^(-p-1) eta^(-q-1)
A_EXPANSION = [
    (0, 1, Fraction(1, 2), 0, 1),
    (1, 0, Fraction(1, 2), -1, 0),
    (0, 3, Fraction(1, 8), 0, 3),
    (1, 2, Fraction(1, 8), -1, 2),
    (2, 1, Fraction(-1, 8), -2, 1),
    (3, 0, Fraction(-1, 8), -3, 0),
    (0, 5, Fraction(1, 48), 0, 5),
    (1, 4, Fraction(1, 48), -1, 4),
    (3, 2, Fraction(-1, 24), -3, 2),
    (4, 1, Fraction(1, 48), -4, 1),
    (5, 0, Fraction(1, 48), -5, 0),
]
# printed "-1/24 [N]_{-2}^2 xi^-3 eta^-4"; the product needs 2n = 6 factors
A_MISPRINTS = {(2, 3): ((Fraction(-1, 24), -2, 2), (Fraction(-1, 24), -2, 3))}

G1 = [
    (3, "N^2"),
    (5, "2N^3+N"),
    (7, "5N^4+10N^2"),
    (9, "14N^5+70N^3+21N"),
    (11, "42N^6+420N^4+483N^2"),
    (13, "132N^7+2310N^5+6468N^3+1485N"),
    (15, "429N^8+12012N^6+66066N^4+56628N^2"),
    (17, "1430N^9+60060N^7+570570N^5+1169740N^3+225225N"),
    (19, "4862N^10+291720N^8+4390386N^6+17454580N^4+12317877N^2"),
    (21, "16796N^11+1385670N^9+31039008N^7+211083730N^5+351683046N^3+59520825N"),
]

# two-point function: ((a, b), value) for x^-a y^-b (and the mirror image)
G2 = [
    ((2, 2), "N"),
    ((4, 2), "3N^2"),
    ((3, 3), "2N^2"),
    ((6, 2), "10N^3+5N"),
    ((5, 3), "8N^3+4N"),
    ((4, 4), "12N^3+3N"),
    ((8, 2), "35N^4+70N^2"),
    ((7, 3), "30N^4+60N^2"),
    ((6, 4), "45N^4+60N^2"),
    ((5, 5), "36N^4+60N^2"),
    ((10, 2), "126N^5+630N^3+189N"),
    ((9, 3), "112N^5+560N^3+168N"),
    ((8, 4), "168N^5+630N^3+147N"),
    ((7, 5), "144N^5+600N^3+156N"),
    ((6, 6), "180N^5+600N^3+165N"),
    ((12, 2), "462N^6+4620N^4+5313N^2"),
    ((11, 3), "420N^6+4200N^4+4830N^2"),
    ((10, 4), "630N^6+5040N^4+4725N^2"),
    ((8, 6), "700N^6+4900N^4+4795N^2"),
    ((7, 7), "600N^6+4800N^4+4770N^2"),
    ((14, 2), "1716N^7+30030N^5+84084N^3+19305N"),
    ((13, 3), "77616N^3+1584N^7+27720N^5+17820N"),
    ((12, 4), "2376N^7+34650N^5+81774N^3+16335N"),
    ((11, 5), "2160N^7+32760N^5+80640N^3+16740N"),
    ((10, 6), "2700N^7+34650N^5+80640N^3+17145N"),
    ((9, 7), "2400N^7+33600N^5+80640N^3+16920N"),
    ((8, 8), "2800N^7+34300N^5+81340N^3+16695N"),
    ((16, 2), "6435N^8+180180N^6+990990N^4+849420N^2"),
    ((15, 3), "6006N^8+168168N^6+924924N^4+792792N^2"),
    ((14, 4), "9009N^8+216216N^6+1027026N^4+774774N^2"),
    ((13, 5), "8316N^8+205128N^6+1003464N^4+778932N^2"),
    ((12, 6), "10395N^8+221760N^6+1011780N^4+783090N^2"),
    ((11, 7), "9450N^8+214200N^6+1008000N^4+781200N^2"),
    ((10, 8), "11025N^8+220500N^6+1014300N^4+781200N^2"),
    ((9, 9), "9800N^8+215600N^6+1009400N^4+781200N^2"),
    ((18, 2), "24310N^9+1021020N^7+9699690N^5+19885580N^3+3828825N"),
    ((17, 3), "22880N^9+960960N^7+9129120N^5+18715840N^3+3603600N"),
    ((16, 4), "34320N^9+1261260N^7+10540530N^5+19244940N^3+3378375N"),
    ((15, 5), "32032N^9+1201200N^7+10258248N^5+19139120N^3+3423420N"),
    ((14, 6), "40040N^9+1321320N^7+10480470N^5+19149130N^3+3468465N"),
    ((13, 7), "36960N^9+1275120N^7+10395000N^5+19145280N^3+3451140N"),
    ((12, 8), "43120N^9+1325940N^7+10461990N^5+19194560N^3+3433815N"),
    ((11, 9), "39200N^9+1293600N^7+10419360N^5+19163200N^3+3444840N"),
    ((10, 10), "44100N^9+1323000N^7+10478160N^5+19158300N^3+3455865N"),
]
G2_MISPRINTS = {(9, 5): ("560N^6+4760N^4+4760", "560N^6+4760N^4+4760N^2")}

G3 = [
    ((3, 2, 2), "2N"),
    ((5, 2, 2), "12N^2"),
    ((4, 3, 2), "12N^2"),
    ((3, 3, 3), "8N^2"),
    ((7, 2, 2), "60N^3+30N"),
    ((6, 3, 2), "60N^3+30N"),
    ((5, 4, 2), "72N^3+24N"),
    ((5, 3, 3), "48N^3+24N"),
    ((9, 2, 2), "280N^4+560N^2"),
    ((8, 3, 2), "280N^4+560N^2"),
    ((7, 4, 2), "360N^4+540N^2"),
    ((7, 3, 3), "240N^4+480N^2"),
    ((6, 5, 2), "360N^4+540N^2"),
    ((6, 4, 3), "360N^4+480N^2"),
    ((5, 5, 3), "288N^4+480N^2"),
    ((5, 4, 4), "432N^4+468N^2"),
    ((11, 2, 2), "1260N^5+6300N^3+1890N"),
    ((10, 3, 2), "1260N^5+6300N^3+1890N"),
    ((9, 4, 2), "1680N^5+6720N^3+1680N"),
    ((9, 3, 3), "1120N^5+5600N^3+1680N"),
    ((8, 5, 2), "1680N^5+6720N^3+1680N"),
    ((8, 4, 3), "1680N^5+6300N^3+1470N"),
    ((7, 6, 2), "1800N^5+6600N^3+1770N"),
    ((7, 5, 3), "1440N^5+6000N^3+1560N"),
    ((7, 4, 4), "2160N^5+6660N^3+1350N"),
    ((6, 6, 3), "1800N^5+6000N^3+1650N"),
    ((6, 5, 4), "2160N^5+6480N^3+1440N"),
    ((5, 5, 5), "1728N^5+6336N^3+1440N"),
]
G3_MISPRINTS = {(4, 4, 3): ("72N^3+24N", "72N^3+18N")}

# the n-point examples listed right after the definition of G^(n)
NPOINT_LISTING = {
    1: [((3,), "N^2"), ((5,), "2N^3+N"), ((7,), "10N^2+5N^4")],
    2: [((2, 2), "N"), ((2, 4), "3N^2"), ((3, 3), "2N^2"), ((2, 6), "5N+10N^3"),
        ((3, 5), "4N+8N^3"), ((4, 4), "3N+12N^3")],
    3: [((2, 2, 3), "2N"), ((2, 2, 5), "12N^2"), ((2, 3, 4), "12N^2"), ((3, 3, 3), "8N^2")],
}
