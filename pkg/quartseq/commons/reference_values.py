"""Tabulated closed forms of both constructions, kept as text and compared
against the derived values by the consistency ledger.

Expressions are in the variable ``t`` and parse with
:func:`quartseq.algorithm.polyalg.parse_scalar`.
"""

# Half offset construction: P = Q^2 - R, Q = x^6 + q4 x^4 + q2 x^2 + q0.
Q_COEFFICIENTS = {
    4: "(-48*t**4 - 840*t**2 - 707)/16",
    2: "(768*t**8 + 8960*t**6 - 9184*t**4 - 322000*t**2 + 51331)/256",
    0: (
        "(-4096*t**12 + 71680*t**10 - 1994496*t**8 - 50973440*t**6"
        " - 251212528*t**4 - 260162280*t**2 - 50625)/4096"
    ),
}

_R_X2_FACTOR = (
    "(86016*t**14 + 6113280*t**12 + 71158528*t**10 + 145053440*t**8"
    " - 1767894864*t**6 - 8757574840*t**4 - 7679989163*t**2 + 1441328880)"
)

R_COEFFICIENTS = {
    4: (
        "9*t**2*(5376*t**10 + 779520*t**8 + 11657184*t**6 + 57509200*t**4"
        " + 95561365*t**2 + 36613360)/64"
    ),
    2: f"-9*t**2*{_R_X2_FACTOR}/512",
    0: (
        "9*t**2*(336*t**6 + 11320*t**4 + 54229*t**2 + 56560)"
        "*(4096*t**12 - 71680*t**10 + 1220352*t**8 + 24892160*t**6"
        " + 126268912*t**4 + 129848040*t**2 + 50625)/16384"
    ),
}

# Two-torsion model T^2 = S (S^2 + alpha S + beta).
ALPHA = f"9*t**2*{_R_X2_FACTOR}/256"
BETA = (
    "-243*t**4*(4*t**2 + 17)*(4*t**2 + 33)*(4*t**2 + 97)*(28*t**2 + 151)"
    "*(4*t**3 - 48*t**2 + t - 68)*(4*t**3 - 24*t**2 + 9*t - 26)"
    "*(4*t**3 + 24*t**2 + 9*t + 26)*(4*t**3 + 48*t**2 + t + 68)"
    "*(20*t**3 - 24*t**2 + 125*t - 10)*(20*t**3 + 24*t**2 + 125*t + 10)/1024"
)

SPECIALISATION_HALF_OFFSETS = "3/4"

# Fixed sequence construction: g^2 = lambda1 d^2 + lambda2 e^2 + lambda3 f^2.
_LAMBDA_DENOMINATOR = "(8*t**7 + 4*t**6 + 8*t**5 + 4*t**4 + 2*t**3 + t**2 + 2*t + 1)"
LAMBDAS = (
    (
        "3*(8*t**8 - 20*t**7 + 36*t**6 - 24*t**5 + 2*t**4 + 15*t**3 + 9*t**2"
        f" - 16*t - 10)/(t*{_LAMBDA_DENOMINATOR})"
    ),
    f"-3*(4*t**3 - 18*t**2 + 28*t - 15)*(2*t**4 - 2*t**3 + 7*t**2 - 2*t + 5)/{_LAMBDA_DENOMINATOR}",
    (
        "(4*t**3 - 18*t**2 + 28*t - 15)*(2*t**5 - 8*t**4 + 15*t**3 - 15*t**2 + 8*t - 2)"
        f"/(t*{_LAMBDA_DENOMINATOR})"
    ),
)

# q = rho w.
RHO = (
    "8*(20*t**6 - 54*t**5 + 130*t**4 - 219*t**3 + 257*t**2 - 132*t - 2)"
    "/(3*(48*t**6 - 96*t**5 + 420*t**4 - 496*t**3 + 756*t**2 - 312*t + 5))"
)

# h = H_PREFACTOR * (H_COEFFICIENTS["pp"] p^2 + H_COEFFICIENTS["pw"] p w + H_COEFFICIENTS["ww"] w^2).
H_PREFACTOR = (
    "(t - 1)*(2*t + 1)*(t**2 - 2*t + 2)*(2*t**2 + 2*t + 1)"
    "/(3*(2*t - 1)**2*(2*t**2 - 2*t + 5)*(12*t**3 - 6*t**2 + 60*t - 1)**2)"
)
H_COEFFICIENTS = {
    "pp": "9*(2*t - 1)**2*(2*t**2 - 2*t + 5)**2*(12*t**3 - 6*t**2 + 60*t - 1)**2",
    "pw": (
        "-96*t*(2*t - 1)*(t**2 + 4)*(2*t**2 - 2*t + 5)*(4*t**3 - 42*t**2 + 4*t - 31)"
        "*(12*t**3 - 6*t**2 + 60*t - 1)"
    ),
    "ww": (
        "-(2*t - 3)*(2*t**2 - 6*t + 5)*(1088*t**9 + 22944*t**8 + 13680*t**7"
        " + 179048*t**6 + 67104*t**5 + 400204*t**4 + 110908*t**3 + 211754*t**2"
        " - 2140*t - 15)"
    ),
}

# Jacobian y^2 = x^3 + a4 x + a6 of the k-quartic and its point, at t = 3.
SPECIALISATION_FIXED = "3"
JACOBIAN_AT_3 = {
    "a4": "-156217789162987774532352000000000000/40642963201",
    "a6": "22789637573454810302335707893243904000000000000000000/8193662024284801",
}
POINT_AT_3 = {
    "x": "19558022787408000000/201601",
    "y": "86476754780118743040000000000/90518849",
}
