"""Compile-time numeric tables shared by both kernel backends."""

from fractions import Fraction
import math

import numpy as np

EULER_GAMMA = 0.5772156649015328606065120900824024310421593359399
LOG_2PI = math.log(2.0 * math.pi)
LOG_PI = math.log(math.pi)

# Bernoulli numbers B_2, B_4, ..., B_32 as exact fractions.
_BERNOULLI = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
    Fraction(43867, 798), Fraction(-174611, 330), Fraction(854513, 138),
    Fraction(-236364091, 2730), Fraction(8553103, 6), Fraction(-23749461029, 870),
    Fraction(8615841276005, 14322), Fraction(-7709321041217, 510),
]

# B_{2j} / (2j)!  for the Euler-Maclaurin correction terms (j = 1..16).
EM_COEF = np.array(
    [float(b / math.factorial(2 * (j + 1))) for j, b in enumerate(_BERNOULLI)],
    dtype=np.float64,
)

# B_{2j} / (2j)  for the digamma-style regularized sum (j = 1..16).
EM_COEF_DIGAMMA = np.array(
    [float(b / (2 * (j + 1))) for j, b in enumerate(_BERNOULLI)],
    dtype=np.float64,
)

# B_{2j} / ((2j)(2j-1))  for the Stirling series of log-gamma (j = 1..14).
STIRLING_COEF = np.array(
    [float(b / ((2 * (j + 1)) * (2 * (j + 1) - 1))) for j, b in enumerate(_BERNOULLI[:14])],
    dtype=np.float64,
)

# |z| above which the Stirling series is applied directly.
STIRLING_RADIUS = 9.0

# Number of Euler-Maclaurin correction terms (index j runs 1..EM_ORDER);
# EM_COEF[EM_ORDER] feeds the remainder bound.
EM_ORDER = 12
