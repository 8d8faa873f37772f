"""Numba implementations of the hot numeric kernels.

Twin module of `_np_kernels`: identical formulas, explicit loops under
@njit. Importing this module requires numba; `backend` falls back to the
numpy twin when it is missing or disabled.
"""

import math

import numpy as np
from numba import njit

from ._coeffs import (
    EM_COEF,
    EM_COEF_DIGAMMA,
    LOG_2PI,
    LOG_PI,
    STIRLING_COEF,
    STIRLING_RADIUS,
)

BACKEND_NAME = "numba"

_LOG_2 = math.log(2.0)


@njit(cache=True)
def _loggamma_one(z):
    # conjugate symmetry -> upper half-plane
    neg = z.imag < 0.0
    if neg:
        z = np.conj(z)
    refl = z.real < 0.5
    zz = z
    if refl:
        z = 1.0 - z

    acc = 0.0 + 0.0j
    while abs(z) < STIRLING_RADIUS:
        acc += np.log(z)
        z += 1.0

    base = (z - 0.5) * np.log(z) - z + 0.5 * LOG_2PI
    w = 1.0 / z
    w2 = w * w
    p = w
    ser = 0.0 + 0.0j
    for c in STIRLING_COEF:
        ser += c * p
        p *= w2
    base += ser - acc

    if refl:
        lsp = (0.5j * np.pi - _LOG_2) - 1j * np.pi * zz + np.log(1.0 - np.exp(2j * np.pi * zz))
        base = LOG_PI - lsp - base
    if neg:
        base = np.conj(base)
    return base


@njit(cache=True)
def _loggamma_flat(z, out):
    for i in range(z.size):
        out[i] = _loggamma_one(z[i])


def loggamma_many(z):
    z = np.ascontiguousarray(z, dtype=np.complex128)
    shape = z.shape
    flat = z.ravel()
    out = np.empty_like(flat)
    _loggamma_flat(flat, out)
    return out.reshape(shape)


@njit(cache=True)
def _hurwitz_grid_jit(s, q, nterms, order, vals, bound):
    m = s.size
    n = q.size
    pmin = q[0]
    for j in range(1, n):
        if q[j] < pmin:
            pmin = q[j]
    pmin += nterms
    for i in range(m):
        si = s[i]
        for j in range(n):
            qj = q[j]
            acc = 0.0 + 0.0j
            for k in range(nterms):
                acc += np.exp(-si * np.log(qj + k))
            P = qj + nterms
            pms = np.exp(-si * np.log(P))
            acc += pms * (P / (si - 1.0) + 0.5)
            u = 1.0 / P
            poch = si
            for jj in range(1, order + 1):
                acc += EM_COEF[jj - 1] * poch * pms * u
                poch = poch * (si + (2.0 * jj - 1.0)) * (si + 2.0 * jj)
                u = u / (P * P)
            vals[i, j] = acc
        # remainder bound for this row, at the smallest P
        sig = si.real
        expo = sig + 2.0 * order + 1.0
        poch = si
        for jj in range(1, order + 1):
            poch = poch * (si + (2.0 * jj - 1.0)) * (si + 2.0 * jj)
        if expo > 0.0:
            ratio = abs(si + (2.0 * order + 1.0)) / expo
            bound[i] = abs(EM_COEF[order]) * abs(poch) * pmin ** (-expo) * ratio
        else:
            bound[i] = np.inf


def hurwitz_grid(s, q, nterms, order):
    s = np.ascontiguousarray(np.atleast_1d(s), dtype=np.complex128).ravel()
    q = np.ascontiguousarray(np.atleast_1d(q), dtype=np.float64).ravel()
    vals = np.empty((s.size, q.size), dtype=np.complex128)
    bound = np.empty(s.size, dtype=np.float64)
    _hurwitz_grid_jit(s, q, nterms, order, vals, bound)
    return vals, bound


@njit(cache=True)
def _digamma_neg_jit(q, nterms, order, out):
    for j in range(q.size):
        qj = q[j]
        acc = 0.0
        for k in range(nterms):
            acc += 1.0 / (qj + k)
        P = qj + nterms
        acc += -np.log(P) + 0.5 / P
        u = 1.0 / (P * P)
        for jj in range(1, order + 1):
            acc += EM_COEF_DIGAMMA[jj - 1] * u
            u = u / (P * P)
        out[j] = acc


def digamma_neg(q, nterms, order):
    q = np.ascontiguousarray(np.atleast_1d(q), dtype=np.float64).ravel()
    out = np.empty(q.size, dtype=np.float64)
    _digamma_neg_jit(q, nterms, order, out)
    return out


@njit(cache=True)
def _lattice_sum_jit(om_re, om_im, rmax, s):
    r2 = rmax * rmax
    nmax = int(math.floor(rmax / om_im)) + 1
    total = 0.0 + 0.0j
    real_s = s.imag == 0.0
    sr = s.real
    for n in range(-nmax, nmax + 1):
        c = n * om_re
        y2 = (n * om_im) ** 2
        if y2 > r2:
            continue
        half = math.sqrt(r2 - y2)
        mlo = int(math.ceil(-c - half))
        mhi = int(math.floor(-c + half))
        for mm in range(mlo, mhi + 1):
            norm2 = (mm + c) ** 2 + y2
            if norm2 <= 0.0 or norm2 > r2:
                continue
            if real_s:
                total += norm2 ** (-sr)
            else:
                total += np.exp(-s * np.log(norm2))
    return total


def lattice_sum(om_re, om_im, rmax, s):
    return complex(_lattice_sum_jit(float(om_re), float(om_im), float(rmax), complex(s)))
