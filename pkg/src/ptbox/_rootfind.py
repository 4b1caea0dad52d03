"""Argument-principle root localization on rectangles in the complex plane.

The machinery is shared by the spectrum solver (quantization residual) and the
EM cavity-mode solver. Contour integrals of f'/f are evaluated edge by edge
with 32-point Gauss-Legendre panels refined adaptively; rectangles are
subdivided until each holds a single zero, which Newton iteration then
polishes. Zeros of f are assumed simple (true generically here; a double root
only occurs at parameter catastrophes, where the callers raise beforehand).
"""

from __future__ import annotations

import numpy as np

from .errors import ContourOnZero

_GL32_NODES, _GL32_WEIGHTS = np.polynomial.legendre.leggauss(32)

# Fractions used to place subdivision lines; the first is the midpoint, the
# rest are deterministic fallbacks when a split line lands on a zero.
_SPLIT_FRACTIONS = (0.5, 0.53, 0.47, 0.56, 0.44, 0.515)


def newton_polish(f, df, z0, *, tol, max_iter=60):
    """Newton iteration from z0; returns the root or None on failure."""
    z = complex(z0)
    for _ in range(max_iter):
        fz = complex(f(z))
        if abs(fz) < tol:
            return z
        dfz = complex(df(z))
        if dfz == 0.0:
            return None
        step = fz / dfz
        z = z - step
        if not np.isfinite(z.real) or not np.isfinite(z.imag):
            return None
    return z if abs(complex(f(z))) < tol else None


def _segment(f, df, z0, z1, tol, zero_tol, depth=0):
    """Adaptive GL-32 integral of f'/f along the segment [z0, z1]."""
    mid = 0.5 * (z0 + z1)
    coarse = _segment_once(f, df, z0, z1, zero_tol)
    if depth >= 48:
        return coarse
    fine = (_segment_once(f, df, z0, mid, zero_tol)
            + _segment_once(f, df, mid, z1, zero_tol))
    if abs(fine - coarse) < tol:
        return fine
    return (_segment(f, df, z0, mid, 0.5 * tol, zero_tol, depth + 1)
            + _segment(f, df, mid, z1, 0.5 * tol, zero_tol, depth + 1))


def _segment_once(f, df, z0, z1, zero_tol):
    mid = 0.5 * (z0 + z1)
    half = 0.5 * (z1 - z0)
    z = mid + half * _GL32_NODES
    fz = np.asarray(f(z))
    dfz = np.asarray(df(z))
    dist = np.abs(fz) / np.maximum(np.abs(dfz), 1e-300)
    if np.any(dist < zero_tol):
        raise ContourOnZero(
            "winding contour passes within %.1e of a zero" % zero_tol)
    return half * np.sum(_GL32_WEIGHTS * dfz / fz)


def winding_number(f, df, rect, *, zero_tol=1e-9, tol=1e-6):
    """Number of zeros of f inside rect = (re_lo, re_hi, im_lo, im_hi)."""
    re_lo, re_hi, im_lo, im_hi = rect
    corners = [complex(re_lo, im_lo), complex(re_hi, im_lo),
               complex(re_hi, im_hi), complex(re_lo, im_hi),
               complex(re_lo, im_lo)]
    total = 0.0 + 0.0j
    for z0, z1 in zip(corners[:-1], corners[1:]):
        total += _segment(f, df, z0, z1, tol, zero_tol)
    w = total / (2.0j * np.pi)
    n = int(round(w.real))
    if abs(w - n) > 0.2:
        raise ContourOnZero(
            "winding integral %.3g%+.3gi did not settle on an integer"
            % (w.real, w.imag))
    return n


def _split(rect, fr_re, fr_im):
    re_lo, re_hi, im_lo, im_hi = rect
    rm = re_lo + fr_re * (re_hi - re_lo)
    im = im_lo + fr_im * (im_hi - im_lo)
    return [(re_lo, rm, im_lo, im), (rm, re_hi, im_lo, im),
            (re_lo, rm, im, im_hi), (rm, re_hi, im, im_hi)]


def _locate_single(f, df, rect, newton_tol):
    """Polish the unique zero inside rect."""
    re_lo, re_hi, im_lo, im_hi = rect
    center = complex(0.5 * (re_lo + re_hi), 0.5 * (im_lo + im_hi))
    root = newton_polish(f, df, center, tol=newton_tol)
    if root is not None and _inside(root, rect, slack=1e-9):
        return root
    # fall back to the best grid point inside the rectangle
    gr = np.linspace(re_lo, re_hi, 9)[1:-1]
    gi = np.linspace(im_lo, im_hi, 9)[1:-1]
    zz = (gr[:, None] + 1j * gi[None, :]).ravel()
    seed = zz[np.argmin(np.abs(np.asarray(f(zz))))]
    root = newton_polish(f, df, seed, tol=newton_tol)
    if root is not None and _inside(root, rect, slack=1e-9):
        return root
    return None


def _inside(z, rect, slack=0.0):
    re_lo, re_hi, im_lo, im_hi = rect
    return (re_lo - slack <= z.real <= re_hi + slack
            and im_lo - slack <= z.imag <= im_hi + slack)


def roots_in_rectangle(f, df, rect, *, zero_tol=1e-9, newton_tol=1e-12,
                       _depth=0):
    """All zeros of f strictly inside rect, via winding + subdivision."""
    if _depth > 40:
        raise RuntimeError("rectangle subdivision exceeded depth 40")
    w = winding_number(f, df, rect, zero_tol=zero_tol)
    if w == 0:
        return []
    if w == 1:
        root = _locate_single(f, df, rect, newton_tol)
        if root is not None:
            return [root]
        # root evaded Newton (near an edge): subdivide instead
    last_err = None
    for fr in _SPLIT_FRACTIONS:
        try:
            found = []
            for child in _split(rect, fr, fr):
                found.extend(roots_in_rectangle(
                    f, df, child, zero_tol=zero_tol,
                    newton_tol=newton_tol, _depth=_depth + 1))
            return _dedupe(found)
        except ContourOnZero as err:   # split line hit a zero; shift it
            last_err = err
    raise last_err


def _dedupe(roots, tol=1e-9):
    out = []
    for r in roots:
        if all(abs(r - s) > tol for s in out):
            out.append(r)
    return out
