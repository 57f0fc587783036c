"""Floating-point sphere colorings written as binary PPM.

This is the only inexact code path.  The viewer looks at the hemisphere
around z = 0: pixel centres inside the unit disk lift orthographically to
(X, Y, sqrt(1 - X^2 - Y^2)) and project stereographically from the far
pole, z = (X + iY)/(1 + Z).  Each pixel takes the color of whichever of
0 (red), 1 (blue) and inf (green) is chordally nearest to the value;
pixels off the disk are black.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .merofn import MeroFn

MAX_SIZE = 4096
COLORS = np.array([[255, 0, 0], [0, 0, 255], [0, 255, 0], [0, 0, 0]], dtype=np.uint8)


def _horner(coeffs, z):
    acc = np.zeros_like(z)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _normalize(p, q):
    s = np.maximum(np.abs(p), np.abs(q))
    s = np.where(s == 0, 1.0, s)
    return p / s, q / s


def _e7_pair(p, q):
    """Homogeneous E7 = 108 p^4 q^4 (p^4 - q^4)^4 : (p^8 + 14 p^4 q^4 + q^8)^3."""
    p, q = _normalize(p, q)
    p4, q4 = p ** 4, q ** 4
    num = 108 * p4 * q4 * (p4 - q4) ** 4
    den = (p4 * p4 + 14 * p4 * q4 + q4 * q4) ** 3
    return num, den


def _complex_coeffs(poly):
    return [complex(c) for c in poly.coeffs]


def _value_pair(target, z):
    if target == "e7":
        return _e7_pair(z, np.ones_like(z))
    return _horner(_complex_coeffs(target.num), z), _horner(_complex_coeffs(target.den), z)


def _classify(p, q):
    p, q = _normalize(p, q)
    ap, aq = np.abs(p), np.abs(q)
    # chordal distances to 0, 1, inf, up to a common positive factor
    d0 = ap
    d1 = np.abs(p - q) / np.sqrt(2.0)
    dinf = aq
    return np.argmin(np.stack([d0, d1, dinf]), axis=0)


def _rows(target, through_e7, size, lo, hi):
    j = np.arange(size, dtype=np.float64)
    i = np.arange(lo, hi, dtype=np.float64)
    x = (2 * j + 1) / size - 1
    y = 1 - (2 * i + 1) / size
    xx, yy = np.meshgrid(x, y)
    r2 = xx * xx + yy * yy
    inside = r2 <= 1
    zs = np.sqrt(np.where(inside, 1 - r2, 0.0))
    z = (xx + 1j * yy) / (1 + zs)
    p, q = _value_pair(target, z)
    if through_e7:
        p, q = _e7_pair(p, q)
    idx = np.where(inside, _classify(p, q), 3)
    return COLORS[idx]


def render(target, size: int, through_e7: bool = False, threads: int = 1) -> bytes:
    """PPM bytes for ``target`` (a MeroFn or the string 'e7')."""
    if not 1 <= size <= MAX_SIZE:
        raise ValueError(f"size must be between 1 and {MAX_SIZE}")
    if target != "e7" and not isinstance(target, MeroFn):
        raise TypeError("target must be a MeroFn or 'e7'")
    threads = max(1, min(threads, size))
    bounds = [(k * size // threads, (k + 1) * size // threads) for k in range(threads)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda b: _rows(target, through_e7, size, *b), bounds))
    pixels = np.concatenate(parts, axis=0)
    return f"P6\n{size} {size}\n255\n".encode() + pixels.tobytes()
