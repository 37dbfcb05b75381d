"""
The representation B3 -> SL(2, Z), s1 -> [[1, 1], [0, 1]], s2 -> [[1, 0], [-1, 1]].

Its kernel is generated by D^4, whose exponent sum is 12, so a braid is
determined by its matrix together with its exponent sum. A band (conjugate
of s1) maps to ``I + u u^T J`` for a primitive vector ``u`` defined up to
sign, and conjugating the band by g moves ``u`` to ``rho(g) u``. This turns
questions about conjugating bands by powers of a fixed braid into questions
about the orbit of one integer vector under one integer matrix.
"""

from __future__ import annotations

from math import isqrt

Matrix = tuple[int, int, int, int]   # (a, b, c, d) for [[a, b], [c, d]]
Vector = tuple[int, int]

IDENTITY: Matrix = (1, 0, 0, 1)
_GEN = {
    1: (1, 1, 0, 1),
    2: (1, 0, -1, 1),
}
_GEN_INV = {
    1: (1, -1, 0, 1),
    2: (1, 0, 1, 1),
}


def mat_mul(x: Matrix, y: Matrix, modulus: int = 0) -> Matrix:
    a, b, c, d = x
    e, f, g, h = y
    r = (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    if modulus:
        return tuple(v % modulus for v in r)
    return r


def mat_inv(x: Matrix, modulus: int = 0) -> Matrix:
    a, b, c, d = x
    r = (d, -b, -c, a)
    if modulus:
        return tuple(v % modulus for v in r)
    return r


def mat_vec(x: Matrix, v: Vector) -> Vector:
    a, b, c, d = x
    return (a * v[0] + b * v[1], c * v[0] + d * v[1])


def rho(letters) -> Matrix:
    """Matrix of a word, given as an iterable of signed letters."""
    m = IDENTITY
    for x in letters:
        m = mat_mul(m, _GEN[x] if x > 0 else _GEN_INV[-x])
    return m


# s0 = s1^-1 s2 s1
_GEN[3] = rho((-1, 2, 1))
_GEN_INV[3] = mat_inv(_GEN[3])


def rho_braid(b) -> Matrix:
    return rho(b.to_word().letters)


def trace(x: Matrix) -> int:
    return x[0] + x[3]


def has_finite_order(x: Matrix) -> bool:
    """Elliptic elements and +-I are exactly the finite-order elements."""
    return abs(trace(x)) < 2 or x in ((1, 0, 0, 1), (-1, 0, 0, -1))


def sign_normal(v: Vector) -> Vector:
    if v[0] < 0 or (v[0] == 0 and v[1] < 0):
        return (-v[0], -v[1])
    return v


def band_vector(x: Matrix) -> Vector:
    """The vector u (up to sign) with x = I + u u^T J; ValueError if x is not
    the image of a band."""
    a, b, c, d = x
    # x - I = [[-uv, u^2], [-v^2, uv]] for u = (u, v)
    n00, n01, n10, n11 = a - 1, b, c, d - 1
    if n01 < 0 or n10 > 0 or n00 != -n11:
        raise ValueError("matrix is not the image of a band")
    u, v = isqrt(n01), isqrt(-n10)
    if u * u != n01 or v * v != -n10:
        raise ValueError("matrix is not the image of a band")
    if u * v != abs(n11):
        raise ValueError("matrix is not the image of a band")
    if n11 < 0:
        v = -v
    if (u, v) == (0, 0):
        raise ValueError("identity is not a band")
    return sign_normal((u, v))


def _norm2(v: Vector) -> int:
    return v[0] * v[0] + v[1] * v[1]


def power_conjugator(m: Matrix, z: Vector, y: Vector) -> int | None:
    """
    An integer ``k`` with ``m^k z = +-y`` (least |k|, preferring k >= 0),
    or None if there is none.
    """
    z, y = sign_normal(z), sign_normal(y)
    if z == y:
        return 0
    if sign_normal(mat_vec(m, z)) == z:
        return None
    if has_finite_order(m):
        inv = mat_inv(m)
        fwd, back = z, z
        for k in range(1, 13):
            fwd = mat_vec(m, fwd)
            back = mat_vec(inv, back)
            if sign_normal(fwd) == y:
                return k
            if sign_normal(back) == y:
                return -k
        return None
    # |m^k z|^2 is a strictly convex function of k that tends to infinity in
    # both directions; walk outwards until it exceeds |y|^2 and is growing.
    target = _norm2(y)
    best = None
    for step, mat in ((1, m), (-1, mat_inv(m))):
        k, v, prev = 0, z, _norm2(z)
        while True:
            k += step
            v = mat_vec(mat, v)
            cur = _norm2(v)
            if sign_normal(v) == y:
                if best is None or abs(k) < abs(best):
                    best = k
                break
            if cur > target and cur >= prev:
                break
            prev = cur
    return best
