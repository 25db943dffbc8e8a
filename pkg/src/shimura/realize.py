"""Real 2x2 embeddings of the quaternion algebras, the upper half-plane
action, fixed points of elliptic elements, and the exact search for CM
elements of prescribed discriminant.

Numerics are mpmath at a configurable precision.  Values exposed at module
boundaries are `Ball`s: midpoint plus a propagated error radius.  Radius
propagation is first-order with an ulp-scale inflation on every operation
(heuristic, not rigorous outward rounding; downstream rational
reconstruction independently validates every end result).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

import mpmath
from mpmath import mp, mpc, mpf

from .exact import INF, Q, _q
from .quatalg import AlgebraQ, QuatElement, algebra

GUARD_DIGITS = 15


def working_dps(digits: int):
    """Context manager setting the mpmath working precision with guard digits."""
    return mp.workdps(digits + GUARD_DIGITS)


def mpf_from_fraction(x: Fraction) -> mpf:
    return mpf(x.numerator) / mpf(x.denominator)


class Ball:
    """Midpoint/radius value.  Radius tracking is first-order and inflated
    by a few ulps per operation (documented heuristic)."""

    __slots__ = ("mid", "rad")

    def __init__(self, mid, rad=None):
        self.mid = mid
        self.rad = mpf(rad) if rad is not None else mpf(0)

    @staticmethod
    def exact(x) -> Ball:
        if isinstance(x, (int, Fraction)):
            x = _q(x)
            return Ball(mpf_from_fraction(x), _ulp(mpf_from_fraction(x)))
        return Ball(x, _ulp(abs(x)))

    def _lift(self, other) -> Ball:
        if isinstance(other, Ball):
            return other
        if isinstance(other, (int, Fraction)):
            return Ball.exact(other)
        return Ball(other, _ulp(abs(other)))

    def __add__(self, other):
        o = self._lift(other)
        m = self.mid + o.mid
        return Ball(m, self.rad + o.rad + _ulp(abs(m)))

    __radd__ = __add__

    def __neg__(self):
        return Ball(-self.mid, self.rad)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        m = self.mid * o.mid
        r = abs(self.mid) * o.rad + abs(o.mid) * self.rad + self.rad * o.rad
        return Ball(m, r + _ulp(abs(m)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        m = self.mid / o.mid
        den = abs(o.mid) - o.rad
        if den <= 0:
            raise ZeroDivisionError("ball division by a ball containing zero")
        r = (self.rad + abs(m) * o.rad) / den
        return Ball(m, r + _ulp(abs(m)))

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def sqrt(self):
        m = mpmath.sqrt(self.mid)
        r = self.rad / (2 * abs(m)) if abs(m) > 0 else mpmath.sqrt(self.rad)
        return Ball(m, r + _ulp(abs(m)))

    def __abs__(self):
        return Ball(abs(self.mid), self.rad)

    def to_fraction_pair(self) -> tuple[Fraction, Fraction]:
        """(midpoint, radius) as exact rationals, radius rounded up."""
        mid = _fraction_of_mpf(self.mid)
        rad = _fraction_of_mpf(self.rad * 2) + Q(1, 10 ** (mp.dps + 5))
        return mid, rad

    def __repr__(self):
        return f"Ball({self.mid}, rad={mpmath.nstr(self.rad, 3)})"


def _ulp(mag) -> mpf:
    return (mag if mag > 0 else mpf(1)) * mpf(10) ** (-mp.dps) * 4


def _fraction_of_mpf(x) -> Fraction:
    if x == 0:
        return Q(0)
    man, exp = mpmath.libmp.to_man_exp(x._mpf_ if hasattr(x, "_mpf_") else mpf(x)._mpf_)
    man = int(man)
    exp = int(exp)
    if mpf(x) < 0:
        man = -man
    return Q(man) * (Q(2) ** exp if exp >= 0 else Q(1, 2 ** (-exp)))


# ----------------------------------------------------------------------
# 2x2 matrices over mpf/mpc (tiny helper layer)
# ----------------------------------------------------------------------

Mat = tuple  # ((a, b), (c, d))


def mat_mul(A: Mat, B: Mat) -> Mat:
    return ((A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
            (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]))


def mat_add(A: Mat, B: Mat) -> Mat:
    return ((A[0][0] + B[0][0], A[0][1] + B[0][1]), (A[1][0] + B[1][0], A[1][1] + B[1][1]))


def mat_scale(A: Mat, s) -> Mat:
    return ((A[0][0] * s, A[0][1] * s), (A[1][0] * s, A[1][1] * s))


def mat_det(A: Mat):
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]


def mat_trace(A: Mat):
    return A[0][0] + A[1][1]


def moebius_matrix(A: Mat, z):
    return (A[0][0] * z + A[0][1]) / (A[1][0] * z + A[1][1])


# ----------------------------------------------------------------------
# embeddings
# ----------------------------------------------------------------------

_EMBED_CACHE: dict[tuple[str, int], "RealEmbedding"] = {}


@dataclass(frozen=True)
class RealEmbedding:
    algebra_label: str
    mat_i: Mat
    mat_j: Mat
    dps: int

    def of_coords(self, coords) -> Mat:
        a1, a2, a3, a4 = (mpf_from_fraction(_q(c)) if isinstance(c, (int, Fraction))
                          else c for c in coords)
        one = ((mpf(1), mpf(0)), (mpf(0), mpf(1)))
        m = mat_scale(one, a1)
        m = mat_add(m, mat_scale(self.mat_i, a2))
        m = mat_add(m, mat_scale(self.mat_j, a3))
        m = mat_add(m, mat_scale(mat_mul(self.mat_i, self.mat_j), a4))
        return m


def real_embedding(label: str) -> RealEmbedding:
    """The fixed solution of the structure relations in M_2(R), cached per
    (algebra, precision).

    {2,3}: i diagonal, j antidiagonal; the others follow the same pattern
    with the positive structure constant on the diagonal.
    """
    key = (label, mp.dps)
    if key in _EMBED_CACHE:
        return _EMBED_CACHE[key]
    z = mpf(0)
    if label == "G237":
        c = 2 * mpmath.cos(2 * mpmath.pi / 7)
        s = mpmath.sqrt(c)
        mi = ((s, z), (z, -s))
        mj = ((z, s), (s, z))
    else:
        alg = algebra(label)
        beta, gamma = alg.beta, alg.gamma
        if beta > 0:
            # i diagonal with sqrt(beta), j antidiagonal for gamma < 0
            sb = mpmath.sqrt(mpf_from_fraction(beta))
            sg = mpmath.sqrt(mpf_from_fraction(-gamma))
            mi = ((sb, z), (z, -sb))
            mj = ((z, sg), (-sg, z))
        else:
            # i antidiagonal (beta < 0), j diagonal (gamma > 0)
            sb = mpmath.sqrt(mpf_from_fraction(-beta))
            sg = mpmath.sqrt(mpf_from_fraction(gamma))
            mi = ((z, sb), (-sb, z))
            mj = ((sg, z), (z, -sg))
    emb = RealEmbedding(label, mi, mj, mp.dps)
    _check_relations(emb, label)
    _EMBED_CACHE[key] = emb
    return emb


def _check_relations(emb: RealEmbedding, label: str):
    if label == "G237":
        c = 2 * mpmath.cos(2 * mpmath.pi / 7)
        beta = gamma = c
    else:
        alg = algebra(label)
        beta, gamma = (mpf_from_fraction(alg.beta), mpf_from_fraction(alg.gamma))
    tol = mpf(10) ** (-mp.dps + 4)
    ii = mat_mul(emb.mat_i, emb.mat_i)
    jj = mat_mul(emb.mat_j, emb.mat_j)
    ij = mat_mul(emb.mat_i, emb.mat_j)
    ji = mat_mul(emb.mat_j, emb.mat_i)
    assert abs(ii[0][0] - beta) < tol and abs(ii[1][1] - beta) < tol
    assert abs(jj[0][0] - gamma) < tol and abs(jj[1][1] - gamma) < tol
    assert all(abs(ij[r][c] + ji[r][c]) < tol for r in range(2) for c in range(2))


def embed(x: QuatElement) -> Mat:
    return real_embedding(x.alg.label).of_coords(x.co)


def fixed_point_upper(m: Mat) -> mpc:
    """The fixed point in the upper half-plane of an elliptic matrix."""
    a, b = m[0]
    c, d = m[1]
    disc = (a - d) ** 2 + 4 * b * c   # = tr^2 - 4 det
    if disc >= 0:
        raise ValueError("matrix is not elliptic (tr^2 >= 4 det)")
    if c == 0:
        raise ValueError("fixed point at infinity")
    root = mpmath.sqrt(mpc(disc))
    z = ((a - d) + root) / (2 * c)
    if z.imag < 0:
        z = ((a - d) - root) / (2 * c)
    return z


# ----------------------------------------------------------------------
# CM elements
# ----------------------------------------------------------------------

def cm_order_discriminant(x: QuatElement) -> Fraction:
    from .quatalg import cm_ring_discriminant
    return cm_ring_discriminant(x)


@dataclass(frozen=True)
class CMElement:
    element: QuatElement
    discriminant: int
    raw_discriminant: int      # disc of Z[element] before conductor reduction

    def fixed_point(self) -> mpc:
        return fixed_point_upper(embed(self.element))


def find_cm_element(alg: AlgebraQ, D: int, search_radius: int = 12) -> Optional[CMElement]:
    """An order element whose CM ring has discriminant exactly D.

    Searches coprime combinations m g1 + n g2 of pairs of elliptic
    generators first (including the negative-coefficient sectors), then a
    4-dimensional sweep of the order.  The trace-norm discriminant
    equation is checked exactly before any numerics.
    """
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError("D must be negative and 0 or 1 mod 4")
    from .quatalg import cm_ring_discriminant
    best = None
    gens = [g.element for g in alg.elliptic]
    for g1, g2 in itertools.combinations(gens, 2):
        for m in range(1, search_radius + 1):
            for n in range(-search_radius, search_radius + 1):
                if n == 0 or gcd(m, abs(n)) != 1:
                    continue
                cand = g1.scale(m) + g2.scale(n)
                if cand.is_scalar():
                    continue
                raw = cand.disc_element()
                if raw >= 0:
                    continue
                d = cm_ring_discriminant(cand)
                if d == D:
                    return CMElement(cand, D, int(raw))
    # fall back: 4-dimensional sweep over the order basis
    rad = max(4, search_radius // 2)
    for coords in itertools.product(range(-rad, rad + 1), repeat=4):
        if coords == (0, 0, 0, 0):
            continue
        cand = sum((b.scale(c) for b, c in zip(alg.order_basis, coords) if c),
                   alg.element((0, 0, 0, 0)))
        if cand.is_zero() or cand.is_scalar():
            continue
        raw = cand.disc_element()
        if raw >= 0:
            continue
        d = cm_ring_discriminant(cand)
        if d == D:
            return CMElement(cand, D, int(raw))
    return best
