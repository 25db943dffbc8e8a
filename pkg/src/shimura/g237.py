"""The (2,3,7) triangle group as a unit group: exact arithmetic in
K = Q(2 cos 2pi/7) and the quaternion algebra over K with i^2 = j^2 = c,
ij = -ji, where c = 2 cos 2pi/7 is the positive root of c^3 + c^2 - 2c - 1.

Only the pieces needed for the rational-coefficient covers and the
numeric CM computation are implemented: K-arithmetic, the three elliptic
generators, trace/norm, and the discriminant search for CM elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .exact import Q, _q

# c^3 = -c^2 + 2c + 1
_REDUCE = (Q(1), Q(2), Q(-1))


class KElem:
    """a0 + a1 c + a2 c^2 in Q(2 cos 2pi/7)."""

    __slots__ = ("co",)

    def __init__(self, a0, a1=0, a2=0):
        object.__setattr__(self, "co", (_q(a0), _q(a1), _q(a2)))

    def __setattr__(self, *a):
        raise AttributeError("KElem is immutable")

    @staticmethod
    def c() -> KElem:
        return KElem(0, 1, 0)

    def __add__(self, other):
        other = _k(other)
        return KElem(*(x + y for x, y in zip(self.co, other.co)))

    __radd__ = __add__

    def __neg__(self):
        return KElem(*(-x for x in self.co))

    def __sub__(self, other):
        return self + (-_k(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _k(other)
        a0, a1, a2 = self.co
        b0, b1, b2 = other.co
        # degree-4 product then reduce twice by c^3 = 1 + 2c - c^2
        d = [a0 * b0, a0 * b1 + a1 * b0, a0 * b2 + a1 * b1 + a2 * b0,
             a1 * b2 + a2 * b1, a2 * b2]
        # c^4 = c * c^3 = c + 2c^2 - c^3 = -1 - c + 3c^2
        r0 = d[0] + d[3] * _REDUCE[0] + d[4] * (-1)
        r1 = d[1] + d[3] * _REDUCE[1] + d[4] * (-1)
        r2 = d[2] + d[3] * _REDUCE[2] + d[4] * 3
        return KElem(r0, r1, r2)

    __rmul__ = __mul__

    def is_rational(self) -> bool:
        return self.co[1] == 0 and self.co[2] == 0

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.co[0]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.co)

    def numeric(self):
        """Value at the unramified real place (c = 2 cos 2pi/7), mpf."""
        c = 2 * mpmath.cos(2 * mpmath.pi / 7)
        a0, a1, a2 = self.co
        return (mpmath.mpf(a0.numerator) / a0.denominator
                + mpmath.mpf(a1.numerator) / a1.denominator * c
                + mpmath.mpf(a2.numerator) / a2.denominator * c * c)

    def __eq__(self, other):
        return isinstance(other, KElem) and self.co == _k(other).co

    def __hash__(self):
        return hash(self.co)

    def __repr__(self):
        return f"KElem{self.co}"


def _k(v) -> KElem:
    if isinstance(v, KElem):
        return v
    return KElem(_q(v))


class G237Element:
    """x1 + x2 i + x3 j + x4 ij with K coefficients; i^2 = j^2 = c."""

    __slots__ = ("co",)

    def __init__(self, coords):
        object.__setattr__(self, "co", tuple(_k(x) for x in coords))

    def __setattr__(self, *a):
        raise AttributeError("G237Element is immutable")

    def __add__(self, other):
        return G237Element([x + y for x, y in zip(self.co, other.co)])

    def __sub__(self, other):
        return G237Element([x - y for x, y in zip(self.co, other.co)])

    def scale(self, r) -> G237Element:
        r = _k(r)
        return G237Element([r * x for x in self.co])

    def __mul__(self, other):
        c = KElem.c()
        a1, a2, a3, a4 = self.co
        b1, b2, b3, b4 = other.co
        return G237Element([
            a1 * b1 + c * (a2 * b2) + c * (a3 * b3) - c * c * (a4 * b4),
            a1 * b2 + a2 * b1 - c * (a3 * b4) + c * (a4 * b3),
            a1 * b3 + a3 * b1 + c * (a2 * b4) - c * (a4 * b2),
            a1 * b4 + a4 * b1 + a2 * b3 - a3 * b2,
        ])

    def conj(self) -> G237Element:
        a1, a2, a3, a4 = self.co
        return G237Element([a1, -a2, -a3, -a4])

    def trace(self) -> KElem:
        return self.co[0] + self.co[0]

    def norm(self) -> KElem:
        c = KElem.c()
        a1, a2, a3, a4 = self.co
        return a1 * a1 - c * (a2 * a2) - c * (a3 * a3) + c * c * (a4 * a4)

    def disc_element(self) -> KElem:
        return self.trace() * self.trace() - 4 * self.norm()

    def is_scalar(self) -> bool:
        return all(x.is_zero() for x in self.co[1:])

    def embed_numeric(self):
        """2x2 real matrix at the unramified place: i diag(sqrt c, -sqrt c),
        j antidiag(sqrt c, sqrt c)."""
        c = 2 * mpmath.cos(2 * mpmath.pi / 7)
        s = mpmath.sqrt(c)
        a1, a2, a3, a4 = (x.numeric() for x in self.co)
        # i = [[s,0],[0,-s]], j = [[0,s],[s,0]], ij = [[0, c],[-c, 0]]
        return ((a1 + a2 * s, a3 * s + a4 * c),
                (a3 * s - a4 * c, a1 - a2 * s))

    def __repr__(self):
        return f"G237Element{self.co}"


def generators() -> dict[str, G237Element]:
    """The norm-1 elliptic elements g2, g3, g7 with g2^2 = g3^3 = g7^7 = -1
    and g2 = g7 g3."""
    c = KElem.c()
    csq = c * c
    g2 = G237Element([0, 0, 0, KElem(0)]).scale(0)  # placeholder, replaced below
    # g2 = ij / c: (ij)/c has coords (0,0,0, 1/c); 1/c = c^2 + c - 2  (c^3+c^2-2c-1=0)
    inv_c = csq + c - 2
    g2 = G237Element([0, 0, 0, inv_c])
    g3 = G237Element([Q(1, 2), 0, (csq - 2) * Q(1, 2), (3 - csq) * Q(1, 2)])
    g7 = G237Element([(csq + c - 1) * Q(1, 2), (2 - csq) * Q(1, 2), 0,
                      (csq + c - 2) * Q(1, 2)])
    return {"g2": g2, "g3": g3, "g7": g7}


def verify_generators() -> list[str]:
    """Sanity of the fixture generators; returns a list of failures."""
    g = generators()
    fails = []
    for name, power, want in (("g2", 2, -1), ("g3", 3, -1), ("g7", 7, -1)):
        x = g[name]
        p = x
        for _ in range(power - 1):
            p = p * x
        if not (p.is_scalar() and p.co[0] == _k(want)):
            fails.append(f"{name}^{power} != {want}")
        n = x.norm()
        if not (n.is_rational() and n.rational_value() == 1):
            fails.append(f"{name} norm != 1: {n!r}")
    if (g["g7"] * g["g3"]).co != g["g2"].co:
        fails.append("g2 != g7 g3")
    return fails


def find_cm_element_g237(D: int, radius: int = 2):
    """Order element with (a - abar)^2 = D (a rational integer), as a small
    O_K-combination of g3 and g7."""
    g = generators()
    g3, g7 = g["g3"], g["g7"]
    rng = range(-radius, radius + 1)
    target = _k(D)
    for m0, m1, m2, n0, n1, n2 in itertools.product(rng, repeat=6):
        m = KElem(m0, m1, m2)
        n = KElem(n0, n1, n2)
        if m.is_zero() and n.is_zero():
            continue
        cand = g3.scale(m) + g7.scale(n)
        if cand.is_scalar():
            continue
        if cand.disc_element() == target:
            return cand
    return None
