"""Involutions of P^1 determined by two point-pairs.

A pair of points is encoded as a binary quadric A*X^2 + 2B*XY + C*Y^2
(note the half-integer convention for the middle coefficient).  Two
quadrics without a common zero determine a unique involution of P^1
switching the roots of each; its fixed points, the compatibility test
for a third quadric, and the resolvent/discriminant identity are all
exact linear algebra in the coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact import INF, Poly, Q, _q


@dataclass(frozen=True)
class Quadric:
    """A*X^2 + 2B*XY + C*Y^2, projective (scaling is an equivalence)."""

    A: Fraction
    B: Fraction
    C: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", _q(self.A))
        object.__setattr__(self, "B", _q(self.B))
        object.__setattr__(self, "C", _q(self.C))
        if self.A == 0 and self.B == 0 and self.C == 0:
            raise ValueError("zero quadric")

    @staticmethod
    def from_poly(p: Poly) -> Quadric:
        """From a*x^2 + b*x + c; an odd middle coefficient is halved."""
        if p.degree > 2 or p.degree < 0:
            raise ValueError("need degree <= 2")
        return Quadric(p[2], p[1] / 2, p[0])

    @staticmethod
    def from_roots(r1, r2) -> Quadric:
        """Quadric vanishing at two points of P^1 (INF allowed)."""
        if r1 is INF and r2 is INF:
            return Quadric(0, 0, 1)
        if r1 is INF or r2 is INF:
            r = _q(r2 if r1 is INF else r1)
            return Quadric(0, Q(1, 2), -r)
        r1, r2 = _q(r1), _q(r2)
        return Quadric(1, -(r1 + r2) / 2, r1 * r2)

    def poly(self) -> Poly:
        """Dehomogenization A*x^2 + 2B*x + C."""
        return Poly([self.C, 2 * self.B, self.A])

    def disc(self) -> Fraction:
        """B^2 - AC; zero iff double root."""
        return self.B * self.B - self.A * self.C

    def evaluate(self, x, y) -> Fraction:
        return self.A * x * x + 2 * self.B * x * y + self.C * y * y

    def roots(self):
        """Roots in P^1(Q) if rational, else None."""
        if self.A == 0:
            if self.B == 0:
                return (INF, INF)
            return (INF, -self.C / (2 * self.B))
        d = self.disc()
        num = d.numerator * d.denominator
        if num < 0:
            return None
        from sympy import integer_nthroot
        s, exact = integer_nthroot(num, 2) if num else (0, True)
        if not exact:
            return None
        sq = Q(s, d.denominator)
        return ((-self.B + sq) / self.A, (-self.B - sq) / self.A)

    def proportional_to(self, other: Quadric) -> bool:
        return (self.A * other.B == self.B * other.A
                and self.A * other.C == self.C * other.A
                and self.B * other.C == self.C * other.B)

    def apply_moebius(self, m: Moebius) -> Quadric:
        """Pullback under m: quadric vanishing on m^{-1}(roots).

        Substitutes (X:Y) -> (aX+bY : cX+dY).
        """
        a, b, c, d = m.a, m.b, m.c, m.d
        A2 = self.evaluate(a, c)
        C2 = self.evaluate(b, d)
        B2 = self.A * a * b + self.B * (a * d + b * c) + self.C * c * d
        return Quadric(A2, B2, C2)


def resolvent(q1: Quadric, q2: Quadric) -> Fraction:
    """4x4 Sylvester-style determinant; vanishes iff q1, q2 share a root."""
    rows = [
        [q1.A, 2 * q1.B, q1.C, Q(0)],
        [Q(0), q1.A, 2 * q1.B, q1.C],
        [q2.A, 2 * q2.B, q2.C, Q(0)],
        [Q(0), q2.A, 2 * q2.B, q2.C],
    ]
    return _det4(rows)


def _det4(m) -> Fraction:
    def det3(a):
        return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))
    total = Q(0)
    sign = 1
    for col in range(4):
        minor = [[m[r][c] for c in range(4) if c != col] for r in range(1, 4)]
        total += sign * m[0][col] * det3(minor)
        sign = -sign
    return total


class Moebius:
    """t -> (a t + b)/(c t + d), normalized to coprime integers with
    positive first nonzero entry (canonical equality)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        a, b, c, d = _q(a), _q(b), _q(c), _q(d)
        if a * d - b * c == 0:
            raise ValueError("degenerate Moebius map")
        den = 1
        for v in (a, b, c, d):
            den = den * v.denominator // gcd(den, v.denominator)
        ia, ib, ic, id_ = (int(v * den) for v in (a, b, c, d))
        g = gcd(gcd(abs(ia), abs(ib)), gcd(abs(ic), abs(id_)))
        ia, ib, ic, id_ = ia // g, ib // g, ic // g, id_ // g
        for v in (ia, ib, ic, id_):
            if v != 0:
                if v < 0:
                    ia, ib, ic, id_ = -ia, -ib, -ic, -id_
                break
        object.__setattr__(self, "a", Q(ia))
        object.__setattr__(self, "b", Q(ib))
        object.__setattr__(self, "c", Q(ic))
        object.__setattr__(self, "d", Q(id_))

    def __setattr__(self, *args):
        raise AttributeError("Moebius is immutable")

    @staticmethod
    def identity() -> Moebius:
        return Moebius(1, 0, 0, 1)

    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Fraction:
        return self.a + self.d

    def __call__(self, x):
        """Projective application; x in Q or INF."""
        if x is INF:
            if self.c == 0:
                return INF
            return self.a / self.c
        x = _q(x)
        den = self.c * x + self.d
        num = self.a * x + self.b
        if den == 0:
            if num == 0:
                raise ZeroDivisionError("indeterminate Moebius evaluation")
            return INF
        return num / den

    def apply_numeric(self, z):
        """Apply to an mpf/mpc value."""
        return (Q(self.a) * z + Q(self.b)) / (Q(self.c) * z + Q(self.d))

    def compose(self, other: Moebius) -> Moebius:
        """self after other."""
        return Moebius(self.a * other.a + self.b * other.c,
                       self.a * other.b + self.b * other.d,
                       self.c * other.a + self.d * other.c,
                       self.c * other.b + self.d * other.d)

    def inverse(self) -> Moebius:
        return Moebius(self.d, -self.b, -self.c, self.a)

    def is_involution(self) -> bool:
        return self.trace() == 0

    def is_identity(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def as_rational_function(self):
        from .exact import RationalFunction
        return RationalFunction(Poly([self.b, self.a]), Poly([self.d, self.c]))

    def __eq__(self, other):
        return (isinstance(other, Moebius) and (self.a, self.b, self.c, self.d)
                == (other.a, other.b, other.c, other.d))

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"Moebius(({self.a}t + {self.b})/({self.c}t + {self.d}))"


def involution_from_quadrics(q1: Quadric, q2: Quadric) -> Moebius:
    """The unique involution of P^1 switching the roots of q1 and of q2.

    Requires q1, q2 to have no common zero (nonzero resolvent).
    """
    if resolvent(q1, q2) == 0:
        shared = _shared_rational_root(q1, q2)
        where = f" at {shared}" if shared is not None else ""
        raise ValueError(f"quadrics share a zero{where}; no involution")
    A1, B1, C1 = q1.A, q1.B, q1.C
    A2, B2, C2 = q2.A, q2.B, q2.C
    return Moebius(A1 * C2 - A2 * C1, 2 * (B1 * C2 - B2 * C1),
                   2 * (B1 * A2 - B2 * A1), C1 * A2 - C2 * A1)


def _shared_rational_root(q1: Quadric, q2: Quadric):
    r1 = q1.roots()
    if r1 is None:
        return None
    for r in r1:
        x, y = (1, 0) if r is INF else (r, 1)
        if q2.evaluate(_q(x) if r is not INF else Q(1), _q(y) if r is not INF else Q(0)) == 0:
            return r
    return None


def fixed_quadric_formula(q1: Quadric, q2: Quadric) -> Quadric:
    """Quadric whose roots are the fixed points of involution_from_quadrics."""
    A1, B1, C1 = q1.A, q1.B, q1.C
    A2, B2, C2 = q2.A, q2.B, q2.C
    return Quadric(A1 * B2 - A2 * B1, (A1 * C2 - A2 * C1) / 2, B1 * C2 - B2 * C1)


def compatible_involution_exists(q1: Quadric, q2: Quadric, q3: Quadric) -> bool:
    """True iff a single involution switches the roots of all three quadrics.

    Equivalent to the vanishing of the 3x3 coefficient determinant.  The
    quadrics may not all vanish at one point; q1, q2 in particular must
    have no common zero so that the involution they determine exists.
    """
    if resolvent(q1, q2) == 0:
        raise ValueError("q1, q2 share a zero")
    det = (q1.A * (q2.B * q3.C - q2.C * q3.B)
           - q1.B * (q2.A * q3.C - q2.C * q3.A)
           + q1.C * (q2.A * q3.B - q2.B * q3.A))
    return det == 0


def fixed_points(m: Moebius) -> Quadric:
    """Quadric whose roots are the fixed points of m.

    A parabolic map (single fixed point) is rejected.
    """
    q = Quadric(m.c, (m.d - m.a) / 2, -m.b)
    if q.disc() == 0:
        raise ValueError("parabolic map: single fixed point")
    return q
