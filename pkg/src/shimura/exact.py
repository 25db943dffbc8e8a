"""Exact arithmetic kernel: rationals, polynomials and rational functions
over Q, and the number-theoretic utilities the rest of the package is
built on.

Rationals are `fractions.Fraction` throughout (always reduced, positive
denominator).  Polynomials are dense coefficient tuples over Q.  The point
at infinity on P^1 is the module constant `INF`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import sympy

Q = Fraction


class Infinity:
    """The point at infinity on P^1(Q).  A singleton, usable as a dict key."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"


INF = Infinity()


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to a rational")


# ----------------------------------------------------------------------
# number theory
# ----------------------------------------------------------------------

def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a|n), completely multiplicative in both arguments.

    n = 0 is a domain error.
    """
    if n == 0:
        raise ValueError("kronecker_symbol: n must be nonzero")
    a = int(a)
    n = int(n)
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # factor out twos of n; (a|2) = 0, 1, -1 for a even, a = +-1 mod 8, a = +-3 mod 8
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    # now n odd positive: Jacobi symbol by reciprocity
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def primes_upto(bound: int) -> list[int]:
    """All primes <= bound, by sieve."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(bound ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, b in enumerate(sieve) if b]


def is_prime(n: int) -> bool:
    return sympy.isprime(n)


@dataclass(frozen=True)
class Factorization:
    """sign * prod p^e * cofactor.  Complete iff cofactor == 1."""

    sign: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), primes increasing
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def value(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p ** e
        return v * self.cofactor

    def radical(self) -> int:
        r = 1
        for p, _ in self.factors:
            r *= p
        return r

    def max_prime(self) -> int:
        return self.factors[-1][0] if self.factors else 1

    def exponent_of(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __str__(self):
        if not self.factors and self.cofactor == 1:
            body = "1"
        else:
            parts = [f"{p}^{e}" if e > 1 else f"{p}" for p, e in self.factors]
            if self.cofactor != 1:
                parts.append(f"[{self.cofactor}]")
            body = " ".join(parts)
        return ("-" if self.sign < 0 else "") + body


def factor_smooth(n: int, bound: int = 10 ** 4) -> Factorization:
    """Factor n by trial division over primes <= bound.

    The cofactor left after trial division is absorbed as a prime factor
    when it passes a primality test; otherwise it is carried unfactored
    (a partial result, complete == False).
    """
    if n == 0:
        raise ValueError("factor_smooth: n must be nonzero")
    if bound < 2:
        raise ValueError("factor_smooth: bound must be >= 2")
    sign = 1 if n > 0 else -1
    n = abs(n)
    factors = []
    for p in primes_upto(bound):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    if n > 1:
        if n <= bound or is_prime(n):
            factors.append((n, 1))
            n = 1
    factors.sort()
    return Factorization(sign, tuple(factors), n)


def squarefree_core_discriminant(d: int) -> int:
    """Fundamental discriminant of Q(sqrt(d)) for d < 0 (the CM field)."""
    if d >= 0:
        raise ValueError("expected a negative discriminant")
    m = -d
    core = 1
    f = factor_smooth(m, max(2, sympy.integer_nthroot(m, 2)[0] + 1))
    assert f.complete, f"cannot extract field of {d}"
    for p, e in f.factors:
        if e % 2:
            core *= p
    dd = -core
    return dd if dd % 4 == 1 else 4 * dd


# ----------------------------------------------------------------------
# polynomials over Q
# ----------------------------------------------------------------------

class Poly:
    """Dense univariate polynomial over Q, coefficients by ascending degree.

    Immutable.  The zero polynomial has degree -1.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):  # strips leading zeros
        c = [_q(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "c", tuple(c))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- construction helpers
    @staticmethod
    def x(power: int = 1, coeff=1) -> Poly:
        return Poly([0] * power + [coeff])

    @staticmethod
    def const(v) -> Poly:
        return Poly([v])

    # -- basics
    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def leading(self) -> Fraction:
        if not self.c:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.c[-1]

    def __getitem__(self, i: int) -> Fraction:
        return self.c[i] if 0 <= i < len(self.c) else Q(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        if not self.c:
            return "Poly(0)"
        terms = []
        for i, a in enumerate(self.c):
            if a:
                terms.append(f"{a}*x^{i}" if i else f"{a}")
        return "Poly(" + " + ".join(reversed(terms)) + ")"

    # -- ring operations
    def __add__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        a, b = self.c, other.c
        n = max(len(a), len(b))
        return Poly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                     for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-a for a in self.c])

    def __sub__(self, other):
        return self + (-other if isinstance(other, Poly) else Poly.const(-_q(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly([a * other for a in self.c])
        a, b = self.c, other.c
        if not a or not b:
            return Poly()
        out = [Q(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        div = other.c
        dq = len(rem) - len(div)
        if dq < 0:
            return Poly(), self
        quot = [Q(0)] * (dq + 1)
        inv_lead = 1 / div[-1]
        for k in range(dq, -1, -1):
            q = rem[k + len(div) - 1] * inv_lead
            quot[k] = q
            if q:
                for j, d in enumerate(div):
                    rem[k + j] -= q * d
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divmod(other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return self.divmod(other)[1]

    def divides_exactly(self, other: Poly) -> bool:
        return (other % self).is_zero()

    def exact_div(self, other: Poly) -> Poly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("non-exact polynomial division")
        return q

    # -- calculus & evaluation
    def derivative(self) -> Poly:
        return Poly([i * a for i, a in enumerate(self.c)][1:])

    def __call__(self, x):
        """Horner evaluation; x may be Fraction, int, mpf/mpc, Poly, INF."""
        if x is INF:
            if self.degree <= 0:
                return self[0]
            return INF
        if isinstance(x, Poly):
            acc = Poly()
            for a in reversed(self.c):
                acc = acc * x + Poly.const(a)
            return acc
        acc = 0
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def eval_hom(self, a, b):
        """Homogeneous evaluation P(a, b) = b^deg * p(a/b) for p of this degree."""
        n = self.degree
        if n < 0:
            return Q(0)
        acc = Q(0)
        bp = 1
        for i in range(n, -1, -1):
            acc = acc * a + self.c[i] * bp
            bp *= b
        return acc

    def shift(self, a) -> Poly:
        """p(x + a)."""
        a = _q(a)
        out = Poly()
        for coef in reversed(self.c):
            out = out * Poly([a, 1]) + Poly.const(coef)
        return out

    def reverse(self, n: int | None = None) -> Poly:
        """x^n * p(1/x) with n >= deg (default deg)."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("reverse: n below degree")
        out = [Q(0)] * (n + 1)
        for i, a in enumerate(self.c):
            out[n - i] = a
        return Poly(out)

    # -- gcd / content / factor support
    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self * (1 / self.leading())

    def content(self) -> Fraction:
        """Positive rational c with self/c integer-primitive; sign of leading kept apart."""
        if self.is_zero():
            return Q(1)
        from math import gcd
        num = 0
        den = 1
        for a in self.c:
            num = gcd(num, a.numerator)
            den = den * a.denominator // gcd(den, a.denominator)
        return Q(num, den)

    def primitive(self) -> Poly:
        """Integer-primitive scalar multiple with positive leading coefficient."""
        if self.is_zero():
            return self
        p = self * (1 / self.content())
        return -p if p.leading() < 0 else p

    def gcd(self, other: Poly) -> Poly:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def squarefree_decomposition(self) -> list[tuple[Poly, int]]:
        """Yun-style: list of (factor, multiplicity) with factors squarefree."""
        if self.degree < 1:
            return []
        out = []
        p = self.monic()
        d = p.gcd(p.derivative())
        w = p.exact_div(d)
        i = 1
        while w.degree > 0:
            y = w.gcd(d)
            f = w.exact_div(y)
            if f.degree > 0:
                out.append((f, i))
            w = y
            d = d.exact_div(y)
            i += 1
        return out

    def resultant(self, other: Poly) -> Fraction:
        """Sylvester resultant via the Euclidean remainder sequence."""
        if self.is_zero() or other.is_zero():
            raise ValueError("resultant of zero polynomial")
        a, b = self, other
        res = Q(1)
        while b.degree > 0:
            r = a % b
            if r.is_zero():
                return Q(0)
            res *= b.leading() ** (a.degree - r.degree) * (-1) ** (a.degree * b.degree)
            a, b = b, r
        # b is a nonzero constant
        return res * b.leading() ** a.degree

    def discriminant(self) -> Fraction:
        n = self.degree
        if n < 1:
            raise ValueError("discriminant needs degree >= 1")
        r = self.resultant(self.derivative())
        sign = (-1) ** (n * (n - 1) // 2)
        return sign * r / self.leading()

    def rational_roots(self) -> list[Fraction]:
        """All rational roots, with multiplicity stripped."""
        roots = []
        for f, _ in factor_poly_q(self)[1]:
            if f.degree == 1:
                roots.append(-f[0] / f[1])
        return sorted(set(roots))

    # -- sympy bridge
    def to_sympy(self, sym):
        return sum(sympy.Rational(a.numerator, a.denominator) * sym ** i
                   for i, a in enumerate(self.c))

    @staticmethod
    def from_sympy(expr, sym) -> Poly:
        p = sympy.Poly(expr, sym)
        coeffs = [Q(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())]
        return Poly(coeffs)


_SYM_X = sympy.Symbol("x")


def factor_poly_q(p: Poly, max_degree: int = 32) -> tuple[Fraction, list[tuple[Poly, int]]]:
    """Factor p over Q: returns (unit, [(irreducible primitive factor, mult)]).

    unit * prod factor^mult == p exactly.  Degree capped at desk scale.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree > max_degree:
        raise ValueError(f"degree {p.degree} above supported bound {max_degree}")
    const, factors = sympy.factor_list(p.to_sympy(_SYM_X), _SYM_X)
    unit = Q(int(sympy.Rational(const).p), int(sympy.Rational(const).q))
    out = []
    for f, e in factors:
        fp = Poly.from_sympy(f, _SYM_X)
        prim = fp.primitive()
        scale = fp.leading() / prim.leading()
        unit *= scale ** e
        out.append((prim, int(e)))
    out.sort(key=lambda fe: (fe[0].degree, fe[0].c))
    check = Poly.const(unit)
    for f, e in out:
        check = check * f ** e
    assert check == p, "factorization product check failed"
    return unit, out


def factor_poly_modp(p: Poly, ell: int) -> list[tuple[list[int], int]]:
    """Factor p mod ell: [(coeff list ascending, multiplicity)], factors monic."""
    den_lcm = 1
    for a in p.c:
        den_lcm = den_lcm * a.denominator // __import__("math").gcd(den_lcm, a.denominator)
    if den_lcm % ell == 0:
        raise ValueError("denominator not invertible mod ell")
    expr = sum(int(a * den_lcm) * _SYM_X ** i for i, a in enumerate(p.c))
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # sympy sorts modular factors internally
        _, factors = sympy.factor_list(sympy.Poly(expr, _SYM_X, modulus=ell))
    out = []
    for f, e in factors:
        coeffs = [int(c) % ell for c in reversed(sympy.Poly(f, _SYM_X, modulus=ell).all_coeffs())]
        out.append((coeffs, int(e)))
    return out


# ----------------------------------------------------------------------
# rational functions over Q
# ----------------------------------------------------------------------

class RationalFunction:
    """num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = Poly([1])):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = num.gcd(den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lead = den.leading()
        object.__setattr__(self, "num", num * (1 / lead))
        object.__setattr__(self, "den", den * (1 / lead))

    def __setattr__(self, *a):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def const(v) -> RationalFunction:
        return RationalFunction(Poly.const(v))

    @staticmethod
    def x() -> RationalFunction:
        return RationalFunction(Poly.x())

    @property
    def degree(self) -> int:
        """Degree as a map P^1 -> P^1."""
        return max(self.num.degree, self.den.degree)

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree <= 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.const(other)
        return (isinstance(other, RationalFunction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"({self.num!r})/({self.den!r})"

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(self.den, self.num) ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    @staticmethod
    def _coerce(v) -> RationalFunction:
        if isinstance(v, RationalFunction):
            return v
        if isinstance(v, Poly):
            return RationalFunction(v)
        return RationalFunction.const(_q(v))

    def derivative(self) -> RationalFunction:
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den)

    def __call__(self, x):
        """Projective evaluation: accepts Fraction/INF, returns Fraction/INF."""
        if x is INF:
            dn, dd = self.num.degree, self.den.degree
            if dn > dd:
                return INF
            if dn < dd:
                return Q(0)
            return self.num.leading() / self.den.leading()
        x = _q(x)
        nv = self.num(x)
        dv = self.den(x)
        if dv == 0:
            if nv == 0:
                raise ZeroDivisionError("indeterminate 0/0 evaluation")
            return INF
        return nv / dv

    def eval_numeric(self, x):
        """Evaluation at an mpf/mpc point (no projective handling)."""
        nv = 0
        for a in reversed(self.num.c):
            nv = nv * x + Q(a)
        dv = 0
        for a in reversed(self.den.c):
            dv = dv * x + Q(a)
        return nv / dv

    def compose(self, inner: RationalFunction) -> RationalFunction:
        """self(inner(x)) as an exact rational function."""
        d = max(self.num.degree, self.den.degree)
        nh = _compose_hom(self.num, inner, d)
        dh = _compose_hom(self.den, inner, d)
        return RationalFunction(nh, dh)

    def preimages(self, value) -> Poly:
        """Polynomial whose roots are the finite preimages of value (INF ok)."""
        if value is INF:
            return self.den
        return self.num - self.den * _q(value)


def _compose_hom(p: Poly, inner: RationalFunction, d: int) -> Poly:
    """p(inner) * inner.den^d for deg p <= d, by Horner in inner."""
    acc = Poly()
    for i in range(d, -1, -1):
        acc = acc * inner.num + inner.den ** (d - i) * p[i]
    return acc


# ----------------------------------------------------------------------
# bivariate polynomials (tower-step support)
# ----------------------------------------------------------------------

class BiPoly:
    """Sparse bivariate polynomial over Q: {(i, j): coeff} for x^i y^j."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Fraction] | None = None):
        t = {k: _q(v) for k, v in (terms or {}).items() if v != 0}
        object.__setattr__(self, "terms", t)

    def __setattr__(self, *a):
        raise AttributeError("BiPoly is immutable")

    @staticmethod
    def from_xy_polys(px: Poly, py: Poly) -> BiPoly:
        """px(x) * py(y)."""
        return BiPoly({(i, j): a * b
                       for i, a in enumerate(px.c) if a
                       for j, b in enumerate(py.c) if b})

    def bidegree(self) -> tuple[int, int]:
        if not self.terms:
            return (-1, -1)
        return (max(i for i, _ in self.terms), max(j for _, j in self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: BiPoly) -> BiPoly:
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, Q(0)) + v
        return BiPoly(t)

    def __neg__(self) -> BiPoly:
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: BiPoly) -> BiPoly:
        return self + (-other)

    def __mul__(self, other) -> BiPoly:
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: v * other for k, v in self.terms.items()})
        t: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), v1 in self.terms.items():
            for (i2, j2), v2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                t[k] = t.get(k, Q(0)) + v1 * v2
        return BiPoly(t)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    def evaluate(self, x, y):
        acc = 0
        for (i, j), v in self.terms.items():
            acc += v * x ** i * y ** j
        return acc

    def as_y_poly(self) -> list[Poly]:
        """Coefficients in y, each a Poly in x (ascending in y)."""
        dy = self.bidegree()[1]
        cols: list[list] = [[] for _ in range(dy + 1)]
        for j in range(dy + 1):
            dx = max((i for (i, jj) in self.terms if jj == j), default=-1)
            col = [Q(0)] * (dx + 1)
            for (i, jj), v in self.terms.items():
                if jj == j:
                    col[i] = v
            cols[j] = col
        return [Poly(c) for c in cols]

    @staticmethod
    def from_y_poly(cols: Sequence[Poly]) -> BiPoly:
        t = {}
        for j, p in enumerate(cols):
            for i, a in enumerate(p.c):
                if a:
                    t[(i, j)] = a
        return BiPoly(t)

    def exact_div(self, other: BiPoly) -> BiPoly:
        """Exact division in Q(x)[y]; raises if the quotient is not polynomial."""
        num = self.as_y_poly()
        den = other.as_y_poly()
        if not den:
            raise ZeroDivisionError
        # polynomial division in y over the field Q(x)
        num_rf = [RationalFunction(p) for p in num]
        den_rf = [RationalFunction(p) for p in den]
        dq = len(num_rf) - len(den_rf)
        if dq < 0:
            raise ArithmeticError("non-exact bivariate division")
        quot = [RationalFunction(Poly())] * (dq + 1)
        rem = list(num_rf)
        for k in range(dq, -1, -1):
            q = rem[k + len(den_rf) - 1] / den_rf[-1]
            quot[k] = q
            for j, d in enumerate(den_rf):
                rem[k + j] = rem[k + j] - q * d
        if any(not r.num.is_zero() for r in rem):
            raise ArithmeticError("non-exact bivariate division")
        cols = []
        for q in quot:
            if q.den.degree != 0:
                raise ArithmeticError("quotient not polynomial in x")
            cols.append(q.num * (1 / q.den[0]))
        return BiPoly.from_y_poly(cols)


# ----------------------------------------------------------------------
# rational reconstruction from a high-precision real
# ----------------------------------------------------------------------

GIANT_QUOTIENT = 10 ** 6


@dataclass(frozen=True)
class Reconstruction:
    value: Fraction
    locking_quotient: int        # the huge partial quotient that locked it (0 = exact terminate)
    convergent_index: int


def continued_fraction_reconstruct(x: Fraction, error_radius: Fraction,
                                   max_denominator: int) -> Reconstruction | None:
    """Recover a rational from an approximation x known to radius error_radius.

    Returns the convergent p/q with q <= max_denominator, |x - p/q| <= radius,
    locked in by a giant following partial quotient (or exact termination).
    None when no convergent is decisively better than its neighbors.
    """
    if max_denominator < 1:
        raise ValueError("max_denominator must be >= 1")
    x = _q(x)
    error_radius = abs(_q(error_radius))
    # continued fraction of x with convergents
    p_prev, q_prev = 1, 0
    p_cur, q_cur = int(x.numerator // x.denominator), 1
    quotients = []
    num, den = x.numerator, x.denominator
    a0 = num // den
    quotients.append(a0)
    num, den = den, num - a0 * den
    convergents = [(p_cur, q_cur)]
    while den != 0 and q_cur <= max_denominator:
        a = num // den
        quotients.append(a)
        num, den = den, num - a * den
        p_cur, p_prev = a * p_cur + p_prev, p_cur
        q_cur, q_prev = a * q_cur + q_prev, q_cur
        convergents.append((p_cur, q_cur))
    candidates = []
    for k, (p, q) in enumerate(convergents):
        if q > max_denominator:
            break
        err = abs(x - Q(p, q))
        if err > error_radius and err != 0:
            continue
        terminated = (k == len(quotients) - 1)
        nxt = 0 if terminated else quotients[k + 1]
        if terminated or nxt > GIANT_QUOTIENT:
            candidates.append(Reconstruction(Q(p, q), nxt, k))
    if len(candidates) != 1:
        return None
    return candidates[0]
