"""Rational quaternion algebras ramified at {2,3}, {2,5}, {2,7}, {3,5}.

Each algebra carries its designated maximal order, the elliptic
generators of the norm-positive normalizer group modulo scalars, and the
area/genus bookkeeping.  Structure constants and order bases are fixture
data; everything else is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exact import INF, Q, _q, kronecker_symbol, squarefree_core_discriminant

COS2_PI_OVER = {2: Q(0), 3: Q(1, 4), 4: Q(1, 2), 6: Q(3, 4)}  # cos^2(pi/e)


class QuatElement:
    """alpha1 + alpha2 i + alpha3 j + alpha4 ij in a fixed algebra."""

    __slots__ = ("alg", "co")

    def __init__(self, alg: AlgebraQ, coords):
        object.__setattr__(self, "alg", alg)
        object.__setattr__(self, "co", tuple(_q(c) for c in coords))
        assert len(self.co) == 4

    def __setattr__(self, *a):
        raise AttributeError("QuatElement is immutable")

    def _check(self, other: QuatElement):
        if self.alg is not other.alg:
            raise ValueError("elements of different algebras")

    def __add__(self, other: QuatElement) -> QuatElement:
        self._check(other)
        return QuatElement(self.alg, [a + b for a, b in zip(self.co, other.co)])

    def __sub__(self, other: QuatElement) -> QuatElement:
        self._check(other)
        return QuatElement(self.alg, [a - b for a, b in zip(self.co, other.co)])

    def __neg__(self) -> QuatElement:
        return QuatElement(self.alg, [-a for a in self.co])

    def scale(self, r) -> QuatElement:
        r = _q(r)
        return QuatElement(self.alg, [r * a for a in self.co])

    def __mul__(self, other) -> QuatElement:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        b, g = self.alg.beta, self.alg.gamma
        a1, a2, a3, a4 = self.co
        b1, b2, b3, b4 = other.co
        # basis 1, i, j, ij with i^2 = beta, j^2 = gamma, ij = -ji
        return QuatElement(self.alg, [
            a1 * b1 + b * a2 * b2 + g * a3 * b3 - b * g * a4 * b4,
            a1 * b2 + a2 * b1 - g * a3 * b4 + g * a4 * b3,
            a1 * b3 + a3 * b1 + b * a2 * b4 - b * a4 * b2,
            a1 * b4 + a4 * b1 + a2 * b3 - a3 * b2,
        ])

    __rmul__ = scale

    def conj(self) -> QuatElement:
        a1, a2, a3, a4 = self.co
        return QuatElement(self.alg, [a1, -a2, -a3, -a4])

    def trace(self) -> Fraction:
        return 2 * self.co[0]

    def norm(self) -> Fraction:
        b, g = self.alg.beta, self.alg.gamma
        a1, a2, a3, a4 = self.co
        return a1 * a1 - b * a2 * a2 - g * a3 * a3 + b * g * a4 * a4

    def is_scalar(self) -> bool:
        return self.co[1] == 0 and self.co[2] == 0 and self.co[3] == 0

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.co)

    def disc_element(self) -> Fraction:
        """(a - abar)^2 = tr^2 - 4N, the discriminant of Z[a]."""
        return self.trace() ** 2 - 4 * self.norm()

    def __eq__(self, other):
        return (isinstance(other, QuatElement) and self.alg is other.alg
                and self.co == other.co)

    def __hash__(self):
        return hash((id(self.alg), self.co))

    def __repr__(self):
        n = self.alg.gen_names
        parts = []
        for c, name in zip(self.co, ("", n[0], n[1], n[0] + n[1])):
            if c:
                parts.append(f"{c}{name}" if name else f"{c}")
        return "Quat(" + (" + ".join(parts) or "0") + ")"


@dataclass(frozen=True)
class EllipticGenerator:
    label: str
    element: QuatElement          # the order representative (norm-integral lift)
    order: int                    # 2, 3, 4, or 6 in A*/Q*
    cm_discriminant: int
    norm_class: int               # norm mod squares, squarefree representative
    t_value: object               # coordinate of its fixed point on X*(1); Fraction or INF


class AlgebraQ:
    """Quaternion algebra over Q with i^2 = beta, j^2 = gamma, ij = -ji."""

    def __init__(self, label: str, sigma: tuple[int, int], beta, gamma,
                 gen_names: str, order_basis_coords, elliptic_spec):
        self.label = label
        self.sigma = sigma
        self.beta = _q(beta)
        self.gamma = _q(gamma)
        self.gen_names = gen_names
        self.order_basis = [QuatElement(self, c) for c in order_basis_coords]
        self._order_inv = _invert4([list(e.co) for e in self.order_basis])
        self.elliptic = [
            EllipticGenerator(lbl, QuatElement(self, co), order, disc, ncls, tv)
            for (lbl, co, order, disc, ncls, tv) in elliptic_spec
        ]
        self._genus_terms: Optional[list[tuple[int, int]]] = None

    def __repr__(self):
        return f"AlgebraQ({{{self.sigma[0]},{self.sigma[1]}}})"

    def element(self, coords) -> QuatElement:
        return QuatElement(self, coords)

    def one(self) -> QuatElement:
        return QuatElement(self, (1, 0, 0, 0))

    def gen_i(self) -> QuatElement:
        return QuatElement(self, (0, 1, 0, 0))

    def gen_j(self) -> QuatElement:
        return QuatElement(self, (0, 0, 1, 0))

    # -- order membership
    def order_coords(self, x: QuatElement):
        """Coordinates of x in the maximal-order basis."""
        return _mat4_vec(self._order_inv, x.co)

    def in_order(self, x: QuatElement) -> bool:
        return all(c.denominator == 1 for c in self.order_coords(x))

    def elliptic_by_label(self, label: str) -> EllipticGenerator:
        for g in self.elliptic:
            if g.label == label:
                return g
        raise KeyError(label)


def _invert4(m):
    """Inverse of the 4x4 matrix whose COLUMNS are the rows of m, over Q."""
    n = 4
    a = [[_q(m[j][i]) for j in range(n)] + [Q(1) if i == j else Q(0) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _mat4_vec(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(4)) for i in range(4))


# ----------------------------------------------------------------------
# the four supported algebras (fixture data)
# ----------------------------------------------------------------------

def _build_algebras():
    algs = {}

    # {2,3}: b^2 = 2, c^2 = -3; order <b, (1+c)/2>
    algs["2,3"] = AlgebraQ(
        "2,3", (2, 3), 2, -3, "bc",
        [(1, 0, 0, 0), (0, 1, 0, 0), (Q(1, 2), 0, Q(1, 2), 0), (0, Q(1, 2), 0, Q(1, 2))],
        [
            # s2 = [bc+2c], s4 = [(2+b)(1+c)/2], s6 = [(3+c)/2]; s2*s4*s6 rational
            ("s2", (0, 0, 2, 1), 2, -24, 6, Q(0)),
            ("s4", (1, Q(1, 2), 1, Q(1, 2)), 4, -4, 2, Q(1)),
            ("s6", (Q(3, 2), 0, Q(1, 2), 0), 6, -3, 3, INF),
        ])

    # {2,5}: b^2 = -2, e^2 = 5; order <b, (1+e)/2>
    algs["2,5"] = AlgebraQ(
        "2,5", (2, 5), -2, 5, "be",
        [(1, 0, 0, 0), (0, 1, 0, 0), (Q(1, 2), 0, Q(1, 2), 0), (0, Q(1, 2), 0, Q(1, 2))],
        [
            ("s3", (Q(-1, 2), 1, Q(-1, 2), 0), 3, -3, 1, Q(0)),
            ("s2", (0, 1, 0, 0), 2, -8, 2, INF),
            ("s2p", (0, Q(5, 2), 1, Q(-1, 2)), 2, -20, 5, Q(2)),
            ("s2pp", (0, Q(5, 2), 0, Q(-1, 2)), 2, -40, 10, Q(27)),
        ])

    # {2,7}: b^2 = -2, g^2 = 7; order Z[b,g] + (1+b+g)/2
    algs["2,7"] = AlgebraQ(
        "2,7", (2, 7), -2, 7, "bg",
        [(1, 0, 0, 0), (0, 1, 0, 0), (Q(1, 2), Q(1, 2), Q(1, 2), 0), (0, Q(1, 2), 0, Q(1, 2))],
        [
            ("s2", (0, 1, 0, 0), 2, -8, 2, Q(0)),
            ("s2p", (0, Q(7, 2), -1, Q(-1, 2)), 2, -56, 14, None),
            ("s2pp", (0, Q(7, 2), 1, Q(-1, 2)), 2, -56, 14, None),
            ("s4", (1, 2, 1, 0), 4, -4, 2, INF),
        ])

    # {3,5}: c^2 = -3, e^2 = 5; order Z[(1+c)/2, e]
    algs["3,5"] = AlgebraQ(
        "3,5", (3, 5), -3, 5, "ce",
        [(1, 0, 0, 0), (Q(1, 2), Q(1, 2), 0, 0), (0, 0, 1, 0), (0, 0, Q(1, 2), Q(1, 2))],
        [
            ("s2", (0, 4, -3, 0), 2, -12, 3, Q(0)),
            ("s2p", (0, 5, -3, -1), 2, -15, 15, Q(81)),
            ("s2pp", (0, 10, Q(-9, 2), Q(-7, 2)), 2, -60, 15, Q(1)),
            ("s6", (Q(3, 2), Q(1, 2), 0, 0), 6, -3, 3, INF),
        ])
    return algs


ALGEBRAS = _build_algebras()


def algebra(label: str) -> AlgebraQ:
    key = label.replace(" ", "").replace("{", "").replace("}", "")
    if key not in ALGEBRAS:
        raise KeyError(f"unsupported algebra {label!r}; have {sorted(ALGEBRAS)}")
    return ALGEBRAS[key]


# ----------------------------------------------------------------------
# group-theoretic checks and invariants
# ----------------------------------------------------------------------

def order_mod_scalars(x: QuatElement, max_order: int = 12) -> int | None:
    """Multiplicative order of [x] in A*/Q*, or None if above max_order."""
    if x.is_zero():
        raise ValueError("zero element")
    p = x
    for k in range(1, max_order + 1):
        if p.is_scalar():
            return k
        p = p * x
    return None


def cm_ring_discriminant(x: QuatElement) -> Fraction:
    """Discriminant of (Q + Q x) intersected with the maximal order.

    x must be a non-scalar order element; the intersection is an order in
    the imaginary quadratic field Q(x), and its discriminant divides
    disc(Z[x]) = tr(x)^2 - 4 N(x) by a square of the conductor.
    """
    alg = x.alg
    if not alg.in_order(x):
        raise ValueError("element not in the maximal order")
    if x.is_scalar():
        raise ValueError("scalar element")
    d = x.disc_element()
    # strip even content: replace x by primitive (j + x)/g whenever integral
    improved = True
    while improved:
        improved = False
        d = x.disc_element()
        g = 2
        while g * g <= 4 * abs(d):
            if d % (g * g) == 0:
                for j in range(g):
                    cand = (x + x.alg.one().scale(j)).scale(Q(1, g))
                    if alg.in_order(cand) and not cand.is_scalar():
                        x = cand
                        improved = True
                        break
                if improved:
                    break
            g += 1
    return x.disc_element()


@dataclass
class PresentationReport:
    algebra: str
    ok: bool
    failures: list[str] = field(default_factory=list)
    details: list[str] = field(default_factory=list)


def verify_elliptic_presentation(alg: AlgebraQ) -> PresentationReport:
    """Check orders, the product relation, norm classes, the trace-norm
    identity and CM discriminants of the elliptic generators."""
    rep = PresentationReport(alg.label, True)
    prod = alg.one()
    for g in alg.elliptic:
        x = g.element
        if not alg.in_order(x):
            rep.failures.append(f"{g.label}: representative not in the order")
        k = order_mod_scalars(x)
        if k != g.order:
            rep.failures.append(f"{g.label}: order {k} != {g.order}")
        lhs = x.trace() ** 2
        rhs = 4 * COS2_PI_OVER[g.order] * x.norm()
        if lhs != rhs:
            rep.failures.append(f"{g.label}: trace identity fails ({lhs} vs {rhs})")
        ncls = _squarefree_part(x.norm())
        if ncls != g.norm_class:
            rep.failures.append(f"{g.label}: norm class {ncls} != {g.norm_class}")
        d = cm_ring_discriminant(x)
        if d != g.cm_discriminant:
            rep.failures.append(f"{g.label}: CM discriminant {d} != {g.cm_discriminant}")
        prod = prod * x
        rep.details.append(f"{g.label}: order {g.order}, norm {x.norm()}, disc {d}")
    if not prod.is_scalar():
        rep.failures.append(f"product of generators not scalar: {prod!r}")
    rep.ok = not rep.failures
    return rep


def _squarefree_part(r: Fraction) -> int:
    from .exact import factor_smooth
    n = r.numerator * r.denominator
    if n == 0:
        return 0
    f = factor_smooth(n, 10 ** 4)
    assert f.complete
    out = f.sign
    for p, e in f.factors:
        if e % 2:
            out *= p
    return out


# ----------------------------------------------------------------------
# area and genus
# ----------------------------------------------------------------------

def area(alg: AlgebraQ, starred: bool = True) -> Fraction:
    """Normalized hyperbolic area of X(1) or X*(1)."""
    a = Q(1, 6)
    for p in alg.sigma:
        a *= Q(p - 1, 2) if starred else (p - 1)
    return a


def genus_x0star(alg: AlgebraQ, ell: int) -> int:
    """Genus of the degree-(l+1) congruence cover of X*(1).

    Uses the Kronecker-symbol count of elliptic points; integrality of
    the result is asserted.  Supported for the algebras whose elliptic
    points all have order in {2,3,4,6} counted by 1 + (D|l): {2,3}, {2,5}.
    """
    from .exact import is_prime
    if ell in alg.sigma:
        raise ValueError(f"l = {ell} is ramified in the algebra")
    if not is_prime(ell):
        raise ValueError(f"l = {ell} is not prime")
    if alg.label not in ("2,3", "2,5"):
        raise NotImplementedError("genus formula fixed only for {2,3} and {2,5}")
    two_g_minus_2 = (ell + 1) * area(alg, True)
    for g in alg.elliptic:
        disc = g.cm_discriminant
        count = 1 + kronecker_symbol(disc, ell)
        two_g_minus_2 -= count * (1 - Q(1, g.order))
    g2 = two_g_minus_2 + 2
    if g2 % 2 != 0:
        raise ArithmeticError(f"genus not integral for l={ell}: {g2}/2")
    gg = g2 / 2
    if gg.denominator != 1 or gg < 0:
        raise ArithmeticError(f"genus not a non-negative integer for l={ell}: {gg}")
    return int(gg)
