"""Integer Chebyshev algebra and closed-form spanning-tree counts.

The spanning-tree count of a connected circulant graph factors through
Chebyshev polynomials of the first kind:

* even valency, steps s_1 < ... < s_k < n/2:

      tau(n) = (n / q) * prod_p |2 T_n(w_p) - 2|,

  where q = s_1^2 + ... + s_k^2 and w_p ranges over the s_k - 1 roots of
  the characteristic polynomial P(w) = sum_j (T_{s_j}(w) - 1) / (w - 1);

* odd valency (diagonal step), steps s_1 < ... < s_k < n on 2n vertices:

      tau(n) = (n 4^{s_k-1} / q) * prod(T_n(u_p) - 1) * prod(T_n(v_p) + 1),

  with P(w) = 2k + 1 - 2 sum_j T_{s_j}(w), u_p the roots of P(u) = 1 other
  than u = 1 (removed by exact division), and v_p the roots of P(v) = -1.

Both products are transcendental numbers that happen to be integers.  They
are evaluated in arbitrary-precision floating point and *certified*: the
value must sit within 2^-20 of an integer with the right divisibility, and
recomputation at doubled precision must reproduce the same integer,
otherwise the precision escalates (up to a hard cap) and finally fails
loudly.  Correctness is anchored by agreement with the exact determinant
oracle in :mod:`circtrees.exact` at small sizes.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath as mp
import numpy as np

from .errors import (CertificationError, DisconnectedGraphError,
                     InternalConsistencyError, RootRefinementError)

MAX_CERTIFY_BITS = 8192
INTEGRALITY_TOL_BITS = 20


class IntPolynomial:
    """Dense univariate polynomial with arbitrary-precision integer coefficients.

    Coefficients are stored lowest degree first; the leading coefficient is
    nonzero except for the zero polynomial, which has an empty tuple.
    Instances are immutable and support +, -, * (with ints or polynomials),
    exact division, and evaluation at anything Horner's rule accepts.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return IntPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def derivative(self):
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self):
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self):
        """Divide out the content; sign of the leading coefficient is kept."""
        g = self.content()
        if g <= 1:
            return self
        return IntPolynomial([c // g for c in self.coeffs])

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction, float, complex, mpmath."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_exact(self, divisor):
        """Quotient and remainder over the rationals, demanding integrality.

        Raises :class:`InternalConsistencyError` if quotient or remainder
        pick up a denominator; used only where exact divisibility is an
        algebraic identity.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dv = divisor.coeffs
        dd = len(dv) - 1
        lead = Fraction(dv[-1])
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            f = rem[i] / lead
            quot[i - dd] = f
            if f:
                for j, d in enumerate(dv):
                    rem[i - dd + j] -= f * d
        qints, rints = [], []
        for f in quot:
            if f.denominator != 1:
                raise InternalConsistencyError(
                    f"non-integer quotient dividing {self} by {divisor}")
            qints.append(f.numerator)
        for f in rem[:dd] if dd > 0 else []:
            if f.denominator != 1:
                raise InternalConsistencyError(
                    f"non-integer remainder dividing {self} by {divisor}")
            rints.append(f.numerator)
        return IntPolynomial(qints), IntPolynomial(rints)

    def div_exact(self, divisor):
        """Exact quotient; the remainder must vanish."""
        q, r = self.divmod_exact(divisor)
        if not r.is_zero:
            raise InternalConsistencyError(
                f"nonzero remainder {r} dividing {self} by {divisor}")
        return q

    def __repr__(self):
        if self.is_zero:
            return "IntPolynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*w")
            else:
                terms.append(f"{c}*w^{i}")
        return "IntPolynomial(" + " + ".join(terms) + ")"


def poly_gcd(a, b):
    """Primitive gcd in Z[w], normalized to a positive leading coefficient."""
    a, b = a.primitive(), b.primitive()
    while not b.is_zero:
        a, b = b, _rational_mod(a, b).primitive()
    if a.is_zero:
        return a
    if a.leading < 0:
        a = -a
    return a


def _rational_mod(a, b):
    """Remainder of a by b over Q, cleared to a primitive integer polynomial."""
    rem = [Fraction(c) for c in a.coeffs]
    dv = b.coeffs
    dd = len(dv) - 1
    lead = Fraction(dv[-1])
    for i in range(len(rem) - 1, dd - 1, -1):
        f = rem[i] / lead
        if f:
            for j, d in enumerate(dv):
                rem[i - dd + j] -= f * d
    rem = rem[:dd] if dd > 0 else []
    while rem and rem[-1] == 0:
        rem.pop()
    if not rem:
        return IntPolynomial([])
    denom = math.lcm(*(f.denominator for f in rem))
    return IntPolynomial([int(f * denom) for f in rem])


def square_free_decomposition(poly):
    """Yun's algorithm over Z: returns [(factor, multiplicity), ...].

    Factors are primitive with positive leading coefficient; content and
    sign of the input are dropped (they carry no roots).
    """
    a = poly.primitive()
    if a.leading < 0:
        a = -a
    if a.degree < 1:
        return []
    da = a.derivative()
    g = poly_gcd(a, da)
    if g.degree == 0:
        return [(a, 1)]
    b = a.div_exact(g)
    d = da.div_exact(g) - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        f = poly_gcd(b, d)
        if f.degree > 0:
            out.append((f, i))
        b = b.div_exact(f)
        d = d.div_exact(f) - b.derivative()
        i += 1
    return out


@lru_cache(maxsize=None)
def cheb_t(m):
    """Chebyshev polynomial of the first kind T_m as an IntPolynomial."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return IntPolynomial([1])
    if m == 1:
        return IntPolynomial([0, 1])
    return IntPolynomial([0, 2]) * cheb_t(m - 1) - cheb_t(m - 2)


@lru_cache(maxsize=None)
def cheb_u(m):
    """Chebyshev polynomial of the second kind U_m; U_m(1) = m + 1."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return IntPolynomial([1])
    if m == 1:
        return IntPolynomial([0, 2])
    return IntPolynomial([0, 2]) * cheb_u(m - 1) - cheb_u(m - 2)


def _to_mpc(w):
    if isinstance(w, Fraction):
        return mp.mpc(mp.mpf(w.numerator) / w.denominator)
    return mp.mpc(w)


def cheb_eval_large(w, n, precision=None):
    """T_n(w) in O(log n) multiplications via T_n(w) = (b^n + b^-n)/2.

    Here b = w + sqrt(w^2 - 1) on whichever square-root branch gives
    |b| >= 1, so b^n dominates and the reciprocal term cannot cancel
    catastrophically.  Runs at the caller's mpmath precision unless
    ``precision`` (bits) is given.
    """
    if precision is not None:
        with mp.workprec(precision):
            return cheb_eval_large(w, n)
    z = _to_mpc(w)
    s = mp.sqrt(z * z - 1)
    b = z + s
    if abs(b) < 1:
        b = z - s
    bn = b ** n
    return (bn + 1 / bn) / 2


def cheb_u_eval_large(w, m, precision=None):
    """U_m(w) via (b^{m+1} - b^{-(m+1)}) / (b - b^{-1}), |b| >= 1 branch."""
    if precision is not None:
        with mp.workprec(precision):
            return cheb_u_eval_large(w, m)
    z = _to_mpc(w)
    s = mp.sqrt(z * z - 1)
    if s == 0:  # w = +/-1
        sign = 1 if z.real > 0 else -1
        return mp.mpc((m + 1) * sign ** m)
    b = z + s
    if abs(b) < 1:
        b = z - s
    bn = b ** (m + 1)
    return (bn - 1 / bn) / (b - 1 / b)


@dataclass(frozen=True)
class CertifiedRoots:
    """All complex roots of an integer polynomial with certified error radii.

    ``roots[i]`` is a distinct root with multiplicity ``multiplicities[i]``
    and error radius ``radii[i]``; the Newton residual |p(root)| stays below
    the bound the radius implies.  Multiplicities sum to the degree.
    """

    roots: tuple
    radii: tuple
    multiplicities: tuple
    working_precision: int

    @property
    def total_count(self):
        return sum(self.multiplicities)

    def expanded(self):
        """Roots repeated according to multiplicity."""
        return tuple(r for r, m in zip(self.roots, self.multiplicities)
                     for _ in range(m))


def _double_precision_roots(poly):
    """Hardware-precision root estimates via the companion matrix."""
    scale = max(abs(c) for c in poly.coeffs)
    coeffs = [float(c) / scale for c in reversed(poly.coeffs)]
    return np.roots(coeffs)


def _newton_refine(poly, dpoly, seed, precision):
    z = mp.mpc(complex(seed))
    tol = mp.mpf(2) ** (-precision)
    for _ in range(100):
        fv = poly(z)
        dv = dpoly(z)
        if dv == 0:
            raise RootRefinementError(f"derivative vanished near {z}")
        step = fv / dv
        z = z - step
        if abs(step) <= tol * max(1, abs(z)):
            break
    else:
        raise RootRefinementError(
            f"Newton did not converge for {poly} from seed {seed}")
    fv = poly(z)
    dv = dpoly(z)
    if dv == 0:
        raise RootRefinementError(f"derivative vanished at {z}")
    radius = 4 * abs(fv / dv) + mp.mpf(2) ** (4 - precision) * max(1, abs(z))
    return z, radius


def find_roots(poly, precision):
    """All complex roots of ``poly`` at ``precision`` bits, certified.

    Multiple roots are detected exactly (gcd with the derivative, Yun
    decomposition) and each square-free factor is solved by companion-matrix
    seeds refined with Newton iteration in mpmath.  Raises
    :class:`RootRefinementError` when refinement stalls or two iterates
    collapse onto one root; callers escalate precision and retry.
    """
    if poly.degree < 1:
        raise ValueError("find_roots requires a nonconstant polynomial")
    roots, radii, mults = [], [], []
    with mp.workprec(precision + 64):
        for factor, mult in square_free_decomposition(poly):
            dfactor = factor.derivative()
            refined = []
            for seed in _double_precision_roots(factor):
                z, rad = _newton_refine(factor, dfactor, seed, precision)
                refined.append((z, rad))
            for i, (zi, ri) in enumerate(refined):
                for zj, rj in refined[:i]:
                    if abs(zi - zj) <= 16 * (ri + rj):
                        raise RootRefinementError(
                            f"root iterates collapsed near {zi} for {factor}")
            for z, rad in refined:
                roots.append(z)
                radii.append(rad)
                mults.append(mult)
    found = sum(mults)
    if found != poly.degree:
        raise InternalConsistencyError(
            f"found {found} roots for degree {poly.degree} polynomial {poly}")
    return CertifiedRoots(tuple(roots), tuple(radii), tuple(mults), precision)


def build_even_char(steps):
    """Characteristic polynomial P(w) of an even-valency step set.

    P(w) = sum_j (T_{s_j}(w) - 1) / (w - 1), degree s_k - 1, with the
    division exact by construction; P(1) equals the step square sum.
    """
    total = IntPolynomial([])
    for s in steps:
        total = total + (cheb_t(s) - 1)
    p = total.div_exact(IntPolynomial([-1, 1]))
    if p(1) != sum(s * s for s in steps):
        raise InternalConsistencyError(
            f"P(1) != sum of squared steps for {steps}")
    return p


def build_odd_char(steps):
    """Characteristic polynomial P(w) = 2k + 1 - 2 sum_j T_{s_j}(w).

    Degree s_k; P(1) = 1 and P'(1) = -2 * (step square sum).
    """
    k = len(steps)
    p = IntPolynomial([2 * k + 1])
    for s in steps:
        p = p - 2 * cheb_t(s)
    if p(1) != 1:
        raise InternalConsistencyError(f"P(1) != 1 for diagonal steps {steps}")
    return p


def _family_connected(steps, n, diagonal):
    g = 0
    for s in steps:
        g = math.gcd(g, s)
    if diagonal:
        g = math.gcd(g, n)
    return math.gcd(g, n if not diagonal else 2 * n) == 1


def _headroom_bits(char_polys, n, prefactor):
    """Upper estimate of log2 of the certified product, from double roots."""
    bits = math.log2(max(prefactor, 1)) + 8
    for poly in char_polys:
        if poly.degree < 1:
            continue
        for w in _double_precision_roots(poly):
            w = complex(w)
            s = (w * w - 1) ** 0.5
            grow = max(abs(w + s), abs(w - s))
            if grow > 1:
                bits += n * math.log2(grow)
    return int(bits) + 1


def _certified_integer(evaluate, divisor, initial_bits, what):
    """Escalating-precision evaluation of a product that must be an integer.

    Accepts when the value is within 2^-20 of a positive integer divisible
    by ``divisor`` and recomputation at doubled precision reproduces it;
    otherwise doubles the working precision up to MAX_CERTIFY_BITS.
    """
    tol = mp.mpf(2) ** (-INTEGRALITY_TOL_BITS)
    bits = max(initial_bits, 128)
    while bits <= MAX_CERTIFY_BITS:
        try:
            # rounding and comparison must run at full precision: the
            # candidate integer can need far more than the ambient 53 bits
            with mp.workprec(bits + 64):
                value = evaluate(bits)
                candidate = int(mp.nint(value))
                accepted = (candidate > 0 and candidate % divisor == 0
                            and abs(value - candidate) < tol)
            if accepted:
                with mp.workprec(2 * bits + 64):
                    confirm = evaluate(2 * bits)
                    confirmed = (int(mp.nint(confirm)) == candidate
                                 and abs(confirm - candidate) < tol)
                if confirmed:
                    return candidate // divisor
        except RootRefinementError:
            pass
        bits *= 2
    raise CertificationError(
        f"{what} failed to certify as an integer below {MAX_CERTIFY_BITS} bits")


def _require_family(spec, diagonal, n):
    if spec.diagonal != diagonal:
        wanted = "diagonal" if diagonal else "even-valency"
        raise ValueError(f"{spec} is not a {wanted} spec")
    if n is None:
        n = spec.order
    if n < 2:
        raise ValueError(f"order {n} too small")
    if not _family_connected(spec.steps, n, diagonal):
        raise DisconnectedGraphError(
            f"steps {spec.steps} give a disconnected graph at order {n}",
            spec=spec)
    return n


def tau_even(spec, n=None):
    """Spanning-tree count of the even-valency family at order ``n``.

    Evaluates (n/q) * prod |2 T_n(w_p) - 2| over the certified roots of the
    characteristic polynomial and returns the certified integer.  ``n``
    defaults to ``spec.order``; other connected orders evaluate the family
    closed form (for n <= 2 s_k this is the cyclic multigraph count, since
    steps then fold together or onto n/2).
    """
    n = _require_family(spec, False, n)
    q = sum(s * s for s in spec.steps)
    char = build_even_char(spec.steps)

    def evaluate(bits):
        with mp.workprec(bits):
            product = mp.mpf(n)
            if char.degree >= 1:
                for w, mult in zip(*_roots_with_mults(char, bits)):
                    t = cheb_eval_large(w, n)
                    product *= abs(2 * t - 2) ** mult
            return product

    start = 128 + _headroom_bits([char], n, n)
    return _certified_integer(evaluate, q, start, f"tau_even({spec}, n={n})")


def tau_odd(spec, n=None):
    """Spanning-tree count of the diagonal family at half-order ``n``.

    Evaluates (n 4^{s_k-1}/q) * prod(T_n(u_p)-1) * prod(T_n(v_p)+1) with
    u_p the roots of (P(u)-1)/(u-1) (the forced root u = 1 removed by exact
    polynomial division) and v_p the roots of P(v)+1.
    """
    n = _require_family(spec, True, n)
    steps = spec.steps
    q = sum(s * s for s in steps)
    s_max = steps[-1]
    char = build_odd_char(steps)
    u_poly = (char - 1).div_exact(IntPolynomial([-1, 1]))
    v_poly = char + 1
    prefactor = n * 4 ** (s_max - 1)

    def evaluate(bits):
        with mp.workprec(bits):
            product = mp.mpc(prefactor)
            if u_poly.degree >= 1:
                for u, mult in zip(*_roots_with_mults(u_poly, bits)):
                    product *= (cheb_eval_large(u, n) - 1) ** mult
            for v, mult in zip(*_roots_with_mults(v_poly, bits)):
                product *= (cheb_eval_large(v, n) + 1) ** mult
            if abs(product.imag) > mp.mpf(2) ** (-INTEGRALITY_TOL_BITS - 2) \
                    * max(1, abs(product.real)):
                raise RootRefinementError(
                    f"product has stray imaginary part {product.imag}")
            return product.real

    start = 128 + _headroom_bits([u_poly, v_poly], n, prefactor)
    return _certified_integer(evaluate, q, start, f"tau_odd({spec}, n={n})")


def tau_even_u_form(spec, n=None):
    """Even-valency count via n * |prod_p U_{n-1}(sqrt((w_p+1)/2))|^2.

    Algebraically identical to :func:`tau_even`; kept as an independent
    evaluation path for cross-checking.
    """
    n = _require_family(spec, False, n)
    char = build_even_char(spec.steps)

    def evaluate(bits):
        with mp.workprec(bits):
            product = mp.mpc(1)
            if char.degree >= 1:
                for w, mult in zip(*_roots_with_mults(char, bits)):
                    x = mp.sqrt((w + 1) / 2)
                    product *= cheb_u_eval_large(x, n - 1) ** mult
            return abs(product) ** 2

    start = 128 + _headroom_bits([char], n, n)
    squared = _certified_integer(
        evaluate, 1, start, f"tau_even_u_form({spec}, n={n})")
    return n * squared


def _roots_with_mults(poly, bits):
    cr = find_roots(poly, bits)
    return cr.roots, cr.multiplicities
