"""Dense univariate polynomials over the rationals.

Coefficients are stored lowest degree first. The class is small on purpose:
it carries exactly what characteristic polynomials and the nil-independence
test need (ring operations, division with remainder, gcd, Sturm sequences,
real root isolation and rational roots).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class Poly:
    """Immutable polynomial with :class:`~fractions.Fraction` coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c: Number) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: Number = 1) -> Poly:
        return cls([0] * degree + [c])

    @classmethod
    def coerce(cls, other) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls([other])
        raise TypeError(f"cannot coerce {type(other).__name__} to Poly")

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations --------------------------------------------------

    def __add__(self, other) -> Poly:
        other = Poly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> Poly:
        return self + (-Poly.coerce(other))

    def __rsub__(self, other) -> Poly:
        return Poly.coerce(other) - self

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        other = Poly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> Poly:
        return Poly([c / other for c in self.coeffs])

    def __pow__(self, k: int) -> Poly:
        result, base = Poly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        other = Poly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self / self.leading

    def derivative(self) -> Poly:
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def primitive_integer_coeffs(self) -> list[int]:
        """Integer multiple of ``self`` with coprime coefficients, lowest first."""
        if self.is_zero():
            return []
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return [v // g for v in ints]


def poly_gcd(*polys: Poly) -> Poly:
    """Monic gcd of the given polynomials; the zero polynomial if all vanish."""
    g = Poly()
    for p in polys:
        a, b = g, Poly.coerce(p)
        while not b.is_zero():
            a, b = b, a % b
        g = a.monic()
    return g


def squarefree_part(p: Poly) -> Poly:
    if p.degree <= 0:
        return p.monic()
    return (p // poly_gcd(p, p.derivative())).monic()


def sturm_sequence(p: Poly) -> list[Poly]:
    """Sturm chain ``p, p', -rem(p_{k-1}, p_k), ...`` ending at the last nonzero term."""
    if p.is_zero():
        return []
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def _sign_changes(values: Sequence[Fraction]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at(seq: Sequence[Poly], x: Number) -> int:
    return _sign_changes([q(x) for q in seq])


def _variations_at_infinity(seq: Sequence[Poly], positive: bool) -> int:
    vals = []
    for q in seq:
        lc = q.leading
        if not positive and q.degree % 2 == 1:
            lc = -lc
        vals.append(lc)
    return _sign_changes(vals)


def count_real_roots(p: Poly, lo: Number | None = None, hi: Number | None = None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]`` (default: all of R).

    Raises:
        ValueError: if ``p`` is the zero polynomial.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    seq = sturm_sequence(p)
    left = _variations_at_infinity(seq, False) if lo is None else _variations_at(seq, lo)
    right = _variations_at_infinity(seq, True) if hi is None else _variations_at(seq, hi)
    return left - right


def cauchy_bound(p: Poly) -> Fraction:
    """Every complex root has absolute value strictly below this bound."""
    lc = abs(p.leading)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


def isolate_real_roots(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(lo, hi]`` each containing exactly one real root.

    Intervals are returned in increasing order and have rational endpoints.
    An interval with ``lo == hi`` pins an exact rational root.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    if p.degree <= 0:
        return []
    q = squarefree_part(p)
    seq = sturm_sequence(q)
    bound = cauchy_bound(q)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = _variations_at(seq, lo) - _variations_at(seq, hi)
        if n == 0:
            continue
        if n == 1:
            if q(hi) == 0:
                out.append((hi, hi))
            else:
                out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort()
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(p: Poly) -> list[Fraction]:
    """Distinct rational roots of ``p``, sorted.

    Uses the rational root theorem on the primitive integer form, with zero
    roots split off first.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    ints = p.primitive_integer_coeffs()
    roots: set[Fraction] = set()
    shift = 0
    while shift < len(ints) and ints[shift] == 0:
        shift += 1
    if shift:
        roots.add(Fraction(0))
    ints = ints[shift:]
    if len(ints) > 1:
        reduced = Poly(ints)
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if reduced(cand) == 0:
                        roots.add(cand)
    return sorted(roots)
