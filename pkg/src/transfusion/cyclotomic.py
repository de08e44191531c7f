"""Exact arithmetic in the cyclotomic fields Q(zeta_N).

An element is a polynomial in zeta_N with Fraction coefficients, reduced
modulo the N-th cyclotomic polynomial. Binary operations promote both sides
to the lcm conductor. This is enough field theory for unit-circle phases,
characters, and the small exact linear algebra the fusion checks need.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple, Union

Rat = Union[int, Fraction]

# polynomials below are coefficient lists, lowest degree first


def _ptrim(p: List[Fraction]) -> List[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(out)


def _pscale(a: Sequence[Fraction], c: Fraction) -> List[Fraction]:
    if c == 0:
        return []
    return [x * c for x in a]


def _pmul(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _ptrim(out)


def _pdivmod(
    num: Sequence[Fraction], den: Sequence[Fraction]
) -> Tuple[List[Fraction], List[Fraction]]:
    den = list(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(num)
    quo = [Fraction(0)] * max(0, len(rem) - len(den) + 1)
    lead = den[-1]
    while len(rem) >= len(den):
        c = rem[-1] / lead
        k = len(rem) - len(den)
        quo[k] = c
        for i, d in enumerate(den):
            rem[k + i] -= c * d
        rem.pop()
        _ptrim(rem)
        if len(rem) < len(den):
            break
        # inner trim can drop several terms at once
        while rem and rem[-1] == 0:
            rem.pop()
    return _ptrim(quo), _ptrim(rem)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, low degree
    first. Computed by dividing x^n - 1 by the proper-divisor factors."""
    if n < 1:
        raise ValueError("conductor must be positive")
    if n == 1:
        return (-1, 1)
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            phi_d = [Fraction(c) for c in cyclotomic_polynomial(d)]
            num, rem = _pdivmod(num, phi_d)
            if rem:
                raise ArithmeticError(f"cyclotomic division left remainder at {d}")
    out = []
    for c in num:
        if c.denominator != 1:
            raise ArithmeticError("cyclotomic polynomial not integral")
        out.append(c.numerator)
    return tuple(out)


def _euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(coeffs: Sequence[Fraction], n: int) -> Tuple[Fraction, ...]:
    phi = [Fraction(c) for c in cyclotomic_polynomial(n)]
    _, rem = _pdivmod(list(coeffs), phi)
    deg = len(phi) - 1
    out = list(rem) + [Fraction(0)] * (deg - len(rem))
    return tuple(out)


class Cyclotomic:
    """An element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1)."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Sequence[Rat], reduce: bool = True):
        fr = [Fraction(c) for c in coeffs]
        if reduce:
            self.coeffs = _reduce(fr, conductor)
        else:
            deg = _euler_phi(conductor)
            if len(fr) != deg:
                raise ValueError(f"expected {deg} coefficients for conductor {conductor}")
            self.coeffs = tuple(fr)
        self.conductor = conductor

    @staticmethod
    def from_rational(x: Rat) -> "Cyclotomic":
        return Cyclotomic(1, [Fraction(x)], reduce=False)

    def promote(self, m: int) -> "Cyclotomic":
        n = self.conductor
        if m == n:
            return self
        if m % n != 0:
            raise ValueError(f"cannot promote conductor {n} into {m}")
        step = m // n
        big = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1 if self.coeffs else 1)
        for i, c in enumerate(self.coeffs):
            big[i * step] = c
        return Cyclotomic(m, big)

    def _pair(self, other: "Cyclotomic") -> Tuple["Cyclotomic", "Cyclotomic"]:
        m = lcm(self.conductor, other.conductor)
        return self.promote(m), other.promote(m)

    @staticmethod
    def _coerce(x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.from_rational(x)
        return NotImplemented

    def __add__(self, other):
        o = Cyclotomic._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._pair(o)
        return Cyclotomic(a.conductor, _padd(a.coeffs, b.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, tuple(-c for c in self.coeffs), reduce=False)

    def __sub__(self, other):
        o = Cyclotomic._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = Cyclotomic._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.conductor == 1:
            c = o.coeffs[0] if o.coeffs else Fraction(0)
            return Cyclotomic(
                self.conductor, tuple(x * c for x in self.coeffs), reduce=False
            )
        if self.conductor == 1:
            c = self.coeffs[0] if self.coeffs else Fraction(0)
            return Cyclotomic(o.conductor, tuple(x * c for x in o.coeffs), reduce=False)
        a, b = self._pair(o)
        return Cyclotomic(a.conductor, _pmul(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        # extended Euclid in Q[x]: s*self + t*phi = g with g a nonzero constant
        r0, r1 = list(self.coeffs), phi
        s0, s1 = [Fraction(1)], []
        while _ptrim(list(r1)):
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _padd(s0, _pscale(_pmul(q, s1), Fraction(-1)))
        if len(_ptrim(list(r0))) != 1:
            raise ArithmeticError("gcd with cyclotomic polynomial not constant")
        g = r0[0]
        return Cyclotomic(self.conductor, _pscale(s0, 1 / g))

    def __truediv__(self, other):
        o = Cyclotomic._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic.from_rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "Cyclotomic":
        """Complex conjugation, zeta -> zeta^(N-1)."""
        n = self.conductor
        big = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            big[(n - i) % n] += c
        return Cyclotomic(n, big)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        o = Cyclotomic._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self._pair(o)
        return a.coeffs == b.coeffs

    # no __hash__: equal values can live at different conductors, so dict
    # keys go through key_at with a batch-wide conductor instead
    __hash__ = None

    def key_at(self, m: int) -> Tuple[Fraction, ...]:
        """Coefficient tuple at conductor m, for dict keys across a batch."""
        return self.promote(m).coeffs

    def __repr__(self):
        if self.is_rational():
            return f"Cyc({self.coeffs[0]})"
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"Cyc{self.conductor}[{terms}]"


@lru_cache(maxsize=8192)
def _phase_cached(num: int, den: int) -> Cyclotomic:
    big = [Fraction(0)] * den
    big[num % den] = Fraction(1)
    return Cyclotomic(den, big)


def phase(f: Rat) -> Cyclotomic:
    """exp(2 pi i f) for rational f, exact."""
    fr = Fraction(f) % 1
    return _phase_cached(fr.numerator, fr.denominator)


# matrix helpers; a matrix is a tuple of row tuples of Cyclotomic


def as_cyclotomic(x) -> Cyclotomic:
    c = Cyclotomic._coerce(x)
    if c is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a cyclotomic number")
    return c


def matrix(rows) -> Tuple[Tuple[Cyclotomic, ...], ...]:
    return tuple(tuple(as_cyclotomic(x) for x in row) for row in rows)


def identity_matrix(n: int) -> Tuple[Tuple[Cyclotomic, ...], ...]:
    one = Cyclotomic.from_rational(1)
    zero = Cyclotomic.from_rational(0)
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def mat_mul(a, b):
    if not a or not b:
        return ()
    inner = len(b)
    assert all(len(row) == inner for row in a)
    cols = len(b[0])
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = Cyclotomic.from_rational(0)
            for k in range(inner):
                if not row[k].is_zero():
                    acc = acc + row[k] * b[k][j]
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def mat_add(a, b):
    return tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_scale(c, a):
    c = as_cyclotomic(c)
    return tuple(tuple(c * x for x in row) for row in a)


def kron(a, b):
    if not a or not b:
        return ()
    out = []
    for ra in a:
        for rb in b:
            out.append(tuple(x * y for x in ra for y in rb))
    return tuple(out)


def mat_trace(a) -> Cyclotomic:
    acc = Cyclotomic.from_rational(0)
    for i, row in enumerate(a):
        acc = acc + row[i]
    return acc


def mat_eq(a, b) -> bool:
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        for x, y in zip(ra, rb):
            if x != y:
                return False
    return True


def row_reduce(rows: Sequence[Sequence[Cyclotomic]]):
    """Gaussian elimination over the cyclotomic field.

    Returns (reduced rows as lists, pivot column list)."""
    mat_ = [list(r) for r in rows]
    pivots: List[int] = []
    if not mat_:
        return [], pivots
    ncols = len(mat_[0])
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat_)):
            if not mat_[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        mat_[r], mat_[pivot] = mat_[pivot], mat_[r]
        inv = mat_[r][c].inverse()
        mat_[r] = [inv * x for x in mat_[r]]
        for i in range(len(mat_)):
            if i != r and not mat_[i][c].is_zero():
                f = mat_[i][c]
                mat_[i] = [x - f * y for x, y in zip(mat_[i], mat_[r])]
        pivots.append(c)
        r += 1
        if r == len(mat_):
            break
    return mat_, pivots


def matrix_rank(rows) -> int:
    _, pivots = row_reduce(matrix(rows))
    return len(pivots)


def solve_linear(a, b) -> Optional[List[Cyclotomic]]:
    """One exact solution of A x = b, or None if inconsistent. For systems
    with free variables the free coordinates are set to zero."""
    a = matrix(a)
    bvec = [as_cyclotomic(x) for x in b]
    if len(a) != len(bvec):
        raise ValueError("matrix and vector sizes differ")
    if not a:
        return []
    ncols = len(a[0])
    aug = [list(row) + [bv] for row, bv in zip(a, bvec)]
    red, pivots = row_reduce(aug)
    zero = Cyclotomic.from_rational(0)
    for row in red:
        if all(x.is_zero() for x in row[:-1]) and not row[-1].is_zero():
            return None
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][-1]
    return x
