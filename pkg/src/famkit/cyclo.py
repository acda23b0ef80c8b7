"""Exact arithmetic in the cyclotomic field Q(zeta_60).

Every character value and Fourier-matrix entry that occurs for the point
groups handled here lives in Q(zeta_60): the group exponents all divide 60.
A value is stored as a sparse integer-combination of powers zeta_60^k with
Fraction coefficients; equality and hashing go through the reduced
coordinate vector over the power basis 1, z, ..., z^15 (degree phi(60)=16).
"""

from __future__ import annotations

import cmath
from fractions import Fraction

N_ROOT = 60
DEGREE = 16

# x^16 = -x^14 + x^10 + x^8 + x^6 - x^2 - 1  (the degree-60 cyclotomic polynomial)
_POW16 = (-1, 0, -1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, -1, 0)


def _reduction_table():
    # table[k] = coordinates of zeta^k over the power basis, k in [0, 60)
    table = []
    for k in range(DEGREE):
        row = [0] * DEGREE
        row[k] = 1
        table.append(tuple(row))
    for k in range(DEGREE, N_ROOT):
        prev = table[k - 1]
        row = [0] * DEGREE
        for i in range(DEGREE - 1):
            row[i + 1] += prev[i]
        top = prev[DEGREE - 1]
        if top:
            for i in range(DEGREE):
                row[i] += top * _POW16[i]
        table.append(tuple(row))
    return tuple(table)


_RED = _reduction_table()
_UNIT_CIRCLE = tuple(cmath.exp(2j * cmath.pi * k / N_ROOT) for k in range(N_ROOT))

_ZERO_CANON = (Fraction(0),) * DEGREE


class CycNumber:
    """Immutable element of Q(zeta_60)."""

    __slots__ = ("_terms", "_canon", "_hash")

    def __init__(self, terms=None):
        # terms: dict {exponent mod 60: Fraction}, zeros dropped
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    k %= N_ROOT
                    c0 = clean.get(k)
                    c = c if c0 is None else c0 + c
                    if c:
                        clean[k] = c
                    elif k in clean:
                        del clean[k]
        self._terms = clean
        self._canon = None
        self._hash = None

    @staticmethod
    def zero():
        return _ZERO

    @staticmethod
    def one():
        return _ONE

    @staticmethod
    def from_fraction(q):
        q = Fraction(q)
        return CycNumber({0: q}) if q else _ZERO

    @staticmethod
    def zeta(j=1):
        """zeta_60^j."""
        return CycNumber({j % N_ROOT: Fraction(1)})

    @staticmethod
    def root_of_unity(n, j=1):
        """zeta_n^j for n dividing 60."""
        assert N_ROOT % n == 0, n
        return CycNumber({(N_ROOT // n) * j % N_ROOT: Fraction(1)})

    def canonical(self):
        """Coordinates over the power basis 1..zeta^15, a 16-tuple of Fractions."""
        if self._canon is None:
            coords = [Fraction(0)] * DEGREE
            for k, c in self._terms.items():
                red = _RED[k]
                for i in range(DEGREE):
                    if red[i]:
                        coords[i] += c * red[i]
            self._canon = tuple(coords)
        return self._canon

    def __bool__(self):
        if not self._terms:
            return False
        return self.canonical() != _ZERO_CANON

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNumber.from_fraction(other)
        if not isinstance(other, CycNumber):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.canonical())
        return self._hash

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNumber.from_fraction(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            c0 = terms.get(k)
            c = c if c0 is None else c0 + c
            if c:
                terms[k] = c
            elif k in terms:
                del terms[k]
        out = CycNumber()
        out._terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = CycNumber()
        out._terms = {k: -c for k, c in self._terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNumber.from_fraction(other)
        return self + (-other)

    def __rsub__(self, other):
        return CycNumber.from_fraction(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if not q:
                return _ZERO
            out = CycNumber()
            out._terms = {k: c * q for k, c in self._terms.items()}
            return out
        terms = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                if k >= N_ROOT:
                    k -= N_ROOT
                c = c1 * c2
                c0 = terms.get(k)
                c = c if c0 is None else c0 + c
                if c:
                    terms[k] = c
                elif k in terms:
                    del terms[k]
        out = CycNumber()
        out._terms = terms
        return out

    __rmul__ = __mul__

    def __truediv__(self, other):
        q = Fraction(other)
        out = CycNumber()
        out._terms = {k: c / q for k, c in self._terms.items()}
        return out

    def conj(self):
        """Complex conjugation: zeta^k -> zeta^(-k)."""
        out = CycNumber()
        out._terms = {(-k) % N_ROOT: c for k, c in self._terms.items()}
        return out

    def galois(self, a):
        """The automorphism zeta -> zeta^a, gcd(a, 60) = 1."""
        assert _gcd(a, N_ROOT) == 1, a
        out = CycNumber()
        terms = {}
        for k, c in self._terms.items():
            k2 = (k * a) % N_ROOT
            terms[k2] = terms.get(k2, Fraction(0)) + c
        out._terms = {k: c for k, c in terms.items() if c}
        return out

    def is_rational(self):
        canon = self.canonical()
        return all(c == 0 for c in canon[1:])

    def as_fraction(self):
        canon = self.canonical()
        assert all(c == 0 for c in canon[1:]), self
        return canon[0]

    def is_real(self):
        return self.canonical() == self.conj().canonical()

    def approx(self):
        """Complex float approximation."""
        v = 0j
        for k, c in self._terms.items():
            v += float(c) * _UNIT_CIRCLE[k]
        return v

    def sign_real(self):
        """Sign of a real value: -1, 0 or 1.  Exact zero test first, then a
        float evaluation guarded against values too close to zero to trust."""
        if not self:
            return 0
        v = self.approx()
        assert abs(v.imag) < 1e-9, self
        assert abs(v.real) > 1e-9, self
        return 1 if v.real > 0 else -1

    def export(self):
        """Canonical coordinates as [numerator, denominator] pairs."""
        return [[c.numerator, c.denominator] for c in self.canonical()]

    def __repr__(self):
        if not self._terms:
            return "Cyc(0)"
        bits = []
        for k in sorted(self._terms):
            c = self._terms[k]
            bits.append(f"{c}" if k == 0 else f"{c}*z{k}")
        return "Cyc(" + " + ".join(bits) + ")"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


_ZERO = CycNumber()
_ONE = CycNumber({0: Fraction(1)})

ZERO = _ZERO
ONE = _ONE
