"""Exact Gaussian-rational scalars and small dense matrices over them."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction, "Gauss"]


class Gauss:
    """A complex number a + b·i with rational a and b."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        object.__setattr__(self, "re", _rational(re))
        object.__setattr__(self, "im", _rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("Gauss values are immutable")

    @staticmethod
    def of(x: Number) -> "Gauss":
        if isinstance(x, Gauss):
            return x
        return Gauss(x, 0)

    def __add__(self, other: Number) -> "Gauss":
        o = Gauss.of(other)
        return Gauss(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "Gauss":
        o = Gauss.of(other)
        return Gauss(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Number) -> "Gauss":
        return Gauss.of(other) - self

    def __neg__(self) -> "Gauss":
        return Gauss(-self.re, -self.im)

    def __mul__(self, other: Number) -> "Gauss":
        o = Gauss.of(other)
        if not o.im and not self.im:
            return Gauss(self.re * o.re)
        return Gauss(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "Gauss":
        o = Gauss.of(other)
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return Gauss(Fraction(num.re, norm), Fraction(num.im, norm))

    def conjugate(self) -> "Gauss":
        return Gauss(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if not isinstance(other, Gauss):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        return f"Gauss({self})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return _imag_str(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{_imag_str(abs(self.im))}"

    def to_pairs(self) -> list:
        """JSON-friendly ``[[re_num, re_den], [im_num, im_den]]``."""
        return [[self.re.numerator, self.re.denominator], [self.im.numerator, self.im.denominator]]

    @staticmethod
    def from_pairs(pairs) -> "Gauss":
        (rn, rd), (inum, iden) = pairs
        return Gauss(Fraction(rn, rd), Fraction(inum, iden))


def _rational(x) -> Union[int, Fraction]:
    """Integers stay plain ints for speed; everything else becomes an exact Fraction."""
    if type(x) is int:
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _imag_str(x: Fraction) -> str:
    if x == 1:
        return "i"
    if x == -1:
        return "-i"
    return f"{x}i"


ZERO = Gauss(0)
ONE = Gauss(1)
I = Gauss(0, 1)

# i**k for k mod 4
UNIT_POWERS = (ONE, I, Gauss(-1), Gauss(0, -1))


Matrix = tuple  # tuple of row tuples of Gauss


def matrix(rows: Iterable[Iterable[Number]]) -> Matrix:
    return tuple(tuple(Gauss.of(x) for x in row) for row in rows)


def identity(dim: int) -> Matrix:
    return tuple(tuple(ONE if r == c else ZERO for c in range(dim)) for r in range(dim))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in cols:
            acc = ZERO
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def scale(c: Number, a: Matrix) -> Matrix:
    c = Gauss.of(c)
    return tuple(tuple(c * x for x in row) for row in a)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def conjugate(a: Matrix) -> Matrix:
    return tuple(tuple(x.conjugate() for x in row) for row in a)


def dagger(a: Matrix) -> Matrix:
    return conjugate(transpose(a))


def scalar_multiple_of_identity(a: Matrix):
    """Return c if ``a == c·1``, else None."""
    c = a[0][0]
    for r, row in enumerate(a):
        for col, x in enumerate(row):
            if x != (c if r == col else ZERO):
                return None
    return c


def proportionality(a: Matrix, b: Matrix):
    """Return c with ``a == c·b`` (b nonzero), else None."""
    c = None
    for ra, rb in zip(a, b):
        for x, y in zip(ra, rb):
            if y.is_zero():
                if not x.is_zero():
                    return None
                continue
            ratio = x / y
            if c is None:
                c = ratio
            elif ratio != c:
                return None
    return c


def is_real(a: Matrix) -> bool:
    return all(x.im == 0 for row in a for x in row)


def block_map(a: Matrix, size: int, fn) -> Matrix:
    """Apply ``fn`` to each ``size``×``size`` block and reassemble."""
    n = len(a) // size
    blocks = [[tuple(tuple(a[r * size + i][c * size + j] for j in range(size)) for i in range(size))
               for c in range(n)] for r in range(n)]
    return _assemble([[fn(blocks[r][c]) for c in range(n)] for r in range(n)], size)


def block_transpose(a: Matrix, size: int) -> Matrix:
    """Swap block (r, c) with block (c, r) leaving each block untouched."""
    n = len(a) // size
    blocks = [[tuple(tuple(a[r * size + i][c * size + j] for j in range(size)) for i in range(size))
               for c in range(n)] for r in range(n)]
    return _assemble([[blocks[c][r] for c in range(n)] for r in range(n)], size)


def _assemble(blocks: Sequence[Sequence[Matrix]], size: int) -> Matrix:
    n = len(blocks)
    rows = []
    for r in range(n):
        for i in range(size):
            rows.append(tuple(x for c in range(n) for x in blocks[r][c][i]))
    return tuple(rows)
