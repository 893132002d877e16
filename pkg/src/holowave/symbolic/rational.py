"""Exact bivariate polynomial and rational-function arithmetic.

Coefficients are arbitrary-precision rationals (fractions.Fraction).
Rational functions are kept unreduced: equality is decided by
cross-multiplication (a/b == c/d iff a*d - b*c is the zero polynomial), so
no multivariate gcd is ever needed.

Polynomials are entered as strings, e.g.

    poly("25*xi^6 + 100*xi^5*eta - 3/2*xi*eta^2", ("xi", "eta"))

with explicit '*' for products; parenthesized factors are allowed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb as _comb
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = ["Poly", "RationalFunction", "poly", "rational", "solve_linear_system"]


class Poly:
    """Sparse polynomial in two variables over Fraction coefficients."""

    __slots__ = ("terms", "variables")

    def __init__(self, terms: Mapping[tuple[int, int], Fraction],
                 variables: tuple[str, str] = ("xi", "eta")):
        clean = {}
        for exps, c in terms.items():
            c = Fraction(c)
            if c != 0:
                clean[(int(exps[0]), int(exps[1]))] = c
        self.terms = clean
        self.variables = variables

    # constructors -------------------------------------------------------

    @classmethod
    def zero(cls, variables=("xi", "eta")) -> "Poly":
        return cls({}, variables)

    @classmethod
    def const(cls, c, variables=("xi", "eta")) -> "Poly":
        return cls({(0, 0): Fraction(c)}, variables)

    @classmethod
    def var(cls, axis: int, variables=("xi", "eta")) -> "Poly":
        e = (1, 0) if axis == 0 else (0, 1)
        return cls({e: Fraction(1)}, variables)

    # predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degrees = {i + j for i, j in self.terms}
        return len(degrees) <= 1

    # algebra --------------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other, self.variables)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Poly(out, self.variables)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({e: -c for e, c in self.terms.items()}, self.variables)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = Fraction(other)
            return Poly({e: v * c for e, v in self.terms.items()}, self.variables)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Poly(out, self.variables)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # evaluation ----------------------------------------------------------

    def eval(self, x, y):
        """Exact evaluation (Fractions in, Fraction out)."""
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * Fraction(x) ** i * Fraction(y) ** j
        return total

    def eval_float(self, x, y):
        """Vectorized float evaluation (numpy arrays in, array out)."""
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        total = np.zeros(np.broadcast(x, y).shape, dtype=np.float64)
        for (i, j), c in self.terms.items():
            total = total + float(c) * x ** i * y ** j
        return total

    # views ----------------------------------------------------------------

    def lowest_part(self, axis: int) -> "Poly":
        """Terms of minimal degree in the given variable."""
        if self.is_zero():
            return self
        dmin = min(e[axis] for e in self.terms)
        return Poly({e: c for e, c in self.terms.items() if e[axis] == dmin},
                    self.variables)

    def swap(self) -> "Poly":
        """Exchange the two variables."""
        return Poly({(j, i): c for (i, j), c in self.terms.items()}, self.variables)

    def univariate_on_diagonal(self) -> list[Fraction]:
        """Coefficients of p(t, t) by total degree (index = power of t)."""
        if not self.terms:
            return [Fraction(0)]
        d = self.total_degree()
        coeffs = [Fraction(0)] * (d + 1)
        for (i, j), c in self.terms.items():
            coeffs[i + j] += c
        return coeffs

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        vx, vy = self.variables
        bits = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            factors = [] if c != 1 or (i == 0 and j == 0) else None
            s = str(c)
            mono = []
            if i:
                mono.append(vx if i == 1 else f"{vx}^{i}")
            if j:
                mono.append(vy if j == 1 else f"{vy}^{j}")
            if mono and c == 1:
                s = "*".join(mono)
            elif mono:
                s = str(c) + "*" + "*".join(mono)
            bits.append(s)
        return " + ".join(bits).replace("+ -", "- ")


# --------------------------------------------------------------------------
# parsing
# --------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, variables: tuple[str, str]):
        self.text = text.replace(" ", "")
        self.pos = 0
        self.variables = variables

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch

    def parse(self) -> Poly:
        result = self.expr()
        if self.pos != len(self.text):
            raise ValueError(f"trailing input at {self.pos}: {self.text[self.pos:]!r}")
        return result

    def expr(self) -> Poly:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        total = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            total = total + (t if op == "+" else -t)
        return total

    def term(self) -> Poly:
        result = self.factor()
        while self.peek() == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> Poly:
        base = self.base()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                raise ValueError("negative exponents are not polynomial")
            num = self.integer()
            base = base ** num
        return base

    def base(self) -> Poly:
        ch = self.peek()
        if ch == "(":
            self.take()
            inner = self.expr()
            if self.take() != ")":
                raise ValueError("unbalanced parenthesis")
            return inner
        if ch.isdigit():
            num = self.integer()
            if self.peek() == "/":
                self.take()
                den = self.integer()
                return Poly.const(Fraction(num, den), self.variables)
            return Poly.const(num, self.variables)
        name = self.identifier()
        if name == self.variables[0]:
            return Poly.var(0, self.variables)
        if name == self.variables[1]:
            return Poly.var(1, self.variables)
        raise ValueError(f"unknown variable {name!r} (expected {self.variables})")

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.take()
        if start == self.pos:
            raise ValueError(f"expected integer at {start}")
        return int(self.text[start:self.pos])

    def identifier(self) -> str:
        start = self.pos
        while self.peek().isalpha():
            self.take()
        if start == self.pos:
            raise ValueError(f"expected name at {start} in {self.text!r}")
        return self.text[start:self.pos]


def poly(text: str, variables: tuple[str, str] = ("xi", "eta")) -> Poly:
    return _Parser(text, variables).parse()


# --------------------------------------------------------------------------
# rational functions
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalFunction:
    """Unreduced quotient of two polynomials."""

    num: Poly
    den: Poly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalFunction":
        return cls(p, Poly.const(1, p.variables))

    @classmethod
    def zero(cls, variables=("xi", "eta")) -> "RationalFunction":
        return cls(Poly.zero(variables), Poly.const(1, variables))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction.from_poly(other)
        return RationalFunction.from_poly(Poly.const(other, self.num.variables))

    def __add__(self, other) -> "RationalFunction":
        o = self._coerce(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def equals(self, other) -> bool:
        """Cross-multiplication test: self - other is identically zero."""
        o = self._coerce(other)
        return (self.num * o.den - o.num * self.den).is_zero()

    def eval(self, x, y) -> Fraction:
        d = self.den.eval(x, y)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at ({x}, {y})")
        return self.num.eval(x, y) / d

    def eval_float(self, x, y):
        return self.num.eval_float(x, y) / self.den.eval_float(x, y)

    def homogeneity(self) -> int | None:
        """Degree of homogeneity, or None if num or den is inhomogeneous."""
        if self.num.is_zero():
            return 0
        if not (self.num.is_homogeneous() and self.den.is_homogeneous()):
            return None
        return self.num.total_degree() - self.den.total_degree()

    def leading_low(self, axis: int = 0):
        """Leading behavior as the `axis` variable tends to zero.

        Returns (coefficient, exponents) with coefficient a Fraction and
        exponents the (axis0, axis1) powers of the leading monomial ratio.
        Requires the lowest parts of num and den to be monomials.
        """
        if self.num.is_zero():
            return Fraction(0), (0, 0)
        ln = self.num.lowest_part(axis)
        ld = self.den.lowest_part(axis)
        if len(ln.terms) != 1 or len(ld.terms) != 1:
            raise ValueError("leading part is not a single monomial ratio")
        (en, cn), = ln.terms.items()
        (ed, cd), = ld.terms.items()
        return cn / cd, (en[0] - ed[0], en[1] - ed[1])

    def value_on_diagonal(self) -> Fraction:
        """Exact limit value at (1, 1), approached along the diagonal gap.

        The unreduced representation may carry removable factors of the
        difference of the variables; expanding in v = second - first at
        first = 1 and stripping common powers of v takes the exact limit.
        """
        if self.num.is_zero():
            return Fraction(0)

        def expand_in_gap(p: Poly) -> list[Fraction]:
            # coefficients of p(1, 1 + v) as a polynomial in v
            d = max((j for (_, j) in p.terms), default=0)
            coeffs = [Fraction(0)] * (d + 1)
            for (_, j), c in p.terms.items():
                for m in range(j + 1):
                    coeffs[m] += c * _comb(j, m)
            return coeffs

        num_v = expand_in_gap(self.num)
        den_v = expand_in_gap(self.den)
        while den_v and den_v[0] == 0:
            if num_v and num_v[0] != 0:
                raise ZeroDivisionError("pole on the diagonal")
            num_v = num_v[1:] or [Fraction(0)]
            den_v = den_v[1:]
        if not den_v:
            raise ZeroDivisionError("denominator identically zero on the diagonal")
        return (num_v[0] if num_v else Fraction(0)) / den_v[0]

    def swap(self) -> "RationalFunction":
        return RationalFunction(self.num.swap(), self.den.swap())

    def symmetrize(self) -> "RationalFunction":
        """(f(x, y) + f(y, x)) / 2."""
        return (self + self.swap()) * Fraction(1, 2)

    def __repr__(self) -> str:
        return f"({self.num!r}) / ({self.den!r})"


def rational(num: str, den: str = "1",
             variables: tuple[str, str] = ("xi", "eta")) -> RationalFunction:
    return RationalFunction(poly(num, variables), poly(den, variables))


# --------------------------------------------------------------------------
# exact linear algebra (cofactor determinants, Cramer solutions)
# --------------------------------------------------------------------------


def _det(matrix: list[list[RationalFunction]]) -> RationalFunction:
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = None
    sign = 1
    for col in range(n):
        entry = matrix[0][col]
        if not entry.is_zero():
            minor = [[row[c] for c in range(n) if c != col] for row in matrix[1:]]
            piece = entry * _det(minor) * sign
            total = piece if total is None else total + piece
        sign = -sign
    if total is None:
        variables = matrix[0][0].num.variables
        return RationalFunction.zero(variables)
    return total


def solve_linear_system(matrix: Sequence[Sequence], rhs: Sequence):
    """Cramer solution of a small exact linear system.

    Entries may be Poly or RationalFunction.  Returns (solutions, det).
    Raises ArithmeticError when the determinant vanishes identically.
    """
    def lift(e):
        return e if isinstance(e, RationalFunction) else RationalFunction.from_poly(e)

    A = [[lift(e) for e in row] for row in matrix]
    b = [lift(e) for e in rhs]
    n = len(A)
    det = _det(A)
    if det.is_zero():
        raise ArithmeticError("singular system: determinant is identically zero")
    solutions = []
    for col in range(n):
        Acol = [[b[r] if c == col else A[r][c] for c in range(n)] for r in range(n)]
        solutions.append(_det(Acol) / det)
    return solutions, det
