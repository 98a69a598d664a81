"""Exact arithmetic kernel: truncated power series in q with Fraction
coefficients, and polynomials in a bookkeeping variable beta whose
coefficients are such series.

Everything here is exact; no floating point enters at any stage.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def format_rational(x: Fraction | int) -> str:
    """Canonical "p/q" rendering, denominator always present."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" (or anything Fraction accepts, e.g. "0.25")."""
    return Fraction(text.strip())


class QSeries:
    """Formal power series in q truncated at order N: exponents 0..N-1.

    Arithmetic results are reported modulo O(q^N); binary operations on
    mismatched orders truncate to the smaller one.  Instances are
    immutable.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: Iterable[Scalar] = ()):
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > order:
            raise ValueError(f"got {len(cs)} coefficients for order {order}")
        cs.extend([Fraction(0)] * (order - len(cs)))
        self._order = order
        self._coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls(order, (1,))

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: Scalar = 1) -> "QSeries":
        """coeff * q^exponent, zero if the exponent is beyond truncation."""
        if exponent < 0:
            raise ValueError(f"exponent must be nonnegative, got {exponent}")
        cs = [Fraction(0)] * order
        if exponent < order:
            cs[exponent] = Fraction(coeff)
        return cls(order, cs)

    @classmethod
    def bose_factor(cls, a: int, order: int) -> "QSeries":
        """q^a/(1 - q^a) = sum of q^(a*m) over m >= 1, truncated."""
        if a < 1:
            raise ValueError(f"a must be positive, got {a}")
        cs = [Fraction(0)] * order
        m = a
        while m < order:
            cs[m] = Fraction(1)
            m += a
        return cls(order, cs)

    def coefficient(self, j: int) -> Fraction:
        """Coefficient of q^j; j must be below the truncation order."""
        if not 0 <= j < self._order:
            raise IndexError(f"exponent {j} outside truncation order {self._order}")
        return self._coeffs[j]

    def truncate(self, order: int) -> "QSeries":
        if order > self._order:
            raise ValueError(
                f"cannot extend order {self._order} series to {order}"
            )
        return QSeries(order, self._coeffs[:order])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def leading(self) -> tuple[int, Fraction] | None:
        """(exponent, coefficient) of the lowest nonzero term, or None."""
        for j, c in enumerate(self._coeffs):
            if c != 0:
                return j, c
        return None

    def evaluate(self, q: Fraction) -> Fraction:
        """Value of the truncated polynomial at a rational q."""
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * q + c
        return acc

    def _binary(self, other: "QSeries") -> tuple[int, "QSeries", "QSeries"]:
        n = min(self._order, other._order)
        return n, self.truncate(n), other.truncate(n)

    def __add__(self, other):
        if isinstance(other, QSeries):
            n, a, b = self._binary(other)
            return QSeries(n, [x + y for x, y in zip(a._coeffs, b._coeffs)])
        if isinstance(other, (int, Fraction)):
            cs = list(self._coeffs)
            cs[0] += other
            return QSeries(self._order, cs)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self._order, [-c for c in self._coeffs])

    def __sub__(self, other):
        if isinstance(other, (QSeries, int, Fraction)):
            return self + (-other if isinstance(other, QSeries) else -Fraction(other))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, QSeries):
            n, a, b = self._binary(other)
            cs = [Fraction(0)] * n
            for i, x in enumerate(a._coeffs):
                if x == 0:
                    continue
                for j in range(n - i):
                    y = b._coeffs[j]
                    if y != 0:
                        cs[i + j] += x * y
            return QSeries(n, cs)
        if isinstance(other, (int, Fraction)):
            return QSeries(self._order, [c * other for c in self._coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = QSeries.one(self._order)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "QSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self._coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [Fraction(0)] * self._order
        inv[0] = 1 / c0
        for j in range(1, self._order):
            acc = Fraction(0)
            for i in range(1, j + 1):
                acc += self._coeffs[i] * inv[j - i]
            inv[j] = -acc / c0
        return QSeries(self._order, inv)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._order, self._coeffs))

    def __repr__(self) -> str:
        return f"QSeries({self._order}, {list(self._coeffs)!r})"

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                var = "q" if j == 1 else f"q^{j}"
                sign = "-" if c < 0 else ("+" if terms else "")
                terms.append(f"{sign} {mag}{var}" if terms else f"{sign}{mag}{var}")
        body = " ".join(terms) if terms else "0"
        return f"{body} + O(q^{self._order})"

    def to_json_dict(self) -> dict:
        return {
            "order": self._order,
            "coeffs": [format_rational(c) for c in self._coeffs],
        }


class BetaQPoly:
    """Polynomial in beta of degree at most D, with QSeries coefficients.

    coeffs[d] is the coefficient of beta^d.  Multiplication truncates at
    beta degree D and at the shared q order.
    """

    __slots__ = ("_beta_order", "_coeffs")

    def __init__(self, beta_order: int, q_order: int, coeffs: Sequence[QSeries] = ()):
        if beta_order < 0:
            raise ValueError(f"beta_order must be nonnegative, got {beta_order}")
        cs = [c.truncate(q_order) for c in coeffs]
        if len(cs) > beta_order + 1:
            raise ValueError(
                f"got {len(cs)} coefficients for beta degree {beta_order}"
            )
        while len(cs) < beta_order + 1:
            cs.append(QSeries.zero(q_order))
        self._beta_order = beta_order
        self._coeffs = tuple(cs)

    @property
    def beta_order(self) -> int:
        return self._beta_order

    @property
    def q_order(self) -> int:
        return self._coeffs[0].order

    @property
    def coeffs(self) -> tuple[QSeries, ...]:
        return self._coeffs

    @classmethod
    def one(cls, beta_order: int, q_order: int) -> "BetaQPoly":
        return cls(beta_order, q_order, (QSeries.one(q_order),))

    @classmethod
    def linear(cls, const: QSeries, lin: QSeries, beta_order: int) -> "BetaQPoly":
        """const + beta * lin, at the coefficients' shared q order."""
        n = min(const.order, lin.order)
        if beta_order == 0:
            return cls(0, n, (const.truncate(n),))
        return cls(beta_order, n, (const.truncate(n), lin.truncate(n)))

    def coefficient(self, d: int) -> QSeries:
        """QSeries coefficient of beta^d."""
        if not 0 <= d <= self._beta_order:
            raise IndexError(f"beta degree {d} outside truncation {self._beta_order}")
        return self._coeffs[d]

    def __add__(self, other):
        if not isinstance(other, BetaQPoly):
            return NotImplemented
        db = min(self._beta_order, other._beta_order)
        nq = min(self.q_order, other.q_order)
        return BetaQPoly(
            db, nq, [a + b for a, b in zip(self._coeffs, other._coeffs)]
        )

    def __mul__(self, other):
        if isinstance(other, BetaQPoly):
            db = min(self._beta_order, other._beta_order)
            nq = min(self.q_order, other.q_order)
            out = [QSeries.zero(nq) for _ in range(db + 1)]
            for i in range(min(len(self._coeffs), db + 1)):
                a = self._coeffs[i]
                if a.is_zero():
                    continue
                for j in range(min(len(other._coeffs), db + 1 - i)):
                    b = other._coeffs[j]
                    if not b.is_zero():
                        out[i + j] = out[i + j] + a * b
            return BetaQPoly(db, nq, out)
        if isinstance(other, (int, Fraction, QSeries)):
            return BetaQPoly(
                self._beta_order, self.q_order, [c * other for c in self._coeffs]
            )
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BetaQPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"BetaQPoly(D={self._beta_order}, N={self.q_order})"
