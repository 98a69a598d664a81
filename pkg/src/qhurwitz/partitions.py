"""Integer partitions: construction, enumeration, combinatorial statistics,
and evaluation of monomial symmetric functions at finite value lists.

Partitions index everything downstream: ramification profiles of branch
points, supports of probability measures, and the Young diagrams whose
cell contents drive the hypergeometric coefficients.
"""

from __future__ import annotations

from collections import Counter
from functools import cache, total_ordering
from math import factorial
from typing import Iterable, Iterator, NamedTuple


class Cell(NamedTuple):
    """A box of a Young diagram, rows and columns 1-based."""

    row: int
    col: int
    content: int  # col - row


@total_ordering
class Partition:
    """Weakly decreasing sequence of positive integers.

    Immutable, hashable and totally ordered (lexicographic on parts), so
    instances can serve as dict keys and be sorted canonically.  The empty
    partition is a legal value of weight 0.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        p = tuple(int(x) for x in parts)
        for i, x in enumerate(p):
            if x < 1:
                raise ValueError(f"parts must be positive integers, got {p}")
            if i > 0 and p[i - 1] < x:
                raise ValueError(f"parts must be weakly decreasing, got {p}")
        self._parts = p

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    def weight(self) -> int:
        """Sum of the parts."""
        return sum(self._parts)

    def length(self) -> int:
        """Number of parts."""
        return len(self._parts)

    def colength(self) -> int:
        """Weight minus length; 0 exactly when every part equals 1."""
        return self.weight() - self.length()

    def multiplicities(self) -> Counter[int]:
        """Map part value -> number of parts with that value."""
        return Counter(self._parts)

    def aut_order(self) -> int:
        """Product of factorials of the part multiplicities."""
        out = 1
        for m in self.multiplicities().values():
            out *= factorial(m)
        return out

    def z_order(self) -> int:
        """Centralizer order: product over part values i of i^m_i * m_i!."""
        out = 1
        for v, m in self.multiplicities().items():
            out *= v**m * factorial(m)
        return out

    def cells(self) -> list[Cell]:
        """All cells of the Young diagram in row-major order."""
        return [
            Cell(i, j, j - i)
            for i, part in enumerate(self._parts, start=1)
            for j in range(1, part + 1)
        ]

    def contents(self) -> list[int]:
        """Cell contents col - row, row-major order."""
        return [c.content for c in self.cells()]

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self._parts:
            return Partition()
        cols = [0] * self._parts[0]
        for part in self._parts:
            for j in range(part):
                cols[j] += 1
        return Partition(cols)

    def to_text(self) -> str:
        """Comma-separated parts, the empty partition rendered as "-"."""
        if not self._parts:
            return "-"
        return ",".join(str(p) for p in self._parts)

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse the to_text() form."""
        text = text.strip()
        if text in ("-", ""):
            return cls()
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}") from exc
        return cls(parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, i: int) -> int:
        return self._parts[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._parts == other._parts

    def __lt__(self, other: "Partition") -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._parts < other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({self._parts!r})"

    def __str__(self) -> str:
        return self.to_text()


@cache
def _partition_tuples(d: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in _partition_tuples(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(d: int) -> list[Partition]:
    """All partitions of d in reverse lexicographic order, (d) first.

    p(0) = 1 with the empty partition as the single entry.
    """
    if d < 0:
        raise ValueError(f"d must be nonnegative, got {d}")
    return [Partition(t) for t in _partition_tuples(d, d)]


@cache
def partition_count(d: int) -> int:
    """Number of partitions of d."""
    if d < 0:
        raise ValueError(f"d must be nonnegative, got {d}")
    return len(_partition_tuples(d, d)) if d else 1


def partitions_with_colength(n: int, c: int) -> list[Partition]:
    """All partitions of n with colength c, reverse lexicographic.

    A partition of n with colength c has exactly n - c parts, so it is
    obtained by adding 1 to each entry of a partition of c with at most
    n - c parts, padded with parts equal to 1.  For n >= 2c the count is
    the full partition number p(c).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= c < n:
        raise ValueError(f"colength must satisfy 0 <= c < n, got c={c}, n={n}")
    k = n - c  # number of parts
    out = []
    for t in _partition_tuples(c, c):
        if len(t) > k:
            continue
        parts = [x + 1 for x in t] + [1] * (k - len(t))
        out.append(Partition(parts))
    return out


def _distinct_permutations(items: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Distinct rearrangements of a multiset, without generating repeats."""
    counts = Counter(items)
    total = len(items)

    def rec(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for v in sorted(counts, reverse=True):
            if counts[v] == 0:
                continue
            counts[v] -= 1
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()
            counts[v] += 1

    return rec([])


def monomial_sym(lam: Partition, values, *, strict: bool = False):
    """Monomial symmetric function m_lam evaluated at a finite value list.

    Sums, over all distinct assignments of lam's parts as exponents to
    positions of ``values``, the product of the chosen powers.  With fewer
    variables than parts there is no valid assignment and the value is 0
    (set ``strict`` to reject that case instead).

    ``values`` may hold any commutative ring elements supporting ** with
    nonnegative integer exponents (Fraction, QSeries, ...).
    """
    values = list(values)
    m = len(values)
    k = lam.length()
    if k > m:
        if strict:
            raise ValueError(
                f"need at least {k} values for {lam!r}, got {m}"
            )
        return 0
    if k == 0:
        return 1
    exponents = lam.parts + (0,) * (m - k)
    result = None
    for assign in _distinct_permutations(exponents):
        term = None
        for v, e in zip(values, assign):
            if e == 0:
                continue
            f = v**e
            term = f if term is None else term * f
        result = term if result is None else result + term
    return result
