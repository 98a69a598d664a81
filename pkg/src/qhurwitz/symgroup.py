"""Symmetric-group machinery: irreducible characters via border-strip
recursion, hook-length dimensions, class sizes, and normalized counts of
factorizations of the identity with prescribed cycle types (by character
sum and, as an oracle, by literal enumeration).

Character values are memoized in a process-wide table that can be
persisted to disk and re-installed in later runs.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import cache
from itertools import permutations as _all_permutations
from math import factorial
from pathlib import Path
from typing import Iterable, Sequence

from .partitions import Partition

# guards for the literal-enumeration oracle
BRUTE_FORCE_MAX_N = 7
BRUTE_FORCE_MAX_K = 4

_CHAR_MEMO: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def _strip_removals(lam: tuple[int, ...], t: int) -> list[tuple[tuple[int, ...], int]]:
    """Shapes obtained by removing a border strip of size t, with heights.

    Works on first-column beta-numbers lam_i + (l - i): removing a strip of
    size t moves one beta-number down by t onto a free slot; the strip
    height is the number of beta-numbers jumped over.
    """
    l = len(lam)
    beta = [lam[i] + l - 1 - i for i in range(l)]
    bset = set(beta)
    out = []
    for b in beta:
        nb = b - t
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted([c for c in beta if c != b] + [nb], reverse=True)
        sub = tuple(new_beta[i] - (l - 1 - i) for i in range(l))
        out.append((tuple(p for p in sub if p > 0), height))
    return out


def _char(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1  # both shapes exhausted
    key = (lam, mu)
    cached = _CHAR_MEMO.get(key)
    if cached is not None:
        return cached
    total = 0
    for sub, height in _strip_removals(lam, mu[0]):
        total += (-1) ** height * _char(sub, mu[1:])
    _CHAR_MEMO[key] = total
    return total


def character(lam: Partition, mu: Partition) -> int:
    """Irreducible character chi_lam evaluated on the class of cycle type mu.

    Border-strip recursion on the largest part of mu, memoized across calls.
    """
    if lam.weight() != mu.weight():
        raise ValueError(
            f"shape and class must have equal weight, got {lam!r} and {mu!r}"
        )
    return _char(lam.parts, mu.parts)


def dimension(lam: Partition) -> int:
    """Dimension of the irreducible representation: n! over hook products."""
    conj = lam.conjugate().parts
    out = factorial(lam.weight())
    for i, part in enumerate(lam.parts):
        for j in range(part):
            hook = (part - j) + (conj[j] - i) - 1
            out //= hook
    return out


def class_size(mu: Partition) -> int:
    """Number of elements with cycle type mu: n! / z_mu."""
    return factorial(mu.weight()) // mu.z_order()


class BranchConfig:
    """Ordered tuple of partitions of a common n, each with colength >= 1.

    Represents the ramification profiles of the free branch points of a
    covering; the total colength is the expansion degree d.
    """

    __slots__ = ("_profiles",)

    def __init__(self, profiles: Iterable[Partition]):
        profs = tuple(profiles)
        if not profs:
            raise ValueError("a branch configuration needs at least one profile")
        n = profs[0].weight()
        for p in profs:
            if p.weight() != n:
                raise ValueError(f"profiles must share one weight, got {profs!r}")
            if p.colength() == 0:
                raise ValueError(f"profile {p!r} has colength 0")
        self._profiles = profs

    @property
    def profiles(self) -> tuple[Partition, ...]:
        return self._profiles

    @property
    def n(self) -> int:
        return self._profiles[0].weight()

    @property
    def k(self) -> int:
        return len(self._profiles)

    def total_colength(self) -> int:
        return sum(p.colength() for p in self._profiles)

    def colength_profile(self) -> Partition:
        """The colengths as a partition of the total colength."""
        return Partition(sorted((p.colength() for p in self._profiles), reverse=True))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BranchConfig):
            return NotImplemented
        return self._profiles == other._profiles

    def __hash__(self) -> int:
        return hash(self._profiles)

    def __repr__(self) -> str:
        return f"BranchConfig({[str(p) for p in self._profiles]})"


def frobenius_hurwitz(
    profiles: Sequence[Partition], n: int | None = None
) -> Fraction:
    """Normalized count of identity factorizations with the given classes.

    Evaluates the character sum
        H = sum over shapes lam of (dim/n!)^2 * prod_j |C_j| chi_lam(mu_j)/dim,
    exact in rational arithmetic.  The empty configuration (only the
    identity's empty product) gives 1/n! and requires explicit n.
    """
    profs = list(profiles)
    if n is None:
        if not profs:
            raise ValueError("empty configuration needs explicit n")
        n = profs[0].weight()
    for p in profs:
        if p.weight() != n:
            raise ValueError(f"profiles must all have weight {n}, got {p!r}")
    from .partitions import enumerate_partitions

    nfact = factorial(n)
    total = Fraction(0)
    for lam in enumerate_partitions(n):
        dim = dimension(lam)
        term = Fraction(dim, nfact) ** 2
        for p in profs:
            chi = character(lam, p)
            if chi == 0:
                term = Fraction(0)
                break
            term *= Fraction(class_size(p) * chi, dim)
        total += term
    return total


@cache
def _classes(n: int) -> dict[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """All of S_n bucketed by cycle type (permutations as image tuples)."""
    buckets: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for p in _all_permutations(range(n)):
        buckets.setdefault(_cycle_type(p), []).append(p)
    return {ct: tuple(ps) for ct, ps in buckets.items()}


def _cycle_type(p: tuple[int, ...]) -> tuple[int, ...]:
    n = len(p)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """a after b."""
    return tuple(a[b[i]] for i in range(len(a)))


def brute_force_hurwitz(
    profiles: Sequence[Partition], n: int | None = None
) -> Fraction:
    """Literal enumeration oracle for frobenius_hurwitz.

    Counts tuples (h_1, ..., h_k) with h_j in the class of profiles[j] and
    h_1 ... h_k equal to the identity, divided by n!.  The last factor is
    determined by the others, so only k-1 classes are enumerated; the
    configuration is rotated cyclically (a bijection on factorizations) to
    make the determined class the largest one.
    """
    profs = list(profiles)
    if n is None:
        if not profs:
            raise ValueError("empty configuration needs explicit n")
        n = profs[0].weight()
    for p in profs:
        if p.weight() != n:
            raise ValueError(f"profiles must all have weight {n}, got {p!r}")
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {n}")
    if len(profs) > BRUTE_FORCE_MAX_K:
        raise ValueError(
            f"brute force limited to k <= {BRUTE_FORCE_MAX_K}, got {len(profs)}"
        )
    nfact = factorial(n)
    if not profs:
        return Fraction(1, nfact)

    big = max(range(len(profs)), key=lambda i: class_size(profs[i]))
    rotated = profs[big + 1 :] + profs[: big + 1]  # determined class last
    classes = _classes(n)
    pools = [classes[p.parts] for p in rotated[:-1]]
    target = rotated[-1].parts
    identity = tuple(range(n))

    def count(i: int, g: tuple[int, ...]) -> int:
        if i == len(pools):
            return 1 if _cycle_type(g) == target else 0
        return sum(count(i + 1, _compose(g, h)) for h in pools[i])

    return Fraction(count(0, identity), nfact)


CHARTABLE_FORMAT = "qhurwitz-chartable v1"
CACHE_DIR_ENV = "HURWITZ_CACHE_DIR"


class CharTable:
    """All character values chi_lam(mu) for shapes and classes of weight n.

    Values are plain ints keyed by (lam, mu) part tuples.  Tables persist
    as line-oriented text files ("lam;mu;value" under a version header) so
    repeated CLI runs skip recomputation.
    """

    def __init__(self, n: int, values: dict[tuple[tuple[int, ...], tuple[int, ...]], int]):
        self.n = n
        self.values = values

    @classmethod
    def compute(cls, n: int) -> "CharTable":
        from .partitions import enumerate_partitions

        shapes = [p.parts for p in enumerate_partitions(n)]
        values = {(lam, mu): _char(lam, mu) for lam in shapes for mu in shapes}
        return cls(n, values)

    def value(self, lam: Partition, mu: Partition) -> int:
        return self.values[(lam.parts, mu.parts)]

    def install(self) -> None:
        """Seed the process-wide character memo with this table."""
        _CHAR_MEMO.update(self.values)

    def save(self, path: str | Path) -> None:
        path = Path(path)
        lines = [f"{CHARTABLE_FORMAT} n={self.n}"]
        for (lam, mu) in sorted(self.values):
            lam_text = Partition(lam).to_text()
            mu_text = Partition(mu).to_text()
            lines.append(f"{lam_text};{mu_text};{self.values[(lam, mu)]}")
        path.write_text("\n".join(lines) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "CharTable":
        path = Path(path)
        lines = path.read_text().splitlines()
        if not lines:
            raise ValueError(f"empty character table file {path}")
        header = lines[0]
        if not header.startswith(CHARTABLE_FORMAT):
            raise ValueError(f"unrecognized character table header {header!r}")
        n = int(header.split("n=")[1])
        values = {}
        for line in lines[1:]:
            if not line.strip():
                continue
            lam_text, mu_text, val = line.split(";")
            lam = Partition.from_text(lam_text)
            mu = Partition.from_text(mu_text)
            if lam.weight() != n or mu.weight() != n:
                raise ValueError(f"entry {line!r} does not belong to n={n}")
            values[(lam.parts, mu.parts)] = int(val)
        return cls(n, values)


def table_path(cache_dir: str | Path, n: int) -> Path:
    return Path(cache_dir) / f"chartable_s{n}.txt"


def load_or_compute_table(n: int, cache_dir: str | Path | None = None) -> CharTable:
    """Fetch the degree-n table, consulting the cache directory if set.

    Falls back to the HURWITZ_CACHE_DIR environment variable; with neither
    configured the table is computed in memory only.  Loaded or computed
    values are installed in the process-wide memo.
    """
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_DIR_ENV) or None
    if cache_dir is not None:
        path = table_path(cache_dir, n)
        if path.exists():
            table = CharTable.load(path)
            table.install()
            return table
    table = CharTable.compute(n)
    if cache_dir is not None:
        Path(cache_dir).mkdir(parents=True, exist_ok=True)
        table.save(table_path(cache_dir, n))
    table.install()
    return table
