"""Weighted and quantum double Hurwitz numbers: sums of pure Hurwitz
numbers over branch configurations of fixed total colength, weighted by
monomial symmetric functions of weight parameters (general case) or by
the quantum weights q^a/(1-q^a) (the c_i = q^i specialization).

The sum is organized by colength profile: for a profile lam of d, slot j
runs independently over the partitions of n with colength lam_j, and the
profile's weight multiplies the total of the pure Hurwitz numbers over
those slot tuples.  Under this counting the generating-series identity
with the hypergeometric coefficients holds exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import product

from .partitions import (
    Partition,
    enumerate_partitions,
    monomial_sym,
    partition_count,
    partitions_with_colength,
)
from .qalgebra import QSeries, format_rational
from .symgroup import frobenius_hurwitz
from .weights import (
    VerificationError,
    default_order,
    partition_function_Z_at,
    weight_w,
    weight_w_at,
)


def euler_characteristic(n: int, d: int) -> int:
    """Euler characteristic 2n - d of a degree-n covering with total
    branching colength d (chi = 2 - 2g for even d)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if d < 0:
        raise ValueError(f"d must be nonnegative, got {d}")
    return 2 * n - d


@cache
def _profile_sum(
    profile: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]
) -> Fraction:
    n = sum(mu)
    if any(c >= n for c in profile):
        return Fraction(0)  # no partition of n has colength >= n
    slots = [
        [p.parts for p in partitions_with_colength(n, c)] for c in profile
    ]
    total = Fraction(0)
    for tup in product(*slots):
        profiles = [Partition(t) for t in tup] + [Partition(mu), Partition(nu)]
        total += frobenius_hurwitz(profiles)
    return total


def hurwitz_profile_sum(profile: Partition, mu: Partition, nu: Partition) -> Fraction:
    """Total pure Hurwitz number over slot tuples with the given colengths.

    Slot j runs over all partitions of n with colength profile[j]; each
    tuple contributes H(tuple..., mu, nu).  The empty profile gives the
    two-point number H(mu, nu).
    """
    if mu.weight() != nu.weight():
        raise ValueError(
            f"mu and nu must have equal weight, got {mu!r} and {nu!r}"
        )
    return _profile_sum(profile.parts, mu.parts, nu.parts)


@dataclass
class QuantumHurwitzResult:
    """Quantum weighted Hurwitz number as a q-series with its per-profile
    breakdown; the series is the sum of the breakdown contributions."""

    d: int
    mu: Partition
    nu: Partition
    series: QSeries
    breakdown: list[tuple[Partition, QSeries]] = field(default_factory=list)
    n_small: bool = False

    def to_json_dict(self) -> dict:
        doc = {
            "d": self.d,
            "n": self.mu.weight(),
            "mu": self.mu.to_text(),
            "nu": self.nu.to_text(),
            "series": self.series.to_json_dict(),
            "breakdown": [
                {"profile": lam.to_text(), "series": s.to_json_dict()}
                for lam, s in self.breakdown
            ],
        }
        if self.n_small:
            doc["regime"] = "n-small"
        return doc


def quantum_hurwitz(
    d: int, mu: Partition, nu: Partition, order: int | None = None
) -> QuantumHurwitzResult:
    """Quantum weighted double Hurwitz number of degree d as a q-series.

    Sums, over colength profiles lam of d, the profile weight w(lam) times
    the pure-Hurwitz total of hurwitz_profile_sum.  d = 0 contributes the
    bare two-point number.  The series vanishes below q^d.
    """
    if d < 0:
        raise ValueError(f"d must be nonnegative, got {d}")
    if mu.weight() != nu.weight():
        raise ValueError(
            f"mu and nu must have equal weight, got {mu!r} and {nu!r}"
        )
    n = mu.weight()
    if order is None:
        order = default_order(d)
    breakdown = []
    total = QSeries.zero(order)
    for lam in enumerate_partitions(d):
        if any(part >= n for part in lam.parts):
            continue
        hsum = hurwitz_profile_sum(lam, mu, nu)
        wgt = weight_w(lam, order) if lam.length() else QSeries.one(order)
        contribution = wgt * hsum
        breakdown.append((lam, contribution))
        total = total + contribution
    return QuantumHurwitzResult(
        d=d,
        mu=mu,
        nu=nu,
        series=total,
        breakdown=breakdown,
        n_small=n < 2 * d,
    )


def quantum_hurwitz_at(d: int, mu: Partition, nu: Partition, q: Fraction) -> Fraction:
    """Exact rational value of the quantum Hurwitz number at numeric q."""
    if d < 0:
        raise ValueError(f"d must be nonnegative, got {d}")
    if mu.weight() != nu.weight():
        raise ValueError(
            f"mu and nu must have equal weight, got {mu!r} and {nu!r}"
        )
    n = mu.weight()
    q = Fraction(q)
    total = Fraction(0)
    for lam in enumerate_partitions(d):
        if any(part >= n for part in lam.parts):
            continue
        hsum = hurwitz_profile_sum(lam, mu, nu)
        if hsum == 0:
            continue
        wgt = weight_w_at(lam, q) if lam.length() else Fraction(1)
        total += wgt * hsum
    return total


def weighted_hurwitz_general(values, d: int, mu: Partition, nu: Partition):
    """Weighted double Hurwitz number for a finite list of weight parameters.

    The weight of a profile lam is the monomial symmetric function m_lam
    evaluated at ``values``; entries may be rationals or QSeries (the
    latter reproduces the quantum case with values q, q^2, ...).
    """
    if d < 0:
        raise ValueError(f"d must be nonnegative, got {d}")
    if mu.weight() != nu.weight():
        raise ValueError(
            f"mu and nu must have equal weight, got {mu!r} and {nu!r}"
        )
    n = mu.weight()
    values = list(values)
    total = None
    for lam in enumerate_partitions(d):
        if any(part >= n for part in lam.parts):
            continue
        hsum = hurwitz_profile_sum(lam, mu, nu)
        if hsum == 0:
            continue
        term = monomial_sym(lam, values) * hsum
        total = term if total is None else total + term
    return Fraction(0) if total is None else total


def expansion_leading_terms(
    d: int, mu: Partition, nu: Partition
) -> tuple[Fraction, Fraction]:
    """Zero-temperature leading coefficients of the quantum Hurwitz number.

    A sums the pure Hurwitz numbers over single profiles of colength d
    (three-branch-point coverings); B over profile pairs with colengths
    (d-1, 1).  Both are verified against the q^d and q^(d+1) coefficients
    of the assembled series; a mismatch raises VerificationError carrying
    both sides.
    """
    if d < 2:
        raise ValueError(f"the expansion assumes d >= 2, got {d}")
    a = hurwitz_profile_sum(Partition((d,)), mu, nu)
    b = hurwitz_profile_sum(Partition((d - 1, 1)), mu, nu)
    series = quantum_hurwitz(d, mu, nu).series
    computed = (series.coefficient(d), series.coefficient(d + 1))
    if computed != (a, b):
        raise VerificationError(
            f"expansion mismatch for d={d}, mu={mu}, nu={nu}: "
            f"profile sums {(a, b)}, series coefficients {computed}",
            expected=(a, b),
            actual=computed,
        )
    return a, b


def weighted_expectation(d: int, mu: Partition, nu: Partition, q: Fraction) -> Fraction:
    """Expectation of the pure Hurwitz number under the branch-configuration
    measure: the quantum Hurwitz number divided by the partition function,
    both evaluated exactly at q."""
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError(f"q must lie strictly between 0 and 1, got {q}")
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    return quantum_hurwitz_at(d, mu, nu, q) / partition_function_Z_at(d, q)


def expectation_zero_limit(d: int, mu: Partition, nu: Partition) -> Fraction:
    """Limit of weighted_expectation as q -> 0: the uniform average over
    three-branch-point configurations, A / p(d)."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    a = hurwitz_profile_sum(Partition((d,)), mu, nu)
    return a / partition_count(d)
