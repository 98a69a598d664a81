"""Quantum branch-point weights, the partition function normalizing them,
and the induced probability measures on branch configurations and on
colength profiles.

The building block is the factor q^a/(1 - q^a) attached to each partial
sum a of branch colengths.  Physically it is the Bose-Einstein occupation
number of an energy level a*E0 at vanishing fugacity, with q = exp(-E0/kT);
the q -> 0 regime is the zero-temperature limit, where all mass collects
on the single-row colength profile (d).

Weights and partition functions exist in two forms: truncated q-series
with exact rational coefficients, and exact rational values at a numeric
q in (0, 1).  Measures always use the exact form, so normalization to 1
is an identity, not a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Sequence

from .partitions import (
    Partition,
    enumerate_partitions,
    partition_count,
    partitions_with_colength,
)
from .qalgebra import QSeries, format_rational
from .symgroup import BranchConfig


class VerificationError(Exception):
    """An identity check failed; carries both sides of the comparison."""

    def __init__(self, message: str, expected=None, actual=None):
        super().__init__(message)
        self.expected = expected
        self.actual = actual


def default_order(d: int) -> int:
    """Series truncation for degree-d work: the expansions of interest stop
    at q^(d+1), so two guard coefficients expose the remainder."""
    return d + 4


def _colengths(config) -> list[int]:
    if isinstance(config, BranchConfig):
        return [p.colength() for p in config.profiles]
    return [p.colength() for p in config]


def _aut_of_multiset(values: Sequence[int]) -> int:
    from collections import Counter
    from math import factorial

    out = 1
    for m in Counter(values).values():
        out *= factorial(m)
    return out


def weight_w(profile: Partition, order: int) -> QSeries:
    """Weight of a colength profile as an exact q-series.

    w(lam) = (1/|aut lam|) * sum over orderings sigma of the parts of the
    product over j of q^(S_j)/(1 - q^(S_j)), S_j the j-th partial sum of
    the sigma-ordered parts.  Equal orderings of repeated parts are summed
    and compensated by the aut factor rather than deduplicated.
    """
    if profile.length() == 0:
        raise ValueError("weight of the empty profile is not defined")
    total = QSeries.zero(order)
    for sigma in permutations(profile.parts):
        term = QSeries.one(order)
        s = 0
        for part in sigma:
            s += part
            term = term * QSeries.bose_factor(s, order)
        total = total + term
    return total * Fraction(1, profile.aut_order())


def weight_w_at(profile: Partition, q: Fraction) -> Fraction:
    """Exact rational value of weight_w at numeric q, via per-factor
    q^a/(1 - q^a) rather than truncated series."""
    if profile.length() == 0:
        raise ValueError("weight of the empty profile is not defined")
    q = Fraction(q)
    total = Fraction(0)
    for sigma in permutations(profile.parts):
        term = Fraction(1)
        s = 0
        for part in sigma:
            s += part
            qs = q**s
            term *= qs / (1 - qs)
        total += term
    return total / profile.aut_order()


def weight_W(config, order: int) -> QSeries:
    """Weight of a branch configuration, from its colengths as given.

    Same permutation sum as weight_w but run over the configuration's own
    colength list, so agreement with weight_w of the sorted profile is a
    genuine cross-check of order-invariance.
    """
    cols = _colengths(config)
    if not cols:
        raise ValueError("weight of an empty configuration is not defined")
    if any(c == 0 for c in cols):
        raise ValueError("configurations with a colength-0 profile carry no weight")
    total = QSeries.zero(order)
    for sigma in permutations(cols):
        term = QSeries.one(order)
        s = 0
        for c in sigma:
            s += c
            term = term * QSeries.bose_factor(s, order)
        total = total + term
    return total * Fraction(1, _aut_of_multiset(cols))


def weight_W_at(config, q: Fraction) -> Fraction:
    """Exact rational value of weight_W at numeric q."""
    cols = _colengths(config)
    if not cols:
        raise ValueError("weight of an empty configuration is not defined")
    if any(c == 0 for c in cols):
        raise ValueError("configurations with a colength-0 profile carry no weight")
    return weight_w_at(Partition(sorted(cols, reverse=True)), q)


def weight_w_leading(profile: Partition) -> tuple[int, Fraction]:
    """Leading behavior of weight_w: (sum of j*lam_j, 1/|aut lam|).

    This is the contribution of the identity ordering, which carries the
    minimal exponent; orderings of repeated parts tie with it, so for
    profiles with repeated parts the true leading coefficient of weight_w
    exceeds this one.
    """
    if profile.length() == 0:
        raise ValueError("the empty profile has no leading term")
    exponent = sum(j * part for j, part in enumerate(profile.parts, start=1))
    return exponent, Fraction(1, profile.aut_order())


def _p_product(lam: Partition) -> int:
    """Product of partition numbers of the parts."""
    out = 1
    for part in lam.parts:
        out *= partition_count(part)
    return out


def partition_function_Z(d: int, order: int | None = None) -> QSeries:
    """Partition function of degree d as an exact q-series.

    Z_d = sum over colength profiles lam of d of p(lam) * w(lam), where
    p(lam) is the product of partition numbers of the parts (the number of
    configurations realizing lam, independent of n once n >= 2d).
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if order is None:
        order = default_order(d)
    total = QSeries.zero(order)
    for lam in enumerate_partitions(d):
        total = total + weight_w(lam, order) * _p_product(lam)
    return total


def partition_function_Z_at(d: int, q: Fraction) -> Fraction:
    """Exact rational value of the partition function at numeric q."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    q = Fraction(q)
    return sum(
        (weight_w_at(lam, q) * _p_product(lam) for lam in enumerate_partitions(d)),
        Fraction(0),
    )


def branch_configs(n: int, d: int, k: int | None = None) -> list[BranchConfig]:
    """Canonical branch configurations of total colength d on degree n.

    Configurations are listed with weakly decreasing colengths; slot j
    independently runs over all partitions of n with colength lam_j.  Each
    unordered collection of profiles therefore appears once per arrangement
    within equal-colength blocks, which is the counting under which the
    measure normalizes and the generating-series identities hold.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    configs = []
    for lam in enumerate_partitions(d):
        if k is not None and lam.length() != k:
            continue
        if any(part >= n for part in lam.parts):
            continue  # a partition of n has colength at most n-1
        slots = [partitions_with_colength(n, c) for c in lam.parts]
        for tup in product(*slots):
            configs.append(BranchConfig(tup))
    return configs


def partition_function_Z_configs(n: int, d: int, order: int | None = None) -> QSeries:
    """Partition function by direct summation of weight_W over all branch
    configurations; equals partition_function_Z once n >= 2d."""
    if order is None:
        order = default_order(d)
    total = QSeries.zero(order)
    for config in branch_configs(n, d):
        total = total + weight_W(config, order)
    return total


def partition_function_Z_configs_at(n: int, d: int, q: Fraction) -> Fraction:
    q = Fraction(q)
    return sum(
        (weight_W_at(config, q) for config in branch_configs(n, d)), Fraction(0)
    )


def _check_q(q: Fraction) -> Fraction:
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError(f"q must lie strictly between 0 and 1, got {q}")
    return q


@dataclass
class MeasureReport:
    """A probability measure on colength profiles of d, at a numeric q."""

    d: int
    q: Fraction
    support: list[tuple[Partition, Fraction]]

    def probability(self, lam: Partition) -> Fraction:
        for p, prob in self.support:
            if p == lam:
                return prob
        raise KeyError(f"{lam!r} not in support")

    def total(self) -> Fraction:
        return sum((prob for _, prob in self.support), Fraction(0))

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "q": format_rational(self.q),
            "support": [
                {"lambda": lam.to_text(), "prob": format_rational(prob)}
                for lam, prob in self.support
            ],
        }


def pushforward_measure(d: int, q: Fraction) -> MeasureReport:
    """The measure on colength profiles: prob(lam) = p(lam) w(lam) / Z_d.

    All values are exact rationals; the probabilities sum to 1 identically.
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    q = _check_q(q)
    z = partition_function_Z_at(d, q)
    support = [
        (lam, weight_w_at(lam, q) * _p_product(lam) / z)
        for lam in enumerate_partitions(d)
    ]
    return MeasureReport(d=d, q=q, support=support)


def theta_measure(config: BranchConfig, d: int, n: int, q: Fraction) -> Fraction:
    """Probability of one branch configuration: W(config) / Z.

    Normalized by the partition function summed over the configurations of
    degree n, so the probabilities over branch_configs(n, d) sum to 1 for
    every n (and the normalizer equals the universal Z_d once n >= 2d).
    """
    if config.total_colength() != d:
        raise ValueError(
            f"configuration has total colength {config.total_colength()}, expected {d}"
        )
    if config.n != n:
        raise ValueError(f"configuration lives on n={config.n}, expected {n}")
    q = _check_q(q)
    return weight_W_at(config, q) / partition_function_Z_configs_at(n, d, q)


def zero_temp_expansion(d: int) -> tuple[int, int]:
    """Leading partition-function coefficients in the zero-temperature limit.

    Returns (p(d), p(d-1)) and verifies they equal the computed q^d and
    q^(d+1) coefficients of Z_d exactly.
    """
    if d < 2:
        raise ValueError(f"the expansion assumes d >= 2, got {d}")
    expected = (partition_count(d), partition_count(d - 1))
    z = partition_function_Z(d)
    actual = (z.coefficient(d), z.coefficient(d + 1))
    if (Fraction(expected[0]), Fraction(expected[1])) != actual:
        raise VerificationError(
            f"partition function expansion mismatch for d={d}: "
            f"expected {expected}, computed {actual}",
            expected=expected,
            actual=actual,
        )
    return expected


def dirac_threshold(
    d: int, target: Fraction = Fraction(99, 100), iterations: int = 24
) -> Fraction:
    """A positive q0 with pushforward mass at (d) above target, by bisection.

    The mass tends to 1 as q -> 0, so bisecting the indicator of
    "mass > target" on (0, 1) terminates with a usable threshold.
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    single_row = Partition((d,))

    def mass(q: Fraction) -> Fraction:
        return pushforward_measure(d, q).probability(single_row)

    lo, hi = Fraction(0), Fraction(1)
    for _ in range(iterations):
        mid = (lo + hi) / 2
        if mass(mid) > target:
            lo = mid
        else:
            hi = mid
    if lo == 0:
        raise ArithmeticError(
            f"no threshold with mass above {target} found in {iterations} bisections"
        )
    return lo
