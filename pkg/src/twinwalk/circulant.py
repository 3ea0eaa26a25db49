"""Circulant graphs over Z_n: construction, gcd-class machinery, analytic
spectra, and the number-theoretic predicates behind the transfer families.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import (
    AsymmetricSetError,
    ContainsZeroError,
    NotProperDivisorError,
    OddModulusError,
)
from .graphs import WeightedGraph


@dataclass(frozen=True)
class CirculantSpec:
    """Modulus n with a symmetric, 0-free connection set S of residues."""

    n: int
    S: frozenset[int]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"modulus must be at least 2, got {self.n}")
        reduced = frozenset(s % self.n for s in self.S)
        object.__setattr__(self, "S", reduced)
        if 0 in reduced:
            raise ContainsZeroError("connection set contains 0")
        if frozenset((-s) % self.n for s in reduced) != reduced:
            raise AsymmetricSetError("connection set not closed under negation")


@dataclass(frozen=True)
class GcdClass:
    """Residues x in Z_n with gcd(x, n) equal to a fixed proper divisor d."""

    n: int
    d: int
    members: frozenset[int]


def proper_divisors(n: int) -> list[int]:
    return [d for d in range(1, n) if n % d == 0]


def gcd_class(n: int, d: int) -> GcdClass:
    if d < 1 or d >= n or n % d != 0:
        raise NotProperDivisorError(f"{d} is not a proper divisor of {n}")
    members = frozenset(x for x in range(n) if gcd(x, n) == d)
    return GcdClass(n, d, members)


def is_gcd_set(n: int, S: set[int] | frozenset[int]) -> bool:
    """True iff S is a union of complete gcd classes of Z_n."""
    S = frozenset(S)
    divisors = {gcd(s, n) for s in S}
    union: set[int] = set()
    for d in divisors:
        union |= gcd_class(n, d).members
    return union == S


def build_circulant(spec: CirculantSpec) -> WeightedGraph:
    """Weight-1 graph with u ~ v iff (u - v) mod n lies in S."""
    weights = {}
    for u in range(spec.n):
        for s in spec.S:
            v = (u + s) % spec.n
            if u < v:
                weights[(u, v)] = 1.0
    return WeightedGraph(spec.n, weights)


def adjacency_eigenvalues(spec: CirculantSpec) -> np.ndarray:
    """Cosine-sum eigenvalues theta_l = sum_{s in S} cos(2 pi l s / n)."""
    l = np.arange(spec.n)
    theta = np.zeros(spec.n)
    for s in spec.S:
        theta += np.cos(2.0 * np.pi * l * s / spec.n)
    return theta


def laplacian_eigenvalues(spec: CirculantSpec) -> np.ndarray:
    """|S| - theta_l; the graph is |S|-regular."""
    return len(spec.S) - adjacency_eigenvalues(spec)


def twin_condition(spec: CirculantSpec) -> bool:
    """True iff S = n/2 - S, i.e. every pair (x, x + n/2) is a twin pair."""
    if spec.n % 2 != 0:
        raise OddModulusError(f"modulus {spec.n} is odd")
    half = spec.n // 2
    return frozenset((half - s) % spec.n for s in spec.S) == spec.S


def mod_four_condition(spec: CirculantSpec) -> bool:
    """True iff |S intersect S_n(d)| is divisible by 4 for every proper d | n."""
    for d in proper_divisors(spec.n):
        if len(spec.S & gcd_class(spec.n, d).members) % 4 != 0:
            return False
    return True


def almost_periodic_applicable(spec: CirculantSpec) -> bool:
    """Power-of-two modulus and mod-4 class counts: the walk is almost
    periodic along times (4q+1) pi/2."""
    n = spec.n
    is_pow2 = n >= 2 and (n & (n - 1)) == 0
    return is_pow2 and mod_four_condition(spec)
