"""Matroids as equicardinal delta-matroids: circuits, duals, rank, and the
Eulerian/bipartite classification (lifted to delta-matroids through the lower
matroid)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .core import (
    DeltaMatroid,
    ImproperSystemError,
    Mask,
    SetSystem,
    exchange_violation_masks,
    mask_of,
)


class MatroidError(ValueError):
    """The given family is not the base family of a matroid."""


@dataclass(frozen=True, eq=False, repr=False)
class Matroid(DeltaMatroid):
    """The feasible sets are the bases; all bases share one cardinality.

    As with DeltaMatroid, direct construction trusts the caller; use
    Matroid.from_bases to validate the exchange property on raw input.
    """

    def __post_init__(self):
        super().__post_init__()
        r = self.family[0].bit_count()
        if any(m.bit_count() != r for m in self.family):
            raise MatroidError("bases must be equicardinal")

    @property
    def bases(self) -> tuple[Mask, ...]:
        return self.family

    @property
    def rank(self) -> int:
        return self.family[0].bit_count()

    @classmethod
    def from_bases(cls, system: SetSystem) -> "Matroid":
        if not system.family:
            raise ImproperSystemError("a matroid needs at least one base")
        first = system.family[0]
        for m in system.family:
            if m.bit_count() != first.bit_count():
                raise MatroidError(
                    "bases %s and %s differ in cardinality"
                    % (system.render_set(first), system.render_set(m))
                )
        witness = exchange_violation_masks(system.family)
        if witness is not None:
            x, y, u = witness
            raise MatroidError(
                "base exchange fails at B1=%s, B2=%s, u=%s"
                % (system.render_set(x), system.render_set(y), system.ground.labels[u])
            )
        return cls(system.ground, system.family)

    # -- independence ----------------------------------------------------------

    @cached_property
    def independent_sets(self) -> frozenset[Mask]:
        """All subsets of bases."""
        ind: set[Mask] = set()
        for b in self.family:
            s = b
            while True:
                ind.add(s)
                if s == 0:
                    break
                s = (s - 1) & b
        return frozenset(ind)

    def count_independent_sets(self) -> int:
        return len(self.independent_sets)

    @cached_property
    def circuits(self) -> tuple[Mask, ...]:
        """Inclusion-minimal dependent sets, in canonical order.

        Powerset scan in increasing cardinality with superset pruning; fine
        for the ground sizes this library targets.
        """
        n = self.ground.size
        ind = self.independent_sets
        found: list[Mask] = []
        for k in range(1, n + 1):
            for combo in itertools.combinations(range(n), k):
                m = mask_of(combo)
                if m in ind:
                    continue
                if any(c & m == c for c in found):
                    continue
                found.append(m)
        return tuple(found)

    def dual(self) -> "Matroid":
        """Bases are the complements of bases; coincides with the twist by E."""
        full = self.ground.full_mask
        return Matroid(self.ground, tuple(full ^ b for b in self.family))

    def cocircuits(self) -> tuple[Mask, ...]:
        return self.dual().circuits

    # -- Eulerian / bipartite --------------------------------------------------

    def odd_circuit(self) -> Optional[Mask]:
        for c in self.circuits:
            if c.bit_count() & 1:
                return c
        return None

    def is_bipartite(self) -> bool:
        """Every circuit has even cardinality (vacuously true without circuits)."""
        return self.odd_circuit() is None

    def eulerian_partition(self) -> Optional[tuple[Mask, ...]]:
        """A partition of the ground set into disjoint circuits, or None.

        Exact-cover backtracking on the lowest uncovered element; the empty
        ground set is covered by the empty partition.
        """
        circ = self.circuits

        def bt(uncovered: Mask, acc: list[Mask]) -> Optional[tuple[Mask, ...]]:
            if not uncovered:
                return tuple(acc)
            low = uncovered & -uncovered
            for c in circ:
                if c & low and not c & ~uncovered:
                    acc.append(c)
                    got = bt(uncovered ^ c, acc)
                    if got is not None:
                        return got
                    acc.pop()
            return None

        return bt(self.ground.full_mask, [])

    def is_eulerian(self) -> bool:
        return self.eulerian_partition() is not None


@dataclass(frozen=True)
class ClassificationReport:
    bipartite: bool
    eulerian: bool
    eulerian_partition: Optional[tuple[Mask, ...]]
    odd_circuit_witness: Optional[Mask]


def classify_matroid(m: Matroid) -> ClassificationReport:
    witness = m.odd_circuit()
    partition = m.eulerian_partition()
    return ClassificationReport(witness is None, partition is not None, partition, witness)


def lower_matroid(d: DeltaMatroid) -> Matroid:
    """Bases are the minimum-cardinality feasible sets."""
    k = d.family[0].bit_count()
    return Matroid(d.ground, tuple(m for m in d.family if m.bit_count() == k))


def upper_matroid(d: DeltaMatroid) -> Matroid:
    """Bases are the maximum-cardinality feasible sets."""
    k = d.family[-1].bit_count()
    return Matroid(d.ground, tuple(m for m in d.family if m.bit_count() == k))


def classify_delta(d: DeltaMatroid) -> ClassificationReport:
    """A delta-matroid is bipartite/Eulerian when its lower matroid is."""
    return classify_matroid(lower_matroid(d))


def is_bipartite_delta(d: DeltaMatroid) -> bool:
    return lower_matroid(d).is_bipartite()


def is_eulerian_delta(d: DeltaMatroid) -> bool:
    return lower_matroid(d).is_eulerian()
