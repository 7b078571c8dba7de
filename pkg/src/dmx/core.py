"""Set systems over a labelled ground set and the delta-matroid operation calculus.

Ground elements are dense indices 0..n-1 carrying a user-facing label;
subsets are plain int bitmasks, so symmetric difference, union and
intersection are single XOR/OR/AND operations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

Mask = int

EVEN = "even"
ODD = "odd"


class ImproperSystemError(ValueError):
    """An empty feasible family where a proper set system is required."""


class SymmetricExchangeError(ValueError):
    """Symmetric exchange axiom failure, carrying the offending (X, Y, u) triple."""

    def __init__(self, system: "SetSystem", x: Mask, y: Mask, u: int):
        self.system = system
        self.witness = (x, y, u)
        super().__init__(
            "symmetric exchange fails at X=%s, Y=%s, u=%s"
            % (system.render_set(x), system.render_set(y), system.ground.labels[u])
        )


def iter_bits(mask: Mask) -> Iterator[Mask]:
    """Yield the set bits of a mask as single-bit masks, lowest first."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def indices_of(mask: Mask) -> tuple[int, ...]:
    return tuple(b.bit_length() - 1 for b in iter_bits(mask))


def mask_of(indices: Iterable[int]) -> Mask:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def family_sort_key(mask: Mask) -> tuple[int, tuple[int, ...]]:
    """Canonical order of subsets: cardinality, then lexicographic on indices."""
    return (mask.bit_count(), indices_of(mask))


def apply_permutation(mask: Mask, perm: Sequence[int]) -> Mask:
    """Relabel a mask: bit i of the input becomes bit perm[i] of the output."""
    out = 0
    for i in indices_of(mask):
        out |= 1 << perm[i]
    return out


def _drop_bit(mask: Mask, e: int) -> Mask:
    """Remove position e from the index space, shifting higher bits down."""
    low = mask & ((1 << e) - 1)
    return low | ((mask >> (e + 1)) << e)


@dataclass(frozen=True)
class GroundSet:
    """An ordered ground set; element i carries labels[i]."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("ground labels must be pairwise distinct")

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> Mask:
        return (1 << len(self.labels)) - 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError("unknown ground label %r" % (label,)) from None

    def mask(self, labels: Iterable[str]) -> Mask:
        return mask_of(self.index(lab) for lab in labels)

    def labels_of(self, mask: Mask) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in indices_of(mask))

    def without(self, e: int) -> "GroundSet":
        return GroundSet(self.labels[:e] + self.labels[e + 1 :])


def numbered_ground(n: int) -> GroundSet:
    """Ground set with labels "1".."n"."""
    return GroundSet(tuple(str(i + 1) for i in range(n)))


@dataclass(frozen=True, eq=False, repr=False)
class SetSystem:
    """A ground set plus a duplicate-free family of subsets in canonical order.

    Instances are immutable; every operation returns a new value.  Equality
    compares ground labels and the canonical family, irrespective of the
    concrete class, so a Matroid compares equal to the DeltaMatroid with the
    same content.
    """

    ground: GroundSet
    family: tuple[Mask, ...]

    def __post_init__(self):
        limit = 1 << self.ground.size
        fam = sorted(set(self.family), key=family_sort_key)
        for m in fam:
            if not 0 <= m < limit:
                raise ValueError(
                    "subset mask %#x out of range for ground size %d" % (m, self.ground.size)
                )
        object.__setattr__(self, "family", tuple(fam))

    @classmethod
    def from_sets(cls, labels: Iterable[str], sets: Iterable[Iterable[str]]) -> "SetSystem":
        ground = GroundSet(tuple(labels))
        return cls(ground, tuple(ground.mask(s) for s in sets))

    @cached_property
    def members(self) -> frozenset[Mask]:
        return frozenset(self.family)

    def __eq__(self, other):
        if not isinstance(other, SetSystem):
            return NotImplemented
        return self.ground.labels == other.ground.labels and self.family == other.family

    def __hash__(self):
        return hash((self.ground.labels, self.family))

    def __repr__(self):
        sets = " ".join(self.render_set(m) for m in self.family)
        return "<%s %s; %s>" % (type(self).__name__, " ".join(self.ground.labels) or "-", sets)

    def render_set(self, mask: Mask) -> str:
        return "{%s}" % ",".join(self.ground.labels_of(mask))

    @property
    def is_proper(self) -> bool:
        return bool(self.family)

    def labeled_family(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(self.ground.labels_of(m)) for m in self.family)

    # -- element predicates ------------------------------------------------

    def _check_element(self, e: int) -> None:
        if not 0 <= e < self.ground.size:
            raise IndexError("element index %d out of range" % e)

    def _check_mask(self, mask: Mask) -> None:
        if mask & ~self.ground.full_mask:
            raise ValueError("mask has bits outside the ground set")

    def is_loop(self, e: int) -> bool:
        self._check_element(e)
        bit = 1 << e
        return all(not m & bit for m in self.family)

    def is_coloop(self, e: int) -> bool:
        self._check_element(e)
        bit = 1 << e
        return all(m & bit for m in self.family)

    def parity(self) -> str:
        if not self.family:
            raise ImproperSystemError("parity of an improper system is undefined")
        p = self.family[0].bit_count() & 1
        if all(m.bit_count() & 1 == p for m in self.family):
            return EVEN
        return ODD

    # -- twist / dual / loop complementation --------------------------------

    def twist(self, a: Mask) -> "SetSystem":
        """Replace every member F by F XOR a.  Preserves the exchange axiom."""
        self._check_mask(a)
        cls = DeltaMatroid if isinstance(self, DeltaMatroid) else SetSystem
        return cls(self.ground, tuple(m ^ a for m in self.family))

    def dual(self) -> "SetSystem":
        return self.twist(self.ground.full_mask)

    def loop_complement(self, a: Mask) -> "SetSystem":
        """Toggle F+e membership element by element over a; order-independent.

        The result need not satisfy the exchange axiom, so it is returned as a
        plain SetSystem; use loop_complement_checked for a validity flag.
        """
        self._check_mask(a)
        fam = set(self.family)
        for bit in iter_bits(a):
            fam ^= {m | bit for m in fam if not m & bit}
        if not fam:
            raise ImproperSystemError("loop complementation produced an empty family")
        return SetSystem(self.ground, tuple(fam))

    # -- minors --------------------------------------------------------------

    def delete(self, e: int) -> "SetSystem":
        self._check_element(e)
        if self.family and self.is_coloop(e):
            return self._contract_raw(e)
        return self._delete_raw(e)

    def contract(self, e: int) -> "SetSystem":
        self._check_element(e)
        if self.family and self.is_loop(e):
            return self._delete_raw(e)
        return self._contract_raw(e)

    def _delete_raw(self, e: int) -> "SetSystem":
        bit = 1 << e
        masks = tuple(_drop_bit(m, e) for m in self.family if not m & bit)
        return type(self)(self.ground.without(e), masks)

    def _contract_raw(self, e: int) -> "SetSystem":
        bit = 1 << e
        masks = tuple(_drop_bit(m ^ bit, e) for m in self.family if m & bit)
        return type(self)(self.ground.without(e), masks)

    def minor(self, delete: Mask = 0, contract: Mask = 0) -> "SetSystem":
        """Delete and contract the given element sets; order-independent."""
        self._check_mask(delete)
        self._check_mask(contract)
        if delete & contract:
            raise ValueError("delete and contract sets overlap")
        result = self
        # highest index first, so pending indices never shift
        for e in sorted(indices_of(delete | contract), reverse=True):
            result = result.delete(e) if (delete >> e) & 1 else result.contract(e)
        return result

    def restrict(self, a: Mask) -> "SetSystem":
        return self.minor(delete=self.ground.full_mask & ~a)

    # -- direct sum and isomorphism -------------------------------------------

    def direct_sum(self, other: "SetSystem") -> "SetSystem":
        clash = set(self.ground.labels) & set(other.ground.labels)
        if clash:
            raise ValueError("ground label clash: %s" % sorted(clash))
        ground = GroundSet(self.ground.labels + other.ground.labels)
        shift = self.ground.size
        fam = tuple(a | (b << shift) for a in self.family for b in other.family)
        if type(self) is type(other):
            cls = type(self)
        elif isinstance(self, DeltaMatroid) and isinstance(other, DeltaMatroid):
            cls = DeltaMatroid
        else:
            cls = SetSystem
        return cls(ground, fam)

    def isomorphism(self, other: "SetSystem") -> Optional[dict[str, str]]:
        """A ground bijection carrying this family onto the other, or None."""
        n = self.ground.size
        if n > 8 or other.ground.size > 8:
            raise ValueError("isomorphism search is limited to ground size 8")
        if n != other.ground.size or len(self.family) != len(other.family):
            return None
        if sorted(m.bit_count() for m in self.family) != sorted(
            m.bit_count() for m in other.family
        ):
            return None
        target = other.members
        for perm in itertools.permutations(range(n)):
            if all(apply_permutation(m, perm) in target for m in self.family):
                return {
                    self.ground.labels[i]: other.ground.labels[perm[i]] for i in range(n)
                }
        return None


def exchange_violation_masks(family: Sequence[Mask]) -> Optional[tuple[Mask, Mask, int]]:
    """First (X, Y, u) with no admissible v, in canonical family order, or None.

    u = v is allowed, i.e. X XOR {u} alone already satisfies the triple.
    """
    members = set(family)
    for x in family:
        for y in family:
            d = x ^ y
            rest = d
            while rest:
                ub = rest & -rest
                rest ^= ub
                xu = x ^ ub
                if xu in members:
                    continue
                ok = False
                others = d ^ ub
                while others:
                    vb = others & -others
                    others ^= vb
                    if xu ^ vb in members:
                        ok = True
                        break
                if not ok:
                    return (x, y, ub.bit_length() - 1)
    return None


def exchange_violation(system: SetSystem) -> Optional[tuple[Mask, Mask, int]]:
    return exchange_violation_masks(system.family)


@dataclass(frozen=True, eq=False, repr=False)
class DeltaMatroid(SetSystem):
    """A proper set system satisfying the symmetric exchange axiom.

    Construction does not re-run the axiom check; use validate_delta_matroid
    (or DeltaMatroid.from_sets) on untrusted input.
    """

    def __post_init__(self):
        super().__post_init__()
        if not self.family:
            raise ImproperSystemError("delta-matroid family may not be empty")

    @classmethod
    def from_system(cls, system: SetSystem) -> "DeltaMatroid":
        return validate_delta_matroid(system)

    @classmethod
    def from_sets(cls, labels: Iterable[str], sets: Iterable[Iterable[str]]) -> "DeltaMatroid":
        return validate_delta_matroid(SetSystem.from_sets(labels, sets))


def validate_delta_matroid(system: SetSystem) -> DeltaMatroid:
    """Brute-force axiom check over all (X, Y, u) triples."""
    if not system.family:
        raise ImproperSystemError("a delta-matroid needs a nonempty feasible family")
    witness = exchange_violation_masks(system.family)
    if witness is not None:
        raise SymmetricExchangeError(system, *witness)
    return DeltaMatroid(system.ground, system.family)


@dataclass(frozen=True)
class LoopComplementResult:
    """Loop complementation output together with its exchange-axiom status."""

    system: SetSystem
    violation: Optional[tuple[Mask, Mask, int]]

    @property
    def is_delta_matroid(self) -> bool:
        return self.violation is None

    def delta_matroid(self) -> DeltaMatroid:
        if self.violation is not None:
            raise SymmetricExchangeError(self.system, *self.violation)
        return DeltaMatroid(self.system.ground, self.system.family)


def loop_complement_checked(system: SetSystem, a: Mask) -> LoopComplementResult:
    out = system.loop_complement(a)
    return LoopComplementResult(out, exchange_violation_masks(out.family))
