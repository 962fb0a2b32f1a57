"""Finite topologies on lattice carriers, materialized as closed-set families.

Closed sets are bitmasks over the carrier's canonical element order and the
family is a sorted tuple of bitmasks, so membership and closure queries are
cheap and iteration order is deterministic.
"""
from __future__ import annotations

from .errors import CarrierTooLarge, InvariantViolation
from .lattice import FiniteLattice, iter_bits

INTERVAL = "interval"
DISCRETE = "discrete"
EXPLICIT = "explicit"

KINDS = (INTERVAL, DISCRETE, EXPLICIT)


class ClosedFamily:
    """The closed sets of a finite topology on a fixed carrier.

    Invariants: contains the empty set and the full carrier, and is closed
    under pairwise union and pairwise intersection (which covers arbitrary
    ones on a finite carrier).
    """

    __slots__ = ("labels", "index", "kind", "sets", "_lookup", "full")

    def __init__(self, labels, sets, kind=EXPLICIT):
        self.labels = tuple(labels)
        self.index = {label: i for i, label in enumerate(self.labels)}
        self.kind = kind
        self.full = (1 << len(self.labels)) - 1
        self.sets = tuple(sorted(set(sets)))
        self._lookup = frozenset(self.sets)
        self._validate()

    def _validate(self):
        if 0 not in self._lookup or self.full not in self._lookup:
            raise InvariantViolation("a closed family must contain the empty set and the carrier")
        for a in self.sets:
            for b in self.sets:
                if a | b not in self._lookup:
                    raise InvariantViolation(
                        f"family not closed under union: {self._render(a)} | {self._render(b)}")
                if a & b not in self._lookup:
                    raise InvariantViolation(
                        f"family not closed under intersection: {self._render(a)} & {self._render(b)}")

    def _render(self, mask):
        return "{" + ",".join(self.labels[i] for i in iter_bits(mask)) + "}"

    def subset_mask(self, labels) -> int:
        mask = 0
        for label in labels:
            try:
                mask |= 1 << self.index[label]
            except KeyError:
                raise InvariantViolation(f"label {label!r} is not in the carrier") from None
        return mask

    def labels_of(self, mask: int) -> tuple:
        return tuple(self.labels[i] for i in iter_bits(mask))

    def is_closed(self, labels) -> bool:
        return self.subset_mask(labels) in self._lookup

    def is_closed_mask(self, mask: int) -> bool:
        return mask in self._lookup

    def closure_mask(self, mask: int) -> int:
        acc = self.full
        for c in self.sets:
            if c & mask == mask:
                acc &= c
        return acc

    def closure(self, labels) -> tuple:
        """Smallest closed superset (the family is intersection-closed)."""
        return self.labels_of(self.closure_mask(self.subset_mask(labels)))

    def open_masks(self) -> tuple:
        return tuple(sorted(self.full ^ c for c in self.sets))

    def __len__(self):
        return len(self.sets)


def _saturate(n: int, seeds) -> tuple:
    """Least family containing the seeds closed under union and intersection."""
    family = set(seeds)
    family.add(0)
    family.add((1 << n) - 1)
    work = sorted(family)
    while work:
        new = []
        items = sorted(family)
        for a in work:
            for b in items:
                for c in (a | b, a & b):
                    if c not in family:
                        family.add(c)
                        new.append(c)
        work = new
    return tuple(sorted(family))


def interval_closed_family(L: FiniteLattice, max_size: int = 10) -> ClosedFamily:
    """Closed sets of the smallest topology whose up-rays and down-rays are closed.

    The family can be exponential in the carrier, hence the size cap.  (On a
    finite lattice every singleton is an intersection of two rays, so the
    saturation always reaches the full power set; the computation is kept
    honest rather than shortcut.)
    """
    if L.n > max_size:
        raise CarrierTooLarge(f"carrier of size {L.n} exceeds the interval-topology cap {max_size}")
    rays = []
    for i in range(L.n):
        rays.append(L.poset.up[i])
        rays.append(L.poset.down[i])
    return ClosedFamily(L.labels, _saturate(L.n, rays), kind=INTERVAL)


def discrete_closed_family(labels, max_size: int = 16) -> ClosedFamily:
    labels = tuple(labels)
    if len(labels) > max_size:
        raise CarrierTooLarge(
            f"carrier of size {len(labels)} exceeds the discrete-topology cap {max_size}")
    return ClosedFamily(labels, range(1 << len(labels)), kind=DISCRETE)


def explicit_closed_family(labels, closed_sets) -> ClosedFamily:
    """Validate a user-supplied family against the ClosedFamily invariants."""
    carrier = tuple(labels)
    index = {label: i for i, label in enumerate(carrier)}
    masks = []
    for s in closed_sets:
        mask = 0
        for label in s:
            if label not in index:
                raise InvariantViolation(f"label {label!r} is not in the carrier")
            mask |= 1 << index[label]
        masks.append(mask)
    return ClosedFamily(carrier, masks, kind=EXPLICIT)


def family_for(kind: str, L: FiniteLattice, closed_sets=None,
               interval_cap: int = 10, discrete_cap: int = 16) -> ClosedFamily:
    """Build the closed family named by a topology kind for carrier ``L``."""
    if kind == INTERVAL:
        return interval_closed_family(L, max_size=interval_cap)
    if kind == DISCRETE:
        return discrete_closed_family(L.labels, max_size=discrete_cap)
    if kind == EXPLICIT:
        if closed_sets is None:
            raise InvariantViolation("explicit topology requires its closed sets")
        return explicit_closed_family(L.labels, closed_sets)
    raise InvariantViolation(f"unknown topology kind {kind!r}")
