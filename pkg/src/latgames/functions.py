"""Chain codomains and exact-valued functions on finite lattices.

Values are either exact rationals (``fractions.Fraction``) or members of a
labeled chain compared by position.  No floating point anywhere: verdicts
must be exact so that witnesses re-check.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import (
    DomainMismatch,
    InvariantViolation,
    LabeledCodomainUnsupported,
    NotStrictlyIncreasing,
)
from .lattice import FiniteLattice
from .verdict import format_atom

RATIONAL = "rational"
LABELED = "labeled"


class ChainCodomain:
    """A totally ordered value space: exact rationals, or a labeled chain.

    Labeled chains are ordered by list position and never compared
    arithmetically; operations that need the additive structure of the
    values (supermodularity, sums, increasing differences) reject them.
    """

    __slots__ = ("kind", "labels", "_positions")

    def __init__(self, kind, labels=None):
        if kind not in (RATIONAL, LABELED):
            raise InvariantViolation(f"unknown codomain kind {kind!r}")
        self.kind = kind
        if kind == LABELED:
            labels = tuple(labels or ())
            if not labels:
                raise InvariantViolation("a labeled chain needs at least one label")
            if len(set(labels)) != len(labels):
                raise InvariantViolation("labeled chain labels must be distinct")
            self.labels = labels
            self._positions = {label: i for i, label in enumerate(labels)}
        else:
            if labels is not None:
                raise InvariantViolation("a rational codomain carries no labels")
            self.labels = None
            self._positions = None

    @classmethod
    def rational(cls) -> "ChainCodomain":
        return cls(RATIONAL)

    @classmethod
    def labeled(cls, labels) -> "ChainCodomain":
        return cls(LABELED, labels)

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONAL

    def validate(self, value):
        if self.kind == RATIONAL:
            if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
                raise InvariantViolation(f"rational codomain rejects value {value!r}")
            return Fraction(value)
        if value not in self._positions:
            raise InvariantViolation(f"value {value!r} is not on the labeled chain")
        return value

    def key(self, value):
        """Comparison key: the rational itself, or the chain position."""
        return value if self.kind == RATIONAL else self._positions[value]

    def format(self, value) -> str:
        return format_atom(value)

    def __eq__(self, other):
        if not isinstance(other, ChainCodomain):
            return NotImplemented
        return self.kind == other.kind and self.labels == other.labels

    def __hash__(self):
        return hash((self.kind, self.labels))

    def __repr__(self):
        if self.kind == RATIONAL:
            return "ChainCodomain.rational()"
        return f"ChainCodomain.labeled({list(self.labels)!r})"


class LatticeFunction:
    """A total, exact-valued table on a finite lattice."""

    __slots__ = ("domain", "codomain", "values", "keys")

    def __init__(self, domain: FiniteLattice, codomain: ChainCodomain, table):
        self.domain = domain
        self.codomain = codomain
        missing = [label for label in domain.labels if label not in table]
        extra = [label for label in table if label not in domain.index]
        if missing or extra:
            parts = []
            if missing:
                parts.append(f"missing entries for {missing}")
            if extra:
                parts.append(f"entries for unknown elements {extra}")
            raise InvariantViolation("function table must be total: " + "; ".join(parts))
        self.values = tuple(codomain.validate(table[label]) for label in domain.labels)
        self.keys = tuple(codomain.key(v) for v in self.values)

    def value(self, label: str):
        return self.values[self.domain.poset._index_of(label)]

    def table(self) -> dict:
        return dict(zip(self.domain.labels, self.values))

    def image(self) -> tuple:
        """Distinct values in ascending chain order."""
        seen = {}
        for v, k in zip(self.values, self.keys):
            seen.setdefault(k, v)
        return tuple(seen[k] for k in sorted(seen))

    def transform(self, t) -> "LatticeFunction":
        """Apply a strictly increasing rational map pointwise.

        ``t`` is a callable or a mapping defined on the image; strict
        monotonicity is checked on the image, not assumed.
        """
        if not self.codomain.is_rational:
            raise LabeledCodomainUnsupported("transform is defined for rational codomains")
        lookup = t.__getitem__ if hasattr(t, "__getitem__") else t
        image = self.image()
        mapped = {}
        for v in image:
            out = lookup(v)
            if isinstance(out, bool) or not isinstance(out, (int, Fraction)):
                raise NotStrictlyIncreasing(f"map produced non-rational value {out!r}")
            mapped[v] = Fraction(out)
        for lo, hi in zip(image, image[1:]):
            if not mapped[lo] < mapped[hi]:
                raise NotStrictlyIncreasing(
                    f"map is not strictly increasing on the image: "
                    f"t({lo}) = {mapped[lo]} !< t({hi}) = {mapped[hi]}")
        return LatticeFunction(self.domain, self.codomain,
                               {label: mapped[v] for label, v in zip(self.domain.labels, self.values)})

    def __add__(self, other):
        if not isinstance(other, LatticeFunction):
            return NotImplemented
        if not (self.codomain.is_rational and other.codomain.is_rational):
            raise LabeledCodomainUnsupported("sums need the additive structure of rational values")
        if self.domain != other.domain:
            raise DomainMismatch("summands live on different lattices")
        return LatticeFunction(self.domain, self.codomain,
                               {label: a + b
                                for label, a, b in zip(self.domain.labels, self.values, other.values)})

    def __eq__(self, other):
        if not isinstance(other, LatticeFunction):
            return NotImplemented
        return (self.domain == other.domain and self.codomain == other.codomain
                and self.values == other.values)

    def __hash__(self):
        return hash((self.domain, self.codomain, self.values))

    def __repr__(self):
        return f"LatticeFunction({self.domain.n} elements, {self.codomain.kind})"
