"""Finite posets and lattices with exhaustive order-theoretic checkers.

Elements are kept in lexicographic label order and that order is canonical
for every subset-valued result in the package.  Subsets are bitmasks over
the canonical order, the full relation is stored per element, and every
predicate is decided by exhaustive scan.  All types are immutable after
construction, so everything here is safe to use concurrently.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    BadLabel,
    CycleDetected,
    DuplicateLabel,
    EmptyCarrier,
    EmptyFactorList,
    EmptySubset,
    NotALattice,
    SubsetTooLarge,
    UnknownLabel,
)
from .verdict import Verdict


def validate_label(label) -> str:
    if not isinstance(label, str) or not label or any(c.isspace() for c in label):
        raise BadLabel(f"labels must be nonempty whitespace-free strings, got {label!r}")
    return label


def tuple_label(labels) -> str:
    """Canonical textual encoding of a tuple of labels."""
    return "(" + ",".join(labels) + ")"


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """A finite partially ordered set over string labels.

    ``up[i]`` is the bitmask of elements above or equal to element ``i`` in
    canonical (lexicographic label) order; ``down[i]`` is the dual.
    """

    __slots__ = ("labels", "index", "up", "down", "full", "_covers")

    def __init__(self, labels, up):
        self.labels = tuple(labels)
        self.index = {label: i for i, label in enumerate(self.labels)}
        self.up = tuple(up)
        n = len(self.labels)
        self.full = (1 << n) - 1
        down = [0] * n
        for i in range(n):
            for j in iter_bits(self.up[i]):
                down[j] |= 1 << i
        self.down = tuple(down)
        self._covers = None

    @property
    def n(self) -> int:
        return len(self.labels)

    def _leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def leq(self, a: str, b: str) -> bool:
        return self._leq(self._index_of(a), self._index_of(b))

    def comparable(self, a: str, b: str) -> bool:
        i, j = self._index_of(a), self._index_of(b)
        return self._leq(i, j) or self._leq(j, i)

    def _index_of(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise UnknownLabel(f"label {label!r} is not an element") from None

    def subset_mask(self, labels) -> int:
        mask = 0
        for label in labels:
            mask |= 1 << self._index_of(label)
        return mask

    def labels_of(self, mask: int) -> tuple:
        return tuple(self.labels[i] for i in iter_bits(mask))

    @property
    def covers(self) -> tuple:
        """Hasse pairs (transitive reduction), sorted by (lower, upper)."""
        if self._covers is None:
            pairs = []
            for i in range(self.n):
                strict_up = self.up[i] & ~(1 << i)
                for j in iter_bits(strict_up):
                    between = strict_up & self.down[j] & ~(1 << j)
                    if between == 0:
                        pairs.append((self.labels[i], self.labels[j]))
            self._covers = tuple(sorted(pairs))
        return self._covers

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.labels == other.labels and self.up == other.up

    def __hash__(self):
        return hash((self.labels, self.up))

    def __repr__(self):
        return f"FinitePoset({len(self.labels)} elements)"


def poset_from_covers(elements, covers) -> FinitePoset:
    """Build a poset as the reflexive-transitive closure of a cover relation.

    Fails with ``CycleDetected`` when the closure violates antisymmetry.
    """
    labels = [validate_label(e) for e in elements]
    seen = set()
    for label in labels:
        if label in seen:
            raise DuplicateLabel(f"label {label!r} declared twice")
        seen.add(label)
    labels = sorted(labels)
    index = {label: i for i, label in enumerate(labels)}
    n = len(labels)
    up = [1 << i for i in range(n)]
    for pair in covers:
        lo, hi = pair
        for label in (lo, hi):
            if label not in index:
                raise UnknownLabel(f"cover references undeclared label {label!r}")
        up[index[lo]] |= 1 << index[hi]
    # Warshall closure over the boolean reachability matrix.
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if up[i] & bit:
                up[i] |= up[k]
    for i in range(n):
        for j in iter_bits(up[i]):
            if j != i and up[j] >> i & 1:
                raise CycleDetected((labels[min(i, j)], labels[max(i, j)]))
    return FinitePoset(labels, up)


class FiniteLattice:
    """A finite lattice: a poset plus total meet and join tables.

    ``factors``/``coords`` are set on lattices built by ``product_lattice``
    and give each element its per-factor coordinates.
    """

    __slots__ = ("poset", "meet", "join", "factors", "coords", "coord_index", "bottom", "top")

    def __init__(self, poset, meet, join, factors=None, coords=None):
        self.poset = poset
        self.meet = meet
        self.join = join
        self.factors = factors
        self.coords = coords
        self.coord_index = None if coords is None else {c: i for i, c in enumerate(coords)}
        bottom = top = None
        for i in range(poset.n):
            if poset.up[i] == poset.full:
                bottom = i
            if poset.down[i] == poset.full:
                top = i
        if bottom is None or top is None:
            raise NotALattice((), "glb" if bottom is None else "lub")
        self.bottom = bottom
        self.top = top

    @property
    def labels(self):
        return self.poset.labels

    @property
    def index(self):
        return self.poset.index

    @property
    def n(self) -> int:
        return self.poset.n

    def leq(self, a: str, b: str) -> bool:
        return self.poset.leq(a, b)

    def subset_mask(self, labels) -> int:
        return self.poset.subset_mask(labels)

    def labels_of(self, mask: int) -> tuple:
        return self.poset.labels_of(mask)

    def meet_label(self, a: str, b: str) -> str:
        return self.labels[self.meet[self.poset._index_of(a)][self.poset._index_of(b)]]

    def join_label(self, a: str, b: str) -> str:
        return self.labels[self.join[self.poset._index_of(a)][self.poset._index_of(b)]]

    def _sup_mask(self, mask: int) -> int:
        acc = None
        for i in iter_bits(mask):
            acc = i if acc is None else self.join[acc][i]
        if acc is None:
            raise EmptySubset("sup of the empty subset")
        return acc

    def _inf_mask(self, mask: int) -> int:
        acc = None
        for i in iter_bits(mask):
            acc = i if acc is None else self.meet[acc][i]
        if acc is None:
            raise EmptySubset("inf of the empty subset")
        return acc

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.poset == other.poset

    def __hash__(self):
        return hash(self.poset)

    def __repr__(self):
        return f"FiniteLattice({self.n} elements)"


def check_lattice(poset: FinitePoset) -> FiniteLattice:
    """Fill meet/join tables by exhaustive glb/lub search.

    Raises ``NotALattice`` with a witness pair when some pair has no least
    upper bound or no greatest lower bound.
    """
    n = poset.n
    if n == 0:
        raise EmptyCarrier("the empty poset is not a lattice")
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            ub = poset.up[i] & poset.up[j]
            lub = None
            for k in iter_bits(ub):
                if ub & ~poset.up[k] == 0:
                    lub = k
                    break
            if lub is None:
                raise NotALattice((poset.labels[i], poset.labels[j]), "lub")
            lb = poset.down[i] & poset.down[j]
            glb = None
            for k in iter_bits(lb):
                if lb & ~poset.down[k] == 0:
                    glb = k
                    break
            if glb is None:
                raise NotALattice((poset.labels[i], poset.labels[j]), "glb")
            join[i][j] = join[j][i] = lub
            meet[i][j] = meet[j][i] = glb
    return FiniteLattice(poset, tuple(map(tuple, meet)), tuple(map(tuple, join)))


def sup_subset(L: FiniteLattice, labels) -> str:
    """Least upper bound of a nonempty subset, computed by folding join."""
    mask = L.subset_mask(labels)
    if mask == 0:
        raise EmptySubset("sup of the empty subset")
    return L.labels[L._sup_mask(mask)]


def inf_subset(L: FiniteLattice, labels) -> str:
    mask = L.subset_mask(labels)
    if mask == 0:
        raise EmptySubset("inf of the empty subset")
    return L.labels[L._inf_mask(mask)]


def product_lattice(factors) -> FiniteLattice:
    """Componentwise product; element labels are tuple encodings in factor order."""
    factors = tuple(factors)
    if not factors:
        raise EmptyFactorList("a product needs at least one factor")
    raw = []
    for coord in itertools.product(*(range(f.n) for f in factors)):
        label = tuple_label(tuple(f.labels[c] for f, c in zip(factors, coord)))
        raw.append((label, coord))
    raw.sort()
    labels = [label for label, _ in raw]
    coords = tuple(coord for _, coord in raw)
    n = len(labels)
    up = [0] * n
    for i, ci in enumerate(coords):
        for j, cj in enumerate(coords):
            if all(f.poset._leq(a, b) for f, a, b in zip(factors, ci, cj)):
                up[i] |= 1 << j
    poset = FinitePoset(labels, up)
    coord_index = {c: i for i, c in enumerate(coords)}
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i, ci in enumerate(coords):
        for j, cj in enumerate(coords):
            meet[i][j] = coord_index[tuple(f.meet[a][b] for f, a, b in zip(factors, ci, cj))]
            join[i][j] = coord_index[tuple(f.join[a][b] for f, a, b in zip(factors, ci, cj))]
    return FiniteLattice(poset, tuple(map(tuple, meet)), tuple(map(tuple, join)),
                         factors=factors, coords=coords)


def iter_chain_masks(poset: FinitePoset, mask: int):
    """Yield every nonempty chain contained in ``mask``, as bitmasks.

    Deterministic depth-first order; each chain is produced exactly once,
    with members added in canonical index order.
    """
    comp = [poset.up[i] | poset.down[i] for i in range(poset.n)]

    def extend(chain: int, allowed: int):
        yield chain
        rest = allowed
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            rest ^= low
            higher = ~((1 << (j + 1)) - 1)
            yield from extend(chain | low, allowed & comp[j] & higher)

    bits = mask
    while bits:
        low = bits & -bits
        i = low.bit_length() - 1
        bits ^= low
        higher = ~((1 << (i + 1)) - 1)
        yield from extend(low, mask & comp[i] & higher)


def _iter_submasks_ascending(mask: int):
    """Nonempty submasks of ``mask`` in increasing numeric order."""
    sub = (-mask) & mask
    while sub:
        yield sub
        sub = (sub - mask) & mask


@dataclass(frozen=True)
class SubsetFlags:
    """Per-flag verdicts for one subset of a lattice."""

    is_chain: Verdict
    is_antichain: Verdict
    is_sublattice: Verdict
    is_subcomplete: Verdict
    is_chain_subcomplete: Verdict

    def items(self):
        return (
            ("chain", self.is_chain),
            ("antichain", self.is_antichain),
            ("sublattice", self.is_sublattice),
            ("subcomplete", self.is_subcomplete),
            ("chain-subcomplete", self.is_chain_subcomplete),
        )


def classify_subset(L: FiniteLattice, subset, subcomplete_cap: int = 20,
                    use_equivalence_above_cap: bool = True) -> SubsetFlags:
    """Decide chain / antichain / sublattice / subcomplete / chain-subcomplete.

    Subcompleteness enumerates all nonempty subsets, which is exponential, so
    it is guarded by ``subcomplete_cap``.  Above the cap the verdict is
    decided through sublattice closure (equivalent on finite carriers) and the
    shortcut is flagged in the verdict's note; pass
    ``use_equivalence_above_cap=False`` to get ``SubsetTooLarge`` instead.

    The empty subset satisfies every flag by convention.
    """
    mask = L.subset_mask(subset)
    if mask == 0:
        empty = Verdict(True, note="empty subset: holds by convention")
        return SubsetFlags(empty, empty, empty, empty, empty)
    bits = list(iter_bits(mask))
    labels = L.labels
    poset = L.poset

    chain = Verdict(True)
    antichain = Verdict(True)
    for a, b in itertools.combinations(bits, 2):
        cmp = poset._leq(a, b) or poset._leq(b, a)
        if cmp and antichain.holds:
            antichain = Verdict(False, witness=(("x", labels[a]), ("y", labels[b])))
        if not cmp and chain.holds:
            chain = Verdict(False, witness=(("x", labels[a]), ("y", labels[b])))
        if not chain.holds and not antichain.holds:
            break

    sublattice = Verdict(True)
    for a, b in itertools.combinations(bits, 2):
        m = L.meet[a][b]
        if not mask >> m & 1:
            sublattice = Verdict(False, witness=(
                ("x", labels[a]), ("y", labels[b]), ("op", "meet"), ("value", labels[m])))
            break
        v = L.join[a][b]
        if not mask >> v & 1:
            sublattice = Verdict(False, witness=(
                ("x", labels[a]), ("y", labels[b]), ("op", "join"), ("value", labels[v])))
            break

    if len(bits) <= subcomplete_cap:
        subcomplete = Verdict(True)
        for sub in _iter_submasks_ascending(mask):
            s = L._sup_mask(sub)
            if not mask >> s & 1:
                subcomplete = Verdict(False, witness=(
                    ("subset", L.labels_of(sub)), ("bound", "sup"), ("value", labels[s])))
                break
            i = L._inf_mask(sub)
            if not mask >> i & 1:
                subcomplete = Verdict(False, witness=(
                    ("subset", L.labels_of(sub)), ("bound", "inf"), ("value", labels[i])))
                break
        chain_sub = Verdict(True)
        for cmask in iter_chain_masks(poset, mask):
            s = L._sup_mask(cmask)
            if not mask >> s & 1:
                chain_sub = Verdict(False, witness=(
                    ("subset", L.labels_of(cmask)), ("bound", "sup"), ("value", labels[s])))
                break
            i = L._inf_mask(cmask)
            if not mask >> i & 1:
                chain_sub = Verdict(False, witness=(
                    ("subset", L.labels_of(cmask)), ("bound", "inf"), ("value", labels[i])))
                break
    else:
        if not use_equivalence_above_cap:
            raise SubsetTooLarge(
                f"subset of size {len(bits)} exceeds the subcompleteness cap {subcomplete_cap}")
        note = "size cap exceeded: decided via sublattice closure, equivalent on finite carriers"
        if sublattice.holds:
            subcomplete = Verdict(True, note=note)
        else:
            w = sublattice.witness_dict()
            subcomplete = Verdict(False, witness=(
                ("subset", (w["x"], w["y"])),
                ("bound", "inf" if w["op"] == "meet" else "sup"),
                ("value", w["value"])), note=note)
        chain_sub = Verdict(
            True, note="size cap exceeded: finite chains attain sup and inf at their endpoints")

    return SubsetFlags(chain, antichain, sublattice, subcomplete, chain_sub)


@dataclass(frozen=True)
class Extremes:
    minimal: tuple
    maximal: tuple
    least: str | None
    greatest: str | None


def extremes(P: FinitePoset) -> Extremes:
    """Minimal/maximal elements by scan; least/greatest when they exist."""
    minimal = tuple(P.labels[i] for i in range(P.n) if P.down[i] == 1 << i)
    maximal = tuple(P.labels[i] for i in range(P.n) if P.up[i] == 1 << i)
    least = greatest = None
    for i in range(P.n):
        if P.up[i] == P.full:
            least = P.labels[i]
        if P.down[i] == P.full:
            greatest = P.labels[i]
    return Extremes(minimal, maximal, least, greatest)
