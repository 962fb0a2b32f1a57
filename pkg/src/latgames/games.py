"""Finite games with lattice strategy spaces: validation, best responses,
equilibrium enumeration, and extremal equilibria by monotone iteration.

The joint strategy space is never materialized as one big lattice; profiles
are tuples of per-player labels in declaration order and all order structure
is computed componentwise.  Scans run in canonical, deterministic order, so
reports are identical regardless of how work is partitioned.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .argmax import Correspondence
from .errors import (
    InvariantViolation,
    LabeledCodomainUnsupported,
    NoGreatestElement,
    NotStrictlyIncreasing,
    NotValidated,
    StateSpaceTooLarge,
    StructuralError,
    TheoremFalsified,
)
from .functions import LatticeFunction
from .lattice import iter_bits, product_lattice, tuple_label, validate_label
from .topology import explicit_closed_family
from .verdict import Verdict


@dataclass(frozen=True)
class TopologySpec:
    """Per-player topology declaration: interval, discrete, or explicit sets."""

    kind: str
    closed_sets: tuple | None = None


class Game:
    """Players, per-player strategy lattices, and payoff tables on profiles.

    ``payoffs[p]`` maps each joint profile (a tuple of labels in player
    declaration order) to an exact value in player ``p``'s codomain.
    Instances are immutable after construction; caches are fill-once.
    """

    def __init__(self, players, strategies, codomains, payoffs, topologies=None):
        self.players = tuple(players)
        if not self.players:
            raise StructuralError("a game needs at least one player")
        if len(set(self.players)) != len(self.players):
            raise StructuralError("player ids must be distinct")
        for p in self.players:
            validate_label(p)
        for name, mapping in (("strategies", strategies), ("codomains", codomains),
                              ("payoffs", payoffs)):
            missing = [p for p in self.players if p not in mapping]
            extra = [p for p in mapping if p not in self.players]
            if missing or extra:
                raise StructuralError(f"{name} must be keyed exactly by the players; "
                                      f"missing {missing}, extra {extra}")
        self.strategies = {p: strategies[p] for p in self.players}
        self.codomains = {p: codomains[p] for p in self.players}
        if topologies is not None:
            extra = [p for p in topologies if p not in self.players]
            if extra:
                raise StructuralError(f"topologies declared for unknown players {extra}")
            for p, spec in topologies.items():
                if spec.kind == "explicit":
                    # materializing validates the closed-family axioms against
                    # the player's strategy labels
                    explicit_closed_family(strategies[p].labels, spec.closed_sets)
        self.topologies = dict(topologies) if topologies else {}
        self.factors = tuple(self.strategies[p] for p in self.players)
        expected = None
        self.payoffs = {}
        self.keys = {}
        for p in self.players:
            table = payoffs[p]
            if expected is None:
                expected = set(itertools.product(*(f.labels for f in self.factors)))
            got = set(table)
            if got != expected:
                missing = sorted(expected - got)[:3]
                extra = sorted(got - expected)[:3]
                raise InvariantViolation(
                    f"payoff table for player {p!r} must be total over the joint profiles; "
                    f"missing e.g. {missing}, unknown e.g. {extra}")
            codomain = self.codomains[p]
            values = {profile: codomain.validate(v) for profile, v in table.items()}
            self.payoffs[p] = values
            self.keys[p] = {profile: codomain.key(v) for profile, v in values.items()}
        self._br_cache = {p: {} for p in self.players}
        self._validation = None

    @property
    def profile_count(self) -> int:
        n = 1
        for f in self.factors:
            n *= f.n
        return n

    def profiles(self):
        """All joint profiles, in canonical (componentwise label) order."""
        return itertools.product(*(f.labels for f in self.factors))

    def player_index(self, player: str) -> int:
        try:
            return self.players.index(player)
        except ValueError:
            raise StructuralError(f"unknown player {player!r}") from None

    def profile_from_mapping(self, mapping) -> tuple:
        return tuple(mapping[p] for p in self.players)

    def profile_dict(self, profile) -> dict:
        return dict(zip(self.players, profile))

    def check_profile(self, profile) -> tuple:
        profile = tuple(profile)
        if len(profile) != len(self.players):
            raise StructuralError("profile has the wrong number of coordinates")
        for f, label in zip(self.factors, profile):
            if label not in f.index:
                raise StructuralError(f"label {label!r} is not a strategy of its player")
        return profile

    def opp_profile(self, i: int, profile) -> tuple:
        return profile[:i] + profile[i + 1:]

    def _insert(self, i: int, opp: tuple, label: str) -> tuple:
        return opp[:i] + (label,) + opp[i:]

    def opp_profiles(self, i: int):
        others = [f.labels for j, f in enumerate(self.factors) if j != i]
        return itertools.product(*others)

    def _opp_leq(self, i: int, a: tuple, b: tuple) -> bool:
        factors = [f for j, f in enumerate(self.factors) if j != i]
        return all(f.poset._leq(f.index[x], f.index[y]) for f, x, y in zip(factors, a, b))

    def _br(self, i: int, opp: tuple):
        """Best-response labels and bitmask of player i against an opponent profile."""
        cache = self._br_cache[self.players[i]]
        hit = cache.get(opp)
        if hit is not None:
            return hit
        factor = self.factors[i]
        keys = self.keys[self.players[i]]
        best = None
        for label in factor.labels:
            k = keys[self._insert(i, opp, label)]
            if best is None or k > best:
                best = k
        labels = tuple(label for label in factor.labels
                       if keys[self._insert(i, opp, label)] == best)
        mask = factor.subset_mask(labels)
        result = (labels, frozenset(labels), mask)
        cache[opp] = result
        return result

    def section(self, i: int, opp: tuple) -> LatticeFunction:
        """Player i's payoff as a function of their own strategy, opponents fixed."""
        factor = self.factors[i]
        player = self.players[i]
        table = {label: self.payoffs[player][self._insert(i, opp, label)]
                 for label in factor.labels}
        return LatticeFunction(factor, self.codomains[player], table)

    def transformed(self, player: str, t) -> "Game":
        """Copy of the game with a strictly increasing map applied to one payoff."""
        i = self.player_index(player)
        codomain = self.codomains[player]
        if not codomain.is_rational:
            raise LabeledCodomainUnsupported("transforms are defined for rational payoffs")
        lookup = t.__getitem__ if hasattr(t, "__getitem__") else t
        image = sorted(set(self.payoffs[player].values()))
        mapped = {}
        for v in image:
            out = lookup(v)
            if isinstance(out, bool) or not isinstance(out, (int, Fraction)):
                raise NotStrictlyIncreasing(f"map produced non-rational value {out!r}")
            mapped[v] = Fraction(out)
        for lo, hi in zip(image, image[1:]):
            if not mapped[lo] < mapped[hi]:
                raise NotStrictlyIncreasing(
                    f"map is not strictly increasing on the image at {lo} vs {hi}")
        payoffs = {p: dict(self.payoffs[p]) for p in self.players}
        payoffs[player] = {profile: mapped[v] for profile, v in self.payoffs[player].items()}
        return Game(self.players, self.strategies, self.codomains, payoffs,
                    topologies=self.topologies or None)


def validate_game(G: Game) -> Verdict:
    """Sectionwise quasisupermodularity plus single crossing for every player.

    The witness names the player, the clause, and the violating tuple.
    Results are cached on the game.
    """
    from .properties import is_quasisupermodular

    if G._validation is not None:
        return G._validation
    verdict = Verdict(True)
    for i, player in enumerate(G.players):
        for opp in G.opp_profiles(i):
            section = G.section(i, opp)
            inner = is_quasisupermodular(section)
            if not inner.holds:
                verdict = Verdict(False, witness=(
                    ("player", player), ("check", "section-quasisupermodular"),
                    ("opponents", opp)) + inner.witness)
                break
        if not verdict.holds:
            break
        factor = G.factors[i]
        keys = G.keys[player]
        opps = list(G.opp_profiles(i))
        done = False
        for p_label, p2_label in itertools.product(factor.labels, repeat=2):
            if p_label == p2_label or not factor.leq(p_label, p2_label):
                continue
            for q, q2 in itertools.product(opps, repeat=2):
                if q == q2 or not G._opp_leq(i, q, q2):
                    continue
                lo_q = keys[G._insert(i, q, p_label)]
                hi_q = keys[G._insert(i, q, p2_label)]
                lo_q2 = keys[G._insert(i, q2, p_label)]
                hi_q2 = keys[G._insert(i, q2, p2_label)]
                clause = None
                if lo_q <= hi_q and not lo_q2 <= hi_q2:
                    clause = "weak"
                elif lo_q < hi_q and not lo_q2 < hi_q2:
                    clause = "strict"
                if clause is not None:
                    verdict = Verdict(False, witness=(
                        ("player", player), ("check", "single-crossing"),
                        ("p", p_label), ("p2", p2_label),
                        ("q", q), ("q2", q2),
                        ("clause", clause)))
                    done = True
                    break
            if done:
                break
        if not verdict.holds:
            break
    G._validation = verdict
    return verdict


def best_response(G: Game, player: str, profile) -> tuple:
    """Maximizers of the player's section at the profile; depends only on the
    opponents' coordinates."""
    i = G.player_index(player)
    profile = G.check_profile(profile)
    return G._br(i, G.opp_profile(i, profile))[0]


def is_nash(G: Game, profile) -> bool:
    profile = G.check_profile(profile)
    for i in range(len(G.players)):
        if profile[i] not in G._br(i, G.opp_profile(i, profile))[1]:
            return False
    return True


@dataclass(frozen=True)
class NashReport:
    equilibria: tuple
    largest: tuple | None = None
    least: tuple | None = None
    is_complete_lattice: bool | None = None
    sublattice_gap: tuple | None = None
    certifies: tuple = ()
    notes: tuple = ()

    @property
    def count(self) -> int:
        return len(self.equilibria)


def _profile_leq(G: Game, a: tuple, b: tuple) -> bool:
    return all(f.poset._leq(f.index[x], f.index[y]) for f, x, y in zip(G.factors, a, b))


def _extremes_of(G: Game, profiles):
    largest = least = None
    for e in profiles:
        if all(_profile_leq(G, e2, e) for e2 in profiles):
            largest = e
        if all(_profile_leq(G, e, e2) for e2 in profiles):
            least = e
    return largest, least


def enumerate_nash(G: Game, cap: int = 1_000_000) -> NashReport:
    """Exact equilibrium set by brute force over all joint profiles."""
    if G.profile_count > cap:
        raise StateSpaceTooLarge(
            f"{G.profile_count} joint strategies exceed the enumeration cap {cap}")
    equilibria = []
    for profile in G.profiles():
        ok = True
        for i in range(len(G.players)):
            if profile[i] not in G._br(i, G.opp_profile(i, profile))[1]:
                ok = False
                break
        if ok:
            equilibria.append(profile)
    largest, least = _extremes_of(G, equilibria)
    return NashReport(equilibria=tuple(equilibria), largest=largest, least=least)


@dataclass(frozen=True)
class TarskiReport:
    largest: tuple
    least: tuple
    iterations_up: int
    iterations_down: int


def _extremal_br(G: Game, i: int, opp: tuple, want_greatest: bool) -> str:
    """Greatest (or least) element of a best-response set, as a set in S_i."""
    factor = G.factors[i]
    mask = G._br(i, opp)[2]
    for idx in iter_bits(mask):
        cover = factor.poset.down[idx] if want_greatest else factor.poset.up[idx]
        if mask & ~cover == 0:
            return factor.labels[idx]
    raise NoGreatestElement(f"best response of player {G.players[i]} against {tuple_label(opp)}"
                            f" has no {'greatest' if want_greatest else 'least'} element")


def tarski_extremes(G: Game) -> TarskiReport:
    """Extremal equilibria by iterating the extremal best-response map from the
    top (resp. bottom) of the joint strategy space.

    Refuses to run on games that fail validation: monotonicity of the map is
    only guaranteed for validated games, and iterating anything else could
    cycle.
    """
    if not validate_game(G).holds:
        raise NotValidated("tarski_extremes needs a validated game")
    results = []
    limit = sum(f.n for f in G.factors) + 2
    for want_greatest in (True, False):
        if want_greatest:
            x = tuple(f.labels[f.top] for f in G.factors)
        else:
            x = tuple(f.labels[f.bottom] for f in G.factors)
        steps = 0
        while True:
            y = tuple(_extremal_br(G, i, G.opp_profile(i, x), want_greatest)
                      for i in range(len(G.players)))
            steps += 1
            if y == x:
                break
            x = y
            if steps > limit:
                raise TheoremFalsified("extremal best-response iteration failed to converge "
                                       "on a validated game")
        if not is_nash(G, x):
            raise TheoremFalsified("extremal iteration converged to a non-equilibrium "
                                   "on a validated game")
        results.append((x, steps))
    (largest, up), (least, down) = results
    return TarskiReport(largest=largest, least=least, iterations_up=up, iterations_down=down)


def verify_equilibrium_structure(G: Game, cap: int = 1_000_000) -> NashReport:
    """Equilibrium set structure: completeness in the induced order, extremal
    points, and whether the set is also a sublattice of the joint space.

    On a finite nonempty set, pairwise least upper and greatest lower bounds
    within the set characterize being a complete lattice in the induced order.
    ``sublattice_gap`` reports a pair whose meet or join computed in the joint
    space escapes the set, distinguishing the two readings.
    """
    base = enumerate_nash(G, cap=cap)
    E = base.equilibria
    complete = bool(E)
    for a, b in itertools.combinations_with_replacement(E, 2):
        ubs = [g for g in E if _profile_leq(G, a, g) and _profile_leq(G, b, g)]
        if not any(all(_profile_leq(G, u, v) for v in ubs) for u in ubs):
            complete = False
            break
        lbs = [g for g in E if _profile_leq(G, g, a) and _profile_leq(G, g, b)]
        if not any(all(_profile_leq(G, v, u) for v in lbs) for u in lbs):
            complete = False
            break
    gap = None
    eset = set(E)
    for a, b in itertools.combinations(E, 2):
        m = tuple(f.labels[f.meet[f.index[x]][f.index[y]]]
                  for f, x, y in zip(G.factors, a, b))
        if m not in eset:
            gap = (a, b, "meet", m)
            break
        v = tuple(f.labels[f.join[f.index[x]][f.index[y]]]
                  for f, x, y in zip(G.factors, a, b))
        if v not in eset:
            gap = (a, b, "join", v)
            break
    certifies = ("order", "topological") if all(
        G.codomains[p].is_rational for p in G.players) else ("order",)
    notes = ()
    if certifies == ("order",):
        notes = ("labeled gains: only the order-theoretic route applies",)
    return NashReport(equilibria=E, largest=base.largest, least=base.least,
                      is_complete_lattice=complete, sublattice_gap=gap,
                      certifies=certifies, notes=notes)


def best_response_correspondence(G: Game, player: str, max_index_size: int = 4096) -> Correspondence:
    """The player's best responses as a correspondence over the opponents'
    joint lattice (materialized, so guarded by a size cap)."""
    i = G.player_index(player)
    others = [f for j, f in enumerate(G.factors) if j != i]
    values = {}
    if others:
        count = 1
        for f in others:
            count *= f.n
        if count > max_index_size:
            raise StateSpaceTooLarge(
                f"opponent space of size {count} exceeds the correspondence cap {max_index_size}")
        index = product_lattice(others)
        for coord, label in zip(index.coords, index.labels):
            opp = tuple(f.labels[c] for f, c in zip(others, coord))
            values[label] = G._br(i, opp)[0]
        return Correspondence(G.strategies[player], values, index_poset=index.poset)
    values[tuple_label(())] = G._br(i, ())[0]
    return Correspondence(G.strategies[player], values, index_keys=(tuple_label(()),))
