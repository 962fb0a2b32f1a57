"""Textual formats: parsing with full validation, and canonical serialization.

All documents are JSON.  Canonical form: two-space indent, sorted object
keys, one trailing newline, and semantically ordered lists (elements and
covers sorted lexicographically, payoff tables sorted by profile).  Lists
whose order carries meaning (``players``, labeled-chain ``labels``) keep
their declared order.  ``parse(serialize(x))`` returns an equal instance and
serialization of a canonical document is byte-identical to it.

Rational values are serialized as ``"p/q"`` (or a bare integer string);
floats are rejected to keep everything exact.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .errors import ParseError
from .functions import ChainCodomain, LatticeFunction
from .games import Game, TopologySpec
from .lattice import FiniteLattice, check_lattice, poset_from_covers, product_lattice
from .topology import KINDS, EXPLICIT


def parse_value(raw):
    """Exact rational from an int or a "p" / "p/q" string."""
    if isinstance(raw, bool):
        raise ParseError(f"boolean {raw!r} is not a rational value")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, float):
        raise ParseError("floating-point values are rejected; use exact \"p/q\" strings")
    if isinstance(raw, str):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"cannot read {raw!r} as an exact rational") from exc
    raise ParseError(f"cannot read {raw!r} as an exact rational")


def format_value(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _expect(obj, field, kind, where):
    if not isinstance(obj, dict) or field not in obj:
        raise ParseError(f"{where}: missing field {field!r}")
    value = obj[field]
    if kind is not None and not isinstance(value, kind):
        raise ParseError(f"{where}: field {field!r} has the wrong type")
    return value


def parse_lattice(obj, where: str = "lattice") -> FiniteLattice:
    if isinstance(obj, dict) and "product" in obj:
        factor_objs = _expect(obj, "product", list, where)
        if not factor_objs:
            raise ParseError(f"{where}: empty factor list")
        factors = [parse_lattice(fo, where=f"{where}.product[{k}]")
                   for k, fo in enumerate(factor_objs)]
        return product_lattice(factors)
    elements = _expect(obj, "elements", list, where)
    covers = _expect(obj, "covers", list, where)
    if not elements:
        raise ParseError(f"{where}: empty elements list")
    cover_pairs = []
    for c in covers:
        if not isinstance(c, list) or len(c) != 2:
            raise ParseError(f"{where}: covers must be two-element label lists")
        cover_pairs.append((c[0], c[1]))
    from .errors import LatGamesError

    try:
        poset = poset_from_covers(elements, cover_pairs)
    except LatGamesError as exc:
        raise ParseError(f"{where}: {exc}") from exc
    # NotALattice propagates with its witness pair: the document is
    # well-formed, the order property fails.
    return check_lattice(poset)


def lattice_obj(L: FiniteLattice) -> dict:
    # Product structure is preserved so split-based checks survive a round
    # trip; the factor list order is semantic and never sorted.
    if L.factors is not None:
        return {"product": [lattice_obj(f) for f in L.factors]}
    return {
        "elements": list(L.labels),
        "covers": [list(c) for c in L.poset.covers],
    }


def parse_codomain(obj, where: str = "codomain") -> ChainCodomain:
    kind = _expect(obj, "kind", str, where)
    if kind == "rational":
        return ChainCodomain.rational()
    if kind == "labeled":
        labels = _expect(obj, "labels", list, where)
        from .errors import LatGamesError

        try:
            return ChainCodomain.labeled(labels)
        except LatGamesError as exc:
            raise ParseError(f"{where}: {exc}") from exc
    raise ParseError(f"{where}: unknown codomain kind {kind!r}")


def codomain_obj(codomain: ChainCodomain) -> dict:
    if codomain.is_rational:
        return {"kind": "rational"}
    return {"kind": "labeled", "labels": list(codomain.labels)}


def _read_table_value(codomain, raw, where):
    if codomain.is_rational:
        return parse_value(raw)
    if not isinstance(raw, str):
        raise ParseError(f"{where}: labeled values must be strings")
    return raw


def parse_function(obj, where: str = "function") -> LatticeFunction:
    domain = parse_lattice(_expect(obj, "domain", dict, where), where=f"{where}.domain")
    codomain = parse_codomain(_expect(obj, "codomain", dict, where), where=f"{where}.codomain")
    rows = _expect(obj, "table", list, where)
    table = {}
    for row in rows:
        element = _expect(row, "element", str, f"{where}.table")
        if element in table:
            raise ParseError(f"{where}: duplicate table entry for {element!r}")
        table[element] = _read_table_value(codomain, _expect(row, "value", None, f"{where}.table"),
                                           f"{where}.table")
    from .errors import LatGamesError

    try:
        return LatticeFunction(domain, codomain, table)
    except LatGamesError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def function_obj(f: LatticeFunction) -> dict:
    rows = []
    for label, value in zip(f.domain.labels, f.values):
        rows.append({"element": label,
                     "value": format_value(value) if f.codomain.is_rational else value})
    return {"domain": lattice_obj(f.domain), "codomain": codomain_obj(f.codomain), "table": rows}


def parse_topology(obj, where: str = "topology") -> TopologySpec:
    kind = _expect(obj, "kind", str, where)
    if kind not in KINDS:
        raise ParseError(f"{where}: unknown topology kind {kind!r}")
    if kind == EXPLICIT:
        sets = _expect(obj, "closed_sets", list, where)
        closed = []
        for s in sets:
            if not isinstance(s, list):
                raise ParseError(f"{where}: closed sets must be label lists")
            closed.append(tuple(s))
        return TopologySpec(kind, tuple(closed))
    return TopologySpec(kind)


def topology_obj(spec: TopologySpec) -> dict:
    if spec.kind == EXPLICIT:
        return {"kind": spec.kind,
                "closed_sets": sorted([sorted(s) for s in spec.closed_sets])}
    return {"kind": spec.kind}


def parse_game(obj, where: str = "game") -> Game:
    players = _expect(obj, "players", list, where)
    strategies_obj = _expect(obj, "strategies", dict, where)
    codomains_obj = _expect(obj, "codomains", dict, where)
    payoffs_obj = _expect(obj, "payoffs", dict, where)
    strategies = {p: parse_lattice(_expect(strategies_obj, p, dict, f"{where}.strategies"),
                                   where=f"{where}.strategies[{p}]")
                  for p in players}
    codomains = {p: parse_codomain(_expect(codomains_obj, p, dict, f"{where}.codomains"),
                                   where=f"{where}.codomains[{p}]")
                 for p in players}
    payoffs = {}
    for p in players:
        rows = _expect(payoffs_obj, p, list, f"{where}.payoffs")
        table = {}
        for row in rows:
            profile_map = _expect(row, "profile", dict, f"{where}.payoffs[{p}]")
            try:
                profile = tuple(profile_map[q] for q in players)
            except KeyError as exc:
                raise ParseError(f"{where}.payoffs[{p}]: profile missing coordinate {exc}") from None
            if len(profile_map) != len(players):
                raise ParseError(f"{where}.payoffs[{p}]: profile names unknown players")
            if profile in table:
                raise ParseError(f"{where}.payoffs[{p}]: duplicate profile {profile}")
            table[profile] = _read_table_value(codomains[p],
                                               _expect(row, "value", None, f"{where}.payoffs[{p}]"),
                                               f"{where}.payoffs[{p}]")
        payoffs[p] = table
    topologies = None
    if "topologies" in obj:
        topologies = {}
        topo_obj = obj["topologies"]
        if not isinstance(topo_obj, dict):
            raise ParseError(f"{where}: topologies must map players to topology objects")
        for p, t in topo_obj.items():
            topologies[p] = parse_topology(t, where=f"{where}.topologies[{p}]")
    from .errors import LatGamesError

    try:
        return Game(players, strategies, codomains, payoffs, topologies=topologies)
    except LatGamesError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def game_obj(G: Game) -> dict:
    payoffs = {}
    for p in G.players:
        rows = []
        for profile in G.profiles():
            value = G.payoffs[p][profile]
            rows.append({
                "profile": dict(zip(G.players, profile)),
                "value": format_value(value) if G.codomains[p].is_rational else value,
            })
        payoffs[p] = rows
    obj = {
        "players": list(G.players),
        "strategies": {p: lattice_obj(G.strategies[p]) for p in G.players},
        "codomains": {p: codomain_obj(G.codomains[p]) for p in G.players},
        "payoffs": payoffs,
    }
    if G.topologies:
        obj["topologies"] = {p: topology_obj(t) for p, t in sorted(G.topologies.items())}
    return obj


def detect_kind(obj) -> str:
    if not isinstance(obj, dict):
        raise ParseError("document root must be an object")
    if "players" in obj:
        return "game"
    if "table" in obj:
        return "function"
    if "elements" in obj or "product" in obj:
        return "lattice"
    if "kind" in obj:
        return "topology"
    raise ParseError("cannot tell whether this document is a lattice, function, game, or topology")


def parse(text: str):
    """Detect and parse one instance; returns ``(kind, instance)``."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    kind = detect_kind(obj)
    if kind == "game":
        return kind, parse_game(obj)
    if kind == "function":
        return kind, parse_function(obj)
    if kind == "lattice":
        return kind, parse_lattice(obj)
    return kind, parse_topology(obj)


def serialize(instance) -> str:
    """Canonical textual form of a lattice, function, game, or topology spec."""
    if isinstance(instance, Game):
        obj = game_obj(instance)
    elif isinstance(instance, LatticeFunction):
        obj = function_obj(instance)
    elif isinstance(instance, FiniteLattice):
        obj = lattice_obj(instance)
    elif isinstance(instance, TopologySpec):
        obj = topology_obj(instance)
    else:
        raise TypeError(f"cannot serialize {type(instance).__name__}")
    return canonical_dumps(obj)


def canonical_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_path(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse(text)


def save_path(path, instance):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(instance))
