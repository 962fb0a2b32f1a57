"""Shared instances and independent oracles for the test suite.

The oracles here deliberately avoid the code paths they check: suprema come
from upper-bound scans over the raw relation instead of join folds, argmax
and Nash sets from direct definition loops over raw tables.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from latgames import (
    ChainCodomain,
    Game,
    LatticeFunction,
    check_lattice,
    poset_from_covers,
    product_lattice,
)
from latgames.generators import chain_lattice, diamond, diamond_mk, fraction_chain

RATIONAL = ChainCodomain.rational()


# ---------------------------------------------------------------- instances

@pytest.fixture(scope="session")
def diamond_lattice():
    return diamond()


@pytest.fixture(scope="session")
def chain01():
    return chain_lattice(2, labels=["0", "1"])


@pytest.fixture(scope="session")
def veinott_domain(diamond_lattice, chain01):
    return product_lattice([diamond_lattice, chain01])


@pytest.fixture(scope="session")
def veinott_function(veinott_domain):
    return LatticeFunction(veinott_domain, RATIONAL, {
        "(0,0)": 2, "(b,1)": 2, "(a,0)": 1, "(b,0)": 1,
        "(1,0)": 0, "(1,1)": 0, "(a,1)": 9, "(0,1)": 10,
    })


@pytest.fixture(scope="session")
def induced_diamond():
    return check_lattice(poset_from_covers(
        ["(1,1)", "(2,3)", "(3,2)", "(4,5)"],
        [("(1,1)", "(2,3)"), ("(1,1)", "(3,2)"),
         ("(2,3)", "(4,5)"), ("(3,2)", "(4,5)")]))


@pytest.fixture(scope="session")
def sum_f(induced_diamond):
    return LatticeFunction(induced_diamond, RATIONAL,
                           {"(1,1)": 1, "(2,3)": 2, "(3,2)": 3, "(4,5)": 4})


@pytest.fixture(scope="session")
def sum_g(induced_diamond):
    return LatticeFunction(induced_diamond, RATIONAL,
                           {"(1,1)": -1, "(2,3)": -3, "(3,2)": -2, "(4,5)": -5})


@pytest.fixture(scope="session")
def star5():
    return diamond_mk(5)


@pytest.fixture(scope="session")
def star_function(star5):
    return LatticeFunction(star5, RATIONAL,
                           {label: (0 if label == "x1" else 1) for label in star5.labels})


def build_star_diamond_game():
    """Two players: punctured star vs a diamond whose top strictly wins."""
    star = diamond_mk(5)
    dia = diamond()
    second = {"0": Fraction(0), "a": Fraction(1), "b": Fraction(1), "1": Fraction(3, 2)}
    pay1, pay2 = {}, {}
    for s1, s2 in itertools.product(star.labels, dia.labels):
        pay1[(s1, s2)] = Fraction(0 if s1 == "x1" else 1)
        pay2[(s1, s2)] = second[s2]
    return Game(["1", "2"], {"1": star, "2": dia},
                {"1": RATIONAL, "2": RATIONAL}, {"1": pay1, "2": pay2})


def build_step_grid6_game():
    """Step payoff vs (s1+1)(s2-s2^2) on the sixth-step grid."""
    grid6 = fraction_chain([0, Fraction(1, 6), Fraction(1, 3), Fraction(1, 2),
                            Fraction(2, 3), Fraction(5, 6), 1])

    def step(s1):
        x = Fraction(s1)
        if x <= Fraction(1, 3):
            return Fraction(0)
        if x < Fraction(2, 3):
            return Fraction(1)
        return Fraction(2)

    pay1, pay2 = {}, {}
    for a, b in itertools.product(grid6.labels, grid6.labels):
        x, y = Fraction(a), Fraction(b)
        pay1[(a, b)] = step(a)
        pay2[(a, b)] = (x + 1) * (y - y * y)
    return Game(["1", "2"], {"1": grid6, "2": grid6},
                {"1": RATIONAL, "2": RATIONAL}, {"1": pay1, "2": pay2})


def build_indicator_grid4_game():
    """Indicator of s1 > 0 vs s1 + a + b; second player moves on a square."""
    grid4 = fraction_chain([0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1])
    half = fraction_chain([0, Fraction(1, 2), 1])
    square = product_lattice([half, half])
    pay1, pay2 = {}, {}
    for s1 in grid4.labels:
        for s2_label, s2_coord in zip(square.labels, square.coords):
            a = Fraction(half.labels[s2_coord[0]])
            b = Fraction(half.labels[s2_coord[1]])
            pay1[(s1, s2_label)] = Fraction(1 if Fraction(s1) > 0 else 0)
            pay2[(s1, s2_label)] = Fraction(s1) + a + b
    return Game(["1", "2"], {"1": grid4, "2": square},
                {"1": RATIONAL, "2": RATIONAL}, {"1": pay1, "2": pay2})


@pytest.fixture(scope="session")
def star_diamond_game():
    return build_star_diamond_game()


@pytest.fixture(scope="session")
def step_grid6_game():
    return build_step_grid6_game()


@pytest.fixture(scope="session")
def indicator_grid4_game():
    return build_indicator_grid4_game()


# ------------------------------------------------------------------ oracles

def oracle_lub(L, a: str, b: str):
    """Least upper bound from the raw relation only (no join table)."""
    ubs = [u for u in L.labels if L.leq(a, u) and L.leq(b, u)]
    for u in ubs:
        if all(L.leq(u, v) for v in ubs):
            return u
    return None


def oracle_glb(L, a: str, b: str):
    lbs = [u for u in L.labels if L.leq(u, a) and L.leq(u, b)]
    for u in lbs:
        if all(L.leq(v, u) for v in lbs):
            return u
    return None


def oracle_sup_subset(L, labels):
    """Unique minimal element of the upper-bound set, from the relation only."""
    labels = list(labels)
    ubs = [u for u in L.labels if all(L.leq(a, u) for a in labels)]
    least = [u for u in ubs if all(L.leq(u, v) for v in ubs)]
    assert len(least) == 1
    return least[0]


def oracle_inf_subset(L, labels):
    labels = list(labels)
    lbs = [u for u in L.labels if all(L.leq(u, a) for a in labels)]
    greatest = [u for u in lbs if all(L.leq(v, u) for v in lbs)]
    assert len(greatest) == 1
    return greatest[0]


def brute_nash_set(G):
    """Nash set straight from the definition: no best-response machinery."""
    out = []
    for profile in G.profiles():
        good = True
        for i, p in enumerate(G.players):
            keys = G.keys[p]
            mine = keys[profile]
            for dev in G.factors[i].labels:
                other = profile[:i] + (dev,) + profile[i + 1:]
                if keys[other] > mine:
                    good = False
                    break
            if not good:
                break
        if good:
            out.append(profile)
    return out


def brute_is_sublattice(L, labels):
    labels = list(labels)
    members = set(labels)
    for a, b in itertools.combinations(labels, 2):
        if L.meet_label(a, b) not in members or L.join_label(a, b) not in members:
            return False
    return True


def brute_is_subcomplete(L, labels):
    labels = list(labels)
    members = set(labels)
    for r in range(1, len(labels) + 1):
        for combo in itertools.combinations(labels, r):
            if oracle_sup_subset(L, combo) not in members:
                return False
            if oracle_inf_subset(L, combo) not in members:
                return False
    return True


def all_functions(L, values):
    """Every table on L with entries drawn from ``values``."""
    for combo in itertools.product(values, repeat=L.n):
        yield LatticeFunction(L, RATIONAL, dict(zip(L.labels, combo)))
