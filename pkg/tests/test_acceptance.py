"""Acceptance suite: one test per criterion, exact tolerances, zero slack.

Each test prints an ``ACCEPTANCE <n> PASS`` line when its criterion holds;
a failing assertion is a build-breaking red.  Everything here is exact
arithmetic: no tolerances are loosened anywhere.
"""
from fractions import Fraction

from latgames import (
    LatticeFunction,
    best_response_correspondence,
    classify_subset,
    enumerate_nash,
    explicit_closed_family,
    has_increasing_differences,
    interval_closed_family,
    is_increasing_strong_set_order,
    is_quasisupermodular,
    is_single_crossing,
    is_supermodular,
    is_topologically_usc,
    product_lattice,
    sections_quasisupermodular,
    tarski_extremes,
    transfer_continuity,
    validate_game,
    verify_equilibrium_structure,
    verify_kuku,
)
from latgames.corpus import DATA, check_corpus, corpus_lattices
from latgames.generators import (
    all_lattices,
    chain_lattice,
    random_function,
    random_game,
    random_lattice,
    random_strictly_increasing_map,
)
from latgames.io import load_path
from latgames.rng import Xoshiro256StarStar

from conftest import (
    RATIONAL,
    all_functions,
    brute_nash_set,
    build_indicator_grid4_game,
    build_star_diamond_game,
    build_step_grid6_game,
)


def _report(n):
    print(f"ACCEPTANCE {n} PASS")


def test_criterion_01_single_crossing_counterexample(veinott_function):
    """Eight-point function: single crossing and quasisupermodular sections,
    joint quasisupermodularity fails with meet value 2 and join value 0."""
    f = veinott_function
    assert is_single_crossing(f, split=0).holds
    assert sections_quasisupermodular(f, split=0).holds
    dom = f.domain
    for c in ("0", "1"):
        section = LatticeFunction(
            dom.factors[0], RATIONAL,
            {l: f.value(f"({l},{c})") for l in dom.factors[0].labels})
        assert is_quasisupermodular(section).holds
    verdict = is_quasisupermodular(f)
    assert not verdict.holds
    w = verdict.witness_dict()
    assert f.value(dom.meet_label(w["x"], w["y"])) == 2
    assert f.value(dom.join_label(w["x"], w["y"])) == 0
    _report(1)


def test_criterion_02_sum_counterexample(sum_f, sum_g):
    """f supermodular, g quasisupermodular, f+g not quasisupermodular with the
    witness pair {(2,3),(3,2)}."""
    assert is_supermodular(sum_f).holds
    assert is_quasisupermodular(sum_g).holds
    verdict = is_quasisupermodular(sum_f + sum_g)
    assert not verdict.holds
    w = verdict.witness_dict()
    assert {w["x"], w["y"]} == {"(2,3)", "(3,2)"}
    _report(2)


def test_criterion_03_star_diamond_game():
    """Exact equilibrium set (star minus its low point) x {diamond top};
    monotone iteration reproduces enumeration's extremes exactly."""
    G = build_star_diamond_game()
    assert validate_game(G).holds
    report = enumerate_nash(G)
    expected = {(s1, "1") for s1 in ("M", "m", "x2", "x3", "x4", "x5")}
    assert set(report.equilibria) == expected and report.count == 6
    assert list(report.equilibria) == brute_nash_set(G)
    tarski = tarski_extremes(G)
    assert tarski.largest == report.largest == ("M", "1")
    assert tarski.least == report.least == ("m", "1")
    _report(3)


def test_criterion_04_grid_discretizations():
    """Sixth-step game solves to {2/3,5/6,1} x {1/2}; quarter-step game has
    largest equilibrium (1,1,1); the grid's extra least equilibrium is
    documented against the continuum."""
    G = build_step_grid6_game()
    assert validate_game(G).holds
    report = enumerate_nash(G)
    assert set(report.equilibria) == {("2/3", "1/2"), ("5/6", "1/2"), ("1", "1/2")}
    tarski = tarski_extremes(G)
    assert tarski.largest == ("1", "1/2") and tarski.least == ("2/3", "1/2")

    H = build_indicator_grid4_game()
    assert validate_game(H).holds
    hreport = enumerate_nash(H)
    assert set(hreport.equilibria) == {(s1, "(1,1)") for s1 in ("1/4", "1/2", "3/4", "1")}
    assert hreport.largest == ("1", "(1,1)")
    assert hreport.least == ("1/4", "(1,1)")
    expected_text = (DATA / "game_indicator_grid4.expected.txt").read_text()
    assert "LEAST 1/4 (1,1)" in expected_text
    assert "least equilibrium" in expected_text and "continuum has none" in expected_text
    check_corpus("game_indicator_grid4")
    _report(4)


def test_criterion_05_argmax_structure_suite():
    """Exhaustive: all lattices of size <= 5 with every table over a 3-element
    chain; plus 1000 seeded random instances of size <= 8.  Whenever the
    quasisupermodular premise holds, the argmax is a nonempty subcomplete
    sublattice (the upper-chain-subcomplete premise is automatic and checked)."""
    values = [Fraction(0), Fraction(1), Fraction(2)]
    exhaustive = premise_hits = 0
    for L in all_lattices(5):
        for f in all_functions(L, values):
            report = verify_kuku(f)  # raises TheoremFalsified on any violation
            assert report.upper_chain_subcomplete.holds
            exhaustive += 1
            if report.premises_hold:
                premise_hits += 1
                assert report.conclusion_holds
    assert exhaustive == 1902 and premise_hits >= 500

    rng = Xoshiro256StarStar(0x5EED_0005)
    randoms = 0
    for i in range(1000):
        L = random_lattice(rng, max_size=8)
        strategy = "supermodular_then_transform" if i % 2 else "rejection"
        f = random_function(rng, L, strategy, values=(0, 1, 2))
        report = verify_kuku(f)
        assert report.premises_hold
        assert report.conclusion_holds
        randoms += 1
    assert randoms == 1000
    _report(5)


def test_criterion_06_finite_game_suite():
    """500 seeded random validated games (2-3 players, each lattice at most 6
    elements): nonempty equilibrium set, complete in the induced order, best
    responses increasing in the strong set order, iteration equals brute force."""
    rng = Xoshiro256StarStar(0x5EED_0006)
    for i in range(500):
        G = random_game(rng, max_players=3, max_size=6 if i % 5 == 0 else 4)
        assert all(G.strategies[p].n <= 6 for p in G.players)
        assert validate_game(G).holds
        report = verify_equilibrium_structure(G)
        assert report.count > 0
        assert report.is_complete_lattice
        tarski = tarski_extremes(G)
        assert tarski.largest == report.largest
        assert tarski.least == report.least
        for p in G.players:
            corr = best_response_correspondence(G, p)
            assert is_increasing_strong_set_order(corr).holds
    _report(6)


def test_criterion_07_subcomplete_iff_sublattice():
    """All lattices of size <= 6, all subsets: subcomplete and sublattice
    coincide, chain-subcompleteness is universal."""
    lattices = all_lattices(6)
    assert len(lattices) == 51
    checked = 0
    for L in lattices:
        for mask in range(1 << L.n):
            flags = classify_subset(L, L.labels_of(mask))
            assert flags.is_subcomplete.holds == flags.is_sublattice.holds
            assert flags.is_chain_subcomplete.holds
            checked += 1
    assert checked == sum(1 << L.n for L in lattices)
    _report(7)


def test_criterion_08_interval_closed_sets_chain_subcomplete():
    """Every interval-closed subset of every corpus lattice of size <= 8
    contains the sup and inf of each of its chains."""
    lattices = corpus_lattices(8)
    assert lattices
    for L in lattices:
        family = interval_closed_family(L)
        for mask in family.sets:
            flags = classify_subset(L, L.labels_of(mask))
            assert flags.is_chain_subcomplete.holds
    _report(8)


def test_criterion_09_ordinal_invariance():
    """100 seeded (game, strictly increasing map) pairs: transforming one
    player's payoff changes neither the equilibrium set nor its extremes."""
    rng = Xoshiro256StarStar(0x5EED_0009)
    for _ in range(100):
        G = random_game(rng, max_players=3, max_size=4)
        base = enumerate_nash(G)
        player = G.players[rng.below(len(G.players))]
        image = sorted(set(G.payoffs[player].values()))
        H = G.transformed(player, random_strictly_increasing_map(rng, image))
        assert validate_game(H).holds
        after = enumerate_nash(H)
        assert after.equilibria == base.equilibria
        assert after.largest == base.largest
        assert after.least == base.least
    _report(9)


def test_criterion_10_implication_hierarchy():
    """supermodular => quasisupermodular; increasing differences => single
    crossing; topological usc => transfer upper => transfer weak upper; each
    converse fails on a frozen witness."""
    # supermodular => quasisupermodular: exhaustively on all lattices of size
    # <= 5 with values in {0,1,2,3}, then on random larger instances
    values = [Fraction(v) for v in (0, 1, 2, 3)]
    for L in all_lattices(5):
        for f in all_functions(L, values):
            if is_supermodular(f).holds:
                assert is_quasisupermodular(f).holds
    rng = Xoshiro256StarStar(0x5EED_0010)
    for _ in range(50):
        L = random_lattice(rng, max_size=8)
        f = random_function(rng, L, "supermodular_then_transform")
        assert is_quasisupermodular(f).holds

    # increasing differences => single crossing, exhaustively on small products
    c2, c3 = chain_lattice(2), chain_lattice(3)
    small = [Fraction(v) for v in (0, 1, 2)]
    for P in (product_lattice([c2, c2]), product_lattice([c2, c3])):
        for f in all_functions(P, small):
            if has_increasing_differences(f, split=0).holds:
                assert is_single_crossing(f, split=0).holds

    # topological usc => transfer upper => transfer weak upper
    c4 = chain_lattice(4)
    downs = explicit_closed_family(c4.labels, [tuple(c4.labels[:k]) for k in range(5)])
    interval = interval_closed_family(c4)
    for f in all_functions(c4, small):
        for family in (downs, interval):
            report = transfer_continuity(f, family)
            if is_topologically_usc(f, family).holds:
                assert report.transfer_upper.holds
            if report.transfer_upper.holds:
                assert report.transfer_weak_upper.holds

    # frozen converse witnesses
    _, g = load_path(DATA / "sum_counterexample_g.json")
    assert is_quasisupermodular(g).holds and not is_supermodular(g).holds

    _, parabola = load_path(DATA / "single_crossing_not_increasing_differences.json")
    assert is_single_crossing(parabola, split=1).holds
    assert not has_increasing_differences(parabola, split=1).holds

    _, valley = load_path(DATA / "transfer_weak_only.json")
    _, topo_spec = load_path(DATA / "down_topology_chain3.json")
    family = explicit_closed_family(valley.domain.labels, topo_spec.closed_sets)
    report = transfer_continuity(valley, family)
    assert report.transfer_weak_upper.holds and not report.transfer_upper.holds

    _, ridge = load_path(DATA / "transfer_upper_not_topological.json")
    report = transfer_continuity(ridge, family)
    assert report.transfer_upper.holds
    assert not is_topologically_usc(ridge, family).holds
    _report(10)


def test_full_corpus_is_reproducible():
    """Bonus gate: every frozen corpus expectation reproduces bit-exactly."""
    check_corpus()
    print("ACCEPTANCE corpus PASS")
