"""Body-and-spine hypergraphs, piercing, sunflowers, lifting, the
monochromatic-copy finder, and the two-part host colouring."""

import itertools
import math
import random

import pytest

from ramseykit import hedgehog as hh
from ramseykit import rainbow as rb
from ramseykit import stepup as su
from ramseykit.errors import (
    ParameterError,
    PreconditionError,
)


# --- independent oracles ------------------------------------------------------

def oracle_min_hitting_set(sets):
    """Smallest hitting set by subset enumeration over candidate vertices."""
    universe = sorted(set().union(*sets)) if sets else []
    if not sets:
        return 0
    for size in range(len(universe) + 1):
        for combo in itertools.combinations(universe, size):
            chosen = set(combo)
            if all(chosen & s for s in sets):
                return size
    raise AssertionError("unreachable")


def oracle_degeneracy(h):
    """Max over all induced subhypergraphs of the min incidence (tiny n)."""
    best = 0
    vs = list(h.vertices)
    for size in range(1, len(vs) + 1):
        for sub in itertools.combinations(vs, size):
            subset = set(sub)
            edges = [e for e in h.edges if set(e) <= subset]
            mind = min(sum(1 for e in edges if v in e) for v in sub)
            best = max(best, mind)
    return best


# --- construction ---------------------------------------------------------------

def test_build_examples():
    h = hh.build_hedgehog(3, 3, 2)
    assert len(h.edges) == 3 and len(h.vertices) == 6
    # the balanced variant at uniformity 3 is the same object
    assert math.ceil(3 / 2) == 2


@pytest.mark.parametrize(
    "t,k,s", [(2, 3, 2), (4, 3, 2), (5, 7, 3), (8, 5, 4), (8, 7, 6), (6, 4, 2)]
)
def test_counts_and_private_vertices(t, k, s):
    h = hh.build_hedgehog(t, k, s)
    assert len(h.edges) == math.comb(t, s)
    assert len(h.vertices) == t + (k - s) * math.comb(t, s)
    hyp = h.to_hypergraph()
    body = set(h.body)
    for e, f in itertools.combinations(hyp.edges, 2):
        assert set(e) & set(f) <= body
    privs = [v for _, priv in h.spine for v in priv]
    assert len(privs) == len(set(privs))


def test_build_guards():
    with pytest.raises(ParameterError):
        hh.build_hedgehog(3, 2, 2)
    with pytest.raises(ParameterError):
        hh.build_hedgehog(1, 3, 2)


# --- degeneracy -----------------------------------------------------------------

def test_degeneracy_examples():
    single = hh.Hypergraph(3, (1, 2, 3), ((1, 2, 3),))
    assert hh.degeneracy(single) == 1
    for t, k in [(3, 3), (4, 3), (5, 4)]:
        assert hh.degeneracy(hh.build_hedgehog(t, k, k - 1).to_hypergraph()) == 1
    k4 = hh.Hypergraph(3, tuple(range(1, 5)), tuple(itertools.combinations(range(1, 5), 3)))
    assert hh.degeneracy(k4) == 3


def test_degeneracy_matches_induced_subgraph_definition():
    rng = random.Random(6)
    for _ in range(25):
        n = rng.randint(3, 7)
        all_edges = list(itertools.combinations(range(1, n + 1), 3))
        edges = tuple(sorted(rng.sample(all_edges, rng.randint(1, len(all_edges)))))
        h = hh.Hypergraph(3, tuple(range(1, n + 1)), edges)
        assert hh.degeneracy(h) == oracle_degeneracy(h)


# --- piercing numbers -------------------------------------------------------------

def test_piercing_examples():
    h = hh.Hypergraph(3, (1, 2, 3, 4), ((1, 2, 3), (1, 2, 4)))
    res = hh.piercing_number(h, 1)
    assert res.value == 1 and res.witness == (2,)
    petals = hh.Hypergraph(
        3, tuple(range(1, 10)), tuple(sorted((1, 2 * i, 2 * i + 1) for i in range(1, 5)))
    )
    assert hh.piercing_number(petals, 1).value == 4
    # pair at uniformity 3: co-degree
    star = hh.Hypergraph(3, tuple(range(1, 6)), tuple(sorted((1, 2, w) for w in (3, 4, 5))))
    assert hh.piercing_number(star, (1, 2)).value == 3
    with pytest.raises(ParameterError):
        hh.piercing_number(star, (1, 2, 3))


def test_piercing_matches_enumeration():
    rng = random.Random(12)
    for _ in range(60):
        n = rng.randint(4, 9)
        all_edges = list(itertools.combinations(range(1, n + 1), 3))
        edges = tuple(sorted(rng.sample(all_edges, rng.randint(1, min(14, len(all_edges))))))
        h = hh.Hypergraph(3, tuple(range(1, n + 1)), edges)
        v = rng.randint(1, n)
        res = hh.piercing_number(h, v)
        rests = [set(e) - {v} for e in edges if v in e]
        assert res.value == oracle_min_hitting_set(rests)
        assert all(set(r) & set(res.witness) for r in rests)


def test_piercing_colour_restriction():
    edges = tuple(sorted(itertools.combinations(range(1, 6), 3)))
    h = hh.Hypergraph(3, tuple(range(1, 6)), edges)
    table = {e: (("base", 1) if 2 in e else ("base", 2)) for e in edges}
    c = su.TabulatedColouring(3, 5, table, [("base", 1), ("base", 2)])
    res = hh.piercing_number(h, 1, colouring=c, colour=("base", 1))
    assert res.value == 1 and res.witness == (2,)


# --- sunflowers -----------------------------------------------------------------

def test_sunflower_guard_and_greedy():
    star = hh.Hypergraph(2, tuple(range(1, 8)), tuple(sorted((1, u) for u in range(2, 8))))
    out = hh.extract_sunflower(star, 1, 6)
    assert len(out) == 6
    petals = hh.Hypergraph(
        3, tuple(range(1, 10)), tuple(sorted((1, 2 * i, 2 * i + 1) for i in range(1, 5)))
    )
    out = hh.extract_sunflower(petals, 1, 2)
    for e, f in itertools.combinations(out, 2):
        assert set(e) & set(f) == {1}
    with pytest.raises(PreconditionError, match="piercing number"):
        hh.extract_sunflower(petals, 1, 3)
    lonely = hh.Hypergraph(3, (1, 2, 3, 4), ((2, 3, 4),))
    with pytest.raises(PreconditionError):
        hh.extract_sunflower(lonely, 1, 1)


def test_sunflower_random_instances():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randint(5, 12)
        all_edges = [e for e in itertools.combinations(range(1, n + 1), 3) if 1 in e]
        edges = tuple(sorted(rng.sample(all_edges, rng.randint(1, len(all_edges)))))
        h = hh.Hypergraph(3, tuple(range(1, n + 1)), edges)
        tau = hh.piercing_number(h, 1).value
        m = tau // 2
        if m < 1:
            continue
        out = hh.extract_sunflower(h, 1, m)
        assert len(out) == m
        for e, f in itertools.combinations(out, 2):
            assert set(e) & set(f) == {1}


# --- lifting --------------------------------------------------------------------

def test_lift_colour_is_exact_union_when_spread():
    base = su.random_colouring(2, 8, 8, seed=1)
    lifted = hh.lift_colouring(base, 3)
    for e in itertools.combinations(range(1, 9), 3):
        got = {base.colour(f) for f in itertools.combinations(e, 2)}
        col = lifted.colour(e)
        assert col[0] == "set" and len(col[1]) == 3
        if len(got) == 3:
            assert set(col[1]) == got
        else:
            assert got <= set(col[1])


def test_lift_budget_and_padding():
    base = su.random_colouring(2, 8, 4, seed=3)
    lifted = hh.lift_colouring(base, 3)
    cols = {lifted.colour(e) for e in itertools.combinations(range(1, 9), 3)}
    assert len(cols) <= math.comb(4, 3)
    mono = su.TabulatedColouring(
        2,
        8,
        {e: ("base", 1) for e in itertools.combinations(range(1, 9), 2)},
        [("base", i) for i in range(1, 5)],
    )
    ml = hh.lift_colouring(mono, 3)
    cs = {ml.colour(e) for e in itertools.combinations(range(1, 9), 3)}
    # deterministic padding gives a single set colour
    assert cs == {("set", (("base", 1), ("base", 2), ("base", 3)))}
    tiny = su.random_colouring(2, 8, 2, seed=0)
    with pytest.raises(ParameterError):
        hh.lift_colouring(tiny, 3)


def test_spread_certification():
    got = rb.search_random_rainbow(2, 10, 16, 4, 4, max_attempts=50, seed=2024)
    assert got is not None
    base, rep, _ = got
    lifted = hh.lift_colouring(base, 3)
    spread = hh.verify_hedgehog_spread(lifted, 4, 1, embeddings=300, seed=5)
    assert spread.passed
    assert spread.bodies_checked == 210
    assert spread.min_base_span >= 4
    assert spread.min_lifted_span >= 2
    # an unverified base is rejected
    weak = su.random_colouring(2, 10, 2, seed=0)
    with pytest.raises((PreconditionError, ParameterError)):
        hh.verify_hedgehog_spread(hh.lift_colouring(weak, 3), 4, 1)


def test_spread_vacuous_when_body_below_uniformity():
    base = su.random_colouring(2, 10, 16, seed=2032)
    lifted = hh.lift_colouring(base, 3)
    rep = rb.RainbowReport(passed=True, t=1, p=4, coverage="exhaustive")
    spread = hh.verify_hedgehog_spread(lifted, 1, 1, base_report=rep)
    assert spread.bodies_checked == 0 and spread.passed


# --- monochromatic copies ----------------------------------------------------------

def part_colouring(n, parts):
    size = n // parts
    table = {}
    for e in itertools.combinations(range(1, n + 1), 3):
        ps = {(v - 1) // size for v in e}
        table[e] = ("base", 1) if len(ps) == 2 else ("base", 2)
    return su.TabulatedColouring(3, n, table, [("base", 1), ("base", 2)])


def test_find_mono_on_random_colourings():
    for seed in range(5):
        c = su.random_colouring(3, 81, 2, seed=seed)
        emb = hh.find_mono_hedgehog(c, 3)
        assert hh.validate_embedding(emb, c, 3)


def test_find_mono_on_adversarial_colourings():
    n = 81
    const1 = su.TabulatedColouring(
        3, n, {e: ("base", 1) for e in itertools.combinations(range(1, n + 1), 3)},
        [("base", 1), ("base", 2)],
    )
    const2 = su.TabulatedColouring(
        3, n, {e: ("base", 2) for e in itertools.combinations(range(1, n + 1), 3)},
        [("base", 1), ("base", 2)],
    )
    for c, want in ((const1, ("base", 1)), (const2, ("base", 2))):
        emb = hh.find_mono_hedgehog(c, 3)
        assert emb.colour == want
        assert hh.validate_embedding(emb, c, 3)
    emb = hh.find_mono_hedgehog(part_colouring(n, 3), 3)
    assert hh.validate_embedding(emb, part_colouring(n, 3), 3)


def test_find_mono_guards():
    with pytest.raises(ParameterError):
        hh.find_mono_hedgehog(su.random_colouring(3, 5, 2, seed=0), 3)
    with pytest.raises(ParameterError):
        hh.find_mono_hedgehog(su.random_colouring(2, 30, 2, seed=0), 3)
    with pytest.raises(ParameterError):
        hh.find_mono_hedgehog(su.random_colouring(3, 81, 3, seed=0), 3)


def test_find_mono_bigger_body():
    # t=4 needs 4 + C(4,2) = 10 vertices and thresholds 16/32
    c = su.random_colouring(3, 100, 2, seed=2)
    emb = hh.find_mono_hedgehog(c, 4)
    assert hh.validate_embedding(emb, c, 4)


# --- the two-part host ---------------------------------------------------------------

def test_burr_erdos_structure():
    h, host = hh.burr_erdos_pair(4)
    assert len(h.vertices) == 4 + 6 + 1
    assert host.num_vertices == 8 and host.num_parts == 1
    h8, host8 = hh.burr_erdos_pair(8)
    assert len(h8.vertices) == 37
    assert host8.num_vertices == 64
    assert host8.num_parts == 2 and host8.part_size == 32
    with pytest.raises(ParameterError):
        hh.burr_erdos_pair(6)


def test_burr_erdos_degeneracy():
    for n in (4, 8, 12):
        h, _ = hh.burr_erdos_pair(n)
        assert hh.degeneracy(h) <= 8, n


def test_burr_erdos_spine_order_peel_stays_at_most_8():
    for n in (4, 8):
        h, _ = hh.burr_erdos_pair(n)
        base = list(range(1, n + 1))
        spine = [v for v in h.vertices if v > n]
        out = hh.peel_incidences(h, spine + base)
        assert all(inc <= 8 for _, inc in out)


def test_host_rules():
    _, host = hh.burr_erdos_pair(8)
    # exactly-two-in-a-part is red, always
    for tri in [(1, 2, 33), (1, 33, 34), (31, 32, 64)]:
        parts = [host.part_of(v) for v in tri]
        assert len(set(parts)) == 2
        assert host.colour(tri) == hh.RED
    # inside a part, or spread over three parts, is blue
    assert host.colour((1, 2, 3)) == hh.BLUE
    _, host12 = hh.burr_erdos_pair(12)
    tri = (1, host12.part_size + 1, 2 * host12.part_size + 1)
    assert host12.colour(tri) == hh.BLUE


def test_no_blue_triple_has_exactly_two_in_one_part():
    _, host = hh.burr_erdos_pair(8)
    for tri in itertools.combinations(range(1, 65), 3):
        parts = [host.part_of(v) for v in tri]
        if len(set(parts)) == 2:
            assert host.colour(tri) == hh.RED
        else:
            assert host.colour(tri) == hh.BLUE


def test_hypergraph_file_roundtrip():
    h, _ = hh.burr_erdos_pair(4)
    text = hh.format_hypergraph(h)
    back = hh.parse_hypergraph(text)
    assert back.edges == h.edges and back.r == 3
