"""Acceptance suite: one test per criterion, one PASS line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s``.  Two recorded
expected values are provably inconsistent with the census and the
exact recursion; they stay in as strict expected failures whose
reasons carry the full analysis.
"""

import itertools
import json
import random
import time
from fractions import Fraction

import pytest

from mahjong0.decomp import INFINITE, PDecomposition, cost, is_complete
from mahjong0.deficiency import (
    deficiency,
    deficiency_value,
    is_deficiency3_pure,
    is_deficiency6,
)
from mahjong0.melds import is_worst_pure_k_tile, max_disjoint_melds, max_disjoint_pmelds
from mahjong0.oracle import bfs_deficiency, pure_census
from mahjong0.policy import (
    KnowledgeBase,
    delta,
    discard1,
    kb_initial,
    parse_kb,
    val_k,
)
from mahjong0.tiles import Hand14, Tile, parse_hand

from conftest import (
    EQ1,
    EQ2,
    EQ3,
    EQ4,
    EX2_HAND,
    EX3_HAND,
    EX3_KB,
    hand_with_suit_size,
    random_hand,
)


def _announce(name):
    print(f"\nACCEPTANCE PASS: {name}")


# ---------------------------------------------------------------------------
# 1. census reproduction

def test_census_reproduction():
    from mahjong0 import oracle
    oracle._pure_distances.cache_clear()
    oracle._tables.cache_clear()
    t0 = time.time()
    report = pure_census()
    elapsed = time.time() - t0
    assert report.total == 118800
    assert report.by_deficiency == {0: 13259, 1: 91065, 2: 14386, 3: 90}
    assert elapsed < 300, f"census took {elapsed:.1f}s"
    _announce(f"census 118800/13259/91065/14386/90 in {elapsed:.1f}s")


# ---------------------------------------------------------------------------
# 2. oracle equivalence on every pure 14-tile

def test_pure_oracle_equivalence(pure_map):
    mismatches = 0
    for seq, want in pure_map.items():
        counts = [0] * 27
        for v in seq:
            counts[v - 1] += 1
        if deficiency_value(Hand14.from_counts(counts)) != want:
            mismatches += 1
    assert mismatches == 0
    _announce("engine equals reverse BFS on all 118800 pure 14-tiles")


# ---------------------------------------------------------------------------
# 3. oracle equivalence and bounds on hybrid samples

def test_hybrid_bfs_equivalence():
    rng = random.Random(1001)
    agreements = 0
    for _ in range(1000):
        hand = random_hand(rng)
        value = deficiency_value(hand)
        probe = bfs_deficiency(hand, 3)
        if probe is not None:
            assert probe == value, hand
            agreements += 1
        else:
            assert value > 3, hand
    _announce(f"BFS(depth 3) matches the engine on 1000 sampled hands "
              f"({agreements} in range)")


def test_deficiency_bounded_by_six():
    rng = random.Random(1002)
    worst = 0
    for _ in range(100_000):
        value = deficiency_value(random_hand(rng))
        worst = max(worst, value)
        assert value <= 6
    _announce(f"deficiency <= 6 on 100000 sampled hands (max seen {worst})")


def test_nine_tile_suit_bounded_by_five():
    rng = random.Random(1003)
    worst = 0
    for i in range(10_000):
        size = 9 if i % 2 else rng.choice((9, 10, 11, 12, 13))
        value = deficiency_value(hand_with_suit_size(size, rng))
        worst = max(worst, value)
        assert value <= 5
    _announce(f"deficiency <= 5 on 10000 hands holding a 9+ tile suit "
              f"(max seen {worst})")


# ---------------------------------------------------------------------------
# 4. recorded golden values

def test_golden_deficiencies():
    assert deficiency_value(parse_hand(EQ1)) == 0
    assert deficiency_value(parse_hand(EQ2)) == 3
    assert deficiency_value(parse_hand(EQ3)) == 6
    assert deficiency_value(parse_hand(EQ4)) == 2
    _announce("golden deficiencies: Eq1=0, Eq2=3, Eq3=6, Eq4=2")


@pytest.mark.xfail(
    strict=True,
    reason="recorded expectation 3 is inconsistent: 11222344558899 contains "
           "the disjoint melds (222) and (345), so two changes reach "
           "(222)(345)(456)(888)(99); the census counts this hand at "
           "deficiency 2 and forcing 3 would break the exact-90 census "
           "and the BFS equivalence",
)
def test_recorded_deficiency3_expectation():
    assert deficiency_value(parse_hand("11222344558899")) == 3


def test_golden_deficiency3_true_value():
    hand = parse_hand("11222344558899")
    target = parse_hand("22234455688899")
    assert is_complete(target)
    assert sum(min(a, b) for a, b in zip(hand.counts, target.counts)) == 12
    assert deficiency_value(hand) == 2
    _announce("11222344558899 verified at deficiency 2 with an explicit "
              "two-change completion (recorded value 3 is xfail-documented)")


def test_golden_costs():
    T = parse_hand(EQ4)
    pd0 = PDecomposition.of("B1B2B3", "B2B2B2", "B1B3", "D2D2", "D8")
    pd1 = PDecomposition.of("B1B2B3", "B1B2B3", "B2", "D2D2", "D8")
    pd2 = PDecomposition.of("B1B2B3", "B1B2B3", "C1C2", "D2D2", "B2B2")
    assert cost(T, pd0) == INFINITE
    assert cost(T, pd1) == 4
    assert cost(T, pd2) == 2
    _announce("worked p-decomposition costs: infinite, 4, 2")


def test_golden_delta_vector():
    hand = parse_hand(EX2_HAND)
    kb = parse_kb("1" * 27)
    assert delta(hand, kb) == [0, 0, 0, 3, 3, 7, 6, 0, 0, 0, 6, 0, 0, 0]
    report = discard1(hand, kb)
    assert str(report.entries[report.recommended_index][0]) == "B9"
    _announce("improvement vector [0,0,0,3,3,7,6,0,0,0,6,0,0,0], discard B9")


def test_golden_horizon2_values():
    hand = parse_hand(EX3_HAND)
    kb = parse_kb(EX3_KB)
    idx = {str(t): i for i, t in enumerate(hand.tiles)}
    assert val_k(hand, kb, idx["D5"], 2) == Fraction(1, 2)
    assert val_k(hand, kb, idx["D9"], 2) == Fraction(7, 12)
    from mahjong0.policy import discard_k
    report = discard_k(hand, kb, 2)
    assert str(report.entries[report.recommended_index][0]) == "D9"
    _announce("horizon-2 values 1/2 and 7/12 exact, recommendation D9")


@pytest.mark.xfail(
    strict=True,
    reason="recorded expectation 1/3 misses a line: after discarding D1 "
           "and drawing D2 the swap D9->D4 completes (D3D4D5)+(D2D2), so "
           "the exact chance is 5/12",
)
def test_recorded_horizon2_d1_expectation():
    hand = parse_hand(EX3_HAND)
    kb = parse_kb(EX3_KB)
    idx = {str(t): i for i, t in enumerate(hand.tiles)}
    assert val_k(hand, kb, idx["D1"], 2) == Fraction(1, 3)


def test_golden_horizon2_d1_true_value():
    hand = parse_hand(EX3_HAND)
    kb = parse_kb(EX3_KB)
    idx = {str(t): i for i, t in enumerate(hand.tiles)}
    assert val_k(hand, kb, idx["D1"], 2) == Fraction(5, 12)
    _announce("D1 horizon-2 value verified at 5/12 (recorded 1/3 is "
              "xfail-documented); recommendation unaffected")


# ---------------------------------------------------------------------------
# 5. structural characterizations

def test_deficiency3_characterization(pure_map):
    predicted = 0
    for seq, want in pure_map.items():
        got = is_deficiency3_pure(seq)
        assert got == (want == 3), seq
        predicted += got
    assert predicted == 90
    _announce("deficiency-3 characterization exact on all pure hands (90)")


def _all_multisets(k):
    out = []

    def rec(v, left, acc):
        if left == 0:
            out.append(tuple(acc))
            return
        if v > 9:
            return
        for take in range(min(4, left), -1, -1):
            rec(v + 1, left - take, acc + [v] * take)

    rec(1, k, [])
    return out


def test_deficiency6_characterization():
    rng = random.Random(1005)
    pools = {k: _all_multisets(k) for k in range(2, 9)}
    worst = {k: [s for s in pools[k] if is_worst_pure_k_tile(s, k)]
             for k in range(2, 9)}
    shapes = [(8, 3, 3), (7, 5, 2), (7, 4, 3), (6, 5, 3), (5, 5, 4)]
    checked = 0
    for shape in shapes:
        hits = 0
        for _ in range(400):
            seqs = [rng.choice(worst[k] if rng.random() < 0.5 else pools[k])
                    for k in shape]
            tiles = [Tile(c, v) for c, seq in enumerate(seqs) for v in seq]
            hand = Hand14.of(tiles)
            want = deficiency_value(hand) == 6
            assert is_deficiency6(hand) == want, hand
            hits += want
            checked += 1
        assert hits > 0, f"no worst hands sampled for shape {shape}"
    for _ in range(10_000):
        hand = random_hand(rng)
        assert is_deficiency6(hand) == (deficiency_value(hand) == 6), hand
        checked += 1
    _announce(f"deficiency-6 characterization holds on {checked} hands "
              "(all shapes plus random)")


# ---------------------------------------------------------------------------
# 6. lemma suites

def test_lemma_four_tiles():
    for seq in _all_multisets(4):
        assert max_disjoint_pmelds(seq)[0] >= 1, seq
    _announce("every four same-suit tiles contain a pmeld (495 multisets)")


def test_lemma_six_tiles():
    checked = 0
    for seq in _all_multisets(6):
        if any(seq.count(v) == 4 for v in set(seq)):
            continue
        assert max_disjoint_pmelds(seq)[0] >= 2, seq
        checked += 1
    from mahjong0.melds import family_profiles
    for seq in itertools.combinations(range(1, 10), 6):
        profiles = family_profiles(seq)
        assert any(m >= 1 and p >= 1 for m, p in profiles) or \
            any(m + p >= 3 for m, p in profiles), seq
    _announce(f"six-tile pmeld lemma exhaustive ({checked} kong-free "
              "multisets plus 84 distinct-tile cases)")


def test_two_disjoint_melds_bound_pure(pure_map):
    for seq, want in pure_map.items():
        if want <= 2:
            continue
        # contrapositive on the full pure space: worse than two changes
        # forces fewer than two disjoint melds
        assert max_disjoint_melds(seq)[0] <= 1, seq
    _announce("two disjoint melds force deficiency <= 2, exhaustive on all "
              "118800 pure hands")


def _hybrid_meld_count(hand):
    per_suit = [[t.number for t in hand.tiles if t.colour == c] for c in range(3)]
    return sum(max_disjoint_melds(tuple(seq))[0] for seq in per_suit if seq)


@pytest.mark.xfail(
    strict=True,
    reason="the two-melds bound is a pure-hand theorem: its proof leans on "
           "any four same-suit leftovers holding a pmeld, which mixed "
           "leftovers need not; (B2B2B2B3B5B8)(C2C3C4C4C6C6C7)(D9) holds "
           "disjoint melds B222 and C234 yet needs three changes "
           "(BFS-verified), and spreading leftovers thinner reaches four",
)
def test_two_disjoint_melds_bound_hybrid_sample():
    rng = random.Random(1006)
    for _ in range(10_000):
        hand = random_hand(rng)
        if _hybrid_meld_count(hand) >= 2:
            assert deficiency_value(hand) <= 2, hand


def test_two_disjoint_melds_hybrid_true_bound():
    # what two disjoint melds do buy on any hand: the other two slots and
    # the eye can always be seeded, so five changes suffice
    rng = random.Random(1006)
    hits = 0
    for _ in range(10_000):
        hand = random_hand(rng)
        if _hybrid_meld_count(hand) >= 2:
            hits += 1
            assert deficiency_value(hand) <= 5, hand
    counter = parse_hand("B2B2B2B3B5B8C2C3C4C4C6C6C7D9")
    assert _hybrid_meld_count(counter) == 2
    assert deficiency_value(counter) == 3
    assert hits > 100
    _announce(f"two disjoint melds bound hybrids at <= 5 ({hits} hits; the "
              "<= 2 claim holds only for pure hands, see xfail)")


# ---------------------------------------------------------------------------
# 7. policy identities

@pytest.mark.xfail(
    strict=True,
    reason="the identity val_1 = delta/norm needs every deficiency-lowering "
           "draw to finish the hand, i.e. deficiency 1; the heuristic example "
           "hand itself (deficiency 2) has delta[5]=7 while no single draw "
           "completes it",
)
def test_val1_identity_unrestricted():
    hand = parse_hand(EX2_HAND)
    kb = parse_kb("1" * 27)
    d = delta(hand, kb)
    assert all(val_k(hand, kb, i, 1) == Fraction(d[i], kb.norm) for i in range(14))


def test_val1_identity_on_valid_domain():
    rng = random.Random(1007)
    from mahjong0.tiles import neighbours
    checked = 0
    while checked < 100:
        hand = random_hand(rng)
        value = deficiency_value(hand)
        if value == 2:
            hand = next((nb for nb in neighbours(hand)
                         if deficiency_value(nb) == 1), None)
            if hand is None:
                continue
        elif value != 1:
            continue
        counts = [0] * 27
        for _ in range(rng.randint(1, 8)):
            counts[rng.randrange(27)] += 1
        kb = KnowledgeBase(tuple(min(4, c) for c in counts))
        if kb.norm == 0:
            continue
        d = delta(hand, kb)
        for i in range(14):
            assert val_k(hand, kb, i, 1) == Fraction(d[i], kb.norm)
        checked += 1
    _announce("val_1 equals delta/norm on 100 deficiency-1 instances "
              "(the identity's domain; see xfail for the general claim)")


def test_horizon_monotonicity():
    rng = random.Random(1008)
    checked = 0
    while checked < 100:
        hand = random_hand(rng)
        if deficiency_value(hand) == 0:
            continue
        counts = [0] * 27
        for _ in range(rng.randint(1, 8)):
            counts[rng.randrange(27)] += 1
        kb = KnowledgeBase(tuple(min(4, c) for c in counts))
        if kb.norm == 0:
            continue
        for i in range(14):
            if i and hand.tiles[i] == hand.tiles[i - 1]:
                continue
            v1 = val_k(hand, kb, i, 1)
            v2 = val_k(hand, kb, i, 2)
            v3 = val_k(hand, kb, i, 3)
            assert v1 <= v2 <= v3, (hand, i)
        checked += 1
    _announce("val horizon monotonicity v1<=v2<=v3 on 100 instances, exact")


# ---------------------------------------------------------------------------
# 8. CLI and service agree field for field

def test_cli_service_contract(capsys):
    from fastapi.testclient import TestClient
    from mahjong0.cli import main
    from mahjong0.service import create_app

    client = TestClient(create_app())
    rng = random.Random(1009)

    def cli_json(*argv):
        with pytest.raises(SystemExit) as info:
            main(list(argv))
        out, _ = capsys.readouterr()
        assert info.value.code == 0
        return json.loads(out)

    compared = 0
    for _ in range(35):
        hand = random_hand(rng)
        text = "".join(str(t) for t in hand.tiles)
        via_cli = cli_json("analyze", text, "--format", "json")
        via_http = client.post("/analyze", json={"hand": text}).json()
        assert via_cli == via_http
        compared += 1
    while compared < 50:
        hand = random_hand(rng)
        if deficiency_value(hand) == 0:
            continue
        counts = [0] * 27
        for _ in range(rng.randint(1, 6)):
            counts[rng.randrange(27)] += 1
        kb = KnowledgeBase(tuple(min(4, c) for c in counts))
        if kb.norm == 0:
            continue
        kb_text = "".join(str(n) for n in kb.counts)
        k = rng.choice((1, 2))
        text = "".join(str(t) for t in hand.tiles)
        via_cli = cli_json("advise", text, "--kb", kb_text,
                           "--depth", str(k), "--format", "json")
        via_http = client.post(
            "/advise", json={"hand": text, "kb": kb_text, "k": k}).json()
        assert via_cli == via_http
        compared += 1
    _announce(f"CLI json and service responses identical on {compared} inputs")
