import itertools

import pytest

from mahjong0.melds import (
    MeldKind,
    classify,
    family_profiles,
    family_score,
    is_worst_pure_k_tile,
    max_disjoint_melds,
    max_disjoint_pmelds,
)
from mahjong0.tiles import Tile


def B(*nums):
    return [Tile(0, n) for n in nums]


@pytest.mark.parametrize("tiles,kind", [
    (B(3, 4, 5), MeldKind.CHOW),
    ([Tile(2, 9)] * 4, MeldKind.KONG),
    (B(7, 7, 7), MeldKind.PONG),
    (B(1, 3), MeldKind.PCHOW),
    (B(2, 3), MeldKind.PCHOW),
    ([Tile(1, 1), Tile(1, 1)], MeldKind.PAIR),
])
def test_classify_kinds(tiles, kind):
    assert classify(tiles) == kind


@pytest.mark.parametrize("tiles", [
    [Tile(0, 1), Tile(1, 1)],            # mixed colours
    B(1, 4),                             # gap too wide
    B(1, 2, 4),                          # not consecutive
    B(1, 1, 2),                          # neither pong nor chow
    [Tile(0, 9)] * 3 + [Tile(0, 8)],     # four tiles, not identical
])
def test_classify_rejects(tiles):
    assert classify(tiles) is None


def test_classify_accepts_unsorted():
    assert classify(B(5, 3, 4)) == MeldKind.CHOW


def all_multisets(k, lo=1, hi=9, cap=4):
    for combo in itertools.combinations_with_replacement(range(lo, hi + 1), k):
        if all(combo.count(v) <= cap for v in set(combo)):
            yield combo


def test_max_disjoint_melds_examples():
    count, family = max_disjoint_melds((1, 1, 1, 2, 3, 4, 5, 6, 7, 8, 8, 9, 9, 9))
    assert count == 4
    check_family((1, 1, 1, 2, 3, 4, 5, 6, 7, 8, 8, 9, 9, 9), family)
    assert max_disjoint_melds((1, 2, 4, 8))[0] == 0
    assert max_disjoint_melds((1, 1, 2, 2, 5, 5, 6, 6, 8, 8, 8, 8, 9, 9))[0] == 1


def test_max_disjoint_pmelds_examples():
    assert max_disjoint_pmelds((1, 2, 4, 8))[0] == 1
    assert max_disjoint_pmelds((1, 1, 1, 1, 5, 8))[0] == 1  # identical pairs compete
    assert max_disjoint_pmelds((1, 1, 5, 5, 8, 8))[0] == 3


def check_family(seq, family):
    used = set()
    pair_kinds = set()
    for kind, indices in family:
        assert list(indices) == sorted(indices)
        assert len(set(indices)) == len(indices)
        assert not (set(indices) & used)
        used |= set(indices)
        values = tuple(seq[i] for i in indices)
        got = classify([Tile(0, v) for v in values])
        assert got in (MeldKind.CHOW, MeldKind.PONG, MeldKind.PAIR, MeldKind.PCHOW)
        if got == MeldKind.PAIR:
            assert values[0] not in pair_kinds
            pair_kinds.add(values[0])


def test_witness_families_are_valid(rng):
    for _ in range(200):
        k = rng.randint(2, 14)
        seq = tuple(sorted(rng.choices(range(1, 10), k=k)))
        if any(seq.count(v) > 4 for v in set(seq)):
            continue
        n_melds, fam = max_disjoint_melds(seq)
        check_family(seq, fam)
        assert len(fam) == n_melds
        n_pm, fam = max_disjoint_pmelds(seq)
        check_family(seq, fam)
        assert len(fam) == n_pm
        assert n_melds <= n_pm


def test_lemma_four_tiles_contain_pmeld():
    for seq in all_multisets(4):
        assert max_disjoint_pmelds(seq)[0] >= 1, seq


def test_lemma_six_tiles_no_kong_two_disjoint_pmelds():
    for seq in all_multisets(6):
        if any(seq.count(v) == 4 for v in set(seq)):
            continue
        assert max_disjoint_pmelds(seq)[0] >= 2, seq


def test_lemma_six_distinct_tiles_chow_structure():
    for seq in itertools.combinations(range(1, 10), 6):
        profiles = family_profiles(seq)
        chow_plus_pchow = any(m >= 1 and p >= 1 for m, p in profiles)
        three_pchows = any(m + p >= 3 for m, p in profiles)
        assert chow_plus_pchow or three_pchows, seq


@pytest.mark.parametrize("seq,k,expected", [
    ((1, 4, 7), 3, True),
    ((1, 2, 3), 3, False),
    ((1, 2, 2, 5, 8), 5, True),     # one of the worst suits of the worst hand
    ((1, 1, 2, 5, 8), 5, True),
    ((1, 1, 1, 2, 5), 5, False),    # pong present
    ((2, 5, 8, 9, 9, 9, 9), 7, False),  # pong plus disjoint pchow scores 3
    ((1, 1, 2, 2, 5, 5, 8, 8), 8, False),  # four disjoint pairs
])
def test_worst_k_tiles(seq, k, expected):
    assert is_worst_pure_k_tile(seq, k) is expected


def test_worst_k_rejects_bad_sizes():
    with pytest.raises(ValueError):
        is_worst_pure_k_tile((1, 2), 3)
    with pytest.raises(ValueError):
        is_worst_pure_k_tile((1,) * 9, 9)


def test_family_score_counts_melds_twice():
    assert family_score((9, 9, 9, 9, 8, 7)) >= 2  # a kong holds a pong
    assert family_score((1, 4, 7)) == 0
    assert family_score((1, 1, 2, 3, 4)) >= 3  # chow plus pair
