import random

import pytest
from hypothesis import given, settings

from arlab.colorings import (
    EdgeColoring,
    all_rainbow,
    coloring_clique_plus_C,
    coloring_k2_star,
    coloring_lower_friendship,
    coloring_two_cliques,
    monochromatic,
    normalize,
)
from arlab.errors import InvalidParameter
from arlab.rainbow_search import (
    Pattern,
    RainbowEmbedding,
    find_rainbow,
    find_rainbow_friendship,
    find_rainbow_in_family,
    find_rainbow_matching,
    find_rainbow_star,
    parse_pattern,
    parse_targets,
    verify_embedding,
)
from naive import naive_rainbow
from test_colorings import colorings


def random_coloring(rng, n):
    m = n * (n - 1) // 2
    r = rng.randint(1, m)
    return normalize([rng.randint(1, r) for _ in range(m)], n)


def test_pattern_parsing():
    assert parse_pattern("K1,4") == Pattern("star", 4)
    assert parse_pattern("K_{1,3}") == Pattern("star", 3)
    assert parse_pattern("4K2") == Pattern("matching", 4)
    assert parse_pattern("F3") == Pattern("friendship", 3)
    assert parse_pattern("K3") == Pattern("friendship", 1)
    assert parse_targets("K1,4;4K2") == [Pattern("star", 4), Pattern("matching", 4)]
    assert str(Pattern("matching", 3)) == "3K2"
    for bad in ("K4", "", "F0", "xyz"):
        with pytest.raises(InvalidParameter):
            parse_pattern(bad)


def test_star_examples():
    assert find_rainbow_star(all_rainbow(5), 4) is not None
    assert find_rainbow_star(monochromatic(9), 2) is None
    assert find_rainbow_star(coloring_k2_star(12), 3) is None
    with pytest.raises(InvalidParameter):
        find_rainbow_star(all_rainbow(3), 0)


def test_matching_examples():
    assert find_rainbow_matching(all_rainbow(4), 2) is not None
    assert find_rainbow_matching(coloring_two_cliques(27, 3), 4) is None
    assert find_rainbow_matching(coloring_clique_plus_C(48, 4), 5) is None
    assert find_rainbow_matching(all_rainbow(5), 3) is None


def test_friendship_examples():
    assert find_rainbow_friendship(all_rainbow(7), 3) is not None
    assert find_rainbow_friendship(coloring_lower_friendship(20, 2), 3) is None
    rng = random.Random(0)
    for _ in range(20):
        assert find_rainbow_friendship(random_coloring(rng, 4), 2) is None


def test_family_examples():
    assert find_rainbow_in_family(coloring_k2_star(12), ["K1,3", "3K2"]) is None
    two = EdgeColoring(3, (1, 1, 2))
    assert find_rainbow_in_family(two, ["K1,2"]) is not None
    emb = find_rainbow_in_family(all_rainbow(5), ["F2"])
    assert emb.pattern == "friendship" and len(emb.edges) == 6
    # stars are tried before matchings
    assert find_rainbow_in_family(all_rainbow(6), ["2K2", "K1,2"]).pattern == "star"


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_lower_bound_certificates_star_matching(k):
    n = 3 * k * k
    if k == 2:
        c = coloring_k2_star(n)
    elif k % 2:
        c = coloring_two_cliques(n, k)
    else:
        c = coloring_clique_plus_C(n, k)
    assert find_rainbow_in_family(c, [Pattern("star", k + 1), Pattern("matching", k + 1)]) is None
    # the bound is tight in the sense that size k is still present
    assert find_rainbow_matching(c, k) is not None


@pytest.mark.parametrize("n", [10, 20, 30])
@pytest.mark.parametrize("k", [1, 2])
def test_lower_bound_certificates_friendship(n, k):
    c = coloring_lower_friendship(n, k)
    assert find_rainbow_friendship(c, k + 1) is None
    assert find_rainbow_friendship(c, k) is not None


def test_agreement_with_naive_oracle():
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(2, 8)
        c = random_coloring(rng, n)
        for kind, sizes in (("star", range(1, 5)), ("matching", range(1, 5)), ("friendship", range(1, 4))):
            for s in sizes:
                emb = find_rainbow(c, Pattern(kind, s))
                assert (emb is not None) == naive_rainbow(c, kind, s), (c, kind, s)
                if emb is not None:
                    assert verify_embedding(c, emb)


@given(colorings(8))
@settings(max_examples=200, deadline=None)
def test_monotone_in_size(c):
    for kind in ("star", "matching", "friendship"):
        found = [find_rainbow(c, Pattern(kind, s)) is not None for s in range(1, 5)]
        assert found == sorted(found, reverse=True)


@given(colorings(8))
@settings(max_examples=200, deadline=None)
def test_refinement_keeps_embeddings(c):
    rng = random.Random(repr(c.colors))
    target = rng.randint(1, c.r)
    split = normalize([(col, rng.random() < 0.5) if col == target else (col, False) for col in c.colors], c.n)
    for kind in ("star", "matching", "friendship"):
        for s in (1, 2, 3):
            emb = find_rainbow(c, Pattern(kind, s))
            if emb is not None:
                moved = RainbowEmbedding(emb.pattern, emb.size, emb.center, emb.edges,
                                         tuple(split.color(u, v) for u, v in emb.edges))
                assert verify_embedding(split, moved)
                assert find_rainbow(split, Pattern(kind, s)) is not None


def test_verify_rejects_tampering():
    c = all_rainbow(6)
    emb = find_rainbow_matching(c, 2)
    assert verify_embedding(c, emb)
    bad = RainbowEmbedding("matching", 2, None, ((0, 1), (1, 2)), (c.color(0, 1), c.color(1, 2)))
    assert not verify_embedding(c, bad)
    wrong_colors = RainbowEmbedding("matching", 2, None, emb.edges, (1, 1))
    assert not verify_embedding(c, wrong_colors)
    mono = monochromatic(6)
    fake = RainbowEmbedding("star", 2, 0, ((0, 1), (0, 2)), (1, 1))
    assert not verify_embedding(mono, fake)


def test_embedding_json():
    emb = find_rainbow_friendship(all_rainbow(5), 2)
    d = emb.to_dict()
    assert d["pattern"] == "friendship" and d["center"] == emb.center and len(d["colors"]) == 6
