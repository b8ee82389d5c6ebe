import math

import numpy as np

from sandbubbler.rng import Rng, child_seed


def test_same_seed_same_stream():
    a, b = Rng(42), Rng(42)
    assert [a.normal() for _ in range(50)] == [b.normal() for _ in range(50)]
    assert [a.integer(3, 9) for _ in range(50)] == [b.integer(3, 9) for _ in range(50)]


def test_normal_sample_statistics():
    rng = Rng(7)
    mu, sd, n = 1.5, 0.4, 20_000
    x = np.array([rng.normal(mu, sd) for _ in range(n)])
    assert abs(x.mean() - mu) < 3 * sd / math.sqrt(n)
    # standard error of the sample std is about sd / sqrt(2n)
    assert abs(x.std(ddof=1) - sd) < 3 * sd / math.sqrt(2 * n)


def test_integer_bounds_inclusive():
    rng = Rng(1)
    seen = {rng.integer(2, 4) for _ in range(500)}
    assert seen == {2, 3, 4}


def test_sample_distinct_and_sized():
    rng = Rng(3)
    for n, k in [(10, 0), (10, 10), (1000, 7)]:
        s = rng.sample(n, k)
        assert len(s) == k == len(set(s))
        assert all(0 <= i < n for i in s)


def test_child_seeds_distinct():
    seeds = {child_seed(5, i, j) for i in range(21) for j in range(100)}
    assert len(seeds) == 21 * 100
    assert child_seed(5, 1, 2) == child_seed(5, 1, 2)
