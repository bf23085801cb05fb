from hatlab.rng import chance, coin, randrange, u64


def test_u64_deterministic_and_key_sensitive():
    assert u64(5, 1, 2) == u64(5, 1, 2)
    assert u64(5, 1, 2) != u64(5, 2, 1)
    assert u64(5, 1, 2) != u64(6, 1, 2)
    assert u64(5, 1) != u64(5, 1, 0)


def test_u64_range():
    for i in range(100):
        assert 0 <= u64(9, i) < 1 << 64


def test_coin_roughly_fair():
    heads = sum(coin(123, i) for i in range(20_000))
    assert abs(heads - 10_000) < 500  # ~7 sigma


def test_chance_extremes():
    assert not any(chance(0.0, 7, i) for i in range(50))
    assert all(chance(1.0, 7, i) for i in range(50))


def test_chance_rate():
    hits = sum(chance(0.25, 99, i) for i in range(20_000))
    assert abs(hits - 5_000) < 450


def test_randrange_bounds_and_coverage():
    seen = {randrange(7, 11, i) for i in range(200)}
    assert seen == set(range(7))


def test_randrange_rejects_empty():
    import pytest

    with pytest.raises(ValueError):
        randrange(0, 1)
