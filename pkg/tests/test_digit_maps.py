import pytest

from seqforge import digit_maps as dm
from seqforge.arith import is_prime, repunit
from seqforge.digit_maps import ClimbStatus, MapKind

F_PREFIX = [1, 2, 3, 211, 5, 23, 7, 23, 2213, 2213, 11, 223, 13, 311, 1129, 233, 17, 17137, 19]

HOME_PRIME_OF_8 = 3331113965338635107


def test_factor_concat_base_10():
    assert [dm.f_factor_concat(n) for n in range(2, 17)] == \
        [2, 3, 22, 5, 23, 7, 23, 32, 25, 11, 223, 13, 27, 35, 24]
    with pytest.raises(ValueError):
        dm.f_factor_concat(1)


def test_factor_concat_base_2():
    assert [dm.f_factor_concat(n, 2) for n in range(2, 13)] == [2, 3, 10, 5, 11, 7, 11, 14, 21, 11, 43]


def test_climb_prefix():
    terms = dm.climb_sequence(MapKind.FACTOR_CONCAT_B10, 19)
    assert [t.value for t in terms] == F_PREFIX
    assert [t.index for t in terms] == list(range(1, 20))


def test_climb_from_nine():
    outcome = dm.climb(9)
    assert outcome.status is ClimbStatus.REACHED_PRIME
    assert outcome.trajectory == [9, 32, 25, 52, 2213]
    assert str(outcome) == 'prime 2213 after 4 steps'


def test_climb_from_twenty_is_unresolved():
    outcome = dm.climb(20, max_steps=10)
    assert outcome.status is ClimbStatus.UNRESOLVED
    assert outcome.steps == 10
    assert outcome.terminal == 1153139393
    assert not outcome.never_prime
    assert 'unresolved after 10 steps' in str(outcome)


def test_digit_cap_stops_climb():
    outcome = dm.climb(20, digit_cap=5)
    assert outcome.status is ClimbStatus.UNRESOLVED
    assert len(str(outcome.terminal)) > 5


def test_composite_fixed_point():
    assert dm.f_factor_concat(dm.D0) == dm.D0
    outcome = dm.climb(dm.D0)
    assert outcome.status is ClimbStatus.FIXED_COMPOSITE
    assert outcome.steps == 0
    assert outcome.never_prime


def test_davis_search_finds_fixed_point():
    found = dm.davis_fixed_point_search(1500, 5)
    assert dm.D0 in found
    assert all(dm.f_factor_concat(n) == n for n in found)


def test_base_2_cycles():
    outcome = dm.climb(217, MapKind.FACTOR_CONCAT_B2)
    assert outcome.status is ClimbStatus.CYCLE
    assert outcome.terminal == 1007
    assert outcome.cycle_len == 2
    assert dm.climb(446, MapKind.FACTOR_CONCAT_B2).terminal == 1503


def test_base_2_fixed_point_and_cycles_directly():
    assert dm.f_factor_concat(255987, 2) == 255987
    fixed = dm.climb(255987, MapKind.FACTOR_CONCAT_B2)
    assert fixed.status is ClimbStatus.FIXED_COMPOSITE
    assert fixed.steps == 0
    for start in (1007, 1503):
        outcome = dm.climb(start, MapKind.FACTOR_CONCAT_B2)
        assert outcome.status is ClimbStatus.CYCLE
        assert outcome.cycle_len == 2


def test_never_prime_starts_base_2():
    assert dm.never_prime_starts(MapKind.FACTOR_CONCAT_B2, 560) == [217, 255, 446, 558]


def test_home_prime_of_eight():
    outcome = dm.home_prime(8)
    assert outcome.status is ClimbStatus.REACHED_PRIME
    assert outcome.terminal == HOME_PRIME_OF_8
    assert outcome.steps == 13
    chain = dm.home_prime_chain(8)
    assert len(chain) - 1 == 14
    assert chain[0] == [8] and chain[1] == [2, 2, 2] and chain[-1] == [HOME_PRIME_OF_8]


def test_home_prime_trajectory_of_49():
    assert dm.home_prime_trajectory(49, 6) == [49, 77, 711, 3379, 31109, 132393, 344131]


def test_home_prime_step():
    assert dm.home_prime_step(8) == 222
    assert dm.home_prime_step(2337) == 31941


def test_power_train():
    assert [dm.power_train(n) for n in range(0, 26)] == \
        [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 4, 8, 16, 32]
    assert dm.power_train_factored(2592) == [(2, 5), (9, 2)]
    assert dm.power_train_factored(123) == [(1, 2), (3, None)]


def test_power_train_fixed_points():
    assert dm.power_train_fixed_points(10 ** 4) == [1, 2, 3, 4, 5, 6, 7, 8, 9, 2592]
    big = dm.POWER_TRAIN_LARGE_FIXED_POINT
    assert dm.power_train(big) == big
    assert dm.climb(2592, MapKind.POWER_TRAIN).status is ClimbStatus.FIXED_COMPOSITE
    assert dm.climb(7, MapKind.POWER_TRAIN).status is ClimbStatus.FIXED_POINT


def test_prime_power_preimages():
    assert dm.prime_power_preimages(2213) == [(2, 213)]
    assert dm.prime_power_preimages(37) == [(3, 7)]
    assert dm.prime_power_preimages(101) == []


def test_memorable_numbers():
    assert dm.memorable_concat(1) == 1
    assert dm.memorable_concat(3) == 12321
    for n in range(1, 10):
        assert dm.memorable_concat(n) == repunit(n) ** 2
    assert is_prime(dm.memorable_concat(10))
    assert dm.smarandache(12) == 123456789101112


def test_memorable_prime_search():
    report = dm.search_first_prime('memorable', range(1, 12))
    assert report.primes == [10]
    assert report.excluded[3] == 3
    assert report.excluded[2] == 11
    assert set(report.excluded) | set(report.tested) == set(range(1, 12))


def test_smarandache_search_has_no_primes():
    report = dm.search_first_prime('smarandache', range(1, 40))
    assert report.primes == []
    assert report.excluded[2] == 3
    assert report.excluded[4] == 2


def test_parallel_outcomes_match_serial():
    serial = dm.climb_outcomes(MapKind.HOME_PRIME, 30)
    parallel = dm.climb_outcomes(MapKind.HOME_PRIME, 30, threads=4)
    assert [o.terminal for o in serial.values()] == [o.terminal for o in parallel.values()]


@pytest.mark.slow
def test_smarandache_scan_to_a_thousand():
    report = dm.search_first_prime('smarandache', range(1, 1001), threads=4)
    assert report.primes == []
    assert set(report.excluded) | set(report.tested) == set(range(1, 1001))
