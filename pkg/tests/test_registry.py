import os
import shutil

import pytest

from seqforge import registry
from seqforge.exceptions import UnknownSequence


def values(a_number, n, patches=None):
    return [t.value for t in registry.get_stream(a_number, patches).take(n)]


def test_ekg_and_nim_prefixes():
    assert values('A064413', 10) == [1, 2, 4, 6, 3, 9, 12, 8, 10, 5]
    stream = registry.get_stream('A003987')
    assert [t.index for t in stream.take(3)] == [0, 1, 2]
    assert values('A003987', 10) == [0, 1, 1, 2, 0, 2, 3, 3, 3, 3]


def test_antidiagonal_reads_grow():
    # more terms than the first window holds
    assert len(values('A269526', 100)) == 100


def test_spokes():
    assert values('A274924', 11) == [1, 2, 4, 8, 11, 12, 16, 9, 19, 24, 22]
    assert values('A274928', 10) == [3, 5, 6, 7, 15, 10, 17, 13, 25, 14]
    assert registry.lookup('A274928').offset == 1


def test_base_two_climbs():
    assert values('A230627', 12) == [1, 2, 3, 31, 5, 11, 7, 11, 23, 31, 11, 43]


def test_unresolved_climb_ends_stream():
    # 234 stalls on a 35-digit composite the default budget cannot split
    assert values('A288847', 5) == [217]


def test_digit_map_entries():
    assert values('A056938', 7) == [49, 77, 711, 3379, 31109, 132393, 344131]
    assert values('A133500', 4) == [0, 1, 2, 3]
    big = registry.digit_maps.POWER_TRAIN_LARGE_FIXED_POINT
    assert values('A135385', 20) == [1, 2, 3, 4, 5, 6, 7, 8, 9, 2592, big]


def test_tag_entries():
    assert values('A284116', 5) == [4, 7, 6, 7, 22]
    assert values('A284121', 5) == [2, 6, 6, 6, 1]
    assert values('A291792', 3) == [5, 13, 14]


def test_coordination_entries():
    assert values('A008574', 7) == [1, 4, 8, 12, 16, 20, 24]
    assert values('A296368', 8) == [1, 3, 8, 12, 15, 20, 25, 28]


def test_reference_constants():
    assert values('A250001', 10) == [1, 3, 14, 173, 16951]
    assert values('A250000', 5) == [0, 0, 1, 2, 4]


def test_lookup_errors():
    with pytest.raises(UnknownSequence):
        registry.lookup('A000000')
    with pytest.raises(UnknownSequence):
        registry.lookup('64413')
    with pytest.raises(UnknownSequence):
        registry.lookup('A303981')


def test_patch_sequence(tmp_path, data_dir):
    shutil.copy(os.path.join(data_dir, 'grid4.patch'), str(tmp_path / 'ammann_beenker.patch'))
    assert values('A303981', 10, str(tmp_path)) == [1, 2, 3, 4]
    with pytest.raises(UnknownSequence):
        registry.lookup('A303981', str(tmp_path / 'elsewhere'))
