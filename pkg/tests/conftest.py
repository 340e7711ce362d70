import os

import pytest

from seqforge.core import parse_bfile

DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help='run slow tests')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def bfile():
    """ Loads tests/data/bNNNNNN.txt, skipping the test when it is absent """

    def load(a_number):
        path = os.path.join(DATA_DIR, 'b{}.txt'.format(a_number[1:]))
        if not os.path.isfile(path):
            pytest.skip('b-file for {} not present in tests/data'.format(a_number))
        with open(path, 'rb') as f:
            return parse_bfile(f.read())

    return load


@pytest.fixture
def isolated(tmp_path, monkeypatch):
    """ Run from an empty directory with no SEQFORGE_THREADS set """
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv('SEQFORGE_THREADS', raising=False)
    return tmp_path
