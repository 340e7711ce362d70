import logging

import pytest

from seqforge.config import DEFAULT_CONFIG, SeqforgeConfig, find_config_file, merge_defaults
from seqforge.exceptions import ConfigurationFileNotFound, InvalidConfiguration
from seqforge.logging import configure_logger
from seqforge.workers import parallel_map, resolve_threads


def test_defaults_without_file(isolated):
    config = SeqforgeConfig()
    assert config.config_file is None
    assert config.climb == {'max_steps': 500, 'digit_cap': 1000}
    assert config.budget('tag', 'max_steps') == 10 ** 6
    assert config.budget('arith', 'rho_budget') == 200000


def test_file_found_in_parent(isolated):
    (isolated / 'seqforge.yaml').write_text('climb:\n  max_steps: 7\n')
    sub = isolated / 'a' / 'b'
    sub.mkdir(parents=True)
    assert find_config_file('seqforge.yaml') == str(isolated / 'seqforge.yaml')
    config = SeqforgeConfig(str(isolated / 'seqforge.yaml'))
    assert config.budget('climb', 'max_steps') == 7
    assert config.budget('climb', 'digit_cap') == 1000


def test_missing_explicit_file(isolated):
    with pytest.raises(ConfigurationFileNotFound):
        SeqforgeConfig(str(isolated / 'nope.yaml'))


@pytest.mark.parametrize('text', [
    'climb: [1, 2\n',
    '- just\n- a list\n',
    'climb:\n  max_steps: -3\n',
    'tag:\n  max_steps: yes\n',
    'queens: 5\n',
    'threads: 0\n',
])
def test_invalid_files(isolated, text):
    path = isolated / 'bad.yaml'
    path.write_text(text)
    with pytest.raises(InvalidConfiguration):
        SeqforgeConfig(str(path))


def test_unknown_attribute(isolated):
    with pytest.raises(AttributeError):
        SeqforgeConfig().nothing_here


def test_merge_defaults_does_not_share_state():
    a, b = {}, {}
    merge_defaults(a, DEFAULT_CONFIG)
    merge_defaults(b, DEFAULT_CONFIG)
    a['climb']['max_steps'] = 1
    assert b['climb']['max_steps'] == 500
    assert DEFAULT_CONFIG['climb']['max_steps'] == 500


def test_thread_resolution_order(isolated, monkeypatch):
    (isolated / 'seqforge.yaml').write_text('threads: 3\n')
    config = SeqforgeConfig()
    assert resolve_threads(None, config) == 3
    monkeypatch.setenv('SEQFORGE_THREADS', '5')
    assert resolve_threads(None, config) == 5
    assert resolve_threads(2, config) == 2
    monkeypatch.setenv('SEQFORGE_THREADS', 'many')
    assert resolve_threads(None, config) == 3


def test_parallel_map_keeps_order():
    items = list(range(50))
    assert parallel_map(lambda x: x * x, items, threads=4) == [x * x for x in items]
    assert parallel_map(lambda x: x + 1, items, threads=1) == [x + 1 for x in items]


def test_logger_writes_to_stderr(capsys):
    logger = configure_logger('warning')
    logging.getLogger('seqforge.test').info('quiet')
    logging.getLogger('seqforge.test').warning('loud')
    captured = capsys.readouterr()
    assert captured.out == ''
    assert 'loud' in captured.err
    assert 'quiet' not in captured.err
    assert len(logger.handlers) == 1
    configure_logger('INFO')
    assert len(logger.handlers) == 1
