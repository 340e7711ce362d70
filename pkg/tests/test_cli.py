import pytest
from click.testing import CliRunner

from seqforge import __version__
from seqforge.cli import main


@pytest.fixture
def run(isolated):
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, ['-v', 'ERROR', '-j', '1'] + list(args))

    return invoke


def test_version(run):
    result = CliRunner().invoke(main, ['--version'])
    assert __version__ in result.output


def test_gen(run):
    result = run('gen', 'A064413', '5')
    assert result.exit_code == 0
    assert result.output == '1 2 4 6 3\n'
    assert run('gen', 'a064413', '3', 'bfile').output == '1 1\n2 2\n3 4\n'


def test_gen_to_file(run, isolated):
    assert run('gen', 'A010060', '4', '-o', 'tm.txt').exit_code == 0
    assert (isolated / 'tm.txt').read_text() == '0 1 1 0\n'


def test_gen_unknown(run):
    assert run('gen', 'A999999', '3').exit_code == 2
    assert run('gen', 'A12', '3').exit_code == 2


@pytest.mark.parametrize('text,code', [
    ('1 1\n2 2\n3 4\n4 6\n', 0),
    ('# EKG\n1 1\n2 2\n3 5\n', 1),
    ('1 1\nnot a line\n', 2),
    ('1 1\n3 4\n', 2),
])
def test_compare_exit_codes(run, isolated, text, code):
    (isolated / 'b064413.txt').write_text(text)
    result = run('compare', 'A064413', 'b064413.txt')
    assert result.exit_code == code


def test_compare_reports(run, isolated):
    (isolated / 'b064413.txt').write_text('1 1\n2 2\n3 4\n4 6\n')
    assert 'match: 4 terms agree' in run('compare', 'A064413', 'b064413.txt').output
    (isolated / 'b064413.txt').write_text('1 1\n2 2\n3 5\n')
    assert 'mismatch at index 3: expected 5 but computed 4' in \
        run('compare', 'A064413', 'b064413.txt').output


def test_compare_finds_bfile_from_config(run, isolated):
    (isolated / 'bfiles').mkdir()
    (isolated / 'bfiles' / 'b064413.txt').write_text('1 1\n2 2\n3 4\n')
    (isolated / 'seqforge.yaml').write_text('bfiles: bfiles\n')
    assert run('compare', 'A064413').exit_code == 0


def test_compare_without_bfile(run):
    assert run('compare', 'A064413').exit_code == 2


def test_tag(run):
    result = run('tag', '--word', '1000')
    assert result.exit_code == 0
    assert result.output.strip() == 'dies, 7 words'
    assert run('tag', '--word', '1000', '--plain').output.strip() == 'dies, 7 words'
    assert run('tag').exit_code == 2
    assert run('tag', '--word', '102').exit_code == 2


def test_tag_budget_exit_code(run):
    assert run('tag', '--sigma', '14', '--max-steps', '100').exit_code == 3


def test_tag_classify(run):
    result = run('tag', '--classify', '3')
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == '1 4 2 cycles'


def test_queens(run):
    result = run('queens', '--n', '5')
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == 'm=4, optimal'
    assert run('queens', '--n', '0').exit_code == 2
    assert '<svg' in run('queens', '--n', '12', '--construction', '--format', 'svg').output


def test_climb(run):
    result = run('climb', '--n', '9')
    assert result.exit_code == 0
    assert result.output.strip() == 'prime 2213 after 4 steps'
    assert run('climb', '--n', '0').exit_code == 2


def test_coord(run):
    assert run('coord', '--graph', 'cairo', '--base', 'Vp', '--n', '4').output.strip() == '1 3 8 12 15'
    assert run('coord', '--graph', 'cairo', '--base', 'X').exit_code == 2


def test_list_and_circles(run):
    listing = run('list').output
    assert 'A064413 offset 1  EKG sequence' in listing
    assert 'A303981' in listing
    assert run('circles').output.splitlines() == ['1 1', '2 3', '3 14', '4 173', '5 16951']


def test_plot(run, isolated):
    result = run('plot', 'A064413', '20', '-o', 'ekg.svg')
    assert result.exit_code == 0
    assert (isolated / 'ekg.svg').read_text().count('<circle') == 20
    assert run('plot', 'A003987', '5', 'pinplot', '--log', '-o', 'nim.svg').exit_code == 2


def test_primes(run):
    result = run('primes', 'memorable', '--to', '11')
    assert result.exit_code == 0
    assert result.output.split() == ['10']
    assert run('primes', 'smarandache', '--from', '5', '--to', '4').exit_code == 2


def test_cubefree(run):
    result = run('cubefree', '10')
    assert result.exit_code == 0
    assert result.output.strip() == '0010010100'
    assert run('cubefree', '0').exit_code == 2


def test_bad_config_file(run, isolated):
    (isolated / 'seqforge.yaml').write_text('threads: 0\n')
    assert run('list').exit_code == 1


def test_plot_help_names_the_tag_run_limit(run):
    help_text = ' '.join(run('plot', '--help').output.split())
    assert 'plot at most 109 terms' in help_text
