import click
import logging
import sys
from seqforge import __version__
from seqforge.exceptions import ConfigurationFileNotFound, InvalidConfiguration
from seqforge.logging import configure_logger
from seqforge.config import SeqforgeConfig
from seqforge.workers import resolve_threads

logger = logging.getLogger(__name__)


class SeqforgeContext(object):
    def __init__(self):
        self.config = None
        self.threads = 1


pass_seqforge_context = click.make_pass_decorator(SeqforgeContext, ensure=True)


def a_number_argument(f):
    """ A-number argument, upper-cased so a064413 works too """

    def callback(ctx, param, value):
        return value.upper()

    return click.argument('a_number', callback=callback)(f)


@click.group()
@click.version_option(__version__)
@click.option(
    '--verbosity', '-v',
    type=click.Choice(['CRITICAL', 'ERROR', 'WARNING', 'INFO', 'DEBUG'], case_sensitive=False),
    is_eager=True,
    default='INFO'
)
@click.option('--config', 'config_file', type=click.Path(), default=None,
              help='Configuration file to use instead of searching for seqforge.yaml')
@click.option('--threads', '-j', type=click.IntRange(min=1), default=None,
              help='Worker threads (default: $SEQFORGE_THREADS, the config file, or all cores)')
@pass_seqforge_context
def main(ctx, verbosity, config_file, threads):
    # Configure logging
    configure_logger(verbosity)

    # Load Configuration
    try:
        ctx.config = SeqforgeConfig(config_file)
    except (ConfigurationFileNotFound, InvalidConfiguration) as e:
        logger.critical(e)
        sys.exit(1)

    ctx.threads = resolve_threads(threads, ctx.config)


@main.command('gen', short_help='Print the first terms of a sequence')
@a_number_argument
@click.argument('n', type=click.IntRange(min=0))
@click.argument('fmt', type=click.Choice(['plain', 'bfile']), default='plain', required=False)
@click.option('--out', '-o', type=click.Path(), default=None, help='Write to a file instead of stdout')
@pass_seqforge_context
def gen(ctx, a_number, n, fmt, out):
    from seqforge.jobs import do_gen
    retval = do_gen(ctx.config, a_number, n, fmt, out)

    if retval:
        sys.exit(retval)


@main.command('compare', short_help='Compare computed terms with a b-file')
@a_number_argument
@click.argument('bfile', type=click.Path(exists=True), required=False)
@click.option('--n', '-n', 'count', type=click.IntRange(min=1), default=None,
              help='Number of terms to compute (default: as many as the b-file holds)')
@pass_seqforge_context
def compare(ctx, a_number, bfile, count):
    from seqforge.jobs import do_compare
    retval = do_compare(ctx.config, a_number, bfile, count)

    if retval:
        sys.exit(retval)


@main.command('plot', short_help='Draw a scatter or pin plot as SVG')
@a_number_argument
@click.argument('n', type=click.IntRange(min=1))
@click.argument('style', type=click.Choice(['scatter', 'pinplot']), default='scatter', required=False)
@click.option('--out', '-o', type=click.Path(), required=True)
@click.option('--diagonal', is_flag=True, help='Draw the line a(n) = n on scatter plots')
@click.option('--log', 'log_scale', is_flag=True, help='Logarithmic vertical axis for pin plots')
@pass_seqforge_context
def plot(ctx, a_number, n, style, out, diagonal, log_scale):
    """ Plot the first N terms of A_NUMBER. Only fully computed prefixes are
    drawn: sequences built from tag runs (A284119, A284121) end before
    (100)^110, whose run of 43913328040672 steps is out of reach, so they
    plot at most 109 terms, fewer when the tag budget in the config is small.
    """
    from seqforge.jobs import do_plot
    retval = do_plot(ctx.config, a_number, n, style, out, diagonal, log_scale)

    if retval:
        sys.exit(retval)


@main.command('tag', short_help="Follow a word under Post's tag system")
@click.option('--word', '-w', default=None, help='Starting word of 0s and 1s')
@click.option('--sigma', 'sigma_n', type=click.IntRange(min=1), default=None,
              help='Start from (100)^N')
@click.option('--classify', type=click.IntRange(min=1), default=None,
              help='Classify (100)^n for every n up to this value')
@click.option('--checkpoint', type=click.Path(), default=None,
              help='Run resumably, saving progress to this file')
@click.option('--max-steps', type=click.IntRange(min=1), default=None)
@click.option('--plain', is_flag=True, help='Use the single-step stepper')
@pass_seqforge_context
def tag(ctx, word, sigma_n, classify, checkpoint, max_steps, plain):
    from seqforge.jobs import do_tag
    if max_steps is not None:
        ctx.config.tag['max_steps'] = max_steps
    retval = do_tag(ctx.config, word, sigma_n, classify, checkpoint, ctx.threads, plain)

    if retval:
        sys.exit(retval)


@main.command('queens', short_help='Peaceable queens on an n x n board')
@click.option('--n', '-n', 'n', type=int, required=True)
@click.option('--time-budget', type=click.IntRange(min=1), default=None, help='Seconds')
@click.option('--construction', is_flag=True, help='Only build the pentagonal construction')
@click.option('--format', 'fmt', type=click.Choice(['ascii', 'svg']), default='ascii')
@pass_seqforge_context
def queens(ctx, n, time_budget, construction, fmt):
    from seqforge.jobs import do_queens
    retval = do_queens(ctx.config, n, time_budget, ctx.threads, fmt, construction)

    if retval:
        sys.exit(retval)


@main.command('coord', short_help='Coordination sequence of a periodic graph or patch')
@click.option('--graph', type=click.Choice(['square', 'cairo']), default='square')
@click.option('--base', default=None, help='Vertex label in the unit cell')
@click.option('--patch', type=click.Path(exists=True), default=None, help='Finite patch file')
@click.option('--n', '-n', 'n_max', type=click.IntRange(min=0), default=10)
@pass_seqforge_context
def coord(ctx, graph, base, patch, n_max):
    from seqforge.jobs import do_coord
    retval = do_coord(ctx.config, graph, base, n_max, patch)

    if retval:
        sys.exit(retval)


@main.command('climb', short_help='Iterate a digit map until it reaches a prime')
@click.option('--n', '-n', 'n', type=int, required=True)
@click.option('--map', 'kind', type=click.Choice(['b10', 'b2', 'home', 'power']), default='b10')
@pass_seqforge_context
def climb(ctx, n, kind):
    from seqforge.jobs import do_climb
    retval = do_climb(ctx.config, n, kind)

    if retval:
        sys.exit(retval)


@main.command('list', short_help='List the registered sequences')
@pass_seqforge_context
def list_sequences(ctx):
    from seqforge.jobs import do_list
    retval = do_list(ctx.config)

    if retval:
        sys.exit(retval)


@main.command('circles', short_help='Known counts of circle arrangements (A250001)')
@pass_seqforge_context
def circles(ctx):
    from seqforge.jobs import do_circles
    retval = do_circles(ctx.config)

    if retval:
        sys.exit(retval)


@main.command('primes', short_help='Search memorable or Smarandache concatenations for primes')
@click.argument('kind', type=click.Choice(['memorable', 'smarandache']))
@click.option('--from', 'start', type=int, default=1)
@click.option('--to', 'stop', type=int, required=True)
@pass_seqforge_context
def primes(ctx, kind, start, stop):
    from seqforge.jobs import do_primes
    retval = do_primes(ctx.config, kind, start, stop, ctx.threads)

    if retval:
        sys.exit(retval)


@main.command('cubefree', short_help='Earliest cube-free binary word, certified prefix only')
@click.argument('n', type=int)
@pass_seqforge_context
def cubefree(ctx, n):
    from seqforge.jobs import do_cubefree
    retval = do_cubefree(ctx.config, n)

    if retval:
        sys.exit(retval)
