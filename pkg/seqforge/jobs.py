""" The work behind each command. Every job returns the process exit code """
import logging
import os

import click

from seqforge.core import compare, parse_bfile, render_bfile
from seqforge.exceptions import (AlignmentError, BFileParseError, BFileStructureError,
                                 CheckpointError, DisconnectedBase, InvalidConfiguration,
                                 PatchRadiusError, UnknownSequence)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_UNRESOLVED = 3


def _lookup(config, a_number):
    from seqforge.registry import lookup
    patches = config.patches if config is not None else None
    try:
        return lookup(a_number, patches)
    except UnknownSequence as e:
        logger.critical(e)
        return None


def _emit(text, out=None):
    if out is None:
        click.echo(text)
    else:
        logger.debug('Writing {}'.format(out))
        with open(out, 'w') as f:
            f.write(text + '\n')


def do_gen(config, a_number, n, fmt='plain', out=None):
    """ Print the first n terms of a registered sequence """
    entry = _lookup(config, a_number)
    if entry is None:
        return EXIT_USAGE

    terms = entry.stream().take(n)
    if fmt == 'bfile':
        _emit(render_bfile(terms), out)
    else:
        _emit(' '.join(str(t.value) for t in terms), out)

    if len(terms) < n:
        logger.warning('Only {} of {} terms of {} could be computed'.format(len(terms), n, a_number))
        return EXIT_UNRESOLVED
    return EXIT_OK


def _find_bfile(config, a_number):
    folder = config.bfiles if config is not None else None
    if not folder:
        return None
    path = os.path.join(folder, 'b{}.txt'.format(a_number[1:]))
    return path if os.path.isfile(path) else None


def do_compare(config, a_number, bfile=None, n=None):
    """ Compare computed terms with a b-file: 0 when the overlap agrees, 1 on
        a mismatch, 2 when the file cannot be used
    """
    entry = _lookup(config, a_number)
    if entry is None:
        return EXIT_USAGE

    bfile = bfile or _find_bfile(config, a_number)
    if bfile is None:
        logger.critical('No b-file given for {} and none found in the bfiles folder'.format(a_number))
        return EXIT_USAGE

    with open(bfile, 'rb') as f:
        data = f.read()
    try:
        reference = parse_bfile(data)
    except (BFileParseError, BFileStructureError) as e:
        logger.critical(e)
        return EXIT_USAGE

    if n is None:
        n = reference[-1].index - entry.offset + 1 if reference else 0
    actual = entry.stream().take(max(n, 0))

    try:
        report = compare(actual, reference)
    except AlignmentError as e:
        logger.critical(e)
        return EXIT_USAGE

    click.echo(str(report))
    if report.exhausted.value != 'neither':
        logger.info('{} side ran out first'.format(report.exhausted.value))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def do_plot(config, a_number, n, style, out, diagonal=False, log=False):
    from seqforge.plot import plot

    entry = _lookup(config, a_number)
    if entry is None:
        return EXIT_USAGE

    terms = entry.stream().take(n)
    if len(terms) < n:
        logger.error('Only {} of {} terms of {} are available; not plotting a partial sequence'.format(
            len(terms), n, a_number))
        return EXIT_UNRESOLVED

    try:
        text = plot(terms, style, diagonal=diagonal, log=log)
    except ValueError as e:
        logger.critical(e)
        return EXIT_USAGE

    with open(out, 'w') as f:
        f.write(text)
    logger.info('Wrote {} terms of {} to {}'.format(n, a_number, out))
    return EXIT_OK


def do_tag(config, word=None, sigma_n=None, classify=None, checkpoint=None, threads=1,
           plain=False):
    from seqforge.tag_system import (TagBudget, TagStatus, TagWord, accelerated_trajectory,
                                     classify_sigma_range, post_rules, sigma, trajectory)

    budget = TagBudget(config.budget('tag', 'max_steps'), config.budget('tag', 'max_word_len'))

    if classify is not None:
        rows = classify_sigma_range(classify, budget, threads, accelerated=not plain)
        unresolved = 0
        for row in rows:
            click.echo('{} {} {} {}'.format(row.n, row.words, row.cycle_len, row.status.value))
            unresolved += row.status is TagStatus.UNRESOLVED
        return EXIT_UNRESOLVED if unresolved else EXIT_OK

    if (word is None) == (sigma_n is None):
        logger.critical('Give exactly one of --word and --sigma')
        return EXIT_USAGE

    start = sigma(sigma_n) if sigma_n is not None else TagWord(word)
    if set(start.symbols) - {'0', '1'}:
        logger.critical('Tag words are made of 0 and 1, got {!r}'.format(word))
        return EXIT_USAGE

    if checkpoint is not None:
        from seqforge.checkpoint import run_resumable
        try:
            run = run_resumable(start, post_rules(), checkpoint, budget.max_steps,
                                config.budget('tag', 'checkpoint_every'))
        except CheckpointError as e:
            logger.critical(e)
            return EXIT_USAGE
        click.echo('{} after {} steps, longest word {}'.format(run.status.value, run.steps, run.longest))
        return EXIT_OK if run.finished else EXIT_UNRESOLVED

    runner = trajectory if plain else accelerated_trajectory
    outcome = runner(start, post_rules(), budget)
    click.echo(str(outcome))
    return EXIT_UNRESOLVED if outcome.status is TagStatus.UNRESOLVED else EXIT_OK


def do_queens(config, n, time_budget=None, threads=1, fmt='ascii', construction=False):
    from seqforge.queens import QueensResult, jubin_construction, lower_bound, render, solve_exact

    if n < 1:
        logger.critical('Board side must be at least 1')
        return EXIT_USAGE

    if construction:
        p = jubin_construction(n)
        result = QueensResult(n, p.m, p, False)
        click.echo('m={}, construction (bound {})'.format(p.m, lower_bound(n)))
    else:
        budget = time_budget or config.budget('queens', 'time_budget')
        result = solve_exact(n, budget, threads)
        click.echo(str(result))

    click.echo(render(result.witness, fmt))
    if construction:
        return EXIT_OK
    return EXIT_OK if result.optimal else EXIT_UNRESOLVED


def do_coord(config, graph='square', base=None, n_max=10, patch=None):
    from seqforge.coordination import (BUILTIN_GRAPHS, coordination_sequence, load_patch,
                                       patch_coordination)
    try:
        if patch is not None:
            seq = patch_coordination(load_patch(patch), n_max)
        else:
            g = BUILTIN_GRAPHS[graph]()
            seq = coordination_sequence(g, base or g.cell_vertices[0], n_max)
    except (DisconnectedBase, PatchRadiusError, InvalidConfiguration, ValueError) as e:
        logger.critical(e)
        return EXIT_USAGE

    click.echo(' '.join(str(t) for t in seq))
    return EXIT_OK


def do_climb(config, n, kind='b10'):
    from seqforge.digit_maps import ClimbStatus, MapKind, climb

    if n < 1:
        logger.critical('Starting value must be positive')
        return EXIT_USAGE

    outcome = climb(n, MapKind(kind),
                    max_steps=config.budget('climb', 'max_steps'),
                    digit_cap=config.budget('climb', 'digit_cap'),
                    budget=config.budget('arith', 'rho_budget'))
    click.echo(str(outcome))
    return EXIT_UNRESOLVED if outcome.status is ClimbStatus.UNRESOLVED else EXIT_OK


def do_primes(config, kind, start, stop, threads=1):
    """ Scan the memorable or Smarandache concatenations for probable primes """
    from seqforge.digit_maps import search_first_prime

    if start < 1 or stop < start:
        logger.critical('Need 1 <= FROM <= TO, got {} and {}'.format(start, stop))
        return EXIT_USAGE

    report = search_first_prime(kind, range(start, stop + 1),
                                prp_rounds=config.budget('arith', 'prp_rounds'), threads=threads)
    for n in report.primes:
        click.echo(n)
    logger.info('{} of {} values needed a probable-prime test'.format(len(report.tested), stop - start + 1))
    return EXIT_OK


def do_cubefree(config, n):
    """ Print the certified prefix of the earliest cube-free binary word """
    from seqforge.exceptions import BudgetExceeded
    from seqforge.lex_earliest import cubefree_earliest

    if n < 1:
        logger.critical('n must be at least 1')
        return EXIT_USAGE

    try:
        result = cubefree_earliest(n, config.budget('cubefree', 'certify_depth'),
                                   config.budget('cubefree', 'node_budget'))
    except BudgetExceeded as e:
        logger.error(e)
        return EXIT_UNRESOLVED

    click.echo(''.join(str(v) for v in result.terms[:result.certified_len]))
    if result.certified_len < n:
        logger.warning('Only the first {} of {} symbols are stable under deeper lookahead'.format(
            result.certified_len, n))
        return EXIT_UNRESOLVED
    return EXIT_OK


def do_list(config):
    from seqforge.registry import PATCH_SEQUENCES, REGISTRY

    rows = [(a, entry.offset, entry.name) for a, entry in REGISTRY.items()]
    rows.extend((a, offset, '{} (from {})'.format(name, file_name))
                for a, (name, offset, file_name) in PATCH_SEQUENCES.items())
    for a_number, offset, name in sorted(rows):
        click.echo('{} offset {}  {}'.format(a_number, offset, name))
    return EXIT_OK


def do_circles(config):
    from seqforge.registry import REFERENCE_CONSTANTS

    offset, values = REFERENCE_CONSTANTS['A250001']
    for i, v in enumerate(values):
        click.echo('{} {}'.format(offset + i, v))
    return EXIT_OK
