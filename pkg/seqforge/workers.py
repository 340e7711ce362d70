""" Thread fan-out shared by the modules that parallelise independent jobs """
import logging
import os
from concurrent.futures import ThreadPoolExecutor

logger = logging.getLogger(__name__)

THREADS_ENV = 'SEQFORGE_THREADS'


def resolve_threads(flag=None, config=None):
    """ Pick the worker count: explicit flag, then SEQFORGE_THREADS, then
        the config file, then the number of cores
    """
    if flag:
        return max(1, int(flag))

    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            logger.warning('Ignoring non-integer {}={!r}'.format(THREADS_ENV, env))

    if config is not None and config.threads:
        return config.threads

    return os.cpu_count() or 1


def parallel_map(fn, items, threads=1):
    """ Apply fn to every item and return the results in input order """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    logger.debug('Running {} jobs on {} threads'.format(len(items), threads))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
