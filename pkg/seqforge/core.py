""" Sequence identity, term streams, b-file I/O and the comparison harness """
import logging
import re
from collections import namedtuple
from dataclasses import dataclass
from enum import Enum

from seqforge.exceptions import (AlignmentError, BFileParseError, BFileStructureError,
                                 UnknownSequence)

logger = logging.getLogger(__name__)

A_NUMBER = re.compile(r'^A\d{6}$')

Term = namedtuple('Term', ['index', 'value'])


@dataclass(frozen=True)
class SequenceId:
    a_number: str
    name: str = ''

    def __post_init__(self):
        if not isinstance(self.a_number, str) or not A_NUMBER.match(self.a_number):
            raise UnknownSequence('Malformed A-number: {!r}'.format(self.a_number))

    def __str__(self):
        return self.a_number


class TermStream(object):
    """ Resumable producer of consecutive terms of one sequence

    ``source`` is a zero-argument callable returning an iterator of values.
    Values already produced are kept, so later requests only compute what
    is new and repeated requests return identical terms.
    """

    def __init__(self, seq_id, offset, source):
        self.seq_id = seq_id
        self.offset = offset
        self._source = source
        self._iter = None
        self._values = []

    def _fill(self, n):
        if self._iter is None:
            self._iter = iter(self._source())
        while len(self._values) < n:
            try:
                self._values.append(next(self._iter))
            except StopIteration:
                logger.debug('{} ended after {} terms'.format(self.seq_id, len(self._values)))
                break

    def take(self, n):
        if n < 0:
            raise ValueError('Cannot take a negative number of terms')
        self._fill(n)
        return [Term(self.offset + i, v) for i, v in enumerate(self._values[:n])]

    def __iter__(self):
        i = 0
        while True:
            self._fill(i + 1)
            if i >= len(self._values):
                return
            yield Term(self.offset + i, self._values[i])
            i += 1


class PrefixSource(object):
    """ Adapts a function returning the first n values into an iterator source,
        recomputing with a doubled length whenever more terms are needed
    """

    def __init__(self, prefix_fn, initial=64):
        self.prefix_fn = prefix_fn
        self.initial = initial

    def __call__(self):
        produced = 0
        size = self.initial
        while True:
            values = self.prefix_fn(size)
            for v in values[produced:]:
                yield v
            produced = len(values)
            if produced < size:
                return
            size *= 2


def take(stream, n):
    return stream.take(n)


def terms_from_values(values, offset=1):
    return [Term(offset + i, v) for i, v in enumerate(values)]


def parse_bfile(text):
    """ Parse OEIS b-file text (bytes or str) into a list of Terms """
    if isinstance(text, bytes):
        text = text.decode('utf-8')

    terms = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(line_no, raw)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(line_no, raw)
        if terms and index != terms[-1].index + 1:
            raise BFileStructureError(terms[-1].index + 1, index, line_no)
        terms.append(Term(index, value))
    return terms


def render_bfile(terms):
    """ One 'index value' line per term, no trailing blank line """
    return '\n'.join('{} {}'.format(t.index, t.value) for t in terms)


class Exhausted(Enum):
    NEITHER = 'neither'
    ACTUAL = 'actual'
    REFERENCE = 'reference'


@dataclass(frozen=True)
class ComparisonReport:
    match_len: int
    first_mismatch: tuple = None
    exhausted: Exhausted = Exhausted.NEITHER

    @property
    def ok(self):
        return self.first_mismatch is None

    def __str__(self):
        if self.ok:
            return 'match: {} terms agree'.format(self.match_len)
        index, expected, actual = self.first_mismatch
        return 'mismatch at index {}: expected {} but computed {} ({} terms agreed)'.format(
            index, expected, actual, self.match_len)


def compare(actual, reference):
    """ Compare two term lists over the indexes they share """
    if not actual or not reference:
        raise AlignmentError('Cannot compare against an empty term list')

    start = max(actual[0].index, reference[0].index)
    end = min(actual[-1].index, reference[-1].index)
    if start > end:
        raise AlignmentError('Index ranges {}..{} and {}..{} do not overlap'.format(
            actual[0].index, actual[-1].index, reference[0].index, reference[-1].index))

    a_values = actual[start - actual[0].index:end - actual[0].index + 1]
    r_values = reference[start - reference[0].index:end - reference[0].index + 1]

    if actual[-1].index < reference[-1].index:
        exhausted = Exhausted.ACTUAL
    elif reference[-1].index < actual[-1].index:
        exhausted = Exhausted.REFERENCE
    else:
        exhausted = Exhausted.NEITHER

    for matched, (a, r) in enumerate(zip(a_values, r_values)):
        if a.value != r.value:
            return ComparisonReport(matched, (a.index, r.value, a.value), exhausted)
    return ComparisonReport(len(a_values), None, exhausted)
