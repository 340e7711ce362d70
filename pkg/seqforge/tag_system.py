""" Tag systems: exact and pass-based stepping, classification of trajectories
    and the (100)^n starting words
"""
import hashlib
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from seqforge.exceptions import DeadWordError
from seqforge.workers import parallel_map

logger = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 10 ** 6
DEFAULT_MAX_WORD_LEN = 10 ** 6

# How far past the step budget repeat detection may run before the exact
# budget-limited answer is computed instead
DETECTION_OVERSHOOT = 4

# Starting words whose fate is known only from very long runs
SIGMA_LONG_RUNS = {
    110: 43913328040672,
    4974: 57042251906801,
}


@dataclass(frozen=True)
class TagRules:
    alphabet_size: int
    deletion: int
    appendants: tuple

    def __post_init__(self):
        if self.deletion < 1:
            raise ValueError('Deletion number must be at least 1')
        if not 1 <= self.alphabet_size <= 10:
            raise ValueError('Alphabets of 1 to 10 symbols are supported')
        if len(self.appendants) != self.alphabet_size:
            raise ValueError('Need one appendant per symbol')
        symbols = set(self.symbols)
        for word in self.appendants:
            if not set(word) <= symbols:
                raise ValueError('Appendant {!r} uses symbols outside the alphabet'.format(word))

    @property
    def symbols(self):
        return '0123456789'[:self.alphabet_size]

    def appendant(self, symbol):
        return self.appendants[int(symbol)]

    @property
    def fingerprint(self):
        text = '{}|{}|{}'.format(self.alphabet_size, self.deletion, ','.join(self.appendants))
        return hashlib.sha256(text.encode('ascii')).hexdigest()

    @property
    def pass_safe(self):
        """ Whole-word passes are exact when no step can delete fewer than P symbols """
        return min(len(a) for a in self.appendants) >= self.deletion - 1


def post_rules():
    return TagRules(2, 3, ('00', '1101'))


@dataclass(frozen=True)
class TagWord:
    symbols: str = ''

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return self.symbols or 'ε'

    def pack(self):
        """ Bit-packed form of a binary word (length is kept separately) """
        if not self.symbols:
            return b''
        if set(self.symbols) - {'0', '1'}:
            return self.symbols.encode('ascii')
        return int(self.symbols, 2).to_bytes((len(self.symbols) + 7) // 8, 'big')

    @classmethod
    def unpack(cls, data, length, binary=True):
        if length == 0:
            return cls('')
        if not binary:
            return cls(data.decode('ascii'))
        return cls(format(int.from_bytes(data, 'big'), 'b').zfill(length))


def _as_str(word):
    return word.symbols if isinstance(word, TagWord) else str(word)


class TagStatus(Enum):
    DIES = 'dies'
    CYCLES = 'cycles'
    UNRESOLVED = 'unresolved'


@dataclass(frozen=True)
class TagOutcome:
    status: TagStatus
    words_before_cycle_or_death: int
    cycle_len: int
    max_length_seen: int
    steps: int

    @property
    def distinct_words(self):
        if self.status is TagStatus.CYCLES:
            return self.words_before_cycle_or_death + self.cycle_len
        return self.words_before_cycle_or_death

    def __str__(self):
        if self.status is TagStatus.DIES:
            return 'dies, {} words'.format(self.words_before_cycle_or_death)
        if self.status is TagStatus.CYCLES:
            return 'cycles, {} words before a cycle of length {}'.format(
                self.words_before_cycle_or_death, self.cycle_len)
        return 'unresolved after {} steps (longest word {})'.format(self.steps, self.max_length_seen)


@dataclass(frozen=True)
class TagBudget:
    max_steps: int = DEFAULT_MAX_STEPS
    max_word_len: int = DEFAULT_MAX_WORD_LEN


def _step(w, table, deletion):
    w = w + table[w[0]]
    return w[min(deletion, len(w)):]


def step(word, rules=None):
    """ Append the appendant of the first symbol, then drop min(P, length) symbols """
    rules = rules or post_rules()
    w = _as_str(word)
    if not w:
        raise DeadWordError('The empty word has no successor')
    table = dict(zip(rules.symbols, rules.appendants))
    nxt = _step(w, table, rules.deletion)
    # length changes by |appendant| - P unless the word dies
    assert len(nxt) == max(0, len(w) + len(table[w[0]]) - rules.deletion)
    return TagWord(nxt)


def _cycle_entry(start, lam, advance):
    """ Index of the first word that recurs after lam steps, by two-pointer replay """
    behind = start
    ahead = start
    for _ in range(lam):
        ahead = advance(ahead)
    mu = 0
    while behind != ahead:
        behind = advance(behind)
        ahead = advance(ahead)
        mu += 1
    return mu


def _cycle_length(word, advance):
    lam = 1
    probe = advance(word)
    while probe != word:
        probe = advance(probe)
        lam += 1
    return lam


def trajectory(word, rules=None, budget=None):
    """ Classify a trajectory with the plain one-step-at-a-time stepper

    Repetition is found with Brent's tortoise and hare on exact words, then the
    cycle entry is located by replay, so nothing relies on hashes and memory
    stays at two words however long the run.
    """
    rules = rules or post_rules()
    budget = budget or TagBudget()
    table = dict(zip(rules.symbols, rules.appendants))
    deletion = rules.deletion
    start = _as_str(word)

    def advance(w):
        return _step(w, table, deletion)

    hare = start
    tortoise = start
    power = lam = 1
    t = 0
    longest = len(start)
    limit = DETECTION_OVERSHOOT * budget.max_steps

    while True:
        if not hare:
            if t > budget.max_steps:
                return _budget_limited(start, rules, budget)
            return TagOutcome(TagStatus.DIES, t + 1, 1, longest, t)
        if len(hare) > budget.max_word_len or t >= limit:
            return _budget_limited(start, rules, budget)

        hare = advance(hare)
        t += 1
        longest = max(longest, len(hare))

        if hare == tortoise and hare:
            mu = _cycle_entry(start, lam, advance)
            if mu + lam > budget.max_steps:
                return _budget_limited(start, rules, budget)
            return TagOutcome(TagStatus.CYCLES, mu, lam, longest, mu + lam)

        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        lam += 1


def _budget_limited(start, rules, budget):
    """ Exact outcome of the first max_steps steps, ignoring repeats """
    table = dict(zip(rules.symbols, rules.appendants))
    w = start
    longest = len(w)
    for t in range(budget.max_steps + 1):
        if not w:
            return TagOutcome(TagStatus.DIES, t + 1, 1, longest, t)
        if len(w) > budget.max_word_len:
            return TagOutcome(TagStatus.UNRESOLVED, t + 1, 0, longest, t)
        if t == budget.max_steps:
            break
        w = _step(w, table, rules.deletion)
        longest = max(longest, len(w))
    return TagOutcome(TagStatus.UNRESOLVED, budget.max_steps + 1, 0, longest, budget.max_steps)


class PassStepper(object):
    """ Runs whole passes: for a word of length L the next ceil(L / P) steps read
        exactly the symbols at positions 0, P, 2P, ... of that word, so one
        pass is a slice, a translate and a concatenation
    """

    def __init__(self, rules):
        self.rules = rules
        self.deletion = rules.deletion
        self.translation = {ord(s): a for s, a in zip(rules.symbols, rules.appendants)}
        deltas = np.zeros(256, dtype=np.int64)
        for s, a in zip(rules.symbols, rules.appendants):
            deltas[ord(s)] = len(a) - rules.deletion
        self.deltas = deltas

    def run_pass(self, w):
        """ Returns (next word, steps taken, longest word inside the pass) """
        reads = w[::self.deletion]
        k = len(reads)
        appended = reads.translate(self.translation)
        nxt = (w + appended)[self.deletion * k:]
        codes = np.frombuffer(reads.encode('ascii'), dtype=np.uint8)
        peak = len(w) + int(np.cumsum(self.deltas[codes]).max())
        return nxt, k, max(peak, len(nxt))


def accelerated_trajectory(word, rules=None, budget=None):
    """ Same outcome as trajectory(), computed a whole pass at a time

    Brent's algorithm runs on the words seen at pass boundaries; a boundary
    word that recurs lies on the step cycle, whose length and entry point are
    then measured exactly with single steps.
    """
    rules = rules or post_rules()
    budget = budget or TagBudget()
    if not rules.pass_safe:
        logger.debug('Rules allow short deletions, using the plain stepper')
        return trajectory(word, rules, budget)

    table = dict(zip(rules.symbols, rules.appendants))
    passes = PassStepper(rules)
    start = _as_str(word)
    if not start:
        return TagOutcome(TagStatus.DIES, 1, 1, 0, 0)

    def advance(w):
        return _step(w, table, rules.deletion)

    hare = tortoise = start
    power = lam = 1
    t = 0
    longest = len(start)
    limit = DETECTION_OVERSHOOT * budget.max_steps

    while True:
        hare, k, peak = passes.run_pass(hare)
        t += k
        longest = max(longest, peak)

        if not hare:
            if t > budget.max_steps or longest > budget.max_word_len:
                return trajectory(start, rules, budget)
            return TagOutcome(TagStatus.DIES, t + 1, 1, longest, t)

        if t > limit or longest > budget.max_word_len:
            return trajectory(start, rules, budget)

        if hare == tortoise:
            cycle = _cycle_length(hare, advance)
            mu = _pass_cycle_entry(start, hare, cycle, passes, advance)
            if mu + cycle > budget.max_steps:
                return trajectory(start, rules, budget)
            return TagOutcome(TagStatus.CYCLES, mu, cycle, longest, mu + cycle)

        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        lam += 1


def _pass_cycle_entry(start, on_cycle, cycle, passes, advance):
    """ First step index on the cycle: rerun the passes until a boundary word is
        on the cycle, then single-step from the boundary before it
    """
    members = {on_cycle}
    w = advance(on_cycle)
    while w != on_cycle:
        members.add(w)
        w = advance(w)

    prev, prev_t = start, 0
    if start in members:
        return 0
    w, t = start, 0
    while True:
        nxt, k, _ = passes.run_pass(w)
        if nxt in members:
            prev, prev_t = w, t
            break
        w, t = nxt, t + k

    w, t = prev, prev_t
    while w not in members:
        w = advance(w)
        t += 1
    return t


def sigma(n):
    if n < 1:
        raise ValueError('n must be at least 1')
    return TagWord('100' * n)


@dataclass(frozen=True)
class SigmaRow:
    n: int
    words: int
    cycle_len: int
    status: TagStatus


def classify_sigma_range(n_max, budget=None, threads=1, accelerated=True):
    """ One row per n <= n_max: words before cycle or death, cycle length (1 for
        words that die) and the outcome
    """
    runner = accelerated_trajectory if accelerated else trajectory

    def job(n):
        outcome = runner(sigma(n), post_rules(), budget)
        logger.debug('sigma_{}: {}'.format(n, outcome))
        return SigmaRow(n, outcome.words_before_cycle_or_death, outcome.cycle_len, outcome.status)

    return parallel_map(job, range(1, n_max + 1), threads)


def max_words_over_length(n, budget=None, threads=1):
    """ Largest number of distinct words in the trajectory of any binary word
        of length n; unresolved starts are skipped with a warning
    """
    if n > 22:
        raise ValueError('Exhaustive enumeration is limited to n <= 22')
    rules = post_rules()

    def job(i):
        return accelerated_trajectory(format(i, 'b').zfill(n), rules, budget)

    best = 0
    for outcome in parallel_map(job, range(2 ** n), threads):
        if outcome.status is TagStatus.UNRESOLVED:
            logger.warning('A word of length {} is unresolved under the budget'.format(n))
            continue
        best = max(best, outcome.distinct_words)
    return best


class TagRun(object):
    """ Resumable long run: pass-level stepping with Brent's repeat detection,
        stopping and checkpointing only at pass boundaries so an interrupted
        run follows exactly the same path as an uninterrupted one
    """

    def __init__(self, rules, word, steps=0, longest=None, tortoise=None, power=1, lam=1,
                 status=TagStatus.UNRESOLVED):
        self.rules = rules
        self.word = word
        self.steps = steps
        self.longest = len(word) if longest is None else longest
        self.tortoise = word if tortoise is None else tortoise
        self.power = power
        self.lam = lam
        self.status = status

    @property
    def finished(self):
        return self.status is not TagStatus.UNRESOLVED

    def advance(self, max_steps, on_boundary=None):
        """ Run passes until the word dies, repeats, or max_steps is reached """
        passes = PassStepper(self.rules)
        while not self.finished and self.steps < max_steps:
            if not self.word:
                self.status = TagStatus.DIES
                break
            self.word, k, peak = passes.run_pass(self.word)
            self.steps += k
            self.longest = max(self.longest, peak)
            if not self.word:
                self.status = TagStatus.DIES
            elif self.word == self.tortoise:
                self.status = TagStatus.CYCLES
            else:
                if self.power == self.lam:
                    self.tortoise = self.word
                    self.power *= 2
                    self.lam = 0
                self.lam += 1
            if on_boundary is not None:
                on_boundary(self)
        return self
