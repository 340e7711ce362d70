""" Digit-function iterations: factor concatenation in bases 10 and 2, home
    primes, power trains and the concatenation primes
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from math import gcd, prod

from seqforge import arith
from seqforge.arith import concat_digits, factor, is_prime
from seqforge.core import Term
from seqforge.exceptions import UnfactoredError
from seqforge.workers import parallel_map

logger = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 500
DEFAULT_DIGIT_CAP = 1000

# Composite fixed point of the base-10 map and its preimage split
D0 = 13532385396179
POWER_TRAIN_LARGE_FIXED_POINT = 24547284284866560000000000

# Primes below this bound are tried by a single gcd before any PRP test
SIEVE_PRIMORIAL_BOUND = 2000


class MapKind(Enum):
    FACTOR_CONCAT_B10 = 'b10'
    FACTOR_CONCAT_B2 = 'b2'
    HOME_PRIME = 'home'
    POWER_TRAIN = 'power'


class ClimbStatus(Enum):
    REACHED_PRIME = 'reached_prime'
    FIXED_COMPOSITE = 'fixed_composite'
    # A power-train fixed point that is not composite (0, 1, 2, 3, 5, 7)
    FIXED_POINT = 'fixed_point'
    CYCLE = 'cycle'
    UNRESOLVED = 'unresolved'


@dataclass
class ClimbOutcome:
    status: ClimbStatus
    terminal: int
    steps: int
    cycle_len: int = None
    stall: int = None
    trajectory: list = field(default_factory=list)

    @property
    def never_prime(self):
        """ True when the climb provably never reaches a prime """
        return self.status in (ClimbStatus.FIXED_COMPOSITE, ClimbStatus.CYCLE)

    def __str__(self):
        if self.status is ClimbStatus.REACHED_PRIME:
            return 'prime {} after {} steps'.format(self.terminal, self.steps)
        if self.status is ClimbStatus.CYCLE:
            return 'cycle of length {} entered at {} after {} steps'.format(
                self.cycle_len, self.terminal, self.steps)
        if self.status in (ClimbStatus.FIXED_COMPOSITE, ClimbStatus.FIXED_POINT):
            return 'fixed point {} after {} steps'.format(self.terminal, self.steps)
        if self.stall is not None:
            return 'unresolved after {} steps, stalled at a {}-digit composite'.format(
                self.steps, len(str(self.stall)))
        return 'unresolved after {} steps at {} ({} digits)'.format(
            self.steps, self.terminal, len(str(self.terminal)))


def f_factor_concat(n, base=10, budget=arith.DEFAULT_RHO_BUDGET):
    """ Concatenate p1 e1 p2 e2 ... in the given base, leaving out exponents of 1 """
    if n < 2:
        raise ValueError('n must be at least 2, got {}'.format(n))
    parts = []
    for p, e in factor(n, budget):
        parts.append(p)
        if e > 1:
            parts.append(e)
    return concat_digits(parts, base)


def home_prime_step(n, budget=arith.DEFAULT_RHO_BUDGET):
    """ Concatenate the prime factors of n with repetition, ascending """
    if n < 2:
        raise ValueError('n must be at least 2, got {}'.format(n))
    return concat_digits(factor(n, budget).multiset(), 10)


def power_train_factored(n):
    """ (base, exponent) pairs of the power train of n; a lone trailing digit
        has exponent None
    """
    ds = [int(c) for c in str(n)]
    pairs = [(ds[i], ds[i + 1]) for i in range(0, len(ds) - 1, 2)]
    if len(ds) % 2:
        pairs.append((ds[-1], None))
    return pairs


def power_train(n):
    if n < 0:
        raise ValueError('n must be nonnegative')
    return prod(b if e is None else arith.power(b, e) for b, e in power_train_factored(n))


def power_train_fixed_points(limit):
    return [n for n in range(1, limit + 1) if power_train(n) == n]


def _map_for(kind, budget):
    if kind is MapKind.FACTOR_CONCAT_B10:
        return lambda v: f_factor_concat(v, 10, budget)
    if kind is MapKind.FACTOR_CONCAT_B2:
        return lambda v: f_factor_concat(v, 2, budget)
    if kind is MapKind.HOME_PRIME:
        return lambda v: home_prime_step(v, budget)
    return power_train


def climb(n, kind=MapKind.FACTOR_CONCAT_B10, max_steps=DEFAULT_MAX_STEPS,
          digit_cap=DEFAULT_DIGIT_CAP, budget=arith.DEFAULT_RHO_BUDGET):
    """ Iterate a digit map from n until it reaches a prime, a fixed point or a
        cycle; running out of steps, digits or factoring budget is unresolved
    """
    step = _map_for(kind, budget)
    stops_at_primes = kind is not MapKind.POWER_TRAIN

    value = n
    trajectory = [n]
    seen = {n: 0}
    steps = 0

    while True:
        if stops_at_primes and (value < 2 or is_prime(value)):
            return ClimbOutcome(ClimbStatus.REACHED_PRIME, value, steps, trajectory=trajectory)

        if steps >= max_steps:
            logger.debug('Climb of {} hit the {} step limit'.format(n, max_steps))
            return ClimbOutcome(ClimbStatus.UNRESOLVED, value, steps, trajectory=trajectory)

        try:
            nxt = step(value)
        except UnfactoredError as e:
            logger.debug('Climb of {} stalled at step {}: {}'.format(n, steps, e))
            return ClimbOutcome(ClimbStatus.UNRESOLVED, value, steps, stall=e.cofactor,
                                trajectory=trajectory)

        if nxt == value:
            composite = value > 3 and not is_prime(value)
            status = ClimbStatus.FIXED_COMPOSITE if composite else ClimbStatus.FIXED_POINT
            return ClimbOutcome(status, value, steps, trajectory=trajectory)

        if kind is MapKind.HOME_PRIME:
            # Concatenating two or more factors always gives a longer number
            assert nxt > value, 'home prime step did not grow {}'.format(value)

        steps += 1
        if nxt in seen:
            return ClimbOutcome(ClimbStatus.CYCLE, nxt, steps, cycle_len=steps - seen[nxt],
                                trajectory=trajectory)

        seen[nxt] = steps
        trajectory.append(nxt)
        value = nxt

        if len(str(value)) > digit_cap:
            logger.debug('Climb of {} passed {} digits'.format(n, digit_cap))
            return ClimbOutcome(ClimbStatus.UNRESOLVED, value, steps, trajectory=trajectory)


def home_prime(n, max_steps=DEFAULT_MAX_STEPS, digit_cap=DEFAULT_DIGIT_CAP,
               budget=arith.DEFAULT_RHO_BUDGET):
    """ Climb of the home-prime map. ``steps`` counts applications of the map,
        so 8 reaches its home prime after 13 steps; chains written as factor
        lists show one more arrow, see home_prime_chain
    """
    return climb(n, MapKind.HOME_PRIME, max_steps, digit_cap, budget)


def home_prime_trajectory(n, steps, budget=arith.DEFAULT_RHO_BUDGET):
    """ The first ``steps`` + 1 values of the home-prime iteration of n; shorter
        if a prime is reached or the factoring budget runs out
    """
    return climb(n, MapKind.HOME_PRIME, max_steps=steps, digit_cap=10 ** 9,
                 budget=budget).trajectory


def home_prime_chain(n, max_steps=DEFAULT_MAX_STEPS, budget=arith.DEFAULT_RHO_BUDGET):
    """ The home-prime climb written as successive prime factor lists: the start
        itself, then the factors of each value, then the prime reached. The
        first arrow of this display only factors n, so it has one more arrow
        than the climb has steps.
    """
    outcome = home_prime(n, max_steps, 10 ** 9, budget)
    chain = [[n]]
    for value in outcome.trajectory[:-1]:
        chain.append(factor(value, budget).multiset())
    if outcome.status is ClimbStatus.REACHED_PRIME:
        chain.append([outcome.terminal])
    return chain


def climb_outcomes(kind, n_max, max_steps=DEFAULT_MAX_STEPS, digit_cap=DEFAULT_DIGIT_CAP,
                   budget=arith.DEFAULT_RHO_BUDGET, threads=1):
    """ ClimbOutcome for every 2 <= n <= n_max, in order of n """
    def job(n):
        return n, climb(n, kind, max_steps, digit_cap, budget)

    return dict(parallel_map(job, range(2, n_max + 1), threads))


def climb_sequence(kind, n_max, max_steps=DEFAULT_MAX_STEPS, digit_cap=DEFAULT_DIGIT_CAP,
                   budget=arith.DEFAULT_RHO_BUDGET, threads=1):
    """ F(n) for n = 1..n_max: the prime reached, -1 when the climb provably
        never reaches one and None when it is unresolved. F(1) = 1.
    """
    outcomes = climb_outcomes(kind, n_max, max_steps, digit_cap, budget, threads)
    terms = [Term(1, 1)] if n_max >= 1 else []
    for n in range(2, n_max + 1):
        outcome = outcomes[n]
        if outcome.status is ClimbStatus.REACHED_PRIME:
            value = outcome.terminal
        elif outcome.never_prime:
            value = -1
        else:
            value = None
        terms.append(Term(n, value))
    return terms


def never_prime_starts(kind, n_max, **kwargs):
    """ Starting values whose climb ends in a composite fixed point or a cycle """
    return sorted(n for n, o in climb_outcomes(kind, n_max, **kwargs).items() if o.never_prime)


def davis_fixed_point_search(x_max, y_max, budget=arith.DEFAULT_RHO_BUDGET):
    """ Composite fixed points n = m p of the base-10 map of the form
        m = x 10^y + 1 and p = f(m) / x, a y-digit prime above every prime of m
    """
    found = []
    for y in range(1, y_max + 1):
        for x in range(1, x_max + 1):
            m = x * 10 ** y + 1
            try:
                fm = f_factor_concat(m, 10, budget)
            except UnfactoredError:
                continue
            if fm % x:
                continue
            p = fm // x
            if len(str(p)) != y or p in (2, 5) or not is_prime(p):
                continue
            if p <= max(factor(m, budget).primes):
                continue
            n = m * p
            if f_factor_concat(n, 10, budget) == n:
                logger.info('Composite fixed point {} = {} * {} (x={}, y={})'.format(n, m, p, x, y))
                found.append(n)
    return sorted(set(found))


def prime_power_preimages(n):
    """ (p, e) with e >= 2 and p prime such that the base-10 map sends p**e to n """
    s = str(n)
    out = []
    for i in range(1, len(s)):
        head, tail = s[:i], s[i:]
        if tail[0] == '0':
            continue
        p, e = int(head), int(tail)
        if e >= 2 and is_prime(p):
            out.append((p, e))
    return out


def memorable_concat(n):
    """ 1 2 ... n (n-1) ... 1 read as one decimal number """
    if n < 1:
        raise ValueError('n must be at least 1')
    return int(''.join(str(k) for k in list(range(1, n + 1)) + list(range(n - 1, 0, -1))))


def smarandache(n):
    """ 1 2 3 ... n read as one decimal number """
    if n < 1:
        raise ValueError('n must be at least 1')
    return int(''.join(str(k) for k in range(1, n + 1)))


@dataclass
class PrimeSearchReport:
    kind: str
    primes: list = field(default_factory=list)
    excluded: dict = field(default_factory=dict)
    tested: list = field(default_factory=list)


def _congruence_divisor(kind, n):
    """ A small divisor forced by n's residues, or None """
    if kind == 'memorable':
        # digit sum is n**2
        if n > 1 and n % 3 == 0:
            return 3
        return None
    if n % 3 != 1:
        # digit sum is n (n + 1) / 2
        return 3
    if n % 2 == 0:
        return 2
    if n % 5 == 0:
        return 5
    return None


def search_first_prime(kind, n_range, prp_rounds=arith.DEFAULT_PRP_ROUNDS, threads=1):
    """ Scan concatenation numbers for (probable) primes

    Residue shortcuts and one gcd against the small primes rule out most n
    before any probable-prime test is run.
    """
    build = {'memorable': memorable_concat, 'smarandache': smarandache}[kind]
    primorial = prod(arith.small_primes()[:_small_prime_count()])
    report = PrimeSearchReport(kind)
    candidates = []

    for n in n_range:
        d = _congruence_divisor(kind, n)
        if d is not None:
            report.excluded[n] = d
            continue
        value = build(n)
        if value < 2:
            report.excluded[n] = 1
            continue
        g = gcd(value, primorial)
        if g > 1 and g != value:
            report.excluded[n] = _least_prime_factor(g)
            continue
        candidates.append((n, value))

    def job(item):
        n, value = item
        return n, is_prime(value, prp_rounds)

    for n, verdict in parallel_map(job, candidates, threads):
        report.tested.append(n)
        if verdict:
            logger.info('{} concatenation for n={} is {}'.format(kind, n, verdict.status.name.lower()))
            report.primes.append(n)
        else:
            report.excluded[n] = verdict.witness
    report.tested.sort()
    report.primes.sort()
    return report


def _small_prime_count():
    primes = arith.small_primes()
    count = 0
    while primes[count] < SIEVE_PRIMORIAL_BOUND:
        count += 1
    return count


def _least_prime_factor(g):
    for p in arith.small_primes():
        if g % p == 0:
            return p
