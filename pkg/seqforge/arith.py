""" Number theory kernel: primality, factorization and digit concatenation """
import logging
import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd, isqrt, prod

import numpy as np

from seqforge.exceptions import UnfactoredError

logger = logging.getLogger(__name__)

SIEVE_LIMIT = 10 ** 6
# Below this bound a cofactor with no factor under SIEVE_LIMIT is prime
TRIAL_SQUARE = SIEVE_LIMIT * SIEVE_LIMIT

# Strong pseudoprime bases that make Miller-Rabin exact below 3.3e24
DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
DETERMINISTIC_LIMIT = 2 ** 64

DEFAULT_PRP_ROUNDS = 64
DEFAULT_RHO_BUDGET = 200000

# Number of primes multiplied together for one gcd probe during trial division
TRIAL_BLOCK = 512


class Primality(Enum):
    COMPOSITE = 0
    PRIME = 1
    PROBABLE_PRIME = 2


@dataclass(frozen=True)
class PrimalityVerdict:
    status: Primality
    witness: int = None

    def __bool__(self):
        return self.status is not Primality.COMPOSITE


@dataclass(frozen=True)
class Factorization:
    """ Prime powers of n in increasing prime order """
    factors: tuple

    @property
    def value(self):
        return prod(p ** e for p, e in self.factors)

    @property
    def primes(self):
        return [p for p, _ in self.factors]

    def multiset(self):
        """ Prime factors repeated by multiplicity, ascending """
        return [p for p, e in self.factors for _ in range(e)]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        return ' * '.join('{}^{}'.format(p, e) if e > 1 else str(p) for p, e in self.factors)


@lru_cache(maxsize=None)
def _sieve():
    flags = np.ones(SIEVE_LIMIT + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(SIEVE_LIMIT) + 1):
        if flags[p]:
            flags[p * p::p] = False
    return flags


@lru_cache(maxsize=None)
def small_primes():
    """ All primes below SIEVE_LIMIT as a tuple of Python ints """
    return tuple(int(p) for p in np.flatnonzero(_sieve()))


@lru_cache(maxsize=None)
def _trial_blocks():
    primes = small_primes()
    blocks = []
    for start in range(0, len(primes), TRIAL_BLOCK):
        chunk = primes[start:start + TRIAL_BLOCK]
        blocks.append((chunk, prod(chunk)))
    return blocks


@lru_cache(maxsize=8)
def smallest_factor_table(limit):
    """ Table t with t[k] the smallest prime dividing k, for 2 <= k <= limit """
    table = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, isqrt(limit) + 1):
        if table[p] == 0:
            block = table[p * p::p]
            block[block == 0] = p
    untouched = np.flatnonzero(table == 0)
    table[untouched] = untouched
    return table


def prime_divisors(n):
    """ Distinct primes dividing n, ascending """
    if n < 2:
        return []
    if n <= SIEVE_LIMIT:
        table = smallest_factor_table(SIEVE_LIMIT)
        out = []
        while n > 1:
            p = int(table[n])
            out.append(p)
            while n % p == 0:
                n //= p
        return out
    return factor(n).primes


def _strong_probable_prime(n, a):
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n, rounds=DEFAULT_PRP_ROUNDS):
    """ Primality verdict for n >= 0

    Exact below 2**64; above that the fixed bases are followed by ``rounds``
    extra bases drawn from a generator seeded by n, so repeated calls agree.
    """
    if n < 2:
        return PrimalityVerdict(Primality.COMPOSITE)
    if n <= SIEVE_LIMIT:
        if _sieve()[n]:
            return PrimalityVerdict(Primality.PRIME)
        return PrimalityVerdict(Primality.COMPOSITE, witness=int(smallest_factor_table(SIEVE_LIMIT)[n]))

    for p in DETERMINISTIC_BASES:
        if n % p == 0:
            return PrimalityVerdict(Primality.COMPOSITE, witness=p)

    for a in DETERMINISTIC_BASES:
        if not _strong_probable_prime(n, a):
            return PrimalityVerdict(Primality.COMPOSITE, witness=a)
    if n < DETERMINISTIC_LIMIT:
        return PrimalityVerdict(Primality.PRIME)

    rng = random.Random(n)
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        if not _strong_probable_prime(n, a):
            return PrimalityVerdict(Primality.COMPOSITE, witness=a)
    return PrimalityVerdict(Primality.PROBABLE_PRIME)


def _brent(n, budget, rng):
    """ One Brent-rho split of the odd composite n. Returns (divisor, work) with
        divisor None when the budget ran out
    """
    work = 0
    while work < budget:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1 and work < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            work += r
            r <<= 1
        if g == n:
            # Batched product collapsed, walk back one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g, work
    return None, work


def _split_large(n, budget, rng, out):
    """ Fully factor n (no prime factor below SIEVE_LIMIT) into ``out``; returns
        the work spent
    """
    if n < TRIAL_SQUARE or is_prime(n):
        out.append(n)
        return 0

    root = isqrt(n)
    if root * root == n:
        spent = _split_large(root, budget, rng, out)
        return spent + _split_large(root, budget - spent, rng, out)

    d, spent = _brent(n, budget, rng)
    if d is None:
        raise UnfactoredError(n, found=sorted(out))
    spent += _split_large(d, budget - spent, rng, out)
    spent += _split_large(n // d, budget - spent, rng, out)
    return spent


def factor(n, budget=DEFAULT_RHO_BUDGET):
    """ Factor n >= 2 into prime powers

    Trial division below 10**6 runs a block of primes at a time through one
    gcd; whatever survives goes to Brent's rho. ``budget`` bounds the total
    number of rho iterations and UnfactoredError carries the cofactor that
    could not be split.
    """
    if n < 2:
        raise ValueError('factor() needs n >= 2, got {}'.format(n))

    found = []
    rest = n
    for chunk, block in _trial_blocks():
        if rest == 1 or chunk[0] * chunk[0] > rest:
            break
        if gcd(rest, block) == 1:
            continue
        for p in chunk:
            while rest % p == 0:
                found.append(p)
                rest //= p

    if rest > 1:
        large = []
        try:
            _split_large(rest, budget, random.Random(rest), large)
        except UnfactoredError as e:
            raise UnfactoredError(e.cofactor, found=sorted(found + e.found)) from e
        found.extend(large)

    counts = {}
    for p in found:
        counts[p] = counts.get(p, 0) + 1
    return Factorization(tuple(sorted(counts.items())))


def digits(n, base=10):
    """ Digit string of n >= 0 in base 2 or 10 """
    if base == 10:
        return str(n)
    if base == 2:
        return format(n, 'b')
    raise ValueError('Only bases 2 and 10 are supported, got {}'.format(base))


def concat_digits(parts, base=10):
    """ Read the base-b numerals of ``parts`` one after another as a single numeral """
    if not parts:
        raise ValueError('concat_digits() needs at least one part')
    if parts[0] == 0 and len(parts) > 1:
        raise ValueError('The leading part must be nonzero')
    return int(''.join(digits(p, base) for p in parts), base)


def power(base, exponent):
    """ base ** exponent with 0 ** 0 taken as 1 """
    if exponent == 0:
        return 1
    return base ** exponent


def repunit(k):
    return (10 ** k - 1) // 9
