"""Schnorr groups: a prime-order-q subgroup of Z_p* with generator g.

Generation picks the subgroup order q first (Miller-Rabin, 64 rounds),
then searches p = 2*k*q + 1 until p is prime, and finally builds the
generator as g = h**((p-1)/q) mod p for random h, retrying while g = 1.
Generation is deterministic for a fixed seeded randomness source.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import GenerationTimeout
from .modmath import mod_exp, sample_uniform

_TRIAL_LIMIT = 4096


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * limit
    flags[0] = flags[1] = 0
    for n in range(2, int(limit**0.5) + 1):
        if flags[n]:
            flags[n * n :: n] = bytes(len(flags[n * n :: n]))
    return [n for n in range(limit) if flags[n]]


_SMALL_PRIMES = _sieve(_TRIAL_LIMIT)


@dataclass(frozen=True)
class GroupParams:
    """Public group parameters (p, q, g) shared by all parties."""

    p: int
    q: int
    g: int

    def subgroup(self) -> list[int]:
        """All q powers of g, in exponent order.  Toy-scale groups only."""
        out = []
        value = 1
        for _ in range(self.q):
            out.append(value)
            value = value * self.g % self.p
        return out


@dataclass
class ValidationReport:
    """Outcome of validate_params: empty failure list means valid."""

    failures: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.failures


TOY23 = GroupParams(p=23, q=11, g=4)

PRESETS = {"toy23": TOY23}


def is_probable_prime(n: int, rounds: int = 64, rng: random.Random | None = None) -> bool:
    """Trial division below _TRIAL_LIMIT**2 (exact), Miller-Rabin above.

    Without an explicit rng the witness stream is derived from n, so
    repeated validation of the same value is reproducible.
    """
    if n < 2:
        return False
    for prime in _SMALL_PRIMES:
        if n == prime:
            return True
        if n % prime == 0:
            return False
    if n < _TRIAL_LIMIT * _TRIAL_LIMIT:
        return True
    if rng is None:
        rng = random.Random(n)
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for _ in range(rounds):
        a = 2 + sample_uniform(n - 3, False, rng)  # uniform witness in [2, n-2]
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class _Budget:
    def __init__(self, attempts: int):
        self.remaining = attempts

    def spend(self) -> None:
        self.remaining -= 1
        if self.remaining < 0:
            raise GenerationTimeout("no prime pair found within the attempt budget")


def _random_prime(bits: int, rng: random.Random, budget: _Budget) -> int:
    while True:
        candidate = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        budget.spend()
        if is_probable_prime(candidate, rng=rng):
            return candidate


def generate_params(
    q_bits: int,
    p_bits: int,
    rng: random.Random,
    max_attempts: int = 250_000,
) -> GroupParams:
    """Generate a fresh group with a q_bits-bit order and p_bits-bit modulus."""
    if q_bits < 4:
        raise ValueError("q_bits must be >= 4")
    if p_bits <= q_bits:
        raise ValueError("p_bits must exceed q_bits")
    budget = _Budget(max_attempts)
    while True:
        q = _random_prime(q_bits, rng, budget)
        two_q = 2 * q
        k_min = ((1 << (p_bits - 1)) - 1) // two_q + 1
        k_max = ((1 << p_bits) - 2) // two_q
        if k_max < k_min:
            continue
        span = k_max - k_min + 1
        k = k_min + (sample_uniform(span, False, rng) if span > 1 else 0)
        for _ in range(span):
            p = two_q * k + 1
            budget.spend()
            if is_probable_prime(p, rng=rng):
                return GroupParams(p=p, q=q, g=_find_generator(p, q, rng))
            k += 1
            if k > k_max:
                k = k_min


def _find_generator(p: int, q: int, rng: random.Random) -> int:
    cofactor = (p - 1) // q
    while True:
        h = 2 + sample_uniform(p - 3, False, rng)  # uniform in [2, p-2]
        g = mod_exp(h, cofactor, p)
        if g != 1:
            return g


def validate_params(params: GroupParams) -> ValidationReport:
    """Check every structural condition on (p, q, g); failures are report entries."""
    report = ValidationReport()
    p, q, g = params.p, params.q, params.g
    if not is_probable_prime(p):
        report.failures.append(f"p = {p} is not prime")
    if not is_probable_prime(q):
        report.failures.append(f"q = {q} is not prime")
    if p < 2 or q < 2 or (p - 1) % q != 0:
        report.failures.append("q does not divide p - 1")
    if not 1 < g < p:
        report.failures.append(f"g = {g} is outside (1, p)")
    if p < 2 or q < 1 or mod_exp(g % p, q, p) != 1:
        report.failures.append("g**q mod p != 1 (g is not in the order-q subgroup)")
    if g == 1:
        report.failures.append("generator is identity")
    return report
