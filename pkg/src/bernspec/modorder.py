"""Exact modular-order arithmetic.

Order computations go through the Carmichael value of the modulus with
divisor stripping rather than exponent iteration: range scans hit moduli
around 10^6 where the naive walk is quadratic in the worst case.  Factoring
is trial division up to a configured bound, then Brent's rho with a
deterministic parameter schedule, so results are reproducible run to run.
Primality is decided by a deterministic Miller-Rabin base set below the
proven 13-base limit and flagged "probable" above it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .config import DEFAULT_CONFIG, RunConfig
from .errors import (
    DomainError,
    FactorizationLimitError,
    NotCoprimeError,
    NotPrimeError,
)

__all__ = [
    "Factorization",
    "OrderProfile",
    "pow_mod",
    "is_prime",
    "factorize",
    "carmichael",
    "euler_phi",
    "multiplicative_order",
    "order_profile",
    "order_plateau",
    "order_mod_prime_power",
    "order_of_composite",
    "order_of_base_power",
    "order_plateau_pow2",
]

# Miller-Rabin with these bases is a proof of primality below this bound.
_MR_PROVED_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_EXTRA_BASES = tuple(range(43, 500, 2))  # battery for the probable regime

_sieve_limit = 0
_sieve_primes: list[int] = []


def _primes_upto(limit: int) -> list[int]:
    """Cached simple sieve; grows monotonically with the largest request."""
    global _sieve_limit, _sieve_primes
    if limit <= _sieve_limit:
        return _sieve_primes
    limit = max(limit, 1 << 16)
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(flags[p * p :: p])
    _sieve_primes = [i for i, v in enumerate(flags) if v]
    _sieve_limit = limit
    return _sieve_primes


def pow_mod(a: int, e: int, m: int) -> int:
    """a**e mod m in [0, m), exact for arbitrary-precision inputs."""
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    if e < 0:
        raise DomainError(f"exponent must be >= 0, got {e}")
    return pow(a, e, m)


def _miller_rabin(n: int, bases) -> bool:
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in bases:
        a %= n
        if a in (0, 1, n - 1):
            continue
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


def is_prime(n: int) -> bool:
    """Deterministic below _MR_PROVED_LIMIT, strong-probable-prime above."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    if not _miller_rabin(n, _MR_BASES):
        return False
    if n < _MR_PROVED_LIMIT:
        return True
    return _miller_rabin(n, _MR_EXTRA_BASES)


def primality_is_proved(n: int) -> bool:
    """Whether is_prime(n) == True would be a proof rather than a probable call."""
    return n < _MR_PROVED_LIMIT


@dataclass(frozen=True)
class Factorization:
    """Complete factorization; `probable` lists primes only probabilistically tested."""

    value: int
    factors: tuple[tuple[int, int], ...]
    probable: tuple[int, ...] = ()

    def __post_init__(self):
        prod = 1
        for p, k in self.factors:
            prod *= p**k
        if prod != self.value:
            raise DomainError(f"factor product {prod} != value {self.value}")

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def divisors(self) -> list[int]:
        """All positive divisors, sorted ascending."""
        divs = [1]
        for p, k in self.factors:
            divs = [d * p**i for d in divs for i in range(k + 1)]
        return sorted(divs)


def _brent_rho(n: int, budget: int) -> int:
    """One nontrivial factor of odd composite n; deterministic schedule."""
    iters = 0
    for attempt in range(64):
        y = 2 + attempt
        c = 1 + attempt
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            iters += r
            if iters > budget:
                raise FactorizationLimitError(
                    f"rho budget {budget} exhausted while factoring {n}"
                )
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                iters += 1
                if iters > budget:
                    raise FactorizationLimitError(
                        f"rho budget {budget} exhausted while factoring {n}"
                    )
        if g != n:
            return g
    raise FactorizationLimitError(f"rho parameter schedule exhausted on {n}")


def factorize(n: int, config: RunConfig | None = None) -> Factorization:
    """Full factorization; raises FactorizationLimitError rather than hanging."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    cfg = config or DEFAULT_CONFIG
    found: dict[int, int] = {}
    probable: set[int] = set()
    m = n
    for p in _primes_upto(min(cfg.trial_bound, math.isqrt(n) + 1)):
        if p * p > m or p > cfg.trial_bound:
            break
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    if m > 1:
        stack = [m]
        while stack:
            x = stack.pop()
            if is_prime(x):
                if not primality_is_proved(x):
                    probable.add(x)
                found[x] = found.get(x, 0) + 1
                continue
            d = _brent_rho(x, cfg.rho_budget)
            stack.append(d)
            stack.append(x // d)
    # merge repeated prime hits from the stack phase
    merged: dict[int, int] = {}
    rest = n
    for p in sorted(found):
        k = 0
        while rest % p == 0:
            rest //= p
            k += 1
        merged[p] = k
    return Factorization(
        value=n,
        factors=tuple(sorted(merged.items())),
        probable=tuple(sorted(probable)),
    )


def carmichael(fac: Factorization) -> int:
    """Carmichael value (exponent of the unit group) from a factorization."""
    lam = 1
    for p, k in fac.factors:
        if p == 2:
            block = 1 if k == 1 else (2 if k == 2 else 1 << (k - 2))
        else:
            block = p ** (k - 1) * (p - 1)
        lam = math.lcm(lam, block)
    return lam


def euler_phi(n: int, config: RunConfig | None = None) -> int:
    phi = 1
    for p, k in factorize(n, config).factors:
        phi *= p ** (k - 1) * (p - 1)
    return phi


def multiplicative_order(b: int, t: int, config: RunConfig | None = None) -> int:
    """Minimal alpha >= 1 with b**alpha ≡ 1 (mod t).

    Computed by stripping prime factors off the Carmichael value, so the cost
    is factoring t (and its Carmichael value), not walking the whole order.
    """
    if t < 1:
        raise DomainError(f"modulus must be positive, got {t}")
    if t == 1:
        return 1
    if math.gcd(b, t) != 1:
        raise NotCoprimeError(f"gcd({b}, {t}) > 1; order undefined")
    lam = carmichael(factorize(t, config))
    order = lam
    for p, _ in factorize(lam, config).factors:
        while order % p == 0 and pow(b, order // p, t) == 1:
            order //= p
    return order


@dataclass(frozen=True)
class OrderProfile:
    """Order of `base` mod `modulus` together with the modulus factorization."""

    base: int
    modulus: int
    order: int
    factorization: Factorization = field(repr=False)


def order_profile(base: int, modulus: int, config: RunConfig | None = None) -> OrderProfile:
    fac = factorize(modulus, config)
    return OrderProfile(
        base=base,
        modulus=modulus,
        order=multiplicative_order(base, modulus, config),
        factorization=fac,
    )


def order_plateau(b: int, p: int, config: RunConfig | None = None) -> int:
    """Largest k such that b has the same order mod p**k as mod p.

    Equals the p-adic valuation of b**ord - 1 where ord is the order of b
    mod p; evaluated by modular exponentiation mod growing prime powers,
    which decides p**k | b**ord - 1 without forming the big integer.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if math.gcd(b, p) != 1:
        raise NotCoprimeError(f"gcd({b}, {p}) > 1")
    ord_p = multiplicative_order(b, p, config)
    k = 1
    while pow(b, ord_p, p ** (k + 1)) == 1:
        k += 1
    return k


def order_mod_prime_power(b: int, p: int, k: int, config: RunConfig | None = None) -> int:
    """Order of b mod p**k: constant up to the plateau, then scales by p each step."""
    if k < 1:
        raise DomainError(f"exponent must be >= 1, got {k}")
    ell = order_plateau(b, p, config)
    ord_p = multiplicative_order(b, p, config)
    if k <= ell:
        return ord_p
    return p ** (k - ell) * ord_p


def order_of_composite(b: int, fac: Factorization, config: RunConfig | None = None) -> int:
    """Order of b mod fac.value composed from the per-prime data.

    With L = lcm of the per-prime orders and l_i the p_i-adic valuation of L,
    the order is L times prod p_i**max(k_i - plateau_i - l_i, 0).
    """
    if fac.value == 1:
        return 1
    if math.gcd(b, fac.value) != 1:
        raise NotCoprimeError(f"gcd({b}, {fac.value}) > 1")
    orders = {p: multiplicative_order(b, p, config) for p, _ in fac.factors}
    lcm_orders = math.lcm(*orders.values())
    result = lcm_orders
    for p, k in fac.factors:
        l_i = 0
        m = lcm_orders
        while m % p == 0:
            m //= p
            l_i += 1
        excess = k - order_plateau(b, p, config) - l_i
        if excess > 0:
            result *= p**excess
    return result


def order_of_base_power(b: int, r: int, t: int, config: RunConfig | None = None) -> int:
    """Order of b**r mod t, via ord(b) / gcd(ord(b), r)."""
    if r < 1:
        raise DomainError(f"power must be >= 1, got {r}")
    o = multiplicative_order(b, t, config)
    return o // math.gcd(o, r)


def order_plateau_pow2(r: int, p: int, config: RunConfig | None = None) -> int:
    """Plateau of base 2**r at odd prime p: write r = p**k * s with p ∤ s,
    then the plateau is (plateau of base 2) + k."""
    if r < 1:
        raise DomainError(f"power must be >= 1, got {r}")
    if p == 2 or not is_prime(p):
        raise NotPrimeError(f"{p} must be an odd prime")
    k = 0
    while r % p == 0:
        r //= p
        k += 1
    return order_plateau(2, p, config) + k
