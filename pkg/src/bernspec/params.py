"""Spectral-pair parameters and the exact rational envelope of the attractor.

The pair is determined by a digit count N >= 2 and a contraction cofactor
q >= 2; the base is b = q*N.  The measure digits are D = {0, ..., N-1} (scaled
by q) and the frequency digits are C = (-N/2, N/2] ∩ Z, the centered complete
residue system mod N.  All endpoint arithmetic is exact rational: lattice
membership decisions must be bit-exact, so no floats appear here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "PairParams",
    "RationalInterval",
    "make_params",
    "attractor_envelope",
    "signed_mod",
]


@dataclass(frozen=True)
class PairParams:
    """Immutable parameter tuple (N, q, b=q*N, D, C); safe to share across workers."""

    N: int
    q: int
    b: int
    digits_d: tuple[int, ...]
    digits_c: tuple[int, ...]

    def digit_for_residue(self, r: int) -> int:
        """The unique c in C with c ≡ r (mod N)."""
        r %= self.N
        return r if r <= self.N // 2 else r - self.N

    @property
    def c_min(self) -> int:
        return self.digits_c[0]

    @property
    def c_max(self) -> int:
        return self.digits_c[-1]


@dataclass(frozen=True)
class RationalInterval:
    """Exact rational interval with open/closed endpoint flags."""

    lo: Fraction
    hi: Fraction
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        if self.lo > self.hi:
            raise DomainError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    def integer_bounds(self) -> tuple[int, int]:
        """Smallest and largest integers inside the interval.

        Returns (lo_int, hi_int); lo_int > hi_int means no integer lies inside.
        """
        lo_int = -((-self.lo.numerator) // self.lo.denominator)  # ceil
        if self.lo_open and lo_int == self.lo:
            lo_int += 1
        hi_int = self.hi.numerator // self.hi.denominator  # floor
        if self.hi_open and hi_int == self.hi:
            hi_int -= 1
        return lo_int, hi_int

    def contains(self, x: Fraction | int) -> bool:
        if self.lo_open:
            if not self.lo < x:
                return False
        elif not self.lo <= x:
            return False
        if self.hi_open:
            return x < self.hi
        return x <= self.hi

    def has_nonzero_integer(self) -> bool:
        lo_int, hi_int = self.integer_bounds()
        if lo_int > hi_int:
            return False
        return not (lo_int == 0 and hi_int == 0)

    def scaled(self, k: int) -> "RationalInterval":
        if k < 0:
            raise DomainError("scale factor must be nonnegative")
        return RationalInterval(self.lo * k, self.hi * k, self.lo_open, self.hi_open)


def make_params(N: int, q: int) -> PairParams:
    """Validate (N, q) and build the parameter tuple.

    N = 1 is rejected: C degenerates to {0} and the scaling question is
    vacuous for the resulting Dirac-type measure.
    """
    if not isinstance(N, int) or not isinstance(q, int):
        raise DomainError("N and q must be integers")
    if N < 2:
        raise DomainError(f"digit count N must be >= 2, got {N}")
    if q < 2:
        raise DomainError(f"contraction cofactor q must be >= 2, got {q}")
    c_lo = -((N - 1) // 2)
    c_hi = N // 2
    digits_c = tuple(range(c_lo, c_hi + 1))
    return PairParams(
        N=N,
        q=q,
        b=q * N,
        digits_d=tuple(range(N)),
        digits_c=digits_c,
    )


def attractor_envelope(params: PairParams, t: int) -> RationalInterval:
    """Exact hull [t*min(C)/(b-1), t*max(C)/(b-1)] of the scaled attractor.

    Every point of the attractor, hence every witness value, lies inside.
    Scales linearly in t.
    """
    if t < 1:
        raise DomainError(f"scaling t must be >= 1, got {t}")
    den = params.b - 1
    return RationalInterval(Fraction(t * params.c_min, den), Fraction(t * params.c_max, den))


def signed_mod(a: int, t: int) -> int:
    """Reduce a modulo t into the centered window (-t/2, t/2].

    This representative convention is used by every module that reduces
    residues (group walks, orbit computations).
    """
    r = a % t
    if 2 * r > t:
        r -= t
    return r
