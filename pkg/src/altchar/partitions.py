"""Integer partitions, Frobenius coordinates, and cycle-type arithmetic.

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the unique partition of 0.  Functions validate their input
and raise InvalidPartitionError on malformed tuples, so downstream code
can assume canonical form.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import cache

Partition = tuple[int, ...]


class InvalidPartitionError(ValueError):
    """Raised when a sequence is not a weakly decreasing positive tuple."""


def check_partition(parts) -> Partition:
    """Return parts as a canonical partition tuple, or raise."""
    mu = tuple(parts)
    for p in mu:
        if not isinstance(p, int) or isinstance(p, bool):
            raise InvalidPartitionError(f"parts must be integers: {mu!r}")
    if any(a < b for a, b in zip(mu, mu[1:])):
        raise InvalidPartitionError(f"parts must be weakly decreasing: {mu!r}")
    if mu and mu[-1] <= 0:
        raise InvalidPartitionError(f"parts must be positive: {mu!r}")
    return mu


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated partition label like "15,9,3".

    The empty string denotes the empty partition.
    """
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise InvalidPartitionError(f"cannot parse partition {text!r}") from exc
    return check_partition(parts)


def format_partition(mu: Partition) -> str:
    """Inverse of parse_partition.

    >>> format_partition((5, 3, 1))
    '5,3,1'
    """
    return ",".join(str(p) for p in mu)


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ((),)
    out: list[Partition] = []

    def extend(remaining: int, biggest: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(biggest, remaining), 0, -1):
            prefix.append(p)
            extend(remaining - p, p, prefix)
            prefix.pop()

    extend(n, n, [])
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram.

    >>> conjugate((3, 3, 1))
    (3, 2, 2)
    """
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def is_self_conjugate(lam: Partition) -> bool:
    lam = check_partition(lam)
    return lam == conjugate(lam)


def has_distinct_odd_parts(mu: Partition) -> bool:
    mu = check_partition(mu)
    return all(p % 2 == 1 for p in mu) and len(set(mu)) == len(mu)


@dataclass(frozen=True)
class FrobeniusCoords:
    """Arm and leg lengths along the main diagonal, both strictly decreasing."""

    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.arms) != len(self.legs):
            raise InvalidPartitionError("arms and legs must have equal length")
        for seq in (self.arms, self.legs):
            if any(a <= b for a, b in zip(seq, seq[1:])):
                raise InvalidPartitionError(f"coordinates must strictly decrease: {seq}")
            if seq and seq[-1] < 0:
                raise InvalidPartitionError(f"coordinates must be non-negative: {seq}")


def to_frobenius(lam: Partition) -> FrobeniusCoords:
    """Frobenius coordinates of a partition.

    >>> to_frobenius((3, 3, 1))
    FrobeniusCoords(arms=(2, 1), legs=(2, 0))
    """
    lam = check_partition(lam)
    lamc = conjugate(lam)
    d = sum(1 for i, p in enumerate(lam) if p >= i + 1)
    arms = tuple(lam[i] - i - 1 for i in range(d))
    legs = tuple(lamc[i] - i - 1 for i in range(d))
    return FrobeniusCoords(arms, legs)


def from_frobenius(coords: FrobeniusCoords) -> Partition:
    """Partition with the given Frobenius coordinates."""
    d = len(coords.arms)
    rows = [coords.arms[i] + i + 1 for i in range(d)]
    cols = [coords.legs[j] + j + 1 for j in range(d)]
    depth = cols[0] if d else 0
    below = [sum(1 for c in cols if c >= i + 1) for i in range(d, depth)]
    return check_partition(tuple(rows + below))


def phi(mu: Partition) -> Partition:
    """The self-conjugate partition whose diagonal hook lengths are the parts of mu.

    Defined for partitions with distinct odd parts; inverse of reading off
    diagonal hooks.

    >>> phi((5, 3))
    (3, 3, 2)
    """
    mu = check_partition(mu)
    if not has_distinct_odd_parts(mu):
        raise InvalidPartitionError(f"parts must be distinct and odd: {mu}")
    arms = tuple((p - 1) // 2 for p in mu)
    return from_frobenius(FrobeniusCoords(arms, arms))


def diagonal_hooks(lam: Partition) -> tuple[int, ...]:
    """Hook lengths of the diagonal cells (i, i)."""
    lam = check_partition(lam)
    fc = to_frobenius(lam)
    return tuple(a + b + 1 for a, b in zip(fc.arms, fc.legs))


@cache
def dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    lam = check_partition(lam)
    n = sum(lam)
    lamc = conjugate(lam)
    denom = 1
    for i, row in enumerate(lam):
        for j in range(row):
            denom *= row - j + lamc[j] - i - 1
    return math.factorial(n) // denom


def centralizer_order_sn(mu: Partition) -> int:
    """Order of the centralizer in the symmetric group of a permutation of cycle type mu."""
    mu = check_partition(mu)
    z = 1
    for part, k in Counter(mu).items():
        z *= part**k * math.factorial(k)
    return z


def sn_class_size(mu: Partition) -> int:
    mu = check_partition(mu)
    return math.factorial(sum(mu)) // centralizer_order_sn(mu)


def sn_parity(mu: Partition) -> int:
    """Sign of any permutation with cycle type mu (+1 or -1)."""
    mu = check_partition(mu)
    return -1 if (sum(mu) - len(mu)) % 2 else 1


@cache
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization by trial division, ascending primes.

    >>> factorize(405)
    ((3, 4), (5, 1))
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@dataclass(frozen=True)
class PrimeData:
    """One prime of the part product: p**e divides the product, p**f the lcm."""

    p: int
    e: int
    f: int


@dataclass(frozen=True)
class CycleTypeData:
    """Multiplicative data attached to a cycle type.

    M is the product of the parts, m their least common multiple.  The
    primes are ordered with odd-exponent ones first (ascending), then
    even-exponent ones (ascending); s counts the odd-exponent primes.
    epsilon is (-1)**sum((part-1)/2), defined only when the parts are
    distinct and odd.
    """

    mu: Partition
    M: int
    m: int
    primes: tuple[PrimeData, ...]
    s: int
    epsilon: int | None


def cycle_type_data(mu: Partition) -> CycleTypeData:
    mu = check_partition(mu)
    product_expo: dict[int, int] = {}
    lcm_expo: dict[int, int] = {}
    for part in mu:
        for p, e in factorize(part):
            product_expo[p] = product_expo.get(p, 0) + e
            lcm_expo[p] = max(lcm_expo.get(p, 0), e)
    odd = sorted(p for p, e in product_expo.items() if e % 2 == 1)
    even = sorted(p for p, e in product_expo.items() if e % 2 == 0)
    primes = tuple(PrimeData(p, product_expo[p], lcm_expo[p]) for p in odd + even)
    epsilon = None
    if has_distinct_odd_parts(mu):
        epsilon = -1 if sum((p - 1) // 2 for p in mu) % 2 else 1
    return CycleTypeData(
        mu=mu,
        M=math.prod(mu),
        m=math.lcm(*mu) if mu else 1,
        primes=primes,
        s=len(odd),
        epsilon=epsilon,
    )
