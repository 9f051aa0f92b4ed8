"""Permutations of {0, ..., n-1} in one-line word form.

A permutation is a tuple ``w`` where ``w[x]`` is the image of ``x``.  This
format composes with plain indexing, so the helpers below stay tuple-in,
tuple-out and need no classes.
"""

from __future__ import annotations

import math

from .partitions import Partition, check_partition

Perm = tuple[int, ...]


def check_perm(images) -> Perm:
    w = tuple(images)
    if sorted(w) != list(range(len(w))):
        raise ValueError(f"not a permutation word: {w!r}")
    return w


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(a: Perm, b: Perm) -> Perm:
    """Permutation applying b first, then a.

    >>> compose((1, 0, 2), (0, 2, 1))
    (1, 2, 0)
    """
    if len(a) != len(b):
        raise ValueError("size mismatch")
    return tuple(a[b[x]] for x in range(len(b)))


def inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for x, y in enumerate(a):
        inv[y] = x
    return tuple(inv)


def cycles(a: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition including fixed points.

    Each cycle starts at its smallest element and follows the orbit; cycles
    are listed by increasing starting element.

    >>> cycles((1, 2, 0, 4, 3))
    [(0, 1, 2), (3, 4)]
    """
    seen = [False] * len(a)
    out = []
    for start in range(len(a)):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        x = a[start]
        while x != start:
            orbit.append(x)
            seen[x] = True
            x = a[x]
        out.append(tuple(orbit))
    return out


def cycle_type(a: Perm) -> Partition:
    return tuple(sorted((len(c) for c in cycles(a)), reverse=True))


def sign(a: Perm) -> int:
    return -1 if (len(a) - len(cycles(a))) % 2 else 1


def standard_rep(mu: Partition) -> Perm:
    """Representative of cycle type mu with cycles laid out consecutively.

    >>> standard_rep((3, 2))
    (1, 2, 0, 4, 3)
    """
    mu = check_partition(mu)
    images = list(range(sum(mu)))
    start = 0
    for part in mu:
        for off in range(part):
            images[start + off] = start + (off + 1) % part
        start += part
    return tuple(images)


def perm_power(a: Perm, k: int) -> Perm:
    """k-th power (k may be negative) computed by jumping along cycles."""
    n = len(a)
    images = [0] * n
    for orbit in cycles(a):
        size = len(orbit)
        shift = k % size
        for t, x in enumerate(orbit):
            images[x] = orbit[(t + shift) % size]
    return tuple(images)


def conjugator(a: Perm, b: Perm) -> Perm | None:
    """Some rho with rho a rho^-1 == b, or None if the cycle types differ.

    The choice is canonical: cycles of equal length are matched in the
    order produced by :func:`cycles` and aligned entry by entry.
    """
    if len(a) != len(b):
        raise ValueError("size mismatch")
    if cycle_type(a) != cycle_type(b):
        return None
    by_len_a: dict[int, list[tuple[int, ...]]] = {}
    by_len_b: dict[int, list[tuple[int, ...]]] = {}
    for c in cycles(a):
        by_len_a.setdefault(len(c), []).append(c)
    for c in cycles(b):
        by_len_b.setdefault(len(c), []).append(c)
    rho = [0] * len(a)
    for size, group in by_len_a.items():
        for ca, cb in zip(group, by_len_b[size]):
            for x, y in zip(ca, cb):
                rho[x] = y
    return check_perm(rho)


def even_conjugacy_sign(a: Perm, b: Perm) -> int:
    """Sign of the canonical conjugator from a to b (must be conjugate)."""
    rho = conjugator(a, b)
    if rho is None:
        raise ValueError("permutations are not conjugate")
    return sign(rho)


def multiplication_perm(i: int, modulus: int) -> Perm:
    """The permutation x -> i*x mod modulus on {0, ..., modulus-1}."""
    if math.gcd(i, modulus) != 1:
        raise ValueError("i must be a unit modulo the modulus")
    return tuple((i * x) % modulus for x in range(modulus))
