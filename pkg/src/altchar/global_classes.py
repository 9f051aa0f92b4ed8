"""Global conjugacy classes: classes whose centralizer subgroup is global.

A class is global when inducing the trivial representation of the
centralizer of one of its elements up to the whole group hits every
irreducible.  By Frobenius reciprocity the multiplicity of an irreducible
chi is (1/|Z|) * sum of chi over the centralizer Z, so the brute-force
check is a character sum over Z.

Two routes to that sum are implemented.  The explicit route builds the
centralizer elements from its generators (one rotation per cycle, block
swaps between equal-length cycles) and resolves split classes per element;
it is exact on the radical level and is the reference. The distribution
route never touches elements: the centralizer is a direct product of
wreath products C_l wr S_k, whose cycle-type distribution has a classical
combinatorial description, and whenever the centralizer is not contained
in the alternating group the two halves of every split class are hit
equally often, so character sums only need cycle types.  The distribution
route therefore covers exactly the types whose centralizer contains an odd
permutation, which includes every type that the explicit route's size
guard rejects.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations as iter_permutations
from itertools import product as iter_product

from .characters import (
    TAG_NONE,
    TAG_PLUS,
    TAG_MINUS,
    AnClass,
    AnIrrep,
    an_irreps,
    class_splits,
    in_alternating,
    an_character,
    mn_character,
)
from .partitions import (
    Partition,
    centralizer_order_sn,
    check_partition,
    format_partition,
    partitions,
)
from . import perms

BRUTE_FORCE_BOUND = 11
_EXPLICIT_LIMIT = 250_000

_GLOBAL_EXCEPTIONS = {(3, 1), (3, 3), (5, 3), (3, 3, 1, 1)}


def qualifies(mu: Partition) -> bool:
    """Hypothesis of the classification: >= 2 parts, all odd, none thrice."""
    mu = check_partition(mu)
    if len(mu) < 2 or any(p % 2 == 0 for p in mu):
        return False
    return max(Counter(mu).values()) <= 2


@dataclass(frozen=True)
class GlobalVerdict:
    """Outcome of a global-class query."""

    mu: Partition
    is_global: bool | None  # None: outside the classified family
    rule: str
    method: str
    witness: tuple[str, int] | None = None  # least-hit irreducible, multiplicity

    def json_dict(self) -> dict:
        return {
            "mu": format_partition(self.mu),
            "n": sum(self.mu),
            "is_global": self.is_global,
            "rule": self.rule,
            "method": self.method,
            "witness": None
            if self.witness is None
            else {"irrep": self.witness[0], "multiplicity": self.witness[1]},
        }


def is_global_class(mu: Partition) -> GlobalVerdict:
    """Closed-form verdict; is_global is None outside the classified family."""
    mu = check_partition(mu)
    if not in_alternating(mu):
        raise ValueError(f"cycle type {mu} is odd, not an alternating class")
    if not qualifies(mu):
        return GlobalVerdict(mu, None, "global:out-of-scope", "closed-form")
    if mu in _GLOBAL_EXCEPTIONS:
        return GlobalVerdict(mu, False, "global:exception-list", "closed-form")
    return GlobalVerdict(mu, True, "global:odd-none-thrice", "closed-form")


# ---------------------------------------------------------------------------
# the centralizer, explicitly


def centralizer_elements(mu: Partition, limit: int = _EXPLICIT_LIMIT) -> list[perms.Perm]:
    """All permutations commuting with standard_rep(mu), by direct product.

    Per family of k cycles of common length l the factor is C_l wr S_k:
    an independent rotation of each cycle and a permutation of the blocks.
    """
    mu = check_partition(mu)
    order = centralizer_order_sn(mu)
    if order > limit:
        raise ValueError(f"centralizer order {order} exceeds limit {limit}")
    n = sum(mu)
    blocks: dict[int, list[list[int]]] = {}
    start = 0
    for part in mu:
        blocks.setdefault(part, []).append(list(range(start, start + part)))
        start += part

    factor_choices = []
    for length, family in blocks.items():
        k = len(family)
        choices = []
        for arrangement in iter_permutations(range(k)):
            for rotations in iter_product(range(length), repeat=k):
                choices.append((family, arrangement, rotations, length))
        factor_choices.append(choices)

    out = []
    for combo in iter_product(*factor_choices):
        images = [0] * n
        for family, arrangement, rotations, length in combo:
            for j, block in enumerate(family):
                target = family[arrangement[j]]
                r = rotations[j]
                for t in range(length):
                    images[block[t]] = target[(t + r) % length]
        out.append(tuple(images))
    assert len(out) == order
    return out


def split_class_of(sigma: perms.Perm) -> str:
    """Tag of the split class containing sigma (cycle type must split)."""
    t = perms.cycle_type(sigma)
    if not class_splits(t):
        raise ValueError(f"cycle type {t} does not split")
    rho = perms.conjugator(perms.standard_rep(t), sigma)
    assert rho is not None
    return TAG_PLUS if perms.sign(rho) == 1 else TAG_MINUS


def _an_class_of(sigma: perms.Perm) -> AnClass:
    t = perms.cycle_type(sigma)
    return AnClass(t, split_class_of(sigma) if class_splits(t) else TAG_NONE)


class _QuadAccumulator:
    """Exact sum of QuadValues with mixed discriminants."""

    def __init__(self) -> None:
        self.halves = 0  # sum of the rational numerators a
        self.radical: Counter = Counter()  # D -> sum of b

    def add(self, value, times: int = 1) -> None:
        self.halves += times * value.a
        if value.b:
            self.radical[value.D] += times * value.b

    def rational_total(self) -> Fraction:
        if any(self.radical.values()):
            raise ArithmeticError(f"radical parts did not cancel: {dict(self.radical)}")
        return Fraction(self.halves, 2)


def _inner_products_explicit(mu: Partition) -> dict[AnIrrep, int]:
    n = sum(mu)
    elements = [g for g in centralizer_elements(mu) if perms.sign(g) == 1]
    by_class = Counter(_an_class_of(g) for g in elements)
    out = {}
    for rep in an_irreps(n):
        acc = _QuadAccumulator()
        for cls, count in by_class.items():
            acc.add(an_character(rep, cls), count)
        total = acc.rational_total() / len(elements)
        if total.denominator != 1 or total < 0:
            raise ArithmeticError(f"inner product not a non-negative integer: {total}")
        out[rep] = int(total)
    return out


# ---------------------------------------------------------------------------
# the centralizer, by cycle-type distribution


def _merge_types(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


@cache
def _wreath_type_distribution(length: int, k: int) -> tuple[tuple[Partition, int], ...]:
    """Cycle-type distribution of C_length wr S_k on length*k points.

    An element is a permutation pi of the k blocks with a rotation in each;
    a c-cycle of pi whose rotations sum to r contributes gcd(length, r)
    cycles of size c*length/gcd(length, r), and the number of rotation
    vectors along the c-cycle with a given sum is length**(c-1).
    """
    dist: Counter = Counter()
    for kappa in partitions(k):
        weight = math.factorial(k) // centralizer_order_sn(kappa)
        partial: Counter = Counter({(): weight})
        for c in kappa:
            per_cycle: Counter = Counter()
            for r in range(length):
                g = math.gcd(length, r)
                per_cycle[(c * length // g,) * g] += length ** (c - 1)
            merged: Counter = Counter()
            for left, wl in partial.items():
                for right, wr in per_cycle.items():
                    merged[_merge_types(left, right)] += wl * wr
            partial = merged
        dist.update(partial)
    return tuple(sorted(dist.items()))


def centralizer_type_distribution(mu: Partition) -> dict[Partition, int]:
    """How many centralizer elements of standard_rep(mu) have each cycle type."""
    mu = check_partition(mu)
    dist: Counter = Counter({(): 1})
    for length, k in sorted(Counter(mu).items()):
        merged: Counter = Counter()
        for left, wl in dist.items():
            for right, wr in _wreath_type_distribution(length, k):
                merged[_merge_types(left, right)] += wl * wr
        dist = merged
    assert sum(dist.values()) == centralizer_order_sn(mu)
    return dict(dist)


def _inner_products_distribution(mu: Partition) -> dict[AnIrrep, int]:
    """Character sums from cycle types alone.

    Valid only when the centralizer contains an odd permutation: then the
    two halves of any split class receive equally many elements, and every
    alternating character sums as half (or all) of the symmetric one.
    """
    n = sum(mu)
    if class_splits(mu):
        raise ValueError("distribution route needs an odd element in the centralizer")
    even_part = {
        t: c for t, c in centralizer_type_distribution(mu).items() if in_alternating(t)
    }
    size = sum(even_part.values())
    assert 2 * size == centralizer_order_sn(mu)
    out = {}
    for rep in an_irreps(n):
        total = 0
        for t, count in even_part.items():
            total += count * mn_character(rep.lam, t)
        if rep.tag != TAG_NONE:
            num, rem = divmod(total, 2)
            assert rem == 0
            total = num
        value, rem = divmod(total, size)
        if rem != 0 or value < 0:
            raise ArithmeticError(f"inner product not a non-negative integer: {total}/{size}")
        out[rep] = value
    return out


def an_inner_products(mu: Partition) -> tuple[dict[AnIrrep, int], str]:
    """Multiplicities of each irreducible in the induced trivial, plus the route."""
    mu = check_partition(mu)
    if not in_alternating(mu):
        raise ValueError(f"cycle type {mu} is odd, not an alternating class")
    if class_splits(mu) or centralizer_order_sn(mu) <= _EXPLICIT_LIMIT:
        return _inner_products_explicit(mu), "explicit-centralizer"
    return _inner_products_distribution(mu), "type-distribution"


def global_brute_force(mu: Partition, bound: int = BRUTE_FORCE_BOUND) -> GlobalVerdict:
    """Verdict by summing every irreducible character over the centralizer."""
    mu = check_partition(mu)
    if sum(mu) > bound:
        raise ValueError(f"brute force bounded at n={bound}; raise it explicitly if intended")
    inner, method = an_inner_products(mu)
    assert inner[AnIrrep((sum(mu),))] >= 1  # the trivial irreducible is always hit
    rep, least = min(inner.items(), key=lambda kv: (kv[1], kv[0].label()))
    return GlobalVerdict(
        mu,
        all(v >= 1 for v in inner.values()),
        "global:character-sums",
        method,
        (rep.label(), least),
    )


# ---------------------------------------------------------------------------
# the symmetric-group analogue


def sundaram_is_global_sn(mu: Partition) -> bool:
    """Closed form at the symmetric-group level: >= 2 distinct odd parts.

    (Not asserted at n = 4 or 8, which the classification excludes.)
    """
    mu = check_partition(mu)
    return len(mu) >= 2 and all(p % 2 == 1 for p in mu) and len(set(mu)) == len(mu)


def sn_global_brute_force(mu: Partition) -> bool:
    """Symmetric-group verdict via type-distribution character sums."""
    mu = check_partition(mu)
    n = sum(mu)
    dist = centralizer_type_distribution(mu)
    size = centralizer_order_sn(mu)
    for lam in partitions(n):
        total = sum(count * mn_character(lam, t) for t, count in dist.items())
        value, rem = divmod(total, size)
        if rem != 0 or value < 0:
            raise ArithmeticError("inner product not a non-negative integer")
        if value == 0:
            return False
    return True
