"""Characters of symmetric and alternating groups, held exactly.

Symmetric-group character values come from the border-strip recursion on
first-column hook lengths.  Restricting to the alternating group, the
representation of a non-self-conjugate shape stays irreducible (and equals
that of its transpose), while a self-conjugate shape splits into a plus and
a minus half; the split halves take values in Z[(1+sqrt(D))/2] for a single
discriminant D per split class, which QuadValue stores exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .partitions import (
    Partition,
    check_partition,
    conjugate,
    cycle_type_data,
    dimension,
    format_partition,
    has_distinct_odd_parts,
    is_self_conjugate,
    parse_partition,
    partitions,
    phi,
    sn_class_size,
)
from .numtheory import _squarefree_split

TAG_NONE = ""
TAG_PLUS = "+"
TAG_MINUS = "-"


def _beta_set(lam: Partition) -> tuple[int, ...]:
    k = len(lam)
    return tuple(lam[i] + k - 1 - i for i in range(k))


def _beta_to_partition(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    k = len(beta)
    lam = [beta[i] - (k - 1 - i) for i in range(k)]
    return tuple(p for p in lam if p > 0)


@cache
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    strip = mu[0]
    rest = mu[1:]
    beta = _beta_set(lam)
    present = set(beta)
    total = 0
    for b in beta:
        c = b - strip
        if c < 0 or c in present:
            continue
        height = sum(1 for x in beta if c < x < b)
        smaller = _beta_to_partition([c if x == b else x for x in beta])
        total += (-1) ** height * _mn(smaller, rest)
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """Symmetric-group character value of shape lam at cycle type mu.

    >>> mn_character((2, 2), (3, 1))
    -1
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"sizes differ: |{lam}| != |{mu}|")
    return _mn(lam, mu)


# ---------------------------------------------------------------------------
# labels for alternating-group classes and irreducibles


def in_alternating(mu: Partition) -> bool:
    """True when permutations of cycle type mu are even."""
    mu = check_partition(mu)
    return sum(1 for p in mu if p % 2 == 0) % 2 == 0


def class_splits(mu: Partition) -> bool:
    """True when the symmetric-group class of type mu splits in two."""
    mu = check_partition(mu)
    return sum(mu) >= 2 and has_distinct_odd_parts(mu)


def irrep_splits(lam: Partition) -> bool:
    """True when the restriction of shape lam splits in two."""
    lam = check_partition(lam)
    return sum(lam) >= 2 and is_self_conjugate(lam)


def _parse_tag(label: str) -> tuple[Partition, str]:
    body, sep, tag = label.partition(":")
    mu = parse_partition(body)
    if not sep:
        return mu, TAG_NONE
    if tag not in (TAG_PLUS, TAG_MINUS):
        raise ValueError(f"bad split tag in {label!r}; expected ':+' or ':-'")
    return mu, tag


@dataclass(frozen=True)
class AnClass:
    """Conjugacy class of an alternating group: cycle type plus split tag.

    The tag is "+"/"-" exactly when the class splits, else "".  The plus
    class is the one containing standard_rep(mu).
    """

    mu: Partition
    tag: str = TAG_NONE

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", check_partition(self.mu))
        if not in_alternating(self.mu):
            raise ValueError(f"cycle type {self.mu} is odd, not an alternating class")
        if class_splits(self.mu):
            if self.tag not in (TAG_PLUS, TAG_MINUS):
                raise ValueError(f"class {self.mu} splits; a ':+' or ':-' tag is required")
        elif self.tag != TAG_NONE:
            raise ValueError(f"class {self.mu} does not split; no tag allowed")

    @property
    def n(self) -> int:
        return sum(self.mu)

    def size(self) -> int:
        full = sn_class_size(self.mu)
        return full // 2 if self.tag else full

    def label(self) -> str:
        return format_partition(self.mu) + (f":{self.tag}" if self.tag else "")

    @staticmethod
    def from_label(label: str) -> "AnClass":
        mu, tag = _parse_tag(label)
        return AnClass(mu, tag)


@dataclass(frozen=True)
class AnIrrep:
    """Irreducible of an alternating group.

    A whole (unsplit) irreducible is stored by the lexicographically larger
    of the shape and its transpose; split halves carry a "+" or "-" tag and
    a self-conjugate shape.
    """

    lam: Partition
    tag: str = TAG_NONE

    def __post_init__(self) -> None:
        lam = check_partition(self.lam)
        if self.tag == TAG_NONE:
            object.__setattr__(self, "lam", max(lam, conjugate(lam)))
            if irrep_splits(lam):
                raise ValueError(f"shape {lam} is self-conjugate; a ':+' or ':-' tag is required")
        elif self.tag in (TAG_PLUS, TAG_MINUS):
            object.__setattr__(self, "lam", lam)
            if not irrep_splits(lam):
                raise ValueError(f"shape {lam} does not split; no tag allowed")
        else:
            raise ValueError(f"bad tag {self.tag!r}")

    @property
    def n(self) -> int:
        return sum(self.lam)

    def dim(self) -> int:
        d = dimension(self.lam)
        if self.tag:
            assert d % 2 == 0
            return d // 2
        return d

    def label(self) -> str:
        return format_partition(self.lam) + (f":{self.tag}" if self.tag else "")

    @staticmethod
    def from_label(label: str) -> "AnIrrep":
        lam, tag = _parse_tag(label)
        return AnIrrep(lam, tag)


def an_classes(n: int) -> tuple[AnClass, ...]:
    """Conjugacy classes of the alternating group on n points."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = []
    for mu in partitions(n):
        if not in_alternating(mu):
            continue
        if class_splits(mu):
            out.append(AnClass(mu, TAG_PLUS))
            out.append(AnClass(mu, TAG_MINUS))
        else:
            out.append(AnClass(mu))
    return tuple(out)


def an_irreps(n: int) -> tuple[AnIrrep, ...]:
    """Irreducibles of the alternating group on n points."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = []
    for lam in partitions(n):
        if irrep_splits(lam):
            out.append(AnIrrep(lam, TAG_PLUS))
            out.append(AnIrrep(lam, TAG_MINUS))
        elif lam >= conjugate(lam):
            out.append(AnIrrep(lam))
    return tuple(out)


# ---------------------------------------------------------------------------
# exact character values


@dataclass(frozen=True)
class QuadValue:
    """Exact value (a + b*sqrt(D))/2 with D a squarefree signed integer.

    D == 0 exactly when b == 0; negative D means b*i*sqrt(|D|).  Addition
    and multiplication stay in the lattice for a fixed D; products that
    would leave it raise.
    """

    a: int
    b: int
    D: int

    def __post_init__(self) -> None:
        if self.D == 1:  # perfect-square radicand: fold into the rational part
            object.__setattr__(self, "a", self.a + self.b)
            object.__setattr__(self, "b", 0)
        if self.b == 0:
            object.__setattr__(self, "D", 0)
        elif self.D == 0:
            raise ValueError("a nonzero radical part needs a discriminant")

    @staticmethod
    def whole(k: int) -> "QuadValue":
        return QuadValue(2 * k, 0, 0)

    @staticmethod
    def half(k: int) -> "QuadValue":
        return QuadValue(k, 0, 0)

    def __add__(self, other: "QuadValue") -> "QuadValue":
        if self.b and other.b and self.D != other.D:
            raise ValueError("cannot add values with different discriminants")
        return QuadValue(self.a + other.a, self.b + other.b, self.D or other.D)

    def __neg__(self) -> "QuadValue":
        return QuadValue(-self.a, -self.b, self.D)

    def __sub__(self, other: "QuadValue") -> "QuadValue":
        return self + (-other)

    def __mul__(self, other: "QuadValue") -> "QuadValue":
        if self.b and other.b and self.D != other.D:
            raise ValueError("cannot multiply values with different discriminants")
        D = self.D or other.D
        a2, ra = divmod(self.a * other.a + self.b * other.b * D, 2)
        b2, rb = divmod(self.a * other.b + self.b * other.a, 2)
        if ra or rb:
            raise ValueError(f"product of {self} and {other} leaves the half-lattice")
        return QuadValue(a2, 0 if b2 == 0 else b2, 0 if b2 == 0 else D)

    def galois_conjugate(self) -> "QuadValue":
        return QuadValue(self.a, -self.b, self.D)

    def complex_conjugate(self) -> "QuadValue":
        return self.galois_conjugate() if self.D < 0 else self

    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return Fraction(self.a, 2)

    def __complex__(self) -> complex:
        root = math.sqrt(abs(self.D)) * (1j if self.D < 0 else 1)
        return complex(self.a + self.b * root) / 2

    def json_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "D": self.D}

    def __str__(self) -> str:
        if self.is_rational():
            return str(Fraction(self.a, 2))
        root = f"sqrt({self.D})" if abs(self.b) == 1 else f"{abs(self.b)}*sqrt({self.D})"
        sign = "-" if self.b < 0 else ("+" if self.a else "")
        lead = str(self.a) if self.a else ""
        body = f"{lead}{sign}{root}"
        return f"({body})/2" if self.a else f"{body}/2"


def an_character(rep: AnIrrep, cls: AnClass) -> QuadValue:
    """Exact character value of an alternating-group irreducible.

    On a whole irreducible the value is the symmetric-group value of the
    stored shape.  A split half takes (eps +- sqrt(eps*M))/2 on the two
    classes of its own hook type (plus sign when the tags agree), and half
    the symmetric-group value everywhere else.
    """
    if rep.n != cls.n:
        raise ValueError("size mismatch between irreducible and class")
    if rep.tag == TAG_NONE:
        return QuadValue.whole(mn_character(rep.lam, cls.mu))
    if cls.tag and phi(cls.mu) == rep.lam:
        data = cycle_type_data(cls.mu)
        eps = data.epsilon
        assert eps is not None
        root, core = _squarefree_split(data.M)
        b = root if rep.tag == cls.tag else -root
        return QuadValue(eps, b, eps * core)
    return QuadValue.half(mn_character(rep.lam, cls.mu))


@dataclass(frozen=True)
class CharacterTable:
    """Full character table of an alternating group, exact values."""

    n: int
    irreps: tuple[AnIrrep, ...]
    classes: tuple[AnClass, ...]
    values: tuple[tuple[QuadValue, ...], ...]

    def value(self, rep: AnIrrep, cls: AnClass) -> QuadValue:
        return self.values[self.irreps.index(rep)][self.classes.index(cls)]

    def group_order(self) -> int:
        return max(math.factorial(self.n) // 2, 1)

    def json_dict(self) -> dict:
        return {
            "n": self.n,
            "irreps": [r.label() for r in self.irreps],
            "dims": [r.dim() for r in self.irreps],
            "classes": [c.label() for c in self.classes],
            "sizes": [c.size() for c in self.classes],
            "values": [[v.json_dict() for v in row] for row in self.values],
        }


TABLE_BOUND = 14


def character_table_an(n: int, bound: int = TABLE_BOUND) -> CharacterTable:
    if n > bound:
        raise ValueError(f"n={n} exceeds the table bound {bound}; raise it explicitly if intended")
    reps = an_irreps(n)
    classes = an_classes(n)
    assert len(reps) == len(classes)
    values = tuple(tuple(an_character(r, c) for c in classes) for r in reps)
    return CharacterTable(n, reps, classes, values)
