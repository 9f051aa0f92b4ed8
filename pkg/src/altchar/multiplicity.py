"""Eigenvalue multiplicities of permutation representatives, exactly.

Fix w of cycle type mu, of order m, acting in an irreducible.  The
multiplicity of the eigenvalue zeta_m^i is the discrete Fourier
coefficient

    a_i = (1/m) * sum over j mod m of chi(w^j) * zeta_m^(-i*j).

Since chi(w^j) depends on j only through gcd(j, m), the sum collapses to
divisors of m weighted by Ramanujan sums; that is the production path.
A slower independent oracle reduces the same data modulo a cyclotomic
polynomial instead.

For a split class (distinct odd parts) the plus and minus halves of the
self-conjugate shape of matching hook type differ by a bias d_i, which has
a closed form in terms of Gauss sums; bias() evaluates it exactly and
bias_oracle() recomputes the defining sum in floating point.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .characters import TAG_NONE, AnClass, AnIrrep, mn_character
from .numtheory import (
    divisors,
    jacobi,
    p_adic_split,
    phase,
    phase_product,
    phase_to_integer,
    gauss_sum,
    ramanujan,
    sqrt_phase,
)
from .partitions import (
    Partition,
    check_partition,
    cycle_type_data,
    format_partition,
    has_distinct_odd_parts,
    phi,
)
from . import perms


class InternalCheckError(AssertionError):
    """An identity that must hold by construction failed; indicates a bug."""


def power_cycle_type(mu: Partition, d: int) -> Partition:
    """Cycle type of the d-th power, computed part by part.

    A part splits into gcd(part, d) cycles of length part/gcd(part, d).

    >>> power_cycle_type((15, 9, 3), 3)
    (5, 3, 3, 3, 1, 1, 1)
    """
    mu = check_partition(mu)
    parts: list[int] = []
    for p in mu:
        g = math.gcd(p, d)
        parts.extend([p // g] * g)
    return tuple(sorted(parts, reverse=True))


def order_of_type(mu: Partition) -> int:
    mu = check_partition(mu)
    return math.lcm(*mu) if mu else 1


def sn_multiplicity(lam: Partition, mu: Partition, i: int) -> int:
    """Multiplicity of zeta_m^i as an eigenvalue of w_mu in the shape lam."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("sizes differ")
    m = order_of_type(mu)
    total = 0
    for d in divisors(m):
        total += mn_character(lam, power_cycle_type(mu, d)) * ramanujan(m // d, i)
    q, r = divmod(total, m)
    if r != 0 or q < 0:
        raise InternalCheckError(f"non-integral multiplicity for {lam} at {mu}, i={i}")
    return q


@dataclass(frozen=True)
class MultiplicityVector:
    """All m eigenvalue multiplicities of one representative in one irreducible."""

    owner: tuple[str, str]  # (irreducible label, class or type label)
    m: int
    entries: tuple[int, ...]

    def json_dict(self) -> dict:
        return {
            "irrep": self.owner[0],
            "class": self.owner[1],
            "m": self.m,
            "entries": list(self.entries),
        }


def sn_multiplicity_vector(lam: Partition, mu: Partition) -> MultiplicityVector:
    m = order_of_type(check_partition(mu))
    entries = tuple(sn_multiplicity(lam, mu, i) for i in range(m))
    return MultiplicityVector((format_partition(lam), format_partition(mu)), m, entries)


# ---------------------------------------------------------------------------
# independent oracle: reduce modulo a cyclotomic polynomial


def _poly_trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (ascending coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c, r = divmod(num[k + len(den) - 1], den[-1])
        assert r == 0
        out[k] = c
        for j, dj in enumerate(den):
            num[k + j] -= c * dj
    assert all(c == 0 for c in num)
    return out


@cache
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, ascending degree.

    >>> cyclotomic_polynomial(9)
    (1, 0, 0, 1, 0, 0, 1)
    """
    if m < 1:
        raise ValueError("m must be positive")
    coeffs = [-1] + [0] * (m - 1) + [1]  # x**m - 1
    for d in divisors(m):
        if d < m:
            coeffs = _poly_divexact(coeffs, list(cyclotomic_polynomial(d)))
    return tuple(coeffs)


def sn_multiplicity_oracle(lam: Partition, mu: Partition, i: int) -> int:
    """Same multiplicity through permutation powers and cyclotomic reduction.

    Forms sum_j chi(w^j) x^(-i*j mod m) and reduces modulo the m-th
    cyclotomic polynomial; the remainder must be the constant m * a_i.
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    m = order_of_type(mu)
    w = perms.standard_rep(mu)
    coeffs = [0] * m
    current = perms.identity(sum(mu))
    for j in range(m):
        coeffs[(-i * j) % m] += mn_character(lam, perms.cycle_type(current))
        current = perms.compose(w, current)
    modulus = list(cyclotomic_polynomial(m))
    deg = len(modulus) - 1
    rem = list(coeffs)
    for k in range(len(rem) - 1, deg - 1, -1):
        c = rem[k]
        if c:
            for j, mj in enumerate(modulus):
                rem[k - deg + j] -= c * mj
    rem = _poly_trim(rem)
    if len(rem) > 1:
        raise InternalCheckError(f"non-constant cyclotomic remainder for {lam} at {mu}, i={i}")
    value = rem[0] if rem else 0
    q, r = divmod(value, m)
    if r != 0:
        raise InternalCheckError("remainder not divisible by the order")
    return q


# ---------------------------------------------------------------------------
# bias between the split halves


@dataclass(frozen=True)
class PrimeCondition:
    """Local data at one prime: i == u * p**d mod p**f, and whether it passes.

    Odd-exponent primes pass only at d == f-1; even-exponent primes pass at
    d == f-1 and d == f.
    """

    p: int
    f: int
    d: int
    u: int
    ok: bool


@dataclass(frozen=True)
class BiasResult:
    """Closed-form bias d_i = a_i(plus half) - a_i(minus half) at one i."""

    mu: Partition
    i: int
    value: int
    abs_formula: int
    conditions: tuple[PrimeCondition, ...]

    @property
    def nonzero(self) -> bool:
        return all(c.ok for c in self.conditions)

    def json_dict(self) -> dict:
        return {
            "mu": format_partition(self.mu),
            "i": self.i,
            "value": self.value,
            "abs": self.abs_formula,
            "conditions": [
                {"p": c.p, "f": c.f, "d": c.d, "u": c.u, "ok": c.ok} for c in self.conditions
            ],
        }


def bias(mu: Partition, i: int) -> BiasResult:
    """Exact bias between the split halves at eigenvalue index i.

    The plus half is anchored to the class of standard_rep(mu); with that
    convention the local twisted-sum factors absorb a (-1|p) from the
    orientation of the defining Fourier sum, so each odd-exponent prime
    contributes p**(f-1) * (-u*m/p**f | p) * g(p).
    """
    mu = check_partition(mu)
    if not has_distinct_odd_parts(mu):
        raise ValueError(f"bias is defined for distinct odd parts only: {mu}")
    data = cycle_type_data(mu)
    assert data.epsilon is not None
    conditions = []
    for j, pd in enumerate(data.primes):
        d, u = p_adic_split(i, pd.p, pd.f)
        ok = d == pd.f - 1 if j < data.s else d in (pd.f - 1, pd.f)
        conditions.append(PrimeCondition(pd.p, pd.f, d, u, ok))
    conditions = tuple(conditions)
    if not all(c.ok for c in conditions):
        return BiasResult(mu, i % data.m, 0, 0, conditions)

    factors = [sqrt_phase(data.epsilon * data.M), phase(Fraction(1, data.m))]
    for j, (pd, cond) in enumerate(zip(data.primes, conditions)):
        if j < data.s:
            h = data.m // pd.p**pd.f
            factors.append(phase(pd.p ** (pd.f - 1) * jacobi(-cond.u * h, pd.p)))
            factors.append(gauss_sum(pd.p))
        else:
            factors.append(phase(-(pd.p ** (pd.f - 1))))
            if cond.d == pd.f:
                factors.append(phase(1 - pd.p))
    value = phase_to_integer(phase_product(factors))

    odd_core = math.prod(pd.p for pd in data.primes[: data.s])
    root = math.isqrt(data.M // odd_core)
    if root * root * odd_core != data.M:
        raise InternalCheckError("part product over odd-exponent primes is not square")
    numer = root * math.prod(
        pd.p - 1 for pd, c in zip(data.primes, conditions) if c.d == pd.f
    )
    magnitude, r = divmod(numer, math.prod(pd.p for pd in data.primes[data.s :]))
    if r != 0 or abs(value) != magnitude:
        raise InternalCheckError(f"magnitude closed form disagrees at {mu}, i={i}")
    return BiasResult(mu, i % data.m, value, magnitude, conditions)


def bias_vector(mu: Partition) -> tuple[BiasResult, ...]:
    m = order_of_type(check_partition(mu))
    return tuple(bias(mu, i) for i in range(m))


def bias_oracle(mu: Partition, i: int, tol: float = 1e-6) -> int:
    """The defining Fourier sum of the bias, evaluated numerically.

    d_i = (sqrt(eps*M)/m) * sum over l mod m of (l|M) * zeta_m^(-i*l),
    with the principal branch sqrt(-x) = i*sqrt(x).
    """
    mu = check_partition(mu)
    if not has_distinct_odd_parts(mu):
        raise ValueError("bias oracle needs distinct odd parts")
    data = cycle_type_data(mu)
    assert data.epsilon is not None
    total = 0j
    for l in range(data.m):
        total += jacobi(l, data.M) * cmath.exp(-2j * math.pi * i * l / data.m)
    z = cmath.sqrt(complex(data.epsilon * data.M)) * total / data.m
    nearest = round(z.real)
    if abs(z.imag) > tol or abs(z.real - nearest) > tol:
        raise InternalCheckError(f"bias oracle did not land on an integer: {z}")
    return nearest


# ---------------------------------------------------------------------------
# alternating-group dispatch


def an_multiplicity(rep: AnIrrep, cls: AnClass, i: int) -> int:
    """Eigenvalue multiplicity in an alternating-group irreducible.

    Whole irreducibles inherit the symmetric-group count.  A split half at
    a split class of its own hook type gets (a +- d)/2, the sign set by
    whether the irreducible and class tags agree; at every other class the
    symmetric-group count halves evenly.
    """
    if rep.n != cls.n:
        raise ValueError("size mismatch")
    a = sn_multiplicity(rep.lam, cls.mu, i)
    if rep.tag == TAG_NONE:
        return a
    if cls.tag and phi(cls.mu) == rep.lam:
        d = bias(cls.mu, i).value
        numer = a + d if rep.tag == cls.tag else a - d
    else:
        numer = a
    q, r = divmod(numer, 2)
    if r != 0 or q < 0:
        raise InternalCheckError(f"half-multiplicity failed for {rep.label()} at {cls.label()}, i={i}")
    return q


def an_multiplicity_vector(rep: AnIrrep, cls: AnClass) -> MultiplicityVector:
    m = order_of_type(cls.mu)
    entries = tuple(an_multiplicity(rep, cls, i) for i in range(m))
    return MultiplicityVector((rep.label(), cls.label()), m, entries)


def power_conjugacy(mu: Partition, i: int) -> str:
    """Whether w^i lands in the same split class as w ("same" or "swapped").

    Requires distinct odd parts and gcd(i, m) == 1; the verdict is the
    Jacobi symbol (i | M).
    """
    mu = check_partition(mu)
    if not has_distinct_odd_parts(mu):
        raise ValueError("power conjugacy concerns split classes: distinct odd parts required")
    data = cycle_type_data(mu)
    if math.gcd(i, data.m) != 1:
        raise ValueError(f"i={i} must be coprime to the order {data.m}")
    return "same" if jacobi(i, data.M) == 1 else "swapped"
