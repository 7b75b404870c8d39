"""Eigenvalue multiplicities for representations of cyclic groups.

A representation of Z/n over a large enough field splits into eigenlines
for a fixed generator, with eigenvalues n-th roots of unity; the
multiplicity vector (m_0, ..., m_{n-1}) records how many lines carry each
eigenvalue exponent.  Integer-valued characters correspond exactly to
vectors constant on gcd classes, and for those the stacking construction
below produces G-sets E and I with  V + perm(E) = perm(I)  at the level of
multiplicities.

All arithmetic is exact: the inverse discrete Fourier transform runs over
a prime field F_q with q = 1 (mod n), and characters of gcd-constant
vectors are evaluated with Ramanujan sums over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import DomainError
from .rings import is_prime

INJECTIVITY_N_BOUND = 12
INJECTIVITY_SIZE_BOUND = 8


@dataclass(frozen=True)
class MultiplicityVector:
    """Eigenvalue multiplicities of a Z/n representation for a fixed
    generator; m[k] counts eigenlines with eigenvalue exponent k."""

    n: int
    m: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or len(self.m) != self.n:
            raise DomainError("multiplicity vector must have length n")
        if any(v < 0 for v in self.m):
            raise DomainError("multiplicities must be nonnegative")

    @property
    def dimension(self) -> int:
        return sum(self.m)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def moebius(n: int) -> int:
    if n == 1:
        return 1
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def ramanujan_sum(d: int, j: int) -> int:
    """Sum of e(jt/d) over t coprime to d, as an exact integer."""
    g = gcd(j, d)
    reduced = d // g
    phi_reduced = euler_phi(reduced)
    return moebius(reduced) * euler_phi(d) // phi_reduced


def orbit_eigenvalue_profile(n: int, s: int) -> list[int]:
    """Eigenvalue multiplicities of the permutation representation of a
    single Z/n orbit of size s: one line for each exponent k with
    k*s = 0 (mod n)."""
    if n % s != 0:
        raise DomainError(f"orbit size {s} does not divide {n}")
    profile = [0] * n
    step = n // s
    for i in range(s):
        profile[i * step] = 1
    return profile


def has_integer_traces(mv: MultiplicityVector) -> bool:
    """True iff the multiplicity depends only on gcd(k, n), which is
    equivalent to every trace value being a rational integer."""
    by_gcd: dict[int, int] = {}
    for k, value in enumerate(mv.m):
        g = gcd(k, mv.n)
        if by_gcd.setdefault(g, value) != value:
            return False
    return True


def character_of_multiplicities(mv: MultiplicityVector) -> list[int]:
    """Exact integer character of a gcd-constant multiplicity vector,
    evaluated with Ramanujan sums (no floating point, no cyclotomics)."""
    if not has_integer_traces(mv):
        raise DomainError("character is not integer-valued")
    n = mv.n
    # Eigenvalue exponents of order exactly d all carry the same
    # multiplicity; read it off at the canonical exponent (n // d) mod n.
    weight_by_order = {d: mv.m[(n // d) % n] for d in divisors(n)}
    return [sum(weight_by_order[d] * ramanujan_sum(d, j) for d in divisors(n))
            for j in range(n)]


def _smallest_ntt_prime(n: int, dimension: int) -> int:
    q = max(2 * dimension + 1, 2)
    while True:
        if q % n == 1 % n and is_prime(q):
            return q
        q += 1


def _primitive_root_of_unity(n: int, q: int) -> int:
    if n == 1:
        return 1
    prime_factors = {p for p in range(2, n + 1) if n % p == 0 and is_prime(p)}
    for c in range(2, q):
        omega = pow(c, (q - 1) // n, q)
        if omega == 1:
            continue
        if all(pow(omega, n // p, q) != 1 for p in prime_factors):
            return omega
    raise DomainError(f"no primitive {n}-th root of unity mod {q}")


def multiplicities_from_character(chi: Sequence[int]) -> MultiplicityVector:
    """Invert the character of a Z/n representation to its multiplicity
    vector, exactly.

    The inverse DFT runs over the smallest prime field F_q with q = 1
    (mod n) and q > 2 * dimension; residues are lifted symmetrically and
    the candidate is validated by reconstructing the character with
    Ramanujan sums.  Raises DomainError when chi is not the character of
    an actual representation.
    """
    chi = [int(v) for v in chi]
    n = len(chi)
    if n < 1:
        raise DomainError("character must have positive length")
    dimension = chi[0]
    if dimension < 0:
        raise DomainError("dimension (value at the identity) must be >= 0")

    q = _smallest_ntt_prime(n, dimension)
    omega_inv = pow(_primitive_root_of_unity(n, q), q - 2, q)
    n_inv = pow(n % q, q - 2, q)
    lifted = []
    for k in range(n):
        residue = n_inv * sum(chi[j] * pow(omega_inv, (j * k) % n, q)
                              for j in range(n)) % q
        value = residue if residue <= q // 2 else residue - q
        if value < 0:
            raise DomainError(
                f"multiplicity m[{k}] lifts to the negative value {value}; "
                "input is not the character of a representation")
        if value > dimension:
            raise DomainError(
                f"multiplicity m[{k}] = {value} exceeds the dimension; "
                "input is not the character of a representation")
        lifted.append(value)

    if sum(lifted) != dimension:
        raise DomainError("multiplicities do not sum to the dimension; "
                          "input is not the character of a representation")
    candidate = MultiplicityVector(n, tuple(lifted))
    if not has_integer_traces(candidate) or \
            character_of_multiplicities(candidate) != chi:
        raise DomainError("character does not come from a representation "
                          "with integer traces")
    return candidate


def construct_E_I(mv: MultiplicityVector) -> tuple[list[int], list[int]]:
    """Orbit-size multisets E and I with m + profile(E) = profile(I).

    Peels off the largest eigenvalue order d: with a lines at each
    primitive d-th exponent, a copies of each orbit of size d/p (p prime
    dividing d) go to E and a copies of the size-d orbit go to I, after
    which no exponent of order d survives; recurse on what remains.
    """
    if not has_integer_traces(mv):
        raise DomainError("multiplicities must be constant on gcd classes")
    n = mv.n
    work = list(mv.m)
    e_sizes: list[int] = []
    i_sizes: list[int] = []
    while True:
        support = [k for k, v in enumerate(work) if v > 0]
        if not support:
            break
        d = max(n // gcd(k, n) for k in support)
        if d == 1:
            i_sizes.extend([1] * work[0])
            work[0] = 0
            continue
        a = work[n // d]
        prime_divisors = [p for p in range(2, d + 1)
                          if d % p == 0 and is_prime(p)]
        for p in prime_divisors:
            size = d // p
            e_sizes.extend([size] * a)
            for k, v in enumerate(orbit_eigenvalue_profile(n, size)):
                work[k] += a * v
        i_sizes.extend([d] * a)
        for k, v in enumerate(orbit_eigenvalue_profile(n, d)):
            work[k] -= a * v
        if any(v < 0 for v in work):
            raise DomainError("internal error: negative multiplicity while "
                              "peeling eigenvalue orders")
    return sorted(e_sizes), sorted(i_sizes)


def total_profile(n: int, sizes: Sequence[int]) -> list[int]:
    """Summed eigenvalue profile of a disjoint union of orbits."""
    profile = [0] * n
    for s in sizes:
        for k, v in enumerate(orbit_eigenvalue_profile(n, s)):
            profile[k] += v
    return profile


def _orbit_character(n: int, s: int) -> tuple[int, ...]:
    """Fixed points of each power of the generator on one orbit of size s."""
    return tuple(s if j % s == 0 else 0 for j in range(n))


def cyclic_injectivity_check(n: int, max_size: int) -> bool:
    """Exhaustively confirm that equal permutation characters of Z/n-sets
    up to the size bound force equal orbit multisets."""
    if n > INJECTIVITY_N_BOUND:
        raise DomainError(f"bounded at n = {INJECTIVITY_N_BOUND}")
    if max_size > INJECTIVITY_SIZE_BOUND:
        raise DomainError(f"bounded at size {INJECTIVITY_SIZE_BOUND}")
    sizes = divisors(n)
    orbit_chars = {s: _orbit_character(n, s) for s in sizes}
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for multiset in _orbit_multisets(sizes, max_size):
        char = tuple(sum(orbit_chars[s][j] for s in multiset)
                     for j in range(n))
        if seen.setdefault(char, multiset) != multiset:
            return False
    return True


def _orbit_multisets(sizes: Sequence[int], budget: int,
                     start: int = 0) -> list[tuple[int, ...]]:
    result = [tuple()]
    for i in range(start, len(sizes)):
        if sizes[i] <= budget:
            for rest in _orbit_multisets(sizes, budget - sizes[i], i):
                result.append((sizes[i],) + rest)
    return result
