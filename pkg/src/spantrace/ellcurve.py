"""Elliptic curves over small finite fields: exact point counts, Frobenius
traces, and the arithmetic obstruction certificates they witness.

Counting is exhaustive (per x-coordinate with exact solution counts per
fiber), never probabilistic, so every reported number can be re-derived by
brute force.  All integers are exact Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional, Sequence

from .errors import BoundExceededError, DomainError
from .rings import is_prime

PRIME_FIELD_SIZE_BOUND = 10 ** 6
BINARY_DEGREE_BOUND = 16
CURVE_ENUMERATION_FIELD_BOUND = 50


# ---------------------------------------------------------------------------
# Finite fields


class PrimeCurveField:
    """The prime field F_l with elements 0..l-1."""

    def __init__(self, size: int) -> None:
        if not is_prime(size):
            raise DomainError(f"{size} is not prime")
        if size > PRIME_FIELD_SIZE_BOUND:
            raise BoundExceededError(
                f"prime fields bounded at {PRIME_FIELD_SIZE_BOUND}")
        self.size = size
        self.characteristic = size

    def elements(self) -> range:
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.size

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.size

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.size

    def neg(self, a: int) -> int:
        return -a % self.size

    def inv(self, a: int) -> int:
        if a % self.size == 0:
            raise DomainError("division by zero")
        return pow(a, -1, self.size)

    def convert(self, value: int) -> int:
        return value % self.size

    def spec(self) -> str:
        return str(self.size)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeCurveField) and other.size == self.size

    def __hash__(self) -> int:
        return hash(("prime", self.size))

    def __repr__(self) -> str:
        return f"PrimeCurveField({self.size})"


def _poly_mul_mod2(a: int, b: int) -> int:
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def _poly_mod(a: int, modulus: int) -> int:
    deg_m = modulus.bit_length() - 1
    while a.bit_length() - 1 >= deg_m and a:
        a ^= modulus << (a.bit_length() - 1 - deg_m)
    return a


def _poly_is_irreducible(candidate: int) -> bool:
    """Exhaustive factor check: no divisor of degree 1..deg/2."""
    degree = candidate.bit_length() - 1
    for d in range(1, degree // 2 + 1):
        for divisor in range(1 << d, 1 << (d + 1)):
            if _poly_divides(divisor, candidate):
                return False
    return True


def _poly_divides(divisor: int, candidate: int) -> bool:
    return _poly_mod(candidate, divisor) == 0


def smallest_irreducible_poly(degree: int) -> int:
    """Lexicographically smallest irreducible polynomial of the given
    degree over the 2-element field, as a coefficient bitmask."""
    if degree < 1:
        raise DomainError("degree must be positive")
    for mask in range(1 << degree, 1 << (degree + 1)):
        if _poly_is_irreducible(mask):
            return mask
    raise DomainError(f"no irreducible polynomial of degree {degree}")


class BinaryCurveField:
    """F_{2^d} with elements as polynomial bitmasks modulo an irreducible
    polynomial (the lexicographically smallest one unless overridden)."""

    def __init__(self, degree: int, modulus: Optional[int] = None) -> None:
        if degree < 1 or degree > BINARY_DEGREE_BOUND:
            raise BoundExceededError(
                f"binary fields bounded at degree {BINARY_DEGREE_BOUND}")
        if modulus is None:
            modulus = smallest_irreducible_poly(degree)
        if modulus.bit_length() - 1 != degree:
            raise DomainError("modulus degree does not match the field degree")
        if not _poly_is_irreducible(modulus):
            raise DomainError(f"modulus {bin(modulus)} is reducible")
        self.degree = degree
        self.modulus = modulus
        self.size = 1 << degree
        self.characteristic = 2

    def elements(self) -> range:
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def sub(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return _poly_mod(_poly_mul_mod2(a, b), self.modulus)

    def neg(self, a: int) -> int:
        return a

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("division by zero")
        return self.power(a, self.size - 2)

    def power(self, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def absolute_trace(self, a: int) -> int:
        """Trace to the 2-element field: sum of the d Frobenius images."""
        total = 0
        x = a
        for _ in range(self.degree):
            total ^= x
            x = self.mul(x, x)
        return total

    def convert(self, value: int) -> int:
        return _poly_mod(value, self.modulus)

    def spec(self) -> str:
        return f"2^{self.degree}:poly={poly_to_string(self.modulus)}"

    def __eq__(self, other) -> bool:
        return (isinstance(other, BinaryCurveField)
                and other.degree == self.degree
                and other.modulus == self.modulus)

    def __hash__(self) -> int:
        return hash(("binary", self.degree, self.modulus))

    def __repr__(self) -> str:
        return f"BinaryCurveField({self.degree}, modulus={bin(self.modulus)})"


def poly_to_string(mask: int) -> str:
    terms = []
    for k in range(mask.bit_length() - 1, -1, -1):
        if (mask >> k) & 1:
            terms.append("1" if k == 0 else ("x" if k == 1 else f"x{k}"))
    return "+".join(terms) if terms else "0"


def poly_from_string(text: str) -> int:
    mask = 0
    for term in text.replace(" ", "").split("+"):
        if term == "1":
            mask ^= 1
        elif term == "x":
            mask ^= 2
        elif term.startswith("x^"):
            mask ^= 1 << int(term[2:])
        elif term.startswith("x"):
            mask ^= 1 << int(term[1:])
        else:
            raise DomainError(f"cannot parse polynomial term {term!r}")
    return mask


def parse_field_spec(text: str):
    """Parse "l" (prime) or "2^d" / "2^d:poly=x3+x+1" (binary)."""
    text = text.strip()
    if text.startswith("2^"):
        body = text[2:]
        modulus = None
        if ":" in body:
            body, option = body.split(":", 1)
            if not option.startswith("poly="):
                raise DomainError(f"unrecognized field option {option!r}")
            modulus = poly_from_string(option[len("poly="):])
        degree = int(body)
        return BinaryCurveField(degree, modulus)
    size = int(text)
    if size == 2:
        return BinaryCurveField(1)
    return PrimeCurveField(size)


# ---------------------------------------------------------------------------
# Curves


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over a finite field."""

    field: object
    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    def __post_init__(self):
        f = self.field
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, f.convert(getattr(self, name)))
        if self.discriminant() == 0:
            raise DomainError("the equation is singular (zero discriminant)")

    def discriminant(self) -> int:
        # Standard b-invariant formulas for a general Weierstrass equation,
        # Silverman, The Arithmetic of Elliptic Curves, III.1.
        f = self.field
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = f.add(f.mul(a1, a1), _scale(f, 4, a2))
        b4 = f.add(_scale(f, 2, a4), f.mul(a1, a3))
        b6 = f.add(f.mul(a3, a3), _scale(f, 4, a6))
        b8 = f.add(
            f.add(f.mul(f.mul(a1, a1), a6), _scale(f, 4, f.mul(a2, a6))),
            f.add(f.neg(f.mul(a1, f.mul(a3, a4))),
                  f.sub(f.mul(a2, f.mul(a3, a3)), f.mul(a4, a4))))
        term1 = f.neg(f.mul(f.mul(b2, b2), b8))
        term2 = f.neg(_scale(f, 8, f.mul(b4, f.mul(b4, b4))))
        term3 = f.neg(_scale(f, 27, f.mul(b6, b6)))
        term4 = _scale(f, 9, f.mul(b2, f.mul(b4, b6)))
        return f.add(f.add(term1, term2), f.add(term3, term4))

    def rhs(self, x: int) -> int:
        f = self.field
        return f.add(f.mul(x, f.mul(x, x)),
                     f.add(f.mul(self.a2, f.mul(x, x)),
                           f.add(f.mul(self.a4, x), self.a6)))

    def y_coefficient(self, x: int) -> int:
        """The coefficient of y at abscissa x: a1 x + a3."""
        f = self.field
        return f.add(f.mul(self.a1, x), self.a3)

    def is_point(self, x: int, y: int) -> bool:
        f = self.field
        lhs = f.add(f.mul(y, y), f.mul(self.y_coefficient(x), y))
        return lhs == self.rhs(x)

    def coefficients(self) -> tuple[int, int, int, int, int]:
        return self.a1, self.a2, self.a3, self.a4, self.a6

    def description(self) -> str:
        return (f"y^2 + {self.a1}xy + {self.a3}y = "
                f"x^3 + {self.a2}x^2 + {self.a4}x + {self.a6} over GF({self.field.size})")


def _scale(field, k: int, x: int) -> int:
    """k * x for an ordinary integer k (repeated addition semantics)."""
    if k < 0:
        return field.neg(_scale(field, -k, x))
    result = 0
    addend = x
    while k:
        if k & 1:
            result = field.add(result, addend)
        addend = field.add(addend, addend)
        k >>= 1
    return result


# ---------------------------------------------------------------------------
# Counting


@dataclass(frozen=True)
class FrobeniusData:
    """Point count over the base field and the trace it determines."""

    field_size: int
    count: int
    trace: int

    def __post_init__(self):
        if self.trace != self.field_size + 1 - self.count:
            raise DomainError("trace must equal l + 1 - count")
        if self.count < 1:
            raise DomainError("a curve has at least the point at infinity")
        if self.trace * self.trace > 4 * self.field_size:
            raise DomainError(
                f"trace {self.trace} violates the Hasse bound for "
                f"l = {self.field_size}")


def point_count(curve: WeierstrassCurve) -> FrobeniusData:
    """Exact |E(F_l)| including the point at infinity.

    Odd prime fields count solutions per x through the quadratic character
    of the completed square; characteristic-2 fields count per x through
    the absolute trace criterion for y^2 + cy = v.
    """
    field = curve.field
    if field.characteristic == 2:
        affine = _affine_count_char2(curve)
    else:
        affine = _affine_count_odd(curve)
    count = affine + 1
    return FrobeniusData(field.size, count, field.size + 1 - count)


def _affine_count_odd(curve: WeierstrassCurve) -> int:
    field = curve.field
    l = field.size
    # quadratic residue table: character(v) = 1, 0, or -1
    is_square = bytearray(l)
    for y in range(l):
        is_square[y * y % l] = 1
    four_inv = pow(4, -1, l)
    total = 0
    for x in range(l):
        h = curve.y_coefficient(x)
        # (y + h/2)^2 = rhs + h^2/4
        v = (curve.rhs(x) + h * h * four_inv) % l
        if v == 0:
            total += 1
        elif is_square[v]:
            total += 2
    return total


def _affine_count_char2(curve: WeierstrassCurve) -> int:
    field = curve.field
    if isinstance(field, PrimeCurveField):
        # F_2 itself: four candidate points, check directly
        return sum(1 for x in range(2) for y in range(2)
                   if curve.is_point(x, y))
    total = 0
    for x in field.elements():
        c = curve.y_coefficient(x)
        v = curve.rhs(x)
        if c == 0:
            # y^2 = v has exactly one solution (squaring is bijective)
            total += 1
        else:
            # substitute y = cz: z^2 + z = v / c^2, solvable iff trace 0
            ratio = field.mul(v, field.inv(field.mul(c, c)))
            if field.absolute_trace(ratio) == 0:
                total += 2
    return total


def naive_point_count(curve: WeierstrassCurve) -> int:
    """Brute force over all affine pairs plus infinity; the audit oracle."""
    field = curve.field
    return 1 + sum(1 for x in field.elements() for y in field.elements()
                   if curve.is_point(x, y))


def extension_count(fd: FrobeniusData, r: int) -> int:
    """|E(F_{l^r})| from the power sums of the Frobenius eigenvalues:
    s_1 = a, s_2 = a^2 - 2l, s_r = a s_{r-1} - l s_{r-2}."""
    if r < 1 or r > 30:
        raise DomainError("extension degree must be between 1 and 30")
    l, a = fd.field_size, fd.trace
    if r == 1:
        return fd.count
    s_prev, s_cur = a, a * a - 2 * l
    for _ in range(r - 2):
        s_prev, s_cur = s_cur, a * s_cur - l * s_prev
    return l ** r + 1 - s_cur


# ---------------------------------------------------------------------------
# Obstruction certificates


@dataclass(frozen=True)
class ObstructionCertificate:
    """Numeric witness that the Frobenius trace misses 1 + l.

    gap = (1 + l) - a is positive for every elliptic curve (Hasse), and
    min_n[p] is the least n with gap nonzero mod p^n; the final field is
    the smallest prime exceeding the point count, modulo which the count
    itself is already nonzero.
    """

    curve: str
    frobenius: FrobeniusData
    gap: int
    per_prime: tuple[tuple[int, int], ...]
    lemma_prime: int

    def __post_init__(self):
        if self.gap <= 0:
            raise DomainError("gap must be positive")


def obstruction_certificate(curve: WeierstrassCurve,
                            primes: Sequence[int]) -> ObstructionCertificate:
    fd = point_count(curve)
    char = curve.field.characteristic
    gap = (1 + fd.field_size) - fd.trace
    per_prime = []
    for p in primes:
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        if p == char:
            raise DomainError(
                f"prime {p} equals the field characteristic {char}")
        n = 1
        while gap % p ** n == 0:
            n += 1
        per_prime.append((p, n))
    return ObstructionCertificate(curve.description(), fd, gap,
                                  tuple(per_prime), _next_prime(fd.count))


def _next_prime(n: int) -> int:
    candidate = n + 1
    while not is_prime(candidate):
        candidate += 1
    return candidate


# ---------------------------------------------------------------------------
# Exhaustive curve families


def enumerate_curves(field) -> list[WeierstrassCurve]:
    """All smooth Weierstrass equations over a small field: short form
    y^2 = x^3 + ax + b in odd characteristic, the general five-coefficient
    form in characteristic 2."""
    if field.size > CURVE_ENUMERATION_FIELD_BOUND:
        raise BoundExceededError(
            f"curve enumeration bounded at field size "
            f"{CURVE_ENUMERATION_FIELD_BOUND}")
    curves = []
    if field.characteristic == 2:
        for a1 in field.elements():
            for a2 in field.elements():
                for a3 in field.elements():
                    for a4 in field.elements():
                        for a6 in field.elements():
                            try:
                                curves.append(
                                    WeierstrassCurve(field, a1, a2, a3, a4, a6))
                            except DomainError:
                                continue
    else:
        for a in field.elements():
            for b in field.elements():
                try:
                    curves.append(WeierstrassCurve(field, 0, 0, 0, a, b))
                except DomainError:
                    continue
    return curves


def hasse_bound_holds(fd: FrobeniusData) -> bool:
    return fd.trace * fd.trace <= 4 * fd.field_size


def hasse_interval(l: int) -> tuple[int, int]:
    """Integer bounds [l + 1 - 2 sqrt(l), l + 1 + 2 sqrt(l)] on counts."""
    root = isqrt(4 * l)
    return l + 1 - root, l + 1 + root
