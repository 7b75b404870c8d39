"""Exact coefficient rings and small dense matrix helpers.

Scalars are native values: Fraction over the rationals, reduced int
residues over Z/p and Z/p^n.  The ring object supplies conversion,
arithmetic, and (for fields) inversion, so callers stay generic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Rationals:
    """The field Q; scalars are Fractions."""

    is_field = True
    characteristic = 0

    def convert(self, value) -> Fraction:
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DomainError("division by zero")
        return 1 / Fraction(a)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def label(self) -> str:
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """The field Z/p; scalars are ints in [0, p)."""

    p: int

    is_field = True

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    def convert(self, value) -> int:
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DomainError(
                    f"denominator {value.denominator} is not a unit mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DomainError("division by zero")
        return pow(a, -1, self.p)

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def label(self) -> str:
        return f"F{self.p}"


@dataclass(frozen=True)
class PrimePowerRing:
    """Z/p^n as a trace-value target; not a field unless n = 1.

    Only unit denominators can be converted; no semisimple representation
    theory is attached to this ring.
    """

    p: int
    n: int

    is_field = False

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        if self.n < 1:
            raise DomainError("exponent must be positive")

    @property
    def modulus(self) -> int:
        return self.p ** self.n

    @property
    def characteristic(self) -> int:
        return self.modulus

    def convert(self, value) -> int:
        m = self.modulus
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DomainError(
                    f"denominator {value.denominator} is not a unit mod {m}")
            return value.numerator * pow(value.denominator, -1, m) % m
        return int(value) % m

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def inv(self, a):
        if a % self.p == 0:
            raise DomainError(f"{a} is not a unit mod {self.modulus}")
        return pow(a, -1, self.modulus)

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def label(self) -> str:
        return f"Z/{self.modulus}"


CoefficientRing = "Rationals | PrimeField | PrimePowerRing"


def parse_ring(text: str):
    """Parse "Q", "F<p>" (e.g. F5), or "Z/<p^n>" (e.g. Z/9)."""
    text = text.strip()
    if text in ("Q", "q"):
        return Rationals()
    if text.upper().startswith("F"):
        return PrimeField(int(text[1:]))
    if text.upper().startswith("Z/") or text.upper().startswith("Z"):
        body = text[2:] if "/" in text else text[1:]
        modulus = int(body)
        p = _smallest_prime_factor(modulus)
        n = 0
        m = modulus
        while m % p == 0:
            m //= p
            n += 1
        if m != 1:
            raise DomainError(f"{modulus} is not a prime power")
        return PrimePowerRing(p, n)
    raise DomainError(f"unrecognized ring {text!r}")


def _smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise DomainError(f"{n} has no prime factor")
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


# ---------------------------------------------------------------------------
# Dense matrices as lists of rows of ring scalars


def mat_identity(ring, n: int) -> list[list]:
    return [[ring.one if i == j else ring.zero for j in range(n)]
            for i in range(n)]


def mat_mul(ring, a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    if a and b and len(a[0]) != len(b):
        raise DomainError("matrix shapes do not compose")
    cols = len(b[0]) if b else 0
    result = []
    for row in a:
        out = []
        for j in range(cols):
            acc = ring.zero
            for k, entry in enumerate(row):
                acc = ring.add(acc, ring.mul(entry, b[k][j]))
            out.append(acc)
        result.append(out)
    return result


def mat_trace(ring, a: Sequence[Sequence]):
    acc = ring.zero
    for i, row in enumerate(a):
        acc = ring.add(acc, row[i])
    return acc


def mat_rank(ring, a: Sequence[Sequence]) -> int:
    """Row-echelon rank by Gaussian elimination; requires a field."""
    if not ring.is_field:
        raise DomainError("rank requires a field")
    rows = [list(row) for row in a]
    if not rows:
        return 0
    cols = len(rows[0])
    rank = 0
    for col in range(cols):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col] != ring.zero:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = ring.inv(rows[rank][col])
        rows[rank] = [ring.mul(inv, v) for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != ring.zero:
                factor = rows[r][col]
                rows[r] = [ring.sub(v, ring.mul(factor, w))
                           for v, w in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank
