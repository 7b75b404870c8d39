"""Grothendieck-Witt arithmetic for diagonal symmetric bilinear forms.

Supported base fields: the reals, where (rank, signature) classifies a
form completely (Sylvester), and odd prime fields, where (rank,
discriminant square class) is the stored normal form.  Raw diagonal
entries are normalized on construction; the two defining relations of the
generator presentation hold on normal forms and are exercised by the test
suite rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .burnside import BurnsideElement
from .errors import DomainError
from .groups import FiniteGroup, cyclic_group
from .rings import is_prime


@dataclass(frozen=True)
class RealField:
    """The reals; square classes are the signs {+1, -1}."""

    def square_class(self, a) -> int:
        value = Fraction(a)
        if value == 0:
            raise DomainError("<0> is not a generator")
        return 1 if value > 0 else -1

    def label(self) -> str:
        return "R"


@dataclass(frozen=True)
class OddPrimeField:
    """F_p for an odd prime; square classes are {+1 (square), -1}."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise DomainError(f"{self.p} is not an odd prime")

    def square_class(self, a) -> int:
        residue = int(a) % self.p
        if residue == 0:
            raise DomainError("<0> is not a generator")
        return 1 if pow(residue, (self.p - 1) // 2, self.p) == 1 else -1

    def label(self) -> str:
        return f"F{self.p}"


GWField = "RealField | OddPrimeField"


@dataclass(frozen=True)
class GWElement:
    """A virtual symmetric bilinear form in normal form.

    Over the reals the invariants are (rank, signature) with
    rank = signature (mod 2); over an odd prime field they are
    (rank, discriminant square class in {+1, -1}).
    """

    field: object
    rank: int
    signature: Optional[int] = None
    disc: Optional[int] = None

    def __post_init__(self):
        if isinstance(self.field, RealField):
            if self.signature is None or self.disc is not None:
                raise DomainError("real forms carry (rank, signature)")
            if (self.rank - self.signature) % 2 != 0:
                raise DomainError("rank and signature must agree mod 2")
        elif isinstance(self.field, OddPrimeField):
            if self.disc not in (1, -1) or self.signature is not None:
                raise DomainError("prime-field forms carry (rank, disc)")
        else:
            raise DomainError(f"unsupported field {self.field!r}")


def gw_zero(field) -> GWElement:
    if isinstance(field, RealField):
        return GWElement(field, 0, signature=0)
    return GWElement(field, 0, disc=1)


def generator(field, a) -> GWElement:
    """The rank-one form <a> for a nonzero field element."""
    cls = field.square_class(a)
    if isinstance(field, RealField):
        return GWElement(field, 1, signature=cls)
    return GWElement(field, 1, disc=cls)


def add(x: GWElement, y: GWElement) -> GWElement:
    _require_same_field(x, y)
    if isinstance(x.field, RealField):
        return GWElement(x.field, x.rank + y.rank,
                         signature=x.signature + y.signature)
    return GWElement(x.field, x.rank + y.rank, disc=x.disc * y.disc)


def multiply(x: GWElement, y: GWElement) -> GWElement:
    _require_same_field(x, y)
    if isinstance(x.field, RealField):
        return GWElement(x.field, x.rank * y.rank,
                         signature=x.signature * y.signature)
    # disc of a tensor product of diagonal forms: each discriminant enters
    # once per diagonal entry of the other factor.
    disc = (x.disc ** (y.rank % 2)) * (y.disc ** (x.rank % 2))
    return GWElement(x.field, x.rank * y.rank, disc=disc)


def _require_same_field(x: GWElement, y: GWElement) -> None:
    if x.field != y.field:
        raise DomainError("forms live over different fields")


def diagonal_form(field, entries: Sequence) -> GWElement:
    """Normal form of the diagonal form with the given nonzero entries."""
    total = gw_zero(field)
    for a in entries:
        total = add(total, generator(field, a))
    return total


def rank_signature(x: GWElement) -> tuple[int, int]:
    if not isinstance(x.field, RealField):
        raise DomainError("signature is defined over the reals")
    return x.rank, x.signature


def diagonalize_symmetric(gram: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Diagonal entries of a congruent diagonal matrix, by symmetric
    row/column elimination over the rationals."""
    n = len(gram)
    work = [[Fraction(v) for v in row] for row in gram]
    for row in work:
        if len(row) != n:
            raise DomainError("Gram matrix must be square")
    diag = []
    for i in range(n):
        if work[i][i] == 0:
            pivot = next((j for j in range(i + 1, n) if work[j][j] != 0), None)
            if pivot is not None:
                work[i], work[pivot] = work[pivot], work[i]
                for row in work:
                    row[i], row[pivot] = row[pivot], row[i]
            else:
                off = next((j for j in range(i + 1, n) if work[i][j] != 0), None)
                if off is None:
                    diag.append(Fraction(0))
                    continue
                # replace basis vector i by (i + off) to expose a pivot
                for j in range(n):
                    work[i][j] += work[off][j]
                for j in range(n):
                    work[j][i] += work[j][off]
        pivot_value = work[i][i]
        for j in range(i + 1, n):
            if work[i][j] != 0:
                factor = work[i][j] / pivot_value
                for k in range(n):
                    work[j][k] -= factor * work[i][k]
                for k in range(n):
                    work[k][j] -= factor * work[k][i]
        diag.append(pivot_value)
    return diag


def trace_form_C_over_R() -> GWElement:
    """The trace form of C/R: Gram matrix of (x, y) -> Tr(x y) on the basis
    {1, i}, diagonalized and read off as a real GW element."""
    # complex numbers as (real, imaginary) pairs of Fractions
    basis = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]

    def c_mul(a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def c_trace(a):
        return 2 * a[0]

    gram = [[c_trace(c_mul(u, v)) for v in basis] for u in basis]
    entries = [d for d in diagonalize_symmetric(gram) if d != 0]
    return diagonal_form(RealField(), entries)


def realize_in_burnside(x: GWElement,
                        group: Optional[FiniteGroup] = None) -> BurnsideElement:
    """Image of a real form in the Burnside ring of the order-2 group:
    the unique a*[point] + b*[free orbit] with a + 2b = rank and
    a = signature."""
    if not isinstance(x.field, RealField):
        raise DomainError("realization is defined over the reals")
    if group is None:
        group = _order_two_group()
    if group.order != 2:
        raise DomainError("realization needs the order-2 group")
    a = x.signature
    b = (x.rank - x.signature) // 2
    # subgroup classes are ordered (trivial, whole), so coefficients are
    # (free-orbit count, fixed-point count).
    return BurnsideElement(group, (b, a))


_ORDER_TWO: Optional[FiniteGroup] = None


def _order_two_group() -> FiniteGroup:
    global _ORDER_TWO
    if _ORDER_TWO is None:
        _ORDER_TWO = cyclic_group(2)
    return _ORDER_TWO


def parse_gw_field(text: str):
    """Parse the CLI field flag: "R" or "Fp:<p>"."""
    text = text.strip()
    if text in ("R", "r"):
        return RealField()
    if text.lower().startswith("fp:"):
        return OddPrimeField(int(text.split(":", 1)[1]))
    raise DomainError(f"unrecognized GW field {text!r}; use R or Fp:<p>")
