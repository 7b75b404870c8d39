"""Permutation representations and the character-level homomorphism from
the Burnside ring into virtual representations.

Virtual representations are stored as character vectors on conjugacy
classes.  Over a field whose characteristic does not divide the group
order this is a complete invariant (semisimplicity), and every operation
that relies on it rejects violating primes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .burnside import (
    BurnsideElement,
    SpanMorphism,
    compose,
    is_idempotent,
    ring_multiply,
    trace_direct,
)
from .errors import DomainError
from .groups import FiniteGroup, cyclic_group
from .gsets import GSet, coset_gset, disjoint_union
from .rings import PrimeField, Rationals, is_prime, mat_mul


@dataclass(frozen=True)
class RepElement:
    """A virtual representation, as its character on conjugacy classes."""

    group: FiniteGroup = field(compare=False)
    ring: object
    values: tuple
    _group_id: int = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_group_id", id(self.group))
        if len(self.values) != self.group.num_classes:
            raise DomainError("character length does not match the number "
                              "of conjugacy classes")

    def value_at(self, element: int):
        return self.values[self.group.class_of[element]]

    def __add__(self, other: "RepElement") -> "RepElement":
        self._check_compatible(other)
        ring = self.ring
        return RepElement(self.group, ring, tuple(
            ring.add(a, b) for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "RepElement") -> "RepElement":
        self._check_compatible(other)
        ring = self.ring
        return RepElement(self.group, ring, tuple(
            ring.sub(a, b) for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "RepElement":
        ring = self.ring
        return RepElement(self.group, ring,
                          tuple(ring.neg(a) for a in self.values))

    def __mul__(self, other: "RepElement") -> "RepElement":
        self._check_compatible(other)
        ring = self.ring
        return RepElement(self.group, ring, tuple(
            ring.mul(a, b) for a, b in zip(self.values, other.values)))

    def is_zero(self) -> bool:
        return all(v == self.ring.zero for v in self.values)

    def is_trivial(self) -> bool:
        return all(v == self.ring.one for v in self.values)

    def _check_compatible(self, other: "RepElement") -> None:
        if self.group is not other.group or self.ring != other.ring:
            raise DomainError("characters live over different groups or rings")


def _fix_character_table(group: FiniteGroup) -> list[tuple[int, ...]]:
    """fix[k][c] = number of points of G/K_k fixed by the class-c
    representative; cached on the group."""
    if group._fix_character is None:
        table = []
        for sub in group.subgroup_classes:
            gset = coset_gset(group, sub)
            table.append(tuple(
                sum(1 for p in range(gset.size) if gset.act(rep, p) == p)
                for rep in group.class_reps))
        group._fix_character = table
    return group._fix_character


def permutation_character(t: GSet, ring=Rationals()) -> RepElement:
    """Character of the permutation representation on T: counts of fixed
    points of each class representative."""
    values = tuple(
        ring.convert(sum(1 for p in range(t.size) if t.act(rep, p) == p))
        for rep in t.group.class_reps)
    return RepElement(t.group, ring, values)


def theta(x: BurnsideElement, ring=Rationals()) -> RepElement:
    """Ring homomorphism sending [G/K] to its permutation character."""
    group = x.group
    table = _fix_character_table(group)
    values = []
    for c in range(group.num_classes):
        total = 0
        for k, coeff in enumerate(x.coeffs):
            if coeff != 0:
                total += coeff * table[k][c]
        values.append(ring.convert(total))
    return RepElement(group, ring, tuple(values))


# ---------------------------------------------------------------------------
# Matrix representations and the degree-0 functor


@dataclass(frozen=True)
class MatrixRep:
    """A matrix representation given by one matrix per group generator."""

    group: FiniteGroup = field(compare=False)
    ring: object
    dimension: int
    matrices: tuple

    def matrix_of(self, element: int) -> list[list]:
        """Matrix of an arbitrary element by word evaluation."""
        from .rings import mat_identity

        if element == self.group.identity_index:
            return mat_identity(self.ring, self.dimension)
        k, j = self.group.bfs_parent[element]
        return mat_mul(self.ring, [list(r) for r in self.matrices[k]],
                       self.matrix_of(j))


def pullback_matrix(t: GSet, element: int, ring=Rationals()) -> list[list]:
    """Matrix of the function pullback by the element on the free module
    with basis T: entry (s, t') is 1 when the element maps s to t'.

    Row/column convention matches h0_matrix, so the trace of
    pullback_matrix(T, g) @ h0_matrix(f) counts apex points u with
    left(u) = g.right(u).
    """
    rows = []
    for s in range(t.size):
        row = [ring.zero] * t.size
        row[t.act(element, s)] = ring.one
        rows.append(row)
    return rows


def permutation_matrix_rep(t: GSet, ring=Rationals()) -> MatrixRep:
    matrices = tuple(
        tuple(tuple(row) for row in pullback_matrix(t, g, ring))
        for g in t.group.generator_indices)
    return MatrixRep(t.group, ring, t.size, matrices)


def h0_matrix(f: SpanMorphism, ring=Rationals()) -> list[list]:
    """Matrix of the induced map on the free module with basis T.

    Entry (t, t') counts apex points with left image t and right image t',
    weighted by term coefficients.  Functorial for diagrammatic
    composition: h0(compose(f, g)) = h0(f) @ h0(g).
    """
    if not ring.is_field:
        raise DomainError("h0 matrices require field coefficients")
    if not f.is_endomorphism():
        raise DomainError("h0_matrix is defined for endomorphisms")
    n = f.source.size
    counts = [[0] * n for _ in range(n)]
    for coeff, span in f.terms:
        for u in range(span.apex.size):
            counts[span.left[u]][span.right[u]] += coeff
    return [[ring.convert(v) for v in row] for row in counts]


# ---------------------------------------------------------------------------
# Character formulas for idempotents and traces


def image_character_formula(f: SpanMorphism, element: int) -> "int | Fraction":
    """Character of the image of the induced degree-0 map at one element,
    by counting apex points where the left leg hits the translated right
    leg.  Requires f idempotent under composition."""
    if not is_span_idempotent(f):
        raise DomainError("the morphism is not idempotent")
    return _image_count(f, element)


def _image_count(f: SpanMorphism, element: int) -> "int | Fraction":
    total = 0
    for coeff, span in f.terms:
        count = sum(1 for u in range(span.apex.size)
                    if span.left[u] == span.target.act(element, span.right[u]))
        total += coeff * count
    return total


def trace_character_formula(f: SpanMorphism, element: int) -> "int | Fraction":
    """Character of the permutation representation of the trace of f at one
    element: counts element-fixed apex points where the legs agree."""
    if not f.is_endomorphism():
        raise DomainError("trace requires an endomorphism")
    total = 0
    for coeff, span in f.terms:
        count = sum(1 for u in range(span.apex.size)
                    if span.apex.act(element, u) == u
                    and span.left[u] == span.right[u])
        total += coeff * count
    return total


def is_span_idempotent(f: SpanMorphism) -> bool:
    return f.is_endomorphism() and compose(f, f) == f


@dataclass(frozen=True)
class IdempotentTraceReport:
    """Side-by-side character vectors for the idempotent trace identity."""

    group_spec: str
    prime: int
    image_character: tuple[int, ...]
    trace_character: tuple[int, ...]
    equal: bool


def verify_idempotent_trace_theorem(f: SpanMorphism,
                                    p: int) -> IdempotentTraceReport:
    """Check that the image character and the trace character agree mod p.

    The identity is only asserted over fields of characteristic not
    dividing the group order; other primes are rejected.
    """
    group = f.group
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if group.order % p == 0:
        raise DomainError(
            f"characteristic {p} divides the group order {group.order}")
    if not is_span_idempotent(f):
        raise DomainError("the morphism is not idempotent")
    ring = PrimeField(p)
    image = []
    trace = []
    for rep in group.class_reps:
        image.append(ring.convert(_image_count(f, rep)))
        trace.append(ring.convert(trace_character_formula(f, rep)))
    return IdempotentTraceReport(group.spec, p, tuple(image), tuple(trace),
                                 image == trace)


def theta_of_idempotent(e: BurnsideElement,
                        ring=Rationals()) -> tuple[RepElement, str]:
    """theta of a Burnside-ring idempotent with its classification:
    "zero", "trivial", or "other" (the last never occurs for genuine
    idempotents over characteristic-zero coefficients)."""
    if ring_multiply(e, e) != e:
        raise DomainError("element is not idempotent")
    rep = theta(e, ring)
    if rep.is_zero():
        kind = "zero"
    elif rep.is_trivial():
        kind = "trivial"
    else:
        kind = "other"
    return rep, kind


# ---------------------------------------------------------------------------
# Character collisions for non-cyclic groups


def permutation_counterexample_search(
        group: FiniteGroup,
        max_size: int) -> Optional[tuple[GSet, GSet]]:
    """Search for non-isomorphic G-sets with equal permutation characters.

    Enumerates multisets of transitive G-sets by total size and returns the
    first collision of character vectors, or None.  Distinct multisets have
    distinct orbit types, so a collision is a genuine counterexample to
    character faithfulness.
    """
    if group.order > 60:
        raise DomainError("search bounded at group order 60")
    if max_size > 12:
        raise DomainError("search bounded at total size 12")
    classes = group.subgroup_classes
    sizes = [group.order // len(sub) for sub in classes]
    characters = _fix_character_table(group)

    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for total in range(1, max_size + 1):
        for multiset in _multisets_with_total(sizes, total):
            char = tuple(
                sum(characters[k][c] for k in multiset)
                for c in range(group.num_classes))
            if char in seen and seen[char] != multiset:
                return (_gset_from_multiset(group, seen[char]),
                        _gset_from_multiset(group, multiset))
            seen.setdefault(char, multiset)
    return None


def _multisets_with_total(sizes: Sequence[int], total: int,
                          start: int = 0) -> list[tuple[int, ...]]:
    """Non-decreasing index multisets whose sizes sum to the exact total."""
    if total == 0:
        return [tuple()]
    result = []
    for k in range(start, len(sizes)):
        if sizes[k] <= total:
            for rest in _multisets_with_total(sizes, total - sizes[k], k):
                result.append((k,) + rest)
    return result


def _gset_from_multiset(group: FiniteGroup,
                        multiset: Sequence[int]) -> GSet:
    gset = None
    for k in multiset:
        piece = coset_gset(group, group.subgroup_classes[k])
        gset = piece if gset is None else disjoint_union(gset, piece)
    if gset is None:
        from .gsets import empty_gset

        return empty_gset(group)
    return gset


# ---------------------------------------------------------------------------
# The real-Galois elliptic character identity


def gal_r_cohomology_characters(ring=Rationals()) -> tuple[RepElement, ...]:
    """Characters over Z/2 of the three cohomology representations of a
    torus with its conjugation action: trivial; trivial + sign; sign."""
    group = _gal_r_group()
    h0 = RepElement(group, ring, (ring.one, ring.one))
    h1 = RepElement(group, ring, (ring.convert(2), ring.zero))
    h2 = RepElement(group, ring, (ring.one, ring.convert(-1)))
    return h0, h1, h2


def gal_r_elliptic_check(ring=Rationals()) -> RepElement:
    """Alternating sum of the torus cohomology characters; contract: zero."""
    h0, h1, h2 = gal_r_cohomology_characters(ring)
    return h0 - h1 + h2


_GAL_R_GROUP: Optional[FiniteGroup] = None


def _gal_r_group() -> FiniteGroup:
    global _GAL_R_GROUP
    if _GAL_R_GROUP is None:
        _GAL_R_GROUP = cyclic_group(2)
    return _GAL_R_GROUP
