"""The span category of finite G-sets and the Burnside ring.

Morphisms S -> T are formal coefficient combinations of spans S <- U -> T
with equivariant legs, composed by pullback.  Morphisms are kept in a
canonical form: every span is split into orbit-level spans (transitive
apex), isomorphic pieces are merged by summing coefficients, and zero
terms are dropped.  Equality of morphisms is equality of canonical forms.

Coefficients are exact: Python ints for the integral category, Fractions
for rational coefficients.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BoundExceededError, DomainError
from .groups import FiniteGroup, parse_group_spec
from .gsets import (
    GSet,
    coset_gset,
    empty_gset,
    gset_from_json,
    gset_to_json,
    point_gset,
    product,
    sub_gset,
)

IDEMPOTENT_CLASS_BOUND = 20


# ---------------------------------------------------------------------------
# Spans


@dataclass(frozen=True)
class Span:
    """A diagram source <- apex -> target of equivariant maps.

    ``left[u]`` / ``right[u]`` are the images of apex point u.  Structural
    equality only; use span_iso_equal for equivalence of diagrams.
    """

    source: GSet
    apex: GSet
    target: GSet
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        if self.source.group is not self.apex.group or \
                self.apex.group is not self.target.group:
            raise DomainError("span legs live over different groups")
        if len(self.left) != self.apex.size or len(self.right) != self.apex.size:
            raise DomainError("leg length does not match apex size")
        if any(not 0 <= t < self.source.size for t in self.left):
            raise DomainError("left leg image out of range")
        if any(not 0 <= t < self.target.size for t in self.right):
            raise DomainError("right leg image out of range")
        group = self.apex.group
        for g in group.generator_indices:
            for u in range(self.apex.size):
                gu = self.apex.act(g, u)
                if self.left[gu] != self.source.act(g, self.left[u]):
                    raise DomainError("left leg is not equivariant")
                if self.right[gu] != self.target.act(g, self.right[u]):
                    raise DomainError("right leg is not equivariant")

    @property
    def group(self) -> FiniteGroup:
        return self.apex.group


def identity_span(t: GSet) -> Span:
    ident = tuple(range(t.size))
    return Span(t, t, t, ident, ident)


def empty_span(source: GSet, target: GSet) -> Span:
    return Span(source, empty_gset(source.group), target, tuple(), tuple())


def _orbit_signature(span: Span, orbit: Sequence[int]) -> tuple:
    """Canonical key of one apex orbit: the minimum over its points of
    (left image, right image, exact stabilizer).  Two orbit spans admit an
    equivariant leg-commuting bijection iff these keys coincide."""
    return min((span.left[u], span.right[u], span.apex.stabilizer(u))
               for u in orbit)


def _orbit_pieces(span: Span) -> list[tuple[tuple, Span]]:
    """Split a span into orbit-level spans, each tagged with its key."""
    pieces = []
    for orbit in span.apex.orbits():
        key = _orbit_signature(span, orbit)
        apex, points = sub_gset(span.apex, orbit)
        piece = Span(span.source, apex, span.target,
                     tuple(span.left[p] for p in points),
                     tuple(span.right[p] for p in points))
        pieces.append((key, piece))
    return pieces


def span_iso_equal(a: Span, b: Span) -> bool:
    """True iff an equivariant apex bijection commutes with both legs."""
    if a.source != b.source or a.target != b.target:
        raise DomainError("spans must share source and target")
    if a.apex.size != b.apex.size:
        return False
    keys_a = sorted(key for key, _ in _orbit_pieces(a))
    keys_b = sorted(key for key, _ in _orbit_pieces(b))
    return keys_a == keys_b


# ---------------------------------------------------------------------------
# Morphisms


@dataclass(frozen=True)
class SpanMorphism:
    """A canonical-form coefficient combination of spans S <- U -> T."""

    source: GSet
    target: GSet
    terms: tuple[tuple["int | Fraction", Span], ...] = field(compare=False)
    signature: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "signature",
            tuple((key, coeff) for coeff, span in self.terms
                  for key in [_orbit_signature(span, range(span.apex.size))]))

    @staticmethod
    def from_terms(source: GSet, target: GSet,
                   terms: Iterable[tuple["int | Fraction", Span]]) -> "SpanMorphism":
        """Canonicalize: orbit-split, merge isomorphic spans, drop zeros."""
        if source.group is not target.group:
            raise DomainError("source and target over different groups")
        merged: dict[tuple, list] = {}
        for coeff, span in terms:
            if span.source != source or span.target != target:
                raise DomainError("term does not match the morphism objects")
            if coeff == 0:
                continue
            for key, piece in _orbit_pieces(span):
                if key in merged:
                    merged[key][0] += coeff
                else:
                    merged[key] = [coeff, piece]
        canonical = tuple((coeff, piece)
                          for key, (coeff, piece) in sorted(merged.items())
                          if coeff != 0)
        return SpanMorphism(source, target, canonical)

    @property
    def group(self) -> FiniteGroup:
        return self.source.group

    def is_endomorphism(self) -> bool:
        return self.source == self.target

    def scaled(self, factor: "int | Fraction") -> "SpanMorphism":
        return SpanMorphism.from_terms(
            self.source, self.target,
            [(coeff * factor, span) for coeff, span in self.terms])

    def __add__(self, other: "SpanMorphism") -> "SpanMorphism":
        if self.source != other.source or self.target != other.target:
            raise DomainError("cannot add morphisms with different objects")
        return SpanMorphism.from_terms(self.source, self.target,
                                       self.terms + other.terms)

    def __neg__(self) -> "SpanMorphism":
        return self.scaled(-1)

    def __sub__(self, other: "SpanMorphism") -> "SpanMorphism":
        return self + (-other)


def zero_morphism(source: GSet, target: GSet) -> SpanMorphism:
    return SpanMorphism.from_terms(source, target, [])


def morphism_from_span(span: Span, coeff: "int | Fraction" = 1) -> SpanMorphism:
    return SpanMorphism.from_terms(span.source, span.target, [(coeff, span)])


def identity_morphism(t: GSet) -> SpanMorphism:
    return morphism_from_span(identity_span(t))


def _compose_spans(f: Span, g: Span) -> Span:
    """Pullback of f then g: apex pairs (u, u') with f.right(u) = g.left(u')."""
    pairs = [(u, v) for u in range(f.apex.size) for v in range(g.apex.size)
             if f.right[u] == g.left[v]]
    index = {pair: i for i, pair in enumerate(pairs)}
    group = f.group
    rows = []
    for e in range(group.order):
        fr, gr = f.apex.action[e], g.apex.action[e]
        rows.append(tuple(index[(fr[u], gr[v])] for u, v in pairs))
    apex = GSet(group, len(pairs), tuple(rows))
    return Span(f.source, apex, g.target,
                tuple(f.left[u] for u, _ in pairs),
                tuple(g.right[v] for _, v in pairs))


def compose(f: SpanMorphism, g: SpanMorphism) -> SpanMorphism:
    """Diagrammatic composite of f: S -> T and g: T -> Q, yielding S -> Q."""
    if f.target != g.source:
        raise DomainError("target of the first morphism must equal the "
                          "source of the second")
    terms = []
    for cf, sf in f.terms:
        for cg, sg in g.terms:
            terms.append((cf * cg, _compose_spans(sf, sg)))
    return SpanMorphism.from_terms(f.source, g.target, terms)


def _product_spans(f: Span, g: Span) -> Span:
    apex = product(f.apex, g.apex)
    source = product(f.source, g.source)
    target = product(f.target, g.target)
    left = []
    right = []
    for u in range(f.apex.size):
        for v in range(g.apex.size):
            left.append(f.left[u] * g.source.size + g.left[v])
            right.append(f.right[u] * g.target.size + g.right[v])
    return Span(source, apex, target, tuple(left), tuple(right))


def monoidal_product(f: SpanMorphism, g: SpanMorphism) -> SpanMorphism:
    """Termwise product of spans, extended bilinearly."""
    if f.group is not g.group:
        raise DomainError("morphisms live over different groups")
    terms = [(cf * cg, _product_spans(sf, sg))
             for cf, sf in f.terms for cg, sg in g.terms]
    return SpanMorphism.from_terms(product(f.source, g.source),
                                   product(f.target, g.target), terms)


# ---------------------------------------------------------------------------
# Burnside ring elements


@dataclass(frozen=True)
class BurnsideElement:
    """Integer (or exact rational) combination of transitive G-sets [G/H],
    indexed by the group's subgroup conjugacy classes."""

    group: FiniteGroup = field(compare=False)
    coeffs: tuple["int | Fraction", ...]
    _group_id: int = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_group_id", id(self.group))
        if len(self.coeffs) != len(self.group.subgroup_classes):
            raise DomainError("coefficient vector length does not match the "
                              "number of subgroup classes")

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        _require_same_group(self, other)
        return BurnsideElement(self.group, tuple(
            a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "BurnsideElement":
        return BurnsideElement(self.group, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "BurnsideElement") -> "BurnsideElement":
        return self + (-other)

    def scaled(self, factor: "int | Fraction") -> "BurnsideElement":
        return BurnsideElement(self.group,
                               tuple(a * factor for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def _require_same_group(x: BurnsideElement, y: BurnsideElement) -> None:
    if x.group is not y.group:
        raise DomainError("Burnside elements live over different groups")


def burnside_zero(group: FiniteGroup) -> BurnsideElement:
    return BurnsideElement(group, (0,) * len(group.subgroup_classes))


def burnside_basis(group: FiniteGroup, class_index: int) -> BurnsideElement:
    coeffs = [0] * len(group.subgroup_classes)
    coeffs[class_index] = 1
    return BurnsideElement(group, tuple(coeffs))


def burnside_one(group: FiniteGroup) -> BurnsideElement:
    """[G/G], the multiplicative unit."""
    return burnside_basis(group, len(group.subgroup_classes) - 1)


def euler_characteristic(t: GSet) -> BurnsideElement:
    """Orbit decomposition of T, which is also the trace of its identity."""
    coeffs = [0] * len(t.group.subgroup_classes)
    for orbit in t.orbits():
        coeffs[t.group.subgroup_class_index(t.stabilizer(orbit[0]))] += 1
    return BurnsideElement(t.group, tuple(coeffs))


def trace_direct(f: SpanMorphism) -> BurnsideElement:
    """Trace of an endomorphism via the coincidence locus of each span:
    the invariant apex subset where the two legs agree, taken orbitwise."""
    if not f.is_endomorphism():
        raise DomainError("trace requires an endomorphism")
    group = f.group
    coeffs = [0] * len(group.subgroup_classes)
    for coeff, span in f.terms:
        diagonal = [u for u in range(span.apex.size)
                    if span.left[u] == span.right[u]]
        if not diagonal:
            continue
        restricted, _ = sub_gset(span.apex, diagonal)
        for orbit in restricted.orbits():
            cls = group.subgroup_class_index(restricted.stabilizer(orbit[0]))
            coeffs[cls] += coeff
    return BurnsideElement(group, tuple(coeffs))


def _swap_morphism(t: GSet) -> SpanMorphism:
    """The symmetry T x T -> T x T exchanging coordinates."""
    square = product(t, t)
    ident = tuple(range(square.size))
    swap = tuple((p % t.size) * t.size + (p // t.size) for p in range(square.size))
    return morphism_from_span(Span(square, square, square, ident, swap))


def trace_categorical(f: SpanMorphism) -> BurnsideElement:
    """Trace via duality data: compose coevaluation, f x id, the swap, and
    evaluation, landing in endomorphisms of the point."""
    if not f.is_endomorphism():
        raise DomainError("trace requires an endomorphism")
    t = f.source
    group = f.group
    star = point_gset(group)
    square = product(t, t)
    diag = tuple(p * t.size + p for p in range(t.size))
    coev = morphism_from_span(
        Span(star, t, square, (0,) * t.size, diag))
    ev = morphism_from_span(
        Span(square, t, star, diag, (0,) * t.size))
    loop = compose(compose(compose(coev, monoidal_product(f, identity_morphism(t))),
                           _swap_morphism(t)), ev)
    coeffs = [0] * len(group.subgroup_classes)
    for coeff, span in loop.terms:
        cls = group.subgroup_class_index(span.apex.stabilizer(0))
        coeffs[cls] += coeff
    return BurnsideElement(group, tuple(coeffs))


def ring_multiply(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    """Product in the Burnside ring, by orbit decomposition of products of
    transitive G-sets (cached per group)."""
    _require_same_group(x, y)
    group = x.group
    n = len(group.subgroup_classes)
    coeffs: list = [0] * n
    for i, ci in enumerate(x.coeffs):
        if ci == 0:
            continue
        for j, cj in enumerate(y.coeffs):
            if cj == 0:
                continue
            for cls, mult in enumerate(_basis_product(group, i, j)):
                if mult:
                    coeffs[cls] += ci * cj * mult
    return BurnsideElement(group, tuple(coeffs))


def _basis_product(group: FiniteGroup, i: int, j: int) -> tuple[int, ...]:
    key = (i, j) if i <= j else (j, i)
    cached = group._basis_products.get(key)
    if cached is not None:
        return cached
    left = coset_gset(group, group.subgroup_classes[key[0]])
    right = coset_gset(group, group.subgroup_classes[key[1]])
    decomposition = euler_characteristic(product(left, right))
    group._basis_products[key] = decomposition.coeffs
    return decomposition.coeffs


def marks(x: BurnsideElement) -> list["int | Fraction"]:
    """Ghost vector (sum_K coeff_K * |(G/K)^H|)_H over subgroup classes H."""
    table = x.group.table_of_marks()
    return [sum(c * row[k] for k, c in enumerate(x.coeffs) if c != 0)
            for row in table]


def idempotents(group: FiniteGroup) -> list[BurnsideElement]:
    """All solutions of e*e = e, via the ghost map.

    An element is idempotent iff its mark vector is a 0/1 vector, so every
    0/1 vector is tested for integral solvability of the (triangular) marks
    system.  Results are sorted by coefficient vector; 0 and 1 are included
    and complements pair up.
    """
    classes = group.subgroup_classes
    n = len(classes)
    if n > IDEMPOTENT_CLASS_BOUND:
        raise BoundExceededError(
            f"idempotent search bounded at {IDEMPOTENT_CLASS_BOUND} subgroup classes")
    table = group.table_of_marks()
    found = []
    for mask in range(1 << n):
        ghost = [(mask >> h) & 1 for h in range(n)]
        coeffs = _solve_marks_integrally(table, ghost)
        if coeffs is not None:
            found.append(BurnsideElement(group, tuple(coeffs)))
    return sorted(found, key=lambda e: e.coeffs)


def _solve_marks_integrally(table: list[list[int]],
                            ghost: list[int]) -> list[int] | None:
    """Back-substitute the upper-triangular marks system over the integers;
    None when the rational solution is not integral."""
    n = len(ghost)
    coeffs = [0] * n
    for i in range(n - 1, -1, -1):
        residue = ghost[i] - sum(table[i][j] * coeffs[j] for j in range(i + 1, n))
        if residue % table[i][i] != 0:
            return None
        coeffs[i] = residue // table[i][i]
    return coeffs


def is_idempotent(x: BurnsideElement) -> bool:
    return ring_multiply(x, x) == x


# ---------------------------------------------------------------------------
# Serialization


def _coeff_to_json(c: "int | Fraction"):
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return int(c)


def _coeff_from_json(raw) -> "int | Fraction":
    if isinstance(raw, str):
        return Fraction(raw)
    if isinstance(raw, int):
        return raw
    raise DomainError(f"coefficient {raw!r} must be an integer or 'a/b' string")


def span_to_json(span: Span) -> dict:
    return {
        "group": span.group.spec,
        "source": gset_to_json(span.source),
        "apex": gset_to_json(span.apex),
        "target": gset_to_json(span.target),
        "left": list(span.left),
        "right": list(span.right),
    }


def span_from_json(payload: dict, group: FiniteGroup | None = None) -> Span:
    if group is None:
        group = parse_group_spec(payload["group"])
    return Span(gset_from_json(payload["source"], group),
                gset_from_json(payload["apex"], group),
                gset_from_json(payload["target"], group),
                tuple(payload["left"]), tuple(payload["right"]))


def morphism_to_json(f: SpanMorphism) -> dict:
    return {"terms": [{"coeff": _coeff_to_json(coeff), "span": span_to_json(span)}
                      for coeff, span in f.terms]}


def morphism_from_json(payload: dict,
                       group: FiniteGroup | None = None) -> SpanMorphism:
    terms = payload["terms"]
    if not terms:
        raise DomainError("cannot infer objects from an empty term list; "
                          "supply at least one span")
    spans = []
    for item in terms:
        span = span_from_json(item["span"], group)
        if group is None:
            group = span.group
        spans.append((_coeff_from_json(item["coeff"]), span))
    return SpanMorphism.from_terms(spans[0][1].source, spans[0][1].target, spans)
