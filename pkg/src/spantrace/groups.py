"""Finite permutation groups with conjugacy and subgroup-lattice data.

Elements are permutations of {0, ..., degree-1} stored as image tuples.
A group is generated once, eagerly, by breadth-first closure; element
indices are therefore deterministic for identical generator input.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import BoundExceededError, DomainError

Permutation = tuple[int, ...]

DEFAULT_ORDER_BOUND = 10_000
SUBGROUP_ENUMERATION_BOUND = 1_000
_MUL_TABLE_MAX_ORDER = 1_024


def identity_permutation(degree: int) -> Permutation:
    return tuple(range(degree))


def compose_permutations(p: Permutation, q: Permutation) -> Permutation:
    """Return p*q, the permutation acting as q first, then p."""
    return tuple(p[x] for x in q)


def invert_permutation(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_permutation(images: Sequence[int]) -> bool:
    return sorted(images) == list(range(len(images)))


def permutation_from_cycles(cycles: Sequence[Sequence[int]], degree: int) -> Permutation:
    images = list(range(degree))
    for cycle in cycles:
        for i, x in enumerate(cycle):
            if not 0 <= x < degree:
                raise DomainError(f"cycle point {x} out of range for degree {degree}")
            images[x] = cycle[(i + 1) % len(cycle)]
    if not is_permutation(images):
        raise DomainError("cycles overlap: not a permutation")
    return tuple(images)


def permutation_to_cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Nontrivial cycles of p, each rotated to start at its minimum, sorted."""
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = p[x]
        cycles.append(tuple(cycle))
    return cycles


class FiniteGroup:
    """A finite permutation group with eagerly computed conjugacy data.

    Instances are immutable after construction (lazily cached derived tables
    are pure functions of the construction data) and safe to share across
    threads.  Element index 0 is always the identity.
    """

    def __init__(self, generators: Sequence[Permutation], *,
                 order_bound: int = DEFAULT_ORDER_BOUND,
                 spec: Optional[str] = None) -> None:
        generators = [tuple(g) for g in generators]
        degree = len(generators[0]) if generators else 1
        for g in generators:
            if len(g) != degree:
                raise DomainError("generators act on different numbers of points")
            if not is_permutation(g):
                raise DomainError(f"generator {g} is not a permutation")

        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(generators)
        self.elements, self.bfs_parent = self._closure(order_bound)
        self.index_of: dict[Permutation, int] = {
            g: i for i, g in enumerate(self.elements)
        }
        self.identity_index = 0
        self.generator_indices: tuple[int, ...] = tuple(
            self.index_of[g] for g in self.generators
        )
        self.spec = spec if spec is not None else _spec_from_generators(self.generators)

        self._mul_table: Optional[list[list[int]]] = None
        if self.order <= _MUL_TABLE_MAX_ORDER:
            self._mul_table = self._build_mul_table()
        self._inv_table = [self.index_of[invert_permutation(g)] for g in self.elements]
        self.class_of, self.class_reps = self._conjugacy_classes()

        self._subgroup_classes: Optional[list[tuple[int, ...]]] = None
        self._subgroup_class_lookup: dict[frozenset[int], int] = {}
        self._marks: Optional[list[list[int]]] = None
        self._basis_products: dict[tuple[int, int], tuple[int, ...]] = {}
        self._fix_character: Optional[list[tuple[int, ...]]] = None

    # -- construction ------------------------------------------------------

    def _closure(self, order_bound: int):
        identity = identity_permutation(self.degree)
        elements = [identity]
        parent: list[Optional[tuple[int, int]]] = [None]
        index = {identity: 0}
        head = 0
        while head < len(elements):
            current = elements[head]
            for k, gen in enumerate(self.generators):
                product = compose_permutations(gen, current)
                if product not in index:
                    if len(elements) >= order_bound:
                        raise BoundExceededError(
                            f"group order exceeds bound {order_bound}"
                        )
                    index[product] = len(elements)
                    elements.append(product)
                    parent.append((k, head))
            head += 1
        return tuple(elements), tuple(parent)

    def _build_mul_table(self) -> list[list[int]]:
        n = self.order
        table = [[0] * n for _ in range(n)]
        for i, p in enumerate(self.elements):
            row = table[i]
            for j, q in enumerate(self.elements):
                row[j] = self.index_of[compose_permutations(p, q)]
        return table

    def _conjugacy_classes(self):
        n = self.order
        class_of = [-1] * n
        reps = []
        for start in range(n):
            if class_of[start] != -1:
                continue
            cls = len(reps)
            reps.append(start)
            stack = [start]
            class_of[start] = cls
            while stack:
                x = stack.pop()
                for g in self.generator_indices:
                    y = self.mul(self.mul(g, x), self.inv(g))
                    if class_of[y] == -1:
                        class_of[y] = cls
                        stack.append(y)
        return tuple(class_of), tuple(reps)

    # -- basic arithmetic ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def num_classes(self) -> int:
        return len(self.class_reps)

    def mul(self, i: int, j: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[i][j]
        return self.index_of[compose_permutations(self.elements[i], self.elements[j])]

    def inv(self, i: int) -> int:
        return self._inv_table[i]

    def conjugate(self, g: int, x: int) -> int:
        """Return g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def element_order(self, i: int) -> int:
        order = 1
        x = i
        while x != self.identity_index:
            x = self.mul(x, i)
            order += 1
        return order

    def closure_of(self, seed: Iterable[int]) -> tuple[int, ...]:
        """Subgroup generated by the given element indices, sorted."""
        members = {self.identity_index}
        frontier = [self.identity_index]
        gens = [i for i in seed if i != self.identity_index]
        for g in gens:
            if g not in members:
                members.add(g)
                frontier.append(g)
        head = 0
        while head < len(frontier):
            x = frontier[head]
            head += 1
            for g in gens:
                for y in (self.mul(x, g), self.mul(g, x)):
                    if y not in members:
                        members.add(y)
                        frontier.append(y)
        return tuple(sorted(members))

    def conjugate_subgroup(self, sub: Iterable[int], g: int) -> tuple[int, ...]:
        return tuple(sorted(self.conjugate(g, h) for h in sub))

    # -- subgroup lattice ----------------------------------------------------

    @property
    def subgroup_classes(self) -> list[tuple[int, ...]]:
        """One representative per conjugacy class of subgroups.

        Ordered by increasing subgroup order, trivial subgroup first and the
        whole group last; ties broken by the lexicographically smallest
        conjugate.  Requires order <= 1000 (brute-force enumeration).
        """
        if self._subgroup_classes is None:
            self._subgroup_classes = self._enumerate_subgroup_classes()
        return self._subgroup_classes

    def _enumerate_subgroup_classes(self) -> list[tuple[int, ...]]:
        if self.order > SUBGROUP_ENUMERATION_BOUND:
            raise BoundExceededError(
                f"subgroup enumeration bounded at order {SUBGROUP_ENUMERATION_BOUND}"
            )
        trivial = (self.identity_index,)
        known: set[tuple[int, ...]] = {trivial}
        frontier = [trivial]
        # Extending every known subgroup by one extra generator reaches every
        # subgroup: any H = <g1,...,gm> arises along its generator chain.
        while frontier:
            fresh: list[tuple[int, ...]] = []
            for sub in frontier:
                member = set(sub)
                for g in range(self.order):
                    if g in member:
                        continue
                    extended = self.closure_of(sub + (g,))
                    if extended not in known:
                        known.add(extended)
                        fresh.append(extended)
            frontier = fresh

        canonical: dict[tuple[int, ...], tuple[int, ...]] = {}
        for sub in known:
            key = min(self.conjugate_subgroup(sub, g) for g in range(self.order))
            canonical.setdefault(key, key)
        return sorted(canonical, key=lambda s: (len(s), s))

    def subgroup_class_index(self, sub: Iterable[int]) -> int:
        """Index of the conjugacy class of the given subgroup."""
        members = frozenset(sub)
        cached = self._subgroup_class_lookup.get(members)
        if cached is not None:
            return cached
        sub_tuple = tuple(sorted(members))
        key = min(self.conjugate_subgroup(sub_tuple, g) for g in range(self.order))
        try:
            index = self.subgroup_classes.index(key)
        except ValueError:
            raise DomainError(f"{sub_tuple} is not a subgroup of this group") from None
        self._subgroup_class_lookup[members] = index
        return index

    def left_cosets(self, sub: Sequence[int]) -> list[tuple[int, ...]]:
        """Left cosets g*sub, each sorted, ordered by minimal member."""
        members = set(sub)
        if self.identity_index not in members:
            raise DomainError("subgroup must contain the identity")
        for a in sub:
            for b in sub:
                if self.mul(a, b) not in members:
                    raise DomainError("coset base is not closed under products")
        seen: set[int] = set()
        cosets = []
        for g in range(self.order):
            if g in seen:
                continue
            coset = tuple(sorted(self.mul(g, h) for h in sub))
            seen.update(coset)
            cosets.append(coset)
        return sorted(cosets, key=lambda c: c[0])

    def table_of_marks(self) -> list[list[int]]:
        """Matrix m[H][K] = |(G/K)^H| over subgroup-class representatives.

        With classes sorted by increasing order this is upper triangular
        with positive diagonal, hence invertible over the rationals.
        """
        if self._marks is not None:
            return [row[:] for row in self._marks]
        classes = self.subgroup_classes
        marks = []
        for sub_h in classes:
            row = []
            for sub_k in classes:
                members_k = set(sub_k)
                count = 0
                for coset in self.left_cosets(sub_k):
                    g = coset[0]
                    g_inv = self.inv(g)
                    if all(
                        self.mul(self.mul(g_inv, h), g) in members_k for h in sub_h
                    ):
                        count += 1
                row.append(count)
            marks.append(row)
        self._marks = marks
        return [row[:] for row in marks]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.spec!r}, order={self.order})"


def _spec_from_generators(generators: Sequence[Permutation]) -> str:
    parts = []
    for g in generators:
        cycles = permutation_to_cycles(g)
        if not cycles:
            cycles = [(0,)]
        parts.append("".join("(" + " ".join(map(str, c)) + ")" for c in cycles))
    return "perm:" + ",".join(parts) if parts else "cyclic:1"


def group_from_generators(generators: Sequence[Sequence[int]], *,
                          order_bound: int = DEFAULT_ORDER_BOUND,
                          spec: Optional[str] = None) -> FiniteGroup:
    """Group generated by permutations given as image sequences."""
    return FiniteGroup([tuple(g) for g in generators],
                       order_bound=order_bound, spec=spec)


def cyclic_group(n: int) -> FiniteGroup:
    """Z/n acting on n points by rotation (trivial group for n = 1)."""
    if n <= 0:
        raise DomainError("cyclic group order must be positive")
    if n == 1:
        return FiniteGroup([], spec="cyclic:1")
    cycle = tuple((i + 1) % n for i in range(n))
    return FiniteGroup([cycle], spec=f"cyclic:{n}")


def klein_four() -> FiniteGroup:
    """Z/2 x Z/2 generated by (0 1)(2 3) and (0 2)(1 3)."""
    a = permutation_from_cycles([(0, 1), (2, 3)], 4)
    b = permutation_from_cycles([(0, 2), (1, 3)], 4)
    return FiniteGroup([a, b], spec="klein4")


def alternating_group(n: int) -> FiniteGroup:
    """The alternating group A_n, n >= 3, on n points."""
    if n < 3:
        raise DomainError("alternating group needs at least 3 points")
    three_cycle = permutation_from_cycles([(0, 1, 2)], n)
    if n % 2 == 1:
        long_cycle = permutation_from_cycles([tuple(range(n))], n)
    else:
        long_cycle = permutation_from_cycles([tuple(range(1, n))], n)
    return FiniteGroup([long_cycle, three_cycle], spec=f"alt:{n}")


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_generator(text: str, degree: int) -> Permutation:
    cycles = []
    rest = text.strip()
    if not _CYCLE_RE.findall(rest):
        raise DomainError(f"cannot parse permutation {text!r}")
    for body in _CYCLE_RE.findall(rest):
        points = [int(tok) for tok in body.replace(",", " ").split()]
        if points:
            cycles.append(tuple(points))
    return permutation_from_cycles(cycles, degree)


def parse_group_spec(spec: str) -> FiniteGroup:
    """Build a group from a spec string.

    Accepted forms: "cyclic:n", "klein4", "alt:n", and
    "perm:(0 1 2),(3 4)" with comma-separated generators in cycle notation.
    """
    text = spec.strip()
    if text == "klein4":
        return klein_four()
    if text.startswith("cyclic:"):
        return cyclic_group(int(text.split(":", 1)[1]))
    if text.startswith("alt:"):
        return alternating_group(int(text.split(":", 1)[1]))
    if text.startswith("perm:"):
        body = text.split(":", 1)[1]
        gen_texts = _split_generators(body)
        degree = 0
        for g in gen_texts:
            for cycle_body in _CYCLE_RE.findall(g):
                points = [int(tok) for tok in cycle_body.replace(",", " ").split()]
                degree = max(degree, *(p + 1 for p in points)) if points else degree
        if degree == 0:
            raise DomainError(f"no points found in {spec!r}")
        return FiniteGroup([_parse_generator(g, degree) for g in gen_texts],
                           spec="perm:" + ",".join(t.strip() for t in gen_texts))
    raise DomainError(f"unrecognized group spec {spec!r}")


def _split_generators(body: str) -> list[str]:
    """Split "(0 1)(2 3),(0 2)" on commas that sit outside parentheses."""
    parts = []
    depth = 0
    current = []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if current:
        parts.append("".join(current))
    parts = [p for p in (part.strip() for part in parts) if p]
    if not parts:
        raise DomainError("empty generator list")
    return parts
