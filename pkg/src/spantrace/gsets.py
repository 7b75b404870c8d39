"""Finite G-sets: orbits, fixed points, disjoint union, product, isomorphism.

A GSet stores the full action table (element index, point) -> point.  Point
numbering of unions and products is fixed so that derived objects (spans,
JSON files) are reproducible bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DomainError
from .groups import FiniteGroup, parse_group_spec


@dataclass(frozen=True)
class GSet:
    """A finite set with an action of a fixed group.

    Two GSets compare equal only when they share the group instance and
    have identical action tables; use is_isomorphic for abstract equality.
    """

    group: FiniteGroup = field(compare=False)
    size: int
    action: tuple[tuple[int, ...], ...]
    _group_id: int = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_group_id", id(self.group))

    def act(self, element: int, point: int) -> int:
        return self.action[element][point]

    def points(self) -> range:
        return range(self.size)

    def orbits(self) -> list[tuple[int, ...]]:
        """Orbits as sorted point tuples, ordered by minimal point."""
        seen = [False] * self.size
        result = []
        for start in range(self.size):
            if seen[start]:
                continue
            orbit = {start}
            stack = [start]
            seen[start] = True
            while stack:
                x = stack.pop()
                for g in self.group.generator_indices:
                    y = self.action[g][x]
                    if not seen[y]:
                        seen[y] = True
                        orbit.add(y)
                        stack.append(y)
            result.append(tuple(sorted(orbit)))
        return result

    def stabilizer(self, point: int) -> tuple[int, ...]:
        return tuple(g for g in range(self.group.order)
                     if self.action[g][point] == point)


def _require_same_group(x: GSet, y: GSet) -> None:
    if x.group is not y.group:
        raise DomainError("G-sets live over different groups")


def gset_from_action(group: FiniteGroup, rows: Sequence[Sequence[int]]) -> GSet:
    return GSet(group, len(rows[0]) if rows else 0,
                tuple(tuple(row) for row in rows))


def gset_from_generator_images(group: FiniteGroup, size: int,
                               generator_actions: Sequence[Sequence[int]]) -> GSet:
    """Build the full action table from generator images by word evaluation.

    Validates that the images define a genuine action (each image is a
    permutation and the assignment respects all products in the group).
    """
    if len(generator_actions) != len(group.generators):
        raise DomainError(
            f"expected {len(group.generators)} generator actions, "
            f"got {len(generator_actions)}"
        )
    images = [tuple(row) for row in generator_actions]
    for row in images:
        if len(row) != size or sorted(row) != list(range(size)):
            raise DomainError(f"generator action {row} is not a permutation "
                              f"of {size} points")

    rows: list[tuple[int, ...]] = [tuple()] * group.order
    rows[group.identity_index] = tuple(range(size))
    # bfs_parent[i] = (k, j) with element_i = gen_k * element_j, so the row
    # of element_i is gen-image_k composed with the row of element_j.
    for i in range(group.order):
        parent = group.bfs_parent[i]
        if parent is None:
            continue
        k, j = parent
        base = rows[j]
        gen_row = images[k]
        rows[i] = tuple(gen_row[base[x]] for x in range(size))

    gset = GSet(group, size, tuple(rows))
    for k, gen_index in enumerate(group.generator_indices):
        for e in range(group.order):
            product = group.mul(gen_index, e)
            expected = tuple(images[k][rows[e][x]] for x in range(size))
            if rows[product] != expected:
                raise DomainError("generator images do not define a group action")
    return gset


def empty_gset(group: FiniteGroup) -> GSet:
    return GSet(group, 0, tuple(tuple() for _ in range(group.order)))


def point_gset(group: FiniteGroup) -> GSet:
    """The one-point G-set (the monoidal unit)."""
    return GSet(group, 1, tuple((0,) for _ in range(group.order)))


def trivial_gset(group: FiniteGroup, n: int) -> GSet:
    """n points, all fixed."""
    row = tuple(range(n))
    return GSet(group, n, tuple(row for _ in range(group.order)))


def coset_gset(group: FiniteGroup, sub: Sequence[int]) -> GSet:
    """Left-translation action on cosets G/H; transitive of size [G:H]."""
    cosets = group.left_cosets(sub)
    index_of_coset = {}
    for i, coset in enumerate(cosets):
        for member in coset:
            index_of_coset[member] = i
    rows = []
    for g in range(group.order):
        rows.append(tuple(index_of_coset[group.mul(g, coset[0])]
                          for coset in cosets))
    return GSet(group, len(cosets), tuple(rows))


def disjoint_union(x: GSet, y: GSet) -> GSet:
    """X then Y; X occupies points 0..|X|-1."""
    _require_same_group(x, y)
    rows = []
    for g in range(x.group.order):
        rows.append(tuple(x.action[g]) +
                    tuple(x.size + p for p in y.action[g]))
    return GSet(x.group, x.size + y.size, tuple(rows))


def product(x: GSet, y: GSet) -> GSet:
    """Diagonal action on pairs; (a, b) sits at index a*|Y| + b."""
    _require_same_group(x, y)
    rows = []
    for g in range(x.group.order):
        xr, yr = x.action[g], y.action[g]
        rows.append(tuple(xr[a] * y.size + yr[b]
                          for a in range(x.size) for b in range(y.size)))
    return GSet(x.group, x.size * y.size, tuple(rows))


def sub_gset(x: GSet, points: Iterable[int]) -> tuple[GSet, list[int]]:
    """Restrict to an invariant subset; returns the restriction and the
    sorted original points (new point i corresponds to returned[i])."""
    chosen = sorted(set(points))
    new_index = {p: i for i, p in enumerate(chosen)}
    rows = []
    for g in range(x.group.order):
        row = []
        for p in chosen:
            image = x.action[g][p]
            if image not in new_index:
                raise DomainError("subset is not invariant under the action")
            row.append(new_index[image])
        rows.append(tuple(row))
    return GSet(x.group, len(chosen), tuple(rows)), chosen


def fixed_points(x: GSet, sub: Iterable[int]) -> list[int]:
    """Sorted points fixed by every element of the given subgroup."""
    members = list(sub)
    return [p for p in range(x.size)
            if all(x.action[h][p] == p for h in members)]


@dataclass(frozen=True)
class OrbitType:
    """Multiset of stabilizer conjugacy classes, the complete invariant
    of a finite G-set."""

    classes: tuple[int, ...]

    @property
    def num_orbits(self) -> int:
        return len(self.classes)


def orbit_type(x: GSet) -> OrbitType:
    group = x.group
    classes = sorted(group.subgroup_class_index(x.stabilizer(orbit[0]))
                     for orbit in x.orbits())
    return OrbitType(tuple(classes))


def is_isomorphic(x: GSet, y: GSet) -> bool:
    """Equivariant-bijection equivalence, decided on orbit types."""
    _require_same_group(x, y)
    if x.size != y.size:
        return False
    return orbit_type(x) == orbit_type(y)


def gset_to_json(x: GSet) -> dict:
    return {
        "group": x.group.spec,
        "size": x.size,
        "generator_actions": [list(x.action[g]) for g in x.group.generator_indices],
    }


def gset_from_json(payload: dict, group: FiniteGroup | None = None) -> GSet:
    if group is None:
        group = parse_group_spec(payload["group"])
    return gset_from_generator_images(group, payload["size"],
                                      payload["generator_actions"])
