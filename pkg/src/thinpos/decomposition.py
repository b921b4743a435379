"""Systems of bowl-like spheres, sign assignments and cocoon orders.

Spheres form a containment forest.  Region 0 lies outside every sphere and
region ``i`` lies directly inside sphere ``i``, so each sphere joins exactly
two regions and the region adjacency graph is a tree.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .errors import MalformedForest, MissingTableEntry
from .graphs import MINUS, PLUS, SignedVertexGraphSpec, bridge_shape, flip

EXTERIOR = 0
INSIDE = "inside"
OUTSIDE = "outside"


@dataclass(frozen=True)
class BowlSphere:
    id: int
    parent: int | None
    punctures: int


@dataclass(frozen=True)
class Region:
    id: int
    # (sphere id, which side of that sphere this region is on)
    boundary: tuple[tuple[int, str], ...]

    @property
    def spheres(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.boundary)


class SphereSystem:
    def __init__(self, spheres: Sequence[BowlSphere]):
        self.spheres = tuple(sorted(spheres, key=lambda s: s.id))
        self.by_id = {s.id: s for s in self.spheres}
        self._check_forest()

    def _check_forest(self):
        if len(self.by_id) != len(self.spheres):
            raise MalformedForest("duplicate sphere ids")
        for s in self.spheres:
            if not isinstance(s.id, int) or s.id < 1:
                raise MalformedForest(f"sphere id {s.id!r} must be a positive integer")
            if s.parent is not None and s.parent not in self.by_id:
                raise MalformedForest(f"sphere {s.id} has dangling parent {s.parent}")
            if s.punctures < 2 or s.punctures % 2:
                raise MalformedForest(f"sphere {s.id}: punctures must be even and >= 2")
        for s in self.spheres:
            seen = {s.id}
            p = s.parent
            while p is not None:
                if p in seen:
                    raise MalformedForest(f"containment cycle through sphere {s.id}")
                seen.add(p)
                p = self.by_id[p].parent

    def __len__(self):
        return len(self.spheres)

    @property
    def sphere_ids(self) -> tuple[int, ...]:
        return tuple(s.id for s in self.spheres)

    @property
    def region_ids(self) -> tuple[int, ...]:
        return (EXTERIOR,) + self.sphere_ids

    def outside_of(self, sphere_id: int) -> int:
        p = self.by_id[sphere_id].parent
        return EXTERIOR if p is None else p

    def edges(self) -> list[tuple[int, int, int]]:
        """(sphere id, inside region, outside region) for each sphere."""
        return [(s.id, s.id, self.outside_of(s.id)) for s in self.spheres]

    def regions(self) -> list[Region]:
        return regions(self)

    def punctures(self, sphere_id: int) -> int:
        return self.by_id[sphere_id].punctures


def regions(system: SphereSystem) -> list[Region]:
    bounds: dict[int, list[tuple[int, str]]] = {r: [] for r in system.region_ids}
    for sid, inside, outside in system.edges():
        bounds[inside].append((sid, INSIDE))
        bounds[outside].append((sid, OUTSIDE))
    return [Region(r, tuple(sorted(bounds[r]))) for r in system.region_ids]


@dataclass(frozen=True)
class SignAssignment:
    """Sign of the inside collar of each sphere; the outside collar gets the opposite."""

    inside_sign: tuple[tuple[int, str], ...]

    def __getitem__(self, sphere_id: int) -> str:
        return dict(self.inside_sign)[sphere_id]

    def as_dict(self) -> dict[int, str]:
        return dict(self.inside_sign)

    @property
    def bits(self) -> str:
        """Binary counter label, first sphere most significant ('+' = 0)."""
        return "".join("0" if s == PLUS else "1" for _, s in self.inside_sign)

    def flipped(self) -> SignAssignment:
        return SignAssignment(tuple((k, flip(v)) for k, v in self.inside_sign))

    def __str__(self):
        return "{" + ", ".join(f"{k}:{v}" for k, v in self.inside_sign) + "}"


def enumerate_sign_assignments(system: SphereSystem) -> Iterator[SignAssignment]:
    ids = system.sphere_ids
    for signs in itertools.product((PLUS, MINUS), repeat=len(ids)):
        yield SignAssignment(tuple(zip(ids, signs)))


def vertex_signs(system: SphereSystem, region: int, assignment: SignAssignment) -> dict[int, str]:
    """How each boundary sphere of ``region`` is signed when seen from inside the region."""
    signs = assignment.as_dict()
    out = {}
    for sid, inside, outside in system.edges():
        if inside == region:
            out[sid] = signs[sid]
        elif outside == region:
            out[sid] = flip(signs[sid])
    return out


@dataclass(frozen=True)
class OrderConstraints:
    regions: tuple[int, ...]
    # sphere id -> (lower region, upper region)
    pairs: Mapping[int, tuple[int, int]] = field(default_factory=dict)

    def reversed(self) -> OrderConstraints:
        return OrderConstraints(self.regions, {s: (hi, lo) for s, (lo, hi) in self.pairs.items()})

    def satisfied_by(self, order: Sequence[int]) -> bool:
        pos = {r: i for i, r in enumerate(order)}
        return all(pos[lo] < pos[hi] for lo, hi in self.pairs.values())


def order_constraints(system: SphereSystem, assignment: SignAssignment) -> OrderConstraints:
    """A '+' inside collar means flat face up: the inside cocoon sits below the outside one."""
    pairs = {}
    for sid, inside, outside in system.edges():
        pairs[sid] = (inside, outside) if assignment[sid] == PLUS else (outside, inside)
    return OrderConstraints(system.region_ids, pairs)


def enumerate_linear_extensions(constraints: OrderConstraints) -> Iterator[tuple[int, ...]]:
    """All compatible total orders, bottom to top, in lexicographic order of region ids."""
    succ: dict[int, list[int]] = {r: [] for r in constraints.regions}
    indeg = {r: 0 for r in constraints.regions}
    for lo, hi in constraints.pairs.values():
        succ[lo].append(hi)
        indeg[hi] += 1
    ordered = sorted(constraints.regions)
    prefix: list[int] = []
    placed: set[int] = set()

    def backtrack():
        if len(prefix) == len(ordered):
            yield tuple(prefix)
            return
        for r in ordered:
            if r in placed or indeg[r]:
                continue
            placed.add(r)
            prefix.append(r)
            for t in succ[r]:
                indeg[t] -= 1
            yield from backtrack()
            for t in succ[r]:
                indeg[t] += 1
            prefix.pop()
            placed.discard(r)

    yield from backtrack()


class GraphTable:
    """Lookup of signed vertex graph data by (region, signs seen from that region)."""

    def __init__(self, specs: Sequence[SignedVertexGraphSpec] = ()):
        self._rows: dict[tuple[int, frozenset], SignedVertexGraphSpec] = {}
        for spec in specs:
            self.add(spec)

    @staticmethod
    def key(region: int, signs: Mapping[int, str]) -> tuple[int, frozenset]:
        return region, frozenset(signs.items())

    def add(self, spec: SignedVertexGraphSpec):
        k = self.key(spec.region_id, spec.signs)
        if k in self._rows:
            raise ValueError(f"duplicate graph table row for region {spec.region_id} signs {spec.signs}")
        self._rows[k] = spec

    def lookup(self, region: int, signs: Mapping[int, str]) -> SignedVertexGraphSpec:
        try:
            return self._rows[self.key(region, signs)]
        except KeyError:
            raise MissingTableEntry(region, signs) from None

    def __contains__(self, key) -> bool:
        region, signs = key
        return self.key(region, signs) in self._rows

    def __iter__(self):
        return iter(sorted(self._rows.values(), key=lambda s: (s.region_id, sorted(s.signs.items()))))

    def __len__(self):
        return len(self._rows)


def region_specs(system: SphereSystem, assignment: SignAssignment,
                 table: GraphTable) -> dict[int, SignedVertexGraphSpec]:
    return {
        r: table.lookup(r, vertex_signs(system, r, assignment))
        for r in system.region_ids
    }


@dataclass(frozen=True)
class CensusViolation:
    region: int
    minima: int
    maxima: int

    def __str__(self):
        return (f"region {self.region}: {self.minima} minima and {self.maxima} maxima "
                "(needs both or neither)")


def critical_census_violations(system: SphereSystem, assignment: SignAssignment,
                               table: GraphTable) -> list[CensusViolation]:
    """Regions whose bridge presentation has maxima without minima or vice versa."""
    out = []
    for r, spec in region_specs(system, assignment, table).items():
        shape = bridge_shape(spec)
        if not shape.balanced:
            out.append(CensusViolation(r, shape.m, shape.M))
    return out


def crossing_count(system: SphereSystem, order: Sequence[int], gap_index: int) -> int:
    """Punctures of spheres whose two regions sit on opposite sides of the gap after ``order[gap_index]``."""
    pos = {r: i for i, r in enumerate(order)}
    total = 0
    for sid, inside, outside in system.edges():
        a, b = sorted((pos[inside], pos[outside]))
        if a <= gap_index < b:
            total += system.punctures(sid)
    return total
