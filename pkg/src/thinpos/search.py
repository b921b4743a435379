"""Candidate positions built from tangle decompositions, and the search for the thinnest.

For every surface system, every sign assignment of its sphere sides and
every compatible cocoon order, the minimal bridge presentations of the
region graphs are stacked into one link word.  Together with the plain
n-bridge presentation these words form the candidate set; the thinnest
candidate is the answer.

With ``prune=True`` two cuts are applied.  Sign assignments giving any
region an inadmissible graph are skipped before orders are enumerated, and
a partial order is abandoned once a lower bound on its width exceeds the
best width found so far (seeded by the n-bridge width ``2n**2``).
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .assembly import ComposedPresentation, compose
from .decomposition import (
    GraphTable,
    SignAssignment,
    SphereSystem,
    enumerate_sign_assignments,
    order_constraints,
    region_specs,
)
from .errors import CapExceeded, EmptyCandidateSet
from .graphs import MINUS, PLUS, bridge_shape, is_admissible
from .morse import MAX, MIN, MorseWord, nbridge_word, profile, thin_thick_levels, width_link

DEFAULT_ORACLE_CAP = 10**7


@dataclass
class SurfaceSystem:
    system: SphereSystem
    table: GraphTable
    name: str = ""
    notes: str = ""


@dataclass
class Instance:
    name: str
    bridge_index: int
    systems: list[SurfaceSystem] = field(default_factory=list)
    notes: str = ""

    @property
    def baseline_width(self) -> int:
        return 2 * self.bridge_index**2


@dataclass(frozen=True)
class Origin:
    system_index: int
    assignment: SignAssignment
    order: tuple[int, ...]

    def __str__(self):
        return (f"system {self.system_index} signs {self.assignment} "
                f"order {' < '.join(f'R{r}' for r in self.order)}")


BASELINE = "BASELINE"


@dataclass(frozen=True)
class Candidate:
    origin: Origin | str
    word: MorseWord
    width: int
    presentation: ComposedPresentation | None = None

    @property
    def is_baseline(self) -> bool:
        return self.origin == BASELINE

    @property
    def profile(self) -> tuple[int, ...]:
        return profile(self.word).counts

    @property
    def sort_key(self) -> tuple:
        # extensions are enumerated in lexicographic order, so comparing the
        # order tuples reproduces their enumeration rank
        if self.is_baseline:
            return (0,)
        o = self.origin
        return (1, o.system_index, o.assignment.bits, o.order)


def baseline_candidate(instance: Instance) -> Candidate:
    w = nbridge_word(instance.bridge_index)
    return Candidate(BASELINE, w, width_link(w))


def thick_level_lower_bound(n1: int, n2: int) -> int:
    """Smallest width compatible with two distinct thick levels meeting the link in 2*n1 and 2*n2 points."""
    if n1 < 1 or n2 < 1:
        raise ValueError("thick level half-counts must be >= 1")
    return n1 * (n1 + 1) + n2 * (n2 + 1)


def lower_bound_thick(n1: int, n2: int) -> int:
    """Width bound from two thick levels meeting the link in *more than* 2*n1 and 2*n2 points.

    This is the form needed around a thin level meeting the link in 2n
    points: the thick levels on either side have at least 2(n+1) points, so
    ``lower_bound_thick(4, 4) == thick_level_lower_bound(5, 5) == 60``.
    """
    return thick_level_lower_bound(n1 + 1, n2 + 1)


@dataclass
class AssignmentResult:
    system_index: int
    assignment: SignAssignment
    admissible: bool
    candidates: list[Candidate]


def _bounded_extensions(system, assignment, shapes, best):
    """Lexicographic compatible orders whose running width bound stays <= ``best[0]``.

    ``best`` is a one-element list updated by the caller between yields.
    """
    cons = order_constraints(system, assignment)
    regions = sorted(system.region_ids)
    succ = {r: [] for r in regions}
    indeg = {r: 0 for r in regions}
    for lo, hi in cons.pairs.values():
        succ[lo].append(hi)
        indeg[hi] += 1
    rest_floor = {r: shapes[r].width() for r in regions}
    prefix = []

    def backtrack(count, acc, floor):
        # acc: width of levels already fixed; floor: sum of unplaced cocoon widths
        if len(prefix) == len(regions):
            yield tuple(prefix)
            return
        for r in regions:
            if r in prefix or indeg[r]:
                continue
            s = shapes[r]
            c, a = count, acc
            for _ in range(s.m):
                c += 2
                a += c
            for _ in range(s.M):
                c -= 2
                a += c
            bound = a + floor - rest_floor[r]
            if bound > best[0]:
                continue
            prefix.append(r)
            for t in succ[r]:
                indeg[t] -= 1
            yield from backtrack(c, a, floor - rest_floor[r])
            for t in succ[r]:
                indeg[t] += 1
            prefix.pop()

    yield from backtrack(0, 0, sum(rest_floor.values()))


def _search_assignment(instance: Instance, index: int, assignment: SignAssignment,
                       prune: bool) -> AssignmentResult:
    ss = instance.systems[index]
    specs = region_specs(ss.system, assignment, ss.table)
    admissible = all(is_admissible(s) for s in specs.values())
    out = AssignmentResult(index, assignment, admissible, [])
    if prune and not admissible:
        return out
    shapes = {r: bridge_shape(s) for r, s in specs.items()}
    best = [instance.baseline_width if prune else math.inf]
    orders = _bounded_extensions(ss.system, assignment, shapes, best)
    for order in orders:
        cp = compose(ss.system, assignment, ss.table, order)
        out.candidates.append(Candidate(Origin(index, assignment, order), cp.word, cp.total_width, cp))
        if prune:
            best[0] = min(best[0], cp.total_width)
    return out


@dataclass
class SearchResult:
    instance: Instance
    prune: bool
    baseline: Candidate
    per_assignment: list[AssignmentResult]

    @property
    def candidates(self) -> list[Candidate]:
        out = [self.baseline]
        for ar in self.per_assignment:
            out.extend(ar.candidates)
        return out

    def system_candidates(self, index: int) -> list[Candidate]:
        return [c for ar in self.per_assignment if ar.system_index == index for c in ar.candidates]

    @property
    def winner(self) -> Candidate:
        return min_width(self.candidates)


def search(instance: Instance, prune: bool = True, threads: int = 1) -> SearchResult:
    """Enumerate candidates system by system, sign assignment by sign assignment.

    Each (system, assignment) task keeps its own bound, so the output does
    not depend on ``threads``.
    """
    tasks = [
        (i, a)
        for i, ss in enumerate(instance.systems)
        for a in enumerate_sign_assignments(ss.system)
    ]

    def run(task):
        return _search_assignment(instance, task[0], task[1], prune)

    if threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, tasks))
    else:
        results = [run(t) for t in tasks]
    return SearchResult(instance, prune, baseline_candidate(instance), results)


def build_candidate_set(instance: Instance, prune: bool = True, threads: int = 1) -> list[Candidate]:
    return search(instance, prune, threads).candidates


def min_width(candidates) -> Candidate:
    candidates = list(candidates)
    if not candidates:
        raise EmptyCandidateSet("no candidates to choose from")
    return min(candidates, key=lambda c: (c.width, c.sort_key))


def oracle_search(instance: Instance, cap: int = DEFAULT_ORACLE_CAP) -> Candidate:
    """Exhaustive reference search sharing no enumeration or scan code with :func:`search`.

    Tries every permutation of the regions under every sign pattern, keeps
    the compatible ones, writes out the events directly and sums the raw
    strand counts.  No filters, no bounds.
    """
    size = sum(2 ** len(ss.system) * math.factorial(len(ss.system) + 1) for ss in instance.systems)
    if size > cap:
        raise CapExceeded(f"oracle would examine {size} orders, cap is {cap}")

    n = instance.bridge_index
    best_word = [MIN] * n + [MAX] * n
    best = (_raw_width(best_word), (0,), best_word, BASELINE)
    for idx, ss in enumerate(instance.systems):
        sys_ = ss.system
        ids = [s.id for s in sys_.spheres]
        outside = {s.id: (0 if s.parent is None else s.parent) for s in sys_.spheres}
        for signs in itertools.product("+-", repeat=len(ids)):
            inside_sign = dict(zip(ids, signs))
            # census of each region from its own view of the boundary signs
            census = {}
            for r in [0] + ids:
                seen = {}
                for s in ids:
                    if s == r:
                        seen[s] = inside_sign[s]
                    elif outside[s] == r:
                        seen[s] = "-" if inside_sign[s] == "+" else "+"
                spec = ss.table.lookup(r, seen)
                down = sum(sys_.punctures(s) for s, g in seen.items() if g == MINUS)
                up = sum(sys_.punctures(s) for s, g in seen.items() if g == PLUS)
                b2 = 2 * spec.bridge_number
                census[r] = ((b2 - down) // 2, (b2 - up) // 2)
            bits = "".join("0" if g == "+" else "1" for g in signs)
            for perm in itertools.permutations(sorted([0] + ids)):
                pos = {r: i for i, r in enumerate(perm)}
                ok = True
                for s in ids:
                    below_inside = pos[s] < pos[outside[s]]
                    if below_inside != (inside_sign[s] == "+"):
                        ok = False
                        break
                if not ok:
                    continue
                word = []
                for r in perm:
                    word += [MIN] * census[r][0] + [MAX] * census[r][1]
                key = (_raw_width(word), (1, idx, bits, perm))
                if key < best[:2]:
                    assignment = SignAssignment(tuple(zip(ids, signs)))
                    best = (key[0], key[1], word, Origin(idx, assignment, perm))
    width, _, word, origin = best
    return Candidate(origin, MorseWord(word), width)


def _raw_width(events) -> int:
    total, acc = 0, 0
    for e in events[:-1]:
        total += 2 if e == MIN else -2
        acc += total
    return acc


def candidate_lower_bound_ok(c: Candidate) -> bool:
    """Check the two-thick-level width bound on one candidate's profile."""
    prof = c.profile
    _, thick = thin_thick_levels(prof)
    if len(thick) < 2:
        return True
    top, bottom = prof[thick[-1]] // 2, prof[thick[0]] // 2
    return c.width >= thick_level_lower_bound(top, bottom)


def profile_multiplicities(candidates) -> list[tuple[tuple[int, ...], int]]:
    counts = Counter(c.profile for c in candidates)
    return sorted(counts.items(), key=lambda kv: (sum(kv[0]), kv[0]))


__all__ = [
    "BASELINE",
    "Candidate",
    "Instance",
    "Origin",
    "SearchResult",
    "SurfaceSystem",
    "baseline_candidate",
    "build_candidate_set",
    "min_width",
    "oracle_search",
    "profile_multiplicities",
    "search",
    "lower_bound_thick",
    "thick_level_lower_bound",
]
