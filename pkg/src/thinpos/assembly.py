"""Stack cocoon blocks in a compatible order and measure the resulting link word."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .decomposition import (
    GraphTable,
    SignAssignment,
    SphereSystem,
    crossing_count,
    order_constraints,
    region_specs,
)
from .errors import ConservationFailure, InternalInconsistency
from .graphs import BridgeShape, bridge_shape
from .morse import MorseWord, WidthProfile, profile, width_link


@dataclass(frozen=True)
class ComposedPresentation:
    word: MorseWord
    order: tuple[int, ...]
    interval_map: dict[int, tuple[int, int]]  # region -> [start, end) event indices
    shapes: dict[int, BridgeShape]
    gap_counts: tuple[int, ...]
    total_width: int

    @property
    def profile(self) -> WidthProfile:
        return profile(self.word)


def compose(system: SphereSystem, assignment: SignAssignment, table: GraphTable,
            order: Sequence[int]) -> ComposedPresentation:
    order = tuple(order)
    if sorted(order) != sorted(system.region_ids):
        raise ValueError(f"order {order} is not a permutation of the regions")
    if not order_constraints(system, assignment).satisfied_by(order):
        raise ValueError(f"order {order} is not compatible with assignment {assignment}")

    shapes = {r: bridge_shape(s) for r, s in region_specs(system, assignment, table).items()}
    events: list = []
    interval_map = {}
    gaps = []
    count = 0
    for k, r in enumerate(order):
        if k:
            expected = crossing_count(system, order, k - 1)
            if count != expected:
                raise ConservationFailure(
                    f"{count} strands enter region {r} but {expected} arcs cross gap {k - 1}"
                )
            gaps.append(count)
        block = shapes[r].block()
        interval_map[r] = (len(events), len(events) + len(block))
        events.extend(block)
        count += 2 * (shapes[r].m - shapes[r].M)
    if count != 0:
        raise ConservationFailure(f"{count} strands left open above the last cocoon")
    word = MorseWord(events)
    return ComposedPresentation(word, order, interval_map, shapes, tuple(gaps), width_link(word))


def decompose_width(cp: ComposedPresentation) -> tuple[int, int, int]:
    """Split the width into (inside cocoons, gap levels, arcs passing cocoons).

    Rebuilt from the bridge shapes and gap counts alone, then checked
    against the scanned ``total_width``.
    """
    internal = gap_sum = passing = 0
    last_nonempty = None
    for k, r in enumerate(cp.order):
        shape = cp.shapes[r]
        n_events = shape.m + shape.M
        if n_events == 0:
            continue
        if last_nonempty is not None:
            # merged gaps carry the same count: empty blocks are monotone
            gap_sum += cp.gap_counts[last_nonempty]
        entering = cp.gap_counts[k - 1] if k else 0
        internal += shape.width()
        passing += (entering - shape.d_minus) * (n_events - 1)
        last_nonempty = k
    if internal + gap_sum + passing != cp.total_width:
        raise InternalInconsistency(
            f"structural width {internal}+{gap_sum}+{passing} != scanned width {cp.total_width}"
        )
    return internal, gap_sum, passing
