"""Signed vertex graphs of tangle pieces and the blocks their cocoons contribute.

Only vertex degrees and the bridge number matter for width: a graph in
bridge position with ``d_minus`` strands leaving its bottom vertices,
``d_plus`` strands entering its top vertices and bridge number ``b`` has
exactly ``(2b - d_minus)/2`` minima and ``(2b - d_plus)/2`` maxima.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import InconsistentShape
from .morse import MAX, MIN, MorseWord, vminus, vplus

PLUS = "+"
MINUS = "-"


def flip(sign: str) -> str:
    return MINUS if sign == PLUS else PLUS


@dataclass(frozen=True)
class Vertex:
    sphere_id: int
    sign: str
    degree: int


@dataclass(frozen=True)
class SignedVertexGraphSpec:
    """Table data for one region under one sign pattern.

    ``admits_thinner`` is supplied by the user: True when this bridge
    presentation is known not to be a thin position of the graph.
    """

    region_id: int
    vertices: tuple[Vertex, ...]
    bridge_number: int
    admits_thinner: bool = False
    notes: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices, key=lambda v: v.sphere_id)))
        if self.bridge_number < 1:
            raise InconsistentShape(f"region {self.region_id}: bridge number must be >= 1")
        for v in self.vertices:
            if v.sign not in (PLUS, MINUS):
                raise InconsistentShape(f"region {self.region_id}: bad sign {v.sign!r}")
            if v.degree < 2 or v.degree % 2:
                raise InconsistentShape(
                    f"region {self.region_id}: vertex {v.sphere_id} degree {v.degree} is not even >= 2"
                )

    @property
    def d_plus(self) -> int:
        return sum(v.degree for v in self.vertices if v.sign == PLUS)

    @property
    def d_minus(self) -> int:
        return sum(v.degree for v in self.vertices if v.sign == MINUS)

    @property
    def signs(self) -> dict[int, str]:
        return {v.sphere_id: v.sign for v in self.vertices}

    def swapped(self) -> SignedVertexGraphSpec:
        """Same graph turned upside down."""
        return SignedVertexGraphSpec(
            self.region_id,
            tuple(Vertex(v.sphere_id, flip(v.sign), v.degree) for v in self.vertices),
            self.bridge_number,
            self.admits_thinner,
            self.notes,
        )


@dataclass(frozen=True)
class BridgeShape:
    d_minus: int
    d_plus: int
    b: int
    m: int  # minima
    M: int  # maxima

    @classmethod
    def from_degrees(cls, d_minus: int, d_plus: int, b: int) -> BridgeShape:
        lo, hi = 2 * b - d_minus, 2 * b - d_plus
        if lo < 0 or hi < 0:
            raise InconsistentShape(
                f"bridge number {b} cannot carry {d_minus} strands below and {d_plus} above"
            )
        if lo % 2 or hi % 2:
            raise InconsistentShape(f"odd strand counts: d_minus={d_minus}, d_plus={d_plus}")
        return cls(d_minus, d_plus, b, lo // 2, hi // 2)

    @property
    def balanced(self) -> bool:
        """Both a minimum and a maximum, or no critical points at all."""
        return (self.m > 0 and self.M > 0) or (self.m == 0 and self.M == 0)

    def block(self) -> tuple:
        return _block(self.m, self.M)

    def graph_word(self) -> MorseWord:
        """The whole signed vertex graph in bridge position, vertices included."""
        bottom = [vminus(self.d_minus)] if self.d_minus else []
        top = [vplus(self.d_plus)] if self.d_plus else []
        return MorseWord(bottom + [MIN] * self.m + [MAX] * self.M + top)

    def width(self) -> int:
        """Closed-form width of :meth:`graph_word`."""
        if self.m + self.M <= 1:
            return 0
        # with no maxima the level above the last minimum touches the top vertices
        top = self.m if self.M else self.m - 1
        rising = sum(self.d_minus + 2 * k for k in range(1, top + 1))
        falling = sum(2 * self.b - 2 * j for j in range(1, self.M))
        return rising + falling


def _block(m: int, M: int) -> tuple:
    # Raw event tuple; a cocoon block is only a valid word once the strands
    # entering and leaving it are accounted for.
    return (MIN,) * m + (MAX,) * M


def bridge_shape(spec: SignedVertexGraphSpec) -> BridgeShape:
    return BridgeShape.from_degrees(spec.d_minus, spec.d_plus, spec.bridge_number)


def cocoon_word(spec: SignedVertexGraphSpec) -> tuple:
    """Critical events of the piece: all minima, then all maxima.

    Returned as a bare event tuple since the block alone need not start or
    end with zero strands.
    """
    shape = bridge_shape(spec)
    return _block(shape.m, shape.M)


def has_balanced_critical_points(spec: SignedVertexGraphSpec) -> bool:
    return bridge_shape(spec).balanced


def is_admissible(spec: SignedVertexGraphSpec) -> bool:
    try:
        return has_balanced_critical_points(spec) and not spec.admits_thinner
    except InconsistentShape:
        return False


def make_spec(region_id: int, signs: Mapping[int, str], degrees: Mapping[int, int],
              bridge_number: int, admits_thinner: bool = False) -> SignedVertexGraphSpec:
    verts = tuple(Vertex(s, signs[s], degrees[s]) for s in sorted(signs))
    return SignedVertexGraphSpec(region_id, verts, bridge_number, admits_thinner)
