"""Width of Morse presentations of links and a search for thin positions
over tangle decompositions by bowl-like spheres."""

from .assembly import ComposedPresentation, compose, decompose_width
from .decomposition import (
    BowlSphere,
    GraphTable,
    SignAssignment,
    SphereSystem,
    critical_census_violations,
    crossing_count,
    enumerate_linear_extensions,
    enumerate_sign_assignments,
    order_constraints,
    regions,
    vertex_signs,
)
from .errors import *  # noqa: F401,F403
from .graphs import (
    BridgeShape,
    SignedVertexGraphSpec,
    Vertex,
    bridge_shape,
    cocoon_word,
    has_balanced_critical_points,
    is_admissible,
)
from .instance_io import bundled_instances, dump_instance, parse_instance
from .morse import (
    MAX,
    MIN,
    MorseEvent,
    MorseWord,
    WidthProfile,
    bridge_number,
    is_bridge_position,
    nbridge_word,
    profile,
    reflect,
    running_counts,
    thin_thick_levels,
    vminus,
    vplus,
    width_graph,
    width_link,
)
from .search import (
    Candidate,
    Instance,
    SurfaceSystem,
    build_candidate_set,
    lower_bound_thick,
    min_width,
    oracle_search,
    search,
    thick_level_lower_bound,
)

__version__ = "0.1.0"
