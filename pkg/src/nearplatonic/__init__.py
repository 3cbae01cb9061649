"""Construction, classification and enumeration of nearly Platonic plane
graphs: k-regular plane graphs whose faces all share one size except a few."""

from .classify import (
    NPReport,
    NPType,
    admissible_2np_types,
    block_signature,
    classify_nearly_platonic,
    face_distance,
    identify_family,
    touching_status,
)
from .core import BACKEND
from .errors import GraphError
from .families import FamilyId, FamilyInstance, Solid, catalog, generate, platonic
from .planegraph import (
    PlaneGraph,
    are_isomorphic,
    build,
    canonical_code,
    mirror,
    parse,
    serialize,
    trace_faces,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "FamilyId", "FamilyInstance", "GraphError", "NPReport", "NPType",
    "PlaneGraph", "Solid", "admissible_2np_types", "are_isomorphic", "block_signature",
    "build", "canonical_code", "catalog", "classify_nearly_platonic", "face_distance",
    "generate", "identify_family", "mirror", "parse", "platonic", "serialize",
    "touching_status", "trace_faces",
]
