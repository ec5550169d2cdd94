"""Exact solvers for uncrossed collections of drawings of small graphs."""

from .core import (
    CollectionWitness,
    CrossingEvent,
    DrawingWitness,
    PreconditionError,
    ResourceExceededError,
    UncrossedError,
    WeightedMultigraph,
    WitnessStructureError,
    expand_weights,
    graph_from_edges,
    make_drawing,
    planarize,
    subdivide,
)
from .covers import (
    RealizabilityResult,
    UncrossedSetCertificate,
    certificate_is_valid,
    realizable_uncrossed_set,
)
from .planarity import (
    Embedding,
    Face,
    PlanarityResult,
    enumerate_embeddings,
    faces,
    graph_planar,
    is_outerplanar,
    is_planar,
)
from .solver import (
    CrossingNumberResult,
    Decision,
    SearchBudget,
    UcrResult,
    UncResult,
    VerifyResult,
    collection_from_certificates,
    crossing_number,
    decide_uncrossed_cost,
    reference_oracle,
    uncrossed_crossing_number,
    uncrossed_number,
    verify_collection,
)

__version__ = "0.1.0"
