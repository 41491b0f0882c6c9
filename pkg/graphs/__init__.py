"""
Graf temel modülleri
"""
from graphs.core import Graph, Relation, VertexSet
from graphs.detect import ForbiddenWitness, Pattern, SplitPartition, find_induced, is_free, is_split
from graphs.errors import ConsistencyError, GraphError, PreconditionError, TreeError, Violation
from graphs.modular import (
    HomogeneousSet,
    decompose_by_homogeneous_set,
    find_proper_homogeneous_set,
    substitute,
    substitution_order,
)

__all__ = [
    'Graph', 'Relation', 'VertexSet',
    'ForbiddenWitness', 'Pattern', 'SplitPartition', 'find_induced', 'is_free', 'is_split',
    'ConsistencyError', 'GraphError', 'PreconditionError', 'TreeError', 'Violation',
    'HomogeneousSet', 'decompose_by_homogeneous_set', 'find_proper_homogeneous_set',
    'substitute', 'substitution_order',
]
