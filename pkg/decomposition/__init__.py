"""
Yapı bölüşü, split bölücü ve ayrıştırma ağacı modülleri
"""
from decomposition.divide import (
    ComposablePair,
    PairRoles,
    Side,
    SplitDivide,
    find_split_divide,
    split_into_pair,
    unify_pair,
    validate_composable_pair,
    validate_split_divide,
)
from decomposition.structure import (
    StructurePartition,
    build_structure_partition,
    lemma_abx,
    validate_structure_partition,
)
from decomposition.tree import (
    DecompTree,
    PentagonLeaf,
    RecognitionResult,
    SplitLeaf,
    SubstitutionNode,
    UnifyNode,
    check_tree,
    complement_tree,
    decompose,
    decompose_perfect,
    reconstruct,
    recognize,
    recognize_perfect,
)

__all__ = [
    'ComposablePair', 'PairRoles', 'Side', 'SplitDivide', 'find_split_divide', 'split_into_pair',
    'unify_pair', 'validate_composable_pair', 'validate_split_divide',
    'StructurePartition', 'build_structure_partition', 'lemma_abx', 'validate_structure_partition',
    'DecompTree', 'PentagonLeaf', 'RecognitionResult', 'SplitLeaf', 'SubstitutionNode', 'UnifyNode',
    'check_tree', 'complement_tree', 'decompose', 'decompose_perfect', 'reconstruct', 'recognize',
    'recognize_perfect',
]
