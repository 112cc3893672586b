"""
Package: ddhooks
License: MIT
"""
from .workbench import Workbench
from .data import *

__all__ = ['Workbench', 'ComparisonRow', 'DistributionTable', 'AsymptoticEstimate', 'RootOfUnityContext',
           'ProductForm', 'ArcBranch', 'FrobeniusSymbol', 'TwoRowedArray', 'Partition', 'StrictPartition',
           'PartitionClass', 'ClassTag', 'QuotientDecomposition', 'StatisticKind', 'StatisticTag']
