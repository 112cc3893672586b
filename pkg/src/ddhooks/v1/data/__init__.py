from .comparison import ComparisonRow, COMPARISON_COLUMNS
from .distribution import DistributionTable
from .estimate import AsymptoticEstimate, RootOfUnityContext, ProductForm, ArcBranch
from .frobenius import FrobeniusSymbol, TwoRowedArray
from .partition import Partition, StrictPartition
from .partition_class import PartitionClass, ClassTag
from .quotient import QuotientDecomposition
from .statistic import StatisticKind, StatisticTag

__all__ = ['ComparisonRow', 'COMPARISON_COLUMNS', 'DistributionTable', 'AsymptoticEstimate', 'RootOfUnityContext',
           'ProductForm', 'ArcBranch', 'FrobeniusSymbol', 'TwoRowedArray', 'Partition', 'StrictPartition',
           'PartitionClass', 'ClassTag', 'QuotientDecomposition', 'StatisticKind', 'StatisticTag']
