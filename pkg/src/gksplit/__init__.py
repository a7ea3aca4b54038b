"""Split graphs, prime graphs of finite simple groups, and their compact forms.

Core surface:

* :mod:`gksplit.numtheory` -- factorization, multiplicative orders,
  primitive prime divisors with the Bang-Zsigmondy exception list;
* :mod:`gksplit.graph` -- immutable simple graphs, induced subgraphs,
  compact (true-twin quotient) forms, forbidden-subgraph search;
* :mod:`gksplit.splitcheck` -- split recognition by degree sequence and by
  forbidden subgraphs, partition validation and specialization;
* :mod:`gksplit.groups` -- group descriptors, exact orders, spectra, and the
  embedded sporadic tables;
* :mod:`gksplit.gkbuild` -- per-family prime-graph constructions, split
  partitions, and nonsplitness certificates;
* :mod:`gksplit.cli` -- the ``gksplit`` command line tool.
"""

from .graph import ClassLabel, CompactForm, ForbiddenWitness, Graph
from .splitcheck import (
    SplitPartition,
    SplitVerdict,
    is_split_degree,
    is_split_forbidden,
    m_index,
    specialize,
    validate_partition,
)

__version__ = "0.1.0"

__all__ = [
    "ClassLabel",
    "CompactForm",
    "ForbiddenWitness",
    "Graph",
    "SplitPartition",
    "SplitVerdict",
    "is_split_degree",
    "is_split_forbidden",
    "m_index",
    "specialize",
    "validate_partition",
    "__version__",
]
