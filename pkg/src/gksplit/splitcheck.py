"""Split-graph recognition by two independent routes.

Route one is the Hammer-Simeone degree-sequence criterion: with degrees
sorted d1 >= ... >= dn and m = max{i : d_i >= i-1}, the graph is split iff

    sum_{i<=m} d_i  =  m(m-1) + sum_{i>m} d_i,

in which case the m vertices of largest degree form the clique side.  Route
two is the Foldes-Hammer forbidden-subgraph characterization: split iff no
induced 2K2, C4 or C5.  The two must always agree; a disagreement is raised
as InternalInconsistency, never repaired.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InternalInconsistency, InvalidPartition, PreconditionViolated
from .graph import ForbiddenWitness, Graph, label_key


@dataclass(frozen=True)
class SplitPartition:
    """A claimed split partition: clique side C, independent side I.

    ``special`` asserts additionally that every vertex of I has a
    non-neighbour in C.
    """

    clique: frozenset
    independent: frozenset
    special: bool = False

    def as_sorted(self):
        return (
            sorted(self.clique, key=label_key),
            sorted(self.independent, key=label_key),
        )


@dataclass(frozen=True)
class SplitVerdict:
    """Outcome of a split check.

    m_index is None only for verdicts not derived from a degree sequence
    (certificate-backed claims about graphs that were never materialized).
    """

    split: bool
    m_index: int | None = None
    partition: SplitPartition | None = None
    forbidden: ForbiddenWitness | None = None


def m_index(g: Graph) -> int:
    """max{i : d_i >= i-1} over the non-increasing degree sequence."""
    if g.n == 0:
        raise PreconditionViolated("m_index is undefined for the empty graph")
    best = 0
    for i, d in enumerate(g.degree_sequence(), start=1):
        if d >= i - 1:
            best = i
    return best


def validate_partition(g: Graph, p: SplitPartition) -> tuple[bool, str | None]:
    """Check every invariant of a split partition against g.

    Returns (True, None) or (False, reason).  The special condition is only
    demanded when the partition claims it.
    """
    if p.clique & p.independent:
        return False, f"C and I overlap on {sorted(p.clique & p.independent, key=label_key)}"
    if p.clique | p.independent != set(g.vertices):
        return False, "C and I do not cover the vertex set"
    if not g.is_clique(p.clique):
        return False, "C is not a clique"
    if not g.is_independent(p.independent):
        return False, "I is not independent"
    if p.special:
        for v in sorted(p.independent, key=label_key):
            if all(g.adjacent(v, u) for u in p.clique):
                return False, f"{v!r} in I is adjacent to all of C"
    return True, None


def specialize(g: Graph, p: SplitPartition) -> SplitPartition:
    """Move I-vertices adjacent to all of C into C until the partition is special."""
    ok, reason = validate_partition(g, SplitPartition(p.clique, p.independent))
    if not ok:
        raise InvalidPartition(reason)
    clique = set(p.clique)
    indep = set(p.independent)
    moved = True
    while moved:
        moved = False
        for v in sorted(indep, key=label_key):
            if all(g.adjacent(v, u) for u in clique):
                indep.discard(v)
                clique.add(v)
                moved = True
                break
    out = SplitPartition(frozenset(clique), frozenset(indep), special=True)
    ok, reason = validate_partition(g, out)
    if not ok:  # pragma: no cover - the loop establishes the condition
        raise InternalInconsistency(f"specialize produced an invalid partition: {reason}")
    return out


def _is_special(g: Graph, clique, indep) -> bool:
    return all(
        any(not g.adjacent(v, u) for u in clique) for v in indep
    ) if clique else True


def _partition_from_degrees(g: Graph, m: int) -> SplitPartition | None:
    by_degree = sorted(g.vertices, key=lambda v: (-g.degree(v), label_key(v)))
    cand = set(by_degree[:m])
    rest = set(by_degree[m:])
    if g.is_clique(cand) and g.is_independent(rest):
        return SplitPartition(frozenset(cand), frozenset(rest), _is_special(g, cand, rest))
    # Ties at the clique boundary can make the canonical pick fail; retry all
    # m-subsets of the top m+1 degrees before declaring inconsistency.
    pool = by_degree[: m + 1]
    others = set(by_degree[m + 1 :])
    for chosen in combinations(pool, m):
        cand = set(chosen)
        rest = (set(pool) - cand) | others
        if g.is_clique(cand) and g.is_independent(rest):
            return SplitPartition(frozenset(cand), frozenset(rest), _is_special(g, cand, rest))
    return None


def is_split_degree(g: Graph) -> SplitVerdict:
    """Degree-sequence split check with partition extraction."""
    if g.n == 0:
        return SplitVerdict(True, None, SplitPartition(frozenset(), frozenset(), True))
    m = m_index(g)
    degs = g.degree_sequence()
    split = sum(degs[:m]) == m * (m - 1) + sum(degs[m:])
    if split:
        partition = _partition_from_degrees(g, m)
        if partition is None:
            raise InternalInconsistency(
                "degree equality holds but no clique/independent partition was found"
            )
        return SplitVerdict(True, m, partition)
    witness = g.find_forbidden(fast=False)
    if witness is None:
        raise InternalInconsistency(
            "degree equality fails but no forbidden subgraph exists"
        )
    return SplitVerdict(False, m, None, witness)


def _partition_from_cliques(g: Graph) -> SplitPartition | None:
    vs = g.vertices
    for size in range(g.n, -1, -1):
        for chosen in combinations(vs, size):
            cand = set(chosen)
            if not g.is_clique(cand):
                continue
            rest = set(vs) - cand
            if g.is_independent(rest):
                return SplitPartition(
                    frozenset(cand), frozenset(rest), _is_special(g, cand, rest)
                )
        # Only maximum-size cliques can work at the first success size; keep
        # descending until one pairs with an independent rest.
    return None


def is_split_forbidden(g: Graph) -> SplitVerdict:
    """Forbidden-subgraph split check; the independent oracle for the degree route.

    Always enumerates (no degree fast path).  When split, a partition is
    extracted by clique search, independently of any degree reasoning.
    """
    witness = g.find_forbidden(fast=False)
    m = m_index(g) if g.n else None
    if witness is not None:
        return SplitVerdict(False, m, None, witness)
    partition = _partition_from_cliques(g)
    if partition is None:
        raise InternalInconsistency(
            "no forbidden subgraph, yet no split partition exists"
        )
    return SplitVerdict(True, m, partition)
