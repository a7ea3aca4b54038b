"""Compact-diagram construction for small-rank classical and exceptional families.

The diagram topologies live in ``data/diagrams.json``; this module evaluates
them at a concrete field size.  Diagrams are data, predicates are code: the
closed predicate language covers three-part comparisons of q -+ 1, character-
istic tests, membership of 5 in R_4, divisibility, and field-size parity, so
the resource file can be audited line by line against the published drawings.

Families handled here: A1, A2/2A2, B2(=C2), B3/C3, G2, F4, E6/2E6, E7, E8,
2B2, 2G2, 2F4, 3D4, and the Tits group.  For the families whose construction
comes from a closed-form list of maximal element orders (B2, B3(3)/C3(3), the
Tits group), the class graph is the compact form of the spectrum-built prime
graph rather than a drawn diagram.
"""

from __future__ import annotations

import json
from importlib import resources
from math import gcd, isqrt

from . import groups, numtheory as nt
from .certificates import (
    Certificate,
    KIND_SPLIT,
    TAG_ZSIGMONDY,
    assume,
    step,
)
from .errors import InternalInconsistency, UnsupportedFamily
from .graph import ClassLabel, Graph
from .splitcheck import SplitPartition, validate_partition

_DIAGRAMS: dict | None = None

#: family string accepted by exceptional_compact -> (template key, epsilon)
_FAMILY_MAP = {
    "A1": ("A1", 1),
    "A2": ("A2", 1),
    "2A2": ("A2", -1),
    "B2": ("B2", 1),
    "C2": ("B2", 1),
    "B3": ("B3C3", 1),
    "C3": ("B3C3", 1),
    "G2": ("G2", 1),
    "F4": ("F4", 1),
    "E6": ("E6", 1),
    "2E6": ("E6", -1),
    "E7": ("E7", 1),
    "E8": ("E8", 1),
    "2B2": ("2B2", 1),
    "2G2": ("2G2", 1),
    "2F4": ("2F4", 1),
    "3D4": ("3D4", 1),
}


def diagram_families() -> tuple[str, ...]:
    return tuple(_FAMILY_MAP)


def _load() -> dict:
    global _DIAGRAMS
    if _DIAGRAMS is None:
        text = resources.files("gksplit.data").joinpath("diagrams.json").read_text()
        _DIAGRAMS = json.loads(text)
    return _DIAGRAMS


def _descriptor_for(family: str, q: int) -> groups.GroupDescriptor:
    if family == "A1":
        return groups.classical("A", 1, q)
    if family == "A2":
        return groups.classical("A", 2, q)
    if family == "2A2":
        return groups.classical("2A", 2, q)
    if family in ("B2", "C2"):
        return groups.classical("B", 2, q)
    if family == "B3":
        return groups.classical("B", 3, q)
    if family == "C3":
        return groups.classical("C", 3, q)
    return groups.exceptional(family, q)


def nu(n: int) -> int:
    """n for n = 0 (4); n/2 for n = 2 (4); 2n for odd n.  An involution."""
    if n % 4 == 0:
        return n
    if n % 2 == 0:
        return n // 2
    return 2 * n


def eta(n: int) -> int:
    return n if n % 2 else n // 2


def nu_eps(n: int, eps: int) -> int:
    return n if eps == 1 else nu(n)


# -- expression registry -----------------------------------------------------

_EXPRS = {
    "q": lambda q: q,
    "q-1": lambda q: q - 1,
    "q+1": lambda q: q + 1,
    "(q-1)/(2,q-1)": lambda q: (q - 1) // gcd(2, q - 1),
    "(q+1)/(2,q-1)": lambda q: (q + 1) // gcd(2, q - 1),
    "(q-1)/2": lambda q: (q - 1) // 2,
    "(q+1)/4": lambda q: (q + 1) // 4,
    "q-sqrt2q+1": lambda q: q - isqrt(2 * q) + 1,
    "q+sqrt2q+1": lambda q: q + isqrt(2 * q) + 1,
    "q-sqrt3q+1": lambda q: q - isqrt(3 * q) + 1,
    "q+sqrt3q+1": lambda q: q + isqrt(3 * q) + 1,
    "q^2-q+1": lambda q: q * q - q + 1,
    "q^2-sqrt2q^3+q-sqrt2q+1": lambda q: q * q - isqrt(2 * q**3) + q - isqrt(2 * q) + 1,
    "q^2+sqrt2q^3+q+sqrt2q+1": lambda q: q * q + isqrt(2 * q**3) + q + isqrt(2 * q) + 1,
}


def _expr_value(name: str, q: int, eps: int) -> int:
    if name == "q-eps":
        return q - eps
    return _EXPRS[name](q)


def _eval_pred(pred, q: int, p: int, eps: int, trail: list) -> bool:
    """Evaluate a predicate, appending machine-checkable steps to the trail."""
    if pred is None:
        return True
    if "all" in pred:
        return all(_eval_pred(sub, q, p, eps, trail) for sub in pred["all"])
    if "any" in pred:
        return any(_eval_pred(sub, q, p, eps, trail) for sub in pred["any"])
    if "not" in pred:
        return not _eval_pred(pred["not"], q, p, eps, trail)
    kind = pred["pred"]
    if kind == "three_part_eq":
        a = _expr_value(pred["expr"], q, eps)
        got = nt.pi_part(a, {3})
        trail.append(
            step(
                f"three-part of {a} is {got}",
                op="pi_part_eq", a=a, pi_of=3, equals=got,
            )
        )
        return got == pred["value"]
    if kind == "three_part_gt":
        a = _expr_value(pred["expr"], q, eps)
        got = nt.pi_part(a, {3})
        trail.append(
            step(
                f"three-part of {a} is {got}",
                op="pi_part_eq", a=a, pi_of=3, equals=got,
            )
        )
        return got > pred["value"]
    if kind == "char_is":
        return p == pred["value"]
    if kind == "char_is_not":
        return p != pred["value"]
    if kind == "member":
        r, i = pred["r"], pred["index"]
        if q % r == 0:
            return False
        got = nt.mult_order(r, q) == i
        if got:
            trail.append(
                step(f"order of {q} modulo {r} is {i}", op="mult_order", r=r, base=q, equals=i)
            )
        return got
    if kind == "nonempty":
        return not nt.is_zsigmondy_exception(pred["index"], q)
    if kind == "divides":
        a = _expr_value(pred["expr"], q, eps)
        got = a % pred["d"] == 0
        if got:
            trail.append(step(f"{pred['d']} divides {a}", op="divides", a=pred["d"], b=a))
        return got
    if kind == "q_even":
        return q % 2 == 0
    if kind == "q_odd":
        return q % 2 == 1
    if kind == "q_eq":
        return q == pred["value"]
    raise ValueError(f"unknown predicate {kind!r}")


def _class_members(rule, q: int, p: int, eps: int, budget: int, trail: list) -> frozenset[int] | None:
    """Member set of one diagram class; None when the class does not exist."""
    kind = rule["kind"]
    if kind == "char":
        return frozenset({p})
    if kind == "prime":
        v = rule["value"]
        return None if v == p else frozenset({v})
    minus = frozenset(rule.get("minus", ()))
    if kind == "pi":
        value = _expr_value(rule["expr"], q, eps)
        if value <= 1:
            return None
        got = nt.prime_set(value, budget) - minus
        return got or None
    if kind == "ppd":
        index = rule["index"]
        if rule.get("eps"):
            index = nu_eps(index, eps)
        if nt.is_zsigmondy_exception(index, q):
            trail.append(
                step(f"R_{index}({q}) is empty", TAG_ZSIGMONDY, op="zsigmondy_empty", base=q, index=index)
            )
            return None
        got = nt.ppd_set(index, q, budget) - minus
        return got or None
    if kind == "ppd_union":
        got = set()
        for index in rule["indices"]:
            if rule.get("eps"):
                index = nu_eps(index, eps)
            if not nt.is_zsigmondy_exception(index, q):
                got |= nt.ppd_set(index, q, budget)
        if rule.get("char"):
            got.add(p)
        got -= frozenset(rule.get("minus", ()))
        return frozenset(got) or None
    raise ValueError(f"unknown member rule {kind!r}")


def _build_diagram(variant, q, p, eps, budget):
    trail: list = []
    labels: dict[str, ClassLabel] = {}
    for vspec in variant["vertices"]:
        if not _eval_pred(vspec.get("when"), q, p, eps, trail):
            continue
        members = _class_members(vspec["members"], q, p, eps, budget, trail)
        if members is None:
            continue
        labels[vspec["tag"]] = ClassLabel(vspec["tag"], tuple(sorted(members)))
    edges = []
    for u, v, cond in variant["edges"]:
        if u in labels and v in labels and _eval_pred(cond, q, p, eps, trail):
            edges.append((labels[u], labels[v]))
    graph = Graph(labels.values(), edges)
    return graph, labels, trail


def _partition_from_alternatives(variant, graph, labels, q, p, eps, trail):
    for alt in variant["partitions"]:
        if not _eval_pred(alt.get("when"), q, p, eps, trail):
            continue
        clique = frozenset(labels[t] for t in alt["clique"] if t in labels)
        indep = frozenset(labels[t] for t in alt["independent"] if t in labels)
        part = SplitPartition(clique, indep)
        ok, _ = validate_partition(graph, part)
        if ok:
            special = all(
                any(not graph.adjacent(v, u) for u in clique) for v in indep
            ) if clique else True
            return SplitPartition(clique, indep, special)
    raise InternalInconsistency(
        f"no published partition alternative validates at q={q}"
    )


def _build_spectrum_variant(descriptor, rule, q, p):
    mu = groups.spectrum_formulas(descriptor)
    prime_graph = groups.gk_from_spectrum(mu)
    compact = prime_graph.compact_form()
    graph = compact.quotient
    clique, indep = set(), set()
    for label in graph.vertices:
        members = set(label.members)
        if rule["kind"] == "by_order":
            targets = set(rule["independent_indices"])
            if p not in members and all(
                nt.mult_order(r, q) in targets for r in members
            ):
                indep.add(label)
            else:
                clique.add(label)
        elif rule["kind"] == "by_primes":
            if members & set(rule["clique_primes"]):
                clique.add(label)
            else:
                indep.add(label)
        else:
            raise ValueError(f"unknown partition rule {rule['kind']!r}")
    part = SplitPartition(frozenset(clique), frozenset(indep))
    ok, reason = validate_partition(graph, part)
    if not ok:
        raise InternalInconsistency(f"spectrum partition invalid at q={q}: {reason}")
    trail = [
        assume(f"maximal element orders are {sorted(mu.mu)}", "spectrum"),
    ]
    return graph, part, trail


def exceptional_compact(family: str, q: int, budget: int = nt.DEFAULT_BUDGET):
    """Compact class graph, split partition and certificate for one family at q.

    Returns (Graph over ClassLabel vertices, SplitPartition, Certificate).
    Field-size and simplicity constraints are enforced through the usual
    descriptor validation; ("2F4", 2) is routed to the Tits group.
    """
    if family in (groups.TITS_NAME, "Tits") or (family == "2F4" and q == 2):
        return tits_compact()
    if family not in _FAMILY_MAP:
        raise UnsupportedFamily(f"no compact diagram for family {family!r}")
    key, eps = _FAMILY_MAP[family]
    descriptor = _descriptor_for(family, q)
    p, _ = groups.char_and_degree(q)
    template = _load()["families"][key]
    for variant in template["variants"]:
        trail: list = []
        if not _eval_pred(variant.get("when"), q, p, eps, trail):
            continue
        if variant["strategy"] == "spectrum":
            graph, part, extra = _build_spectrum_variant(
                descriptor, variant["partition_rule"], q, p
            )
            trail.extend(extra)
        else:
            graph, labels, build_trail = _build_diagram(variant, q, p, eps, budget)
            trail.extend(build_trail)
            part = _partition_from_alternatives(variant, graph, labels, q, p, eps, trail)
        trail.append(
            assume(
                f"class graph is the published compact diagram of {family} at q={q}",
                "diagram",
            )
        )
        cert = Certificate(
            KIND_SPLIT,
            tuple(trail),
            partition=part,
            context={"family": family, "q": q, "epsilon": eps},
        )
        return graph, part, cert
    raise InternalInconsistency(f"no diagram variant applies for {family} at q={q}")


def tits_compact(budget: int = nt.DEFAULT_BUDGET):
    """The Tits group: its prime graph equals its own compact form."""
    descriptor = groups.sporadic(groups.TITS_NAME)
    mu = groups.spectrum_formulas(descriptor)
    prime_graph = groups.gk_from_spectrum(mu)
    compact = prime_graph.compact_form()
    graph = compact.quotient
    clique = frozenset(l for l in graph.vertices if set(l.members) & {2, 3})
    indep = frozenset(graph.vertices) - clique
    part = SplitPartition(clique, indep)
    ok, reason = validate_partition(graph, part)
    if not ok:  # pragma: no cover
        raise InternalInconsistency(f"Tits partition failed: {reason}")
    special = all(any(not graph.adjacent(v, u) for u in clique) for v in indep)
    part = SplitPartition(clique, indep, special)
    cert = Certificate(
        KIND_SPLIT,
        (assume(f"maximal element orders are {sorted(mu.mu)}", "spectrum"),),
        partition=part,
        context={"family": groups.TITS_NAME, "q": 2},
    )
    return graph, part, cert
