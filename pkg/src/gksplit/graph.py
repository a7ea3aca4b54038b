"""Finite simple graph core.

Vertices are labels: either plain integers (primes in the intended use) or
``ClassLabel`` values naming a symbolic class of primes (the R_i classes of
the compact diagrams, or the merged classes produced by ``compact_form``).
Graphs are immutable after construction and every iteration order is
deterministic (sorted by a total label order), so witnesses, exports and
quotients are reproducible bit for bit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import LoopEdge, UnknownVertex

_SCHEMA = "gksplit/graph/1"


@dataclass(frozen=True)
class ClassLabel:
    """A named vertex class, optionally carrying its known prime members."""

    name: str
    members: tuple[int, ...] = ()

    def __repr__(self):
        if self.members:
            return f"ClassLabel({self.name!r}, {self.members!r})"
        return f"ClassLabel({self.name!r})"


def label_key(label):
    """Total order on labels: integers first (numeric), then classes by name."""
    if isinstance(label, int):
        return (0, label, "", ())
    if isinstance(label, ClassLabel):
        return (1, 0, label.name, label.members)
    raise TypeError(f"unsupported vertex label {label!r}")


def label_members(label) -> frozenset[int]:
    """Underlying prime members of a label; a bare integer is its own class."""
    if isinstance(label, int):
        return frozenset((label,))
    return frozenset(label.members)


@dataclass(frozen=True)
class ForbiddenWitness:
    """An induced subgraph certifying non-splitness.

    kind is one of "2K2", "C4", "C5"; vertices are listed so the claimed
    edges are consecutive (matching pairs for 2K2, cycle order for C4/C5).
    """

    kind: str
    vertices: tuple


def witness_edges(witness: ForbiddenWitness) -> list[tuple]:
    v = witness.vertices
    if witness.kind == "2K2":
        return [(v[0], v[1]), (v[2], v[3])]
    return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


class Graph:
    """Immutable finite simple undirected graph over sortable labels."""

    __slots__ = ("_vertices", "_adj", "_edges")

    def __init__(self, vertices, edges=()):
        vs = sorted(set(vertices), key=label_key)
        vset = set(vs)
        adj = {v: set() for v in vs}
        for e in edges:
            u, v = e
            if u not in vset:
                raise UnknownVertex(f"edge endpoint {u!r} is not a vertex")
            if v not in vset:
                raise UnknownVertex(f"edge endpoint {v!r} is not a vertex")
            if u == v:
                raise LoopEdge(f"loop at {u!r}")
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = tuple(vs)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._edges = tuple(
            (u, v)
            for i, u in enumerate(vs)
            for v in vs[i + 1 :]
            if v in self._adj[u]
        )

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edges(self) -> tuple:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    def neighbors(self, v) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(f"{v!r} is not a vertex") from None

    def adjacent(self, u, v) -> bool:
        return v in self.neighbors(u)

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def degree_sequence(self) -> list[int]:
        """Degrees in non-increasing order."""
        return sorted((len(nb) for nb in self._adj.values()), reverse=True)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self._vertices == other._vertices
            and self._edges == other._edges
        )

    def __hash__(self):
        return hash((self._vertices, self._edges))

    def __repr__(self):
        return f"Graph({self.n} vertices, {len(self._edges)} edges)"

    # -- constructions -----------------------------------------------------

    def induced(self, subset) -> "Graph":
        sub = set(subset)
        for v in sub:
            if v not in self._adj:
                raise UnknownVertex(f"{v!r} is not a vertex")
        edges = [(u, v) for u, v in self._edges if u in sub and v in sub]
        return Graph(sub, edges)

    def complement(self) -> "Graph":
        vs = self._vertices
        edges = [
            (u, v)
            for i, u in enumerate(vs)
            for v in vs[i + 1 :]
            if v not in self._adj[u]
        ]
        return Graph(vs, edges)

    def closed_nbhd(self, v) -> frozenset:
        """The ball of radius 1: the vertex together with its neighbours."""
        return self.neighbors(v) | {v}

    def components(self) -> list[frozenset]:
        """Connected components, each a vertex set, in sorted order."""
        seen = set()
        out = []
        for root in self._vertices:
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            while stack:
                for w in self._adj[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def is_clique(self, subset) -> bool:
        sub = sorted(set(subset), key=label_key)
        return all(
            self.adjacent(u, v) for i, u in enumerate(sub) for v in sub[i + 1 :]
        )

    def is_independent(self, subset) -> bool:
        sub = sorted(set(subset), key=label_key)
        return not any(
            self.adjacent(u, v) for i, u in enumerate(sub) for v in sub[i + 1 :]
        )

    # -- compact form --------------------------------------------------------

    def compact_form(self) -> "CompactForm":
        """Quotient by the true-twin relation u = v iff closed nbhds coincide.

        Class labels are deterministic: each class is named after its smallest
        member and carries the union of the members' underlying primes.
        """
        buckets: dict[frozenset, list] = {}
        for v in self._vertices:
            buckets.setdefault(self.closed_nbhd(v), []).append(v)
        class_of = {}
        contents = {}
        for group in buckets.values():
            group.sort(key=label_key)
            label = _merge_label(group)
            contents[label] = frozenset(group)
            for v in group:
                class_of[v] = label
        quotient_edges = set()
        for u, v in self._edges:
            cu, cv = class_of[u], class_of[v]
            if cu != cv:
                quotient_edges.add(tuple(sorted((cu, cv), key=label_key)))
        quotient = Graph(contents.keys(), sorted(quotient_edges, key=lambda e: (label_key(e[0]), label_key(e[1]))))
        return CompactForm(quotient, class_of, contents)

    # -- forbidden-subgraph search -------------------------------------------

    def find_forbidden(self, fast: bool = True):
        """Search for an induced 2K2, C4 or C5; None when the graph is split.

        A graph is split exactly when none of the three occurs, so with
        ``fast`` the Hammer-Simeone degree equality short-circuits the search
        for split graphs.  Callers that use this as an independent oracle pass
        ``fast=False`` to force the exhaustive enumeration.
        """
        if fast and _degree_equality_holds(self):
            return None
        vs = self._vertices
        m = len(vs)
        # 4-subsets: 2K2 (a perfect matching) and C4 (a chordless square).
        for a in range(m):
            for b in range(a + 1, m):
                for c in range(b + 1, m):
                    for d in range(c + 1, m):
                        quad = (vs[a], vs[b], vs[c], vs[d])
                        hit = _classify_quad(self, quad)
                        if hit is not None:
                            return hit
        # 5-subsets: C5.
        for a in range(m):
            for b in range(a + 1, m):
                for c in range(b + 1, m):
                    for d in range(c + 1, m):
                        for e in range(d + 1, m):
                            five = (vs[a], vs[b], vs[c], vs[d], vs[e])
                            cyc = _pentagon_order(self, five)
                            if cyc is not None:
                                return ForbiddenWitness("C5", cyc)
        return None

    # -- serialization -------------------------------------------------------

    def to_json(self) -> str:
        doc = {
            "schema": _SCHEMA,
            "vertices": [_encode_label(v) for v in self._vertices],
            "edges": [[_encode_label(u), _encode_label(v)] for u, v in self._edges],
        }
        return json.dumps(doc, indent=2, sort_keys=False)

    @staticmethod
    def from_json(text: str) -> "Graph":
        doc = json.loads(text)
        vertices = [_decode_label(x) for x in doc["vertices"]]
        edges = [(_decode_label(u), _decode_label(v)) for u, v in doc["edges"]]
        return Graph(vertices, edges)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in self._vertices:
            lines.append(f'  "{_label_text(v)}";')
        for u, v in self._edges:
            lines.append(f'  "{_label_text(u)}" -- "{_label_text(v)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def from_edges(vertices, edges=()) -> Graph:
    """Normalized graph from explicit vertex and edge lists."""
    return Graph(vertices, edges)


@dataclass(frozen=True)
class CompactForm:
    """Result of the true-twin quotient.

    quotient        graph over ClassLabel vertices
    class_map       source vertex -> its class label
    class_contents  class label -> nonempty frozenset of source vertices
    """

    quotient: Graph
    class_map: dict
    class_contents: dict

    def content_sets(self) -> frozenset:
        return frozenset(self.class_contents.values())


def _merge_label(group) -> ClassLabel:
    head = group[0]
    name = str(head) if isinstance(head, int) else head.name
    members = []
    for v in group:
        got = label_members(v)
        if not got:
            return ClassLabel(name)
        members.extend(got)
    return ClassLabel(name, tuple(sorted(set(members))))


def members_signature(g: Graph):
    """Canonical (vertex, edge) signature keyed by underlying prime members.

    Lets two class graphs built by different routes be compared as labelled
    class graphs.  Requires every label's members to be known and the member
    sets to be pairwise distinct.
    """
    sig = {}
    for v in g.vertices:
        got = label_members(v)
        if not got:
            raise ValueError(f"label {v!r} has unknown members")
        if got in sig.values():
            raise ValueError("member sets are not pairwise distinct")
        sig[v] = got
    vset = frozenset(sig.values())
    eset = frozenset(frozenset((sig[u], sig[v])) for u, v in g.edges)
    return vset, eset


def same_class_graph(g1: Graph, g2: Graph) -> bool:
    """Equality of class graphs up to renaming, via member-set signatures."""
    return members_signature(g1) == members_signature(g2)


def _degree_equality_holds(g: Graph) -> bool:
    degs = g.degree_sequence()
    if not degs:
        return True
    m = 0
    for i, d in enumerate(degs, start=1):
        if d >= i - 1:
            m = i
    return sum(degs[:m]) == m * (m - 1) + sum(degs[m:])


def _classify_quad(g: Graph, quad):
    pairs = [
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
    ]
    present = [g.adjacent(quad[i], quad[j]) for i, j in pairs]
    count = sum(present)
    if count == 2:
        hit = [pairs[k] for k, yes in enumerate(present) if yes]
        (a, b), (c, d) = hit
        if len({a, b, c, d}) == 4:
            return ForbiddenWitness(
                "2K2", (quad[a], quad[b], quad[c], quad[d])
            )
    elif count == 4:
        degs = [0, 0, 0, 0]
        for k, yes in enumerate(present):
            if yes:
                i, j = pairs[k]
                degs[i] += 1
                degs[j] += 1
        if degs == [2, 2, 2, 2]:
            a = quad[0]
            nb = [v for v in quad[1:] if g.adjacent(a, v)]
            other = next(v for v in quad[1:] if v not in nb)
            return ForbiddenWitness("C4", (a, nb[0], other, nb[1]))
    return None


def _pentagon_order(g: Graph, five):
    if sum(1 for i in range(5) for j in range(i + 1, 5) if g.adjacent(five[i], five[j])) != 5:
        return None
    inside = {v: sum(1 for w in five if w != v and g.adjacent(v, w)) for v in five}
    if any(d != 2 for d in inside.values()):
        return None
    # 5 edges, all inner degrees 2, so it is C5; walk the cycle.
    start = five[0]
    order = [start]
    prev = None
    cur = start
    for _ in range(4):
        nxt = next(
            w for w in five if w != cur and w != prev and g.adjacent(cur, w)
        )
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


def _encode_label(label):
    if isinstance(label, int):
        return label
    return {"class": {"name": label.name, "members": list(label.members)}}


def _decode_label(obj):
    if isinstance(obj, int):
        return obj
    if isinstance(obj, dict) and "class" in obj:
        cls = obj["class"]
        return ClassLabel(str(cls["name"]), tuple(int(x) for x in cls.get("members", ())))
    raise ValueError(f"cannot decode vertex label {obj!r}")


def _label_text(label) -> str:
    if isinstance(label, int):
        return str(label)
    if label.members:
        return f"{label.name}={{{','.join(map(str, label.members))}}}"
    return label.name
