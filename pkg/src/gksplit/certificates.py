"""Machine-checkable certificates.

A certificate is a list of steps.  Each step carries a human-readable claim,
a justification tag, and optionally a ground arithmetic check.  Steps with a
check are re-verifiable by :func:`recheck` using nothing but the number
theory module; steps without one are recorded assumptions (group-theoretic
facts imported under their tag) and are clearly separated when auditing.

Justification tags
------------------
``arithmetic``      pure integer computation, always carries a check
``Zsigmondy``       existence/absence of primitive prime divisors
``Fermat``          r in R_i(n) implies i divides r - 1 (odd r)
``Lemma5.2``        |R_k(q)| > 1 via the two base-field divisor wings
``Lemma5.3.iii``    adjacency criterion for primes with large order indices
``Lemma5.4``        primes nonadjacent to the characteristic have large indices
``Lemma5.5(AK)``    cyclic Sylow / normalizer-index bound (solvable graphs)
``Lemma5.6(AK)``    solvable {r,s}-subgroup forces a divisibility (solvable graphs)
``Lemma5.7(tor)``   reducibility of solvable {r,n}-subgroups of GL_n(p)
``reference-table/reference-diagram/diagram/spectrum``  embedded reference data
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import numtheory as nt
from .graph import ForbiddenWitness
from .splitcheck import SplitPartition

_SCHEMA = "gksplit/certificate/1"

TAG_ARITH = "arithmetic"
TAG_ZSIGMONDY = "Zsigmondy"
TAG_FERMAT = "Fermat"
TAG_L52 = "Lemma5.2"
TAG_L53 = "Lemma5.3.iii"
TAG_L54 = "Lemma5.4"
TAG_AK_CYCLIC = "Lemma5.5(AK)"
TAG_AK_SOLV = "Lemma5.6(AK)"
TAG_TOR = "Lemma5.7(tor)"

KIND_SPLIT = "split"
KIND_NONSPLIT = "nonsplit"
KIND_CHAIN = "lemma-chain"


@dataclass(frozen=True)
class CertStep:
    claim: str
    tag: str = TAG_ARITH
    check: dict | None = None

    @property
    def assumption(self) -> bool:
        return self.check is None


@dataclass(frozen=True)
class Certificate:
    kind: str
    steps: tuple[CertStep, ...] = ()
    partition: SplitPartition | None = None
    witness: ForbiddenWitness | None = None
    context: dict = field(default_factory=dict)

    def assumptions(self) -> list[CertStep]:
        return [s for s in self.steps if s.assumption]

    def checked_steps(self) -> list[CertStep]:
        return [s for s in self.steps if not s.assumption]

    def to_json(self) -> str:
        doc = {
            "schema": _SCHEMA,
            "kind": self.kind,
            "context": self.context,
            "steps": [
                {"claim": s.claim, "tag": s.tag, "check": s.check}
                for s in self.steps
            ],
        }
        if self.partition is not None:
            c, i = self.partition.as_sorted()
            doc["partition"] = {
                "clique": [_enc(v) for v in c],
                "independent": [_enc(v) for v in i],
                "special": self.partition.special,
            }
        if self.witness is not None:
            doc["witness"] = {
                "kind": self.witness.kind,
                "vertices": [_enc(v) for v in self.witness.vertices],
            }
        return json.dumps(doc, indent=2)


def _enc(v):
    if isinstance(v, int):
        return v
    return {"class": {"name": v.name, "members": list(v.members)}}


def step(claim: str, tag: str = TAG_ARITH, **check) -> CertStep:
    """A machine-checked step; the keyword payload is the check expression."""
    if "op" not in check:
        raise ValueError("checked steps need an 'op' field")
    return CertStep(claim, tag, check)


def assume(claim: str, tag: str) -> CertStep:
    """A recorded assumption (no arithmetic content)."""
    return CertStep(claim, tag, None)


# ---------------------------------------------------------------------------
# The independent re-checker.  It dispatches on the closed operation language
# below and consults only the number theory module, so an audit of a
# serialized certificate does not trust any of the construction code.
# ---------------------------------------------------------------------------

_RELS = {
    "lt": lambda a, b: a < b,
    "le": lambda a, b: a <= b,
    "eq": lambda a, b: a == b,
    "ne": lambda a, b: a != b,
    "gt": lambda a, b: a > b,
    "ge": lambda a, b: a >= b,
}


def _check_one(check: dict) -> bool:
    op = check["op"]
    if op == "is_prime":
        return nt.is_prime(check["n"])
    if op == "is_composite":
        n = check["n"]
        return n > 1 and not nt.is_prime(n)
    if op == "mult_order":
        return nt.mult_order(check["r"], check["base"]) == check["equals"]
    if op == "raw_order":
        return nt.raw_order(check["r"], check["base"]) == check["equals"]
    if op == "divides":
        return check["b"] % check["a"] == 0
    if op == "not_divides":
        return check["b"] % check["a"] != 0
    if op == "cmp":
        return _RELS[check["rel"]](check["a"], check["b"])
    if op == "mod_eq":
        return check["a"] % check["m"] == check["equals"]
    if op == "zsigmondy_nonempty":
        return not nt.is_zsigmondy_exception(check["index"], check["base"])
    if op == "zsigmondy_empty":
        return nt.is_zsigmondy_exception(check["index"], check["base"])
    if op == "pi_not_subset":
        # pi(a) not contained in pi(b)
        return not nt.prime_set(check["a"]) <= nt.prime_set(check["b"])
    if op == "pi_part_eq":
        return nt.pi_part(check["a"], nt.prime_set(check["pi_of"])) == check["equals"]
    if op == "in_interval":
        x = check["x"]
        lo_ok = x > check["lo"] if check.get("lo_open", True) else x >= check["lo"]
        hi_ok = x < check["hi"] if check.get("hi_open", False) else x <= check["hi"]
        return lo_ok and hi_ok
    if op == "primitive_root":
        return nt.is_primitive_root(check["p"], check["mod"])
    if op == "ppd_member":
        return check["r"] in nt.ppd_set(check["index"], check["base"])
    if op == "gcd_eq":
        from math import gcd

        return gcd(check["a"], check["b"]) == check["equals"]
    raise ValueError(f"unknown check operation {op!r}")


def recheck(cert: Certificate) -> list[str]:
    """Re-verify every checked step; returns the claims that failed."""
    failures = []
    for s in cert.steps:
        if s.assumption:
            continue
        try:
            ok = _check_one(s.check)
        except Exception as exc:  # surfaced, not swallowed
            failures.append(f"{s.claim}: checker error {exc}")
            continue
        if not ok:
            failures.append(s.claim)
    return failures


def verify_certificate(cert: Certificate) -> bool:
    return not recheck(cert)


def certificate_from_json(text: str) -> Certificate:
    doc = json.loads(text)
    steps = tuple(
        CertStep(s["claim"], s["tag"], s.get("check")) for s in doc["steps"]
    )
    partition = None
    if "partition" in doc:
        block = doc["partition"]
        partition = SplitPartition(
            frozenset(_dec(v) for v in block["clique"]),
            frozenset(_dec(v) for v in block["independent"]),
            block.get("special", False),
        )
    witness = None
    if "witness" in doc:
        block = doc["witness"]
        witness = ForbiddenWitness(
            block["kind"], tuple(_dec(v) for v in block["vertices"])
        )
    return Certificate(doc["kind"], steps, partition, witness, doc.get("context", {}))


def _dec(v):
    from .graph import ClassLabel

    if isinstance(v, int):
        return v
    cls = v["class"]
    return ClassLabel(str(cls["name"]), tuple(int(x) for x in cls.get("members", ())))
