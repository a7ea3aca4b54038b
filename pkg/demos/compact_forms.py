#!/usr/bin/env python3
"""Compact forms: quotients by true twins.

A prime graph often carries clusters of primes with identical closed
neighborhoods; merging them gives the compact form.  Splitness can appear
only after compacting — and for solvable graphs can still fail.
"""

from gksplit import is_split_degree
from gksplit import gkbuild, groups

print("Ree groups 2G2(q): the spectrum gives the prime graph directly.")
d = groups.exceptional("2G2", 27)
mu = groups.spectrum_formulas(d)
print(f"maximal element orders of {d}: {sorted(mu.mu)}")
g = groups.gk_from_spectrum(mu)
print(f"prime graph: {g.vertices}, edges {g.edges}")
cf = g.compact_form()
print("compact classes:", sorted(tuple(sorted(c)) for c in cf.class_contents.values()))
print()

print("Symplectic groups B2(q): three clique classes merge into one.")
d = groups.classical("B", 2, 5)
g = groups.gk_from_spectrum(groups.spectrum_formulas(d))
print(f"prime graph of {d}: edges {g.edges}")
quotient = g.compact_form().quotient
print("compact form vertices:", [(v.name, v.members) for v in quotient.vertices])
print("compact form is split:", is_split_degree(quotient).split)
print()

print("The compact SOLVABLE graph can stay nonsplit: dimension 11 over GF(2).")
graph, cert = gkbuild.psl11_2_sc()
verdict = is_split_degree(graph)
print(f"nine classes, split = {verdict.split}")
print("encoded witness:", [v.name for v in cert.witness.vertices])
again = graph.compact_form()
print("already twin-free:", all(len(c) == 1 for c in again.class_contents.values()))
