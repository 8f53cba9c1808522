"""Closure order on the (3,4) strata and its Hasse diagram."""

from __future__ import annotations

from dataclasses import dataclass

from .classify34 import (
    O5, PHI2, PHI4, PHI6, all_labels, label_mod_s4, label_sort_key, orbit_dim, phi_of_label,
)
from .matroid import leq


@dataclass(frozen=True)
class HasseEdge:
    upper: object
    lower: object


def closure_contains(A, B):
    """True when stratum B lies in the closure of stratum A."""
    if A.kind == O5 and B.kind == O5:
        return A.param == B.param
    if A.kind == O5:
        return B.kind in (PHI4, PHI2)
    if B.kind == O5:
        return leq(PHI6, phi_of_label(A))
    return leq(phi_of_label(B), phi_of_label(A))


def strictly_above(A, B):
    return A != B and closure_contains(A, B)


def covers(nodes, above):
    """Pairs (a, b) with a > b and nothing strictly between."""
    out = []
    for a in nodes:
        for b in nodes:
            if not above(a, b):
                continue
            if not any(above(a, c) and above(c, b) for c in nodes):
                out.append((a, b))
    return out


def hasse(p):
    nodes = all_labels(p)
    edges = covers(nodes, strictly_above)
    edges.sort(key=lambda ab: (label_sort_key(ab[0]), label_sort_key(ab[1])))
    return [HasseEdge(a, b) for a, b in edges]


def mod_s4_nodes(p):
    return sorted({label_mod_s4(L) for L in all_labels(p)}, key=lambda c: _class_key(c, p))


def _class_key(name, p):
    members = [L for L in all_labels(p) if label_mod_s4(L) == name]
    return min(label_sort_key(L) for L in members)


def mod_s4_hasse(p):
    """Covers of the quotient order: class A above class B when some member of A is above some member of B."""
    labels = all_labels(p)
    classes = {}
    for L in labels:
        classes.setdefault(label_mod_s4(L), []).append(L)
    names = mod_s4_nodes(p)

    def above(a, b):
        return a != b and any(strictly_above(x, y) for x in classes[a] for y in classes[b])

    return covers(names, above), {c: orbit_dim(classes[c][0]) for c in names}


def _quote(s):
    return '"' + s.replace('"', '\\"') + '"'


def to_dot(p, mod_s4=False):
    """DOT digraph of the covers, edges directed from the larger stratum to the smaller."""
    lines = ["digraph hasse {"]
    if mod_s4:
        edges, dims = mod_s4_hasse(p)
        for c in mod_s4_nodes(p):
            lines.append(f"  {_quote(c)} [name={_quote(c)}, dim={dims[c]}];")
        for a, b in edges:
            lines.append(f"  {_quote(a)} -> {_quote(b)};")
    else:
        for L in all_labels(p):
            lines.append(f"  {_quote(L.name)} [name={_quote(L.name)}, dim={orbit_dim(L)}];")
        for edge in hasse(p):
            lines.append(f"  {_quote(edge.upper.name)} -> {_quote(edge.lower.name)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
