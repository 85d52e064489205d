"""JSON wire formats for complexes, ideals, graphs, Betti tables and
relation trees, plus the human-readable monomial syntax and graph6 import.

Vertices and variable indices are 1-based on the wire; relation-tree and
leaf-order indices are likewise shifted to 1-based here and nowhere else.
"""

from __future__ import annotations

import json
import re

from .complexes import SimplicialComplex
from .errors import DomainError
from .graphs import Graph
from .homological import BettiTable
from .ideals import Monomial, MonomialIdeal
from .quasitrees import RelationTree


def load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None


def complex_from_json(obj, minimalize: bool = False) -> SimplicialComplex:
    if not isinstance(obj, dict) or "ambient" not in obj or "facets" not in obj:
        raise DomainError('a complex needs the keys "ambient" and "facets"')
    n = obj["ambient"]
    facets = obj["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise DomainError('"facets" must be a list of vertex lists')
    if minimalize:
        return SimplicialComplex.from_faces(n, facets)
    return SimplicialComplex(n, facets)


def complex_to_json(cx: SimplicialComplex) -> dict:
    return {"ambient": cx.n, "facets": [list(f) for f in cx.facets]}


_MONOMIAL_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def monomial_from_str(text: str, num_vars: int) -> Monomial:
    """Parse "x4*x5*x6" or "x1^2*x3" into an exponent vector."""
    exps = [0] * num_vars
    for part in text.replace(" ", "").split("*"):
        m = _MONOMIAL_RE.match(part)
        if not m:
            raise DomainError(f"cannot parse monomial factor {part!r}")
        var = int(m.group(1))
        if not 1 <= var <= num_vars:
            raise DomainError(f"variable x{var} out of range for {num_vars} variables")
        exps[var - 1] += int(m.group(2) or 1)
    return Monomial(exps)


def monomial_to_str(m: Monomial) -> str:
    if m.degree == 0:
        return "1"
    parts = []
    for i, e in enumerate(m.exponents):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts)


def ideal_from_json(obj) -> MonomialIdeal:
    if not isinstance(obj, dict) or "vars" not in obj or "generators" not in obj:
        raise DomainError('an ideal needs the keys "vars" and "generators"')
    n = obj["vars"]
    gens = []
    for g in obj["generators"]:
        if isinstance(g, str):
            gens.append(monomial_from_str(g, n))
        elif isinstance(g, list):
            if len(g) != n:
                raise DomainError(
                    f"exponent vector {g} has length {len(g)}, expected {n}"
                )
            gens.append(Monomial(g))
        else:
            raise DomainError(f"generator {g!r} is neither a string nor a vector")
    if not gens:
        return MonomialIdeal(n, [])
    from .ideals import minimalize as _minimalize

    return _minimalize(gens)


def ideal_to_json(ideal: MonomialIdeal, pretty: bool = False) -> dict:
    if pretty:
        gens = [monomial_to_str(g) for g in ideal.generators]
    else:
        gens = [list(g.exponents) for g in ideal.generators]
    return {"vars": ideal.num_vars, "generators": gens}


def graph_from_json(obj) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise DomainError('a graph needs the keys "n" and "edges"')
    return Graph(obj["n"], [tuple(e) for e in obj["edges"]])


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_graph6(text: str) -> Graph:
    """Decode a single graph6 line (graphs up to 62 vertices)."""
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<") :]
    if not data:
        raise DomainError("empty graph6 string")
    values = [ord(c) - 63 for c in data]
    if any(v < 0 or v > 63 for v in values):
        raise DomainError("graph6 characters must be in the range 63..126")
    n = values[0]
    if n == 63:
        raise DomainError("graph6 inputs beyond 62 vertices are not supported")
    bits = []
    for v in values[1:]:
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise DomainError("graph6 string is too short for its vertex count")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i + 1, j + 1))
            idx += 1
    return Graph(max(n, 1), edges)


def betti_to_json(table: BettiTable, gen_degrees) -> dict:
    degrees = set(gen_degrees)
    linear = len(degrees) == 1 and table.is_linear(next(iter(degrees)))
    return {
        "vars": table.num_vars,
        "entries": [
            {"i": i, "multidegree": list(b), "rank": r} for (i, b), r in table.entries
        ],
        "projdim": table.projdim,
        "reg": table.regularity,
        "linear": linear,
    }


def relation_tree_to_json(tree: RelationTree) -> dict:
    labels = {}
    for (i, j), (u_ij, u_ji) in tree.labels:
        labels[f"{i + 1}-{j + 1}"] = {
            "u_ij": list(u_ij.exponents),
            "u_ji": list(u_ji.exponents),
        }
    return {
        "t": tree.num_generators,
        "edges": [[i + 1, j + 1] for i, j in tree.edges],
        "labels": labels,
    }


def relation_tree_from_json(obj) -> RelationTree:
    if not isinstance(obj, dict) or "t" not in obj or "edges" not in obj:
        raise DomainError('a relation tree needs the keys "t", "edges", "labels"')
    edges = []
    labels = []
    for e in obj["edges"]:
        i, j = sorted(e)
        edges.append((i - 1, j - 1))
    for key, lab in obj.get("labels", {}).items():
        a, b = key.split("-")
        labels.append(
            (
                (int(a) - 1, int(b) - 1),
                (Monomial(lab["u_ij"]), Monomial(lab["u_ji"])),
            )
        )
    return RelationTree(obj["t"], tuple(sorted(edges)), tuple(sorted(labels)))
