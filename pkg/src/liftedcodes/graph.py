"""Coset graphs of linear codes and an exhaustive distance-regularity test."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import kernels
from .code import LinearCode
from .lifted import closed_form_array


@dataclass(frozen=True)
class CosetGraph:
    """Vertices are syndrome keys; s ~ s' when s' - s = gamma * h_j."""

    V: int
    generators: tuple[int, ...]
    neighbors: np.ndarray

    @property
    def degree(self) -> int:
        return len(self.generators)

    @property
    def num_edges(self) -> int:
        return self.V * self.degree // 2

    def edges(self):
        """Undirected edges (u, v) with u < v, in lexicographic order."""
        for u in range(self.V):
            for v in sorted(set(int(x) for x in self.neighbors[u])):
                if u < v:
                    yield u, v

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.neighbors[u] == v).any())


@dataclass(frozen=True)
class DRGParams:
    diameter: int
    b: tuple[int, ...]
    c: tuple[int, ...]
    V: int | None = None

    def to_dict(self) -> dict:
        out = {"V": self.V, "diameter": self.diameter, "b": list(self.b), "c": list(self.c)}
        return out

    def same_array(self, other: DRGParams) -> bool:
        return (self.diameter, self.b, self.c) == (other.diameter, other.b, other.c) and (
            self.V is None or other.V is None or self.V == other.V)


@dataclass(frozen=True)
class DRGVerdict:
    regular: bool
    params: DRGParams | None = None
    witness: tuple[int, int, int] | None = None  # (root, vertex, distance)

    def __bool__(self) -> bool:
        return self.regular


def build_coset_graph(code: LinearCode) -> CosetGraph:
    gens = tuple(int(g) for g in code.generators)
    if 0 in gens or len(set(gens)) != len(gens):
        raise ValueError("minimum distance below 3: the coset graph would have loops or multi-edges")
    nbr = code.neighbor_table()
    nbr.flags.writeable = False
    return CosetGraph(code.num_cosets, gens, nbr)


def verify_distance_regular(g: CosetGraph) -> DRGVerdict:
    """All-sources BFS; layer counts must depend only on the distance."""
    ok, diameter, b, c, witness = kernels.all_sources_regularity(g.neighbors)
    if not ok:
        return DRGVerdict(False, None, tuple(int(x) for x in witness))
    params = DRGParams(int(diameter), tuple(int(x) for x in b[:diameter]),
                       tuple(int(x) for x in c[1:]), g.V)
    return DRGVerdict(True, params, None)


def classical_params(q: int, r: int, m: int) -> DRGParams:
    """Bilinear-forms parameters: q^{rm} vertices, diameter min(r, m)."""
    arr = closed_form_array(q, m, r)
    return DRGParams(arr.rho, arr.b, arr.c, q ** (r * m))


def export_graph(g: CosetGraph, fmt: str) -> str:
    if fmt == "dot":
        lines = ["graph coset {"]
        lines.extend(f"  {v};" for v in range(g.V))
        lines.extend(f"  {u} -- {v};" for u, v in g.edges())
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps({"V": g.V, "degree": g.degree, "nodes": list(range(g.V)),
                           "edges": [list(e) for e in g.edges()]}) + "\n"
    raise ValueError(f"unsupported graph format {fmt!r}; use 'dot' or 'json'")
