"""Canonical forms, certified isomorphism testing, and automorphism groups.

The canonical code of a triangulation is obtained by running a deterministic
breadth-first traversal of the face adjacency from every starting flag in
both orientation senses, relabeling vertices in first-visit order, and
taking the lexicographically smallest relabeled face list.  Code equality is
equivalent to isomorphism, and the starts that achieve the minimum yield the
full automorphism group (the flag action on a connected closed surface is
free, so distinct qualifying flags give distinct automorphisms).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import common_neighbor_graph, graph_shape
from .surface import Face, Triangulation, orientability, skeleton_graph

Code = tuple[int, ...]


@dataclass(frozen=True)
class Flag:
    """A mutually incident (vertex, directed edge, face) triple."""

    vertex: int
    edge: tuple[int, int]  # (vertex, other endpoint)
    face: Face


@dataclass(frozen=True)
class CanonicalForm:
    code: Code  # flattened canonical face list
    relabeling: tuple[int, ...]  # input vertex -> canonical vertex

    @property
    def faces(self) -> tuple[Face, ...]:
        it = iter(self.code)
        return tuple(zip(it, it, it))


@dataclass(frozen=True)
class SymmetryGroup:
    elements: tuple[tuple[int, ...], ...]  # vertex permutations
    vertex_orbits: tuple[tuple[int, ...], ...]
    face_orbits: tuple[tuple[Face, ...], ...]
    flag_orbits: tuple[tuple[Flag, ...], ...]

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class IsomorphismResult:
    mapping: Optional[tuple[int, ...]]  # A vertex -> B vertex, or None
    distinguishing_invariant: Optional[str] = None

    @property
    def isomorphic(self) -> bool:
        return self.mapping is not None


def flags(t: Triangulation) -> list[Flag]:
    """All 6*f_2 flags of the triangulation."""
    out = []
    for f in t.faces:
        for v in f:
            for u in f:
                if u != v:
                    out.append(Flag(v, (v, u), f))
    return out


def _edge_table(t: Triangulation) -> dict[tuple[int, int], tuple[tuple[int, int], tuple[int, int]]]:
    # edge -> ((face index, opposite vertex), (face index, opposite vertex))
    table: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for fi, (a, b, c) in enumerate(t.faces):
        table.setdefault((a, b), []).append((fi, c))
        table.setdefault((a, c), []).append((fi, b))
        table.setdefault((b, c), []).append((fi, a))
    return {e: (fs[0], fs[1]) for e, fs in table.items()}


def _traverse(t: Triangulation, table, start: tuple[int, int, int], start_fi: int):
    """BFS over face adjacency from one oriented starting face; returns the
    relabeled (flattened, sorted) face list and the label array."""
    label = [-1] * t.n
    x, y, z = start
    label[x], label[y], label[z] = 0, 1, 2
    nxt = 3
    visited = [False] * len(t.faces)
    visited[start_fi] = True
    queue = deque([(x, y, z, start_fi)])
    while queue:
        x, y, z, fi = queue.popleft()
        for p, q in ((x, y), (y, z), (z, x)):
            e = (p, q) if p < q else (q, p)
            (f1, w1), (f2, w2) = table[e]
            gi, w = (f2, w2) if f1 == fi else (f1, w1)
            if not visited[gi]:
                visited[gi] = True
                if label[w] < 0:
                    label[w] = nxt
                    nxt += 1
                queue.append((q, p, w, gi))
    rel = sorted(
        tuple(sorted((label[a], label[b], label[c]))) for a, b, c in t.faces
    )
    code = tuple(v for f in rel for v in f)
    return code, label


def _orientations(face: Face):
    a, b, c = face
    return ((a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a))


def canonical_form(t: Triangulation) -> CanonicalForm:
    """Deterministic relabeling-invariant encoding of the surface."""
    table = _edge_table(t)
    best: Optional[Code] = None
    best_label: Optional[list[int]] = None
    for fi, face in enumerate(t.faces):
        for start in _orientations(face):
            code, label = _traverse(t, table, start, fi)
            if best is None or code < best:
                best, best_label = code, label
    assert best is not None and best_label is not None
    return CanonicalForm(best, tuple(best_label))


def canonical_code(t: Triangulation) -> Code:
    return canonical_form(t).code


def _apply(perm: Sequence[int], faces: Sequence[Face]) -> frozenset[Face]:
    return frozenset(tuple(sorted((perm[a], perm[b], perm[c]))) for a, b, c in faces)


def _invert(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v] = i
    return inv


def find_isomorphism(a: Triangulation, b: Triangulation) -> IsomorphismResult:
    """Explicit face-preserving bijection if one exists, else the first
    distinguishing invariant (cheapest invariant first)."""
    if a.n != b.n:
        return IsomorphismResult(None, f"vertex count ({a.n} vs {b.n})")
    if a.f2 != b.f2:
        return IsomorphismResult(None, f"face count ({a.f2} vs {b.f2})")
    oa, ob = orientability(a), orientability(b)
    if oa != ob:
        return IsomorphismResult(None, f"orientability ({oa} vs {ob})")
    for c in range(7):
        sa = graph_shape(common_neighbor_graph(skeleton_graph(a), c))
        sb = graph_shape(common_neighbor_graph(skeleton_graph(b), c))
        if sa != sb:
            return IsomorphismResult(None, f"G_{c}(EG) shape ({sa} vs {sb})")
    fa, fb = canonical_form(a), canonical_form(b)
    if fa.code != fb.code:
        return IsomorphismResult(None, "canonical code")
    inv_b = _invert(fb.relabeling)
    mapping = tuple(inv_b[fa.relabeling[v]] for v in range(a.n))
    if _apply(mapping, a.faces) != b.face_set():
        raise AssertionError("canonical relabelings produced a non-isomorphism")
    return IsomorphismResult(mapping)


def automorphism_group(t: Triangulation) -> SymmetryGroup:
    """The complete automorphism group as explicit vertex permutations."""
    table = _edge_table(t)
    best: Optional[Code] = None
    labelings: list[list[int]] = []
    for fi, face in enumerate(t.faces):
        for start in _orientations(face):
            code, label = _traverse(t, table, start, fi)
            if best is None or code < best:
                best = code
                labelings = [label]
            elif code == best:
                labelings.append(label)
    base_inv = _invert(labelings[0])
    face_set = t.face_set()
    elements = []
    for label in labelings:
        perm = tuple(base_inv[label[v]] for v in range(t.n))
        if _apply(perm, t.faces) != face_set:
            raise AssertionError("traversal produced a non-automorphism")
        elements.append(perm)
    elements = tuple(sorted(set(elements)))

    vertex_orbits = _orbit_partition(range(t.n), lambda v: {p[v] for p in elements})
    face_orbits = _orbit_partition(
        t.faces,
        lambda f: {tuple(sorted((p[f[0]], p[f[1]], p[f[2]]))) for p in elements},
    )
    flag_orbits = _orbit_partition(
        flags(t),
        lambda fl: {
            Flag(
                p[fl.vertex],
                (p[fl.vertex], p[fl.edge[1]]),
                tuple(sorted((p[fl.face[0]], p[fl.face[1]], p[fl.face[2]]))),
            )
            for p in elements
        },
    )
    return SymmetryGroup(elements, vertex_orbits, face_orbits, flag_orbits)


def _orbit_partition(items, orbit_of):
    seen = set()
    parts = []
    for x in items:
        if x in seen:
            continue
        orbit = orbit_of(x)
        seen.update(orbit)
        parts.append(tuple(sorted(orbit, key=repr)))
    return tuple(parts)


def regularity_flags(
    t: Triangulation, group: Optional[SymmetryGroup] = None
) -> tuple[bool, bool]:
    """(weakly regular, combinatorially regular): vertex- and
    flag-transitivity of the automorphism group."""
    if group is None:
        group = automorphism_group(t)
    return len(group.vertex_orbits) == 1, len(group.flag_orbits) == 1
