"""Van Kampen diagrams as combinatorial planar maps.

A diagram is a set of vertices, oriented labelled edges, one boundary walk
per 2-cell and an outer walk. Planarity and simple connectivity are certified
by connectivity, every edge being used exactly twice by the walks, and the
Euler formula ``V - E + (F + 1) = 2``.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from fpgroups.presentations import Presentation, closure_codes
from fpgroups.words import Word, cyclic_reduce, reduce


@dataclass(frozen=True)
class Edge:
    id: int
    src: int
    dst: int
    label: str


# a walk entry: (edge id, "f" or "b")
Step = tuple[int, str]


@dataclass(frozen=True)
class VanKampenDiagram:
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    faces: tuple[tuple[Step, ...], ...]
    outer: tuple[Step, ...]
    basepoint: tuple[int, int] = (0, 0)  # (vertex, position in outer walk)
    _by_id: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_id", {e.id: e for e in self.edges})

    def edge(self, eid: int) -> Edge:
        return self._by_id[eid]

    def step_ends(self, step: Step) -> tuple[int, int]:
        e = self._by_id[step[0]]
        return (e.src, e.dst) if step[1] == "f" else (e.dst, e.src)

    def walk_label(self, walk) -> Word:
        return Word.from_letters(
            (self._by_id[eid].label, 1 if d == "f" else -1) for eid, d in walk
        )


def _walk_closed(d: VanKampenDiagram, walk) -> bool:
    ends = [d.step_ends(s) for s in walk]
    return all(ends[i][1] == ends[(i + 1) % len(ends)][0] for i in range(len(ends)))


def validate(d: VanKampenDiagram, p: Presentation | None = None) -> list[str]:
    """Violations of the structural conditions (and face labels, if ``p`` is given).

    An empty list means the diagram is valid.
    """
    out = []
    vset = set(d.vertices)
    if len(vset) != len(d.vertices):
        out.append("repeated vertex id")
    if len(d._by_id) != len(d.edges):
        out.append("repeated edge id")
    for e in d.edges:
        if e.src not in vset or e.dst not in vset:
            out.append(f"edge {e.id}: endpoint not a vertex")
    walks = list(d.faces) + [d.outer]
    for w in walks:
        for eid, direction in w:
            if eid not in d._by_id:
                out.append(f"walk uses unknown edge {eid}")
            if direction not in ("f", "b"):
                out.append(f"bad direction {direction!r} on edge {eid}")
    if out:
        return out
    counts = Counter(eid for w in walks for eid, _ in w)
    for e in d.edges:
        if counts[e.id] != 2:
            out.append(f"edge multiplicity: edge {e.id} used {counts[e.id]} times")
    for k, face in enumerate(d.faces):
        if not face:
            out.append(f"face {k}: empty boundary walk")
        elif not _walk_closed(d, face):
            out.append(f"face {k}: boundary walk not closed")
    if d.outer and not _walk_closed(d, d.outer):
        out.append("outer walk not closed")
    v0, pos = d.basepoint
    if d.outer:
        if not 0 <= pos < len(d.outer) or d.step_ends(d.outer[pos])[0] != v0:
            out.append("basepoint does not sit on the outer walk")
    elif v0 not in vset:
        out.append("basepoint is not a vertex")
    if not _connected(d):
        out.append("underlying graph is disconnected")
    euler = len(d.vertices) - len(d.edges) + len(d.faces) + 1
    if euler != 2:
        out.append(f"Euler characteristic {euler} != 2")
    if p is not None:
        idx = p.index()
        rstar = set(closure_codes(p))
        for k, face in enumerate(d.faces):
            lab = d.walk_label(face)
            if not lab.generators() <= set(idx) or lab.codes(idx) not in rstar:
                out.append(f"face {k}: face label not in R* ({lab})")
    return out


def _connected(d: VanKampenDiagram) -> bool:
    if not d.vertices:
        return False
    adj = {v: [] for v in d.vertices}
    for e in d.edges:
        adj[e.src].append(e.dst)
        adj[e.dst].append(e.src)
    seen = {d.vertices[0]}
    todo = [d.vertices[0]]
    while todo:
        v = todo.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return len(seen) == len(adj)


def is_regular_face(d: VanKampenDiagram, k: int) -> bool:
    """True if the boundary walk of face ``k`` visits no vertex twice."""
    starts = [d.step_ends(s)[0] for s in d.faces[k]]
    return len(set(starts)) == len(starts)


def boundary_label(d: VanKampenDiagram, reduced: bool = False) -> Word:
    problems = validate(d)
    if problems:
        raise ValueError("invalid diagram: " + "; ".join(problems))
    pos = d.basepoint[1]
    walk = d.outer[pos:] + d.outer[:pos]
    w = d.walk_label(walk)
    return reduce(w) if reduced else w


def _same_cyclic_word(u: Word, v: Word) -> bool:
    a = list(cyclic_reduce(u).letters())
    b = list(cyclic_reduce(v).letters())
    if len(a) != len(b):
        return False
    if not a:
        return True
    binv = [(g, -e) for g, e in reversed(b)]
    doubled = a + a
    n = len(a)
    return any(doubled[i:i + n] == b or doubled[i:i + n] == binv for i in range(n))


def certify_trivial(d: VanKampenDiagram, p: Presentation, w: Word) -> bool:
    """True only if ``d`` is a valid diagram over ``p`` whose boundary reads ``w``
    up to cyclic permutation, inversion and free reduction.

    A True result proves ``w`` is trivial in ``p``; False proves nothing.
    """
    if validate(d, p):
        return False
    return _same_cyclic_word(boundary_label(d), w)


def grid_diagram(u: Word, k: int, c: str = "c") -> VanKampenDiagram:
    """Stack of ``k`` rows of commutator squares over the letters of ``u``.

    Vertex ``(i, j)`` (0-based) gets id ``j * (h + 1) + i``. Boundary reads
    ``u c^k u^-1 c^-k`` from the bottom-left corner. An empty ``u`` gives a
    bare path of ``k`` vertical edges.
    """
    letters = list(u.letters())
    h = len(letters)
    if k < 1:
        raise ValueError("k must be positive")
    if c in u.generators():
        raise ValueError(f"{c!r} is reserved for the vertical edges")

    def vid(i, j):
        return j * (h + 1) + i

    edges = []
    hor, ver = {}, {}
    for j in range(k + 1):
        for i in range(h):
            g, e = letters[i]
            src, dst = (vid(i, j), vid(i + 1, j)) if e > 0 else (vid(i + 1, j), vid(i, j))
            hor[i, j] = (len(edges), "f" if e > 0 else "b")
            edges.append(Edge(len(edges), src, dst, g))
    for j in range(k):
        for i in range(h + 1):
            ver[i, j] = (len(edges), "f")
            edges.append(Edge(len(edges), vid(i, j), vid(i, j + 1), c))

    def back(step):
        return step[0], "b" if step[1] == "f" else "f"

    faces = []
    for j in range(k):
        for i in range(h):
            faces.append((hor[i, j], ver[i + 1, j], back(hor[i, j + 1]), back(ver[i, j])))
    outer = [hor[i, 0] for i in range(h)]
    outer += [ver[h, j] for j in range(k)]
    outer += [back(hor[i, k]) for i in reversed(range(h))]
    outer += [back(ver[0, j]) for j in reversed(range(k))]
    vertices = tuple(range((h + 1) * (k + 1)))
    return VanKampenDiagram(vertices, tuple(edges), tuple(faces), tuple(outer), (vid(0, 0), 0))


def point_diagram() -> VanKampenDiagram:
    return VanKampenDiagram((0,), (), (), (), (0, 0))


# -- JSON and DOT ----------------------------------------------------------

def diagram_to_json(d: VanKampenDiagram) -> dict:
    return {
        "vertices": list(d.vertices),
        "edges": [{"id": e.id, "src": e.src, "dst": e.dst, "label": e.label} for e in d.edges],
        "faces": [[{"e": eid, "dir": di} for eid, di in f] for f in d.faces],
        "outer": [{"e": eid, "dir": di} for eid, di in d.outer],
        "basepoint": {"vertex": d.basepoint[0], "position": d.basepoint[1]},
    }


def diagram_from_json(data: dict | str) -> VanKampenDiagram:
    if isinstance(data, str):
        data = json.loads(data)
    edges = tuple(Edge(int(e["id"]), int(e["src"]), int(e["dst"]), str(e["label"])) for e in data["edges"])
    faces = tuple(tuple((int(s["e"]), s["dir"]) for s in f) for f in data["faces"])
    outer = tuple((int(s["e"]), s["dir"]) for s in data["outer"])
    bp = data.get("basepoint", {"vertex": data["vertices"][0], "position": 0})
    return VanKampenDiagram(tuple(int(v) for v in data["vertices"]), edges, faces, outer,
                            (int(bp["vertex"]), int(bp["position"])))


def to_dot(d: VanKampenDiagram) -> str:
    lines = ["digraph vk {"]
    lines += [f"  {v};" for v in d.vertices]
    lines += [f'  {e.src} -> {e.dst} [label="{e.label}"];' for e in d.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
