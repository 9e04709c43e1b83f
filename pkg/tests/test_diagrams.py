import itertools
import json
import random
from dataclasses import replace

import pytest

from fpgroups import diagrams as D
from fpgroups.presentations import Presentation
from fpgroups.words import IDENTITY, Word, parse_word, reduce

LETTERS = [("a", 1), ("a", -1), ("b", 1), ("b", -1)]


def all_short_words(max_len=3):
    for n in range(max_len + 1):
        for combo in itertools.product(LETTERS, repeat=n):
            yield Word.from_letters(combo)


def expected_boundary(u, k):
    c = Word.gen("c", k)
    return reduce(u * c * u.inverse() * c.inverse())


def test_grid_diagrams_validate(commutators):
    count = 0
    for u in all_short_words():
        for k in (1, 2, 3):
            d = D.grid_diagram(u, k)
            assert D.validate(d, commutators) == [], (u, k)
            assert len(d.vertices) - len(d.edges) + len(d.faces) + 1 == 2
            assert D.boundary_label(d, reduced=True) == expected_boundary(u, k)
            assert D.certify_trivial(d, commutators, u * Word.gen("c", k) * u.inverse() * Word.gen("c", -k))
            count += 1
    assert count == 85 * 3


def test_grid_counts():
    d = D.grid_diagram(parse_word("a b^-1 a"), 2)
    assert (len(d.vertices), len(d.edges), len(d.faces)) == (12, 17, 6)
    assert all(D.is_regular_face(d, i) for i in range(len(d.faces)))
    with pytest.raises(ValueError):
        D.grid_diagram(parse_word("a"), 0)
    with pytest.raises(ValueError):
        D.grid_diagram(parse_word("c"), 1)


def test_point_diagram():
    d = D.point_diagram()
    assert D.validate(d) == []
    assert D.boundary_label(d) == IDENTITY


def test_single_relator_disk():
    p = Presentation(("a",), (parse_word("a^3"),))
    edges = tuple(D.Edge(i, i, (i + 1) % 3, "a") for i in range(3))
    face = tuple((i, "f") for i in range(3))
    outer = tuple((i, "b") for i in reversed(range(3)))
    d = D.VanKampenDiagram((0, 1, 2), edges, (face,), outer, (0, 0))
    assert D.validate(d, p) == []
    assert D.certify_trivial(d, p, parse_word("a^-3"))
    assert D.certify_trivial(d, p, parse_word("a^3"))
    assert not D.certify_trivial(d, p, parse_word("a^2"))


def test_face_label_checked_against_presentation(commutators):
    d = D.grid_diagram(parse_word("a"), 1)
    other = Presentation(("a", "b", "c"), (parse_word("b c b^-1 c^-1"),))
    assert any("face label not in R*" in v for v in D.validate(d, other))
    assert not D.certify_trivial(d, other, D.boundary_label(d))


def test_invalid_diagram_has_no_boundary_label():
    d = D.grid_diagram(parse_word("a"), 1)
    bad = replace(d, faces=d.faces[:0])
    with pytest.raises(ValueError):
        D.boundary_label(bad)


def test_json_round_trip():
    d = D.grid_diagram(parse_word("a b^-1"), 2)
    text = json.dumps(D.diagram_to_json(d))
    assert D.diagram_from_json(text) == d
    assert D.diagram_from_json(json.loads(text)) == d
    dot = D.to_dot(d)
    assert dot.startswith("digraph") and dot.count("->") == len(d.edges)


def _flip(step):
    return step[0], "b" if step[1] == "f" else "f"


def mutate(d, rng):
    """One random structural or label corruption of ``d``."""
    kind = rng.randrange(8)
    edges, faces = list(d.edges), [list(f) for f in d.faces]
    if kind == 0:  # relabel an edge
        i = rng.randrange(len(edges))
        e = edges[i]
        edges[i] = replace(e, label=rng.choice([x for x in "abc" if x != e.label]))
    elif kind == 1:  # reverse one step of a face walk
        f = rng.randrange(len(faces))
        j = rng.randrange(len(faces[f]))
        faces[f][j] = _flip(faces[f][j])
    elif kind == 2:  # drop a face
        del faces[rng.randrange(len(faces))]
    elif kind == 3:  # duplicate a face
        faces.append(list(rng.choice(faces)))
    elif kind == 4:  # drop an edge
        del edges[rng.randrange(len(edges))]
    elif kind == 5:  # move an edge endpoint
        i = rng.randrange(len(edges))
        e = edges[i]
        edges[i] = replace(e, dst=rng.choice([v for v in d.vertices if v != e.dst]))
    elif kind == 6:  # drop a step of the outer walk
        outer = list(d.outer)
        del outer[rng.randrange(len(outer))]
        return replace(d, outer=tuple(outer)), kind
    else:  # add a stray vertex
        return replace(d, vertices=d.vertices + (max(d.vertices) + 1,)), kind
    return replace(d, edges=tuple(edges), faces=tuple(tuple(f) for f in faces)), kind


def test_single_mutations_are_caught(commutators):
    rng = random.Random(2024)
    words = [u for u in all_short_words() if len(u) > 0]
    kinds = set()
    for _ in range(100):
        d = D.grid_diagram(rng.choice(words), rng.randint(1, 3))
        bad, kind = mutate(d, rng)
        kinds.add(kind)
        assert D.validate(bad, commutators), kind
    assert kinds == set(range(8))
