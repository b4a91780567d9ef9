import itertools
from math import comb

import pytest

from bhconn.patterns import (
    CapExceeded,
    Embedding,
    Shape,
    allowed_shapes,
    count_c4,
    enumerate_embeddings,
    is_valid_embedding,
    embedding_problem,
)
from bhconn.topology import build


def brute_force(og, shape):
    """Embedding sets by scanning vertex tuples, canonicalized independently."""
    nodes = sorted(og)
    adj = {v: set(og[v]) for v in nodes}
    out = set()
    if shape == "K1":
        return {(v,) for v in nodes}
    if shape == "K11":
        return {tuple(sorted(e)) for e in og.edges()}
    if shape in ("K12", "K13"):
        k = 2 if shape == "K12" else 3
        for tup in itertools.permutations(nodes, k + 1):
            c, leaves = tup[0], tup[1:]
            if all(x in adj[c] for x in leaves):
                out.add((c,) + tuple(sorted(leaves)))
        return out
    for a, b, c, d in itertools.permutations(nodes, 4):
        if b in adj[a] and c in adj[b] and d in adj[c]:
            if shape == "P4":
                out.add(min((a, b, c, d), (d, c, b, a)))
            elif a in adj[d]:
                cyc = (a, b, c, d)
                rots = [cyc[i:] + cyc[:i] for i in range(4)]
                rev = cyc[::-1]
                rots += [rev[i:] + rev[:i] for i in range(4)]
                out.add(min(rots))
    return out


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("shape", ["K1", "K11", "K12", "K13", "P4", "C4"])
def test_enumeration_matches_brute_force(n, shape, bh, oracle_graph):
    got = enumerate_embeddings(bh(n), shape)
    assert [e.vertices for e in got] == sorted(brute_force(oracle_graph(n), shape))
    assert len({e.vertices for e in got}) == len(got)


@pytest.mark.parametrize(
    "shape, count", [("K1", 16), ("K11", 32), ("K12", 96), ("K13", 64), ("P4", 288), ("C4", 40)]
)
def test_bh2_counts(shape, count, bh):
    # K12/K13: 16 * C(4,2), 16 * C(4,3); P4: 32 middle edges * 3 * 3; C4 by brute force
    assert len(enumerate_embeddings(bh(2), shape)) == count


def common_pair_oracle(og):
    """Each 4-cycle has two diagonals, so the pair sum counts it twice."""
    total = 0
    for u, v in itertools.combinations(sorted(og), 2):
        if u % 2 == v % 2:
            total += comb(len(set(og[u]) & set(og[v])), 2)
    assert total % 2 == 0
    return total // 2


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 40), (3, 432)])
def test_count_c4(n, expected, bh, oracle_graph):
    assert common_pair_oracle(oracle_graph(n)) == expected
    assert count_c4(bh(n)) == expected


@pytest.mark.parametrize("n", [1, 2, 3])
def test_c4_alternate_colors(n, bh):
    for e in enumerate_embeddings(bh(n), "C4"):
        assert [v & 1 for v in e.vertices] in ([0, 1, 0, 1], [1, 0, 1, 0])


@pytest.mark.parametrize("n", [2, 3])
def test_twin_pair_lies_on_choose_2n_2_cycles(n, bh):
    g = bh(n)
    cycles = enumerate_embeddings(g, "C4")
    for u in (0, 5, g.num_vertices - 1):
        pair = {u, u ^ 2}
        on = [c for c in cycles if pair <= set(c.vertices)]
        assert len(on) == comb(2 * n, 2)


def test_is_valid_embedding_examples(bh):
    g = bh(2)
    i = g.index
    assert is_valid_embedding(g, Embedding(Shape.K13, (i((1, 0)), i((0, 0)), i((2, 0)), i((0, 3)))))
    assert not is_valid_embedding(g, Embedding(Shape.K12, (i((1, 0)), i((0, 0)), i((0, 0)))))
    assert "repeated" in embedding_problem(g, Embedding(Shape.K12, (i((1, 0)), i((0, 0)), i((0, 0)))))
    # (0,0)-(1,0)-(2,0)-(3,0) closes; swap one vertex to break an edge
    assert is_valid_embedding(g, Embedding(Shape.C4, (0, 1, 2, 3)))
    bad = Embedding(Shape.C4, (0, 1, 2, i((3, 2))))
    assert not is_valid_embedding(g, bad)
    assert "missing edge" in embedding_problem(g, bad)


def test_malformed_embedding_returns_reason(bh):
    g = bh(2)
    assert "needs 3" in embedding_problem(g, Embedding(Shape.K12, (0, 1)))
    assert "out of range" in embedding_problem(g, Embedding(Shape.K11, (0, 99)))
    assert "malformed" in embedding_problem(g, object())


def test_closure_sets():
    assert allowed_shapes(Shape.K13, "substructure") == (Shape.K1, Shape.K11, Shape.K12, Shape.K13)
    assert allowed_shapes(Shape.C4, "substructure") == (Shape.K1, Shape.K11, Shape.K12, Shape.C4)
    assert Shape.P4 in allowed_shapes(Shape.C4, "substructure", include_p4=True)
    assert allowed_shapes(Shape.K12, "structure") == (Shape.K12,)
    with pytest.raises(ValueError):
        allowed_shapes(Shape.P4, "structure")


def test_shape_parse_accepts_comma_spelling():
    assert Shape.parse("K1,3") is Shape.K13
    assert Shape.parse("c4") is Shape.C4
    with pytest.raises(ValueError):
        Shape.parse("K14")


def test_enumeration_cap(bh):
    with pytest.raises(CapExceeded):
        enumerate_embeddings(bh(3), "C4", cap=100)


def test_embedding_json_round_trip():
    e = Embedding(Shape.K12, (3, 0, 2))
    assert Embedding.from_dict(e.to_dict()) == e
    assert e.to_dict() == {"shape": "K12", "vertices": [3, 0, 2]}
