import numpy as np
import pytest

from stablemod.errors import InputError, InvalidQuiver
from stablemod.quiver import Quiver, an_orientations, an_quiver, disjoint_union, path_table, validate


def kinds(q):
    return [k for k, _ in validate(q)]


def test_validate():
    assert validate(an_quiver(2)) == []
    assert kinds(Quiver(1, ())) == []
    from stablemod.quiver import Arrow

    assert "Cyclic" in kinds(Quiver(1, (Arrow("l", 1, 1),)))
    assert "Cyclic" in kinds(Quiver(2, (Arrow("a", 1, 2), Arrow("b", 2, 1))))
    assert "DanglingEndpoint" in kinds(Quiver(2, (Arrow("a", 1, 3),)))
    assert "DuplicateArrowName" in kinds(Quiver(3, (Arrow("a", 1, 2), Arrow("a", 2, 3))))
    with pytest.raises(InvalidQuiver):
        Quiver.build(2, [("a", 1, 2), ("b", 2, 1)])


def test_an_quiver():
    q = an_quiver(2, ">")
    assert [(a.name, a.source, a.target) for a in q.arrows] == [("a1", 1, 2)]
    q = an_quiver(3, "><")
    assert [(a.source, a.target) for a in q.arrows] == [(1, 2), (3, 2)]
    assert an_quiver(1).arrows == ()
    with pytest.raises(InputError):
        an_quiver(3, ">")
    with pytest.raises(InputError):
        an_quiver(3, ">x")


def test_path_table_examples():
    assert path_table(an_quiver(2)).tolist() == [[1, 1], [0, 1]]
    assert np.array_equal(path_table(Quiver.build(3, [])), np.eye(3))
    assert path_table(an_quiver(3, "><"))[:, 1].tolist() == [1, 1, 1]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_equioriented_path_counts(n):
    t = path_table(an_quiver(n))
    assert t.tolist() == [[int(i <= j) for j in range(n)] for i in range(n)]


def test_path_enumeration_matches_table():
    q = Quiver.build(4, [("a", 1, 2), ("b", 1, 3), ("c", 2, 4), ("d", 3, 4), ("e", 1, 4)])
    t = path_table(q)
    for i in q.vertices:
        for j in q.vertices:
            assert len(q.paths(i, j)) == t[i - 1, j - 1]
    assert t[0, 3] == 3


def test_disjoint_union_block_diagonal():
    q = disjoint_union(an_quiver(2), an_quiver(3, "<>"))
    t = path_table(q)
    assert not t[:2, 2:].any() and not t[2:, :2].any()
    assert np.array_equal(t[:2, :2], path_table(an_quiver(2)))
    assert not q.is_connected()


def test_json_roundtrip():
    for o in an_orientations(4):
        q = an_quiver(4, o)
        assert Quiver.from_json(q.to_json()) == q
        assert q.an_orientation() == o
    with pytest.raises(InputError):
        Quiver.from_json({"arrows": []})
