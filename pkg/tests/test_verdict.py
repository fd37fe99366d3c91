import pytest

from stablemod.errors import InputError
from stablemod.quiver import Quiver, an_quiver, disjoint_union
from stablemod.verdict import census, classify, equivalence_table, find_bijection

P = 101


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_equioriented_is_abelian(n):
    for o in (">" * (n - 1), "<" * (n - 1)):
        v = classify(an_quiver(n, o), P)
        assert v.abelian and v.envelope_projective and v.witness is None


def test_zigzag_not_abelian(a3_zigzag):
    v = classify(a3_zigzag, P)
    assert not v.abelian
    assert v.envelope_of_ring.dims == (3, 3, 3)
    assert v.witness.flags == (True, True, False)
    assert "factorization_system" in v.reasons


def test_semisimple_and_general_quivers(semisimple):
    assert classify(semisimple, P).abelian
    kronecker = Quiver.build(2, [("a", 1, 2), ("b", 1, 2)])
    v = classify(kronecker, P)
    assert not v.abelian and v.witness is None
    assert classify(disjoint_union(an_quiver(2), an_quiver(3)), P).abelian


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_census(n):
    rows = census(n, P)
    assert len(rows) == 2 ** max(n - 1, 0)
    assert all(r.agree for r in rows)
    assert sum(r.abelian for r in rows) == (1 if n == 1 else 2)


def test_equivalence_examples():
    r = equivalence_table(2, P)
    assert r.stable_table == [[1]] and r.matches
    for n in (3, 4, 5):
        r = equivalence_table(n, P)
        assert len(r.stable_objects) == n * (n - 1) // 2 and r.matches
        perm = r.bijection
        for i, row in enumerate(r.stable_table):
            assert row == [r.target_table[perm[i]][perm[j]] for j in range(len(row))]
    with pytest.raises(InputError):
        equivalence_table(6, P)


def test_find_bijection_rejects_mismatch():
    import numpy as np

    a = np.array([[1, 1], [0, 1]])
    assert find_bijection(a, np.array([[1, 0], [1, 1]])) == [1, 0]
    assert find_bijection(a, np.eye(2, dtype=int)) is None
