import pytest
from hypothesis import given, settings, strategies as st

from stablemod.quiver import an_orientations, an_quiver
from stablemod.rep import an_indecomposables, direct_sum, hom_space, inj, is_projective, proj, regular, simple
from stablemod.sampling import Sampler, make_rng
from stablemod.stablecat import stably_zero
from stablemod.torsion import canonical_split, is_stable_module, sharp, torsion_submodule

P = 101


def test_torsion_examples(a2, a3_zigzag):
    for i in a2.vertices:
        assert torsion_submodule(proj(a2, i, P)).is_zero()
    s1 = simple(a2, 1, P)
    assert torsion_submodule(s1).dims == (1, 0)
    m, _, _ = direct_sum(s1, proj(a2, 1, P))
    assert torsion_submodule(m).dims == (1, 0)


def test_sharp_examples(a2):
    assert sharp(simple(a2, 1, P))[0].is_zero()
    p1 = proj(a2, 1, P)
    assert sharp(p1)[1].is_iso()
    from stablemod.rep import Representation

    assert sharp(Representation.zero(a2, P))[0].is_zero()


def test_canonical_split_examples(a2):
    s1, p1 = simple(a2, 1, P), proj(a2, 1, P)
    split = canonical_split(direct_sum(s1, p1)[0])
    assert split.torsion_module.dims == s1.dims and split.sharp.dims == p1.dims
    assert (split.projection @ split.section) == split.sharp.identity()
    split = canonical_split(p1)
    assert split.torsion.is_zero() and split.section.is_iso()
    assert canonical_split(s1).sharp.is_zero()


def test_stable_examples(a2, a3_zigzag):
    assert is_stable_module(simple(a2, 1, P))
    assert not any(is_stable_module(proj(a2, i, P)) for i in a2.vertices)
    assert is_stable_module(inj(a3_zigzag, 2, P))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_split_holds_on_every_interval(n):
    for o in an_orientations(n):
        q = an_quiver(n, o)
        for m in an_indecomposables(q, P):
            split = canonical_split(m)
            assert is_projective(split.sharp)
            assert hom_space(split.torsion_module, regular(q, P)).dim == 0
            # an indecomposable is either projective or stable
            assert split.torsion.is_zero() or split.sharp.is_zero()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_stably_zero_maps_vanish_on_torsion(seed):
    q = an_quiver(3, an_orientations(3)[seed % 4])
    s = Sampler(q, P, make_rng(seed))
    f = s.morphism_pair()
    if stably_zero(f):
        assert (f @ canonical_split(f.source).inclusion).is_zero()
    a, b = s.rep(), s.rep()
    t = torsion_submodule(direct_sum(a, b)[0])
    assert t.dims == tuple(x + y for x, y in zip(torsion_submodule(a).dims, torsion_submodule(b).dims))
