import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from stablemod.errors import NotAn
from stablemod.exactfield import solve_vector
from stablemod.quiver import Quiver, an_orientations, an_quiver
from stablemod.rep import (
    Morphism,
    Representation,
    an_indecomposables,
    cokernel,
    direct_sum,
    hom_basis,
    hom_dim,
    image,
    inj,
    injective_envelope,
    is_injective,
    is_projective,
    kernel,
    projective_cover,
    proj,
    pushout,
    quotient,
    radical,
    regular,
    simple,
    socle,
    split_epi,
    split_mono,
    top,
)
from stablemod.sampling import Sampler, make_rng

P = 101
QUIVERS = [an_quiver(3, o) for o in an_orientations(3)] + [
    Quiver.build(4, [("a", 1, 2), ("b", 1, 3), ("c", 2, 4), ("d", 3, 4)]),
    Quiver.build(2, [("a", 1, 2), ("b", 1, 2)]),
]


def sample(seed):
    rng = make_rng(seed)
    q = QUIVERS[seed % len(QUIVERS)]
    return Sampler(q, P, rng)


seeds = st.integers(0, 10_000)


def test_hom_examples(a2, a2_modules):
    m = a2_modules
    assert hom_basis(m["S1"], m["P1"]) == []
    assert hom_dim(m["P1"], m["P1"]) == 1
    x = direct_sum(m["S1"], m["P1"])[0]
    basis = hom_basis(x, x)
    cols = np.stack([b.vector() for b in basis], 1)
    assert solve_vector(cols, x.identity().vector(), P) is not None


def test_projectives_and_injectives(a2, semisimple):
    p1, p2 = proj(a2, 1, P), proj(a2, 2, P)
    assert p1.dims == (1, 1) and p1.mat("a1").tolist() == [[1]]
    assert p2.dims == (0, 1)
    i2 = inj(a2, 2, P)
    assert i2.dims == (1, 1) and i2.mat("a1").tolist() == [[1]]
    assert is_projective(i2)
    assert regular(a2, P).dims == (1, 2)
    for i in semisimple.vertices:
        assert proj(semisimple, i, P) == inj(semisimple, i, P) == simple(semisimple, i, P)


def test_zigzag_structure(a3_zigzag):
    q = a3_zigzag
    assert [proj(q, i, P).dims for i in q.vertices] == [(1, 1, 0), (0, 1, 0), (0, 1, 1)]
    i2 = inj(q, 2, P)
    assert i2.dims == (1, 1, 1)
    assert socle(i2).dims == (0, 1, 0)
    assert not is_projective(i2)
    assert projective_cover(i2)[0].dims == (1, 2, 1)
    env, iota = injective_envelope(regular(q, P))
    assert env.dims == (3, 3, 3) and iota.is_injective()
    _, pm = quotient(i2, socle(i2))
    assert kernel(pm).dims == (0, 1, 0)


def test_radical_top(a2):
    p1 = proj(a2, 1, P)
    assert radical(p1).dims == (0, 1)
    assert top(p1)[0] == simple(a2, 1, P)
    assert radical(simple(a2, 1, P)).is_zero()
    cover, pi = projective_cover(simple(a2, 1, P))
    assert cover == p1 and pi.is_surjective()


def test_kernel_cokernel_trivia(a2_modules):
    x = a2_modules["P1"]
    assert kernel(x.identity()).is_zero()
    y = a2_modules["S2"]
    c, pr = cokernel(Morphism.zero(x, y))
    assert c == y and pr.is_iso()


def test_direct_sum_with_zero(a2, a2_modules):
    x = a2_modules["P1"]
    total, inj_, pr = direct_sum(x, Representation.zero(a2, P))
    assert total == x and pr[0].is_iso()


def test_pushout_examples(a2, a2_modules):
    p1, s1 = a2_modules["P1"], a2_modules["S1"]
    _, f = quotient(p1, radical(p1))
    d, h1, f1 = pushout(f, p1.identity())
    assert d.dims == s1.dims and f1.is_surjective()
    d, h1, f1 = pushout(p1.identity(), f)
    assert d.dims == s1.dims and f1.is_iso()
    y = a2_modules["S2"]
    d, _, _ = pushout(f, Morphism.zero(p1, y))
    assert d.dims == tuple(a + b for a, b in zip(cokernel(f)[0].dims, y.dims))


def test_split_examples(a2, a2_modules):
    x = a2_modules["P1"]
    assert split_mono(x.identity()) is not None and split_epi(x.identity()) is not None
    total, (i1, _), _ = direct_sum(x, a2_modules["S1"])
    assert split_mono(i1) is not None
    s2_in_p1 = radical(x).as_module()[1]
    assert split_mono(s2_in_p1) is None


def test_intervals(a2):
    objs = an_indecomposables(a2, P)
    assert sorted(m.dims for m in objs) == sorted([(1, 0), (0, 1), (1, 1)])
    for n in (1, 2, 3, 4):
        for o in an_orientations(n):
            assert len(an_indecomposables(an_quiver(n, o), P)) == n * (n + 1) // 2
    with pytest.raises(NotAn):
        an_indecomposables(QUIVERS[-1], P)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_hom_from_projective_and_into_injective(seed):
    s = sample(seed)
    m = s.rep()
    for i in s.quiver.vertices:
        assert hom_dim(proj(s.quiver, i, P), m) == m.dim(i)
        assert hom_dim(m, inj(s.quiver, i, P)) == m.dim(i)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_rank_nullity_and_validity(seed):
    s = sample(seed)
    f = s.morphism_pair()
    assert f.is_valid()
    im = image(f)
    assert all(k + r == d for k, r, d in zip(kernel(f).dims, im.dims, f.source.dims))
    c, pr = cokernel(f)
    assert all(r + x == d for r, x, d in zip(im.dims, c.dims, f.target.dims))
    assert pr.is_valid() and (pr @ f).is_zero()


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_cover_and_envelope(seed):
    s = sample(seed)
    m = s.rep()
    cover, pi = projective_cover(m)
    assert pi.is_surjective() and is_projective(cover)
    assert radical(cover).contains(kernel(pi))
    assert top(cover)[0].dims == top(m)[0].dims
    env, iota = injective_envelope(m)
    assert iota.is_injective() and is_injective(env)
    assert socle(env).dims == socle(m).dims
    assert image(iota).contains(socle(env))


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_pushout_of_epi_is_epi(seed):
    s = sample(seed)
    f = s.surjection()
    h = s.morphism(f.source, s.rep())
    d, h1, f1 = pushout(f, h)
    assert f1.is_surjective()
    assert (h1 @ f - f1 @ h).is_zero()
