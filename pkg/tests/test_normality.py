import pytest
from hypothesis import given, settings, strategies as st

from stablemod.errors import InputError, NoneExists, NotAbelianCase, NotEpi, NotMono
from stablemod.normality import (
    alpha_pushout,
    bimorphism_witness,
    is_normal_epi,
    non_normal_mono_witness,
    normal_mono_certificate,
    sequence_splits,
    stable_envelope_procedure,
    weak_kernel_lift,
)
from stablemod.quiver import Quiver, an_orientations, an_quiver, disjoint_union
from stablemod.rep import (
    SES,
    Morphism,
    codiagonal,
    direct_sum,
    hom_space,
    inj,
    proj,
    quotient,
    radical,
    ses_of_epi,
    simple,
)
from stablemod.sampling import Sampler, make_rng
from stablemod.stablecat import is_stable_mono, stably_zero
from stablemod.torsion import is_stable_module

P = 101


def test_pushout_along_zero_splits(a2):
    p1 = proj(a2, 1, P)
    ses = ses_of_epi(quotient(p1, radical(p1))[1])
    res = alpha_pushout(ses, Morphism.zero(ses.left, proj(a2, 1, P)))
    assert sequence_splits(res.result) is not None
    assert res.result.middle.dims == (2, 1)  # P_1 + S_1


def test_pushout_of_split_sequence(a2):
    a, b = simple(a2, 1, P), proj(a2, 1, P)
    total, (ia, _), (_, pb) = direct_sum(a, b)
    ses = SES(ia, pb)
    res = alpha_pushout(ses, Morphism.zero(a, proj(a2, 2, P)))
    assert sequence_splits(res.result) is not None


def test_zigzag_pushout_does_not_split(bimorphism, a3_zigzag):
    ses = ses_of_epi(bimorphism)
    alpha = hom_space(ses.left, proj(a3_zigzag, 2, P)).basis[0]
    res = alpha_pushout(ses, alpha)
    assert res.result.middle.dims == (1, 1, 1)
    assert sequence_splits(res.result) is None


def test_alpha_pushout_errors(bimorphism, a3_zigzag):
    ses = ses_of_epi(bimorphism)
    with pytest.raises(InputError):
        alpha_pushout(ses, Morphism.zero(bimorphism.source, proj(a3_zigzag, 1, P)))
    i2 = inj(a3_zigzag, 2, P)
    with pytest.raises(InputError):
        alpha_pushout(ses, Morphism.zero(ses.left, i2))


def test_semisimple_sequences_split(semisimple):
    s = Sampler(semisimple, P, make_rng(3))
    for _ in range(10):
        assert sequence_splits(s.ses()) is not None


def test_normal_epi_examples(a2, bimorphism):
    s1 = simple(a2, 1, P)
    f = codiagonal([s1.identity(), s1.identity()])
    assert is_normal_epi(f).verdict
    rep = is_normal_epi(bimorphism)
    assert not rep.verdict and rep.method == "both"
    total, _, (pr, _) = direct_sum(s1, proj(a2, 1, P))
    assert is_normal_epi(pr).verdict
    with pytest.raises(NotEpi):
        is_normal_epi(radical(proj(a2, 1, P)).as_module()[1])
    p1 = proj(a2, 1, P)
    with pytest.raises(NotEpi):
        is_normal_epi(quotient(p1, radical(p1))[1])


def test_normal_mono_certificates(a2):
    p1, s1, p2 = proj(a2, 1, P), simple(a2, 1, P), proj(a2, 2, P)
    cert = normal_mono_certificate(quotient(p1, radical(p1))[1])
    assert cert.validated and stably_zero(cert.fprime @ cert.p)
    total, _, (pr, _) = direct_sum(s1, p2)
    cert = normal_mono_certificate(pr)
    assert cert.validated and cert.fprime.is_zero()
    cert = normal_mono_certificate(s1.identity())
    assert cert.validated


def test_normal_mono_certificate_errors(a2, bimorphism):
    with pytest.raises(NotAbelianCase):
        normal_mono_certificate(bimorphism)
    s1 = simple(a2, 1, P)
    with pytest.raises(NotMono):
        normal_mono_certificate(Morphism.zero(s1, s1))


def test_non_normal_mono_witness(a2, a3_zigzag, semisimple):
    w = non_normal_mono_witness(a3_zigzag, P)
    assert w["vertex"] == 2 and w["envelope"].dims == (1, 1, 1)
    assert is_stable_mono(w["morphism"]).verdict
    for q in (a2, semisimple):
        with pytest.raises(NoneExists):
            non_normal_mono_witness(q, P)


@pytest.mark.parametrize("method", ["maximal", "stepwise"])
def test_stable_envelope_procedure(method, a2, a3_zigzag, semisimple):
    env = stable_envelope_procedure(a3_zigzag, P, method)
    assert env.projective.dims == (1, 3, 1) and env.envelope.dims == (3, 3, 3)
    assert is_stable_module(env.envelope)
    assert stable_envelope_procedure(a2, P, method) is None
    assert stable_envelope_procedure(semisimple, P, method) is None


def test_stepwise_splits_off_projective_summands():
    q = disjoint_union(an_quiver(2), an_quiver(3, "><"))
    maximal = stable_envelope_procedure(q, P, "maximal")
    stepwise = stable_envelope_procedure(q, P, "stepwise")
    assert stepwise.steps == 2
    assert maximal.projective == stepwise.projective
    assert maximal.envelope.dims == stepwise.envelope.dims == (0, 0, 3, 3, 3)


def test_bimorphism_witness(a3_zigzag, semisimple):
    w = bimorphism_witness(a3_zigzag, P)
    assert w.vertex == 2 and w.projective.dims == (0, 1, 0) and w.envelope.dims == (1, 1, 1)
    assert w.flags == (True, True, False)
    for q in (an_quiver(4), an_quiver(4, "<<<"), semisimple):
        with pytest.raises(NoneExists):
            bimorphism_witness(q, P)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_weak_kernel(seed):
    q = an_quiver(3, an_orientations(3)[seed % 4])
    s = Sampler(q, P, make_rng(seed))
    f = s.surjection()
    x = s.block()
    for g in hom_space(x, f.source).basis:
        if stably_zero(f @ g):
            assert weak_kernel_lift(f, g) is not None
