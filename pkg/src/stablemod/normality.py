"""Normal epimorphisms and monomorphisms modulo projectives, and bimorphism witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from .errors import InputError, InternalAssertion, NoneExists, NotAbelianCase, NotEpi, NotMono, OracleMismatch
from . import exactfield as ef
from .quiver import Quiver
from .rep import (
    SES,
    Morphism,
    Representation,
    SubRep,
    hom_space,
    image,
    injective_envelope,
    is_injective,
    is_projective,
    kernel,
    kernel_inclusion,
    proj,
    pushout,
    quotient,
    regular,
    ses_of_epi,
    socle,
    solve_in_hom,
    split_epi,
    split_mono,
)
from .stablecat import (
    CriterionReport,
    _use_oracle,
    epi_representative,
    is_cokernel_of,
    is_kernel_of,
    is_stable_epi,
    is_stable_iso,
    is_stable_mono,
    stable_hom,
    test_objects,
)
from .torsion import canonical_split, is_stable_module


@dataclass(frozen=True, eq=False)
class PushoutSequence:
    base: SES
    alpha: Morphism
    result: SES
    middle_map: Morphism  # A -> D


def alpha_pushout(ses: SES, alpha: Morphism) -> PushoutSequence:
    """Push ``0 -> K -> A -> B -> 0`` out along ``alpha: K -> P``."""
    if alpha.source != ses.left:
        raise InputError("alpha must start at the left term of the sequence")
    if not is_projective(alpha.target):
        raise InputError("alpha must land in a projective module")
    d, g, beta = pushout(ses.i, alpha)
    # D -> B is induced by (p, 0) on A ⊕ P, which kills the image of (i, -alpha)
    pi = solve_in_hom(
        hom_space(d, ses.right),
        lambda x: np.concatenate([(x @ g).vector(), (x @ beta).vector()]),
        np.concatenate([ses.p.vector(), alpha.target.zero_to(ses.right).vector()]),
    )
    if pi is None:
        raise InternalAssertion("pushout map onto the right term does not exist")
    result = SES(beta, pi)
    if not result.is_exact():
        raise InternalAssertion("pushed-out sequence is not exact")
    return PushoutSequence(ses, alpha, result, g)


def sequence_splits(ses: SES) -> Optional[Morphism]:
    """A section of the right-hand map, or None."""
    return split_epi(ses.p)


def _alpha_basis(k: Representation):
    for i in k.quiver.vertices:
        pi = proj(k.quiver, i, k.p)
        for alpha in hom_space(k, pi).basis:
            yield i, alpha


def is_normal_epi(f: Morphism, oracle: Optional[bool] = None) -> CriterionReport:
    """Decide whether ``f`` (a surjection that is a stable epi) is a cokernel modulo projectives.

    Every basis element ``α`` of ``Hom(Ker f, P_i)``, for every vertex ``i``,
    must give a split pushout sequence ``α[f]``.
    """
    if not f.is_surjective():
        raise NotEpi("is_normal_epi needs a surjective morphism; use epi_representative first")
    if not is_stable_epi(f, oracle).verdict:
        raise NotEpi("morphism is not an epimorphism modulo projectives")
    ses = ses_of_epi(f)
    failing = None
    tested = 0
    for i, alpha in _alpha_basis(ses.left):
        tested += 1
        if sequence_splits(alpha_pushout(ses, alpha).result) is None:
            failing = {"vertex": i, "alpha": alpha}
            break
    checks = {"fast_path": failing is None}
    if _use_oracle(f.source.quiver, oracle):
        checks["oracle"] = is_cokernel_of(f, ses.i, test_objects(f.source))
    if len(set(checks.values())) > 1:
        raise OracleMismatch(f"is_normal_epi: routes disagree {checks}")
    witness = failing if failing is not None else {"alphas_tested": tested}
    return CriterionReport(checks["fast_path"], "both" if "oracle" in checks else "fast-path", witness, checks)


# ----------------------------------------------------------- normal monos


def envelope_of_ring(q: Quiver, p: int) -> tuple[Representation, Morphism]:
    return injective_envelope(regular(q, p))


def envelope_of_ring_is_projective(q: Quiver, p: int) -> bool:
    return is_projective(envelope_of_ring(q, p)[0])


@dataclass(frozen=True, eq=False)
class NormalMonoCertificate:
    original: Morphism
    p: Morphism  # A' -> B, surjective, kernel projective
    injection: Morphism  # A -> A', stable isomorphism with p∘injection = original
    envelope: Morphism  # P -> I
    extension: Morphism  # A' -> I
    fprime: Morphism  # B -> I/P
    validated: Optional[bool]


def normal_mono_certificate(f: Morphism, oracle: Optional[bool] = None) -> NormalMonoCertificate:
    """Exhibit ``f`` (a stable mono) as the kernel of ``f': B -> I/P`` when ``E(Λ)`` is projective."""
    if not is_stable_mono(f, oracle).verdict:
        raise NotMono("morphism is not a monomorphism modulo projectives")
    q = f.source.quiver
    if not envelope_of_ring_is_projective(q, f.p):
        raise NotAbelianCase("injective envelope of the regular module is not projective")
    rep, inj_a = epi_representative(f)
    k_mod, k_inc = kernel(rep).as_module()
    if not is_projective(k_mod):
        raise InternalAssertion("kernel of the epi representative of a stable mono is not projective")
    i_mod, env = injective_envelope(k_mod)
    if not is_projective(i_mod):
        raise InternalAssertion("envelope of a projective is not projective in the abelian case")
    ext = solve_in_hom(hom_space(rep.source, i_mod), lambda x: (x @ k_inc).vector(), env.vector())
    if ext is None:
        raise InternalAssertion("envelope does not extend over the kernel inclusion")
    quot, p_prime = quotient(i_mod, image(env))
    fprime = solve_in_hom(hom_space(rep.target, quot), lambda x: (x @ rep).vector(), (p_prime @ ext).vector())
    if fprime is None:
        raise InternalAssertion("induced map on quotients does not exist")
    validated = None
    if _use_oracle(q, oracle):
        validated = is_kernel_of(rep, fprime, test_objects(f.source))
        if not validated:
            raise OracleMismatch("certificate fails the kernel universal property")
    return NormalMonoCertificate(f, rep, inj_a, env, ext, fprime, validated)


def _by_size(q: Quiver, p: int) -> list[int]:
    # smallest projectives first, ties broken by vertex
    return sorted(q.vertices, key=lambda i: (proj(q, i, p).total_dim, i))


def _first_nonprojective_envelope(q: Quiver, p: int):
    for i in _by_size(q, p):
        pi = proj(q, i, p)
        i_mod, env = injective_envelope(pi)
        if not is_projective(i_mod):
            return i, pi, i_mod, env
    return None


def non_normal_mono_witness(q: Quiver, p: int, oracle: Optional[bool] = None) -> dict[str, Any]:
    """``E(P_i) -> E(P_i)/P_i`` for the first ``P_i`` with a non-projective envelope."""
    found = _first_nonprojective_envelope(q, p)
    if found is None:
        raise NoneExists("every indecomposable projective has a projective envelope")
    i, pi, i_mod, env = found
    _, pmap = quotient(i_mod, image(env))
    if not is_stable_mono(pmap, oracle).verdict:
        raise InternalAssertion("quotient by a projective submodule is not a stable mono")
    evidence = None
    if _use_oracle(q, oracle):
        tests = test_objects(i_mod)
        tried = 0
        for x in tests:
            for g in stable_hom(pmap.target, x).representatives:
                tried += 1
                if is_kernel_of(pmap, g, tests):
                    raise OracleMismatch("witness mono turned out to be a kernel")
        evidence = {"candidates_rejected": tried}
    return {
        "vertex": i,
        "projective": pi,
        "envelope": i_mod,
        "morphism": pmap,
        "non_normal": "guaranteed by theory (envelope of a projective is not projective)",
        "evidence": evidence,
    }


# --------------------------------------------------- stable envelopes


@dataclass(frozen=True, eq=False)
class StableEnvelope:
    projective: SubRep  # inside the regular module
    envelope: Representation
    embedding: Morphism  # projective -> envelope
    steps: int

    @property
    def projective_module(self) -> Representation:
        return self.projective.as_module()[0]


def _restrict_envelope(p_sub: SubRep, iota: Morphism, keep: Morphism, keep_sub: SubRep) -> Morphism:
    """Corestrict ``iota∘incl(p_sub)`` into the submodule ``keep_sub`` (inclusion ``keep``)."""
    p_mod, p_inc = p_sub.as_module()
    composite = iota @ p_inc
    hom = hom_space(p_mod, keep.source)
    res = solve_in_hom(hom, lambda x: (keep @ x).vector(), composite.vector())
    if res is None:
        raise InternalAssertion("embedding does not land in the retained summand")
    return res


def _check_stable_envelope(lam: Representation, p_sub: SubRep, emb: Morphism) -> bool:
    p_mod, p_inc = p_sub.as_module()
    i_mod = emb.target
    if p_mod.is_zero() or not is_projective(p_mod):
        return False
    if split_mono(p_inc) is None:
        return False
    if not (is_stable_module(i_mod) and is_injective(i_mod) and emb.is_injective()):
        return False
    return image(emb).contains(socle(i_mod))


def stable_envelope_procedure(q: Quiver, p: int, method: str = "maximal") -> Optional[StableEnvelope]:
    """A nonzero projective with a stable injective envelope, or None in the abelian case.

    ``method="maximal"`` splits off all projective summands of the envelope
    at once via the torsion decomposition; ``method="stepwise"`` removes one
    projective image at a time.
    """
    lam = regular(q, p)
    i0, iota0 = injective_envelope(lam)
    if is_projective(i0):
        return None
    if method == "maximal":
        split = canonical_split(i0)
        f0 = split.projection @ iota0
        p1 = kernel(f0)
        emb = _restrict_envelope(p1, iota0, split.inclusion, split.torsion)
        result = StableEnvelope(p1, split.torsion_module, emb, 1)
        if _check_stable_envelope(lam, p1, emb):
            return result
        method = "stepwise"
    if method != "stepwise":
        raise InputError(f"unknown method {method!r}")
    p_sub = SubRep.whole(lam)
    emb = iota0
    steps = 0
    while True:
        forms = hom_space(emb.target, lam).basis
        if not forms:
            break
        phi = forms[0]
        # phi: I_k -> Λ has projective image, so it splits off Q = phi(I_k)
        keep_sub = kernel(phi)
        keep_mod, keep_inc = keep_sub.as_module()
        f_k = phi @ emb
        kernel_in_pk = kernel(f_k)
        p_mod, p_inc = p_sub.as_module()
        new_sub = kernel_in_pk.image_under(p_inc)
        emb_new = solve_in_hom(
            hom_space(new_sub.as_module()[0], keep_mod),
            lambda x: (keep_inc @ x).vector(),
            (emb @ _into(new_sub, p_sub)).vector(),
        )
        if emb_new is None:
            raise InternalAssertion("stepwise envelope does not land in the kernel of the form")
        p_sub, emb = new_sub, emb_new
        steps += 1
    if not _check_stable_envelope(lam, p_sub, emb):
        raise InternalAssertion("stable envelope procedure produced an invalid pair")
    return StableEnvelope(p_sub, emb.target, emb, steps)


def _into(small: SubRep, big: SubRep) -> Morphism:
    """Inclusion between two subrepresentations of the same parent, in their own coordinates."""
    s_mod, s_inc = small.as_module()
    b_mod, b_inc = big.as_module()
    res = solve_in_hom(hom_space(s_mod, b_mod), lambda x: (b_inc @ x).vector(), s_inc.vector())
    if res is None:
        raise InternalAssertion("subrepresentation is not contained in the larger one")
    return res


@dataclass
class BimorphismWitness:
    projective: Representation
    envelope: Representation
    morphism: Morphism  # I -> I/P
    mono: bool
    epi: bool
    iso: bool
    vertex: Optional[int] = None
    reports: dict[str, CriterionReport] = field(default_factory=dict)

    @property
    def flags(self) -> tuple[bool, bool, bool]:
        return self.mono, self.epi, self.iso


def bimorphism_witness(q: Quiver, p: int, oracle: Optional[bool] = None) -> BimorphismWitness:
    """``I -> I/P`` for a nonzero projective ``P`` with stable envelope ``I``: mono and epi, not iso."""
    vertex = None
    chosen = None
    for i in _by_size(q, p):
        pi = proj(q, i, p)
        i_mod, env = injective_envelope(pi)
        if not is_projective(i_mod) and is_stable_module(i_mod):
            vertex, chosen = i, (pi, i_mod, env)
            break
    if chosen is None:
        found = stable_envelope_procedure(q, p)
        if found is None:
            raise NoneExists("injective envelope of the regular module is projective")
        chosen = (found.projective_module, found.envelope, found.embedding)
    pmod, i_mod, env = chosen
    _, pmap = quotient(i_mod, image(env))
    reports = {
        "mono": is_stable_mono(pmap, oracle),
        "epi": is_stable_epi(pmap, oracle),
        "iso": is_stable_iso(pmap, oracle),
    }
    w = BimorphismWitness(
        pmod, i_mod, pmap, reports["mono"].verdict, reports["epi"].verdict, reports["iso"].verdict, vertex, reports
    )
    if w.flags != (True, True, False):
        raise InternalAssertion(f"bimorphism witness has flags {w.flags}")
    return w


def weak_kernel_lift(f: Morphism, g: Morphism) -> Optional[Morphism]:
    """For ``g: X -> A`` with ``f∘g`` stably zero, ``u: X -> Ker f`` with ``ker f∘u ≡ g``."""
    k = kernel_inclusion(f)
    sh = stable_hom(g.source, f.source)
    hom = hom_space(g.source, k.source)
    cols = [sh.project(k @ u) for u in hom.basis]
    rhs = sh.project(g)
    if not cols:
        return hom.element([]) if not rhs.any() else None
    a = np.stack(cols, axis=1)
    if a.shape[0] == 0:
        return hom.element(np.zeros(hom.dim, dtype=np.int64))
    c = ef.solve_vector(a, rhs, f.p)
    return None if c is None else hom.element(c)


def epi_mono_factorization_fails(q: Quiver, p: int, oracle: Optional[bool] = None) -> Optional[dict[str, Any]]:
    """Evidence that (Epi, Mono) is not a factorization system: a non-iso bimorphism."""
    try:
        w = bimorphism_witness(q, p, oracle)
    except NoneExists:
        return None
    return {
        "statement": "Epi ∩ Mono strictly contains Iso, so (Epi, Mono) is not a factorization system",
        "witness": w,
    }
