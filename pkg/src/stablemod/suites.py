"""Seeded property suites, one per structural statement about the stable category.

A suite draws ``trials`` random instances over a list of quivers (by default
every orientation of A_3), checks a property, and records each counterexample
as a serialized instance.  Some suites also record *findings*: expected
phenomena such as a module epimorphism that is not an epimorphism modulo
projectives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

import numpy as np

from .errors import InternalAssertion, NoneExists, NotAbelianCase, UnknownSuite
from .exactfield import DEFAULT_PRIME, Subspace, nullspace
from .normality import (
    alpha_pushout,
    bimorphism_witness,
    envelope_of_ring_is_projective,
    is_normal_epi,
    non_normal_mono_witness,
    normal_mono_certificate,
    sequence_splits,
    stable_envelope_procedure,
    weak_kernel_lift,
)
from .quiver import Quiver, an_orientations, an_quiver
from .rep import (
    Morphism,
    direct_sum,
    hom_space,
    image,
    induced_on_quotient,
    is_projective,
    kernel,
    proj,
    radical,
    quotient,
    regular,
    ses_of_epi,
    solve_in_hom,
)
from .sampling import GENERATOR, Sampler, make_rng
from .serialize import encode, field_header
from .stablecat import (
    _rank,
    _use_oracle,
    epi_representative,
    epi_witness,
    is_stable_epi,
    is_stable_iso,
    is_stable_mono,
    is_stable_split_epi,
    is_stable_split_mono,
    post_matrix,
    pre_matrix,
    pushout_lift,
    stable_dim,
    stable_hom,
    stably_zero,
    test_objects,
    validate_stable_kernel,
)
from .torsion import canonical_split, is_stable_module, sharp, torsion_image, torsion_submodule


@dataclass
class SuiteReport:
    name: str
    trials: int
    seed: int
    field: dict
    generator: str
    quivers: list[str]
    failures: list[dict] = field(default_factory=list)
    findings: list[dict] = field(default_factory=list)
    stats: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "trials": self.trials,
            "seed": self.seed,
            "field": self.field,
            "generator": self.generator,
            "quivers": self.quivers,
            "passed": self.passed,
            "failures": self.failures,
            "findings": self.findings,
            "stats": dict(sorted(self.stats.items())),
        }


class _Ctx:
    def __init__(self, report: SuiteReport, quiver: Quiver, sampler: Sampler, trial: int):
        self.report = report
        self.quiver = quiver
        self.s = sampler
        self.trial = trial

    @property
    def p(self) -> int:
        return self.s.p

    @property
    def oracle(self) -> bool:
        return _use_oracle(self.quiver, None)

    def count(self, key: str, n: int = 1):
        self.report.stats[key] = self.report.stats.get(key, 0) + n

    def fail(self, reason: str, **instance):
        self.report.failures.append(
            {"trial": self.trial, "quiver": self.quiver.to_json(), "reason": reason, "instance": encode(instance)}
        )

    def expect(self, cond: bool, reason: str, **instance):
        if not cond:
            self.fail(reason, **instance)


def _quiver_label(q: Quiver) -> str:
    o = q.an_orientation()
    return f"A{q.n}[{o}]" if o is not None else f"Q(n={q.n}, arrows={len(q.arrows)})"


def default_quivers() -> list[Quiver]:
    return [an_quiver(3, o) for o in an_orientations(3)]


# -------------------------------------------------------------- subspaces


def _exact_at(into: np.ndarray, out: np.ndarray, dim_mid: int, p: int) -> bool:
    """``ker(out) == im(into)`` for linear maps into and out of a ``dim_mid``-space."""
    ker = Subspace.kernel_of(out, p) if out.shape[0] else Subspace.full(dim_mid, p)
    im = Subspace.column_space(into, p) if into.shape[1] else Subspace.zero(dim_mid, p)
    return ker == im


def _restrict_to_torsion(f: Morphism) -> Morphism:
    """``t(f): t(A) -> t(B)``."""
    ta_mod, ta_inc = torsion_submodule(f.source).as_module()
    tb_mod, tb_inc = torsion_submodule(f.target).as_module()
    res = solve_in_hom(hom_space(ta_mod, tb_mod), lambda x: (tb_inc @ x).vector(), (f @ ta_inc).vector())
    if res is None:
        raise InternalAssertion("morphism does not preserve torsion")
    return res


def _sharp_of(f: Morphism) -> Morphism:
    _, pa = sharp(f.source)
    _, pb = sharp(f.target)
    return induced_on_quotient(f, pa, pb)


# ------------------------------------------------------------------ suites


def _s_split(c: _Ctx):
    a, b = c.s.rep(), c.s.rep()
    total, (ia, _), (_, pb) = direct_sum(a, b)
    iso_g = is_stable_iso(pb, c.oracle).verdict
    iso_f = is_stable_iso(ia, c.oracle).verdict
    c.expect(iso_g == is_projective(a), "projection onto a summand: stable iso must match projectivity of the other summand", a=a, b=b)
    c.expect(iso_f == is_projective(b), "summand inclusion: stable iso must match projectivity of the complement", a=a, b=b)
    c.count("projective_left", int(is_projective(a)))


def _s_halfexact(c: _Ctx):
    ses = c.s.ses()
    g, f = ses.i, ses.p
    probes = [c.s.rep()]
    if c.oracle:
        probes += list(test_objects(ses.middle))
    for x in probes:
        # stable Hom(X, A) -> stable Hom(X, B) -> stable Hom(X, C) is exact in the middle
        ok = _exact_at(post_matrix(g, x), post_matrix(f, x), stable_dim(x, ses.middle), c.p)
        c.expect(ok, "stable Hom(X, -) not exact in the middle", i=g, p=f, x=x)
        c.count("nontrivial_middle", int(stable_dim(x, ses.middle) > 0))


def _s_mono(c: _Ctx):
    f = c.s.morphism_pair() if c.s.rng.random() < 0.6 else epi_representative(c.s.morphism_pair())[0]
    rep = is_stable_mono(f, c.oracle)
    c.expect(rep.verdict == is_projective(kernel(f).as_module()[0]), "mono verdict differs from kernel projectivity", f=f)
    if c.oracle:
        c.expect(validate_stable_kernel(f), "kernel inclusion fails the kernel universal property", f=f)
    c.count("mono", int(rep.verdict))


def _s_epi(c: _Ctx):
    f = c.s.morphism_pair() if c.s.rng.random() < 0.5 else c.s.surjection()
    rep = is_stable_epi(f, c.oracle)
    c.count("epi", int(rep.verdict))
    used = f if f.is_surjective() else epi_representative(f)[0]
    c.expect(is_stable_epi(used, c.oracle).verdict == rep.verdict, "epi representative changes the verdict", f=f)
    # pushout lifts along sampled maps into projectives
    hs = [canonical_split(used.source).projection]
    for _ in range(2):
        target = proj(c.quiver, int(c.s.rng.integers(1, c.quiver.n + 1)), c.p)
        hs.append(c.s.morphism(used.source, target))
    lifts = all(pushout_lift(used, h) is not None for h in hs)
    if rep.verdict:
        c.expect(lifts, "stable epi but some pushout lift is missing", f=used)
    else:
        w = epi_witness(f, c.oracle)
        c.expect(pushout_lift(w["morphism"], w["h"]) is None, "epi witness admits a lift", f=f)
    if is_stable_module(f.source) and is_stable_module(f.target):
        c.expect(rep.verdict == f.is_surjective(), "between stable modules epi must mean surjective", f=f)
    if rep.verdict:
        c.expect(image(f).contains(torsion_submodule(f.target)), "stable epi whose image misses t(B)", f=f)


def _s_splitepi(c: _Ctx):
    f = c.s.morphism_pair() if c.s.rng.random() < 0.5 else c.s.surjection()
    se = is_stable_split_epi(f, c.oracle)
    sm = is_stable_split_mono(f, c.oracle)
    if se.verdict:
        c.expect(is_stable_epi(f, c.oracle).verdict, "split epi that is not epi", f=f)
    if sm.verdict:
        c.expect(is_stable_mono(f, c.oracle).verdict, "split mono that is not mono", f=f)
    c.count("split_epi", int(se.verdict))
    c.count("split_mono", int(sm.verdict))


def _s_iso(c: _Ctx):
    f = c.s.morphism_pair() if c.s.rng.random() < 0.5 else c.s.surjection()
    iso = is_stable_iso(f, c.oracle).verdict
    both = is_stable_split_epi(f, c.oracle).verdict and is_stable_mono(f, c.oracle).verdict
    c.expect(iso == both, "iso must be the same as split epi plus mono", f=f)
    if iso:
        c.expect(is_stable_split_mono(f, c.oracle).verdict and is_stable_epi(f, c.oracle).verdict, "iso not split mono", f=f)
    c.count("iso", int(iso))


def _s_torsion(c: _Ctx):
    m = c.s.rep()
    split = canonical_split(m)
    # kernel inside the torsion submodule gives an epi
    t_mod, t_inc = split.torsion.as_module()
    sub = image(t_inc @ c.s.morphism(c.s.rep(), t_mod))
    _, pk = quotient(m, sub)
    c.expect(is_stable_epi(pk, c.oracle).verdict, "quotient by a torsion submodule is not a stable epi", m=m)
    c.expect(is_stable_epi(split.projection, c.oracle).verdict, "M -> M^sharp is not a stable epi", m=m)
    c.expect(is_projective(split.sharp), "M^sharp not projective", m=m)
    c.expect(is_stable_iso(split.inclusion, c.oracle).verdict, "t(M) -> M is not a stable iso", m=m)
    f = c.s.morphism_pair() if c.s.rng.random() < 0.5 else c.s.surjection()
    epi = is_stable_epi(f, c.oracle).verdict
    if epi:
        c.expect(image(f).contains(torsion_submodule(f.target)), "epi whose image misses t(B)", f=f)
        c.expect(is_stable_epi(_sharp_of(f), c.oracle).verdict, "f^sharp not epi for an epi f", f=f)
    tf = _restrict_to_torsion(f)
    if is_stable_epi(_sharp_of(f), c.oracle).verdict and is_stable_epi(tf, c.oracle).verdict:
        c.expect(epi, "t(f) and f^sharp epi but f is not", f=f)
    # domain a submodule of a projective: every epi from it splits
    sub_p = c.s.submodule(regular(c.quiver, c.p))
    a = sub_p.as_module()[0]
    g = c.s.morphism(a, c.s.rep())
    if is_stable_epi(g, c.oracle).verdict:
        c.expect(is_stable_split_epi(g, c.oracle).verdict, "epi out of a submodule of a projective does not split", g=g)
    c.count("epi", int(epi))


def _s_reflector(c: _Ctx):
    a = c.s.rep()
    x = c.s.submodule(regular(c.quiver, c.p)).as_module()[0]  # torsionfree
    c.expect(torsion_submodule(x).is_zero(), "submodule of a projective has torsion", x=x)
    _, pa = sharp(a)
    m = pre_matrix(pa, x)  # stable(A^sharp, X) -> stable(A, X)
    ok = m.shape[0] == m.shape[1] and _rank(m, c.p) == m.shape[0]
    c.expect(ok, "precomposition with A -> A^sharp is not a bijection on stable homs into torsionfree X", a=a, x=x)
    _, px = sharp(x)
    c.expect(px.is_iso(), "reflector does not fix a torsionfree module", x=x)
    c.count("nonzero_targets", int(not x.is_zero()))


def _s_normalmono(c: _Ctx):
    if envelope_of_ring_is_projective(c.quiver, c.p):
        f = c.s.stable_mono(oracle=c.oracle)
        if f is None:
            return
        cert = normal_mono_certificate(f, c.oracle)
        c.expect(cert.validated is not False, "normal mono certificate failed validation", f=f)
        c.expect(stably_zero(cert.fprime @ cert.p), "f' composed with the mono is not stably zero", f=f)
        c.count("certified")
    else:
        f = c.s.stable_mono(oracle=c.oracle)
        if f is not None:
            try:
                normal_mono_certificate(f, c.oracle)
                c.fail("certificate produced in the non-abelian case", f=f)
            except NotAbelianCase:
                pass
        w = non_normal_mono_witness(c.quiver, c.p, c.oracle)
        c.expect(is_stable_mono(w["morphism"], c.oracle).verdict, "non-normal witness is not mono")
        c.count("non_normal_witness")


def _s_normalepi(c: _Ctx):
    f = c.s.stable_epi(oracle=c.oracle)
    if f is None:
        return
    rep = is_normal_epi(f, c.oracle)
    ses = ses_of_epi(f)
    k = ses.left
    c.count("normal", int(rep.verdict))
    # random combinations of basis forms never contradict the basis verdict
    for i in c.quiver.vertices:
        pi = proj(c.quiver, i, c.p)
        hom = hom_space(k, pi)
        if hom.dim == 0:
            continue
        alpha = hom.element(c.s.coefficients(hom.dim))
        splits = sequence_splits(alpha_pushout(ses, alpha).result) is not None
        if rep.verdict and not splits:
            c.fail("random alpha fails to split although every basis alpha splits", f=f, alpha=alpha)
    if is_stable_module(f.source):
        c.expect(rep.verdict == is_stable_module(k), "stable source: normal must match stable kernel", f=f)
    if torsion_submodule(f.source).contains(kernel(f)):
        c.expect(rep.verdict == is_stable_module(k), "kernel in torsion: normal must match zero dual of kernel", f=f)
    # weak kernel: maps killed by f modulo projectives factor through the kernel
    x = c.s.block()
    hom = hom_space(x, f.source)
    if hom.dim:
        sh = stable_hom(x, f.target)
        cols = [sh.project(f @ g) for g in hom.basis]
        a = np.stack(cols, axis=1) if cols else np.zeros((0, 0), dtype=np.int64)
        if a.shape[0]:
            ns = nullspace(a, c.p)
            coeffs = ns.T @ c.s.coefficients(ns.shape[0]) % c.p if ns.shape[0] else None
        else:
            coeffs = c.s.coefficients(hom.dim)
        if coeffs is not None:
            g = hom.element(coeffs)
            c.expect(weak_kernel_lift(f, g) is not None, "map killed by f does not factor through Ker f", f=f, g=g)


def _s_conormal(c: _Ctx):
    if envelope_of_ring_is_projective(c.quiver, c.p):
        f = c.s.stable_epi(oracle=c.oracle)
        if f is None:
            return
        c.expect(is_normal_epi(f, c.oracle).verdict, "stable epi that is not normal in the abelian case", f=f)
        c.count("normal")
    else:
        w = bimorphism_witness(c.quiver, c.p, c.oracle)
        c.expect(not is_normal_epi(w.morphism, c.oracle).verdict, "bimorphism witness is a normal epi", f=w.morphism)
        c.count("non_normal_epi_witness")


def _s_witness(c: _Ctx):
    if envelope_of_ring_is_projective(c.quiver, c.p):
        for fn in (bimorphism_witness,):
            try:
                fn(c.quiver, c.p, c.oracle)
                c.fail("witness produced in the abelian case")
            except NoneExists:
                pass
        c.expect(stable_envelope_procedure(c.quiver, c.p) is None, "stable envelope found in the abelian case")
        return
    for method in ("maximal", "stepwise"):
        env = stable_envelope_procedure(c.quiver, c.p, method)
        c.expect(env is not None and not env.projective.is_zero(), f"{method}: no nonzero projective with stable envelope")
    w = bimorphism_witness(c.quiver, c.p, c.oracle)
    c.expect(w.flags == (True, True, False), "bimorphism flags are not (mono, epi, not iso)", f=w.morphism)
    c.count("bimorphisms")


def _s_quotient(c: _Ctx):
    q = c.quiver
    if not q.arrows:
        f = c.s.surjection()
        c.expect(is_stable_epi(f, c.oracle).verdict, "semisimple: module epi not stable epi", f=f)
    else:
        found = None
        for i in q.vertices:
            pi = proj(q, i, c.p)
            if radical(pi).is_zero():
                continue
            _, pr = quotient(pi, radical(pi))
            if not is_stable_epi(pr, c.oracle).verdict:
                found = (i, pr)
                break
        if found is None:
            c.fail("non-semisimple algebra but no module epi fails to be a stable epi")
        else:
            finding = {
                "quiver": q.to_json(),
                "statement": f"P_{found[0]} -> S_{found[0]} is a module epimorphism but not an epimorphism modulo projectives",
                "morphism": encode(found[1]),
            }
            if finding not in c.report.findings:
                c.report.findings.append(finding)
    # finite biproducts are preserved
    a, b, x = c.s.rep(), c.s.rep(), c.s.block()
    total = direct_sum(a, b)[0]
    c.expect(stable_dim(x, total) == stable_dim(x, a) + stable_dim(x, b), "stable Hom(X, A+B) is not additive", a=a, b=b, x=x)
    c.expect(stable_dim(total, x) == stable_dim(a, x) + stable_dim(b, x), "stable Hom(A+B, X) is not additive", a=a, b=b, x=x)


SUITES: dict[str, Callable[[_Ctx], None]] = {
    "S-split": _s_split,
    "S-halfexact": _s_halfexact,
    "S-mono": _s_mono,
    "S-epi": _s_epi,
    "S-splitepi": _s_splitepi,
    "S-iso": _s_iso,
    "S-torsion": _s_torsion,
    "S-reflector": _s_reflector,
    "S-normalmono": _s_normalmono,
    "S-normalepi": _s_normalepi,
    "S-conormal": _s_conormal,
    "S-witness": _s_witness,
    "S-quotient": _s_quotient,
}


def run_suite(
    name: str,
    trials: int,
    seed: int,
    quivers: Optional[Sequence[Quiver]] = None,
    p: int = DEFAULT_PRIME,
) -> SuiteReport:
    """Run suite ``name`` for ``trials`` instances; the quiver cycles with the trial index."""
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if trials < 0 or seed < 0:
        raise UnknownSuite("trials and seed must be nonnegative")
    qs = list(quivers) if quivers is not None else default_quivers()
    report = SuiteReport(name, trials, seed, field_header(p), GENERATOR, [_quiver_label(q) for q in qs])
    rng = make_rng(seed)
    samplers = [Sampler(q, p, rng) for q in qs]
    check = SUITES[name]
    for t in range(trials):
        k = t % len(qs)
        ctx = _Ctx(report, qs[k], samplers[k], t)
        try:
            check(ctx)
        except InternalAssertion as exc:
            ctx.fail(f"{type(exc).__name__}: {exc}")
    return report
