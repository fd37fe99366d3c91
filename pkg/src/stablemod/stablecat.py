"""Morphisms modulo those factoring through a projective.

Every decision here comes in up to three independent routes:

* ``fast-path``: the structural criterion (kernels, torsion, summands);
* ``definitional``: a linear system over stable hom coordinates;
* ``oracle``: for A_n quivers, induced maps on stable hom spaces from or
  into every interval module, which exhaust the indecomposables.

Whenever more than one route runs they must agree, otherwise
:class:`OracleMismatch` is raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Any, Optional, Sequence

import numpy as np

from . import exactfield as ef
from .errors import IsActuallyEpi, NotEpi, OracleMismatch
from .exactfield import Subspace
from .rep import (
    CACHE_SIZE,
    HomSpace,
    Morphism,
    Representation,
    an_indecomposables,
    codiagonal,
    direct_sum,
    hom_space,
    image,
    is_projective,
    kernel,
    kernel_inclusion,
    projective_cover,
    pushout,
    quotient,
    solve_in_hom,
    split_mono,
)
from .torsion import canonical_split, torsion_image, torsion_submodule


@dataclass(frozen=True, eq=False)
class StableHom:
    """``Hom(A, B)`` modulo the maps factoring through the projective cover of ``B``."""

    source: Representation
    target: Representation
    hom: HomSpace
    cover: Morphism
    trivial: Subspace  # inside hom coordinates

    @property
    def hom_basis(self) -> tuple[Morphism, ...]:
        return self.hom.basis

    @property
    def quotient_dim(self) -> int:
        return self.hom.dim - self.trivial.dim

    @cached_property
    def _quotient_map(self) -> np.ndarray:
        return self.trivial.quotient_map()

    @cached_property
    def _section(self) -> np.ndarray:
        return self.trivial.quotient_section()

    def project(self, f: Morphism) -> np.ndarray:
        """Canonical quotient coordinates of ``f``."""
        return ef.matmul(self._quotient_map, self.hom.coordinates(f).reshape(-1, 1), self.source.p)[:, 0]

    def lift(self, coords) -> Morphism:
        c = np.asarray(coords, dtype=np.int64).reshape(-1, 1)
        return self.hom.element(ef.matmul(self._section, c, self.source.p)[:, 0])

    @cached_property
    def representatives(self) -> tuple[Morphism, ...]:
        """One morphism per quotient basis vector."""
        eye = np.eye(self.quotient_dim, dtype=np.int64)
        return tuple(self.lift(row) for row in eye)


@lru_cache(maxsize=CACHE_SIZE)
def stable_hom(a: Representation, b: Representation) -> StableHom:
    hom = hom_space(a, b)
    q, cover = projective_cover(b)
    through = hom_space(a, q)
    images = [hom.coordinates(cover @ g) for g in through.basis]
    trivial = Subspace.span(images, hom.dim, a.p) if images else Subspace.zero(hom.dim, a.p)
    return StableHom(a, b, hom, cover, trivial)


def stable_dim(a: Representation, b: Representation) -> int:
    return stable_hom(a, b).quotient_dim


def factor_through_cover(f: Morphism) -> Optional[Morphism]:
    """``g`` with ``cover @ g == f`` where ``cover`` is the projective cover of the target."""
    sh = stable_hom(f.source, f.target)
    through = hom_space(f.source, sh.cover.source)
    return solve_in_hom(through, lambda g: (sh.cover @ g).vector(), f.vector())


def stably_zero(f: Morphism) -> bool:
    return not stable_hom(f.source, f.target).project(f).any()


def stably_equal(f: Morphism, g: Morphism) -> bool:
    return stably_zero(f - g)


# ------------------------------------------------------------------ reports


@dataclass
class CriterionReport:
    verdict: bool
    method: str  # "fast-path" | "oracle" | "both"
    witness: Optional[dict[str, Any]] = None
    checks: dict[str, bool] = field(default_factory=dict)

    def __bool__(self):
        return self.verdict


def _agree(name: str, checks: dict[str, bool]) -> bool:
    values = set(checks.values())
    if len(values) > 1:
        raise OracleMismatch(f"{name}: routes disagree {checks}")
    return values.pop()


def _method(checks: dict[str, bool]) -> str:
    return "both" if "oracle" in checks else "fast-path"


def _use_oracle(q, oracle: Optional[bool]) -> bool:
    if oracle is None:
        return q.an_orientation() is not None
    return oracle


@lru_cache(maxsize=64)
def _test_objects(q, p) -> tuple[Representation, ...]:
    return tuple(an_indecomposables(q, p))


def test_objects(m: Representation) -> tuple[Representation, ...]:
    """Interval modules of the A_n quiver ``m`` lives over."""
    return _test_objects(m.quiver, m.p)


# ----------------------------------------------- induced maps on stable homs


def post_matrix(f: Morphism, x: Representation) -> np.ndarray:
    """Matrix of ``g ↦ f∘g`` from stable (X, A) to stable (X, B)."""
    src = stable_hom(x, f.source)
    tgt = stable_hom(x, f.target)
    if src.quotient_dim == 0:
        return np.zeros((tgt.quotient_dim, 0), dtype=np.int64)
    return np.stack([tgt.project(f @ g) for g in src.representatives], axis=1)


def pre_matrix(f: Morphism, x: Representation) -> np.ndarray:
    """Matrix of ``g ↦ g∘f`` from stable (B, X) to stable (A, X)."""
    src = stable_hom(f.target, x)
    tgt = stable_hom(f.source, x)
    if src.quotient_dim == 0:
        return np.zeros((tgt.quotient_dim, 0), dtype=np.int64)
    return np.stack([tgt.project(g @ f) for g in src.representatives], axis=1)


def _rank(m: np.ndarray, p: int) -> int:
    return ef.rank(m, p) if m.size else 0


def oracle_mono(f: Morphism) -> bool:
    return all(_rank(post_matrix(f, x), f.p) == stable_dim(x, f.source) for x in test_objects(f.source))


def oracle_epi(f: Morphism) -> bool:
    return all(_rank(pre_matrix(f, x), f.p) == stable_dim(f.target, x) for x in test_objects(f.source))


def oracle_split_mono(f: Morphism) -> bool:
    return all(_rank(pre_matrix(f, x), f.p) == stable_dim(f.source, x) for x in test_objects(f.source))


def oracle_split_epi(f: Morphism) -> bool:
    return all(_rank(post_matrix(f, x), f.p) == stable_dim(x, f.target) for x in test_objects(f.source))


def oracle_iso(f: Morphism) -> bool:
    for x in test_objects(f.source):
        m = post_matrix(f, x)
        n_src, n_tgt = stable_dim(x, f.source), stable_dim(x, f.target)
        if n_src != n_tgt or _rank(m, f.p) != n_src:
            return False
    return True


def oracle_epi_counterexample(f: Morphism) -> Optional[tuple[Representation, Morphism]]:
    """An interval ``X`` and ``g: B -> X`` with ``g∘f`` stably zero but ``g`` not."""
    for x in test_objects(f.source):
        m = pre_matrix(f, x)
        if m.shape[1] == 0:
            continue
        ns = ef.nullspace(m, f.p) if m.shape[0] else np.eye(m.shape[1], dtype=np.int64)
        if ns.shape[0]:
            return x, stable_hom(f.target, x).lift(ns[0])
    return None


def is_kernel_of(k: Morphism, f: Morphism, tests: Sequence[Representation]) -> bool:
    """Check that ``k`` is a kernel of ``f`` in the stable category, probing with ``tests``."""
    if not stably_zero(f @ k):
        return False
    p = f.p
    for x in tests:
        pk = post_matrix(k, x)
        if _rank(pk, p) != pk.shape[1]:
            return False
        pf = post_matrix(f, x)
        dim_mid = stable_dim(x, f.source)
        ker = Subspace.kernel_of(pf, p) if pf.shape[0] else Subspace.full(dim_mid, p)
        im = Subspace.column_space(pk, p) if pk.shape[1] else Subspace.zero(dim_mid, p)
        if ker != im:
            return False
    return True


def is_cokernel_of(c: Morphism, k: Morphism, tests: Sequence[Representation]) -> bool:
    """Check that ``c`` is a cokernel of ``k`` in the stable category, probing with ``tests``."""
    if not stably_zero(c @ k):
        return False
    p = c.p
    for x in tests:
        pc = pre_matrix(c, x)
        if _rank(pc, p) != pc.shape[1]:
            return False
        pk = pre_matrix(k, x)
        dim_mid = stable_dim(c.source, x)
        ker = Subspace.kernel_of(pk, p) if pk.shape[0] else Subspace.full(dim_mid, p)
        im = Subspace.column_space(pc, p) if pc.shape[1] else Subspace.zero(dim_mid, p)
        if ker != im:
            return False
    return True


# ------------------------------------------------------------------ criteria


def is_stably_zero(f: Morphism) -> CriterionReport:
    g = factor_through_cover(f)
    if g is None:
        return CriterionReport(False, "fast-path", None, {"fast_path": False})
    sh = stable_hom(f.source, f.target)
    witness = {"through": sh.cover.source, "first": g, "second": sh.cover}
    return CriterionReport(True, "fast-path", witness, {"fast_path": True})


def is_zero_object(m: Representation) -> bool:
    return is_projective(m)


def is_stable_mono(f: Morphism, oracle: Optional[bool] = None) -> CriterionReport:
    ker_mod, ker_inc = kernel(f).as_module()
    checks = {"fast_path": is_projective(ker_mod)}
    if _use_oracle(f.source.quiver, oracle):
        checks["oracle"] = oracle_mono(f)
    verdict = _agree("is_stable_mono", checks)
    witness = None if verdict else {"kernel_inclusion": ker_inc}
    return CriterionReport(verdict, _method(checks), witness, checks)


def epi_fast_path(f: Morphism) -> bool:
    """``t(B) ⊆ f(t(A))``."""
    canonical_split(f.source)
    canonical_split(f.target)
    return torsion_image(f).contains(torsion_submodule(f.target))


def is_stable_epi(f: Morphism, oracle: Optional[bool] = None) -> CriterionReport:
    checks = {"fast_path": epi_fast_path(f)}
    if _use_oracle(f.source.quiver, oracle):
        checks["oracle"] = oracle_epi(f)
    verdict = _agree("is_stable_epi", checks)
    witness = None
    if not verdict:
        # B -> B / f(t(A)) kills f modulo projectives but is not itself trivial
        _, g = quotient(f.target, torsion_image(f))
        witness = {"cokernel_test": g}
    return CriterionReport(verdict, _method(checks), witness, checks)


def _solve_stable(columns: list[np.ndarray], rhs: np.ndarray, p: int) -> Optional[np.ndarray]:
    if not columns:
        return np.zeros(0, dtype=np.int64) if not rhs.any() else None
    a = np.stack(columns, axis=1)
    if a.shape[0] == 0:
        return np.zeros(a.shape[1], dtype=np.int64)
    return ef.solve_vector(a, rhs, p)


def stable_retraction(f: Morphism) -> Optional[Morphism]:
    """``g`` with ``g∘f ≡ id_A`` modulo projectives."""
    hom = hom_space(f.target, f.source)
    sh = stable_hom(f.source, f.source)
    c = _solve_stable([sh.project(g @ f) for g in hom.basis], sh.project(f.source.identity()), f.p)
    return None if c is None else hom.element(c)


def stable_section(f: Morphism) -> Optional[Morphism]:
    """``g`` with ``f∘g ≡ id_B`` modulo projectives."""
    hom = hom_space(f.target, f.source)
    sh = stable_hom(f.target, f.target)
    c = _solve_stable([sh.project(f @ g) for g in hom.basis], sh.project(f.target.identity()), f.p)
    return None if c is None else hom.element(c)


def stable_inverse(f: Morphism) -> Optional[Morphism]:
    """``g`` that is a two-sided inverse of ``f`` modulo projectives."""
    hom = hom_space(f.target, f.source)
    sa = stable_hom(f.source, f.source)
    sb = stable_hom(f.target, f.target)
    cols = [np.concatenate([sa.project(g @ f), sb.project(f @ g)]) for g in hom.basis]
    rhs = np.concatenate([sa.project(f.source.identity()), sb.project(f.target.identity())])
    c = _solve_stable(cols, rhs, f.p)
    return None if c is None else hom.element(c)


def split_mono_fast_path(f: Morphism) -> bool:
    """``f`` restricted to ``t(A)`` is a split monomorphism of modules."""
    inc = canonical_split(f.source).inclusion
    return split_mono(f @ inc) is not None


def split_epi_fast_path(f: Morphism) -> bool:
    """``Ker f`` is a summand of ``A`` and ``t(B) ⊆ f(A)``."""
    canonical_split(f.target)
    if split_mono(kernel_inclusion(f)) is None:
        return False
    return image(f).contains(torsion_submodule(f.target))


def iso_fast_path(f: Morphism) -> bool:
    """``Ker f`` is a projective summand of ``A`` and ``t(B) ⊆ f(A)``."""
    return is_projective(kernel(f).as_module()[0]) and split_epi_fast_path(f)


def is_stable_split_mono(f: Morphism, oracle: Optional[bool] = None) -> CriterionReport:
    g = stable_retraction(f)
    checks = {"definitional": g is not None, "fast_path": split_mono_fast_path(f)}
    if _use_oracle(f.source.quiver, oracle):
        checks["oracle"] = oracle_split_mono(f)
    verdict = _agree("is_stable_split_mono", checks)
    return CriterionReport(verdict, _method(checks), {"retraction": g} if g is not None else None, checks)


def is_stable_split_epi(f: Morphism, oracle: Optional[bool] = None) -> CriterionReport:
    g = stable_section(f)
    checks = {"definitional": g is not None, "fast_path": split_epi_fast_path(f)}
    if _use_oracle(f.source.quiver, oracle):
        checks["oracle"] = oracle_split_epi(f)
    verdict = _agree("is_stable_split_epi", checks)
    return CriterionReport(verdict, _method(checks), {"section": g} if g is not None else None, checks)


def is_stable_iso(f: Morphism, oracle: Optional[bool] = None) -> CriterionReport:
    g = stable_inverse(f)
    checks = {"definitional": g is not None, "fast_path": iso_fast_path(f)}
    if _use_oracle(f.source.quiver, oracle):
        checks["oracle"] = oracle_iso(f)
    verdict = _agree("is_stable_iso", checks)
    return CriterionReport(verdict, _method(checks), {"inverse": g} if g is not None else None, checks)


def stable_kernel(f: Morphism) -> Morphism:
    """Inclusion ``Ker f -> A``, which represents the kernel of ``f`` modulo projectives."""
    return kernel_inclusion(f)


def validate_stable_kernel(f: Morphism, tests: Optional[Sequence[Representation]] = None) -> bool:
    if tests is None:
        tests = test_objects(f.source)
    return is_kernel_of(stable_kernel(f), f, tests)


# --------------------------------------------------------------- epi tools


def epi_representative(f: Morphism) -> tuple[Morphism, Morphism]:
    """``(f ⊥ q: A ⊕ P -> B, A -> A ⊕ P)`` with ``q`` the projective cover of ``B``."""
    q_mod, q = projective_cover(f.target)
    total, (inj_a, _), _ = direct_sum(f.source, q_mod)
    return codiagonal([f, q], total), inj_a


def pushout_lift(f: Morphism, h: Morphism) -> Optional[Morphism]:
    """Diagonal ``s: B -> Y`` with ``(h⌐f)∘s = h'`` in the pushout of ``(f, h)``, or None."""
    if not f.is_surjective():
        raise NotEpi("pushout_lift needs a surjective f")
    _, h_prime, f_prime = pushout(f, h)
    hom = hom_space(f.target, h.target)
    return solve_in_hom(hom, lambda s: (f_prime @ s).vector(), h_prime.vector())


def epi_witness(f: Morphism, oracle: Optional[bool] = None) -> dict[str, Any]:
    """A map ``h: A -> Q`` into a projective for which no pushout lift exists.

    On A_n the map is extracted from an interval-module counterexample ``g``
    (``g∘f = h''∘h``); elsewhere the torsionfree quotient ``A -> A^♯`` is used.
    Non-surjective ``f`` is first replaced by its epi representative.
    """
    used = f
    if not f.is_surjective():
        used, _ = epi_representative(f)
    if is_stable_epi(used, oracle).verdict:
        raise IsActuallyEpi("morphism is an epimorphism in the stable category")
    if _use_oracle(used.source.quiver, oracle):
        x, g = oracle_epi_counterexample(used)
        h = factor_through_cover(g @ used)
        if h is None:
            raise OracleMismatch("counterexample composite does not factor through a projective")
        second = stable_hom(used.source, x).cover
        witness = {"morphism": used, "test_object": x, "g": g, "h": h, "second": second}
    else:
        split = canonical_split(used.source)
        h = split.projection
        witness = {"morphism": used, "h": h}
    if pushout_lift(used, h) is not None:
        raise OracleMismatch("extracted witness admits a pushout lift")
    witness["lift_exists"] = False
    return witness


def clear_caches() -> None:
    """Drop every memoized hom space, cover, envelope and torsion split."""
    from . import rep, torsion

    for fn in (
        rep.hom_space,
        rep._regular,
        rep.projective_cover,
        rep.injective_envelope,
        rep.is_projective,
        rep.is_injective,
        torsion.torsion_submodule,
        torsion.canonical_split,
        stable_hom,
        _test_objects,
    ):
        fn.cache_clear()
