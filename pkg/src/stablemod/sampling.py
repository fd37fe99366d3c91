"""Seeded random representations, morphisms and exact sequences.

All randomness comes from a ``numpy.random.Generator`` built on PCG64, so a
given seed reproduces the same instances on every platform.  Half of the
random representations are uniform (dimensions in ``[0, dmax]``, uniform
matrices); the other half are direct sums of indecomposables, which produce
far richer hom spaces than generic uniform data.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from .quiver import Quiver
from .rep import (
    SES,
    Morphism,
    Representation,
    an_indecomposables,
    direct_sum,
    hom_space,
    image,
    inj,
    proj,
    quotient,
    simple,
)
from .stablecat import epi_representative, is_stable_epi, is_stable_mono
from .torsion import torsion_submodule

GENERATOR = "numpy.random.Generator(PCG64)"


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


class Sampler:
    def __init__(self, quiver: Quiver, p: int, rng: np.random.Generator, dmax: int = 3):
        self.quiver = quiver
        self.p = p
        self.rng = rng
        self.dmax = dmax
        if quiver.an_orientation() is not None:
            self.blocks = list(an_indecomposables(quiver, p))
        else:
            vs = quiver.vertices
            self.blocks = [proj(quiver, i, p) for i in vs] + [inj(quiver, i, p) for i in vs]
            self.blocks += [simple(quiver, i, p) for i in vs]

    def uniform_rep(self) -> Representation:
        q = self.quiver
        dims = [int(d) for d in self.rng.integers(0, self.dmax + 1, size=q.n)]
        mats = [self.rng.integers(0, self.p, size=(dims[a.target - 1], dims[a.source - 1])) for a in q.arrows]
        return Representation(q, self.p, tuple(dims), tuple(mats))

    def block_sum(self, max_blocks: int = 3) -> Representation:
        if not self.blocks:
            return Representation.zero(self.quiver, self.p)
        k = int(self.rng.integers(1, max_blocks + 1))
        picks = [self.blocks[int(i)] for i in self.rng.integers(0, len(self.blocks), size=k)]
        return direct_sum(*picks)[0] if k > 1 else picks[0]

    def rep(self) -> Representation:
        return self.uniform_rep() if self.rng.random() < 0.5 else self.block_sum()

    def block(self) -> Representation:
        return self.blocks[int(self.rng.integers(0, len(self.blocks)))]

    def coefficients(self, n: int) -> np.ndarray:
        return self.rng.integers(0, self.p, size=n)

    def morphism(self, a: Representation, b: Representation) -> Morphism:
        hom = hom_space(a, b)
        return hom.element(self.coefficients(hom.dim))

    def morphism_pair(self) -> Morphism:
        return self.morphism(self.rep(), self.rep())

    def submodule(self, m: Representation):
        """Image of a random map into ``m``."""
        return image(self.morphism(self.rep(), m))

    def surjection(self) -> Morphism:
        roll = self.rng.random()
        if roll < 0.4:
            a = self.rep()
            return quotient(a, self.submodule(a))[1]
        if roll < 0.7:
            return epi_representative(self.morphism_pair())[0]
        a = self.rep()
        t_mod, t_inc = torsion_submodule(a).as_module()
        sub = image(t_inc @ self.morphism(self.rep(), t_mod))
        return quotient(a, sub)[1]

    def injection(self) -> Morphism:
        m = self.rep()
        return self.submodule(m).as_module()[1]

    def ses(self) -> SES:
        i = self.injection()
        _, pr = quotient(i.target, image(i))
        return SES(i, pr)

    def stable_epi(self, tries: int = 200, oracle: Optional[bool] = False) -> Optional[Morphism]:
        """A surjection that is an epimorphism modulo projectives (rejection sampling)."""
        for _ in range(tries):
            f = self.surjection()
            if is_stable_epi(f, oracle).verdict:
                return f
        return None

    def stable_mono(self, tries: int = 200, oracle: Optional[bool] = False) -> Optional[Morphism]:
        for _ in range(tries):
            f = self.morphism_pair() if self.rng.random() < 0.5 else self.injection()
            if is_stable_mono(f, oracle).verdict:
                return f
        return None
