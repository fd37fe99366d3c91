"""Torsion submodule ``t(M)``, the torsionfree quotient ``M^♯`` and the split ``M = t(M) ⊕ M^♯``.

``t(M)`` is the common kernel of all linear forms ``M -> Λ``.  For a path
algebra every ``M^♯`` is projective, so the quotient sequence splits and
``t(M)`` is the largest summand of ``M`` without projective summands.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import SplitAssertionFailed
from .exactfield import Subspace
from .rep import (
    CACHE_SIZE,
    Morphism,
    Representation,
    SubRep,
    hom_space,
    image,
    is_projective,
    quotient,
    regular,
    split_epi,
)


@dataclass(frozen=True, eq=False)
class TorsionSplit:
    module: Representation
    torsion: SubRep
    sharp: Representation
    projection: Morphism  # M -> M^♯
    section: Morphism  # M^♯ -> M

    @property
    def torsion_module(self) -> Representation:
        return self.torsion.as_module()[0]

    @property
    def inclusion(self) -> Morphism:
        return self.torsion.as_module()[1]


@lru_cache(maxsize=CACHE_SIZE)
def torsion_submodule(m: Representation) -> SubRep:
    forms = hom_space(m, regular(m.quiver, m.p)).basis
    spaces = []
    for v in range(m.quiver.n):
        if not forms or m.dims[v] == 0:
            spaces.append(Subspace.full(m.dims[v], m.p))
            continue
        stacked = np.vstack([f.components[v] for f in forms])
        spaces.append(Subspace.kernel_of(stacked, m.p))
    return SubRep(m, tuple(spaces))


def sharp(m: Representation) -> tuple[Representation, Morphism]:
    """``(M^♯, M -> M^♯)``."""
    return quotient(m, torsion_submodule(m))


@lru_cache(maxsize=CACHE_SIZE)
def canonical_split(m: Representation) -> TorsionSplit:
    t = torsion_submodule(m)
    sh, pr = sharp(m)
    if not is_projective(sh):
        raise SplitAssertionFailed(f"torsionfree quotient of {m!r} is not projective")
    t_mod = t.as_module()[0]
    if hom_space(t_mod, regular(m.quiver, m.p)).dim:
        raise SplitAssertionFailed(f"torsion part of {m!r} has nonzero linear forms")
    sec = split_epi(pr)
    if sec is None:
        raise SplitAssertionFailed(f"torsion sequence of {m!r} does not split")
    return TorsionSplit(m, t, sh, pr, sec)


def is_stable_module(m: Representation) -> bool:
    """No projective summands; over a hereditary algebra the same as ``Hom(M, Λ) = 0``."""
    return hom_space(m, regular(m.quiver, m.p)).dim == 0


def is_torsionfree(m: Representation) -> bool:
    return torsion_submodule(m).is_zero()


def torsion_image(f: Morphism) -> SubRep:
    """``f(t(A))`` as a subrepresentation of the target."""
    return image(f @ torsion_submodule(f.source).as_module()[1])
