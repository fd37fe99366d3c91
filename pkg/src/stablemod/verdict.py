"""Abelian-or-not classification, the A_n orientation census and the kA_n / kA_{n-1} comparison."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from .errors import InputError, InternalAssertion
from .normality import BimorphismWitness, bimorphism_witness, envelope_of_ring
from .quiver import Quiver, an_orientations, an_quiver, is_monotone
from .rep import (
    DEFAULT_PRIME,
    Representation,
    an_indecomposables,
    hom_dim,
    inj,
    is_projective,
    isomorphic,
    proj,
    regular,
    socle,
)
from .stablecat import stable_dim


@dataclass
class Verdict:
    quiver: Quiver
    p: int
    envelope_of_ring: Representation
    envelope_projective: bool
    abelian: bool
    reasons: dict[str, Any] = field(default_factory=dict)
    witness: Optional[BimorphismWitness] = None


def _envelope_summands_projective(q: Quiver, p: int) -> bool:
    """Second route: every ``I_j`` met by the socle of Λ is isomorphic to some ``P_k``."""
    lam = regular(q, p)
    soc = socle(lam).dims
    projectives = [proj(q, k, p) for k in q.vertices]
    for j in q.vertices:
        if soc[j - 1] == 0:
            continue
        ij = inj(q, j, p)
        if not any(pk.dims == ij.dims and isomorphic(pk, ij) for pk in projectives):
            return False
    return True


def classify(q: Quiver, p: int = DEFAULT_PRIME, witness: bool = True) -> Verdict:
    """Decide whether the stable category of ``kQ`` is abelian.

    It is exactly when the injective envelope of the regular module is
    projective.  For A_n quivers that happens iff the orientation is monotone.
    """
    env, _ = envelope_of_ring(q, p)
    env_proj = is_projective(env)
    summands = _envelope_summands_projective(q, p)
    if summands != env_proj:
        raise InternalAssertion(f"envelope projectivity routes disagree: {env_proj} vs {summands}")
    reasons: dict[str, Any] = {
        "envelope_dims": list(env.dims),
        "envelope_projective_by_cover": env_proj,
        "envelope_projective_by_summands": summands,
    }
    orient = q.an_orientation()
    if orient is not None:
        reasons["orientation"] = orient
        reasons["monotone"] = is_monotone(orient)
        if reasons["monotone"] != env_proj:
            raise InternalAssertion(f"A_n orientation {orient!r}: monotone pattern disagrees with envelope")
    w = None
    if witness and not env_proj and orient is not None:
        w = bimorphism_witness(q, p)
        reasons["factorization_system"] = "Epi and Mono do not form a factorization system: a bimorphism is not an iso"
    return Verdict(q, p, env, env_proj, env_proj, reasons, w)


@dataclass
class CensusRow:
    orientation: str
    monotone: bool
    abelian: bool
    envelope_projective: bool
    agree: bool


def census(n: int, p: int = DEFAULT_PRIME) -> list[CensusRow]:
    """Classify every orientation of A_n."""
    if n < 1:
        raise InputError("census needs n >= 1")
    rows = []
    for o in an_orientations(n):
        v = classify(an_quiver(n, o), p, witness=False)
        mono = is_monotone(o)
        rows.append(CensusRow(o, mono, v.abelian, v.envelope_projective, mono == v.abelian == v.envelope_projective))
    return rows


# --------------------------------------------------------------- equivalence


@dataclass
class EquivalenceReport:
    n: int
    p: int
    stable_objects: list[tuple[int, int]]  # intervals [i..j] of kA_n with nonzero stable endomorphisms
    target_objects: list[tuple[int, int]]  # intervals of kA_{n-1}
    stable_table: list[list[int]]
    target_table: list[list[int]]
    count_expected: int
    bijection: Optional[list[int]]  # stable_objects[k] <-> target_objects[bijection[k]]

    @property
    def count_matches(self) -> bool:
        return len(self.stable_objects) == self.count_expected == len(self.target_objects)

    @property
    def matches(self) -> bool:
        return self.count_matches and self.bijection is not None


def _support(m: Representation) -> tuple[int, int]:
    nz = [v for v, d in enumerate(m.dims, start=1) if d]
    return (nz[0], nz[-1])


def _signature(t: np.ndarray, k: int) -> tuple:
    return (int(t[k, k]), tuple(sorted(t[k, :].tolist())), tuple(sorted(t[:, k].tolist())))


def find_bijection(a: np.ndarray, b: np.ndarray) -> Optional[list[int]]:
    """A permutation ``s`` with ``a[i, j] == b[s[i], s[j]]``, by backtracking on signatures."""
    n = a.shape[0]
    if b.shape[0] != n:
        return None
    sig_a = [_signature(a, i) for i in range(n)]
    sig_b = [_signature(b, i) for i in range(n)]
    chosen: list[int] = []
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for c in range(n):
            if used[c] or sig_a[i] != sig_b[c]:
                continue
            if all(a[i, k] == b[c, chosen[k]] and a[k, i] == b[chosen[k], c] for k in range(i)) and a[i, i] == b[c, c]:
                used[c] = True
                chosen.append(c)
                if extend(i + 1):
                    return True
                chosen.pop()
                used[c] = False
        return False

    return list(chosen) if extend(0) else None


def equivalence_table(n: int, p: int = DEFAULT_PRIME) -> EquivalenceReport:
    """Compare stable homs between indecomposables of kA_n with homs over kA_{n-1} (equioriented)."""
    if not 2 <= n <= 5:
        raise InputError(f"equivalence_table supports 2 <= n <= 5, got {n}")
    big = an_quiver(n)
    small = an_quiver(n - 1)
    objs = [m for m in an_indecomposables(big, p) if stable_dim(m, m) > 0]
    targets = an_indecomposables(small, p)
    st = np.array([[stable_dim(x, y) for y in objs] for x in objs], dtype=np.int64).reshape(len(objs), len(objs))
    ht = np.array([[hom_dim(x, y) for y in targets] for x in targets], dtype=np.int64).reshape(
        len(targets), len(targets)
    )
    bij = find_bijection(st, ht)
    return EquivalenceReport(
        n,
        p,
        [_support(m) for m in objs],
        [_support(m) for m in targets],
        st.tolist(),
        ht.tolist(),
        n * (n - 1) // 2,
        bij,
    )
