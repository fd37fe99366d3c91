"""Finite-dimensional quiver representations and their homological toolkit.

Conventions: ``action[a]`` maps coordinates at ``source(a)`` to coordinates
at ``target(a)`` (column vectors), and a morphism ``f: A -> B`` satisfies
``f[t] @ A[a] == B[a] @ f[s]`` for every arrow ``a: s -> t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from . import exactfield as ef
from .errors import DimensionMismatch, InvalidMorphism, NotAn, QuiverMismatch
from .exactfield import DEFAULT_PRIME, Subspace, frozen, matmul
from .quiver import Path, Quiver

CACHE_SIZE = 1 << 14


@dataclass(frozen=True, eq=False)
class Representation:
    quiver: Quiver
    p: int
    dims: tuple[int, ...]
    action: tuple[np.ndarray, ...]  # aligned with quiver.arrows

    def __post_init__(self):
        q = self.quiver
        dims = tuple(int(d) for d in self.dims)
        if len(dims) != q.n or any(d < 0 for d in dims):
            raise DimensionMismatch(f"need {q.n} nonnegative dimensions, got {self.dims}")
        if len(self.action) != len(q.arrows):
            raise DimensionMismatch(f"need {len(q.arrows)} arrow matrices, got {len(self.action)}")
        mats = []
        for a, m in zip(q.arrows, self.action):
            shape = (dims[a.target - 1], dims[a.source - 1])
            m = np.array(m, dtype=np.int64)
            if m.size == 0:
                m = np.zeros(shape, dtype=np.int64)
            if m.shape != shape:
                raise DimensionMismatch(f"arrow {a.name}: expected shape {shape}, got {m.shape}")
            mats.append(frozen(m % self.p))
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "action", tuple(mats))
        object.__setattr__(self, "_hash", hash((q, self.p, dims, tuple(m.tobytes() for m in mats))))

    @classmethod
    def create(
        cls,
        quiver: Quiver,
        dims: Sequence[int],
        matrices: Union[Mapping[str, object], Sequence[object], None] = None,
        p: int = DEFAULT_PRIME,
    ) -> "Representation":
        """Build from a name->matrix mapping (missing arrows act by zero)."""
        if matrices is None:
            matrices = {}
        if isinstance(matrices, Mapping):
            unknown = set(matrices) - set(quiver.arrow_map)
            if unknown:
                raise DimensionMismatch(f"matrices given for unknown arrows {sorted(unknown)}")
            mats = [matrices.get(a.name, np.zeros((0, 0))) for a in quiver.arrows]
        else:
            mats = list(matrices)
        return cls(quiver, ef.PrimeField(p).p, tuple(dims), tuple(np.array(m, dtype=np.int64) for m in mats))

    @classmethod
    def zero(cls, quiver: Quiver, p: int = DEFAULT_PRIME) -> "Representation":
        return cls.create(quiver, [0] * quiver.n, None, p)

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        if self is other:
            return True
        return (
            self._hash == other._hash
            and (self.quiver, self.p, self.dims) == (other.quiver, other.p, other.dims)
            and all(np.array_equal(x, y) for x, y in zip(self.action, other.action))
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Representation(dims={self.dims}, p={self.p})"

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def mat(self, name: str) -> np.ndarray:
        return self.action[self.quiver.arrows.index(self.quiver.arrow(name))]

    @cached_property
    def _mats(self) -> dict[str, np.ndarray]:
        return {a.name: m for a, m in zip(self.quiver.arrows, self.action)}

    def path_matrix(self, path: Path) -> np.ndarray:
        m = np.eye(self.dim(path.start), dtype=np.int64)
        for name in path.arrows:
            m = matmul(self._mats[name], m, self.p)
        return m

    def identity(self) -> "Morphism":
        return Morphism(self, self, tuple(np.eye(d, dtype=np.int64) for d in self.dims))

    def zero_to(self, other: "Representation") -> "Morphism":
        return Morphism.zero(self, other)

    def same_category(self, other: "Representation"):
        if self.quiver != other.quiver or self.p != other.p:
            raise QuiverMismatch("representations live over different quivers or fields")


@dataclass(frozen=True, eq=False)
class Morphism:
    source: Representation
    target: Representation
    components: tuple[np.ndarray, ...]  # index v-1

    def __post_init__(self):
        self.source.same_category(self.target)
        p = self.source.p
        comps = []
        for v, m in enumerate(self.components, start=1):
            shape = (self.target.dim(v), self.source.dim(v))
            m = np.array(m, dtype=np.int64)
            if m.size == 0:
                m = np.zeros(shape, dtype=np.int64)
            if m.shape != shape:
                raise DimensionMismatch(f"component at vertex {v}: expected {shape}, got {m.shape}")
            comps.append(frozen(m % p))
        if len(comps) != self.source.quiver.n:
            raise DimensionMismatch("one component per vertex required")
        object.__setattr__(self, "components", tuple(comps))

    @classmethod
    def zero(cls, source: Representation, target: Representation) -> "Morphism":
        return cls(source, target, tuple(np.zeros((t, s), dtype=np.int64) for s, t in zip(source.dims, target.dims)))

    @classmethod
    def from_vector(cls, source: Representation, target: Representation, vec: np.ndarray) -> "Morphism":
        comps = []
        off = 0
        for s, t in zip(source.dims, target.dims):
            comps.append(np.asarray(vec[off : off + s * t]).reshape(t, s))
            off += s * t
        return cls(source, target, tuple(comps))

    @property
    def p(self) -> int:
        return self.source.p

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and all(np.array_equal(x, y) for x, y in zip(self.components, other.components))
        )

    __hash__ = None

    def __repr__(self):
        return f"Morphism({self.source.dims} -> {self.target.dims})"

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """``g @ f`` is the composite ``g after f``."""
        if other.target != self.source:
            raise InvalidMorphism("composition: codomain/domain mismatch")
        return Morphism(other.source, self.target, tuple(matmul(g, f, self.p) for g, f in zip(self.components, other.components)))

    def __add__(self, other: "Morphism") -> "Morphism":
        self._parallel(other)
        return Morphism(self.source, self.target, tuple(x + y for x, y in zip(self.components, other.components)))

    def __sub__(self, other: "Morphism") -> "Morphism":
        self._parallel(other)
        return Morphism(self.source, self.target, tuple(x - y for x, y in zip(self.components, other.components)))

    def __neg__(self) -> "Morphism":
        return self.scale(-1)

    def scale(self, c: int) -> "Morphism":
        return Morphism(self.source, self.target, tuple(int(c) * x for x in self.components))

    def _parallel(self, other):
        if self.source != other.source or self.target != other.target:
            raise InvalidMorphism("morphisms are not parallel")

    def vector(self) -> np.ndarray:
        if not self.components:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([m.ravel() for m in self.components])

    def is_valid(self) -> bool:
        q = self.source.quiver
        for a, ma, mb in zip(q.arrows, self.source.action, self.target.action):
            lhs = matmul(self.components[a.target - 1], ma, self.p)
            rhs = matmul(mb, self.components[a.source - 1], self.p)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def check(self) -> "Morphism":
        if not self.is_valid():
            raise InvalidMorphism("components do not commute with the arrow actions")
        return self

    def is_zero(self) -> bool:
        return not any(m.any() for m in self.components)

    def is_injective(self) -> bool:
        return all(ef.rank(m, self.p) == m.shape[1] for m in self.components if m.shape[1])

    def is_surjective(self) -> bool:
        return all(ef.rank(m, self.p) == m.shape[0] for m in self.components if m.shape[0])

    def is_iso(self) -> bool:
        return self.source.dims == self.target.dims and self.is_injective()


@dataclass(frozen=True, eq=False)
class SubRep:
    """A subrepresentation, one canonical subspace per vertex."""

    parent: Representation
    spaces: tuple[Subspace, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.spaces)

    def __eq__(self, other):
        if not isinstance(other, SubRep):
            return NotImplemented
        return self.parent == other.parent and self.spaces == other.spaces

    __hash__ = None

    def is_zero(self) -> bool:
        return all(s.dim == 0 for s in self.spaces)

    def is_closed(self) -> bool:
        for a, m in zip(self.parent.quiver.arrows, self.parent.action):
            src = self.spaces[a.source - 1]
            img = Subspace.column_space(matmul(m, src.basis.T, self.parent.p), self.parent.p) if src.dim else None
            if img is not None and not self.spaces[a.target - 1].contains(img):
                return False
        return True

    def contains(self, other: "SubRep") -> bool:
        return all(s.contains(o) for s, o in zip(self.spaces, other.spaces))

    def intersect(self, other: "SubRep") -> "SubRep":
        return SubRep(self.parent, tuple(s.intersect(o) for s, o in zip(self.spaces, other.spaces)))

    def sum(self, other: "SubRep") -> "SubRep":
        return SubRep(self.parent, tuple(s.sum(o) for s, o in zip(self.spaces, other.spaces)))

    @cached_property
    def _module(self) -> tuple[Representation, Morphism]:
        m = self.parent
        mats = []
        for a, act in zip(m.quiver.arrows, m.action):
            s, t = self.spaces[a.source - 1], self.spaces[a.target - 1]
            img = matmul(act, s.basis.T, m.p)
            mats.append(img[list(t.pivots), :])
        sub = Representation(m.quiver, m.p, self.dims, tuple(mats))
        inc = Morphism(sub, m, tuple(s.basis.T for s in self.spaces))
        return sub, inc

    def as_module(self) -> tuple[Representation, Morphism]:
        """The subrepresentation in its own coordinates plus its inclusion."""
        return self._module

    def image_under(self, f: Morphism) -> "SubRep":
        return image(f @ self.as_module()[1])

    @classmethod
    def whole(cls, m: Representation) -> "SubRep":
        return cls(m, tuple(Subspace.full(d, m.p) for d in m.dims))

    @classmethod
    def zero(cls, m: Representation) -> "SubRep":
        return cls(m, tuple(Subspace.zero(d, m.p) for d in m.dims))


@dataclass(frozen=True, eq=False)
class SES:
    """A short exact sequence ``0 -> A -i-> B -p-> C -> 0``."""

    i: Morphism
    p: Morphism

    @property
    def left(self) -> Representation:
        return self.i.source

    @property
    def middle(self) -> Representation:
        return self.i.target

    @property
    def right(self) -> Representation:
        return self.p.target

    def is_exact(self) -> bool:
        if self.i.target != self.p.source:
            return False
        if not (self.i.is_injective() and self.p.is_surjective()):
            return False
        return image(self.i).spaces == kernel(self.p).spaces

    def check(self) -> "SES":
        if not self.is_exact():
            raise InvalidMorphism("sequence is not short exact")
        return self


# --------------------------------------------------------------- hom spaces


@dataclass(frozen=True, eq=False)
class HomSpace:
    """Hom(A, B) as a subspace of the flattened component space."""

    source: Representation
    target: Representation
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @cached_property
    def basis(self) -> tuple[Morphism, ...]:
        return tuple(Morphism.from_vector(self.source, self.target, row) for row in self.space.basis)

    def coordinates(self, f: Morphism) -> np.ndarray:
        return self.space.coordinates(f.vector())

    def element(self, coords) -> Morphism:
        coords = np.asarray(coords, dtype=np.int64).reshape(-1)
        if self.dim == 0:
            return Morphism.zero(self.source, self.target)
        return Morphism.from_vector(self.source, self.target, (coords @ self.space.basis) % self.source.p)


def _hom_constraints(a: Representation, b: Representation) -> np.ndarray:
    """Matrix of the commutation system on row-major-flattened components."""
    q = a.quiver
    p = a.p
    offsets = [0]
    for s, t in zip(a.dims, b.dims):
        offsets.append(offsets[-1] + s * t)
    n_vars = offsets[-1]
    blocks = []
    for arrow, ma, mb in zip(q.arrows, a.action, b.action):
        s, t = arrow.source - 1, arrow.target - 1
        rows = b.dims[t] * a.dims[s]
        if rows == 0:
            continue
        block = np.zeros((rows, n_vars), dtype=np.int64)
        # X_t @ A_a  (X_t is b_t x a_t):  (I ⊗ A_a^T) vec(X_t)
        block[:, offsets[t] : offsets[t + 1]] += np.kron(np.eye(b.dims[t], dtype=np.int64), ma.T)
        # - B_a @ X_s  (X_s is b_s x a_s):  (B_a ⊗ I) vec(X_s)
        block[:, offsets[s] : offsets[s + 1]] -= np.kron(mb, np.eye(a.dims[s], dtype=np.int64))
        blocks.append(block % p)
    if not blocks:
        return np.zeros((0, n_vars), dtype=np.int64)
    return np.vstack(blocks)


@lru_cache(maxsize=CACHE_SIZE)
def hom_space(a: Representation, b: Representation) -> HomSpace:
    a.same_category(b)
    cons = _hom_constraints(a, b)
    n_vars = cons.shape[1]
    space = Subspace.kernel_of(cons, a.p) if cons.shape[0] else Subspace.full(n_vars, a.p)
    return HomSpace(a, b, space)


def hom_basis(a: Representation, b: Representation) -> list[Morphism]:
    """RREF-canonical basis of Hom(a, b); empty means Hom = 0."""
    return list(hom_space(a, b).basis)


def hom_dim(a: Representation, b: Representation) -> int:
    return hom_space(a, b).dim


def solve_in_hom(hom: HomSpace, image_of, rhs: np.ndarray) -> Optional[Morphism]:
    """Find ``x`` in ``hom`` with ``image_of(x) == rhs`` for a linear ``image_of``.

    ``image_of`` maps a Morphism to a flat vector; the canonical solution is
    returned, or None when no solution exists.
    """
    rhs = np.asarray(rhs, dtype=np.int64).reshape(-1)
    if hom.dim == 0:
        return Morphism.zero(hom.source, hom.target) if not (rhs % hom.source.p).any() else None
    cols = np.stack([image_of(b) for b in hom.basis], axis=1)
    c = ef.solve_vector(cols, rhs, hom.source.p)
    return None if c is None else hom.element(c)


# ----------------------------------------------------- kernels and quotients


def kernel(f: Morphism) -> SubRep:
    return SubRep(f.source, tuple(Subspace.kernel_of(m, f.p) for m in f.components))


def image(f: Morphism) -> SubRep:
    return SubRep(f.target, tuple(Subspace.column_space(m, f.p) for m in f.components))


def kernel_inclusion(f: Morphism) -> Morphism:
    return kernel(f).as_module()[1]


def quotient(m: Representation, sub: SubRep) -> tuple[Representation, Morphism]:
    """``m / sub`` in complement coordinates, with the projection."""
    proj = [s.quotient_map() for s in sub.spaces]
    sect = [s.quotient_section() for s in sub.spaces]
    mats = []
    for a, act in zip(m.quiver.arrows, m.action):
        mats.append(matmul(proj[a.target - 1], matmul(act, sect[a.source - 1], m.p), m.p))
    dims = tuple(pm.shape[0] for pm in proj)
    q = Representation(m.quiver, m.p, dims, tuple(mats))
    return q, Morphism(m, q, tuple(proj))


def cokernel(f: Morphism) -> tuple[Representation, Morphism]:
    return quotient(f.target, image(f))


def induced_on_quotient(f: Morphism, proj_src: Morphism, proj_tgt: Morphism) -> Morphism:
    """The map ``C -> D`` with ``g @ proj_src == proj_tgt @ f`` (projections surjective)."""
    hom = hom_space(proj_src.target, proj_tgt.target)
    target = (proj_tgt @ f).vector()
    g = solve_in_hom(hom, lambda x: (x @ proj_src).vector(), target)
    if g is None:
        raise InvalidMorphism("morphism does not descend to the quotients")
    return g


# ----------------------------------------------------------- direct sums


def direct_sum(*reps: Representation) -> tuple[Representation, list[Morphism], list[Morphism]]:
    """Biproduct with canonical injections and projections."""
    if not reps:
        raise ValueError("direct_sum needs at least one summand")
    first = reps[0]
    for r in reps[1:]:
        first.same_category(r)
    dims = tuple(sum(r.dims[v] for r in reps) for v in range(first.quiver.n))
    mats = tuple(ef.block_diag([r.action[k] for r in reps]) for k in range(len(first.quiver.arrows)))
    total = Representation(first.quiver, first.p, dims, mats)
    injections, projections = [], []
    offsets = [0] * first.quiver.n
    for r in reps:
        inj, pro = [], []
        for v in range(first.quiver.n):
            e = np.zeros((dims[v], r.dims[v]), dtype=np.int64)
            e[offsets[v] : offsets[v] + r.dims[v], :] = np.eye(r.dims[v], dtype=np.int64)
            inj.append(e)
            pro.append(e.T.copy())
            offsets[v] += r.dims[v]
        injections.append(Morphism(r, total, tuple(inj)))
        projections.append(Morphism(total, r, tuple(pro)))
    return total, injections, projections


def codiagonal(maps: Sequence[Morphism], source: Optional[Representation] = None) -> Morphism:
    """``(f_1 ... f_k): ⊕ A_i -> B``."""
    if source is None:
        source = direct_sum(*[f.source for f in maps])[0]
    comps = tuple(np.hstack([f.components[v] for f in maps]) for v in range(source.quiver.n))
    return Morphism(source, maps[0].target, comps)


def diagonal(maps: Sequence[Morphism], target: Optional[Representation] = None) -> Morphism:
    """``(f_1, ..., f_k)^T: A -> ⊕ B_i``."""
    if target is None:
        target = direct_sum(*[f.target for f in maps])[0]
    comps = tuple(np.vstack([f.components[v] for f in maps]) for v in range(target.quiver.n))
    return Morphism(maps[0].source, target, comps)


def morphism_sum(*maps: Morphism) -> Morphism:
    """Block-diagonal ``f_1 ⊕ ... ⊕ f_k``."""
    src = direct_sum(*[f.source for f in maps])[0]
    tgt = direct_sum(*[f.target for f in maps])[0]
    comps = tuple(ef.block_diag([f.components[v] for f in maps]) for v in range(src.quiver.n))
    return Morphism(src, tgt, comps)


def pushout(f: Morphism, h: Morphism) -> tuple[Representation, Morphism, Morphism]:
    """Pushout of ``B <-f- A -h-> Y``; returns ``(D, h': B -> D, f': Y -> D)``."""
    if f.source != h.source:
        raise InvalidMorphism("pushout needs a common source")
    total, (inj_b, inj_y), _ = direct_sum(f.target, h.target)
    d, proj = cokernel(diagonal([f, -h], total))
    return d, proj @ inj_b, proj @ inj_y


# ----------------------------------------------- projectives and injectives


def proj(q: Quiver, i: int, p: int = DEFAULT_PRIME) -> Representation:
    """Indecomposable projective P_i: paths starting at ``i``."""
    bases = {j: q.paths(i, j) for j in q.vertices}
    index = {j: {path.arrows: k for k, path in enumerate(bases[j])} for j in q.vertices}
    mats = []
    for a in q.arrows:
        m = np.zeros((len(bases[a.target]), len(bases[a.source])), dtype=np.int64)
        for k, path in enumerate(bases[a.source]):
            m[index[a.target][path.arrows + (a.name,)], k] = 1
        mats.append(m)
    return Representation(q, p, tuple(len(bases[j]) for j in q.vertices), tuple(mats))


def inj(q: Quiver, i: int, p: int = DEFAULT_PRIME) -> Representation:
    """Indecomposable injective I_i: dual basis of paths ending at ``i``."""
    bases = {j: q.paths(j, i) for j in q.vertices}
    index = {j: {path.arrows: k for k, path in enumerate(bases[j])} for j in q.vertices}
    mats = []
    for a in q.arrows:
        m = np.zeros((len(bases[a.target]), len(bases[a.source])), dtype=np.int64)
        for k, path in enumerate(bases[a.source]):
            if path.arrows and path.arrows[0] == a.name:
                m[index[a.target][path.arrows[1:]], k] = 1
        mats.append(m)
    return Representation(q, p, tuple(len(bases[j]) for j in q.vertices), tuple(mats))


def simple(q: Quiver, i: int, p: int = DEFAULT_PRIME) -> Representation:
    return Representation.create(q, [1 if j == i else 0 for j in q.vertices], None, p)


@lru_cache(maxsize=256)
def _regular(q: Quiver, p: int) -> Representation:
    return direct_sum(*[proj(q, i, p) for i in q.vertices])[0]


def regular(q: Quiver, p: int = DEFAULT_PRIME) -> Representation:
    """The regular module, ``⊕_i P_i``."""
    return _regular(q, p)


def interval(q: Quiver, i: int, j: int, p: int = DEFAULT_PRIME) -> Representation:
    """Interval module M[i..j] on an A_n quiver."""
    if q.an_orientation() is None:
        raise NotAn("interval modules are defined here for A_n quivers only")
    dims = [1 if i <= v <= j else 0 for v in q.vertices]
    mats = {}
    for a in q.arrows:
        if i <= a.source <= j and i <= a.target <= j:
            mats[a.name] = [[1]]
    return Representation.create(q, dims, mats, p)


def an_indecomposables(q: Quiver, p: int = DEFAULT_PRIME) -> list[Representation]:
    """All n(n+1)/2 interval modules, ordered by (length, start)."""
    if q.an_orientation() is None:
        raise NotAn("an_indecomposables needs an A_n quiver")
    n = q.n
    return [interval(q, i, i + length - 1, p) for length in range(1, n + 1) for i in range(1, n - length + 2)]


# ------------------------------------------------------ radical and socle


def radical(m: Representation) -> SubRep:
    spaces = []
    for v in m.quiver.vertices:
        incoming = [mat for a, mat in zip(m.quiver.arrows, m.action) if a.target == v]
        if incoming and m.dim(v):
            spaces.append(Subspace.column_space(np.hstack(incoming), m.p))
        else:
            spaces.append(Subspace.zero(m.dim(v), m.p))
    return SubRep(m, tuple(spaces))


def socle(m: Representation) -> SubRep:
    spaces = []
    for v in m.quiver.vertices:
        outgoing = [mat for a, mat in zip(m.quiver.arrows, m.action) if a.source == v]
        if outgoing and m.dim(v):
            spaces.append(Subspace.kernel_of(np.vstack(outgoing), m.p))
        else:
            spaces.append(Subspace.full(m.dim(v), m.p))
    return SubRep(m, tuple(spaces))


def top(m: Representation) -> tuple[Representation, Morphism]:
    return quotient(m, radical(m))


def _from_projective(m: Representation, i: int, x: np.ndarray) -> Morphism:
    """The map P_i -> m sending the trivial path at ``i`` to ``x``."""
    q = m.quiver
    pi = proj(q, i, m.p)
    comps = []
    for j in q.vertices:
        cols = [matmul(m.path_matrix(path), x.reshape(-1, 1), m.p)[:, 0] for path in q.paths(i, j)]
        comps.append(np.stack(cols, axis=1) if cols else np.zeros((m.dim(j), 0), dtype=np.int64))
    return Morphism(pi, m, tuple(comps))


def _to_injective(m: Representation, i: int, coord: int) -> Morphism:
    """The map m -> I_i induced by the coordinate form ``coord`` on ``m_i``."""
    q = m.quiver
    ii = inj(q, i, m.p)
    comps = []
    for j in q.vertices:
        rows = [m.path_matrix(path)[coord, :] for path in q.paths(j, i)]
        comps.append(np.stack(rows, axis=0) if rows else np.zeros((0, m.dim(j)), dtype=np.int64))
    return Morphism(m, ii, tuple(comps))


@lru_cache(maxsize=CACHE_SIZE)
def projective_cover(m: Representation) -> tuple[Representation, Morphism]:
    """``(P, π)`` with ``π: P -> m`` a projective cover."""
    rad = radical(m)
    pieces = []
    for i in m.quiver.vertices:
        for x in rad.spaces[i - 1].complement().basis:
            pieces.append(_from_projective(m, i, x))
    if not pieces:
        z = Representation.zero(m.quiver, m.p)
        return z, Morphism.zero(z, m)
    cover = codiagonal(pieces)
    return cover.source, cover


@lru_cache(maxsize=CACHE_SIZE)
def injective_envelope(m: Representation) -> tuple[Representation, Morphism]:
    """``(I, ι)`` with ``ι: m -> I`` an injective envelope."""
    soc = socle(m)
    pieces = []
    for i in m.quiver.vertices:
        for c in soc.spaces[i - 1].pivots:
            pieces.append(_to_injective(m, i, c))
    if not pieces:
        z = Representation.zero(m.quiver, m.p)
        return z, Morphism.zero(m, z)
    env = diagonal(pieces)
    return env.target, env


def _projective_dim(q: Quiver, i: int) -> int:
    return sum(len(q.paths(i, j)) for j in q.vertices)


def _injective_dim(q: Quiver, i: int) -> int:
    return sum(len(q.paths(j, i)) for j in q.vertices)


@lru_cache(maxsize=CACHE_SIZE)
def is_projective(m: Representation) -> bool:
    t = radical(m)
    cover_dim = sum((m.dim(i) - t.spaces[i - 1].dim) * _projective_dim(m.quiver, i) for i in m.quiver.vertices)
    return cover_dim == m.total_dim


@lru_cache(maxsize=CACHE_SIZE)
def is_injective(m: Representation) -> bool:
    s = socle(m)
    env_dim = sum(s.spaces[i - 1].dim * _injective_dim(m.quiver, i) for i in m.quiver.vertices)
    return env_dim == m.total_dim


# ------------------------------------------------------------- splittings


def split_mono(f: Morphism) -> Optional[Morphism]:
    """A retraction ``r`` with ``r @ f == id``, or None."""
    hom = hom_space(f.target, f.source)
    return solve_in_hom(hom, lambda r: (r @ f).vector(), f.source.identity().vector())


def split_epi(f: Morphism) -> Optional[Morphism]:
    """A section ``s`` with ``f @ s == id``, or None."""
    hom = hom_space(f.target, f.source)
    return solve_in_hom(hom, lambda s: (f @ s).vector(), f.target.identity().vector())


def ses_of_epi(f: Morphism) -> SES:
    """``[f] = 0 -> Ker f -> A -> B -> 0`` for a surjective ``f``."""
    return SES(kernel_inclusion(f), f).check()


def ses_of_mono(f: Morphism) -> SES:
    return SES(f, cokernel(f)[1]).check()


def isomorphic(a: Representation, b: Representation, tries: int = 8, seed: int = 0) -> bool:
    """Randomized isomorphism test (a generic element of Hom(a, b) is invertible iff a ≅ b)."""
    if a.dims != b.dims:
        return False
    hom = hom_space(a, b)
    if hom.dim == 0:
        return a.total_dim == 0
    rng = np.random.default_rng(seed)
    for _ in range(tries):
        f = hom.element(rng.integers(0, a.p, size=hom.dim))
        if f.is_injective():
            return True
    return False
