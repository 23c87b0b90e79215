"""Finite-dimensional algebras from quiver presentations or structure constants.

Conventions (left modules throughout): a path ``("a", "b")`` traverses
``a`` then ``b`` and needs ``target(a) == source(b)``; as an algebra
element it is the product ``b * a``.  So ``e_w * p * e_v == p`` for a path
from ``v`` to ``w``, and ``P_V = A e_V`` is spanned by paths starting at V.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import re
from typing import Optional

import numpy as np

from .errors import (
    InvalidAlgebra,
    InvalidRelation,
    NotAdmissible,
    NotFiniteDimensional,
    NotSplit,
    RadicalMethodUnavailable,
)
from .exactla import Field, sparse_echelon


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str
    degree: int = 1


@dataclass(frozen=True)
class QuiverPresentation:
    field: Field
    vertices: tuple
    arrows: tuple  # of Arrow
    relations: tuple  # of tuple[(coefficient, tuple[arrow names])]
    path_length_bound: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        arrows = tuple(a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        rels = tuple(tuple((c, tuple(p)) for c, p in r) for r in self.relations)
        object.__setattr__(self, "relations", rels)

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)


@dataclass(frozen=True, eq=False)
class AlgebraRep:
    """Structure constants ``structure[i, j, k]``: b_i * b_j = sum_k c_ijk b_k.

    ``paths`` is set for algebras built from a presentation (one entry per
    basis element: a vertex label for trivial paths, else a tuple of arrow
    names).  ``radical_hint`` is an optional basis (columns) of the radical
    supplied by a constructor; it is verified before use.
    """

    field: Field
    structure: np.ndarray
    unit: np.ndarray
    labels: tuple
    idempotents: Optional[dict] = None
    paths: Optional[tuple] = None
    radical_hint: Optional[np.ndarray] = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.dim == 0:
            raise InvalidAlgebra("the zero algebra is not allowed")
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def dim(self) -> int:
        return self.structure.shape[0]

    @property
    def simples(self) -> list:
        if self.idempotents is None:
            return []
        return list(self.idempotents)

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[i] = 1
        return v

    @property
    def sparse(self):
        """sparse[i][j] = list of (k, c) with c != 0."""
        if "sparse" not in self._cache:
            n = self.dim
            sp = [[[] for _ in range(n)] for _ in range(n)]
            for i, j, k in zip(*np.nonzero(self.structure != 0)):
                sp[i][j].append((int(k), self.structure[i, j, k]))
            self._cache["sparse"] = sp
        return self._cache["sparse"]

    def mul(self, u, v) -> np.ndarray:
        F = self.field
        out = F.zeros(self.dim)
        sp = self.sparse
        iu = np.flatnonzero(np.asarray(u) != 0)
        iv = np.flatnonzero(np.asarray(v) != 0)
        for i in iu:
            ui = u[i]
            row = sp[i]
            for j in iv:
                c = ui * v[j]
                for k, s in row[j]:
                    out[k] += c * s
        return F.reduce(out)

    def left_matrix(self, u) -> np.ndarray:
        """Matrix M with M @ x = u * x."""
        return self.field.reduce(np.tensordot(u, self.structure, axes=(0, 0)).T)

    def right_matrix(self, u) -> np.ndarray:
        """Matrix M with M @ x = x * u."""
        return self.field.reduce(np.tensordot(u, self.structure, axes=(0, 1)).T)

    def products(self, U, W) -> np.ndarray:
        """All products u * w (u a column of U, w a column of W) as columns."""
        F = self.field
        if U.shape[1] == 0 or W.shape[1] == 0:
            return F.zeros((self.dim, 0))
        T = F.reduce(np.tensordot(U, self.structure, axes=(0, 0)))  # (r, j, k)
        P = F.reduce(np.tensordot(T, W, axes=(1, 0)))  # (r, k, s)
        return np.ascontiguousarray(P.transpose(1, 0, 2).reshape(self.dim, -1))

    def idempotent(self, label) -> np.ndarray:
        return self.idempotents[label]

    def with_changes(self, **kw) -> "AlgebraRep":
        data = dict(field=self.field, structure=self.structure, unit=self.unit,
                    labels=self.labels, idempotents=self.idempotents, paths=self.paths,
                    radical_hint=self.radical_hint)
        data.update(kw)
        return AlgebraRep(**data)


def algebra_from_table(F: Field, table, unit, labels=None, idempotents=None, radical_hint=None):
    structure = F.array(table)
    n = structure.shape[0]
    if structure.shape != (n, n, n):
        raise InvalidAlgebra(f"structure table has shape {structure.shape}")
    idem = None
    if idempotents is not None:
        idem = {k: F.array(v) for k, v in idempotents.items()}
    return AlgebraRep(F, structure, F.array(unit), tuple(labels or [f"b{i}" for i in range(n)]),
                      idem, None, radical_hint)


# presentations ---------------------------------------------------------------


def natural_key(label):
    """Sort key ordering '2' before '10' and 'v2' before 'v10'."""
    parts = re.split(r"(\d+)", str(label))
    return tuple((0, int(x)) if x.isdigit() else (1, x) for x in parts)


def sorted_labels(labels):
    return sorted(labels, key=natural_key)


def _path_label(path):
    return path if isinstance(path, str) else "*".join(path)


def _check_presentation(p: QuiverPresentation):
    verts = set(p.vertices)
    if len(verts) != len(p.vertices):
        raise InvalidRelation("duplicate vertex labels")
    names = set()
    for a in p.arrows:
        if a.source not in verts or a.target not in verts:
            raise InvalidRelation(f"arrow {a.name!r} references an unknown vertex")
        if a.name in names or a.name in verts:
            raise InvalidRelation(f"duplicate name {a.name!r}")
        names.add(a.name)
    if p.path_length_bound < 1:
        raise InvalidRelation("path_length_bound must be positive")
    arrows = {a.name: a for a in p.arrows}
    for r in p.relations:
        for _, path in r:
            if not path:
                raise NotAdmissible("relation contains a trivial path")
            for nm in path:
                if nm not in arrows:
                    raise InvalidRelation(f"relation uses unknown arrow {nm!r}")
            for x, y in zip(path, path[1:]):
                if arrows[x].target != arrows[y].source:
                    raise InvalidRelation(f"path {'*'.join(path)} is not composable at {x},{y}")
            if len(path) < 2:
                raise NotAdmissible(f"relation term {'*'.join(path)} has length < 2")


def enumerate_paths(p: QuiverPresentation, max_len: int):
    """Trivial paths (vertex labels) followed by arrow paths by length."""
    out = list(p.vertices)
    layer = [(a.name,) for a in p.arrows]
    arrows = {a.name: a for a in p.arrows}
    for _ in range(max_len):
        if not layer:
            break
        out.extend(layer)
        nxt = []
        for path in layer:
            end = arrows[path[-1]].target
            for a in p.arrows:
                if a.source == end:
                    nxt.append(path + (a.name,))
        layer = nxt
    return out


def _endpoints(p, path, arrows):
    if isinstance(path, str):
        return path, path
    return arrows[path[0]].source, arrows[path[-1]].target


def _concat(p, first, second, arrows):
    """Path 'first then second', or None if not composable."""
    s1, t1 = _endpoints(p, first, arrows)
    s2, t2 = _endpoints(p, second, arrows)
    if t1 != s2:
        return None
    if isinstance(first, str):
        return second
    if isinstance(second, str):
        return first
    return first + second


def _plen(path):
    return 0 if isinstance(path, str) else len(path)


def build_from_presentation(p: QuiverPresentation) -> AlgebraRep:
    _check_presentation(p)
    F = p.field
    N = p.path_length_bound
    arrows = {a.name: a for a in p.arrows}
    paths = enumerate_paths(p, N)
    index = {pt: i for i, pt in enumerate(paths)}

    # ideal generators u*r*v in the truncation kQ / kQ_{>N}
    gens = []
    for r in p.relations:
        rmin = min(len(pt) for _, pt in r)
        short = [pt for pt in paths if _plen(pt) <= N - rmin]
        for v in short:
            for u in short:
                if _plen(u) + _plen(v) + rmin > N:
                    continue
                row = {}
                for c, pt in r:
                    q = _concat(p, v, pt, arrows)
                    q = None if q is None else _concat(p, q, u, arrows)
                    if q is None or _plen(q) > N:
                        continue
                    k = index[q]
                    row[k] = F.reduce(row.get(k, 0) + F(c))
                row = {k: x for k, x in row.items() if x != 0}
                if row:
                    gens.append(row)
    # pivots land on the largest index, i.e. the longest paths
    piv = sparse_echelon(F, gens)
    for pt in paths:
        if _plen(pt) == N and index[pt] not in piv:
            raise NotFiniteDimensional(
                f"path {_path_label(pt)} of length {N} does not vanish modulo the relations")
    basis = [pt for pt in paths if index[pt] not in piv and _plen(pt) < N]
    bidx = {pt: i for i, pt in enumerate(basis)}
    n = len(basis)

    def normal_form(pt):
        vec = {}
        if pt is None or _plen(pt) >= N:
            return vec
        k = index[pt]
        if k in piv:
            for j, c in piv[k].items():
                if j != k:
                    vec[bidx[paths[j]]] = F.reduce(-c)
        else:
            vec[bidx[pt]] = 1
        return vec

    C = F.zeros((n, n, n))
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            # x * y = "y then x"
            for k, c in normal_form(_concat(p, y, x, arrows)).items():
                C[i, j, k] = c
    unit = F.zeros(n)
    idem = {}
    for v in p.vertices:
        unit[bidx[v]] = 1
        e = F.zeros(n)
        e[bidx[v]] = 1
        idem[v] = e
    return AlgebraRep(F, C, unit, tuple(_path_label(b) for b in basis), idem, tuple(basis))


# validation --------------------------------------------------------------------


def validate_algebra(a: AlgebraRep) -> list:
    """List of violated identities (empty when a is a unital associative algebra)."""
    F = a.field
    n = a.dim
    report = []
    sp = a.sparse

    def prod_vec(terms_left, right_index=None, left_index=None):
        out = {}
        for m, c in terms_left:
            row = sp[m][right_index] if right_index is not None else sp[left_index][m]
            for k, s in row:
                out[k] = F.reduce(out.get(k, 0) + c * s)
        return {k: v for k, v in out.items() if v != 0}

    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = prod_vec(sp[i][j], right_index=k)
                rhs = prod_vec(sp[j][k], left_index=i)
                if lhs != rhs:
                    report.append(f"associativity fails on basis triple ({i},{j},{k})")
    u = a.unit
    for i in range(n):
        b = a.basis_vector(i)
        if np.any(a.mul(u, b) != b):
            report.append(f"unit is not a left identity on basis element {i}")
        if np.any(a.mul(b, u) != b):
            report.append(f"unit is not a right identity on basis element {i}")
    if a.idempotents is not None:
        labels = list(a.idempotents)
        total = F.zeros(n)
        for x in labels:
            ex = a.idempotents[x]
            total = F.reduce(total + ex)
            for y in labels:
                prod = a.mul(ex, a.idempotents[y])
                want = ex if x == y else F.zeros(n)
                if np.any(prod != want):
                    report.append(f"idempotent relation fails for ({x},{y})")
        if np.any(total != u):
            report.append("idempotents do not sum to the unit")
    return report


# radical -----------------------------------------------------------------------


def _is_ideal(a: AlgebraRep, I) -> bool:
    F = a.field
    if I.shape[1] == 0:
        return True
    eye = F.eye(a.dim)
    return (F.rank(np.concatenate([I, a.products(eye, I), a.products(I, eye)], axis=1))
            == I.shape[1])


def _is_nilpotent_ideal(a: AlgebraRep, I) -> bool:
    F = a.field
    P = I
    for _ in range(a.dim + 1):
        if P.shape[1] == 0:
            return True
        P = F.colspace(a.products(P, I))
    return P.shape[1] == 0


def _certify_radical(a: AlgebraRep, I) -> bool:
    """I is a nilpotent ideal with split semisimple quotient k^r."""
    F = a.field
    if not (_is_ideal(a, I) and _is_nilpotent_ideal(a, I)):
        return False
    codim = a.dim - I.shape[1]
    if a.idempotents is not None:
        E = np.stack(list(a.idempotents.values()), axis=1)
        r = E.shape[1]
        return codim == r and F.rank(np.concatenate([I, E], axis=1)) == I.shape[1] + r
    # a nilpotent ideal with one-dimensional quotient is the radical
    return codim == 1


def _is_nilpotent_matrix(F, M) -> bool:
    n = M.shape[0]
    P = M
    k = 1
    while k < n:
        P = F.matmul(P, P)
        k *= 2
        if F.is_zero(P):
            return True
    return F.is_zero(P)


def _radical_from_idempotents(a: AlgebraRep):
    """J = (+)_{V != W} e_W A e_V  (+)  (+)_V rad(e_V A e_V) for split basic a."""
    F = a.field
    eye = F.eye(a.dim)
    cols = []
    for v, ev in a.idempotents.items():
        Rv = a.right_matrix(ev)
        for w, ew in a.idempotents.items():
            Lw = a.left_matrix(ew)
            piece = F.colspace(F.matmul(Lw, Rv))
            if v != w:
                cols.append(piece)
                continue
            # local ring e A e: subtract the residue value of each basis vector
            eAe_dim = F.rank(a.left_matrix(ev))  # dim e_V A
            for x in piece.T:
                Lx = a.left_matrix(x)
                Le = a.left_matrix(ev)
                if F.p == 0 or eAe_dim % F.p:
                    # the residue value is the normalised trace of left multiplication
                    guesses = [F.reduce(F(np.trace(Lx)) * F.inv(F(eAe_dim)))]
                else:
                    guesses = list(F.elements())
                lam = next((c for c in guesses
                            if _is_nilpotent_matrix(F, F.reduce(Lx - c * Le))), None)
                if lam is None:
                    raise NotSplit(f"e_{v} A e_{v} is not local with residue field {F}")
                cols.append(F.reduce(x - lam * ev).reshape(-1, 1))
    if not cols:
        return F.zeros((a.dim, 0))
    return F.colspace(np.concatenate(cols, axis=1))


def _radical_trace_form(a: AlgebraRep):
    F = a.field
    tr = np.array([F.reduce(np.trace(a.structure[k])) for k in range(a.dim)], dtype=F.dtype)
    gram = F.reduce(np.tensordot(a.structure, tr, axes=(2, 0)))
    return F.colspace(F.nullspace(gram))


def radical(a: AlgebraRep) -> np.ndarray:
    """Basis (columns) of the Jacobson radical."""
    if "radical" in a._cache:
        return a._cache["radical"]
    F = a.field
    J = None
    if a.radical_hint is not None and _certify_radical(a, a.radical_hint):
        J = F.colspace(a.radical_hint)
    elif a.paths is not None:
        cols = [i for i, pt in enumerate(a.paths) if not isinstance(pt, str)]
        J = F.eye(a.dim)[:, cols]
    elif F.p == 0 or F.p > a.dim:
        J = _radical_trace_form(a)
    elif a.idempotents is not None:
        J = _radical_from_idempotents(a)
        if not _certify_radical(a, J):
            raise NotSplit("idempotent decomposition does not give a split basic algebra")
    else:
        raise RadicalMethodUnavailable(
            f"characteristic {F.p} <= dim {a.dim}, no presentation, idempotents or radical hint")
    a._cache["radical"] = J
    return J


def radical_series(a: AlgebraRep) -> list:
    """[J^0 = A, J^1, ..., 0] as column bases."""
    if "radical_series" in a._cache:
        return a._cache["radical_series"]
    F = a.field
    J = radical(a)
    series = [F.eye(a.dim)]
    P = J
    while True:
        series.append(P)
        if P.shape[1] == 0:
            break
        nxt = F.colspace(a.products(P, J))
        if nxt.shape[1] >= P.shape[1]:
            raise InvalidAlgebra("radical is not nilpotent")
        P = nxt
    a._cache["radical_series"] = series
    return series


def _left_annihilator(a: AlgebraRep, S):
    """{x : s x = 0 for all columns s of S}."""
    F = a.field
    if S.shape[1] == 0:
        return F.eye(a.dim)
    stacked = np.concatenate([a.left_matrix(s) for s in S.T], axis=0)
    return F.nullspace(stacked)


def socle_series(a: AlgebraRep) -> list:
    """soc^i = {x : J^i x = 0}, i = 0, 1, ... up to the whole algebra."""
    series = radical_series(a)
    out = []
    for P in series:
        out.append(_left_annihilator(a, P))
    # series ends with J^L = 0, whose annihilator is A
    return out


def center(a: AlgebraRep) -> np.ndarray:
    F = a.field
    C = a.structure
    # (z b_i - b_i z)_k = sum_j z_j (C[j,i,k] - C[i,j,k])
    blocks = [F.reduce(C[:, i, :].T - C[i, :, :].T) for i in range(a.dim)]
    return F.nullspace(np.concatenate(blocks, axis=0))


def dims(series) -> tuple:
    return tuple(int(s.shape[1]) for s in series)


def peirce_component(a: AlgebraRep, left, right):
    """Basis of e_left A e_right."""
    F = a.field
    M = F.matmul(a.left_matrix(a.idempotents[left]), a.right_matrix(a.idempotents[right]))
    return F.colspace(M)


def require_split_basic(a: AlgebraRep):
    """Raise NotSplit unless each e_V A e_V / e_V J e_V is one-dimensional."""
    from .errors import MissingIdempotents

    if a.idempotents is None:
        raise MissingIdempotents("algebra has no idempotent data")
    if "split" in a._cache:
        return
    F = a.field
    J = radical(a)
    for v, ev in a.idempotents.items():
        M = F.matmul(a.left_matrix(ev), a.right_matrix(ev))
        full = F.rank(M)
        rad = F.rank(F.matmul(M, J)) if J.shape[1] else 0
        if full - rad != 1:
            raise NotSplit(f"e_{v} A e_{v} / e_{v} J e_{v} has dimension {full - rad}, expected 1")
    a._cache["split"] = True


def random_presentation(rng, F: Field, max_vertices=5, max_arrows=8, truncate=3, degrees=(0, 0)):
    """Random quiver with all paths of length `truncate` set to zero."""
    nv = rng.randint(1, max_vertices)
    na = rng.randint(0, max_arrows)
    verts = [f"v{i}" for i in range(nv)]
    arrows = [Arrow(f"a{i}", rng.choice(verts), rng.choice(verts), rng.randint(*degrees))
              for i in range(na)]
    base = QuiverPresentation(F, verts, arrows, (), truncate)
    rels = tuple(((1, pt),) for pt in enumerate_paths(base, truncate)
                 if not isinstance(pt, str) and len(pt) == truncate)
    return QuiverPresentation(F, verts, arrows, rels, truncate)


__all__ = [
    "Arrow", "QuiverPresentation", "AlgebraRep", "algebra_from_table", "build_from_presentation",
    "validate_algebra", "radical", "radical_series", "socle_series", "center", "dims",
    "peirce_component", "require_split_basic", "natural_key", "sorted_labels", "enumerate_paths", "random_presentation",
]
