"""Integer gradings on algebras with a homogeneous basis."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algcore import AlgebraRep, radical, radical_series
from .errors import GradAlgError, InvalidGrading, MissingIdempotents


@dataclass(frozen=True)
class Grading:
    degrees: tuple

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))

    def __len__(self):
        return len(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    @classmethod
    def trivial(cls, a: AlgebraRep) -> "Grading":
        return cls((0,) * a.dim)


def grading_from_paths(a: AlgebraRep, arrow_degrees: dict) -> Grading:
    """Degree of a path = sum of its arrow degrees (trivial paths in degree 0)."""
    if a.paths is None:
        raise InvalidGrading("algebra was not built from a presentation")
    return Grading(0 if isinstance(p, str) else sum(arrow_degrees[x] for x in p) for p in a.paths)


def validate_grading(a: AlgebraRep, g: Grading) -> list:
    report = []
    if len(g) != a.dim:
        return [f"grading has {len(g)} entries for an algebra of dimension {a.dim}"]
    deg = np.array(g.degrees)
    for i, j, k in zip(*np.nonzero(a.structure != 0)):
        if deg[k] != deg[i] + deg[j]:
            report.append(f"b{i}*b{j} has a component on b{k}: degree {deg[k]} != {deg[i]} + {deg[j]}")
    for k in np.flatnonzero(np.asarray(a.unit) != 0):
        if deg[k] != 0:
            report.append(f"unit has a component on b{k} of degree {deg[k]}")
    return report


def _require_valid(a, g):
    problems = validate_grading(a, g)
    if problems:
        raise InvalidGrading("; ".join(problems[:3]) + (" ..." if len(problems) > 3 else ""))


def degree_profile(a: AlgebraRep, g: Grading):
    """({degree: dim}, n_A) with n_A = max occupied degree - min occupied degree."""
    _require_valid(a, g)
    prof = {}
    for d in g.degrees:
        prof[d] = prof.get(d, 0) + 1
    prof = dict(sorted(prof.items()))
    return prof, max(prof) - min(prof)


def graded_dims(a: AlgebraRep, g: Grading) -> tuple:
    """Dimensions of A_min, ..., A_max (zeros included)."""
    prof, _ = degree_profile(a, g)
    lo, hi = min(prof), max(prof)
    return tuple(prof.get(d, 0) for d in range(lo, hi + 1))


def _subalgebra_on(a: AlgebraRep, keep: list, labels=None) -> AlgebraRep:
    F = a.field
    keep = list(keep)
    C = a.structure[np.ix_(keep, keep, keep)]
    outside = [k for k in range(a.dim) if k not in set(keep)]

    def restrict(v):
        if np.any(np.asarray(v)[outside] != 0):
            return None
        return np.array(v[keep], dtype=F.dtype)

    unit = restrict(a.unit)
    if unit is None:
        raise InvalidGrading("unit is not in the chosen subspace")
    idem = None
    if a.idempotents is not None:
        idem = {}
        for lbl, e in a.idempotents.items():
            r = restrict(e)
            if r is None:
                raise InvalidGrading(f"idempotent {lbl} is not in degree 0")
            idem[lbl] = r
    paths = None if a.paths is None else tuple(a.paths[i] for i in keep)
    hint = None
    if paths is None:
        try:
            J = radical(a)
            S = F.eye(a.dim)[:, keep]
            inter = F.intersect(S, J)
            hint = np.ascontiguousarray(inter[keep])
        except GradAlgError:
            hint = None
    return AlgebraRep(F, np.ascontiguousarray(C), unit,
                      labels or tuple(a.labels[i] for i in keep), idem, paths, hint)


def degree_zero_part(a: AlgebraRep, g: Grading) -> AlgebraRep:
    _require_valid(a, g)
    keep = [i for i, d in enumerate(g.degrees) if d == 0]
    return _subalgebra_on(a, keep)


def associated_graded(a: AlgebraRep):
    """(gr A, grading) for the radical filtration, layer i in degree i."""
    F = a.field
    series = radical_series(a)
    blocks = []
    # layer 0: idempotents (or the unit) first, so gr A keeps them as basis vectors
    if a.idempotents is not None:
        seed = np.stack(list(a.idempotents.values()), axis=1)
    else:
        seed = a.unit.reshape(-1, 1)
    J = series[1]
    base0 = np.concatenate([J, seed, series[0]], axis=1)
    picks = F.extend(J, base0[:, J.shape[1]:])
    blocks.append(base0[:, [J.shape[1] + c for c in picks]])
    for i in range(1, len(series) - 1):
        upper, lower = series[i], series[i + 1]
        picks = F.extend(lower, upper)
        blocks.append(upper[:, picks])
    P = np.concatenate(blocks, axis=1)
    layer = []
    for i, b in enumerate(blocks):
        layer.extend([i] * b.shape[1])
    n = a.dim
    Pinv = F.solve(P, F.eye(n))
    # C'[x,y,z] = sum P[i,x] P[j,y] C[i,j,k] Pinv[z,k]
    T = F.reduce(np.tensordot(P, a.structure, axes=(0, 0)))  # x, j, k
    T = F.reduce(np.tensordot(T, P, axes=(1, 0)))  # x, k, y
    T = F.reduce(np.tensordot(T, Pinv, axes=(1, 1)))  # x, y, z
    L = np.array(layer)
    mask = L[None, None, :] == (L[:, None, None] + L[None, :, None])
    C = np.where(mask, T, 0)
    if F.p == 0:
        C = C.astype(object)
    else:
        C = C.astype(np.int64)
    unit = F.reduce(F.matmul(Pinv, a.unit))
    idem = None
    if a.idempotents is not None:
        idem = {k: F.reduce(F.matmul(Pinv, e)) for k, e in a.idempotents.items()}
    hint = F.eye(n)[:, [i for i in range(n) if layer[i] >= 1]]
    labels = tuple(f"g{layer[i]}_{i}" for i in range(n))
    gr = AlgebraRep(F, C, unit, labels, idem, None, hint)
    return gr, Grading(layer)


def peirce_position(a: AlgebraRep, i: int):
    """(V, W) with b_i in e_V A e_W, or None if b_i is not Peirce-homogeneous."""
    b = a.basis_vector(i)
    for v, ev in a.idempotents.items():
        left = a.mul(ev, b)
        if not np.any(left != 0):
            continue
        if np.any(left != b):
            return None
        for w, ew in a.idempotents.items():
            right = a.mul(b, ew)
            if np.any(right != 0):
                return (v, w) if not np.any(right != b) else None
    return None


def regrade_by_shifts(a: AlgebraRep, g: Grading, d: dict) -> Grading:
    """New degree on e_V A e_W is old + d(W) - d(V); validity is re-checked."""
    if a.idempotents is None:
        raise MissingIdempotents("regrading needs vertex idempotents")
    _require_valid(a, g)
    missing = [v for v in a.idempotents if v not in d]
    if missing:
        raise InvalidGrading(f"shift vector misses simples {missing}")
    new = []
    for i in range(a.dim):
        pos = peirce_position(a, i)
        if pos is None:
            raise InvalidGrading(f"basis element {a.labels[i]} is not in a single e_V A e_W")
        v, w = pos
        new.append(g[i] + d[w] - d[v])
    out = Grading(new)
    problems = validate_grading(a, out)
    if problems:
        raise AssertionError("regrading produced an invalid grading: " + problems[0])
    return out


__all__ = [
    "Grading", "grading_from_paths", "validate_grading", "degree_profile", "graded_dims",
    "degree_zero_part", "associated_graded", "peirce_position", "regrade_by_shifts",
]
