"""Derivations and inner derivations: the Lie-algebra stand-in for Out^0(A).

Dimensions computed here are an infinitesimal proxy: over F_p the derivation
space can be larger than the Lie algebra of the reduced automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algcore import AlgebraRep, center
from .exactla import sparse_echelon


@dataclass
class DerivationSpace:
    field: object
    basis: list  # dim x dim matrices D (D @ x = D(x))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def stacked(self):
        """Each matrix flattened into a column."""
        n = self.basis[0].shape[0] if self.basis else 0
        if not self.basis:
            return self.field.zeros((n * n, 0))
        return np.stack([D.reshape(-1) for D in self.basis], axis=1)


def leibniz_defects(a: AlgebraRep, D) -> list:
    """Basis pairs (i, j) where D(b_i b_j) != D(b_i) b_j + b_i D(b_j)."""
    F = a.field
    n = a.dim
    bad = []
    for i in range(n):
        for j in range(n):
            lhs = F.matmul(D, a.structure[i, j])
            rhs = F.reduce(a.mul(D[:, i], a.basis_vector(j)) + a.mul(a.basis_vector(i), D[:, j]))
            if np.any(lhs != rhs):
                bad.append((i, j))
    return bad


def derivations(a: AlgebraRep) -> DerivationSpace:
    """Nullspace of the Leibniz system in the n^2 unknowns D[k, m] (D(b_m) = sum_k D[k,m] b_k)."""
    F = a.field
    n = a.dim
    sp = a.sparse
    rows = []
    for i in range(n):
        for j in range(n):
            # for each output coordinate r:
            #   sum_k c_ijk D[r,k] - sum_m D[m,i] c_mjr - sum_m D[m,j] c_imr = 0
            eqs = {}
            for k, c in sp[i][j]:
                for r in range(n):
                    key = (r, r * n + k)
                    eqs[key] = eqs.get(key, 0) + c
            for m in range(n):
                for r, c in sp[m][j]:
                    key = (r, m * n + i)
                    eqs[key] = eqs.get(key, 0) - c
                for r, c in sp[i][m]:
                    key = (r, m * n + j)
                    eqs[key] = eqs.get(key, 0) - c
            by_row = {}
            for (r, col), c in eqs.items():
                c = F.reduce(c) if F.p else c
                if c != 0:
                    by_row.setdefault(r, {})[col] = c
            rows.extend(by_row.values())
    piv = sparse_echelon(F, rows)
    basis = []
    for f in range(n * n):
        if f in piv:
            continue
        v = F.zeros(n * n)
        v[f] = 1
        for c, row in piv.items():
            if f in row:
                v[c] = F.reduce(-row[f])
        basis.append(v.reshape(n, n))
    return DerivationSpace(F, basis)


def inner_derivations(a: AlgebraRep) -> DerivationSpace:
    """Span of ad(b_i): x -> b_i x - x b_i."""
    F = a.field
    n = a.dim
    ads = [F.reduce(a.left_matrix(a.basis_vector(i)) - a.right_matrix(a.basis_vector(i)))
           for i in range(n)]
    stacked = np.stack([D.reshape(-1) for D in ads], axis=1)
    span = F.colspace(stacked)
    return DerivationSpace(F, [span[:, k].reshape(n, n) for k in range(span.shape[1])])


def out_lie_dim(a: AlgebraRep) -> int:
    return derivations(a).dim - inner_derivations(a).dim


@dataclass
class DerivationReport:
    field: str
    derivations: int
    inner: int
    center: int

    @property
    def outer(self) -> int:
        return self.derivations - self.inner

    def to_json(self):
        return {"field": self.field, "derivations": self.derivations, "inner": self.inner,
                "center": self.center, "outer": self.outer, "label": "infinitesimal proxy"}

    def __str__(self):
        return (f"infinitesimal proxy over {self.field}: dim Der = {self.derivations}, "
                f"dim Inn = {self.inner}, dim Der/Inn = {self.outer}")


def derivation_report(a: AlgebraRep) -> DerivationReport:
    return DerivationReport(str(a.field), derivations(a).dim, inner_derivations(a).dim,
                            center(a).shape[1])


def grading_derivation(a: AlgebraRep, g) -> np.ndarray:
    """D(b_i) = deg(b_i) b_i."""
    F = a.field
    D = F.zeros((a.dim, a.dim))
    for i, d in enumerate(g.degrees):
        D[i, i] = F(d)
    return D


def contains(space: DerivationSpace, D) -> bool:
    F = space.field
    S = space.stacked()
    return F.in_span(S, D.reshape(-1))


__all__ = [
    "DerivationSpace", "derivations", "inner_derivations", "out_lie_dim", "leibniz_defects",
    "derivation_report", "DerivationReport", "grading_derivation", "contains",
]
