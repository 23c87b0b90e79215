"""Standard graded algebras: trivial extensions, exterior skew group algebras,
and graded group algebras of abelian p-groups (optionally with a p'-group E).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

import numpy as np

from .algcore import AlgebraRep, radical, validate_algebra
from .errors import (
    ActionNotHomocyclic,
    CharMismatch,
    DegreesOutOfRange,
    DimensionMismatch,
    FormShiftMismatch,
    GradAlgError,
    GroupTooLarge,
    InvalidAlgebra,
    NotTrivialExtension,
    OrderNotCoprime,
    OrderNotInvertible,
)
from .exactla import Field
from .grading import Grading, associated_graded, degree_zero_part, graded_dims, validate_grading
from .homo import NakayamaData, is_symmetrizing
from .laurent import perm_sign

GROUP_ORDER_CAP = 64


# trivial extensions --------------------------------------------------------------


def trivial_extension(b: AlgebraRep, gb: Grading = None):
    """T(B) = B (+) B* with B* a square-zero bimodule: (a f b)(x) = f(b x a).

    Returns (algebra, grading, form) where the form is t(a, f) = f(1).
    """
    problems = validate_algebra(b)
    if problems:
        raise InvalidAlgebra("input algebra is invalid: " + problems[0])
    F = b.field
    n = b.dim
    c = b.structure
    C = F.zeros((2 * n, 2 * n, 2 * n))
    C[:n, :n, :n] = c
    # b_i b_j* = sum_m c[m, i, j] b_m*   and   b_j* b_i = sum_m c[i, m, j] b_m*
    C[:n, n:, n:] = c.transpose(1, 2, 0)
    C[n:, :n, n:] = c.transpose(2, 0, 1)
    unit = np.concatenate([b.unit, F.zeros(n)])
    idem = None
    if b.idempotents is not None:
        idem = {k: np.concatenate([e, F.zeros(n)]) for k, e in b.idempotents.items()}
    hint = None
    try:
        JB = radical(b)
        hint = np.concatenate([
            np.concatenate([JB, F.zeros((n, n))], axis=1),
            np.concatenate([F.zeros((n, JB.shape[1])), F.eye(n)], axis=1)], axis=0)
    except GradAlgError:
        hint = None
    labels = tuple(b.labels) + tuple(f"{x}*" for x in b.labels)
    a = AlgebraRep(F, C, unit, labels, idem, None, hint)
    problems = validate_algebra(a)
    if problems:
        raise InvalidAlgebra("trivial extension failed to be associative: " + problems[0])
    base = gb.degrees if gb is not None else (0,) * n
    g = Grading(tuple(base) + tuple(1 - d for d in base))
    problems = validate_grading(a, g)
    if problems:
        raise InvalidAlgebra("trivial extension grading invalid: " + problems[0])
    t = np.concatenate([F.zeros(n), b.unit])
    if not is_symmetrizing(a, t):
        raise AssertionError("canonical form on T(B) is not symmetrizing")
    return a, g, t


@dataclass
class TrivialExtensionIso:
    phi: np.ndarray  # columns: images of the basis of A in T(A_0) coordinates
    base: AlgebraRep  # A_0
    target: AlgebraRep  # T(A_0)


def recognize_trivial_extension(a: AlgebraRep, g: Grading, t) -> TrivialExtensionIso:
    """Build phi = (id on A_0, y -> t(- y) on A_1) : A -> T(A_0) and verify it."""
    F = a.field
    problems = validate_grading(a, g)
    if problems:
        raise DegreesOutOfRange("grading is invalid: " + problems[0])
    bad = sorted(set(g.degrees) - {0, 1})
    if bad:
        raise DegreesOutOfRange(f"degrees {bad} occupied; only 0 and 1 allowed")
    t = F.array(t)
    deg0 = [i for i, d in enumerate(g.degrees) if d == 0]
    deg1 = [i for i, d in enumerate(g.degrees) if d == 1]
    if np.any(t[deg0] != 0):
        raise FormShiftMismatch("form does not vanish on the degree-0 part")
    if not is_symmetrizing(a, t):
        raise FormShiftMismatch("form is not symmetrizing")
    a0 = degree_zero_part(a, g)
    target, _, _ = trivial_extension(a0)
    m = len(deg0)
    if len(deg1) != m:
        raise NotTrivialExtension(f"dim A_1 = {len(deg1)} differs from dim A_0 = {m}")
    phi = F.zeros((2 * m, a.dim))
    for k, i in enumerate(deg0):
        phi[k, i] = 1
    for y in deg1:
        for k, x in enumerate(deg0):
            # coefficient of x_k* in the image of y is t(x_k y)
            phi[m + k, y] = F.reduce(np.dot(a.structure[x, y], t))
    if F.rank(phi) != a.dim:
        raise NotTrivialExtension("phi is not invertible")
    # phi(b_i b_j) = phi(b_i) phi(b_j) for all basis pairs
    lhs = F.reduce(np.tensordot(a.structure, phi, axes=(2, 1)))  # i, j, r
    T = F.reduce(np.tensordot(phi, target.structure, axes=(0, 0)))  # i, s, r
    rhs = F.reduce(np.tensordot(T, phi, axes=(1, 0)))  # i, r, j
    rhs = rhs.transpose(0, 2, 1)
    if np.any(lhs != rhs) or np.any(F.matmul(phi, a.unit) != target.unit):
        raise NotTrivialExtension("phi is not multiplicative")
    return TrivialExtensionIso(phi, a0, target)


# groups -----------------------------------------------------------------------------


def _closure(gens, mul, identity, cap=GROUP_ORDER_CAP):
    """Elements of the monoid generated by gens (finite order assumed), BFS order."""
    elems = [identity]
    seen = {identity}
    i = 0
    while i < len(elems):
        x = elems[i]
        for s in gens:
            y = mul(x, s)
            if y not in seen:
                seen.add(y)
                elems.append(y)
                if len(elems) > cap:
                    raise GroupTooLarge(f"group has more than {cap} elements")
        i += 1
    return elems


class GroupRep:
    """Finite matrix group rho(G) in GL_n over a field, enumerated from generators."""

    def __init__(self, field: Field, generators, n: int = None, cap: int = GROUP_ORDER_CAP):
        F = field
        self.field = F
        gens = [F.array(g) for g in generators]
        if n is None:
            if not gens:
                raise DimensionMismatch("dimension needed for a group without generators")
            n = gens[0].shape[0]
        for g in gens:
            if g.shape != (n, n):
                raise DimensionMismatch(f"generator of shape {g.shape}, expected {(n, n)}")
            if F.rank(g) != n:
                raise InvalidAlgebra("generator is not invertible")
        self.n = n
        ident = self._key(F.eye(n))
        keys = _closure([self._key(g) for g in gens],
                        lambda x, y: self._key(F.matmul(self._mat(x), self._mat(y))), ident, cap)
        self.elements = [self._mat(k) for k in keys]
        self.index = {k: i for i, k in enumerate(keys)}
        self.order = len(keys)
        self.generators = gens
        self.table = [[self.index[self._key(F.matmul(x, y))] for y in self.elements]
                      for x in self.elements]
        self.inverse = [row.index(0) for row in self.table]

    def _key(self, m):
        return tuple(m.reshape(-1).tolist())

    def _mat(self, key):
        return self.field.array(np.array(key, dtype=object).reshape(self.n, self.n))

    def find(self, m) -> int:
        return self.index.get(self._key(self.field.array(m)), -1)

    def is_abelian(self) -> bool:
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.order) for j in range(self.order))

    @classmethod
    def trivial(cls, field, n):
        return cls(field, [], n)

    @classmethod
    def plus_minus(cls, field, n):
        return cls(field, [-np.identity(n, dtype=int)], n)


def _det(F: Field, m) -> object:
    n = m.shape[0]
    total = 0
    for perm in permutations(range(n)):
        term = perm_sign(list(perm))
        for i in range(n):
            term = term * m[i, perm[i]]
        total += term
    return F(total)


def group_algebra(F: Field, order: int, table, labels=None):
    C = F.zeros((order, order, order))
    for i in range(order):
        for j in range(order):
            C[i, j, table[i][j]] = 1
    unit = F.zeros(order)
    unit[0] = 1
    return C, unit, tuple(labels or [f"g{i}" for i in range(order)])


def character_idempotents(F: Field, order: int, table, gens_idx):
    """{label: vector} of primitive idempotents of the group algebra of an abelian group.

    Split case (all characters take values in F): e_chi = |G|^-1 sum chi(g^-1) g,
    labelled chi0 (trivial), chi1, ...  Returns (idempotents, characters) where
    characters is a list of value tuples, or (None, None) if none can be given.
    """
    if F.p and order % F.p == 0:
        raise OrderNotInvertible(f"group order {order} divisible by {F.p}")
    values = list(range(1, F.p)) if F.p else [1, -1]
    chars = []
    for assign in product(values, repeat=len(gens_idx)):
        chi = {0: 1}
        frontier = [0]
        ok = True
        while frontier and ok:
            x = frontier.pop()
            for gi, val in zip(gens_idx, assign):
                y = table[x][gi]
                v = F(chi[x] * val)
                if y in chi:
                    if chi[y] != v:
                        ok = False
                        break
                else:
                    chi[y] = v
                    frontier.append(y)
        if ok and len(chi) == order:
            # multiplicativity on the full table
            if all(chi[table[i][j]] == F(chi[i] * chi[j]) for i in range(order) for j in range(order)):
                chars.append(tuple(chi[i] for i in range(order)))
    chars = sorted(set(chars), key=lambda c: (c != tuple([1] * order), c))
    if len(chars) != order:
        return None, None
    inv_order = F.inv(F(order))
    inverse = [row.index(0) for row in table]
    idem = {}
    for k, chi in enumerate(chars):
        e = F.zeros(order)
        for gidx in range(order):
            e[gidx] = F(inv_order * chi[inverse[gidx]])
        idem[f"chi{k}"] = F.reduce(e)
    return idem, chars


def frobenius_idempotents(F: Field, C, unit, limit=4096):
    """Primitive idempotents of a commutative semisimple algebra over F_p.

    The fixed points of x -> x^p form the subalgebra spanned by the primitive
    idempotents; enumerate its elements and keep the minimal nonzero idempotents.
    """
    p = F.p
    n = C.shape[0]

    def mul(u, v):
        return F.reduce(np.tensordot(np.tensordot(u, C, axes=(0, 0)), v, axes=(0, 0)))

    def power(u, k):
        out = unit.copy()
        for _ in range(k):
            out = mul(out, u)
        return out

    frob = np.stack([power(F.eye(n)[:, i], p) for i in range(n)], axis=1)
    B = F.nullspace(F.reduce(frob - F.eye(n)))
    r = B.shape[1]
    if p ** r > limit:
        return None
    idems = []
    for coefs in product(range(p), repeat=r):
        x = F.reduce(B @ np.array(coefs, dtype=np.int64))
        if np.any(x != 0) and not np.any(mul(x, x) != x):
            idems.append(x)
    prim = [e for e in idems
            if all(not np.any(mul(e, f) != 0) or not np.any(mul(e, f) != e) for f in idems)]
    # the trivial-module idempotent first, then by support
    prim.sort(key=lambda e: (-int(e.sum() % p == 1 and np.all(e == e[0])), tuple(e.tolist())))
    return {f"E{k}": e for k, e in enumerate(prim)}


# exterior skew group algebras ---------------------------------------------------------


def _subsets(n):
    return [S for k in range(n + 1) for S in combinations(range(n), k)]


def _wedge_sign(S, U):
    inv = sum(1 for s in S for u in U if s > u)
    return -1 if inv % 2 else 1


@dataclass
class ExteriorSkew:
    algebra: AlgebraRep
    grading: Grading
    form: np.ndarray
    nakayama: NakayamaData
    group: GroupRep
    characters: list


def _group_idempotents(F, grp: GroupRep):
    """Idempotents of kG (characters when split abelian, Frobenius method for F_p)."""
    if not grp.is_abelian():
        return None, None
    gens_idx = [grp.find(g) for g in grp.generators]
    idem, chars = character_idempotents(F, grp.order, grp.table, gens_idx)
    if idem is None and F.p:
        C, unit, _ = group_algebra(F, grp.order, grp.table)
        idem = frobenius_idempotents(F, C, unit)
    return idem, chars


def exterior_skew(n: int, grp: GroupRep) -> ExteriorSkew:
    """Lambda(V) x| G with g v g^-1 = rho(g) v, V in degree 1, G in degree 0."""
    F = grp.field
    if grp.n != n:
        raise DimensionMismatch(f"group acts on dimension {grp.n}, not {n}")
    if F.p and grp.order % F.p == 0:
        raise OrderNotInvertible(f"|G| = {grp.order} is divisible by {F.p}")
    subs = _subsets(n)
    sidx = {S: i for i, S in enumerate(subs)}
    G = grp.order
    N = len(subs) * G

    def idx(S, g):
        return sidx[S] * G + g

    # rho(g) on Lambda^k: v_T -> sum_U det(rho(g)[U, T]) v_U
    act = []
    for m in grp.elements:
        table = {}
        for T in subs:
            terms = []
            for U in combinations(range(n), len(T)):
                d = _det(F, m[np.ix_(U, T)]) if T else 1
                if d:
                    terms.append((U, d))
            table[T] = terms
        act.append(table)
    C = F.zeros((N, N, N))
    for S in subs:
        for g in range(G):
            for T in subs:
                for U, d in act[g][T]:
                    if set(S) & set(U):
                        continue
                    W = tuple(sorted(S + U))
                    coef = F(d * _wedge_sign(S, U))
                    for h in range(G):
                        C[idx(S, g), idx(T, h), idx(W, grp.table[g][h])] = coef
    unit = F.zeros(N)
    unit[idx((), 0)] = 1
    labels = []
    for S in subs:
        vs = "^".join(f"v{i + 1}" for i in S) or "1"
        for g in range(G):
            labels.append(vs if G == 1 else f"{vs}.g{g}")
    gidem, chars = _group_idempotents(F, grp)
    idem = None
    if gidem is not None:
        idem = {}
        for k, e in gidem.items():
            v = F.zeros(N)
            v[:G] = e
            idem[k] = v
    hint = F.eye(N)[:, G:]
    a = AlgebraRep(F, C, unit, tuple(labels), idem, None, hint)
    problems = validate_algebra(a)
    if problems:
        raise InvalidAlgebra("exterior skew algebra is not associative: " + problems[0])
    g = Grading(len(S) for S in subs for _ in range(G))
    problems = validate_grading(a, g)
    if problems:
        raise InvalidAlgebra(problems[0])
    t = F.zeros(N)
    t[idx(tuple(range(n)), 0)] = 1
    nak = _exterior_nakayama(F, n, grp, chars)
    return ExteriorSkew(a, g, t, nak, grp, chars)


def _exterior_nakayama(F, n, grp, chars):
    """nu(chi) = chi * det on characters; the socle sits in degree n."""
    nu = {}
    if chars is not None:
        dets = tuple(_det(F, m) for m in grp.elements)
        for k, chi in enumerate(chars):
            twisted = tuple(F(x * y) for x, y in zip(chi, dets))
            nu[f"chi{k}"] = f"chi{chars.index(twisted)}"
    return NakayamaData(nu, n, {}, n)


def exterior_symmetric_predicate(n: int, grp: GroupRep) -> bool:
    """rho(G) <= SL(V) and (-1)^(n+1) I in rho(G)."""
    F = grp.field
    if grp.n != n:
        raise DimensionMismatch(f"group acts on dimension {grp.n}, not {n}")
    if F.p and grp.order % F.p == 0:
        raise OrderNotInvertible(f"|G| = {grp.order} is divisible by {F.p}")
    in_sl = all(_det(F, m) == 1 for m in grp.generators)
    scalar = F.array((-1) ** (n + 1) * np.identity(n, dtype=int))
    return in_sl and grp.find(scalar) >= 0


# abelian p-groups ------------------------------------------------------------------------


def _exponent_label(a):
    parts = []
    for i, e in enumerate(a):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) or "1"


def _monomials(bounds):
    mons = list(product(*[range(b) for b in bounds]))
    mons.sort(key=lambda a: (sum(a), tuple(-x for x in a)))
    return mons


def truncated_polynomial_algebra(F: Field, bounds):
    """k[x_1..x_r]/(x_i^{bounds_i}), monomial basis, deg x_i = 1."""
    mons = _monomials(bounds)
    idx = {m: i for i, m in enumerate(mons)}
    n = len(mons)
    C = F.zeros((n, n, n))
    for i, a in enumerate(mons):
        for j, b in enumerate(mons):
            c = tuple(x + y for x, y in zip(a, b))
            if all(x < d for x, d in zip(c, bounds)):
                C[i, j, idx[c]] = 1
    unit = F.zeros(n)
    unit[0] = 1
    hint = F.eye(n)[:, 1:]
    a = AlgebraRep(F, C, unit, tuple(_exponent_label(m) for m in mons), {"1": unit.copy()},
                   None, hint)
    return a, Grading(sum(m) for m in mons), mons


def abelian_group_table(p: int, invariants):
    """Elements of prod Z/p^r_i as exponent tuples, with the addition table."""
    mods = [p ** r for r in invariants]
    elems = list(product(*[range(m) for m in mods]))
    idx = {e: i for i, e in enumerate(elems)}
    table = [[idx[tuple((x + y) % m for x, y, m in zip(a, b, mods))] for b in elems] for a in elems]
    return elems, table, mods


def _check_char(F: Field, p: int):
    if F.p != p:
        raise CharMismatch(f"field {F} does not have characteristic {p}")


def _monomial_vectors(F, p, invariants, elems, gens_vecs, bounds, table):
    """Group-algebra coordinates of the monomials prod v_i^{a_i} (v_i given vectors)."""
    order = len(elems)
    C, unit, _ = group_algebra(F, order, table)

    def mul(u, v):
        return F.reduce(np.tensordot(np.tensordot(u, C, axes=(0, 0)), v, axes=(0, 0)))

    mons = _monomials(bounds)
    vecs = []
    for a in mons:
        x = unit.copy()
        for v, e in zip(gens_vecs, a):
            for _ in range(e):
                x = mul(x, v)
        vecs.append(x)
    return mons, np.stack(vecs, axis=1), C, unit


def abelian_pgroup_algebra(p: int, invariants, field: Field = None):
    """Graded k[P] for P = prod Z/p^r_i, as k[x_i]/(x_i^{p^r_i}) with deg x_i = 1.

    The result is checked against the group algebra: x_i = sigma_i - 1 gives a
    monomial basis of kP with the same structure constants, and the associated
    graded algebra of kP has the same graded dimensions.
    """
    F = field or Field(p)
    _check_char(F, p)
    bounds = [p ** r for r in invariants]
    a, g, mons = truncated_polynomial_algebra(F, bounds)
    elems, table, mods = abelian_group_table(p, invariants)
    order = len(elems)
    xs = []
    for i in range(len(invariants)):
        v = F.zeros(order)
        gen = tuple(1 if k == i else 0 for k in range(len(invariants)))
        v[elems.index(gen)] = 1
        v[0] = F.reduce(v[0] - 1)
        xs.append(v)
    mons2, Mon, C, unit = _monomial_vectors(F, p, invariants, elems, xs, bounds, table)
    if F.rank(Mon) != order:
        raise AssertionError("monomials in sigma_i - 1 do not form a basis of kP")
    Minv = F.solve(Mon, F.eye(order))
    T = F.reduce(np.tensordot(Mon, C, axes=(0, 0)))
    T = F.reduce(np.tensordot(T, Mon, axes=(1, 0)))
    T = F.reduce(np.tensordot(T, Minv, axes=(1, 1)))
    if np.any(T != a.structure):
        raise AssertionError("kP does not match the truncated polynomial algebra")
    kP = AlgebraRep(F, C, unit, tuple("s" + "".join(map(str, e)) for e in elems), {"1": unit.copy()})
    gr, ggr = associated_graded(kP)
    if graded_dims(gr, ggr) != graded_dims(a, g):
        raise AssertionError("associated graded of kP has different graded dimensions")
    return a, g


def _closure_int(mats, moduli, cap=GROUP_ORDER_CAP):
    """Closure of integer matrices acting on prod Z/moduli_i (entries reduced by row modulus)."""
    n = len(moduli)

    def key(m):
        return tuple(int(m[i, j]) % moduli[i] for i in range(n) for j in range(n))

    def mat(k):
        return np.array(k, dtype=np.int64).reshape(n, n)

    ident = key(np.identity(n, dtype=np.int64))
    keys = _closure([key(m) for m in mats], lambda x, y: key(mat(x) @ mat(y)), ident, cap)
    return [mat(k) for k in keys], {k: i for i, k in enumerate(keys)}, key


def pgroup_semidirect(p: int, invariants, action, field: Field = None):
    """Graded kP x| E; E generated by integer matrices acting on P = prod Z/p^r_i.

    E sits in degree 0 and an E-stable complement V of J^2 in J in degree 1,
    V obtained by averaging a projection over E.  Returns (algebra, grading).
    """
    F = field or Field(p)
    _check_char(F, p)
    r = len(invariants)
    mats = [np.array(m, dtype=np.int64) for m in action]
    for m in mats:
        if m.shape != (r, r):
            raise DimensionMismatch(f"action matrix of shape {m.shape}, expected {(r, r)}")
        for i in range(r):
            for j in range(r):
                if invariants[i] != invariants[j] and m[i, j] % (p ** invariants[i]):
                    raise ActionNotHomocyclic("action mixes factors of different exponents")
        Fp = Field(p)
        if Fp.rank(Fp.array(m)) != r:
            raise ActionNotHomocyclic("action matrix is not invertible modulo p")
    if not mats:
        a, g = abelian_pgroup_algebra(p, invariants, F)
        return a, g
    moduli = [p ** x for x in invariants]
    Emats, Eindex, key = _closure_int(mats, moduli)
    E = len(Emats)
    if E % p == 0:
        raise OrderNotCoprime(f"|E| = {E} is divisible by p = {p}")
    Etable = [[Eindex[key(x @ y)] for y in Emats] for x in Emats]
    elems, table, mods = abelian_group_table(p, invariants)
    eidx = {e: i for i, e in enumerate(elems)}
    order = len(elems)

    def act_perm(m):
        P = F.zeros((order, order))
        for i, e in enumerate(elems):
            img = tuple(int(x) % md for x, md in zip(m @ np.array(e, dtype=np.int64), mods))
            P[eidx[img], i] = 1
        return P

    perms = [act_perm(m) for m in Emats]
    C, unit, _ = group_algebra(F, order, table)
    kP = AlgebraRep(F, C, unit, tuple(f"s{i}" for i in range(order)), {"1": unit.copy()})
    for Pm in perms:  # automorphisms of kP
        lhs = F.reduce(np.einsum("ijk,lk->ijl", C, Pm))
        rhs = F.reduce(np.einsum("ai,bj,abl->ijl", Pm, Pm, C))
        if np.any(lhs != rhs):
            raise ActionNotHomocyclic("matrices do not act by group automorphisms")
    # per homocyclic block: E-stable complement of J_b^2 in J_b, J_b = augmentation ideal of kP_b
    Einv = F.inv(F(E))
    vs = []
    for rexp in sorted(set(invariants)):
        block = [i for i in range(r) if invariants[i] == rexp]
        sub = [i for i, e in enumerate(elems) if all(e[k] == 0 for k in range(r) if k not in block)]
        Jb = F.zeros((order, len(sub) - 1))
        for c, i in enumerate(sub[1:]):
            Jb[i, c] = 1
            Jb[0, c] = F.reduce(Jb[0, c] - 1)
        kPb = F.colspace(Jb)
        Jb2 = F.colspace(kP.products(kPb, kPb))
        # projection onto Jb2 along some complement inside Jb, averaged over E
        comp = kPb[:, F.extend(Jb2, kPb)]
        basis = np.concatenate([Jb2, comp], axis=1)
        k2 = Jb2.shape[1]
        # pi(x) = Jb2-part of x in the basis (Jb2 | comp); defined on Jb
        binv = _left_inverse(F, basis)
        pi = F.matmul(Jb2, binv[:k2])
        avg = F.zeros((order, order))
        for gi in range(E):
            ginv = Etable[gi].index(0)
            avg = F.reduce(avg + F.matmul(F.matmul(perms[gi], pi), perms[ginv]))
        avg = F.reduce(avg * Einv)
        # V_b = image of (id - avg) restricted to Jb
        Vb = F.colspace(F.reduce(kPb - F.matmul(avg, kPb)))
        if Vb.shape[1] != len(block):
            raise AssertionError("E-stable complement has the wrong dimension")
        vs.extend((rexp, Vb[:, c]) for c in range(Vb.shape[1]))
    bounds = [p ** rexp for rexp, _ in vs]
    mons, Mon, _, _ = _monomial_vectors(F, p, invariants, elems, [v for _, v in vs], bounds, table)
    if F.rank(Mon) != order:
        raise AssertionError("monomials in the complement do not span kP")
    Minv = F.solve(Mon, F.eye(order))
    # E acting on the monomial basis
    Emon = [F.matmul(Minv, F.matmul(Pm, Mon)) for Pm in perms]
    M = len(mons)
    midx = {m: i for i, m in enumerate(mons)}
    N = M * E
    S = F.zeros((N, N, N))
    for i, a_ in enumerate(mons):
        for g in range(E):
            for j in range(M):
                col = Emon[g][:, j]  # g(m_j) in monomials
                for k in np.flatnonzero(col != 0):
                    c = tuple(x + y for x, y in zip(a_, mons[k]))
                    if not all(x < d for x, d in zip(c, bounds)):
                        continue
                    for h in range(E):
                        S[i * E + g, j * E + h, midx[c] * E + Etable[g][h]] = F.reduce(
                            S[i * E + g, j * E + h, midx[c] * E + Etable[g][h]] + col[k])
    unit2 = F.zeros(N)
    unit2[0] = 1
    labels = tuple(f"{_exponent_label(m)}.e{g}" for m in mons for g in range(E))
    gens_idx = [Eindex[key(m)] for m in mats]
    idem, _ = character_idempotents(F, E, Etable, gens_idx)
    if idem is None:
        Cg, ug, _ = group_algebra(F, E, Etable)
        idem = frobenius_idempotents(F, Cg, ug)
    full = None
    if idem is not None:
        full = {}
        for kk, e in idem.items():
            v = F.zeros(N)
            v[:E] = e
            full[kk] = v
    hint = F.eye(N)[:, E:]
    alg = AlgebraRep(F, S, unit2, labels, full, None, hint)
    problems = validate_algebra(alg)
    if problems:
        raise InvalidAlgebra("kP x| E is not associative: " + problems[0])
    grading = Grading(sum(m) for m in mons for _ in range(E))
    problems = validate_grading(alg, grading)
    if problems:
        raise InvalidAlgebra(problems[0])
    return alg, grading


def _left_inverse(F, B):
    """L with L @ B = I (B has independent columns)."""
    n, k = B.shape
    ext = F.extend(B, F.eye(n))
    full = np.concatenate([B, F.eye(n)[:, ext]], axis=1)
    return F.solve(full, F.eye(n))[:k] if k else F.zeros((0, n))


__all__ = [
    "trivial_extension", "recognize_trivial_extension", "TrivialExtensionIso", "GroupRep",
    "exterior_skew", "ExteriorSkew", "exterior_symmetric_predicate", "abelian_pgroup_algebra",
    "pgroup_semidirect", "truncated_polynomial_algebra", "character_idempotents",
    "frobenius_idempotents", "group_algebra", "abelian_group_table",
]
