"""Integer Laurent polynomials in q."""

from __future__ import annotations

from itertools import permutations


class LaurentPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if isinstance(terms, int):
            terms = {0: terms}
        self.terms = {int(e): int(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> "LaurentPoly":
        return cls({exp: coef})

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls({int(k): v for k, v in data.items()})

    def to_json(self) -> dict:
        return {str(e): c for e, c in sorted(self.terms.items())}

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.terms == _coerce(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def bar(self) -> "LaurentPoly":
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    def shift(self, n: int) -> "LaurentPoly":
        return LaurentPoly({e + n: c for e, c in self.terms.items()})

    def at_one(self) -> int:
        return sum(self.terms.values())

    def __call__(self, q):
        return sum(c * q ** e for e, c in self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, e: int) -> int:
        return self.terms.get(e, 0)

    @property
    def min_degree(self):
        return min(self.terms) if self.terms else None

    @property
    def max_degree(self):
        return max(self.terms) if self.terms else None

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            if e == 0:
                mono = str(abs(c))
            else:
                base = "q" if e == 1 else f"q^{e}"
                mono = base if abs(c) == 1 else f"{abs(c)}{base}"
            if not parts:
                parts.append(mono if c > 0 else f"-{mono}")
            else:
                parts.append(("+ " if c > 0 else "- ") + mono)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


def perm_sign(perm) -> int:
    """Sign of a permutation given as a list of images of 0..n-1."""
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det(matrix) -> LaurentPoly:
    """Determinant by cofactor expansion (matrices here are small)."""
    n = len(matrix)
    if n == 0:
        return LaurentPoly(1)
    if n == 1:
        return _coerce(matrix[0][0])
    total = LaurentPoly()
    for j in range(n):
        entry = _coerce(matrix[0][j])
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def det_leibniz(matrix) -> LaurentPoly:
    """Determinant as a signed sum over permutations (independent check)."""
    n = len(matrix)
    total = LaurentPoly()
    for perm in permutations(range(n)):
        term = LaurentPoly(perm_sign(list(perm)))
        for i in range(n):
            term = term * _coerce(matrix[i][perm[i]])
        total = total + term
    return total
