"""Integer quadratic forms on lattices, their bilinear forms, pullbacks.

A form is stored by its upper-triangular coefficient map: Q(y) =
sum of c[i][j] * y_i * y_j over 1 <= i <= j <= rank.  This keeps Q
integer valued even when the associated bilinear form has odd
off-diagonal entries, which is exactly the situation for the covers
treated here.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intlin


def _check_index_pair(i, j, rank):
    if not (isinstance(i, int) and isinstance(j, int)):
        raise ValueError("coefficient indices must be integers")
    if not (1 <= i <= j <= rank):
        raise ValueError(f"coefficient index ({i},{j}) out of range for rank {rank}")


@dataclass(frozen=True)
class QuadraticForm:
    """Integer quadratic form; ``coeffs`` holds (i, j, c) with i <= j, c != 0."""

    rank: int
    coeffs: tuple

    def __post_init__(self):
        if not (isinstance(self.rank, int) and self.rank >= 1):
            raise ValueError("rank must be a positive integer")
        seen = set()
        for i, j, c in self.coeffs:
            _check_index_pair(i, j, self.rank)
            if not isinstance(c, int):
                raise ValueError("coefficients must be integers")
            if (i, j) in seen:
                raise ValueError(f"duplicate coefficient for ({i},{j})")
            seen.add((i, j))
        canonical = tuple(sorted((i, j, c) for i, j, c in self.coeffs if c != 0))
        object.__setattr__(self, "coeffs", canonical)

    @classmethod
    def from_dict(cls, rank, coeff_map):
        return cls(rank, tuple((i, j, c) for (i, j), c in coeff_map.items()))

    @classmethod
    def zero(cls, rank):
        return cls(rank, ())

    def as_dict(self):
        return {(i, j): c for i, j, c in self.coeffs}

    def coeff(self, i, j):
        _check_index_pair(i, j, self.rank)
        return self.as_dict().get((i, j), 0)

    def __call__(self, y):
        return eval_q(self, y)

    def __add__(self, other):
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        d = self.as_dict()
        for key, c in other.as_dict().items():
            d[key] = d.get(key, 0) + c
        return QuadraticForm.from_dict(self.rank, d)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return QuadraticForm(self.rank, tuple((i, j, s * c) for i, j, c in self.coeffs))

    def is_zero(self):
        return not self.coeffs

    # -- canonical coefficient vectors -------------------------------

    @staticmethod
    def monomials(rank):
        """Index pairs (i, j), i <= j, in lexicographic order."""
        return tuple((i, j) for i in range(1, rank + 1) for j in range(i, rank + 1))

    def coeff_vector(self):
        d = self.as_dict()
        return tuple(d.get(key, 0) for key in self.monomials(self.rank))

    @classmethod
    def from_coeff_vector(cls, rank, vec):
        mono = cls.monomials(rank)
        if len(vec) != len(mono):
            raise ValueError("coefficient vector length mismatch")
        return cls(rank, tuple((i, j, c) for (i, j), c in zip(mono, vec)))

    # -- JSON wire format ---------------------------------------------

    def to_json(self):
        return {"rank": self.rank, "coeffs": [[i, j, c] for i, j, c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "rank" not in obj:
            raise ValueError("quadratic form JSON must be {'rank': n, 'coeffs': [...]}")
        coeffs = obj.get("coeffs", [])
        return cls(obj["rank"], tuple((int(i), int(j), int(c)) for i, j, c in coeffs))


@dataclass(frozen=True)
class BilinearForm:
    """Symmetric integer bilinear form given by its Gram matrix."""

    rank: int
    gram: tuple

    def __post_init__(self):
        gram = tuple(tuple(row) for row in self.gram)
        if len(gram) != self.rank or any(len(row) != self.rank for row in gram):
            raise ValueError("gram matrix shape mismatch")
        if gram != intlin.transpose(gram):
            raise ValueError("gram matrix must be symmetric")
        object.__setattr__(self, "gram", gram)

    def apply(self, y1, y2):
        if len(y1) != self.rank or len(y2) != self.rank:
            raise ValueError("vector length mismatch")
        return sum(
            y1[i] * self.gram[i][j] * y2[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )


@dataclass(frozen=True)
class LatticeMap:
    """Z-linear map; column j of ``matrix`` is the image of source basis j."""

    source_rank: int
    target_rank: int
    matrix: tuple

    def __post_init__(self):
        matrix = tuple(tuple(row) for row in self.matrix)
        if len(matrix) != self.target_rank or any(
            len(row) != self.source_rank for row in matrix
        ):
            raise ValueError("matrix shape mismatch")
        if any(not isinstance(v, int) for row in matrix for v in row):
            raise ValueError("matrix entries must be integers")
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def identity(cls, rank):
        return cls(rank, rank, intlin.identity(rank))

    @classmethod
    def from_columns(cls, target_rank, columns):
        matrix = intlin.transpose(tuple(tuple(col) for col in columns)) if columns else ((),)
        if not columns:
            raise ValueError("need at least one column")
        return cls(len(columns), target_rank, matrix)

    def apply(self, y):
        if len(y) != self.source_rank:
            raise ValueError("vector length mismatch")
        return intlin.mat_vec(self.matrix, y)

    def compose(self, other):
        """self after other (matrix product self.matrix @ other.matrix)."""
        if other.target_rank != self.source_rank:
            raise ValueError("rank mismatch in composition")
        return LatticeMap(
            other.source_rank, self.target_rank, intlin.mat_mul(self.matrix, other.matrix)
        )


def eval_q(q, y):
    """Evaluate Q at an integer vector.

    >>> eval_q(QuadraticForm(2, ((1, 1, 1), (2, 2, 1))), (1, 1))
    2
    """
    if len(y) != q.rank:
        raise ValueError(f"vector length {len(y)} != rank {q.rank}")
    return sum(c * y[i - 1] * y[j - 1] for i, j, c in q.coeffs)


def bq_of(q):
    """Bilinear form B_Q(y1, y2) = Q(y1+y2) - Q(y1) - Q(y2) on basis vectors."""
    n = q.rank
    gram = [[0] * n for _ in range(n)]
    for i, j, c in q.coeffs:
        if i == j:
            gram[i - 1][i - 1] = 2 * c
        else:
            gram[i - 1][j - 1] = c
            gram[j - 1][i - 1] = c
    return BilinearForm(n, tuple(tuple(row) for row in gram))


def pullback_qform(q, f):
    """Pull back along a lattice map: result R with R(y) = Q(f(y)).

    Computed by exact symbolic substitution (expand and collect), so
    odd cross coefficients survive exactly rather than passing through
    a half-integer Gram conjugation.
    """
    if f.target_rank != q.rank:
        raise ValueError(f"map target rank {f.target_rank} != form rank {q.rank}")
    rows = f.matrix
    out = {}

    def bump(k, l, c):
        if k > l:
            k, l = l, k
        key = (k + 1, l + 1)
        out[key] = out.get(key, 0) + c

    for i, j, c in q.coeffs:
        ri = rows[i - 1]
        rj = rows[j - 1]
        if i == j:
            for k in range(f.source_rank):
                if ri[k] == 0:
                    continue
                bump(k, k, c * ri[k] * ri[k])
                for l in range(k + 1, f.source_rank):
                    if ri[l]:
                        bump(k, l, 2 * c * ri[k] * ri[l])
        else:
            for k in range(f.source_rank):
                for l in range(f.source_rank):
                    if ri[k] and rj[l]:
                        bump(k, l, c * ri[k] * rj[l])
    return QuadraticForm.from_dict(f.source_rank, out)


def restrict_qform(q, basis_subset):
    """Restriction to a coordinate sublattice (pullback along inclusion)."""
    subset = tuple(basis_subset)
    if len(set(subset)) != len(subset):
        raise ValueError("duplicate index in basis subset")
    for idx in subset:
        if not (1 <= idx <= q.rank):
            raise ValueError(f"index {idx} out of range for rank {q.rank}")
    cols = [tuple(1 if t == idx else 0 for t in range(1, q.rank + 1)) for idx in subset]
    return pullback_qform(q, LatticeMap.from_columns(q.rank, cols))
