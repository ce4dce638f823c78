"""Lattices of action-invariant integer quadratic forms, and trace forms.

Invariance of Q under a generator g means Q(g y) = Q(y) for all y,
i.e. the pullback of Q along g equals Q as a coefficient map.  The
invariance conditions are linear in the coefficients, so the full
lattice of invariant integer forms is the integer kernel of a stacked
constraint matrix; its Hermite-canonical basis is the deterministic
output convention used everywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intlin
from .qforms import BilinearForm, LatticeMap, QuadraticForm, pullback_qform
from .rootdata import GroupSpec, SpecError, action_of, unitary_embedding_map


@dataclass(frozen=True)
class InvariantFormBasis:
    """Hermite-canonical Z-basis of the lattice of invariant forms."""

    rank: int
    basis: tuple

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        for q in self.basis:
            if q.rank != self.rank:
                raise ValueError("basis form rank mismatch")

    @property
    def dim(self):
        return len(self.basis)

    def coeff_rows(self):
        return tuple(q.coeff_vector() for q in self.basis)


@dataclass(frozen=True)
class WeightList:
    """Weights of the basis cocharacters on the defining representation.

    ``entries[i]`` lists, aligned by representation coordinate, the
    weight of the i-th basis cocharacter on each coordinate of W.
    """

    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(e) for e in self.entries))
        dims = {len(e) for e in self.entries}
        if len(dims) > 1:
            raise ValueError("weight entries must have a common length")


def _pullback_matrix_on_coeffs(rank, g):
    """Matrix of Q -> Q o g on coefficient vectors, columns = images of
    the monomial basis forms."""
    gmap = LatticeMap(rank, rank, g)
    mono = QuadraticForm.monomials(rank)
    cols = []
    for i, j in mono:
        basis_form = QuadraticForm(rank, ((i, j, 1),))
        cols.append(pullback_qform(basis_form, gmap).coeff_vector())
    return intlin.transpose(tuple(cols))


def invariant_qform_basis(action):
    """All integer quadratic forms fixed by every generator of the action.

    The constraint matrix stacks (P_g - I) over the generators, where
    P_g is the pullback action on coefficient vectors.  Integer kernels
    of integer matrices are saturated, so the Hermite-canonical kernel
    basis is a Z-basis of the full invariant lattice.
    """
    rank = action.rank
    dim = rank * (rank + 1) // 2
    rows = []
    for g in action.generators:
        pg = _pullback_matrix_on_coeffs(rank, g)
        for r in range(dim):
            row = list(pg[r])
            row[r] -= 1
            if any(row):
                rows.append(tuple(row))
    if rows:
        kernel = intlin.kernel_basis(rows, dim)
    else:
        kernel = intlin.identity(dim)
    basis = tuple(QuadraticForm.from_coeff_vector(rank, vec) for vec in kernel)
    return InvariantFormBasis(rank, basis)


def contains_form(basis, q):
    """Integer coordinates of q in the invariant basis, or None.

    >>> b = InvariantFormBasis(1, (QuadraticForm(1, ((1, 1, 1),)),))
    >>> contains_form(b, QuadraticForm(1, ((1, 1, 3),)))
    (3,)
    """
    if q.rank != basis.rank:
        raise ValueError("rank mismatch")
    rows = basis.coeff_rows()
    target = q.coeff_vector()
    if not rows:
        return () if q.is_zero() else None
    return intlin.solve_left(rows, target)


_TRACE_FAMILIES = ("sp", "so-odd", "so-even", "so4-split")


def defining_weights(spec):
    """Weight data of the standard representation for the classical
    families with hyperbolic coordinates: the i-th cocharacter acts
    with weight +1 on coordinate i, -1 on the mirror coordinate, and 0
    elsewhere (odd orthogonal groups have one extra 0 coordinate)."""
    if spec.family not in _TRACE_FAMILIES:
        raise SpecError(f"no defining weight data for family {spec.family}")
    n = spec.n
    dim_w = 2 * n + 1 if spec.family == "so-odd" else 2 * n
    entries = []
    for i in range(1, n + 1):
        row = [0] * dim_w
        row[i - 1] = 1
        row[dim_w - i] = -1
        entries.append(tuple(row))
    return WeightList(tuple(entries))


def trace_form(spec):
    """Gram matrix of (y', y'') -> trace(y' y'' | W) on the cocharacter
    basis; equals 2 * identity in the hyperbolic coordinates used here."""
    weights = defining_weights(spec).entries
    n = len(weights)
    gram = tuple(
        tuple(sum(weights[i][k] * weights[j][k] for k in range(len(weights[i]))) for j in range(n))
        for i in range(n)
    )
    return BilinearForm(n, gram)


def verify_proportionality(spec):
    """True when the invariant forms are spanned by a single generator.

    Only meaningful for the families with irreducible Coxeter data:
    sp (n >= 1), so-odd (n >= 1), so-even (n >= 3).
    """
    if spec.family not in ("sp", "so-odd", "so-even"):
        raise SpecError(f"proportionality check not supported for {spec.family}")
    return invariant_qform_basis(action_of(spec)).dim == 1


# -- classical parameterizations --------------------------------------


def sum_of_squares(rank, scale=1):
    return QuadraticForm(rank, tuple((i, i, scale) for i in range(1, rank + 1)))


def kp_form(n, c):
    """Twisted general linear cover datum (1+c)(sum X_i)^2 - sum_{i<j} X_i X_j."""
    coeffs = {}
    for i in range(1, n + 1):
        coeffs[(i, i)] = 1 + c
        for j in range(i + 1, n + 1):
            coeffs[(i, j)] = 2 * (1 + c) - 1
    return QuadraticForm.from_dict(n, coeffs)


def res_kp_form(n, c):
    """kp_form on each of the two n-blocks of Z^(2n), no cross terms."""
    coeffs = {}
    for off in (0, n):
        for i in range(1, n + 1):
            coeffs[(off + i, off + i)] = 1 + c
            for j in range(i + 1, n + 1):
                coeffs[(off + i, off + j)] = 2 * (1 + c) - 1
    return QuadraticForm.from_dict(2 * n, coeffs)


def gspin_form(n, c, d):
    """Two-parameter invariant family for gspin-odd, n > 1:
    2c (sum_j X_0 X_j + X_0^2) + c sum_{j<k} X_j X_k + d sum_j X_j^2,
    with coordinate 1 playing the role of X_0."""
    if n < 2:
        raise ValueError("gspin_form requires n > 1; use gspin_rank1_form")
    coeffs = {(1, 1): 2 * c}
    for j in range(2, n + 2):
        coeffs[(1, j)] = 2 * c
        coeffs[(j, j)] = d
        for k in range(j + 1, n + 2):
            coeffs[(j, k)] = c
    return QuadraticForm.from_dict(n + 1, coeffs)


def gspin_rank1_form(a, d):
    """Invariant family for gspin-odd at n = 1: a X_0^2 + a X_0 X_1 + d X_1^2."""
    return QuadraticForm.from_dict(2, {(1, 1): a, (1, 2): a, (2, 2): d})


def unitary_pulled_back_form(n, c):
    """Pullback of the Res GL(2n) twisted form to the unitary torus."""
    return pullback_qform(res_kp_form(2 * n, c), unitary_embedding_map(n))


def named_form(spec, params):
    """Build the form selected by classical letter parameters.

    Letters per family: sp / so-odd / so-even take ``scale``;
    so4-split takes ``a, b``; so4-nonsplit takes ``a``; gspin-odd
    takes ``c, d`` for n > 1 and ``a, d`` for n = 1; gl-kp, res-gl-kp
    and unitary take no letters (the twisting parameter c lives in the
    group spec itself).
    """
    family = spec.family
    params = dict(params)

    def take(*names):
        missing = [k for k in names if k not in params]
        if missing:
            raise ValueError(f"{family} needs parameters {', '.join(names)}")
        unknown = sorted(set(params) - set(names))
        if unknown:
            raise ValueError(f"unknown parameters for {family}: {', '.join(unknown)}")
        return [params[k] for k in names]

    if family in ("sp", "so-odd", "so-even"):
        (scale,) = take("scale")
        return sum_of_squares(spec.n, scale)
    if family == "so4-split":
        a, b = take("a", "b")
        return QuadraticForm.from_dict(2, {(1, 1): a, (2, 2): a, (1, 2): b})
    if family == "so4-nonsplit":
        (a,) = take("a")
        return QuadraticForm.from_dict(2, {(1, 1): a, (2, 2): a})
    if family == "gspin-odd":
        if spec.n == 1:
            a, d = take("a", "d")
            return gspin_rank1_form(a, d)
        c, d = take("c", "d")
        return gspin_form(spec.n, c, d)
    if family in ("gl-kp", "res-gl-kp", "unitary"):
        take()
        c = spec.param("c")
        if c is None:
            raise ValueError(f"{family} specs carry the twisting parameter, e.g. {family}:{spec.n}:c=0")
        if family == "gl-kp":
            return kp_form(spec.n, c)
        if family == "res-gl-kp":
            return res_kp_form(spec.n, c)
        return unitary_pulled_back_form(spec.n, c)
    raise SpecError(f"unknown family {family!r}")
