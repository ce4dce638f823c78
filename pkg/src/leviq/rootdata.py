"""Cocharacter lattices, Weyl/Galois generators and Levi block data.

Supported families, with their CLI spellings and torus ranks:

    sp:n            symplectic Sp(2n)                rank n
    so-odd:n        split SO(2n+1)                   rank n
    so-even:n       split SO(2n), n >= 3             rank n
    so4-split       split SO(4)                      rank 2
    so4-nonsplit    SO(4) with 2-dim anisotropic part  rank 2
    gspin-odd:n     split GSpin(2n+1)                rank n+1
    gl-kp:n:c=..    GL(n) with twisted cover datum   rank n
    res-gl-kp:n:c=..  Res_{E|F} GL(n), E|F quadratic rank 2n
    unitary:n:c=..  quasi-split U(2n) for E|F, hyperbolic form, rank 2n

Coordinate conventions: gspin-odd puts the central cocharacter first
(index 1), then the n orthogonal coordinates.  res-gl-kp and unitary
use (X_1..X_n, Y_1..Y_n) with the Galois generator swapping the two
blocks.  For unitary, the Weyl generators are the symmetric-group
generators of the split form transported through the standard
hyperbolic coordinate identification (see ``unitary_embedding_map``).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import intlin
from .qforms import LatticeMap

FAMILIES = (
    "sp",
    "so-odd",
    "so-even",
    "so4-split",
    "so4-nonsplit",
    "gspin-odd",
    "gl-kp",
    "res-gl-kp",
    "unitary",
)

_FIXED_RANK_FAMILIES = ("so4-split", "so4-nonsplit")
_TWISTED_FAMILIES = ("gl-kp", "res-gl-kp", "unitary")
_ALIASES = {"so-even-split": "so-even"}


class SpecError(ValueError):
    """Invalid group specification."""


@dataclass(frozen=True)
class GroupSpec:
    family: str
    n: int
    extra: tuple = ()

    def __post_init__(self):
        family = _ALIASES.get(self.family, self.family)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "extra", tuple(sorted(self.extra)))
        if family not in FAMILIES:
            raise SpecError(f"unknown family {family!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise SpecError("rank parameter n must be a positive integer")
        if family in _FIXED_RANK_FAMILIES and self.n != 2:
            raise SpecError(f"{family} has fixed n = 2")
        if family == "so-even" and self.n < 3:
            raise SpecError("so-even requires n >= 3 (dimension >= 6)")
        allowed = {"c"} if family in _TWISTED_FAMILIES else set()
        for key, value in self.extra:
            if key not in allowed:
                raise SpecError(f"parameter {key!r} not allowed for family {family}")
            if not isinstance(value, int):
                raise SpecError("extra parameters must be integers")

    def param(self, key, default=None):
        for k, v in self.extra:
            if k == key:
                return v
        return default

    def to_string(self):
        parts = [self.family]
        if self.family not in _FIXED_RANK_FAMILIES:
            parts.append(str(self.n))
        parts.extend(f"{k}={v}" for k, v in self.extra)
        return ":".join(parts)


def parse_group_spec(text):
    """Parse CLI strings like "sp:3", "so4-split", "gl-kp:4:c=1"."""
    pieces = text.strip().split(":")
    family = _ALIASES.get(pieces[0], pieces[0])
    if family not in FAMILIES:
        raise SpecError(f"unknown family {pieces[0]!r}")
    rest = pieces[1:]
    if family in _FIXED_RANK_FAMILIES:
        n = 2
    else:
        if not rest:
            raise SpecError(f"family {family} needs a rank parameter, e.g. {family}:2")
        try:
            n = int(rest[0])
        except ValueError as exc:
            raise SpecError(f"bad rank parameter {rest[0]!r}") from exc
        rest = rest[1:]
    extra = []
    for piece in rest:
        if "=" not in piece:
            raise SpecError(f"bad spec component {piece!r}")
        key, _, value = piece.partition("=")
        try:
            extra.append((key, int(value)))
        except ValueError as exc:
            raise SpecError(f"bad integer in {piece!r}") from exc
    return GroupSpec(family, n, tuple(extra))


@dataclass(frozen=True)
class LatticeAction:
    """Finite list of lattice automorphism generators acting on Z^rank."""

    rank: int
    generators: tuple

    def __post_init__(self):
        gens = tuple(tuple(tuple(row) for row in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if len(g) != self.rank or any(len(row) != self.rank for row in g):
                raise ValueError("generator shape mismatch")
            if intlin.det(g) not in (1, -1):
                raise ValueError("generator is not integrally invertible")


@dataclass(frozen=True)
class LeviPartition:
    """Ordered GL block sizes plus the rank of the flat (classical) block."""

    gl_blocks: tuple
    flat_rank: int

    def __post_init__(self):
        object.__setattr__(self, "gl_blocks", tuple(self.gl_blocks))
        for d in self.gl_blocks:
            if not isinstance(d, int) or d < 1:
                raise ValueError("GL block sizes must be positive integers")
        if not isinstance(self.flat_rank, int) or self.flat_rank < 0:
            raise ValueError("flat rank must be a nonnegative integer")


def torus_rank(spec):
    family = spec.family
    if family in ("sp", "so-odd", "so-even", "so4-split", "so4-nonsplit", "gl-kp"):
        return spec.n
    if family == "gspin-odd":
        return spec.n + 1
    if family in ("res-gl-kp", "unitary"):
        return 2 * spec.n
    raise SpecError(f"unknown family {family!r}")


# -- generator recipes ------------------------------------------------


def _perm_matrix(rank, i, j):
    """Swap of coordinates i and j (0-based)."""
    m = [[1 if a == b else 0 for b in range(rank)] for a in range(rank)]
    m[i][i] = m[j][j] = 0
    m[i][j] = m[j][i] = 1
    return tuple(tuple(row) for row in m)


def _diag(entries):
    rank = len(entries)
    return tuple(
        tuple(entries[a] if a == b else 0 for b in range(rank)) for a in range(rank)
    )


def _adjacent_swaps(rank, offset=0, count=None):
    count = rank - 1 if count is None else count
    return [_perm_matrix(rank, offset + i, offset + i + 1) for i in range(count)]


def _double_perm(n, i, j):
    """Permutation applied to one of the two n-blocks of Z^(2n)."""
    return _perm_matrix(2 * n, i, j)


def _block_swap(n):
    m = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        m[i][n + i] = 1
        m[n + i][i] = 1
    return tuple(tuple(row) for row in m)


def unitary_embedding_map(n):
    """Substitution of the unitary torus into Res GL(2n) coordinates.

    Source coordinates are (X_1..X_n, Y_1..Y_n) of the rank-2n unitary
    torus; the target is the rank-4n lattice of Res GL(2n) with
    coordinates (X_1..X_2n, Y_1..Y_2n).  Pulling a form back along this
    map performs the substitutions X_{n+i} -> -Y_{n+1-i} and
    Y_{n+i} -> -X_{n+1-i} forced by the hyperbolic torus shape
    diag(x_1, ..., x_n, conj(x_n)^-1, ..., conj(x_1)^-1).
    """
    rows = [[0] * (2 * n) for _ in range(4 * n)]
    for i in range(n):
        rows[i][i] = 1                       # X_i -> X_i
        rows[n + i][2 * n - 1 - i] = -1      # X_{n+i} -> -Y_{n+1-i}
        rows[2 * n + i][n + i] = 1           # Y_i -> Y_i
        rows[3 * n + i][n - 1 - i] = -1      # Y_{n+i} -> -X_{n+1-i}
    return LatticeMap(2 * n, 4 * n, tuple(tuple(r) for r in rows))


def _unitary_coordinate_change(n):
    """Signed permutation taking (X_1..X_n, Y_1..Y_n) to the split
    torus coordinates t_1..t_2n of the 2n-dimensional general linear
    group over the algebraic closure: t_i = X_i, t_{n+i} = -Y_{n+1-i}.
    """
    m = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        m[i][i] = 1
        m[n + i][2 * n - 1 - i] = -1
    return tuple(tuple(row) for row in m)


def action_of(spec):
    """Weyl and Galois generators acting on the cocharacter lattice."""
    n = spec.n
    rank = torus_rank(spec)
    family = spec.family
    gens = []
    if family in ("sp", "so-odd"):
        gens.extend(_adjacent_swaps(n))
        gens.append(_diag([1] * (n - 1) + [-1]))
    elif family == "so-even":
        gens.extend(_adjacent_swaps(n))
        flip = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
        flip[n - 2][n - 2] = flip[n - 1][n - 1] = 0
        flip[n - 2][n - 1] = flip[n - 1][n - 2] = -1
        gens.append(tuple(tuple(row) for row in flip))
    elif family == "so4-split":
        gens.append(_perm_matrix(2, 0, 1))
        gens.append(_diag([-1, -1]))
    elif family == "so4-nonsplit":
        # Weyl generators of the split form over the closure, plus the
        # Galois element fixing the split coordinate and negating the
        # anisotropic one.
        gens.append(_perm_matrix(2, 0, 1))
        gens.append(_diag([-1, -1]))
        gens.append(_diag([1, -1]))
    elif family == "gspin-odd":
        # Coordinates (y_0, y_1, ..., y_n); reflections for the roots
        # e_i - e_{i+1} swap y_i, y_{i+1}; the short-root reflection has
        # coroot 2 e_n^* - e_0^*, hence y_0 += y_n, y_n = -y_n.
        gens.extend(_adjacent_swaps(rank, offset=1))
        short = [[1 if a == b else 0 for b in range(rank)] for a in range(rank)]
        short[0][rank - 1] = 1
        short[rank - 1][rank - 1] = -1
        gens.append(tuple(tuple(row) for row in short))
    elif family == "gl-kp":
        gens.extend(_adjacent_swaps(n))
    elif family == "res-gl-kp":
        # Over the closure the group splits into two GL(n) factors, so
        # the Weyl group acts on each n-block independently; the Galois
        # generator swaps the blocks.
        for i in range(n - 1):
            gens.append(_double_perm(n, i, i + 1))
            gens.append(_double_perm(n, n + i, n + i + 1))
        gens.append(_block_swap(n))
    elif family == "unitary":
        m = _unitary_coordinate_change(n)
        mt = intlin.transpose(m)
        for i in range(2 * n - 1):
            gens.append(intlin.mat_mul(intlin.mat_mul(mt, _perm_matrix(2 * n, i, i + 1)), m))
        gens.append(_block_swap(n))
    else:
        raise SpecError(f"unknown family {family!r}")
    if not gens:  # sp:1 has no swaps but always has the sign change
        raise SpecError("empty generator list")
    return LatticeAction(rank, tuple(gens))


def group_closure(generators, limit=100000):
    """All elements of the group generated by the given matrices."""
    gens = [tuple(tuple(row) for row in g) for g in generators]
    rank = len(gens[0])
    seen = {intlin.identity(rank)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for mat in frontier:
            for g in gens:
                prod = intlin.mat_mul(mat, g)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
                    if len(seen) > limit:
                        raise ValueError(f"group closure exceeds {limit} elements")
        frontier = nxt
    return seen


# -- Levi partitions ---------------------------------------------------

_PARTITION_FAMILIES = (
    "sp",
    "so-odd",
    "so-even",
    "so4-split",
    "so4-nonsplit",
    "gspin-odd",
    "unitary",
)


def _compositions(total_max):
    """Ordered tuples of positive integers with sum <= total_max,
    listed by number of parts, then lexicographically."""
    out = [()]
    level = [()]
    for _ in range(total_max):
        nxt = []
        for comp in level:
            room = total_max - sum(comp)
            for d in range(1, room + 1):
                nxt.append(comp + (d,))
        if not nxt:
            break
        nxt.sort()
        out.extend(nxt)
        level = nxt
    return out


def _flat_rank_for(spec, gl_blocks):
    used = sum(gl_blocks)
    if spec.family == "gspin-odd":
        return spec.n - used + 1
    if spec.family in ("unitary", "res-gl-kp"):
        return 2 * (spec.n - used)
    return spec.n - used


def enumerate_levi_partitions(spec):
    if spec.family not in _PARTITION_FAMILIES:
        raise SpecError(f"Levi partitions not supported for family {spec.family}")
    if spec.family == "so4-nonsplit":
        # The anisotropic plane admits no isotropic lines: the only
        # proper Levi subgroup is GL(1) x SO(anisotropic plane).
        comps = [(), (1,)]
    else:
        comps = _compositions(spec.n)
    return [LeviPartition(comp, _flat_rank_for(spec, comp)) for comp in comps]


def validate_partition(spec, part):
    used = sum(part.gl_blocks)
    if spec.family == "so4-nonsplit" and part.gl_blocks not in ((), (1,)):
        raise ValueError("so4-nonsplit has no such Levi subgroup")
    if used > spec.n:
        raise ValueError("GL blocks exceed available rank")
    expected_flat = _flat_rank_for(spec, part.gl_blocks)
    if part.flat_rank != expected_flat:
        raise ValueError(
            f"flat rank {part.flat_rank} does not match expected {expected_flat}"
        )


def levi_block_indices(spec, part):
    """Assign 1-based lattice coordinates to the blocks of a partition.

    Returns one index tuple per GL block, in order, followed by the
    flat block when it is nonempty.  GL blocks occupy consecutive
    coordinates; for gspin-odd the central coordinate (index 1) always
    belongs to the flat block; for unitary and res-gl-kp each GL block
    takes matching coordinates from both n-blocks.
    """
    if spec.family in _PARTITION_FAMILIES or spec.family in ("gl-kp", "res-gl-kp"):
        validate_partition(spec, part)
    else:
        raise SpecError(f"Levi blocks not supported for family {spec.family}")
    rank = torus_rank(spec)
    blocks = []
    if spec.family in ("unitary", "res-gl-kp"):
        n = spec.n
        offset = 0
        for d in part.gl_blocks:
            idx = tuple(range(offset + 1, offset + d + 1))
            blocks.append(idx + tuple(n + i for i in idx))
            offset += d
        flat = tuple(range(offset + 1, n + 1)) + tuple(range(n + offset + 1, 2 * n + 1))
    else:
        start = 2 if spec.family == "gspin-odd" else 1
        offset = start
        for d in part.gl_blocks:
            blocks.append(tuple(range(offset, offset + d)))
            offset += d
        flat = tuple(range(offset, rank + 1))
        if spec.family == "gspin-odd":
            flat = (1,) + flat
    if flat:
        blocks.append(tuple(sorted(flat)))
    return blocks
