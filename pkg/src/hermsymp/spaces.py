"""Hermitian symplectic spaces and their Lagrangian subspaces.

A Hermitian symplectic space is a finite-dimensional complex vector space with
a positive-definite Hermitian inner product and a unitary map ``gamma``
squaring to minus the identity, such that the Hermitian form
``(x, y) -> <x, i gamma y>`` has zero signature.  The skew form
``omega(x, y) = <x, gamma y>`` is the underlying symplectic structure;
Lagrangian subspaces are the half-dimensional subspaces on which ``omega``
vanishes, equivalently the subspaces with ``gamma(W)`` equal to the orthogonal
complement of ``W``.

Every Lagrangian is the graph of a unique unitary from the +i eigenspace of
``gamma`` to the -i eigenspace; :func:`phi_of` computes its matrix in the
deterministic eigenbases produced by :func:`eigensplit`.

Coordinates are never assumed orthonormal: each space carries an explicit Gram
matrix and all orthonormalizations are performed relative to it.  All types
are immutable after construction and all operations are pure functions.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    EigensplitError,
    LagrangianValidationError,
    RankAmbiguity,
    SpaceValidationError,
    ValidationError,
)
from .linalg import as_complex_matrix, gram_mgs, max_abs

# Default tolerances.  Problems handled here are tiny (dims below ~50), so
# double precision leaves wide margins around each threshold.
EPS_ALG = 1e-10   # algebraic identities
EPS_RANK = 1e-8   # singular-value threshold for rank decisions
EPS_EIG = 1e-8    # eigenvalue matching
EPS_INT = 1e-6    # integrality guard


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=np.complex128)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class HermitianSymplecticSpace:
    """Complex inner-product space with a compatible complex structure.

    ``gram`` is the Hermitian positive-definite matrix of the inner product in
    the chosen coordinate basis; ``gamma`` is the matrix of the complex
    structure in the same basis.  Construction performs the structural checks
    (square, even-dimensional, Hermitian positive-definite gram); the three
    algebraic invariants are measured by :func:`validate_space`.

    Dimension zero is allowed and carries the unique empty Lagrangian.
    """

    gram: np.ndarray
    gamma: np.ndarray

    def __post_init__(self) -> None:
        gram = as_complex_matrix(self.gram, "gram")
        gamma = as_complex_matrix(self.gamma, "gamma")
        if gram.shape[0] != gram.shape[1]:
            raise SpaceValidationError(f"gram must be square, got shape {gram.shape}")
        if gamma.shape != gram.shape:
            raise SpaceValidationError(
                f"gamma shape {gamma.shape} does not match gram shape {gram.shape}"
            )
        n = gram.shape[0]
        if n % 2 != 0:
            raise SpaceValidationError(f"dimension must be even, got {n}")
        scale = max(max_abs(gram), 1.0)
        if max_abs(gram - gram.conj().T) > 1e-12 * scale:
            raise SpaceValidationError("gram must be Hermitian")
        if n:
            try:
                np.linalg.cholesky(gram)
            except np.linalg.LinAlgError:
                raise SpaceValidationError("gram must be positive definite") from None
        object.__setattr__(self, "gram", _frozen(gram))
        object.__setattr__(self, "gamma", _frozen(gamma))

    @property
    def dim(self) -> int:
        return self.gram.shape[0]

    @property
    def half_dim(self) -> int:
        return self.dim // 2

    def omega(self) -> np.ndarray:
        """Matrix of the symplectic form: omega(x, y) = x^H @ omega() @ y."""
        return self.gram @ self.gamma


def same_space(a: HermitianSymplecticSpace, b: HermitianSymplecticSpace) -> bool:
    return a is b or (
        a.dim == b.dim
        and np.array_equal(a.gram, b.gram)
        and np.array_equal(a.gamma, b.gamma)
    )


def _require_same_space(a: HermitianSymplecticSpace, b: HermitianSymplecticSpace) -> None:
    if not same_space(a, b):
        raise ValidationError("operands live in different spaces")


def standard_space(half_dim: int) -> HermitianSymplecticSpace:
    """Standard model: identity gram, gamma = [[0, -I], [I, 0]]."""
    k = int(half_dim)
    if k < 0:
        raise SpaceValidationError("half_dim must be non-negative")
    n = 2 * k
    gamma = np.zeros((n, n), dtype=np.complex128)
    gamma[:k, k:] = -np.eye(k)
    gamma[k:, :k] = np.eye(k)
    return HermitianSymplecticSpace(np.eye(n), gamma)


def zero_space() -> HermitianSymplecticSpace:
    return standard_space(0)


def negated(space: HermitianSymplecticSpace) -> HermitianSymplecticSpace:
    """Same inner product with the complex structure reversed.

    Models the opposite boundary orientation; the symplectic form changes
    sign while all validity invariants are preserved.
    """
    return HermitianSymplecticSpace(space.gram, -space.gamma)


def direct_sum(
    a: HermitianSymplecticSpace, b: HermitianSymplecticSpace
) -> HermitianSymplecticSpace:
    return HermitianSymplecticSpace(
        linalg.block_diag(a.gram, b.gram), linalg.block_diag(a.gamma, b.gamma)
    )


@dataclass(frozen=True)
class InvariantCheck:
    name: str
    residual: float
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class SpaceReport:
    """Per-invariant diagnostic produced by :func:`validate_space`."""

    checks: tuple[InvariantCheck, ...]
    signature: int

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def validate_space(space: HermitianSymplecticSpace, *, eps_alg: float = EPS_ALG) -> SpaceReport:
    """Measure the three algebraic invariants of a space.

    Checks, with measured residuals: ``gamma @ gamma = -I``; unitarity of
    ``gamma`` with respect to the gram inner product; zero signature of the
    Hermitian form ``<x, i gamma y>`` (equal numbers of positive and negative
    eigenvalues, none indistinguishable from zero).
    """
    g, gm = space.gram, space.gamma
    n = space.dim
    ident = np.eye(n, dtype=np.complex128)
    r_square = max_abs(gm @ gm + ident)
    if n:
        gram_adjoint = np.linalg.solve(g, gm.conj().T @ g)
    else:
        gram_adjoint = gm
    r_unitary = max_abs(gram_adjoint @ gm - ident)
    form = 1j * (g @ gm)
    form = (form + form.conj().T) / 2.0
    eigs = np.linalg.eigvalsh(form) if n else np.zeros(0)
    tau = EPS_RANK * max(max_abs(eigs), 1.0)
    n_pos = int(np.sum(eigs > tau))
    n_neg = int(np.sum(eigs < -tau))
    n_null = n - n_pos - n_neg
    signature = n_pos - n_neg
    checks = (
        InvariantCheck("gamma_squares_to_minus_identity", r_square, r_square <= eps_alg),
        InvariantCheck("gamma_gram_unitary", r_unitary, r_unitary <= eps_alg),
        InvariantCheck(
            "igamma_signature_zero",
            float(abs(signature) + n_null),
            signature == 0 and n_null == 0,
            detail=f"positive={n_pos} negative={n_neg} null={n_null}",
        ),
    )
    return SpaceReport(checks=checks, signature=signature)


@dataclass(frozen=True)
class EigenSplitting:
    """Gram-orthonormal bases of the +i and -i eigenspaces of ``gamma``.

    Produced deterministically: the spectral projections of the coordinate
    basis vectors are orthonormalized in input order and each eigenvector's
    phase is fixed so that its first non-negligible coordinate is real
    positive.  This pins the graph unitaries of :func:`phi_of` across runs.
    """

    plus_basis: np.ndarray
    minus_basis: np.ndarray


def _phase_fixed(basis: np.ndarray) -> np.ndarray:
    out = basis.copy()
    for j in range(out.shape[1]):
        col = out[:, j]
        mags = np.abs(col)
        big = float(mags.max())
        idx = int(np.argmax(mags > 1e-8 * big))
        pivot = col[idx]
        out[:, j] = col * (np.conj(pivot) / abs(pivot))
    return out


def eigensplit(
    space: HermitianSymplecticSpace,
    *,
    eps_alg: float = EPS_ALG,
    eps_rank: float = EPS_RANK,
) -> EigenSplitting:
    """Split a valid space into the +i/-i eigenspaces of ``gamma``.

    Uses the exact spectral projectors (I -/+ i gamma)/2, which are
    gram-orthogonal idempotents whenever the space invariants hold, so no
    eigenvalue clustering heuristics are involved.
    """
    n, k = space.dim, space.half_dim
    gm = space.gamma
    ident = np.eye(n, dtype=np.complex128)
    plus = gram_mgs(space.gram, (ident - 1j * gm) / 2.0, drop_tol=eps_rank)
    minus = gram_mgs(space.gram, (ident + 1j * gm) / 2.0, drop_tol=eps_rank)
    if plus.shape[1] != k or minus.shape[1] != k:
        raise EigensplitError(
            f"eigenspace dimensions ({plus.shape[1]}, {minus.shape[1]}) differ from "
            f"({k}, {k}); the space does not split evenly into +i/-i eigenspaces"
        )
    if k:
        plus = _phase_fixed(plus)
        minus = _phase_fixed(minus)
    scale = max(1.0, max_abs(gm))
    r_plus = max_abs(gm @ plus - 1j * plus)
    r_minus = max_abs(gm @ minus + 1j * minus)
    r_cross = max_abs(plus.conj().T @ space.gram @ minus)
    if max(r_plus, r_minus, r_cross) > eps_alg * scale:
        raise EigensplitError(
            f"eigenspaces not separated within tolerance: residuals "
            f"plus={r_plus:.3e} minus={r_minus:.3e} cross={r_cross:.3e}"
        )
    return EigenSplitting(plus_basis=_frozen(plus), minus_basis=_frozen(minus))


@dataclass(frozen=True)
class Lagrangian:
    """Half-dimensional subspace on which the symplectic form vanishes.

    ``basis`` holds a gram-orthonormal spanning matrix (dim x half_dim);
    construct through :func:`lagrangian_from_basis`, which validates and
    deterministically orthonormalizes.
    """

    space: HermitianSymplecticSpace
    basis: np.ndarray

    @property
    def half_dim(self) -> int:
        return self.basis.shape[1]


def lagrangian_from_basis(
    space: HermitianSymplecticSpace,
    basis,
    *,
    eps_alg: float = EPS_ALG,
    eps_rank: float = EPS_RANK,
) -> Lagrangian:
    """Validate a spanning matrix and wrap it as a Lagrangian.

    The basis is replaced by its gram-orthonormalization (modified
    Gram-Schmidt, columns in input order).  Rejects rank-deficient input and
    spans on which the symplectic form does not vanish within ``eps_alg``.
    """
    mat = as_complex_matrix(basis, "basis")
    k = space.half_dim
    if mat.shape != (space.dim, k):
        raise LagrangianValidationError(
            f"basis must have shape ({space.dim}, {k}), got {mat.shape}"
        )
    q = gram_mgs(space.gram, mat, drop_tol=eps_rank)
    if q.shape[1] != k:
        raise LagrangianValidationError(
            f"basis is rank deficient: numerical rank {q.shape[1]} < {k}"
        )
    # omega(u, v) is bounded by 1 on gram-unit vectors, so the residual of a
    # true Lagrangian sits at roundoff level regardless of the gram's scale.
    residual = max_abs(q.conj().T @ space.omega() @ q)
    if residual > eps_alg:
        raise LagrangianValidationError(
            f"symplectic form does not vanish on the span: residual {residual:.3e}"
        )
    return Lagrangian(space=space, basis=_frozen(q))


def gamma_image(lagr: Lagrangian, *, eps_alg: float = EPS_ALG, eps_rank: float = EPS_RANK) -> Lagrangian:
    """The Lagrangian gamma(W), which equals the gram-orthogonal complement of W."""
    return lagrangian_from_basis(
        lagr.space, lagr.space.gamma @ lagr.basis, eps_alg=eps_alg, eps_rank=eps_rank
    )


def intersection_dim(v: Lagrangian, w: Lagrangian, *, eps_rank: float = EPS_RANK) -> int:
    """dim(V & W) as ``dim - rank([basis_V | basis_W])``.

    Raises :class:`RankAmbiguity` when a singular value falls inside the guard
    band ``(eps_rank/10, 10 eps_rank)``, where the rank decision would be
    numerically arbitrary.
    """
    _require_same_space(v.space, w.space)
    s = linalg.singular_values(np.hstack([v.basis, w.basis]))
    band = s[(s > eps_rank / 10.0) & (s < eps_rank * 10.0)]
    if band.size:
        raise RankAmbiguity(
            f"singular value {band[0]:.3e} inside the rank guard band around {eps_rank:.0e}"
        )
    rank = int(np.sum(s > eps_rank))
    return v.space.dim - rank


def phi_of(
    lagr: Lagrangian,
    splitting: EigenSplitting | None = None,
    *,
    eps_alg: float = EPS_ALG,
    eps_rank: float = EPS_RANK,
) -> np.ndarray:
    """Matrix of the unitary whose graph is the Lagrangian.

    In the bases of ``splitting`` (computed from the space if omitted), every
    column w of the Lagrangian decomposes as w = w+ + w- with w- = phi(w+);
    the returned half_dim x half_dim matrix is unitary within ``eps_alg``.
    Fails only if the projection of the span to the +i eigenspace is singular,
    which signals an invalid input that slipped past validation.
    """
    space = lagr.space
    k = space.half_dim
    if k == 0:
        return np.zeros((0, 0), dtype=np.complex128)
    if splitting is None:
        splitting = eigensplit(space, eps_alg=eps_alg, eps_rank=eps_rank)
    gl = space.gram @ lagr.basis
    a = splitting.plus_basis.conj().T @ gl
    c = splitting.minus_basis.conj().T @ gl
    s = np.linalg.svd(a, compute_uv=False)
    if s[-1] <= eps_rank:
        raise LagrangianValidationError(
            "projection onto the +i eigenspace is singular; input is not a "
            f"valid Lagrangian (smallest singular value {s[-1]:.3e})"
        )
    phi = c @ np.linalg.inv(a)
    residual = max_abs(phi.conj().T @ phi - np.eye(k))
    if residual > eps_alg:
        raise LagrangianValidationError(
            f"graph map is not unitary: residual {residual:.3e}"
        )
    return phi


def lagrangian_from_graph(
    space: HermitianSymplecticSpace,
    unitary,
    splitting: EigenSplitting | None = None,
    *,
    eps_alg: float = EPS_ALG,
    eps_rank: float = EPS_RANK,
) -> Lagrangian:
    """Lagrangian with the given graph unitary; inverse of :func:`phi_of`."""
    if splitting is None:
        splitting = eigensplit(space, eps_alg=eps_alg, eps_rank=eps_rank)
    u = as_complex_matrix(unitary, "unitary")
    k = space.half_dim
    if u.shape != (k, k):
        raise ValidationError(f"unitary must have shape ({k}, {k}), got {u.shape}")
    basis = splitting.plus_basis + splitting.minus_basis @ u
    return lagrangian_from_basis(space, basis, eps_alg=eps_alg, eps_rank=eps_rank)


def orthogonal_complement_basis(
    space: HermitianSymplecticSpace, basis, *, eps_rank: float = EPS_RANK
) -> np.ndarray:
    """Gram-orthonormal basis of the gram-orthogonal complement of a span."""
    return linalg.gram_complement(space.gram, as_complex_matrix(basis), eps_rank)


def subspace_distance(v: Lagrangian, w: Lagrangian) -> float:
    """sin of the largest principal angle between two Lagrangians."""
    _require_same_space(v.space, w.space)
    return linalg.subspace_distance(v.space.gram, v.basis, w.basis)
