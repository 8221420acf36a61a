"""Lagrangian propagation across bordisms as linear canonical relations.

A bordism from a boundary piece with space H0 to a piece with space H1 is
modeled by a Lagrangian subspace of the product H0^- (+) H1, where H0^- is H0
with its complex structure reversed.  The sign flip encodes the boundary
orientation convention under which graphs of symplectic-form-preserving maps
are Lagrangian; without it they are not, and the composition and reduction
laws below fail.

Relation composition is defined set-theoretically and never requires
transversality; the routines only flag numerical (not geometric) degeneracy.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import RankCollapse, ValidationError
from .linalg import as_complex_matrix, gram_mgs
from .spaces import (
    EPS_ALG,
    EPS_RANK,
    HermitianSymplecticSpace,
    Lagrangian,
    direct_sum,
    gamma_image,
    lagrangian_from_basis,
    negated,
    same_space,
    zero_space,
)


@dataclass(frozen=True)
class BordismRelation:
    """Linear canonical relation from ``source`` to ``target``.

    ``graph`` is a Lagrangian in ``direct_sum(negated(source), target)``.
    """

    source: HermitianSymplecticSpace
    target: HermitianSymplecticSpace
    graph: Lagrangian

    def __post_init__(self) -> None:
        prod = direct_sum(negated(self.source), self.target)
        if not same_space(self.graph.space, prod):
            raise ValidationError(
                "graph must live in the flipped-source product space"
            )


def relation_from_graph(
    source: HermitianSymplecticSpace,
    target: HermitianSymplecticSpace,
    basis,
    *,
    eps_alg: float = EPS_ALG,
    eps_rank: float = EPS_RANK,
) -> BordismRelation:
    """Build and validate a relation from a spanning matrix of its graph."""
    prod = direct_sum(negated(source), target)
    graph = lagrangian_from_basis(prod, basis, eps_alg=eps_alg, eps_rank=eps_rank)
    return BordismRelation(source=source, target=target, graph=graph)


def identity_relation(space: HermitianSymplecticSpace) -> BordismRelation:
    """The cylinder: graph of the identity map, neutral for composition."""
    n = space.dim
    basis = np.vstack([np.eye(n, dtype=np.complex128), np.eye(n, dtype=np.complex128)])
    return relation_from_graph(space, space, basis)


def relation_from_map(
    source: HermitianSymplecticSpace,
    target: HermitianSymplecticSpace,
    matrix,
    *,
    eps_alg: float = EPS_ALG,
    eps_rank: float = EPS_RANK,
) -> BordismRelation:
    """Relation given by the graph of a symplectic-form-preserving map.

    Validation rejects matrices that do not preserve the form, since their
    graphs are not Lagrangian in the flipped product.
    """
    mat = as_complex_matrix(matrix, "matrix")
    if mat.shape != (target.dim, source.dim):
        raise ValidationError(
            f"matrix must have shape ({target.dim}, {source.dim}), got {mat.shape}"
        )
    basis = np.vstack([np.eye(source.dim, dtype=np.complex128), mat])
    return relation_from_graph(source, target, basis, eps_alg=eps_alg, eps_rank=eps_rank)


def lagrangian_relation(target_lagrangian: Lagrangian) -> BordismRelation:
    """Relation out of the zero space: a bare Lagrangian in the target."""
    src = zero_space()
    return relation_from_graph(
        src, target_lagrangian.space, target_lagrangian.basis
    )


def reduce(
    rel: BordismRelation,
    w: Lagrangian,
    *,
    eps_alg: float = EPS_ALG,
    eps_rank: float = EPS_RANK,
) -> Lagrangian:
    """Propagate a source Lagrangian across the relation.

    Computes the projection onto the target factor of the intersection of the
    graph with ``W (+) H1`` (symplectic reduction, which takes Lagrangians to
    Lagrangians), then re-orthonormalizes.  Raises :class:`RankCollapse` when
    the projected span does not have the Lagrangian dimension, which signals a
    numerically degenerate intersection.
    """
    if not same_space(w.space, rel.source):
        raise ValidationError("Lagrangian does not live in the relation's source")
    d0, d1 = rel.source.dim, rel.target.dim
    k1 = rel.target.half_dim
    kw = w.basis.shape[1]
    coisotropic = np.zeros((d0 + d1, kw + d1), dtype=np.complex128)
    coisotropic[:d0, :kw] = w.basis
    coisotropic[d0:, kw:] = np.eye(d1)
    inter = linalg.span_intersection(rel.graph.basis, coisotropic, eps_rank)
    projected = inter[d0:, :]
    q = gram_mgs(rel.target.gram, projected, drop_tol=eps_rank)
    if q.shape[1] != k1:
        raise RankCollapse(
            f"reduced span has dimension {q.shape[1]}, expected {k1}"
        )
    return lagrangian_from_basis(rel.target, q, eps_alg=eps_alg, eps_rank=eps_rank)


def compose(
    rel1: BordismRelation,
    rel2: BordismRelation,
    *,
    eps_alg: float = EPS_ALG,
    eps_rank: float = EPS_RANK,
) -> BordismRelation:
    """Set-theoretic composition: pairs (x, z) admitting a matching middle y.

    ``rel1`` maps H0 to H1 and ``rel2`` maps H1 to H2; the result maps H0 to
    H2 and reduces through ``rel2`` after ``rel1`` on every Lagrangian.
    """
    if not same_space(rel1.target, rel2.source):
        raise ValidationError("relations are not composable: middle spaces differ")
    d0 = rel1.source.dim
    d1 = rel1.target.dim
    d2 = rel2.target.dim
    b1 = rel1.graph.basis
    b2 = rel2.graph.basis
    match = np.hstack([b1[d0:, :], -b2[:d1, :]])
    null = linalg.nullspace(match, eps_rank)
    c1 = null[: b1.shape[1], :]
    c2 = null[b1.shape[1] :, :]
    candidate = np.vstack([b1[:d0, :] @ c1, b2[d1:, :] @ c2])
    prod = direct_sum(negated(rel1.source), rel2.target)
    q = gram_mgs(prod.gram, candidate, drop_tol=eps_rank)
    expected = (d0 + d2) // 2
    if q.shape[1] != expected:
        raise RankCollapse(
            f"composed relation has dimension {q.shape[1]}, expected {expected}"
        )
    return relation_from_graph(
        rel1.source, rel2.target, q, eps_alg=eps_alg, eps_rank=eps_rank
    )


def glued_boundary_lagrangian(
    w: Lagrangian,
    rel: BordismRelation,
    *,
    eps_alg: float = EPS_ALG,
    eps_rank: float = EPS_RANK,
) -> Lagrangian:
    """gamma0(W) (+) reduce(rel, W) as a Lagrangian of the unflipped product.

    This is the boundary condition induced on the whole boundary of the
    bordism by capping the source side with a piece carrying W; the product
    here carries the standard complex structure on both factors.
    """
    if not same_space(w.space, rel.source):
        raise ValidationError("Lagrangian does not live in the relation's source")
    gw = gamma_image(w, eps_alg=eps_alg, eps_rank=eps_rank)
    lw = reduce(rel, w, eps_alg=eps_alg, eps_rank=eps_rank)
    basis = linalg.block_diag(gw.basis, lw.basis)
    prod = direct_sum(rel.source, rel.target)
    return lagrangian_from_basis(prod, basis, eps_alg=eps_alg, eps_rank=eps_rank)


def relation_distance(a: BordismRelation, b: BordismRelation) -> float:
    """Subspace distance between the graphs of two parallel relations."""
    if not (same_space(a.source, b.source) and same_space(a.target, b.target)):
        raise ValidationError("relations do not share source and target")
    return linalg.subspace_distance(a.graph.space.gram, a.graph.basis, b.graph.basis)
