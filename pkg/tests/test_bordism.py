"""Linear canonical relations: reduction, composition, gluing."""
import numpy as np
import pytest

import hermsymp as hs
from hermsymp import bordism, linalg, sampling


def test_identity_relation_reduces_to_input(rng):
    space = sampling.random_space(2, rng)
    ident = bordism.identity_relation(space)
    for _ in range(5):
        lagr = sampling.random_lagrangian(space, rng)
        assert hs.subspace_distance(bordism.reduce(ident, lagr), lagr) < 1e-10


def test_zero_source_relation_reduces_to_its_lagrangian(rng):
    target = sampling.random_space(2, rng)
    v1 = sampling.random_lagrangian(target, rng)
    rel = bordism.lagrangian_relation(v1)
    empty = hs.lagrangian_from_basis(hs.zero_space(), np.zeros((0, 0)))
    assert hs.subspace_distance(bordism.reduce(rel, empty), v1) < 1e-12


def test_reduce_outputs_valid_lagrangians(rng):
    source = sampling.random_space(2, rng)
    target = sampling.random_space(2, rng)
    for _ in range(10):
        rel = sampling.random_bordism_relation(source, target, rng)
        lagr = sampling.random_lagrangian(source, rng)
        out = bordism.reduce(rel, lagr)
        assert out.half_dim == target.half_dim
        residual = np.max(np.abs(out.basis.conj().T @ target.omega() @ out.basis))
        assert residual < 1e-10


def test_cylinder_neutral_for_compose(rng):
    source = sampling.random_space(2, rng)
    target = sampling.random_space(3, rng)
    rel = sampling.random_bordism_relation(source, target, rng)
    left = bordism.compose(bordism.identity_relation(source), rel)
    right = bordism.compose(rel, bordism.identity_relation(target))
    assert bordism.relation_distance(left, rel) < 1e-10
    assert bordism.relation_distance(right, rel) < 1e-10


def test_functoriality_reduce_after_compose(rng):
    h0 = sampling.random_space(2, rng)
    h1 = sampling.random_space(2, rng)
    h2 = sampling.random_space(1, rng)
    for _ in range(5):
        rel1 = sampling.random_bordism_relation(h0, h1, rng)
        rel2 = sampling.random_bordism_relation(h1, h2, rng)
        lagr = sampling.random_lagrangian(h0, rng)
        one_step = bordism.reduce(bordism.compose(rel1, rel2), lagr)
        two_step = bordism.reduce(rel2, bordism.reduce(rel1, lagr))
        assert hs.subspace_distance(one_step, two_step) < 1e-8


def test_compose_associative(rng):
    spaces = [sampling.random_space(k, rng) for k in (1, 2, 2, 1)]
    rels = [
        sampling.random_bordism_relation(spaces[i], spaces[i + 1], rng)
        for i in range(3)
    ]
    left = bordism.compose(bordism.compose(rels[0], rels[1]), rels[2])
    right = bordism.compose(rels[0], bordism.compose(rels[1], rels[2]))
    assert bordism.relation_distance(left, right) < 1e-8


def test_compose_of_map_graphs_is_graph_of_composition(rng):
    space = sampling.random_space(2, rng)
    omega = space.omega()
    s1 = sampling.form_preserving_map(omega, rng)
    s2 = sampling.form_preserving_map(omega, rng)
    rel1 = bordism.relation_from_map(space, space, s1)
    rel2 = bordism.relation_from_map(space, space, s2)
    composed = bordism.compose(rel1, rel2)
    direct = bordism.relation_from_map(space, space, s2 @ s1)
    assert bordism.relation_distance(composed, direct) < 1e-10


def test_relation_from_map_rejects_non_preserving(rng):
    space = sampling.random_space(2, rng)
    with pytest.raises(hs.LagrangianValidationError):
        bordism.relation_from_map(space, space, 2.0 * np.eye(space.dim))


def test_glued_boundary_lagrangian_identity_relation(rng):
    space = sampling.random_space(2, rng)
    ident = bordism.identity_relation(space)
    lagr = sampling.random_lagrangian(space, rng)
    glued = bordism.glued_boundary_lagrangian(lagr, ident)
    expected = linalg.block_diag(hs.gamma_image(lagr).basis, lagr.basis)
    prod = hs.direct_sum(space, space)
    direct = hs.lagrangian_from_basis(prod, expected)
    assert hs.subspace_distance(glued, direct) < 1e-12


def test_glued_boundary_lagrangian_random(rng):
    source = sampling.random_space(2, rng)
    target = sampling.random_space(2, rng)
    for _ in range(5):
        rel = sampling.random_bordism_relation(source, target, rng)
        lagr = sampling.random_lagrangian(source, rng)
        glued = bordism.glued_boundary_lagrangian(lagr, rel)
        assert glued.half_dim == 4
        prod = hs.direct_sum(source, target)
        residual = np.max(np.abs(glued.basis.conj().T @ prod.omega() @ glued.basis))
        assert residual < 1e-10


def test_glued_boundary_zero_source(rng):
    target = sampling.random_space(2, rng)
    v1 = sampling.random_lagrangian(target, rng)
    rel = bordism.lagrangian_relation(v1)
    empty = hs.lagrangian_from_basis(hs.zero_space(), np.zeros((0, 0)))
    glued = bordism.glued_boundary_lagrangian(empty, rel)
    assert hs.subspace_distance(glued, v1) < 1e-12


def test_compose_through_zero_dimensional_middle(rng):
    # Composing through a point gives the product relation V1 x V2.
    h0 = sampling.random_space(1, rng)
    h2 = sampling.random_space(2, rng)
    middle = hs.zero_space()
    rel1 = sampling.random_bordism_relation(h0, middle, rng)
    rel2 = sampling.random_bordism_relation(middle, h2, rng)
    composed = bordism.compose(rel1, rel2)
    expected = bordism.relation_from_graph(
        h0, h2, linalg.block_diag(rel1.graph.basis, rel2.graph.basis)
    )
    assert bordism.relation_distance(composed, expected) < 1e-10


def test_reduce_into_zero_dimensional_target(rng):
    h0 = sampling.random_space(2, rng)
    rel = sampling.random_bordism_relation(h0, hs.zero_space(), rng)
    out = bordism.reduce(rel, sampling.random_lagrangian(h0, rng))
    assert out.half_dim == 0


def test_mismatched_spaces_rejected(rng):
    h0 = sampling.random_space(2, rng)
    h1 = sampling.random_space(2, rng)
    h2 = sampling.random_space(1, rng)
    rel1 = sampling.random_bordism_relation(h0, h1, rng)
    rel2 = sampling.random_bordism_relation(h2, h0, rng)
    with pytest.raises(hs.ValidationError):
        bordism.compose(rel1, rel2)
    with pytest.raises(hs.ValidationError):
        bordism.reduce(rel1, sampling.random_lagrangian(h2, rng))
