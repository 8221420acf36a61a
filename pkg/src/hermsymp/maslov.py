"""Invariants of Lagrangian pairs and triples.

The pair invariant compares two Lagrangians V, W through the unitary
``-phi(V) phi(W)*``.  With the logarithm branch
``log(r e^{i t}) = ln r + i t`` for ``-pi < t <= pi``, it is

    m(V, W) = -(1/pi) * sum of angles of the eigenvalues different from -1.

The multiplicity of the eigenvalue -1 always equals dim(V & W); the excluded
count is cross-checked against the intersection dimension and any mismatch is
a hard error, because disagreement means the numerics are untrustworthy.  The
invariant is genuinely discontinuous where an eigenvalue crosses -1, so
eigenvalues too close to the branch point (but not close enough to exclude)
raise :class:`~hermsymp.errors.EigenvalueAmbiguity` rather than returning a
meaningless value.

The triple index ``m(U,V) + m(V,W) + m(W,U)`` is an integer depending only on
the underlying symplectic form; it is rounded under an integrality guard.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EigenvalueAmbiguity, ExclusionMismatch, NonIntegerSum
from .spaces import (
    EPS_EIG,
    EPS_INT,
    EPS_RANK,
    EigenSplitting,
    Lagrangian,
    _require_same_space,
    eigensplit,
    gamma_image,
    intersection_dim,
    phi_of,
)


@dataclass(frozen=True)
class PairSpectrum:
    """Pair invariant together with the spectral data that produced it."""

    value: float
    intersection_dim: int
    excluded: int
    eigenvalues: tuple[complex, ...]


def m_details(
    v: Lagrangian,
    w: Lagrangian,
    *,
    splitting: EigenSplitting | None = None,
    eps_eig: float = EPS_EIG,
    eps_rank: float = EPS_RANK,
) -> PairSpectrum:
    """Pair invariant of (V, W) with eigenvalues sorted by angle."""
    _require_same_space(v.space, w.space)
    if splitting is None and v.space.half_dim:
        splitting = eigensplit(v.space)
    phi_v = phi_of(v, splitting)
    phi_w = phi_of(w, splitting)
    eigs = np.linalg.eigvals(-phi_v @ phi_w.conj().T)
    excluded = 0
    total = 0.0
    for lam in eigs:
        dist = abs(lam + 1.0)
        if dist <= eps_eig:
            excluded += 1
            continue
        if dist < 100.0 * eps_eig:
            raise EigenvalueAmbiguity(
                f"eigenvalue {lam:.12g} lies {dist:.3e} from -1, inside the "
                f"ambiguity band (eps_eig={eps_eig:.0e}); the invariant is "
                "discontinuous here"
            )
        total += math.atan2(lam.imag, lam.real)
    idim = intersection_dim(v, w, eps_rank=eps_rank)
    if excluded != idim:
        raise ExclusionMismatch(
            f"{excluded} eigenvalues excluded at -1 but dim(V & W) = {idim}"
        )
    value = -total / math.pi
    if value == 0.0:
        value = 0.0  # normalize -0.0
    ordered = tuple(
        sorted(
            (complex(z) for z in eigs),
            key=lambda z: (math.atan2(z.imag, z.real), z.real, z.imag),
        )
    )
    return PairSpectrum(
        value=value, intersection_dim=idim, excluded=excluded, eigenvalues=ordered
    )


def m_invariant(
    v: Lagrangian,
    w: Lagrangian,
    *,
    splitting: EigenSplitting | None = None,
    eps_eig: float = EPS_EIG,
    eps_rank: float = EPS_RANK,
) -> float:
    return m_details(v, w, splitting=splitting, eps_eig=eps_eig, eps_rank=eps_rank).value


def triple_index(
    u: Lagrangian,
    v: Lagrangian,
    w: Lagrangian,
    *,
    splitting: EigenSplitting | None = None,
    eps_int: float = EPS_INT,
    eps_eig: float = EPS_EIG,
    eps_rank: float = EPS_RANK,
) -> int:
    """Integer triple index m(U,V) + m(V,W) + m(W,U).

    Raises :class:`NonIntegerSum` if the real sum is farther than ``eps_int``
    from an integer, which signals numerical breakdown or invalid inputs.
    """
    total = (
        m_invariant(u, v, splitting=splitting, eps_eig=eps_eig, eps_rank=eps_rank)
        + m_invariant(v, w, splitting=splitting, eps_eig=eps_eig, eps_rank=eps_rank)
        + m_invariant(w, u, splitting=splitting, eps_eig=eps_eig, eps_rank=eps_rank)
    )
    nearest = round(total)
    if abs(total - nearest) > eps_int:
        raise NonIntegerSum(
            f"triple index sum {total!r} is {abs(total - nearest):.3e} from an integer"
        )
    return int(nearest)


def eta_correction_rhs(
    vx: Lagrangian,
    vy: Lagrangian,
    wx: Lagrangian,
    wy: Lagrangian,
    *,
    splitting: EigenSplitting | None = None,
    eps_int: float = EPS_INT,
    eps_eig: float = EPS_EIG,
    eps_rank: float = EPS_RANK,
) -> tuple[float, int]:
    """Finite-dimensional correction for cutting and pasting with arbitrary
    boundary Lagrangians.

    Returns the pair ``(m(WX, WY), sigma(VX, VY, gamma WY) - sigma(gamma VX,
    WX, WY))``: the real pair invariant plus the integer defect by which the
    glued quantity differs from the sum of the pieces.  Internally verifies
    the equivalent chain ``m(VX,VY) - m(gamma VX, WX) + m(gamma VY, WY) -
    m(WX,WY)`` against the integer within ``eps_int``.
    """
    kw = dict(splitting=splitting, eps_eig=eps_eig, eps_rank=eps_rank)
    g_vx = gamma_image(vx)
    g_vy = gamma_image(vy)
    g_wy = gamma_image(wy)
    first = triple_index(vx, vy, g_wy, eps_int=eps_int, **kw)
    second = triple_index(g_vx, wx, wy, eps_int=eps_int, **kw)
    integer = first - second
    m_wx_wy = m_invariant(wx, wy, **kw)
    chain = (
        m_invariant(vx, vy, **kw)
        - m_invariant(g_vx, wx, **kw)
        + m_invariant(g_vy, wy, **kw)
        - m_wx_wy
    )
    if abs(chain - integer) > eps_int:
        raise NonIntegerSum(
            f"correction chain {chain!r} disagrees with integer part {integer}"
        )
    return m_wx_wy, integer
