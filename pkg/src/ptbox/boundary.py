"""Boundary-condition families for the particle in a box.

A box eigenproblem on [0, L] is closed by one Robin-type relation at each
wall, psi(0) = lambda1 psi'(0) and psi(L) = lambda2 psi'(L); the pair
(lambda1, lambda2) fully characterizes the domain of the Hamiltonian.
Hermitian boxes have both lambdas real. PT-symmetric boxes form the two-real-
parameter family (ell1 + i ell2, -ell1 + i ell2), i.e. lambda2 = -lambda1*.
The two families intersect exactly on the line ell2 = 0 (lambda2 = -lambda1,
both real). The Neumann wall (lambda = infinity) is deliberately excluded:
classification is defined for finite pairs only.

A ring threaded by flux replaces the wall conditions with a twisted matching
condition psi(L) = lambda psi(0) (and likewise for psi'); PT symmetry forces
that twist parameter to be real, hermiticity forces it to be unimodular.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

# absolute tolerance for all boundary classification comparisons
TAU_BC = 1e-12


@dataclass(frozen=True)
class BoundaryPair:
    lambda1: complex   # psi(0)  = lambda1 * psi'(0)
    lambda2: complex   # psi(L)  = lambda2 * psi'(L)


@dataclass(frozen=True)
class PTBoundaryParams:
    ell1: float   # real part of the left boundary length
    ell2: float   # shared imaginary part; ell2 = 0 is the hermitian overlap

    def __post_init__(self):
        for name in ("ell1", "ell2"):
            v = getattr(self, name)
            if isinstance(v, complex) or not (float("-inf") < float(v) < float("inf")):
                raise ValueError(f"{name} must be a finite real number")


class BoundaryClass(enum.Enum):
    HERMITIAN = "hermitian"
    PT_SYMMETRIC = "pt-symmetric"
    BOTH = "both"
    NEITHER = "neither"


@dataclass(frozen=True)
class RingTwist:
    lam: complex   # twist parameter of the flux-threaded ring


def pt_pair(params: PTBoundaryParams) -> BoundaryPair:
    """The PT-symmetric pair (ell1 + i ell2, -ell1 + i ell2)."""
    l1 = complex(params.ell1, params.ell2)
    l2 = complex(-params.ell1, params.ell2)
    return BoundaryPair(l1, l2)


def adjoint_pair(pair: BoundaryPair) -> BoundaryPair:
    """Boundary pair of the adjoint Hamiltonian: conjugate both entries."""
    return BoundaryPair(
        complex(pair.lambda1).conjugate(),
        complex(pair.lambda2).conjugate(),
    )


def classify(pair: BoundaryPair, tol: float = TAU_BC) -> BoundaryClass:
    """Classify a boundary pair as hermitian, PT-symmetric, both, or neither."""
    l1 = complex(pair.lambda1)
    l2 = complex(pair.lambda2)
    hermitian = abs(l1.imag) <= tol and abs(l2.imag) <= tol
    pt = abs(l2 + l1.conjugate()) <= tol
    if hermitian and pt:
        return BoundaryClass.BOTH
    if hermitian:
        return BoundaryClass.HERMITIAN
    if pt:
        return BoundaryClass.PT_SYMMETRIC
    return BoundaryClass.NEITHER


def ring_is_pt(twist: RingTwist, tol: float = TAU_BC) -> bool:
    """PT symmetry of the twisted ring: the twist parameter must be real."""
    return abs(complex(twist.lam).imag) <= tol


def ring_is_hermitian(twist: RingTwist, tol: float = TAU_BC) -> bool:
    """Hermiticity of the twisted ring: the twist must be unimodular."""
    return abs(abs(complex(twist.lam)) - 1.0) <= tol
