"""Exception types shared across the library.

Numerical failure modes are first-class conditions here, never silent NaNs:
callers can tell a pathological parameter set (BracketFailure, CatastrophePoint,
DeltaPole, ...) apart from a genuine bug.
"""


class PTBoxError(Exception):
    """Base class for all library errors."""


# --- spectrum / root finding ---------------------------------------------

class BracketFailure(PTBoxError):
    """Sign-change scan could not isolate the requested number of real roots."""


class ContourOnZero(PTBoxError):
    """Winding contour passes too close to a zero; perturb the region."""


class NotMaximallyNonHermitian(PTBoxError):
    """Operation requires the ell1 = 0 boundary family."""


class OutOfDomain(PTBoxError):
    """Evaluation point lies outside [0, L]."""


class CatastrophePoint(PTBoxError):
    """Mode is self-orthogonal under the PT inner product (ell2 = L/(pi n));
    the biorthogonal normalization diverges there."""


# --- inner products -------------------------------------------------------

class GridMismatch(PTBoxError):
    """Sampled wavefunctions live on incompatible grids."""


# --- variational ----------------------------------------------------------

class DimensionMismatch(PTBoxError):
    """Matrix blocks do not share a common square shape."""


class NotSelfAdjoint(PTBoxError):
    """Hamiltonian is not self-adjoint under the indefinite S pairing."""


class NoConvergence(PTBoxError):
    """A Newton start failed to converge (reported per start, not fatal)."""


class BrokenPT(PTBoxError):
    """An eigenvalue with nonzero imaginary part was encountered where the
    variational equivalence assumes reality."""


# --- em scattering --------------------------------------------------------

class PoleAtInterface(PTBoxError):
    """Interface reflection coefficient has a vanishing denominator."""


class NotParitySymmetric(PTBoxError):
    """Transfer matrix is not of the parity-symmetric form (t12 != -t21)."""


class DegenerateD(PTBoxError):
    """S-matrix pole (lasing threshold): slab parametrization undefined."""


class SMatrixPole(PTBoxError):
    """Transfer matrix has |t22| ~ 0; scattering matrix diverges (lasing)."""


class DeltaPole(PTBoxError):
    """sinh^2(mu) cosh^2(theta) = 1: Fano asymmetry parameter diverges."""


class FitDiverged(PTBoxError):
    """Gauss-Newton lineshape fit failed to converge."""


class MultiplePeaks(PTBoxError):
    """Fit window contains more than one transmission maximum."""


# --- kernels ---------------------------------------------------------------

class CoincidentPoints(PTBoxError):
    """Closed-form kernel requested at x = x' where it diverges."""
