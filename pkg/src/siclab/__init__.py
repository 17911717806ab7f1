"""siclab: numerical search, certification, and simplex geometry of SIC-POVMs."""

__version__ = "0.1.0"

from .linalg import (
    DensityMatrix,
    HermitianMatrix,
    SquareMatrix,
    StateVector,
    UnitaryOperator,
    apply_unitary,
    conjugate,
    hermitian_part,
    hs_distance_sq,
    inner,
    jacobi_eigenvalues,
    min_eigenvalue,
    projector,
)
from .weyl import DisplacementIndex, SicEnsemble, clock, displacement, orbit, shift
from .verify import (
    VerificationReport,
    equiangularity_residual,
    frame_potential,
    frame_potential_bound,
    identity_residual,
    info_completeness_rank,
    overlap_matrix,
    verify,
)
from .fiducial import (
    SearchConfig,
    SearchResult,
    gauge_fixed,
    loss,
    loss_gradient,
    loss_of_params,
    optimize,
    search,
)
from .geometry import (
    MomentImage,
    ProjectivePoint,
    SimplexReport,
    hermitian_basis,
    hermitian_coords,
    moment_map,
    outsphere_radius,
    sic_simplex_report,
    simplex_membership,
    simplex_preimage,
    vertex_images,
)

__all__ = [
    "__version__",
    "StateVector", "SquareMatrix", "HermitianMatrix", "DensityMatrix",
    "UnitaryOperator", "inner", "projector", "hs_distance_sq",
    "apply_unitary", "conjugate", "hermitian_part", "jacobi_eigenvalues",
    "min_eigenvalue",
    "DisplacementIndex", "SicEnsemble", "clock", "shift", "displacement",
    "orbit",
    "VerificationReport", "overlap_matrix", "equiangularity_residual",
    "identity_residual", "info_completeness_rank", "frame_potential",
    "frame_potential_bound", "verify",
    "SearchConfig", "SearchResult", "loss", "loss_gradient", "loss_of_params",
    "optimize", "search", "gauge_fixed",
    "ProjectivePoint", "MomentImage", "SimplexReport", "moment_map",
    "vertex_images", "simplex_membership", "simplex_preimage",
    "hermitian_basis", "hermitian_coords", "outsphere_radius",
    "sic_simplex_report",
]
