"""Principal angles, Ritz values and graph Laplacian spectra, with numeric
checks of the weak-majorization bounds that relate them."""

from .config import TOL, Tolerances
from .errors import InputError, NumericalError, SubmajError
from .graphs import (
    ComparisonReport,
    Graph,
    SpectrumReport,
    complete_graph,
    edge_laplacian,
    edge_selector,
    incidence_matrix,
    laplacian_spectrum,
    spectra_compare,
    vertex_laplacian,
)
from .linalg import EigDecomposition, SvdDecomposition, orthonormalize, sqrt_psd, svd, sym_eig
from .majorization import MajorizationReport, OrderedVector, abs_diff, sort_desc, weak_majorizes
from .ritz import (
    Dilation,
    RitzCheck,
    RitzSet,
    dilate_to_projector,
    embed_trial,
    local_spread,
    normalize_spectrum,
    ritz_perturbation_check,
    ritz_values,
    spread,
)
from .subspaces import (
    AngleSet,
    Subspace,
    complement,
    principal_angles,
    projector,
    projector_difference_singvals,
    subspace_from_columns,
)

__version__ = "0.1.0"
