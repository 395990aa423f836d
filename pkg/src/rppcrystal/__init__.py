"""Crystal structure on reverse plane partitions and the Littlewood-Richardson
rule for dual stable Grothendieck polynomials."""

from .errors import (
    InternalInvariant, InvalidFilling, NotContained, NotSymmetric, NotWeaklyDecreasing,
    ReconstructionFailed,
)
from .reading import height_vector, reading_word, reconstruct
from .rpp_crystal import (
    crystal_graph, find_descents, is_benign, lower_rpp, raise_rpp, resolve_all, resolve_step,
    restrict,
)
from .shapes import Partition, SkewShape, conjugate, make_partition, parse_shape, skew
from .symfunc import (
    SparsePoly, elegant_count, expand_in_schur, g_poly, g_refined, h_coeffs, h_coeffs_refined,
    lr_classical, schur, skew_schur,
)
from .tableaux import Filling, ceq, enumerate_elegant, enumerate_rpp, enumerate_ssyt, rpp_weight
from .word_crystal import is_lattice, lower_word, pairing, raise_word, word_weight

__version__ = "0.1.0"
