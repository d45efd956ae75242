"""Exact sector theory of code nets over the c = 1/2 Virasoro net.

Binary-code algebra, Ising modular data, alpha-induction accounting and
certificates for holomorphic framed extensions with structure codes (C, D).
"""

from .codes import (
    BinaryCode,
    BitWord,
    build_chain,
    direct_sum,
    divisibility_class,
    dual,
    macwilliams_dual_enumerator,
    make_code,
    puncture_off_support,
    reed_muller,
    subcode_supported_on,
    weight_enumerator,
)
from .errors import (
    CapacityError,
    ConstructionFailure,
    DegeneracyError,
    FramedNetError,
    InputError,
    InvalidModularData,
    LiftingError,
    ModelInconsistency,
)
from .extension import (
    StructureCodes,
    build_delta,
    certify_main_theorem,
    check_ly_conditions,
    check_structure_codes,
    holomorphic_mu,
)
from .induction import alpha_classes, beta_report, full_report, hom_alpha, lifts
from .ising import DyadicRootTwo, IsingLabel, SixteenthWeight, fuse, s_matrix, verlinde_fusion_from_s
from .pointed import PointedModularData, bicharacter_nondegenerate, order_two_theorem, y_entry
from .sectors import Sector, SectorSum, act, code_sector, fuse_sectors, tau_word, tensor_s_entry

__version__ = "0.1.0"
