from .polymatrix import (
    PolymatrixGame,
    brute_force_polymatrix_psne,
    lig_to_polymatrix,
    polymatrix_from_dict,
    polymatrix_is_psne,
    polymatrix_payoff,
    polymatrix_to_dict,
    polymatrix_to_lig,
    read_polymatrix,
    write_polymatrix,
)
from .encoding import is_psne_zero_one, to_pm1_actions, to_zero_one_actions, zero_one_to_pm1
from .potential import (
    INDISCRIMINATE_ORDINAL,
    NONE_DETECTED,
    SYMMETRIC_EXACT,
    PotentialKind,
    detect_potential,
    local_maxima,
    potential_value,
)

__all__ = [
    "PolymatrixGame",
    "lig_to_polymatrix",
    "polymatrix_to_lig",
    "polymatrix_payoff",
    "polymatrix_is_psne",
    "brute_force_polymatrix_psne",
    "polymatrix_to_dict",
    "polymatrix_from_dict",
    "read_polymatrix",
    "write_polymatrix",
    "zero_one_to_pm1",
    "is_psne_zero_one",
    "to_pm1_actions",
    "to_zero_one_actions",
    "PotentialKind",
    "SYMMETRIC_EXACT",
    "INDISCRIMINATE_ORDINAL",
    "NONE_DETECTED",
    "detect_potential",
    "potential_value",
    "local_maxima",
]
