"""Local and global avalanche characteristics of Boolean functions."""
from .construct import (
    BlockLetter,
    BlockSequence,
    ConstructionError,
    base_block,
    blockseq_of,
    function_of,
    inner_g,
    is_blockwise_affine,
    opposite,
    parse_blocks,
    format_blocks,
    sac_concat,
    theorem2_family,
)
from .core import (
    Anf,
    AutocorrVector,
    BooleanFunction,
    WalshSpectrum,
    autocorrelation,
    complement,
    concat,
    derivative_weight,
    distance,
    from_anf,
    is_balanced,
    parse_anf,
    parse_hex,
    to_anf,
    to_hex,
    unit,
    walsh_transform,
    weight,
    xor,
)
from .criteria import (
    BoundsReport,
    GacReport,
    analyze,
    bounds_report,
    gac_indicators,
    linear_structures,
    nonlinearity,
    pc_profile,
    sac_check_blockwise,
)
from .report import AnalysisReport, build_report

__version__ = "0.1.0"
