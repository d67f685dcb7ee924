"""In-place truncated transforms and constant-workspace polynomial products.

Forward/inverse transforms of any length n (not just powers of two) over
an NTT-friendly prime field, computed inside the caller's buffer with
O(n log n) ring operations and a constant number of auxiliary scalars,
plus a polynomial multiplier that works entirely inside its output
buffer.  A compiled kernel is used when built; the pure-Python fallback
computes identical values and identical operation counts.
"""

from .backend import backend_name
from .modring import (
    LevelRoots,
    OpCounters,
    RingConfig,
    RingConfigError,
    RootPairIterator,
    UnsupportedSizeError,
    ceil_lg,
    config_for_modulus,
    default_config,
    is_probable_prime,
    make_buffer,
    omega,
    revbin,
    revbin_increment,
    ring_add,
    ring_mul,
    ring_pow,
    ring_sub,
    root_of_level,
    root_pairs,
    zeros,
)
from .oracle import OpCountReport, audited_call, naive_dft, schoolbook_mul
from .polymul import BlockStep, block_schedule, fold_twist, horner_eval, multiply
from .transforms import (
    butterfly_block_forward,
    butterfly_block_inverse,
    fft_pow2,
    itft,
    odd_tail_correction_forward,
    odd_tail_correction_inverse,
    tft,
)
from .tree import (
    ROOT,
    Node,
    even,
    first_leaf,
    is_leaf,
    node_elements,
    node_len,
    odd,
    parent,
    rising_parent,
)

__version__ = "0.1.0"

__all__ = [
    "BlockStep",
    "LevelRoots",
    "Node",
    "OpCounters",
    "OpCountReport",
    "ROOT",
    "RingConfig",
    "RingConfigError",
    "RootPairIterator",
    "UnsupportedSizeError",
    "audited_call",
    "backend_name",
    "block_schedule",
    "butterfly_block_forward",
    "butterfly_block_inverse",
    "ceil_lg",
    "config_for_modulus",
    "default_config",
    "even",
    "fft_pow2",
    "first_leaf",
    "fold_twist",
    "horner_eval",
    "is_leaf",
    "is_probable_prime",
    "itft",
    "make_buffer",
    "multiply",
    "naive_dft",
    "node_elements",
    "node_len",
    "odd",
    "odd_tail_correction_forward",
    "odd_tail_correction_inverse",
    "omega",
    "parent",
    "revbin",
    "revbin_increment",
    "ring_add",
    "ring_mul",
    "ring_pow",
    "ring_sub",
    "rising_parent",
    "root_of_level",
    "root_pairs",
    "schoolbook_mul",
    "tft",
    "zeros",
    "__version__",
]
