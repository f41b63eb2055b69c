from .complexes import (ChainComplex, ChainMap, ChainComplexError,
                        shift, direct_sum, tensor, tensor_maps, mapping_cone)
from .hocolim import ZigzagDiagram, HocolimResult, hocolim_zigzag, hocolim_map
from .homology import HomologySummary, homology, matrix_rank, betti_convolution, RATIONAL, INTEGRAL
from .serialization import read_chain_complex, write_chain_complex, parse_chain_complex, format_chain_complex
