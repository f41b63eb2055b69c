from .complexes import (OrderedComplex, SimplicialMap, ConstraintSet,
                        ComplexValidationError, GraphError, ValidationReport,
                        validate, close_faces, staircase_product, staircase_size, projection_map,
                        constrained_subcomplex, relabel_coordinates,
                        barycentric_subdivide, subdivide_edges,
                        point, two_points, path_graph, cycle_graph, simplex,
                        simplex_boundary, real_projective_plane)
from .chains import chains, induced_map, constrained_cells, drop_last_factor
from .io import ComplexFormatError, read_complex, write_complex, parse_complex, format_complex
