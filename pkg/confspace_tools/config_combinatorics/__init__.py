from .indices import (IndexTupleError, check_index_tuple, enumerate_index_tuples,
                      heights, ranks, wall_relabel, insert_position, format_fraction)
