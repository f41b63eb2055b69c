from .diagrams import (TowerConsistencyError, PlacementState, ConstraintNode, LevelDiagram, TowerDiagram,
                       ArrowData, ROOT, base_zigzag, restrict_diagram, cross_wall, left_arrow,
                       build_tower_diagram)
from .assembly import (ResourceCapError, TowerResult, BoundaryModel, NodeRealizer, TowerAssembler,
                       assemble_tower, projection_tower, boundary_model, fiber_homology,
                       check_tower_size, check_product_size, leaf_constraints, tower_rows,
                       DEFAULT_MAX_K, DEFAULT_MAX_SIMPLICES)
from .tower_workflow import TowerWorkflow
