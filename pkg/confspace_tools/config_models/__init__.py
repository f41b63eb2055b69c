from ..complex_core import GraphError
from .models import (ConfigModel, AbramsReport, deleted_product_model, abrams_condition,
                     prepare_graph, forget_coordinate, forget_last_coordinate,
                     graph_of, smoothed_graph, power,
                     CERTIFIED, HEURISTIC, CELLULAR, SIMPLICIAL, REALIZATIONS)
