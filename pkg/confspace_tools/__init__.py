from .tower_builder import TowerWorkflow
from .suspension_tower import SuspensionWorkflow, InvarianceWorkflow

from .version import __version__
