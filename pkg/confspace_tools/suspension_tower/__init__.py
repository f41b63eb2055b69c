from .suspension import (CertificationError, InvarianceInputError, SuspensionReport, InvarianceReport,
                         InvarianceRow, certify, build_c, build_e23, sigma_cofiber, unpointed_suspension,
                         product_projection_check, suspension_report, suspension_rows,
                         check_common_graph, invariance_check, invariance_rows)
from .suspension_workflow import SuspensionWorkflow, InvarianceWorkflow
