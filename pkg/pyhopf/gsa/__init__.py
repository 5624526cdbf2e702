from .core import OperatorSpec, TwistedTensor, twisted_image, extend_operator
from .checks import (check_counit, counit_report, check_iterativity, check_well_defined, well_defined_report,
                     check_action, constants, ConstantsResult)
from .rules import (RuleTable, derive_product_rules, derive_iterativity_rules, operator_change_matrix,
                    format_operator_change, transport_spec)
from .product import decompose_product_action, compose_product_action
