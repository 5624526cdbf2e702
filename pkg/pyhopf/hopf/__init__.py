from .core import (HopfData, build_hopf, verify_bialgebra, verify_antipode, solve_antipode, good_basis, change_basis,
                   base_change, product, product_factors, mutate, tensors_equal, BIALGEBRA_LAWS, TENSORS)
from .builtins import (register_builtin, get_builtin, list_builtins, constant_group, trivial, truncated_additive,
                       roots_of_unity, multiplicative_kernel, named_group_table, validate_group_table)
