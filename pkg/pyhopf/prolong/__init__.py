from .core import (Variety, ProlongationVariety, CMap, AxiomInstance, GenericPoint, nabla_names, default_names,
                   nabla_ring, canonical_operator, prolongation_ideal, c_map, nabla_point, l2_report, check_l2,
                   check_axiom_instance, generic_point_operator, ASSUMPTIONS)
