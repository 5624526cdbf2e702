from .core import PolyRing, Poly, MonomialOrder
from .groebner import (Ideal, buchberger, divide, normal_form, s_polynomial, is_groebner_basis, groebner_basis,
                       ideal_membership, ideal_in_ideal)
