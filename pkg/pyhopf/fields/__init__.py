from .core import Field, FieldElem, RationalField, PrimeField, SimpleExtension, QQ, GF, extension
from . import linalg
from .linalg import linear_solve, kernel, solve, inverse, rref
