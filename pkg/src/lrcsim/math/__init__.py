from .field import PrimeField, field_arith, systematic_mds_generator
from .subsets import Subsets
