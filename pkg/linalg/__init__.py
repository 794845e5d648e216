from linalg.field import Matrix, PrimeField
from linalg.quotient import QuotientSpace, coequalizer, descend, equalizer, quotient_by, stable_under

__all__ = [
    'Matrix',
    'PrimeField',
    'QuotientSpace',
    'coequalizer',
    'descend',
    'equalizer',
    'quotient_by',
    'stable_under',
]
