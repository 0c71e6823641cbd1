"""Quadratische Einschränkung und Π-Spektraltheorie"""

from .restriction import Restriction, square_restriction, pi_of
from .cayley_hamilton import annihilating_coefficients, annihilator_value, gch_residual
from .inverse import InverseCheck, pdet, pi_invertible, pi_inverse, pi_inverse_check, pi_eigen

__all__ = [
    'Restriction', 'square_restriction', 'pi_of',
    'annihilating_coefficients', 'annihilator_value', 'gch_residual',
    'InverseCheck', 'pdet', 'pi_invertible', 'pi_inverse', 'pi_inverse_check', 'pi_eigen',
]
