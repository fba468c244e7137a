"""Exact computations in equivariant Tate K-theory at the character
level: cyclotomic q-series, class functions on commuting pairs, stringy
power operations and Hecke operators, symmetric powers, stringy Euler
classes, and the Moonshine product identities."""

from .cyclotomic import Cyclotomic, cyc_make, root_of_unity
from .series import BivariateSeries, PuiseuxSeries, hecke_substitute, scale_exponents
from .groups import (FiniteGroup, Homomorphism, SizeCapExceeded, cyclic_group,
                     direct_product, permutation_group, symmetric_group, trivial_group)
from .wreath import (OrbitConvention, OrbitDatum, WreathElement, WreathGroup, iota,
                     iota_hom, orbit_data, wreath)
from .devoto import (DevotoElement, check_devoto, epsilon, external_product,
                     random_devoto_element, rescale, restrict_along, trivial_part)
from .powerops import (TransitiveClass, hecke_T, hecke_scalar, lambda_str_total,
                       p_str, p_top_eval, s_top_total, sym_str, sym_total,
                       transitive_classes, verify_iterated)
from .characters import (RepCharacter, age, eigen_cycle_check, eigen_multiplicity,
                         euler_str, lambda_sym_char, verify_hinfty,
                         wreath_sum_character)
from .moonshine import (McKayThompson, borcherds_product, denominator_check,
                        dmvv_check, faber, jseries, replicability_check)

__version__ = "0.1.0"
