"""Lie complexity of infinite words: brute force, Rauzy graphs, and the Sturmian formula."""

from .complexity import (ComplexityRow, check_agreement,
                         lie_classes, lie_classes_bruteforce, lie_complexity_bruteforce,
                         profile, verify_bound)
from .errors import (DigitsExhausted, LieComplexityError, MethodDisagreement,
                     NotNormalizedError, SaturationError, SpecParseError)
from .formula import LengthCase, classify_length, sturmian_lie_formula
from .rauzy import LieCycle, RauzyGraph, lie_complexity_via_rauzy, lie_cycles, rauzy_graph
from .sources import FactorSet, WordSource, factor_complexity, saturated_factors
from .sturmian import (DenominatorTable, PrefixCatalogEntry, SlopeSpec,
                       characteristic_prefix, denominators, mechanical_word, normalize,
                       semiconvergent_denominator, semistandard_prefix,
                       set_S_members_of_length, standard_prefix)
from .verify import index_set_of_conjugates, verify_conjugate_closure
from .words import (ConjugacyClass, conjugates, factors_of_length, index_in,
                    is_primitive, primitive_root)

__version__ = "0.1.0"
