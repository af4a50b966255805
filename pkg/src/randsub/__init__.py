"""Topological entropy of primitive semi-compatible random substitutions."""
from .catalogue import get_example
from .entropy import (BoundsRow, BoundsTable, EntropyEstimate, GeometricConfig, bounds_table,
                      estimate_entropy, geometric_entropy, periodic_growth)
from .inflation import (CapacityError, ConditionReport, LevelSets, cardinalities, check_disjoint,
                        check_identical, inflate_set, level_sets, q_vector)
from .language import complexity_profile, is_periodic_bounded, legal_words
from .spectral import PerronData, length_vector, perron_data
from .substitution import (RandomSubstitution, SubstitutionError, ValidationError, constant_length,
                           parse_spec, primitivity_exponent, substitution_matrix, validate)
from .words import Alphabet, abelianise, concat_sets, subwords_of_length

__version__ = "0.1.0"
