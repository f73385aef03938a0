"""Abelian corridor analysis for binary infinite words."""

from .abelian import (CorridorProfile, FrequencyBounds, MembershipCertificate,
                      abelian_complexity, balance_coefficient,
                      closure_of_periodic, corridor_member, corridor_profile,
                      frequency_bounds, rational_carpet,
                      shortest_unbalanced_pair)
from .errors import ConfigError, DomainError, ResourceCapError
from .exactnum import QuadExt, parse_slope, render_slope
from .family import construct_family, normalize_seed, verify_distinct
from .specs import (CarpetSpec, DirectiveSpec, FileSpec, FlipFamilySpec,
                    MorphicSpec, PeriodicSpec, RotationSpec, WordSpec,
                    fibonacci, parse_morphism, parse_spec, thue_morse)
from .structure import (RauzyGraph, factor_complexity,
                        factorize_over_standard_pair, is_window_periodic,
                        line_crossing_prefix, rauzy_graph, return_words,
                        special_factors, word_graph)
from .sturmian import (DirectiveSequence, RotationParams,
                       central_decomposition, characteristic_prefix,
                       directive_of_slope, is_central, is_standard_pair,
                       is_standard_word, rotation_word, slope_of_directive,
                       standard_pair_factorization, standard_sequence)
from .transforms import (BinaryMorphism, MORPHISM_D, MORPHISM_E, MORPHISM_G,
                         SqueezeParams, flip_last_two, flipping_family,
                         is_standard_morphism, is_sturmian_morphism,
                         iterate_F_until_isolated, parikh_preimage,
                         preimages_F, squeeze, traffic_F, traffic_T)
from .words import abelian_equivalent, factors, parikh, weight

__version__ = "0.1.0"
