"""Minors in small-set expanders: certification, embedding engines and counting bounds."""
__version__ = "0.1.0"

from .errors import (EmbeddingFailed, ExpMinorsError, GenerationError, HypothesisViolated, InputError,
                     InvariantViolation, NotConnectedError, PatternTooLarge, RandomnessFailure, TooLargeError)
from .graph import (INFINITY, Graph, ball, bfs, connected_components, diameter, distance,
                    external_neighborhood, induced_subgraph, is_connected, read_edge_list,
                    shortest_path, write_edge_list)
from .generators import (GenSpec, degree3_reduce, gen_d_out, gen_gnm, gen_gnp, gen_random_regular,
                         gen_random_tree, generate)
from .expansion import (ExpansionCertificate, ExpansionParams, certify_expansion, certify_expansion_exact,
                        find_violation_heuristic, mixing_bound, ndl_expansion_params, prune_one2all,
                        robust_partition, spectral_lambda)
from .embedding import (MinorModel, diameter_bound, efficient_cover, embed_complete, embed_universal,
                        empirical_capacity, verify_minor)
from .counting import (CountingReport, count_bounds, find_minor_model, find_non_minor, is_minor_exact,
                       universality_threshold)
