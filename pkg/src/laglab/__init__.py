"""laglab: hypergraph Lagrangians with certificates, bounds, and sweeps."""

__version__ = "0.1.0"

from ._kernels import backend as kernel_backend
from .bounds import (PrincipalDomainInfo, SmoothBound, lambda2,
                     max_clique_size, motzkin_straus, predicted_lambda,
                     principal_domain, smooth_bound)
from .hypergraph import (Edge, Hypergraph, PairLinkDecomposition, build_colex,
                         colex_compare, colex_rank, colex_unrank, complete,
                         compress, covers_pair, covers_pairs, delete_vertex,
                         glue, hypergraph, is_left_compressed,
                         left_compress_closure, link, load_hypergraph,
                         pair_decomposition, parse_hypergraph, to_json_dict,
                         uncovered_pairs)
from .oracle import (AuditReport, SweepRecord, audit_extremal, brute_lambda,
                     count_left_compressed, default_n_cap,
                     enumerate_left_compressed, local_search)
from .solver import (LagrangianCertificate, SolverConfig, ascent_step,
                     better_certificate, kkt_residual,
                     link_stationarity_report, solve_lagrangian, swap_improve,
                     verify_certificate)
from .weighting import (Weighting, family_weight, is_legal, partial, partials,
                        support, uniform, weight_poly)

__all__ = [
    "__version__", "kernel_backend",
    "Edge", "Hypergraph", "PairLinkDecomposition", "build_colex",
    "colex_compare", "colex_rank", "colex_unrank", "complete", "compress",
    "covers_pair", "covers_pairs", "delete_vertex", "glue", "hypergraph",
    "is_left_compressed", "left_compress_closure", "link", "load_hypergraph",
    "pair_decomposition", "parse_hypergraph", "to_json_dict", "uncovered_pairs",
    "Weighting", "family_weight", "is_legal", "partial", "partials",
    "support", "uniform", "weight_poly",
    "LagrangianCertificate", "SolverConfig", "ascent_step",
    "better_certificate", "kkt_residual", "link_stationarity_report",
    "solve_lagrangian", "swap_improve", "verify_certificate",
    "PrincipalDomainInfo", "SmoothBound", "lambda2", "max_clique_size",
    "motzkin_straus", "predicted_lambda", "principal_domain", "smooth_bound",
    "AuditReport", "SweepRecord", "audit_extremal", "brute_lambda",
    "count_left_compressed", "default_n_cap", "enumerate_left_compressed",
    "local_search",
]
