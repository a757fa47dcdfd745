"""Lovász Local Lemma certifier.

Decides Shearer's condition and the cluster-expansion condition for a
dependency graph with per-event probability bounds, produces certified
lower bounds on the probability that no event occurs, and verifies the
underlying identities against explicit finite probability spaces.

Probabilities and weights are passed as exact strings ("1/4", "0.25") or
lists thereof; reports come back as plain dicts mirroring the CLI JSON.
"""

from ._core import (
    CertifierError,
    Graph,
    check_cluster,
    check_shearer,
    check_symm_inequality,
    cluster_bound,
    find_y,
    graph,
    independence_polynomial,
    parse_graph,
    random_product_space,
    symmetric_certificate,
    thresholds,
    tight_instance,
    verify_tight_instance,
)

__all__ = [
    "CertifierError",
    "Graph",
    "check_cluster",
    "check_shearer",
    "check_symm_inequality",
    "cluster_bound",
    "find_y",
    "graph",
    "independence_polynomial",
    "parse_graph",
    "random_product_space",
    "symmetric_certificate",
    "thresholds",
    "tight_instance",
    "verify_tight_instance",
]
