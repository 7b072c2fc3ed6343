"""j-neighborhood centralities of undirected graphs."""

from ._jnc import (
    CentralityRecord,
    Error,
    Graph,
    ParseError,
    SpectralEstimate,
    average_clustering,
    barabasi_albert,
    bfs_layers,
    boccaletti_hwang_latora,
    cheeger_brute_force,
    erdos_renyi,
    generate,
    ksi_centrality,
    lambda_max,
    laplacian_quadratic_form,
    shape_verdict,
    skewness,
    verify_bounds,
    watts_strogatz,
    xi,
    xi_all,
    xi_quadratic_oracle,
)

__all__ = [
    "CentralityRecord",
    "Error",
    "Graph",
    "ParseError",
    "SpectralEstimate",
    "average_clustering",
    "barabasi_albert",
    "bfs_layers",
    "boccaletti_hwang_latora",
    "cheeger_brute_force",
    "erdos_renyi",
    "generate",
    "ksi_centrality",
    "lambda_max",
    "laplacian_quadratic_form",
    "shape_verdict",
    "skewness",
    "verify_bounds",
    "watts_strogatz",
    "xi",
    "xi_all",
    "xi_quadratic_oracle",
]
