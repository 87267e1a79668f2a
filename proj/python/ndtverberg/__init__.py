"""No-dimensional Tverberg partitions, centerballs and mean sampling."""

from ._ndtv import (
    Ball,
    Certificate,
    DomainError,
    IoError,
    avg_price,
    caratheodory,
    centerball,
    centroid,
    certificate_from_json,
    derand_sample_by_halving,
    derand_sample_slow,
    diameter_bound,
    diameter_exact,
    dist_to_hull,
    generate,
    halfspace_depth_check_2d,
    halve,
    partition,
    sample_mean,
    verify,
    weak_epsilon_net,
)

__all__ = [
    "Ball",
    "Certificate",
    "DomainError",
    "IoError",
    "avg_price",
    "caratheodory",
    "centerball",
    "centroid",
    "certificate_from_json",
    "derand_sample_by_halving",
    "derand_sample_slow",
    "diameter_bound",
    "diameter_exact",
    "dist_to_hull",
    "generate",
    "halfspace_depth_check_2d",
    "halve",
    "partition",
    "sample_mean",
    "verify",
    "weak_epsilon_net",
]
