"""Neighborhood-prime labelings: generators, constructive labelers, exact search."""

from ._core import (
    Graph,
    LabelingInvalid,
    PreconditionViolated,
    SearchOutcome,
    SizeReport,
    UnsupportedParameters,
    UnsupportedStructure,
    VerificationReport,
    Violation,
    ahu_canonical,
    bertrand_prime,
    brute_force_oracle,
    coprime_matching,
    enumerate_free_trees,
    extend_pendant,
    contract_one_max,
    find_labeling,
    gcd_of,
    generate,
    is_prime,
    is_tree,
    label,
    label_bivalent_free,
    parse_edge_list,
    random_tree,
    scan_conjecture,
    verify,
    write_edge_list,
)

__all__ = [name for name in dir() if not name.startswith("_")]
