"""2-factor laboratory: Tutte barriers, chromatic index, toughness."""

from twofactorlab._core import (
    Graph,
    certify,
    chromatic_index,
    delta_st,
    enumerate_small,
    find_barriers,
    find_two_factor,
    generate,
    is_delta_critical,
    parse_graph6,
    scan_one,
    toughness,
    verify_certificate,
    vizing_color,
    write_graph6,
)

__all__ = [
    "Graph",
    "certify",
    "chromatic_index",
    "delta_st",
    "enumerate_small",
    "find_barriers",
    "find_two_factor",
    "generate",
    "is_delta_critical",
    "parse_graph6",
    "scan_one",
    "toughness",
    "verify_certificate",
    "vizing_color",
    "write_graph6",
]
