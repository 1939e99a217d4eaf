"""Quantum 6j-symbols at roots of unity and hyperbolic volumes."""

from ._sixjvol import (
    ShadowLink,
    SixjvolError,
    angles_from_theta,
    classify_theta,
    colored_jones_lead,
    complement_volume,
    complete_volume,
    converge_gcv,
    converge_sixj,
    dblock_volume,
    dilog,
    load_link,
    lobachevsky,
    parse_link,
    sixj_generic_eval,
    sixj_lead,
    vol_oct,
    volume_lob,
    volume_my,
)

__all__ = [
    "ShadowLink",
    "SixjvolError",
    "angles_from_theta",
    "classify_theta",
    "colored_jones_lead",
    "complement_volume",
    "complete_volume",
    "converge_gcv",
    "converge_sixj",
    "dblock_volume",
    "dilog",
    "load_link",
    "lobachevsky",
    "parse_link",
    "sixj_generic_eval",
    "sixj_lead",
    "vol_oct",
    "volume_lob",
    "volume_my",
]
