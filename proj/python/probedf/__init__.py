"""Probe diamond-free graph recognition with verifiable certificates."""

from ._probedf import (
    gnp,
    is_diamond_free,
    oracle,
    planted_no,
    planted_yes,
    recognize,
    template_names,
    verify_negative,
    verify_positive,
)

__all__ = [
    "gnp",
    "is_diamond_free",
    "oracle",
    "planted_no",
    "planted_yes",
    "recognize",
    "template_names",
    "verify_negative",
    "verify_positive",
]
