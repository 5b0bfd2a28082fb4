"""Finite-scale verification of choice-free cardinal constructions on subset grids."""

from .errors import FincardError
from .ground import Family
from .grid import OperatorContext, big_F, big_G, big_H, iterate_H, nilpotency_check, recover_from_image
from .phi import CodedSet, MixedFamily, phi_decode, phi_encode
from .schedule import make_schedule, schedule_compact, schedule_paper

__all__ = [
    "CodedSet",
    "Family",
    "FincardError",
    "MixedFamily",
    "OperatorContext",
    "big_F",
    "big_G",
    "big_H",
    "iterate_H",
    "make_schedule",
    "nilpotency_check",
    "phi_decode",
    "phi_encode",
    "recover_from_image",
    "schedule_compact",
    "schedule_paper",
]

__version__ = "0.1.0"
