"""Root numbers of the Jacobians of y^2 = x^p + a over Q."""

from ._rootnum import (
    RootnumError,
    compute,
    discriminant,
    find_model,
    hilbert,
    is_prime,
    is_pth_power,
    legendre,
    oracle,
    root_number,
)

__all__ = [
    "RootnumError",
    "compute",
    "discriminant",
    "find_model",
    "hilbert",
    "is_prime",
    "is_pth_power",
    "legendre",
    "oracle",
    "root_number",
]
