"""Registered q-series identities, each with independent left and right builders."""

from .registry import (
    IdentityDescriptor,
    ParameterError,
    ParamSpec,
    UnknownIdentityError,
    build_side,
    get,
    list_identities,
    summarize,
    verify,
    verify_grid,
)

__all__ = [
    "IdentityDescriptor",
    "ParamSpec",
    "ParameterError",
    "UnknownIdentityError",
    "build_side",
    "get",
    "list_identities",
    "summarize",
    "verify",
    "verify_grid",
]
