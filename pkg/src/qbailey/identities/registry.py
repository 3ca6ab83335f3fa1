"""Catalogue of q-series identities with independent left/right builders."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Optional, Sequence

from ..qtools import Monomial
from ..series import LaurentSeries, VerificationReport, equal_up_to

Builder = Callable[[Mapping[str, Any], int], LaurentSeries]


class UnknownIdentityError(KeyError):
    pass


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class ParamSpec:
    """One named parameter: ``kind`` is ``"int"`` or ``"monomial"``."""

    name: str
    kind: str
    constraint: str
    check: Callable[[Any], bool] = lambda v: True

    def parse(self, text: str) -> Any:
        try:
            value = int(text) if self.kind == "int" else Monomial.parse(text)
        except ValueError as exc:
            raise ParameterError(f"{self.name}: {exc}") from None
        return value

    def describe(self) -> str:
        return f"{self.name}: {self.constraint}"


def int_param(name: str, lo: int, extra: str = "", check: Optional[Callable[[int], bool]] = None) -> ParamSpec:
    text = f"integer ≥ {lo}" + (f", {extra}" if extra else "")
    return ParamSpec(name, "int", text, lambda v: isinstance(v, int) and v >= lo and (check is None or check(v)))


def mono_param(name: str, min_exp: int = 1) -> ParamSpec:
    return ParamSpec(
        name,
        "monomial",
        f"±q^e with e ≥ {min_exp}",
        lambda v: isinstance(v, Monomial) and v.exp >= min_exp,
    )


@dataclass(frozen=True)
class IdentityDescriptor:
    """A registered identity.

    ``reading`` is ``"printed"`` for a literal transcription of a displayed
    formula and ``"corrected"`` or ``"derived"`` for a repaired form;
    ``companion`` links the two readings of the same statement.
    """

    id: str
    anchor: str
    lhs_builder: Builder
    rhs_builder: Builder
    params: tuple[ParamSpec, ...] = ()
    grid: tuple[Mapping[str, Any], ...] = ({},)
    reading: str = "printed"
    companion: Optional[str] = None
    note: str = ""
    default_order: int = 200

    def schema(self) -> str:
        return ", ".join(p.describe() for p in self.params) or "(none)"

    def validate(self, params: Mapping[str, Any]) -> dict:
        known = {p.name: p for p in self.params}
        extra = set(params) - set(known)
        if extra:
            raise ParameterError(f"{self.id}: unknown parameter(s) {sorted(extra)}")
        missing = set(known) - set(params)
        if missing:
            raise ParameterError(f"{self.id}: missing parameter(s) {sorted(missing)}")
        for name, spec in known.items():
            if not spec.check(params[name]):
                raise ParameterError(f"{self.id}: {name}={params[name]} violates '{spec.constraint}'")
        return dict(params)

    def points(self, overrides: Optional[Mapping[str, Any]] = None) -> list[dict]:
        """Parameter sets to verify: the grid, with overridden names pinned."""
        overrides = dict(overrides or {})
        pts: list[dict] = []
        seen = set()
        for g in self.grid:
            p = {**g, **overrides}
            key = tuple(sorted((k, str(v)) for k, v in p.items()))
            if key not in seen:
                seen.add(key)
                pts.append(p)
        return pts


_REGISTRY: dict[str, IdentityDescriptor] = {}


def register(desc: IdentityDescriptor) -> IdentityDescriptor:
    if desc.id in _REGISTRY:
        raise ValueError(f"duplicate identity id {desc.id!r}")
    _REGISTRY[desc.id] = desc
    return desc


def grid(**axes: Sequence[Any]) -> tuple[dict, ...]:
    names = list(axes)
    return tuple(dict(zip(names, combo)) for combo in itertools.product(*(axes[n] for n in names)))


def _load() -> None:
    # the catalogue modules register themselves on import
    from . import bailey_level, concluding, intro, terminating, theorems  # noqa: F401


def list_identities() -> list[IdentityDescriptor]:
    _load()
    return [_REGISTRY[k] for k in sorted(_REGISTRY)]


def get(identity_id: str) -> IdentityDescriptor:
    _load()
    try:
        return _REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentityError(identity_id) from None


def build_side(identity_id: str, side: str, params: Mapping[str, Any], prec: int) -> LaurentSeries:
    desc = get(identity_id)
    p = desc.validate(params)
    if side == "lhs":
        return desc.lhs_builder(p, prec)
    if side == "rhs":
        return desc.rhs_builder(p, prec)
    raise ValueError(f"side must be 'lhs' or 'rhs', not {side!r}")


def verify(
    identity_id: str,
    params: Optional[Mapping[str, Any]] = None,
    lo: Optional[int] = None,
    hi: int = 200,
) -> VerificationReport:
    """Compare both sides of one identity at one parameter point on ``[lo, hi)``.

    ``lo`` defaults to the lower of 0 and both sides' lowest exponent.
    """
    desc = get(identity_id)
    p = desc.validate(params or {})
    lhs = desc.lhs_builder(p, hi)
    rhs = desc.rhs_builder(p, hi)
    if lo is None:
        lo = min([0] + [s.min_exp for s in (lhs, rhs) if not s.is_zero()])
    rep = equal_up_to(lhs, rhs, lo, hi)
    return VerificationReport(rep.window, rep.status, rep.first_mismatch, identity_id, p)


def verify_grid(
    identity_id: str,
    overrides: Optional[Mapping[str, Any]] = None,
    lo: Optional[int] = None,
    hi: Optional[int] = None,
) -> list[VerificationReport]:
    desc = get(identity_id)
    hi = desc.default_order if hi is None else hi
    return [verify(identity_id, pt, lo, hi) for pt in desc.points(overrides)]


def summarize(reports: Sequence[VerificationReport]) -> VerificationReport:
    """Fold a grid of reports into one: the first failure, else a pass."""
    if not reports:
        raise ValueError("no reports to summarise")
    for r in reports:
        if not r.passed:
            return r
    lo = min(r.window[0] for r in reports)
    hi = min(r.window[1] for r in reports)
    return VerificationReport((lo, hi), "pass", None, reports[0].identity, {}, note=f"{len(reports)} parameter points")
