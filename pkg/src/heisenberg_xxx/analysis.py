"""Closed-form predictions as functions of phi = (alpha + 1) t, checked against
the numerical oracle point by point, over sweep grids and on the reference table."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from typing import Callable, NamedTuple, Optional

import numpy as np

from . import measures as M
from .dynamics import PhasePoint, initial_density, numeric_density
from .errors import DomainError, FrozenLine
from .linalg import partial_trace
from .spin import Boundary

# constant printed with the closed-form entanglement expressions; exact value is 1/(2 ln 2)
EF_PREFACTOR = 0.721348
FD_STEP = 1e-6


def phase(alpha: float, t: float) -> float:
    return (alpha + 1.0) * t


def predicted_fidelity(phi: float) -> float:
    return math.sqrt(math.cos(phi / 2.0) ** 2)


def predicted_coherence(phi: float) -> float:
    """sin^2(phi/2); this is the l1-coherence of the reduced state of qubits 3, 4."""
    return math.sin(phi / 2.0) ** 2


def predicted_concurrence12(phi: float) -> float:
    return math.cos(phi / 2.0) ** 2


def predicted_concurrence34(phi: float) -> float:
    return math.sin(phi / 2.0) ** 2


def _root(arg: float) -> float:
    if arg < -1e-9:
        raise DomainError(f"negative square-root argument {arg!r}")
    return math.sqrt(max(arg, 0.0))


def _xlog(coef: float, arg: float) -> float:
    # coef * ln(arg), continued as 0 where arg -> 0 (coef vanishes there too)
    return coef * math.log(arg) if arg > 0.0 else 0.0


def ef12_closed_form(phi: float) -> float:
    s = _root(-0.5 * math.cos(phi) - 0.125 * math.cos(2.0 * phi) + 0.625)
    k = EF_PREFACTOR
    return _xlog(k * s - k, 0.5 - 0.5 * s) + _xlog(-k * s - k, 0.5 * (s + 1.0))


def ef34_closed_form(phi: float) -> float:
    s = _root(1.0 - 0.25 * (math.cos(phi) - 1.0) ** 2)
    k = EF_PREFACTOR
    return _xlog(k * s - k, 0.5 - 0.5 * s) - _xlog(k * (s + 1.0), 0.5 * (s + 1.0))


def ef12_simplified(phi: float) -> float:
    return M.eof_from_concurrence(predicted_concurrence12(phi))


def ef34_simplified(phi: float) -> float:
    return M.eof_from_concurrence(predicted_concurrence34(phi))


class EFPaths(NamedTuple):
    closed_form: float
    simplified: float


def predicted_ef12(phi: float) -> EFPaths:
    return EFPaths(ef12_closed_form(phi), ef12_simplified(phi))


def predicted_ef34(phi: float) -> EFPaths:
    return EFPaths(ef34_closed_form(phi), ef34_simplified(phi))


# --- sensitivities ---------------------------------------------------------

class Sensitivity(NamedTuple):
    printed: float  # the published derivative expression
    finite_difference: float  # centered difference of the quantity it is attached to


def central_difference(f: Callable[[float], float], x: float, h: float = FD_STEP) -> float:
    return (f(x + h) - f(x - h)) / (2.0 * h)


def sensitivity_fidelity_alpha(alpha: float, t: float) -> Sensitivity:
    """Printed -(t/4) sin(phi) next to d/dalpha of the squared fidelity cos^2(phi/2).

    The finite difference evaluates to -(t/2) sin(phi): the printed form is
    half of it.
    """
    printed = -(t / 4.0) * math.sin((alpha + 1.0) * t)
    fd = central_difference(lambda a: predicted_fidelity(phase(a, t)) ** 2, alpha)
    return Sensitivity(printed, fd)


def sensitivity_coherence_alpha(alpha: float, t: float) -> Sensitivity:
    """Printed t sin(2 phi) next to d/dalpha of sin^2(phi/2), i.e. (t/2) sin(phi)."""
    printed = t * math.sin(2.0 * (alpha + 1.0) * t)
    fd = central_difference(lambda a: predicted_coherence(phase(a, t)), alpha)
    return Sensitivity(printed, fd)


def sensitivity_coherence_t(alpha: float, t: float) -> Sensitivity:
    """Printed (alpha+1) sin(2 phi) next to d/dt of sin^2(phi/2)."""
    printed = (alpha + 1.0) * math.sin(2.0 * (alpha + 1.0) * t)
    fd = central_difference(lambda s: predicted_coherence(phase(alpha, s)), t)
    return Sensitivity(printed, fd)


# --- loci -----------------------------------------------------------------

LOCUS_KINDS = ("frozen", "extremum", "max_sensitivity", "max_sensitivity_consistent")


@dataclass(frozen=True)
class LocusSet:
    """Phases on one family of lines and the times where they cross ``alpha``.

    ``max_sensitivity`` is phi = pi/4 + k pi/2 (steepest slope of sin^2(phi));
    ``max_sensitivity_consistent`` is phi = pi/2 + k pi (steepest slope of
    sin^2(phi/2) and cos^2(phi/2)); ``extremum`` is phi = k pi.
    """

    kind: str
    k_range: tuple[int, int]
    alpha: float
    phases: tuple[float, ...] = ()
    times: tuple[float, ...] = ()


_LOCUS_PHASE = {
    "extremum": lambda k: k * math.pi,
    "max_sensitivity": lambda k: math.pi / 4.0 + k * math.pi / 2.0,
    "max_sensitivity_consistent": lambda k: math.pi / 2.0 + k * math.pi,
}


def frozen_locus() -> LocusSet:
    return LocusSet(kind="frozen", k_range=(0, -1), alpha=-1.0)


def locus(kind: str, alpha: float, k_range: tuple[int, int]) -> LocusSet:
    if kind not in _LOCUS_PHASE:
        raise ValueError(f"unknown locus kind {kind!r}")
    if alpha == -1.0:
        raise FrozenLine("alpha = -1: the phase is identically zero, no finite loci")
    ks = range(k_range[0], k_range[1] + 1)
    phases = tuple(_LOCUS_PHASE[kind](k) for k in ks)
    return LocusSet(kind, tuple(k_range), alpha, phases, tuple(p / (alpha + 1.0) for p in phases))


def sensitivity_loci(alpha: float, k_range: tuple[int, int] = (0, 3)) -> dict[str, LocusSet]:
    return {kind: locus(kind, alpha, k_range) for kind in _LOCUS_PHASE}


# --- point evaluation and sweeps -----------------------------------------

ORACLE_FIELDS = (
    "F_oracle", "Cl1_rho34_oracle", "Cl1_full_oracle", "C12_oracle",
    "C34_oracle", "EF12_oracle", "EF34_oracle",
)


@dataclass(frozen=True)
class MeasureRecord:
    alpha: float
    t: float
    phi: float
    F_analytic: float
    F_oracle: Optional[float]
    Cl1_rho34_analytic: float
    Cl1_rho34_oracle: Optional[float]
    Cl1_full_oracle: Optional[float]
    C12_analytic: float
    C12_oracle: Optional[float]
    C34_analytic: float
    C34_oracle: Optional[float]
    EF12_eq22: float
    EF12_simplified: float
    EF12_oracle: Optional[float]
    EF34_eq24: float
    EF34_simplified: float
    EF34_oracle: Optional[float]

    @classmethod
    def field_names(cls, include_oracle: bool = True) -> list[str]:
        names = [f.name for f in fields(cls)]
        return names if include_oracle else [n for n in names if n not in ORACLE_FIELDS]

    def as_dict(self, include_oracle: bool = True) -> dict:
        d = asdict(self)
        return d if include_oracle else {k: v for k, v in d.items() if k not in ORACLE_FIELDS}

    def analytic_values(self) -> tuple:
        return tuple(v for k, v in self.as_dict(include_oracle=False).items() if k not in ("alpha", "t"))


def oracle_measures(alpha: float, t: float, boundary: Boundary = "periodic") -> dict:
    """All diagnostics from the numerically evolved state."""
    rho = numeric_density(PhasePoint(alpha, t), boundary)
    r12 = partial_trace(rho, {1, 2}, 4)
    r34 = partial_trace(rho, {3, 4}, 4)
    c12 = M.wootters_concurrence(r12)
    c34 = M.wootters_concurrence(r34)
    return dict(
        F_oracle=M.uhlmann_fidelity(initial_density(), rho, "sqrt"),
        Cl1_rho34_oracle=M.coherence_l1(r34),
        Cl1_full_oracle=M.coherence_l1(rho),
        C12_oracle=c12,
        C34_oracle=c34,
        EF12_oracle=M.eof_from_concurrence(c12),
        EF34_oracle=M.eof_from_concurrence(c34),
    )


def evaluate_point(alpha: float, t: float, include_oracle: bool = True,
                   boundary: Boundary = "periodic") -> MeasureRecord:
    phi = phase(alpha, t)
    oracle = oracle_measures(alpha, t, boundary) if include_oracle else dict.fromkeys(ORACLE_FIELDS)
    return MeasureRecord(
        alpha=alpha, t=t, phi=phi,
        F_analytic=predicted_fidelity(phi),
        Cl1_rho34_analytic=predicted_coherence(phi),
        C12_analytic=predicted_concurrence12(phi),
        C34_analytic=predicted_concurrence34(phi),
        EF12_eq22=ef12_closed_form(phi),
        EF12_simplified=ef12_simplified(phi),
        EF34_eq24=ef34_closed_form(phi),
        EF34_simplified=ef34_simplified(phi),
        **oracle,
    )


@dataclass(frozen=True)
class SweepGrid:
    alpha_min: float = -3.0
    alpha_max: float = 1.0
    alpha_steps: int = 81
    t_min: float = 0.0
    t_max: float = 10.0
    t_steps: int = 201

    def __post_init__(self):
        if self.alpha_steps < 2 or self.t_steps < 2:
            raise ValueError("grids need at least two steps per axis")

    @property
    def alphas(self) -> np.ndarray:
        return np.linspace(self.alpha_min, self.alpha_max, self.alpha_steps)

    @property
    def times(self) -> np.ndarray:
        return np.linspace(self.t_min, self.t_max, self.t_steps)

    def points(self) -> list[tuple[float, float]]:
        return [(float(a), float(t)) for a in self.alphas for t in self.times]


def _evaluate_row(args) -> list[MeasureRecord]:
    alpha, times, include_oracle, boundary = args
    return [evaluate_point(alpha, float(t), include_oracle, boundary) for t in times]


def sweep(grid: SweepGrid = SweepGrid(), include_oracle: bool = True,
          boundary: Boundary = "periodic", workers: int = 1) -> list[MeasureRecord]:
    """Records in row-major order, alpha outer and t inner.

    With ``workers > 1`` rows are evaluated in separate processes; the result
    order is fixed by the grid, not by completion order.
    """
    jobs = [(float(a), grid.times, include_oracle, boundary) for a in grid.alphas]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_evaluate_row, jobs))
    else:
        rows = [_evaluate_row(j) for j in jobs]
    return [r for row in rows for r in row]


# --- reference table -------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    label: str
    alpha: float
    t: float
    # quantity -> (closed form of the table's analytic column, printed numeric column)
    published: dict = field(default_factory=dict)


TABLE = (
    TableRow("(0, pi/2)", 0.0, math.pi / 2, {
        "F": (1 / math.sqrt(2), "0.707106781"),
        "Cl1": (0.5, "0.5"),
        "C12": (0.5, "0.5"),
    }),
    TableRow("(-0.5, 2)", -0.5, 2.0, {
        "F": (math.cos(0.5), "0.877582562"),
        "Cl1": (math.sin(0.5) ** 2, "0.229848"),
        "C12": (math.cos(0.5) ** 2, "0.770151"),
    }),
    TableRow("(-1, 5)", -1.0, 5.0, {
        "F": (1.0, "1.0"),
        "Cl1": (0.0, "0.0"),
        "C12": (1.0, "1.0"),
    }),
)

_TABLE_COLUMNS = {
    "F": ("F_analytic", "F_oracle"),
    "Cl1": ("Cl1_rho34_analytic", "Cl1_rho34_oracle"),
    "C12": ("C12_analytic", "C12_oracle"),
}

REL_TOL = 1e-9
REL_FLOOR = 1e-6


def relative_error(reference: float, value: float) -> float:
    """|value - reference| / |reference|, or the absolute error when |reference| < 1e-6."""
    diff = abs(value - reference)
    return diff / abs(reference) if abs(reference) >= REL_FLOOR else diff


def matches_printed(value: float, printed: str) -> bool:
    """True when ``value`` lies within one unit of the last printed decimal.

    Covers both rounded and truncated printing.
    """
    decimals = len(printed.split(".")[1]) if "." in printed else 0
    return abs(value - float(printed)) < 10.0 ** (-decimals)


@dataclass
class QuantityCheck:
    name: str
    analytic: float
    oracle: float
    closed_form: float
    printed: str
    rel_error: float
    closed_form_ok: bool
    printed_ok: bool
    oracle_ok: bool

    @property
    def passed(self) -> bool:
        return self.closed_form_ok and self.printed_ok and self.oracle_ok


@dataclass
class RowReport:
    label: str
    alpha: float
    t: float
    phi: float
    checks: list[QuantityCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_rel_error(self) -> float:
        return max(c.rel_error for c in self.checks)


@dataclass
class TableReport:
    rows: list[RowReport]
    tolerance: float = REL_TOL

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def max_rel_error(self) -> float:
        return max(r.max_rel_error for r in self.rows)

    def failing_rows(self) -> list[str]:
        return [r.label for r in self.rows if not r.passed]


def verify_table(oracle_alpha_shift: float = 0.0, tol: float = REL_TOL) -> TableReport:
    """Recompute the three reference rows along both routes.

    ``oracle_alpha_shift`` displaces alpha for the numerical route only; a
    nonzero value is a negative control and must make the report fail.
    """
    reports = []
    for row in TABLE:
        rec = evaluate_point(row.alpha, row.t, include_oracle=False)
        oracle = oracle_measures(row.alpha + oracle_alpha_shift, row.t)
        checks = []
        for name, (closed, printed) in row.published.items():
            a_key, o_key = _TABLE_COLUMNS[name]
            a_val, o_val = getattr(rec, a_key), oracle[o_key]
            err = relative_error(a_val, o_val)
            checks.append(QuantityCheck(
                name=name, analytic=a_val, oracle=o_val, closed_form=closed, printed=printed,
                rel_error=err,
                closed_form_ok=abs(a_val - closed) <= 1e-12,
                printed_ok=matches_printed(a_val, printed),
                oracle_ok=err < tol,
            ))
        reports.append(RowReport(row.label, row.alpha, row.t, rec.phi, checks))
    return TableReport(reports, tol)
