"""Flat, serialisable views of solutions plus JSON/CSV/table rendering."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from importlib import resources

import numpy as np

from . import dirac, kinematics
from .errors import OnAxisError

ON_AXIS = "OnAxis"


@dataclass(frozen=True)
class SolutionRecord:
    p: tuple[float, float, float]
    m: float
    helicity: int
    energy_sign: int
    E: float
    eta: tuple[tuple[float, float], tuple[float, float]]
    zeta: tuple[tuple[float, float], tuple[float, float]]
    bloch_r: tuple[float, float, float]
    bloch_s: tuple[float, float, float]
    alpha_expect: tuple[float, float, float]
    beta_expect: float
    quadrant: str

    def to_dict(self) -> dict:
        return {k: _listify(v) for k, v in asdict(self).items()}

    @classmethod
    def from_dict(cls, d: dict) -> "SolutionRecord":
        def pairs(x):
            return tuple(tuple(float(c) for c in pair) for pair in x)

        return cls(
            p=tuple(float(x) for x in d["p"]),
            m=float(d["m"]),
            helicity=int(d["helicity"]),
            energy_sign=int(d["energy_sign"]),
            E=float(d["E"]),
            eta=pairs(d["eta"]),
            zeta=pairs(d["zeta"]),
            bloch_r=tuple(float(x) for x in d["bloch_r"]),
            bloch_s=tuple(float(x) for x in d["bloch_s"]),
            alpha_expect=tuple(float(x) for x in d["alpha_expect"]),
            beta_expect=float(d["beta_expect"]),
            quadrant=str(d["quadrant"]),
        )

    def csv_row(self, digits: int = 17) -> list[str]:
        values = [
            *self.p, self.m, self.helicity, self.energy_sign, self.E,
            *(c for pair in self.eta for c in pair),
            *(c for pair in self.zeta for c in pair),
            *self.bloch_r, *self.bloch_s, *self.alpha_expect, self.beta_expect,
        ]
        return [fmt(v, digits) for v in values] + [self.quadrant]


SOLUTION_CSV_HEADER = [
    "p_x", "p_y", "p_z", "m", "helicity", "energy_sign", "E",
    "eta0_re", "eta0_im", "eta1_re", "eta1_im",
    "zeta0_re", "zeta0_im", "zeta1_re", "zeta1_im",
    "bloch_r_x", "bloch_r_y", "bloch_r_z",
    "bloch_s_x", "bloch_s_y", "bloch_s_z",
    "alpha_x", "alpha_y", "alpha_z", "beta", "quadrant",
]


def _listify(v):
    if isinstance(v, (tuple, list)):
        return [_listify(x) for x in v]
    return v


def fmt(x, digits: int = 17) -> str:
    """Render a number; 17 significant digits round-trip any float64."""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    return format(float(x) + 0.0, f".{digits}g")


def _complex_pairs(v) -> tuple:
    return tuple((float(c.real), float(c.imag)) for c in v)


def quadrant_label(state: kinematics.KinematicState) -> str:
    try:
        return kinematics.classify_quadrant(state).value
    except OnAxisError:
        return ON_AXIS


def solution_record(sol: dirac.PlaneWaveSolution) -> SolutionRecord:
    state = dirac.classical_correspondence(sol)
    return SolutionRecord(
        p=tuple(float(x) for x in sol.p),
        m=sol.m,
        helicity=sol.helicity_sign,
        energy_sign=sol.energy_sign,
        E=sol.energy,
        eta=_complex_pairs(sol.eta),
        zeta=_complex_pairs(sol.zeta),
        bloch_r=tuple(float(x) for x in state.r),
        bloch_s=tuple(float(x) for x in state.s),
        alpha_expect=tuple(float(x) for x in dirac.alpha_expectation(sol)),
        beta_expect=dirac.beta_expectation(sol),
        quadrant=quadrant_label(state),
    )


def envelope(command: str, inputs: dict, results: list) -> dict:
    return {"command": command, "inputs": inputs, "results": results}


def to_json(payload: dict) -> str:
    # json uses repr for floats, which round-trips exactly
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def to_csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def to_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def load_schema(command: str) -> dict:
    """JSON schema for the output of a CLI command (``solve``, ``verify``, ...)."""
    name = command.replace("-", "_") + ".schema.json"
    text = resources.files("diracgeom").joinpath("schemas", name).read_text(encoding="utf-8")
    return json.loads(text)
