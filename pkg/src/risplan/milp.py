"""Solver-agnostic mixed-integer linear program container.

Variables are declared with structured keys (tuples such as
("x", t, c, r)) and stable human-readable names, so models, solutions and
exported LP files can all be navigated by the same identifiers. The LP
writer emits a deterministic byte stream; ``read_lp`` parses the dialect
``export_lp`` produces (plus the common fixed-format variations), which
gives external solvers a file-based path in and out.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

BINARY = "binary"
CONTINUOUS = "continuous"

_SENSES = ("<=", ">=", "=")

VarKey = tuple


class ModelError(ValueError):
    """Inconsistent model construction or lookup."""


@dataclass
class Variable:
    name: str
    kind: str
    lower: float
    upper: float


@dataclass
class Constraint:
    name: str
    coeffs: dict[int, float]
    sense: str
    rhs: float


class MilpModel:
    """A linear objective, linear constraints, and typed bounded variables.

    The index map is total and bidirectional: every variable has a key,
    every key resolves to exactly one variable id, and names are unique.
    """

    def __init__(self, name: str = "model", sense: str = "maximize"):
        if sense not in ("maximize", "minimize"):
            raise ModelError(f"unknown objective sense {sense!r}")
        self.name = name
        self.objective_sense = sense
        self.variables: list[Variable] = []
        self.constraints: list[Constraint] = []
        self.objective: dict[int, float] = {}
        self._key_to_id: dict[VarKey, int] = {}
        self._id_to_key: list[VarKey] = []
        self._name_to_id: dict[str, int] = {}

    # -- variables ---------------------------------------------------

    def add_variable(self, key: VarKey, kind: str,
                     lower: float = 0.0, upper: float = math.inf,
                     name: str | None = None) -> int:
        if kind not in (BINARY, CONTINUOUS):
            raise ModelError(f"unknown variable kind {kind!r}")
        if key in self._key_to_id:
            raise ModelError(f"duplicate variable key {key!r}")
        if kind == BINARY:
            lower, upper = 0.0, 1.0
        if lower > upper:
            raise ModelError(f"empty bounds [{lower}, {upper}] for {key!r}")
        if name is None:
            name = "_".join(str(part) for part in key)
        if name in self._name_to_id:
            raise ModelError(f"duplicate variable name {name!r}")
        var_id = len(self.variables)
        self.variables.append(Variable(name=name, kind=kind, lower=lower, upper=upper))
        self._key_to_id[key] = var_id
        self._id_to_key.append(key)
        self._name_to_id[name] = var_id
        return var_id

    def var_id(self, key: VarKey) -> int:
        try:
            return self._key_to_id[key]
        except KeyError:
            raise ModelError(f"unknown variable key {key!r}") from None

    def has_var(self, key: VarKey) -> bool:
        return key in self._key_to_id

    def key_of(self, var_id: int) -> VarKey:
        return self._id_to_key[var_id]

    def name_of(self, var_id: int) -> str:
        return self.variables[var_id].name

    def id_of_name(self, name: str) -> int:
        try:
            return self._name_to_id[name]
        except KeyError:
            raise ModelError(f"unknown variable name {name!r}") from None

    def keys(self) -> list[VarKey]:
        return list(self._id_to_key)

    # -- constraints and objective ------------------------------------

    def add_constraint(self, name: str, coeffs: dict[int, float],
                       sense: str, rhs: float) -> None:
        if sense not in _SENSES:
            raise ModelError(f"unknown constraint sense {sense!r}")
        for var_id in coeffs:
            if not 0 <= var_id < len(self.variables):
                raise ModelError(f"constraint {name!r} references unknown variable {var_id}")
        self.constraints.append(Constraint(name=name, coeffs=dict(coeffs),
                                           sense=sense, rhs=float(rhs)))

    def set_objective_coeff(self, var_id: int, coeff: float) -> None:
        if not 0 <= var_id < len(self.variables):
            raise ModelError(f"objective references unknown variable {var_id}")
        if coeff == 0.0:
            self.objective.pop(var_id, None)
        else:
            self.objective[var_id] = float(coeff)

    def evaluate_objective(self, values: dict[str, float]) -> float:
        return sum(c * values[self.variables[i].name] for i, c in self.objective.items())

    @property
    def num_variables(self) -> int:
        return len(self.variables)

    @property
    def num_constraints(self) -> int:
        return len(self.constraints)

    def constraints_named(self, prefix: str) -> list[Constraint]:
        return [c for c in self.constraints if c.name.startswith(prefix)]


# -- LP format ---------------------------------------------------------


def _fmt(value: float) -> str:
    if value == math.floor(value) and abs(value) < 1e15:
        return str(int(value))
    return format(value, ".17g")


def _terms(coeffs: dict[int, float], model: MilpModel) -> str:
    parts: list[str] = []
    for var_id in sorted(coeffs):
        coef = coeffs[var_id]
        if coef == 0.0:
            continue
        name = model.variables[var_id].name
        if not parts:
            parts.append(f"{_fmt(coef)} {name}" if coef >= 0
                         else f"- {_fmt(-coef)} {name}")
        elif coef >= 0:
            parts.append(f"+ {_fmt(coef)} {name}")
        else:
            parts.append(f"- {_fmt(-coef)} {name}")
    return " ".join(parts)


def export_lp(model: MilpModel) -> str:
    """Serialize to LP format, deterministically (same model, same bytes).

    Variables appear in declaration order inside each section; empty
    constraints are written with an explicit zero term so the row (and its
    possible infeasibility) survives the round trip.
    """
    lines: list[str] = [f"\\ {model.name}"]
    lines.append("Maximize" if model.objective_sense == "maximize" else "Minimize")
    obj = _terms(model.objective, model)
    if not obj:
        obj = f"0 {model.variables[0].name}" if model.variables else "0 dummy"
    lines.append(f" obj: {obj}")
    lines.append("Subject To")
    sense_txt = {"<=": "<=", ">=": ">=", "=": "="}
    for con in model.constraints:
        body = _terms(con.coeffs, model)
        if not body:
            anchor = model.variables[0].name if model.variables else "dummy"
            body = f"0 {anchor}"
        lines.append(f" {con.name}: {body} {sense_txt[con.sense]} {_fmt(con.rhs)}")
    bounds: list[str] = []
    for var in model.variables:
        if var.kind == BINARY:
            continue
        if var.lower == 0.0 and var.upper == math.inf:
            continue
        if var.upper == math.inf:
            bounds.append(f" {var.name} >= {_fmt(var.lower)}")
        elif var.lower == -math.inf and var.upper == math.inf:
            bounds.append(f" {var.name} free")
        else:
            bounds.append(f" {_fmt(var.lower)} <= {var.name} <= {_fmt(var.upper)}")
    if bounds:
        lines.append("Bounds")
        lines.extend(bounds)
    binaries = [var.name for var in model.variables if var.kind == BINARY]
    if binaries:
        lines.append("Binaries")
        for name in binaries:
            lines.append(f" {name}")
    lines.append("End")
    return "\n".join(lines) + "\n"


_SECTION_RE = re.compile(
    r"^(maximize|minimize|max|min|subject to|such that|st|s\.t\.|bounds|"
    r"binaries|binary|bin|generals|general|end)$", re.IGNORECASE)


_TERM_TOKEN_RE = re.compile(
    r"[A-Za-z_][A-Za-z0-9_]*"                      # variable name
    r"|(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"       # unsigned number
    r"|[+-]")                                       # sign


def _tokenize_terms(text: str) -> list[tuple[float, str]]:
    """Parse "3 x - 2.5e-3 y + z" into [(3, x), (-0.0025, y), (1, z)]."""
    terms: list[tuple[float, str]] = []
    sign = 1.0
    coef: float | None = None
    for tok in _TERM_TOKEN_RE.findall(text):
        if tok == "+":
            continue
        if tok == "-":
            sign = -sign
            continue
        if tok[0].isdigit() or tok[0] == ".":
            value = float(tok)
            coef = value if coef is None else coef * value
        else:
            terms.append((sign * (1.0 if coef is None else coef), tok))
            sign, coef = 1.0, None
    if coef is not None:
        raise ModelError(f"dangling coefficient in expression {text!r}")
    return terms


def read_lp(text: str) -> MilpModel:
    """Parse the LP dialect produced by ``export_lp``.

    Variable keys in the returned model are singleton tuples of the name;
    structural keys are not recoverable from a flat file.
    """
    # Strip comments, join continuation lines into logical records.
    lines = []
    for raw in text.splitlines():
        body = raw.split("\\")[0].rstrip()
        if body.strip():
            lines.append(body)

    section = None
    objective_text: list[str] = []
    constraint_texts: list[str] = []
    bound_texts: list[str] = []
    binary_names: list[str] = []
    sense = "maximize"
    for line in lines:
        stripped = line.strip()
        if _SECTION_RE.match(stripped):
            low = stripped.lower()
            if low in ("maximize", "max"):
                section, sense = "objective", "maximize"
            elif low in ("minimize", "min"):
                section, sense = "objective", "minimize"
            elif low in ("subject to", "such that", "st", "s.t."):
                section = "constraints"
            elif low == "bounds":
                section = "bounds"
            elif low in ("binaries", "binary", "bin"):
                section = "binaries"
            elif low in ("generals", "general"):
                section = "generals"
            elif low == "end":
                section = "done"
            continue
        if section == "objective":
            objective_text.append(stripped)
        elif section == "constraints":
            if ":" in stripped or not constraint_texts:
                constraint_texts.append(stripped)
            else:
                constraint_texts[-1] += " " + stripped
        elif section == "bounds":
            bound_texts.append(stripped)
        elif section == "binaries":
            binary_names.extend(stripped.split())

    model = MilpModel(name="lp_import", sense=sense)
    binary_set = set(binary_names)

    def ensure_var(name: str) -> int:
        if model.has_var((name,)):
            return model.var_id((name,))
        kind = BINARY if name in binary_set else CONTINUOUS
        return model.add_variable((name,), kind, name=name)

    obj_body = " ".join(objective_text)
    if ":" in obj_body:
        obj_body = obj_body.split(":", 1)[1]
    for coef, name in _tokenize_terms(obj_body):
        vid = ensure_var(name)
        model.set_objective_coeff(vid, model.objective.get(vid, 0.0) + coef)

    rel_re = re.compile(r"(<=|>=|=)")
    for record in constraint_texts:
        if ":" in record:
            cname, body = record.split(":", 1)
            cname = cname.strip()
        else:
            cname, body = f"c{len(model.constraints)}", record
        pieces = rel_re.split(body)
        if len(pieces) != 3:
            raise ModelError(f"cannot parse constraint {record!r}")
        lhs, rel, rhs = pieces
        coeffs: dict[int, float] = {}
        for coef, name in _tokenize_terms(lhs):
            vid = ensure_var(name)
            coeffs[vid] = coeffs.get(vid, 0.0) + coef
        model.add_constraint(cname, coeffs, rel, float(rhs))

    for record in bound_texts:
        if record.lower().endswith(" free"):
            name = record[: -len(" free")].strip()
            vid = ensure_var(name)
            model.variables[vid].lower = -math.inf
            model.variables[vid].upper = math.inf
            continue
        pieces = rel_re.split(record)
        if len(pieces) == 5:  # lo <= x <= hi
            lo, _, name, _, hi = (p.strip() for p in pieces)
            vid = ensure_var(name)
            model.variables[vid].lower = float(lo)
            model.variables[vid].upper = float(hi)
        elif len(pieces) == 3:
            left, rel, right = (p.strip() for p in pieces)
            try:
                value = float(right)
                name, bound_is_upper = left, rel == "<="
            except ValueError:
                value = float(left)
                name, bound_is_upper = right, rel == ">="
            vid = ensure_var(name)
            if bound_is_upper:
                model.variables[vid].upper = value
            else:
                model.variables[vid].lower = value
        else:
            raise ModelError(f"cannot parse bound {record!r}")

    for name in binary_names:
        ensure_var(name)
    return model
