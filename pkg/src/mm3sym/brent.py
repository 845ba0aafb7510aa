"""Polynomial equation systems whose solutions are decompositions of
the 3x3 matrix multiplication tensor.

The generic system of rank r states that r rank-one tensors sum to the
target: 729 equations, one per basis index, in the 27r factor
coordinates.  The invariant system of a type multiset states that the
orbit sums of its families, with one fresh parameter slot per entry,
add up to the target's invariant coordinates: 12 equations, one per
gamma coordinate.
"""

import json

from .cyclotomic import Cyclotomic
from .poly import (
    Polynomial, BrentVar, ParamId, parse_polynomial, parse_cyclotomic,
    var_from_str, PolyParseError,
)
from .invariants import orbit_sum
from .catalog import get_family, matmul_tensor

__all__ = [
    "BrentSystem", "BrentError", "generic_system", "invariant_system",
    "check_solution", "trivial_solution", "export", "parse_system",
]


class BrentError(Exception):
    pass


class Equation:
    """lhs = rhs with a stable label (a basis index or a gamma id)."""

    __slots__ = ("label", "lhs", "rhs")

    def __init__(self, label, lhs, rhs):
        self.label = label
        self.lhs = lhs
        self.rhs = Cyclotomic.coerce(rhs)

    def holds(self, assignment):
        return self.lhs.substitute(assignment) == Polynomial.constant(self.rhs)

    def __eq__(self, other):
        return (isinstance(other, Equation)
                and (self.label, self.lhs, self.rhs)
                == (other.label, other.lhs, other.rhs))

    def __repr__(self):
        return f"{self.lhs} = {self.rhs}"


class BrentSystem:
    __slots__ = ("mode", "rank", "multiset", "variables", "equations")

    def __init__(self, mode, variables, equations, rank=None, multiset=None):
        assert mode in ("generic", "invariant")
        self.mode = mode
        self.rank = rank
        self.multiset = None if multiset is None else tuple(multiset)
        self.variables = tuple(variables)
        self.equations = tuple(equations)

    def __eq__(self, other):
        return (isinstance(other, BrentSystem)
                and (self.mode, self.rank, self.multiset) ==
                    (other.mode, other.rank, other.multiset)
                and self.variables == other.variables
                and self.equations == other.equations)

    def __repr__(self):
        tag = self.rank if self.mode == "generic" else list(self.multiset)
        return (f"<BrentSystem {self.mode} {tag}: "
                f"{len(self.equations)} equations, "
                f"{len(self.variables)} variables>")


def generic_system(rank):
    """729 equations stating that rank many rank-one tensors sum to
    the matrix multiplication tensor."""
    if rank < 1:
        raise BrentError("rank must be >= 1")
    variables = [
        BrentVar(f, j, i, k)
        for j in range(1, rank + 1)
        for f in range(3)
        for i in (1, 2, 3)
        for k in (1, 2, 3)
    ]
    target = matmul_tensor()
    equations = []
    for i1 in (1, 2, 3):
        for j1 in (1, 2, 3):
            for i2 in (1, 2, 3):
                for j2 in (1, 2, 3):
                    for i3 in (1, 2, 3):
                        for j3 in (1, 2, 3):
                            alpha = ((i1, j1), (i2, j2), (i3, j3))
                            lhs = Polynomial()
                            for j in range(1, rank + 1):
                                lhs = lhs + (
                                    Polynomial.variable(BrentVar(0, j, i1, j1))
                                    * Polynomial.variable(BrentVar(1, j, i2, j2))
                                    * Polynomial.variable(BrentVar(2, j, i3, j3))
                                )
                            rhs = target.coeff(alpha).constant_value()
                            equations.append(Equation(alpha, lhs, rhs))
    return BrentSystem("generic", variables, equations, rank=rank)


def invariant_system(multiset):
    """12 equations stating that the orbit sums of the multiset, with
    fresh parameters per slot, add up to the target's invariant
    coordinates (1 at gamma_1, gamma_3, gamma_9; 0 elsewhere)."""
    multiset = tuple(multiset)
    if not multiset:
        raise BrentError("multiset must be nonempty")
    variables = []
    total = None
    for slot, fid in enumerate(multiset, start=1):
        fam = get_family(fid)
        variables.extend(fam.param_ids(slot))
        v = orbit_sum(fam.tensor(slot=slot), fam.length)
        total = v if total is None else total + v
    equations = []
    for m in range(1, 13):
        rhs = 1 if m in (1, 3, 9) else 0
        equations.append(Equation(m, total[m], rhs))
    return BrentSystem("invariant", variables, equations, multiset=multiset)


def check_solution(system, assignment):
    """Substitute a total assignment and test every equation exactly.

    Returns (ok, failing labels).  The assignment maps variable names
    (or variable objects) to scalars; every system variable must be
    assigned.
    """
    values = {}
    for k, v in assignment.items():
        var = var_from_str(k) if isinstance(k, str) else k
        values[var] = Cyclotomic.coerce(v)
    missing = [v for v in system.variables if v not in values]
    if missing:
        raise BrentError(
            f"assignment misses {len(missing)} variables, first {missing[0]}"
        )
    failing = [eq.label for eq in system.equations if not eq.holds(values)]
    return not failing, failing


def trivial_solution():
    """The rank-27 decomposition reading off the definition of matrix
    multiplication: term (i,j,k) is e(ij) x e(jk) x e(ki)."""
    assignment = {}
    term = 0
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            for k in (1, 2, 3):
                term += 1
                pairs = ((i, j), (j, k), (k, i))
                for f in range(3):
                    for r in (1, 2, 3):
                        for c in (1, 2, 3):
                            val = 1 if (r, c) == pairs[f] else 0
                            assignment[BrentVar(f, term, r, c)] = val
    return assignment


# -- serialization ---------------------------------------------------

def _label_to_json(label):
    if isinstance(label, int):
        return label
    return [list(p) for p in label]


def _label_from_json(obj):
    if isinstance(obj, int):
        return obj
    return tuple(tuple(p) for p in obj)


def to_json(system):
    rec = {"mode": system.mode}
    if system.mode == "generic":
        rec["rank"] = system.rank
    else:
        rec["multiset"] = list(system.multiset)
    rec["variables"] = [str(v) for v in system.variables]
    rec["equations"] = [
        {
            "label": _label_to_json(eq.label),
            "lhs": str(eq.lhs),
            "rhs": str(eq.rhs),
        }
        for eq in system.equations
    ]
    return rec


def parse_system(rec):
    if isinstance(rec, (str, bytes)):
        rec = json.loads(rec)
    try:
        mode = rec["mode"]
        variables = [var_from_str(s) for s in rec["variables"]]
        equations = [
            Equation(
                _label_from_json(e["label"]),
                parse_polynomial(e["lhs"]),
                parse_cyclotomic(e["rhs"]),
            )
            for e in rec["equations"]
        ]
        if mode == "generic":
            return BrentSystem(mode, variables, equations, rank=rec["rank"])
        if mode == "invariant":
            return BrentSystem(mode, variables, equations,
                               multiset=rec["multiset"])
    except (KeyError, TypeError, PolyParseError, ValueError) as exc:
        raise BrentError(f"bad system record: {exc}") from exc
    raise BrentError(f"bad system mode: {mode!r}")


def _wbasis(c, gen="w"):
    """A cyclotomic scalar as an expression in the generator alone,
    for exports to solvers that know only the minimal polynomial."""
    parts = []
    for k, q in enumerate(c.coords):
        if not q:
            continue
        if k == 0:
            parts.append(str(q))
        else:
            mono = gen if k == 1 else f"{gen}^{k}"
            if q == 1:
                parts.append(mono)
            elif q == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{q}*{mono}")
    if not parts:
        return "0"
    return "+".join(parts).replace("+-", "-")


def _m2_poly(p, gen="w"):
    parts = []
    for mono, c in sorted(p.terms.items(),
                          key=lambda t: [(v.key(), e) for v, e in t[0]]):
        factors = []
        cs = _wbasis(c, gen)
        if "+" in cs[1:] or "-" in cs[1:]:
            factors.append(f"({cs})")
        elif cs != "1" or not mono:
            factors.append(cs)
        for v, e in mono:
            name = str(v).replace("_", "")
            factors.append(name if e == 1 else f"{name}^{e}")
        parts.append("*".join(factors))
    return "+".join(parts).replace("+-", "-") if parts else "0"


def export(system, fmt):
    """Deterministic serialization: json (round-trips through
    parse_system), text (one equation per line in the polynomial
    grammar), or m2 (a polynomial-ring script for external
    computer-algebra solvers)."""
    if fmt == "json":
        return json.dumps(to_json(system), indent=1) + "\n"
    if fmt == "text":
        lines = [f"{eq.lhs} = {eq.rhs}" for eq in system.equations]
        return "\n".join(lines) + "\n"
    if fmt == "m2":
        names = ", ".join(str(v).replace("_", "") for v in system.variables)
        lines = [
            "-- generated equation system; ww is a primitive 12th root of unity",
            "K = toField(QQ[ww]/(ww^4-ww^2+1));",
            f"R = K[{names}];",
            "I = ideal(",
        ]
        body = []
        for eq in system.equations:
            lhs = _m2_poly(eq.lhs, gen="ww")
            rhs = _wbasis(eq.rhs, gen="ww")
            body.append(f"  ({lhs}) - ({rhs})")
        lines.append(",\n".join(body))
        lines.append(");")
        return "\n".join(lines) + "\n"
    raise BrentError(f"unknown export format: {fmt!r}")
