"""JSON documents: fan-v1, asreport-v1, degrees-v1, outcome-v1.

Exact quantities are written as integers or ``{"num": .., "den": ..}``
rationals, never floats.  :func:`dumps` is byte-deterministic.
"""

import json
from fractions import Fraction

from .dynamics import (ASReport, DegreeReport, MonomialMap, Phase, RayTrace,
                       Step, Terminal, Verdict, Witness)
from .exact import AlgebraicNumber
from .fan import SublatticeBasis, fan_from_dict, fan_to_dict
from .lattice import Ray
from .stabilizer import (Certificate, ClassKind, Classification, Holomorphic,
                         Impossible, Stabilized)

ASREPORT_FORMAT = "toristab-asreport-v1"
DEGREES_FORMAT = "toristab-degrees-v1"
OUTCOME_FORMAT = "toristab-outcome-v1"


def dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=True)


def _check_format(doc, fmt):
    if doc.get("format") != fmt:
        raise ValueError(f"expected format {fmt!r}, got {doc.get('format')!r}")


def rat_to_dict(q: Fraction) -> dict:
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def rat_from_dict(doc) -> Fraction:
    return Fraction(int(doc["num"]), int(doc["den"]))


def _opt(f, x):
    return None if x is None else f(x)


def matrix_to_list(A: MonomialMap):
    return [[A.a, A.b], [A.c, A.d]]


def matrix_from_list(m) -> MonomialMap:
    return MonomialMap.of(m)


def algebraic_to_dict(x: AlgebraicNumber) -> dict:
    return {"min_poly": list(x.min_poly),
            "root_selector": x.root_selector,
            "interval": [rat_to_dict(x.interval[0]), rat_to_dict(x.interval[1])]}


def algebraic_from_dict(doc) -> AlgebraicNumber:
    lo, hi = (rat_from_dict(v) for v in doc["interval"])
    return AlgebraicNumber(tuple(doc["min_poly"]), (lo, hi), doc.get("root_selector", "max"))


# -- AS reports -------------------------------------------------------------

def _step_to_dict(s: Step) -> dict:
    return {"n": s.n, "dir": [s.dir.x, s.dir.y], "phase": s.phase.value, "cone": s.cone}


def _terminal_to_dict(t: Terminal) -> dict:
    return {"status": t.status, "n": t.n, "cone": t.cone, "cycle_start": t.cycle_start}


def asreport_to_dict(r: ASReport) -> dict:
    return {
        "format": ASREPORT_FORMAT,
        "matrix": matrix_to_list(r.matrix),
        "fan": fan_to_dict(r.fan),
        "verdict": r.verdict.value,
        "witness": None if r.witness is None else {
            "ray": [r.witness.ray.x, r.witness.ray.y],
            "k": r.witness.k, "cone": r.witness.cone},
        "traces": [{"ray": [t.ray.x, t.ray.y],
                    "steps": [_step_to_dict(s) for s in t.steps],
                    "terminal": _terminal_to_dict(t.terminal)} for t in r.traces],
        "notes": list(r.notes),
    }


def asreport_from_dict(doc) -> ASReport:
    _check_format(doc, ASREPORT_FORMAT)
    w = doc["witness"]
    traces = []
    for t in doc["traces"]:
        steps = tuple(Step(s["n"], Ray(*s["dir"]), Phase(s["phase"]), s["cone"])
                      for s in t["steps"])
        term = t["terminal"]
        traces.append(RayTrace(Ray(*t["ray"]), steps,
                               Terminal(term["status"], term["n"], term["cone"],
                                        term["cycle_start"])))
    return ASReport(
        matrix_from_list(doc["matrix"]),
        fan_from_dict(doc["fan"], strict=True),
        Verdict(doc["verdict"]),
        tuple(traces),
        None if w is None else Witness(Ray(*w["ray"]), w["k"], w["cone"]),
        tuple(doc["notes"]),
    )


# -- degree reports ---------------------------------------------------------

def degrees_to_dict(r: DegreeReport) -> dict:
    return {"format": DEGREES_FORMAT,
            "matrix": matrix_to_list(r.matrix),
            "degrees": list(r.degrees),
            "lambda1": algebraic_to_dict(r.lambda1),
            "topological_degree": r.topological_degree}


def degrees_from_dict(doc) -> DegreeReport:
    _check_format(doc, DEGREES_FORMAT)
    return DegreeReport(matrix_from_list(doc["matrix"]), tuple(doc["degrees"]),
                        algebraic_from_dict(doc["lambda1"]), doc["topological_degree"])


# -- stabilization outcomes -------------------------------------------------

def classification_to_dict(c: Classification) -> dict:
    return {"kind": c.kind.value, "order": c.order,
            "cos_two_pi_theta": _opt(rat_to_dict, c.cos_two_pi_theta)}


def classification_from_dict(doc) -> Classification:
    return Classification(ClassKind(doc["kind"]), doc["order"],
                          _opt(rat_from_dict, doc["cos_two_pi_theta"]))


def _basis_to_list(B: SublatticeBasis):
    return [list(B.b1), list(B.b2)]


def _basis_from_list(m) -> SublatticeBasis:
    return SublatticeBasis(tuple(m[0]), tuple(m[1]))


def _lattice_fields(o) -> dict:
    return {"regular": o.regular,
            "sublattice": _opt(_basis_to_list, o.sublattice),
            "cover_degree": o.cover_degree,
            "singular_cones": list(o.singular_cones),
            "sublattice_invariant": o.sublattice_invariant}


def outcome_to_dict(o) -> dict:
    doc = {"format": OUTCOME_FORMAT, "kind": type(o).__name__,
           "matrix": matrix_to_list(o.matrix),
           "classification": classification_to_dict(o.classification)}
    if isinstance(o, Impossible):
        doc["certificate"] = {"disc": o.certificate.disc,
                              "cos_two_pi_theta": rat_to_dict(o.certificate.cos_two_pi_theta)}
    else:
        doc["fan"] = fan_to_dict(o.fan)
        doc.update(_lattice_fields(o))
        if isinstance(o, Stabilized):
            doc["as_report"] = asreport_to_dict(o.as_report)
    doc["notes"] = list(o.notes)
    return doc


def outcome_from_dict(doc):
    _check_format(doc, OUTCOME_FORMAT)
    A = matrix_from_list(doc["matrix"])
    cls = classification_from_dict(doc["classification"])
    notes = tuple(doc["notes"])
    kind = doc["kind"]
    if kind == "Impossible":
        c = doc["certificate"]
        return Impossible(A, cls, Certificate(c["disc"], rat_from_dict(c["cos_two_pi_theta"])), notes)
    common = dict(matrix=A, classification=cls,
                  fan=fan_from_dict(doc["fan"], strict=True),
                  regular=doc["regular"],
                  sublattice=_opt(_basis_from_list, doc["sublattice"]),
                  cover_degree=doc["cover_degree"],
                  singular_cones=tuple(doc["singular_cones"]),
                  sublattice_invariant=doc["sublattice_invariant"],
                  notes=notes)
    if kind == "Holomorphic":
        return Holomorphic(**common)
    if kind == "Stabilized":
        return Stabilized(as_report=asreport_from_dict(doc["as_report"]), **common)
    raise ValueError(f"unknown outcome kind {kind!r}")
