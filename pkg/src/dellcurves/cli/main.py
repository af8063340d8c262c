"""Command-line front end: parse a job, run it, print a report.

Exit codes: 0 success, 2 parse or validation error, 3 request outside the supported scope.
"""

import argparse
import json
import shlex
import sys
from dataclasses import asdict, dataclass

from .. import __version__
from ..algebra.poly import Poly
from ..algebra.field import field_from_q, field_make, fq_distinguished_element
from ..errors import (DellError, EvenCharacteristic, ParseError, ScopeViolation, TooLarge,
                      ValidationError)
from ..invariants import (RamData, bad_fibre_long_edges, genus, graph_invariants,
                          group_structure, minimal_model_note, presentation_if_tree)
from ..local_points import (gonality_lower_bound, global_points, hasse_certificate,
                            local_points, min_local_degrees)
from ..places import Place
from ..quaternion import (MatrixRep, conic_equation, cyclic_generator, matrix_embed,
                          maximal_order_check, quat_order, torsion_units, uniformizer_pi,
                          vertex_fix_check)
from ..textio import parse_place, split_top_level

COMMANDS = ("info", "graph", "points", "generators", "conic", "hasse")
SCOPE_ERRORS = (ScopeViolation, TooLarge)


@dataclass(frozen=True)
class JobSpec:
    p: int
    n: int
    R: tuple
    command: str
    place: str = None
    e: int = 1
    f: int = 1
    prec: int = 30
    parallel: int = 1

    @property
    def q(self):
        return self.p ** self.n

    def field(self):
        return field_make(self.p, self.n)

    def ram(self):
        F = self.field()
        return RamData.make(F, [parse_place(F, s) for s in self.R])

    def argv(self):
        out = ["--q", str(self.p), "--n", str(self.n), "--R", ",".join(self.R),
               "--prec", str(self.prec)]
        if self.parallel != 1:
            out += ["--parallel", str(self.parallel)]
        out.append(self.command)
        if self.command == "points":
            if self.place is not None:
                out += ["--place", self.place]
            out += ["--e", str(self.e), "--f", str(self.f)]
        return out

    def __str__(self):
        return shlex.join(self.argv())

    def to_json(self):
        return asdict(self)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message, expected="see --help")


def _add_globals(ap, defaults):
    def d(value):
        return value if defaults else argparse.SUPPRESS
    ap.add_argument("--q", default=d(None), help="field size q (or the prime p when --n is given)")
    ap.add_argument("--n", type=int, default=d(None), help="extension degree n, q = p^n")
    ap.add_argument("--R", default=d(None), help="comma-separated monic irreducibles, e.g. 'T,T+2'")
    ap.add_argument("--prec", type=int, default=d(30), help="Laurent precision (default 30)")
    ap.add_argument("--json", metavar="PATH", default=d(None),
                    help="write the JSON report; '-' = stdout")
    ap.add_argument("--parallel", type=int, default=d(1), help="worker processes for witness search")


def build_parser():
    ap = _Parser(prog="dellcurves",
                 description="Invariants and local points of modular curves of D-elliptic sheaves.")
    _add_globals(ap, True)
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        # global flags are accepted after the command too
        sp = sub.add_parser(name)
        _add_globals(sp, False)
        if name == "points":
            sp.add_argument("--place", default=None, help="a place (polynomial or 'inf')")
            sp.add_argument("--e", type=int, default=1)
            sp.add_argument("--f", type=int, default=1)
    return ap


def _int_arg(text, what):
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}", token=text,
                         expected="an integer") from None


def parse_job(argv):
    """Parse and validate argv into (JobSpec, json_path)."""
    ns = build_parser().parse_args(argv)
    if ns.command is None:
        ns.command = "info"
    for flag in ("q", "R"):
        if getattr(ns, flag) is None:
            raise ParseError(f"--{flag} is required", expected=f"--{flag}")
    q = _int_arg(ns.q, "--q")
    try:
        F = field_make(q, ns.n) if ns.n is not None else field_from_q(q)
    except DellError as exc:
        if isinstance(exc, TooLarge):
            raise
        raise ValidationError(str(exc)) from None
    entries = [s.strip() for s in split_top_level(ns.R, ",")]
    if any(not s for s in entries):
        raise ParseError("empty entry in --R", token=ns.R, expected="comma-separated polynomials")
    places = [parse_place(F, s) for s in entries]
    if any(v.is_infinite for v in places):
        raise ValidationError("R must consist of finite places")
    ram = RamData.make(F, places)
    place = None
    e = f = 1
    if ns.command == "points":
        if ns.place is not None:
            place = str(parse_place(F, ns.place))
        e, f = ns.e, ns.f
        if e < 1 or f < 1:
            raise ValidationError("--e and --f must be positive")
    if ns.prec < 30 and ns.command == "generators":
        raise ValidationError("--prec must be at least 30 for the generators report")
    if ns.prec < 1:
        raise ValidationError("--prec must be positive")
    if ns.parallel < 1:
        raise ValidationError("--parallel must be positive")
    job = JobSpec(F.p, F.n, tuple(str(v) for v in ram.R), ns.command, place, e, f,
                  ns.prec, ns.parallel)
    return job, ns.json


# -- commands ------------------------------------------------------------------------------

def _field_block(F):
    return {"p": F.p, "n": F.n, "q": F.q, "modulus": list(F.modulus),
            "xi": str(fq_distinguished_element(F))}


def _graph_block(ram):
    gi = graph_invariants(ram)
    pres = presentation_if_tree(ram)
    return {
        "g": gi.g, "V1": gi.V1, "Vq1": gi.Vq1, "E": gi.E, "euler_ok": gi.euler_ok,
        "bad_fibres": {str(o): bad_fibre_long_edges(ram, o).long_edge_count for o in ram.R},
        "edge_lengths": [1, ram.q + 1],
        "presentation": {"case": pres.case, "generators": pres.generator_count,
                         "orders": list(pres.generator_orders), "relations": list(pres.relations),
                         "graph": pres.graph},
        "note": minimal_model_note(),
    }


def _info(job, ram):
    gs = group_structure(ram)
    gb = gonality_lower_bound(ram)
    return {
        "field": _field_block(ram.spec),
        "R": [{"place": str(v), "deg": v.deg} for v in ram.R],
        "r": str(ram.r), "deg_r": ram.deg_r, "odd": ram.odd_flag,
        "genus": genus(ram),
        "graph": _graph_block(ram),
        "group": {"free_rank": gs.free_rank, "torsion": gs.torsion,
                  "torsion_class_count": gs.torsion_class_count,
                  "generator_bound": gs.generator_bound},
        "global_points": False,
        "gonality_bound": str(gb.exact),
    }


def _points(job, ram):
    F = ram.spec
    if job.place is not None:
        places = [parse_place(F, job.place)]
    else:
        places = sorted(set(ram.R) | {Place.infinity(F)}
                        | {Place(F, Poly(F, (c, 1))) for c in range(F.q)})
    verdicts = [local_points(ram, v, job.e, job.f, job.parallel).to_json() for v in places]
    m_v, m_loc = min_local_degrees(ram)
    glob = global_points(ram)
    return {"verdicts": verdicts,
            "m_v": {str(v): m for v, m in sorted(m_v.items(), key=lambda t: t[0].sort_key())},
            "m_loc": m_loc,
            "global_points": {"has_points": glob.has_points, "reason_place": str(glob.reason_place)}}


def _roots(ram):
    if not ram.spec.odd or sorted(ram.degrees) != [1, 1]:
        raise ScopeViolation("explicit generators need odd q and R = two degree-1 places")
    F = ram.spec
    # T - alpha has constant term -alpha
    return [F.neg(v.poly[0]) for v in reversed(ram.R)]


def _generators(job, ram):
    F = ram.spec
    a1, a2 = _roots(ram)
    tu = torsion_units(F, F.elem(a1), F.elem(a2))
    prec = job.prec
    n = F.q * F.q - 1
    out = {"alpha1": str(F.elem(a1)), "alpha2": str(F.elem(a2)),
           "b0": str(tu.b0), "d0": str(tu.d0),
           "theta1": str(tu.theta1), "theta2": str(tu.theta2)}
    gens = {}
    for name, theta in (("1", tu.theta1), ("2", tu.theta2)):
        lex = cyclic_generator(theta)
        gamma = 1 - theta
        gens[name] = {
            "least_generator": str(lex),
            "gamma": str(gamma), "gamma_order": quat_order(gamma, n),
            "gamma_pow_q_plus_1": str(gamma ** (F.q + 1)),
            "matrix": matrix_embed(gamma, prec).to_json(),
            "matrix_other_branch": matrix_embed(gamma, prec, branch=-1).to_json(),
        }
    out["generators"] = gens
    mo = maximal_order_check(tu.algebra, ram)
    out["maximal_order"] = {"ok": mo.ok, "gram_diagonal": [str(mo.gram[t][t]) for t in range(4)],
                            "det": str(mo.det)}
    pi = uniformizer_pi(tu, prec)
    I = MatrixRep.identity(F, prec)
    W = MatrixRep.diag(I.entries[0], pi)
    t1, t2 = matrix_embed(tu.theta1, prec), matrix_embed(tu.theta2, prec)
    out["pi"] = pi.to_string()
    out["vertex_fix"] = {"theta1_v": vertex_fix_check(t1, I), "theta2_w": vertex_fix_check(t2, W),
                         "theta1_w": vertex_fix_check(t1, W), "theta2_v": vertex_fix_check(t2, I)}
    return out


def _conic(job, ram):
    try:
        return conic_equation(ram).to_json()
    except EvenCharacteristic as exc:
        raise ScopeViolation(str(exc)) from None


def _hasse(job, ram):
    gb = gonality_lower_bound(ram)
    cert = hasse_certificate(ram)
    return {"certificate": cert.to_json(), "gonality_bound": str(gb.exact),
            "crude_bound_squared": str(gb.crude_squared)}


_DISPATCH = {"info": _info, "graph": lambda job, ram: _graph_block(ram), "points": _points,
             "generators": _generators, "conic": _conic, "hasse": _hasse}


def run_job(job):
    """Run a validated job; returns the JSON-ready report."""
    ram = job.ram()
    result = _DISPATCH[job.command](job, ram)
    return {"version": __version__, "job": job.to_json(), "result": result}


def error_report(exc):
    block = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        block.update(token=exc.token, position=exc.position, expected=exc.expected)
    return {"version": __version__, "error": block}


def exit_code(exc):
    return 3 if isinstance(exc, SCOPE_ERRORS) else 2


def dumps(report):
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def render_text(obj, indent=0):
    """Best-effort human-readable rendering of a report."""
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{obj}")
    return "\n".join(lines)


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    json_path = None
    try:
        job, json_path = parse_job(argv)
        report = run_job(job)
    except DellError as exc:
        err = error_report(exc)
        sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        if json_path not in (None, "-"):
            _write(json_path, dumps(err))
        return exit_code(exc)
    if json_path is not None:
        _write(json_path, dumps(report))
    if json_path != "-":
        sys.stdout.write(render_text(report["result"]) + "\n")
    return 0
