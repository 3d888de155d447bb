"""Command line front end.

    stackyrr chi --wps 1,2 --range 0..3
    stackyrr sectors --wps 1,2 --twist 1
    stackyrr poly --pqs 2,3 --group S3
    stackyrr todd-coarse --wps 1,1,2
    stackyrr check
"""
import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import engine
from .errors import GroupClosureError, IntegralityError, NotRationalError
from .exact_arith import Cyclotomic, format_rational
from .oracle import burnside_invariant_dimension, compare, weighted_monomial_count
from .stacks import (
    PermutationQuotientStack,
    WeightedProjectiveStack,
    cycle_string,
    cyclic_group,
    symmetric_group,
)

COMMANDS = ("chi", "sectors", "poly", "todd-coarse", "check")

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL, EXIT_MISMATCH = 0, 2, 3, 4

# Default battery for `check` with no stack: (kind, params, twists).
BATTERY = (
    ("wps", (1,), range(0, 11)),
    ("wps", (1, 1), range(0, 11)),
    ("wps", (1, 2), range(0, 21)),
    ("wps", (1, 1, 1), range(0, 11)),
    ("wps", (1, 1, 2), range(0, 16)),
    ("wps", (1, 2, 3), range(0, 16)),
    ("wps", (2, 3), range(0, 21)),
    ("wps", (4, 6), range(0, 37)),
    ("wps", (3, 4, 5, 7), range(0, 21)),
    ("wps", (2, 2, 3), range(0, 16)),
    ("wps", (1, 3, 8), range(0, 16)),
    ("pqs", (1, 2, "Z2"), range(0, 6)),
    ("pqs", (2, 3, "Z3"), range(0, 6)),
    ("pqs", (2, 3, "S3"), range(0, 6)),
    ("pqs", (1, 4, "Z4"), range(0, 6)),
    ("pqs", (1, 4, "S4"), range(0, 6)),
    ("pqs", (2, 4, "S3"), range(0, 4)),
    ("pqs", (1, 5, "S5"), range(0, 3)),
)


class UsageError(Exception):
    pass


@dataclass
class JobSpec:
    command: str
    stack: object
    twists: list = field(default_factory=list)
    fmt: str = "text"
    group_name: str = None

    def stack_record(self):
        return stack_record(self.stack, self.group_name)

    def stack_text(self):
        return describe(self.stack, self.group_name)


def describe(stack, group_name=None):
    if isinstance(stack, PermutationQuotientStack):
        return stack.describe(group_name)
    return str(stack)


def stack_record(stack, group_name=None):
    if isinstance(stack, WeightedProjectiveStack):
        return {"kind": "wps", "weights": list(stack.weights)}
    if isinstance(stack, PermutationQuotientStack):
        rec = {
            "kind": "pqs",
            "n": stack.n,
            "k": stack.k,
            "group": [cycle_string(g) for g in stack.group],
        }
        if group_name:
            rec["group_name"] = group_name
        return rec
    return None


def stack_from_record(rec):
    if rec is None:
        return None
    if rec["kind"] == "wps":
        return WeightedProjectiveStack(tuple(rec["weights"]))
    group = parse_group(",".join(rec["group"]), rec["k"])
    return PermutationQuotientStack(rec["n"], rec["k"], group)


def job_from_record(rec):
    """Rebuild the JobSpec that produced a machine-format record."""
    twists = rec.get("twists")
    if twists is None:
        twists = [rec["twist"]] if rec.get("twist") is not None else []
    stack_rec = rec.get("stack")
    return JobSpec(
        rec["command"],
        stack_from_record(stack_rec),
        list(twists),
        "machine",
        stack_rec.get("group_name") if stack_rec else None,
    )


# -- parsing --------------------------------------------------------------------


def parse_permutation(text, k):
    """One permutation in cycle notation, e.g. "(12)(34)", "(1 2)(3 4)" or "(1)"."""
    text = text.strip()
    if not re.fullmatch(r"(\([0-9 ]+\))+", text):
        raise UsageError(f"--group: cannot parse permutation {text!r}")
    perm = list(range(k))
    touched = set()
    for body in re.findall(r"\(([0-9 ]+)\)", text):
        points = body.split() if " " in body.strip() else list(body.strip())
        points = [int(p) - 1 for p in points]
        for p in points:
            if not 0 <= p < k:
                raise UsageError(f"--group: point {p + 1} out of range 1..{k}")
            if p in touched:
                raise UsageError(f"--group: cycles in {text!r} are not disjoint")
        touched.update(points)
        if len(points) > 1:
            for a, b in zip(points, points[1:] + points[:1]):
                perm[a] = b
    return tuple(perm)


def parse_group(text, k):
    m = re.fullmatch(r"([ZS])([0-9]+)", text.strip())
    if m:
        j = int(m.group(2))
        if not 1 <= j <= k:
            raise UsageError(f"--group: {text} needs 1 <= {j} <= k = {k}")
        return cyclic_group(j, k) if m.group(1) == "Z" else symmetric_group(j, k)
    items = [s for s in re.split(r",(?![^()]*\))", text) if s.strip()]
    if not items:
        raise UsageError("--group: empty group")
    return tuple(parse_permutation(s, k) for s in items)


def parse_int_list(text, flag):
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {text!r}") from None


def parse_range(text):
    m = re.fullmatch(r"\s*(-?[0-9]+)\s*\.\.\s*(-?[0-9]+)\s*", text)
    if not m:
        raise UsageError(f"--range: expected A..B, got {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    if b < a:
        raise UsageError(f"--range: empty range {text!r}")
    return list(range(a, b + 1))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="stackyrr", description="Euler characteristics on quotient stacks by localization.")
    p.add_argument("command", choices=COMMANDS)
    stack = p.add_mutually_exclusive_group()
    stack.add_argument("--wps", metavar="W0,W1,...", help="weighted projective stack")
    stack.add_argument("--pqs", metavar="N,K", help="(P^N)^K modulo a permutation group")
    p.add_argument("--group", help="Zj, Sj, or a comma-separated list of permutations in cycle notation")
    twist = p.add_mutually_exclusive_group()
    twist.add_argument("--twist", type=int, metavar="L")
    twist.add_argument("--range", metavar="A..B")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    return p


def _glue_values(argv):
    # let "--range -3..3" and "--twist -2" through argparse's option sniffing
    out = []
    it = iter(argv)
    for a in it:
        if a in ("--range", "--twist"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def parse_args(argv):
    ns = build_parser().parse_args(_glue_values(list(argv)))
    stack = None
    group_name = None
    if ns.wps is not None:
        if ns.group is not None:
            raise UsageError("--group only applies to --pqs")
        weights = parse_int_list(ns.wps, "--wps")
        if any(w < 1 for w in weights):
            raise UsageError(f"--wps: weights must be positive, got {ns.wps}")
        stack = WeightedProjectiveStack(tuple(weights))
    elif ns.pqs is not None:
        nk = parse_int_list(ns.pqs, "--pqs")
        if len(nk) != 2 or nk[0] < 0 or nk[1] < 1:
            raise UsageError(f"--pqs: expected N,K with N >= 0, K >= 1, got {ns.pqs}")
        if ns.group is None:
            raise UsageError("--pqs requires --group")
        n, k = nk
        group = parse_group(ns.group, k)
        if re.fullmatch(r"[ZS][0-9]+", ns.group.strip()):
            group_name = ns.group.strip()
        try:
            stack = PermutationQuotientStack(n, k, group)
        except GroupClosureError as exc:
            raise GroupClosureError(f"--group: {exc}") from None
    elif ns.group is not None:
        raise UsageError("--group requires --pqs")

    if ns.twist is not None:
        twists = [ns.twist]
    elif ns.range is not None:
        twists = parse_range(ns.range)
    else:
        twists = []

    cmd = ns.command
    if cmd != "check" and stack is None:
        raise UsageError(f"{cmd}: one of --wps or --pqs is required")
    if cmd in ("chi", "sectors") and not twists:
        raise UsageError(f"{cmd}: --twist or --range is required")
    if cmd == "poly" and not isinstance(stack, PermutationQuotientStack):
        raise UsageError("poly: only --pqs stacks have a polynomial Euler characteristic")
    if cmd == "todd-coarse" and not isinstance(stack, WeightedProjectiveStack):
        raise UsageError("todd-coarse: only --wps stacks are supported")
    if cmd == "check" and stack is not None and not twists:
        twists = list(range(0, 11))
    if cmd == "check" and any(t < 0 for t in twists):
        raise UsageError("check: the oracles are only valid for nonnegative twists")
    return JobSpec(cmd, stack, twists, ns.format, group_name)


# -- formatting -----------------------------------------------------------------


def fmt_value(c):
    """Exact text form: p/q for rationals, [N; c0, c1, ...] otherwise."""
    return str(Cyclotomic.coerce(c))


def json_value(c):
    c = Cyclotomic.coerce(c)
    if c.is_rational():
        return format_rational(c.coeffs[0])
    return {"order": c.order, "coeffs": [format_rational(x) for x in c.coeffs]}


def value_from_json(v):
    if isinstance(v, str):
        return Cyclotomic.rational(Fraction(v))
    return Cyclotomic(v["order"], [Fraction(x) for x in v["coeffs"]])


def sector_label(sector):
    if hasattr(sector, "order"):
        return [sector.order, sector.exponent]
    return sector.label


def _contributions(stack, t):
    if isinstance(stack, WeightedProjectiveStack):
        return engine.sector_contributions_wps(stack, t), 1
    return engine.sector_contributions_pqs(stack, t), stack.order


def _chi(stack, t):
    if isinstance(stack, WeightedProjectiveStack):
        return engine.euler_characteristic_wps(stack, t)
    return engine.euler_characteristic_pqs(stack, t)


def _emit(out, job, rec):
    base = {"command": job.command, "stack": job.stack_record()}
    base.update(rec)
    out.write(json.dumps(base, sort_keys=False, separators=(",", ":")) + "\n")


def run_chi(job, out):
    if job.fmt == "text":
        out.write(f"stack: {job.stack_text()}\n")
    for t in job.twists:
        value = _chi(job.stack, t)
        if job.fmt == "text":
            out.write(f"chi(twist {t}) = {value}\n")
        else:
            contribs, weight = _contributions(job.stack, t)
            _emit(out, job, {
                "twist": t,
                "value": format_rational(value),
                "sectors": [
                    {"label": sector_label(c.sector), "value": json_value(c.value / weight)}
                    for c in contribs
                ],
            })
    return EXIT_OK


def run_sectors(job, out):
    for t in job.twists:
        contribs, weight = _contributions(job.stack, t)
        value = _chi(job.stack, t)
        if job.fmt == "text":
            out.write(f"stack: {job.stack_text()}\n")
            out.write(f"twist: {t}\n")
            if weight != 1:
                out.write(f"sector values include the 1/{weight} group-order factor\n")
            for c in contribs:
                label = sector_label(c.sector)
                label = f"({label[0]}, {label[1]})" if isinstance(label, list) else label
                out.write(f"sector {label}: {fmt_value(c.value / weight)}\n")
            out.write(f"total: {value}\n")
        else:
            _emit(out, job, {
                "twist": t,
                "value": format_rational(value),
                "sectors": [
                    {"label": sector_label(c.sector), "value": json_value(c.value / weight)}
                    for c in contribs
                ],
            })
    return EXIT_OK


def poly_string(coeffs, var="m"):
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        cs = format_rational(c)
        if k == 0:
            parts.append(cs)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            parts.append(mono if cs == "1" else f"{cs}*{mono}")
    return " + ".join(parts) if parts else "0"


def run_poly(job, out):
    coeffs = engine.chi_polynomial_pqs(job.stack)
    if job.fmt == "text":
        out.write(f"stack: {job.stack_text()}\n")
        out.write(f"chi(m) = {poly_string(coeffs)}\n")
        out.write("coefficients: " + ", ".join(format_rational(c) for c in coeffs) + "\n")
    else:
        _emit(out, job, {
            "twist": None,
            "value": [format_rational(c) for c in coeffs],
            "sectors": [],
        })
    return EXIT_OK


def run_todd(job, out):
    td = engine.coarse_todd_wps(job.stack)
    labels = td.basis_labels()
    if job.fmt == "text":
        out.write(f"stack: {job.stack_text()}\n")
        out.write("basis: " + ", ".join(labels) + "\n")
        for s, piece in td.pieces:
            out.write(f"sector ({s.order}, {s.exponent}): " + ", ".join(fmt_value(c) for c in piece) + "\n")
        out.write("coefficients: " + ", ".join(format_rational(c) for c in td.coefficients) + "\n")
        terms = []
        for c, lab in zip(td.coefficients, labels):
            if c != 0:
                terms.append(format_rational(c) if lab == "1" else f"{format_rational(c)}*{lab}")
        out.write("td = " + " + ".join(terms) + "\n")
    else:
        _emit(out, job, {
            "twist": None,
            "value": [format_rational(c) for c in td.coefficients],
            "basis": labels,
            "sectors": [
                {"label": [s.order, s.exponent], "value": [json_value(c) for c in piece]}
                for s, piece in td.pieces
            ],
        })
    return EXIT_OK


def battery_jobs():
    for kind, params, twists in BATTERY:
        if kind == "wps":
            yield WeightedProjectiveStack(params), None, list(twists)
        else:
            n, k, name = params
            yield PermutationQuotientStack(n, k, parse_group(name, k)), name, list(twists)


def run_check(job, out):
    cases = [(job.stack, job.group_name, job.twists)] if job.stack is not None else list(battery_jobs())
    mismatches = 0
    total = 0
    for stack, name, twists in cases:
        for t in twists:
            if isinstance(stack, WeightedProjectiveStack):
                oracle = weighted_monomial_count(stack.weights, t)
            else:
                oracle = burnside_invariant_dimension(stack.n, stack.k, stack.group, t)
            report = compare(_chi(stack, t), oracle)
            total += 1
            mismatches += not report.agree
            if job.fmt == "text":
                status = "ok" if report.agree else "MISMATCH"
                out.write(
                    f"{status} {describe(stack, name)} twist {t}: engine {format_rational(report.engine)}"
                    f" oracle {format_rational(report.oracle)}\n"
                )
            else:
                out.write(json.dumps({
                    "command": "check",
                    "stack": stack_record(stack, name),
                    "twist": t,
                    "value": format_rational(report.engine),
                    "oracle": format_rational(report.oracle),
                    "agree": report.agree,
                }, separators=(",", ":")) + "\n")
    if job.fmt == "text":
        out.write(f"{total - mismatches}/{total} cases agree\n")
    return EXIT_MISMATCH if mismatches else EXIT_OK


RUNNERS = {
    "chi": run_chi,
    "sectors": run_sectors,
    "poly": run_poly,
    "todd-coarse": run_todd,
    "check": run_check,
}


def run(job, out=None):
    out = sys.stdout if out is None else out
    try:
        return RUNNERS[job.command](job, out)
    except (IntegralityError, NotRationalError) as exc:
        print(f"stackyrr: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main(argv=None, out=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        job = parse_args(argv)
    except (UsageError, GroupClosureError) as exc:
        print(f"stackyrr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(job, out)


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
