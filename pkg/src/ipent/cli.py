"""``ipent`` command-line front end.

Exit codes: 0 success (``classify``/``oracle``: separable), 1 entangled,
2 invalid input or any other failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import boson, correlation, fermion, matfact, measurement, oracle
from .errors import IpentError
from .fileio import dumps_report, encode_floats, encode_matrix, load_operator, load_state
from .states import SingleParticleState, TwoBosonState, TwoFermionState

EXIT_SEPARABLE = 0
EXIT_ENTANGLED = 1
EXIT_ERROR = 2

DEFAULT_SAMPLES = 1000
SUMMARY_COLUMNS = ("file", "label", "statistics", "verdict", "separable", "rank", "measure")


class UsageError(IpentError):
    pass


def _header(command, loaded):
    st = loaded.state
    return {"command": command, "label": loaded.label, "statistics": st.statistics,
            "modes": st.modes}


def _two_particle(loaded, command):
    if isinstance(loaded.state, SingleParticleState):
        raise UsageError(f"{command} needs a two-particle state, got a single-particle file")
    return loaded.state


def _fmt(values):
    return " ".join(f"{v:.10g}" for v in values) or "(none)"


def _occ(occ):
    return "(" + ",".join(str(k) for k in occ) + ")"


def _entries(dist):
    return [{"occupation": list(o), "probability": p} for o, p in dist.items()]


# reports ------------------------------------------------------------------

def classify_report(loaded, rank_tol, eps_sep):
    st = _two_particle(loaded, "classify")
    rep = _header("classify", loaded)
    if isinstance(st, TwoBosonState):
        v = boson.classify(st, eps_sep, rank_tol)
        rep.update(verdict=v.kind.value, separable=v.separable, rank=v.rank,
                   lambdas=encode_floats(v.lambdas), measure=v.measure)
    else:
        v = fermion.classify(st, rank_tol)
        rep.update(verdict=v.kind.value, separable=v.separable, rank=v.rank,
                   z=encode_floats(v.z), measure=None)
    return rep


def decompose_report(loaded, rank_tol):
    st = _two_particle(loaded, "decompose")
    rep = _header("decompose", loaded)
    if isinstance(st, TwoBosonState):
        form = boson.standard_form(st, rank_tol)
        rep.update(rank=form.rank, lambdas=encode_floats(form.lambdas))
    else:
        form = fermion.standard_form(st, rank_tol)
        rep.update(rank=form.rank, z=encode_floats(form.z))
    rep["basis"] = encode_matrix(form.basis)
    return rep


def measure_report(loaded, rank_tol, eps_sep):
    st = _two_particle(loaded, "measure")
    rep = _header("measure", loaded)
    if isinstance(st, TwoFermionState):
        form = fermion.standard_form(st, rank_tol)
        rep.update(rank=form.rank, z=encode_floats(form.z), measure=None, pair_form=None)
        return rep
    form = boson.standard_form(st, rank_tol)
    pf = boson.pair_form_translate(form, eps_sep)
    rep.update(rank=form.rank, lambdas=encode_floats(form.lambdas),
               measure=boson.entanglement_measure(form),
               pair_form=None if pf is None else {
                   "pair_count": pf.pair_count, "z": encode_floats(pf.z),
                   "schmidt": encode_floats(pf.schmidt)})
    return rep


def correlate_report(loaded, operators, tol):
    st = loaded.state
    rep = _header("correlate", loaded)
    results = []
    for label, op in operators:
        r = correlation.relative_correlation(op, st, tol)
        results.append({"operator": label, "correlated": r.correlated,
                        "eigenvalue": r.eigenvalue, "residual": r.residual,
                        "expectation": correlation.expectation(op, st)})
    rep.update(tol=tol, results=results)
    return rep


def default_operators(modes):
    return [(f"n_{i}", correlation.number_operator(modes, i)) for i in range(modes)]


def dist_report(loaded):
    st = _two_particle(loaded, "dist")
    rep = _header("dist", loaded)
    dist = measurement.joint_distribution(st)
    conds = []
    for mode in range(st.modes):
        for observed, p in dist.marginal(mode).items():
            cond = measurement.conditional_distribution(dist, mode, observed)
            conds.append({"mode": mode, "observed": observed, "probability": p,
                          "distribution": _entries(cond)})
    rep.update(distribution=_entries(dist), conditionals=conds)
    return rep, dist


def sample_report(loaded, n, seed):
    st = _two_particle(loaded, "sample")
    rep = _header("sample", loaded)
    dist = measurement.joint_distribution(st)
    counts = measurement.sample(dist, n, seed)
    rep.update(n=n, seed=seed, counts=[
        {"occupation": list(o), "count": c, "probability": dist[o]} for o, c in counts.items()])
    return rep, dist, counts


def oracle_report(loaded, restarts, eps, seed):
    st = _two_particle(loaded, "oracle")
    rep = _header("oracle", loaded)
    v = oracle.oracle_separability(st, restarts, eps, seed)
    witness = None
    if v.separable:
        c, d = v.witness
        witness = {"c": [complex(z) for z in c], "d": [complex(z) for z in d]}
    rep.update(separable=v.separable, best_overlap=v.best_overlap, branch=v.branch.value,
               restarts=v.restarts_used, seed=seed, eps=eps, witness=witness)
    return rep


# summaries ----------------------------------------------------------------

def _summary_lines(rep):
    lines = [f"label: {rep['label']}", f"statistics: {rep['statistics']} ({rep['modes']} modes)"]
    cmd = rep["command"]
    if "verdict" in rep:
        lines.append(f"verdict: {rep['verdict']}")
    if "rank" in rep:
        lines.append(f"rank: {rep['rank']}")
    if "lambdas" in rep:
        lines.append(f"lambdas: {_fmt(rep['lambdas'])}")
    if "z" in rep:
        lines.append(f"z: {_fmt(rep['z'])}")
    if "measure" in rep:
        m = rep["measure"]
        lines.append("measure: " + ("n/a (fermions: see z and rank)" if m is None else f"{m:.10g}"))
    if cmd == "measure" and rep["statistics"] == "boson":
        pf = rep["pair_form"]
        lines.append("pair form: " + ("no" if pf is None else
                                      f"{pf['pair_count']} pairs, z = {_fmt(pf['z'])}"))
    if cmd == "correlate":
        for r in rep["results"]:
            state = (f"correlated (residual {r['residual']:.3e})" if r["correlated"] else
                     f"uncorrelated, eigenvalue {r['eigenvalue']:.10g}")
            lines.append(f"{r['operator']}: {state}")
    if cmd == "dist":
        for e in rep["distribution"]:
            lines.append(f"P{_occ(e['occupation'])} = {e['probability']:.10g}")
        for c in rep["conditionals"]:
            inner = ", ".join(f"{_occ(e['occupation'])}: {e['probability']:.10g}"
                              for e in c["distribution"])
            lines.append(f"given n_{c['mode']} = {c['observed']} "
                         f"(p = {c['probability']:.6g}): {inner}")
    if cmd == "sample":
        lines.append(f"samples: {rep['n']} (seed {rep['seed']})")
        for e in rep["counts"]:
            lines.append(f"{_occ(e['occupation'])}: {e['count']} "
                         f"(freq {e['count'] / rep['n']:.6f}, p {e['probability']:.6f})")
    if cmd == "oracle":
        lines.append("verdict: " + ("separable" if rep["separable"] else "entangled"))
        lines.append(f"best overlap: {rep['best_overlap']:.15g} ({rep['branch']}, "
                     f"{rep['restarts']} restarts, seed {rep['seed']})")
    return lines


def _emit(rep, out):
    print("\n".join(_summary_lines(rep)))
    if out:
        Path(out).write_text(dumps_report(rep), encoding="utf-8")


# batch --------------------------------------------------------------------

def _tsv_value(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    return repr(v) if isinstance(v, float) else str(v)


def summary_table(rows):
    """Per-file rows followed by a verdict count table, tab separated."""
    lines = ["\t".join(SUMMARY_COLUMNS)]
    counts = {}
    for r in rows:
        lines.append("\t".join(_tsv_value(r.get(c)) for c in SUMMARY_COLUMNS))
        counts[r["verdict"]] = counts.get(r["verdict"], 0) + 1
    sep = sum(1 for r in rows if r.get("separable") is True)
    ent = sum(1 for r in rows if r.get("separable") is False)
    err = sum(1 for r in rows if r["verdict"] == "error")
    lines += ["", "verdict\tcount"]
    lines += [f"{k}\t{counts[k]}" for k in sorted(counts)]
    lines += [f"separable\t{sep}", f"entangled\t{ent}", f"errors\t{err}"]
    return "\n".join(lines) + "\n"


def run_batch(directory, rank_tol, eps_sep, out=None):
    d = Path(directory)
    if not d.is_dir():
        raise UsageError(f"{directory}: not a directory")
    files = sorted(p for p in d.iterdir() if p.is_file() and p.suffix == ".json")
    rows, reports = [], {}
    for p in files:
        try:
            rep = classify_report(load_state(p), rank_tol, eps_sep)
        except IpentError as exc:
            print(f"ipent: {exc}", file=sys.stderr)
            rows.append({"file": p.name, "verdict": "error"})
            continue
        reports[p.stem] = rep
        rows.append({"file": p.name, "label": rep["label"], "statistics": rep["statistics"],
                     "verdict": rep["verdict"], "separable": rep["separable"],
                     "rank": rep["rank"], "measure": rep["measure"]})
    table = summary_table(rows)
    if out:
        o = Path(out)
        o.mkdir(parents=True, exist_ok=True)
        for stem, rep in reports.items():
            (o / f"{stem}.report.json").write_text(dumps_report(rep), encoding="utf-8")
        (o / "summary.tsv").write_text(table, encoding="utf-8")
    return rows, table


# argument handling ----------------------------------------------------------

def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--rank-tol", type=float, default=matfact.DEFAULT_RANK_TOL,
                   help="relative cutoff for the numerical rank (default %(default)g)")
    p.add_argument("--eps-sep", type=float, default=boson.DEFAULT_EPS_SEP,
                   help="relative tolerance for equal adjacent values (default %(default)g)")
    p.add_argument("--tol", type=float, default=None,
                   help="correlate: eigenvector residual cutoff (default 1e-9); "
                        "oracle: overlap tolerance (default 1e-7)")
    p.add_argument("--restarts", type=int, default=oracle.DEFAULT_RESTARTS)
    p.add_argument("--seed", type=int, default=None,
                   help="PRNG seed (required by sample; oracle default 0)")
    p.add_argument("--out", default=None,
                   help="write the full report here (batch: a directory)")
    p.add_argument("--plot", default=None, metavar="FILE",
                   help="also render a figure (decompose, measure, dist, sample, batch)")
    return p


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ipent", description="Separability and entanglement of two identical particles.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()
    helps = {
        "classify": "separable or entangled, with the standard-form values",
        "decompose": "standard form: values, rank and mode basis",
        "measure": "boson entanglement measure and pair-form translation",
        "correlate": "eigenvector test against one-body operators",
        "dist": "joint particle-number distribution and conditionals",
        "sample": "seeded samples from the number distribution",
        "oracle": "independent product-state search",
        "batch": "classify every *.json state file in a directory",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text, description=text)
        p.add_argument("path")
        if name == "correlate":
            p.add_argument("--operator", action="append", default=[], metavar="FILE",
                           help="one-body operator file (repeatable; default: every n_i)")
        if name == "sample":
            p.add_argument("-n", "--samples", type=int, default=DEFAULT_SAMPLES)
    return parser


def _verdict_code(separable):
    return EXIT_SEPARABLE if separable else EXIT_ENTANGLED


def _dispatch(args):
    cmd = args.command
    if cmd == "batch":
        rows, table = run_batch(args.path, args.rank_tol, args.eps_sep, args.out)
        sys.stdout.write(table)
        if args.plot:
            from .plotting import plot_batch
            plot_batch([r for r in rows if r["verdict"] != "error"], args.plot)
        return EXIT_ERROR if any(r["verdict"] == "error" for r in rows) else 0

    loaded = load_state(args.path)
    if cmd == "classify":
        rep = classify_report(loaded, args.rank_tol, args.eps_sep)
        _emit(rep, args.out)
        return _verdict_code(rep["separable"])
    if cmd in ("decompose", "measure"):
        rep = (decompose_report(loaded, args.rank_tol) if cmd == "decompose"
               else measure_report(loaded, args.rank_tol, args.eps_sep))
        _emit(rep, args.out)
        if args.plot:
            from .plotting import plot_spectrum
            key = "lambdas" if "lambdas" in rep else "z"
            plot_spectrum(rep[key], args.plot, key, f"{rep['label']}: {key}")
        return 0
    if cmd == "correlate":
        if args.operator:
            operators = [(lbl, op) for op, lbl in map(load_operator, args.operator)]
        else:
            operators = default_operators(loaded.state.modes)
        tol = correlation.DEFAULT_TOL if args.tol is None else args.tol
        _emit(correlate_report(loaded, operators, tol), args.out)
        return 0
    if cmd == "dist":
        rep, dist = dist_report(loaded)
        _emit(rep, args.out)
        if args.plot:
            from .plotting import plot_distribution
            plot_distribution(dist.entries, args.plot, title=rep["label"])
        return 0
    if cmd == "sample":
        if args.seed is None:
            raise UsageError("sample needs an explicit --seed")
        rep, dist, counts = sample_report(loaded, args.samples, args.seed)
        _emit(rep, args.out)
        if args.plot:
            from .plotting import plot_distribution
            plot_distribution(dist.entries, args.plot, counts, title=rep["label"])
        return 0
    if cmd == "oracle":
        eps = oracle.DEFAULT_EPS if args.tol is None else args.tol
        seed = 0 if args.seed is None else args.seed
        rep = oracle_report(loaded, args.restarts, eps, seed)
        _emit(rep, args.out)
        return _verdict_code(rep["separable"])
    raise UsageError(f"unknown command {cmd}")


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else 0
    try:
        return _dispatch(args)
    except (IpentError, ValueError, OSError) as exc:
        print(f"ipent: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
