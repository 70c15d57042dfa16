"""Command line front end. Every command builds a report dict and renders it as
text, JSON or CSV. Exit codes: 0 success, 1 computation or capacity error,
2 usage error, 3 failed --compare / --check-rank assertion."""
import csv
import io
import json
import sys
import time

import click

from . import __version__
from .gcw import ComplexError
from .kernels import BACKEND

SCHEMA_VERSION = 1
EXIT_OK, EXIT_COMPUTE, EXIT_USAGE, EXIT_ASSERT = 0, 1, 2, 3


def _parse_n(value, allow_tuple):
    if value is None:
        return None
    text = str(value).strip().strip("()")
    try:
        parts = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise click.BadParameter("expected an integer or a comma separated list, got %r" % value)
    if not parts:
        raise click.BadParameter("empty value")
    if len(parts) == 1 and not allow_tuple:
        return parts[0]
    if len(parts) > 1 and not allow_tuple:
        raise click.BadParameter("a single integer is expected here")
    return tuple(parts) if len(parts) > 1 else parts[0]


def _check_order(order, max_order):
    from .finite import CapacityError
    if max_order is not None and order > max_order:
        raise CapacityError("group order %d exceeds --max-order %d" % (order, max_order))


def _report(command, inputs, results):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "versions": {"heckek": __version__, "backend": BACKEND},
    }


# -- renderers

def _csv(rows, header):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _render_text(rep):
    r = rep["results"]
    cmd = rep["command"]
    lines = []
    if cmd == "ranks":
        lines.append("%s: K0 = Z^%d, K1 = Z^%d" % (rep["inputs"]["datum"], r["k0"], r["k1"]))
        if r["flags"]:
            lines.append("flags: %s" % ", ".join(r["flags"]))
    elif cmd == "extquot":
        p = r["oracle"]
        lines.append("%s: dims %s, even %d, odd %d" % (r["datum"], p["dims"],
                                                       p["even_total"], p["odd_total"]))
        for s in r["strata"]:
            lines.append("  %-20s components %d/%d  betti %s" % (
                s["class"], s["component_count"], s["raw_components"], s["poincare"]))
        if "compare" in r:
            c = r["compare"]
            lines.append("closed form (%d,%d) vs oracle (%d,%d): %s" % (
                c["closed_form"]["k0"], c["closed_form"]["k1"], p["even_total"], p["odd_total"],
                "pass" if c["pass"] else "FAIL"))
    elif cmd == "elliptic":
        lines.append("%s: rank %d, torsion %s, elliptic classes %d, irreducibles %d" % (
            r["group"], r["rank"], r["torsion_invariants"], r["elliptic_class_count"],
            r["irreducibles"]))
        if "check" in r:
            lines.append("check-rank: %s" % ("pass" if r["check"] else "FAIL"))
    elif cmd == "chartable":
        labels = r["class_labels"]
        width = max([len(x) for x in labels + r["irr_labels"]] + [4]) + 1
        lines.append("%s (%d classes)" % (r["group"], len(labels)))
        lines.append(" " * width + "".join(x.rjust(width) for x in labels))
        for name, row in zip(r["irr_labels"], r["matrix"]):
            lines.append(name.ljust(width) + "".join(str(v).rjust(width) for v in row))
    elif cmd == "gcw":
        lines.append("%s: %d cells" % (r["name"], r["cells"]))
        for key in ("cohomology", "homology"):
            if key in r:
                for d in r[key]:
                    parts = (["Z^%d" % d["rank"]] if d["rank"] else [])
                    parts += ["Z/%d" % t for t in d["torsion"]]
                    sym = "H^%d" if key == "cohomology" else "H_%d"
                    lines.append("  %s = %s" % (sym % d["degree"], " + ".join(parts) or "0"))
        if "duality" in r:
            lines.append("duality: %s" % ("pass" if r["duality"] else "FAIL"))
    elif cmd == "list":
        for section, items in r.items():
            lines.append("%s: %s" % (section, ", ".join(items)))
    if "timing" in rep:
        lines.append("time: %.3f s" % rep["timing"])
    return "\n".join(lines) + "\n"


def _render_csv(rep):
    r = rep["results"]
    cmd = rep["command"]
    if cmd == "ranks":
        return _csv([[0, r["k0"]], [1, r["k1"]]], ["degree", "rank"])
    if cmd == "extquot":
        rows = [[q, v] for q, v in enumerate(r["oracle"]["dims"])]
        return _csv(rows, ["degree", "rank"])
    if cmd == "elliptic":
        rows = [[k, r[k] if not isinstance(r[k], list) else " ".join(map(str, r[k]))]
                for k in ("group", "irreducibles", "rank", "torsion_invariants",
                          "elliptic_class_count", "induction_columns")]
        return _csv(rows, ["statistic", "value"])
    if cmd == "chartable":
        rows = [[name] + row for name, row in zip(r["irr_labels"], r["matrix"])]
        return _csv(rows, ["irreducible"] + r["class_labels"])
    if cmd == "gcw":
        key = "homology" if "homology" in r else "cohomology"
        rows = [[d["degree"], d["rank"], " ".join(map(str, d["torsion"]))] for d in r[key]]
        return _csv(rows, ["degree", "rank", "torsion"])
    rows = [[section, item] for section, items in r.items() for item in items]
    return _csv(rows, ["section", "name"])


def _render(rep, fmt):
    if fmt == "json":
        body = dict(rep)
        body.pop("timing", None)
        return json.dumps(body, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return _render_csv(rep)
    return _render_text(rep)


def _emit(ctx, rep):
    opts = ctx.obj
    text = _render(rep, opts["format"])
    if opts["out"]:
        with open(opts["out"], "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


# -- shared options

def common_options(f):
    f = click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]), default=None,
                     help="Output format (default text).")(f)
    f = click.option("--out", type=click.Path(dir_okay=False), default=None,
                     help="Write the report to this file.")(f)
    f = click.option("--cache-dir", type=click.Path(file_okay=False), default=None,
                     help="Character table cache directory.")(f)
    f = click.option("--max-order", type=int, default=None,
                     help="Refuse groups larger than this.")(f)
    f = click.option("--seed", type=int, default=None,
                     help="Accepted for reproducibility scripts; everything is deterministic.")(f)
    return f


def _merge(ctx, fmt, out, cache_dir, max_order, seed):
    o = ctx.obj
    if fmt is not None:
        o["format"] = fmt
    if out is not None:
        o["out"] = out
    if cache_dir is not None:
        o["cache_dir"] = cache_dir
    if max_order is not None:
        o["max_order"] = max_order
    return o


def _run(ctx, command, inputs, body):
    t0 = time.perf_counter()
    try:
        results, ok = body()
    except click.UsageError:
        raise
    except ComplexError as exc:
        click.echo("error: %s" % exc, err=True)
        ctx.exit(EXIT_COMPUTE)
    except (ValueError, KeyError) as exc:
        raise click.UsageError(str(exc).strip("'\""))
    except (ArithmeticError, RuntimeError, AssertionError, MemoryError, OSError) as exc:
        click.echo("error: %s" % exc, err=True)
        ctx.exit(EXIT_COMPUTE)
    rep = _report(command, inputs, results)
    rep["timing"] = time.perf_counter() - t0
    _emit(ctx, rep)
    if not ok:
        ctx.exit(EXIT_ASSERT)


@click.group()
@common_options
@click.version_option(__version__, prog_name="heckek")
@click.pass_context
def main(ctx, fmt, out, cache_dir, max_order, seed):
    """Weyl group characters, elliptic quotients and K-theory ranks."""
    ctx.obj = {"format": fmt or "text", "out": out, "cache_dir": cache_dir,
               "max_order": max_order}


@main.command()
@click.option("--type", "kind", required=True, help="GL, SL, PGL, SO_odd, Sp, SO_even or G2.")
@click.option("--n", "n", default=None, help="Rank parameter.")
@common_options
@click.pass_context
def ranks(ctx, kind, n, fmt, out, cache_dir, max_order, seed):
    """Closed-form K0 / K1 ranks."""
    _merge(ctx, fmt, out, cache_dir, max_order, seed)

    def body():
        from .ktables import ktheory_ranks
        from .rootdata import canonical_name
        name = canonical_name(kind)
        nn = _parse_n(n, False)
        kr = ktheory_ranks(name, nn)
        return kr.as_dict(), True

    datum = kind if n is None else "%s_%s" % (kind, n)
    _run(ctx, "ranks", {"type": kind, "n": n, "datum": datum}, body)


@main.command()
@click.option("--type", "kind", required=True, help="Root datum name (AlmostD takes --n a,b,...).")
@click.option("--n", "n", default=None)
@click.option("--compare", is_flag=True, help="Compare with the closed form; exit 3 on mismatch.")
@common_options
@click.pass_context
def extquot(ctx, kind, n, compare, fmt, out, cache_dir, max_order, seed):
    """Rational cohomology of the extended quotient (Burnside oracle)."""
    opts = _merge(ctx, fmt, out, cache_dir, max_order, seed)

    def body():
        from .extquot import CENTRALIZER_BOUND, CompareReport, extended_quotient_components, profile_from_strata
        from .ktables import ktheory_ranks
        from .rootdata import canonical_name, catalog_root_datum
        name = canonical_name(kind)
        R = catalog_root_datum(name, _parse_n(n, name == "AlmostD"))
        _check_order(R.weyl.order, opts["max_order"])
        strata = extended_quotient_components(R, opts["max_order"] or CENTRALIZER_BOUND)
        prof = profile_from_strata(strata)
        res = {"datum": R.label(), "oracle": prof.as_dict(), "strata": [s.as_dict() for s in strata],
               "flags": list(R.flags)}
        ok = True
        if compare:
            c = CompareReport(R.label(), prof, ktheory_ranks(R.name, R.params))
            res["compare"] = c.as_dict()
            ok = c.passed
        return res, ok

    _run(ctx, "extquot", {"type": kind, "n": n, "compare": compare,
                          "datum": kind if n is None else "%s_%s" % (kind, n)}, body)


def _group(kind, n):
    from .weyl import build_group
    k = str(kind)
    if k.lower() == "almostd":
        dims = _parse_n(n, True)
        return build_group("almostd", dims if isinstance(dims, tuple) else (dims,))
    if k.upper() == "G2":
        return build_group("G2")
    return build_group(k, _parse_n(n, False))


@main.command()
@click.option("--group", "kind", required=True, help="A (or S), B (or C), D, G2, AlmostD.")
@click.option("--n", "n", default=None)
@click.option("--check-rank", is_flag=True,
              help="Require torsion-free with rank = elliptic class count; exit 3 otherwise.")
@common_options
@click.pass_context
def elliptic(ctx, kind, n, check_rank, fmt, out, cache_dir, max_order, seed):
    """Smith normal form report on the elliptic representation lattice."""
    opts = _merge(ctx, fmt, out, cache_dir, max_order, seed)

    def body():
        from .elliptic import elliptic_quotient
        W = _group(kind, n)
        _check_order(W.order, opts["max_order"])
        rep = elliptic_quotient(W, cache_dir=opts["cache_dir"])
        res = rep.as_dict()
        ok = True
        if check_rank:
            ok = rep.torsion_free and rep.rank == rep.elliptic_class_count
            res["check"] = ok
        return res, ok

    _run(ctx, "elliptic", {"group": kind, "n": n, "check_rank": check_rank}, body)


@main.command()
@click.option("--group", "kind", required=True)
@click.option("--n", "n", default=None)
@common_options
@click.pass_context
def chartable(ctx, kind, n, fmt, out, cache_dir, max_order, seed):
    """Character table of a catalog Weyl group."""
    opts = _merge(ctx, fmt, out, cache_dir, max_order, seed)

    def body():
        from .chars import GENERIC_BOUND, character_table, check_orthogonality
        W = _group(kind, n)
        _check_order(W.order, opts["max_order"])
        t = character_table(W, cache_dir=opts["cache_dir"], bound=opts["max_order"] or GENERIC_BOUND)
        check_orthogonality(t)
        doc = t.to_json()
        doc.pop("format_version", None)
        return doc, True

    _run(ctx, "chartable", {"group": kind, "n": n}, body)


@main.command()
@click.option("--file", "path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--builtin", "builtin", default=None)
@click.option("--homology", is_flag=True, help="Also compute homology and the duality check.")
@common_options
@click.pass_context
def gcw(ctx, path, builtin, homology, fmt, out, cache_dir, max_order, seed):
    """Cohomology of a G-CW complex with representation-ring coefficients."""
    opts = _merge(ctx, fmt, out, cache_dir, max_order, seed)
    if (path is None) == (builtin is None):
        raise click.UsageError("give exactly one of --file and --builtin")

    def body():
        from . import gcw as g
        if path is not None:
            with open(path) as fh:
                X = g.parse_complex(fh.read())
        else:
            X = g.builtin_complex(builtin)
        _check_order(len(X.group.names), opts["max_order"])
        L = g.local_system(X)

        def fmt_groups(res):
            return [{"degree": q, "rank": r, "torsion": t} for q, (r, t) in enumerate(res)]

        res = {"name": X.name, "cells": len(X.cells), "cohomology": fmt_groups(g.cohomology(X, L))}
        ok = True
        if homology:
            d = g.homology_and_duality(X, L)
            res["homology"] = fmt_groups(d.homology)
            res["duality"] = d.passed
            ok = d.passed
        return res, ok

    _run(ctx, "gcw", {"file": path, "builtin": builtin, "homology": homology}, body)


@main.command(name="list")
@common_options
@click.pass_context
def list_(ctx, fmt, out, cache_dir, max_order, seed):
    """Catalog of root data, groups and builtin complexes."""
    _merge(ctx, fmt, out, cache_dir, max_order, seed)

    def body():
        from .gcw import BUILTINS
        from .rootdata import CATALOG
        return {"root_data": list(CATALOG), "groups": ["A", "B", "C", "D", "G2", "AlmostD"],
                "complexes": list(BUILTINS)}, True

    _run(ctx, "list", {}, body)


def run(argv=None):
    """Run the CLI in-process; returns the exit code."""
    try:
        # without standalone mode click returns the code passed to ctx.exit
        rv = main.main(args=list(argv) if argv is not None else None, prog_name="heckek",
                       standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.Abort:
        return EXIT_COMPUTE
    return rv if isinstance(rv, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(run())
