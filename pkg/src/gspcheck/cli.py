"""Command line front end: ``gspcheck enumerate|satake|kostant|verify``."""

from __future__ import annotations

import json
import os
import sys

import click

from . import endoscopy as en
from . import hecke_satake as hs
from . import lie_cohomology as lc
from .root_data import Weight
from .suites import SUITES, RunConfig, run

FORMATS = click.Choice(["json", "table"])


def _color() -> bool | None:
    return False if "NO_COLOR" in os.environ else None


def _emit(text: str, out: str | None = None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        click.echo(text, color=_color())


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}") from exc


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main() -> None:
    """Exact checks for endoscopy, Satake transforms and nilradical cohomology of GSp_2n."""


@main.command("enumerate")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Rank of GSp_2n.")
@click.option("--format", "fmt", type=FORMATS, default="json", show_default=True)
def enumerate_cmd(n: int, fmt: str) -> None:
    """Elliptic endoscopic data, cuspidal Levis and their G-triples."""
    data = [d.to_json() for d in en.elliptic_data(n)]
    levis = []
    for M in en.cuspidal_levis(n):
        levis.append({**M.to_json(), "triples": [g.to_json() for g in en.g_triples(M)]})
    if fmt == "json":
        _emit(_dumps({"n": n, "elliptic_data": data, "cuspidal_levis": levis}))
        return
    lines = [f"elliptic endoscopic data of GSp_{2 * n}:"]
    lines += [f"  {d['label']:<22} n1={d['n1']} n2={d['n2']} |Lambda|={d['lambda_order']} iota={d['iota']}" for d in data]
    lines.append("cuspidal Levi subgroups:")
    for M in levis:
        lines.append(f"  {M['label']:<22} n_M^G={M['n_M_G']} triples={len(M['triples'])}")
    _emit("\n".join(lines))


@main.command("satake")
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--a", "a", type=click.IntRange(min=1), required=True, help="Degree of the unramified extension.")
@click.option("--K", "K", type=str, default="", help="Comma-separated indices with the orthogonal sign, e.g. 1,2.")
@click.option("--format", "fmt", type=FORMATS, default="json", show_default=True)
def satake_cmd(n: int, a: int, K: str, fmt: str) -> None:
    """Satake transform of the transferred Hecke operator as a monomial list."""
    idx = _int_list(K)
    try:
        f = hs.satake_transfer(n, a, idx)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--K") from exc
    if fmt == "json":
        _emit(_dumps({"n": n, "a": a, "K": sorted(set(idx)), "monomials": f.to_json(), "text": f.format_terms()}))
    else:
        _emit("\n".join(f.format_terms()))


@main.command("kostant")
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--S", "S", type=str, default="", help="Simple roots outside the Levi, e.g. 1,2.")
@click.option("--weight", "weight", type=str, required=True, help="Doubled coefficients [2a_c, 2a_1, ..., 2a_n] as JSON.")
@click.option("--lam0", "lam0", type=str, default=None, help="Central character, doubled, as JSON.")
@click.option("--direction", type=click.Choice(["above", "below"]), default="above", show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="json", show_default=True)
def kostant_cmd(n: int, S: str, weight: str, lam0: str | None, direction: str, fmt: str) -> None:
    """Kostant pieces of H^*(Lie N_S, V_lambda) with the truncation flags."""
    try:
        lam = Weight(tuple(json.loads(weight)))
        central = Weight(tuple(json.loads(lam0))) if lam0 else None
        pieces = lc.kostant_cohomology(n, _int_list(S), lam)
        pieces = lc.truncate(pieces, lam, central, _int_list(S), direction)
    except (ValueError, TypeError) as exc:
        raise click.BadParameter(str(exc)) from exc
    if fmt == "json":
        _emit(_dumps({"n": n, "S": sorted(set(_int_list(S))), "weight": str(lam), "direction": direction, "pieces": [p.to_json() for p in pieces]}))
        return
    lines = [f"{'deg':>3}  {'dim':>5}  kept  weight"]
    lines += [f"{p.degree:>3}  {p.dimension:>5}  {'yes ' if p.kept_by_truncation else 'no  '}  {p.kostant_weight}" for p in pieces]
    _emit("\n".join(lines))


def _table(report) -> str:
    rows = []
    for rec in sorted(report.checks, key=lambda c: c.id):
        mark = click.style("PASS", fg="green") if rec.passed else click.style("FAIL", fg="red")
        t = "" if rec.wall_time is None else f"  {rec.wall_time:.2f}s"
        rows.append(f"{mark}  {rec.id:<40} {rec.cases_passed:>7}/{rec.cases_run:<7}{t}")
    total = click.style("all checks passed", fg="green") if report.passed else click.style("some checks failed", fg="red")
    return "\n".join(rows + [total])


@main.command("verify")
@click.option("--suite", type=click.Choice(SUITES + ("all",)), default="all", show_default=True)
@click.option("--n-max", "n_max", type=click.IntRange(min=1), default=6, show_default=True)
@click.option("--samples", type=click.IntRange(min=0), default=500, show_default=True)
@click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=42, show_default=True)
@click.option("--format", "fmt", type=FORMATS, default="json", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None, help="Write the report here.")
@click.option("--timing", is_flag=True, help="Record wall time per check (breaks byte-identical reports).")
def verify_cmd(suite: str, n_max: int, samples: int, seed: int, fmt: str, out: str | None, timing: bool) -> None:
    """Run a verification suite; exit status 0 iff every check passes."""
    report = run(RunConfig(suite=suite, n_max=n_max, samples=samples, seed=seed, timing=timing))
    if fmt == "json":
        _emit(report.dumps(), out)
    else:
        text = _table(report)
        _emit(click.unstyle(text) if out or _color() is False else text, out)
    sys.exit(0 if report.passed else 1)


if __name__ == "__main__":
    main()
