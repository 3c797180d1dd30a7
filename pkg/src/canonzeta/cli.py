"""Command-line interface.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

import json
import sys

import click

from . import canonical, dshuffle, elliptic, modforms
from .commrep import DepthTuple
from .exactnum import q_str
from .ncwords import derivation_bracket

FORMATS = click.Choice(["json", "text"])
NORMALIZATIONS = click.Choice([canonical.CANONICAL, canonical.HERETICAL])


class VerificationFailed(Exception):
    pass


def _fmt_poly(num, var="x"):
    if not num.terms:
        return "0"
    parts = []
    for e, c in num.sorted_terms():
        mono = "*".join(f"{var}{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
        parts.append(q_str(c) if not mono else (mono if c == 1 else f"{q_str(c)}*{mono}"))
    return " + ".join(parts)


def _fmt_rat(f):
    s = _fmt_poly(f.num)
    den = f.pole_names()
    if den:
        s = f"({s}) / ({')*('.join(den)})"
    return s


def _fmt_tuple(t):
    return "\n".join(f"depth {r}: {_fmt_rat(t[r])}" for r in t.depths())


def emit(ctx, payload, text):
    if ctx.obj["format"] == "json":
        click.echo(json.dumps(payload, sort_keys=True))
    else:
        click.echo(text)


def _weight_to_n(weight):
    if weight < 3 or weight % 2 == 0:
        raise click.BadParameter("weight must be odd and at least 3", param_hint="--weight")
    return (weight - 1) // 2


def _weight_range(text):
    try:
        a, b = (int(x) for x in text.split(":"))
    except ValueError:
        raise click.BadParameter("expected A:B", param_hint="--weight-range")
    if a > b:
        raise click.BadParameter("empty range", param_hint="--weight-range")
    return range(a, b + 1)


def _checks(ctx, name, results, extra=None):
    """results: list of (label, ok)."""
    ok = all(v for _, v in results)
    payload = {"check": name, "ok": ok, "results": [{"name": k, "ok": v} for k, v in results]}
    if extra:
        payload.update(extra)
    text = "\n".join(f"{'PASS' if v else 'FAIL'} {k}" for k, v in results)
    emit(ctx, payload, text)
    if not ok:
        raise VerificationFailed(name)


@click.group()
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
@click.pass_context
def main(ctx, fmt):
    """Canonical zeta elements, rational associator and elliptic checks."""
    ctx.ensure_object(dict)
    ctx.obj["format"] = fmt


def _format_option(f):
    def cb(ctx, param, value):
        if value is not None:
            ctx.find_root().obj["format"] = value
        return value
    return click.option("--format", "fmt", type=FORMATS, default=None, expose_value=False,
                        callback=cb, help="Output format (also accepted before the verb).")(f)


@main.command()
@click.option("--weight", type=int, required=True, help="Odd weight 2n+1 >= 3.")
@click.option("--max-depth", type=click.IntRange(1, 4), default=3, show_default=True)
@click.option("--normalization", type=NORMALIZATIONS, default=canonical.CANONICAL, show_default=True)
@_format_option
@click.pass_context
def sigma(ctx, weight, max_depth, normalization):
    """Canonical zeta element sigma^c of the given weight."""
    t = canonical.sigma_c(_weight_to_n(weight), max_depth, normalization)
    emit(ctx, t.to_dict(), _fmt_tuple(t))


@main.command()
@click.option("--weight", type=int, required=True, help="Odd weight 2n+1 >= 3, or -1.")
@click.option("--max-depth", type=click.IntRange(1, 4), default=3, show_default=True)
@click.option("--normalization", type=NORMALIZATIONS, default=canonical.CANONICAL, show_default=True)
@_format_option
@click.pass_context
def xi(ctx, weight, max_depth, normalization):
    """Polar element xi = exp(ad s)(x1^{2n})."""
    n = -1 if weight == -1 else _weight_to_n(weight)
    t = canonical.xi(n, max_depth)
    if normalization == canonical.HERETICAL:
        t = canonical.xi_heretical(n, max_depth)
    t.weight, t.normalization = weight, normalization
    emit(ctx, t.to_dict(), _fmt_tuple(t))


@main.command()
@click.option("--max-weight", type=int, required=True, help="Even truncation weight.")
@_format_option
@click.pass_context
def tau(ctx, max_weight):
    """Rational associator tau in depths 1 to 3, truncated at the given weight."""
    if max_weight < 2 or max_weight % 2:
        raise click.BadParameter("must be even and at least 2", param_hint="--max-weight")
    t = canonical.tau(max_weight)
    emit(ctx, t.to_dict(), _fmt_tuple(t))


@main.command()
@_format_option
@click.pass_context
def z3(ctx):
    """The polar depth-three element z3."""
    t = DepthTuple({3: canonical.z3()}, weight=3)
    emit(ctx, t.to_dict(), _fmt_tuple(t))


@main.command()
@click.option("--index", type=int, required=True, help="Even index 2k (k >= 0).")
@click.option("--normalization", type=NORMALIZATIONS, default=canonical.CANONICAL, show_default=True)
@_format_option
@click.pass_context
def epsilon(ctx, index, normalization):
    """Derivation epsilon_{2k} on the free Lie algebra in a, b."""
    if index < 0 or index % 2:
        raise click.BadParameter("must be even and non-negative", param_hint="--index")
    n = index // 2 - 1
    d = elliptic.epsilon_heretical(n) if normalization == canonical.HERETICAL else elliptic.epsilon(n)
    payload = {"index": index, "normalization": normalization,
               "a": d.image_first.to_json(), "b": d.image_second.to_json()}
    emit(ctx, payload, f"a -> {d.image_first!r}\nb -> {d.image_second!r}")


# ---------------------------------------------------------------------------
# verify


@main.group()
def verify():
    """Re-run a verification; exit code 1 if it fails."""


@verify.command("ds")
@click.option("--object", "obj", type=click.Choice(["sigma", "xi", "tau"]), default="sigma", show_default=True)
@click.option("--weight", type=int, required=True)
@_format_option
@click.pass_context
def verify_ds(ctx, obj, weight):
    """Double shuffle equations."""
    if obj == "tau":
        if weight < 2 or weight % 2:
            raise click.BadParameter("tau needs an even weight", param_hint="--weight")
        t = canonical.tau(weight)
        res = [(f"{fl} depth {d}", dshuffle.full_ds_defect(t, d, weight, fl).satisfied)
               for fl in (dshuffle.FULL_SHUFFLE, dshuffle.FULL_STUFFLE) for d in (2, 3)]
    else:
        n = _weight_to_n(weight)
        t = canonical.sigma_c(n, 3) if obj == "sigma" else canonical.xi(n, 3)
        res = []
        for d in (2, 3):
            res.append((f"shuffle depth {d}", dshuffle.shuffle_defect(t, d).satisfied))
            res.append((f"stuffle mod products depth {d}",
                        dshuffle.stuffle_defect_mod_products(t, d).satisfied))
    _checks(ctx, "ds", res, {"object": obj, "weight": weight})


@verify.command("lift")
@click.option("--weight", type=int, required=True, help="Odd weight 2n+1 >= 5.")
@_format_option
@click.pass_context
def verify_lift(ctx, weight):
    """Genus-one lift of sigma^c modulo B-degree 4."""
    n = _weight_to_n(weight)
    if n < 2:
        raise click.BadParameter("weight must be at least 5", param_hint="--weight")
    _checks(ctx, "lift", [("lift", elliptic.lift_theorem_check(n))], {"weight": weight})


@verify.command("pollack")
@click.option("--weight", type=int, default=12, show_default=True, help="Even weight of the relation.")
@_format_option
@click.pass_context
def verify_pollack(ctx, weight):
    """Quadratic relations among the epsilon derivations, one per kernel element."""
    if weight < 4 or weight % 2:
        raise click.BadParameter("must be even and at least 4", param_hint="--weight")
    res = []
    for k in modforms.kernel_K(weight):
        total = None
        for (i, j), c in k.items():
            d = derivation_bracket(elliptic.epsilon(i), elliptic.epsilon(j)).scale(c)
            total = d if total is None else total + d
        res.append((f"kernel element {k.to_triples()}", total.is_zero()))
    if weight == 12:
        res.append(("[e4,e10] - 3[e6,e8] = 0", elliptic.pollack_check()))
    _checks(ctx, "pollack", res, {"weight": weight})


@verify.command("polefree")
@click.option("--object", "obj", type=click.Choice(["sigma", "tau"]), default="sigma", show_default=True)
@click.option("--weight", type=int, required=True)
@_format_option
@click.pass_context
def verify_polefree(ctx, obj, weight):
    """No poles in any depth component."""
    if obj == "tau":
        if weight < 2 or weight % 2:
            raise click.BadParameter("tau needs an even weight", param_hint="--weight")
        t = canonical.tau(weight)
    else:
        t = canonical.sigma_c(_weight_to_n(weight), 3)
    ok, bad = canonical.verify_polefree(t)
    _checks(ctx, "polefree", [("polefree", ok)],
            {"object": obj, "weight": weight, "poles": [[r, p] for r, p in bad]})


@verify.command("chi")
@click.option("--weight", type=int, required=True, help="Odd weight 2n+1 >= 5.")
@_format_option
@click.pass_context
def verify_chi(ctx, weight):
    """Equations satisfied by xi in depths 1, 2, 3."""
    n = _weight_to_n(weight)
    names = ("depth 1", "depth 2", "depth 3")
    res = [(k, r.is_zero()) for k, r in zip(names, elliptic.chi_residuals(n))]
    _checks(ctx, "chi", res, {"weight": weight})


@verify.command("pls")
@click.option("--weight", type=int, required=True)
@_format_option
@click.pass_context
def verify_pls(ctx, weight):
    """Brackets of epsilon derivations satisfy the polar linearized double shuffle equations."""
    if weight < 1:
        raise click.BadParameter("must be positive", param_hint="--weight")
    res = [(name, dshuffle.pls_member(t)) for name, t in elliptic.epsilon_bracket_images(weight)]
    _checks(ctx, "pls", res, {"weight": weight})


# ---------------------------------------------------------------------------
# dimensions and period polynomials


@main.command()
@click.argument("kind", type=click.Choice(["ls", "periodpoly", "kernel"]))
@click.option("--weight-range", "wr", required=True, help="Inclusive range A:B.")
@click.option("--depth", type=click.IntRange(1, 4), default=2, show_default=True, help="Depth (ls only).")
@click.option("--even/--all", default=True, show_default=True, help="Even period polynomials only.")
@_format_option
@click.pass_context
def dims(ctx, kind, wr, depth, even):
    """Dimension table over a weight range."""
    rows = []
    for w in _weight_range(wr):
        if kind == "ls":
            d = dshuffle.ls_dimension(depth, w)
        elif kind == "periodpoly":
            d = len(modforms.period_poly_basis(w, even)) if w >= 2 else 0
        else:
            d = len(modforms.kernel_K(w)) if w >= 4 and w % 2 == 0 else 0
        rows.append({"weight": w, "dim": d})
    payload = {"kind": kind, "rows": rows}
    if kind == "ls":
        payload["depth"] = depth
    if kind == "periodpoly":
        payload["even"] = even
    emit(ctx, payload, "\n".join(f"{r['weight']}\t{r['dim']}" for r in rows))


@main.command()
@click.option("--weight", type=int, required=True, help="Even weight; polynomials have degree weight - 2.")
@click.option("--even", is_flag=True, help="Even period polynomials only.")
@_format_option
@click.pass_context
def periodpoly(ctx, weight, even):
    """Basis of period polynomials."""
    if weight < 2:
        raise click.BadParameter("must be at least 2", param_hint="--weight")
    basis = modforms.period_poly_basis(weight, even)
    payload = {"weight": weight, "even": even,
               "basis": [[[list(e), q_str(c)] for e, c in p.sorted_terms()] for p in basis]}
    emit(ctx, payload, "\n".join(_fmt_poly(p) for p in basis) or "(empty)")


@main.command()
@click.option("--weight", type=int, required=True, help="Even weight of the kernel element.")
@_format_option
@click.pass_context
def cuspidal(ctx, weight):
    """Depth-four cuspidal element for each kernel basis element."""
    if weight < 4 or weight % 2:
        raise click.BadParameter("must be even and at least 4", param_hint="--weight")
    items = []
    text = []
    for k in modforms.kernel_K(weight):
        c = modforms.cuspidal_c(k)
        t = DepthTuple({4: c}, weight=weight)
        items.append({"kernel": k.to_triples(), "element": t.to_dict(),
                      "polefree": c.is_polynomial()})
        text.append(f"kernel {k.to_triples()}\n{_fmt_tuple(t)}")
    emit(ctx, {"weight": weight, "elements": items}, "\n".join(text) or "(empty)")


@main.command()
@click.option("--object", "obj", type=click.Choice(["sigma", "tau"]), required=True)
@click.option("--weight", type=int, required=True)
@click.option("--composition", required=True, help="Comma-separated positive integers, e.g. 3,2.")
@_format_option
@click.pass_context
def coeff(ctx, obj, weight, composition):
    """Coefficient of x1^{n1-1}...xr^{nr-1} in the depth-r component."""
    try:
        comp = tuple(int(x) for x in composition.split(","))
    except ValueError:
        raise click.BadParameter("expected comma-separated integers", param_hint="--composition")
    if sum(comp) != weight:
        raise click.BadParameter("composition must sum to the weight", param_hint="--composition")
    if obj == "sigma":
        c = canonical.sigma_coeff(_weight_to_n(weight), comp)
    else:
        c = canonical.tau_coeff(comp, weight)
    emit(ctx, {"object": obj, "weight": weight, "composition": list(comp), "coefficient": q_str(c)},
         q_str(c))


def run(argv=None):
    """Entry point returning the exit code."""
    try:
        main.main(args=argv, standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return 2
    except click.Abort:
        return 2
    except VerificationFailed:
        return 1
    except ValueError as e:
        click.echo(f"Error: {e}", err=True)
        return 2
    return 0


def entry():
    sys.exit(run())

