"""Cross-checking suites: oracle equivalences, table properties, golden diffs.

Each suite returns a list of (name, ok, detail) triples so that both the
command-line front end and the test suite can consume the same checks.
"""

from __future__ import annotations

import importlib.resources
import random

from . import central, multiplicity, wakimoto
from .affweyl import group
from .hecke import context
from .laurent import LaurentPoly
from .rootdata import create


def ball(g, radius):
    """All elements of length <= radius in the W_aff coset of the identity."""
    out = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            if x.length() >= radius:
                continue
            for i in range(g.n_gens):
                y = g.mul_gen(x, i)
                if y.length() > x.length() and y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(out, key=g.sort_key)


def _r_extraction(hctx, x, y, inv=None):
    """R_{x,y} read off from the expansion of T^{-1}_{y^{-1}}."""
    if inv is None:
        inv = hctx.inv_T(hctx.group.inv(y))
    sign = 1 if (x.length() + y.length()) % 2 == 0 else -1
    return inv.coeff(x).scale(sign).shift(2 * y.length())


def oracle_checks(seed=42, depth=5, samples=50):
    """Exact cross-oracle identities on GL_3 and GSp_4."""
    results = []

    # (a) R recursion vs bar-expansion extraction, exhaustive in a ball
    for fam, n in (("GL", 3), ("GSp", 2)):
        datum = create(fam, n)
        g = group(datum)
        hctx = context(datum)
        bad = 0
        pairs = 0
        for y in ball(g, depth):
            inv = hctx.inv_T(g.inv(y))
            for x in g.below(y):
                pairs += 1
                if hctx.r_poly(x, y) != _r_extraction(hctx, x, y, inv):
                    bad += 1
        results.append(
            (
                f"r-recursion-vs-extraction-{datum.label}",
                bad == 0,
                f"{pairs} pairs with l(y) <= {depth}, {bad} mismatches",
            )
        )

    # (b,c,d) P*Q inversion, the inverse-KL recursion, and sum Q R = q^... Q(1/q)
    for fam, n, mu in (("GL", 3, (1, 1, 0)), ("GSp", 2, (1, 1, 1))):
        datum = create(fam, n)
        g = group(datum)
        hctx = context(datum)
        adm = g.adm(mu)
        bad_inv = bad_rec = bad_sum = 0
        for w in adm:
            bel = [z for z in g.below(w)]
            for x in bel:
                acc = LaurentPoly.zero()
                rec = LaurentPoly.zero()
                qr = LaurentPoly.zero()
                for z in bel:
                    if not g.leq(x, z):
                        continue
                    sgn = 1 if (z.length() - x.length()) % 2 == 0 else -1
                    acc = acc + (hctx.kl_poly(x, z) * hctx.inv_kl_poly(z, w)).scale(sgn)
                    rec = rec + hctx.r_poly(z, w) * hctx.inv_kl_poly(x, z)
                    qr = qr + hctx.inv_kl_poly(x, z) * hctx.r_poly(z, w)
                want = LaurentPoly.one() if x is w else LaurentPoly.zero()
                if acc != want:
                    bad_inv += 1
                gap = 2 * (w.length() - x.length())
                if rec != hctx.inv_kl_poly(x, w).bar().shift(gap):
                    bad_rec += 1
                if qr != hctx.inv_kl_poly(x, w).bar().shift(gap):
                    bad_sum += 1
        label = datum.label
        results.append(
            (f"pq-inversion-{label}", bad_inv == 0, f"{bad_inv} mismatches on Adm closure")
        )
        results.append(
            (f"invkl-recursion-{label}", bad_rec == 0, f"{bad_rec} mismatches")
        )
        results.append(
            (f"sum-QR-identity-{label}", bad_sum == 0, f"{bad_sum} mismatches")
        )

    # (e) Wakimoto closed form vs Hecke product
    rng = random.Random(seed)
    total = 0
    bad = 0
    for fam, n in (("GL", 3), ("GSp", 2)):
        datum = create(fam, n)
        g = group(datum)
        pool = ball(g, 4)
        done = 0
        while done < samples:
            v = rng.choice(pool)
            w = rng.choice(pool)
            if v.length() + w.length() > 8:
                continue
            raw, _ = wakimoto.wakimoto_function(v, w)
            for x, c in wakimoto.tilde_coefficients(raw).items():
                if c != wakimoto.rv_poly_laurent(v, w, x):
                    bad += 1
            done += 1
        total += done
    results.append(
        ("wakimoto-closed-form", bad == 0, f"{total} random (v,w) pairs, {bad} mismatches")
    )

    # q = 1 specialisation: a_w(1) = Q_{w, t_lambda}(1)
    bad = 0
    for fam, n, lam in (("GL", 2, (1, 0)), ("GL", 2, (2, 0)), ("GL", 3, (1, 1, 0))):
        datum = create(fam, n)
        hctx = context(datum)
        g = hctx.group
        t = g.translation(lam)
        sign = -1 if t.length() % 2 else 1
        f = central.theta(datum, lam).scale(LaurentPoly.v_power(t.length(), sign))
        coeffs = hctx.to_ic_basis(f)
        if set(coeffs) != set(g.below(t)):
            bad += 1
        for w, c in coeffs.items():
            if c.eval_at("v=1") != hctx.inv_kl_poly(w, t).eval_at("v=1"):
                bad += 1
    results.append(("theta-q1-specialisation", bad == 0, f"{bad} mismatches"))
    return results


def property_checks(datum, mu, jobs=1, cache_dir=None):
    """Empirical table properties for one (group, mu) case."""
    table = multiplicity.compute(datum, mu, jobs=jobs, cache_dir=cache_dir)
    _, summary = table.property_report()
    results = [
        ("observation-A-degree-bound", summary["degree_bound"], ""),
        ("observation-B-palindromic", summary["palindromic"], ""),
        ("observation-B-unimodal", summary["unimodal"], ""),
        ("observation-C-unit-endpoints", summary["unit_endpoints"], ""),
        ("multiplicities-nonnegative", summary["nonnegative"], ""),
    ]
    results.append(
        (
            "base-change-consistency",
            multiplicity.base_change_consistency(table),
            "re-expanding sum m(w) C''_w in the T basis",
        )
    )
    f = central.kottwitz_function(datum, mu)
    results.append(
        (
            "support-is-admissible-set",
            set(f.terms) == set(table.adm),
            f"{len(table.adm)} elements",
        )
    )
    ell = group(datum).translation(mu).length()
    results.append(
        (
            "property-P-at-l(t_mu)",
            central.satisfies_property_P(f, ell),
            f"d = {ell}",
        )
    )
    if multiplicity.is_minuscule(datum, mu):
        results.append(
            (
                "minuscule-epsilon-sum",
                multiplicity.epsilon_sum_identity(table),
                "",
            )
        )
        tau = table.adm[0]
        results.append(
            (
                "minuscule-tau-poincare",
                multiplicity.minuscule_poincare(datum, mu) == table.m_polys[tau],
                "",
            )
        )
    return results


#: the reference cases shipped as golden tables
GOLDEN_CASES = {
    ("GL4", (1, 1, 0, 0)): "GL4_1-1-0-0.txt",
    ("GL5", (1, 1, 0, 0, 0)): "GL5_1-1-0-0-0.txt",
    ("GL6", (1, 1, 0, 0, 0, 0)): "GL6_1-1-0-0-0-0.txt",
    ("GL3", (2, 2, 0)): "GL3_2-2-0.txt",
    ("GL3", (3, 1, 0)): "GL3_3-1-0.txt",
    ("GL4", (2, 0, 0, 0)): "GL4_2-0-0-0.txt",
    ("GL4", (2, 1, 0, 0)): "GL4_2-1-0-0.txt",
    ("GSp4", (1, 1, 1)): "GSp4_1-1-0-0.txt",
    ("GSp6", (1, 1, 1, 1)): "GSp6_1-1-1-0-0-0.txt",
    ("G2", (1, 0)): "G2_2-1-0.txt",
}


def golden_text(datum, mu):
    """The stored golden table for (datum, mu), or None."""
    name = GOLDEN_CASES.get((datum.label, tuple(mu)))
    if name is None:
        return None
    return (
        importlib.resources.files("affhecke")
        .joinpath("golden", name)
        .read_text(encoding="ascii")
    )


def normalize_table(text):
    """Whitespace-insensitive canonical form of a rendered table."""
    lines = []
    for line in text.strip().splitlines():
        collapsed = " ".join(line.split())
        if collapsed:
            lines.append(collapsed)
    return tuple(lines)


def golden_check(datum, mu, jobs=1, cache_dir=None):
    golden = golden_text(datum, mu)
    if golden is None:
        raise KeyError(
            f"no golden table for {datum.label} mu={datum.format_coweight(mu)}"
        )
    table = multiplicity.compute(datum, mu, jobs=jobs, cache_dir=cache_dir)
    text = multiplicity.render_text(table)
    ok = normalize_table(text) == normalize_table(golden)
    return [
        (
            f"golden-table-{datum.label}-{datum.format_coweight(mu)}",
            ok,
            "matches stored table" if ok else "DIFFERS from stored table",
        )
    ]
