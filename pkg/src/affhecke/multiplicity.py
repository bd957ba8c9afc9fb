"""Jordan-Holder multiplicities of nearby cycles and the summary tables.

For dominant mu, the trace function f of the nearby cycles decomposes in
the self-dual basis as f = sum_{w in Adm(mu)} m(w) C''_w, and m(w) =
sum_i m(w,i) q^i collects the Jordan-Holder multiplicities of the
Tate-twisted intersection complexes IC_w(-i).  The coefficients are
obtained by downward induction on length:

    eps_w m(w) = f_w - sum_{x > w in Adm(mu)} eps_x m(x) P_{w,x}.

Each table row also records the Bruhat configuration of w: how many
admissible elements of each length lie strictly above it.  Rows are
grouped by (length, multiplicity vector, configuration) the way the
tables are usually printed, sorted by length, then configuration, then
multiplicity vector.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .affweyl import group
from .central import kottwitz_function
from .hecke import InvariantViolation, context
from .laurent import LaurentPoly
from .rootdata import NotDominant


class NotInAdm(KeyError):
    """The element does not belong to the admissible set of the table."""


class NotMinuscule(ValueError):
    """The coweight is not minuscule."""


@dataclass
class GroupedRow:
    length: int
    count: int
    mults: tuple
    config: tuple


class MultiplicityTable:
    """Per-element multiplicity polynomials and Bruhat configurations."""

    def __init__(self, datum, mu, adm, ell_mu, m_polys, configs):
        self.datum = datum
        self.mu = mu
        self.adm = adm
        self.ell_mu = ell_mu
        self.m_polys = m_polys      # element -> LaurentPoly in q
        self.configs = configs      # element -> tuple of counts

    def require_member(self, w):
        if w not in self.m_polys:
            raise NotInAdm(f"{w.encode()} is not in Adm({self.mu})")

    def m_poly(self, w):
        self.require_member(w)
        return self.m_polys[w]

    def mult_vector(self, w):
        """m(w,i) for i = 0 .. l(t_mu) - l(w)."""
        self.require_member(w)
        return tuple(self.m_polys[w].q_coeffs(upto=self.ell_mu - w.length()))

    def bruhat_config(self, w):
        self.require_member(w)
        return self.configs[w]

    def summarize(self):
        """Grouped rows, one per (length, mults, config) class."""
        buckets = {}
        for w in self.adm:
            key = (w.length(), self.bruhat_config(w), self.mult_vector(w))
            buckets[key] = buckets.get(key, 0) + 1
        rows = [
            GroupedRow(length=k[0], count=c, mults=k[2], config=k[1])
            for k, c in sorted(buckets.items())
        ]
        return rows

    # -- property reports ----------------------------------------------------

    def property_report(self):
        """Empirical checks per element: degree bound, palindromic-unimodal
        shape, unit endpoints, nonnegativity.  Informative, not enforced."""
        per_w = {}
        for w in self.adm:
            p = self.m_polys[w]
            dmax = self.ell_mu - w.length()
            coeffs = p.q_coeffs(upto=max(dmax, p.q_degree() or 0))
            in_range = (
                p.is_q_polynomial() and (p.q_degree() or 0) <= dmax
            )
            vec = coeffs[: dmax + 1]
            palindromic = vec == vec[::-1]
            half = (dmax + 1) // 2
            unimodal = all(vec[i] <= vec[i + 1] for i in range(half)) if dmax > 0 else True
            endpoints = vec[0] == 1 and vec[dmax] == 1
            nonneg = all(c >= 0 for c in coeffs)
            per_w[w] = {
                "degree_bound": in_range,
                "palindromic": palindromic,
                "unimodal": unimodal,
                "unit_endpoints": endpoints,
                "nonnegative": nonneg,
            }
        summary = {
            key: all(v[key] for v in per_w.values())
            for key in (
                "degree_bound",
                "palindromic",
                "unimodal",
                "unit_endpoints",
                "nonnegative",
            )
        }
        return per_w, summary

    def bruhat_fingerprints(self):
        """Group elements by the isomorphism-type fingerprint of their upper
        Bruhat cone: multiset of (length, up-degree) pairs plus the
        configuration vector.  Reported only; never asserted."""
        g = group(self.datum)
        adm = self.adm
        out = {}
        for w in adm:
            above = [x for x in adm if x is not w and g.leq(w, x)]
            covers = {}
            for x in above:
                ups = sum(
                    1
                    for y in above
                    if y.length() == x.length() + 1 and g.leq(x, y)
                )
                key = (x.length(), ups)
                covers[key] = covers.get(key, 0) + 1
            fp = (self.bruhat_config(w), tuple(sorted(covers.items())))
            out.setdefault((w.length(), fp), []).append(w)
        return out


def compute(datum, mu, jobs=1, cache_dir=None):
    """Multiplicity table of the nearby-cycles trace function at mu."""
    mu = datum.require_dominant(mu)
    hctx = context(datum)
    g = hctx.group
    if cache_dir:
        hctx.load_cache(cache_dir)
    adm = g.adm(mu)
    f = kottwitz_function(datum, mu, jobs=jobs)
    if set(f.terms) != set(adm):
        raise InvariantViolation(
            "kottwitz function support differs from the admissible set"
        )
    ell_mu = g.translation(mu).length()
    adm_desc = tuple(reversed(adm))  # descending length order
    # leq matrix restricted to Adm
    above = {w: [] for w in adm}
    for i, w in enumerate(adm):
        for x in adm:
            if x.length() > w.length() and g.leq(w, x):
                above[w].append(x)
    m_polys = {}
    for w in adm_desc:
        acc = f.coeff(w)
        for x in above[w]:
            p = hctx.kl_poly(w, x)
            if p:
                t = m_polys[x] * p
                acc = acc - (t if x.sign() == 1 else -t)
        m_polys[w] = acc if w.sign() == 1 else -acc
    configs = {}
    for w in adm:
        counts = [0] * (ell_mu - w.length())
        for x in above[w]:
            counts[x.length() - w.length() - 1] += 1
        while counts and counts[-1] == 0:
            counts.pop()
        configs[w] = tuple(counts)
    if cache_dir:
        hctx.save_cache(cache_dir)
    return MultiplicityTable(datum, mu, adm, ell_mu, m_polys, configs)


def epsilon_sum_identity(table):
    """For minuscule mu: sum_{w >= x, w in Adm} eps_w = eps_mu for all x."""
    g = group(table.datum)
    eps_mu = -1 if table.ell_mu % 2 else 1
    for x in table.adm:
        s = sum(w.sign() for w in table.adm if g.leq(x, w))
        if s != eps_mu:
            return False
    return True


def is_minuscule(datum, mu):
    """Dominant mu is minuscule iff its weight set is the single orbit W mu."""
    mu = datum.require_dominant(mu)
    return datum.dominant_below(mu) == (mu,)


def minuscule_poincare(datum, mu):
    """sum_{w in (W/W_mu)_min} q^{l(w)}: the Poincare polynomial of the
    smooth homogeneous orbit closure attached to a minuscule mu.

    Must match the multiplicity polynomial of the base element tau."""
    mu = datum.require_dominant(mu)
    if not is_minuscule(datum, mu):
        raise NotMinuscule(f"{mu} is not minuscule for {datum.label}")
    from .rootdata import mat_vec

    best = {}
    for m, _sign in datum.finite_weyl():
        img = mat_vec(m, mu)
        length = sum(
            1
            for f in datum.pos_roots
            if _root_negated(datum, f, m)
        )
        if img not in best or length < best[img]:
            best[img] = length
    out = {}
    for length in best.values():
        out[2 * length] = out.get(2 * length, 0) + 1
    return LaurentPoly(out)


def _root_negated(datum, f, m):
    from .rootdata import vec_mat

    return vec_mat(f, m) not in datum.pos_root_set


def base_change_consistency(table):
    """Re-expanding sum m(w) C''_w reproduces the trace function exactly."""
    hctx = context(table.datum)
    f = kottwitz_function(table.datum, table.mu)
    return hctx.from_ic_basis(table.m_polys) == f


# -- rendering -----------------------------------------------------------------


def render_text(table):
    rows = table.summarize()
    lines = [f"Number of admissible alcoves: {len(table.adm)}", ""]
    lines.append("Length | #Alcoves | Multiplicities | Bruhat configuration")
    for r in rows:
        mults = ", ".join(str(c) for c in r.mults)
        config = ", ".join(str(c) for c in r.config) if r.config else "-"
        lines.append(f"l={r.length} | {r.count} | {mults} | {config}")
    return "\n".join(lines) + "\n"


def render_csv(table):
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["element", "length", "multiplicities", "bruhat_configuration", "m_poly"]
    )
    for w in table.adm:
        writer.writerow(
            [
                w.encode(),
                w.length(),
                ",".join(str(c) for c in table.mult_vector(w)),
                ",".join(str(c) for c in table.bruhat_config(w)),
                table.m_polys[w].encode(),
            ]
        )
    return buf.getvalue()


def render_json(table, run_config=None):
    payload = {
        "group": table.datum.label,
        "mu": table.datum.format_coweight(table.mu),
        "length_t_mu": table.ell_mu,
        "admissible_count": len(table.adm),
        "rows": [
            {
                "element": w.encode(),
                "length": w.length(),
                "multiplicities": list(table.mult_vector(w)),
                "bruhat_configuration": list(table.bruhat_config(w)),
                "m_poly": table.m_polys[w].encode(),
            }
            for w in table.adm
        ],
        "grouped": [
            {
                "length": r.length,
                "alcoves": r.count,
                "multiplicities": list(r.mults),
                "bruhat_configuration": list(r.config),
            }
            for r in table.summarize()
        ],
    }
    if run_config is not None:
        payload["run_config"] = run_config
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
