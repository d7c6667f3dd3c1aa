#!/usr/bin/env python3
"""Brute-force reference outputs for the bundled synthetic corpus.

Recomputes every golden report from the raw fixture files with exact
rational arithmetic and no shared code with the library:

    python3 oracle.py ../../data/fixture ../golden/synthetic

Outputs mirror `dscmetrics rank --scheme both` and `dscmetrics stats`
with the default window (2011-2020), the `proposed` rule set, the four
default scoring kinds and quantile 0.25.
"""

import csv
import json
import math
import sys
from decimal import ROUND_HALF_EVEN, ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction
from pathlib import Path

WINDOW = (2011, 2020)
QUANTILE = Fraction(1, 4)
COMMITTEES = [
    "geochemistry",
    "geodesy",
    "geology",
    "geophysics",
    "meteorology",
    "mining",
    "palaeontology",
    "physical_geography",
    "social_geography",
]
# proposed rule set minima for the four default scoring kinds
MINIMA = {
    "total_pubs": Fraction(40),
    "indexed_articles": Fraction(15),
    "independent_citations": Fraction(180),
    "indexed_citations": Fraction(80),
}
BIN_LABELS = ["1", "2", "3-5", "6-10", "11-20", "21-50", "51-100", "101-500", ">=501"]


def bin_of(n):
    if n == 1:
        return 0
    if n == 2:
        return 1
    if n <= 5:
        return 2
    if n <= 10:
        return 3
    if n <= 20:
        return 4
    if n <= 50:
        return 5
    if n <= 100:
        return 6
    if n <= 500:
        return 7
    return 8


def fmt(x, places):
    """Canonical decimal rendering: snap to 12 significant digits, then
    round half away from zero to `places` decimals."""
    x = Fraction(x)
    if x == 0:
        return f"{0:.{places}f}"
    with localcontext() as ctx:
        ctx.prec = 60
        d = Decimal(x.numerator) / Decimal(x.denominator)
        exp = d.adjusted() - 11
        unit = Decimal(1).scaleb(exp)
        # the exact value must sit clear of a 12-digit rounding boundary,
        # otherwise binary noise could push a float either way
        frac = (abs(d) / unit) % 1
        if abs(frac - Decimal("0.5")) < Decimal("1e-3"):
            raise SystemExit(f"value {d} is too close to a 12-digit boundary")
        snapped = d.quantize(unit, rounding=ROUND_HALF_EVEN)
        out = snapped.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)
        if out == 0:
            out = abs(out)
        return f"{out:.{places}f}"


def f2(x):
    return fmt(x, 2)


def f6(x):
    return fmt(x, 6)


def load(fixture):
    researchers = {}
    order = []
    with open(fixture / "researchers.csv", newline="") as fh:
        for row in csv.DictReader(fh):
            researchers[row["researcher_id"]] = row["committee"]
            order.append(row["researcher_id"])

    merged = {}
    first_seen = []
    with open(fixture / "publications.jsonl") as fh:
        for line in fh:
            if not line.strip():
                continue
            rec = json.loads(line)
            pid = rec["pub_id"]
            if pid not in merged:
                merged[pid] = rec
                first_seen.append(pid)
            else:
                old = merged[pid]
                old["independent_citations"] = max(old["independent_citations"], rec["independent_citations"])
                old["wos_citations"] = max(old["wos_citations"], rec["wos_citations"])
                old["wos_indexed"] = old["wos_indexed"] or rec["wos_indexed"]
                old["scopus_indexed"] = old["scopus_indexed"] or rec["scopus_indexed"]
    pubs = [merged[p] for p in first_seen if WINDOW[0] <= merged[p]["year"] <= WINDOW[1]]
    return researchers, order, pubs


def attributed_committee(pub, researchers):
    for a in pub["authors"]:
        if a.startswith("m:"):
            return researchers[a[2:]]
    raise SystemExit(f"unattributable {pub['pub_id']}")


def scores(researchers, order, pubs, fractional):
    values = {r: {k: Fraction(0) for k in MINIMA} for r in order}
    for pub in pubs:
        n = pub["author_count"]
        credit = Fraction(1, n) if fractional else Fraction(1)
        seen = set()
        for a in pub["authors"]:
            if not a.startswith("m:") or a in seen:
                continue
            seen.add(a)
            v = values[a[2:]]
            v["total_pubs"] += credit
            if pub["doc_type"] == "journal_article" and pub["wos_indexed"]:
                v["indexed_articles"] += credit
            v["independent_citations"] += pub["independent_citations"] * credit
            v["indexed_citations"] += pub["wos_citations"] * credit
    out = {}
    for r in order:
        pts = [values[r][k] / MINIMA[k] for k in MINIMA]
        out[r] = (sum(pts) / len(pts), values[r]["total_pubs"])
    return out


def ranking(researchers, order, pubs, fractional):
    sc = scores(researchers, order, pubs, fractional)
    ids = sorted(order, key=lambda r: (-sc[r][0], -sc[r][1], r))
    # a floating-point ranking treats scores within 1e-9 as tied; distinct
    # exact scores must be separated well beyond that
    for a, b in zip(ids, ids[1:]):
        ca, cb = sc[a][0], sc[b][0]
        if ca != cb and ca - cb < Fraction(1, 10**8):
            raise SystemExit(f"near tie between {a} and {b}")
    return [(i + 1, r, researchers[r], sc[r][0]) for i, r in enumerate(ids)]


def write(path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow(row)


def main(fixture, out):
    out.mkdir(parents=True, exist_ok=True)
    researchers, order, pubs = load(fixture)
    present = [c for c in COMMITTEES if any(v == c for v in researchers.values())]
    size = {c: sum(1 for v in researchers.values() if v == c) for c in COMMITTEES}

    top_counts = {}
    for scheme, frac in (("integer", False), ("fractional", True)):
        rk = ranking(researchers, order, pubs, frac)
        write(out / f"ranking_{scheme}.csv", ["rank", "researcher_id", "committee", "cumulative"],
              [(i, r, c, f6(v)) for i, r, c, v in rk])
        k = math.ceil(QUANTILE * len(rk))
        top = rk[:k]
        counts = {c: sum(1 for e in top if e[2] == c) for c in COMMITTEES}
        top_counts[scheme] = counts
        write(out / f"composition_{scheme}.csv", ["committee", "count", "percent"],
              [(c, counts[c], f2(Fraction(100 * counts[c], k) if k else 0)) for c in present])
        write(out / f"share_{scheme}.csv", ["committee", "in_group", "committee_size", "percent"],
              [(c, counts[c], size[c], f2(Fraction(100 * counts[c], size[c]))) for c in present])

    rows = []
    for c in present:
        i, f = top_counts["integer"][c], top_counts["fractional"][c]
        rows.append((c, i, f, f - i, f2(Fraction(100 * i, size[c])), f2(Fraction(100 * f, size[c])),
                     f2(Fraction(100 * (f - i), size[c]))))
    write(out / "delta.csv", ["committee", "integer_count", "fractional_count", "count_change",
                              "integer_share", "fractional_share", "share_change"], rows)

    bins = {c: [0] * 9 for c in COMMITTEES}
    overall = [0] * 9
    for pub in pubs:
        c = attributed_committee(pub, researchers)
        b = bin_of(pub["author_count"])
        bins[c][b] += 1
        overall[b] += 1
    rows = []
    for c in present:
        tot = sum(bins[c])
        if tot:
            rows.append([c] + [f2(Fraction(100 * x, tot)) for x in bins[c]])
    write(out / "coauthorship.csv", ["committee"] + BIN_LABELS, rows)
    tot = sum(overall)
    write(out / "coauthorship_overall.csv", ["committee"] + BIN_LABELS,
          [["all"] + [f2(Fraction(100 * x, tot)) for x in overall]] if tot else [])

    rows = []
    for c in present:
        cp = [p for p in pubs if attributed_committee(p, researchers) == c]
        n = len(cp)
        wos = sum(1 for p in cp if p["wos_indexed"])
        cited = sum(1 for p in cp if p["independent_citations"] > 0)
        cit = sum(p["independent_citations"] for p in cp)
        wcit = sum(p["wos_citations"] for p in cp)
        rows.append((
            c, n,
            f2(Fraction(100 * wos, n)) if n else f2(0),
            f2(Fraction(100 * (n - cited), n)) if n else f2(0),
            cit,
            f2(Fraction(cit, cited)) if cited else "",
            wcit,
            f2(Fraction(wcit, cited)) if cited else "",
        ))
    write(out / "committee_summary.csv", ["committee", "publications", "pct_wos_indexed", "pct_uncited",
                                          "total_citations", "mean_citations_per_cited",
                                          "total_wos_citations", "mean_wos_citations_per_cited"], rows)

    print(f"{len(order)} researchers, {len(pubs)} publications in window, top group {math.ceil(QUANTILE * len(order))}")


if __name__ == "__main__":
    main(Path(sys.argv[1]), Path(sys.argv[2]))
