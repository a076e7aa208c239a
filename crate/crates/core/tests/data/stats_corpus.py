"""Regenerates tests/data/stats_corpus.rs from scipy.

Run from crates/core: python3 tests/data/stats_corpus.py > tests/data/stats_corpus.rs
"""
import numpy as np
from scipy import stats

rng = np.random.default_rng(20240611)


def fmt(xs):
    return "&[" + ", ".join(repr(float(x)) for x in xs) + "]"


def pairs():
    out = [
        ([1, 2, 3], [2, 3, 4]),
        ([1, 2, 3, 4], [1, 2, 3, 5]),
        ([0.5, 1.5, 2.25, 9.0, 3.0], [1.0, 1.0, 2.0]),
    ]
    for n, m, lo, hi in [(8, 8, 1, 6), (16, 16, 1, 12), (64, 64, 1, 10), (30, 45, 0, 4), (5, 40, 1, 3)]:
        out.append((rng.integers(lo, hi, n).tolist(), rng.integers(lo, hi + 2, m).tolist()))
    for n, m, shift, scale in [(10, 12, 0.0, 1.0), (25, 25, 0.7, 2.0), (50, 20, -1.3, 0.5), (200, 150, 0.1, 1.0)]:
        out.append((rng.normal(0, 1, n).round(6).tolist(), rng.normal(shift, scale, m).round(6).tolist()))
    return out


def groups():
    out = [
        [[1, 2, 3], [2, 3, 4], [5, 6, 9]],
        [[1, 1, 2, 2], [1, 2, 2, 3]],
    ]
    for k, n, hi in [(3, 8, 6), (5, 16, 10), (5, 64, 8), (4, 12, 3)]:
        out.append([rng.integers(1, hi + j, n).tolist() for j in range(k)])
    out.append([rng.normal(j * 0.3, 1, 10 + 3 * j).round(6).tolist() for j in range(4)])
    return out


def series():
    out = [[0, 2], [1, 2, 3, 4], [5, 5, 5, 6]]
    for n in [3, 16, 64]:
        out.append(rng.normal(3, 2, n).round(6).tolist())
    return out


print("// Generated by tests/data/stats_corpus.py (scipy {}). Do not edit.".format(__import__("scipy").__version__))
print()
print("pub struct PairCase {")
print("    pub a: &'static [f64],")
print("    pub b: &'static [f64],")
print("    pub t: f64,")
print("    pub t_df: f64,")
print("    pub t_p: f64,")
print("    pub ks_d: f64,")
print("    pub ks_p: f64,")
print("}")
print()
print("pub struct GroupCase {")
print("    pub groups: &'static [&'static [f64]],")
print("    pub f: f64,")
print("    pub df_between: f64,")
print("    pub df_within: f64,")
print("    pub p: f64,")
print("}")
print()
print("pub struct SeriesCase {")
print("    pub values: &'static [f64],")
print("    pub mean: f64,")
print("    pub low: f64,")
print("    pub high: f64,")
print("}")
print()
print("pub const PAIRS: &[PairCase] = &[")
for a, b in pairs():
    a, b = np.array(a, float), np.array(b, float)
    t = stats.ttest_ind(a, b, equal_var=False)
    va, vb = a.var(ddof=1) / len(a), b.var(ddof=1) / len(b)
    df = (va + vb) ** 2 / (va**2 / (len(a) - 1) + vb**2 / (len(b) - 1))
    ks = stats.ks_2samp(a, b, method="asymp")
    en = len(a) * len(b) / (len(a) + len(b))
    ks_p = stats.kstwobign.sf(np.sqrt(en) * ks.statistic)
    print("    PairCase {")
    print(f"        a: {fmt(a)},")
    print(f"        b: {fmt(b)},")
    print(f"        t: {float(t.statistic)!r},")
    print(f"        t_df: {float(df)!r},")
    print(f"        t_p: {float(t.pvalue)!r},")
    print(f"        ks_d: {float(ks.statistic)!r},")
    print(f"        ks_p: {float(ks_p)!r},")
    print("    },")
print("];")
print()
print("pub const GROUPS: &[GroupCase] = &[")
for gs in groups():
    gs = [np.array(g, float) for g in gs]
    r = stats.f_oneway(*gs)
    n = sum(len(g) for g in gs)
    print("    GroupCase {")
    print("        groups: &[" + ", ".join(fmt(g) for g in gs) + "],")
    print(f"        f: {float(r.statistic)!r},")
    print(f"        df_between: {float(len(gs) - 1)!r},")
    print(f"        df_within: {float(n - len(gs))!r},")
    print(f"        p: {float(r.pvalue)!r},")
    print("    },")
print("];")
print()
print("pub const SERIES: &[SeriesCase] = &[")
for s in series():
    s = np.array(s, float)
    m = s.mean()
    h = stats.t.ppf(0.975, len(s) - 1) * s.std(ddof=1) / np.sqrt(len(s))
    print("    SeriesCase {")
    print(f"        values: {fmt(s)},")
    print(f"        mean: {float(m)!r},")
    print(f"        low: {float(m - h)!r},")
    print(f"        high: {float(m + h)!r},")
    print("    },")
print("];")
