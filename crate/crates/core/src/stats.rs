//! Hypothesis tests and interval estimates used by the analyses.
//!
//! The test statistics are computed here; the t and F tail probabilities
//! come from `statrs`. K-S p-values use the asymptotic Kolmogorov
//! distribution at the two-sample effective size `n·m/(n+m)`, which is
//! conservative on heavily tied integer data such as gene counts.

use std::fmt;

use statrs::distribution::{ContinuousCDF, FisherSnedecor, StudentsT};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StatsError {
    #[error("need at least {need} values, got {got}")]
    TooFewValues { need: usize, got: usize },
    #[error("need at least {need} groups, got {got}")]
    TooFewGroups { need: usize, got: usize },
    #[error("sample is empty")]
    Empty,
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("non-finite value in sample")]
    NonFinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TestKind {
    WelchT,
    AnovaOneWay,
    KolmogorovSmirnov,
}

impl TestKind {
    pub fn name(self) -> &'static str {
        match self {
            TestKind::WelchT => "welch_t",
            TestKind::AnovaOneWay => "anova",
            TestKind::KolmogorovSmirnov => "ks",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Df {
    None,
    One(f64),
    Two(f64, f64),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StatResult {
    pub test: TestKind,
    pub statistic: f64,
    pub df: Df,
    pub p_value: f64,
}

impl fmt::Display for StatResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} statistic={:.6} ", self.test.name(), self.statistic)?;
        match self.df {
            Df::None => {}
            Df::One(d) => write!(f, "df={d:.4} ")?,
            Df::Two(a, b) => write!(f, "df=({a},{b}) ")?,
        }
        write!(f, "p={:.6e}", self.p_value)
    }
}

fn check_finite(xs: &[f64]) -> Result<(), StatsError> {
    if xs.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(StatsError::NonFinite)
    }
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Unbiased sample variance.
pub fn variance(xs: &[f64]) -> f64 {
    let m = mean(xs);
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() as f64 - 1.0)
}

fn student_t(df: f64) -> StudentsT {
    StudentsT::new(0.0, 1.0, df).expect("df validated by caller")
}

/// Welch's unequal-variance t test, two-sided.
pub fn welch_t(a: &[f64], b: &[f64]) -> Result<StatResult, StatsError> {
    for s in [a, b] {
        if s.len() < 2 {
            return Err(StatsError::TooFewValues { need: 2, got: s.len() });
        }
        check_finite(s)?;
    }
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (va, vb) = (variance(a) / na, variance(b) / nb);
    let se2 = va + vb;
    if se2 <= 0.0 {
        return Err(StatsError::Degenerate("both samples have zero variance"));
    }
    let t = (mean(a) - mean(b)) / se2.sqrt();
    let df = se2 * se2 / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
    let p = (2.0 * student_t(df).sf(t.abs())).min(1.0);
    Ok(StatResult {
        test: TestKind::WelchT,
        statistic: t,
        df: Df::One(df),
        p_value: p,
    })
}

/// Equal-weight one-way ANOVA.
pub fn anova_oneway<G: AsRef<[f64]>>(groups: &[G]) -> Result<StatResult, StatsError> {
    if groups.len() < 2 {
        return Err(StatsError::TooFewGroups { need: 2, got: groups.len() });
    }
    let mut total = 0usize;
    let mut grand = 0.0;
    for g in groups {
        let g = g.as_ref();
        if g.len() < 2 {
            return Err(StatsError::TooFewValues { need: 2, got: g.len() });
        }
        check_finite(g)?;
        total += g.len();
        grand += g.iter().sum::<f64>();
    }
    let grand = grand / total as f64;
    let (mut between, mut within) = (0.0, 0.0);
    for g in groups {
        let g = g.as_ref();
        let m = mean(g);
        between += g.len() as f64 * (m - grand) * (m - grand);
        within += g.iter().map(|x| (x - m) * (x - m)).sum::<f64>();
    }
    let df_between = (groups.len() - 1) as f64;
    let df_within = (total - groups.len()) as f64;
    let (f, p) = if within <= 0.0 {
        if between <= 0.0 {
            return Err(StatsError::Degenerate("no variance within or between groups"));
        }
        (f64::INFINITY, 0.0)
    } else {
        let f = (between / df_between) / (within / df_within);
        let dist = FisherSnedecor::new(df_between, df_within).expect("positive df");
        (f, dist.sf(f))
    };
    Ok(StatResult {
        test: TestKind::AnovaOneWay,
        statistic: f,
        df: Df::Two(df_between, df_within),
        p_value: p,
    })
}

/// Survival function of the Kolmogorov distribution, `P(K > lambda)`.
pub fn kolmogorov_sf(lambda: f64) -> f64 {
    if lambda <= 0.0 {
        return 1.0;
    }
    if lambda < 1.0 {
        // Jacobi theta form converges quickly for small arguments.
        let c = std::f64::consts::PI * std::f64::consts::PI / (8.0 * lambda * lambda);
        let mut cdf = 0.0;
        for k in 1..=64 {
            let j = (2 * k - 1) as f64;
            let term = (-j * j * c).exp();
            cdf += term;
            if term < 1e-18 {
                break;
            }
        }
        let cdf = cdf * (2.0 * std::f64::consts::PI).sqrt() / lambda;
        (1.0 - cdf).clamp(0.0, 1.0)
    } else {
        let mut sum = 0.0;
        for k in 1..=100 {
            let kf = k as f64;
            let term = (-2.0 * kf * kf * lambda * lambda).exp();
            sum += if k % 2 == 1 { term } else { -term };
            if term < 1e-18 {
                break;
            }
        }
        (2.0 * sum).clamp(0.0, 1.0)
    }
}

/// Largest absolute ECDF difference, evaluated at every observed value.
pub fn ks_statistic(a: &[f64], b: &[f64]) -> f64 {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < a.len() && j < b.len() {
        let x = if a[i] <= b[j] { a[i] } else { b[j] };
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

/// Two-sided two-sample Kolmogorov-Smirnov test (asymptotic p-value).
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> Result<StatResult, StatsError> {
    if a.is_empty() || b.is_empty() {
        return Err(StatsError::Empty);
    }
    check_finite(a)?;
    check_finite(b)?;
    let d = ks_statistic(a, b);
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let en = na * nb / (na + nb);
    Ok(StatResult {
        test: TestKind::KolmogorovSmirnov,
        statistic: d,
        df: Df::None,
        p_value: kolmogorov_sf(en.sqrt() * d),
    })
}

pub fn bonferroni(p_values: &[f64], m: usize) -> Vec<f64> {
    let m = m.max(1) as f64;
    p_values.iter().map(|p| (p * m).min(1.0)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeanCi {
    pub mean: f64,
    pub low: f64,
    pub high: f64,
}

/// Mean with a two-sided 95% t interval.
pub fn mean_ci95(xs: &[f64]) -> Result<MeanCi, StatsError> {
    if xs.len() < 2 {
        return Err(StatsError::TooFewValues { need: 2, got: xs.len() });
    }
    check_finite(xs)?;
    let n = xs.len() as f64;
    let m = mean(xs);
    let se = (variance(xs) / n).sqrt();
    let q = student_t(n - 1.0).inverse_cdf(0.975);
    let half = q * se;
    Ok(MeanCi {
        mean: m,
        low: m - half,
        high: m + half,
    })
}

/// Mid-ranks (1-based), ties sharing their average rank.
pub fn ranks(xs: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by(|&i, &j| xs[i].total_cmp(&xs[j]));
    let mut out = vec![0.0; xs.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start;
        while end + 1 < order.len() && xs[order[end + 1]] == xs[order[start]] {
            end += 1;
        }
        let rank = (start + end) as f64 / 2.0 + 1.0;
        for &k in &order[start..=end] {
            out[k] = rank;
        }
        start = end + 1;
    }
    out
}

pub fn pearson(x: &[f64], y: &[f64]) -> Option<f64> {
    if x.len() != y.len() || x.len() < 2 {
        return None;
    }
    let (mx, my) = (mean(x), mean(y));
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    if sxx <= 0.0 || syy <= 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}

/// Spearman rank correlation; `None` when either series is constant.
pub fn spearman(x: &[f64], y: &[f64]) -> Option<f64> {
    pearson(&ranks(x), &ranks(y))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
}

/// Ordinary least-squares line; `None` when `x` has no spread.
pub fn least_squares(x: &[f64], y: &[f64]) -> Option<LineFit> {
    if x.len() != y.len() || x.len() < 2 {
        return None;
    }
    let (mx, my) = (mean(x), mean(y));
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    if sxx <= 0.0 {
        return None;
    }
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    Some(LineFit {
        slope,
        intercept: my - slope * mx,
    })
}

/// Wilson score interval for a binomial proportion.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let centre = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    let low = if successes == 0 { 0.0 } else { (centre - half).max(0.0) };
    let high = if successes >= trials { 1.0 } else { (centre + half).min(1.0) };
    (low, high)
}

pub const Z_95: f64 = 1.959_963_984_540_054;
