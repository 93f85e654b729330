//! Hermite polynomials and coefficient-level chaos calculus.
//!
//! Probabilists' normalisation throughout: the polynomials are orthogonal
//! with respect to the standard normal weight and satisfy the three-term
//! recurrence `H_{q+1}(x) = x H_q(x) - q H_{q-1}(x)` with `H_0 = 1`,
//! `H_1 = x`, and `E[H_p(X) H_q(X)] = q! δ_{pq}` for `X ~ N(0,1)`.
//!
//! A nonlinearity `f` in `L²(γ)` is represented by its finite coefficient
//! vector `(c_0, …, c_Q)` with `f = Σ c_q H_q`. All operators in this module
//! (chaos split, Hermite shift, OU semigroup, number operator, Sobolev
//! norms) act on that vector.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Evaluate the probabilists' Hermite polynomial `H_q(x)`.
pub fn hermite_eval(q: usize, x: f64) -> f64 {
    let mut prev = 1.0;
    if q == 0 {
        return prev;
    }
    let mut cur = x;
    for j in 1..q {
        let next = x * cur - j as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Evaluate `H_0(x), …, H_q(x)` in one sweep of the recurrence.
pub fn hermite_eval_all(q: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(q + 1);
    out.push(1.0);
    if q == 0 {
        return out;
    }
    out.push(x);
    for j in 1..q {
        let next = x * out[j] - j as f64 * out[j - 1];
        out.push(next);
    }
    out
}

pub fn factorial(q: usize) -> f64 {
    (1..=q).map(|j| j as f64).product()
}

/// Gauss-Hermite rule in the probabilists' normalisation:
/// `∫ f dγ ≈ Σ w_i f(x_i)` with `γ = N(0,1)`, so the weights sum to one.
#[derive(Debug, Clone)]
pub struct GaussHermite {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussHermite {
    /// Nodes are the eigenvalues of the Jacobi matrix of the orthonormal
    /// Hermite recurrence, found by Sturm-count bisection and polished by
    /// Newton steps on a rescaled recurrence (no overflow even for
    /// thousands of nodes). Weights come from `w = 2 / (2n · p_{n-1}(x)²)`
    /// in the physicists' normalisation, then the change of variables
    /// `x ↦ √2 x`, `w ↦ w/√π` moves everything to the Gaussian weight.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "quadrature needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let radius = (2.0 * n as f64 + 1.0).sqrt() + 2.0;
        for k in n / 2..n {
            // k-th smallest eigenvalue, upper half only; mirror the rest
            let (mut lo, mut hi) = (-radius, radius);
            while hi - lo > 1e-13 * hi.abs().max(1.0) {
                let mid = 0.5 * (lo + hi);
                if sturm_count_below(n, mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let mut z = 0.5 * (lo + hi);
            let mut log_pm = 0.0;
            for _ in 0..4 {
                let (ratio, log_prev) = scaled_hermite_ratio(n, z);
                log_pm = log_prev;
                let step = ratio / (2.0 * n as f64).sqrt();
                if !step.is_finite() || step.abs() > hi - lo + 1e-12 {
                    break;
                }
                z -= step;
            }
            nodes[k] = z;
            nodes[n - 1 - k] = -z;
            // w = 2 / (2n p_{n-1}(z)^2), computed in logs
            let log_w = 2f64.ln() - (2.0 * n as f64).ln() - 2.0 * log_pm;
            weights[k] = log_w.exp();
            weights[n - 1 - k] = weights[k];
        }
        // physicists' -> probabilists'
        for x in &mut nodes {
            *x *= core::f64::consts::SQRT_2;
        }
        let inv_sqrt_pi = 1.0 / core::f64::consts::PI.sqrt();
        for w in &mut weights {
            *w *= inv_sqrt_pi;
        }
        Self { nodes, weights }
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Number of eigenvalues of the n×n Hermite Jacobi matrix below `x`,
/// via the standard LDL^T Sturm sequence (diagonal 0, off-diagonal
/// `b_k = sqrt(k/2)`).
fn sturm_count_below(n: usize, x: f64) -> usize {
    let mut count = 0;
    let mut d = -x;
    if d < 0.0 {
        count += 1;
    }
    for k in 1..n {
        let b_sq = k as f64 / 2.0;
        let mut denom = d;
        if denom.abs() < 1e-300 {
            denom = if denom < 0.0 { -1e-300 } else { 1e-300 };
        }
        d = -x - b_sq / denom;
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// `(p_n(z)/p_{n-1}(z), log |p_{n-1}(z)|)` for the orthonormal physicists'
/// Hermite polynomials, with periodic rescaling so intermediate values never
/// overflow.
fn scaled_hermite_ratio(n: usize, z: f64) -> (f64, f64) {
    let mut prev = 0.0;
    let mut cur = core::f64::consts::PI.powf(-0.25);
    let mut log_scale = 0.0;
    for j in 0..n {
        let jf = j as f64;
        let next = z * (2.0 / (jf + 1.0)).sqrt() * cur - (jf / (jf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        let mag = cur.abs().max(prev.abs());
        if mag > 1e100 {
            prev /= 1e100;
            cur /= 1e100;
            log_scale += 100.0 * core::f64::consts::LN_10;
        }
    }
    (cur / prev, prev.abs().ln() + log_scale)
}

/// A finite Hermite-coefficient vector `(c_0, …, c_Q)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "SeriesRepr", try_from = "SeriesRepr")]
pub struct HermiteSeries {
    coeffs: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    max_degree: usize,
    coeffs: Vec<f64>,
}

impl From<HermiteSeries> for SeriesRepr {
    fn from(s: HermiteSeries) -> Self {
        Self {
            max_degree: s.max_degree(),
            coeffs: s.coeffs,
        }
    }
}

impl TryFrom<SeriesRepr> for HermiteSeries {
    type Error = String;
    fn try_from(r: SeriesRepr) -> std::result::Result<Self, String> {
        if r.coeffs.len() != r.max_degree + 1 {
            return Err(format!(
                "coeffs has length {}, expected max_degree + 1 = {}",
                r.coeffs.len(),
                r.max_degree + 1
            ));
        }
        Ok(Self { coeffs: r.coeffs })
    }
}

impl HermiteSeries {
    pub fn new(coeffs: Vec<f64>) -> Self {
        if coeffs.is_empty() {
            return Self { coeffs: vec![0.0] };
        }
        Self { coeffs }
    }

    pub fn zero(max_degree: usize) -> Self {
        Self {
            coeffs: vec![0.0; max_degree + 1],
        }
    }

    /// The single polynomial `H_degree` with unit coefficient.
    pub fn pure(degree: usize) -> Self {
        let mut coeffs = vec![0.0; degree + 1];
        coeffs[degree] = 1.0;
        Self { coeffs }
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, q: usize) -> f64 {
        self.coeffs.get(q).copied().unwrap_or(0.0)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        let h = hermite_eval_all(self.max_degree(), x);
        self.coeffs.iter().zip(&h).map(|(c, v)| c * v).sum()
    }

    /// `‖f‖²_{L²(γ)} = Σ_q q!·c_q²`
    pub fn l2_norm_sq(&self) -> f64 {
        let mut fact = 1.0;
        let mut sum = 0.0;
        for (q, c) in self.coeffs.iter().enumerate() {
            if q > 0 {
                fact *= q as f64;
            }
            sum += fact * c * c;
        }
        sum
    }

    pub fn sup_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, c| acc.max(c.abs()))
    }

    /// Smallest degree `q ≥ 1` with `|c_q| > tol`; degree 0 is reported only
    /// when `|c_0| > tol` itself.
    pub fn rank(&self, tol: f64) -> Result<usize> {
        if self.coeff(0).abs() > tol {
            return Ok(0);
        }
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, c)| c.abs() > tol)
            .map(|(q, _)| q)
            .ok_or(Error::NoHermiteRank)
    }

    /// Rank with the default tolerance `1e-10 · sup_q |c_q|`.
    pub fn rank_auto(&self) -> Result<usize> {
        self.rank(1e-10 * self.sup_coeff())
    }

    /// Split into degrees `≤ cutoff` and degrees `> cutoff`; the two parts
    /// sum back to the input coefficient by coefficient.
    pub fn chaos_split(&self, cutoff: usize) -> (HermiteSeries, HermiteSeries) {
        let mut low = self.clone();
        let mut high = Self::zero(self.max_degree());
        for q in (cutoff + 1)..=self.max_degree() {
            high.coeffs[q] = low.coeffs[q];
            low.coeffs[q] = 0.0;
        }
        (low, high)
    }

    /// The projection onto degrees `≤ cutoff`.
    pub fn truncate(&self, cutoff: usize) -> HermiteSeries {
        self.chaos_split(cutoff).0
    }

    /// The n-th Hermite shift: coefficient at degree `q - n` becomes `c_q`.
    pub fn shift(&self, n: usize) -> HermiteSeries {
        if n > self.max_degree() {
            return Self::zero(0);
        }
        Self::new(self.coeffs[n..].to_vec())
    }

    /// OU semigroup at time `t ≥ 0`: `c_q ↦ e^{-qt} c_q`.
    pub fn ou_semigroup(&self, t: f64) -> Result<HermiteSeries> {
        if t < 0.0 {
            return Err(Error::NegativeTime(t));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(q, c)| (-(q as f64) * t).exp() * c)
            .collect();
        Ok(Self { coeffs })
    }

    /// Powers of the number operator on the centred part:
    /// `c_q ↦ q^r c_q` for `q ≥ 1` and `c_0 ↦ 0`, matching the pseudo-inverse
    /// convention `L L⁻¹ G = G - E[G]`.
    pub fn number_operator_pow(&self, r: f64) -> HermiteSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(q, c)| {
                if q == 0 {
                    0.0
                } else {
                    (q as f64).powf(r) * c
                }
            })
            .collect();
        Self { coeffs }
    }

    /// Squared `D^{k,2}` norm: `Σ_{j=0}^{k} Σ_{q ≥ j} (q!/(q-j)!)·q!·c_q²`.
    pub fn sobolev_norm_k2(&self, k: usize) -> f64 {
        let mut total = 0.0;
        for j in 0..=k {
            for (q, c) in self.coeffs.iter().enumerate().skip(j) {
                let falling: f64 = ((q - j + 1)..=q).map(|v| v as f64).product();
                total += falling * factorial(q) * c * c;
            }
        }
        total
    }
}

/// Default node count for coefficient extraction.
pub fn default_nodes(max_degree: usize) -> usize {
    (4 * max_degree).max(200)
}

/// Hermite coefficients of `f` up to `max_degree` by Gauss-Hermite
/// quadrature: `c_q = (1/q!) ∫ f H_q dγ`.
///
/// The rule is evaluated at `nodes` and `2·nodes` points; if the two results
/// disagree the quadrature has not stabilised and an error is returned.
/// Kinked but γ-integrable functions (like `|x|`) converge slowly — the gate
/// is calibrated to flag non-integrable blowups, not slow polynomial decay.
pub fn extract_coefficients(
    f: impl Fn(f64) -> f64,
    max_degree: usize,
    nodes: usize,
) -> Result<HermiteSeries> {
    let nodes = nodes.max(max_degree + 1);
    let coarse = quadrature_coefficients(&f, max_degree, nodes);
    let fine = quadrature_coefficients(&f, max_degree, 2 * nodes);
    let scale = fine.iter().fold(1.0_f64, |acc, c| acc.max(c.abs()));
    let discrepancy = coarse
        .iter()
        .zip(&fine)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0_f64, f64::max);
    let tolerance = 1e-3 * scale;
    if discrepancy > tolerance || !discrepancy.is_finite() || !scale.is_finite() {
        return Err(Error::QuadratureDivergence {
            nodes,
            nodes_doubled: 2 * nodes,
            discrepancy,
            tolerance,
        });
    }
    Ok(HermiteSeries::new(fine))
}

/// Composite 16-point Gauss-Legendre over `[a, b]` split into `panels`.
/// Used for integrands that are smooth away from a known kink.
fn panel_integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    // 16-point Gauss-Legendre on [-1, 1], upper half (symmetric)
    const XS: [f64; 8] = [
        0.095_012_509_837_637_44,
        0.281_603_550_779_258_9,
        0.458_016_777_657_227_4,
        0.617_876_244_402_643_7,
        0.755_404_408_355_003,
        0.865_631_202_387_831_7,
        0.944_575_023_073_232_6,
        0.989_400_934_991_649_9,
    ];
    const WS: [f64; 8] = [
        0.189_450_610_455_068_5,
        0.182_603_415_044_923_6,
        0.169_156_519_395_002_54,
        0.149_595_988_816_576_73,
        0.124_628_971_255_533_87,
        0.095_158_511_682_492_79,
        0.062_253_523_938_647_894,
        0.027_152_459_411_754_095,
    ];
    let width = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * width;
        let half = 0.5 * width;
        for k in 0..8 {
            total += WS[k] * half * (f(mid + half * XS[k]) + f(mid - half * XS[k]));
        }
    }
    total
}

/// Coefficients of the centred absolute value `|x| - sqrt(2/π)`.
///
/// The kink sits at the origin, so integrate the smooth halves separately:
/// odd coefficients vanish by symmetry, and for even `q`
/// `c_q = (2/q!) ∫_0^∞ (x - sqrt(2/π)) H_q(x) φ(x) dx`.
fn centred_abs_series(max_degree: usize) -> HermiteSeries {
    let centre = (2.0 / core::f64::consts::PI).sqrt();
    let phi = |x: f64| (-0.5 * x * x).exp() / (2.0 * core::f64::consts::PI).sqrt();
    let mut coeffs = vec![0.0; max_degree + 1];
    for (q, c) in coeffs.iter_mut().enumerate() {
        if q % 2 == 1 {
            continue;
        }
        let integral = panel_integrate(
            |x| (x - centre) * hermite_eval(q, x) * phi(x),
            0.0,
            45.0,
            180,
        );
        *c = 2.0 * integral / factorial(q);
    }
    HermiteSeries::new(coeffs)
}

fn quadrature_coefficients(f: &impl Fn(f64) -> f64, max_degree: usize, nodes: usize) -> Vec<f64> {
    let rule = GaussHermite::new(nodes);
    let mut sums = vec![0.0; max_degree + 1];
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let fx = f(x);
        let h = hermite_eval_all(max_degree, x);
        for (s, hv) in sums.iter_mut().zip(&h) {
            *s += w * fx * hv;
        }
    }
    for (q, s) in sums.iter_mut().enumerate() {
        *s /= factorial(q);
    }
    sums
}

/// Built-in nonlinearities. Every preset is centred.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonlinearityPreset {
    /// The pure polynomial `H_q`.
    Hermite { degree: usize },
    /// `|x| - sqrt(2/π)`, the rank-2 benchmark. Coefficients come from
    /// quadrature; the closed forms are used as oracles in tests only.
    CentredAbs,
    /// `x² - 1 = H_2`.
    SquareCentred,
    /// User-supplied coefficient table `(c_0, …, c_Q)`.
    CustomTabulated { coeffs: Vec<f64> },
}

impl NonlinearityPreset {
    /// Coefficient vector of the preset up to `max_degree`.
    pub fn series(&self, max_degree: usize) -> Result<HermiteSeries> {
        match self {
            Self::Hermite { degree } => {
                let mut coeffs = vec![0.0; max_degree.max(*degree) + 1];
                coeffs[*degree] = 1.0;
                Ok(HermiteSeries::new(coeffs))
            }
            Self::CentredAbs => Ok(centred_abs_series(max_degree)),
            Self::SquareCentred => {
                let mut coeffs = vec![0.0; max_degree.max(2) + 1];
                coeffs[2] = 1.0;
                Ok(HermiteSeries::new(coeffs))
            }
            Self::CustomTabulated { coeffs } => Ok(HermiteSeries::new(coeffs.clone())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn low_degree_values() {
        assert_eq!(hermite_eval(0, 7.3), 1.0);
        assert_eq!(hermite_eval(2, 0.0), -1.0);
        // recurrence oracle: H_3(x) = x³ - 3x
        assert_eq!(hermite_eval(3, 1.0), -2.0);
        assert_eq!(hermite_eval(1, -0.25), -0.25);
    }

    /// Expand `H_q` symbolically from the Rodrigues form: with
    /// `H_q = (-1)^q e^{x²/2} (d/dx)^q e^{-x²/2} = p_q(x)` the coefficient
    /// arrays obey `p_{q+1} = x·p_q - p_q'`.
    fn rodrigues_coeffs(q: usize) -> Vec<f64> {
        let mut p = vec![1.0];
        for _ in 0..q {
            let mut next = vec![0.0; p.len() + 1];
            for (k, &a) in p.iter().enumerate() {
                next[k + 1] += a;
                if k >= 1 {
                    next[k - 1] -= k as f64 * a;
                }
            }
            p = next;
        }
        p
    }

    #[test]
    fn recurrence_matches_rodrigues_expansion() {
        for q in 0..=6 {
            let poly = rodrigues_coeffs(q);
            for i in -6..=6 {
                let x = i as f64 / 2.0;
                let direct: f64 = poly
                    .iter()
                    .enumerate()
                    .map(|(k, a)| a * x.powi(k as i32))
                    .sum();
                assert_abs_diff_eq!(hermite_eval(q, x), direct, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn quadrature_orthogonality() {
        let rule = GaussHermite::new(64);
        for p in 0..=12_usize {
            for q in 0..=12_usize {
                let value = rule.integrate(|x| hermite_eval(p, x) * hermite_eval(q, x));
                let expected = if p == q { factorial(p) } else { 0.0 };
                let scale = factorial(p.max(q));
                assert!(
                    (value - expected).abs() <= 1e-8 * scale,
                    "p={p} q={q} got {value} want {expected}"
                );
            }
        }
    }

    #[test]
    fn quadrature_weights_sum_to_one() {
        for n in [1, 2, 7, 200, 501] {
            let rule = GaussHermite::new(n);
            let total: f64 = rule.weights.iter().sum();
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-12);
            // E[x²] = 1 needs n >= 2
            if n >= 2 {
                assert_abs_diff_eq!(rule.integrate(|x| x * x), 1.0, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn extracts_pure_hermite() {
        let series = extract_coefficients(|x| hermite_eval(3, x), 5, 64).unwrap();
        for q in 0..=5 {
            let want = if q == 3 { 1.0 } else { 0.0 };
            assert_abs_diff_eq!(series.coeff(q), want, epsilon = 1e-10);
        }
    }

    #[test]
    fn extracts_x_squared() {
        // x² = H_2 + 1
        let series = extract_coefficients(|x| x * x, 3, 64).unwrap();
        assert_abs_diff_eq!(series.coeff(0), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(series.coeff(1), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(series.coeff(2), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(series.coeff(3), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn centred_abs_coefficients() {
        let series = NonlinearityPreset::CentredAbs.series(4).unwrap();
        assert_abs_diff_eq!(series.coeff(0), 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(series.coeff(1), 0.0, epsilon = 1e-10);
        // 2000-node oracle for c_2 = 1/sqrt(2π)
        let oracle = extract_coefficients(
            |x: f64| x.abs() - (2.0 / core::f64::consts::PI).sqrt(),
            4,
            2000,
        )
        .unwrap();
        assert_abs_diff_eq!(series.coeff(2), oracle.coeff(2), epsilon = 1e-10);
        let expected = 1.0 / (2.0 * core::f64::consts::PI).sqrt();
        assert_abs_diff_eq!(series.coeff(2), expected, epsilon = 1e-8);
        assert_abs_diff_eq!(series.coeff(2), 0.398_942, epsilon = 1e-6);
    }

    /// Closed forms for the centred absolute value:
    /// `c_{2j} = sqrt(2/π)·(-1)^{j+1} / (2^j j! (2j-1))` for `j ≥ 1`.
    #[test]
    fn centred_abs_closed_form_oracle() {
        let series = NonlinearityPreset::CentredAbs.series(8).unwrap();
        let base = (2.0 / core::f64::consts::PI).sqrt();
        for j in 1..=4_usize {
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            let expected = base * sign / (2f64.powi(j as i32) * factorial(j) * (2 * j - 1) as f64);
            assert_abs_diff_eq!(series.coeff(2 * j), expected, epsilon = 1e-8);
            assert_abs_diff_eq!(series.coeff(2 * j - 1), 0.0, epsilon = 1e-10);
        }
        assert_eq!(series.rank_auto().unwrap(), 2);
    }

    #[test]
    fn rank_detection() {
        let s = HermiteSeries::new(vec![0.0, 0.0, 1.0]);
        assert_eq!(s.rank(1e-12).unwrap(), 2);
        let zero = HermiteSeries::new(vec![0.0, 0.0, 0.0]);
        assert!(matches!(zero.rank(1e-12), Err(Error::NoHermiteRank)));
        let uncentred = HermiteSeries::new(vec![0.5, 1.0]);
        assert_eq!(uncentred.rank(1e-12).unwrap(), 0);
    }

    #[test]
    fn chaos_split_is_exact() {
        let s = HermiteSeries::new(vec![0.0, 1.0, 1.0, 1.0]);
        let (low, high) = s.chaos_split(2);
        assert_eq!(low.coeffs(), &[0.0, 1.0, 1.0, 0.0]);
        assert_eq!(high.coeffs(), &[0.0, 0.0, 0.0, 1.0]);
        for q in 0..=3 {
            assert_eq!(low.coeff(q) + high.coeff(q), s.coeff(q));
        }
        // M = Q leaves nothing above
        let (_, top) = s.chaos_split(3);
        assert!(top.coeffs().iter().all(|&c| c == 0.0));
    }

    #[test]
    fn chaos_split_pythagoras() {
        let s = NonlinearityPreset::CentredAbs.series(10).unwrap();
        let (low, high) = s.chaos_split(4);
        let lhs = low.l2_norm_sq() + high.l2_norm_sq();
        let rhs = s.l2_norm_sq();
        assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0));
    }

    #[test]
    fn shift_behaviour() {
        let h3 = HermiteSeries::pure(3);
        assert_eq!(h3.shift(1).coeffs(), &[0.0, 0.0, 1.0]);
        let s = HermiteSeries::new(vec![0.0, 5.0]);
        let shifted = s.shift(2);
        assert!(shifted.coeffs().iter().all(|&c| c == 0.0));
    }

    #[test]
    fn shift_matches_extracted_presets() {
        // S_2 applied to |x| - sqrt(2/π) drops every degree by two.
        let s = NonlinearityPreset::CentredAbs.series(8).unwrap();
        let shifted = s.shift(2);
        for q in 0..=6 {
            assert_abs_diff_eq!(shifted.coeff(q), s.coeff(q + 2), epsilon = 0.0);
        }
    }

    #[test]
    fn ou_semigroup_basics() {
        let s = HermiteSeries::new(vec![0.3, 0.5, 1.0]);
        let id = s.ou_semigroup(0.0).unwrap();
        assert_eq!(id, s);
        let h2 = HermiteSeries::pure(2);
        let halved = h2.ou_semigroup(2f64.ln()).unwrap();
        assert_abs_diff_eq!(halved.coeff(2), 0.25, epsilon = 1e-15);
        assert!(s.ou_semigroup(-1.0).is_err());
        // contraction
        assert!(s.ou_semigroup(0.7).unwrap().l2_norm_sq() <= s.l2_norm_sq());
    }

    #[test]
    fn ou_semigroup_law() {
        let s = HermiteSeries::new(vec![0.1, -0.4, 0.9, 0.2]);
        let (t1, t2) = (0.3, 1.1);
        let composed = s.ou_semigroup(t1).unwrap().ou_semigroup(t2).unwrap();
        let direct = s.ou_semigroup(t1 + t2).unwrap();
        for q in 0..=3 {
            assert_abs_diff_eq!(composed.coeff(q), direct.coeff(q), epsilon = 1e-15);
        }
    }

    #[test]
    fn number_operator() {
        let h3 = HermiteSeries::pure(3);
        assert_eq!(h3.number_operator_pow(1.0).coeff(3), 3.0);
        let constant = HermiteSeries::new(vec![2.0]);
        assert!(constant
            .number_operator_pow(1.0)
            .coeffs()
            .iter()
            .all(|&c| c == 0.0));
        // pseudo-inverse then number operator is the identity on the centred part
        let s = HermiteSeries::new(vec![0.0, 0.7, -0.2, 0.1]);
        let roundtrip = s.number_operator_pow(-1.0).number_operator_pow(1.0);
        for q in 0..=3 {
            assert_abs_diff_eq!(roundtrip.coeff(q), s.coeff(q), epsilon = 1e-15);
        }
    }

    #[test]
    fn sobolev_norms() {
        let h2 = HermiteSeries::pure(2);
        assert_abs_diff_eq!(h2.sobolev_norm_k2(0), 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(h2.sobolev_norm_k2(1), 6.0, epsilon = 1e-12);
        let zero = HermiteSeries::zero(4);
        assert_eq!(zero.sobolev_norm_k2(3), 0.0);
    }

    #[test]
    fn series_json_round_trip() {
        let s = HermiteSeries::new(vec![0.0, 1.0, 0.5]);
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.contains("\"max_degree\":2"));
        let back: HermiteSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        let bad = r#"{"max_degree": 3, "coeffs": [0.0, 1.0]}"#;
        assert!(serde_json::from_str::<HermiteSeries>(bad).is_err());
    }

    #[test]
    fn quadrature_divergence_flagged() {
        // integrand growing like e^{0.3x²} cannot stabilise on few nodes
        let result = extract_coefficients(|x: f64| (0.3 * x * x).exp(), 4, 16);
        assert!(matches!(result, Err(Error::QuadratureDivergence { .. })));
    }
}
