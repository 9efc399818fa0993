//! Checks of the coefficient identities and corona mode structure.
//!
//! Each record compares an expected value derived from structural counts
//! ([`CoeffStats`]) or a closed formula against a value read off the
//! polynomial under test. Identities whose hypotheses fail are recorded as
//! [`CheckStatus::Skipped`] so they are never mistaken for verified ones.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::count::{CountError, Counter, Method};
use crate::graph::{CoeffStats, Graph};
use crate::poly::DomPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(BigInt),
    Bool(bool),
    Ints(Vec<BigInt>),
}

impl Value {
    fn int<T: Into<BigInt>>(v: T) -> Value {
        Value::Int(v.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The identity's hypothesis does not hold for this input.
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: &'static str,
    pub expected: Option<Value>,
    pub observed: Option<Value>,
    pub status: CheckStatus,
    pub note: String,
}

impl CheckRecord {
    fn compare(name: &'static str, expected: Value, observed: Value) -> CheckRecord {
        let status = if expected == observed {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        CheckRecord {
            name,
            expected: Some(expected),
            observed: Some(observed),
            status,
            note: String::new(),
        }
    }

    fn skipped(name: &'static str, why: &str) -> CheckRecord {
        CheckRecord {
            name,
            expected: None,
            observed: None,
            status: CheckStatus::Skipped,
            note: why.to_string(),
        }
    }

    fn with_note(mut self, note: String) -> CheckRecord {
        self.note = note;
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub id: String,
    pub records: Vec<CheckRecord>,
}

impl VerifyReport {
    pub fn new(id: impl Into<String>) -> VerifyReport {
        VerifyReport {
            id: id.into(),
            records: Vec::new(),
        }
    }

    /// No record failed. Skipped records do not count against the report.
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status != CheckStatus::Fail)
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records
            .iter()
            .filter(|r| r.status == CheckStatus::Fail)
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.records.extend(other.records);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("graph has {graph} vertices but statistics describe {stats}")]
    OrderMismatch { graph: usize, stats: usize },
}

fn choose2(n: usize) -> BigInt {
    BigInt::from(n) * BigInt::from(n.saturating_sub(1)) / 2
}

fn coeff(p: &DomPoly, i: usize) -> BigInt {
    BigInt::from(p.coeff(i))
}

/// Every coefficient identity for one graph and its polynomial.
pub fn verify_coefficients(
    g: &Graph,
    p: &DomPoly,
    st: &CoeffStats,
) -> Result<VerifyReport, VerifyError> {
    let n = g.n();
    if st.n != n {
        return Err(VerifyError::OrderMismatch {
            graph: n,
            stats: st.n,
        });
    }
    let mut report = VerifyReport::new("");
    let rec = &mut report.records;
    let nonempty = n >= 1;
    let connected = g.is_connected();

    rec.push(CheckRecord::compare(
        "degree_equals_order",
        Value::int(n),
        Value::int(p.degree().unwrap_or(0)),
    ));

    if connected && nonempty {
        rec.push(CheckRecord::compare(
            "connected_top_coefficient",
            Value::int(1),
            Value::Int(coeff(p, n)),
        ));
    } else {
        rec.push(CheckRecord::skipped(
            "connected_top_coefficient",
            "graph is disconnected or empty",
        ));
    }
    // K1 is connected but its only dominating set has size 1 = n
    if connected && n >= 2 {
        rec.push(CheckRecord::compare(
            "connected_second_coefficient",
            Value::int(n),
            Value::Int(coeff(p, n - 1)),
        ));
    } else {
        rec.push(CheckRecord::skipped(
            "connected_second_coefficient",
            "needs a connected graph on at least 2 vertices",
        ));
    }

    if !nonempty {
        for name in [
            "support_is_gamma_to_n",
            "no_constant_term",
            "strictly_increasing_on_nonnegatives",
            "zero_root_multiplicity",
            "isolated_vertices",
            "universal_vertices",
        ] {
            rec.push(CheckRecord::skipped(name, "graph has no vertices"));
        }
    } else {
        let coeffs = p.coeffs();
        let support_ok = coeffs.len() == n + 1
            && coeffs
                .iter()
                .enumerate()
                .all(|(i, c)| c.is_zero() == (i < st.gamma));
        rec.push(CheckRecord::compare(
            "support_is_gamma_to_n",
            Value::Bool(true),
            Value::Bool(support_ok),
        ));

        rec.push(CheckRecord::compare(
            "no_constant_term",
            Value::int(0),
            Value::Int(coeff(p, 0)),
        ));

        let has_positive_power = coeffs.iter().skip(1).any(|c| !c.is_zero());
        let samples: Vec<BigInt> = (0..=n as i64 + 1).map(|x| p.eval_i64(x)).collect();
        let increasing = has_positive_power && samples.windows(2).all(|w| w[0] < w[1]);
        rec.push(CheckRecord::compare(
            "strictly_increasing_on_nonnegatives",
            Value::Bool(true),
            Value::Bool(increasing),
        ));

        rec.push(CheckRecord::compare(
            "zero_root_multiplicity",
            Value::int(st.gamma),
            Value::int(p.min_degree().unwrap_or(0)),
        ));

        rec.push(CheckRecord::compare(
            "isolated_vertices",
            Value::int(st.r),
            Value::Int(BigInt::from(n) - coeff(p, n - 1)),
        ));

        rec.push(CheckRecord::compare(
            "universal_vertices",
            Value::int(st.universal),
            Value::Int(coeff(p, 1)),
        ));
    }

    if n >= 2 {
        let (t, s, r) = (BigInt::from(st.t), BigInt::from(st.s), BigInt::from(st.r));
        let expected = choose2(n) - &t + s - &r * BigInt::from(n - 1) + choose2(st.r);
        rec.push(CheckRecord::compare(
            "size_n_minus_2",
            Value::Int(expected),
            Value::Int(coeff(p, n - 2)),
        ));

        if st.r == 0 && !p.eval_i64(-2).is_zero() {
            rec.push(CheckRecord::compare(
                "degree_one_vertices",
                Value::Int(t),
                Value::Int(choose2(n) - coeff(p, n - 2)),
            ));
        } else {
            rec.push(CheckRecord::skipped(
                "degree_one_vertices",
                "needs no isolated vertices and D(G,-2) != 0",
            ));
        }
    } else {
        rec.push(CheckRecord::skipped(
            "size_n_minus_2",
            "needs at least 2 vertices",
        ));
        rec.push(CheckRecord::skipped(
            "degree_one_vertices",
            "needs at least 2 vertices",
        ));
    }

    Ok(report)
}

/// `d(G,i) <= d(G,i+1)` for every `0 <= i < n/2`.
pub fn verify_monotone(p: &DomPoly, n: usize) -> CheckRecord {
    let violation = (0..n.div_ceil(2)).find(|&i| p.coeff(i) > p.coeff(i + 1));
    let record = CheckRecord::compare(
        "monotone_lower_half",
        Value::Bool(true),
        Value::Bool(violation.is_none()),
    );
    match violation {
        Some(i) => record.with_note(format!("d({i}) > d({})", i + 1)),
        None => record,
    }
}

/// A `K_2` component makes `x^2 + 2x` a factor, which vanishes at `-2`.
pub fn verify_k2_vanishing(p: &DomPoly, st: &CoeffStats) -> CheckRecord {
    if st.s == 0 {
        return CheckRecord::skipped("k2_component_vanishing", "no K2 component");
    }
    CheckRecord::compare(
        "k2_component_vanishing",
        Value::int(0),
        Value::Int(p.eval_i64(-2)),
    )
}

/// Degrees holding the maximum coefficient of `x^n (x+2)^n`, by residue of
/// `n` mod 3.
pub fn corona_mode_degrees(n: usize) -> Vec<usize> {
    let k = n / 3;
    match n % 3 {
        0 => vec![4 * k],
        1 => vec![4 * k + 1],
        _ => vec![4 * k + 2, 4 * k + 3],
    }
}

/// `C(n, m-n) 2^(2n-m)` for `m` in `n..=2n`.
pub fn corona_coefficients_by_formula(n: usize) -> Vec<BigInt> {
    let mut binom = BigUint::one();
    let mut out = Vec::with_capacity(n + 1);
    for j in 0..=n {
        if j > 0 {
            binom = binom * BigUint::from(n - j + 1) / BigUint::from(j);
        }
        out.push(BigInt::from(&binom << (n - j)));
    }
    out
}

/// Mode structure of `x^n (x+2)^n`: strict rise to the mode, strict fall
/// after it, a double mode exactly when `n = 2 mod 3`, and endpoints `2^n`
/// and `1`.
///
/// The observed side is the expansion `(x (x+2))^n` by repeated
/// multiplication; the expected side is the binomial formula and the
/// residue rule.
pub fn verify_corona_modes(n: usize) -> VerifyReport {
    let mut report = VerifyReport::new(format!("corona_k1 order {n}"));
    let expansion = core::iter::repeat_n(DomPoly::from_u64s(&[0, 2, 1]), n).product::<DomPoly>();
    let observed: Vec<BigInt> = (n..=2 * n).map(|m| coeff(&expansion, m)).collect();
    let below_zero = (0..n).all(|m| expansion.coeff(m).is_zero());

    report.records.push(CheckRecord::compare(
        "corona_coefficients",
        Value::Ints(corona_coefficients_by_formula(n)),
        Value::Ints(observed.clone()),
    ));
    report.records.push(CheckRecord::compare(
        "corona_no_terms_below_n",
        Value::Bool(true),
        Value::Bool(below_zero),
    ));

    let expected_modes = corona_mode_degrees(n);
    let observed_modes = expansion
        .analyze_modes()
        .map(|m| m.modes)
        .unwrap_or_default();
    let as_ints = |v: &[usize]| Value::Ints(v.iter().map(|&d| BigInt::from(d)).collect());
    report.records.push(CheckRecord::compare(
        "corona_modes",
        as_ints(&expected_modes),
        as_ints(&observed_modes),
    ));

    let first = expected_modes[0] - n;
    let last = expected_modes[expected_modes.len() - 1] - n;
    let rising = observed[..=first].windows(2).all(|w| w[0] < w[1]);
    let flat = observed[first..=last].windows(2).all(|w| w[0] == w[1]);
    let falling = observed[last..].windows(2).all(|w| w[0] > w[1]);
    report.records.push(CheckRecord::compare(
        "corona_strict_shape",
        Value::Bool(true),
        Value::Bool(rising && flat && falling),
    ));

    report.records.push(CheckRecord::compare(
        "corona_endpoints",
        Value::Ints(vec![BigInt::one() << n, BigInt::one()]),
        Value::Ints(vec![observed[0].clone(), observed[n].clone()]),
    ));
    report
}

/// `γ(G ∘ K_1)` equals the order of `G`.
pub fn verify_corona_gamma(st: &CoeffStats, base_order: usize) -> CheckRecord {
    CheckRecord::compare(
        "corona_domination_number",
        Value::int(base_order),
        Value::int(st.gamma),
    )
}

/// Two independently computed polynomials of the same graph must agree.
pub fn verify_agreement(name: &'static str, left: &DomPoly, right: &DomPoly) -> CheckRecord {
    let ints =
        |p: &DomPoly| Value::Ints(p.coeffs().iter().map(|c| BigInt::from(c.clone())).collect());
    CheckRecord::compare(name, ints(left), ints(right))
}

/// Coefficient identities, the lower-half monotonicity and the `K_2`
/// vanishing check for one graph.
pub fn verify_graph(g: &Graph, p: &DomPoly, st: &CoeffStats) -> Result<VerifyReport, VerifyError> {
    let mut report = verify_coefficients(g, p, st)?;
    report.records.push(verify_monotone(p, g.n()));
    report.records.push(verify_k2_vanishing(p, st));
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub label: String,
    pub poly: DomPoly,
}

/// Result of a unimodality scan. Non-unimodal polynomials are collected,
/// never treated as errors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub checked: u64,
    pub not_log_concave: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl ScanSummary {
    /// Commutative merge; counterexamples are kept sorted by label.
    pub fn merge(&mut self, other: ScanSummary) {
        self.checked += other.checked;
        self.not_log_concave += other.not_log_concave;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort_by(|a, b| {
            a.label
                .cmp(&b.label)
                .then_with(|| a.poly.coeffs().cmp(b.poly.coeffs()))
        });
    }

    /// Adds one polynomial to the tally. The empty graph's constant `1` is
    /// trivially unimodal.
    pub fn record(&mut self, label: &str, p: &DomPoly) {
        self.checked += 1;
        let Ok(modes) = p.analyze_modes() else {
            return;
        };
        if !modes.is_log_concave {
            self.not_log_concave += 1;
        }
        if !modes.is_unimodal {
            self.counterexamples.push(Counterexample {
                label: label.to_string(),
                poly: p.clone(),
            });
        }
    }
}

/// Computes the polynomial of every labelled graph and reports the ones
/// whose coefficient sequence is not unimodal.
pub fn scan_unimodality<'a, I, C>(
    corpus: I,
    counter: &C,
    method: Method,
) -> Result<ScanSummary, CountError>
where
    I: IntoIterator<Item = (String, &'a Graph)>,
    C: Counter + ?Sized,
{
    let mut summary = ScanSummary::default();
    for (label, g) in corpus {
        let p = counter.count(g, method)?;
        summary.record(&label, &p);
    }
    Ok(summary)
}
