//! Executable verification of the counting identities.
//!
//! Each numbered claim becomes a function producing an [`IdentityReport`]
//! with exact big-integer sides; a sweep driver runs whole parameter grids
//! with a feasibility budget. Every left-hand side is obtained by brute
//! enumeration and every right-hand side by closed form or an independent
//! route, so a mismatch is a counterexample, never a tautology.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{CheckedSub, Zero};
use serde::{Serialize, Serializer};

use crate::bijection::{phi, psi};
use crate::enumerate::{
    count_kary_peak_paths, count_sud, count_super, count_suu, enumerate_colored, enumerate_paths,
    enumerate_restricted, enumerate_super, total_statistic, up_free_super_exists, ColoredHumpPath,
    StatisticKind, SuperSubset,
};
use crate::path::{HorizontalWidth, LatticePath, PathParams, StepKind};

/// The verifiable claims, named after the statements they check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ClaimId {
    /// Hump identity: `(k+1) * total humps = |SP_n| - delta_{a|n}`.
    Eq4,
    /// Peak identity: `(k+1) * total peaks = |SP_n| - |SP_{n-a}|`.
    Eq5,
    /// Image of phi over hump-colored paths is exactly S'.
    Eq6,
    /// Image of phi over peak-colored paths is exactly S''.
    Eq7,
    /// A hump with run `l` maps to a word with exactly `l` leading H's.
    Thm1,
    /// Closed form for super k-ary paths starting UU, by peak count.
    C1,
    /// Closed form for super k-ary paths starting UD, by peak count.
    C2,
    /// Closed form for nonnegative k-ary paths by peak count.
    Narayana,
    /// `psi . phi` and `phi . psi` are identities, pointwise.
    Roundtrip,
}

impl ClaimId {
    pub const ALL: [ClaimId; 9] = [
        ClaimId::Eq4,
        ClaimId::Eq5,
        ClaimId::Eq6,
        ClaimId::Eq7,
        ClaimId::Thm1,
        ClaimId::C1,
        ClaimId::C2,
        ClaimId::Narayana,
        ClaimId::Roundtrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Eq4 => "EQ4",
            ClaimId::Eq5 => "EQ5",
            ClaimId::Eq6 => "EQ6",
            ClaimId::Eq7 => "EQ7",
            ClaimId::Thm1 => "THM1",
            ClaimId::C1 => "C1",
            ClaimId::C2 => "C2",
            ClaimId::Narayana => "NARAYANA",
            ClaimId::Roundtrip => "ROUNDTRIP",
        }
    }

    /// Claims parameterized by (n, k, m) instead of (n, k, a).
    pub fn is_peak_count_claim(self) -> bool {
        matches!(self, ClaimId::C1 | ClaimId::C2 | ClaimId::Narayana)
    }
}

impl std::str::FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown claim '{s}'"))
    }
}

fn serialize_big<S: Serializer>(value: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

/// Outcome of one verification cell. `verified` iff `lhs == rhs`; a witness
/// is attached exactly when verification failed and carries enough to replay
/// the failure through the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub claim: ClaimId,
    pub n: u64,
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<HorizontalWidth>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(serialize_with = "serialize_big")]
    pub lhs: BigUint,
    #[serde(serialize_with = "serialize_big")]
    pub rhs: BigUint,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl IdentityReport {
    fn grid(claim: ClaimId, n: u64, params: PathParams, lhs: BigUint, rhs: BigUint) -> Self {
        let verified = lhs == rhs;
        IdentityReport {
            claim,
            n,
            k: params.k,
            a: Some(params.a),
            m: None,
            witness: (!verified).then(|| format!("cell k={} a={} n={}", params.k, params.a, n)),
            lhs,
            rhs,
            verified,
        }
    }

    fn peak_cell(claim: ClaimId, n: u64, k: u32, m: u64, lhs: BigUint, rhs: BigUint) -> Self {
        let verified = lhs == rhs;
        IdentityReport {
            claim,
            n,
            k,
            a: None,
            m: Some(m),
            witness: (!verified).then(|| format!("cell k={k} n={n} m={m}")),
            lhs,
            rhs,
            verified,
        }
    }

    fn with_witness(mut self, witness: Option<String>) -> Self {
        if witness.is_some() {
            self.verified = false;
            self.witness = witness;
        }
        self
    }

    /// Canonical ordering for deterministic sweep output.
    pub fn sort_key(&self) -> (ClaimId, u64, u32, Option<HorizontalWidth>, Option<u64>) {
        (self.claim, self.n, self.k, self.a, self.m)
    }
}

fn colored_witness(cp: &ColoredHumpPath, note: &str) -> String {
    format!(
        r#"{{"path":{},"hump_up_index":{},"color":{},"note":"{}"}}"#,
        serde_json::to_string(cp.path()).expect("path serializes"),
        cp.hump().up_index,
        cp.color(),
        note
    )
}

fn path_witness(path: &LatticePath, note: &str) -> String {
    format!(
        r#"{{"path":{},"note":"{}"}}"#,
        serde_json::to_string(path).expect("path serializes"),
        note
    )
}

// ---------------------------------------------------------------------------
// Grid claims (n, k, a)
// ---------------------------------------------------------------------------

/// `(k+1) * total humps = |SP_n(k,a)| - delta_{a|n}`.
pub fn verify_hump_identity(n: u64, params: PathParams) -> IdentityReport {
    let lhs = BigUint::from(params.k + 1) * total_statistic(n, params, StatisticKind::Hump);
    let delta = if up_free_super_exists(n, params) {
        1u32
    } else {
        0
    };
    let rhs = count_super(n as i64, params) - BigUint::from(delta);
    IdentityReport::grid(ClaimId::Eq4, n, params, lhs, rhs)
}

/// `(k+1) * total peaks = |SP_n(k,a)| - |SP_{n-a}(k,a)|`.
///
/// Holds for n >= 1. At n = 0 the report is honestly unverified: the empty
/// path is a super path without leading horizontals, so the right-hand side
/// is 1 while no peak exists to color.
pub fn verify_peak_identity(n: u64, params: PathParams) -> IdentityReport {
    let lhs = BigUint::from(params.k + 1) * total_statistic(n, params, StatisticKind::Peak);
    let shifted = match params.a {
        HorizontalWidth::Finite(a) => count_super(n as i64 - i64::from(a), params),
        HorizontalWidth::Infinite => BigUint::zero(),
    };
    match count_super(n as i64, params).checked_sub(&shifted) {
        Some(rhs) => IdentityReport::grid(ClaimId::Eq5, n, params, lhs, rhs),
        None => IdentityReport::grid(ClaimId::Eq5, n, params, lhs, BigUint::zero())
            .with_witness(Some("right-hand side is negative".into())),
    }
}

fn image_report(claim: ClaimId, n: u64, params: PathParams, mode: StatisticKind) -> IdentityReport {
    let subset = match claim {
        ClaimId::Eq6 => SuperSubset::WithUpStep,
        _ => SuperSubset::NoLeadingHorizontal,
    };
    let target: BTreeSet<Vec<StepKind>> = enumerate_restricted(n, params, subset)
        .map(|p| p.steps().to_vec())
        .collect();
    let mut image: BTreeSet<Vec<StepKind>> = BTreeSet::new();
    let mut witness = None;
    for cp in enumerate_colored(n, params, mode) {
        match phi(&cp) {
            Ok(mapped) => {
                if target.contains(mapped.steps()) {
                    image.insert(mapped.steps().to_vec());
                } else if witness.is_none() {
                    witness = Some(colored_witness(&cp, "phi image outside target family"));
                }
            }
            Err(err) => {
                if witness.is_none() {
                    witness = Some(colored_witness(&cp, &format!("phi failed: {err}")));
                }
            }
        }
    }
    if witness.is_none() && image != target {
        let missing = target.difference(&image).next().cloned();
        if let Some(word) = missing {
            let path = LatticePath::new(params, word).expect("target word is valid");
            witness = Some(path_witness(&path, "family member not reached by phi"));
        }
    }
    let lhs = BigUint::from(image.len());
    let rhs = BigUint::from(target.len());
    let report = IdentityReport::grid(claim, n, params, lhs, rhs);
    report.with_witness(witness)
}

/// Image of phi over all hump-colored paths equals S' as a set.
pub fn verify_image_hump(n: u64, params: PathParams) -> IdentityReport {
    image_report(ClaimId::Eq6, n, params, StatisticKind::Hump)
}

/// Image of phi over all peak-colored paths equals S'' as a set.
pub fn verify_image_peak(n: u64, params: PathParams) -> IdentityReport {
    image_report(ClaimId::Eq7, n, params, StatisticKind::Peak)
}

/// `psi . phi = id` on colored paths and `phi . psi = id` on S', pointwise.
pub fn verify_bijection(n: u64, params: PathParams) -> IdentityReport {
    let mut passed: u64 = 0;
    let mut total: u64 = 0;
    let mut witness = None;

    for cp in enumerate_colored(n, params, StatisticKind::Hump) {
        total += 1;
        let ok = match phi(&cp).and_then(|image| psi(&image)) {
            Ok(back) => back == cp,
            Err(err) => {
                if witness.is_none() {
                    witness = Some(colored_witness(&cp, &format!("round trip failed: {err}")));
                }
                false
            }
        };
        if ok {
            passed += 1;
        } else if witness.is_none() {
            witness = Some(colored_witness(&cp, "psi(phi(cp)) != cp"));
        }
    }
    for sp in enumerate_restricted(n, params, SuperSubset::WithUpStep) {
        total += 1;
        let ok = match psi(&sp).and_then(|cp| phi(&cp)) {
            Ok(back) => back == sp,
            Err(err) => {
                if witness.is_none() {
                    witness = Some(path_witness(&sp, &format!("round trip failed: {err}")));
                }
                false
            }
        };
        if ok {
            passed += 1;
        } else if witness.is_none() {
            witness = Some(path_witness(&sp, "phi(psi(q)) != q"));
        }
    }

    IdentityReport::grid(
        ClaimId::Roundtrip,
        n,
        params,
        BigUint::from(passed),
        BigUint::from(total),
    )
    .with_witness(witness)
}

/// Every hump colored with run `l` maps to a word with exactly `l` leading
/// horizontal steps.
pub fn verify_theorem1_refinement(n: u64, params: PathParams) -> IdentityReport {
    let mut passed: u64 = 0;
    let mut total: u64 = 0;
    let mut witness = None;
    for cp in enumerate_colored(n, params, StatisticKind::Hump) {
        total += 1;
        let ok = match phi(&cp) {
            Ok(image) => {
                let leading = image
                    .steps()
                    .iter()
                    .take_while(|&&s| s == StepKind::Horizontal)
                    .count();
                leading == cp.hump().run
            }
            Err(_) => false,
        };
        if ok {
            passed += 1;
        } else if witness.is_none() {
            witness = Some(colored_witness(&cp, "leading horizontal count != hump run"));
        }
    }
    IdentityReport::grid(
        ClaimId::Thm1,
        n,
        params,
        BigUint::from(passed),
        BigUint::from(total),
    )
    .with_witness(witness)
}

// ---------------------------------------------------------------------------
// Peak-count claims (n, k, m)
// ---------------------------------------------------------------------------

fn kary(k: u32) -> PathParams {
    PathParams::new(k, HorizontalWidth::Infinite).expect("k >= 1")
}

/// Brute-force census of super k-ary paths with `n` up steps and `m` peaks
/// whose word starts with the given two letters.
fn census_super_kary_prefix(n: u64, k: u32, m: u64, prefix: [StepKind; 2]) -> BigUint {
    let order = (u64::from(k) + 1) * n;
    let count = enumerate_super(order, kary(k))
        .filter(|p| {
            p.steps().len() >= 2
                && p.steps()[0] == prefix[0]
                && p.steps()[1] == prefix[1]
                && p.peaks().len() as u64 == m
        })
        .count();
    BigUint::from(count)
}

/// Brute force vs `C(n-1, m) * C(kn-1, m-1)` for paths starting `UU`.
pub fn verify_suu(n: u64, k: u32, m: u64) -> IdentityReport {
    let lhs = census_super_kary_prefix(n, k, m, [StepKind::Up, StepKind::Up]);
    IdentityReport::peak_cell(ClaimId::C1, n, k, m, lhs, count_suu(n, k, m))
}

/// Brute force vs `C(n-1, m-1) * C(kn-1, m-1)` for paths starting `UD`.
pub fn verify_sud(n: u64, k: u32, m: u64) -> IdentityReport {
    let lhs = census_super_kary_prefix(n, k, m, [StepKind::Up, StepKind::Down]);
    IdentityReport::peak_cell(ClaimId::C2, n, k, m, lhs, count_sud(n, k, m))
}

/// Brute-force peak census of nonnegative k-ary paths vs
/// `(1/n) C(n, m) C(kn, m-1)`.
pub fn verify_kary_peaks(n: u64, k: u32, m: u64) -> IdentityReport {
    let order = (u64::from(k) + 1) * n;
    let lhs = BigUint::from(
        enumerate_paths(order, kary(k))
            .filter(|p| p.peaks().len() as u64 == m)
            .count(),
    );
    match count_kary_peak_paths(n, k, m) {
        Ok(rhs) => IdentityReport::peak_cell(ClaimId::Narayana, n, k, m, lhs, rhs),
        Err(err) => IdentityReport::peak_cell(ClaimId::Narayana, n, k, m, lhs, BigUint::zero())
            .with_witness(Some(err.to_string())),
    }
}

/// Both lemma closed forms for `m = 1..=m_max`.
pub fn verify_lemma_counts(n: u64, k: u32, m_max: u64) -> Vec<IdentityReport> {
    let mut reports = Vec::new();
    for m in 1..=m_max {
        reports.push(verify_suu(n, k, m));
    }
    for m in 1..=m_max {
        reports.push(verify_sud(n, k, m));
    }
    reports
}

/// The Narayana specialization: `k = 1`, all `m = 1..=n` for `n = 1..=n_max`.
pub fn verify_narayana(n_max: u64) -> Vec<IdentityReport> {
    let mut reports = Vec::new();
    for n in 1..=n_max {
        for m in 1..=n {
            reports.push(verify_kary_peaks(n, 1, m));
        }
    }
    reports
}

// ---------------------------------------------------------------------------
// Grid sweep
// ---------------------------------------------------------------------------

/// A verification sweep: claims crossed with parameter lists. Cells whose
/// super-path universe exceeds `budget` words are skipped, not failed.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub claims: Vec<ClaimId>,
    pub ks: Vec<u32>,
    pub widths: Vec<HorizontalWidth>,
    pub orders: Vec<u64>,
    pub budget: u64,
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    /// Reports sorted by (claim, n, k, a, m).
    pub reports: Vec<IdentityReport>,
    pub skipped_cells: u64,
}

impl SweepOutcome {
    pub fn all_verified(&self) -> bool {
        self.reports.iter().all(|r| r.verified)
    }
}

pub fn sweep(config: &SweepConfig) -> SweepOutcome {
    let budget = BigUint::from(config.budget);
    let mut reports = Vec::new();
    let mut skipped = 0u64;

    for &claim in &config.claims {
        if claim.is_peak_count_claim() {
            for &k in &config.ks {
                for &n in config.orders.iter().filter(|&&n| n >= 1) {
                    let order = (u64::from(k) + 1) * n;
                    if count_super(order as i64, kary(k)) > budget {
                        skipped += n; // one cell per m
                        continue;
                    }
                    for m in 1..=n {
                        reports.push(match claim {
                            ClaimId::C1 => verify_suu(n, k, m),
                            ClaimId::C2 => verify_sud(n, k, m),
                            _ => verify_kary_peaks(n, k, m),
                        });
                    }
                }
            }
        } else {
            for &k in &config.ks {
                for &a in &config.widths {
                    let params = match PathParams::new(k, a) {
                        Ok(p) => p,
                        Err(_) => continue,
                    };
                    for &n in &config.orders {
                        if count_super(n as i64, params) > budget {
                            skipped += 1;
                            continue;
                        }
                        reports.push(match claim {
                            ClaimId::Eq4 => verify_hump_identity(n, params),
                            ClaimId::Eq5 => verify_peak_identity(n, params),
                            ClaimId::Eq6 => verify_image_hump(n, params),
                            ClaimId::Eq7 => verify_image_peak(n, params),
                            ClaimId::Thm1 => verify_theorem1_refinement(n, params),
                            _ => verify_bijection(n, params),
                        });
                    }
                }
            }
        }
    }

    reports.sort_by_key(IdentityReport::sort_key);
    SweepOutcome {
        reports,
        skipped_cells: skipped,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(k: u32, a: u32) -> PathParams {
        PathParams::new(k, HorizontalWidth::Finite(a)).unwrap()
    }

    #[test]
    fn hump_identity_small_cells() {
        let r = verify_hump_identity(3, params(1, 1));
        assert_eq!(r.lhs, BigUint::from(6u32));
        assert_eq!(r.rhs, BigUint::from(6u32));
        assert!(r.verified && r.witness.is_none());

        let r = verify_hump_identity(2, params(1, 1));
        assert_eq!(r.lhs, BigUint::from(2u32));
        assert!(r.verified);

        let r = verify_hump_identity(0, params(2, 3));
        assert_eq!(r.lhs, BigUint::zero());
        assert_eq!(r.rhs, BigUint::zero());
        assert!(r.verified);
    }

    #[test]
    fn peak_identity_small_cells() {
        let r = verify_peak_identity(3, params(1, 1));
        assert_eq!(r.lhs, BigUint::from(4u32));
        assert_eq!(r.rhs, BigUint::from(4u32));

        let dyck = PathParams::new(1, HorizontalWidth::Infinite).unwrap();
        let r = verify_peak_identity(2, dyck);
        assert_eq!(r.lhs, BigUint::from(2u32));
        assert_eq!(r.rhs, BigUint::from(2u32));

        let r = verify_peak_identity(1, params(1, 2));
        assert_eq!(r.lhs, BigUint::zero());
        assert_eq!(r.rhs, BigUint::zero());
    }

    #[test]
    fn bijection_reports_verify() {
        for n in 0..=6 {
            for p in [params(1, 1), params(2, 2)] {
                assert!(verify_bijection(n, p).verified, "n={n} {p}");
                assert!(verify_image_hump(n, p).verified, "n={n} {p}");
                if n >= 1 {
                    assert!(verify_image_peak(n, p).verified, "n={n} {p}");
                }
                assert!(verify_theorem1_refinement(n, p).verified, "n={n} {p}");
            }
        }
    }

    #[test]
    fn peak_claims_degenerate_at_order_zero() {
        // At n = 0 the empty path lies in S'' but carries no up step, so the
        // peak-side identities genuinely fail there: lhs 0 against rhs 1.
        // Their domain is n >= 1; the reports stay honest about it.
        for p in [params(1, 1), params(2, 2)] {
            let r = verify_peak_identity(0, p);
            assert_eq!(
                (r.lhs.clone(), r.rhs.clone()),
                (BigUint::zero(), BigUint::from(1u32))
            );
            assert!(!r.verified && r.witness.is_some());

            let r = verify_image_peak(0, p);
            assert_eq!(
                (r.lhs.clone(), r.rhs.clone()),
                (BigUint::zero(), BigUint::from(1u32))
            );
            assert!(!r.verified && r.witness.is_some());
        }
    }

    #[test]
    fn image_peak_counts_kary() {
        // With no horizontal steps S'' is all of SP.
        let p = PathParams::new(2, HorizontalWidth::Infinite).unwrap();
        let r = verify_image_peak(6, p);
        assert_eq!(r.lhs, BigUint::from(15u32));
        assert_eq!(r.rhs, BigUint::from(15u32));
        assert!(r.verified);
    }

    #[test]
    fn lemma_cells() {
        let r = verify_suu(2, 1, 1);
        assert_eq!(r.lhs, BigUint::from(1u32));
        assert!(r.verified);
        let r = verify_sud(2, 1, 2);
        assert_eq!(r.lhs, BigUint::from(1u32));
        assert!(r.verified);
        let r = verify_sud(1, 2, 1);
        assert_eq!(r.lhs, BigUint::from(1u32));
        assert!(r.verified);
        for rep in verify_lemma_counts(4, 2, 4) {
            assert!(rep.verified, "{rep:?}");
        }
    }

    #[test]
    fn narayana_cells() {
        assert!(verify_narayana(6).iter().all(|r| r.verified));
        let r = verify_kary_peaks(3, 1, 2);
        assert_eq!(r.lhs, BigUint::from(3u32));
    }

    #[test]
    fn report_json_is_stable() {
        let r = verify_hump_identity(3, params(1, 1));
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"claim":"EQ4","n":3,"k":1,"a":1,"lhs":"6","rhs":"6","verified":true}"#
        );
        let again = serde_json::to_string(&verify_hump_identity(3, params(1, 1))).unwrap();
        assert_eq!(json, again);
    }

    #[test]
    fn sweep_sorts_and_skips() {
        let config = SweepConfig {
            claims: vec![ClaimId::Eq5, ClaimId::Eq4],
            ks: vec![1],
            widths: vec![HorizontalWidth::Finite(1)],
            orders: vec![1, 2, 3],
            budget: 6,
        };
        let outcome = sweep(&config);
        // |SP_3(1,1)| = 7 > 6 is skipped for both claims.
        assert_eq!(outcome.skipped_cells, 2);
        assert!(outcome.all_verified());
        let keys: Vec<_> = outcome.reports.iter().map(|r| (r.claim, r.n)).collect();
        assert_eq!(
            keys,
            vec![
                (ClaimId::Eq4, 1),
                (ClaimId::Eq4, 2),
                (ClaimId::Eq5, 1),
                (ClaimId::Eq5, 2)
            ]
        );
    }
}
