//! The hump-coloring bijection.
//!
//! `phi` sends a closed nonnegative path with one hump colored by
//! `c in 1..=k+1` to a super path with at least one up step; `psi` inverts
//! it. Both directions work through a unique decomposition around the
//! distinguished hump (forward) or around the leftmost axis-crossing up step
//! (backward). Every structural fact the decompositions rely on is checked
//! at runtime and reported as [`BijectionError::StructureViolation`]; such a
//! failure indicates a bug, not bad input.

use std::ops::Range;

use thiserror::Error;

use crate::enumerate::{ColoredHumpPath, MalformedColoredPath};
use crate::path::{is_closed_nonnegative_segment, Hump, LatticePath, LatticePoint, StepKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error(transparent)]
    MalformedColoredPath(#[from] MalformedColoredPath),
    /// The input to `psi` has no up step (it lies outside S').
    #[error("super path has no up step")]
    NoUpStep,
    /// The input to `psi` does not end on the x-axis.
    #[error("path is not closed")]
    NotClosed,
    /// A structural fact guaranteed by the decomposition proofs failed.
    #[error("decomposition structure violated: {0}")]
    StructureViolation(String),
}

fn violation(msg: impl Into<String>) -> BijectionError {
    BijectionError::StructureViolation(msg.into())
}

/// Which assembly pattern `phi` uses, determined by the color: `c = 1` is
/// case I, `c = k+1` case II, anything in between case III.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    I,
    II,
    III,
}

impl CaseTag {
    pub fn label(self) -> &'static str {
        match self {
            CaseTag::I => "I",
            CaseTag::II => "II",
            CaseTag::III => "III",
        }
    }
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl serde::Serialize for CaseTag {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// Wire record of one mapping in either direction: the colored-path side is
/// described by `hump_up_index` and `color`, the super-path side by whichever
/// of `input`/`output` holds it.
#[derive(Debug, Clone, serde::Serialize)]
pub struct MappingRecord {
    pub input: LatticePath,
    pub hump_up_index: usize,
    pub color: u32,
    pub output: LatticePath,
    pub case: CaseTag,
}

pub fn case_of_color(color: u32, k: u32) -> CaseTag {
    if color == 1 {
        CaseTag::I
    } else if color == k + 1 {
        CaseTag::II
    } else {
        CaseTag::III
    }
}

// ---------------------------------------------------------------------------
// Forward decomposition: around the colored hump
// ---------------------------------------------------------------------------

/// The unique factorization of a colored path as
/// `R_1 P' p_l H^run d_1 R_2 d_2 ... R_k d_k P''`.
///
/// Segments are index ranges into the original step sequence;
/// `r_segments[i-1]` is `R_i`, with `R_1` sitting before `P'` and each later
/// `R_i` between `d_{i-1}` and `d_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HumpDecomposition {
    pub r_segments: Vec<Range<usize>>,
    pub p_prime: Range<usize>,
    pub pl_index: usize,
    pub run: usize,
    pub d_indices: Vec<usize>,
    pub p_dprime: Range<usize>,
    /// Starting point `(x1, h)` of the hump's up step.
    pub anchor: LatticePoint,
}

impl HumpDecomposition {
    pub fn r1(&self) -> Range<usize> {
        self.r_segments[0].clone()
    }
}

/// Decomposes a colored path around its distinguished hump.
pub fn decompose_colored(cp: &ColoredHumpPath) -> Result<HumpDecomposition, BijectionError> {
    let path = cp.path();
    let hump = cp.hump();
    let k = path.params().k as usize;
    let steps = path.steps();
    let profile = path.height_profile();
    let start_height = |i: usize| if i == 0 { 0 } else { profile[i - 1] };

    if steps.get(hump.up_index) != Some(&StepKind::Up) {
        return Err(MalformedColoredPath("hump up step missing".into()).into());
    }
    let h = start_height(hump.up_index);

    // d_1 closes the hump; d_i is the first later step descending from the
    // line y = h+k+1-i. Levels are crossed in order, so a single forward
    // scan finds them all.
    let mut d_indices = vec![hump.down_index];
    let mut prev = hump.down_index;
    for i in 2..=k {
        let level = h + k as i64 + 1 - i as i64;
        let found = (prev + 1..steps.len())
            .find(|&j| start_height(j) == level && profile[j] == level - 1)
            .ok_or_else(|| violation(format!("no d_{i} descending from y = {level}")))?;
        d_indices.push(found);
        prev = found;
    }
    debug_assert!(d_indices.iter().all(|&j| steps[j] == StepKind::Down));

    // Split the prefix before p_l at the last point on the x-axis.
    let (r1, p_prime) = if h == 0 {
        (0..hump.up_index, hump.up_index..hump.up_index)
    } else {
        let mut split = 0;
        for j in (0..hump.up_index).rev() {
            if profile[j] == 0 {
                split = j + 1;
                break;
            }
        }
        (0..split, split..hump.up_index)
    };

    if h > 0 {
        if p_prime.is_empty() || steps[p_prime.start] != StepKind::Up {
            return Err(violation("P' must start with an up step"));
        }
        if p_prime.clone().any(|j| profile[j] <= 0) {
            return Err(violation("P' must stay strictly above the x-axis"));
        }
    }

    let mut r_segments = Vec::with_capacity(k);
    r_segments.push(r1);
    for i in 2..=k {
        r_segments.push(d_indices[i - 2] + 1..d_indices[i - 1]);
    }
    for (i, seg) in r_segments.iter().enumerate() {
        if !is_closed_nonnegative_segment(&steps[seg.clone()], path.params().k) {
            return Err(violation(format!("R_{} is not a closed (k,a)-path", i + 1)));
        }
    }

    let p_dprime = d_indices[k - 1] + 1..steps.len();

    let dec = HumpDecomposition {
        r_segments,
        p_prime,
        pl_index: hump.up_index,
        run: hump.run,
        d_indices,
        p_dprime,
        anchor: path.start_of(hump.up_index),
    };

    // The pieces must tile the word exactly.
    let total = dec.r_segments.iter().map(Range::len).sum::<usize>()
        + dec.p_prime.len()
        + 1
        + dec.run
        + k
        + dec.p_dprime.len();
    if total != steps.len() {
        return Err(violation("decomposition does not tile the path"));
    }
    Ok(dec)
}

/// Maps a colored path to a super path with at least one up step.
///
/// The hump's horizontal run moves to the front of the word; the color
/// decides how many of the `R_i` flip over to hang below the axis.
pub fn phi(cp: &ColoredHumpPath) -> Result<LatticePath, BijectionError> {
    let dec = decompose_colored(cp)?;
    let path = cp.path();
    let steps = path.steps();
    let k = path.params().k;
    let c = cp.color();

    let mut out: Vec<StepKind> = Vec::with_capacity(steps.len());
    out.extend(std::iter::repeat_n(StepKind::Horizontal, dec.run));
    for i in 1..c as usize {
        out.push(StepKind::Down);
        out.extend(steps[dec.r_segments[i - 1].clone()].iter().rev());
    }
    out.push(StepKind::Up);
    for i in c as usize..=k as usize {
        out.extend_from_slice(&steps[dec.r_segments[i - 1].clone()]);
        out.push(StepKind::Down);
    }
    out.extend_from_slice(&steps[dec.p_dprime.clone()]);
    out.extend_from_slice(&steps[dec.p_prime.clone()]);

    let image = LatticePath::new(path.params(), out).expect("phi preserves the step alphabet");
    if image.len() != path.len() || !image.is_closed() {
        return Err(violation("phi image is not a closed path of equal length"));
    }
    Ok(image)
}

// ---------------------------------------------------------------------------
// Backward decomposition: around the leftmost axis-crossing up step
// ---------------------------------------------------------------------------

/// The unique factorization of a super path around `q_l`, the leftmost up
/// step that intersects the x-axis. `r_segments` hold the recovered `R_i`,
/// already un-reversed where the case stores them reversed in the word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperDecomposition {
    pub case: CaseTag,
    pub leading_h: usize,
    pub ql_index: usize,
    pub d_indices: Vec<usize>,
    pub r_segments: Vec<Vec<StepKind>>,
    pub q_prime: Range<usize>,
    pub q_dprime: Range<usize>,
    /// First return point right of `q_l`'s start.
    pub anchor_a: LatticePoint,
    /// Rightmost lowest point right of `q_l`'s start.
    pub anchor_b: LatticePoint,
    /// Height at which `q_l` starts (always <= 0).
    pub p: i64,
    /// Height at which `q_l` ends (`p + k`).
    pub q: i64,
}

/// Decomposes a member of S' per the case its `q_l` heights select.
pub fn decompose_super(path: &LatticePath) -> Result<SuperDecomposition, BijectionError> {
    if !path.is_closed() {
        return Err(BijectionError::NotClosed);
    }
    if path.up_count() == 0 {
        return Err(BijectionError::NoUpStep);
    }
    let ql = path
        .leftmost_crossing_up()
        .ok_or_else(|| violation("closed path with up steps has no axis-crossing up step"))?;

    let steps = path.steps();
    let k = path.params().k as usize;
    let profile = path.height_profile();
    let start_height = |i: usize| if i == 0 { 0 } else { profile[i - 1] };
    let p = start_height(ql);
    let q = profile[ql];
    debug_assert_eq!(q - p, path.params().k as i64);

    let case = if p == 0 {
        CaseTag::I
    } else if q == 0 {
        CaseTag::II
    } else {
        CaseTag::III
    };

    // How many d_i sit left of q_l (descents below the axis, stored with
    // their R_i reversed) versus right of it.
    let left_count = (-p) as usize;

    let mut d_indices = vec![0usize; k];
    for i in 1..=left_count {
        let level = -(i as i64) + 1;
        let found = (0..ql)
            .rev()
            .find(|&j| start_height(j) == level && profile[j] == level - 1)
            .ok_or_else(|| violation(format!("no d_{i} left of q_l from y = {level}")))?;
        d_indices[i - 1] = found;
    }
    let mut prev = ql;
    for i in left_count + 1..=k {
        let level = k as i64 + 1 - i as i64;
        let found = (prev + 1..steps.len())
            .find(|&j| start_height(j) == level && profile[j] == level - 1)
            .ok_or_else(|| violation(format!("no d_{i} right of q_l from y = {level}")))?;
        d_indices[i - 1] = found;
        prev = found;
    }
    if d_indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(violation("d_i indices out of order"));
    }
    debug_assert!(d_indices.iter().all(|&j| steps[j] == StepKind::Down));

    // The prefix before the first descent (or before q_l in case I) must be
    // all horizontal steps.
    let leading_h = if left_count == 0 { ql } else { d_indices[0] };
    if steps[..leading_h]
        .iter()
        .any(|&s| s != StepKind::Horizontal)
    {
        return Err(violation("prefix is not all horizontal steps"));
    }

    // Recover the R_i. Left of q_l they appear reversed in the word.
    let mut r_segments: Vec<Vec<StepKind>> = Vec::with_capacity(k);
    for i in 1..=left_count {
        let end = if i < left_count { d_indices[i] } else { ql };
        let mut seg: Vec<StepKind> = steps[d_indices[i - 1] + 1..end].to_vec();
        seg.reverse();
        r_segments.push(seg);
    }
    for i in left_count + 1..=k {
        let start = if i == left_count + 1 {
            ql + 1
        } else {
            d_indices[i - 2] + 1
        };
        r_segments.push(steps[start..d_indices[i - 1]].to_vec());
    }
    for (i, seg) in r_segments.iter().enumerate() {
        if !is_closed_nonnegative_segment(seg, path.params().k) {
            return Err(violation(format!("R_{} is not a closed (k,a)-path", i + 1)));
        }
    }

    let x1 = path.start_of(ql).x;
    let anchor_a = path
        .first_return_after(x1)
        .ok_or_else(|| violation("no return point right of q_l"))?;
    let anchor_b = path
        .rightmost_lowest_after(x1)
        .map_err(|_| violation("no points right of q_l"))?;

    // A must be the very endpoint the structure predicts: the end of d_k,
    // or of q_l itself when q = 0.
    let a_step = if case == CaseTag::II {
        ql
    } else {
        d_indices[k - 1]
    };
    if path.end_of(a_step) != anchor_a {
        return Err(violation(
            "first return point is not where the structure ends",
        ));
    }
    let b_step = path
        .endpoints()
        .position(|pt| pt == anchor_b)
        .ok_or_else(|| violation("lowest point is not a step endpoint"))?;
    if b_step < a_step {
        return Err(violation("lowest point lies left of the return point"));
    }

    let dec = SuperDecomposition {
        case,
        leading_h,
        ql_index: ql,
        d_indices,
        r_segments,
        q_prime: a_step + 1..b_step + 1,
        q_dprime: b_step + 1..steps.len(),
        anchor_a,
        anchor_b,
        p,
        q,
    };

    // Rebuilding the word from the parts must give back the input.
    let mut rebuilt: Vec<StepKind> = Vec::with_capacity(steps.len());
    rebuilt.extend(std::iter::repeat_n(StepKind::Horizontal, dec.leading_h));
    for i in 1..=left_count {
        rebuilt.push(StepKind::Down);
        rebuilt.extend(dec.r_segments[i - 1].iter().rev());
    }
    rebuilt.push(StepKind::Up);
    for i in left_count + 1..=k {
        rebuilt.extend_from_slice(&dec.r_segments[i - 1]);
        rebuilt.push(StepKind::Down);
    }
    rebuilt.extend_from_slice(&steps[dec.q_prime.clone()]);
    rebuilt.extend_from_slice(&steps[dec.q_dprime.clone()]);
    if rebuilt != steps {
        return Err(violation("decomposition does not reassemble to the input"));
    }

    Ok(dec)
}

/// Maps a super path with at least one up step back to a colored path. The
/// recovered hump is `q_l H^m d_1`; its color is `|p| + 1` where `p` is the
/// starting height of `q_l`.
pub fn psi(path: &LatticePath) -> Result<ColoredHumpPath, BijectionError> {
    let dec = decompose_super(path)?;
    let steps = path.steps();
    let k = path.params().k;

    let mut out: Vec<StepKind> = Vec::with_capacity(steps.len());
    out.extend_from_slice(&dec.r_segments[0]);
    out.extend_from_slice(&steps[dec.q_dprime.clone()]);
    let up_index = out.len();
    out.push(StepKind::Up);
    out.extend(std::iter::repeat_n(StepKind::Horizontal, dec.leading_h));
    out.push(StepKind::Down);
    for i in 2..=k as usize {
        out.extend_from_slice(&dec.r_segments[i - 1]);
        out.push(StepKind::Down);
    }
    out.extend_from_slice(&steps[dec.q_prime.clone()]);

    let preimage = LatticePath::new(path.params(), out).expect("psi preserves the step alphabet");
    let color = (-dec.p) as u32 + 1;
    ColoredHumpPath::new(preimage, Hump::new(up_index, dec.leading_h), color)
        .map_err(|e| violation(format!("psi image invalid: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::{HorizontalWidth, PathParams};

    fn params(k: u32, a: u32) -> PathParams {
        PathParams::new(k, HorizontalWidth::Finite(a)).unwrap()
    }

    fn colored(word: &str, p: PathParams, up_index: usize, color: u32) -> ColoredHumpPath {
        let path = LatticePath::parse(word, p).unwrap();
        ColoredHumpPath::from_up_index(path, up_index, color).unwrap()
    }

    #[test]
    fn trivial_decomposition() {
        let dec = decompose_colored(&colored("UD", params(1, 1), 0, 1)).unwrap();
        assert_eq!(dec.r_segments, vec![0..0]);
        assert_eq!(dec.p_prime, 0..0);
        assert_eq!(dec.pl_index, 0);
        assert_eq!(dec.run, 0);
        assert_eq!(dec.d_indices, vec![1]);
        assert_eq!(dec.p_dprime, 2..2);
        assert_eq!(dec.anchor, LatticePoint { x: 0, y: 0 });
    }

    #[test]
    fn prefix_splits_at_last_return() {
        // p_l starts at height 0, so P' is empty and R_1 takes the prefix.
        let dec = decompose_colored(&colored("HUDUD", params(1, 1), 3, 1)).unwrap();
        assert_eq!(dec.r_segments, vec![0..3]);
        assert_eq!(dec.p_prime, 3..3);
        assert_eq!(dec.pl_index, 3);
        assert_eq!(dec.d_indices, vec![4]);
    }

    #[test]
    fn phi_on_smallest_paths() {
        let p = params(1, 1);
        assert_eq!(phi(&colored("UD", p, 0, 1)).unwrap().word(), "UD");
        assert_eq!(phi(&colored("UD", p, 0, 2)).unwrap().word(), "DU");
    }

    #[test]
    fn psi_on_smallest_paths() {
        let p = params(1, 1);
        let du = LatticePath::parse("DU", p).unwrap();
        let cp = psi(&du).unwrap();
        assert_eq!(cp.path().word(), "UD");
        assert_eq!(cp.hump(), Hump::new(0, 0));
        assert_eq!(cp.color(), 2);

        let ud = LatticePath::parse("UD", p).unwrap();
        let cp = psi(&ud).unwrap();
        assert_eq!(cp.path().word(), "UD");
        assert_eq!(cp.color(), 1);
    }

    #[test]
    fn psi_cases_on_smallest_paths() {
        let p = params(1, 1);
        let dec = decompose_super(&LatticePath::parse("DU", p).unwrap()).unwrap();
        assert_eq!(dec.case, CaseTag::II);
        assert_eq!(dec.leading_h, 0);
        assert_eq!(dec.d_indices, vec![0]);
        assert_eq!(dec.r_segments, vec![Vec::new()]);
        assert!(dec.q_prime.is_empty() && dec.q_dprime.is_empty());

        let dec = decompose_super(&LatticePath::parse("UD", p).unwrap()).unwrap();
        assert_eq!(dec.case, CaseTag::I);
        assert_eq!(dec.anchor_a, LatticePoint { x: 2, y: 0 });
    }

    #[test]
    fn psi_rejects_pathologies() {
        let p = params(1, 1);
        let hh = LatticePath::parse("HH", p).unwrap();
        assert_eq!(psi(&hh).unwrap_err(), BijectionError::NoUpStep);
        let open = LatticePath::parse("U", p).unwrap();
        assert_eq!(psi(&open).unwrap_err(), BijectionError::NotClosed);
    }

    #[test]
    fn leading_horizontal_refinement() {
        // A hump with run l maps to a word starting with exactly l H's.
        let p = params(1, 2);
        let image = phi(&colored("UHD", p, 0, 1)).unwrap();
        assert_eq!(image.word(), "HUD");
        let image = phi(&colored("UHD", p, 0, 2)).unwrap();
        assert_eq!(image.word(), "HDU");
    }

    #[test]
    fn roundtrip_small_grid() {
        use crate::enumerate::{
            enumerate_colored, enumerate_restricted, StatisticKind, SuperSubset,
        };
        for p in [
            params(1, 1),
            params(2, 1),
            params(3, 2),
            PathParams::new(2, HorizontalWidth::Infinite).unwrap(),
        ] {
            for n in 0..=7 {
                for cp in enumerate_colored(n, p, StatisticKind::Hump) {
                    let image = phi(&cp).unwrap();
                    assert_eq!(psi(&image).unwrap(), cp, "psi . phi != id at {} n={n}", p);
                }
                for sp in enumerate_restricted(n, p, SuperSubset::WithUpStep) {
                    let cp = psi(&sp).unwrap();
                    assert_eq!(phi(&cp).unwrap(), sp, "phi . psi != id at {} n={n}", p);
                }
            }
        }
    }
}
