//! Exhaustive generators for every path family and the closed-form counters.
//!
//! Streams are deterministic: every generator yields words in lexicographic
//! order under the convention `U < D < H`. Counters are exact big integers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::path::{HorizontalWidth, Hump, LatticePath, PathParams, StepKind};

/// Counting errors. The closed forms are integral by theorem, so a
/// non-integer result signals an implementation bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("closed form {numerator} is not divisible by {divisor}")]
    NonIntegerResult { numerator: BigUint, divisor: u64 },
}

/// A colored hump path was built from parts that do not satisfy its
/// invariants (path not closed/nonnegative, hump absent, color out of range).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed colored hump path: {0}")]
pub struct MalformedColoredPath(pub String);

/// Which statistic a sweep ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatisticKind {
    Hump,
    Peak,
}

/// The two restricted super-path families of the bijection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuperSubset {
    /// Super paths with at least one up step (S').
    WithUpStep,
    /// Super paths that do not start with a horizontal step (S'').
    NoLeadingHorizontal,
}

// ---------------------------------------------------------------------------
// Step compositions
// ---------------------------------------------------------------------------

/// Step multiset of a closed path of a given order: `u` up steps force
/// `k * u` down steps, and `u * (k+1) + a * h = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StepComposition {
    pub u: u64,
    pub h: u64,
}

/// All `(u, h)` with `u*(k+1) + a*h = n`. Empty when `n` is unrepresentable.
pub fn compositions(n: u64, params: PathParams) -> Vec<StepComposition> {
    let ku1 = u64::from(params.k) + 1;
    let mut out = Vec::new();
    let mut u = 0;
    while u * ku1 <= n {
        let rest = n - u * ku1;
        match params.a {
            HorizontalWidth::Finite(a) => {
                let a = u64::from(a);
                if rest.is_multiple_of(a) {
                    out.push(StepComposition { u, h: rest / a });
                }
            }
            HorizontalWidth::Infinite => {
                if rest == 0 {
                    out.push(StepComposition { u, h: 0 });
                }
            }
        }
        u += 1;
    }
    out
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

const KINDS: [StepKind; 3] = [StepKind::Up, StepKind::Down, StepKind::Horizontal];

/// Depth-first stream of all closed nonnegative `(k,a)`-paths of order `n`,
/// in lexicographic word order. Pruning is exact: every partial word kept on
/// the stack extends to at least one full path.
pub struct ClosedPathIter {
    params: PathParams,
    word: Vec<StepKind>,
    height: i64,
    rem: u64,
    representable: Vec<bool>,
    started: bool,
    done: bool,
}

impl ClosedPathIter {
    fn new(n: u64, params: PathParams) -> ClosedPathIter {
        ClosedPathIter {
            params,
            word: Vec::new(),
            height: 0,
            rem: n,
            representable: representable_table(n, params),
            started: false,
            done: false,
        }
    }

    fn can_push(&self, step: StepKind) -> bool {
        let advance = match step {
            StepKind::Up | StepKind::Down => 1,
            StepKind::Horizontal => match self.params.a {
                HorizontalWidth::Finite(a) => u64::from(a),
                HorizontalWidth::Infinite => return false,
            },
        };
        if advance > self.rem {
            return false;
        }
        let height = self.height
            + match step {
                StepKind::Up => i64::from(self.params.k),
                StepKind::Down => -1,
                StepKind::Horizontal => 0,
            };
        if height < 0 {
            return false;
        }
        let rem = self.rem - advance;
        // A completion must descend `height` units and close the rest of the
        // order with whole up/horizontal blocks.
        height as u64 <= rem && self.representable[(rem - height as u64) as usize]
    }

    fn push(&mut self, step: StepKind) {
        self.rem -= match step {
            StepKind::Up | StepKind::Down => 1,
            StepKind::Horizontal => match self.params.a {
                HorizontalWidth::Finite(a) => u64::from(a),
                HorizontalWidth::Infinite => unreachable!("H rejected by can_push"),
            },
        };
        self.height += match step {
            StepKind::Up => i64::from(self.params.k),
            StepKind::Down => -1,
            StepKind::Horizontal => 0,
        };
        self.word.push(step);
    }

    fn pop(&mut self) -> Option<StepKind> {
        let step = self.word.pop()?;
        self.rem += match step {
            StepKind::Up | StepKind::Down => 1,
            StepKind::Horizontal => match self.params.a {
                HorizontalWidth::Finite(a) => u64::from(a),
                HorizontalWidth::Infinite => unreachable!("H never pushed"),
            },
        };
        self.height -= match step {
            StepKind::Up => i64::from(self.params.k),
            StepKind::Down => -1,
            StepKind::Horizontal => 0,
        };
        Some(step)
    }
}

impl Iterator for ClosedPathIter {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        if self.done {
            return None;
        }
        let mut resume: Option<StepKind> = if self.started {
            match self.pop() {
                Some(step) => Some(step),
                None => {
                    self.done = true;
                    return None;
                }
            }
        } else {
            self.started = true;
            if self.rem > 0
                && !(self.height as u64 <= self.rem && self.representable[self.rem as usize])
            {
                self.done = true;
                return None;
            }
            None
        };
        loop {
            if resume.is_none() && self.rem == 0 {
                debug_assert_eq!(self.height, 0);
                let path = LatticePath::new(self.params, self.word.clone())
                    .expect("generated word respects params");
                return Some(path);
            }
            let first = match resume.take() {
                None => 0,
                Some(StepKind::Up) => 1,
                Some(StepKind::Down) => 2,
                Some(StepKind::Horizontal) => 3,
            };
            let next = KINDS[first..].iter().copied().find(|&s| self.can_push(s));
            match next {
                Some(step) => self.push(step),
                None => match self.pop() {
                    Some(step) => resume = Some(step),
                    None => {
                        self.done = true;
                        return None;
                    }
                },
            }
        }
    }
}

fn representable_table(n: u64, params: PathParams) -> Vec<bool> {
    let n = n as usize;
    let block = params.k as usize + 1;
    let mut table = vec![false; n + 1];
    table[0] = true;
    for t in 1..=n {
        let mut ok = t >= block && table[t - block];
        if let HorizontalWidth::Finite(a) = params.a {
            let a = a as usize;
            ok = ok || (t >= a && table[t - a]);
        }
        table[t] = ok;
    }
    table
}

/// All closed nonnegative `(k,a)`-paths of order `n`, lexicographic.
pub fn enumerate_paths(n: u64, params: PathParams) -> ClosedPathIter {
    ClosedPathIter::new(n, params)
}

/// Stream of all super `(k,a)`-paths of order `n` in lexicographic order:
/// one multiset-permutation stream per step composition, merged by word.
pub struct SuperPathIter {
    params: PathParams,
    streams: Vec<Option<Vec<StepKind>>>,
}

impl Iterator for SuperPathIter {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        let mut best: Option<usize> = None;
        for (i, stream) in self.streams.iter().enumerate() {
            if let Some(word) = stream {
                best = match best {
                    Some(j) if self.streams[j].as_ref().unwrap() <= word => Some(j),
                    _ => Some(i),
                };
            }
        }
        let i = best?;
        let word = self.streams[i].as_ref().unwrap().clone();
        if !next_multiset_permutation(self.streams[i].as_mut().unwrap()) {
            self.streams[i] = None;
        }
        Some(LatticePath::new(self.params, word).expect("stream words respect params"))
    }
}

/// Advances `word` to its lexicographic successor among rearrangements of
/// the same multiset; false when `word` is already the last one.
fn next_multiset_permutation(word: &mut [StepKind]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let pivot = i - 1;
    let mut j = word.len() - 1;
    while word[j] <= word[pivot] {
        j -= 1;
    }
    word.swap(pivot, j);
    word[i..].reverse();
    true
}

/// All super `(k,a)`-paths of order `n` (closed, sign-free), lexicographic.
pub fn enumerate_super(n: u64, params: PathParams) -> SuperPathIter {
    let streams = compositions(n, params)
        .into_iter()
        .map(|c| {
            let mut word = Vec::with_capacity((c.u + u64::from(params.k) * c.u + c.h) as usize);
            word.extend(std::iter::repeat_n(StepKind::Up, c.u as usize));
            word.extend(std::iter::repeat_n(
                StepKind::Down,
                (u64::from(params.k) * c.u) as usize,
            ));
            word.extend(std::iter::repeat_n(StepKind::Horizontal, c.h as usize));
            Some(word)
        })
        .collect();
    SuperPathIter { params, streams }
}

/// Super paths filtered to S' (at least one up step) or S'' (no leading
/// horizontal step).
pub fn enumerate_restricted(
    n: u64,
    params: PathParams,
    subset: SuperSubset,
) -> impl Iterator<Item = LatticePath> {
    enumerate_super(n, params).filter(move |p| match subset {
        SuperSubset::WithUpStep => p.up_count() > 0,
        SuperSubset::NoLeadingHorizontal => p.steps().first() != Some(&StepKind::Horizontal),
    })
}

// ---------------------------------------------------------------------------
// Colored hump paths
// ---------------------------------------------------------------------------

/// A closed nonnegative `(k,a)`-path with one distinguished hump carrying a
/// color in `1..=k+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredHumpPath {
    path: LatticePath,
    hump: Hump,
    color: u32,
}

impl ColoredHumpPath {
    pub fn new(path: LatticePath, hump: Hump, color: u32) -> Result<Self, MalformedColoredPath> {
        if !path.is_closed() {
            return Err(MalformedColoredPath("path is not closed".into()));
        }
        if !path.is_nonnegative() {
            return Err(MalformedColoredPath("path goes below the x-axis".into()));
        }
        if !path.humps().contains(&hump) {
            return Err(MalformedColoredPath(format!(
                "no hump with up index {} and run {}",
                hump.up_index, hump.run
            )));
        }
        let max = path.params().k + 1;
        if color < 1 || color > max {
            return Err(MalformedColoredPath(format!(
                "color {color} outside 1..={max}"
            )));
        }
        Ok(ColoredHumpPath { path, hump, color })
    }

    /// Locates the hump by the index of its up step.
    pub fn from_up_index(
        path: LatticePath,
        up_index: usize,
        color: u32,
    ) -> Result<Self, MalformedColoredPath> {
        let hump = path
            .humps()
            .into_iter()
            .find(|h| h.up_index == up_index)
            .ok_or_else(|| {
                MalformedColoredPath(format!("no hump starts at step index {up_index}"))
            })?;
        ColoredHumpPath::new(path, hump, color)
    }

    pub fn path(&self) -> &LatticePath {
        &self.path
    }

    pub fn hump(&self) -> Hump {
        self.hump
    }

    pub fn color(&self) -> u32 {
        self.color
    }
}

/// Every (path, hump-or-peak, color) triple of order `n`: each closed
/// nonnegative path, each of its humps (or peaks), each color in `1..=k+1`.
pub fn enumerate_colored(
    n: u64,
    params: PathParams,
    mode: StatisticKind,
) -> impl Iterator<Item = ColoredHumpPath> {
    let colors = params.k + 1;
    enumerate_paths(n, params).flat_map(move |path| {
        let humps = match mode {
            StatisticKind::Hump => path.humps(),
            StatisticKind::Peak => path.peaks(),
        };
        humps.into_iter().flat_map(move |hump| {
            let path = path.clone();
            (1..=colors).map(move |color| ColoredHumpPath {
                path: path.clone(),
                hump,
                color,
            })
        })
    })
}

// ---------------------------------------------------------------------------
// Counters
// ---------------------------------------------------------------------------

/// Exact binomial coefficient; 0 when `r > n`.
pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of super `(k,a)`-paths of order `n`: the multinomial sum over step
/// compositions. Zero for negative `n` (used by the peak identity's
/// `n - a` term).
pub fn count_super(n: i64, params: PathParams) -> BigUint {
    if n < 0 {
        return BigUint::zero();
    }
    let k = u64::from(params.k);
    compositions(n as u64, params)
        .into_iter()
        .map(|c| {
            let downs = k * c.u;
            binomial(c.u + downs + c.h, c.u) * binomial(downs + c.h, downs)
        })
        .sum()
}

/// True iff the unique up-step-free super path of order `n` exists: the
/// all-horizontal word when `a` divides `n`, or the empty path when `a = inf`
/// and `n = 0`.
pub fn up_free_super_exists(n: u64, params: PathParams) -> bool {
    match params.a {
        HorizontalWidth::Finite(a) => n.is_multiple_of(u64::from(a)),
        HorizontalWidth::Infinite => n == 0,
    }
}

/// Total number of humps (or peaks) over all closed nonnegative
/// `(k,a)`-paths of order `n`.
pub fn total_statistic(n: u64, params: PathParams, mode: StatisticKind) -> BigUint {
    let mut total: u128 = 0;
    for path in enumerate_paths(n, params) {
        total += match mode {
            StatisticKind::Hump => path.humps().len(),
            StatisticKind::Peak => path.peaks().len(),
        } as u128;
    }
    BigUint::from(total)
}

/// Super k-ary paths with `n` up steps and `m` peaks that start with at
/// least two consecutive up steps: `C(n-1, m) * C(kn-1, m-1)`.
pub fn count_suu(n: u64, k: u32, m: u64) -> BigUint {
    assert!(n >= 1 && m >= 1, "count_suu requires n, m >= 1");
    binomial(n - 1, m) * binomial(u64::from(k) * n - 1, m - 1)
}

/// Super k-ary paths with `n` up steps and `m` peaks that start with an up
/// step immediately followed by a down step: `C(n-1, m-1) * C(kn-1, m-1)`.
pub fn count_sud(n: u64, k: u32, m: u64) -> BigUint {
    assert!(n >= 1 && m >= 1, "count_sud requires n, m >= 1");
    binomial(n - 1, m - 1) * binomial(u64::from(k) * n - 1, m - 1)
}

/// Nonnegative k-ary paths with `n` up steps and `m` peaks:
/// `(1/n) * C(n, m) * C(kn, m-1)`. At `k = 1` these are the Narayana
/// numbers. The division is always exact.
pub fn count_kary_peak_paths(n: u64, k: u32, m: u64) -> Result<BigUint, CountError> {
    assert!(n >= 1 && m >= 1, "count_kary_peak_paths requires n, m >= 1");
    let numerator = binomial(n, m) * binomial(u64::from(k) * n, m - 1);
    let (q, r) = numerator.div_rem(&BigUint::from(n));
    if !r.is_zero() {
        return Err(CountError::NonIntegerResult {
            numerator,
            divisor: n,
        });
    }
    Ok(q)
}

/// Count-table families exported by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountFamily {
    Paths,
    Super,
    SPrime,
    SDPrime,
    HumpsTotal,
    PeaksTotal,
}

impl CountFamily {
    pub const ALL: [CountFamily; 6] = [
        CountFamily::Paths,
        CountFamily::Super,
        CountFamily::SPrime,
        CountFamily::SDPrime,
        CountFamily::HumpsTotal,
        CountFamily::PeaksTotal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CountFamily::Paths => "paths",
            CountFamily::Super => "super",
            CountFamily::SPrime => "s_prime",
            CountFamily::SDPrime => "s_dprime",
            CountFamily::HumpsTotal => "humps_total",
            CountFamily::PeaksTotal => "peaks_total",
        }
    }
}

impl std::str::FromStr for CountFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "paths" => Ok(CountFamily::Paths),
            "super" => Ok(CountFamily::Super),
            "s_prime" | "s-prime" => Ok(CountFamily::SPrime),
            "s_dprime" | "s-dprime" => Ok(CountFamily::SDPrime),
            "humps_total" => Ok(CountFamily::HumpsTotal),
            "peaks_total" => Ok(CountFamily::PeaksTotal),
            other => Err(format!("unknown family '{other}'")),
        }
    }
}

/// One cell of the count table. Stream families are counted by enumeration,
/// `super` by its closed form.
pub fn count_family(n: u64, params: PathParams, family: CountFamily) -> BigUint {
    match family {
        CountFamily::Paths => BigUint::from(enumerate_paths(n, params).count()),
        CountFamily::Super => count_super(n as i64, params),
        CountFamily::SPrime => {
            BigUint::from(enumerate_restricted(n, params, SuperSubset::WithUpStep).count())
        }
        CountFamily::SDPrime => {
            BigUint::from(enumerate_restricted(n, params, SuperSubset::NoLeadingHorizontal).count())
        }
        CountFamily::HumpsTotal => total_statistic(n, params, StatisticKind::Hump),
        CountFamily::PeaksTotal => total_statistic(n, params, StatisticKind::Peak),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(k: u32, a: u32) -> PathParams {
        PathParams::new(k, HorizontalWidth::Finite(a)).unwrap()
    }

    fn kary(k: u32) -> PathParams {
        PathParams::new(k, HorizontalWidth::Infinite).unwrap()
    }

    fn words(iter: impl Iterator<Item = LatticePath>) -> Vec<String> {
        iter.map(|p| p.word()).collect()
    }

    #[test]
    fn compositions_solve_order_equation() {
        assert_eq!(
            compositions(3, params(1, 1)),
            vec![
                StepComposition { u: 0, h: 3 },
                StepComposition { u: 1, h: 1 }
            ]
        );
        assert_eq!(
            compositions(6, kary(2)),
            vec![StepComposition { u: 2, h: 0 }]
        );
        assert_eq!(compositions(1, params(1, 2)), vec![]);
    }

    #[test]
    fn enumerate_paths_motzkin_order_2() {
        assert_eq!(words(enumerate_paths(2, params(1, 1))), vec!["UD", "HH"]);
    }

    #[test]
    fn enumerate_paths_kary() {
        assert_eq!(
            words(enumerate_paths(6, kary(2))),
            vec!["UUDDDD", "UDUDDD", "UDDUDD"]
        );
    }

    #[test]
    fn enumerate_paths_empty_order() {
        assert_eq!(words(enumerate_paths(0, params(3, 2))), vec![""]);
    }

    #[test]
    fn enumerate_paths_unrepresentable_order() {
        assert_eq!(
            words(enumerate_paths(1, params(1, 2))),
            Vec::<String>::new()
        );
    }

    #[test]
    fn enumerate_super_small() {
        assert_eq!(
            words(enumerate_super(2, params(1, 1))),
            vec!["UD", "DU", "HH"]
        );
        assert_eq!(enumerate_super(3, params(1, 1)).count(), 7);
        assert_eq!(words(enumerate_super(0, params(1, 1))), vec![""]);
    }

    #[test]
    fn super_stream_is_sorted_and_duplicate_free() {
        // Sorted under the step order U < D < H, which is not ASCII order.
        for (k, a, n) in [
            (1, Some(1), 6),
            (2, Some(2), 8),
            (3, None, 8),
            (1, Some(2), 6),
        ] {
            let p = match a {
                Some(a) => params(k, a),
                None => kary(k),
            };
            let ws: Vec<Vec<StepKind>> =
                enumerate_super(n, p).map(|p| p.steps().to_vec()).collect();
            assert!(
                ws.windows(2).all(|w| w[0] < w[1]),
                "stream out of order at k={k} a={a:?} n={n}"
            );
        }
    }

    #[test]
    fn streams_yield_valid_members() {
        for n in 0..=7 {
            for p in [params(1, 1), params(2, 2), kary(3)] {
                for path in enumerate_paths(n, p) {
                    assert!(path.is_closed() && path.is_nonnegative(), "{path} at {p}");
                    assert_eq!(path.order(), n);
                    // Hump endpoints of a nonnegative path sit weakly above
                    // the axis.
                    let profile = path.height_profile();
                    for h in path.humps() {
                        let start = if h.up_index == 0 {
                            0
                        } else {
                            profile[h.up_index - 1]
                        };
                        assert!(start >= 0 && profile[h.down_index] >= 0);
                    }
                }
                for path in enumerate_super(n, p) {
                    assert!(path.is_closed(), "{path} at {p}");
                    assert_eq!(path.order(), n);
                }
            }
        }
    }

    #[test]
    fn count_super_matches_stream() {
        for n in 0..=9i64 {
            for p in [
                params(1, 1),
                params(1, 2),
                params(2, 1),
                params(2, 3),
                kary(1),
                kary(3),
            ] {
                assert_eq!(
                    count_super(n, p),
                    BigUint::from(enumerate_super(n as u64, p).count()),
                    "n={n} {p}"
                );
            }
        }
    }

    #[test]
    fn count_super_examples() {
        assert_eq!(count_super(3, params(1, 1)), BigUint::from(7u32));
        assert_eq!(count_super(2, kary(1)), BigUint::from(2u32));
        assert_eq!(count_super(0, params(2, 1)), BigUint::from(1u32));
        assert_eq!(count_super(-1, params(1, 1)), BigUint::zero());
    }

    #[test]
    fn restricted_families() {
        assert_eq!(
            words(enumerate_restricted(
                2,
                params(1, 1),
                SuperSubset::WithUpStep
            )),
            vec!["UD", "DU"]
        );
        assert_eq!(
            words(enumerate_restricted(
                2,
                params(1, 1),
                SuperSubset::NoLeadingHorizontal
            )),
            vec!["UD", "DU"]
        );
        assert_eq!(
            enumerate_restricted(4, params(1, 2), SuperSubset::NoLeadingHorizontal).count(),
            10
        );
    }

    #[test]
    fn no_leading_horizontal_count_identity() {
        // |S''_n| = |SP_n| - |SP_{n-a}|
        for n in 0..=8 {
            for p in [params(1, 1), params(1, 2), params(2, 3), kary(2)] {
                let lhs = BigUint::from(
                    enumerate_restricted(n, p, SuperSubset::NoLeadingHorizontal).count(),
                );
                let sub = match p.a {
                    HorizontalWidth::Finite(a) => count_super(n as i64 - i64::from(a), p),
                    HorizontalWidth::Infinite => BigUint::zero(),
                };
                assert_eq!(lhs, count_super(n as i64, p) - sub, "n={n} {p}");
            }
        }
    }

    #[test]
    fn colored_triples() {
        let triples: Vec<_> = enumerate_colored(2, params(1, 1), StatisticKind::Hump).collect();
        assert_eq!(triples.len(), 2);
        assert!(triples.iter().all(|c| c.path().word() == "UD"));
        assert_eq!(
            triples.iter().map(|c| c.color()).collect::<Vec<_>>(),
            vec![1, 2]
        );

        assert_eq!(
            enumerate_colored(3, params(1, 1), StatisticKind::Peak).count(),
            4
        );
        assert_eq!(
            enumerate_colored(1, params(1, 2), StatisticKind::Hump).count(),
            0
        );
    }

    #[test]
    fn colored_count_matches_statistic() {
        for n in 0..=7 {
            for p in [params(1, 1), params(2, 2), kary(2)] {
                for mode in [StatisticKind::Hump, StatisticKind::Peak] {
                    let colored = enumerate_colored(n, p, mode).count();
                    let expected = BigUint::from(p.k + 1) * total_statistic(n, p, mode);
                    assert_eq!(BigUint::from(colored), expected, "n={n} {p} {mode:?}");
                }
            }
        }
    }

    #[test]
    fn total_statistics_small() {
        assert_eq!(
            total_statistic(3, params(1, 1), StatisticKind::Hump),
            BigUint::from(3u32)
        );
        assert_eq!(
            total_statistic(3, params(1, 1), StatisticKind::Peak),
            BigUint::from(2u32)
        );
        assert_eq!(
            total_statistic(0, params(1, 1), StatisticKind::Hump),
            BigUint::zero()
        );
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(count_suu(2, 1, 1), BigUint::one());
        assert_eq!(count_suu(1, 1, 1), BigUint::zero());
        assert_eq!(count_suu(2, 2, 1), BigUint::one());

        assert_eq!(count_sud(1, 1, 1), BigUint::one());
        assert_eq!(count_sud(2, 1, 2), BigUint::one());
        assert_eq!(count_sud(2, 1, 3), BigUint::zero());

        assert_eq!(count_kary_peak_paths(2, 2, 1).unwrap(), BigUint::one());
        assert_eq!(count_kary_peak_paths(2, 2, 2).unwrap(), BigUint::from(2u32));
        assert_eq!(count_kary_peak_paths(3, 1, 2).unwrap(), BigUint::from(3u32));
    }

    #[test]
    fn peak_count_cross_identity() {
        // (1/m) (C(n-1,m-1) C(kn-1,m-2) + C(n-1,m-1) C(kn-1,m-1))
        //   = (1/n) C(n,m) C(kn,m-1)
        for k in 1..=3u32 {
            for n in 1..=8u64 {
                for m in 1..=n {
                    // The m = 1 term has no S^UU contribution.
                    let suu_term = if m >= 2 {
                        count_suu(n, k, m - 1)
                    } else {
                        BigUint::zero()
                    };
                    let total = suu_term + count_sud(n, k, m);
                    let (q, r) = total.div_rem(&BigUint::from(m));
                    assert!(r.is_zero(), "k={k} n={n} m={m}");
                    assert_eq!(
                        q,
                        count_kary_peak_paths(n, k, m).unwrap(),
                        "k={k} n={n} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn peak_counts_sum_to_path_count() {
        for k in 1..=3u32 {
            for n in 1..=5u64 {
                let total: BigUint = (1..=n)
                    .map(|m| count_kary_peak_paths(n, k, m).unwrap())
                    .sum();
                let brute = enumerate_paths((u64::from(k) + 1) * n, kary(k)).count();
                assert_eq!(total, BigUint::from(brute), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn up_free_delta() {
        assert!(up_free_super_exists(4, params(1, 2)));
        assert!(!up_free_super_exists(3, params(1, 2)));
        assert!(up_free_super_exists(0, kary(2)));
        assert!(!up_free_super_exists(3, kary(1)));
        assert!(up_free_super_exists(0, params(3, 1)));
    }

    #[test]
    fn colored_path_validation() {
        let path = LatticePath::parse("UD", params(1, 1)).unwrap();
        let hump = path.humps()[0];
        assert!(ColoredHumpPath::new(path.clone(), hump, 2).is_ok());
        assert!(ColoredHumpPath::new(path.clone(), hump, 0).is_err());
        assert!(ColoredHumpPath::new(path.clone(), hump, 3).is_err());
        assert!(ColoredHumpPath::new(path.clone(), Hump::new(1, 0), 1).is_err());

        let open = LatticePath::parse("UDD", params(1, 1)).unwrap();
        assert!(ColoredHumpPath::new(open, Hump::new(0, 0), 1).is_err());

        let negative = LatticePath::parse("DUUD", params(1, 1)).unwrap();
        assert!(ColoredHumpPath::new(negative, Hump::new(2, 0), 1).is_err());
    }
}
