//! Core path representation and geometry.
//!
//! A `(k,a)`-path is a lattice path built from up steps `(1, k)`, down steps
//! `(1, -1)` and horizontal steps `(a, 0)`. Paths are stored as words over
//! `{U, D, H}` together with their parameters; all geometric queries
//! (height profile, return points, lowest points, axis crossings) are
//! derived from the word on demand.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors from path construction and geometric queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    /// A path word contained a character other than `U`, `D`, `H`.
    #[error("illegal character '{ch}' at position {pos}")]
    IllegalCharacter { pos: usize, ch: char },
    /// A horizontal step appeared although `a = inf` forbids them.
    #[error("horizontal steps are forbidden when a = inf")]
    HorizontalForbidden,
    /// `rightmost_lowest_after` was called with no step endpoint right of `x0`.
    #[error("no step endpoints to the right of x = {x0}")]
    NoPointsRight { x0: u64 },
    /// `k` must be a positive integer.
    #[error("k must be at least 1")]
    InvalidRise,
    /// `a` must be a positive integer or `inf`.
    #[error("a must be at least 1 or inf")]
    InvalidWidth,
}

/// Width of horizontal steps: a positive integer, or `Infinite` meaning
/// horizontal steps are forbidden entirely (the k-ary path case).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HorizontalWidth {
    Finite(u32),
    Infinite,
}

impl HorizontalWidth {
    /// The x-advance of one horizontal step, if such steps are allowed.
    pub fn width(self) -> Option<u32> {
        match self {
            HorizontalWidth::Finite(a) => Some(a),
            HorizontalWidth::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, HorizontalWidth::Infinite)
    }
}

impl fmt::Display for HorizontalWidth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HorizontalWidth::Finite(a) => write!(f, "{a}"),
            HorizontalWidth::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for HorizontalWidth {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, PathError> {
        if s.eq_ignore_ascii_case("inf") {
            return Ok(HorizontalWidth::Infinite);
        }
        match s.parse::<u32>() {
            Ok(a) if a >= 1 => Ok(HorizontalWidth::Finite(a)),
            _ => Err(PathError::InvalidWidth),
        }
    }
}

impl Serialize for HorizontalWidth {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            HorizontalWidth::Finite(a) => serializer.serialize_u32(*a),
            HorizontalWidth::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for HorizontalWidth {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(u32),
            Tag(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Int(a) if a >= 1 => Ok(HorizontalWidth::Finite(a)),
            Repr::Int(_) => Err(D::Error::custom("a must be at least 1 or \"inf\"")),
            Repr::Tag(s) => s
                .parse()
                .map_err(|_| D::Error::custom("a must be at least 1 or \"inf\"")),
        }
    }
}

/// Step-set parameters of a `(k,a)`-path family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathParams {
    /// Rise of an up step.
    pub k: u32,
    /// Width of a horizontal step.
    pub a: HorizontalWidth,
}

impl PathParams {
    pub fn new(k: u32, a: HorizontalWidth) -> Result<Self, PathError> {
        if k < 1 {
            return Err(PathError::InvalidRise);
        }
        if let HorizontalWidth::Finite(a) = a {
            if a < 1 {
                return Err(PathError::InvalidWidth);
            }
        }
        Ok(PathParams { k, a })
    }
}

impl fmt::Display for PathParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}, a={}", self.k, self.a)
    }
}

/// One lattice step. The derived `Ord` fixes the lexicographic word
/// convention `U < D < H` used by all enumeration streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepKind {
    Up,
    Down,
    Horizontal,
}

impl StepKind {
    pub fn letter(self) -> char {
        match self {
            StepKind::Up => 'U',
            StepKind::Down => 'D',
            StepKind::Horizontal => 'H',
        }
    }

    fn from_letter(ch: char) -> Option<StepKind> {
        match ch {
            'U' => Some(StepKind::Up),
            'D' => Some(StepKind::Down),
            'H' => Some(StepKind::Horizontal),
            _ => None,
        }
    }
}

/// A step endpoint, in true path units: `x` counts 1 per U/D step and `a`
/// per horizontal step, `y` is the height.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: u64,
    pub y: i64,
}

/// Locator of one hump: an up step, `run` horizontal steps, a down step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hump {
    pub up_index: usize,
    pub run: usize,
    pub down_index: usize,
}

impl Hump {
    pub fn new(up_index: usize, run: usize) -> Hump {
        Hump {
            up_index,
            run,
            down_index: up_index + run + 1,
        }
    }

    /// A peak is a hump with no intermediate horizontal steps.
    pub fn is_peak(self) -> bool {
        self.run == 0
    }
}

/// A word over `{U, D, H}` with its `(k,a)` parameters. No closedness or
/// nonnegativity is imposed: super paths and open prefixes are valid values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PathJson", into = "PathJson")]
pub struct LatticePath {
    params: PathParams,
    steps: Vec<StepKind>,
}

/// Wire form: `{"k":3,"a":2,"word":"UDDD..."}` with `"a":"inf"` for the
/// horizontal-free case.
#[derive(Serialize, Deserialize)]
struct PathJson {
    k: u32,
    a: HorizontalWidth,
    word: String,
}

impl From<LatticePath> for PathJson {
    fn from(path: LatticePath) -> PathJson {
        PathJson {
            k: path.params.k,
            a: path.params.a,
            word: path.word(),
        }
    }
}

impl TryFrom<PathJson> for LatticePath {
    type Error = PathError;

    fn try_from(json: PathJson) -> Result<LatticePath, PathError> {
        let params = PathParams::new(json.k, json.a)?;
        LatticePath::parse(&json.word, params)
    }
}

impl LatticePath {
    /// Builds a path from explicit steps, rejecting horizontal steps when
    /// `a = inf`.
    pub fn new(params: PathParams, steps: Vec<StepKind>) -> Result<LatticePath, PathError> {
        if params.a.is_infinite() && steps.contains(&StepKind::Horizontal) {
            return Err(PathError::HorizontalForbidden);
        }
        Ok(LatticePath { params, steps })
    }

    /// Parses a word over `{U, D, H}`, leftmost step first.
    pub fn parse(word: &str, params: PathParams) -> Result<LatticePath, PathError> {
        let mut steps = Vec::with_capacity(word.len());
        for (pos, ch) in word.chars().enumerate() {
            let step = StepKind::from_letter(ch).ok_or(PathError::IllegalCharacter { pos, ch })?;
            if step == StepKind::Horizontal && params.a.is_infinite() {
                return Err(PathError::HorizontalForbidden);
            }
            steps.push(step);
        }
        Ok(LatticePath { params, steps })
    }

    pub fn empty(params: PathParams) -> LatticePath {
        LatticePath {
            params,
            steps: Vec::new(),
        }
    }

    pub fn params(&self) -> PathParams {
        self.params
    }

    pub fn steps(&self) -> &[StepKind] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The word of the path, leftmost step first.
    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    /// Height change of one step under these parameters.
    pub fn rise_of(&self, step: StepKind) -> i64 {
        match step {
            StepKind::Up => i64::from(self.params.k),
            StepKind::Down => -1,
            StepKind::Horizontal => 0,
        }
    }

    /// x-advance of one step under these parameters.
    pub fn advance_of(&self, step: StepKind) -> u64 {
        match step {
            StepKind::Up | StepKind::Down => 1,
            // Constructors reject H when a = inf, so width() is present here.
            StepKind::Horizontal => u64::from(self.params.a.width().expect("H with a = inf")),
        }
    }

    /// Total x-advance: U and D count 1 each, H counts `a`.
    pub fn order(&self) -> u64 {
        self.steps.iter().map(|&s| self.advance_of(s)).sum()
    }

    pub fn up_count(&self) -> u64 {
        self.steps.iter().filter(|&&s| s == StepKind::Up).count() as u64
    }

    pub fn down_count(&self) -> u64 {
        self.steps.iter().filter(|&&s| s == StepKind::Down).count() as u64
    }

    pub fn horizontal_count(&self) -> u64 {
        self.steps
            .iter()
            .filter(|&&s| s == StepKind::Horizontal)
            .count() as u64
    }

    /// Height after each step; empty for the empty path.
    pub fn height_profile(&self) -> Vec<i64> {
        let mut height = 0i64;
        self.steps
            .iter()
            .map(|&s| {
                height += self.rise_of(s);
                height
            })
            .collect()
    }

    pub fn final_height(&self) -> i64 {
        self.steps.iter().map(|&s| self.rise_of(s)).sum()
    }

    /// Closed means the path returns to the x-axis, i.e. `#D = k * #U`.
    pub fn is_closed(&self) -> bool {
        self.final_height() == 0
    }

    /// True iff the path never goes below the x-axis.
    pub fn is_nonnegative(&self) -> bool {
        let mut height = 0i64;
        self.steps.iter().all(|&s| {
            height += self.rise_of(s);
            height >= 0
        })
    }

    /// The word read right to left, letters unchanged.
    pub fn reversed(&self) -> LatticePath {
        LatticePath {
            params: self.params,
            steps: self.steps.iter().rev().copied().collect(),
        }
    }

    /// Step endpoints in true coordinates, left to right.
    pub fn endpoints(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        let mut x = 0u64;
        let mut y = 0i64;
        self.steps.iter().map(move |&s| {
            x += self.advance_of(s);
            y += self.rise_of(s);
            LatticePoint { x, y }
        })
    }

    /// Starting point of step `index`.
    pub fn start_of(&self, index: usize) -> LatticePoint {
        let mut x = 0u64;
        let mut y = 0i64;
        for &s in &self.steps[..index] {
            x += self.advance_of(s);
            y += self.rise_of(s);
        }
        LatticePoint { x, y }
    }

    /// Ending point of step `index`.
    pub fn end_of(&self, index: usize) -> LatticePoint {
        let start = self.start_of(index);
        LatticePoint {
            x: start.x + self.advance_of(self.steps[index]),
            y: start.y + self.rise_of(self.steps[index]),
        }
    }

    /// All humps, ordered by up index. Works on super paths too.
    pub fn humps(&self) -> Vec<Hump> {
        let mut humps = Vec::new();
        for (i, &step) in self.steps.iter().enumerate() {
            if step != StepKind::Up {
                continue;
            }
            let mut j = i + 1;
            while j < self.steps.len() && self.steps[j] == StepKind::Horizontal {
                j += 1;
            }
            if j < self.steps.len() && self.steps[j] == StepKind::Down {
                humps.push(Hump {
                    up_index: i,
                    run: j - i - 1,
                    down_index: j,
                });
            }
        }
        humps
    }

    /// Humps with no intermediate horizontal steps.
    pub fn peaks(&self) -> Vec<Hump> {
        self.humps().into_iter().filter(|h| h.is_peak()).collect()
    }

    /// Index of the leftmost up step whose starting point lies weakly below
    /// and whose ending point lies weakly above the x-axis.
    pub fn leftmost_crossing_up(&self) -> Option<usize> {
        let mut height = 0i64;
        for (i, &s) in self.steps.iter().enumerate() {
            let next = height + self.rise_of(s);
            if s == StepKind::Up && height <= 0 && next >= 0 {
                return Some(i);
            }
            height = next;
        }
        None
    }

    /// The step endpoint with smallest `x > x0` at height 0, if any.
    pub fn first_return_after(&self, x0: u64) -> Option<LatticePoint> {
        self.endpoints().find(|p| p.x > x0 && p.y == 0)
    }

    /// Among step endpoints with `x > x0`, the one with minimal height;
    /// ties broken toward the largest `x`.
    pub fn rightmost_lowest_after(&self, x0: u64) -> Result<LatticePoint, PathError> {
        let mut best: Option<LatticePoint> = None;
        for p in self.endpoints().filter(|p| p.x > x0) {
            match best {
                Some(b) if p.y > b.y => {}
                _ => best = Some(p),
            }
        }
        best.ok_or(PathError::NoPointsRight { x0 })
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

/// True iff `steps`, read from a fresh origin, form a closed path that never
/// goes below its starting height. Used to validate decomposition segments.
pub(crate) fn is_closed_nonnegative_segment(steps: &[StepKind], k: u32) -> bool {
    let mut height = 0i64;
    for &s in steps {
        height += match s {
            StepKind::Up => i64::from(k),
            StepKind::Down => -1,
            StepKind::Horizontal => 0,
        };
        if height < 0 {
            return false;
        }
    }
    height == 0
}
