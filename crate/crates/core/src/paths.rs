//! Lattice words over the step alphabet {E, D, N} and the path families
//! built from them: Delannoy paths `Del(m,n,l)`, Schröder paths `Sch(n,l)`
//! (Delannoy paths to `(n,n)` that never rise above the diagonal), and the
//! "bad" square paths `BDel(n,n,l)` that do.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One lattice move: E = (1,0), D = (1,1), N = (0,1).
///
/// The derived ordering E < D < N is the fixed internal letter order used
/// for canonical enumeration. It is unrelated to the step orderings that
/// parameterize the maj statistic.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    E,
    D,
    N,
}

impl Step {
    /// Coordinate displacement of the step.
    pub fn displacement(self) -> (u64, u64) {
        match self {
            Step::E => (1, 0),
            Step::D => (1, 1),
            Step::N => (0, 1),
        }
    }

    /// Contribution of the step to the depth statistic (#N - #E).
    pub fn depth_delta(self) -> i64 {
        match self {
            Step::E => -1,
            Step::D => 0,
            Step::N => 1,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Step::E => 'E',
            Step::D => 'D',
            Step::N => 'N',
        }
    }

    pub fn from_char(ch: char) -> Option<Step> {
        match ch {
            'E' => Some(Step::E),
            'D' => Some(Step::D),
            'N' => Some(Step::N),
            _ => None,
        }
    }
}

/// A finite word `w_1 w_2 ... w_l` over {E, D, N}, read as a lattice path
/// from the origin. Positions are 1-based throughout the crate.
///
/// The derived ordering is lexicographic over the internal letter order,
/// which makes sorted collections of words match the canonical enumeration
/// order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticeWord {
    steps: Vec<Step>,
}

impl LatticeWord {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticeWord { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The step at 1-based position `i`.
    pub fn step(&self, i: usize) -> Result<Step> {
        if i == 0 || i > self.steps.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.steps.len(),
            });
        }
        Ok(self.steps[i - 1])
    }

    /// Endpoint of the path: componentwise sum of step displacements.
    pub fn endpoint(&self) -> (u64, u64) {
        self.steps.iter().fold((0, 0), |(x, y), s| {
            let (dx, dy) = s.displacement();
            (x + dx, y + dy)
        })
    }

    /// Depths of positions 1..=l: entry `i-1` is (#N - #E) over the prefix
    /// `w_1 ... w_i`. The empty prefix `w_0` has depth 0 by convention and
    /// is not stored.
    pub fn depth_profile(&self) -> Vec<i64> {
        self.steps
            .iter()
            .scan(0i64, |depth, s| {
                *depth += s.depth_delta();
                Some(*depth)
            })
            .collect()
    }

    /// Largest prefix depth, with the empty prefix counting as 0.
    pub fn max_depth(&self) -> i64 {
        self.depth_profile().into_iter().max().unwrap_or(0).max(0)
    }

    /// True iff the path ends at `(n, n)` and never rises above the
    /// diagonal (every prefix depth is <= 0).
    pub fn is_schroeder(&self, n: i64) -> bool {
        n >= 0
            && self.endpoint() == (n as u64, n as u64)
            && self.depth_profile().iter().all(|&d| d <= 0)
    }

    /// True iff the path rises above the diagonal (some prefix depth is
    /// >= 1). Requires the endpoint to be `(n, n)`.
    pub fn is_bad(&self, n: i64) -> Result<bool> {
        let (x, y) = self.endpoint();
        if n < 0 || (x, y) != (n as u64, n as u64) {
            return Err(Error::NotASquarePath(x, y));
        }
        Ok(self.depth_profile().iter().any(|&d| d >= 1))
    }
}

impl fmt::Display for LatticeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for LatticeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "LatticeWord(\u{3b5})")
        } else {
            write!(f, "LatticeWord({self})")
        }
    }
}

impl FromStr for LatticeWord {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut steps = Vec::with_capacity(text.len());
        for (i, ch) in text.chars().enumerate() {
            let step = Step::from_char(ch).ok_or(Error::InvalidCharacter {
                ch,
                position: i + 1,
            })?;
            steps.push(step);
        }
        Ok(LatticeWord { steps })
    }
}

/// Maps each character E/D/N to its step; the empty string parses to the
/// empty word. Fails with the 1-based position of the first bad character.
pub fn parse_word(text: &str) -> Result<LatticeWord> {
    text.parse()
}

/// A family of lattice paths with fixed endpoint and step count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PathFamily {
    /// Delannoy paths from (0,0) to (m,n) with l steps.
    Del { m: i64, n: i64, l: i64 },
    /// Schröder paths: Delannoy paths to (n,n) with l steps that never
    /// rise above the diagonal.
    Sch { n: i64, l: i64 },
    /// Bad paths: Delannoy paths to (n,n) with l steps that do rise above
    /// the diagonal.
    BDel { n: i64, l: i64 },
}

/// Step multiplicities forced by a family's parameters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StepCounts {
    pub east: usize,
    pub diagonal: usize,
    pub north: usize,
}

impl PathFamily {
    /// Endpoint and length parameters as (m, n, l).
    fn parameters(&self) -> (i64, i64, i64) {
        match *self {
            PathFamily::Del { m, n, l } => (m, n, l),
            PathFamily::Sch { n, l } | PathFamily::BDel { n, l } => (n, n, l),
        }
    }

    /// Number of E/D/N steps in every member word. The endpoint and step
    /// count force `#E = l - n`, `#N = l - m`, `#D = m + n - l`; a negative
    /// count means the family parameters are contradictory.
    pub fn step_counts(&self) -> Result<StepCounts> {
        let (m, n, l) = self.parameters();
        let east = l - n;
        let north = l - m;
        let diagonal = m + n - l;
        if east < 0 || north < 0 || diagonal < 0 {
            return Err(Error::InvalidFamily(format!(
                "{self} requires step counts #E={east}, #D={diagonal}, #N={north}"
            )));
        }
        Ok(StepCounts {
            east: east as usize,
            diagonal: diagonal as usize,
            north: north as usize,
        })
    }

    /// Streams every member exactly once, in lexicographic order over the
    /// internal letter order E < D < N. An in-range family with no members
    /// (for example BDel(n, n) -- the all-diagonal path is never bad)
    /// yields an empty sequence.
    pub fn words(&self) -> Result<FamilyIter> {
        let counts = self.step_counts()?;
        let filter = match *self {
            PathFamily::Del { .. } => MemberFilter::All,
            PathFamily::Sch { .. } => MemberFilter::BelowDiagonal,
            PathFamily::BDel { .. } => MemberFilter::AboveDiagonal,
        };
        let mut word = Vec::with_capacity(counts.east + counts.diagonal + counts.north);
        word.extend(std::iter::repeat_n(Step::E, counts.east));
        word.extend(std::iter::repeat_n(Step::D, counts.diagonal));
        word.extend(std::iter::repeat_n(Step::N, counts.north));
        Ok(FamilyIter {
            word,
            filter,
            state: IterState::Fresh,
        })
    }

    /// Number of members; zero for an invalid family.
    pub fn count(&self) -> usize {
        self.words().map(Iterator::count).unwrap_or(0)
    }
}

/// Designator syntax: `del:m,n,l`, `sch:n,l`, `bdel:n,l`.
impl FromStr for PathFamily {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(format!(
            "\"{text}\" (expected del:m,n,l or sch:n,l or bdel:n,l)"
        ));
        let (kind, params) = text.split_once(':').ok_or_else(bad)?;
        let nums: Vec<i64> = params
            .split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let family = match (kind, nums.as_slice()) {
            ("del", &[m, n, l]) => PathFamily::Del { m, n, l },
            ("sch", &[n, l]) => PathFamily::Sch { n, l },
            ("bdel", &[n, l]) => PathFamily::BDel { n, l },
            _ => return Err(bad()),
        };
        // Reject contradictory parameters eagerly.
        family.step_counts()?;
        Ok(family)
    }
}

impl fmt::Display for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PathFamily::Del { m, n, l } => write!(f, "del:{m},{n},{l}"),
            PathFamily::Sch { n, l } => write!(f, "sch:{n},{l}"),
            PathFamily::BDel { n, l } => write!(f, "bdel:{n},{l}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum MemberFilter {
    All,
    BelowDiagonal,
    AboveDiagonal,
}

impl MemberFilter {
    fn admits(self, steps: &[Step]) -> bool {
        match self {
            MemberFilter::All => true,
            MemberFilter::BelowDiagonal => prefix_depths_bounded(steps, 0),
            MemberFilter::AboveDiagonal => !prefix_depths_bounded(steps, 0),
        }
    }
}

fn prefix_depths_bounded(steps: &[Step], bound: i64) -> bool {
    let mut depth = 0i64;
    for s in steps {
        depth += s.depth_delta();
        if depth > bound {
            return false;
        }
    }
    true
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum IterState {
    Fresh,
    Running,
    Done,
}

/// Lazy lexicographic enumeration of a path family.
#[derive(Clone, Debug)]
pub struct FamilyIter {
    word: Vec<Step>,
    filter: MemberFilter,
    state: IterState,
}

impl Iterator for FamilyIter {
    type Item = LatticeWord;

    fn next(&mut self) -> Option<LatticeWord> {
        loop {
            match self.state {
                IterState::Done => return None,
                IterState::Fresh => self.state = IterState::Running,
                IterState::Running => {
                    if !next_multiset_permutation(&mut self.word) {
                        self.state = IterState::Done;
                        return None;
                    }
                }
            }
            if self.filter.admits(&self.word) {
                return Some(LatticeWord::new(self.word.clone()));
            }
        }
    }
}

/// Advances `steps` to its lexicographic successor among rearrangements of
/// the same multiset; returns false from the final (descending) one.
fn next_multiset_permutation(steps: &mut [Step]) -> bool {
    if steps.len() < 2 {
        return false;
    }
    let mut i = steps.len() - 1;
    while i > 0 && steps[i - 1] >= steps[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = steps.len() - 1;
    while steps[j] <= steps[i - 1] {
        j -= 1;
    }
    steps.swap(i - 1, j);
    steps[i..].reverse();
    true
}
