//! The major index over lattice words, parameterized by a linear ordering
//! of the step alphabet.
//!
//! A position i (1 <= i <= l-1) of a length-l word is a descent when
//! `w_i > w_{i+1}` under the chosen ordering, and maj is the sum of the
//! descent positions. Every statistic here takes the ordering explicitly;
//! there is no default order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::paths::{LatticeWord, PathFamily, Step};
use crate::qpoly::QPoly;

/// One of the six linear orderings of {E, D, N}, stored smallest first.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct StepOrder {
    ascending: [Step; 3],
}

impl StepOrder {
    pub const EDN: StepOrder = StepOrder { ascending: [Step::E, Step::D, Step::N] };
    pub const END: StepOrder = StepOrder { ascending: [Step::E, Step::N, Step::D] };
    pub const DEN: StepOrder = StepOrder { ascending: [Step::D, Step::E, Step::N] };
    pub const DNE: StepOrder = StepOrder { ascending: [Step::D, Step::N, Step::E] };
    pub const NED: StepOrder = StepOrder { ascending: [Step::N, Step::E, Step::D] };
    pub const NDE: StepOrder = StepOrder { ascending: [Step::N, Step::D, Step::E] };

    /// All six orderings, in a fixed deterministic sequence.
    pub const ALL: [StepOrder; 6] = [
        StepOrder::EDN,
        StepOrder::END,
        StepOrder::DEN,
        StepOrder::DNE,
        StepOrder::NED,
        StepOrder::NDE,
    ];

    pub fn new(ascending: [Step; 3]) -> Result<StepOrder> {
        let mut seen = [false; 3];
        for s in ascending {
            seen[s as usize] = true;
        }
        if seen != [true; 3] {
            return Err(Error::InvalidOrder(
                ascending.iter().map(|s| s.to_char()).collect(),
            ));
        }
        Ok(StepOrder { ascending })
    }

    /// Rank of a step under this ordering: 0 = smallest, 2 = largest.
    pub fn rank(&self, step: Step) -> usize {
        self.ascending
            .iter()
            .position(|&s| s == step)
            .expect("ordering covers all three steps")
    }

    /// True for the EN-class orderings (E < N); false for the NE-class.
    /// The closed forms split exactly along this classification.
    pub fn e_before_n(&self) -> bool {
        self.rank(Step::E) < self.rank(Step::N)
    }
}

impl fmt::Display for StepOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}<{}<{}",
            self.ascending[0].to_char(),
            self.ascending[1].to_char(),
            self.ascending[2].to_char()
        )
    }
}

impl fmt::Debug for StepOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StepOrder({self})")
    }
}

/// Accepts exactly `X<Y<Z` where {X,Y,Z} = {E,D,N}.
impl FromStr for StepOrder {
    type Err = Error;

    fn from_str(text: &str) -> Result<StepOrder> {
        let bad = || Error::InvalidOrder(text.to_string());
        let parts: Vec<&str> = text.split('<').collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(bad());
        };
        let step_of = |p: &str| -> Result<Step> {
            let mut chars = p.chars();
            match (chars.next().and_then(Step::from_char), chars.next()) {
                (Some(s), None) => Ok(s),
                _ => Err(bad()),
            }
        };
        StepOrder::new([step_of(a)?, step_of(b)?, step_of(c)?]).map_err(|_| bad())
    }
}

/// Descent positions of the word: `{ i : w_i > w_{i+1}, 1 <= i <= l-1 }`,
/// in increasing order.
pub fn descent_set(word: &LatticeWord, order: StepOrder) -> Vec<usize> {
    word.steps()
        .windows(2)
        .enumerate()
        .filter(|(_, pair)| order.rank(pair[0]) > order.rank(pair[1]))
        .map(|(i, _)| i + 1)
        .collect()
}

/// The major index: sum of descent positions.
pub fn maj(word: &LatticeWord, order: StepOrder) -> u64 {
    descent_set(word, order).iter().map(|&i| i as u64).sum()
}

/// The generating polynomial of maj over a family: the sum of `q^maj(W)`
/// over every member W. An empty family yields the zero polynomial.
pub fn maj_distribution(family: &PathFamily, order: StepOrder) -> Result<QPoly> {
    let mut counts: Vec<BigUint> = Vec::new();
    for word in family.words()? {
        let m = maj(&word, order) as usize;
        if counts.len() <= m {
            counts.resize(m + 1, BigUint::zero());
        }
        counts[m] += BigUint::one();
    }
    Ok(QPoly::from_coeffs(counts))
}
