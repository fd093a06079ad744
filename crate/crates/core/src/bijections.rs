//! The depth-pivot bijection from bad square paths onto `Del(n+1,n-1,l)`,
//! its inverse, and the flawed single-letter map it replaces.
//!
//! For a bad path the pivot is the first deepest step (necessarily an N);
//! for the inverse direction it is the step after the last deepest prefix,
//! where the empty prefix counts with depth 0 (necessarily an E). Three of
//! the six step orderings replace the pivot letter alone; the other three
//! rewrite the maximal diagonal block around it, which is what keeps the
//! descent positions under control.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::paths::{LatticeWord, PathFamily, Step};
use crate::stats::{maj, StepOrder};

/// The maximal run of D steps hugging a pivot position.
///
/// `r` of them immediately precede position `k` and `s` immediately follow
/// it, with non-D steps (or the word boundary) on both flanks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BlockDecomposition {
    /// 1-based pivot position.
    pub k: usize,
    /// Length of the D-run directly before the pivot.
    pub r: usize,
    /// Length of the D-run directly after the pivot.
    pub s: usize,
}

impl BlockDecomposition {
    /// Inclusive 1-based index interval `[k-r, k+s]` covered by the block.
    pub fn span(&self) -> (usize, usize) {
        (self.k - self.r, self.k + self.s)
    }
}

/// Which rewrite a step ordering selects.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RewriteCase {
    /// Replace the pivot letter alone (orders E<D<N, N<E<D, D<N<E).
    Pivot,
    /// Rewrite the whole diagonal block around the pivot
    /// (orders E<N<D, D<E<N, N<D<E).
    Block,
}

impl RewriteCase {
    pub fn for_order(order: StepOrder) -> RewriteCase {
        if order == StepOrder::EDN || order == StepOrder::NED || order == StepOrder::DNE {
            RewriteCase::Pivot
        } else {
            RewriteCase::Block
        }
    }
}

impl fmt::Display for RewriteCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteCase::Pivot => write!(f, "pivot"),
            RewriteCase::Block => write!(f, "block"),
        }
    }
}

/// Diagnostic record of a single forward or inverse application.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PhiTrace {
    pub k: usize,
    pub r: usize,
    pub s: usize,
    pub case: RewriteCase,
    pub maj_before: u64,
    pub maj_after: u64,
}

/// Smallest 1-based position whose prefix depth attains the maximum over
/// all step positions.
pub fn first_deepest(word: &LatticeWord) -> Result<usize> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let profile = word.depth_profile();
    let deepest = *profile.iter().max().expect("word is nonempty");
    Ok(profile
        .iter()
        .position(|&d| d == deepest)
        .expect("maximum is attained")
        + 1)
}

/// Returns k such that k-1 is the largest index in {0, ..., l} whose
/// prefix depth attains the maximum, with the empty prefix counting as
/// depth 0. For endpoints strictly below the diagonal k <= l always holds.
pub fn last_deepest_predecessor(word: &LatticeWord) -> usize {
    let mut best_index = 0usize;
    let mut best = 0i64;
    let mut depth = 0i64;
    for (i, step) in word.steps().iter().enumerate() {
        depth += step.depth_delta();
        if depth >= best {
            best = depth;
            best_index = i + 1;
        }
    }
    best_index + 1
}

/// Maximal D-runs on both sides of position `k` (1-based).
pub fn block_around(word: &LatticeWord, k: usize) -> Result<BlockDecomposition> {
    let steps = word.steps();
    if k == 0 || k > steps.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: steps.len(),
        });
    }
    let mut r = 0;
    while k - r > 1 && steps[k - r - 2] == Step::D {
        r += 1;
    }
    let mut s = 0;
    while k + s < steps.len() && steps[k + s] == Step::D {
        s += 1;
    }
    Ok(BlockDecomposition { k, r, s })
}

fn require_bad(word: &LatticeWord) -> Result<()> {
    let (x, y) = word.endpoint();
    if x != y {
        return Err(Error::NotABadPath(format!(
            "endpoint ({x}, {y}) is off the diagonal"
        )));
    }
    if !word.is_bad(x as i64)? {
        return Err(Error::NotABadPath(format!(
            "{word} never rises above the diagonal"
        )));
    }
    Ok(())
}

/// Maps a bad path in `Del(n,n,l)` into `Del(n+1,n-1,l)`, keeping the
/// length and the number of D steps and turning exactly one N into an E.
/// maj drops by 1 under the EN-class orderings and is preserved under the
/// NE-class ones.
pub fn phi(word: &LatticeWord, order: StepOrder) -> Result<LatticeWord> {
    phi_with_trace(word, order).map(|(image, _)| image)
}

/// [`phi`] plus the pivot/block data and maj values, for diagnostics.
pub fn phi_with_trace(word: &LatticeWord, order: StepOrder) -> Result<(LatticeWord, PhiTrace)> {
    require_bad(word)?;
    let k = first_deepest(word)?;
    debug_assert_eq!(word.steps()[k - 1], Step::N);
    let block = block_around(word, k)?;
    let case = RewriteCase::for_order(order);
    let mut steps = word.steps().to_vec();
    match case {
        RewriteCase::Pivot => {
            steps[k - 1] = Step::E;
        }
        RewriteCase::Block => {
            let (lo, hi) = block.span();
            let mut replacement = Vec::with_capacity(hi - lo + 1);
            if block.r >= 1 {
                replacement.extend(std::iter::repeat_n(Step::D, block.r - 1));
                replacement.push(Step::E);
                replacement.extend(std::iter::repeat_n(Step::D, block.s + 1));
            } else {
                replacement.extend(std::iter::repeat_n(Step::D, block.s));
                replacement.push(Step::E);
            }
            steps.splice(lo - 1..hi, replacement);
        }
    }
    let image = LatticeWord::new(steps);
    let trace = PhiTrace {
        k,
        r: block.r,
        s: block.s,
        case,
        maj_before: maj(word, order),
        maj_after: maj(&image, order),
    };
    Ok((image, trace))
}

/// Inverse of [`phi`]: maps `Del(n+1,n-1,l)` back onto the bad paths in
/// `Del(n,n,l)`.
pub fn phi_inverse(word: &LatticeWord, order: StepOrder) -> Result<LatticeWord> {
    phi_inverse_with_trace(word, order).map(|(image, _)| image)
}

/// [`phi_inverse`] plus the pivot/block data and maj values.
pub fn phi_inverse_with_trace(
    word: &LatticeWord,
    order: StepOrder,
) -> Result<(LatticeWord, PhiTrace)> {
    let (x, y) = word.endpoint();
    if x != y + 2 {
        return Err(Error::WrongEndpoint(x, y));
    }
    let k = last_deepest_predecessor(word);
    debug_assert!(k <= word.len(), "final depth -2 lies below the maximum");
    debug_assert_eq!(word.steps()[k - 1], Step::E);
    let block = block_around(word, k)?;
    let case = RewriteCase::for_order(order);
    let mut steps = word.steps().to_vec();
    match case {
        RewriteCase::Pivot => {
            steps[k - 1] = Step::N;
        }
        RewriteCase::Block => {
            let (lo, hi) = block.span();
            let mut replacement = Vec::with_capacity(hi - lo + 1);
            if block.s >= 1 {
                replacement.extend(std::iter::repeat_n(Step::D, block.r + 1));
                replacement.push(Step::N);
                replacement.extend(std::iter::repeat_n(Step::D, block.s - 1));
            } else {
                replacement.push(Step::N);
                replacement.extend(std::iter::repeat_n(Step::D, block.r));
            }
            steps.splice(lo - 1..hi, replacement);
        }
    }
    let image = LatticeWord::new(steps);
    let trace = PhiTrace {
        k,
        r: block.r,
        s: block.s,
        case,
        maj_before: maj(word, order),
        maj_after: maj(&image, order),
    };
    Ok((image, trace))
}

/// The flawed single-letter map: finds the first step that rises above the
/// diagonal, walks to the end of the N-run it starts, and replaces that
/// letter with E. Order-independent, and famously not injective.
pub fn psi(word: &LatticeWord) -> Result<LatticeWord> {
    require_bad(word)?;
    let profile = word.depth_profile();
    let first_above = profile
        .iter()
        .position(|&d| d >= 1)
        .expect("bad paths rise above the diagonal");
    let steps = word.steps();
    debug_assert_eq!(steps[first_above], Step::N);
    let mut j = first_above;
    while j + 1 < steps.len() && steps[j + 1] == Step::N {
        j += 1;
    }
    let mut new_steps = steps.to_vec();
    new_steps[j] = Step::E;
    Ok(LatticeWord::new(new_steps))
}

/// Two or more bad paths sharing one image under [`psi`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CollisionGroup {
    pub image: LatticeWord,
    pub preimages: Vec<LatticeWord>,
}

/// All collision groups of [`psi`] over the bad paths in `Del(n,n,l)`,
/// keyed and sorted by image in canonical enumeration order. An empty
/// result means the map is injective on this family.
pub fn psi_collisions(n: i64, l: i64) -> Result<Vec<CollisionGroup>> {
    let mut by_image: BTreeMap<LatticeWord, Vec<LatticeWord>> = BTreeMap::new();
    for word in (PathFamily::BDel { n, l }).words()? {
        let image = psi(&word)?;
        by_image.entry(image).or_default().push(word);
    }
    Ok(by_image
        .into_iter()
        .filter(|(_, preimages)| preimages.len() >= 2)
        .map(|(image, preimages)| CollisionGroup { image, preimages })
        .collect())
}
