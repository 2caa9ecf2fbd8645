//! Input text, circular suffix semantics and block planning.
//!
//! The text `t` of length `n` is extended to the semi-infinite string
//! `t~` with `t~[i] = t[i mod n]`; all suffix comparisons in this crate
//! are over `t~`, with ties between equal infinite suffixes broken by
//! smaller start index. The block planner derives a final block size `b`
//! from a target size `b'` so that the text splits into `mu` blocks of
//! size `b` followed by `nu - mu` blocks of size `b - 1`.

use std::fmt;
use std::ops::Range;
use std::path::Path;
use std::sync::Arc;

#[derive(Debug)]
pub enum TextError {
    Empty,
    BadBlockTarget { b_target: usize, n: usize },
    Io(std::io::Error),
}

impl fmt::Display for TextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TextError::Empty => write!(f, "input text must be non-empty"),
            TextError::BadBlockTarget { b_target, n } => {
                write!(f, "block size target {b_target} out of range 1..={n}")
            }
            TextError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for TextError {}

impl From<std::io::Error> for TextError {
    fn from(e: std::io::Error) -> Self {
        TextError::Io(e)
    }
}

/// Immutable input text over the byte alphabet.
///
/// `sigma` is `max symbol value + 1`, matching the finite-alphabet
/// assumption without any remapping pass. Cloning is cheap: the bytes are
/// shared.
#[derive(Clone)]
pub struct Text {
    data: Arc<Vec<u8>>,
    sigma: u32,
}

impl Text {
    pub fn new(data: Vec<u8>) -> Result<Self, TextError> {
        if data.is_empty() {
            return Err(TextError::Empty);
        }
        let sigma = u32::from(*data.iter().max().expect("non-empty")) + 1;
        Ok(Text {
            data: Arc::new(data),
            sigma,
        })
    }

    /// Reads the raw bytes of a file; no interpretation of encoding or
    /// line endings.
    pub fn from_file(path: &Path) -> Result<Self, TextError> {
        Text::new(std::fs::read(path)?)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.data.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Alphabet size upper bound: `max symbol + 1`.
    #[inline]
    pub fn sigma(&self) -> u32 {
        self.sigma
    }

    #[inline]
    pub fn bytes(&self) -> &[u8] {
        &self.data
    }

    /// `t~[i] = t[i mod n]`, defined for any `i`.
    #[inline]
    pub fn circular_char(&self, i: usize) -> u8 {
        self.data[i % self.data.len()]
    }

    /// Copies `len` symbols of `t~` starting at `start` into `out`.
    pub fn fill_circular(&self, start: usize, out: &mut [u8]) {
        let n = self.data.len();
        let mut pos = start % n;
        for slot in out.iter_mut() {
            *slot = self.data[pos];
            pos += 1;
            if pos == n {
                pos = 0;
            }
        }
    }

    /// Histogram of the symbols in the (non-circular) index range.
    pub fn histogram(&self, range: Range<usize>) -> Vec<u64> {
        let mut hist = vec![0u64; self.sigma as usize];
        for &c in &self.data[range] {
            hist[c as usize] += 1;
        }
        hist
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Text(n={}, sigma={})", self.data.len(), self.sigma)
    }
}

/// Partition of `[0, n)` into `nu` contiguous blocks: `mu` of size `b`
/// followed by `nu - mu` of size `b - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPlan {
    pub n: usize,
    pub b_target: usize,
    pub b: usize,
    pub nu: usize,
    pub mu: usize,
    pub boundaries: Vec<Range<usize>>,
}

impl BlockPlan {
    #[inline]
    pub fn block(&self, i: usize) -> Range<usize> {
        self.boundaries[i].clone()
    }

    #[inline]
    pub fn block_len(&self, i: usize) -> usize {
        self.boundaries[i].len()
    }

    /// Index of the block containing text position `pos` (taken mod n).
    pub fn block_of(&self, pos: usize) -> usize {
        let pos = pos % self.n;
        let mu_end = self.mu * self.b;
        if pos < mu_end {
            pos / self.b
        } else {
            self.mu + (pos - mu_end) / (self.b - 1)
        }
    }
}

/// Derives the final block size and partition from a target block size.
///
/// The final size is `b = ceil(n / ceil(n / b_target))`, the smallest
/// size keeping the block count of the target, then clamped to at least 2
/// so that the block extension machinery stays well defined. Texts split
/// into `mu` blocks of size `b` followed by blocks of size `b - 1`.
pub fn plan_blocks(n: usize, b_target: usize) -> Result<BlockPlan, TextError> {
    if n == 0 {
        return Err(TextError::Empty);
    }
    if b_target == 0 || b_target > n {
        return Err(TextError::BadBlockTarget { b_target, n });
    }
    let b_target = b_target.max(2.min(n));
    let nu = n.div_ceil(b_target);
    let b = n.div_ceil(nu);
    debug_assert!(b <= b_target && n.div_ceil(b) == nu);
    // mu' = nu*b - n blocks of size b-1, the rest of size b
    let mu_small = nu * b - n;
    let mu = nu - mu_small;
    let mut boundaries = Vec::with_capacity(nu);
    let mut start = 0;
    for i in 0..nu {
        let len = if i < mu { b } else { b - 1 };
        boundaries.push(start..start + len);
        start += len;
    }
    debug_assert_eq!(start, n);
    Ok(BlockPlan {
        n,
        b_target,
        b,
        nu,
        mu,
        boundaries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plan_examples() {
        let p = plan_blocks(10, 4).unwrap();
        assert_eq!((p.b, p.nu, p.mu), (4, 3, 1));
        assert_eq!(p.boundaries, vec![0..4, 4..7, 7..10]);

        let p = plan_blocks(6, 6).unwrap();
        assert_eq!((p.b, p.nu, p.mu), (6, 1, 1));
        assert_eq!(p.boundaries, vec![0..6]);

        let p = plan_blocks(9, 3).unwrap();
        assert_eq!((p.b, p.nu, p.mu), (3, 3, 3));
        assert_eq!(p.boundaries, vec![0..3, 3..6, 6..9]);
    }

    #[test]
    fn plan_rejects_bad_targets() {
        assert!(plan_blocks(10, 0).is_err());
        assert!(plan_blocks(10, 11).is_err());
        assert!(plan_blocks(0, 1).is_err());
    }

    #[test]
    fn plan_invariants_exhaustive() {
        for n in 1..=64usize {
            for b_target in 1..=n {
                let p = plan_blocks(n, b_target).unwrap();
                assert_eq!(p.boundaries.len(), p.nu);
                let total: usize = p.boundaries.iter().map(|r| r.len()).sum();
                assert_eq!(total, n);
                let mut expect_start = 0;
                for (i, r) in p.boundaries.iter().enumerate() {
                    assert_eq!(r.start, expect_start);
                    expect_start = r.end;
                    let want = if i < p.mu { p.b } else { p.b - 1 };
                    assert_eq!(r.len(), want);
                }
                if b_target >= 2 {
                    assert!(p.b <= b_target);
                    assert_eq!(p.nu, n.div_ceil(b_target));
                }
                // determinism
                assert_eq!(p, plan_blocks(n, b_target).unwrap());
                // block_of agrees with the boundary list
                for (i, r) in p.boundaries.iter().enumerate() {
                    for pos in r.clone() {
                        assert_eq!(p.block_of(pos), i);
                    }
                }
            }
        }
    }

    #[test]
    fn circular_char_wraps() {
        let t = Text::new(b"banana".to_vec()).unwrap();
        assert_eq!(t.circular_char(0), b'b');
        assert_eq!(t.circular_char(6), b'b');
        assert_eq!(t.circular_char(11), b'a');
        assert_eq!(t.sigma(), u32::from(b'n') + 1);
    }

    #[test]
    fn fill_circular_wraps() {
        let t = Text::new(b"abc".to_vec()).unwrap();
        let mut buf = [0u8; 7];
        t.fill_circular(2, &mut buf);
        assert_eq!(&buf, b"cabcabc");
    }

    #[test]
    fn empty_text_rejected() {
        assert!(Text::new(Vec::new()).is_err());
    }
}
