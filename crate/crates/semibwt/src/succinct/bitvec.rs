//! Append-only bit vector with incremental rank/select support.
//!
//! The vector is partitioned into superblocks of `beta0` bits carrying
//! absolute zero counts and subblocks of `beta1` bits carrying counts
//! relative to their superblock; select is supported through anchors
//! recorded for every `zeta0`-th one bit. All index parameters are
//! frozen from a capacity hint; growing past the hint re-chooses them by
//! rebuilding, so callers that know the final length pay no rebuild.
//!
//! `rank0(i)`/`rank1(i)` count bits up to and including index `i`;
//! `select1(k)` returns the position of the `(k+1)`-th one bit.

use super::SuccinctError;

#[derive(Debug, Clone)]
pub struct AppendBitVector {
    words: Vec<u64>,
    len: usize,
    zeros: usize,
    capacity: usize,
    beta0: usize,
    beta1: usize,
    zeta0: usize,
    /// zeros in `[0, k*beta0)` for each completed superblock boundary
    rank_super: Vec<u64>,
    /// zeros in `[superblock start, m*beta1)` for each subblock boundary
    rank_sub: Vec<u32>,
    /// position of the one bit with rank `a*zeta0`
    select_index: Vec<u64>,
}

fn index_params(capacity: usize) -> (usize, usize, usize) {
    // ceil(log2 capacity), at least 1
    let lg = (usize::BITS - (capacity.max(2) - 1).leading_zeros()).max(1) as usize;
    let beta1 = lg.div_ceil(2).max(1);
    let beta0 = (lg * lg).div_ceil(beta1) * beta1;
    let zeta0 = lg * lg;
    (beta0, beta1, zeta0)
}

impl AppendBitVector {
    pub fn new() -> Self {
        Self::with_capacity(64)
    }

    pub fn with_capacity(capacity_hint: usize) -> Self {
        let capacity = capacity_hint.max(64);
        let (beta0, beta1, zeta0) = index_params(capacity);
        AppendBitVector {
            words: Vec::with_capacity(capacity.div_ceil(64)),
            len: 0,
            zeros: 0,
            capacity,
            beta0,
            beta1,
            zeta0,
            rank_super: Vec::new(),
            rank_sub: Vec::new(),
            select_index: Vec::new(),
        }
    }

    /// Builds from raw little-endian-within-word bits (bit `i` lives at
    /// `words[i/64] >> (i%64)`), then constructs the rank/select index.
    pub(crate) fn from_raw(words: Vec<u64>, len: usize) -> Self {
        let mut v = AppendBitVector::with_capacity(len);
        v.words = words;
        v.words.resize(len.div_ceil(64), 0);
        if len % 64 != 0 {
            // mask stray bits above len
            let last = v.words.len() - 1;
            v.words[last] &= (1u64 << (len % 64)) - 1;
        }
        v.len = len;
        v.rebuild_index();
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn count_ones(&self) -> usize {
        self.len - self.zeros
    }

    #[inline]
    pub fn count_zeros(&self) -> usize {
        self.zeros
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn push(&mut self, bit: bool) {
        if self.len == self.capacity {
            self.regrow(self.capacity * 2);
        }
        let len = self.len;
        if len % self.beta1 == 0 {
            let sb = len / self.beta0;
            if len % self.beta0 == 0 {
                debug_assert_eq!(self.rank_super.len(), sb);
                self.rank_super.push(self.zeros as u64);
            }
            let rel = self.zeros as u64 - self.rank_super[sb];
            self.rank_sub.push(rel as u32);
        }
        if len % 64 == 0 {
            self.words.push(0);
        }
        if bit {
            let ones = self.len - self.zeros;
            if ones % self.zeta0 == 0 {
                self.select_index.push(len as u64);
            }
            self.words[len / 64] |= 1u64 << (len % 64);
        } else {
            self.zeros += 1;
        }
        self.len += 1;
    }

    fn regrow(&mut self, new_capacity: usize) {
        self.capacity = new_capacity;
        let (b0, b1, z0) = index_params(new_capacity);
        self.beta0 = b0;
        self.beta1 = b1;
        self.zeta0 = z0;
        self.rebuild_index();
    }

    fn rebuild_index(&mut self) {
        self.rank_super.clear();
        self.rank_sub.clear();
        self.select_index.clear();
        self.zeros = 0;
        let mut ones = 0usize;
        for pos in 0..self.len {
            if pos % self.beta1 == 0 {
                let sb = pos / self.beta0;
                if pos % self.beta0 == 0 {
                    self.rank_super.push(self.zeros as u64);
                }
                self.rank_sub
                    .push((self.zeros as u64 - self.rank_super[sb]) as u32);
            }
            if self.get(pos) {
                if ones % self.zeta0 == 0 {
                    self.select_index.push(pos as u64);
                }
                ones += 1;
            } else {
                self.zeros += 1;
            }
        }
    }

    #[inline]
    fn ones_in_range(&self, start: usize, end: usize) -> usize {
        debug_assert!(start <= end && end <= self.len);
        if start == end {
            return 0;
        }
        let (sw, ew) = (start / 64, (end - 1) / 64);
        if sw == ew {
            let m = mask_low(end - sw * 64) & !mask_low(start - sw * 64);
            return (self.words[sw] & m).count_ones() as usize;
        }
        let mut total = (self.words[sw] & !mask_low(start - sw * 64)).count_ones() as usize;
        for w in sw + 1..ew {
            total += self.words[w].count_ones() as usize;
        }
        total += (self.words[ew] & mask_low(end - ew * 64)).count_ones() as usize;
        total
    }

    /// zeros in `[0, pos)`
    fn zeros_before(&self, pos: usize) -> usize {
        if pos == self.len {
            return self.zeros;
        }
        let m = pos / self.beta1;
        let sub_start = m * self.beta1;
        let sb = sub_start / self.beta0;
        let base = self.rank_super[sb] as usize + self.rank_sub[m] as usize;
        base + (pos - sub_start) - self.ones_in_range(sub_start, pos)
    }

    /// Count of zero bits in positions `[0, i]`.
    pub fn rank0(&self, i: usize) -> Result<usize, SuccinctError> {
        if i >= self.len {
            return Err(SuccinctError::RankOutOfRange { i, len: self.len });
        }
        Ok(self.zeros_before(i + 1))
    }

    /// Count of one bits in positions `[0, i]`.
    pub fn rank1(&self, i: usize) -> Result<usize, SuccinctError> {
        Ok(i + 1 - self.rank0(i)?)
    }

    #[inline]
    pub(crate) fn rank1_unchecked(&self, i: usize) -> usize {
        i + 1 - self.zeros_before(i + 1)
    }

    #[inline]
    pub(crate) fn rank0_unchecked(&self, i: usize) -> usize {
        self.zeros_before(i + 1)
    }

    /// Position of the one bit with 0-based rank `k`.
    pub fn select1(&self, k: usize) -> Result<usize, SuccinctError> {
        let ones = self.len - self.zeros;
        if k >= ones {
            return Err(SuccinctError::SelectOutOfRange { k, ones });
        }
        let a = k / self.zeta0;
        let anchor = self.select_index[a] as usize;
        Ok(self.select_scan(anchor, k - a * self.zeta0))
    }

    /// Position of the `skip`-th one bit at or after `from` (0-based).
    fn select_scan(&self, from: usize, mut skip: usize) -> usize {
        let mut wi = from / 64;
        let mut w = self.words[wi] & !mask_low(from % 64);
        loop {
            let c = w.count_ones() as usize;
            if c > skip {
                let mut v = w;
                for _ in 0..skip {
                    v &= v - 1;
                }
                return wi * 64 + v.trailing_zeros() as usize;
            }
            skip -= c;
            wi += 1;
            w = self.words[wi];
        }
    }
}

impl Default for AppendBitVector {
    fn default() -> Self {
        Self::new()
    }
}

#[inline]
fn mask_low(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_str(s: &str, hint: usize) -> AppendBitVector {
        let mut v = AppendBitVector::with_capacity(hint);
        for c in s.chars() {
            v.push(c == '1');
        }
        v
    }

    #[test]
    fn spec_examples() {
        let mut v = AppendBitVector::new();
        v.push(true);
        assert_eq!(v.len(), 1);
        assert_eq!(v.rank0(0).unwrap(), 0);

        let mut v = AppendBitVector::new();
        v.push(false);
        v.push(false);
        assert_eq!(v.rank0(1).unwrap(), 2);

        let v = from_str("10110", 8);
        assert_eq!(v.select1(2).unwrap(), 3);
        assert_eq!(v.rank0(4).unwrap(), 2);
        assert_eq!(v.rank1(0).unwrap(), 1);
        assert_eq!(v.select1(0).unwrap(), 0);
    }

    #[test]
    fn out_of_range_rejected() {
        let v = from_str("10110", 8);
        assert!(v.rank0(5).is_err());
        assert!(v.select1(3).is_err());
    }

    #[test]
    fn matches_naive_scan() {
        // deterministic pseudo-random bits, mixed capacities to force
        // both the exact-hint and the regrow paths
        for (hint, n) in [(1usize, 500usize), (4096, 4096), (100, 3000), (65536, 20000)] {
            let mut v = AppendBitVector::with_capacity(hint);
            let mut bits = Vec::new();
            let mut state = 0x9E3779B97F4A7C15u64 ^ (n as u64);
            for _ in 0..n {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let bit = state >> 62 & 1 == 1;
                bits.push(bit);
                v.push(bit);
            }
            let mut zeros = 0;
            let mut ones_positions = Vec::new();
            for (i, &b) in bits.iter().enumerate() {
                if b {
                    ones_positions.push(i);
                } else {
                    zeros += 1;
                }
                assert_eq!(v.rank0(i).unwrap(), zeros, "rank0({i}) n={n}");
                assert_eq!(v.rank1(i).unwrap(), i + 1 - zeros);
            }
            for (k, &p) in ones_positions.iter().enumerate() {
                assert_eq!(v.select1(k).unwrap(), p, "select1({k}) n={n}");
            }
            assert_eq!(v.count_zeros(), zeros);
        }
    }

    #[test]
    fn from_raw_matches_pushed() {
        let mut pushed = AppendBitVector::with_capacity(300);
        let mut words = vec![0u64; 5];
        for i in 0..300 {
            let bit = (i * 7 + i / 13) % 3 == 0;
            pushed.push(bit);
            if bit {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        let raw = AppendBitVector::from_raw(words, 300);
        for i in 0..300 {
            assert_eq!(raw.rank0(i).unwrap(), pushed.rank0(i).unwrap());
        }
        for k in 0..raw.count_ones() {
            assert_eq!(raw.select1(k).unwrap(), pushed.select1(k).unwrap());
        }
    }
}
