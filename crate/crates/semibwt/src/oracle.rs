//! Brute-force reference implementations.
//!
//! Everything in this module is computed straight from the definitions,
//! sharing no code with the production pipeline. The oracles are the
//! ground truth for the test suite and for the `verify` CLI command;
//! quadratic or worse running time is acceptable here.

/// Compares the circular suffixes starting at `i` and `j`.
///
/// Symbols are compared for up to `2n` positions; two circular suffixes
/// that agree on `n` consecutive symbols are equal as infinite strings, so
/// the remaining tie is broken by start position (smaller index first).
pub fn cmp_circular(text: &[u8], i: usize, j: usize) -> std::cmp::Ordering {
    let n = text.len();
    if i == j {
        return std::cmp::Ordering::Equal;
    }
    for k in 0..2 * n {
        let a = text[(i + k) % n];
        let b = text[(j + k) % n];
        if a != b {
            return a.cmp(&b);
        }
    }
    i.cmp(&j)
}

/// Full circular suffix array by direct sorting.
pub fn naive_circular_sa(text: &[u8]) -> Vec<usize> {
    let mut sa: Vec<usize> = (0..text.len()).collect();
    sa.sort_by(|&i, &j| cmp_circular(text, i, j));
    sa
}

/// BWT by definition: position `i` holds the symbol preceding the i-th
/// smallest circular suffix.
pub fn naive_bwt(text: &[u8]) -> Vec<u8> {
    let n = text.len();
    naive_circular_sa(text)
        .iter()
        .map(|&a| text[(a + n - 1) % n])
        .collect()
}

/// Longest common prefix of the circular suffixes at `i` and `j`, capped
/// at `2n` (distinct circular suffixes of a primitive text differ within
/// that many symbols).
pub fn naive_circular_lcp(text: &[u8], i: usize, j: usize) -> usize {
    let n = text.len();
    for k in 0..2 * n {
        if text[(i + k) % n] != text[(j + k) % n] {
            return k;
        }
    }
    2 * n
}

/// Gap array for splitting the text at `split`: `G[r]` counts suffixes
/// starting in `[split, n)` for which exactly `r` suffixes starting in
/// `[0, split)` are smaller.
pub fn naive_gap(text: &[u8], split: usize) -> Vec<u64> {
    let n = text.len();
    let mut gap = vec![0u64; split + 1];
    for right in split..n {
        let rank = (0..split)
            .filter(|&left| cmp_circular(text, left, right) == std::cmp::Ordering::Less)
            .count();
        gap[rank] += 1;
    }
    gap
}

/// Border array by definition: `B[i]` is the length of the longest proper
/// prefix of `w[0..=i]` that is also a suffix of it.
pub fn naive_borders(w: &[u8]) -> Vec<usize> {
    (0..w.len())
        .map(|i| {
            (1..=i)
                .rev()
                .find(|&len| w[..len] == w[i + 1 - len..=i])
                .unwrap_or(0)
        })
        .collect()
}

/// Sorted order and LCP array of the circular suffixes whose start lies
/// in `block` (half-open), by direct comparison.
pub fn naive_block_lcp(text: &[u8], block: std::ops::Range<usize>) -> (Vec<usize>, Vec<usize>) {
    let mut sa: Vec<usize> = block.collect();
    sa.sort_by(|&i, &j| cmp_circular(text, i, j));
    let mut lcp = vec![0usize];
    for w in sa.windows(2) {
        lcp.push(naive_circular_lcp(text, w[0], w[1]));
    }
    (sa, lcp)
}

/// Smallest period of `w` by definition, i.e. the smallest `p >= 1` with
/// `w[i] == w[i+p]` for all valid `i`.
pub fn naive_minimal_period(w: &[u8]) -> usize {
    (1..=w.len())
        .find(|&p| (0..w.len().saturating_sub(p)).all(|i| w[i] == w[i + p]))
        .unwrap_or(w.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn banana_suffix_array() {
        assert_eq!(naive_circular_sa(b"banana"), vec![5, 3, 1, 0, 4, 2]);
    }

    #[test]
    fn equal_suffixes_ordered_by_index() {
        assert_eq!(naive_circular_sa(b"aaa"), vec![0, 1, 2]);
        assert_eq!(naive_circular_sa(b"ab"), vec![0, 1]);
    }

    #[test]
    fn banana_bwt() {
        assert_eq!(naive_bwt(b"banana"), b"nnbaaa".to_vec());
    }

    #[test]
    fn power_bwt_has_repeated_symbols() {
        assert_eq!(naive_bwt(b"abab"), b"bbaa".to_vec());
        assert_eq!(naive_bwt(b"a"), b"a".to_vec());
    }

    #[test]
    fn banana_gap_at_three() {
        assert_eq!(naive_gap(b"banana", 3), vec![2, 0, 1, 0]);
    }

    #[test]
    fn borders_of_small_strings() {
        assert_eq!(naive_borders(b"abaab"), vec![0, 0, 1, 1, 2]);
        assert_eq!(naive_borders(b"aaaa"), vec![0, 1, 2, 3]);
        assert_eq!(naive_borders(b"abc"), vec![0, 0, 0]);
    }

    #[test]
    fn minimal_periods() {
        assert_eq!(naive_minimal_period(b"abab"), 2);
        assert_eq!(naive_minimal_period(b"abc"), 3);
        assert_eq!(naive_minimal_period(b"aaaaaa"), 1);
    }
}
