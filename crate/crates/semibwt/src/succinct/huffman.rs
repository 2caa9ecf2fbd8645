//! Canonical Huffman codes over byte-ish alphabets.
//!
//! Codes are deterministic: leaves are merged with ties broken by symbol
//! value, and codewords are assigned canonically (shorter codes first,
//! ties by symbol value), so equal histograms always yield bit-identical
//! codes. A single-symbol alphabet gets a 1-bit codeword.

use std::collections::VecDeque;
use std::io;

use super::bits::{BitRead, BitWrite};
use super::SuccinctError;

const MAX_CODE_LEN: u8 = 60;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HuffmanCode {
    /// Codeword length per symbol; 0 marks an unused symbol.
    lengths: Vec<u8>,
    /// Canonical codeword value per symbol (valid where length > 0).
    codes: Vec<u64>,
    max_len: u8,
    /// Symbols ordered by (length, symbol) — the canonical order.
    sorted_symbols: Vec<u16>,
    /// Per length: canonical value of the first code of that length.
    first_code: Vec<u64>,
    /// Per length: index into `sorted_symbols` of that first code.
    first_index: Vec<usize>,
    /// Per length: number of codewords of that length.
    counts: Vec<u64>,
}

impl HuffmanCode {
    /// Builds the optimal prefix-free code for `histogram` (indexed by
    /// symbol value). Rejects an all-zero histogram; code lengths above
    /// 60 bits (unreachable for realistic inputs) are rejected too.
    pub fn build(histogram: &[u64]) -> Result<Self, SuccinctError> {
        let mut leaves: Vec<(u64, u16)> = histogram
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(s, &c)| (c, s as u16))
            .collect();
        if leaves.is_empty() {
            return Err(SuccinctError::EmptyHistogram);
        }
        let mut lengths = vec![0u8; histogram.len()];
        if leaves.len() == 1 {
            lengths[leaves[0].1 as usize] = 1;
            return Self::from_lengths(lengths);
        }
        leaves.sort_unstable();
        // two-queue merge: leaves ascending, internal nodes created in
        // nondecreasing weight order
        #[derive(Clone)]
        struct Node {
            weight: u64,
            kids: Option<(usize, usize)>,
            symbol: u16,
        }
        let mut nodes: Vec<Node> = leaves
            .iter()
            .map(|&(w, s)| Node {
                weight: w,
                kids: None,
                symbol: s,
            })
            .collect();
        let mut q1: VecDeque<usize> = (0..nodes.len()).collect();
        let mut q2: VecDeque<usize> = VecDeque::new();
        let take = |q1: &mut VecDeque<usize>, q2: &mut VecDeque<usize>, nodes: &Vec<Node>| {
            match (q1.front(), q2.front()) {
                (Some(&a), Some(&b)) => {
                    if nodes[a].weight <= nodes[b].weight {
                        q1.pop_front().unwrap()
                    } else {
                        q2.pop_front().unwrap()
                    }
                }
                (Some(_), None) => q1.pop_front().unwrap(),
                (None, Some(_)) => q2.pop_front().unwrap(),
                (None, None) => unreachable!(),
            }
        };
        while q1.len() + q2.len() > 1 {
            let a = take(&mut q1, &mut q2, &nodes);
            let b = take(&mut q1, &mut q2, &nodes);
            let w = nodes[a].weight + nodes[b].weight;
            nodes.push(Node {
                weight: w,
                kids: Some((a, b)),
                symbol: 0,
            });
            q2.push_back(nodes.len() - 1);
        }
        let root = q2.pop_front().unwrap();
        let mut stack = vec![(root, 0u8)];
        while let Some((idx, depth)) = stack.pop() {
            match nodes[idx].kids {
                Some((a, b)) => {
                    if depth == MAX_CODE_LEN {
                        return Err(SuccinctError::CodeTooLong);
                    }
                    stack.push((a, depth + 1));
                    stack.push((b, depth + 1));
                }
                None => lengths[nodes[idx].symbol as usize] = depth,
            }
        }
        Self::from_lengths(lengths)
    }

    /// Reconstructs the canonical code from per-symbol lengths (the
    /// serialized form used by the file formats).
    pub fn from_lengths(lengths: Vec<u8>) -> Result<Self, SuccinctError> {
        let mut order: Vec<u16> = (0..lengths.len() as u16)
            .filter(|&s| lengths[s as usize] > 0)
            .collect();
        if order.is_empty() {
            return Err(SuccinctError::EmptyHistogram);
        }
        order.sort_unstable_by_key(|&s| (lengths[s as usize], s));
        let max_len = lengths[*order.last().unwrap() as usize];
        if max_len > MAX_CODE_LEN {
            return Err(SuccinctError::CodeTooLong);
        }
        // Kraft check: complete on the used set, except the 1-symbol code
        let kraft: u64 = order
            .iter()
            .map(|&s| 1u64 << (max_len - lengths[s as usize]))
            .sum();
        let complete = kraft == 1u64 << max_len;
        if !(complete || (order.len() == 1 && lengths[order[0] as usize] == 1)) {
            return Err(SuccinctError::BadCodeLengths);
        }
        let mut counts = vec![0u64; max_len as usize + 1];
        for &s in &order {
            counts[lengths[s as usize] as usize] += 1;
        }
        let mut first_code = vec![0u64; max_len as usize + 1];
        let mut first_index = vec![0usize; max_len as usize + 1];
        let mut code = 0u64;
        let mut index = 0usize;
        for l in 1..=max_len as usize {
            first_code[l] = code;
            first_index[l] = index;
            code = (code + counts[l]) << 1;
            index += counts[l] as usize;
        }
        let mut codes = vec![0u64; lengths.len()];
        let mut next_in_len = vec![0u64; max_len as usize + 1];
        for &s in &order {
            let l = lengths[s as usize] as usize;
            codes[s as usize] = first_code[l] + next_in_len[l];
            next_in_len[l] += 1;
        }
        Ok(HuffmanCode {
            lengths,
            codes,
            max_len,
            sorted_symbols: order,
            first_code,
            first_index,
            counts,
        })
    }

    pub fn code_lengths(&self) -> &[u8] {
        &self.lengths
    }

    pub fn length_of(&self, symbol: u8) -> u8 {
        self.lengths.get(symbol as usize).copied().unwrap_or(0)
    }

    /// (value, length) of a symbol's codeword; None for unused symbols.
    pub fn codeword(&self, symbol: u8) -> Option<(u64, u8)> {
        match self.lengths.get(symbol as usize) {
            Some(&l) if l > 0 => Some((self.codes[symbol as usize], l)),
            _ => None,
        }
    }

    pub fn max_len(&self) -> u8 {
        self.max_len
    }

    pub fn encode_symbol<W: BitWrite>(&self, out: &mut W, symbol: u8) -> Result<(), SuccinctError> {
        match self.codeword(symbol) {
            Some((code, len)) => out
                .write_bits(code, u32::from(len))
                .map_err(SuccinctError::Io),
            None => Err(SuccinctError::MissingCodeword { symbol }),
        }
    }

    /// Canonical decode: walk lengths, comparing the running value
    /// against the first code of each length.
    pub fn decode_symbol<R: BitRead>(&self, input: &mut R) -> io::Result<u8> {
        let mut v = 0u64;
        let mut sorted_pos;
        for len in 1..=self.max_len as usize {
            v = (v << 1) | u64::from(input.read_bit()?);
            let first = self.first_code[len];
            if self.lengths[self.sorted_symbols[self.first_index[len]] as usize] as usize == len
                && v >= first
            {
                sorted_pos = self.first_index[len] + (v - first) as usize;
                if sorted_pos < self.sorted_symbols.len()
                    && self.lengths[self.sorted_symbols[sorted_pos] as usize] as usize == len
                {
                    return Ok(self.sorted_symbols[sorted_pos] as u8);
                }
            }
        }
        Err(io::Error::new(
            io::ErrorKind::InvalidData,
            "invalid Huffman codeword",
        ))
    }
}
