//! Elias gamma code: `z > 0` is stored as `floor(log2 z)` zero bits
//! followed by the binary digits of `z`, most significant first, for a
//! total of `1 + 2*floor(log2 z)` bits. Zero is not representable;
//! callers that need to store zero shift their values by one.

use std::io;

use super::bits::{BitRead, BitWrite};
use super::SuccinctError;

/// Codeword length of `z` in bits.
#[inline]
pub fn gamma_len(z: u64) -> u64 {
    debug_assert!(z > 0);
    1 + 2 * u64::from(63 - z.leading_zeros())
}

/// Appends the gamma code of `z` to `out`. Rejects `z = 0`.
pub fn gamma_encode<W: BitWrite>(out: &mut W, z: u64) -> Result<(), SuccinctError> {
    if z == 0 {
        return Err(SuccinctError::GammaZero);
    }
    let digits = 64 - z.leading_zeros(); // count of binary digits of z
    out.write_bits(z, 2 * digits - 1).map_err(SuccinctError::Io)
}

/// Reads one gamma codeword.
pub fn gamma_decode<R: BitRead>(input: &mut R) -> io::Result<u64> {
    let mut zeros = 0u32;
    while !input.read_bit()? {
        zeros += 1;
        if zeros > 63 {
            return Err(io::Error::new(
                io::ErrorKind::InvalidData,
                "gamma codeword too long",
            ));
        }
    }
    if zeros == 0 {
        return Ok(1);
    }
    let rest = input.read_bits(zeros)?;
    Ok((1u64 << zeros) | rest)
}

/// A sequence of positive integers stored as concatenated gamma
/// codewords in an in-memory bit buffer.
#[derive(Debug, Clone, Default)]
pub struct GammaStream {
    buf: super::bits::BitBuf,
    count: u64,
}

impl GammaStream {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, z: u64) -> Result<(), SuccinctError> {
        gamma_encode(&mut self.buf, z)?;
        self.count += 1;
        Ok(())
    }

    pub fn len(&self) -> u64 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn bit_len(&self) -> u64 {
        self.buf.len_bits()
    }

    pub fn iter(&self) -> GammaIter<'_> {
        GammaIter {
            cursor: self.buf.cursor(),
            left: self.count,
        }
    }
}

pub struct GammaIter<'a> {
    cursor: super::bits::BitCursor<'a>,
    left: u64,
}

impl Iterator for GammaIter<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.left == 0 {
            return None;
        }
        self.left -= 1;
        Some(gamma_decode(&mut self.cursor).expect("stream validated on push"))
    }
}

#[cfg(test)]
mod tests {
    use super::super::bits::BitBuf;
    use super::*;

    fn code_of(z: u64) -> String {
        let mut b = BitBuf::new();
        gamma_encode(&mut b, z).unwrap();
        (0..b.len_bits())
            .map(|i| {
                if b.as_bytes()[(i / 8) as usize] & (0x80 >> (i % 8)) != 0 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    #[test]
    fn known_codewords() {
        assert_eq!(code_of(1), "1");
        assert_eq!(code_of(2), "010");
        assert_eq!(code_of(5), "00101");
    }

    #[test]
    fn zero_rejected() {
        let mut b = BitBuf::new();
        assert!(matches!(
            gamma_encode(&mut b, 0),
            Err(SuccinctError::GammaZero)
        ));
    }

    #[test]
    fn roundtrip_and_length() {
        let mut b = BitBuf::new();
        let values: Vec<u64> = (1..500).chain([u64::MAX, u64::MAX / 3, 1 << 40]).collect();
        let mut total = 0;
        for &z in &values {
            gamma_encode(&mut b, z).unwrap();
            total += gamma_len(z);
        }
        assert_eq!(b.len_bits(), total);
        let mut c = b.cursor();
        for &z in &values {
            assert_eq!(gamma_decode(&mut c).unwrap(), z);
        }
    }

    #[test]
    fn stream_iterates_in_order() {
        let mut s = GammaStream::new();
        for z in [3u64, 1, 7, 200] {
            s.push(z).unwrap();
        }
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 1, 7, 200]);
        assert_eq!(s.len(), 4);
    }
}
