//! Bit-granular I/O shared by the in-memory codecs and the external file
//! formats. Bit order is most-significant-first within each byte, so the
//! bit at stream index 0 is the top bit of byte 0.

use std::io::{self, Read, Write};

/// Sink of single bits / fixed-width bit groups.
pub trait BitWrite {
    fn write_bit(&mut self, bit: bool) -> io::Result<()>;

    /// Writes the `width` low bits of `value`, most significant first.
    fn write_bits(&mut self, value: u64, width: u32) -> io::Result<()> {
        debug_assert!(width <= 64);
        for i in (0..width).rev() {
            self.write_bit((value >> i) & 1 == 1)?;
        }
        Ok(())
    }
}

/// Source of single bits / fixed-width bit groups.
pub trait BitRead {
    fn read_bit(&mut self) -> io::Result<bool>;

    fn read_bits(&mut self, width: u32) -> io::Result<u64> {
        debug_assert!(width <= 64);
        let mut v = 0u64;
        for _ in 0..width {
            v = (v << 1) | u64::from(self.read_bit()?);
        }
        Ok(v)
    }
}

/// Growable in-memory bit buffer.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BitBuf {
    bytes: Vec<u8>,
    len_bits: u64,
}

impl BitBuf {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len_bits(&self) -> u64 {
        self.len_bits
    }

    pub fn is_empty(&self) -> bool {
        self.len_bits == 0
    }

    /// Underlying bytes; the last byte is zero-padded.
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.bytes
    }

    pub fn from_bytes(bytes: Vec<u8>, len_bits: u64) -> Self {
        debug_assert!(len_bits.div_ceil(8) as usize <= bytes.len());
        BitBuf { bytes, len_bits }
    }

    pub fn cursor(&self) -> BitCursor<'_> {
        BitCursor::new(&self.bytes, self.len_bits)
    }

    /// Appends another buffer bit-for-bit.
    pub fn extend_from(&mut self, other: &BitBuf) -> io::Result<()> {
        let mut cur = other.cursor();
        let mut left = other.len_bits;
        while left >= 32 {
            let v = cur.read_bits(32)?;
            self.write_bits(v, 32)?;
            left -= 32;
        }
        if left > 0 {
            let v = cur.read_bits(left as u32)?;
            self.write_bits(v, left as u32)?;
        }
        Ok(())
    }
}

impl BitWrite for BitBuf {
    #[inline]
    fn write_bit(&mut self, bit: bool) -> io::Result<()> {
        let byte = (self.len_bits / 8) as usize;
        if byte == self.bytes.len() {
            self.bytes.push(0);
        }
        if bit {
            self.bytes[byte] |= 0x80 >> (self.len_bits % 8);
        }
        self.len_bits += 1;
        Ok(())
    }

    fn write_bits(&mut self, value: u64, width: u32) -> io::Result<()> {
        debug_assert!(width <= 64);
        debug_assert!(width == 64 || value < (1u64 << width));
        let mut left = width;
        while left > 0 {
            let bit_in_byte = (self.len_bits % 8) as u32;
            if bit_in_byte == 0 {
                self.bytes.push(0);
            }
            let take = left.min(8 - bit_in_byte);
            let chunk = (value >> (left - take)) & ((1u64 << take) - 1);
            let byte = self.bytes.last_mut().expect("pushed above");
            *byte |= (chunk as u8) << (8 - bit_in_byte - take);
            self.len_bits += u64::from(take);
            left -= take;
        }
        Ok(())
    }
}

/// Reader over a byte slice with bit positioning.
#[derive(Debug, Clone)]
pub struct BitCursor<'a> {
    bytes: &'a [u8],
    len_bits: u64,
    pos: u64,
}

impl<'a> BitCursor<'a> {
    pub fn new(bytes: &'a [u8], len_bits: u64) -> Self {
        BitCursor {
            bytes,
            len_bits,
            pos: 0,
        }
    }

    pub fn pos(&self) -> u64 {
        self.pos
    }

    pub fn remaining(&self) -> u64 {
        self.len_bits - self.pos
    }

    pub fn seek_bit(&mut self, pos: u64) -> io::Result<()> {
        if pos > self.len_bits {
            return Err(io::Error::new(
                io::ErrorKind::UnexpectedEof,
                "bit seek past end",
            ));
        }
        self.pos = pos;
        Ok(())
    }
}

impl BitRead for BitCursor<'_> {
    #[inline]
    fn read_bit(&mut self) -> io::Result<bool> {
        if self.pos >= self.len_bits {
            return Err(io::Error::new(
                io::ErrorKind::UnexpectedEof,
                "bit read past end",
            ));
        }
        let bit = self.bytes[(self.pos / 8) as usize] & (0x80 >> (self.pos % 8)) != 0;
        self.pos += 1;
        Ok(bit)
    }

    fn read_bits(&mut self, width: u32) -> io::Result<u64> {
        debug_assert!(width <= 64);
        if self.pos + u64::from(width) > self.len_bits {
            return Err(io::Error::new(
                io::ErrorKind::UnexpectedEof,
                "bit read past end",
            ));
        }
        let mut v = 0u64;
        let mut left = width;
        while left > 0 {
            let byte = self.bytes[(self.pos / 8) as usize];
            let bit_in_byte = (self.pos % 8) as u32;
            let take = left.min(8 - bit_in_byte);
            let chunk = (u64::from(byte) >> (8 - bit_in_byte - take)) & ((1u64 << take) - 1);
            v = (v << take) | chunk;
            self.pos += u64::from(take);
            left -= take;
        }
        Ok(v)
    }
}

const SINK_BUF: usize = 8192;

/// Buffered bit writer over any byte sink.
pub struct BitSink<W: Write> {
    out: W,
    buf: Vec<u8>,
    acc: u8,
    acc_bits: u32,
    written_bits: u64,
}

impl<W: Write> BitSink<W> {
    pub fn new(out: W) -> Self {
        BitSink {
            out,
            buf: Vec::with_capacity(SINK_BUF),
            acc: 0,
            acc_bits: 0,
            written_bits: 0,
        }
    }

    pub fn bit_pos(&self) -> u64 {
        self.written_bits
    }

    /// Pads to a byte boundary with zero bits and flushes; returns the
    /// inner writer.
    pub fn finish(mut self) -> io::Result<W> {
        if self.acc_bits > 0 {
            self.buf.push(self.acc);
            self.acc = 0;
            self.acc_bits = 0;
        }
        self.out.write_all(&self.buf)?;
        self.buf.clear();
        Ok(self.out)
    }
}

impl<W: Write> BitWrite for BitSink<W> {
    #[inline]
    fn write_bit(&mut self, bit: bool) -> io::Result<()> {
        self.acc = (self.acc << 1) | u8::from(bit);
        self.acc_bits += 1;
        self.written_bits += 1;
        if self.acc_bits == 8 {
            self.buf.push(self.acc);
            self.acc = 0;
            self.acc_bits = 0;
            if self.buf.len() >= SINK_BUF {
                self.out.write_all(&self.buf)?;
                self.buf.clear();
            }
        }
        Ok(())
    }

    fn write_bits(&mut self, value: u64, width: u32) -> io::Result<()> {
        debug_assert!(width <= 64);
        for i in (0..width).rev() {
            self.write_bit((value >> i) & 1 == 1)?;
        }
        Ok(())
    }
}

/// Buffered bit reader over any byte source.
pub struct BitSource<R: Read> {
    input: R,
    buf: Vec<u8>,
    buf_pos: usize,
    acc: u8,
    acc_bits: u32,
}

impl<R: Read> BitSource<R> {
    pub fn new(input: R) -> Self {
        BitSource {
            input,
            buf: Vec::new(),
            buf_pos: 0,
            acc: 0,
            acc_bits: 0,
        }
    }

    /// Discards `n` bits.
    pub fn skip_bits(&mut self, mut n: u64) -> io::Result<()> {
        while n > 0 {
            let take = n.min(64) as u32;
            self.read_bits(take)?;
            n -= u64::from(take);
        }
        Ok(())
    }

    fn next_byte(&mut self) -> io::Result<u8> {
        if self.buf_pos == self.buf.len() {
            self.buf.resize(SINK_BUF, 0);
            let got = self.input.read(&mut self.buf)?;
            self.buf.truncate(got);
            self.buf_pos = 0;
            if got == 0 {
                return Err(io::Error::new(
                    io::ErrorKind::UnexpectedEof,
                    "bit source exhausted",
                ));
            }
        }
        let b = self.buf[self.buf_pos];
        self.buf_pos += 1;
        Ok(b)
    }
}

impl<R: Read> BitRead for BitSource<R> {
    #[inline]
    fn read_bit(&mut self) -> io::Result<bool> {
        if self.acc_bits == 0 {
            self.acc = self.next_byte()?;
            self.acc_bits = 8;
        }
        self.acc_bits -= 1;
        Ok((self.acc >> self.acc_bits) & 1 == 1)
    }
}
