//! Byte-level primitives shared by every engine's key payload.
//!
//! * unsigned integers: LEB128 (7 bits per byte, low group first, high bit = continuation)
//! * signed machine integers: zig-zag mapped (`0, -1, 1, -2, 2 ...` to `0, 1, 2, 3, 4 ...`), then LEB128
//! * big integers: LEB128 byte count, then the minimal two's-complement big-endian bytes

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub fn put_uvarint(out: &mut Vec<u8>, mut v: u64) {
    loop {
        let byte = (v & 0x7f) as u8;
        v >>= 7;
        if v == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

pub fn zigzag(v: i64) -> u64 {
    ((v << 1) ^ (v >> 63)) as u64
}

pub fn unzigzag(v: u64) -> i64 {
    ((v >> 1) as i64) ^ -((v & 1) as i64)
}

pub fn put_ivarint(out: &mut Vec<u8>, v: i64) {
    put_uvarint(out, zigzag(v));
}

pub fn put_bigint(out: &mut Vec<u8>, v: &BigInt) {
    let bytes = v.to_signed_bytes_be();
    put_uvarint(out, bytes.len() as u64);
    out.extend_from_slice(&bytes);
}

/// Cursor over a key payload.
pub struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    pub fn new(bytes: &'a [u8]) -> Self {
        Self { bytes, pos: 0 }
    }

    pub fn uvarint(&mut self) -> Result<u64> {
        let mut value = 0u64;
        let mut shift = 0u32;
        loop {
            let byte = *self.bytes.get(self.pos).ok_or_else(|| Error::Decode("truncated varint".into()))?;
            self.pos += 1;
            if shift >= 64 {
                return Err(Error::Decode("varint overflow".into()));
            }
            value |= u64::from(byte & 0x7f) << shift;
            if byte & 0x80 == 0 {
                // reject padded encodings so that decoding stays injective
                if byte == 0 && shift > 0 {
                    return Err(Error::Decode("non-minimal varint".into()));
                }
                return Ok(value);
            }
            shift += 7;
        }
    }

    pub fn usize(&mut self) -> Result<usize> {
        usize::try_from(self.uvarint()?).map_err(|_| Error::Decode("length overflow".into()))
    }

    pub fn ivarint(&mut self) -> Result<i64> {
        self.uvarint().map(unzigzag)
    }

    pub fn bigint(&mut self) -> Result<BigInt> {
        let len = self.usize()?;
        let end = self
            .pos
            .checked_add(len)
            .filter(|&e| e <= self.bytes.len())
            .ok_or_else(|| Error::Decode("truncated big integer".into()))?;
        let slice = &self.bytes[self.pos..end];
        self.pos = end;
        let v = BigInt::from_signed_bytes_be(slice);
        if v.to_signed_bytes_be() != slice {
            return Err(Error::Decode("non-minimal big integer".into()));
        }
        Ok(v)
    }

    pub fn finish(&self) -> Result<()> {
        if self.pos == self.bytes.len() {
            Ok(())
        } else {
            Err(Error::Decode(format!("{} trailing bytes", self.bytes.len() - self.pos)))
        }
    }
}
