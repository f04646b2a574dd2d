//! Append-only on-disk KL table.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! file    := MAGIC record*
//! MAGIC   := "OINFKL" 0x00 0x01
//! record  := payload_len:u32 payload
//! payload := n:u8 x:[u8; n] w:[u8; n] count:u16 coeff{count}
//! coeff   := byte_len:u16 magnitude:[u8; byte_len]
//! ```
//!
//! `x` and `w` are 0-indexed one-line notations. Later records for the same
//! pair replace earlier ones. A truncated final record (an interrupted
//! append) is ignored; any other inconsistency is [`Error::CorruptCache`].

use std::fs::OpenOptions;
use std::io::{Read, Write};
use std::path::Path;

use num_bigint::BigUint;

use super::{KLPoly, Perm};
use crate::error::{Error, Result};

pub const CACHE_MAGIC: &[u8; 8] = b"OINFKL\0\x01";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheRecord {
    pub x: Perm,
    pub w: Perm,
    pub poly: KLPoly,
}

fn encode(r: &CacheRecord) -> Result<Vec<u8>> {
    let n = r.x.n();
    if n != r.w.n() {
        return Err(Error::WindowMismatch(n, r.w.n()));
    }
    let mut payload = vec![n as u8];
    payload.extend_from_slice(r.x.one_line());
    payload.extend_from_slice(r.w.one_line());
    let coeffs = r.poly.coeffs();
    let count = u16::try_from(coeffs.len()).map_err(|_| Error::Overflow)?;
    payload.extend_from_slice(&count.to_le_bytes());
    for c in coeffs {
        let bytes = c.to_bytes_le();
        let len = u16::try_from(bytes.len()).map_err(|_| Error::Overflow)?;
        payload.extend_from_slice(&len.to_le_bytes());
        payload.extend_from_slice(&bytes);
    }
    let mut out = (payload.len() as u32).to_le_bytes().to_vec();
    out.extend(payload);
    Ok(out)
}

struct Cursor<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn take(&mut self, k: usize) -> Result<&'a [u8]> {
        let end = self.pos + k;
        if end > self.buf.len() {
            return Err(Error::CorruptCache("record payload shorter than declared".into()));
        }
        let s = &self.buf[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u16(&mut self) -> Result<u16> {
        let b = self.take(2)?;
        Ok(u16::from_le_bytes([b[0], b[1]]))
    }
}

fn decode(payload: &[u8]) -> Result<CacheRecord> {
    let mut cur = Cursor { buf: payload, pos: 0 };
    let n = cur.take(1)?[0] as usize;
    let bad = |e: Error| Error::CorruptCache(e.to_string());
    let x = Perm::new(cur.take(n)?.to_vec()).map_err(bad)?;
    let w = Perm::new(cur.take(n)?.to_vec()).map_err(bad)?;
    let count = cur.u16()? as usize;
    let mut coeffs = Vec::with_capacity(count);
    for _ in 0..count {
        let len = cur.u16()? as usize;
        coeffs.push(BigUint::from_bytes_le(cur.take(len)?));
    }
    if cur.pos != payload.len() {
        return Err(Error::CorruptCache("trailing bytes in record".into()));
    }
    Ok(CacheRecord { x, w, poly: KLPoly::from_coeffs(coeffs) })
}

/// Reads every complete record of a cache file, in file order.
pub fn read_cache_file(path: &Path) -> Result<Vec<CacheRecord>> {
    let mut buf = Vec::new();
    std::fs::File::open(path)?.read_to_end(&mut buf)?;
    if buf.len() < CACHE_MAGIC.len() || &buf[..CACHE_MAGIC.len()] != CACHE_MAGIC {
        return Err(Error::CorruptCache(format!("{} lacks the cache header", path.display())));
    }
    let mut pos = CACHE_MAGIC.len();
    let mut out = Vec::new();
    while pos + 4 <= buf.len() {
        let len = u32::from_le_bytes(buf[pos..pos + 4].try_into().unwrap()) as usize;
        let Some(payload) = buf.get(pos + 4..pos + 4 + len) else {
            break;
        };
        out.push(decode(payload)?);
        pos += 4 + len;
    }
    Ok(out)
}

/// Appends records, writing the header first if the file is new or empty.
pub fn write_cache_records(path: &Path, records: &[CacheRecord]) -> Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut buf = Vec::new();
    if file.metadata()?.len() == 0 {
        buf.extend_from_slice(CACHE_MAGIC);
    }
    for r in records {
        buf.extend(encode(r)?);
    }
    file.write_all(&buf)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_truncation() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("kl.bin");
        let rec = CacheRecord {
            x: Perm::identity(4),
            w: "[3,4,1,2]".parse().unwrap(),
            poly: KLPoly::from_u64(&[1, 1]),
        };
        let big = CacheRecord {
            x: Perm::identity(2),
            w: Perm::simple(2, 0),
            poly: KLPoly::from_coeffs(vec![BigUint::from(1u8) << 100]),
        };
        write_cache_records(&path, std::slice::from_ref(&rec)).unwrap();
        write_cache_records(&path, std::slice::from_ref(&big)).unwrap();
        assert_eq!(read_cache_file(&path).unwrap(), vec![rec.clone(), big]);

        let mut bytes = std::fs::read(&path).unwrap();
        bytes.truncate(bytes.len() - 3);
        std::fs::write(&path, &bytes).unwrap();
        assert_eq!(read_cache_file(&path).unwrap(), vec![rec]);
    }

    #[test]
    fn rejects_foreign_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("junk");
        std::fs::write(&path, b"not a cache").unwrap();
        assert!(matches!(read_cache_file(&path), Err(Error::CorruptCache(_))));
    }
}
