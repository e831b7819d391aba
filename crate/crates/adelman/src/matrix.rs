//! Dense matrices over the integers with arbitrary-precision entries.
//!
//! Everything in this crate follows the row convention: elements of `Z^m`
//! are row vectors, a morphism `Z^m -> Z^n` is an `m x n` matrix, and
//! "`f` then `g`" is the product `mat(f) * mat(g)`.  Zero-row and
//! zero-column matrices are first-class values.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exact integer matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl ZMatrix {
    /// The zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        ZMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    /// The `n x n` identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = ZMatrix::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row-major entries.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimensions(format!(
                "{} entries for a {rows} x {cols} matrix",
                entries.len()
            )));
        }
        Ok(ZMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from a rectangular list of rows.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimensions("ragged rows".into()));
        }
        Ok(ZMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from machine-integer rows; convenient in tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        ZMatrix::from_rows(data).expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.at(r, c).is_one()
                    } else {
                        self.at(r, c).is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> ZMatrix {
        let mut out = ZMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c).clone());
            }
        }
        out
    }

    pub fn neg(&self) -> ZMatrix {
        ZMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn add(&self, other: &ZMatrix) -> ZMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add shape");
        ZMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ZMatrix) -> ZMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub shape");
        ZMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> ZMatrix {
        ZMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    /// Matrix product; `self` is applied first under the row convention.
    pub fn mul(&self, other: &ZMatrix) -> ZMatrix {
        assert_eq!(self.cols, other.rows, "mul shape");
        let mut out = ZMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.entries[idx] += a * b;
                }
            }
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &ZMatrix) -> ZMatrix {
        assert_eq!(self.cols, other.cols, "vstack shape");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        ZMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &ZMatrix) -> ZMatrix {
        assert_eq!(self.rows, other.rows, "hstack shape");
        let mut out = ZMatrix::zero(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.at(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.at(r, c).clone());
            }
        }
        out
    }

    /// The submatrix of the given column range.
    pub fn columns(&self, range: std::ops::Range<usize>) -> ZMatrix {
        assert!(range.end <= self.cols, "column range");
        let mut out = ZMatrix::zero(self.rows, range.len());
        for r in 0..self.rows {
            for (i, c) in range.clone().enumerate() {
                out.set(r, i, self.at(r, c).clone());
            }
        }
        out
    }

    /// Row `r` as a `1 x cols` matrix.
    pub fn row(&self, r: usize) -> ZMatrix {
        let mut out = ZMatrix::zero(1, self.cols);
        for c in 0..self.cols {
            out.set(0, c, self.at(r, c).clone());
        }
        out
    }

    pub fn row_is_zero(&self, r: usize) -> bool {
        (0..self.cols).all(|c| self.at(r, c).is_zero())
    }

    /// Drops every all-zero row.
    pub fn nonzero_rows(&self) -> ZMatrix {
        let kept: Vec<Vec<BigInt>> = (0..self.rows)
            .filter(|&r| !self.row_is_zero(r))
            .map(|r| (0..self.cols).map(|c| self.at(r, c).clone()).collect())
            .collect();
        let rows = kept.len();
        ZMatrix {
            rows,
            cols: self.cols,
            entries: kept.into_iter().flatten().collect(),
        }
    }

    /// The matrix flattened row-major into a `1 x (rows*cols)` row vector.
    pub fn vec_row(&self) -> ZMatrix {
        ZMatrix {
            rows: 1,
            cols: self.rows * self.cols,
            entries: self.entries.clone(),
        }
    }

    /// Inverse of [`ZMatrix::vec_row`].
    pub fn unvec_row(row: &ZMatrix, rows: usize, cols: usize) -> ZMatrix {
        assert_eq!(row.rows, 1, "unvec shape");
        assert_eq!(row.cols, rows * cols, "unvec shape");
        ZMatrix {
            rows,
            cols,
            entries: row.entries.clone(),
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.at(src, c) * k;
            self.entries[dst * self.cols + c] += v;
        }
    }

    /// col[dst] += k * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = self.at(r, src) * k;
            self.entries[r * self.cols + dst] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            let v = -&self.entries[idx];
            self.entries[idx] = v;
        }
    }
}

fn fmt_matrix(m: &ZMatrix, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if m.rows == 0 || m.cols == 0 {
        return write!(f, "[{}x{}]", m.rows, m.cols);
    }
    write!(f, "[")?;
    for r in 0..m.rows {
        if r > 0 {
            write!(f, "; ")?;
        }
        for c in 0..m.cols {
            if c > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", m.at(r, c))?;
        }
    }
    write!(f, "]")
}

impl fmt::Debug for ZMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_matrix(self, f)
    }
}

impl fmt::Display for ZMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_matrix(self, f)
    }
}

impl Add for &ZMatrix {
    type Output = ZMatrix;
    fn add(self, rhs: &ZMatrix) -> ZMatrix {
        ZMatrix::add(self, rhs)
    }
}

impl Sub for &ZMatrix {
    type Output = ZMatrix;
    fn sub(self, rhs: &ZMatrix) -> ZMatrix {
        ZMatrix::sub(self, rhs)
    }
}

impl Mul for &ZMatrix {
    type Output = ZMatrix;
    fn mul(self, rhs: &ZMatrix) -> ZMatrix {
        ZMatrix::mul(self, rhs)
    }
}

impl Neg for &ZMatrix {
    type Output = ZMatrix;
    fn neg(self) -> ZMatrix {
        ZMatrix::neg(self)
    }
}

/// Builds a [`ZMatrix`] from integer literals, e.g. `zmat![[1, 2], [3, 4]]`.
/// Degenerate shapes need [`ZMatrix::zero`] since `[]` carries no width.
#[macro_export]
macro_rules! zmat {
    ( $( [ $( $x:expr ),* $(,)? ] ),+ $(,)? ) => {
        $crate::matrix::ZMatrix::from_i64(&[ $( &[ $( $x as i64 ),* ][..] ),+ ])
    };
}

// JSON form: an array of rows for ordinary shapes; an object carrying
// explicit "rows"/"cols" whenever either dimension is zero.  Entries are
// JSON numbers when they fit in i64/u64 and decimal strings otherwise.

impl Serialize for ZMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.rows == 0 || self.cols == 0 {
            let mut map = serializer.serialize_map(Some(2))?;
            map.serialize_entry("rows", &self.rows)?;
            map.serialize_entry("cols", &self.cols)?;
            map.end()
        } else {
            let mut seq = serializer.serialize_seq(Some(self.rows))?;
            for r in 0..self.rows {
                let row: Vec<EntryRepr> = (0..self.cols)
                    .map(|c| EntryRepr::from(self.at(r, c)))
                    .collect();
                seq.serialize_element(&row)?;
            }
            seq.end()
        }
    }
}

/// JSON form of one integer: a native number when it fits, a decimal
/// string otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum EntryRepr {
    Small(i64),
    Large(u64),
    Big(String),
}

impl From<&BigInt> for EntryRepr {
    fn from(v: &BigInt) -> Self {
        if let Some(i) = v.to_i64() {
            EntryRepr::Small(i)
        } else {
            EntryRepr::Big(v.to_string())
        }
    }
}

impl TryFrom<EntryRepr> for BigInt {
    type Error = String;
    fn try_from(e: EntryRepr) -> std::result::Result<BigInt, String> {
        match e {
            EntryRepr::Small(i) => Ok(BigInt::from(i)),
            EntryRepr::Large(u) => Ok(BigInt::from(u)),
            EntryRepr::Big(s) => s
                .trim()
                .parse::<BigInt>()
                .map_err(|_| format!("invalid integer literal {s:?}")),
        }
    }
}

impl<'de> Deserialize<'de> for ZMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct MatrixVisitor;

        impl<'de> Visitor<'de> for MatrixVisitor {
            type Value = ZMatrix;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of integer rows, or {\"rows\": r, \"cols\": c}")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<ZMatrix, A::Error> {
                let mut rows: Vec<Vec<BigInt>> = Vec::new();
                while let Some(row) = seq.next_element::<Vec<EntryRepr>>()? {
                    let row: std::result::Result<Vec<BigInt>, String> =
                        row.into_iter().map(BigInt::try_from).collect();
                    rows.push(row.map_err(de::Error::custom)?);
                }
                if rows.is_empty() {
                    return Err(de::Error::custom(
                        "a matrix with zero rows needs explicit \"rows\"/\"cols\" fields",
                    ));
                }
                ZMatrix::from_rows(rows).map_err(de::Error::custom)
            }

            fn visit_map<A: de::MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<ZMatrix, A::Error> {
                let mut rows: Option<usize> = None;
                let mut cols: Option<usize> = None;
                while let Some(key) = map.next_key::<String>()? {
                    match key.as_str() {
                        "rows" => rows = Some(map.next_value()?),
                        "cols" => cols = Some(map.next_value()?),
                        other => {
                            return Err(de::Error::unknown_field(other, &["rows", "cols"]));
                        }
                    }
                }
                let rows = rows.ok_or_else(|| de::Error::missing_field("rows"))?;
                let cols = cols.ok_or_else(|| de::Error::missing_field("cols"))?;
                if rows != 0 && cols != 0 {
                    return Err(de::Error::custom(
                        "the rows/cols object form is reserved for empty shapes",
                    ));
                }
                Ok(ZMatrix::zero(rows, cols))
            }
        }

        deserializer.deserialize_any(MatrixVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_follows_row_convention() {
        // f: Z -> Z^2 is 1x2, g: Z^2 -> Z is 2x1, f then g is their product
        let f = zmat![[1, 2]];
        let g = zmat![[3], [4]];
        assert_eq!(f.mul(&g), zmat![[11]]);
    }

    #[test]
    fn empty_shapes_multiply() {
        let a = ZMatrix::zero(2, 0);
        let b = ZMatrix::zero(0, 3);
        let prod = a.mul(&b);
        assert_eq!((prod.rows(), prod.cols()), (2, 3));
        assert!(prod.is_zero());
    }

    #[test]
    fn stacking_and_columns() {
        let a = zmat![[1, 2], [3, 4]];
        let b = zmat![[5, 6]];
        let s = a.vstack(&b);
        assert_eq!(s, zmat![[1, 2], [3, 4], [5, 6]]);
        assert_eq!(s.columns(1..2), zmat![[2], [4], [6]]);
    }

    #[test]
    fn json_round_trip() {
        let m = zmat![[1, -2], [3, 4]];
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, "[[1,-2],[3,4]]");
        let back: ZMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);

        let empty = ZMatrix::zero(1, 0);
        let text = serde_json::to_string(&empty).unwrap();
        let back: ZMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, empty);
    }

    #[test]
    fn json_accepts_decimal_strings() {
        let back: ZMatrix = serde_json::from_str(r#"[["123456789012345678901234567890"]]"#).unwrap();
        let expected = "123456789012345678901234567890".parse::<BigInt>().unwrap();
        assert_eq!(back.at(0, 0), &expected);
        // and both forms survive a round trip
        let text = serde_json::to_string(&back).unwrap();
        let again: ZMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(again, back);
    }

    #[test]
    fn json_rejects_zero_rows_without_dims() {
        assert!(serde_json::from_str::<ZMatrix>("[]").is_err());
    }
}
