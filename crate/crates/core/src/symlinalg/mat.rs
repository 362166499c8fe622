//! Dense row-major matrices over exact scalars.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::LinAlgError;
use crate::exactmath::RingElem;

/// A dense matrix, stored row-major. Rows and columns are positive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T> Mat<T> {
    /// Builds from entries in row-major order.
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, LinAlgError> {
        if rows == 0 || cols == 0 {
            return Err(LinAlgError::ShapeMismatch {
                detail: format!("matrix dimensions must be positive, got {rows}x{cols}"),
            });
        }
        if entries.len() != rows * cols {
            return Err(LinAlgError::ShapeMismatch {
                detail: format!(
                    "{rows}x{cols} matrix needs {} entries, got {}",
                    rows * cols,
                    entries.len()
                ),
            });
        }
        Ok(Mat {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinAlgError::ShapeMismatch {
                detail: "ragged rows".into(),
            });
        }
        Mat::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Mat {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Fallible entrywise map, preserving shape.
    pub fn try_map<U, E>(&self, f: impl Fn(&T) -> Result<U, E>) -> Result<Mat<U>, E> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(f(e)?);
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn transpose(&self) -> Mat<T>
    where
        T: Clone,
    {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    /// Vertical stack: `self` on top of `other` (same column count).
    pub fn vcat(&self, other: &Mat<T>) -> Result<Mat<T>, LinAlgError>
    where
        T: Clone,
    {
        if self.cols != other.cols {
            return Err(LinAlgError::ShapeMismatch {
                detail: format!("vcat of {} and {} columns", self.cols, other.cols),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Mat::new(self.rows + other.rows, self.cols, entries)
    }
}

impl<T: RingElem> Mat<T> {
    /// Square identity with the ring context of `one`.
    pub fn identity(n: usize, one: &T) -> Self {
        Mat::from_fn(n, n, |r, c| {
            if r == c {
                one.clone()
            } else {
                one.zero_like()
            }
        })
    }

    /// All-zero matrix with the ring context of `sample`.
    pub fn zeros(rows: usize, cols: usize, sample: &T) -> Self {
        let z = sample.zero_like();
        Mat::from_fn(rows, cols, |_, _| z.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElem::is_zero)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinAlgError::ShapeMismatch {
                detail: format!(
                    "add of {}x{} and {}x{}",
                    self.rows, self.cols, rhs.rows, rhs.cols
                ),
            });
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.plus(b))
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        self.add(&rhs.map(RingElem::negated))
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|e| e.times(k))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::ShapeMismatch {
                detail: format!(
                    "mul of {}x{} by {}x{}",
                    self.rows, self.cols, rhs.rows, rhs.cols
                ),
            });
        }
        Ok(Mat::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = self.at(r, 0).times(rhs.at(0, c));
            for k in 1..self.cols {
                acc = acc.plus(&self.at(r, k).times(rhs.at(k, c)));
            }
            acc
        }))
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::ShapeMismatch {
                detail: format!("mul_vec of {}x{} by vector of {}", self.rows, self.cols, v.len()),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = self.at(r, 0).times(&v[0]);
                for k in 1..self.cols {
                    acc = acc.plus(&self.at(r, k).times(&v[k]));
                }
                acc
            })
            .collect())
    }

    /// The commutator `self*rhs - rhs*self` of square matrices.
    pub fn commutator(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }

    pub fn trace(&self) -> Result<T, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::ShapeMismatch {
                detail: format!("trace of {}x{}", self.rows, self.cols),
            });
        }
        let mut acc = self.at(0, 0).clone();
        for i in 1..self.rows {
            acc = acc.plus(self.at(i, i));
        }
        Ok(acc)
    }
}

impl<T: fmt::Display> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[r * self.cols + c])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatRepr {
    rows: usize,
    cols: usize,
    entries: Vec<String>,
}

/// Matrices serialize as `{rows, cols, entries}` with row-major exact text
/// forms for the entries.
impl<T: fmt::Display> Serialize for Mat<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(T::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, T> Deserialize<'de> for Mat<T>
where
    T: FromStr,
    T::Err: fmt::Display,
{
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MatRepr::deserialize(deserializer)?;
        let mut entries = Vec::with_capacity(repr.entries.len());
        for s in &repr.entries {
            entries.push(s.parse::<T>().map_err(serde::de::Error::custom)?);
        }
        Mat::new(repr.rows, repr.cols, entries).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Rat;

    fn m2(entries: [i64; 4]) -> Mat<Rat> {
        Mat::new(2, 2, entries.iter().map(|&n| Rat::from_int(n)).collect()).unwrap()
    }

    #[test]
    fn shape_validation() {
        assert!(Mat::new(2, 2, vec![Rat::one(); 3]).is_err());
        assert!(Mat::new(0, 2, Vec::<Rat>::new()).is_err());
        assert!(Mat::from_rows(vec![vec![Rat::one()], vec![Rat::one(), Rat::one()]]).is_err());
    }

    #[test]
    fn mul_and_commutator() {
        let a = m2([0, 1, 0, 0]);
        let b = m2([0, 0, 1, 0]);
        // [E12, E21] = E11 - E22
        assert_eq!(a.commutator(&b).unwrap(), m2([1, 0, 0, -1]));
    }

    #[test]
    fn mul_vec_matches_mul() {
        let a = m2([1, 2, 3, 4]);
        let v = vec![Rat::from_int(5), Rat::from_int(-1)];
        assert_eq!(
            a.mul_vec(&v).unwrap(),
            vec![Rat::from_int(3), Rat::from_int(11)]
        );
    }

    #[test]
    fn serde_round_trip_rational_entries() {
        let a = Mat::new(
            2,
            2,
            vec![
                Rat::new(1, 2),
                Rat::from_int(-3),
                Rat::zero(),
                Rat::new(7, 5),
            ],
        )
        .unwrap();
        let json = serde_json::to_string(&a).unwrap();
        assert!(json.contains("\"rows\":2"));
        assert!(json.contains("\"1/2\""));
        let back: Mat<Rat> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn serde_rejects_wrong_entry_count() {
        let bad = r#"{"rows":2,"cols":2,"entries":["1","2","3"]}"#;
        assert!(serde_json::from_str::<Mat<Rat>>(bad).is_err());
    }
}
