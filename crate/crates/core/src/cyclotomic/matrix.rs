use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{imag_unit, CycNumber};
use crate::error::{Error, Result};

/// A square matrix over a cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct CycMatrix {
    dim: usize,
    entries: Vec<CycNumber>,
}

impl CycMatrix {
    pub fn zero(dim: usize) -> Self {
        CycMatrix {
            dim,
            entries: vec![CycNumber::from_integer(0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        CycMatrix::scalar(dim, CycNumber::one())
    }

    pub fn scalar(dim: usize, x: CycNumber) -> Self {
        let mut m = CycMatrix::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycNumber>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "rows of a {dim}-row matrix must have length {dim}"
            )));
        }
        Ok(CycMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        CycMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| CycNumber::from_integer(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNumber {
        &self.entries[i * self.dim + j]
    }

    pub fn map(&self, f: impl Fn(&CycNumber) -> CycNumber) -> CycMatrix {
        CycMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&CycNumber) -> Result<CycNumber>) -> Result<CycMatrix> {
        Ok(CycMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn scale(&self, x: &CycNumber) -> CycMatrix {
        self.map(|e| if e.is_zero() { e.clone() } else { e * x })
    }

    pub fn trace(&self) -> CycNumber {
        (0..self.dim).fold(CycNumber::from_integer(0), |acc, i| &acc + self.get(i, i))
    }

    pub fn checked_mul(&self, rhs: &CycMatrix) -> Result<CycMatrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} x {}",
                self.dim, rhs.dim
            )));
        }
        let n = self.dim;
        let mut out = CycMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let b = rhs.get(j, k);
                    if b.is_zero() {
                        continue;
                    }
                    out.entries[i * n + k] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, rhs: &CycMatrix) -> CycMatrix {
        let (n, m) = (self.dim, rhs.dim);
        let mut out = CycMatrix::zero(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.entries[(i * m + k) * n * m + j * m + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Kronecker product of a list, with the `1×1` identity for an empty list.
    pub fn kron_all(factors: &[CycMatrix]) -> CycMatrix {
        factors
            .iter()
            .fold(CycMatrix::identity(1), |acc, f| acc.kron(f))
    }

    pub fn pow(&self, k: u32) -> CycMatrix {
        (0..k).fold(CycMatrix::identity(self.dim), |acc, _| &acc * self)
    }

    pub fn inverse(&self) -> Result<CycMatrix> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = CycMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    a.entries.swap(col * n + j, pivot * n + j);
                    inv.entries.swap(col * n + j, pivot * n + j);
                }
            }
            let p_inv = a.get(col, col).inv()?;
            for j in 0..n {
                a.entries[col * n + j] = &a.entries[col * n + j] * &p_inv;
                inv.entries[col * n + j] = &inv.entries[col * n + j] * &p_inv;
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let da = &factor * a.get(col, j);
                    let di = &factor * inv.get(col, j);
                    a.entries[r * n + j] = &a.entries[r * n + j] - &da;
                    inv.entries[r * n + j] = &inv.entries[r * n + j] - &di;
                }
            }
        }
        Ok(inv)
    }

    /// `Some(x)` when the matrix is `x·I`.
    pub fn as_scalar(&self) -> Option<CycNumber> {
        let x = self.get(0, 0).clone();
        (*self == CycMatrix::scalar(self.dim, x.clone())).then_some(x)
    }

    pub fn pauli_x() -> CycMatrix {
        CycMatrix::from_integers(&[&[0, 1], &[1, 0]]).expect("2x2")
    }

    pub fn pauli_y() -> CycMatrix {
        let i = imag_unit();
        let zero = CycNumber::from_integer(0);
        CycMatrix::from_rows(vec![vec![zero.clone(), -&i], vec![i, zero]]).expect("2x2")
    }

    pub fn pauli_z() -> CycMatrix {
        CycMatrix::from_integers(&[&[1, 0], &[0, -1]]).expect("2x2")
    }
}

impl<'a> Mul<&'a CycMatrix> for &'a CycMatrix {
    type Output = CycMatrix;
    fn mul(self, rhs: &CycMatrix) -> CycMatrix {
        self.checked_mul(rhs).expect("matching dimensions")
    }
}

impl<'a> Add<&'a CycMatrix> for &'a CycMatrix {
    type Output = CycMatrix;
    fn add(self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!(self.dim, rhs.dim, "matching dimensions");
        CycMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a CycMatrix> for &'a CycMatrix {
    type Output = CycMatrix;
    fn sub(self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!(self.dim, rhs.dim, "matching dimensions");
        CycMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CycMatrix {
    type Output = CycMatrix;
    fn neg(self) -> CycMatrix {
        self.map(|e| -e)
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        let (x, y, z) = (
            CycMatrix::pauli_x(),
            CycMatrix::pauli_y(),
            CycMatrix::pauli_z(),
        );
        let id = CycMatrix::identity(2);
        assert_eq!(&x * &x, id);
        assert_eq!(&y * &y, id);
        assert_eq!(&z * &z, id);
        assert_eq!(&x * &y, z.scale(&imag_unit()));
        assert_eq!(&(&x * &y) * &z, CycMatrix::scalar(2, imag_unit()));
    }

    #[test]
    fn kron_and_trace() {
        let z = CycMatrix::pauli_z();
        let zz = z.kron(&z);
        assert_eq!(zz.dim(), 4);
        assert_eq!(zz.trace(), CycNumber::from_integer(0));
        assert_eq!(
            CycMatrix::identity(2).kron(&CycMatrix::identity(2)).trace(),
            CycNumber::from_integer(4)
        );
        assert_eq!(CycMatrix::kron_all(&[]), CycMatrix::identity(1));
    }

    #[test]
    fn inverses() {
        let y = CycMatrix::pauli_y();
        assert_eq!(y.inverse().unwrap(), y);
        let m = CycMatrix::from_integers(&[&[2, 1], &[1, 1]]).unwrap();
        assert_eq!(&m * &m.inverse().unwrap(), CycMatrix::identity(2));
        let s = CycMatrix::from_integers(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(s.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn rejects_ragged_rows() {
        assert!(CycMatrix::from_integers(&[&[1, 2], &[3]]).is_err());
        let a = CycMatrix::identity(2);
        let b = CycMatrix::identity(3);
        assert!(a.checked_mul(&b).is_err());
    }
}
