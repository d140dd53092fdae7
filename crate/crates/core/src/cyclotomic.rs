//! Exact arithmetic in cyclotomic fields `ℚ(ζ_N)`.
//!
//! An element of conductor `N` is a rational polynomial in `ζ_N` of degree
//! below `φ(N)`, reduced modulo the cyclotomic polynomial `Φ_N`. Reduced
//! forms are unique, so equality is coefficient equality after promoting both
//! sides to a common conductor.

mod matrix;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::OddPrime;
use crate::signs::{legendre, Sign};

pub use matrix::CycMatrix;

struct FieldTable {
    phi: usize,
    /// `powers[k]` is the reduced form of `ζ^k` for `0 ≤ k < N`, as sparse
    /// integer coefficients.
    powers: Vec<Vec<(usize, i64)>>,
}

type Poly = Vec<i64>;

fn poly_div_exact(num: &[i64], den: &[i64]) -> Poly {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(*den.last().unwrap(), 1);
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

fn cyclotomic_poly(n: usize, cache: &mut HashMap<usize, Poly>) -> Poly {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_poly(d, cache);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    cache.insert(n, num.clone());
    num
}

fn build_table(n: usize) -> FieldTable {
    let mut cache = HashMap::new();
    let phi_poly = cyclotomic_poly(n, &mut cache);
    let phi = phi_poly.len() - 1;
    let mut powers = Vec::with_capacity(n);
    // dense form of ζ^k, advanced by multiplying by ζ and reducing
    let mut current = vec![0i64; phi];
    current[0] = 1;
    for _ in 0..n {
        powers.push(
            current
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i, c))
                .collect(),
        );
        let top = current[phi - 1];
        for i in (1..phi).rev() {
            current[i] = current[i - 1];
        }
        current[0] = 0;
        if top != 0 {
            for (i, &c) in phi_poly.iter().take(phi).enumerate() {
                current[i] -= top * c;
            }
        }
    }
    FieldTable { phi, powers }
}

fn table(n: usize) -> Arc<FieldTable> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<FieldTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().expect("field table lock");
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(build_table(n)))
        .clone()
}

/// Euler's totient, read off the cached field table.
pub fn euler_phi(n: usize) -> usize {
    table(n).phi
}

#[derive(Clone)]
pub struct CycNumber {
    conductor: usize,
    coeffs: Vec<BigRational>,
}

impl CycNumber {
    pub fn zero(conductor: usize) -> Self {
        let phi = euler_phi(conductor);
        CycNumber {
            conductor,
            coeffs: vec![BigRational::zero(); phi],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        CycNumber::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        CycNumber {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_sign(s: Sign) -> Self {
        CycNumber::from_integer(s.to_i64())
    }

    pub fn one() -> Self {
        CycNumber::from_integer(1)
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `ℚ`. The power basis
    /// `1, ζ, …, ζ^{φ(N)-1}` is a basis, so that means a lone constant term.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Rewrites the element in conductor `target`, a multiple of the current
    /// conductor.
    pub fn promote(&self, target: usize) -> CycNumber {
        assert!(
            target.is_multiple_of(self.conductor),
            "conductor {} does not divide {}",
            self.conductor,
            target
        );
        if target == self.conductor {
            return self.clone();
        }
        let step = target / self.conductor;
        let t = table(target);
        let mut coeffs = vec![BigRational::zero(); t.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, m) in &t.powers[(k * step) % target] {
                coeffs[i] += c * BigInt::from(m);
            }
        }
        CycNumber {
            conductor: target,
            coeffs,
        }
    }

    fn common(a: &CycNumber, b: &CycNumber) -> (CycNumber, CycNumber) {
        let l = a.conductor.lcm(&b.conductor);
        (a.promote(l), b.promote(l))
    }

    pub fn pow(&self, mut k: u32) -> CycNumber {
        let mut base = self.clone();
        let mut acc = CycNumber::one().promote(self.conductor);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    pub fn scale(&self, q: &BigRational) -> CycNumber {
        CycNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse, by solving the linear system for
    /// multiplication by `self` in the power basis.
    pub fn inv(&self) -> Result<CycNumber> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.conductor;
        let phi = self.coeffs.len();
        // column k of the system is self·ζ^k
        let mut rows = vec![vec![BigRational::zero(); phi + 1]; phi];
        for k in 0..phi {
            let col = self * &root_of_unity(n, k as i64);
            for (i, c) in col.coeffs.iter().enumerate() {
                rows[i][k] = c.clone();
            }
        }
        rows[0][phi] = BigRational::one();
        let solution = solve(rows).ok_or(Error::DivisionByZero)?;
        Ok(CycNumber {
            conductor: n,
            coeffs: solution,
        })
    }

    fn galois_unchecked(&self, a: usize) -> CycNumber {
        let n = self.conductor;
        let t = table(n);
        let mut coeffs = vec![BigRational::zero(); t.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, m) in &t.powers[(k * a) % n] {
                coeffs[i] += c * BigInt::from(m);
            }
        }
        CycNumber {
            conductor: n,
            coeffs,
        }
    }

    /// The automorphism `ζ_N ↦ ζ_N^a`, for `a` coprime to `N`.
    pub fn galois(&self, a: u64) -> Result<CycNumber> {
        let n = self.conductor;
        if (a as usize % n).gcd(&n) != 1 && n > 1 {
            return Err(Error::InvalidArgument(format!("{a} is not a unit mod {n}")));
        }
        Ok(self.galois_unchecked(a as usize % n.max(1)))
    }

    /// Complex conjugation.
    pub fn conj(&self) -> CycNumber {
        let n = self.conductor;
        self.galois_unchecked((n - 1) % n.max(1))
    }
}

// Gauss-Jordan elimination on an augmented system with a unique solution.
fn solve(mut rows: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let n = rows.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for x in rows[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..=n {
                    let delta = &factor * &rows[col][c];
                    rows[r][c] -= delta;
                }
            }
        }
    }
    Some(rows.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// `ζ_N^k`.
pub fn root_of_unity(n: usize, k: i64) -> CycNumber {
    assert!(n >= 1, "conductor must be positive");
    let t = table(n);
    let k = k.rem_euclid(n as i64) as usize;
    let mut coeffs = vec![BigRational::zero(); t.phi];
    for &(i, m) in &t.powers[k] {
        coeffs[i] = BigRational::from_integer(BigInt::from(m));
    }
    CycNumber {
        conductor: n,
        coeffs,
    }
}

/// A primitive fourth root of unity.
pub fn imag_unit() -> CycNumber {
    root_of_unity(4, 1)
}

/// `σ : ζ ↦ ζ^p` on an element whose conductor is coprime to `p`.
pub fn apply_sigma(x: &CycNumber, p: OddPrime) -> Result<CycNumber> {
    if (x.conductor as u64).is_multiple_of(p.get()) {
        return Err(Error::ConductorNotCoprime {
            conductor: x.conductor,
            p: p.get(),
        });
    }
    x.galois(p.get())
}

/// The quadratic Gauss sum `Σ_{t=1}^{q-1} (t/q) ζ_q^t`, whose square is
/// `(-1)^{(q-1)/2} q`.
pub fn gauss_sum(q: OddPrime) -> CycNumber {
    let n = q.as_usize();
    let mut acc = CycNumber::zero(n);
    for t in 1..n {
        let s = legendre(t as i64, q).expect("t is a unit");
        let term = root_of_unity(n, t as i64);
        acc = if s.is_plus() {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// [`gauss_sum`] for a prime `q` different from the acting prime `p`.
pub fn gauss_sqrt(q: u64, p: OddPrime) -> Result<CycNumber> {
    let q = OddPrime::new(q)?;
    if q == p {
        return Err(Error::InvalidArgument(format!(
            "q = {q} must differ from p"
        )));
    }
    Ok(gauss_sum(q))
}

/// A square root of `2s`: `ζ_8 + ζ_8^7` for `s = +1` and `ζ_8 + ζ_8^3` for
/// `s = -1`.
pub fn sqrt_of_sign_times_two(s: Sign) -> CycNumber {
    let other = if s.is_plus() { 7 } else { 3 };
    &root_of_unity(8, 1) + &root_of_unity(8, other)
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &CycNumber) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = CycNumber::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNumber {}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "z{}^{}", self.conductor, k)?,
                (_, false) => write!(f, "{a}*z{}^{}", self.conductor, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn add_coeffs(a: &CycNumber, b: &CycNumber, negate_b: bool) -> CycNumber {
    let combine = |x: &[BigRational], y: &[BigRational], n: usize| -> CycNumber {
        let coeffs = x
            .iter()
            .zip(y)
            .map(|(u, v)| if negate_b { u - v } else { u + v })
            .collect();
        CycNumber {
            conductor: n,
            coeffs,
        }
    };
    if a.conductor == b.conductor {
        combine(&a.coeffs, &b.coeffs, a.conductor)
    } else {
        let (a, b) = CycNumber::common(a, b);
        combine(&a.coeffs, &b.coeffs, a.conductor)
    }
}

fn mul_same(a: &CycNumber, b: &CycNumber) -> CycNumber {
    let n = a.conductor;
    let t = table(n);
    let mut product = vec![BigRational::zero(); t.phi];
    let mut overflow: Vec<BigRational> = Vec::new();
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let k = i + j;
            let term = x * y;
            if k < t.phi {
                product[k] += term;
            } else {
                let idx = k - t.phi;
                if overflow.len() <= idx {
                    overflow.resize(idx + 1, BigRational::zero());
                }
                overflow[idx] += term;
            }
        }
    }
    for (idx, c) in overflow.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for &(i, m) in &t.powers[(idx + t.phi) % n] {
            product[i] += &c * BigInt::from(m);
        }
    }
    CycNumber {
        conductor: n,
        coeffs: product,
    }
}

impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        add_coeffs(self, rhs, false)
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        add_coeffs(self, rhs, true)
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        if self.conductor == rhs.conductor {
            mul_same(self, rhs)
        } else {
            let (a, b) = CycNumber::common(self, rhs);
            mul_same(&a, &b)
        }
    }
}

impl Add for CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: CycNumber) -> CycNumber {
        &self + &rhs
    }
}

impl Sub for CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: CycNumber) -> CycNumber {
        &self - &rhs
    }
}

impl Mul for CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: CycNumber) -> CycNumber {
        &self * &rhs
    }
}

impl AddAssign<&CycNumber> for CycNumber {
    fn add_assign(&mut self, rhs: &CycNumber) {
        if self.conductor == rhs.conductor {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                if !y.is_zero() {
                    *x += y;
                }
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}
