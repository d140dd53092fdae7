//! Legendre symbols and the signs attached to spin characters and weights.
//!
//! `N_λ^η` is always an integer: an even part has even p'-part, so dividing
//! it by `2η` leaves `(m/2)·η`. It is therefore stored as a [`BigInt`].

use std::fmt;
use std::ops::{Mul, MulAssign, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{associatedness, p_valuation, BarPartition, OddPrime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn parity(k: u64) -> Sign {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn pow(self, k: u64) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::parity(k),
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl std::iter::Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Plus, Mul::mul)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Sign> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            other => Err(Error::InvalidArgument(format!(
                "expected +1 or -1, got {other:?}"
            ))),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i64(self.to_i64())
    }
}

/// The prime `p` together with the type `η` of the double cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpinContext {
    pub p: OddPrime,
    pub eta: Sign,
}

impl SpinContext {
    pub fn new(p: u64, eta: Sign) -> Result<Self> {
        Ok(SpinContext {
            p: OddPrime::new(p)?,
            eta,
        })
    }

    /// `(-1/p)`.
    pub fn minus_one_symbol(&self) -> Sign {
        Sign::parity(self.p.half() as u64)
    }

    /// `(2η/p)`.
    pub fn two_eta_symbol(&self) -> Sign {
        let two = legendre(2, self.p).expect("p is odd");
        match self.eta {
            Sign::Plus => two,
            Sign::Minus => two * self.minus_one_symbol(),
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let m128 = m as u128;
    let mut b = base as u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// The Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre(a: i64, p: OddPrime) -> Result<Sign> {
    let r = a.rem_euclid(p.get() as i64) as u64;
    legendre_residue(r, p, || a.to_string())
}

pub fn legendre_big(a: &BigInt, p: OddPrime) -> Result<Sign> {
    let m = BigInt::from(p.get());
    let mut r = a % &m;
    if r.is_negative() {
        r += &m;
    }
    legendre_residue(r.to_u64().expect("residue fits"), p, || a.to_string())
}

fn legendre_residue(r: u64, p: OddPrime, show: impl Fn() -> String) -> Result<Sign> {
    if r == 0 {
        return Err(Error::DivisibleByP {
            value: show(),
            p: p.get(),
        });
    }
    if pow_mod(r, (p.get() - 1) / 2, p.get()) == 1 {
        Ok(Sign::Plus)
    } else {
        Ok(Sign::Minus)
    }
}

/// The sign `((-1)^{ν_p(m)} m_{p'} / p)` by which `σ` multiplies `√m`.
pub fn sigma_sqrt_sign(m: i64, p: OddPrime) -> Result<Sign> {
    if m == 0 {
        return Err(Error::InvalidArgument("square root of zero".into()));
    }
    let (v, rest) = p_valuation(m.unsigned_abs(), p);
    let signed = rest as i64 * m.signum() * Sign::parity(v as u64).to_i64();
    legendre(signed, p)
}

/// A nonzero integer such as `N_λ^η`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedInteger(pub BigInt);

impl SignedInteger {
    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn legendre(&self, p: OddPrime) -> Result<Sign> {
        legendre_big(&self.0, p)
    }
}

impl fmt::Display for SignedInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

// `(-1)^{⌊(n-l)/2⌋}` times, for each part, its p'-part (halved and twisted by
// η when even) and `level_sign` of its valuation.
fn signed_product(
    lambda: &BarPartition,
    ctx: SpinContext,
    level_sign: impl Fn(u32) -> Sign,
) -> SignedInteger {
    let n = lambda.size() as u64;
    let l = lambda.len() as u64;
    let mut acc = BigInt::from(Sign::parity((n - l) / 2).to_i64());
    for &part in lambda.parts() {
        let (v, rest) = p_valuation(part as u64, ctx.p);
        let mut factor = if part % 2 == 1 {
            BigInt::from(rest)
        } else {
            BigInt::from(rest / 2) * ctx.eta.to_i64()
        };
        factor *= level_sign(v).to_i64();
        acc *= factor;
    }
    debug_assert!(!acc.is_zero());
    SignedInteger(acc)
}

/// `N_λ^η = (-1)^{⌊(n-l)/2⌋} ∏ n'_j`.
pub fn n_lambda(lambda: &BarPartition, ctx: SpinContext) -> SignedInteger {
    signed_product(lambda, ctx, |v| Sign::parity(v as u64))
}

/// `M_λ^η`, with `(-1/p)^{ν_p}` in place of `(-1)^{ν_p}`.
pub fn m_lambda(lambda: &BarPartition, ctx: SpinContext) -> SignedInteger {
    let minus = ctx.minus_one_symbol();
    signed_product(lambda, ctx, move |v| minus.pow(v as u64))
}

/// `μ_λ = (N_λ^η / p)`.
pub fn mu_lambda(lambda: &BarPartition, ctx: SpinContext) -> Sign {
    n_lambda(lambda, ctx)
        .legendre(ctx.p)
        .expect("N_λ is built from p'-parts")
}

/// The two formulas relating `μ_λ` to the core.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreCase {
    /// λ even-type or κ odd-type: exponent `⌊w/2⌋`.
    Floor,
    /// λ odd-type or κ even-type: exponent `⌈w/2⌉`.
    Ceil,
}

/// The cases that apply to a partition of bar weight `w` over `kappa`. The
/// type of λ is that of κ exactly when `w` is even.
pub fn core_cases(kappa: &BarPartition, w: usize) -> Vec<CoreCase> {
    let kappa_even = associatedness(kappa).is_self_associated();
    let lambda_even = kappa_even == w.is_multiple_of(2);
    let mut cases = Vec::with_capacity(2);
    if lambda_even || !kappa_even {
        cases.push(CoreCase::Floor);
    }
    if !lambda_even || kappa_even {
        cases.push(CoreCase::Ceil);
    }
    cases
}

/// `(N_κ^η/p)·(-1/p)^{⌊w/2⌋ or ⌈w/2⌉}·(2η/p)^w`. The case is derived from
/// the types of κ and `w`; a caller-supplied case must be one that applies.
pub fn mu_lambda_via_core(
    kappa: &BarPartition,
    w: usize,
    claimed: Option<CoreCase>,
    ctx: SpinContext,
) -> Result<Sign> {
    let cases = core_cases(kappa, w);
    let case = match claimed {
        Some(c) if !cases.contains(&c) => {
            return Err(Error::InconsistentCase(format!(
                "{c:?} does not apply to core {kappa} at weight {w}"
            )))
        }
        Some(c) => c,
        None => cases[0],
    };
    let w64 = w as u64;
    let exponent = match case {
        CoreCase::Floor => w64 / 2,
        CoreCase::Ceil => w64.div_ceil(2),
    };
    Ok(
        mu_lambda(kappa, ctx)
            * ctx.minus_one_symbol().pow(exponent)
            * ctx.two_eta_symbol().pow(w64),
    )
}

/// `η_j = (-1/p)^j η`.
pub fn eta_level(ctx: SpinContext, j: usize) -> Sign {
    ctx.minus_one_symbol().pow(j as u64) * ctx.eta
}

/// `η' = ((-1)^{|c|}/p) η`.
pub fn eta_prime(ctx: SpinContext, c_norm: usize) -> Sign {
    eta_level(ctx, c_norm)
}

/// `((-1)^{|c|} 2η / p)`, the scalar `t_j^{p-1}`.
pub fn t_power_sign(ctx: SpinContext, c_norm: usize) -> Sign {
    ctx.minus_one_symbol().pow(c_norm as u64) * ctx.two_eta_symbol()
}

/// `μ_ψ = (-1/p)^{⌊e/2⌋} ((-1)^{|c|}2η/p)^e`.
pub fn mu_psi(ctx: SpinContext, c_norm: usize, e: usize) -> Sign {
    ctx.minus_one_symbol().pow(e as u64 / 2) * t_power_sign(ctx, c_norm).pow(e as u64)
}

/// `μ_w = (-1/p)^{⌈w/2⌉} (2η/p)^w`.
pub fn mu_w(ctx: SpinContext, w: usize) -> Sign {
    ctx.minus_one_symbol().pow((w as u64).div_ceil(2)) * ctx.two_eta_symbol().pow(w as u64)
}

/// The three kinds of weight label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightCase {
    /// κ even-type with `w` odd, or κ odd-type with `w` even: an ε-pair.
    NonSelfAssociated,
    /// κ even-type with `w` even.
    EvenSelfAssociated,
    /// κ odd-type with `w` odd.
    OddSelfAssociated,
}

pub fn weight_case(kappa: &BarPartition, w: usize) -> WeightCase {
    let kappa_even = associatedness(kappa).is_self_associated();
    match (kappa_even, w.is_multiple_of(2)) {
        (true, false) | (false, true) => WeightCase::NonSelfAssociated,
        (true, true) => WeightCase::EvenSelfAssociated,
        (false, false) => WeightCase::OddSelfAssociated,
    }
}

/// `μ_{κ,f}`, which depends on `f` only through `w`.
pub fn mu_kappa_f(kappa: &BarPartition, w: usize, ctx: SpinContext) -> Sign {
    let w64 = w as u64;
    let exponent = match weight_case(kappa, w) {
        WeightCase::NonSelfAssociated => w64.div_ceil(2),
        WeightCase::EvenSelfAssociated => w64 / 2,
        WeightCase::OddSelfAssociated => w64 / 2,
    };
    mu_lambda(kappa, ctx) * ctx.minus_one_symbol().pow(exponent) * ctx.two_eta_symbol().pow(w64)
}

/// [`mu_kappa_f`] with a caller-supplied case that must match.
pub fn mu_kappa_f_checked(
    kappa: &BarPartition,
    w: usize,
    claimed: WeightCase,
    ctx: SpinContext,
) -> Result<Sign> {
    let actual = weight_case(kappa, w);
    if actual != claimed {
        return Err(Error::InconsistentCase(format!(
            "core {kappa} at weight {w} is {actual:?}, not {claimed:?}"
        )));
    }
    Ok(mu_kappa_f(kappa, w, ctx))
}

/// `sym = sym_0 · (-1)^{n-|κ|}`; `-1` means the label gives an ε-pair.
pub fn sym(kappa: &BarPartition, n: usize, p: OddPrime) -> Result<Sign> {
    let diff = n as i64 - kappa.size() as i64;
    if diff < 0 || diff % p.get() as i64 != 0 {
        return Err(Error::WeightNotIntegral {
            difference: diff,
            p: p.get(),
        });
    }
    let sym0 = if associatedness(kappa).is_self_associated() {
        Sign::Plus
    } else {
        Sign::Minus
    };
    Ok(sym0 * Sign::parity(diff as u64))
}

/// `(-1)^{⌊s/2⌋}` on raw integers, shared by the product formulas.
pub fn floor_half_sign(s: usize) -> Sign {
    Sign::parity(s as u64 / 2)
}
