//! Descriptor calculus for Humphreys products of spin characters.
//!
//! A character is carried as its degree, its associatedness and one value on
//! a designated element: `χ_i(t_i)` for a non-self-associated factor and
//! `δ_i(t_i) = χ_i^+(t_i) - χ_i^-(t_i)` for a self-associated one.

use crate::cyclotomic::{imag_unit, CycMatrix, CycNumber};
use crate::error::{Error, Result};
use crate::partitions::Associatedness;
use crate::signs::Sign;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCharDescriptor {
    pub degree: u64,
    pub assoc: Associatedness,
    pub tagged_value: Option<CycNumber>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HumphreysDescriptor {
    pub degree: u64,
    pub assoc: Associatedness,
    /// Number of non-self-associated factors.
    pub s: usize,
    pub tagged_value: Option<CycNumber>,
}

impl HumphreysDescriptor {
    /// Views the product as a single factor of a larger product.
    pub fn as_factor(&self) -> LocalCharDescriptor {
        LocalCharDescriptor {
            degree: self.degree,
            assoc: self.assoc,
            tagged_value: self.tagged_value.clone(),
        }
    }
}

/// The Humphreys product of `factors`: `s` counts the non-self-associated
/// factors, the product is non-self-associated iff `s` is odd, its degree is
/// `2^{⌊s/2⌋} ∏ χ_i(1)` and its tagged value `(2i)^{⌊s/2⌋} ∏ v_i`.
pub fn combine(factors: &[LocalCharDescriptor]) -> Result<HumphreysDescriptor> {
    if factors.is_empty() {
        return Err(Error::InvalidArgument(
            "a Humphreys product needs at least one factor".into(),
        ));
    }
    if let Some(bad) = factors.iter().find(|f| f.degree == 0) {
        return Err(Error::InvalidArgument(format!(
            "factor degree must be positive, got {}",
            bad.degree
        )));
    }
    let s = factors
        .iter()
        .filter(|f| !f.assoc.is_self_associated())
        .count();
    let half = s / 2;
    let overflow = || Error::SizeGuard("degree exceeds 64 bits".into());
    let mut degree = 1u64.checked_shl(half as u32).ok_or_else(overflow)?;
    for f in factors {
        degree = degree.checked_mul(f.degree).ok_or_else(overflow)?;
    }
    let tagged_value = factors
        .iter()
        .map(|f| f.tagged_value.clone())
        .collect::<Option<Vec<_>>>()
        .map(|values| {
            let two_i = &CycNumber::from_integer(2) * &imag_unit();
            values
                .iter()
                .fold(two_i.pow(half as u32), |acc, v| &acc * v)
        });
    Ok(HumphreysDescriptor {
        degree,
        assoc: Associatedness::from_parity(s % 2 == 1),
        s,
        tagged_value,
    })
}

fn rotation(sign: Sign) -> CycMatrix {
    match sign {
        Sign::Plus => CycMatrix::identity(2),
        Sign::Minus => CycMatrix::from_integers(&[&[0, -1], &[1, 0]]).expect("2x2"),
    }
}

/// The image `R(γ_1, γ_2)` in the restriction of a product of two
/// non-self-associated factors, given `P_1(γ_1)`, `P_2(γ_2)` and the signs
/// `(ε(γ_1), ε(γ_2))`, which must agree.
pub fn two_factor_matrix(p1: &CycMatrix, p2: &CycMatrix, signs: (Sign, Sign)) -> Result<CycMatrix> {
    if signs.0 != signs.1 {
        return Err(Error::InvalidArgument(
            "the two sign values must agree".into(),
        ));
    }
    Ok(rotation(signs.0).kron(&p1.kron(p2)))
}

/// `δ(γ) = tr(P_+ R) - tr(P_- R)`, where `P_±` project onto the `±i`
/// eigenspaces of `J ⊗ I` with `J` the rotation block. Since
/// `P_+ - P_- = -i (J ⊗ I)`, this is a single trace.
pub fn delta_from_two_factor(r: &CycMatrix) -> Result<CycNumber> {
    if !r.dim().is_multiple_of(2) {
        return Err(Error::DimensionMismatch(format!(
            "dimension {} is odd",
            r.dim()
        )));
    }
    let j = rotation(Sign::Minus).kron(&CycMatrix::identity(r.dim() / 2));
    let weight = j.scale(&-imag_unit());
    Ok(weight.checked_mul(r)?.trace())
}
