//! Pauli-matrix models of `T̃^{*e}·S̃_e^{η'}` and checks of their relations.
//!
//! `T̃^{*e}` is generated by `-1` and `t_{kj}` (`1 ≤ k ≤ e`, `1 ≤ j ≤ r`)
//! with `t_{kj}^{p-1} = τ`, `τ = ((-1)^{|c|}2η/p)`, generators commuting inside
//! a block `k` and anticommuting across blocks. The reflections `s_k` satisfy
//! `s_k² = (s_k s_{k+1})³ = η'` and anticommute when `|k - k'| ≥ 2`.
//!
//! Characters `α` of `T̃` with `α(-1) = -1` are stored as exponents of
//! `ζ_{2(p-1)}`; `α(t_j)^{p-1} = τ` makes every exponent odd exactly when
//! `τ = -1`.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;

use crate::cyclotomic::{
    apply_sigma, imag_unit, root_of_unity, sqrt_of_sign_times_two, CycMatrix, CycNumber,
};
use crate::error::{Error, Result};
use crate::signs::{eta_prime, mu_psi, t_power_sign, Sign, SpinContext};

const GROUP_SIZE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PresentationParams {
    pub ctx: SpinContext,
    pub c_norm: usize,
    pub r: usize,
    pub e: usize,
}

impl PresentationParams {
    pub fn new(ctx: SpinContext, c_norm: usize, r: usize, e: usize) -> Result<Self> {
        if e == 0 || r == 0 {
            return Err(Error::InvalidArgument(format!(
                "need e ≥ 1 and r ≥ 1, got e={e}, r={r}"
            )));
        }
        if c_norm < r {
            return Err(Error::InvalidArgument(format!(
                "|c| = {c_norm} is smaller than r = {r}"
            )));
        }
        Ok(PresentationParams { ctx, c_norm, r, e })
    }

    pub fn e0(&self) -> usize {
        self.e / 2
    }

    pub fn eta_prime(&self) -> Sign {
        eta_prime(self.ctx, self.c_norm)
    }

    /// `τ`, the scalar value of `t_j^{p-1}`.
    pub fn tau(&self) -> Sign {
        t_power_sign(self.ctx, self.c_norm)
    }

    /// Order of the root of unity `ζ_{2(p-1)}` carrying α.
    pub fn alpha_order(&self) -> usize {
        2 * (self.ctx.p.as_usize() - 1)
    }

    /// Common conductor of every matrix entry: `i`, `√±2` and `ζ_{2(p-1)}`.
    pub fn conductor(&self) -> usize {
        self.alpha_order().lcm(&8)
    }

    pub fn dim(&self) -> usize {
        1 << self.e0()
    }
}

/// A character of `T̃` nontrivial on `-1`, as exponents of `ζ_{2(p-1)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alpha {
    pub exps: Vec<usize>,
}

impl Alpha {
    pub fn values(&self, params: &PresentationParams) -> Vec<CycNumber> {
        let n = params.alpha_order();
        self.exps
            .iter()
            .map(|&a| root_of_unity(n, a as i64).promote(params.conductor()))
            .collect()
    }

    /// `εα`: every `t_j` is odd, so each value changes sign.
    pub fn epsilon(&self, params: &PresentationParams) -> Alpha {
        let half = params.alpha_order() / 2;
        Alpha {
            exps: self.exps.iter().map(|&a| (a + half) % (2 * half)).collect(),
        }
    }

    /// The member of `{α, εα}` whose first exponent is below `p - 1`.
    pub fn class_representative(&self, params: &PresentationParams) -> Alpha {
        if self
            .exps
            .first()
            .is_some_and(|&a| a >= params.alpha_order() / 2)
        {
            self.epsilon(params)
        } else {
            self.clone()
        }
    }
}

/// All `(p-1)^r` legal α, exponent vectors in lexicographic order.
pub fn legal_alphas(params: &PresentationParams) -> Vec<Alpha> {
    let n = params.alpha_order();
    let parity = usize::from(!params.tau().is_plus());
    let choices: Vec<usize> = (0..n).filter(|a| a % 2 == parity).collect();
    let mut out = vec![Alpha { exps: Vec::new() }];
    for _ in 0..params.r {
        out = out
            .into_iter()
            .flat_map(|a| {
                choices.iter().map(move |&c| {
                    let mut exps = a.exps.clone();
                    exps.push(c);
                    Alpha { exps }
                })
            })
            .collect();
    }
    out
}

/// One representative per ε-orbit, `½(p-1)^r` in all.
pub fn alpha_class_representatives(params: &PresentationParams) -> Vec<Alpha> {
    legal_alphas(params)
        .into_iter()
        .filter(|a| a.class_representative(params) == *a)
        .collect()
}

/// `F_1, …, F_{2e_0+1}`: pairwise anticommuting involutions of size `2^{e_0}`.
pub fn build_f(e0: usize) -> Vec<CycMatrix> {
    let id = CycMatrix::identity(2);
    let (x, y, z) = (
        CycMatrix::pauli_x(),
        CycMatrix::pauli_y(),
        CycMatrix::pauli_z(),
    );
    let tensor = |k0: usize, mid: &CycMatrix| {
        let mut factors = vec![id.clone(); e0 - k0];
        factors.push(mid.clone());
        factors.extend(std::iter::repeat_n(z.clone(), k0 - 1));
        CycMatrix::kron_all(&factors)
    };
    let mut out = Vec::with_capacity(2 * e0 + 1);
    for k0 in 1..=e0 {
        out.push(tensor(k0, &x));
        out.push(tensor(k0, &y));
    }
    out.push(CycMatrix::kron_all(&vec![z; e0]));
    out
}

/// `E = σ_y ⊗ σ_x ⊗ σ_y ⊗ ⋯` with `e_0` factors.
pub fn build_e(e0: usize) -> CycMatrix {
    let factors: Vec<CycMatrix> = (0..e0)
        .map(|i| {
            if i % 2 == 0 {
                CycMatrix::pauli_y()
            } else {
                CycMatrix::pauli_x()
            }
        })
        .collect();
    CycMatrix::kron_all(&factors)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorImages {
    /// `t[k][j]` is the image of `t_{k+1,j+1}`.
    pub t: Vec<Vec<CycMatrix>>,
    /// `s[k]` is the image of `s_{k+1}`; empty for the restriction to `T̃^{*e}`.
    pub s: Vec<CycMatrix>,
    pub minus_one: CycMatrix,
    /// `alpha[k][j] = α_k(t_j)`.
    pub alpha: Vec<Vec<CycNumber>>,
}

impl GeneratorImages {
    fn generators(&self) -> impl Iterator<Item = &CycMatrix> {
        self.t.iter().flatten().chain(self.s.iter())
    }

    fn scaled(&self, sign: Sign) -> GeneratorImages {
        let f = |m: &CycMatrix| if sign.is_plus() { m.clone() } else { -m };
        GeneratorImages {
            t: self
                .t
                .iter()
                .map(|row| row.iter().map(f).collect())
                .collect(),
            s: self.s.iter().map(f).collect(),
            minus_one: self.minus_one.clone(),
            alpha: self.alpha.clone(),
        }
    }
}

/// First relation found to fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness(pub String);

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "relation fails: {}", self.0)
    }
}

pub type Check = std::result::Result<(), Witness>;

fn require(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(Witness(what()))
    }
}

fn check_alpha_row(params: &PresentationParams, row: &[CycNumber]) -> Result<()> {
    if row.len() != params.r {
        return Err(Error::DimensionMismatch(format!(
            "expected {} α values, got {}",
            params.r,
            row.len()
        )));
    }
    let tau = CycNumber::from_sign(params.tau());
    let exponent = params.ctx.p.as_usize() as u32 - 1;
    for (j, v) in row.iter().enumerate() {
        if v.pow(exponent) != tau {
            return Err(Error::IllegalCharacter(format!(
                "α(t_{}) = {v} does not satisfy α^{exponent} = {}",
                j + 1,
                params.tau()
            )));
        }
    }
    Ok(())
}

/// `t_{kj} ↦ α_k(t_j) F_k`, the irreducible representation of `T̃^{*e}`.
pub fn delta_multi(
    params: &PresentationParams,
    alpha: &[Vec<CycNumber>],
) -> Result<GeneratorImages> {
    if alpha.len() != params.e {
        return Err(Error::DimensionMismatch(format!(
            "expected {} rows of α values, got {}",
            params.e,
            alpha.len()
        )));
    }
    for row in alpha {
        check_alpha_row(params, row)?;
    }
    let f = build_f(params.e0());
    let t = alpha
        .iter()
        .enumerate()
        .map(|(k, row)| row.iter().map(|v| f[k].scale(v)).collect())
        .collect();
    Ok(GeneratorImages {
        t,
        s: Vec::new(),
        minus_one: -&CycMatrix::identity(params.dim()),
        alpha: alpha.to_vec(),
    })
}

/// `Δ_α^+`: `t_{kj} ↦ α(t_j) F_k` and `s_k ↦ (F_k - F_{k+1})/√(2η')`.
pub fn delta_alpha_plus(
    params: &PresentationParams,
    alpha_values: &[CycNumber],
) -> Result<GeneratorImages> {
    let mut images = delta_multi(params, &vec![alpha_values.to_vec(); params.e])?;
    let f = build_f(params.e0());
    let eta_p = params.eta_prime();
    let root = sqrt_of_sign_times_two(eta_p);
    let inv_root = root.scale(&num_rational::BigRational::new(
        (eta_p.to_i64()).into(),
        2.into(),
    ));
    images.s = (0..params.e.saturating_sub(1))
        .map(|k| (&f[k] - &f[k + 1]).scale(&inv_root))
        .collect();
    Ok(images)
}

fn anticommute(a: &CycMatrix, b: &CycMatrix) -> bool {
    &(a * b) + &(b * a) == CycMatrix::zero(a.dim())
}

fn commute(a: &CycMatrix, b: &CycMatrix) -> bool {
    a * b == b * a
}

/// `-1 ↦ -I`, `t_{kj}^{p-1} = τ`, and the block commutation pattern.
pub fn verify_t_relations(images: &GeneratorImages, params: &PresentationParams) -> Check {
    let dim = params.dim();
    require(images.minus_one == -&CycMatrix::identity(dim), || {
        "image of -1 is not -I".into()
    })?;
    let tau = CycMatrix::scalar(dim, CycNumber::from_sign(params.tau()));
    let exponent = params.ctx.p.as_usize() as u32 - 1;
    let flat: Vec<((usize, usize), &CycMatrix)> = images
        .t
        .iter()
        .enumerate()
        .flat_map(|(k, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, m)| ((k + 1, j + 1), m))
        })
        .collect();
    for &((k, j), m) in &flat {
        require(m.pow(exponent) == tau, || {
            format!("t_{k}{j}^{exponent} = {}", params.tau())
        })?;
    }
    for (a, &((k, j), x)) in flat.iter().enumerate() {
        for &((k2, j2), y) in &flat[a + 1..] {
            if k == k2 {
                require(commute(x, y), || format!("[t_{k}{j}, t_{k2}{j2}] = 1"))?;
            } else {
                require(anticommute(x, y), || format!("[t_{k}{j}, t_{k2}{j2}] = -1"))?;
            }
        }
    }
    Ok(())
}

/// `s_k² = η'`, `(s_k s_{k+1})³ = η'`, and `[s_k, s_{k'}] = -1` for `|k - k'| ≥ 2`.
pub fn verify_s_relations(images: &GeneratorImages, params: &PresentationParams) -> Check {
    let eta = CycMatrix::scalar(params.dim(), CycNumber::from_sign(params.eta_prime()));
    require(images.s.len() + 1 == params.e, || {
        format!("expected {} reflections", params.e - 1)
    })?;
    for (k, s) in images.s.iter().enumerate() {
        require(s * s == eta, || format!("s_{}^2 = η'", k + 1))?;
    }
    for (k, pair) in images.s.windows(2).enumerate() {
        require((&pair[0] * &pair[1]).pow(3) == eta, || {
            format!("(s_{} s_{})^3 = η'", k + 1, k + 2)
        })?;
    }
    for k in 0..images.s.len() {
        for k2 in k + 2..images.s.len() {
            require(anticommute(&images.s[k], &images.s[k2]), || {
                format!("[s_{}, s_{}] = -1", k + 1, k2 + 1)
            })?;
        }
    }
    Ok(())
}

/// `t_{k+1,j} = -s_k^{-1} t_{kj} s_k = -s_k t_{kj} s_k^{-1}` and
/// `[t_{kj}, s_{k'}] = -1` for `k' ∉ {k-1, k}`.
pub fn verify_action_relations(images: &GeneratorImages, params: &PresentationParams) -> Check {
    require(images.s.len() + 1 == params.e, || {
        format!("expected {} reflections", params.e - 1)
    })?;
    for (k, s) in images.s.iter().enumerate() {
        let s_inv = s
            .inverse()
            .map_err(|_| Witness(format!("s_{} is invertible", k + 1)))?;
        for j in 0..params.r {
            let (t, next) = (&images.t[k][j], &images.t[k + 1][j]);
            let lhs = -&(&(&s_inv * t) * s);
            require(lhs == *next, || {
                format!(
                    "t_{}{} = -s_{}^-1 t_{}{} s_{}",
                    k + 2,
                    j + 1,
                    k + 1,
                    k + 1,
                    j + 1,
                    k + 1
                )
            })?;
            let rhs = -&(&(s * t) * &s_inv);
            require(rhs == *next, || {
                format!(
                    "t_{}{} = -s_{} t_{}{} s_{}^-1",
                    k + 2,
                    j + 1,
                    k + 1,
                    k + 1,
                    j + 1,
                    k + 1
                )
            })?;
        }
    }
    for k in 1..=params.e {
        for k2 in 1..params.e {
            if k2 + 1 == k || k2 == k {
                continue;
            }
            for j in 0..params.r {
                require(anticommute(&images.t[k - 1][j], &images.s[k2 - 1]), || {
                    format!("[t_{k}{}, s_{k2}] = -1", j + 1)
                })?;
            }
        }
    }
    Ok(())
}

/// All presentation relations that apply at this `e`.
pub fn verify_all(images: &GeneratorImages, params: &PresentationParams) -> Check {
    verify_t_relations(images, params)?;
    if params.e >= 2 {
        verify_s_relations(images, params)?;
        verify_action_relations(images, params)?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaEquivalence {
    pub mu: Sign,
    pub intertwiner: CycMatrix,
}

/// Image of `t_{1j} t_{2j} ⋯ t_{ej}`.
fn diagonal_product(images: &GeneratorImages, j: usize) -> CycMatrix {
    images
        .t
        .iter()
        .fold(CycMatrix::identity(images.minus_one.dim()), |acc, row| {
            &acc * &row[j]
        })
}

fn sigma_matrix(
    m: &CycMatrix,
    params: &PresentationParams,
) -> std::result::Result<CycMatrix, Witness> {
    m.try_map(|x| apply_sigma(&x.promote(params.conductor()), params.ctx.p))
        .map_err(|e| Witness(e.to_string()))
}

/// Finds `μ` with `σ(Δ^+(g)) = U Δ^μ(g) U^{-1}` on every generator, for the
/// intertwiner `U = I` (`p ≡ 1 mod 4`) or `U = E` (`p ≡ 3 mod 4`), and checks
/// it against `((-1)^{|c|+e_0}2η/p)`. For even `e` it also checks
/// `Δ^- = F_{2e_0+1} Δ^+ F_{2e_0+1}`; for odd `e`, that `Δ^±` take distinct
/// scalar values `±i^{e_0}α(t_j)^e` on the central elements `t_{1j}⋯t_{ej}`.
pub fn sigma_equivalence(
    images: &GeneratorImages,
    params: &PresentationParams,
) -> std::result::Result<SigmaEquivalence, Witness> {
    let e0 = params.e0();
    let dim = params.dim();
    let u = if params.ctx.p.is_one_mod_four() {
        CycMatrix::identity(dim)
    } else {
        build_e(e0)
    };
    let u_inv = u
        .inverse()
        .map_err(|_| Witness("intertwiner is invertible".into()))?;
    let sigma_images: Vec<CycMatrix> = images
        .generators()
        .map(|m| sigma_matrix(m, params))
        .collect::<std::result::Result<_, _>>()?;

    let found = [Sign::Plus, Sign::Minus].into_iter().find(|&mu| {
        let twisted = images.scaled(mu);
        let holds = twisted
            .generators()
            .zip(&sigma_images)
            .all(|(d, sd)| *sd == &(&u * d) * &u_inv);
        holds
    });
    let mu =
        found.ok_or_else(|| Witness("σ(Δ^+) = U Δ^± U^-1 for the named intertwiner".into()))?;

    let expected = params.ctx.minus_one_symbol().pow(e0 as u64) * params.tau();
    require(mu == expected, || format!("μ' = {expected}, found {mu}"))?;

    let minus = images.scaled(Sign::Minus);
    if params.e.is_multiple_of(2) {
        let f_last = build_f(e0).pop().expect("at least one F");
        for (plus, neg) in images.generators().zip(minus.generators()) {
            require(&(&f_last * plus) * &f_last == *neg, || {
                "Δ^- = F_{2e0+1} Δ^+ F_{2e0+1}".into()
            })?;
        }
    } else {
        let i_e0 = imag_unit().pow(e0 as u32);
        for j in 0..params.r {
            let expected = &i_e0
                * &images
                    .alpha
                    .iter()
                    .fold(CycNumber::one(), |acc, row| &acc * &row[j]);
            let plus = diagonal_product(images, j).as_scalar();
            let neg = diagonal_product(&minus, j).as_scalar();
            require(plus.as_ref() == Some(&expected), || {
                format!("Δ^+(t_1{}⋯t_e{}) = i^e0 α^e I", j + 1, j + 1)
            })?;
            require(neg == Some(-&expected), || {
                format!("Δ^-(t_1{}⋯t_e{}) = -i^e0 α^e I", j + 1, j + 1)
            })?;
        }
    }
    Ok(SigmaEquivalence { mu, intertwiner: u })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenSplit {
    pub value_plus: CycNumber,
    pub value_minus: CycNumber,
    /// `μ''` with `σ(value_plus) = value_{μ''}`.
    pub mu: Sign,
}

/// For even `e`, splits `Δ^+(t_{11}⋯t_{e1}) = i^{e_0}α(t_1)^e σ_z^{⊗e_0}` into
/// its two scalar eigenvalues and reads off `μ''` from `σ`. Every
/// `j ≤ r` is checked; the values returned are those for `j = 1`.
pub fn even_split_traces(
    images: &GeneratorImages,
    params: &PresentationParams,
) -> Result<EvenSplit> {
    if !params.e.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "even split needs even e, got {}",
            params.e
        )));
    }
    let e0 = params.e0();
    let f_last = build_f(e0).pop().expect("at least one F");
    let mut first = None;
    for j in 0..params.r {
        let m = diagonal_product(images, j);
        let x = m.get(0, 0).clone();
        if m != f_last.scale(&x) {
            return Err(Error::InconsistentCase(format!(
                "Δ^+(t_1{0}⋯t_e{0}) is not a multiple of F_{{2e0+1}}",
                j + 1
            )));
        }
        let alpha_e = images
            .alpha
            .iter()
            .fold(CycNumber::one(), |acc, row| &acc * &row[j]);
        if x != &imag_unit().pow(e0 as u32) * &alpha_e {
            return Err(Error::InconsistentCase(format!(
                "eigenvalue on t_1{0}⋯t_e{0} is not i^e0 α^e",
                j + 1
            )));
        }
        let sx = apply_sigma(&x.promote(params.conductor()), params.ctx.p)?;
        let mu = if sx == x {
            Sign::Plus
        } else if sx == -&x {
            Sign::Minus
        } else {
            return Err(Error::InconsistentCase(
                "σ does not permute the two eigenvalues".into(),
            ));
        };
        let split = EvenSplit {
            value_minus: -&x,
            value_plus: x,
            mu,
        };
        match &first {
            None => first = Some(split),
            Some(prev) if prev.mu != mu => {
                return Err(Error::InconsistentCase(format!(
                    "μ'' differs between t_11 and t_1{}",
                    j + 1
                )))
            }
            Some(_) => {}
        }
    }
    Ok(first.expect("r ≥ 1"))
}

/// `T̃^{*e}` as normal forms `±∏ t_{kj}^{a_{kj}}` (in `k`-major order).
#[derive(Debug, Clone)]
pub struct TTildeGroup {
    params: PresentationParams,
    positions: usize,
}

/// Element index: bit 0 is the sign, the rest encodes the exponents in base `p-1`.
pub type Element = usize;

impl TTildeGroup {
    pub fn new(params: PresentationParams) -> Result<Self> {
        let positions = params.e * params.r;
        let base = params.ctx.p.get() - 1;
        base.checked_pow(positions as u32)
            .filter(|&s| s <= GROUP_SIZE_LIMIT)
            .ok_or_else(|| Error::SizeGuard(format!("(p-1)^(er) exceeds {GROUP_SIZE_LIMIT}")))?;
        Ok(TTildeGroup { params, positions })
    }

    fn base(&self) -> usize {
        self.params.ctx.p.as_usize() - 1
    }

    pub fn order(&self) -> usize {
        2 * self.base().pow(self.positions as u32)
    }

    fn decode(&self, x: Element) -> (bool, Vec<usize>) {
        let mut rest = x >> 1;
        let exps = (0..self.positions)
            .map(|_| {
                let (q, r) = rest.div_rem(&self.base());
                rest = q;
                r
            })
            .collect();
        (x & 1 == 1, exps)
    }

    fn encode(&self, negative: bool, exps: &[usize]) -> Element {
        let code = exps.iter().rev().fold(0, |acc, &a| acc * self.base() + a);
        (code << 1) | usize::from(negative)
    }

    pub fn minus_one(&self) -> Element {
        1
    }

    /// The generator `t_{kj}` (1-based).
    pub fn generator(&self, k: usize, j: usize) -> Element {
        let mut exps = vec![0; self.positions];
        exps[(k - 1) * self.params.r + (j - 1)] = 1;
        self.encode(false, &exps)
    }

    pub fn mul(&self, x: Element, y: Element) -> Element {
        let (nx, a) = self.decode(x);
        let (ny, b) = self.decode(y);
        let r = self.params.r;
        let mut negative = nx ^ ny;
        for q in 0..self.positions {
            if b[q] % 2 == 0 {
                continue;
            }
            for q2 in q + 1..self.positions {
                if q2 / r != q / r && a[q2] % 2 == 1 {
                    negative = !negative;
                }
            }
        }
        let base = self.base();
        let overflow_negative = !self.params.tau().is_plus();
        let exps: Vec<usize> = a
            .iter()
            .zip(&b)
            .map(|(&u, &v)| {
                if u + v >= base {
                    negative ^= overflow_negative;
                    u + v - base
                } else {
                    u + v
                }
            })
            .collect();
        self.encode(negative, &exps)
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order()
    }

    pub fn generators(&self) -> Vec<Element> {
        let mut gens = vec![self.minus_one()];
        for k in 1..=self.params.e {
            for j in 1..=self.params.r {
                gens.push(self.generator(k, j));
            }
        }
        gens
    }

    pub fn inverse(&self, x: Element) -> Element {
        let (_, a) = self.decode(x);
        let exps: Vec<usize> = a.iter().map(|&u| (self.base() - u) % self.base()).collect();
        let candidate = self.encode(false, &exps);
        candidate ^ self.mul(x, candidate)
    }

    fn closure(&self, seeds: impl IntoIterator<Item = Element>) -> HashSet<Element> {
        let seeds: Vec<Element> = seeds.into_iter().collect();
        let mut set: HashSet<Element> = HashSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in &seeds {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCount {
    pub order: usize,
    pub center: usize,
    pub classes: usize,
    pub linear: usize,
    pub nonlinear: usize,
    /// Common degree of the nonlinear characters, when the degree sum forces one.
    pub nonlinear_degree: Option<usize>,
}

/// Counts classes of `T̃^{*e}` by orbit enumeration and derives the character
/// degrees: `linear = |G : G'|`; the nonlinear characters share degree `d`
/// when `(|G| - linear)/nonlinear = d² = |G : Z|`, the largest value a
/// character degree can have over an abelian normal subgroup like `Z`.
pub fn brute_force_class_count(params: &PresentationParams) -> Result<ClassCount> {
    let g = TTildeGroup::new(*params)?;
    let order = g.order();
    let inv: Vec<Element> = g.elements().map(|x| g.inverse(x)).collect();
    let gens = g.generators();

    let center = g
        .elements()
        .filter(|&z| gens.iter().all(|&t| g.mul(z, t) == g.mul(t, z)))
        .count();

    let mut seen = vec![false; order];
    let mut classes = 0;
    for x in g.elements() {
        if seen[x] {
            continue;
        }
        classes += 1;
        seen[x] = true;
        let mut frontier = vec![x];
        while let Some(y) = frontier.pop() {
            for &t in &gens {
                let c = g.mul(g.mul(t, y), inv[t]);
                if !seen[c] {
                    seen[c] = true;
                    frontier.push(c);
                }
            }
        }
    }

    let elements: Vec<Element> = g.elements().collect();
    let commutators: HashSet<Element> = elements
        .iter()
        .flat_map(|&x| gens.iter().map(move |&t| (x, t)))
        .map(|(x, t)| g.mul(g.mul(x, t), g.mul(inv[x], inv[t])))
        .collect();
    let derived = g.closure(commutators).len();
    let linear = order / derived;
    let nonlinear = classes - linear;
    let nonlinear_degree = (nonlinear > 0)
        .then(|| (order - linear) / nonlinear)
        .filter(|&sq| sq * nonlinear == order - linear && sq * center == order)
        .and_then(|sq| {
            let d = (sq as f64).sqrt().round() as usize;
            (d * d == sq).then_some(d)
        });
    Ok(ClassCount {
        order,
        center,
        classes,
        linear,
        nonlinear,
        nonlinear_degree,
    })
}

/// The counts claimed for `T̃^{*e}` with `r = 1`, valid for `e ≥ 2`
/// (at `e = 1` the group is abelian).
pub fn expected_class_count(p: usize, e: usize) -> Option<ClassCount> {
    if e < 2 || p < 3 {
        return None;
    }
    let half = ((p - 1) / 2).pow(e as u32);
    let linear = (p - 1).pow(e as u32);
    let (nonlinear, center) = if e.is_multiple_of(2) {
        (half, 2 * half)
    } else {
        (2 * half, 4 * half)
    };
    Some(ClassCount {
        order: 2 * linear,
        center,
        classes: linear + nonlinear,
        linear,
        nonlinear,
        nonlinear_degree: Some(1 << (e / 2)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepsCheckSummary {
    pub alphas_checked: usize,
    pub mu_prime: Sign,
    pub mu_double_prime: Option<Sign>,
    pub mu_psi: Sign,
    pub class_count: Option<ClassCount>,
}

/// Builds `Δ_α^+` for every legal α and runs every check that applies.
pub fn reps_check(params: &PresentationParams) -> Result<RepsCheckSummary> {
    let alphas = legal_alphas(params);
    let mut mu_prime = None;
    let mut mu_double_prime = None;
    let fail = |w: Witness| Error::InconsistentCase(w.to_string());
    for alpha in &alphas {
        let images = delta_alpha_plus(params, &alpha.values(params))?;
        verify_all(&images, params).map_err(fail)?;
        let eq = sigma_equivalence(&images, params).map_err(fail)?;
        if mu_prime.replace(eq.mu).is_some_and(|m| m != eq.mu) {
            return Err(Error::InconsistentCase("μ' depends on α".into()));
        }
        if params.e.is_multiple_of(2) {
            let split = even_split_traces(&images, params)?;
            if mu_double_prime
                .replace(split.mu)
                .is_some_and(|m| m != split.mu)
            {
                return Err(Error::InconsistentCase("μ'' depends on α".into()));
            }
        }
    }
    let class_count = (params.r == 1 && params.e >= 2)
        .then(|| brute_force_class_count(params))
        .transpose()?;
    Ok(RepsCheckSummary {
        alphas_checked: alphas.len(),
        mu_prime: mu_prime.expect("at least one legal α"),
        mu_double_prime,
        mu_psi: mu_psi(params.ctx, params.c_norm, params.e),
        class_count,
    })
}
