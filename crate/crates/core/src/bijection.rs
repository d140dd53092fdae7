//! Brauer-character labels, the label bijection `λ ↔ (κ, f)` and the
//! per-block comparison of the ε/σ actions on both sides.
//!
//! `λ ∈ Λ_κ` is sent to `(κ, f)` through its p-bar-quotient: component `i`
//! (runner pair `{i+1, p-i-1}`) has a p-core tower, and its depth-`t` node
//! with path index `k` fills slot `i·p^t + k` of `C_{t+1}`. Both sides have
//! `½(p-1)p^{d-1}` entries at level `d`, and the weight identity
//! `n = |κ| + Σ |f(ψ)| p^{d(ψ)}` is the size identity of the towers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{
    assemble_bar_quotient, bar_cores_of, bar_quotient, enumerate_lambda_kappa, is_p_bar_core,
    is_p_core, p_core_tower, BarPartition, CoreTower, OddPrime, Partition,
};
use crate::signs::{core_cases, mu_lambda, mu_lambda_via_core, Sign, SpinContext};
use crate::weights::{
    c_d_count, enumerate_weight_labels, sigma_on_weight, sigma_on_weight_by_slots, SlotId,
};

pub type SlotMap = BTreeMap<SlotId, Partition>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// The double cover `S̃_n^η`.
    TildeS,
    /// Its subgroup `Ã_n`.
    TildeA,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Plus,
    Minus,
    Whole,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IBrLabel {
    pub lambda: BarPartition,
    pub side: Side,
    pub variant: Variant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockLabel {
    pub kappa: BarPartition,
    pub n: usize,
    pub ctx: SpinContext,
}

impl BlockLabel {
    pub fn new(kappa: BarPartition, n: usize, ctx: SpinContext) -> Result<Self> {
        if !is_p_bar_core(&kappa, ctx.p) {
            return Err(Error::NotBarCore(kappa.parts().to_vec()));
        }
        let diff = n as i64 - kappa.size() as i64;
        if diff < 0 || diff % ctx.p.get() as i64 != 0 {
            return Err(Error::WeightNotIntegral {
                difference: diff,
                p: ctx.p.get(),
            });
        }
        Ok(BlockLabel { kappa, n, ctx })
    }

    pub fn weight(&self) -> usize {
        (self.n - self.kappa.size()) / self.ctx.p.as_usize()
    }
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "B[{}] n={} p={} eta={}",
            self.kappa, self.n, self.ctx.p, self.ctx.eta
        )
    }
}

/// The Brauer characters of the block on one side. On `S̃_n^η` an odd-type
/// λ gives the ε-pair `β_λ^±` and an even-type λ a single `β_λ`; on `Ã_n`
/// it is the other way round.
pub fn ibr_labels(block: &BlockLabel, side: Side) -> Vec<IBrLabel> {
    let mut out = Vec::new();
    for lambda in enumerate_lambda_kappa(block.n, &block.kappa, block.ctx.p) {
        let odd = !lambda.associatedness().is_self_associated();
        let split = match side {
            Side::TildeS => odd,
            Side::TildeA => !odd,
        };
        let variants: &[Variant] = if split {
            &[Variant::Plus, Variant::Minus]
        } else {
            &[Variant::Whole]
        };
        out.extend(variants.iter().map(|&variant| IBrLabel {
            lambda: lambda.clone(),
            side,
            variant,
        }));
    }
    out
}

/// `λ ↦ (κ, f)`.
pub fn lambda_to_f(lambda: &BarPartition, p: OddPrime) -> Result<(BarPartition, SlotMap)> {
    let q = bar_quotient(lambda, p)?;
    let pu = p.as_usize();
    let mut f = SlotMap::new();
    for (i, component) in q.components.iter().enumerate() {
        let tower = p_core_tower(component, p);
        for t in 0..=tower.depth() {
            let width = pu.pow(t as u32);
            for (k, core) in tower.cores_at_depth(t, p).into_iter().enumerate() {
                if !core.is_empty() {
                    f.insert(
                        SlotId {
                            d: t + 1,
                            index: i * width + k,
                        },
                        core,
                    );
                }
            }
        }
    }
    Ok((q.core, f))
}

/// `(κ, f) ↦ λ`, the inverse of [`lambda_to_f`].
pub fn f_to_lambda(kappa: &BarPartition, f: &SlotMap, p: OddPrime) -> Result<BarPartition> {
    let pu = p.as_usize();
    let half = p.half();
    for (id, core) in f {
        if id.d == 0 || id.index >= c_d_count(id.d, p) {
            return Err(Error::InvalidArgument(format!("slot {id} does not exist")));
        }
        if !is_p_core(core, p) {
            return Err(Error::NotCore(core.parts().to_vec()));
        }
    }
    let max_depth = f.keys().map(|id| id.d - 1).max().unwrap_or(0);
    let components = (0..half)
        .map(|i| {
            let node = |t: usize, k: usize| {
                let id = SlotId {
                    d: t + 1,
                    index: i * pu.pow(t as u32) + k,
                };
                f.get(&id).cloned().unwrap_or_default()
            };
            CoreTower::from_nodes(p, max_depth, &node).assemble(p)
        })
        .collect::<Result<Vec<_>>>()?;
    assemble_bar_quotient(kappa, &components, p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuEntry {
    pub lambda: BarPartition,
    pub f: SlotMap,
    /// `(N_λ^η / p)`.
    pub mu_lambda: Sign,
    /// `μ_{κ,f}` in closed form.
    pub mu_weight: Sign,
    /// `μ_{κ,f}` rebuilt from the slot factors.
    pub mu_slots: Sign,
}

/// Fixed points of ε (or of `S̃_n^η/Ã_n`) and of σ on one side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FixedPoints {
    pub total: usize,
    pub outer: usize,
    pub sigma: usize,
}

impl FixedPoints {
    /// A single orbit of size 1 or 2 under the outer action on which σ acts
    /// trivially (`+1`) or by swapping (`-1`).
    fn add(&mut self, pair: bool, mu: Sign) {
        if pair {
            self.total += 2;
            if mu.is_plus() {
                self.sigma += 2;
            }
        } else {
            self.total += 1;
            self.outer += 1;
            self.sigma += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideComparison {
    pub side: Side,
    pub ibr: FixedPoints,
    pub weights: FixedPoints,
}

impl SideComparison {
    pub fn agrees(&self) -> bool {
        self.ibr == self.weights
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub block: BlockLabel,
    pub w: usize,
    /// Even-type λ, i.e. single Brauer characters on `S̃_n^η`.
    pub ibr_self: usize,
    /// Odd-type λ, i.e. ε-pairs on `S̃_n^η`.
    pub ibr_nonself: usize,
    pub weights_sym_plus: usize,
    pub weights_sym_minus: usize,
    pub mu_table: Vec<MuEntry>,
    pub sides: Vec<SideComparison>,
    pub failure: Option<String>,
    pub note: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

const N6_NOTE: &str =
    "n = 6: exceptional outer automorphisms of A6 and S6 are outside the label model";

/// Compares Brauer-character labels with weight labels for one block.
///
/// Checked in order: the bijection `λ ↦ f` lands in the weight labels of
/// the block, is injective, onto and inverted by [`f_to_lambda`]; each `λ` is
/// odd-type exactly when its label has `sym = -1`; `μ_λ` agrees with
/// `μ_{κ,f}` in closed form, from the slot factors and through the core
/// recurrence; finally the fixed-point counts of the outer action and of σ
/// agree on `S̃_n^η` and on `Ã_n`.
pub fn verify_block(block: &BlockLabel) -> Result<VerificationReport> {
    let ctx = block.ctx;
    let p = ctx.p;
    let w = block.weight();
    let lambdas = enumerate_lambda_kappa(block.n, &block.kappa, p);
    let labels = enumerate_weight_labels(block.n, &block.kappa, p)?;
    let by_f: BTreeMap<&SlotMap, usize> =
        labels.iter().enumerate().map(|(i, l)| (&l.f, i)).collect();

    let mut report = VerificationReport {
        block: block.clone(),
        w,
        ibr_self: 0,
        ibr_nonself: 0,
        weights_sym_plus: labels.iter().filter(|l| l.sym.is_plus()).count(),
        weights_sym_minus: labels.iter().filter(|l| !l.sym.is_plus()).count(),
        mu_table: Vec::new(),
        sides: Vec::new(),
        failure: None,
        note: (block.n == 6).then(|| N6_NOTE.to_string()),
    };
    let mut failures = Vec::new();
    let mut hit = BTreeSet::new();
    let mut ibr_s = FixedPoints::default();
    let mut ibr_a = FixedPoints::default();

    for lambda in &lambdas {
        let odd = !lambda.associatedness().is_self_associated();
        if odd {
            report.ibr_nonself += 1;
        } else {
            report.ibr_self += 1;
        }
        let mu = mu_lambda(lambda, ctx);
        ibr_s.add(odd, mu);
        ibr_a.add(!odd, mu);

        let (core, f) = lambda_to_f(lambda, p)?;
        if core != block.kappa {
            failures.push(format!(
                "{lambda}: bar-quotient core {core} differs from {}",
                block.kappa
            ));
            continue;
        }
        let Some(&idx) = by_f.get(&f) else {
            failures.push(format!(
                "{lambda}: image is not a weight label of the block"
            ));
            continue;
        };
        if !hit.insert(idx) {
            failures.push(format!("{lambda}: image already taken"));
        }
        match f_to_lambda(&block.kappa, &f, p) {
            Ok(back) if back == *lambda => {}
            Ok(back) => failures.push(format!("{lambda}: inverse gives {back}")),
            Err(e) => failures.push(format!("{lambda}: inverse fails: {e}")),
        }
        let label = &labels[idx];
        if odd != !label.sym.is_plus() {
            failures.push(format!(
                "{lambda}: associatedness does not match sym = {}",
                label.sym
            ));
        }
        let mu_weight = sigma_on_weight(label, ctx);
        let mu_slots = sigma_on_weight_by_slots(label, ctx)?;
        if mu != mu_weight || mu != mu_slots {
            failures.push(format!(
                "{lambda}: μ_λ = {mu}, μ_κ,f = {mu_weight}, by slots {mu_slots}"
            ));
        }
        for case in core_cases(&block.kappa, w) {
            let via_core = mu_lambda_via_core(&block.kappa, w, Some(case), ctx)?;
            if via_core != mu {
                failures.push(format!(
                    "{lambda}: core recurrence ({case:?}) gives {via_core}"
                ));
            }
        }
        report.mu_table.push(MuEntry {
            lambda: lambda.clone(),
            f,
            mu_lambda: mu,
            mu_weight,
            mu_slots,
        });
    }
    if hit.len() != labels.len() {
        failures.push(format!(
            "{} weight labels, {} reached by the bijection",
            labels.len(),
            hit.len()
        ));
    }

    let mut weights_s = FixedPoints::default();
    let mut weights_a = FixedPoints::default();
    for label in &labels {
        let pair = !label.sym.is_plus();
        let mu = sigma_on_weight(label, ctx);
        weights_s.add(pair, mu);
        weights_a.add(!pair, mu);
    }
    report.sides = vec![
        SideComparison {
            side: Side::TildeS,
            ibr: ibr_s,
            weights: weights_s,
        },
        SideComparison {
            side: Side::TildeA,
            ibr: ibr_a,
            weights: weights_a,
        },
    ];
    for side in &report.sides {
        if !side.agrees() {
            failures.push(format!(
                "{:?}: Brauer side {:?} vs weight side {:?}",
                side.side, side.ibr, side.weights
            ));
        }
    }
    report.failure = failures.into_iter().next();
    Ok(report)
}

/// Blocks of `S̃_n^η`, in the order of [`bar_cores_of`].
pub fn blocks_of(n: usize, ctx: SpinContext) -> Vec<BlockLabel> {
    bar_cores_of(n, ctx.p)
        .into_iter()
        .map(|kappa| BlockLabel { kappa, n, ctx })
        .collect()
}

/// [`verify_block`] for every block at `n`, on `jobs` worker threads
/// (all available when `None`). Reports come back in block order.
pub fn verify_all(
    n: usize,
    ctx: SpinContext,
    jobs: Option<usize>,
) -> Result<Vec<VerificationReport>> {
    let blocks = blocks_of(n, ctx);
    let run = || {
        blocks
            .par_iter()
            .map(verify_block)
            .collect::<Result<Vec<_>>>()
    };
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(run),
        None => run(),
    }
}
