//! Radical-subgroup shapes, the slot sets `C_d` and weight labels `(κ, f)`.
//!
//! A slot at level `d` is a defect-zero character of `M̃_c/R_c` for some
//! composition `c` of `d`, up to ε; those are indexed by ε-classes of
//! characters α of `T̃` with `α(-1) = -1`, so `c` contributes `½(p-1)^{r}`
//! slots. Slots are ordered by level, then by composition in the order of
//! [`enumerate_c_sequences`], then by α-class index.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::local_reps::{alpha_class_representatives, Alpha, PresentationParams};
use crate::partitions::{
    enumerate_partitions, is_p_bar_core, is_p_core, BarPartition, OddPrime, Partition,
};
use crate::signs::{eta_level, mu_kappa_f, mu_lambda, mu_psi, sym, Sign, SpinContext};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CSequence {
    entries: Vec<usize>,
}

impl CSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() || entries.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "c-sequence needs positive entries, got {entries:?}"
            )));
        }
        Ok(CSequence { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn norm(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for CSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Compositions of `d` in descending lexicographic order; `2^{d-1}` of them.
pub fn enumerate_c_sequences(d: usize) -> Vec<CSequence> {
    fn go(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<CSequence>) {
        if rest == 0 {
            out.push(CSequence {
                entries: prefix.clone(),
            });
            return;
        }
        for first in (1..=rest).rev() {
            prefix.push(first);
            go(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        go(d, &mut Vec::new(), &mut out);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotId {
    pub d: usize,
    pub index: usize,
}

impl fmt::Display for SlotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}[{}]", self.d, self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slot {
    pub id: SlotId,
    pub c: CSequence,
    /// Position among the ε-class representatives for `c`.
    pub alpha_class: usize,
}

impl Slot {
    /// The α-class representative behind this slot.
    pub fn alpha(&self, ctx: SpinContext) -> Result<Alpha> {
        let params = PresentationParams::new(ctx, self.c.norm(), self.c.len(), 1)?;
        alpha_class_representatives(&params)
            .into_iter()
            .nth(self.alpha_class)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "slot {} has no α-class {}",
                    self.id, self.alpha_class
                ))
            })
    }
}

fn alpha_class_count(p: OddPrime, r: usize) -> usize {
    (p.as_usize() - 1).pow(r as u32) / 2
}

/// The slots of `C_d` in canonical order.
pub fn c_d_slots(d: usize, p: OddPrime) -> Vec<Slot> {
    let mut out = Vec::new();
    for c in enumerate_c_sequences(d) {
        for alpha_class in 0..alpha_class_count(p, c.len()) {
            out.push(Slot {
                id: SlotId {
                    d,
                    index: out.len(),
                },
                c: c.clone(),
                alpha_class,
            });
        }
    }
    out
}

/// `½(p-1)p^{d-1}`.
pub fn c_d_count(d: usize, p: OddPrime) -> usize {
    if d == 0 {
        return 0;
    }
    (p.as_usize() - 1) * p.as_usize().pow(d as u32 - 1) / 2
}

/// `I_{n_0} × ∏ R_c^{e}`, recorded as `n_0` and the pairs `(c, e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalShape {
    pub n0: usize,
    pub components: Vec<(CSequence, usize)>,
}

impl RadicalShape {
    pub fn degree(&self, p: OddPrime) -> usize {
        self.n0
            + self
                .components
                .iter()
                .map(|(c, e)| e * p.as_usize().pow(c.norm() as u32))
                .sum::<usize>()
    }
}

/// Every shape with `n_0 + Σ e·p^{|c|} = n`, by decreasing `n_0` and then in
/// composition order with larger multiplicities first.
pub fn enumerate_radical_shapes(n: usize, p: OddPrime) -> Vec<RadicalShape> {
    let mut candidates = Vec::new();
    let mut d = 1;
    while p.as_usize().pow(d as u32) <= n {
        candidates.extend(
            enumerate_c_sequences(d)
                .into_iter()
                .map(|c| (c, p.as_usize().pow(d as u32))),
        );
        d += 1;
    }
    fn go(
        candidates: &[(CSequence, usize)],
        rest: usize,
        chosen: &mut Vec<(CSequence, usize)>,
        out: &mut Vec<RadicalShape>,
    ) {
        let Some(((c, size), tail)) = candidates.split_first() else {
            out.push(RadicalShape {
                n0: rest,
                components: chosen.clone(),
            });
            return;
        };
        for e in (1..=rest / size).rev() {
            chosen.push((c.clone(), e));
            go(tail, rest - e * size, chosen, out);
            chosen.pop();
        }
        go(tail, rest, chosen, out);
    }
    let mut out = Vec::new();
    go(&candidates, n, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| b.n0.cmp(&a.n0));
    out
}

/// Ordinary p-cores of `k`, in the order of [`enumerate_partitions`].
pub fn p_cores_of(k: usize, p: OddPrime) -> Vec<Partition> {
    enumerate_partitions(k)
        .into_iter()
        .filter(|mu| is_p_core(mu, p))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightLabel {
    pub kappa: BarPartition,
    /// Nonempty values only.
    pub f: BTreeMap<SlotId, Partition>,
    pub sym: Sign,
    pub w: usize,
}

impl WeightLabel {
    /// `|κ| + Σ |f(ψ)| p^{d(ψ)}`.
    pub fn degree(&self, p: OddPrime) -> usize {
        self.kappa.size()
            + self
                .f
                .iter()
                .map(|(id, mu)| mu.size() * p.as_usize().pow(id.d as u32))
                .sum::<usize>()
    }

    /// Number of weights the label stands for on the double cover:
    /// an ε-pair when `sym = -1`, a single weight otherwise.
    pub fn multiplicity(&self) -> usize {
        if self.sym.is_plus() {
            1
        } else {
            2
        }
    }
}

/// All weight labels of the block of `κ` at degree `n`.
pub fn enumerate_weight_labels(
    n: usize,
    kappa: &BarPartition,
    p: OddPrime,
) -> Result<Vec<WeightLabel>> {
    if !is_p_bar_core(kappa, p) {
        return Err(Error::NotBarCore(kappa.parts().to_vec()));
    }
    let label_sym = sym(kappa, n, p)?;
    let w = (n - kappa.size()) / p.as_usize();

    let mut slots = Vec::new();
    let mut d = 1;
    while p.as_usize().pow(d as u32 - 1) <= w {
        slots.extend(c_d_slots(d, p).into_iter().map(|s| s.id));
        d += 1;
    }
    let mut cores: Vec<Vec<Partition>> = Vec::new();
    for k in 0..=w {
        cores.push(p_cores_of(k, p));
    }

    fn go(
        slots: &[SlotId],
        rest: usize,
        p: usize,
        cores: &[Vec<Partition>],
        f: &mut BTreeMap<SlotId, Partition>,
        out: &mut Vec<BTreeMap<SlotId, Partition>>,
    ) {
        let Some((&slot, tail)) = slots.split_first() else {
            if rest == 0 {
                out.push(f.clone());
            }
            return;
        };
        let unit = p.pow(slot.d as u32 - 1);
        for k in 0..=rest / unit {
            for core in &cores[k] {
                if k > 0 {
                    f.insert(slot, core.clone());
                }
                go(tail, rest - k * unit, p, cores, f, out);
                f.remove(&slot);
            }
        }
    }
    let mut maps = Vec::new();
    go(
        &slots,
        w,
        p.as_usize(),
        &cores,
        &mut BTreeMap::new(),
        &mut maps,
    );
    Ok(maps
        .into_iter()
        .map(|f| WeightLabel {
            kappa: kappa.clone(),
            f,
            sym: label_sym,
            w,
        })
        .collect())
}

/// `μ_{κ,f}`, the sign by which σ acts on the weights of the label.
pub fn sigma_on_weight(label: &WeightLabel, ctx: SpinContext) -> Sign {
    mu_kappa_f(&label.kappa, label.w, ctx)
}

/// `μ_{κ,f}` assembled factor by factor: each slot ψ carries
/// `μ_ψ = mu_psi(|c_ψ|, |f(ψ)|)`; the local part is
/// `μ_w = (-1/p)^{⌊s/2⌋} ∏ μ_ψ` over the `s` slots with `|f(ψ)|` odd, and
/// the Humphreys product with `χ_κ` contributes `(N_κ/p)` and another
/// `(-1/p)^{⌊s'/2⌋}` over the non-self-associated factors among `χ_κ, Ψ_f`.
pub fn sigma_on_weight_by_slots(label: &WeightLabel, ctx: SpinContext) -> Result<Sign> {
    let p = ctx.p;
    let mut levels: BTreeMap<usize, Vec<Slot>> = BTreeMap::new();
    let mut s = 0;
    let mut product = Sign::Plus;
    for (id, core) in &label.f {
        let slots = levels.entry(id.d).or_insert_with(|| c_d_slots(id.d, p));
        let slot = slots
            .get(id.index)
            .ok_or_else(|| Error::InvalidArgument(format!("slot {id} does not exist")))?;
        product *= mu_psi(ctx, slot.c.norm(), core.size());
        s += core.size() % 2;
    }
    let minus = ctx.minus_one_symbol();
    let mu_local = minus.pow(s as u64 / 2) * product;
    let kappa_odd = !label.kappa.associatedness().is_self_associated();
    let s_outer = usize::from(kappa_odd) + usize::from(label.w % 2 == 1);
    Ok(minus.pow(s_outer as u64 / 2) * mu_lambda(&label.kappa, ctx) * mu_local)
}

/// The quotient `C(u)/O_p(C(u)) = S̃_{m_0}^{η_0} ∗ ⋯ ∗ S̃_{m_l}^{η_l}` of the
/// centralizer of a p-element with `m_j` cycles of length `p^j`, as the pairs
/// `(m_j, η_j)` with `η_j = (-1/p)^j η`.
pub fn lemma41_centralizer_shape(cycle_counts: &[usize], ctx: SpinContext) -> Vec<(usize, Sign)> {
    cycle_counts
        .iter()
        .enumerate()
        .map(|(j, &m)| (m, eta_level(ctx, j)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn odd(p: u64) -> OddPrime {
        OddPrime::new(p).unwrap()
    }

    fn bar(parts: &[usize]) -> BarPartition {
        BarPartition::new(parts.to_vec()).unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn c_sequences() {
        let seq = |v: &[usize]| CSequence::new(v.to_vec()).unwrap();
        assert_eq!(enumerate_c_sequences(1), vec![seq(&[1])]);
        assert_eq!(enumerate_c_sequences(2), vec![seq(&[2]), seq(&[1, 1])]);
        for d in 1..=8 {
            assert_eq!(enumerate_c_sequences(d).len(), 1 << (d - 1));
        }
        assert!(CSequence::new(vec![]).is_err());
        assert!(CSequence::new(vec![1, 0]).is_err());
    }

    #[test]
    fn slot_counts() {
        assert_eq!(c_d_slots(1, odd(3)).len(), 1);
        let s = c_d_slots(2, odd(3));
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().filter(|x| x.c.len() == 1).count(), 1);
        assert_eq!(c_d_slots(2, odd(5)).len(), 10);
        for p in [3, 5, 7, 11] {
            for d in 1..=6 {
                assert_eq!(
                    c_d_slots(d, odd(p)).len(),
                    c_d_count(d, odd(p)),
                    "p={p} d={d}"
                );
            }
        }
    }

    #[test]
    fn slot_alphas_are_distinct_classes() {
        let ctx = SpinContext::new(5, Sign::Minus).unwrap();
        let slots = c_d_slots(2, ctx.p);
        let alphas: Vec<Alpha> = slots.iter().map(|s| s.alpha(ctx).unwrap()).collect();
        let pairs: Vec<(CSequence, Alpha)> =
            slots.iter().map(|s| s.c.clone()).zip(alphas).collect();
        let unique: std::collections::HashSet<_> = pairs.iter().collect();
        assert_eq!(unique.len(), slots.len());
    }

    #[test]
    fn radical_shapes() {
        let p = odd(3);
        let shapes = enumerate_radical_shapes(3, p);
        assert_eq!(shapes.len(), 2);
        assert_eq!(
            shapes[0],
            RadicalShape {
                n0: 3,
                components: vec![]
            }
        );
        assert_eq!(shapes[1].n0, 0);
        assert_eq!(
            shapes[1].components,
            vec![(CSequence::new(vec![1]).unwrap(), 1)]
        );
        assert_eq!(
            enumerate_radical_shapes(1, p),
            vec![RadicalShape {
                n0: 1,
                components: vec![]
            }]
        );

        // Solutions of e_1·3 + (e_2 + e_3)·9 ≤ n, one contribution per composition.
        for n in 0..=20 {
            let shapes = enumerate_radical_shapes(n, p);
            assert!(shapes.iter().all(|s| s.degree(p) == n));
            let mut count = 0;
            for e1 in 0..=n / 3 {
                for e2 in 0..=n / 9 {
                    for e3 in 0..=n / 9 {
                        if 3 * e1 + 9 * (e2 + e3) <= n {
                            count += 1;
                        }
                    }
                }
            }
            assert_eq!(shapes.len(), count, "n={n}");
        }
    }

    #[test]
    fn labels_at_small_weight() {
        let p = odd(3);
        let labels = enumerate_weight_labels(4, &bar(&[1]), p).unwrap();
        assert_eq!(labels.len(), 1);
        assert_eq!(
            labels[0].f.get(&SlotId { d: 1, index: 0 }),
            Some(&part(&[1]))
        );
        assert_eq!(labels[0].sym, Sign::Minus);
        assert_eq!(labels[0].multiplicity(), 2);

        let labels = enumerate_weight_labels(1, &bar(&[1]), p).unwrap();
        assert_eq!(labels.len(), 1);
        assert!(labels[0].f.is_empty());
        assert_eq!(labels[0].sym, Sign::Plus);

        let labels = enumerate_weight_labels(7, &bar(&[1]), p).unwrap();
        assert_eq!(labels.len(), 2);
        assert!(labels.iter().all(|l| l.degree(p) == 7));

        assert!(enumerate_weight_labels(5, &bar(&[1]), p).is_err());
        assert!(enumerate_weight_labels(7, &bar(&[4]), p).is_err());
    }

    #[test]
    fn sigma_examples() {
        let ctx = SpinContext::new(3, Sign::Plus).unwrap();
        let l4 = &enumerate_weight_labels(4, &bar(&[1]), ctx.p).unwrap()[0];
        assert_eq!(sigma_on_weight(l4, ctx), Sign::Plus);
        for l in enumerate_weight_labels(7, &bar(&[1]), ctx.p).unwrap() {
            assert_eq!(sigma_on_weight(&l, ctx), Sign::Minus);
        }
        let l0 = &enumerate_weight_labels(1, &bar(&[1]), ctx.p).unwrap()[0];
        assert_eq!(sigma_on_weight(l0, ctx), mu_lambda(&bar(&[1]), ctx));
    }

    #[test]
    fn slot_route_matches_closed_form() {
        for p in [3, 5, 7] {
            for eta in [Sign::Plus, Sign::Minus] {
                let ctx = SpinContext::new(p, eta).unwrap();
                for n in 0..=16 {
                    for kappa in crate::partitions::bar_cores_of(n, ctx.p) {
                        for label in enumerate_weight_labels(n, &kappa, ctx.p).unwrap() {
                            assert_eq!(
                                sigma_on_weight_by_slots(&label, ctx).unwrap(),
                                sigma_on_weight(&label, ctx)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn centralizer_shapes() {
        let ctx = SpinContext::new(3, Sign::Plus).unwrap();
        assert_eq!(lemma41_centralizer_shape(&[5], ctx), vec![(5, Sign::Plus)]);
        assert_eq!(
            lemma41_centralizer_shape(&[0, 1], ctx),
            vec![(0, Sign::Plus), (1, Sign::Minus)]
        );
        assert_eq!(
            lemma41_centralizer_shape(&[3, 3], ctx),
            vec![(3, Sign::Plus), (3, Sign::Minus)]
        );
        let ctx5 = SpinContext::new(5, Sign::Minus).unwrap();
        assert_eq!(
            lemma41_centralizer_shape(&[1, 2, 1], ctx5),
            vec![(1, Sign::Minus), (2, Sign::Minus), (1, Sign::Minus)]
        );
    }

    /// Number of p-cores of each size up to `max`, from
    /// `∏_{k≥1} (1 - x^{pk})^p / (1 - x^k)`.
    fn core_counts_gf(p: usize, max: usize) -> Vec<i64> {
        let mut series = vec![0i64; max + 1];
        series[0] = 1;
        for k in 1..=max {
            for i in k..=max {
                series[i] += series[i - k];
            }
            if p * k <= max {
                for _ in 0..p {
                    for i in (p * k..=max).rev() {
                        series[i] -= series[i - p * k];
                    }
                }
            }
        }
        series
    }

    #[test]
    fn label_counts_match_generating_function() {
        for p in [3usize, 5, 7] {
            let pp = odd(p as u64);
            let cores = core_counts_gf(p, 8);
            for k in 0..=8 {
                assert_eq!(p_cores_of(k, pp).len() as i64, cores[k]);
            }
            for w in 0..=6usize {
                // ∏ over slots of Σ_k cores[k] x^{k p^{d-1}}
                let mut series = vec![0i64; w + 1];
                series[0] = 1;
                let mut d = 1;
                while p.pow(d - 1) <= w.max(1) {
                    let unit = p.pow(d - 1);
                    for _ in 0..c_d_count(d as usize, pp) {
                        let mut next = vec![0i64; w + 1];
                        for (i, &a) in series.iter().enumerate() {
                            for k in 0..=(w - i) / unit {
                                next[i + k * unit] += a * cores[k];
                            }
                        }
                        series = next;
                    }
                    d += 1;
                }
                let n = 1 + p * w;
                let labels = enumerate_weight_labels(n, &bar(&[1]), pp).unwrap();
                assert_eq!(labels.len() as i64, series[w], "p={p} w={w}");
            }
        }
    }
}
