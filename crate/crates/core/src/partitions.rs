//! Ordinary and bar partition combinatorics.
//!
//! Two abacus conventions are fixed here and used everywhere else:
//!
//! * Ordinary p-cores and p-quotients use the first-column β-set whose length
//!   is the least multiple of `p` that is at least the number of parts. Runner
//!   `r` holds the β-numbers congruent to `r` mod `p`, and quotient component
//!   `r` is read off runner `r`.
//! * The p-bar-quotient of a bar partition with no part divisible by `p` pairs
//!   residues `i` and `p - i` for `1 ≤ i ≤ (p-1)/2` into one doubly-infinite
//!   runner indexed by the integers `i + kp`. A part `x ≡ i` is a bead at level
//!   `(x - i)/p ≥ 0`; a part `y ≡ p - i` is a *vacancy* at the negative level
//!   `-((y - (p - i))/p + 1)`, and every other negative level carries a bead.
//!   Every bar move on residues `{i, p - i}` slides exactly one bead of this
//!   runner down one level, so the runner is a Maya diagram whose partition is
//!   component `i` of the bar-quotient and whose charge fixes the core.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An odd prime, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddPrime(u64);

impl OddPrime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p.is_multiple_of(2) {
            return Err(Error::NotOddPrime(p));
        }
        let mut d = 3;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::NotOddPrime(p));
            }
            d += 2;
        }
        Ok(OddPrime(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn as_usize(self) -> usize {
        self.0 as usize
    }

    /// `(p - 1) / 2`, the number of runner pairs on the bar abacus.
    #[inline]
    pub fn half(self) -> usize {
        ((self.0 - 1) / 2) as usize
    }

    #[inline]
    pub fn is_one_mod_four(self) -> bool {
        self.0 % 4 == 1
    }
}

impl fmt::Display for OddPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// p-adic valuation of a positive integer together with its p'-part.
pub fn p_valuation(n: u64, p: OddPrime) -> (u32, u64) {
    assert!(n > 0, "valuation of zero");
    let mut v = 0;
    let mut m = n;
    while m.is_multiple_of(p.get()) {
        m /= p.get();
        v += 1;
    }
    (v, m)
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, part) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{part}")?;
    }
    write!(f, ")")
}

/// An ordinary partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from arbitrary nonnegative parts: zeros are dropped
    /// and the rest sorted.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// Whether the spin character(s) labelled by a bar partition are fixed by
/// tensoring with the sign character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Associatedness {
    SelfAssociated,
    NonSelfAssociated,
}

impl Associatedness {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Associatedness::NonSelfAssociated
        } else {
            Associatedness::SelfAssociated
        }
    }

    pub fn is_self_associated(self) -> bool {
        self == Associatedness::SelfAssociated
    }

    /// The other tag.
    pub fn flip(self) -> Self {
        match self {
            Associatedness::SelfAssociated => Associatedness::NonSelfAssociated,
            Associatedness::NonSelfAssociated => Associatedness::SelfAssociated,
        }
    }
}

impl fmt::Display for Associatedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Associatedness::SelfAssociated => write!(f, "self-associated"),
            Associatedness::NonSelfAssociated => write!(f, "non-self-associated"),
        }
    }
}

/// A bar (strict) partition: strictly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BarPartition {
    parts: Vec<usize>,
}

impl BarPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidBarPartition(parts));
        }
        Ok(BarPartition { parts })
    }

    /// Sorts and validates distinct positive parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        BarPartition::new(parts)
    }

    pub fn empty() -> Self {
        BarPartition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, part: usize) -> bool {
        self.parts.binary_search_by(|x| part.cmp(x)).is_ok()
    }

    pub fn has_part_divisible_by(&self, p: OddPrime) -> bool {
        self.parts
            .iter()
            .any(|&x| (x as u64).is_multiple_of(p.get()))
    }

    pub fn associatedness(&self) -> Associatedness {
        associatedness(self)
    }
}

impl fmt::Display for BarPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl Serialize for BarPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// Self-associated iff `|λ| - l(λ)` is even.
pub fn associatedness(lambda: &BarPartition) -> Associatedness {
    Associatedness::from_parity((lambda.size() - lambda.len()) % 2 == 1)
}

/// One removal step on a bar partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BarMove {
    /// Replace `part` by `part - p` (needs `part > p` and `part - p` absent).
    Subtract { part: usize },
    /// Remove the part `p`.
    RemoveP,
    /// Remove `part` and `p - part`; `part` is the larger of the two.
    RemovePair { part: usize },
}

/// Every move applicable to `lambda`, in a fixed order.
pub fn available_bar_moves(lambda: &BarPartition, p: OddPrime) -> Vec<BarMove> {
    let p = p.as_usize();
    let mut moves = Vec::new();
    for &x in lambda.parts() {
        if x > p && !lambda.contains(x - p) {
            moves.push(BarMove::Subtract { part: x });
        }
        if x == p {
            moves.push(BarMove::RemoveP);
        }
        if x < p && 2 * x > p && lambda.contains(p - x) {
            moves.push(BarMove::RemovePair { part: x });
        }
    }
    moves
}

pub fn apply_bar_move(lambda: &BarPartition, mv: BarMove, p: OddPrime) -> BarPartition {
    let p = p.as_usize();
    let mut parts = lambda.parts().to_vec();
    match mv {
        BarMove::Subtract { part } => {
            let idx = parts.iter().position(|&x| x == part).expect("part present");
            parts[idx] = part - p;
        }
        BarMove::RemoveP => parts.retain(|&x| x != p),
        BarMove::RemovePair { part } => parts.retain(|&x| x != part && x != p - part),
    }
    BarPartition::from_unsorted(parts).expect("bar moves preserve strictness")
}

/// Reduces `lambda` to a p-bar-core, choosing the move to apply at each step
/// with `choose` (which receives the nonempty list of available moves).
pub fn p_bar_core_with<F>(
    lambda: &BarPartition,
    p: OddPrime,
    mut choose: F,
) -> (BarPartition, usize)
where
    F: FnMut(&[BarMove]) -> usize,
{
    let mut current = lambda.clone();
    let mut w = 0;
    loop {
        let moves = available_bar_moves(&current, p);
        if moves.is_empty() {
            return (current, w);
        }
        let pick = choose(&moves);
        current = apply_bar_move(&current, moves[pick], p);
        w += 1;
    }
}

/// The p-bar-core of `lambda` and its bar weight `w`, so that
/// `|λ| = |core| + p·w`.
pub fn p_bar_core(lambda: &BarPartition, p: OddPrime) -> (BarPartition, usize) {
    p_bar_core_with(lambda, p, |_| 0)
}

pub fn is_p_bar_core(kappa: &BarPartition, p: OddPrime) -> bool {
    available_bar_moves(kappa, p).is_empty()
}

/// All partitions of `n`, lexicographically descending.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for x in (1..=rest.min(max)).rev() {
            prefix.push(x);
            go(rest - x, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All bar partitions of `n`, lexicographically descending.
pub fn enumerate_bar_partitions(n: usize) -> Vec<BarPartition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<BarPartition>) {
        if rest == 0 {
            out.push(BarPartition {
                parts: prefix.clone(),
            });
            return;
        }
        for x in (1..=rest.min(max)).rev() {
            // the remaining parts are distinct and below x
            if x * (x + 1) / 2 < rest {
                break;
            }
            prefix.push(x);
            go(rest - x, x - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The bar partitions of `n` with p-bar-core `kappa` and no part divisible
/// by `p`.
pub fn enumerate_lambda_kappa(n: usize, kappa: &BarPartition, p: OddPrime) -> Vec<BarPartition> {
    enumerate_bar_partitions(n)
        .into_iter()
        .filter(|lambda| !lambda.has_part_divisible_by(p) && &p_bar_core(lambda, p).0 == kappa)
        .collect()
}

/// The distinct p-bar-cores of the bar partitions of `n`, ordered by size
/// descending and then lexicographically descending.
pub fn bar_cores_of(n: usize, p: OddPrime) -> Vec<BarPartition> {
    let mut cores: Vec<BarPartition> = enumerate_bar_partitions(n)
        .iter()
        .map(|lambda| p_bar_core(lambda, p).0)
        .collect();
    cores.sort_by(|a, b| b.size().cmp(&a.size()).then_with(|| b.cmp(a)));
    cores.dedup();
    cores
}

/// Splitting of a bar partition by the p-adic valuation of its parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAdicSplit {
    /// `levels[j]` holds `n / p^j` for the parts `n` of valuation exactly `j`.
    pub levels: Vec<BarPartition>,
    /// Number of non-self-associated levels.
    pub s_lambda: usize,
}

impl PAdicSplit {
    /// Multiplies level-`j` parts back by `p^j`.
    pub fn reassemble(&self, p: OddPrime) -> BarPartition {
        let mut parts = Vec::new();
        let mut scale = 1usize;
        for level in &self.levels {
            parts.extend(level.parts().iter().map(|&x| x * scale));
            scale *= p.as_usize();
        }
        BarPartition::from_unsorted(parts).expect("levels reassemble to a bar partition")
    }
}

pub fn p_adic_split(lambda: &BarPartition, p: OddPrime) -> PAdicSplit {
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new()];
    for &x in lambda.parts() {
        let (v, rest) = p_valuation(x as u64, p);
        let v = v as usize;
        if buckets.len() <= v {
            buckets.resize(v + 1, Vec::new());
        }
        buckets[v].push(rest as usize);
    }
    // parts are visited in decreasing order, and dividing by a common p^j
    // keeps each bucket strictly decreasing
    let levels: Vec<BarPartition> = buckets
        .into_iter()
        .map(|parts| BarPartition { parts })
        .collect();
    let s_lambda = levels
        .iter()
        .filter(|l| !associatedness(l).is_self_associated())
        .count();
    PAdicSplit { levels, s_lambda }
}

/// An ordinary p-core together with its p-quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PQuotient {
    pub core: Partition,
    /// Component `r` is read off runner `r`, for `0 ≤ r < p`.
    pub components: Vec<Partition>,
}

impl PQuotient {
    pub fn weight(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }
}

fn beta_length(len: usize, p: usize) -> usize {
    len.div_ceil(p) * p
}

fn partition_from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    Partition::from_unsorted(
        beta.iter()
            .enumerate()
            .map(|(j, &b)| b - (len - 1 - j))
            .collect(),
    )
}

pub fn p_quotient(mu: &Partition, p: OddPrime) -> PQuotient {
    let p = p.as_usize();
    let len = beta_length(mu.len(), p);
    let mut runners: Vec<Vec<usize>> = vec![Vec::new(); p];
    for j in 0..len {
        let beta = mu.parts.get(j).copied().unwrap_or(0) + (len - 1 - j);
        runners[beta % p].push(beta / p);
    }
    let components = runners
        .iter()
        .map(|levels| partition_from_beta(levels.clone()))
        .collect();
    let mut core_beta = Vec::with_capacity(len);
    for (r, levels) in runners.iter().enumerate() {
        core_beta.extend((0..levels.len()).map(|k| r + k * p));
    }
    PQuotient {
        core: partition_from_beta(core_beta),
        components,
    }
}

pub fn p_core(mu: &Partition, p: OddPrime) -> Partition {
    p_quotient(mu, p).core
}

pub fn is_p_core(mu: &Partition, p: OddPrime) -> bool {
    p_quotient(mu, p).components.iter().all(Partition::is_empty)
}

/// Inverse of [`p_quotient`].
pub fn assemble_from_quotient(
    core: &Partition,
    components: &[Partition],
    p: OddPrime,
) -> Result<Partition> {
    if components.len() != p.as_usize() {
        return Err(Error::InvalidArgument(format!(
            "expected {} quotient components, got {}",
            p,
            components.len()
        )));
    }
    if !is_p_core(core, p) {
        return Err(Error::NotCore(core.parts().to_vec()));
    }
    let p = p.as_usize();
    let tallest = components.iter().map(Partition::len).max().unwrap_or(0);
    let len = beta_length(core.len(), p) + p * tallest;
    let mut counts = vec![0usize; p];
    for j in 0..len {
        let beta = core.parts.get(j).copied().unwrap_or(0) + (len - 1 - j);
        counts[beta % p] += 1;
    }
    let mut beta = Vec::with_capacity(len);
    for (r, (&m, q)) in counts.iter().zip(components).enumerate() {
        debug_assert!(m >= q.len());
        for s in 0..m {
            let level = q.parts.get(s).copied().unwrap_or(0) + (m - 1 - s);
            beta.push(r + level * p);
        }
    }
    Ok(partition_from_beta(beta))
}

/// The p-core tower of a partition: the p-core at the root and the towers of
/// the p-quotient components as children. Children are omitted when the
/// whole quotient is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreTower {
    pub core: Partition,
    pub children: Vec<CoreTower>,
}

pub fn p_core_tower(mu: &Partition, p: OddPrime) -> CoreTower {
    let q = p_quotient(mu, p);
    let children = if q.components.iter().all(Partition::is_empty) {
        Vec::new()
    } else {
        q.components.iter().map(|c| p_core_tower(c, p)).collect()
    };
    CoreTower {
        core: q.core,
        children,
    }
}

impl CoreTower {
    pub fn is_empty(&self) -> bool {
        self.core.is_empty() && self.children.is_empty()
    }

    pub fn depth(&self) -> usize {
        self.children
            .iter()
            .map(|c| 1 + c.depth())
            .max()
            .unwrap_or(0)
    }

    /// The `p^d` cores at depth `d`, indexed by the path read as a base-`p`
    /// number with the first step most significant. Absent nodes are empty.
    pub fn cores_at_depth(&self, d: usize, p: OddPrime) -> Vec<Partition> {
        if d == 0 {
            return vec![self.core.clone()];
        }
        let width = p.as_usize().pow(d as u32 - 1);
        if self.children.is_empty() {
            return vec![Partition::empty(); width * p.as_usize()];
        }
        self.children
            .iter()
            .flat_map(|c| c.cores_at_depth(d - 1, p))
            .collect()
    }

    /// `Σ_d p^d · Σ |depth-d cores|`, which equals the size of the partition.
    pub fn weighted_size(&self, p: OddPrime) -> usize {
        self.core.size()
            + p.as_usize()
                * self
                    .children
                    .iter()
                    .map(|c| c.weighted_size(p))
                    .sum::<usize>()
    }

    /// Rebuilds the partition by repeated core/quotient assembly.
    pub fn assemble(&self, p: OddPrime) -> Result<Partition> {
        if self.children.is_empty() {
            return Ok(self.core.clone());
        }
        let components = self
            .children
            .iter()
            .map(|c| c.assemble(p))
            .collect::<Result<Vec<_>>>()?;
        assemble_from_quotient(&self.core, &components, p)
    }

    /// Builds a tower whose depth-`d` node with path index `i` is
    /// `node(d, i)`, for `d ≤ max_depth`; entirely empty subtrees are pruned.
    pub fn from_nodes<F>(p: OddPrime, max_depth: usize, node: &F) -> CoreTower
    where
        F: Fn(usize, usize) -> Partition,
    {
        fn build<F: Fn(usize, usize) -> Partition>(
            p: usize,
            d: usize,
            idx: usize,
            max: usize,
            node: &F,
        ) -> CoreTower {
            let core = node(d, idx);
            let mut children = Vec::new();
            if d < max {
                children = (0..p)
                    .map(|r| build(p, d + 1, idx * p + r, max, node))
                    .collect();
                if children.iter().all(CoreTower::is_empty) {
                    children.clear();
                }
            }
            CoreTower { core, children }
        }
        build(p.as_usize(), 0, 0, max_depth, node)
    }
}

/// The p-bar-quotient of a bar partition with no part divisible by `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarQuotient {
    pub core: BarPartition,
    /// Charge of runner pair `i`, i.e. `#{parts ≡ i} - #{parts ≡ p-i}`.
    pub charges: Vec<i64>,
    /// Component `i - 1` belongs to the runner pair `{i, p - i}`.
    pub components: Vec<Partition>,
}

impl BarQuotient {
    pub fn weight(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }
}

// Reads the Maya diagram of runner pair `i` (see the module docs).
fn runner_pair_diagram(lambda: &BarPartition, i: usize, p: usize) -> (i64, Partition) {
    let mut beads: Vec<i64> = Vec::new();
    let mut vacancies: Vec<i64> = Vec::new();
    for &x in lambda.parts() {
        if x % p == i {
            beads.push(((x - i) / p) as i64);
        } else if x % p == p - i {
            vacancies.push(-(((x - (p - i)) / p) as i64 + 1));
        }
    }
    let charge = beads.len() as i64 - vacancies.len() as i64;
    let floor = vacancies.iter().copied().min().unwrap_or(0);
    beads.extend((floor..0).filter(|k| !vacancies.contains(k)));
    beads.sort_unstable_by(|a, b| b.cmp(a));
    let parts = beads
        .iter()
        .enumerate()
        .map(|(j, &b)| (b - (charge - 1 - j as i64)) as usize)
        .collect();
    (charge, Partition::from_unsorted(parts))
}

// Inverse of `runner_pair_diagram`: the parts ≡ ±i mod p.
fn runner_pair_parts(charge: i64, q: &Partition, i: usize, p: usize) -> Vec<usize> {
    // rows past the end of `q` are zero; they matter while the bead is at a
    // nonnegative level
    let count = q.len().max(charge.max(0) as usize);
    let beads: Vec<i64> = (0..count)
        .map(|j| q.parts().get(j).copied().unwrap_or(0) as i64 + charge - 1 - j as i64)
        .collect();
    let mut parts = Vec::new();
    for &b in &beads {
        if b >= 0 {
            parts.push(i + b as usize * p);
        }
    }
    // below charge - count every level is occupied
    let lowest = charge - count as i64;
    for k in lowest..0 {
        if !beads.contains(&k) {
            parts.push((p - i) + (-k - 1) as usize * p);
        }
    }
    parts
}

pub fn bar_quotient(lambda: &BarPartition, p: OddPrime) -> Result<BarQuotient> {
    if let Some(&part) = lambda
        .parts()
        .iter()
        .find(|&&x| (x as u64).is_multiple_of(p.get()))
    {
        return Err(Error::PartDivisibleByP { part, p: p.get() });
    }
    let half = p.half();
    let pu = p.as_usize();
    let mut charges = Vec::with_capacity(half);
    let mut components = Vec::with_capacity(half);
    for i in 1..=half {
        let (charge, q) = runner_pair_diagram(lambda, i, pu);
        charges.push(charge);
        components.push(q);
    }
    let core = core_from_charges(&charges, p);
    Ok(BarQuotient {
        core,
        charges,
        components,
    })
}

fn core_from_charges(charges: &[i64], p: OddPrime) -> BarPartition {
    let pu = p.as_usize();
    let mut parts = Vec::new();
    for (idx, &c) in charges.iter().enumerate() {
        let i = idx + 1;
        if c >= 0 {
            parts.extend((0..c as usize).map(|k| i + k * pu));
        } else {
            parts.extend((0..(-c) as usize).map(|k| (pu - i) + k * pu));
        }
    }
    BarPartition::from_unsorted(parts).expect("runner pairs give distinct parts")
}

/// Inverse of [`bar_quotient`]: the unique bar partition with p-bar-core
/// `core`, no part divisible by `p` and bar-quotient `components`.
pub fn assemble_bar_quotient(
    core: &BarPartition,
    components: &[Partition],
    p: OddPrime,
) -> Result<BarPartition> {
    if components.len() != p.half() {
        return Err(Error::InvalidArgument(format!(
            "expected {} bar-quotient components, got {}",
            p.half(),
            components.len()
        )));
    }
    if !is_p_bar_core(core, p) || core.has_part_divisible_by(p) {
        return Err(Error::NotBarCore(core.parts().to_vec()));
    }
    let pu = p.as_usize();
    let mut parts = Vec::new();
    for (idx, q) in components.iter().enumerate() {
        let i = idx + 1;
        let charge = core.parts().iter().filter(|&&x| x % pu == i).count() as i64
            - core.parts().iter().filter(|&&x| x % pu == pu - i).count() as i64;
        parts.extend(runner_pair_parts(charge, q, i, pu));
    }
    BarPartition::from_unsorted(parts)
}
