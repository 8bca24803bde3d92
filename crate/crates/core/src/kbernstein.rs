//! The `k`-Bernstein recursion.
//!
//! For `λ = (r, ν)` with `γ = 𝔠(λ)`, the operator `e⊥_{ℓ,r}` sends
//! `s^{(k)}_ν` to the sum of `s^{(k)}_{𝔭(δ)}` over cores `δ` obtained from
//! `γ̂` by removing a vertical `(k,ℓ)`-strip, and
//! `B^{(k)}_r = Σ_ℓ (-1)^ℓ h_{r+ℓ} e⊥_{ℓ,r}` satisfies
//! `B^{(k)}_{λ_1} s^{(k)}_{λ̂} = s^{(k)}_λ`. Iterating down to `∅` yields a
//! signed `h`-expansion indexed by [`StripSequence`]s.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::cores::Core;
use crate::error::{Error, Result};
use crate::kpieri::{kschur_level, multiply_h, multiply_h_lin};
use crate::partition::Partition;
use crate::symspace::{Basis, LinComb};

/// The main subpartition of `ω̂` relative to `ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainSubpartitionInfo {
    /// Columns `j..` of `ω̂`, read as a partition.
    pub sub: Partition,
    /// Column of the leftmost `k`-bounded cell in row 1 of `ω`.
    pub start_column: usize,
    /// Length of `sub`.
    pub m: usize,
    pub context: Core,
}

pub fn main_subpartition(omega: &Core) -> Result<MainSubpartitionInfo> {
    if omega.is_empty() {
        return Err(Error::EmptyCore);
    }
    let shape = omega.shape();
    let hooks = shape.hook_lengths();
    let j = hooks[0]
        .iter()
        .position(|&h| h <= omega.k())
        .map(|c| c + 1)
        .ok_or_else(|| Error::Invariant(format!("row 1 of ({shape}) has no {}-bounded cell", omega.k())))?;
    let sub = Partition::from_sorted(
        shape.parts()[1..].iter().map(|&l| l.saturating_sub(j - 1)).filter(|&l| l > 0).collect(),
    );
    Ok(MainSubpartitionInfo { m: sub.len(), sub, start_column: j, context: omega.clone() })
}

/// Order in which the ribbons of a vertical strip are peeled off.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripOrder {
    /// Strictly decreasing lowest rows; each strip is reached along one chain.
    Canonical,
    /// Any order with distinct lowest rows.
    Unrestricted,
}

/// A strong cover `δ ⋖ ω` whose skew is a union of horizontal ribbons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HorizontalCover {
    pub lower: Core,
    /// Row of the lowest ribbon.
    pub lowest_row: usize,
    /// Row of the highest ribbon.
    pub highest_row: usize,
}

/// All `δ ⋖ ω` with `ω/δ` made of horizontal ribbons, found by applying every
/// transposition `t_{r,r+L}`, `0 ≤ r ≤ k`, `1 ≤ L ≤ k`.
///
/// Each cover is checked against the ribbon decomposition and against the
/// single-cover degree rule `𝔭(ω) = 𝔭(δ) + e_i`, `i` the highest ribbon row.
pub fn horizontal_down_covers(omega: &Core) -> Result<Vec<HorizontalCover>> {
    let k = omega.k();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in 0..=k as i64 {
        for len in 1..=k as i64 {
            let delta = match omega.transposition(r, r + len) {
                Ok(d) => d,
                Err(Error::UndefinedAction { .. }) => continue,
                Err(e) => return Err(e),
            };
            if !delta.is_covered_by(omega)? || !seen.insert(delta.shape().clone()) {
                continue;
            }
            let ribbons = delta.ribbon_components(omega)?;
            if !ribbons.iter().all(|rb| rb.is_horizontal()) {
                continue;
            }
            let lowest_row = ribbons.iter().map(|rb| rb.bottom_row()).min().expect("a cover adds cells");
            let highest_row = ribbons.iter().map(|rb| rb.bottom_row()).max().expect("a cover adds cells");
            check_degree_rule(&delta, omega, highest_row)?;
            out.push(HorizontalCover { lower: delta, lowest_row, highest_row });
        }
    }
    Ok(out)
}

fn check_degree_rule(lower: &Core, upper: &Core, row: usize) -> Result<()> {
    let (a, b) = (lower.p_map(), upper.p_map());
    let rows = a.len().max(b.len());
    let ok = (1..=rows).all(|i| b.row(i) == a.row(i) + usize::from(i == row));
    if !ok {
        return Err(Error::Invariant(format!(
            "𝔭({}) = ({b}) is not 𝔭({}) = ({a}) plus a cell in row {row}",
            upper.shape(),
            lower.shape()
        )));
    }
    Ok(())
}

/// Cores obtained from `hat` by removing a vertical `(k,ℓ)`-strip whose
/// lowest ribbons lie in rows `1..=m`.
pub fn enumerate_vertical_strips(hat: &Core, m: usize, ell: usize) -> Result<BTreeSet<Core>> {
    vertical_strips_with(hat, m, ell, StripOrder::Canonical)
}

pub fn vertical_strips_with(hat: &Core, m: usize, ell: usize, order: StripOrder) -> Result<BTreeSet<Core>> {
    if ell > m {
        return Ok(BTreeSet::new());
    }
    // state: core, rows used so far (bit i = row i)
    let mut frontier: BTreeSet<(Core, u64)> = [(hat.clone(), 0u64)].into_iter().collect();
    for _ in 0..ell {
        let mut next = BTreeSet::new();
        for (omega, used) in &frontier {
            for cover in horizontal_down_covers(omega)? {
                let row = cover.lowest_row;
                if row > m || *used & (1 << row) != 0 {
                    continue;
                }
                if order == StripOrder::Canonical && *used != 0 && row > used.trailing_zeros() as usize {
                    continue;
                }
                next.insert((cover.lower, used | (1 << row)));
            }
        }
        frontier = next;
    }
    let target = hat.bounded_size() - ell;
    let mut out = BTreeSet::new();
    for (delta, _) in frontier {
        if delta.bounded_size() != target {
            return Err(Error::Invariant(format!(
                "strip of length {ell} from ({}) reached ({}) of degree {}",
                hat.shape(),
                delta.shape(),
                delta.bounded_size()
            )));
        }
        check_vertical_projection(hat, &delta)?;
        out.insert(delta);
    }
    Ok(out)
}

fn check_vertical_projection(hat: &Core, delta: &Core) -> Result<()> {
    let (outer, inner) = (hat.p_map(), delta.p_map());
    let ok = outer.contains(&inner) && (1..=outer.len()).all(|i| outer.row(i) - inner.row(i) <= 1);
    if !ok {
        return Err(Error::Invariant(format!("({outer})/({inner}) is not a vertical strip")));
    }
    Ok(())
}

type StripKey = (Core, usize, usize);

/// Shared memo of strip sets keyed by `(γ̂, m, ℓ)`.
#[derive(Default)]
pub struct StripMemo {
    map: RwLock<HashMap<StripKey, Arc<BTreeSet<Core>>>>,
}

impl StripMemo {
    pub fn new() -> StripMemo {
        StripMemo::default()
    }

    pub fn strips(&self, hat: &Core, m: usize, ell: usize) -> Result<Arc<BTreeSet<Core>>> {
        let key = (hat.clone(), m, ell);
        if let Some(s) = self.map.read().expect("memo lock").get(&key) {
            return Ok(s.clone());
        }
        let s = Arc::new(enumerate_vertical_strips(hat, m, ell)?);
        Ok(self.map.write().expect("memo lock").entry(key).or_insert(s).clone())
    }
}

/// `γ = 𝔠(r, ν)` together with `γ̂` (checked to equal `𝔠(ν)`) and `m`.
fn enclosing(r: usize, nu: &Partition, k: usize) -> Result<(Core, Core, usize)> {
    if r == 0 || r > k {
        return Err(Error::EllOutOfRange { ell: r, k });
    }
    if !nu.is_k_bounded(k) {
        return Err(Error::NotKBounded { partition: nu.clone(), k });
    }
    if nu.first() > r {
        return Err(Error::FirstPartExceedsR { partition: nu.clone(), r });
    }
    let gamma = Core::from_bounded(&nu.prepend(r)?, k)?;
    let hat = gamma.hat();
    let expected = Core::from_bounded(nu, k)?;
    if hat != expected {
        return Err(Error::Invariant(format!(
            "𝔠({r},{nu}) = ({}) minus its first row is ({}), not 𝔠({nu}) = ({})",
            gamma.shape(),
            hat.shape(),
            expected.shape()
        )));
    }
    let m = main_subpartition(&gamma)?.m;
    Ok((gamma, hat, m))
}

fn e_perp_with(ell: usize, r: usize, nu: &Partition, k: usize, memo: &StripMemo) -> Result<LinComb> {
    let (_, hat, m) = enclosing(r, nu, k)?;
    let mut out = LinComb::zero(Basis::KSchur(k));
    for delta in memo.strips(&hat, m, ell)?.iter() {
        let mu = delta.p_map();
        if mu.size() + ell != nu.size() {
            return Err(Error::Invariant(format!("strip ({})/({}) has length {ell} but degree drop {}", hat, delta, nu.size() - mu.size())));
        }
        out.add_term(mu, BigInt::one())?;
    }
    Ok(out)
}

/// `e⊥_{ℓ,r} s^{(k)}_ν`.
pub fn e_perp_k(ell: usize, r: usize, nu: &Partition, k: usize) -> Result<LinComb> {
    e_perp_with(ell, r, nu, k, &StripMemo::new())
}

/// `e⊥_{ℓ,r}` extended linearly over the `k`-Schur basis.
pub fn e_perp_k_lin(ell: usize, r: usize, f: &LinComb) -> Result<LinComb> {
    let k = kschur_level(f)?;
    let memo = StripMemo::new();
    f.map_linear(f.basis(), |nu| e_perp_with(ell, r, nu, k, &memo))
}

/// `B^{(k)}_r f`.
pub fn b_k(r: usize, f: &LinComb) -> Result<LinComb> {
    let k = kschur_level(f)?;
    check_domain(r, f, k)?;
    let mut out = LinComb::zero(f.basis());
    for ell in 0..=k - r {
        let lowered = e_perp_k_lin(ell, r, f)?;
        let term = multiply_h_lin(r + ell, &lowered)?;
        if ell % 2 == 0 {
            out.add_assign(&term)?;
        } else {
            out = out.sub(&term)?;
        }
    }
    Ok(out)
}

/// The terms of `B^{(k)}_r s^{(k)}_ν` before cancellation, as
/// `(sign, μ)` in the order `ℓ = 0, 1, ...`.
pub fn b_k_terms(r: usize, nu: &Partition, k: usize) -> Result<Vec<(i8, Partition)>> {
    enclosing(r, nu, k)?;
    let mut out = Vec::new();
    for ell in 0..=k - r {
        let sign = if ell % 2 == 0 { 1 } else { -1 };
        for (delta, _) in e_perp_k(ell, r, nu, k)?.terms() {
            for (mu, c) in multiply_h(r + ell, delta, k)?.terms() {
                debug_assert!(c.is_one());
                out.push((sign, mu.clone()));
            }
        }
    }
    Ok(out)
}

fn check_domain(r: usize, f: &LinComb, k: usize) -> Result<()> {
    if r == 0 || r > k {
        return Err(Error::EllOutOfRange { ell: r, k });
    }
    match f.terms().find(|(nu, _)| nu.first() > r) {
        Some((nu, _)) => Err(Error::FirstPartExceedsR { partition: nu.clone(), r }),
        None => Ok(()),
    }
}

/// `B^{(k)}_{λ_1} ⋯ B^{(k)}_{λ_ℓ} · 1`.
pub fn kschur_by_recursion(lambda: &Partition, k: usize) -> Result<LinComb> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded { partition: lambda.clone(), k });
    }
    lambda.parts().iter().rev().try_fold(LinComb::one(Basis::KSchur(k)), |f, &r| b_k(r, &f))
}

/// One term of the unrolled recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripSequence {
    /// `∅ = γ^{(0)} ⊊ ⋯ ⊊ γ^{(r)} = 𝔠(λ)`.
    pub chain: Vec<Core>,
    /// `ℓ_i`: `γ^{(i-1)}` comes from `γ̂^{(i)}` by a vertical `(k,ℓ_i)`-strip.
    pub ells: Vec<usize>,
    /// `p_i`: bounded cells in the first row of `γ^{(i)}`.
    pub firstrows: Vec<usize>,
    pub part: Partition,
    pub sign: i8,
}

impl StripSequence {
    fn from_chain(chain: Vec<Core>, ells: Vec<usize>) -> StripSequence {
        let firstrows: Vec<usize> = chain[1..].iter().map(|g| g.p_map().first()).collect();
        let part = Partition::from_unsorted(ells.iter().zip(&firstrows).map(|(l, p)| l + p).collect());
        let sign = if ells.iter().sum::<usize>() % 2 == 0 { 1 } else { -1 };
        StripSequence { chain, ells, firstrows, part, sign }
    }
}

/// Every strip sequence ending at `𝔠(λ)`.
pub fn strip_sequences(lambda: &Partition, k: usize) -> Result<Vec<StripSequence>> {
    let memo = StripMemo::new();
    // partial chains, stored top-down
    fn go(gamma: &Core, memo: &StripMemo, down: &mut Vec<(Core, usize)>, out: &mut Vec<StripSequence>) -> Result<()> {
        if gamma.is_empty() {
            let mut chain = vec![gamma.clone()];
            let mut ells = Vec::new();
            for (g, l) in down.iter().rev() {
                chain.push(g.clone());
                ells.push(*l);
            }
            out.push(StripSequence::from_chain(chain, ells));
            return Ok(());
        }
        let m = main_subpartition(gamma)?.m;
        let hat = gamma.hat();
        for ell in 0..=m {
            for delta in memo.strips(&hat, m, ell)?.iter() {
                down.push((gamma.clone(), ell));
                go(delta, memo, down, out)?;
                down.pop();
            }
        }
        Ok(())
    }
    let gamma = Core::from_bounded(lambda, k)?;
    let mut out = Vec::new();
    go(&gamma, &memo, &mut Vec::new(), &mut out)?;
    Ok(out)
}

/// `Σ_S sgn(S) h_{part(S)}` over an explicit list of sequences.
pub fn collect_sequences(seqs: &[StripSequence]) -> Result<LinComb> {
    let mut out = LinComb::zero(Basis::H);
    for s in seqs {
        out.add_term(s.part.clone(), BigInt::from(s.sign))?;
    }
    Ok(out)
}

/// Memoized `h`-expansions at a fixed `k`, safe to share across threads.
pub struct HExpander {
    k: usize,
    strips: StripMemo,
    done: RwLock<HashMap<Partition, Arc<LinComb>>>,
}

impl HExpander {
    pub fn new(k: usize) -> Result<HExpander> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        Ok(HExpander { k, strips: StripMemo::new(), done: RwLock::new(HashMap::new()) })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `s^{(k)}_λ = Σ_ℓ (-1)^ℓ h_{λ_1+ℓ} Σ_δ s^{(k)}_{𝔭(δ)}`, recursively.
    pub fn expand(&self, lambda: &Partition) -> Result<Arc<LinComb>> {
        if let Some(v) = self.done.read().expect("memo lock").get(lambda) {
            return Ok(v.clone());
        }
        let k = self.k;
        let value = if lambda.is_empty() {
            LinComb::one(Basis::H)
        } else {
            let (_, hat, m) = enclosing(lambda.first(), &lambda.tail(), k)?;
            let mut acc = LinComb::zero(Basis::H);
            for ell in 0..=m {
                let sign = BigInt::from(if ell % 2 == 0 { 1 } else { -1 });
                for delta in self.strips.strips(&hat, m, ell)?.iter() {
                    let below = self.expand(&delta.p_map())?;
                    acc.add_scaled(&below.mul_h_monomial(&[lambda.first() + ell])?, &sign)?;
                }
            }
            acc
        };
        let value = Arc::new(value);
        Ok(self.done.write().expect("memo lock").entry(lambda.clone()).or_insert(value).clone())
    }
}

/// `s^{(k)}_λ` in the `h` basis, `Σ_S sgn(S) h_{part(S)}`.
pub fn h_expansion(lambda: &Partition, k: usize) -> Result<LinComb> {
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded { partition: lambda.clone(), k });
    }
    Ok((*HExpander::new(k)?.expand(lambda)?).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn core(s: &str, k: usize) -> Core {
        Core::new(p(s), k).unwrap()
    }

    fn kschur(k: usize, terms: &[&str]) -> LinComb {
        LinComb::from_terms(Basis::KSchur(k), terms.iter().map(|s| (p(s), 1))).unwrap()
    }

    #[test]
    fn main_subpartition_example() {
        let info = main_subpartition(&core("5,5,3,3,2,2,1,1,1", 6)).unwrap();
        assert_eq!(info.sub, p("3,1,1"));
        assert_eq!(info.start_column, 3);
        assert_eq!(info.m, 3);
    }

    #[test]
    fn main_subpartition_edge_cases() {
        for k in 1..=5 {
            for r in 1..=k {
                let g = Core::from_bounded(&Partition::new(vec![r]).unwrap(), k).unwrap();
                let info = main_subpartition(&g).unwrap();
                assert_eq!((info.sub, info.m), (Partition::empty(), 0));
            }
        }
        assert_eq!(main_subpartition(&Core::empty(3)), Err(Error::EmptyCore));
        let info = main_subpartition(&core("6,6,3,2,2,1", 6)).unwrap();
        assert_eq!((info.sub.clone(), info.start_column, info.m), (p("4,1"), 3, 2));
    }

    #[test]
    fn main_subpartition_remarks() {
        for k in 1..=4 {
            for g in crate::cores::cores_up_to(14, k) {
                if g.is_empty() {
                    continue;
                }
                let info = main_subpartition(&g).unwrap();
                let hat = g.shape().tail();
                let hooks = hat.hook_lengths();
                for c in info.sub.cells() {
                    assert!(hooks[c.row - 1][c.col + info.start_column - 2] <= k);
                }
                let conj = hat.conjugate();
                let tallest = info.sub.len();
                for col in (1..info.start_column).filter(|&c| c <= hat.first()) {
                    assert!(conj.row(col) > tallest, "k={k} ({g}) column {col}");
                }
            }
        }
    }

    #[test]
    fn transposition_covers_are_all_covers() {
        // brute force: subcores one bounded cell smaller
        for k in 1..=4 {
            let all = crate::cores::cores_up_to(13, k);
            for omega in &all {
                let expected: BTreeSet<Partition> = all
                    .iter()
                    .filter(|d| d.is_covered_by(omega).unwrap())
                    .filter(|d| d.ribbon_components(omega).unwrap().iter().all(|r| r.is_horizontal()))
                    .map(|d| d.shape().clone())
                    .collect();
                let got: BTreeSet<Partition> =
                    horizontal_down_covers(omega).unwrap().into_iter().map(|c| c.lower.shape().clone()).collect();
                assert_eq!(got, expected, "k={k} ω=({omega})");
            }
        }
    }

    #[test]
    fn strip_example_k5() {
        let hat = core("6,6,3,3,3,1,1,1,1", 5);
        let strips = enumerate_vertical_strips(&hat, 2, 2).unwrap();
        assert!(strips.contains(&core("5,4,3,2,1,1,1,1,1", 5)));
        let middle = core("6,4,3,3,1,1,1,1,1", 5);
        assert!(enumerate_vertical_strips(&hat, 2, 1).unwrap().contains(&middle));
        assert!(enumerate_vertical_strips(&middle, 2, 1).unwrap().contains(&core("5,4,3,2,1,1,1,1,1", 5)));
        assert_eq!(enumerate_vertical_strips(&hat, 2, 0).unwrap(), [hat.clone()].into_iter().collect());
        assert!(enumerate_vertical_strips(&hat, 2, 3).unwrap().is_empty());
    }

    #[test]
    fn canonical_order_loses_nothing() {
        for k in 1..=4 {
            for n in 1..=10 {
                for lambda in Partition::bounded(n, k) {
                    let gamma = Core::from_bounded(&lambda, k).unwrap();
                    let m = main_subpartition(&gamma).unwrap().m;
                    let hat = gamma.hat();
                    for ell in 0..=m {
                        let a = vertical_strips_with(&hat, m, ell, StripOrder::Canonical).unwrap();
                        let b = vertical_strips_with(&hat, m, ell, StripOrder::Unrestricted).unwrap();
                        assert_eq!(a, b, "k={k} λ=({lambda}) ℓ={ell}");
                    }
                }
            }
        }
    }

    #[test]
    fn e_perp_examples() {
        let nu = p("4,3,2,2,1");
        assert_eq!(e_perp_k(1, 4, &nu, 6).unwrap(), kschur(6, &["4,3,2,1,1", "4,2,2,2,1", "3,3,2,2,1"]));
        assert_eq!(e_perp_k(2, 4, &nu, 6).unwrap(), kschur(6, &["4,2,2,1,1", "3,2,2,2,1"]));
        assert_eq!(e_perp_k(0, 4, &nu, 6).unwrap(), kschur(6, &["4,3,2,2,1"]));
        assert!(e_perp_k(3, 4, &nu, 6).unwrap().is_zero());
        assert!(matches!(e_perp_k(1, 3, &nu, 6), Err(Error::FirstPartExceedsR { .. })));
        assert!(matches!(e_perp_k(1, 4, &p("7"), 6), Err(Error::NotKBounded { .. })));
    }

    #[test]
    fn b_example() {
        let nu = p("4,3,2,2,1");
        let f = LinComb::unit(Basis::KSchur(6), nu.clone()).unwrap();
        assert_eq!(b_k(4, &f).unwrap(), kschur(6, &["4,4,3,2,2,1"]));
        let terms = b_k_terms(4, &nu, 6).unwrap();
        let mut got: Vec<(i8, Partition)> = terms;
        got.sort();
        let mut expected: Vec<(i8, Partition)> = [
            (1, "4,4,3,2,2,1"),
            (1, "5,4,3,2,1,1"),
            (1, "6,3,3,2,1,1"),
            (1, "5,3,3,2,2,1"),
            (1, "6,3,3,2,2"),
            (1, "5,4,2,2,2,1"),
            (-1, "6,3,3,2,1,1"),
            (-1, "5,4,3,2,1,1"),
            (-1, "6,3,2,2,2,1"),
            (-1, "5,4,2,2,2,1"),
            (-1, "6,4,2,2,1,1"),
            (-1, "6,3,3,2,2"),
            (-1, "5,3,3,2,2,1"),
            (1, "6,4,2,2,1,1"),
            (1, "6,3,2,2,2,1"),
        ]
        .into_iter()
        .map(|(s, q)| (s, p(q)))
        .collect();
        expected.sort();
        assert_eq!(got, expected);
        assert!(matches!(b_k(3, &f), Err(Error::FirstPartExceedsR { .. })));
    }

    #[test]
    fn b_on_one() {
        for k in 1..=5 {
            for r in 1..=k {
                let got = b_k(r, &LinComb::one(Basis::KSchur(k))).unwrap();
                assert_eq!(got, LinComb::unit(Basis::KSchur(k), Partition::new(vec![r]).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn recursion_example() {
        let lambda = p("4,4,3,2,2,1");
        assert!(kschur_by_recursion(&lambda, 6).unwrap().is_unit_at(&lambda));
    }

    #[test]
    fn corollary_example() {
        let lambda = p("2,2,2,1");
        let seqs = strip_sequences(&lambda, 4).unwrap();
        assert_eq!(seqs.len(), 14);
        let s_prime: Vec<Partition> = ["", "1,1", "1,1,1", "3,2,2,1"].iter().map(|s| p(s)).collect();
        let found = seqs
            .iter()
            .find(|s| s.chain.iter().map(|g| g.shape().clone()).collect::<Vec<_>>() == s_prime)
            .expect("S' is among the sequences");
        assert_eq!(found.part, p("4,2,1"));
        assert_eq!(found.sign, -1);
        let expected = LinComb::from_terms(
            Basis::H,
            [(p("2,2,2,1"), 1), (p("3,2,1,1"), -2), (p("3,3,1"), 1), (p("4,1,1,1"), 1), (p("4,2,1"), -1)],
        )
        .unwrap();
        assert_eq!(collect_sequences(&seqs).unwrap(), expected);
        assert_eq!(h_expansion(&lambda, 4).unwrap(), expected);
    }

    #[test]
    fn single_row_sequences() {
        for k in 1..=5 {
            for r in 1..=k {
                let seqs = strip_sequences(&Partition::new(vec![r]).unwrap(), k).unwrap();
                assert_eq!(seqs.len(), 1);
                assert_eq!((seqs[0].part.clone(), seqs[0].sign), (Partition::new(vec![r]).unwrap(), 1));
            }
        }
        assert_eq!(h_expansion(&p("1,1"), 1).unwrap(), LinComb::unit(Basis::H, p("1,1")).unwrap());
    }

    #[test]
    fn sequences_match_memoized_expansion() {
        for k in 1..=4 {
            let ex = HExpander::new(k).unwrap();
            for n in 0..=7 {
                for lambda in Partition::bounded(n, k) {
                    let seqs = strip_sequences(&lambda, k).unwrap();
                    for s in &seqs {
                        assert_eq!(s.chain.last().unwrap().p_map(), lambda);
                        assert_eq!(s.part.size(), n);
                    }
                    assert_eq!(collect_sequences(&seqs).unwrap(), *ex.expand(&lambda).unwrap());
                }
            }
        }
    }

    #[test]
    fn theorem_small_range() {
        for k in 1..=3 {
            for n in 0..=6 {
                for lambda in Partition::bounded(n, k) {
                    assert!(kschur_by_recursion(&lambda, k).unwrap().is_unit_at(&lambda), "k={k} {lambda}");
                    assert_eq!(
                        h_expansion(&lambda, k).unwrap(),
                        crate::ktableaux::oracle_kschur_h(&lambda, k).unwrap(),
                        "k={k} {lambda}"
                    );
                }
            }
        }
    }
}
