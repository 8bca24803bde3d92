//! The sign-reversing involution behind the `k`-Bernstein recursion.
//!
//! Expanding `B^{(k)}_{λ_1} s^{(k)}_{λ̂}` produces one term per pair
//! `(δ, A)`: `δ` comes from `γ̂` by removing a vertical `(k,ℓ)`-strip and
//! `σ_A` raises it back to degree `|λ|` with `|A| = λ_1 + ℓ`. Drawn on `γ̂`,
//! removed cells are `O`, added cells `X`. Exactly one pair has no
//! changeable cell; [`OXPair::phi`] pairs off the rest with opposite signs
//! and equal `σ_A(δ)`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::cores::{Core, ResidueSet};
use crate::error::{Error, Result};
use crate::kbernstein::{main_subpartition, StripMemo};
use crate::partition::{Cell, Partition};

/// `λ`, `γ = 𝔠(λ)`, `γ̂`, and the main subpartition data of `γ`.
#[derive(Debug, PartialEq, Eq)]
pub struct PairContext {
    pub lambda: Partition,
    pub gamma: Core,
    pub hat: Core,
    pub m: usize,
    /// First column of the main subpartition.
    pub start_column: usize,
}

impl PairContext {
    pub fn new(lambda: &Partition, k: usize) -> Result<Arc<PairContext>> {
        if lambda.is_empty() {
            return Err(Error::EmptyCore);
        }
        let gamma = Core::from_bounded(lambda, k)?;
        let info = main_subpartition(&gamma)?;
        Ok(Arc::new(PairContext {
            lambda: lambda.clone(),
            hat: gamma.hat(),
            gamma,
            m: info.m,
            start_column: info.start_column,
        }))
    }

    pub fn k(&self) -> usize {
        self.gamma.k()
    }

    fn in_main_subpartition(&self, c: Cell) -> bool {
        c.col >= self.start_column && self.hat.shape().contains_cell(c)
    }
}

/// A pair `(δ, A)` drawn as an `OX` diagram on `γ̂`.
#[derive(Clone)]
pub struct OXPair {
    ctx: Arc<PairContext>,
    delta: Core,
    a: ResidueSet,
    image: Core,
}

impl PartialEq for OXPair {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.lambda == other.ctx.lambda && self.delta == other.delta && self.a == other.a
    }
}

impl Eq for OXPair {}

impl fmt::Debug for OXPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}), {})", self.delta.shape(), self.a)
    }
}

/// How [`OXPair::phi`] acted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiCase {
    /// The rightmost changeable cell held `OX`; its residue left `A`.
    RemoveResidue,
    /// The rightmost changeable cell was empty; its residue joined `A`.
    AddResidue,
}

impl OXPair {
    /// Checks that `(δ, A)` belongs to the pair family of `ctx`.
    pub fn new(ctx: Arc<PairContext>, delta: Core, a: ResidueSet) -> Result<OXPair> {
        let lambda1 = ctx.lambda.first();
        let bad = |why: &str| Error::Invariant(format!("(({}), {a}) is not a pair for ({}): {why}", delta.shape(), ctx.lambda));
        if a.len() < lambda1 {
            return Err(bad("A is too small"));
        }
        let ell = a.len() - lambda1;
        if !StripMemo::new().strips(&ctx.hat, ctx.m, ell)?.contains(&delta) {
            return Err(bad("δ is not γ̂ minus a vertical strip of the right length"));
        }
        let image = delta.sigma_set(&a)?;
        if image.bounded_size() != ctx.lambda.size() {
            return Err(bad("σ_A(δ) has the wrong degree"));
        }
        Ok(OXPair { ctx, delta, a, image })
    }

    pub fn context(&self) -> &PairContext {
        &self.ctx
    }

    pub fn delta(&self) -> &Core {
        &self.delta
    }

    pub fn residues(&self) -> &ResidueSet {
        &self.a
    }

    /// `σ_A(δ)`.
    pub fn image(&self) -> &Core {
        &self.image
    }

    pub fn ell(&self) -> usize {
        self.a.len() - self.ctx.lambda.first()
    }

    /// `(-1)^{|A| - λ_1}`.
    pub fn sign(&self) -> i8 {
        if self.ell().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Cells of `γ̂/δ`.
    pub fn o_cells(&self) -> BTreeSet<Cell> {
        skew(self.ctx.hat.shape(), self.delta.shape())
    }

    /// Cells of `σ_A(δ)/δ`.
    pub fn x_cells(&self) -> BTreeSet<Cell> {
        skew(self.image.shape(), self.delta.shape())
    }

    /// Cells of `σ_A(δ)` at the top of their column that lie in `γ̂`,
    /// left to right.
    pub fn changeable_cells(&self) -> Vec<Cell> {
        let image = self.image.shape();
        let hat = self.ctx.hat.shape();
        let heights = image.conjugate();
        (1..=image.first())
            .map(|col| Cell::new(heights.row(col), col))
            .filter(|&c| hat.contains_cell(c))
            .collect()
    }

    /// The involution `φ`, with every claim it relies on checked.
    pub fn phi(&self) -> Result<(OXPair, PhiCase)> {
        let changeable = self.changeable_cells();
        let &c = changeable.last().ok_or(Error::NoChangeableCell)?;
        let k = self.ctx.k();
        let o = self.o_cells();
        let x = self.x_cells();

        if o.iter().any(|cell| cell.col > c.col) {
            return Err(self.violation(c, "an O cell lies right of the rightmost changeable cell"));
        }
        if !self.ctx.in_main_subpartition(c) {
            return Err(self.violation(c, "the rightmost changeable cell is outside the main subpartition"));
        }

        let r = c.residue(k);
        let (from, a, case) = if o.contains(&c) {
            if !x.contains(&c) {
                return Err(self.violation(c, "changeable cell holds O without X"));
            }
            let row_o: Vec<Cell> = o.iter().copied().filter(|cell| cell.row == c.row).collect();
            if row_o.iter().any(|cell| !x.contains(cell)) {
                return Err(self.violation(c, "row of the OX cell also holds a bare O"));
            }
            let leftmost = row_o[0];
            if c.col + 1 - leftmost.col != row_o.len() {
                return Err(self.violation(c, "OX cells of the row are not contiguous"));
            }
            if !self.a.contains(r) {
                return Err(self.violation(c, "residue of an OX cell is missing from A"));
            }
            let from = leftmost.residue(k);
            if self.a.contains(prev(from, k)) {
                return Err(self.violation(c, &format!("case I with r' - 1 = {} in A", prev(from, k))));
            }
            (from, self.a.without(r), PhiCase::RemoveResidue)
        } else {
            if self.a.contains(r) {
                return Err(self.violation(c, &format!("case II with r = {r} in A")));
            }
            let extended = self.a.with(r);
            let b = changeable
                .iter()
                .filter(|cell| cell.row == c.row && cell.col <= c.col)
                .find(|cell| cyclic_interval(cell.residue(k), r, k).all(|s| extended.contains(s)))
                .copied()
                .unwrap_or(c);
            let from = b.residue(k);
            if self.a.contains(prev(from, k)) {
                return Err(self.violation(c, &format!("case II with r' - 1 = {} in A", prev(from, k))));
            }
            (from, extended, PhiCase::AddResidue)
        };

        let delta = self.delta.transposition_cyclic(from, r)?;
        let image = delta.sigma_set(&a)?;
        if image != self.image {
            return Err(self.violation(c, &format!("σ_A'(δ') = ({}) differs from σ_A(δ)", image.shape())));
        }
        Ok((OXPair { ctx: self.ctx.clone(), delta, a, image }, case))
    }

    /// Plain-text `OX` diagram, top row first: `O` removed, `X` added,
    /// `⊠` both, `·` untouched cell of `γ̂`.
    pub fn render(&self) -> String {
        let o = self.o_cells();
        let x = self.x_cells();
        let hat = self.ctx.hat.shape();
        let rows = hat.len().max(self.image.shape().len());
        let mut lines = Vec::new();
        for row in (1..=rows).rev() {
            let width = hat.row(row).max(self.image.shape().row(row));
            let line: String = (1..=width)
                .map(|col| {
                    let cell = Cell::new(row, col);
                    match (o.contains(&cell), x.contains(&cell)) {
                        (true, true) => '⊠',
                        (true, false) => 'O',
                        (false, true) => 'X',
                        (false, false) => '·',
                    }
                })
                .collect();
            lines.push(line);
        }
        lines.join("\n")
    }

    fn violation(&self, c: Cell, what: &str) -> Error {
        Error::Invariant(format!(
            "φ on ({}) at {c} for λ = ({}), k = {}: {what}\n{}",
            self.delta.shape(),
            self.ctx.lambda,
            self.ctx.k(),
            self.render()
        ))
    }
}

fn skew(outer: &Partition, inner: &Partition) -> BTreeSet<Cell> {
    outer.cells().filter(|c| !inner.contains_cell(*c)).collect()
}

fn prev(r: usize, k: usize) -> usize {
    (r + k) % (k + 1)
}

/// `from, from+1, ..., to` mod `k+1`.
fn cyclic_interval(from: usize, to: usize, k: usize) -> impl Iterator<Item = usize> {
    let span = (to + k + 1 - from) % (k + 1);
    (0..=span).map(move |i| (from + i) % (k + 1))
}

/// Every pair `(δ, A)` contributing to `B^{(k)}_{λ_1} s^{(k)}_{λ̂}`.
pub fn d_pairs(lambda: &Partition, k: usize) -> Result<Vec<OXPair>> {
    let ctx = PairContext::new(lambda, k)?;
    let memo = StripMemo::new();
    let lambda1 = lambda.first();
    let mut out = Vec::new();
    for ell in 0..=k - lambda1 {
        for delta in memo.strips(&ctx.hat, ctx.m, ell)?.iter() {
            for a in ResidueSet::subsets_of_size(k, lambda1 + ell) {
                let image = match delta.sigma_set(&a) {
                    Ok(g) => g,
                    Err(Error::UndefinedAction { .. }) => continue,
                    Err(e) => return Err(e),
                };
                if image.bounded_size() == lambda.size() {
                    out.push(OXPair { ctx: ctx.clone(), delta: delta.clone(), a, image });
                }
            }
        }
    }
    Ok(out)
}

/// The one pair without a changeable cell, checked to be `(γ̂, B)` with
/// `σ_B(γ̂) = γ`, `|B| = λ_1`, and `B` read off the `X`s from the main
/// subpartition's first column rightward.
pub fn unique_nochangeable(lambda: &Partition, k: usize) -> Result<OXPair> {
    let pairs = d_pairs(lambda, k)?;
    unique_nochangeable_in(&pairs)
}

pub fn unique_nochangeable_in(pairs: &[OXPair]) -> Result<OXPair> {
    let fixed: Vec<&OXPair> = pairs.iter().filter(|p| p.changeable_cells().is_empty()).collect();
    let [p] = fixed.as_slice() else {
        return Err(Error::Invariant(format!("{} pairs lack a changeable cell: {fixed:?}", fixed.len())));
    };
    let ctx = &p.ctx;
    if p.delta != ctx.hat || p.image != ctx.gamma || p.a.len() != ctx.lambda.first() {
        return Err(Error::Invariant(format!("pair without changeable cell is {p:?}, not (γ̂, B)\n{}", p.render())));
    }
    let from_x: BTreeSet<usize> =
        p.x_cells().into_iter().filter(|c| c.col >= ctx.start_column).map(|c| c.residue(ctx.k())).collect();
    let b: BTreeSet<usize> = p.a.iter().collect();
    if from_x != b {
        return Err(Error::Invariant(format!("B = {} but X residues from column {} are {from_x:?}", p.a, ctx.start_column)));
    }
    Ok((*p).clone())
}

/// Outcome of checking `φ` on every pair of one `λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvolutionReport {
    pub pairs: usize,
    pub changeable: usize,
    pub case_remove: usize,
    pub case_add: usize,
}

/// Checks, for one `λ`: exactly one pair lacks changeable cells and it is
/// `(γ̂, B)`; `φ` maps changeable pairs to changeable pairs, flips the parity
/// of `|A|`, keeps `σ_A(δ)`, and squares to the identity; and the signed sum
/// over all pairs collapses to `s^{(k)}_λ`.
pub fn check_involution(lambda: &Partition, k: usize) -> Result<InvolutionReport> {
    let pairs = d_pairs(lambda, k)?;
    unique_nochangeable_in(&pairs)?;
    let members: BTreeSet<(Partition, ResidueSet)> =
        pairs.iter().map(|p| (p.delta.shape().clone(), p.a)).collect();
    let mut report = InvolutionReport { pairs: pairs.len(), ..Default::default() };
    let mut total: std::collections::BTreeMap<Partition, i64> = Default::default();
    for p in &pairs {
        *total.entry(p.image.p_map()).or_default() += i64::from(p.sign());
        if p.changeable_cells().is_empty() {
            continue;
        }
        report.changeable += 1;
        let (q, case) = p.phi()?;
        match case {
            PhiCase::RemoveResidue => report.case_remove += 1,
            PhiCase::AddResidue => report.case_add += 1,
        }
        let fail = |what: &str| Error::Invariant(format!("φ{p:?} = {q:?}: {what}\n{}\n→\n{}", p.render(), q.render()));
        if !members.contains(&(q.delta.shape().clone(), q.a)) {
            return Err(fail("image is not a pair"));
        }
        if q.changeable_cells().is_empty() {
            return Err(fail("image has no changeable cell"));
        }
        if q.image != p.image {
            return Err(fail("σ_A(δ) changed"));
        }
        if q.a.len().abs_diff(p.a.len()) != 1 {
            return Err(fail("|A| did not change by one"));
        }
        let (back, _) = q.phi()?;
        if back != *p {
            return Err(fail(&format!("φ∘φ gives {back:?}")));
        }
    }
    total.retain(|_, v| *v != 0);
    let expected: std::collections::BTreeMap<Partition, i64> = [(lambda.clone(), 1)].into_iter().collect();
    if total != expected {
        return Err(Error::Invariant(format!("signed pair sum for ({lambda}) is {total:?}")));
    }
    Ok(report)
}
