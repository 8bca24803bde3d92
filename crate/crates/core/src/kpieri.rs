//! Multiplication of `k`-Schur functions by `h_ℓ`.
//!
//! Two formulations are provided: the affine one, summing `σ_A 𝔠(λ)` over
//! residue sets `A` of size `ℓ` that raise the degree by exactly `ℓ`, and the
//! combinatorial one, summing over cores `𝔠(μ) ⊇ 𝔠(λ)` that differ by a
//! horizontal strip using exactly `ℓ` residues. They agree; the tests check it.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;

use crate::cores::{Core, ResidueSet};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symspace::{Basis, LinComb};

fn check_ell(ell: usize, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if ell == 0 || ell > k {
        return Err(Error::EllOutOfRange { ell, k });
    }
    Ok(())
}

/// Residue sets `A`, `|A| = ℓ`, for which `σ_A(γ)` is defined and has
/// `|γ| + ℓ` bounded cells, with the resulting cores.
pub fn pieri_subsets_on_core(gamma: &Core, ell: usize) -> Result<Vec<(ResidueSet, Core)>> {
    let k = gamma.k();
    check_ell(ell, k)?;
    let target = gamma.bounded_size() + ell;
    let mut out = Vec::new();
    for a in ResidueSet::subsets_of_size(k, ell) {
        match gamma.sigma_set(&a) {
            Ok(g) if g.bounded_size() == target => out.push((a, g)),
            Ok(_) | Err(Error::UndefinedAction { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// [`pieri_subsets_on_core`] at `𝔠(λ)`.
pub fn pieri_subsets(lambda: &Partition, ell: usize, k: usize) -> Result<Vec<(ResidueSet, Core)>> {
    check_ell(ell, k)?;
    pieri_subsets_on_core(&Core::from_bounded(lambda, k)?, ell)
}

/// `h_ℓ s^{(k)}_λ`.
pub fn multiply_h(ell: usize, lambda: &Partition, k: usize) -> Result<LinComb> {
    let mut out = LinComb::zero(Basis::KSchur(k));
    for (_, g) in pieri_subsets(lambda, ell, k)? {
        out.add_term(g.p_map(), BigInt::one())?;
    }
    Ok(out)
}

/// `h_ℓ f` for `f` in the `k`-Schur basis.
pub fn multiply_h_lin(ell: usize, f: &LinComb) -> Result<LinComb> {
    let k = kschur_level(f)?;
    f.map_linear(f.basis(), |lambda| multiply_h(ell, lambda, k))
}

pub(crate) fn kschur_level(f: &LinComb) -> Result<usize> {
    match f.basis() {
        Basis::KSchur(k) => Ok(k),
        other => Err(Error::WrongBasis { expected: "kschur".into(), found: other.to_string() }),
    }
}

/// `h_ℓ s^{(k)}_λ` via horizontal strips `𝔠(μ)/𝔠(λ)` carrying exactly `ℓ`
/// residues, found by scanning every `k`-bounded `μ` of degree `|λ| + ℓ`.
pub fn pieri_strips(lambda: &Partition, ell: usize, k: usize) -> Result<LinComb> {
    check_ell(ell, k)?;
    let inner = Core::from_bounded(lambda, k)?;
    let mut out = LinComb::zero(Basis::KSchur(k));
    for mu in Partition::bounded(lambda.size() + ell, k) {
        let outer = Core::from_bounded(&mu, k)?;
        if is_residue_strip(&inner, &outer, ell) {
            out.add_term(mu, BigInt::one())?;
        }
    }
    Ok(out)
}

/// Whether `outer/inner` is a horizontal strip whose cells use exactly `ell`
/// residues.
pub fn is_residue_strip(inner: &Core, outer: &Core, ell: usize) -> bool {
    let (a, b) = (inner.shape(), outer.shape());
    if !b.contains(a) || !crate::symspace::is_horizontal_strip(b, a) {
        return false;
    }
    let residues: BTreeSet<usize> =
        b.cells().filter(|c| !a.contains_cell(*c)).map(|c| c.residue(inner.k())).collect();
    residues.len() == ell
}
