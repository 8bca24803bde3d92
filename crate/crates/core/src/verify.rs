//! Exhaustive consistency suites over all `k`-bounded partitions up to a
//! degree, fanned out over a bounded thread pool.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::cache::KostkaCache;
use crate::cores::{check_corner_residues, check_extremal_cells, cores_up_to, Core};
use crate::error::{Error, Result};
use crate::involution::check_involution;
use crate::kbernstein::{horizontal_down_covers, kschur_by_recursion, main_subpartition, vertical_strips_with, HExpander, StripOrder};
use crate::kpieri::{multiply_h, pieri_strips};
use crate::ktableaux::oracle_kschur_h_with;
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Bijection,
    Pieri,
    Strips,
    Recursion,
    Involution,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Bijection, Suite::Pieri, Suite::Strips, Suite::Recursion, Suite::Involution, Suite::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bijection => "bijection",
            Suite::Pieri => "pieri",
            Suite::Strips => "strips",
            Suite::Recursion => "recursion",
            Suite::Involution => "involution",
            Suite::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Pass/fail tally of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `suites` at level `k` on every `k`-bounded `λ` with
/// `|λ| ≤ max_degree`, using at most `jobs` threads.
pub fn run(suites: &[Suite], k: usize, max_degree: usize, jobs: usize, cache: &KostkaCache) -> Result<Vec<SuiteReport>> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    let lambdas: Vec<Partition> = (0..=max_degree).flat_map(|n| Partition::bounded(n, k)).collect();
    let expander = HExpander::new(k)?;
    pool.install(|| {
        suites
            .iter()
            .map(|&suite| {
                let outcomes: Vec<std::result::Result<(), String>> = match suite {
                    Suite::Bijection => bijection_cases(k, max_degree)
                        .par_iter()
                        .map(|g| check_core(g).map_err(|e| e.to_string()))
                        .chain(lambdas.par_iter().map(|l| check_bijection(l, k).map_err(|e| format!("({l}): {e}"))))
                        .collect(),
                    _ => lambdas
                        .par_iter()
                        .map(|l| check_one(suite, l, k, &expander, cache).map_err(|e| format!("({l}): {e}")))
                        .collect(),
                };
                let failures: Vec<String> = outcomes.iter().filter_map(|o| o.clone().err()).collect();
                Ok(SuiteReport { suite, passed: outcomes.len() - failures.len(), failures })
            })
            .collect()
    })
}

/// Cores whose bounded size is at most `max_degree`.
fn bijection_cases(k: usize, max_degree: usize) -> Vec<Core> {
    let largest = (0..=max_degree)
        .flat_map(|n| Partition::bounded(n, k))
        .filter_map(|l| Core::from_bounded(&l, k).ok())
        .map(|g| g.shape().size())
        .max()
        .unwrap_or(0);
    cores_up_to(largest, k).into_iter().filter(|g| g.bounded_size() <= max_degree).collect()
}

fn check_core(g: &Core) -> Result<()> {
    let back = Core::from_bounded(&g.p_map(), g.k())?;
    if &back != g {
        return Err(Error::Invariant(format!("𝔠(𝔭({g})) = ({back})")));
    }
    check_extremal_cells(g)?;
    check_corner_residues(g)?;
    // ribbon decomposition runs on every strong cover met here
    horizontal_down_covers(g)?;
    Ok(())
}

fn check_bijection(lambda: &Partition, k: usize) -> Result<()> {
    let g = Core::from_bounded(lambda, k)?;
    if &g.p_map() != lambda {
        return Err(Error::Invariant(format!("𝔭(𝔠) = ({})", g.p_map())));
    }
    check_core(&g)
}

fn check_one(suite: Suite, lambda: &Partition, k: usize, expander: &HExpander, cache: &KostkaCache) -> Result<()> {
    match suite {
        Suite::Bijection => check_bijection(lambda, k),
        Suite::Pieri => {
            for ell in 1..=k {
                let a = multiply_h(ell, lambda, k)?;
                let b = pieri_strips(lambda, ell, k)?;
                if a != b {
                    return Err(Error::Invariant(format!("h_{ell}: subsets give {a}, strips give {b}")));
                }
                let bad = a.terms().find(|(mu, c)| !c.is_one() || mu.size() != lambda.size() + ell);
                if let Some((mu, c)) = bad {
                    return Err(Error::Invariant(format!("h_{ell}: term {c} s({mu})")));
                }
            }
            Ok(())
        }
        Suite::Strips => {
            if lambda.is_empty() {
                return Ok(());
            }
            let gamma = Core::from_bounded(lambda, k)?;
            let m = main_subpartition(&gamma)?.m;
            let hat = gamma.hat();
            for ell in 0..=m {
                let a = vertical_strips_with(&hat, m, ell, StripOrder::Canonical)?;
                let b = vertical_strips_with(&hat, m, ell, StripOrder::Unrestricted)?;
                if a != b {
                    return Err(Error::Invariant(format!("ℓ={ell}: canonical {a:?} vs unrestricted {b:?}")));
                }
            }
            Ok(())
        }
        Suite::Recursion => {
            let f = kschur_by_recursion(lambda, k)?;
            if !f.is_unit_at(lambda) {
                return Err(Error::Invariant(format!("recursion gives {f}")));
            }
            Ok(())
        }
        Suite::Involution => {
            if lambda.is_empty() {
                return Ok(());
            }
            check_involution(lambda, k).map(|_| ())
        }
        Suite::Oracle => {
            let ours = expander.expand(lambda)?;
            let theirs = oracle_kschur_h_with(lambda, k, cache)?;
            if *ours != theirs {
                return Err(Error::Invariant(format!("expansion {ours} vs oracle {theirs}")));
            }
            Ok(())
        }
    }
}

/// `Σ_μ K_{μλ} s_μ` recomputed from the oracle table is `h_λ`.
pub fn oracle_resubstitutes(k: usize, degree: usize, cache: &KostkaCache) -> Result<bool> {
    let m = cache.matrix(k, degree)?;
    let table = m.invert()?;
    for la in &m.indices {
        let mut sum = crate::symspace::LinComb::zero(crate::symspace::Basis::H);
        for mu in &m.indices {
            let c = BigInt::from(m.get(mu, la).expect("indexed"));
            sum.add_scaled(&table[mu], &c)?;
        }
        if !sum.is_unit_at(la) {
            return Ok(false);
        }
    }
    Ok(true)
}
