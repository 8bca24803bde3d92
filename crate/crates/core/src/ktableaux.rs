//! `k`-tableaux, `k`-Kostka numbers, and the `h`-expansion of `k`-Schur
//! functions obtained straight from their defining unitriangular system.
//!
//! Nothing here touches the Pieri or Bernstein machinery: this module is the
//! independent witness the recursion is checked against.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::cache::KostkaCache;
use crate::cores::Core;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symspace::{unitriangular_inverse, LinComb};

/// A filling of a core by letters `1..=r`, rows weakly increasing, columns
/// strictly increasing, letter `i` covering exactly `weight[i-1]` residues.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KTableau {
    shape: Core,
    /// `rows[i][j]` is the letter in cell `(i+1, j+1)`.
    rows: Vec<Vec<usize>>,
    weight: Vec<usize>,
}

impl KTableau {
    pub fn shape(&self) -> &Core {
        &self.shape
    }

    pub fn weight(&self) -> &[usize] {
        &self.weight
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    /// Shape of the cells holding letters `1..=i`.
    pub fn restriction(&self, i: usize) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(|r| r.iter().filter(|&&x| x <= i).count()).collect())
    }

    /// Re-checks both defining conditions.
    pub fn is_valid(&self) -> bool {
        let k = self.shape.k();
        let shape = self.shape.shape();
        if self.rows.len() != shape.len() || self.rows.iter().zip(shape.parts()).any(|(r, &l)| r.len() != l) {
            return false;
        }
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(upper, lower)| upper > lower));
        let weights_ok = self.weight.iter().enumerate().all(|(i, &a)| {
            let residues: BTreeSet<usize> = shape
                .cells()
                .filter(|c| self.rows[c.row - 1][c.col - 1] == i + 1)
                .map(|c| c.residue(k))
                .collect();
            residues.len() == a
        });
        rows_ok && cols_ok && weights_ok
    }
}

impl fmt::Display for KTableau {
    /// Top row first, as the diagram is drawn.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate().rev() {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", line.join(" "))?;
            if i > 0 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for KTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KTableau[k={}]{:?}", self.shape.k(), self.rows)
    }
}

/// Horizontal strips `next/inner` with `next ⊆ outer` whose cells carry
/// exactly `want` distinct residues.
fn residue_strips(inner: &Partition, outer: &Partition, want: usize, k: usize) -> Vec<Partition> {
    #[allow(clippy::too_many_arguments)]
    fn go(
        inner: &Partition,
        outer: &Partition,
        want: usize,
        k: usize,
        row: usize,
        residues: u64,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if residues.count_ones() as usize > want {
            return;
        }
        if row > outer.len() {
            if residues.count_ones() as usize == want {
                out.push(Partition::from_sorted(cur.iter().copied().filter(|&x| x > 0).collect()));
            }
            return;
        }
        let base = inner.row(row);
        let cap = if row == 1 { outer.row(1) } else { outer.row(row).min(inner.row(row - 1)) };
        let mut res = residues;
        for v in base..=cap.max(base) {
            if v > base {
                res |= 1 << crate::partition::residue(row, v, k);
            }
            cur.push(v);
            go(inner, outer, want, k, row + 1, res, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(inner, outer, want, k, 1, 0, &mut Vec::new(), &mut out);
    out
}

fn check_weight(core: &Core, alpha: &[usize]) -> Result<()> {
    let total: usize = alpha.iter().sum();
    let bounded = core.bounded_size();
    if total != bounded {
        return Err(Error::DegreeMismatch(bounded, total));
    }
    Ok(())
}

/// All `k`-tableaux of shape `core` and `k`-weight `alpha`, in a fixed order.
pub fn enumerate_on_core(core: &Core, alpha: &[usize]) -> Result<Vec<KTableau>> {
    check_weight(core, alpha)?;
    let k = core.k();
    let outer = core.shape();
    let mut chains = Vec::new();
    let mut stack = vec![(0usize, vec![Partition::empty()])];
    while let Some((letter, chain)) = stack.pop() {
        let inner = chain.last().expect("chain starts at ∅");
        if letter == alpha.len() {
            if inner == outer {
                chains.push(chain);
            }
            continue;
        }
        for next in residue_strips(inner, outer, alpha[letter], k).into_iter().rev() {
            let mut c = chain.clone();
            c.push(next);
            stack.push((letter + 1, c));
        }
    }
    Ok(chains
        .into_iter()
        .map(|chain| {
            let mut rows: Vec<Vec<usize>> = outer.parts().iter().map(|&l| vec![0; l]).collect();
            for (letter, w) in chain.windows(2).enumerate() {
                for (i, row) in rows.iter_mut().enumerate() {
                    for cell in row.iter_mut().take(w[1].row(i + 1)).skip(w[0].row(i + 1)) {
                        *cell = letter + 1;
                    }
                }
            }
            KTableau { shape: core.clone(), rows, weight: alpha.to_vec() }
        })
        .collect())
}

/// `𝒯^k_α(μ)`: the `k`-tableaux of shape `𝔠(μ)` and `k`-weight `α`.
pub fn enumerate_ktableaux(mu: &Partition, alpha: &[usize], k: usize) -> Result<Vec<KTableau>> {
    let core = Core::from_bounded(mu, k)?;
    enumerate_on_core(&core, alpha)
}

/// Number of `k`-tableaux of shape `core` and weight `alpha`, counted with a
/// memo on (letter, partial shape) instead of materializing the fillings.
pub fn count_on_core(core: &Core, alpha: &[usize]) -> Result<BigInt> {
    check_weight(core, alpha)?;
    fn go(
        core: &Core,
        alpha: &[usize],
        letter: usize,
        inner: &Partition,
        memo: &mut HashMap<(usize, Partition), BigInt>,
    ) -> BigInt {
        if letter == alpha.len() {
            return BigInt::from((inner == core.shape()) as u8);
        }
        if let Some(v) = memo.get(&(letter, inner.clone())) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for next in residue_strips(inner, core.shape(), alpha[letter], core.k()) {
            total += go(core, alpha, letter + 1, &next, memo);
        }
        memo.insert((letter, inner.clone()), total.clone());
        total
    }
    Ok(go(core, alpha, 0, &Partition::empty(), &mut HashMap::new()))
}

/// `K^{(k)}_{μα} = |𝒯^k_α(μ)|`.
pub fn kkostka(mu: &Partition, alpha: &[usize], k: usize) -> Result<BigInt> {
    if let Some(&a) = alpha.iter().max() {
        if a > k {
            return Err(Error::NotKBounded { partition: Partition::from_unsorted(alpha.to_vec()), k });
        }
    }
    let core = Core::from_bounded(mu, k)?;
    count_on_core(&core, alpha)
}

/// The `k`-Kostka matrix of one degree.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct KostkaMatrix {
    pub k: usize,
    pub degree: usize,
    /// `k`-bounded partitions of `degree`, descending lexicographic.
    pub indices: Vec<Partition>,
    /// `entries[a][b] = K^{(k)}_{indices[a], indices[b]}`.
    pub entries: Vec<Vec<u64>>,
}

impl KostkaMatrix {
    pub fn compute(k: usize, degree: usize) -> Result<KostkaMatrix> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        let indices = Partition::bounded(degree, k);
        let entries = indices
            .iter()
            .map(|mu| {
                indices
                    .iter()
                    .map(|la| {
                        let c = kkostka(mu, la.parts(), k)?;
                        c.to_u64().ok_or_else(|| Error::Invariant(format!("K({mu},{la}) = {c} overflows u64")))
                    })
                    .collect::<Result<Vec<u64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(KostkaMatrix { k, degree, indices, entries })
    }

    fn position(&self, p: &Partition) -> Option<usize> {
        self.indices.iter().position(|q| q == p)
    }

    pub fn get(&self, mu: &Partition, lambda: &Partition) -> Option<u64> {
        Some(self.entries[self.position(mu)?][self.position(lambda)?])
    }

    /// Zero above dominance and ones on the diagonal.
    pub fn is_unitriangular(&self) -> bool {
        self.indices.iter().enumerate().all(|(a, mu)| {
            self.indices.iter().enumerate().all(|(b, la)| {
                let v = self.entries[a][b];
                if a == b {
                    v == 1
                } else {
                    v == 0 || mu.dominates(la)
                }
            })
        })
    }

    /// `h`-expansions of every `s^{(k)}_λ` of this degree.
    pub fn invert(&self) -> Result<std::collections::BTreeMap<Partition, LinComb>> {
        unitriangular_inverse(&self.indices, |mu, la| {
            let a = self.position(mu).expect("index in matrix");
            let b = self.position(la).expect("index in matrix");
            Ok(BigInt::from(self.entries[a][b]))
        })
    }
}

/// `s^{(k)}_λ` in the `h` basis, by back-substitution in
/// `h_λ = s^{(k)}_λ + Σ_{μ ▷ λ} K^{(k)}_{μλ} s^{(k)}_μ`.
pub fn oracle_kschur_h(lambda: &Partition, k: usize) -> Result<LinComb> {
    oracle_kschur_h_with(lambda, k, &KostkaCache::in_memory())
}

/// As [`oracle_kschur_h`], reusing matrices held by `cache`.
pub fn oracle_kschur_h_with(lambda: &Partition, k: usize, cache: &KostkaCache) -> Result<LinComb> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if !lambda.is_k_bounded(k) {
        return Err(Error::NotKBounded { partition: lambda.clone(), k });
    }
    let matrix = cache.matrix(k, lambda.size())?;
    let mut table = matrix.invert()?;
    Ok(table.remove(lambda).expect("λ indexes its own degree"))
}
