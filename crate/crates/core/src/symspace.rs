//! Exact integer linear combinations over one labelled basis, plus the
//! classical Schur-basis operators: Pieri multiplication by `h_ℓ`, the
//! skewing operator `e_m^⊥`, Bernstein's creation operator `B_n`, and the
//! classical Kostka numbers.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};

/// Which family a combination is expanded in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    /// Complete homogeneous `h_λ`.
    H,
    /// Classical Schur `s_λ`.
    Schur,
    /// `k`-Schur `s^{(k)}_λ`, indices `k`-bounded.
    KSchur(usize),
}

impl Basis {
    pub fn tag(&self) -> &'static str {
        match self {
            Basis::H => "h",
            Basis::Schur => "schur",
            Basis::KSchur(_) => "kschur",
        }
    }

    pub fn k(&self) -> Option<usize> {
        match self {
            Basis::KSchur(k) => Some(*k),
            _ => None,
        }
    }

    fn accepts(&self, index: &Partition) -> bool {
        match self {
            Basis::KSchur(k) => index.is_k_bounded(*k),
            _ => true,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::KSchur(k) => write!(f, "kschur(k={k})"),
            b => f.write_str(b.tag()),
        }
    }
}

/// A basis element: basis tag (with `k` for `k`-Schur) and index partition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisKey {
    pub basis: Basis,
    pub index: Partition,
}

/// Finite `ℤ`-combination of basis elements of a single basis. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb {
    basis: Basis,
    terms: BTreeMap<Partition, BigInt>,
}

impl LinComb {
    pub fn zero(basis: Basis) -> Self {
        LinComb { basis, terms: BTreeMap::new() }
    }

    /// The single basis element indexed by `index`.
    pub fn unit(basis: Basis, index: Partition) -> Result<Self> {
        let mut out = LinComb::zero(basis);
        out.add_term(index, BigInt::one())?;
        Ok(out)
    }

    /// The constant `1` (index `∅`).
    pub fn one(basis: Basis) -> Self {
        LinComb::unit(basis, Partition::empty()).expect("∅ is in every basis")
    }

    pub fn from_terms<C: Into<BigInt>>(
        basis: Basis,
        terms: impl IntoIterator<Item = (Partition, C)>,
    ) -> Result<Self> {
        let mut out = LinComb::zero(basis);
        for (index, c) in terms {
            out.add_term(index, c.into())?;
        }
        Ok(out)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff · b_index` in place.
    pub fn add_term(&mut self, index: Partition, coeff: BigInt) -> Result<()> {
        if !self.basis.accepts(&index) {
            return Err(Error::NotKBounded { partition: index, k: self.basis.k().unwrap_or(0) });
        }
        if coeff.is_zero() {
            return Ok(());
        }
        match self.terms.entry(index) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    pub fn coeff_of(&self, index: &Partition) -> BigInt {
        self.terms.get(index).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeff_of_key(&self, key: &BasisKey) -> Result<BigInt> {
        if key.basis != self.basis {
            return Err(Error::BasisMismatch(key.basis.to_string(), self.basis.to_string()));
        }
        Ok(self.coeff_of(&key.index))
    }

    /// Terms in canonical order: descending lexicographic on the index.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn keys(&self) -> impl Iterator<Item = BasisKey> + '_ {
        self.terms().map(|(p, _)| BasisKey { basis: self.basis, index: p.clone() })
    }

    /// Whether this is exactly `1 · b_index`.
    pub fn is_unit_at(&self, index: &Partition) -> bool {
        self.terms.len() == 1 && self.coeff_of(index).is_one()
    }

    pub fn add(&self, other: &LinComb) -> Result<LinComb> {
        self.check_basis(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LinComb) -> Result<LinComb> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn add_assign(&mut self, other: &LinComb) -> Result<()> {
        self.check_basis(other)?;
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c.clone())?;
        }
        Ok(())
    }

    /// `self += factor · other`.
    pub fn add_scaled(&mut self, other: &LinComb, factor: &BigInt) -> Result<()> {
        self.check_basis(other)?;
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c * factor)?;
        }
        Ok(())
    }

    pub fn scale(&self, factor: &BigInt) -> LinComb {
        if factor.is_zero() {
            return LinComb::zero(self.basis);
        }
        LinComb {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * factor)).collect(),
        }
    }

    /// Extends `f` (defined on basis elements) linearly.
    pub fn map_linear<F>(&self, target: Basis, mut f: F) -> Result<LinComb>
    where
        F: FnMut(&Partition) -> Result<LinComb>,
    {
        let mut out = LinComb::zero(target);
        for (p, c) in &self.terms {
            out.add_scaled(&f(p)?, c)?;
        }
        Ok(out)
    }

    /// In the `h` basis, multiplies by `h_{parts}` (concatenate and sort).
    pub fn mul_h_monomial(&self, parts: &[usize]) -> Result<LinComb> {
        self.require(Basis::H)?;
        let mut out = LinComb::zero(Basis::H);
        for (p, c) in &self.terms {
            let mut merged = p.parts().to_vec();
            merged.extend_from_slice(parts);
            out.add_term(Partition::from_unsorted(merged), c.clone())?;
        }
        Ok(out)
    }

    pub(crate) fn require(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(Error::WrongBasis { expected: basis.to_string(), found: self.basis.to_string() });
        }
        Ok(())
    }

    fn check_basis(&self, other: &LinComb) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(self.basis.to_string(), other.basis.to_string()));
        }
        Ok(())
    }

    fn symbol(&self, index: &Partition) -> String {
        match self.basis {
            Basis::H => format!("h({index})"),
            Basis::Schur => format!("s({index})"),
            Basis::KSchur(k) => format!("s{k}({index})"),
        }
    }

    /// Human-readable form, e.g. `h(2,2,2,1) - 2 h(3,2,1,1) + h(3,3,1)`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (p, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => out.push('-'),
                _ => {
                    out.push(' ');
                    out.push_str(sign);
                    out.push(' ');
                }
            }
            let mag = c.abs();
            if !mag.is_one() {
                out.push_str(&format!("{mag} "));
            }
            out.push_str(&self.symbol(p));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("term lists always serialize")
    }

    pub fn from_json(s: &str) -> Result<LinComb> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.basis, self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct WireTerm {
    index: Partition,
    #[serde(with = "coeff_serde")]
    coeff: BigInt,
}

#[derive(Serialize, Deserialize)]
struct Wire {
    basis: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    terms: Vec<WireTerm>,
}

mod coeff_serde {
    use super::*;

    pub fn serialize<S: serde::Serializer>(c: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        match c.to_i128() {
            Some(v) => s.serialize_i128(v),
            None => Err(serde::ser::Error::custom(format!("coefficient {c} exceeds 128 bits"))),
        }
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        i128::deserialize(d).map(BigInt::from)
    }
}

impl Serialize for LinComb {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            basis: self.basis.tag().to_string(),
            k: self.basis.k(),
            terms: self.terms().map(|(p, c)| WireTerm { index: p.clone(), coeff: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinComb {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = Wire::deserialize(d)?;
        let basis = match (wire.basis.as_str(), wire.k) {
            ("h", None) => Basis::H,
            ("schur", None) => Basis::Schur,
            ("kschur", Some(k)) if k >= 1 => Basis::KSchur(k),
            (b, k) => return Err(D::Error::custom(format!("invalid basis {b:?} with k = {k:?}"))),
        };
        LinComb::from_terms(basis, wire.terms.into_iter().map(|t| (t.index, t.coeff)))
            .map_err(D::Error::custom)
    }
}

/// All `μ ⊇ λ` with `μ/λ` a horizontal `ℓ`-strip.
pub fn horizontal_strips_over(lambda: &Partition, ell: usize) -> Vec<Partition> {
    fn go(lambda: &Partition, row: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let base = lambda.row(row);
        if row > lambda.len() + 1 {
            if rem == 0 {
                out.push(Partition::from_sorted(cur.iter().copied().filter(|&x| x > 0).collect()));
            }
            return;
        }
        let cap = if row == 1 { base + rem } else { lambda.row(row - 1).min(base + rem) };
        for v in (base..=cap).rev() {
            cur.push(v);
            go(lambda, row + 1, rem - (v - base), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 1, ell, &mut Vec::new(), &mut out);
    out
}

/// All `μ ⊆ λ` with `λ/μ` a vertical `m`-strip.
pub fn vertical_strips_under(lambda: &Partition, m: usize) -> Vec<Partition> {
    let n = lambda.len();
    if m > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mask in 0u64..1 << n {
        if mask.count_ones() as usize != m {
            continue;
        }
        let parts: Vec<usize> =
            (0..n).map(|i| lambda.parts()[i] - ((mask >> i) & 1) as usize).collect();
        if let Ok(mu) = Partition::new(parts) {
            out.push(mu);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// `h_ℓ · s_λ` by the classical Pieri rule.
pub fn classical_pieri_h(ell: usize, lambda: &Partition) -> LinComb {
    LinComb::from_terms(Basis::Schur, horizontal_strips_over(lambda, ell).into_iter().map(|mu| (mu, 1)))
        .expect("Schur basis accepts every index")
}

/// `h_ℓ · f` for `f` in the Schur basis.
pub fn h_times(ell: usize, f: &LinComb) -> Result<LinComb> {
    f.require(Basis::Schur)?;
    f.map_linear(Basis::Schur, |p| Ok(classical_pieri_h(ell, p)))
}

/// `e_m^⊥ s_λ = Σ s_μ` over vertical `m`-strips `λ/μ`.
pub fn e_perp(m: usize, lambda: &Partition) -> LinComb {
    LinComb::from_terms(Basis::Schur, vertical_strips_under(lambda, m).into_iter().map(|mu| (mu, 1)))
        .expect("Schur basis accepts every index")
}

/// `e_m^⊥` extended linearly.
pub fn e_perp_lin(m: usize, f: &LinComb) -> Result<LinComb> {
    f.require(Basis::Schur)?;
    f.map_linear(Basis::Schur, |p| Ok(e_perp(m, p)))
}

/// Bernstein's operator `B_n = Σ_{i≥0} (-1)^i h_{n+i} e_i^⊥`, on the Schur
/// basis. Terms with `i` above the longest index length vanish.
pub fn bernstein_b(n: usize, f: &LinComb) -> Result<LinComb> {
    f.require(Basis::Schur)?;
    let max_len = f.terms().map(|(p, _)| p.len()).max().unwrap_or(0);
    let mut out = LinComb::zero(Basis::Schur);
    for i in 0..=max_len {
        let term = h_times(n + i, &e_perp_lin(i, f)?)?;
        let sign = if i % 2 == 0 { BigInt::one() } else { BigInt::from(-1) };
        out.add_scaled(&term, &sign)?;
    }
    Ok(out)
}

/// `B_{λ_1} ⋯ B_{λ_ℓ} · 1`.
pub fn schur_by_bernstein(lambda: &Partition) -> Result<LinComb> {
    lambda
        .parts()
        .iter()
        .rev()
        .try_fold(LinComb::one(Basis::Schur), |f, &part| bernstein_b(part, &f))
}

/// Number of semistandard tableaux of shape `μ` and weight `α`, read off as
/// the coefficient of `s_μ` in `h_{α_1} ⋯ h_{α_r} · 1`.
pub fn classical_kostka(mu: &Partition, alpha: &[usize]) -> Result<BigInt> {
    let total: usize = alpha.iter().sum();
    if total != mu.size() {
        return Err(Error::DegreeMismatch(mu.size(), total));
    }
    let mut current: BTreeMap<Partition, BigInt> = BTreeMap::from([(Partition::empty(), BigInt::one())]);
    for &a in alpha {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (p, c) in &current {
            for q in horizontal_strips_over(p, a) {
                if mu.contains(&q) {
                    *next.entry(q).or_insert_with(BigInt::zero) += c;
                }
            }
        }
        current = next;
    }
    Ok(current.remove(mu).unwrap_or_else(BigInt::zero))
}

/// Inverts a unitriangular change of basis `h_λ = b_λ + Σ_{μ ▷ λ} K(μ, λ) b_μ`.
///
/// `indices` must be listed in an order where every `μ` with `K(μ, λ) ≠ 0`,
/// `μ ≠ λ`, precedes `λ` (descending lexicographic order works for
/// dominance). Returns the `h`-expansion of every `b_λ`.
pub fn unitriangular_inverse<F>(indices: &[Partition], mut kostka: F) -> Result<BTreeMap<Partition, LinComb>>
where
    F: FnMut(&Partition, &Partition) -> Result<BigInt>,
{
    let mut out: BTreeMap<Partition, LinComb> = BTreeMap::new();
    for (pos, lambda) in indices.iter().enumerate() {
        let diag = kostka(lambda, lambda)?;
        if !diag.is_one() {
            return Err(Error::Invariant(format!("diagonal entry K({lambda},{lambda}) = {diag}")));
        }
        let mut expansion = LinComb::unit(Basis::H, lambda.clone())?;
        for mu in &indices[..pos] {
            let c = kostka(mu, lambda)?;
            if !c.is_zero() {
                expansion.add_scaled(&out[mu], &-c)?;
            }
        }
        for mu in &indices[pos + 1..] {
            if !kostka(mu, lambda)?.is_zero() {
                return Err(Error::Invariant(format!("K({mu},{lambda}) is nonzero below the diagonal")));
            }
        }
        out.insert(lambda.clone(), expansion);
    }
    Ok(out)
}

/// `h`-expansion of the classical Schur function `s_λ` (Jacobi–Trudi
/// coefficients), obtained by inverting the classical Kostka matrix.
pub fn classical_schur_h(lambda: &Partition) -> Result<LinComb> {
    let all = Partition::all(lambda.size());
    let mut table = unitriangular_inverse(&all, |mu, la| classical_kostka(mu, la.parts()))?;
    Ok(table.remove(lambda).expect("λ is a partition of its own size"))
}

/// Whether `outer/inner` is a horizontal strip.
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    SkewShape::new(outer.clone(), inner.clone()).is_ok_and(|s| s.is_horizontal_strip())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn schur(terms: &[(&str, i64)]) -> LinComb {
        LinComb::from_terms(Basis::Schur, terms.iter().map(|(s, c)| (p(s), *c))).unwrap()
    }

    #[test]
    fn lincomb_algebra() {
        let f = schur(&[("2,1", 3), ("3", -1)]);
        assert!(f.add(&f.scale(&BigInt::from(-1))).unwrap().is_zero());
        let s = LinComb::unit(Basis::Schur, p("2,1")).unwrap();
        assert_eq!(s.coeff_of(&p("2,1")), BigInt::one());
        let two = schur(&[("2", 1), ("1,1", 1)]).scale(&BigInt::from(2));
        assert_eq!(two.coeff_of(&p("2")), BigInt::from(2));
        assert_eq!(two.coeff_of(&p("1,1")), BigInt::from(2));
        assert_eq!(f.sub(&f).unwrap(), LinComb::zero(Basis::Schur));
    }

    #[test]
    fn basis_mismatch_is_an_error() {
        let a = LinComb::one(Basis::H);
        let b = LinComb::one(Basis::KSchur(3));
        assert!(matches!(a.add(&b), Err(Error::BasisMismatch(..))));
        let c = LinComb::one(Basis::KSchur(2));
        assert!(b.add(&c).is_err());
        assert!(LinComb::unit(Basis::KSchur(2), p("3")).is_err());
        let key = BasisKey { basis: Basis::Schur, index: Partition::empty() };
        assert!(a.coeff_of_key(&key).is_err());
    }

    #[test]
    fn canonical_order_and_text() {
        let f = LinComb::from_terms(
            Basis::H,
            [(p("4,2,1"), -1), (p("2,2,2,1"), 1), (p("3,2,1,1"), -2), (p("4,1,1,1"), 1), (p("3,3,1"), 1)],
        )
        .unwrap();
        let order: Vec<String> = f.terms().map(|(p, _)| p.to_string()).collect();
        assert_eq!(order, vec!["4,2,1", "4,1,1,1", "3,3,1", "3,2,1,1", "2,2,2,1"]);
        assert_eq!(f.to_text(), "-h(4,2,1) + h(4,1,1,1) + h(3,3,1) - 2 h(3,2,1,1) + h(2,2,2,1)");
        assert_eq!(LinComb::zero(Basis::H).to_text(), "0");
    }

    #[test]
    fn json_schema() {
        let f = LinComb::from_terms(Basis::KSchur(4), [(p("2,1"), 2), (p("3"), -1)]).unwrap();
        assert_eq!(
            f.to_json(),
            r#"{"basis":"kschur","k":4,"terms":[{"index":[3],"coeff":-1},{"index":[2,1],"coeff":2}]}"#
        );
        assert_eq!(LinComb::from_json(&f.to_json()).unwrap(), f);
        let h = LinComb::one(Basis::H);
        assert_eq!(h.to_json(), r#"{"basis":"h","terms":[{"index":[],"coeff":1}]}"#);
        assert!(LinComb::from_json(r#"{"basis":"kschur","terms":[]}"#).is_err());
        assert!(LinComb::from_json(r#"{"basis":"h","terms":[{"index":[1,2],"coeff":1}]}"#).is_err());
        assert!(LinComb::from_json(r#"{"basis":"kschur","k":2,"terms":[{"index":[3],"coeff":1}]}"#).is_err());
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(classical_pieri_h(1, &Partition::empty()), schur(&[("1", 1)]));
        assert_eq!(classical_pieri_h(2, &p("1")), schur(&[("3", 1), ("2,1", 1)]));
        assert_eq!(classical_pieri_h(1, &p("1")), schur(&[("2", 1), ("1,1", 1)]));
    }

    #[test]
    fn e_perp_examples() {
        assert_eq!(e_perp(0, &p("3,1")), schur(&[("3,1", 1)]));
        assert_eq!(e_perp(1, &p("1")), schur(&[("", 1)]));
        assert_eq!(e_perp(2, &p("2,1")), schur(&[("1", 1)]));
        assert!(e_perp(3, &p("2,1")).is_zero());
    }

    #[test]
    fn bernstein_examples() {
        for n in 0..5 {
            let expect = if n == 0 { schur(&[("", 1)]) } else { schur(&[(&n.to_string(), 1)]) };
            assert_eq!(bernstein_b(n, &LinComb::one(Basis::Schur)).unwrap(), expect);
        }
        let b21 = bernstein_b(2, &bernstein_b(1, &LinComb::one(Basis::Schur)).unwrap()).unwrap();
        assert_eq!(b21, schur(&[("2,1", 1)]));
    }

    #[test]
    fn bernstein_builds_every_schur_function() {
        for n in 0..=6 {
            for lam in Partition::all(n) {
                assert!(schur_by_bernstein(&lam).unwrap().is_unit_at(&lam), "{lam}");
            }
        }
    }

    /// Direct enumeration of semistandard tableaux, row by row.
    fn ssyt_count(shape: &Partition, weight: &[usize]) -> u64 {
        fn go(shape: &Partition, weight: &[usize], letter: usize, inner: &Partition) -> u64 {
            if letter == weight.len() {
                return (inner == shape) as u64;
            }
            horizontal_strips_over(inner, weight[letter])
                .into_iter()
                .filter(|q| shape.contains(q))
                .map(|q| go(shape, weight, letter + 1, &q))
                .sum()
        }
        go(shape, weight, 0, &Partition::empty())
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(classical_kostka(&p("3,2"), &[3, 2]).unwrap(), BigInt::one());
        assert_eq!(classical_kostka(&p("2,1"), &[1, 1, 1]).unwrap(), BigInt::from(2));
        assert_eq!(ssyt_count(&p("2,1"), &[1, 1, 1]), 2);
        assert!(classical_kostka(&p("2,2"), &[3, 1]).unwrap().is_zero());
        assert!(matches!(classical_kostka(&p("2"), &[1]), Err(Error::DegreeMismatch(2, 1))));
    }

    #[test]
    fn kostka_matches_ssyt_enumeration() {
        for n in 0..=6 {
            for mu in Partition::all(n) {
                for alpha in Partition::all(n) {
                    let k = classical_kostka(&mu, alpha.parts()).unwrap();
                    assert_eq!(k, BigInt::from(ssyt_count(&mu, alpha.parts())));
                    if !mu.dominates(&alpha) {
                        assert!(k.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn pieri_and_e_perp_are_adjoint() {
        for n in 0..=7 {
            for lam in Partition::all(n) {
                for ell in 0..=7 - n {
                    for mu in Partition::all(n + ell) {
                        let up = classical_pieri_h(ell, &lam).coeff_of(&mu);
                        let strip = mu.contains(&lam) && is_horizontal_strip(&mu, &lam);
                        assert_eq!(up, BigInt::from(strip as i32));
                    }
                }
                for m in 0..=n {
                    for mu in Partition::all(n - m) {
                        let down = e_perp(m, &lam).coeff_of(&mu);
                        let strip = SkewShape::new(lam.clone(), mu.clone()).is_ok_and(|s| s.is_vertical_strip());
                        assert_eq!(down, BigInt::from(strip as i32));
                    }
                }
            }
        }
    }

    #[test]
    fn classical_h_expansions() {
        // s_(2,1) = h_2 h_1 - h_3
        let s21 = classical_schur_h(&p("2,1")).unwrap();
        assert_eq!(s21, LinComb::from_terms(Basis::H, [(p("2,1"), 1), (p("3"), -1)]).unwrap());
        // s_(1,1) = h_1^2 - h_2
        let s11 = classical_schur_h(&p("1,1")).unwrap();
        assert_eq!(s11, LinComb::from_terms(Basis::H, [(p("1,1"), 1), (p("2"), -1)]).unwrap());
    }

    #[test]
    fn recomputation_is_identical() {
        let a = classical_schur_h(&p("3,2,1")).unwrap();
        let b = classical_schur_h(&p("3,2,1")).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }
}
