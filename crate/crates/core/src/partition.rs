//! Integer partitions and skew shapes.
//!
//! Diagrams use the French convention: row 1 is the *bottom* row and rows
//! are numbered upwards, columns are numbered from 1 at the left. A cell
//! `(i, j)` therefore lies in the `i`-th row from the bottom. Many libraries
//! (and most of the English literature) draw row 1 at the top instead; the
//! arithmetic is identical, only "above"/"below" swap meaning.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A cell of a Ferrers diagram, 1-indexed, `row` counted from the bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Content `col - row`; cells on the same diagonal share it.
    pub fn diagonal(self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// `(col - row) mod (k + 1)`.
    pub fn residue(self, k: usize) -> usize {
        residue(self.row, self.col, k)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The `(k+1)`-residue of cell `(i, j)`: `(j - i) mod (k + 1)`.
pub fn residue(row: usize, col: usize, k: usize) -> usize {
    (col as i64 - row as i64).rem_euclid(k as i64 + 1) as usize
}

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are never stored, so structural equality is equality of
/// partitions. The derived ordering is lexicographic on the parts, which
/// restricted to one degree is a linear extension of dominance.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Caller guarantees `parts` is weakly decreasing with no zeros.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition(parts)
    }

    /// Sorts an arbitrary sequence of nonnegative integers into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `i` (1-indexed from the bottom); 0 past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// First part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.row(1)
    }

    pub fn is_k_bounded(&self, k: usize) -> bool {
        self.first() <= k
    }

    /// The partition without its first part, `λ̂`.
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// `(r, λ_1, λ_2, ...)`; `r` must be at least `λ_1`.
    pub fn prepend(&self, r: usize) -> Result<Partition> {
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(r);
        parts.extend_from_slice(&self.0);
        Partition::new(parts)
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && self.row(c.row) >= c.col
    }

    /// All cells, row by row from the bottom, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let first = self.first();
        let mut cols = vec![0usize; first];
        for &len in &self.0 {
            for c in cols.iter_mut().take(len) {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// `λ_i - j + λ'_j - i + 1` for a cell `(i, j)` of the diagram.
    pub fn hook_length(&self, row: usize, col: usize) -> Result<usize> {
        let cell = Cell::new(row, col);
        if !self.contains_cell(cell) {
            return Err(Error::CellOutOfShape { cell, shape: self.clone() });
        }
        let height = self.0.iter().take_while(|&&len| len >= col).count();
        Ok(self.row(row) - col + height - row + 1)
    }

    /// Hook lengths of every cell, indexed `[row - 1][col - 1]`.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &len)| (1..=len).map(|j| len - j + conj.row(j) - (i + 1) + 1).collect())
            .collect()
    }

    /// `λ ⊵ μ`: equal degree and every prefix sum of `λ` dominates.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 1..=self.len().max(other.len()) {
            a += self.row(i);
            b += other.row(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// Cells `(i, j)` with `(i, j+1)` and `(i+1, j)` outside the diagram.
    pub fn removable_corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.row(i + 1) < self.row(i))
            .map(|i| Cell::new(i, self.row(i)))
            .collect()
    }

    /// Cells outside the diagram whose left and lower neighbours are inside
    /// (or on the boundary), including `(1, λ_1 + 1)` and `(ℓ(λ) + 1, 1)`.
    pub fn addable_corners(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.row(i - 1) > self.row(i))
            .map(|i| Cell::new(i, self.row(i) + 1))
            .collect()
    }

    /// Cells `(i, j)` with `(i+1, j+1)` outside the diagram.
    pub fn extremal_cells(&self) -> Vec<Cell> {
        self.cells()
            .filter(|c| !self.contains_cell(Cell::new(c.row + 1, c.col + 1)))
            .collect()
    }

    /// Whether `c` is the last cell of its row.
    pub fn is_row_end(&self, c: Cell) -> bool {
        self.contains_cell(c) && self.row(c.row) == c.col
    }

    /// Whether `c` is the top cell of its column.
    pub fn is_column_top(&self, c: Cell) -> bool {
        self.contains_cell(c) && !self.contains_cell(Cell::new(c.row + 1, c.col))
    }

    /// All partitions of `n` in descending lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        Partition::bounded(n, n)
    }

    /// Partitions of `n` with every part at most `k`, descending lexicographic.
    pub fn bounded(n: usize, k: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 || k > 0 {
            go(n, k, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated weakly decreasing positive integers; `""` is `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                match t.parse::<usize>() {
                    Ok(0) | Err(_) => Err(Error::Parse(format!("invalid part {t:?} in {s:?}"))),
                    Ok(v) => Ok(v),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| Error::Parse(format!("{s:?} is not weakly decreasing")))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        if parts.contains(&0) {
            return Err(serde::de::Error::custom("partition parts must be positive"));
        }
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A skew diagram `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.outer.cells().filter(|c| !self.inner.contains_cell(*c))
    }

    /// No two cells in the same column.
    pub fn is_horizontal_strip(&self) -> bool {
        // column j holds a skew cell in rows i and i+1 iff inner_i < j <= outer_{i+1}
        (1..self.outer.len()).all(|i| self.outer.row(i + 1) <= self.inner.row(i))
    }

    /// No two cells in the same row.
    pub fn is_vertical_strip(&self) -> bool {
        (1..=self.outer.len()).all(|i| self.outer.row(i) - self.inner.row(i) <= 1)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
        let lam = p("5,3,3,2");
        let rows_nonempty = lam.cells().filter(|c| c.col == 1).count();
        assert_eq!(lam.conjugate().first(), rows_nonempty);
        assert_eq!(lam.conjugate().first(), 4);
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(p("5,3,3,2").hook_length(1, 2).unwrap(), 7);
        assert_eq!(p("1").hook_length(1, 1).unwrap(), 1);
        assert_eq!(p("4,2,1").hook_length(1, 1).unwrap(), 6);
        assert!(matches!(p("4,2,1").hook_length(2, 3), Err(Error::CellOutOfShape { .. })));
        assert!(p("").hook_length(1, 1).is_err());
    }

    #[test]
    fn six_core_hook_lengths() {
        // the 6-core (4,3,3,1) drawn with its hook lengths
        let h = p("4,3,3,1").hook_lengths();
        assert_eq!(h, vec![vec![7, 5, 4, 1], vec![5, 3, 2], vec![4, 2, 1], vec![1]]);
    }

    #[test]
    fn dominance_examples() {
        assert!(p("2,1").dominates(&p("1,1,1")));
        assert!(!p("2,2").dominates(&p("3,1")));
        assert!(p("3,2,1").dominates(&p("3,2,1")));
        assert!(!p("2,1").dominates(&p("1,1")));
    }

    #[test]
    fn containment_examples() {
        assert!(p("3,1").contains(&Partition::empty()));
        assert!(p("5,3,2,1").contains(&p("4,2")));
        assert!(!p("3,1").contains(&p("2,2")));
        let skew = SkewShape::new(p("5,3,2,1"), p("4,2")).unwrap();
        assert_eq!(skew.size(), 5);
        assert!(SkewShape::new(p("3,1"), p("2,2")).is_err());
    }

    #[test]
    fn strip_examples() {
        let s = SkewShape::new(p("3,1"), p("1")).unwrap();
        assert!(s.is_horizontal_strip());
        let s = SkewShape::new(p("2,2"), p("1")).unwrap();
        let mut cols: Vec<usize> = s.cells().map(|c| c.col).collect();
        cols.sort();
        assert_eq!(cols, vec![1, 2, 2]);
        assert!(!s.is_horizontal_strip());
        let s = SkewShape::new(p("1,1"), Partition::empty()).unwrap();
        assert!(s.is_vertical_strip());
        assert!(!s.is_horizontal_strip());
    }

    #[test]
    fn corner_examples() {
        let e = Partition::empty();
        assert!(e.removable_corners().is_empty());
        assert_eq!(e.addable_corners(), vec![Cell::new(1, 1)]);

        let one = p("1");
        assert_eq!(one.removable_corners(), vec![Cell::new(1, 1)]);
        assert_eq!(one.addable_corners(), vec![Cell::new(1, 2), Cell::new(2, 1)]);

        let lam = p("5,3,3,2");
        assert_eq!(lam.removable_corners(), vec![Cell::new(1, 5), Cell::new(3, 3), Cell::new(4, 2)]);
        assert_eq!(
            lam.addable_corners(),
            vec![Cell::new(1, 6), Cell::new(2, 4), Cell::new(4, 3), Cell::new(5, 1)]
        );
        assert_eq!(
            lam.extremal_cells(),
            vec![
                Cell::new(1, 3),
                Cell::new(1, 4),
                Cell::new(1, 5),
                Cell::new(2, 3),
                Cell::new(3, 2),
                Cell::new(3, 3),
                Cell::new(4, 1),
                Cell::new(4, 2),
            ]
        );
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("4,3,2,2,1,1").to_string(), "4,3,2,2,1,1");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p("3,1"));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(Partition::bounded(8, 4).len(), 15);
        let all = Partition::all(6);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }

    fn cell_set(l: &Partition) -> BTreeSet<Cell> {
        l.cells().collect()
    }

    #[test]
    fn conjugation_is_an_involution() {
        for n in 0..=10 {
            for lam in Partition::all(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn hook_length_matches_cell_counting() {
        for n in 0..=8 {
            for lam in Partition::all(n) {
                let cells = cell_set(&lam);
                for c in &cells {
                    let right = cells.iter().filter(|d| d.row == c.row && d.col > c.col).count();
                    let above = cells.iter().filter(|d| d.col == c.col && d.row > c.row).count();
                    assert_eq!(lam.hook_length(c.row, c.col).unwrap(), 1 + right + above);
                    assert_eq!(lam.hook_lengths()[c.row - 1][c.col - 1], 1 + right + above);
                }
            }
        }
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 0..=8 {
            let all = Partition::all(n);
            for a in &all {
                assert!(a.dominates(a));
                for b in &all {
                    if a != b && a.dominates(b) {
                        assert!(!b.dominates(a));
                        assert!(a > b, "lex order extends dominance");
                    }
                    for c in &all {
                        if a.dominates(b) && b.dominates(c) {
                            assert!(a.dominates(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn removable_corners_are_extremal() {
        for n in 0..=8 {
            for lam in Partition::all(n) {
                let ext = lam.extremal_cells();
                for c in lam.removable_corners() {
                    assert!(ext.contains(&c));
                }
            }
        }
    }

    #[test]
    fn strips_match_brute_force() {
        for n in 0..=6 {
            for outer in Partition::all(n) {
                for m in 0..=n {
                    for inner in Partition::all(m).into_iter().filter(|i| outer.contains(i)) {
                        let s = SkewShape::new(outer.clone(), inner).unwrap();
                        let cells: Vec<Cell> = s.cells().collect();
                        let cols: BTreeSet<usize> = cells.iter().map(|c| c.col).collect();
                        let rows: BTreeSet<usize> = cells.iter().map(|c| c.row).collect();
                        assert_eq!(s.is_horizontal_strip(), cols.len() == cells.len(), "{s}");
                        assert_eq!(s.is_vertical_strip(), rows.len() == cells.len(), "{s}");
                    }
                }
            }
        }
    }
}
