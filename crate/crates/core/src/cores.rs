//! `(k+1)`-cores and the affine symmetric group acting on them.
//!
//! A [`Core`] carries its `k`; the bijection with `k`-bounded partitions is
//! [`Core::p_map`] / [`Core::from_bounded`]. The generators `σ_i` add or
//! remove every corner of residue `i`, and transpositions `t_{r,s}` are the
//! palindromic words in them. Strong covers are the containments that raise
//! the number of `k`-bounded cells by exactly one.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

/// A partition with no hook of length `k + 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Core {
    shape: Partition,
    k: usize,
}

impl Core {
    /// Validates that no cell of `shape` has hook length `k + 1`.
    pub fn new(shape: Partition, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if !is_core(&shape, k) {
            return Err(Error::NotACore { shape, k });
        }
        Ok(Core { shape, k })
    }

    pub fn empty(k: usize) -> Self {
        Core { shape: Partition::empty(), k }
    }

    /// For shapes produced by core-preserving operations.
    pub(crate) fn certified(shape: Partition, k: usize) -> Self {
        debug_assert!(is_core(&shape, k), "({shape}) is not a {}-core", k + 1);
        Core { shape, k }
    }

    /// The map `𝔠`: builds the `k`-skew diagram of a `k`-bounded partition and
    /// returns its outer shape.
    ///
    /// Rows are attached from the top of `λ` down; each new (lower) row is
    /// placed as far left as possible without creating a hook longer than `k`
    /// inside the skew diagram.
    pub fn from_bounded(lambda: &Partition, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if !lambda.is_k_bounded(k) {
            return Err(Error::NotKBounded { partition: lambda.clone(), k });
        }
        let n = lambda.len();
        // (inner, outer) of each skew row, indexed by row - 1
        let mut inner = vec![0usize; n];
        let mut outer = vec![0usize; n];
        for i in (0..n).rev() {
            let len = lambda.parts()[i];
            let mut shift = if i + 1 < n { inner[i + 1] } else { 0 };
            loop {
                let fits = (shift + 1..=shift + len).all(|col| {
                    let arm = shift + len - col;
                    let leg = (i + 1..n).filter(|&j| inner[j] < col && col <= outer[j]).count();
                    arm + leg < k
                });
                if fits {
                    break;
                }
                shift += 1;
            }
            inner[i] = shift;
            outer[i] = shift + len;
        }
        Ok(Core::certified(Partition::from_sorted(outer), k))
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.shape.is_empty()
    }

    /// The map `𝔭`: number of `k`-bounded cells in each row.
    pub fn p_map(&self) -> Partition {
        let counts: Vec<usize> = self
            .shape
            .hook_lengths()
            .iter()
            .map(|row| row.iter().filter(|&&h| h <= self.k).count())
            .collect();
        Partition::new(counts).expect("k-bounded cell counts of a core form a partition")
    }

    /// `|𝔭(γ)|`, the number of `k`-bounded cells.
    pub fn bounded_size(&self) -> usize {
        self.shape.hook_lengths().iter().flatten().filter(|&&h| h <= self.k).count()
    }

    /// Cells with hook length at most `k`.
    pub fn bounded_cells(&self) -> Vec<Cell> {
        let hooks = self.shape.hook_lengths();
        self.shape.cells().filter(|c| hooks[c.row - 1][c.col - 1] <= self.k).collect()
    }

    /// `γ̂`: the core without its first row.
    pub fn hat(&self) -> Core {
        Core::certified(self.shape.tail(), self.k)
    }

    pub fn residue_of(&self, c: Cell) -> usize {
        c.residue(self.k)
    }

    pub fn addable_of_residue(&self, i: usize) -> Vec<Cell> {
        self.shape.addable_corners().into_iter().filter(|c| c.residue(self.k) == i).collect()
    }

    pub fn removable_of_residue(&self, i: usize) -> Vec<Cell> {
        self.shape.removable_corners().into_iter().filter(|c| c.residue(self.k) == i).collect()
    }

    /// `σ_i`: removes every removable corner of residue `i` if there is one,
    /// otherwise adds every addable corner of residue `i`.
    pub fn sigma(&self, i: usize) -> Result<Core> {
        if i > self.k {
            return Err(Error::ResidueOutOfRange { residue: i, k: self.k });
        }
        let removable = self.removable_of_residue(i);
        let addable = self.addable_of_residue(i);
        if !removable.is_empty() && !addable.is_empty() {
            return Err(Error::Invariant(format!(
                "({}) has addable and removable corners of residue {i}",
                self.shape
            )));
        }
        let mut parts = self.shape.parts().to_vec();
        if !removable.is_empty() {
            for c in removable {
                parts[c.row - 1] -= 1;
            }
        } else if !addable.is_empty() {
            for c in addable {
                if c.row > parts.len() {
                    parts.push(1);
                } else {
                    parts[c.row - 1] += 1;
                }
            }
        } else {
            return Err(Error::UndefinedAction { residue: i, shape: self.shape.clone() });
        }
        let shape = Partition::new(parts).expect("corner moves preserve partitions");
        Ok(Core::certified(shape, self.k))
    }

    /// Applies a word of generators; the last letter acts first.
    pub fn apply_word(&self, word: &[i64]) -> Result<Core> {
        let m = self.k as i64 + 1;
        word.iter().rev().try_fold(self.clone(), |g, &i| g.sigma(i.rem_euclid(m) as usize))
    }

    /// `σ_A`: for each cyclic component `[a, b]` of `A`, `σ_b ⋯ σ_{a+1} σ_a`.
    pub fn sigma_set(&self, a: &ResidueSet) -> Result<Core> {
        self.check_k(a.k())?;
        let mut g = self.clone();
        for (start, end) in a.cyclic_components()? {
            g = g.apply_word(&component_word(start, end, self.k))?;
        }
        Ok(g)
    }

    /// `σ_A` with the components applied in reverse order.
    pub fn sigma_set_reversed(&self, a: &ResidueSet) -> Result<Core> {
        self.check_k(a.k())?;
        let mut g = self.clone();
        for (start, end) in a.cyclic_components()?.into_iter().rev() {
            g = g.apply_word(&component_word(start, end, self.k))?;
        }
        Ok(g)
    }

    /// `t_{r,s} = σ_r σ_{r+1} ⋯ σ_{s-1} ⋯ σ_{r+1} σ_r`, indices taken mod `k+1`.
    pub fn transposition(&self, r: i64, s: i64) -> Result<Core> {
        self.apply_word(&transposition_word(r, s)?)
    }

    /// `t_{r,s} = σ_{s-1} ⋯ σ_{r+1} σ_r σ_{r+1} ⋯ σ_{s-1}`; agrees with
    /// [`Core::transposition`] when `s - r < k + 1`.
    pub fn transposition_alt(&self, r: i64, s: i64) -> Result<Core> {
        if r >= s {
            return Err(Error::Invariant(format!("transposition needs r < s, got ({r}, {s})")));
        }
        let mut word: Vec<i64> = (r..s).rev().collect();
        word.extend(r + 1..s);
        self.apply_word(&word)
    }

    /// `t_{r', r+1}` for residues `r'` and `r` read cyclically, i.e. the
    /// transposition whose word visits `r', r'+1, ..., r` (mod `k+1`).
    pub fn transposition_cyclic(&self, from: usize, to: usize) -> Result<Core> {
        let m = self.k + 1;
        let span = (to + m - from) % m;
        self.transposition(from as i64, (from + span + 1) as i64)
    }

    /// `δ ⋖ γ` with `self = δ`: `δ ⊊ γ` and one more `k`-bounded cell in `γ`.
    pub fn is_covered_by(&self, upper: &Core) -> Result<bool> {
        self.check_k(upper.k)?;
        Ok(self.shape != upper.shape
            && upper.shape.contains(&self.shape)
            && upper.bounded_size() == self.bounded_size() + 1)
    }

    /// Connected components of `upper / self` for a strong cover, with the
    /// ribbon structure checked: components are ribbons, translates of each
    /// other, covering consecutive residues, heads on diagonals `k+1` apart.
    pub fn ribbon_components(&self, upper: &Core) -> Result<Vec<Ribbon>> {
        if !self.is_covered_by(upper)? {
            return Err(Error::NotACover { lower: self.shape.clone(), upper: upper.shape.clone() });
        }
        let cells: BTreeSet<Cell> = upper.shape.cells().filter(|c| !self.shape.contains_cell(*c)).collect();
        let ribbons: Vec<Ribbon> = connected_components(&cells)
            .into_iter()
            .map(|comp| Ribbon::from_cells(comp, self.k))
            .collect::<Result<_>>()?;

        let first = &ribbons[0];
        let m = self.k as i64 + 1;
        if first.len() > self.k {
            return Err(Error::Invariant(format!("ribbon of size {} with k = {}", first.len(), self.k)));
        }
        let shape_of = |r: &Ribbon| -> Vec<(i64, i64)> {
            r.cells
                .iter()
                .map(|c| (c.row as i64 - r.head.row as i64, c.col as i64 - r.head.col as i64))
                .collect()
        };
        let model = shape_of(first);
        for r in &ribbons[1..] {
            if shape_of(r) != model || r.first_residue != first.first_residue {
                return Err(Error::Invariant(format!(
                    "components of ({})/({}) are not translates",
                    upper.shape, self.shape
                )));
            }
        }
        let mut diagonals: Vec<i64> = ribbons.iter().map(|r| r.head.diagonal()).collect();
        diagonals.sort_unstable();
        if diagonals.windows(2).any(|w| w[1] - w[0] != m) {
            return Err(Error::Invariant(format!(
                "ribbon heads of ({})/({}) are not on consecutive diagonals: {diagonals:?}",
                upper.shape, self.shape
            )));
        }
        Ok(ribbons)
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if self.k != k {
            return Err(Error::MismatchedK(self.k, k));
        }
        Ok(())
    }
}

impl fmt::Display for Core {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.shape.fmt(f)
    }
}

impl fmt::Debug for Core {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Core[k={}]({})", self.k, self.shape)
    }
}

/// Whether no cell of `shape` has hook length exactly `k + 1`.
pub fn is_core(shape: &Partition, k: usize) -> bool {
    shape.hook_lengths().iter().flatten().all(|&h| h != k + 1)
}

/// Every `(k+1)`-core with at most `max_size` cells, smallest first.
pub fn cores_up_to(max_size: usize, k: usize) -> Vec<Core> {
    (0..=max_size)
        .flat_map(Partition::all)
        .filter(|p| is_core(p, k))
        .map(|p| Core::certified(p, k))
        .collect()
}

fn component_word(start: usize, end: usize, k: usize) -> Vec<i64> {
    let m = k + 1;
    let span = (end + m - start) % m;
    (0..=span).rev().map(|d| (start + d) as i64).collect()
}

fn transposition_word(r: i64, s: i64) -> Result<Vec<i64>> {
    if r >= s {
        return Err(Error::Invariant(format!("transposition needs r < s, got ({r}, {s})")));
    }
    let mut word: Vec<i64> = (r..s).collect();
    word.extend((r..s - 1).rev());
    Ok(word)
}

fn connected_components(cells: &BTreeSet<Cell>) -> Vec<Vec<Cell>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in cells {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            let nbrs = [
                Cell::new(c.row + 1, c.col),
                Cell::new(c.row, c.col + 1),
                Cell::new(c.row.wrapping_sub(1), c.col),
                Cell::new(c.row, c.col.wrapping_sub(1)),
            ];
            for n in nbrs {
                if cells.contains(&n) && seen.insert(n) {
                    comp.push(n);
                    queue.push_back(n);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// One connected component of a strong-cover skew shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ribbon {
    /// Sorted by row, then column.
    pub cells: Vec<Cell>,
    /// South-east-most cell (largest diagonal).
    pub head: Cell,
    /// Residue of the north-west-most cell; the ribbon spans residues
    /// `first_residue, ..., first_residue + len - 1` (mod `k+1`).
    pub first_residue: usize,
}

impl Ribbon {
    fn from_cells(cells: Vec<Cell>, k: usize) -> Result<Ribbon> {
        let set: BTreeSet<Cell> = cells.iter().copied().collect();
        let has_square = cells.iter().any(|c| {
            set.contains(&Cell::new(c.row + 1, c.col))
                && set.contains(&Cell::new(c.row, c.col + 1))
                && set.contains(&Cell::new(c.row + 1, c.col + 1))
        });
        let mut diagonals: Vec<i64> = cells.iter().map(|c| c.diagonal()).collect();
        diagonals.sort_unstable();
        let consecutive = diagonals.windows(2).all(|w| w[1] == w[0] + 1);
        if has_square || !consecutive {
            return Err(Error::Invariant(format!("component {cells:?} is not a ribbon")));
        }
        let head = *cells.iter().max_by_key(|c| c.diagonal()).expect("nonempty component");
        let tail = *cells.iter().min_by_key(|c| c.diagonal()).expect("nonempty component");
        Ok(Ribbon { head, first_residue: tail.residue(k), cells })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Residue of the head, `s - 1` for a cover by `t_{r,s}`.
    pub fn last_residue(&self, k: usize) -> usize {
        self.head.residue(k)
    }

    /// All cells in one row.
    pub fn is_horizontal(&self) -> bool {
        self.cells.iter().all(|c| c.row == self.head.row)
    }

    /// Lowest row touched.
    pub fn bottom_row(&self) -> usize {
        self.cells.iter().map(|c| c.row).min().unwrap_or(0)
    }
}

/// A subset of `Z_{k+1} = {0, ..., k}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResidueSet {
    bits: u64,
    k: usize,
}

impl ResidueSet {
    pub const MAX_K: usize = 63;

    pub fn new(k: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if k > Self::MAX_K {
            return Err(Error::ResidueOutOfRange { residue: k, k: Self::MAX_K });
        }
        let mut bits = 0u64;
        for e in elements {
            if e > k {
                return Err(Error::ResidueOutOfRange { residue: e, k });
            }
            bits |= 1 << e;
        }
        Ok(ResidueSet { bits, k })
    }

    pub fn empty(k: usize) -> Self {
        ResidueSet { bits: 0, k }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, r: usize) -> bool {
        r <= self.k && self.bits & (1 << r) != 0
    }

    pub fn is_proper(&self) -> bool {
        self.len() <= self.k
    }

    pub fn with(&self, r: usize) -> ResidueSet {
        ResidueSet { bits: self.bits | (1 << r), k: self.k }
    }

    pub fn without(&self, r: usize) -> ResidueSet {
        ResidueSet { bits: self.bits & !(1 << r), k: self.k }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.k).filter(move |&r| self.contains(r))
    }

    /// Maximal cyclic intervals `[a, b]`, i.e. `{a, a+1, ..., b}` mod `k+1`,
    /// ordered by their starting residue.
    pub fn cyclic_components(&self) -> Result<Vec<(usize, usize)>> {
        if !self.is_proper() {
            return Err(Error::ImproperSubset { size: self.len(), k: self.k });
        }
        let m = self.k + 1;
        let mut out = Vec::new();
        for a in self.iter() {
            if self.contains((a + m - 1) % m) {
                continue;
            }
            let mut b = a;
            while self.contains((b + 1) % m) {
                b = (b + 1) % m;
            }
            out.push((a, b));
        }
        Ok(out)
    }

    /// All subsets of `Z_{k+1}` with `size` elements, in increasing bit order.
    pub fn subsets_of_size(k: usize, size: usize) -> Vec<ResidueSet> {
        if size > k + 1 {
            return Vec::new();
        }
        (0u64..1 << (k + 1))
            .filter(|b| b.count_ones() as usize == size)
            .map(|bits| ResidueSet { bits, k })
            .collect()
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, r) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Checks items 1 and 2 of the extremal-cell comparison for cores: for
/// extremal cells `c`, `c'` of one residue with `c'` weakly north-west of `c`,
/// end-of-row and occupied-above propagate from `c` to `c'`; with `c'`
/// weakly south-east, top-of-column and occupied-right propagate.
pub fn check_extremal_cells(core: &Core) -> Result<()> {
    let shape = core.shape();
    let k = core.k();
    let ext = shape.extremal_cells();
    let above = |c: Cell| shape.contains_cell(Cell::new(c.row + 1, c.col));
    let right = |c: Cell| shape.contains_cell(Cell::new(c.row, c.col + 1));
    for &c in &ext {
        for &d in &ext {
            if c == d || c.residue(k) != d.residue(k) {
                continue;
            }
            let fail = |what: &str| {
                Err(Error::Invariant(format!("core ({shape}), k={k}: cells {c} and {d}: {what}")))
            };
            if d.row >= c.row && d.col <= c.col {
                if shape.is_row_end(c) && !shape.is_row_end(d) {
                    return fail("end-of-row does not propagate north-west");
                }
                if above(c) && !above(d) {
                    return fail("cell-above does not propagate north-west");
                }
            }
            if d.row <= c.row && d.col >= c.col {
                if shape.is_column_top(c) && !shape.is_column_top(d) {
                    return fail("top-of-column does not propagate south-east");
                }
                if right(c) && !right(d) {
                    return fail("cell-to-the-right does not propagate south-east");
                }
            }
        }
    }
    Ok(())
}

/// No residue has both an addable and a removable corner.
pub fn check_corner_residues(core: &Core) -> Result<()> {
    let k = core.k();
    let add: BTreeSet<usize> = core.shape().addable_corners().iter().map(|c| c.residue(k)).collect();
    for c in core.shape().removable_corners() {
        if add.contains(&c.residue(k)) {
            return Err(Error::Invariant(format!(
                "core ({}) has addable and removable corners of residue {}",
                core.shape(),
                c.residue(k)
            )));
        }
    }
    Ok(())
}
