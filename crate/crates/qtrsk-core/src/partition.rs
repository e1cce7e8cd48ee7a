//! Integer partitions and Young-diagram geometry.
//!
//! Cells use Cartesian (French) coordinates: `(x, y)` is the `x`-th cell of
//! the `y`-th row counted from the bottom, both starting at 1.  The layer
//! provides conjugation, horizontal/vertical strips, arms/legs/hooks, the two
//! (q,t)-hook lengths and their ratio, row/column cell sets of skew shapes,
//! removable and addable corners of a compatible pair, and the corner-subset
//! set enumerators used by the growth rules.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use alloc::collections::BTreeSet;

use crate::algebra::QTFactored;
use crate::{Error, Result};

/// A cell of a Young diagram in Cartesian coordinates (column `x`, row `y`,
/// both 1-based, rows counted from the bottom).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    /// Column index, `x ≥ 1`.
    pub x: u32,
    /// Row index from the bottom, `y ≥ 1`.
    pub y: u32,
}

impl Cell {
    /// Creates a cell; both coordinates must be positive.
    pub fn new(x: u32, y: u32) -> Result<Cell> {
        if x == 0 || y == 0 {
            return Err(Error::ParameterOutOfRange);
        }
        Ok(Cell { x, y })
    }
}

impl Ord for Cell {
    /// Bottom-to-top, then left-to-right: order by row, then column.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// An integer partition: a weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Ord for Partition {
    /// Total order: number of parts first, then parts lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts
            .len()
            .cmp(&other.parts.len())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Partition {
    /// The empty partition ∅.
    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts; trailing zeros are stripped and the
    /// sequence must be weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid("parts must be weakly decreasing".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Invalid("interior zero part".into()));
        }
        Ok(Partition { parts })
    }

    /// Convenience constructor from a slice; panics on invalid input, so it is
    /// intended for literals in tests and examples.
    pub fn of(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).expect("valid partition literal")
    }

    /// The parts as a slice.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Whether this is the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells `|λ|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// The `y`-th part (1-based); 0 beyond the last row.
    pub fn part(&self, y: u32) -> u32 {
        if y == 0 || y as usize > self.parts.len() {
            0
        } else {
            self.parts[y as usize - 1]
        }
    }

    /// Whether the cell lies in the diagram.
    pub fn contains_cell(&self, c: Cell) -> bool {
        c.x >= 1 && c.y >= 1 && c.x <= self.part(c.y)
    }

    /// Whether `self ⊆ other` as diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i as u32 + 1) >= p)
    }

    /// The conjugate partition λ′ with `λ′_x = #{y : λ_y ≥ x}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|x| self.parts.iter().filter(|&&p| p >= x).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Cell-wise union `λ ∪ ρ` (row-wise maximum).
    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len()) as u32;
        let parts = (1..=n)
            .map(|y| self.part(y).max(other.part(y)))
            .collect();
        Partition { parts }
    }

    /// Cell-wise intersection `λ ∩ ρ` (row-wise minimum).
    pub fn intersect(&self, other: &Partition) -> Partition {
        let n = self.len().min(other.len()) as u32;
        let mut parts: Vec<u32> = (1..=n)
            .map(|y| self.part(y).min(other.part(y)))
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// All cells of the diagram, bottom-to-top then left-to-right.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            for x in 1..=p {
                out.push(Cell { x, y: i as u32 + 1 });
            }
        }
        out
    }

    /// Inner corners: cells whose removal leaves a partition, bottom-to-top.
    pub fn inner_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for y in 1..=self.parts.len() as u32 {
            if self.part(y) > self.part(y + 1) {
                out.push(Cell { x: self.part(y), y });
            }
        }
        out
    }

    /// Outer corners: positions where a cell can be added, bottom-to-top.
    pub fn outer_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for y in 1..=self.parts.len() as u32 + 1 {
            let above_ok = y == 1 || self.part(y - 1) > self.part(y);
            if above_ok {
                out.push(Cell { x: self.part(y) + 1, y });
            }
        }
        out
    }

    /// Removes an inner corner, returning the smaller partition.
    pub fn remove_corner(&self, c: Cell) -> Result<Partition> {
        if self.part(c.y) != c.x || self.part(c.y + 1) >= c.x {
            return Err(Error::CellOutsideShape);
        }
        let mut parts = self.parts.clone();
        parts[c.y as usize - 1] -= 1;
        Partition::new(parts)
    }

    /// Adds a cell at an outer corner, returning the larger partition.
    pub fn add_corner(&self, c: Cell) -> Result<Partition> {
        if self.part(c.y) + 1 != c.x || (c.y > 1 && self.part(c.y - 1) < c.x) {
            return Err(Error::CellOutsideShape);
        }
        let mut parts = self.parts.clone();
        if c.y as usize > parts.len() {
            parts.push(1);
        } else {
            parts[c.y as usize - 1] += 1;
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        Ok(())
    }
}

/// The row and column cell sets of a skew shape inside the outer partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewCellSets {
    /// Cells of the outer shape sharing a row with a skew cell.
    pub r_cells: BTreeSet<Cell>,
    /// Cells of the outer shape sharing a column with a skew cell.
    pub c_cells: BTreeSet<Cell>,
}

/// True iff `μ ⊆ λ` and `λ/μ` has at most one cell per column.
pub fn is_horizontal_strip(mu: &Partition, la: &Partition) -> bool {
    if !la.contains(mu) {
        return false;
    }
    // One cell per column ⇔ the parts interlace: λ_{y+1} ≤ μ_y for all y.
    (1..=la.len() as u32).all(|y| la.part(y + 1) <= mu.part(y))
}

/// True iff `μ ⊆ λ` and `λ/μ` has at most one cell per row.
pub fn is_vertical_strip(mu: &Partition, la: &Partition) -> bool {
    if !la.contains(mu) {
        return false;
    }
    (1..=la.len() as u32).all(|y| la.part(y) <= mu.part(y) + 1)
}

/// Arm length `a_λ(c) = λ_y − x`.
pub fn arm(la: &Partition, c: Cell) -> Result<u32> {
    if !la.contains_cell(c) {
        return Err(Error::CellOutsideShape);
    }
    Ok(la.part(c.y) - c.x)
}

/// Leg length `ℓ_λ(c) = λ′_x − y`.
pub fn leg(la: &Partition, c: Cell) -> Result<u32> {
    if !la.contains_cell(c) {
        return Err(Error::CellOutsideShape);
    }
    let col_height = la.parts.iter().filter(|&&p| p >= c.x).count() as u32;
    Ok(col_height - c.y)
}

/// Hook length `a + ℓ + 1`.
pub fn hook(la: &Partition, c: Cell) -> Result<u32> {
    Ok(arm(la, c)? + leg(la, c)? + 1)
}

/// Lower (q,t)-hook length `1 − q^a t^{ℓ+1}`; the value is 1 for cells
/// outside the shape.
pub fn hook_lower(la: &Partition, c: Cell) -> QTFactored {
    if !la.contains_cell(c) {
        return QTFactored::one();
    }
    let a = arm(la, c).expect("cell inside shape");
    let l = leg(la, c).expect("cell inside shape");
    QTFactored::binomial(a, l + 1)
}

/// Upper (q,t)-hook length `1 − q^{a+1} t^ℓ`; the value is 1 for cells
/// outside the shape.
pub fn hook_upper(la: &Partition, c: Cell) -> QTFactored {
    if !la.contains_cell(c) {
        return QTFactored::one();
    }
    let a = arm(la, c).expect("cell inside shape");
    let l = leg(la, c).expect("cell inside shape");
    QTFactored::binomial(a + 1, l)
}

/// The cell weight `b_λ(c)`: the ratio of the lower and the upper
/// (q,t)-hook lengths; 1 for cells outside the shape.
pub fn b_ratio(la: &Partition, c: Cell) -> QTFactored {
    hook_lower(la, c)
        .div(&hook_upper(la, c))
        .expect("hook lengths are nonzero")
}

/// Cells of `λ` sharing a row (`r_cells`) or a column (`c_cells`) with a
/// cell of the skew shape `λ/μ`.
pub fn skew_cell_sets(la: &Partition, mu: &Partition) -> Result<SkewCellSets> {
    if !la.contains(mu) {
        return Err(Error::NotContained);
    }
    let mut rows = BTreeSet::new();
    let mut cols = BTreeSet::new();
    for y in 1..=la.len() as u32 {
        for x in mu.part(y) + 1..=la.part(y) {
            rows.insert(y);
            cols.insert(x);
        }
    }
    let mut r_cells = BTreeSet::new();
    let mut c_cells = BTreeSet::new();
    for c in la.cells() {
        if rows.contains(&c.y) {
            r_cells.insert(c);
        }
        if cols.contains(&c.x) {
            c_cells.insert(c);
        }
    }
    Ok(SkewCellSets { r_cells, c_cells })
}

/// Whether `(λ,ρ)` is a compatible pair: `λ/(λ∩ρ)` is a horizontal strip and
/// `ρ/(λ∩ρ)` is a vertical strip.
pub fn is_compatible_pair(la: &Partition, rho: &Partition) -> bool {
    let meet = la.intersect(rho);
    is_horizontal_strip(&meet, la) && is_vertical_strip(&meet, rho)
}

/// Inner corners `c` of `λ∩ρ` such that removing `c` keeps `λ/μ` a
/// horizontal strip and `ρ/μ` a vertical strip; bottom-to-top (indices 1..d).
pub fn removable_inner_corners(la: &Partition, rho: &Partition) -> Result<Vec<Cell>> {
    if !is_compatible_pair(la, rho) {
        return Err(Error::IncompatiblePair);
    }
    let meet = la.intersect(rho);
    let mut out = Vec::new();
    for c in meet.inner_corners() {
        let mu = meet.remove_corner(c)?;
        if is_horizontal_strip(&mu, la) && is_vertical_strip(&mu, rho) {
            out.push(c);
        }
    }
    Ok(out)
}

/// Outer corners `c` of `λ∪ρ` such that adding `c` keeps `ν/λ` a vertical
/// strip and `ν/ρ` a horizontal strip; bottom-to-top (indices 0..d).
pub fn addable_outer_corners(la: &Partition, rho: &Partition) -> Result<Vec<Cell>> {
    if !is_compatible_pair(la, rho) {
        return Err(Error::IncompatiblePair);
    }
    let join = la.union(rho);
    let mut out = Vec::new();
    for c in join.outer_corners() {
        let nu = join.add_corner(c)?;
        if is_vertical_strip(la, &nu) && is_horizontal_strip(rho, &nu) {
            out.push(c);
        }
    }
    Ok(out)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Removes the given inner corners (a subset of the removable corners of
/// `λ∩ρ`) simultaneously.
pub fn remove_corners(base: &Partition, cells: &[Cell]) -> Result<Partition> {
    let mut parts = base.parts.to_vec();
    for c in cells {
        if base.part(c.y) != c.x {
            return Err(Error::CellOutsideShape);
        }
        parts[c.y as usize - 1] -= 1;
    }
    Partition::new(parts)
}

/// Adds the given outer corners simultaneously.
pub fn add_corners(base: &Partition, cells: &[Cell]) -> Result<Partition> {
    let mut parts = base.parts.to_vec();
    for c in cells {
        if base.part(c.y) + 1 != c.x {
            return Err(Error::CellOutsideShape);
        }
        if c.y as usize > parts.len() {
            parts.resize(c.y as usize, 0);
        }
        parts[c.y as usize - 1] += 1;
    }
    Partition::new(parts)
}

/// All `μ` obtained by removing a `k`-subset of the removable corners from
/// `λ∩ρ`, in increasing partition order.
pub fn d_k(la: &Partition, rho: &Partition, k: usize) -> Result<Vec<Partition>> {
    let corners = removable_inner_corners(la, rho)?;
    let meet = la.intersect(rho);
    let mut out = Vec::new();
    if k <= corners.len() {
        for idx in subsets_of_size(corners.len(), k) {
            let chosen: Vec<Cell> = idx.iter().map(|&i| corners[i]).collect();
            out.push(remove_corners(&meet, &chosen)?);
        }
    }
    out.sort();
    Ok(out)
}

/// All `ν` obtained by adding a `k`-subset of the addable corners to `λ∪ρ`,
/// in increasing partition order.
pub fn u_k(la: &Partition, rho: &Partition, k: usize) -> Result<Vec<Partition>> {
    let corners = addable_outer_corners(la, rho)?;
    let join = la.union(rho);
    let mut out = Vec::new();
    if k <= corners.len() {
        for idx in subsets_of_size(corners.len(), k) {
            let chosen: Vec<Cell> = idx.iter().map(|&i| corners[i]).collect();
            out.push(add_corners(&join, &chosen)?);
        }
    }
    out.sort();
    Ok(out)
}

/// All partitions obtained from `λ` by removing a horizontal strip of the
/// given size, in increasing order.
pub fn horizontal_strip_removals(la: &Partition, size: u64) -> Vec<Partition> {
    // μ interlaces with λ: λ_{y+1} ≤ μ_y ≤ λ_y.
    let mut out = Vec::new();
    let n = la.len() as u32;
    let mut cur: Vec<u32> = Vec::new();
    fn rec(
        la: &Partition,
        n: u32,
        y: u32,
        remaining: i64,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if y > n {
            if remaining == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing parts"));
            }
            return;
        }
        let lo = la.part(y + 1);
        let hi = la.part(y);
        for m in lo..=hi {
            let removed = (hi - m) as i64;
            if removed <= remaining {
                cur.push(m);
                rec(la, n, y + 1, remaining - removed, cur, out);
                cur.pop();
            }
        }
    }
    rec(la, n, 1, size as i64, &mut cur, &mut out);
    out.sort();
    out
}

/// All partitions obtained from `λ` by adding a horizontal strip of the
/// given size, in increasing order.
pub fn horizontal_strip_additions(la: &Partition, size: u64) -> Vec<Partition> {
    // ν interlaces with λ: λ_y ≤ ν_y ≤ λ_{y-1}; the first row is unbounded.
    let mut out = Vec::new();
    let n = la.len() as u32 + 1;
    let mut cur: Vec<u32> = Vec::new();
    fn rec(
        la: &Partition,
        n: u32,
        y: u32,
        remaining: i64,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if y > n {
            if remaining == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing parts"));
            }
            return;
        }
        let lo = la.part(y);
        let hi = if y == 1 {
            la.part(1) + remaining.max(0) as u32
        } else {
            la.part(y - 1)
        };
        for m in lo..=hi {
            let added = (m - lo) as i64;
            if added <= remaining {
                cur.push(m);
                rec(la, n, y + 1, remaining - added, cur, out);
                cur.pop();
            }
        }
    }
    rec(la, n, 1, size as i64, &mut cur, &mut out);
    out.sort();
    out
}

/// All partitions obtained from `λ` by removing a vertical strip of the
/// given size, in increasing order.
pub fn vertical_strip_removals(la: &Partition, size: u64) -> Vec<Partition> {
    let mut out: Vec<Partition> = horizontal_strip_removals(&la.conjugate(), size)
        .into_iter()
        .map(|p| p.conjugate())
        .collect();
    out.sort();
    out
}

/// All partitions obtained from `λ` by adding a vertical strip of the given
/// size, in increasing order.
pub fn vertical_strip_additions(la: &Partition, size: u64) -> Vec<Partition> {
    let mut out: Vec<Partition> = horizontal_strip_additions(&la.conjugate(), size)
        .into_iter()
        .map(|p| p.conjugate())
        .collect();
    out.sort();
    out
}

/// All `μ` such that both `λ/μ` and `ρ/μ` are horizontal strips of sizes
/// `k` and `l` respectively, in increasing order.
pub fn d_kl(la: &Partition, rho: &Partition, k: u64, l: u64) -> Vec<Partition> {
    let mut out: Vec<Partition> = horizontal_strip_removals(la, k)
        .into_iter()
        .filter(|mu| is_horizontal_strip(mu, rho) && rho.size() - mu.size() == l)
        .collect();
    out.sort();
    out
}

/// All `ν` such that both `ν/ρ` and `ν/λ` are horizontal strips of sizes
/// `k` and `l` respectively, in increasing order.
pub fn u_kl(la: &Partition, rho: &Partition, k: u64, l: u64) -> Vec<Partition> {
    let mut out: Vec<Partition> = horizontal_strip_additions(la, l)
        .into_iter()
        .filter(|nu| is_horizontal_strip(rho, nu) && nu.size() - rho.size() == k)
        .collect();
    out.sort();
    out
}

/// All partitions of exactly `n` cells, in increasing partition order.
pub fn partitions_of_size(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn rec(remaining: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(cur.clone()).expect("weakly decreasing by construction"));
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n.max(1), &mut cur, &mut out);
    out.sort();
    out
}

/// All partitions with at most `n` cells, in increasing partition order.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for m in 0..=n {
        out.extend(partitions_of_size(m));
    }
    out.sort();
    out
}
