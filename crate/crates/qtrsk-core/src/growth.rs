//! Dual growth diagrams over 0/1-matrices.
//!
//! A growth diagram for an `m × n` matrix with entries in `{0,1}` is an
//! `(m+1) × (n+1)` grid of partitions whose steps down are horizontal strips
//! and whose steps right are vertical strips, with the north-west boundary
//! empty and `|Λ_{i,j}|` equal to the number of ones weakly north-west of
//! position `(i,j)`.  Each unit square carries a local transition governed by
//! the corner-frame probabilities of [`crate::local`]; multiplying over the
//! squares gives the exact probability of a growth, and aggregating over
//! growths by their south-east boundary gives the exact outcome distribution
//! of the randomized correspondence between matrices and tableau pairs.
//!
//! The module provides enumeration of growths, forward and backward outcome
//! distributions in three value modes (exact `(q,t)`, Jack parameter `α`, and
//! numeric at a fixed rational point), the classical deterministic
//! correspondences as degenerate local rules, randomized and deterministic
//! insertion of values into a tableau, single-value word insertion, growths
//! with non-empty north-west boundary, commutation identities for the
//! branching weights, two-square configuration distributions used in the
//! α-limit analysis, and a seeded exact-threshold sampler.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{
    qt_sum_equals, AlphaRational, LaurentPoly2, LimitDirection, MonomialQT, QTFactored, QTSum, Rat,
};
use crate::local::{
    backward_prob, corner_frame, f_col, f_row, forward_prob, mu_of, nu_of, rset_of, sset_of,
    Direction, SubsetPair,
};
use crate::partition::{d_kl, is_horizontal_strip, is_vertical_strip, u_kl, Cell, Partition};
use crate::weights::{phi, phi_star, psi, tableau_weight, Tableau, TableauFlavor, WeightKind};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// 0/1-matrices
// ---------------------------------------------------------------------------

/// An `m × n` matrix with entries in `{0,1}`; `m = 0` or `n = 0` are allowed
/// as degenerate cases.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matrix01 {
    rows: Vec<Vec<u8>>,
    cols: usize,
}

impl Matrix01 {
    /// Builds a matrix from its rows; all rows must have equal length and
    /// entries in `{0,1}`.
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Matrix01> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        for row in &rows {
            if row.len() != cols {
                return Err(Error::Invalid("rows have unequal lengths".into()));
            }
            if row.iter().any(|&e| e > 1) {
                return Err(Error::Invalid("matrix entries must be 0 or 1".into()));
            }
        }
        Ok(Matrix01 { rows, cols })
    }

    /// The `m × n` zero matrix.
    pub fn zero(m: usize, n: usize) -> Matrix01 {
        Matrix01 {
            rows: vec![vec![0u8; n]; m],
            cols: n,
        }
    }

    /// Number of rows.
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns.
    pub fn n(&self) -> usize {
        self.cols
    }

    /// Entry at 0-based position `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.rows[i][j]
    }

    /// Total number of ones.
    pub fn ones(&self) -> u64 {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&e| e as u64).sum::<u64>())
            .sum()
    }

    /// Row sums, top to bottom.
    pub fn row_sums(&self) -> Vec<u64> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&e| e as u64).sum())
            .collect()
    }

    /// Column sums, left to right.
    pub fn col_sums(&self) -> Vec<u64> {
        (0..self.cols)
            .map(|j| self.rows.iter().map(|r| r[j] as u64).sum())
            .collect()
    }

    /// The transposed matrix.
    pub fn transpose(&self) -> Matrix01 {
        let rows = (0..self.cols)
            .map(|j| self.rows.iter().map(|r| r[j]).collect())
            .collect();
        Matrix01 {
            rows,
            cols: self.rows.len(),
        }
    }

    /// The matrix with 0-based columns `k` and `k+1` exchanged.
    pub fn swap_adjacent_columns(&self, k: usize) -> Result<Matrix01> {
        if k + 1 >= self.cols {
            return Err(Error::ParameterOutOfRange);
        }
        let mut out = self.clone();
        for row in &mut out.rows {
            row.swap(k, k + 1);
        }
        Ok(out)
    }

    /// True iff every column contains at most one entry equal to 1.
    pub fn at_most_one_per_column(&self) -> bool {
        self.col_sums().iter().all(|&s| s <= 1)
    }
}

impl FromStr for Matrix01 {
    type Err = Error;

    /// Parses the text form `110;001` (rows of 0/1 characters joined by `;`).
    fn from_str(s: &str) -> Result<Matrix01> {
        if s.is_empty() {
            return Ok(Matrix01::zero(0, 0));
        }
        let mut rows = Vec::new();
        for part in s.split(';') {
            let mut row = Vec::with_capacity(part.len());
            for ch in part.chars() {
                match ch {
                    '0' => row.push(0u8),
                    '1' => row.push(1u8),
                    _ => {
                        return Err(Error::Invalid("matrix entries must be 0 or 1".into()));
                    }
                }
            }
            rows.push(row);
        }
        Matrix01::new(rows)
    }
}

impl fmt::Display for Matrix01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for &e in row {
                write!(f, "{}", e)?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Growth grids
// ---------------------------------------------------------------------------

/// A filled `(m+1) × (n+1)` growth grid together with its source matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DualGrowth {
    grid: Vec<Vec<Partition>>,
    source: Matrix01,
}

impl DualGrowth {
    /// Builds a growth from a grid, validating the strip discipline, the
    /// empty north-west boundary, and the weakly-north-west count invariant.
    pub fn new(grid: Vec<Vec<Partition>>, source: Matrix01) -> Result<DualGrowth> {
        let m = source.m();
        let n = source.n();
        if grid.len() != m + 1 || grid.iter().any(|row| row.len() != n + 1) {
            return Err(Error::BoundaryMismatch);
        }
        for i in 0..=m {
            for j in 0..=n {
                if i > 0 && !is_horizontal_strip(&grid[i - 1][j], &grid[i][j]) {
                    return Err(Error::NotHorizontalStrip);
                }
                if j > 0 && !is_vertical_strip(&grid[i][j - 1], &grid[i][j]) {
                    return Err(Error::NotVerticalStrip);
                }
                let mut count = 0u64;
                for a in 0..i {
                    for b in 0..j {
                        count += source.entry(a, b) as u64;
                    }
                }
                if grid[i][j].size() != count {
                    return Err(Error::Invalid(
                        "grid sizes do not match the north-west counts".into(),
                    ));
                }
            }
        }
        Ok(DualGrowth { grid, source })
    }

    /// The grid of partitions, row by row.
    pub fn grid(&self) -> &[Vec<Partition>] {
        &self.grid
    }

    /// The source matrix.
    pub fn source(&self) -> &Matrix01 {
        &self.source
    }

    /// The right-edge chain, top to bottom (a chain of horizontal strips).
    pub fn p_chain(&self) -> Vec<Partition> {
        let n = self.source.n();
        self.grid.iter().map(|row| row[n].clone()).collect()
    }

    /// The bottom-edge chain, left to right (a chain of vertical strips).
    pub fn q_chain(&self) -> Vec<Partition> {
        self.grid[self.source.m()].clone()
    }

    /// The insertion tableau read off the right edge.
    pub fn p_tableau(&self) -> Result<Tableau> {
        Tableau::from_chain(self.p_chain(), TableauFlavor::Ssyt)
    }

    /// The recording tableau read off the bottom edge.
    pub fn q_tableau(&self) -> Result<Tableau> {
        Tableau::from_chain(self.q_chain(), TableauFlavor::DualSsyt)
    }
}

fn subsets_of_size(universe: &[usize], k: usize) -> Vec<BTreeSet<usize>> {
    fn rec(
        u: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<BTreeSet<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.iter().copied().collect());
            return;
        }
        for i in start..u.len() {
            if u.len() - i < k - cur.len() {
                break;
            }
            cur.push(u[i]);
            rec(u, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(universe, k, 0, &mut Vec::new(), &mut out);
    out
}

/// All outcomes `ν` of a single growth square with north-west corner `μ`,
/// south-west corner `λ`, north-east corner `ρ`, and matrix entry `a`, each
/// with its exact forward transition probability, ordered by the total order
/// on partitions.
pub fn forward_branches(
    mu: &Partition,
    la: &Partition,
    rho: &Partition,
    a: u8,
) -> Result<Vec<(Partition, QTFactored)>> {
    let f = corner_frame(la, rho)?;
    let r = rset_of(&f, mu)?;
    let d = f.d();
    let universe: Vec<usize> = (0..=d).collect();
    let mut out = Vec::new();
    for sset in subsets_of_size(&universe, r.len() + a as usize) {
        let nu = nu_of(&f, &sset)?;
        let pair = SubsetPair::new(&f, r.clone(), sset)?;
        out.push((nu, forward_prob(&f, &pair)?));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// All antecedents `(μ, a)` of a single growth square with south-west corner
/// `λ`, north-east corner `ρ`, and south-east corner `ν`, each with its exact
/// backward transition probability, ordered by `μ`.  The combined
/// probabilities over both admissible subset sizes sum to 1.
pub fn backward_branches(
    la: &Partition,
    rho: &Partition,
    nu: &Partition,
) -> Result<Vec<(Partition, u8, QTFactored)>> {
    let f = corner_frame(la, rho)?;
    let s = sset_of(&f, nu)?;
    let d = f.d();
    let universe: Vec<usize> = (1..=d).collect();
    let mut sizes: Vec<usize> = Vec::new();
    if s.len() <= d {
        sizes.push(s.len());
    }
    if s.len() >= 1 && s.len() - 1 <= d {
        sizes.push(s.len() - 1);
    }
    let mut out = Vec::new();
    for rsize in sizes {
        for rset in subsets_of_size(&universe, rsize) {
            let mu = mu_of(&f, &rset)?;
            let a = (s.len() - rset.len()) as u8;
            let pair = SubsetPair::new(&f, rset, s.clone())?;
            out.push((mu, a, backward_prob(&f, &pair)?));
        }
    }
    out.sort_by(|x, y| (&x.0, x.1).cmp(&(&y.0, y.1)));
    Ok(out)
}

fn fill_forward(
    a: &Matrix01,
    grid: &mut Vec<Vec<Partition>>,
    idx: usize,
    acc: &QTFactored,
    out: &mut Vec<(Vec<Vec<Partition>>, QTFactored)>,
) -> Result<()> {
    let (m, n) = (a.m(), a.n());
    if idx == m * n {
        out.push((grid.clone(), acc.clone()));
        return Ok(());
    }
    let i = idx / n + 1;
    let j = idx % n + 1;
    let branches = forward_branches(
        &grid[i - 1][j - 1],
        &grid[i][j - 1],
        &grid[i - 1][j],
        a.entry(i - 1, j - 1),
    )?;
    for (nu, p) in branches {
        grid[i][j] = nu;
        let next = acc.mul(&p);
        fill_forward(a, grid, idx + 1, &next, out)?;
    }
    Ok(())
}

/// All growths for `A` with their exact forward probabilities, in the
/// deterministic reading-order enumeration.
pub fn forward_growth_terms(a: &Matrix01) -> Result<Vec<(DualGrowth, QTFactored)>> {
    let mut grid = vec![vec![Partition::empty(); a.n() + 1]; a.m() + 1];
    let mut raw = Vec::new();
    fill_forward(a, &mut grid, 0, &QTFactored::one(), &mut raw)?;
    Ok(raw
        .into_iter()
        .map(|(grid, p)| {
            (
                DualGrowth {
                    grid,
                    source: a.clone(),
                },
                p,
            )
        })
        .collect())
}

/// All growths for `A`, generated square by square in reading order from the
/// empty north-west boundary, branching over the square outcomes in
/// increasing partition order.
pub fn enumerate_growths(a: &Matrix01) -> Result<Vec<DualGrowth>> {
    Ok(forward_growth_terms(a)?.into_iter().map(|(g, _)| g).collect())
}

/// The exact probability of a single growth: the product over its unit
/// squares of the forward (resp. backward) local transition probability.
pub fn growth_prob(g: &DualGrowth, direction: Direction) -> Result<QTFactored> {
    let m = g.source.m();
    let n = g.source.n();
    let mut acc = QTFactored::one();
    for i in 1..=m {
        for j in 1..=n {
            let f = corner_frame(&g.grid[i][j - 1], &g.grid[i - 1][j])?;
            let rset = rset_of(&f, &g.grid[i - 1][j - 1])?;
            let sset = sset_of(&f, &g.grid[i][j])?;
            let pair = SubsetPair::new(&f, rset, sset)?;
            let p = match direction {
                Direction::Forward => forward_prob(&f, &pair)?,
                Direction::Backward => backward_prob(&f, &pair)?,
            };
            acc = acc.mul(&p);
        }
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Distributions
// ---------------------------------------------------------------------------

/// How the values of a [`Distribution`] are represented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValueMode {
    /// Exact expanded numerator/denominator pairs in `(q,t)`.
    QtExact,
    /// Exact rational functions in the Jack parameter `α` (termwise limit of
    /// each growth contribution).
    Alpha,
    /// Exact rationals at a fixed rational point `(q0, t0)`.
    Numeric {
        /// Value substituted for `q`.
        q0: Rat,
        /// Value substituted for `t`.
        t0: Rat,
    },
}

/// A single outcome value in the mode of its distribution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistValue {
    /// Exact `(q,t)` value as an expanded numerator/denominator pair.
    Qt(QTSum),
    /// Exact value in the Jack parameter.
    Alpha(AlphaRational),
    /// Exact rational value at a fixed point.
    Numeric(Rat),
}

/// An exact probability distribution over outcomes of type `K`; the values
/// are checked to sum to 1 in the chosen mode on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution<K: Ord + Clone> {
    mode: ValueMode,
    support: BTreeMap<K, DistValue>,
}

fn not_normalized() -> Error {
    Error::Invalid("outcome values do not sum to 1".into())
}

/// Evaluates a factored value at a rational point, taking the `t → 0` and
/// then `q → 0` limits first for zero coordinates so that values that are
/// finite at the boundary evaluate exactly.
pub fn eval_at(x: &QTFactored, q0: &Rat, t0: &Rat) -> Result<Rat> {
    let mut v = x.clone();
    if t0.is_zero() {
        v = v.limit(LimitDirection::TToZero)?;
    }
    if q0.is_zero() {
        v = v.limit(LimitDirection::QToZero)?;
    }
    v.eval(q0, t0)
}

impl<K: Ord + Clone> Distribution<K> {
    /// Aggregates weighted outcome terms into a distribution, converting each
    /// term to the chosen mode and verifying that the total is exactly 1.
    pub fn from_terms(mode: &ValueMode, terms: Vec<(K, QTFactored)>) -> Result<Distribution<K>> {
        let mut grouped: BTreeMap<K, Vec<QTFactored>> = BTreeMap::new();
        let mut all: Vec<QTFactored> = Vec::new();
        for (k, v) in terms {
            all.push(v.clone());
            grouped.entry(k).or_default().push(v);
        }
        let support = match mode {
            ValueMode::QtExact => {
                if !qt_sum_equals(&all, &QTFactored::one()) {
                    return Err(not_normalized());
                }
                grouped
                    .into_iter()
                    .map(|(k, vs)| (k, DistValue::Qt(QTSum::from_terms(&vs))))
                    .collect()
            }
            ValueMode::Alpha => {
                let mut total = AlphaRational::zero();
                let mut support = BTreeMap::new();
                for (k, vs) in grouped {
                    let mut s = AlphaRational::zero();
                    for v in vs {
                        s = s.add(&v.jack_limit()?);
                    }
                    total = total.add(&s);
                    support.insert(k, DistValue::Alpha(s));
                }
                if !total.is_one() {
                    return Err(not_normalized());
                }
                support
            }
            ValueMode::Numeric { q0, t0 } => {
                let mut total = Rat::zero();
                let mut support = BTreeMap::new();
                for (k, vs) in grouped {
                    let mut s = Rat::zero();
                    for v in vs {
                        s += eval_at(&v, q0, t0)?;
                    }
                    total += &s;
                    support.insert(k, DistValue::Numeric(s));
                }
                if !total.is_one() {
                    return Err(not_normalized());
                }
                support
            }
        };
        Ok(Distribution {
            mode: mode.clone(),
            support,
        })
    }

    /// The value mode.
    pub fn mode(&self) -> &ValueMode {
        &self.mode
    }

    /// The outcome-to-value map.
    pub fn support(&self) -> &BTreeMap<K, DistValue> {
        &self.support
    }

    /// Number of outcomes in the support.
    pub fn len(&self) -> usize {
        self.support.len()
    }

    /// True iff the support is empty.
    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// The stored value for an outcome, if present.
    pub fn get(&self, k: &K) -> Option<&DistValue> {
        self.support.get(k)
    }

    /// The exact `(q,t)` value of an outcome, zero if absent; errors if the
    /// distribution is in a different mode.
    pub fn qt_value(&self, k: &K) -> Result<QTSum> {
        match (self.support.get(k), &self.mode) {
            (Some(DistValue::Qt(v)), _) => Ok(v.clone()),
            (None, ValueMode::QtExact) => Ok(QTSum::zero()),
            _ => Err(Error::Invalid("distribution is not in exact (q,t) mode".into())),
        }
    }

    /// The α-mode value of an outcome, zero if absent; errors if the
    /// distribution is in a different mode.
    pub fn alpha_value(&self, k: &K) -> Result<AlphaRational> {
        match (self.support.get(k), &self.mode) {
            (Some(DistValue::Alpha(v)), _) => Ok(v.clone()),
            (None, ValueMode::Alpha) => Ok(AlphaRational::zero()),
            _ => Err(Error::Invalid("distribution is not in α mode".into())),
        }
    }

    /// The numeric value of an outcome, zero if absent; errors if the
    /// distribution is in a different mode.
    pub fn numeric_value(&self, k: &K) -> Result<Rat> {
        match (self.support.get(k), &self.mode) {
            (Some(DistValue::Numeric(v)), _) => Ok(v.clone()),
            (None, ValueMode::Numeric { .. }) => Ok(Rat::zero()),
            _ => Err(Error::Invalid("distribution is not in numeric mode".into())),
        }
    }
}

/// The exact outcome distribution over boundary tableau pairs `(P, Q)` of the
/// randomized correspondence applied to `A`.
pub fn forward_distribution(
    a: &Matrix01,
    mode: &ValueMode,
) -> Result<Distribution<(Tableau, Tableau)>> {
    let mut terms = Vec::new();
    for (g, p) in forward_growth_terms(a)? {
        terms.push(((g.p_tableau()?, g.q_tableau()?), p));
    }
    Distribution::from_terms(mode, terms)
}

/// The marginal distribution of the insertion tableau `P` alone.
pub fn p_marginal(a: &Matrix01, mode: &ValueMode) -> Result<Distribution<Tableau>> {
    let mut terms = Vec::new();
    for (g, p) in forward_growth_terms(a)? {
        terms.push((g.p_tableau()?, p));
    }
    Distribution::from_terms(mode, terms)
}

/// All growths with right edge `P` and bottom edge `Q`, with their exact
/// backward probabilities; the source matrix of each growth is recovered from
/// the backward square antecedents.
pub fn backward_growth_terms(p: &Tableau, q: &Tableau) -> Result<Vec<(DualGrowth, QTFactored)>> {
    if p.flavor() != TableauFlavor::Ssyt || q.flavor() != TableauFlavor::DualSsyt {
        return Err(Error::Invalid(
            "backward boundary needs an ssyt first component and a dual ssyt second component"
                .into(),
        ));
    }
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    let m = p.steps() as usize;
    let n = q.steps() as usize;
    let mut grid = vec![vec![Partition::empty(); n + 1]; m + 1];
    for (i, part) in p.chain().iter().enumerate() {
        grid[i][n] = part.clone();
    }
    for (j, part) in q.chain().iter().enumerate() {
        grid[m][j] = part.clone();
    }
    let mut entries = vec![vec![0u8; n]; m];
    let mut out = Vec::new();
    fn rec(
        m: usize,
        n: usize,
        grid: &mut Vec<Vec<Partition>>,
        entries: &mut Vec<Vec<u8>>,
        idx: usize,
        acc: &QTFactored,
        out: &mut Vec<(DualGrowth, QTFactored)>,
    ) -> Result<()> {
        if idx == m * n {
            debug_assert!(grid[0].iter().all(|p| p.is_empty()));
            debug_assert!(grid.iter().all(|row| row[0].is_empty()));
            let source = Matrix01::new(entries.clone())?;
            out.push((
                DualGrowth {
                    grid: grid.clone(),
                    source,
                },
                acc.clone(),
            ));
            return Ok(());
        }
        let i = m - idx / n;
        let j = n - idx % n;
        let branches = backward_branches(&grid[i][j - 1], &grid[i - 1][j], &grid[i][j])?;
        for (mu, a, p) in branches {
            grid[i - 1][j - 1] = mu;
            entries[i - 1][j - 1] = a;
            let next = acc.mul(&p);
            rec(m, n, grid, entries, idx + 1, &next, out)?;
        }
        Ok(())
    }
    rec(m, n, &mut grid, &mut entries, 0, &QTFactored::one(), &mut out)?;
    Ok(out)
}

/// The exact backward distribution over source matrices given boundary
/// tableaux `(P, Q)` of equal shape.
pub fn backward_distribution(
    p: &Tableau,
    q: &Tableau,
    mode: &ValueMode,
) -> Result<Distribution<Matrix01>> {
    let mut terms = Vec::new();
    for (g, w) in backward_growth_terms(p, q)? {
        terms.push((g.source().clone(), w));
    }
    Distribution::from_terms(mode, terms)
}

/// Verifies the growth-level compatibility identity for a single growth: the
/// forward probability equals the backward probability times the boundary
/// weight `ψ_P φ*_Q`.
pub fn growth_compatibility_holds(g: &DualGrowth) -> Result<bool> {
    let fwd = growth_prob(g, Direction::Forward)?;
    let bwd = growth_prob(g, Direction::Backward)?;
    let w = tableau_weight(&g.p_tableau()?, WeightKind::Psi)?
        .mul(&tableau_weight(&g.q_tableau()?, WeightKind::PhiStar)?);
    Ok(fwd == bwd.mul(&w))
}

// ---------------------------------------------------------------------------
// Classical deterministic correspondences
// ---------------------------------------------------------------------------

/// Which deterministic degeneration of the local rules to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalVariant {
    /// Row-insertion variant (the `q,t → 0` degeneration).
    Row,
    /// Column-insertion variant (the `q,t → ∞` degeneration).
    Column,
}

/// The deterministic correspondence computed with the degenerate local rule
/// at every square of the growth grid.
pub fn classical_dual_rsk(a: &Matrix01, variant: ClassicalVariant) -> Result<(Tableau, Tableau)> {
    let m = a.m();
    let n = a.n();
    let mut grid = vec![vec![Partition::empty(); n + 1]; m + 1];
    for i in 1..=m {
        for j in 1..=n {
            let la = grid[i][j - 1].clone();
            let rho = grid[i - 1][j].clone();
            let mu = grid[i - 1][j - 1].clone();
            let f = corner_frame(&la, &rho)?;
            let k = rset_of(&f, &mu)?.len() + a.entry(i - 1, j - 1) as usize;
            grid[i][j] = match variant {
                ClassicalVariant::Row => f_row(&la, &rho, k, &mu)?,
                ClassicalVariant::Column => f_col(&la, &rho, k, &mu)?,
            };
        }
    }
    let g = DualGrowth {
        grid,
        source: a.clone(),
    };
    Ok((g.p_tableau()?, g.q_tableau()?))
}

// ---------------------------------------------------------------------------
// Insertion
// ---------------------------------------------------------------------------

/// Local rule used when inserting values into a tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InsertRule {
    /// Deterministic row-variant rule.
    FRow,
    /// Deterministic column-variant rule.
    FCol,
    /// The randomized `(q,t)` rule.
    Qt,
}

fn chain_at<'a>(t: &'a Tableau, i: usize) -> &'a Partition {
    let idx = core::cmp::min(i, t.chain().len() - 1);
    &t.chain()[idx]
}

/// The outcome terms of inserting a strictly increasing multiset of values
/// into an ssyt, one term per branch path of the appended growth column.
pub fn growth_insert_terms(
    t: &Tableau,
    values: &[u32],
    rule: InsertRule,
) -> Result<Vec<(Tableau, QTFactored)>> {
    if t.flavor() != TableauFlavor::Ssyt {
        return Err(Error::Invalid("insertion target must be an ssyt".into()));
    }
    if values.first().map_or(false, |&v| v == 0) || values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::ParameterOutOfRange);
    }
    let levels = core::cmp::max(t.steps(), values.last().copied().unwrap_or(0)) as usize;
    let vset: BTreeSet<u32> = values.iter().copied().collect();
    let mut hat: Vec<Partition> = vec![Partition::empty()];
    let mut out = Vec::new();
    fn rec(
        t: &Tableau,
        vset: &BTreeSet<u32>,
        rule: InsertRule,
        levels: usize,
        level: usize,
        hat: &mut Vec<Partition>,
        acc: &QTFactored,
        out: &mut Vec<(Tableau, QTFactored)>,
    ) -> Result<()> {
        if level > levels {
            out.push((
                Tableau::from_chain(hat.clone(), TableauFlavor::Ssyt)?,
                acc.clone(),
            ));
            return Ok(());
        }
        let la = chain_at(t, level).clone();
        let mu = chain_at(t, level - 1).clone();
        let rho = hat.last().expect("nonempty chain").clone();
        let a = vset.contains(&(level as u32)) as u8;
        match rule {
            InsertRule::Qt => {
                for (nu, p) in forward_branches(&mu, &la, &rho, a)? {
                    hat.push(nu);
                    let next = acc.mul(&p);
                    rec(t, vset, rule, levels, level + 1, hat, &next, out)?;
                    hat.pop();
                }
            }
            InsertRule::FRow | InsertRule::FCol => {
                let f = corner_frame(&la, &rho)?;
                let k = rset_of(&f, &mu)?.len() + a as usize;
                let nu = match rule {
                    InsertRule::FRow => f_row(&la, &rho, k, &mu)?,
                    _ => f_col(&la, &rho, k, &mu)?,
                };
                hat.push(nu);
                rec(t, vset, rule, levels, level + 1, hat, acc, out)?;
                hat.pop();
            }
        }
        Ok(())
    }
    rec(t, &vset, rule, levels, 1, &mut hat, &QTFactored::one(), &mut out)?;
    Ok(out)
}

/// Inserts a strictly increasing multiset of values into an ssyt; for the
/// deterministic rules the result is a point mass, for the `(q,t)` rule the
/// full exact outcome distribution.
pub fn growth_insert(
    t: &Tableau,
    values: &[u32],
    rule: InsertRule,
    mode: &ValueMode,
) -> Result<Distribution<Tableau>> {
    Distribution::from_terms(mode, growth_insert_terms(t, values, rule)?)
}

/// Deterministic insertion with one of the classical rules.
pub fn classical_insert(t: &Tableau, values: &[u32], rule: InsertRule) -> Result<Tableau> {
    if rule == InsertRule::Qt {
        return Err(Error::Invalid("classical insertion needs a deterministic rule".into()));
    }
    let mut terms = growth_insert_terms(t, values, rule)?;
    debug_assert_eq!(terms.len(), 1);
    Ok(terms.swap_remove(0).0)
}

fn single_new_cell(nu: &Partition, la: &Partition) -> Result<Cell> {
    let mut found = None;
    for y in 1..=nu.len() as u32 {
        if nu.part(y) != la.part(y) {
            if found.is_some() || nu.part(y) != la.part(y) + 1 {
                return Err(Error::Invalid("expected exactly one new cell".into()));
            }
            found = Some(Cell::new(nu.part(y), y)?);
        }
    }
    found.ok_or(Error::Invalid("expected exactly one new cell".into()))
}

/// The outcome terms of the word insertion of a single value into an ssyt:
/// the value is placed in a branching square at its own level and bumped
/// entries are reinserted at their levels until a placement leaves the
/// original shape.
pub fn qrst_word_insert_terms(t: &Tableau, value: u32) -> Result<Vec<(Tableau, QTFactored)>> {
    if t.flavor() != TableauFlavor::Ssyt {
        return Err(Error::Invalid("insertion target must be an ssyt".into()));
    }
    if value == 0 {
        return Err(Error::ParameterOutOfRange);
    }
    let levels = core::cmp::max(t.steps(), value) as usize;
    let start = value as usize;
    let mut hat: Vec<Partition> = (0..start).map(|j| chain_at(t, j).clone()).collect();
    let mut out = Vec::new();
    fn rec(
        t: &Tableau,
        levels: usize,
        level: usize,
        nu: &Partition,
        hat: &mut Vec<Partition>,
        acc: &QTFactored,
        out: &mut Vec<(Tableau, QTFactored)>,
    ) -> Result<()> {
        let c = single_new_cell(nu, chain_at(t, level))?;
        if !t.shape().contains_cell(c) {
            let mut full = hat.clone();
            for j in level + 1..=levels {
                full.push(chain_at(t, j).union(full.last().expect("nonempty")));
            }
            out.push((
                Tableau::from_chain(full, TableauFlavor::Ssyt)?,
                acc.clone(),
            ));
            return Ok(());
        }
        let mut z = level + 1;
        while !chain_at(t, z).contains_cell(c) {
            z += 1;
        }
        let base_len = hat.len();
        for j in level + 1..z {
            hat.push(chain_at(t, j).union(hat.last().expect("nonempty")));
        }
        let la = chain_at(t, z).clone();
        let mu = chain_at(t, z - 1).clone();
        let rho = mu.union(hat.last().expect("nonempty"));
        for (nu2, p) in forward_branches(&mu, &la, &rho, 0)? {
            hat.push(nu2.clone());
            let next = acc.mul(&p);
            rec(t, levels, z, &nu2, hat, &next, out)?;
            hat.pop();
        }
        hat.truncate(base_len);
        Ok(())
    }
    let la = chain_at(t, start).clone();
    let rho = chain_at(t, start - 1).clone();
    for (nu, p) in forward_branches(&rho, &la, &rho, 1)? {
        hat.push(nu.clone());
        rec(t, levels, start, &nu, &mut hat, &p, &mut out)?;
        hat.pop();
    }
    Ok(out)
}

/// The word insertion of a single value into an ssyt as a distribution.
pub fn qrst_word_insert(
    t: &Tableau,
    value: u32,
    mode: &ValueMode,
) -> Result<Distribution<Tableau>> {
    Distribution::from_terms(mode, qrst_word_insert_terms(t, value)?)
}

// ---------------------------------------------------------------------------
// Growths with non-empty north-west boundary
// ---------------------------------------------------------------------------

/// The exact outcome distribution over `(right edge, bottom edge)` chains of
/// the growth of `A` with prescribed left-column chain `p0` (horizontal
/// strips, top to bottom) and top-row chain `q0` (vertical strips, left to
/// right); the two chains must agree at the north-west corner.
pub fn skew_forward_distribution(
    a: &Matrix01,
    p0: &[Partition],
    q0: &[Partition],
    mode: &ValueMode,
) -> Result<Distribution<(Vec<Partition>, Vec<Partition>)>> {
    let m = a.m();
    let n = a.n();
    if p0.len() != m + 1 || q0.len() != n + 1 || p0[0] != q0[0] {
        return Err(Error::BoundaryMismatch);
    }
    if p0.windows(2).any(|w| !is_horizontal_strip(&w[0], &w[1])) {
        return Err(Error::BoundaryMismatch);
    }
    if q0.windows(2).any(|w| !is_vertical_strip(&w[0], &w[1])) {
        return Err(Error::BoundaryMismatch);
    }
    let mut grid = vec![vec![Partition::empty(); n + 1]; m + 1];
    for (i, part) in p0.iter().enumerate() {
        grid[i][0] = part.clone();
    }
    for (j, part) in q0.iter().enumerate() {
        grid[0][j] = part.clone();
    }
    let mut raw = Vec::new();
    fill_forward(a, &mut grid, 0, &QTFactored::one(), &mut raw)?;
    let mut terms = Vec::new();
    for (grid, p) in raw {
        let right: Vec<Partition> = grid.iter().map(|row| row[n].clone()).collect();
        let bottom: Vec<Partition> = grid[m].clone();
        terms.push(((right, bottom), p));
    }
    Distribution::from_terms(mode, terms)
}

// ---------------------------------------------------------------------------
// Symmetries
// ---------------------------------------------------------------------------

/// Conjugates every partition of the chain and toggles the strip discipline.
pub fn transpose_tableau(t: &Tableau) -> Result<Tableau> {
    let chain = t.chain().iter().map(|p| p.conjugate()).collect();
    let flavor = match t.flavor() {
        TableauFlavor::Ssyt => TableauFlavor::DualSsyt,
        TableauFlavor::DualSsyt => TableauFlavor::Ssyt,
        TableauFlavor::PartialSyt => TableauFlavor::PartialSyt,
    };
    Tableau::from_chain(chain, flavor)
}

/// Verifies, exactly and for every outcome, that the distribution of the
/// transposed matrix is the original distribution with the outcome pair
/// transposed and swapped and `(q,t)` replaced by `(t^{-1}, q^{-1})`.
pub fn transpose_symmetry_check(a: &Matrix01) -> Result<bool> {
    let d1 = forward_distribution(a, &ValueMode::QtExact)?;
    let d2 = forward_distribution(&a.transpose(), &ValueMode::QtExact)?;
    if d1.len() != d2.len() {
        return Ok(false);
    }
    for ((p, q), v) in d1.support() {
        let key = (transpose_tableau(q)?, transpose_tableau(p)?);
        let got = d2.qt_value(&key)?;
        let want = match v {
            DistValue::Qt(s) => s.swap_qt().substitute_inverse(),
            _ => unreachable!("constructed in exact mode"),
        };
        if !got.equals(&want) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn alpha_marginals_equal(x: &Distribution<Tableau>, y: &Distribution<Tableau>) -> Result<bool> {
    let mut keys: BTreeSet<Tableau> = x.support().keys().cloned().collect();
    keys.extend(y.support().keys().cloned());
    for k in keys {
        if !x.alpha_value(&k)?.sub(&y.alpha_value(&k)?).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks whether the α-mode marginal distribution of the insertion tableau
/// is unchanged by exchanging 0-based columns `k` and `k+1` of `A`; `A` must
/// have at most one 1 per column.
pub fn jack_swap_check(a: &Matrix01, k: usize) -> Result<bool> {
    if !a.at_most_one_per_column() {
        return Err(Error::ColumnConstraintViolated);
    }
    let b = a.swap_adjacent_columns(k)?;
    let x = p_marginal(a, &ValueMode::Alpha)?;
    let y = p_marginal(&b, &ValueMode::Alpha)?;
    alpha_marginals_equal(&x, &y)
}

// ---------------------------------------------------------------------------
// Commutation identities for the branching weights
// ---------------------------------------------------------------------------

/// The weighted-set identity behind the local rules: for a compatible pair
/// `(λ, ρ)` and a corner count `k`, the sum of `ψ_{ν/ρ} φ*_{ν/λ}` over the
/// `ν` adding `k` frame corners equals the sum of `ψ_{λ/μ} φ*_{ρ/μ}` over
/// the `μ` removing `k` or `k−1` frame corners; both sides have
/// `binom(d+1, k)` summands.
pub fn commutation_identity_holds(la: &Partition, rho: &Partition, k: usize) -> Result<bool> {
    let f = corner_frame(la, rho)?;
    let d = f.d();
    let mut lhs = Vec::new();
    for sset in subsets_of_size(&(0..=d).collect::<Vec<_>>(), k) {
        let nu = nu_of(&f, &sset)?;
        lhs.push(psi(&nu, rho)?.mul(&phi_star(&nu, la)?));
    }
    let mut rhs = Vec::new();
    let universe: Vec<usize> = (1..=d).collect();
    let mut sizes = vec![k];
    if k >= 1 {
        sizes.push(k - 1);
    }
    for size in sizes {
        for rset in subsets_of_size(&universe, size) {
            let mu = mu_of(&f, &rset)?;
            rhs.push(psi(la, &mu)?.mul(&phi_star(rho, &mu)?));
        }
    }
    Ok(QTSum::from_terms(&lhs).equals(&QTSum::from_terms(&rhs)))
}

/// The restricted (word) commutation identity: with weights `ψ · φ`, the sum
/// over `ν` with `|ν/ρ| = k+1`, `|ν/λ| = 1` equals the sum over `μ` with
/// `|λ/μ| = k+1`, `|ρ/μ| = 1` plus `(1−t)/(1−q)` times the sum over `μ` with
/// `|λ/μ| = k`, `μ = ρ` intersected appropriately (`|ρ/μ| = 0`).
pub fn word_commutation_identity_holds(la: &Partition, rho: &Partition, k: u64) -> Result<bool> {
    let mut lhs = Vec::new();
    for nu in u_kl(la, rho, k + 1, 1) {
        lhs.push(psi(&nu, rho)?.mul(&phi(&nu, la)?));
    }
    let mut rhs = Vec::new();
    for mu in d_kl(la, rho, k + 1, 1) {
        rhs.push(psi(la, &mu)?.mul(&phi(rho, &mu)?));
    }
    let ratio = QTFactored::binomial(0, 1).div(&QTFactored::binomial(1, 0))?;
    for mu in d_kl(la, rho, k, 0) {
        rhs.push(ratio.mul(&psi(la, &mu)?.mul(&phi(rho, &mu)?)));
    }
    Ok(QTSum::from_terms(&lhs).equals(&QTSum::from_terms(&rhs)))
}

// ---------------------------------------------------------------------------
// Two-square configurations for the α-limit analysis
// ---------------------------------------------------------------------------

/// Which of the two-square partial configurations to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartialConfig {
    /// Top chain `(μ, ρ, ρ)`, entry 1 in the right square.
    I,
    /// Top chain `(μ, μ, ρ)`, entry 1 in the left square.
    II,
}

/// The outcome terms over the final south-east partition `ν` of the
/// two-square partial configuration with top chain as in `config` and bottom
/// chain `(λ, ∗, ν)`, branching over the intermediate `∗`.
pub fn partial_config_terms(
    mu: &Partition,
    la: &Partition,
    rho: &Partition,
    config: PartialConfig,
) -> Result<Vec<(Partition, QTFactored)>> {
    let mut out = Vec::new();
    match config {
        PartialConfig::I => {
            for (star, p1) in forward_branches(mu, la, rho, 0)? {
                for (nu, p2) in forward_branches(rho, &star, rho, 1)? {
                    out.push((nu, p1.mul(&p2)));
                }
            }
        }
        PartialConfig::II => {
            for (star, p1) in forward_branches(mu, la, mu, 1)? {
                for (nu, p2) in forward_branches(mu, &star, rho, 0)? {
                    out.push((nu, p1.mul(&p2)));
                }
            }
        }
    }
    Ok(out)
}

/// The two-square partial configuration as a distribution over `ν`.
pub fn partial_config_distribution(
    mu: &Partition,
    la: &Partition,
    rho: &Partition,
    config: PartialConfig,
    mode: &ValueMode,
) -> Result<Distribution<Partition>> {
    Distribution::from_terms(mode, partial_config_terms(mu, la, rho, config)?)
}

fn cell_monomial_poly(c: Cell) -> LaurentPoly2 {
    // Corner-point monomial of a cell, up to a global power of q that cancels
    // in the degree-one-homogeneous ratio below.
    LaurentPoly2::term(Rat::one(), MonomialQT::new(-(c.x as i64), c.y as i64))
}

/// For an instance with `λ ∩ ρ = μ`, `ρ/μ ⊆ ν/λ`, `|ν/λ| = 2`, and two
/// intermediate partitions between `λ` and `ν`, verifies that the exact
/// ratio of the two-square configuration I and II probabilities of `ν`
/// equals `(t·S₁ − q·S₂) / (S₁·(1 − q + qt) − q·S₂)`, where `S₁`, `S₂` are
/// the corner-point monomials of the added cell shared with `ρ` and of the
/// other added cell.
pub fn partial_config_ratio_holds(
    mu: &Partition,
    la: &Partition,
    rho: &Partition,
    nu: &Partition,
) -> Result<bool> {
    // The added cell shared with ρ and the second added cell.
    let s1 = single_new_cell(rho, mu)?;
    let mut s2 = None;
    for y in 1..=nu.len() as u32 {
        for x in la.part(y) + 1..=nu.part(y) {
            let c = Cell::new(x, y)?;
            if c != s1 {
                if s2.is_some() {
                    return Err(Error::Invalid("expected two added cells".into()));
                }
                s2 = Some(c);
            }
        }
    }
    let s2 = s2.ok_or(Error::Invalid("expected two added cells".into()))?;
    let p1 = cell_monomial_poly(s1);
    let p2 = cell_monomial_poly(s2);
    let q_mono = LaurentPoly2::term(Rat::one(), MonomialQT::new(1, 0));
    let t_mono = LaurentPoly2::term(Rat::one(), MonomialQT::new(0, 1));
    let num = t_mono.mul(&p1).sub(&q_mono.mul(&p2));
    let bracket = LaurentPoly2::one()
        .sub(&q_mono)
        .add(&q_mono.mul(&t_mono));
    let den = p1.mul(&bracket).sub(&q_mono.mul(&p2));
    let collect = |config: PartialConfig| -> Result<QTSum> {
        let terms: Vec<QTFactored> = partial_config_terms(mu, la, rho, config)?
            .into_iter()
            .filter(|(outcome, _)| outcome == nu)
            .map(|(_, p)| p)
            .collect();
        Ok(QTSum::from_terms(&terms))
    };
    let pi = collect(PartialConfig::I)?;
    let pii = collect(PartialConfig::II)?;
    // P_I / P_II == num / den, by cross-multiplication.
    let lhs = pi.num.mul(&den).mul(&pii.den);
    let rhs = pii.num.mul(&num).mul(&pi.den);
    Ok(lhs == rhs)
}

// ---------------------------------------------------------------------------
// Seeded sampling
// ---------------------------------------------------------------------------

/// SplitMix64: the 64-bit generator with additive constant
/// `0x9E3779B97F4A7C15` and the two xor-shift-multiply finalization steps
/// (`0xBF58476D1CE4E5B9`, `0x94D049BB133111EB`).  A uniform draw is a 64-bit
/// integer compared against cumulative exact-rational thresholds scaled by
/// `2^64` with floor rounding, so the selection bias per draw is below
/// `2^{-64}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    /// Seeds the generator.
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    /// Next 64-bit output.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

fn sampling_param_ok(x: &Rat) -> bool {
    *x >= Rat::zero() && *x != Rat::one()
}

fn choose_index(rng: &mut SplitMix64, probs: &[Rat]) -> usize {
    let u = BigInt::from(rng.next_u64());
    let mut cum = Rat::zero();
    for (i, p) in probs.iter().enumerate() {
        cum += p;
        let threshold = (cum.numer().clone() << 64u32) / cum.denom().clone();
        if u < threshold {
            return i;
        }
    }
    probs.len() - 1
}

/// Samples one growth of `A` square by square at exact rational `(q0, t0)`
/// with a seeded deterministic generator, returning the boundary tableaux.
pub fn sample_forward(
    a: &Matrix01,
    q0: &Rat,
    t0: &Rat,
    seed: u64,
) -> Result<(Tableau, Tableau)> {
    if !sampling_param_ok(q0) || !sampling_param_ok(t0) {
        return Err(Error::ParameterOutOfRange);
    }
    let m = a.m();
    let n = a.n();
    let mut rng = SplitMix64::new(seed);
    let mut grid = vec![vec![Partition::empty(); n + 1]; m + 1];
    for i in 1..=m {
        for j in 1..=n {
            let branches = forward_branches(
                &grid[i - 1][j - 1],
                &grid[i][j - 1],
                &grid[i - 1][j],
                a.entry(i - 1, j - 1),
            )?;
            let probs: Vec<Rat> = branches
                .iter()
                .map(|(_, p)| eval_at(p, q0, t0))
                .collect::<Result<_>>()?;
            let idx = choose_index(&mut rng, &probs);
            grid[i][j] = branches[idx].0.clone();
        }
    }
    let g = DualGrowth {
        grid,
        source: a.clone(),
    };
    Ok((g.p_tableau()?, g.q_tableau()?))
}

/// Samples one source matrix for the boundary pair `(P, Q)` square by square
/// with the backward transition probabilities at exact rational `(q0, t0)`.
pub fn sample_backward(p: &Tableau, q: &Tableau, q0: &Rat, t0: &Rat, seed: u64) -> Result<Matrix01> {
    if !sampling_param_ok(q0) || !sampling_param_ok(t0) {
        return Err(Error::ParameterOutOfRange);
    }
    if p.flavor() != TableauFlavor::Ssyt || q.flavor() != TableauFlavor::DualSsyt {
        return Err(Error::Invalid(
            "backward boundary needs an ssyt first component and a dual ssyt second component"
                .into(),
        ));
    }
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    let m = p.steps() as usize;
    let n = q.steps() as usize;
    let mut rng = SplitMix64::new(seed);
    let mut grid = vec![vec![Partition::empty(); n + 1]; m + 1];
    for (i, part) in p.chain().iter().enumerate() {
        grid[i][n] = part.clone();
    }
    for (j, part) in q.chain().iter().enumerate() {
        grid[m][j] = part.clone();
    }
    let mut entries = vec![vec![0u8; n]; m];
    for i in (1..=m).rev() {
        for j in (1..=n).rev() {
            let branches = backward_branches(&grid[i][j - 1], &grid[i - 1][j], &grid[i][j])?;
            let probs: Vec<Rat> = branches
                .iter()
                .map(|(_, _, p)| eval_at(p, q0, t0))
                .collect::<Result<_>>()?;
            let idx = choose_index(&mut rng, &probs);
            grid[i - 1][j - 1] = branches[idx].0.clone();
            entries[i - 1][j - 1] = branches[idx].1;
        }
    }
    Matrix01::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, AlphaPoly};
    use crate::partition::vertical_strip_additions;
    use crate::weights::tableaux_of_shape;
    use alloc::string::ToString;

    fn p(parts: &[u32]) -> Partition {
        Partition::of(parts)
    }

    fn mat(s: &str) -> Matrix01 {
        s.parse().unwrap()
    }

    fn tab(rows: &[&[u32]], m: u32, flavor: TableauFlavor) -> Tableau {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        Tableau::from_rows(&rows, m, flavor).unwrap()
    }

    fn mono(e_q: i64, e_t: i64) -> MonomialQT {
        MonomialQT::new(e_q, e_t)
    }

    /// sign · q^eq t^et · ∏ num / ∏ den with binomial factor lists.
    fn factored(
        sign: i64,
        eq: i64,
        et: i64,
        num: &[(u32, u32)],
        den: &[(u32, u32)],
    ) -> QTFactored {
        let mut acc = QTFactored::from_parts(rat(sign, 1), mono(eq, et), []).unwrap();
        for &(a, b) in num {
            acc = acc.mul(&QTFactored::binomial(a, b));
        }
        for &(a, b) in den {
            acc = acc.div(&QTFactored::binomial(a, b)).unwrap();
        }
        acc
    }

    fn alpha_frac(num: AlphaPoly, den: AlphaPoly) -> AlphaRational {
        AlphaRational::new(num, den).unwrap()
    }

    fn lin(c0: i64, c1: i64) -> AlphaPoly {
        AlphaPoly::linear(rat(c0, 1), rat(c1, 1))
    }

    fn all_matrices(m: usize, n: usize) -> Vec<Matrix01> {
        let mut out = Vec::new();
        for bits in 0..(1u32 << (m * n)) {
            let rows: Vec<Vec<u8>> = (0..m)
                .map(|i| (0..n).map(|j| ((bits >> (i * n + j)) & 1) as u8).collect())
                .collect();
            out.push(Matrix01::new(rows).unwrap());
        }
        out
    }

    fn boundary_weight(p: &Tableau, q: &Tableau) -> QTFactored {
        tableau_weight(p, WeightKind::Psi)
            .unwrap()
            .mul(&tableau_weight(q, WeightKind::PhiStar).unwrap())
    }

    fn pad_tableau(t: &Tableau, steps: usize) -> Tableau {
        let mut chain = t.chain().to_vec();
        while chain.len() < steps + 1 {
            chain.push(chain.last().unwrap().clone());
        }
        Tableau::from_chain(chain, t.flavor()).unwrap()
    }

    #[test]
    fn matrix_basics() {
        let a = mat("110;001");
        assert_eq!(a.m(), 2);
        assert_eq!(a.n(), 3);
        assert_eq!(a.ones(), 3);
        assert_eq!(a.row_sums(), vec![2, 1]);
        assert_eq!(a.col_sums(), vec![1, 1, 1]);
        assert_eq!(a.to_string(), "110;001");
        assert_eq!(a.transpose().to_string(), "10;10;01");
        assert_eq!(a.swap_adjacent_columns(1).unwrap().to_string(), "101;010");
        assert!(a.swap_adjacent_columns(2).is_err());
        assert!(a.at_most_one_per_column());
        assert!(!mat("10;10").at_most_one_per_column());
        assert_eq!(mat("").m(), 0);
        assert!("102".parse::<Matrix01>().is_err());
        assert!(Matrix01::new(vec![vec![0], vec![1, 1]]).is_err());
    }

    #[test]
    fn enumerate_growths_examples() {
        let a = mat("010;101;111");
        let growths = enumerate_growths(&a).unwrap();
        assert_eq!(growths.len(), 3);
        let pinned = vec![
            vec![p(&[]), p(&[]), p(&[]), p(&[])],
            vec![p(&[]), p(&[]), p(&[1]), p(&[1])],
            vec![p(&[]), p(&[1]), p(&[2]), p(&[3])],
            vec![p(&[]), p(&[1, 1]), p(&[2, 2]), p(&[3, 3])],
        ];
        assert!(growths.iter().any(|g| g.grid() == pinned.as_slice()));

        let z = enumerate_growths(&Matrix01::zero(2, 3)).unwrap();
        assert_eq!(z.len(), 1);
        assert!(z[0].grid().iter().flatten().all(|part| part.is_empty()));

        let one = enumerate_growths(&mat("1")).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].grid()[1][1], p(&[1]));

        assert_eq!(enumerate_growths(&mat("")).unwrap().len(), 1);
    }

    fn table1_matrices() -> [Matrix01; 3] {
        [mat("110;001"), mat("101;010"), mat("011;100")]
    }

    fn table1_pairs() -> [(Tableau, Tableau); 3] {
        let ssyt = TableauFlavor::Ssyt;
        let dual = TableauFlavor::DualSsyt;
        [
            (tab(&[&[1, 1], &[2]], 2, ssyt), tab(&[&[1, 2], &[3]], 3, dual)),
            (tab(&[&[1, 1], &[2]], 2, ssyt), tab(&[&[1, 3], &[2]], 3, dual)),
            (tab(&[&[1, 1, 2]], 2, ssyt), tab(&[&[1, 2, 3]], 3, dual)),
        ]
    }

    #[test]
    fn table1_forward_distributions() {
        let pairs = table1_pairs();
        // One row of expectations per matrix, one column per tableau pair.
        let expect = [
            [
                Some(factored(1, 0, 1, &[(2, 0)], &[(2, 1)])),
                None,
                Some(factored(1, 0, 0, &[(0, 1)], &[(2, 1)])),
            ],
            [
                Some(factored(1, 0, 0, &[(1, 0), (0, 1)], &[(1, 1), (2, 1)])),
                Some(factored(1, 0, 1, &[(1, 0)], &[(1, 1)])),
                Some(factored(1, 1, 0, &[(0, 1)], &[(2, 1)])),
            ],
            [
                Some(factored(1, 1, 0, &[(1, 0), (0, 1)], &[(1, 1), (2, 1)])),
                Some(factored(1, 0, 0, &[(1, 0)], &[(1, 1)])),
                Some(factored(1, 2, 0, &[(0, 1)], &[(2, 1)])),
            ],
        ];
        for (a, row) in table1_matrices().iter().zip(&expect) {
            let dist = forward_distribution(a, &ValueMode::QtExact).unwrap();
            for (pair, want) in pairs.iter().zip(row) {
                let got = dist.qt_value(pair).unwrap();
                match want {
                    Some(v) => assert!(got.equals_factored(v), "{a} {:?}", pair.0),
                    None => {
                        assert!(dist.get(pair).is_none());
                        assert!(got.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn table1_column_weights() {
        let pairs = table1_pairs();
        let expect = [
            factored(1, 0, 0, &[(2, 0), (1, 2)], &[(1, 1), (2, 1)]),
            factored(1, 0, 0, &[(1, 0), (0, 2)], &[(0, 1), (1, 1)]),
            factored(1, 0, 0, &[(0, 1), (3, 0)], &[(1, 0), (2, 1)]),
        ];
        for (pair, want) in pairs.iter().zip(&expect) {
            assert_eq!(boundary_weight(&pair.0, &pair.1), *want);
        }
    }

    #[test]
    fn table2_jack_distributions() {
        let pairs = table1_pairs();
        let expect = [
            [
                alpha_frac(lin(0, 2), lin(1, 2)),
                AlphaRational::zero(),
                alpha_frac(lin(1, 0), lin(1, 2)),
            ],
            [
                alpha_frac(lin(0, 1), lin(1, 1).mul(&lin(1, 2))),
                alpha_frac(lin(0, 1), lin(1, 1)),
                alpha_frac(lin(1, 0), lin(1, 2)),
            ],
            [
                alpha_frac(lin(0, 1), lin(1, 1).mul(&lin(1, 2))),
                alpha_frac(lin(0, 1), lin(1, 1)),
                alpha_frac(lin(1, 0), lin(1, 2)),
            ],
        ];
        for (a, row) in table1_matrices().iter().zip(&expect) {
            let dist = forward_distribution(a, &ValueMode::Alpha).unwrap();
            for (pair, want) in pairs.iter().zip(row) {
                assert_eq!(dist.alpha_value(pair).unwrap(), *want, "{a}");
            }
        }
    }

    #[test]
    fn refined_identity_forward() {
        // Σ_A P(A → P, Q) = ψ_P φ*_Q over all 2×3 matrices, for every pair.
        let mut by_pair: BTreeMap<(Tableau, Tableau), Vec<QTFactored>> = BTreeMap::new();
        for a in all_matrices(2, 3) {
            for (g, w) in forward_growth_terms(&a).unwrap() {
                by_pair
                    .entry((g.p_tableau().unwrap(), g.q_tableau().unwrap()))
                    .or_default()
                    .push(w);
            }
        }
        for (pair, terms) in &by_pair {
            assert!(
                qt_sum_equals(terms, &boundary_weight(&pair.0, &pair.1)),
                "{:?}",
                pair.0
            );
        }
        // The Table 1 column weights arise as three of these sums.
        for pair in table1_pairs() {
            assert!(by_pair.contains_key(&pair));
        }
    }

    #[test]
    fn compatibility_and_backward() {
        let mut small: Vec<Matrix01> = all_matrices(2, 2);
        small.extend(table1_matrices());
        for a in &small {
            let mut refined = Vec::new();
            for (g, w) in forward_growth_terms(a).unwrap() {
                assert!(growth_compatibility_holds(&g).unwrap(), "{a}");
                assert_eq!(w, growth_prob(&g, Direction::Forward).unwrap());
                refined.push(
                    growth_prob(&g, Direction::Backward)
                        .unwrap()
                        .mul(&boundary_weight(&g.p_tableau().unwrap(), &g.q_tableau().unwrap())),
                );
            }
            // Σ_{(P,Q)} P̄(A ← P,Q) ψ_P φ*_Q = 1.
            assert!(qt_sum_equals(&refined, &QTFactored::one()), "{a}");
        }
        // Backward distributions normalize (checked on construction).
        for pair in table1_pairs() {
            let d = backward_distribution(&pair.0, &pair.1, &ValueMode::QtExact).unwrap();
            assert!(!d.is_empty());
        }
        // Point masses.
        let p_empty = Tableau::from_chain(vec![Partition::empty()], TableauFlavor::Ssyt).unwrap();
        let q_empty =
            Tableau::from_chain(vec![Partition::empty()], TableauFlavor::DualSsyt).unwrap();
        let d = backward_distribution(&p_empty, &q_empty, &ValueMode::QtExact).unwrap();
        assert_eq!(d.len(), 1);
        assert!(d.qt_value(&mat("")).unwrap().equals_factored(&QTFactored::one()));
        // Mismatched flavors and shapes are rejected.
        assert!(backward_distribution(&p_empty, &p_empty, &ValueMode::QtExact).is_err());
        let p1 = tab(&[&[1]], 1, TableauFlavor::Ssyt);
        let q2 = tab(&[&[1], &[2]], 2, TableauFlavor::DualSsyt);
        assert!(matches!(
            backward_distribution(&p1, &q2, &ValueMode::QtExact),
            Err(Error::ShapeMismatch)
        ));
    }

    #[test]
    fn forward_sum_to_one_2x2() {
        for a in all_matrices(2, 2) {
            forward_distribution(&a, &ValueMode::QtExact).unwrap();
        }
    }

    #[test]
    fn classical_examples() {
        let a = mat("10001;11010;01100");
        let (p_tab, q_tab) = classical_dual_rsk(&a, ClassicalVariant::Column).unwrap();
        assert_eq!(p_tab, tab(&[&[1, 1, 2, 2], &[2, 3], &[3]], 3, TableauFlavor::Ssyt));
        assert_eq!(
            q_tab,
            tab(&[&[1, 2, 4, 5], &[1, 3], &[2]], 5, TableauFlavor::DualSsyt)
        );
        for variant in [ClassicalVariant::Row, ClassicalVariant::Column] {
            let single = mat("00;00;01");
            let (p_tab, q_tab) = classical_dual_rsk(&single, variant).unwrap();
            assert_eq!(p_tab.rows(), vec![vec![3u32]]);
            assert_eq!(q_tab.rows(), vec![vec![2u32]]);
            let (pz, qz) = classical_dual_rsk(&Matrix01::zero(2, 2), variant).unwrap();
            assert!(pz.shape().is_empty());
            assert!(qz.shape().is_empty());
        }
    }

    #[test]
    fn classical_insert_replays_growth() {
        // Column-by-column single insertions rebuild the column-variant P.
        let a = mat("10001;11010;01100");
        let (p_tab, _) = classical_dual_rsk(&a, ClassicalVariant::Column).unwrap();
        let mut acc = Tableau::from_chain(vec![Partition::empty()], TableauFlavor::Ssyt).unwrap();
        for j in 0..a.n() {
            let values: Vec<u32> = (0..a.m()).filter(|&i| a.entry(i, j) == 1).map(|i| i as u32 + 1).collect();
            if !values.is_empty() {
                acc = classical_insert(&acc, &values, InsertRule::FCol).unwrap();
            }
        }
        assert_eq!(pad_tableau(&acc, a.m()), p_tab);
    }

    #[test]
    fn traceability() {
        let targets = [
            Tableau::from_chain(vec![Partition::empty()], TableauFlavor::Ssyt).unwrap(),
            tab(&[&[1, 2], &[3]], 3, TableauFlavor::Ssyt),
            tab(&[&[1, 1, 2, 3], &[2]], 3, TableauFlavor::Ssyt),
        ];
        let value_sets: [&[u32]; 3] = [&[1, 2], &[1, 3], &[2, 3]];
        for t in &targets {
            for values in value_sets {
                // Column variant: simultaneous equals sequential ascending.
                let simultaneous = classical_insert(t, values, InsertRule::FCol).unwrap();
                let mut acc = t.clone();
                for &v in values {
                    acc = classical_insert(&acc, &[v], InsertRule::FCol).unwrap();
                }
                assert_eq!(simultaneous, acc);
                // Row variant: simultaneous equals sequential descending.
                let simultaneous = classical_insert(t, values, InsertRule::FRow).unwrap();
                let mut acc = t.clone();
                for &v in values.iter().rev() {
                    acc = classical_insert(&acc, &[v], InsertRule::FRow).unwrap();
                    acc = pad_tableau(&acc, values.last().copied().unwrap() as usize);
                }
                assert_eq!(simultaneous, pad_tableau(&acc, simultaneous.steps() as usize));
            }
        }
    }

    #[test]
    fn randomized_insert_example() {
        let t = tab(&[&[1, 2], &[3]], 3, TableauFlavor::Ssyt);
        let dist = growth_insert(&t, &[2, 3], InsertRule::Qt, &ValueMode::QtExact).unwrap();
        let cases = [
            (
                tab(&[&[1, 2, 2], &[3, 3]], 3, TableauFlavor::Ssyt),
                factored(1, 0, 0, &[(1, 1)], &[(2, 1)]),
            ),
            (
                tab(&[&[1, 2, 3], &[2, 3]], 3, TableauFlavor::Ssyt),
                factored(1, 2, 1, &[(1, 0), (1, 0), (0, 1), (0, 1)], &[(1, 1), (2, 0), (2, 1), (2, 2)]),
            ),
            (
                tab(&[&[1, 2], &[2, 3], &[3]], 3, TableauFlavor::Ssyt),
                factored(1, 1, 2, &[(1, 0), (1, 0), (2, 1)], &[(1, 1), (2, 0), (2, 2)]),
            ),
            (
                tab(&[&[1, 2, 3], &[2], &[3]], 3, TableauFlavor::Ssyt),
                factored(1, 1, 1, &[(1, 0), (1, 0), (0, 1)], &[(2, 0), (1, 1), (1, 1)]),
            ),
        ];
        assert_eq!(dist.len(), cases.len());
        for (key, want) in &cases {
            assert!(dist.qt_value(key).unwrap().equals_factored(want), "{:?}", key);
        }
        // Insertion into the empty tableau is a point mass on a single cell.
        let empty = Tableau::from_chain(vec![Partition::empty()], TableauFlavor::Ssyt).unwrap();
        let d = growth_insert(&empty, &[1], InsertRule::Qt, &ValueMode::QtExact).unwrap();
        assert_eq!(d.len(), 1);
        let cell = tab(&[&[1]], 1, TableauFlavor::Ssyt);
        assert!(d.qt_value(&cell).unwrap().equals_factored(&QTFactored::one()));
        // Bad value lists are rejected.
        assert!(growth_insert_terms(&t, &[0, 1], InsertRule::Qt).is_err());
        assert!(growth_insert_terms(&t, &[2, 2], InsertRule::Qt).is_err());
    }

    #[test]
    fn word_insert_example() {
        let t = tab(&[&[1, 1, 2, 3], &[2]], 3, TableauFlavor::Ssyt);
        let dist = qrst_word_insert(&t, 2, &ValueMode::QtExact).unwrap();
        let cases = [
            (
                tab(&[&[1, 1, 2, 3], &[2, 2]], 3, TableauFlavor::Ssyt),
                factored(1, 1, 1, &[(1, 0)], &[(2, 1)]),
            ),
            (
                tab(&[&[1, 1, 2, 2, 3], &[2]], 3, TableauFlavor::Ssyt),
                // q(1−q³t²)²/((1+qt)(1−q³t)(1−q⁴t²)), with 1+qt = (1−q²t²)/(1−qt).
                factored(1, 1, 0, &[(3, 2), (3, 2), (1, 1)], &[(2, 2), (3, 1), (4, 2)]),
            ),
            (
                tab(&[&[1, 1, 2, 2], &[2, 3]], 3, TableauFlavor::Ssyt),
                factored(1, 0, 0, &[(1, 0), (0, 1), (3, 2)], &[(2, 1), (2, 2), (3, 1)]),
            ),
            (
                tab(&[&[1, 1, 2, 2], &[2], &[3]], 3, TableauFlavor::Ssyt),
                factored(1, 0, 1, &[(1, 0), (1, 0)], &[(2, 2), (4, 2)]),
            ),
        ];
        assert_eq!(dist.len(), cases.len());
        for (key, want) in &cases {
            assert!(dist.qt_value(key).unwrap().equals_factored(want), "{:?}", key);
        }
        // The first outcome is the single-stage branch of the level-2 frame.
        let branches = forward_branches(&p(&[2]), &p(&[3, 1]), &p(&[2]), 1).unwrap();
        let direct = branches.iter().find(|(nu, _)| *nu == p(&[3, 2])).unwrap();
        assert_eq!(cases[0].1, direct.1);
        // Insert 1 into the empty tableau: point mass.
        let empty = Tableau::from_chain(vec![Partition::empty()], TableauFlavor::Ssyt).unwrap();
        let d = qrst_word_insert(&empty, 1, &ValueMode::QtExact).unwrap();
        assert_eq!(d.len(), 1);
    }

    #[test]
    fn word_insert_sums_to_one() {
        for shape in crate::partition::partitions_up_to(4) {
            for t in tableaux_of_shape(&shape, 3, TableauFlavor::Ssyt) {
                for value in 1..=4u32 {
                    qrst_word_insert(&t, value, &ValueMode::QtExact).unwrap();
                }
            }
        }
    }

    #[test]
    fn word_insert_matches_column_insert() {
        // A single value behaves like inserting a one-column matrix slice.
        let targets = [
            tab(&[&[1, 1, 2, 3], &[2]], 3, TableauFlavor::Ssyt),
            tab(&[&[1, 2], &[2]], 3, TableauFlavor::Ssyt),
        ];
        for t in &targets {
            for value in 1..=3u32 {
                let word = qrst_word_insert_terms(t, value).unwrap();
                let full = growth_insert_terms(t, &[value], InsertRule::Qt).unwrap();
                let keys: BTreeSet<Partition> =
                    word.iter().map(|(t, _)| t.shape().clone()).collect();
                for key in keys {
                    let xs: Vec<QTFactored> = word
                        .iter()
                        .filter(|(u, _)| *u.shape() == key)
                        .map(|(_, w)| w.clone())
                        .collect();
                    let ys: Vec<QTFactored> = full
                        .iter()
                        .filter(|(u, _)| *u.shape() == key)
                        .map(|(_, w)| w.clone())
                        .collect();
                    assert!(QTSum::from_terms(&xs).equals(&QTSum::from_terms(&ys)));
                }
                // Same outcome tableaux, not just shapes.
                let pad = |u: &Tableau| pad_tableau(u, core::cmp::max(t.steps(), value) as usize);
                let wk: BTreeSet<Tableau> = word.iter().map(|(u, _)| pad(u)).collect();
                let fk: BTreeSet<Tableau> = full.iter().map(|(u, _)| pad(u)).collect();
                assert_eq!(wk, fk);
            }
        }
    }

    #[test]
    fn word_restriction_matches_matrix_distribution() {
        // For matrices with at most one 1 per column, composing word
        // insertions along the columns reproduces the P-marginal.
        let mut cases: Vec<Matrix01> = all_matrices(2, 2)
            .into_iter()
            .filter(|a| a.at_most_one_per_column())
            .collect();
        cases.push(mat("010;101;000"));
        cases.push(mat("100;001;010"));
        for a in &cases {
            let empty =
                Tableau::from_chain(vec![Partition::empty()], TableauFlavor::Ssyt).unwrap();
            let mut acc: Vec<(Tableau, QTFactored)> = vec![(empty, QTFactored::one())];
            for j in 0..a.n() {
                let Some(i) = (0..a.m()).find(|&i| a.entry(i, j) == 1) else {
                    continue;
                };
                let mut next = Vec::new();
                for (t, w) in &acc {
                    for (u, v) in qrst_word_insert_terms(t, i as u32 + 1).unwrap() {
                        next.push((u, w.mul(&v)));
                    }
                }
                acc = next;
            }
            let terms: Vec<(Tableau, QTFactored)> = acc
                .into_iter()
                .map(|(t, w)| (pad_tableau(&t, a.m()), w))
                .collect();
            let composed = Distribution::from_terms(&ValueMode::QtExact, terms).unwrap();
            let marginal = p_marginal(a, &ValueMode::QtExact).unwrap();
            assert_eq!(
                composed.support().keys().collect::<Vec<_>>(),
                marginal.support().keys().collect::<Vec<_>>(),
                "{a}"
            );
            for key in composed.support().keys() {
                assert!(
                    composed
                        .qt_value(key)
                        .unwrap()
                        .equals(&marginal.qt_value(key).unwrap()),
                    "{a}"
                );
            }
        }
    }

    #[test]
    fn skew_growths() {
        // Empty boundary reproduces the forward distribution.
        let a = mat("10;11");
        let p0 = vec![Partition::empty(); 3];
        let q0 = vec![Partition::empty(); 3];
        let skew = skew_forward_distribution(&a, &p0, &q0, &ValueMode::QtExact).unwrap();
        let plain = forward_distribution(&a, &ValueMode::QtExact).unwrap();
        assert_eq!(skew.len(), plain.len());
        for ((pt, qt_), v) in plain.support() {
            let key = (pt.chain().to_vec(), qt_.chain().to_vec());
            match (skew.get(&key).unwrap(), v) {
                (DistValue::Qt(x), DistValue::Qt(y)) => assert!(x.equals(y)),
                _ => unreachable!(),
            }
        }
        // A single column of r ones on a constant-μ boundary is supported on
        // exactly the vertical strips of size r over μ.
        let mu = p(&[2, 1]);
        for r in 1..=2usize {
            let m = 3usize;
            let a = Matrix01::new(
                (0..m).map(|i| vec![u8::from(i < r)]).collect(),
            )
            .unwrap();
            let p0 = vec![mu.clone(); m + 1];
            let q0 = vec![mu.clone(); 2];
            let d = skew_forward_distribution(&a, &p0, &q0, &ValueMode::QtExact).unwrap();
            let support: BTreeSet<Partition> = d
                .support()
                .keys()
                .map(|(right, _)| right.last().unwrap().clone())
                .collect();
            let expect: BTreeSet<Partition> =
                vertical_strip_additions(&mu, r as u64).into_iter().collect();
            assert_eq!(support, expect);
        }
        // Incompatible boundaries are rejected.
        let bad = vec![p(&[1]), Partition::empty(), Partition::empty()];
        assert!(matches!(
            skew_forward_distribution(&a, &bad, &vec![p(&[1]); 3], &ValueMode::QtExact),
            Err(Error::BoundaryMismatch)
        ));
    }

    #[test]
    fn transpose_symmetry() {
        for a in all_matrices(2, 2) {
            assert!(transpose_symmetry_check(&a).unwrap(), "{a}");
        }
        for a in table1_matrices() {
            assert!(transpose_symmetry_check(&a).unwrap(), "{a}");
        }
        assert!(transpose_symmetry_check(&Matrix01::zero(2, 3)).unwrap());
    }

    #[test]
    fn jack_swap_examples() {
        let rows = table1_matrices();
        // Adjacent column swaps turn row 1 into row 2 and row 2 into row 3.
        assert_eq!(rows[0].swap_adjacent_columns(1).unwrap(), rows[1]);
        assert_eq!(rows[1].swap_adjacent_columns(0).unwrap(), rows[2]);
        assert!(jack_swap_check(&rows[0], 1).unwrap());
        assert!(jack_swap_check(&rows[1], 0).unwrap());
        assert!(jack_swap_check(&rows[0], 0).unwrap());
        // The marginal of the column shape 11/2 merges the first two columns
        // of the α table: 2α/(2α+1) = α/((α+1)(2α+1)) + α/(α+1).
        let key = tab(&[&[1, 1], &[2]], 2, TableauFlavor::Ssyt);
        let m0 = p_marginal(&rows[0], &ValueMode::Alpha).unwrap();
        let m1 = p_marginal(&rows[1], &ValueMode::Alpha).unwrap();
        let want = alpha_frac(lin(0, 2), lin(1, 2));
        assert_eq!(m0.alpha_value(&key).unwrap(), want);
        assert_eq!(m1.alpha_value(&key).unwrap(), want);
        assert_eq!(
            alpha_frac(lin(0, 1), lin(1, 1).mul(&lin(1, 2))).add(&alpha_frac(lin(0, 1), lin(1, 1))),
            want
        );
        // Swapping two zero columns changes nothing.
        assert!(jack_swap_check(&mat("00;10"), 0).unwrap());
        // A doubled column violates the hypothesis.
        assert!(matches!(
            jack_swap_check(&mat("001;110;001"), 1),
            Err(Error::ColumnConstraintViolated)
        ));
    }

    #[test]
    fn jack_swap_counterexample() {
        // The doubled-column matrix cannot reach T = 12/23 at all …
        let a = mat("001;110;001");
        let t = tab(&[&[1, 2], &[2, 3]], 3, TableauFlavor::Ssyt);
        let marginal = p_marginal(&a, &ValueMode::QtExact).unwrap();
        assert!(marginal.qt_value(&t).unwrap().is_zero());
        // … while after exchanging the last two columns, T is reached by
        // exactly two growths with the pinned probabilities, whose α-limits
        // α/(2(1+α)³) and α²/(2(1+α)³) sum to α/(2(1+α)²), which is nonzero.
        let b = a.swap_adjacent_columns(1).unwrap();
        assert_eq!(b, mat("010;101;010"));
        let probs: Vec<QTFactored> = forward_growth_terms(&b)
            .unwrap()
            .into_iter()
            .filter(|(g, _)| g.p_tableau().unwrap() == t)
            .map(|(_, w)| w)
            .collect();
        // q³t(1−q)(1−t)²/((1+q)(1−qt)³) with 1+q = (1−q²)/(1−q), and
        // (1−q)²(1−t)/((1+t)(1−qt)³) with 1+t = (1−t²)/(1−t).
        let want = vec![
            factored(
                1,
                3,
                1,
                &[(1, 0), (1, 0), (0, 1), (0, 1)],
                &[(2, 0), (1, 1), (1, 1), (1, 1)],
            ),
            factored(
                1,
                0,
                0,
                &[(1, 0), (1, 0), (0, 1), (0, 1)],
                &[(0, 2), (1, 1), (1, 1), (1, 1)],
            ),
        ];
        assert_eq!(probs.len(), 2);
        for w in &want {
            assert_eq!(probs.iter().filter(|x| *x == w).count(), 1);
        }
        let sum = probs[0].jack_limit().unwrap().add(&probs[1].jack_limit().unwrap());
        let den = AlphaPoly::constant(rat(2, 1)).mul(&lin(1, 1)).mul(&lin(1, 1));
        assert_eq!(sum, alpha_frac(lin(0, 1), den));
    }

    #[test]
    fn commutation_identities() {
        use crate::partition::is_compatible_pair;
        let shapes = crate::partition::partitions_up_to(4);
        for la in &shapes {
            for rho in &shapes {
                if la.union(rho).size() > 5 || !is_compatible_pair(la, rho) {
                    continue;
                }
                let d = corner_frame(la, rho).unwrap().d();
                for k in 0..=d + 1 {
                    assert!(commutation_identity_holds(la, rho, k).unwrap(), "{la} {rho} {k}");
                }
            }
        }
    }

    #[test]
    fn word_commutation_identities() {
        let shapes = crate::partition::partitions_up_to(4);
        for la in &shapes {
            for rho in &shapes {
                for k in 0..=2u64 {
                    assert!(
                        word_commutation_identity_holds(la, rho, k).unwrap(),
                        "{la} {rho} {k}"
                    );
                }
            }
        }
    }

    fn appendix_tuples(max_nu: u32) -> Vec<(Partition, Partition, Partition, Partition)> {
        let mut out = Vec::new();
        for size in 2..=max_nu {
            for nu in crate::partition::partitions_of_size(size) {
                for la in crate::partition::partitions_of_size(size - 2) {
                    if !nu.contains(&la) {
                        continue;
                    }
                    for msize in 0..=size - 2 {
                        for mu in crate::partition::partitions_of_size(msize) {
                            if !is_horizontal_strip(&mu, &la) {
                                continue;
                            }
                            for y in 1..=mu.len() as u32 + 1 {
                                let Ok(c) = Cell::new(mu.part(y) + 1, y) else {
                                    continue;
                                };
                                let Ok(rho) = mu.add_corner(c) else {
                                    continue;
                                };
                                if is_horizontal_strip(&rho, &nu) {
                                    out.push((mu.clone(), la.clone(), rho, nu.clone()));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn appendix_configurations_agree_in_alpha() {
        for (mu, la, rho, _nu) in appendix_tuples(6) {
            let d1 =
                partial_config_distribution(&mu, &la, &rho, PartialConfig::I, &ValueMode::Alpha)
                    .unwrap();
            let d2 =
                partial_config_distribution(&mu, &la, &rho, PartialConfig::II, &ValueMode::Alpha)
                    .unwrap();
            let mut keys: BTreeSet<Partition> = d1.support().keys().cloned().collect();
            keys.extend(d2.support().keys().cloned());
            for nu in keys {
                assert_eq!(
                    d1.alpha_value(&nu).unwrap(),
                    d2.alpha_value(&nu).unwrap(),
                    "{mu} {la} {rho} {nu}"
                );
            }
        }
    }

    #[test]
    fn appendix_exact_ratio_case_one() {
        let mut checked = 0usize;
        for (mu, la, rho, nu) in appendix_tuples(6) {
            if la.intersect(&rho) != mu {
                continue;
            }
            // Case 1: the two added cells lie in distinct rows and columns,
            // so there are two intermediate shapes between λ and ν.
            let mut cells = Vec::new();
            for y in 1..=nu.len() as u32 {
                for x in la.part(y) + 1..=nu.part(y) {
                    cells.push(Cell::new(x, y).unwrap());
                }
            }
            assert_eq!(cells.len(), 2);
            if cells[0].x == cells[1].x || cells[0].y == cells[1].y {
                continue;
            }
            // Generic case only: the cells directly above and directly
            // right of the ρ/μ cell must both be addable corners of λ∪ρ.
            let s1 = single_new_cell(&rho, &mu).unwrap();
            let union = la.union(&rho);
            let above = Cell::new(s1.x, s1.y + 1).unwrap();
            let right = Cell::new(s1.x + 1, s1.y).unwrap();
            if union.add_corner(above).is_err() || union.add_corner(right).is_err() {
                continue;
            }
            assert!(
                partial_config_ratio_holds(&mu, &la, &rho, &nu).unwrap(),
                "{mu} {la} {rho} {nu}"
            );
            checked += 1;
        }
        assert!(checked > 0);
    }

    #[test]
    fn dual_cauchy_by_content() {
        let points = [
            (rat(3, 8), rat(5, 7)),
            (rat(2, 9), rat(7, 4)),
            (rat(9, 2), rat(5, 3)),
        ];
        let (m, n) = (2u32, 2u32);
        let mut counts: BTreeMap<(Vec<u64>, Vec<u64>), u64> = BTreeMap::new();
        for a in all_matrices(m as usize, n as usize) {
            *counts.entry((a.row_sums(), a.col_sums())).or_insert(0) += 1;
        }
        for (q0, t0) in &points {
            let mut sums: BTreeMap<(Vec<u64>, Vec<u64>), Rat> = BTreeMap::new();
            for size in 0..=(m * n) {
                for shape in crate::partition::partitions_of_size(size) {
                    let ps = tableaux_of_shape(&shape, m, TableauFlavor::Ssyt);
                    let qs = tableaux_of_shape(&shape, n, TableauFlavor::DualSsyt);
                    for pt in &ps {
                        for qt_ in &qs {
                            let w = boundary_weight(pt, qt_).eval(q0, t0).unwrap();
                            *sums
                                .entry((pt.content(), qt_.content()))
                                .or_insert_with(Rat::zero) += w;
                        }
                    }
                }
            }
            sums.retain(|_, v| !v.is_zero());
            let counts_rat: BTreeMap<_, _> = counts
                .iter()
                .map(|(k, &c)| (k.clone(), Rat::from_integer(c.into())))
                .collect();
            assert_eq!(sums, counts_rat);
        }
    }

    #[test]
    fn numeric_mode_values() {
        let a = mat("101;010");
        let q0 = rat(1, 3);
        let t0 = rat(1, 4);
        let d = forward_distribution(&a, &ValueMode::Numeric { q0: q0.clone(), t0: t0.clone() })
            .unwrap();
        let pairs = table1_pairs();
        // t(1−q)/(1−qt) at (1/3, 1/4) = 2/11.
        assert_eq!(d.numeric_value(&pairs[1]).unwrap(), rat(2, 11));
        // Mode mismatch is reported.
        assert!(d.qt_value(&pairs[1]).is_err());
    }

    #[test]
    fn sampler_behaviour() {
        let a = mat("10001;11010;01100");
        let q0 = rat(1, 3);
        let t0 = rat(1, 4);
        let s1 = sample_forward(&a, &q0, &t0, 42).unwrap();
        let s2 = sample_forward(&a, &q0, &t0, 42).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(s1.0.shape(), s1.1.shape());
        let back = sample_backward(&s1.0, &s1.1, &q0, &t0, 7).unwrap();
        assert_eq!(back.m(), a.m());
        assert_eq!(back.n(), a.n());
        assert_eq!(back.ones(), a.ones());
        // At q0 = t0 = 0 the sampler is the deterministic row variant.
        for b in [a.clone(), mat("11;01"), mat("010;101;111")] {
            let zero = Rat::zero();
            let s = sample_forward(&b, &zero, &zero, 5).unwrap();
            assert_eq!(s, classical_dual_rsk(&b, ClassicalVariant::Row).unwrap());
        }
        // Parameters at 1 or negative are rejected.
        assert!(matches!(
            sample_forward(&a, &Rat::one(), &t0, 0),
            Err(Error::ParameterOutOfRange)
        ));
        assert!(matches!(
            sample_forward(&a, &q0, &rat(-1, 2), 0),
            Err(Error::ParameterOutOfRange)
        ));
        // SplitMix64 reference outputs from seed 0.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220A8397B1DCDAF);
        assert_eq!(rng.next_u64(), 0x6E789E6AA1B965F4);
    }
}
