//! Corner frames and the probabilistic local growth rules.
//!
//! A compatible pair `(λ,ρ)` determines a frame of monomial points: one
//! lower-right/upper-left pair per removable inner corner of `λ∩ρ`
//! (`R_i`/`I_i`, counted bottom-to-top, `i = 1..d`) and per addable outer
//! corner of `λ∪ρ` (`S_j = O_j` and `S̄_j`, `j = 0..d`).  Cells with French
//! coordinates `(c,r)` map to the lower-right point `q^{W−c+1} t^{r−1}` and
//! the upper-left point `q^{W−c} t^r`, where `W = (λ∪ρ)_1 + 1`; every
//! downstream quantity is invariant under a common translation of the
//! points.
//!
//! On top of the frame the module provides the forward and backward
//! transition probabilities, their lattice-path monomial `τ`, an independent
//! hook-length reformulation (`α·β/γ`), the weight-ratio and per-cell weight
//! table, the `t→0` and `q→0` closed forms, the Jack limit, the two
//! deterministic corner bijections, and a rational interpolation oracle.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{AlphaRational, MonomialQT, QTFactored, Rat};
use crate::partition::{
    add_corners, addable_outer_corners, b_ratio, is_horizontal_strip, is_vertical_strip,
    remove_corners, removable_inner_corners, Cell, Partition,
};
use crate::weights::{phi_star, psi};
use crate::{Error, Result};

/// The monomial point system of a compatible pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerFrame {
    lambda: Partition,
    rho: Partition,
    removable: Vec<Cell>,
    addable: Vec<Cell>,
    r_pts: Vec<MonomialQT>,
    ibar_pts: Vec<MonomialQT>,
    s_pts: Vec<MonomialQT>,
    sbar_pts: Vec<MonomialQT>,
}

fn lower_right(w: u32, c: Cell) -> MonomialQT {
    MonomialQT::new((w - c.x + 1) as i64, (c.y - 1) as i64)
}

fn upper_left(w: u32, c: Cell) -> MonomialQT {
    MonomialQT::new((w - c.x) as i64, c.y as i64)
}

/// Builds the frame of a compatible pair.
pub fn corner_frame(lambda: &Partition, rho: &Partition) -> Result<CornerFrame> {
    let removable = removable_inner_corners(lambda, rho)?;
    let addable = addable_outer_corners(lambda, rho)?;
    let w = lambda.union(rho).part(1) + 1;
    Ok(CornerFrame {
        lambda: lambda.clone(),
        rho: rho.clone(),
        r_pts: removable.iter().map(|&c| lower_right(w, c)).collect(),
        ibar_pts: removable.iter().map(|&c| upper_left(w, c)).collect(),
        s_pts: addable.iter().map(|&c| lower_right(w, c)).collect(),
        sbar_pts: addable.iter().map(|&c| upper_left(w, c)).collect(),
        removable,
        addable,
    })
}

impl CornerFrame {
    /// The first partition of the pair.
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// The second partition of the pair.
    pub fn rho(&self) -> &Partition {
        &self.rho
    }

    /// Number of removable inner corners of `λ∩ρ`.
    pub fn d(&self) -> usize {
        self.removable.len()
    }

    /// Removable inner corners, bottom-to-top (`1..d`).
    pub fn removable(&self) -> &[Cell] {
        &self.removable
    }

    /// Addable outer corners, bottom-to-top (`0..d`).
    pub fn addable(&self) -> &[Cell] {
        &self.addable
    }

    /// Lower-right point of the `i`-th removable corner (`1 ≤ i ≤ d`).
    pub fn r(&self, i: usize) -> MonomialQT {
        self.r_pts[i - 1]
    }

    /// Upper-left point of the `i`-th removable corner (`I_i`).
    pub fn ibar(&self, i: usize) -> MonomialQT {
        self.ibar_pts[i - 1]
    }

    /// Lower-right point of the `j`-th addable corner (`0 ≤ j ≤ d`).
    pub fn s(&self, j: usize) -> MonomialQT {
        self.s_pts[j]
    }

    /// Alias `O_j = S_j`.
    pub fn o(&self, j: usize) -> MonomialQT {
        self.s_pts[j]
    }

    /// Upper-left point of the `j`-th addable corner.
    pub fn sbar(&self, j: usize) -> MonomialQT {
        self.sbar_pts[j]
    }

    /// Checks the strict product-order chain
    /// `O_0 < I_1 < O_1 < … < I_d < O_d`, also with `R_i` in place of `I_i`
    /// or `S̄_j` in place of `O_j` (one substitution at a time — these are
    /// exactly the comparisons the probability formulas perform).
    pub fn chain_holds(&self) -> bool {
        let d = self.d();
        let combos: [(&[MonomialQT], &[MonomialQT]); 3] = [
            (&self.ibar_pts, &self.s_pts),
            (&self.r_pts, &self.s_pts),
            (&self.ibar_pts, &self.sbar_pts),
        ];
        {
            for (lo, up) in combos {
                for i in 1..=d {
                    if !up[i - 1].product_lt(&lo[i - 1]) || !lo[i - 1].product_lt(&up[i]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A choice of removable-corner indices (`⊆ 1..d`) and addable-corner
/// indices (`⊆ 0..d`) with `|S| ∈ {|R|, |R|+1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubsetPair {
    rset: BTreeSet<usize>,
    sset: BTreeSet<usize>,
}

impl SubsetPair {
    /// Validates the index ranges against a frame and the cardinality
    /// constraint `|S| ∈ {|R|, |R|+1}`.
    pub fn new(f: &CornerFrame, rset: BTreeSet<usize>, sset: BTreeSet<usize>) -> Result<SubsetPair> {
        let d = f.d();
        if rset.iter().any(|&i| i == 0 || i > d) || sset.iter().any(|&j| j > d) {
            return Err(Error::ParameterOutOfRange);
        }
        if sset.len() != rset.len() && sset.len() != rset.len() + 1 {
            return Err(Error::BadSubsetSizes);
        }
        Ok(SubsetPair { rset, sset })
    }

    /// The removable-corner indices.
    pub fn rset(&self) -> &BTreeSet<usize> {
        &self.rset
    }

    /// The addable-corner indices.
    pub fn sset(&self) -> &BTreeSet<usize> {
        &self.sset
    }
}

/// All valid subset pairs of a frame, in increasing order.
pub fn all_subset_pairs(f: &CornerFrame) -> Vec<SubsetPair> {
    let d = f.d();
    let mut out = Vec::new();
    for rbits in 0u32..1 << d {
        let rset: BTreeSet<usize> = (1..=d).filter(|i| rbits >> (i - 1) & 1 == 1).collect();
        for sbits in 0u32..1 << (d + 1) {
            let sset: BTreeSet<usize> = (0..=d).filter(|j| sbits >> j & 1 == 1).collect();
            if sset.len() == rset.len() || sset.len() == rset.len() + 1 {
                out.push(SubsetPair { rset: rset.clone(), sset });
            }
        }
    }
    out.sort();
    out
}

/// The partition obtained by removing the indexed removable corners from
/// `λ∩ρ`.
pub fn mu_of(f: &CornerFrame, rset: &BTreeSet<usize>) -> Result<Partition> {
    if rset.iter().any(|&i| i == 0 || i > f.d()) {
        return Err(Error::ParameterOutOfRange);
    }
    let cells: Vec<Cell> = rset.iter().map(|&i| f.removable[i - 1]).collect();
    remove_corners(&f.lambda.intersect(&f.rho), &cells)
}

/// The partition obtained by adding the indexed addable corners to `λ∪ρ`.
pub fn nu_of(f: &CornerFrame, sset: &BTreeSet<usize>) -> Result<Partition> {
    if sset.iter().any(|&j| j > f.d()) {
        return Err(Error::ParameterOutOfRange);
    }
    let cells: Vec<Cell> = sset.iter().map(|&j| f.addable[j]).collect();
    add_corners(&f.lambda.union(&f.rho), &cells)
}

/// Recovers the removable-corner indices from `μ`.
pub fn rset_of(f: &CornerFrame, mu: &Partition) -> Result<BTreeSet<usize>> {
    let meet = f.lambda.intersect(&f.rho);
    let rset: BTreeSet<usize> = (1..=f.d())
        .filter(|&i| {
            let c = f.removable[i - 1];
            mu.part(c.y) == c.x - 1
        })
        .collect();
    if mu_of(f, &rset)? == *mu {
        Ok(rset)
    } else {
        let _ = meet;
        Err(Error::NotDecomposable)
    }
}

/// Recovers the addable-corner indices from `ν`.
pub fn sset_of(f: &CornerFrame, nu: &Partition) -> Result<BTreeSet<usize>> {
    let sset: BTreeSet<usize> = (0..=f.d().min(usize::MAX))
        .take(f.d() + 1)
        .filter(|&j| {
            let c = f.addable[j];
            nu.part(c.y) == c.x
        })
        .collect();
    if nu_of(f, &sset)? == *nu {
        Ok(sset)
    } else {
        Err(Error::NotDecomposable)
    }
}

fn prob_from_points(
    f: &CornerFrame,
    p: &SubsetPair,
    outer_s: impl Fn(usize) -> MonomialQT,
    outer_r: impl Fn(usize) -> MonomialQT,
) -> Result<QTFactored> {
    let d = f.d();
    let mut acc = QTFactored::one();
    for &s in &p.sset {
        let ps = outer_s(s);
        for i in 1..=d {
            if !p.rset.contains(&i) {
                acc = acc.mul(&QTFactored::from_point_difference(&ps, &f.ibar(i))?);
            }
        }
        for j in 0..=d {
            if !p.sset.contains(&j) {
                acc = acc.div(&QTFactored::from_point_difference(&ps, &f.o(j))?)?;
            }
        }
    }
    for &r in &p.rset {
        let pr = outer_r(r);
        for j in 0..=d {
            if !p.sset.contains(&j) {
                acc = acc.mul(&QTFactored::from_point_difference(&pr, &f.o(j))?);
            }
        }
        for i in 1..=d {
            if !p.rset.contains(&i) {
                acc = acc.div(&QTFactored::from_point_difference(&pr, &f.ibar(i))?)?;
            }
        }
    }
    Ok(acc)
}

/// Forward transition probability of the local rule.
pub fn forward_prob(f: &CornerFrame, p: &SubsetPair) -> Result<QTFactored> {
    prob_from_points(f, p, |s| f.s(s), |r| f.r(r))
}

/// Backward transition probability of the local rule (outer points replaced
/// by their upper-left counterparts).
pub fn backward_prob(f: &CornerFrame, p: &SubsetPair) -> Result<QTFactored> {
    prob_from_points(f, p, |s| f.sbar(s), |r| f.ibar(r))
}

/// The lattice-path height exponents of the two complementary subsequences
/// of the word `D_0 U_1 D_1 … D_d U_d`: returns `(u_1..u_d, d_0..d_d)`
/// where `u_i` is the height at the start of the up step `U_i` and `d_j`
/// the height at the end of the down step `D_j`, with both paths shifted to
/// end on the axis.
pub fn tau_exponents(d: usize, rset: &BTreeSet<usize>, sset: &BTreeSet<usize>) -> (Vec<i64>, Vec<i64>) {
    let mut u = vec![0i64; d];
    let mut dd = vec![0i64; d + 1];
    // Each path is processed independently in word order; `selected` picks
    // the path containing U_r for r∈R and D_s for s∈S.
    for selected in [true, false] {
        let mut height = 0i64;
        let mut starts: Vec<(bool, usize, i64)> = Vec::new();
        for j in 0..=d {
            // Down step D_j.
            if sset.contains(&j) == selected {
                height -= 1;
                starts.push((false, j, height));
            }
            // Up step U_{j+1}.
            if j < d && (rset.contains(&(j + 1)) == selected) {
                starts.push((true, j + 1, height));
                height += 1;
            }
        }
        let shift = -height;
        for (is_up, idx, h) in starts {
            if is_up {
                u[idx - 1] = h + shift;
            } else {
                dd[idx] = h + shift;
            }
        }
    }
    (u, dd)
}

/// The monomial `τ = ∏ S_s^{d_s} ∏ R_r^{−u_r} ∏ O_j^{d_j} ∏ I_i^{−u_i}`;
/// equal to the monomial part of both transition probabilities.
pub fn tau_monomial(f: &CornerFrame, p: &SubsetPair) -> MonomialQT {
    let d = f.d();
    let (u, dd) = tau_exponents(d, &p.rset, &p.sset);
    let mut acc = MonomialQT::one();
    for j in 0..=d {
        // S_j and O_j are the same point, so membership only picks the name.
        acc = acc.mul(&f.s(j).pow(dd[j]));
    }
    for i in 1..=d {
        acc = acc.mul(&f.r_or_i(i, p).pow(-u[i - 1]));
    }
    acc
}

impl CornerFrame {
    fn r_or_i(&self, i: usize, p: &SubsetPair) -> MonomialQT {
        if p.rset.contains(&i) {
            self.r(i)
        } else {
            self.ibar(i)
        }
    }
}

/// Direction selector for the hook-length probability formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// The forward probability.
    Forward,
    /// The backward probability.
    Backward,
}

fn rows_of(cells: &BTreeSet<Cell>) -> BTreeSet<u32> {
    cells.iter().map(|c| c.y).collect()
}

fn cols_of(cells: &BTreeSet<Cell>) -> BTreeSet<u32> {
    cells.iter().map(|c| c.x).collect()
}

fn skew_cells(outer: &Partition, inner: &Partition) -> BTreeSet<Cell> {
    let mut out = BTreeSet::new();
    for y in 1..=outer.len() as u32 {
        for x in inner.part(y) + 1..=outer.part(y) {
            out.insert(Cell { x, y });
        }
    }
    out
}

/// Hook-length formulation of the transition probabilities: `τ·αβ/γ`
/// forward and `τ·ᾱβ̄/γ` backward.  Serves as an independent oracle.
pub fn alpha_beta_gamma_prob(
    f: &CornerFrame,
    p: &SubsetPair,
    direction: Direction,
) -> Result<QTFactored> {
    use crate::partition::{hook_lower, hook_upper};
    let la = &f.lambda;
    let rho = &f.rho;
    let meet = la.intersect(rho);
    let join = la.union(rho);
    let mu = mu_of(f, &p.rset)?;
    let nu = nu_of(f, &p.sset)?;

    // Row/column cell sets of the two relevant skew shapes; the sets below
    // are cells of the respective outer partitions.
    let upper = crate::partition::skew_cell_sets(&nu, &join)?;
    let lower = crate::partition::skew_cell_sets(&meet, &mu)?;
    let join_over_rho = crate::partition::skew_cell_sets(&join, rho)?;
    let join_over_la = crate::partition::skew_cell_sets(&join, la)?;
    let la_over_meet = crate::partition::skew_cell_sets(la, &meet)?;
    let rho_over_meet = crate::partition::skew_cell_sets(rho, &meet)?;

    // The swap between the forward and the backward variant exchanges lower
    // and upper hook lengths in α and β (γ is symmetric).
    let (hl, hu): (fn(&Partition, Cell) -> QTFactored, fn(&Partition, Cell) -> QTFactored) =
        match direction {
            Direction::Forward => (hook_lower, hook_upper),
            Direction::Backward => (hook_upper, hook_lower),
        };

    let mut acc = QTFactored::from_mono(tau_monomial(f, p));

    // α over the upper skew shape.
    for &c in upper.r_cells.difference(&join_over_rho.c_cells) {
        acc = acc.mul(&hl(la, c).div(&hl(&nu, c))?);
    }
    for &c in upper.c_cells.difference(&join_over_la.r_cells) {
        acc = acc.mul(&hu(rho, c).div(&hu(&nu, c))?);
    }
    // β over the lower skew shape.
    for &c in lower.r_cells.difference(&la_over_meet.c_cells) {
        acc = acc.mul(&hl(rho, c).div(&hl(&mu, c))?);
    }
    for &c in lower.c_cells.difference(&rho_over_meet.r_cells) {
        acc = acc.mul(&hu(la, c).div(&hu(&mu, c))?);
    }
    // 1/γ (direction independent).
    for &c in upper.r_cells.intersection(&lower.c_cells) {
        acc = acc.div(&hook_lower(la, c).mul(&hook_upper(la, c)))?;
    }
    for &c in upper.c_cells.intersection(&lower.r_cells) {
        acc = acc.div(&hook_lower(rho, c).mul(&hook_upper(rho, c)))?;
    }
    for &c in upper.r_cells.intersection(&upper.c_cells) {
        acc = acc.mul(&hook_lower(&nu, c).mul(&hook_upper(&nu, c)));
    }
    for &c in lower.r_cells.intersection(&lower.c_cells) {
        acc = acc.mul(&hook_lower(&mu, c).mul(&hook_upper(&mu, c)));
    }
    Ok(acc)
}

fn square_strips_ok(mu: &Partition, la: &Partition, rho: &Partition, nu: &Partition) -> Result<()> {
    if !is_horizontal_strip(mu, la) || !is_horizontal_strip(rho, nu) {
        return Err(Error::NotHorizontalStrip);
    }
    if !is_vertical_strip(mu, rho) || !is_vertical_strip(la, nu) {
        return Err(Error::NotVerticalStrip);
    }
    Ok(())
}

/// The weight ratio `ω_{λ,ρ}(μ)/ω̄_{λ,ρ}(ν) = ψ_{λ/μ}φ*_{ρ/μ} /
/// (ψ_{ν/ρ}φ*_{ν/λ})`, computed directly from the branching weights.
pub fn weight_ratio(
    mu: &Partition,
    la: &Partition,
    rho: &Partition,
    nu: &Partition,
) -> Result<QTFactored> {
    square_strips_ok(mu, la, rho, nu)?;
    psi(la, mu)?
        .mul(&phi_star(rho, mu)?)
        .div(&psi(nu, rho)?.mul(&phi_star(nu, la)?))
}

/// The same ratio computed from the reorganized four-product over the
/// lower and upper skew shapes; retained as a cross-check.
pub fn weight_ratio_reorganized(
    mu: &Partition,
    la: &Partition,
    rho: &Partition,
    nu: &Partition,
) -> Result<QTFactored> {
    square_strips_ok(mu, la, rho, nu)?;
    let meet = la.intersect(rho);
    let join = la.union(rho);
    let lower = crate::partition::skew_cell_sets(&meet, mu)?;
    let upper = crate::partition::skew_cell_sets(nu, &join)?;
    let la_over_meet = crate::partition::skew_cell_sets(la, &meet)?;
    let rho_over_meet = crate::partition::skew_cell_sets(rho, &meet)?;
    let join_over_rho = crate::partition::skew_cell_sets(&join, rho)?;
    let join_over_la = crate::partition::skew_cell_sets(&join, la)?;

    let mut acc = QTFactored::one();
    for &c in lower.r_cells.difference(&la_over_meet.c_cells) {
        acc = acc.mul(&b_ratio(mu, c).div(&b_ratio(rho, c))?);
    }
    for &c in lower.c_cells.difference(&rho_over_meet.r_cells) {
        acc = acc.mul(&b_ratio(la, c).div(&b_ratio(mu, c))?);
    }
    for &c in upper.r_cells.difference(&join_over_rho.c_cells) {
        acc = acc.mul(&b_ratio(nu, c).div(&b_ratio(la, c))?);
    }
    for &c in upper.c_cells.difference(&join_over_la.r_cells) {
        acc = acc.mul(&b_ratio(rho, c).div(&b_ratio(nu, c))?);
    }
    Ok(acc)
}

/// Per-cell contribution to the weight ratio, selected by the row/column
/// type of `c` with respect to the four disjoint skew pieces of the square:
/// `λ/(λ∩ρ)`, `ρ/(λ∩ρ)`, `(λ∩ρ)/μ` ("−") and `ν/(λ∪ρ)` ("+").
pub fn cell_weight_table(
    mu: &Partition,
    la: &Partition,
    rho: &Partition,
    nu: &Partition,
    c: Cell,
) -> Result<QTFactored> {
    square_strips_ok(mu, la, rho, nu)?;
    if !nu.contains_cell(c) {
        return Err(Error::CellOutsideShape);
    }
    let meet = la.intersect(rho);
    let join = la.union(rho);
    let piece_la = skew_cells(la, &meet);
    let piece_rho = skew_cells(rho, &meet);
    let piece_minus = skew_cells(&meet, mu);
    let piece_plus = skew_cells(nu, &join);

    let in_rows = |cells: &BTreeSet<Cell>| rows_of(cells).contains(&c.y);
    let in_cols = |cells: &BTreeSet<Cell>| cols_of(cells).contains(&c.x);

    if in_rows(&piece_rho) {
        return Ok(QTFactored::one());
    }
    if in_cols(&piece_la) {
        return Ok(QTFactored::one());
    }
    let row_key = (in_rows(&piece_minus), in_rows(&piece_plus));
    let col_key = (in_cols(&piece_minus), in_cols(&piece_plus));

    // Entry as (numerator shapes, denominator shapes) of cell weights b.
    #[derive(Clone, Copy)]
    enum Sh {
        Mu,
        La,
        Rho,
        Nu,
    }
    use Sh::*;
    let (num, den): (&[Sh], &[Sh]) = match (row_key, col_key) {
        ((false, false), (false, false)) => (&[], &[]),
        ((false, false), (true, false)) => (&[La], &[Mu]),
        ((false, false), (false, true)) => (&[Rho], &[Nu]),
        ((false, false), (true, true)) => (&[La, Rho], &[Mu, Nu]),
        ((true, false), (false, false)) => (&[Mu], &[Rho]),
        ((true, false), (true, false)) => (&[La], &[Rho]),
        ((true, false), (false, true)) => (&[Mu], &[Nu]),
        ((true, false), (true, true)) => (&[La], &[Nu]),
        ((false, true), (false, false)) => (&[Nu], &[La]),
        ((false, true), (true, false)) => (&[Nu], &[Mu]),
        ((false, true), (false, true)) => (&[Rho], &[La]),
        ((false, true), (true, true)) => (&[Rho], &[Mu]),
        ((true, true), (false, false)) => (&[Mu, Nu], &[La, Rho]),
        ((true, true), (true, false)) => (&[Nu], &[Rho]),
        ((true, true), (false, true)) => (&[Mu], &[La]),
        ((true, true), (true, true)) => (&[], &[]),
    };
    let shape = |s: &Sh| match s {
        Mu => mu,
        La => la,
        Rho => rho,
        Nu => nu,
    };
    let mut acc = QTFactored::one();
    for s in num {
        acc = acc.mul(&b_ratio(shape(s), c));
    }
    for s in den {
        acc = acc.div(&b_ratio(shape(s), c))?;
    }
    Ok(acc)
}

/// `shift(X,Y) = {i : |X ∩ [i+1,d]| > |Y ∩ [i+1,d]|}`.
fn shift_set(d: usize, x: &BTreeSet<usize>, y: &BTreeSet<usize>) -> BTreeSet<usize> {
    (0..=d)
        .filter(|&i| {
            let cx = x.iter().filter(|&&v| v > i && v <= d).count();
            let cy = y.iter().filter(|&&v| v > i && v <= d).count();
            cx > cy
        })
        .collect()
}

fn is_pure_q_power(m: &MonomialQT) -> bool {
    m.e_t == 0 && m.e_q >= 0
}

fn is_pure_t_power(m: &MonomialQT) -> bool {
    m.e_q == 0 && m.e_t >= 0
}

/// `1 − m` evaluated at `t = 0`: binomials still carrying `t` become 1.
fn one_minus_at_t0(m: &MonomialQT) -> Result<QTFactored> {
    if m.e_t > 0 {
        Ok(QTFactored::one())
    } else {
        QTFactored::one_minus_mono(m)
    }
}

/// `1 − m` evaluated at `q = 0`: binomials still carrying `q` become 1.
fn one_minus_at_q0(m: &MonomialQT) -> Result<QTFactored> {
    if m.e_q > 0 {
        Ok(QTFactored::one())
    } else {
        QTFactored::one_minus_mono(m)
    }
}

/// Closed form of the forward probability at `t = 0` (a function of `q`
/// alone); zero unless the shift set is covered by the aligned-row indices.
pub fn forward_prob_qwhittaker(f: &CornerFrame, p: &SubsetPair) -> Result<QTFactored> {
    let d = f.d();
    // The probability is τ times a ratio of binomials none of which vanish
    // at t = 0, so it vanishes there exactly when τ carries a power of t.
    if tau_monomial(f, p).e_t > 0 {
        return Ok(QTFactored::zero());
    }
    // Indices i with (i+1) ∈ R whose addable corner i shares a row with the
    // removable corner i+1, i.e. R_{i+1}/S_i is a pure power of q.
    let aligned: BTreeSet<usize> = (0..d)
        .filter(|&i| {
            p.rset.contains(&(i + 1)) && is_pure_q_power(&f.r(i + 1).div(&f.s(i)))
        })
        .collect();
    let shift = shift_set(d, &p.rset, &p.sset);
    let mut cover = aligned.clone();
    cover.insert(0);
    if !shift.is_subset(&cover) {
        return Ok(QTFactored::zero());
    }
    let mut acc = QTFactored::one();
    for &i in &p.sset {
        if i != 0 && !p.rset.contains(&i) {
            acc = acc.mul(&one_minus_at_t0(&f.s(i).div(&f.ibar(i)))?);
        }
    }
    for &i in aligned.difference(&p.sset) {
        acc = acc.mul(&one_minus_at_t0(&f.r(i + 1).div(&f.o(i)))?);
    }
    for &i in &aligned {
        if i != 0 && !p.rset.contains(&i) {
            acc = acc.div(&one_minus_at_t0(&f.r(i + 1).div(&f.ibar(i)))?)?;
        }
    }
    for &i in &shift {
        acc = acc.mul(&QTFactored::from_mono(f.r(i + 1).div(&f.s(i))));
    }
    Ok(acc)
}

/// Closed form of the forward probability at `q = 0` (a function of `t`
/// alone); zero unless the complementary shift set is covered by the
/// aligned-column indices.
pub fn forward_prob_hall_littlewood(f: &CornerFrame, p: &SubsetPair) -> Result<QTFactored> {
    let d = f.d();
    // As at t = 0: the probability vanishes at q = 0 exactly when the
    // monomial τ carries a power of q.
    if tau_monomial(f, p).e_q > 0 {
        return Ok(QTFactored::zero());
    }
    let rcomp: BTreeSet<usize> = (1..=d).filter(|i| !p.rset.contains(i)).collect();
    let scomp: BTreeSet<usize> = (0..=d).filter(|j| !p.sset.contains(j)).collect();
    // Indices i with (i+1) ∉ R whose addable corner i sits in the column
    // next to the removable corner i+1, i.e. I_{i+1}/O_i is a pure power of t.
    let aligned: BTreeSet<usize> = (0..d)
        .filter(|&i| {
            rcomp.contains(&(i + 1)) && is_pure_t_power(&f.ibar(i + 1).div(&f.o(i)))
        })
        .collect();
    let shift = shift_set(d, &rcomp, &scomp);
    if !shift.is_subset(&aligned) {
        return Ok(QTFactored::zero());
    }
    let mut acc = QTFactored::one();
    for &i in p.sset.intersection(&aligned) {
        acc = acc.mul(&one_minus_at_q0(&f.ibar(i + 1).div(&f.s(i)))?);
    }
    for &i in p.rset.difference(&p.sset) {
        acc = acc.mul(&one_minus_at_q0(&f.o(i).div(&f.r(i)))?);
    }
    for &i in p.rset.intersection(&aligned) {
        acc = acc.div(&one_minus_at_q0(&f.ibar(i + 1).div(&f.r(i)))?)?;
    }
    for &i in &shift {
        acc = acc.mul(&QTFactored::from_mono(f.ibar(i + 1).div(&f.o(i))));
    }
    Ok(acc)
}

fn f_indices(
    f: &CornerFrame,
    k: usize,
    mu: &Partition,
    map: impl Fn(usize) -> usize,
    fill: usize,
) -> Result<BTreeSet<usize>> {
    let rset = rset_of(f, mu)?;
    if rset.len() != k && rset.len() + 1 != k {
        return Err(Error::BadSubsetSizes);
    }
    let mut sset: BTreeSet<usize> = rset.iter().map(|&i| map(i)).collect();
    if rset.len() + 1 == k {
        sset.insert(fill);
    }
    Ok(sset)
}

/// Deterministic row bijection: each selected removable corner maps to the
/// next addable corner in a row above; when one more corner is needed, the
/// lowest addable corner is added.
pub fn f_row(la: &Partition, rho: &Partition, k: usize, mu: &Partition) -> Result<Partition> {
    let f = corner_frame(la, rho)?;
    let sset = f_indices(&f, k, mu, |i| i, 0)?;
    nu_of(&f, &sset)
}

/// Deterministic column bijection: each selected removable corner maps to
/// the next addable corner in a column to the right; when one more corner
/// is needed, the left-most (topmost) addable corner is added.
pub fn f_col(la: &Partition, rho: &Partition, k: usize, mu: &Partition) -> Result<Partition> {
    let f = corner_frame(la, rho)?;
    let d = f.d();
    let sset = f_indices(&f, k, mu, |i| i - 1, d)?;
    nu_of(&f, &sset)
}

/// Jack limit (`q = t^α`, `t → 1`) of the forward probability.
pub fn jack_forward_prob(f: &CornerFrame, p: &SubsetPair) -> Result<AlphaRational> {
    forward_prob(f, p)?.jack_limit()
}

/// Jack limit of the backward probability.
pub fn jack_backward_prob(f: &CornerFrame, p: &SubsetPair) -> Result<AlphaRational> {
    backward_prob(f, p)?.jack_limit()
}

/// The rational interpolation kernel: for `R, S ⊆ [0,d]` of equal size and
/// sequences `a_0..a_d`, `b_0..b_d` of pairwise distinct values,
/// `p′ = ∏_{i∉R} [∏_{j∈S}(a_j−b_i) / ∏_{j∈R}(b_j−b_i)] ·
///       ∏_{i∉S} [∏_{j∈R}(b_j−a_i) / ∏_{j∈S}(a_j−a_i)]`.
pub fn p_prime(
    a: &[Rat],
    b: &[Rat],
    rset: &BTreeSet<usize>,
    sset: &BTreeSet<usize>,
) -> Result<Rat> {
    let d = a.len() - 1;
    if b.len() != a.len() || rset.len() != sset.len() {
        return Err(Error::BadSubsetSizes);
    }
    let mut acc = Rat::one();
    for i in 0..=d {
        if !rset.contains(&i) {
            for j in sset {
                acc *= &a[*j] - &b[i];
            }
            for j in rset {
                let den = &b[*j] - &b[i];
                if den.is_zero() {
                    return Err(Error::DivideByZero);
                }
                acc /= den;
            }
        }
        if !sset.contains(&i) {
            for j in rset {
                acc *= &b[*j] - &a[i];
            }
            for j in sset {
                let den = &a[*j] - &a[i];
                if den.is_zero() {
                    return Err(Error::DivideByZero);
                }
                acc /= den;
            }
        }
    }
    Ok(acc)
}

/// The `b_0 → ∞` limit of [`p_prime`]: `b_0` drops out and the first
/// product runs over `[1,d] ∖ R` with `R ∩ [1,d]` in the inner products.
pub fn p_prime_limit(
    a: &[Rat],
    b: &[Rat],
    rset: &BTreeSet<usize>,
    sset: &BTreeSet<usize>,
) -> Result<Rat> {
    let d = a.len() - 1;
    if b.len() != a.len() || rset.len() != sset.len() {
        return Err(Error::BadSubsetSizes);
    }
    let mut acc = Rat::one();
    for i in 1..=d {
        if !rset.contains(&i) {
            for j in sset {
                acc *= &a[*j] - &b[i];
            }
            for j in rset {
                if *j == 0 {
                    continue;
                }
                let den = &b[*j] - &b[i];
                if den.is_zero() {
                    return Err(Error::DivideByZero);
                }
                acc /= den;
            }
        }
    }
    for i in 0..=d {
        if !sset.contains(&i) {
            for j in rset {
                if *j == 0 {
                    continue;
                }
                acc *= &b[*j] - &a[i];
            }
            for j in sset {
                let den = &a[*j] - &a[i];
                if den.is_zero() {
                    return Err(Error::DivideByZero);
                }
                acc /= den;
            }
        }
    }
    Ok(acc)
}

/// Evaluates the forward probability at `(q0, t0)` through the
/// interpolation kernel: `a_j = O_j`, `b_i = R_i` for selected indices and
/// `I_i` otherwise, with the index 0 adjoined to `R` when `|S| = |R| + 1`.
pub fn forward_prob_via_interpolation(
    f: &CornerFrame,
    p: &SubsetPair,
    q0: &Rat,
    t0: &Rat,
) -> Result<Rat> {
    let d = f.d();
    let mut a = Vec::with_capacity(d + 1);
    let mut b = Vec::with_capacity(d + 1);
    for j in 0..=d {
        a.push(f.o(j).eval(q0, t0)?);
    }
    b.push(Rat::zero()); // placeholder for the removed b_0
    for i in 1..=d {
        let pt = if p.rset.contains(&i) { f.r(i) } else { f.ibar(i) };
        b.push(pt.eval(q0, t0)?);
    }
    let mut rset = p.rset.clone();
    if p.sset.len() == p.rset.len() + 1 {
        rset.insert(0);
    }
    p_prime_limit(&a, &b, &rset, &p.sset)
}
