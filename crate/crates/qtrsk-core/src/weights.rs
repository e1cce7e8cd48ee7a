//! Branching coefficients, tableau weights, and finite-variable monomial
//! expansions of the Macdonald polynomials.
//!
//! The three weight families live on skew shapes: `psi` on horizontal
//! strips, `phi_star` on vertical strips, and `phi` on arbitrary skew
//! shapes (used on horizontal strips in the word-insertion setting).  All
//! are finite products of the cell weights `b_λ(c)` and stay in factored
//! form.  Tableaux are stored as shape chains, and the polynomial
//! expansions are computed by chain enumeration in finitely many variables.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{QTFactored, QTSum, Rat};
use crate::partition::{
    b_ratio, horizontal_strip_removals, is_horizontal_strip, is_vertical_strip, skew_cell_sets,
    vertical_strip_removals, Partition,
};
use crate::{Error, Result};

/// Strip discipline of a tableau chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TableauFlavor {
    /// Semistandard: each chain step is a horizontal strip.
    Ssyt,
    /// Dual semistandard: each chain step is a vertical strip.
    DualSsyt,
    /// Partial standard: each chain step has at most one cell.
    PartialSyt,
}

/// A tableau stored as its shape chain `∅ = T^(0) ⊆ … ⊆ T^(m)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tableau {
    chain: Vec<Partition>,
    flavor: TableauFlavor,
}

/// Counts of entries equal to `1..m`.
pub type ContentVector = Vec<u64>;

impl Tableau {
    /// Builds a tableau from its chain, validating the strip discipline.
    pub fn from_chain(chain: Vec<Partition>, flavor: TableauFlavor) -> Result<Tableau> {
        if chain.is_empty() || !chain[0].is_empty() {
            return Err(Error::Invalid("chain must start at the empty shape".into()));
        }
        for w in chain.windows(2) {
            let ok = match flavor {
                TableauFlavor::Ssyt => is_horizontal_strip(&w[0], &w[1]),
                TableauFlavor::DualSsyt => is_vertical_strip(&w[0], &w[1]),
                TableauFlavor::PartialSyt => {
                    w[1].contains(&w[0]) && w[1].size() - w[0].size() <= 1
                }
            };
            if !ok {
                return Err(match flavor {
                    TableauFlavor::Ssyt => Error::NotHorizontalStrip,
                    TableauFlavor::DualSsyt => Error::NotVerticalStrip,
                    TableauFlavor::PartialSyt => Error::Invalid(
                        "chain step has more than one cell".into(),
                    ),
                });
            }
        }
        Ok(Tableau { chain, flavor })
    }

    /// Builds a tableau from entry rows (row 1 = bottom row first); the
    /// number of chain steps is `m`, which must cover every entry.
    pub fn from_rows(rows: &[Vec<u32>], m: u32, flavor: TableauFlavor) -> Result<Tableau> {
        for row in rows {
            if row.iter().any(|&e| e == 0 || e > m) {
                return Err(Error::ParameterOutOfRange);
            }
        }
        let mut chain = Vec::with_capacity(m as usize + 1);
        for i in 0..=m {
            let mut parts: Vec<u32> = rows
                .iter()
                .map(|row| row.iter().filter(|&&e| e <= i).count() as u32)
                .collect();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            // Entries must be left-justified and weakly increasing per row
            // for the prefix counts to form partitions; `new` validates.
            chain.push(Partition::new(parts)?);
        }
        Tableau::from_chain(chain, flavor)
    }

    /// The shape chain including both endpoints.
    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    /// The strip discipline.
    pub fn flavor(&self) -> TableauFlavor {
        self.flavor
    }

    /// Number of chain steps `m` (largest allowed entry).
    pub fn steps(&self) -> u32 {
        (self.chain.len() - 1) as u32
    }

    /// The outer shape `T^(m)`.
    pub fn shape(&self) -> &Partition {
        self.chain.last().expect("nonempty chain")
    }

    /// The content vector: entry `i-1` counts the cells added at step `i`.
    pub fn content(&self) -> ContentVector {
        self.chain
            .windows(2)
            .map(|w| w[1].size() - w[0].size())
            .collect()
    }

    /// The entries of each row, bottom row first.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let shape = self.shape();
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.len()];
        for (i, w) in self.chain.windows(2).enumerate() {
            for y in 1..=w[1].len() as u32 {
                for _ in w[0].part(y)..w[1].part(y) {
                    rows[y as usize - 1].push(i as u32 + 1);
                }
            }
        }
        rows
    }
}

/// The weight `ψ_{λ/μ} = ∏ b_μ(c)/b_λ(c)` over the cells of `λ` that share
/// a row but not a column with a cell of `λ/μ`.
pub fn psi(la: &Partition, mu: &Partition) -> Result<QTFactored> {
    if !is_horizontal_strip(mu, la) {
        return Err(Error::NotHorizontalStrip);
    }
    let sets = skew_cell_sets(la, mu)?;
    let mut acc = QTFactored::one();
    for c in sets.r_cells.difference(&sets.c_cells) {
        acc = acc.mul(&b_ratio(mu, *c).div(&b_ratio(la, *c))?);
    }
    Ok(acc)
}

/// The weight `φ*_{ρ/μ} = ∏ b_ρ(c)/b_μ(c)` over the cells of `ρ` that share
/// a column but not a row with a cell of `ρ/μ`.
pub fn phi_star(rho: &Partition, mu: &Partition) -> Result<QTFactored> {
    if !is_vertical_strip(mu, rho) {
        return Err(Error::NotVerticalStrip);
    }
    let sets = skew_cell_sets(rho, mu)?;
    let mut acc = QTFactored::one();
    for c in sets.c_cells.difference(&sets.r_cells) {
        acc = acc.mul(&b_ratio(rho, *c).div(&b_ratio(mu, *c))?);
    }
    Ok(acc)
}

/// The weight `φ_{λ/μ} = ∏ b_λ(c)/b_μ(c)` over all cells of `λ` that share
/// a column with a cell of `λ/μ`.
pub fn phi(la: &Partition, mu: &Partition) -> Result<QTFactored> {
    if !la.contains(mu) {
        return Err(Error::NotContained);
    }
    let sets = skew_cell_sets(la, mu)?;
    let mut acc = QTFactored::one();
    for c in &sets.c_cells {
        acc = acc.mul(&b_ratio(la, *c).div(&b_ratio(mu, *c))?);
    }
    Ok(acc)
}

/// Which of the three weights a tableau weight multiplies along the chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// `ψ`, for semistandard chains.
    Psi,
    /// `φ*`, for dual semistandard chains.
    PhiStar,
    /// `φ`, for semistandard chains.
    Phi,
}

/// Product of the chosen weight along the chain of `T`.
pub fn tableau_weight(t: &Tableau, kind: WeightKind) -> Result<QTFactored> {
    let mut acc = QTFactored::one();
    for w in t.chain.windows(2) {
        let step = match kind {
            WeightKind::Psi => psi(&w[1], &w[0])?,
            WeightKind::PhiStar => phi_star(&w[1], &w[0])?,
            WeightKind::Phi => phi(&w[1], &w[0])?,
        };
        acc = acc.mul(&step);
    }
    Ok(acc)
}

/// All chains `∅ = T^(0) ⊆ … ⊆ T^(m) = λ` whose steps are horizontal
/// (`vertical = false`) or vertical strips, in increasing chain order.
pub fn chains_to(la: &Partition, m: u32, vertical: bool) -> Vec<Vec<Partition>> {
    fn rec(
        top: &Partition,
        steps_left: u32,
        vertical: bool,
        suffix: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if steps_left == 0 {
            if top.is_empty() {
                let mut chain = vec![top.clone()];
                chain.extend(suffix.iter().rev().cloned());
                out.push(chain);
            }
            return;
        }
        suffix.push(top.clone());
        for k in 0..=top.size() {
            let prevs = if vertical {
                vertical_strip_removals(top, k)
            } else {
                horizontal_strip_removals(top, k)
            };
            for prev in prevs {
                rec(&prev, steps_left - 1, vertical, suffix, out);
            }
        }
        suffix.pop();
    }
    let mut out = Vec::new();
    let mut suffix = Vec::new();
    rec(la, m, vertical, &mut suffix, &mut out);
    out.sort();
    out
}

/// All tableaux of the given outer shape with entries at most `m`.
pub fn tableaux_of_shape(la: &Partition, m: u32, flavor: TableauFlavor) -> Vec<Tableau> {
    let vertical = matches!(flavor, TableauFlavor::DualSsyt);
    let chains = match flavor {
        TableauFlavor::Ssyt | TableauFlavor::DualSsyt => chains_to(la, m, vertical),
        TableauFlavor::PartialSyt => chains_to(la, m, false)
            .into_iter()
            .filter(|ch| ch.windows(2).all(|w| w[1].size() - w[0].size() <= 1))
            .collect(),
    };
    chains
        .into_iter()
        .map(|chain| Tableau { chain, flavor })
        .collect()
}

fn expansion_kind(kind: WeightKind) -> TableauFlavor {
    match kind {
        WeightKind::Psi | WeightKind::Phi => TableauFlavor::Ssyt,
        WeightKind::PhiStar => TableauFlavor::DualSsyt,
    }
}

/// Monomial expansion of the chain-weight generating polynomial in `m`
/// variables: maps each content vector to the exact coefficient sum.
/// `Psi` gives the Macdonald `P_λ`, `Phi` gives `Q_λ`, and `PhiStar` gives
/// the conjugate expansion (equal to `P_{λ′}` with q and t swapped).
pub fn expansion(la: &Partition, m: u32, kind: WeightKind) -> Result<BTreeMap<ContentVector, QTSum>> {
    let mut terms: BTreeMap<ContentVector, Vec<QTFactored>> = BTreeMap::new();
    for t in tableaux_of_shape(la, m, expansion_kind(kind)) {
        terms
            .entry(t.content())
            .or_default()
            .push(tableau_weight(&t, kind)?);
    }
    Ok(terms
        .into_iter()
        .map(|(content, ws)| (content, QTSum::from_terms(&ws)))
        .collect())
}

/// Like [`expansion`], but with every coefficient evaluated at `(q0, t0)`.
pub fn expansion_eval(
    la: &Partition,
    m: u32,
    kind: WeightKind,
    q0: &Rat,
    t0: &Rat,
) -> Result<BTreeMap<ContentVector, Rat>> {
    use num_traits::Zero;
    let mut out: BTreeMap<ContentVector, Rat> = BTreeMap::new();
    for t in tableaux_of_shape(la, m, expansion_kind(kind)) {
        let w = tableau_weight(&t, kind)?.eval(q0, t0)?;
        let slot = out.entry(t.content()).or_insert_with(Rat::zero);
        *slot += w;
    }
    Ok(out)
}
