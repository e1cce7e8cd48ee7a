//! The named verification suites behind `qtrsk verify`.
//!
//! Every suite runs exact checks (rational arithmetic, cross-multiplied
//! equality) over either pinned scenarios or exhaustive sweeps bounded by the
//! command-line flags, and returns a [`VerificationReport`].

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;

use qtrsk_core::algebra::{
    qt_sum_equals, rat, AlphaPoly, AlphaRational, LimitDirection, MonomialQT, QTFactored, QTSum,
    Rat,
};
use num_traits::{One, Zero};

use qtrsk_core::growth::{
    classical_dual_rsk, classical_insert, enumerate_growths, forward_distribution,
    forward_growth_terms, growth_insert, growth_prob, jack_swap_check, p_marginal,
    partial_config_ratio_holds, qrst_word_insert, transpose_symmetry_check,
    word_commutation_identity_holds, ClassicalVariant, DistValue, Distribution, InsertRule,
    Matrix01, PartialConfig, SplitMix64, ValueMode,
};
use qtrsk_core::growth::{commutation_identity_holds, partial_config_distribution};
use qtrsk_core::local::{
    all_subset_pairs, alpha_beta_gamma_prob, backward_prob, cell_weight_table, corner_frame, f_col,
    f_row, forward_prob, forward_prob_hall_littlewood, forward_prob_qwhittaker,
    forward_prob_via_interpolation, jack_forward_prob, mu_of, nu_of, p_prime, tau_exponents,
    tau_monomial, weight_ratio, weight_ratio_reorganized, CornerFrame, Direction, SubsetPair,
};
use qtrsk_core::partition::{
    d_k, is_compatible_pair, is_horizontal_strip, partitions_of_size, partitions_up_to, u_k,
    vertical_strip_additions,
};
use qtrsk_core::weights::{
    phi_star, psi, tableau_weight, tableaux_of_shape, ContentVector, Tableau, TableauFlavor,
    WeightKind,
};
use qtrsk_core::{Cell, Partition};

use crate::report::{finish, run_suite, Check, VerificationReport};
use crate::text::render_tableau;

/// Size and seed bounds passed from the command line; `None` means the
/// per-suite default.
#[derive(Debug, Clone, Default)]
pub struct Bounds {
    /// Bound on `|λ∪ρ|` (or `|ν|` for the two-cell configuration suite).
    pub max_cells: Option<u32>,
    /// Bound on matrix row count.
    pub rows: Option<usize>,
    /// Bound on matrix column count.
    pub cols: Option<usize>,
    /// Seed for randomized parameter sets.
    pub seed: Option<u64>,
    /// Optional extra evaluation point `(q0, t0)`.
    pub eval: Option<(Rat, Rat)>,
}

/// All suite names accepted by `qtrsk verify`.
pub const SUITE_NAMES: &[&str] = &[
    "table1",
    "table2-jack",
    "example-4-2",
    "example-3-5",
    "example-4-14",
    "example-words",
    "dual-rsk-ex-2-1",
    "sum-to-one",
    "compatibility",
    "commutation",
    "commutation-words",
    "cauchy",
    "pieri",
    "interpolation",
    "tau-paths",
    "abc-oracle",
    "cell-weights",
    "specializations",
    "limits-rsk",
    "inversion-symmetry",
    "transpose-symmetry",
    "jack-swap",
    "appendix",
];

/// Runs the suite with the given name.
pub fn run(name: &str, b: &Bounds) -> Result<VerificationReport, String> {
    match name {
        "table1" => Ok(table1()),
        "table2-jack" => Ok(table2_jack()),
        "example-4-2" => Ok(example_4_2()),
        "example-3-5" => Ok(example_3_5()),
        "example-4-14" => Ok(example_4_14()),
        "example-words" => Ok(example_words()),
        "dual-rsk-ex-2-1" => Ok(dual_rsk_ex_2_1()),
        "sum-to-one" => Ok(sum_to_one(b)),
        "compatibility" => Ok(compatibility(b)),
        "commutation" => Ok(commutation(b)),
        "commutation-words" => Ok(commutation_words(b)),
        "cauchy" => Ok(cauchy(b)),
        "pieri" => Ok(pieri(b)),
        "interpolation" => Ok(interpolation(b)),
        "tau-paths" => Ok(tau_paths(b)),
        "abc-oracle" => Ok(abc_oracle(b)),
        "cell-weights" => Ok(cell_weights(b)),
        "specializations" => Ok(specializations(b)),
        "limits-rsk" => Ok(limits_rsk(b)),
        "inversion-symmetry" => Ok(inversion_symmetry(b)),
        "transpose-symmetry" => Ok(transpose_symmetry(b)),
        "jack-swap" => Ok(jack_swap(b)),
        "appendix" => Ok(appendix(b)),
        other => Err(format!(
            "unknown suite `{other}`; expected one of: {}",
            SUITE_NAMES.join(", ")
        )),
    }
}

// ---------------------------------------------------------------------------
// shared helpers
// ---------------------------------------------------------------------------

fn p(parts: &[u32]) -> Partition {
    Partition::of(parts)
}

fn mat(s: &str) -> Matrix01 {
    s.parse().expect("valid matrix literal")
}

fn tab(rows: &[&[u32]], m: u32, flavor: TableauFlavor) -> Tableau {
    let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
    Tableau::from_rows(&rows, m, flavor).expect("valid tableau literal")
}

/// `sign · q^eq t^et · Π num / Π den` over binomial factors `1 - q^a t^b`.
fn factored(sign: i64, eq: i64, et: i64, num: &[(u32, u32)], den: &[(u32, u32)]) -> QTFactored {
    let mut acc =
        QTFactored::from_parts(rat(sign, 1), MonomialQT::new(eq, et), []).expect("nonzero sign");
    for &(a, b) in num {
        acc = acc.mul(&QTFactored::binomial(a, b));
    }
    for &(a, b) in den {
        acc = acc.div(&QTFactored::binomial(a, b)).expect("nonzero binomial");
    }
    acc
}

fn alpha_frac(num: AlphaPoly, den: AlphaPoly) -> AlphaRational {
    AlphaRational::new(num, den).expect("nonzero denominator")
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
        out.push(Matrix01::new(rows).expect("0/1 rows"));
    }
    out
}

fn boundary_weight(pt: &Tableau, qt: &Tableau) -> QTFactored {
    tableau_weight(pt, WeightKind::Psi)
        .expect("ssyt weight")
        .mul(&tableau_weight(qt, WeightKind::PhiStar).expect("dual ssyt weight"))
}

fn pad_tableau(t: &Tableau, steps: usize) -> Tableau {
    let mut chain = t.chain().to_vec();
    while chain.len() < steps + 1 {
        chain.push(chain.last().expect("nonempty chain").clone());
    }
    Tableau::from_chain(chain, t.flavor()).expect("padded chain")
}

/// All compatible shape pairs `(λ, ρ)` with `|λ∪ρ| ≤ max_cells`.
fn compatible_pairs(max_cells: u32) -> Vec<(Partition, Partition)> {
    let shapes = partitions_up_to(max_cells);
    let mut out = Vec::new();
    for la in &shapes {
        for rho in &shapes {
            if la.union(rho).size() <= max_cells as u64 && is_compatible_pair(la, rho) {
                out.push((la.clone(), rho.clone()));
            }
        }
    }
    out
}

fn frame_label(f: &CornerFrame) -> String {
    format!("la={} rho={}", f.lambda(), f.rho())
}

fn set_label(s: &BTreeSet<usize>) -> String {
    let inner = s
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("{{{inner}}}")
}

fn pair_label(f: &CornerFrame, pr: &SubsetPair) -> String {
    format!(
        "{} R={} S={}",
        frame_label(f),
        set_label(pr.rset()),
        set_label(pr.sset())
    )
}

fn qtf_str(x: &QTFactored) -> String {
    format!("{x}")
}

/// Checks that a factored value equals a pinned one by expanded
/// cross-multiplication, reporting both renderings on mismatch.
fn check_qtf(input: String, got: &QTFactored, want: &QTFactored) -> Check {
    let holds = QTSum::from_factored(got).equals(&QTSum::from_factored(want));
    Check::eq(input, holds, qtf_str(want), qtf_str(got))
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

fn pair_key(pt: &Tableau, qt: &Tableau) -> String {
    format!("P={} Q={}", render_tableau(pt), render_tableau(qt))
}

// ---------------------------------------------------------------------------
// pinned-scenario suites
// ---------------------------------------------------------------------------

/// Nine forward probabilities of the three reference 2×3 matrices against the
/// three boundary pairs, plus the three boundary weights.
fn table1() -> VerificationReport {
    let start = Instant::now();
    let pairs = table1_pairs();
    let expect: [[Option<QTFactored>; 3]; 3] = [
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
    let mut checks = Vec::new();
    for (a, row) in table1_matrices().iter().zip(&expect) {
        match forward_distribution(a, &ValueMode::QtExact) {
            Ok(dist) => {
                for (pair, want) in pairs.iter().zip(row) {
                    let input = format!("A={a} {}", pair_key(&pair.0, &pair.1));
                    let got = dist.qt_value(pair).expect("exact mode");
                    match want {
                        Some(v) => checks.push(Check::eq(
                            input,
                            got.equals_factored(v),
                            qtf_str(v),
                            crate::text::render_qtsum(&got),
                        )),
                        None => checks.push(Check::eq(
                            input,
                            got.is_zero() && dist.get(pair).is_none(),
                            "0 (outcome unreachable)",
                            crate::text::render_qtsum(&got),
                        )),
                    }
                }
            }
            Err(e) => checks.push(Check::fail(format!("A={a}"), "a distribution", format!("{e:?}"))),
        }
    }
    let weights = [
        factored(1, 0, 0, &[(2, 0), (1, 2)], &[(1, 1), (2, 1)]),
        factored(1, 0, 0, &[(1, 0), (0, 2)], &[(0, 1), (1, 1)]),
        factored(1, 0, 0, &[(0, 1), (3, 0)], &[(1, 0), (2, 1)]),
    ];
    for (pair, want) in pairs.iter().zip(&weights) {
        let input = format!("weight {}", pair_key(&pair.0, &pair.1));
        checks.push(check_qtf(input, &boundary_weight(&pair.0, &pair.1), want));
    }
    finish("table1", start, checks)
}

/// Jack limits of the reference table and the row normalization in Q(α).
fn table2_jack() -> VerificationReport {
    let start = Instant::now();
    let pairs = table1_pairs();
    let expect: [[AlphaRational; 3]; 3] = [
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
    let mut checks = Vec::new();
    for (a, row) in table1_matrices().iter().zip(&expect) {
        match forward_distribution(a, &ValueMode::Alpha) {
            Ok(dist) => {
                for (pair, want) in pairs.iter().zip(row) {
                    let input = format!("A={a} {}", pair_key(&pair.0, &pair.1));
                    let got = dist.alpha_value(pair).expect("alpha mode");
                    checks.push(Check::eq(input, got == *want, format!("{want}"), format!("{got}")));
                }
                let mut sum = AlphaRational::zero();
                for v in dist.support().values() {
                    if let DistValue::Alpha(x) = v {
                        sum = sum.add(x);
                    }
                }
                checks.push(Check::eq(
                    format!("A={a} row sum"),
                    sum.is_one(),
                    "1",
                    format!("{sum}"),
                ));
            }
            Err(e) => checks.push(Check::fail(format!("A={a}"), "a distribution", format!("{e:?}"))),
        }
    }
    finish("table2-jack", start, checks)
}

/// Three forward transition probabilities of the square with λ = ρ = (2,1).
fn example_4_2() -> VerificationReport {
    let start = Instant::now();
    let t = p(&[2, 1]);
    let f = corner_frame(&t, &t).expect("compatible");
    let cases: [(&[usize], &[usize], QTFactored); 3] = [
        (
            &[2],
            &[0, 1],
            factored(1, 1, 0, &[(0, 1), (0, 1), (1, 0)], &[(2, 2), (1, 1), (2, 0)]),
        ),
        (
            &[2],
            &[1, 2],
            factored(1, 0, 1, &[(1, 0), (2, 1), (2, 1)], &[(1, 1), (2, 2), (2, 0)]),
        ),
        (
            &[2],
            &[0, 2],
            factored(1, 0, 0, &[(0, 1), (2, 1), (1, 0)], &[(1, 1), (1, 1), (2, 0)]),
        ),
    ];
    let mut checks = Vec::new();
    for (rset, sset, want) in &cases {
        let pr = SubsetPair::new(
            &f,
            rset.iter().copied().collect(),
            sset.iter().copied().collect(),
        )
        .expect("valid subset pair");
        let input = pair_label(&f, &pr);
        match forward_prob(&f, &pr) {
            Ok(got) => checks.push(check_qtf(input, &got, want)),
            Err(e) => checks.push(Check::fail(input, qtf_str(want), format!("{e:?}"))),
        }
    }
    finish("example-4-2", start, checks)
}

/// The four branching weights of the hook-plus-rectangle pair at h=8, v=4,
/// together with the weighted-set identity they satisfy.
fn example_3_5() -> VerificationReport {
    let start = Instant::now();
    // λ = (h^v, 1), ρ = (h+1, h^{v-1}) with h = 8, v = 4.
    let la = p(&[8, 8, 8, 8, 1]);
    let rho = p(&[9, 8, 8, 8]);
    let mut checks = Vec::new();

    let mut down: Vec<(Partition, QTFactored)> = Vec::new();
    for k in [0usize, 1] {
        for mu in d_k(&la, &rho, k).expect("compatible") {
            let w = psi(&la, &mu)
                .expect("horizontal strip")
                .mul(&phi_star(&rho, &mu).expect("vertical strip"));
            down.push((mu, w));
        }
    }
    let mut up: Vec<(Partition, QTFactored)> = Vec::new();
    for nu in u_k(&la, &rho, 1).expect("compatible") {
        let w = psi(&nu, &rho)
            .expect("horizontal strip")
            .mul(&phi_star(&nu, &la).expect("vertical strip"));
        up.push((nu, w));
    }

    let down_want = [
        QTFactored::one(),
        // (1-t^{v-1})(1-q^{h-1}) / ((1-q t^{v-2})(1-q^{h-2} t))
        factored(1, 0, 0, &[(0, 3), (7, 0)], &[(1, 2), (6, 1)]),
    ];
    let up_want = [
        // (1-t^{v-1})(1-q^h t^{v-2}) / ((1-q t^{v-2})(1-q^{h-1} t^{v-1}))
        factored(1, 0, 0, &[(0, 3), (8, 2)], &[(1, 2), (7, 3)]),
        // (1-q^{h-2} t^v)(1-q^{h-1}) / ((1-q^{h-2} t)(1-q^{h-1} t^{v-1}))
        factored(1, 0, 0, &[(6, 4), (7, 0)], &[(6, 1), (7, 3)]),
    ];
    checks.push(Check::eq(
        "shrink side: shape count",
        down.len() == 2,
        "2",
        down.len().to_string(),
    ));
    checks.push(Check::eq(
        "grow side: shape count",
        up.len() == 2,
        "2",
        up.len().to_string(),
    ));
    for want in &down_want {
        let hits = down
            .iter()
            .filter(|(_, w)| QTSum::from_factored(w).equals(&QTSum::from_factored(want)))
            .count();
        checks.push(Check::eq(
            format!("shrink-side weight {want}"),
            hits == 1,
            "exactly one match",
            format!("{hits} matches"),
        ));
    }
    for want in &up_want {
        let hits = up
            .iter()
            .filter(|(_, w)| QTSum::from_factored(w).equals(&QTSum::from_factored(want)))
            .count();
        checks.push(Check::eq(
            format!("grow-side weight {want}"),
            hits == 1,
            "exactly one match",
            format!("{hits} matches"),
        ));
    }
    // Both sides of the k = 1 weighted-set identity agree.
    let lhs: Vec<QTFactored> = down.iter().map(|(_, w)| w.clone()).collect();
    let rhs: Vec<QTFactored> = up.iter().map(|(_, w)| w.clone()).collect();
    let lhs_sum = QTSum::from_terms(&lhs);
    let rhs_sum = QTSum::from_terms(&rhs);
    checks.push(Check::eq(
        "weighted-set identity la=8,8,8,8,1 rho=9,8,8,8 k=1",
        lhs_sum.equals(&rhs_sum),
        crate::text::render_qtsum(&rhs_sum),
        crate::text::render_qtsum(&lhs_sum),
    ));
    finish("example-3-5", start, checks)
}

/// The four outcomes of randomized insertion of {2,3} into P = 1,2;3.
fn example_4_14() -> VerificationReport {
    let start = Instant::now();
    let t = tab(&[&[1, 2], &[3]], 3, TableauFlavor::Ssyt);
    let cases = [
        (
            tab(&[&[1, 2, 2], &[3, 3]], 3, TableauFlavor::Ssyt),
            factored(1, 0, 0, &[(1, 1)], &[(2, 1)]),
        ),
        (
            tab(&[&[1, 2, 3], &[2, 3]], 3, TableauFlavor::Ssyt),
            factored(
                1,
                2,
                1,
                &[(1, 0), (1, 0), (0, 1), (0, 1)],
                &[(1, 1), (2, 0), (2, 1), (2, 2)],
            ),
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
    let mut checks = Vec::new();
    match growth_insert(&t, &[2, 3], InsertRule::Qt, &ValueMode::QtExact) {
        Ok(dist) => {
            checks.push(Check::eq(
                "outcome count for insert {2,3} into 1,2;3",
                dist.len() == cases.len(),
                cases.len().to_string(),
                dist.len().to_string(),
            ));
            for (key, want) in &cases {
                let input = format!("insert {{2,3}} into 1,2;3 -> {}", render_tableau(key));
                let got = dist.qt_value(key).expect("exact mode");
                checks.push(Check::eq(
                    input,
                    got.equals_factored(want),
                    qtf_str(want),
                    crate::text::render_qtsum(&got),
                ));
            }
        }
        Err(e) => checks.push(Check::fail("insert {2,3} into 1,2;3", "a distribution", format!("{e:?}"))),
    }
    finish("example-4-14", start, checks)
}

/// The four outcomes of word insertion of the value 2 into P = 1,1,2,3;2.
fn example_words() -> VerificationReport {
    let start = Instant::now();
    let t = tab(&[&[1, 1, 2, 3], &[2]], 3, TableauFlavor::Ssyt);
    let cases = [
        (
            tab(&[&[1, 1, 2, 3], &[2, 2]], 3, TableauFlavor::Ssyt),
            factored(1, 1, 1, &[(1, 0)], &[(2, 1)]),
        ),
        (
            tab(&[&[1, 1, 2, 2, 3], &[2]], 3, TableauFlavor::Ssyt),
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
    let mut checks = Vec::new();
    match qrst_word_insert(&t, 2, &ValueMode::QtExact) {
        Ok(dist) => {
            checks.push(Check::eq(
                "outcome count for word-insert 2 into 1,1,2,3;2",
                dist.len() == cases.len(),
                cases.len().to_string(),
                dist.len().to_string(),
            ));
            for (key, want) in &cases {
                let input = format!("word-insert 2 into 1,1,2,3;2 -> {}", render_tableau(key));
                let got = dist.qt_value(key).expect("exact mode");
                checks.push(Check::eq(
                    input,
                    got.equals_factored(want),
                    qtf_str(want),
                    crate::text::render_qtsum(&got),
                ));
            }
        }
        Err(e) => checks.push(Check::fail(
            "word-insert 2 into 1,1,2,3;2",
            "a distribution",
            format!("{e:?}"),
        )),
    }
    finish("example-words", start, checks)
}

/// Classical dual-RSK reference scenarios: the pinned column-insertion image,
/// the growth-diagram replay, and the three-growth matrix.
fn dual_rsk_ex_2_1() -> VerificationReport {
    let start = Instant::now();
    let mut checks = Vec::new();
    let a = mat("10001;11010;01100");
    let want_p = tab(&[&[1, 1, 2, 2], &[2, 3], &[3]], 3, TableauFlavor::Ssyt);
    let want_q = tab(&[&[1, 2, 4, 5], &[1, 3], &[2]], 5, TableauFlavor::DualSsyt);
    match classical_dual_rsk(&a, ClassicalVariant::Column) {
        Ok((pt, qt)) => {
            checks.push(Check::eq(
                format!("column dual RSK of {a}: P"),
                pt == want_p,
                render_tableau(&want_p),
                render_tableau(&pt),
            ));
            checks.push(Check::eq(
                format!("column dual RSK of {a}: Q"),
                qt == want_q,
                render_tableau(&want_q),
                render_tableau(&qt),
            ));
            // Growth diagram agrees with column-by-column insertion.
            let mut acc =
                Tableau::from_chain(vec![Partition::empty()], TableauFlavor::Ssyt).expect("empty");
            for j in 0..a.n() {
                let values: Vec<u32> = (0..a.m())
                    .filter(|&i| a.entry(i, j) == 1)
                    .map(|i| i as u32 + 1)
                    .collect();
                if !values.is_empty() {
                    acc = classical_insert(&acc, &values, InsertRule::FCol).expect("insert");
                }
            }
            checks.push(Check::eq(
                format!("column-insert replay of {a}"),
                pad_tableau(&acc, a.m()) == pt,
                render_tableau(&pt),
                render_tableau(&pad_tableau(&acc, a.m())),
            ));
        }
        Err(e) => checks.push(Check::fail(format!("{a}"), "a tableau pair", format!("{e:?}"))),
    }
    let three = mat("010;101;111");
    match enumerate_growths(&three) {
        Ok(growths) => checks.push(Check::eq(
            format!("growth count of {three}"),
            growths.len() == 3,
            "3",
            growths.len().to_string(),
        )),
        Err(e) => checks.push(Check::fail(format!("{three}"), "3 growths", format!("{e:?}"))),
    }
    finish("dual-rsk-ex-2-1", start, checks)
}

// ---------------------------------------------------------------------------
// exhaustive sweeps over corner frames
// ---------------------------------------------------------------------------

/// Forward sums over destinations and backward sums over sources are 1.
fn sum_to_one(b: &Bounds) -> VerificationReport {
    let frames = compatible_pairs(b.max_cells.unwrap_or(8));
    run_suite("sum-to-one", frames, |(la, rho)| {
        let f = corner_frame(la, rho).expect("compatible");
        let input = frame_label(&f);
        let d = f.d();
        let pairs = all_subset_pairs(&f);
        for rbits in 0u32..1 << d {
            let rset: BTreeSet<usize> = (1..=d).filter(|i| rbits >> (i - 1) & 1 == 1).collect();
            for k in [rset.len(), rset.len() + 1] {
                if k > d + 1 {
                    continue;
                }
                let terms: Vec<QTFactored> = pairs
                    .iter()
                    .filter(|pr| pr.rset() == &rset && pr.sset().len() == k)
                    .map(|pr| forward_prob(&f, pr).expect("forward"))
                    .collect();
                if !qt_sum_equals(&terms, &QTFactored::one()) {
                    return Check::fail(
                        format!("{input} forward R={} k={k}", set_label(&rset)),
                        "sum 1",
                        crate::text::render_qtsum(&QTSum::from_terms(&terms)),
                    );
                }
            }
        }
        for sbits in 0u32..1 << (d + 1) {
            let sset: BTreeSet<usize> = (0..=d).filter(|j| sbits >> j & 1 == 1).collect();
            let terms: Vec<QTFactored> = pairs
                .iter()
                .filter(|pr| pr.sset() == &sset)
                .map(|pr| backward_prob(&f, pr).expect("backward"))
                .collect();
            if !qt_sum_equals(&terms, &QTFactored::one()) {
                return Check::fail(
                    format!("{input} backward S={}", set_label(&sset)),
                    "sum 1",
                    crate::text::render_qtsum(&QTSum::from_terms(&terms)),
                );
            }
        }
        Check::pass(input)
    })
}

/// Weight compatibility `ω(μ)·P = P̄·ω̄(ν)` on every square and subset pair.
fn compatibility(b: &Bounds) -> VerificationReport {
    let frames = compatible_pairs(b.max_cells.unwrap_or(8));
    run_suite("compatibility", frames, |(la, rho)| {
        let f = corner_frame(la, rho).expect("compatible");
        let input = frame_label(&f);
        for pr in all_subset_pairs(&f) {
            let mu = mu_of(&f, pr.rset()).expect("mu");
            let nu = nu_of(&f, pr.sset()).expect("nu");
            let omega = psi(la, &mu).expect("psi").mul(&phi_star(rho, &mu).expect("phi*"));
            let omega_bar = psi(&nu, rho).expect("psi").mul(&phi_star(&nu, la).expect("phi*"));
            let lhs = omega.mul(&forward_prob(&f, &pr).expect("forward"));
            let rhs = backward_prob(&f, &pr).expect("backward").mul(&omega_bar);
            if lhs != rhs {
                return Check::fail(pair_label(&f, &pr), qtf_str(&rhs), qtf_str(&lhs));
            }
        }
        Check::pass(input)
    })
}

/// The graded weighted-set identity between shrink and grow branchings.
fn commutation(b: &Bounds) -> VerificationReport {
    let frames = compatible_pairs(b.max_cells.unwrap_or(8));
    run_suite("commutation", frames, |(la, rho)| {
        let input = format!("la={la} rho={rho}");
        let d = corner_frame(la, rho).expect("compatible").d();
        for k in 0..=d + 1 {
            match commutation_identity_holds(la, rho, k) {
                Ok(true) => {}
                Ok(false) => return Check::fail(format!("{input} k={k}"), "equal sums", "unequal sums"),
                Err(e) => return Check::fail(format!("{input} k={k}"), "equal sums", format!("{e:?}")),
            }
        }
        Check::pass(input)
    })
}

/// The word-restricted variant of the weighted-set identity.
fn commutation_words(b: &Bounds) -> VerificationReport {
    let max = b.max_cells.unwrap_or(8);
    let shapes = partitions_up_to(max);
    let mut items = Vec::new();
    for la in &shapes {
        for rho in &shapes {
            if la.union(rho).size() <= max as u64 {
                items.push((la.clone(), rho.clone()));
            }
        }
    }
    run_suite("commutation-words", items, |(la, rho)| {
        let input = format!("la={la} rho={rho}");
        for k in 0..=3u64 {
            match word_commutation_identity_holds(la, rho, k) {
                Ok(true) => {}
                Ok(false) => return Check::fail(format!("{input} k={k}"), "equal sums", "unequal sums"),
                Err(e) => return Check::fail(format!("{input} k={k}"), "equal sums", format!("{e:?}")),
            }
        }
        Check::pass(input)
    })
}

/// The quantities entering the dual product identity: coefficientwise checks
/// at seeded points plus the exact refined sum identities.
fn cauchy(b: &Bounds) -> VerificationReport {
    let start = Instant::now();
    let max_m = b.rows.unwrap_or(3);
    let max_n = b.cols.unwrap_or(3);
    let mut points = vec![
        (rat(3, 8), rat(5, 7)),
        (rat(2, 9), rat(7, 4)),
        (rat(9, 2), rat(5, 3)),
    ];
    if let Some((q0, t0)) = &b.eval {
        points.push((q0.clone(), t0.clone()));
    }
    let mut checks: Vec<Check> = Vec::new();

    // Coefficientwise: the weight generating function grouped by contents
    // matches the number of 0/1-matrices with those margins.
    let mut content_items = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            for (q0, t0) in &points {
                content_items.push((m as u32, n as u32, q0.clone(), t0.clone()));
            }
        }
    }
    let content_checks: Vec<Check> = content_items
        .par_iter()
        .map(|(m, n, q0, t0)| {
            let input = format!("contents m={m} n={n} q={q0} t={t0}");
            let mut counts: BTreeMap<(Vec<u64>, Vec<u64>), Rat> = BTreeMap::new();
            for a in all_matrices(*m as usize, *n as usize) {
                let e = counts
                    .entry((a.row_sums(), a.col_sums()))
                    .or_insert_with(Rat::zero);
                *e += Rat::one();
            }
            let mut sums: BTreeMap<(Vec<u64>, Vec<u64>), Rat> = BTreeMap::new();
            for size in 0..=(m * n) {
                for shape in partitions_of_size(size) {
                    let ps = tableaux_of_shape(&shape, *m, TableauFlavor::Ssyt);
                    let qs = tableaux_of_shape(&shape, *n, TableauFlavor::DualSsyt);
                    for pt in &ps {
                        for qt in &qs {
                            let w = match boundary_weight(pt, qt).eval(q0, t0) {
                                Ok(w) => w,
                                Err(e) => {
                                    return Check::fail(input, "a finite value", format!("{e:?}"))
                                }
                            };
                            *sums.entry((pt.content(), qt.content())).or_insert_with(Rat::zero) += w;
                        }
                    }
                }
            }
            sums.retain(|_, v| !v.is_zero());
            Check::eq(
                input,
                sums == counts,
                "margin counts",
                "differing content sums",
            )
        })
        .collect();
    checks.extend(content_checks);

    // Refined forward identity: Σ_A P(A → P, Q) = ψ_P φ*_Q, exactly.
    for (m, n) in [(2usize, 2usize), (2, 3), (3, 3)] {
        if m > max_m || n > max_n {
            continue;
        }
        let mut by_pair: BTreeMap<(Tableau, Tableau), Vec<QTFactored>> = BTreeMap::new();
        let all_terms: Vec<Vec<(Tableau, Tableau, QTFactored)>> = all_matrices(m, n)
            .par_iter()
            .map(|a| {
                forward_growth_terms(a)
                    .expect("growths")
                    .into_iter()
                    .map(|(g, w)| (g.p_tableau().expect("P"), g.q_tableau().expect("Q"), w))
                    .collect()
            })
            .collect();
        for terms in all_terms {
            for (pt, qt, w) in terms {
                by_pair.entry((pt, qt)).or_default().push(w);
            }
        }
        let pair_checks: Vec<Check> = by_pair
            .par_iter()
            .map(|((pt, qt), terms)| {
                let input = format!("refined forward m={m} n={n} {}", pair_key(pt, qt));
                let want = boundary_weight(pt, qt);
                Check::eq(
                    input,
                    qt_sum_equals(terms, &want),
                    qtf_str(&want),
                    crate::text::render_qtsum(&QTSum::from_terms(terms)),
                )
            })
            .collect();
        checks.extend(pair_checks);

        // Refined backward identity: Σ_{(P,Q)} P̄(A ← P,Q) ψ_P φ*_Q = 1.
        let back_checks: Vec<Check> = all_matrices(m, n)
            .par_iter()
            .map(|a| {
                let input = format!("refined backward A={a}");
                let terms: Vec<QTFactored> = forward_growth_terms(a)
                    .expect("growths")
                    .into_iter()
                    .map(|(g, _)| {
                        growth_prob(&g, Direction::Backward).expect("backward").mul(
                            &boundary_weight(
                                &g.p_tableau().expect("P"),
                                &g.q_tableau().expect("Q"),
                            ),
                        )
                    })
                    .collect();
                Check::eq(
                    input,
                    qt_sum_equals(&terms, &QTFactored::one()),
                    "1",
                    crate::text::render_qtsum(&QTSum::from_terms(&terms)),
                )
            })
            .collect();
        checks.extend(back_checks);
    }
    finish("cauchy", start, checks)
}

/// Multiplying an expansion by an elementary symmetric polynomial branches
/// with the column-strip coefficients.
fn pieri(b: &Bounds) -> VerificationReport {
    let max = b.max_cells.unwrap_or(4).min(6);
    let mut points = vec![(rat(3, 8), rat(5, 7))];
    if let Some((q0, t0)) = &b.eval {
        points.push((q0.clone(), t0.clone()));
    }
    let m = 3u32;
    let mut items = Vec::new();
    for mu in partitions_up_to(max) {
        for r in 1..=2u32 {
            for (q0, t0) in &points {
                items.push((mu.clone(), r, q0.clone(), t0.clone()));
            }
        }
    }
    run_suite("pieri", items, move |(mu, r, q0, t0)| {
        let input = format!("mu={mu} r={r} q={q0} t={t0}");
        let lhs = poly_mul(
            &expansion_eval_map(mu, m, q0, t0),
            &elementary(m as usize, *r),
        );
        let mut rhs: BTreeMap<ContentVector, Rat> = BTreeMap::new();
        for la in vertical_strip_additions(mu, *r as u64) {
            let coeff = match phi_star(&la, mu).expect("vertical strip").eval(q0, t0) {
                Ok(c) => c,
                Err(e) => return Check::fail(input, "a finite coefficient", format!("{e:?}")),
            };
            for (content, v) in expansion_eval_map(&la, m, q0, t0) {
                *rhs.entry(content).or_insert_with(Rat::zero) += &coeff * v;
            }
        }
        rhs.retain(|_, v| !v.is_zero());
        Check::eq(input, lhs == rhs, "matching expansions", "differing expansions")
    })
}

fn expansion_eval_map(la: &Partition, m: u32, q0: &Rat, t0: &Rat) -> BTreeMap<ContentVector, Rat> {
    qtrsk_core::weights::expansion_eval(la, m, WeightKind::Psi, q0, t0).expect("expansion")
}

fn elementary(m: usize, r: u32) -> BTreeMap<ContentVector, Rat> {
    let mut out = BTreeMap::new();
    for bits in 0u32..1 << m {
        if bits.count_ones() != r {
            continue;
        }
        let content: ContentVector = (0..m).map(|i| u64::from(bits >> i & 1)).collect();
        out.insert(content, Rat::one());
    }
    out
}

fn poly_mul(
    a: &BTreeMap<ContentVector, Rat>,
    b: &BTreeMap<ContentVector, Rat>,
) -> BTreeMap<ContentVector, Rat> {
    let mut out: BTreeMap<ContentVector, Rat> = BTreeMap::new();
    for (ca, va) in a {
        for (cb, vb) in b {
            let content: ContentVector = ca.iter().zip(cb).map(|(x, y)| x + y).collect();
            *out.entry(content).or_insert_with(Rat::zero) += va * vb;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// The interpolation kernel: row sums are 1, the kernel is symmetric, and it
/// reproduces the corner-point probability on actual frames.
fn interpolation(b: &Bounds) -> VerificationReport {
    let start = Instant::now();
    let seed = b.seed.unwrap_or(1);
    let sets = 50usize;
    let mut rng = SplitMix64::new(seed);
    let mut items: Vec<(usize, Vec<Rat>, Vec<Rat>)> = Vec::new();
    for idx in 0..sets {
        let d = (rng.next_u64() % 5) as usize;
        let mut vals: Vec<Rat> = Vec::new();
        while vals.len() < 2 * (d + 1) {
            let numer = (rng.next_u64() % 4001) as i64 - 2000;
            let denom = (rng.next_u64() % 97) as i64 + 1;
            let v = rat(numer, denom);
            if !vals.contains(&v) {
                vals.push(v);
            }
        }
        let a = vals[..d + 1].to_vec();
        let bb = vals[d + 1..].to_vec();
        items.push((idx, a, bb));
    }
    let mut checks: Vec<Check> = items
        .par_iter()
        .map(|(idx, a, bb)| {
            let d = a.len() - 1;
            let input = format!("parameter set {idx:02} d={d}");
            for rbits in 0u32..1 << (d + 1) {
                let rset: BTreeSet<usize> = (0..=d).filter(|i| rbits >> i & 1 == 1).collect();
                let k = rset.len();
                let mut sum = Rat::zero();
                for sbits in 0u32..1 << (d + 1) {
                    let sset: BTreeSet<usize> = (0..=d).filter(|i| sbits >> i & 1 == 1).collect();
                    if sset.len() != k {
                        continue;
                    }
                    let v = match p_prime(a, bb, &rset, &sset) {
                        Ok(v) => v,
                        Err(e) => return Check::fail(input, "a finite kernel value", format!("{e:?}")),
                    };
                    let sym = p_prime(bb, a, &sset, &rset).expect("symmetric arguments");
                    if v != sym {
                        return Check::fail(
                            format!("{input} R={} S={}", set_label(&rset), set_label(&sset)),
                            "argument-swap symmetry",
                            format!("{v} vs {sym}"),
                        );
                    }
                    sum += v;
                }
                if !sum.is_one() {
                    return Check::fail(
                        format!("{input} R={}", set_label(&rset)),
                        "row sum 1",
                        format!("{sum}"),
                    );
                }
            }
            Check::pass(input)
        })
        .collect();

    let q0 = rat(3, 7);
    let t0 = rat(4, 11);
    let frames = compatible_pairs(b.max_cells.unwrap_or(6));
    let frame_checks: Vec<Check> = frames
        .par_iter()
        .map(|(la, rho)| {
            let f = corner_frame(la, rho).expect("compatible");
            for pr in all_subset_pairs(&f) {
                let direct = forward_prob(&f, &pr)
                    .expect("forward")
                    .eval(&q0, &t0)
                    .expect("finite");
                let via = forward_prob_via_interpolation(&f, &pr, &q0, &t0).expect("kernel");
                if direct != via {
                    return Check::fail(pair_label(&f, &pr), format!("{direct}"), format!("{via}"));
                }
            }
            Check::pass(frame_label(&f))
        })
        .collect();
    checks.extend(frame_checks);
    finish("interpolation", start, checks)
}

/// Lattice-path monomial exponents: the pinned d = 8 example and the
/// monomial-part factorization on actual frames.
fn tau_paths(b: &Bounds) -> VerificationReport {
    let start = Instant::now();
    let mut checks = Vec::new();
    let rset: BTreeSet<usize> = [1, 4, 8].into_iter().collect();
    let sset: BTreeSet<usize> = [2, 4, 5, 7].into_iter().collect();
    let (u, dd) = tau_exponents(8, &rset, &sset);
    checks.push(Check::eq(
        "d=8 R={1,4,8} S={2,4,5,7} q-exponents",
        u == vec![1, -2, -1, 1, -1, 0, 0, -1],
        "[1,-2,-1,1,-1,0,0,-1]",
        format!("{u:?}"),
    ));
    checks.push(Check::eq(
        "d=8 R={1,4,8} S={2,4,5,7} t-exponents",
        dd == vec![-1, -2, 1, -1, 1, 0, 0, -1, 0],
        "[-1,-2,1,-1,1,0,0,-1,0]",
        format!("{dd:?}"),
    ));
    let frames = compatible_pairs(b.max_cells.unwrap_or(6));
    let frame_checks: Vec<Check> = frames
        .par_iter()
        .map(|(la, rho)| {
            let f = corner_frame(la, rho).expect("compatible");
            for pr in all_subset_pairs(&f) {
                let tau = tau_monomial(&f, &pr);
                if tau.e_q < 0 || tau.e_t < 0 {
                    return Check::fail(pair_label(&f, &pr), "nonnegative exponents", format!("{tau:?}"));
                }
                let fm = *forward_prob(&f, &pr).expect("forward").mono();
                let bm = *backward_prob(&f, &pr).expect("backward").mono();
                if fm != tau || bm != tau {
                    return Check::fail(
                        pair_label(&f, &pr),
                        format!("monomial part {tau:?} in both directions"),
                        format!("forward {fm:?}, backward {bm:?}"),
                    );
                }
                let trivial = pr.sset() == pr.rset()
                    || *pr.sset()
                        == pr.rset().iter().copied().chain([0]).collect::<BTreeSet<_>>();
                if tau.is_one() != trivial {
                    return Check::fail(
                        pair_label(&f, &pr),
                        format!("trivial monomial iff S=R or S=R∪{{0}} ({trivial})"),
                        format!("is_one = {}", tau.is_one()),
                    );
                }
            }
            Check::pass(frame_label(&f))
        })
        .collect();
    checks.extend(frame_checks);
    finish("tau-paths", start, checks)
}

/// The three-block hook reformulation equals the corner-point probability in
/// both directions.
fn abc_oracle(b: &Bounds) -> VerificationReport {
    let frames = compatible_pairs(b.max_cells.unwrap_or(8));
    run_suite("abc-oracle", frames, |(la, rho)| {
        let f = corner_frame(la, rho).expect("compatible");
        for pr in all_subset_pairs(&f) {
            for dir in [Direction::Forward, Direction::Backward] {
                let oracle = alpha_beta_gamma_prob(&f, &pr, dir).expect("hook form");
                let direct = match dir {
                    Direction::Forward => forward_prob(&f, &pr).expect("forward"),
                    Direction::Backward => backward_prob(&f, &pr).expect("backward"),
                };
                if oracle != direct {
                    return Check::fail(
                        format!("{} {dir:?}", pair_label(&f, &pr)),
                        qtf_str(&direct),
                        qtf_str(&oracle),
                    );
                }
            }
        }
        Check::pass(frame_label(&f))
    })
}

/// The square weight ratio: direct form, reorganized form, probability ratio,
/// and the per-cell weight table all agree.
fn cell_weights(b: &Bounds) -> VerificationReport {
    let frames = compatible_pairs(b.max_cells.unwrap_or(6));
    run_suite("cell-weights", frames, |(la, rho)| {
        let f = corner_frame(la, rho).expect("compatible");
        for pr in all_subset_pairs(&f) {
            let mu = mu_of(&f, pr.rset()).expect("mu");
            let nu = nu_of(&f, pr.sset()).expect("nu");
            let direct = weight_ratio(&mu, la, rho, &nu).expect("ratio");
            let reorganized = weight_ratio_reorganized(&mu, la, rho, &nu).expect("ratio");
            if direct != reorganized {
                return Check::fail(pair_label(&f, &pr), qtf_str(&direct), qtf_str(&reorganized));
            }
            let ratio = backward_prob(&f, &pr)
                .expect("backward")
                .div(&forward_prob(&f, &pr).expect("forward"))
                .expect("nonzero forward");
            if direct != ratio {
                return Check::fail(
                    format!("{} prob-ratio", pair_label(&f, &pr)),
                    qtf_str(&direct),
                    qtf_str(&ratio),
                );
            }
            let mut prod = QTFactored::one();
            for c in nu.cells() {
                prod = prod.mul(&cell_weight_table(&mu, la, rho, &nu, c).expect("cell"));
            }
            if direct != prod {
                return Check::fail(
                    format!("{} cell-table", pair_label(&f, &pr)),
                    qtf_str(&direct),
                    qtf_str(&prod),
                );
            }
        }
        Check::pass(frame_label(&f))
    })
}

/// Closed forms of the t→0 and q→0 specializations equal the generic limits,
/// and the α-limits stay normalized.
fn specializations(b: &Bounds) -> VerificationReport {
    let frames = compatible_pairs(b.max_cells.unwrap_or(8));
    run_suite("specializations", frames, |(la, rho)| {
        let f = corner_frame(la, rho).expect("compatible");
        let d = f.d();
        let pairs = all_subset_pairs(&f);
        for pr in &pairs {
            let prob = forward_prob(&f, pr).expect("forward");
            let closed_t0 = forward_prob_qwhittaker(&f, pr).expect("closed form");
            let limit_t0 = prob.limit(LimitDirection::TToZero).expect("limit");
            if !QTSum::from_factored(&closed_t0).equals(&QTSum::from_factored(&limit_t0)) {
                return Check::fail(
                    format!("{} t->0", pair_label(&f, pr)),
                    qtf_str(&limit_t0),
                    qtf_str(&closed_t0),
                );
            }
            let closed_q0 = forward_prob_hall_littlewood(&f, pr).expect("closed form");
            let limit_q0 = prob.limit(LimitDirection::QToZero).expect("limit");
            if !QTSum::from_factored(&closed_q0).equals(&QTSum::from_factored(&limit_q0)) {
                return Check::fail(
                    format!("{} q->0", pair_label(&f, pr)),
                    qtf_str(&limit_q0),
                    qtf_str(&closed_q0),
                );
            }
        }
        // α-limit rows still sum to 1.
        for rbits in 0u32..1 << d {
            let rset: BTreeSet<usize> = (1..=d).filter(|i| rbits >> (i - 1) & 1 == 1).collect();
            for k in [rset.len(), rset.len() + 1] {
                if k > d + 1 {
                    continue;
                }
                let mut sum = AlphaRational::zero();
                for pr in pairs
                    .iter()
                    .filter(|pr| pr.rset() == &rset && pr.sset().len() == k)
                {
                    sum = sum.add(&jack_forward_prob(&f, pr).expect("alpha limit"));
                }
                if !sum.is_one() {
                    return Check::fail(
                        format!("{} alpha R={} k={k}", frame_label(&f), set_label(&rset)),
                        "sum 1",
                        format!("{sum}"),
                    );
                }
            }
        }
        Check::pass(frame_label(&f))
    })
}

/// The q,t→0 and q,t→∞ limits of the probability are the indicator functions
/// of the two deterministic corner bijections.
fn limits_rsk(b: &Bounds) -> VerificationReport {
    let frames = compatible_pairs(b.max_cells.unwrap_or(8));
    run_suite("limits-rsk", frames, |(la, rho)| {
        let f = corner_frame(la, rho).expect("compatible");
        for pr in all_subset_pairs(&f) {
            let mu = mu_of(&f, pr.rset()).expect("mu");
            let nu = nu_of(&f, pr.sset()).expect("nu");
            let k = pr.sset().len();
            let prob = forward_prob(&f, &pr).expect("forward");
            let low = prob
                .limit(LimitDirection::TToZero)
                .expect("limit")
                .limit(LimitDirection::QToZero)
                .expect("limit");
            let row_hit = f_row(la, rho, k, &mu).expect("bijection") == nu;
            if low.is_one() != row_hit || low.is_zero() == row_hit {
                return Check::fail(
                    format!("{} q,t->0", pair_label(&f, &pr)),
                    format!("indicator {}", u8::from(row_hit)),
                    qtf_str(&low),
                );
            }
            let high = prob
                .limit(LimitDirection::TToInfinity)
                .expect("limit")
                .limit(LimitDirection::QToInfinity)
                .expect("limit");
            let col_hit = f_col(la, rho, k, &mu).expect("bijection") == nu;
            if high.is_one() != col_hit || high.is_zero() == col_hit {
                return Check::fail(
                    format!("{} q,t->inf", pair_label(&f, &pr)),
                    format!("indicator {}", u8::from(col_hit)),
                    qtf_str(&high),
                );
            }
        }
        Check::pass(frame_label(&f))
    })
}

/// Substituting (q⁻¹, t⁻¹) matches the conjugated, swapped square.
fn inversion_symmetry(b: &Bounds) -> VerificationReport {
    let frames = compatible_pairs(b.max_cells.unwrap_or(8));
    run_suite("inversion-symmetry", frames, |(la, rho)| {
        let f = corner_frame(la, rho).expect("compatible");
        let fc = corner_frame(&rho.conjugate(), &la.conjugate()).expect("conjugates");
        for pr in all_subset_pairs(&f) {
            let mu = mu_of(&f, pr.rset()).expect("mu");
            let nu = nu_of(&f, pr.sset()).expect("nu");
            let rset = qtrsk_core::local::rset_of(&fc, &mu.conjugate()).expect("rset");
            let sset = qtrsk_core::local::sset_of(&fc, &nu.conjugate()).expect("sset");
            let prc = SubsetPair::new(&fc, rset, sset).expect("subset pair");
            let lhs = forward_prob(&f, &pr).expect("forward").substitute_inverse();
            let rhs = forward_prob(&fc, &prc).expect("forward").swap_qt();
            if lhs != rhs {
                return Check::fail(pair_label(&f, &pr), qtf_str(&rhs), qtf_str(&lhs));
            }
        }
        Check::pass(frame_label(&f))
    })
}

/// Transposing the source matrix swaps the boundary tableaux and inverts and
/// swaps (q, t) in every outcome probability.
fn transpose_symmetry(b: &Bounds) -> VerificationReport {
    let max_m = b.rows.unwrap_or(2);
    let max_n = b.cols.unwrap_or(3);
    let mut items = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            items.extend(all_matrices(m, n));
        }
    }
    run_suite("transpose-symmetry", items, |a| {
        match transpose_symmetry_check(a) {
            Ok(true) => Check::pass(format!("A={a}")),
            Ok(false) => Check::fail(format!("A={a}"), "transpose-symmetric", "asymmetric"),
            Err(e) => Check::fail(format!("A={a}"), "transpose-symmetric", format!("{e:?}")),
        }
    })
}

/// α-limit marginals are invariant under adjacent column swaps for matrices
/// with at most one 1 per column, and the doubled-column counterexample
/// demonstrably breaks the hypothesis and the conclusion.
fn jack_swap(b: &Bounds) -> VerificationReport {
    let start = Instant::now();
    let max_m = b.rows.unwrap_or(3);
    let max_n = b.cols.unwrap_or(3);
    let mut items = Vec::new();
    for m in 1..=max_m {
        for n in 2..=max_n {
            for a in all_matrices(m, n) {
                if !a.at_most_one_per_column() {
                    continue;
                }
                for k in 0..n - 1 {
                    items.push((a.clone(), k));
                }
            }
        }
    }
    let mut checks: Vec<Check> = items
        .par_iter()
        .map(|(a, k)| match jack_swap_check(a, *k) {
            Ok(true) => Check::pass(format!("A={a} k={k}")),
            Ok(false) => Check::fail(format!("A={a} k={k}"), "swap-invariant marginal", "changed marginal"),
            Err(e) => Check::fail(format!("A={a} k={k}"), "swap-invariant marginal", format!("{e:?}")),
        })
        .collect();

    // Violation without the column hypothesis: the doubled-column matrix
    // cannot reach P = 1,2;2,3 while its swap reaches it with α-probability
    // α / (2(1+α)²).
    let a = mat("001;110;001");
    let t = tab(&[&[1, 2], &[2, 3]], 3, TableauFlavor::Ssyt);
    match p_marginal(&a, &ValueMode::QtExact) {
        Ok(marg) => {
            let got = marg.qt_value(&t).expect("exact mode");
            checks.push(Check::eq(
                format!("A={a} P=1,2;2,3 unreachable"),
                got.is_zero(),
                "0",
                crate::text::render_qtsum(&got),
            ));
        }
        Err(e) => checks.push(Check::fail(format!("A={a}"), "a marginal", format!("{e:?}"))),
    }
    let bm = a.swap_adjacent_columns(1).expect("adjacent");
    match p_marginal(&bm, &ValueMode::Alpha) {
        Ok(marg) => {
            let got = marg.alpha_value(&t).expect("alpha mode");
            let den = AlphaPoly::constant(rat(2, 1)).mul(&lin(1, 1)).mul(&lin(1, 1));
            let want = alpha_frac(lin(0, 1), den);
            checks.push(Check::eq(
                format!("A={bm} P=1,2;2,3 alpha mass"),
                got == want,
                format!("{want}"),
                format!("{got}"),
            ));
        }
        Err(e) => checks.push(Check::fail(format!("A={bm}"), "a marginal", format!("{e:?}"))),
    }
    finish("jack-swap", start, checks)
}

/// Two-cell growth configurations: the two partial orders of adding a corner
/// and a two-cell strip give the same α-distribution, and the generic
/// two-path case satisfies the pinned exact ratio.
fn appendix(b: &Bounds) -> VerificationReport {
    let start = Instant::now();
    let tuples = appendix_tuples(b.max_cells.unwrap_or(9));
    let mut checks: Vec<Check> = tuples
        .par_iter()
        .map(|(mu, la, rho, _nu)| {
            let input = format!("mu={mu} la={la} rho={rho}");
            let d1 = partial_config_distribution(mu, la, rho, PartialConfig::I, &ValueMode::Alpha);
            let d2 = partial_config_distribution(mu, la, rho, PartialConfig::II, &ValueMode::Alpha);
            let (d1, d2) = match (d1, d2) {
                (Ok(x), Ok(y)) => (x, y),
                (Err(e), _) | (_, Err(e)) => {
                    return Check::fail(input, "two distributions", format!("{e:?}"))
                }
            };
            let mut keys: BTreeSet<Partition> = d1.support().keys().cloned().collect();
            keys.extend(d2.support().keys().cloned());
            for nu in keys {
                let x = d1.alpha_value(&nu).expect("alpha mode");
                let y = d2.alpha_value(&nu).expect("alpha mode");
                if x != y {
                    return Check::fail(format!("{input} nu={nu}"), format!("{y}"), format!("{x}"));
                }
            }
            Check::pass(input)
        })
        .collect();

    let ratio_checks: Vec<Check> = tuples
        .par_iter()
        .filter_map(|(mu, la, rho, nu)| {
            if la.intersect(rho) != *mu {
                return None;
            }
            let mut cells = Vec::new();
            for y in 1..=nu.len() as u32 {
                for x in la.part(y) + 1..=nu.part(y) {
                    cells.push(Cell::new(x, y).expect("positive cell"));
                }
            }
            if cells.len() != 2 || cells[0].x == cells[1].x || cells[0].y == cells[1].y {
                return None;
            }
            // Generic case: the cells directly above and directly right of the
            // corner ρ/μ are both addable corners of λ∪ρ.
            let s1 = single_added_cell(rho, mu)?;
            let union = la.union(rho);
            let above = Cell::new(s1.x, s1.y + 1).ok()?;
            let right = Cell::new(s1.x + 1, s1.y).ok()?;
            if union.add_corner(above).is_err() || union.add_corner(right).is_err() {
                return None;
            }
            let input = format!("ratio mu={mu} la={la} rho={rho} nu={nu}");
            Some(match partial_config_ratio_holds(mu, la, rho, nu) {
                Ok(true) => Check::pass(input),
                Ok(false) => Check::fail(input, "pinned two-path ratio", "different ratio"),
                Err(e) => Check::fail(input, "pinned two-path ratio", format!("{e:?}")),
            })
        })
        .collect();
    checks.extend(ratio_checks);
    finish("appendix", start, checks)
}

fn single_added_cell(outer: &Partition, inner: &Partition) -> Option<Cell> {
    let mut found = None;
    for y in 1..=outer.len() as u32 {
        for x in inner.part(y) + 1..=outer.part(y) {
            if found.is_some() {
                return None;
            }
            found = Cell::new(x, y).ok();
        }
    }
    found
}

/// All `(μ, λ, ρ, ν)` with `μ ≺ λ ⊆ ν`, `|ν/λ| = 2`, and `ρ = μ + corner`
/// with `ρ ≺ ν`, up to the cell bound on ν.
fn appendix_tuples(max_nu: u32) -> Vec<(Partition, Partition, Partition, Partition)> {
    let mut out = Vec::new();
    for size in 2..=max_nu {
        for nu in partitions_of_size(size) {
            for la in partitions_of_size(size - 2) {
                if !nu.contains(&la) {
                    continue;
                }
                for msize in 0..=size - 2 {
                    for mu in partitions_of_size(msize) {
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

// ---------------------------------------------------------------------------
// distribution plumbing shared with the subcommands
// ---------------------------------------------------------------------------

/// Computes the mode selected by command-line flags.
pub fn value_mode(jack: bool, eval: &Option<(Rat, Rat)>) -> Result<ValueMode, String> {
    match (jack, eval) {
        (true, Some(_)) => Err("choose either --jack or --eval, not both".into()),
        (true, None) => Ok(ValueMode::Alpha),
        (false, Some((q0, t0))) => Ok(ValueMode::Numeric {
            q0: q0.clone(),
            t0: t0.clone(),
        }),
        (false, None) => Ok(ValueMode::QtExact),
    }
}

/// Renders a distribution over tableau pairs as sorted (outcome, value) rows.
pub fn distribution_rows<K: Ord + Clone, L: Fn(&K) -> String>(
    dist: &Distribution<K>,
    label: L,
) -> Vec<(String, String)> {
    dist.support()
        .iter()
        .map(|(k, v)| (label(k), crate::text::render_value(v)))
        .collect()
}
