//! The full identity suite behind `verify-all`.
//!
//! Every entry folds the rendered left- and right-hand sides of all its
//! cases into SHA-256 digests, so two runs with the same seed can be
//! compared without storing the operands.

use std::collections::BTreeSet;
use std::fmt::{self, Display};

use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::clifford::{
    braid_conjugate, braid_word_matrix, clifford_rep, fermion_pair, majorana_triple_2x2,
    minkowski_h, quaternion_braiders, quaternion_rep, FusionElement, QuaternionVariant,
    SpacetimeEvent,
};
use crate::dirac::{
    commuting_copies_check, dirac_frame, majorana_dirac_generators, pythagorean_params,
    verify_relations, DaggerVersion, OnShellParams, SpaceDim,
};
use crate::discrete::{basic_commutator, brownian_constancy, Sequence};
use crate::groups::{g_table, regular_action, sigma_of, Group, GroupSpec};
use crate::iterant::{
    a_n, iterant_det, iterant_i, iterant_i_alt, vect2, vect_regular, IterantElement,
};
use crate::lof::{confluence_fuzz, reduce, truth_table_check, MarkExpr, Value};
use crate::matrep::{
    decompose_matrix, embed_matrix, iso_check, kernel_test, reassemble, to_matrix,
};
use crate::matrix::SquareMatrix;
use crate::scalar::{random_rational, rat, Rational, Scalar};
use crate::schrodinger::{dispersion_check, dispersion_convergence, run, Initial, LatticeConfig};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyEntry {
    pub check_id: String,
    pub area: String,
    pub description: String,
    pub cases: usize,
    pub pass: bool,
    pub lhs_digest: String,
    pub rhs_digest: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub entries: Vec<VerifyEntry>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> Vec<&VerifyEntry> {
        self.entries.iter().filter(|e| !e.pass).collect()
    }

    pub fn csv(&self) -> String {
        let mut out = String::from("check_id,area,cases,pass,lhs_digest,rhs_digest,description\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{},{},{},{},{},{},\"{}\"\n",
                e.check_id,
                e.area,
                e.cases,
                e.pass,
                e.lhs_digest,
                e.rhs_digest,
                e.description.replace('"', "\"\"")
            ));
        }
        out
    }
}

impl Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let id_w = self
            .entries
            .iter()
            .map(|e| e.check_id.len())
            .max()
            .unwrap_or(0);
        let area_w = self.entries.iter().map(|e| e.area.len()).max().unwrap_or(0);
        for e in &self.entries {
            writeln!(
                f,
                "{:<4} {:<id_w$} {:<area_w$} {:>5}  {}  {}",
                if e.pass { "PASS" } else { "FAIL" },
                e.check_id,
                e.area,
                e.cases,
                &e.lhs_digest[..12],
                e.description
            )?;
        }
        let passed = self.entries.iter().filter(|e| e.pass).count();
        writeln!(
            f,
            "{passed}/{} checks pass (seed {})",
            self.entries.len(),
            self.seed
        )
    }
}

struct Tally {
    lhs: Sha256,
    rhs: Sha256,
    pass: bool,
    cases: usize,
}

impl Tally {
    fn new() -> Self {
        Tally {
            lhs: Sha256::new(),
            rhs: Sha256::new(),
            pass: true,
            cases: 0,
        }
    }

    fn eq(&mut self, lhs: impl Display, rhs: impl Display) {
        let (l, r) = (lhs.to_string(), rhs.to_string());
        self.pass &= l == r;
        self.cases += 1;
        self.lhs.update(l.as_bytes());
        self.lhs.update([0]);
        self.rhs.update(r.as_bytes());
        self.rhs.update([0]);
    }

    fn holds(&mut self, what: &str, ok: bool) {
        self.eq(format!("{what}: {ok}"), format!("{what}: true"));
    }

    fn fail(&mut self, what: &str, err: impl Display) {
        self.eq(format!("{what}: error {err}"), format!("{what}: ok"));
    }

    fn finish(self, id: &str, area: &str, description: &str) -> VerifyEntry {
        let hex = |h: Sha256| h.finalize().iter().map(|b| format!("{b:02x}")).collect();
        VerifyEntry {
            check_id: id.to_string(),
            area: area.to_string(),
            description: description.to_string(),
            cases: self.cases,
            pass: self.pass && self.cases > 0,
            lhs_digest: hex(self.lhs),
            rhs_digest: hex(self.rhs),
        }
    }
}

/// Per-check stream so that adding a check never shifts another's samples.
fn rng_for(seed: u64, id: &str) -> ChaCha8Rng {
    let digest = Sha256::new()
        .chain_update(seed.to_le_bytes())
        .chain_update(id)
        .finalize();
    let mut bytes = [0u8; 32];
    bytes.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(bytes)
}

fn random_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SquareMatrix {
    SquareMatrix::from_fn(n, |_, _| Scalar::random(rng, 9, 5))
}

// Displayed tables and matrices of the worked G-Table examples.
const C3_GTABLE: [[&str; 3]; 3] = [["1", "S", "S^2"], ["S^2", "1", "S"], ["S", "S^2", "1"]];

const C6_GTABLE: [[&str; 6]; 6] = [
    ["1", "S", "S^2", "S^3", "S^4", "S^5"],
    ["S^5", "1", "S", "S^2", "S^3", "S^4"],
    ["S^4", "S^5", "1", "S", "S^2", "S^3"],
    ["S^3", "S^4", "S^5", "1", "S", "S^2"],
    ["S^2", "S^3", "S^4", "S^5", "1", "S"],
    ["S", "S^2", "S^3", "S^4", "S^5", "1"],
];

const S3_MULTIPLICATION: [[&str; 6]; 6] = [
    ["1", "R", "R^2", "F", "RF", "R^2F"],
    ["R", "R^2", "1", "RF", "R^2F", "F"],
    ["R^2", "1", "R", "R^2F", "F", "RF"],
    ["F", "R^2F", "RF", "1", "R^2", "R"],
    ["RF", "F", "R^2F", "R", "1", "R^2"],
    ["R^2F", "RF", "F", "R^2", "R", "1"],
];

const S3_GTABLE: [[&str; 6]; 6] = [
    ["1", "R", "R^2", "F", "RF", "R^2F"],
    ["R^2", "1", "R", "R^2F", "F", "RF"],
    ["R", "R^2", "1", "RF", "R^2F", "F"],
    ["F", "R^2F", "RF", "1", "R^2", "R"],
    ["RF", "F", "R^2F", "R", "1", "R^2"],
    ["R^2F", "RF", "F", "R^2", "R", "1"],
];

/// The same table with R = Δ, R² = Θ, F = Ψ, RF = Ω, R²F = Σ.
const S3_GREEK: [[&str; 6]; 6] = [
    ["1", "Δ", "Θ", "Ψ", "Ω", "Σ"],
    ["Θ", "1", "Δ", "Σ", "Ψ", "Ω"],
    ["Δ", "Θ", "1", "Ω", "Σ", "Ψ"],
    ["Ψ", "Σ", "Ω", "1", "Θ", "Δ"],
    ["Ω", "Ψ", "Σ", "Δ", "1", "Θ"],
    ["Σ", "Ω", "Ψ", "Θ", "Δ", "1"],
];

const GREEK_NAMES: [(&str, &str); 6] = [
    ("1", "1"),
    ("Δ", "R"),
    ("Θ", "R^2"),
    ("Ψ", "F"),
    ("Ω", "RF"),
    ("Σ", "R^2F"),
];

const S3_MATRICES: [(&str, [&str; 6]); 5] = [
    (
        "R",
        ["010000", "001000", "100000", "000001", "000100", "000010"],
    ),
    (
        "R^2",
        ["001000", "100000", "010000", "000010", "000001", "000100"],
    ),
    (
        "F",
        ["000100", "000010", "000001", "100000", "010000", "001000"],
    ),
    (
        "RF",
        ["000010", "000001", "000100", "001000", "100000", "010000"],
    ),
    (
        "R^2F",
        ["000001", "000100", "000010", "010000", "001000", "100000"],
    ),
];

fn displayed_matrix(rows: &[&str; 6]) -> SquareMatrix {
    let ints: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.bytes().map(|b| i64::from(b - b'0')).collect())
        .collect();
    let refs: Vec<&[i64]> = ints.iter().map(Vec::as_slice).collect();
    SquareMatrix::from_ints(&refs)
}

fn grid_indices<const N: usize>(g: &Group, grid: &[[&str; N]; N]) -> Option<Vec<Vec<usize>>> {
    grid.iter()
        .map(|row| row.iter().map(|name| g.element(name).ok()).collect())
        .collect()
}

fn iterant_sqrt() -> VerifyEntry {
    let mut t = Tally::new();
    let a = vect2();
    let minus_one = IterantElement::scalar(&a, Scalar::int(-1));
    t.eq(iterant_i().pow(2), &minus_one);
    t.eq(iterant_i_alt().pow(2), &minus_one);
    t.finish(
        "01-iterant-sqrt",
        "iterants",
        "([-1,1]η)² = -1 and the sign variant",
    )
}

fn matrix_product(seed: u64) -> VerifyEntry {
    let id = "02-matrix-product";
    let mut rng = rng_for(seed, id);
    let a = vect2();
    let mut t = Tally::new();
    for _ in 0..500 {
        let x = IterantElement::random(&a, &mut rng, 9, 5);
        let y = IterantElement::random(&a, &mut rng, 9, 5);
        let xy = x.try_mul(&y).expect("same algebra");
        t.eq(to_matrix(&xy), &to_matrix(&x) * &to_matrix(&y));
    }
    t.finish(id, "matrices", "Vect_2 product equals 2x2 matrix product")
}

fn determinant_bridge(seed: u64) -> VerifyEntry {
    let id = "03-determinant";
    let mut rng = rng_for(seed, id);
    let a = vect2();
    let mut t = Tally::new();
    for _ in 0..200 {
        let z = IterantElement::random(&a, &mut rng, 9, 5);
        let w = IterantElement::random(&a, &mut rng, 9, 5);
        let (dz, dw) = (
            iterant_det(&z).expect("Vect_2"),
            iterant_det(&w).expect("Vect_2"),
        );
        t.eq(&dz, to_matrix(&z).det());
        let zw = z.try_mul(&w).expect("same algebra");
        t.eq(iterant_det(&zw).expect("Vect_2"), &dz * &dw);
    }
    t.finish(id, "determinant", "D(Z) = det and D(ZW) = D(Z)D(W)")
}

fn gtable_theorem(seed: u64) -> Vec<VerifyEntry> {
    let specs = [
        GroupSpec::Cyclic(3),
        GroupSpec::Cyclic(6),
        GroupSpec::Symmetric(3),
        GroupSpec::Klein4,
    ];
    let mut hom = Tally::new();
    let mut sigma = Tally::new();
    let mut rng = rng_for(seed, "04a-regular-rep");
    for spec in &specs {
        let action = vect_regular(spec).expect("built-in group");
        match iso_check(&action, 500, &mut rng) {
            Ok(r) => {
                hom.holds(&format!("{spec:?} homomorphism"), r.homomorphism);
                hom.holds(&format!("{spec:?} isomorphism"), r.isomorphism);
            }
            Err(e) => hom.fail(&format!("{spec:?}"), e),
        }
        let g = action.group();
        let table = g_table(g);
        let rho = regular_action(g);
        for h in 0..g.order() {
            match sigma_of(&table.placement_matrix(h)) {
                Ok(p) => sigma.eq(p, rho.perm(h)),
                Err(e) => sigma.fail(g.name(h), e),
            }
        }
    }

    let mut shown = Tally::new();
    let c3 = Group::cyclic(3);
    let c6 = Group::cyclic(6);
    let s3 = crate::groups::group_make(&GroupSpec::Symmetric(3)).expect("S_3");
    let mut compare =
        |label: &str, g: &Group, want: Option<Vec<Vec<usize>>>, got: &[Vec<usize>]| match want {
            Some(w) => shown.eq(g.render_table(got), g.render_table(&w)),
            None => shown.fail(label, "unknown element name"),
        };
    compare(
        "C3 G-Table",
        &c3,
        grid_indices(&c3, &C3_GTABLE),
        &g_table(&c3).table,
    );
    compare(
        "C6 G-Table",
        &c6,
        grid_indices(&c6, &C6_GTABLE),
        &g_table(&c6).table,
    );
    compare(
        "S3 table",
        &s3,
        grid_indices(&s3, &S3_MULTIPLICATION),
        s3.mul_table(),
    );
    compare(
        "S3 G-Table",
        &s3,
        grid_indices(&s3, &S3_GTABLE),
        &g_table(&s3).table,
    );
    let greek: Vec<Vec<usize>> = S3_GREEK
        .iter()
        .map(|row| {
            row.iter()
                .map(|sym| {
                    let name = GREEK_NAMES
                        .iter()
                        .find(|(s, _)| s == sym)
                        .expect("listed")
                        .1;
                    s3.element(name).expect("S_3 name")
                })
                .collect()
        })
        .collect();
    compare("S3 Greek G-Table", &s3, Some(greek), &g_table(&s3).table);

    vec![
        hom.finish(
            "04a-regular-rep",
            "g-table",
            "C3, C6, S3, Klein4: iterant-to-matrix map is an isomorphism (500 pairs each)",
        ),
        sigma.finish("04b-sigma", "g-table", "σ(P_g) = ρ(g) for every element"),
        shown.finish(
            "04c-displays",
            "g-table",
            "worked multiplication and G-Tables match",
        ),
    ]
}

fn s3_matrices() -> VerifyEntry {
    let mut t = Tally::new();
    let s3 = crate::groups::group_make(&GroupSpec::Symmetric(3)).expect("S_3");
    let table = g_table(&s3);
    t.eq(
        table.placement_matrix(s3.identity()),
        SquareMatrix::identity(6),
    );
    for (name, rows) in &S3_MATRICES {
        match s3.element(name) {
            Ok(g) => t.eq(table.placement_matrix(g), displayed_matrix(rows)),
            Err(e) => t.fail(name, e),
        }
    }
    t.finish(
        "05-s3-matrices",
        "g-table",
        "Δ, Θ, Ψ, Ω, Σ and 1 from the S3 G-Table",
    )
}

fn quaternions() -> VerifyEntry {
    let mut t = Tally::new();
    for variant in [
        QuaternionVariant::Klein4,
        QuaternionVariant::Iota2x2,
        QuaternionVariant::MajoranaTriple,
    ] {
        for c in quaternion_rep(variant).verify() {
            t.holds(&format!("{variant:?} {}", c.check), c.pass);
        }
    }
    t.finish(
        "06-quaternions",
        "quaternions",
        "Hamilton table in three representations",
    )
}

fn decomposition(seed: u64) -> Vec<VerifyEntry> {
    let id = "07a-decomposition";
    let mut rng = rng_for(seed, id);
    let mut t = Tally::new();
    let mut section = Tally::new();
    for case in 0..100 {
        let n = 2 + case % 3;
        let m = random_matrix(&mut rng, n);
        match decompose_matrix(&m) {
            Ok(d) => t.eq(reassemble(&d), &m),
            Err(e) => t.fail("decompose", e),
        }
        match embed_matrix(&m) {
            Ok(x) => t.eq(to_matrix(&x), &m),
            Err(e) => t.fail("embed", e),
        }
    }
    let m = SquareMatrix::from_ints(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
    match decompose_matrix(&m) {
        Ok(d) => {
            section.eq(&d.factor, Rational::new(1.into(), 2.into()));
            let want = [
                ("()", [1, 5, 9]),
                ("(123)", [2, 6, 7]),
                ("(132)", [3, 4, 8]),
                ("(23)", [1, 6, 8]),
                ("(13)", [3, 5, 7]),
                ("(12)", [2, 4, 9]),
            ];
            for (cycle, diag) in want {
                let got = d.terms.iter().find(|x| x.perm == cycle).map(|x| {
                    x.diag
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                });
                let diag = diag.map(|v| v.to_string()).join(",");
                section.eq(
                    format!("{cycle} {got:?}"),
                    format!("{cycle} {:?}", Some(diag)),
                );
            }
            section.eq(reassemble(&d), &m);
        }
        Err(e) => section.fail("decompose", e),
    }
    vec![
        t.finish(
            id,
            "decomposition",
            "M = (1/(n-1)!) Σ Δ[M]_π P[π] and p∘i = id, n = 2..4",
        ),
        section.finish(
            "07b-worked-3x3",
            "decomposition",
            "3x3 example with a..k = 1..9",
        ),
    ]
}

fn kernel(seed: u64) -> Vec<VerifyEntry> {
    let a3 = a_n(3).expect("A_3");
    let mut t = Tally::new();
    match IterantElement::parse(&a3, "[1,0,0] + [-1,0,0](23)") {
        Ok(x) => {
            let r = kernel_test(&x);
            t.holds("image is zero", r.in_kernel);
            t.eq(x.pow(2), x.scale(&Scalar::int(2)));
        }
        Err(e) => t.fail("parse", e),
    }
    let id = "08b-kernel-criterion";
    let mut rng = rng_for(seed, id);
    let mut crit = Tally::new();
    let mut hits = 0;
    for case in 0..500 {
        let x = if case % 2 == 0 {
            IterantElement::random(&a3, &mut rng, 3, 1)
        } else {
            random_kernel_element(&a3, &mut rng)
        };
        let r = kernel_test(&x);
        hits += usize::from(r.in_kernel);
        crit.eq(r.sums_vanish, r.in_kernel);
    }
    crit.holds("kernel elements sampled", hits >= 200);
    vec![
        t.finish(
            "08a-kernel-example",
            "kernel",
            "x = [1,0,0] - [1,0,0](23): p(x) = 0, x² = 2x",
        ),
        crit.finish(
            id,
            "kernel",
            "column-sum criterion agrees with p(x) = 0 on A_3",
        ),
    ]
}

/// Random element of the kernel: a random element minus its embedded image.
fn random_kernel_element<R: Rng + ?Sized>(
    a3: &std::sync::Arc<crate::groups::GroupAction>,
    rng: &mut R,
) -> IterantElement {
    let x = IterantElement::random(a3, rng, 5, 3);
    let back = embed_matrix(&to_matrix(&x)).expect("n = 3");
    x.try_sub(&back).expect("same algebra")
}

fn minkowski(seed: u64) -> VerifyEntry {
    let id = "09-minkowski";
    let mut rng = rng_for(seed, id);
    let mut t = Tally::new();
    for _ in 0..200 {
        let [tt, x, y, z] = [0; 4].map(|_| rng.gen_range(-20i64..=20));
        let r = minkowski_h(&SpacetimeEvent::new(tt, x, y, z));
        let interval = rat(tt * tt - x * x - y * y - z * z);
        let space = rat(x * x + y * y + z * z);
        t.eq(&r.det, &interval);
        t.eq(r.h.det(), Scalar::real(interval.clone()));
        t.eq(r.h.trace(), Scalar::int(2 * tt));
        let [c0, c1, c2] = &r.charpoly;
        t.eq(
            format!("{c0} {c1} {c2}"),
            format!("1 {} {interval}", -2 * tt),
        );
        // roots T ± s with s² = X² + Y² + Z²
        t.eq(c1 * c1 / rat(4) - c2, space);
        t.holds("hermitian", r.hermitian);
    }
    t.finish(id, "minkowski", "det H = T²-X²-Y²-Z², roots T ± |(X,Y,Z)|")
}

fn braiding() -> Vec<VerifyEntry> {
    let mut images = Tally::new();
    let mut relations = Tally::new();
    for n in 2..=6usize {
        let rep = clifford_rep(n).expect("n ≤ 8");
        for k in 1..n {
            for j in 1..=n {
                let cj = rep.gen(j).expect("in range");
                let want = if j == k {
                    rep.gen(k + 1).expect("in range").clone()
                } else if j == k + 1 {
                    -rep.gen(k).expect("in range")
                } else {
                    cj.clone()
                };
                match braid_conjugate(&rep, k, cj) {
                    Ok(got) => images.eq(got, want),
                    Err(e) => images.fail("conjugate", e),
                }
            }
        }
        for k in 1..n.saturating_sub(1) {
            let lhs = braid_word_matrix(n, &[k, k + 1, k]);
            let rhs = braid_word_matrix(n, &[k + 1, k, k + 1]);
            match (lhs, rhs) {
                (Ok(l), Ok(r)) => relations.eq(l, r),
                (Err(e), _) | (_, Err(e)) => relations.fail("braid word", e),
            }
        }
        for k in 1..n {
            for l in (k + 2)..n {
                let lhs = braid_word_matrix(n, &[k, l]);
                let rhs = braid_word_matrix(n, &[l, k]);
                match (lhs, rhs) {
                    (Ok(a), Ok(b)) => relations.eq(a, b),
                    (Err(e), _) | (_, Err(e)) => relations.fail("far commutation", e),
                }
            }
        }
    }
    let mut quat = Tally::new();
    match quaternion_braiders(&majorana_triple_2x2()) {
        Ok(b) => b.checks.iter().for_each(|c| quat.holds(&c.check, c.pass)),
        Err(e) => quat.fail("braiders", e),
    }
    vec![
        images.finish(
            "10a-braid-images",
            "braiding",
            "T_k sends c_k to c_k+1, c_k+1 to -c_k, fixes the rest",
        ),
        relations.finish(
            "10b-braid-relations",
            "braiding",
            "T_k T_k+1 T_k = T_k+1 T_k T_k+1 for n ≤ 6",
        ),
        quat.finish(
            "10c-quaternion-braiders",
            "braiding",
            "ABA = BAB for 1+I, 1+J, 1+K",
        ),
    ]
}

fn fermions() -> VerifyEntry {
    let mut t = Tally::new();
    let reps = [
        (
            "split quaternions",
            clifford_rep(2).expect("n = 2"),
            vec![(1, 2)],
        ),
        (
            "Pauli triple",
            majorana_triple_2x2(),
            vec![(1, 2), (2, 3), (1, 3)],
        ),
        (
            "four generators",
            clifford_rep(4).expect("n = 4"),
            vec![(1, 2), (3, 4)],
        ),
    ];
    for (label, rep, pairs) in &reps {
        for &(j, k) in pairs {
            match fermion_pair(rep, j, k) {
                Ok(f) => f
                    .checks
                    .iter()
                    .for_each(|c| t.holds(&format!("{label} ({j},{k}) {}", c.check), c.pass)),
                Err(e) => t.fail(label, e),
            }
        }
    }
    t.finish(
        "11-fermions",
        "fermions",
        "ψ² = 0 and ψψ† + ψ†ψ = 1 from Majorana pairs",
    )
}

fn fusion() -> VerifyEntry {
    let mut t = Tally::new();
    let p = FusionElement::p();
    t.eq(p.pow(2), FusionElement::new(1, 1));
    let (mut prev, mut cur) = (0u64, 1u64);
    for n in 1..=20u32 {
        t.eq(p.pow(n), FusionElement::new(prev, cur));
        (prev, cur) = (cur, prev + cur);
    }
    t.finish(
        "12-fusion",
        "fusion",
        "P² = 1 + P and Pⁿ = F(n-1) + F(n)P up to n = 20",
    )
}

fn laws_of_form(seed: u64) -> Vec<VerifyEntry> {
    let mut worked = Tally::new();
    match MarkExpr::parse("(((()())())())()").and_then(|e| reduce(&e)) {
        Ok(r) => {
            worked.eq(r.value, Value::Marked);
            let chain: Vec<&str> = r.trace.iter().map(|s| s.after.as_str()).collect();
            worked.eq(
                chain.join(" = "),
                "(((())())())() = ((())())() = (())() = ()",
            );
        }
        Err(e) => worked.fail("worked example", e),
    }
    let mut fuzz = Tally::new();
    let report = confluence_fuzz(1000, 6, 4, 4, seed);
    fuzz.eq(report.disagreements.len(), 0);
    fuzz.cases = report.expressions;
    let mut logic = Tally::new();
    for row in truth_table_check() {
        logic.holds(&format!("{} ~ {}", row.pattern, row.connective), row.pass);
    }
    vec![
        worked.finish(
            "13a-lof-worked",
            "laws-of-form",
            "worked example reduces to the marked state",
        ),
        fuzz.finish(
            "13b-lof-confluence",
            "laws-of-form",
            "1000 random expressions reduce uniquely",
        ),
        logic.finish(
            "13c-lof-logic",
            "laws-of-form",
            "translation table matches Boolean truth tables",
        ),
    ]
}

/// `(x, y, z, w)` with x² + y² + z² = w².
const QUADRUPLES: [[i64; 4]; 6] = [
    [1, 2, 2, 3],
    [2, 3, 6, 7],
    [1, 4, 8, 9],
    [4, 4, 7, 9],
    [2, 6, 9, 11],
    [6, 6, 7, 11],
];

fn pythagorean_pairs(count: usize) -> Vec<(i64, i64)> {
    (2i64..)
        .flat_map(|a| (1..a).map(move |b| (a, b)))
        .take(count)
        .collect()
}

/// On-shell 3D parameters: |p| from a Pythagorean triple, direction from a quadruple.
fn three_d_params(a: i64, b: i64, q: [i64; 4]) -> OnShellParams {
    let one_d = pythagorean_params(a, b);
    let size = &one_d.p[0] / rat(q[3]);
    let p = [q[0], q[1], q[2]].map(|c| &size * rat(c));
    OnShellParams::three_d(one_d.e, p, one_d.m)
}

fn dirac_nilpotents() -> VerifyEntry {
    let mut t = Tally::new();
    let f1 = dirac_frame(SpaceDim::One);
    let f3 = dirac_frame(SpaceDim::Three);
    for (i, (a, b)) in pythagorean_pairs(50).into_iter().enumerate() {
        let p1 = pythagorean_params(a, b);
        let p3 = three_d_params(a, b, QUADRUPLES[i % QUADRUPLES.len()]);
        t.holds("on shell", p1.on_shell() && p3.on_shell());
        for version in [DaggerVersion::Conjugate, DaggerVersion::TimeReversed] {
            for (frame, params) in [(&f1, &p1), (&f3, &p3)] {
                match verify_relations(frame, params, version) {
                    Ok(checks) => {
                        for c in checks {
                            t.eq(&c.lhs, &c.rhs);
                        }
                    }
                    Err(e) => t.fail("relations", e),
                }
            }
        }
    }
    t.finish(
        "14-dirac",
        "dirac",
        "U² = U†² = 0, anticommutators, Majorana split, plane wave on 50 triples, 1D and 3D",
    )
}

fn majorana_dirac() -> VerifyEntry {
    let mut t = Tally::new();
    let g = majorana_dirac_generators();
    t.holds("entrywise real", g.all_real());
    for c in &g.relation_table {
        t.eq(&c.lhs, &c.rhs);
    }
    for c in commuting_copies_check() {
        t.eq(&c.lhs, &c.rhs);
    }
    t.finish(
        "15-majorana-dirac",
        "majorana-dirac",
        "real generators, squares, anticommutation, commuting copies",
    )
}

fn discrete_calculus(seed: u64) -> Vec<VerifyEntry> {
    let id = "16a-commutator";
    let mut rng = rng_for(seed, id);
    let mut t = Tally::new();
    for _ in 0..200 {
        let x = Sequence::random(&mut rng, 12, 20, 7);
        let dt = random_rational(&mut rng, 5, 5).abs() + Rational::one();
        match basic_commutator(&x, &dt) {
            Ok(r) => t.eq(r.lhs.to_json(), r.rhs.to_json()),
            Err(e) => t.fail("commutator", e),
        }
    }
    let id_b = "16b-brownian";
    let mut rng = rng_for(seed, id_b);
    let mut b = Tally::new();
    for _ in 0..50 {
        let dx = random_rational(&mut rng, 6, 4).abs() + Rational::one();
        let dt = random_rational(&mut rng, 6, 4).abs() + Rational::one();
        let mut x = rat(0);
        let mut samples = vec![x.clone()];
        for _ in 0..20 {
            if rng.gen_bool(0.5) {
                x += &dx;
            } else {
                x -= &dx;
            }
            samples.push(x.clone());
        }
        let k = &dx * &dx / &dt;
        match brownian_constancy(&Sequence::new(samples), &dt) {
            Ok(r) => b.eq(format!("{:?}", r.k), format!("{:?}", Some(k))),
            Err(e) => b.fail("walk", e),
        }
        let drift = Sequence::new((0..10).map(|i| &dx * rat(i * i)).collect());
        match brownian_constancy(&drift, &dt) {
            Ok(r) => b.holds("accelerating path is not constant", !r.constant),
            Err(e) => b.fail("drift", e),
        }
    }
    vec![
        t.finish(
            id,
            "discrete-calculus",
            "[x, Dx] = J(Δx)²/Δt on random rational sequences",
        ),
        b.finish(
            id_b,
            "discrete-calculus",
            "(Δx)²/Δt is constant on ±Δx walks",
        ),
    ]
}

fn schrodinger() -> Vec<VerifyEntry> {
    let mut disp = Tally::new();
    let cfg = LatticeConfig::new(256, 1.0, 0.05, 1.0, 4000);
    match dispersion_convergence(&cfg, 3) {
        Ok(c) => {
            disp.holds("rel_error < 2%", c.coarse.rel_error < 0.02);
            disp.holds("halving dt reduces the error", c.improves);
        }
        Err(e) => disp.fail("dispersion", e),
    }
    match dispersion_check(&cfg, 0) {
        Ok(d) => disp.holds("k = 0 is stationary", d.measured_omega.abs() < 1e-12),
        Err(e) => disp.fail("k = 0", e),
    }
    let mut norm = Tally::new();
    let cfg = LatticeConfig::new(256, 1.0, 0.1, 1.0, 10_000);
    let init = Initial::Gaussian {
        mu: 128.0,
        sigma: 10.0,
        k0: 0.0,
    };
    match init.fields(&cfg).and_then(|(e, o)| run(&cfg, &e, &o, 100)) {
        Ok(r) => {
            norm.holds("finite", r.is_finite());
            norm.holds("norm drift < 1%", r.max_norm_drift() < 0.01);
        }
        Err(e) => norm.fail("run", e),
    }
    vec![
        disp.finish(
            "17a-dispersion",
            "schrodinger",
            "mode 3 matches κ·k_eff² within 2%, first-order in dt",
        ),
        norm.finish(
            "17b-norm",
            "schrodinger",
            "norm drift below 1% over 10^4 steps at r = 0.1",
        ),
    ]
}

/// Runs every check. Entries are sorted by `check_id`.
pub fn verify_all(seed: u64) -> VerifyReport {
    let mut entries = vec![
        iterant_sqrt(),
        matrix_product(seed),
        determinant_bridge(seed),
        s3_matrices(),
        quaternions(),
        fermions(),
        fusion(),
        minkowski(seed),
        dirac_nilpotents(),
        majorana_dirac(),
    ];
    entries.extend(gtable_theorem(seed));
    entries.extend(decomposition(seed));
    entries.extend(kernel(seed));
    entries.extend(braiding());
    entries.extend(laws_of_form(seed));
    entries.extend(discrete_calculus(seed));
    entries.extend(schrodinger());
    entries.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    debug_assert_eq!(
        entries
            .iter()
            .map(|e| &e.check_id)
            .collect::<BTreeSet<_>>()
            .len(),
        entries.len()
    );
    VerifyReport { seed, entries }
}
