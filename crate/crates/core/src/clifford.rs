//! Split quaternions, quaternion constructions, Majorana generators and
//! their braiding, fermion operators, the Fibonacci fusion ring, and the
//! spacetime examples.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::GroupSpec;
use crate::iterant::{iterant_det, vect2, vect_regular, IterantElement};
use crate::matrep::to_matrix;
use crate::matrix::SquareMatrix;
use crate::scalar::{Rational, Scalar};

const MAX_GENERATORS: usize = 8;

pub struct SplitQuaternions {
    pub one: SquareMatrix,
    pub eps: SquareMatrix,
    pub eta: SquareMatrix,
    pub i_elem: SquareMatrix,
}

/// `ε = diag(-1, 1)`, `η` the swap, `i = εη`.
pub fn split_quaternion_rep() -> SplitQuaternions {
    let eps = SquareMatrix::from_ints(&[&[-1, 0], &[0, 1]]);
    let eta = SquareMatrix::from_ints(&[&[0, 1], &[1, 0]]);
    let i_elem = &eps * &eta;
    SplitQuaternions {
        one: SquareMatrix::identity(2),
        eps,
        eta,
        i_elem,
    }
}

/// `ιεη` with `ι` the commuting square root of −1; squares to 1 and
/// anticommutes with `ε` and `η`.
fn third_pauli() -> SquareMatrix {
    let sq = split_quaternion_rep();
    sq.i_elem.scale(&Scalar::i())
}

/// A set of pairwise anticommuting matrices squaring to the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct CliffordRep {
    gens: Vec<SquareMatrix>,
}

impl CliffordRep {
    pub fn from_generators(gens: Vec<SquareMatrix>) -> Result<Self> {
        let Some(first) = gens.first() else {
            return Ok(Self { gens });
        };
        let d = first.dim();
        for (a, g) in gens.iter().enumerate() {
            if g.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: g.dim(),
                });
            }
            if !(g * g).is_identity() {
                return Err(Error::RelationFailed(format!("c{}² ≠ 1", a + 1)));
            }
            for (b, h) in gens.iter().enumerate().skip(a + 1) {
                if !g.anticommutator(h).is_zero() {
                    return Err(Error::RelationFailed(format!(
                        "c{} and c{} do not anticommute",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        Ok(Self { gens })
    }

    pub fn n_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn dim(&self) -> usize {
        self.gens.first().map_or(1, SquareMatrix::dim)
    }

    pub fn gens(&self) -> &[SquareMatrix] {
        &self.gens
    }

    /// 1-based.
    pub fn gen(&self, k: usize) -> Result<&SquareMatrix> {
        if k == 0 || k > self.gens.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                max: self.gens.len(),
            });
        }
        Ok(&self.gens[k - 1])
    }

    /// Coordinates of `x` in the span of the generators, read off with
    /// `tr(c_l x)/dim`. `None` when `x` is not in that span.
    pub fn coordinates(&self, x: &SquareMatrix) -> Option<Vec<Scalar>> {
        let dim = Scalar::int(self.dim() as i64);
        let coords: Vec<Scalar> = self
            .gens
            .iter()
            .map(|c| (c * x).trace().checked_div(&dim).expect("nonzero dim"))
            .collect();
        let rebuilt = self
            .gens
            .iter()
            .zip(&coords)
            .fold(SquareMatrix::zero(self.dim()), |acc, (c, a)| {
                &acc + &c.scale(a)
            });
        (rebuilt == *x).then_some(coords)
    }
}

/// `n` Majorana generators on `2^⌈n/2⌉` dimensions:
/// `c_{2k-1} = Z^{⊗(k-1)} ⊗ ε ⊗ 1…`, `c_{2k} = Z^{⊗(k-1)} ⊗ η ⊗ 1…` with `Z = ιεη`.
pub fn clifford_rep(n: usize) -> Result<CliffordRep> {
    if n > MAX_GENERATORS {
        return Err(Error::SizeLimit {
            what: "Clifford generators",
            max: MAX_GENERATORS,
            got: n,
        });
    }
    let sq = split_quaternion_rep();
    let z = third_pauli();
    let sites = n.div_ceil(2);
    let gens = (0..n)
        .map(|idx| {
            let site = idx / 2;
            let local = if idx % 2 == 0 { &sq.eps } else { &sq.eta };
            (0..sites).fold(SquareMatrix::identity(1), |acc, s| {
                let f = match s.cmp(&site) {
                    std::cmp::Ordering::Less => &z,
                    std::cmp::Ordering::Equal => local,
                    std::cmp::Ordering::Greater => &sq.one,
                };
                acc.kron(f)
            })
        })
        .collect();
    CliffordRep::from_generators(gens)
}

/// `{ε, η, ιεη}` on two dimensions.
pub fn majorana_triple_2x2() -> CliffordRep {
    let sq = split_quaternion_rep();
    CliffordRep::from_generators(vec![sq.eps, sq.eta, third_pauli()]).expect("Pauli triple")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuaternionVariant {
    Klein4,
    Iota2x2,
    MajoranaTriple,
}

impl std::str::FromStr for QuaternionVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "klein4" => Ok(Self::Klein4),
            "iota_2x2" | "iota" => Ok(Self::Iota2x2),
            "majorana_triple" | "majorana" => Ok(Self::MajoranaTriple),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuaternionTriple {
    pub i: SquareMatrix,
    pub j: SquareMatrix,
    pub k: SquareMatrix,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationCheck {
    pub check: String,
    pub pass: bool,
}

impl QuaternionTriple {
    /// All 16 products of `{1, I, J, K}` against the Hamilton table.
    pub fn verify(&self) -> Vec<RelationCheck> {
        let one = SquareMatrix::identity(self.i.dim());
        let units = [&one, &self.i, &self.j, &self.k];
        let labels = ["1", "I", "J", "K"];
        // (sign, index) of units[a]·units[b]
        const TABLE: [[(i64, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        let mut out = Vec::with_capacity(17);
        for a in 0..4 {
            for b in 0..4 {
                let (sign, c) = TABLE[a][b];
                let expected = units[c].scale(&Scalar::int(sign));
                let sign_text = if sign < 0 { "-" } else { "" };
                out.push(RelationCheck {
                    check: format!("{}{} = {}{}", labels[a], labels[b], sign_text, labels[c]),
                    pass: units[a] * units[b] == expected,
                });
            }
        }
        out.push(RelationCheck {
            check: "IJK = -1".into(),
            pass: &(&self.i * &self.j) * &self.k == one.scale(&Scalar::int(-1)),
        });
        out
    }

    pub fn all_pass(&self) -> bool {
        self.verify().iter().all(|c| c.pass)
    }
}

/// Klein-4 signs `α, β, γ` attached to the permutations `A, B, C`.
pub fn klein4_quaternion_iterants() -> [IterantElement; 3] {
    let action = vect_regular(&GroupSpec::Klein4).expect("klein4");
    let g = action.group();
    let term = |name: &str, signs: [i64; 4]| {
        IterantElement::term(
            &action,
            g.element(name).expect("klein element"),
            signs.iter().map(|&s| Scalar::int(s)).collect(),
        )
        .expect("degree 4")
    };
    [
        term("A", [1, -1, -1, 1]),
        term("B", [1, 1, -1, -1]),
        term("C", [1, -1, 1, -1]),
    ]
}

pub fn quaternion_rep(variant: QuaternionVariant) -> QuaternionTriple {
    match variant {
        QuaternionVariant::Klein4 => {
            let [i, j, k] = klein4_quaternion_iterants();
            QuaternionTriple {
                i: to_matrix(&i),
                j: to_matrix(&j),
                k: to_matrix(&k),
            }
        }
        QuaternionVariant::Iota2x2 => {
            let sq = split_quaternion_rep();
            QuaternionTriple {
                i: sq.eps.scale(&Scalar::i()),
                j: &sq.eps * &sq.eta,
                k: sq.eta.scale(&Scalar::i()),
            }
        }
        QuaternionVariant::MajoranaTriple => {
            majorana_quaternions(&clifford_rep(3).expect("three generators"))
                .expect("three generators")
        }
    }
}

/// `I = ba, J = cb, K = ac` for a triple `a, b, c`.
pub fn majorana_quaternions(rep: &CliffordRep) -> Result<QuaternionTriple> {
    if rep.n_generators() != 3 {
        return Err(Error::WrongGeneratorCount {
            expected: 3,
            got: rep.n_generators(),
        });
    }
    let [a, b, c] = [&rep.gens[0], &rep.gens[1], &rep.gens[2]];
    Ok(QuaternionTriple {
        i: b * a,
        j: c * b,
        k: a * c,
    })
}

/// `(1 + u)·x·(1 − u)/2` with `u = c_{k+1}c_k`; the conjugation by the
/// normalized braider `(1 + u)/√2`, with the `√2` factors cancelled.
pub fn braid_conjugate(rep: &CliffordRep, k: usize, x: &SquareMatrix) -> Result<SquareMatrix> {
    if k == 0 || k >= rep.n_generators() {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: rep.n_generators().saturating_sub(1),
        });
    }
    if x.dim() != rep.dim() {
        return Err(Error::DimensionMismatch {
            expected: rep.dim(),
            got: x.dim(),
        });
    }
    let one = SquareMatrix::identity(rep.dim());
    let u = rep.gen(k + 1)? * rep.gen(k)?;
    let left = &one + &u;
    let right = &one - &u;
    Ok((&(&left * x) * &right).scale(&Scalar::frac(1, 2)))
}

/// `T_k` on the basis `c_1..c_n`: column `j` holds the coordinates of `T_k(c_j)`.
pub fn braid_matrix(n: usize, k: usize) -> Result<SquareMatrix> {
    let rep = clifford_rep(n)?;
    let mut m = SquareMatrix::zero(n);
    for j in 0..n {
        let image = braid_conjugate(&rep, k, &rep.gens[j])?;
        let coords = rep
            .coordinates(&image)
            .ok_or_else(|| Error::RelationFailed(format!("T_{k}(c{}) left the span", j + 1)))?;
        for (l, a) in coords.into_iter().enumerate() {
            m.set(l, j, a);
        }
    }
    Ok(m)
}

/// Product `T_{w_1}·T_{w_2}·…` of braid matrices.
pub fn braid_word_matrix(n: usize, word: &[usize]) -> Result<SquareMatrix> {
    word.iter().try_fold(SquareMatrix::identity(n), |acc, &k| {
        Ok(&acc * &braid_matrix(n, k)?)
    })
}

pub struct QuaternionBraiders {
    pub a: SquareMatrix,
    pub b: SquareMatrix,
    pub c: SquareMatrix,
    pub checks: Vec<RelationCheck>,
}

/// Unnormalized braiders `1 + I`, `1 + J`, `1 + K`. Each braid relation
/// has three factors on both sides, so the dropped `1/√2` cancel.
pub fn quaternion_braiders(rep: &CliffordRep) -> Result<QuaternionBraiders> {
    let q = majorana_quaternions(rep)?;
    let one = SquareMatrix::identity(rep.dim());
    let a = &one + &q.i;
    let b = &one + &q.j;
    let c = &one + &q.k;
    let braid = |x: &SquareMatrix, y: &SquareMatrix| &(x * y) * x == &(y * x) * y;
    let checks = vec![
        RelationCheck {
            check: "ABA = BAB".into(),
            pass: braid(&a, &b),
        },
        RelationCheck {
            check: "BCB = CBC".into(),
            pass: braid(&b, &c),
        },
        RelationCheck {
            check: "ACA = CAC".into(),
            pass: braid(&a, &c),
        },
        RelationCheck {
            check: "(1+I)(1-I) = 2".into(),
            pass: &a * &(&one - &q.i) == one.scale(&Scalar::int(2)),
        },
    ];
    Ok(QuaternionBraiders { a, b, c, checks })
}

pub struct FermionPair {
    pub psi: SquareMatrix,
    pub psi_dag: SquareMatrix,
    pub checks: Vec<RelationCheck>,
}

/// `ψ = (c_j + ι c_k)/2`, `ψ† = (c_j − ι c_k)/2`.
pub fn fermion_pair(rep: &CliffordRep, j: usize, k: usize) -> Result<FermionPair> {
    if j == k {
        return Err(Error::RelationFailed(
            "fermion pair needs distinct generators".into(),
        ));
    }
    let cj = rep.gen(j)?;
    let ck = rep.gen(k)?.scale(&Scalar::i());
    let half = Scalar::frac(1, 2);
    let psi = (cj + &ck).scale(&half);
    let psi_dag = (cj - &ck).scale(&half);
    let checks = vec![
        RelationCheck {
            check: "psi^2 = 0".into(),
            pass: (&psi * &psi).is_zero(),
        },
        RelationCheck {
            check: "psi_dag^2 = 0".into(),
            pass: (&psi_dag * &psi_dag).is_zero(),
        },
        RelationCheck {
            check: "psi psi_dag + psi_dag psi = 1".into(),
            pass: psi.anticommutator(&psi_dag).is_identity(),
        },
    ];
    Ok(FermionPair {
        psi,
        psi_dag,
        checks,
    })
}

/// `a·1 + b·P` with `P² = 1 + P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FusionElement {
    pub unit_coeff: BigUint,
    pub p_coeff: BigUint,
}

impl FusionElement {
    pub fn new(unit: u64, p: u64) -> Self {
        Self {
            unit_coeff: unit.into(),
            p_coeff: p.into(),
        }
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn p() -> Self {
        Self::new(0, 1)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| fusion_mul(&acc, self))
    }
}

impl fmt::Display for FusionElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}P", self.unit_coeff, self.p_coeff)
    }
}

pub fn fusion_mul(u: &FusionElement, v: &FusionElement) -> FusionElement {
    let (a, b) = (&u.unit_coeff, &u.p_coeff);
    let (c, d) = (&v.unit_coeff, &v.p_coeff);
    let bd = b * d;
    FusionElement {
        unit_coeff: a * c + &bd,
        p_coeff: a * d + b * c + bd,
    }
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rational::new(sn, sd))
}

#[derive(Debug, Clone, PartialEq)]
pub enum BoostResult {
    /// `γ = 1/√(1 − v²)` is rational.
    Exact { t: Rational, x: Rational },
    /// The boosted light-cone pair is `[k·u, w/k]` with `k² = (1 + v)/(1 − v)`.
    LightCone {
        k_squared: Rational,
        u: Rational,
        w: Rational,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Boost {
    pub result: BoostResult,
    pub interval_before: Rational,
    pub interval_after: Rational,
}

impl Boost {
    pub fn invariant_holds(&self) -> bool {
        self.interval_before == self.interval_after
    }
}

pub fn lorentz_boost(v: &Rational, t: &Rational, x: &Rational) -> Result<Boost> {
    let one = Rational::one();
    let v2 = v * v;
    if v2 >= one {
        return Err(Error::Superluminal(v.to_string()));
    }
    let interval_before = t * t - x * x;
    match rational_sqrt(&(&one - &v2)) {
        Some(root) => {
            let tp = (t - x * v) / &root;
            let xp = (x - v * t) / &root;
            let interval_after = &tp * &tp - &xp * &xp;
            Ok(Boost {
                result: BoostResult::Exact { t: tp, x: xp },
                interval_before,
                interval_after,
            })
        }
        None => {
            let u = t - x;
            let w = t + x;
            // (k u)(w / k) = u w
            let interval_after = &u * &w;
            Ok(Boost {
                result: BoostResult::LightCone {
                    k_squared: (&one + v) / (&one - v),
                    u,
                    w,
                },
                interval_before,
                interval_after,
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpacetimeEvent {
    pub t: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl SpacetimeEvent {
    pub fn new(t: i64, x: i64, y: i64, z: i64) -> Self {
        let r = |n: i64| Rational::from_integer(BigInt::from(n));
        Self {
            t: r(t),
            x: r(x),
            y: r(y),
            z: r(z),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinkowskiReport {
    pub h: SquareMatrix,
    pub det: Rational,
    /// `[1, −2T, det]` for `λ² − 2Tλ + det`.
    pub charpoly: [Rational; 3],
    pub hermitian: bool,
    /// `D(Z)` of `[T+X, T−X] + [Y+Zι, Y−Zι]η` agrees with `det`.
    pub iterant_det_agrees: bool,
}

pub fn minkowski_h(e: &SpacetimeEvent) -> MinkowskiReport {
    let re = |r: &Rational| Scalar::real(r.clone());
    let yz_plus = Scalar::new(e.y.clone(), e.z.clone());
    let yz_minus = Scalar::new(e.y.clone(), -e.z.clone());
    let h = SquareMatrix::from_rows(vec![
        vec![re(&(&e.t + &e.x)), yz_plus.clone()],
        vec![yz_minus.clone(), re(&(&e.t - &e.x))],
    ])
    .expect("2x2");
    let det = &e.t * &e.t - &e.x * &e.x - &e.y * &e.y - &e.z * &e.z;
    let z = IterantElement::from_terms(
        &vect2(),
        vec![
            (0, vec![re(&(&e.t + &e.x)), re(&(&e.t - &e.x))]),
            (1, vec![yz_plus, yz_minus]),
        ],
    )
    .expect("degree 2");
    let iterant_det_agrees = to_matrix(&z) == h
        && iterant_det(&z).ok() == Some(Scalar::real(det.clone()))
        && h.det() == Scalar::real(det.clone());
    MinkowskiReport {
        hermitian: h.is_hermitian(),
        charpoly: [
            Rational::one(),
            -(&e.t * Rational::from_integer(BigInt::from(2))),
            det.clone(),
        ],
        det,
        h,
        iterant_det_agrees,
    }
}
