//! Matrices from iterants and back.
//!
//! `p(a·g) = Δ(a)·P(g)` sends an iterant to a matrix; `i(M)` embeds an
//! `n × n` matrix in `A_n` as `(1/(n-1)!) Σ_π v(M, π)·π` where
//! `v(M, π)_i = m_{i, i·π}`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groups::{perm_matrix, GroupAction, Permutation};
use crate::iterant::{a_n, CoeffVector, IterantElement};
pub use crate::matrix::SquareMatrix;
use crate::scalar::{Rational, Scalar};

const MAX_EMBED_DIM: usize = 5;
const MAX_ISO_ORDER: usize = 24;

pub fn to_matrix(x: &IterantElement) -> SquareMatrix {
    let n = x.degree();
    let mut m = SquareMatrix::zero(n);
    for (g, a) in x.terms() {
        let p = x.action().perm(g);
        for (i, ai) in a.iter().enumerate() {
            let j = p.image(i);
            let cell = m.get(i, j) + ai;
            m.set(i, j, cell);
        }
    }
    m
}

/// `v(M, π) = [m_{1, 1·π}, …, m_{n, n·π}]`.
pub fn diagonal_along(m: &SquareMatrix, pi: &Permutation) -> CoeffVector {
    (0..m.dim())
        .map(|i| m.get(i, pi.image(i)).clone())
        .collect()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn check_embed_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_EMBED_DIM {
        return Err(Error::SizeLimit {
            what: "matrix dimension",
            max: MAX_EMBED_DIM,
            got: n,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecompositionTerm {
    pub perm: String,
    pub diag: CoeffVector,
    #[serde(skip)]
    pub permutation: Permutation,
}

/// `M = factor · Σ Δ(diag)·P(perm)` with `factor = 1/(n-1)!`.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub n: usize,
    pub factor: Rational,
    pub terms: Vec<DecompositionTerm>,
}

impl Decomposition {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "factor": self.factor.to_string(),
            "terms": self.terms,
        })
    }
}

/// Every `π ∈ S_n` in the order of the natural action's listing.
pub fn decompose_matrix(m: &SquareMatrix) -> Result<Decomposition> {
    let n = m.dim();
    check_embed_dim(n)?;
    let action = a_n(n)?;
    let terms = (0..action.group().order())
        .map(|g| {
            let p = action.perm(g).clone();
            DecompositionTerm {
                perm: p.to_string(),
                diag: diagonal_along(m, &p),
                permutation: p,
            }
        })
        .collect();
    Ok(Decomposition {
        n,
        factor: Rational::new(BigInt::one(), factorial(n - 1)),
        terms,
    })
}

pub fn reassemble(d: &Decomposition) -> SquareMatrix {
    let sum = d.terms.iter().fold(SquareMatrix::zero(d.n), |acc, t| {
        &acc + &(&SquareMatrix::diag(&t.diag) * &perm_matrix(&t.permutation))
    });
    sum.scale_rational(&d.factor)
}

/// `i(M)` in `A_n`.
pub fn embed_matrix(m: &SquareMatrix) -> Result<IterantElement> {
    let n = m.dim();
    check_embed_dim(n)?;
    let action = a_n(n)?;
    embed_into(&action, m)
}

fn embed_into(action: &Arc<GroupAction>, m: &SquareMatrix) -> Result<IterantElement> {
    let scale = Scalar::real(Rational::new(BigInt::one(), factorial(m.dim() - 1)));
    let terms = (0..action.group().order()).map(|g| {
        let v = diagonal_along(m, action.perm(g));
        (g, v.iter().map(|x| x * &scale).collect())
    });
    IterantElement::from_terms(action, terms)
}

#[derive(Debug, Clone, PartialEq)]
pub struct KernelReport {
    pub in_kernel: bool,
    pub image: SquareMatrix,
    /// Whether every `Σ_{σ: i·σ = j} (a_σ)_i` vanishes.
    pub sums_vanish: bool,
}

impl KernelReport {
    pub fn criteria_agree(&self) -> bool {
        self.in_kernel == self.sums_vanish
    }
}

/// Kernel membership by the zero image and, independently, by the
/// entrywise sums over permutations sending `i` to `j`.
pub fn kernel_test(x: &IterantElement) -> KernelReport {
    let image = to_matrix(x);
    let n = x.degree();
    let mut sums_vanish = true;
    'outer: for i in 0..n {
        for j in 0..n {
            let mut total = Scalar::zero();
            for g in 0..x.action().group().order() {
                if x.action().act(g, i) == j {
                    total += &x.coeff(g)[i];
                }
            }
            if !total.is_zero() {
                sums_vanish = false;
                break 'outer;
            }
        }
    }
    KernelReport {
        in_kernel: image.is_zero(),
        image,
        sums_vanish,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsoReport {
    pub action: String,
    pub group_order: usize,
    pub degree: usize,
    pub samples: usize,
    pub homomorphism: bool,
    pub algebra_dim: usize,
    pub matrix_dim: usize,
    pub image_rank: usize,
    pub injective: bool,
    pub surjective: bool,
    pub isomorphism: bool,
}

/// Tests `p` for multiplicativity on random pairs and measures the rank of
/// the images of the basis `e_i·g`.
pub fn iso_check<R: Rng + ?Sized>(
    action: &Arc<GroupAction>,
    samples: usize,
    rng: &mut R,
) -> Result<IsoReport> {
    let order = action.group().order();
    if order > MAX_ISO_ORDER {
        return Err(Error::SizeLimit {
            what: "group order",
            max: MAX_ISO_ORDER,
            got: order,
        });
    }
    let homomorphism = (0..samples).all(|_| {
        let x = IterantElement::random(action, rng, 7, 3);
        let y = IterantElement::random(action, rng, 7, 3);
        to_matrix(&x.try_mul(&y).expect("same algebra")) == &to_matrix(&x) * &to_matrix(&y)
    });
    let n = action.degree();
    let images: Vec<Vec<Scalar>> = (0..order)
        .flat_map(|g| (0..n).map(move |i| (g, i)))
        .map(|(g, i)| {
            let mut v = vec![Scalar::zero(); n];
            v[i] = Scalar::one();
            let e = IterantElement::term(action, g, v).expect("basis term");
            to_matrix(&e).entries().to_vec()
        })
        .collect();
    let image_rank = crate::matrix::rank(&images);
    let algebra_dim = order * n;
    let matrix_dim = n * n;
    let injective = image_rank == algebra_dim;
    let surjective = image_rank == matrix_dim;
    Ok(IsoReport {
        action: action.label().to_string(),
        group_order: order,
        degree: n,
        samples,
        homomorphism,
        algebra_dim,
        matrix_dim,
        image_rank,
        injective,
        surjective,
        isomorphism: homomorphism && injective && surjective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupSpec;
    use crate::iterant::{iterant_det, vect2, vect_regular};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn v(xs: &[i64]) -> CoeffVector {
        xs.iter().map(|&x| Scalar::int(x)).collect()
    }

    fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> SquareMatrix {
        SquareMatrix::from_fn(n, |_, _| Scalar::random(rng, 9, 5))
    }

    #[test]
    fn period_two_layout() {
        let a = vect2();
        let z = IterantElement::parse(&a, "[1,4] + [2,3]e").unwrap();
        assert_eq!(to_matrix(&z), SquareMatrix::from_ints(&[&[1, 2], &[3, 4]]));
        assert!(to_matrix(&IterantElement::one(&a)).is_identity());
    }

    #[test]
    fn period_three_layout() {
        let c3 = vect_regular(&GroupSpec::Cyclic(3)).unwrap();
        // a..k = 1..9 in order a b c d e f g h k
        let x = IterantElement::from_terms(
            &c3,
            vec![(0, v(&[1, 2, 3])), (1, v(&[4, 5, 6])), (2, v(&[7, 8, 9]))],
        )
        .unwrap();
        assert_eq!(
            to_matrix(&x),
            SquareMatrix::from_ints(&[&[1, 4, 7], &[8, 2, 5], &[6, 9, 3]])
        );
    }

    #[test]
    fn worked_three_by_three_decomposition() {
        // a b c / d e f / g h k with values 1..9
        let m = SquareMatrix::from_ints(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let d = decompose_matrix(&m).unwrap();
        assert_eq!(d.factor, Rational::new(1.into(), 2.into()));
        let by_cycle = |c: &str| {
            d.terms
                .iter()
                .find(|t| t.perm == c)
                .map(|t| t.diag.clone())
                .unwrap()
        };
        assert_eq!(by_cycle("()"), v(&[1, 5, 9])); // [a,e,k]
        assert_eq!(by_cycle("(123)"), v(&[2, 6, 7])); // [b,f,g]
        assert_eq!(by_cycle("(132)"), v(&[3, 4, 8])); // [c,d,h]
        assert_eq!(by_cycle("(23)"), v(&[1, 6, 8])); // [a,f,h]
        assert_eq!(by_cycle("(13)"), v(&[3, 5, 7])); // [c,e,g]
        assert_eq!(by_cycle("(12)"), v(&[2, 4, 9])); // [b,d,k]
        assert_eq!(reassemble(&d), m);
        let doubled = d.terms.iter().fold(SquareMatrix::zero(3), |acc, t| {
            &acc + &(&SquareMatrix::diag(&t.diag) * &perm_matrix(&t.permutation))
        });
        assert_eq!(doubled, m.scale(&Scalar::int(2)));
    }

    #[test]
    fn embedding_examples() {
        let ones = SquareMatrix::from_fn(3, |_, _| Scalar::one());
        let e = embed_matrix(&ones).unwrap();
        assert_eq!(e.terms().count(), 6);
        for (_, c) in e.terms() {
            assert_eq!(c, &vec![Scalar::frac(1, 2); 3]);
        }
        let id = embed_matrix(&SquareMatrix::identity(2)).unwrap();
        assert_eq!(id.to_string(), "[1,1]");
        assert!(decompose_matrix(&SquareMatrix::zero(3))
            .unwrap()
            .terms
            .iter()
            .all(|t| t.diag.iter().all(Zero::is_zero)));
        assert!(matches!(
            embed_matrix(&SquareMatrix::identity(6)),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn random_four_by_four_reassembles() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let m = random_matrix(4, &mut rng);
        let d = decompose_matrix(&m).unwrap();
        assert_eq!(d.terms.len(), 24);
        assert_eq!(reassemble(&d), m);
    }

    #[test]
    fn permutation_moves_past_diagonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let p = Permutation::random(4, &mut rng);
            let a: Vec<Scalar> = (0..4).map(|_| Scalar::random(&mut rng, 9, 3)).collect();
            let lhs = &perm_matrix(&p) * &SquareMatrix::diag(&a);
            let rhs = &SquareMatrix::diag(&p.act_on(&a)) * &perm_matrix(&p);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn kernel_examples() {
        let a3 = a_n(3).unwrap();
        let x = IterantElement::parse(&a3, "[1,0,0] + [-1,0,0](23)").unwrap();
        let r = kernel_test(&x);
        assert!(r.in_kernel && r.sums_vanish);
        assert_eq!(x.pow(2), x.scale(&Scalar::int(2)));

        let (a, b, c) = (1, 2, 3);
        let y = IterantElement::parse(
            &a3,
            &format!(
                "[{a},{a},{a}] + [{b},{b},{b}](123) + [{c},{c},{c}](132) + \
                 [{},{},{}](13) + [{},{},{}](12) + [{},{},{}](23)",
                -c, -a, -b, -b, -c, -a, -a, -b, -c
            ),
        )
        .unwrap();
        let r = kernel_test(&y);
        assert!(r.in_kernel && r.sums_vanish);

        let lemma = |x: i64, y: i64, z: i64, w: i64, t: i64, r: i64, s: i64, p: i64, q: i64| {
            IterantElement::parse(
                &a3,
                &format!(
                    "[{x},{y},{z}] + [{},{w},{t}](23) + [{r},{},{s}](13) + [{p},{q},{}](12) + \
                     [{},{},{}](123) + [{},{},{}](132)",
                    -x, -y, -z, -p, -w, -s, -r, -q, -t
                ),
            )
            .unwrap()
        };
        let r = kernel_test(&lemma(1, 1, 1, 1, 1, 1, 1, 1, 1));
        assert!(r.in_kernel && r.sums_vanish);
        let r = kernel_test(&lemma(2, -3, 5, 7, 1, 4, -6, 9, 8));
        assert!(r.in_kernel && r.sums_vanish);

        let not_kernel = IterantElement::parse(&a3, "[1,0,0]").unwrap();
        let r = kernel_test(&not_kernel);
        assert!(!r.in_kernel && !r.sums_vanish);
    }

    #[test]
    fn iso_checks() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c3 = vect_regular(&GroupSpec::Cyclic(3)).unwrap();
        let r = iso_check(&c3, 50, &mut rng).unwrap();
        assert!(r.isomorphism);
        assert_eq!(r.matrix_dim, 9);
        let s3 = vect_regular(&GroupSpec::Symmetric(3)).unwrap();
        let r = iso_check(&s3, 50, &mut rng).unwrap();
        assert!(r.isomorphism && r.image_rank == 36);
        let a3 = a_n(3).unwrap();
        let r = iso_check(&a3, 50, &mut rng).unwrap();
        assert!(r.homomorphism && !r.injective && r.surjective);
        assert_eq!((r.algebra_dim, r.image_rank), (18, 9));
    }

    #[test]
    fn determinant_bridge() {
        let a = vect2();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..200 {
            let z = IterantElement::random(&a, &mut rng, 9, 4);
            assert_eq!(iterant_det(&z).unwrap(), to_matrix(&z).det());
        }
    }

    #[test]
    fn homomorphism_500_pairs_per_algebra() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for a in [
            vect2(),
            vect_regular(&GroupSpec::Cyclic(3)).unwrap(),
            vect_regular(&GroupSpec::Symmetric(3)).unwrap(),
            a_n(3).unwrap(),
        ] {
            for _ in 0..500 {
                let x = IterantElement::random(&a, &mut rng, 7, 3);
                let y = IterantElement::random(&a, &mut rng, 7, 3);
                assert_eq!(
                    to_matrix(&x.try_mul(&y).unwrap()),
                    &to_matrix(&x) * &to_matrix(&y)
                );
            }
        }
    }

    #[test]
    fn kernel_criteria_agree_on_a3() {
        let a3 = a_n(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let mut hits = 0;
        for k in 0..500 {
            let x = IterantElement::random(&a3, &mut rng, 3, 1);
            let x = if k % 2 == 0 {
                // force a kernel element: x − i(p(x))
                x.try_sub(&embed_matrix(&to_matrix(&x)).unwrap()).unwrap()
            } else {
                x
            };
            let r = kernel_test(&x);
            assert!(r.criteria_agree());
            hits += r.in_kernel as usize;
        }
        assert!(hits >= 250);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn projection_after_embedding_is_identity(n in 2usize..=4, seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_matrix(n, &mut rng);
            prop_assert_eq!(to_matrix(&embed_matrix(&m).unwrap()), m.clone());
            prop_assert_eq!(reassemble(&decompose_matrix(&m).unwrap()), m);
        }
    }
}
