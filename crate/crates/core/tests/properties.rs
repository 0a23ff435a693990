use iterant_core::clifford::{braid_conjugate, clifford_rep, fusion_mul, FusionElement};
use iterant_core::dirac::{dirac_frame, OnShellParams, SpaceDim};
use iterant_core::discrete::{basic_commutator, Sequence};
use iterant_core::groups::{group_make, GroupSpec};
use iterant_core::iterant::{a_n, iterant_det, vect2, vect_regular, IterantElement};
use iterant_core::lof::{reduce, MarkExpr};
use iterant_core::matrep::{kernel_test, to_matrix};
use iterant_core::scalar::rat;
use iterant_core::{Scalar, SquareMatrix};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn algebra(which: usize) -> std::sync::Arc<iterant_core::groups::GroupAction> {
    match which {
        0 => vect2(),
        1 => vect_regular(&GroupSpec::Cyclic(3)).unwrap(),
        2 => vect_regular(&GroupSpec::Symmetric(3)).unwrap(),
        _ => a_n(3).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn scalar_field_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let [a, b, c] = [(); 3].map(|_| Scalar::random(&mut r, 20, 9));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert!((&a * &a.conj()).is_real());
    }

    #[test]
    fn iterant_product_is_associative(seed in any::<u64>(), which in 0usize..4) {
        let a = algebra(which);
        let mut r = rng(seed);
        let [x, y, z] = [(); 3].map(|_| IterantElement::random(&a, &mut r, 9, 4));
        let left = x.try_mul(&y).unwrap().try_mul(&z).unwrap();
        let right = x.try_mul(&y.try_mul(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn matrix_image_is_multiplicative(seed in any::<u64>(), which in 0usize..4) {
        let a = algebra(which);
        let mut r = rng(seed);
        let x = IterantElement::random(&a, &mut r, 9, 4);
        let y = IterantElement::random(&a, &mut r, 9, 4);
        prop_assert_eq!(to_matrix(&x.try_mul(&y).unwrap()), &to_matrix(&x) * &to_matrix(&y));
    }

    #[test]
    fn determinant_bridge(seed in any::<u64>()) {
        let a = vect2();
        let mut r = rng(seed);
        let z = IterantElement::random(&a, &mut r, 20, 6);
        let w = IterantElement::random(&a, &mut r, 20, 6);
        let dz = iterant_det(&z).unwrap();
        prop_assert_eq!(&dz, &to_matrix(&z).det());
        let dzw = iterant_det(&z.try_mul(&w).unwrap()).unwrap();
        prop_assert_eq!(dzw, &dz * &iterant_det(&w).unwrap());
    }

    #[test]
    fn kernel_criteria_agree(seed in any::<u64>(), force in any::<bool>()) {
        let a = a_n(3).unwrap();
        let mut r = rng(seed);
        let x = IterantElement::random(&a, &mut r, 9, 3);
        // x minus its re-embedded image lies in the kernel
        let x = if force {
            let back = iterant_core::matrep::embed_matrix(&to_matrix(&x)).unwrap();
            x.try_sub(&back).unwrap()
        } else {
            x
        };
        let k = kernel_test(&x);
        prop_assert!(k.criteria_agree());
        if force {
            prop_assert!(k.in_kernel);
        }
    }

    #[test]
    fn commutator_identity(seed in any::<u64>(), d in 1i64..6) {
        let mut r = rng(seed);
        let x = Sequence::random(&mut r, 16, 30, 5);
        let dt = iterant_core::scalar::ratio(1, d);
        prop_assert!(basic_commutator(&x, &dt).unwrap().equal);
    }

    #[test]
    fn reduction_steps_shrink(seed in any::<u64>()) {
        let mut r = rng(seed);
        let e = MarkExpr::random(&mut r, 6, 4);
        let red = reduce(&e).unwrap();
        let mut prev = (e.mark_count(), e.depth());
        for step in &red.trace {
            let next = MarkExpr::parse(&step.after).unwrap();
            let key = (next.mark_count(), next.depth());
            prop_assert!(key < prev, "{} -> {}", step.before, step.after);
            prev = key;
        }
    }

    #[test]
    fn momentum_squares_to_norm(px in -20i64..20, py in -20i64..20, pz in -20i64..20) {
        let frame = dirac_frame(SpaceDim::Three);
        let p = [rat(px), rat(py), rat(pz)];
        let norm = &p[0] * &p[0] + &p[1] * &p[1] + &p[2] * &p[2];
        let params = OnShellParams::three_d(rat(1), p, rat(0));
        let m = frame.momentum(&params).unwrap();
        prop_assert_eq!(&m * &m, SquareMatrix::scalar(m.dim(), Scalar::real(norm)));
    }
}

#[test]
fn g_tables_are_latin_squares() {
    for spec in ["c3", "c6", "s3", "klein4", "s4"] {
        let g = group_make(&spec.parse().unwrap()).unwrap();
        assert!(
            iterant_core::groups::g_table(&g).is_latin_square(),
            "{spec}"
        );
    }
}

#[test]
fn braiding_preserves_anticommutation() {
    for n in 2..=6 {
        let rep = clifford_rep(n).unwrap();
        let id = SquareMatrix::identity(rep.dim());
        for k in 1..n {
            let images: Vec<SquareMatrix> = rep
                .gens()
                .iter()
                .map(|c| braid_conjugate(&rep, k, c).unwrap())
                .collect();
            for (a, x) in images.iter().enumerate() {
                assert_eq!(&(x * x), &id, "n={n} k={k} c{}", a + 1);
                for y in &images[a + 1..] {
                    assert!(x.anticommutator(y).is_zero(), "n={n} k={k}");
                }
            }
        }
    }
}

#[test]
fn fusion_is_commutative_and_associative() {
    let all: Vec<FusionElement> = (0..=10)
        .flat_map(|a| (0..=10).map(move |b| FusionElement::new(a, b)))
        .collect();
    for u in &all {
        for v in &all {
            assert_eq!(fusion_mul(u, v), fusion_mul(v, u));
        }
    }
    let few: Vec<&FusionElement> = all.iter().step_by(7).collect();
    for u in &few {
        for v in &few {
            for w in &few {
                assert_eq!(
                    fusion_mul(&fusion_mul(u, v), w),
                    fusion_mul(u, &fusion_mul(v, w))
                );
            }
        }
    }
    let (mut a, mut b) = (0u64, 1u64);
    for n in 1..60 {
        assert_eq!(FusionElement::p().pow(n).p_coeff, b.into(), "P^{n}");
        (a, b) = (b, a + b);
    }
}
