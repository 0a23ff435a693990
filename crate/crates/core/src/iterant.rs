//! Iterant algebras `Vect_n(G, F)` and `A_n`.
//!
//! An element is a finite sum of terms `a·g`, where `a` is a length-`n`
//! coefficient vector and `g` a group element acting on `n` points. The
//! product is `(a·g)(b·h) = (a ⊙ b^g)·(gh)` with `(b^g)_i = b_{i·g}`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groups::{regular_action, Group, GroupAction, GroupSpec};
use crate::scalar::Scalar;

pub type CoeffVector = Vec<Scalar>;

const MAX_AN_DEGREE: usize = 5;

/// `Vect_2(S_2)`: two points, elements `1` and `e` (the shift η).
pub fn vect2() -> Arc<GroupAction> {
    let g = Group::from_table(vec!["1".into(), "e".into()], vec![vec![0, 1], vec![1, 0]])
        .expect("order-2 table");
    Arc::new(regular_action(&g))
}

/// `Vect_n(G)` for the right regular action of `G`.
pub fn vect_regular(spec: &GroupSpec) -> Result<Arc<GroupAction>> {
    let g = crate::groups::group_make(spec)?;
    Ok(Arc::new(regular_action(&g)))
}

/// `A_n`: `S_n` acting naturally on `n` points.
pub fn a_n(n: usize) -> Result<Arc<GroupAction>> {
    if n == 0 || n > MAX_AN_DEGREE {
        return Err(Error::SizeLimit {
            what: "A_n degree",
            max: MAX_AN_DEGREE,
            got: n,
        });
    }
    Ok(Arc::new(GroupAction::natural_symmetric(n)?))
}

#[derive(Clone)]
pub struct IterantElement {
    action: Arc<GroupAction>,
    terms: BTreeMap<usize, CoeffVector>,
}

fn same_action(a: &Arc<GroupAction>, b: &Arc<GroupAction>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

impl IterantElement {
    pub fn zero(action: &Arc<GroupAction>) -> Self {
        Self {
            action: action.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(action: &Arc<GroupAction>, s: Scalar) -> Self {
        let n = action.degree();
        Self::term(action, action.group().identity(), vec![s; n]).expect("degree matches")
    }

    pub fn one(action: &Arc<GroupAction>) -> Self {
        Self::scalar(action, Scalar::one())
    }

    /// `[1, …, 1]·g`.
    pub fn shift(action: &Arc<GroupAction>, g: usize) -> Self {
        Self::term(action, g, vec![Scalar::one(); action.degree()]).expect("degree matches")
    }

    pub fn term(action: &Arc<GroupAction>, g: usize, vec: CoeffVector) -> Result<Self> {
        Self::from_terms(action, vec![(g, vec)])
    }

    /// Sums the given terms; repeated group elements are merged.
    pub fn from_terms(
        action: &Arc<GroupAction>,
        terms: impl IntoIterator<Item = (usize, CoeffVector)>,
    ) -> Result<Self> {
        let n = action.degree();
        let mut out = Self::zero(action);
        for (g, v) in terms {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
            if g >= action.group().order() {
                return Err(Error::IndexOutOfRange {
                    index: g,
                    max: action.group().order() - 1,
                });
            }
            out.accumulate(g, &v);
        }
        Ok(out)
    }

    fn accumulate(&mut self, g: usize, v: &[Scalar]) {
        let slot = self
            .terms
            .entry(g)
            .or_insert_with(|| vec![Scalar::zero(); v.len()]);
        for (s, x) in slot.iter_mut().zip(v) {
            *s += x;
        }
        if is_zero_vec(slot) {
            self.terms.remove(&g);
        }
    }

    pub fn action(&self) -> &Arc<GroupAction> {
        &self.action
    }

    pub fn degree(&self) -> usize {
        self.action.degree()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &CoeffVector)> {
        self.terms.iter().map(|(&g, v)| (g, v))
    }

    pub fn coeff(&self, g: usize) -> CoeffVector {
        self.terms
            .get(&g)
            .cloned()
            .unwrap_or_else(|| vec![Scalar::zero(); self.degree()])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(s)` when the element is `s·[1, …, 1]·1`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        let id = self.action.group().identity();
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let v = self.terms.get(&id)?;
                v.iter().all(|x| *x == v[0]).then(|| v[0].clone())
            }
            _ => None,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_action(&self.action, &other.action) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (g, v) in &other.terms {
            out.accumulate(*g, v);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|x| -x)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        self.map_coeffs(|x| x * s)
    }

    fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        let mut out = Self::zero(&self.action);
        for (g, v) in &self.terms {
            let w: Vec<Scalar> = v.iter().map(&f).collect();
            if !is_zero_vec(&w) {
                out.terms.insert(*g, w);
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let group = self.action.group();
        let mut out = Self::zero(&self.action);
        for (&g, a) in &self.terms {
            let pg = self.action.perm(g);
            for (&h, b) in &other.terms {
                let prod: Vec<Scalar> = a
                    .iter()
                    .enumerate()
                    .map(|(i, ai)| ai * &b[pg.image(i)])
                    .collect();
                out.accumulate(group.mul(g, h), &prod);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.action);
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same algebra");
        }
        acc
    }

    /// Random element with entries `p/q`, `|p| ≤ bound`, `1 ≤ q ≤ den_bound`.
    pub fn random<R: Rng + ?Sized>(
        action: &Arc<GroupAction>,
        rng: &mut R,
        bound: i64,
        den_bound: i64,
    ) -> Self {
        let n = action.degree();
        let mut terms = Vec::new();
        for g in 0..action.group().order() {
            if rng.gen_bool(0.75) {
                let v = (0..n)
                    .map(|_| Scalar::real(crate::scalar::random_rational(rng, bound, den_bound)))
                    .collect();
                terms.push((g, v));
            }
        }
        Self::from_terms(action, terms).expect("well-formed terms")
    }

    /// Parses `"[a,b] + [c,d]e"`; each term is a bracketed vector followed by
    /// an optional element name (group name or cycle notation).
    pub fn parse(action: &Arc<GroupAction>, text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "0" {
            return Ok(Self::zero(action));
        }
        let mut terms = Vec::new();
        let mut rest = t;
        loop {
            let open = rest
                .strip_prefix('[')
                .ok_or_else(|| Error::Parse(format!("expected `[` in `{rest}`")))?;
            let close = open
                .find(']')
                .ok_or_else(|| Error::Parse(format!("unclosed `[` in `{t}`")))?;
            let vec = open[..close]
                .split(',')
                .map(|s| s.parse::<Scalar>())
                .collect::<Result<Vec<_>>>()?;
            let after = &open[close + 1..];
            let (name, tail) = split_term_tail(after);
            let g = if name.is_empty() {
                action.group().identity()
            } else {
                action.element(name)?
            };
            terms.push((g, vec));
            match tail.trim_start().strip_prefix('+') {
                Some(next) => rest = next.trim_start(),
                None if tail.trim().is_empty() => break,
                None => return Err(Error::Parse(format!("unexpected `{}`", tail.trim()))),
            }
        }
        Self::from_terms(action, terms)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(&g, v)| json!({ "g": self.action.group().name(g), "vec": v }))
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(action: &Arc<GroupAction>, value: &Value) -> Result<Self> {
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing `terms` array".into()))?;
        let mut out = Vec::new();
        for t in terms {
            let name = t
                .get("g")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("term without `g`".into()))?;
            let vec: Vec<Scalar> = serde_json::from_value(
                t.get("vec")
                    .cloned()
                    .ok_or_else(|| Error::Parse("term without `vec`".into()))?,
            )
            .map_err(|e| Error::Parse(e.to_string()))?;
            out.push((action.element(name)?, vec));
        }
        Self::from_terms(action, out)
    }
}

/// Splits `"e + [..]"` into the element name and the remainder.
fn split_term_tail(s: &str) -> (&str, &str) {
    let s = s.trim_start();
    let mut depth = 0usize;
    for (k, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '+' | ' ' if depth == 0 => return (s[..k].trim(), &s[k..]),
            _ => {}
        }
    }
    (s.trim(), "")
}

impl PartialEq for IterantElement {
    fn eq(&self, other: &Self) -> bool {
        same_action(&self.action, &other.action) && self.terms == other.terms
    }
}

impl fmt::Display for IterantElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let group = self.action.group();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&g, v)| {
                let body: Vec<String> = v.iter().map(ToString::to_string).collect();
                let suffix = if g == group.identity() {
                    ""
                } else {
                    group.name(g)
                };
                format!("[{}]{}", body.join(","), suffix)
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for IterantElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn iterant_add(x: &IterantElement, y: &IterantElement) -> Result<IterantElement> {
    x.try_add(y)
}

pub fn iterant_mul(x: &IterantElement, y: &IterantElement) -> Result<IterantElement> {
    x.try_mul(y)
}

/// `[-1, 1]η` in `Vect_2(S_2)`.
pub fn iterant_i() -> IterantElement {
    let a = vect2();
    IterantElement::term(&a, 1, vec![Scalar::int(-1), Scalar::one()]).expect("degree 2")
}

/// `[1, -1]η`, the opposite sign choice; also squares to `-1`.
pub fn iterant_i_alt() -> IterantElement {
    iterant_i().neg()
}

fn require_vect2(z: &IterantElement) -> Result<()> {
    let ok = z.degree() == 2 && z.action.group().order() == 2 && z.action.is_regular();
    if ok {
        Ok(())
    } else {
        Err(Error::WrongAlgebra {
            expected: "Vect_2(S_2)",
        })
    }
}

/// `A + Bη ↦ Ā − Bη` with `[a, b]‾ = [b, a]`.
pub fn iterant_conj(z: &IterantElement) -> Result<IterantElement> {
    require_vect2(z)?;
    let id = z.action.group().identity();
    let eta = 1 - id;
    let a = z.coeff(id);
    let b = z.coeff(eta);
    IterantElement::from_terms(
        &z.action,
        vec![
            (id, vec![a[1].clone(), a[0].clone()]),
            (eta, b.iter().map(|x| -x).collect()),
        ],
    )
}

/// `D(Z)` with `Z·conj(Z) = D(Z)·1`; equals `ab − cd` for `[a,b] + [c,d]η`.
pub fn iterant_det(z: &IterantElement) -> Result<Scalar> {
    let prod = z.try_mul(&iterant_conj(z)?)?;
    Ok(prod
        .as_scalar()
        .expect("Z times its conjugate is a scalar in Vect_2"))
}

/// The `n·n!` basis `e_i·γ` of `A_n`, ordered by group element then point.
pub fn an_basis(n: usize) -> Result<Vec<IterantElement>> {
    let action = a_n(n)?;
    let mut out = Vec::with_capacity(n * action.group().order());
    for g in 0..action.group().order() {
        for i in 0..n {
            let mut v = vec![Scalar::zero(); n];
            v[i] = Scalar::one();
            out.push(IterantElement::term(&action, g, v)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::rank;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn s(n: i64) -> Scalar {
        Scalar::int(n)
    }

    fn v(xs: &[i64]) -> CoeffVector {
        xs.iter().map(|&x| s(x)).collect()
    }

    #[test]
    fn sums() {
        let a = vect2();
        let x = IterantElement::term(&a, 0, v(&[1, 2])).unwrap();
        let y = IterantElement::term(&a, 0, v(&[3, 4])).unwrap();
        assert_eq!(x.try_add(&y).unwrap().to_string(), "[4,6]");
        assert_eq!(x.try_add(&IterantElement::zero(&a)).unwrap(), x);
        let p = IterantElement::term(&a, 1, v(&[1, 0])).unwrap();
        let q = IterantElement::term(&a, 1, v(&[0, 1])).unwrap();
        assert_eq!(p.try_add(&q).unwrap().to_string(), "[1,1]e");
        assert!(x.try_sub(&x).unwrap().is_zero());
    }

    #[test]
    fn square_root_of_minus_one() {
        let i = iterant_i();
        assert_eq!(i.pow(2), IterantElement::scalar(i.action(), s(-1)));
        assert!(i.pow(4).as_scalar().unwrap().is_one());
        assert_eq!(iterant_i_alt().pow(2).as_scalar(), Some(s(-1)));
        let ab = IterantElement::term(i.action(), 0, v(&[3, 5])).unwrap();
        assert_eq!(i.try_mul(&ab).unwrap().to_string(), "[-5,3]e");
    }

    #[test]
    fn componentwise_products() {
        let a = vect2();
        let x = IterantElement::term(&a, 0, v(&[2, 3])).unwrap();
        let y = IterantElement::term(&a, 0, v(&[5, 7])).unwrap();
        assert_eq!(x.try_mul(&y).unwrap().to_string(), "[10,21]");
    }

    #[test]
    fn mismatched_algebras() {
        let x = IterantElement::one(&vect2());
        let y = IterantElement::one(&vect_regular(&GroupSpec::Cyclic(3)).unwrap());
        assert_eq!(x.try_add(&y), Err(Error::AlgebraMismatch));
        assert_eq!(x.try_mul(&y), Err(Error::AlgebraMismatch));
        assert!(matches!(iterant_conj(&y), Err(Error::WrongAlgebra { .. })));
    }

    #[test]
    fn conjugate_and_determinant() {
        let a = vect2();
        let z = IterantElement::parse(&a, "[1,2] + [3,4]e").unwrap();
        assert_eq!(iterant_det(&z).unwrap(), s(-10));
        let zc = iterant_conj(&z).unwrap();
        assert_eq!(zc.try_mul(&z).unwrap(), z.try_mul(&zc).unwrap());
        assert_eq!(
            iterant_conj(&IterantElement::one(&a)).unwrap(),
            IterantElement::one(&a)
        );
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let z = IterantElement::random(&a, &mut rng, 9, 4);
            let w = IterantElement::random(&a, &mut rng, 9, 4);
            let zw = z.try_mul(&w).unwrap();
            assert_eq!(
                iterant_det(&zw).unwrap(),
                &iterant_det(&z).unwrap() * &iterant_det(&w).unwrap()
            );
        }
    }

    #[test]
    fn shift_relations() {
        let a = vect2();
        let eta = IterantElement::shift(&a, 1);
        assert!(eta.pow(2).as_scalar().unwrap().is_one());
        let bc_eta = IterantElement::term(&a, 1, v(&[2, 9])).unwrap();
        let eta_cb = eta
            .try_mul(&IterantElement::term(&a, 0, v(&[9, 2])).unwrap())
            .unwrap();
        assert_eq!(bc_eta, eta_cb);

        let c3 = vect_regular(&GroupSpec::Cyclic(3)).unwrap();
        let sh = IterantElement::shift(&c3, 1);
        let xyz = IterantElement::term(&c3, 0, v(&[1, 2, 3])).unwrap();
        let zxy = IterantElement::term(&c3, 0, v(&[3, 1, 2])).unwrap();
        assert_eq!(xyz.try_mul(&sh).unwrap(), sh.try_mul(&zxy).unwrap());
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(an_basis(1).unwrap().len(), 1);
        assert_eq!(an_basis(2).unwrap().len(), 4);
        let b3 = an_basis(3).unwrap();
        assert_eq!(b3.len(), 18);
        let flat: Vec<Vec<Scalar>> = b3
            .iter()
            .map(|x| (0..6).flat_map(|g| x.coeff(g)).collect())
            .collect();
        assert_eq!(rank(&flat), 18);
        assert_eq!(an_basis(4).unwrap().len(), 96);
        assert!(matches!(an_basis(6), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn text_and_json_round_trip() {
        let a = vect2();
        let z = IterantElement::parse(&a, "[1/2,-3] + [0,2+i]e").unwrap();
        assert_eq!(z.to_string(), "[1/2,-3] + [0,2+1 i]e");
        assert_eq!(IterantElement::parse(&a, &z.to_string()).unwrap(), z);
        assert_eq!(IterantElement::from_json(&a, &z.to_json()).unwrap(), z);
        let a3 = a_n(3).unwrap();
        let y = IterantElement::parse(&a3, "[1,0,0] + [-1,0,0](23)").unwrap();
        assert_eq!(y.terms().count(), 2);
        assert!(IterantElement::parse(&a, "[1,2] + [3]e").is_err());
        assert!(IterantElement::parse(&a, "[1,2] q").is_err());
    }

    fn algebras() -> Vec<Arc<GroupAction>> {
        vec![
            vect2(),
            vect_regular(&GroupSpec::Cyclic(3)).unwrap(),
            vect_regular(&GroupSpec::Symmetric(3)).unwrap(),
            a_n(3).unwrap(),
        ]
    }

    #[test]
    fn associativity_500_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for a in algebras() {
            for _ in 0..500 {
                let x = IterantElement::random(&a, &mut rng, 5, 3);
                let y = IterantElement::random(&a, &mut rng, 5, 3);
                let z = IterantElement::random(&a, &mut rng, 5, 3);
                let l = x.try_mul(&y).unwrap().try_mul(&z).unwrap();
                let r = x.try_mul(&y.try_mul(&z).unwrap()).unwrap();
                assert_eq!(l, r);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn distributive(seed in any::<u64>(), which in 0usize..4) {
            let a = &algebras()[which];
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = IterantElement::random(a, &mut rng, 6, 3);
            let y = IterantElement::random(a, &mut rng, 6, 3);
            let z = IterantElement::random(a, &mut rng, 6, 3);
            let lhs = x.try_mul(&y.try_add(&z).unwrap()).unwrap();
            let rhs = x.try_mul(&y).unwrap().try_add(&x.try_mul(&z).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn eta_swaps_components(b in -50i64..50, c in -50i64..50, seed in any::<u64>()) {
            let a = vect2();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = IterantElement::random(&a, &mut rng, 6, 3);
            let lhs = IterantElement::term(&a, 1, v(&[b, c])).unwrap().try_mul(&x).unwrap();
            let rhs = IterantElement::shift(&a, 1)
                .try_mul(&IterantElement::term(&a, 0, v(&[c, b])).unwrap()).unwrap()
                .try_mul(&x).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn boost_preserves_component_product(a in -40i64..40, b in -40i64..40, k in 1i64..12) {
            let k = Scalar::int(k);
            let ka = &Scalar::int(a) * &k;
            let b_over_k = Scalar::int(b).checked_div(&k).unwrap();
            prop_assert_eq!(&ka * &b_over_k, Scalar::int(a * b));
        }
    }
}
