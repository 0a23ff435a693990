//! Discrete calculus with a time-shift operator `J`.
//!
//! Sequences live on the grid `t = t0 + k·Δt`. The rule `f(t)·J = J·f(t+Δt)`
//! moves every `J` to the left, so a [`ShiftPoly`] is kept as `Σ J^k f_k`.
//! Coefficients are either constants or finite windows of samples, and every
//! product is valid only on the overlap of the windows involved.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{random_rational, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct Sequence {
    pub t0: Rational,
    pub samples: Vec<Rational>,
}

impl Sequence {
    pub fn new(samples: Vec<Rational>) -> Self {
        Self {
            t0: Rational::zero(),
            samples,
        }
    }

    /// `f(t0 + kΔt)` for `k = 0..len`.
    pub fn from_fn(
        len: usize,
        t0: &Rational,
        dt: &Rational,
        f: impl Fn(&Rational) -> Rational,
    ) -> Self {
        let samples = (0..len)
            .map(|k| f(&(t0 + dt * Rational::from_integer(k.into()))))
            .collect();
        Self {
            t0: t0.clone(),
            samples,
        }
    }

    /// Comma-separated rationals, e.g. `"0,1,0,1,0"` or `"1/2, 3"`.
    pub fn parse(text: &str) -> Result<Self> {
        let samples = text
            .split(',')
            .map(crate::scalar::parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(samples))
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, len: usize, bound: i64, den_bound: i64) -> Self {
        Self::new(
            (0..len)
                .map(|_| random_rational(rng, bound, den_bound))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    fn as_coeff(&self) -> Coeff {
        Coeff::Window {
            start: 0,
            values: self.samples.clone(),
        }
    }
}

/// A coefficient function on the grid, indexed by step number.
#[derive(Debug, Clone, PartialEq)]
pub enum Coeff {
    Const(Rational),
    Window { start: i64, values: Vec<Rational> },
}

impl Coeff {
    fn at(&self, k: i64) -> Option<&Rational> {
        match self {
            Coeff::Const(c) => Some(c),
            Coeff::Window { start, values } => {
                let off = k - start;
                (off >= 0).then(|| values.get(off as usize)).flatten()
            }
        }
    }

    /// `f(t + b·Δt)` as a function of `t`.
    fn shifted(&self, b: i64) -> Coeff {
        match self {
            Coeff::Const(c) => Coeff::Const(c.clone()),
            Coeff::Window { start, values } => Coeff::Window {
                start: start - b,
                values: values.clone(),
            },
        }
    }

    fn range(&self) -> Option<(i64, i64)> {
        match self {
            Coeff::Const(_) => None,
            Coeff::Window { start, values } => Some((*start, start + values.len() as i64)),
        }
    }

    fn zip(&self, other: &Coeff, f: impl Fn(&Rational, &Rational) -> Rational) -> Coeff {
        match (self.range(), other.range()) {
            (None, None) => {
                let (Coeff::Const(a), Coeff::Const(b)) = (self, other) else {
                    unreachable!()
                };
                Coeff::Const(f(a, b))
            }
            (ra, rb) => {
                let (lo, hi) = match (ra, rb) {
                    (Some((a0, a1)), Some((b0, b1))) => (a0.max(b0), a1.min(b1)),
                    (Some(r), None) | (None, Some(r)) => r,
                    (None, None) => unreachable!(),
                };
                let values = (lo..hi.max(lo))
                    .map(|k| {
                        f(
                            self.at(k).expect("in window"),
                            other.at(k).expect("in window"),
                        )
                    })
                    .collect();
                Coeff::Window { start: lo, values }
            }
        }
    }

    fn map(&self, f: impl Fn(&Rational) -> Rational) -> Coeff {
        match self {
            Coeff::Const(c) => Coeff::Const(f(c)),
            Coeff::Window { start, values } => Coeff::Window {
                start: *start,
                values: values.iter().map(f).collect(),
            },
        }
    }

    fn is_zero_const(&self) -> bool {
        matches!(self, Coeff::Const(c) if c.is_zero())
    }

    /// Equal wherever both are defined.
    pub fn agrees(&self, other: &Coeff) -> bool {
        match self.zip(other, |a, b| {
            if a == b {
                Rational::zero()
            } else {
                Rational::one()
            }
        }) {
            Coeff::Const(c) => c.is_zero(),
            Coeff::Window { values, .. } => values.iter().all(Zero::is_zero),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Coeff::Const(c) => json!({ "const": c.to_string() }),
            Coeff::Window { start, values } => json!({
                "start": start,
                "values": values.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Const(c) => write!(f, "{c}"),
            Coeff::Window { start, values } => {
                let v: Vec<String> = values.iter().map(ToString::to_string).collect();
                write!(f, "[{}]@{start}", v.join(","))
            }
        }
    }
}

/// `Σ_k J^k f_k` with all shifts moved to the left.
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftPoly {
    pub dt: Rational,
    pub terms: BTreeMap<u32, Coeff>,
}

impl ShiftPoly {
    pub fn zero(dt: &Rational) -> Self {
        Self {
            dt: dt.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(dt: &Rational, power: u32, coeff: Coeff) -> Self {
        let mut p = Self::zero(dt);
        if !coeff.is_zero_const() {
            p.terms.insert(power, coeff);
        }
        p
    }

    /// The operator `J`.
    pub fn j(dt: &Rational) -> Self {
        Self::monomial(dt, 1, Coeff::Const(Rational::one()))
    }

    /// Multiplication by the sequence `x` (no shift).
    pub fn multiplier(x: &Sequence, dt: &Rational) -> Self {
        Self::monomial(dt, 0, x.as_coeff())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.dt == other.dt {
            Ok(())
        } else {
            Err(Error::StepMismatch(
                self.dt.to_string(),
                other.dt.to_string(),
            ))
        }
    }

    fn insert_sum(&mut self, power: u32, c: Coeff) {
        let merged = match self.terms.remove(&power) {
            Some(old) => old.zip(&c, |a, b| a + b),
            None => c,
        };
        if !merged.is_zero_const() {
            self.terms.insert(power, merged);
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.insert_sum(k, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero(&self.dt);
        for (&k, c) in &self.terms {
            out.insert_sum(k, c.map(|x| x * r));
        }
        out
    }

    /// Equal coefficient by coefficient wherever both windows are defined.
    pub fn agrees(&self, other: &Self) -> bool {
        let zero = Coeff::Const(Rational::zero());
        self.dt == other.dt
            && self.terms.keys().chain(other.terms.keys()).all(|k| {
                let a = self.terms.get(k).unwrap_or(&zero);
                let b = other.terms.get(k).unwrap_or(&zero);
                a.agrees(b)
            })
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| json!({ "power": k, "coeff": c.to_json() }))
            .collect();
        json!({ "dt": self.dt.to_string(), "terms": terms })
    }
}

impl fmt::Display for ShiftPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("J·{c}"),
                _ => format!("J^{k}·{c}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `(J^a f)(J^b g) = J^{a+b} f(t + bΔt) g(t)`.
pub fn shiftpoly_mul(a: &ShiftPoly, b: &ShiftPoly) -> Result<ShiftPoly> {
    a.check(b)?;
    let mut out = ShiftPoly::zero(&a.dt);
    for (&ka, fa) in &a.terms {
        for (&kb, gb) in &b.terms {
            let prod = fa.shifted(kb as i64).zip(gb, |x, y| x * y);
            out.insert_sum(ka + kb, prod);
        }
    }
    Ok(out)
}

fn require_len(x: &Sequence, need: usize) -> Result<()> {
    if x.len() < need {
        return Err(Error::WindowTooShort { need, got: x.len() });
    }
    Ok(())
}

fn require_dt(dt: &Rational) -> Result<()> {
    if dt.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(())
    }
}

/// `Δx(t) = x(t + Δt) − x(t)` on `[0, len − 1)`.
pub fn forward_difference(x: &Sequence) -> Coeff {
    let c = x.as_coeff();
    c.shifted(1).zip(&c, |a, b| a - b)
}

/// `Dx = J(x(t + Δt) − x(t))/Δt` from the definition.
pub fn discrete_derivative(x: &Sequence, dt: &Rational) -> Result<ShiftPoly> {
    require_len(x, 2)?;
    require_dt(dt)?;
    let inv = dt.recip();
    Ok(ShiftPoly::monomial(
        dt,
        1,
        forward_difference(x).map(|v| v * &inv),
    ))
}

/// `Dx = [x, J]/Δt` computed with the shift algebra.
pub fn derivative_via_commutator(x: &Sequence, dt: &Rational) -> Result<ShiftPoly> {
    require_len(x, 2)?;
    require_dt(dt)?;
    let xs = ShiftPoly::multiplier(x, dt);
    let j = ShiftPoly::j(dt);
    let comm = shiftpoly_mul(&xs, &j)?.try_sub(&shiftpoly_mul(&j, &xs)?)?;
    Ok(comm.scale(&dt.recip()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommutatorReport {
    pub lhs: ShiftPoly,
    pub rhs: ShiftPoly,
    pub equal: bool,
}

impl CommutatorReport {
    pub fn to_json(&self) -> Value {
        json!({
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "lhs_text": self.lhs.to_string(),
            "rhs_text": self.rhs.to_string(),
            "equal": self.equal,
        })
    }
}

/// `[x, Dx]` against `J(Δx)²/Δt`.
pub fn basic_commutator(x: &Sequence, dt: &Rational) -> Result<CommutatorReport> {
    require_len(x, 3)?;
    let xs = ShiftPoly::multiplier(x, dt);
    let dx = discrete_derivative(x, dt)?;
    let lhs = shiftpoly_mul(&xs, &dx)?.try_sub(&shiftpoly_mul(&dx, &xs)?)?;
    let inv = dt.recip();
    let rhs = ShiftPoly::monomial(dt, 1, forward_difference(x).map(|d| d * d * &inv));
    let equal = lhs.agrees(&rhs) && lhs.terms.keys().eq(rhs.terms.keys());
    Ok(CommutatorReport { lhs, rhs, equal })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Brownian {
    pub constant: bool,
    pub k: Option<Rational>,
}

/// Whether `(Δx)²/Δt` takes a single value `K` along the window.
pub fn brownian_constancy(x: &Sequence, dt: &Rational) -> Result<Brownian> {
    require_len(x, 3)?;
    require_dt(dt)?;
    let Coeff::Window { values, .. } = forward_difference(x) else {
        unreachable!("differences of a window form a window")
    };
    let ks: Vec<Rational> = values.iter().map(|d| d * d / dt).collect();
    let constant = ks.iter().all(|k| *k == ks[0]);
    Ok(Brownian {
        constant,
        k: constant.then(|| ks[0].clone()),
    })
}

/// The chain from `[x, Dx] = J(Δx)²/Δt` to `[p, q] = iħ`, written with the
/// caller's symbols for position, mass and the quantum of action.
pub fn heisenberg_chain(q: &str, m: &str, hbar: &str) -> Vec<String> {
    vec![
        format!("[{q}, D{q}] = J (Δ{q})^2 / Δt"),
        format!("[{q}, p/{m}] = (Δ{q})^2 / Δt"),
        "Δt ↦ i Δt".to_string(),
        format!("(Δ{q})^2 / Δt = {hbar}/{m}"),
        format!("[{q}, p/{m}] = (Δ{q})^2 / (i Δt) = -i {hbar}/{m}"),
        format!("[p, {q}] = i {hbar}"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};
    use proptest::prelude::{any, prop_assert, proptest, ProptestConfig};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn seq(xs: &[i64]) -> Sequence {
        Sequence::new(xs.iter().map(|&x| rat(x)).collect())
    }

    fn window(start: i64, xs: &[i64]) -> Coeff {
        Coeff::Window {
            start,
            values: xs.iter().map(|&x| rat(x)).collect(),
        }
    }

    #[test]
    fn moving_j_left() {
        let dt = rat(1);
        let f = seq(&[0, 1, 2, 3, 4]);
        let fj = shiftpoly_mul(&ShiftPoly::multiplier(&f, &dt), &ShiftPoly::j(&dt)).unwrap();
        assert_eq!(fj.terms.len(), 1);
        assert!(fj.terms[&1].agrees(&window(-1, &[0, 1, 2, 3, 4])));
        let jj = shiftpoly_mul(&ShiftPoly::j(&dt), &ShiftPoly::j(&dt)).unwrap();
        assert_eq!(jj, ShiftPoly::monomial(&dt, 2, Coeff::Const(rat(1))));
    }

    #[test]
    fn two_shifts_by_hand() {
        let dt = rat(1);
        let t = |n: usize, f: fn(i64) -> i64| seq(&(0..n as i64).map(f).collect::<Vec<_>>());
        let (f, g) = (t(6, |x| x), t(6, |x| x * x));
        let j = ShiftPoly::j(&dt);
        let fj = shiftpoly_mul(&ShiftPoly::multiplier(&f, &dt), &j).unwrap();
        let gj = shiftpoly_mul(&ShiftPoly::multiplier(&g, &dt), &j).unwrap();
        let prod = shiftpoly_mul(&fj, &gj).unwrap();
        // f J g J = J² f(t+2) g(t+1)
        assert_eq!(prod.terms[&2].at(0), Some(&rat(2)));
        let swapped = shiftpoly_mul(&gj, &fj).unwrap();
        assert_eq!(swapped.terms[&2].at(0), Some(&rat(4)));
    }

    #[test]
    fn derivative_examples() {
        let dt = rat(1);
        let d = discrete_derivative(&seq(&[0, 1, 2, 3]), &dt).unwrap();
        assert!(d.agrees(&ShiftPoly::monomial(&dt, 1, Coeff::Const(rat(1)))));
        let d = discrete_derivative(&seq(&[7, 7, 7]), &dt).unwrap();
        assert!(d.agrees(&ShiftPoly::zero(&dt)));
        let d = discrete_derivative(&seq(&[0, 1, 4, 9, 16]), &dt).unwrap();
        assert_eq!(d.terms[&1], window(0, &[1, 3, 5, 7]));
        assert!(matches!(
            discrete_derivative(&seq(&[1]), &dt),
            Err(Error::WindowTooShort { need: 2, got: 1 })
        ));
    }

    #[test]
    fn commutator_examples() {
        let dt = rat(1);
        let r = basic_commutator(&seq(&[0, 1, 2, 3, 4]), &dt).unwrap();
        assert!(r.equal);
        assert!(r
            .lhs
            .agrees(&ShiftPoly::monomial(&dt, 1, Coeff::Const(rat(1)))));
        let r = basic_commutator(&seq(&[0, 1, 4, 9, 16]), &dt).unwrap();
        assert!(r.equal);
        assert_eq!(r.rhs.terms[&1], window(0, &[1, 9, 25, 49]));
        let r = basic_commutator(&seq(&[0, 1, 0, 1, 0]), &dt).unwrap();
        assert!(r.equal);
        assert!(r
            .lhs
            .agrees(&ShiftPoly::monomial(&dt, 1, Coeff::Const(rat(1)))));
        let r = basic_commutator(&seq(&[0, 2, 1, 5]), &ratio(1, 2)).unwrap();
        assert!(r.equal);
        assert_eq!(r.rhs.terms[&1], window(0, &[8, 2, 32]));
    }

    #[test]
    fn step_mismatch() {
        let a = ShiftPoly::j(&rat(1));
        let b = ShiftPoly::j(&ratio(1, 2));
        assert!(matches!(
            shiftpoly_mul(&a, &b),
            Err(Error::StepMismatch(..))
        ));
    }

    #[test]
    fn brownian() {
        let dt = rat(1);
        let b = brownian_constancy(&seq(&[0, 1, 0, 1, 0]), &dt).unwrap();
        assert_eq!(
            b,
            Brownian {
                constant: true,
                k: Some(rat(1))
            }
        );
        assert!(!brownian_constancy(&seq(&[0, 1, 3]), &dt).unwrap().constant);
        assert_eq!(
            brownian_constancy(&seq(&[2, 2, 2]), &dt).unwrap().k,
            Some(rat(0))
        );
        let b = brownian_constancy(&seq(&[0, 3, 0, -3, -6]), &rat(3)).unwrap();
        assert_eq!(b.k, Some(rat(3)));
    }

    #[test]
    fn two_hundred_random_sequences() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..200 {
            let x = Sequence::random(&mut rng, 16, 20, 7);
            let dt = random_rational(&mut rng, 5, 5);
            let dt = if dt.is_zero() { rat(1) } else { dt };
            assert!(basic_commutator(&x, &dt).unwrap().equal);
            assert!(discrete_derivative(&x, &dt)
                .unwrap()
                .agrees(&derivative_via_commutator(&x, &dt).unwrap()));
        }
    }

    #[test]
    fn heisenberg_report_uses_symbols() {
        let lines = heisenberg_chain("x", "m", "hbar");
        assert_eq!(lines.last().unwrap(), "[p, x] = i hbar");
    }

    fn random_poly(rng: &mut ChaCha8Rng, dt: &Rational) -> ShiftPoly {
        let mut p = ShiftPoly::zero(dt);
        for k in 0..3u32 {
            if rng.gen_bool(0.7) {
                let c = if rng.gen_bool(0.3) {
                    Coeff::Const(random_rational(rng, 9, 3))
                } else {
                    Coeff::Window {
                        start: rng.gen_range(-2..3),
                        values: (0..12).map(|_| random_rational(rng, 9, 3)).collect(),
                    }
                };
                p.insert_sum(k, c);
            }
        }
        p
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn product_is_associative(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let dt = ratio(1, 3);
            let (a, b, c) = (random_poly(&mut rng, &dt), random_poly(&mut rng, &dt), random_poly(&mut rng, &dt));
            let l = shiftpoly_mul(&shiftpoly_mul(&a, &b).unwrap(), &c).unwrap();
            let r = shiftpoly_mul(&a, &shiftpoly_mul(&b, &c).unwrap()).unwrap();
            prop_assert!(l.agrees(&r));
        }

        #[test]
        fn derivative_routes_agree(xs in proptest::collection::vec(-50i64..50, 2..20), d in 1i64..6) {
            let x = seq(&xs);
            let dt = ratio(1, d);
            prop_assert!(discrete_derivative(&x, &dt).unwrap()
                .agrees(&derivative_via_commutator(&x, &dt).unwrap()));
        }
    }
}
