//! Nilpotent plane-wave operators for the Dirac equation in one and three
//! space dimensions, their fermion algebra and Majorana split, and a
//! totally real set of Dirac generators built from two commuting copies of
//! the split quaternions.

use num_traits::Zero;
use serde::Serialize;

use crate::clifford::{split_quaternion_rep, CliffordRep};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::scalar::{Rational, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceDim {
    #[serde(rename = "1d")]
    One,
    #[serde(rename = "3d")]
    Three,
}

impl std::str::FromStr for SpaceDim {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "1d" | "1" => Ok(Self::One),
            "3d" | "3" => Ok(Self::Three),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DaggerVersion {
    /// `U = βαE + βp + αm`, `U† = αβE + αp + βm`.
    Conjugate,
    /// `U = βαE + βp − αm`, `U† = −βαE + βp − αm`.
    TimeReversed,
}

impl std::str::FromStr for DaggerVersion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "conjugate" => Ok(Self::Conjugate),
            "time_reversed" => Ok(Self::TimeReversed),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OnShellParams {
    pub e: Rational,
    pub p: Vec<Rational>,
    pub m: Rational,
}

impl OnShellParams {
    pub fn one_d(e: Rational, p: Rational, m: Rational) -> Self {
        Self { e, p: vec![p], m }
    }

    pub fn three_d(e: Rational, p: [Rational; 3], m: Rational) -> Self {
        Self {
            e,
            p: p.to_vec(),
            m,
        }
    }

    pub fn from_ints(e: i64, p: &[i64], m: i64) -> Self {
        let r = |n: i64| Rational::from_integer(n.into());
        Self {
            e: r(e),
            p: p.iter().map(|&x| r(x)).collect(),
            m: r(m),
        }
    }

    pub fn p_squared(&self) -> Rational {
        self.p.iter().map(|x| x * x).sum()
    }

    /// `p² + m² − E²`.
    pub fn shell_defect(&self) -> Rational {
        self.p_squared() + &self.m * &self.m - &self.e * &self.e
    }

    pub fn on_shell(&self) -> bool {
        self.shell_defect().is_zero()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiracFrame {
    pub dim: SpaceDim,
    pub alpha: SquareMatrix,
    pub beta: SquareMatrix,
    /// Present in three dimensions; each commutes with `α` and `β`.
    pub sigma: Option<[SquareMatrix; 3]>,
}

/// 1D: `α = ε`, `β = η`. 3D: `α = ε⊗1`, `β = η⊗1`, `σ_i = 1⊗s_i` with
/// `s = {η, −ε, ιη(−ε)}`.
pub fn dirac_frame(dim: SpaceDim) -> DiracFrame {
    let sq = split_quaternion_rep();
    match dim {
        SpaceDim::One => DiracFrame {
            dim,
            alpha: sq.eps,
            beta: sq.eta,
            sigma: None,
        },
        SpaceDim::Three => {
            let one = SquareMatrix::identity(2);
            let minus_eps = -&sq.eps;
            let s3 = (&sq.eta * &minus_eps).scale(&Scalar::i());
            let triple = CliffordRep::from_generators(vec![sq.eta.clone(), minus_eps, s3])
                .expect("anticommuting square-one triple");
            let [s1, s2, s3] = [0, 1, 2].map(|k| one.kron(&triple.gens()[k]));
            DiracFrame {
                dim,
                alpha: sq.eps.kron(&one),
                beta: sq.eta.kron(&one),
                sigma: Some([s1, s2, s3]),
            }
        }
    }
}

impl DiracFrame {
    pub fn size(&self) -> usize {
        self.alpha.dim()
    }

    fn check_params(&self, params: &OnShellParams) -> Result<()> {
        let want = match self.dim {
            SpaceDim::One => 1,
            SpaceDim::Three => 3,
        };
        if params.p.len() != want {
            return Err(Error::DimensionMismatch {
                expected: want,
                got: params.p.len(),
            });
        }
        Ok(())
    }

    /// `p` in 1D, `p•σ` in 3D.
    pub fn momentum(&self, params: &OnShellParams) -> Result<SquareMatrix> {
        self.check_params(params)?;
        let n = self.size();
        Ok(match &self.sigma {
            None => SquareMatrix::scalar(n, Scalar::real(params.p[0].clone())),
            Some(s) => s
                .iter()
                .zip(&params.p)
                .fold(SquareMatrix::zero(n), |acc, (si, pi)| {
                    &acc + &si.scale_rational(pi)
                }),
        })
    }

    pub fn relations(&self) -> Vec<MatrixCheck> {
        let n = self.size();
        let id = SquareMatrix::identity(n);
        let zero = SquareMatrix::zero(n);
        let mut out = vec![
            MatrixCheck::new("alpha^2 = 1", &self.alpha * &self.alpha, id.clone()),
            MatrixCheck::new("beta^2 = 1", &self.beta * &self.beta, id.clone()),
            MatrixCheck::new(
                "alpha beta + beta alpha = 0",
                self.alpha.anticommutator(&self.beta),
                zero.clone(),
            ),
        ];
        if let Some(s) = &self.sigma {
            for i in 0..3 {
                out.push(MatrixCheck::new(
                    format!("sigma{}^2 = 1", i + 1),
                    &s[i] * &s[i],
                    id.clone(),
                ));
                for j in i + 1..3 {
                    out.push(MatrixCheck::new(
                        format!("{{sigma{}, sigma{}}} = 0", i + 1, j + 1),
                        s[i].anticommutator(&s[j]),
                        zero.clone(),
                    ));
                }
                out.push(MatrixCheck::new(
                    format!("[alpha, sigma{}] = 0", i + 1),
                    self.alpha.commutator(&s[i]),
                    zero.clone(),
                ));
                out.push(MatrixCheck::new(
                    format!("[beta, sigma{}] = 0", i + 1),
                    self.beta.commutator(&s[i]),
                    zero.clone(),
                ));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixCheck {
    pub check: String,
    pub lhs: SquareMatrix,
    pub rhs: SquareMatrix,
    pub pass: bool,
}

impl MatrixCheck {
    pub fn new(check: impl Into<String>, lhs: SquareMatrix, rhs: SquareMatrix) -> Self {
        let pass = lhs == rhs;
        Self {
            check: check.into(),
            lhs,
            rhs,
            pass,
        }
    }
}

fn scalar_matrix(n: usize, r: &Rational) -> SquareMatrix {
    SquareMatrix::scalar(n, Scalar::real(r.clone()))
}

/// `U = βαE + βp − αm` (`p ↦ p•σ` in 3D); `U² = (p² + m² − E²)·1`.
pub fn nilpotent_u(frame: &DiracFrame, params: &OnShellParams) -> Result<SquareMatrix> {
    Ok(u_pair(frame, params, DaggerVersion::TimeReversed)?.0)
}

pub fn u_dagger(
    frame: &DiracFrame,
    params: &OnShellParams,
    version: DaggerVersion,
) -> Result<SquareMatrix> {
    Ok(u_pair(frame, params, version)?.1)
}

/// `(U, U†)` for the chosen version.
pub fn u_pair(
    frame: &DiracFrame,
    params: &OnShellParams,
    version: DaggerVersion,
) -> Result<(SquareMatrix, SquareMatrix)> {
    let p = frame.momentum(params)?;
    let (a, b) = (&frame.alpha, &frame.beta);
    let ba_e = (b * a).scale_rational(&params.e);
    let ab_e = (a * b).scale_rational(&params.e);
    let bp = b * &p;
    let ap = a * &p;
    let am = a.scale_rational(&params.m);
    let bm = b.scale_rational(&params.m);
    Ok(match version {
        DaggerVersion::TimeReversed => {
            let rest = &bp - &am;
            (&ba_e + &rest, &rest - &ba_e)
        }
        DaggerVersion::Conjugate => (&(&ba_e + &bp) + &am, &(&ab_e + &ap) + &bm),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MajoranaSplit {
    pub a: SquareMatrix,
    pub b: SquareMatrix,
    pub checks: Vec<MatrixCheck>,
}

/// `A = (U + U†)/(2E) = (βp − αm)/E` and `B = −ι(U − U†)/(2E) = −ιβα` for
/// the time-reversed pair, so that `U = (A + ιB)E` and `U† = (A − ιB)E`.
pub fn majorana_split(frame: &DiracFrame, params: &OnShellParams) -> Result<MajoranaSplit> {
    if params.e.is_zero() {
        return Err(Error::ZeroEnergy);
    }
    let (u, ud) = u_pair(frame, params, DaggerVersion::TimeReversed)?;
    let n = frame.size();
    let inv_e = params.e.recip();
    let a = (&(&frame.beta * &frame.momentum(params)?) - &frame.alpha.scale_rational(&params.m))
        .scale_rational(&inv_e);
    let b = (&frame.beta * &frame.alpha).scale(&-Scalar::i());
    let ib = b.scale(&Scalar::i());
    let id = SquareMatrix::identity(n);
    let checks = vec![
        MatrixCheck::new("A^2 = 1", &a * &a, id.clone()),
        MatrixCheck::new("B^2 = 1", &b * &b, id),
        MatrixCheck::new("AB + BA = 0", a.anticommutator(&b), SquareMatrix::zero(n)),
        MatrixCheck::new("(A + iB)E = U", (&a + &ib).scale_rational(&params.e), u),
        MatrixCheck::new(
            "(A - iB)E = U_dag",
            (&a - &ib).scale_rational(&params.e),
            ud,
        ),
    ];
    Ok(MajoranaSplit { a, b, checks })
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlaneWave {
    pub delta: SquareMatrix,
    pub delta_beta_alpha_is_u: bool,
    /// `Δβα·U`; zero exactly on shell.
    pub residual: SquareMatrix,
    pub shell_defect: Rational,
}

impl PlaneWave {
    pub fn solves(&self) -> bool {
        self.delta_beta_alpha_is_u && self.residual.is_zero()
    }
}

/// `Δ = E − αp − βm` and the residual `Δβα·U = U²`, the matrix content of
/// applying the modified operator to `U e^{i(px − Et)}`.
pub fn plane_wave_residual(frame: &DiracFrame, params: &OnShellParams) -> Result<PlaneWave> {
    let n = frame.size();
    let p = frame.momentum(params)?;
    let delta = &(&scalar_matrix(n, &params.e) - &(&frame.alpha * &p))
        - &frame.beta.scale_rational(&params.m);
    let dba = &delta * &(&frame.beta * &frame.alpha);
    let u = nilpotent_u(frame, params)?;
    Ok(PlaneWave {
        delta_beta_alpha_is_u: dba == u,
        residual: &dba * &u,
        delta,
        shell_defect: params.shell_defect(),
    })
}

/// Every identity the pair should satisfy on shell, as `lhs`/`rhs` matrices.
pub fn verify_relations(
    frame: &DiracFrame,
    params: &OnShellParams,
    version: DaggerVersion,
) -> Result<Vec<MatrixCheck>> {
    let n = frame.size();
    let zero = SquareMatrix::zero(n);
    let (u, ud) = u_pair(frame, params, version)?;
    let mut out = frame.relations();
    out.push(MatrixCheck::new("U^2 = 0", &u * &u, zero.clone()));
    out.push(MatrixCheck::new("U_dag^2 = 0", &ud * &ud, zero.clone()));
    let e2 = &params.e * &params.e;
    let four = Rational::from_integer(4.into());
    let two = Rational::from_integer(2.into());
    match (version, frame.dim) {
        (DaggerVersion::TimeReversed, _) => {
            let four_e2 = scalar_matrix(n, &(&four * &e2));
            out.push(MatrixCheck::new(
                "U U_dag + U_dag U = 4E^2",
                u.anticommutator(&ud),
                four_e2.clone(),
            ));
            let s = &u + &ud;
            out.push(MatrixCheck::new(
                "(U + U_dag)^2 = 4E^2",
                &s * &s,
                four_e2.clone(),
            ));
            let d = &u - &ud;
            out.push(MatrixCheck::new("(U - U_dag)^2 = -4E^2", &d * &d, -four_e2));
        }
        (DaggerVersion::Conjugate, SpaceDim::One) => {
            let pm = &params.p[0] + &params.m;
            let two_pm2 = scalar_matrix(n, &(&two * &pm * &pm));
            out.push(MatrixCheck::new(
                "U U_dag + U_dag U = 2(p+m)^2",
                u.anticommutator(&ud),
                two_pm2.clone(),
            ));
            let s = &u + &ud;
            out.push(MatrixCheck::new(
                "(U + U_dag)^2 = 2(p+m)^2",
                &s * &s,
                two_pm2.clone(),
            ));
            let d = &u - &ud;
            out.push(MatrixCheck::new(
                "(U - U_dag)^2 = -2(p+m)^2",
                &d * &d,
                -two_pm2,
            ));
        }
        // the anticommutator picks up 4m(p•σ) here and is not a scalar
        (DaggerVersion::Conjugate, SpaceDim::Three) => {}
    }
    if !params.e.is_zero() {
        out.extend(majorana_split(frame, params)?.checks);
    }
    let pw = plane_wave_residual(frame, params)?;
    out.push(MatrixCheck::new(
        "Delta beta alpha = U",
        &pw.delta * &(&frame.beta * &frame.alpha),
        nilpotent_u(frame, params)?,
    ));
    out.push(MatrixCheck::new(
        "Delta beta alpha U = 0",
        pw.residual,
        zero,
    ));
    Ok(out)
}

/// Two commuting copies of the split quaternions on four dimensions; the
/// hatted copy is the left tensor factor.
#[derive(Debug, Clone, PartialEq)]
pub struct CommutingCopies {
    pub eps_hat: SquareMatrix,
    pub eta_hat: SquareMatrix,
    pub eps: SquareMatrix,
    pub eta: SquareMatrix,
}

pub fn commuting_copies() -> CommutingCopies {
    let sq = split_quaternion_rep();
    let one = SquareMatrix::identity(2);
    CommutingCopies {
        eps_hat: sq.eps.kron(&one),
        eta_hat: sq.eta.kron(&one),
        eps: one.kron(&sq.eps),
        eta: one.kron(&sq.eta),
    }
}

pub fn commuting_copies_check() -> Vec<MatrixCheck> {
    let c = commuting_copies();
    let id = SquareMatrix::identity(4);
    let zero = SquareMatrix::zero(4);
    let minus_id = -&id;
    let mut out = Vec::new();
    for (hn, h) in [("eps_hat", &c.eps_hat), ("eta_hat", &c.eta_hat)] {
        for (un, u) in [("eps", &c.eps), ("eta", &c.eta)] {
            out.push(MatrixCheck::new(
                format!("[{hn}, {un}] = 0"),
                h.commutator(u),
                zero.clone(),
            ));
        }
    }
    for (tag, e, h) in [("_hat", &c.eps_hat, &c.eta_hat), ("", &c.eps, &c.eta)] {
        out.push(MatrixCheck::new(
            format!("eps{tag}^2 = 1"),
            e * e,
            id.clone(),
        ));
        out.push(MatrixCheck::new(
            format!("eta{tag}^2 = 1"),
            h * h,
            id.clone(),
        ));
        out.push(MatrixCheck::new(
            format!("{{eps{tag}, eta{tag}}} = 0"),
            e.anticommutator(h),
            zero.clone(),
        ));
        let i = e * h;
        out.push(MatrixCheck::new(
            format!("(eps{tag} eta{tag})^2 = -1"),
            &i * &i,
            minus_id.clone(),
        ));
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct MajoranaDiracGenerators {
    pub ax: SquareMatrix,
    pub ay: SquareMatrix,
    pub az: SquareMatrix,
    pub beta_prime: SquareMatrix,
    pub relation_table: Vec<MatrixCheck>,
}

impl MajoranaDiracGenerators {
    pub fn all_real(&self) -> bool {
        [&self.ax, &self.ay, &self.az, &self.beta_prime]
            .iter()
            .all(|m| m.is_real())
    }

    /// `{α_x, α_y, α_z, ιβ'}` as a Clifford set.
    pub fn dirac_set(&self) -> Result<CliffordRep> {
        CliffordRep::from_generators(vec![
            self.ax.clone(),
            self.ay.clone(),
            self.az.clone(),
            self.beta_prime.scale(&Scalar::i()),
        ])
    }
}

/// `α_x = η̂η`, `α_y = ε`, `α_z = ε̂η`, `β' = ε̂η̂η`.
pub fn majorana_dirac_generators() -> MajoranaDiracGenerators {
    let c = commuting_copies();
    let ax = &c.eta_hat * &c.eta;
    let ay = c.eps.clone();
    let az = &c.eps_hat * &c.eta;
    let beta_prime = &(&c.eps_hat * &c.eta_hat) * &c.eta;
    let id = SquareMatrix::identity(4);
    let zero = SquareMatrix::zero(4);
    let named = [
        ("ax", &ax),
        ("ay", &ay),
        ("az", &az),
        ("beta'", &beta_prime),
    ];
    let mut table = Vec::new();
    for (k, (name, m)) in named.iter().enumerate() {
        let expected = if k == 3 { -&id } else { id.clone() };
        let sign = if k == 3 { "-" } else { "" };
        table.push(MatrixCheck::new(
            format!("{name}^2 = {sign}1"),
            *m * *m,
            expected,
        ));
    }
    for a in 0..4 {
        for b in a + 1..4 {
            table.push(MatrixCheck::new(
                format!("{{{}, {}}} = 0", named[a].0, named[b].0),
                named[a].1.anticommutator(named[b].1),
                zero.clone(),
            ));
        }
    }
    let ib = beta_prime.scale(&Scalar::i());
    table.push(MatrixCheck::new("(i beta')^2 = 1", &ib * &ib, id));
    MajoranaDiracGenerators {
        ax,
        ay,
        az,
        beta_prime,
        relation_table: table,
    }
}

/// `(m² − n², 2mn, m² + n²)` as `(p, m, E)`.
pub fn pythagorean_params(a: i64, b: i64) -> OnShellParams {
    OnShellParams::from_ints(a * a + b * b, &[a * a - b * b], 2 * a * b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn all_pass(c: &[MatrixCheck]) -> bool {
        c.iter().all(|x| x.pass)
    }

    #[test]
    fn frames() {
        let f1 = dirac_frame(SpaceDim::One);
        assert!(f1.alpha.anticommutator(&f1.beta).is_zero());
        let f3 = dirac_frame(SpaceDim::Three);
        let s = f3.sigma.as_ref().unwrap();
        assert!(s[0].anticommutator(&s[1]).is_zero());
        assert!((&s[0] * &s[0]).is_identity());
        assert!(f3.alpha.commutator(&s[1]).is_zero());
        assert!(all_pass(&f1.relations()) && all_pass(&f3.relations()));
    }

    #[test]
    fn nilpotent_examples() {
        let f1 = dirac_frame(SpaceDim::One);
        let u = nilpotent_u(&f1, &OnShellParams::from_ints(5, &[3], 4)).unwrap();
        assert!((&u * &u).is_zero());
        let off = nilpotent_u(&f1, &OnShellParams::from_ints(1, &[1], 1)).unwrap();
        assert!((&off * &off).is_identity());
        let f3 = dirac_frame(SpaceDim::Three);
        let u3 = nilpotent_u(&f3, &OnShellParams::from_ints(3, &[1, 2, 2], 0)).unwrap();
        assert_eq!(u3.dim(), 4);
        assert!((&u3 * &u3).is_zero());
        assert!(matches!(
            nilpotent_u(&f3, &OnShellParams::from_ints(5, &[3], 4)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn anticommutators_by_version() {
        let f1 = dirac_frame(SpaceDim::One);
        let p = OnShellParams::from_ints(5, &[3], 4);
        let (u, ud) = u_pair(&f1, &p, DaggerVersion::Conjugate).unwrap();
        assert_eq!(
            u.anticommutator(&ud),
            SquareMatrix::scalar(2, Scalar::int(98))
        );
        assert!((&ud * &ud).is_zero());
        let (u, ud) = u_pair(&f1, &p, DaggerVersion::TimeReversed).unwrap();
        assert_eq!(
            u.anticommutator(&ud),
            SquareMatrix::scalar(2, Scalar::int(100))
        );
        assert!((&ud * &ud).is_zero());
        for v in [DaggerVersion::Conjugate, DaggerVersion::TimeReversed] {
            assert!(all_pass(&verify_relations(&f1, &p, v).unwrap()));
        }
    }

    #[test]
    fn split_and_plane_wave() {
        let f1 = dirac_frame(SpaceDim::One);
        let p = OnShellParams::from_ints(5, &[3], 4);
        let s = majorana_split(&f1, &p).unwrap();
        assert!(all_pass(&s.checks));
        assert!((&s.a * &s.a).is_identity());
        let pw = plane_wave_residual(&f1, &p).unwrap();
        assert!(pw.solves());
        let massless = OnShellParams::from_ints(1, &[1], 0);
        assert!(plane_wave_residual(&f1, &massless).unwrap().solves());
        let off = plane_wave_residual(&f1, &OnShellParams::from_ints(2, &[1], 1)).unwrap();
        assert!(!off.solves() && off.delta_beta_alpha_is_u);
        assert_eq!(off.shell_defect, Rational::from_integer((-2).into()));
        assert!(matches!(
            majorana_split(&f1, &OnShellParams::from_ints(0, &[0], 0)),
            Err(Error::ZeroEnergy)
        ));
    }

    #[test]
    fn three_d_identities() {
        let f3 = dirac_frame(SpaceDim::Three);
        let p = OnShellParams::from_ints(9, &[1, 4, 8], 0);
        assert!(all_pass(
            &verify_relations(&f3, &p, DaggerVersion::TimeReversed).unwrap()
        ));
        assert!(all_pass(
            &verify_relations(&f3, &p, DaggerVersion::Conjugate).unwrap()
        ));
        let pm = OnShellParams::from_ints(7, &[2, 3, 6], 0);
        let sigma_p = f3.momentum(&pm).unwrap();
        assert_eq!(
            &sigma_p * &sigma_p,
            SquareMatrix::scalar(4, Scalar::int(49))
        );
        let massive = OnShellParams::from_ints(3, &[1, 2, 0], 2);
        assert!(all_pass(
            &verify_relations(&f3, &massive, DaggerVersion::TimeReversed).unwrap()
        ));
    }

    #[test]
    fn majorana_generators() {
        let g = majorana_dirac_generators();
        assert!(g.all_real());
        assert!(all_pass(&g.relation_table));
        assert_eq!(g.relation_table.len(), 11);
        assert!((&g.ax * &g.ax).is_identity());
        assert_eq!(&g.beta_prime * &g.beta_prime, -SquareMatrix::identity(4));
        assert!(g.ax.anticommutator(&g.ay).is_zero());
        assert!(g.dirac_set().is_ok());
    }

    #[test]
    fn commuting_copies_relations() {
        let checks = commuting_copies_check();
        assert!(all_pass(&checks));
        let c = commuting_copies();
        assert!(c.eps_hat.commutator(&c.eta).is_zero());
        assert!((&c.eps_hat * &c.eps_hat).is_identity());
    }

    #[test]
    fn fifty_pythagorean_triples() {
        let f1 = dirac_frame(SpaceDim::One);
        let mut count = 0;
        for a in 2..12i64 {
            for b in 1..a {
                if count == 50 {
                    break;
                }
                let p = pythagorean_params(a, b);
                assert!(p.on_shell());
                for v in [DaggerVersion::Conjugate, DaggerVersion::TimeReversed] {
                    let (u, ud) = u_pair(&f1, &p, v).unwrap();
                    assert!((&u * &u).is_zero() && (&ud * &ud).is_zero());
                }
                count += 1;
            }
        }
        assert_eq!(count, 50);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn off_shell_square(e in -30i64..30, p in -30i64..30, m in -30i64..30) {
            let f1 = dirac_frame(SpaceDim::One);
            let params = OnShellParams::from_ints(e, &[p], m);
            let u = nilpotent_u(&f1, &params).unwrap();
            prop_assert_eq!(&u * &u, SquareMatrix::scalar(2, Scalar::int(p * p + m * m - e * e)));
            let ud = u_dagger(&f1, &params, DaggerVersion::Conjugate).unwrap();
            prop_assert_eq!(&ud * &ud, SquareMatrix::scalar(2, Scalar::int(p * p + m * m - e * e)));
        }

        #[test]
        fn version_identities_on_shell(a in 2i64..40, b in 1i64..40) {
            prop_assume!(a != b);
            let params = pythagorean_params(a, b);
            let f1 = dirac_frame(SpaceDim::One);
            for v in [DaggerVersion::Conjugate, DaggerVersion::TimeReversed] {
                let checks = verify_relations(&f1, &params, v).unwrap();
                prop_assert!(checks.iter().all(|c| c.pass));
            }
        }
    }
}
