//! Alternating-sign diffusion on a periodic lattice and its even/odd split
//! into a coupled pair that behaves like a free Schrödinger field.
//!
//! `step` applies the single-field recursion verbatim. `run` evolves the
//! pair (ψ_e, ψ_o) with the cross-coupled update
//!
//! ```text
//! even t_index:  ψ_e ← ψ_e + r·Lψ_o
//! odd  t_index:  ψ_o ← ψ_o − r·Lψ_e
//! ```
//!
//! where L is the second-difference stencil and r = κ·dt/dx². One even/odd
//! pair of sub-steps advances the physical clock by dt.

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Warning threshold for the stability ratio.
pub const STABILITY_WARNING: f64 = 0.25;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LatticeConfig {
    pub cells: usize,
    pub dx: f64,
    pub dt: f64,
    pub kappa: f64,
    /// Number of sub-steps (t_index increments).
    pub steps: usize,
}

impl LatticeConfig {
    pub fn new(cells: usize, dx: f64, dt: f64, kappa: f64, steps: usize) -> Self {
        LatticeConfig {
            cells,
            dx,
            dt,
            kappa,
            steps,
        }
    }

    /// κ·dt/dx²
    pub fn r(&self) -> f64 {
        self.kappa * self.dt / (self.dx * self.dx)
    }

    pub fn unstable_warning(&self) -> bool {
        self.r().abs() > STABILITY_WARNING
    }

    /// Same physical span with half the time step.
    pub fn refined(&self) -> Self {
        LatticeConfig {
            dt: self.dt / 2.0,
            steps: self.steps * 2,
            ..*self
        }
    }

    pub fn position(&self, cell: usize) -> f64 {
        cell as f64 * self.dx
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FieldState {
    pub t_index: u64,
    pub values: Vec<f64>,
}

impl FieldState {
    pub fn new(values: Vec<f64>) -> Self {
        FieldState { t_index: 0, values }
    }

    pub fn zeros(cells: usize) -> Self {
        FieldState::new(vec![0.0; cells])
    }

    pub fn impulse(cells: usize, at: usize, height: f64) -> Self {
        let mut values = vec![0.0; cells];
        values[at % cells] = height;
        FieldState::new(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }
}

/// Periodic second difference ψ(x−dx) − 2ψ(x) + ψ(x+dx), without the 1/dx².
pub fn laplacian(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    (0..n)
        .map(|i| {
            let left = values[(i + n - 1) % n];
            let right = values[(i + 1) % n];
            left - 2.0 * values[i] + right
        })
        .collect()
}

/// One application of ψ_{t+1} = ψ_t + (−1)^t·r·Lψ_t.
pub fn step(state: &FieldState, cfg: &LatticeConfig) -> FieldState {
    let sign = if state.t_index.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    };
    let r = cfg.r();
    let lap = laplacian(&state.values);
    let values = state
        .values
        .iter()
        .zip(&lap)
        .map(|(v, l)| v + sign * r * l)
        .collect();
    FieldState {
        t_index: state.t_index + 1,
        values,
    }
}

/// ψ = ψ_e + iψ_o
pub fn combine(psi_e: &[f64], psi_o: &[f64]) -> Result<Vec<Complex64>> {
    if psi_e.len() != psi_o.len() {
        return Err(Error::ShapeMismatch(psi_e.len(), psi_o.len()));
    }
    Ok(psi_e
        .iter()
        .zip(psi_o)
        .map(|(&e, &o)| Complex64::new(e, o))
        .collect())
}

/// Σ|ψ|²·dx
pub fn norm(psi: &[Complex64], dx: f64) -> f64 {
    psi.iter().map(|z| z.norm_sqr()).sum::<f64>() * dx
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Snapshot {
    pub t_index: u64,
    pub psi_e: Vec<f64>,
    pub psi_o: Vec<f64>,
}

impl Snapshot {
    pub fn combined(&self) -> Vec<Complex64> {
        combine(&self.psi_e, &self.psi_o).expect("snapshot fields share a length")
    }

    pub fn norm(&self, dx: f64) -> f64 {
        norm(&self.combined(), dx)
    }

    /// Time of this snapshot on the physical clock.
    pub fn time(&self, dt: f64) -> f64 {
        self.t_index as f64 * dt / 2.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Run {
    pub config: LatticeConfig,
    pub snapshots: Vec<Snapshot>,
}

impl Run {
    pub fn last(&self) -> &Snapshot {
        self.snapshots
            .last()
            .expect("a run always holds its initial state")
    }

    pub fn norms(&self) -> Vec<f64> {
        self.snapshots
            .iter()
            .map(|s| s.norm(self.config.dx))
            .collect()
    }

    /// Largest relative departure of the norm from its initial value.
    pub fn max_norm_drift(&self) -> f64 {
        let norms = self.norms();
        let start = norms[0];
        if start == 0.0 {
            return 0.0;
        }
        norms
            .iter()
            .map(|n| (n - start).abs() / start)
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.snapshots
            .iter()
            .all(|s| s.psi_e.iter().chain(&s.psi_o).all(|v| v.is_finite()))
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "t_index,cell,psi_e,psi_o,re,im,abs2")?;
        for snap in &self.snapshots {
            for (cell, (e, o)) in snap.psi_e.iter().zip(&snap.psi_o).enumerate() {
                let abs2 = e * e + o * o;
                writeln!(
                    out,
                    "{},{},{:e},{:e},{:e},{:e},{:e}",
                    snap.t_index, cell, e, o, e, o, abs2
                )?;
            }
        }
        Ok(())
    }
}

fn substep(t_index: u64, r: f64, psi_e: &mut [f64], psi_o: &mut [f64]) {
    if t_index.is_multiple_of(2) {
        let lap = laplacian(psi_o);
        for (e, l) in psi_e.iter_mut().zip(lap) {
            *e += r * l;
        }
    } else {
        let lap = laplacian(psi_e);
        for (o, l) in psi_o.iter_mut().zip(lap) {
            *o -= r * l;
        }
    }
}

/// Evolve the pair for `cfg.steps` sub-steps, recording every `every`-th state
/// (the initial and final states are always recorded).
pub fn run(
    cfg: &LatticeConfig,
    initial_even: &FieldState,
    initial_odd: &FieldState,
    every: usize,
) -> Result<Run> {
    for field in [initial_even, initial_odd] {
        if field.len() != cfg.cells {
            return Err(Error::ShapeMismatch(cfg.cells, field.len()));
        }
    }
    let every = every.max(1);
    let r = cfg.r();
    let mut psi_e = initial_even.values.clone();
    let mut psi_o = initial_odd.values.clone();
    let mut snapshots = vec![Snapshot {
        t_index: 0,
        psi_e: psi_e.clone(),
        psi_o: psi_o.clone(),
    }];
    for t in 0..cfg.steps as u64 {
        substep(t, r, &mut psi_e, &mut psi_o);
        let done = t + 1;
        if done % every as u64 == 0 || done == cfg.steps as u64 {
            snapshots.push(Snapshot {
                t_index: done,
                psi_e: psi_e.clone(),
                psi_o: psi_o.clone(),
            });
        }
    }
    Ok(Run {
        config: *cfg,
        snapshots,
    })
}

/// Initial data for the pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Initial {
    Gaussian { mu: f64, sigma: f64, k0: f64 },
    PlaneWave { k_mode: i64 },
    Impulse { at: usize },
}

impl std::str::FromStr for Initial {
    type Err = Error;

    /// `gaussian:mu=128,sigma=10[,k0=0.2]`, `plane:k=3`, `impulse:at=5`
    fn from_str(s: &str) -> Result<Self> {
        let (kind, params) = s.split_once(':').unwrap_or((s, ""));
        let mut get = std::collections::BTreeMap::new();
        for part in params.split(',').filter(|p| !p.trim().is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{part}`")))?;
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad number `{value}`")))?;
            get.insert(key.trim().to_string(), value);
        }
        let need = |key: &str| {
            get.get(key)
                .copied()
                .ok_or_else(|| Error::Parse(format!("missing `{key}` in `{s}`")))
        };
        match kind.trim() {
            "gaussian" => Ok(Initial::Gaussian {
                mu: need("mu")?,
                sigma: need("sigma")?,
                k0: get.get("k0").copied().unwrap_or(0.0),
            }),
            "plane" => Ok(Initial::PlaneWave {
                k_mode: need("k")? as i64,
            }),
            "impulse" => Ok(Initial::Impulse {
                at: need("at")? as usize,
            }),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

impl Initial {
    pub fn fields(&self, cfg: &LatticeConfig) -> Result<(FieldState, FieldState)> {
        let n = cfg.cells;
        match *self {
            Initial::Gaussian { mu, sigma, k0 } => {
                let mut even = Vec::with_capacity(n);
                let mut odd = Vec::with_capacity(n);
                for cell in 0..n {
                    let x = cfg.position(cell);
                    let envelope = (-(x - mu).powi(2) / (2.0 * sigma * sigma)).exp();
                    even.push(envelope * (k0 * x).cos());
                    odd.push(envelope * (k0 * x).sin());
                }
                Ok((FieldState::new(even), FieldState::new(odd)))
            }
            Initial::PlaneWave { k_mode } => plane_wave(cfg, k_mode),
            Initial::Impulse { at } => Ok((FieldState::impulse(n, at, 1.0), FieldState::zeros(n))),
        }
    }
}

fn check_mode(cfg: &LatticeConfig, k_mode: i64) -> Result<()> {
    if k_mode.unsigned_abs() as usize > cfg.cells / 2 {
        return Err(Error::ModeOutOfRange {
            k: k_mode,
            cells: cfg.cells,
        });
    }
    Ok(())
}

pub fn wavenumber(cfg: &LatticeConfig, k_mode: i64) -> f64 {
    2.0 * PI * k_mode as f64 / (cfg.cells as f64 * cfg.dx)
}

/// (cos kx, sin kx)
pub fn plane_wave(cfg: &LatticeConfig, k_mode: i64) -> Result<(FieldState, FieldState)> {
    check_mode(cfg, k_mode)?;
    let k = wavenumber(cfg, k_mode);
    let even = (0..cfg.cells)
        .map(|c| (k * cfg.position(c)).cos())
        .collect();
    let odd = (0..cfg.cells)
        .map(|c| (k * cfg.position(c)).sin())
        .collect();
    Ok((FieldState::new(even), FieldState::new(odd)))
}

/// Σ_x ψ(x)·e^{−ikx}
pub fn fourier_component(psi: &[Complex64], cfg: &LatticeConfig, k_mode: i64) -> Complex64 {
    let k = wavenumber(cfg, k_mode);
    psi.iter()
        .enumerate()
        .map(|(c, z)| z * Complex64::from_polar(1.0, -k * cfg.position(c)))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Dispersion {
    pub k_mode: i64,
    pub k: f64,
    pub k_eff: f64,
    pub elapsed: f64,
    pub measured_omega: f64,
    pub predicted_omega: f64,
    pub rel_error: f64,
    pub r: f64,
    pub unstable_warning: bool,
}

/// Phase velocity of a lattice plane wave against ω = κ·k_eff².
///
/// Phase is sampled at every completed even/odd pair and unwrapped, so the
/// run may span many periods.
pub fn dispersion_check(cfg: &LatticeConfig, k_mode: i64) -> Result<Dispersion> {
    let (mut psi_e, mut psi_o) = {
        let (e, o) = plane_wave(cfg, k_mode)?;
        (e.values, o.values)
    };
    let k = wavenumber(cfg, k_mode);
    let k_eff = 2.0 / cfg.dx * (k * cfg.dx / 2.0).sin();
    let predicted = cfg.kappa * k_eff * k_eff;
    let r = cfg.r();
    let cycles = cfg.steps / 2;

    let phase = |e: &[f64], o: &[f64]| {
        let psi = combine(e, o).expect("fields share a length");
        fourier_component(&psi, cfg, k_mode).arg()
    };
    let mut last = phase(&psi_e, &psi_o);
    let mut advance = 0.0;
    for cycle in 0..cycles as u64 {
        substep(2 * cycle, r, &mut psi_e, &mut psi_o);
        substep(2 * cycle + 1, r, &mut psi_e, &mut psi_o);
        let now = phase(&psi_e, &psi_o);
        let mut delta = now - last;
        while delta > PI {
            delta -= 2.0 * PI;
        }
        while delta < -PI {
            delta += 2.0 * PI;
        }
        advance += delta;
        last = now;
    }
    let elapsed = cycles as f64 * cfg.dt;
    let measured = if elapsed > 0.0 {
        advance / elapsed
    } else {
        0.0
    };
    let rel_error = if predicted == 0.0 {
        measured.abs()
    } else {
        (measured - predicted).abs() / predicted.abs()
    };
    Ok(Dispersion {
        k_mode,
        k,
        k_eff,
        elapsed,
        measured_omega: measured,
        predicted_omega: predicted,
        rel_error,
        r,
        unstable_warning: cfg.unstable_warning(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Convergence {
    pub coarse: Dispersion,
    pub fine: Dispersion,
    pub improves: bool,
}

/// Dispersion at dt and at dt/2 over the same physical span.
pub fn dispersion_convergence(cfg: &LatticeConfig, k_mode: i64) -> Result<Convergence> {
    let coarse = dispersion_check(cfg, k_mode)?;
    let fine = dispersion_check(&cfg.refined(), k_mode)?;
    Ok(Convergence {
        coarse,
        fine,
        improves: fine.rel_error < coarse.rel_error,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CouplingDefect {
    /// max |(ψ_e' − ψ_e)/dt − κ∂²ψ_o| relative to max |κ∂²ψ_o|
    pub even: f64,
    /// max |(ψ_o' − ψ_o)/dt + κ∂²ψ_e| relative to max |κ∂²ψ_e|
    pub odd: f64,
}

impl CouplingDefect {
    pub fn max(&self) -> f64 {
        self.even.max(self.odd)
    }
}

/// Residual of the continuum pair ∂_tψ_e = κ∂²ψ_o, ∂_tψ_o = −κ∂²ψ_e when
/// both right-hand sides are read at the start of each even/odd cycle.
pub fn coupling_defect(
    cfg: &LatticeConfig,
    initial_even: &FieldState,
    initial_odd: &FieldState,
) -> Result<CouplingDefect> {
    let run = run(cfg, initial_even, initial_odd, 2)?;
    let scale = cfg.kappa / (cfg.dx * cfg.dx);
    let mut worst = [0.0f64; 2];
    let mut size = [0.0f64; 2];
    let cycles: Vec<&Snapshot> = run
        .snapshots
        .iter()
        .filter(|s| s.t_index % 2 == 0)
        .collect();
    for pair in cycles.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let lap_o = laplacian(&a.psi_o);
        let lap_e = laplacian(&a.psi_e);
        for i in 0..cfg.cells {
            let rhs_e = scale * lap_o[i];
            let rhs_o = -scale * lap_e[i];
            let de = (b.psi_e[i] - a.psi_e[i]) / cfg.dt;
            let dodd = (b.psi_o[i] - a.psi_o[i]) / cfg.dt;
            worst[0] = worst[0].max((de - rhs_e).abs());
            worst[1] = worst[1].max((dodd - rhs_o).abs());
            size[0] = size[0].max(rhs_e.abs());
            size[1] = size[1].max(rhs_o.abs());
        }
    }
    let rel = |w: f64, s: f64| if s == 0.0 { w } else { w / s };
    Ok(CouplingDefect {
        even: rel(worst[0], size[0]),
        odd: rel(worst[1], size[1]),
    })
}
