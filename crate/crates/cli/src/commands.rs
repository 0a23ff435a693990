use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use iterant_core::clifford::{
    braid_word_matrix, clifford_rep, fermion_pair, lorentz_boost, minkowski_h, quaternion_braiders,
    quaternion_rep, BoostResult, FusionElement, QuaternionVariant, RelationCheck, SpacetimeEvent,
};
use iterant_core::dirac::{
    dirac_frame, majorana_dirac_generators, verify_relations, DaggerVersion, MatrixCheck,
    OnShellParams, SpaceDim,
};
use iterant_core::discrete::{basic_commutator, brownian_constancy, heisenberg_chain, Sequence};
use iterant_core::groups::{g_table, group_make, regular_action, sigma_of, GroupAction, GroupSpec};
use iterant_core::iterant::{
    a_n, iterant_conj, iterant_det, iterant_i, iterant_i_alt, vect2, vect_regular, IterantElement,
};
use iterant_core::lof::{
    assignments, confluence_fuzz, eval_logic, majorana_bridge, reduce, reentry_unfolding,
    translate, truth_table_check, MarkExpr, Value as LofValue,
};
use iterant_core::matrep::{decompose_matrix, iso_check, kernel_test, reassemble, to_matrix};
use iterant_core::scalar::parse_rational;
use iterant_core::schrodinger::{coupling_defect, dispersion_check, run, Initial, LatticeConfig};
use iterant_core::verify::verify_all;
use iterant_core::{Rational, Scalar, SquareMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::*;
use crate::report::{check_lines, mark, table_csv, Report};

pub struct Ctx {
    pub seed: u64,
    pub to_file: bool,
}

pub fn dispatch(cmd: &Command, ctx: &Ctx) -> Result<Report> {
    match cmd {
        Command::Group(c) => group(c),
        Command::Iterant(c) => iterant(c),
        Command::Matrep(c) => matrep(c, ctx),
        Command::Clifford(c) => clifford(c),
        Command::Dirac(c) => dirac(c),
        Command::Discrete(c) => discrete(c),
        Command::Schrodinger(c) => schrodinger(c, ctx),
        Command::Lof(c) => lof(c),
        Command::VerifyAll => {
            let report = verify_all(ctx.seed);
            Ok(
                Report::new(serde_json::to_value(&report)?, report.to_string())
                    .with_csv(report.csv())
                    .pass(report.all_pass()),
            )
        }
    }
}

/// `vect2`, `aN` for S_N on N points, or any group name for its regular action.
fn algebra(name: &str) -> Result<Arc<GroupAction>> {
    let t = name.trim().to_ascii_lowercase();
    if t == "vect2" {
        return Ok(vect2());
    }
    if let Some(n) = t.strip_prefix('a').and_then(|n| n.parse().ok()) {
        return Ok(a_n(n)?);
    }
    Ok(vect_regular(&t.parse::<GroupSpec>()?)?)
}

fn rational(text: &str) -> Result<Rational> {
    parse_rational(text).with_context(|| format!("bad rational `{text}`"))
}

fn relation_report(checks: &[RelationCheck]) -> Report {
    let pass = checks.iter().all(|c| c.pass);
    Report::new(
        json!({ "checks": checks, "pass": pass }),
        check_lines(checks.iter().map(|c| (c.check.as_str(), c.pass))),
    )
    .pass(pass)
}

fn matrix_checks_text(checks: &[MatrixCheck]) -> String {
    check_lines(checks.iter().map(|c| (c.check.as_str(), c.pass)))
}

fn group(cmd: &GroupCmd) -> Result<Report> {
    match cmd {
        GroupCmd::Table { group, gtable } => {
            let g = group_make(&group.parse()?)?;
            let table = if *gtable {
                g_table(&g).table
            } else {
                g.mul_table().to_vec()
            };
            let named: Vec<Vec<String>> = table
                .iter()
                .map(|row| row.iter().map(|&x| g.name(x).to_string()).collect())
                .collect();
            let json = json!({
                "group": group,
                "kind": if *gtable { "g-table" } else { "multiplication" },
                "elements": g.names(),
                "table": named,
            });
            Ok(Report::new(json, g.render_table(&table)).with_csv(table_csv(&named)))
        }
        GroupCmd::Check { group } => {
            let g = group_make(&group.parse()?)?;
            let gt = g_table(&g);
            let reg = regular_action(&g);
            let n = g.order();
            let homomorphism = (0..n)
                .all(|a| (0..n).all(|b| *reg.perm(g.mul(a, b)) == reg.perm(a).then(reg.perm(b))));
            let mut checks = vec![
                RelationCheck {
                    check: "G-Table is a Latin square".into(),
                    pass: gt.is_latin_square(),
                },
                RelationCheck {
                    check: "rho(gh) = rho(g) rho(h)".into(),
                    pass: homomorphism,
                },
            ];
            for x in 0..n {
                let sigma = sigma_of(&gt.placement_matrix(x))?;
                checks.push(RelationCheck {
                    check: format!("sigma(P_{}) = rho({})", g.name(x), g.name(x)),
                    pass: sigma == *reg.perm(x),
                });
            }
            Ok(relation_report(&checks))
        }
    }
}

fn iterant_json(x: &IterantElement) -> Value {
    json!({ "text": x.to_string(), "terms": x.to_json()["terms"] })
}

fn iterant(cmd: &IterantCmd) -> Result<Report> {
    match cmd {
        IterantCmd::Mul {
            algebra: name,
            x,
            y,
        } => {
            let a = algebra(name)?;
            let x = IterantElement::parse(&a, x)?;
            let y = IterantElement::parse(&a, y)?;
            let p = x.try_mul(&y)?;
            Ok(Report::new(
                json!({
                    "algebra": a.label(),
                    "x": iterant_json(&x),
                    "y": iterant_json(&y),
                    "product": iterant_json(&p),
                }),
                p.to_string(),
            ))
        }
        IterantCmd::Det { z } => {
            let a = vect2();
            let z = IterantElement::parse(&a, z)?;
            let conj = iterant_conj(&z)?;
            let d = iterant_det(&z)?;
            let matrix_det = to_matrix(&z).det();
            let pass = d == matrix_det;
            Ok(Report::new(
                json!({
                    "z": iterant_json(&z),
                    "conj": iterant_json(&conj),
                    "det": d.to_string(),
                    "matrix_det": matrix_det.to_string(),
                    "pass": pass,
                }),
                format!(
                    "Z       = {z}\nconj(Z) = {conj}\nD(Z)    = {d}\ndet     = {matrix_det}\n{}\n",
                    mark(pass)
                ),
            )
            .pass(pass))
        }
        IterantCmd::Sqrt => {
            let minus_one = Scalar::int(-1);
            let rows: Vec<(String, String, bool)> = [("i", iterant_i()), ("i'", iterant_i_alt())]
                .into_iter()
                .map(|(label, i)| {
                    let sq = i.pow(2);
                    let pass = sq.as_scalar() == Some(minus_one.clone());
                    (format!("{label}: ({i})^2 = -1"), sq.to_string(), pass)
                })
                .collect();
            let pass = rows.iter().all(|r| r.2);
            let json = rows
                .iter()
                .map(|(c, sq, p)| json!({ "check": c, "square": sq, "pass": p }))
                .collect::<Vec<_>>();
            Ok(Report::new(
                json!({ "checks": json, "pass": pass }),
                check_lines(rows.iter().map(|r| (r.0.as_str(), r.2))),
            )
            .pass(pass))
        }
    }
}

fn matrep(cmd: &MatrepCmd, ctx: &Ctx) -> Result<Report> {
    match cmd {
        MatrepCmd::Decompose { matrix } => {
            let text = std::fs::read_to_string(matrix)
                .with_context(|| format!("reading {}", matrix.display()))?;
            let m: SquareMatrix = serde_json::from_str(&text)
                .with_context(|| format!("{} is not an array of rows", matrix.display()))?;
            let d = decompose_matrix(&m)?;
            let pass = reassemble(&d) == m;
            let mut out = format!("factor {}\n", d.factor);
            for t in &d.terms {
                let diag: Vec<String> = t.diag.iter().map(|s| s.to_string()).collect();
                let _ = writeln!(out, "{:<10} [{}]", t.perm, diag.join(", "));
            }
            let _ = writeln!(out, "{}  reassembles", mark(pass));
            let mut json = d.to_json();
            json["reassembles"] = json!(pass);
            Ok(Report::new(json, out).prefer(Format::Json).pass(pass))
        }
        MatrepCmd::Isocheck { group, samples } => {
            let a = algebra(group)?;
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let r = iso_check(&a, *samples, &mut rng)?;
            let text = format!(
                "{}: order {}, degree {}\n{}  homomorphism on {} pairs\nrank {} of {} (algebra) into {} (matrices)\ninjective {}, surjective {}, isomorphism {}\n",
                r.action,
                r.group_order,
                r.degree,
                mark(r.homomorphism),
                r.samples,
                r.image_rank,
                r.algebra_dim,
                r.matrix_dim,
                r.injective,
                r.surjective,
                r.isomorphism,
            );
            Ok(Report::new(serde_json::to_value(&r)?, text).pass(r.homomorphism))
        }
        MatrepCmd::Image { algebra: name, x } => {
            let a = algebra(name)?;
            let x = IterantElement::parse(&a, x)?;
            let k = kernel_test(&x);
            let pass = k.criteria_agree();
            Ok(Report::new(
                json!({
                    "x": iterant_json(&x),
                    "image": k.image,
                    "in_kernel": k.in_kernel,
                    "sums_vanish": k.sums_vanish,
                    "pass": pass,
                }),
                format!(
                    "{}in kernel: {}\nsums vanish: {}\n{}  criteria agree\n",
                    k.image,
                    k.in_kernel,
                    k.sums_vanish,
                    mark(pass)
                ),
            )
            .pass(pass))
        }
    }
}

fn named_matrices(items: &[(&str, &SquareMatrix)]) -> (Value, String) {
    let mut json = serde_json::Map::new();
    let mut text = String::new();
    for (name, m) in items {
        json.insert(
            name.to_string(),
            serde_json::to_value(m).expect("matrices serialize"),
        );
        let _ = write!(text, "{name} =\n{m}\n");
    }
    (Value::Object(json), text)
}

fn parse_word(text: &str) -> Result<Vec<usize>> {
    text.split([' ', ','])
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().with_context(|| format!("bad braid index `{s}`")))
        .collect()
}

fn clifford(cmd: &CliffordCmd) -> Result<Report> {
    match cmd {
        CliffordCmd::Quaternions { variant, verify } => {
            let q = quaternion_rep(variant.parse::<QuaternionVariant>()?);
            let (mut json, mut text) = named_matrices(&[("I", &q.i), ("J", &q.j), ("K", &q.k)]);
            let mut pass = true;
            if *verify {
                let checks = q.verify();
                pass = checks.iter().all(|c| c.pass);
                json["checks"] = serde_json::to_value(&checks)?;
                text.push_str(&check_lines(
                    checks.iter().map(|c| (c.check.as_str(), c.pass)),
                ));
            }
            Ok(Report::new(json, text).pass(pass))
        }
        CliffordCmd::Braid { n, word, compare } => {
            let w = parse_word(word)?;
            let m = braid_word_matrix(*n, &w)?;
            let mut json = json!({ "n": n, "word": w, "matrix": m });
            let mut text = format!("{m}");
            let mut pass = true;
            if let Some(other) = compare {
                let v = parse_word(other)?;
                let m2 = braid_word_matrix(*n, &v)?;
                pass = m == m2;
                json["compare"] = json!({ "word": v, "matrix": m2, "equal": pass });
                let _ = write!(text, "\n{m2}\n{}  {word} = {other}\n", mark(pass));
            }
            Ok(Report::new(json, text).pass(pass))
        }
        CliffordCmd::Braiders => {
            let b = quaternion_braiders(&clifford_rep(3)?)?;
            let (mut json, mut text) = named_matrices(&[("A", &b.a), ("B", &b.b), ("C", &b.c)]);
            let r = relation_report(&b.checks);
            json["checks"] = r.json["checks"].clone();
            text.push_str(&r.text);
            Ok(Report::new(json, text).pass(r.pass))
        }
        CliffordCmd::Fermions { n, j, k } => {
            let f = fermion_pair(&clifford_rep(*n)?, *j, *k)?;
            let (mut json, mut text) = named_matrices(&[("psi", &f.psi), ("psi_dag", &f.psi_dag)]);
            let r = relation_report(&f.checks);
            json["checks"] = r.json["checks"].clone();
            text.push_str(&r.text);
            Ok(Report::new(json, text).pass(r.pass))
        }
        CliffordCmd::Fusion { power } => {
            let p = FusionElement::p().pow(*power);
            Ok(Report::new(
                json!({
                    "power": power,
                    "unit_coeff": p.unit_coeff.to_string(),
                    "p_coeff": p.p_coeff.to_string(),
                }),
                format!("P^{power} = {p}\n"),
            ))
        }
        CliffordCmd::Boost { v, t, x } => {
            let b = lorentz_boost(&rational(v)?, &rational(t)?, &rational(x)?)?;
            let pass = b.invariant_holds();
            let (result, line) = match &b.result {
                BoostResult::Exact { t, x } => (
                    json!({ "mode": "exact", "t": t.to_string(), "x": x.to_string() }),
                    format!("t' = {t}\nx' = {x}\n"),
                ),
                BoostResult::LightCone { k_squared, u, w } => (
                    json!({
                        "mode": "light_cone",
                        "k_squared": k_squared.to_string(),
                        "u": u.to_string(),
                        "w": w.to_string(),
                    }),
                    format!("k^2 = {k_squared}\n[k u, w/k] with u = {u}, w = {w}\n"),
                ),
            };
            Ok(Report::new(
                json!({
                    "result": result,
                    "interval_before": b.interval_before.to_string(),
                    "interval_after": b.interval_after.to_string(),
                    "pass": pass,
                }),
                format!(
                    "{line}{}  t^2 - x^2: {} -> {}\n",
                    mark(pass),
                    b.interval_before,
                    b.interval_after
                ),
            )
            .pass(pass))
        }
        CliffordCmd::Minkowski { t, x, y, z } => {
            let e = SpacetimeEvent {
                t: rational(t)?,
                x: rational(x)?,
                y: rational(y)?,
                z: rational(z)?,
            };
            let r = minkowski_h(&e);
            let pass = r.hermitian && r.iterant_det_agrees;
            let poly: Vec<String> = r.charpoly.iter().map(|c| c.to_string()).collect();
            Ok(Report::new(
                json!({
                    "h": r.h,
                    "det": r.det.to_string(),
                    "charpoly": poly,
                    "hermitian": r.hermitian,
                    "iterant_det_agrees": r.iterant_det_agrees,
                }),
                format!(
                    "{}det = {}\ncharpoly [{}]\n{}  hermitian\n{}  iterant determinant\n",
                    r.h,
                    r.det,
                    poly.join(", "),
                    mark(r.hermitian),
                    mark(r.iterant_det_agrees)
                ),
            )
            .pass(pass))
        }
    }
}

fn dirac(cmd: &DiracCmd) -> Result<Report> {
    match cmd {
        DiracCmd::Verify {
            e,
            p,
            m,
            version,
            dim,
        } => {
            let dim: SpaceDim = dim.parse()?;
            let version: DaggerVersion = version.parse()?;
            let ps = p
                .split(',')
                .map(|s| rational(s.trim()))
                .collect::<Result<Vec<_>>>()?;
            let params = match (dim, <[Rational; 3]>::try_from(ps.clone())) {
                (SpaceDim::One, _) if ps.len() == 1 => {
                    OnShellParams::one_d(rational(e)?, ps[0].clone(), rational(m)?)
                }
                (SpaceDim::Three, Ok(p3)) => OnShellParams::three_d(rational(e)?, p3, rational(m)?),
                _ => bail!("--p needs one value in 1d and three in 3d"),
            };
            let checks = verify_relations(&dirac_frame(dim), &params, version)?;
            let pass = checks.iter().all(|c| c.pass);
            let mut text = String::new();
            if !params.on_shell() {
                let _ = writeln!(
                    text,
                    "off shell: E^2 - p^2 - m^2 = {}",
                    -params.shell_defect()
                );
            }
            text.push_str(&matrix_checks_text(&checks));
            Ok(Report::new(
                json!({
                    "dim": dim,
                    "version": version,
                    "on_shell": params.on_shell(),
                    "checks": checks,
                    "pass": pass,
                }),
                text,
            )
            .prefer(Format::Json)
            .pass(pass))
        }
        DiracCmd::MajoranaGenerators { emit_matrices } => {
            let g = majorana_dirac_generators();
            let pass = g.all_real() && g.relation_table.iter().all(|c| c.pass);
            let rows: Vec<Value> = g
                .relation_table
                .iter()
                .map(|c| json!({ "check": c.check, "pass": c.pass }))
                .collect();
            let mut json = json!({ "all_real": g.all_real(), "checks": rows, "pass": pass });
            let mut text = String::new();
            if *emit_matrices {
                let (mats, t) = named_matrices(&[
                    ("ax", &g.ax),
                    ("ay", &g.ay),
                    ("az", &g.az),
                    ("beta'", &g.beta_prime),
                ]);
                json["matrices"] = mats;
                text = t;
            }
            let _ = writeln!(text, "{}  all real", mark(g.all_real()));
            text.push_str(&matrix_checks_text(&g.relation_table));
            Ok(Report::new(json, text).pass(pass))
        }
    }
}

fn discrete(cmd: &DiscreteCmd) -> Result<Report> {
    match cmd {
        DiscreteCmd::Commutator { seq, dt } => {
            let r = basic_commutator(&Sequence::parse(seq)?, &rational(dt)?)?;
            Ok(Report::new(
                r.to_json(),
                format!(
                    "[x, Dx]      = {}\nJ(dx)^2/dt   = {}\n{}\n",
                    r.lhs,
                    r.rhs,
                    mark(r.equal)
                ),
            )
            .prefer(Format::Json)
            .pass(r.equal))
        }
        DiscreteCmd::Brownian { seq, dt } => {
            let b = brownian_constancy(&Sequence::parse(seq)?, &rational(dt)?)?;
            let k = b.k.as_ref().map(|k| k.to_string());
            let text = match &k {
                Some(k) => format!("(dx)^2/dt = {k} throughout\n"),
                None => "(dx)^2/dt varies\n".to_string(),
            };
            Ok(Report::new(json!({ "constant": b.constant, "k": k }), text))
        }
        DiscreteCmd::Heisenberg { q, m, hbar } => {
            let chain = heisenberg_chain(q, m, hbar);
            let text = chain.iter().map(|l| format!("{l}\n")).collect();
            Ok(Report::new(json!({ "chain": chain }), text))
        }
    }
}

fn lattice(l: &Lattice) -> Result<(LatticeConfig, Initial)> {
    if l.n == 0 {
        bail!("--n must be positive");
    }
    let cfg = LatticeConfig::new(l.n, l.dx, l.dt, l.kappa, l.steps);
    let init = match &l.init {
        Some(s) => s.parse()?,
        None => Initial::Gaussian {
            mu: cfg.position(l.n / 2),
            sigma: (l.n as f64 * l.dx / 25.0).max(l.dx),
            k0: 0.0,
        },
    };
    if cfg.unstable_warning() {
        eprintln!("warning: r = {} exceeds the stability threshold", cfg.r());
    }
    Ok((cfg, init))
}

fn schrodinger(cmd: &SchrodingerCmd, ctx: &Ctx) -> Result<Report> {
    match cmd {
        SchrodingerCmd::Run {
            lattice: l,
            every,
            dispersion,
        } => {
            let (cfg, init) = lattice(l)?;
            if let Some(k) = dispersion {
                let d = dispersion_check(&cfg, *k)?;
                let pass = d.measured_omega.is_finite();
                let text = format!(
                    "k = {} (k_eff {})\nmeasured omega  {}\npredicted omega {}\nrelative error  {:e}\nr = {}\n",
                    d.k, d.k_eff, d.measured_omega, d.predicted_omega, d.rel_error, d.r
                );
                return Ok(Report::new(serde_json::to_value(d)?, text)
                    .prefer(Format::Json)
                    .pass(pass));
            }
            if *every == 0 {
                bail!("--every must be positive");
            }
            let (even, odd) = init.fields(&cfg)?;
            let r = run(&cfg, &even, &odd, *every)?;
            let norms = r.norms();
            let drift = r.max_norm_drift();
            let finite = r.is_finite();
            let mut csv = Vec::new();
            r.write_csv(&mut csv)?;
            let summary = json!({
                "config": cfg,
                "init": init,
                "r": cfg.r(),
                "snapshots": r.snapshots.len(),
                "initial_norm": norms[0],
                "final_norm": norms[norms.len() - 1],
                "max_norm_drift": drift,
                "finite": finite,
            });
            let text = format!(
                "cells {}, r = {}, sub-steps {}, snapshots {}\nnorm {} -> {} (max drift {:e})\n",
                cfg.cells,
                cfg.r(),
                cfg.steps,
                r.snapshots.len(),
                norms[0],
                norms[norms.len() - 1],
                drift
            );
            let report = Report::new(summary, text)
                .with_csv(String::from_utf8(csv)?)
                .pass(finite);
            Ok(if ctx.to_file {
                report.prefer(Format::Csv)
            } else {
                report
            })
        }
        SchrodingerCmd::Defect { lattice: l } => {
            let (cfg, init) = lattice(l)?;
            let (even, odd) = init.fields(&cfg)?;
            let coarse = coupling_defect(&cfg, &even, &odd)?;
            let fine_cfg = cfg.refined();
            let (even, odd) = init.fields(&fine_cfg)?;
            let fine = coupling_defect(&fine_cfg, &even, &odd)?;
            Ok(Report::new(
                json!({ "dt": cfg.dt, "coarse": coarse, "fine": fine }),
                format!(
                    "dt   {:<12} even {:e}  odd {:e}\ndt/2 {:<12} even {:e}  odd {:e}\n",
                    cfg.dt, coarse.even, coarse.odd, fine_cfg.dt, fine.even, fine.odd
                ),
            ))
        }
    }
}

fn lof(cmd: &LofCmd) -> Result<Report> {
    match cmd {
        LofCmd::Reduce {
            expr,
            trace,
            random,
            width,
            trials,
        } => {
            if let Some(r) = random {
                let (n, depth, seed) = (r[0] as usize, r[1] as usize, r[2]);
                let f = confluence_fuzz(n, depth, *width, *trials, seed);
                let pass = f.all_agree();
                let mut text = format!(
                    "{} expressions, depth <= {}, width <= {}, {} orders each\n",
                    f.expressions, f.max_depth, f.max_width, f.trials_each
                );
                for d in &f.disagreements {
                    let _ = writeln!(text, "disagrees: {d}");
                }
                let _ = writeln!(text, "{}  confluence", mark(pass));
                return Ok(Report::new(serde_json::to_value(&f)?, text).pass(pass));
            }
            let text = expr.as_deref().expect("clap requires an expression");
            let e = MarkExpr::parse(text)?;
            let r = reduce(&e)?;
            let mut out = String::new();
            if *trace {
                let _ = writeln!(out, "{e}");
                for s in &r.trace {
                    let _ = writeln!(
                        out,
                        "{:<9} {}",
                        format!("{:?}", s.rule).to_lowercase(),
                        s.after
                    );
                }
            }
            let _ = writeln!(out, "{}", r.value);
            let mut json = json!({ "expression": e.to_string(), "value": r.value });
            if *trace {
                json["trace"] = serde_json::to_value(&r.trace)?;
            }
            Ok(Report::new(json, out).pass(r.value == LofValue::Marked))
        }
        LofCmd::Logic { expr } => {
            let e = MarkExpr::parse(expr)?;
            let formula = translate(&e);
            let vars = e.variables();
            let mut rows = Vec::new();
            let mut text = format!("{formula}\n");
            let mut pass = true;
            for asg in assignments(&vars) {
                let marks = eval_logic(&e, &asg)?;
                let logic = formula.eval(&asg)?;
                pass &= marks == logic;
                let cells: Vec<String> = asg
                    .iter()
                    .map(|(k, v)| format!("{k}={}", u8::from(*v)))
                    .collect();
                let _ = writeln!(text, "{}  ->  {}", cells.join(" "), u8::from(marks));
                let asg: BTreeMap<&String, bool> = asg.iter().map(|(k, v)| (k, *v)).collect();
                rows.push(json!({ "assignment": asg, "value": marks, "formula": logic }));
            }
            Ok(Report::new(
                json!({ "expression": e.to_string(), "formula": formula.to_string(), "rows": rows }),
                text,
            )
            .pass(pass))
        }
        LofCmd::TruthTable => {
            let rows = truth_table_check();
            let pass = rows.iter().all(|r| r.pass);
            let text = rows
                .iter()
                .map(|r| {
                    format!(
                        "{}  {:<10} {:<8} {}\n",
                        mark(r.pass),
                        r.pattern,
                        r.connective,
                        r.formula
                    )
                })
                .collect();
            Ok(Report::new(json!({ "rows": rows, "pass": pass }), text).pass(pass))
        }
        LofCmd::Bridge { steps } => {
            let unfold = reentry_unfolding(*steps);
            let checks = majorana_bridge();
            let r = relation_report(&checks);
            let values: Vec<String> = unfold.iter().map(|v| v.to_string()).collect();
            let text = format!("{}\n{}", values.join(" "), r.text);
            Ok(Report::new(json!({ "unfolding": unfold, "checks": checks }), text).pass(r.pass))
        }
    }
}
