use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "iterant-lab",
    version,
    about = "Exact iterant algebra, matrix representations and the checks that tie them together",
    after_help = "Exit status: 0 on success, 1 when a check fails (or `lof reduce` \
                  yields unmarked), 2 on usage errors."
)]
pub struct Cli {
    /// Output format; each command picks a sensible default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finite groups, multiplication tables and G-Tables.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Arithmetic in iterant algebras.
    #[command(subcommand)]
    Iterant(IterantCmd),
    /// Matrix images, decompositions and isomorphism checks.
    #[command(subcommand)]
    Matrep(MatrepCmd),
    /// Quaternions, Clifford generators, braiding and fusion.
    #[command(subcommand)]
    Clifford(CliffordCmd),
    /// Nilpotent Dirac operators and the Majorana-Dirac generators.
    #[command(subcommand)]
    Dirac(DiracCmd),
    /// Non-commutative discrete calculus.
    #[command(subcommand)]
    Discrete(DiscreteCmd),
    /// The staggered discrete Schrödinger scheme.
    #[command(subcommand)]
    Schrodinger(SchrodingerCmd),
    /// Calling and crossing on marks.
    #[command(subcommand)]
    Lof(LofCmd),
    /// Run the full identity suite and print a pass/fail table.
    VerifyAll,
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    /// Multiplication table, or the G-Table with --gtable.
    Table {
        #[arg(long)]
        group: String,
        #[arg(long)]
        gtable: bool,
    },
    /// Latin square, regular homomorphism and σ(P_g) = ρ(g) for every element.
    Check {
        #[arg(long)]
        group: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum IterantCmd {
    /// Product of two iterants, e.g. `[1,2] + [3,4]e`.
    Mul {
        #[arg(long, default_value = "vect2")]
        algebra: String,
        x: String,
        y: String,
    },
    /// Conjugate and D(Z) in Vect_2, against the matrix determinant.
    Det { z: String },
    /// Both square roots of -1 squared.
    Sqrt,
}

#[derive(Debug, Subcommand)]
pub enum MatrepCmd {
    /// Split a matrix from a JSON file (array of rows) into Δ·P terms.
    Decompose {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Homomorphism and rank of the matrix representation of an algebra.
    Isocheck {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Matrix image of an iterant and both kernel criteria.
    Image {
        #[arg(long, default_value = "a3")]
        algebra: String,
        x: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum CliffordCmd {
    /// One of the quaternion representations.
    Quaternions {
        #[arg(long, default_value = "klein4")]
        variant: String,
        /// Check all 16 products against the Hamilton table.
        #[arg(long)]
        verify: bool,
    },
    /// Matrix of a braid word acting on n Clifford generators.
    Braid {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        word: String,
        #[arg(long)]
        compare: Option<String>,
    },
    /// Braiders 1 + I, 1 + J, 1 + K from three Majorana generators.
    Braiders,
    /// Fermion pair from generators j and k of an n-generator algebra.
    Fermions {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        j: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// P^n in the Fibonacci fusion algebra.
    Fusion {
        #[arg(long)]
        power: u32,
    },
    /// Boost of (t, x) at velocity v.
    Boost {
        #[arg(long)]
        v: String,
        #[arg(long)]
        t: String,
        #[arg(long)]
        x: String,
    },
    /// Hermitian matrix of a spacetime event.
    Minkowski {
        #[arg(long)]
        t: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        z: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum DiracCmd {
    /// Relation report for U and its dagger.
    Verify {
        #[arg(long = "E")]
        e: String,
        /// A single value in 1d, three comma-separated values in 3d.
        #[arg(long)]
        p: String,
        #[arg(long)]
        m: String,
        #[arg(long, default_value = "time_reversed")]
        version: String,
        #[arg(long, default_value = "1d")]
        dim: String,
    },
    /// Relation table of the real 4x4 generators.
    MajoranaGenerators {
        #[arg(long)]
        emit_matrices: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum DiscreteCmd {
    /// Both sides of [x, Dx] = J(Δx)²/Δt.
    Commutator {
        #[arg(long)]
        seq: String,
        #[arg(long, default_value = "1")]
        dt: String,
    },
    /// Whether (Δx)²/Δt is constant along the sequence.
    Brownian {
        #[arg(long)]
        seq: String,
        #[arg(long, default_value = "1")]
        dt: String,
    },
    /// Steps from the discrete commutator to [p, q] = iħ.
    Heisenberg {
        #[arg(long, default_value = "x")]
        q: String,
        #[arg(long, default_value = "m")]
        m: String,
        #[arg(long, default_value = "ħ")]
        hbar: String,
    },
}

#[derive(Debug, Args)]
pub struct Lattice {
    #[arg(long, default_value_t = 256)]
    pub n: usize,
    #[arg(long, default_value_t = 1.0)]
    pub dx: f64,
    #[arg(long, default_value_t = 0.05)]
    pub dt: f64,
    #[arg(long, default_value_t = 1.0)]
    pub kappa: f64,
    #[arg(long, default_value_t = 2000)]
    pub steps: usize,
    /// `gaussian:mu=..,sigma=..[,k0=..]`, `plane:k=..` or `impulse:at=..`.
    #[arg(long)]
    pub init: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum SchrodingerCmd {
    /// Evolve the even/odd pair; CSV with --out or --format csv.
    Run {
        #[command(flatten)]
        lattice: Lattice,
        /// Record every n-th sub-step.
        #[arg(long, default_value_t = 1)]
        every: usize,
        /// Emit the dispersion report for lattice mode k instead.
        #[arg(long, allow_negative_numbers = true)]
        dispersion: Option<i64>,
    },
    /// Residual of the continuum even/odd pair at dt and dt/2.
    Defect {
        #[command(flatten)]
        lattice: Lattice,
    },
}

#[derive(Debug, Subcommand)]
pub enum LofCmd {
    /// Reduce to marked (exit 0) or unmarked (exit 1).
    Reduce {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        expr: Option<String>,
        /// Print each rewrite step.
        #[arg(long)]
        trace: bool,
        /// Fuzz confluence on N random expressions of the given depth.
        #[arg(long, num_args = 3, value_names = ["N", "DEPTH", "SEED"])]
        random: Option<Vec<u64>>,
        #[arg(long, default_value_t = 4)]
        width: usize,
        #[arg(long, default_value_t = 8)]
        trials: usize,
    },
    /// Logical reading of an expression over all assignments.
    Logic { expr: String },
    /// The translation table against Boolean truth tables.
    TruthTable,
    /// Re-entry unfolding and the e, η pair.
    Bridge {
        #[arg(long, default_value_t = 6)]
        steps: usize,
    },
}
