use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "exceptia",
    version,
    about = "Exact computations with exceptional algebraic structures"
)]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cayley–Dickson numbers, Fano octonions and triality.
    #[command(subcommand)]
    Hyper(HyperCmd),
    /// Clifford algebras and spinors.
    #[command(subcommand)]
    Clifford(CliffordCmd),
    /// Integral lattices.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// q-series: η²⁴ and the j-function.
    #[command(subcommand)]
    Modular(ModularCmd),
    /// π hex digits, cannonballs, spin areas, linking numbers.
    #[command(subcommand)]
    Id(IdCmd),
}

#[derive(Debug, Subcommand)]
pub enum HyperCmd {
    /// Product `x·y`.
    Mul {
        x: String,
        y: String,
        /// Cayley–Dickson level; defaults to the least level holding both operands.
        #[arg(long)]
        level: Option<u32>,
        /// Use the Fano-plane octonion table (level 3).
        #[arg(long)]
        fano: bool,
    },
    /// Conjugate `x*`.
    Conj {
        x: String,
        #[arg(long)]
        level: Option<u32>,
    },
    /// Norm `x x*`.
    Norm {
        x: String,
        #[arg(long)]
        level: Option<u32>,
    },
    /// Inverse `x* / (x x*)`.
    Inv {
        x: String,
        #[arg(long)]
        level: Option<u32>,
    },
    /// Fano product of imaginary units `e_i e_j`.
    Fano { i: usize, j: usize },
    /// x-product `(b a)(a* c)` of three octonions.
    Xprod { a: String, b: String, c: String },
    /// Permute the imaginary units of a quaternion, e.g. `jki`.
    Permute { perm: String, q: String },
}

#[derive(Debug, Args)]
pub struct Signature {
    /// Generators squaring to −1.
    #[arg(long, default_value_t = 0)]
    pub p: usize,
    /// Generators squaring to +1.
    #[arg(long, default_value_t = 0)]
    pub q: usize,
}

#[derive(Debug, Subcommand)]
pub enum CliffordCmd {
    /// Product of two multivectors such as `1 + 2e1e2`.
    Mul {
        x: String,
        y: String,
        #[command(flatten)]
        sig: Signature,
    },
    /// Matrix-algebra class of `C_{p,q}`.
    Classify { p: usize, q: usize },
    /// Spinor kinds in Minkowski dimension `n` (through `--to`).
    Spinors {
        n: usize,
        #[arg(long)]
        to: Option<usize>,
    },
    /// Dimensions in `[lo, hi]` admitting minimal super Yang–Mills.
    Superym { lo: usize, hi: usize },
}

/// A named lattice (`E8`, `A3`, `LeechII`, …) or a lattice file.
#[derive(Debug, Args)]
pub struct LatticeSource {
    /// Named lattice.
    #[arg(value_name = "NAME")]
    pub name: Option<String>,
    /// Named lattice, as a flag.
    #[arg(long = "lattice", value_name = "NAME", conflicts_with = "name")]
    pub lattice: Option<String>,
    /// Lattice file.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["name", "lattice"])]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum LatticeCmd {
    /// Print a basis in the lattice file format.
    Build {
        #[command(flatten)]
        src: LatticeSource,
    },
    /// Rank, determinant, parity, minimum and kissing number.
    Info {
        #[command(flatten)]
        src: LatticeSource,
    },
    /// θ-series coefficients through `q^order`.
    Theta {
        #[command(flatten)]
        src: LatticeSource,
        #[arg(long, default_value_t = 2)]
        order: usize,
    },
    /// Vectors with norm at most `--max-norm`.
    Shortvec {
        #[command(flatten)]
        src: LatticeSource,
        #[arg(long, default_value_t = 2)]
        max_norm: u64,
        /// How many vectors to list (one per ± pair).
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
    /// The dual lattice.
    Dual {
        #[command(flatten)]
        src: LatticeSource,
    },
    /// LLL-reduced basis.
    Lll {
        #[command(flatten)]
        src: LatticeSource,
        /// Lovász parameter in (1/4, 1).
        #[arg(long, default_value = "99/100")]
        delta: String,
    },
    /// Build the Leech lattice and count its short vectors.
    Leech {
        #[arg(long, value_enum, default_value_t = LeechConstruction::Ii)]
        construction: LeechConstruction,
        #[arg(long, default_value_t = 4)]
        max_norm: u64,
    },
    /// The Weyl vector of `II_{dim−1,1}` (dim 10, 18 or 26).
    Weyl { dim: usize },
    /// Test whether a vector is a fundamental root: `r·r = 2`, `r·w = −1`.
    Root {
        dim: usize,
        /// Coordinates, comma separated, timelike first.
        vector: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum LeechConstruction {
    /// `w⊥/ℤw` inside `II₂₅,₁`.
    Ii,
    /// Icosian triples under the plain coordinate form.
    Icosian,
    /// Icosian triples under the golden trace form.
    IcosianGolden,
}

#[derive(Debug, Subcommand)]
pub enum ModularCmd {
    /// `q ∏ (1 − qⁿ)²⁴` through `q^(order+1)`.
    Eta24 {
        #[arg(long, default_value_t = 5)]
        order: usize,
    },
    /// `θ_L / η²⁴` through `q^order` for a rank-24 even unimodular `L`.
    J {
        #[command(flatten)]
        src: LatticeSource,
        #[arg(long, default_value_t = 5)]
        order: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum IdCmd {
    /// Hex digits of π after the point.
    Pihex {
        #[arg(default_value_t = 1)]
        start: u64,
        #[arg(default_value_t = 10)]
        count: u64,
    },
    /// `n ≤ limit` with `1² + … + n²` a perfect square.
    Cannonball {
        #[arg(long, default_value_t = 100_000)]
        limit: u64,
    },
    /// Area `Σ √(j(j+1))` for spins such as `1/2 1 3/2`.
    Area { spins: Vec<String> },
    /// Linking number of the two loops in a file.
    Link {
        #[arg(value_name = "FILE")]
        file: Option<PathBuf>,
        #[arg(long, value_name = "FILE", conflicts_with = "file")]
        input: Option<PathBuf>,
    },
}
