//! Command-line grammar. Every argument struct serializes so that reports can
//! echo the configuration they were produced from.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub const BOUND_ENV: &str = "ONEADIC_ENUM_BOUND";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Debug, Clone, Parser, Serialize)]
#[command(name = "oneadic", version, about = "Exact computations in characteristic one and mod p")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for sweeps and the acceptance suite. Not echoed, since
    /// output must not depend on it.
    #[serde(skip)]
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    pub jobs: u64,
    /// Largest enumeration any single computation may perform.
    #[arg(long, global = true, env = BOUND_ENV, default_value_t = 1_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub bound: u64,
    /// Append wall-clock timing to the report (makes output non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Digits of h - (q+1)γ' and every compatible gene.
    Gene(GeneArgs),
    /// Generic Serre-weight labels: the subsets of J_II.
    Weights(WeightsArgs),
    /// Points of a Kisin variety over F_q.
    Kisin(KisinArgs),
    /// Presentation, Hilbert series and multiplicity of a deformation ring.
    Defring(DefringArgs),
    /// Serre weights X_1 / (p - π) X_0.
    Serre(SerreArgs),
    /// Tame type exponents of an extended Weyl element (s, μ).
    Tame(TameArgs),
    /// Card GL_n(F_q), its factored form and the q -> 1 limit.
    CardGl(CardGlArgs),
    /// Linear algebra over F_1.
    #[command(subcommand)]
    F1(F1Command),
    /// Galois groups in characteristic one and their classical comparison.
    #[command(subcommand)]
    Galois(GaloisCommand),
    /// Parallel parameter sweeps with canonically ordered output.
    #[command(subcommand)]
    Sweep(SweepCommand),
    /// Run the acceptance suite.
    Acceptance(AcceptanceArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GeneArgs {
    #[arg(short = 'p')]
    pub p: u64,
    #[arg(short = 'f')]
    pub f: u32,
    #[arg(long = "h", allow_negative_numbers = true)]
    pub h: i128,
    /// γ' modulo p^f - 1.
    #[arg(long = "gamma", allow_negative_numbers = true)]
    pub gamma: i128,
    /// Cross-check against the exhaustive 4^(2f) search.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct WeightsArgs {
    /// Positions of II: a list such as `0,2`, or a bitmask such as `0b101`.
    #[arg(long, default_value = "")]
    pub jii: String,
    #[arg(short = 'f')]
    pub f: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct KisinArgs {
    /// Coefficient pairs λμ per embedding, e.g. `11,10`.
    #[arg(long)]
    pub coeffs: String,
    #[arg(short = 'q')]
    pub q: u64,
    /// List every point.
    #[arg(long)]
    pub points: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DefringArgs {
    /// Positions of II, as for `weights`.
    #[arg(long, default_value = "")]
    pub jii: String,
    #[arg(short = 'f')]
    pub f: usize,
    /// Last degree of the Hilbert series printed.
    #[arg(long, default_value_t = 8)]
    pub degree: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SerreArgs {
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(short = 'f')]
    pub f: usize,
    #[arg(short = 'p')]
    pub p: u64,
    /// Permit n > 3.
    #[arg(long)]
    pub allow_large_n: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct TameArgs {
    /// One-line permutations s_j separated by `;`, e.g. `2,1;1,2`.
    #[arg(long)]
    pub s: String,
    /// Integer vectors μ_j separated by `;`, e.g. `1,0;0,0`.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
    #[arg(short = 'p')]
    pub p: u64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CardGlArgs {
    #[arg(short = 'n')]
    pub n: u32,
    #[arg(short = 'q')]
    pub q: u64,
    /// Also count invertible matrices by row reduction.
    #[arg(long)]
    pub brute: bool,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum F1Command {
    /// GL_d(F_1) = S_d.
    Aut {
        #[arg(short = 'd')]
        d: usize,
    },
    /// GL_d(F_{1^n}) = (S_d)^n.
    Gl {
        #[arg(short = 'd')]
        d: usize,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Both scalar-restriction adjunctions for |V| = v, |W| = w.
    Adjoint {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        w: usize,
        #[arg(short = 'n')]
        n: usize,
        /// Largest test object for naturality.
        #[arg(long, default_value_t = 3)]
        naturality: usize,
    },
    /// Sym^k ⊗ ... ⊗ Sym^k with the coordinatewise swap action.
    Sym {
        /// Degrees k_0,...,k_{f-1}.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
    },
    /// Frobenius-commuting automorphisms of a restricted F_{1^n}-space.
    Frob {
        #[arg(long, value_enum, default_value_t = Restriction::Additive)]
        kind: Restriction,
        #[arg(short = 'd')]
        d: usize,
        #[arg(short = 'n')]
        n: usize,
    },
    /// GL_d over a monoid such as N, Z or Z/k, truncated to |exponent| <= B.
    Glmod {
        /// Factors separated by commas: N, Z, Z/k.
        #[arg(long, default_value = "Z")]
        monoid: String,
        #[arg(short = 'd')]
        d: usize,
        #[arg(short = 'B', long = "exp-bound", default_value_t = 1)]
        exp_bound: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Restriction {
    Additive,
    Multiplicative,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GaloisCommand {
    /// Gal(K_n / Q_1) through the Frobenius-commuting automorphisms.
    Kn {
        #[arg(short = 'n')]
        n: u64,
        #[arg(long, default_value_t = 3)]
        window: i64,
    },
    /// Automorphisms of K_n fixing the distinguished submonoid.
    Fix {
        #[arg(short = 'n')]
        n: u64,
        #[arg(long, default_value_t = 3)]
        window: i64,
    },
    /// Gal(Q_{1^n} / Q_1), or the unramified limit.
    Unramified {
        #[arg(short = 'n', required_unless_present = "limit", conflicts_with = "limit")]
        n: Option<u64>,
        #[arg(long)]
        limit: bool,
        #[arg(long, default_value_t = 3)]
        window: i64,
    },
    /// Classical Gal(Q_p(ζ, (-p)^{1/(p^n-1)}) / Q_p) as a permutation group.
    Tame {
        #[arg(short = 'p')]
        p: u64,
        #[arg(short = 'n')]
        n: u64,
    },
    /// Rows p^n - 1 = (p - 1)·[n]_p and the p -> 1 limit.
    TameCompare {
        #[arg(short = 'n')]
        n: u32,
        #[arg(short = 'p', value_delimiter = ',', required = true)]
        p: Vec<u64>,
    },
    /// Q_1[ϖ^{1/e}] with its norm and index over Q_1.
    Tower {
        #[arg(short = 'e')]
        e: u64,
        /// Norm base r in (0, 1), as a fraction.
        #[arg(long, default_value = "1/2")]
        r: String,
    },
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepCommand {
    /// Gene solution counts over every residue h - (q+1)γ'.
    Gene {
        #[arg(short = 'p', value_delimiter = ',', required = true)]
        p: Vec<u64>,
        #[arg(short = 'f', value_delimiter = ',', required = true)]
        f: Vec<u32>,
        /// Also compare each residue with the exhaustive search.
        #[arg(long)]
        oracle: bool,
    },
    /// The numerical identity over every J_II inside f <= f-max.
    Bm {
        #[arg(long, default_value_t = 6)]
        f_max: usize,
        #[arg(long, default_value_t = 5)]
        jii_max: usize,
    },
    /// Serre-weight counts over a (p, f) grid.
    Serre {
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
        #[arg(short = 'p', value_delimiter = ',', required = true)]
        p: Vec<u64>,
        #[arg(short = 'f', value_delimiter = ',', required = true)]
        f: Vec<usize>,
    },
    /// Kisin-variety point counts for every coefficient system.
    Kisin {
        #[arg(short = 'q', value_delimiter = ',', required = true)]
        q: Vec<u64>,
        #[arg(short = 'f', value_delimiter = ',', required = true)]
        f: Vec<usize>,
    },
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct AcceptanceArgs {
    /// Run only criteria whose name or tags contain this string.
    #[arg(long)]
    pub filter: Option<String>,
    /// Deliberately corrupt one computation to exercise failure reporting.
    #[arg(long, value_enum)]
    pub inject_fault: Option<Fault>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Adds one to the Hilbert-series multiplicity.
    WrongMultiplicity,
    /// Drops the last gene from every solver result.
    DropGene,
    /// Makes sweep output depend on the worker count.
    Nondeterministic,
}
