use std::path::PathBuf;

use apery_core::{MultiIndex, NamedSequence, Partition};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "apery",
    version,
    about = "Apéry-like coefficients, series oracles and supercongruence checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the result to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Family member, either by partition and `α` or by name.
#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// Block sizes, e.g. "2,2".
    #[arg(long)]
    pub lambda: Option<Partition>,

    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub alpha: i64,

    /// Named member: apery-A, apery-B, sequence-C, franel, yang-zudilin, delannoy,
    /// askey-gasper, almkvist-zudilin.
    #[arg(long, conflicts_with = "lambda")]
    pub sequence: Option<NamedSequence>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One Taylor coefficient by the closed-form sum.
    Coeff {
        #[command(flatten)]
        family: FamilyArgs,
        /// Signed multi-index, e.g. "1,-2,0,3".
        #[arg(long, allow_hyphen_values = true)]
        n: MultiIndex,
    },
    /// Diagonal coefficients `(n, …, n)` for `0 ≤ n ≤ max`.
    Diagonal {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        max: i64,
    },
    /// Dense Taylor table of `1/Q` by series expansion.
    Expand {
        #[command(flatten)]
        family: FamilyArgs,
        /// Fixed denominator instead of a family member.
        #[arg(long, value_enum, conflicts_with_all = ["lambda", "sequence"])]
        preset: Option<Preset>,
        /// Dimension of the scan preset.
        #[arg(long, default_value_t = 3)]
        d: usize,
        /// Coefficient of `x_1 ⋯ x_d` in the scan preset.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        b: i64,
        /// Degree bound per variable, either one value or one per variable.
        #[arg(long, value_delimiter = ',')]
        bounds: Vec<usize>,
        /// Cell budget for the table.
        #[arg(long)]
        max_cells: Option<u128>,
    },
    /// Terms of a three-term recurrence.
    Sequence {
        /// Cubic parameters a,b,c,d.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            conflicts_with = "quadratic"
        )]
        cubic: Option<Vec<i64>>,
        /// Quadratic parameters a,b,c.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        quadratic: Option<Vec<i64>>,
        #[arg(long)]
        max: usize,
    },
    /// Constant terms: of powers of the Apéry Laurent polynomial (`--max`), or of
    /// a product of powers of the four linear forms (`--n`).
    Ct {
        #[arg(long, conflicts_with = "n")]
        max: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<MultiIndex>,
    },
    /// Both sides of the master theorem at one exponent vector.
    Macmahon {
        /// Matrix rows separated by ';', entries by ','. Defaults to the 4×4 Apéry matrix.
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
        #[arg(long)]
        n: MultiIndex,
    },
    /// Eta quotients and the modular parametrization of the Apéry numbers.
    Eta {
        /// Truncation order N.
        #[arg(long, default_value_t = 20)]
        order: usize,
        /// Eta factors "scale:exponent,…"; without it, the parametrization is checked.
        #[arg(long, allow_hyphen_values = true)]
        factors: Option<String>,
    },
    /// Congruence checks.
    Verify {
        #[command(subcommand)]
        claim: VerifyCommand,
        /// Treat failures of conjecture-support claims as errors.
        #[arg(long, global = true)]
        strict: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// The five-variable denominator whose diagonal is the Apéry numbers.
    Apery5,
    /// `1 - (x_1 + … + x_d) + b x_1 ⋯ x_d`.
    Scan,
}

/// Grid options shared by the verify subcommands.
#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long, value_delimiter = ',', default_value = "5,7")]
    pub primes: Vec<u64>,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub r: Vec<u32>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Number of sampled cells when no explicit point is given.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// `A(p^r n) ≡ A(p^{r-1} n) (mod p^{exponent·r})`.
    Sc {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<MultiIndex>,
        #[arg(long, default_value_t = 3)]
        exponent: u32,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Askey–Gasper coefficients mod `p^{3r}`.
    ConjectureG {
        #[arg(long)]
        n: Option<MultiIndex>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Almkvist–Zudilin coefficients mod `p^{3r}`.
    ConjectureZ {
        #[arg(long)]
        n: Option<MultiIndex>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Dwork congruences for the Apéry numbers, all `m, n ≤ max`.
    Dwork {
        #[arg(long, default_value_t = 10)]
        max: u64,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Lucas congruences for the Apéry numbers, all `n < max` (default `p^3`).
    Lucas {
        #[arg(long)]
        max: Option<u64>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// `binom(ap, bp) / binom(a, b) ≡ ε (mod p^q)`.
    Jacobsthal {
        #[arg(long, allow_hyphen_values = true, requires = "b")]
        a: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "a")]
        b: Option<i64>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// `binom(pa, pb) ≡ binom(a, b) (mod p^3)`.
    Ljunggren {
        #[arg(long, requires = "b")]
        a: Option<i64>,
        #[arg(long, requires = "a")]
        b: Option<i64>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// `Σ ε^k / k^2 ≡ 0 (mod p^r)` over units below `p^r`.
    Powersum {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            default_value = "1,-1"
        )]
        eps: Vec<i64>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Single summands: `A_λ(p^r n; p k) ≡ A_λ(p^{r-1} n; k)`.
    Lemma53 {
        #[arg(long, default_value = "2,2")]
        lambda: Partition,
        #[arg(long, allow_hyphen_values = true, requires = "k")]
        n: Option<MultiIndex>,
        #[arg(long, allow_hyphen_values = true, requires = "n")]
        k: Option<i64>,
        #[arg(long, default_value_t = 3)]
        exponent: u32,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// `binom(p^r m - 1, k)(-1)^k` against the reduced binomial, mod `p^r`.
    Lemma54 {
        #[arg(long, allow_hyphen_values = true, requires = "k")]
        m: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "m")]
        k: Option<i64>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// `binom(p^r (m1 + m2) - k - 1, p^r m1)` against the reduced binomial, mod `p^r`.
    Lemma55 {
        #[arg(long, allow_hyphen_values = true, requires_all = ["m2", "k"])]
        m1: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires_all = ["m1", "k"])]
        m2: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires_all = ["m1", "m2"])]
        k: Option<i64>,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// `A(-n) = A(n-1)` and `B(-n) = (-1)^{n-1} B(n-1)` for `1 ≤ n ≤ max`.
    Reflect {
        #[arg(long, default_value_t = 20)]
        max: u32,
    },
    /// The two sums for `B(n)` agree for `0 ≤ n ≤ max`.
    Identity25 {
        #[arg(long, default_value_t = 30)]
        max: u32,
    },
    /// Values of `b` in `1 - Σ x_i + b Π x_i` passing the congruence on a diagonal grid.
    ScanB {
        #[arg(long)]
        d: usize,
        /// Inclusive range "lo,hi".
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        b_range: Vec<i64>,
        #[arg(long)]
        exclude_zero: bool,
        #[arg(long, default_value_t = 2)]
        exponent: u32,
        /// Diagonal grid `(n, …, n)` for `1 ≤ n ≤ grid_max`.
        #[arg(long, default_value_t = 1)]
        grid_max: i64,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// The full battery over seeded grids.
    Suite {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Restrict to these batteries.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}
