use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "genotop", version, about = "Braids, tangles and signed permutations for genome rearrangement")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the randomised suites.
    #[arg(long, global = true, default_value_t = genotop::reproduce::DEFAULT_SEED)]
    pub seed: u64,
    #[command(flatten)]
    pub caps: Caps,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

/// Resource caps; each must sit within the library's own limit.
#[derive(Args, Debug, Clone)]
pub struct Caps {
    #[arg(long, global = true, default_value_t = genotop::invariants::MAX_TL_STRANDS)]
    pub max_strands: usize,
    #[arg(long, global = true, default_value_t = genotop::invariants::MAX_STATE_SUM_CROSSINGS)]
    pub max_crossings: usize,
    #[arg(long, global = true, default_value_t = genotop::genome::MAX_BFS_REGIONS)]
    pub max_bfs_n: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Word algebra.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Close a word into a diagram.
    Closure(ClosureArgs),
    /// Polynomial invariants and table lookup.
    #[command(subcommand)]
    Invariant(InvariantCmd),
    /// Rational tangles.
    #[command(subcommand)]
    Tangle(TangleCmd),
    /// Circular genomes and Coxeter lengths.
    #[command(subcommand)]
    Genome(GenomeCmd),
    /// Processive recombination.
    #[command(subcommand)]
    Recombine(RecombineCmd),
    /// The bundled knot table.
    #[command(subcommand)]
    Table(TableCmd),
    /// Run every acceptance check.
    Reproduce(ReproduceArgs),
}

#[derive(Args, Debug, Clone)]
pub struct WordArgs {
    /// Word such as "s1 s2^-1 e3".
    pub word: String,
    #[arg(long)]
    pub n: usize,
    /// Allow the affine letter x1.
    #[arg(long)]
    pub affine: bool,
}

#[derive(Subcommand, Debug)]
pub enum BraidCmd {
    /// Cancel adjacent inverse pairs.
    Simplify(WordArgs),
    /// Concatenate two words (the first on top).
    Compose {
        #[command(flatten)]
        first: WordArgs,
        second: String,
    },
    Invert(WordArgs),
    Mirror(WordArgs),
    /// Permutation of strand endpoints.
    Permutation(WordArgs),
    /// Signed permutation in the type-B quotient (affine words).
    Typeb(WordArgs),
    /// Swap or smooth one crossing (1-based position).
    Edit {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        pos: usize,
        #[arg(long, value_enum)]
        mode: EditMode,
    },
    /// Draw the word.
    Draw(WordArgs),
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum EditMode {
    Swap,
    Smooth,
}

#[derive(Args, Debug)]
pub struct ClosureArgs {
    #[command(flatten)]
    pub word: WordArgs,
    #[arg(long, default_value = "plat")]
    pub kind: String,
    /// Mark a closure arc, e.g. `bottom1:ltr:a` or `top2:rtl:b`.
    #[arg(long = "mark")]
    pub marks: Vec<String>,
}

/// A closed diagram given as a plat word, a trace word or a PD file.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct DiagramSource {
    #[arg(long)]
    pub plat: Option<String>,
    #[arg(long)]
    pub trace: Option<String>,
    /// PD-code JSON file.
    #[arg(long)]
    pub pd: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct InvariantArgs {
    #[command(flatten)]
    pub source: DiagramSource,
    /// Strand count for word sources.
    #[arg(long)]
    pub n: Option<usize>,
    /// Knot table file to use instead of the bundled one.
    #[arg(long)]
    pub table: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum InvariantCmd {
    /// Kauffman bracket through the Temperley-Lieb route.
    Bracket(InvariantArgs),
    /// Kauffman bracket by state sum.
    Statesum(InvariantArgs),
    /// Jones keys, one per orientation class.
    Jones(InvariantArgs),
    Identify(InvariantArgs),
    /// Temperley-Lieb image of a product of words.
    Tl {
        words: Vec<String>,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum TangleCmd {
    /// Fraction of a twist vector such as 2,3,2.
    Fraction { twists: String },
    /// Twist vector for a fraction.
    FromFraction {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
    },
    /// Numerator closure of a sum; `xK` repeats the previous summand to K copies.
    /// Put summands with a leading minus after `--`.
    #[command(allow_negative_numbers = true)]
    Closure {
        #[arg(required = true)]
        summands: Vec<String>,
        #[arg(long)]
        identify: bool,
    },
    /// Normal form of the 2-bridge link b(p, q).
    Classify {
        p: i64,
        #[arg(allow_hyphen_values = true)]
        q: i64,
    },
    /// Products N(O + iR) for i = 0..rounds-1.
    Products {
        #[arg(long, allow_hyphen_values = true)]
        o: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, default_value_t = 4)]
        rounds: usize,
    },
    /// Substrate tangles reproducing an observed product list.
    Solve {
        /// Comma-separated product names.
        #[arg(long)]
        products: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        r: i64,
        /// `max_len,max_entry`.
        #[arg(long, default_value = "4,6")]
        bound: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenomeCmd {
    /// Inversion distance; genomes are text or a path to a file holding one.
    Distance {
        #[arg(long, default_value = "all")]
        gens: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Dihedral canonical form.
    Canonical {
        #[arg(allow_hyphen_values = true)]
        genome: String,
        #[arg(long)]
        unsigned: bool,
    },
    /// Invert positions i..=j (1-based, wrapping).
    Invert {
        #[arg(allow_hyphen_values = true)]
        genome: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Coxeter length of a signed or affine permutation.
    Length {
        #[arg(long = "typeB", allow_hyphen_values = true, conflicts_with = "affine")]
        type_b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        affine: Option<String>,
    },
    /// Adjacent-swap distance between unsigned circular genomes.
    Swap {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        /// Use the affine-length fast path.
        #[arg(long)]
        fast: bool,
    },
    /// Breakpoint-cycle lower bound for linear reversal distance.
    Breakpoint {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Arrangements reachable with the terminus held in place.
    Orbit {
        #[arg(long, default_value = "terminus")]
        gens: String,
        #[arg(allow_hyphen_values = true)]
        genome: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum RecombineCmd {
    /// A named system from the case library.
    Run {
        #[arg(long)]
        system: String,
        #[arg(long, default_value_t = 4)]
        rounds: usize,
    },
    /// Odd and even crossing families.
    Parity {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 6)]
        imax: usize,
    },
    /// An ad hoc system.
    Custom {
        #[arg(long)]
        substrate: String,
        #[arg(long)]
        prefix: String,
        #[arg(long, default_value_t = 4)]
        rounds: usize,
        /// Track two marked segments.
        #[arg(long)]
        marks: bool,
        /// Strand count (smallest even count that fits by default).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Compare e_i with s_i s_(i+1) and its inverse under plat closure.
    Bmw {
        /// Word to test; omit for seeded random trials.
        word: Option<String>,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        i: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// List the case library.
    Library,
    /// Search for a Cre substrate.
    CreSearch,
}

#[derive(Subcommand, Debug)]
pub enum TableCmd {
    /// Regenerate the table by state sum.
    Build {
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check keys, mirror links and named products.
    Verify {
        #[arg(long)]
        table: Option<PathBuf>,
    },
    List,
}

#[derive(Args, Debug)]
pub struct ReproduceArgs {
    /// Knot table file to use instead of the bundled one.
    #[arg(long)]
    pub table: Option<PathBuf>,
    /// Run only these checks.
    #[arg(long = "check")]
    pub checks: Vec<u32>,
    /// Leave runtimes out so repeated runs print identical output.
    #[arg(long)]
    pub no_timings: bool,
}
