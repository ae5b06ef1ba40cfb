//! Command-line grammar.

use clap::{Args, Parser, Subcommand, ValueEnum};
use ore_core::funcfield::DEFAULT_PLACE_BOUND;

#[derive(Parser, Debug)]
#[command(
    name = "ore",
    version,
    about = "Workbench for additive polynomials, skew polynomials and Artin-Schreier theory"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for randomized demos; the ORE_SEED environment variable wins.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub noun: Noun,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArg {
    /// Field descriptor: fp:P, fq:P^N[:mod=POLY], ratfn:P, laurent:P[:prec=N][:ram=M].
    #[arg(long)]
    pub field: String,
}

#[derive(Subcommand, Debug)]
pub enum Noun {
    /// Skew polynomials in K[f], f the Frobenius.
    #[command(subcommand)]
    Skew(SkewVerb),
    /// Additive polynomials and p-polynomials.
    #[command(subcommand)]
    Addpoly(AddpolyVerb),
    /// Artin-Schreier tools over finite fields.
    #[command(subcommand, name = "as")]
    As(AsVerb),
    /// The Frobenius-closed basis of F_p(t).
    #[command(subcommand)]
    Ff(FfVerb),
    /// Solvers over truncated Laurent series.
    #[command(subcommand)]
    Val(ValVerb),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
pub enum SkewVerb {
    /// Division with remainder: left gives a = q*b + r, right gives a = b*q + r.
    Divmod {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_enum, default_value_t = Side::Left)]
        side: Side,
        dividend: String,
        divisor: String,
    },
    Mul {
        #[command(flatten)]
        field: FieldArg,
        a: String,
        b: String,
    },
    /// Greatest common right divisor.
    Gcrd {
        #[command(flatten)]
        field: FieldArg,
        a: String,
        b: String,
    },
    /// Least common left multiple.
    Lclm {
        #[command(flatten)]
        field: FieldArg,
        a: String,
        b: String,
    },
    /// Searches f*K[f] and c*f*K[f] for a common element.
    Ore {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 4)]
        bound: usize,
        c: String,
    },
    /// Left division of a random pair.
    Demo {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        /// Degree bound for rational function coefficients.
        #[arg(long, default_value_t = 3)]
        coeff_degree: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum AddpolyVerb {
    /// Decides whether a polynomial is additive.
    Classify {
        #[command(flatten)]
        field: FieldArg,
        poly: String,
    },
    /// Tests f(x+y) = f(x) + f(y) on every pair from a finite field.
    Check {
        #[command(flatten)]
        field: FieldArg,
        /// Finite field to test on; defaults to --field.
        #[arg(long)]
        over: Option<String>,
        poly: String,
    },
    /// Roots of a p-polynomial.
    Solve {
        #[command(flatten)]
        field: FieldArg,
        /// Finite extension to solve in; defaults to --field.
        #[arg(long)]
        over: Option<String>,
        poly: String,
    },
    /// Matrix of an additive polynomial over F_p.
    Linearize {
        #[command(flatten)]
        field: FieldArg,
        poly: String,
    },
    /// The additive polynomial vanishing exactly on a finite subgroup.
    Subgroup {
        #[command(flatten)]
        field: FieldArg,
        #[arg(required = true)]
        elements: Vec<String>,
    },
    /// Least monic additive polynomial over a subfield killing an element.
    Annihilator {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 1)]
        subfield_degree: usize,
        element: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum AsVerb {
    /// Irreducibility of X^p - X - a.
    Irred {
        #[command(flatten)]
        field: FieldArg,
        a: String,
    },
    /// Roots of X^p - X - a in the field.
    Solve {
        #[command(flatten)]
        field: FieldArg,
        a: String,
    },
    /// A root of a p-polynomial from an irreducible factor of degree prime to p.
    Root {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        factor: String,
        poly: String,
    },
    /// Trace to the subfield of the given degree.
    Trace {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 1)]
        base_degree: usize,
        a: String,
    },
    /// Solves sigma(x) - x = c for c of trace zero.
    Hilbert90 {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 1)]
        base_degree: usize,
        c: String,
    },
    /// Least representative of a + {x^p - x}.
    Reduce {
        #[command(flatten)]
        field: FieldArg,
        a: String,
    },
    /// A p-polynomial with no root in the field.
    Counterexample {
        #[command(flatten)]
        field: FieldArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum FfVerb {
    /// Coordinates in the Frobenius-closed basis.
    Decompose {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = DEFAULT_PLACE_BOUND)]
        place_bound: usize,
        f: String,
    },
    /// Coordinates as a module over F_p[f].
    Kphi {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = DEFAULT_PLACE_BOUND)]
        place_bound: usize,
        f: String,
    },
    /// Places up to a degree.
    Places {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 2)]
        degree: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Brute,
    Greedy,
}

#[derive(Subcommand, Debug)]
pub enum ValVerb {
    /// Solves x^p - x = c for v(c) > 0.
    Hensel {
        #[command(flatten)]
        field: FieldArg,
        /// Working precision, e.g. 40 or 7/2; defaults to the field precision.
        #[arg(long)]
        prec: Option<String>,
        c: String,
    },
    /// Approximate root of X^p - X - a with ramification up to p^e.
    Asroot {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[arg(long)]
        prec: Option<String>,
        a: String,
    },
    /// Writes x = X0^q - X0 + sum t^i Xi^q + Y with v(Y) >= 0, q = p^k.
    Image {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 1)]
        k: u32,
        x: String,
    },
    /// Largest value of v f(X) with X supported in a window of exponents.
    Extremal {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
        lo: i64,
        #[arg(long, default_value_t = 3, allow_hyphen_values = true)]
        hi: i64,
        #[arg(long, value_enum, default_value_t = Mode::Brute)]
        mode: Mode,
        #[arg(long)]
        budget: Option<u128>,
        poly: String,
    },
}

impl Noun {
    pub fn names(&self) -> (&'static str, &'static str) {
        match self {
            Noun::Skew(v) => (
                "skew",
                match v {
                    SkewVerb::Divmod { .. } => "divmod",
                    SkewVerb::Mul { .. } => "mul",
                    SkewVerb::Gcrd { .. } => "gcrd",
                    SkewVerb::Lclm { .. } => "lclm",
                    SkewVerb::Ore { .. } => "ore",
                    SkewVerb::Demo { .. } => "demo",
                },
            ),
            Noun::Addpoly(v) => (
                "addpoly",
                match v {
                    AddpolyVerb::Classify { .. } => "classify",
                    AddpolyVerb::Check { .. } => "check",
                    AddpolyVerb::Solve { .. } => "solve",
                    AddpolyVerb::Linearize { .. } => "linearize",
                    AddpolyVerb::Subgroup { .. } => "subgroup",
                    AddpolyVerb::Annihilator { .. } => "annihilator",
                },
            ),
            Noun::As(v) => (
                "as",
                match v {
                    AsVerb::Irred { .. } => "irred",
                    AsVerb::Solve { .. } => "solve",
                    AsVerb::Root { .. } => "root",
                    AsVerb::Trace { .. } => "trace",
                    AsVerb::Hilbert90 { .. } => "hilbert90",
                    AsVerb::Reduce { .. } => "reduce",
                    AsVerb::Counterexample { .. } => "counterexample",
                },
            ),
            Noun::Ff(v) => (
                "ff",
                match v {
                    FfVerb::Decompose { .. } => "decompose",
                    FfVerb::Kphi { .. } => "kphi",
                    FfVerb::Places { .. } => "places",
                },
            ),
            Noun::Val(v) => (
                "val",
                match v {
                    ValVerb::Hensel { .. } => "hensel",
                    ValVerb::Asroot { .. } => "asroot",
                    ValVerb::Image { .. } => "image",
                    ValVerb::Extremal { .. } => "extremal",
                },
            ),
        }
    }

    pub fn field(&self) -> &str {
        let f = match self {
            Noun::Skew(v) => match v {
                SkewVerb::Divmod { field, .. }
                | SkewVerb::Mul { field, .. }
                | SkewVerb::Gcrd { field, .. }
                | SkewVerb::Lclm { field, .. }
                | SkewVerb::Ore { field, .. }
                | SkewVerb::Demo { field, .. } => field,
            },
            Noun::Addpoly(v) => match v {
                AddpolyVerb::Classify { field, .. }
                | AddpolyVerb::Check { field, .. }
                | AddpolyVerb::Solve { field, .. }
                | AddpolyVerb::Linearize { field, .. }
                | AddpolyVerb::Subgroup { field, .. }
                | AddpolyVerb::Annihilator { field, .. } => field,
            },
            Noun::As(v) => match v {
                AsVerb::Irred { field, .. }
                | AsVerb::Solve { field, .. }
                | AsVerb::Root { field, .. }
                | AsVerb::Trace { field, .. }
                | AsVerb::Hilbert90 { field, .. }
                | AsVerb::Reduce { field, .. }
                | AsVerb::Counterexample { field } => field,
            },
            Noun::Ff(v) => match v {
                FfVerb::Decompose { field, .. } | FfVerb::Kphi { field, .. } | FfVerb::Places { field, .. } => field,
            },
            Noun::Val(v) => match v {
                ValVerb::Hensel { field, .. }
                | ValVerb::Asroot { field, .. }
                | ValVerb::Image { field, .. }
                | ValVerb::Extremal { field, .. } => field,
            },
        };
        &f.field
    }
}
