//! `ginvar` command line: argument handling, input parsing and output.

mod commands;
mod input;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use ginvar::gin::{GinConfig, DEFAULT_SEED};
use ginvar::{Error, MonomialOrder};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INVALID_MAP: u8 = 2;
pub const EXIT_GENERICITY: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "ginvar", version, about = "Generic initial ideals as invariants of maps between hyperquadrics")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Seed for the random coordinate changes.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Bound on the entries of random coordinate changes.
    #[arg(long, global = true, default_value_t = 997)]
    pub coeff_bound: u64,
    /// Retries with a larger bound before giving up.
    #[arg(long, global = true, default_value_t = 3)]
    pub retries: u32,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

impl GlobalOpts {
    pub fn config(&self) -> GinConfig {
        GinConfig { seed: self.seed, coeff_bound: self.coeff_bound, max_retries: self.retries, ..GinConfig::default() }
    }
}

#[derive(Args, Debug, Clone)]
pub struct MapArgs {
    /// Catalog map name (see `catalog list`).
    #[arg(long, conflicts_with_all = ["source", "target", "num", "den"])]
    pub map: Option<String>,
    /// Catalog parameter as `key=value`; repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    pub params: Vec<String>,
    /// Source signature `a,b`.
    #[arg(long, requires_all = ["target", "num"])]
    pub source: Option<String>,
    /// Target signature `A,B`.
    #[arg(long)]
    pub target: Option<String>,
    /// Numerators in z1..zn, separated by `;`.
    #[arg(long)]
    pub num: Option<String>,
    /// Denominator (default 1).
    #[arg(long)]
    pub den: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// gin of a homogeneous ideal.
    GinIdeal {
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        #[arg(long, default_value = "grevlex", value_parser = parse_order)]
        order: MonomialOrder,
        /// Generators separated by `;`.
        polys: String,
    },
    /// Generic initial monomial subspace of a span of polynomials.
    SubspaceGin {
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        #[arg(long, default_value = "green-grlex", value_parser = parse_order)]
        order: MonomialOrder,
        /// Accept inputs marked as truncated series with `+ O(k)`.
        #[arg(long)]
        assume_truncation_faithful: bool,
        /// Polynomials separated by `;`.
        polys: String,
    },
    /// All invariants of a map.
    MapInvariants {
        #[command(flatten)]
        map: MapArgs,
        /// Classical orders for the component gin; the first is also used for the quotient.
        #[arg(long, value_delimiter = ',', default_value = "grevlex", value_parser = parse_order)]
        orders: Vec<MonomialOrder>,
    },
    /// The quotient q, a basis of H(q) and its gin.
    Quotient {
        #[command(flatten)]
        map: MapArgs,
        #[arg(long, default_value = "grevlex", value_parser = parse_order)]
        order: MonomialOrder,
    },
    /// Compare the invariants of two catalog maps.
    Compare {
        #[arg(long)]
        map_a: String,
        #[arg(long)]
        map_b: String,
        #[arg(long = "param-a", value_name = "KEY=VALUE")]
        params_a: Vec<String>,
        #[arg(long = "param-b", value_name = "KEY=VALUE")]
        params_b: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "grevlex", value_parser = parse_order)]
        orders: Vec<MonomialOrder>,
    },
    /// List or show catalog maps.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// gin of the affine span of a holomorphic decomposition of a real polynomial.
    RealformGin {
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        /// Bound on the degree in z and in w separately.
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value = "green-grlex", value_parser = parse_order)]
        order: MonomialOrder,
        #[arg(long)]
        assume_truncation_faithful: bool,
        /// Expression in the variables and their conjugates `w1..wn`.
        expr: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    Show {
        name: String,
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
}

fn parse_order(s: &str) -> Result<MonomialOrder, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::NotDivisible => EXIT_INVALID_MAP,
        Error::GenericityFailure { .. } => EXIT_GENERICITY,
        _ => EXIT_USAGE,
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    match commands::execute(&cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
