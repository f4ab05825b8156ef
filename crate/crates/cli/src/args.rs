use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclic_derangements::algebra::parse_rational;
use cyclic_derangements::counting::CountMethod;
use cyclic_derangements::verify::Selection;
use cyclic_derangements::OrderVariant;
use num_rational::BigRational;
use num_traits::Signed;

#[derive(Debug, Parser)]
#[command(
    name = "cyder",
    version,
    about = "Cyclic derangements in C_r wr S_n: tables, polynomials, checks"
)]
pub struct Cli {
    /// Largest group order that may be enumerated.
    #[arg(long, global = true, env = "CYDER_BOUND", default_value_t = cyclic_derangements::DEFAULT_ENUMERATION_BOUND)]
    pub bound: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grid of cyclic derangement numbers.
    Table(TableArgs),
    /// One generating polynomial.
    Poly(PolyArgs),
    /// Run verification suites and emit a JSON report.
    Verify(VerifyArgs),
    /// Real-root report for an excedance derangement polynomial.
    Roots(RootsArgs),
    /// Statistics of every element, one JSON object per line.
    Dump(DumpArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value = "1..5", value_parser = parse_moduli)]
    pub r: RangeInclusive<u32>,
    #[arg(long, default_value = "0..6", value_parser = parse_range::<usize>)]
    pub n: RangeInclusive<usize>,
    #[arg(long, default_value = "formula", value_parser = CountMethod::from_str)]
    pub method: CountMethod,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Also print the published table and every cell that disagrees with it.
    #[arg(long, visible_alias = "compare-paper")]
    pub compare_published: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    /// Σ q^maj t^sgn over derangements.
    QtDerangement,
    /// Σ q^(n-des) over the group.
    Eulerian,
    /// Σ q^exc over derangements.
    ExcDerangement,
    /// Σ q^maj t^sgn over the group.
    GroupTotal,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(long, value_enum)]
    pub kind: PolyKind,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub r: u32,
    #[arg(long)]
    pub n: usize,
    /// Enumerate the group instead of using the formula or recurrence.
    #[arg(long)]
    pub brute_force: bool,
    #[arg(long, default_value = "standard", value_parser = OrderVariant::from_str)]
    pub order: OrderVariant,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = Selection::from_str)]
    pub suite: Selection,
    #[arg(long, default_value = "1..3", value_parser = parse_moduli)]
    pub r: RangeInclusive<u32>,
    #[arg(long, default_value = "0..5", value_parser = parse_range::<usize>)]
    pub n: RangeInclusive<usize>,
    #[arg(long, default_value = "standard", value_parser = OrderVariant::from_str)]
    pub order: OrderVariant,
    /// Width below which isolating intervals stop shrinking, as `p/q`.
    #[arg(long, value_parser = parse_tolerance)]
    pub tolerance: Option<BigRational>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the JSON report here as well.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    #[arg(long, required_unless_present = "coeffs", value_parser = clap::value_parser!(u32).range(1..))]
    pub r: Option<u32>,
    #[arg(long, required_unless_present = "coeffs")]
    pub n: Option<usize>,
    /// Integer coefficients in ascending degree, instead of `--r/--n`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with_all = ["r", "n"])]
    pub coeffs: Option<Vec<i64>>,
    #[arg(long, value_parser = parse_tolerance)]
    pub tolerance: Option<BigRational>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DumpArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub r: u32,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "standard", value_parser = OrderVariant::from_str)]
    pub order: OrderVariant,
    /// Only fixed-point-free elements.
    #[arg(long)]
    pub derangements: bool,
}

/// `a..b` (inclusive) or a single value.
pub fn parse_range<T>(s: &str) -> Result<RangeInclusive<T>, String>
where
    T: FromStr + PartialOrd + Copy,
    T::Err: std::fmt::Display,
{
    let parse = |x: &str| x.trim().parse::<T>().map_err(|e| format!("{x:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

/// A range of moduli; `r = 0` has no group.
fn parse_moduli(s: &str) -> Result<RangeInclusive<u32>, String> {
    let range = parse_range::<u32>(s)?;
    if *range.start() == 0 {
        return Err("the modulus r must be at least 1".into());
    }
    Ok(range)
}

fn parse_tolerance(s: &str) -> Result<BigRational, String> {
    let t = parse_rational(s).map_err(|e| e.to_string())?;
    if !t.is_positive() {
        return Err("tolerance must be positive".into());
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range::<u32>("1..5"), Ok(1..=5));
        assert_eq!(parse_range::<u32>("1..=5"), Ok(1..=5));
        assert_eq!(parse_range::<usize>("3"), Ok(3..=3));
        assert!(parse_range::<u32>("5..1").is_err());
        assert!(parse_range::<u32>("a..2").is_err());
        assert!(parse_moduli("0..2").is_err());
        assert_eq!(parse_moduli("2"), Ok(2..=2));
    }

    #[test]
    fn tolerances() {
        assert!(parse_tolerance("1/1024").is_ok());
        assert!(parse_tolerance("0").is_err());
        assert!(parse_tolerance("-1/2").is_err());
    }

    #[test]
    fn cli_is_well_formed() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
