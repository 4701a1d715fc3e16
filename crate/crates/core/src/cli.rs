//! The `dyck` command-line interface.
//!
//! Exit status: 0 on success, 1 when a verification or check fails, 2 on
//! usage errors, 3 when an enumeration cap or budget is exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::catalan::{catalan_closed, catalan_recurrence, count_bad_paths};
use crate::chromatic::{chromatic_polynomial, hasse_graph};
use crate::config::{Limits, DEFAULT_POINT_SEED};
use crate::incidence::{
    chain_polynomial, chains_of_length, eta_matrix, interval_count, maximal_chain_count, mobius_matrix,
    total_chains, zeta_matrix,
};
use crate::matrix::ExactMatrix;
use crate::oeis::{self, VerifyReport};
use crate::parking::{
    area_from_parking, content_group_representatives, content_order_check, count_parking_functions,
    enumerate_labelled_paths, enumerate_parking_functions, parking_to_labelled, vectors_of, ParkingFunction,
    ENUMERATION_GATE,
};
use crate::partition::{path_to_partition, Partition};
use crate::path::{enumerate_paths, DyckPath};
use crate::poly::{BiPoly, UniPoly};
use crate::poset::{rank_sizes, AntichainCensus, CensusMode, PointPoset, Poset};
use crate::qt::{
    admissible_points, cn_area, cn_inv, cn_maj, gh_evaluate, q_binomial, q_int, qt_catalan, qt_specialize,
    symmetry_check, Specialization, Specialized,
};
use crate::tableau::{hook_lengths, maxchain_tableau_bijection_check, staircase_maxchain, syt_count};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Largest order the chromatic command accepts without `--allow-slow`.
pub const CHROMATIC_DEFAULT_MAX: usize = 4;

/// Points per order at which the partition sum is compared.
pub const GH_POINTS: usize = 25;

#[derive(Debug, Parser)]
#[command(name = "dyck", version, about = "Exact enumeration on the poset of Dyck paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct Orders {
    /// Order of the Dyck paths.
    #[arg(long)]
    n: Option<usize>,

    /// Compute the quantity for every order 0..=MAX_N instead of a single n.
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Catalan numbers, bad-path counts and path listings.
    Catalan(CatalanArgs),
    /// The poset D_n: relations, incidence matrices, ideals, covers.
    Poset(PosetArgs),
    /// Chain counts, chain polynomials, maximal chains and tableaux.
    Chains(ChainsArgs),
    /// Antichain censuses.
    Antichains(AntichainsArgs),
    /// q-analogs and the q,t-Catalan polynomial.
    Qt(QtArgs),
    /// Chromatic polynomial of the Hasse diagram.
    Chromatic(ChromaticArgs),
    /// Parking functions and labelled Dyck paths.
    Parking(ParkingArgs),
    /// Compare computed sequences with the bundled snapshots.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct CatalanWhat {
    /// Closed form (default).
    #[arg(long)]
    closed: bool,
    /// First-return recurrence.
    #[arg(long)]
    recurrence: bool,
    /// Length of the path enumeration.
    #[arg(long)]
    enumerate: bool,
    /// Monotone paths that dip below the diagonal.
    #[arg(long)]
    bad_paths: bool,
    /// Every path with its statistics.
    #[arg(long)]
    paths: bool,
}

#[derive(Debug, Args)]
struct CatalanArgs {
    #[command(flatten)]
    orders: Orders,
    #[command(flatten)]
    what: CatalanWhat,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct PosetWhat {
    /// Element count, comparable pairs, cover count and height (default).
    #[arg(long)]
    summary: bool,
    /// Elements with rank and the partition above each path.
    #[arg(long)]
    elements: bool,
    /// Cover relations as (lower, upper) index pairs.
    #[arg(long)]
    covers: bool,
    /// Zeta matrix: 1 where x <= y
    #[arg(long)]
    zeta: bool,
    /// Strict order matrix: 1 where x < y
    #[arg(long)]
    eta: bool,
    /// Möbius matrix by inverting zeta.
    #[arg(long)]
    mobius: bool,
    /// Möbius matrix from ideal differences in the point poset.
    #[arg(long)]
    mobius_direct: bool,
    /// Number of pairs x <= y.
    #[arg(long)]
    intervals: bool,
    /// Every order ideal, as element indices.
    #[arg(long)]
    ideals: bool,
    /// Rank sizes by decreasing rank.
    #[arg(long)]
    rank_sizes: bool,
    /// Minimum number of chains covering the poset.
    #[arg(long)]
    chain_cover: bool,
    /// Minimum number of antichains covering the poset.
    #[arg(long)]
    antichain_cover: bool,
    /// Check that ideals of the point poset are isomorphic to D_n.
    #[arg(long)]
    jp_check: bool,
    /// Whether the first path lies weakly below the second.
    #[arg(long, num_args = 2, value_names = ["LOWER", "UPPER"])]
    below: Option<Vec<String>>,
}

#[derive(Debug, Args)]
struct PosetArgs {
    #[command(flatten)]
    orders: Orders,
    #[command(flatten)]
    what: PosetWhat,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct ChainsWhat {
    /// All chains, the empty one included (default).
    #[arg(long)]
    total: bool,
    /// Chain polynomial.
    #[arg(long)]
    polynomial: bool,
    /// Matrix counting chains with K steps.
    #[arg(long, value_name = "K")]
    length: Option<u32>,
    /// Number of maximal chains.
    #[arg(long)]
    maximal: bool,
    /// Hook-length count of staircase tableaux.
    #[arg(long)]
    hook_formula: bool,
    /// Check maximal chains against staircase tableaux.
    #[arg(long)]
    tableau_check: bool,
    /// Standard Young tableaux of a comma-separated shape.
    #[arg(long, value_name = "PARTITION")]
    syt: Option<String>,
    /// Arm, leg, coarm, coleg and hook of every cell of a shape.
    #[arg(long, value_name = "PARTITION")]
    cells: Option<String>,
}

#[derive(Debug, Args)]
struct ChainsArgs {
    #[command(flatten)]
    orders: Orders,
    #[command(flatten)]
    what: ChainsWhat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    All,
    Maximal,
    Maximum,
}

#[derive(Debug, Args)]
struct AntichainsArgs {
    #[command(flatten)]
    orders: Orders,
    /// Which antichains to count
    #[arg(long, value_enum, default_value_t = ModeArg::All)]
    mode: ModeArg,
    /// Check the antichain/order-ideal bijection instead.
    #[arg(long)]
    bijection_check: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SpecArg {
    Area,
    Maj,
    Count,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct QtWhat {
    /// Sum of q^area t^bounce (default).
    #[arg(long)]
    catalan: bool,
    /// Sum of q^area
    #[arg(long)]
    area: bool,
    /// Sum of q^inv
    #[arg(long)]
    inv: bool,
    /// Sum of q^maj
    #[arg(long)]
    maj: bool,
    #[arg(long, value_enum, value_name = "MODE")]
    specialize: Option<SpecArg>,
    /// Partition sum at the rational point (Q, T), e.g. `--gh 2 1/3`.
    #[arg(long, num_args = 2, value_names = ["Q", "T"], allow_hyphen_values = true)]
    gh: Option<Vec<String>>,
    /// Compare the partition sum with the polynomial at seeded points.
    #[arg(long)]
    gh_check: bool,
    /// Whether the polynomial is symmetric in q and t.
    #[arg(long)]
    symmetry: bool,
    /// q-binomial [n choose K].
    #[arg(long, value_name = "K")]
    q_binomial: Option<usize>,
    /// q-integer [n].
    #[arg(long)]
    q_int: bool,
}

#[derive(Debug, Args)]
struct QtArgs {
    #[command(flatten)]
    orders: Orders,
    #[command(flatten)]
    what: QtWhat,
}

#[derive(Debug, Args)]
struct ChromaticArgs {
    #[command(flatten)]
    orders: Orders,
    /// List the Hasse diagram edges instead.
    #[arg(long)]
    graph: bool,
    /// Evaluate the polynomial at K colours.
    #[arg(long, value_name = "K")]
    eval: Option<u64>,
    /// Permit orders above the default chromatic cap (slow).
    #[arg(long)]
    allow_slow: bool,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct ParkingWhat {
    /// Closed-form count, checked against enumeration when small (default).
    #[arg(long)]
    count: bool,
    /// List every parking function.
    #[arg(long)]
    enumerate: bool,
    /// Number of labelled Dyck paths, enumerated directly.
    #[arg(long)]
    labelled: bool,
    /// Check the parking-function area formula on every parking function.
    #[arg(long)]
    area_check: bool,
    /// Labelled path and vectors of one parking function, e.g. 4,2,5,1,2,4.
    #[arg(long, value_name = "PREFS")]
    prefs: Option<String>,
    /// Least column label vector of each content group.
    #[arg(long)]
    representatives: bool,
    /// Check the componentwise order on representatives against D_n.
    #[arg(long)]
    content_order: bool,
}

#[derive(Debug, Args)]
struct ParkingArgs {
    #[command(flatten)]
    orders: Orders,
    #[command(flatten)]
    what: ParkingWhat,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Sequence identifier, e.g. A000108.
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    sequence: Option<String>,
    /// Verify every bundled sequence over its manifest range.
    #[arg(long)]
    all: bool,
    /// Largest order to verify (defaults to the manifest range).
    #[arg(long)]
    max_n: Option<usize>,
    /// Read snapshot files from this directory instead of the bundled copies.
    #[arg(long)]
    data_dir: Option<PathBuf>,
}

/// What a command produced, before formatting.
#[derive(Debug, Clone)]
enum Payload {
    Value(String),
    Check(bool),
    Poly(UniPoly, &'static str),
    Bi(BiPoly),
    Matrix(ExactMatrix),
    Sequence(Vec<(usize, String)>),
    Table(Vec<&'static str>, Vec<Vec<String>>),
    Census(AntichainCensus),
    Verify(Vec<VerifyReport>),
}

#[derive(Debug, Clone)]
struct Report {
    n: Option<usize>,
    quantity: &'static str,
    payload: Payload,
}

impl Report {
    fn failed(&self) -> bool {
        match &self.payload {
            Payload::Check(ok) => !ok,
            Payload::Verify(reports) => reports.iter().any(|r| !r.pass),
            _ => false,
        }
    }
}

/// Runs the CLI on `args` (program name first), writing results to `out`
/// and diagnostics to `err`, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let limits = Limits::from_env();
    if let Command::Chromatic(a) = &cli.command {
        if a.allow_slow && a.orders.n.is_some_and(|n| n > CHROMATIC_DEFAULT_MAX) {
            let _ = writeln!(err, "warning: chromatic polynomials above n = {CHROMATIC_DEFAULT_MAX} can take hours");
        }
    }
    match execute(&cli.command, &limits) {
        Ok(report) => {
            let text = render(&report, cli.format);
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            if report.failed() {
                EXIT_MISMATCH
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        _ if e.is_limit() => EXIT_LIMIT,
        Error::RouteMismatch { .. } => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidLabelling(msg.into())
}

fn single_order(orders: &Orders) -> Result<usize> {
    match (orders.n, orders.max_n) {
        (Some(n), None) => Ok(n),
        (None, _) => Err(usage("--n is required")),
        (Some(_), Some(_)) => Err(usage("this quantity takes --n only")),
    }
}

/// A scalar quantity, either at `--n` or for every order up to `--max-n`.
fn scalar(
    orders: &Orders,
    quantity: &'static str,
    f: impl Fn(usize) -> Result<String>,
) -> Result<Report> {
    match (orders.n, orders.max_n) {
        (Some(n), None) => Ok(Report {
            n: Some(n),
            quantity,
            payload: Payload::Value(f(n)?),
        }),
        (None, Some(max_n)) => {
            let terms = (0..=max_n).map(|n| Ok((n, f(n)?))).collect::<Result<Vec<_>>>()?;
            Ok(Report {
                n: None,
                quantity,
                payload: Payload::Sequence(terms),
            })
        }
        _ => Err(usage("give exactly one of --n and --max-n")),
    }
}

fn at(n: usize, quantity: &'static str, payload: Payload) -> Result<Report> {
    Ok(Report {
        n: Some(n),
        quantity,
        payload,
    })
}

fn execute(command: &Command, limits: &Limits) -> Result<Report> {
    match command {
        Command::Catalan(a) => catalan(a, limits),
        Command::Poset(a) => poset(a, limits),
        Command::Chains(a) => chains(a, limits),
        Command::Antichains(a) => antichains(a, limits),
        Command::Qt(a) => qt(a, limits),
        Command::Chromatic(a) => chromatic(a, limits),
        Command::Parking(a) => parking(a, limits),
        Command::Verify(a) => verify(a, limits),
    }
}

fn catalan(a: &CatalanArgs, limits: &Limits) -> Result<Report> {
    let w = &a.what;
    if w.paths {
        let n = single_order(&a.orders)?;
        let rows = enumerate_paths(n, limits)?
            .iter()
            .map(|d| {
                let s = d.stats();
                let g: Vec<String> = s.area_vector.iter().map(|x| x.to_string()).collect();
                vec![
                    d.to_string(),
                    s.area.to_string(),
                    s.inv.to_string(),
                    s.maj.to_string(),
                    s.bounce.to_string(),
                    g.join(" "),
                ]
            })
            .collect();
        return at(
            n,
            "paths",
            Payload::Table(vec!["path", "area", "inv", "maj", "bounce", "area_vector"], rows),
        );
    }
    if w.recurrence {
        scalar(&a.orders, "catalan-recurrence", |n| Ok(catalan_recurrence(n).to_string()))
    } else if w.enumerate {
        scalar(&a.orders, "catalan-enumerated", |n| {
            Ok(enumerate_paths(n, limits)?.len().to_string())
        })
    } else if w.bad_paths {
        scalar(&a.orders, "bad-paths", |n| Ok(count_bad_paths(n).to_string()))
    } else {
        scalar(&a.orders, "catalan", |n| Ok(catalan_closed(n).to_string()))
    }
}

fn matrix_of(n: usize, limits: &Limits, f: impl Fn(&Poset) -> Result<ExactMatrix>) -> Result<ExactMatrix> {
    f(&Poset::build(n, limits)?)
}

fn poset(a: &PosetArgs, limits: &Limits) -> Result<Report> {
    let w = &a.what;
    let build = |n| Poset::build(n, limits);
    if w.intervals {
        return scalar(&a.orders, "intervals", |n| Ok(interval_count(&build(n)?).to_string()));
    }
    if w.chain_cover {
        return scalar(&a.orders, "min-chain-cover", |n| Ok(build(n)?.min_chain_cover().to_string()));
    }
    if w.antichain_cover {
        return scalar(&a.orders, "min-antichain-cover", |n| {
            Ok(build(n)?.min_antichain_cover().to_string())
        });
    }
    let n = single_order(&a.orders)?;
    if let Some(pair) = &w.below {
        let lower: DyckPath = pair[0].parse()?;
        let upper: DyckPath = pair[1].parse()?;
        return at(n, "is-below", Payload::Value(lower.is_below(&upper)?.to_string()));
    }
    if w.zeta {
        return at(n, "zeta", Payload::Matrix(matrix_of(n, limits, |p| Ok(zeta_matrix(p)))?));
    }
    if w.eta {
        return at(n, "eta", Payload::Matrix(matrix_of(n, limits, |p| Ok(eta_matrix(p)))?));
    }
    if w.mobius {
        return at(n, "mobius", Payload::Matrix(matrix_of(n, limits, mobius_matrix)?));
    }
    if w.mobius_direct {
        let m = matrix_of(n, limits, |p| {
            Ok(ExactMatrix::from_fn(p.len(), |i, j| BigInt::from(p.mobius_direct(i, j).value)))
        })?;
        return at(n, "mobius-direct", Payload::Matrix(m));
    }
    if w.rank_sizes {
        let terms = rank_sizes(n)
            .into_iter()
            .enumerate()
            .map(|(k, c)| vec![(n * n.saturating_sub(1) / 2 - k).to_string(), c.to_string()])
            .collect();
        return at(n, "rank-sizes", Payload::Table(vec!["rank", "count"], terms));
    }
    if w.jp_check {
        return at(n, "jp-isomorphism", Payload::Check(PointPoset::build(n).isomorphism_check(limits)?));
    }
    let p = build(n)?;
    if w.elements {
        let rows = p
            .elements()
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let parts: Vec<String> = path_to_partition(d).parts().iter().map(|x| x.to_string()).collect();
                vec![i.to_string(), d.to_string(), p.rank(i).to_string(), parts.join(" ")]
            })
            .collect();
        return at(n, "elements", Payload::Table(vec!["index", "path", "rank", "partition"], rows));
    }
    if w.covers {
        let rows = p
            .cover_edges()
            .into_iter()
            .map(|(i, j)| vec![i.to_string(), j.to_string()])
            .collect();
        return at(n, "covers", Payload::Table(vec!["lower", "upper"], rows));
    }
    if w.ideals {
        let rows = p
            .order_ideals(limits)?
            .into_iter()
            .map(|ideal| {
                let ids: Vec<String> = ideal.iter().map(|i| i.to_string()).collect();
                vec![ids.join(" ")]
            })
            .collect();
        return at(n, "order-ideals", Payload::Table(vec!["ideal"], rows));
    }
    let rows = vec![
        vec!["elements".to_string(), p.len().to_string()],
        vec!["strict-pairs".to_string(), p.strict_pair_count().to_string()],
        vec!["covers".to_string(), p.cover_edges().len().to_string()],
        vec!["height".to_string(), p.height().to_string()],
    ];
    at(n, "summary", Payload::Table(vec!["field", "value"], rows))
}

fn parse_partition(s: &str) -> Result<Partition> {
    let parts = s
        .split(',')
        .map(|x| x.trim())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<usize>().map_err(|_| Error::InvalidPartition(s.to_string())))
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

fn chains(a: &ChainsArgs, limits: &Limits) -> Result<Report> {
    let w = &a.what;
    let build = |n| Poset::build(n, limits);
    if let Some(shape) = &w.syt {
        let lambda = parse_partition(shape)?;
        return Ok(Report {
            n: None,
            quantity: "syt-count",
            payload: Payload::Value(syt_count(&lambda).to_string()),
        });
    }
    if let Some(shape) = &w.cells {
        let lambda = parse_partition(shape)?;
        let hooks = hook_lengths(&lambda).hooks;
        let rows = lambda
            .cell_stats()
            .iter()
            .zip(hooks)
            .map(|(c, h)| {
                [c.row, c.col, c.arm, c.leg, c.coarm, c.coleg, h]
                    .iter()
                    .map(|x| x.to_string())
                    .collect()
            })
            .collect();
        return Ok(Report {
            n: None,
            quantity: "cells",
            payload: Payload::Table(vec!["row", "col", "arm", "leg", "coarm", "coleg", "hook"], rows),
        });
    }
    if w.polynomial {
        let n = single_order(&a.orders)?;
        return at(n, "chain-polynomial", Payload::Poly(chain_polynomial(&build(n)?), "t"));
    }
    if let Some(k) = w.length {
        let n = single_order(&a.orders)?;
        return at(n, "chains-of-length", Payload::Matrix(chains_of_length(&build(n)?, k)));
    }
    if w.tableau_check {
        let n = single_order(&a.orders)?;
        return at(n, "tableau-bijection", Payload::Check(maxchain_tableau_bijection_check(n, limits)?));
    }
    if w.maximal {
        return scalar(&a.orders, "maximal-chains", |n| Ok(maximal_chain_count(&build(n)?)?.to_string()));
    }
    if w.hook_formula {
        return scalar(&a.orders, "staircase-tableaux", |n| Ok(staircase_maxchain(n).to_string()));
    }
    scalar(&a.orders, "total-chains", |n| Ok(total_chains(&build(n)?)?.to_string()))
}

fn antichains(a: &AntichainsArgs, limits: &Limits) -> Result<Report> {
    let build = |n| Poset::build(n, limits);
    if a.bijection_check {
        let n = single_order(&a.orders)?;
        return at(
            n,
            "antichain-ideal-bijection",
            Payload::Check(build(n)?.antichain_ideal_bijection_check(limits)?),
        );
    }
    let (mode, quantity) = match a.mode {
        ModeArg::All => (CensusMode::All, "antichains"),
        ModeArg::Maximal => (CensusMode::Maximal, "maximal-antichains"),
        ModeArg::Maximum => (CensusMode::Maximum, "maximum-antichains"),
    };
    match (a.orders.n, a.orders.max_n) {
        (Some(n), None) => at(n, quantity, Payload::Census(build(n)?.antichain_census(mode, limits)?)),
        _ => scalar(&a.orders, quantity, |n| {
            let c = build(n)?.antichain_census(mode, limits)?;
            Ok(match mode {
                CensusMode::Maximum => format!("{}:{}", c.largest, c.total),
                _ => c.total.to_string(),
            })
        }),
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || usage(format!("not a rational number: {s}"));
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

fn qt(a: &QtArgs, limits: &Limits) -> Result<Report> {
    let w = &a.what;
    let n = single_order(&a.orders)?;
    if w.area {
        return at(n, "area-q-analog", Payload::Poly(cn_area(n, limits)?, "q"));
    }
    if w.inv {
        return at(n, "inv-q-analog", Payload::Poly(cn_inv(n, limits)?, "q"));
    }
    if w.maj {
        return at(n, "maj-q-analog", Payload::Poly(cn_maj(n, limits)?, "q"));
    }
    if w.q_int {
        return at(n, "q-integer", Payload::Poly(q_int(n), "q"));
    }
    if let Some(k) = w.q_binomial {
        return at(n, "q-binomial", Payload::Poly(q_binomial(n, k)?, "q"));
    }
    if let Some(mode) = w.specialize {
        let mode = match mode {
            SpecArg::Area => Specialization::Area,
            SpecArg::Maj => Specialization::Maj,
            SpecArg::Count => Specialization::Count,
        };
        return at(
            n,
            "qt-specialization",
            match qt_specialize(n, mode, limits)? {
                Specialized::Poly(p) => Payload::Poly(p, "q"),
                Specialized::Count(c) => Payload::Value(c.to_string()),
            },
        );
    }
    if let Some(point) = &w.gh {
        let q = parse_rational(&point[0])?;
        let t = parse_rational(&point[1])?;
        return at(n, "partition-sum", Payload::Value(gh_evaluate(n, &q, &t)?.to_string()));
    }
    if w.gh_check {
        let poly = qt_catalan(n, limits)?;
        let mut rows = Vec::new();
        let mut ok = true;
        for (q, t) in admissible_points(n, GH_POINTS, DEFAULT_POINT_SEED) {
            let sum = gh_evaluate(n, &q, &t)?;
            let direct = poly.eval(&q, &t);
            ok &= sum == direct;
            rows.push(vec![q.to_string(), t.to_string(), sum.to_string(), direct.to_string()]);
        }
        return at(n, "partition-sum-check", Payload::Table(vec!["q", "t", "partition_sum", "polynomial"], rows))
            .map(|r| if ok { r } else { Report { payload: Payload::Check(false), ..r } });
    }
    if w.symmetry {
        return at(n, "qt-symmetry", Payload::Check(symmetry_check(n, limits)?));
    }
    at(n, "qt-catalan", Payload::Bi(qt_catalan(n, limits)?))
}

fn chromatic(a: &ChromaticArgs, limits: &Limits) -> Result<Report> {
    let n = single_order(&a.orders)?;
    if n > CHROMATIC_DEFAULT_MAX && !a.allow_slow {
        return Err(Error::LimitExceeded {
            requested: n,
            max: CHROMATIC_DEFAULT_MAX,
        });
    }
    let graph = hasse_graph(&Poset::build(n, limits)?);
    if a.graph {
        let rows = graph.edges().map(|(u, v)| vec![u.to_string(), v.to_string()]).collect();
        return at(n, "hasse-graph", Payload::Table(vec!["u", "v"], rows));
    }
    let poly = chromatic_polynomial(&graph)?;
    match a.eval {
        Some(k) => at(n, "chromatic-value", Payload::Value(poly.eval_int(&BigInt::from(k)).to_string())),
        None => at(n, "chromatic-polynomial", Payload::Poly(poly, "t")),
    }
}

fn parse_prefs(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| usage(format!("bad preference list: {s}"))))
        .collect()
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn parking(a: &ParkingArgs, limits: &Limits) -> Result<Report> {
    let w = &a.what;
    if let Some(prefs) = &w.prefs {
        let f = ParkingFunction::new(parse_prefs(prefs)?)?;
        let l = parking_to_labelled(&f);
        let (pair, cols) = vectors_of(&l);
        let rows = vec![
            vec!["path".to_string(), l.path().to_string()],
            vec!["labels".to_string(), join(l.labels())],
            vec!["area".to_string(), area_from_parking(&f).to_string()],
            vec!["area_vector".to_string(), join(&pair.g)],
            vec!["label_vector".to_string(), join(&pair.p)],
            vec!["column_vector".to_string(), join(&cols.cols)],
        ];
        return Ok(Report {
            n: Some(f.order()),
            quantity: "labelled-path",
            payload: Payload::Table(vec!["field", "value"], rows),
        });
    }
    if w.enumerate {
        let n = single_order(&a.orders)?;
        let rows = enumerate_parking_functions(n)?
            .iter()
            .map(|f| vec![join(f.prefs())])
            .collect();
        return at(n, "parking-functions", Payload::Table(vec!["prefs"], rows));
    }
    if w.representatives {
        let n = single_order(&a.orders)?;
        let rows = content_group_representatives(n)?
            .iter()
            .map(|c| vec![join(&c.cols)])
            .collect();
        return at(n, "content-representatives", Payload::Table(vec!["columns"], rows));
    }
    if w.content_order {
        let n = single_order(&a.orders)?;
        return at(n, "content-order", Payload::Check(content_order_check(n, limits)?));
    }
    if w.area_check {
        let n = single_order(&a.orders)?;
        let ok = enumerate_parking_functions(n)?
            .iter()
            .all(|f| area_from_parking(f) == parking_to_labelled(f).path().area());
        return at(n, "parking-area", Payload::Check(ok));
    }
    if w.labelled {
        return scalar(&a.orders, "labelled-paths", |n| {
            Ok(enumerate_labelled_paths(n, limits)?.len().to_string())
        });
    }
    scalar(&a.orders, "parking-count", |n| {
        let closed = count_parking_functions(n);
        if n <= ENUMERATION_GATE {
            let listed = enumerate_parking_functions(n)?.len();
            if closed != listed.into() {
                return Err(Error::RouteMismatch {
                    quantity: "parking functions",
                    left: closed.to_string(),
                    right: listed.to_string(),
                });
            }
        }
        Ok(closed.to_string())
    })
}

fn verify(a: &VerifyArgs, limits: &Limits) -> Result<Report> {
    let ids: Vec<String> = match &a.sequence {
        Some(id) => vec![id.clone()],
        None => oeis::manifest().into_iter().map(|e| e.id).collect(),
    };
    let mut reports = Vec::new();
    for id in &ids {
        let snapshot = match &a.data_dir {
            Some(dir) => oeis::snapshot_from_dir(id, dir)?,
            None => oeis::bundled_snapshot(id)?,
        };
        reports.push(oeis::verify_sequence(id, a.max_n, &snapshot, limits)?);
    }
    Ok(Report {
        n: a.max_n,
        quantity: "verify",
        payload: Payload::Verify(reports),
    })
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => render_text(report),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&to_json(report)).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(report),
    }
}

fn matrix_rows(m: &ExactMatrix) -> Vec<Vec<String>> {
    (0..m.dim())
        .map(|i| m.row(i).iter().map(|e| e.to_string()).collect())
        .collect()
}

fn to_json(report: &Report) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("n".into(), report.n.map_or(Value::Null, |n| json!(n)));
    obj.insert("quantity".into(), json!(report.quantity));
    match &report.payload {
        Payload::Value(v) => {
            obj.insert("value".into(), json!(v));
        }
        Payload::Check(ok) => {
            obj.insert("value".into(), json!(ok.to_string()));
        }
        Payload::Poly(p, var) => {
            obj.insert("variable".into(), json!(var));
            obj.insert("terms".into(), serde_json::to_value(p).expect("polynomials serialize"));
        }
        Payload::Bi(p) => {
            obj.insert("terms".into(), serde_json::to_value(p).expect("polynomials serialize"));
        }
        Payload::Matrix(m) => {
            obj.insert("rows".into(), json!(matrix_rows(m)));
        }
        Payload::Sequence(terms) => {
            let terms: Vec<Value> = terms.iter().map(|(n, v)| json!({"n": n, "value": v})).collect();
            obj.insert("terms".into(), Value::Array(terms));
        }
        Payload::Table(columns, rows) => {
            obj.insert("columns".into(), json!(columns));
            obj.insert("rows".into(), json!(rows));
        }
        Payload::Census(c) => {
            let by_size: Vec<String> = c.by_size.iter().map(|x| x.to_string()).collect();
            obj.insert("by_size".into(), json!(by_size));
            obj.insert("largest".into(), json!(c.largest));
            obj.insert("value".into(), json!(c.total.to_string()));
        }
        Payload::Verify(reports) => {
            obj.insert("reports".into(), serde_json::to_value(reports).expect("reports serialize"));
            obj.insert("value".into(), json!(if report.failed() { "FAIL" } else { "PASS" }));
        }
    }
    Value::Object(obj)
}

fn render_text(report: &Report) -> String {
    let mut s = String::new();
    match &report.payload {
        Payload::Value(v) => s.push_str(&format!("{v}\n")),
        Payload::Check(ok) => s.push_str(if *ok { "true\n" } else { "false\n" }),
        Payload::Poly(p, var) => s.push_str(&format!("{}\n", p.display_in(var))),
        Payload::Bi(p) => s.push_str(&format!("{p}\n")),
        Payload::Matrix(m) => {
            for row in matrix_rows(m) {
                s.push_str(&row.join(" "));
                s.push('\n');
            }
        }
        Payload::Sequence(terms) => {
            for (n, v) in terms {
                s.push_str(&format!("{n} {v}\n"));
            }
        }
        Payload::Table(columns, rows) => {
            s.push_str(&columns.join("\t"));
            s.push('\n');
            for row in rows {
                s.push_str(&row.join("\t"));
                s.push('\n');
            }
        }
        Payload::Census(c) => {
            let by_size: Vec<String> = c.by_size.iter().map(|x| x.to_string()).collect();
            s.push_str(&format!("total {}\nby_size {}\nlargest {}\n", c.total, by_size.join(" "), c.largest));
        }
        Payload::Verify(reports) => {
            for r in reports {
                for e in &r.entries {
                    s.push_str(&format!(
                        "{} n={} index={} expected={} computed={} {}\n",
                        r.id,
                        e.n,
                        e.index,
                        e.expected.as_deref().unwrap_or("missing"),
                        e.computed,
                        if e.pass { "PASS" } else { "FAIL" }
                    ));
                }
                s.push_str(&format!("{} {}\n", r.id, if r.pass { "PASS" } else { "FAIL" }));
            }
        }
    }
    s
}

fn csv_line(fields: &[String]) -> String {
    let escaped: Vec<String> = fields
        .iter()
        .map(|f| {
            if f.contains([',', '"', '\n']) {
                format!("\"{}\"", f.replace('"', "\"\""))
            } else {
                f.clone()
            }
        })
        .collect();
    format!("{}\n", escaped.join(","))
}

fn render_csv(report: &Report) -> String {
    let strs = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let n = report.n.map_or(String::new(), |n| n.to_string());
    let q = report.quantity.to_string();
    let mut s = String::new();
    match &report.payload {
        Payload::Value(v) => {
            s += &csv_line(&strs(&["n", "quantity", "value"]));
            s += &csv_line(&[n, q, v.clone()]);
        }
        Payload::Check(ok) => {
            s += &csv_line(&strs(&["n", "quantity", "value"]));
            s += &csv_line(&[n, q, ok.to_string()]);
        }
        Payload::Poly(p, _) => {
            s += &csv_line(&strs(&["exp", "coeff"]));
            for (e, c) in p.terms() {
                s += &csv_line(&[e.to_string(), c.to_string()]);
            }
        }
        Payload::Bi(p) => {
            s += &csv_line(&strs(&["q", "t", "coeff"]));
            for ((a, b), c) in p.terms() {
                s += &csv_line(&[a.to_string(), b.to_string(), c.to_string()]);
            }
        }
        Payload::Matrix(m) => {
            for row in matrix_rows(m) {
                s += &csv_line(&row);
            }
        }
        Payload::Sequence(terms) => {
            s += &csv_line(&strs(&["n", "value"]));
            for (n, v) in terms {
                s += &csv_line(&[n.to_string(), v.clone()]);
            }
        }
        Payload::Table(columns, rows) => {
            s += &csv_line(&strs(columns));
            for row in rows {
                s += &csv_line(row);
            }
        }
        Payload::Census(c) => {
            s += &csv_line(&strs(&["size", "count"]));
            for (k, count) in c.by_size.iter().enumerate() {
                s += &csv_line(&[k.to_string(), count.to_string()]);
            }
        }
        Payload::Verify(reports) => {
            s += &csv_line(&strs(&["id", "n", "index", "expected", "computed", "status"]));
            for r in reports {
                for e in &r.entries {
                    s += &csv_line(&[
                        r.id.clone(),
                        e.n.to_string(),
                        e.index.to_string(),
                        e.expected.clone().unwrap_or_default(),
                        e.computed.clone(),
                        if e.pass { "PASS" } else { "FAIL" }.to_string(),
                    ]);
                }
            }
        }
    }
    s
}

/// One invocation per quantity the CLI exposes, paired with the quantity
/// name it reports. Used to check that every quantity stays reachable.
pub const REGISTRY: &[(&str, &[&str])] = &[
    ("catalan", &["catalan", "--n", "4"]),
    ("catalan-recurrence", &["catalan", "--n", "4", "--recurrence"]),
    ("catalan-enumerated", &["catalan", "--n", "4", "--enumerate"]),
    ("bad-paths", &["catalan", "--n", "4", "--bad-paths"]),
    ("paths", &["catalan", "--n", "3", "--paths"]),
    ("summary", &["poset", "--n", "3"]),
    ("elements", &["poset", "--n", "3", "--elements"]),
    ("covers", &["poset", "--n", "3", "--covers"]),
    ("zeta", &["poset", "--n", "3", "--zeta"]),
    ("eta", &["poset", "--n", "3", "--eta"]),
    ("mobius", &["poset", "--n", "3", "--mobius"]),
    ("mobius-direct", &["poset", "--n", "3", "--mobius-direct"]),
    ("intervals", &["poset", "--n", "3", "--intervals"]),
    ("order-ideals", &["poset", "--n", "3", "--ideals"]),
    ("rank-sizes", &["poset", "--n", "5", "--rank-sizes"]),
    ("min-chain-cover", &["poset", "--n", "4", "--chain-cover"]),
    ("min-antichain-cover", &["poset", "--n", "4", "--antichain-cover"]),
    ("jp-isomorphism", &["poset", "--n", "4", "--jp-check"]),
    ("is-below", &["poset", "--n", "4", "--below", "NENNEENE", "NNNEENEE"]),
    ("total-chains", &["chains", "--n", "3", "--total"]),
    ("chain-polynomial", &["chains", "--n", "3", "--polynomial"]),
    ("chains-of-length", &["chains", "--n", "3", "--length", "2"]),
    ("maximal-chains", &["chains", "--n", "4", "--maximal"]),
    ("staircase-tableaux", &["chains", "--n", "5", "--hook-formula"]),
    ("tableau-bijection", &["chains", "--n", "4", "--tableau-check"]),
    ("syt-count", &["chains", "--syt", "4,3,2,1"]),
    ("cells", &["chains", "--cells", "2,1"]),
    ("antichains", &["antichains", "--n", "4"]),
    ("maximal-antichains", &["antichains", "--n", "4", "--mode", "maximal"]),
    ("maximum-antichains", &["antichains", "--n", "4", "--mode", "maximum"]),
    ("antichain-ideal-bijection", &["antichains", "--n", "3", "--bijection-check"]),
    ("qt-catalan", &["qt", "--n", "3"]),
    ("area-q-analog", &["qt", "--n", "3", "--area"]),
    ("inv-q-analog", &["qt", "--n", "3", "--inv"]),
    ("maj-q-analog", &["qt", "--n", "3", "--maj"]),
    ("q-integer", &["qt", "--n", "3", "--q-int"]),
    ("q-binomial", &["qt", "--n", "4", "--q-binomial", "2"]),
    ("qt-specialization", &["qt", "--n", "3", "--specialize", "maj"]),
    ("partition-sum", &["qt", "--n", "3", "--gh", "2", "3"]),
    ("partition-sum-check", &["qt", "--n", "3", "--gh-check"]),
    ("qt-symmetry", &["qt", "--n", "3", "--symmetry"]),
    ("chromatic-polynomial", &["chromatic", "--n", "3"]),
    ("chromatic-value", &["chromatic", "--n", "3", "--eval", "2"]),
    ("hasse-graph", &["chromatic", "--n", "3", "--graph"]),
    ("parking-count", &["parking", "--n", "3"]),
    ("parking-functions", &["parking", "--n", "2", "--enumerate"]),
    ("labelled-paths", &["parking", "--n", "3", "--labelled"]),
    ("parking-area", &["parking", "--n", "3", "--area-check"]),
    ("labelled-path", &["parking", "--prefs", "4,2,5,1,2,4"]),
    ("content-representatives", &["parking", "--n", "3", "--representatives"]),
    ("content-order", &["parking", "--n", "3", "--content-order"]),
    ("verify", &["verify", "--sequence", "A000108", "--max-n", "10"]),
];
