//! Command-line front end. Every command is deterministic; output is TSV by
//! default and JSON with `--json`.
//!
//! Exit codes: 0 on success, 1 when a verification fails (the witness is
//! printed on stdout), 2 on malformed input (message on stderr).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::census::PairTable;
use crate::enumerate::{self, IrrepRecord};
use crate::error::Error;
use crate::multiplicity::{self, TorusElement, DEFAULT_WEIGHT_CAP};
use crate::rootsys::{RootSystemData, RootSystemId};
use crate::weyldim::{self, CVector, WeylDimension};
use crate::zetabounds::{self, ExponentProfile};

/// Worker threads for the enumeration commands; unset means one.
pub const THREADS_ENV: &str = "LIEGROWTH_THREADS";

#[derive(Parser, Debug)]
#[command(name = "liegrowth", version)]
#[command(
    about = "Root systems, Weyl dimensions and representation growth of simple compact Lie groups"
)]
struct Cli {
    /// Emit JSON instead of TSV
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Positive roots and constants of a root system
    Roots { id: RootSystemId },
    /// Degree of the irreducible character with shifted coordinates c (e.g. 2,1)
    Dim { id: RootSystemId, c: CVector },
    /// Exponent profile v_1..v_r
    Vprofile {
        id: RootSystemId,
        /// Profile of the coroot system instead
        #[arg(long)]
        dual: bool,
    },
    /// Product of zeta(v_j s) over the profile of ID
    Zbound {
        id: RootSystemId,
        #[arg(value_parser = parse_real)]
        s: f64,
    },
    /// Z(1) for A9..A20, D5..D10, E6..E8
    Table1,
    /// Z(3/4)^4 for A2..A8, D4
    Table2,
    /// Irreducible characters of degree <= N
    Enum {
        id: RootSystemId,
        #[arg(long, value_name = "N", required_unless_present = "check")]
        max_dim: Option<u64>,
        /// Recompute the degrees of a JSON listing produced by `enum --json`
        #[arg(long, value_name = "FILE", conflicts_with = "max_dim")]
        check: Option<PathBuf>,
    },
    /// Number of irreducible characters of degree <= n
    Rn { id: RootSystemId, n: u64 },
    /// Partial sum of the Witten zeta function over degrees <= N
    Witten {
        id: RootSystemId,
        #[arg(value_parser = parse_real)]
        s: f64,
        #[arg(long, value_name = "N")]
        max_dim: u64,
    },
    /// Check R_n <= n for all n up to the search bound
    #[command(name = "verify-thm1")]
    VerifyThm1 {
        id: RootSystemId,
        /// Defaults to floor(Z(3/4)^4) of the dual system
        #[arg(long, value_name = "N")]
        max_n: Option<u64>,
    },
    /// Weight diagram of an irreducible representation
    Weights { id: RootSystemId, c: CVector },
    /// Eigenspace profile of a regular torus element of order p
    Eig {
        id: RootSystemId,
        c: CVector,
        #[arg(long, value_name = "P")]
        order: u64,
        /// Cocharacter in simple-coroot coordinates; searched for when omitted
        #[arg(long, value_name = "T1,...,TR", value_delimiter = ',')]
        cochar: Option<Vec<u64>>,
    },
    /// Number of faithful irreducible pairs (G, V) with dim V = n
    Census {
        n: u64,
        /// List the records as JSON
        #[arg(long)]
        list: bool,
    },
}

fn parse_real(s: &str) -> Result<f64, String> {
    let value = match s.split_once('/') {
        Some((a, b)) => {
            let a: f64 = a.trim().parse().map_err(|_| format!("bad number {s:?}"))?;
            let b: f64 = b.trim().parse().map_err(|_| format!("bad number {s:?}"))?;
            a / b
        }
        None => s.trim().parse().map_err(|_| format!("bad number {s:?}"))?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("{s:?} is not a finite number"))
    }
}

fn threads() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&t| t >= 1)
        .unwrap_or(1)
}

enum Failure {
    /// Malformed input or a domain error: exit 2.
    Usage(String),
    /// A check did not hold: exit 1, witness already written.
    Verification,
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        if e.is_io() {
            return Failure::Io(e.into());
        }
        Failure::Usage(e.to_string())
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "run `liegrowth --help` for usage");
            2
        }
        // the reader went away, as with `| head`
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct EnumListing {
    id: RootSystemId,
    max_dim: u64,
    records: Vec<IrrepRecord>,
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Roots { id } => {
            let data = RootSystemData::build(id);
            if json {
                print_json(out, &data)?;
            } else {
                for root in &data.positive_roots {
                    writeln!(out, "{}\t{}", join(&root.coeffs), root.height())?;
                }
            }
        }
        Command::Dim { id, c } => {
            let dim = weyldim::dimension(id, &c)?;
            if json {
                print_json(out, &json!({ "id": id, "c": c, "dim": dim.to_string() }))?;
            } else {
                writeln!(out, "{dim}")?;
            }
        }
        Command::Vprofile { id, dual } => {
            let profile = if dual {
                zetabounds::coroot_profile(&RootSystemData::build(id))
            } else {
                zetabounds::v_profile(id)
            };
            write_profile(out, &profile, json)?;
        }
        Command::Zbound { id, s } => {
            let value = zetabounds::z_bound(id, s)?;
            if json {
                print_json(out, &json!({ "id": id, "s": s, "value": value }))?;
            } else {
                writeln!(out, "{id}\t{value:.10}")?;
            }
        }
        Command::Table1 => write_table(out, &zetabounds::table1(), json)?,
        Command::Table2 => write_table(out, &zetabounds::table2(), json)?,
        Command::Enum { id, max_dim, check } => match (max_dim, check) {
            (_, Some(path)) => check_listing(out, id, &path, json)?,
            (Some(n), None) => {
                let records = enumerate::irreps_up_to_parallel(id, n, threads())?;
                if json {
                    print_json(
                        out,
                        &EnumListing {
                            id,
                            max_dim: n,
                            records,
                        },
                    )?;
                } else {
                    for rec in &records {
                        writeln!(out, "{}\t{}", rec.c, rec.dim)?;
                    }
                }
            }
            (None, None) => return Err(Failure::Usage("enum needs --max-dim or --check".into())),
        },
        Command::Rn { id, n } => {
            let count = enumerate::irreps_up_to_parallel(id, n, threads())?.len();
            if json {
                print_json(out, &json!({ "id": id, "n": n, "r_n": count }))?;
            } else {
                writeln!(out, "{count}")?;
            }
        }
        Command::Witten { id, s, max_dim } => {
            if s.is_nan() || s <= 0.0 {
                return Err(Failure::Usage(format!("s must be positive, got {s}")));
            }
            let records = enumerate::irreps_up_to_parallel(id, max_dim, threads())?;
            let partial_sum: f64 = records
                .iter()
                .rev()
                .map(|r| {
                    num_traits::ToPrimitive::to_f64(&r.dim)
                        .unwrap_or(f64::INFINITY)
                        .powf(-s)
                })
                .sum();
            let bound = zetabounds::witten_zeta_bound(id, s).ok();
            if json {
                print_json(
                    out,
                    &json!({
                        "id": id, "s": s, "cutoff": max_dim,
                        "partial_sum": partial_sum, "count": records.len(),
                        "bound": bound,
                    }),
                )?;
            } else {
                writeln!(out, "s\t{s}")?;
                writeln!(out, "cutoff\t{max_dim}")?;
                writeln!(out, "partial_sum\t{partial_sum:.12}")?;
                writeln!(out, "count\t{}", records.len())?;
                match bound {
                    Some(b) => writeln!(out, "bound\t{b:.12}")?,
                    None => writeln!(out, "bound\tdivergent")?,
                }
            }
        }
        Command::VerifyThm1 { id, max_n } => {
            let max_n = match max_n.or_else(|| enumerate::thm1_search_bound(id)) {
                Some(n) if n >= 1 => n,
                _ => {
                    return Err(Failure::Usage(format!(
                        "the zeta bound for {id} diverges at s = 3/4; pass --max-n"
                    )))
                }
            };
            let records = enumerate::irreps_up_to_parallel(id, max_n, threads())?;
            let dims: Vec<u64> = records
                .iter()
                .map(|r| u64::try_from(&r.dim).expect("bounded by max_n"))
                .collect();
            let report = enumerate::thm1_from_dims(id, max_n, &dims);
            if json {
                print_json(out, &report)?;
            } else {
                writeln!(out, "id\t{id}")?;
                writeln!(out, "max_n\t{max_n}")?;
                writeln!(out, "count\t{}", report.count)?;
                writeln!(out, "equalities\t{}", join(&report.equalities))?;
                if let Some(v) = &report.violation {
                    writeln!(out, "violation\tn={}\tR_n={}", v.n, v.r_n)?;
                }
                writeln!(out, "pass\t{}", report.pass)?;
            }
            if !report.pass {
                return Err(Failure::Verification);
            }
        }
        Command::Weights { id, c } => {
            let data = RootSystemData::build(id);
            let eval = WeylDimension::from_data(&data);
            let diagram = multiplicity::weight_diagram_with(&data, &eval, &c, DEFAULT_WEIGHT_CAP)?;
            if json {
                let weights: Vec<_> = diagram
                    .mults
                    .iter()
                    .map(|(w, m)| json!({ "weight": w, "mult": m }))
                    .collect();
                print_json(
                    out,
                    &json!({
                        "id": id, "highest": diagram.highest,
                        "total": diagram.total(), "weights": weights,
                    }),
                )?;
            } else {
                for (w, m) in &diagram.mults {
                    writeln!(out, "{}\t{m}", join(w))?;
                }
            }
        }
        Command::Eig {
            id,
            c,
            order,
            cochar,
        } => eig(out, id, &c, order, cochar, json)?,
        Command::Census { n, list } => {
            let table = PairTable::build(n);
            if list {
                print_json(out, &table.census_list(n))?;
            } else if json {
                print_json(out, &json!({ "n": n, "count": table.census_count(n) }))?;
            } else {
                writeln!(out, "{}", table.census_count(n))?;
            }
        }
    }
    Ok(())
}

fn write_profile(
    out: &mut dyn Write,
    profile: &ExponentProfile,
    json: bool,
) -> Result<(), Failure> {
    let floats = profile.to_f64();
    if json {
        let exact: Vec<String> = profile.v.iter().map(|v| v.to_string()).collect();
        print_json(
            out,
            &json!({ "id": profile.id, "v": exact, "v_f64": floats }),
        )?;
    } else {
        for (j, (v, f)) in profile.v.iter().zip(&floats).enumerate() {
            writeln!(out, "{}\t{v}\t{f:.10}", j + 1)?;
        }
    }
    Ok(())
}

fn write_table(
    out: &mut dyn Write,
    rows: &[zetabounds::TableRow],
    json: bool,
) -> Result<(), Failure> {
    if json {
        print_json(out, &rows)?;
    } else {
        for row in rows {
            writeln!(out, "{}\t{:.6}", row.id, row.value)?;
        }
    }
    Ok(())
}

fn check_listing(
    out: &mut dyn Write,
    id: RootSystemId,
    path: &PathBuf,
    json: bool,
) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path)?;
    let listing: EnumListing = serde_json::from_str(&text)?;
    if listing.id != id {
        return Err(Failure::Usage(format!(
            "listing is for {}, not {id}",
            listing.id
        )));
    }
    let eval = weyldim::evaluator(id);
    let mut mismatches = Vec::new();
    for rec in &listing.records {
        let computed: BigUint = eval.dimension(&rec.c)?;
        if computed != rec.dim {
            mismatches.push(json!({
                "c": rec.c, "recorded": rec.dim.to_string(), "computed": computed.to_string(),
            }));
        }
    }
    if json {
        print_json(
            out,
            &json!({ "id": id, "checked": listing.records.len(), "mismatches": mismatches }),
        )?;
    } else {
        writeln!(out, "checked\t{}", listing.records.len())?;
        for m in &mismatches {
            writeln!(out, "mismatch\t{m}")?;
        }
    }
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn eig(
    out: &mut dyn Write,
    id: RootSystemId,
    c: &CVector,
    order: u64,
    cochar: Option<Vec<u64>>,
    json: bool,
) -> Result<(), Failure> {
    let data = RootSystemData::build(id);
    let eval = WeylDimension::from_data(&data);
    let g = match cochar {
        Some(t) => TorusElement::new(order, t)?,
        None => multiplicity::find_regular_in(&data, order)?,
    };
    let diagram = multiplicity::weight_diagram_with(&data, &eval, c, DEFAULT_WEIGHT_CAP)?;
    let profile = multiplicity::eigen_profile_of(&data, &diagram, &g)?;
    let bounds = if multiplicity::is_prime(order) {
        Some(multiplicity::eigen_bounds(&data, &profile, order)?)
    } else {
        None
    };
    let seitz = multiplicity::seitz_report(&data, &diagram);
    let pass = bounds.as_ref().is_none_or(|b| b.pass) && seitz.pass;
    if json {
        print_json(
            out,
            &json!({
                "id": id, "c": c, "order": order, "cochar": g.cochar,
                "counts": profile.counts, "w_max": profile.w_max,
                "bounds": bounds, "seitz": seitz, "pass": pass,
            }),
        )?;
    } else {
        writeln!(out, "cochar\t{}", join(&g.cochar))?;
        writeln!(out, "counts\t{}", join(&profile.counts))?;
        writeln!(out, "w_max\t{}", profile.w_max)?;
        if let Some(b) = &bounds {
            writeln!(out, "lower\t{:.10}", b.lower)?;
            writeln!(out, "upper\t{:.10}", b.upper)?;
        }
        writeln!(out, "max_mult\t{}", seitz.max_mult)?;
        writeln!(out, "seitz_bound\t{:.10}", seitz.bound)?;
        writeln!(out, "pass\t{pass}")?;
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
