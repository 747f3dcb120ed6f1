//! Command-line surface: enumeration, counting, the bijection in both
//! directions, and identity verification sweeps.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad flags or malformed
//! input, 3 enumeration budget exceeded, 4 unmap input without an up step.

use std::io::{BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use kapath::bijection::{case_of_color, phi, psi, BijectionError, MappingRecord};
use kapath::enumerate::{
    count_family, count_kary_peak_paths, count_sud, count_super, count_suu, enumerate_paths,
    enumerate_restricted, enumerate_super, ColoredHumpPath, CountFamily, SuperSubset,
};
use kapath::identities::{sweep, ClaimId, IdentityReport, SweepConfig};
use kapath::path::{HorizontalWidth, LatticePath, PathParams};

const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Parser)]
#[command(name = "kapath", version, about = "(k,a)-lattice path toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PathFamily {
    Paths,
    Super,
    SPrime,
    SDPrime,
}

fn parse_path_family(s: &str) -> Result<PathFamily, String> {
    match s {
        "paths" => Ok(PathFamily::Paths),
        "super" => Ok(PathFamily::Super),
        "s_prime" | "s-prime" => Ok(PathFamily::SPrime),
        "s_dprime" | "s-dprime" => Ok(PathFamily::SDPrime),
        other => Err(format!(
            "unknown family '{other}' (expected paths, super, s_prime, s_dprime)"
        )),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Formula {
    Narayana,
    Peaks,
    Suu,
    Sud,
}

fn parse_formula(s: &str) -> Result<Formula, String> {
    match s {
        "narayana" => Ok(Formula::Narayana),
        "peaks" => Ok(Formula::Peaks),
        "suu" => Ok(Formula::Suu),
        "sud" => Ok(Formula::Sud),
        other => Err(format!(
            "unknown formula '{other}' (expected narayana, peaks, suu, sud)"
        )),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print every path of one family at the given order, one word per line.
    Enumerate {
        #[arg(long, value_parser = parse_path_family)]
        family: PathFamily,
        #[arg(long)]
        k: u32,
        /// Horizontal step width, or "inf" to forbid horizontal steps.
        #[arg(long)]
        a: HorizontalWidth,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Refuse cells with more than this many super paths.
        #[arg(long, env = "KAPATH_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Apply phi: map a colored hump path to its super path.
    Map {
        /// Path word over U, D, H.
        word: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        a: HorizontalWidth,
        /// Step index of the colored hump's up step.
        #[arg(long)]
        hump: usize,
        /// Hump color in 1..=k+1.
        #[arg(long)]
        color: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Apply psi: map a super path back to its colored hump path.
    Unmap {
        word: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        a: HorizontalWidth,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check identities over a parameter grid and stream one report per cell.
    Verify {
        /// Comma list of claims (eq4, eq5, eq6, eq7, thm1, c1, c2, narayana,
        /// roundtrip); all of them by default.
        #[arg(long)]
        claims: Option<String>,
        /// Values of k, as a comma list and/or lo..hi ranges.
        #[arg(long, default_value = "1..3")]
        k: String,
        /// Values of a, e.g. "1,2,inf".
        #[arg(long, default_value = "1,2,3,inf")]
        a: String,
        /// Orders n. The peak-side claims (eq5, eq7) hold for n >= 1; an
        /// explicit n = 0 cell reports their degenerate failure honestly.
        #[arg(long, default_value = "1..12")]
        n: String,
        #[arg(long, env = "KAPATH_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Closed-form count tables over a range of peak counts m.
    Table {
        #[arg(long, value_parser = parse_formula)]
        formula: Formula,
        #[arg(long)]
        k: u32,
        /// Number of up steps.
        #[arg(long)]
        n: u64,
        /// Peak counts, e.g. "1..4"; defaults to 1..n.
        #[arg(long)]
        m: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exact count tables per family over a parameter grid.
    Count {
        /// Comma list of families (paths, super, s_prime, s_dprime,
        /// humps_total, peaks_total); all of them by default.
        #[arg(long)]
        families: Option<String>,
        #[arg(long, default_value = "1..3")]
        k: String,
        #[arg(long, default_value = "1,2,3,inf")]
        a: String,
        #[arg(long, default_value = "0..12")]
        n: String,
        #[arg(long, env = "KAPATH_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// A failure with its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Enumerate {
            family,
            k,
            a,
            n,
            format,
            budget,
        } => cmd_enumerate(family, k, a, n, format, budget),
        Command::Map {
            word,
            k,
            a,
            hump,
            color,
            format,
        } => cmd_map(&word, k, a, hump, color, format),
        Command::Unmap { word, k, a, format } => cmd_unmap(&word, k, a, format),
        Command::Verify {
            claims,
            k,
            a,
            n,
            budget,
            format,
        } => cmd_verify(claims.as_deref(), &k, &a, &n, budget, format),
        Command::Table {
            formula,
            k,
            n,
            m,
            format,
        } => cmd_table(formula, k, n, m.as_deref(), format),
        Command::Count {
            families,
            k,
            a,
            n,
            budget,
            format,
        } => cmd_count(families.as_deref(), &k, &a, &n, budget, format),
    }
}

fn params_of(k: u32, a: HorizontalWidth) -> Result<PathParams, Failure> {
    PathParams::new(k, a).map_err(|e| Failure::new(2, e.to_string()))
}

fn check_budget(n: u64, params: PathParams, budget: u64) -> Result<(), Failure> {
    let universe = count_super(n as i64, params);
    if universe > BigUint::from(budget) {
        return Err(Failure::new(
            3,
            format!("cell has {universe} super paths, over the budget of {budget}"),
        ));
    }
    Ok(())
}

fn cmd_enumerate(
    family: PathFamily,
    k: u32,
    a: HorizontalWidth,
    n: u64,
    format: Format,
    budget: u64,
) -> Result<ExitCode, Failure> {
    let params = params_of(k, a)?;
    check_budget(n, params, budget)?;
    let words: Box<dyn Iterator<Item = LatticePath>> = match family {
        PathFamily::Paths => Box::new(enumerate_paths(n, params)),
        PathFamily::Super => Box::new(enumerate_super(n, params)),
        PathFamily::SPrime => Box::new(enumerate_restricted(n, params, SuperSubset::WithUpStep)),
        PathFamily::SDPrime => Box::new(enumerate_restricted(
            n,
            params,
            SuperSubset::NoLeadingHorizontal,
        )),
    };

    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match format {
        Format::Json => {
            let all: Vec<String> = words.map(|p| p.word()).collect();
            writeln!(out, "{}", serde_json::to_string(&all).expect("serializes"))
                .map_err(io_failure)?;
        }
        Format::Csv => {
            writeln!(out, "word").map_err(io_failure)?;
            for p in words {
                writeln!(out, "{}", p.word()).map_err(io_failure)?;
            }
        }
        Format::Text => {
            for p in words {
                writeln!(out, "{}", p.word()).map_err(io_failure)?;
            }
        }
    }
    out.flush().map_err(io_failure)?;
    Ok(ExitCode::SUCCESS)
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure::new(1, format!("io error: {e}"))
}

fn bijection_failure(e: BijectionError) -> Failure {
    match e {
        BijectionError::NoUpStep => Failure::new(4, e.to_string()),
        BijectionError::MalformedColoredPath(_) | BijectionError::NotClosed => {
            Failure::new(2, e.to_string())
        }
        BijectionError::StructureViolation(_) => Failure::new(1, e.to_string()),
    }
}

fn print_mapping(record: &MappingRecord, format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(record).expect("record serializes")
        ),
        Format::Csv => {
            println!("input,hump_up_index,color,output,case");
            println!(
                "{},{},{},{},{}",
                record.input.word(),
                record.hump_up_index,
                record.color,
                record.output.word(),
                record.case
            );
        }
        Format::Text => println!(
            "{} hump={} color={} case={}",
            record.output.word(),
            record.hump_up_index,
            record.color,
            record.case
        ),
    }
    Ok(())
}

fn cmd_map(
    word: &str,
    k: u32,
    a: HorizontalWidth,
    hump: usize,
    color: u32,
    format: Format,
) -> Result<ExitCode, Failure> {
    let params = params_of(k, a)?;
    let path = LatticePath::parse(word, params).map_err(|e| Failure::new(2, e.to_string()))?;
    let colored = ColoredHumpPath::from_up_index(path.clone(), hump, color)
        .map_err(|e| Failure::new(2, e.to_string()))?;
    let output = phi(&colored).map_err(bijection_failure)?;
    let record = MappingRecord {
        input: path,
        hump_up_index: hump,
        color,
        output,
        case: case_of_color(color, k),
    };
    print_mapping(&record, format)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_unmap(word: &str, k: u32, a: HorizontalWidth, format: Format) -> Result<ExitCode, Failure> {
    let params = params_of(k, a)?;
    let path = LatticePath::parse(word, params).map_err(|e| Failure::new(2, e.to_string()))?;
    let colored = psi(&path).map_err(bijection_failure)?;
    let record = MappingRecord {
        input: path,
        hump_up_index: colored.hump().up_index,
        color: colored.color(),
        output: colored.path().clone(),
        case: case_of_color(colored.color(), k),
    };
    print_mapping(&record, format)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    claims: Option<&str>,
    k: &str,
    a: &str,
    n: &str,
    budget: u64,
    format: Format,
) -> Result<ExitCode, Failure> {
    let claims = match claims {
        Some(list) => parse_claim_list(list)?,
        None => ClaimId::ALL.to_vec(),
    };
    let config = SweepConfig {
        claims,
        ks: parse_u32_list(k)?,
        widths: parse_width_list(a)?,
        orders: parse_u64_list(n)?,
        budget,
    };
    let outcome = sweep(&config);

    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match format {
        Format::Json => {
            writeln!(
                out,
                "{}",
                serde_json::to_string(&outcome.reports).expect("reports serialize")
            )
            .map_err(io_failure)?;
        }
        Format::Csv => {
            writeln!(out, "claim,n,k,a,m,lhs,rhs,verified,witness").map_err(io_failure)?;
            for r in &outcome.reports {
                writeln!(out, "{}", report_csv_row(r)).map_err(io_failure)?;
            }
        }
        Format::Text => {
            for r in &outcome.reports {
                writeln!(out, "{}", report_text_line(r)).map_err(io_failure)?;
            }
        }
    }
    out.flush().map_err(io_failure)?;
    if outcome.skipped_cells > 0 {
        eprintln!(
            "skipped {} cell(s) over the budget of {} super paths",
            outcome.skipped_cells, budget
        );
    }
    if outcome.all_verified() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn report_text_line(r: &IdentityReport) -> String {
    let cell = match (r.a, r.m) {
        (Some(a), _) => format!("n={} k={} a={}", r.n, r.k, a),
        (None, Some(m)) => format!("n={} k={} m={}", r.n, r.k, m),
        (None, None) => format!("n={} k={}", r.n, r.k),
    };
    let status = if r.verified { "ok" } else { "FAIL" };
    match &r.witness {
        Some(w) => format!(
            "{} {cell} lhs={} rhs={} {status} witness={w}",
            r.claim.name(),
            r.lhs,
            r.rhs
        ),
        None => format!(
            "{} {cell} lhs={} rhs={} {status}",
            r.claim.name(),
            r.lhs,
            r.rhs
        ),
    }
}

fn csv_escape(field: &str) -> String {
    if field.contains(['"', ',', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn report_csv_row(r: &IdentityReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}",
        r.claim.name(),
        r.n,
        r.k,
        r.a.map(|a| a.to_string()).unwrap_or_default(),
        r.m.map(|m| m.to_string()).unwrap_or_default(),
        r.lhs,
        r.rhs,
        r.verified,
        csv_escape(r.witness.as_deref().unwrap_or(""))
    )
}

fn cmd_table(
    formula: Formula,
    k: u32,
    n: u64,
    m: Option<&str>,
    format: Format,
) -> Result<ExitCode, Failure> {
    if k < 1 {
        return Err(Failure::new(2, "k must be at least 1"));
    }
    if n < 1 {
        return Err(Failure::new(2, "n must be at least 1"));
    }
    let ms = match m {
        Some(list) => parse_u64_list(list)?,
        None => (1..=n).collect(),
    };
    if ms.iter().any(|&m| m < 1) {
        return Err(Failure::new(2, "m must be at least 1"));
    }

    let name = match formula {
        Formula::Narayana => "narayana",
        Formula::Peaks => "peaks",
        Formula::Suu => "suu",
        Formula::Sud => "sud",
    };
    let mut values = Vec::with_capacity(ms.len());
    for &m in &ms {
        let value = match formula {
            Formula::Narayana | Formula::Peaks => {
                count_kary_peak_paths(n, k, m).map_err(|e| Failure::new(1, e.to_string()))?
            }
            Formula::Suu => count_suu(n, k, m),
            Formula::Sud => count_sud(n, k, m),
        };
        values.push((m, value));
    }

    match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = values
                .iter()
                .map(|(m, v)| {
                    serde_json::json!({
                        "formula": name, "n": n, "k": k, "m": m, "value": v.to_string()
                    })
                })
                .collect();
            println!("{}", serde_json::to_string(&rows).expect("serializes"));
        }
        Format::Csv => {
            println!("formula,n,k,m,value");
            for (m, v) in &values {
                println!("{name},{n},{k},{m},{v}");
            }
        }
        Format::Text => {
            let row: Vec<String> = values.iter().map(|(_, v)| v.to_string()).collect();
            println!("{}", row.join(","));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_count(
    families: Option<&str>,
    k: &str,
    a: &str,
    n: &str,
    budget: u64,
    format: Format,
) -> Result<ExitCode, Failure> {
    let families = match families {
        Some(list) => {
            let mut fams = Vec::new();
            for atom in list.split(',') {
                fams.push(
                    atom.trim()
                        .parse::<CountFamily>()
                        .map_err(|e| Failure::new(2, e))?,
                );
            }
            fams
        }
        None => CountFamily::ALL.to_vec(),
    };
    let ks = parse_u32_list(k)?;
    let widths = parse_width_list(a)?;
    let orders = parse_u64_list(n)?;

    let mut rows = Vec::new();
    let mut skipped = 0u64;
    for &k in &ks {
        for &a in &widths {
            let params = params_of(k, a)?;
            for &n in &orders {
                if count_super(n as i64, params) > BigUint::from(budget) {
                    skipped += 1;
                    continue;
                }
                for &family in &families {
                    rows.push((n, k, a, family, count_family(n, params, family)));
                }
            }
        }
    }

    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match format {
        Format::Json => {
            let json: Vec<serde_json::Value> = rows
                .iter()
                .map(|(n, k, a, family, value)| {
                    serde_json::json!({
                        "n": n, "k": k, "a": a, "family": family.name(),
                        "value": value.to_string()
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string(&json).expect("serializes"))
                .map_err(io_failure)?;
        }
        Format::Csv | Format::Text => {
            writeln!(out, "n,k,a,family,value").map_err(io_failure)?;
            for (n, k, a, family, value) in &rows {
                writeln!(out, "{n},{k},{a},{},{value}", family.name()).map_err(io_failure)?;
            }
        }
    }
    out.flush().map_err(io_failure)?;
    if skipped > 0 {
        eprintln!("skipped {skipped} cell(s) over the budget of {budget} super paths");
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// Range-list parsing: "3", "1..4", "1,2,5", "1..3,7", "inf"
// ---------------------------------------------------------------------------

fn parse_range_atoms<T, F>(input: &str, mut atom: F) -> Result<Vec<T>, Failure>
where
    T: PartialEq + Copy,
    F: FnMut(&str) -> Result<Vec<T>, Failure>,
{
    let mut values = Vec::new();
    for piece in input.split(',') {
        for v in atom(piece.trim())? {
            if !values.contains(&v) {
                values.push(v);
            }
        }
    }
    if values.is_empty() {
        return Err(Failure::new(2, format!("empty value list '{input}'")));
    }
    Ok(values)
}

fn parse_u64_list(input: &str) -> Result<Vec<u64>, Failure> {
    parse_range_atoms(input, |atom| {
        if let Some((lo, hi)) = atom.split_once("..") {
            let lo: u64 = lo
                .trim()
                .parse()
                .map_err(|_| Failure::new(2, format!("bad range start '{lo}'")))?;
            let hi: u64 = hi
                .trim()
                .parse()
                .map_err(|_| Failure::new(2, format!("bad range end '{hi}'")))?;
            if lo > hi {
                return Err(Failure::new(2, format!("empty range '{atom}'")));
            }
            Ok((lo..=hi).collect())
        } else {
            let v: u64 = atom
                .parse()
                .map_err(|_| Failure::new(2, format!("bad value '{atom}'")))?;
            Ok(vec![v])
        }
    })
}

fn parse_u32_list(input: &str) -> Result<Vec<u32>, Failure> {
    let values = parse_u64_list(input)?;
    values
        .into_iter()
        .map(|v| u32::try_from(v).map_err(|_| Failure::new(2, format!("value {v} too large"))))
        .collect()
}

fn parse_width_list(input: &str) -> Result<Vec<HorizontalWidth>, Failure> {
    parse_range_atoms(input, |atom| {
        if atom.eq_ignore_ascii_case("inf") {
            Ok(vec![HorizontalWidth::Infinite])
        } else if atom.contains("..") {
            Ok(parse_u64_list(atom)?
                .into_iter()
                .map(|v| {
                    u32::try_from(v)
                        .map_err(|_| Failure::new(2, format!("value {v} too large")))
                        .map(HorizontalWidth::Finite)
                })
                .collect::<Result<Vec<_>, _>>()?)
        } else {
            atom.parse::<HorizontalWidth>()
                .map(|w| vec![w])
                .map_err(|e| Failure::new(2, e.to_string()))
        }
    })
}

fn parse_claim_list(input: &str) -> Result<Vec<ClaimId>, Failure> {
    parse_range_atoms(input, |atom| {
        atom.parse::<ClaimId>()
            .map(|c| vec![c])
            .map_err(|e| Failure::new(2, e))
    })
}
