//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::burge::{burge_transpose, phi, Biword};
use crate::enumerate::{gen_d_ascent_sequences, gen_modified, gen_r_set, gen_self_modified, SelfModMethod};
use crate::error::{Error, Result};
use crate::genfun::{
    des_poly, fib_poly, fibotorial, k_poly, limit_series, self_gf, shifted_self, stirling_series, BivarSeries,
    IntPolynomial, Monomial,
};
use crate::hat::{hat, render_trace, unhat};
use crate::perm::{d_activity, find_barred_31524, find_classical, find_f, find_f_d, find_s_d, Permutation};
use crate::verify::{default_bounds, verify_theorem, Bounds, Report, CHECKS};
use crate::word::{Letter, Word};

#[derive(Debug, Parser)]
#[command(name = "dascent", version, about = "d-ascent sequences, the hat map and d-Fishburn permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// d-ascent sequences
    Ascseq,
    /// self-modified d-ascent sequences
    Selfmod,
    /// modified d-ascent sequences
    Modified,
    /// RGFs whose blocks each hold at most one letter
    Rset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Filter,
    Blocks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Series {
    Fib,
    Fibotorial,
    K,
    #[value(name = "self")]
    SelfMod,
    Shifted,
    Limit,
    Stirling,
    Des,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableId {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List a family of words of length n in lexicographic order
    Enumerate {
        family: Family,
        #[arg(long, default_value_t = 0)]
        d: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Filter)]
        method: Method,
    },
    /// Apply hat_d to a d-ascent sequence
    Hat {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        word: String,
        /// Print each modification step
        #[arg(long, conflicts_with = "invert")]
        trace: bool,
        /// Recover the d-ascent sequence from a modified one
        #[arg(long)]
        invert: bool,
    },
    /// Burge transpose of a biword
    Transpose {
        #[arg(long)]
        top: String,
        #[arg(long)]
        bottom: String,
    },
    /// The d-Fishburn permutation of a d-ascent sequence
    Phi {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        word: String,
    },
    /// d-active and d-inactive values of a permutation
    Activity {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        perm: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Test a permutation for a pattern: f, f_d, barred, s_d or classical:<perm>
    Check {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        perm: String,
        #[arg(long)]
        d: Option<u64>,
        /// Also print the first occurrence
        #[arg(long)]
        witness: bool,
    },
    /// Polynomials and truncated series
    Gf {
        series: Series,
        #[arg(long, default_value_t = 0)]
        d: u64,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        trunc: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a named exhaustive check, or `all`
    Verify {
        name: String,
        #[arg(long)]
        max_d: Option<u64>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit a count table computed from the series at q = 1
    Table {
        id: TableId,
        #[arg(long)]
        max_d: u64,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code: 0 on success, 1 when a verification fails, 2 on bad input.
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
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn usage(reason: &str) -> Error {
    Error::Precondition(reason.to_string())
}

fn lines<I: IntoIterator<Item = Word>>(words: I) -> String {
    let mut s = String::new();
    for w in words {
        let _ = writeln!(s, "{w}");
    }
    s
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn execute(cmd: Command) -> Result<(String, i32)> {
    let text = match cmd {
        Command::Enumerate { family, d, n, method } => match family {
            Family::Ascseq => lines(gen_d_ascent_sequences(d, n)),
            Family::Selfmod => {
                let m = match method {
                    Method::Filter => SelfModMethod::Filter,
                    Method::Blocks => SelfModMethod::Blocks,
                };
                lines(gen_self_modified(d, n, m))
            }
            Family::Modified => lines(gen_modified(d, n)),
            Family::Rset => lines(gen_r_set(n)),
        },
        Command::Hat { d, word, trace, invert } => {
            let w: Word = word.parse()?;
            if invert {
                format!("{}\n", unhat(&w, d)?)
            } else if trace {
                render_trace(&w, d)?
            } else {
                format!("{}\n", hat(&w, d)?.modified)
            }
        }
        Command::Transpose { top, bottom } => {
            let b = Biword::new(top.parse()?, bottom.parse()?)?;
            format!("{}\n", burge_transpose(&b)?)
        }
        Command::Phi { d, word } => {
            let w: Word = word.parse()?;
            format!("{}\n", phi(&w, d)?)
        }
        Command::Activity { d, perm, format } => {
            let p: Permutation = perm.parse()?;
            let t = d_activity(&p, d);
            match format {
                Format::Json => to_json(&t),
                Format::Text => format!("active {}\ninactive {}\n", braces(&t.active), braces(&t.inactive)),
                Format::Csv => return Err(usage("activity supports --format text or json")),
            }
        }
        Command::Check { pattern, perm, d, witness } => check(&pattern, &perm, d, witness)?,
        Command::Gf { series, d, n, trunc, format } => gf(series, d, n, trunc, format)?,
        Command::Verify { name, max_d, max_n, format } => return verify(&name, max_d, max_n, format),
        Command::Table { id, max_d, max_n, format } => table(id, max_d, max_n, format)?,
    };
    Ok((text, 0))
}

fn braces(v: &[Letter]) -> String {
    let inner: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn check(pattern: &str, perm: &str, d: Option<u64>, witness: bool) -> Result<String> {
    let p: Permutation = perm.parse()?;
    let need_d = || d.ok_or_else(|| usage("this pattern needs --d"));
    let found: Option<Vec<usize>> = match pattern {
        "f" => find_f(&p).map(|w| w.to_vec()),
        "f_d" => find_f_d(&p, need_d()?).map(|w| w.to_vec()),
        "barred" => find_barred_31524(&p).map(|w| w.to_vec()),
        "s_d" => find_s_d(&p, need_d()?).map(|w| w.to_vec()),
        other => match other.strip_prefix("classical:") {
            Some(t) => find_classical(&p, &t.parse()?),
            None => {
                return Err(Error::Parse {
                    input: other.to_string(),
                    reason: "expected f, f_d, barred, s_d or classical:<perm>".into(),
                })
            }
        },
    };
    let mut s = format!("{}\n", found.is_some());
    if let (true, Some(w)) = (witness, &found) {
        let idx: Vec<String> = w.iter().map(|i| i.to_string()).collect();
        let _ = writeln!(s, "{}", idx.join(","));
    }
    Ok(s)
}

#[derive(Serialize)]
struct SeriesRow {
    x: usize,
    coeff: Vec<Monomial>,
}

fn render_poly(p: &IntPolynomial, var: &str, format: Format) -> Result<String> {
    match format {
        Format::Text => Ok(p.display_in(var) + "\n"),
        Format::Json => Ok(to_json(&p.monomials())),
        Format::Csv => Err(usage("gf supports --format text or json")),
    }
}

fn render_series(s: &BivarSeries, format: Format) -> Result<String> {
    match format {
        Format::Text => {
            let mut out = String::new();
            for (n, row) in s.rows().iter().enumerate() {
                let _ = writeln!(out, "x^{n}: {}", row.display_in("q"));
            }
            Ok(out)
        }
        Format::Json => {
            let rows: Vec<SeriesRow> =
                s.rows().iter().enumerate().map(|(x, r)| SeriesRow { x, coeff: r.monomials() }).collect();
            Ok(to_json(&rows))
        }
        Format::Csv => Err(usage("gf supports --format text or json")),
    }
}

fn gf(series: Series, d: u64, n: Option<u64>, trunc: Option<usize>, format: Format) -> Result<String> {
    let need_n = || n.ok_or_else(|| usage("this series needs --n"));
    let order = || trunc.or(n.map(|n| n as usize)).ok_or_else(|| usage("this series needs --trunc"));
    match series {
        Series::Fib => render_poly(&fib_poly(d, need_n()? as i64, trunc)?, "x", format),
        Series::Fibotorial => render_poly(&fibotorial(d, need_n()?, trunc)?, "x", format),
        Series::K => render_poly(&k_poly(d, need_n()?, trunc)?, "x", format),
        Series::Des => render_poly(&des_poly(d, need_n()?)?, "q", format),
        Series::SelfMod => render_series(&self_gf(d, order()?)?, format),
        Series::Shifted => render_series(&shifted_self(d, order()?)?, format),
        Series::Limit => render_series(&limit_series(order()?)?, format),
        Series::Stirling => render_series(&stirling_series(order()?)?, format),
    }
}

fn verify(name: &str, max_d: Option<u64>, max_n: Option<usize>, format: Format) -> Result<(String, i32)> {
    let names: Vec<&str> = if name == "all" { CHECKS.to_vec() } else { vec![name] };
    let mut reports: Vec<Report> = Vec::new();
    for name in names {
        let def = default_bounds(name)?;
        let bounds = Bounds::new(max_d.unwrap_or(def.max_d), max_n.unwrap_or(def.max_n));
        reports.push(verify_theorem(name, bounds)?);
    }
    let code = if reports.iter().all(|r| r.passed) { 0 } else { 1 };
    let text = match format {
        Format::Json if reports.len() == 1 => to_json(&reports[0]),
        Format::Json => to_json(&reports),
        Format::Text => reports.iter().map(|r| r.to_text() + "\n").collect(),
        Format::Csv => return Err(usage("verify supports --format text or json")),
    };
    Ok((text, code))
}

/// Rows `d = 0..=max_d`, columns `n = 0..=max_n`.
pub fn table_values(table: u8, max_d: u64, max_n: usize) -> Result<Vec<Vec<i64>>> {
    (0..=max_d)
        .map(|d| match table {
            1 => self_gf(d, max_n)?.at_q1(),
            2 => shifted_self(d, max_n)?.at_q1(),
            _ => Err(usage("table must be 1 or 2")),
        })
        .collect()
}

/// CSV with header `d\n,0,1,…` and one row per `d`.
pub fn table_csv(rows: &[Vec<i64>]) -> String {
    let width = rows.first().map_or(0, |r| r.len());
    let mut s = String::from("d\\n");
    for n in 0..width {
        let _ = write!(s, ",{n}");
    }
    s.push('\n');
    for (d, row) in rows.iter().enumerate() {
        let _ = write!(s, "{d}");
        for v in row {
            let _ = write!(s, ",{v}");
        }
        s.push('\n');
    }
    s
}

fn table_text(rows: &[Vec<i64>]) -> String {
    let width = rows.first().map_or(0, |r| r.len());
    let mut cells: Vec<Vec<String>> =
        vec![std::iter::once("d\\n".to_string()).chain((0..width).map(|n| n.to_string())).collect()];
    for (d, row) in rows.iter().enumerate() {
        cells.push(std::iter::once(d.to_string()).chain(row.iter().map(|v| v.to_string())).collect());
    }
    let widths: Vec<usize> = (0..=width).map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
    let mut s = String::new();
    for r in &cells {
        let line: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        let _ = writeln!(s, "{}", line.join(" "));
    }
    s
}

fn table(id: TableId, max_d: u64, max_n: usize, format: Format) -> Result<String> {
    let rows = table_values(if id == TableId::One { 1 } else { 2 }, max_d, max_n)?;
    match format {
        Format::Csv => Ok(table_csv(&rows)),
        Format::Text => Ok(table_text(&rows)),
        Format::Json => Ok(to_json(&rows)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("dascent").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn basic_commands() {
        assert_eq!(call(&["phi", "--d", "2", "--word", "1124253"]), (0, "2537146\n".into(), String::new()));
        assert_eq!(call(&["enumerate", "ascseq", "--d", "0", "--n", "3"]).1, "111\n112\n121\n122\n123\n");
        assert_eq!(call(&["hat", "--d", "2", "--word", "1124253"]).1, "3124253\n");
        assert_eq!(call(&["hat", "--d", "2", "--word", "3124253", "--invert"]).1, "1124253\n");
        assert_eq!(call(&["activity", "--d", "2", "--perm", "2573164"]).1, "active {1,2,3,4,6}\ninactive {5,7}\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["phi", "--d", "0", "--word", "1124253"]).0, 2);
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(call(&["check", "--pattern", "f_d", "--perm", "21"]).0, 2);
        let (code, _, err) = call(&["activity", "--d", "1", "--perm", "1223"]);
        assert_eq!(code, 2);
        assert!(err.contains("not a permutation"), "{err}");
        assert_eq!(call(&["verify", "nope"]).0, 2);
    }

    #[test]
    fn table_header() {
        let (code, out, _) = call(&["table", "1", "--max-d", "1", "--max-n", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "d\\n,0,1,2\n0,1,1,2\n1,1,1,1\n");
    }
}
