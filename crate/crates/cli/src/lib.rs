//! Command-line front end for the `osweep` library.
//!
//! [`run`] takes the full argument list (program name first) and the two
//! output streams, and returns the process exit status: 0 on success, 1 when
//! a verification or cross-check fails, 2 for usage and input errors.

pub mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use osweep::combinatorics::oracle_invert;
use osweep::invert::{HPathLabel, VibMove};
use osweep::text::{format_int_list, parse_int_list};
use osweep::{
    count, enumerate, hpath_with, inv_osweep, inv_osweep_incomplete, inv_osweep_traced, osweep, osweep_incomplete,
    sweep, verify_bijection, vib_with, BijectionReport, CheckMode, EnumerationSpec, Error, FamilyKind, IncompletePath,
    Path, PathDiagram, PermSchedule, StepMultiset, VibOptions,
};
use serde::{Deserialize, Serialize};

use crate::render::Format;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "osweep", version, about = "Order sweep maps on general Dyck paths")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply the sweep map.
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        path: String,
    },
    /// Apply the Order sweep map for a schedule.
    Osweep {
        #[arg(long, allow_hyphen_values = true)]
        path: String,
        #[command(flatten)]
        schedule: ScheduleArg,
        /// Treat the path as an incomplete Dyck path and use the lifted schedule.
        #[arg(long)]
        incomplete: bool,
    },
    /// Compute the preimage under the Order sweep map.
    Invert {
        #[arg(long, allow_hyphen_values = true)]
        path: String,
        #[command(flatten)]
        schedule: ScheduleArg,
        /// Treat the path as an incomplete Dyck path.
        #[arg(long)]
        incomplete: bool,
        /// Cross-check against a brute-force search of the family.
        #[arg(long)]
        oracle: bool,
    },
    /// List the paths of a given type.
    Enumerate {
        /// Step multiset, e.g. `1^3,-1^3`.
        #[arg(long = "type", allow_hyphen_values = true)]
        multiset: String,
        /// dyck, free or incomplete.
        #[arg(long)]
        kind: String,
        /// Print only the family size.
        #[arg(long)]
        count_only: bool,
        /// Report the family size and stop.
        #[arg(long)]
        dry_run: bool,
    },
    /// Check that the Order sweep map permutes a family and inverts exactly.
    Verify {
        #[arg(long = "type", allow_hyphen_values = true)]
        multiset: String,
        /// dyck or incomplete.
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        schedule: ScheduleArg,
        /// Report the family size and stop.
        #[arg(long)]
        dry_run: bool,
    },
    /// Show the steps of the inversion algorithms.
    Trace {
        #[arg(long, allow_hyphen_values = true)]
        path: String,
        #[command(flatten)]
        schedule: ScheduleArg,
        #[arg(long, value_enum)]
        algorithm: Algorithm,
        /// Starting ranks of the diagram (vib and hpath only).
        #[arg(long, allow_hyphen_values = true)]
        ranks: Option<String>,
    },
    /// Draw a path diagram as SVG (`.svg`) or ASCII (`.txt`).
    Render {
        #[arg(long, allow_hyphen_values = true)]
        path: String,
        /// Starting ranks; defaults to the connected path.
        #[arg(long, allow_hyphen_values = true)]
        ranks: Option<String>,
        #[arg(long)]
        out: std::path::PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct ScheduleArg {
    /// reverse, identity, cycle, a JSON table, or a file holding a JSON table.
    #[arg(long, default_value = "reverse")]
    pub schedule: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Vib,
    Hpath,
    Invosweep,
}

/// Full trace of one inversion as printed by `trace --algorithm invosweep --json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InversionTrace {
    pub minimal_ranks: Vec<i64>,
    pub balanced_ranks: Vec<i64>,
    pub vib: Vec<VibMove>,
    pub hpath: Vec<HPathLabel>,
    pub path: Path,
}

/// Output of `enumerate --count-only --json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCount {
    pub family: String,
    pub kind: FamilyKind,
    pub count: usize,
}

/// Output of `render --json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderSummary {
    pub out: String,
    pub format: String,
    pub bytes: usize,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn fail(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_FAIL,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) | Error::StepCapExceeded(_) | Error::Preimages { .. } => Failure::fail(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

type Outcome = Result<u8, Failure>;

/// Parses `args` and runs the command, writing results to `out` and
/// diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Sweep { path } => {
            let p = parse_path(path)?;
            emit_path(out, &sweep(&p), json)?;
            Ok(EXIT_OK)
        }
        Command::Osweep {
            path,
            schedule,
            incomplete,
        } => {
            let p = parse_path(path)?;
            let s = load_schedule(&schedule.schedule)?;
            let image = if *incomplete {
                osweep_incomplete(&IncompletePath::new(p)?, &s)?.into_path()
            } else {
                osweep(&p, &s)
            };
            emit_path(out, &image, json)?;
            Ok(EXIT_OK)
        }
        Command::Invert {
            path,
            schedule,
            incomplete,
            oracle,
        } => invert(out, json, path, &schedule.schedule, *incomplete, *oracle),
        Command::Enumerate {
            multiset,
            kind,
            count_only,
            dry_run,
        } => {
            let spec = EnumerationSpec::new(parse_multiset(multiset)?, parse_kind(kind)?);
            if *dry_run {
                family_size(out, json, &spec)?;
            } else if *count_only {
                let n = count(&spec)?;
                if json {
                    let doc = FamilyCount {
                        family: spec.multiset.to_string(),
                        kind: spec.kind,
                        count: n,
                    };
                    write_json(out, &doc)?;
                } else {
                    write_line(out, &n.to_string())?;
                }
            } else {
                let family = enumerate(&spec)?;
                if json {
                    write_json(out, &family)?;
                } else {
                    let mut text = String::new();
                    for p in &family {
                        text.push_str(&p.to_string());
                        text.push('\n');
                    }
                    write_str(out, &text)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            multiset,
            kind,
            schedule,
            dry_run,
        } => {
            let kind = parse_kind(kind)?;
            if kind == FamilyKind::Free {
                return Err(Failure::usage("verify supports --kind dyck or incomplete"));
            }
            let spec = EnumerationSpec::new(parse_multiset(multiset)?, kind);
            let s = load_schedule(&schedule.schedule)?;
            if *dry_run {
                family_size(out, json, &spec)?;
                return Ok(EXIT_OK);
            }
            let report = verify_bijection(&spec, &s)?;
            if json {
                write_json(out, &report)?;
            } else {
                write_str(out, &report_text(&report))?;
            }
            Ok(if report.pass { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Trace {
            path,
            schedule,
            algorithm,
            ranks,
        } => trace(out, json, path, &schedule.schedule, *algorithm, ranks.as_deref()),
        Command::Render { path, ranks, out: file } => {
            let p = parse_path(path)?;
            let diagram = match ranks {
                Some(r) => PathDiagram::new(p.into_steps(), parse_ranks(r)?)?,
                None => p.diagram(),
            };
            let name = file.to_string_lossy().into_owned();
            let format = Format::from_file_name(&name)
                .ok_or_else(|| Failure::usage(format!("cannot infer format of `{name}`: use .svg or .txt")))?;
            let doc = render::render(&diagram, format);
            std::fs::write(file, &doc).map_err(|e| Failure::usage(format!("cannot write `{name}`: {e}")))?;
            let summary = RenderSummary {
                out: name,
                format: format.name().to_string(),
                bytes: doc.len(),
            };
            if json {
                write_json(out, &summary)?;
            } else {
                write_line(
                    out,
                    &format!("wrote {} ({}, {} bytes)", summary.out, summary.format, summary.bytes),
                )?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// The `--dry-run` report: family size only.
fn family_size(out: &mut dyn Write, json: bool, spec: &EnumerationSpec) -> Result<(), Failure> {
    let doc = FamilyCount {
        family: spec.multiset.to_string(),
        kind: spec.kind,
        count: count(spec)?,
    };
    if json {
        write_json(out, &doc)
    } else {
        write_line(out, &format!("{} {}: {} paths", doc.kind, doc.family, doc.count))
    }
}

fn invert(out: &mut dyn Write, json: bool, path: &str, schedule: &str, incomplete: bool, oracle: bool) -> Outcome {
    let p = parse_path(path)?;
    let s = load_schedule(schedule)?;
    let pre = if incomplete {
        inv_osweep_incomplete(&IncompletePath::new(p.clone())?, &s)?.into_path()
    } else {
        inv_osweep(&p, &s)?
    };
    if oracle {
        let expected = if incomplete {
            incomplete_oracle(&p, &s)?
        } else {
            oracle_invert(&p, &s)?
        };
        if expected != pre {
            return Err(Failure::fail(format!(
                "inversion gave {pre} but the brute-force preimage is {expected}"
            )));
        }
    }
    emit_path(out, &pre, json)?;
    Ok(EXIT_OK)
}

/// Unique preimage of an incomplete path found by scanning its family.
fn incomplete_oracle(p: &Path, s: &PermSchedule) -> Result<Path, Failure> {
    let family = enumerate(&EnumerationSpec::incomplete(p.type_of()))?;
    let mut hits = Vec::new();
    for q in family {
        let image = osweep_incomplete(&IncompletePath::new(q.clone())?, s)?;
        if image.path() == p {
            hits.push(q);
        }
    }
    if hits.len() != 1 {
        return Err(Error::Preimages {
            path: p.to_string(),
            count: hits.len(),
        }
        .into());
    }
    Ok(hits.remove(0))
}

fn trace(
    out: &mut dyn Write,
    json: bool,
    path: &str,
    schedule: &str,
    algorithm: Algorithm,
    ranks: Option<&str>,
) -> Outcome {
    let p = parse_path(path)?;
    let s = load_schedule(schedule)?;
    let given = match ranks {
        Some(r) => Some(PathDiagram::new(p.steps().to_vec(), parse_ranks(r)?)?),
        None => None,
    };
    let vib_options = VibOptions {
        checks: CheckMode::Error,
        ..VibOptions::default()
    };
    match algorithm {
        Algorithm::Vib => {
            let start = given.unwrap_or_else(|| PathDiagram::minimal(&p));
            let (balanced, t) = vib_with(&start, &vib_options)?;
            if json {
                write_json(out, &t.moves)?;
            } else {
                let mut text = format!("initial  {}\n", format_int_list(start.ranks()));
                text.push_str(&moves_table(&t.moves));
                text.push_str(&format!("final    {}\n", format_int_list(balanced.ranks())));
                write_str(out, &text)?;
            }
        }
        Algorithm::Hpath => {
            let diagram = match given {
                Some(d) => d,
                None => vib_with(&PathDiagram::minimal(&p), &vib_options)?.0,
            };
            let (pre, t) = hpath_with(&diagram, &s, CheckMode::Error)?;
            let labels: Vec<HPathLabel> = t.labels().copied().collect();
            if json {
                write_json(out, &labels)?;
            } else {
                let mut text = format!("ranks    {}\n", format_int_list(diagram.ranks()));
                text.push_str(&labels_table(&labels));
                text.push_str(&format!("rounds   {}\n", t.rounds.len()));
                text.push_str(&format!("path     {pre}\n"));
                write_str(out, &text)?;
            }
        }
        Algorithm::Invosweep => {
            if given.is_some() {
                return Err(Failure::usage("--ranks is only used with --algorithm vib or hpath"));
            }
            let t = inv_osweep_traced(&p, &s, CheckMode::Error)?;
            let doc = InversionTrace {
                minimal_ranks: t.minimal_ranks,
                balanced_ranks: t.vib.final_ranks,
                vib: t.vib.moves,
                hpath: t.hpath.labels().copied().collect(),
                path: t.path,
            };
            if json {
                write_json(out, &doc)?;
            } else {
                let mut text = format!("minimal  {}\n", format_int_list(&doc.minimal_ranks));
                text.push_str(&moves_table(&doc.vib));
                text.push_str(&format!("balanced {}\n", format_int_list(&doc.balanced_ranks)));
                text.push_str(&labels_table(&doc.hpath));
                text.push_str(&format!("path     {}\n", doc.path));
                write_str(out, &text)?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// Right-aligned columns under a header row.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        parts.join("  ") + "\n"
    };
    let mut s = line(headers.to_vec());
    for row in rows {
        s.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    s
}

fn moves_table(moves: &[VibMove]) -> String {
    let rows: Vec<Vec<String>> = moves
        .iter()
        .map(|m| {
            vec![
                m.step.to_string(),
                m.row.to_string(),
                m.column.to_string(),
                m.before.to_string(),
                m.after.to_string(),
            ]
        })
        .collect();
    table(&["step", "row", "column", "before", "after"], &rows)
}

fn labels_table(labels: &[HPathLabel]) -> String {
    let rows: Vec<Vec<String>> = labels
        .iter()
        .map(|l| {
            vec![
                l.round.to_string(),
                l.i.to_string(),
                l.column.to_string(),
                l.level.to_string(),
            ]
        })
        .collect();
    table(&["round", "i", "column", "level"], &rows)
}

fn report_text(r: &BijectionReport) -> String {
    let rows = [
        ("family", r.family.clone()),
        ("kind", r.kind.to_string()),
        ("size", r.size.to_string()),
        ("schedule", r.schedule.clone()),
        ("injective", r.injective.to_string()),
        ("closed", r.closed.to_string()),
        ("roundtrip", r.roundtrip.to_string()),
        ("pass", r.pass.to_string()),
    ];
    rows.iter().map(|(k, v)| format!("{k:<10} {v}\n")).collect()
}

fn parse_path(s: &str) -> Result<Path, Failure> {
    s.parse::<Path>().map_err(|e| Failure::usage(format!("--path: {e}")))
}

fn parse_ranks(s: &str) -> Result<Vec<i64>, Failure> {
    parse_int_list(s).map_err(|e| Failure::usage(format!("--ranks: {e}")))
}

fn parse_multiset(s: &str) -> Result<StepMultiset, Failure> {
    s.parse::<StepMultiset>()
        .map_err(|e| Failure::usage(format!("--type: {e}")))
}

fn parse_kind(s: &str) -> Result<FamilyKind, Failure> {
    s.parse::<FamilyKind>()
        .map_err(|e| Failure::usage(format!("--kind: {e}")))
}

/// A builtin name or inline JSON is parsed directly; anything else naming an
/// existing file is read and parsed as a JSON table.
fn load_schedule(arg: &str) -> Result<PermSchedule, Failure> {
    let direct = PermSchedule::parse(arg);
    if direct.is_err() {
        let file = std::path::Path::new(arg);
        if file.is_file() {
            let text = std::fs::read_to_string(file)
                .map_err(|e| Failure::usage(format!("--schedule: cannot read `{arg}`: {e}")))?;
            return PermSchedule::parse(&text).map_err(|e| Failure::usage(format!("--schedule `{arg}`: {e}")));
        }
    }
    direct.map_err(|e| Failure::usage(format!("--schedule: {e}")))
}

fn emit_path(out: &mut dyn Write, p: &Path, json: bool) -> Result<(), Failure> {
    if json {
        write_json(out, p)
    } else {
        write_line(out, &p.to_string())
    }
}

fn write_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure::fail(e.to_string()))?;
    write_line(out, &text)
}

fn write_line(out: &mut dyn Write, line: &str) -> Result<(), Failure> {
    writeln!(out, "{line}").map_err(|e| Failure::fail(e.to_string()))
}

fn write_str(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::fail(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("osweep").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn sweep_prints_path() {
        assert_eq!(
            run_str(&["sweep", "--path", "2,0,2,-3,1,-2"]),
            (0, "2,1,-2,2,0,-3\n".into(), String::new())
        );
    }

    #[test]
    fn json_flag_after_subcommand() {
        let (code, out, _) = run_str(&["sweep", "--path", "1,-1", "--json"]);
        assert_eq!((code, out.as_str()), (0, "[1,-1]\n"));
    }

    #[test]
    fn bad_token_is_named() {
        let (code, _, err) = run_str(&["sweep", "--path", "1,x,-1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("`x`"), "{err}");
    }

    #[test]
    fn table_alignment() {
        let t = table(&["a", "bb"], &[vec!["10".into(), "1".into()]]);
        assert_eq!(t, " a  bb\n10   1\n");
    }
}
