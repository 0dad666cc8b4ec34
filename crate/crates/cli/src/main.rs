use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use dspkit::catalog::{self, CatalogEntry, SeriesId};
use dspkit::enumerate::{enumerate_rigid, enumerate_rigid_with_jobs, EnumConstraints};
use dspkit::genericity::{self, EigenvalueAssignment, GenericityReport, Mode};
use dspkit::jnf::{parse_pmv, JnfTupleJson};
use dspkit::reduction::{check_conditions, decide, ConditionReport, TraceJson, Verdict};
use dspkit::rigidity::{defect, min_d_mv};
use dspkit::{ConjugacyShape, Error, JnfTuple, Partition, Pmv, ShapeTuple};

#[derive(Parser)]
#[command(name = "dspkit", version, about = "Solvability of Deligne-Simpson problems for generic eigenvalues")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide solvability and name the reduction chain.
    Decide(TupleInput),
    /// Show every reduction step with its condition slacks.
    Trace(TupleInput),
    /// Dimensions, defect and conditions of a tuple.
    Defect(TupleInput),
    /// Enumerate solvable tuples of multiplicity vectors.
    EnumRigid(EnumArgs),
    /// Print a catalog series instance such as `W_2` or `1a_22`.
    Series { id: String },
    /// Reduce a series instance and name every step.
    Chain { id: String },
    /// Dual of a partition, or the diagonal form corresponding to a JNF.
    Dual {
        /// JNF as JSON, e.g. '{"eigenvalues":[[4,2,2]]}'.
        #[arg(long, conflicts_with = "partition", required_unless_present = "partition")]
        jnf: Option<String>,
        #[arg(long)]
        partition: Option<String>,
    },
    /// Multiplicity vector of size n and rank r with the least d.
    MinD {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
    },
    /// Search an eigenvalue assignment for non-genericity relations.
    GenericCheck {
        /// Assignment as JSON.
        #[arg(required_unless_present = "file")]
        assignment: Option<String>,
        /// JSON lines of assignments.
        #[arg(long, conflicts_with = "assignment")]
        file: Option<PathBuf>,
    },
    /// Produce a certified generic eigenvalue assignment.
    GenericGen {
        tuple: String,
        #[arg(long, default_value = "additive")]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check defect, solvability and chain naming of every catalog instance.
    CatalogVerify {
        #[arg(long, default_value_t = 60)]
        max_n: u64,
    },
}

#[derive(Args)]
struct TupleInput {
    /// `(2,2,1);(3,2);(4,1)`, `{(2,2)};{(3,1)}` or JNF tuple JSON.
    #[arg(required_unless_present = "file")]
    tuple: Option<String>,
    /// JSON lines, each a tuple string or a JNF tuple object.
    #[arg(long, conflicts_with = "tuple")]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, default_value_t = 3)]
    entries: usize,
    /// Cap on the largest multiplicity of one entry.
    #[arg(long)]
    u: Option<u64>,
    #[arg(long)]
    no_all_ones: bool,
    #[arg(long)]
    no_scalar: bool,
    /// Required value of 2n² − Σd.
    #[arg(long, default_value_t = 2)]
    defect: i64,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
}

enum Tuple {
    Diagonal(Pmv),
    General(JnfTuple),
}

fn parse_tuple(text: &str) -> Result<Tuple, Error> {
    let trimmed = text.trim();
    let tuple = if trimmed.starts_with('{') && trimmed.contains('"') {
        let raw: JnfTupleJson = serde_json::from_str(trimmed)
            .map_err(|e| Error::Parse(format!("JNF tuple JSON: {e}")))?;
        let t = raw.to_tuple()?;
        match t.as_pmv() {
            Some(p) => Tuple::Diagonal(p),
            None => Tuple::General(t),
        }
    } else if trimmed.starts_with('{') {
        let t: JnfTuple = trimmed.parse()?;
        match t.as_pmv() {
            Some(p) => Tuple::Diagonal(p),
            None => Tuple::General(t),
        }
    } else {
        let (t, reordered) = parse_pmv(trimmed)?;
        if reordered {
            eprintln!("warning: multiplicities reordered to {t}");
        }
        Tuple::Diagonal(t)
    };
    Ok(tuple)
}

fn read_lines(path: &Path) -> Result<Vec<String>, Error> {
    let file = std::fs::File::open(path)
        .map_err(|e| Error::Parse(format!("cannot open {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::Parse(format!("{}:{}: {e}", path.display(), i + 1)))?;
        if !line.trim().is_empty() {
            out.push(line);
        }
    }
    Ok(out)
}

/// Tuples from the positional argument, or one per JSON line of `--file`.
fn tuples_of(input: &TupleInput) -> Result<Vec<Tuple>, Error> {
    if let Some(path) = &input.file {
        return read_lines(path)?
            .iter()
            .enumerate()
            .map(|(i, line)| {
                let text = match serde_json::from_str::<serde_json::Value>(line) {
                    Ok(serde_json::Value::String(s)) => s,
                    Ok(serde_json::Value::Object(_)) => line.clone(),
                    _ => {
                        return Err(Error::Parse(format!(
                            "line {}: expected a JSON string or object",
                            i + 1
                        )))
                    }
                };
                parse_tuple(&text)
                    .map_err(|e| Error::Parse(format!("line {}: {e}", i + 1)))
            })
            .collect();
    }
    Ok(vec![parse_tuple(input.tuple.as_deref().unwrap_or_default())?])
}

#[derive(Serialize, Deserialize)]
struct DecideJson {
    tuple: String,
    n: u64,
    verdict: Verdict,
    /// Catalog name of every step, for diagonal tuples.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    chain: Option<Vec<Option<SeriesId>>>,
}

#[derive(Serialize, Deserialize)]
struct DefectJson {
    tuple: String,
    n: u64,
    r_values: Vec<u64>,
    d_values: Vec<u64>,
    d_sum: u64,
    defect: i64,
    rigid: bool,
    conditions: ConditionReport,
}

#[derive(Serialize, Deserialize)]
struct VerifyFailure {
    series: SeriesId,
    problem: String,
}

#[derive(Serialize, Deserialize)]
struct VerifyJson {
    checked: usize,
    failures: Vec<VerifyFailure>,
}

fn reason_text(v: &Verdict) -> String {
    let word = if v.solvable { "Solvable" } else { "NotSolvable" };
    format!("{word} ({:?} at step {})", v.reason, v.at_step)
}

fn chain_text(chain: &[Option<SeriesId>]) -> String {
    chain
        .iter()
        .map(|id| id.map_or_else(|| "?".to_string(), |id| id.to_string()))
        .collect::<Vec<_>>()
        .join(" -> ")
}

fn decide_one(t: &Tuple) -> DecideJson {
    match t {
        Tuple::Diagonal(p) => {
            let trace = decide(p);
            let start = catalog::identify(p).first().copied();
            DecideJson {
                tuple: p.to_string(),
                n: p.n(),
                verdict: trace.verdict.clone(),
                chain: Some(catalog::name_trace(&trace, start)),
            }
        }
        Tuple::General(j) => DecideJson {
            tuple: j.to_string(),
            n: j.n(),
            verdict: decide(j).verdict,
            chain: None,
        },
    }
}

fn defect_of<S: ConjugacyShape + std::fmt::Display>(t: &ShapeTuple<S>) -> DefectJson {
    let defect = defect(t);
    DefectJson {
        tuple: t.to_string(),
        n: t.n(),
        r_values: t.r_values(),
        d_values: t.d_values(),
        d_sum: t.d_sum(),
        defect,
        rigid: defect == 2,
        conditions: check_conditions(&t.without_scalars().0),
    }
}

fn trace_of(t: &Tuple) -> TraceJson {
    match t {
        Tuple::Diagonal(p) => decide(p).to_json(),
        Tuple::General(j) => decide(j).to_json(),
    }
}

struct Out {
    json: bool,
    buf: String,
}

impl Out {
    fn emit<T: Serialize>(&mut self, value: &T, text: impl FnOnce() -> String) {
        let line = if self.json {
            serde_json::to_string(value).expect("payloads serialize")
        } else {
            text()
        };
        self.buf.push_str(&line);
        self.buf.push('\n');
    }
}

/// Runs one command. `Ok(false)` reports a domain failure.
fn run(cli: &Cli, out: &mut Out) -> Result<bool, Error> {
    match &cli.command {
        Command::Decide(input) => {
            for t in tuples_of(input)? {
                let d = decide_one(&t);
                out.emit(&d, || {
                    let mut s = format!("{}\t{}", d.tuple, reason_text(&d.verdict));
                    if let Some(chain) = &d.chain {
                        s.push_str(&format!("\nchain: {}", chain_text(chain)));
                    }
                    s
                });
            }
        }
        Command::Trace(input) => {
            for t in tuples_of(input)? {
                let trace = trace_of(&t);
                out.emit(&trace, || {
                    let mut lines: Vec<String> = trace
                        .steps
                        .iter()
                        .enumerate()
                        .map(|(i, s)| {
                            format!(
                                "{i}\tn={}\t{}\talpha={}\tbeta={:?}\tomega={}{}",
                                s.n,
                                s.tuple,
                                s.conditions.alpha.slack,
                                s.conditions.beta.margins,
                                s.conditions.omega.slack,
                                s.n1.map_or(String::new(), |n1| format!("\tn1={n1}"))
                            )
                        })
                        .collect();
                    lines.push(reason_text(&trace.verdict));
                    lines.join("\n")
                });
            }
        }
        Command::Defect(input) => {
            for t in tuples_of(input)? {
                let d = match &t {
                    Tuple::Diagonal(p) => defect_of(p),
                    Tuple::General(j) => defect_of(j),
                };
                out.emit(&d, || {
                    format!(
                        "{}\tn={}\tr={:?}\td={:?}\tsum_d={}\tdefect={}{}",
                        d.tuple,
                        d.n,
                        d.r_values,
                        d.d_values,
                        d.d_sum,
                        d.defect,
                        if d.rigid { "\trigid" } else { "" }
                    )
                });
            }
        }
        Command::EnumRigid(a) => {
            let c = EnumConstraints {
                n: a.n,
                num_entries: a.entries,
                max_first_part: a.u,
                forbid_all_ones: a.no_all_ones,
                forbid_scalar: a.no_scalar,
                require_defect: Some(a.defect),
            };
            let found = match a.jobs {
                Some(jobs) => enumerate_rigid_with_jobs(&c, jobs)?,
                None => enumerate_rigid(&c)?,
            };
            let entries: Vec<CatalogEntry> = found.iter().map(CatalogEntry::from_tuple).collect();
            out.emit(&entries, || {
                found
                    .iter()
                    .zip(&entries)
                    .map(|(t, e)| format!("{t}\t{}", e.series_names.join(",")))
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Command::Series { id } => {
            let id: SeriesId = id.parse()?;
            let t = catalog::series(id)?;
            let entry = CatalogEntry::from_tuple(&t);
            out.emit(&entry, || t.to_string());
        }
        Command::Chain { id } => {
            let id: SeriesId = id.parse()?;
            let chain = catalog::verify_chain(id)?;
            out.emit(&chain, || {
                chain.iter().map(ToString::to_string).collect::<Vec<_>>().join(" -> ")
            });
        }
        Command::Dual { jnf, partition } => {
            let p: Partition = match (jnf, partition) {
                (Some(j), _) => {
                    let raw: dspkit::jnf::JnfJson = serde_json::from_str(j)
                        .map_err(|e| Error::Parse(format!("JNF JSON: {e}")))?;
                    raw.to_jnf()?.corresponding_diagonal().partition().clone()
                }
                (None, Some(s)) => s.parse::<Partition>()?.dual(),
                (None, None) => unreachable!("clap requires one of the two"),
            };
            out.emit(&p.parts(), || p.to_string());
        }
        Command::MinD { n, r } => {
            let m = min_d_mv(*n, *r)?;
            out.emit(&m.parts(), || m.to_string());
        }
        Command::GenericCheck { assignment, file } => {
            let raws = match file {
                Some(path) => read_lines(path)?,
                None => vec![assignment.clone().unwrap_or_default()],
            };
            for raw in raws {
                let a: EigenvalueAssignment = serde_json::from_str(&raw)
                    .map_err(|e| Error::Parse(format!("assignment JSON: {e}")))?;
                let report: GenericityReport = genericity::is_generic(&a)?;
                out.emit(&report, || match &report.witness {
                    None => "generic".to_string(),
                    Some(w) => format!(
                        "not generic: kappa={} sub_multiplicities={:?}",
                        w.kappa, w.sub_multiplicities
                    ),
                });
            }
        }
        Command::GenericGen { tuple, mode, seed } => {
            let a = match parse_tuple(tuple)? {
                Tuple::Diagonal(p) => genericity::generate_generic(&p, *mode, *seed)?,
                Tuple::General(j) => genericity::generate_generic(&j, *mode, *seed)?,
            };
            out.emit(&a, || {
                a.entries
                    .iter()
                    .map(|e| {
                        e.iter()
                            .map(|v| format!("[{}]^{}", v.coeffs, v.mult))
                            .collect::<Vec<_>>()
                            .join("  ")
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            });
        }
        Command::CatalogVerify { max_n } => {
            let instances = catalog::all_instances(*max_n);
            let mut failures = Vec::new();
            for (id, t) in &instances {
                let problem = if defect(t) != 2 {
                    Some(format!("defect {}", defect(t)))
                } else {
                    catalog::verify_chain(*id).err().map(|e| e.to_string())
                };
                if let Some(problem) = problem {
                    failures.push(VerifyFailure { series: *id, problem });
                }
            }
            let report = VerifyJson {
                checked: instances.len(),
                failures,
            };
            let ok = report.failures.is_empty();
            out.emit(&report, || {
                let mut lines = vec![format!(
                    "checked {} instances, {} failures",
                    report.checked,
                    report.failures.len()
                )];
                lines.extend(report.failures.iter().map(|f| format!("{}: {}", f.series, f.problem)));
                lines.join("\n")
            });
            return Ok(ok);
        }
    }
    Ok(true)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidInput(_) | Error::ParameterOutOfRange { .. } => 2,
        Error::ResourceExceeded(_) | Error::SizeExceeded { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out {
        json: cli.json,
        buf: String::new(),
    };
    let result = run(&cli, &mut out);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.buf.as_bytes());
    let _ = stdout.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
