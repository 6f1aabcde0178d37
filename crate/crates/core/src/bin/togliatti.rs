use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use togliatti::cache::{ideal_key, target_key, Cache};
use togliatti::report::{analyze, Checks};
use togliatti::smoothness::polygon_svg;
use togliatti::survey::enumerate::DEFAULT_BUDGET;
use togliatti::survey::reproduce::{reproduce_with, target};
use togliatti::survey::{enumerate, survey_row, target_names, write_csv, EnumerationConfig, Filter, TargetVerdict};
use togliatti::{Error, MonomialIdeal, Result};

#[derive(Parser)]
#[command(name = "togliatti", version, about = "Monomial Togliatti systems: WLP, minimality, smoothness, stability")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one ideal given inline (`x0^3,x1^3,x2^3,x0*x1*x2`) or as a file.
    Analyze {
        ideal: String,
        /// Number of variables minus one, when it cannot be read off the input.
        #[arg(long)]
        n: Option<usize>,
        /// `all` or a comma-separated subset of wlp,togliatti,smoothness,stability.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write an SVG of the polygon (n = 2 only).
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Include wall-clock timing in the report.
        #[arg(long)]
        timing: bool,
    },
    /// List ideals (x0^d, ..., xn^d) + further monomials with MU generators in total.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        mu: usize,
        /// Comma-separated: togliatti, minimal, smooth, trivial, nontrivial.
        #[arg(long, default_value = "")]
        filter: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Check a registered classification target, or all of them.
    Reproduce {
        #[arg(required_unless_present_any = ["all", "list"])]
        target: Option<String>,
        #[arg(long, conflicts_with = "target")]
        all: bool,
        /// Print the registered target names and exit.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Orbit counts per (n, d, mu) as CSV.
    Survey {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        /// One value or an inclusive range such as `5..7`.
        #[arg(long)]
        mu: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[arg(long)]
    threads: Option<usize>,
    /// One representative per orbit of coordinate permutations.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    up_to_symmetry: bool,
}

impl RunArgs {
    fn config(&self) -> EnumerationConfig {
        EnumerationConfig {
            budget: self.budget,
            up_to_symmetry: self.up_to_symmetry,
            threads: self.threads,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(io::BufWriter::new(fs::File::create(p)?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn read_ideal(spec: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let path = Path::new(spec);
    let text = if path.is_file() { fs::read_to_string(path)? } else { spec.to_string() };
    if text.trim_start().starts_with('{') {
        MonomialIdeal::from_json_str(&text)
    } else {
        MonomialIdeal::parse_inline(text.trim(), n)
    }
}

fn json_line<T: serde::Serialize>(w: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *w, value)?;
    writeln!(w)?;
    Ok(())
}

fn parse_mu_range(text: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidArgument(format!("bad --mu `{text}`"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![num(text)?]),
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Analyze {
            ideal,
            n,
            checks,
            format,
            out,
            svg,
            timing,
        } => {
            let ideal = read_ideal(&ideal, n)?;
            let selected = Checks::parse(&checks)?;
            if let Some(path) = svg {
                fs::write(path, polygon_svg(&ideal)?)?;
            }
            let cache = if format == Format::Json && !timing { Cache::from_env()? } else { None };
            let (key, input) = (ideal_key(&ideal, &checks), ideal.to_inline());
            let mut w = sink(&out)?;
            if let Some(value) = cache.as_ref().map(|c| c.get(&key, &input)).transpose()?.flatten() {
                json_line(&mut w, &value)?;
                return Ok(0);
            }
            let mut report = analyze(&ideal, selected);
            if !timing {
                report = report.without_timing();
            }
            match format {
                Format::Json => {
                    json_line(&mut w, &report)?;
                    if let Some(c) = &cache {
                        c.put(&key, &input, &report)?;
                    }
                }
                Format::Text => write!(w, "{}", report.to_text())?,
                Format::Csv => {
                    let (header, row) = report.csv_record();
                    let mut c = csv::Writer::from_writer(w);
                    c.write_record(header).map_err(csv_err)?;
                    c.write_record(row).map_err(csv_err)?;
                    c.flush()?;
                    return Ok(0);
                }
            }
            w.flush()?;
            Ok(0)
        }
        Command::Enumerate {
            n,
            d,
            mu,
            filter,
            format,
            out,
            run,
        } => {
            let filters = Filter::parse_list(&filter)?;
            if mu < n + 1 {
                return Err(Error::InvalidArgument(format!("--mu {mu} is below the {} pure powers", n + 1)));
            }
            let found = enumerate(n, d, mu - (n + 1), &filters, &run.config())?;
            let mut w = sink(&out)?;
            match format {
                Format::Json => json_line(&mut w, &found)?,
                Format::Csv | Format::Text => {
                    let mut c = csv::Writer::from_writer(w);
                    c.write_record(["n", "d", "r", "ideal"]).map_err(csv_err)?;
                    for i in &found {
                        c.write_record([n.to_string(), d.to_string(), i.num_generators().to_string(), i.to_inline()])
                            .map_err(csv_err)?;
                    }
                    c.flush()?;
                    return Ok(0);
                }
            }
            w.flush()?;
            Ok(0)
        }
        Command::Reproduce {
            target: name,
            all,
            list,
            format,
            out,
            run,
        } => {
            if list {
                for t in target_names() {
                    println!("{t}");
                }
                return Ok(0);
            }
            let names = if all { target_names() } else { vec![name.expect("clap requires a target")] };
            for n in &names {
                target(n)?;
            }
            let cache = Cache::from_env()?;
            let config = run.config();
            let mut verdicts: Vec<TargetVerdict> = Vec::new();
            for (k, name) in names.iter().enumerate() {
                if names.len() > 1 {
                    eprintln!("[{}/{}] {name}", k + 1, names.len());
                }
                let key = target_key(name);
                let cached = match &cache {
                    Some(c) => c.get(&key, name)?.and_then(|v| serde_json::from_value(v).ok()),
                    None => None,
                };
                let v = match cached {
                    Some(v) => v,
                    None => {
                        let v = reproduce_with(name, &config)?;
                        if let Some(c) = &cache {
                            c.put(&key, name, &v)?;
                        }
                        v
                    }
                };
                verdicts.push(v);
            }
            let mut w = sink(&out)?;
            match format {
                Format::Json => json_line(&mut w, &verdicts)?,
                Format::Csv => {
                    let mut c = csv::Writer::from_writer(&mut w);
                    c.write_record(["target", "passed", "diffs"]).map_err(csv_err)?;
                    for v in &verdicts {
                        let diffs: Vec<&str> = v.checks.iter().flat_map(|c| &c.diffs).map(String::as_str).collect();
                        c.write_record([v.name.as_str(), if v.passed { "true" } else { "false" }, &diffs.join("; ")])
                            .map_err(csv_err)?;
                    }
                    c.flush()?;
                }
                Format::Text => {
                    for v in &verdicts {
                        writeln!(w, "{} {}: {}", if v.passed { "PASS" } else { "FAIL" }, v.name, v.description)?;
                        for c in &v.checks {
                            writeln!(w, "  [{}] {}", if c.passed { "ok" } else { "diff" }, c.check)?;
                            writeln!(w, "      expected {}", c.expected)?;
                            writeln!(w, "      observed {}", c.observed)?;
                            for d in &c.diffs {
                                writeln!(w, "      - {d}")?;
                            }
                        }
                    }
                    let passed = verdicts.iter().filter(|v| v.passed).count();
                    writeln!(w, "{passed}/{} targets passed", verdicts.len())?;
                }
            }
            w.flush()?;
            Ok(if verdicts.iter().all(|v| v.passed) { 0 } else { 1 })
        }
        Command::Survey { n, d, mu, out, run } => {
            let config = run.config();
            let rows = parse_mu_range(&mu)?
                .into_iter()
                .map(|m| survey_row(n, d, m, &config))
                .collect::<Result<Vec<_>>>()?;
            write_csv(&rows, sink(&out)?)?;
            Ok(0)
        }
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(io::Error::other(e))
}
