use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use harmonica::par::Exec;
use harmonica::spaces::{Cache, GradedModel, HilbertSeries, Isotype};
use harmonica::structure::{export_homology, GradingDictionary};
use harmonica::verify::{run, Session, Suite};
use harmonica::Error;
use serde_json::json;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_REFUSAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "harmonica",
    version,
    about = "Exact diagonal coinvariants and their operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Number of variable pairs.
    #[arg(long)]
    n: usize,
    /// Directory for cached spaces.
    #[arg(long, env = "HARMONICA_CACHE")]
    cache_dir: Option<PathBuf>,
    /// Allow n = 5 (slow).
    #[arg(long)]
    allow_large: bool,
    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    jobs: Option<usize>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a space and print its Hilbert series.
    Compute {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        space: SpaceKind,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// Run check suites and print a JSON report.
    Verify {
        #[command(flatten)]
        common: Common,
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Record wall time per check (makes the report nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Export the homology table of the hook model.
    Export {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "json")]
        format: TableFormat,
        /// Grading dictionary as JSON (defaults to the standard one).
        #[arg(long)]
        dict: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceKind {
    Drn,
    DrnSign,
    Hook,
    Dh,
    DhSign,
    JModMj,
    JbarModMjbar,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceRefusal { .. } => EXIT_REFUSAL,
                Error::InvalidArgument(_) | Error::Parse(_) => EXIT_USAGE,
                _ => EXIT_FAIL,
            })
        }
    }
}

fn session(c: &Common) -> harmonica::Result<Session> {
    let exec = match c.jobs {
        Some(1) => Exec::Sequential,
        _ => Exec::default(),
    };
    #[cfg(feature = "parallel")]
    if let Some(k) = c.jobs.filter(|&k| k > 1) {
        // Only fails if a global pool exists already, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global();
    }
    Session::new(
        c.n,
        c.allow_large,
        exec,
        c.cache_dir.clone().map(Cache::new),
    )
}

fn emit(out: Option<&Path>, text: &str) -> harmonica::Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|source| Error::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn dispatch(cmd: Command) -> harmonica::Result<u8> {
    match cmd {
        Command::Compute {
            common,
            space,
            format,
        } => {
            let s = session(&common)?;
            let series = series_of(&s, space)?;
            emit(
                common.out.as_deref(),
                &render_series(&s, space, &series, format),
            )?;
            Ok(0)
        }
        Command::Verify {
            common,
            suite,
            timings,
        } => {
            let suites = Suite::parse_list(&suite)?;
            let s = session(&common)?;
            let report = run(&s, &suites, timings);
            emit(common.out.as_deref(), &report.to_json())?;
            Ok(if report.passed { 0 } else { EXIT_FAIL })
        }
        Command::Export {
            common,
            format,
            dict,
        } => {
            let s = session(&common)?;
            let dict = match dict {
                Some(p) => {
                    let text = fs::read_to_string(&p).map_err(|source| Error::Io {
                        path: p.clone(),
                        source,
                    })?;
                    serde_json::from_str(&text)
                        .map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?
                }
                None => GradingDictionary::standard(s.n()),
            };
            let table = export_homology(s.hook()?.as_ref(), &dict, s.exec())?;
            let text = match format {
                TableFormat::Json => table.to_json(),
                TableFormat::Csv => table.to_csv(),
            };
            emit(common.out.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn series_of(s: &Session, space: SpaceKind) -> harmonica::Result<HilbertSeries> {
    Ok(match space {
        SpaceKind::Drn => s.coinvariants()?.hilbert(),
        SpaceKind::DrnSign => s.sign()?.hilbert(),
        SpaceKind::Hook => s.hook()?.hilbert(),
        SpaceKind::Dh => s.harmonics()?.hilbert(),
        SpaceKind::DhSign => s.harmonics()?.component(Isotype::Sign, s.exec()).hilbert(),
        SpaceKind::JModMj => s.ideal().j_mod_mj(),
        SpaceKind::JbarModMjbar => s.ideal().jbar_mod_mjbar(),
    })
}

fn render_series(s: &Session, space: SpaceKind, h: &HilbertSeries, format: TextOrJson) -> String {
    let name = space
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    match format {
        TextOrJson::Text => format!(
            "n = {}, space = {name}\nhilbert: {h}\ntotal: {}\nper-a dims: {}\n",
            s.n(),
            h.total(),
            h.by_a()
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        ),
        TextOrJson::Json => {
            let dims: Vec<_> = h
                .dims()
                .iter()
                .map(|(d, k)| json!({"dx": d.dx, "dy": d.dy, "da": d.da, "dim": k}))
                .collect();
            let v = json!({
                "n": s.n(),
                "space": name,
                "hilbert": h.to_string(),
                "total": h.total(),
                "by_a": h.by_a(),
                "dims": dims,
            });
            serde_json::to_string_pretty(&v).expect("json value serializes") + "\n"
        }
    }
}
