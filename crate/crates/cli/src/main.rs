//! The `coedge` command-line tool.
//!
//! Exit codes: 0 when the requested property or classification holds, 1 when
//! a property fails or a classification reports unmet hypotheses, 2 when a
//! classification reports a violated conclusion (a build-breaking defect,
//! never expected on real inputs), 64 for usage errors, 65 for unreadable or
//! unparseable input.

use std::cmp::Ordering;
use std::fmt;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use coedge_core::codec::{encode_graph6, parse_edge_list, parse_graph6};
use coedge_core::graph::{named_family, FamilyParams};
use coedge_core::pipeline::{
    classify_theorem_1_2, classify_theorem_1_3, classify_theorem_1_4, enumerate_regular_with_cap,
    search_co_edge_regular_with_cap, verify_theorem_4_1, ClassificationVerdict, Outcome,
    DEFAULT_SIZE_CAP,
};
use coedge_core::regularity::{analyze, moment_identities};
use coedge_core::report::{InputDescriptor, ReportDocument, SpectrumSection};
use coedge_core::spectrum::{cmp_min_eigenvalue, Spectrum};
use coedge_core::{canon, Graph};

const EXIT_PROPERTY_FAILS: u8 = 1;
const EXIT_CONCLUSION_VIOLATED: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;

/// Environment variable overriding the exhaustive-search vertex cap.
const SEARCH_CAP_VAR: &str = "COEDGE_SEARCH_MAX_N";

#[derive(Parser)]
#[command(
    name = "coedge",
    version,
    about = "Exact spectral and combinatorial tools for co-edge-regular graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named graph family as graph6
    Construct {
        /// Family name: complete, cycle, complete-bipartite, cocktail-party,
        /// triangular, petersen, shrikhande, grid, ext-c5, ext-petersen,
        /// cone-two-cliques
        #[arg(long)]
        family: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Report regularity parameters, flags, witnesses, and moment identities
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// Emit a JSON report document instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print the characteristic polynomial and exact eigenvalue data
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        /// Compare the smallest eigenvalue against this exact rational
        /// (e.g. -3 or -7/2); exits 1 when theta_min is below it
        #[arg(long, allow_hyphen_values = true)]
        threshold: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run a classification pipeline and report its verdict
    Classify {
        #[command(flatten)]
        input: InputArgs,
        /// Which statement to run: 1.2, 1.3, 1.4, or 4.1
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate k-regular graphs on n vertices (graph6, one per line),
    /// optionally filtered to co-edge-regular graphs with a given c
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        c: Option<usize>,
    },
    /// Decide whether two graphs are isomorphic
    Iso {
        /// First input file ('-' for standard input)
        a: PathBuf,
        /// Second input file ('-' for standard input)
        b: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Input file; '-' or absent reads standard input
    #[arg(long, value_name = "FILE")]
    r#in: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Graph6,
    Edgelist,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Graph6 => "graph6",
            Format::Edgelist => "edgelist",
        }
    }
}

/// A command failure with its exit code. Usage problems (bad flag values,
/// impossible parameter requests) exit 64; unreadable or malformed input
/// exits 65.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl fmt::Display) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn parse(message: impl fmt::Display) -> Self {
        Failure {
            code: EXIT_PARSE,
            message: message.to_string(),
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes early instead of
    // panicking mid-write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are not usage errors.
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Construct { family, m, p, q, s, t } => construct(&family, FamilyParams { m, p, q, s, t }),
        Command::Check { input, json } => check(&input, json),
        Command::Spectrum {
            input,
            threshold,
            json,
        } => spectrum_cmd(&input, threshold.as_deref(), json),
        Command::Classify {
            input,
            theorem,
            json,
        } => classify(&input, &theorem, json),
        Command::Search { n, k, c } => search(n, k, c),
        Command::Iso { a, b, format } => iso(&a, &b, format),
    }
}

fn construct(family: &str, params: FamilyParams) -> Result<u8, Failure> {
    let g = named_family(family, &params).map_err(Failure::usage)?;
    println!("{}", encode_graph6(&g));
    Ok(0)
}

fn read_source(path: Option<&PathBuf>) -> Result<(String, String), Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let text = fs::read_to_string(p)
                .map_err(|e| Failure::parse(format!("cannot read {}: {e}", p.display())))?;
            Ok((text, p.display().to_string()))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::parse(format!("cannot read standard input: {e}")))?;
            Ok((text, "-".to_string()))
        }
    }
}

fn parse_by_format(text: &str, format: Format) -> Result<Graph, Failure> {
    match format {
        Format::Graph6 => parse_graph6(text).map_err(Failure::parse),
        Format::Edgelist => parse_edge_list(text).map_err(Failure::parse),
    }
}

fn read_graph(input: &InputArgs) -> Result<(Graph, String), Failure> {
    let (text, source) = read_source(input.r#in.as_ref())?;
    let g = parse_by_format(&text, input.format)?;
    if g.n() == 0 {
        return Err(Failure::parse("input graph has no vertices"));
    }
    Ok((g, source))
}

fn check(input: &InputArgs, json: bool) -> Result<u8, Failure> {
    let (g, source) = read_graph(input)?;
    let report = analyze(&g).map_err(Failure::parse)?;
    let moments = moment_identities(&g).ok();
    let holds = report.flags.co_edge_regular && moments.as_ref().is_some_and(|m| m.holds());

    if json {
        let mut doc = ReportDocument::new(InputDescriptor::new(source, input.format.name(), &g));
        doc.witnesses = Some(report.witnesses.clone());
        doc.regularity = Some(report);
        println!("{}", doc.to_json());
    } else {
        println!("vertices: {}", report.n);
        println!("edges: {}", g.edge_count());
        print_flag("regular", report.flags.regular, fmt_param("k", report.k));
        print_flag(
            "co-edge-regular",
            report.flags.co_edge_regular,
            fmt_param("c", report.c),
        );
        print_flag(
            "strongly co-edge-regular",
            report.flags.strongly_co_edge_regular,
            fmt_param("ell", report.ell),
        );
        print_flag("walk-regular", report.flags.walk_regular, String::new());
        print_flag(
            "strongly regular",
            report.flags.strongly_regular,
            fmt_param("a", report.a),
        );
        print_flag("terwilliger", report.flags.terwilliger, String::new());
        print_flag("connected", report.flags.connected, String::new());
        match &moments {
            Some(m) => println!(
                "moment identities: {}",
                if m.holds() { "hold" } else { "fail" }
            ),
            None => println!("moment identities: skipped (graph is not co-edge-regular)"),
        }
        for w in &report.witnesses {
            // The complete/empty records are structural notes, not failures.
            if w.flag == "complete" || w.flag == "empty" {
                continue;
            }
            println!(
                "witness ({}): {} at {:?}, observed {}, expected {}",
                w.flag, w.kind, w.vertices, w.observed, w.expected
            );
        }
    }
    Ok(if holds { 0 } else { EXIT_PROPERTY_FAILS })
}

fn print_flag(name: &str, value: bool, detail: String) {
    if value && !detail.is_empty() {
        println!("{name}: yes ({detail})");
    } else {
        println!("{name}: {}", if value { "yes" } else { "no" });
    }
}

fn fmt_param(name: &str, value: Option<usize>) -> String {
    value.map(|v| format!("{name} = {v}")).unwrap_or_default()
}

fn spectrum_cmd(input: &InputArgs, threshold: Option<&str>, json: bool) -> Result<u8, Failure> {
    let (g, source) = read_graph(input)?;
    let spectrum = Spectrum::of(&g).map_err(Failure::parse)?;

    let mut code = 0;
    let mut threshold_line = None;
    if let Some(raw) = threshold {
        let r = BigRational::from_str(raw)
            .map_err(|_| Failure::usage(format!("cannot parse threshold '{raw}' as a rational")))?;
        let ord = cmp_min_eigenvalue(&g, &r).map_err(Failure::parse)?;
        let rel = match ord {
            Ordering::Less => {
                code = EXIT_PROPERTY_FAILS;
                "<"
            }
            Ordering::Equal => "==",
            Ordering::Greater => ">",
        };
        threshold_line = Some(format!("theta_min {rel} {raw}"));
    }

    if json {
        let mut doc = ReportDocument::new(InputDescriptor::new(source, input.format.name(), &g));
        doc.spectrum = Some(SpectrumSection::of(&spectrum));
        println!("{}", doc.to_json());
    } else {
        let coeffs: Vec<String> = spectrum
            .char_poly()
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect();
        println!("vertices: {}", g.n());
        println!("char poly coefficients (ascending): {}", coeffs.join(" "));
        println!("distinct eigenvalues: {}", spectrum.distinct_count());
        for e in spectrum.entries() {
            println!("  {} (multiplicity {})", e.value, e.multiplicity);
        }
    }
    if let Some(line) = threshold_line {
        println!("{line}");
    }
    Ok(code)
}

fn classify(input: &InputArgs, theorem: &str, json: bool) -> Result<u8, Failure> {
    let (g, source) = read_graph(input)?;
    let verdict: ClassificationVerdict = match theorem {
        "1.2" => classify_theorem_1_2(&g),
        "1.3" => classify_theorem_1_3(&g),
        "1.4" => classify_theorem_1_4(&g),
        "4.1" => verify_theorem_4_1(&g),
        other => {
            return Err(Failure::usage(format!(
                "unknown theorem '{other}': expected 1.2, 1.3, 1.4, or 4.1"
            )))
        }
    };

    let code = match &verdict.outcome {
        Outcome::Grid { .. } | Outcome::TwoCliqueExtC5 | Outcome::Shrikhande => 0,
        Outcome::HypothesesNotMet { .. } => EXIT_PROPERTY_FAILS,
        Outcome::ConclusionViolated { .. } => EXIT_CONCLUSION_VIOLATED,
    };

    if json {
        let mut doc = ReportDocument::new(InputDescriptor::new(source, input.format.name(), &g));
        doc.verdicts = Some(vec![verdict]);
        println!("{}", doc.to_json());
    } else {
        println!("theorem: {}", verdict.theorem);
        println!("trail:");
        for step in &verdict.trail {
            match &step.witness {
                Some(w) => println!("  {}: {} [{w}]", step.check, step.result),
                None => println!("  {}: {}", step.check, step.result),
            }
        }
        println!("outcome: {}", verdict.outcome);
    }
    Ok(code)
}

fn search_cap() -> Result<usize, Failure> {
    match std::env::var(SEARCH_CAP_VAR) {
        Ok(v) => v.parse().map_err(|_| {
            Failure::usage(format!("{SEARCH_CAP_VAR}='{v}' is not a vertex count"))
        }),
        Err(_) => Ok(DEFAULT_SIZE_CAP),
    }
}

fn search(n: usize, k: usize, c: Option<usize>) -> Result<u8, Failure> {
    let cap = search_cap()?;
    let graphs = match c {
        Some(c) => search_co_edge_regular_with_cap(n, k, c, cap),
        None => enumerate_regular_with_cap(n, k, cap),
    }
    .map_err(Failure::usage)?;
    for g in &graphs {
        println!("{}", encode_graph6(g));
    }
    Ok(0)
}

fn iso(a: &PathBuf, b: &PathBuf, format: Format) -> Result<u8, Failure> {
    if a.as_os_str() == "-" && b.as_os_str() == "-" {
        return Err(Failure::usage("at most one of the two inputs can be '-'"));
    }
    let (text_a, _) = read_source(Some(a))?;
    let (text_b, _) = read_source(Some(b))?;
    let ga = parse_by_format(&text_a, format)?;
    let gb = parse_by_format(&text_b, format)?;
    if canon::is_isomorphic(&ga, &gb) {
        println!("isomorphic");
        Ok(0)
    } else {
        println!("not isomorphic");
        Ok(EXIT_PROPERTY_FAILS)
    }
}
