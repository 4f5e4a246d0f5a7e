//! Command-line front end: builds a surface from flags, runs one of the
//! report or classification commands, and writes text, JSON, or SVG.
//!
//! Exit codes: 0 on success, 1 on a usage error (bad flags or literals),
//! 2 on a domain error (inconsistent surface data, undefined bundles), each
//! with a one-line diagnostic.

use std::io::{self, IsTerminal, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use vii_moduli::bundles::BundleSpec;
use vii_moduli::cohomology::euler_char;
use vii_moduli::moduli::{
    build_polystable_moduli, build_simple_moduli, CenterKind, ModuliReport, NonSeparatedGroup,
    SimpleModuliReport,
};
use vii_moduli::picard::LineBundle;
use vii_moduli::rat::{parse_rat, Rat};
use vii_moduli::render::{render_svg, RenderSpec};
use vii_moduli::surface::{SurfaceKind, SurfaceModel};
use vii_moduli::Error;

#[derive(Parser)]
#[command(
    name = "vii-moduli",
    version,
    about = "Exact moduli reports for rank-2 bundles on minimal class VII surfaces with b2 = 1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report on the moduli space of polystable bundles
    Report(ReportArgs),
    /// Report on the moduli space of simple bundles inside a degree window
    SimpleReport(SimpleReportArgs),
    /// Classify one rank-2 bundle given by an extension expression
    Classify(ClassifyArgs),
    /// Print Euler characteristics of canonical powers
    Rr(RrArgs),
    /// List the torsion parameters up to a degree bound
    EnumerateR(EnumerateRArgs),
    /// Render the polystable moduli disc as SVG
    Render(RenderArgs),
}

#[derive(Args)]
struct SurfaceArgs {
    /// Surface family
    #[arg(long, value_enum)]
    surface: SurfaceChoice,
    /// Volume of the cycle C (positive rational)
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    vol_c: Rat,
    /// Volume of the elliptic curve E (parabolic surfaces only)
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    vol_e: Option<Rat>,
    /// Degree of the canonical bundle (required on Enoki surfaces, derived
    /// on the other two)
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    deg_k: Option<Rat>,
    /// Angle of O(C) as a rational number of turns
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    theta_c: Option<Rat>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SurfaceChoice {
    Half,
    Enoki,
    Parabolic,
}

impl SurfaceArgs {
    fn build(&self) -> Result<SurfaceModel, Error> {
        let kind = match self.surface {
            SurfaceChoice::Half => SurfaceKind::HalfInoue,
            SurfaceChoice::Enoki => SurfaceKind::Enoki,
            SurfaceChoice::Parabolic => SurfaceKind::ParabolicInoue,
        };
        SurfaceModel::new(kind, self.vol_c, self.vol_e, self.deg_k, self.theta_c)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum DataFormat {
    Text,
    Json,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    surface: SurfaceArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    /// Picture width in pixels (svg format only)
    #[arg(long, default_value_t = 640)]
    width: u32,
    /// Picture height in pixels (svg format only)
    #[arg(long, default_value_t = 640)]
    height: u32,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SimpleReportArgs {
    #[command(flatten)]
    surface: SurfaceArgs,
    /// Lower end of the degree window
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    lo: Rat,
    /// Upper end of the degree window
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    hi: Rat,
    #[arg(long, value_enum, default_value = "text")]
    format: DataFormat,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_bundle(text: &str) -> Result<BundleSpec, Error> {
    text.parse()
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    surface: SurfaceArgs,
    /// Bundle expression: E:<l>, A:<r>, or S:<l>|<m>, with each line bundle
    /// written as n,logmod,arg
    #[arg(long, value_parser = parse_bundle, allow_hyphen_values = true)]
    bundle: BundleSpec,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RrArgs {
    /// Largest canonical power; prints chi(K^k) for |k| <= n
    #[arg(long)]
    n: u32,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateRArgs {
    #[command(flatten)]
    surface: SurfaceArgs,
    /// Largest degree to list
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    max_degree: Rat,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    surface: SurfaceArgs,
    /// Picture width in pixels
    #[arg(long, default_value_t = 640)]
    width: u32,
    /// Picture height in pixels
    #[arg(long, default_value_t = 640)]
    height: u32,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    if let Err(message) = run(cli) {
        eprintln!("error: {message}");
        std::process::exit(2);
    }
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Report(args) => {
            let s = args.surface.build().map_err(|e| e.to_string())?;
            let report = build_polystable_moduli(&s);
            let text = match args.format {
                ReportFormat::Text => report_text(&report, use_color(args.out.as_deref())),
                ReportFormat::Json => to_json(&report)?,
                ReportFormat::Svg => {
                    let spec = RenderSpec {
                        width: args.width,
                        height: args.height,
                        ..RenderSpec::default()
                    };
                    render_svg(&report, &spec)
                }
            };
            emit(args.out.as_deref(), &text)
        }
        Command::SimpleReport(args) => {
            let s = args.surface.build().map_err(|e| e.to_string())?;
            let report = build_simple_moduli(&s, args.lo, args.hi);
            let text = match args.format {
                DataFormat::Text => simple_text(&report, use_color(args.out.as_deref())),
                DataFormat::Json => to_json(&report)?,
            };
            emit(args.out.as_deref(), &text)
        }
        Command::Classify(args) => {
            let s = args.surface.build().map_err(|e| e.to_string())?;
            let bundle = args.bundle.realize(&s).map_err(|e| e.to_string())?;
            let stability = if bundle.is_stable(&s) {
                "stable"
            } else if bundle.is_polystable(&s) {
                "polystable"
            } else {
                "unstable"
            };
            let simplicity = if bundle.is_simple(&s) {
                "simple"
            } else {
                "non-simple"
            };
            let text = format!(
                "{stability} {simplicity}; canonical={}\n",
                bundle.canonical_form(&s)
            );
            emit(args.out.as_deref(), &text)
        }
        Command::Rr(args) => {
            let n = i64::from(args.n);
            let mut text = String::new();
            for k in -n..=n {
                let chi = euler_char(&LineBundle::k().pow(k));
                text.push_str(&format!("chi(K^{k}) = {chi}\n"));
            }
            emit(args.out.as_deref(), &text)
        }
        Command::EnumerateR(args) => {
            let s = args.surface.build().map_err(|e| e.to_string())?;
            let mut text = String::new();
            for r in s.enumerate_r_below(args.max_degree) {
                text.push_str(&format!("{r}\n"));
            }
            emit(args.out.as_deref(), &text)
        }
        Command::Render(args) => {
            let s = args.surface.build().map_err(|e| e.to_string())?;
            let report = build_polystable_moduli(&s);
            let spec = RenderSpec {
                width: args.width,
                height: args.height,
                ..RenderSpec::default()
            };
            emit(args.out.as_deref(), &render_svg(&report, &spec))
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| format!("cannot serialize report: {e}"))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write output: {e}")),
    }
}

/// ANSI styling is used only for interactive terminal output.
fn use_color(out: Option<&Path>) -> bool {
    out.is_none() && std::env::var_os("VII_MODULI_NO_COLOR").is_none() && io::stdout().is_terminal()
}

fn heading(text: &str, color: bool) -> String {
    if color {
        format!("\x1b[1m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

fn report_text(report: &ModuliReport, color: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{} {}\n",
        heading("surface:", color),
        report.surface
    ));
    out.push_str(&format!("{} {}\n", heading("rho:", color), report.rho));
    let center = match report.center.kind {
        CenterKind::FiltrableA0 => "filtrable A-side extension over O",
        CenterKind::NonFiltrable => "non-filtrable",
    };
    out.push_str(&format!(
        "{} {center} (fixed by the torsion twist: {})\n",
        heading("center:", color),
        yes_no(report.center.f_invariant)
    ));
    out.push_str(&format!(
        "{} split circle at degree {}; touches: {}; smooth boundary: {}\n",
        heading("boundary:", color),
        report.boundary.degree,
        report.boundary.touch_count,
        yes_no(report.boundary.smooth_boundary)
    ));
    out.push_str(&format!(
        "{} ({})\n",
        heading("singular pairs", color),
        report.singular_pairs.len()
    ));
    for pair in &report.singular_pairs {
        out.push_str(&format!(
            "  node {} deg {}  <->  puncture {} deg {}\n",
            pair.node, pair.node_degree, pair.puncture, pair.puncture_degree
        ));
    }
    out.push_str(&format!(
        "{} ({})\n",
        heading("boundary touches", color),
        report.boundary_touches.len()
    ));
    for touch in &report.boundary_touches {
        out.push_str(&format!("  {touch}\n"));
    }
    out.push_str(&format!(
        "{} ({})\n",
        heading("punctures U", color),
        report.punctures_u.len()
    ));
    for p in &report.punctures_u {
        out.push_str(&format!("  {p}\n"));
    }
    out.push_str(&format!(
        "{} card_R_le_rho = {}; card_U = {}; card_boundary_touch = {}\n",
        heading("counts:", color),
        report.counts.card_r_le_rho,
        report.counts.card_u,
        report.counts.card_boundary_touch
    ));
    out.push_str(&format!(
        "{} {}\n",
        heading("smooth:", color),
        yes_no(report.smooth)
    ));
    out
}

fn simple_text(report: &SimpleModuliReport, color: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{} {}\n",
        heading("surface:", color),
        report.surface
    ));
    out.push_str(&format!(
        "{} [{}, {}]\n",
        heading("window:", color),
        report.window.lo,
        report.window.hi
    ));
    out.push_str(&format!(
        "{} ({})\n",
        heading("non-separated groups", color),
        report.nonseparated_groups.len()
    ));
    for group in &report.nonseparated_groups {
        match group {
            NonSeparatedGroup::Pair { r, partner_param } => {
                out.push_str(&format!(
                    "  pair at r = {r} (A-side appears as E-side over {partner_param})\n"
                ));
            }
            NonSeparatedGroup::HalfInoueTriple => {
                out.push_str(
                    "  triple: the central A-side bundle with the E-side extensions over O and F\n",
                );
            }
        }
    }
    out.push_str(&format!(
        "{} ({})\n",
        heading("punctures Q", color),
        report.punctures_q.len()
    ));
    for q in &report.punctures_q {
        out.push_str(&format!("  {q}\n"));
    }
    out.push_str(&format!(
        "{} {}\n",
        heading("plane minus discrete punctures:", color),
        yes_no(report.plane_minus_discrete)
    ));
    out
}
