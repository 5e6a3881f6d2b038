//! Command-line front end: argument parsing, dispatch and rendering.
//!
//! Exit codes: 0 success, 1 verification failure (or internal inconsistency), 2 input error.

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ke_core::homology::{
    enright_direct, enright_input, enright_truncation, h_route, EnrightInput,
    HomologyDecomposition, Regime, Route,
};
use ke_core::parallel::Execution;
use ke_core::verify::{run_all, CriterionReport, SweepConfig};
use ke_core::weights::{
    check_truncation_support, gamma_weight, zeta_data, IndexSets, Lam, WeightLabel, WeightVector,
    ZetaData,
};
use ke_core::weylgroup::{enumerate_w0, Family, WeylElement};
use ke_core::{Error, Half};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "ke/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "ke",
    version,
    about = "u-homology of unitarizable highest weight modules"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    G,
    Relabel,
    Bar,
    Enright,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Homology of a label in one degree, by one or all routes.
    Homology {
        #[command(flatten)]
        label: LabelArgs,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = RouteArg::All)]
        route: RouteArg,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Minimal coset representatives of a given length.
    EnumerateWeyl {
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: u32,
    },
    /// The ζ, ζ̄ sequences and index sets of a label.
    Zeta {
        #[command(flatten)]
        label: LabelArgs,
    },
    /// Finite-rank Γ-weights and which infinite-rank summands survive truncation.
    Truncate {
        #[command(flatten)]
        label: LabelArgs,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Runs the acceptance sweeps.
    Verify {
        /// Reduced sweep: |λ| ≤ 4, d ≤ 5, k ≤ 3.
        #[arg(long)]
        quick: bool,
        /// Disable the parallel executor.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Args, Debug)]
pub struct LabelArgs {
    /// a, c or d.
    #[arg(long)]
    pub family: String,
    /// Partition "2,1" (families c, d) or pair "minus|plus" such as "1,1|2" (family a).
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub lam: String,
    /// Level, "p" or "p/2".
    #[arg(long, allow_hyphen_values = true)]
    pub d: String,
}

#[derive(Args, Debug)]
pub struct WindowArgs {
    /// Number of ε-indices ≤ 0 kept (family a).
    #[arg(long)]
    pub m: Option<u32>,
    /// Number of positive ε-indices kept.
    #[arg(long)]
    pub n: Option<u32>,
    /// Determinant twist (family a).
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub det_twist: i64,
}

/// What a run produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationWindow {
    pub m: u32,
    pub n: u32,
    pub det_twist: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub schema: String,
    pub label: WeightLabel,
    pub k: u32,
    pub window: Option<TruncationWindow>,
    /// Keyed by route: `g`, `relabel`, `bar`, `truncation`, `direct`.
    pub routes: BTreeMap<String, HomologyDecomposition>,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub schema: String,
    pub family: Family,
    pub k: u32,
    pub count: usize,
    pub elements: Vec<WeylElement>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaReport {
    pub schema: String,
    pub data: ZetaData,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub mu: Lam,
    pub kept: bool,
    pub gamma: Option<WeightVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationReport {
    pub schema: String,
    pub input: EnrightInput,
    pub gamma: WeightVector,
    pub k: u32,
    /// Degree-k summands of the infinite-rank answer and whether they survive.
    pub candidates: Vec<Candidate>,
    pub truncation: HomologyDecomposition,
    pub direct: HomologyDecomposition,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: String,
    pub quick: bool,
    pub config: SweepConfig,
    pub criteria: Vec<CriterionReport>,
    pub passed: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => {
            let code = if matches!(e, Error::Internal(_)) {
                EXIT_FAILED
            } else {
                EXIT_INPUT
            };
            Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn field_error(field: &str, e: Error) -> Error {
    match e {
        Error::Parse { message, .. } => Error::Parse {
            field: field.into(),
            message,
        },
        other => Error::Parse {
            field: field.into(),
            message: other.to_string(),
        },
    }
}

fn parse_family(s: &str) -> ke_core::Result<Family> {
    s.parse().map_err(|e| field_error("family", e))
}

fn parse_label(args: &LabelArgs) -> ke_core::Result<WeightLabel> {
    let family = parse_family(&args.family)?;
    let lam = Lam::parse(family, &args.lam).map_err(|e| field_error("lam", e))?;
    let d: Half = args.d.parse().map_err(|e| field_error("d", e))?;
    WeightLabel::new(family, lam, d)
}

fn resolve_window(
    label: &WeightLabel,
    w: &WindowArgs,
) -> ke_core::Result<Option<TruncationWindow>> {
    match (w.m, w.n) {
        (_, None) if w.m.is_none() => Ok(None),
        (_, None) => Err(Error::Parse {
            field: "n".into(),
            message: "--m requires --n".into(),
        }),
        (m, Some(n)) => {
            let m = match (label.family, m) {
                (Family::A, Some(m)) => m,
                (Family::A, None) => {
                    return Err(Error::Parse {
                        field: "m".into(),
                        message: "family a needs --m".into(),
                    })
                }
                (_, _) => 0,
            };
            Ok(Some(TruncationWindow {
                m,
                n,
                det_twist: w.det_twist,
            }))
        }
    }
}

fn render<T: Serialize>(
    format: Format,
    value: &T,
    text: impl FnOnce() -> String,
) -> ke_core::Result<String> {
    match format {
        Format::Json => serde_json::to_string_pretty(value)
            .map(|s| s + "\n")
            .map_err(|e| Error::Internal(format!("serialization: {e}"))),
        Format::Text => Ok(text()),
    }
}

fn dispatch(cli: &Cli) -> ke_core::Result<Outcome> {
    match &cli.command {
        Command::Homology {
            label,
            k,
            route,
            window,
        } => homology(cli.format, label, *k, *route, window),
        Command::EnumerateWeyl { family, k } => {
            let family = parse_family(family)?;
            let elements = enumerate_w0(family, *k);
            let report = EnumerationReport {
                schema: SCHEMA.into(),
                family,
                k: *k,
                count: elements.len(),
                elements,
            };
            let text = || {
                let mut s = format!("W0({family}, k={k}): {} elements\n", report.count);
                for e in &report.elements {
                    s += &format!("  {e}\n");
                }
                s
            };
            Ok(Outcome::ok(render(cli.format, &report, text)?))
        }
        Command::Zeta { label } => {
            let label = parse_label(label)?;
            let report = ZetaReport {
                schema: SCHEMA.into(),
                data: zeta_data(&label)?,
            };
            Ok(Outcome::ok(render(cli.format, &report, || {
                zeta_text(&report.data)
            })?))
        }
        Command::Truncate { label, k, window } => truncate(cli.format, label, *k, window),
        Command::Verify { quick, sequential } => {
            let base = if *quick {
                SweepConfig::QUICK
            } else {
                SweepConfig::FULL
            };
            let config = base.with_env_override()?;
            let exec = if *sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            let criteria = run_all(&config, exec);
            let passed = criteria.iter().all(|c| c.passed);
            let report = VerifyReport {
                schema: SCHEMA.into(),
                quick: *quick,
                config,
                criteria,
                passed,
            };
            let text = || {
                let mut s: String = report.criteria.iter().map(|c| format!("{c}\n")).collect();
                s += if passed {
                    "all criteria passed\n"
                } else {
                    "some criteria FAILED\n"
                };
                s
            };
            let stdout = render(cli.format, &report, text)?;
            Ok(Outcome {
                code: if passed { EXIT_OK } else { EXIT_FAILED },
                stdout,
                stderr: String::new(),
            })
        }
    }
}

fn homology(
    format: Format,
    args: &LabelArgs,
    k: u32,
    route: RouteArg,
    w: &WindowArgs,
) -> ke_core::Result<Outcome> {
    let label = parse_label(args)?;
    let window = resolve_window(&label, w)?;
    let mut routes = BTreeMap::new();
    let infinite: &[Route] = match route {
        RouteArg::G => &[Route::G],
        RouteArg::Relabel => &[Route::Relabel],
        RouteArg::Bar => &[Route::Bar],
        RouteArg::Enright => &[],
        RouteArg::All => &Route::ALL,
    };
    for r in infinite {
        routes.insert(r.to_string(), h_route(*r, &label, k)?);
    }
    let finite = matches!(route, RouteArg::Enright) || (route == RouteArg::All && window.is_some());
    if finite {
        let win = window.clone().ok_or_else(|| Error::Parse {
            field: "n".into(),
            message: "route enright needs --n (and --m for family a)".into(),
        })?;
        let input = enright_input(&label, win.m, win.n, win.det_twist)?;
        routes.insert("truncation".into(), enright_truncation(&input, k)?);
        routes.insert("direct".into(), enright_direct(&input, k)?);
    }
    let agree = agreement(&routes);
    let report = HomologyReport {
        schema: SCHEMA.into(),
        label,
        k,
        window,
        routes,
        agree,
    };
    let text = || {
        let mut s = format!("label {} in degree {k}\n", report.label);
        for (name, h) in &report.routes {
            s += &format!("[{name}] {h}\n");
        }
        if report.routes.len() > 1 {
            s += &format!("agree: {}\n", report.agree);
        }
        s
    };
    let stdout = render(format, &report, text)?;
    Ok(Outcome {
        code: if agree { EXIT_OK } else { EXIT_FAILED },
        stdout,
        stderr: String::new(),
    })
}

/// Infinite routes must agree with each other (route g and relabel also on `μ`), and the
/// two finite paths with each other.
fn agreement(routes: &BTreeMap<String, HomologyDecomposition>) -> bool {
    let get = |k: &str| routes.get(k);
    let inf: Vec<&HomologyDecomposition> = ["g", "relabel", "bar"]
        .iter()
        .filter_map(|k| get(k))
        .collect();
    let infinite_ok = inf.windows(2).all(|p| p[0].same_weights(p[1]))
        && match (get("g"), get("relabel")) {
            (Some(g), Some(r)) => g == r,
            _ => true,
        };
    let finite_ok = match (get("truncation"), get("direct")) {
        (Some(t), Some(d)) => t.same_weights(d),
        _ => true,
    };
    infinite_ok && finite_ok
}

fn truncate(format: Format, args: &LabelArgs, k: u32, w: &WindowArgs) -> ke_core::Result<Outcome> {
    let label = parse_label(args)?;
    let win = resolve_window(&label, w)?.ok_or_else(|| Error::Parse {
        field: "n".into(),
        message: "truncate needs --n (and --m for family a)".into(),
    })?;
    let input = enright_input(&label, win.m, win.n, win.det_twist)?;
    let gamma = input.xi()?;
    let mut candidates = Vec::new();
    if input.regime == Regime::Integral {
        for s in h_route(Route::G, &input.label, k)?.summands {
            let mu =
                s.mu.ok_or_else(|| Error::Internal("route g records μ".into()))?;
            let mu_label = WeightLabel::new(input.label.family, mu.clone(), input.label.d)?;
            let kept = check_truncation_support(&mu_label, input.m, input.n).is_ok();
            let gamma = if kept {
                Some(gamma_weight(&mu_label, input.m, input.n)?)
            } else {
                None
            };
            candidates.push(Candidate { mu, kept, gamma });
        }
    }
    let truncation = enright_truncation(&input, k)?;
    let direct = enright_direct(&input, k)?;
    let agree = truncation.same_weights(&direct);
    let report = TruncationReport {
        schema: SCHEMA.into(),
        input,
        gamma,
        k,
        candidates,
        truncation,
        direct,
        agree,
    };
    let text = || {
        let i = &report.input;
        let mut s = format!(
            "label {} at m={}, n={} (regime {:?}, det twist {})\nΓ = {}\n",
            i.label, i.m, i.n, i.regime, i.det_twist, report.gamma
        );
        for c in &report.candidates {
            match &c.gamma {
                Some(g) => s += &format!("  μ = {}: kept, Γ(μ) = {g}\n", c.mu),
                None => s += &format!("  μ = {}: dropped (rows exceed the window)\n", c.mu),
            }
        }
        s += &format!(
            "[truncation] {}\n[direct] {}\nagree: {}\n",
            report.truncation, report.direct, report.agree
        );
        s
    };
    let stdout = render(format, &report, text)?;
    Ok(Outcome {
        code: if agree { EXIT_OK } else { EXIT_FAILED },
        stdout,
        stderr: String::new(),
    })
}

fn head(e: &ke_core::weights::EpsCoeffs) -> String {
    use ke_core::weights::EpsCoeffs;
    let show = |s: &ke_core::partitions::EventuallyLinearSeq| {
        let h: Vec<String> = s.head().iter().map(Half::to_string).collect();
        format!("({})", h.join(","))
    };
    match e {
        EpsCoeffs::Natural(s) => show(s),
        EpsCoeffs::Integer { nonpos, pos } => {
            format!("i≤0 by t=1−i: {} | i≥1: {}", show(nonpos), show(pos))
        }
        EpsCoeffs::Finite { .. } => "finite".into(),
    }
}

fn zeta_text(z: &ZetaData) -> String {
    let mut s = format!(
        "label {}\nζ head: {}\nζ̄ head: {}\n",
        z.label,
        head(&z.zeta),
        head(&z.zbar)
    );
    match &z.index_sets {
        IndexSets::Signed { j_set, j0_set } => s += &format!("J = {j_set}\nJ⁰ = {j0_set}\n"),
        IndexSets::Split { j_minus, j_plus } => s += &format!("J₋ = {j_minus}\nJ₊ = {j_plus}\n"),
    }
    let pairs: Vec<String> = z
        .n_pairs
        .iter()
        .map(|(i, j)| format!("({i},{j})"))
        .collect();
    s += &format!("N = {{{}}}\n", pairs.join(", "));
    s
}
