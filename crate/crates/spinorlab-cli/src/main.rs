use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use spinorlab::classify::annihilator_basis;
use spinorlab::clifford::{chirality, Chirality};
use spinorlab::embed::{embed_pattern, embed_single, extract_qubit, OccupancyPattern, QubitState};
use spinorlab::invariants::{
    f_prime_invariants, g_invariants, sl8_trace_invariants, spin16_invariants, InvariantReport,
    PairContraction, Provenance, SL8_ORDERS, SPIN16_ORDERS,
};
use spinorlab::pairing::is_majorana;
use spinorlab::roots::{g_state, semisimple_qubit_state};
use spinorlab::{FockState, GaussRat};
use spinorlab_cli::report::{ClassificationV1, ReportV1};
use spinorlab_cli::state_file::{parse_rational, AnyState, Render, StateFileV1};
use spinorlab_cli::suites::{self, Suite};
use spinorlab_cli::{CliError, EXIT_SUITE_FAILED};

const ABOUT: &str = "Exact fermionic spinor invariants, classification and identity suites.

State files list occupied modes as 1-based integers. For a state on N = 2n
modes the barred mode ī is written i + n, so 1̄ is mode n + 1.

Exit codes: 0 ok, 1 a verify suite reported failures, 2 parse or usage error,
3 the input does not fit the requested computation (wrong shape, zero state,
mixed chirality, support outside a pattern).";

#[derive(Parser)]
#[command(name = "spinorlab", version, about = ABOUT, long_about = ABOUT)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Trace invariants of the full four-index covariant of an 8-mode Weyl spinor.
    Spin16,
    /// Trace invariants of a four-fermion state on 8 modes.
    Sl8,
    /// Basic four-qubit invariants of a single-occupancy 8-mode state.
    Fourqubit,
    /// `g_{2p}` of a single-occupancy 8-mode state.
    G,
    /// Trace powers of the 28x28 view of a single-occupancy 8-mode state.
    Fprime,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MakeKind {
    /// Bell-diagonal four-qubit state from `--x a,b,c,d`, embedded on 8 modes.
    Semisimple4q,
    /// The 8-parameter state `G(y)` from `--y`.
    Gstate,
    /// Embed qubit amplitudes (`--amps` or a single-occupancy `--state`) with `--pattern`.
    Embed,
}

#[derive(Subcommand)]
enum Command {
    /// Polynomial invariants of a state file.
    Invariants {
        #[arg(long)]
        state: PathBuf,
        #[arg(long, value_enum)]
        family: Family,
        /// Orders p of the degree-2p invariants (default depends on the family).
        #[arg(long, value_delimiter = ',')]
        orders: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
    },
    /// Run a seeded identity suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, env = "SPINORLAB_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
    },
    /// Chirality, particle sectors, nullity, purity and the reality condition.
    Classify {
        #[arg(long)]
        state: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        output: Output,
    },
    /// Write a state file to stdout.
    Make {
        #[arg(value_enum)]
        kind: MakeKind,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Option<Vec<String>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        y: Option<Vec<String>>,
        /// One bit per qubit, 1 for double occupancy.
        #[arg(long)]
        pattern: Option<String>,
        /// 2^n qubit amplitudes, index bits read with qubit 1 as the high bit.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        amps: Option<Vec<String>>,
        #[arg(long)]
        state: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn emit(report: &ReportV1, output: Output) {
    match output {
        Output::Json => print!("{}", report.to_json()),
        Output::Csv => print!("{}", report.to_csv()),
    }
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Invariants {
            state,
            family,
            orders,
            output,
        } => {
            let (bytes, any) = read_state(&state)?;
            let mut report = ReportV1::new(invariants_command(family, orders.as_deref()), &bytes);
            match any {
                AnyState::Exact(s) => invariants(&mut report, &s, family, orders)?,
                AnyState::Float(s) => invariants(&mut report, &s, family, orders)?,
            }
            emit(&report, output);
            Ok(0)
        }
        Command::Verify {
            suite,
            trials,
            seed,
            output,
        } => {
            let input = format!("suite={};seed={seed};trials={trials}", suite.name());
            let mut report =
                ReportV1::new(format!("verify --suite {}", suite.name()), input.as_bytes());
            let result = suites::run(suite, trials, seed);
            let failed = result.failed;
            report.suite = Some(result);
            emit(&report, output);
            Ok(if failed == 0 { 0 } else { EXIT_SUITE_FAILED })
        }
        Command::Classify { state, output } => {
            let (bytes, any) = read_state(&state)?;
            let mut report = ReportV1::new("classify", &bytes);
            report.classification = Some(match any {
                AnyState::Exact(s) => classify(&s)?,
                AnyState::Float(s) => classify(&s)?,
            });
            emit(&report, output);
            Ok(0)
        }
        Command::Make {
            kind,
            x,
            y,
            pattern,
            amps,
            state,
        } => {
            let made = make(kind, x, y, pattern, amps, state)?;
            print!("{}", StateFileV1::from_state(&made).to_json());
            Ok(0)
        }
    }
}

fn read_state(path: &Path) -> Result<(Vec<u8>, AnyState), CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let text = std::str::from_utf8(&bytes)
        .map_err(|_| CliError::Parse(format!("{} is not UTF-8", path.display())))?;
    let any = StateFileV1::parse(text)?.to_any()?;
    Ok((bytes, any))
}

fn invariants_command(family: Family, orders: Option<&[usize]>) -> String {
    let name = family
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    match orders {
        Some(o) => {
            let list: Vec<String> = o.iter().map(ToString::to_string).collect();
            format!("invariants --family {name} --orders {}", list.join(","))
        }
        None => format!("invariants --family {name}"),
    }
}

fn invariants<S: Render>(
    report: &mut ReportV1,
    state: &FockState<S>,
    family: Family,
    orders: Option<Vec<usize>>,
) -> Result<(), CliError> {
    let orders = orders.unwrap_or_else(|| match family {
        Family::Spin16 => SPIN16_ORDERS.to_vec(),
        Family::Sl8 => SL8_ORDERS.to_vec(),
        _ => vec![1, 3, 4, 6],
    });
    if orders.is_empty() || orders.contains(&0) {
        return Err(CliError::Parse("orders must be positive integers".into()));
    }
    let qubits = || -> Result<QubitState<S>, CliError> {
        if state.modes() != 8 {
            return Err(CliError::Shape(format!(
                "family needs a single-occupancy state on 8 modes, got {} modes",
                state.modes()
            )));
        }
        Ok(extract_qubit(state, &OccupancyPattern::single(4))?)
    };
    match family {
        Family::Fourqubit => {
            for e in InvariantReport::four_qubit(&qubits()?, &orders)?.entries {
                report.add_value(e.label, &e.value, e.provenance);
            }
        }
        Family::G => {
            for (p, v) in g_invariants(&qubits()?, &orders)? {
                report.add_value(format!("g{}", 2 * p), &v, Provenance::TracePath);
            }
        }
        Family::Fprime => {
            for (p, v) in f_prime_invariants(&qubits()?, &orders)? {
                report.add_value(format!("fprime{}", 2 * p), &v, Provenance::TracePath);
            }
        }
        Family::Sl8 => {
            for (p, v) in sl8_trace_invariants(state, &orders, PairContraction::Restricted)? {
                report.add_value(format!("I{}", 2 * p), &v, Provenance::TracePath);
            }
        }
        Family::Spin16 => {
            for (p, v) in spin16_invariants(state, &orders, PairContraction::Restricted)? {
                report.add_value(format!("I{}", 2 * p), &v, Provenance::TracePath);
            }
        }
    }
    Ok(())
}

fn classify<S: Render>(state: &FockState<S>) -> Result<ClassificationV1, CliError> {
    let basis = annihilator_basis(state)?;
    let nullity = basis.nullity();
    Ok(ClassificationV1 {
        modes: state.modes(),
        chirality: match chirality(state) {
            Chirality::Positive => "+1",
            Chirality::Negative => "-1",
            Chirality::Mixed => "mixed",
            Chirality::Zero => "zero",
        }
        .to_string(),
        particle_sectors: state.particle_sectors().into_keys().collect(),
        nullity,
        pure: nullity == state.modes(),
        majorana: is_majorana(state),
    })
}

fn rationals(values: &[String], want: usize, flag: &str) -> Result<Vec<GaussRat>, CliError> {
    if values.len() != want {
        return Err(CliError::Parse(format!(
            "--{flag} takes {want} values, got {}",
            values.len()
        )));
    }
    values
        .iter()
        .map(|v| Ok(GaussRat::real(parse_rational(v)?)))
        .collect()
}

fn required<T>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Parse(format!("missing --{flag}")))
}

fn make(
    kind: MakeKind,
    x: Option<Vec<String>>,
    y: Option<Vec<String>>,
    pattern: Option<String>,
    amps: Option<Vec<String>>,
    state: Option<PathBuf>,
) -> Result<FockState<GaussRat>, CliError> {
    match kind {
        MakeKind::Semisimple4q => {
            let x = rationals(&required(x, "x")?, 4, "x")?;
            Ok(embed_single(&semisimple_qubit_state(&x)?))
        }
        MakeKind::Gstate => {
            let y = rationals(&required(y, "y")?, 8, "y")?;
            Ok(g_state(&y)?)
        }
        MakeKind::Embed => {
            let pattern: OccupancyPattern = required(pattern, "pattern")?
                .parse()
                .map_err(|e: spinorlab::Error| CliError::Parse(format!("bad --pattern: {e}")))?;
            let n = pattern.len();
            let q = match (amps, state) {
                (Some(a), None) => QubitState::new(n, rationals(&a, 1 << n, "amps")?)?,
                (None, Some(path)) => match read_state(&path)?.1 {
                    AnyState::Exact(s) => {
                        if s.modes() != 2 * n {
                            return Err(CliError::Parse(format!(
                                "pattern {pattern} needs a {}-mode state file, got {} modes",
                                2 * n,
                                s.modes()
                            )));
                        }
                        extract_qubit(&s, &OccupancyPattern::single(n))?
                    }
                    AnyState::Float(_) => {
                        return Err(CliError::Parse(
                            "make embed needs a gaussian-rational file".into(),
                        ))
                    }
                },
                _ => {
                    return Err(CliError::Parse(
                        "give exactly one of --amps or --state".into(),
                    ))
                }
            };
            Ok(embed_pattern(&q, &pattern)?)
        }
    }
}
