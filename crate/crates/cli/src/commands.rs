use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use venus_core::api;
use venus_core::parse::{parse_circuit, Diagnostic};
use venus_core::svg::{frame_file_name, render, RenderTheme};
use venus_core::DisplayOrder;

/// Exit status for parse and validation failures.
pub const EXIT_INVALID: u8 = 2;
/// Exit status for unreadable or unwritable paths.
pub const EXIT_IO: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "venus",
    version,
    about = "Simulate one- and two-qubit states and draw VENUS diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Draw a single state given as amplitudes.
    RenderState(RenderStateArgs),
    /// Run a circuit and draw every intermediate state.
    RunCircuit(RunCircuitArgs),
    /// Serve the JSON API (and optionally a static UI bundle).
    Serve(ServeArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ViewArgs {
    /// Length of the base hypotenuse in output units.
    #[arg(long, default_value_t = venus_core::geometry::DEFAULT_SCALE)]
    pub scale: f64,
    /// Display order of the qubits, "0,1" or "1,0".
    #[arg(long, value_parser = parse_order)]
    pub order: Option<DisplayOrder>,
    /// Emit diagram JSON instead of SVG.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RenderStateArgs {
    /// State as JSON `[[re,im],...]`, or `@path` to read it from a file.
    #[arg(long)]
    pub state: String,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Divide by the norm instead of rejecting unnormalized input.
    #[arg(long)]
    pub renormalize: bool,
    #[command(flatten)]
    pub view: ViewArgs,
}

#[derive(Debug, Args)]
pub struct RunCircuitArgs {
    /// Circuit JSON file.
    #[arg(long)]
    pub circuit: PathBuf,
    /// Directory receiving one document per frame plus manifest.json.
    #[arg(long)]
    pub frames_dir: PathBuf,
    #[command(flatten)]
    pub view: ViewArgs,
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long, default_value_t = 8080)]
    pub port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    pub bind: String,
    /// Directory with a built UI bundle to serve at `/`.
    #[arg(long)]
    pub static_dir: Option<PathBuf>,
}

fn parse_order(s: &str) -> Result<DisplayOrder, String> {
    let qubits = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    DisplayOrder::new(qubits).map_err(|e| e.to_string())
}

/// Failure carrying its exit status; diagnostics go to standard error.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub messages: Vec<String>,
}

impl Failure {
    fn invalid(diagnostics: &[Diagnostic]) -> Self {
        Self {
            code: EXIT_INVALID,
            messages: diagnostics.iter().map(ToString::to_string).collect(),
        }
    }

    fn io(path: &Path, err: std::io::Error) -> Self {
        Self {
            code: EXIT_IO,
            messages: vec![format!("{}: {err}", path.display())],
        }
    }
}

pub fn run(cli: Cli) -> ExitCode {
    let result = match cli.command {
        Command::RenderState(args) => render_state(&args),
        Command::RunCircuit(args) => run_circuit(&args),
        Command::Serve(args) => crate::server::serve_blocking(&args),
    };
    match result {
        Ok(warnings) => {
            for w in warnings {
                eprintln!("{w}");
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            for m in &f.messages {
                eprintln!("{m}");
            }
            ExitCode::from(f.code)
        }
    }
}

fn read_arg(value: &str) -> Result<String, Failure> {
    match value.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::io(Path::new(path), e)),
        None => Ok(value.to_owned()),
    }
}

fn parse_json(text: &str) -> Result<Value, Failure> {
    serde_json::from_str(text).map_err(|e| Failure {
        code: EXIT_INVALID,
        messages: vec![format!(
            "error at {}:{}: malformed JSON: {e}",
            e.line(),
            e.column()
        )],
    })
}

fn view_fields(view: &ViewArgs) -> serde_json::Map<String, Value> {
    let mut body = serde_json::Map::new();
    body.insert("scale".into(), json!(view.scale));
    if let Some(order) = &view.order {
        body.insert("order".into(), json!(order.as_slice()));
    }
    body
}

/// Request body equivalent to the given `render-state` flags.
pub fn state_request(args: &RenderStateArgs) -> Result<Value, Failure> {
    let state = parse_json(&read_arg(&args.state)?)?;
    let mut body = view_fields(&args.view);
    body.insert("state".into(), state);
    if args.renormalize {
        body.insert("renormalize".into(), json!(true));
    }
    Ok(Value::Object(body))
}

fn write_output(path: Option<&Path>, contents: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, contents).map_err(|e| Failure::io(p, e)),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn render_state(args: &RenderStateArgs) -> Result<Vec<String>, Failure> {
    let body = state_request(args)?;
    let response =
        api::state_geometry(&body.to_string()).map_err(|e| Failure::invalid(&e.diagnostics))?;
    let contents = if args.view.json {
        let mut s = serde_json::to_string(&response).expect("response serializes");
        s.push('\n');
        s
    } else {
        render(&response.diagram, &RenderTheme::default())
    };
    write_output(args.out.as_deref(), &contents)?;
    Ok(response
        .diagnostics
        .iter()
        .map(ToString::to_string)
        .collect())
}

fn run_circuit(args: &RunCircuitArgs) -> Result<Vec<String>, Failure> {
    let text = fs::read_to_string(&args.circuit).map_err(|e| Failure::io(&args.circuit, e))?;
    let parsed = parse_circuit(&text).map_err(|d| Failure::invalid(&d))?;
    let circuit = parsed.value;
    let order = match &args.view.order {
        Some(o) if o.len() != circuit.num_qubits() => {
            return Err(Failure::invalid(&[Diagnostic::error(
                "",
                format!(
                    "order {:?} does not match a {}-qubit circuit",
                    o.as_slice(),
                    circuit.num_qubits()
                ),
            )]))
        }
        Some(o) => o.clone(),
        None => DisplayOrder::identity(circuit.num_qubits()),
    };
    if !(args.view.scale > 0.0 && args.view.scale.is_finite()) {
        return Err(Failure::invalid(&[Diagnostic::error(
            "",
            "scale must be a positive number",
        )]));
    }

    let frames = circuit.run().map_err(|e| Failure {
        code: EXIT_INVALID,
        messages: vec![e.to_string()],
    })?;
    let views =
        api::run_views(&circuit, args.view.scale, &order).map_err(|d| Failure::invalid(&[d]))?;

    fs::create_dir_all(&args.frames_dir).map_err(|e| Failure::io(&args.frames_dir, e))?;
    let theme = RenderTheme::default();
    for view in &views {
        let (name, contents) = if args.view.json {
            let mut s = serde_json::to_string(&view.diagram).expect("diagram serializes");
            s.push('\n');
            (frame_file_name(view.step).replace(".svg", ".json"), s)
        } else {
            (frame_file_name(view.step), render(&view.diagram, &theme))
        };
        let path = args.frames_dir.join(name);
        fs::write(&path, contents).map_err(|e| Failure::io(&path, e))?;
    }
    let manifest_path = args.frames_dir.join("manifest.json");
    let manifest =
        serde_json::to_string_pretty(&api::manifest(&frames)).expect("manifest serializes");
    fs::write(&manifest_path, manifest + "\n").map_err(|e| Failure::io(&manifest_path, e))?;
    Ok(parsed.warnings.iter().map(ToString::to_string).collect())
}
