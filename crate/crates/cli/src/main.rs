//! Command-line front end: parse a monoid description from JSON, run the
//! requested pipeline, and render the result as JSON, plain text, or a DOT
//! Hasse diagram.
//!
//! Exit codes: 0 success, 2 validation error, 3 precondition error (for
//! example a non-reduced presentation), 4 internal invariant violation.
//! Failures are reported as `{"error":{"code","message"}}` on stderr.

mod io;
mod render;

use std::collections::BTreeSet;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use deltastar_core::monoid::{
    build_affine_model, check_dc_projection, dc_lattice_affine, dc_lattice_model,
    delta_set_of_element, delta_star_affine, delta_star_presentation, enumerate_factorizations,
    is_divisor_closed_affine, min_delta_submonoid, min_delta_submonoid_affine, AffineSemigroup,
    DCLattice, DeltaStarReport, MonoidPresentation,
};
use deltastar_core::{enumerate_faces, generators_to_equations, is_simplicial, Cone, Int};

use io::{
    equation_system_doc, from_core_vec, lattice_doc, one_based, parse_element, parse_index_set,
    parse_input, CliError, DcLatticeDoc, DeltaReportDoc, FaceDoc, FacesDoc, FactorizationsDoc,
    InputDocument, NodeDoc, Num, OutputDocument, ParsedInput, PerSubmonoidDoc,
};

#[derive(Parser)]
#[command(
    name = "deltastar",
    about = "Divisor-closed submonoid lattices and sets of minimal distances, exactly",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Args)]
struct CommonArgs {
    /// Path of the input JSON document, or "-" for stdin
    #[arg(long)]
    input: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Comma-separated 1-based generator indices selecting a submonoid
    #[arg(long)]
    submonoid: Option<String>,
    /// Comma-separated coordinates of a factorization vector
    #[arg(long)]
    element: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Extremal rays and facet normals of the cone of the generators
    Rays(CommonArgs),
    /// Complete face lattice of the cone
    Faces(CommonArgs),
    /// Lattice of divisor-closed submonoids
    Dc(CommonArgs),
    /// Set of minimal distances with the per-submonoid breakdown
    DeltaStar(CommonArgs),
    /// Minimal distance of one divisor-closed submonoid
    MinDelta(CommonArgs),
    /// Check whether a generator subset spans a divisor-closed submonoid
    CheckDc(CommonArgs),
    /// Defining equations of the relation subgroup
    Gens2eqs(CommonArgs),
    /// Generators of the subgroup defined by congruences and equations
    Eqs2gens(CommonArgs),
    /// All factorizations of the element given by --element
    Factorizations(CommonArgs),
}

impl Command {
    fn args(&self) -> &CommonArgs {
        match self {
            Command::Rays(a)
            | Command::Faces(a)
            | Command::Dc(a)
            | Command::DeltaStar(a)
            | Command::MinDelta(a)
            | Command::CheckDc(a)
            | Command::Gens2eqs(a)
            | Command::Eqs2gens(a)
            | Command::Factorizations(a) => a,
        }
    }
}

fn read_input(path: &str) -> Result<InputDocument, CliError> {
    let raw = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::validation(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::validation(format!("cannot read {path}: {e}")))?
    };
    serde_json::from_str(&raw).map_err(|e| CliError::validation(format!("malformed JSON: {e}")))
}

/// The semigroup every geometric command works on: the generators for
/// affine input, the normalized column semigroup for presentations.
fn semigroup_of(parsed: &ParsedInput) -> Result<AffineSemigroup, CliError> {
    match parsed {
        ParsedInput::Affine(h) => Ok(h.clone()),
        ParsedInput::Presentation(pres) => Ok(build_affine_model(pres)?.semigroup().clone()),
    }
}

fn generator_count(parsed: &ParsedInput) -> usize {
    match parsed {
        ParsedInput::Affine(h) => h.generators().len(),
        ParsedInput::Presentation(pres) => pres.p(),
    }
}

fn fill_cone_fields(doc: &mut OutputDocument, cone: &Cone) {
    doc.dim = Some(cone.dim());
    doc.simplicial = Some(is_simplicial(cone));
    doc.rays = Some(cone.rays().iter().map(|r| from_core_vec(r)).collect());
    doc.facets = Some(
        cone.facet_normals()
            .iter()
            .map(|f| from_core_vec(f))
            .collect(),
    );
}

fn dc_lattice_doc(dc: &DCLattice) -> DcLatticeDoc {
    DcLatticeDoc {
        nodes: dc
            .nodes
            .iter()
            .map(|n| NodeDoc {
                generators: one_based(&n.generator_indices),
            })
            .collect(),
        hasse_edges: dc.hasse_edges.iter().map(|&(a, b)| [a, b]).collect(),
    }
}

fn delta_report_doc(report: &DeltaStarReport) -> DeltaReportDoc {
    DeltaReportDoc {
        delta_star: report.delta_star.iter().map(|d| Num(d.clone())).collect(),
        per_submonoid: report
            .per_submonoid
            .iter()
            .map(|(node, d)| PerSubmonoidDoc {
                generators: one_based(&node.generator_indices),
                min_delta: d.as_ref().map(|v| Num(v.clone())),
            })
            .collect(),
    }
}

fn required_submonoid(
    args: &CommonArgs,
    parsed: &ParsedInput,
) -> Result<BTreeSet<usize>, CliError> {
    let raw = args
        .submonoid
        .as_ref()
        .ok_or_else(|| CliError::validation("--submonoid i1,i2,... is required"))?;
    parse_index_set(raw, generator_count(parsed))
}

fn run(command: &Command) -> Result<OutputDocument, CliError> {
    let args = command.args();
    let input = read_input(&args.input)?;
    let parsed = parse_input(&input)?;
    let mut doc = OutputDocument::new(input);

    match command {
        Command::Rays(_) => {
            let cone = semigroup_of(&parsed)?.cone();
            fill_cone_fields(&mut doc, &cone);
        }
        Command::Faces(_) => {
            let cone = semigroup_of(&parsed)?.cone();
            let lattice = enumerate_faces(&cone);
            fill_cone_fields(&mut doc, &cone);
            doc.faces = Some(FacesDoc {
                faces: lattice
                    .faces
                    .iter()
                    .map(|f| FaceDoc {
                        generator_indices: one_based(&f.generator_indices),
                        ray_indices: one_based(&f.ray_indices),
                        dim: f.dim,
                    })
                    .collect(),
                hasse_edges: lattice.hasse_edges.iter().map(|&(a, b)| [a, b]).collect(),
            });
        }
        Command::Dc(_) => {
            let dc = match &parsed {
                ParsedInput::Affine(h) => dc_lattice_affine(h),
                ParsedInput::Presentation(pres) => {
                    let model = build_affine_model(pres)?;
                    dc_lattice_model(&model)
                }
            };
            doc.dc_lattice = Some(dc_lattice_doc(&dc));
        }
        Command::DeltaStar(_) => {
            let report = match &parsed {
                ParsedInput::Affine(h) => delta_star_affine(h)?,
                ParsedInput::Presentation(pres) => delta_star_presentation(pres)?,
            };
            doc.delta_report = Some(delta_report_doc(&report));
        }
        Command::MinDelta(args) => {
            let j = match &args.submonoid {
                Some(raw) => parse_index_set(raw, generator_count(&parsed))?,
                None => (0..generator_count(&parsed)).collect(),
            };
            let value = match &parsed {
                ParsedInput::Affine(h) => min_delta_submonoid_affine(h, &j)?,
                ParsedInput::Presentation(pres) => min_delta_submonoid(pres, &j)?,
            };
            doc.submonoid = Some(one_based(&j));
            doc.min_delta = Some(value.map(Num));
        }
        Command::CheckDc(args) => {
            let j = required_submonoid(args, &parsed)?;
            let closed = match &parsed {
                ParsedInput::Affine(h) => is_divisor_closed_affine(h, &j)?,
                ParsedInput::Presentation(pres) => {
                    let model = build_affine_model(pres)?;
                    check_dc_projection(&model, &j)?
                }
            };
            doc.submonoid = Some(one_based(&j));
            doc.divisor_closed = Some(closed);
        }
        Command::Gens2eqs(_) => {
            let lattice = match &parsed {
                ParsedInput::Affine(h) => h.defining_lattice(),
                ParsedInput::Presentation(pres) => pres.lattice().clone(),
            };
            doc.equation_system = Some(equation_system_doc(&generators_to_equations(&lattice)));
        }
        Command::Eqs2gens(_) => {
            let lattice = match &parsed {
                ParsedInput::Affine(h) => h.defining_lattice(),
                ParsedInput::Presentation(pres) => pres.lattice().clone(),
            };
            doc.group_generators = Some(lattice_doc(&lattice));
        }
        Command::Factorizations(args) => {
            let raw = args
                .element
                .as_ref()
                .ok_or_else(|| CliError::validation("--element x1,x2,... is required"))?;
            let x0 = parse_element(raw)?;
            let pres = match &parsed {
                ParsedInput::Affine(h) => MonoidPresentation::from_lattice(h.defining_lattice()),
                ParsedInput::Presentation(pres) => pres.clone(),
            };
            let factorizations = enumerate_factorizations(&pres, &x0)?;
            let delta = delta_set_of_element(&pres, &x0)?;
            let lengths: BTreeSet<Int> = factorizations.iter().map(|x| x.iter().sum()).collect();
            doc.element = Some(from_core_vec(&x0));
            doc.factorizations = Some(FactorizationsDoc {
                factorizations: factorizations.iter().map(|x| from_core_vec(x)).collect(),
                lengths: lengths.into_iter().map(Num).collect(),
                delta: delta.into_iter().map(Num).collect(),
            });
        }
    }
    Ok(doc)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.command.args().format;
    match run(&cli.command) {
        Ok(doc) => match format {
            Format::Json => {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable output")
                );
                ExitCode::SUCCESS
            }
            Format::Text => {
                print!("{}", render::render_text(&doc));
                ExitCode::SUCCESS
            }
            Format::Dot => match render::render_dot(&doc) {
                Some(dot) => {
                    print!("{dot}");
                    ExitCode::SUCCESS
                }
                None => {
                    report_error(&CliError::validation(
                        "dot output is only available for the faces and dc commands",
                    ));
                    ExitCode::from(2)
                }
            },
        },
        Err(e) => {
            report_error(&e);
            ExitCode::from(e.code as u8)
        }
    }
}

fn report_error(e: &CliError) {
    eprintln!(
        "{}",
        serde_json::json!({"error": {"code": e.code, "message": e.message}})
    );
}
