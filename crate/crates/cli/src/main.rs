//! `quadfold`: JSON front end for the quadrilateral configuration-space library.

mod expr;
mod output;
mod svg;

use clap::{Args, Parser, Subcommand, ValueEnum};
use expr::{common_field, parse_expr, parse_rational, ExprError};
use quadfold::conjugacy::{conjugate_quad, identity_residuals};
use quadfold::curves::{angle_curves, degenerate_components, diagonal_curve};
use quadfold::fold::{detect_period_numeric, fold_orbit};
use quadfold::ivory::{ivory_check, ConfocalSpec};
use quadfold::param::build;
use quadfold::periodicity::{find_periodic, period_report, GridSpec, SideRange};
use quadfold::quad::embed;
use quadfold::sides::{conjugate_sides, validate_and_classify};
use quadfold::{tol, Branch, FoldPair, Geometry, Kind, PeriodMethod, Quadrilateral, SideLengths};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] quadfold::Error),
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Expr(_) | CliError::Usage(_) | CliError::Json(_) => 2,
            CliError::Core(e) if e.is_validation() => 2,
            CliError::Core(_) | CliError::Io(_) => 3,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GeometryArg {
    Euclidean,
    Spherical,
    Hyperbolic,
}

impl From<GeometryArg> for Geometry {
    fn from(g: GeometryArg) -> Self {
        match g {
            GeometryArg::Euclidean => Geometry::Euclidean,
            GeometryArg::Spherical => Geometry::Spherical,
            GeometryArg::Hyperbolic => Geometry::Hyperbolic,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BranchArg {
    #[value(name = "+", alias = "plus")]
    Plus,
    #[value(name = "-", alias = "minus")]
    Minus,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Plus => Branch::Plus,
            BranchArg::Minus => Branch::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PairArg {
    Cd,
    Bc,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Hankel,
    Sigma,
    Numeric,
    Closed,
}

impl From<MethodArg> for PeriodMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Hankel => PeriodMethod::Hankel,
            MethodArg::Sigma => PeriodMethod::SigmaRational,
            MethodArg::Numeric => PeriodMethod::NumericFold,
            MethodArg::Closed => PeriodMethod::ClosedForm,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "quadfold",
    version,
    about = "Configuration spaces of quadrilaterals with fixed side lengths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SidesArgs {
    /// Four side lengths, e.g. `1,3,3*sqrt(5),5`.
    #[arg(long, allow_hyphen_values = true)]
    sides: String,
    #[arg(long, value_enum, default_value = "euclidean")]
    geometry: GeometryArg,
}

#[derive(Debug, Args)]
struct ShapeArgs {
    /// Side lengths; required unless `--quad` is given.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "quad")]
    sides: Option<String>,
    #[arg(long, value_enum, default_value = "euclidean")]
    geometry: GeometryArg,
    /// Turning angle at the first vertex.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "quad")]
    phi1: Option<f64>,
    #[arg(long, value_enum, default_value = "+")]
    branch: BranchArg,
    /// A quadrilateral record previously emitted by this tool.
    #[arg(long, conflicts_with_all = ["sides", "phi1"])]
    quad: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Type, Grashof flag and period-lattice shape of the side lengths.
    Classify(SidesArgs),
    /// The six angle curves and the diagonal curve.
    Curves(SidesArgs),
    /// Real-form parametrization of the configuration space.
    Param(SidesArgs),
    /// Folding orbit of a quadrilateral.
    Fold {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value = "cd")]
        pair: PairArg,
        #[arg(long, default_value_t = 6)]
        steps: usize,
        /// Write the orbit as an SVG file.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Least folding periods.
    Period {
        #[command(flatten)]
        sides: SidesArgs,
        #[arg(long, default_value_t = 12)]
        max_n: u32,
        #[arg(long, value_enum, default_value = "sigma")]
        method: MethodArg,
        /// Starting angle for the numeric method.
        #[arg(long, allow_hyphen_values = true)]
        phi1: Option<f64>,
        #[arg(long, value_enum, default_value = "+")]
        branch: BranchArg,
    },
    /// The conjugate quadrilateral with the same diagonals.
    Conjugate {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Diagonals of a quadrilateral cut out by confocal conics.
    Ivory {
        #[arg(long, value_enum, default_value = "euclidean")]
        geometry: GeometryArg,
        #[arg(long)]
        c: f64,
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<f64>,
        #[arg(long, value_delimiter = ',', required = true)]
        mu: Vec<f64>,
    },
    /// Residuals of the conjugate-side identities.
    Identities {
        #[arg(long, allow_hyphen_values = true)]
        sides: String,
        #[arg(long, value_enum, default_value = "euclidean")]
        geometry: GeometryArg,
    },
    /// Grid search for periodic side lengths, one JSON line per hit.
    Search {
        /// Four comma-separated ranges `lo:hi:step` or single values.
        #[arg(long)]
        grid: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "sigma")]
        method: MethodArg,
    },
}

fn split4(s: &str) -> CliResult<[&str; 4]> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    parts.try_into().map_err(|p: Vec<&str>| {
        CliError::Usage(format!(
            "expected four comma-separated values, got {}",
            p.len()
        ))
    })
}

fn parse_sides(s: &str, g: GeometryArg) -> CliResult<SideLengths> {
    let values = split4(s)?.map(parse_expr);
    let values: Vec<expr::Value> = values.into_iter().collect::<Result<_, _>>()?;
    let geometry = Geometry::from(g);
    if geometry == Geometry::Euclidean {
        if let Some(exact) = common_field(&values) {
            let exact: [quadfold::QuadSurd; 4] = exact.try_into().expect("four values");
            return Ok(SideLengths::exact(exact)?);
        }
    }
    let approx: [f64; 4] = std::array::from_fn(|i| values[i].approx);
    Ok(SideLengths::new(approx, geometry)?)
}

/// Outputs derive their side lengths from the quadrilateral alone, so an
/// emitted record fed back through `--quad` reproduces them bit for bit.
fn load_shape(shape: &ShapeArgs) -> CliResult<Quadrilateral> {
    if let Some(path) = &shape.quad {
        let text = std::fs::read_to_string(path)?;
        return Ok(serde_json::from_str(&text)?);
    }
    let sides = shape.sides.as_deref().expect("clap requires sides");
    let a = parse_sides(sides, shape.geometry)?;
    let phi1 = shape.phi1.expect("clap requires phi1");
    Ok(embed(&a, phi1, shape.branch.into())?)
}

#[derive(Serialize)]
struct ClassifyOut<'a> {
    sides: &'a SideLengths,
    classification: quadfold::Classification,
}

#[derive(Serialize)]
struct CurvesOut {
    angle_curves: [quadfold::curves::BiquadraticCoeffs; 6],
    diagonal_curve: quadfold::curves::DiagonalCurveCoeffs,
    #[serde(skip_serializing_if = "Option::is_none")]
    components: Option<Vec<quadfold::curves::CurveComponent>>,
}

#[derive(Serialize)]
struct Step {
    step: usize,
    angles: quadfold::AngleData,
    diagonals: quadfold::DiagonalPair,
    quadrilateral: Quadrilateral,
}

#[derive(Serialize)]
struct FoldOut {
    sides: [f64; 4],
    pair: FoldPair,
    steps: Vec<Step>,
}

#[derive(Serialize)]
struct ConjugateOut {
    sides: [f64; 4],
    conjugate_sides: [f64; 4],
    diagonals: quadfold::DiagonalPair,
    conjugate_diagonals: quadfold::DiagonalPair,
    quadrilateral: Quadrilateral,
    conjugate: Quadrilateral,
}

#[derive(Serialize)]
struct IdentitiesOut {
    geometry: Geometry,
    residuals: Vec<f64>,
    worst: f64,
}

fn emit<T: Serialize>(out: &mut impl Write, value: &T) -> CliResult<()> {
    writeln!(out, "{}", output::to_string(value)?)?;
    Ok(())
}

fn parse_grid(s: &str) -> CliResult<GridSpec> {
    let ranges = split4(s)?.map(|r| -> CliResult<SideRange> {
        let parts: Vec<&str> = r.split(':').collect();
        match parts.as_slice() {
            [v] => Ok(SideRange::single(parse_rational(v)?)),
            [lo, hi, step] => Ok(SideRange::new(
                parse_rational(lo)?,
                parse_rational(hi)?,
                parse_rational(step)?,
            )?),
            _ => Err(CliError::Usage(format!(
                "bad range {r:?}; expected lo:hi:step"
            ))),
        }
    });
    let [a, b, c, d] = ranges;
    Ok(GridSpec {
        ranges: [a?, b?, c?, d?],
    })
}

fn run(cli: Cli, out: &mut impl Write) -> CliResult<()> {
    match cli.command {
        Command::Classify(s) => {
            let a = parse_sides(&s.sides, s.geometry)?;
            emit(
                out,
                &ClassifyOut {
                    sides: &a,
                    classification: validate_and_classify(&a),
                },
            )
        }
        Command::Curves(s) => {
            let a = parse_sides(&s.sides, s.geometry)?;
            let kind = validate_and_classify(&a).kind;
            let degenerate = !matches!(kind, Kind::Elliptic | Kind::Conic(_));
            let components = if degenerate && a.geometry() == Geometry::Euclidean {
                degenerate_components(&a).ok()
            } else {
                None
            };
            emit(
                out,
                &CurvesOut {
                    angle_curves: angle_curves(&a),
                    diagonal_curve: diagonal_curve(&a),
                    components,
                },
            )
        }
        Command::Param(s) => {
            let a = parse_sides(&s.sides, s.geometry)?;
            emit(out, &build(&a)?)
        }
        Command::Fold {
            shape,
            pair,
            steps,
            svg,
        } => {
            let q = load_shape(&shape)?;
            let pair = match pair {
                PairArg::Cd => FoldPair::CD,
                PairArg::Bc => FoldPair::BC,
            };
            let orbit = fold_orbit(&q, pair, steps)?;
            if let Some(path) = svg {
                std::fs::write(path, svg::render_orbit(&orbit))?;
            }
            let steps = orbit
                .into_iter()
                .enumerate()
                .map(|(step, q)| Step {
                    step,
                    angles: q.angles(),
                    diagonals: q.diagonals(),
                    quadrilateral: q,
                })
                .collect();
            emit(
                out,
                &FoldOut {
                    sides: q.side_values(),
                    pair,
                    steps,
                },
            )
        }
        Command::Period {
            sides,
            max_n,
            method,
            phi1,
            branch,
        } => {
            let a = parse_sides(&sides.sides, sides.geometry)?;
            let method = PeriodMethod::from(method);
            let report = match (method, phi1) {
                (PeriodMethod::NumericFold, Some(phi)) => {
                    detect_period_numeric(&embed(&a, phi, branch.into())?, max_n, tol::FOLD_RETURN)?
                }
                _ => period_report(&a, method, max_n)?,
            };
            emit(out, &report)
        }
        Command::Conjugate { shape } => {
            let q = load_shape(&shape)?;
            let c = conjugate_quad(&q)?;
            let bar = conjugate_sides(&q.sides()?)?;
            emit(
                out,
                &ConjugateOut {
                    sides: q.side_values(),
                    conjugate_sides: bar.values(),
                    diagonals: q.diagonals(),
                    conjugate_diagonals: c.diagonals(),
                    quadrilateral: q,
                    conjugate: c,
                },
            )
        }
        Command::Ivory {
            geometry,
            c,
            lambda,
            mu,
        } => {
            if lambda.len() != 2 || mu.len() != 2 {
                return Err(CliError::Usage(
                    "--lambda and --mu take two comma-separated values".into(),
                ));
            }
            let spec = ConfocalSpec {
                geometry: geometry.into(),
                c,
                lambda: (lambda[0], lambda[1]),
                mu: (mu[0], mu[1]),
            };
            emit(out, &ivory_check(&spec)?)
        }
        Command::Identities { sides, geometry } => {
            let values = split4(&sides)?.map(parse_expr);
            let v: Vec<f64> = values
                .into_iter()
                .map(|r| r.map(|x| x.approx))
                .collect::<Result<_, _>>()?;
            let residuals = identity_residuals([v[0], v[1], v[2], v[3]], geometry.into());
            let worst = residuals.iter().cloned().fold(0.0, f64::max);
            emit(
                out,
                &IdentitiesOut {
                    geometry: geometry.into(),
                    residuals,
                    worst,
                },
            )
        }
        Command::Search { grid, n, method } => {
            let grid = parse_grid(&grid)?;
            for hit in find_periodic(&grid, n, method.into())? {
                emit(out, &hit)?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out).and_then(|()| out.flush().map_err(CliError::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
