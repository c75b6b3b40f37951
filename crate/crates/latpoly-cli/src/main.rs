//! Command-line surface for the latpoly library.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use latpoly::cayley::{cayley_sum, face_from_vertex_indices, is_cayley, toric_blow_up};
use latpoly::classify::{
    list_smooth_2d, load_classification_3d, tally_cayley, tally_lattice_points,
};
use latpoly::gauss::gauss_k;
use latpoly::io::{
    format_monomial, format_rational, parse_indices, parse_rational_point, polytope_from_json,
    polytope_to_json,
};
use latpoly::jets::{degree_of_jet_separation, jet_matrix, JetPoint, PointConfiguration};
use latpoly::seshadri::{epsilon_bounds_with_cap, DEFAULT_DILATION_CAP};
use latpoly::LatticePolytope;

#[derive(Parser)]
#[command(name = "latpoly", version, about = "Exact lattice polytope computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PointArg {
    /// Rational evaluation point, e.g. "1,1" or "1/2,3"
    #[arg(long, conflicts_with = "generic")]
    point: Option<String>,
    /// Evaluate at the general point of the torus
    #[arg(long)]
    generic: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List all smooth lattice polygons with at most N lattice points
    Smooth2d {
        #[arg(long = "max-points")]
        max_points: usize,
        /// Print only the lattice-point-count tally
        #[arg(long)]
        tally: bool,
    },
    /// Decide whether a polytope has a Cayley structure (lattice width 1)
    IsCayley { file: String },
    /// Cayley sum of two or more polytopes of equal dimension
    CayleySum {
        files: Vec<String>,
        #[arg(long, default_value_t = 1)]
        scale: u64,
    },
    /// Cut off a face at depth k (polytopal toric blow-up)
    Blowup {
        file: String,
        /// Indices into the polytope's sorted vertex list, e.g. "0" or "1,2"
        #[arg(long = "face-vertices")]
        face_vertices: String,
        #[arg(long)]
        k: u64,
    },
    /// List all lattice points of a polytope
    LatticePoints { file: String },
    /// Decide whether a polytope is smooth
    IsSmooth { file: String },
    /// Print the order-k jet matrix of a polytope's lattice points
    Jets {
        file: String,
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        at: PointArg,
    },
    /// Largest k such that the lattice points are k-jet spanned at a point
    JetDegree {
        file: String,
        #[command(flatten)]
        at: PointArg,
    },
    /// Exact lower/upper bounds for the Seshadri constant at a general point
    Epsilon {
        file: String,
        /// Width-direction search bound
        #[arg(long)]
        n: u64,
        /// Dilation cap for the jet lower bound
        #[arg(long, default_value_t = DEFAULT_DILATION_CAP)]
        dcap: u64,
    },
    /// Image or general fiber of the order-k Gauss map
    Gauss {
        file: String,
        #[arg(long)]
        order: usize,
        #[arg(long, conflicts_with = "fiber")]
        image: bool,
        #[arg(long)]
        fiber: bool,
    },
    /// Canonical representative of the affine-unimodular class
    NormalForm { file: String },
    /// Load and validate an external 3D classification file
    #[command(name = "load-3d")]
    Load3d {
        file: String,
        /// Print only the Cayley tally
        #[arg(long = "tally-cayley")]
        tally_cayley: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are not usage errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    if let Ok(threads) = std::env::var("LATPOLY_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }

    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(RunError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(RunError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

enum RunError {
    Usage(String),
    Domain(latpoly::Error),
}

impl From<latpoly::Error> for RunError {
    fn from(e: latpoly::Error) -> Self {
        RunError::Domain(e)
    }
}

fn load(file: &str) -> Result<LatticePolytope, RunError> {
    let text =
        fs::read_to_string(file).map_err(|e| RunError::Usage(format!("cannot read {file}: {e}")))?;
    Ok(polytope_from_json(&text)?)
}

fn jet_point(at: &PointArg, ambient_dim: usize) -> Result<JetPoint, RunError> {
    match (&at.point, at.generic) {
        (Some(s), false) => {
            let coords = parse_rational_point(s)?;
            if coords.len() != ambient_dim {
                return Err(RunError::Usage(format!(
                    "point has {} coordinates, polytope lives in dimension {ambient_dim}",
                    coords.len()
                )));
            }
            Ok(JetPoint::Rational(coords))
        }
        (None, true) => Ok(JetPoint::Generic),
        _ => Err(RunError::Usage(
            "exactly one of --point and --generic is required".into(),
        )),
    }
}

fn run(command: Command) -> Result<(), RunError> {
    match command {
        Command::Smooth2d { max_points, tally } => {
            let records = list_smooth_2d(max_points)?;
            if tally {
                let t = tally_lattice_points(&records);
                let parts: Vec<String> =
                    t.iter().map(|(k, v)| format!("{k}:{v}")).collect();
                println!("{}", parts.join(" "));
            } else {
                for r in &records {
                    println!("{}", polytope_to_json(&r.polytope, None));
                }
            }
        }
        Command::IsCayley { file } => {
            let p = load(&file)?;
            println!("{}", is_cayley(&p)?.is_some());
        }
        Command::CayleySum { files, scale } => {
            if files.len() < 2 {
                return Err(RunError::Usage("cayley-sum needs at least two files".into()));
            }
            let ps = files
                .iter()
                .map(|f| load(f))
                .collect::<Result<Vec<_>, _>>()?;
            println!("{}", polytope_to_json(&cayley_sum(&ps, scale)?, None));
        }
        Command::Blowup {
            file,
            face_vertices,
            k,
        } => {
            let p = load(&file)?;
            let indices = parse_indices(&face_vertices)?;
            let q = face_from_vertex_indices(&p, &indices)?;
            println!("{}", polytope_to_json(&toric_blow_up(&p, &q, k)?, None));
        }
        Command::LatticePoints { file } => {
            let p = load(&file)?;
            for pt in p.lattice_points() {
                let coords: Vec<String> = pt.iter().map(|x| x.to_string()).collect();
                println!("{}", coords.join(","));
            }
        }
        Command::IsSmooth { file } => {
            let p = load(&file)?;
            println!("{}", p.is_smooth());
        }
        Command::Jets { file, order, at } => {
            let p = load(&file)?;
            let config = PointConfiguration::from_polytope(&p);
            let point = jet_point(&at, p.ambient_dim())?;
            let jm = jet_matrix(&config, order, &point)?;
            for i in 0..jm.matrix.rows() {
                let row: Vec<String> = (0..jm.matrix.cols())
                    .map(|j| format_rational(&jm.matrix[(i, j)]))
                    .collect();
                println!("{}", row.join(" "));
            }
        }
        Command::JetDegree { file, at } => {
            let p = load(&file)?;
            let config = PointConfiguration::from_polytope(&p);
            let point = jet_point(&at, p.ambient_dim())?;
            println!("{}", degree_of_jet_separation(&config, &point)?);
        }
        Command::Epsilon { file, n, dcap } => {
            let p = load(&file)?;
            let b = epsilon_bounds_with_cap(&p, n, dcap)?;
            let (d, s) = b.lower_witness;
            let (dir, width) = &b.upper_witness;
            let dir: Vec<String> = dir.iter().map(|x| x.to_string()).collect();
            println!(
                "lower {} (jet degree {s} at dilation {d})",
                format_rational(&b.lower)
            );
            println!(
                "upper {} (width {width} in direction {})",
                format_rational(&b.upper),
                dir.join(",")
            );
        }
        Command::Gauss {
            file,
            order,
            image,
            fiber,
        } => {
            if image == fiber {
                return Err(RunError::Usage(
                    "exactly one of --image and --fiber is required".into(),
                ));
            }
            let p = load(&file)?;
            let config = PointConfiguration::from_polytope(&p);
            let res = gauss_k(&config, order)?;
            let exps = if image {
                &res.image_exponents
            } else {
                &res.fiber_exponents
            };
            let monos: Vec<String> = exps.iter().map(|e| format_monomial(e)).collect();
            println!("{}", monos.join(" "));
        }
        Command::NormalForm { file } => {
            let p = load(&file)?;
            println!("{}", polytope_to_json(&p.normal_form()?, None));
        }
        Command::Load3d { file, tally_cayley: tally } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| RunError::Usage(format!("cannot read {file}: {e}")))?;
            let records = load_classification_3d(&text)?;
            if tally {
                let t = tally_cayley(&records);
                let parts: Vec<String> =
                    t.iter().map(|(k, v)| format!("{k}:{v}")).collect();
                println!("{}", parts.join(" "));
            } else {
                for r in &records {
                    println!("{}", polytope_to_json(&r.polytope, None));
                }
            }
        }
    }
    Ok(())
}
