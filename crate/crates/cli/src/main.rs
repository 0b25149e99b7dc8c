//! `leibrack`: build and verify racks, Yetter-Drinfel'd modules and braided
//! Leibniz algebras from JSON inputs.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on bad
//! input or usage.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use commands::CliError;
use leibrack::Field;
use report::RunReport;

#[derive(Parser)]
#[command(
    name = "leibrack",
    version,
    about = "Exact checks for racks, YD modules and braided Leibniz algebras"
)]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Truncation degree for enveloping-algebra computations.
    #[arg(long, global = true, default_value_t = 2)]
    degree: usize,
    /// `rational` or `gfp:<p>`.
    #[arg(long, global = true, default_value = "rational")]
    field: Field,
    /// Print matrices as rows of space-separated integers.
    #[arg(long, global = true)]
    paper_layout: bool,
    /// Fail unless every emitted matrix entry is an integer.
    #[arg(long, global = true)]
    integers: bool,
    /// Also write the full report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Witnesses printed per check.
    #[arg(long, global = true, default_value_t = 5, value_name = "K")]
    witness_limit: usize,
    /// Print wall-clock time to stderr.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Args)]
struct In {
    /// Input JSON file, or `-` for stdin.
    input: PathBuf,
}

#[derive(Args)]
struct Out {
    /// Write the constructed object as JSON.
    #[arg(short, long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Shelf, rack and quandle axioms of an operation table.
    CheckRack(In),
    /// The dihedral quandle on Z/n.
    MakeDihedral {
        n: usize,
        #[command(flatten)]
        out: Out,
    },
    /// The conjugation rack of a group (name like S3, Z4, or a group file).
    MakeConjugation {
        group: String,
        /// Emit the augmented rack over the group instead of the bare rack.
        #[arg(long)]
        augmented: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Augment a rack over the group generated by its right translations.
    InnerAugmentation {
        #[command(flatten)]
        input: In,
        #[command(flatten)]
        out: Out,
    },
    /// The augmentation identity and the induced rack.
    CheckAugmented(In),
    /// The set-level braiding of an augmented rack.
    RackBraiding {
        #[command(flatten)]
        input: In,
        #[command(flatten)]
        out: Out,
    },
    /// Linearize an augmented rack to a YD module over its group algebra.
    Linearize {
        #[command(flatten)]
        input: In,
        #[command(flatten)]
        out: Out,
    },
    /// Yetter-Drinfel'd compatibility of a module.
    CheckYd(In),
    /// The braiding of a YD module on M ⊗ M.
    BraidingMatrix {
        #[command(flatten)]
        input: In,
        #[command(flatten)]
        out: Out,
    },
    /// The braid relation for a braiding matrix or a module's braiding.
    CheckYbe(In),
    /// The left Leibniz identity on structure constants.
    CheckLeibniz(In),
    /// The quotient by the ideal spanned by squares.
    LieQuotient {
        #[command(flatten)]
        input: In,
        #[command(flatten)]
        out: Out,
    },
    /// The unital shelf on k ⊕ g (Heisenberg-Voros when no input is given).
    UnitalShelf {
        /// Leibniz algebra file.
        input: Option<PathBuf>,
    },
    /// The first-order YD module of a Leibniz algebra.
    FirstOrderYd {
        #[command(flatten)]
        input: In,
        #[command(flatten)]
        out: Out,
    },
    /// The 16×16 braiding of the Heisenberg-Voros first-order module.
    HvRmatrix(Out),
    /// Build the enveloping tetramodule and check its structure.
    EnvBuild(In),
    /// Checks on the map into ker ε of the truncated enveloping algebra.
    EnvChecks(In),
    /// Recover the bracket from the enveloping tetramodule.
    Theorem1Bracket {
        #[command(flatten)]
        input: In,
        #[command(flatten)]
        out: Out,
    },
    /// Equivariance and coderivation conditions for q.
    QConditions(In),
    /// The braided Leibniz identity.
    BraidedLeibniz {
        #[command(flatten)]
        input: In,
        #[command(flatten)]
        out: Out,
    },
    /// The function-algebra dual of an augmented rack.
    DualCheck(In),
}

fn run(cli: &Cli, r: &mut RunReport) -> Result<(), CliError> {
    use commands::*;
    let ctx = Ctx {
        field: cli.opts.field,
        degree: cli.opts.degree,
        paper_layout: cli.opts.paper_layout,
        integers: cli.opts.integers,
    };
    let load = |i: &In| read_input(&i.input);
    match &cli.command {
        Command::CheckRack(i) => check_rack(r, load(i)?),
        Command::MakeDihedral { n, out } => make_dihedral(r, *n, &out.out),
        Command::MakeConjugation { group, augmented, out } => make_conjugation(r, group, *augmented, &out.out),
        Command::InnerAugmentation { input, out } => inner_aug(r, load(input)?, &out.out),
        Command::CheckAugmented(i) => check_aug(r, load(i)?),
        Command::RackBraiding { input, out } => rack_braiding(r, load(input)?, &out.out),
        Command::Linearize { input, out } => linearize(r, &ctx, load(input)?, &out.out),
        Command::CheckYd(i) => check_yd_cmd(r, &ctx, load(i)?),
        Command::BraidingMatrix { input, out } => braiding_matrix(r, &ctx, load(input)?, &out.out),
        Command::CheckYbe(i) => check_ybe_cmd(r, &ctx, load(i)?),
        Command::CheckLeibniz(i) => check_leibniz_cmd(r, &ctx, load(i)?),
        Command::LieQuotient { input, out } => lie_quotient_cmd(r, &ctx, load(input)?, &out.out),
        Command::UnitalShelf { input } => {
            let input = input.as_ref().map(|p| read_input(p)).transpose()?;
            unital_shelf_cmd(r, &ctx, input)
        }
        Command::FirstOrderYd { input, out } => first_order_cmd(r, &ctx, load(input)?, &out.out),
        Command::HvRmatrix(out) => hv_rmatrix_cmd(r, &ctx, &out.out),
        Command::EnvBuild(i) => env_build(r, &ctx, load(i)?),
        Command::EnvChecks(i) => env_checks(r, &ctx, load(i)?),
        Command::Theorem1Bracket { input, out } => theorem1(r, &ctx, load(input)?, &out.out),
        Command::QConditions(i) => q_conditions(r, &ctx, load(i)?),
        Command::BraidedLeibniz { input, out } => braided_leibniz_cmd(r, &ctx, load(input)?, &out.out),
        Command::DualCheck(i) => dual_check(r, load(i)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let mut report = RunReport::new(argv, cli.opts.field.to_string(), cli.opts.witness_limit);
    let start = Instant::now();
    let outcome = run(&cli, &mut report).and_then(|()| {
        if let Some(path) = &cli.opts.json {
            let mut text = serde_json::to_string_pretty(&report)?;
            text.push('\n');
            std::fs::write(path, text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
        }
        Ok(())
    });
    if cli.opts.timing {
        eprintln!("time: {:.3} ms", start.elapsed().as_secs_f64() * 1e3);
    }
    match outcome {
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Ok(()) => {
            print!("{}", report.render());
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
