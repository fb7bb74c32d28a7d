use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use queue_posets::io::{
    self, diagram_json, export_diagram, export_poset, layout_json, parse_layout, parse_poset,
    poset_json, ExportFormat, Parsed,
};
use queue_posets::strategies::{
    any_extension_layout, color_split_extension, crown_free_layout, lazy_width2_layout,
    leftmost_layout, paired_chain_layout, planar_width_layout, CrownFreeResult,
};
use queue_posets::{
    assign_queues, exact_queue_number_with, verify_layout, Error, Poset, QueueLayout,
    SolveOptions, SolveOutcome,
};

#[derive(Parser)]
#[command(
    name = "queue-posets",
    version,
    about = "Queue layouts of partially ordered sets",
    after_help = "Exit codes: 0 = success / bound met, 1 = bound exceeded or \
                  verification failed, 2 = input error."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Structural summary: size, width, height, bounds, crown obstruction
    Analyze { file: PathBuf },
    /// Lay out a poset and write the layout as JSON
    Layout {
        file: PathBuf,
        #[arg(long, value_enum)]
        strategy: Strategy,
        /// Write the layout JSON here instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Exact queue number by exhaustive search
    Exact {
        file: PathBuf,
        /// Stop searching past this queue count
        #[arg(long)]
        limit: Option<usize>,
        /// Wall-clock budget in seconds
        #[arg(long)]
        budget: Option<f64>,
        /// Write the witness layout JSON here
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Emit a generated poset or diagram as JSON
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Check a layout file against its poset
    Verify { poset: PathBuf, layout: PathBuf },
    /// Re-emit a poset or diagram file as JSON or DOT
    Export {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Layout JSON whose queues color the DOT edges
        #[arg(long)]
        layout: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    /// Deterministic topological order; ≤ width² queues
    Any,
    /// Lazy extension for width ≤ 2; ≤ 2 queues
    Lazy2,
    /// Paired chain merge; ≤ w²−2⌊w/2⌋ queues
    Paired,
    /// Gray-graph order or crown certificate; ≤ width queues
    Crownfree,
    /// Leftmost extension of a two-dimensional bounded order
    Leftmost,
    /// Planar drawing augmentation; ≤ 3·width−2 queues
    Planarw,
    /// Height levels over the element order; rainbow ≤ 2(h−1)k
    Colorsplit,
}

#[derive(Subcommand)]
enum Family {
    /// Subdivided crown on 3k elements
    Crown {
        #[arg(long)]
        k: usize,
    },
    /// Chain of antichains with the given level sizes
    Weak {
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        levels: Vec<usize>,
    },
    /// Width-w tower with its plane drawing
    Qw {
        #[arg(long)]
        w: usize,
    },
    /// Height-h tower
    Qh {
        #[arg(long)]
        h: usize,
    },
    /// Height-2 order on 48 elements with no small-rainbow extension
    Counterexample,
    /// Named 4-element pattern: "2+2" or "N"
    Pattern {
        #[arg(long)]
        name: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

fn main() -> ExitCode {
    // Die silently on a closed pipe (`queue-posets … | head`) instead of
    // panicking: restore the default SIGPIPE disposition Rust masks.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// 1 = the mathematics said no (bound exceeded, precondition unmet);
/// 2 = the input itself is unusable.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::WidthExceeded { .. }
        | Error::NotTwoDimensional
        | Error::MissingBounds(_)
        | Error::AugmentationFailed(_) => 1,
        _ => 2,
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Parsed, Error> {
    parse_poset(&read(path)?)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Error> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Analyze { file } => analyze(&file),
        Cmd::Layout {
            file,
            strategy,
            output,
        } => layout_cmd(&file, strategy, output.as_deref()),
        Cmd::Exact {
            file,
            limit,
            budget,
            output,
        } => exact_cmd(&file, limit, budget, output.as_deref()),
        Cmd::Generate { family } => generate(family),
        Cmd::Verify { poset, layout } => verify(&poset, &layout),
        Cmd::Export {
            file,
            format,
            layout,
        } => export(&file, format, layout.as_deref()),
    }
}

fn analyze(file: &Path) -> Result<ExitCode, Error> {
    let parsed = load(file)?;
    let p = parsed.poset();
    let w = p.width()?;
    let h = p.height()?;
    println!("elements: {}", p.n());
    println!("covers: {}", p.covers().len());
    println!("width: {}", w.width);
    println!("height: {}", h.height);
    println!(
        "zero: {}",
        p.zero().map_or("none".into(), |z| p.label(z).to_owned())
    );
    println!(
        "one: {}",
        p.one().map_or("none".into(), |o| p.label(o).to_owned())
    );
    match crown_free_layout(p)? {
        CrownFreeResult::Layout(l) => {
            println!("crown: none ({} queues from the gray-graph order)", l.queue_count)
        }
        CrownFreeResult::Embedded(e) => {
            let (a, b, c) = e.to_labels(p);
            println!("crown: k={} a={a:?} b={b:?} c={c:?}", e.k);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn layout_cmd(file: &Path, strategy: Strategy, output: Option<&Path>) -> Result<ExitCode, Error> {
    let parsed = load(file)?;
    let p = parsed.poset();
    let layout = match strategy {
        Strategy::Any => any_extension_layout(p)?,
        Strategy::Lazy2 => lazy_width2_layout(p)?,
        Strategy::Paired => paired_chain_layout(p)?,
        Strategy::Crownfree => match crown_free_layout(p)? {
            CrownFreeResult::Layout(l) => l,
            CrownFreeResult::Embedded(e) => {
                let (a, b, c) = e.to_labels(p);
                eprintln!("embedded {}-crown: a={a:?} b={b:?} c={c:?}", e.k);
                return Ok(ExitCode::from(1));
            }
        },
        Strategy::Leftmost => leftmost_layout(p, parsed.diagram())?,
        Strategy::Planarw => {
            let d = parsed.diagram().ok_or_else(|| {
                Error::Parse("the planarw strategy needs a file with positions".into())
            })?;
            planar_width_layout(d)?
        }
        Strategy::Colorsplit => {
            let identity =
                queue_posets::LinearExtension::permutation(p.n(), (0..p.n()).collect())?;
            let ext = color_split_extension(p, &identity, &p.min_removal_levels())?;
            assign_queues(p, &ext)?
        }
    };
    finish_layout(p, &layout, output)
}

fn finish_layout(
    p: &Poset,
    layout: &QueueLayout,
    output: Option<&Path>,
) -> Result<ExitCode, Error> {
    emit(&layout_json(p, layout), output)?;
    eprintln!("queues: {}", layout.queue_count);
    Ok(ExitCode::SUCCESS)
}

fn exact_cmd(
    file: &Path,
    limit: Option<usize>,
    budget: Option<f64>,
    output: Option<&Path>,
) -> Result<ExitCode, Error> {
    let parsed = load(file)?;
    let p = parsed.poset();
    let opts = SolveOptions {
        limit,
        budget: budget.map(Duration::from_secs_f64),
        threads: None,
    };
    match exact_queue_number_with(p, &opts) {
        SolveOutcome::Exact { k, layout } => {
            println!("queue number: {k}");
            if let Some(path) = output {
                emit(&layout_json(p, &layout), Some(path))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        SolveOutcome::LowerBoundOnly { lower_bound } => {
            println!("queue number: >= {lower_bound} (limit reached)");
            Ok(ExitCode::from(1))
        }
        SolveOutcome::Timeout { lower_bound } => {
            println!("queue number: >= {lower_bound} (budget exhausted)");
            Ok(ExitCode::from(1))
        }
    }
}

fn generate(family: Family) -> Result<ExitCode, Error> {
    use queue_posets::constructions as gen;
    let text = match family {
        Family::Crown { k } => poset_json(&gen::subdivided_crown(k)?),
        Family::Weak { levels } => poset_json(&gen::weak_order(&levels)?),
        Family::Qw { w } => diagram_json(&gen::q_width(w)?.1),
        Family::Qh { h } => poset_json(&gen::q_height(h)?.0),
        Family::Counterexample => poset_json(&gen::height2_counterexample().0),
        Family::Pattern { name } => poset_json(&gen::small_patterns(&name)?),
    };
    println!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn verify(poset_file: &Path, layout_file: &Path) -> Result<ExitCode, Error> {
    let parsed = load(poset_file)?;
    let p = parsed.poset();
    let layout = parse_layout(p, &read(layout_file)?)?;
    match verify_layout(p, &layout) {
        Ok(()) => {
            println!("valid: {} queues", layout.queue_count);
            Ok(ExitCode::SUCCESS)
        }
        Err(report) => {
            println!("invalid: {report}");
            Ok(ExitCode::from(1))
        }
    }
}

fn export(file: &Path, format: Format, layout_file: Option<&Path>) -> Result<ExitCode, Error> {
    let parsed = load(file)?;
    let p = parsed.poset();
    let text = match (layout_file, format) {
        (Some(lf), Format::Dot) => {
            let layout = parse_layout(p, &read(lf)?)?;
            io::to_dot(p, Some(&layout), parsed.diagram().map(|d| d.positions()))
        }
        (Some(lf), Format::Json) => {
            let layout = parse_layout(p, &read(lf)?)?;
            layout_json(p, &layout)
        }
        (None, _) => {
            let f = match format {
                Format::Json => ExportFormat::Json,
                Format::Dot => ExportFormat::Dot,
            };
            match parsed.diagram() {
                Some(d) => export_diagram(d, f),
                None => export_poset(p, f),
            }
        }
    };
    println!("{text}");
    Ok(ExitCode::SUCCESS)
}
