//! Command surface of the `ditopo` tool. Each command produces an
//! [`Outcome`]: a text report, the same report as JSON and a status that
//! becomes the exit code.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cat::{endo_monoid_with_depth, hom_classes, PresentedCategory, DEFAULT_DEPTH};
use crate::catalog::example;
use crate::cover::{Cover, CoverDocument};
use crate::cubical::{dihomotopy_classes, enumerate_paths, CubicalSpace, LatticePath, Vertex};
use crate::dipath::{covered_partwise, smallest_cover_index, subdivide, GenericDipath};
use crate::dot::{flip_graph_dot, presentation_dot, pushout_dot};
use crate::error::{Error, Result};
use crate::model::SpaceModel;
use crate::pv::{build_pv_grid, PvProgram};
use crate::report::Status;
use crate::vankampen::{
    glue_directed_maps, mediating_trials, monoid_pushout_condition, pushout_with_depth, van_kampen_check, PushoutSpan,
    SampleConfig, TrialConfig, DEFAULT_SEED,
};

const DEFAULT_LIMIT: usize = 100_000;

#[derive(Parser, Debug)]
#[command(
    name = "ditopo",
    version,
    about = "Directed paths, dihomotopy classes and fundamental categories of finite directed spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Input {
    /// Built-in example, e.g. `obstacle-square-3` or `discrete-circle-cover`.
    #[arg(long, conflicts_with = "space")]
    pub example: Option<String>,
    /// Space document (grid or finite space, JSON).
    #[arg(long)]
    pub space: Option<PathBuf>,
    /// Cover document, overriding any cover in the space or example.
    #[arg(long)]
    pub cover: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct PresentationInput {
    #[command(flatten)]
    pub input: Input,
    /// Presentation document, used instead of a space.
    #[arg(long, conflicts_with_all = ["example", "space"])]
    pub presentation: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a space (and its cover) for well-formedness.
    Validate(Input),
    /// List dipaths: grid paths between two vertices, or step paths up to a length.
    Paths {
        #[command(flatten)]
        input: Input,
        /// Start vertex such as `(0,0)`, or a point name; the origin by default.
        #[arg(long)]
        from: Option<String>,
        /// End vertex; the far corner by default.
        #[arg(long)]
        to: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Stop with an error beyond this many paths.
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Dihomotopy classes of grid paths between two vertices.
    Classes {
        #[command(flatten)]
        input: Input,
        /// Start vertex such as `(0,0)`, or a point name; the origin by default.
        #[arg(long)]
        from: Option<String>,
        /// End vertex; the far corner by default.
        #[arg(long)]
        to: Option<String>,
        /// Stop with an error beyond this many paths.
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Presentation of the fundamental category.
    Present(PresentationInput),
    /// Morphism classes between two objects, up to a word length.
    Hom {
        #[command(flatten)]
        input: PresentationInput,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Endomorphism monoid at a base object.
    Monoid {
        #[command(flatten)]
        input: PresentationInput,
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Pushout of two presentations over a shared one (inclusion legs), or of a space's cover pieces.
    Pushout {
        #[command(flatten)]
        input: Input,
        #[arg(long, requires_all = ["right", "apex"], conflicts_with_all = ["example", "space"])]
        left: Option<PathBuf>,
        #[arg(long)]
        right: Option<PathBuf>,
        #[arg(long)]
        apex: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Van Kampen checks: hom-counts against the pushout, then the mediating functor suite.
    VerifyVk {
        #[command(flatten)]
        input: Input,
        /// Word length for hom-counts; defaults to 2(W+H) on grids and 12 otherwise.
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Whether every loop class at the base factors through the cover pieces.
    CheckBubenik {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Glue two point maps defined on the cover pieces and check directedness.
    Glue {
        #[command(flatten)]
        input: Input,
        /// Map on the first piece: JSON object from point to image.
        #[arg(long)]
        f1: PathBuf,
        #[arg(long)]
        f2: PathBuf,
        /// Target space; the source space when omitted.
        #[arg(long)]
        target: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Whether a path's n-fold subdivision is covered piecewise.
    CoverCheck {
        #[command(flatten)]
        input: Input,
        /// Moves like `RRUU` on grids, comma-separated points otherwise.
        #[arg(long)]
        path: String,
        /// Start vertex for grid paths.
        #[arg(long, default_value = "(0,0)")]
        start: String,
        /// Number of equal pieces.
        #[arg(long)]
        n: usize,
    },
    /// Graphviz export.
    ExportDot {
        #[command(flatten)]
        input: PresentationInput,
        #[arg(long, value_enum, default_value_t = Artifact::Presentation)]
        artifact: Artifact,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Grid model of two processes acquiring and releasing resources.
    PvBuild {
        /// Actions of process A (vertical axis), e.g. "acq(m) rel(m)".
        #[arg(long)]
        a: String,
        /// Actions of process B (horizontal axis).
        #[arg(long)]
        b: String,
    },
}

/// Parses an argument vector whose first item is the program name.
pub fn parse_args<I, S>(args: I) -> Result<Cli>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    Cli::try_parse_from(args).map_err(|e| Error::Document(e.to_string()))
}

/// A finished command.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub status: Status,
}

impl Outcome {
    fn new(text: String, json: Value, status: Status) -> Self {
        Outcome { text, json, status }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("reports serialize");
                s.push('\n');
                s
            }
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Document(format!("{}: {e}", path.display())))
}

fn parse_file<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Document(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<(SpaceModel, Option<Cover>)> {
    let (model, mut cover) = match (&input.example, &input.space) {
        (Some(name), _) => {
            let ex = example(name)?;
            (ex.model, ex.cover)
        }
        (None, Some(path)) => {
            SpaceModel::from_json(&read(path)?).map_err(|e| Error::Document(format!("{}: {e}", path.display())))?
        }
        (None, None) => return Err(Error::Document("give --example or --space".into())),
    };
    if let Some(path) = &input.cover {
        cover = Some(parse_file::<CoverDocument>(path)?.into_cover());
    }
    Ok((model, cover))
}

fn load_with_cover(input: &Input) -> Result<(SpaceModel, Cover)> {
    let (model, cover) = load(input)?;
    let cover = cover.ok_or_else(|| Error::InvalidCover("this command needs a cover (--cover)".into()))?;
    model.validate_cover(&cover)?;
    Ok((model, cover))
}

fn load_presentation(input: &PresentationInput) -> Result<PresentedCategory> {
    match &input.presentation {
        Some(path) => {
            PresentedCategory::from_json(&read(path)?).map_err(|e| Error::Document(format!("{}: {e}", path.display())))
        }
        None => Ok(load(&input.input)?.0.presentation()),
    }
}

fn grid(model: &SpaceModel) -> Result<&CubicalSpace> {
    match model {
        SpaceModel::Grid(g) => Ok(g),
        SpaceModel::Finite(_) => Err(Error::ModelMismatch("this command needs a grid".into())),
    }
}

fn corners(g: &CubicalSpace, from: &Option<String>, to: &Option<String>) -> Result<(Vertex, Vertex)> {
    let from = match from {
        Some(s) => s.parse()?,
        None => Vertex::new(0, 0),
    };
    let to = match to {
        Some(s) => s.parse()?,
        None => Vertex::new(g.width(), g.height()),
    };
    Ok((from, to))
}

fn words(paths: &[LatticePath]) -> Vec<String> {
    paths.iter().map(LatticePath::word).collect()
}

/// Runs one command.
pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Validate(input) => validate(input),
        Command::Paths {
            input,
            from,
            to,
            max_len,
            limit,
        } => paths(input, from, to, *max_len, *limit),
        Command::Classes { input, from, to, limit } => {
            let (model, _) = load(input)?;
            let g = grid(&model)?;
            let (a, b) = corners(g, from, to)?;
            let set = dihomotopy_classes(g, a, b, *limit)?;
            let reps: Vec<String> = set.classes.iter().map(|c| set.paths[c[0]].word()).collect();
            let sizes: Vec<usize> = set.classes.iter().map(Vec::len).collect();
            let mut text = format!("paths: {}, classes: {}\n", set.paths.len(), set.classes.len());
            for (r, n) in reps.iter().zip(&sizes) {
                let _ = writeln!(text, "  {r} ({n} paths)");
            }
            Ok(Outcome::new(
                text,
                json!({"from": a.to_string(), "to": b.to_string(), "paths": set.paths.len(),
                       "classes": set.classes.len(), "representatives": reps, "sizes": sizes}),
                Status::Pass,
            ))
        }
        Command::Present(input) => {
            let c = load_presentation(input)?;
            let text = format!(
                "objects: {}, generators: {}, relations: {}\n{}",
                c.objects().len(),
                c.generators().len(),
                c.relations().len(),
                c.to_json()
            );
            Ok(Outcome::new(text, serde_json::to_value(c.to_document())?, Status::Pass))
        }
        Command::Hom {
            input,
            from,
            to,
            max_len,
            depth,
        } => {
            let c = load_presentation(input)?;
            let h = hom_classes(&c, from, to, *max_len, *depth)?;
            let reps: Vec<String> = h.representatives().iter().map(|w| w.to_string()).collect();
            let status = if h.exact { Status::Pass } else { Status::Unknown };
            let mut text = format!("classes: {}, exact: {}\n", h.count(), h.exact);
            for r in &reps {
                let _ = writeln!(text, "  {r}");
            }
            Ok(Outcome::new(
                text,
                json!({"from": from, "to": to, "max_len": max_len, "classes": h.count(),
                       "exact": h.exact, "representatives": reps}),
                status,
            ))
        }
        Command::Monoid {
            input,
            base,
            max_len,
            depth,
        } => {
            let c = load_presentation(input)?;
            let r = endo_monoid_with_depth(&c, base, *max_len, *depth)?;
            let mut text = format!("classes: {}, structure: {}\n", r.classes, r.structure);
            for g in &r.generators {
                let _ = writeln!(text, "  generator {g}");
            }
            if let Some(w) = &r.witness {
                let _ = writeln!(text, "  witness: {w}");
            }
            let status = if r.exact { Status::Pass } else { Status::Unknown };
            Ok(Outcome::new(text, serde_json::to_value(&r)?, status))
        }
        Command::Pushout {
            input,
            left,
            right,
            apex,
            depth,
        } => {
            let span = match (left, right, apex) {
                (Some(l), Some(r), Some(a)) => PushoutSpan::of_inclusions(
                    PresentedCategory::from_json(&read(a)?)?,
                    PresentedCategory::from_json(&read(l)?)?,
                    PresentedCategory::from_json(&read(r)?)?,
                )?,
                _ => {
                    let (model, cover) = load_with_cover(input)?;
                    PushoutSpan::from_cover(&model, &cover)?
                }
            };
            let po = pushout_with_depth(span, *depth)?;
            let s = po.summary();
            let status = Status::all(po.leg_preservation.iter().map(|p| p.decision().into()));
            let text = format!(
                "objects: {}, generators: {}, relations: {}, identifications: {}\n{}",
                s.objects,
                s.generators,
                s.relations,
                s.identifications,
                po.presentation.to_json()
            );
            Ok(Outcome::new(
                text,
                json!({"summary": s, "presentation": po.presentation.to_document(),
                       "legs": po.leg_preservation.iter().map(|p| p.decision().as_str()).collect::<Vec<_>>()}),
                status,
            ))
        }
        Command::VerifyVk {
            input,
            max_len,
            depth,
            seed,
            trials,
        } => verify_vk(input, *max_len, *depth, *seed, *trials),
        Command::CheckBubenik {
            input,
            base,
            max_len,
            depth,
        } => {
            let (model, cover) = load(input)?;
            let cover = cover.ok_or_else(|| Error::InvalidCover("this command needs a cover (--cover)".into()))?;
            let r = monoid_pushout_condition(&model, &cover, base, *max_len, *depth)?;
            let mut text = format!(
                "bubenik: {} (classes: {}, factorable: {})\n  whole: {}\n",
                r.status, r.classes, r.factorable, r.whole.structure
            );
            for (i, p) in r.pieces.iter().enumerate() {
                let _ = writeln!(
                    text,
                    "  piece {}: classes: {}, structure: {}",
                    i + 1,
                    p.classes,
                    p.structure
                );
            }
            if let Some(w) = &r.witness {
                let _ = writeln!(text, "  witness: {w}");
            }
            Ok(Outcome::new(text, serde_json::to_value(&r)?, r.status))
        }
        Command::Glue {
            input,
            f1,
            f2,
            target,
            max_len,
        } => {
            let (model, cover) = load_with_cover(input)?;
            let f1: BTreeMap<String, String> = parse_file(f1)?;
            let f2: BTreeMap<String, String> = parse_file(f2)?;
            let target = match target {
                Some(path) => SpaceModel::from_json(&read(path)?)?.0,
                None => model.clone(),
            };
            let r = glue_directed_maps(&model, &cover, &f1, &f2, &target, *max_len)?;
            let mut text = format!("glue: {} ({} dipaths, {} failed)\n", r.status, r.checked, r.failures);
            if let Some(w) = &r.witness {
                let _ = writeln!(text, "  witness: {w}");
            }
            Ok(Outcome::new(text, serde_json::to_value(&r)?, r.status))
        }
        Command::CoverCheck { input, path, start, n } => cover_check(input, path, start, *n),
        Command::ExportDot {
            input,
            artifact,
            from,
            to,
            limit,
        } => {
            let dot = match artifact {
                Artifact::Presentation => presentation_dot(&load_presentation(input)?),
                Artifact::Flips => {
                    let (model, _) = load(&input.input)?;
                    let g = grid(&model)?;
                    let (a, b) = corners(g, from, to)?;
                    flip_graph_dot(g, &dihomotopy_classes(g, a, b, *limit)?)
                }
                Artifact::Pushout => {
                    let (model, cover) = load_with_cover(&input.input)?;
                    pushout_dot(&pushout_with_depth(
                        PushoutSpan::from_cover(&model, &cover)?,
                        DEFAULT_DEPTH,
                    )?)
                }
            };
            Ok(Outcome::new(dot.clone(), json!({ "dot": dot }), Status::Pass))
        }
        Command::PvBuild { a, b } => {
            let g = build_pv_grid(&PvProgram::parse(a, b)?)?;
            let doc = g.to_document(None);
            let text = serde_json::to_string_pretty(&doc)?;
            Ok(Outcome::new(text, serde_json::to_value(&doc)?, Status::Pass))
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Artifact {
    /// Grid paths colored by dihomotopy class.
    Flips,
    Presentation,
    Pushout,
}

fn validate(input: &Input) -> Result<Outcome> {
    let (model, cover) = load(input)?;
    let mut problems: Vec<String> = Vec::new();
    let mut notes: Vec<String> = Vec::new();
    match &model {
        SpaceModel::Finite(s) => {
            problems.extend(s.validate().violations.iter().map(ToString::to_string));
        }
        SpaceModel::Grid(g) => {
            let dead = g.dead_vertices();
            if !dead.is_empty() {
                let names: Vec<String> = dead.iter().map(ToString::to_string).collect();
                notes.push(format!("dead vertices: {}", names.join(" ")));
            }
        }
    }
    if let Some(c) = &cover {
        if let Err(e) = model.validate_cover(c) {
            problems.push(e.to_string());
        } else if let (SpaceModel::Finite(s), Cover::Points(p)) = (&model, c) {
            if !p.is_open_cover(s) {
                notes.push("cover pieces are not all open".into());
            }
        }
    }
    let status = Status::from_bool(problems.is_empty());
    let mut text = format!("{}: {} ({} points)\n", model.kind(), status, model.points().len());
    for p in &problems {
        let _ = writeln!(text, "  problem: {p}");
    }
    for n in &notes {
        let _ = writeln!(text, "  note: {n}");
    }
    Ok(Outcome::new(
        text,
        json!({"kind": model.kind(), "points": model.points().len(), "status": status,
               "problems": problems, "notes": notes}),
        status,
    ))
}

fn paths(input: &Input, from: &Option<String>, to: &Option<String>, max_len: usize, limit: usize) -> Result<Outcome> {
    let (model, _) = load(input)?;
    let listed: Vec<String> = match &model {
        SpaceModel::Grid(g) => {
            let (a, b) = corners(g, from, to)?;
            words(&enumerate_paths(g, a, b, limit)?)
        }
        SpaceModel::Finite(_) => model
            .dipaths(max_len, limit)?
            .into_iter()
            .filter(|p| from.as_ref().is_none_or(|f| &p.start_name() == f))
            .filter(|p| to.as_ref().is_none_or(|t| &p.end_name() == t))
            .map(|p| p.point_names().join(","))
            .collect(),
    };
    let mut text = format!("paths: {}\n", listed.len());
    for p in &listed {
        let _ = writeln!(text, "  {p}");
    }
    Ok(Outcome::new(
        text,
        json!({"count": listed.len(), "paths": listed}),
        Status::Pass,
    ))
}

fn verify_vk(input: &Input, max_len: Option<usize>, depth: usize, seed: u64, trials: usize) -> Result<Outcome> {
    let (model, cover) = load_with_cover(input)?;
    let max_len = max_len.unwrap_or(match &model {
        SpaceModel::Grid(g) => 2 * (g.width() + g.height()) as usize,
        SpaceModel::Finite(_) => 12,
    });
    let vk = van_kampen_check(&model, &cover, max_len, depth)?;
    let config = TrialConfig {
        trials,
        seed,
        depth,
        samples: SampleConfig::default(),
    };
    let tr = mediating_trials(&model, &cover, &config)?;

    let mut text = String::new();
    let _ = writeln!(
        text,
        "hom-counts: {} ({} pairs up to length {}, {} mismatched, {} unknown)",
        vk.status.and(Status::all(vk.pairs.iter().map(|p| p.status()))),
        vk.pairs.len(),
        max_len,
        vk.mismatches,
        vk.unknowns
    );
    for p in vk.pairs.iter().filter(|p| p.status() != Status::Pass) {
        let _ = writeln!(
            text,
            "  {} → {}: direct {}, pushout {}, exact {}",
            p.source, p.target, p.direct, p.pushout, p.exact
        );
    }
    let _ = writeln!(text, "{}", vk.agreement);
    let _ = writeln!(text, "inclusions into the pushout: {}", tr.canonical.status);
    for c in &tr.canonical.checks {
        let _ = writeln!(text, "  {c}");
    }
    let _ = writeln!(text, "random targets ({} trials, seed {}):", trials, seed);
    for c in &tr.well_defined {
        let _ = writeln!(text, "  {c}");
    }
    let _ = writeln!(text, "universal property:");
    for c in &tr.universal.checks {
        let _ = writeln!(text, "  {c}");
    }
    let status = vk.status.and(tr.status);
    let _ = writeln!(text, "overall: {status}");
    Ok(Outcome::new(
        text,
        json!({"status": status, "hom_counts": vk, "trials": tr}),
        status,
    ))
}

fn cover_check(input: &Input, path: &str, start: &str, n: usize) -> Result<Outcome> {
    let (model, cover) = load_with_cover(input)?;
    let p: GenericDipath = match &model {
        SpaceModel::Grid(g) => g.path(start.parse()?, path)?.into(),
        SpaceModel::Finite(_) => {
            let points: Vec<&str> = path.split(',').map(str::trim).collect();
            model.path_through(&points)?
        }
    };
    let ok = covered_partwise(&p, &cover, n);
    let smallest = smallest_cover_index(&p, &cover);
    let pieces: Vec<String> = subdivide(&p, n.max(1)).iter().map(ToString::to_string).collect();
    let mut text = format!(
        "covered: {ok} (n = {n}, smallest: {})\n",
        smallest.map_or("none".into(), |k| k.to_string())
    );
    for piece in &pieces {
        let _ = writeln!(text, "  {piece}");
    }
    Ok(Outcome::new(
        text,
        json!({"path": p.to_string(), "n": n, "covered": ok, "smallest": smallest, "pieces": pieces}),
        Status::from_bool(ok),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let cli = Cli::try_parse_from(std::iter::once("ditopo").chain(args.iter().copied())).unwrap();
        run(&cli.command).unwrap()
    }

    #[test]
    fn classes_report() {
        let o = run_args(&["classes", "--example", "obstacle-square-3"]);
        assert!(o.text.starts_with("paths: 20, classes: 2"));
        assert_eq!(o.status, Status::Pass);
    }

    #[test]
    fn monoid_report() {
        let o = run_args(&[
            "monoid",
            "--example",
            "discrete-circle",
            "--base",
            "E",
            "--max-len",
            "8",
        ]);
        assert!(o.text.starts_with("classes: 3, structure: free(1)"), "{}", o.text);
    }

    #[test]
    fn verify_vk_passes_on_circle() {
        let o = run_args(&["verify-vk", "--example", "discrete-circle-cover", "--trials", "5"]);
        assert_eq!(o.status, Status::Pass, "{}", o.text);
    }

    #[test]
    fn bubenik_fails_on_five_point_circle() {
        let o = run_args(&["check-bubenik", "--example", "five-point-circle-bubenik", "--base", "W"]);
        assert_eq!(o.status, Status::Fail);
        assert!(o.text.contains("W→S→E→N→W"));
    }

    #[test]
    fn reports_are_repeatable() {
        let a = run_args(&[
            "verify-vk",
            "--example",
            "directed-square-2",
            "--trials",
            "3",
            "--format",
            "json",
        ]);
        let b = run_args(&[
            "verify-vk",
            "--example",
            "directed-square-2",
            "--trials",
            "3",
            "--format",
            "json",
        ]);
        assert_eq!(a.render(Format::Json), b.render(Format::Json));
    }

    #[test]
    fn cover_check_and_pv() {
        let o = run_args(&[
            "cover-check",
            "--example",
            "directed-square-2",
            "--path",
            "RRUU",
            "--n",
            "2",
        ]);
        assert_eq!(o.json["smallest"], 4);
        assert_eq!(o.status, Status::Fail);
        let o = run_args(&["pv-build", "--a", "acq(m) rel(m)", "--b", "acq(m) rel(m)"]);
        assert_eq!(o.json["forbidden"], json!([[0, 0]]));
    }
}
