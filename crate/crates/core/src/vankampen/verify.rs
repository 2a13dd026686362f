use std::collections::{BTreeMap, HashMap};

use petgraph::unionfind::UnionFind;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::mediating::{
    mediating_functor, mediating_morphism_map, mediating_morphism_map_at, mediating_object_map, CommutationWitness,
    MediatingInput,
};
use super::pushout::{pushout_with_depth, PushoutResult, PushoutSpan};
use crate::cat::{CatFunctor, Generator, MorphismWord, PresentedCategory, Relation, WordSearch};
use crate::cover::{Cover, Piece};
use crate::dipath::{concat, covered_partwise, homotopy_covered, smallest_cover_index, GenericDipath};
use crate::error::{Error, Result};
use crate::model::SpaceModel;
use crate::report::{CheckTally, Status};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_d170;

/// Cap on the dipath pool a sampler draws from.
const POOL_LIMIT: usize = 200_000;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleConfig {
    /// Longest dipath in the pool.
    pub max_len: usize,
    pub paths: usize,
    pub pairs: usize,
    pub deformations: usize,
    /// Moves per sampled deformation.
    pub deformation_steps: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            max_len: 8,
            paths: 16,
            pairs: 8,
            deformations: 8,
            deformation_steps: 6,
        }
    }
}

/// All dipaths up to a length, indexed by start point, to draw samples from.
pub struct SamplePool {
    paths: Vec<GenericDipath>,
    by_start: HashMap<String, Vec<usize>>,
}

impl SamplePool {
    pub fn new(model: &SpaceModel, max_len: usize) -> Result<Self> {
        let paths = model.dipaths(max_len, POOL_LIMIT)?;
        let mut by_start: HashMap<String, Vec<usize>> = HashMap::new();
        for (i, p) in paths.iter().enumerate() {
            by_start.entry(p.start_name()).or_default().push(i);
        }
        Ok(SamplePool { paths, by_start })
    }

    pub fn paths(&self) -> &[GenericDipath] {
        &self.paths
    }
}

/// Dipaths, composable pairs and deformations to test the mediating
/// functor on.
#[derive(Clone, Debug, Default)]
pub struct Samples {
    pub points: Vec<String>,
    pub paths: Vec<GenericDipath>,
    pub pairs: Vec<(GenericDipath, GenericDipath)>,
    /// Slices of a directed homotopy whose endpoints may move.
    pub deformations: Vec<Vec<GenericDipath>>,
}

impl Samples {
    pub fn draw(model: &SpaceModel, pool: &SamplePool, config: &SampleConfig, rng: &mut impl Rng) -> Result<Self> {
        let mut s = Samples {
            points: model.points(),
            ..Samples::default()
        };
        if pool.paths.is_empty() {
            return Ok(s);
        }
        let pick = |rng: &mut dyn rand::RngCore| pool.paths[rng.gen_range(0..pool.paths.len())].clone();
        s.paths = (0..config.paths).map(|_| pick(rng)).collect();
        for _ in 0..config.pairs {
            let first = pick(rng);
            if let Some(next) = pool.by_start.get(&first.end_name()).and_then(|v| v.choose(rng)) {
                s.pairs.push((first, pool.paths[*next].clone()));
            }
        }
        for _ in 0..config.deformations {
            s.deformations
                .push(random_deformation(model, pick(rng), config.deformation_steps, rng)?);
        }
        Ok(s)
    }
}

/// A random walk of raise flips, start advances and end extensions.
pub fn random_deformation(
    model: &SpaceModel,
    start: GenericDipath,
    steps: usize,
    rng: &mut impl Rng,
) -> Result<Vec<GenericDipath>> {
    let mut slices = vec![start];
    for _ in 0..steps {
        let cur = slices.last().unwrap();
        let mut options = model.raise_neighbours(cur);
        if !cur.is_empty() {
            options.push(cur.slice(1, cur.len()));
        }
        let end = cur.end_name();
        for next in model.successors(&end) {
            options.push(concat(cur, &model.path_through(&[end.as_str(), next.as_str()])?)?);
        }
        match options.choose(rng) {
            Some(next) => slices.push(next.clone()),
            None => break,
        }
    }
    Ok(slices)
}

/// Path traced by the start (`end = false`) or end points of the slices.
pub fn trace(model: &SpaceModel, slices: &[GenericDipath], end: bool) -> Result<GenericDipath> {
    let mut points: Vec<String> = slices
        .iter()
        .map(|s| if end { s.end_name() } else { s.start_name() })
        .collect();
    points.dedup();
    model.path_through(&points)
}

#[derive(Clone, Debug, Serialize)]
pub struct WellDefinedReport {
    pub commutation: CommutationWitness,
    pub checks: Vec<CheckTally>,
    /// Sampled deformations that are `(1, m)`-covered for some `m`.
    pub covered_deformations: usize,
    pub status: Status,
}

fn compare(search: &WordSearch, a: &MorphismWord, b: &MorphismWord, depth: usize) -> Status {
    match search.equal(a, b, depth) {
        Ok(d) => d.into(),
        Err(_) => Status::Fail,
    }
}

/// Checks the construction of `F′` on samples: the identity and composition
/// laws, independence of the subdivision index and of the piece chosen on
/// the overlap, invariance under single deformations, and the exchange law
/// `F′(η₀ ⊙ δ) = F′(γ ⊙ η₁)` for deformations with moving endpoints.
pub fn verify_mediating_well_defined(
    input: &MediatingInput,
    model: &SpaceModel,
    cover: &Cover,
    samples: &Samples,
    depth: usize,
) -> Result<WellDefinedReport> {
    let search = WordSearch::new(&input.target);
    let fp = |p: &GenericDipath| mediating_morphism_map(input, cover, p);
    let mut identity = CheckTally::new("identity");
    let mut composition = CheckTally::new("composition");
    let mut n_independence = CheckTally::new("n-independence");
    let mut piece_choice = CheckTally::new("piece-choice");
    let mut class_invariance = CheckTally::new("class-invariance");
    let mut exchange = CheckTally::new("exchange");

    for x in &samples.points {
        let w = fp(&model.constant(x)?)?;
        let fx = mediating_object_map(input, cover, x)?;
        identity.record(Status::from_bool(w.is_identity() && w.src == fx), || {
            format!("F′(0_{x}) = {w}, expected id({fx})")
        });
    }

    for p in &samples.paths {
        let n0 = smallest_cover_index(p, cover)
            .ok_or_else(|| Error::InvalidCover(format!("path {p} has an uncovered segment")))?;
        let base = mediating_morphism_map_at(input, cover, p, n0, Piece::First)?;
        let mut ns: Vec<usize> = (n0 + 1..=p.len().max(1) + 1)
            .filter(|&n| covered_partwise(p, cover, n))
            .collect();
        ns.extend([2 * n0, 3 * n0]);
        ns.sort_unstable();
        ns.dedup();
        for n in ns {
            let other = mediating_morphism_map_at(input, cover, p, n, Piece::First)?;
            n_independence.record(compare(&search, &base, &other, depth), || {
                format!("{p}: n={n0} gives {base}, n={n} gives {other}")
            });
        }
        let second = mediating_morphism_map_at(input, cover, p, n0, Piece::Second)?;
        piece_choice.record(compare(&search, &base, &second, depth), || {
            format!("{p}: first piece gives {base}, second gives {second}")
        });
        let variants: Vec<GenericDipath> = match p {
            GenericDipath::Step(s) => (0..=s.len()).map(|i| s.with_stutter(i).into()).collect(),
            GenericDipath::Lattice(_) => model.raise_neighbours(p),
        };
        for q in variants {
            let fq = fp(&q)?;
            class_invariance.record(compare(&search, &base, &fq, depth), || {
                format!("{p} ↦ {base} but {q} ↦ {fq}")
            });
        }
    }

    for (a, b) in &samples.pairs {
        let whole = fp(&concat(a, b)?)?;
        let parts = fp(a)?.then(&fp(b)?);
        composition.record(compare(&search, &whole, &parts, depth), || {
            format!("F′({a} ⊙ {b}) = {whole}, F′({b})∘F′({a}) = {parts}")
        });
    }

    let mut covered_deformations = 0;
    for slices in &samples.deformations {
        let (first, last) = (&slices[0], slices.last().unwrap());
        let longest = slices.iter().map(GenericDipath::len).max().unwrap_or(0).max(1);
        if (1..=longest).any(|m| homotopy_covered(slices, cover, 1, m)) {
            covered_deformations += 1;
        }
        let eta0 = trace(model, slices, false)?;
        let eta1 = trace(model, slices, true)?;
        let lhs = fp(&concat(&eta0, last)?)?;
        let rhs = fp(&concat(first, &eta1)?)?;
        exchange.record(compare(&search, &lhs, &rhs, depth), || {
            format!("from {first} to {last}: F′(η₀ ⊙ δ) = {lhs}, F′(γ ⊙ η₁) = {rhs}")
        });
    }

    let checks = vec![
        identity,
        composition,
        n_independence,
        piece_choice,
        class_invariance,
        exchange,
    ];
    let status = Status::all(checks.iter().map(|c| c.status));
    Ok(WellDefinedReport {
        commutation: input.witness.clone(),
        checks,
        covered_deformations,
        status,
    })
}

/// A random target category and a functor `G` from `p` into it. Each
/// generator goes to a single target generator, generators that some
/// relation identifies go to the same one, and the images of all relations
/// (plus a few random commuting squares) become target relations.
pub fn random_target(p: &PresentedCategory, rng: &mut impl Rng) -> Result<(PresentedCategory, CatFunctor)> {
    let n = rng.gen_range(1..=4usize);
    let objects: Vec<String> = (0..n).map(|i| format!("t{i}")).collect();
    let mut g = CatFunctor::default();
    for o in p.objects() {
        g.object_map.insert(o.clone(), objects[rng.gen_range(0..n)].clone());
    }

    let gens = p.generators();
    let slot: HashMap<&str, usize> = gens.iter().enumerate().map(|(i, g)| (g.id.as_str(), i)).collect();
    let mut same = UnionFind::<usize>::new(gens.len());
    for r in p.relations() {
        if let ([a], [b]) = (r.lhs.gens.as_slice(), r.rhs.gens.as_slice()) {
            same.union(slot[a.as_str()], slot[b.as_str()]);
        }
    }
    let mut pool: BTreeMap<(String, String), Vec<String>> = BTreeMap::new();
    let mut targets: Vec<Generator> = Vec::new();
    let mut chosen: HashMap<usize, String> = HashMap::new();
    for (i, gen) in gens.iter().enumerate() {
        let root = same.find(i);
        let id = match chosen.get(&root) {
            Some(id) => id.clone(),
            None => {
                let ends = (g.object_map[&gen.src].clone(), g.object_map[&gen.dst].clone());
                let existing = pool.entry(ends.clone()).or_default();
                let id = if !existing.is_empty() && rng.gen_bool(0.5) {
                    existing[rng.gen_range(0..existing.len())].clone()
                } else {
                    let id = format!("g{}", targets.len());
                    targets.push(Generator::new(id.clone(), ends.0, ends.1));
                    existing.push(id.clone());
                    id
                };
                chosen.insert(root, id.clone());
                id
            }
        };
        g.generator_map
            .insert(gen.id.clone(), MorphismWord::new(g.object_map[&gen.src].clone(), [id]));
    }

    let mut relations: Vec<Relation> = Vec::new();
    let mut push = |r: Relation| {
        let flipped = Relation::new(r.rhs.clone(), r.lhs.clone());
        if r.lhs != r.rhs && !relations.contains(&r) && !relations.contains(&flipped) {
            relations.push(r);
        }
    };
    for r in p.relations() {
        push(Relation::new(g.apply(&r.lhs)?, g.apply(&r.rhs)?));
    }
    for _ in 0..rng.gen_range(0..=2) {
        let Some(a) = targets.choose(rng) else { break };
        let after_a: Vec<&Generator> = targets.iter().filter(|t| t.src == a.dst).collect();
        let Some(b) = after_a.choose(rng) else { continue };
        let squares: Vec<(&Generator, &Generator)> = targets
            .iter()
            .filter(|c| c.src == a.src)
            .flat_map(|c| {
                targets
                    .iter()
                    .filter(move |d| d.src == c.dst && d.dst == b.dst)
                    .map(move |d| (c, d))
            })
            .collect();
        if let Some((c, d)) = squares.choose(rng) {
            push(Relation::new(
                MorphismWord::new(a.src.clone(), [a.id.clone(), b.id.clone()]),
                MorphismWord::new(c.src.clone(), [c.id.clone(), d.id.clone()]),
            ));
        }
    }
    Ok((PresentedCategory::new(objects, targets, relations)?, g))
}

#[derive(Clone, Debug, Serialize)]
pub struct UniversalReport {
    pub trials: usize,
    pub seed: u64,
    pub checks: Vec<CheckTally>,
    pub status: Status,
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Checks the universal property on random compatible functor pairs:
/// the induced functor respects the pushout relations, composes with the
/// injections to the given functors exactly, and equals any functor with
/// that property.
pub fn verify_pushout_universal(po: &PushoutResult, trials: usize, seed: u64, depth: usize) -> Result<UniversalReport> {
    let mut functoriality = CheckTally::new("functoriality");
    let mut commutes = CheckTally::new("commutes");
    let mut uniqueness = CheckTally::new("uniqueness");
    let mut terminal = CheckTally::new("terminal-target");
    let p = &po.presentation;

    // every object and generator of the pushout is hit by an injection, so
    // the constraints through j₁ and j₂ fix a functor completely
    let mut hit_objects: Vec<&String> = po.j1.object_map.values().chain(po.j2.object_map.values()).collect();
    hit_objects.sort();
    hit_objects.dedup();
    let hit_generators = po
        .j1
        .generator_map
        .values()
        .chain(po.j2.generator_map.values())
        .filter(|w| w.len() == 1)
        .count();
    let determined = hit_objects.len() == p.objects().len() && hit_generators == p.generators().len();

    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let (target, g) = random_target(p, &mut rng)?;
        let f1 = po.j1.then(&g)?;
        let f2 = po.j2.then(&g)?;
        let input = MediatingInput::new(&po.span, target, f1, f2)?;
        let m = mediating_functor(po, &input)?;
        let pres = m.preserves_relations(p, &input.target, depth)?;
        functoriality.record(pres.decision().into(), || format!("trial {t}: {pres:?}"));
        for k in Piece::BOTH {
            let via = po.injection(k).then(&m)?;
            let side = po.span.side(k);
            let diff = via.disagreement(input.functor(k), side);
            commutes.record(Status::from_bool(diff.is_none()), || {
                format!(
                    "trial {t}: F∘j{} differs from F{} at {}",
                    k.index(),
                    k.index(),
                    diff.unwrap_or_default()
                )
            });
        }
        let diff = m.disagreement(&g, p);
        uniqueness.record(Status::from_bool(determined && diff.is_none()), || {
            format!(
                "trial {t}: {}",
                diff.unwrap_or_else(|| "pushout has generators outside both injections".into())
            )
        });
    }

    // the terminal category: one object and only its identity
    let point = PresentedCategory::free(vec!["*".into()], vec![])?;
    let constant = |c: &PresentedCategory| CatFunctor {
        object_map: c.objects().iter().map(|o| (o.clone(), "*".to_owned())).collect(),
        generator_map: c
            .generators()
            .iter()
            .map(|g| (g.id.clone(), MorphismWord::identity("*")))
            .collect(),
    };
    let input = MediatingInput::new(
        &po.span,
        point.clone(),
        constant(&po.span.left),
        constant(&po.span.right),
    )?;
    let m = mediating_functor(po, &input)?;
    terminal.record(Status::from_bool(m == constant(p)), || {
        "mediating functor is not constant".into()
    });

    let checks = vec![functoriality, commutes, uniqueness, terminal];
    let status = Status::all(checks.iter().map(|c| c.status));
    Ok(UniversalReport {
        trials,
        seed,
        checks,
        status,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialConfig {
    pub trials: usize,
    pub seed: u64,
    pub depth: usize,
    pub samples: SampleConfig,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            trials: 100,
            seed: DEFAULT_SEED,
            depth: crate::cat::DEFAULT_DEPTH,
            samples: SampleConfig::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialReport {
    pub config: TrialConfig,
    /// The inclusions into the pushout itself.
    pub canonical: WellDefinedReport,
    /// Random targets, tallies merged over trials.
    pub well_defined: Vec<CheckTally>,
    pub first_failing_trial: Option<usize>,
    pub universal: UniversalReport,
    pub status: Status,
}

/// The inclusions of the pieces into the pushout, as mediating input.
pub fn canonical_input(po: &PushoutResult) -> Result<MediatingInput> {
    MediatingInput::new(&po.span, po.presentation.clone(), po.j1.clone(), po.j2.clone())
}

/// Runs the mediating-functor checks on the pushout itself and on seeded
/// random targets, then the universal-property trials.
pub fn mediating_trials(model: &SpaceModel, cover: &Cover, config: &TrialConfig) -> Result<TrialReport> {
    let po = pushout_with_depth(PushoutSpan::from_cover(model, cover)?, config.depth)?;
    let pool = SamplePool::new(model, config.samples.max_len)?;

    let mut rng = trial_rng(config.seed, usize::MAX);
    let samples = Samples::draw(model, &pool, &config.samples, &mut rng)?;
    let canonical = verify_mediating_well_defined(&canonical_input(&po)?, model, cover, &samples, config.depth)?;

    let mut merged: Vec<CheckTally> = Vec::new();
    let mut first_failing_trial = None;
    for t in 0..config.trials {
        let mut rng = trial_rng(config.seed, t);
        let (target, g) = random_target(&po.presentation, &mut rng)?;
        let input = MediatingInput::new(&po.span, target, po.j1.then(&g)?, po.j2.then(&g)?)?;
        let samples = Samples::draw(model, &pool, &config.samples, &mut rng)?;
        let report = verify_mediating_well_defined(&input, model, cover, &samples, config.depth)?;
        if report.status == Status::Fail && first_failing_trial.is_none() {
            first_failing_trial = Some(t);
        }
        if merged.is_empty() {
            merged = report.checks.iter().map(|c| CheckTally::new(c.name.clone())).collect();
        }
        for (m, c) in merged.iter_mut().zip(&report.checks) {
            m.merge(c);
        }
    }
    let universal = verify_pushout_universal(&po, config.trials, config.seed, config.depth)?;
    let status = Status::all(
        merged
            .iter()
            .map(|c| c.status)
            .chain([canonical.status, universal.status]),
    );
    Ok(TrialReport {
        config: config.clone(),
        canonical,
        well_defined: merged,
        first_failing_trial,
        universal,
        status,
    })
}
