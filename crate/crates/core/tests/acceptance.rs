//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints its own line; exits non-zero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ditopo::cat::{endo_monoid, MonoidStructure, DEFAULT_DEPTH};
use ditopo::catalog::{
    directed_square, discrete_circle, discrete_circle_cover, example, five_point_circle,
    five_point_circle_bubenik_cover, interval_fence, obstacle_square,
};
use ditopo::cover::Cover;
use ditopo::cubical::{dihomotopy_classes, pre_dihomotopic, Cell, CubicalSpace, GridCover, LatticePath, Rect, Vertex};
use ditopo::dipath::{covered_partwise, smallest_cover_index, GenericDipath};
use ditopo::model::SpaceModel;
use ditopo::report::Status;
use ditopo::vankampen::{
    glue_directed_maps, mediating_trials, monoid_pushout_condition, van_kampen_check, TrialConfig,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: ditopo::error::Error) -> String {
    e.to_string()
}

fn corner_classes(g: &CubicalSpace) -> Result<(usize, usize), String> {
    let set = dihomotopy_classes(g, Vertex::new(0, 0), Vertex::new(g.width(), g.height()), 100_000).map_err(err)?;
    Ok((set.paths.len(), set.class_count()))
}

fn obstacle_square_classes() -> Outcome {
    let obstacle = corner_classes(&obstacle_square(3).map_err(err)?)?;
    ensure(obstacle == (20, 2), || format!("obstacle 3x3: {obstacle:?}"))?;
    let empty = corner_classes(&directed_square(3).map_err(err)?)?;
    ensure(empty == (20, 1), || format!("empty 3x3: {empty:?}"))?;
    Ok("obstacle 20 paths / 2 classes, empty 20 / 1".into())
}

fn deformation_is_one_way() -> Outcome {
    let g = directed_square(2).map_err(err)?;
    let low = g.path(Vertex::new(0, 0), "RRUU").map_err(err)?;
    let high = g.path(Vertex::new(0, 0), "UURR").map_err(err)?;
    let up = pre_dihomotopic(&g, &low, &high).map_err(err)?;
    let down = pre_dihomotopic(&g, &high, &low).map_err(err)?;
    ensure(up && !down, || format!("RRUU~>UURR {up}, UURR~>RRUU {down}"))?;
    Ok("RRUU ~> UURR holds, converse does not".into())
}

fn interval_monoid_is_trivial() -> Outcome {
    let mut checked = 0;
    for k in 1..=6 {
        let fence = interval_fence(k).map_err(err)?;
        let model: SpaceModel = fence.into();
        let c = model.presentation();
        for x in model.points() {
            for max_len in 0..=20 {
                let r = endo_monoid(&c, &x, max_len).map_err(err)?;
                ensure(r.classes == 1 && r.exact, || {
                    format!("fence {k}, point {x}, max_len {max_len}: {} classes", r.classes)
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (fence, point, max_len) cases, all 1 class"))
}

fn discrete_circle_monoid() -> Outcome {
    let model: SpaceModel = discrete_circle().into();
    let c = model.presentation();
    ensure(c.is_free() && c.generators().len() == 4, || {
        format!("{} generators, {} relations", c.generators().len(), c.relations().len())
    })?;
    let mut seen = Vec::new();
    for m in 0..=2 {
        let r = endo_monoid(&c, "E", 4 * m).map_err(err)?;
        ensure(r.classes == m + 1 && r.exact, || {
            format!("m = {m}: {} classes", r.classes)
        })?;
        // the window of length 0 holds only the identity
        let expected = if m == 0 {
            MonoidStructure::Trivial
        } else {
            MonoidStructure::Free(1)
        };
        ensure(r.structure == expected, || format!("m = {m}: {}", r.structure))?;
        seen.push(format!("{}:{}", r.classes, r.structure));
    }
    Ok(format!("free on 4; m=0,1,2 -> {}", seen.join(", ")))
}

fn five_point_circle_monoid() -> Outcome {
    let model: SpaceModel = five_point_circle().into();
    let r = endo_monoid(&model.presentation(), "W", 8).map_err(err)?;
    ensure(r.classes == 7 && r.structure == MonoidStructure::Free(2), || {
        format!("{} classes, {}", r.classes, r.structure)
    })?;
    let cover: Cover = five_point_circle_bubenik_cover().into();
    let b = monoid_pushout_condition(&model, &cover, "W", 8, DEFAULT_DEPTH).map_err(err)?;
    let witness = b.witness.clone().unwrap_or_default();
    ensure(b.status == Status::Fail && witness.contains('E'), || {
        format!("factorization {:?}, witness {witness:?}", b.status)
    })?;
    Ok(format!("7 classes, free(2); factorization fails at {witness}"))
}

fn circle_van_kampen() -> Outcome {
    let model: SpaceModel = discrete_circle().into();
    let cover: Cover = discrete_circle_cover().into();
    let r = van_kampen_check(&model, &cover, 12, DEFAULT_DEPTH).map_err(err)?;
    ensure(
        r.pairs.len() == 16 && r.mismatches == 0 && r.unknowns == 0 && r.status == Status::Pass,
        || {
            format!(
                "{} pairs, {} mismatches, {} unknowns",
                r.pairs.len(),
                r.mismatches,
                r.unknowns
            )
        },
    )?;
    Ok("16 hom-counts agree up to length 12".into())
}

fn grid_van_kampen() -> Outcome {
    let grids = [
        ("2x2", directed_square(2).map_err(err)?),
        ("3x3", directed_square(3).map_err(err)?),
        ("3x3 obstacle", obstacle_square(3).map_err(err)?),
        ("4x4", directed_square(4).map_err(err)?),
    ];
    let mut pairs = 0;
    for (name, g) in grids {
        let max_len = 2 * (g.width() + g.height()) as usize;
        let cover: Cover = GridCover::vertical_split(&g).into();
        let model: SpaceModel = g.into();
        let r = van_kampen_check(&model, &cover, max_len, DEFAULT_DEPTH).map_err(err)?;
        ensure(r.mismatches == 0 && r.unknowns == 0 && r.status == Status::Pass, || {
            format!(
                "{name}: {} mismatches, {} unknowns, {:?}",
                r.mismatches, r.unknowns, r.status
            )
        })?;
        pairs += r.pairs.len();
    }
    Ok(format!("{pairs} vertex pairs agree across 4 grids"))
}

const TRIAL_SPACES: &[&str] = &[
    "discrete-circle-cover",
    "five-point-circle",
    "interval-fence-4",
    "directed-square-2",
    "directed-square-3",
    "obstacle-square-3",
    "obstacle-square-4",
    "pv-grid",
];

fn mediating_functor_suite() -> Outcome {
    let config = TrialConfig::default();
    let mut checks = 0;
    for name in TRIAL_SPACES {
        let ex = example(name).map_err(err)?;
        let cover = ex.cover.ok_or_else(|| format!("{name} has no cover"))?;
        let r = mediating_trials(&ex.model, &cover, &config).map_err(err)?;
        let tallies = r
            .well_defined
            .iter()
            .chain(&r.universal.checks)
            .chain(&r.canonical.checks);
        for t in tallies {
            ensure(t.failed == 0 && t.unknown == 0, || {
                format!(
                    "{name}: {} failed {} unknown {}, e.g. {:?}",
                    t.name, t.failed, t.unknown, t.witness
                )
            })?;
            checks += t.checked;
        }
        ensure(r.status == Status::Pass, || format!("{name}: {:?}", r.status))?;
    }
    Ok(format!(
        "{} trials x {} spaces, {checks} checks, no failures",
        config.trials,
        TRIAL_SPACES.len()
    ))
}

fn gluing() -> Outcome {
    let g = directed_square(3).map_err(err)?;
    let cover: Cover = GridCover::vertical_split(&g).into();
    let model: SpaceModel = g.into();
    let id: BTreeMap<String, String> = model.points().into_iter().map(|p| (p.clone(), p)).collect();
    // 6 steps reach every dipath of the 3x3 grid
    let ok = glue_directed_maps(&model, &cover, &id, &id, &model, 6).map_err(err)?;
    ensure(ok.status == Status::Pass && ok.failures == 0, || {
        format!("inclusions: {:?}", ok.witness)
    })?;
    let mut bad = id.clone();
    bad.insert("(3,3)".into(), "(0,0)".into());
    let r = glue_directed_maps(&model, &cover, &id, &bad, &model, 6).map_err(err)?;
    let witness = r.witness.clone().unwrap_or_default();
    ensure(r.status == Status::Fail && !witness.is_empty(), || {
        "corrupted map passed".into()
    })?;
    Ok(format!(
        "{} dipaths glue; corrupted map caught at {witness}",
        ok.checked
    ))
}

fn random_grid(rng: &mut impl Rng) -> CubicalSpace {
    let (w, h) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
    let cells: Vec<Cell> = (0..h)
        .flat_map(|y| (0..w).map(move |x| Cell::new(x, y)))
        .filter(|_| rng.gen_ratio(1, 5))
        .collect();
    CubicalSpace::new(w, h, cells).expect("in-bounds cells")
}

fn random_grid_cover(g: &CubicalSpace, rng: &mut impl Rng) -> GridCover {
    let (w, h) = (g.width(), g.height());
    let vertical = rng.gen_bool(0.5);
    let extent = if vertical { w } else { h };
    let cut = rng.gen_range(0..=extent);
    let back = rng.gen_range(0..=cut);
    let rect = |lo, hi| {
        if vertical {
            Rect::new(lo, 0, hi, h)
        } else {
            Rect::new(0, lo, w, hi)
        }
    };
    GridCover::new(vec![rect(0, cut)], vec![rect(cut - back, extent)])
}

/// A random monotone walk that stops at a dead end or a random length.
fn random_lattice_path(g: &CubicalSpace, rng: &mut impl Rng) -> LatticePath {
    let starts: Vec<Vertex> = g.vertices().filter(|&v| g.is_vertex_allowed(v)).collect();
    let start = *starts.choose(rng).expect("grids keep their corners");
    let len = rng.gen_range(0..=(g.width() + g.height()) as usize);
    let mut at = start;
    let mut moves = Vec::new();
    while moves.len() < len {
        let options: Vec<_> = g.edges().filter(|&(v, _)| v == at).map(|(_, mv)| mv).collect();
        let Some(&mv) = options.choose(rng) else { break };
        moves.push(mv);
        at = at.step(mv);
    }
    LatticePath::new(g, start, moves).expect("walk follows allowed edges")
}

fn random_step_path(model: &SpaceModel, rng: &mut impl Rng) -> GenericDipath {
    let points = model.points();
    let mut walk = vec![points.choose(rng).expect("non-empty").clone()];
    for _ in 0..rng.gen_range(0..=12) {
        let next = model.successors(walk.last().expect("non-empty"));
        walk.push(next.choose(rng).expect("circles have successors").clone());
    }
    model.path_through(&walk).expect("walk follows steps")
}

fn covering_machinery() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0_7e12);
    let circle: SpaceModel = discrete_circle().into();
    let circle_cover: Cover = discrete_circle_cover().into();
    let five: SpaceModel = five_point_circle().into();
    let five_cover = example("five-point-circle").map_err(err)?.cover.expect("default cover");

    let mut instances = 0;
    let mut implications = 0;
    while instances < 1000 {
        let (path, cover) = match instances % 4 {
            0 => (random_step_path(&circle, &mut rng), circle_cover.clone()),
            1 => (random_step_path(&five, &mut rng), five_cover.clone()),
            _ => {
                let g = random_grid(&mut rng);
                let c = random_grid_cover(&g, &mut rng);
                if c.validate(&g).is_err() {
                    continue;
                }
                (random_lattice_path(&g, &mut rng).into(), c.into())
            }
        };
        instances += 1;
        let m = smallest_cover_index(&path, &cover).ok_or_else(|| format!("{path}: no covering index"))?;
        ensure(covered_partwise(&path, &cover, m), || {
            format!("{path}: not {m}-covered")
        })?;
        ensure(m == 1 || !covered_partwise(&path, &cover, m - 1), || {
            format!("{path}: {m} not minimal")
        })?;
        for n in 1..=path.len() + 2 {
            if !covered_partwise(&path, &cover, n) {
                continue;
            }
            for k in 1..=4 {
                ensure(covered_partwise(&path, &cover, n * k), || {
                    format!("{path}: {n}-covered, not {}", n * k)
                })?;
                implications += 1;
            }
        }
    }
    Ok(format!(
        "{instances} instances, {implications} refinements, minimality holds"
    ))
}

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        name: "obstacle square classes",
        limit: Duration::from_secs(1),
        run: obstacle_square_classes,
    },
    Criterion {
        id: 2,
        name: "one-way deformation",
        limit: Duration::from_secs(1),
        run: deformation_is_one_way,
    },
    Criterion {
        id: 3,
        name: "interval monoid trivial",
        limit: Duration::from_secs(1),
        run: interval_monoid_is_trivial,
    },
    Criterion {
        id: 4,
        name: "discrete circle monoid",
        limit: Duration::from_secs(1),
        run: discrete_circle_monoid,
    },
    Criterion {
        id: 5,
        name: "five-point circle",
        limit: Duration::from_secs(5),
        run: five_point_circle_monoid,
    },
    Criterion {
        id: 6,
        name: "van kampen, circle",
        limit: Duration::from_secs(10),
        run: circle_van_kampen,
    },
    Criterion {
        id: 7,
        name: "van kampen, grids",
        limit: Duration::from_secs(60),
        run: grid_van_kampen,
    },
    Criterion {
        id: 8,
        name: "mediating functor",
        limit: Duration::from_secs(120),
        run: mediating_functor_suite,
    },
    Criterion {
        id: 9,
        name: "gluing",
        limit: Duration::from_secs(10),
        run: gluing,
    },
    Criterion {
        id: 10,
        name: "covering machinery",
        limit: Duration::from_secs(30),
        run: covering_machinery,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let in_time = elapsed <= c.limit;
        let (verdict, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; over time limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} {verdict} {:<26} {:>8.3}s / {:>3}s  {detail}",
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    println!("acceptance: {} passed, {failed} failed", CRITERIA.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
