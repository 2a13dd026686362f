mod common;

use std::collections::BTreeMap;

use ditopo::cat::{word_equal, CatFunctor, Decision, MorphismWord, PresentedCategory};
use ditopo::catalog::{discrete_circle, five_point_circle};
use ditopo::cover::Cover;
use ditopo::cubical::{
    classify, elementary_flips, enumerate_paths, pre_dihomotopic, raise_flips, Cell, CubicalSpace, FlipDirection,
    GridCover, LatticePath, Rect, Vertex,
};
use ditopo::dipath::{concat, covered_partwise, smallest_cover_index, subdivide, GenericDipath};
use ditopo::model::SpaceModel;
use ditopo::pv::{build_pv_grid, Action, PvProgram};
use ditopo::topology::{
    induced_directedness, maximal_directedness, minimal_directedness, CombinatorialDirectedSpace, FiniteTopology,
    StepPath,
};
use ditopo::vankampen::{pushout, random_target, PushoutSpan};
use proptest::prelude::*;
use proptest::sample::Index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn grid_strategy() -> impl Strategy<Value = CubicalSpace> {
    (1u32..=5, 1u32..=5)
        .prop_flat_map(|(w, h)| (Just(w), Just(h), proptest::collection::vec(0u8..5, (w * h) as usize)))
        .prop_map(|(w, h, rolls)| {
            // about a fifth of the cells forbidden
            let cells = (0..h)
                .flat_map(|y| (0..w).map(move |x| Cell::new(x, y)))
                .zip(rolls)
                .filter(|&(_, r)| r == 0)
                .map(|(c, _)| c);
            CubicalSpace::new(w, h, cells).unwrap()
        })
}

fn corner_paths(g: &CubicalSpace) -> Vec<LatticePath> {
    enumerate_paths(g, Vertex::new(0, 0), Vertex::new(g.width(), g.height()), 100_000).unwrap()
}

/// Two overlapping pieces split along x or y.
fn cover_strategy(g: &CubicalSpace) -> impl Strategy<Value = GridCover> {
    let (w, h) = (g.width(), g.height());
    (any::<bool>(), any::<Index>(), any::<Index>()).prop_map(move |(vertical, a, b)| {
        let extent = if vertical { w } else { h };
        let cut = a.index(extent as usize + 1) as u32;
        let back = b.index(cut as usize + 1) as u32;
        let rect = |lo: u32, hi: u32| {
            if vertical {
                Rect::new(lo, 0, hi, h)
            } else {
                Rect::new(0, lo, w, hi)
            }
        };
        GridCover::new(vec![rect(0, cut)], vec![rect(cut - back, extent)])
    })
}

fn grid_path_cover() -> impl Strategy<Value = (CubicalSpace, LatticePath, GridCover)> {
    grid_strategy()
        .prop_flat_map(|g| {
            let paths = corner_paths(&g);
            let cover = cover_strategy(&g);
            (
                Just(g),
                Just(paths),
                any::<Index>(),
                any::<Index>(),
                any::<Index>(),
                cover,
            )
        })
        .prop_map(|(g, paths, i, a, b, c)| {
            let p = &paths[i.index(paths.len())];
            // a random sub-path, so starts vary too
            let (a, b) = (a.index(p.len() + 1), b.index(p.len() + 1));
            let (lo, hi) = (a.min(b), a.max(b));
            let sub = p.slice(lo, hi);
            (g, sub, c)
        })
}

fn random_walk(space: &CombinatorialDirectedSpace, start: usize, choices: &[Index]) -> StepPath {
    let mut names = vec![space.name(start).to_owned()];
    let mut at = start;
    for c in choices {
        let next: Vec<usize> = space.successors(at).collect();
        if next.is_empty() {
            break;
        }
        at = next[c.index(next.len())];
        names.push(space.name(at).to_owned());
    }
    StepPath::new(space, &names).unwrap()
}

fn random_topology(points: usize, gens: &[Vec<bool>]) -> FiniteTopology {
    let names: Vec<String> = (0..points).map(|i| format!("p{i}")).collect();
    let basic: Vec<Vec<String>> = gens
        .iter()
        .map(|mask| {
            names
                .iter()
                .zip(mask)
                .filter(|(_, &m)| m)
                .map(|(n, _)| n.clone())
                .collect()
        })
        .collect();
    FiniteTopology::generated_by(&names, &basic).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn step_paths_concatenate_and_stutter(
        five in any::<bool>(),
        start in 0usize..4,
        a in proptest::collection::vec(any::<Index>(), 0..8),
        b in proptest::collection::vec(any::<Index>(), 0..8),
        at in any::<Index>(),
    ) {
        let space = if five { five_point_circle() } else { discrete_circle() };
        let p = random_walk(&space, start, &a);
        let q = random_walk(&space, space.index_of(p.end()).unwrap(), &b);
        let pq = p.concat(&q).unwrap();
        prop_assert!(pq.is_valid_in(&space));
        prop_assert_eq!(pq.len(), p.len() + q.len());
        let stuttered = pq.with_stutter(at.index(pq.len() + 1));
        prop_assert!(stuttered.is_valid_in(&space));
        prop_assert_eq!(stuttered.without_stutters(), pq.without_stutters());
    }

    #[test]
    fn extreme_directedness(points in 1usize..6, gens in proptest::collection::vec(proptest::collection::vec(any::<bool>(), 6), 0..5)) {
        let t = random_topology(points, &gens);
        prop_assert!(t.is_valid());
        let max = maximal_directedness(&t).unwrap();
        for (a, b) in max.steps() {
            prop_assert!(max.has_step(b, a));
        }
        prop_assert_eq!(minimal_directedness(&t).unwrap().steps().count(), 0);
    }

    #[test]
    fn lattice_paths_are_monotone((g, p, _c) in grid_path_cover()) {
        prop_assert!(p.is_valid_in(&g));
        for w in p.vertices().windows(2) {
            prop_assert!(w[0].le(w[1]));
        }
    }

    #[test]
    fn flip_duality(g in grid_strategy()) {
        for p in corner_paths(&g) {
            for f in elementary_flips(&g, &p) {
                let back = match f.direction {
                    FlipDirection::Raise => FlipDirection::Lower,
                    FlipDirection::Lower => FlipDirection::Raise,
                };
                prop_assert!(elementary_flips(&g, &f.result)
                    .iter()
                    .any(|h| h.direction == back && h.result == p));
            }
        }
    }

    #[test]
    fn pre_dihomotopy_is_a_preorder(g in grid_strategy(), i in any::<Index>(), j in any::<Index>(), k in any::<Index>()) {
        let paths = corner_paths(&g);
        let (p, q, r) = (&paths[i.index(paths.len())], &paths[j.index(paths.len())], &paths[k.index(paths.len())]);
        prop_assert!(pre_dihomotopic(&g, p, p).unwrap());
        if pre_dihomotopic(&g, p, q).unwrap() && pre_dihomotopic(&g, q, r).unwrap() {
            prop_assert!(pre_dihomotopic(&g, p, r).unwrap());
        }
    }

    #[test]
    fn classes_are_flip_components(g in grid_strategy()) {
        let set = classify(&g, corner_paths(&g));
        for (i, p) in set.paths.iter().enumerate() {
            for q in raise_flips(&g, p) {
                let j = set.paths.iter().position(|x| *x == q).unwrap();
                prop_assert_eq!(set.class_of[i], set.class_of[j]);
            }
        }
        let o = common::GridOracle::new(
            g.width(),
            g.height(),
            &g.forbidden().iter().map(|c| (c.x, c.y)).collect::<Vec<_>>(),
        );
        prop_assert_eq!(o.class_count((0, 0), (g.width(), g.height())), (set.paths.len(), set.classes.len()));
    }

    #[test]
    fn sub_rectangle_inclusion_preserves_classes(g in grid_strategy(), a in any::<Index>(), b in any::<Index>()) {
        let (w, h) = (g.width(), g.height());
        let (x0, y0) = (a.index(w as usize) as u32, b.index(h as usize) as u32);
        let sub = CubicalSpace::new(
            w - x0,
            h - y0,
            g.forbidden().iter().filter(|c| c.x >= x0 && c.y >= y0).map(|c| Cell::new(c.x - x0, c.y - y0)),
        )
        .unwrap();
        let inner = classify(&sub, corner_paths(&sub));
        let shift = |p: &LatticePath| LatticePath::from_parts(Vertex::new(x0, y0), p.moves().to_vec());
        let outer = classify(&g, inner.paths.iter().map(shift).collect());
        for i in 0..inner.paths.len() {
            for j in 0..inner.paths.len() {
                if inner.class_of[i] == inner.class_of[j] {
                    prop_assert_eq!(outer.class_of[i], outer.class_of[j]);
                }
            }
        }
    }

    #[test]
    fn concatenation_respects_classes(g in grid_strategy(), cut in any::<Index>(), picks in proptest::collection::vec(any::<Index>(), 4)) {
        let paths = corner_paths(&g);
        let set = classify(&g, paths.clone());
        // split every path at the same vertex so halves compose
        let p = &paths[picks[0].index(paths.len())];
        let at = p.vertices()[cut.index(p.len() + 1)];
        let through: Vec<&LatticePath> = paths.iter().filter(|q| q.vertices().contains(&at)).collect();
        let split = |q: &LatticePath| {
            let k = q.vertices().iter().position(|&v| v == at).unwrap();
            (q.slice(0, k), q.slice(k, q.len()))
        };
        let (a1, a2) = split(through[picks[1].index(through.len())]);
        let (b1, b2) = split(through[picks[2].index(through.len())]);
        let first = classify(&g, vec![a1.clone(), b1.clone()]);
        let second = classify(&g, vec![a2.clone(), b2.clone()]);
        if first.classes.len() == 1 && second.classes.len() == 1 {
            let x = a1.concat(&a2).unwrap();
            let y = b1.concat(&b2).unwrap();
            let ix = paths.iter().position(|q| *q == x).unwrap();
            let iy = paths.iter().position(|q| *q == y).unwrap();
            prop_assert_eq!(set.class_of[ix], set.class_of[iy]);
        }
    }

    #[test]
    fn subdivision_reassembles((_g, p, _c) in grid_path_cover(), n in 1usize..10) {
        let p: GenericDipath = p.into();
        let pieces = subdivide(&p, n);
        prop_assert_eq!(pieces.len(), n);
        let whole = pieces[1..].iter().try_fold(pieces[0].clone(), |acc, q| concat(&acc, q)).unwrap();
        prop_assert_eq!(whole, p);
    }

    #[test]
    fn refinement_and_minimality((g, p, c) in grid_path_cover(), n in 1usize..8, k in 1usize..5) {
        prop_assume!(c.validate(&g).is_ok());
        let cover: Cover = c.into();
        let p: GenericDipath = p.into();
        if covered_partwise(&p, &cover, n) {
            prop_assert!(covered_partwise(&p, &cover, n * k));
        }
        let m = smallest_cover_index(&p, &cover).unwrap();
        prop_assert!(covered_partwise(&p, &cover, m));
        if m > 1 {
            prop_assert!(!covered_partwise(&p, &cover, m - 1));
        }
    }

    #[test]
    fn covered_halves_cover_the_concatenation(
        (g, p, c) in grid_path_cover(),
        n in 1usize..5,
    ) {
        prop_assume!(c.validate(&g).is_ok() && p.len() % 2 == 0);
        let cover: Cover = c.into();
        let half = p.len() / 2;
        let (a, b): (GenericDipath, GenericDipath) = (p.slice(0, half).into(), p.slice(half, p.len()).into());
        if covered_partwise(&a, &cover, n) && covered_partwise(&b, &cover, n) {
            prop_assert!(covered_partwise(&concat(&a, &b).unwrap(), &cover, 2 * n));
        }
    }

    #[test]
    fn word_equality_is_an_equivalence(g in grid_strategy(), i in any::<Index>(), j in any::<Index>(), k in any::<Index>()) {
        let c = SpaceModel::Grid(g.clone()).presentation();
        let paths = corner_paths(&g);
        let words: Vec<MorphismWord> = [i, j, k]
            .iter()
            .map(|x| ditopo::cat::path_word(&paths[x.index(paths.len())].clone().into()))
            .collect();
        let eq = |a: &MorphismWord, b: &MorphismWord| word_equal(&c, a, b, 64).unwrap();
        prop_assert_eq!(eq(&words[0], &words[0]), Decision::Yes);
        prop_assert_eq!(eq(&words[0], &words[1]), eq(&words[1], &words[0]));
        if eq(&words[0], &words[1]) == Decision::Yes && eq(&words[1], &words[2]) == Decision::Yes {
            prop_assert_eq!(eq(&words[0], &words[2]), Decision::Yes);
        }
    }

    #[test]
    fn functors_respect_composition(seed in any::<u64>(), a in proptest::collection::vec(any::<Index>(), 0..6), b in proptest::collection::vec(any::<Index>(), 0..6)) {
        let model = SpaceModel::Finite(five_point_circle());
        let c = model.presentation();
        let (target, f) = random_target(&c, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let space = five_point_circle();
        let p = random_walk(&space, 0, &a);
        let q = random_walk(&space, space.index_of(p.end()).unwrap(), &b);
        let (wp, wq) = (ditopo::cat::path_word(&p.clone().into()), ditopo::cat::path_word(&q.into()));
        prop_assert_eq!(f.apply(&wp.then(&wq)).unwrap(), f.apply(&wp).unwrap().then(&f.apply(&wq).unwrap()));
        let id = MorphismWord::identity(p.start());
        prop_assert!(f.apply(&id).unwrap().is_identity());
        prop_assert!(f.validate(&c, &target).is_ok());
    }

    #[test]
    fn pv_grids_avoid_mutual_exclusion(
        a in proptest::collection::vec(0usize..3, 0..3),
        b in proptest::collection::vec(0usize..3, 0..3),
        pad in 0usize..3,
    ) {
        // well-nested programs: each resource held once, possibly nested
        let prog = |rs: &[usize]| {
            let mut acts: Vec<Action> = vec![Action::Acquire("pad".into()); pad.min(1)];
            let mut seen = Vec::new();
            for &r in rs {
                if !seen.contains(&r) {
                    seen.push(r);
                }
            }
            acts.extend(seen.iter().map(|r| Action::Acquire(format!("r{r}"))));
            acts.extend(seen.iter().rev().map(|r| Action::Release(format!("r{r}"))));
            acts.extend(vec![Action::Release("pad".into()); pad.min(1)]);
            if acts.is_empty() {
                acts = vec![Action::Acquire("x".into()), Action::Release("x".into())];
            }
            acts
        };
        let p = PvProgram::new(prog(&a), prog(&b));
        let g = build_pv_grid(&p).unwrap();
        for path in corner_paths(&g) {
            for v in path.vertices() {
                prop_assert!(g.is_vertex_allowed(v));
            }
        }
    }
}

#[test]
fn induced_directedness_restricts_steps() {
    let circle = discrete_circle();
    let names = ["N", "E", "S", "W"];
    for mask in 1u32..16 {
        let keep: Vec<&str> = names
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, n)| *n)
            .collect();
        let sub = circle.subspace(&keep).unwrap();
        let inclusion: BTreeMap<String, String> = keep.iter().map(|n| (n.to_string(), n.to_string())).collect();
        let induced = induced_directedness(&inclusion, &circle, sub.topology()).unwrap();
        assert_eq!(induced.step_names(), sub.step_names(), "{keep:?}");
    }
}

#[test]
fn pushout_square_commutes() {
    let model = SpaceModel::Finite(five_point_circle());
    let cover: Cover = ditopo::catalog::five_point_circle_cover().into();
    let po = pushout(PushoutSpan::from_cover(&model, &cover).unwrap()).unwrap();
    let left = po.span.i1.then(&po.j1).unwrap();
    let right = po.span.i2.then(&po.j2).unwrap();
    assert_eq!(left.disagreement(&right, &po.span.apex), None);
    assert_eq!(left, right);
    let _: &PresentedCategory = &po.presentation;
    let _: &CatFunctor = &po.j1;
}
