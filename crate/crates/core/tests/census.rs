use colourful::census::*;
use colourful::constructions::random_graph;
use colourful::format::parse_cgf;
use colourful::ColourfulGraph;
use num_bigint::BigUint;

fn agree(d: usize, n: usize) {
    let fast = enumerate(d, n, &classify, &CensusOptions::default()).unwrap();
    let slow = enumerate_labelled(d, n, &classify, DEFAULT_BUDGET).unwrap();
    for c in Class::ALL {
        assert_eq!(fast.labelled.get(c), slow.get(c), "d={d} n={n} {c}");
    }
}

#[test]
fn enumerators_agree_on_small_cases() {
    for n in [2, 4, 6, 8] {
        agree(1, n);
    }
    for n in [2, 4, 6] {
        agree(2, n);
    }
    for n in [2, 4] {
        agree(3, n);
    }
}

#[test]
fn labelled_counts_of_cycles() {
    // d = 1: a 2-regular bipartite multigraph on [1..n] with a proper
    // 2-colouring is a disjoint union of even alternating cycles.
    let r = enumerate(1, 4, &classify, &CensusOptions::default()).unwrap();
    // Two doubled edges (3 ways) or one 4-cycle (3 · 2 colourings).
    assert_eq!(r.labelled.get(Class::All), &BigUint::from(9u32));
}

#[test]
fn class_chain_in_three_dimensions() {
    for n in [2, 4] {
        let r = enumerate(3, n, &classify, &CensusOptions::default()).unwrap();
        let chain = [Class::Melonic, Class::SphereYes, Class::Manifold, Class::PropertyP, Class::All];
        for w in chain.windows(2) {
            assert!(r.canonical.get(w[0]) <= r.canonical.get(w[1]));
            assert!(r.labelled.get(w[0]) <= r.labelled.get(w[1]));
        }
        assert_eq!(r.canonical.get(Class::Manifold), r.canonical.get(Class::PropertyP));
        assert_eq!(r.canonical.get(Class::ManifoldUnknown), &BigUint::default());
    }
}

/// Planarity count for d = 2 from cycle counts alone: a 3-colourful graph is
/// planar iff `V - E + F = 2·components`.
fn planar_tuples_d2(half: usize) -> usize {
    let perms = colourful::perm::all_permutations(half);
    let cycles = |p: &[usize], q: &[usize]| {
        let mut seen = vec![false; half];
        let mut c = 0;
        for s in 0..half {
            if !seen[s] {
                c += 1;
                let mut w = s;
                while !seen[w] {
                    seen[w] = true;
                    w = q.iter().position(|&b| b == p[w]).unwrap();
                }
            }
        }
        c
    };
    let mut count = 0;
    for a in &perms {
        for b in &perms {
            for c in &perms {
                let g = ColourfulGraph::from_matchings(2, vec![a.clone(), b.clone(), c.clone()]).unwrap();
                let comps = g.component_count(g.colours()) as i64;
                let faces = (cycles(a, b) + cycles(a, c) + cycles(b, c)) as i64;
                let v = 2 * half as i64;
                if v - 3 * half as i64 + faces == 2 * comps {
                    count += 1;
                }
            }
        }
    }
    count
}

#[test]
fn surfaces_census_matches_planarity_oracle() {
    let r = enumerate(2, 6, &classify, &CensusOptions::default()).unwrap();
    assert_eq!(r.canonical.get(Class::PropertyP), &BigUint::from(planar_tuples_d2(3)));
    assert_eq!(r.canonical.get(Class::Manifold), r.canonical.get(Class::All));
    let torus = ColourfulGraph::from_matchings(2, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
    let c = classify(&torus);
    assert!(c.contains(Class::All) && !c.contains(Class::PropertyP));
    assert!(!c.contains(Class::SphereYes));
}

#[test]
fn emitted_files_include_two_balls() {
    let dir = std::env::temp_dir().join(format!("colourful-census-{}", std::process::id()));
    let opts = CensusOptions {
        emit_dir: Some(dir.clone()),
        ..CensusOptions::default()
    };
    let r = enumerate(3, 4, &classify, &opts).unwrap();
    let two_balls = ColourfulGraph::from_matchings(3, vec![vec![0, 1], vec![0, 1], vec![0, 1], vec![1, 0]]).unwrap();
    let mut files = 0;
    let mut found = None;
    for e in std::fs::read_dir(&dir).unwrap() {
        let path = e.unwrap().path();
        files += 1;
        let g = parse_cgf(&std::fs::read_to_string(&path).unwrap()).unwrap();
        if g == two_balls {
            found = Some(path.file_name().unwrap().to_string_lossy().into_owned());
        }
    }
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(BigUint::from(files as u32), *r.canonical.get(Class::All));
    assert!(found.unwrap().starts_with("melonic-"));
}

#[test]
fn sampler_matches_census_ratio() {
    let r = enumerate(3, 4, &classify, &CensusOptions::default()).unwrap();
    let expected = 8.0 / 16.0;
    assert_eq!(r.canonical.get(Class::Melonic), &BigUint::from(8u32));
    let samples = 4000;
    let hits = (0..samples)
        .filter(|&s| classify(&random_graph(3, 4, s).unwrap()).contains(Class::Melonic))
        .count();
    let frac = hits as f64 / samples as f64;
    assert!((frac - expected).abs() < 0.04, "{frac}");
}

#[test]
fn lemma_bounds_hold_exhaustively() {
    for n in [2, 4, 6] {
        let r = verify_lemma_bounds(3, n, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.violations(), 0);
        assert!(r.lemma1.checked > 0);
    }
    let r = verify_lemma_bounds(4, 4, DEFAULT_BUDGET).unwrap();
    assert_eq!(r.violations(), 0);
    assert_eq!(r.lemma2.checked, 32);
}

#[test]
fn extension_bounds_hold() {
    let s = verify_all_extension_bounds(6).unwrap();
    assert_eq!(s.graphs, 1 + 4 + 36);
    assert_eq!(s.violations, 0);
    assert!(s.nonplanar > 0);
}

#[test]
fn cycle_means_track_harmonic_numbers() {
    let s = cycle_statistics(30, 4000, 1);
    assert!((s.mean - harmonic(30)).abs() < 0.3);
    let r = vn_experiment(4, &[6], 500, 1);
    assert!((r.rows[0].mean_cycles - harmonic(6)).abs() < 0.3);
}
