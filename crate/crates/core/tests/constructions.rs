use colourful::constructions::*;
use colourful::genus::has_property_p;
use colourful::residues;
use colourful::topology::{find_melonic_trace, is_manifold, melonic_reduce, Status};
use colourful::{ColourSet, ColourfulGraph};

fn components_reduce(g: &ColourfulGraph, colours: ColourSet) -> bool {
    let p = residues(g, colours).unwrap();
    p.components().iter().all(|comp| {
        let h = g.residue_graph(colours, comp).unwrap();
        matches!(find_melonic_trace(&h), Ok(Some(_)))
    })
}

#[test]
fn three_dimensional_outputs_are_manifolds() {
    let mut rng = rng_from_seed(21);
    for k in 1..=6 {
        for _ in 0..10 {
            let p = random_params(3, k, &mut rng);
            let g = build_manifold(&p).unwrap();
            assert_eq!(g.n(), 12 * k);
            assert!(g.is_connected());
            assert_eq!(is_manifold(&g).status, Status::Yes, "{p:?}");
        }
    }
}

#[test]
fn vertex_count_tracks_cycles() {
    // V = κ_{123} + κ_{124} + κ_{134} + κ_{234}; the last three follow the
    // cycles of στ⁻¹ and the first is 1.
    let mut rng = rng_from_seed(5);
    let mut offset = None;
    for k in 1..=8 {
        for _ in 0..15 {
            let p = random_params(3, k, &mut rng);
            let g = build_manifold(&p).unwrap();
            assert_eq!(g.component_count(ColourSet::from_colours([1, 2, 3])), 1);
            let v: usize = g.colours().subsets_of_size(3).map(|j| g.component_count(j)).sum();
            let o = v as i64 - 3 * p.sigma_tau_inv_cycles() as i64;
            assert_eq!(*offset.get_or_insert(o), o, "{p:?}");
        }
    }
    assert_eq!(offset, Some(3));
}

#[test]
fn higher_dimensional_certificates() {
    let mut rng = rng_from_seed(8);
    for d in [4, 5] {
        for k in 1..=2 {
            let p = random_params(d, k, &mut rng);
            let g = build_manifold(&p).unwrap();
            assert!(has_property_p(&g));
            let without_last = g.colours().without(d + 1);
            let h = g.restrict_colours(without_last).unwrap();
            assert!(melonic_reduce(&h).unwrap().reached_dipole);
            for i in 1..=d {
                assert!(components_reduce(&g, g.colours().without(i)), "d={d} k={k} colour {i}");
            }
            assert_eq!(is_manifold(&g).status, Status::Yes);
        }
    }
}

#[test]
fn planar_family_members() {
    let mut rng = rng_from_seed(2);
    let g3 = build_manifold(&random_params(3, 3, &mut rng)).unwrap();
    for target in [4, 5, 6] {
        let g = build_planar_family(&g3, target).unwrap();
        assert_eq!(g.d(), target);
        assert!(has_property_p(&g));
        for c in 5..=target + 1 {
            assert_eq!(g.matching(c), g.matching(5));
        }
    }
    let g4 = build_manifold(&ConstructionParams::identity(4, 1)).unwrap();
    assert_eq!(build_planar_family(&g4, 5), Err(ConstructionError::NotAConstructionGraph));
}

#[test]
fn even_dimensions_accept_any_permutations() {
    let p = ConstructionParams {
        d: 4,
        k: 3,
        sigma: vec![2, 3, 1],
        tau: vec![3, 1, 2],
    };
    let g = build_manifold(&p).unwrap();
    assert_eq!(g.n(), 48);
    assert!(has_property_p(&g));
    let bad = ConstructionParams { d: 3, ..p.clone() };
    assert!(matches!(build_manifold(&bad), Err(ConstructionError::BadParams(_))));
    let not_perm = ConstructionParams {
        sigma: vec![1, 1, 2],
        ..p
    };
    assert!(matches!(build_manifold(&not_perm), Err(ConstructionError::BadParams(_))));
}

#[test]
fn random_melonic_graphs_reduce() {
    for seed in 0..20 {
        let g = random_melonic(3, 6, seed).unwrap();
        assert_eq!(g.n(), 14);
        assert!(find_melonic_trace(&g).unwrap().is_some());
    }
}

/// Colour-preserving automorphisms of a connected graph: each is fixed by
/// the image of vertex 0, so try every target.
fn coloured_automorphisms(g: &ColourfulGraph) -> usize {
    let n = g.n();
    (0..n)
        .filter(|&target| {
            let mut map = vec![usize::MAX; n];
            map[0] = target;
            let mut stack = vec![0];
            while let Some(v) = stack.pop() {
                for c in 1..=g.colour_count() {
                    let (u, image) = (g.neighbour(v, c), g.neighbour(map[v], c));
                    if map[u] == usize::MAX {
                        map[u] = image;
                        stack.push(u);
                    } else if map[u] != image {
                        return false;
                    }
                }
            }
            let mut seen = vec![false; n];
            map.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        })
        .count()
}

#[test]
fn automorphism_groups_are_small() {
    let mut rng = rng_from_seed(4);
    for (d, k) in [(3, 1), (3, 2), (3, 3), (4, 1), (4, 2), (4, 3), (5, 2)] {
        for _ in 0..10 {
            let g = build_manifold(&random_params(d, k, &mut rng)).unwrap();
            let a = coloured_automorphisms(&g);
            assert!((1..=4).contains(&a), "d={d} k={k}: {a}");
        }
    }
    assert_eq!(coloured_automorphisms(&ColourfulGraph::dipole(3)), 2);
}
