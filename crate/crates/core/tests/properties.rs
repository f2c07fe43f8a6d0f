use colourful::format::{parse_cgf, to_cgf};
use colourful::genus::has_property_p;
use colourful::topology::{betti_fast, find_dipoles, is_manifold, remove_dipole, Status};
use colourful::{kappa_table, ColourSet, ColourfulGraph};
use proptest::prelude::*;

fn graph(d: std::ops::RangeInclusive<usize>, half: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = ColourfulGraph> {
    (d, half).prop_flat_map(|(d, h)| {
        proptest::collection::vec(Just((0..h).collect::<Vec<usize>>()).prop_shuffle(), d + 1)
            .prop_map(move |ms| ColourfulGraph::from_matchings(d, ms).unwrap())
    })
}

/// Cycles of `w ↦ m_j⁻¹(m_i(w))`, walked without any library helper.
fn bicoloured_cycles(mi: &[usize], mj: &[usize]) -> usize {
    let h = mi.len();
    let mut inv_j = vec![0; h];
    for (w, &b) in mj.iter().enumerate() {
        inv_j[b] = w;
    }
    let mut seen = vec![false; h];
    let mut cycles = 0;
    for s in 0..h {
        if !seen[s] {
            cycles += 1;
            let mut w = s;
            while !seen[w] {
                seen[w] = true;
                w = inv_j[mi[w]];
            }
        }
    }
    cycles
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pair_counts_are_bicoloured_cycles(g in graph(1..=5, 1..=7)) {
        let t = kappa_table(&g);
        for i in 1..=g.colour_count() {
            for j in i + 1..=g.colour_count() {
                prop_assert_eq!(t.pair(i, j), bicoloured_cycles(g.matching(i), g.matching(j)));
            }
        }
    }

    #[test]
    fn single_colour_counts(g in graph(1..=5, 1..=7)) {
        let t = kappa_table(&g);
        for i in g.colours().subsets() {
            if !i.is_empty() {
                prop_assert_eq!(t.kappa_r(i, 1).unwrap(), i.len() * g.n() / 2);
            }
        }
    }

    #[test]
    fn counts_shrink_with_more_colours(g in graph(1..=4, 1..=6)) {
        let t = kappa_table(&g);
        for i in g.colours().subsets() {
            for j in i.subsets() {
                if !j.is_empty() {
                    prop_assert!(t.get(j) >= t.get(i));
                }
            }
        }
    }

    #[test]
    fn cgf_round_trip(g in graph(1..=6, 1..=8)) {
        prop_assert_eq!(parse_cgf(&to_cgf(&g)).unwrap(), g);
    }

    #[test]
    fn betti_sum_is_euler_characteristic(g in graph(1..=3, 1..=3)) {
        let t = kappa_table(&g);
        for i in g.colours().subsets() {
            if !i.is_empty() {
                let b = betti_fast(&g, i);
                prop_assert_eq!(b.euler_characteristic(), t.euler_characteristic(i).unwrap());
            }
        }
    }

    #[test]
    fn three_dimensional_manifolds_are_planar(g in graph(3..=3, 1..=5)) {
        let yes = is_manifold(&g).status == Status::Yes;
        prop_assert_eq!(yes, has_property_p(&g));
        prop_assert_ne!(is_manifold(&g).status, Status::Unknown);
    }

    #[test]
    fn dipole_removal_keeps_homology(g in graph(2..=3, 2..=4)) {
        let b = betti_fast(&g, g.colours());
        for m in find_dipoles(&g) {
            let h = remove_dipole(&g, m).unwrap();
            prop_assert_eq!(h.n(), g.n() - 2);
            prop_assert_eq!(&betti_fast(&h, h.colours()), &b);
        }
    }

    #[test]
    fn colour_set_text_round_trip(bits in 0u32..(1 << 12)) {
        let s = ColourSet::from_bits(bits);
        prop_assert_eq!(s.to_string().parse::<ColourSet>().unwrap(), s);
    }
}
