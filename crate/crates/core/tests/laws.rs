use std::collections::BTreeSet;

use proptest::prelude::*;

use grassclique::codeprof::column_profile;
use grassclique::grassmann::Grassmannian;
use grassclique::starlab::{census_reports, graph_summary, Kind, Rule};
use grassclique::{
    classify_star, component_count, star_pi, top_pi, Field, GrassmannParams, MatFq, Subspace,
};

fn params(q: u32, n: usize, k: usize) -> GrassmannParams {
    GrassmannParams::new(Field::new(q).unwrap(), n, k).unwrap()
}

#[test]
fn every_extended_clique_sits_in_a_star_or_top() {
    let mut extended = 0;
    for (q, n, k) in [(2, 5, 3), (2, 6, 3), (3, 4, 2), (3, 5, 3), (4, 4, 2)] {
        let reports = census_reports(&params(q, n, k), 2, false).unwrap();
        for r in reports.iter().filter(|r| r.oracle_maximal == Some(false)) {
            let mut clique = r.members.clone();
            clique.push(r.oracle_witness.clone().unwrap());
            let meet = clique
                .iter()
                .skip(1)
                .try_fold(clique[0].clone(), |acc, c| acc.intersection(c))
                .unwrap();
            let join = clique
                .iter()
                .skip(1)
                .try_fold(clique[0].clone(), |acc, c| acc.sum(c))
                .unwrap();
            let inside = |family: Vec<Subspace>| {
                let family: BTreeSet<_> = family.into_iter().collect();
                clique.iter().all(|c| family.contains(c))
            };
            let in_star = meet.dim() + 1 == k && inside(star_pi(&meet).unwrap());
            let in_top = join.dim() == k + 1 && inside(top_pi(&join).unwrap());
            assert!(
                in_star || in_top,
                "({q},{n},{k}) clique through {:?} is in neither",
                r.s
            );
            extended += 1;
        }
    }
    assert!(extended > 0);
}

#[test]
fn large_stars_are_maximal() {
    for (q, n, k) in [(2, 5, 3), (2, 6, 3), (3, 5, 3), (4, 4, 2)] {
        for r in census_reports(&params(q, n, k), 2, false).unwrap() {
            if r.actual_size > q as usize + 1 {
                assert_eq!(r.oracle_maximal, Some(true), "({q},{n},{k}) {:?}", r.s);
            }
        }
    }
}

#[test]
fn degenerate_q2_bullet_is_vacuous_at_k_equal_n_minus_2() {
    for (n, k) in [(5, 3), (6, 4)] {
        for r in census_reports(&params(2, n, k), 2, false).unwrap() {
            if r.rule == Rule::DegenerateTable {
                assert!(r.profile.class_count() <= k, "{:?}", r.s);
                assert_eq!(r.kind, Kind::NotMaximal);
            }
        }
    }
}

#[test]
fn component_counts() {
    for (q, n, k, expected) in REGRESSION_GRAPHS {
        let g = graph_summary(&params(q, n, k), false).unwrap();
        assert_eq!(
            (g.vertices, g.edges, g.components),
            expected,
            "({q},{n},{k})"
        );
    }
    assert_eq!(component_count(&params(2, 5, 3), false).unwrap(), 1);
}

// Frozen from a verified run; vertex counts agree with 7*6*5*4*3/168 and 7!/168.
type Counts = (usize, usize, usize);

const REGRESSION_GRAPHS: [(u32, usize, usize, Counts); 4] = [
    (2, 5, 3, (15, 45, 1)),
    (2, 6, 3, (30, 105, 1)),
    (3, 5, 3, (440, 15400, 1)),
    (4, 4, 2, (54, 567, 1)),
];

fn centres_q3() -> Vec<Subspace> {
    Grassmannian::new(&Field::new(3).unwrap(), 6, 2)
        .unwrap()
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classification_ignores_column_order(
        idx in 0usize..((3usize.pow(6) - 1) * (3usize.pow(6) - 3) / 48),
        perm in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let s = centres_q3()[idx].clone();
        let t = s.permute_columns(&perm).unwrap();
        let (a, b) = (classify_star(&s).unwrap(), classify_star(&t).unwrap());
        prop_assert_eq!(a.kind, b.kind);
        prop_assert_eq!(a.equals_top, b.equals_top);
        prop_assert_eq!(star_pi(&s).unwrap().len(), star_pi(&t).unwrap().len());
        prop_assert_eq!(
            column_profile(&s).size_multiset(),
            column_profile(&t).size_multiset()
        );
    }

    #[test]
    fn star_members_are_adjacent_superspaces(rows in prop::collection::vec(prop::collection::vec(0u8..4, 5), 2)) {
        let f = Field::new(4).unwrap();
        let s = Subspace::span(&MatFq::from_rows(&f, &rows).unwrap());
        prop_assume!(s.dim() == 2);
        let members = star_pi(&s).unwrap();
        for (i, a) in members.iter().enumerate() {
            prop_assert!(a.contains(&s).unwrap());
            for b in &members[i + 1..] {
                prop_assert_eq!(a.intersect_dim(b).unwrap(), 2);
            }
        }
    }
}
