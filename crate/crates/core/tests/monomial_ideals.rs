//! Engine invariants of monomial ideals against box-counting oracles.

use proptest::prelude::*;

use punctual::artinian::{local_components, quotient_basis};
use punctual::staircase::{corners, monomial_ideal_of, partitions_of, Partition};
use punctual::verify::partition_invariants;
use punctual::{buchberger, Field, GroebnerBasis, Monomial, MonomialOrder, Polynomial};

/// Standard monomials of a partition, read off its rows.
fn boxes(parts: &[u32]) -> Vec<(u32, u32)> {
    parts
        .iter()
        .enumerate()
        .flat_map(|(j, &p)| (0..p).map(move |i| (i, j as u32)))
        .collect()
}

fn in_diagram(parts: &[u32], (i, j): (u32, u32)) -> bool {
    parts.get(j as usize).is_some_and(|&p| i < p)
}

/// Boxes whose right and upper neighbours both fall outside the diagram.
fn socle_oracle(parts: &[u32]) -> usize {
    boxes(parts)
        .into_iter()
        .filter(|&(i, j)| !in_diagram(parts, (i + 1, j)) && !in_diagram(parts, (i, j + 1)))
        .count()
}

/// Non-boxes whose left and lower neighbours are boxes or off the axes.
fn generator_oracle(parts: &[u32]) -> usize {
    let width = parts.first().copied().unwrap_or(0) + 1;
    let height = parts.len() as u32 + 1;
    let mut count = 0;
    for j in 0..height {
        for i in 0..width {
            let outside = !in_diagram(parts, (i, j));
            let left = i == 0 || in_diagram(parts, (i - 1, j));
            let below = j == 0 || in_diagram(parts, (i, j - 1));
            if outside && left && below {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn every_partition_up_to_ten_matches_the_oracles() {
    let mut seen = 0;
    for n in 1..=10 {
        for lambda in partitions_of(n) {
            let inv = partition_invariants(&lambda).unwrap();
            let c = corners(&lambda);
            assert_eq!(inv.colength, n as usize, "{lambda}");
            assert_eq!(inv.local_length, n as usize, "{lambda}");
            assert_eq!(inv.socle, socle_oracle(lambda.parts()), "{lambda}");
            assert_eq!(inv.e, generator_oracle(lambda.parts()), "{lambda}");
            assert_eq!((inv.e, inv.socle), (c.e(), c.b2()), "{lambda}");
            seen += 1;
        }
    }
    assert_eq!(seen, 138);
}

#[test]
fn standard_monomials_are_the_boxes() {
    for lambda in partitions_of(8) {
        let gb = GroebnerBasis::from_monomials(&monomial_ideal_of(&lambda), Field::Rationals, MonomialOrder::default());
        let mut got: Vec<(u32, u32)> = quotient_basis(&gb).unwrap().monomials().iter().map(|m| (m.x, m.y)).collect();
        let mut want = boxes(lambda.parts());
        got.sort();
        want.sort();
        assert_eq!(got, want, "{lambda}");
    }
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..7, 1..6).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monomial_ideals_are_fixed_by_buchberger(lambda in partition(), i in 0usize..6) {
        let ord = MonomialOrder::all()[i];
        let gens: Vec<Polynomial> = monomial_ideal_of(&lambda)
            .into_iter()
            .map(|m| Polynomial::monomial(m, Field::Rationals))
            .collect();
        let gb = buchberger(&gens, ord);
        prop_assert!(gb.certify());
        let mut lead = gb.leading_monomials();
        let mut want = monomial_ideal_of(&lambda);
        lead.sort();
        want.sort();
        prop_assert_eq!(lead, want);
    }

    #[test]
    fn monomial_ideals_match_oracles_over_fp(lambda in partition()) {
        let gb = GroebnerBasis::from_monomials(&monomial_ideal_of(&lambda), Field::Prime(7), MonomialOrder::default());
        let dec = local_components(&gb).unwrap();
        prop_assert!(dec.is_local_at_origin());
        prop_assert_eq!(dec.colength, lambda.size() as usize);
        let lq = dec.component_at_origin().unwrap();
        prop_assert_eq!(punctual::artinian::socle_dimension(lq), socle_oracle(lambda.parts()));
        prop_assert_eq!(lq.nilpotency_index(), max_box_degree(&lambda) + 1);
    }
}

fn max_box_degree(lambda: &Partition) -> u32 {
    lambda.boxes().iter().map(Monomial::degree).max().unwrap()
}
