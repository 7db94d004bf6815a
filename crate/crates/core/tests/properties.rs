//! Fuzzed invariants over seeded random instances.

use proptest::prelude::*;

use pancyc::construct::{
    classify_outside, find_three_cycle, try_insertion, two_pancyclic_arcs, OutsideClassification,
};
use pancyc::generate::{random_mpt, random_strong_mpt, GenSpec};
use pancyc::oracle::cycle_lengths_through_arc;
use pancyc::tournament::MultipartiteTournament;
use pancyc::witness::{certificate_to_json, verify_certificate, CycleChain};

fn any_parts(max_c: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=3usize, 1..=max_c)
}

fn strong_parts() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=3usize, 3..=6)
}

proptest! {
    #[test]
    fn every_cross_pair_is_oriented_exactly_once(parts in any_parts(6), seed: u64) {
        let d = random_mpt(&GenSpec::new(parts, seed));
        let n = d.vertex_count();
        for x in 0..n {
            for y in x + 1..n {
                let forward = d.dominates(x, y);
                let backward = d.dominates(y, x);
                if d.part_of(x) == d.part_of(y) {
                    prop_assert!(!forward && !backward);
                } else {
                    prop_assert!(forward ^ backward);
                }
            }
        }
    }

    #[test]
    fn strongness_is_reversal_invariant(parts in any_parts(6), seed: u64) {
        let d = random_mpt(&GenSpec::new(parts, seed));
        prop_assert_eq!(d.is_strong(), d.reverse().is_strong());
    }

    #[test]
    fn parse_round_trips_serialization(parts in any_parts(6), seed: u64) {
        let d = random_mpt(&GenSpec::new(parts, seed));
        let text = d.to_string();
        let back: MultipartiteTournament = text.parse().unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn certificates_exist_and_verify_on_strong_instances(parts in strong_parts(), seed: u64) {
        let d = random_strong_mpt(&GenSpec::new(parts, seed)).unwrap();
        let cert = two_pancyclic_arcs(&d).unwrap();
        prop_assert!(verify_certificate(&d, &cert).is_ok());
        prop_assert_ne!(cert.chains[0].arc, cert.chains[1].arc);
        // identical inputs, identical bytes
        let again = two_pancyclic_arcs(&d).unwrap();
        prop_assert_eq!(certificate_to_json(&cert), certificate_to_json(&again));
    }

    #[test]
    fn certificate_arcs_have_full_oracle_spectra(parts in strong_parts(), seed: u64) {
        let d = random_strong_mpt(&GenSpec::new(parts, seed)).unwrap();
        let c = d.part_count();
        let cert = two_pancyclic_arcs(&d).unwrap();
        for chain in &cert.chains {
            let lengths = cycle_lengths_through_arc(&d, chain.arc, c).unwrap();
            for m in 3..=c {
                prop_assert!(lengths.contains(&m), "arc {} misses length {m}", chain.arc);
            }
        }
    }

    #[test]
    fn insertion_extends_by_one_and_keeps_the_arc(parts in strong_parts(), seed: u64) {
        let d = random_strong_mpt(&GenSpec::new(parts, seed)).unwrap();
        let base = find_three_cycle(&d).unwrap();
        let arc = pancyc::Arc::new(base.vertices[0], base.vertices[1]);
        let chain = CycleChain::new(arc, vec![base]);
        if let Some(extended) = try_insertion(&d, &chain) {
            prop_assert_eq!(extended.arc, arc);
            prop_assert_eq!(extended.max_len(), 4);
            let small = &extended.cycles[0];
            let big = extended.top();
            prop_assert!(small.vertices.iter().all(|&v| big.contains(v)));
            prop_assert!(big.has_consecutive_arc(arc));
        }
    }

    #[test]
    fn partitioned_classification_is_uniform(parts in strong_parts(), seed: u64) {
        let d = random_strong_mpt(&GenSpec::new(parts, seed)).unwrap();
        let cycle = find_three_cycle(&d).unwrap();
        if let OutsideClassification::Partitioned(part) = classify_outside(&d, &cycle) {
            for &w in &part.s1 {
                prop_assert!(cycle.vertices.iter().all(|&x| d.dominates(x, w)));
            }
            for &w in &part.s2 {
                prop_assert!(cycle.vertices.iter().all(|&x| d.dominates(w, x)));
            }
            let outside = d.outside_part_vertices(&cycle).unwrap();
            prop_assert_eq!(outside.len(), part.s1.len() + part.s2.len());
        }
    }
}
