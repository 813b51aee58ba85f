mod common;

use proptest::prelude::*;

fn run(check: common::Check) -> Result<(), TestCaseError> {
    check.map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn groebner_is_idempotent(seed in any::<u64>()) {
        run(common::gb_idempotent(seed))?;
    }

    #[test]
    fn hilbert_degree_survives_linear_changes(seed in any::<u64>()) {
        run(common::hilbert_invariant(seed))?;
    }

    #[test]
    fn complete_intersections_have_product_degree(seed in any::<u64>()) {
        run(common::complete_intersection(seed))?;
    }

    #[test]
    fn euler_relation_holds(seed in any::<u64>()) {
        run(common::euler_relation(seed))?;
    }

    #[test]
    fn plucker_coordinates_conform(seed in any::<u64>()) {
        run(common::plucker_conformance(seed))?;
    }

    #[test]
    fn r_stats_follow_relabelling(seed in any::<u64>()) {
        run(common::r_stats_permutation(seed))?;
    }

    #[test]
    fn perturbed_fixtures_are_not_special(seed in any::<u64>()) {
        run(common::perturbation_is_not_special(seed))?;
    }
}
