mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use symindex::catalog::{params, Catalog, Filter, Kind};
use common::named::{expected_leading, expected_named};
use symindex::elimination::*;

fn report(r: u32) -> &'static EliminationReport {
    static R: OnceLock<Vec<EliminationReport>> = OnceLock::new();
    &R.get_or_init(|| (3..=5).map(|r| eliminate_sp(r, Options::default()).unwrap()).collect())[(r - 3) as usize]
}

#[test]
fn base_cases_have_no_survivors() {
    for r in 3..=5 {
        let rep = report(r);
        assert!(rep.survivors.is_empty(), "r = {r}: {:?}", rep.survivors);
        assert_eq!(rep.conclusion, Conclusion::Index(4 * r as u64));
        assert!(rep.cases.iter().all(|c| c.violation.is_some()));
        assert!(rep.verified());
    }
}

#[test]
fn windows_and_assumptions() {
    assert_eq!(report(3).codim_window, 9..=11);
    assert_eq!(report(3).dim_window(), 25..=27);
    assert_eq!(report(4).dim_window(), 49..=52);
    assert_eq!(report(5).dim_window(), 81..=84);
    for r in 3..=5 {
        let a = &report(r).assumptions;
        for needed in [Assumption::Semisimple, Assumption::RankOneFactors, Assumption::CodimensionGap] {
            assert!(a.contains(&needed));
        }
    }
}

#[test]
fn named_candidates_killed_by_matching_class() {
    for r in 3..=5 {
        let rep = report(r);
        for (id, class) in expected_named(r) {
            let case = rep.case(id).unwrap_or_else(|| panic!("r = {r}: {id} missing"));
            let v = case.violation.as_ref().unwrap();
            assert_eq!(v.bound.class(), class, "r = {r}: {id}: {}", v.detail);
        }
        for (lead, class) in expected_leading(r) {
            let products: Vec<&Case> = rep
                .cases
                .iter()
                .filter(|c| c.candidate.factors.len() == 2 && c.candidate.factors[0].id == lead)
                .collect();
            assert!(!products.is_empty(), "r = {r}: no product led by {lead}");
            for c in products {
                let v = c.violation.as_ref().unwrap();
                assert_eq!(v.bound.class(), class, "r = {r}: {}: {}", c.candidate, v.detail);
            }
        }
        // all sphere pairs fall to the isotropy dimension
        for c in rep.cases.iter().filter(|c| c.candidate.admission == Admission::SpherePair) {
            assert_eq!(c.violation.as_ref().unwrap().bound, Bound::TotalDim);
        }
    }
}

#[test]
fn specific_kills() {
    let by = |r, id: &str| report(r).case(id).unwrap().violation.clone().unwrap();
    assert_eq!(by(3, "E6/F4").bound, Bound::FactorRank);
    assert!(by(3, "E6/F4").detail.contains("f4"));
    assert_eq!(by(3, "SU8/Sp4").bound, Bound::FactorRank);
    assert_eq!(by(4, "F4").bound, Bound::FactorDim);
    assert_eq!(by(5, "SO25/SO4xSO21").bound, Bound::FactorRank);
    let v = by(4, "E6/F4 x SO14/SO2xSO12");
    assert_eq!(v.bound, Bound::FactorDim);
    assert!(v.detail.contains("52 > 24"), "{}", v.detail);
    for s2 in ["SO13/SO2xSO11", "SO14/SO2xSO12", "SU8/S(U2xU6)", "Sp5/Sp2xSp3"] {
        let id = format!("Sp8/Sp3xSp5 x {s2}");
        assert_eq!(by(5, &id).bound, Bound::TotalRank);
    }
}

#[test]
fn case_lists() {
    let ids = |r: u32, rank: u32| -> Vec<String> {
        report(r)
            .cases
            .iter()
            .filter(|c| c.candidate.rank == rank && c.candidate.factors.len() == 1)
            .map(|c| c.candidate.id())
            .collect()
    };
    assert_eq!(ids(3, 1), ["S^25", "CP^13", "S^26", "S^27"]);
    assert_eq!(ids(3, 2), ["E6/F4", "SO15/SO2xSO13"]);
    assert_eq!(ids(3, 3), ["SO12/SO3xSO9", "SU8/Sp4"]);
    let mut r4 = ids(4, 1);
    r4.sort();
    assert_eq!(r4, ["CP^25", "CP^26", "HP^13", "S^49", "S^50", "S^51", "S^52"]);
    assert_eq!(ids(4, 3), ["SO20/SO3xSO17"]);
    assert_eq!(ids(4, 4), ["F4", "SO17/SO4xSO13"]);
    let mut r5 = ids(5, 3);
    r5.sort();
    assert_eq!(r5, ["SO30/SO3xSO27", "SO31/SO3xSO28", "SU17/S(U3xU14)", "Sp10/Sp3xSp7"]);
    assert_eq!(ids(5, 4), ["SO25/SO4xSO21"]);
    assert!(ids(5, 5).is_empty());
}

#[test]
fn enumerate_examples() {
    let cat = Catalog::builtin();
    let sp6 = cat.instantiate_kind("CIIe", &params([("r", 3)]), Kind::Compact).unwrap();
    let rank1: Vec<String> = enumerate_candidates(&sp6, 9..=11)
        .unwrap()
        .into_iter()
        .filter(|c| c.rank == 1)
        .map(|c| c.id())
        .collect();
    assert_eq!(rank1, ["S^25", "CP^13", "S^26", "S^27"]);
    assert!(enumerate_candidates(&sp6, 40..=50).unwrap().is_empty());
    assert!(enumerate_candidates(&sp6, 11..=9).unwrap().is_empty());
    let big = cat.instantiate_kind("CIIe", &params([("r", 9)]), Kind::Compact).unwrap();
    assert!(enumerate_candidates(&big, 10..=20).is_err());
}

#[test]
fn order_is_stable() {
    for r in 3..=5 {
        let c = &report(r).cases;
        assert!(c.windows(2).all(|w| {
            let (a, b) = (&w[0].candidate, &w[1].candidate);
            (a.rank, a.dim, a.id()) < (b.rank, b.dim, b.id())
        }));
        assert_eq!(eliminate_sp(r, Options::default()).unwrap().to_string(), report(r).to_string());
    }
}

#[test]
fn without_external_assumptions() {
    let rep = eliminate_sp(3, Options { external_assumptions: false }).unwrap();
    assert_eq!(rep.codim_window, 8..=11);
    assert_eq!(rep.dim_window(), 25..=28);
    assert!(!rep.assumptions.contains(&Assumption::CodimensionGap));
    for r in 3..=5 {
        assert!(eliminate_sp(r, Options { external_assumptions: false }).unwrap().verified());
    }
}

#[test]
fn unsupported_targets() {
    assert!(eliminate_sp(2, Options::default()).is_err());
    assert!(eliminate_sp(6, Options::default()).is_err());
    let other = Catalog::builtin().lookup_space("SU8/Sp4").unwrap();
    assert!(run_elimination(&other, Options::default()).is_err());
}

#[test]
fn isotropy_bound_examples() {
    assert_eq!(isotropy_bounds(4).factor_dim, 24);
    assert_eq!(isotropy_bounds(5).total_rank, 10);
    assert_eq!(isotropy_bounds(5).total_dim_below, 110);
    let f4 = Catalog::builtin().lookup_space("E6/F4").unwrap().isotropy;
    assert!(isotropy_bounds(3).violations(&f4).contains(&Bound::FactorRank));
    assert_eq!(codim_gap_bound(36, 3), 9);
    assert_eq!(codim_gap_bound(64, 4), 12);
    assert_eq!(codim_gap_bound(100, 5), 15);
    for r in 1..20 {
        assert_eq!(codim_gap_bound(r + 1, r), 1);
    }
}

#[test]
fn induction() {
    for r in 3..=50 {
        let p = inductive_sp_index(r).unwrap();
        assert_eq!(p.value, 4 * r as u64);
    }
    let p = inductive_sp_index(20).unwrap();
    assert_eq!(p.trace.len(), 6);
    assert_eq!(p.trace[0], InductionStep::Base { r: 5, value: 20, cases: report(5).cases.len() });
    assert!(matches!(inductive_sp_index(6).unwrap().trace[..], [InductionStep::Base { r: 3, .. }, InductionStep::Sandwich { r: 6, from: 3, reflective: 24, lower: 24 }]));
    assert!(inductive_sp_index(2).is_err());
    assert_eq!(product_codim_bound(16, 12), 28);
    assert_eq!(product_codim_bound(1, 1), 2);
}

#[test]
fn quaternionic_grassmannians() {
    for r in 3..=20 {
        for k in 0..=10 {
            let red = quaternionic_grassmannian_index(r, k).unwrap();
            assert_eq!(red.value(), Some(4 * r as u64), "r = {r}, k = {k}");
        }
    }
}

#[test]
fn lagrangian() {
    for r in 3..=50 {
        let rep = lagrangian_checks(r).unwrap();
        assert!(rep.passed(), "{rep}");
    }
    let c = |r, l: &str| lagrangian_checks(r).unwrap().check(l).unwrap().clone();
    assert_eq!((c(3, "small multiplicity: codim").lhs, c(3, "small multiplicity: codim").rhs), (12, 12));
    assert_eq!(c(3, "small multiplicity: codim vs 4r").rhs, 12);
    assert_eq!(c(5, "E6/F4: codim").lhs, 31);
    assert_eq!(c(6, "E6/F4: codim").lhs, 49);
    assert_eq!(c(4, "E6/F4: codim").lhs, 18);
    assert_eq!(c(7, "type A: dim bound").lhs, 6 * 15);
    assert!(lagrangian_checks(2).is_err());
}

fn compact_pool() -> &'static Vec<symindex::catalog::SymmetricSpace> {
    static P: OnceLock<Vec<symindex::catalog::SymmetricSpace>> = OnceLock::new();
    P.get_or_init(|| Catalog::builtin().enumerate(&Filter::dims(0, 120).compact()).unwrap())
}

proptest! {
    #[test]
    fn candidate_sums(idx in proptest::collection::vec(0usize..1000, 1..5)) {
        let pool = compact_pool();
        let factors: Vec<_> = idx.iter().map(|i| pool[i % pool.len()].clone()).collect();
        let c = CandidateSubmanifold::new(factors.clone(), Admission::HigherRank);
        prop_assert!(c.is_consistent());
        prop_assert_eq!(c.dim, factors.iter().map(|s| s.dim).sum::<u64>());
        prop_assert_eq!(c.rank, factors.iter().map(|s| s.rank).sum::<u32>());
        prop_assert_eq!(c.isotropy.dim(), factors.iter().map(|s| s.isotropy.dim()).sum::<u64>());
        prop_assert!(c.factors.windows(2).all(|w| w[0].dim >= w[1].dim));
    }

    #[test]
    fn sphere_pair_isotropy(a in 2u64..60, b in 2u64..60) {
        let cat = Catalog::builtin();
        let s = |n: u64| cat.instantiate_kind("S", &params([("n", n as i64)]), Kind::Compact).unwrap();
        let c = CandidateSubmanifold::new(vec![s(a), s(b)], Admission::SpherePair);
        prop_assert!(c.is_sphere_pair());
        prop_assert_eq!(c.isotropy.dim(), (a * (a - 1) + b * (b - 1)) / 2);
    }
}
