//! Candidates singled out in the published case analysis of the base
//! cases, with the kind of bound used against each.

use symindex::elimination::BoundClass;

use BoundClass::{Dimension as D, Rank as R};

/// Candidates named in the case analysis for each base case, with the kind
/// of bound used against them.
pub fn expected_named(r: u32) -> Vec<(&'static str, BoundClass)> {
    match r {
        3 => vec![
            ("S^25", R),
            ("S^26", R),
            ("S^27", R),
            ("CP^13", R),
            ("SO15/SO2xSO13", R),
            ("E6/F4", R),
            ("SO12/SO3xSO9", R),
        ],
        4 => vec![
            ("S^49", R),
            ("S^50", R),
            ("S^51", R),
            ("S^52", R),
            ("CP^25", R),
            ("CP^26", R),
            ("HP^13", R),
            ("SO27/SO2xSO25", R),
            ("SO28/SO2xSO26", R),
            ("SU15/S(U2xU13)", R),
            ("SO20/SO3xSO17", R),
            ("SO17/SO4xSO13", R),
        ],
        5 => vec![
            ("S^81", R),
            ("S^82", R),
            ("S^83", R),
            ("S^84", R),
            ("CP^41", R),
            ("CP^42", R),
            ("HP^21", R),
            ("SO43/SO2xSO41", R),
            ("SO44/SO2xSO42", R),
            ("SU23/S(U2xU21)", R),
            ("SO30/SO3xSO27", R),
            ("SO31/SO3xSO28", R),
            ("SU17/S(U3xU14)", R),
            ("Sp10/Sp3xSp7", R),
            ("SO25/SO4xSO21", R),
            ("Sp8/Sp3xSp5 x SO13/SO2xSO11", R),
            ("Sp8/Sp3xSp5 x SO14/SO2xSO12", R),
            ("Sp8/Sp3xSp5 x SU8/S(U2xU6)", R),
            ("Sp8/Sp3xSp5 x Sp5/Sp2xSp3", R),
        ],
        _ => unreachable!(),
    }
}

/// Largest factors of two-factor products, with the bound class used for
/// every product built on them.
pub fn expected_leading(r: u32) -> Vec<(String, BoundClass)> {
    let mut v = Vec::new();
    match r {
        4 => {
            v.extend((13..=23).map(|k| (format!("SO{}/SO2xSO{k}", k + 2), R)));
            v.extend((7..=11).map(|k| (format!("SU{}/S(U2xU{k})", k + 2), R)));
            v.extend((4..=5).map(|k| (format!("Sp{}/Sp2xSp{k}", k + 2), R)));
            v.push(("E6/F4".into(), D));
            v.push(("E6/Spin10xU1".into(), R));
        }
        5 => {
            v.extend((21..=39).map(|k| (format!("SO{}/SO2xSO{k}", k + 2), R)));
            v.extend((11..=19).map(|k| (format!("SU{}/S(U2xU{k})", k + 2), R)));
            v.extend((6..=9).map(|k| (format!("Sp{}/Sp2xSp{k}", k + 2), R)));
            v.extend((14..=26).map(|k| (format!("SO{}/SO3xSO{k}", k + 3), R)));
            v.extend((7..=13).map(|k| (format!("SU{}/S(U3xU{k})", k + 3), R)));
            v.extend((4..=6).map(|k| (format!("Sp{}/Sp3xSp{k}", k + 3), R)));
            v.push(("SO14/U7".into(), R));
            v.push(("E7/E6xU1".into(), R));
        }
        _ => {}
    }
    v
}
