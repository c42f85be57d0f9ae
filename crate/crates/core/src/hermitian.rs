//! The reflectivity estimate for maximal totally geodesic submanifolds of
//! small codimension in Hermitian symmetric spaces.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::catalog::{params, Catalog, CatalogError, SymmetricSpace};
use crate::index_core::{IndexError, IndexTable, Source};

#[derive(Debug, Error)]
pub enum HermitianError {
    #[error("{0} is not Hermitian")]
    NotHermitian(String),
    #[error("{0} has rank one")]
    RankOne(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Index(#[from] IndexError),
}

/// d²/4 + d < n - r, for even d. Odd d never qualifies: complex
/// submanifolds have even codimension.
pub fn estimate_inequality(d: u64, n: u64, r: u64) -> bool {
    d % 2 == 0 && n > r && d * d + 4 * d < 4 * (n - r)
}

/// The same estimate with rk Σ in place of rk M: d²/4 + d + rk Σ < n.
pub fn sharp_estimate_inequality(d: u64, n: u64, rank_sigma: u64) -> bool {
    d % 2 == 0 && d * d + 4 * d + 4 * rank_sigma < 4 * n
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HermitianVerdict {
    Conclusive,
    /// Codimensions the estimate cannot exclude, plus i_r.
    Inconclusive(BTreeSet<u64>),
}

impl fmt::Display for HermitianVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HermitianVerdict::Conclusive => f.write_str("conclusive"),
            HermitianVerdict::Inconclusive(s) => {
                let v: Vec<String> = s.iter().map(u64::to_string).collect();
                write!(f, "inconclusive {{{}}}", v.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HermitianCheck {
    pub space: SymmetricSpace,
    pub n: u64,
    pub r: u64,
    pub i_r: u64,
    pub tested_codims: Vec<u64>,
    pub failures: Vec<u64>,
    pub verdict: HermitianVerdict,
    /// Index data consulted when the estimate alone does not decide.
    pub recorded_index: Option<(u64, Source)>,
}

impl HermitianCheck {
    pub fn conclusive(&self) -> bool {
        self.verdict == HermitianVerdict::Conclusive
    }
}

/// Sweep every even d below i_r with 2d < n.
pub fn hermitian_family_check(space: &SymmetricSpace) -> Result<HermitianCheck, HermitianError> {
    if !space.flags.hermitian {
        return Err(HermitianError::NotHermitian(space.id.clone()));
    }
    if space.rank < 2 {
        return Err(HermitianError::RankOne(space.id.clone()));
    }
    let table = IndexTable::builtin();
    let (n, r) = (space.dim, space.rank as u64);
    let i_r = table.reflective_index(space)?;
    let tested_codims: Vec<u64> = (2..i_r).step_by(2).filter(|d| 2 * d < n).collect();
    let failures: Vec<u64> = tested_codims
        .iter()
        .copied()
        .filter(|&d| !estimate_inequality(d, n, r))
        .collect();
    let (verdict, recorded_index) = if failures.is_empty() {
        (HermitianVerdict::Conclusive, None)
    } else {
        let mut residual: BTreeSet<u64> = failures.iter().copied().collect();
        residual.insert(i_r);
        let rec = table.index(space)?;
        (HermitianVerdict::Inconclusive(residual), Some((rec.index, rec.source)))
    };
    Ok(HermitianCheck {
        space: space.clone(),
        n,
        r,
        i_r,
        tested_codims,
        failures,
        verdict,
        recorded_index,
    })
}

/// SO(2,2+k)/SO(2)SO(2+k): a maximal Σ with d < k+2 is complex, so d is
/// even and at least 2 = i_r.
pub fn so2_series_check(k: u64) -> Result<HermitianCheck, HermitianError> {
    let s = Catalog::builtin().instantiate("BDI", &params([("p", 2), ("q", 2 + k as i64)]))?;
    hermitian_family_check(&s)
}

/// One classical or exceptional family swept over its parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySweep {
    pub family: &'static str,
    pub checks: Vec<HermitianCheck>,
}

impl FamilySweep {
    pub fn conclusive(&self) -> bool {
        self.checks.iter().all(HermitianCheck::conclusive)
    }
}

/// Every Hermitian family up to the given rank; the SU(p,q) and SO(2,2+k)
/// series also run their second parameter up to `max_rank`.
pub fn hermitian_sweep(max_rank: u32) -> Result<Vec<FamilySweep>, HermitianError> {
    let cat = Catalog::builtin();
    let m = max_rank as i64;
    let run = |key: &str, ps: Vec<Vec<(&'static str, i64)>>| -> Result<Vec<HermitianCheck>, HermitianError> {
        ps.into_iter()
            .map(|p| {
                let s = cat.instantiate(key, &p.into_iter().map(|(k, v)| (k.to_string(), v)).collect())?;
                hermitian_family_check(&s)
            })
            .collect()
    };
    let one = |lo: i64| (lo..=m).map(|r| vec![("r", r)]).collect::<Vec<_>>();
    let mut su = run("AIIIe", one(3))?;
    su.extend(run(
        "AIII",
        (2..=m).flat_map(|p| (p + 1..=p + m).map(move |q| vec![("p", p), ("q", q)])).collect(),
    )?);
    su.sort_by_key(|c| (c.space.params.get("p").or(c.space.params.get("r")).copied(), c.space.dim));
    Ok(vec![
        FamilySweep {
            family: "Sp(r,R)/U(r)",
            checks: run("CI", one(3))?,
        },
        FamilySweep {
            family: "SU(r,r+k)/S(U(r)U(r+k))",
            checks: su,
        },
        FamilySweep {
            family: "SO*(4r)/U(2r)",
            checks: run("DIII", one(3))?,
        },
        FamilySweep {
            family: "SO*(4r+2)/U(2r+1)",
            checks: run("DIIIo", one(2))?,
        },
        FamilySweep {
            family: "SO(2,2+k)/SO(2)SO(2+k)",
            checks: (1..=max_rank as u64).map(so2_series_check).collect::<Result<_, _>>()?,
        },
        FamilySweep {
            family: "E6_-14/Spin10xU1",
            checks: vec![hermitian_family_check(&cat.lookup_space("E6_-14/Spin10xU1")?)?],
        },
        FamilySweep {
            family: "E7_-25/E6xU1",
            checks: vec![hermitian_family_check(&cat.lookup_space("E7_-25/E6xU1")?)?],
        },
    ])
}
