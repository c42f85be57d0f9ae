//! Counting data for the irreducible (possibly non-reduced) root systems and
//! the type-A root subsystems.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    BC,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::BC,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
    ];

    /// The rank forced by an exceptional family.
    pub fn fixed_rank(self) -> Option<u32> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::BC => "BC",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSysError {
    #[error("invalid root system {family:?} of rank {rank}")]
    InvalidRank { family: Family, rank: u32 },
    #[error("D2 is reducible and has no unique highest root")]
    Reducible,
    #[error("cannot parse root system {0:?}")]
    Parse(String),
    #[error("block boundaries {0:?} do not describe a type A subsystem")]
    BadBlocks(Vec<u32>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootSystem {
    family: Family,
    rank: u32,
}

impl RootSystem {
    pub fn new(family: Family, rank: u32) -> Result<RootSystem, RootSysError> {
        let ok = match family.fixed_rank() {
            Some(r) => rank == r,
            None if family == Family::D => rank >= 2,
            None => rank >= 1,
        };
        if ok {
            Ok(RootSystem { family, rank })
        } else {
            Err(RootSysError::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// (long, short) positive roots. A pair (α, 2α) counts once, as short.
    /// With a single root length everything is long.
    pub fn positive_root_counts(&self) -> (u64, u64) {
        let r = self.rank as u64;
        match (self.family, r) {
            (Family::A, _) => (r * (r + 1) / 2, 0),
            (Family::B | Family::C, 1) => (1, 0),
            (Family::B, _) => (r * (r - 1), r),
            (Family::C, _) => (r, r * (r - 1)),
            (Family::D, _) => (r * (r - 1), 0),
            (Family::BC, _) => (r * (r - 1), r),
            (Family::E6, _) => (36, 0),
            (Family::E7, _) => (63, 0),
            (Family::E8, _) => (120, 0),
            (Family::F4, _) => (12, 12),
            (Family::G2, _) => (3, 3),
        }
    }

    pub fn positive_root_total(&self) -> u64 {
        let (l, s) = self.positive_root_counts();
        l + s
    }

    /// Number of reflection hyperplanes of the Weyl group. α and 2α share one.
    pub fn reflection_hyperplane_count(&self) -> u64 {
        self.positive_root_total()
    }

    /// Highest root in the basis of simple roots (Bourbaki numbering). For
    /// BC the highest root is 2e₁ in the basis of the non-reduced system.
    pub fn highest_root_coefficients(&self) -> Result<Vec<u32>, RootSysError> {
        let r = self.rank as usize;
        Ok(match (self.family, r) {
            (Family::A, _) | (Family::B | Family::C, 1) | (Family::D, 3) => vec![1; r],
            (Family::D, 2) => return Err(RootSysError::Reducible),
            (Family::BC, _) => vec![2; r],
            (Family::B, _) => std::iter::once(1).chain(std::iter::repeat(2).take(r - 1)).collect(),
            (Family::C, _) => std::iter::repeat(2).take(r - 1).chain(std::iter::once(1)).collect(),
            (Family::D, _) => {
                let mut v = vec![2; r];
                v[0] = 1;
                v[r - 2] = 1;
                v[r - 1] = 1;
                v
            }
            (Family::E6, _) => vec![1, 2, 2, 3, 2, 1],
            (Family::E7, _) => vec![2, 2, 3, 4, 3, 2, 1],
            (Family::E8, _) => vec![2, 3, 4, 6, 5, 4, 3, 2],
            (Family::F4, _) => vec![2, 3, 4, 2],
            (Family::G2, _) => vec![3, 2],
        })
    }

    pub fn has_coefficient_exceeding_one(&self) -> Result<bool, RootSysError> {
        Ok(self.highest_root_coefficients()?.iter().any(|&d| d > 1))
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family.fixed_rank() {
            Some(_) => f.write_str(self.family.name()),
            None => write!(f, "{}{}", self.family.name(), self.rank),
        }
    }
}

impl FromStr for RootSystem {
    type Err = RootSysError;

    /// Accepts `A3`, `A(3)`, `BC1`, `E6`.
    fn from_str(s: &str) -> Result<RootSystem, RootSysError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace() && *c != '(' && *c != ')').collect();
        let err = || RootSysError::Parse(s.clone());
        for fam in Family::ALL {
            if let Some(r) = fam.fixed_rank() {
                if s == fam.name() {
                    return RootSystem::new(fam, r);
                }
            }
        }
        // BC before B and C
        for fam in [Family::BC, Family::A, Family::B, Family::C, Family::D] {
            if let Some(rest) = s.strip_prefix(fam.name()) {
                return RootSystem::new(fam, rest.parse().map_err(|_| err())?);
            }
        }
        Err(err())
    }
}

/// A type-A subsystem of A_r, given by block boundaries
/// `0 = d₀ < d₁ < … < d_k ≤ r+1` with every block of length at least 2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeASubsystem {
    ambient_rank: u32,
    boundaries: Vec<u32>,
}

impl TypeASubsystem {
    pub fn new(ambient_rank: u32, boundaries: Vec<u32>) -> Result<TypeASubsystem, RootSysError> {
        let ok = boundaries.first() == Some(&0)
            && boundaries.len() >= 2
            && boundaries.windows(2).all(|w| w[1] >= w[0] + 2)
            && *boundaries.last().unwrap() <= ambient_rank + 1;
        if ok {
            Ok(TypeASubsystem {
                ambient_rank,
                boundaries,
            })
        } else {
            Err(RootSysError::BadBlocks(boundaries))
        }
    }

    pub fn from_block_sizes(ambient_rank: u32, sizes: &[u32]) -> Result<TypeASubsystem, RootSysError> {
        let boundaries = std::iter::once(0)
            .chain(sizes.iter().scan(0, |acc, s| {
                *acc += s;
                Some(*acc)
            }))
            .collect();
        TypeASubsystem::new(ambient_rank, boundaries)
    }

    pub fn ambient_rank(&self) -> u32 {
        self.ambient_rank
    }

    pub fn boundaries(&self) -> &[u32] {
        &self.boundaries
    }

    pub fn block_sizes(&self) -> Vec<u32> {
        self.boundaries.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Ranks of the A-type summands.
    pub fn component_ranks(&self) -> Vec<u32> {
        self.block_sizes().iter().map(|s| s - 1).collect()
    }

    pub fn hyperplane_count(&self) -> u64 {
        self.block_sizes().iter().map(|&s| (s as u64) * (s as u64 - 1) / 2).sum()
    }

    /// Positive roots e_i − e_j (i < j in a common block) as vectors in ℤ^{r+1}.
    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let n = self.ambient_rank as usize + 1;
        let mut out = Vec::new();
        for w in self.boundaries.windows(2) {
            for i in w[0] as usize..w[1] as usize {
                for j in i + 1..w[1] as usize {
                    let mut v = vec![0; n];
                    v[i] = 1;
                    v[j] = -1;
                    out.push(v);
                }
            }
        }
        out
    }
}

/// Every nonempty proper type-A subsystem of A_r up to relabelling, as
/// block-size multisets sorted ascending; ordered by total size then
/// lexicographically.
pub fn enumerate_type_a_subsystems(r: u32) -> Vec<TypeASubsystem> {
    fn go(min: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for s in min..=left {
            cur.push(s);
            go(s, left - s, cur, out);
            cur.pop();
        }
    }
    let mut sizes = Vec::new();
    go(2, r + 1, &mut Vec::new(), &mut sizes);
    sizes.retain(|s| s.as_slice() != [r + 1]);
    sizes.sort_by_key(|s| (s.iter().sum::<u32>(), s.clone()));
    sizes
        .iter()
        .map(|s| TypeASubsystem::from_block_sizes(r, s).expect("valid partition"))
        .collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// s_α(β) for integer vectors with 2(α,β)/(α,α) integral.
fn reflect(alpha: &[i64], beta: &[i64]) -> Option<Vec<i64>> {
    let num = 2 * dot(alpha, beta);
    let den = dot(alpha, alpha);
    if den == 0 || num % den != 0 {
        return None;
    }
    let c = num / den;
    Some(beta.iter().zip(alpha).map(|(b, a)| b - c * a).collect())
}

/// Whether the set ±S is stable under the reflections in its own elements.
pub fn is_reflection_closed(roots: &[Vec<i64>]) -> bool {
    let neg = |v: &Vec<i64>| v.iter().map(|x| -x).collect::<Vec<_>>();
    let contains = |v: &Vec<i64>| roots.iter().any(|r| r == v || neg(r) == *v);
    roots.iter().all(|a| {
        roots
            .iter()
            .all(|b| reflect(a, b).is_some_and(|s| contains(&s)))
    })
}

pub fn verify_subsystem_closed(sub: &TypeASubsystem) -> bool {
    is_reflection_closed(&sub.positive_roots())
}
