//! Compact Lie algebra descriptors: simple factors plus a torus.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cartan {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleFactor {
    pub cartan: Cartan,
    pub rank: u32,
}

impl SimpleFactor {
    pub fn new(cartan: Cartan, rank: u32) -> SimpleFactor {
        SimpleFactor { cartan, rank }
    }

    pub fn dim(&self) -> u64 {
        let n = self.rank as u64;
        match self.cartan {
            Cartan::A => n * (n + 2),
            Cartan::B | Cartan::C => n * (2 * n + 1),
            Cartan::D => n * (2 * n - 1),
            Cartan::E6 => 78,
            Cartan::E7 => 133,
            Cartan::E8 => 248,
            Cartan::F4 => 52,
            Cartan::G2 => 14,
        }
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cartan {
            Cartan::A => write!(f, "su{}", self.rank + 1),
            Cartan::B => write!(f, "so{}", 2 * self.rank + 1),
            Cartan::C => write!(f, "sp{}", self.rank),
            Cartan::D => write!(f, "so{}", 2 * self.rank),
            Cartan::E6 => f.write_str("e6"),
            Cartan::E7 => f.write_str("e7"),
            Cartan::E8 => f.write_str("e8"),
            Cartan::F4 => f.write_str("f4"),
            Cartan::G2 => f.write_str("g2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse Lie algebra term {0:?}")]
pub struct LieParseError(pub String);

/// A compact reductive Lie algebra, kept as sorted simple factors and a
/// torus rank.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct GroupDescriptor {
    pub simple_factors: Vec<SimpleFactor>,
    pub torus_rank: u32,
}

impl GroupDescriptor {
    pub fn trivial() -> GroupDescriptor {
        GroupDescriptor::default()
    }

    pub fn simple(f: SimpleFactor) -> GroupDescriptor {
        GroupDescriptor {
            simple_factors: vec![f],
            torus_rank: 0,
        }
    }

    pub fn dim(&self) -> u64 {
        self.simple_factors.iter().map(SimpleFactor::dim).sum::<u64>() + self.torus_rank as u64
    }

    pub fn rank(&self) -> u32 {
        self.simple_factors.iter().map(|f| f.rank).sum::<u32>() + self.torus_rank
    }

    /// Direct sum.
    pub fn sum(&self, other: &GroupDescriptor) -> GroupDescriptor {
        let mut simple_factors = self.simple_factors.clone();
        simple_factors.extend(other.simple_factors.iter().copied());
        simple_factors.sort();
        GroupDescriptor {
            simple_factors,
            torus_rank: self.torus_rank + other.torus_rank,
        }
    }

    pub fn is_sp(&self, r: u32) -> bool {
        self.torus_rank == 0 && self.simple_factors == [SimpleFactor::new(Cartan::C, r)]
    }

    /// Parse `so(9)+u1`, `su6+sp1`, `e6 + u(1)` and similar.
    pub fn parse(s: &str) -> Result<GroupDescriptor, LieParseError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s == "0" {
            return Ok(GroupDescriptor::trivial());
        }
        s.split('+')
            .map(parse_term)
            .try_fold(GroupDescriptor::trivial(), |acc, t| Ok(acc.sum(&t?)))
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.simple_factors.iter().map(|s| s.to_string()).collect();
        match self.torus_rank {
            0 => {}
            1 => parts.push("u1".into()),
            t => parts.push(format!("{t}u1")),
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

fn parse_term(t: &str) -> Result<GroupDescriptor, LieParseError> {
    let err = || LieParseError(t.to_string());
    let fixed = match t {
        "e6" => Some(Cartan::E6),
        "e7" => Some(Cartan::E7),
        "e8" => Some(Cartan::E8),
        "f4" => Some(Cartan::F4),
        "g2" => Some(Cartan::G2),
        _ => None,
    };
    if let Some(c) = fixed {
        return Ok(GroupDescriptor::simple(SimpleFactor::new(c, fixed_rank(c))));
    }
    let split = t.find(|c: char| c.is_ascii_digit() || c == '(').ok_or_else(err)?;
    let (head, num) = t.split_at(split);
    let n: u32 = num
        .trim_start_matches('(')
        .trim_end_matches(')')
        .parse()
        .map_err(|_| err())?;
    let torus = |k| GroupDescriptor {
        simple_factors: vec![],
        torus_rank: k,
    };
    Ok(match head {
        "so" | "spin" => so(n),
        "su" => su(n),
        "u" => su(n).sum(&torus(1)),
        "sp" => {
            if n == 0 {
                return Err(err());
            }
            match n {
                1 => GroupDescriptor::simple(SimpleFactor::new(Cartan::A, 1)),
                2 => GroupDescriptor::simple(SimpleFactor::new(Cartan::B, 2)),
                _ => GroupDescriptor::simple(SimpleFactor::new(Cartan::C, n)),
            }
        }
        _ => return Err(err()),
    })
}

fn fixed_rank(c: Cartan) -> u32 {
    match c {
        Cartan::E6 => 6,
        Cartan::E7 => 7,
        Cartan::E8 => 8,
        Cartan::F4 => 4,
        Cartan::G2 => 2,
        _ => unreachable!("classical families have variable rank"),
    }
}

fn su(n: u32) -> GroupDescriptor {
    if n <= 1 {
        GroupDescriptor::trivial()
    } else {
        GroupDescriptor::simple(SimpleFactor::new(Cartan::A, n - 1))
    }
}

fn so(n: u32) -> GroupDescriptor {
    let a1 = SimpleFactor::new(Cartan::A, 1);
    match n {
        0 | 1 => GroupDescriptor::trivial(),
        2 => GroupDescriptor {
            simple_factors: vec![],
            torus_rank: 1,
        },
        3 => GroupDescriptor::simple(a1),
        4 => GroupDescriptor {
            simple_factors: vec![a1, a1],
            torus_rank: 0,
        },
        5 => GroupDescriptor::simple(SimpleFactor::new(Cartan::B, 2)),
        6 => GroupDescriptor::simple(SimpleFactor::new(Cartan::A, 3)),
        n if n % 2 == 1 => GroupDescriptor::simple(SimpleFactor::new(Cartan::B, n / 2)),
        n => GroupDescriptor::simple(SimpleFactor::new(Cartan::D, n / 2)),
    }
}
