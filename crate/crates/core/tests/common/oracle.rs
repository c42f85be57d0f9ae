//! Root systems generated in explicit coordinates, used as a brute-force
//! reference.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::Ratio;
use symindex::rootsys::{is_reflection_closed, Family, RootSystem};

type V = Vec<i64>;

/// Coordinates are doubled so that half-integers stay integral.
pub struct Model {
    roots: Vec<V>,
    simple: Vec<V>,
}

fn unit(n: usize, i: usize, c: i64) -> V {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

fn add(a: &V, b: &V) -> V {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(a: &V, c: i64) -> V {
    a.iter().map(|x| x * c).collect()
}

fn dot(a: &V, b: &V) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// ±e_i ± e_j, doubled.
fn pm_pairs(n: usize) -> Vec<V> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for (si, sj) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                out.push(add(&unit(n, i, si), &unit(n, j, sj)));
            }
        }
    }
    out
}

fn e_diff(n: usize, i: usize, j: usize) -> V {
    add(&unit(n, i, 2), &unit(n, j, -2))
}

fn e8() -> Model {
    let mut roots = pm_pairs(8);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            roots.push((0..8).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    let mut simple = vec![vec![1, -1, -1, -1, -1, -1, -1, 1], add(&unit(8, 0, 2), &unit(8, 1, 2))];
    for i in 0..6 {
        simple.push(e_diff(8, i + 1, i));
    }
    Model { roots, simple }
}

/// Parabolic subsystem of E8 on the first `k` simple roots.
fn e8_sub(k: usize) -> Model {
    let m = e8();
    let roots = m
        .roots
        .iter()
        .filter(|r| coefficients(&m.simple, r).iter().skip(k).all(|c| *c == 0))
        .cloned()
        .collect();
    Model {
        roots,
        simple: m.simple[..k].to_vec(),
    }
}

pub fn model(fam: Family, r: usize) -> Model {
    match fam {
        Family::A => {
            let n = r + 1;
            let roots = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| e_diff(n, i, j)))
                .collect();
            Model {
                roots,
                simple: (0..r).map(|i| e_diff(n, i, i + 1)).collect(),
            }
        }
        Family::B | Family::C | Family::BC | Family::D => {
            let mut roots = pm_pairs(r);
            let short = |c| (0..r).flat_map(move |i| [unit(r, i, c), unit(r, i, -c)]);
            match fam {
                Family::B => roots.extend(short(2)),
                Family::C => roots.extend(short(4)),
                Family::BC => {
                    roots.extend(short(2));
                    roots.extend(short(4));
                }
                _ => {}
            }
            let mut simple: Vec<V> = (0..r - 1).map(|i| e_diff(r, i, i + 1)).collect();
            simple.push(match fam {
                Family::B | Family::BC => unit(r, r - 1, 2),
                Family::C => unit(r, r - 1, 4),
                _ => add(&unit(r, r - 2, 2), &unit(r, r - 1, 2)),
            });
            Model { roots, simple }
        }
        Family::E8 => e8(),
        Family::E7 => e8_sub(7),
        Family::E6 => e8_sub(6),
        Family::F4 => {
            let mut roots = pm_pairs(4);
            for i in 0..4 {
                roots.push(unit(4, i, 2));
                roots.push(unit(4, i, -2));
            }
            for mask in 0u32..16 {
                roots.push((0..4).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect());
            }
            Model {
                roots,
                simple: vec![e_diff(4, 1, 2), e_diff(4, 2, 3), unit(4, 3, 2), vec![1, -1, -1, -1]],
            }
        }
        Family::G2 => {
            let mut roots = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        roots.push(e_diff(3, i, j));
                    }
                }
                let long: V = (0..3).map(|k| if k == i { 4 } else { -2 }).collect();
                roots.push(scale(&long, -1));
                roots.push(long);
            }
            Model {
                roots,
                simple: vec![e_diff(3, 0, 1), vec![-4, 2, 2]],
            }
        }
    }
}

/// Coordinates of `v` in the basis `simple`, by exact elimination.
fn coefficients(simple: &[V], v: &V) -> Vec<i64> {
    let (n, r) = (v.len(), simple.len());
    let mut m: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            let mut row: Vec<Ratio<i64>> = simple.iter().map(|s| Ratio::from(s[i])).collect();
            row.push(Ratio::from(v[i]));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..r {
        let Some(p) = (row..n).find(|&i| m[i][col] != Ratio::from(0)) else {
            continue;
        };
        m.swap(row, p);
        let piv = m[row][col];
        for c in 0..=r {
            m[row][c] /= piv;
        }
        for i in 0..n {
            if i != row && m[i][col] != Ratio::from(0) {
                let f = m[i][col];
                for c in 0..=r {
                    let d = m[row][c] * f;
                    m[i][c] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    assert_eq!(pivots.len(), r, "simple roots independent");
    assert!(m[row..].iter().all(|x| x[r] == Ratio::from(0)), "root in span");
    (0..r)
        .map(|c| {
            let x = m[c][r];
            assert!(x.is_integer(), "integral coefficients");
            x.to_integer()
        })
        .collect()
}

fn positive(m: &Model) -> Vec<(V, Vec<i64>)> {
    let out: Vec<_> = m
        .roots
        .iter()
        .map(|v| (v.clone(), coefficients(&m.simple, v)))
        .filter(|(_, c)| c.iter().all(|x| *x >= 0))
        .collect();
    for v in &m.roots {
        let c = coefficients(&m.simple, v);
        assert!(c.iter().all(|x| *x >= 0) || c.iter().all(|x| *x <= 0));
    }
    out
}

/// (long, short) after merging each α with 2α into one short root.
pub fn brute_counts(m: &Model) -> (u64, u64) {
    let pos = positive(m);
    let vecs: Vec<V> = pos.iter().map(|(v, _)| v.clone()).collect();
    let has = |v: &V| vecs.contains(v);
    let reduced: Vec<&V> = vecs.iter().filter(|v| !v.iter().all(|x| x % 2 == 0) || !has(&v.iter().map(|x| x / 2).collect())).collect();
    let nonreduced: Vec<&V> = reduced.iter().copied().filter(|v| has(&scale(v, 2))).collect();
    let rest: Vec<&V> = reduced.iter().copied().filter(|v| !has(&scale(v, 2))).collect();
    let lengths: BTreeSet<i64> = rest.iter().map(|v| dot(v, v)).collect();
    if !nonreduced.is_empty() {
        return (rest.len() as u64, nonreduced.len() as u64);
    }
    if lengths.len() <= 1 {
        return (rest.len() as u64, 0);
    }
    let max = *lengths.iter().max().unwrap();
    let long = rest.iter().filter(|v| dot(v, v) == max).count() as u64;
    (long, rest.len() as u64 - long)
}

pub fn brute_hyperplanes(m: &Model) -> u64 {
    let lines: BTreeSet<V> = m
        .roots
        .iter()
        .map(|v| {
            let g = v.iter().fold(0i64, |g, x| num_gcd(g, x.abs()));
            let mut d: V = v.iter().map(|x| x / g).collect();
            if d.iter().find(|x| **x != 0).unwrap() < &0 {
                d = scale(&d, -1);
            }
            d
        })
        .collect();
    lines.len() as u64
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

pub fn brute_highest(m: &Model) -> Vec<u32> {
    let pos = positive(m);
    let height = |c: &Vec<i64>| c.iter().sum::<i64>();
    let top = pos.iter().map(|(_, c)| height(c)).max().unwrap();
    let tops: Vec<_> = pos.iter().filter(|(_, c)| height(c) == top).collect();
    assert_eq!(tops.len(), 1, "unique highest root");
    tops[0].1.iter().map(|x| *x as u32).collect()
}

pub fn all_systems() -> Vec<RootSystem> {
    let mut out = Vec::new();
    for fam in Family::ALL {
        match fam.fixed_rank() {
            Some(r) => out.push(RootSystem::new(fam, r).unwrap()),
            None => {
                for r in 1..=8 {
                    if let Ok(rs) = RootSystem::new(fam, r) {
                        out.push(rs);
                    }
                }
            }
        }
    }
    out
}

/// Block sizes of every reflection-closed nonempty proper subset of the
/// positive roots of A_r.
pub fn brute_subsystems(r: usize) -> BTreeSet<Vec<u32>> {
    let n = r + 1;
    let pos: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let vec_of = |&(i, j): &(usize, usize)| {
        let mut v = vec![0i64; n];
        v[i] = 1;
        v[j] = -1;
        v
    };
    let mut out = BTreeSet::new();
    for mask in 1u64..(1 << pos.len()) - 1 {
        let chosen: Vec<(usize, usize)> = (0..pos.len()).filter(|b| mask >> b & 1 == 1).map(|b| pos[b]).collect();
        let roots: Vec<Vec<i64>> = chosen.iter().map(vec_of).collect();
        if !is_reflection_closed(&roots) {
            continue;
        }
        // connected components on the coordinate indices
        let mut comp: Vec<usize> = (0..n).collect();
        fn find(c: &mut Vec<usize>, x: usize) -> usize {
            if c[x] != x {
                let r = find(c, c[x]);
                c[x] = r;
            }
            c[x]
        }
        for &(i, j) in &chosen {
            let (a, b) = (find(&mut comp, i), find(&mut comp, j));
            comp[a] = b;
        }
        let mut sizes = vec![0u32; n];
        for x in 0..n {
            let root = find(&mut comp, x);
            sizes[root] += 1;
        }
        let mut blocks: Vec<u32> = sizes.into_iter().filter(|s| *s >= 2).collect();
        blocks.sort();
        let complete: u32 = blocks.iter().map(|s| s * (s - 1) / 2).sum();
        assert_eq!(complete as usize, chosen.len(), "closed sets are unions of complete blocks");
        out.insert(blocks);
    }
    out
}
