//! Expected rows of the index table, written directly from the closed
//! formulas and instantiated at the smallest admissible parameters plus
//! larger samples.
#![allow(dead_code)]

pub mod named;
pub mod oracle;

pub struct Expected {
    pub space: String,
    pub witnesses: Vec<String>,
    pub dim: u64,
    pub index: u64,
}

fn row(space: String, witnesses: &[String], dim: u64, index: u64) -> Expected {
    Expected {
        space,
        witnesses: witnesses.to_vec(),
        dim,
        index,
    }
}

fn one(space: &str, witness: &str, dim: u64, index: u64) -> Expected {
    row(space.into(), &[witness.into()], dim, index)
}

pub fn expected_rows() -> Vec<Expected> {
    let mut t = Vec::new();
    for k in 1..=3u64 {
        t.push(row(format!("SO(1,{})/SO{}", k + 1, k + 1), &[format!("SO(1,{k})/SO{k}")], k + 1, 1));
    }
    for r in 2..=4u64 {
        t.push(row(
            format!("SL{}(R)/SO{}", r + 1, r + 1),
            &[format!("R x SL{r}(R)/SO{r}")],
            r * (r + 3) / 2,
            r,
        ));
    }
    t.push(one("SL3(C)/SU3", "SL3(R)/SO3", 8, 3));
    t.push(one("SL4(C)/SU4", "Sp2(C)/Sp2", 15, 5));
    for r in 4..=6u64 {
        t.push(row(
            format!("SL{}(C)/SU{}", r + 1, r + 1),
            &[format!("R x SL{r}(C)/SU{r}")],
            r * (r + 2),
            2 * r,
        ));
    }
    t.push(one("SU*6/Sp3", "SL3(C)/SU3", 14, 6));
    t.push(one("SU*8/Sp4", "Sp(2,2)/Sp2xSp2", 27, 11));
    for r in 4..=6u64 {
        t.push(row(
            format!("SU*{}/Sp{}", 2 * r + 2, r + 1),
            &[format!("R x SU*{}/Sp{r}", 2 * r)],
            r * (2 * r + 3),
            4 * r,
        ));
    }
    t.push(one("E6_-26/F4", "F4_-20/Spin9", 26, 10));
    for (r, k) in [(2u64, 1u64), (2, 2), (2, 3), (3, 1), (4, 3)] {
        t.push(row(
            format!("SO({r},{})/SO{r}xSO{}", r + k, r + k),
            &[format!("SO({r},{})/SO{r}xSO{}", r + k - 1, r + k - 1)],
            r * (r + k),
            r,
        ));
    }
    for r in 2..=4u64 {
        t.push(row(
            format!("SO{}(C)/SO{}", 2 * r + 1, 2 * r + 1),
            &[format!("SO{}(C)/SO{}", 2 * r, 2 * r)],
            r * (2 * r + 1),
            2 * r,
        ));
    }
    for r in 3..=5u64 {
        t.push(row(
            format!("Sp{r}(R)/U{r}"),
            &[format!("RH^2 x Sp{}(R)/U{}", r - 1, r - 1)],
            r * (r + 1),
            2 * r - 2,
        ));
        t.push(row(
            format!("SU({r},{r})/S(U{r}xU{r})"),
            &[format!("SU({},{r})/S(U{}xU{r})", r - 1, r - 1)],
            2 * r * r,
            2 * r,
        ));
        t.push(row(
            format!("Sp{r}(C)/Sp{r}"),
            &[format!("RH^3 x Sp{}(C)/Sp{}", r - 1, r - 1)],
            r * (2 * r + 1),
            4 * r - 4,
        ));
        t.push(row(
            format!("SO*{}/U{}", 4 * r, 2 * r),
            &[format!("SO*{}/U{}", 4 * r - 2, 2 * r - 1)],
            2 * r * (2 * r - 1),
            4 * r - 2,
        ));
        t.push(row(
            format!("Sp({r},{r})/Sp{r}xSp{r}"),
            &[format!("Sp({},{r})/Sp{}xSp{r}", r - 1, r - 1)],
            4 * r * r,
            4 * r,
        ));
    }
    t.push(one("Sp(2,2)/Sp2xSp2", "Sp2(C)/Sp2", 16, 6));
    t.push(one("E7_-25/E6xU1", "E6_-14/Spin10xU1", 54, 22));
    for r in 4..=6u64 {
        t.push(row(
            format!("SO({r},{r})/SO{r}xSO{r}"),
            &[format!("SO({},{r})/SO{}xSO{r}", r - 1, r - 1)],
            r * r,
            r,
        ));
        t.push(row(
            format!("SO{}(C)/SO{}", 2 * r, 2 * r),
            &[format!("SO{}(C)/SO{}", 2 * r - 1, 2 * r - 1)],
            r * (2 * r - 1),
            2 * r - 1,
        ));
    }
    for (r, k) in [(1u64, 1u64), (1, 2), (1, 3), (2, 1), (3, 2)] {
        t.push(row(
            format!("SU({r},{})/S(U{r}xU{})", r + k, r + k),
            &[format!("SU({r},{})/S(U{r}xU{})", r + k - 1, r + k - 1)],
            2 * r * (r + k),
            2 * r,
        ));
        t.push(row(
            format!("Sp({r},{})/Sp{r}xSp{}", r + k, r + k),
            &[format!("Sp({r},{})/Sp{r}xSp{}", r + k - 1, r + k - 1)],
            4 * r * (r + k),
            4 * r,
        ));
    }
    for r in 2..=4u64 {
        t.push(row(
            format!("SO*{}/U{}", 4 * r + 2, 2 * r + 1),
            &[format!("SO*{}/U{}", 4 * r, 2 * r)],
            2 * r * (2 * r + 1),
            4 * r,
        ));
    }
    t.push(row(
        "F4_-20/Spin9".into(),
        &["SO(1,8)/SO8".into(), "Sp(1,2)/Sp1xSp2".into()],
        16,
        8,
    ));
    t.push(one("E6_-14/Spin10xU1", "SO*10/U5", 32, 12));
    t.push(one("E6_6/Sp4", "F4_4/Sp3xSp1", 42, 14));
    t.push(one("E6(C)/E6", "F4(C)/F4", 78, 26));
    t.push(one("E7_7/SU8", "R x E6_6/Sp4", 70, 27));
    t.push(one("E7(C)/E7", "R x E6(C)/E6", 133, 54));
    t.push(one("E8_8/SO16", "RH^2 x E7_7/SU8", 128, 56));
    t.push(one("E8(C)/E8", "RH^3 x E7(C)/E7", 248, 112));
    t.push(one("F4_4/Sp3xSp1", "SO(4,5)/SO4xSO5", 28, 8));
    t.push(one("E6_2/SU6xSp1", "F4_4/Sp3xSp1", 40, 12));
    t.push(one("F4(C)/F4", "SO9(C)/SO9", 52, 16));
    t.push(one("E7_-5/SO12xSp1", "E6_2/SU6xSp1", 64, 24));
    t.push(one("E8_-24/E7xSp1", "E7_-5/SO12xSp1", 112, 48));
    t.push(one("G2_2/SO4", "SL3(R)/SO3", 8, 3));
    t.push(row("G2(C)/G2".into(), &["G2_2/SO4".into(), "SL3(C)/SU3".into()], 14, 6));
    t
}
