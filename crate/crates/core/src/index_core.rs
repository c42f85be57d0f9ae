//! Index and reflective index data, Table reconstruction and the
//! dimension/rank obstructions to totally geodesic embeddings.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::catalog::{Catalog, CatalogError, Factor, Product, SymmetricSpace};
use crate::expr::{Conditions, Expr, ExprError, Params, Template};
use crate::lie::GroupDescriptor;

const EMBEDDED: &str = include_str!("data/index.txt");

const TABLE_HEADER: &str = "space\tdual\tdim\trank\ti\ti_r\twitnesses\twitness_codim\texceptional\tsource";

#[derive(Debug, Error)]
pub enum IndexError {
    #[error("index unknown for {0}")]
    Unknown(String),
    #[error("index data line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Expr(#[from] ExprError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    Table,
    External,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Table => "table",
            Source::External => "external",
        })
    }
}

impl FromStr for Source {
    type Err = String;
    fn from_str(s: &str) -> Result<Source, String> {
        match s {
            "table" => Ok(Source::Table),
            "external" => Ok(Source::External),
            o => Err(format!("unknown source {o:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexRecord {
    /// Noncompact name.
    pub space_id: String,
    pub dual_id: String,
    pub dim: u64,
    pub rank: u32,
    pub index: u64,
    pub reflective_index: u64,
    /// Canonical names; the first is the primary witness.
    pub witnesses: Vec<String>,
    /// dim M minus the dimension of the primary witness.
    pub witness_codim: u64,
    pub exceptional: bool,
    pub source: Source,
}

impl IndexRecord {
    pub fn witness_id(&self) -> &str {
        &self.witnesses[0]
    }

    /// `i = 3, i_r = 4, exceptional` style summary.
    pub fn summary(&self) -> String {
        let mut s = format!("i = {}, i_r = {}", self.index, self.reflective_index);
        if self.exceptional {
            s.push_str(", exceptional");
        }
        s
    }

    fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.space_id,
            self.dual_id,
            self.dim,
            self.rank,
            self.index,
            self.reflective_index,
            self.witnesses.join("; "),
            self.witness_codim,
            self.exceptional,
            self.source
        )
    }

    fn from_tsv(line: &str) -> Result<IndexRecord, String> {
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 10 {
            return Err(format!("expected 10 columns, found {}", f.len()));
        }
        let num = |i: usize| f[i].parse::<u64>().map_err(|e| format!("column {}: {e}", i + 1));
        Ok(IndexRecord {
            space_id: f[0].to_string(),
            dual_id: f[1].to_string(),
            dim: num(2)?,
            rank: num(3)? as u32,
            index: num(4)?,
            reflective_index: num(5)?,
            witnesses: f[6].split("; ").map(str::to_string).collect(),
            witness_codim: num(7)?,
            exceptional: f[8].parse().map_err(|e| format!("column 9: {e}"))?,
            source: f[9].parse()?,
        })
    }
}

#[derive(Debug, Clone)]
struct Row {
    key: String,
    conditions: Conditions,
    index: Expr,
    reflective: Expr,
    witnesses: Vec<Template>,
    source: Source,
}

/// Index data joined to a catalog.
#[derive(Debug, Clone)]
pub struct IndexTable {
    catalog: Catalog,
    rows: Vec<Row>,
}

impl IndexTable {
    pub fn builtin() -> &'static IndexTable {
        static T: OnceLock<IndexTable> = OnceLock::new();
        T.get_or_init(|| IndexTable::parse(EMBEDDED, Catalog::builtin().clone()).expect("embedded index data parses"))
    }

    pub fn with_catalog(catalog: Catalog) -> Result<IndexTable, IndexError> {
        IndexTable::parse(EMBEDDED, catalog)
    }

    pub fn parse(text: &str, catalog: Catalog) -> Result<IndexTable, IndexError> {
        let mut rows = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let l = raw.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let perr = |msg: String| IndexError::Parse { line: i + 1, msg };
            let f: Vec<&str> = l.split('|').map(str::trim).collect();
            if f.len() != 6 {
                return Err(perr(format!("expected 6 fields, found {}", f.len())));
            }
            catalog.record(f[0]).map_err(|e| perr(e.to_string()))?;
            rows.push(Row {
                key: f[0].to_string(),
                conditions: Conditions::parse(f[1]).map_err(|e| perr(e.to_string()))?,
                index: Expr::parse(f[2]).map_err(|e| perr(e.to_string()))?,
                reflective: Expr::parse(f[3]).map_err(|e| perr(e.to_string()))?,
                witnesses: f[4]
                    .split(';')
                    .map(Template::parse)
                    .collect::<Result<_, _>>()
                    .map_err(|e| perr(e.to_string()))?,
                source: f[5].parse().map_err(perr)?,
            });
        }
        Ok(IndexTable { catalog, rows })
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    fn row_for(&self, s: &SymmetricSpace) -> Result<&Row, IndexError> {
        self.rows
            .iter()
            .find(|r| r.key == s.family && r.conditions.holds(&s.params).unwrap_or(false))
            .ok_or_else(|| IndexError::Unknown(s.id.clone()))
    }

    pub fn reflective_index(&self, s: &SymmetricSpace) -> Result<u64, IndexError> {
        let row = self.row_for(s)?;
        Ok(row.reflective.eval(&s.params)? as u64)
    }

    pub fn index_value(&self, s: &SymmetricSpace) -> Result<u64, IndexError> {
        let row = self.row_for(s)?;
        Ok(row.index.eval(&s.params)? as u64)
    }

    pub fn index(&self, s: &SymmetricSpace) -> Result<IndexRecord, IndexError> {
        let row = self.row_for(s)?;
        let witnesses: Vec<Product> = row
            .witnesses
            .iter()
            .map(|t| Ok(self.catalog.lookup(&t.render(&s.params)?)?))
            .collect::<Result<_, IndexError>>()?;
        let index = row.index.eval(&s.params)? as u64;
        let reflective_index = row.reflective.eval(&s.params)? as u64;
        Ok(IndexRecord {
            space_id: s.noncompact_id().to_string(),
            dual_id: s.compact_id().to_string(),
            dim: s.dim,
            rank: s.rank,
            index,
            reflective_index,
            witness_codim: s.dim - witnesses[0].dim(),
            witnesses: witnesses.iter().map(Product::name).collect(),
            exceptional: index != reflective_index,
            source: row.source,
        })
    }

    /// Index of a semisimple product: the sum over factors. Euclidean
    /// factors are outside the data.
    pub fn product_index(&self, p: &Product) -> Result<u64, IndexError> {
        let mut total = 0;
        for f in &p.factors {
            match f {
                Factor::Euclidean => return Err(IndexError::Unknown(format!("{} (Euclidean factor)", p.name()))),
                Factor::Space(s) => total += self.index_value(s)?,
            }
        }
        Ok(total)
    }

    /// Every index row, sampled at up to three parameter choices in order of
    /// dimension.
    pub fn table(&self) -> Result<Vec<IndexRecord>, IndexError> {
        let mut out = Vec::new();
        for row in &self.rows {
            let rec = self.catalog.record(&row.key)?;
            let mut sets: Vec<Params> = self
                .catalog
                .parameter_sets(rec, self.catalog.ceiling())
                .into_iter()
                .filter(|p| row.conditions.holds(p).unwrap_or(false))
                .collect();
            sets.sort_by_key(|p| (rec.dim_at(p).unwrap_or(i64::MAX), p.clone()));
            for p in sets.iter().take(3) {
                let s = self.catalog.instantiate(&row.key, p)?;
                out.push(self.index(&s)?);
            }
        }
        Ok(out)
    }
}

/// Tab-separated rendering with a header line.
pub fn write_tabular(records: &[IndexRecord]) -> String {
    let mut s = String::from(TABLE_HEADER);
    s.push('\n');
    for r in records {
        s.push_str(&r.to_tsv());
        s.push('\n');
    }
    s
}

pub fn parse_tabular(text: &str) -> Result<Vec<IndexRecord>, String> {
    let mut lines = text.lines();
    if lines.next() != Some(TABLE_HEADER) {
        return Err("missing or wrong header".into());
    }
    lines
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, l)| IndexRecord::from_tsv(l).map_err(|e| format!("row {}: {e}", i + 1)))
        .collect()
}

/// The necessary conditions for Σ ⊂ M totally geodesic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    DimSpace,
    DimGroup,
    DimIsotropy,
    RankSpace,
    RankGroup,
    RankIsotropy,
    IndexMonotone,
    IndexCodim,
}

impl Condition {
    pub const ALL: [Condition; 8] = [
        Condition::DimSpace,
        Condition::DimGroup,
        Condition::DimIsotropy,
        Condition::RankSpace,
        Condition::RankGroup,
        Condition::RankIsotropy,
        Condition::IndexMonotone,
        Condition::IndexCodim,
    ];
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::DimSpace => "dim(S) < dim(M)",
            Condition::DimGroup => "dim(G') < dim(G)",
            Condition::DimIsotropy => "dim(K') < dim(K)",
            Condition::RankSpace => "rk(S) <= rk(M)",
            Condition::RankGroup => "rk(G') <= rk(G)",
            Condition::RankIsotropy => "rk(K') <= rk(K)",
            Condition::IndexMonotone => "i(S) <= i(M)",
            Condition::IndexCodim => "i(M) <= dim(M) - dim(S)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Vec<Condition>),
    Indeterminate(String),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail(v) => {
                let v: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                write!(f, "fail: {}", v.join(", "))
            }
            Verdict::Indeterminate(m) => write!(f, "indeterminate: {m}"),
        }
    }
}

/// Group and isotropy algebras of a product; a line contributes a
/// one-dimensional abelian group.
pub fn product_groups(p: &Product) -> (GroupDescriptor, GroupDescriptor) {
    let line = GroupDescriptor {
        simple_factors: vec![],
        torus_rank: 1,
    };
    p.factors
        .iter()
        .fold((GroupDescriptor::trivial(), GroupDescriptor::trivial()), |(g, k), f| match f {
            Factor::Euclidean => (g.sum(&line), k),
            Factor::Space(s) => (g.sum(&s.group), k.sum(&s.isotropy)),
        })
}

impl IndexTable {
    /// Check the dimension, rank and index conditions for a candidate
    /// Σ ⊂ M. The index of Σ is taken over its semisimple part, which is
    /// itself totally geodesic in M.
    pub fn obstruction_check(&self, sub: &Product, ambient: &SymmetricSpace) -> Verdict {
        let (g1, k1) = product_groups(sub);
        let i_m = match self.index_value(ambient) {
            Ok(i) => i,
            Err(e) => return Verdict::Indeterminate(e.to_string()),
        };
        let semisimple = Product {
            factors: sub.spaces().cloned().map(Factor::Space).collect(),
        };
        let i_s = match self.product_index(&semisimple) {
            Ok(i) => i,
            Err(e) => return Verdict::Indeterminate(e.to_string()),
        };
        let failed: Vec<Condition> = Condition::ALL
            .into_iter()
            .filter(|c| {
                !match c {
                    Condition::DimSpace => sub.dim() < ambient.dim,
                    Condition::DimGroup => g1.dim() < ambient.group.dim(),
                    Condition::DimIsotropy => k1.dim() < ambient.isotropy.dim(),
                    Condition::RankSpace => sub.rank() <= ambient.rank,
                    Condition::RankGroup => g1.rank() <= ambient.group.rank(),
                    Condition::RankIsotropy => k1.rank() <= ambient.isotropy.rank(),
                    Condition::IndexMonotone => i_s <= i_m,
                    Condition::IndexCodim => sub.dim() <= ambient.dim && i_m <= ambient.dim - sub.dim(),
                }
            })
            .collect();
        if failed.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail(failed)
        }
    }
}

/// Reflection hyperplanes of the root system, summed over factors.
pub fn hyperplanes(p: &Product) -> u64 {
    p.spaces().map(|s| s.root_system.reflection_hyperplane_count()).sum()
}

/// b' <= b for Σ ⊂ M.
pub fn hyperplane_check(sub: &Product, ambient: &SymmetricSpace) -> bool {
    hyperplanes(sub) <= ambient.root_system.reflection_hyperplane_count()
}

/// For rk Σ = rk M, every factor's largest multiplicity is at most the
/// ambient one; `None` when the ranks differ.
pub fn multiplicity_check(sub: &Product, ambient: &SymmetricSpace) -> Option<bool> {
    (sub.rank() == ambient.rank).then(|| sub.spaces().all(|s| s.multiplicities.max() <= ambient.multiplicities.max()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tabular_roundtrip_small() {
        let t = IndexTable::builtin();
        let recs = t.table().unwrap();
        assert_eq!(parse_tabular(&write_tabular(&recs)).unwrap(), recs);
        assert!(parse_tabular("nope\n").is_err());
    }
}
