//! The catalog of irreducible symmetric spaces, loaded from a line-oriented
//! data file (see `data/catalog.txt` for the grammar).

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use thiserror::Error;

use crate::expr::{Conditions, Expr, ExprError, Params, Template};
use crate::lie::{GroupDescriptor, LieParseError};
use crate::rootsys::{Family, RootSysError, RootSystem};

/// Largest dimension `enumerate` and the lint sweep will scan to.
pub const DEFAULT_CEILING: u64 = 260;

const EMBEDDED: &str = include_str!("data/catalog.txt");

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("parameters {params:?} out of range for {key}")]
    OutOfRange { key: String, params: Params },
    #[error("unknown space {0:?}")]
    UnknownSpace(String),
    #[error("{0:?} is not irreducible")]
    NotIrreducible(String),
    #[error("dimension {requested} exceeds catalog ceiling {ceiling}")]
    CeilingExceeded { requested: u64, ceiling: u64 },
    #[error("{key} {params:?}: {msg}")]
    Inconsistent { key: String, params: Params, msg: String },
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    RootSys(#[from] RootSysError),
    #[error(transparent)]
    Lie(#[from] LieParseError),
    #[error("reading catalog: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Compact,
    Noncompact,
}

impl Kind {
    pub fn other(self) -> Kind {
        match self {
            Kind::Compact => Kind::Noncompact,
            Kind::Noncompact => Kind::Compact,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Multiplicities {
    pub m1: u64,
    pub m2: u64,
}

impl Multiplicities {
    pub fn max(&self) -> u64 {
        self.m1.max(self.m2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct Flags {
    pub inner: bool,
    pub hermitian: bool,
    pub group_manifold: bool,
    pub constant_curvature: bool,
    /// Multiplicity labeling comes from the classification literature.
    pub external: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricSpace {
    pub family: String,
    pub params: Params,
    pub kind: Kind,
    pub id: String,
    pub dual_id: String,
    pub dim: u64,
    pub rank: u32,
    pub root_system: RootSystem,
    pub multiplicities: Multiplicities,
    pub isotropy: GroupDescriptor,
    /// Compact form of the transvection group.
    pub group: GroupDescriptor,
    pub flags: Flags,
}

impl SymmetricSpace {
    pub fn dual(&self) -> SymmetricSpace {
        SymmetricSpace {
            kind: self.kind.other(),
            id: self.dual_id.clone(),
            dual_id: self.id.clone(),
            ..self.clone()
        }
    }

    pub fn in_kind(&self, kind: Kind) -> SymmetricSpace {
        if self.kind == kind {
            self.clone()
        } else {
            self.dual()
        }
    }

    pub fn noncompact_id(&self) -> &str {
        match self.kind {
            Kind::Noncompact => &self.id,
            Kind::Compact => &self.dual_id,
        }
    }

    pub fn compact_id(&self) -> &str {
        match self.kind {
            Kind::Compact => &self.id,
            Kind::Noncompact => &self.dual_id,
        }
    }

    /// m1·l̄ + m2·s̄ + rank.
    pub fn formula_dim(&self) -> u64 {
        let (l, s) = self.root_system.positive_root_counts();
        self.multiplicities.m1 * l + self.multiplicities.m2 * s + self.rank as u64
    }

    pub fn validate_dimension_formula(&self) -> bool {
        self.dim == self.formula_dim()
    }

    /// Same family and parameters, regardless of which form is named.
    pub fn same_space(&self, other: &SymmetricSpace) -> bool {
        self.family == other.family && self.params == other.params
    }
}

impl fmt::Display for SymmetricSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id)
    }
}

/// One factor of a (possibly reducible) resolved name.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Factor {
    Euclidean,
    Space(SymmetricSpace),
}

impl Factor {
    pub fn dim(&self) -> u64 {
        match self {
            Factor::Euclidean => 1,
            Factor::Space(s) => s.dim,
        }
    }

    pub fn rank(&self) -> u32 {
        match self {
            Factor::Euclidean => 1,
            Factor::Space(s) => s.rank,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Factor::Euclidean => "R",
            Factor::Space(s) => &s.id,
        }
    }
}

/// A Riemannian product of catalog spaces and Euclidean lines.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Product {
    pub factors: Vec<Factor>,
}

impl Product {
    pub fn dim(&self) -> u64 {
        self.factors.iter().map(Factor::dim).sum()
    }

    pub fn rank(&self) -> u32 {
        self.factors.iter().map(Factor::rank).sum()
    }

    pub fn euclidean_rank(&self) -> u32 {
        self.factors.iter().filter(|f| matches!(f, Factor::Euclidean)).count() as u32
    }

    pub fn spaces(&self) -> impl Iterator<Item = &SymmetricSpace> {
        self.factors.iter().filter_map(|f| match f {
            Factor::Space(s) => Some(s),
            Factor::Euclidean => None,
        })
    }

    pub fn irreducible(&self) -> Option<&SymmetricSpace> {
        match self.factors.as_slice() {
            [Factor::Space(s)] => Some(s),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        self.factors.iter().map(Factor::name).collect::<Vec<_>>().join(" x ")
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Clone)]
struct RootSpec {
    family: Family,
    rank: Option<Expr>,
}

#[derive(Debug, Clone)]
enum HermitianSpec {
    Never,
    Always,
    When(Conditions),
}

/// A parsed family record.
#[derive(Debug, Clone)]
pub struct FamilyRecord {
    pub key: String,
    compact: Template,
    noncompact: Template,
    conditions: Conditions,
    dim: Expr,
    rank: Expr,
    roots: RootSpec,
    m1: Expr,
    m2: Expr,
    isotropy: Template,
    group: Template,
    hermitian: HermitianSpec,
    group_manifold: bool,
    constant_curvature: bool,
    external: bool,
    pub line: usize,
}

impl FamilyRecord {
    pub fn param_names(&self) -> Vec<String> {
        let mut v = self.compact.vars();
        v.extend(self.noncompact.vars());
        v.sort();
        v.dedup();
        v
    }

    pub fn compact_template(&self) -> &Template {
        &self.compact
    }

    pub fn noncompact_template(&self) -> &Template {
        &self.noncompact
    }

    pub fn admits(&self, params: &Params) -> Result<bool, ExprError> {
        self.conditions.holds(params)
    }

    /// Declared dimension, without building the full space.
    pub fn dim_at(&self, params: &Params) -> Result<i64, ExprError> {
        self.dim.eval(params)
    }

    fn build(&self, params: &Params, kind: Kind) -> Result<SymmetricSpace, CatalogError> {
        let inconsistent = |msg: String| CatalogError::Inconsistent {
            key: self.key.clone(),
            params: params.clone(),
            msg,
        };
        let nonneg = |e: &Expr, what: &str| -> Result<u64, CatalogError> {
            let v = e.eval(params)?;
            u64::try_from(v).map_err(|_| inconsistent(format!("negative {what} {v}")))
        };
        let root_rank = match &self.roots.rank {
            Some(e) => nonneg(e, "root rank")? as u32,
            None => self.roots.family.fixed_rank().expect("exceptional family"),
        };
        let root_system = RootSystem::new(self.roots.family, root_rank)?;
        let isotropy = GroupDescriptor::parse(&self.isotropy.render(params)?)?;
        let group = GroupDescriptor::parse(&self.group.render(params)?)?;
        let hermitian = match &self.hermitian {
            HermitianSpec::Never => false,
            HermitianSpec::Always => true,
            HermitianSpec::When(c) => c.holds(params)?,
        };
        let (compact, noncompact) = (self.compact.render(params)?, self.noncompact.render(params)?);
        let (id, dual_id) = match kind {
            Kind::Compact => (compact, noncompact),
            Kind::Noncompact => (noncompact, compact),
        };
        Ok(SymmetricSpace {
            family: self.key.clone(),
            params: params.clone(),
            kind,
            id,
            dual_id,
            dim: nonneg(&self.dim, "dimension")?,
            rank: nonneg(&self.rank, "rank")? as u32,
            root_system,
            multiplicities: Multiplicities {
                m1: nonneg(&self.m1, "m1")?,
                m2: nonneg(&self.m2, "m2")?,
            },
            flags: Flags {
                inner: group.rank() == isotropy.rank(),
                hermitian,
                group_manifold: self.group_manifold,
                constant_curvature: self.constant_curvature,
                external: self.external,
            },
            isotropy,
            group,
        })
    }
}

#[derive(Debug, Clone)]
struct Alias {
    template: Template,
    conditions: Conditions,
    targets: Vec<Template>,
}

/// Filter for `Catalog::enumerate`.
#[derive(Debug, Clone)]
pub struct Filter {
    pub min_dim: u64,
    pub max_dim: u64,
    pub min_rank: u32,
    pub max_rank: u32,
    pub compact_type: bool,
    pub exclude_rank_one: bool,
    /// Every entry already stands for its simply connected cover, so this
    /// does not change the result.
    pub require_simply_connected_cover: bool,
}

impl Default for Filter {
    fn default() -> Filter {
        Filter {
            min_dim: 0,
            max_dim: DEFAULT_CEILING,
            min_rank: 1,
            max_rank: u32::MAX,
            compact_type: false,
            exclude_rank_one: false,
            require_simply_connected_cover: false,
        }
    }
}

impl Filter {
    pub fn dims(min_dim: u64, max_dim: u64) -> Filter {
        Filter {
            min_dim,
            max_dim,
            ..Filter::default()
        }
    }

    pub fn rank(self, r: u32) -> Filter {
        self.ranks(r, r)
    }

    pub fn ranks(self, min_rank: u32, max_rank: u32) -> Filter {
        Filter {
            min_rank,
            max_rank,
            ..self
        }
    }

    pub fn compact(self) -> Filter {
        Filter {
            compact_type: true,
            ..self
        }
    }

    pub fn without_rank_one(self) -> Filter {
        Filter {
            exclude_rank_one: true,
            ..self
        }
    }

    fn accepts(&self, s: &SymmetricSpace) -> bool {
        (self.min_dim..=self.max_dim).contains(&s.dim)
            && (self.min_rank..=self.max_rank).contains(&s.rank)
            && !(self.exclude_rank_one && s.rank == 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LintIssue {
    pub key: String,
    pub params: Params,
    pub message: String,
}

impl fmt::Display for LintIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{} [{}]: {}", self.key, ps.join(","), self.message)
    }
}

#[derive(Debug, Clone, Default)]
pub struct LintReport {
    pub records: usize,
    pub aliases: usize,
    pub instances: usize,
    pub issues: Vec<LintIssue>,
}

impl LintReport {
    pub fn ok(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Strip the decorations that vary between spellings of the same name.
pub fn normalize_name(s: &str) -> String {
    s.replace("^o", "")
        .chars()
        .filter(|c| !c.is_whitespace() && !matches!(c, '{' | '}' | 'x' | '×' | '_' | '^'))
        .collect()
}

/// Split `A x B × C` into factor names.
pub fn split_product(s: &str) -> Vec<String> {
    let mut out = vec![String::new()];
    for tok in s.split_whitespace() {
        if tok == "x" || tok == "×" {
            out.push(String::new());
        } else {
            out.last_mut().unwrap().push_str(tok);
        }
    }
    out.retain(|f| !f.is_empty());
    out
}

#[derive(Debug, Clone)]
pub struct Catalog {
    records: Vec<FamilyRecord>,
    aliases: Vec<Alias>,
    ceiling: u64,
}

impl Catalog {
    /// The catalog compiled into the library.
    pub fn builtin() -> &'static Catalog {
        static CAT: OnceLock<Catalog> = OnceLock::new();
        CAT.get_or_init(|| Catalog::parse(EMBEDDED).expect("embedded catalog parses"))
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Catalog, CatalogError> {
        Catalog::parse(&std::fs::read_to_string(path)?)
    }

    pub fn embedded_source() -> &'static str {
        EMBEDDED
    }

    pub fn parse(text: &str) -> Result<Catalog, CatalogError> {
        let mut records = Vec::new();
        let mut aliases = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let err = |msg: String| CatalogError::Parse { line, msg };
            let wrap = |e: CatalogError| match e {
                CatalogError::Parse { msg, .. } => err(msg),
                other => err(other.to_string()),
            };
            if let Some(rest) = l.strip_prefix("alias") {
                aliases.push(parse_alias(rest).map_err(wrap)?);
            } else {
                records.push(parse_record(l, line).map_err(wrap)?);
            }
        }
        let mut keys: Vec<&str> = records.iter().map(|r| r.key.as_str()).collect();
        keys.sort();
        if let Some(w) = keys.windows(2).find(|w| w[0] == w[1]) {
            return Err(CatalogError::Parse {
                line: 0,
                msg: format!("duplicate key {}", w[0]),
            });
        }
        Ok(Catalog {
            records,
            aliases,
            ceiling: DEFAULT_CEILING,
        })
    }

    pub fn with_ceiling(mut self, ceiling: u64) -> Catalog {
        self.ceiling = ceiling;
        self
    }

    pub fn ceiling(&self) -> u64 {
        self.ceiling
    }

    pub fn records(&self) -> &[FamilyRecord] {
        &self.records
    }

    pub fn record(&self, family: &str) -> Result<&FamilyRecord, CatalogError> {
        let n = strip_family(family);
        self.records
            .iter()
            .find(|r| {
                r.key == family
                    || strip_family(r.compact.source()) == n
                    || strip_family(r.noncompact.source()) == n
            })
            .ok_or_else(|| CatalogError::UnknownFamily(family.to_string()))
    }

    /// Build the space of a family at the given parameters, noncompact form.
    pub fn instantiate(&self, family: &str, params: &Params) -> Result<SymmetricSpace, CatalogError> {
        self.instantiate_kind(family, params, Kind::Noncompact)
    }

    pub fn instantiate_kind(&self, family: &str, params: &Params, kind: Kind) -> Result<SymmetricSpace, CatalogError> {
        let rec = self.record(family)?;
        if rec.param_names().iter().any(|p| !params.contains_key(p)) || !rec.admits(params)? {
            return Err(CatalogError::OutOfRange {
                key: rec.key.clone(),
                params: params.clone(),
            });
        }
        let s = rec.build(params, kind)?;
        if !s.validate_dimension_formula() {
            return Err(CatalogError::Inconsistent {
                key: rec.key.clone(),
                params: params.clone(),
                msg: format!("dimension {} but the root data gives {}", s.dim, s.formula_dim()),
            });
        }
        Ok(s)
    }

    /// Resolve a name, possibly a product, to catalog spaces.
    pub fn lookup(&self, name: &str) -> Result<Product, CatalogError> {
        self.lookup_depth(name, 0)
    }

    /// Resolve a name that must denote one irreducible space.
    pub fn lookup_space(&self, name: &str) -> Result<SymmetricSpace, CatalogError> {
        let p = self.lookup(name)?;
        p.irreducible()
            .cloned()
            .ok_or_else(|| CatalogError::NotIrreducible(name.to_string()))
    }

    fn lookup_depth(&self, name: &str, depth: usize) -> Result<Product, CatalogError> {
        let unknown = || CatalogError::UnknownSpace(name.trim().to_string());
        if depth > 8 {
            return Err(unknown());
        }
        let parts = split_product(name);
        if parts.len() != 1 {
            if parts.is_empty() {
                return Err(unknown());
            }
            let mut factors = Vec::new();
            for p in &parts {
                factors.extend(self.lookup_depth(p, depth + 1)?.factors);
            }
            return Ok(Product { factors });
        }
        let single = &parts[0];
        if single == "R" {
            return Ok(Product {
                factors: vec![Factor::Euclidean],
            });
        }
        for rec in &self.records {
            for (tpl, kind) in [(&rec.compact, Kind::Compact), (&rec.noncompact, Kind::Noncompact)] {
                if let Some(params) = tpl.matches(single, normalize_name) {
                    if rec.admits(&params).unwrap_or(false) {
                        let s = self.instantiate_kind(&rec.key, &params, kind)?;
                        return Ok(Product {
                            factors: vec![Factor::Space(s)],
                        });
                    }
                }
            }
        }
        for a in &self.aliases {
            if let Some(params) = a.template.matches(single, normalize_name) {
                if a.conditions.holds(&params).unwrap_or(false) {
                    let mut factors = Vec::new();
                    for t in &a.targets {
                        factors.extend(self.lookup_depth(&t.render(&params)?, depth + 1)?.factors);
                    }
                    return Ok(Product { factors });
                }
            }
        }
        Err(unknown())
    }

    /// Every admissible parameter assignment of a record with declared
    /// dimension at most `max_dim`, in scan order. Dimensions are
    /// increasing in every parameter (checked by `lint`), which bounds the
    /// scan.
    pub fn parameter_sets(&self, rec: &FamilyRecord, max_dim: u64) -> Vec<Params> {
        #[derive(PartialEq)]
        enum Seen {
            Nothing,
            Above,
            Within,
        }
        fn go(rec: &FamilyRecord, names: &[String], cur: &mut Params, max: i64, out: &mut Vec<Params>) -> Seen {
            let Some((first, rest)) = names.split_first() else {
                return match (rec.admits(cur), rec.dim_at(cur)) {
                    (Ok(true), Ok(d)) if d <= max => {
                        out.push(cur.clone());
                        Seen::Within
                    }
                    (Ok(true), Ok(_)) => Seen::Above,
                    _ => Seen::Nothing,
                };
            };
            let mut seen = Seen::Nothing;
            for v in 0..=max + 2 {
                cur.insert(first.clone(), v);
                match go(rec, rest, cur, max, out) {
                    Seen::Within => seen = Seen::Within,
                    Seen::Above => {
                        if seen == Seen::Nothing {
                            seen = Seen::Above;
                        }
                        break;
                    }
                    Seen::Nothing => {}
                }
            }
            cur.remove(first);
            seen
        }
        let mut out = Vec::new();
        go(rec, &rec.param_names(), &mut Params::new(), max_dim as i64, &mut out);
        out
    }

    /// All catalog spaces matching the filter, ordered by (dim, rank, id).
    pub fn enumerate(&self, filter: &Filter) -> Result<Vec<SymmetricSpace>, CatalogError> {
        if filter.max_dim > self.ceiling {
            return Err(CatalogError::CeilingExceeded {
                requested: filter.max_dim,
                ceiling: self.ceiling,
            });
        }
        let kind = if filter.compact_type {
            Kind::Compact
        } else {
            Kind::Noncompact
        };
        let mut out = Vec::new();
        for rec in &self.records {
            for p in self.parameter_sets(rec, filter.max_dim) {
                let s = self.instantiate_kind(&rec.key, &p, kind)?;
                if filter.accepts(&s) {
                    out.push(s);
                }
            }
        }
        out.sort_by(|a, b| (a.dim, a.rank, &a.id).cmp(&(b.dim, b.rank, &b.id)));
        Ok(out)
    }

    /// Check every record at every parameter up to the ceiling.
    pub fn lint(&self) -> LintReport {
        let mut rep = LintReport {
            records: self.records.len(),
            aliases: self.aliases.len(),
            ..LintReport::default()
        };
        for rec in &self.records {
            let sets = self.parameter_sets(rec, self.ceiling);
            if sets.is_empty() {
                rep.issues.push(LintIssue {
                    key: rec.key.clone(),
                    params: Params::new(),
                    message: "no instance within the ceiling".into(),
                });
            }
            for p in sets {
                rep.instances += 1;
                for message in self.lint_instance(rec, &p) {
                    rep.issues.push(LintIssue {
                        key: rec.key.clone(),
                        params: p.clone(),
                        message,
                    });
                }
            }
        }
        rep
    }

    fn lint_instance(&self, rec: &FamilyRecord, p: &Params) -> Vec<String> {
        let s = match rec.build(p, Kind::Noncompact) {
            Ok(s) => s,
            Err(e) => return vec![e.to_string()],
        };
        let mut out = Vec::new();
        if !s.validate_dimension_formula() {
            out.push(format!("dimension {} but m1*l + m2*s + rank = {}", s.dim, s.formula_dim()));
        }
        if s.group.dim() < s.isotropy.dim() || s.group.dim() - s.isotropy.dim() != s.dim {
            out.push(format!(
                "dim g - dim k = {} - {} differs from dimension {}",
                s.group.dim(),
                s.isotropy.dim(),
                s.dim
            ));
        }
        if s.rank != s.root_system.rank() {
            out.push(format!("rank {} but root system {}", s.rank, s.root_system));
        }
        if s.multiplicities.m1 == 0 || s.multiplicities.m2 == 0 {
            out.push("zero multiplicity".into());
        }
        if s.root_system.positive_root_counts().1 == 0 && s.multiplicities.m1 != s.multiplicities.m2 {
            out.push("single root length but m1 != m2".into());
        }
        if s.flags.hermitian && (s.dim % 2 != 0 || s.isotropy.torus_rank == 0) {
            out.push("hermitian needs even dimension and a central torus in k".into());
        }
        for name in p.keys() {
            let mut q = p.clone();
            *q.get_mut(name).unwrap() += 1;
            if rec.admits(&q).unwrap_or(false) && rec.dim_at(&q).unwrap_or(i64::MAX) <= s.dim as i64 {
                out.push(format!("dimension not increasing in {name}"));
            }
        }
        for kind in [Kind::Compact, Kind::Noncompact] {
            let t = s.in_kind(kind);
            match self.lookup_space(&t.id) {
                Ok(back) if back.same_space(&s) && back.kind == kind && back.id == t.id => {}
                Ok(back) => out.push(format!("{} resolves to {} instead", t.id, back.id)),
                Err(e) => out.push(format!("{} does not resolve: {e}", t.id)),
            }
        }
        out
    }
}

fn strip_family(s: &str) -> String {
    normalize_name(s).replace('*', "")
}

fn fields(s: &str, n: usize, what: &str) -> Result<Vec<String>, CatalogError> {
    let f: Vec<String> = s.split('|').map(|x| x.trim().to_string()).collect();
    if f.len() != n {
        return Err(CatalogError::Parse {
            line: 0,
            msg: format!("{what} needs {n} fields, found {}", f.len()),
        });
    }
    Ok(f)
}

fn parse_alias(rest: &str) -> Result<Alias, CatalogError> {
    let f = fields(rest.trim_start().trim_start_matches('|'), 3, "alias")?;
    Ok(Alias {
        template: Template::parse(&f[0])?,
        conditions: Conditions::parse(&f[1])?,
        targets: split_product(&f[2])
            .iter()
            .map(|t| Template::parse(t))
            .collect::<Result<_, _>>()?,
    })
}

fn parse_record(l: &str, line: usize) -> Result<FamilyRecord, CatalogError> {
    let perr = |msg: String| CatalogError::Parse { line, msg };
    let (key, rest) = l.split_once(':').ok_or_else(|| perr("missing KEY:".into()))?;
    let f = fields(rest, 9, "record")?;
    let (compact, noncompact) = f[0]
        .split_once('=')
        .ok_or_else(|| perr("names need `compact = noncompact`".into()))?;
    let (k, g) = f[7].split_once('<').ok_or_else(|| perr("isotropy needs `k < g`".into()))?;
    let (fam, rank) = match f[4].split_once('(') {
        Some((fam, r)) => (fam.trim(), Some(Expr::parse(r.trim_end_matches(')'))?)),
        None => (f[4].as_str(), None),
    };
    let family = Family::ALL
        .into_iter()
        .find(|x| format!("{x:?}") == fam)
        .ok_or_else(|| perr(format!("unknown root system {fam:?}")))?;
    if rank.is_none() != family.fixed_rank().is_some() {
        return Err(perr(format!("root system {fam} rank mismatch")));
    }
    let mut rec = FamilyRecord {
        key: key.trim().to_string(),
        compact: Template::parse(compact)?,
        noncompact: Template::parse(noncompact)?,
        conditions: Conditions::parse(&f[1])?,
        dim: Expr::parse(&f[2])?,
        rank: Expr::parse(&f[3])?,
        roots: RootSpec { family, rank },
        m1: Expr::parse(&f[5])?,
        m2: Expr::parse(&f[6])?,
        isotropy: Template::parse(k)?,
        group: Template::parse(g)?,
        hermitian: HermitianSpec::Never,
        group_manifold: false,
        constant_curvature: false,
        external: false,
        line,
    };
    for flag in f[8].split_whitespace() {
        match flag {
            "hermitian" => rec.hermitian = HermitianSpec::Always,
            "group" => rec.group_manifold = true,
            "cc" => rec.constant_curvature = true,
            "ext" => rec.external = true,
            h if h.starts_with("hermitian[") && h.ends_with(']') => {
                rec.hermitian = HermitianSpec::When(Conditions::parse(&h[10..h.len() - 1])?)
            }
            other => return Err(perr(format!("unknown flag {other:?}"))),
        }
    }
    if rec.compact.vars() != rec.noncompact.vars() {
        return Err(perr("compact and noncompact names use different parameters".into()));
    }
    Ok(rec)
}

/// Convenience for building parameter maps.
pub fn params<const N: usize>(kv: [(&str, i64); N]) -> Params {
    kv.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<BTreeMap<_, _>>()
}
