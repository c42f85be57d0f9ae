//! Command-line front end. `run` returns the exit code and both streams so
//! the binary and the tests share one path.
//!
//! Space names follow the catalog grammar:
//!
//! ```text
//! product  = space { " x " space }
//! space    = catalog name, e.g. Sp(2,2)/Sp2xSp2, SU*8/Sp4, E6_-14/Spin10xU1, S^5
//!          | alias, e.g. SU4/Sp2
//!          | "R"
//! ```
//!
//! Braces, underscores, carets and whitespace inside a name are ignored
//! when matching; the canonical name is echoed back.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::Catalog;
use crate::elimination::{eliminate_sp, lagrangian_checks, Options};
use crate::hermitian::{hermitian_sweep, HermitianVerdict};
use crate::index_core::{write_tabular, IndexTable, Verdict};
use crate::rootsys::{enumerate_type_a_subsystems, verify_subsystem_closed};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Tabular,
}

#[derive(Debug, Parser)]
#[command(name = "symindex", version, about = "Index and reflective index of Riemannian symmetric spaces")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Read the catalog from a file instead of the embedded one.
    #[arg(long, global = true, value_name = "PATH")]
    pub catalog: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Index, reflective index and witness of one space.
    Index { space: String },
    /// Every index row at its first parameter choices, tab separated.
    Table,
    /// Search for maximal totally geodesic submanifolds below i_r.
    Eliminate {
        #[command(subcommand)]
        target: EliminateTarget,
    },
    /// Integer checks for SU(2r+2)/Sp(r+1).
    Lagrangian { r: u32 },
    /// Reflectivity estimate over the Hermitian families.
    Hermitian {
        #[arg(long, default_value_t = 50)]
        max_rank: u32,
    },
    /// Necessary conditions for a totally geodesic Σ in M.
    Obstruct { sub: String, ambient: String },
    /// Catalog maintenance.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Type-A root subsystems of A_r given by consecutive blocks.
    Subsystems { r: u32 },
}

#[derive(Debug, Subcommand)]
pub enum EliminateTarget {
    /// Sp(2r)/Sp(r)Sp(r), r in 3..=5.
    Sp {
        r: u32,
        /// Drop the codimension gap and small-index classification.
        #[arg(long)]
        no_external_assumptions: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// Check every record at every parameter up to the ceiling.
    Lint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn new(code: i32, stdout: String) -> Outcome {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Outcome {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

fn ok_if(pass: bool) -> i32 {
    if pass {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::new(EXIT_OK, text)
            }
        }
    }
}

fn custom_table(path: &Option<PathBuf>) -> Result<Option<IndexTable>, String> {
    let Some(p) = path else { return Ok(None) };
    let cat = Catalog::from_path(p).map_err(|e| e.to_string())?;
    IndexTable::with_catalog(cat).map(Some).map_err(|e| e.to_string())
}

pub fn dispatch(cli: &Cli) -> Outcome {
    let custom = match custom_table(&cli.catalog) {
        Ok(t) => t,
        Err(e) => return Outcome::usage(e),
    };
    let table = custom.as_ref().unwrap_or_else(|| IndexTable::builtin());
    let mut out = match &cli.command {
        Command::Index { space } => index(table, space, cli.format),
        Command::Table => match table.table() {
            Ok(recs) => Outcome::new(EXIT_OK, write_tabular(&recs)),
            Err(e) => Outcome::usage(e),
        },
        Command::Eliminate {
            target: EliminateTarget::Sp { r, no_external_assumptions },
        } => {
            let opts = Options {
                external_assumptions: !no_external_assumptions,
            };
            match eliminate_sp(*r, opts) {
                Ok(rep) => {
                    let text = match cli.format {
                        Format::Human => format!("{rep}\n"),
                        Format::Tabular => rep.write_tabular(),
                    };
                    Outcome::new(ok_if(rep.verified()), text)
                }
                Err(e) => Outcome::usage(e),
            }
        }
        Command::Lagrangian { r } => match lagrangian_checks(*r) {
            Ok(rep) => Outcome::new(ok_if(rep.passed()), format!("{rep}\n")),
            Err(e) => Outcome::usage(e),
        },
        Command::Hermitian { max_rank } => hermitian(*max_rank, cli.format),
        Command::Obstruct { sub, ambient } => obstruct(table, sub, ambient),
        Command::Catalog {
            action: CatalogAction::Lint,
        } => {
            let rep = table.catalog().lint();
            let mut s = format!(
                "records: {}\naliases: {}\ninstances: {}\nissues: {}\n",
                rep.records,
                rep.aliases,
                rep.instances,
                rep.issues.len()
            );
            for i in &rep.issues {
                let _ = writeln!(s, "  {i}");
            }
            Outcome::new(ok_if(rep.ok()), s)
        }
        Command::Subsystems { r } => subsystems(*r, cli.format),
    };
    if cli.catalog.is_some() && matches!(cli.command, Command::Eliminate { .. } | Command::Lagrangian { .. } | Command::Hermitian { .. }) {
        out.stderr.push_str("note: this verb always uses the embedded catalog\n");
    }
    out
}

fn index(table: &IndexTable, name: &str, format: Format) -> Outcome {
    let space = match table.catalog().lookup_space(name) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    let rec = match table.index(&space) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let text = match format {
        Format::Tabular => write_tabular(std::slice::from_ref(&rec)),
        Format::Human => {
            let mut s = format!(
                "{} (compact dual {}): dim {}, rank {}\n{}\n",
                rec.space_id,
                rec.dual_id,
                rec.dim,
                rec.rank,
                rec.summary()
            );
            for w in &rec.witnesses {
                let _ = writeln!(s, "witness: {w} (codim {})", rec.witness_codim);
            }
            let _ = writeln!(s, "source: {}", rec.source);
            s
        }
    };
    Outcome::new(EXIT_OK, text)
}

fn hermitian(max_rank: u32, format: Format) -> Outcome {
    let sweep = match hermitian_sweep(max_rank) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    let mut s = String::new();
    let mut pass = true;
    match format {
        Format::Human => {
            for f in &sweep {
                let exceptional = f.family.starts_with('E');
                pass &= exceptional || f.conclusive();
                let bad: Vec<&str> = f.checks.iter().filter(|c| !c.conclusive()).map(|c| c.space.id.as_str()).collect();
                if f.conclusive() {
                    let _ = writeln!(s, "{}: {} spaces, conclusive", f.family, f.checks.len());
                } else if exceptional {
                    for c in &f.checks {
                        let _ = write!(s, "{}: {}", f.family, c.verdict);
                        if let Some((i, src)) = c.recorded_index {
                            let _ = write!(s, "; recorded i = {i} ({src})");
                        }
                        s.push('\n');
                    }
                } else {
                    let _ = writeln!(s, "{}: inconclusive at {}", f.family, bad.join(", "));
                }
            }
        }
        Format::Tabular => {
            s.push_str("family\tspace\tn\tr\ti_r\ttested\tfailures\tverdict\n");
            for f in &sweep {
                pass &= f.family.starts_with('E') || f.conclusive();
                for c in &f.checks {
                    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
                    let verdict = match &c.verdict {
                        HermitianVerdict::Conclusive => "conclusive".to_string(),
                        v => v.to_string(),
                    };
                    let _ = writeln!(
                        s,
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{verdict}",
                        f.family,
                        c.space.id,
                        c.n,
                        c.r,
                        c.i_r,
                        join(&c.tested_codims),
                        join(&c.failures)
                    );
                }
            }
        }
    }
    Outcome::new(ok_if(pass), s)
}

fn obstruct(table: &IndexTable, sub: &str, ambient: &str) -> Outcome {
    let cat = table.catalog();
    let (sub, amb) = match (cat.lookup(sub), cat.lookup_space(ambient)) {
        (Ok(s), Ok(a)) => (s, a),
        (Err(e), _) | (_, Err(e)) => return Outcome::usage(e),
    };
    let v = table.obstruction_check(&sub, &amb);
    let text = format!("{} in {}: {v}\n", sub.name(), amb.id);
    Outcome::new(ok_if(matches!(v, Verdict::Pass)), text)
}

fn subsystems(r: u32, format: Format) -> Outcome {
    if r == 0 {
        return Outcome::usage("rank must be positive");
    }
    let subs = enumerate_type_a_subsystems(r);
    let mut s = String::new();
    if format == Format::Tabular {
        s.push_str("blocks\tcomponents\thyperplanes\tclosed\n");
    }
    let mut pass = true;
    for t in &subs {
        let closed = verify_subsystem_closed(t);
        pass &= closed;
        let join = |v: Vec<u32>| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        let (blocks, comps) = (join(t.block_sizes()), join(t.component_ranks()));
        let _ = match format {
            Format::Tabular => writeln!(s, "{blocks}\t{comps}\t{}\t{closed}", t.hyperplane_count()),
            Format::Human => writeln!(
                s,
                "blocks [{blocks}]: components A[{comps}], {} hyperplanes{}",
                t.hyperplane_count(),
                if closed { "" } else { ", NOT closed" }
            ),
        };
    }
    if format == Format::Human {
        let _ = writeln!(s, "{} subsystems of A{r}", subs.len());
    }
    Outcome::new(ok_if(pass), s)
}
