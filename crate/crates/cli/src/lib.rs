//! Command-line front end for `gendo-core`: tree files in, JSON (or DOT) out.
//!
//! Exit codes: 0 on success, 1 when the input violates an invariant (not a
//! tree, `W` not special, bad parameters), 2 on I/O or parse errors, 3 when a
//! size bound is exceeded.

pub mod format;
pub mod report;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use gendo_core::enumeration::{catalogue, count_classes, CatalogueKind, CodeSpec};
use gendo_core::homdim::{dimensions, green_walk, walk_marks};
use gendo_core::nakayama::oracle::{oracle_dims, oracle_inj_coresolution, oracle_proj_resolution};
use gendo_core::nakayama::{KupischSeries, Uniserial};
use gendo_core::orbits::{construct_ortho, derived_invariant, star_representative};
use gendo_core::presentation::{cartan, gamma_presentation, loewy};
use gendo_core::tree::enlarge;
use gendo_core::{BrauerTree, HookLabel, SpecialSubset};
use serde_json::{json, Value};

pub use format::TreeFile;

/// Longest necklace `enumerate` will count without `--list`.
pub const COUNT_BOUND: usize = 1 << 16;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("writing output: {0}")]
    Output(#[from] io::Error),
    #[error(transparent)]
    Core(#[from] gendo_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(gendo_core::Error::BoundExceeded { .. }) => 3,
            CliError::Core(_) => 1,
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Output(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "gendo", version, about = "Brauer trees and special gendo-Brauer tree algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Gendo-symmetric Nakayama algebras (binary necklaces of length n).
    Naka,
    /// Special gendo-Brauer tree algebras (special necklaces of length 2n).
    Tree,
}

/// Tree files are JSON; `-` reads standard input.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a tree file describes a Brauer tree with a special W.
    Validate { file: PathBuf },
    /// Quiver with relations of the algebra.
    Present {
        file: PathBuf,
        /// Emit Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Cartan matrix, rows and columns indexed by the quiver vertices.
    Cartan { file: PathBuf },
    /// Radical layers of every indecomposable projective.
    Loewy { file: PathBuf },
    /// Green's walk of the tree.
    Walk {
        file: PathBuf,
        /// Walk the enlarged tree and mark the returns from its new leaves.
        #[arg(long)]
        enlarged: bool,
    },
    /// Dominant, Gorenstein and global dimension.
    Dims { file: PathBuf },
    /// Derived equivalence invariant; with two files, whether they agree.
    Invariant { file: PathBuf, other: Option<PathBuf> },
    /// Canonical Brauer-star representative, as a tree file.
    Star { file: PathBuf },
    /// Count (and optionally list) the classes.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        list: bool,
    },
    /// Brute-force resolutions over a cyclic Nakayama algebra.
    Oracle {
        /// Kupisch series, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        kupisch: Vec<usize>,
        /// Dimensions of the algebra (the default).
        #[arg(long, conflicts_with = "resolve")]
        dims: bool,
        /// Resolve the uniserial module with this top and length.
        #[arg(long, value_name = "TOP,LEN", value_parser = parse_module)]
        resolve: Option<Uniserial>,
    },
    /// Star with a W whose walk gaps all equal d, as a tree file.
    Ortho {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: usize,
    },
}

fn parse_module(s: &str) -> Result<Uniserial, String> {
    let (top, len) = s.split_once(',').ok_or("expected TOP,LEN")?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok(Uniserial::new(parse(top)?, parse(len)?))
}

pub fn read_tree_file(path: &Path) -> Result<TreeFile, CliError> {
    let io_err = |source| CliError::Io { path: path.to_path_buf(), source };
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        s
    } else {
        fs::read_to_string(path).map_err(io_err)?
    };
    TreeFile::parse(&text).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })
}

pub fn load(path: &Path) -> Result<(BrauerTree, SpecialSubset), CliError> {
    Ok(read_tree_file(path)?.build()?)
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn emit_tree(out: &mut dyn Write, t: &BrauerTree, w: &SpecialSubset) -> Result<(), CliError> {
    emit(out, &serde_json::to_value(TreeFile::from_tree(t, w)).expect("tree files serialize"))
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Validate { file } => {
            let (t, w) = load(file)?;
            let exceptional = t.exceptional().map(|(v, m)| json!({ "vertex": v.as_str(), "mult": m }));
            emit(
                out,
                &json!({
                    "valid": true,
                    "edges": t.edge_count(),
                    "vertices": t.vertex_count(),
                    "exceptional": exceptional,
                    "W": w.iter().map(report::label).collect::<Vec<_>>(),
                }),
            )
        }
        Command::Present { file, dot } => {
            let (t, w) = load(file)?;
            let q = gamma_presentation(&t, &w)?;
            if *dot {
                out.write_all(report::dot(&q).as_bytes())?;
                Ok(())
            } else {
                emit(out, &report::presentation(&q))
            }
        }
        Command::Cartan { file } => {
            let (t, w) = load(file)?;
            emit(out, &report::cartan(&cartan(&t, &w)?))
        }
        Command::Loewy { file } => {
            let (t, w) = load(file)?;
            let shapes: serde_json::Map<String, Value> =
                loewy(&t, &w)?.iter().map(|(x, s)| (x.to_string(), report::loewy_shape(s))).collect();
            emit(out, &Value::Object(shapes))
        }
        Command::Walk { file, enlarged } => {
            let (t, w) = load(file)?;
            if !*enlarged {
                return emit(out, &report::walk(&green_walk(&t)));
            }
            let g = enlarge(&t, &w)?;
            let mut v = report::walk(&green_walk(&g));
            v["marks"] = if w.is_empty() { json!([]) } else { report::marks(&walk_marks(&t, &w)?) };
            emit(out, &v)
        }
        Command::Dims { file } => {
            let (t, w) = load(file)?;
            let mut v = report::dimensions(&dimensions(&t, &w)?);
            if w.is_empty() {
                // Symmetric algebra: the values are conventions, not computed.
                v["convention"] = json!("symmetric");
            }
            emit(out, &v)
        }
        Command::Invariant { file, other } => {
            let (t, w) = load(file)?;
            let first = derived_invariant(&t, &w)?;
            match other {
                None => emit(out, &report::invariant(&first)),
                Some(path) => {
                    let (t2, w2) = load(path)?;
                    let second = derived_invariant(&t2, &w2)?;
                    emit(
                        out,
                        &json!({
                            "equal": first == second,
                            "first": report::invariant(&first),
                            "second": report::invariant(&second),
                        }),
                    )
                }
            }
        }
        Command::Star { file } => {
            let (t, w) = load(file)?;
            let rep = star_representative(&derived_invariant(&t, &w)?)?;
            emit_tree(out, &rep.tree, &rep.w)
        }
        Command::Enumerate { kind, n, m, list } => {
            let (code, len) = match kind {
                Kind::Naka => (CodeSpec::Binary, *n),
                Kind::Tree => (CodeSpec::Special, 2 * n),
            };
            if len > COUNT_BOUND {
                return Err(gendo_core::Error::BoundExceeded {
                    what: "necklace length",
                    value: len,
                    bound: COUNT_BOUND,
                }
                .into());
            }
            let mut v = json!({
                "kind": match kind { Kind::Naka => "naka", Kind::Tree => "tree" },
                "n": n,
                "m": m,
                "count": report::count(&count_classes(code, len)?),
            });
            if *list {
                let kind = match kind {
                    Kind::Naka => CatalogueKind::Naka,
                    Kind::Tree => CatalogueKind::Tree,
                };
                v["entries"] = report::catalogue(&catalogue(*n, *m, kind)?);
            }
            emit(out, &v)
        }
        Command::Oracle { kupisch, resolve, .. } => {
            let k = KupischSeries::new(kupisch.clone())?;
            match resolve {
                None => {
                    let mut v = report::dimensions(&oracle_dims(&k));
                    v["kupisch"] = json!(k.entries());
                    emit(out, &v)
                }
                Some(u) => emit(
                    out,
                    &json!({
                        "kupisch": k.entries(),
                        "module": report::uniserial(*u),
                        "projective_resolution": report::trace(&oracle_proj_resolution(&k, *u)?),
                        "injective_coresolution": report::trace(&oracle_inj_coresolution(&k, *u)?),
                    }),
                ),
            }
        }
        Command::Ortho { n, m, d } => {
            let (t, w) = construct_ortho(*n, *m, *d, &HookLabel::new("0", "c"))?;
            emit_tree(out, &t, &w)
        }
    }
}
