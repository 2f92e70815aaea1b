//! The `hrd` command line.
//!
//! [`run`] never prints or exits; it returns the exit code and both output
//! streams so that the binary and the tests share one code path.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::counting::{
    census_simple_baxter, count_hrd_fast, count_hrd_literal, memo, oracle_count,
};
use crate::error::{Error, Result};
use crate::floorplan::{parse_floorplan, render_ascii, MosaicFloorplan};
use crate::gentree::{is_hrd, is_ihrd, GenTree, OrderK};
use crate::lowerbound::{grow_ihrd, insertion_family};
use crate::perm::Permutation;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// Largest `n` for `count --literal` without `--allow-large`; the literal
/// form is a six-deep loop.
pub const LITERAL_CAP: usize = 60;
/// Largest `n - k` for `lowerbound` without `--allow-large`.
pub const FAMILY_DEPTH_CAP: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "hrd",
    version,
    about = "Hierarchical rectangular dissections and Baxter permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide a predicate; exit 1 when it is false.
    Check {
        #[arg(value_enum)]
        predicate: Predicate,
        #[command(flatten)]
        perm: PermInput,
        /// Order for the `hrd` predicate.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Print the canonical substitution decomposition.
    Decompose {
        #[command(flatten)]
        perm: PermInput,
    },
    /// Print the skewed generating tree of order K.
    Tree {
        #[command(flatten)]
        perm: PermInput,
        #[arg(long)]
        k: usize,
    },
    /// Read a floorplan file and print its Baxter permutation.
    Fp2bp { file: PathBuf },
    /// Print the floorplan of a Baxter permutation in file format.
    Bp2fp {
        #[command(flatten)]
        perm: PermInput,
    },
    /// Draw a floorplan file as ASCII art.
    Render { file: PathBuf },
    /// Count HRD_K permutations of length N.
    Count {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        method: CountMethod,
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        no_memo: bool,
    },
    /// Print I_{K,1}, …, I_{K,MAX}.
    Sequence {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max: usize,
        /// One `n,count` row per line.
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        no_memo: bool,
    },
    /// Count (and optionally list) simple Baxter permutations of length L.
    Census {
        #[arg(long)]
        len: usize,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        allow_large: bool,
    },
    /// Build the 3^(N-K) family of HRD_K permutations that are not HRD_{K-1}.
    Lowerbound {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Simple Baxter seed of length K; defaults to the first one found.
        #[arg(long)]
        seed: Option<String>,
        /// Use every safe site instead of exactly three.
        #[arg(long)]
        all_sites: bool,
        #[arg(long)]
        allow_large: bool,
    },
    /// Add two rooms to an irreducible floorplan, keeping it irreducible.
    GrowIhrd { file: PathBuf },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Predicate {
    Baxter,
    Simple,
    Ihrd,
    Hrd,
}

#[derive(Debug, Args)]
struct PermInput {
    /// Entries separated by spaces or commas, or compact digits when n <= 9.
    perm: Option<String>,
    /// Read the permutation from a file instead.
    #[arg(long, conflicts_with = "perm")]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct CountMethod {
    /// Order-5 nested summation.
    #[arg(long)]
    literal: bool,
    /// Incremental convolution (the default).
    #[arg(long)]
    fast: bool,
    /// Exhaustive scan of all permutations.
    #[arg(long)]
    oracle: bool,
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_INVALID,
    }
}

fn dispatch(command: Command) -> Result<Outcome> {
    match command {
        Command::Check { predicate, perm, k } => {
            let p = read_perm(&perm)?;
            let holds = match predicate {
                Predicate::Baxter => p.is_baxter(),
                Predicate::Simple => p.is_simple(),
                Predicate::Ihrd => is_ihrd(&p),
                Predicate::Hrd => {
                    let k =
                        k.ok_or_else(|| Error::InvalidArgument("check hrd needs --k".into()))?;
                    is_hrd(&p, OrderK::new(k)?)
                }
            };
            Ok(Outcome {
                code: if holds { EXIT_OK } else { EXIT_FALSE },
                stdout: format!("{holds}\n"),
                stderr: String::new(),
            })
        }
        Command::Decompose { perm } => {
            Ok(Outcome::ok(format!("{}\n", read_perm(&perm)?.decompose()?)))
        }
        Command::Tree { perm, k } => {
            let tree = GenTree::tree_of_perm(&read_perm(&perm)?, OrderK::new(k)?)?;
            Ok(Outcome::ok(format!("{tree}\n")))
        }
        Command::Fp2bp { file } => Ok(Outcome::ok(format!(
            "{}\n",
            read_floorplan(&file)?.fp2bp()?
        ))),
        Command::Bp2fp { perm } => Ok(Outcome::ok(
            MosaicFloorplan::bp2fp(&read_perm(&perm)?)?.to_string(),
        )),
        Command::Render { file } => Ok(Outcome::ok(render_ascii(&read_floorplan(&file)?)?)),
        Command::Count {
            k,
            n,
            method,
            allow_large,
            no_memo,
        } => {
            let order = OrderK::new(k)?;
            let count = if method.literal {
                if k != 5 {
                    return Err(Error::InvalidArgument(format!(
                        "--literal is the order-5 form, got --k {k}"
                    )));
                }
                if n > LITERAL_CAP && !allow_large {
                    return Err(Error::CapExceeded {
                        what: "literal n",
                        value: n,
                        cap: LITERAL_CAP,
                    });
                }
                count_hrd_literal(n)?
            } else if method.oracle {
                oracle_count(order, n, allow_large)?
            } else if method.fast || no_memo {
                count_hrd_fast(order, n)?.t[n].clone()
            } else {
                let dir = memo::default_memo_dir();
                memo::sequence_memoized(order, n, dir.as_deref())?[n - 1].clone()
            };
            Ok(Outcome::ok(format!("{count}\n")))
        }
        Command::Sequence {
            k,
            max,
            csv,
            no_memo,
        } => {
            let order = OrderK::new(k)?;
            let dir = if no_memo {
                None
            } else {
                memo::default_memo_dir()
            };
            let seq = memo::sequence_memoized(order, max, dir.as_deref())?;
            let mut out = String::new();
            if csv {
                out.push_str("n,count\n");
                for (i, c) in seq.iter().enumerate() {
                    let _ = writeln!(out, "{},{c}", i + 1);
                }
            } else {
                let row: Vec<String> = seq.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "{}", row.join(" "));
            }
            Ok(Outcome::ok(out))
        }
        Command::Census {
            len,
            list,
            allow_large,
        } => {
            let entry = census_simple_baxter(len, list, allow_large)?;
            let mut out = format!("{}\n", entry.count);
            for p in entry.list.iter().flatten() {
                let _ = writeln!(out, "{}", p.compact());
            }
            Ok(Outcome::ok(out))
        }
        Command::Lowerbound {
            k,
            n,
            seed,
            all_sites,
            allow_large,
        } => {
            let order = OrderK::new(k)?;
            if n.saturating_sub(k) > FAMILY_DEPTH_CAP && !allow_large {
                return Err(Error::CapExceeded {
                    what: "n - k",
                    value: n - k,
                    cap: FAMILY_DEPTH_CAP,
                });
            }
            let seed = match seed {
                Some(s) => s.parse::<Permutation>()?,
                None => census_simple_baxter(k, true, allow_large)?
                    .list
                    .and_then(|l| l.into_iter().next())
                    .ok_or_else(|| {
                        Error::InvalidArgument(format!(
                            "there is no simple Baxter permutation of length {k}"
                        ))
                    })?,
            };
            let report = insertion_family(order, n, &seed, all_sites)?;
            let mut out = format!("{report}\n");
            for p in &report.samples {
                let _ = writeln!(out, "{}", p.compact());
            }
            Ok(Outcome {
                code: if report.holds() { EXIT_OK } else { EXIT_FALSE },
                stdout: out,
                stderr: String::new(),
            })
        }
        Command::GrowIhrd { file } => {
            let g = grow_ihrd(&read_floorplan(&file)?)?;
            let out = format!(
                "# label {} via {}\n{}",
                g.label.compact(),
                g.via,
                g.floorplan
            );
            Ok(Outcome::ok(out))
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_perm(input: &PermInput) -> Result<Permutation> {
    match (&input.perm, &input.file) {
        (Some(s), None) => s.parse(),
        (None, Some(path)) => read_text(path)?.trim().parse(),
        _ => Err(Error::InvalidArgument(
            "give a permutation or --file".into(),
        )),
    }
}

fn read_floorplan(path: &Path) -> Result<MosaicFloorplan> {
    parse_floorplan(&read_text(path)?)
}
