//! Command-line front end. [`run`] returns the exit code and both output
//! streams so commands can be tested without spawning a process.
//!
//! Exit codes: 0 success or positive verdict, 1 negative verdict, 2 bad
//! input (with a one-line diagnostic on stderr).

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::braids::{BraidGroup, BraidWord, ExtBraidElement};
use crate::chains::{self, MaximalChain, WordPair};
use crate::christoffel;
use crate::error::{Error, Result};
use crate::relations::{self, DEFAULT_KMAX};
use crate::words::FreeWord;

#[derive(Parser, Debug)]
#[command(name = "sturmian", version, about = "Bases of the free group F2, Christoffel words and B4 braids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Christoffel word of (P, Q).
    Christoffel {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        /// Print the upper word instead (P, Q >= 0).
        #[arg(long)]
        upper: bool,
        /// Also print the lattice path, one `x y` point per line.
        #[arg(long)]
        path: bool,
        /// Write the path and segment as SVG.
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
    /// Decide whether (U, V) is a basis of F2.
    BasisTest {
        u: String,
        v: String,
        /// Cross-check with the commutator criterion.
        #[arg(long)]
        oracle: bool,
        /// Print each normalization step.
        #[arg(long)]
        trace: bool,
    },
    /// Maximal chain through a pair of positive words.
    Chain { u: String, v: String },
    /// Palindromic conjugate of a cyclically reduced basis.
    Palindromize { u: String, v: String },
    /// All cyclically reduced bases conjugate to (U, V).
    Conjugates { u: String, v: String },
    /// Christoffel basis conjugate to the basis (U, V).
    NormalForm { u: String, v: String },
    /// Whether W belongs to some basis.
    Primitive { w: String },
    /// Image of a B4 braid in Aut(F2), or its action on a word.
    BraidApply {
        braid: String,
        #[arg(long)]
        word: Option<String>,
        /// Multiply by the involution on the right.
        #[arg(long)]
        omega: bool,
    },
    /// Equality in B4, or in B4 modulo its center.
    BraidEq {
        b1: String,
        b2: String,
        #[arg(long)]
        mod_center: bool,
    },
    /// Position of a positive basis on its chain and its standard left end.
    Decompose { u: String, v: String },
    /// Run a suite of identities (`all` runs every suite).
    RelationsCheck {
        suite: String,
        #[arg(long, default_value_t = DEFAULT_KMAX)]
        kmax: u32,
    },
}

struct Output {
    code: i32,
    out: String,
}

impl Output {
    fn ok(out: String) -> Output {
        Output { code: 0, out }
    }

    fn verdict(yes: bool, out: String) -> Output {
        Output { code: if yes { 0 } else { 1 }, out }
    }
}

fn word(s: &str) -> Result<FreeWord> {
    s.parse()
}

fn words(u: &str, v: &str) -> Result<(FreeWord, FreeWord)> {
    Ok((word(u)?, word(v)?))
}

/// Runs the command line `argv` (program name first).
pub fn run<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    (0, rendered, String::new())
                }
                _ => {
                    let line = rendered.lines().next().unwrap_or("invalid arguments").to_string();
                    (2, String::new(), line + "\n")
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(Output { code, out }) => (code, out, String::new()),
        Err(e) => (2, String::new(), format!("error: {e}\n")),
    }
}

fn dispatch(command: Command) -> Result<Output> {
    match command {
        Command::Christoffel { p, q, upper, path, svg } => {
            let w =
                if upper { christoffel::upper_christoffel_word(p, q)? } else { christoffel::christoffel_word(p, q)? };
            let mut out = format!("{w}\n");
            let walk = christoffel::ChristoffelPath::from_word(&w);
            if path {
                out.push_str(&walk.to_text());
            }
            if let Some(file) = svg {
                std::fs::write(&file, walk.to_svg())
                    .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", file.display())))?;
            }
            Ok(Output::ok(out))
        }
        Command::BasisTest { u, v, oracle, trace } => {
            let (u, v) = words(&u, &v)?;
            let verdict = chains::is_basis(&u, &v);
            let mut out = String::new();
            if trace {
                for step in &verdict.trace {
                    writeln!(out, "{step}").unwrap();
                }
            }
            writeln!(out, "{}", if verdict.is_basis { "BASIS" } else { "NOT-BASIS" }).unwrap();
            if oracle {
                let agrees = chains::nielsen_dehn_oracle(&u, &v);
                writeln!(out, "oracle {}", if agrees { "BASIS" } else { "NOT-BASIS" }).unwrap();
                if agrees != verdict.is_basis {
                    return Err(Error::Precondition("chain verdict and commutator oracle disagree".into()));
                }
            }
            Ok(Output::verdict(verdict.is_basis, out))
        }
        Command::Chain { u, v } => {
            let pair = WordPair::parse(&u, &v)?;
            Ok(Output::ok(match chains::maximal_chain(&pair) {
                MaximalChain::Finite(pairs) => pairs.iter().map(|p| format!("{p}\n")).collect(),
                MaximalChain::Infinite => "INFINITE\n".to_string(),
            }))
        }
        Command::Palindromize { u, v } => {
            let (u, v) = words(&u, &v)?;
            let (x, y) = chains::palindromize(&u, &v)?;
            Ok(Output::ok(format!("{x} {y}\n")))
        }
        Command::Conjugates { u, v } => {
            let (u, v) = words(&u, &v)?;
            let all = chains::conjugate_bases(&u, &v)?;
            Ok(Output::ok(all.iter().map(|(x, y)| format!("{x} {y}\n")).collect()))
        }
        Command::NormalForm { u, v } => {
            let (u, v) = words(&u, &v)?;
            let (x, y) = christoffel::christoffel_normal_form(&u, &v)?;
            Ok(Output::ok(format!("{x} {y}\n")))
        }
        Command::Primitive { w } => {
            let yes = christoffel::is_primitive(&word(&w)?);
            Ok(Output::verdict(yes, if yes { "PRIMITIVE\n" } else { "NOT-PRIMITIVE\n" }.to_string()))
        }
        Command::BraidApply { braid, word: w, omega } => {
            let element = ExtBraidElement::new(BraidWord::parse(BraidGroup::B4, &braid)?, omega)?;
            let phi = element.f_ext();
            Ok(Output::ok(match w {
                Some(w) => format!("{}\n", phi.apply(&word(&w)?)),
                None => format!("a -> {}\nb -> {}\n", phi.image_a(), phi.image_b()),
            }))
        }
        Command::BraidEq { b1, b2, mod_center } => {
            let (x, y) = (BraidWord::parse(BraidGroup::B4, &b1)?, BraidWord::parse(BraidGroup::B4, &b2)?);
            let equal = if mod_center { x.eq_mod_center(&y)? } else { x.braid_equal(&y)? };
            Ok(Output::verdict(equal, if equal { "EQUAL\n" } else { "NOT-EQUAL\n" }.to_string()))
        }
        Command::Decompose { u, v } => {
            let pair = WordPair::parse(&u, &v)?;
            let pos = chains::sturmian_position(&pair)?;
            let standard = if pos.standard.is_empty() { "1".to_string() } else { pos.standard.to_string() };
            Ok(Output::ok(format!(
                "left-end {}\nstandard {standard}\noffset {}\nconjugator {}\n",
                pos.left_end, pos.offset, pos.conjugator
            )))
        }
        Command::RelationsCheck { suite, kmax } => {
            let report = relations::verify_relation_suite(&suite, kmax)?;
            Ok(Output::verdict(report.all_passed(), format!("{report}\n")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sturmian(args: &str) -> (i32, String, String) {
        run(std::iter::once("sturmian").chain(args.split_whitespace()))
    }

    #[test]
    fn christoffel_words() {
        assert_eq!(sturmian("christoffel 5 2"), (0, "aaabaab\n".into(), String::new()));
        assert_eq!(sturmian("christoffel -5 2").1, "bAAbAAA\n");
        assert_eq!(sturmian("christoffel 2 1 --upper").1, "baa\n");
        assert_eq!(sturmian("christoffel 2 1 --path").1, "aab\n0 0\n1 0\n2 0\n2 1\n");
        assert_eq!(sturmian("christoffel 4 2").0, 2);
    }

    #[test]
    fn verdict_exit_codes() {
        assert_eq!(sturmian("basis-test abaab aba"), (0, "BASIS\n".into(), String::new()));
        assert_eq!(sturmian("basis-test a bab").0, 1);
        assert_eq!(sturmian("basis-test a x").0, 2);
        assert_eq!(sturmian("primitive aab").0, 0);
        assert_eq!(sturmian("primitive aabb").0, 1);
        assert_eq!(sturmian("braid-eq 4 \"-3\"").0, 2);
    }

    #[test]
    fn palindromes() {
        assert_eq!(sturmian("palindromize abaab aba").1, "ababa aba\n");
        assert_eq!(sturmian("palindromize ab b").0, 2);
    }

    #[test]
    fn parse_errors_are_one_line() {
        let (code, out, err) = sturmian("frobnicate");
        assert_eq!((code, out.as_str()), (2, ""));
        assert_eq!(err.lines().count(), 1);
    }
}
