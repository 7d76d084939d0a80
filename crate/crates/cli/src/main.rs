//! Command-line frontend for the plactic library.
//!
//! Exit codes: 0 on success (including "not central" answers), 1 when
//! a `verify` suite reports failures, 2 on parse/validation errors
//! (with a one-line diagnostic on stderr).

use std::fmt;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use plactic::braiding::{
    assoc_braided_set, col_braided_set, column_factorization, decorated_braided_set,
    row_braided_set, row_factorization, sigma_words, verify_braided_set,
    verify_monoid_compat, verify_observations, BraidKind, VerifyOptions,
};
use plactic::cohomology::{
    betti_numbers, cup_cochain, xi_cochain, Character, Cochain, CriticalComplex,
};
use plactic::crystal::{s_tableau, s_word, verify_crystal, verify_crystal_action};
use plactic::error::{Error, Result};
use plactic::field::{PrimeField, Rationals};
use plactic::plactic::is_central;
use plactic::tableau::{tableau_of_word, Tableau};
use plactic::word::{Column, Word};
use plactic::VerifyReport;

#[derive(Parser)]
#[command(
    name = "plactic",
    version,
    about = "Young tableaux, plactic braidings, and braided cohomology"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindChoice {
    Row,
    Col,
}

impl From<KindChoice> for BraidKind {
    fn from(choice: KindChoice) -> BraidKind {
        match choice {
            KindChoice::Row => BraidKind::Row,
            KindChoice::Col => BraidKind::Col,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SideChoice {
    Right,
    Left,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetChoice {
    /// Columns under the column braiding.
    Col,
    /// Bounded-length rows under the row braiding.
    Row,
    /// Tableaux under the product braiding (v, w) -> (e, v*w).
    Assoc,
    /// Decorated tableaux under the row braiding.
    DecoratedRow,
    /// Decorated tableaux under the column braiding.
    DecoratedCol,
}

#[derive(Subcommand)]
enum Command {
    /// Insert a word letter by letter into the empty tableau.
    Tableau {
        /// Letters, compact ("2113") or space-separated ("2 1 1 3").
        #[arg(required = true)]
        word: Vec<String>,
    },
    /// Insert letters into an existing tableau.
    Insert {
        /// Insertion side: right (bottom-row bumping) or left
        /// (first-column bumping).
        #[arg(long, value_enum, default_value = "right")]
        side: SideChoice,
        /// Letters to insert, in order (quote space-separated forms).
        letters: String,
        /// Tableau, rows top to bottom joined by "/" ("e" when empty).
        tableau: String,
    },
    /// Multiply two tableaux.
    Product {
        /// Left factor, as a tableau serialization.
        left: String,
        /// Right factor, as a tableau serialization.
        right: String,
    },
    /// Factor a word into the columns (or rows) of its tableau via the
    /// half-twist normal form.
    NormalForm {
        #[arg(long, value_enum, default_value = "col")]
        kind: KindChoice,
        #[arg(required = true)]
        word: Vec<String>,
    },
    /// Apply the row or column braiding to a pair.
    Sigma {
        #[arg(long, value_enum)]
        kind: KindChoice,
        /// First operand (a row or column, as a word).
        left: String,
        /// Second operand.
        right: String,
    },
    /// Apply a reflection operator to a word or tableau.
    SOp {
        /// Which reflection, 1-based: swaps letters i and i+1.
        index: u32,
        /// Alphabet size; inferred from the input when omitted.
        #[arg(long)]
        n: Option<u32>,
        /// Treat the input as a tableau serialization instead of a word.
        #[arg(long)]
        on_tableau: bool,
        /// The word (or tableau, with --on-tableau).
        #[arg(required = true)]
        input: Vec<String>,
    },
    /// Run an exhaustive verification suite and print its JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteChoice,
        /// Alphabet size.
        #[arg(long, default_value_t = 2)]
        n: u32,
        /// Length bound for words/rows in the domain (per-suite default).
        #[arg(long)]
        max_len: Option<usize>,
        /// Decoration bound for decorated domains.
        #[arg(long, default_value_t = 1)]
        alpha_max: u32,
        /// Tuple width for the commute suite.
        #[arg(long, default_value_t = 2)]
        width: usize,
        /// Domain for the braided-set suites (ybe, idempotent, pseudo-unit).
        #[arg(long, value_enum, default_value = "col")]
        set: SetChoice,
        /// Braiding for observations/monoid/commute (per-suite default).
        #[arg(long, value_enum)]
        kind: Option<KindChoice>,
    },
    /// Betti numbers of the critical complex, as JSON.
    Betti {
        /// Alphabet size (at most 4).
        #[arg(long)]
        n: u32,
        /// Highest cohomological degree reported.
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        /// Character: "eps0", "eps1", or per-letter values "2,0,1".
        #[arg(long, default_value = "eps0")]
        character: String,
        /// Coefficients: "Q" for the rationals or "GFp:<p>" for a prime field.
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Cup product of two cochains, as JSON.
    Cup {
        /// Alphabet size (at most 4).
        #[arg(long)]
        n: u32,
        /// First factor: "xi:<letter>" or "f:<col>,<col>,...".
        left: String,
        /// Second factor, same syntax.
        right: String,
    },
    /// Decide whether a word is central in the plactic monoid.
    Center {
        /// Alphabet size.
        #[arg(long)]
        n: u32,
        #[arg(required = true)]
        word: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteChoice {
    /// Yang-Baxter equation on all triples of the chosen domain.
    Ybe,
    /// Idempotency of the braiding on all pairs.
    Idempotent,
    /// Pseudo-unit axioms (unit outputs; dropping a unit keeps normality).
    PseudoUnit,
    /// All braided-set axioms at once.
    Braiding,
    /// Structural observations about the braiding outputs.
    Observations,
    /// Compatibility of the decorated braidings with the product.
    Monoid,
    /// Reflection-operator laws on all words up to a length.
    Crystal,
    /// The reflection action commutes with braid-word rearrangements.
    Commute,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

/// Prints a line, ignoring a closed stdout (e.g. when piped into `head`).
fn emit(line: impl fmt::Display) {
    let _ = writeln!(std::io::stdout(), "{line}");
}

fn parse_word(parts: &[String]) -> Result<Word> {
    parts.join(" ").parse()
}

fn parse_tableau(s: &str) -> Result<Tableau> {
    s.parse()
}

fn print_tableau(t: &Tableau) {
    emit(t);
    emit(format_args!("shape: {}", t.shape()));
}

/// Caps that keep exhaustive suites from being launched on domains
/// far beyond what they are meant for.
fn check_suite_bounds(n: u32, max_len: usize, width: usize) -> Result<()> {
    if n > 6 {
        return Err(Error::ResourceLimit(format!("alphabet size {n} exceeds the CLI cap 6")));
    }
    if max_len > 12 {
        return Err(Error::ResourceLimit(format!(
            "length bound {max_len} exceeds the CLI cap 12"
        )));
    }
    if width > 4 {
        return Err(Error::ResourceLimit(format!("tuple width {width} exceeds the CLI cap 4")));
    }
    Ok(())
}

fn parse_character(s: &str, n: u32) -> Result<Character> {
    match s {
        "eps0" => Ok(Character::Zero),
        "eps1" => Ok(Character::One),
        _ => {
            let values = s
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad character value \"{tok}\"")))
                })
                .collect::<Result<Vec<i64>>>()?;
            if values.len() != n as usize {
                return Err(Error::Parse(format!(
                    "character lists {} values for {n} letters",
                    values.len()
                )));
            }
            Ok(Character::Letters(values))
        }
    }
}

/// Smallest alphabet on which `s_index` acts and the letters fit.
fn alphabet_for(letters: &[plactic::word::Letter], index: u32) -> u32 {
    letters
        .iter()
        .map(|x| x.value())
        .max()
        .unwrap_or(1)
        .max(index + 1)
}

/// `None` for the rationals, `Some(p)` for GF(p); accepts "Q", "GFp:<p>",
/// or a bare modulus.
fn parse_field_spec(field: &str) -> Result<Option<u64>> {
    if field.eq_ignore_ascii_case("q") {
        return Ok(None);
    }
    let digits = field.strip_prefix("GFp:").unwrap_or(field);
    let p = digits
        .parse::<u64>()
        .map_err(|_| Error::Parse(format!("bad field \"{field}\"")))?;
    Ok(Some(p))
}

fn parse_cochain(spec: &str, n: u32) -> Result<Cochain<Rationals>> {
    let field = Rationals;
    if let Some(rest) = spec.strip_prefix("xi:") {
        let a = rest
            .parse::<u32>()
            .map_err(|_| Error::Parse(format!("bad letter \"{rest}\" in \"{spec}\"")))?;
        return xi_cochain(&field, n, a);
    }
    if let Some(rest) = spec.strip_prefix("f:") {
        let tuple = rest
            .split(',')
            .map(|tok| tok.trim().parse::<Column>())
            .collect::<Result<Vec<Column>>>()?;
        for c in &tuple {
            if let Some(&x) = c.letters().iter().find(|x| x.value() > n) {
                return Err(Error::LetterOutOfRange { letter: x.value(), bound: n });
            }
        }
        return Ok(Cochain::indicator(&field, tuple));
    }
    Err(Error::Parse(format!(
        "cochain spec \"{spec}\" must be \"xi:<letter>\" or \"f:<col>,<col>,...\""
    )))
}

fn finish_report(report: &VerifyReport) -> ExitCode {
    emit(report.to_json());
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Tableau { word } => {
            let w = parse_word(&word)?;
            print_tableau(&tableau_of_word(&w));
            Ok(ExitCode::SUCCESS)
        }
        Command::Insert { side, letters, tableau } => {
            let mut t = parse_tableau(&tableau)?;
            let w: Word = letters.parse()?;
            for &x in w.letters() {
                t = match side {
                    SideChoice::Right => t.insert_right(x),
                    SideChoice::Left => t.insert_left(x),
                };
            }
            print_tableau(&t);
            Ok(ExitCode::SUCCESS)
        }
        Command::Product { left, right } => {
            let lhs = parse_tableau(&left)?;
            let rhs = parse_tableau(&right)?;
            print_tableau(&lhs.product(&rhs));
            Ok(ExitCode::SUCCESS)
        }
        Command::NormalForm { kind, word } => {
            let w = parse_word(&word)?;
            let parts: Vec<String> = match kind {
                KindChoice::Col => {
                    column_factorization(&w).iter().map(ToString::to_string).collect()
                }
                KindChoice::Row => {
                    row_factorization(&w).iter().map(ToString::to_string).collect()
                }
            };
            emit(serde_json::to_string(&parts).expect("strings serialize"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sigma { kind, left, right } => {
            let u: Word = left.parse()?;
            let v: Word = right.parse()?;
            let (a, b) = sigma_words(kind.into(), &u, &v)?;
            emit(format_args!("(\"{a}\", \"{b}\")"));
            Ok(ExitCode::SUCCESS)
        }
        Command::SOp { index, n, on_tableau, input } => {
            if on_tableau {
                let t = parse_tableau(&input.join(" "))?;
                let n = n.unwrap_or_else(|| alphabet_for(t.row_reading().letters(), index));
                print_tableau(&s_tableau(&t, index, n)?);
            } else {
                let w = parse_word(&input)?;
                let n = n.unwrap_or_else(|| alphabet_for(w.letters(), index));
                emit(s_word(&w, index, n)?);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, n, max_len, alpha_max, width, set, kind } => {
            run_verify(suite, n, max_len, alpha_max, width, set, kind)
        }
        Command::Betti { n, kmax, character, field } => {
            let character = parse_character(&character, n)?;
            if kmax > 8 {
                return Err(Error::ResourceLimit(format!(
                    "degree bound {kmax} exceeds the CLI cap 8"
                )));
            }
            let report = match parse_field_spec(&field)? {
                None => betti_numbers(&Rationals, n, kmax, &character)?,
                Some(p) => betti_numbers(&PrimeField::new(p)?, n, kmax, &character)?,
            };
            emit(report.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Cup { n, left, right } => {
            let f = Rationals;
            let lhs = parse_cochain(&left, n)?;
            let rhs = parse_cochain(&right, n)?;
            let degree = lhs.degree() + rhs.degree();
            let complex = CriticalComplex::build(n, degree)?;
            let product = cup_cochain(&f, &complex, &lhs, &rhs)?;
            let terms: Vec<serde_json::Value> = product
                .sorted_entries()
                .iter()
                .map(|(tuple, value)| {
                    json!({
                        "tuple": tuple.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "value": value.to_string(),
                    })
                })
                .collect();
            let out = json!({ "n": n, "degree": degree, "terms": terms });
            emit(serde_json::to_string_pretty(&out).expect("report serializes"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Center { n, word } => {
            let w = parse_word(&word)?;
            if is_central(&w, n)? {
                emit("central");
            } else {
                emit("not central");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Runs the full braided-set suite on the chosen domain, then keeps
/// only the checks the named sub-suite asks about.
fn braided_set_report(
    suite: SuiteChoice,
    set: SetChoice,
    n: u32,
    max_len: usize,
    alpha_max: u32,
) -> VerifyReport {
    let options = VerifyOptions::default();
    let full = match set {
        SetChoice::Col => verify_braided_set(&col_braided_set(n), options),
        SetChoice::Row => verify_braided_set(&row_braided_set(n, max_len), options),
        SetChoice::Assoc => verify_braided_set(&assoc_braided_set(n, max_len), options),
        SetChoice::DecoratedRow => verify_braided_set(
            &decorated_braided_set(BraidKind::Row, n, max_len, alpha_max),
            options,
        ),
        SetChoice::DecoratedCol => verify_braided_set(
            &decorated_braided_set(BraidKind::Col, n, max_len, alpha_max),
            options,
        ),
    };
    let (label, wanted): (&str, &[&str]) = match suite {
        SuiteChoice::Ybe => ("ybe", &["yang_baxter"]),
        SuiteChoice::Idempotent => ("idempotent", &["idempotent"]),
        SuiteChoice::PseudoUnit => {
            ("pseudo-unit", &["unit_outputs", "unit_drop_keeps_normal"])
        }
        _ => return full,
    };
    let checks = full
        .checks
        .into_iter()
        .filter(|c| wanted.contains(&c.name.as_str()))
        .collect();
    VerifyReport::new(format!("{label} over {}", full.suite), checks)
}

fn run_verify(
    suite: SuiteChoice,
    n: u32,
    max_len: Option<usize>,
    alpha_max: u32,
    width: usize,
    set: SetChoice,
    kind: Option<KindChoice>,
) -> Result<ExitCode> {
    let report = match suite {
        SuiteChoice::Ybe
        | SuiteChoice::Idempotent
        | SuiteChoice::PseudoUnit
        | SuiteChoice::Braiding => {
            let max_len = max_len.unwrap_or(2);
            check_suite_bounds(n, max_len, 0)?;
            braided_set_report(suite, set, n, max_len, alpha_max)
        }
        SuiteChoice::Observations => {
            let max_len = max_len.unwrap_or(3);
            check_suite_bounds(n, max_len, 0)?;
            let kind = kind.map_or(BraidKind::Col, Into::into);
            verify_observations(kind, n, max_len)
        }
        SuiteChoice::Monoid => {
            let max_len = max_len.unwrap_or(1);
            check_suite_bounds(n, max_len, 0)?;
            let kind = kind.map_or(BraidKind::Row, Into::into);
            verify_monoid_compat(kind, n, max_len, alpha_max)
        }
        SuiteChoice::Crystal => {
            let max_len = max_len.unwrap_or(6);
            check_suite_bounds(n, max_len, 0)?;
            verify_crystal(n, max_len)
        }
        SuiteChoice::Commute => {
            let max_len = max_len.unwrap_or(1);
            check_suite_bounds(n, max_len, width)?;
            let kind = kind.map_or(BraidKind::Row, Into::into);
            verify_crystal_action(kind, n, max_len, alpha_max, width)
        }
    };
    Ok(finish_report(&report))
}
