//! Command line front end. [`run`] returns the exit code and output instead
//! of printing, so the binary stays a thin wrapper.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::braid::{braid_perm, garside_nf, BraidWord};
use crate::dihedral::DihedralOracle;
use crate::error::{ArtinError, Result};
use crate::harness::{run_report, Budgets, ReportConfig};
use crate::morphisms::{
    abelianization, catalog, has_rank2_abelianization, verify_morphism, GroupRef,
    OracleConfig,
};
use crate::presentations::{parse_word, ArtinType};
use crate::transvections::{
    comm_sequence, is_automorphism, tv_apply, tv_structure, zeta_exponent, Transvection, TvParam,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "artin", version, about = "Word problems, morphisms and transvections in Artin groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether two words are equal.
    Eq {
        #[arg(long = "type", value_name = "TAG")]
        group: GroupRef,
        #[arg(allow_hyphen_values = true)]
        word1: String,
        #[arg(allow_hyphen_values = true)]
        word2: String,
    },
    /// Left normal form in A:n or I2:m.
    Nf {
        #[arg(long = "type", value_name = "TAG")]
        group: ArtinType,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Length and abelianized image.
    Len {
        #[arg(long = "type", value_name = "TAG")]
        group: ArtinType,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Permutation induced by a braid, in cycle notation.
    Perm {
        #[arg(long = "type", value_name = "TAG")]
        group: ArtinType,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Check a catalog map against every defining relation.
    Verify {
        #[arg(long)]
        morphism: String,
        #[arg(long, visible_alias = "m")]
        n: u32,
    },
    /// Transvection data, or the commensurator sequence.
    Tv(TvArgs),
    /// Run the full verification report.
    Report(ReportArgs),
}

#[derive(Debug, Args)]
struct TvArgs {
    #[arg(long = "type", value_name = "TAG", required_unless_present = "comm_seq")]
    group: Option<ArtinType>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    /// Word to push through the transvection.
    #[arg(long, allow_hyphen_values = true)]
    apply: Option<String>,
    /// `d count`: the first `count` terms for modulus `d`.
    #[arg(long, num_args = 2, value_names = ["D", "COUNT"], conflicts_with_all = ["group", "p", "q", "m", "apply"])]
    comm_seq: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct ReportArgs {
    #[arg(long, value_delimiter = ',', default_value = "3")]
    ranks: Vec<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    word_length: Option<usize>,
    #[arg(long)]
    letter_budget: Option<usize>,
}

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

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(o) => o,
        Err(e) => Outcome {
            code: if e.is_usage() { EXIT_USAGE } else { EXIT_FAIL },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Eq { group, word1, word2 } => {
            let u = parse_word(&word1, group.rank())?;
            let v = parse_word(&word2, group.rank())?;
            let oracle = group.oracle(&OracleConfig::default())?;
            let verdict = if oracle.equal(&u, &v)? { "equal" } else { "not equal" };
            Ok(Outcome::ok(format!("{verdict}\n")))
        }
        Command::Nf { group, word } => {
            let w = parse_word(&word, group.rank())?;
            let nf = match group {
                ArtinType::A(n) => garside_nf(&BraidWord::new(n, w)?).to_string(),
                ArtinType::I2(m) => DihedralOracle::new(m)?.normal_form(&w)?.to_string(),
                other => {
                    return Err(ArtinError::OutOfRange(format!(
                        "nf works in A:n and I2:m, not {other}"
                    )))
                }
            };
            Ok(Outcome::ok(format!("{nf}\n")))
        }
        Command::Len { group, word } => {
            let w = parse_word(&word, group.rank())?;
            let mut out = format!("{}\n", w.exponent_sum());
            if has_rank2_abelianization(group) {
                out.push_str(&format!("abelianized: {}\n", abelianization(group, &w)));
            }
            Ok(Outcome::ok(out))
        }
        Command::Perm { group, word } => {
            let ArtinType::A(n) = group else {
                return Err(ArtinError::OutOfRange(format!("perm works in A:n, not {group}")));
            };
            let w = parse_word(&word, n)?;
            Ok(Outcome::ok(format!("{}\n", braid_perm(&BraidWord::new(n, w)?))))
        }
        Command::Verify { morphism, n } => {
            let f = catalog::catalog(&morphism, n)?;
            let r = verify_morphism(&f)?;
            if r.ok {
                Ok(Outcome::ok(format!("ok ({} relations checked)\n", r.checked)))
            } else {
                Ok(Outcome {
                    code: EXIT_FAIL,
                    stdout: format!(
                        "fail: relations {:?} of {} do not hold\n",
                        r.failures, r.checked
                    ),
                    stderr: String::new(),
                })
            }
        }
        Command::Tv(args) => tv(args),
        Command::Report(args) => report(args),
    }
}

fn tv(args: TvArgs) -> Result<Outcome> {
    if let Some(dc) = args.comm_seq {
        let count = usize::try_from(dc[1])
            .map_err(|_| ArtinError::OutOfRange(format!("count {} is negative", dc[1])))?;
        let seq = comm_sequence(dc[0], count)?;
        let lines: Vec<String> = seq.iter().map(ToString::to_string).collect();
        return Ok(Outcome::ok(format!("{}\n", lines.join("\n"))));
    }
    let group = args.group.expect("clap enforces --type without --comm-seq");
    let param = match (args.p, args.q, args.m) {
        (Some(p), Some(q), None) => TvParam::Pair(p, q),
        (None, None, Some(m)) => TvParam::Single(m),
        _ => {
            return Err(ArtinError::OutOfRange(
                "give either --p and --q, or --m".into(),
            ))
        }
    };
    let t = Transvection::new(group, param)?;
    let k = zeta_exponent(&t)?;
    let mut out = format!(
        "{t}\nk = {k}\nautomorphism: {}\nTv({group}): {}\n",
        if is_automorphism(&t)? { "yes" } else { "no" },
        tv_structure(group)?
    );
    if let Some(word) = args.apply {
        let w = parse_word(&word, group.rank())?;
        out.push_str(&format!("image: {}\n", tv_apply(&t, &w)?));
    }
    Ok(Outcome::ok(out))
}

fn report(args: ReportArgs) -> Result<Outcome> {
    let defaults = Budgets::default();
    let config = ReportConfig {
        ranks: args.ranks,
        seed: args.seed,
        budgets: Budgets {
            word_length: args.word_length.unwrap_or(defaults.word_length),
            letter_budget: args.letter_budget.unwrap_or(defaults.letter_budget),
            ..defaults
        },
    };
    let r = run_report(&config)?;
    let body = match args.format {
        Format::Text => r.to_text(),
        Format::Json => r.to_json() + "\n",
    };
    let code = if r.all_pass() { EXIT_OK } else { EXIT_FAIL };
    let stdout = match args.out {
        Some(path) => {
            std::fs::write(&path, &body).map_err(|e| {
                ArtinError::OutOfRange(format!("cannot write {}: {e}", path.display()))
            })?;
            let s = r.summary;
            format!(
                "{} pass, {} fail, {} skipped; written to {}\n",
                s.pass,
                s.fail,
                s.skipped,
                path.display()
            )
        }
        None => body,
    };
    Ok(Outcome {
        code,
        stdout,
        stderr: String::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Outcome {
        run(std::iter::once("artin").chain(args.iter().copied()))
    }

    #[test]
    fn equality_verdicts() {
        let o = call(&["eq", "--type", "A:3", "1 2 1", "2 1 2"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "equal\n"));
        let o = call(&["eq", "--type", "A:3/Z", "1", "2"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "not equal\n"));
        let o = call(&["eq", "--type", "A:3", "-1 -2", "-2 -1"]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "not equal\n"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["eq", "--type", "Q:3", "1", "2"]).code, 2);
        assert_eq!(call(&["eq", "--type", "A:3", "1 x", "2"]).code, 2);
        assert_eq!(call(&["eq", "--type", "A:3", "7", "2"]).code, 2);
        assert_eq!(call(&["frobnicate"]).code, 2);
        assert_eq!(call(&["tv", "--type", "B:3", "--m", "1"]).code, 2);
    }

    #[test]
    fn negative_values_are_accepted_as_numbers() {
        let o = call(&["tv", "--type", "B:3", "--p", "1", "--q", "-2", "--apply", "-3"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stdout.contains("k = 1\n"));
        assert!(o.stdout.contains("automorphism: yes"));
    }
}
