//! The `fc-dyck` command line, as a library so it can be driven from tests.

use clap::{Parser, Subcommand, ValueEnum};
use fc_dyck_core::dyck::{render_ascii, render_svg};
use fc_dyck_core::{
    canonical_form_of, component_of, dimension, enumerate_fc, phi, psi, sweep, t_table, DyckPath,
    Error, HeightGuard, Quiver, Word,
};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "fc-dyck", version, about = "Fully commutative elements of type A and Dyck paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Items {
    Words,
    Paths,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rows 0..=N of the T(n, k) triangle.
    Table { n: usize },
    /// Fully commutative elements of a given rank and length.
    Enumerate {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        length: usize,
        #[arg(long = "as", value_enum, default_value = "words")]
        items: Items,
    },
    /// Dyck path of a fully commutative element.
    PathOf {
        #[arg(long)]
        word: String,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Canonical word read off a Dyck path.
    WordOf { path: String },
    /// Homogeneous component containing a word.
    Component {
        #[arg(long)]
        word: String,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Dimension of the homogeneous module of a path or word.
    Dim {
        path: Option<String>,
        #[arg(long, conflicts_with = "path")]
        word: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Check the KLR relations on every homogeneous module of a rank.
    Verify {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        height: usize,
        /// `forward`, `backward`, or one `>`/`<` per edge.
        #[arg(long, default_value = "forward")]
        orientation: String,
    },
    /// Draw a Dyck path as ASCII art or SVG.
    Render {
        path: String,
        #[arg(long)]
        svg: bool,
    },
}

/// Output of one invocation. String payloads are printed verbatim, anything
/// else as compact JSON.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub payload: Value,
    pub exit_code: i32,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        CommandResult { payload, exit_code: 0 }
    }

    fn error(code: &str, message: String, exit_code: i32) -> Self {
        CommandResult {
            payload: json!({ "error": { "code": code, "message": message } }),
            exit_code,
        }
    }

    pub fn is_error(&self) -> bool {
        self.payload.get("error").is_some()
    }

    /// Text for standard output, newline-terminated.
    pub fn stdout(&self) -> String {
        let mut s = match &self.payload {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
    /// A verification sweep ran but something failed; carries the report.
    Relations(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult::ok(Value::String(e.to_string())),
                _ => CommandResult::error("UsageError", e.to_string().trim().to_string(), 2),
            };
        }
    };
    match execute(cli.command) {
        Ok(payload) => CommandResult::ok(payload),
        Err(Failure::Usage(msg)) => CommandResult::error("UsageError", msg, 2),
        Err(Failure::Domain(e)) => CommandResult::error(e.code(), e.to_string(), 1),
        Err(Failure::Relations(report)) => {
            let mut r = CommandResult::error("RelationFailure", "a relation check failed".into(), 1);
            r.payload["report"] = report;
            r
        }
    }
}

/// Accepts `[3,2,1]`, `3,2,1`, `321` (ranks below 10), or the
/// `{"word": [...], "rank": n}` object printed by `word-of`.
fn parse_word(text: &str, rank: Option<usize>) -> Result<Word, Failure> {
    let text = text.trim();
    if text.starts_with('{') {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let rank = rank
            .or_else(|| v.get("rank").and_then(Value::as_u64).map(|r| r as usize))
            .ok_or_else(|| Failure::Usage("--rank is required".into()))?;
        let letters = v.get("word").ok_or_else(|| Error::Parse("missing \"word\"".into()))?;
        return Ok(Word::from_json(&letters.to_string(), rank)?);
    }
    let rank = rank.ok_or_else(|| Failure::Usage("--rank is required".into()))?;
    if text.starts_with('[') {
        return Ok(Word::from_json(text, rank)?);
    }
    let letters: Vec<usize> = if text.contains(',') {
        text.split(',')
            .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
            .collect::<Result<_, _>>()?
    } else {
        text.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad letter {c:?}"))))
            .collect::<Result<_, _>>()?
    };
    Ok(Word::new(rank, letters)?)
}

/// Accepts a `U`/`D` string or the `{"steps": "..."}` object printed by
/// `path-of`.
fn parse_path(text: &str) -> Result<DyckPath, Failure> {
    let text = text.trim();
    if text.starts_with('{') {
        return Ok(serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?);
    }
    Ok(text.parse()?)
}

fn letters(w: &Word) -> Value {
    json!(w.letters())
}

fn execute(command: Command) -> Result<Value, Failure> {
    let guard = HeightGuard::from_env();
    Ok(match command {
        Command::Table { n } => {
            let rows: Vec<Vec<String>> = t_table(n)
                .into_iter()
                .map(|row| row.iter().map(ToString::to_string).collect())
                .collect();
            json!({ "rows": rows })
        }
        Command::Enumerate { rank, length, items } => {
            if rank == 0 {
                return Err(Error::InvalidRank(0).into());
            }
            let forms = enumerate_fc(rank, length);
            let items: Vec<Value> = forms
                .iter()
                .map(|c| match items {
                    Items::Words => letters(&c.to_word()),
                    Items::Paths => json!(phi(c).to_string()),
                })
                .collect();
            json!({ "rank": rank, "length": length, "count": items.len(), "items": items })
        }
        Command::PathOf { word, rank } => {
            let w = parse_word(&word, rank)?;
            let d = phi(&canonical_form_of(&w)?);
            json!({ "steps": d.to_string() })
        }
        Command::WordOf { path } => {
            let c = psi(&parse_path(&path)?)?;
            json!({ "word": letters(&c.to_word()), "rank": c.rank() })
        }
        Command::Component { word, rank } => {
            let w = parse_word(&word, rank)?;
            let comp = component_of(&w)?;
            let words: Vec<Value> = comp.words().iter().map(letters).collect();
            json!({
                "rank": comp.rank(),
                "canonical": letters(&comp.canonical().to_word()),
                "segments": comp.canonical().pairs(),
                "size": words.len(),
                "words": words,
            })
        }
        Command::Dim { path, word, rank } => {
            let d = match (path, word) {
                (Some(p), None) => parse_path(&p)?,
                (None, Some(w)) => phi(&canonical_form_of(&parse_word(&w, rank)?)?),
                _ => return Err(Failure::Usage("give a path or --word".into())),
            };
            serde_json::to_value(dimension(&d)?).expect("serializable")
        }
        Command::Verify { rank, height, orientation } => {
            if rank == 0 {
                return Err(Error::InvalidRank(0).into());
            }
            let q = Quiver::parse(rank, &orientation)?;
            let report = sweep(&q, height, guard)?;
            let mut v = serde_json::to_value(&report).expect("serializable");
            v["passed"] = json!(report.passed());
            if !report.passed() {
                return Err(Failure::Relations(v));
            }
            v
        }
        Command::Render { path, svg } => {
            let d = parse_path(&path)?;
            Value::String(if svg { render_svg(&d) } else { render_ascii(&d) })
        }
    })
}
