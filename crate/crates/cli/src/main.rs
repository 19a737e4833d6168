//! Command-line front end: treebank conversion, representation diffing,
//! and the relation-extraction experiment workflow.

mod convert_cmd;
mod diff_cmd;
mod plot;
mod relex_cmd;

use std::collections::BTreeSet;
use std::io::Read;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use bart_core::lexicon::Lexicons;
use bart_core::{ConvertConfig, Mode, SeedMode};

#[derive(Parser)]
#[command(
    name = "bart",
    version,
    about = "Convert UD treebanks to enhanced dependency graphs and evaluate them via pattern-based relation extraction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert CoNLL-U input to an enhanced representation.
    Convert(convert_cmd::ConvertArgs),
    /// Edge-level diff between two representations of the same input.
    Diff(diff_cmd::DiffArgs),
    /// Relation-extraction workflow: acquire, filter, eval, economy.
    #[command(subcommand)]
    Relex(relex_cmd::RelexCommand),
    /// List the conversion rules with family and description.
    ListRules,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CliMode {
    Ud,
    Eud,
    Bart,
    #[value(name = "bart-no-eud")]
    BartNoEud,
}

impl From<CliMode> for Mode {
    fn from(m: CliMode) -> Mode {
        match m {
            CliMode::Ud => Mode::Ud,
            CliMode::Eud => Mode::Eud,
            CliMode::Bart => Mode::Bart,
            CliMode::BartNoEud => Mode::BartNoEud,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CliSeed {
    /// Seed the enhanced layer from DEPS when present, else from the tree.
    Auto,
    Basic,
    Deps,
}

impl From<CliSeed> for SeedMode {
    fn from(s: CliSeed) -> SeedMode {
        match s {
            CliSeed::Auto => SeedMode::Auto,
            CliSeed::Basic => SeedMode::Basic,
            CliSeed::Deps => SeedMode::Deps,
        }
    }
}

/// Conversion options shared by convert, diff and relex.
#[derive(Args, Clone)]
pub struct ConversionOpts {
    /// Enhancement preset.
    #[arg(long, value_enum)]
    mode: Option<CliMode>,
    /// Enable a rule id on top of the mode preset (repeatable).
    #[arg(long, value_name = "RULE-ID")]
    enable: Vec<String>,
    /// Disable a rule id (repeatable, wins over --enable).
    #[arg(long, value_name = "RULE-ID")]
    disable: Vec<String>,
    /// Rewire copular clauses onto the copula instead of a STATE node.
    #[arg(long)]
    no_state_node: bool,
    /// Fixpoint iteration cap.
    #[arg(long, value_name = "N")]
    iterations: Option<u32>,
    /// Directory with lexicon overrides (falls back per file to built-ins;
    /// BART_LEXICON_DIR is the default).
    #[arg(long, value_name = "PATH")]
    lexicon_dir: Option<PathBuf>,
    /// Normalize UD v2 labels (obj, obl, nsubj:pass, ...) to the v1
    /// inventory before converting.
    #[arg(long)]
    v2_labels: bool,
    /// Optional TOML file with the same options; flags override it.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
}

/// TOML mirror of the command-line options.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    mode: Option<String>,
    enable: Option<Vec<String>>,
    disable: Option<Vec<String>>,
    no_state_node: Option<bool>,
    iterations: Option<u32>,
    lexicon_dir: Option<PathBuf>,
    v2_labels: Option<bool>,
    lenient: Option<bool>,
    seed: Option<String>,
    jobs: Option<usize>,
}

pub struct Resolved {
    pub config: ConvertConfig,
    pub v2_labels: bool,
    pub lenient: Option<bool>,
    pub seed: Option<SeedMode>,
    pub jobs: Option<usize>,
}

impl ConversionOpts {
    /// Merges config file, environment and flags into a ConvertConfig
    /// (flags win over the file, the file over built-in defaults).
    pub fn resolve(&self, default_mode: Mode) -> Result<Resolved> {
        let file: FileConfig = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("cannot read config {}", path.display()))?;
                toml::from_str(&text)
                    .with_context(|| format!("cannot parse config {}", path.display()))?
            }
            None => FileConfig::default(),
        };

        let mode = match (&self.mode, &file.mode) {
            (Some(m), _) => (*m).into(),
            (None, Some(name)) => {
                Mode::parse(name).with_context(|| format!("unknown mode `{}` in config", name))?
            }
            (None, None) => default_mode,
        };

        let mut enable: BTreeSet<String> = file.enable.unwrap_or_default().into_iter().collect();
        enable.extend(self.enable.iter().cloned());
        let mut disable: BTreeSet<String> = file.disable.unwrap_or_default().into_iter().collect();
        disable.extend(self.disable.iter().cloned());

        let lexicon_dir = self
            .lexicon_dir
            .clone()
            .or(file.lexicon_dir)
            .or_else(|| std::env::var_os("BART_LEXICON_DIR").map(PathBuf::from));
        let lexicons = match &lexicon_dir {
            Some(dir) => Lexicons::from_dir(dir)
                .with_context(|| format!("cannot load lexicons from {}", dir.display()))?,
            None => Lexicons::default(),
        };

        let config = ConvertConfig {
            mode,
            enable,
            disable,
            copula_as_head: self.no_state_node || file.no_state_node.unwrap_or(false),
            iteration_cap: self.iterations.or(file.iterations).unwrap_or(3),
            lexicons,
        };
        let unknown = config.unknown_rule_ids();
        if !unknown.is_empty() {
            bail!("unknown rule id(s): {}", unknown.join(", "));
        }

        let seed = match file.seed.as_deref() {
            None => None,
            Some("auto") => Some(SeedMode::Auto),
            Some("basic") => Some(SeedMode::Basic),
            Some("deps") => Some(SeedMode::Deps),
            Some(other) => bail!("unknown seed `{}` in config", other),
        };
        Ok(Resolved {
            config,
            v2_labels: self.v2_labels || file.v2_labels.unwrap_or(false),
            lenient: file.lenient,
            seed,
            jobs: file.jobs,
        })
    }
}

/// Reads a file argument, or standard input for `-`/absent.
pub fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .context("cannot read standard input")?;
            Ok(buffer)
        }
    }
}

pub fn write_output(path: &Option<PathBuf>, data: &str) -> Result<()> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::write(p, data).with_context(|| format!("cannot write {}", p.display()))
        }
        _ => {
            use std::io::Write;
            std::io::stdout()
                .write_all(data.as_bytes())
                .context("cannot write standard output")
        }
    }
}

fn list_rules() {
    println!("{:<26} {:<12} description", "rule id", "family");
    for rule in bart_core::registry() {
        println!(
            "{:<26} {:<12} {}",
            rule.id,
            rule.family.name(),
            rule.description
        );
    }
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Convert(args) => convert_cmd::run(args),
        Command::Diff(args) => diff_cmd::run(args),
        Command::Relex(command) => relex_cmd::run(command),
        Command::ListRules => {
            list_rules();
            Ok(())
        }
    };
    if let Err(err) = outcome {
        eprintln!("bart: {:#}", err);
        std::process::exit(1);
    }
}
