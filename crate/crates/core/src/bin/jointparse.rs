use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use jointparse::bench::{BenchConfig, Bucket};
use jointparse::cli::{cmd_bench, cmd_convert, cmd_decode, cmd_eval, ConvertDirection, EvalKind};
use jointparse::decode::Algorithm;

#[derive(Parser)]
#[command(
    name = "jointparse",
    version,
    about = "Joint constituency/dependency decoders over score charts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decode every chart of a chart file.
    Decode {
        #[arg(long)]
        algo: Algorithm,
        charts: PathBuf,
        /// Constituent trees, PTB format.
        #[arg(long = "const")]
        const_out: Option<PathBuf>,
        /// Dependency trees, CoNLL format.
        #[arg(long = "dep")]
        dep_out: Option<PathBuf>,
    },
    /// Time decoders on seeded random charts.
    Bench {
        /// Comma-separated buckets, each `n` or `lo-hi`.
        #[arg(long, value_delimiter = ',', default_value = "27,50,100")]
        buckets: Vec<Bucket>,
        #[arg(long, default_value_t = 50)]
        sentences: usize,
        #[arg(long, value_delimiter = ',', default_value = "hpsg,h3n")]
        algos: Vec<Algorithm>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Run hpsg on buckets longer than 150 words.
        #[arg(long)]
        force: bool,
    },
    /// Convert between dependency and constituent treebanks.
    Convert {
        direction: Direction,
        input: PathBuf,
        output: PathBuf,
        /// Head-rule file, required for c2d.
        #[arg(long)]
        rules: Option<PathBuf>,
    },
    /// Score predictions against gold.
    Eval {
        kind: Kind,
        pred: PathBuf,
        gold: PathBuf,
        /// Comma-separated punctuation tags, `\,` for a comma.
        #[arg(long)]
        punct: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    D2c,
    C2d,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Const,
    Dep,
    Headlvl,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    let result = match cli.command {
        Command::Decode {
            algo,
            charts,
            const_out,
            dep_out,
        } => cmd_decode(
            algo,
            &charts,
            const_out.as_deref(),
            dep_out.as_deref(),
            &mut out,
        ),
        Command::Bench {
            buckets,
            sentences,
            algos,
            seed,
            repeats,
            threads,
            force,
        } => cmd_bench(
            &BenchConfig {
                buckets,
                sentences,
                algos,
                seed,
                repeats,
                threads,
                force,
            },
            &mut out,
        ),
        Command::Convert {
            direction,
            input,
            output,
            rules,
        } => {
            let d = match direction {
                Direction::D2c => ConvertDirection::DepToConst,
                Direction::C2d => ConvertDirection::ConstToDep,
            };
            cmd_convert(d, &input, &output, rules.as_deref())
        }
        Command::Eval {
            kind,
            pred,
            gold,
            punct,
        } => {
            let k = match kind {
                Kind::Const => EvalKind::Const,
                Kind::Dep => EvalKind::Dep,
                Kind::Headlvl => EvalKind::HeadLevel,
            };
            cmd_eval(k, &pred, &gold, punct.as_deref(), &mut out)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::FAILURE
        }
    }
}
