//! `toricseq`: command-line front end for the fan spectral sequence.
//!
//! Exit codes: 0 success, 1 bad input or invalid fan, 2 broken internal
//! invariant (a sign or orientation bug).

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use toricseq_core::spectral::{Mode, SpectralSequence};
use toricseq_core::{builtin, Error, Fan, FanDocument};

mod render;

use render::{input_failure, Failure, Format, Rendered};

#[derive(Parser)]
#[command(
    name = "toricseq",
    version,
    about = "Čech resolutions and spectral sequences of complete toric varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a fan document against the fan axioms and completeness
    Validate(FanArgs),
    /// The Čech complex: ranks, differentials, homology
    Cech(FanArgs),
    /// The flag complex K(Δ): simplex counts and reduced homology
    Flags(FanArgs),
    /// The E1 page and its differential
    E1(SpectralArgs),
    /// The integral E2 page
    E2(SpectralArgs),
    /// Ranks of rational morphic cohomology L^qH^n
    Morphic {
        #[command(flatten)]
        spectral: SpectralArgs,
        /// Largest weight q (defaults to the rank of the fan)
        #[arg(long)]
        qmax: Option<usize>,
    },
    /// Rational Betti numbers and Euler characteristic
    Betti(FanArgs),
    /// Cross-check the Čech complex against the flag complex and dual cells
    Oracle(FanArgs),
    /// Print the document of a named fan (p1, p2, p3, pK, p1xp1, hirzebruch:A, wp112)
    Builtin {
        name: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FanArgs {
    /// Fan document: a path, `-` for standard input, or `builtin:NAME`
    input: String,
    #[command(flatten)]
    output: OutputArgs,
    /// Flip cone orientations at random with this seed (testing aid)
    #[arg(long, hide = true)]
    scramble_orientations: Option<u64>,
}

#[derive(Args)]
struct SpectralArgs {
    #[command(flatten)]
    fan: FanArgs,
    #[arg(long, value_enum, default_value_t = ModeArg::Morphic)]
    mode: ModeArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Morphic,
    Singular,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Morphic => Mode::Morphic,
            ModeArg::Singular => Mode::Singular,
        }
    }
}

fn read_document(input: &str) -> Result<FanDocument, Failure> {
    if let Some(name) = input.strip_prefix("builtin:") {
        return Ok(builtin(name)?);
    }
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input_failure(format!("cannot read standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(input).map_err(|e| input_failure(format!("cannot read {input}: {e}")))?
    };
    Ok(FanDocument::from_json(&text)?)
}

fn load_fan(args: &FanArgs) -> Result<Fan, Failure> {
    let fan = read_document(&args.input)?.to_fan()?;
    Ok(match args.scramble_orientations {
        Some(seed) => fan.scrambled(&mut ChaCha8Rng::seed_from_u64(seed)),
        None => fan,
    })
}

fn run(command: &Command) -> Result<(Rendered, Option<&PathBuf>), Failure> {
    let (rendered, out) = match command {
        Command::Validate(a) => {
            let doc = read_document(&a.input)?;
            let built = match doc.build() {
                Ok(fan) => Ok(fan),
                Err(Error::InvalidFan(report)) => Err(report),
                Err(e) => return Err(e.into()),
            };
            (
                render::validation(doc.rank, &built, a.output.format.into()),
                &a.output.out,
            )
        }
        Command::Cech(a) => (render::cech(&load_fan(a)?, a.output.format.into()), &a.output.out),
        Command::Flags(a) => (render::flags(&load_fan(a)?, a.output.format.into()), &a.output.out),
        Command::E1(a) => {
            let ss = SpectralSequence::compute(&load_fan(&a.fan)?, a.mode.into())?;
            (render::e1(&ss, a.fan.output.format.into()), &a.fan.output.out)
        }
        Command::E2(a) => {
            let ss = SpectralSequence::compute(&load_fan(&a.fan)?, a.mode.into())?;
            (render::e2(&ss, a.fan.output.format.into()), &a.fan.output.out)
        }
        Command::Morphic { spectral: a, qmax } => {
            let ss = SpectralSequence::compute(&load_fan(&a.fan)?, a.mode.into())?;
            let table = ss.morphic_table(*qmax);
            (render::morphic(&table, a.fan.output.format.into()), &a.fan.output.out)
        }
        Command::Betti(a) => {
            let ss = SpectralSequence::compute(&load_fan(a)?, Mode::Singular)?;
            (render::betti(&ss.betti_table(), a.output.format.into()), &a.output.out)
        }
        Command::Oracle(a) => (render::oracle(&load_fan(a)?, a.output.format.into()), &a.output.out),
        Command::Builtin { name, output } => (render::document(&builtin(name)?, output.format.into()), &output.out),
    };
    Ok((rendered?, out.as_ref()))
}

fn emit(body: &str, out: Option<&PathBuf>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, body),
        None => io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli.command) {
        Ok((rendered, out)) => {
            if let Err(e) = emit(&rendered.body, out) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(1);
            }
            if let Some(note) = &rendered.diagnostic {
                eprintln!("{note}");
            }
            ExitCode::from(rendered.status.code())
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.status.code())
        }
    }
}
