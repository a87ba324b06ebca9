use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fibwalk::automata::{
    regex_parse, regex_to_dfa, serialize, set_state_budget, to_dot, Alphabet, NumSys,
};
use fibwalk::logic::{eval_closed, Session};
use fibwalk::numeration::{
    cg_decode, cg_encode, shift_cg2, shift_f, shift_f2, zeck_decode, zeck_encode, CgWord, SetId,
    Subclass, ZeckWord,
};
use fibwalk::paperlab::{has_failure, render_machine, render_table, verify_all, Config};
use fibwalk::relations::{builtin, builtin_env};

#[derive(Parser)]
#[command(name = "fibwalk", version, about = "Zeckendorf and Chung-Graham numeration toolkit")]
struct Cli {
    /// Cap on automaton states for compile/eval/verify (also FIBWALK_MAX_STATES)
    #[arg(long, global = true)]
    max_states: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemArg {
    Zeck,
    Cg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShiftArg {
    F,
    F2,
    Cg2,
}

#[derive(Subcommand)]
enum Command {
    /// Encode an integer as a digit word, least significant digit first
    Encode {
        #[arg(long, value_enum)]
        system: SystemArg,
        /// Display most significant digit first (input semantics unchanged)
        #[arg(long)]
        msd: bool,
        n: u64,
    },
    /// Decode an LSD-first digit word back to an integer
    Decode {
        #[arg(long, value_enum)]
        system: SystemArg,
        word: String,
    },
    /// Show both representations of an integer
    Convert {
        #[arg(long)]
        msd: bool,
        n: u64,
    },
    /// Apply a shift operator to an integer
    Shift {
        #[arg(long, value_enum)]
        system: ShiftArg,
        n: u64,
    },
    /// List the first members of a named set
    Seq {
        /// A:k | U:k | B:2k[:1|2] | R:word | feven | fodd | sc
        #[arg(long)]
        set: String,
        #[arg(long)]
        count: usize,
    },
    /// Compile a regular expression to a serialized automaton
    Compile {
        #[arg(long)]
        regex: String,
        /// Comma-separated track list: zeck, cg, or a max digit (e.g. zeck,cg)
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Decide a closed formula; prints TRUE or FALSE
    Eval {
        formula: String,
        /// Session script with def/reg lines to load first
        #[arg(long)]
        defs: Option<PathBuf>,
    },
    /// Run the verification suite
    Verify {
        #[arg(long)]
        max_n: Option<u64>,
        #[arg(long)]
        max_k: Option<u32>,
        /// Write the machine-readable report here
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Export a builtin automaton
    Export {
        #[arg(long)]
        name: String,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        text: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = cli
        .max_states
        .or_else(|| {
            std::env::var("FIBWALK_MAX_STATES")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(1_000_000);
    set_state_budget(budget);
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Encode { system, msd, n } => {
            let digits = match system {
                SystemArg::Zeck => zeck_encode(n).digits().to_vec(),
                SystemArg::Cg => cg_encode(n).digits().to_vec(),
            };
            println!("{}", render_digits(&digits, msd));
            Ok(ExitCode::SUCCESS)
        }
        Command::Decode { system, word } => {
            let n = match system {
                SystemArg::Zeck => {
                    zeck_decode(&ZeckWord::parse(&word).map_err(|e| e.to_string())?)
                }
                SystemArg::Cg => cg_decode(&CgWord::parse(&word).map_err(|e| e.to_string())?),
            };
            println!("{n}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { msd, n } => {
            println!("zeck: {}", render_digits(zeck_encode(n).digits(), msd));
            println!("cg: {}", render_digits(cg_encode(n).digits(), msd));
            Ok(ExitCode::SUCCESS)
        }
        Command::Shift { system, n } => {
            let shifted = match system {
                ShiftArg::F => shift_f(n),
                ShiftArg::F2 => shift_f2(n),
                ShiftArg::Cg2 => shift_cg2(n),
            };
            println!("{shifted}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Seq { set, count } => {
            let set = parse_set(&set)?;
            for n in fibwalk::numeration::enumerate_members(&set, count) {
                println!("{n}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compile {
            regex,
            alphabet,
            out,
            dot,
        } => {
            let alphabet = parse_alphabet(&alphabet)?;
            let ast = regex_parse(&regex, &alphabet).map_err(|e| e.to_string())?;
            let dfa = regex_to_dfa(&ast, &alphabet)
                .map_err(|e| e.to_string())?
                .minimize();
            let text = serialize(&dfa);
            match out {
                Some(path) => fs::write(&path, text).map_err(|e| e.to_string())?,
                None => print!("{text}"),
            }
            if let Some(path) = dot {
                fs::write(&path, to_dot(&dfa)).map_err(|e| e.to_string())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval { formula, defs } => {
            let mut session = Session::new(builtin_env().map_err(|e| e.to_string())?);
            if let Some(path) = defs {
                let script = fs::read_to_string(&path).map_err(|e| e.to_string())?;
                for line in script.lines() {
                    session.run_line(line).map_err(|e| e.to_string())?;
                }
            }
            let truth = eval_closed(&formula, session.env()).map_err(|e| e.to_string())?;
            if truth {
                println!("TRUE");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("FALSE");
                Ok(ExitCode::from(1))
            }
        }
        Command::Verify {
            max_n,
            max_k,
            report,
        } => {
            let mut config = Config::default();
            if let Some(n) = max_n {
                config.max_n = n;
            }
            if let Some(k) = max_k {
                config.max_k = k;
            }
            let reports = verify_all(&config);
            print!("{}", render_table(&reports));
            if let Some(path) = report {
                fs::write(&path, render_machine(&reports)).map_err(|e| e.to_string())?;
            }
            if has_failure(&reports) {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Export { name, dot, text } => {
            if dot.is_none() && text.is_none() {
                return Err("export needs --dot FILE or --text FILE".to_string());
            }
            let auto = builtin(&name).map_err(|e| e.to_string())?;
            if let Some(path) = dot {
                fs::write(&path, to_dot(&auto.dfa)).map_err(|e| e.to_string())?;
            }
            if let Some(path) = text {
                fs::write(&path, serialize(&auto.dfa)).map_err(|e| e.to_string())?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Digit word as a string; 0 renders as "0" rather than the empty word.
fn render_digits(digits: &[u8], msd: bool) -> String {
    if digits.is_empty() {
        return "0".to_string();
    }
    let render = |d: &u8| char::from(b'0' + d);
    if msd {
        digits.iter().rev().map(render).collect()
    } else {
        digits.iter().map(render).collect()
    }
}

fn parse_set(spec: &str) -> Result<SetId, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || format!("bad set spec '{spec}'");
    match parts.as_slice() {
        ["feven"] => Ok(SetId::FEven),
        ["fodd"] => Ok(SetId::FOdd),
        ["sc"] => Ok(SetId::Sc),
        [tag, k] if tag.eq_ignore_ascii_case("a") => {
            let k = k.parse().map_err(|_| bad())?;
            SetId::a(k).map_err(|e| e.to_string())
        }
        [tag, k] if tag.eq_ignore_ascii_case("u") => {
            Ok(SetId::u(k.parse().map_err(|_| bad())?))
        }
        [tag, rest @ ..] if tag.eq_ignore_ascii_case("b") => {
            let (index, subclass) = match rest {
                [i] => (i, Subclass::Any),
                [i, "1"] => (i, Subclass::One),
                [i, "2"] => (i, Subclass::Two),
                _ => return Err(bad()),
            };
            let index = index.parse().map_err(|_| bad())?;
            SetId::b(index, subclass).map_err(|e| e.to_string())
        }
        [tag, word] if tag.eq_ignore_ascii_case("r") => {
            let digits: Result<Vec<u8>, _> = word
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or(()))
                .collect();
            SetId::prefix(digits.map_err(|_| bad())?).map_err(|e| e.to_string())
        }
        _ => Err(bad()),
    }
}

fn parse_alphabet(spec: &str) -> Result<Alphabet, String> {
    let mut max_digits = Vec::new();
    for token in spec.split(',') {
        let token = token.trim();
        max_digits.push(match token {
            "zeck" | "lsd_fib" => NumSys::Zeck.max_digit(),
            "cg" | "lsd_cg" => NumSys::Cg.max_digit(),
            other => other
                .parse()
                .map_err(|_| format!("bad alphabet token '{other}'"))?,
        });
    }
    if max_digits.is_empty() {
        return Err("alphabet needs at least one track".to_string());
    }
    Ok(Alphabet::new(max_digits))
}
