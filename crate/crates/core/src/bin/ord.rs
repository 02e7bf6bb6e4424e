//! `ord`: command line front end for the `hessenberg` crate.
//!
//! Exit status is 0 on success, 1 for bad input and 2 when a computed
//! result fails its own validation.

use std::cmp::Ordering;
use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hessenberg::mixed::{
    enumerate_lf_pwc_sums, enumerate_pwc_sums_finite, realize_inat_sum, validate_certificate,
};
use hessenberg::oracle::{
    brute_force_interleavings_naturals, brute_force_perm_sums, extrapolated_inat_sum,
    extrapolated_iord_sum, partial_sum_growth_check, RecursiveNatSum, SmallUniverse,
};
use hessenberg::parse::parse_ordinal_list;
use hessenberg::{parse_ordinal, parse_sequence, OmegaSequence, Ordinal};

#[derive(Parser)]
#[command(
    name = "ord",
    version,
    about = "Exact ordinal arithmetic below epsilon-zero"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print its Cantor normal form
    Eval { expr: String },
    /// Compare two expressions, printing <, = or >
    Cmp { a: String, b: String },
    /// Keep the terms of EXPR whose exponent is at least AT
    Trunc { expr: String, at: String },
    /// Natural sum of all arguments
    Natsum { exprs: Vec<String> },
    /// Infinite natural sum of a sequence file, with its analysis
    Inatsum { file: PathBuf },
    /// Infinite ordered sum of a sequence file, with its analysis
    Iordsum { file: PathBuf },
    /// All ordered sums of a comma-separated list over every ordering
    Permsums {
        #[arg(required = true)]
        list: Vec<String>,
    },
    /// Left-finite piecewise convex mixed sums of a sequence file
    Lfpwc { file: PathBuf },
    /// Print and check a certificate for the maximal left-finite mixed sum
    Certify { file: PathBuf },
    /// Cross-check the arithmetic against the brute-force oracles
    Oracle {
        /// Coefficient cap of the universe below w^3
        #[arg(long, default_value_t = 3)]
        universe_coeff: u32,
    },
}

enum Failure {
    Input(String),
    Invariant(String),
}

impl Failure {
    fn input(e: impl Display) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("ord: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("ord: internal check failed: {msg}");
            ExitCode::from(2)
        }
    }
}

fn expr(text: &str) -> Result<Ordinal, Failure> {
    parse_ordinal(text).map_err(|e| Failure::Input(format!("{text:?}: {e}")))
}

fn sequence(path: &Path) -> Result<OmegaSequence, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_sequence(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Eval { expr: e } => println!("{}", expr(&e)?),
        Command::Cmp { a, b } => {
            let sign = match expr(&a)?.cmp(&expr(&b)?) {
                Ordering::Less => "<",
                Ordering::Equal => "=",
                Ordering::Greater => ">",
            };
            println!("{sign}");
        }
        Command::Trunc { expr: e, at } => println!("{}", expr(&e)?.truncate(&expr(&at)?)),
        Command::Natsum { exprs } => {
            let values = exprs
                .iter()
                .map(|e| expr(e))
                .collect::<Result<Vec<_>, _>>()?;
            println!("{}", Ordinal::nat_sum_many(&values));
        }
        Command::Inatsum { file } => {
            let analysis = sequence(&file)?.analyze();
            println!("{}\n{analysis}", analysis.inat);
        }
        Command::Iordsum { file } => {
            let analysis = sequence(&file)?.analyze();
            println!("{}\n{analysis}", analysis.iord);
        }
        Command::Permsums { list } => {
            let joined = list.join(",");
            let items = parse_ordinal_list(&joined)
                .map_err(|e| Failure::Input(format!("{joined:?}: {e}")))?;
            println!(
                "{}",
                enumerate_pwc_sums_finite(&items).map_err(Failure::input)?
            );
        }
        Command::Lfpwc { file } => {
            println!(
                "{}",
                enumerate_lf_pwc_sums(&sequence(&file)?).map_err(Failure::input)?
            );
        }
        Command::Certify { file } => {
            let s = sequence(&file)?;
            let cert = realize_inat_sum(&s);
            println!("{cert}");
            let checked =
                validate_certificate(&cert, &s).map_err(|e| Failure::Invariant(e.to_string()))?;
            if checked != s.inat_sum() {
                return Err(Failure::Invariant(format!(
                    "certificate realizes {checked}, expected {}",
                    s.inat_sum()
                )));
            }
        }
        Command::Oracle { universe_coeff } => oracle(universe_coeff)?,
    }
    Ok(())
}

type Check = fn(u32) -> Result<String, String>;

fn oracle(coeff: u32) -> Result<(), Failure> {
    if coeff == 0 {
        return Err(Failure::Input("--universe-coeff must be positive".into()));
    }
    let checks: [(&str, Check); 5] = [
        ("recursive natural sum", check_recursive),
        ("permutation sums", check_permutations),
        ("interleavings of naturals", check_interleavings),
        ("closed forms", check_closed_forms),
        ("partial sum growth", check_growth),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        match check(coeff) {
            Ok(detail) => println!("pass  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        return Err(Failure::Invariant(format!(
            "{failed} oracle check(s) failed"
        )));
    }
    Ok(())
}

fn check_recursive(coeff: u32) -> Result<String, String> {
    let universe = SmallUniverse::below_omega_power(3, coeff);
    let mut session = RecursiveNatSum::new(&universe);
    let mut pairs = 0;
    for a in universe.members() {
        for b in universe.members() {
            let slow = session.eval(a, b).map_err(|e| format!("{a} # {b}: {e}"))?;
            let fast = a.nat_sum(b);
            if slow != fast {
                return Err(format!(
                    "{a} # {b}: recursion gives {slow}, normal form {fast}"
                ));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs below {}", universe.bound()))
}

const SAMPLE_LISTS: &[&str] = &[
    "w+1, w+1",
    "1, w",
    "2, 3",
    "w^2+w, w^2+1, w*2",
    "w^w, w+5, w^3*2, 1",
    "w^(w+1), w^w*3+w, w^2, 7, w",
];

fn check_permutations(_: u32) -> Result<String, String> {
    for text in SAMPLE_LISTS {
        let list = parse_ordinal_list(text).map_err(|e| e.to_string())?;
        let fast = enumerate_pwc_sums_finite(&list).map_err(|e| e.to_string())?;
        let slow = brute_force_perm_sums(&list).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("[{text}]: {fast} vs {slow}"));
        }
    }
    Ok(format!("{} lists", SAMPLE_LISTS.len()))
}

fn check_interleavings(_: u32) -> Result<String, String> {
    let lists: &[&[u32]] = &[&[2, 3], &[1, 1, 1], &[4, 6], &[3, 3, 2]];
    for list in lists {
        let values = brute_force_interleavings_naturals(list).map_err(|e| e.to_string())?;
        let total = Ordinal::natural(list.iter().sum::<u32>());
        if values.values() != [total.clone()] {
            return Err(format!("{list:?}: {values}, expected {{{total}}}"));
        }
    }
    Ok(format!("{} lists", lists.len()))
}

const SAMPLE_SEQUENCES: &[&str] = &[
    "tail: periodic 1",
    "tail: periodic 2",
    "tail: periodic w",
    "head: w^2+w, w^2+w\ntail: periodic 1",
    "head: w, w^2\ntail: periodic 1",
    "head: w^2+5, 3\ntail: periodic w, 0, 4",
    "head: w^3, w+1\ntail: periodic w^2*2, w",
];

fn check_closed_forms(_: u32) -> Result<String, String> {
    for text in SAMPLE_SEQUENCES {
        let s = parse_sequence(text).map_err(|e| e.to_string())?;
        let inat = extrapolated_inat_sum(&s).map_err(|e| e.to_string())?;
        let iord = extrapolated_iord_sum(&s).map_err(|e| e.to_string())?;
        if inat != s.inat_sum() || iord != s.iord_sum() {
            return Err(format!(
                "{text:?}: partial sums give {inat} and {iord}, closed forms {} and {}",
                s.inat_sum(),
                s.iord_sum()
            ));
        }
    }
    Ok(format!("{} sequences", SAMPLE_SEQUENCES.len()))
}

fn check_growth(_: u32) -> Result<String, String> {
    let mut checked = 0;
    for text in SAMPLE_SEQUENCES.iter().chain(&["tail: ramp 0"]) {
        let s = parse_sequence(text).map_err(|e| e.to_string())?;
        let report = partial_sum_growth_check(&s, 60).map_err(|e| e.to_string())?;
        if let Some((n, why)) = report.violations.first() {
            return Err(format!("{text:?} at n={n}: {why}"));
        }
        checked += report.checked;
    }
    Ok(format!("{checked} partial sums"))
}
