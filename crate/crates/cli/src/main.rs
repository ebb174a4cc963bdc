//! `setcalc`: evaluate, compare and audit set terms from the command line.
//!
//! Exit status is 0 on success (including an `incomparable` verdict), 1 on parse, domain or
//! usage errors, and 2 when an audit finds counterexamples.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use setcalc::audit::{self, AuditConfig};
use setcalc::cardinal::{
    between_witness, ch_card, ch_cmp, degree, neg_ch_cmp, neg_chs_cmp, rho, tau, Slot,
};
use setcalc::term::level_of;
use setcalc::{normalize, parse, Error, NormalForm};

#[derive(Parser)]
#[command(name = "setcalc", version, about = "Set terms with inverse powersets and their cardinality orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize an expression and show its level and cardinality data
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the normal form of an expression
    Normalize { expr: String },
    /// Compare two expressions: prints lt, eq, gt or incomparable
    Cmp {
        #[arg(long, value_enum)]
        order: Order,
        a: String,
        b: String,
    },
    /// Print a form strictly between A and B in the negchs order
    Between { a: String, b: String },
    /// Run the law checks
    Audit {
        #[arg(long, default_value_t = AuditConfig::default().rank)]
        rank: usize,
        #[arg(long, default_value_t = AuditConfig::default().samples)]
        samples: usize,
        #[arg(long, default_value_t = AuditConfig::default().seed)]
        seed: u64,
        /// Run only this check (repeatable)
        #[arg(long = "check", value_name = "NAME")]
        checks: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include elapsed milliseconds in json output (makes output run-dependent)
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Ch,
    Negch,
    Negchs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Eval { expr, format } => eval(&expr, format)?,
        Command::Normalize { expr } => println!("{}", normalize(&parse(&expr)?)?),
        Command::Cmp { order, a, b } => {
            let (ta, tb) = (parse(&a)?, parse(&b)?);
            let verdict = match order {
                Order::Ch => ch_cmp(&ta, &tb)?,
                Order::Negch => neg_ch_cmp(&normalize(&ta)?, &normalize(&tb)?),
                Order::Negchs => neg_chs_cmp(&normalize(&ta)?, &normalize(&tb)?),
            };
            println!("{verdict}");
        }
        Command::Between { a, b } => {
            let (x, y) = (normalize(&parse(&a)?)?, normalize(&parse(&b)?)?);
            println!("{}", between_witness(&x, &y)?);
        }
        Command::Audit { rank, samples, seed, checks, format, timings } => {
            return audit(AuditConfig { rank, samples, seed }, &checks, format, timings);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn describe(input: &str, nf: &NormalForm) -> Value {
    let term = nf.to_term();
    let z = nf.zermelo();
    let components: Vec<Value> = nf
        .components()
        .iter()
        .map(|c| {
            json!({
                "level": c.level(),
                "payload": c.payload().to_string(),
                "rho": rho(Slot::Component(c)).to_string(),
                "tau": tau(Slot::Component(c)).to_string(),
            })
        })
        .collect();
    json!({
        "input": input,
        "normal_form": nf.to_string(),
        "level": level_of(&term).ok(),
        "ch_card": ch_card(&term).ok().map(|c| c.to_string()),
        "zermelo": { "card": z.cardinality().to_string(), "degree": degree(z) },
        "components": components,
    })
}

fn eval(expr: &str, format: Format) -> Result<(), Error> {
    let nf = normalize(&parse(expr)?)?;
    let info = describe(expr, &nf);
    match format {
        Format::Json => println!("{info}"),
        Format::Text => {
            let or_dash = |v: &Value| match v {
                Value::Null => "-".to_string(),
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            println!("normal form: {}", nf);
            println!("level:       {}", or_dash(&info["level"]));
            println!("ch card:     {}", or_dash(&info["ch_card"]));
            println!(
                "zermelo:     {}, degree {}",
                or_dash(&info["zermelo"]["card"]),
                info["zermelo"]["degree"]
            );
            for c in nf.components() {
                let (r, t) = (rho(Slot::Component(c)), tau(Slot::Component(c)));
                println!("component:   level {}, payload {}, rho {r}, tau {t}", c.level(), c.payload());
            }
        }
    }
    Ok(())
}

fn audit(config: AuditConfig, checks: &[String], format: Format, timings: bool) -> Result<ExitCode, Error> {
    let known = audit::check_names();
    let names: Vec<&str> = if checks.is_empty() {
        known
    } else {
        for c in checks {
            if !known.contains(&c.as_str()) {
                return Err(Error::UnknownCheck(c.clone()));
            }
        }
        checks.iter().map(String::as_str).collect()
    };
    let results = audit::run_checks(&names, &config);
    let (mut failed, mut errored) = (0, 0);
    for (name, result) in results {
        match result {
            Ok(mut report) => {
                if !report.passed() {
                    failed += 1;
                }
                match format {
                    Format::Json => {
                        if !timings {
                            report.millis = None;
                        }
                        println!("{}", serde_json::to_string(&report).expect("report serializes"));
                    }
                    Format::Text => println!("{report}"),
                }
            }
            Err(e) => {
                errored += 1;
                match format {
                    Format::Json => println!("{}", json!({ "name": name, "error": e.to_string() })),
                    Format::Text => println!("ERR  {name:28} {e}"),
                }
            }
        }
    }
    if let Format::Text = format {
        let total = names.len();
        println!("{} checks: {} passed, {failed} failed, {errored} errors", total, total - failed - errored);
    }
    Ok(if failed > 0 {
        ExitCode::from(2)
    } else if errored > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
