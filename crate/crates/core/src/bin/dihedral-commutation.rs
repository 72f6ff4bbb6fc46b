//! Command-line front end. Data goes to stdout, diagnostics to stderr.
//! Exit codes: 0 success, 1 usage error, 2 verification failure.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dihedral_commutation::central::central_series_profile;
use dihedral_commutation::claims::verify_claims;
use dihedral_commutation::closure::{close_pairs, search_isomorphism, IsoOutcome};
use dihedral_commutation::container::decompose;
use dihedral_commutation::modular::orbit_profile;
use dihedral_commutation::orders::order_report;
use dihedral_commutation::table::{self, Format, TableMeta, VerifyLevel};
use dihedral_commutation::{Error, GroupParams, Side};

#[derive(Parser)]
#[command(version, about = "Orders and structure of the commutation semigroups of dihedral groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Right,
    Left,
    Both,
}

impl SideArg {
    fn sides(self) -> Vec<Side> {
        match self {
            SideArg::Right => vec![Side::Right],
            SideArg::Left => vec![Side::Left],
            SideArg::Both => Side::BOTH.to_vec(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyArg {
    None,
    Pairs,
    Raw,
}

impl From<VerifyArg> for VerifyLevel {
    fn from(v: VerifyArg) -> Self {
        match v {
            VerifyArg::None => VerifyLevel::None,
            VerifyArg::Pairs => VerifyLevel::Pairs,
            VerifyArg::Raw => VerifyLevel::Raw,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Orders of P(D_m) and Λ(D_m) with formula provenance.
    Order {
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value = "both")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Order table over a range of m, optionally checked against an oracle.
    Table {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// Default: pairs for m <= 512, none above.
        #[arg(long, value_enum)]
        verify: Option<VerifyArg>,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        /// Add provenance headers.
        #[arg(long)]
        meta: bool,
    },
    /// Container decomposition with running totals.
    Decompose {
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value = "both")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Orders of the upper central series of D_m.
    CentralSeries {
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Index, period and order of x (default ∓2) modulo m.
    Orbit {
        #[arg(long)]
        m: u64,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<i64>,
        #[arg(long, value_enum, default_value = "both")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Run the counterexample suite and prime sweeps.
    VerifyClaims {
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Search for an isomorphism: P(D_m) vs Λ(D_m), or one side of D_m vs D_with.
    Iso {
        #[arg(long)]
        m: u64,
        #[arg(long = "with")]
        with: Option<u64>,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
        #[arg(long, default_value_t = dihedral_commutation::closure::DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("i/o: {e}"))
    }
}

fn json<T: serde::Serialize>(out: &mut impl Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn run(command: Command) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Order { m, side, format } => {
            let report = order_report(&GroupParams::new(m)?)?;
            match format.into() {
                Format::Text => write!(out, "{}", table::render_order_text(&report, &side.sides()))?,
                Format::Json => json(&mut out, &report)?,
                Format::Csv => {
                    writeln!(out, "m,side,order,t")?;
                    for s in side.sides() {
                        let (order, t) = match s {
                            Side::Right => (report.p_order, report.t_right),
                            Side::Left => (report.lambda_order, report.t_left),
                        };
                        writeln!(out, "{m},{s},{order},{t}")?;
                    }
                }
            }
        }
        Command::Table { from, to, verify, format, meta } => {
            let level = verify.map(VerifyLevel::from);
            let rows = table::build_table(from, to, level)?;
            let meta = meta.then(|| TableMeta::new(from, to, level));
            match format.into() {
                Format::Csv => table::write_csv(&rows, meta.as_ref(), &mut out)?,
                Format::Json => table::write_json(&rows, meta.as_ref(), &mut out)?,
                Format::Text => {
                    if let Some(meta) = &meta {
                        writeln!(out, "# {} {}, verify: {}", meta.generator, meta.version, meta.verify)?;
                    }
                    write!(out, "{}", table::render_table_text(&rows))?
                }
            }
        }
        Command::Decompose { m, side, format } => {
            let g = GroupParams::new(m)?;
            let parts: Vec<_> = side.sides().into_iter().map(|s| decompose(s, &g)).collect();
            match format.into() {
                Format::Text => {
                    for d in &parts {
                        write!(out, "{}", table::render_decomposition_text(d))?;
                    }
                }
                Format::Json => json(&mut out, &parts)?,
                Format::Csv => {
                    writeln!(out, "side,a,d,exponent,size,running_total")?;
                    for d in &parts {
                        let mut total = 0;
                        for p in &d.parts {
                            total += p.cardinality;
                            writeln!(
                                out,
                                "{},{},{},{},{},{total}",
                                d.side,
                                p.container.a(),
                                p.container.divisor(),
                                p.exponent,
                                p.cardinality
                            )?;
                        }
                    }
                }
            }
        }
        Command::CentralSeries { m, format } => {
            let profile = central_series_profile(&GroupParams::new(m)?);
            match format.into() {
                Format::Text => write!(out, "{}", table::render_central_series_text(m, &profile))?,
                Format::Json => json(&mut out, &profile)?,
                Format::Csv => {
                    writeln!(out, "u,order")?;
                    for (u, order) in profile.orders.iter().enumerate() {
                        writeln!(out, "{u},{order}")?;
                    }
                }
            }
        }
        Command::Orbit { m, x, side, format } => {
            GroupParams::new(m)?;
            let xs: Vec<i64> = match x {
                Some(x) => vec![x],
                None => side.sides().into_iter().map(Side::multiplier).collect(),
            };
            let profiles: Vec<_> = xs.into_iter().map(|x| orbit_profile(x, m)).collect();
            match format.into() {
                Format::Text => {
                    for p in &profiles {
                        write!(out, "{}", table::render_orbit_text(p))?;
                    }
                }
                Format::Json => json(&mut out, &profiles)?,
                Format::Csv => {
                    writeln!(out, "x,m,index,period,order")?;
                    for p in &profiles {
                        let order = p.order.map(|o| o.to_string()).unwrap_or_default();
                        writeln!(out, "{},{},{},{},{order}", p.x, p.m, p.index, p.period)?;
                    }
                }
            }
        }
        Command::VerifyClaims { format } => {
            let claims = verify_claims()?;
            match format.into() {
                Format::Json => json(&mut out, &claims)?,
                _ => {
                    for c in &claims {
                        let status = if c.passed { "PASS" } else { "FAIL" };
                        writeln!(out, "{status}  {}  ({})", c.name, c.detail)?;
                    }
                }
            }
            let failed: Vec<_> = claims.iter().filter(|c| !c.passed).map(|c| c.name).collect();
            if !failed.is_empty() {
                return Err(Failure::Verification(format!("failed claims: {}", failed.join("; "))));
            }
        }
        Command::Iso { m, with, side, budget, format } => {
            let g = GroupParams::new(m)?;
            let first_side = side.sides()[0];
            let (s1, s2) = match with {
                Some(m2) => (
                    close_pairs(first_side, &g)?,
                    close_pairs(first_side, &GroupParams::new(m2)?)?,
                ),
                None => (close_pairs(Side::Right, &g)?, close_pairs(Side::Left, &g)?),
            };
            let outcome = search_isomorphism(&s1, &s2, budget)?;
            match format.into() {
                Format::Json => json(&mut out, &outcome)?,
                _ => {
                    let nodes = match &outcome {
                        IsoOutcome::Isomorphic { nodes, .. }
                        | IsoOutcome::NotIsomorphic { nodes }
                        | IsoOutcome::BudgetExhausted { nodes } => *nodes,
                    };
                    writeln!(
                        out,
                        "{}(D_{}) [{}] vs {}(D_{}) [{}]: {} after {nodes} search nodes",
                        s1.side.symbol(),
                        s1.m,
                        s1.size,
                        s2.side.symbol(),
                        s2.m,
                        s2.size,
                        outcome.label()
                    )?;
                }
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}
