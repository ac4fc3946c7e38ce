use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use suzree_core::audit::{self, AuditReport, E01Rule};
use suzree_core::bounds;
use suzree_core::isogeny::{restricted_weights, x_tau};
use suzree_core::tables;
use suzree_core::{CohomologyAnswer, Error, Summand, SystemId, Weight};

#[derive(Parser)]
#[command(name = "suzree", version, about = "Cohomology tables and weight audits for Suzuki and Ree groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a cohomology table over a set of weights (JSON lines).
    Compute(ComputeArgs),
    /// Run an exhaustive audit; exits 1 on failure.
    Verify(VerifyArgs),
    /// Exact weight-bound audits for F4.
    Bounds {
        #[command(subcommand)]
        which: BoundsCmd,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kernel {
    #[value(name = "B_tau")]
    BTau,
    #[value(name = "B_r2")]
    BR2,
    #[value(name = "B_r2_general")]
    BR2General,
    #[value(name = "G_r2_H0")]
    GR2H0,
    #[value(name = "G_s_L")]
    GSL,
    #[value(name = "G_r2_L")]
    GR2L,
}

impl Kernel {
    fn name(self) -> &'static str {
        match self {
            Kernel::BTau => "B_tau",
            Kernel::BR2 => "B_r2",
            Kernel::BR2General => "B_r2_general",
            Kernel::GR2H0 => "G_r2_H0",
            Kernel::GSL => "G_s_L",
            Kernel::GR2L => "G_r2_L",
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    group: SystemId,
    #[arg(long)]
    kernel: Kernel,
    #[arg(long)]
    r: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    /// A single weight `a,b[,c,d]`.
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    lambda: Option<Weight>,
    /// All weights with coefficients in `0..=N`.
    #[arg(long = "box", value_name = "N")]
    box_max: Option<i64>,
    #[arg(long)]
    all_restricted: bool,
    /// Evaluate outside the restricted set where a general form exists.
    #[arg(long)]
    general: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AuditName {
    BtauOracle,
    Br2,
    GsSimple,
    Gr2Simple,
    Weightform,
    H2Parity,
    Induced,
    Restriction,
}

#[derive(Args)]
struct VerifyArgs {
    audit: AuditName,
    #[arg(long)]
    group: Option<SystemId>,
    #[arg(long)]
    r: Option<u32>,
    /// Level, or the largest level for `gs-simple` and `h2-parity`.
    #[arg(long)]
    s: Option<u32>,
    #[arg(long = "box", value_name = "N")]
    box_max: Option<i64>,
    /// For `gr2-simple`: take E01 from the Steinberg factorization of inner summands.
    #[arg(long)]
    steinberg: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// List Γ with pairings against the highest short coroot.
    Gamma {
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// The bound on ⟨τν, α0^∨⟩ and the classification of admitted ν.
    #[command(name = "bnp52")]
    TauNuBound {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        json: bool,
    },
    /// The first-digit inequality over the simple-coefficient table.
    Sigma0 {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        json: bool,
    },
    /// Pairings behind the Ext¹ bound of 6.
    #[command(name = "lemma-new")]
    ExtBoundWeights {
        #[arg(long)]
        json: bool,
    },
    /// `⟨τν⟩ − ⟨ν⟩ = 2a+2b+c`, for one ν or all of Γ.
    Identity {
        #[arg(long, value_parser = parse_weight)]
        lambda: Option<Weight>,
        #[arg(long)]
        json: bool,
    },
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    Weight::parse(s).map_err(|e| e.to_string())
}

#[derive(Serialize)]
#[serde(untagged)]
enum RecordResult {
    Expr(Vec<Summand>),
    Error(&'static str),
}

#[derive(Serialize)]
struct OutputRecord {
    group: SystemId,
    kernel: &'static str,
    r_or_s: u32,
    lambda: Weight,
    result: RecordResult,
    case_fired: String,
}

/// Usage errors that exit with status 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<io::Error> for Usage {
    fn from(e: io::Error) -> Self {
        Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var("SUZREE_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a pool that already exists is fine
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(a) => compute(a).map(|()| true),
        Command::Verify(a) => verify(a),
        Command::Bounds { which } => run_bounds(which),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn level(kernel: Kernel, r: Option<u32>, s: Option<u32>) -> Result<u32, Usage> {
    match kernel {
        Kernel::BTau => Ok(r.unwrap_or(1)),
        Kernel::GSL => s.ok_or_else(|| Usage("kernel G_s_L needs --s".into())),
        _ => {
            let r = r.ok_or_else(|| Usage(format!("kernel {} needs --r", kernel.name())))?;
            if r % 2 == 0 {
                return Err(Usage(format!("--r must be odd, got {r}")));
            }
            Ok(r)
        }
    }
}

fn box_weights(rank: usize, n: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out.into_iter().flat_map(|c: Vec<i64>| (0..=n).map(move |x| [c.clone(), vec![x]].concat())).collect();
    }
    out.iter().map(|c| Weight::new(c)).collect()
}

fn evaluate(id: SystemId, kernel: Kernel, level: u32, l: Weight, general: bool) -> suzree_core::Result<CohomologyAnswer> {
    match (kernel, general) {
        (Kernel::BTau, false) => tables::h1_b_tau_table(id, l),
        (Kernel::BTau, true) => tables::h1_b_tau_general(id, l),
        (Kernel::BR2, false) => tables::h1_b_r2(id, l, level),
        (Kernel::BR2General, _) | (Kernel::BR2, true) => tables::h1_b_r2_general(id, l, level),
        (Kernel::GR2H0, false) => tables::h1_g_r2_h0(id, l, level),
        (Kernel::GR2H0, true) => tables::h1_g_r2_h0_general(id, l, level),
        (Kernel::GSL, _) => tables::h1_g_s_l(id, l, level),
        (Kernel::GR2L, _) => tables::h1_g_r2_l(id, l, level),
    }
}

fn compute(a: ComputeArgs) -> Result<(), Usage> {
    let id = a.group;
    let lv = level(a.kernel, a.r, a.s)?;
    let mut weights = match (a.lambda, a.box_max, a.all_restricted) {
        (Some(l), None, false) => {
            l.check_rank(id.rank())?;
            vec![l]
        }
        (None, Some(n), false) if n >= 0 => box_weights(id.rank(), n),
        (None, None, true) => match a.kernel {
            Kernel::BTau => x_tau(id),
            Kernel::GSL => restricted_weights(id, 2 * lv),
            _ => restricted_weights(id, lv),
        },
        _ => return Err(Usage("give exactly one of --lambda, --box N (N >= 0), --all-restricted".into())),
    };
    weights.sort();
    let records: Vec<OutputRecord> = {
        use rayon::prelude::*;
        weights
            .par_iter()
            .map(|&l| {
                let (result, case_fired) = match evaluate(id, a.kernel, lv, l, a.general) {
                    Ok(ans) => (RecordResult::Expr(ans.expr.summands().to_vec()), ans.case_fired),
                    Err(e) => (RecordResult::Error("domain-error"), e.to_string()),
                };
                OutputRecord { group: id, kernel: a.kernel.name(), r_or_s: lv, lambda: l, result, case_fired }
            })
            .collect()
    };
    let mut out = BufWriter::new(io::stdout().lock());
    for rec in &records {
        serde_json::to_writer(&mut out, rec).map_err(|e| Usage(e.to_string()))?;
        writeln!(out)?;
    }
    out.flush()?;
    Ok(())
}

fn need<T>(v: Option<T>, flag: &str, audit: &str) -> Result<T, Usage> {
    v.ok_or_else(|| Usage(format!("{audit} needs {flag}")))
}

fn verify(a: VerifyArgs) -> Result<bool, Usage> {
    let group = || need(a.group, "--group", "this audit");
    let r = || need(a.r, "--r", "this audit");
    let report = match a.audit {
        AuditName::BtauOracle => audit::audit_btau_oracle(),
        AuditName::Br2 => audit::audit_b_r2(group()?, r()?)?,
        AuditName::GsSimple => audit::audit_g_s_simple(group()?, need(a.s, "--s", "gs-simple")?)?,
        AuditName::Gr2Simple => {
            let rule = if a.steinberg { E01Rule::Steinberg } else { E01Rule::ProofReplay };
            audit::audit_g_r2_simple(group()?, r()?, rule)?
        }
        AuditName::Weightform => audit::audit_weightform(group()?, r()?, a.box_max)?,
        AuditName::H2Parity => audit::audit_h2_parity(a.s.unwrap_or(4)),
        AuditName::Induced => audit::audit_induced(group()?, r()?)?,
        AuditName::Restriction => audit::audit_restriction_consistency(group()?, r()?)?,
    };
    emit(&[report], a.json)
}

fn emit(reports: &[AuditReport], json: bool) -> Result<bool, Usage> {
    let mut out = BufWriter::new(io::stdout().lock());
    if json {
        let doc = if let [one] = reports { serde_json::to_string_pretty(one) } else { serde_json::to_string_pretty(reports) };
        writeln!(out, "{}", doc.map_err(|e| Usage(e.to_string()))?)?;
    } else {
        for rep in reports {
            write!(out, "{rep}")?;
        }
    }
    out.flush()?;
    Ok(reports.iter().all(|r| r.passed))
}

#[derive(Serialize)]
struct GammaEntry {
    weight: Weight,
    pairing: i64,
}

fn run_bounds(which: BoundsCmd) -> Result<bool, Usage> {
    match which {
        BoundsCmd::Gamma { csv, json } => {
            let d = SystemId::F4.data();
            let entries: Vec<GammaEntry> =
                bounds::gamma_set().into_iter().map(|w| GammaEntry { weight: w, pairing: d.pair_alpha0(w) }).collect();
            let mut out = BufWriter::new(io::stdout().lock());
            if csv {
                let mut wtr = csv::Writer::from_writer(&mut out);
                wtr.write_record(["a", "b", "c", "d", "pairing"]).map_err(|e| Usage(e.to_string()))?;
                for e in &entries {
                    let mut row: Vec<String> = e.weight.coeffs().iter().map(i64::to_string).collect();
                    row.push(e.pairing.to_string());
                    wtr.write_record(&row).map_err(|e| Usage(e.to_string()))?;
                }
                wtr.flush()?;
            } else if json {
                writeln!(out, "{}", serde_json::to_string(&entries).map_err(|e| Usage(e.to_string()))?)?;
            } else {
                for e in &entries {
                    writeln!(out, "{} {}", e.weight, e.pairing)?;
                }
                writeln!(out, "{} weights", entries.len())?;
            }
            out.flush()?;
            Ok(true)
        }
        BoundsCmd::TauNuBound { s, json } => {
            let bound = bounds::tau_nu_bound(s)?;
            let gate = bounds::tau_nu_gate(s)?;
            if !json {
                println!("{} < {}", bound.value, gate + 1);
            }
            emit(&[bounds::audit_bound_chain(s)?, bounds::classify_admissible_nu(s)?], json)
        }
        BoundsCmd::Sigma0 { r, json } => emit(&[bounds::audit_sigma0_bound(r)?], json),
        BoundsCmd::ExtBoundWeights { json } => emit(&[bounds::ext_bound_weight_audit()], json),
        BoundsCmd::Identity { lambda, json } => {
            let nus = match lambda {
                Some(l) => vec![l],
                None => bounds::gamma_set(),
            };
            let mut rep = AuditReport::new("identity", Default::default());
            rep.params.insert("count".into(), nus.len().to_string());
            for nu in nus {
                rep.absorb(bounds::tau_pairing_identity(nu)?);
            }
            emit(&[rep.finish()], json)
        }
    }
}
