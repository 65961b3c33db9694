//! Command-line front door: parses inputs, dispatches to the library, and
//! emits one machine-readable JSON envelope per run on standard output
//! (`--csv` swaps the root table to CSV).
//!
//! Exit codes: 0 — every checked verdict passed; 1 — the run completed but
//! a checked conclusion failed (verified-fail); 2 — usage, parse, or
//! domain error. All verdicts are exact; decimals appear only under the
//! envelope's `approximations` field.

mod render;

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sturm_core::criteria::{
    check_cor_cfdg, check_cor_haglund, check_cor_ppp, check_cor_wy_pf, check_lemma_gfg,
    check_thm_ffg, check_thm_ffgk, check_thm_fgfg, check_thm_wy, harness_seed,
    run_soundness_harness, LemmaPart, Recurrence, SignMode, Strictness,
};
use sturm_core::diagnostics::support_profile;
use sturm_core::families::{
    derangement_poly, dowling_d, dowling_f, enumerate_multiset_compositions, enumerate_oracle,
    eulerian_poly, identity_suite, is_palindromic_on_support, multiset_composition_poly,
    narayana_poly, q_eulerian_poly, sulanke_poly, tanny_poly, type_b_eulerian_poly, OracleKind,
    Orthogonal, ENUMERATION_CAP,
};
use sturm_core::genus::{decompose_nice, genus_sequence, is_nice, PolyMatrix};
use sturm_core::graph::{
    matching_counts, matching_generating_polynomial, matching_polynomial, parse_board,
    rook_polynomial, verify_heilmann_lieb, GraphSpec,
};
use sturm_core::interlace::{is_generalized_sturm_sequence, is_sturm_sequence};
use sturm_core::poly::{frac, rat, Poly, Rat};
use sturm_core::report::CheckReport;
use sturm_core::roots::{is_pf, is_real_rooted, isolate_real_roots, refine_root};

use render::{
    certificate_json, digits_for, envelope, isolation_json, parse_poly, parse_rat, report_json,
};

#[derive(Parser)]
#[command(
    name = "sturm",
    version,
    about = "Exact real-rootedness, interlacing and recurrence-family checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Isolate (and optionally refine) the real roots of a polynomial.
    Roots(RootsArgs),
    /// Generate or verify a combinatorial or orthogonal family.
    Family {
        #[command(subcommand)]
        action: FamilyCmd,
    },
    /// Run one certifier, the identity suite, or the randomized harness.
    Check {
        #[command(subcommand)]
        action: CheckCmd,
    },
    /// Matching polynomials of weighted graphs; rook polynomials of boards.
    Matching(MatchingArgs),
    /// Transfer-matrix genus sequences, nice matrices and decompositions.
    Genus {
        #[command(subcommand)]
        action: GenusCmd,
    },
    /// Coefficient diagnostics: unimodality, log-concavity, Newton margins.
    Diagnose(DiagnoseArgs),
}

#[derive(Args)]
struct RootsArgs {
    /// Polynomial text; `q` is accepted as an alias for `x`.
    #[arg(long)]
    poly: String,
    /// Refine every root interval to at most this width (rational,
    /// decimal, or scientific notation) and report decimal approximations.
    #[arg(long)]
    refine: Option<String>,
    /// Emit the root table as CSV instead of the JSON envelope.
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family name; see `family gen --help` long help for the list.
    #[arg(long)]
    name: String,
    /// Index of the family member to generate (or the verification range).
    #[arg(long)]
    n: usize,
    /// Rational parameter as `key=value` (repeatable): `lambda=` for
    /// gegenbauer, `alpha=`/`beta=` for jacobi, `alpha=` for sulanke,
    /// `m=` for dowling-d/dowling-f, `q=` for the q-specialized kinds.
    #[arg(long = "param")]
    params: Vec<String>,
    /// Multiset multiplicities for `multiset-composition`, e.g. `2,1,1`.
    #[arg(long)]
    multiset: Option<String>,
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Emit one family member as polynomial text.
    ///
    /// Names: narayana, stirling2, eulerian, derangement, tanny, sulanke,
    /// dowling-d, dowling-f, multiset-composition, q-eulerian,
    /// type-b-eulerian, tchebyshev, hermite, laguerre, legendre,
    /// gegenbauer, jacobi.
    Gen(FamilyArgs),
    /// Check the family against its enumeration oracle and root/Sturm
    /// expectations up to the given index.
    Verify(FamilyArgs),
}

#[derive(Args)]
struct PolyPair {
    /// Polynomial `f` (text; `q` aliases `x`).
    #[arg(long)]
    f: String,
    /// Polynomial `g`.
    #[arg(long)]
    g: String,
}

#[derive(Args)]
struct ThmFfgArgs {
    #[command(flatten)]
    pair: PolyPair,
    /// Polynomial coefficient `a`.
    #[arg(long)]
    a: String,
    /// Polynomial coefficient `b`.
    #[arg(long)]
    b: String,
}

#[derive(Args)]
struct ThmFfgkArgs {
    /// Polynomial `f`.
    #[arg(long)]
    f: String,
    /// Polynomials `g₁ … gₖ` (repeat the flag).
    #[arg(long = "g", required = true)]
    gs: Vec<String>,
    /// Polynomial coefficient `a`.
    #[arg(long)]
    a: String,
    /// Polynomial coefficients `b₁ … bₖ` (repeat the flag, same count as `--g`).
    #[arg(long = "b", required = true)]
    bs: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RecurrenceName {
    Stirling,
    Eulerian,
    Derangement,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeName {
    Nonnegative,
    Alternating,
}

#[derive(Args)]
struct CorPppArgs {
    /// Built-in derivative-augmented recurrence to certify.
    #[arg(long)]
    recurrence: RecurrenceName,
    /// Generate and certify entries up to this index.
    #[arg(long)]
    n_max: usize,
    /// Coefficient-sign regime fixing the half-line for the sign tests.
    #[arg(long, value_enum, default_value = "nonnegative")]
    mode: ModeName,
}

#[derive(Args)]
struct LemmaGfgArgs {
    #[command(flatten)]
    pair: PolyPair,
    /// Polynomial coefficient `c`.
    #[arg(long)]
    c: String,
    /// Polynomial coefficient `d`.
    #[arg(long)]
    d: String,
    /// Which sandwich side: 1 places `g` below `G`, 2 places `G` below `f`.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    part: u8,
    /// Certify the weak form (default is strict).
    #[arg(long)]
    weak: bool,
}

#[derive(Args)]
struct ThmFgfgArgs {
    #[command(flatten)]
    pair: PolyPair,
    /// Polynomial coefficient `a`.
    #[arg(long)]
    a: String,
    /// Polynomial coefficient `b`.
    #[arg(long)]
    b: String,
    /// Polynomial coefficient `c`.
    #[arg(long)]
    c: String,
    /// Polynomial coefficient `d`.
    #[arg(long)]
    d: String,
}

#[derive(Args)]
struct CorCfdgArgs {
    #[command(flatten)]
    pair: PolyPair,
    /// Polynomial coefficient `a`.
    #[arg(long)]
    a: String,
    /// Polynomial coefficient `b`.
    #[arg(long)]
    b: String,
    /// Rational constant `c`.
    #[arg(long)]
    c: String,
    /// Rational constant `d`.
    #[arg(long)]
    d: String,
}

#[derive(Args)]
struct ThmWyArgs {
    #[command(flatten)]
    pair: PolyPair,
    /// Rational constant `a`.
    #[arg(long)]
    a: String,
    /// Rational constant `b`.
    #[arg(long)]
    b: String,
    /// Rational constant `c`.
    #[arg(long)]
    c: String,
    /// Rational constant `d`.
    #[arg(long)]
    d: String,
}

#[derive(Args)]
struct CorHaglundArgs {
    #[command(flatten)]
    pair: PolyPair,
    /// Rational constant `a`.
    #[arg(long)]
    a: String,
    /// Rational constant `b`.
    #[arg(long)]
    b: String,
    /// Rational constant `d`.
    #[arg(long)]
    d: String,
}

#[derive(Args)]
struct HarnessArgs {
    /// Number of randomized instances per certifier.
    #[arg(long, default_value_t = 100)]
    instances: usize,
    /// Base seed (defaults to the STURM_SEED environment variable when
    /// set, else a fixed constant, so runs are reproducible).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// `F = a·f + b·g` is real-rooted when `g ⪯ f` with compatible signs.
    ThmFfg(ThmFfgArgs),
    /// `F = a·f + Σ bᵢ·gᵢ` for a common-interleaver family `gᵢ ⪯ f`.
    ThmFfgk(ThmFfgkArgs),
    /// Recurrence entries form a (generalized) Sturm sequence.
    CorPpp(CorPppArgs),
    /// One sandwich side for `G = c·f + d·g` between `g ≺ f`.
    LemmaGfg(LemmaGfgArgs),
    /// `a·f + b·g ⪯ c·f + d·g` under the determinant condition.
    ThmFgfg(ThmFgfgArgs),
    /// `c·f + d·g ⪯ f` and `g ⪯ c·f + d·g` for constants `c, d ≥ 0`.
    CorCfdg(CorCfdgArgs),
    /// Constant-coefficient two-combination comparison.
    ThmWy(ThmWyArgs),
    /// PF variant of the constant-coefficient comparison.
    CorWyPf(ThmWyArgs),
    /// `(a·x + b)·f + d·g` preserves PF under one-sided conditions.
    CorHaglund(CorHaglundArgs),
    /// Binomial-inversion, Jacobi-recurrence and Tanny/Eulerian identities.
    Identities,
    /// Randomized soundness sweep over every certifier; a violation is a
    /// hypotheses-pass/conclusion-fail event.
    Harness(HarnessArgs),
}

#[derive(Args)]
struct MatchingArgs {
    /// Weighted-graph file: vertex-count line, then `u v [weight]` lines.
    #[arg(long, conflicts_with = "rook")]
    graph: Option<PathBuf>,
    /// Rook-board file: one `row col` cell per line.
    #[arg(long)]
    rook: Option<PathBuf>,
    /// Also verify root interlacing under vertex deletion (graphs) or the
    /// PF property (rook boards); the verdict drives the exit code.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct GenusRunArgs {
    /// Built-in family index (1–8).
    #[arg(long)]
    family: usize,
    /// Produce the genus polynomials for powers 1..=k.
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct MatrixArg {
    /// Matrix file: dimension line (`n` or `rows cols`), then one
    /// polynomial entry per line, row-major.
    #[arg(long)]
    matrix: PathBuf,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    matrix: MatrixArg,
    /// Maximum number of factors to search for.
    #[arg(long, default_value_t = 3)]
    depth: usize,
}

#[derive(Subcommand)]
enum GenusCmd {
    /// Generate genus polynomials and test real-rootedness (the exit code
    /// reports the all-real conjecture on the requested range).
    Run(GenusRunArgs),
    /// Decide the nice-matrix predicate with per-clause evidence.
    Nice(MatrixArg),
    /// Search for a factorization into nice factors.
    Decompose(DecomposeArgs),
}

#[derive(Args)]
struct DiagnoseArgs {
    /// Polynomial text; `q` is accepted as an alias for `x`.
    #[arg(long)]
    poly: String,
}

/// Everything a finished run needs: the envelope pieces, the exit verdict,
/// and an optional CSV override for tabular output.
struct Outcome {
    command: &'static str,
    inputs: Value,
    result: Value,
    approximations: Option<Value>,
    pass: bool,
    csv: Option<String>,
}

impl Outcome {
    fn new(command: &'static str, inputs: Value, result: Value, pass: bool) -> Outcome {
        Outcome {
            command,
            inputs,
            result,
            approximations: None,
            pass,
            csv: None,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli.command) {
        Ok(out) => {
            match &out.csv {
                Some(table) => print!("{table}"),
                None => println!(
                    "{}",
                    serde_json::to_string_pretty(&envelope(
                        out.command,
                        out.inputs,
                        out.result,
                        out.approximations
                    ))
                    .expect("serializable")
                ),
            }
            ExitCode::from(u8::from(!out.pass))
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Roots(args) => cmd_roots(args),
        Command::Family { action } => match action {
            FamilyCmd::Gen(args) => cmd_family_gen(args),
            FamilyCmd::Verify(args) => cmd_family_verify(args),
        },
        Command::Check { action } => cmd_check(action),
        Command::Matching(args) => cmd_matching(args),
        Command::Genus { action } => match action {
            GenusCmd::Run(args) => cmd_genus_run(args),
            GenusCmd::Nice(args) => cmd_genus_nice(args),
            GenusCmd::Decompose(args) => cmd_genus_decompose(args),
        },
        Command::Diagnose(args) => cmd_diagnose(args),
    }
}

fn core_err(e: sturm_core::Error) -> String {
    e.to_string()
}

fn read_file(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

// ---------------------------------------------------------------------------
// roots
// ---------------------------------------------------------------------------

fn cmd_roots(args: RootsArgs) -> Result<Outcome, String> {
    let p = parse_poly(&args.poly)?;
    if p.is_zero() {
        return Err("the zero polynomial has no root data".into());
    }
    let iso = isolate_real_roots(&p).map_err(core_err)?;

    let mut approx_rows: Vec<(String, usize)> = Vec::new();
    let approximations = match &args.refine {
        None => None,
        Some(text) => {
            let width = parse_rat(text)?;
            if width <= rat(0) {
                return Err(format!("refinement width must be positive, got {text}"));
            }
            let digits = digits_for(&width);
            let mut list = Vec::new();
            for root in &iso.roots {
                let refined =
                    refine_root(&iso.squarefree, &root.interval, &width).map_err(core_err)?;
                let value = refined.approx(digits);
                approx_rows.push((value.clone(), root.multiplicity));
                list.push(json!({
                    "value": value,
                    "width": width.to_string(),
                    "multiplicity": root.multiplicity,
                }));
            }
            Some(json!(list))
        }
    };

    let csv = args.csv.then(|| {
        let mut table = String::from("lo,hi,multiplicity,approx\n");
        for (i, root) in iso.roots.iter().enumerate() {
            let approx = approx_rows.get(i).map_or("", |(v, _)| v.as_str());
            table.push_str(&format!(
                "{},{},{},{}\n",
                root.interval.lo, root.interval.hi, root.multiplicity, approx
            ));
        }
        table
    });

    let mut result = isolation_json(&iso);
    result["polynomial"] = json!(p.to_text("x"));
    result["real_rooted"] = json!(is_real_rooted(&p));
    Ok(Outcome {
        command: "roots",
        inputs: json!({"poly": args.poly, "refine": args.refine}),
        result,
        approximations,
        pass: true,
        csv,
    })
}

// ---------------------------------------------------------------------------
// family
// ---------------------------------------------------------------------------

fn param_map(params: &[String]) -> Result<BTreeMap<String, Rat>, String> {
    let mut map = BTreeMap::new();
    for p in params {
        let (key, value) = p
            .split_once('=')
            .ok_or_else(|| format!("parameter {p:?} is not of the form key=value"))?;
        map.insert(key.trim().to_owned(), parse_rat(value)?);
    }
    Ok(map)
}

fn param_usize(map: &BTreeMap<String, Rat>, key: &str, default: i64) -> Result<u8, String> {
    let v = match map.get(key) {
        None => rat(default),
        Some(v) => v.clone(),
    };
    if !v.is_integer() || v < rat(0) || v > rat(u8::MAX as i64) {
        return Err(format!(
            "parameter {key} must be a small nonnegative integer"
        ));
    }
    Ok(v.to_integer().try_into().expect("bounded above"))
}

fn parse_multiset(text: &Option<String>) -> Result<Vec<u32>, String> {
    let text = text
        .as_ref()
        .ok_or("this family needs --multiset with comma-separated multiplicities")?;
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad multiplicity {t:?}"))
        })
        .collect()
}

/// The polynomial of index `n`, plus the variable it is conventionally
/// rendered with.
fn family_member(args: &FamilyArgs) -> Result<(Poly, &'static str), String> {
    let map = param_map(&args.params)?;
    let n = args.n;
    let param = |key: &str, default: Rat| map.get(key).cloned().unwrap_or(default);
    let ortho = |kind: Orthogonal| -> Result<(Poly, &'static str), String> {
        let seq = kind.sequence(n).map_err(core_err)?;
        Ok((seq.last().expect("nonempty").clone(), "x"))
    };
    match args.name.as_str() {
        "narayana" => Ok((narayana_poly(n).map_err(core_err)?, "q")),
        "stirling2" | "stirling" => {
            let seq = Recurrence::stirling().generate(n);
            Ok((seq.last().expect("nonempty").clone(), "q"))
        }
        "eulerian" => Ok((eulerian_poly(n), "q")),
        "derangement" => Ok((derangement_poly(n), "q")),
        "tanny" => Ok((tanny_poly(n), "q")),
        "sulanke" => Ok((
            sulanke_poly(param_usize(&map, "alpha", 1)?, n).map_err(core_err)?,
            "q",
        )),
        "dowling-d" => Ok((
            dowling_d(param_usize(&map, "m", 2)?.into(), n).map_err(core_err)?,
            "q",
        )),
        "dowling-f" => Ok((
            dowling_f(param_usize(&map, "m", 2)?.into(), n).map_err(core_err)?,
            "q",
        )),
        "multiset-composition" | "multiset" => Ok((
            multiset_composition_poly(&parse_multiset(&args.multiset)?).map_err(core_err)?,
            "q",
        )),
        "q-eulerian" => Ok((q_eulerian_poly(n, &param("q", rat(1))), "x")),
        "type-b-eulerian" => Ok((
            type_b_eulerian_poly(n, &param("q", rat(1))).map_err(core_err)?,
            "x",
        )),
        "tchebyshev" | "chebyshev" => ortho(Orthogonal::Tchebyshev),
        "hermite" => ortho(Orthogonal::Hermite),
        "laguerre" => ortho(Orthogonal::Laguerre),
        "legendre" => ortho(Orthogonal::Legendre),
        "gegenbauer" => ortho(Orthogonal::Gegenbauer {
            lambda: param("lambda", frac(1, 2)),
        }),
        "jacobi" => ortho(Orthogonal::Jacobi {
            alpha: param("alpha", rat(0)),
            beta: param("beta", rat(0)),
        }),
        other => Err(format!(
            "unknown family {other:?}; see `family gen --help` for the list"
        )),
    }
}

fn family_inputs(args: &FamilyArgs) -> Value {
    json!({
        "name": args.name,
        "n": args.n,
        "params": args.params,
        "multiset": args.multiset,
    })
}

fn cmd_family_gen(args: FamilyArgs) -> Result<Outcome, String> {
    let (poly, var) = family_member(&args)?;
    let inputs = family_inputs(&args);
    let result = json!({
        "polynomial": poly.to_text(var),
        "variable": var,
        "degree": poly.degree(),
    });
    Ok(Outcome::new("family gen", inputs, result, true))
}

/// Oracle-backed and root/Sturm checks per family kind, reported through
/// one CheckReport whose verdict drives the exit code.
fn cmd_family_verify(args: FamilyArgs) -> Result<Outcome, String> {
    let mut rep = CheckReport::new();
    let name = args.name.as_str();
    let n_max = args.n;

    let oracle_kind = match name {
        "narayana" => Some(OracleKind::NarayanaPath),
        "stirling2" | "stirling" => Some(OracleKind::Stirling),
        "eulerian" => Some(OracleKind::EulerianExc),
        "derangement" => Some(OracleKind::DerangementExc),
        _ => None,
    };

    if name == "multiset-composition" || name == "multiset" {
        let multiset = parse_multiset(&args.multiset)?;
        let built = multiset_composition_poly(&multiset).map_err(core_err)?;
        let enumerated = enumerate_multiset_compositions(&multiset).map_err(core_err)?;
        rep.conclusion(
            "matches direct enumeration",
            built == enumerated,
            format!("built {}", built.to_text("q")),
        );
        rep.conclusion("real-rooted", is_real_rooted(&built), built.to_text("q"));
    } else {
        let min_index = match name {
            "narayana" | "sulanke" => 1,
            _ => 0,
        };
        if n_max < min_index {
            return Err(format!("{name} indices start at {min_index}"));
        }
        let mut sequence = Vec::new();
        for k in min_index..=n_max {
            let sub = FamilyArgs {
                name: args.name.clone(),
                n: k,
                params: args.params.clone(),
                multiset: args.multiset.clone(),
            };
            let (poly, var) = family_member(&sub)?;
            rep.conclusion(
                format!("entry {k} real-rooted"),
                is_real_rooted(&poly),
                poly.to_text(var),
            );
            if let Some(kind) = oracle_kind {
                if k <= ENUMERATION_CAP {
                    let enumerated = enumerate_oracle(kind, k).map_err(core_err)?;
                    rep.conclusion(
                        format!("entry {k} matches enumeration"),
                        poly == enumerated,
                        format!("enumerated {}", enumerated.to_text(var)),
                    );
                }
            }
            if name == "derangement" {
                rep.conclusion(
                    format!("entry {k} palindromic on its support"),
                    is_palindromic_on_support(&poly),
                    poly.to_text(var),
                );
            }
            sequence.push(poly);
        }
        match name {
            "derangement" => {
                let verdict = is_generalized_sturm_sequence(&sequence);
                let witness = verdict
                    .reason
                    .as_ref()
                    .and_then(|r| verdict.failure_index.map(|i| format!("entry {i}: {r}")))
                    .unwrap_or_else(|| format!("entries 0..={n_max}"));
                rep.conclusion("generalized Sturm sequence", verdict.ok, witness);
            }
            "tchebyshev" | "chebyshev" | "hermite" | "laguerre" | "legendre" | "gegenbauer"
            | "jacobi" => {
                let sturm = is_sturm_sequence(&sequence).map_err(core_err)?;
                rep.conclusion("Sturm sequence", sturm, format!("entries 0..={n_max}"));
            }
            _ => {}
        }
    }

    let pass = rep.all_pass();
    Ok(Outcome::new(
        "family verify",
        family_inputs(&args),
        report_json(&rep),
        pass,
    ))
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

fn report_outcome(
    command: &'static str,
    inputs: Value,
    rep: &CheckReport,
) -> Result<Outcome, String> {
    Ok(Outcome::new(
        command,
        inputs,
        report_json(rep),
        rep.all_pass(),
    ))
}

fn cmd_check(action: CheckCmd) -> Result<Outcome, String> {
    match action {
        CheckCmd::ThmFfg(a) => {
            let (f, g) = (parse_poly(&a.pair.f)?, parse_poly(&a.pair.g)?);
            let (ca, cb) = (parse_poly(&a.a)?, parse_poly(&a.b)?);
            let rep = check_thm_ffg(&f, &g, &ca, &cb);
            report_outcome(
                "check thm-ffg",
                json!({"f": a.pair.f, "g": a.pair.g, "a": a.a, "b": a.b}),
                &rep,
            )
        }
        CheckCmd::ThmFfgk(a) => {
            let f = parse_poly(&a.f)?;
            let gs: Vec<Poly> =
                a.gs.iter()
                    .map(|t| parse_poly(t))
                    .collect::<Result<_, _>>()?;
            let ca = parse_poly(&a.a)?;
            let bs: Vec<Poly> =
                a.bs.iter()
                    .map(|t| parse_poly(t))
                    .collect::<Result<_, _>>()?;
            let rep = check_thm_ffgk(&f, &gs, &ca, &bs).map_err(core_err)?;
            report_outcome(
                "check thm-ffgk",
                json!({"f": a.f, "g": a.gs, "a": a.a, "b": a.bs}),
                &rep,
            )
        }
        CheckCmd::CorPpp(a) => {
            let rec = match a.recurrence {
                RecurrenceName::Stirling => Recurrence::stirling(),
                RecurrenceName::Eulerian => Recurrence::eulerian(),
                RecurrenceName::Derangement => Recurrence::derangement(),
            };
            let mode = match a.mode {
                ModeName::Nonnegative => SignMode::Nonnegative,
                ModeName::Alternating => SignMode::Alternating,
            };
            let rep = check_cor_ppp(&rec, a.n_max, mode).map_err(core_err)?;
            report_outcome(
                "check cor-ppp",
                json!({"recurrence": rec.name, "n_max": a.n_max, "mode": mode.label()}),
                &rep,
            )
        }
        CheckCmd::LemmaGfg(a) => {
            let (f, g) = (parse_poly(&a.pair.f)?, parse_poly(&a.pair.g)?);
            let (c, d) = (parse_poly(&a.c)?, parse_poly(&a.d)?);
            let part = if a.part == 1 {
                LemmaPart::I
            } else {
                LemmaPart::II
            };
            let strictness = if a.weak {
                Strictness::Weak
            } else {
                Strictness::Strict
            };
            let rep = check_lemma_gfg(&f, &g, &c, &d, part, strictness);
            report_outcome(
                "check lemma-gfg",
                json!({
                    "f": a.pair.f, "g": a.pair.g, "c": a.c, "d": a.d,
                    "part": a.part, "weak": a.weak,
                }),
                &rep,
            )
        }
        CheckCmd::ThmFgfg(a) => {
            let (f, g) = (parse_poly(&a.pair.f)?, parse_poly(&a.pair.g)?);
            let (ca, cb) = (parse_poly(&a.a)?, parse_poly(&a.b)?);
            let (cc, cd) = (parse_poly(&a.c)?, parse_poly(&a.d)?);
            let rep = check_thm_fgfg(&f, &g, &ca, &cb, &cc, &cd);
            report_outcome(
                "check thm-fgfg",
                json!({
                    "f": a.pair.f, "g": a.pair.g,
                    "a": a.a, "b": a.b, "c": a.c, "d": a.d,
                }),
                &rep,
            )
        }
        CheckCmd::CorCfdg(a) => {
            let (f, g) = (parse_poly(&a.pair.f)?, parse_poly(&a.pair.g)?);
            let (ca, cb) = (parse_poly(&a.a)?, parse_poly(&a.b)?);
            let (c, d) = (parse_rat(&a.c)?, parse_rat(&a.d)?);
            let rep = check_cor_cfdg(&f, &g, &ca, &cb, &c, &d);
            report_outcome(
                "check cor-cfdg",
                json!({
                    "f": a.pair.f, "g": a.pair.g,
                    "a": a.a, "b": a.b, "c": a.c, "d": a.d,
                }),
                &rep,
            )
        }
        CheckCmd::ThmWy(a) => {
            let (f, g) = (parse_poly(&a.pair.f)?, parse_poly(&a.pair.g)?);
            let (ra, rb) = (parse_rat(&a.a)?, parse_rat(&a.b)?);
            let (rc, rd) = (parse_rat(&a.c)?, parse_rat(&a.d)?);
            let rep = check_thm_wy(&f, &g, &ra, &rb, &rc, &rd);
            report_outcome(
                "check thm-wy",
                json!({
                    "f": a.pair.f, "g": a.pair.g,
                    "a": a.a, "b": a.b, "c": a.c, "d": a.d,
                }),
                &rep,
            )
        }
        CheckCmd::CorWyPf(a) => {
            let (f, g) = (parse_poly(&a.pair.f)?, parse_poly(&a.pair.g)?);
            let (ra, rb) = (parse_rat(&a.a)?, parse_rat(&a.b)?);
            let (rc, rd) = (parse_rat(&a.c)?, parse_rat(&a.d)?);
            let rep = check_cor_wy_pf(&f, &g, &ra, &rb, &rc, &rd);
            report_outcome(
                "check cor-wy-pf",
                json!({
                    "f": a.pair.f, "g": a.pair.g,
                    "a": a.a, "b": a.b, "c": a.c, "d": a.d,
                }),
                &rep,
            )
        }
        CheckCmd::CorHaglund(a) => {
            let (f, g) = (parse_poly(&a.pair.f)?, parse_poly(&a.pair.g)?);
            let (ra, rb, rd) = (parse_rat(&a.a)?, parse_rat(&a.b)?, parse_rat(&a.d)?);
            let rep = check_cor_haglund(&f, &g, &ra, &rb, &rd);
            report_outcome(
                "check cor-haglund",
                json!({"f": a.pair.f, "g": a.pair.g, "a": a.a, "b": a.b, "d": a.d}),
                &rep,
            )
        }
        CheckCmd::Identities => {
            let rep = identity_suite();
            report_outcome("check identities", json!({}), &rep)
        }
        CheckCmd::Harness(a) => {
            let seed = a.seed.unwrap_or_else(harness_seed);
            let outcomes = run_soundness_harness(a.instances, seed);
            let violations: usize = outcomes.iter().map(|o| o.violations).sum();
            let result = json!({
                "seed": seed,
                "instances_per_certifier": a.instances,
                "total_violations": violations,
                "certifiers": outcomes.iter().map(|o| json!({
                    "certifier": o.certifier,
                    "instances": o.instances,
                    "supported": o.supported,
                    "violations": o.violations,
                    "first_violation": o.first_violation,
                })).collect::<Vec<_>>(),
            });
            Ok(Outcome::new(
                "check harness",
                json!({"instances": a.instances, "seed": seed}),
                result,
                violations == 0,
            ))
        }
    }
}

// ---------------------------------------------------------------------------
// matching
// ---------------------------------------------------------------------------

fn cmd_matching(args: MatchingArgs) -> Result<Outcome, String> {
    match (&args.graph, &args.rook) {
        (Some(path), None) => {
            let g = GraphSpec::parse(&read_file(path)?).map_err(core_err)?;
            let counts = matching_counts(&g);
            let mut result = json!({
                "vertices": g.vertex_count(),
                "edges": g.edges().len(),
                "matching_counts": counts.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "matching_polynomial": matching_polynomial(&g).to_text("x"),
                "generating_polynomial": matching_generating_polynomial(&g).to_text("x"),
            });
            let mut pass = true;
            if args.verify {
                let rep = verify_heilmann_lieb(&g).map_err(core_err)?;
                pass = rep.all_pass();
                result["verification"] = report_json(&rep);
            }
            Ok(Outcome::new(
                "matching",
                json!({"graph": path.display().to_string(), "verify": args.verify}),
                result,
                pass,
            ))
        }
        (None, Some(path)) => {
            let cells = parse_board(&read_file(path)?).map_err(core_err)?;
            let poly = rook_polynomial(&cells).map_err(core_err)?;
            let mut result = json!({
                "cells": cells.len(),
                "rook_polynomial": poly.to_text("x"),
            });
            let mut pass = true;
            if args.verify {
                pass = is_pf(&poly);
                result["verification"] = json!({
                    "name": "rook polynomial in PF",
                    "pass": pass,
                });
            }
            Ok(Outcome::new(
                "matching",
                json!({"rook": path.display().to_string(), "verify": args.verify}),
                result,
                pass,
            ))
        }
        _ => Err("exactly one of --graph or --rook is required".into()),
    }
}

// ---------------------------------------------------------------------------
// genus
// ---------------------------------------------------------------------------

fn cmd_genus_run(args: GenusRunArgs) -> Result<Outcome, String> {
    let entries = genus_sequence(args.family, args.k).map_err(core_err)?;
    let width = frac(1, 1_000_000);
    let digits = digits_for(&width);

    let mut rows = Vec::new();
    let mut approx = Vec::new();
    let mut all_real = true;
    for (i, p) in entries.iter().enumerate() {
        let k = i + 1;
        let deg = p.degree().unwrap_or(0);
        let iso = isolate_real_roots(p).map_err(core_err)?;
        let real = iso.total_with_multiplicity();
        all_real &= real == deg;
        let mut row = isolation_json(&iso);
        row["k"] = json!(k);
        row["polynomial"] = json!(p.to_text("x"));
        row["degree"] = json!(deg);
        row["real_rooted"] = json!(real == deg);
        rows.push(row);
        for root in &iso.roots {
            let refined = refine_root(&iso.squarefree, &root.interval, &width).map_err(core_err)?;
            approx.push(json!({
                "k": k,
                "value": refined.approx(digits),
                "width": width.to_string(),
                "multiplicity": root.multiplicity,
            }));
        }
    }

    let result = json!({
        "family": args.family,
        "k": args.k,
        "entries": rows,
        "all_real_rooted": all_real,
    });
    Ok(Outcome {
        command: "genus run",
        inputs: json!({"family": args.family, "k": args.k}),
        result,
        approximations: Some(json!(approx)),
        pass: all_real,
        csv: None,
    })
}

fn cmd_genus_nice(args: MatrixArg) -> Result<Outcome, String> {
    let m = PolyMatrix::parse(&read_file(&args.matrix)?).map_err(core_err)?;
    let cert = is_nice(&m).map_err(core_err)?;
    let mut result = certificate_json(&cert);
    result["matrix"] = json!(m.to_text());
    Ok(Outcome::new(
        "genus nice",
        json!({"matrix": args.matrix.display().to_string()}),
        result,
        cert.verdict,
    ))
}

fn cmd_genus_decompose(args: DecomposeArgs) -> Result<Outcome, String> {
    let m = PolyMatrix::parse(&read_file(&args.matrix.matrix)?).map_err(core_err)?;
    let factors = decompose_nice(&m, args.depth).map_err(core_err)?;
    let result = json!({
        "matrix": m.to_text(),
        "found": factors.is_some(),
        "factors": factors
            .as_ref()
            .map(|fs| fs.iter().map(PolyMatrix::to_text).collect::<Vec<_>>()),
    });
    Ok(Outcome::new(
        "genus decompose",
        json!({
            "matrix": args.matrix.matrix.display().to_string(),
            "depth": args.depth,
        }),
        result,
        factors.is_some(),
    ))
}

// ---------------------------------------------------------------------------
// diagnose
// ---------------------------------------------------------------------------

fn cmd_diagnose(args: DiagnoseArgs) -> Result<Outcome, String> {
    let p = parse_poly(&args.poly)?;
    if p.is_zero() {
        return Err("the zero polynomial has no coefficient profile".into());
    }
    let (valuation, profile) = support_profile(&p);
    let result = json!({
        "polynomial": p.to_text("x"),
        "valuation": valuation,
        "support_coeffs": profile.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "unimodal": profile.unimodal,
        "log_concave": profile.log_concave,
        "modes": profile.modes,
        "newton_margins": profile
            .newton_margins
            .as_ref()
            .map(|ms| ms.iter().map(ToString::to_string).collect::<Vec<_>>()),
        "darroch_interval": profile
            .darroch_interval
            .as_ref()
            .map(|(lo, hi)| json!([lo.to_string(), hi.to_string()])),
        "modes_within_darroch": profile.modes_within_darroch(),
    });
    Ok(Outcome::new(
        "diagnose",
        json!({"poly": args.poly}),
        result,
        true,
    ))
}
