//! `boolschur`: compute and verify Boolean product expansions from the
//! command line.

mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use boolschur::boolprod::{
    bivariate_boolean, boolean_product, boolean_q_abstract, boolean_total, check_double_schur_positive,
    check_schur_positive,
};
use boolschur::chern::{chern_plethysm, chern_roots, parse_bundle, pragacz_check, total_chern, PragaczExpansion, SymFn};
use boolschur::combinat::{partitions_inside, Partition};
use boolschur::frobmod::{
    coinvariant_grfrob, derangement_qsym_check, hrs_grfrob, hrs_superspace, positroid_frobenius, reiner_webb,
    superspace_grfrob, UndefinedTerms,
};
use boolschur::lascoux::{
    asm_count, binomial_det, gv_enumerate, lascoux_sym_expansion, lascoux_wedge_expansion, normalized_lascoux_det,
    rff_enumerate, sym_product, wedge_product,
};
use boolschur::symexpand::schur_expand;
use boolschur::verify::verify_all;
use render::{Format, Output};

const DSL_HELP: &str = "Bundle expressions:
  E:3                 base bundle E of rank 3 (any alphabetic name)
  oplus(a, b)         direct sum
  tensor(a, b)        tensor product
  wedge(k, a)         exterior power
  sym(k, a)           symmetric power
  schur([2,1], a)     Schur functor
At most two distinct base names may appear.";

#[derive(Parser)]
#[command(name = "boolschur", version, about = "Schur expansions of Boolean product polynomials and related identities")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,
    /// Worker threads; results do not depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Boolean product polynomials.
    #[command(subcommand)]
    Boolean(BooleanCmd),
    /// Lascoux's expansions of the wedge and symmetric square products.
    #[command(subcommand)]
    Lascoux(LascouxCmd),
    /// Graded Frobenius characteristics.
    #[command(subcommand)]
    Frob(FrobCmd),
    /// Chern roots and Chern plethysm.
    #[command(subcommand, after_help = DSL_HELP)]
    Chern(ChernCmd),
    /// Identity checks.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum BooleanCmd {
    /// Schur expansion of B_{n,k}.
    Expand { n: usize, k: usize },
    /// Schur expansion of B_n, the product over all k.
    Total { n: usize },
    /// The q-graded product as a series in q.
    Q { n: usize },
    /// Double Schur expansion of the bivariate product P_{k,l}(X_n; Y_m).
    Bivariate { n: usize, k: usize, m: usize, l: usize },
}

#[derive(Subcommand)]
enum LascouxCmd {
    /// Schur expansion of prod_{i<j}(1 + x_i + x_j).
    Wedge { n: usize },
    /// Schur expansion of prod_{i<=j}(1 + x_i + x_j).
    Sym { n: usize },
    /// Reverse flagged fillings of every shape inside the staircase.
    Rff {
        n: usize,
        /// Restrict to one shape, e.g. [2,1].
        #[arg(long)]
        shape: Option<String>,
    },
    /// Cross-check filling counts, determinants, path families and the ASM sum.
    Verify { n: usize },
}

#[derive(Copy, Clone, ValueEnum)]
enum UndefinedArg {
    Skip,
    Error,
}

#[derive(Subcommand)]
enum FrobCmd {
    /// Graded Frobenius series of the coinvariant algebra.
    Coinvariant { n: usize },
    /// Bigraded Frobenius series of the superspace coinvariant quotient.
    Superspace { n: usize },
    /// Frobenius characteristic of the signed positroid module.
    Positroid { n: usize },
    /// Reiner-Webb character of the derangement module.
    ReinerWebb { n: usize },
    /// Haglund-Rhoades-Shimozono quotient; with --superspace, the sum over e_j.
    Hrs {
        n: usize,
        k: usize,
        r: usize,
        #[arg(long)]
        superspace: bool,
        /// Treatment of terms outside the defined regime.
        #[arg(long, value_enum, default_value = "skip")]
        undefined_terms: UndefinedArg,
    },
    /// Quasisymmetric identity for derangements.
    DerangementCheck { n: usize },
}

#[derive(Subcommand)]
enum ChernCmd {
    /// Chern roots of a bundle expression.
    Roots { expr: String },
    /// Evaluate e3, h2, p4 or s[2,1] at the Chern roots.
    Pleth { function: String, expr: String },
    /// Total Chern class.
    Total { expr: String },
    /// Schur positivity of s_lambda at the Chern roots.
    Pragacz { lambda: String, expr: String },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run every identity check up to the given size.
    All {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

enum Failure {
    Usage(String),
    Verification(Output),
}

impl From<boolschur::Error> for Failure {
    fn from(e: boolschur::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<Output, Failure>;

fn parse_symfn(s: &str) -> Result<SymFn, Failure> {
    let s = s.trim();
    let bad = || Failure::Usage(format!("cannot parse symmetric function {s:?}; use e3, h2, p4 or s[2,1]"));
    let (head, rest) = s.split_at(s.find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(s.len()));
    if head == "s" {
        return Ok(SymFn::S(Partition::parse(rest).map_err(|_| bad())?));
    }
    let d: usize = rest.trim_start_matches('_').parse().map_err(|_| bad())?;
    match head {
        "e" => Ok(SymFn::E(d)),
        "h" => Ok(SymFn::H(d)),
        "p" => Ok(SymFn::P(d)),
        _ => Err(bad()),
    }
}

fn boolean(cmd: BooleanCmd) -> CmdResult {
    match cmd {
        BooleanCmd::Expand { n, k } => Ok(render::schur_expansion(&check_schur_positive(&boolean_product(n, k)?)?.expansion)),
        BooleanCmd::Total { n } => {
            if n >= 6 {
                eprintln!("warning: B_{n} is very large; this may not finish");
            }
            Ok(render::schur_expansion(&check_schur_positive(&boolean_total(n)?)?.expansion))
        }
        BooleanCmd::Q { n } => Ok(render::graded(&boolean_q_abstract(n)?)),
        BooleanCmd::Bivariate { n, k, m, l } => {
            Ok(render::double_expansion(&check_double_schur_positive(&bivariate_boolean(n, k, m, l)?)?.expansion))
        }
    }
}

fn lascoux_verify(n: usize) -> CmdResult {
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    let mut total = BigInt::from(0);
    for mu in partitions_inside(&Partition::staircase(n - 1)) {
        let r = BigInt::from(rff_enumerate(&mu, n).len());
        let b = binomial_det(&mu, n);
        let g = BigInt::from(gv_enumerate(&mu, n).len());
        let l = normalized_lascoux_det(&mu, n)?;
        let ok = r == b && b == g && g == l;
        if !ok {
            failures.push(format!("counts disagree at mu = {mu}"));
        }
        lines.push(format!("mu = {mu}: fillings {r}, binomial det {b}, paths {g}, lascoux det {l}"));
        total += r;
    }
    let asm = asm_count(n);
    if total != asm {
        failures.push(format!("sum of filling counts {total} differs from ASM({n}) = {asm}"));
    }
    let peeled: boolschur::schurbasis::SchurVector = schur_expand(&wedge_product(n))?.into();
    if peeled != lascoux_wedge_expansion(n) {
        failures.push("wedge expansion differs from the peeled product".into());
    }
    lines.push(format!("sum r_mu = {total} = ASM({n})"));
    let out = render::message(
        lines.join("\n"),
        json!({ "n": n, "sum": total.to_string(), "asm": asm.to_string(), "passed": failures.is_empty(), "failures": failures }),
    );
    if failures.is_empty() {
        Ok(out)
    } else {
        eprintln!("verification failed: {}", failures.join("; "));
        Err(Failure::Verification(out))
    }
}

fn lascoux(cmd: LascouxCmd) -> CmdResult {
    match cmd {
        LascouxCmd::Wedge { n } => {
            let v = lascoux_wedge_expansion(n);
            let peeled: boolschur::schurbasis::SchurVector = schur_expand(&wedge_product(n))?.into();
            if v != peeled {
                return Err(Failure::Verification(render::schur_vector(&v)));
            }
            Ok(render::schur_vector(&v))
        }
        LascouxCmd::Sym { n } => {
            let v = lascoux_sym_expansion(n);
            let peeled: boolschur::schurbasis::SchurVector = schur_expand(&sym_product(n))?.into();
            if v != peeled {
                return Err(Failure::Verification(render::schur_vector(&v)));
            }
            Ok(render::schur_vector(&v))
        }
        LascouxCmd::Rff { n, shape } => {
            if n == 0 {
                return Err(Failure::Usage("n must be at least 1".into()));
            }
            let stair = Partition::staircase(n - 1);
            let shapes = match shape {
                Some(s) => {
                    let mu = Partition::parse(&s)?;
                    if !stair.contains(&mu) {
                        return Err(Failure::Usage(format!("{mu} does not fit inside the staircase {stair}")));
                    }
                    vec![mu]
                }
                None => partitions_inside(&stair),
            };
            let mut plain = Vec::new();
            let mut entries = Vec::new();
            for mu in shapes {
                let fs = rff_enumerate(&mu, n);
                let shown: Vec<String> = fs.iter().map(ToString::to_string).collect();
                plain.push(format!("{mu} [{}]: {}", fs.len(), shown.join("; ")));
                entries.push(json!({ "mu": mu, "count": fs.len(), "fillings": fs }));
            }
            Ok(render::message(plain.join("\n"), json!({ "n": n, "shapes": entries })))
        }
        LascouxCmd::Verify { n } => lascoux_verify(n),
    }
}

fn frob(cmd: FrobCmd) -> CmdResult {
    match cmd {
        FrobCmd::Coinvariant { n } => Ok(render::graded(&coinvariant_grfrob(n))),
        FrobCmd::Superspace { n } => Ok(render::graded(&superspace_grfrob(n))),
        FrobCmd::Positroid { n } => Ok(render::schur_vector(&positroid_frobenius(n))),
        FrobCmd::ReinerWebb { n } => Ok(render::schur_vector(&reiner_webb(n)?)),
        FrobCmd::Hrs { n, k, r, superspace, undefined_terms } => {
            if !superspace {
                return Ok(render::graded(&hrs_grfrob(n, k, r)?));
            }
            let policy = match undefined_terms {
                UndefinedArg::Skip => UndefinedTerms::Skip,
                UndefinedArg::Error => UndefinedTerms::Error,
            };
            let res = hrs_superspace(n, k, r, policy)?;
            if !res.skipped.is_empty() {
                eprintln!("skipped terms j = {:?}", res.skipped);
            }
            Ok(render::graded(&res.series))
        }
        FrobCmd::DerangementCheck { n } => {
            let ok = derangement_qsym_check(n);
            let out = render::message(
                format!("derangement identity at n = {n}: {}", if ok { "holds" } else { "FAILS" }),
                json!({ "n": n, "passed": ok }),
            );
            if ok {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
    }
}

fn chern(cmd: ChernCmd) -> CmdResult {
    match cmd {
        ChernCmd::Roots { expr } => Ok(render::roots(&chern_roots(&parse_bundle(&expr)?)?)),
        ChernCmd::Pleth { function, expr } => {
            let f = parse_symfn(&function)?;
            Ok(render::polynomial(&chern_plethysm(&f, &parse_bundle(&expr)?)?))
        }
        ChernCmd::Total { expr } => Ok(render::polynomial(&total_chern(&parse_bundle(&expr)?)?)),
        ChernCmd::Pragacz { lambda, expr } => {
            let lambda = Partition::parse(&lambda)?;
            let res = pragacz_check(&lambda, &parse_bundle(&expr)?)?;
            let mut out = match &res.expansion {
                PragaczExpansion::Single(e) => render::schur_expansion(e),
                PragaczExpansion::Double(e) => render::double_expansion(e),
            };
            out.json = json!({ "positive": res.positive, "expansion": out.json });
            if res.positive {
                Ok(out)
            } else {
                eprintln!("s{lambda} at these Chern roots has a negative coefficient");
                Err(Failure::Verification(out))
            }
        }
    }
}

fn verify(cmd: VerifyCmd) -> CmdResult {
    let VerifyCmd::All { max_n } = cmd;
    let checks = verify_all(max_n);
    let lines: Vec<String> = checks
        .iter()
        .map(|c| format!("{:>2} {} {}: {}", c.id, if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))
        .collect();
    let entries: Vec<_> = checks
        .iter()
        .map(|c| json!({ "id": c.id, "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
    let out = render::message(lines.join("\n"), json!({ "max_n": max_n, "checks": entries }));
    if failed.is_empty() {
        Ok(out)
    } else {
        for c in failed {
            eprintln!("failed: {} ({})", c.name, c.detail);
        }
        Err(Failure::Verification(out))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Boolean(c) => boolean(c),
        Command::Lascoux(c) => lascoux(c),
        Command::Frob(c) => frob(c),
        Command::Chern(c) => chern(c),
        Command::Verify(c) => verify(c),
    };
    match result {
        Ok(out) => {
            println!("{}", out.render(cli.format));
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            println!("{}", out.render(cli.format));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
