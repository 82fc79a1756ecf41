//! `loopk`: exact-arithmetic calculator and identity verifier for the
//! K-theory and cohomology rings attached to the based loop space of SU(2).
//!
//! Exit codes: 0 on success (all checks pass), 1 when a verification check
//! fails, 2 on usage or parse errors.

mod parse;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use loopk_core::chern::{ch_element_g, ch_element_t};
use loopk_core::gamma::{gamma_to_symmetric, specialize_tower, GammaElt};
use loopk_core::quotient::{elementary_symmetric, ext, symmetric_reduce, CoeffRing, SymVec};
use loopk_core::tower::{
    istar_generators_ht, istar_generators_kt, istar_matrix_h, istar_matrix_k, kernel_basis_h,
    kernel_basis_k, TowerElt,
};
use loopk_core::verify::{run_full, Check, SuiteParams};

use parse::{parse_element, ParsedElt, RingTag};

const SEED_ENV: &str = "LOOPK_SEED";

#[derive(Parser)]
#[command(
    name = "loopk",
    version,
    about = "Exact algebra for the loop-space K-theory of SU(2): quotient rings, i* towers, Chern characters, divided powers"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized property checks (default: $LOOPK_SEED or 0)
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full identity-verification suite
    Verify {
        /// Deepest tower level (matrix checks run one level beyond; capped
        /// at 5 because the level-r structure constants grow like 5^(2r))
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=5))]
        rmax: u32,
        /// Series truncation degree
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(4..=64))]
        degree: u32,
    },
    /// Parse an element and print its normal form
    Reduce {
        #[arg(long, value_enum)]
        ring: RingTag,
        /// Number of generators
        #[arg(long)]
        n: u32,
        /// Element text, e.g. "L1*L1" or "s1 - v*s0"
        elt: String,
    },
    /// Print the i*-matrix at level r, or apply i* to an element
    Istar {
        #[arg(long, value_enum, default_value = "kg")]
        ring: RingTag,
        /// The level r (the map goes from level r to level r-1)
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        rmax: u32,
        /// Optional element of the level-r ring (n = 2r)
        elt: Option<String>,
    },
    /// Print the canonical kernel basis K1, K2 at level r
    Kernel {
        #[arg(long, value_enum, default_value = "kg")]
        ring: RingTag,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        rmax: u32,
    },
    /// Chern character of a K-theory element
    Chern {
        #[arg(long, value_enum, default_value = "kg")]
        ring: RingTag,
        /// Number of generators (default 2 * rmax)
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        rmax: u32,
        /// Series truncation degree
        #[arg(long, default_value_t = 12)]
        degree: u32,
        elt: String,
    },
    /// Verify the divided-power truncation isomorphism at cutoff k = n
    Gamma {
        /// Truncation cutoff (number of square-zero variables)
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(0..=16))]
        n: u32,
    },
    /// Build the compatible tower below a symmetric K_G element
    Limit {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        rmax: u32,
        /// Symmetric element of the top level (n = 2 * rmax) over `Z[v]`
        elt: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.seed.unwrap_or_else(|| {
        std::env::var(SEED_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(0)
    });
    match run(cli, seed) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli, seed: u64) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify { rmax, degree } => {
            let params = SuiteParams {
                rmax: rmax as usize,
                degree: degree as usize,
                seed,
            };
            let checks = run_full(&params);
            let pass = checks.iter().all(|c| c.pass);
            if cli.json {
                println!("{}", report_json(&params, &checks, pass));
            } else {
                for c in &checks {
                    print_check(c);
                }
                println!(
                    "{}: {} checks, {} failed (rmax = {}, degree = {}, seed = {})",
                    if pass { "pass" } else { "FAIL" },
                    checks.len(),
                    checks.iter().filter(|c| !c.pass).count(),
                    params.rmax,
                    params.degree,
                    params.seed,
                );
            }
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Reduce { ring, n, elt } => {
            let parsed = parse_element(&elt, ring, n as usize).map_err(|e| e.to_string())?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "input": elt,
                        "ring": ring.name(),
                        "n": n,
                        "normal_form": parsed.to_string(),
                    })
                );
            } else {
                println!("{parsed}");
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Istar { ring, rmax, elt } => istar_cmd(cli.json, ring, rmax as usize, elt),

        Command::Kernel { ring, rmax } => {
            let r = rmax as usize;
            let (k1, k2) = match ring {
                RingTag::Kt | RingTag::Kg => {
                    let kb = kernel_basis_k(r);
                    (sym_expr(&kb.k1), sym_expr(&kb.k2))
                }
                RingTag::Ht | RingTag::Hg => {
                    let kb = kernel_basis_h(r);
                    (sym_expr(&kb.k1), sym_expr(&kb.k2))
                }
                RingTag::Ext => return Err("kernel bases live in the kt/kg/ht/hg rings".into()),
            };
            if cli.json {
                println!(
                    "{}",
                    json!({ "r": r, "ring": ring.name(), "K1": k1, "K2": k2 })
                );
            } else {
                println!("K1 = {k1}");
                println!("K2 = {k2}");
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Chern {
            ring,
            n,
            rmax,
            degree,
            elt,
        } => {
            let n = n.unwrap_or(2 * rmax) as usize;
            let d = degree as usize;
            let image = match parse_element(&elt, ring, n).map_err(|e| e.to_string())? {
                ParsedElt::Kt(e) => ch_element_t(&e, d).to_string(),
                ParsedElt::Kg(e) => ch_element_g(&e, d).to_string(),
                _ => return Err("the Chern character takes kt or kg elements".into()),
            };
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "input": elt,
                        "ring": ring.name(),
                        "n": n,
                        "degree": d,
                        "chern": image,
                    })
                );
            } else {
                println!("{image}");
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Gamma { n } => {
            let k = n as usize;
            let checks = gamma_suite(k);
            let pass = checks.iter().all(|c| c.pass);
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "k": k,
                        "suite": checks_json(&checks),
                        "pass": pass,
                    })
                );
            } else {
                for c in &checks {
                    print_check(c);
                }
                println!(
                    "{}: {} checks",
                    if pass { "pass" } else { "FAIL" },
                    checks.len()
                );
            }
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Command::Limit { rmax, elt } => {
            let r_max = rmax as usize;
            let top = match parse_element(&elt, RingTag::Kg, 2 * r_max)
                .map_err(|e| e.to_string())?
            {
                ParsedElt::Kg(e) => symmetric_reduce(&e).map_err(|e| format!("top level: {e}"))?,
                _ => unreachable!("kg tag parses to a kg element"),
            };
            let tower = TowerElt::from_top(top);
            let compatible = tower.check();
            let gammas = specialize_tower(&tower).map_err(|e| e.to_string())?;
            if cli.json {
                let levels: Vec<Vec<String>> =
                    tower.levels().iter().map(|v| v.coeff_strings()).collect();
                println!(
                    "{}",
                    json!({
                        "rmax": r_max,
                        "levels": levels,
                        "compatible": compatible,
                        "gamma": gammas.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    })
                );
            } else {
                for (r, level) in tower.levels().iter().enumerate() {
                    println!("sigma_{r} = {}", sym_expr(level));
                }
                println!("compatible: {compatible}");
                for (r, g) in gammas.iter().enumerate() {
                    println!("gamma_{r} = {g}");
                }
            }
            Ok(if compatible {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn istar_cmd(
    json_out: bool,
    ring: RingTag,
    r: usize,
    elt: Option<String>,
) -> Result<ExitCode, String> {
    let Some(text) = elt else {
        // no element: print the matrix of i* on the s-basis
        let rendered = match ring {
            RingTag::Kt | RingTag::Kg => istar_matrix_k(r).render(),
            RingTag::Ht | RingTag::Hg => istar_matrix_h(r).render(),
            RingTag::Ext => return Err("i* acts on the kt/kg/ht/hg rings".into()),
        };
        if json_out {
            println!(
                "{}",
                json!({ "r": r, "ring": ring.name(), "matrix": rendered })
            );
        } else {
            println!("{rendered}");
        }
        return Ok(ExitCode::SUCCESS);
    };

    let n = 2 * r;
    let image = match parse_element(&text, ring, n).map_err(|e| e.to_string())? {
        // T cases: direct generator substitution
        ParsedElt::Kt(e) => istar_generators_kt(&e)
            .map_err(|e| e.to_string())?
            .to_string(),
        ParsedElt::Ht(e) => istar_generators_ht(&e)
            .map_err(|e| e.to_string())?
            .to_string(),
        // G cases: matrix on the s-basis (element must be symmetric)
        ParsedElt::Kg(e) => {
            let v = symmetric_reduce(&e).map_err(|e| e.to_string())?;
            let out = istar_matrix_k(r).apply(v.coeffs());
            sym_expr(&SymVec::new(&loopk_core::quotient::kg(n - 2), out))
        }
        ParsedElt::Hg(e) => {
            let v = symmetric_reduce(&e).map_err(|e| e.to_string())?;
            let out = istar_matrix_h(r).apply(v.coeffs());
            sym_expr(&SymVec::new(&loopk_core::quotient::hg(n - 2), out))
        }
        ParsedElt::Ext(_) => return Err("i* acts on the kt/kg/ht/hg rings".into()),
    };
    if json_out {
        println!(
            "{}",
            json!({ "r": r, "ring": ring.name(), "input": text, "image": image })
        );
    } else {
        println!("{image}");
    }
    Ok(ExitCode::SUCCESS)
}

/// Renders a SymVec as an s-basis expression like `s1 - v*s0`.
fn sym_expr<R: CoeffRing>(v: &SymVec<R>) -> String {
    let ring = v.ring();
    let mut out = String::new();
    for (j, c) in v.coeffs().iter().enumerate() {
        if ring.coeff.is_zero(c) {
            continue;
        }
        let rendered = ring.coeff.render(c);
        let compound = rendered.contains(" + ") || rendered.contains(" - ");
        let (neg, body) = if compound {
            (false, format!("({rendered})"))
        } else if let Some(stripped) = rendered.strip_prefix('-') {
            (true, stripped.to_string())
        } else {
            (false, rendered)
        };
        let term = if body == "1" {
            format!("s{j}")
        } else {
            format!("{body}*s{j}")
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
            out.push_str(&term);
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The truncation-isomorphism records for one cutoff k, plus exhaustive
/// associativity of the divided-power product.
fn gamma_suite(k: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let ring = ext(k);
    for i in 0..=k {
        for j in 0..=k.saturating_sub(i) {
            let ei = elementary_symmetric(&ring, i).expect("i <= k");
            let ej = elementary_symmetric(&ring, j).expect("j <= k");
            let image = ei.try_mul(&ej).expect("same ring");
            let gamma = GammaElt::basis(i).mul(&GammaElt::basis(j));
            let expect = gamma_to_symmetric(&gamma.truncate(k), k).expand();
            let ok = image == expect;
            out.push(Check {
                name: "gamma-truncation-hom",
                params: vec![
                    ("i", i.to_string()),
                    ("j", j.to_string()),
                    ("k", k.to_string()),
                ],
                pass: ok,
                detail: (!ok).then(|| format!("e_{i} e_{j} = {image}, expected {expect}")),
            });
        }
    }
    let mut assoc = true;
    for i in 0..=8usize {
        for j in 0..=8usize {
            for l in 0..=8usize {
                let (a, b, c) = (GammaElt::basis(i), GammaElt::basis(j), GammaElt::basis(l));
                assoc &= a.mul(&b).mul(&c) == a.mul(&b.mul(&c));
            }
        }
    }
    out.push(Check {
        name: "gamma-associativity",
        params: vec![("indices", "<= 8".into())],
        pass: assoc,
        detail: (!assoc).then(|| "associativity fails".into()),
    });
    out
}

fn print_check(c: &Check) {
    let params = c
        .params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ");
    if c.pass {
        println!("pass  {} {params}", c.name);
    } else {
        println!(
            "FAIL  {} {params}: {}",
            c.name,
            c.detail.as_deref().unwrap_or("(no detail)")
        );
    }
}

fn checks_json(checks: &[Check]) -> serde_json::Value {
    serde_json::Value::Array(
        checks
            .iter()
            .map(|c| {
                let params: serde_json::Map<String, serde_json::Value> = c
                    .params
                    .iter()
                    .map(|(k, v)| (k.to_string(), json!(v)))
                    .collect();
                let mut obj = serde_json::Map::new();
                obj.insert("check".into(), json!(c.name));
                obj.insert("params".into(), serde_json::Value::Object(params));
                obj.insert("status".into(), json!(if c.pass { "pass" } else { "fail" }));
                if let Some(detail) = &c.detail {
                    obj.insert("detail".into(), json!(detail));
                }
                serde_json::Value::Object(obj)
            })
            .collect(),
    )
}

fn report_json(params: &SuiteParams, checks: &[Check], pass: bool) -> String {
    json!({
        "version": env!("CARGO_PKG_VERSION"),
        "params": {
            "rmax": params.rmax,
            "degree": params.degree,
            "seed": params.seed,
        },
        "suite": checks_json(checks),
        "pass": pass,
    })
    .to_string()
}
