//! `subtle`: command-line front end for subtle-core.
//!
//! Exit codes: 0 success, 1 a computed value disagrees with the expected
//! one (or a relation fails to verify), 2 usage error, 3 budget exceeded.

mod output;
mod rows;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use subtle_core::formsf2::{h_expected, h_of, quillen_form, right_radical, BilinearFormF2};
use subtle_core::grobner::{Budget, HilbertSeries, DEFAULT_BUDGET};
use subtle_core::poly::parse_poly;
use subtle_core::spaces::{
    g2_gysin_check_with, j_lower_bound, k_expected, k_table_row, poincare, torsor_relations, verify_mq1,
    FamilyRegistry, SpaceFamily, SpacesError, TableRow,
};

use output::{Emitter, Format, Record};

#[derive(Parser)]
#[command(name = "subtle", version, about = "Steenrod squares on subtle Stiefel-Whitney classes and spin presentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Maximum S-pair reductions per Gröbner basis computation.
    #[arg(long, global = true, env = "SUBTLE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads for table commands.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Apply Sq^k to a polynomial.
    Sq {
        #[arg(long, default_value = "bso")]
        flavor: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        poly: String,
    },
    /// theta_j = Sq^{2^{j-1}} ... Sq^1 u2.
    Theta {
        #[arg(long, default_value = "bso")]
        flavor: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        j: u32,
    },
    /// Table of k(n); with --verify each row is recomputed by Gröbner bases.
    Ktable {
        #[arg(long, default_value_t = 2)]
        from: u32,
        #[arg(long, default_value_t = 10)]
        to: u32,
        #[arg(long)]
        verify: bool,
    },
    /// Table of h(n) from radicals of the Quillen forms.
    Htable {
        #[arg(long, default_value_t = 2)]
        from: u32,
        #[arg(long, default_value_t = 40)]
        to: u32,
    },
    /// Regularity of theta_0..theta_{k-1} and membership of theta_k in H(BSO_n).
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Presentation of a classifying space.
    Present {
        #[arg(long)]
        flavor: String,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Hilbert-Poincaré series of a presentation.
    Poincare {
        #[arg(long)]
        flavor: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 20)]
        max_degree: u32,
    },
    /// Relations forced on a quadratic form in I^3.
    Torsor {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 31)]
        max_j: u32,
    },
    /// Right radical of the Quillen form for n, or of a given 0/1 matrix.
    Radical {
        #[arg(long, required_unless_present = "matrix")]
        n: Option<u32>,
        /// JSON array of 0/1 rows.
        #[arg(long, conflicts_with = "n")]
        matrix: Option<String>,
    },
    /// Gysin consistency for G_2 inside Spin_7.
    G2check {
        /// Extra relations in the BSpin_7 ring.
        #[arg(long)]
        extra: Vec<String>,
    },
    /// Lower bound for the J-invariant of a form in I^3.
    Jbound {
        #[arg(long)]
        n: u32,
    },
}

enum Failure {
    Usage(String),
    Budget(String),
    Mismatch,
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<SpacesError> for Failure {
    fn from(e: SpacesError) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn family(registry: &FamilyRegistry, name: &str) -> Result<std::sync::Arc<dyn SpaceFamily>, Failure> {
    registry.get(name).map_err(|_| {
        let names: Vec<&str> = registry.names().collect();
        Failure::Usage(format!("--flavor {name}: expected one of {}", names.join(", ")))
    })
}

fn series_text(s: &HilbertSeries) -> String {
    let mono = |p: u32, q: u32| match (p, q) {
        (0, 0) => "1".to_string(),
        (p, q) => {
            let pow = |v: &str, e: u32| match e {
                0 => String::new(),
                1 => v.to_string(),
                e => format!("{v}^{e}"),
            };
            format!("{}{}", pow("T", p), pow("S", q))
        }
    };
    let mut num = String::new();
    for (c, b) in s.numerator().terms() {
        let sign = if c < 0 { " - " } else if num.is_empty() { "" } else { " + " };
        let mag = c.unsigned_abs();
        let body = match (mag, b.p + b.q) {
            (1, _) => mono(b.p, b.q),
            (m, 0) => m.to_string(),
            (m, _) => format!("{m}*{}", mono(b.p, b.q)),
        };
        num.push_str(&format!("{}{body}", if num.is_empty() && c < 0 { "-" } else { sign }));
    }
    if num.is_empty() {
        num.push('0');
    }
    let den: String = s.denominator().iter().map(|b| format!("(1 - {})", mono(b.p, b.q))).collect();
    let single = s.numerator().terms().count() <= 1;
    match (den.is_empty(), single) {
        (true, _) => num,
        (false, true) => format!("{num} / ({den})"),
        (false, false) => format!("({num}) / ({den})"),
    }
}

fn table_record(r: &TableRow) -> Record {
    let computed = r.computed.map_or_else(|| "-".to_string(), |c| c.to_string());
    let mut text = format!("n={:<3} expected={:<3} computed={:<3} {}", r.n, r.expected, computed, match (r.ok, &r.error) {
        (true, _) => "ok",
        (false, None) => "MISMATCH",
        (false, Some(_)) => "FAILED",
    });
    if let Some(e) = &r.error {
        text.push_str(&format!(" ({e})"));
    }
    Record {
        json: serde_json::to_value(r).expect("plain data"),
        text,
        csv: vec![r.n.to_string(), r.expected.to_string(), computed, r.ok.to_string()],
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let budget = Budget::new(cli.budget);
    let emitter = Emitter::new(cli.format, cli.budget);
    let registry = FamilyRegistry::with_defaults();
    let start = Instant::now();
    match cli.command {
        Command::Sq { flavor, n, k, poly } => {
            let ctx = family(&registry, &flavor)?
                .steenrod_context(n)
                .ok_or_else(|| Failure::Usage(format!("--flavor {flavor}: no Steenrod action on this family")))?;
            let x = parse_poly(ctx.ring(), &poly).map_err(usage)?;
            let y = ctx.sq(k, &x).map_err(usage)?.to_string();
            let rec = Record {
                json: json!({"flavor": flavor, "n": n, "k": k, "input": x.to_string(), "result": y}),
                csv: vec![flavor, n.to_string(), k.to_string(), x.to_string(), y.clone()],
                text: y,
            };
            emitter.single(&["flavor", "n", "k", "input", "result"], rec, start.elapsed())?;
        }
        Command::Theta { flavor, n, j } => {
            let ctx = family(&registry, &flavor)?
                .steenrod_context(n)
                .ok_or_else(|| Failure::Usage(format!("--flavor {flavor}: no Steenrod action on this family")))?;
            let theta = ctx.theta(j).map_err(usage)?;
            let b = theta.bidegree().bidegree().map(|b| json!({"p": b.p, "q": b.q}));
            let s = theta.to_string();
            let rec = Record {
                json: json!({"flavor": flavor, "n": n, "j": j, "theta": s, "bidegree": b}),
                csv: vec![flavor, n.to_string(), j.to_string(), s.clone()],
                text: s,
            };
            emitter.single(&["flavor", "n", "j", "theta"], rec, start.elapsed())?;
        }
        Command::Ktable { from, to, verify } => {
            if from < 2 || from > to {
                return Err(Failure::Usage(format!("--from {from} --to {to}: need 2 <= from <= to")));
            }
            let ns: Vec<u32> = (from..=to).collect();
            let mut emitter = emitter;
            emitter.begin_table(&["n", "expected", "computed", "ok"], None)?;
            let (mut mismatch, mut budget_hit, mut other_err, mut io_err) = (false, None, None, None);
            rows::ordered(
                &ns,
                cli.jobs,
                |&n| -> Result<TableRow, SpacesError> {
                    if verify {
                        k_table_row(n, budget)
                    } else {
                        let k = k_expected(n)?;
                        Ok(TableRow { n, expected: k, computed: None, ok: true, error: None })
                    }
                },
                |&n, r, wall| {
                    let row = match r {
                        Ok(row) => {
                            mismatch |= !row.ok;
                            row
                        }
                        Err(e) => {
                            let msg = e.to_string();
                            if e.is_budget() {
                                budget_hit.get_or_insert_with(|| msg.clone());
                            } else {
                                other_err.get_or_insert_with(|| msg.clone());
                            }
                            TableRow::new(n, k_expected(n).unwrap_or(0), Err(msg))
                        }
                    };
                    if let Err(e) = emitter.row(table_record(&row), wall) {
                        io_err.get_or_insert(e);
                    }
                },
            );
            emitter.end_table(start.elapsed())?;
            if let Some(e) = io_err {
                return Err(e.into());
            }
            if mismatch {
                return Err(Failure::Mismatch);
            }
            if let Some(e) = other_err {
                return Err(Failure::Usage(e));
            }
            if let Some(e) = budget_hit {
                return Err(Failure::Budget(e));
            }
        }
        Command::Htable { from, to } => {
            if from < 2 || from > to {
                return Err(Failure::Usage(format!("--from {from} --to {to}: need 2 <= from <= to")));
            }
            let mut emitter = emitter;
            emitter.begin_table(&["n", "expected", "computed", "ok"], None)?;
            let mut ok = true;
            for n in from..=to {
                let t = Instant::now();
                let expected = h_expected(n).map_err(usage)?;
                let row = TableRow::new(n, expected, Ok(h_of(n).map_err(usage)?));
                ok &= row.ok;
                emitter.row(table_record(&row), t.elapsed())?;
            }
            emitter.end_table(start.elapsed())?;
            if !ok {
                return Err(Failure::Mismatch);
            }
        }
        Command::Verify { n, k } => {
            let k = match k {
                Some(k) => k,
                None => k_expected(n)?,
            };
            let r = verify_mq1(n, k, budget)?;
            let rec = Record {
                json: serde_json::to_value(&r).expect("plain data"),
                text: format!(
                    "n={} k={} h={} regular={} theta_k_in_Ik={} tau_prefix_regular={}",
                    r.n, r.k, r.h, r.regular, r.theta_k_in_ik, r.tau_prefix_regular
                ),
                csv: vec![
                    r.n.to_string(),
                    r.k.to_string(),
                    r.h.to_string(),
                    r.regular.to_string(),
                    r.theta_k_in_ik.to_string(),
                    r.tau_prefix_regular.to_string(),
                ],
            };
            emitter.single(&["n", "k", "h", "regular", "theta_k_in_Ik", "tau_prefix_regular"], rec, start.elapsed())?;
            if !r.all_true() {
                return Err(Failure::Mismatch);
            }
        }
        Command::Present { flavor, n } => {
            let pres = family(&registry, &flavor)?.present(n, budget)?;
            let gens: Vec<String> = pres.ring.generators().iter().map(|g| format!("{} {}", g.name, g.bidegree)).collect();
            let rels = pres.relation_strings();
            let mut text = format!("{}{}\ngenerators: {}", pres.family, n.map_or(String::new(), |n| format!("_{n}")), gens.join(", "));
            text.push_str(&format!("\nrelations: {}", if rels.is_empty() { "none".to_string() } else { rels.join(", ") }));
            if let Some(k) = pres.k {
                text.push_str(&format!("\nk: {k}"));
            }
            let rec = Record {
                json: pres.to_json(),
                csv: vec![
                    pres.family.to_string(),
                    n.map_or(String::new(), |n| n.to_string()),
                    gens.join(";"),
                    rels.join(";"),
                    pres.k.map_or(String::new(), |k| k.to_string()),
                ],
                text,
            };
            emitter.single(&["family", "n", "generators", "relations", "k"], rec, start.elapsed())?;
        }
        Command::Poincare { flavor, n, max_degree } => {
            let pres = family(&registry, &flavor)?.present(n, budget)?;
            let p = poincare(&pres, max_degree)?;
            if cli.format == Format::Json {
                // one document carrying the exact series and its expansion
                let mut out = p.to_json();
                out["family"] = json!(pres.family);
                out["n"] = json!(n);
                let rec = Record { json: out, text: String::new(), csv: Vec::new() };
                emitter.single(&[], rec, start.elapsed())?;
                return Ok(());
            }
            let mut emitter = emitter;
            emitter.begin_table(&["p", "q", "dim"], Some(&series_text(&p.series)))?;
            for &(d, pp, q) in &p.expansion {
                let rec = Record {
                    json: json!({"p": pp, "q": q, "dim": d}),
                    text: format!("({q})[{pp}]: {d}"),
                    csv: vec![pp.to_string(), q.to_string(), d.to_string()],
                };
                emitter.row(rec, start.elapsed())?;
            }
            emitter.end_table(start.elapsed())?;
        }
        Command::Torsor { n, max_j } => {
            let rows = torsor_relations(n, max_j)?;
            let mut emitter = emitter;
            emitter.begin_table(&["j", "relation", "verified"], None)?;
            for r in &rows {
                let rec = Record {
                    json: serde_json::to_value(r).expect("plain data"),
                    text: format!("j={} {} {}", r.j, r.relation, if r.verified { "verified" } else { "NOT VERIFIED" }),
                    csv: vec![r.j.to_string(), r.relation.clone(), r.verified.to_string()],
                };
                emitter.row(rec, start.elapsed())?;
            }
            emitter.end_table(start.elapsed())?;
            if rows.iter().any(|r| !r.verified) {
                return Err(Failure::Mismatch);
            }
        }
        Command::Radical { n, matrix } => {
            let (b, h) = match (n, matrix) {
                (_, Some(m)) => {
                    let rows: Vec<Vec<u8>> = serde_json::from_str(&m).map_err(|e| Failure::Usage(format!("--matrix: {e}")))?;
                    (BilinearFormF2::new(rows).map_err(|e| Failure::Usage(format!("--matrix: {e}")))?, None)
                }
                (Some(n), None) => (quillen_form(n).map_err(|e| Failure::Usage(format!("--n: {e}")))?, Some(h_of(n).map_err(usage)?)),
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let rad = right_radical(&b);
            let basis: Vec<Vec<u32>> = rad.basis().to_vec();
            let vecs: Vec<String> =
                basis.iter().map(|v| format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))).collect();
            let mut text = format!("dim V = {}\ndim rad = {}\nradical: {}", b.dim(), rad.dim(), if vecs.is_empty() { "0".into() } else { vecs.join(", ") });
            if let Some(h) = h {
                text.push_str(&format!("\nh = {h}"));
            }
            let rec = Record {
                json: json!({"n": n, "dim": b.dim(), "matrix": b.matrix(), "radical": basis, "radical_dim": rad.dim(), "h": h}),
                csv: vec![n.map_or(String::new(), |n| n.to_string()), b.dim().to_string(), rad.dim().to_string(), vecs.join(";")],
                text,
            };
            emitter.single(&["n", "dim", "radical_dim", "radical"], rec, start.elapsed())?;
        }
        Command::G2check { extra } => {
            let extra: Vec<&str> = extra.iter().map(String::as_str).collect();
            let r = g2_gysin_check_with(&extra, budget)?;
            let rec = Record {
                json: serde_json::to_value(r).expect("plain data"),
                text: format!("v8_regular={} series_identity={}", r.v8_regular, r.series_identity),
                csv: vec![r.v8_regular.to_string(), r.series_identity.to_string()],
            };
            emitter.single(&["v8_regular", "series_identity"], rec, start.elapsed())?;
            if !(r.v8_regular && r.series_identity) {
                return Err(Failure::Mismatch);
            }
        }
        Command::Jbound { n } => {
            let set: Vec<u64> = j_lower_bound(n)?.into_iter().collect();
            let joined = set.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            let rec = Record {
                json: json!({"n": n, "lower_bound": set}),
                text: format!("{{{joined}}}"),
                csv: vec![n.to_string(), joined],
            };
            emitter.single(&["n", "lower_bound"], rec, start.elapsed())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
