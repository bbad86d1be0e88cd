use std::io::Write;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use rookery::branching::{nonisomorphism_table, verify_br1, verify_br2, verify_br3};
use rookery::cauchy::{cauchy_filtration_check, skew_filtration_check, theorem_m2_check, ChainOptions};
use rookery::combinatorics::{count_standard, count_tableaux, enumerate_tableaux, TableauKind};
use rookery::functor::{build_r_module, Variant};
use rookery::harmonics::{check_gr_equals_j, default_dmax};
use rookery::meataxe::{irreducibility_test, Irreducibility};
use rookery::monoid::{enumerate_monoid, MonoidKind};
use rookery::rational::binomial;
use rookery::report::{Report, Status};
use rookery::schur::{schur_module, weyl_module};
use rookery::skew::skew_cauchy_check;
use rookery::verify::{run_criterion, Suite, VerifyConfig, CRITERIA};
use rookery::{Error, Result};

use crate::*;

fn params(args: &impl Serialize) -> Result<Value> {
    Ok(serde_json::to_value(args)?)
}

pub fn execute(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Tableaux(a) => tableaux(a),
        Command::Dims(a) => dims(a),
        Command::Monoid(a) => monoid(a),
        Command::Module(a) => module(a),
        Command::Branch1(a) => {
            let r = verify_br1(&a.lambda, a.n)?;
            Report::new("branch1", params(a)?, Status::from_bool(r.holds()), &r)
        }
        Command::Branch2(a) => {
            let r = verify_br2(a.kind, &a.shape.shape()?, a.n, a.s, a.variant.into(), a.structural)?;
            let data = json!({"dimension_identity": r.dimension_identity(), "chain_ok": r.chain_ok(), "result": r});
            Report::new("branch2", params(a)?, Status::from_bool(r.holds()), &data)
        }
        Command::Branch3(a) => {
            let r = verify_br3(a.kind, &a.shape.shape()?, a.n, a.variant.into(), a.structural)?;
            Report::new("branch3", params(a)?, Status::from_bool(r.holds()), &r)
        }
        Command::Distinct(a) => distinct(a),
        Command::Irreducible(a) => irreducible(a),
        Command::Cauchy(a) => {
            let opts = if a.dims_only { ChainOptions::default() } else { ChainOptions::full() };
            let c = match a.kind.0 {
                Some(k) => theorem_m2_check(k, a.m, a.n, a.r, opts)?,
                None => cauchy_filtration_check(a.m, a.n, a.r, opts)?,
            };
            Report::new("cauchy", params(a)?, Status::from_bool(c.holds()), &c)
        }
        Command::SkewCauchy(a) => {
            let opts = if a.dims_only { ChainOptions::default() } else { ChainOptions::full() };
            match a.kind.0 {
                Some(k) => {
                    let r = skew_cauchy_check(k, a.m, a.n, a.r, opts, a.samples, a.seed)?;
                    Report::new("skew-cauchy", params(a)?, Status::from_bool(r.holds()), &r)
                }
                None => {
                    let c = skew_filtration_check(a.m, a.n, a.r, opts)?;
                    Report::new("skew-cauchy", params(a)?, Status::from_bool(c.holds()), &json!({ "chain": c }))
                }
            }
        }
        Command::Harmonics(a) => {
            let r = check_gr_equals_j(a.kind, a.n, a.dmax.unwrap_or_else(|| default_dmax(a.n)), a.explicit)?;
            Report::new("harmonics", params(a)?, Status::from_bool(r.holds()), &r)
        }
        Command::VerifyAll(_) | Command::Fixtures(_) => Err(Error::Invalid("not a report command".into())),
    }
}

fn tableaux(a: &TableauxArgs) -> Result<Report> {
    let data = if a.count_only {
        json!({"shape": a.shape, "n": a.n, "kind": a.kind, "count": count_tableaux(&a.shape, a.n, a.kind)})
    } else {
        let list = enumerate_tableaux(&a.shape, a.n, a.kind);
        let rows: Vec<Value> = list.iter().map(|t| json!({"text": t.to_string(), "rows": t.to_json_rows()})).collect();
        json!({"shape": a.shape, "n": a.n, "kind": a.kind, "count": list.len(), "tableaux": rows})
    };
    Report::info("tableaux", params(a)?, &data)
}

fn dims(a: &DimsArgs) -> Result<Report> {
    let shape = a.shape.shape()?;
    let r = shape.size();
    let upper = build_r_module(a.kind, a.n, &shape, Variant::Upper)?.dim();
    let lower = build_r_module(a.kind, a.n, &shape, Variant::Lower)?.dim();
    let f = count_standard(&shape);
    let closed = binomial(a.n as u64, r as u64) * f;
    let closed = u64::try_from(&closed).map_err(|_| Error::Invalid(format!("{closed} does not fit in 64 bits")))?;
    let data = json!({
        "shape": shape,
        "n": a.n,
        "r": r,
        "dim": upper,
        "upper_dim": upper,
        "lower_dim": lower,
        "f": f,
        "closed_form": closed,
        "schur_dim": count_tableaux(&shape, a.n, TableauKind::Semistandard),
        "weyl_dim": count_tableaux(&shape, a.n, TableauKind::CoSemistandard),
    });
    Report::new("dims", params(a)?, Status::from_bool(upper as u64 == closed && lower as u64 == closed), &data)
}

fn monoid(a: &MonoidArgs) -> Result<Report> {
    if a.n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let elems = enumerate_monoid(a.kind, a.n)?;
    let closed = a.kind.cardinality(a.n).to_string();
    let strings = |v: &[rookery::monoid::PartialTransformation]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
    let mut data = json!({
        "kind": a.kind,
        "n": a.n,
        "cardinality": elems.len(),
        "closed_form": closed,
        "generators": strings(&a.kind.generators(a.n)),
        "test_idempotents": strings(&a.kind.test_idempotents(a.n)),
    });
    if a.list {
        data["elements"] = json!(strings(&elems));
    }
    Report::new("monoid", params(a)?, Status::from_bool(elems.len().to_string() == closed), &data)
}

/// `(element, matrix rows)` for each generator.
type GeneratorMatrices = Vec<(String, Vec<Vec<String>>)>;

fn module(a: &ModuleArgs) -> Result<Report> {
    let shape = a.shape.shape()?;
    let (basis, gens): (Vec<String>, GeneratorMatrices) = match a.which {
        ModuleWhich::Upper | ModuleWhich::Lower => {
            let variant = if a.which == ModuleWhich::Upper { Variant::Upper } else { Variant::Lower };
            let m = build_r_module(a.kind, a.n, &shape, variant)?;
            let gens = m.generator_matrices()?.into_iter().map(|(g, x)| (g.to_string(), x.to_string_rows())).collect();
            (m.labels().iter().map(|l| l.to_string()).collect(), gens)
        }
        ModuleWhich::Schur | ModuleWhich::Weyl => {
            let m = if a.which == ModuleWhich::Schur { schur_module(&shape, a.n)? } else { weyl_module(&shape, a.n)? };
            let mut gens = Vec::new();
            for g in a.kind.generators(a.n) {
                gens.push((g.to_string(), m.act_map(&g)?.to_string_rows()));
            }
            (m.labels().iter().map(|l| l.to_string()).collect(), gens)
        }
    };
    let gens: Vec<Value> = gens.into_iter().map(|(g, rows)| json!({"element": g, "matrix": rows})).collect();
    let data = json!({"which": a.which, "shape": shape, "n": a.n, "dim": basis.len(), "basis": basis, "generators": gens});
    Report::info("module", params(a)?, &data)
}

fn distinct(a: &DistinctArgs) -> Result<Report> {
    let t = nonisomorphism_table(a.kind, a.n, a.r.unwrap_or(a.n))?;
    // Idempotent traces separate the exceptional pairs for IS and PT.
    let strict = matches!(a.kind, MonoidKind::IS | MonoidKind::PT);
    let ok = t.only_exceptional_pairs_coincide() && (!strict || t.all_distinct_pairs_separated());
    let data = json!({
        "only_exceptional_pairs_coincide": t.only_exceptional_pairs_coincide(),
        "all_distinct_pairs_separated": t.all_distinct_pairs_separated(),
        "unseparated": t.unseparated(),
        "pairs": t.entries.iter().filter(|e| e.lambda < e.mu).collect::<Vec<_>>(),
    });
    Report::new("distinct", params(a)?, Status::from_bool(ok), &data)
}

fn irreducible(a: &IrreducibleArgs) -> Result<Report> {
    let m = build_r_module(a.kind, a.n, &a.shape.shape()?, a.variant.into())?;
    if m.dim() == 0 {
        return Err(Error::Invalid("the module is zero".into()));
    }
    let algebra = enumerate_monoid(a.kind, a.n)?.iter().map(|x| m.act(x)).collect::<Result<Vec<_>>>()?;
    let gens: Vec<_> = m.generator_matrices()?.into_iter().map(|(_, x)| x).collect();
    let outcome = irreducibility_test(&algebra, &gens, a.rounds, a.seed)?;
    let status = match outcome {
        Irreducibility::Irreducible { .. } => Status::Pass,
        Irreducibility::Reducible { .. } => Status::Fail,
        Irreducibility::Inconclusive { .. } => Status::Inconclusive,
    };
    Report::new("irreducible", params(a)?, status, &json!({"dim": m.dim(), "outcome": outcome}))
}

/// Runs the suite, streaming one line per criterion: to stdout for the
/// table format (the report itself is then not printed), to stderr otherwise.
pub fn verify_all(a: &VerifyArgs, format: Format) -> Result<(Report, bool)> {
    let cfg = VerifyConfig { suite: if a.slow { Suite::Slow } else { Suite::Fast }, seed: a.seed, samples: a.samples };
    let ids: Vec<u8> = if a.only.is_empty() { CRITERIA.iter().map(|(i, _)| *i).collect() } else { a.only.clone() };
    if let Some(bad) = ids.iter().find(|i| !CRITERIA.iter().any(|(j, _)| j == *i)) {
        return Err(Error::Invalid(format!("no criterion {bad}; they are numbered 1 to {}", CRITERIA.len())));
    }
    let streamed = format == Format::Table;
    let mut results = Vec::new();
    let mut status = Status::Pass;
    for id in ids {
        let start = Instant::now();
        let r = run_criterion(id, &cfg);
        if streamed {
            let mut out = std::io::stdout().lock();
            writeln!(out, "{}", r.line())?;
            out.flush()?;
        } else {
            eprintln!("{} [{:.2}s]", r.line(), start.elapsed().as_secs_f64());
        }
        status = status.and(r.status);
        results.push(r);
    }
    if streamed {
        let passed = results.iter().filter(|r| r.status == Status::Pass).count();
        println!("{passed}/{} criteria pass", results.len());
    }
    let report = Report::new("acceptance suite", params(a)?, status, &json!({"config": cfg, "criteria": results}))?;
    Ok((report, streamed))
}
