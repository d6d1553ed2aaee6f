use serde_json::{json, Value};
use uvaldim::fixtures::{builtin_tables, load_dir, reproduce, Verdict};
use uvaldim::geometry::{
    build_simplex_tq, independence_certificate, kahler_cosines, klain_mu, psi_closed_form,
    restricted_centroid_delta, restricted_centroid_psi, Ambient, RealSubspace,
};
use uvaldim::lr::ORACLE_LIMIT;
use uvaldim::nalgebra::{DMatrix, DVector};
use uvaldim::valuation::{dimension_grid, is_disputed_cell};
use uvaldim::{
    branch, closed_form_dim, closed_form_hom_spherical, closed_form_val_mult, hom_dim_spherical,
    hom_dim_sym, lr_coefficient, lr_oracle, normalize_label, sym_power_branch,
    val_irrep_multiplicity, Partition, ULabel, ValContext, VirtualURep,
};

use crate::output::{fmt_num, num, nums, Failure, Report};
use crate::{Command, FrameArgs};

type Outcome = Result<Report, Failure>;

pub fn run(cmd: &Command, paranoid: bool) -> Outcome {
    match cmd {
        Command::Lr { lambda, mu, nu } => {
            let value = lr_coefficient(lambda, mu, nu);
            let mut doc = json!({
                "op": "lr",
                "lambda": lambda.to_string(),
                "mu": mu.to_string(),
                "nu": nu.to_string(),
                "value": value,
            });
            let mut mismatch = false;
            if paranoid {
                if lambda.size() <= ORACLE_LIMIT {
                    let oracle = lr_oracle(lambda, mu, nu)?;
                    doc["oracle"] = json!(oracle);
                    mismatch = oracle != value;
                } else {
                    doc["oracle"] = Value::Null;
                }
            }
            Ok(Report::new(value.to_string(), doc).flag(mismatch))
        }
        Command::Strip { partition, h } => {
            let removed = partition.remove_border_strip(*h);
            let text = match &removed {
                Some((rest, x)) => format!("{} (ends in column {x})", show(rest)),
                None => "none".to_string(),
            };
            let doc = json!({
                "op": "strip",
                "partition": partition.to_string(),
                "h": h,
                "result": removed.as_ref().map(|(rest, _)| rest.to_string()),
                "column": removed.as_ref().map(|(_, x)| x),
            });
            Ok(Report::new(text, doc))
        }
        Command::Normalize {
            m,
            mu,
            lambda,
            label,
        } => {
            if *m == 0 {
                return Err(Failure::Input("m must be at least 1".into()));
            }
            let (mu, lambda) = match label {
                Some(l) => (l.mu.clone(), l.lambda.clone()),
                None => (
                    mu.clone().unwrap_or_else(Partition::empty),
                    lambda.clone().unwrap_or_else(Partition::empty),
                ),
            };
            let t = normalize_label(&mu, &lambda, *m);
            let doc = json!({
                "op": "normalize",
                "m": m,
                "mu": mu.to_string(),
                "lambda": lambda.to_string(),
                "sign": t.sign,
                "label": (!t.is_zero()).then(|| t.label.to_string()),
            });
            Ok(Report::new(t.to_string(), doc))
        }
        Command::Branch { m, lambda, raw } => {
            let b = branch(lambda, *m)?;
            if *raw {
                let text = b
                    .raw
                    .iter()
                    .map(|t| {
                        format!(
                            "{:>4}  {{{}}}",
                            t.coeff,
                            ULabel::new(t.xi.clone(), t.nu.clone())
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n");
                let terms: Vec<Value> = b
                    .raw
                    .iter()
                    .map(|t| json!({"mu": t.xi.to_string(), "lambda": t.nu.to_string(), "coeff": t.coeff}))
                    .collect();
                let doc = json!({"op": "branch", "m": m, "lambda": lambda.to_string(), "raw": true, "terms": terms});
                Ok(Report::new(text, doc))
            } else {
                Ok(rep_report(
                    "branch",
                    *m,
                    Some(lambda.to_string()),
                    None,
                    &b.normalized,
                ))
            }
        }
        Command::SymBranch { m, d } => {
            let v = sym_power_branch(*d, *m)?;
            Ok(rep_report("sym-branch", *m, None, Some(*d), &v))
        }
        Command::ValMult { m, k, j, i } => {
            let ctx = ValContext::new(*m, *k)?;
            let value = val_irrep_multiplicity(&ctx, *j, *i)?;
            let mut doc = json!({"op": "val-mult", "m": m, "k": k, "j": j, "i": i, "value": value, "method": "branching"});
            let mut text = value.to_string();
            let mut mismatch = false;
            if paranoid {
                let table = closed_form_val_mult(*m, *k, *j, *i)?;
                doc["closed_form"] = json!(table);
                if table != value {
                    if is_disputed_cell(*m, *k, *j, *i) {
                        doc["discrepancy"] = json!("documented");
                        text.push_str(&format!(" (table {table}: DISCREPANCY (documented))"));
                    } else {
                        mismatch = true;
                        text.push_str(&format!(" (table {table})"));
                    }
                }
            }
            Ok(Report::new(text, doc).flag(mismatch))
        }
        Command::HomDim { m, k, d, e } => {
            let ctx = ValContext::new(*m, *k)?;
            let (op, key, arg, value, table) = match (d, e) {
                (Some(d), _) => (
                    "dim",
                    "d",
                    *d,
                    hom_dim_sym(&ctx, *d)?,
                    closed_form_dim(*m, *k, *d)?,
                ),
                (None, Some(e)) => (
                    "hom",
                    "e",
                    *e,
                    hom_dim_spherical(&ctx, *e)?,
                    closed_form_hom_spherical(*m, *k, *e)?,
                ),
                (None, None) => unreachable!("clap requires --d or --e"),
            };
            let mut doc =
                json!({"op": op, "m": m, "k": k, key: arg, "value": value, "method": "branching"});
            let mut mismatch = false;
            if paranoid {
                doc["closed_form"] = json!(table);
                mismatch = table != value;
            }
            Ok(Report::new(value.to_string(), doc).flag(mismatch))
        }
        Command::DimTable { m, d } => dim_table(*m, d, paranoid),
        Command::Kahler(frame) => {
            let space = subspace(frame)?;
            let cos = kahler_cosines(&space).cosines;
            let text = cos
                .iter()
                .map(|&c| fmt_num(c))
                .collect::<Vec<_>>()
                .join(" ");
            let doc =
                json!({"op": "kahler", "m": frame.m, "dim": space.dim(), "cosines": nums(&cos)});
            Ok(Report::new(text, doc))
        }
        Command::Klain { frame, q } => {
            let space = subspace(frame)?;
            let k = space.dim();
            let value = klain_mu(k, *q, &space)?;
            let doc = json!({"op": "klain", "m": frame.m, "k": k, "q": q, "value": num(value)});
            Ok(Report::new(fmt_num(value), doc))
        }
        Command::Centroid { m, k, q, r, delta } => {
            let body = build_simplex_tq(*m, *k, *q)?;
            let show_vec =
                |v: &DVector<f64>| v.iter().map(|&x| fmt_num(x)).collect::<Vec<_>>().join(" ");
            if let Some(p) = delta {
                let v = restricted_centroid_delta(*k, *p, &body)?;
                let doc = json!({"op": "centroid", "m": m, "k": k, "q": q, "delta": p, "vector": nums(v.iter())});
                return Ok(Report::new(show_vec(&v), doc));
            }
            let r = r.expect("clap requires --r or --delta");
            let v = restricted_centroid_psi(*k, r, &body, *m)?;
            let closed = psi_closed_form(*m, *k, *q, r)?;
            let scale = closed.norm().max(v.norm()).max(f64::MIN_POSITIVE);
            let rel = (&v - &closed).norm() / scale;
            let mut doc = json!({
                "op": "centroid", "m": m, "k": k, "q": q, "r": r,
                "vector": nums(v.iter()),
                "closed_form": nums(closed.iter()),
            });
            let mut mismatch = false;
            if paranoid {
                doc["relative_error"] = num(rel);
                mismatch = rel > 1e-8;
            }
            Ok(Report::new(show_vec(&v), doc).flag(mismatch))
        }
        Command::Independence { m, k } => {
            let ks: Vec<usize> = match k {
                Some(k) => vec![*k],
                None => (0..2 * m).collect(),
            };
            let certs = ks
                .iter()
                .map(|&k| independence_certificate(*m, k))
                .collect::<Result<Vec<_>, _>>()?;
            let text = certs
                .iter()
                .map(|c| {
                    format!(
                        "k={} n={} rank={} pattern {}",
                        c.k,
                        c.n,
                        c.rank,
                        if c.pattern_ok { "ok" } else { "BROKEN" }
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            let rows: Vec<Value> = certs
                .iter()
                .map(|c| {
                    json!({
                        "k": c.k, "m_prime": c.m_prime, "n": c.n, "rank": c.rank,
                        "pattern_ok": c.pattern_ok,
                        "norms": c.norms.iter().map(nums).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({"op": "independence", "m": m, "certificates": rows});
            Ok(Report::new(text, doc).flag(certs.iter().any(|c| !c.full_rank())))
        }
        Command::Reproduce { fixtures } => {
            let tables = match fixtures {
                Some(dir) => load_dir(dir)?,
                None => builtin_tables(),
            };
            let report = reproduce(&tables)?;
            let mut text = String::new();
            for t in &report.tables {
                text.push_str(&format!(
                    "{:<24} {:>4} cells  {:>4} pass  {} fail  {} discrepancy  {} resolved\n",
                    t.name, t.cells, t.passed, t.failed, t.discrepancies, t.resolved
                ));
                for o in &t.exceptions {
                    let tag = match o.verdict {
                        Verdict::Fail => "FAIL",
                        Verdict::Discrepancy => "DISCREPANCY (documented)",
                        Verdict::Resolved => "RESOLVED (marked discrepancy now agrees)",
                        Verdict::Pass => "PASS",
                    };
                    text.push_str(&format!(
                        "  {tag}: {} / {} [{}] expected {}, computed {}\n",
                        o.row, o.column, o.params, o.expected, o.computed
                    ));
                }
            }
            text.push_str(if report.ok() { "OK" } else { "MISMATCH" });
            let mut doc = serde_json::to_value(&report).expect("report serializes");
            doc["op"] = json!("reproduce");
            doc["ok"] = json!(report.ok());
            Ok(Report::new(text, doc).flag(!report.ok()))
        }
    }
}

fn show(p: &Partition) -> String {
    if p.is_empty() {
        "0".into()
    } else {
        p.to_string()
    }
}

fn rep_report(
    op: &str,
    m: usize,
    lambda: Option<String>,
    d: Option<u32>,
    v: &VirtualURep,
) -> Report {
    let terms: Vec<Value> = v
        .iter()
        .map(|(l, c)| json!({"mu": l.mu.to_string(), "lambda": l.lambda.to_string(), "coeff": c}))
        .collect();
    let mut doc = json!({"op": op, "m": m, "terms": terms, "dimension": v.dimension().to_string()});
    if let Some(lambda) = lambda {
        doc["lambda"] = json!(lambda);
    }
    if let Some(d) = d {
        doc["d"] = json!(d);
    }
    Report::new(format!("{v}\ndimension {}", v.dimension()), doc)
}

fn dim_table(m: usize, ds: &[u32], paranoid: bool) -> Outcome {
    let cells = dimension_grid(m, ds)?;
    let mut text = format!("{:>4}", "k\\d");
    for d in ds {
        text.push_str(&format!(" {d:>6}"));
    }
    let mut rows = Vec::new();
    let mut mismatch = false;
    for (idx, cell) in cells.iter().enumerate() {
        if idx % ds.len() == 0 {
            text.push_str(&format!("\n{:>4}", cell.k));
        }
        text.push_str(&format!(" {:>6}", cell.value));
        let mut row = json!({"k": cell.k, "d": cell.d, "value": cell.value, "method": "branching"});
        if paranoid {
            let table = closed_form_dim(m, cell.k, cell.d)?;
            row["closed_form"] = json!(table);
            if table != cell.value {
                mismatch = true;
                text.push('*');
            }
        }
        rows.push(row);
    }
    let doc = json!({"op": "dim-table", "m": m, "cells": rows});
    Ok(Report::new(text, doc).flag(mismatch))
}

fn subspace(args: &FrameArgs) -> Result<RealSubspace, Failure> {
    let ambient = Ambient::new(args.m)?;
    let n = ambient.real_dim();
    let vectors: Vec<DVector<f64>> = args
        .frame
        .0
        .iter()
        .map(|v| {
            if v.len() == n {
                Ok(DVector::from_column_slice(v))
            } else {
                Err(Failure::Input(format!(
                    "frame vector has {} coordinates, expected {n}",
                    v.len()
                )))
            }
        })
        .collect::<Result<_, _>>()?;
    if args.span {
        return Ok(RealSubspace::span(ambient, &vectors)?);
    }
    let frame = if vectors.is_empty() {
        DMatrix::zeros(n, 0)
    } else {
        DMatrix::from_columns(&vectors)
    };
    Ok(RealSubspace::new(ambient, frame)?)
}
