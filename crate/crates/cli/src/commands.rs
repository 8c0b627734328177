use std::time::Instant;

use fockreg::enumerate::cylindric;
use fockreg::symbol::min_size;
use fockreg::{
    dominance_compare, is_cylindric, peel, regularize_at, verify_lemmas, verify_regularization_theorem, BasisStore,
    Charge, DecompositionMatrix, FockVector, LemmaReport, Multipartition, PeelStep, ShiftedSymbol, TheoremReport,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::render;
use crate::{Cli, CliError, Command, CylindricAction, Format, Rendered, Target, Theorem};

type Result<T> = std::result::Result<T, CliError>;

pub fn run(cli: &Cli) -> Result<Rendered> {
    let body = match &cli.command {
        Command::Symbol(target) => symbol(target, cli.format)?,
        Command::Regularize(target) => regularization(target, cli.format)?,
        Command::Cylindric { action } => cylindric_cmd(action, cli.format)?,
        Command::Dominance { left, right } => dominance(left, right, cli.format)?,
        Command::Peel { target, chain } => peel_cmd(target, *chain, cli.format)?,
        Command::ApplyF { charge, mp, j, r } => apply_f(charge, mp, *j, *r, cli.format)?,
        Command::Canonical { charge, n, evaluate, basis } => canonical(charge, *n, *evaluate, *basis, cli.format)?,
        Command::Verify { theorem, charges, min_n, max_n } => {
            return verify(*theorem, charges, *min_n, *max_n, cli.jobs, cli.format);
        }
    };
    Ok(Rendered { body, violation: false })
}

fn to_json(value: &impl Serialize) -> String {
    let mut out = serde_json::to_string(value).expect("output serializes");
    out.push('\n');
    out
}

/// An empty `--mp` stands for the empty multipartition at the charge's level.
fn fit(mp: &Multipartition, charge: &Charge) -> Multipartition {
    if mp.level() == 1 && mp.is_empty() {
        Multipartition::empty(charge.level())
    } else {
        mp.clone()
    }
}

fn no_latex(command: &str) -> CliError {
    CliError::Usage(format!("--format latex is not available for `{command}`; use text or json"))
}

fn size_for(target: &Target) -> usize {
    target.h.unwrap_or_else(|| min_size(&fit(&target.mp, &target.charge), &target.charge))
}

fn symbol(target: &Target, format: Format) -> Result<String> {
    let sym = ShiftedSymbol::build(&fit(&target.mp, &target.charge), &target.charge, size_for(target))?;
    Ok(match format {
        Format::Text => format!("{sym}\n"),
        Format::Json => to_json(&sym),
        Format::Latex => render::latex_symbol(&sym),
    })
}

fn regularization(target: &Target, format: Format) -> Result<String> {
    let h = size_for(target);
    let mp = fit(&target.mp, &target.charge);
    let res = regularize_at(&mp, &target.charge, h)?;
    Ok(match format {
        Format::Text => {
            let local = if res.r_local.is_empty() {
                "none".to_string()
            } else {
                res.r_local.iter().map(|((j, c), k)| format!("({j},{c})={k}")).collect::<Vec<_>>().join(" ")
            };
            format!(
                "input: {}\ncharge: {}\nh: {h}\nregularized: {}\nR: {}\nr_local: {local}\n",
                mp, target.charge, res.regularized, res.r_total
            )
        }
        Format::Json => to_json(&json!({
            "input": mp,
            "charge": target.charge,
            "h": h,
            "regularized": res.regularized,
            "r_total": res.r_total,
            "r_local": res.r_local_triples(),
        })),
        Format::Latex => return Err(no_latex("regularize")),
    })
}

fn cylindric_cmd(action: &CylindricAction, format: Format) -> Result<String> {
    match action {
        CylindricAction::List { charge, n } => {
            let list = cylindric(charge, *n);
            Ok(match format {
                Format::Text => list.iter().map(|m| format!("{m}\n")).collect(),
                Format::Json => to_json(&json!({
                    "charge": charge,
                    "n": n,
                    "count": list.len(),
                    "cylindric": list,
                })),
                Format::Latex => return Err(no_latex("cylindric list")),
            })
        }
        CylindricAction::Test { charge, mp } => {
            let mp = &fit(mp, charge);
            let answer = is_cylindric(mp, charge)?;
            Ok(match format {
                Format::Text => format!("{}\n", if answer { "cylindric" } else { "not cylindric" }),
                Format::Json => to_json(&json!({ "charge": charge, "mp": mp, "cylindric": answer })),
                Format::Latex => return Err(no_latex("cylindric test")),
            })
        }
    }
}

fn dominance(left: &Multipartition, right: &Multipartition, format: Format) -> Result<String> {
    let relation = dominance_compare(left, right)?;
    Ok(match format {
        Format::Text => format!("{}\n", serde_json::to_value(relation).expect("serializes").as_str().unwrap_or("")),
        Format::Json => to_json(&json!({ "left": left, "right": right, "relation": relation })),
        Format::Latex => return Err(no_latex("dominance")),
    })
}

#[derive(Serialize)]
struct PeelRecord<'a> {
    from: Multipartition,
    #[serde(flatten)]
    step: &'a PeelStep,
}

fn peel_cmd(target: &Target, chain: bool, format: Format) -> Result<String> {
    let mut records = Vec::new();
    let mut current = fit(&target.mp, &target.charge);
    loop {
        let step = match target.h {
            Some(h) => fockreg::canonical::peel_at(&current, &target.charge, h)?,
            None => peel(&current, &target.charge)?,
        };
        let next = step.result.clone();
        records.push((current, step));
        if !chain || next.is_empty() {
            break;
        }
        current = next;
    }
    Ok(match format {
        Format::Text => records
            .iter()
            .map(|(from, st)| {
                format!(
                    "{from} -> {}  c={} i={} h={} j={} f_index={} r={}\n",
                    st.result, st.c, st.i, st.h, st.j_abs, st.j_charged, st.r
                )
            })
            .collect(),
        Format::Json => {
            let steps: Vec<PeelRecord> =
                records.iter().map(|(from, step)| PeelRecord { from: from.clone(), step }).collect();
            to_json(&json!({ "charge": target.charge, "mp": records[0].0, "steps": steps }))
        }
        Format::Latex => return Err(no_latex("peel")),
    })
}

fn apply_f(charge: &Charge, mp: &Multipartition, j: i64, r: usize, format: Format) -> Result<String> {
    let mp = &fit(mp, charge);
    let result = FockVector::basis(charge.clone(), mp.clone())?.apply_f(j, r)?;
    Ok(match format {
        Format::Text => render::text_vector(&result),
        Format::Json => to_json(&json!({ "charge": charge, "mp": mp, "j": j, "r": r, "result": result })),
        Format::Latex => return Err(no_latex("apply-f")),
    })
}

fn canonical(charge: &Charge, n: usize, evaluate: bool, basis: bool, format: Format) -> Result<String> {
    let computed = BasisStore::new().basis(charge, n)?;
    if basis {
        return Ok(match format {
            Format::Text => render::text_basis(&computed),
            Format::Json => to_json(&*computed),
            Format::Latex => return Err(no_latex("canonical --basis")),
        });
    }
    let matrix = DecompositionMatrix::from_basis(&computed);
    Ok(match format {
        Format::Text => render::text_matrix(&matrix, evaluate),
        Format::Json => to_json(&matrix.to_json(evaluate)),
        Format::Latex => matrix.to_latex(evaluate),
    })
}

enum Report {
    Theorem(TheoremReport),
    Lemmas(LemmaReport),
}

impl Report {
    fn is_clean(&self) -> bool {
        match self {
            Report::Theorem(r) => r.is_clean(),
            Report::Lemmas(r) => r.is_clean(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Report::Theorem(r) => serde_json::to_value(r),
            Report::Lemmas(r) => serde_json::to_value(r),
        }
        .expect("report serializes")
    }

    fn summary(&self) -> String {
        match self {
            Report::Theorem(r) => format!(
                "charge {} n={}: {} x {} matrix, {} pairs, {} violations",
                r.charge,
                r.n,
                r.rows,
                r.columns,
                r.pairs_checked,
                r.violations.len()
            ),
            Report::Lemmas(r) => format!(
                "charge {} n={}: {} dominance and {} coefficient instances, {} violations",
                r.charge,
                r.n,
                r.dominance_instances,
                r.coefficient_instances,
                r.violations.len()
            ),
        }
    }

    fn violation_lines(&self) -> Vec<String> {
        let violations = match self {
            Report::Theorem(r) => &r.violations,
            Report::Lemmas(r) => &r.violations,
        };
        violations
            .iter()
            .map(|v| {
                let expected = v.expected.as_ref().map(|e| format!(", expected {e}")).unwrap_or_default();
                format!("  {:?}: lambda={} mu={} found {}{expected}", v.kind, v.lambda, v.mu, v.found)
            })
            .collect()
    }
}

fn verify(theorem: Theorem, charges: &[Charge], min_n: usize, max_n: usize, jobs: usize, format: Format) -> Result<Rendered> {
    if min_n > max_n {
        return Err(CliError::Usage(format!("empty rank range {min_n}..={max_n}")));
    }
    if format == Format::Latex {
        return Err(no_latex("verify"));
    }
    let cases: Vec<(Charge, usize)> =
        charges.iter().flat_map(|s| (min_n..=max_n).map(move |n| (s.clone(), n))).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    let store = BasisStore::new();
    let start = Instant::now();
    let reports: Vec<Report> = pool.install(|| {
        cases
            .par_iter()
            .map(|(s, n)| match theorem {
                Theorem::Regularization => verify_regularization_theorem(&store, s, *n).map(Report::Theorem),
                Theorem::Lemmas => verify_lemmas(s, *n).map(Report::Lemmas),
            })
            .collect::<fockreg::Result<Vec<_>>>()
    })?;
    eprintln!("verified {} cases in {:.2?}", reports.len(), start.elapsed());

    let clean = reports.iter().all(Report::is_clean);
    let name = match theorem {
        Theorem::Regularization => "regularization",
        Theorem::Lemmas => "lemmas",
    };
    let body = match format {
        Format::Json => to_json(&json!({
            "theorem": name,
            "clean": clean,
            "reports": reports.iter().map(Report::json).collect::<Vec<_>>(),
        })),
        _ => {
            let mut out = String::new();
            for report in &reports {
                out.push_str(&report.summary());
                out.push('\n');
                for line in report.violation_lines() {
                    out.push_str(&line);
                    out.push('\n');
                }
            }
            out.push_str(if clean { "clean\n" } else { "violations found\n" });
            out
        }
    };
    Ok(Rendered { body, violation: !clean })
}
