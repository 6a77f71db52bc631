use num_rational::Ratio;
use oneadic_core::galois::{
    aut_fixing_submonoid, build_q1_tower, classical_tame_galois, galois_kn_over_q1,
    p_to_1_table, unramified_galois, GaloisReport, KnModel, NormedMonoid, UnramifiedDegree,
};
use serde_json::json;

use super::{ok, Handled};
use crate::args::{GaloisCommand, Global};
use crate::report::{Report, Table};
use crate::{row, CliError};

pub fn run(c: &GaloisCommand, _g: &Global) -> Handled {
    match c {
        GaloisCommand::Kn { n, window } => {
            let r = galois_kn_over_q1(&KnModel::new(*n)?, *window)?;
            ok(with_report("galois kn", &r, &r.report)
                .summary("sigma_order", r.sigma_order)
                .summary("frobenius_commutes_with_sigma", r.frobenius_commutes_with_sigma))
        }
        GaloisCommand::Fix { n, window } => {
            let r = aut_fixing_submonoid(&KnModel::new(*n)?, *window)?;
            let mut table = Table::new(&["c", "d", "a", "b"]);
            for g in &r.automorphisms {
                table.push(row![g.c, g.d, g.a, g.b]);
            }
            ok(with_report("galois fix", &r, &r.report)
                .summary("candidates", r.candidates)
                .summary("all_powers_of_sigma", r.all_powers_of_sigma)
                .table(table))
        }
        GaloisCommand::Unramified { n, limit, window } => {
            let degree = match (n, limit) {
                (_, true) => UnramifiedDegree::Limit,
                (Some(n), false) => UnramifiedDegree::Finite(*n),
                (None, false) => return Err(CliError::invalid("give -n or --limit")),
            };
            let r = unramified_galois(degree, *window)?;
            ok(with_report("galois unramified", &r, &r))
        }
        GaloisCommand::Tame { p, n } => {
            let r = classical_tame_galois(*p, *n)?;
            ok(with_report("galois tame", &r, &r.report)
                .summary("action_is_multiplication_by_p", r.action_is_multiplication_by_p)
                .summary("q_analogue_subgroup_order", r.q_analogue_subgroup_order)
                .summary("q_analogue_subgroup_stable", r.q_analogue_subgroup_stable))
        }
        GaloisCommand::TameCompare { n, p } => {
            let rows = p_to_1_table(*n, p)?;
            let mut table = Table::new(&["p", "p^n-1", "p-1", "[n]_p", "exact", "limit"]);
            for r in &rows {
                table.push(row![r.p, r.p_n_minus_1, r.p_minus_1, r.q_analogue, r.factorization_exact, r.limit]);
            }
            ok(Report::new("galois tame-compare", json!({"n": n, "rows": rows})).table(table))
        }
        GaloisCommand::Tower { e, r } => {
            let base = parse_ratio(r)?;
            let tower = build_q1_tower(*e, base)?;
            let q1 = NormedMonoid::q1(base)?;
            let index = tower.lattice_index_of(&q1);
            let uniformizer = vec![1];
            let norm = tower.norm(&uniformizer).map(|x| x.to_string());
            ok(Report::new(
                "galois tower",
                json!({
                    "e": e,
                    "norm_base": base.to_string(),
                    "monoid": tower,
                    "index_over_q1": index,
                    "uniformizer_norm": norm,
                }),
            )
            .summary("index_over_q1", index.map_or("none".to_string(), |i| i.to_string()))
            .summary("uniformizer_norm", norm.unwrap_or_else(|| "irrational".into())))
        }
    }
}

fn with_report(command: &str, payload: &impl serde::Serialize, g: &GaloisReport) -> Report {
    let mut r = Report::new(command, payload)
        .summary("tag", &g.tag)
        .summary("order", g.order.map_or("infinite".to_string(), |o| o.to_string()));
    if let Some(s) = &g.structure {
        r = r.summary("structure", s);
    }
    if !g.generators.is_empty() {
        r = r.summary("generators", g.generators.join(", "));
    }
    if let Some(es) = &g.exact_sequence {
        r = r
            .summary("kernel", es.kernel.to_string())
            .summary("quotient", es.quotient.to_string());
    }
    r.summary("consistent", g.is_consistent())
}

fn parse_ratio(s: &str) -> Result<Ratio<i64>, CliError> {
    let bad = || CliError::invalid(format!("bad fraction {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 1),
    };
    if den == 0 {
        return Err(bad());
    }
    Ok(Ratio::new(num, den))
}
