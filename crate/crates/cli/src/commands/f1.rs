use oneadic_core::exact::Exact;
use oneadic_core::f1::{
    a_res, adjunction_check, aut_group_f1, frob_aut_group, gl_f1n, gl_module, m_res, sym_rep,
    F1Space, MonoidFactor, StructuredMonoid,
};
use oneadic_core::perm::Perm;
use serde_json::json;

use super::{ok, tuple_label, Handled};
use crate::args::{F1Command, Global, Restriction};
use crate::report::{Report, Table};
use crate::{row, CliError};

pub fn run(c: &F1Command, g: &Global) -> Handled {
    match c {
        F1Command::Aut { d } => aut(*d, g),
        F1Command::Gl { d, n } => gl(*d, *n, g),
        F1Command::Adjoint { v, w, n, naturality } => adjoint(*v, *w, *n, *naturality),
        F1Command::Sym { degrees } => sym(degrees),
        F1Command::Frob { kind, d, n } => frob(*kind, *d, *n, g),
        F1Command::Glmod { monoid, d, exp_bound } => glmod(monoid, *d, *exp_bound, g),
    }
}

fn cycles(p: &Perm) -> String {
    let cs: Vec<String> = p
        .cycles()
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| tuple_label(&c.iter().map(|i| i + 1).collect::<Vec<_>>()))
        .collect();
    if cs.is_empty() {
        "()".into()
    } else {
        cs.concat()
    }
}

fn aut(d: usize, g: &Global) -> Handled {
    let a = aut_group_f1(d, g.bound)?;
    let mut table = Table::new(&["automorphism"]);
    let elements: Option<Vec<String>> = a.elements.as_ref().map(|es| {
        es.iter()
            .map(|m| tuple_label(&m.graph().iter().map(|x| x.map_or(0, |y| y + 1)).collect::<Vec<_>>()))
            .collect()
    });
    for e in elements.iter().flatten() {
        table.push(row![e]);
    }
    let gens: Vec<String> = a.generators.iter().map(cycles).collect();
    ok(Report::new(
        "f1 aut",
        json!({
            "d": d,
            "order": Exact(&a.order),
            "generators": gens,
            "elements": elements,
        }),
    )
    .summary("order", &a.order)
    .summary("generators", gens.join(" "))
    .table(table))
}

fn gl(d: usize, n: usize, g: &Global) -> Handled {
    let a = gl_f1n(d, n, g.bound)?;
    let enumerated = a.elements.as_ref().map(|e| e.len());
    let expected = oneadic_core::arith::weyl_limit(d as u32).pow(n as u32);
    let mut report = Report::new(
        "f1 gl",
        json!({
            "d": d,
            "n": n,
            "order": Exact(&a.order),
            "expected": Exact(&expected),
            "enumerated": enumerated,
        }),
    )
    .summary("order", &a.order)
    .summary("expected", &expected);
    if let Some(e) = enumerated {
        report = report.summary("enumerated", e);
    }
    ok(report)
}

fn adjoint(v: usize, w: usize, n: usize, naturality: usize) -> Handled {
    let r = adjunction_check(v, w, n, naturality)?;
    let closed = (F1Space::new(w).dim as u128 + 1).pow((n * v) as u32);
    let mut table = Table::new(&["side", "source", "target", "bijection"]);
    table.push(row!["left", r.left.source_count, r.left.target_count, r.left.is_bijection()]);
    table.push(row!["right", r.right.source_count, r.right.target_count, r.right.is_bijection()]);
    ok(Report::new(
        "f1 adjoint",
        json!({"report": r, "holds": r.holds(), "left_closed_form": closed.to_string()}),
    )
    .summary("holds", r.holds())
    .summary("left_closed_form", closed)
    .summary("left_natural", r.left_natural_in_w)
    .summary("right_natural", r.right_natural_in_w)
    .table(table))
}

fn sym(degrees: &[u32]) -> Handled {
    let s = sym_rep(degrees)?;
    let mut seen = std::collections::BTreeSet::new();
    let mut table = Table::new(&["orbit", "size", "monomials"]);
    for x in s.elements() {
        if seen.contains(&x) {
            continue;
        }
        let orbit = s.orbit(&x);
        let labels: Vec<String> = orbit.iter().map(|y| s.monomial(y)).collect();
        table.push(row![table.rows.len(), orbit.len(), labels.join(" | ")]);
        seen.extend(orbit);
    }
    let transitive_criterion = degrees.iter().all(|&k| k <= 1);
    ok(Report::new(
        "f1 sym",
        json!({
            "degrees": degrees,
            "dimension": s.len(),
            "orbits": table.rows.len(),
            "irreducible": s.is_irreducible(),
            "degrees_at_most_one": transitive_criterion,
        }),
    )
    .summary("dimension", s.len())
    .summary("orbits", table.rows.len())
    .summary("irreducible", s.is_irreducible())
    .table(table))
}

fn frob(kind: Restriction, d: usize, n: usize, g: &Global) -> Handled {
    let space = F1Space::new(d);
    let set = match kind {
        Restriction::Additive => a_res(space, n)?,
        Restriction::Multiplicative => m_res(space, n)?,
    };
    let a = frob_aut_group(&set, g.bound)?;
    ok(Report::new(
        "f1 frob",
        json!({
            "carrier": set.carrier(),
            "size": set.len(),
            "frobenius": cycles(set.frobenius()),
            "order": a.group.order(),
            "structure": a.structure,
            "generated_by_frobenius": a.generated_by_frobenius,
        }),
    )
    .summary("size", set.len())
    .summary("frobenius", cycles(set.frobenius()))
    .summary("order", a.group.order())
    .summary("structure", &a.structure)
    .summary("generated_by_frobenius", a.generated_by_frobenius))
}

fn parse_factor(t: &str) -> Result<MonoidFactor, CliError> {
    match t.trim() {
        "N" => Ok(MonoidFactor::Natural),
        "Z" => Ok(MonoidFactor::Integer),
        other => other
            .strip_prefix("Z/")
            .and_then(|k| k.parse::<u64>().ok())
            .map(MonoidFactor::Cyclic)
            .ok_or_else(|| CliError::invalid(format!("unknown monoid factor {other:?}"))),
    }
}

fn glmod(monoid: &str, d: usize, bound: i64, g: &Global) -> Handled {
    let factors = monoid.split(',').map(parse_factor).collect::<Result<Vec<_>, _>>()?;
    let m = StructuredMonoid::new(factors)?;
    let gl = gl_module(m.clone(), d, bound)?;
    let predicted = gl.predicted_count();
    if predicted > g.bound as u128 {
        return Err(oneadic_core::Error::Capacity(format!(
            "{predicted} truncated elements exceed the enumeration bound {}",
            g.bound
        ))
        .into());
    }
    let enumerated = gl.elements()?.len() as u128;
    let labels: Vec<String> = m.factors().iter().map(|f| f.to_string()).collect();
    ok(Report::new(
        "f1 glmod",
        json!({
            "monoid": labels,
            "d": d,
            "exp_bound": bound,
            "unit_rank": m.unit_rank(),
            "predicted": predicted as u64,
            "enumerated": enumerated as u64,
            "agree": predicted == enumerated,
        }),
    )
    .summary("monoid", labels.join(" x "))
    .summary("predicted", predicted)
    .summary("enumerated", enumerated))
}
