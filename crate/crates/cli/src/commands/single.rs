use std::collections::BTreeSet;

use oneadic_core::arith::{card_gl as core_card_gl, gl_cofactor_polynomial, weyl_limit};
use oneadic_core::bm::{bm_identity_check, generic_weight_labels};
use oneadic_core::defring::{hilbert_series_special_fibre, DeformationPresentation, Shape};
use oneadic_core::ffield::FiniteField;
use oneadic_core::gene::{digits_from_params, solve_gene, GeneInput};
use oneadic_core::kisin::{kisin_points, KisinVarietyEq};
use oneadic_core::oracle::{gene_oracle, gl_count_brute};
use oneadic_core::perm::Perm;
use oneadic_core::weyl::{
    alpha_prime, enumerate_serre_weights, order_of_product, serre_lattice, tame_type_exponents,
    Character, ExtWeylElt, WeylElt,
};
use serde_json::json;

use super::{ok, parse_int_list, parse_jii, set_label, tuple_label, Handled};
use crate::args::{CardGlArgs, DefringArgs, GeneArgs, Global, KisinArgs, SerreArgs, TameArgs, WeightsArgs};
use crate::report::{Flags, Report, Table};
use crate::{exit, row, CliError};

pub fn gene(a: &GeneArgs) -> Handled {
    let input = GeneInput::new(a.p, a.f, a.h, a.gamma)?;
    let d = digits_from_params(&input)?;
    let sol = solve_gene(&d.digits)?;
    let oracle = if a.oracle {
        let found = gene_oracle(&d.digits)?;
        let solver: BTreeSet<_> = sol.genes.iter().cloned().collect();
        if found != solver {
            return Err(CliError {
                code: exit::ACCEPTANCE_FAILURE,
                message: format!(
                    "solver and exhaustive search disagree on digits {}",
                    tuple_label(d.digits.digits())
                ),
            });
        }
        Some(found.len())
    } else {
        None
    };
    let words: Vec<String> = sol.genes.iter().map(|g| g.to_string()).collect();
    let flags = Flags {
        degenerate: d.degenerate,
        ambiguous: !sol.is_unique(),
    };
    let mut table = Table::new(&["gene", "letters"]);
    for g in &sol.genes {
        let letters: Vec<String> = g.letters().iter().map(|l| l.to_string()).collect();
        table.push(row![g, letters.join(" ")]);
    }
    let mut report = Report::new(
        "gene",
        json!({
            "input": input,
            "residue": d.residue.value(),
            "modulus": d.residue.modulus(),
            "digits": d.digits.digits(),
            "degenerate": d.degenerate,
            "method": sol.method,
            "genes": words,
            "solution_count": sol.genes.len(),
            "oracle_agrees": oracle.map(|_| true),
        }),
    )
    .summary("digits", tuple_label(d.digits.digits()))
    .summary("residue", format!("{} mod {}", d.residue.value(), d.residue.modulus()))
    .summary("solutions", sol.genes.len());
    if oracle.is_some() {
        report = report.summary("oracle", "agrees");
    }
    let code = if flags.degenerate || flags.ambiguous {
        exit::AMBIGUOUS
    } else {
        exit::OK
    };
    Ok((report.flags(flags).table(table), code))
}

pub fn weights(a: &WeightsArgs) -> Handled {
    let jii = parse_jii(&a.jii, a.f)?;
    let shape = Shape::from_jii(a.f, &jii)?;
    let labels = generic_weight_labels(&jii)?;
    let mut table = Table::new(&["index", "label"]);
    for (i, l) in labels.iter().enumerate() {
        table.push(row![i, set_label(l)]);
    }
    ok(Report::new(
        "weights",
        json!({"f": a.f, "jii": jii, "shape": shape.to_string(), "count": labels.len(), "labels": labels}),
    )
    .summary("shape", &shape)
    .summary("count", labels.len())
    .table(table))
}

pub fn kisin(a: &KisinArgs, g: &Global) -> Handled {
    let eq = KisinVarietyEq::parse(&a.coeffs)?;
    let field = FiniteField::new(a.q)?;
    let c = kisin_points(&eq, &field, g.bound)?;
    let points: Vec<String> = c
        .points
        .iter()
        .map(|t| t.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" x "))
        .collect();
    let mut report = Report::new(
        "kisin",
        json!({
            "q": c.q,
            "f": eq.f(),
            "coeffs": eq.to_string(),
            "candidates": c.candidates,
            "count": c.count,
            "points": if a.points { Some(&points) } else { None },
        }),
    )
    .summary("equations", &eq)
    .summary("q", c.q)
    .summary("candidates", c.candidates)
    .summary("count", c.count);
    if a.points {
        let mut table = Table::new(&["point"]);
        for p in &points {
            table.push(row![p]);
        }
        report = report.table(table);
    }
    ok(report)
}

pub fn defring(a: &DefringArgs) -> Handled {
    let jii = parse_jii(&a.jii, a.f)?;
    let d = DeformationPresentation::new(a.f, jii)?;
    let series = hilbert_series_special_fibre(&d, a.degree);
    let bm = bm_identity_check(&d)?;
    let shape = Shape::from_jii(d.f, &d.jii)?;
    let mut table = Table::new(&["degree", "h"]);
    for (k, h) in series.iter().enumerate() {
        table.push(row![k, h]);
    }
    let series_exact: Vec<serde_json::Value> = series
        .iter()
        .map(|h| serde_json::to_value(oneadic_core::exact::Exact(h)).expect("serializes"))
        .collect();
    ok(Report::new(
        "defring",
        json!({
            "f": d.f,
            "jii": d.jii,
            "shape": shape.to_string(),
            "variables": d.variables(),
            "relations": d.relations(),
            "dimension": d.dimension(),
            "hilbert_series": series_exact,
            "multiplicity": oneadic_core::exact::Exact(&bm.closed_form),
            "bm": bm,
        }),
    )
    .summary("shape", &shape)
    .summary("variables", d.variables().join(" "))
    .summary("relations", d.relations().join(", "))
    .summary("dimension", d.dimension())
    .summary("multiplicity", &bm.closed_form)
    .summary("hilbert_multiplicity", &bm.hilbert_multiplicity)
    .summary("weight_count", bm.weight_count)
    .summary("identity_holds", bm.holds)
    .table(table))
}

pub fn serre(a: &SerreArgs, _g: &Global) -> Handled {
    let classes = enumerate_serre_weights(a.n, a.f, a.p, a.allow_large_n)?;
    let index = serre_lattice(a.p, a.f)?.index();
    let expected = (a.n == 2).then(|| {
        let q = a.p.pow(a.f as u32);
        q * (q - 1)
    });
    let mut table = Table::new(&["representative", "constant_part"]);
    for c in &classes {
        table.push(row![c.representative, tuple_label(&c.constant_part)]);
    }
    let mut report = Report::new(
        "serre",
        json!({
            "n": a.n,
            "f": a.f,
            "p": a.p,
            "count": classes.len(),
            "lattice_index": index,
            "expected_n2": expected,
            "classes": classes,
        }),
    )
    .summary("count", classes.len())
    .summary("lattice_index", index);
    if let Some(e) = expected {
        report = report.summary("expected", e);
    }
    ok(report.table(table))
}

pub fn tame(a: &TameArgs) -> Handled {
    let perms = a
        .s
        .split(';')
        .map(Perm::parse_one_line)
        .collect::<Result<Vec<_>, _>>()?;
    let mu = a
        .mu
        .split(';')
        .map(parse_int_list)
        .collect::<Result<Vec<_>, _>>()?;
    let se = ExtWeylElt::new(WeylElt::new(perms)?, Character::new(mu)?)?;
    let r = order_of_product(&se.s);
    let alpha = alpha_prime(&se);
    let t = tame_type_exponents(&se, a.p)?;
    let mut table = Table::new(&["j", "alpha_prime"]);
    for (j, v) in alpha.iter().enumerate() {
        table.push(row![j, tuple_label(v)]);
    }
    let exps: Vec<u64> = t.exponents.iter().map(|e| e.value()).collect();
    ok(Report::new(
        "tame",
        json!({
            "element": se,
            "product": se.s.product(),
            "r": r,
            "alpha_prime": alpha,
            "exponents": t,
        }),
    )
    .summary("r", r)
    .summary("modulus", t.modulus)
    .summary("exponents", tuple_label(&exps))
    .table(table))
}

pub fn card_gl(a: &CardGlArgs, g: &Global) -> Handled {
    let c = core_card_gl(a.n, a.q)?;
    let cofactor = gl_cofactor_polynomial(a.n as usize);
    let at_one = cofactor.eval_i64(1);
    let limit = weyl_limit(a.n);
    let brute = if a.brute {
        let cells = (a.q as u128).checked_pow(a.n * a.n);
        if cells.is_none_or(|c| c > g.bound as u128) {
            return Err(oneadic_core::Error::Capacity(format!(
                "q^(n^2) matrices exceed the enumeration bound {}",
                g.bound
            ))
            .into());
        }
        Some(gl_count_brute(a.n as usize, a.q)?)
    } else {
        None
    };
    let brute_agrees = brute.map(|b| c.total == b.into());
    let mut report = Report::new(
        "card-gl",
        json!({
            "cardinality": c,
            "forms_agree": c.forms_agree(),
            "cofactor_at_1": oneadic_core::exact::Exact(&at_one),
            "weyl_limit": oneadic_core::exact::Exact(&limit),
            "brute": brute,
            "brute_agrees": brute_agrees,
        }),
    )
    .summary("total", &c.total)
    .summary("torus", &c.torus)
    .summary("unipotent", &c.unipotent)
    .summary("q_factorial", &c.q_factorial)
    .summary("forms_agree", c.forms_agree())
    .summary("cofactor_at_1", &at_one)
    .summary("weyl_limit", &limit);
    if let Some(b) = brute {
        report = report.summary("brute", b);
    }
    if brute_agrees == Some(false) {
        return Err(CliError {
            code: exit::ACCEPTANCE_FAILURE,
            message: "closed form disagrees with the brute-force count".into(),
        });
    }
    ok(report)
}
