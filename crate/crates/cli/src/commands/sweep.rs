//! Parameter sweeps. Work items are mapped on a rayon pool of `--jobs`
//! threads; results come back in item order, so output never depends on the
//! pool width.

use rayon::prelude::*;
use serde_json::json;

use oneadic_core::arith::{checked_pow, radix_decompose, ResidueInt};
use oneadic_core::bm::bm_identity_check;
use oneadic_core::defring::{DeformationPresentation, Shape};
use oneadic_core::ffield::FiniteField;
use oneadic_core::gene::solve_gene;
use oneadic_core::kisin::{kisin_points, KisinVarietyEq};
use oneadic_core::oracle::{gene_oracle, kisin_count_affine};
use oneadic_core::weyl::{enumerate_serre_weights, serre_lattice};

use super::{ok, Handled};
use crate::args::{Global, SweepCommand};
use crate::report::{Flags, Report, Table};
use crate::{row, CliError};

/// Maps `items` in parallel and returns results in item order. The first
/// error in item order wins.
pub fn par_map<T, R, F>(jobs: u64, items: &[T], f: F) -> Result<Vec<R>, CliError>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R, CliError> + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs as usize)
        .build()
        .map_err(|e| CliError::invalid(format!("cannot start worker pool: {e}")))?;
    let results: Vec<Result<R, CliError>> = pool.install(|| items.par_iter().map(&f).collect());
    results.into_iter().collect()
}

pub fn run(c: &SweepCommand, g: &Global) -> Handled {
    match c {
        SweepCommand::Gene { p, f, oracle } => gene(p, f, *oracle, g),
        SweepCommand::Bm { f_max, jii_max } => bm(*f_max, *jii_max, g),
        SweepCommand::Serre { n, p, f } => serre(*n, p, f, g),
        SweepCommand::Kisin { q, f } => kisin(q, f, g),
    }
}

#[derive(Default, Clone, Copy, serde::Serialize)]
struct GeneTally {
    residues: u64,
    unique: u64,
    ambiguous: u64,
    none: u64,
    degenerate: u64,
    oracle_mismatches: Option<u64>,
}

fn gene(ps: &[u64], fs: &[u32], oracle: bool, g: &Global) -> Handled {
    let mut table = Table::new(&["p", "f", "residues", "unique", "ambiguous", "none", "degenerate", "oracle_mismatches"]);
    let mut rows = vec![];
    let mut any_ambiguous = false;
    for &p in ps {
        for &f in fs {
            let modulus = checked_pow(p, 2 * f)? - 1;
            if modulus > g.bound {
                return Err(oneadic_core::Error::Capacity(format!(
                    "p^(2f) - 1 = {modulus} residues exceed the enumeration bound {}",
                    g.bound
                ))
                .into());
            }
            let residues: Vec<u64> = (0..modulus).collect();
            let per = par_map(g.jobs, &residues, |&r| {
                let digits = radix_decompose(&ResidueInt::new(r as i128, modulus)?, p, f)?;
                let sol = solve_gene(&digits)?;
                let mismatch = if oracle {
                    let found = gene_oracle(&digits)?;
                    Some(!found.iter().eq(sol.genes.iter()))
                } else {
                    None
                };
                Ok((sol.genes.len(), r == 0, mismatch))
            })?;
            let mut t = GeneTally {
                oracle_mismatches: oracle.then_some(0),
                ..Default::default()
            };
            for (count, degenerate, mismatch) in per {
                t.residues += 1;
                match count {
                    0 => t.none += 1,
                    1 => t.unique += 1,
                    _ => t.ambiguous += 1,
                }
                t.degenerate += degenerate as u64;
                if let (Some(m), Some(true)) = (t.oracle_mismatches.as_mut(), mismatch) {
                    *m += 1;
                }
            }
            any_ambiguous |= t.ambiguous + t.none > 0;
            table.push(row![
                p,
                f,
                t.residues,
                t.unique,
                t.ambiguous,
                t.none,
                t.degenerate,
                t.oracle_mismatches.map_or("-".to_string(), |m| m.to_string())
            ]);
            rows.push(json!({"p": p, "f": f, "tally": t}));
        }
    }
    ok(Report::new("sweep gene", json!({"rows": rows}))
        .flags(Flags {
            degenerate: false,
            ambiguous: any_ambiguous,
        })
        .table(table))
}

fn bm(f_max: usize, jii_max: usize, g: &Global) -> Handled {
    if f_max > 20 {
        return Err(oneadic_core::Error::Capacity("f-max above 20".into()).into());
    }
    let grid: Vec<(usize, u64)> = (1..=f_max)
        .flat_map(|f| (0u64..1 << f).filter(move |m| m.count_ones() as usize <= jii_max).map(move |m| (f, m)))
        .collect();
    if grid.len() as u64 > g.bound {
        return Err(oneadic_core::Error::Capacity("grid exceeds the enumeration bound".into()).into());
    }
    let reports = par_map(g.jobs, &grid, |&(f, mask)| {
        let jii = (0..f).filter(|k| mask >> k & 1 == 1).collect();
        Ok(bm_identity_check(&DeformationPresentation::new(f, jii)?)?)
    })?;
    let mut table = Table::new(&["f", "shape", "jii_size", "closed_form", "hilbert", "labels", "holds"]);
    for r in &reports {
        let shape = Shape::from_jii(r.presentation.f, &r.presentation.jii)?;
        table.push(row![
            r.presentation.f,
            shape,
            r.presentation.jii.len(),
            r.closed_form,
            r.hilbert_multiplicity,
            r.weight_count,
            r.holds
        ]);
    }
    let all_hold = reports.iter().all(|r| r.holds);
    ok(Report::new("sweep bm", json!({"cases": reports.len(), "all_hold": all_hold, "reports": reports}))
        .summary("cases", reports.len())
        .summary("all_hold", all_hold)
        .table(table))
}

fn serre(n: usize, ps: &[u64], fs: &[usize], g: &Global) -> Handled {
    let grid: Vec<(u64, usize)> = ps.iter().flat_map(|&p| fs.iter().map(move |&f| (p, f))).collect();
    let rows = par_map(g.jobs, &grid, |&(p, f)| {
        let count = enumerate_serre_weights(n, f, p, false)?.len() as u64;
        let index = serre_lattice(p, f)?.index() as u64;
        let q = checked_pow(p, f as u32)?;
        let expected = (n == 2).then(|| q * (q - 1));
        Ok((p, f, count, index, expected))
    })?;
    let mut table = Table::new(&["p", "f", "count", "lattice_index", "expected"]);
    let mut payload = vec![];
    for &(p, f, count, index, expected) in &rows {
        table.push(row![p, f, count, index, expected.map_or("-".to_string(), |e| e.to_string())]);
        payload.push(json!({"p": p, "f": f, "count": count, "lattice_index": index, "expected": expected}));
    }
    ok(Report::new("sweep serre", json!({"n": n, "rows": payload})).table(table))
}

fn kisin(qs: &[u64], fs: &[usize], g: &Global) -> Handled {
    let mut grid = vec![];
    for &q in qs {
        for &f in fs {
            if f == 0 || f > 8 {
                return Err(CliError::invalid("f must lie in 1..=8"));
            }
            for code in 0u32..1 << (2 * f) {
                let coeffs: Vec<(u8, u8)> = (0..f)
                    .map(|i| {
                        let pair = code >> (2 * (f - 1 - i)) & 3;
                        ((pair >> 1) as u8, (pair & 1) as u8)
                    })
                    .collect();
                grid.push((q, coeffs));
            }
        }
    }
    let rows = par_map(g.jobs, &grid, |(q, coeffs)| {
        let eq = KisinVarietyEq::new(coeffs.clone())?;
        let field = FiniteField::new(*q)?;
        let count = kisin_points(&eq, &field, g.bound)?.count;
        let affine = kisin_count_affine(&eq, &field)?;
        Ok((*q, eq, count, affine))
    })?;
    let mut table = Table::new(&["q", "f", "coeffs", "count", "affine_count", "agree"]);
    let mut payload = vec![];
    for (q, eq, count, affine) in &rows {
        table.push(row![q, eq.f(), eq, count, affine, count == affine]);
        payload.push(json!({"q": q, "coeffs": eq.to_string(), "count": count, "affine_count": affine}));
    }
    ok(Report::new("sweep kisin", json!({"rows": payload})).table(table))
}
