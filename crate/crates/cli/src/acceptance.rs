//! The acceptance suite: twelve exact checks, each independent of the
//! others, with optional fault injection to prove failures are reported.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

use oneadic_core::arith::{
    card_gl, gl_cofactor_polynomial, gl_difference_polynomial, gl_factored_polynomial, RadixDigits,
};
use oneadic_core::bm::generic_weight_labels;
use oneadic_core::defring::{hs_multiplicity, multiplicity_from_hilbert, DeformationPresentation};
use oneadic_core::f1::{
    a_res, adjunction_check, frob_aut_group, gl_f1n, gl_module, sym_rep, F1Space,
    StructuredMonoid,
};
use oneadic_core::ffield::FiniteField;
use oneadic_core::galois::{aut_fixing_submonoid, classical_tame_galois, p_to_1_table, KnModel};
use oneadic_core::gene::solve_gene;
use oneadic_core::kisin::{kisin_points, KisinVarietyEq};
use oneadic_core::lattice::{determinant, p_minus_shift};
use oneadic_core::oracle::{gene_oracle, gl_count_brute, kisin_count_affine};
use oneadic_core::perm::GroupStructure;
use oneadic_core::weyl::{enumerate_serre_weights, serre_lattice};

use crate::args::{AcceptanceArgs, Fault, Format, Global};
use crate::commands::sweep::par_map;
use crate::commands::Handled;
use crate::report::{Report, Table};
use crate::{exit, row, CliError};

pub struct Context {
    pub jobs: u64,
    pub bound: u64,
    pub fault: Option<Fault>,
}

type Check = fn(&Context) -> Result<String, String>;

pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub tags: &'static [&'static str],
    check: Check,
}

impl Criterion {
    pub fn matches(&self, filter: &str) -> bool {
        self.id.to_string() == filter
            || self.name.contains(filter)
            || self.tags.iter().any(|t| t.contains(filter))
    }
}

pub const CRITERIA: [Criterion; 12] = [
    Criterion { id: 1, name: "gl-point-count-limit", tags: &["arith"], check: gl_limit },
    Criterion { id: 2, name: "gene-solver-oracle", tags: &["gene"], check: gene_solver },
    Criterion { id: 3, name: "bm-identity", tags: &["bm", "defring"], check: bm_identity },
    Criterion { id: 4, name: "kisin-counts", tags: &["kisin", "bm"], check: kisin_counts },
    Criterion { id: 5, name: "f1n-galois", tags: &["f1", "galois"], check: f1n_galois },
    Criterion { id: 6, name: "galtr", tags: &["galois"], check: galtr },
    Criterion { id: 7, name: "adjunction", tags: &["f1"], check: adjunction },
    Criterion { id: 8, name: "gl-over-f1", tags: &["f1"], check: gl_over_f1 },
    Criterion { id: 9, name: "serre-weight-counts", tags: &["serre", "weyl"], check: serre_counts },
    Criterion { id: 10, name: "sym-irreducibility", tags: &["f1", "sym"], check: sym_irreducible },
    Criterion { id: 11, name: "tame-comparison", tags: &["galois"], check: tame_comparison },
    Criterion { id: 12, name: "determinism", tags: &["cli", "sweep"], check: determinism },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    /// `PASS  3 bm-identity: ...`
    pub fn line(&self) -> String {
        format!(
            "{}  {:>2} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

pub fn selected(filter: Option<&str>) -> Vec<&'static Criterion> {
    CRITERIA.iter().filter(|c| filter.is_none_or(|f| c.matches(f))).collect()
}

pub fn run_one(c: &Criterion, ctx: &Context) -> Outcome {
    let (passed, detail) = match (c.check)(ctx) {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome {
        id: c.id,
        name: c.name,
        passed,
        detail,
    }
}

pub fn run_suite(filter: Option<&str>, ctx: &Context) -> Vec<Outcome> {
    selected(filter).into_iter().map(|c| run_one(c, ctx)).collect()
}

pub fn command(a: &AcceptanceArgs, g: &Global) -> Handled {
    let chosen = selected(a.filter.as_deref());
    if chosen.is_empty() {
        return Err(CliError::invalid(format!(
            "no criterion matches filter {:?}",
            a.filter.as_deref().unwrap_or("")
        )));
    }
    let ctx = Context {
        jobs: g.jobs,
        bound: g.bound,
        fault: a.inject_fault,
    };
    let outcomes: Vec<Outcome> = chosen.into_iter().map(|c| run_one(c, &ctx)).collect();
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.name).collect();
    let mut table = Table::new(&["id", "criterion", "status", "detail"]);
    for o in &outcomes {
        table.push(row![o.id, o.name, if o.passed { "PASS" } else { "FAIL" }, o.detail]);
    }
    let report = Report::new(
        "acceptance",
        json!({"passed": passed, "total": outcomes.len(), "failed": failed, "criteria": outcomes}),
    )
    .summary("passed", format!("{passed}/{}", outcomes.len()))
    .summary("failed", if failed.is_empty() { "none".to_string() } else { failed.join(", ") })
    .table(table);
    let code = if failed.is_empty() { exit::OK } else { exit::ACCEPTANCE_FAILURE };
    Ok((report, code))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core<T>(r: oneadic_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn cli<T>(r: Result<T, CliError>) -> Result<T, String> {
    r.map_err(|e| e.message)
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn gl_limit(_: &Context) -> Result<String, String> {
    for n in 1..=5usize {
        ensure(gl_difference_polynomial(n) == gl_factored_polynomial(n), || {
            format!("polynomial identity fails for n = {n}")
        })?;
        let at_one = gl_cofactor_polynomial(n).eval_i64(1);
        ensure(at_one == BigInt::from(factorial(n as u64)), || {
            format!("cofactor at q = 1 is {at_one} for n = {n}")
        })?;
    }
    for n in 1..=3usize {
        for q in [2u64, 3] {
            let closed = core(card_gl(n as u32, q))?.total;
            let brute = core(gl_count_brute(n, q))?;
            ensure(closed == BigInt::from(brute), || {
                format!("GL_{n}(F_{q}): closed form {closed}, brute force {brute}")
            })?;
        }
    }
    let pins = [(2, 3, 48u64), (3, 2, 168)];
    for (n, q, want) in pins {
        let got = core(gl_count_brute(n, q))?;
        ensure(got == want, || format!("GL_{n}(F_{q}) counted {got}, expected {want}"))?;
    }
    Ok("identity and q = 1 limit for n <= 5, brute force n <= 3 q in {2,3}".into())
}

fn solver_set(ctx: &Context, d: &RadixDigits) -> Result<BTreeSet<String>, String> {
    let mut genes = core(solve_gene(d))?.genes;
    if ctx.fault == Some(Fault::DropGene) {
        genes.pop();
    }
    Ok(genes.iter().map(|g| g.to_string()).collect())
}

fn gene_solver(ctx: &Context) -> Result<String, String> {
    let mut checked = 0;
    for f in 1..=3u32 {
        let len = 2 * f as usize;
        let vectors: Vec<Vec<u64>> = (0..3u64.pow(len as u32))
            .map(|mut code| {
                (0..len)
                    .map(|_| {
                        let d = code % 3;
                        code /= 3;
                        d
                    })
                    .collect()
            })
            .collect();
        let mismatches = cli(par_map(ctx.jobs, &vectors, |v| {
            let d = RadixDigits::new(3, v.clone())?;
            let solver = solver_set(ctx, &d).map_err(CliError::invalid)?;
            let oracle: BTreeSet<String> = gene_oracle(&d)?.iter().map(|g| g.to_string()).collect();
            Ok((solver != oracle).then(|| v.clone()))
        }))?;
        if let Some(v) = mismatches.into_iter().flatten().next() {
            return Err(format!("solver and oracle differ at v = {v:?}"));
        }
        checked += vectors.len();
    }
    let pins: [(&[u64], &[&str]); 3] = [(&[1, 2], &["OO"]), (&[1, 0], &["BA"]), (&[2, 3, 4, 2], &["OOOO"])];
    for (v, want) in pins {
        let base = if v.iter().any(|&x| x > 2) { 5 } else { 3 };
        let d = core(RadixDigits::new(base, v.to_vec()))?;
        let got = solver_set(ctx, &d)?;
        let want: BTreeSet<String> = want.iter().map(|s| s.to_string()).collect();
        ensure(got == want, || format!("v = {v:?} gave {got:?}"))?;
    }
    Ok(format!("{checked} digit vectors, f in 1..=3, solver = oracle"))
}

fn bm_identity(ctx: &Context) -> Result<String, String> {
    let mut cases = 0;
    for f in 1..=6usize {
        for mask in 0u32..1 << f {
            if mask.count_ones() > 5 {
                continue;
            }
            let jii: BTreeSet<usize> = (0..f).filter(|k| mask >> k & 1 == 1).collect();
            let d = core(DeformationPresentation::new(f, jii.clone()))?;
            let closed = hs_multiplicity(&d);
            let mut hilbert = core(multiplicity_from_hilbert(&d))?;
            if ctx.fault == Some(Fault::WrongMultiplicity) {
                hilbert += 1;
            }
            let labels = BigInt::from(core(generic_weight_labels(&jii))?.len());
            ensure(closed == hilbert && hilbert == labels, || {
                format!("f = {f}, J_II = {jii:?}: closed {closed}, Hilbert {hilbert}, labels {labels}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} shapes with f <= 6, |J_II| <= 5, three paths agree"))
}

fn kisin_counts(ctx: &Context) -> Result<String, String> {
    for q in [3u64, 5, 9] {
        let field = core(FiniteField::new(q))?;
        for (coeffs, want) in [("11", q + 1), ("10", 2), ("00", q + 1)] {
            let eq = core(KisinVarietyEq::parse(coeffs))?;
            let got = core(kisin_points(&eq, &field, ctx.bound))?.count;
            ensure(got == want, || format!("f = 1, (λ,μ) = {coeffs}, q = {q}: {got} points, expected {want}"))?;
        }
        let eq = core(KisinVarietyEq::parse("11,11"))?;
        let got = core(kisin_points(&eq, &field, ctx.bound))?.count;
        let affine = core(kisin_count_affine(&eq, &field))?;
        ensure(got == affine && got == q + 1, || {
            format!("f = 2 all-(1,1), q = {q}: projective {got}, affine {affine}")
        })?;
    }
    Ok("f = 1 pins and f = 2 diagonal count for q in {3,5,9}".into())
}

fn f1n_galois(ctx: &Context) -> Result<String, String> {
    for n in 1..=8usize {
        let s = core(a_res(F1Space::new(1), n))?;
        ensure(s.frobenius().order() == n as u64, || format!("Frobenius of order {} for n = {n}", s.frobenius().order()))?;
        let a = core(frob_aut_group(&s, ctx.bound))?;
        let cyclic = match a.structure {
            GroupStructure::Trivial => n == 1,
            GroupStructure::Cyclic { order } => order == n as u64,
            _ => false,
        };
        ensure(cyclic && a.group.order() == n as u64 && a.generated_by_frobenius, || {
            format!("n = {n}: {} of order {}", a.structure, a.group.order())
        })?;
    }
    Ok("cyclic of order n, generated by the Frobenius, n <= 8".into())
}

fn galtr(_: &Context) -> Result<String, String> {
    for n in 1..=8u64 {
        let k = core(KnModel::new(n))?;
        let r = core(aut_fixing_submonoid(&k, n as i64 + 1))?;
        let sigma_exponents: BTreeSet<u64> = r.automorphisms.iter().map(|g| g.a).collect();
        ensure(
            r.report.order == Some(n)
                && r.all_powers_of_sigma
                && r.automorphisms.iter().all(|g| g.b == 1)
                && sigma_exponents.len() as u64 == n,
            || format!("n = {n}: {} automorphisms, all powers of σ: {}", r.automorphisms.len(), r.all_powers_of_sigma),
        )?;
    }
    Ok("⟨σ_n⟩ of order n with b = 1, n <= 8".into())
}

fn adjunction(ctx: &Context) -> Result<String, String> {
    let grid: Vec<(usize, usize, usize)> = (0..=3)
        .flat_map(|v| (0..=3).flat_map(move |w| (1..=3).map(move |n| (v, w, n))))
        .collect();
    let reports = cli(par_map(ctx.jobs, &grid, |&(v, w, n)| Ok(adjunction_check(v, w, n, 3)?)))?;
    for r in &reports {
        let closed = (r.w as u128 + 1).pow((r.n * r.v) as u32);
        ensure(r.holds(), || format!("|V| = {}, |W| = {}, n = {}: not a natural bijection", r.v, r.w, r.n))?;
        ensure(r.left.source_count == closed && r.left.target_count == closed, || {
            format!(
                "|V| = {}, |W| = {}, n = {}: hom sets {} and {}, closed form {closed}",
                r.v, r.w, r.n, r.left.source_count, r.left.target_count
            )
        })?;
    }
    Ok(format!("{} cases |V|,|W| <= 3, n <= 3", reports.len()))
}

fn gl_over_f1(ctx: &Context) -> Result<String, String> {
    for d in 1..=4usize {
        for n in 1..=3usize {
            let g = core(gl_f1n(d, n, ctx.bound))?;
            let want = factorial(d as u64).pow(n as u32);
            let elements = g.elements.ok_or_else(|| format!("GL_{d}(F_1^{n}) not enumerated"))?;
            let distinct: BTreeSet<_> = elements.iter().collect();
            ensure(
                elements.len() as u64 == want
                    && distinct.len() == elements.len()
                    && elements.iter().all(|m| m.is_automorphism()),
                || format!("GL_{d}(F_1^{n}) has {} elements, expected {want}", elements.len()),
            )?;
        }
    }
    for d in 1..=3usize {
        for b in 0..=2i64 {
            let gl = core(gl_module(StructuredMonoid::f1_laurent(), d, b))?;
            let got = core(gl.elements())?.len() as u64;
            let want = factorial(d as u64) * (2 * b as u64 + 1).pow(d as u32);
            ensure(got == want, || format!("GL_{d}(F_1(X)), B = {b}: {got}, expected {want}"))?;
        }
    }
    Ok("(d!)^n for d <= 4, n <= 3; d!(2B+1)^d for d <= 3, B <= 2".into())
}

fn serre_counts(_: &Context) -> Result<String, String> {
    for p in [3u64, 5] {
        for f in [1usize, 2] {
            let q = p.pow(f as u32);
            let count = core(enumerate_serre_weights(2, f, p, false))?.len() as u64;
            let det = core(determinant(&p_minus_shift(p as i128, f)))?.unsigned_abs() as u64;
            let index = core(serre_lattice(p, f))?.index() as u64;
            ensure(count == q * (q - 1) && det == q - 1 && index == q - 1, || {
                format!("p = {p}, f = {f}: {count} classes, det {det}, index {index}")
            })?;
        }
    }
    Ok("p^f(p^f - 1) classes and index p^f - 1 for p in {3,5}, f in {1,2}".into())
}

fn sym_irreducible(_: &Context) -> Result<String, String> {
    let mut cases = 0;
    for f in 1..=3u32 {
        for code in 0..5u32.pow(f) {
            let degrees: Vec<u32> = (0..f).map(|i| code / 5u32.pow(i) % 5).collect();
            let s = core(sym_rep(&degrees))?;
            // swapping X and Y sends X^{k-j} Y^j to X^j Y^{k-j}, so the orbit of
            // X^k ... has one or two choices per coordinate
            let orbit: u32 = degrees.iter().map(|&k| if k == 0 { 1 } else { 2 }).product();
            let size: u32 = degrees.iter().map(|&k| k + 1).product();
            let small = degrees.iter().all(|&k| k <= 1);
            ensure(s.is_irreducible() == small && (orbit == size) == small, || {
                format!("degrees {degrees:?}: irreducible {}, criterion {small}", s.is_irreducible())
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} degree vectors, f <= 3, k_i <= 4"))
}

fn tame_comparison(_: &Context) -> Result<String, String> {
    for p in [2u64, 3, 5] {
        for n in 1..=3u64 {
            let t = core(classical_tame_galois(p, n))?;
            let m = p.pow(n as u32) - 1;
            let es = t.report.exact_sequence.as_ref().ok_or("no exact sequence")?;
            let kernel_cyclic = match es.kernel {
                GroupStructure::Trivial => m == 1,
                GroupStructure::Cyclic { order } => order == m,
                _ => false,
            };
            ensure(
                t.report.order == Some(n * m) && es.kernel_order == m && kernel_cyclic && t.report.is_consistent(),
                || format!("p = {p}, n = {n}: order {:?}, kernel {}", t.report.order, es.kernel),
            )?;
        }
    }
    for n in 1..=3u32 {
        for r in core(p_to_1_table(n, &[2, 3, 5]))? {
            ensure(
                r.factorization_exact && r.p_minus_1.clone() * &r.q_analogue == r.p_n_minus_1 && r.limit == BigInt::from(n),
                || format!("p = {}, n = {n}: factorization or limit fails", r.p),
            )?;
        }
    }
    Ok("order n(p^n - 1), cyclic kernel, [n]_p -> n for p in {2,3,5}, n <= 3".into())
}

pub const DETERMINISM_SWEEPS: [&[&str]; 4] = [
    &["sweep", "gene", "-p", "3,5", "-f", "1,2", "--oracle"],
    &["sweep", "bm", "--f-max", "6", "--jii-max", "5"],
    &["sweep", "serre", "-p", "3,5", "-f", "1,2"],
    &["sweep", "kisin", "-q", "3,5", "-f", "1,2"],
];

fn determinism(ctx: &Context) -> Result<String, String> {
    let bound = ctx.bound.to_string();
    let mut runs = 0;
    for sweep in DETERMINISM_SWEEPS {
        for format in [Format::Json, Format::Tsv] {
            let fmt = match format {
                Format::Json => "json",
                Format::Tsv => "tsv",
                Format::Text => "text",
            };
            let outputs: Vec<String> = ["1", "8"]
                .iter()
                .map(|jobs| {
                    let mut argv = vec!["oneadic", "--format", fmt, "--jobs", jobs, "--bound", &bound];
                    argv.extend_from_slice(sweep);
                    let out = crate::run(argv);
                    let mut s = out.stdout;
                    if ctx.fault == Some(Fault::Nondeterministic) {
                        s.push_str(jobs);
                    }
                    (out.code == exit::OK).then_some(s).ok_or(out.stderr)
                })
                .collect::<Result<_, _>>()?;
            ensure(outputs[0] == outputs[1], || {
                format!("{} ({fmt}) differs between --jobs 1 and --jobs 8", sweep.join(" "))
            })?;
            runs += 1;
        }
    }
    Ok(format!("{runs} sweep outputs byte-identical at widths 1 and 8"))
}
