//! Check registry and runner behind `shephard-lab verify`.

use std::cell::OnceCell;
use std::time::Instant;

use anyhow::bail;
use serde_json::{json, Value};
use shephard_core::coinvariants::{
    finite_dim_certificate, invariant_ideal, kernel_check_bound, partials_ideal,
    verify_duality_tops, verify_kernel_phi, verify_sign_graded, GradedIdeal, SignGradedCheck,
};
use shephard_core::complexes::{
    cross_polytope_retraction, lex_shelling_cross_polytope, CosetComplex,
};
use shephard_core::field::{Cyclotomic, Rational};
use shephard_core::group::{Family, GroupSpec, ReflectionGroup, DEFAULT_ELEMENT_CAP};
use shephard_core::invariants::{
    basic_invariants, check_classical_identities, jacobian_degree, minimal_invariant,
    molien_vs_rank, relative_invariants, BasicInvariants, ClassicalIdentities, RelativeInvariants,
};

use crate::report::{self, CheckRecord, Details, Status, VerificationReport};

pub struct CheckInfo {
    pub id: &'static str,
    pub summary: &'static str,
    /// Part of the default selection.
    pub default: bool,
    /// Runs on stretch groups.
    pub stretch: bool,
}

/// All checks, in the order they run.
pub const CHECKS: &[CheckInfo] = &[
    CheckInfo {
        id: "presentation",
        summary: "group order, reflection counts and Shephard presentation relations",
        default: true,
        stretch: true,
    },
    CheckInfo {
        id: "basic-invariants",
        summary: "basic invariant degrees, Molien series against invariant ranks, unique invariant of degree d",
        default: true,
        stretch: false,
    },
    CheckInfo {
        id: "relative-invariants",
        summary: "Q, J, H transform by det^-1, det, det^2 under every generator",
        default: true,
        stretch: false,
    },
    CheckInfo {
        id: "qh-eq-j",
        summary: "Q*H = J exactly",
        default: true,
        stretch: false,
    },
    CheckInfo {
        id: "jacobian",
        summary: "Jacobian determinant of the basic invariants is a multiple of J",
        default: true,
        stretch: false,
    },
    CheckInfo {
        id: "hessian",
        summary: "Hessian determinant of f1 is a multiple of H",
        default: true,
        stretch: false,
    },
    CheckInfo {
        id: "milnor-algebra",
        summary: "Hilbert function of S/K is ((1-t^(d-1))/(1-t))^l",
        default: true,
        stretch: false,
    },
    CheckInfo {
        id: "duality",
        summary: "J and H span the tops of S/I and S/K, perfect pairings, regular character of S/I",
        default: true,
        stretch: false,
    },
    CheckInfo {
        id: "kernel",
        summary: "QK is in I and ker(f -> Qf mod I) = K degreewise",
        default: true,
        stretch: false,
    },
    CheckInfo {
        id: "sign-graded",
        summary: "twisted graded character of S/K equals det(1 - g t^(d-1)) / det(g - t) per class",
        default: true,
        stretch: false,
    },
    CheckInfo {
        id: "homology",
        summary: "coset complex: simplicial, cell counts, d^2 = 0, reduced homology concentrated with rank (d-1)^l, Hopf trace",
        default: true,
        stretch: true,
    },
    CheckInfo {
        id: "sign-ungraded",
        summary: "per class: S/K character at t = 1 = virtual character = homology character",
        default: true,
        stretch: false,
    },
    CheckInfo {
        id: "cohen-macaulay",
        summary: "homology of the complex and every face link concentrated in top dimension",
        default: true,
        stretch: true,
    },
    CheckInfo {
        id: "shelling-st",
        summary: "gallery-distance chamber orders with seeded tie-breaks, tested for shelling",
        default: false,
        stretch: true,
    },
    CheckInfo {
        id: "retraction",
        summary: "cross-polytope maps iota, rho: simplicial, color preserving, rho∘iota = id",
        default: true,
        stretch: false,
    },
    CheckInfo {
        id: "lex-shelling",
        summary: "lexicographic chamber order of the cross-polytope order complex is a shelling",
        default: true,
        stretch: false,
    },
];

pub fn check_info(id: &str) -> Option<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.id == id)
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Allow stretch groups; only their complex-side checks run.
    pub stretch: bool,
    /// Seeds for the Solomon–Tits orders.
    pub seeds: Vec<u64>,
    /// Record wall time per check; off for byte-identical reports.
    pub timing: bool,
    pub element_cap: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            stretch: false,
            seeds: (0..8).collect(),
            timing: true,
            element_cap: DEFAULT_ELEMENT_CAP,
        }
    }
}

/// Resolves `--check` arguments: "all", ids, or comma-separated lists. An
/// empty selection means the default set.
pub fn select(args: &[String]) -> anyhow::Result<Vec<&'static str>> {
    let mut wanted: Vec<&str> = Vec::new();
    for a in args {
        for part in a.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                wanted.extend(CHECKS.iter().map(|c| c.id));
            } else if let Some(c) = check_info(part) {
                wanted.push(c.id);
            } else {
                let ids: Vec<&str> = CHECKS.iter().map(|c| c.id).collect();
                bail!(
                    "unknown check id {part:?}; available: all, {}",
                    ids.join(", ")
                );
            }
        }
    }
    if args.is_empty() {
        wanted.extend(CHECKS.iter().filter(|c| c.default).map(|c| c.id));
    }
    Ok(CHECKS
        .iter()
        .map(|c| c.id)
        .filter(|id| wanted.contains(id))
        .collect())
}

type Outcome = anyhow::Result<(Status, Details)>;

struct Context<'a> {
    spec: &'a GroupSpec,
    group: ReflectionGroup,
    seeds: &'a [u64],
    basic: OnceCell<Result<BasicInvariants, String>>,
    relative: OnceCell<RelativeInvariants>,
    identities: OnceCell<Result<ClassicalIdentities, String>>,
    i_ideal: OnceCell<GradedIdeal>,
    k_ideal: OnceCell<GradedIdeal>,
    sign_graded: OnceCell<Result<Vec<SignGradedCheck>, String>>,
    complex: OnceCell<CosetComplex>,
}

impl Context<'_> {
    fn basic(&self) -> anyhow::Result<&BasicInvariants> {
        self.basic
            .get_or_init(|| basic_invariants(&self.group).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|e| anyhow::anyhow!("basic invariants: {e}"))
    }

    fn relative(&self) -> &RelativeInvariants {
        self.relative
            .get_or_init(|| relative_invariants(&self.group))
    }

    fn identities(&self) -> anyhow::Result<&ClassicalIdentities> {
        let basic = self.basic()?;
        self.identities
            .get_or_init(|| {
                check_classical_identities(&self.group, basic, self.relative())
                    .map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(|e| anyhow::anyhow!("classical identities: {e}"))
    }

    fn l(&self) -> usize {
        self.group.rank()
    }

    fn d(&self) -> anyhow::Result<usize> {
        Ok(self.basic()?.d())
    }

    /// I = (f₁, …, f_ℓ) through the degrees needed by every check.
    fn i_ideal(&self) -> anyhow::Result<&GradedIdeal> {
        let basic = self.basic()?;
        let top = jacobian_degree(&basic.degrees);
        let q_deg = self.relative().q.homogeneous_degree().unwrap_or(0);
        let max = top.max(kernel_check_bound(self.l(), basic.d()) + q_deg);
        Ok(self
            .i_ideal
            .get_or_init(|| invariant_ideal(&basic.polys, self.l(), self.group.field_order(), max)))
    }

    /// K = (∂f₁/∂x₁, …, ∂f₁/∂x_ℓ) through ℓ(d−2)+1.
    fn k_ideal(&self) -> anyhow::Result<&GradedIdeal> {
        let basic = self.basic()?;
        let max = kernel_check_bound(self.l(), basic.d());
        Ok(self
            .k_ideal
            .get_or_init(|| partials_ideal(&basic.polys[0], max)))
    }

    fn sign_graded(&self) -> anyhow::Result<&Vec<SignGradedCheck>> {
        let k = self.k_ideal()?;
        let d = self.d()?;
        self.sign_graded
            .get_or_init(|| verify_sign_graded(&self.group, k, d).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|e| anyhow::anyhow!("sign-graded: {e}"))
    }

    fn complex(&self) -> &CosetComplex {
        self.complex
            .get_or_init(|| CosetComplex::build(&self.group))
    }

    fn expected_top_betti(&self) -> usize {
        (self.spec.degrees[0] as usize - 1).pow(self.l() as u32)
    }

    fn wreath_parameters(&self) -> Option<(u8, usize)> {
        (self.spec.family == Family::Wreath).then(|| (self.spec.symbol.p[0] as u8, self.l()))
    }
}

fn rat(q: &Rational) -> Value {
    report::rational(q)
}

fn cyc(x: &Cyclotomic) -> Value {
    report::cyclotomic(x)
}

fn presentation(cx: &Context) -> Outcome {
    let g = &cx.group;
    let pres = g.verify_presentation();
    let reflections = g.reflections().len();
    let by_degrees: usize = cx.spec.degrees.iter().map(|&d| d as usize - 1).sum();
    let by_hyperplanes: usize = g.hyperplanes().iter().map(|h| h.order as usize - 1).sum();
    let order_ok = g.order() as u64 == cx.spec.expected_order();
    let ok =
        pres.all_hold() && order_ok && reflections == by_degrees && reflections == by_hyperplanes;
    let failures: Vec<String> = pres.failures().map(|r| r.relation.clone()).collect();
    let mut text = format!(
        "|G| = {} (product of degrees {}), {} reflections (sum d-1 = {}, sum e_H-1 = {}), {} of {} relations hold",
        g.order(),
        cx.spec.expected_order(),
        reflections,
        by_degrees,
        by_hyperplanes,
        pres.relations.len() - failures.len(),
        pres.relations.len()
    );
    for f in &failures {
        text.push_str(&format!("\nfailed relation: {f}"));
    }
    Ok((
        Status::from_bool(ok),
        Details::new(text)
            .field("order", g.order())
            .field("expected_order", cx.spec.expected_order())
            .field("reflections", reflections)
            .field("hyperplanes", g.hyperplanes().len())
            .field("classes", g.num_classes())
            .field(
                "relations",
                pres.relations
                    .iter()
                    .map(|r| json!({"relation": r.relation, "holds": r.holds}))
                    .collect::<Vec<_>>(),
            ),
    ))
}

fn basic_invariants_check(cx: &Context) -> Outcome {
    let basic = cx.basic()?;
    let degrees_ok = basic.degrees == cx.spec.degrees;
    let bound = *basic.degrees.last().unwrap() as usize;
    let molien = molien_vs_rank(&cx.group, bound);
    let molien_ok = molien.iter().all(|(a, b)| a == b);
    let (d, f1) = minimal_invariant(&cx.group)?;
    let unique_ok = d == basic.d();
    let ok = degrees_ok && molien_ok && unique_ok;
    let text = format!(
        "degrees {:?} (catalog {:?}); Molien coefficients match invariant ranks through degree {bound}: {molien_ok}; unique invariant in degree {d}: f1 = {f1}",
        basic.degrees, cx.spec.degrees
    );
    Ok((
        Status::from_bool(ok),
        Details::new(text)
            .field("degrees", basic.degrees.clone())
            .field(
                "molien_vs_rank",
                molien
                    .iter()
                    .map(|(a, b)| json!([a, b]))
                    .collect::<Vec<_>>(),
            )
            .field(
                "basic_invariants",
                basic.polys.iter().map(report::poly).collect::<Vec<_>>(),
            ),
    ))
}

fn relative_check(cx: &Context) -> Outcome {
    let ids = cx.identities()?;
    let rel = cx.relative();
    let ok = ids.relative_characters.iter().all(|c| c.q && c.j && c.h);
    let per: Vec<Value> = ids
        .relative_characters
        .iter()
        .map(|c| json!({"generator": c.generator, "q": c.q, "j": c.j, "h": c.h}))
        .collect();
    Ok((
        Status::from_bool(ok),
        Details::new(format!(
            "deg Q = {}, deg J = {}, deg H = {}; characters det^-1, det, det^2 on every generator: {ok}",
            rel.q.homogeneous_degree().unwrap_or(0),
            rel.j.homogeneous_degree().unwrap_or(0),
            rel.h.homogeneous_degree().unwrap_or(0)
        ))
        .field("q", report::poly(&rel.q))
        .field("j", report::poly(&rel.j))
        .field("h", report::poly(&rel.h))
        .field("generators", per),
    ))
}

fn qh_check(cx: &Context) -> Outcome {
    let ids = cx.identities()?;
    Ok((
        Status::from_bool(ids.qh_equals_j),
        Details::new(format!("Q*H = J: {}", ids.qh_equals_j)),
    ))
}

fn ratio_outcome(
    what: &str,
    ratio: &Option<Cyclotomic>,
    value: &shephard_core::poly::Poly,
) -> Outcome {
    Ok(match ratio {
        Some(c) => (
            Status::Pass,
            Details::new(format!("{what} = c * target with c = {c}"))
                .field("ratio", cyc(c))
                .field("determinant", report::poly(value)),
        ),
        None => (
            Status::Fail,
            Details::new(format!("{what} is not a scalar multiple of the target"))
                .field("determinant", report::poly(value)),
        ),
    })
}

fn jacobian_check(cx: &Context) -> Outcome {
    let ids = cx.identities()?;
    ratio_outcome("Jac(f1..fl)", &ids.jacobian_ratio, &ids.jacobian)
}

fn hessian_check(cx: &Context) -> Outcome {
    let ids = cx.identities()?;
    ratio_outcome("Hess(f1)", &ids.hessian_ratio, &ids.hessian)
}

fn milnor_check(cx: &Context) -> Outcome {
    let cert = finite_dim_certificate(cx.k_ideal()?, cx.d()?, cx.l());
    let expected_total = cx.expected_top_betti();
    let ok = cert.passed() && cert.total == expected_total;
    Ok((
        Status::from_bool(ok),
        Details::new(format!(
            "Hilbert function {:?}, expected {:?}; top degree {}; total {} = (d-1)^l = {}",
            cert.hilbert, cert.expected, cert.top_degree, cert.total, expected_total
        ))
        .field("hilbert", cert.hilbert.clone())
        .field("expected", cert.expected.clone())
        .field("top_degree", cert.top_degree)
        .field("total", cert.total),
    ))
}

fn duality_check(cx: &Context) -> Outcome {
    let basic = cx.basic()?;
    let rel = cx.relative();
    let rep = verify_duality_tops(
        &cx.group,
        cx.i_ideal()?,
        cx.k_ideal()?,
        &rel.j,
        &rel.h,
        &basic.degrees,
    );
    Ok((
        Status::from_bool(rep.all_hold()),
        Details::new(rep.summary())
            .field("top_i", rep.top_i)
            .field("top_k", rep.top_k)
            .field("j_spans_top", rep.j_spans_top)
            .field("h_spans_top", rep.h_spans_top)
            .field("pairing_k", rep.pairing_k.clone())
            .field("pairing_i", rep.pairing_i.clone())
            .field(
                "regular_character",
                rep.chevalley
                    .iter()
                    .map(|(x, v, ok)| json!({"class_rep": x, "value": cyc(v), "ok": ok}))
                    .collect::<Vec<_>>(),
            ),
    ))
}

fn kernel_check(cx: &Context) -> Outcome {
    let rows = verify_kernel_phi(
        &cx.relative().q,
        cx.i_ideal()?,
        cx.k_ideal()?,
        cx.l(),
        cx.d()?,
    );
    let ok = rows.iter().all(|r| r.holds());
    let mut text = format!(
        "degrees 0..={}: QK in I and dim ker = dim K: {ok}",
        kernel_check_bound(cx.l(), cx.d()?)
    );
    for r in rows.iter().filter(|r| !r.holds()) {
        text.push_str(&format!(
            "\ndegree {}: dim K = {}, dim ker = {}, inclusion {}",
            r.degree, r.k_dim, r.kernel_dim, r.inclusion
        ));
    }
    Ok((
        Status::from_bool(ok),
        Details::new(text).field(
            "degrees",
            rows.iter()
                .map(|r| json!({"degree": r.degree, "k_dim": r.k_dim, "kernel_dim": r.kernel_dim, "inclusion": r.inclusion}))
                .collect::<Vec<_>>(),
        ),
    ))
}

fn sign_graded_check(cx: &Context) -> Outcome {
    let checks = cx.sign_graded()?;
    let ok = checks.iter().all(|c| c.holds);
    let mut text = format!("{} classes, identity holds for all: {ok}", checks.len());
    for c in checks {
        text.push_str(&format!(
            "\nclass of element {}: {}  [{}]",
            c.class_rep,
            c.character,
            if c.holds { "ok" } else { "FAILED" }
        ));
    }
    Ok((
        Status::from_bool(ok),
        Details::new(text).field(
            "classes",
            checks
                .iter()
                .map(|c| {
                    json!({
                        "class_rep": c.class_rep,
                        "character": report::upoly(&c.character),
                        "formula_numerator": report::upoly(&c.formula.numerator),
                        "formula_denominator": report::upoly(&c.formula.denominator),
                        "holds": c.holds,
                    })
                })
                .collect::<Vec<_>>(),
        ),
    ))
}

fn homology_check(cx: &Context) -> Outcome {
    let g = &cx.group;
    let cc = cx.complex();
    let l = cx.l();
    let full = (1u32 << l) - 1;
    let chambers_ok = cc.complex().facets().len() == g.order();
    let color_counts: Vec<usize> = (0..l).map(|i| cc.cosets(full ^ (1 << i)).count()).collect();
    let colors_ok =
        (0..l).all(|i| color_counts[i] * cc.cosets(full ^ (1 << i)).subgroup.len() == g.order());
    let simplicial = cc.is_simplicial();
    let chain = cc.complex().chain_complex();
    let boundary_ok = chain.is_complex();
    let betti = chain.reduced_betti();
    let top = l as isize - 1;
    let expected = cx.expected_top_betti();
    let concentrated = betti.concentrated_in(top) && betti.get(top) == expected;
    let mut hopf_ok = true;
    let mut hopf = Vec::new();
    if !cx.spec.stretch && concentrated {
        for &x in g.class_reps() {
            let h = cc.hopf_check(g, x)?;
            hopf_ok &= h.holds;
            hopf.push(json!({
                "class_rep": x,
                "homology": rat(&h.homology),
                "lefschetz": h.lefschetz,
                "virtual": h.virtual_character,
                "holds": h.holds,
            }));
        }
    }
    let ok = chambers_ok && colors_ok && simplicial && boundary_ok && concentrated && hopf_ok;
    let mut text = format!(
        "f-vector {:?}; reduced Betti {:?}; top rank {} (expected (d-1)^l = {expected}); simplicial {simplicial}; d^2 = 0 {boundary_ok}",
        cc.complex().f_vector(),
        betti.nonnegative(),
        betti.get(top)
    );
    if cx.spec.stretch {
        text.push_str("\nHopf trace check not run on stretch groups");
    } else {
        text.push_str(&format!(
            "\nHopf trace identity on {} classes: {hopf_ok}",
            hopf.len()
        ));
    }
    Ok((
        Status::from_bool(ok),
        Details::new(text)
            .field("f_vector", cc.complex().f_vector())
            .field("vertices_per_color", color_counts)
            .field("reduced_betti", betti.nonnegative())
            .field("expected_top_rank", expected)
            .field("simplicial", simplicial)
            .field("boundary_squared_zero", boundary_ok)
            .field("hopf", hopf),
    ))
}

fn sign_ungraded_check(cx: &Context) -> Outcome {
    let g = &cx.group;
    let n = g.field_order();
    let cc = cx.complex();
    let graded = cx.sign_graded()?;
    let expected_identity = cx.expected_top_betti() as i64;
    let mut ok = true;
    let mut rows = Vec::new();
    let mut text = String::from("class rep: S/K at t=1, virtual, homology");
    for c in graded {
        let x = c.class_rep;
        let at_one = c.character.sum();
        let virt = cc.virtual_character(g, x);
        let hom = cc.homology_character(g, x)?;
        let rational = at_one.is_rational();
        let agree = rational
            && at_one == Cyclotomic::from_int(n, virt)
            && Rational::from(virt) == hom
            && (x != 0 || virt == expected_identity);
        ok &= agree;
        text.push_str(&format!(
            "\n{x}: {at_one}, {virt}, {hom}  [{}]",
            if agree { "ok" } else { "FAILED" }
        ));
        rows.push(json!({
            "class_rep": x,
            "coinvariant_value": cyc(&at_one),
            "virtual_character": virt,
            "homology_character": rat(&hom),
            "rational": rational,
            "holds": agree,
        }));
    }
    Ok((
        Status::from_bool(ok),
        Details::new(text)
            .field("classes", rows)
            .field("identity_expected", expected_identity)
            .field(
                "conjugation",
                "values are rational, so conjugating the homology character to obtain the cohomology one changes nothing",
            ),
    ))
}

fn cohen_macaulay_check(cx: &Context) -> Outcome {
    let v = cx.complex().complex().cm_check();
    let mut details = Details::new(format!(
        "{} faces checked (including the empty face); concentrated: {}",
        v.faces_checked, v.passed
    ))
    .field("faces_checked", v.faces_checked);
    if let Some(f) = &v.first_failure {
        details = details.field("first_failure", f.clone());
    }
    Ok((Status::from_bool(v.passed), details))
}

fn shelling_st_check(cx: &Context) -> Outcome {
    let g = &cx.group;
    let cc = cx.complex();
    let mut failing = Vec::new();
    let mut rows = Vec::new();
    for &seed in cx.seeds {
        let out = cc.solomon_tits_check(g, seed)?;
        if !out.verdict.passed {
            failing.push(seed);
        }
        rows.push(
            json!({"seed": seed, "passed": out.verdict.passed, "failed_at": out.verdict.failed_at}),
        );
    }
    // gallery orders are shellings for real groups and for graphs
    let guaranteed = cx.spec.field_order <= 2 || cx.spec.family == Family::Coxeter || cx.l() <= 2;
    let status = if guaranteed && !failing.is_empty() {
        Status::Fail
    } else {
        Status::Pass
    };
    Ok((
        status,
        Details::new(format!(
            "{} of {} seeded orders are not shellings (seeds {:?})",
            failing.len(),
            cx.seeds.len(),
            failing
        ))
        .field("orders", rows)
        .field("non_shelling_seeds", failing)
        .field("shelling_expected", guaranteed),
    ))
}

fn retraction_check(cx: &Context) -> Outcome {
    let Some((r, l)) = cx.wreath_parameters() else {
        return Ok((
            Status::Skipped,
            Details::new("only defined for the groups G(r,1,l)"),
        ));
    };
    let rep = cross_polytope_retraction(r, l)?;
    Ok((
        Status::from_bool(rep.holds()),
        Details::new(format!(
            "r = {r}, l = {l}: iota simplicial {}, rho simplicial {}, colors preserved {}, rho∘iota = id {}",
            rep.iota_simplicial, rep.rho_simplicial, rep.colors_preserved, rep.rho_after_iota_is_identity
        ))
        .field("iota_simplicial", rep.iota_simplicial)
        .field("rho_simplicial", rep.rho_simplicial)
        .field("colors_preserved", rep.colors_preserved)
        .field("rho_after_iota_is_identity", rep.rho_after_iota_is_identity)
        .field("mutually_inverse", rep.mutually_inverse),
    ))
}

fn lex_shelling_check(cx: &Context) -> Outcome {
    let Some((r, l)) = cx.wreath_parameters() else {
        return Ok((
            Status::Skipped,
            Details::new("only defined for the groups G(r,1,l)"),
        ));
    };
    let rep = lex_shelling_cross_polytope(r, l)?;
    Ok((
        Status::from_bool(rep.verdict.passed),
        Details::new(format!(
            "r = {r}, l = {l}: {} chambers, lexicographic order is a shelling: {}",
            rep.chambers, rep.verdict.passed
        ))
        .field("chambers", rep.chambers)
        .field("failed_at", rep.verdict.failed_at),
    ))
}

fn run_one(id: &str, cx: &Context) -> Outcome {
    match id {
        "presentation" => presentation(cx),
        "basic-invariants" => basic_invariants_check(cx),
        "relative-invariants" => relative_check(cx),
        "qh-eq-j" => qh_check(cx),
        "jacobian" => jacobian_check(cx),
        "hessian" => hessian_check(cx),
        "milnor-algebra" => milnor_check(cx),
        "duality" => duality_check(cx),
        "kernel" => kernel_check(cx),
        "sign-graded" => sign_graded_check(cx),
        "homology" => homology_check(cx),
        "sign-ungraded" => sign_ungraded_check(cx),
        "cohen-macaulay" => cohen_macaulay_check(cx),
        "shelling-st" => shelling_st_check(cx),
        "retraction" => retraction_check(cx),
        "lex-shelling" => lex_shelling_check(cx),
        other => bail!("unknown check id {other:?}"),
    }
}

/// Runs the selected checks on one group. Errors only for problems with the
/// request itself; failures inside a check are recorded in the report.
pub fn verify(
    spec: &GroupSpec,
    checks: &[&str],
    opts: &RunOptions,
) -> anyhow::Result<VerificationReport> {
    if spec.stretch && !opts.stretch {
        bail!(
            "{} is a stretch group; pass --stretch to run its complex checks",
            spec.name
        );
    }
    let group = ReflectionGroup::generate_with_cap(spec, opts.element_cap)?;
    let cx = Context {
        spec,
        group,
        seeds: &opts.seeds,
        basic: OnceCell::new(),
        relative: OnceCell::new(),
        identities: OnceCell::new(),
        i_ideal: OnceCell::new(),
        k_ideal: OnceCell::new(),
        sign_graded: OnceCell::new(),
        complex: OnceCell::new(),
    };
    let mut report = VerificationReport::new(&spec.name, spec.field_order);
    for &id in checks {
        let info = check_info(id).ok_or_else(|| anyhow::anyhow!("unknown check id {id:?}"))?;
        let start = Instant::now();
        let (status, details) = if spec.stretch && !info.stretch {
            (Status::Skipped, Details::new("not run on stretch groups"))
        } else {
            run_one(id, &cx).unwrap_or_else(|e| (Status::Error, Details::new(format!("{e:#}"))))
        };
        let millis = if opts.timing {
            start.elapsed().as_millis() as u64
        } else {
            0
        };
        report.checks.push(CheckRecord {
            id: id.to_string(),
            status,
            details,
            millis,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use shephard_core::group::{builtin, lookup};

    #[test]
    fn selection() {
        let default = select(&[]).unwrap();
        assert!(!default.contains(&"shelling-st"));
        assert_eq!(select(&["all".into()]).unwrap().len(), CHECKS.len());
        assert_eq!(
            select(&["kernel,presentation".into()]).unwrap(),
            vec!["presentation", "kernel"]
        );
        assert!(select(&["lemma9.9".into()]).is_err());
    }

    #[test]
    fn every_check_passes_on_g312() {
        let specs = builtin();
        let spec = lookup(&specs, "G(3,1,2)").unwrap();
        let opts = RunOptions {
            seeds: vec![0, 1],
            timing: false,
            ..RunOptions::default()
        };
        let report = verify(spec, &select(&["all".into()]).unwrap(), &opts).unwrap();
        assert_eq!(report.checks.len(), CHECKS.len());
        for c in &report.checks {
            assert_eq!(c.status, Status::Pass, "{}: {}", c.id, c.details.text);
        }
    }

    #[test]
    fn stretch_groups_need_the_flag() {
        let specs = builtin();
        let spec = lookup(&specs, "3[3]3[3]3").unwrap();
        assert!(verify(spec, &["presentation"], &RunOptions::default()).is_err());
    }

    #[test]
    fn non_wreath_groups_skip_cross_polytope_checks() {
        let specs = builtin();
        let spec = lookup(&specs, "3[3]3").unwrap();
        let report = verify(
            spec,
            &["retraction", "lex-shelling"],
            &RunOptions::default(),
        )
        .unwrap();
        assert!(report.checks.iter().all(|c| c.status == Status::Skipped));
    }
}
