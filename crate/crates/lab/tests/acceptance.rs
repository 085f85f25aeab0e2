//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use shephard_core::coinvariants::{
    finite_dim_certificate, invariant_ideal, kernel_check_bound, partials_ideal, verify_kernel_phi,
    verify_sign_graded,
};
use shephard_core::complexes::{
    cross_polytope_retraction, lex_shelling_cross_polytope, CosetComplex,
};
use shephard_core::field::{Cyclotomic, Rational};
use shephard_core::group::{builtin, lookup, GroupSpec, ReflectionGroup};
use shephard_core::invariants::{
    basic_invariants, check_classical_identities, molien_vs_rank, relative_invariants,
    BasicInvariants,
};
use shephard_core::poly::{act, reynolds, Monomial, Poly};
use shephard_lab::checks::{select, verify, RunOptions};

enum Verdict {
    Pass(String),
    Fail(String),
    Inconclusive(String),
}

type Outcome = Result<String, String>;

struct Loaded {
    spec: GroupSpec,
    group: ReflectionGroup,
    basic: BasicInvariants,
}

fn non_stretch() -> Vec<Loaded> {
    builtin()
        .into_iter()
        .filter(|s| !s.stretch)
        .map(|spec| {
            let group = ReflectionGroup::generate(&spec).expect("catalog group enumerates");
            let basic = basic_invariants(&group).expect("basic invariants");
            Loaded { spec, group, basic }
        })
        .collect()
}

fn group(key: &str) -> ReflectionGroup {
    let specs = builtin();
    ReflectionGroup::generate(lookup(&specs, key).unwrap()).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog_integrity(all: &[Loaded]) -> Outcome {
    for l in all {
        let g = &l.group;
        let name = &l.spec.name;
        ensure(g.order() as u64 == l.spec.expected_order(), || {
            format!(
                "{name}: |G| = {} but product of degrees is {}",
                g.order(),
                l.spec.expected_order()
            )
        })?;
        let by_degrees: usize = l.spec.degrees.iter().map(|&d| d as usize - 1).sum();
        let by_hyperplanes: usize = g.hyperplanes().iter().map(|h| h.order as usize - 1).sum();
        ensure(
            g.reflections().len() == by_degrees && by_degrees == by_hyperplanes,
            || {
                format!(
                    "{name}: reflection counts {} / {by_degrees} / {by_hyperplanes}",
                    g.reflections().len()
                )
            },
        )?;
        let pres = g.verify_presentation();
        ensure(pres.all_hold(), || {
            format!(
                "{name}: relations fail: {:?}",
                pres.failures()
                    .map(|r| r.relation.clone())
                    .collect::<Vec<_>>()
            )
        })?;
    }
    Ok(format!("{} groups", all.len()))
}

fn classical_identities(all: &[Loaded]) -> Outcome {
    for l in all {
        let rel = relative_invariants(&l.group);
        let ids =
            check_classical_identities(&l.group, &l.basic, &rel).map_err(|e| e.to_string())?;
        ensure(ids.all_hold(), || {
            format!("{}: {}", l.spec.name, ids.summary())
        })?;
    }
    Ok(format!("{} groups", all.len()))
}

fn milnor_certificate(all: &[Loaded]) -> Outcome {
    for l in all {
        let (d, n) = (l.basic.d(), l.group.rank());
        let k = partials_ideal(&l.basic.polys[0], kernel_check_bound(n, d));
        let cert = finite_dim_certificate(&k, d, n);
        let first_zero = cert.hilbert.iter().position(|&h| h == 0);
        ensure(
            cert.passed()
                && cert.total == (d - 1).pow(n as u32)
                && first_zero == Some(n * (d - 2) + 1),
            || {
                format!(
                    "{}: Hilbert {:?}, expected {:?}",
                    l.spec.name, cert.hilbert, cert.expected
                )
            },
        )?;
    }
    Ok(format!("{} groups", all.len()))
}

fn kernel_theorem(all: &[Loaded]) -> Outcome {
    for l in all {
        let (d, n) = (l.basic.d(), l.group.rank());
        let rel = relative_invariants(&l.group);
        let q_deg = rel.q.homogeneous_degree().unwrap_or(0);
        let bound = kernel_check_bound(n, d);
        let i = invariant_ideal(&l.basic.polys, n, l.group.field_order(), bound + q_deg);
        let k = partials_ideal(&l.basic.polys[0], bound);
        for row in verify_kernel_phi(&rel.q, &i, &k, n, d) {
            ensure(row.holds(), || {
                format!("{} degree {}: {row:?}", l.spec.name, row.degree)
            })?;
        }
    }
    // Q·x² = c·(x³y·f₁ − 2y·f₂) for G(3,1,2)
    let l = all
        .iter()
        .find(|l| l.spec.name == "G(3,1,2)")
        .ok_or("G(3,1,2) missing")?;
    let rel = relative_invariants(&l.group);
    let x = Poly::var(2, 3, 0);
    let y = Poly::var(2, 3, 1);
    let (f1, f2) = (&l.basic.polys[0], &l.basic.polys[1]);
    let witness = x
        .pow(3)
        .mul(&y)
        .mul(f1)
        .sub(&y.mul(f2).scale(&Cyclotomic::from_int(3, 2)));
    let qx2 = rel.q.mul(&x.pow(2));
    let k = partials_ideal(f1, 2);
    ensure(k.contains(&x.pow(2)), || "x^2 is not in K".into())?;
    ensure(qx2.proportionality(&witness).is_some(), || {
        format!("Q*x^2 = {qx2} is not a multiple of {witness}")
    })?;
    Ok(format!(
        "{} groups; G(3,1,2) witness Q*x^2 = c*(x^3*y*f1 - 2*y*f2)",
        all.len()
    ))
}

fn sign_graded(all: &[Loaded]) -> Outcome {
    let mut classes = 0;
    for l in all {
        let (d, n) = (l.basic.d(), l.group.rank());
        let k = partials_ideal(&l.basic.polys[0], kernel_check_bound(n, d));
        let checks = verify_sign_graded(&l.group, &k, d).map_err(|e| e.to_string())?;
        ensure(checks.len() == l.group.num_classes(), || {
            format!("{}: class count", l.spec.name)
        })?;
        for c in checks {
            ensure(c.holds, || {
                format!("{} class of {}: {}", l.spec.name, c.class_rep, c.character)
            })?;
            classes += 1;
        }
    }
    Ok(format!("{} groups, {classes} classes", all.len()))
}

fn sign_ungraded(all: &[Loaded]) -> Outcome {
    let mut identity_values = Vec::new();
    for l in all {
        let g = &l.group;
        let (d, n) = (l.basic.d(), g.rank());
        let k = partials_ideal(&l.basic.polys[0], kernel_check_bound(n, d));
        let cc = CosetComplex::build(g);
        for c in verify_sign_graded(g, &k, d).map_err(|e| e.to_string())? {
            let x = c.class_rep;
            let at_one = c.character.sum();
            let virt = cc.virtual_character(g, x);
            let hom = cc.homology_character(g, x).map_err(|e| e.to_string())?;
            ensure(
                at_one.is_rational()
                    && at_one == Cyclotomic::from_int(g.field_order(), virt)
                    && hom == Rational::from(virt),
                || format!("{} class of {x}: {at_one}, {virt}, {hom}", l.spec.name),
            )?;
            if x == 0 {
                ensure(virt == (d as i64 - 1).pow(n as u32), || {
                    format!("{}: identity value {virt}", l.spec.name)
                })?;
                identity_values.push((l.spec.name.clone(), virt));
            }
        }
    }
    let value = |name: &str| identity_values.iter().find(|(n, _)| n == name).map(|p| p.1);
    ensure(value("3[3]3") == Some(9), || {
        "3[3]3 identity value is not 9".into()
    })?;
    ensure(value("B2") == Some(1), || {
        "B2 identity value is not 1".into()
    })?;
    let b2 = group("B2");
    let cc = CosetComplex::build(&b2);
    let r0 = b2.generator_indices()[0];
    let reflection = cc.homology_character(&b2, r0).map_err(|e| e.to_string())?;
    ensure(
        reflection == Rational::from(-1) && cc.virtual_character(&b2, r0) == -1,
        || format!("B2 reflection value {reflection}"),
    )?;
    Ok(format!(
        "{} groups; 3[3]3 -> 9, B2 -> 1, B2 reflection -> -1",
        all.len()
    ))
}

fn cohen_macaulay(all: &[Loaded]) -> Outcome {
    let mut faces = 0;
    for l in all {
        let v = CosetComplex::build(&l.group).complex().cm_check();
        ensure(v.passed, || {
            format!("{}: link of {:?}", l.spec.name, v.first_failure)
        })?;
        faces += v.faces_checked;
    }
    Ok(format!("{} groups, {faces} links", all.len()))
}

const CROSS_CASES: [(u8, usize); 4] = [(2, 2), (3, 2), (3, 3), (4, 2)];

fn retraction() -> Outcome {
    for (r, l) in CROSS_CASES {
        let rep = cross_polytope_retraction(r, l).map_err(|e| e.to_string())?;
        ensure(rep.holds(), || format!("({r},{l}): {rep:?}"))?;
    }
    Ok(format!("{CROSS_CASES:?}"))
}

fn lex_shelling() -> Outcome {
    for (r, l) in CROSS_CASES {
        let rep = lex_shelling_cross_polytope(r, l).map_err(|e| e.to_string())?;
        ensure(rep.verdict.passed, || {
            format!("({r},{l}) fails at {:?}", rep.verdict.failed_at)
        })?;
    }
    Ok(format!("{CROSS_CASES:?}"))
}

fn stretch_g26() -> Verdict {
    let g = group("2[4]3[3]3");
    let cc = CosetComplex::build(&g);
    let chambers = cc.complex().facets().len();
    let betti = cc.reduced_betti();
    if chambers != 1296 || !betti.concentrated_in(2) || betti.get(2) != 125 {
        return Verdict::Fail(format!(
            "{chambers} chambers, reduced Betti {:?}",
            betti.nonnegative()
        ));
    }
    let seeds: Vec<u64> = (0..16).collect();
    let failing: Vec<u64> = seeds
        .iter()
        .copied()
        .filter(|&s| !cc.solomon_tits_check(&g, s).unwrap().verdict.passed)
        .collect();
    if failing.is_empty() {
        Verdict::Inconclusive(format!("no non-shelling order among seeds {seeds:?}"))
    } else {
        Verdict::Pass(format!(
            "1296 chambers, reduced Betti {:?}; {} of {} seeded orders are not shellings",
            betti.nonnegative(),
            failing.len(),
            seeds.len()
        ))
    }
}

fn property_samples(all: &[Loaded]) -> Outcome {
    // field axioms on a grid of elements of Q(ζ12)
    let n = 12;
    let elems: Vec<Cyclotomic> = (0..6)
        .map(|k| {
            &Cyclotomic::zeta_pow(n, k) + &Cyclotomic::from_rational(n, Rational::new(k - 2, 3))
        })
        .collect();
    for a in &elems {
        for b in &elems {
            ensure(a * b == b * a && a + b == b + a, || "commutativity".into())?;
            for c in &elems {
                ensure(&(a * b) * c == a * &(b * c), || "associativity".into())?;
                ensure(a * &(b + c) == &(a * b) + &(a * c), || {
                    "distributivity".into()
                })?;
            }
            if let Some(inv) = a.inverse() {
                ensure((a * &inv).is_one(), || format!("inverse of {a}"))?;
            }
        }
    }
    // act is an action, Reynolds is an idempotent projection onto invariants
    for key in ["B2", "G(3,1,2)", "3[3]3"] {
        let g = group(key);
        let ord = g.field_order();
        let f = Poly::from_terms(
            2,
            ord,
            [
                (
                    Monomial::from_exponents(&[3, 1]),
                    Cyclotomic::from_int(ord, 2),
                ),
                (
                    Monomial::from_exponents(&[0, 4]),
                    Cyclotomic::zeta_pow(ord, 1),
                ),
            ],
        );
        for x in (0..g.order()).step_by(5) {
            for y in (0..g.order()).step_by(7) {
                let lhs = act(&g, x, &act(&g, y, &f).unwrap()).unwrap();
                ensure(lhs == act(&g, g.mul(x, y), &f).unwrap(), || {
                    format!("{key}: action fails at {x}, {y}")
                })?;
            }
        }
        let r = reynolds(&g, &f);
        ensure(reynolds(&g, &r) == r, || {
            format!("{key}: Reynolds not idempotent")
        })?;
    }
    for l in all {
        let bound = *l.basic.degrees.last().unwrap() as usize;
        ensure(
            molien_vs_rank(&l.group, bound).iter().all(|(a, b)| a == b),
            || {
                format!(
                    "{}: Molien series disagrees with invariant ranks",
                    l.spec.name
                )
            },
        )?;
        ensure(
            CosetComplex::build(&l.group)
                .complex()
                .chain_complex()
                .is_complex(),
            || format!("{}: boundary does not square to zero", l.spec.name),
        )?;
    }
    // reports are byte-identical without timing
    let specs = builtin();
    let spec = lookup(&specs, "G(3,1,2)").unwrap();
    let opts = RunOptions {
        timing: false,
        seeds: vec![5, 6],
        ..RunOptions::default()
    };
    let checks = select(&["all".into()]).unwrap();
    let a = verify(spec, &checks, &opts)
        .map_err(|e| e.to_string())?
        .to_json();
    let b = verify(spec, &checks, &opts)
        .map_err(|e| e.to_string())?
        .to_json();
    ensure(a == b, || "reports differ between identical runs".into())?;
    Ok("field axioms, action, Reynolds, Molien vs rank, boundary squared, report determinism (full suites: core tests/properties.rs)".into())
}

type Criterion<'a> = (u32, &'static str, Box<dyn Fn() -> Verdict + 'a>);

fn main() -> ExitCode {
    let start = Instant::now();
    let all = non_stretch();
    println!(
        "loaded {} non-stretch groups in {:.1} s",
        all.len(),
        start.elapsed().as_secs_f64()
    );
    let criteria: Vec<Criterion<'_>> = vec![
        (
            1,
            "catalog integrity",
            Box::new(|| from(catalog_integrity(&all))),
        ),
        (
            2,
            "classical identities",
            Box::new(|| from(classical_identities(&all))),
        ),
        (
            3,
            "Milnor algebra certificate",
            Box::new(|| from(milnor_certificate(&all))),
        ),
        (
            4,
            "kernel of multiplication by Q",
            Box::new(|| from(kernel_theorem(&all))),
        ),
        (
            5,
            "graded sign character",
            Box::new(|| from(sign_graded(&all))),
        ),
        (
            6,
            "ungraded sign character",
            Box::new(|| from(sign_ungraded(&all))),
        ),
        (
            7,
            "Cohen-Macaulay coset complexes",
            Box::new(|| from(cohen_macaulay(&all))),
        ),
        (
            8,
            "cross-polytope retraction",
            Box::new(|| from(retraction())),
        ),
        (
            9,
            "cross-polytope lexicographic shelling",
            Box::new(|| from(lex_shelling())),
        ),
        (
            10,
            "2[4]3[3]3 complex and Solomon-Tits orders",
            Box::new(stretch_g26),
        ),
        (
            11,
            "property samples",
            Box::new(|| from(property_samples(&all))),
        ),
    ];
    let mut failed = 0;
    for (n, title, run) in criteria {
        let t = Instant::now();
        let verdict = run();
        let secs = t.elapsed().as_secs_f64();
        let (tag, detail) = match verdict {
            Verdict::Pass(d) => ("PASS", d),
            Verdict::Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
            Verdict::Inconclusive(d) => ("INCONCLUSIVE", d),
        };
        println!("{tag} {n:>2} {title} ({secs:.2} s): {detail}");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}

fn from(o: Outcome) -> Verdict {
    match o {
        Ok(d) => Verdict::Pass(d),
        Err(d) => Verdict::Fail(d),
    }
}
