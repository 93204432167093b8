//! Acceptance suite: prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All comparisons are exact.

mod common;

use std::time::Instant;

use contour::algebra::{dimension, generators, AlgebraContext, Generator};
use contour::arith::{random_point, CycPolynomial, CyclotomicNumber, Matrix, Ring};
use contour::diagram::DepthBound;
use contour::modules::{
    gram_matrix, half_diagram_count, oracle_regular_realization, restriction_filtration, weights,
    LayerRole, StandardModule, Weight, GRAM_SYMBOLIC_GUARD,
};
use contour::tower::{check_axiom, hom_space, hom_space_direct, semisimplicity_certificate, simple_labels, Axiom};

/// Exact arithmetic throughout: every comparison has zero tolerance.
const TOLERANCE: &str = "exact";

/// Seeds for the random specializations of criterion 8.
const SS_SEEDS: std::ops::Range<u64> = 1..11;

const INF: DepthBound = DepthBound::Infinite;
const DEPTHS: [DepthBound; 4] = [DepthBound::Finite(0), DepthBound::Finite(1), DepthBound::Finite(2), INF];

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: contour::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ints(m: u32, v: &[i64]) -> Vec<CyclotomicNumber> {
    v.iter().map(|&x| CyclotomicNumber::from_integer(m, x)).collect()
}

fn criterion_1() -> Outcome {
    let g = lib(gram_matrix(2, 2, INF, &Weight::empty()))?;
    let (d0, d1) = (common::var(2, 0), common::var(2, 1));
    let expected = Matrix::from_rows(vec![vec![d0.clone(), d1.clone()], vec![d1.clone(), d0.clone()]], &CycPolynomial::zero(2));
    ensure(g.entries == expected, || format!("gram is {:?}", g.entries.to_rows()))?;
    let det = lib(g.determinant())?;
    let want = d0.mul(&d0).sub(&d1.mul(&d1));
    ensure(det == want, || format!("determinant {}", det))?;
    ensure(common::leibniz(&g.entries, &CycPolynomial::zero(2)) == want, || "Leibniz disagrees".into())?;
    ensure(det.to_string() == "d0^2 - d1^2", || format!("text form {}", det))?;
    Ok(format!("det = {}", det))
}

fn criterion_2() -> Outcome {
    let z = CycPolynomial::zero(2);
    let (d0, d1) = (common::var(2, 0), common::var(2, 1));
    let one = CycPolynomial::one(2);
    let template = |s: &CycPolynomial| {
        Matrix::from_rows(
            vec![
                vec![d0.clone(), d1.clone(), one.clone(), s.clone()],
                vec![d1.clone(), d0.clone(), s.clone(), one.clone()],
                vec![one.clone(), s.clone(), d0.clone(), d1.clone()],
                vec![s.clone(), one.clone(), d1.clone(), d0.clone()],
            ],
            &z,
        )
    };
    let perms = permutations(4);
    let mut found = Vec::new();
    for (label, sign) in [(1u32, one.neg()), (2, one.clone())] {
        let g = lib(gram_matrix(3, 2, INF, &Weight::new(1, vec![label])))?;
        let want = template(&sign);
        let p = perms
            .iter()
            .find(|p| (0..4).all(|r| (0..4).all(|c| g.entries[(p[r], p[c])] == want[(r, c)])))
            .ok_or_else(|| format!("label {}: {:?} matches no permutation of the pattern", label, g.entries.to_rows()))?;
        found.push(format!("({}) sign {} perm {:?}", label, sign, p));
    }
    Ok(found.join("; "))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn criterion_3() -> Outcome {
    let src = Weight::new(2, vec![1, 1]);
    let at_one = ints(2, &[1, 1]);
    let h = lib(hom_space(2, 2, INF, &src, &Weight::empty(), &at_one, 0))?;
    ensure(h.dimension() == 1, || format!("dimension {} at (1,1)", h.dimension()))?;
    let x = &h.basis[0];
    let v = vec![x[(0, 0)].clone(), x[(1, 0)].clone()];
    ensure(!v[0].is_zero() && v[1] == v[0].neg(), || "image is not spanned by a - b".into())?;
    let module = lib(lib(StandardModule::new(2, 2, INF, Weight::empty()))?.presentation_at(&at_one))?;
    for g in generators(2, 2, INF) {
        let image = module.matrix(g).expect("generator present").mul_vec(&v);
        let want: Vec<CyclotomicNumber> = match g {
            Generator::E(_) => vec![v[0].zero_like(); 2],
            Generator::Tbar(_) => v.iter().map(|c| c.neg()).collect(),
        };
        ensure(image == want, || format!("{} acts wrongly on a - b", g))?;
    }
    let h2 = lib(hom_space(2, 2, INF, &src, &Weight::empty(), &ints(2, &[2, 1]), 0))?;
    ensure(h2.dimension() == 0, || format!("dimension {} at (2,1)", h2.dimension()))?;
    let h4 = lib(hom_space_direct(4, 2, INF, &src, &Weight::empty(), &at_one))?;
    ensure(h4.dimension() >= 1, || "no map on four strands".into())?;
    Ok(format!("dims 1, 0, {} (n=4)", h4.dimension()))
}

fn criterion_4() -> Outcome {
    for n in 0..=8u128 {
        let lib_dim = dimension(n as usize, 1, DepthBound::Finite(0));
        let oracle = common::dimension(n as usize, 1, DepthBound::Finite(0));
        ensure(lib_dim == oracle && oracle == common::catalan(n), || {
            format!("TL n={}: library {} oracle {}", n, lib_dim, oracle)
        })?;
    }
    for n in 0..=6u128 {
        let lib_dim = dimension(n as usize, 2, DepthBound::Finite(1));
        let oracle = common::dimension(n as usize, 2, DepthBound::Finite(1));
        ensure(lib_dim == oracle && oracle == common::binomial(2 * n, n), || {
            format!("blob n={}: library {} oracle {}", n, lib_dim, oracle)
        })?;
    }
    let mut cases = 0;
    for n in 0..=6 {
        for m in 1..=3 {
            for d in DEPTHS {
                let sum: u128 = weights(n, m, d)
                    .all()
                    .iter()
                    .map(|w| half_diagram_count(n, w.prop(), m, d).pow(2))
                    .sum();
                let oracle = common::dimension(n, m, d);
                ensure(sum == oracle && dimension(n, m, d) == oracle, || {
                    format!("Wedderburn (n,m,d)=({},{},{}): {} vs {}", n, m, d, sum, oracle)
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!("Catalan n<=8, central binomial n<=6, {} Wedderburn cases", cases))
}

fn criterion_5() -> Outcome {
    let mut reports = 0;
    let mut checks = 0;
    for n in 0..=5 {
        for m in 1..=3 {
            for d in [DepthBound::Finite(0), DepthBound::Finite(1), INF] {
                for a in Axiom::ALL {
                    let r = lib(check_axiom(a, n, m, d, 0))?;
                    ensure(r.verdict && r.witness.is_empty(), || {
                        format!("{} at (n,m,d)=({},{},{}): {:?}", a, n, m, d, r.witness)
                    })?;
                    reports += 1;
                    checks += r.checks;
                }
            }
        }
    }
    Ok(format!("{} reports, {} elementary checks", reports, checks))
}

fn criterion_6() -> Outcome {
    let mut cases = 0;
    for n in 0..=8usize {
        for m in 1..=4u32 {
            for d in DEPTHS {
                let formula: usize = (0..=n)
                    .rev()
                    .step_by(2)
                    .map(|i| (m as usize).pow(d.min_with(i) as u32))
                    .sum();
                let lattice = weights(n, m, d);
                let recursive = simple_labels(n, m, d);
                ensure(lattice.len() == formula && recursive.len() == formula, || {
                    format!("(n,m,d)=({},{},{}): formula {} lattice {} recursive {}", n, m, d, formula, lattice.len(), recursive.len())
                })?;
                let full = common::count_by_prop(n, n, m, d);
                for l in (0..=n).rev().step_by(2) {
                    let labels = (m as u128).pow(d.min_with(l) as u32);
                    let half = common::count_by_prop(n, l, m, d)[&l] / labels;
                    ensure(half == half_diagram_count(n, l, m, d), || {
                        format!("half diagrams (n,l)=({},{}) m={} d={}", n, l, m, d)
                    })?;
                    let section = full[&l];
                    ensure(section % (half * half) == 0 && section / (half * half) == labels, || {
                        format!("section l={} of (n,m,d)=({},{},{})", l, n, m, d)
                    })?;
                    ensure(lattice.stratum(l).len() as u128 == labels, || format!("stratum {} of n={}", l, n))?;
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{} parameter triples", cases))
}

fn delta0_degree(p: &CycPolynomial) -> Option<u32> {
    (!p.is_zero()).then(|| p.degree_in(0))
}

fn criterion_7() -> Outcome {
    let (mut symbolic, mut certified, mut leibniz) = (0, 0, 0);
    for n in 0..=5 {
        for m in 1..=3 {
            for d in DEPTHS {
                for w in weights(n, m, d).all() {
                    let g = lib(gram_matrix(n, m, d, &w))?;
                    let dim = g.dim();
                    for r in 0..dim {
                        let diag = delta0_degree(&g.entries[(r, r)]);
                        let dominant = (0..dim)
                            .filter(|&c| c != r)
                            .filter_map(|c| delta0_degree(&g.entries[(r, c)]))
                            .all(|k| Some(k) < diag);
                        ensure(dominant, || format!("row {} of G_{}({}) m={} d={}", r, n, w, m, d))?;
                    }
                    ensure(g.dominance_failures().is_empty(), || "library dominance check disagrees".into())?;
                    if dim <= GRAM_SYMBOLIC_GUARD {
                        let det = lib(g.determinant())?;
                        ensure(!det.is_zero(), || format!("G_{}({}) m={} d={} has zero determinant", n, w, m, d))?;
                        if dim <= 6 {
                            ensure(common::leibniz(&g.entries, &CycPolynomial::zero(m)) == det, || {
                                format!("Leibniz disagrees on G_{}({})", n, w)
                            })?;
                            leibniz += 1;
                        }
                        symbolic += 1;
                    } else {
                        let point = random_point(m, m as usize, 7 + n as u64);
                        let det = lib(g.determinant_at(&point))?;
                        ensure(!det.is_zero(), || format!("G_{}({}) vanishes at the test point", n, w))?;
                        certified += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} symbolic ({} Leibniz-checked), {} certified nonzero at a point",
        symbolic, leibniz, certified
    ))
}

fn criterion_8() -> Outcome {
    for a in -4..=4i64 {
        for b in -4..=4i64 {
            let c = lib(semisimplicity_certificate(2, 2, INF, &ints(2, &[a, b])))?;
            ensure(c.semisimple == (b != a && b != -a), || format!("blob verdict at ({}, {})", a, b))?;
        }
        let c = lib(semisimplicity_certificate(2, 1, DepthBound::Finite(0), &ints(1, &[a])))?;
        ensure(c.semisimple == (a != 0), || format!("TL verdict at {}", a))?;
    }
    let mut compared = 0;
    for n in 1..=3 {
        for m in 1..=2 {
            for d in [DepthBound::Finite(0), DepthBound::Finite(1), INF] {
                let ctx = lib(AlgebraContext::new(n, m, d))?;
                for seed in SS_SEEDS {
                    let point = random_point(m, m as usize, seed);
                    let cert = lib(semisimplicity_certificate(n, m, d, &point))?;
                    let oracle = common::trace_form_nondegenerate(&ctx, &point);
                    ensure(cert.semisimple == oracle, || {
                        format!("(n,m,d)=({},{},{}) seed {}: certificate {} oracle {}", n, m, d, seed, cert.semisimple, oracle)
                    })?;
                    compared += 1;
                }
            }
        }
    }
    Ok(format!("loci exact on a 9x9 grid, {} oracle comparisons", compared))
}

fn blob_signed(w: &Weight) -> i64 {
    match w.labels().first() {
        None => 0,
        Some(2) => w.prop() as i64,
        Some(_) => -(w.prop() as i64),
    }
}

fn layer_set(r: &contour::modules::FiltrationReport, role: LayerRole) -> Vec<Weight> {
    r.layers.iter().filter(|l| l.role == role).map(|l| l.weight.clone()).collect()
}

fn criterion_9() -> Outcome {
    let mut cases = 0;
    for n in 1..=5 {
        for m in 1..=3 {
            for d in DEPTHS {
                for w in weights(n, m, d).all() {
                    let r = lib(restriction_filtration(&lib(StandardModule::new(n, m, d, w.clone()))?))?;
                    ensure(r.passed(), || format!("{} at (n,m,d)=({},{},{}): {:?}", w, n, m, d, r.mismatches))?;
                    let lower = weights(n - 1, m, d);
                    let total: u128 = r
                        .layers
                        .iter()
                        .map(|l| l.multiplicity as u128 * half_diagram_count(n - 1, l.weight.prop(), m, d))
                        .sum();
                    ensure(total == half_diagram_count(n, w.prop(), m, d), || format!("dimension identity for {}", w))?;
                    for l in &r.layers {
                        let ok = lower.contains(&l.weight) && (l.weight.prop() + 1 == w.prop() || l.weight.prop() == w.prop() + 1);
                        ensure(ok, || format!("layer {} of res {} outside the support", l.weight, w))?;
                    }
                    cases += 1;
                }
            }
        }
    }
    let tl = DepthBound::Finite(0);
    for n in 1..=5 {
        for w in weights(n, 1, tl).all() {
            let i = w.prop();
            let r = lib(restriction_filtration(&lib(StandardModule::new(n, 1, tl, w.clone()))?))?;
            let sub: Vec<usize> = layer_set(&r, LayerRole::Submodule).iter().map(Weight::prop).collect();
            let quo: Vec<usize> = layer_set(&r, LayerRole::Quotient).iter().map(Weight::prop).collect();
            let (want_sub, want_quo) = match i {
                _ if i == n => (vec![n - 1], vec![]),
                0 => (vec![], vec![1]),
                _ => (vec![i - 1], vec![i + 1]),
            };
            ensure(sub == want_sub && quo == want_quo, || format!("TL res of {} on {} strands", i, n))?;
        }
    }
    let blob = DepthBound::Finite(1);
    for n in 1..=5 {
        for w in weights(n, 2, blob).all() {
            let i = blob_signed(&w);
            let r = lib(restriction_filtration(&lib(StandardModule::new(n, 2, blob, w.clone()))?))?;
            let sub: Vec<i64> = layer_set(&r, LayerRole::Submodule).iter().map(blob_signed).collect();
            let mut quo: Vec<i64> = layer_set(&r, LayerRole::Quotient).iter().map(blob_signed).collect();
            quo.sort();
            let s = i.signum();
            let (want_sub, want_quo) = if i.unsigned_abs() as usize == n {
                (vec![i - s], vec![])
            } else if i == 0 {
                (vec![], vec![-1, 1])
            } else {
                (vec![i - s], vec![i + s])
            };
            ensure(sub == want_sub && quo == want_quo, || {
                format!("blob res of {} on {} strands: {:?} / {:?}", i, n, sub, quo)
            })?;
        }
    }
    Ok(format!("{} filtrations, TL and blob sequences n<=5", cases))
}

fn criterion_10() -> Outcome {
    let mut cases = 0;
    for n in 0..=4 {
        for m in 1..=2 {
            for d in [DepthBound::Finite(0), DepthBound::Finite(1), INF] {
                let point = random_point(m, m as usize, 100 + n as u64);
                for w in weights(n, m, d).all() {
                    let module = lib(StandardModule::new(n, m, d, w.clone()))?;
                    let standard = lib(module.presentation_at(&point))?;
                    ensure(standard.relation_defects().is_empty(), || format!("relations fail on {}", w))?;
                    let real = lib(oracle_regular_realization(n, m, d, &w, &point))?;
                    ensure(real.conjugates(&standard), || {
                        format!("{} at (n,m,d)=({},{},{}) is not conjugate to the realization", w, n, m, d)
                    })?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{} modules conjugated by explicit base changes", cases))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("two-strand Gram matrix and determinant", criterion_1),
        ("three-strand Gram matrices with sign pattern", criterion_2),
        ("homomorphism at equal parameters", criterion_3),
        ("dimension identities", criterion_4),
        ("axiom suite", criterion_5),
        ("label counts", criterion_6),
        ("Gram dominance and nonvanishing", criterion_7),
        ("semisimplicity loci", criterion_8),
        ("restriction filtrations", criterion_9),
        ("action oracle equivalence", criterion_10),
    ];
    let mut failed = 0;
    for (k, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {} [{}; {:.1}s] {}", k + 1, title, TOLERANCE, secs, detail),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {} [{}; {:.1}s] {}", k + 1, title, TOLERANCE, secs, why);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
