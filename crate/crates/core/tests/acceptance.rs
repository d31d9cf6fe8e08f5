//! Acceptance suite: one PASS/FAIL line per criterion. Run with
//! `cargo test --test acceptance`.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use crystal_fold::cli::{run, Cli};
use crystal_fold::crystal::{
    character, generate_binfinity, generate_blambda, isomorphic, Crystal, CrystalGraph, Rule,
};
use crystal_fold::folding::{check_fixed_equals_generated, fold_binfinity, fold_blambda, induced_automorphism, HeightBound};
use crystal_fold::quivergeom::{apply_fa, epsilon_geom, moment_check, nilpotency_check, reps_isomorphic, stability_check};
use crystal_fold::rootdata::{
    builtin_fold, fold, freudenthal, parse_fold_spec, weyl_dim, Automorphism, CartanDatum, FoldedDatum, KostantCounter,
    Quiver, Weight,
};
use crystal_fold::spin::{build_spin_crystal, chevalley_matrices, rep_from_young, verify_relations, YoungDiagram, YoungModel};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: crystal_fold::Error) -> String {
    e.to_string()
}

fn fund(rank: usize, k: usize) -> Vec<i64> {
    Weight::fundamental(rank, k).base
}

/// Every graph that passes through criteria 2–6, for the axiom criterion.
#[derive(Default)]
struct Graphs(Vec<(String, CrystalGraph)>);

impl Graphs {
    fn keep(&mut self, label: impl Into<String>, g: &CrystalGraph) {
        self.0.push((label.into(), g.clone()));
    }
}

fn criterion_1() -> Check {
    let flip = |n: usize| -> Result<FoldedDatum, String> {
        let q = Quiver::type_a(2 * n - 1);
        fold(&q, &Automorphism::flip_a(&q).map_err(err)?).map_err(err)
    };
    let mut checked = 0;
    for n in 2..=6 {
        let fd = flip(n)?;
        let b = CartanDatum::builtin(&format!("B{n}")).map_err(err)?;
        ensure(fd.cartan().matrix() == b.matrix(), || format!("A{} flip: {:?}", 2 * n - 1, fd.cartan().matrix()))?;
        checked += 1;
    }
    ensure(flip(2)?.cartan().matrix() == [vec![2, -1], vec![-2, 2]], || "A3 flip is not B2".into())?;
    ensure(flip(3)?.cartan().matrix() == [vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]], || "A5 flip is not B3".into())?;
    let d4 = Quiver::type_d(4).map_err(err)?;
    let g2 = fold(&d4, &Automorphism::triality(&d4).map_err(err)?).map_err(err)?;
    ensure(g2.cartan().matrix() == [vec![2, -1], vec![-3, 2]], || format!("D4 triality: {:?}", g2.cartan().matrix()))?;
    ensure(g2.cartan().matrix() == CartanDatum::builtin("G2").map_err(err)?.matrix(), || "G2 builtin differs".into())?;
    Ok(format!("B2..B6 from A3..A11, G2 from D4 ({} folds, exact)", checked + 1))
}

/// Compositions of `0..=max` into `rank` parts.
fn root_lattice(rank: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let used: i64 = v.iter().sum();
                (0..=max - used).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn compare_with_kostant(label: &str, g: &CrystalGraph, cd: &CartanDatum, max: i64) -> Result<usize, String> {
    let counts: BTreeMap<Vec<i64>, usize> = character(g).into_iter().map(|(w, c)| (w.drop, c)).collect();
    let mut kostant = KostantCounter::for_cartan(cd).map_err(err)?;
    let lattice = root_lattice(cd.rank(), max);
    for beta in &lattice {
        let got = counts.get(beta).copied().unwrap_or(0) as u64;
        let want = kostant.count(beta);
        ensure(got == want, || format!("{label} at {beta:?}: {got} elements, Kostant {want}"))?;
    }
    ensure(counts.keys().all(|b| b.iter().sum::<i64>() <= max), || format!("{label}: element above the bound"))?;
    Ok(lattice.len())
}

fn criterion_2(graphs: &mut Graphs) -> Check {
    let mut weights = 0;
    for t in ["A2", "A3"] {
        let cd = CartanDatum::builtin(t).map_err(err)?;
        let g = generate_binfinity(&cd, 6);
        weights += compare_with_kostant(t, &g, &cd, 6)?;
        graphs.keep(format!("B(∞) {t}"), &g);
    }
    for t in ["B2", "B3", "G2"] {
        let fd = builtin_fold(t).map_err(err)?;
        let fc = fold_binfinity(&fd, HeightBound::Folded(6)).map_err(err)?;
        weights += compare_with_kostant(&format!("folded {t}"), fc.graph(), fd.cartan(), 6)?;
        let direct = generate_binfinity(fd.cartan(), 6);
        weights += compare_with_kostant(t, &direct, fd.cartan(), 6)?;
        graphs.keep(format!("folded B(∞) {t}"), fc.graph());
        graphs.keep(format!("B(∞) {t}"), &direct);
    }
    Ok(format!("A2, A3, B2, B3, G2 (direct and folded) at height <= 6: {weights} weights exact"))
}

fn blambda_cases() -> Vec<(&'static str, Vec<i64>, u64)> {
    vec![
        ("A2", fund(2, 0), 3),
        ("A3", fund(3, 1), 6),
        ("B2", fund(2, 1), 4),
        ("B3", fund(3, 2), 8),
        ("G2", fund(2, 1), 7),
        ("D4", fund(4, 1), 28),
    ]
}

fn criterion_3(graphs: &mut Graphs) -> Check {
    let mut sizes = Vec::new();
    for (t, lambda, expected) in blambda_cases() {
        let cd = CartanDatum::builtin(t).map_err(err)?;
        let g = generate_blambda(&cd, &lambda, None).map_err(err)?;
        let table = freudenthal(&cd, &lambda).map_err(err)?;
        let ch: BTreeMap<Weight, u64> = character(&g).into_iter().map(|(w, c)| (w, c as u64)).collect();
        ensure(ch == table, || format!("{t} {lambda:?}: character differs from Freudenthal"))?;
        let dim = weyl_dim(&cd, &lambda).map_err(err)?;
        ensure(dim == expected && g.len() as u64 == dim, || format!("{t}: {} elements, Weyl {dim}, expected {expected}", g.len()))?;
        graphs.keep(format!("B(λ) {t}"), &g);
        sizes.push(format!("{t}={}", g.len()));
    }
    Ok(format!("character = Freudenthal, sizes {}", sizes.join(" ")))
}

fn criterion_4(graphs: &mut Graphs) -> Check {
    let mut lines = Vec::new();
    for (spec, target) in [("A3:B", fund(2, 1)), ("A5:B", fund(3, 2)), ("D4:G", fund(2, 1))] {
        let fd = parse_fold_spec(spec).map_err(err)?;
        let source = generate_blambda(fd.source_cartan(), &fd.unfold_vector(&target).map_err(err)?, None).map_err(err)?;
        let ia = induced_automorphism(&source, fd.automorphism()).map_err(err)?;
        let fc = fold_blambda(&fd, &target).map_err(err)?;
        let r = check_fixed_equals_generated(&source, &ia, &fc, None);
        ensure(r.passed(), || format!("{spec} B(λ): {r:?}"))?;
        graphs.keep(format!("source B(λ) {spec}"), &source);
        graphs.keep(format!("folded B(λ) {spec}"), fc.graph());
        lines.push(format!("{spec} B(λ) {}", r.fixed));
    }
    for spec in ["A3:B", "A5:B", "D4:G"] {
        let fd = parse_fold_spec(spec).map_err(err)?;
        let source = generate_binfinity(fd.source_cartan(), 6);
        let ia = induced_automorphism(&source, fd.automorphism()).map_err(err)?;
        let fc = fold_binfinity(&fd, HeightBound::Source(6)).map_err(err)?;
        let r = check_fixed_equals_generated(&source, &ia, &fc, Some(6));
        ensure(r.passed(), || format!("{spec} B(∞): {r:?}"))?;
        graphs.keep(format!("folded B(∞) {spec} source depth 6"), fc.graph());
        lines.push(format!("{spec} B(∞)/6 {}", r.fixed));
    }
    Ok(format!("fixed = generated: {}", lines.join(", ")))
}

fn criterion_5() -> Check {
    let cases = [
        ("A2:id", fund(2, 0), "A2"),
        ("A3:id", fund(3, 1), "A3"),
        ("A3:B", fund(2, 1), "B2"),
        ("A5:B", fund(3, 2), "B3"),
        ("D4:G", fund(2, 1), "G2"),
        ("D4:id", fund(4, 1), "D4"),
    ];
    for (spec, lambda, t) in &cases {
        let fd = parse_fold_spec(spec).map_err(err)?;
        let fc = fold_blambda(&fd, lambda).map_err(err)?;
        let direct = generate_blambda(&CartanDatum::builtin(t).map_err(err)?, lambda, None).map_err(err)?;
        ensure(fd.cartan().matrix() == direct.cartan().matrix(), || format!("{spec}: datum is not {t}"))?;
        let iso = isomorphic(fc.graph(), &direct).map_err(err)?;
        ensure(iso.is_some(), || format!("{spec}: folded crystal is not isomorphic to {t}"))?;
    }
    Ok(format!("{} folds isomorphic to the direct crystals", cases.len()))
}

fn criterion_6(graphs: &mut Graphs) -> Check {
    for n in 1..=8 {
        let g = build_spin_crystal(n).map_err(err)?;
        ensure(g.len() == 1 << n, || format!("n={n}: {} elements", g.len()))?;
        ensure(g.verify_axioms().is_clean(), || format!("n={n}: axiom violations"))?;
        if n <= 5 {
            let b = CartanDatum::builtin(&format!("B{n}")).map_err(err)?;
            let spin = fund(n, n - 1);
            let direct = generate_blambda(&b, &spin, None).map_err(err)?;
            ensure(isomorphic(&g, &direct).map_err(err)?.is_some(), || format!("n={n}: not ≅ B(ω_spin)"))?;
            let fc = fold_blambda(&builtin_fold(&format!("B{n}")).map_err(err)?, &spin).map_err(err)?;
            ensure(isomorphic(&g, fc.graph()).map_err(err)?.is_some(), || format!("n={n}: not ≅ folded A{}", 2 * n - 1))?;
            graphs.keep(format!("B(ω_spin) B{n}"), &direct);
            graphs.keep(format!("folded spin B{n}"), fc.graph());
        }
        graphs.keep(format!("spin n={n}"), &g);
    }
    Ok("2^n elements for n <= 8, isomorphisms for n <= 5".into())
}

fn criterion_7() -> Check {
    for n in 1..=5 {
        let g = build_spin_crystal(n).map_err(err)?;
        let m = chevalley_matrices(n, g.cartan()).map_err(err)?;
        let r = verify_relations(&m, g.cartan());
        ensure(r.passed(), || format!("n={n}: {:?}", r.failures))?;
    }
    Ok("all relations exact for n <= 5 (up to 32x32)".into())
}

fn criterion_8() -> Check {
    let mut total = 0;
    for n in 1..=4 {
        let q = Quiver::type_a(2 * n - 1);
        let flip = Automorphism::flip_a(&q).map_err(err)?;
        let model = YoungModel::new(n).map_err(err)?;
        for y in YoungDiagram::all_in_box(n) {
            let p = rep_from_young(&y);
            let r = p.rep();
            ensure(moment_check(r).into_iter().all(|b| b), || format!("{y}: moment map"))?;
            ensure(nilpotency_check(r), || format!("{y}: not nilpotent"))?;
            ensure(stability_check(&p), || format!("{y}: not stable"))?;
            for i in 0..2 * n - 1 {
                ensure(epsilon_geom(r, i) as i64 == model.epsilon(&y, i), || format!("{y}: ε_{} differs", i + 1))?;
            }
            let image = apply_fa(r, &flip).map_err(err)?;
            let conj = rep_from_young(&y.conjugate());
            ensure(reps_isomorphic(&image, conj.rep()).map_err(err)?, || format!("{y}: F(a) image ≇ conjugate"))?;
            total += 1;
        }
    }
    Ok(format!("{total} diagrams over n <= 4"))
}

fn criterion_9(graphs: &Graphs) -> Check {
    for (label, g) in &graphs.0 {
        let report = g.verify_axioms();
        ensure(report.is_clean(), || format!("{label}: {:?}", report.violations.first()))?;
    }
    let mut flagged = 0;
    for (label, g) in &graphs.0 {
        let mut bad = g.clone();
        let v = bad.len() / 2;
        bad.vertex_mut(v).phi[0] += 1;
        let report = bad.verify_axioms();
        let hit = report.violations.iter().any(|x| x.element == g.vertex(v).id && x.rules.contains(&Rule::PhiIdentity));
        ensure(hit, || format!("{label}: corrupted φ not flagged"))?;
        flagged += 1;
    }
    Ok(format!("{} graphs clean, {flagged} corrupted copies flagged", graphs.0.len()))
}

fn criterion_10() -> Check {
    let runs = [
        vec!["verify", "--fold", "A5:Bn", "--weight", "spin"],
        vec!["verify", "--fold", "D4:G2", "--weight", "0,1"],
        vec!["verify", "--fold", "A3:Bn", "--depth", "5"],
        vec!["fold-crystal", "--fold", "A5:Bn", "--weight", "spin"],
        vec!["fold-crystal", "--fold", "D4:G2", "--depth", "4", "--emit", "dot"],
        vec!["spin", "--n", "4", "--emit", "matrices"],
    ];
    for args in &runs {
        let texts: Vec<String> = (0..3)
            .map(|_| {
                let cli = <Cli as clap::Parser>::try_parse_from(std::iter::once("crystal-fold").chain(args.iter().copied()))
                    .map_err(|e| e.to_string())?;
                run(&cli).map(|o| o.text).map_err(err)
            })
            .collect::<Result<_, _>>()?;
        ensure(texts.windows(2).all(|w| w[0] == w[1]), || format!("{args:?}: outputs differ"))?;
    }
    Ok(format!("{} pipelines byte-identical over 3 runs", runs.len()))
}

fn main() -> ExitCode {
    let mut graphs = Graphs::default();
    let mut all = true;
    let mut report = |id: usize, limit: Option<u64>, f: &mut dyn FnMut() -> Check| {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let late = limit.is_some_and(|s| took > Duration::from_secs(s));
        let budget = limit.map_or(String::new(), |s| format!(" (limit {s}s)"));
        let (status, detail) = match result {
            Ok(d) if !late => ("PASS", d),
            Ok(d) => ("FAIL", format!("too slow: {d}")),
            Err(e) => ("FAIL", e),
        };
        all &= status == "PASS";
        println!("criterion {id:>2}: {status} [{:.2}s{budget}] {detail}", took.as_secs_f64());
    };
    report(1, Some(1), &mut criterion_1);
    report(2, Some(30), &mut || criterion_2(&mut graphs));
    report(3, Some(30), &mut || criterion_3(&mut graphs));
    report(4, Some(60), &mut || criterion_4(&mut graphs));
    report(5, Some(30), &mut criterion_5);
    report(6, Some(60), &mut || criterion_6(&mut graphs));
    report(7, Some(10), &mut criterion_7);
    report(8, Some(60), &mut criterion_8);
    report(9, None, &mut || criterion_9(&graphs));
    report(10, None, &mut criterion_10);
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
