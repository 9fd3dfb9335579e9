//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fc_dyck_core::dimension::{
    extended_ascent_blocks, is_dominant_minuscule, p_value, p_value_oracle,
    satisfies_ascent_condition,
};
use fc_dyck_core::homogeneity::weight_graph_components;
use fc_dyck_core::klr::Operator;
use fc_dyck_core::{
    build_module, canonical_form_of, check_relations, component_of, count_t, dimension,
    enumerate_fc, enumerate_paths, is_homogeneous_word, phi, psi, sweep, t_row, Content,
    DimensionMethod, DyckPath, HeightGuard, Quiver, Relation, Word,
};
use num_bigint::BigUint;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

fn max_fc_length(rank: usize) -> usize {
    (rank + 1) * (rank + 1) / 4
}

fn reduced_word_count(images: Vec<usize>, memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
    if let Some(c) = memo.get(&images) {
        return c.clone();
    }
    let mut total = BigUint::from(0u32);
    let mut any = false;
    for r in 0..images.len().saturating_sub(1) {
        if images[r] > images[r + 1] {
            any = true;
            let mut next = images.clone();
            next.swap(r, r + 1);
            total += reduced_word_count(next, memo);
        }
    }
    if !any {
        total = BigUint::from(1u32);
    }
    memo.insert(images, total.clone());
    total
}

fn path(s: &str) -> DyckPath {
    s.parse().expect("fixture path")
}

fn word(rank: usize, letters: &[usize]) -> Word {
    Word::new(rank, letters.to_vec()).expect("fixture word")
}

fn words_of(c: &fc_dyck_core::Component) -> Vec<String> {
    c.words()
        .iter()
        .map(|w| w.letters().iter().map(|l| l.to_string()).collect())
        .collect()
}

fn c1_triangle() -> Outcome {
    let expected: [&[u64]; 7] = [
        &[1],
        &[1],
        &[1, 1],
        &[1, 2, 2],
        &[1, 3, 5, 4, 1],
        &[1, 4, 9, 12, 10, 4, 2],
        &[1, 5, 14, 25, 31, 26, 16, 9, 4, 1],
    ];
    for (n, row) in expected.iter().enumerate() {
        let mut got = Vec::new();
        for k in 0..=n * n / 4 + 1 {
            got.push(enumerate_paths(n, k).len() as u64);
        }
        while got.last() == Some(&0) {
            got.pop();
        }
        ensure(got == *row, || format!("row {n}: {got:?} != {row:?}"))?;
    }
    Ok("rows 0-6 match".into())
}

fn c2_catalan() -> Outcome {
    for n in 0..=14 {
        let sum: BigUint = t_row(n).iter().sum();
        ensure(sum == catalan(n), || format!("n={n}: {sum} != C_{n}"))?;
    }
    Ok(format!("n <= 14, C_14 = {}", catalan(14)))
}

fn c3_bijection() -> Outcome {
    let mut total = 0usize;
    for n in 1..=7 {
        for k in 0..=max_fc_length(n) + 1 {
            let forms = enumerate_fc(n, k);
            let expected = count_t(n + 1, k);
            ensure(BigUint::from(forms.len()) == expected, || {
                format!("n={n} k={k}: {} forms vs T={expected}", forms.len())
            })?;
            for c in &forms {
                let d = phi(c);
                ensure(d.semilength() == n + 1 && d.statistic_k() == k, || format!("phi({c}) = {d}"))?;
                ensure(psi(&d).as_ref() == Ok(c), || format!("psi(phi({c})) != {c}"))?;
            }
            for d in enumerate_paths(n + 1, k) {
                let back = psi(&d).map_err(|e| format!("psi({d}): {e}"))?;
                ensure(phi(&back) == d, || format!("phi(psi({d})) != {d}"))?;
            }
            total += forms.len();
        }
    }
    Ok(format!("{total} elements, n <= 7"))
}

fn c4_pentagon() -> Outcome {
    let w = word(4, &[3, 2, 1, 4, 3]);
    let c = canonical_form_of(&w).map_err(|e| e.to_string())?;
    let d = phi(&c);
    ensure(d.to_string() == "UUUUDDUDDD", || format!("path {d}"))?;
    ensure(d.statistic_k() == 5, || format!("k = {}", d.statistic_k()))?;
    let comp = component_of(&w).map_err(|e| e.to_string())?;
    let mut got = words_of(&comp);
    got.sort();
    ensure(got == ["32143", "32413", "32431", "34213", "34231"], || format!("component {got:?}"))?;
    let r = dimension(&d).map_err(|e| e.to_string())?;
    ensure(r.value == BigUint::from(5u32) && r.method == DimensionMethod::Formula, || {
        format!("dimension {} via {:?}", r.value, r.method)
    })?;
    Ok("UUUUDDUDDD, k=5, 5 words, dim 5 (formula)".into())
}

fn c5_two_words() -> Outcome {
    let d = path("UDUUDUUDDD");
    let c = psi(&d).map_err(|e| e.to_string())?;
    ensure(c.to_word().letters() == [2, 4, 3], || format!("word {}", c.to_word()))?;
    let comp = component_of(&c.to_word()).map_err(|e| e.to_string())?;
    ensure(words_of(&comp) == ["243", "423"], || format!("component {:?}", words_of(&comp)))?;
    ensure(d.statistic_k() == 3, || format!("k = {}", d.statistic_k()))?;
    Ok("[2,4,3], {243, 423}, k=3".into())
}

fn c6_hooks() -> Outcome {
    let d = path("UUUUDDUDDUDD");
    let table: Vec<(usize, usize, usize)> = extended_ascent_blocks(&d)
        .iter()
        .map(|b| p_value(&d, b.i, b.m).map(|p| (b.i, b.m, p)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let expected = [(1, 1, 1), (1, 2, 3), (1, 3, 5), (3, 3, 1), (3, 4, 3), (5, 5, 1)];
    ensure(table == expected, || format!("p-table {table:?}"))?;
    let r = dimension(&d).map_err(|e| e.to_string())?;
    ensure(r.value == BigUint::from(16u32) && r.method == DimensionMethod::Formula, || {
        format!("dimension {} via {:?}", r.value, r.method)
    })?;
    let r = dimension(&d.reversed()).map_err(|e| e.to_string())?;
    ensure(r.value == BigUint::from(16u32) && r.method == DimensionMethod::Reverse, || {
        format!("reversed: {} via {:?}", r.value, r.method)
    })?;
    Ok("p-table ok, 16 (formula), reversed 16 (reverse)".into())
}

fn c7_dimensions() -> Outcome {
    let mut memo = HashMap::new();
    let mut methods: BTreeMap<String, usize> = BTreeMap::new();
    let mut hooks = 0usize;
    for n in 1..=6 {
        for k in 0..=max_fc_length(n) {
            for c in enumerate_fc(n, k) {
                let d = phi(&c);
                let r = dimension(&d).map_err(|e| e.to_string())?;
                let expected = reduced_word_count(c.to_word().to_permutation().images().to_vec(), &mut memo);
                ensure(r.value == expected, || format!("{c}: {} != {expected}", r.value))?;
                *methods.entry(format!("{:?}", r.method).to_lowercase()).or_default() += 1;
                if satisfies_ascent_condition(&d) {
                    for b in extended_ascent_blocks(&d) {
                        let geometric = p_value(&d, b.i, b.m).map_err(|e| e.to_string())? as i64;
                        let oracle = p_value_oracle(&c, b.owner + 1, b.m).map_err(|e| e.to_string())?;
                        ensure(geometric == oracle, || {
                            format!("{c} T_{}^{}: {geometric} != {oracle}", b.i, b.m)
                        })?;
                        hooks += 1;
                    }
                }
            }
        }
    }
    let freq: Vec<String> = methods.iter().map(|(m, c)| format!("{m}={c}")).collect();
    Ok(format!("{hooks} hook values; methods {}", freq.join(" ")))
}

fn c8_biconditional() -> Outcome {
    let mut checked = 0;
    for s in 2..=7 {
        for k in 0..=s * s / 4 {
            for d in enumerate_paths(s, k) {
                let w = psi(&d).map_err(|e| e.to_string())?.to_word().inverse();
                let dm = is_dominant_minuscule(&w).map_err(|e| e.to_string())?;
                ensure(satisfies_ascent_condition(&d) == dm, || format!("{d}: ascent != {dm}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} paths"))
}

fn negative_control() -> Result<usize, String> {
    let mut runner = TestRunner::new(Config {
        cases: 128,
        ..Config::default()
    });
    let strategy = (2usize..=4).prop_flat_map(|n| {
        let forms: usize = (2..=6).map(|k| enumerate_fc(n, k).len()).sum();
        (Just(n), 0..forms, any::<usize>(), any::<usize>(), any::<usize>(), 1i64..=3)
    });
    let detected = std::cell::Cell::new(0usize);
    runner
        .run(&strategy, |(n, pick, r, b, a, value)| {
            let forms: Vec<_> = (2..=6).flat_map(|k| enumerate_fc(n, k)).collect();
            let c = component_of(&forms[pick].to_word()).unwrap();
            let q = Quiver::backward(n);
            let module = build_module(&c, &q).unwrap();
            let r = 1 + r % (module.height() - 1);
            let b = b % module.dim();
            let target = module.basis()[b].swap_positions(r).unwrap();
            let rows: Vec<usize> = (0..module.dim()).filter(|&x| module.basis()[x] != target).collect();
            let a = rows[a % rows.len()];
            let mut op: Operator = module.psi(r).clone();
            op[(a, b)] += value;
            let broken = module.with_psi(r, op);
            let words = c.content().words(HeightGuard::default()).unwrap();
            let report = check_relations(&broken, &q, &words);
            prop_assert!(!report.outcome(Relation::PsiIdempotent).passed());
            detected.set(detected.get() + 1);
            Ok(())
        })
        .map_err(|e| format!("negative control: {e}"))?;
    Ok(detected.get())
}

fn c9_klr() -> Outcome {
    let mut components = 0;
    let mut checks = 0;
    for n in 1..=4 {
        for q in [Quiver::forward(n), Quiver::backward(n)] {
            let report = sweep(&q, 6, HeightGuard::default()).map_err(|e| e.to_string())?;
            let failed: Vec<_> = report.relations.iter().filter(|o| !o.passed()).collect();
            ensure(failed.is_empty(), || format!("rank {n} {q}: {failed:?}"))?;
            ensure(report.single_degree, || format!("rank {n} {q}: degree"))?;
            ensure(report.transitive, || format!("rank {n} {q}: not transitive"))?;
            components += report.components;
            checks += report.relations.iter().map(|o| o.checks).sum::<usize>();
        }
    }
    let detected = negative_control()?;
    Ok(format!(
        "{components} modules, {checks} relation checks; corrupted actions rejected {detected}/{detected}"
    ))
}

fn c10_components() -> Outcome {
    for n in 1..=7 {
        let mut seen: HashSet<Word> = HashSet::new();
        let mut count = 0usize;
        for k in 0..=max_fc_length(n) {
            for c in enumerate_fc(n, k) {
                let comp = component_of(&c.to_word()).map_err(|e| e.to_string())?;
                for w in comp.words() {
                    ensure(is_homogeneous_word(w), || format!("{w} not homogeneous"))?;
                    ensure(seen.insert(w.clone()), || format!("{w} in two components"))?;
                }
                count += 1;
            }
        }
        ensure(BigUint::from(count) == catalan(n + 1), || format!("rank {n}: {count} components"))?;
    }
    // independent count from weight graphs, content by content
    for n in 1..=5 {
        let mut count = 0usize;
        for h in 0..=max_fc_length(n) {
            for content in Content::all_of_height(n, h) {
                let comps = weight_graph_components(&content, HeightGuard::default()).map_err(|e| e.to_string())?;
                count += comps.iter().filter(|c| c.homogeneous).count();
            }
        }
        ensure(BigUint::from(count) == catalan(n + 1), || format!("weight graphs rank {n}: {count}"))?;
    }
    Ok("C_{n+1} for n <= 7 (weight graphs for n <= 5)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("T(n,k) rows 0-6 by enumeration", Duration::from_secs(1), c1_triangle),
        ("row sums are Catalan, n <= 14", Duration::from_secs(30), c2_catalan),
        ("bijection and counts, n <= 7", Duration::from_secs(60), c3_bijection),
        ("pentagon component fixture", Duration::MAX, c4_pentagon),
        ("two-word component fixture", Duration::MAX, c5_two_words),
        ("hook table and dimension 16", Duration::MAX, c6_hooks),
        ("dimensions and hook oracle, n <= 6", Duration::from_secs(300), c7_dimensions),
        ("ascent condition iff dominant minuscule", Duration::MAX, c8_biconditional),
        ("KLR relations, n <= 4, both orientations", Duration::from_secs(300), c9_klr),
        ("homogeneous components = C_{n+1}", Duration::MAX, c10_components),
    ];
    let mut failures = 0;
    for (idx, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > *limit => Err(format!("took {elapsed:.2?}, limit {limit:.0?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{elapsed:.2?}]", idx + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {why} [{elapsed:.2?}]", idx + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
