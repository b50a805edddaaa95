//! The acceptance gate: one test per criterion, each ending in a single
//! `criterion N ...: PASS` line (run with `cargo test --test acceptance --
//! --nocapture` to see them). Expected values are frozen from independent
//! hand derivations — subset counting, complete-multipartite counting for
//! the squarefree degree-2 spaces, and brute-force oracles local to this
//! file — never from the library's own output.

use std::time::{Duration, Instant};

use polymat::{
    census_unmixed, classify, distance, enumerate_ideals, exchange_path, is_cohen_macaulay,
    is_matroidal, is_polymatroidal, is_vertex_cover, linear_quotients_revlex,
    minimal_vertex_covers, monomial_pool, product, q_values_all_linear_orderings,
    verify_classification, EnumSpec, Monomial, MonomialIdeal, Verdict,
};

fn pass(number: usize, name: &str, detail: &str) {
    println!("criterion {number} ({name}): PASS — {detail}");
}

fn edge(n: usize, a: usize, b: usize) -> Monomial {
    let mut exps = vec![0u32; n];
    exps[a - 1] += 1;
    exps[b - 1] += 1;
    Monomial::new(exps)
}

/// The 12-generator ideal in 6 variables: all edges of the complete
/// tripartite graph with parts {1,2}, {3,4}, {5,6}, in source order.
fn counterexample() -> MonomialIdeal {
    let pairs = [
        (1, 3),
        (1, 4),
        (1, 5),
        (1, 6),
        (2, 3),
        (2, 4),
        (2, 5),
        (2, 6),
        (3, 5),
        (3, 6),
        (4, 5),
        (4, 6),
    ];
    MonomialIdeal::new(6, pairs.iter().map(|&(a, b)| edge(6, a, b)).collect()).unwrap()
}

fn veronese(n: usize, d: u64) -> MonomialIdeal {
    MonomialIdeal::new(n, monomial_pool(n, d, d as u32)).unwrap()
}

fn squarefree_veronese(n: usize, d: u64) -> MonomialIdeal {
    MonomialIdeal::new(n, monomial_pool(n, d, 1)).unwrap()
}

/// Brute force over all `2^n` variable subsets, minimalized by inclusion.
/// Independent of the library's branching enumerator.
fn brute_force_minimal_covers(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    let n = ideal.num_vars();
    let mut covers: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << n) {
        let vars: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        if is_vertex_cover(ideal, &vars).unwrap() {
            covers.push(vars);
        }
    }
    let all = covers.clone();
    covers.retain(|c| {
        !all.iter()
            .any(|o| o.len() < c.len() && o.iter().all(|v| c.contains(v)))
    });
    covers.sort();
    covers
}

#[test]
fn criterion_1_counterexample_reproduction() {
    let started = Instant::now();
    let ideal = counterexample();
    assert_eq!(ideal.num_gens(), 12);

    let c = classify(&ideal).unwrap();
    assert!(c.matroidal, "the ideal must be matroidal");
    assert!(c.polymatroidal);
    assert!(c.unmixed, "the ideal must be unmixed");
    assert_eq!(c.cohen_macaulay, Some(false), "the ideal must not be CM");
    assert_eq!(is_cohen_macaulay(&ideal), Ok(false));
    assert_eq!(c.verdict, Verdict::NotCohenMacaulay);

    let covers = minimal_vertex_covers(&ideal).unwrap();
    assert_eq!(covers.h, 4);
    assert!(covers.minimal_covers.iter().all(|c| c.len() == 4));
    // The complements of the three parts, confirmed by 2^6 brute force.
    assert_eq!(
        covers.minimal_covers,
        vec![vec![1, 2, 3, 4], vec![1, 2, 5, 6], vec![3, 4, 5, 6]]
    );
    assert_eq!(covers.minimal_covers, brute_force_minimal_covers(&ideal));

    assert_eq!((c.q, c.depth, c.dim), (Some(4), Some(1), 2));

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass(
        1,
        "counterexample reproduction",
        &format!(
            "matroidal, unmixed, not CM; h=4 with covers {:?}; q=4, dim=2, depth=1; {elapsed:?}",
            covers.minimal_covers
        ),
    );
}

#[test]
fn criterion_2_exhaustive_matroidal_verification() {
    let started = Instant::now();
    // Expected tallies, derived by hand:
    // - ideals: 2^C(n,d) - 1 nonempty generator subsets;
    // - principal: C(n,d) singletons;
    // - squarefree Veronese: one full edge set per support of size > d;
    // - polymatroidal (degree 2): complete multipartite edge sets, i.e.
    //   sum over supports S of (set partitions of S into >= 2 blocks),
    //   using Bell numbers 1, 1, 2, 5, 15, 52, 203.
    struct Expect {
        n: usize,
        d: u64,
        ideals: u64,
        principal: u64,
        sq_veronese: u64,
        polymatroidal: Option<u64>,
    }
    let sweeps = [
        Expect {
            n: 4,
            d: 2,
            ideals: 63,
            principal: 6,
            sq_veronese: 5,
            // C(4,2)*1 + C(4,3)*4 + C(4,4)*14
            polymatroidal: Some(36),
        },
        Expect {
            n: 5,
            d: 2,
            ideals: 1023,
            principal: 10,
            sq_veronese: 16,
            // C(5,2)*1 + C(5,3)*4 + C(5,4)*14 + C(5,5)*51
            polymatroidal: Some(171),
        },
        Expect {
            n: 6,
            d: 2,
            ideals: 32767,
            principal: 15,
            sq_veronese: 42,
            // C(6,2)*1 + C(6,3)*4 + C(6,4)*14 + C(6,5)*51 + C(6,6)*202
            polymatroidal: Some(813),
        },
        Expect {
            n: 5,
            d: 3,
            ideals: 1023,
            principal: 10,
            sq_veronese: 6,
            polymatroidal: None,
        },
    ];
    let mut checked = 0u64;
    for e in &sweeps {
        let spec = EnumSpec::new(e.n, e.d, 1);
        let report = verify_classification(&spec, 1)
            .unwrap_or_else(|err| panic!("violation in n={} d={}: {err}", e.n, e.d));
        let c = report.counts;
        assert_eq!(report.ideals_checked, e.ideals, "ideals for n={}", e.n);
        assert_eq!(c.principal, e.principal, "principal for n={} d={}", e.n, e.d);
        assert_eq!(
            c.squarefree_veronese, e.sq_veronese,
            "squarefree Veronese for n={} d={}",
            e.n, e.d
        );
        // A Veronese ideal of degree >= 2 has non-squarefree generators, so
        // none fits in a cap-1 space.
        assert_eq!(c.veronese, 0);
        assert_eq!(c.cohen_macaulay(), e.principal + e.sq_veronese);
        if let Some(poly) = e.polymatroidal {
            assert_eq!(
                c.cohen_macaulay() + c.not_cohen_macaulay,
                poly,
                "polymatroidal count for n={}",
                e.n
            );
            assert_eq!(c.not_polymatroidal, e.ideals - poly);
        }
        assert_eq!(c.total(), e.ideals);
        assert!(report.paths_checked > 0);
        checked += report.ideals_checked;
    }

    // In a squarefree search space, polymatroidal and matroidal coincide.
    for ideal in enumerate_ideals(&EnumSpec::new(4, 2, 1)).unwrap() {
        assert_eq!(
            is_polymatroidal(&ideal).unwrap(),
            is_matroidal(&ideal).unwrap()
        );
    }

    // The counterexample shows up in the n=6 census of unmixed non-CM
    // polymatroidal ideals.
    let (rows, summary) = census_unmixed(&EnumSpec::new(6, 2, 1), 1).unwrap();
    let target = counterexample();
    let row = rows
        .iter()
        .find(|r| r.ideal == target)
        .expect("counterexample row in the census");
    assert!(row.unmixed && row.is_matroidal);
    assert_eq!(row.cm, Some(false));
    assert_eq!(summary.ideals_scanned, 32767);

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    pass(
        2,
        "exhaustive verification, squarefree spaces",
        &format!("{checked} ideals over 4 sweeps, zero violations; {elapsed:?}"),
    );
}

#[test]
fn criterion_3_verification_with_exponents() {
    let started = Instant::now();

    let report = verify_classification(&EnumSpec::new(3, 2, 2), 1).unwrap();
    assert_eq!(report.ideals_checked, 63);
    // 6 singletons; Veronese on both 2-element supports (3) and the full
    // one (1); the squarefree Veronese triangle.
    assert_eq!(report.counts.principal, 6);
    assert_eq!(report.counts.veronese, 4);
    assert_eq!(report.counts.squarefree_veronese, 1);
    assert_eq!(report.counts.cohen_macaulay(), 11);

    let report = verify_classification(&EnumSpec::new(2, 3, 3), 1).unwrap();
    assert_eq!(report.ideals_checked, 15);
    // 4 singletons plus the full Veronese.
    assert_eq!(report.counts.principal, 4);
    assert_eq!(report.counts.veronese, 1);
    assert_eq!(report.counts.squarefree_veronese, 0);
    assert_eq!(report.counts.cohen_macaulay(), 5);

    // The full Veronese ideals of both spaces are among the CM survivors.
    for ideal in [veronese(3, 2), veronese(2, 3)] {
        let c = classify(&ideal).unwrap();
        assert_eq!(c.verdict, Verdict::Veronese);
        assert_eq!(c.cohen_macaulay, Some(true));
    }

    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    pass(
        3,
        "verification with exponents",
        &format!("63 + 15 ideals, zero violations, CM survivors 11 + 5; {elapsed:?}"),
    );
}

#[test]
fn criterion_4_formula_consistency_sweep() {
    let started = Instant::now();
    let specs = [
        EnumSpec::new(4, 2, 1),
        EnumSpec::new(5, 2, 1),
        EnumSpec::new(6, 2, 1),
        EnumSpec::new(5, 3, 1),
        EnumSpec::new(3, 2, 2),
        EnumSpec::new(2, 3, 3),
    ];
    let mut with_linear_quotients = 0u64;
    let mut total = 0u64;
    for spec in &specs {
        for ideal in enumerate_ideals(spec).unwrap() {
            total += 1;
            let n = ideal.num_vars();
            let covers = minimal_vertex_covers(&ideal).unwrap();
            assert_eq!(covers.dim, n - covers.h);
            let report = linear_quotients_revlex(&ideal).unwrap();
            let Some(q) = report.q else { continue };
            with_linear_quotients += 1;
            let depth = report.depth.unwrap();
            assert_eq!(depth, n - q - 1);
            assert!(
                depth <= covers.dim,
                "depth {depth} > dim {} for {ideal}",
                covers.dim
            );
            let cm = covers.h == q + 1;
            assert_eq!(depth == covers.dim, cm, "equality mismatch for {ideal}");
            if is_polymatroidal(&ideal).unwrap() {
                let verdict = classify(&ideal).unwrap().verdict;
                let family = matches!(
                    verdict,
                    Verdict::Principal | Verdict::Veronese | Verdict::SquarefreeVeronese
                );
                assert_eq!(cm, family, "classification mismatch for {ideal}");
            }
        }
    }
    let elapsed = started.elapsed();
    pass(
        4,
        "formula consistency sweep",
        &format!(
            "{total} ideals, {with_linear_quotients} with linear quotients, \
             depth <= dim with equality exactly on the CM set; {elapsed:?}"
        ),
    );
}

#[test]
fn criterion_5_named_example_invariants() {
    let c = classify(&squarefree_veronese(4, 2)).unwrap();
    assert_eq!((c.h, c.q), (3, Some(2)));
    assert_eq!(c.cohen_macaulay, Some(true));
    assert_eq!(c.verdict, Verdict::SquarefreeVeronese);

    let c = classify(&veronese(2, 2)).unwrap();
    assert_eq!((c.h, c.q), (2, Some(1)));
    assert_eq!((c.dim, c.depth), (0, Some(0)));
    assert_eq!(c.cohen_macaulay, Some(true));
    assert_eq!(c.verdict, Verdict::Veronese);

    for (n, exps) in [
        (2, vec![3, 2]),
        (3, vec![1, 1, 1]),
        (5, vec![0, 0, 0, 0, 4]),
    ] {
        let ideal = MonomialIdeal::new(n, vec![Monomial::new(exps)]).unwrap();
        let c = classify(&ideal).unwrap();
        assert_eq!((c.h, c.q), (1, Some(0)));
        assert_eq!(c.cohen_macaulay, Some(true));
        assert_eq!(c.verdict, Verdict::Principal);
    }
    pass(
        5,
        "named example invariants",
        "squarefree Veronese(4,2): h=3 q=2 CM; Veronese(2,2): h=2 q=1 dim=depth=0 CM; \
         principal: h=1 q=0 CM",
    );
}

#[test]
fn criterion_6_constructive_exchange_paths() {
    let started = Instant::now();
    // The verifier builds and validates a path for every polymatroidal ideal
    // and every valid (u, v, i) in each criterion-2 sweep.
    let mut total_paths = 0u64;
    for (n, d) in [(4, 2), (5, 2), (6, 2), (5, 3)] {
        let report = verify_classification(&EnumSpec::new(n, d, 1), 1).unwrap();
        assert!(report.paths_checked > 0, "no paths checked for n={n} d={d}");
        total_paths += report.paths_checked;
    }

    // Independent re-validation with test-local logic on the two smaller
    // sweeps: termination, strictly decreasing distances, the terminal
    // conditions on w*, and membership of x_i * u / x_j0.
    let mut local_paths = 0u64;
    for spec in [EnumSpec::new(4, 2, 1), EnumSpec::new(5, 2, 1)] {
        for ideal in enumerate_ideals(&spec).unwrap() {
            if !is_polymatroidal(&ideal).unwrap() {
                continue;
            }
            let n = ideal.num_vars();
            for u in ideal.gens() {
                for v in ideal.gens() {
                    for i in 1..=n {
                        if u.exponents()[i - 1] >= v.exponents()[i - 1] {
                            continue;
                        }
                        let path = exchange_path(&ideal, u, v, i).unwrap();
                        assert_eq!(path.steps.first(), Some(v));
                        for (t, w) in path.steps.iter().enumerate() {
                            assert!(ideal.is_generator(w));
                            assert_eq!(path.distances[t], distance(u, w));
                            if t > 0 {
                                assert!(path.distances[t] < path.distances[t - 1]);
                            }
                        }
                        let last = path.steps.last().unwrap();
                        assert_eq!(last.exponents()[i - 1], v.exponents()[i - 1]);
                        assert!(last.exponents()[i - 1] > u.exponents()[i - 1]);
                        for j in 0..n {
                            if j != i - 1 {
                                assert!(last.exponents()[j] <= u.exponents()[j]);
                            }
                        }
                        let j0 = path.witness.j.unwrap();
                        assert!(last.exponents()[j0 - 1] < u.exponents()[j0 - 1]);
                        let result = path.witness.result.as_ref().unwrap();
                        let mut expected = u.exponents().to_vec();
                        expected[i - 1] += 1;
                        expected[j0 - 1] -= 1;
                        assert_eq!(result, &Monomial::new(expected));
                        assert!(ideal.is_generator(result));
                        local_paths += 1;
                    }
                }
            }
        }
    }
    assert!(local_paths > 0);
    let elapsed = started.elapsed();
    pass(
        6,
        "constructive exchange paths",
        &format!(
            "{total_paths} paths validated in the sweeps, {local_paths} re-validated locally; \
             {elapsed:?}"
        ),
    );
}

/// Deterministic 64-bit generator (splitmix64) so the 200 draws are
/// reproducible across runs and platforms.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

const AMBIENT: usize = 5;

fn random_subset(rng: &mut SplitMix64, size: usize) -> Vec<usize> {
    let mut vars: Vec<usize> = (1..=AMBIENT).collect();
    for i in (1..vars.len()).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        vars.swap(i, j);
    }
    vars.truncate(size);
    vars.sort_unstable();
    vars
}

fn restricted(pool: Vec<Monomial>, vars: &[usize]) -> Vec<Monomial> {
    pool.into_iter()
        .filter(|m| m.support().iter().all(|v| vars.contains(v)))
        .collect()
}

fn random_principal(rng: &mut SplitMix64, degree: u64) -> MonomialIdeal {
    let mut exps = vec![0u32; AMBIENT];
    for _ in 0..degree {
        exps[rng.below(AMBIENT as u64) as usize] += 1;
    }
    MonomialIdeal::new(AMBIENT, vec![Monomial::new(exps)]).unwrap()
}

fn random_base(rng: &mut SplitMix64) -> MonomialIdeal {
    match rng.below(3) {
        0 => {
            let d = 1 + rng.below(3);
            random_principal(rng, d)
        }
        1 => {
            let d = 1 + rng.below(2);
            let t = 1 + rng.below(AMBIENT as u64) as usize;
            let vars = random_subset(rng, t);
            MonomialIdeal::new(AMBIENT, restricted(monomial_pool(AMBIENT, d, d as u32), &vars))
                .unwrap()
        }
        _ => {
            let d = 1 + rng.below(2);
            let t = (d as usize) + rng.below((AMBIENT - d as usize) as u64 + 1) as usize;
            let vars = random_subset(rng, t);
            MonomialIdeal::new(AMBIENT, restricted(monomial_pool(AMBIENT, d, 1), &vars)).unwrap()
        }
    }
}

fn random_draw(rng: &mut SplitMix64) -> MonomialIdeal {
    if rng.below(4) == 3 {
        // A product of two degree-bounded bases, itself of degree <= 3.
        let d = 1 + rng.below(2);
        let left = random_principal(rng, d);
        let right = random_base(rng);
        if left.common_degree().unwrap() + right.common_degree().unwrap() <= 3 {
            return product(&left, &right).unwrap();
        }
        right
    } else {
        random_base(rng)
    }
}

#[test]
fn criterion_7_product_closure() {
    let started = Instant::now();
    let mut rng = SplitMix64(0x0101_2345_89AB_CDEF);
    for round in 0..200 {
        let left = random_draw(&mut rng);
        let right = random_draw(&mut rng);
        let prod = product(&left, &right).unwrap();
        assert!(
            is_polymatroidal(&prod).unwrap(),
            "round {round}: product is not polymatroidal:\n{prod}"
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    pass(
        7,
        "product closure",
        &format!("200 seeded products, all polymatroidal; {elapsed:?}"),
    );
}

#[test]
fn criterion_8_q_ordering_invariance() {
    let started = Instant::now();
    let specs = [
        EnumSpec::new(4, 2, 1),
        EnumSpec::new(3, 2, 2),
        EnumSpec::new(5, 2, 1),
    ];
    let mut checked = 0usize;
    'outer: for spec in &specs {
        for ideal in enumerate_ideals(spec).unwrap() {
            if !(2..=6).contains(&ideal.num_gens()) {
                continue;
            }
            let report = linear_quotients_revlex(&ideal).unwrap();
            let Some(q) = report.q else { continue };
            let all_q = q_values_all_linear_orderings(&ideal).unwrap();
            assert_eq!(
                all_q.iter().copied().collect::<Vec<_>>(),
                vec![q],
                "q varies across orderings for {ideal}"
            );
            checked += 1;
            if checked == 50 {
                break 'outer;
            }
        }
    }
    assert_eq!(checked, 50, "not enough linear-quotients ideals found");
    let elapsed = started.elapsed();
    pass(
        8,
        "q is ordering-invariant",
        &format!("50 ideals, every linear ordering agrees on q; {elapsed:?}"),
    );
}
