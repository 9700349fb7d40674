use super::*;
use crate::fixtures::{self, poly};
use crate::rat::{rat, ratio};

fn w(letters: &[usize]) -> Word {
    Word::from_letters(letters)
}

fn complete_fixture(p: &Presentation, d: usize) -> GBasis {
    complete(p, d).expect("completion succeeds")
}

#[test]
fn reduce_quantum3_both_paths_agree() {
    // Rules yx -> p xy, zx -> q xz, zy -> r yz; zyx reduces to pqr xyz.
    let p = ratio(2, 1);
    let q = ratio(3, 1);
    let r = ratio(5, 1);
    let pres = fixtures::quantum_poly3_rules(p.clone(), q.clone(), r.clone());
    let gb = complete_fixture(&pres, 12);
    let zyx = poly(&pres.gens, &[(rat(1), "zyx")]);
    let nf = reduce(&zyx, &gb.rules, &pres.gens, &pres.order);
    let expected = poly(&pres.gens, &[(p * q * r, "xyz")]);
    assert_eq!(nf, expected);
    // Any reduction strategy reaches the same normal form.
    for seed in 0..20u64 {
        let mut state = seed;
        let shuffled = reduce_with_chooser(&zyx, &gb.rules, |n| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % n
        });
        assert_eq!(shuffled, expected);
    }
}

#[test]
fn reduce_no_rules_is_identity() {
    let pres = fixtures::free_algebra(2);
    let f = poly(&pres.gens, &[]);
    assert_eq!(reduce(&f, &[], &pres.gens, &pres.order), f);
    let gens = &fixtures::quantum_plane(rat(2)).gens;
    let g = FreePoly::from_terms([(w(&[1, 0, 1]), rat(3)), (w(&[0]), rat(-1))]);
    let _ = gens;
    assert_eq!(reduce(&g, &[], &fixtures::quantum_plane(rat(2)).gens, &fixtures::quantum_plane(rat(2)).order), g);
}

#[test]
fn reduce_jordan_single_step() {
    let pres = fixtures::jordan_plane();
    let gb = complete_fixture(&pres, 8);
    let yx = poly(&pres.gens, &[(rat(1), "yx")]);
    let nf = reduce(&yx, &gb.rules, &pres.gens, &pres.order);
    assert_eq!(nf, poly(&pres.gens, &[(rat(1), "xy"), (rat(1), "xx")]));
}

#[test]
fn reduce_is_idempotent_and_traces_ideal_membership() {
    let pres = fixtures::finite_process();
    let gb = complete_fixture(&pres, 10);
    let f = poly(
        &pres.gens,
        &[(rat(7), "zzyx"), (ratio(-1, 2), "zxzy"), (rat(1), "xyzz")],
    );
    let (nf, trace) = reduce_with_trace(&f, &gb.rules, &pres.gens, &pres.order);
    let again = reduce(&nf, &gb.rules, &pres.gens, &pres.order);
    assert_eq!(nf, again);
    // f - nf equals the collected combination of sandwiched rules.
    let mut recombined = FreePoly::zero();
    for step in &trace {
        let g = gb.rules[step.rule].as_poly();
        recombined = recombined.add(&g.sandwich(&step.left, &step.right).scale(&step.coeff));
    }
    assert_eq!(f.sub(&nf), recombined);
}

#[test]
fn ambiguities_quantum3() {
    let pres = fixtures::quantum_poly3(rat(2), rat(3), rat(5));
    let gb = complete_fixture(&pres, 12);
    let ambs = find_ambiguities(&gb.rules, &pres.gens, &pres.order);
    assert_eq!(ambs.len(), 1);
    assert_eq!(ambs[0].kind, AmbiguityKind::Overlap);
    // Witness is zyx.
    let z = pres.gens.index_of("z").unwrap();
    let y = pres.gens.index_of("y").unwrap();
    let x = pres.gens.index_of("x").unwrap();
    assert_eq!(ambs[0].witness, w(&[z, y, x]));
    assert!(resolve_ambiguity(&ambs[0], &gb.rules, &pres.gens, &pres.order).is_none());
}

#[test]
fn ambiguities_cubic_single_overlap() {
    let pres = fixtures::cubic_two_gen();
    let rules: Vec<RewriteRule> = pres
        .relations
        .iter()
        .map(|r| RewriteRule::from_poly(r, &pres.gens, &pres.order).unwrap())
        .collect();
    let ambs = find_ambiguities(&rules, &pres.gens, &pres.order);
    assert_eq!(ambs.len(), 1);
    // y^2x^2
    assert_eq!(ambs[0].witness, w(&[1, 1, 0, 0]));
    assert!(resolve_ambiguity(&ambs[0], &rules, &pres.gens, &pres.order).is_none());
}

#[test]
fn jordan_single_rule_no_ambiguities() {
    let pres = fixtures::jordan_plane();
    let gb = complete_fixture(&pres, 8);
    assert_eq!(gb.rules.len(), 1);
    assert!(find_ambiguities(&gb.rules, &pres.gens, &pres.order).is_empty());
}

#[test]
fn finite_process_new_rules() {
    let pres = fixtures::finite_process();
    let rules: Vec<RewriteRule> = pres
        .relations
        .iter()
        .map(|r| RewriteRule::from_poly(r, &pres.gens, &pres.order).unwrap())
        .collect();
    let ambs = find_ambiguities(&rules, &pres.gens, &pres.order);
    // z^2x and z^2y overlap ambiguities fail and produce the two new rules.
    let mut produced = Vec::new();
    for a in &ambs {
        if let Some(g) = resolve_ambiguity(&a, &rules, &pres.gens, &pres.order) {
            produced.push(g);
        }
    }
    let yxx_rule = poly(&pres.gens, &[(rat(1), "yxx"), (rat(-1), "xxy")]);
    let yyx_rule = poly(&pres.gens, &[(rat(1), "yyx"), (rat(-1), "xyy")]);
    assert!(produced.contains(&yxx_rule));
    assert!(produced.contains(&yyx_rule));
}

#[test]
fn complete_finite_process_five_rules() {
    let pres = fixtures::finite_process();
    let gb = complete_fixture(&pres, 12);
    assert!(gb.complete);
    assert_eq!(gb.rules.len(), 5);
    let leads: Vec<Word> = gb.rules.iter().map(|r| r.lead.clone()).collect();
    assert!(leads.contains(&w(&[1, 0, 0]))); // yx^2
    assert!(leads.contains(&w(&[1, 1, 0]))); // y^2x
}

#[test]
fn complete_quantum3_is_input() {
    let pres = fixtures::quantum_poly3(rat(2), rat(3), rat(5));
    let gb = complete_fixture(&pres, 12);
    assert!(gb.complete);
    assert_eq!(gb.rules.len(), 3);
}

#[test]
fn completion_independent_of_relation_order() {
    let pres = fixtures::finite_process();
    let mut rels = pres.relations.clone();
    rels.reverse();
    let permuted =
        Presentation::new(pres.gens.clone(), pres.order.clone(), rels, "permuted").unwrap();
    let gb1 = complete_fixture(&pres, 10);
    let gb2 = complete_fixture(&permuted, 10);
    assert_eq!(gb1.rules.len(), gb2.rules.len());
    for (a, b) in gb1.rules.iter().zip(gb2.rules.iter()) {
        assert_eq!(a.lead, b.lead);
        assert_eq!(a.tail, b.tail);
    }
}

#[test]
fn jordan_reversed_order_grows_forever() {
    let pres = fixtures::jordan_plane_yx();
    let mut counts = Vec::new();
    for d in [6usize, 8, 10, 12] {
        let gb = complete_fixture(&pres, d);
        assert!(!gb.complete, "degree {d} cannot certify completeness");
        counts.push(gb.rules.len());
    }
    assert!(counts.windows(2).all(|c| c[0] < c[1]), "{counts:?}");
}

#[test]
fn reduced_words_quantum_plane_degree2() {
    let pres = fixtures::quantum_plane(rat(2));
    let gb = complete_fixture(&pres, 8);
    let words = gb.reduced_words(2).unwrap();
    assert_eq!(words, vec![w(&[0, 0]), w(&[0, 1]), w(&[1, 1])]);
    assert_eq!(gb.reduced_words(0).unwrap(), vec![Word::empty()]);
}

#[test]
fn reduced_words_cubic_degree3_brute_force() {
    let pres = fixtures::cubic_two_gen();
    let gb = complete_fixture(&pres, 12);
    let words = gb.reduced_words(3).unwrap();
    // Independent path: list all 8 degree-3 words, discard those containing
    // a lead as a factor.
    let brute: Vec<Word> = crate::freealg::words_of_degree(&pres.gens, &pres.order, 3)
        .into_iter()
        .filter(|v| {
            gb.rules.iter().all(|r| v.find_factor(&r.lead).is_none())
        })
        .collect();
    assert_eq!(words, brute);
    assert_eq!(words.len(), 6);
}

#[test]
fn dimension_sequences() {
    let jordan = fixtures::jordan_plane();
    let gb = complete_fixture(&jordan, 8);
    assert_eq!(gb.dimension_sequence(5), vec![1, 2, 3, 4, 5, 6]);

    let free = fixtures::free_algebra(2);
    let gb = complete_fixture(&free, 6);
    assert!(gb.complete);
    assert_eq!(gb.dimension_sequence(3), vec![1, 2, 4, 8]);

    let fp = fixtures::finite_process();
    let gb = complete_fixture(&fp, 10);
    assert_eq!(gb.dimension_sequence(4), vec![1, 3, 6, 10, 15]);
}

#[test]
fn listing_matches_transfer_matrix() {
    for pres in [
        fixtures::quantum_plane(ratio(-1, 3)),
        fixtures::jordan_plane(),
        fixtures::cubic_two_gen(),
        fixtures::finite_process(),
    ] {
        let gb = complete_fixture(&pres, 9);
        let dims = gb.dimension_sequence(9);
        for d in 0..=9 {
            assert_eq!(
                gb.reduced_words(d).unwrap().len() as u128,
                dims[d],
                "{} degree {d}",
                pres.name
            );
        }
    }
}

#[test]
fn normal_elements_quantum_and_jordan() {
    use crate::quotient::QuotientAlgebra;

    let qp = fixtures::quantum_plane(rat(2));
    let alg = QuotientAlgebra::new(qp.clone(), 8).unwrap();
    let x = FreePoly::generator(0);
    let y = FreePoly::generator(1);
    assert!(is_normal_element(&x, &alg, 4).unwrap());
    assert!(is_normal_element(&y, &alg, 4).unwrap());
    // x + y is not normal in the quantum plane at q = 2.
    assert!(!is_normal_element(&x.add(&y), &alg, 4).unwrap());
    let found = find_normal_elements(&alg, 1, 4).unwrap();
    assert_eq!(found.len(), 2);

    let jp = fixtures::jordan_plane();
    let alg = QuotientAlgebra::new(jp.clone(), 8).unwrap();
    assert!(is_normal_element(&x, &alg, 4).unwrap());
    assert!(!is_normal_element(&y, &alg, 4).unwrap());
    let found = find_normal_elements(&alg, 1, 4).unwrap();
    assert_eq!(found, vec![x.clone()]);

    // Direct degree-2 witness that y fails: yx = xy + x^2 is outside
    // span{xy, y^2} = A_1 * y.
    let yx = alg.nf(&poly(&jp.gens, &[(rat(1), "yx")]));
    let span: Vec<FreePoly> = vec![
        alg.nf(&poly(&jp.gens, &[(rat(1), "xy")])),
        alg.nf(&poly(&jp.gens, &[(rat(1), "yy")])),
    ];
    let mut mat = crate::linalg::QMatrix::zero(0, alg.dim(2));
    for s in &span {
        mat.push_row(alg.coords(s, 2));
    }
    let r0 = mat.rank();
    mat.push_row(alg.coords(&yx, 2));
    assert_eq!(mat.rank(), r0 + 1);
}

#[test]
fn normal_element_cubic_commutator() {
    use crate::quotient::QuotientAlgebra;
    let pres = fixtures::cubic_two_gen();
    let alg = QuotientAlgebra::new(pres.clone(), 10).unwrap();
    let g = poly(&pres.gens, &[(rat(1), "xy"), (rat(-1), "yx")]);
    assert!(is_normal_element(&g, &alg, 6).unwrap());
}

#[test]
fn confluence_certificate_random_strategies() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
    for pres in [
        fixtures::quantum_poly3(rat(2), rat(3), rat(5)),
        fixtures::finite_process(),
        fixtures::cubic_two_gen(),
    ] {
        let gb = complete_fixture(&pres, 8);
        assert!(gb.complete);
        for _ in 0..40 {
            let degree = rng.gen_range(1..=6);
            let words = crate::freealg::words_of_degree(&pres.gens, &pres.order, degree);
            let f = FreePoly::from_terms(words.iter().map(|w| {
                (w.clone(), rat(rng.gen_range(-3i64..=3)))
            }));
            let a = reduce_with_chooser(&f, &gb.rules, |n| rng.gen_range(0..n));
            let b = reduce_with_chooser(&f, &gb.rules, |n| rng.gen_range(0..n));
            assert_eq!(a, b);
            assert_eq!(a, reduce(&f, &gb.rules, &pres.gens, &pres.order));
        }
    }
}
