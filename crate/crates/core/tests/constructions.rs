mod common;

use altchain_core::chain::filled_between;
use altchain_core::method2::{self, verify_chain_identities};
use altchain_core::method3::{self, Method3Index};
use altchain_core::nathanson::valid_params;
use altchain_core::report::reference_chain;
use altchain_core::*;
use common::{naive_class, naive_diffs, naive_sums};
use num_rational::Ratio;

fn lit(s: &str) -> IntSet {
    parse_set_literal(s).unwrap()
}

fn conway() -> IntSet {
    lit("0,2,3,4,7,11,12,14")
}

fn columns(chain: &Chain) -> [Vec<usize>; 4] {
    let ps = chain.profiles();
    [
        ps.iter().map(|p| p.sum_card).collect(),
        ps.iter().map(|p| p.diff_card).collect(),
        ps.iter().map(|p| p.card).collect(),
        ps.iter().map(|p| p.diameter as usize).collect(),
    ]
}

/// Classes by brute force, never through the library kernel.
fn oracle_classes(chain: &Chain) -> Vec<i32> {
    chain
        .sets()
        .iter()
        .map(|s| naive_class(s.as_slice()))
        .collect()
}

#[test]
fn classify_small_mdts_by_enumeration() {
    let a = [0, 1, 3];
    assert_eq!(naive_sums(&a).len(), 6);
    assert_eq!(naive_diffs(&a).len(), 7);
    assert_eq!(classify(&lit("0,1,3")), SetClass::Mdts);
}

#[test]
fn nathanson_conway_by_hand() {
    // B = {0,2,3}, L = {3,7,11}, a* = 14, a* - B = {11,12,14}, plus m = 4
    let by_hand: IntSet = lit("0,2,3")
        .union(&lit("3,7,11"))
        .union(&lit("11,12,14"))
        .with(&[4])
        .unwrap();
    assert_eq!(build_base(4, 1, 3).unwrap().a, by_hand);
    assert_eq!(by_hand, conway());
}

#[test]
fn nathanson_sweep_and_symmetry() {
    let mut count = 0;
    for (m, d, k) in valid_params(16, 6) {
        let p = build_base(m, d, k).unwrap();
        assert_eq!(naive_class(p.a.as_slice()), 1, "(m,d,k)=({m},{d},{k})");
        assert_eq!(p.star.reflect(p.a_star).unwrap(), p.star);
        let (s, d_) = (
            naive_sums(p.star.as_slice()).len(),
            naive_diffs(p.star.as_slice()).len(),
        );
        assert_eq!(s, d_);
        count += 1;
    }
    assert!(count > 300);
}

#[test]
fn interval_lemma_by_enumeration() {
    for m in 5..=20i64 {
        for r in 2..=m - 3 {
            let b: Vec<i64> = (0..m).filter(|&v| v != r).collect();
            let sums: Vec<i64> = naive_sums(&b).into_iter().collect();
            let expected = sums == (0..=2 * m - 2).collect::<Vec<_>>()
                && naive_diffs(&b).into_iter().collect::<Vec<_>>()
                    == (1 - m..=m - 1).collect::<Vec<_>>();
            assert!(expected);
            assert_eq!(check_interval_lemma(m, r), Ok(expected));
        }
    }
}

#[test]
fn modulus_19_fails_by_brute_force() {
    let a = conway();
    let sums = naive_sums(a.as_slice());
    let diffs = naive_diffs(a.as_slice());
    let res = |set: &std::collections::BTreeSet<i64>| {
        set.iter()
            .map(|v| v.rem_euclid(19))
            .collect::<std::collections::BTreeSet<_>>()
            .len()
    };
    let x = a.iter().filter(|v| !sums.contains(&(19 + v))).count() as i64;
    let y = a.iter().filter(|v| !diffs.contains(&(19 - v))).count() as i64;
    let cond1 = res(&sums) == res(&diffs);
    let cond2 = 2 * y - x - 1 > sums.len() as i64 - diffs.len() as i64;
    assert!(!(cond1 && cond2));
    let p = analyze_modulus(&a, 19).unwrap();
    assert_eq!((p.cond1, p.cond2), (cond1, cond2));
}

#[test]
fn nine_element_base_moduli() {
    // frozen from a brute-force sweep of (14, 28]
    let a = lit("0,1,2,4,5,9,12,13,14");
    assert_eq!(search_moduli(&a).unwrap(), vec![17, 18, 19, 20]);
}

#[test]
fn table_one_columns() {
    let chain = generate_chain_m1(&conway(), 17, 7).unwrap();
    assert_eq!(
        columns(&chain),
        [
            vec![26, 30, 60, 64, 94, 98, 128],
            vec![25, 33, 59, 67, 93, 101, 127],
            vec![8, 9, 16, 17, 24, 25, 32],
            vec![14, 17, 31, 34, 48, 51, 65],
        ]
    );
}

#[test]
fn method1_modulus_18_alternates() {
    let chain = generate_chain_m1(&conway(), 18, 5).unwrap();
    assert_eq!(oracle_classes(&chain), vec![1, -1, 1, -1, 1]);
    let p = analyze_modulus(&conway(), 18).unwrap();
    assert!(method1::verify_identities(&p, &chain).ok());
}

#[test]
fn method1_growth_equals_base_size_and_modulus() {
    for base in [conway(), lit("0,1,2,4,5,9,12,13,14")] {
        for n in search_moduli(&base).unwrap() {
            let chain = generate_chain_m1(&base, n, 11).unwrap();
            let g = growth_rates(&chain).unwrap();
            assert_eq!(g.card_rate, Ratio::from_integer(base.len() as i64));
            assert_eq!(g.diam_rate, Ratio::from_integer(n));
            assert!(validate_chain(&chain).ok());
        }
    }
}

#[test]
fn table_two_columns_and_appended_elements() {
    let params = build_base(4, 1, 3).unwrap();
    let chain = generate_chain_m2(&params, 7).unwrap();
    assert_eq!(chain.set(1), &lit("-1,0,2,3,4,7,11,12,14,15"));
    assert_eq!(chain.set(2), &chain.set(1).with(&[19]).unwrap());
    assert_eq!(chain.set(3), &chain.set(2).with(&[-5]).unwrap());
    assert_eq!(
        columns(&chain),
        [
            vec![32, 36, 40, 44, 48, 52, 56],
            vec![31, 37, 39, 45, 47, 53, 55],
            vec![10, 11, 12, 13, 14, 15, 16],
            vec![16, 20, 24, 28, 32, 36, 40],
        ]
    );
}

#[test]
fn method2_m8_d2_chain() {
    // frozen from brute-force enumeration of the five sets
    let params = build_base(8, 2, 3).unwrap();
    let chain = generate_chain_m2(&params, 5).unwrap();
    assert_eq!(oracle_classes(&chain), vec![1, -1, 1, -1, 1]);
    let [sums, diffs, ..] = columns(&chain);
    assert_eq!(sums, vec![62, 70, 78, 86, 94]);
    assert_eq!(diffs, vec![61, 75, 77, 91, 93]);
    assert!(verify_chain_identities(&params, &chain).ok());
}

#[test]
fn star_identities_hold_on_generated_chain() {
    let params = build_base(4, 1, 3).unwrap();
    let chain = generate_chain_m2(&params, 7).unwrap();
    let report = verify_star_identities(&params, &chain);
    assert!(report.ok(), "{report}");
    // the "+1 between odd sets" reading never holds on this chain
    assert_eq!(report.notes.len(), 3);
    assert!(report.notes[0].starts_with("A_3: |A+A| = 40 is not |A+A| + 1 = 32 + 1"));
}

#[test]
fn star_verifier_negative_controls() {
    let params = build_base(4, 1, 3).unwrap();
    let a1 = build_a1_m2(&params).unwrap();

    // dropping -d keeps all four counting identities but breaks the symmetry
    let corrupted = Chain::new(MethodTag::External, vec![a1.without(-1)]).unwrap();
    let r = verify_star_identities(&params, &corrupted);
    assert!(!r.ok());
    assert!(r.failures.contains(&Failure {
        index: 1,
        check: method2::CHECK_STAR_SYMMETRY,
        witness: Witness::Pair(15, -1),
    }));
    assert!(r.failures.contains(&Failure {
        index: 1,
        check: method2::CHECK_ODD_GAP,
        witness: Witness::Counts(29, 29),
    }));
    assert!(!r.has_failure(method2::CHECK_STAR_IV));

    // dropping 7 breaks identity (iv): |A-A| = 31 but |A*-A*| = 27
    let corrupted = Chain::new(MethodTag::External, vec![a1.without(7)]).unwrap();
    let r = verify_star_identities(&params, &corrupted);
    assert!(r.failures.contains(&Failure {
        index: 1,
        check: method2::CHECK_STAR_IV,
        witness: Witness::Counts(31, 27),
    }));
    assert!(r.has_failure(method2::CHECK_STAR_I));
}

#[test]
fn method3_roster_agrees_with_closed_form() {
    // explicit listing: two tails of the 5-progression plus a fixed core
    let roster = |k: i64| -> IntSet {
        let mut v: Vec<i64> = vec![-8, -7, -4, -3, 0, 5, 8, 11, 12, 15, 16];
        let mut t = -5 * k - 24;
        while t <= -14 {
            v.extend([t, t + 1]);
            t += 5;
        }
        let mut t = 21;
        while t <= 5 * k + 31 {
            v.extend([t, t + 1]);
            t += 5;
        }
        IntSet::new(v).unwrap()
    };
    for k in 0..=2usize {
        let closed = set_m3(Method3Index::new(4 * k + 1).unwrap());
        assert_eq!(closed, roster(k as i64), "k = {k}");
    }
}

#[test]
fn table_three_columns() {
    let chain = generate_chain_m3(9).unwrap();
    assert_eq!(
        columns(&chain),
        [
            vec![98, 102, 106, 110, 114, 118, 122, 126, 130],
            vec![97, 103, 105, 111, 113, 119, 121, 127, 129],
            (23..=31).collect(),
            vec![56, 60, 64, 65, 66, 70, 74, 75, 76],
        ]
    );
}

#[test]
fn method3_deltas_by_enumeration() {
    for i in [2usize, 4, 6, 8, 10] {
        let prev = set_m3(Method3Index::new(i - 1).unwrap());
        let cur = set_m3(Method3Index::new(i).unwrap());
        let ns = naive_sums(cur.as_slice())
            .difference(&naive_sums(prev.as_slice()))
            .count();
        let nd = naive_diffs(cur.as_slice())
            .difference(&naive_diffs(prev.as_slice()))
            .count();
        assert_eq!((ns, nd), (4, 6));
        assert_eq!(delta_counts(Method3Index::new(i).unwrap()), Ok((ns, nd)));
    }
}

#[test]
fn method3_diameter_steps_alternate() {
    let chain = generate_chain_m3(41).unwrap();
    let odd: Vec<u64> = chain
        .profiles()
        .iter()
        .step_by(2)
        .map(|p| p.diameter)
        .collect();
    let steps: Vec<u64> = odd.windows(2).map(|w| w[1] - w[0]).collect();
    assert!(steps
        .iter()
        .enumerate()
        .all(|(i, &s)| s == if i % 2 == 0 { 8 } else { 2 }));
    assert!(method3::verify_identities(&chain).ok());
}

#[test]
fn growth_rate_examples() {
    let rates = |t| growth_rates(&reference_chain(t, 9).unwrap()).unwrap();
    assert_eq!(
        rates(1),
        GrowthRates {
            card_rate: 8.into(),
            diam_rate: 17.into()
        }
    );
    assert_eq!(
        rates(2),
        GrowthRates {
            card_rate: 2.into(),
            diam_rate: 8.into()
        }
    );
    assert_eq!(
        rates(3),
        GrowthRates {
            card_rate: 2.into(),
            diam_rate: 5.into()
        }
    );
}

#[test]
fn growth_table_cells() {
    let rows = growth_table(&reference_chain(1, 7).unwrap());
    assert_eq!(rows[1].card_ratio, Some(Ratio::new(9, 8)));
    assert_eq!(rows[1].diam_ratio, Some(Ratio::new(17, 14)));
    assert_eq!(rows[1].density.to_string(), "0.529");
    let rows = growth_table(&reference_chain(3, 9).unwrap());
    assert_eq!(rows[3].density.to_string(), "0.400");
    assert_eq!(
        altchain_core::profile::round3(rows[3].diam_ratio.unwrap()),
        "1.016"
    );
}

#[test]
fn limiting_density_approaches_growth_ratio() {
    let expect = [Ratio::new(8, 17), Ratio::new(1, 4), Ratio::new(2, 5)];
    for (t, want) in (1..=3u8).zip(expect) {
        let chain = reference_chain(t, 101).unwrap();
        let mut last = f64::INFINITY;
        for probe in [11, 51, 101] {
            let ld = limiting_density(&chain, probe).unwrap();
            assert_eq!(ld.analytic, Some(want));
            let diff = ld.numeric - want;
            let err = (*diff.numer() as f64 / *diff.denom() as f64).abs();
            assert!(err < last, "table {t} probe {probe}");
            last = err;
        }
    }
}

#[test]
fn no_filling_in_between_arbitrary_pairs() {
    for t in 1..=3 {
        let chain = reference_chain(t, 40).unwrap();
        assert!(validate_chain(&chain).ok());
        for k in 1..=40 {
            for n in k + 1..=40 {
                assert_eq!(filled_between(&chain, k, n), None);
            }
        }
    }
}
