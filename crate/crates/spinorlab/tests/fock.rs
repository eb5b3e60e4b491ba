use proptest::prelude::*;
use spinorlab::fock::{mask_of, LadderKind};
use spinorlab::oracle as dense;
use spinorlab::sample;
use spinorlab::{FockState, GaussRat, LadderOp, LadderWord, Scalar};

type St = FockState<GaussRat>;

fn int(v: i64) -> GaussRat {
    GaussRat::int(v)
}

fn anticommutator(a: LadderOp, b: LadderOp, s: &St) -> St {
    let ab = s.apply(b).unwrap().apply(a).unwrap();
    let ba = s.apply(a).unwrap().apply(b).unwrap();
    ab.plus(&ba)
}

#[test]
fn vacuum_and_top() {
    let v = St::vacuum(2).unwrap();
    assert_eq!(v.len(), 1);
    assert_eq!(v.coeff(0), int(1));
    assert!(St::vacuum(4).unwrap().annihilate(1).unwrap().is_zero());
    let sectors = St::vacuum(8).unwrap().particle_sectors();
    assert_eq!(sectors.keys().copied().collect::<Vec<_>>(), vec![0]);
    assert_eq!(St::top(2).unwrap().coeff(0b11), int(1));
    assert!(St::vacuum(0).is_err());
    assert!(St::top(17).is_err());
}

#[test]
fn lowering_the_top_state() {
    for n in 1..=10 {
        let word = LadderWord::unit((1..=n).map(LadderOp::annihilate).collect());
        let out = St::top(n).unwrap().apply_word(&word).unwrap();
        let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        assert_eq!(out, St::vacuum(n).unwrap().scale(&int(sign)), "N = {n}");
    }
    let word = LadderWord::unit((1..=4).rev().map(LadderOp::annihilate).collect());
    let out = St::top(4).unwrap().apply_word(&word).unwrap();
    assert_eq!(out, St::vacuum(4).unwrap());
}

#[test]
fn ladder_examples() {
    let v = St::vacuum(2).unwrap();
    assert_eq!(v.create(1).unwrap().coeff(0b01), int(1));
    assert!(v.create(1).unwrap().create(1).unwrap().is_zero());
    // p^2 p^1|0> is minus the ascending monomial, and n_1 strips the p^1
    let built = v.create(1).unwrap().create(2).unwrap();
    assert_eq!(built.coeff(0b11), int(-1));
    assert_eq!(
        built.annihilate(1).unwrap(),
        v.create(2).unwrap().scale(&int(-1))
    );
    // the ascending product p^1 p^2|0> is the stored monomial itself
    let word = LadderWord::unit(vec![LadderOp::create(1), LadderOp::create(2)]);
    assert_eq!(v.apply_word(&word).unwrap(), St::top(2).unwrap());
    assert!(v.create(3).is_err());
}

#[test]
fn empty_word_scales() {
    let mut rng = sample::rng(1);
    let s = sample::state(&mut rng, 5, 0.5, None);
    let c = GaussRat::ratio(-3, 7);
    let w = LadderWord::new(c.clone(), vec![]);
    assert_eq!(s.apply_word(&w).unwrap(), s.scale(&c));
}

#[test]
fn canonical_anticommutators() {
    let mut rng = sample::rng(2);
    for t in 0..200 {
        let n = 2 + t % 5;
        let s = sample::state(&mut rng, n, 0.5, None);
        for i in 1..=n {
            for j in 1..=n {
                let pn = anticommutator(LadderOp::create(i), LadderOp::annihilate(j), &s);
                if i == j {
                    assert_eq!(pn, s);
                } else {
                    assert!(pn.is_zero());
                }
                assert!(anticommutator(LadderOp::create(i), LadderOp::create(j), &s).is_zero());
                assert!(
                    anticommutator(LadderOp::annihilate(i), LadderOp::annihilate(j), &s).is_zero()
                );
            }
        }
    }
}

#[test]
fn ladder_action_is_linear() {
    let mut rng = sample::rng(3);
    for _ in 0..100 {
        let a = sample::state(&mut rng, 6, 0.4, None);
        let b = sample::state(&mut rng, 6, 0.4, None);
        let (x, y) = (sample::gauss(&mut rng), sample::gauss(&mut rng));
        let combo = a.scale(&x).plus(&b.scale(&y));
        for op in [LadderOp::create(3), LadderOp::annihilate(5)] {
            let lhs = combo.apply(op).unwrap();
            let rhs = a
                .apply(op)
                .unwrap()
                .scale(&x)
                .plus(&b.apply(op).unwrap().scale(&y));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn sectors_partition_the_state() {
    let v = St::vacuum(2).unwrap();
    let s = v.plus(&St::top(2).unwrap());
    assert_eq!(
        s.particle_sectors().keys().copied().collect::<Vec<_>>(),
        vec![0, 2]
    );
    let z = St::product(8, &[1, 2, 3, 4], int(5)).unwrap();
    assert_eq!(
        z.particle_sectors().keys().copied().collect::<Vec<_>>(),
        vec![4]
    );
    let mut rng = sample::rng(4);
    for _ in 0..50 {
        let s = sample::state(&mut rng, 7, 0.3, None);
        let parts = s.particle_sectors();
        let mut back = St::zero(7).unwrap();
        let mut count = 0;
        for (k, part) in &parts {
            assert!(part.terms().keys().all(|m| m.count_ones() as usize == *k));
            count += part.len();
            back = back.plus(part);
        }
        assert_eq!(count, s.len());
        assert_eq!(back, s);
    }
}

#[test]
fn hermitian_inner_product() {
    let v = St::vacuum(3).unwrap();
    assert_eq!(v.hermitian_inner(&v).unwrap(), int(1));
    assert!(St::top(3).unwrap().hermitian_inner(&v).unwrap().is_zero());
    let mut rng = sample::rng(5);
    for _ in 0..50 {
        let s = sample::state(&mut rng, 5, 0.5, None);
        let norm = s.hermitian_inner(&s).unwrap();
        assert!(norm.is_real());
        assert_eq!(norm.is_zero(), s.is_zero());
        assert!(norm.re >= num_rational::BigRational::from_integer(0.into()));
        let t = sample::state(&mut rng, 5, 0.5, None);
        assert_eq!(
            s.hermitian_inner(&t).unwrap(),
            t.hermitian_inner(&s).unwrap().conj()
        );
    }
    assert!(v.hermitian_inner(&St::vacuum(4).unwrap()).is_err());
}

#[test]
fn zero_states_flow_through() {
    let z = St::zero(4).unwrap();
    assert!(z.create(2).unwrap().is_zero());
    assert!(z.particle_sectors().is_empty());
    assert_eq!(z.hermitian_inner(&z).unwrap(), int(0));
}

#[test]
fn mask_helpers() {
    assert_eq!(mask_of(&[1, 3]), 0b101);
    assert_eq!(LadderOp::create(2).kind, LadderKind::Create);
}

fn word_strategy(modes: usize) -> impl Strategy<Value = Vec<(bool, usize)>> {
    prop::collection::vec((any::<bool>(), 1..=modes), 0..=4)
}

fn case_strategy() -> impl Strategy<Value = (usize, Vec<(bool, usize)>, Vec<i64>)> {
    (1usize..=6).prop_flat_map(|n| {
        (
            Just(n),
            word_strategy(n),
            prop::collection::vec(-3i64..=3, 1 << n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn words_match_the_dense_matrix_oracle((n, word, amps) in case_strategy()) {
        let factors: Vec<LadderOp> = word
            .iter()
            .map(|&(c, m)| if c { LadderOp::create(m) } else { LadderOp::annihilate(m) })
            .collect();
        let got = dense::state_of(&amps, n).apply_word(&LadderWord::unit(factors)).unwrap();
        let mut v = amps.clone();
        for &(c, m) in word.iter().rev() {
            v = dense::apply(&dense::ladder(n, m, c), &v);
        }
        prop_assert_eq!(got, dense::state_of(&v, n));
    }
}
