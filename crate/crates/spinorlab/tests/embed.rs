use std::collections::BTreeSet;
use std::str::FromStr;

use spinorlab::clifford::{chirality, gamma_apply, gamma_word, Chirality};
use spinorlab::embed::*;
use spinorlab::fock::mask_of;
use spinorlab::linalg::{self, Matrix};
use spinorlab::pairing::spin_flip;
use spinorlab::sample;
use spinorlab::{Error, FockState, GaussRat, LadderOp, LadderWord};

#[path = "support/printed_mirror.rs"]
mod printed_mirror;
use printed_mirror::{printed_mismatches, printed_table};

type St = FockState<GaussRat>;

fn int(v: i64) -> GaussRat {
    GaussRat::int(v)
}

fn pattern(bits: &str) -> OccupancyPattern {
    OccupancyPattern::from_str(bits).unwrap()
}

#[test]
fn single_occupancy_examples() {
    let q = QubitState::new(1, vec![int(2), int(-5)]).unwrap();
    let s = embed_single(&q);
    let v = St::vacuum(2).unwrap();
    assert_eq!(
        s,
        v.create(1)
            .unwrap()
            .scale(&int(2))
            .plus(&v.create(2).unwrap().scale(&int(-5)))
    );
    let ground = embed_single(&QubitState::<GaussRat>::basis(4, 0).unwrap());
    assert_eq!(ground, St::product(8, &[1, 2, 3, 4], int(1)).unwrap());
    let mut rng = sample::rng(30);
    for n in 1..=4 {
        for _ in 0..50 {
            let q = sample::qubit_state(&mut rng, n);
            let back = extract_qubit(&embed_single(&q), &OccupancyPattern::single(n)).unwrap();
            assert_eq!(back, q);
        }
    }
    assert!(QubitState::<GaussRat>::zero(5).is_err());
}

#[test]
fn two_qubit_patterns_have_the_expected_support() {
    let mut rng = sample::rng(31);
    let q = sample::qubit_state(&mut rng, 2);
    // modes (1, 2, 1̄, 2̄) = (1, 2, 3, 4)
    let single: BTreeSet<u32> = [[1, 2], [1, 4], [3, 2], [3, 4]]
        .iter()
        .map(|m| mask_of(m))
        .collect();
    let s = embed_pattern(&q, &pattern("00")).unwrap();
    assert!(s.terms().keys().all(|m| single.contains(m)));
    let double: BTreeSet<u32> = [0, mask_of(&[1, 3]), mask_of(&[2, 4]), 0b1111].into();
    let d = embed_pattern(&q, &pattern("11")).unwrap();
    assert!(d.terms().keys().all(|m| double.contains(m)));
    assert_eq!(d.len(), 4);
}

#[test]
fn three_qubit_double_occupancy_support() {
    let mut rng = sample::rng(32);
    let q = sample::qubit_state(&mut rng, 3);
    let d = embed_pattern(&q, &OccupancyPattern::double(3)).unwrap();
    // every box is either empty or full
    for m in d.terms().keys() {
        for k in 0..3 {
            assert_eq!(m >> k & 1, m >> (k + 3) & 1);
        }
    }
    assert_eq!(chirality(&d), Chirality::Positive);
}

#[test]
fn pattern_chirality_follows_parity() {
    let mut rng = sample::rng(33);
    for n in 2..=4 {
        let q = sample::qubit_state(&mut rng, n);
        for p in OccupancyPattern::all(n) {
            let s = embed_pattern(&q, &p).unwrap();
            let want = if (n + p.doubles()) % 2 == 0 {
                Chirality::Positive
            } else {
                Chirality::Negative
            };
            assert_eq!(chirality(&s), want, "pattern {p}");
        }
    }
}

#[test]
fn intertwiners_are_gamma_products() {
    let mut rng = sample::rng(34);
    for n in 1..=4 {
        let q = sample::qubit_state(&mut rng, n);
        let base = embed_single(&q);
        for p in OccupancyPattern::all(n) {
            let idx: Vec<usize> = (1..=n).filter(|&k| p.bits()[k - 1] == 1).collect();
            assert_eq!(
                embed_pattern(&q, &p).unwrap(),
                gamma_word(&idx, &base).unwrap()
            );
        }
    }
}

#[test]
fn patterns_decompose_the_fock_space() {
    for n in 2..=4 {
        let mut seen = BTreeSet::new();
        for p in OccupancyPattern::all(n) {
            for idx in 0..1 << n {
                let q = QubitState::<GaussRat>::basis(n, idx).unwrap();
                let s = embed_pattern(&q, &p).unwrap();
                assert_eq!(s.len(), 1);
                assert!(seen.insert(*s.terms().keys().next().unwrap()));
            }
        }
        assert_eq!(seen.len(), 1 << (2 * n));
    }
}

#[test]
fn extraction_round_trips_and_reports_stray_support() {
    let mut rng = sample::rng(35);
    for n in 2..=4 {
        for p in OccupancyPattern::all(n) {
            for _ in 0..50 {
                let q = sample::qubit_state(&mut rng, n);
                let s = embed_pattern(&q, &p).unwrap();
                assert_eq!(extract_qubit(&s, &p).unwrap(), q);
            }
        }
    }
    let ground = embed_single(&QubitState::<GaussRat>::basis(4, 0).unwrap());
    let unit = extract_qubit(&ground, &OccupancyPattern::single(4)).unwrap();
    assert_eq!(unit, QubitState::basis(4, 0).unwrap());
    let stray = mask_of(&[1, 5, 2, 3]);
    let mut bad = ground.clone();
    bad.add_term(stray, int(1));
    assert_eq!(
        extract_qubit(&bad, &OccupancyPattern::single(4)),
        Err(Error::Support(vec![stray]))
    );
}

fn ladder_words(terms: &[(i64, [LadderOp; 2])]) -> Vec<LadderWord<GaussRat>> {
    terms
        .iter()
        .map(|(c, ops)| LadderWord::new(int(*c), ops.to_vec()))
        .collect()
}

fn apply_sum(words: &[LadderWord<GaussRat>], s: &St) -> St {
    words.iter().fold(St::zero(s.modes()).unwrap(), |acc, w| {
        acc.plus(&s.apply_word(w).unwrap())
    })
}

type Generators = Vec<Vec<LadderWord<GaussRat>>>;

/// sl(2) generators of box `k` out of `boxes`: single occupancy ones first, double ones second.
fn box_generators(boxes: usize, k: usize) -> (Generators, Generators) {
    let (p, n) = (LadderOp::create, LadderOp::annihilate);
    let b = k + boxes;
    let single = vec![
        ladder_words(&[(1, [p(k), n(k)]), (-1, [p(b), n(b)])]),
        ladder_words(&[(1, [p(b), n(k)])]),
        ladder_words(&[(1, [p(k), n(b)])]),
    ];
    let double = vec![
        ladder_words(&[(1, [n(k), p(k)]), (-1, [p(b), n(b)])]),
        ladder_words(&[(1, [p(k), p(b)])]),
        ladder_words(&[(-1, [n(k), n(b)])]),
    ];
    (single, double)
}

#[test]
fn occupancy_sectors_ignore_the_other_generators() {
    let mut rng = sample::rng(36);
    for _ in 0..20 {
        let q = sample::qubit_state(&mut rng, 2);
        let single = embed_pattern(&q, &pattern("00")).unwrap();
        let double = embed_pattern(&q, &pattern("11")).unwrap();
        for k in 1..=2 {
            let (s_gens, d_gens) = box_generators(2, k);
            for g in &s_gens {
                assert!(apply_sum(g, &double).is_zero());
            }
            for g in &d_gens {
                assert!(apply_sum(g, &single).is_zero());
            }
        }
    }
}

#[test]
fn gamma_one_conjugates_the_one_qubit_generators() {
    let (single, double) = box_generators(1, 1);
    for col in 0..4u32 {
        let basis = St::basis(2, col, int(1)).unwrap();
        for (s, d) in single.iter().zip(&double) {
            let conj = gamma_apply(1, &apply_sum(s, &gamma_apply(1, &basis).unwrap())).unwrap();
            assert_eq!(conj, apply_sum(d, &basis));
        }
    }
}

#[test]
fn wootters_flip_is_the_spin_flip_on_embedded_qubits() {
    let mut rng = sample::rng(37);
    for _ in 0..50 {
        let q = sample::qubit_state(&mut rng, 4);
        // global sign pinned at +1 for four qubits
        assert_eq!(
            spin_flip(&embed_single(&q)),
            embed_single(&wootters_flip(&q))
        );
    }
}

#[test]
fn slocc_examples() {
    let id: Matrix<GaussRat> = linalg::identity(2);
    let mut rng = sample::rng(38);
    let q = sample::qubit_state(&mut rng, 3);
    let ids = vec![id.clone(); 3];
    assert_eq!(qubit_slocc_apply(&q, &ids, &[0, 1, 2]).unwrap(), q);
    let ket01 = QubitState::<GaussRat>::basis(2, 0b01).unwrap();
    let swapped = qubit_slocc_apply(&ket01, &[id.clone(), id.clone()], &[1, 0]).unwrap();
    assert_eq!(swapped, QubitState::basis(2, 0b10).unwrap());
    let bad: Matrix<GaussRat> = linalg::from_i64(&[&[2, 0], &[0, 1]]);
    assert_eq!(
        qubit_slocc_apply(&ket01, &[bad, id.clone()], &[0, 1]),
        Err(Error::DeterminantNotOne)
    );
    assert!(qubit_slocc_apply(&ket01, &[id.clone(), id], &[0, 0]).is_err());
}

// ---- three-qubit mirror map ----

#[test]
fn mirror_examples() {
    let v = St::vacuum(6).unwrap();
    let u3 = v.create(3).unwrap();
    let out = mirror_three_qubit(&u3, MirrorDirection::Forward).unwrap();
    assert_eq!(out, St::product(6, &[1, 2], int(1)).unwrap());
    let z123 = St::product(6, &[1, 2, 3], int(1)).unwrap();
    let out = mirror_three_qubit(&z123, MirrorDirection::Forward).unwrap();
    assert_eq!(out, v.scale(&int(-1)));
    let z456 = St::product(6, &[4, 5, 6], int(1)).unwrap();
    let out = mirror_three_qubit(&z456, MirrorDirection::Forward).unwrap();
    assert_eq!(out, St::top(6).unwrap());
    assert!(mirror_three_qubit(&St::vacuum(4).unwrap(), MirrorDirection::Forward).is_err());
}

#[test]
fn mirror_twice_is_minus_identity() {
    let mut rng = sample::rng(39);
    for _ in 0..20 {
        let s = sample::state(&mut rng, 6, 0.5, Some(1));
        let f = mirror_three_qubit(&s, MirrorDirection::Forward).unwrap();
        assert_eq!(
            mirror_three_qubit(&f, MirrorDirection::Forward).unwrap(),
            s.scale(&int(-1))
        );
        assert_eq!(
            mirror_three_qubit(&f, MirrorDirection::Backward).unwrap(),
            s
        );
    }
}

#[test]
fn mirror_table_matches_golden_fixture() {
    let golden = include_str!("fixtures/mirror_table.txt");
    let lines: Vec<String> = mirror_table().iter().map(ToString::to_string).collect();
    assert_eq!(lines.len(), 32);
    assert_eq!(lines.join("\n") + "\n", golden);
}

#[test]
fn printed_dictionary_differs_only_in_the_one_particle_blocks() {
    let bad = printed_mismatches();
    for line in &bad {
        println!("{line}");
    }
    // all Z entries plus η and ξ agree; the twelve U/W entries sit in the other block
    assert_eq!(bad.len(), 12);
    let book = printed_table();
    for e in mirror_table() {
        if matches!(e.input, OddAmp::Z(..)) {
            assert_eq!(book[&e.output], (e.negative, e.input), "{e}");
        }
    }
}
