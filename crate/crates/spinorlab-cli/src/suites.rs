//! Seeded identity batteries run by `spinorlab verify`.
//!
//! Trial `k` in `1..=trials` draws from its own generator, so trials run in
//! parallel and the report still only depends on `(suite, seed, trials)`.
//! Checks that need no randomness run once and are reported as trial 0.

use std::fmt::Debug;

use rand::Rng;
use rayon::prelude::*;
use spinorlab::classify::{annihilator_basis, is_pure_spinor, isotropy_form, random_pure_spinor};
use spinorlab::clifford::{
    b_transform, c_transform, chirality, gamma_word, gl_sector_transform, grading, Chirality,
};
use spinorlab::embed::{
    embed_pattern, embed_single, extract_qubit, mirror_three_qubit, qubit_slocc_apply,
    wootters_flip, MirrorDirection, OccupancyPattern, QubitState,
};
use spinorlab::invariants::*;
use spinorlab::oracle as dense;
use spinorlab::pairing::{
    is_majorana, mukai, mukai_by_words, pairing_symmetry, spin_flip, transpose_word,
};
use spinorlab::roots::*;
use spinorlab::sample::{self, SeededRng};
use spinorlab::{FockState, GaussRat, LadderOp, LadderWord, Scalar};

use crate::report::{FailureV1, IdentityV1, SuiteV1};
use crate::state_file::StateFileV1;

type St = FockState<GaussRat>;

/// At most this many failures are kept per identity.
const MAX_FAILURES: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Car,
    Pairing,
    Embeddings,
    FourqubitIdentities,
    Roots,
    E8,
    Classify,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Car => "car",
            Suite::Pairing => "pairing",
            Suite::Embeddings => "embeddings",
            Suite::FourqubitIdentities => "fourqubit-identities",
            Suite::Roots => "roots",
            Suite::E8 => "e8",
            Suite::Classify => "classify",
        }
    }
}

struct Outcome {
    name: &'static str,
    failure: Option<(String, Option<StateFileV1>)>,
}

/// Collects check outcomes for one trial.
pub struct Recorder {
    outcomes: Vec<Outcome>,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            outcomes: Vec::new(),
        }
    }

    fn check(
        &mut self,
        name: &'static str,
        ok: bool,
        detail: impl FnOnce() -> String,
        state: Option<&St>,
    ) {
        let failure = (!ok).then(|| (detail(), state.map(StateFileV1::from_state)));
        self.outcomes.push(Outcome { name, failure });
    }

    fn eq<T: PartialEq + Debug>(
        &mut self,
        name: &'static str,
        lhs: &T,
        rhs: &T,
        state: Option<&St>,
    ) {
        self.check(name, lhs == rhs, || format!("{lhs:?} != {rhs:?}"), state);
    }

    fn error(&mut self, e: spinorlab::Error) {
        self.check("library-error", false, || e.to_string(), None);
    }
}

type Step = spinorlab::Result<()>;

fn trial_rng(seed: u64, trial: usize) -> SeededRng {
    sample::rng(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ trial as u64)
}

/// Runs `suite` and folds the outcomes by identity name, in first-seen order.
pub fn run(suite: Suite, trials: usize, seed: u64) -> SuiteV1 {
    let once = {
        let mut rec = Recorder::new();
        let mut rng = trial_rng(seed, 0);
        if let Err(e) = run_once(suite, &mut rng, &mut rec) {
            rec.error(e);
        }
        rec.outcomes
    };
    let per_trial: Vec<Vec<Outcome>> = (1..=trials)
        .into_par_iter()
        .map(|k| {
            let mut rec = Recorder::new();
            let mut rng = trial_rng(seed, k);
            if let Err(e) = run_trial(suite, k, seed, &mut rng, &mut rec) {
                rec.error(e);
            }
            rec.outcomes
        })
        .collect();

    let all = std::iter::once((0, once))
        .chain(per_trial.into_iter().enumerate().map(|(i, o)| (i + 1, o)));
    let identities = fold(all);
    SuiteV1 {
        name: suite.name().to_string(),
        seed,
        trials,
        passed: identities.iter().map(|i| i.passed).sum(),
        failed: identities.iter().map(|i| i.failed).sum(),
        identities,
    }
}

/// Groups `(trial, outcomes)` by identity name, keeping the first few failures of each.
fn fold(trials: impl Iterator<Item = (usize, Vec<Outcome>)>) -> Vec<IdentityV1> {
    let mut identities: Vec<IdentityV1> = Vec::new();
    for (trial, outcomes) in trials {
        for o in outcomes {
            let pos = match identities.iter().position(|id| id.name == o.name) {
                Some(p) => p,
                None => {
                    identities.push(IdentityV1 {
                        name: o.name.to_string(),
                        passed: 0,
                        failed: 0,
                        failures: Vec::new(),
                    });
                    identities.len() - 1
                }
            };
            let id = &mut identities[pos];
            match o.failure {
                None => id.passed += 1,
                Some((detail, state)) => {
                    id.failed += 1;
                    if id.failures.len() < MAX_FAILURES {
                        id.failures.push(FailureV1 {
                            trial,
                            detail,
                            state,
                        });
                    }
                }
            }
        }
    }
    identities
}

fn run_once(suite: Suite, rng: &mut SeededRng, rec: &mut Recorder) -> Step {
    match suite {
        Suite::Car => car_dense_oracle(rec),
        Suite::Pairing => pairing_once(rec),
        Suite::Embeddings => embeddings_once(rec),
        Suite::FourqubitIdentities => fourqubit_once(rec),
        Suite::Roots => roots_once(rec),
        Suite::E8 => e8_once(rec),
        Suite::Classify => classify_once(rng, rec),
    }
}

fn run_trial(suite: Suite, k: usize, seed: u64, rng: &mut SeededRng, rec: &mut Recorder) -> Step {
    match suite {
        Suite::Car => car_trial(k, rng, rec),
        Suite::Pairing => pairing_trial(k, rng, rec),
        Suite::Embeddings => embeddings_trial(k, rng, rec),
        Suite::FourqubitIdentities => fourqubit_trial(rng, rec),
        Suite::Roots => roots_trial(rng, rec),
        Suite::E8 => e8_trial(rng, rec),
        Suite::Classify => classify_trial(k, seed, rng, rec),
    }
}

fn int(v: i64) -> GaussRat {
    GaussRat::int(v)
}

fn word(coeff: GaussRat, ops: &[LadderOp]) -> LadderWord<GaussRat> {
    LadderWord::new(coeff, ops.to_vec())
}

fn random_word(rng: &mut SeededRng, n: usize, max_len: usize) -> LadderWord<GaussRat> {
    let len = rng.gen_range(0..=max_len);
    let factors = (0..len)
        .map(|_| {
            let m = rng.gen_range(1..=n);
            if rng.gen_bool(0.5) {
                LadderOp::create(m)
            } else {
                LadderOp::annihilate(m)
            }
        })
        .collect();
    LadderWord::new(sample::nonzero_gauss(rng), factors)
}

// ---- car ----

fn car_dense_oracle(rec: &mut Recorder) -> Step {
    for n in 1..=4 {
        for mode in 1..=n {
            for create in [true, false] {
                let m = dense::ladder(n, mode, create);
                let op = if create {
                    LadderOp::create(mode)
                } else {
                    LadderOp::annihilate(mode)
                };
                for col in 0..1usize << n {
                    let basis = St::basis(n, col as u32, int(1))?;
                    rec.eq(
                        "ladder-vs-dense",
                        &basis.apply(op)?,
                        &dense::column(&m, col, n),
                        Some(&basis),
                    );
                }
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                let p = dense::ladder(n, i, true);
                let a = dense::ladder(n, j, false);
                let anti = dense::add(&dense::mul(&p, &a), &dense::mul(&a, &p), 1);
                rec.check(
                    "dense-car",
                    dense::is_scalar_multiple_of_identity(&anti, (i == j) as i64),
                    || format!("N={n} i={i} j={j}"),
                    None,
                );
            }
        }
        for i in 1..=2 * n {
            for j in 1..=2 * n {
                let (gi, gj) = (dense::gamma(n, i), dense::gamma(n, j));
                let anti = dense::add(&dense::mul(&gi, &gj), &dense::mul(&gj, &gi), 1);
                let eta = match (i == j, i <= n) {
                    (false, _) => 0,
                    (true, true) => 2,
                    (true, false) => -2,
                };
                rec.check(
                    "dense-clifford",
                    dense::is_scalar_multiple_of_identity(&anti, eta),
                    || format!("N={n} I={i} J={j}"),
                    None,
                );
            }
        }
    }
    Ok(())
}

fn car_trial(k: usize, rng: &mut SeededRng, rec: &mut Recorder) -> Step {
    let big = sample::state(rng, 8, 0.1, None);
    let small = sample::state(rng, 2 + k % 6, 0.5, None);
    for s in [&big, &small] {
        let n = s.modes();
        let one = int(1);
        let mut car_ok = true;
        let mut zero_ok = true;
        for i in 1..=n {
            for j in 1..=n {
                let (p, a) = (LadderOp::create(i), LadderOp::annihilate(j));
                let anti = s
                    .apply_word(&word(one.clone(), &[p, a]))?
                    .plus(&s.apply_word(&word(one.clone(), &[a, p]))?);
                car_ok &= anti == if i == j { s.clone() } else { St::zero(n)? };
                let (pj, ai) = (LadderOp::create(j), LadderOp::annihilate(i));
                let pp = s
                    .apply_word(&word(one.clone(), &[p, pj]))?
                    .plus(&s.apply_word(&word(one.clone(), &[pj, p]))?);
                let aa = s
                    .apply_word(&word(one.clone(), &[a, ai]))?
                    .plus(&s.apply_word(&word(one.clone(), &[ai, a]))?);
                zero_ok &= pp.is_zero() && aa.is_zero();
            }
        }
        rec.check("car {p,n}", car_ok, || format!("N = {n}"), Some(s));
        rec.check("car {p,p} {n,n}", zero_ok, || format!("N = {n}"), Some(s));
        let mut cliff_ok = true;
        for i in 1..=2 * n {
            for j in 1..=2 * n {
                let sum = gamma_word(&[i, j], s)?.plus(&gamma_word(&[j, i], s)?);
                let eta = match (i == j, i <= n) {
                    (false, _) => 0,
                    (true, true) => 2,
                    (true, false) => -2,
                };
                cliff_ok &= sum == s.scale(&int(eta));
            }
        }
        rec.check("clifford", cliff_ok, || format!("N = {n}"), Some(s));
        let g = grading(s);
        let parity = s.map_coeffs(|m, c| {
            if m.count_ones() % 2 == 0 {
                c.clone()
            } else {
                -c.clone()
            }
        });
        rec.eq("grading-is-parity", &g, &parity, Some(s));
        rec.eq("grading-squares-to-one", &grading(&g), s, Some(s));
    }
    Ok(())
}

// ---- pairing ----

fn pairing_once(rec: &mut Recorder) -> Step {
    for n in 1..=12 {
        rec.eq(
            "vacuum-top-is-one",
            &mukai(&St::vacuum(n)?, &St::top(n)?)?,
            &int(1),
            None,
        );
    }
    Ok(())
}

fn pairing_trial(k: usize, rng: &mut SeededRng, rec: &mut Recorder) -> Step {
    let n = 2 + k % 7;
    let a = sample::state(rng, n, 0.5, None);
    let b = sample::state(rng, n, 0.5, None);
    let sign = int(pairing_symmetry(n) as i64);
    rec.eq(
        "symmetry-sign",
        &mukai(&a, &b)?,
        &(mukai(&b, &a)? * &sign),
        Some(&a),
    );

    let c = sample::gauss(rng);
    let d = sample::state(rng, n, 0.5, None);
    let lhs = mukai(&a.plus(&d.scale(&c)), &b)?;
    rec.eq(
        "bilinear",
        &lhs,
        &(mukai(&a, &b)? + &(mukai(&d, &b)? * &c)),
        Some(&a),
    );

    let flipped = spin_flip(&a);
    rec.eq(
        "spin-flip-realises-pairing",
        &flipped.hermitian_inner(&b)?,
        &mukai(&a, &b)?,
        Some(&a),
    );
    rec.eq(
        "spin-flip-twice",
        &spin_flip(&flipped),
        &a.scale(&sign),
        Some(&a),
    );

    let m = [4usize, 6, 8][k % 3];
    let (x, y) = (
        sample::state(rng, m, 0.15, None),
        sample::state(rng, m, 0.15, None),
    );
    let before = mukai(&x, &y)?;
    let bm = sample::antisymmetric(rng, m, 0.3);
    let cm = sample::antisymmetric(rng, m, 0.3);
    rec.eq(
        "b-invariance",
        &mukai(&b_transform(&bm, &x)?, &b_transform(&bm, &y)?)?,
        &before,
        Some(&x),
    );
    rec.eq(
        "c-invariance",
        &mukai(&c_transform(&cm, &x)?, &c_transform(&cm, &y)?)?,
        &before,
        Some(&x),
    );

    let w_modes = 2 + k % 5;
    let w = random_word(rng, w_modes, 3);
    let (u, v) = (
        sample::state(rng, w_modes, 0.5, None),
        sample::state(rng, w_modes, 0.5, None),
    );
    let lhs = mukai(&u, &v.apply_word(&w)?)?;
    let rhs = mukai(&u.apply_word(&transpose_word(&w))?, &v)?;
    rec.eq("transpose-is-adjoint", &lhs, &rhs, Some(&u));

    let small = 1 + k % 4;
    let (u, v) = (
        sample::state(rng, small, 0.6, None),
        sample::state(rng, small, 0.6, None),
    );
    rec.eq(
        "convolution-vs-words",
        &mukai(&u, &v)?,
        &mukai_by_words(&u, &v)?,
        Some(&u),
    );
    Ok(())
}

// ---- embeddings ----

fn embeddings_once(rec: &mut Recorder) -> Step {
    for n in 2..=4 {
        let mut seen = std::collections::BTreeSet::new();
        for p in OccupancyPattern::all(n) {
            for idx in 0..1 << n {
                let s = embed_pattern(&QubitState::<GaussRat>::basis(n, idx)?, &p)?;
                seen.extend(s.terms().keys().copied());
            }
        }
        rec.eq(
            "patterns-cover-fock-space",
            &seen.len(),
            &(1usize << (2 * n)),
            None,
        );
    }
    Ok(())
}

fn embeddings_trial(k: usize, rng: &mut SeededRng, rec: &mut Recorder) -> Step {
    let n = 1 + k % 4;
    let q = sample::qubit_state(rng, n);
    let base = embed_single(&q);
    for p in OccupancyPattern::all(n) {
        let s = embed_pattern(&q, &p)?;
        rec.eq("extract-round-trip", &extract_qubit(&s, &p)?, &q, Some(&s));
        let idx: Vec<usize> = (1..=n).filter(|&i| p.bits()[i - 1] == 1).collect();
        rec.eq(
            "intertwiner-is-gamma-word",
            &s,
            &gamma_word(&idx, &base)?,
            Some(&base),
        );
        let want = if (n + p.doubles()) % 2 == 0 {
            Chirality::Positive
        } else {
            Chirality::Negative
        };
        if !q.amps().iter().all(Scalar::is_zero) {
            rec.eq("pattern-chirality", &chirality(&s), &want, Some(&s));
        }
    }
    let q4 = sample::qubit_state(rng, 4);
    let e4 = embed_single(&q4);
    rec.eq(
        "wootters-is-spin-flip",
        &spin_flip(&e4),
        &embed_single(&wootters_flip(&q4)),
        Some(&e4),
    );

    let odd = sample::state(rng, 6, 0.5, Some(1));
    let f = mirror_three_qubit(&odd, MirrorDirection::Forward)?;
    rec.eq(
        "mirror-twice-is-minus-one",
        &mirror_three_qubit(&f, MirrorDirection::Forward)?,
        &odd.scale(&int(-1)),
        Some(&odd),
    );
    rec.eq(
        "mirror-backward-inverts",
        &mirror_three_qubit(&f, MirrorDirection::Backward)?,
        &odd,
        Some(&odd),
    );
    Ok(())
}

// ---- fourqubit-identities ----

fn fourqubit_once(rec: &mut Recorder) -> Step {
    let mut amps = vec![GaussRat::zero(); 16];
    amps[0] = int(1);
    amps[15] = int(1);
    let ghz = QubitState::new(4, amps)?;
    let s = embed_single(&ghz);
    rec.eq(
        "ghz-bridge",
        &quadratic_form(&s),
        &(h_invariant(&ghz)? * &int(2)),
        Some(&s),
    );
    Ok(())
}

fn fourqubit_trial(rng: &mut SeededRng, rec: &mut Recorder) -> Step {
    let q = sample::qubit_state(rng, 4);
    let psi = embed_single(&q);
    let st = Some(&psi);
    let i = fourqubit_invariants(&q)?;
    let two = int(2);

    rec.check(
        "L+M+N=0",
        (i.l.clone() + &i.m + &i.n).is_zero(),
        || format!("{i:?}"),
        st,
    );
    rec.eq("D=E-HL", &i.d, &(i.e.clone() - &(i.h.clone() * &i.l)), st);
    rec.eq("E=F-HN", &i.e, &(i.f.clone() - &(i.h.clone() * &i.n)), st);
    rec.eq("F=D-HM", &i.f, &(i.d.clone() - &(i.h.clone() * &i.m)), st);
    rec.eq("s1=2H", &i.s1, &(two.clone() * &i.h), st);
    rec.eq(
        "s2=H^2+4M+2L",
        &i.s2,
        &(i.h.clone() * &i.h + &(int(4) * &i.m) + &(two.clone() * &i.l)),
        st,
    );
    rec.eq(
        "s3=4D+2HL",
        &i.s3,
        &(int(4) * &i.d + &(two.clone() * &i.h * &i.l)),
        st,
    );
    rec.eq("s4=L^2", &i.s4, &(i.l.clone() * &i.l), st);
    rec.eq(
        "H=(psi,psi)/2",
        &i.h,
        &(quadratic_form(&psi) * &GaussRat::ratio(1, 2)),
        st,
    );

    let [s1, s2, s3, s4] = char_poly_s(&q, AmplitudeMatrix::L)?;
    rec.eq(
        "newton-vs-gram",
        &[s1, s2, s3.clone(), s4],
        &[i.s1.clone(), i.s2.clone(), s3_gram(&q)?, i.s4.clone()],
        st,
    );

    let h2 = i.h.clone() * &i.h;
    let cyclic = [
        (
            AmplitudeMatrix::L,
            i.m.clone() - &i.n,
            i.d.clone() + &i.e,
            i.l.clone(),
        ),
        (
            AmplitudeMatrix::M,
            i.n.clone() - &i.l,
            i.f.clone() + &i.d,
            i.m.clone(),
        ),
        (
            AmplitudeMatrix::N,
            i.l.clone() - &i.m,
            i.e.clone() + &i.f,
            i.n.clone(),
        ),
    ];
    for (which, quad, sext, det) in cyclic {
        let s = char_poly_s(&q, which)?;
        let want = [
            two.clone() * &i.h,
            h2.clone() + &(two.clone() * &quad),
            two.clone() * &sext,
            det.clone() * &det,
        ];
        rec.eq("block-trace-table", &s, &want, st);
    }

    let t = half_traces(&q, AmplitudeMatrix::L, 6)?;
    for p in 1..=6 {
        rec.eq(
            "half-trace-expansion",
            &Some(t[p - 1].clone()),
            &half_trace_closed_form(&i, p),
            st,
        );
    }

    let orders = [1usize, 2, 3, 4, 5, 6];
    let g = g_invariants(&q, &orders)?;
    for p in orders {
        rec.eq(
            "g-closed-form",
            &Some(g[&p].clone()),
            &g_closed_form(&i, p),
            st,
        );
    }
    let (g2, g6, g8, g10) = (&g[&1], &g[&3], &g[&4], &g[&5]);
    let lhs = int(32 * 81) * g10;
    let rhs = int(7) * &g2.pow(5) + &(int(8 * 243) * g2 * g8) - &(int(8 * 7 * 9) * &g2.pow(2) * g6);
    rec.eq("g10-syzygy", &lhs, &rhs, st);

    let f = f_prime_invariants(&q, &orders)?;
    let sl8 = sl8_trace_invariants(&psi, &orders, PairContraction::Restricted)?;
    for p in orders {
        rec.eq(
            "f'=2^(1-p)g",
            &f[&p],
            &(g[&p].clone() * &GaussRat::ratio(1, 1 << (p - 1))),
            st,
        );
        let sign = if p % 2 == 0 { 1 } else { -1 };
        rec.eq(
            "I=(-1)^p 2^p f'",
            &sl8[&p],
            &(f[&p].clone() * &int(sign << p)),
            st,
        );
    }

    let locals: Vec<_> = (0..4).map(|_| sample::sl2(rng)).collect();
    let moved = qubit_slocc_apply(&q, &locals, &[0, 1, 2, 3])?;
    rec.eq("slocc-invariance", &fourqubit_invariants(&moved)?, &i, st);
    Ok(())
}

// ---- roots ----

fn real_point(rng: &mut SeededRng, k: usize) -> Vec<GaussRat> {
    (0..k).map(|_| sample::real(rng)).collect()
}

fn sum_pow(x: &[GaussRat], e: u32) -> GaussRat {
    x.iter().fold(GaussRat::zero(), |a, v| a + &v.pow(e))
}

fn roots_once(rec: &mut Recorder) -> Step {
    let x = [1, 1, 1, 1].map(int);
    rec.eq(
        "bell-y-form",
        &semisimple_y_of_x(&x)?.to_vec(),
        &[1, 0, 1, 0].map(int).to_vec(),
        None,
    );
    rec.eq(
        "wallach-unit",
        &wallach_g(&[1, 0, 0, 0].map(int), 1)?,
        &int(6),
        None,
    );
    Ok(())
}

fn roots_trial(rng: &mut SeededRng, rec: &mut Recorder) -> Step {
    let x = real_point(rng, 4);
    let q = semisimple_qubit_state(&x)?;
    let psi = embed_single(&q);
    let st = Some(&psi);
    let inv = fourqubit_invariants(&q)?;
    rec.eq(
        "2H=sum x^2",
        &(inv.h.clone() * &int(2)),
        &sum_pow(&x, 2),
        st,
    );

    let sq: Vec<GaussRat> = x.iter().map(|v| v.clone() * v).collect();
    let mut mixed = GaussRat::zero();
    let mut triple = GaussRat::zero();
    for a in 0..4 {
        for b in 0..4 {
            if a != b {
                mixed = mixed + &(sq[a].clone() * &sq[b] * &sq[b]);
            }
        }
        for b in a + 1..4 {
            for c in b + 1..4 {
                triple = triple + &(sq[a].clone() * &sq[b] * &sq[c]);
            }
        }
    }
    let expect = sum_pow(&x, 6) - &mixed + &(int(18) * &triple);
    rec.eq("2^5 Gamma", &(inv.gamma.clone() * &int(32)), &expect, st);

    let orders = [1usize, 3, 4, 6];
    let g = g_invariants(&q, &orders)?;
    let i = sl8_trace_invariants(&psi, &orders, PairContraction::Restricted)?;
    let y = semisimple_y_of_x(&x)?;
    let f = f_closed(&q)?;
    for (k, p) in orders.into_iter().enumerate() {
        let pi = pi_2p(&x, p as u32)?;
        rec.eq(
            "pi=2^(2p+1)g",
            &pi,
            &(g[&p].clone() * &int(1 << (2 * p + 1))),
            st,
        );
        let sign = if p % 2 == 0 { 1 } else { -1 };
        rec.eq(
            "pi=(-1)^p 2^(2p) I",
            &pi,
            &(i[&p].clone() * &int(sign << (2 * p))),
            st,
        );
        rec.eq("wallach-form", &wallach_g(&y, p as u32)?, &g[&p], st);
        rec.eq(
            "F-closed-form",
            &f[k],
            &(wallach_g(&x, p as u32)? * &GaussRat::ratio(1, 6)),
            st,
        );
    }
    rec.eq(
        "y-x-round-trip",
        &semisimple_y_of_x(&semisimple_x_of_y(&y)?)?,
        &y,
        st,
    );
    Ok(())
}

// ---- e8 ----

fn e8_once(rec: &mut Recorder) -> Step {
    for alpha in 1..=8 {
        let e: St = e_state(alpha)?;
        rec.eq("omega-swaps-E", &omega(&e)?, &e_state(9 - alpha)?, Some(&e));
    }
    Ok(())
}

fn e8_trial(rng: &mut SeededRng, rec: &mut Recorder) -> Step {
    let y = real_point(rng, 8);
    let g = g_state(&y)?;
    let st = Some(&g);
    let orders = SPIN16_ORDERS.to_vec();
    let fast = g_state_invariants(&y, &orders, PairContraction::Restricted)?;
    let generic = spin16_invariants(&g, &orders, PairContraction::Restricted)?;
    let x = x_of_y(&y)?;
    for (k, &p) in orders.iter().enumerate() {
        let sign = if p % 2 == 0 { 1 } else { -1 };
        let scale = int(sign) * &int(2).pow(2 * p as u32 - 1);
        let expect = big_pi_2p(&x, p as u32)? * &scale;
        rec.eq("fast-path-vs-E8", &fast[k], &expect, st);
        rec.eq("generic-path-vs-E8", &generic[&p], &expect, st);
    }
    rec.eq(
        "(G,G)=2 sum y^2",
        &quadratic_form(&g),
        &(int(2) * &sum_pow(&y, 2)),
        st,
    );
    rec.check("G-is-majorana", is_majorana(&g), String::new, st);
    Ok(())
}

// ---- classify ----

fn nullity(s: &St) -> spinorlab::Result<usize> {
    Ok(annihilator_basis(s)?.nullity())
}

fn classify_once(rng: &mut SeededRng, rec: &mut Recorder) -> Step {
    for n in 1..=3 {
        for m in 0u32..1 << n {
            let s = St::basis(n, m, int(1))?;
            rec.check(
                "small-weyl-pure",
                is_pure_spinor(&s)?,
                String::new,
                Some(&s),
            );
        }
    }
    for n in 1..=8 {
        for k in 0..=n {
            let mut modes: Vec<usize> = (1..=n).collect();
            rand::seq::SliceRandom::shuffle(modes.as_mut_slice(), rng);
            modes.truncate(k);
            let s = St::product(n, &modes, sample::nonzero_gauss(rng))?;
            rec.eq("slater-nullity", &nullity(&s)?, &n, Some(&s));
        }
    }
    Ok(())
}

fn classify_trial(k: usize, seed: u64, rng: &mut SeededRng, rec: &mut Recorder) -> Step {
    let n = 2 + k % 7;
    let pure = random_pure_spinor(n, k % (n + 1), seed ^ ((k as u64) << 20))?;
    rec.eq(
        "b-transformed-slater-nullity",
        &nullity(&pure)?,
        &n,
        Some(&pure),
    );

    let small = 1 + k % 3;
    let s = sample::state(rng, small, 0.7, Some((k % 2) as u32));
    if !s.is_zero() {
        rec.check(
            "small-weyl-pure",
            is_pure_spinor(&s)?,
            String::new,
            Some(&s),
        );
    }

    let four = if k % 2 == 0 {
        sample::state(rng, 4, 0.5, Some((k / 2 % 2) as u32))
    } else {
        random_pure_spinor(4, k / 2 % 5, seed.wrapping_add(k as u64))?
    };
    if !four.is_zero() {
        let p = is_pure_spinor(&four)?;
        rec.eq(
            "four-mode-quadric",
            &p,
            &quadratic_form(&four).is_zero(),
            Some(&four),
        );
    }

    let m = [2usize, 4, 6, 8][k % 4];
    let s = sample::state(rng, m, 0.1, Some((k % 2) as u32));
    if !s.is_zero() {
        let basis = annihilator_basis(&s)?;
        let iso = basis
            .vectors
            .iter()
            .all(|x| basis.vectors.iter().all(|y| isotropy_form(x, y).is_zero()));
        rec.check(
            "annihilator-isotropic",
            iso && basis.nullity() <= m,
            String::new,
            Some(&s),
        );

        let before = basis.nullity();
        let b = sample::antisymmetric(rng, m, 0.4);
        let c = sample::antisymmetric(rng, m, 0.4);
        rec.eq(
            "nullity-b-invariant",
            &nullity(&b_transform(&b, &s)?)?,
            &before,
            Some(&s),
        );
        rec.eq(
            "nullity-c-invariant",
            &nullity(&c_transform(&c, &s)?)?,
            &before,
            Some(&s),
        );
    }
    let sector = sample::sector_state(rng, 4, 2, 0.5);
    if !sector.is_zero() {
        let mut g = spinorlab::linalg::identity(4);
        g[0][1] = sample::gauss(rng);
        g[2][0] = sample::gauss(rng);
        rec.eq(
            "nullity-gl-invariant",
            &nullity(&gl_sector_transform(&g, &sector)?)?,
            &nullity(&sector)?,
            Some(&sector),
        );
    }
    Ok(())
}
