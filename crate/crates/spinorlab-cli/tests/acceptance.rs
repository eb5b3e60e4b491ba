//! One PASS/FAIL line per acceptance criterion.
//!
//! Runs without the libtest harness. A criterion known to be unattainable is
//! still run and still prints FAIL; the process only exits nonzero when a
//! result differs from the expectation recorded here.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::Rng;
use spinorlab::covariants::{r_lower, rho_tensor};
use spinorlab::embed::{embed_single, mirror_table};
use spinorlab::invariants::{g_invariants, PairContraction, SPIN16_ORDERS};
use spinorlab::linalg;
use spinorlab::pairing::{is_majorana, mukai, pairing_symmetry, spin_flip};
use spinorlab::roots::{
    big_pi_2p, g_state, g_state_invariants, g_state_trace_jacobian, jacobian_rank,
    semisimple_qubit_state, y_of_x, Polynomial, RootSet,
};
use spinorlab::sample::{self, SeededRng};
use spinorlab::{FockState, GaussRat, Scalar};
use spinorlab_cli::report::SuiteV1;
use spinorlab_cli::state_file::canonicalize;
use spinorlab_cli::suites::{self, Suite};

#[path = "../../spinorlab/tests/support/printed_mirror.rs"]
mod printed_mirror;

type Verdict = Result<String, String>;

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    /// `false` for a criterion that cannot hold; see the detail it prints.
    attainable: bool,
    run: fn() -> Verdict,
}

const SEED: u64 = 7;

fn suite(name: Suite, trials: usize) -> Verdict {
    let s = suites::run(name, trials, SEED);
    summarize(&s)
}

fn summarize(s: &SuiteV1) -> Verdict {
    let line = format!(
        "{} trials, {} checks passed, {} failed",
        s.trials, s.passed, s.failed
    );
    if s.failed == 0 && s.passed > 0 {
        Ok(line)
    } else {
        let bad: Vec<String> = s
            .identities
            .iter()
            .filter(|i| i.failed > 0)
            .map(|i| format!("{} ({} failed)", i.name, i.failed))
            .collect();
        Err(format!("{line}: {}", bad.join(", ")))
    }
}

fn require(ok: bool, what: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn car() -> Verdict {
    suite(Suite::Car, 100)
}

fn pairing() -> Verdict {
    // trial k draws its B/C transforms at N = 4, 6, 8 in turn, 100 each
    suite(Suite::Pairing, 300)
}

fn fourqubit() -> Verdict {
    suite(Suite::FourqubitIdentities, 200)
}

fn semisimple() -> Verdict {
    suite(Suite::Roots, 100)
}

fn e8() -> Verdict {
    let s = suites::run(Suite::E8, 10, SEED);
    let generic = s.identities.iter().find(|i| i.name == "generic-path-vs-E8");
    require(
        generic.is_some_and(|g| g.passed == 10 * SPIN16_ORDERS.len()),
        "generic path did not cover all eight orders on ten points",
    )?;
    summarize(&s)
}

fn ints(v: &[i64]) -> Vec<GaussRat> {
    v.iter().map(|&x| GaussRat::int(x)).collect()
}

/// Integer point off every reflection hyperplane of the root set.
fn generic_point(rng: &mut SeededRng, set: &RootSet) -> Vec<GaussRat> {
    loop {
        let x: Vec<i64> = (0..set.vars())
            .map(|_| 2 * rng.gen_range(-20i64..=20))
            .collect();
        let regular = set
            .doubled_forms()
            .iter()
            .all(|f| f.iter().zip(&x).map(|(a, b)| a * b).sum::<i64>() != 0);
        if regular {
            return ints(&x);
        }
    }
}

/// Full rank at one of a few generic points; a deficient point is retried.
fn full_rank(
    want: usize,
    mut rank_at: impl FnMut(&mut SeededRng) -> usize,
) -> Result<usize, String> {
    let mut rng = sample::rng(SEED);
    let mut seen = Vec::new();
    for _ in 0..3 {
        let r = rank_at(&mut rng);
        if r == want {
            return Ok(r);
        }
        seen.push(r);
    }
    Err(format!("rank {seen:?}, wanted {want}"))
}

fn independence() -> Verdict {
    let e8 = RootSet::e8();
    let pi = full_rank(8, |rng| {
        let polys: Vec<Polynomial<'_, GaussRat>> = SPIN16_ORDERS
            .iter()
            .map(|&p| Polynomial::new(2 * p, move |v: &[GaussRat]| big_pi_2p(v, p as u32).unwrap()))
            .collect();
        jacobian_rank(&polys, &generic_point(rng, &e8))
    })?;
    let spin16 = full_rank(8, |rng| {
        let y = y_of_x(&generic_point(rng, &e8)).unwrap();
        linalg::rank(&g_state_trace_jacobian(&y, &SPIN16_ORDERS).unwrap())
    })?;
    let f4 = RootSet::f4();
    let g = full_rank(4, |rng| {
        let polys: Vec<Polynomial<'_, GaussRat>> = [1usize, 3, 4, 6]
            .iter()
            .map(|&p| {
                Polynomial::new(2 * p, move |v: &[GaussRat]| {
                    g_invariants(&semisimple_qubit_state(v).unwrap(), &[p]).unwrap()[&p].clone()
                })
            })
            .collect();
        jacobian_rank(&polys, &generic_point(rng, &f4))
    })?;
    Ok(format!(
        "ranks: E8 power sums {pi}, spin16 traces {spin16}, g family {g}"
    ))
}

fn classification() -> Verdict {
    suite(Suite::Classify, 200)
}

fn mirror() -> Verdict {
    let table = mirror_table();
    require(
        table.len() == 32,
        "generated table does not have 32 entries",
    )?;
    let bad = printed_mirror::printed_mismatches();
    if bad.is_empty() {
        Ok("all 32 entries agree".into())
    } else {
        let mut msg = format!(
            "{} of 32 printed entries differ from the generated map:",
            bad.len()
        );
        for line in bad {
            msg.push_str("\n        ");
            msg.push_str(&line);
        }
        Err(msg)
    }
}

fn majorana() -> Verdict {
    let mut rng = sample::rng(SEED);
    for t in 0..100 {
        let n = 2 + t % 7;
        let a = sample::state(&mut rng, n, 0.5, None);
        let b = sample::state(&mut rng, n, 0.5, None);
        let f = spin_flip(&a);
        require(
            f.hermitian_inner(&b).unwrap() == mukai(&a, &b).unwrap(),
            "flip does not realise the pairing",
        )?;
        let sign = GaussRat::int(pairing_symmetry(n) as i64);
        require(
            spin_flip(&f) == a.scale(&sign),
            "flip twice is not the symmetry sign",
        )?;
    }
    for _ in 0..20 {
        let y: Vec<GaussRat> = (0..8).map(|_| sample::real(&mut rng)).collect();
        let g = g_state(&y).unwrap();
        require(is_majorana(&g), "real G(y) is not Majorana")?;
        require(
            g.is_zero() || !is_majorana(&g.scale(&GaussRat::imag_unit())),
            "i G(y) is Majorana",
        )?;
    }
    let two = GaussRat::int(2);
    for _ in 0..5 {
        let q = sample::qubit_state(&mut rng, 4);
        let e = embed_single(&q);
        let psi: FockState<GaussRat> = e.plus(&spin_flip(&e));
        require(is_majorana(&psi), "ψ + ψ̃ is not Majorana")?;
        let (r, rho) = (r_lower(&psi).unwrap(), rho_tensor(&psi));
        let d = r.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        require(
                            r.get(i, j, k, l) == &(rho.get(i, j, k, l).clone() * &two),
                            "R != 2 rho",
                        )?;
                    }
                }
            }
        }
    }
    Ok("100 flip pairs, 20 G(y), 5 embedded Majorana states".into())
}

fn bin(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_spinorlab"))
        .args(args)
        .env_remove("SPINORLAB_SEED")
        .output()
        .expect("binary runs")
}

fn cli() -> Verdict {
    let dir = std::env::temp_dir().join(format!("spinorlab-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = |name: &str| dir.join(name).to_str().unwrap().to_string();

    let made = bin(&["make", "gstate", "--y", "1,-2,1/2,0,3,0,1,1"]);
    require(made.status.code() == Some(0), "make gstate failed")?;
    let text = String::from_utf8(made.stdout).unwrap();
    require(
        canonicalize(&text).is_ok_and(|c| c == text),
        "make output is not canonical",
    )?;
    let g = path("g.json");
    std::fs::write(&g, &text).unwrap();

    let report = [
        "invariants",
        "--state",
        g.as_str(),
        "--family",
        "spin16",
        "--orders",
        "1,4",
    ];
    require(
        bin(&report).stdout == bin(&report).stdout,
        "invariants report not deterministic",
    )?;
    let verify = ["verify", "--suite", "roots", "--trials", "5", "--seed", "3"];
    let v = bin(&verify);
    require(v.status.code() == Some(0), "verify roots failed")?;
    require(
        v.stdout == bin(&verify).stdout,
        "verify report not deterministic",
    )?;

    let mut y: Vec<GaussRat> = ints(&[1, -2, 0, 0, 3, 0, 1, 1]);
    y[2] = GaussRat::ratio(1, 2);
    let fast = g_state_invariants(&y, &[1, 4], PairContraction::Restricted).unwrap();
    let json: serde_json::Value = serde_json::from_slice(&bin(&report).stdout).unwrap();
    require(
        json["values"]["I2"]["value"]["re"] == fast[0].re.to_string()
            && json["values"]["I8"]["value"]["re"] == fast[1].re.to_string(),
        "spin16 report disagrees with the fast path",
    )?;

    let bad = path("bad.json");
    std::fs::write(&bad, "{").unwrap();
    let zero = path("zero.json");
    std::fs::write(
        &zero,
        r#"{"modes":2,"scalar":"gaussian-rational","terms":[]}"#,
    )
    .unwrap();
    let codes = [
        (bin(&["classify", "--state", bad.as_str()]).status.code(), 2),
        (bin(&["verify", "--suite", "nope"]).status.code(), 2),
        (bin(&["make", "gstate", "--y", "1,2"]).status.code(), 2),
        (
            bin(&["classify", "--state", zero.as_str()]).status.code(),
            3,
        ),
        (
            bin(&["invariants", "--state", zero.as_str(), "--family", "sl8"])
                .status
                .code(),
            3,
        ),
    ];
    let _ = std::fs::remove_dir_all(&dir);
    for (got, want) in codes {
        require(
            got == Some(want),
            &format!("exit code {got:?}, wanted {want}"),
        )?;
    }
    Ok("canonical round trip, deterministic reports, exit codes 0/2/3".into())
}

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            title: "CAR/Clifford battery",
            limit: secs(10),
            attainable: true,
            run: car,
        },
        Criterion {
            id: 2,
            title: "pairing battery",
            limit: secs(30),
            attainable: true,
            run: pairing,
        },
        Criterion {
            id: 3,
            title: "four-qubit identity suite",
            limit: secs(180),
            attainable: true,
            run: fourqubit,
        },
        Criterion {
            id: 4,
            title: "semisimple/F4 suite",
            limit: secs(60),
            attainable: true,
            run: semisimple,
        },
        Criterion {
            id: 5,
            title: "E8 headline, both trace paths",
            limit: secs(600),
            attainable: true,
            run: e8,
        },
        Criterion {
            id: 6,
            title: "algebraic independence",
            limit: secs(120),
            attainable: true,
            run: independence,
        },
        Criterion {
            id: 7,
            title: "classification",
            limit: secs(60),
            attainable: true,
            run: classification,
        },
        // The generated map agrees on every Z entry plus η̃ and ξ̃, but the printed
        // U/W rows place U_i in X̃^{jk} where the operator puts it in Y_{jk}.
        Criterion {
            id: 8,
            title: "mirror dictionary vs printed table",
            limit: secs(5),
            attainable: false,
            run: mirror,
        },
        Criterion {
            id: 9,
            title: "Majorana",
            limit: secs(30),
            attainable: true,
            run: majorana,
        },
        Criterion {
            id: 10,
            title: "CLI contract",
            limit: secs(30),
            attainable: true,
            run: cli,
        },
    ]
}

fn main() -> ExitCode {
    let only: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut surprises = 0;
    for c in criteria() {
        if !only.is_empty()
            && !only
                .iter()
                .any(|o| c.title.contains(o.as_str()) || *o == c.id.to_string())
        {
            continue;
        }
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        let verdict = match verdict {
            Ok(_) if took > c.limit => Err(format!("took {took:.1?}, limit {:?}", c.limit)),
            v => v,
        };
        let (tag, detail) = match &verdict {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        let note = match (verdict.is_ok(), c.attainable) {
            (true, true) | (false, false) => "",
            (false, true) => "  [unexpected]",
            (true, false) => "  [unexpected pass]",
        };
        if !note.is_empty() {
            surprises += 1;
        }
        let known = if !c.attainable && verdict.is_err() {
            "  [known]"
        } else {
            ""
        };
        println!(
            "{tag} {:>2} {} ({took:.1?}, limit {:?}){note}{known}\n       {detail}",
            c.id, c.title, c.limit
        );
    }
    if surprises == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
