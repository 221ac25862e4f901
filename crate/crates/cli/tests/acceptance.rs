//! Acceptance gate: one line per criterion, each with its own time limit.
//! Runs under a custom harness so the lines are never captured.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use yangian_qchar::cartan::LieType;
use yangian_qchar::characters::{
    asymptotic_char, fm_expand, kr_char, kr_weight_y, sl2_asymptotic_char, sl2_kr_char, stabilize,
};
use yangian_qchar::identities::{
    check_demazure_support, check_kr_skeleton, check_m_support, verify_tq, verify_tq_translation,
    verify_tsystem, verify_two_term, TwoTermParams,
};
use yangian_qchar::lweights::{expand_a_to_psi, expand_a_to_y, expand_y_to_psi, weight_projection, y_to_psi};
use yangian_qchar::rational::{q, qr, Q};
use yangian_qchar::sl2_explicit::{
    build_module, check_relations, extract_qchar, sl2_three_term_symbolic, verify_sl2_three_term, Sl2Kind,
};
use yangian_qchar::{AVector, CartanData, CharacterReport, EngineConfig, PsiMonomial, SpectralCoord};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    check: fn() -> Outcome,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn cfg() -> EngineConfig {
    EngineConfig::default()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sym(s: &str) -> SpectralCoord {
    s.parse().expect("coordinate")
}

fn random_rational(rng: &mut ChaCha8Rng) -> Q {
    qr(rng.gen_range(-40..=40), rng.gen_range(1..=11))
}

/// (type, node, k, t) instances of the T-system criterion.
fn tsystem_cases() -> Vec<(&'static str, usize, u32, u32)> {
    let mut out = Vec::new();
    for (ty, kmax, tmax) in [("A1", 3, 2), ("A2", 2, 1), ("B2", 2, 1), ("G2", 1, 1)] {
        let rank = CartanData::of(ty).unwrap().rank();
        for i in 0..rank {
            for k in 1..=kmax {
                for t in 0..=tmax {
                    out.push((ty, i, k, t));
                }
            }
        }
    }
    out
}

/// (type, node) instances of the TQ criterion.
const TQ_CASES: [(&str, usize); 4] = [("A1", 0), ("A2", 0), ("B2", 0), ("B2", 1)];

fn c1_vector_module() -> Outcome {
    let out = yqchar_cli::dispatch(["yqchar", "qchar", "kr", "--type", "A2", "--node", "1", "--k", "1", "--x", "0"]);
    ensure(out.code == 0, || format!("exit {}: {}", out.code, out.stderr))?;
    let v: Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
    let terms = v["character"]["terms"].as_array().ok_or("no terms")?;
    let got: Vec<(&str, u64)> = terms
        .iter()
        .map(|t| (t["lweight"].as_str().unwrap_or(""), t["coeff"].as_u64().unwrap_or(0)))
        .collect();
    let want = [
        ("Psi[1,1]/Psi[1,0]", 1),
        ("Psi[1,-1] Psi[2,1/2]/Psi[1,0]/Psi[2,-1/2]", 1),
        ("Psi[2,-3/2]/Psi[2,-1/2]", 1),
    ];
    ensure(got == want, || format!("got {got:?}"))?;
    Ok("three l-weights, multiplicity one".into())
}

fn c2_oracle() -> Outcome {
    let a1 = CartanData::of("A1").unwrap();
    let mut count = 0;
    for seed in 0..5u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = SpectralCoord::rational(random_rational(&mut rng));
        for k in 0..=6u32 {
            let engine = fm_expand(&a1, &kr_weight_y(&a1, 0, k, &x), None, &cfg()).map_err(|e| e.to_string())?;
            let oracle = sl2_kr_char(k, &x, None);
            ensure(engine == oracle, || format!("k = {k}, x = {x}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} characters identical"))
}

fn c3_tsystem() -> Outcome {
    let cases = tsystem_cases();
    for &(ty, i, k, t) in &cases {
        let cartan = CartanData::of(ty).unwrap();
        let r = verify_tsystem(&cartan, i, k, t, &cfg()).map_err(|e| e.to_string())?;
        ensure(r.pass && r.compared_up_to.is_none(), || {
            format!("{ty} node {} k={k} t={t}\n{}", i + 1, r.diff_table())
        })?;
    }
    Ok(format!("{} instances, complete characters", cases.len()))
}

fn c4_triangle() -> Outcome {
    let x = sym("x");
    let mut count = 0;
    for t in LieType::all_up_to_rank(4) {
        let cartan = CartanData::new(t);
        for i in cartan.nodes() {
            let via_y = y_to_psi(&cartan, &expand_a_to_y(&cartan, i, &x));
            ensure(via_y == expand_a_to_psi(&cartan, i, &x), || format!("{t} node {}", i + 1))?;
            count += 1;
        }
    }
    Ok(format!("{count} (type, node) pairs"))
}

fn c5_projection() -> Outcome {
    let x = sym("x");
    let mut count = 0;
    for t in LieType::all_up_to_rank(4) {
        let cartan = CartanData::new(t);
        for i in cartan.nodes() {
            let alpha = cartan.root_to_weight(&cartan.simple_root(i));
            let a = weight_projection(&cartan, &expand_a_to_psi(&cartan, i, &x)).to_rational();
            let y = weight_projection(&cartan, &expand_y_to_psi(&cartan, i, &x)).to_rational();
            ensure(a.as_ref() == Some(&alpha), || format!("A at {t} node {}", i + 1))?;
            ensure(y.as_ref() == Some(&cartan.fundamental_weight(i)), || format!("Y at {t} node {}", i + 1))?;
            count += 1;
        }
    }
    Ok(format!("{count} (type, node) pairs"))
}

fn c6_stabilization() -> Outcome {
    let x = SpectralCoord::zero();
    let mut count = 0;
    for ty in ["A1", "A2", "B2"] {
        let cartan = CartanData::of(ty).unwrap();
        for i in cartan.nodes() {
            for n in 1..=4u32 {
                let normalized = |k: u32| {
                    kr_char(&cartan, i, k, &x, Some(n), &cfg()).map(|c| c.with_top(PsiMonomial::identity()))
                };
                let (a, b) = (normalized(n).map_err(|e| e.to_string())?, normalized(n + 1).map_err(|e| e.to_string())?);
                ensure(a == b, || format!("{ty} node {} N={n}", i + 1))?;
                let s = stabilize(&cartan, i, &x, n, &cfg()).map_err(|e| e.to_string())?;
                ensure(s.index <= n, || format!("{ty} node {} N={n}: index {}", i + 1, s.index))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (type, node, N) triples, index <= N"))
}

fn c7_skeleton() -> Outcome {
    let x = SpectralCoord::zero();
    let mut terms = 0;
    for ty in ["A2", "B2", "G2"] {
        let cartan = CartanData::of(ty).unwrap();
        for i in cartan.nodes() {
            for k in 1..=3 {
                let r = check_kr_skeleton(&cartan, i, k, &x, 2, &cfg()).map_err(|e| e.to_string())?;
                ensure(r.pass, || format!("{ty} node {} k={k}: {:?}", i + 1, r.violations))?;
                terms += r.checked_terms;
            }
        }
    }
    Ok(format!("{terms} terms of height <= 2 conform"))
}

fn c8_tq() -> Outcome {
    let x = SpectralCoord::zero();
    for (ty, i) in TQ_CASES {
        let cartan = CartanData::of(ty).unwrap();
        let r = verify_tq(&cartan, i, &x, &[6, 12], 3, &cfg()).map_err(|e| e.to_string())?;
        let all = r
            .cases
            .iter()
            .all(|c| c.direct.pass && c.via_ses.pass && c.routes.pass && c.lifted.pass);
        ensure(r.pass && all && r.proxy.iter().all(|p| p.2.pass), || format!("{ty} node {}", i + 1))?;
    }
    Ok("R1, R2 and RHS agree at k = 6, 12; renamed k = 6 and k = 12 agree".into())
}

fn c9_two_term() -> Outcome {
    let (a, b, x, y) = (sym("a"), sym("b"), sym("x"), sym("y"));
    let p = TwoTermParams { a: &a, b: &b, x: &x, y: &y };
    let mut sizes = Vec::new();
    for (ty, i) in [("A1", 0), ("G2", 0)] {
        let cartan = CartanData::of(ty).unwrap();
        let r = verify_two_term(&cartan, i, &p, 3, &cfg()).map_err(|e| e.to_string())?;
        ensure(r.pass, || format!("{ty}\n{}", r.diff_table()))?;
        sizes.push(format!("{ty} {} terms", r.lhs.len()));
    }
    Ok(format!("symbolic a, b, x, y; {}", sizes.join(", ")))
}

fn c10_explicit() -> Outcome {
    let mut modules = 0;
    for seed in 0..3u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(100 + seed);
        let x = random_rational(&mut rng);
        let xs = SpectralCoord::rational(x);
        let mut kinds: Vec<Sl2Kind> = (0..=4).map(|k| Sl2Kind::Finite { k }).collect();
        kinds.extend([qr(7, 3), qr(-5, 2)].map(|k| Sl2Kind::Truncated { k, dim: 8 }));
        for kind in kinds {
            let m = build_module(kind.clone(), &x, 3).map_err(|e| e.to_string())?;
            let r = check_relations(&m, 3).map_err(|e| e.to_string())?;
            ensure(r.pass, || format!("{kind:?} at x = {x}: {:?}", r.failure))?;
            let extracted = extract_qchar(&m).map_err(|e| e.to_string())?;
            let oracle = match kind {
                Sl2Kind::Finite { k } => sl2_kr_char(k, &xs, None),
                Sl2Kind::Truncated { k, dim } => sl2_asymptotic_char(&SpectralCoord::rational(x + k), &xs, dim as u32 - 1),
            };
            ensure(extracted == oracle, || format!("character of {kind:?} at x = {x}"))?;
            modules += 1;
        }
    }
    Ok(format!("{modules} modules, relations and characters exact"))
}

fn engine_three_term(x: &Q, y: &Q, m: usize, n: u32) -> Result<CharacterReport, String> {
    let a1 = CartanData::of("A1").unwrap();
    let (xs, ys) = (SpectralCoord::rational(*x), SpectralCoord::rational(*y));
    let asym = |b: Q| asymptotic_char(&a1, 0, &SpectralCoord::rational(b), &ys, m as u32 - 1, &cfg());
    let vector = kr_char(&a1, 0, 1, &xs, None, &cfg()).map_err(|e| e.to_string())?;
    let lhs = vector.mul(&asym(*x).map_err(|e| e.to_string())?).truncate(n);
    let rhs = asym(x + q(1))
        .and_then(|up| up.add_shifted(&a1, &asym(x - q(1))?, &AVector::inv_root(0, xs.clone(), 1)))
        .map_err(|e| e.to_string())?
        .truncate(n);
    Ok(CharacterReport::compare(lhs, rhs))
}

fn c11_three_term() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pairs = vec![(q(0), qr(1, 2)), (qr(1, 3), qr(1, 3))];
    pairs.push((random_rational(&mut rng), random_rational(&mut rng)));
    for (x, y) in &pairs {
        let explicit = verify_sl2_three_term(x, y, 8, 3).map_err(|e| e.to_string())?;
        ensure(explicit.pass, || format!("x = {x}, y = {y}\n{}", explicit.diff_table()))?;
        let closed = sl2_three_term_symbolic(x, y, 8, 3).map_err(|e| e.to_string())?;
        let engine = engine_three_term(x, y, 8, 3)?;
        ensure(explicit == closed && explicit == engine, || format!("x = {x}, y = {y}: sources differ"))?;
    }
    Ok(format!("{} parameter pairs, explicit = closed form = engine", pairs.len()))
}

fn c12_support() -> Outcome {
    let mut terms = 0;
    for (ty, i, k, t) in tsystem_cases() {
        if t != 1 {
            continue;
        }
        let cartan = CartanData::of(ty).unwrap();
        let base = SpectralCoord::rational(cartan.d_q(i) * q(k as i64 + 1));
        let r = check_demazure_support(&cartan, i, k, &base, None, &cfg()).map_err(|e| e.to_string())?;
        ensure(r.pass, || format!("Demazure {ty} node {} k={k}: {:?}", i + 1, r.violations))?;
        terms += r.checked_terms;
    }
    let x = SpectralCoord::zero();
    for (ty, i) in TQ_CASES {
        let cartan = CartanData::of(ty).unwrap();
        for k in [6, 12] {
            let d = check_demazure_support(&cartan, i, k, &x, Some(3), &cfg()).map_err(|e| e.to_string())?;
            let m = check_m_support(&cartan, i, k, &x, 3, &cfg()).map_err(|e| e.to_string())?;
            ensure(d.pass && m.pass, || format!("{ty} node {} k={k}: {:?} {:?}", i + 1, d.violations, m.violations))?;
            terms += d.checked_terms + m.checked_terms;
        }
    }
    Ok(format!("{terms} terms inside their cones"))
}

fn c13_translation() -> Outcome {
    let a2 = CartanData::of("A2").unwrap();
    let r = verify_tq_translation(&a2, 0, &sym("x"), &sym("y"));
    ensure(r.pass, || format!("{}\n  vs {}", r.translated, r.quantum))?;
    Ok(r.translated.to_string())
}

fn main() {
    let criteria = [
        Criterion { id: 1, title: "sl3 vector-module character", limit: secs(1), check: c1_vector_module },
        Criterion { id: 2, title: "expansion engine vs sl2 closed form", limit: secs(5), check: c2_oracle },
        Criterion { id: 3, title: "T-system with Demazure kernel", limit: secs(120), check: c3_tsystem },
        Criterion { id: 4, title: "A -> Y -> Psi consistency triangle", limit: secs(5), check: c4_triangle },
        Criterion { id: 5, title: "weight projection of A and Y", limit: secs(5), check: c5_projection },
        Criterion { id: 6, title: "stabilization of normalized KR characters", limit: secs(120), check: c6_stabilization },
        Criterion { id: 7, title: "KR height-2 skeleton", limit: secs(60), check: c7_skeleton },
        Criterion { id: 8, title: "TQ relation at height 3", limit: secs(300), check: c8_tq },
        Criterion { id: 9, title: "two-term exchange identity", limit: secs(30), check: c9_two_term },
        Criterion { id: 10, title: "explicit sl2 modules", limit: secs(60), check: c10_explicit },
        Criterion { id: 11, title: "sl2 three-term identity from matrices", limit: secs(30), check: c11_three_term },
        Criterion { id: 12, title: "Demazure and m-support cones", limit: secs(120), check: c12_support },
        Criterion { id: 13, title: "multiplicative translation of TQ", limit: secs(5), check: c13_translation },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let (verdict, detail) = match &result {
            Ok(d) if elapsed <= c.limit => ("PASS", d.clone()),
            Ok(d) => ("FAIL", format!("too slow; {d}")),
            Err(e) => ("FAIL", e.clone()),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} {verdict}  {} ({:.2} s, limit {} s): {}",
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            detail.lines().next().unwrap_or("")
        );
        if verdict == "FAIL" && detail.lines().count() > 1 {
            println!("{detail}");
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
