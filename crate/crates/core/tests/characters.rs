//! Characters against independent oracles.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use yangian_qchar::characters::{
    asymptotic_char, char_mul_with, demazure_char_direct, demazure_char_via_ses, fm_expand, kr_char, kr_weight_y,
    sl2_asymptotic_char, sl2_kr_char, stabilize,
};
use yangian_qchar::identities::kr_skeleton_of;
use yangian_qchar::identities::support::denominator_offsets;
use yangian_qchar::rational::qr;
use yangian_qchar::{AVector, CartanData, EngineConfig, EngineError, Exec, Site, SpectralCoord, YMonomial};

fn cfg() -> EngineConfig {
    EngineConfig::default()
}

fn random_x(rng: &mut ChaCha8Rng) -> SpectralCoord {
    SpectralCoord::rational(qr(rng.gen_range(-60..=60), rng.gen_range(1..=13)))
}

#[test]
fn sl2_engine_matches_closed_form() {
    let a1 = CartanData::of("A1").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..8 {
        let x = random_x(&mut rng);
        for k in 0..=8 {
            let engine = fm_expand(&a1, &kr_weight_y(&a1, 0, k, &x), None, &cfg()).unwrap();
            assert_eq!(engine, sl2_kr_char(k, &x, None));
            assert_eq!(kr_char(&a1, 0, k, &x, Some(3), &cfg()).unwrap(), sl2_kr_char(k, &x, Some(3)));
        }
        let y = random_x(&mut rng);
        assert_eq!(asymptotic_char(&a1, 0, &y, &x, 5, &cfg()).unwrap(), sl2_asymptotic_char(&y, &x, 5));
    }
}

#[test]
fn type_a_dimensions() {
    // KR modules of sl_n are irreducible over sl_n: rectangles k * omega_i.
    let a2 = CartanData::of("A2").unwrap();
    for k in 1..=4u64 {
        let ch = kr_char(&a2, 0, k as u32, &SpectralCoord::zero(), None, &cfg()).unwrap();
        assert_eq!(ch.total_multiplicity(), (k + 1) * (k + 2) / 2);
    }
    let a3 = CartanData::of("A3").unwrap();
    let ch = kr_char(&a3, 1, 2, &SpectralCoord::zero(), None, &cfg()).unwrap();
    assert_eq!(ch.total_multiplicity(), 20);
}

#[test]
fn sequential_and_parallel_agree() {
    let g2 = CartanData::of("G2").unwrap();
    let top = kr_weight_y(&g2, 1, 2, &SpectralCoord::zero());
    let seq = fm_expand(&g2, &top, Some(6), &cfg().with_exec(Exec::Sequential)).unwrap();
    let par = fm_expand(&g2, &top, Some(6), &cfg().with_exec(Exec::Parallel)).unwrap();
    assert_eq!(seq, par);
    assert_eq!(
        char_mul_with(Exec::Sequential, &seq, &par),
        char_mul_with(Exec::Parallel, &seq, &par)
    );
}

#[test]
fn products_commute_and_shift() {
    let b2 = CartanData::of("B2").unwrap();
    let x = SpectralCoord::symbol("x");
    let a = kr_char(&b2, 0, 1, &x, None, &cfg()).unwrap();
    let b = kr_char(&b2, 1, 2, &SpectralCoord::int(1), None, &cfg()).unwrap();
    assert_eq!(a.mul(&b), b.mul(&a));
    let s = SpectralCoord::rational(qr(3, 2));
    assert_eq!(a.mul(&b).shift(&s), a.shift(&s).mul(&b.shift(&s)));
}

#[test]
fn demazure_routes_agree_and_stay_positive() {
    for (ty, kmax) in [("A2", 2), ("B2", 2), ("C3", 1)] {
        let c = CartanData::of(ty).unwrap();
        for i in c.nodes() {
            for k in 1..=kmax {
                let x = SpectralCoord::symbol("x");
                let ses = demazure_char_via_ses(&c, i, 1, k, &x, None, &cfg()).unwrap();
                let direct = demazure_char_direct(&c, i, 1, k, &x, None, &cfg()).unwrap();
                assert_eq!(ses, direct, "{ty} node {} k={k}", i + 1);
                assert!(ses.terms().values().all(|c| *c > 0));
            }
        }
    }
}

#[test]
fn stabilization_index_is_small() {
    for ty in ["A1", "A2", "B2", "G2"] {
        let c = CartanData::of(ty).unwrap();
        for i in c.nodes() {
            let s = stabilize(&c, i, &SpectralCoord::zero(), 3, &cfg()).unwrap();
            assert!(s.index <= 3, "{ty} node {}: {}", i + 1, s.index);
            assert!(s.character.top().is_identity());
        }
    }
}

#[test]
fn tiny_ceiling_reports_stabilization_failure() {
    let c = CartanData::of("A2").unwrap();
    let tight = EngineConfig { k_ceiling: 1, ..cfg() };
    let err = stabilize(&c, 0, &SpectralCoord::zero(), 4, &tight).unwrap_err();
    assert!(matches!(err, EngineError::Stabilization { .. }));
    assert!(err.is_resource_limit());
}

#[test]
fn non_dominant_input_rejected() {
    let c = CartanData::of("A2").unwrap();
    let m = YMonomial::from_entries([(Site::new(0, SpectralCoord::zero()), -1)]);
    assert!(matches!(fm_expand(&c, &m, None, &cfg()), Err(EngineError::NonDominant { .. })));
}

/// For `c_{ii'} = -1` the second factor of a height-two l-weight of the KR
/// module sits at `x + d_{ii'}`; the sign-flipped offset `x - d_{ii'}` must
/// not describe the computed characters.
#[test]
fn table_offsets_point_the_right_way() {
    let x = SpectralCoord::zero();
    for ty in ["A2", "B2", "G2"] {
        let c = CartanData::of(ty).unwrap();
        for i in c.nodes() {
            for j in c.nodes().filter(|&j| c.c(i, j) == -1) {
                for k in 1..=3 {
                    let ch = kr_char(&c, i, k, &x, Some(2), &cfg()).unwrap();
                    assert!(kr_skeleton_of(&c, i, k, &x, &ch).pass);
                    let offsets = denominator_offsets(&c, i, j, k);
                    assert_eq!(offsets, vec![c.dsym(i, j)]);
                    let first = AVector::inv_root(i, x.clone(), 1);
                    let good = first.mul(&AVector::inv_root(j, &x + c.dsym(i, j), 1));
                    let mirrored = first.mul(&AVector::inv_root(j, &x - c.dsym(i, j), 1));
                    assert_eq!(ch.coeff(&good), 1, "{ty} node {} k={k}", i + 1);
                    assert_eq!(ch.coeff(&mirrored), 0, "{ty} node {} k={k}", i + 1);
                }
            }
        }
    }
}

#[test]
fn budget_is_enforced() {
    let g2 = CartanData::of("G2").unwrap();
    let tight = EngineConfig { term_budget: 20, ..cfg() };
    let err = fm_expand(&g2, &kr_weight_y(&g2, 1, 2, &SpectralCoord::zero()), None, &tight).unwrap_err();
    assert!(err.is_resource_limit());
}
