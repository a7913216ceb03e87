use proptest::prelude::*;
use qprob_core::channel::{
    apply_channel_via_choi, apply_kraus, choi_from_kraus, kraus_from_choi, superop_from_choi, verify_cptp, KrausSet,
    Verdict, DEFAULT_TOL,
};
use qprob_core::linalg::{unitary_exp, vec, ComplexMatrix, C64};
use qprob_core::probchannel::{check_channel_prob_constraints, AffineConstants, ChannelProbs};
use qprob_core::random;
use qprob_core::state::{ququart_probs_from_density, ProbVector15};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn random_tp_kraus_sets_are_cptp() {
    let mut rng = rng(21);
    for _ in 0..1000 {
        let count = rng.gen_range(1..=4);
        let k = random::tp_kraus(&mut rng, count);
        let report = verify_cptp(&choi_from_kraus(&k), 1e-9);
        assert_eq!(report.verdict, Verdict::Cptp, "{report:?}");
        assert!((report.trace_value - 2.0).abs() <= 1e-12);
    }
}

#[test]
fn kraus_and_choi_routes_agree() {
    let mut rng = rng(22);
    for _ in 0..1000 {
        let count = rng.gen_range(1..=4);
        let k = random::tp_kraus(&mut rng, count);
        let rho = random::density(&mut rng, 2);
        let d = choi_from_kraus(&k);
        let direct = apply_kraus(&k, &rho).unwrap();
        assert!(direct.max_abs_diff(&apply_channel_via_choi(&d, &rho).unwrap()) <= 1e-12);
        assert!(direct.max_abs_diff(&superop_from_choi(&d).apply(&rho).unwrap()) <= 1e-12);
        assert!((direct.trace().re - 1.0).abs() <= 1e-12);
        assert!(direct.hermiticity_defect() <= 1e-15);
    }
}

#[test]
fn kraus_extraction_reproduces_the_choi_matrix() {
    let mut rng = rng(23);
    for _ in 0..500 {
        let count = rng.gen_range(1..=4);
        let d = choi_from_kraus(&random::tp_kraus(&mut rng, count));
        let extracted = kraus_from_choi(&d, DEFAULT_TOL).unwrap();
        assert!(extracted.len() <= 4);
        assert!(choi_from_kraus(&extracted).matrix().max_abs_diff(d.matrix()) <= 1e-10);
    }
}

#[test]
fn unitary_choi_is_rank_one() {
    let mut rng = rng(24);
    for _ in 0..100 {
        let u = unitary_exp(&random::hermitian(&mut rng, 2), 1.0).unwrap();
        let v = vec(&u).unwrap();
        let d = choi_from_kraus(&KrausSet::new(vec![u]).unwrap());
        assert_eq!(d.matrix(), &v.outer(&v));
    }
}

#[test]
fn choi_trace_tracks_trace_preservation() {
    let mut rng = rng(25);
    for _ in 0..200 {
        let k = random::tp_kraus(&mut rng, 2);
        assert!(k.tp_defect() <= 1e-12);
        assert!((choi_from_kraus(&k).matrix().trace().re - 2.0).abs() <= 1e-12);

        let scaled: Vec<ComplexMatrix> = k.ops().iter().map(|a| a.scale(C64::new(1.05, 0.0))).collect();
        let scaled = KrausSet::new(scaled).unwrap();
        assert!(scaled.tp_defect() > 1e-12);
        assert!((choi_from_kraus(&scaled).matrix().trace().re - 2.0).abs() > 1e-12);
        assert_eq!(verify_cptp(&choi_from_kraus(&scaled), DEFAULT_TOL).verdict, Verdict::CpNotTp);
    }
}

#[test]
fn channel_probability_round_trips_and_bounds() {
    let consts = AffineConstants::new();
    let mut rng = rng(26);
    for _ in 0..1000 {
        let count = rng.gen_range(1..=4);
        let d = choi_from_kraus(&random::tp_kraus(&mut rng, count));
        let p = consts.probs_from_choi(&d).unwrap();
        assert!(consts.choi_from_probs(&p).matrix().max_abs_diff(d.matrix()) <= 1e-13);

        let check = check_channel_prob_constraints(&p, 1e-12);
        assert!(check.satisfied, "{check:?}");
        assert!(p.as_array().iter().all(|&x| (-1e-10..=1.0 + 1e-10).contains(&x)));

        let half = d.matrix().scale(C64::new(0.5, 0.0));
        let as_state = ququart_probs_from_density(&half).unwrap();
        assert!(as_state.max_abs_diff(&p.0) <= 1e-13);
    }
}

proptest! {
    #[test]
    fn probs_choi_probs_is_identity(values in prop::array::uniform15(-2.0..2.0f64)) {
        let consts = AffineConstants::new();
        let p = ChannelProbs(ProbVector15(values));
        let back = consts.probs_from_choi(&consts.choi_from_probs(&p)).unwrap();
        prop_assert!(back.max_abs_diff(&p) <= 1e-13);
        prop_assert_eq!(consts.choi_from_probs(&p).matrix().hermiticity_defect(), 0.0);
    }
}
