use degseq_core::bounds::{
    counterexample_family, extremal_pair, in_central_window, mean_case, theorem1_certify,
    theorem2_certify, CertDetail, CertStatus, MeanCase,
};
use degseq_core::graphicality::is_graphic;
use degseq_core::search::{enumerate_bounded_sequences, maximal_sequence};
use degseq_core::{DegreeSequence, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn assert_sound(seq: &DegreeSequence) {
    let graphic = is_graphic(seq);
    for (name, out) in [
        ("thm1", theorem1_certify(seq)),
        ("thm2", theorem2_certify(seq)),
    ] {
        if out.is_certified() {
            assert!(graphic, "{name} certified non-graphic {seq}: {out:?}");
        }
    }
}

#[test]
fn certifiers_sound_exhaustive() {
    let mut certified = 0;
    for n in 1..=9usize {
        for seq in enumerate_bounded_sequences(n, 0, n as u32 - 1) {
            assert_sound(&seq);
            certified += theorem2_certify(&seq).is_certified() as usize;
        }
    }
    assert!(certified > 300, "{certified}");
}

/// Random sequences drawn close to their mean so that the certifiers
/// actually fire.
#[test]
fn certifiers_sound_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut fired = [0usize; 2];
    for _ in 0..20_000 {
        let n = rng.gen_range(2..=100usize);
        let centre = rng.gen_range(0..n as u32);
        let width = rng.gen_range(0..=(n as u32 / 2).max(1));
        let values: Vec<u32> = (0..n)
            .map(|_| {
                let lo = centre.saturating_sub(width);
                let hi = (centre + width).min(n as u32 - 1);
                rng.gen_range(lo..=hi)
            })
            .collect();
        let seq = DegreeSequence::new(values).unwrap();
        assert_sound(&seq);
        fired[0] += theorem1_certify(&seq).is_certified() as usize;
        fired[1] += theorem2_certify(&seq).is_certified() as usize;
    }
    assert!(fired[0] > 500 && fired[1] > 500, "{fired:?}");
}

#[test]
fn theorem2_never_certifies_outside_its_bound() {
    for n in 2..=9usize {
        for seq in enumerate_bounded_sequences(n, 0, n as u32 - 1) {
            let out = theorem2_certify(&seq);
            if let CertDetail::Regularity {
                case,
                mean,
                rg,
                bound,
            } = out.detail
            {
                assert_eq!(case, mean_case(seq.sum(), n));
                assert_eq!(mean, seq.mean());
                assert_eq!(rg, seq.rg());
                assert_eq!(out.is_certified(), rg <= bound);
                let nn = Rational::from_int(n as i128);
                let expected_bound = match case {
                    MeanCase::Central => (nn - Rational::from_int(2)) / Rational::from_int(4),
                    MeanCase::High => nn - Rational::ONE - mean,
                    MeanCase::Low => mean,
                };
                assert_eq!(bound, expected_bound);
            } else {
                assert_eq!(out.status, CertStatus::NotApplicable);
            }
        }
    }
}

#[test]
fn family_is_tight() {
    for n in (2..=50usize).step_by(2) {
        for mu in 0..n as u32 {
            for c in 0..=mu {
                let Ok(seq) = counterexample_family(n, mu, c) else {
                    assert!(mu + c > n as u32 - 1);
                    continue;
                };
                let beyond = 4 * c as usize > n - 2;
                assert_eq!(is_graphic(&seq), !beyond, "n={n} mu={mu} c={c}");
            }
        }
    }
}

#[test]
fn extremal_range_is_graphic() {
    let (mut cases, mut vacuous) = (0, 0);
    for n in 2..=60usize {
        let top = (n * (n - 1)) as u64;
        for s in (0..=top).step_by(2) {
            if !in_central_window(s, n) {
                continue;
            }
            let (upper, lower) = extremal_pair(s, n).unwrap();
            // no integer range around the mean fits within (n-2)/4: vacuous
            if (n as u64) * (lower as u64) > s || s > (n as u64) * (upper as u64) {
                vacuous += 1;
                continue;
            }
            let seq = maximal_sequence(n, s, lower, upper).unwrap();
            assert!(is_graphic(&seq), "n={n} s={s} -> {seq}");
            // the extremes obey the central-case regularity bound
            let quarter = Rational::new(n as i128 - 2, 4);
            let mean = Rational::new(s as i128, n as i128);
            assert!(Rational::from(upper) - mean <= quarter);
            assert!(mean - Rational::from(lower) <= quarter);
            cases += 1;
        }
    }
    assert!(cases > 10_000, "{cases}");
    std::println!("{cases} extremal ranges checked, {vacuous} vacuous");
}

/// Which of the four floor/ceiling combinations occur, computed from the
/// fractional parts, and that each agrees with the direct formula.
#[test]
fn extremal_pair_case_split() {
    let mut seen = [[false; 2]; 2];
    for n in 2..=60i128 {
        let quarter = Rational::new(n - 2, 4);
        for s in (0..=n * (n - 1)).step_by(2) {
            if !in_central_window(s as u64, n as usize) {
                continue;
            }
            let mean = Rational::new(s, n);
            let (fm, fq) = (mean.fract(), quarter.fract());
            let up_carry = fm + fq >= Rational::ONE;
            let low_carry = fm > fq;
            let upper = mean.floor() + quarter.floor() + up_carry as i128;
            let lower = mean.floor() - quarter.floor() + low_carry as i128;
            let (u, l) = extremal_pair(s as u64, n as usize).unwrap();
            assert_eq!((u as i128, l as i128), (upper, lower), "n={n} s={s}");
            seen[up_carry as usize][low_carry as usize] = true;
        }
    }
    assert_eq!(seen, [[true; 2]; 2]);
}
