//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::time::{Duration, Instant};

use sumrate::bounds::{self, OptimizerConfig, Verdict};
use sumrate::{catalog, spectral, verify, JointDistribution};

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    o.detail = format!("{} [{:.3}s, limit {:.3}s]", o.detail, took.as_secs_f64(), limit.as_secs_f64());
    o.pass &= took <= limit;
    o
}

fn entropies() -> Outcome {
    let expected = [1.918, 0.922, 0.748];
    let mut pass = true;
    let mut parts = Vec::new();
    for ((name, src), want) in catalog::sources().into_iter().zip(expected) {
        let start = Instant::now();
        let h = src.joint_entropy();
        let took = start.elapsed();
        pass &= (h - want).abs() <= 0.001 && took < Duration::from_millis(1);
        parts.push(format!("{name} {h:.4} in {}µs", took.as_micros()));
    }
    check(pass, parts.join(", "))
}

fn trivial() -> Outcome {
    timed(Duration::from_secs(1), || {
        let r = bounds::trivial_bound(&catalog::averaging_channel(), &OptimizerConfig::default()).unwrap();
        let arg = r.argmax.matrix().as_slice().to_vec();
        let want = [0.5, 0.0, 0.0, 0.5];
        let worst = arg.iter().zip(want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        check(
            (r.value - 1.0).abs() <= 1e-6 && worst <= 1e-4,
            format!("value {:.9}, argmax {:?}", r.value, arg),
        )
    })
}

fn upper(idx: usize, src: &JointDistribution, want: f64) -> Outcome {
    timed(Duration::from_secs(60), || {
        let r = bounds::constrained_upper_bound(src, &catalog::averaging_channel(), &OptimizerConfig::default()).unwrap();
        check(
            r.certified && (r.value - want).abs() <= 0.01,
            format!(
                "source {idx}: {:.4} (grid {:.4}, cell variation {:.1e}), expected {want} ± 0.01",
                r.value, r.grid_value, r.cell_variation
            ),
        )
    })
}

fn achievable(idx: usize, src: &JointDistribution, want: f64) -> Outcome {
    timed(Duration::from_secs(120), || {
        let ch = catalog::averaging_channel();
        let r = bounds::achievable_sum_rate(src, &ch, &OptimizerConfig::default()).unwrap();
        let input = bounds::encoded_input(src, &r.encoder_x1, &r.encoder_x2, &ch).unwrap();
        let replay = sumrate::channel_mutual_information(&input, &ch).unwrap();
        check(
            (r.value - want).abs() <= 0.02 && (replay - r.value).abs() <= 1e-9,
            format!("source {idx}: {:.4}, replayed {:.12}, expected {want} ± 0.02", r.value, replay),
        )
    })
}

fn verdicts() -> Outcome {
    let ch = catalog::averaging_channel();
    let cfg = OptimizerConfig::default();
    let want = [Verdict::InfeasibleByTrivial, Verdict::InfeasibleByUpper, Verdict::Inconclusive];
    let got: Vec<Verdict> = catalog::sources()
        .iter()
        .map(|(_, s)| bounds::assess(s, &ch, &cfg).unwrap().verdict)
        .collect();
    check(got == want, format!("{got:?}"))
}

fn theorem1() -> Outcome {
    timed(Duration::from_secs(30), || {
        let s = verify::theorem1_suite(10_000).unwrap();
        check(s.all_passed(), s.to_string())
    })
}

fn dpi() -> Outcome {
    timed(Duration::from_secs(60), || {
        let d = verify::dpi_suite(10_000).unwrap();
        check(
            d.summary.all_passed() && d.max_identity_error <= 1e-10,
            format!("{}; product identity error {:.1e}", d.summary, d.max_identity_error),
        )
    })
}

fn kron_spectrum() -> Outcome {
    let j = catalog::symmetric_source();
    let direct = spectral::svd_small(&j.kron_power(2).unwrap().tilde().unwrap())
        .unwrap()
        .singular_values;
    let want = [1.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 9.0];
    let err = direct.iter().zip(want).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    let mut multiplicity = true;
    for n in 1..=3 {
        let s = spectral::svd_small(&j.kron_power(n).unwrap().tilde().unwrap())
            .unwrap()
            .singular_values;
        multiplicity &= s.iter().filter(|v| (*v - 1.0 / 3.0).abs() <= 1e-8).count() >= n;
    }
    let iid = verify::iid_suite(20).unwrap();
    check(
        direct.len() == 4 && err <= 1e-8 && multiplicity && iid.all_passed(),
        format!("n = 2 spectrum {direct:.6?}, error {err:.1e}; {iid}"),
    )
}

fn decomposition() -> Outcome {
    let s = verify::decomposition_suite(1000).unwrap();
    check(s.all_passed(), s.to_string())
}

fn appendix() -> Outcome {
    timed(Duration::from_secs(10), || {
        let a = verify::appendix_suite(&[0.3, 0.7], &[0.6, 0.4], 8).unwrap();
        // the bound exactly as stated, without clamping either factor at zero
        let mut literal = true;
        for r in &a.rows {
            let c = &r.certificate;
            let q = c.p_max.powf(r.n as f64 / 2.0);
            literal &= r.lambda2 >= (1.0 - c.c4 * q) * (1.0 - c.c2 * q) - 1e-12;
        }
        let last = a.rows.last().unwrap();
        check(
            a.summary.all_passed() && literal && 1.0 - last.running_max < 0.02,
            format!("{}; unclamped bound holds: {literal}", a.summary),
        )
    })
}

type Criterion = (u32, &'static str, Box<dyn Fn() -> Outcome>);

fn main() {
    let sources: Vec<JointDistribution> = catalog::sources().into_iter().map(|(_, s)| s).collect();
    let criteria: Vec<Criterion> = vec![
        (1, "entropy of the three sources", Box::new(entropies)),
        (2, "trivial bound", Box::new(trivial)),
        (3, "constrained upper bound, source 1", {
            let s = sources[0].clone();
            Box::new(move || upper(1, &s, 0.667))
        }),
        (3, "constrained upper bound, source 2", {
            let s = sources[1].clone();
            Box::new(move || upper(2, &s, 0.56))
        }),
        (3, "constrained upper bound, source 3", {
            let s = sources[2].clone();
            Box::new(move || upper(3, &s, 0.90))
        }),
        (4, "achievable rate, source 2", {
            let s = sources[1].clone();
            Box::new(move || achievable(2, &s, 0.51))
        }),
        (4, "achievable rate, source 3", {
            let s = sources[2].clone();
            Box::new(move || achievable(3, &s, 0.57))
        }),
        (5, "verdicts", Box::new(verdicts)),
        (6, "spectral structure of random joints", Box::new(theorem1)),
        (7, "spectral data processing on Markov triples", Box::new(dpi)),
        (8, "Kronecker power spectrum", Box::new(kron_spectrum)),
        (9, "decomposition iff lambda2 = 1", Box::new(decomposition)),
        (10, "near-decomposable construction", Box::new(appendix)),
    ];
    let mut failed = 0;
    for (id, name, f) in &criteria {
        let o = f();
        println!("{} criterion {id}: {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{}/{} checks passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
