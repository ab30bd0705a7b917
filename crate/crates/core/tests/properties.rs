use proptest::prelude::*;

use sumrate::bounds::{self, OptimizerConfig};
use sumrate::probcore::entropy;
use sumrate::{catalog, channel_mutual_information, spectral, Alphabet, ChannelModel, JointDistribution, Matrix};

fn joint(max: usize) -> impl Strategy<Value = JointDistribution> {
    (1..=max, 1..=max)
        .prop_flat_map(|(m, n)| prop::collection::vec(0.0f64..1.0, m * n).prop_map(move |v| (m, n, v)))
        .prop_filter("needs mass", |(_, _, v)| v.iter().sum::<f64>() > 1e-3)
        .prop_map(|(m, n, v)| {
            let s: f64 = v.iter().sum();
            let mut j = JointDistribution::from_matrix(Matrix::from_vec(m, n, v.iter().map(|x| x / s).collect())).unwrap();
            // absorb rounding so the 1e-12 mass check always holds
            let t = j.matrix().sum();
            j = JointDistribution::from_matrix(j.matrix().scale(1.0 / t)).unwrap();
            j
        })
}

fn dense(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(m, n)| {
        prop::collection::vec(-1.0f64..1.0, m * n).prop_map(move |v| Matrix::from_vec(m, n, v))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn svd_reconstructs_with_orthonormal_factors(a in dense(6)) {
        let p = spectral::svd_small(&a).unwrap();
        prop_assert!(p.reconstruct().max_abs_diff(&a) < 1e-10);
        prop_assert!(p.singular_values.windows(2).all(|w| w[0] >= w[1]));
        let u = &p.left_vectors;
        let utu = u.transpose().matmul(u);
        prop_assert!(utu.max_abs_diff(&Matrix::identity(utu.rows())) < 1e-9);
        let v = &p.right_vectors;
        let vtv = v.transpose().matmul(v);
        prop_assert!(vtv.max_abs_diff(&Matrix::identity(vtv.rows())) < 1e-9);
    }

    #[test]
    fn kron_marginals_and_entropy(a in joint(3), b in joint(3)) {
        let k = a.kron(&b).unwrap();
        let (ax, ay) = a.marginals();
        let (bx, by) = b.marginals();
        let (kx, ky) = k.marginals();
        let want_x = Matrix::from_vec(1, ax.len(), ax).kron(&Matrix::from_vec(1, bx.len(), bx));
        let want_y = Matrix::from_vec(1, ay.len(), ay).kron(&Matrix::from_vec(1, by.len(), by));
        prop_assert!(kx.iter().zip(want_x.as_slice()).all(|(p, q)| (p - q).abs() < 1e-12));
        prop_assert!(ky.iter().zip(want_y.as_slice()).all(|(p, q)| (p - q).abs() < 1e-12));
        prop_assert!((k.joint_entropy() - a.joint_entropy() - b.joint_entropy()).abs() < 1e-9);
        prop_assert!((k.mutual_information() - a.mutual_information() - b.mutual_information()).abs() < 1e-9);
    }

    #[test]
    fn mutual_information_is_bounded(j in joint(5)) {
        let (px, py) = j.marginals();
        let i = j.mutual_information();
        prop_assert!(i >= 0.0);
        prop_assert!(i <= entropy(&px).min(entropy(&py)) + 1e-9);
    }

    #[test]
    fn spectrum_of_any_joint_has_unit_top(j in joint(5)) {
        let r = spectral::verify_theorem1(&j).unwrap();
        prop_assert!(r.is_valid_joint, "{r:?}");
        let l2 = spectral::lambda2(&j).unwrap();
        prop_assert!((-1e-12..=1.0 + 1e-8).contains(&l2));
    }

    #[test]
    fn scaled_matrix_fails_spectral_check(j in joint(4), c in prop_oneof![0.5f64..0.95, 1.05f64..2.0]) {
        let bad = JointDistribution::new_unchecked(j.matrix().scale(c));
        let r = spectral::verify_theorem1(&bad).unwrap();
        prop_assert!(!r.is_valid_joint);
    }

    #[test]
    fn channel_mi_ignores_input_relabeling(w in prop::collection::vec(0.01f64..1.0, 12), q in prop::collection::vec(0.01f64..1.0, 6)) {
        // |X1| = 3, |X2| = 2, |Y| = 2
        let t = Matrix::from_fn(2, 6, |y, c| w[2 * c + y] / (w[2 * c] + w[2 * c + 1]));
        let ch = ChannelModel::new(Alphabet::indexed(3), Alphabet::indexed(2), Alphabet::indexed(2), t).unwrap();
        let s: f64 = q.iter().sum();
        let input: Vec<f64> = q.iter().map(|v| v / s).collect();
        let base = ch.mutual_information_vec(&input);

        // reverse x1 and swap x2 in both the channel columns and the input law
        let remap = |c: usize| (2 - c / 2) * 2 + (1 - c % 2);
        let t2 = Matrix::from_fn(2, 6, |y, c| ch.transition()[(y, remap(c))]);
        let ch2 = ChannelModel::new(Alphabet::indexed(3), Alphabet::indexed(2), Alphabet::indexed(2), t2).unwrap();
        let input2: Vec<f64> = (0..6).map(|c| input[remap(c)]).collect();
        prop_assert!((ch2.mutual_information_vec(&input2) - base).abs() < 1e-12);

        let joint_input = ch.input_joint(&input).unwrap();
        prop_assert!((channel_mutual_information(&joint_input, &ch).unwrap() - base).abs() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn bounds_are_ordered(v in prop::collection::vec(0.01f64..1.0, 4)) {
        let s: f64 = v.iter().sum();
        let src = JointDistribution::from_matrix(Matrix::from_vec(2, 2, v.iter().map(|x| x / s).collect())).unwrap();
        let src = JointDistribution::from_matrix(src.matrix().scale(1.0 / src.matrix().sum())).unwrap();
        let ch = catalog::averaging_channel();
        let cfg = OptimizerConfig { restarts: 4, grid_resolution: 0.02, ..OptimizerConfig::default() };
        let r = bounds::assess(&src, &ch, &cfg).unwrap();
        prop_assert!(r.achievable_rate <= r.upper_bound + 0.02, "{r:?}");
        prop_assert!(r.upper_bound <= r.trivial_bound + 1e-6, "{r:?}");
        prop_assert!(r.achievable_rate >= 0.0);
    }
}
