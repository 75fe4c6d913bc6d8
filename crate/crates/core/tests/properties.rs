use fracsob_core::conventions::{forward_transform, plancherel_check};
use fracsob_core::embedding::{difference_decomposition, theorem_ratio};
use fracsob_core::kernels::{e1_eval, e2_eval, KernelParams};
use fracsob_core::norms::{gagliardo_seminorm, holder_seminorm, hs_norm, HolderExponent, SigmaOrder, SobolevOrder};
use fracsob_core::testfunctions::get;
use fracsob_core::{Grid, GridF64, SampledFunctionF64};
use proptest::prelude::*;

fn grid() -> GridF64 {
    Grid::new(20.0, 1 << 12).unwrap()
}

fn bump(c: f64, w: f64, a: f64) -> SampledFunctionF64 {
    SampledFunctionF64::from_fn(grid(), move |x: f64| a * (-((x - c) / w).powi(2) / 2.0).exp()).unwrap()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn transform_is_linear(c1 in -3.0..3.0, w1 in 0.5..2.0, c2 in -3.0..3.0, w2 in 0.5..2.0,
                           a in -2.0..2.0, b in -2.0..2.0) {
        let (f, g) = (bump(c1, w1, 1.0), bump(c2, w2, 1.0));
        let d = grid().dual();
        let lhs = forward_transform(&f.linear_combination(a, &g, b).unwrap(), &d).unwrap();
        let (ff, fg) = (forward_transform(&f, &d).unwrap(), forward_transform(&g, &d).unwrap());
        for j in 0..d.len() {
            let want = ff.values()[j] * a + fg.values()[j] * b;
            prop_assert!((lhs.values()[j] - want).norm() <= 1e-10);
        }
    }

    #[test]
    fn plancherel_holds(c1 in -3.0..3.0, w1 in 0.5..2.0, c2 in -3.0..3.0, w2 in 0.5..2.0) {
        let (lhs, rhs) = plancherel_check(&bump(c1, w1, 1.0), &bump(c2, w2, -0.7)).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-6 * (1.0 + lhs.abs()));
    }

    #[test]
    fn norms_are_absolutely_homogeneous(c in -3.0..3.0, w in 0.5..2.0, a in -5.0f64..5.0, s in 0.0..1.5,
                                        sigma in 0.05..0.45, gamma in 0.1..1.0) {
        prop_assume!(a.abs() > 1e-3);
        let f = bump(c, w, 1.0);
        let g = f.scale(a);
        let s = SobolevOrder::new(s).unwrap();
        prop_assert!(close(hs_norm(&g, s).unwrap(), a.abs() * hs_norm(&f, s).unwrap(), 1e-12));
        let sg = SigmaOrder::new(sigma).unwrap();
        prop_assert!(close(gagliardo_seminorm(&g, sg).unwrap(), a.abs() * gagliardo_seminorm(&f, sg).unwrap(), 1e-12));
        let h = HolderExponent::new(gamma).unwrap();
        prop_assert!(close(holder_seminorm(&g, h, 1.0).unwrap(), a.abs() * holder_seminorm(&f, h, 1.0).unwrap(), 1e-12));
    }

    #[test]
    fn hs_norm_triangle_and_monotone(c1 in -3.0..3.0, w1 in 0.5..2.0, c2 in -3.0..3.0, w2 in 0.5..2.0,
                                     s1 in 0.0..1.5, ds in 0.0..1.0) {
        let (f, g) = (bump(c1, w1, 1.0), bump(c2, w2, -1.3));
        let s = SobolevOrder::new(s1).unwrap();
        let sum = hs_norm(&f.add(&g).unwrap(), s).unwrap();
        prop_assert!(sum <= hs_norm(&f, s).unwrap() + hs_norm(&g, s).unwrap() + 1e-12);
        let t = SobolevOrder::new(s1 + ds).unwrap();
        prop_assert!(hs_norm(&f, s).unwrap() <= hs_norm(&f, t).unwrap() * (1.0 + 1e-12));
    }

    #[test]
    fn spectra_of_real_inputs_are_hermitian(c in -3.0..3.0, w in 0.5..2.0) {
        let d = grid().dual();
        let v = forward_transform(&bump(c, w, 1.0), &d).unwrap();
        let v = v.values();
        for m in 1..v.len() {
            prop_assert!((v[m] - v[v.len() - m].conj()).norm() <= 1e-10);
        }
    }

    #[test]
    fn kernels_are_bounded(a in -10.0..10.0, gap in 0.0f64..5.0, x in -20.0..20.0) {
        let p = KernelParams::new(a, a + gap).unwrap();
        let e1 = e1_eval(&p, x);
        prop_assert!((0.0..=gap.min(1.0)).contains(&e1));
        prop_assert!((0.0..=1.0).contains(&e2_eval(&p, x)));
    }

    #[test]
    fn theorem_ratio_scale_invariant(c in -2.0..2.0, w in 0.3..2.0, a in -50.0f64..50.0, s in 0.51..0.99) {
        prop_assume!(a.abs() > 1e-2);
        let f = bump(c, w, 1.0);
        let s = SobolevOrder::new(s).unwrap();
        let r = theorem_ratio("f", &f, s).unwrap().ratio;
        let q = theorem_ratio("f", &f.scale(a), s).unwrap().ratio;
        prop_assert!((r - q).abs() <= 1e-12 * r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn decomposition_is_consistent(x1 in -3.0..3.0, gap in 0.0..1.0) {
        let g = grid();
        let e = get("modulated-gaussian").unwrap();
        let (f, fp) = (e.sample(&g).unwrap(), e.sample_derivative(&g).unwrap());
        let r = difference_decomposition(&f, &fp, &KernelParams::new(x1, x1 + gap).unwrap()).unwrap();
        prop_assert!(r.residual() <= 1e-6 * (1.0 + r.direct_diff.abs()), "{:?}", r);
        let bound = r.boundary_diff.abs() + r.i1.abs() + r.i2.abs();
        prop_assert!(r.direct_diff.abs() <= bound + 1e-6);
    }
}
