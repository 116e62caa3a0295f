use fibcheb::integrals::*;
use fibcheb::scalar::{int, ratio};
use fibcheb::sequences::{chebyshev_t, chebyshev_u};
use fibcheb::{ChebyshevWeight, PiMultiple, RationalPoly, Status};
use proptest::prelude::*;

#[test]
fn orthogonality() {
    for a in 0..=20 {
        for b in 0..=20 {
            let t = oracle_weighted_integral(&(&chebyshev_t(a) * &chebyshev_t(b)), ChebyshevWeight::FirstKind);
            let u = oracle_weighted_integral(&(&chebyshev_u(a) * &chebyshev_u(b)), ChebyshevWeight::SecondKind);
            let expect_t = match (a == b, a) {
                (false, _) => int(0),
                (true, 0) => int(1),
                (true, _) => ratio(1, 2),
            };
            let expect_u = if a == b { ratio(1, 2) } else { int(0) };
            assert_eq!(t, PiMultiple(expect_t), "T a={a} b={b}");
            assert_eq!(u, PiMultiple(expect_u), "U a={a} b={b}");
        }
    }
}

#[test]
fn printed_forms_against_oracle() {
    for j in 0..=20 {
        for k in 0..=j {
            let u = integral_fib_cheb_u(j, k).unwrap();
            assert_eq!(u.report.status, Status::Pass, "{}", u.report);

            let t = integral_fib_cheb_t(j, k).unwrap();
            let expect = if k == 0 && j % 2 == 0 { Status::PaperErratum } else { Status::Pass };
            assert_eq!(t.report.status, expect, "{}", t.report);

            let ff2 = integral_fib_fib(j, k, ChebyshevWeight::SecondKind, DmInterpretation::Undefined).unwrap();
            if j == k {
                assert_eq!(ff2.report.status, Status::Pass, "{}", ff2.report);
            } else {
                assert_ne!(ff2.report.status, Status::Fail, "{}", ff2.report);
            }

            let ff1 = integral_fib_fib(j, k, ChebyshevWeight::FirstKind, DmInterpretation::Undefined).unwrap();
            assert_eq!(ff1.report.status, Status::Unevaluable);
            let ff1 = integral_fib_fib(j, k, ChebyshevWeight::FirstKind, DmInterpretation::Normalizer).unwrap();
            assert_ne!(ff1.report.status, Status::Fail, "{}", ff1.report);
        }
    }
}

#[test]
fn quadrature_agrees_with_exact_values() {
    for kind in IntegralKind::ALL {
        for j in 0..=30 {
            for k in (0..=j).step_by(3) {
                let exact = kind.evaluate(j, k, DmInterpretation::Undefined).unwrap().value;
                let r = quadrature_report(kind, j, k, &exact).unwrap();
                assert_eq!(r.status, Status::Pass, "{r}");
            }
        }
    }
}

fn arb_poly() -> impl Strategy<Value = RationalPoly> {
    prop::collection::vec((-50i64..50, 1i64..9), 0..14)
        .prop_map(|cs| RationalPoly::new(cs.into_iter().map(|(n, d)| ratio(n, d)).collect()))
}

proptest! {
    #[test]
    fn moments_match_expansion(p in arb_poly()) {
        for w in [ChebyshevWeight::FirstKind, ChebyshevWeight::SecondKind] {
            prop_assert_eq!(moment_weighted_integral(&p, w), oracle_weighted_integral(&p, w));
        }
    }

    #[test]
    fn quadrature_matches_moments(p in arb_poly(), extra in 0usize..4) {
        for w in [ChebyshevWeight::FirstKind, ChebyshevWeight::SecondKind] {
            let q = quadrature_check(&p, w, required_nodes(&p) + extra).unwrap();
            prop_assert!(quadrature_agrees(q, &moment_weighted_integral(&p, w)));
        }
    }
}
