//! Sparse multivariate polynomials over [`Scalar`](crate::Scalar) fields.

mod monomial;
mod poly;
mod text;

pub use monomial::{monomial_basis, multi_indices_up_to, Monomial};
pub use poly::MultiPoly;
pub use text::RingContext;

use crate::exact::{Field, Rng, Scalar};

/// Random homogeneous polynomial of `degree` with integer coefficients in
/// `[-bound, bound]`; roughly half the monomials are kept.
pub fn random_homogeneous(rng: &mut Rng, nvars: usize, degree: u32, field: Field, bound: i64) -> MultiPoly {
    let mut p = MultiPoly::zero(nvars, field);
    for m in monomial_basis(nvars, degree) {
        if rng.int_in(0, 1) == 1 {
            p.add_term(m, Scalar::from_int(rng.int_in(-bound, bound), field));
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int_coords, Eisenstein, Rational};
    use alloc::vec::Vec;
    use proptest::prelude::*;
    use crate::exact::Rng;

    const Q: Field = Field::Rational;

    fn xyz() -> RingContext {
        RingContext::standard(3, Q)
    }

    fn p(text: &str) -> MultiPoly {
        xyz().parse(text).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x+y") * &p("x-y"), p("x^2-y^2"));
        let q = p("3*x^2*y-1/2*z^3");
        assert_eq!(&q + &MultiPoly::zero(3, Q), q);
        assert!((&q - &q).is_zero());
        assert!(matches!(
            q.checked_add(&MultiPoly::zero(4, Q)),
            Err(crate::Error::RingMismatch { .. })
        ));
        assert!(matches!(
            q.checked_mul(&MultiPoly::zero(3, Field::Eisenstein)),
            Err(crate::Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn b3_product_two_association_orders() {
        let factors = ["x", "y", "z", "x+y", "x-y", "x+z", "x-z", "y+z", "y-z"].map(p);
        let left = factors.iter().fold(p("1"), |acc, f| &acc * f);
        let right = factors.iter().rev().fold(p("1"), |acc, f| f * &acc);
        assert_eq!(left, right);
        assert_eq!(left.degree(), Some(9));
        assert!(left.is_homogeneous());
        // xyz (x^2-y^2)(x^2-z^2)(y^2-z^2)
        let grouped = &(&(&p("x*y*z") * &p("x^2-y^2")) * &p("x^2-z^2")) * &p("y^2-z^2");
        assert_eq!(left, grouped);
    }

    #[test]
    fn evaluation() {
        assert_eq!(
            p("x^2*y").evaluate(&int_coords(&[1, 2, 5], Q)).unwrap(),
            Scalar::from_int(2, Q)
        );
        assert!(p("x^3+y*z^2")
            .evaluate(&int_coords(&[0, 0, 0], Q))
            .unwrap()
            .is_zero());
        assert!(p("x").evaluate(&int_coords(&[1, 2], Q)).is_err());
    }

    #[test]
    fn derivatives() {
        let ctx = RingContext::standard(2, Q);
        assert_eq!(ctx.parse("x^3*y").unwrap().partial(0), ctx.parse("3*x^2*y").unwrap());
        assert!(ctx.parse("7").unwrap().partial(0).is_zero());
        let q = p("x^2*y^2");
        let top = int_coords(&[0, 0, 1], Q);
        assert!(q.vanishes_to_order(&top, 4).unwrap());
        assert!(!q.vanishes_to_order(&top, 5).unwrap());
        assert!(q.vanishes_to_order(&top, 0).is_err());
        assert_eq!(q.order_at(&top, 10).unwrap(), 4);
    }

    #[test]
    fn euler_identity() {
        let mut rng = Rng::new(7);
        for _ in 0..20 {
            let deg = rng.int_in(0, 6) as u32;
            let f = random_homogeneous(&mut rng, 4, deg, Q, 9);
            let mut sum = MultiPoly::zero(4, Q);
            for i in 0..4 {
                sum = &sum + &(&MultiPoly::var(i, 4, Q) * &f.partial(i));
            }
            assert_eq!(sum, f.scale_int(i64::from(deg)));
        }
    }

    #[test]
    fn substitution() {
        let ctx = RingContext::new(["u", "v"], Q).unwrap();
        let images = [ctx.parse("u^2").unwrap(), ctx.parse("v^2").unwrap()];
        let f = RingContext::standard(2, Q).parse("x+y").unwrap();
        assert_eq!(f.substitute(&images).unwrap(), ctx.parse("u^2+v^2").unwrap());

        let q = p("2*x^3*y-z^4+x*y*z^2");
        let ids: Vec<MultiPoly> = (0..3).map(|i| MultiPoly::var(i, 3, Q)).collect();
        assert_eq!(q.substitute(&ids).unwrap(), q);

        let mixed = [ctx.parse("u").unwrap(), ctx.parse("v^2").unwrap()];
        assert!(f.substitute(&mixed).is_err());
        let inhom = [ctx.parse("u+v^2").unwrap(), ctx.parse("v").unwrap()];
        assert_eq!(f.substitute(&inhom), Err(crate::Error::NotHomogeneous));
    }

    #[test]
    fn block_coefficients() {
        let ctx = RingContext::new(["x", "y", "a", "b"], Q).unwrap();
        let f = ctx.parse("a*x^2+b*x*y").unwrap();
        let coeffs = f.coefficients_wrt(&[2, 3]).unwrap();
        let xy = RingContext::standard(2, Q);
        assert_eq!(coeffs.len(), 2);
        assert_eq!(coeffs[&Monomial::new(alloc::vec![1, 0])], xy.parse("x^2").unwrap());
        assert_eq!(coeffs[&Monomial::new(alloc::vec![0, 1])], xy.parse("x*y").unwrap());
        assert_eq!(
            MultiPoly::from_block_coefficients(4, Q, &[2, 3], &coeffs).unwrap(),
            f
        );
        assert!(f.coefficients_wrt(&[2, 2]).is_err());
    }

    #[test]
    fn block_reconstruction_round_trip() {
        let mut rng = Rng::new(11);
        for _ in 0..20 {
            let dx = rng.int_in(0, 4) as u32;
            let da = rng.int_in(0, 3) as u32;
            let left = random_homogeneous(&mut rng, 3, dx, Q, 5).embed_vars(6, &[0, 1, 2]);
            let right = random_homogeneous(&mut rng, 3, da, Q, 5).embed_vars(6, &[3, 4, 5]);
            let other = random_homogeneous(&mut rng, 3, dx, Q, 5).embed_vars(6, &[0, 1, 2]);
            let right2 = random_homogeneous(&mut rng, 3, da, Q, 5).embed_vars(6, &[3, 4, 5]);
            let f = &(&left * &right) + &(&other * &right2);
            let coeffs = f.coefficients_wrt(&[3, 4, 5]).unwrap();
            assert_eq!(MultiPoly::from_block_coefficients(6, Q, &[3, 4, 5], &coeffs).unwrap(), f);
        }
    }

    #[test]
    fn text_format() {
        let f = p("x^2-3/4*y*z+2*z^2-x");
        assert_eq!(xyz().format(&f), "x^2-3/4*y*z+2*z^2-x");
        assert_eq!(xyz().format(&p("0")), "0");
        assert_eq!(xyz().format(&p("-5")), "-5");
        let e = RingContext::standard(4, Field::Eisenstein);
        let g = e.parse("(1-2*w)*x*w-w^4+(w)").unwrap();
        assert_eq!(e.format(&g), "-w^4+(1-2*w)*x*w+(w)");
        assert_eq!(e.parse(&e.format(&g)).unwrap(), g);
        assert!(xyz().parse("x*q").is_err());
        assert!(xyz().parse("x y").is_err());
        assert!(xyz().parse("(w)*x").is_err());
    }

    #[test]
    fn expressions() {
        assert_eq!(xyz().parse_expr("(x+y)*(x-y)").unwrap(), p("x^2-y^2"));
        assert_eq!(xyz().parse_expr("-(x - 2*y)^2 + 3").unwrap(), p("-x^2+4*x*y-4*y^2+3"));
        assert_eq!(xyz().parse_expr("2*x*(y^2-z^2)^0").unwrap(), p("2*x"));
        assert!(xyz().parse_expr("x^2^1").is_err());
        assert!(xyz().parse_expr("(x+y").is_err());
        assert!(xyz().parse_expr("x+").is_err());
        assert!(xyz().parse_expr("").is_err());
    }

    #[test]
    fn specialization() {
        let ctx = RingContext::product(2, Q);
        let f = ctx.parse_expr("x^2*a - y*b^2 + a*b").unwrap();
        let g = f.specialize(&[2, 3], &int_coords(&[2, -1], Q)).unwrap();
        assert_eq!(g, RingContext::standard(2, Q).parse("2*x^2-y-2").unwrap());
        let h = f.specialize(&[0], &int_coords(&[1], Q)).unwrap();
        assert_eq!(h.nvars(), 3);
        assert_eq!(h, RingContext::new(["y", "a", "b"], Q).unwrap().parse("a-y*b^2+a*b").unwrap());
        assert!(f.specialize(&[0, 1], &int_coords(&[1], Q)).is_err());
    }

    fn random_poly(seed: u64, field: Field) -> MultiPoly {
        let mut rng = Rng::new(seed);
        let mut f = MultiPoly::zero(3, field);
        for _ in 0..rng.int_in(0, 6) {
            let m = Monomial::new((0..3).map(|_| rng.int_in(0, 3) as u32).collect());
            let a = Rational::new(rng.int_in(-20, 20), rng.int_in(1, 7));
            let c = match field {
                Field::Rational => Scalar::Rat(a),
                Field::Eisenstein => {
                    Scalar::Eis(Eisenstein::new(a, Rational::new(rng.int_in(-3, 3), rng.int_in(1, 3))))
                }
            };
            f.add_term(m, c);
        }
        f
    }

    proptest! {
        #[test]
        fn parse_print_inverse(seed in any::<u64>(), eis in any::<bool>()) {
            let field = if eis { Field::Eisenstein } else { Q };
            let f = random_poly(seed, field);
            let ctx = RingContext::standard(3, field);
            prop_assert_eq!(ctx.parse(&ctx.format(&f)).unwrap(), f);
        }

        #[test]
        fn evaluation_is_multiplicative(a in any::<u64>(), b in any::<u64>(), pt in proptest::collection::vec(-9i64..9, 3)) {
            let (f, g) = (random_poly(a, Q), random_poly(b, Q));
            let pt = int_coords(&pt, Q);
            prop_assert_eq!((&f * &g).evaluate(&pt).unwrap(), &f.evaluate(&pt).unwrap() * &g.evaluate(&pt).unwrap());
        }

        #[test]
        fn mixed_partials_commute(a in any::<u64>()) {
            let f = random_poly(a, Field::Eisenstein);
            prop_assert_eq!(f.partial(0).partial(1), f.partial(1).partial(0));
            prop_assert_eq!(f.partial(2).partial(1), f.partial(1).partial(2));
        }

        #[test]
        fn substitution_respects_products(seed in any::<u64>()) {
            let mut rng = Rng::new(seed);
            let f = random_homogeneous(&mut rng, 3, 2, Q, 4);
            let g = random_homogeneous(&mut rng, 3, 1, Q, 4);
            let imgs: Vec<MultiPoly> = (0..3).map(|_| random_homogeneous(&mut rng, 2, 2, Q, 4)).collect();
            let lhs = (&f * &g).substitute(&imgs).unwrap();
            let rhs = &f.substitute(&imgs).unwrap() * &g.substitute(&imgs).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn printed_polynomials_parse_as_expressions(seed in any::<u64>()) {
            let mut rng = Rng::new(seed);
            let f = random_homogeneous(&mut rng, 3, 3, Q, 20);
            prop_assert_eq!(xyz().parse_expr(&xyz().format(&f)).unwrap(), f);
        }

        #[test]
        fn specialize_then_evaluate(seed in any::<u64>(), pt in proptest::collection::vec(-9i64..9, 3)) {
            let f = random_poly(seed, Q);
            let pt = int_coords(&pt, Q);
            let g = f.specialize(&[1], &pt[1..2]).unwrap();
            prop_assert_eq!(g.evaluate(&[pt[0].clone(), pt[2].clone()]).unwrap(), f.evaluate(&pt).unwrap());
        }

        #[test]
        fn order_one_is_vanishing(seed in any::<u64>(), pt in proptest::collection::vec(-2i64..3, 3)) {
            let mut rng = Rng::new(seed);
            let f = random_homogeneous(&mut rng, 3, 3, Q, 2);
            let pt = int_coords(&pt, Q);
            prop_assert_eq!(f.vanishes_to_order(&pt, 1).unwrap(), f.evaluate(&pt).unwrap().is_zero());
        }
    }
}
