//! Exact scalars: [`Rational`], [`Eisenstein`] and the field-tagged [`Scalar`].

mod eisenstein;
mod parse;
mod rational;
mod rng;
mod scalar;

pub use eisenstein::Eisenstein;
pub use parse::{parse_scalar, ParseError};
pub(crate) use parse::Cursor;
pub use rational::Rational;
pub use rng::{random_point, random_point_bounded, Rng, DEFAULT_COORD_BOUND};
pub use scalar::{Field, Scalar};

use alloc::vec::Vec;

use crate::Result;

/// Check that two coordinate vectors define the same projective point.
pub fn projectively_equal(p: &[Scalar], q: &[Scalar]) -> bool {
    if p.len() != q.len() {
        return false;
    }
    let p_zero = p.iter().all(Scalar::is_zero);
    let q_zero = q.iter().all(Scalar::is_zero);
    if p_zero || q_zero {
        return p_zero && q_zero;
    }
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            if &p[i] * &q[j] != &p[j] * &q[i] {
                return false;
            }
        }
    }
    true
}

/// Scale so that the first nonzero entry is 1. The zero vector is returned unchanged.
pub fn normalize_projective(v: &[Scalar]) -> Vec<Scalar> {
    match v.iter().find(|s| !s.is_zero()) {
        None => v.to_vec(),
        Some(lead) => {
            let inv = lead.inv().expect("nonzero");
            v.iter().map(|s| s * &inv).collect()
        }
    }
}

/// Scale by a rational so that every rational part is an integer and their
/// gcd is 1, with the first nonzero entry's leading part positive. Keeps
/// projective points small. The zero vector is returned unchanged.
pub fn primitive_vector(v: &[Scalar]) -> Vec<Scalar> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Zero};

    let parts: Vec<Rational> = v
        .iter()
        .flat_map(|s| match s {
            Scalar::Rat(r) => alloc::vec![r.clone()],
            Scalar::Eis(e) => alloc::vec![e.a.clone(), e.b.clone()],
        })
        .collect();
    let Some(lead) = parts.iter().find(|r| !r.is_zero()) else {
        return v.to_vec();
    };
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for r in &parts {
        den = den.lcm(r.denom());
        num = num.gcd(r.numer());
    }
    let mut factor = Rational::from_bigints(den, num).expect("nonzero gcd");
    if lead.is_negative() {
        factor = -factor;
    }
    let f = Scalar::from_rational(factor, v[0].field());
    v.iter().map(|s| s * &f).collect()
}

/// Parse a list of scalars, all of one field.
pub fn parse_coords<S: AsRef<str>>(texts: &[S], field: Field) -> Result<Vec<Scalar>> {
    texts
        .iter()
        .map(|t| parse_scalar(t.as_ref(), field).map_err(Into::into))
        .collect()
}

/// Shorthand for building integer coordinate vectors.
pub fn int_coords(values: &[i64], field: Field) -> Vec<Scalar> {
    values.iter().map(|&v| Scalar::from_int(v, field)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;
    use crate::exact::Rng;

    fn rat(n: i64, d: i64) -> Scalar {
        Scalar::Rat(Rational::new(n, d))
    }

    fn eis(a: (i64, i64), b: (i64, i64)) -> Scalar {
        Scalar::Eis(Eisenstein::new(Rational::new(a.0, a.1), Rational::new(b.0, b.1)))
    }

    #[test]
    fn primitive_vectors() {
        let v = [rat(-2, 3), rat(0, 1), rat(4, 9)];
        assert_eq!(primitive_vector(&v), [rat(3, 1), rat(0, 1), rat(-2, 1)]);
        let e = [eis((1, 2), (1, 4)), eis((0, 1), (-3, 2))];
        assert_eq!(primitive_vector(&e), [eis((2, 1), (1, 1)), eis((0, 1), (-6, 1))]);
        let z = [rat(0, 1), rat(0, 1)];
        assert_eq!(primitive_vector(&z), z);
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&rat(1, 2) + &rat(1, 3), rat(5, 6));
        let w = Scalar::Eis(Eisenstein::w());
        assert_eq!(&w * &w, eis((-1, 1), (-1, 1)));
        // (1 + w)(-w) = -w - w^2 = 1
        let one_plus_w = eis((1, 1), (1, 1));
        assert_eq!(&one_plus_w * &(-&w), Scalar::one(Field::Eisenstein));
        assert_eq!(Eisenstein::w_pow(3), Eisenstein::one());
        assert_eq!(
            &(&w * &w) * &w,
            Scalar::one(Field::Eisenstein),
            "w^3 = 1"
        );
    }

    #[test]
    fn errors_are_explicit() {
        assert_eq!(
            rat(1, 2).checked_div(&rat(0, 1)),
            Err(crate::Error::DivisionByZero)
        );
        assert!(matches!(
            rat(1, 2).checked_add(&Scalar::one(Field::Eisenstein)),
            Err(crate::Error::FieldMismatch { .. })
        ));
        assert!(Scalar::zero(Field::Eisenstein).inv().is_err());
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(rat(0, 5).to_string(), "0");
        assert_eq!(rat(4, -6).to_string(), "-2/3");
        assert_eq!(eis((1, 2), (-3, 1)).to_string(), "1/2-3*w");
    }

    #[test]
    fn random_points_are_reproducible() {
        let a = random_point(&mut Rng::new(1), 2, Field::Rational);
        let b = random_point(&mut Rng::new(1), 2, Field::Rational);
        let c = random_point(&mut Rng::new(2), 2, Field::Rational);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.len(), 3);
        for s in &a {
            let r = s.to_rational().unwrap();
            assert!(r.is_integer());
            assert!(r.abs() <= Rational::from(DEFAULT_COORD_BOUND));
        }
        assert!(a.iter().any(|s| !s.is_zero()));
    }

    #[test]
    fn projective_equality() {
        let f = Field::Rational;
        assert!(projectively_equal(&int_coords(&[1, 2, 3], f), &int_coords(&[-2, -4, -6], f)));
        assert!(!projectively_equal(&int_coords(&[1, 2, 3], f), &int_coords(&[1, 2, 4], f)));
        assert!(!projectively_equal(&int_coords(&[0, 0, 0], f), &int_coords(&[1, 0, 0], f)));
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn scalar(field: Field) -> impl Strategy<Value = Scalar> {
        (small_rational(), small_rational()).prop_map(move |(a, b)| match field {
            Field::Rational => Scalar::Rat(a),
            Field::Eisenstein => Scalar::Eis(Eisenstein::new(a, b)),
        })
    }

    fn any_field() -> impl Strategy<Value = Field> {
        prop_oneof![Just(Field::Rational), Just(Field::Eisenstein)]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn parse_format_identity(f in any_field(), seed in any::<u64>()) {
            let mut rng = Rng::new(seed);
            let mut r = || Rational::new(rng.int_in(-1000, 1000), rng.int_in(1, 60));
            let x = match f {
                Field::Rational => Scalar::Rat(r()),
                Field::Eisenstein => Scalar::Eis(Eisenstein::new(r(), r())),
            };
            let text = x.to_string();
            prop_assert_eq!(parse_scalar(&text, f).unwrap(), x);
        }
    }

    proptest! {
        #[test]
        fn primitive_vector_is_same_point(v in proptest::collection::vec((-50i64..50, 1i64..12), 1..5)) {
            let v: Vec<Scalar> = v.into_iter().map(|(n, d)| rat(n, d)).collect();
            let p = primitive_vector(&v);
            prop_assert!(projectively_equal(&p, &v));
            prop_assert!(p.iter().all(|s| s.to_rational().unwrap().is_integer()));
        }

        #[test]
        fn field_axioms(
            (x, y, z) in any_field().prop_flat_map(|f| (scalar(f), scalar(f), scalar(f)))
        ) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            if !x.is_zero() {
                prop_assert!((&x * &x.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn eisenstein_norm_is_multiplicative(
            a in small_rational(), b in small_rational(),
            c in small_rational(), d in small_rational(),
        ) {
            let x = Eisenstein::new(a, b);
            let y = Eisenstein::new(c, d);
            prop_assert_eq!((&x * &y).norm(), &x.norm() * &y.norm());
        }
    }
}
