//! The explicit forms, written as bihomogeneous polynomials in a product ring.
//!
//! Plane forms live in `x, y, z, a, b, c`; space forms in
//! `x, y, z, w, a, b, c, d`. The point block comes first.

use crate::exact::{Field, Scalar};
use crate::mpoly::{MultiPoly, RingContext};
use crate::{Error, Result};

const PLANE_QUARTIC: &str = "
    3*a*(b^2-c^2)*x^2*y*z + 3*b*(c^2-a^2)*x*y^2*z + 3*c*(a^2-b^2)*x*y*z^2
    + a^3*y^3*z - a^3*y*z^3 + b^3*x*z^3 - b^3*x^3*z + c^3*x^3*y - c^3*x*y^3";

const PLANE_CUBIC_DUAL: &str = "
    y*z*(y^2-z^2)*a^3 + x*z*(z^2-x^2)*b^3 + x*y*(x^2-y^2)*c^3 + 3*x^2*y*z*a*b^2
    - 3*x*y^2*z*a^2*b + 3*x*y*z^2*a^2*c - 3*x^2*y*z*a*c^2 + 3*x*y^2*z*b*c^2 - 3*x*y*z^2*b^2*c";

const SPACE_QUARTIC: &str = "
    b^2*(c^3-d^3)*x^3*y + a^2*(d^3-c^3)*x*y^3 + c^2*(d^3-b^3)*x^3*z
    + c^2*(a^3-d^3)*y^3*z + a^2*(b^3-d^3)*x*z^3 + b^2*(d^3-a^3)*y*z^3
    + d^2*(b^3-c^3)*x^3*w + d^2*(c^3-a^3)*y^3*w + d^2*(a^3-b^3)*z^3*w
    + a^2*(c^3-b^3)*x*w^3 + b^2*(a^3-c^3)*y*w^3 + c^2*(b^3-a^3)*z*w^3";

const SPACE_QUINTIC_DUAL: &str = "
    y*(w^3-z^3)*a^3*b^2 + x*(z^3-w^3)*a^2*b^3 + z*(y^3-w^3)*a^3*c^2
    + z*(w^3-x^3)*b^3*c^2 + x*(w^3-y^3)*a^2*c^3 + y*(x^3-w^3)*b^2*c^3
    + w*(z^3-y^3)*a^3*d^2 + w*(x^3-z^3)*b^3*d^2 + w*(y^3-x^3)*c^3*d^2
    + x*(y^3-z^3)*a^2*d^3 + y*(z^3-x^3)*b^2*d^3 + z*(x^3-y^3)*c^2*d^3";

fn product_form(n: usize, text: &str) -> MultiPoly {
    RingContext::product(n, Field::Rational)
        .parse_expr(text)
        .expect("built-in form parses")
}

/// The plane quartic family in `x, y, z, a, b, c`.
pub fn plane_quartic_form() -> MultiPoly {
    product_form(3, PLANE_QUARTIC)
}

/// The same family written as cubics in `a, b, c` with coefficients in `x, y, z`.
pub fn plane_cubic_dual_form() -> MultiPoly {
    product_form(3, PLANE_CUBIC_DUAL)
}

/// The space quartic family in `x, y, z, w, a, b, c, d`.
pub fn space_quartic_form() -> MultiPoly {
    product_form(4, SPACE_QUARTIC)
}

/// The same family written as quintics in `a, b, c, d`.
pub fn space_quintic_dual_form() -> MultiPoly {
    product_form(4, SPACE_QUINTIC_DUAL)
}

/// Instantiate the parameter block of a product-ring form at `r`.
fn instantiate(form: MultiPoly, r: &[Scalar]) -> Result<MultiPoly> {
    let n = form.nvars() / 2;
    if r.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: r.len(),
        });
    }
    if r.iter().all(Scalar::is_zero) {
        return Err(Error::InvalidArgument("the point has all coordinates zero".into()));
    }
    let field = r[0].field();
    let block: alloc::vec::Vec<usize> = (n..2 * n).collect();
    form.to_field(field)?.specialize(&block, r)
}

/// The quartic in `x, y, z` with a triple point at `r = (a:b:c)`.
pub fn plane_quartic(r: &[Scalar]) -> Result<MultiPoly> {
    instantiate(plane_quartic_form(), r)
}

/// The quartic in `x, y, z, w` with a triple point at `r = (a:b:c:d)`.
pub fn space_quartic(r: &[Scalar]) -> Result<MultiPoly> {
    instantiate(space_quartic_form(), r)
}
