//! Exact scalars: rationals and quadratic extensions `Q(sqrt(D))`.
//!
//! A [`Scalar`] stores `a + b*sqrt(d)` with `a`, `b` arbitrary-precision
//! rationals and `d` a square-free integer.  `d == 1` encodes a plain
//! rational (then `b == 0`); negative `d` gives an imaginary quadratic
//! field.  All values are normalized on construction, so equality is
//! component-wise.
//!
//! Within one computation every irrational scalar must live in the same
//! extension: combining `sqrt(2)` with `sqrt(3)` is an error, never a
//! silent approximation.  Rationals (`d == 1`) combine with anything.
//!
//! Text form: `p/q` for rationals and `p/q+r/s*sqrt(D)` for quadratic
//! scalars (see [`crate::expr::parse_scalar`]); [`core::fmt::Display`]
//! emits the same form, so values round-trip bit-exactly.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer used throughout the crate.
pub type Int = BigInt;
/// Arbitrary-precision rational used throughout the crate.
pub type Rat = num_rational::BigRational;

/// Errors from exact scalar arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// Division by zero.
    DivisionByZero,
    /// Two operands live in distinct quadratic extensions.
    IncompatibleDiscriminants(Int, Int),
    /// A value has no representation in a single quadratic extension
    /// (e.g. the square root of an irrational scalar that is not a
    /// square in its own field).
    NotRepresentable,
    /// A sign or ordering query on a non-real scalar (negative `D`).
    NotOrdered,
    /// An argument that must be nonzero was zero.
    ZeroArgument,
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::IncompatibleDiscriminants(a, b) => {
                write!(f, "incompatible discriminants sqrt({a}) and sqrt({b})")
            }
            ScalarError::NotRepresentable => {
                write!(f, "value is not representable in a single quadratic extension")
            }
            ScalarError::NotOrdered => write!(f, "no real ordering for a negative discriminant"),
            ScalarError::ZeroArgument => write!(f, "argument must be nonzero"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ScalarError {}

/// An exact element `a + b*sqrt(d)` of `Q` or `Q(sqrt(d))`.
///
/// Invariants: `d` is square-free and nonzero; `b == 0` implies `d == 1`;
/// `d == 1` implies `b == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    a: Rat,
    b: Rat,
    d: Int,
}

impl Scalar {
    fn normalized(a: Rat, b: Rat, d: Int) -> Self {
        if b.is_zero() || d.is_one() {
            Scalar { a: a + b, b: Rat::zero(), d: Int::one() }
        } else {
            Scalar { a, b, d }
        }
    }

    /// The zero element.
    pub fn zero() -> Self {
        Scalar::rational(Rat::zero())
    }

    /// The unit element.
    pub fn one() -> Self {
        Scalar::rational(Rat::one())
    }

    /// A rational scalar.
    pub fn rational(r: Rat) -> Self {
        Scalar { a: r, b: Rat::zero(), d: Int::one() }
    }

    /// The integer `n` as a scalar.
    pub fn from_int(n: i64) -> Self {
        Scalar::rational(Rat::from_integer(Int::from(n)))
    }

    /// The fraction `n/m` as a scalar.  Panics if `m == 0`.
    pub fn fraction(n: i64, m: i64) -> Self {
        Scalar::rational(Rat::new(Int::from(n), Int::from(m)))
    }

    /// Builds `a + b*sqrt(d)` for any integer `d`, extracting the square
    /// part of `d` into `b` so the stored discriminant is square-free.
    /// `d == 0` collapses to the rational `a`.
    pub fn quadratic(a: Rat, b: Rat, d: Int) -> Self {
        if d.is_zero() || b.is_zero() {
            return Scalar::rational(a);
        }
        let (sf, f) = square_free_decompose(&d);
        Scalar::normalized(a, b * Rat::from_integer(f), sf)
    }

    /// `b * sqrt(d)` convenience constructor (integer arguments).
    pub fn sqrt_of(d: i64) -> Self {
        Scalar::quadratic(Rat::zero(), Rat::one(), Int::from(d))
    }

    /// The rational part `a`.
    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    /// The coefficient `b` of `sqrt(d)`.
    pub fn sqrt_coefficient(&self) -> &Rat {
        &self.b
    }

    /// The stored square-free discriminant (`1` for rationals).
    pub fn disc(&self) -> &Int {
        &self.d
    }

    /// `Some(a)` when the value is rational.
    pub fn as_rational(&self) -> Option<&Rat> {
        if self.b.is_zero() { Some(&self.a) } else { None }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.is_one()
    }

    /// The common discriminant of two operands, or an error when both are
    /// irrational with distinct discriminants.
    pub fn combine_disc(&self, rhs: &Scalar) -> Result<Int, ScalarError> {
        if self.d.is_one() {
            Ok(rhs.d.clone())
        } else if rhs.d.is_one() || self.d == rhs.d {
            Ok(self.d.clone())
        } else {
            Err(ScalarError::IncompatibleDiscriminants(self.d.clone(), rhs.d.clone()))
        }
    }

    /// Checked addition.
    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        let d = self.combine_disc(rhs)?;
        Ok(Scalar::normalized(&self.a + &rhs.a, &self.b + &rhs.b, d))
    }

    /// Checked subtraction.
    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        let d = self.combine_disc(rhs)?;
        Ok(Scalar::normalized(&self.a - &rhs.a, &self.b - &rhs.b, d))
    }

    /// Checked multiplication.
    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        let d = self.combine_disc(rhs)?;
        let a = &self.a * &rhs.a + &self.b * &rhs.b * Rat::from_integer(d.clone());
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(Scalar::normalized(a, b, d))
    }

    /// Checked division; errors on a zero divisor or mixed discriminants.
    pub fn div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_mul(&rhs.inv()?)
    }

    /// The multiplicative inverse, via the conjugate.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // For square-free d != 1 the norm a^2 - d b^2 vanishes only at 0.
        let n = self.norm();
        debug_assert!(!n.is_zero());
        let conj = self.conjugate();
        let inv_n = Rat::one() / n;
        Ok(Scalar::normalized(&conj.a * &inv_n, &conj.b * &inv_n, self.d.clone()))
    }

    /// The field conjugate `a - b*sqrt(d)`.
    pub fn conjugate(&self) -> Scalar {
        Scalar::normalized(self.a.clone(), -self.b.clone(), self.d.clone())
    }

    /// The field norm `a^2 - d*b^2` (a rational).
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - Rat::from_integer(self.d.clone()) * &self.b * &self.b
    }

    /// `self` raised to a non-negative power.
    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self` raised to any integer power (negative powers invert).
    pub fn pow_i(&self, e: i64) -> Result<Scalar, ScalarError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow((-e) as u32))
        }
    }

    /// Exact square root of a rational: returns `y` with `y^2 == x`.  The
    /// result is rational when `x` is a perfect rational square and
    /// `b*sqrt(D)` with square-free `D` otherwise (negative `x` yields a
    /// negative discriminant).
    pub fn sqrt_rational(x: &Rat) -> Scalar {
        if x.is_zero() {
            return Scalar::zero();
        }
        // sqrt(p/q) = sqrt(p*q)/q.
        let m = x.numer() * x.denom();
        let (sf, f) = square_free_decompose(&m);
        let coeff = Rat::new(f, x.denom().clone());
        Scalar::normalized(Rat::zero(), coeff, sf)
    }

    /// Exact square root within at most one quadratic extension.
    ///
    /// Rational inputs always succeed (possibly introducing a new
    /// discriminant).  An irrational input succeeds only when it is a
    /// square inside its own field `Q(sqrt(d))`; anything else would need
    /// a degree-4 extension and is reported as not representable.
    pub fn sqrt(&self) -> Result<Scalar, ScalarError> {
        if let Some(r) = self.as_rational() {
            return Ok(Scalar::sqrt_rational(r));
        }
        // Solve (x + y*sqrt(d))^2 = a + b*sqrt(d):
        //   x^2 + d y^2 = a,  2xy = b  =>  x^2 = (a +- sqrt(a^2 - d b^2))/2.
        let n = self.norm();
        let m = Scalar::sqrt_rational(&n);
        let m = match m.as_rational() {
            Some(r) if !r.is_negative() => r.clone(),
            _ => return Err(ScalarError::NotRepresentable),
        };
        let two = Rat::from_integer(Int::from(2));
        for x2 in [(&self.a + &m) / &two, (&self.a - &m) / &two] {
            let x = Scalar::sqrt_rational(&x2);
            if let Some(x) = x.as_rational() {
                if !x.is_zero() {
                    let y = &self.b / (&two * x);
                    let cand = Scalar::normalized(x.clone(), y, self.d.clone());
                    if &(&cand * &cand) == self {
                        return Ok(cand);
                    }
                }
            }
        }
        Err(ScalarError::NotRepresentable)
    }

    /// The least `p` with `self^p == 1`, if one exists.
    ///
    /// A quadratic field only contains roots of unity of order 1, 2, 3, 4
    /// or 6 (the Euler phi of the order is at most 2), so the search is a
    /// finite exact check.
    pub fn root_of_unity_order(&self) -> Result<Option<u32>, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroArgument);
        }
        for p in [1u32, 2, 3, 4, 6] {
            if self.pow(p).is_one() {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }

    /// The sign of a real scalar: `-1`, `0` or `1`.  Errors for `d < 0`.
    pub fn sign(&self) -> Result<i32, ScalarError> {
        if self.d.is_negative() {
            return Err(ScalarError::NotOrdered);
        }
        if self.b.is_zero() {
            return Ok(rat_sign(&self.a));
        }
        if self.a.is_zero() {
            return Ok(rat_sign(&self.b));
        }
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sa == sb {
            return Ok(sa);
        }
        // Opposite signs: compare a^2 with d*b^2.  Equality cannot occur
        // because sqrt(d) is irrational for square-free d > 1.
        let a2 = &self.a * &self.a;
        let db2 = Rat::from_integer(self.d.clone()) * &self.b * &self.b;
        debug_assert_ne!(a2, db2);
        Ok(if a2 > db2 { sa } else { sb })
    }

    /// Absolute value of a real scalar.
    pub fn abs(&self) -> Result<Scalar, ScalarError> {
        Ok(if self.sign()? < 0 { -self } else { self.clone() })
    }

    /// Numeric comparison of two real scalars with a common discriminant.
    pub fn cmp_real(&self, rhs: &Scalar) -> Result<Ordering, ScalarError> {
        let diff = self.checked_sub(rhs)?;
        Ok(match diff.sign()? {
            0 => Ordering::Equal,
            s if s < 0 => Ordering::Less,
            _ => Ordering::Greater,
        })
    }

    /// Compares `|self|` with `|rhs|` for real scalars.
    pub fn cmp_abs(&self, rhs: &Scalar) -> Result<Ordering, ScalarError> {
        let lhs2 = self.checked_mul(self)?;
        let rhs2 = rhs.checked_mul(rhs)?;
        lhs2.cmp_real(&rhs2)
    }
}

fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

/// Writes `n` as `sf * f^2` with `sf` square-free (sign kept on `sf`).
/// Full trial division; intended for parameter-sized inputs.
fn square_free_decompose(n: &Int) -> (Int, Int) {
    assert!(!n.is_zero(), "square-free decomposition of zero");
    let negative = n.is_negative();
    let mut m = n.abs();
    let mut sf = Int::one();
    let mut f = Int::one();
    let mut p = Int::from(2);
    while &p * &p <= m {
        let mut e = 0u64;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            f *= p.pow((e / 2) as u32);
            if e % 2 == 1 {
                sf *= &p;
            }
        }
        p = if p == Int::from(2) { Int::from(3) } else { p + 2 };
    }
    sf *= m;
    if negative {
        sf = -sf;
    }
    (sf, f)
}

/// Finds a discriminant compatible with every scalar in `iter`.
pub fn common_disc<'a, I: IntoIterator<Item = &'a Scalar>>(iter: I) -> Result<Int, ScalarError> {
    let mut d = Int::one();
    for s in iter {
        if d.is_one() {
            d = s.d.clone();
        } else if !s.d.is_one() && s.d != d {
            return Err(ScalarError::IncompatibleDiscriminants(d, s.d.clone()));
        }
    }
    Ok(d)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("incompatible discriminants; unify inputs first")
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::normalized(-self.a.clone(), -self.b.clone(), self.d.clone())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Canonical text for a rational: `n` or `n/d`.
pub fn format_rat(r: &Rat) -> String {
    use alloc::format;
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", format_rat(&self.a));
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        let mag = self.b.abs();
        write!(f, "{}{}{}*sqrt({})", format_rat(&self.a), sign, format_rat(&mag), self.d)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}
