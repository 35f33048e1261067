//! Weight recurrences and their closed forms, the weight maps `delta`
//! and `mu`, orbits, the weight-coincidence classifier, linkage, and
//! parameter conversions from related presentations.
//!
//! The highest-weight sequence is
//!
//! ```text
//! lambda_n = alpha*lambda_{n-1} + beta*lambda_{n-2} + gamma,
//! lambda_{-1} = 0, lambda_0 = lambda,
//! ```
//!
//! and the lowest-weight sequence satisfies
//! `beta*kappa_n + alpha*kappa_{n-1} - kappa_{n-2} = -gamma` with
//! `kappa_{-1} = 0`, `kappa_0 = kappa`.  Closed forms come from the
//! characteristic roots; every formula here is validated against direct
//! iteration of the recurrence, exactly, in the tests and acceptance
//! suite.

use alloc::vec::Vec;
use core::fmt;

use crate::pbw::Params;
use crate::scalar::{Rat, Scalar, ScalarError};

/// Errors from weight computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightsError {
    /// The operation requires `beta != 0`.
    BetaZero,
    /// A lowest-weight request with `beta == 0` needs `kappa == -gamma/alpha`.
    InadmissibleLowestWeight,
    /// `alpha == beta == 0` with `gamma != 0`: no lowest-weight sequence
    /// exists beyond the one-dimensional module.
    NoLowestWeightSequence,
    /// A precondition on a conversion input failed; the string names it.
    Precondition(&'static str),
    Scalar(ScalarError),
}

impl fmt::Display for WeightsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightsError::BetaZero => write!(f, "beta must be nonzero"),
            WeightsError::InadmissibleLowestWeight => {
                write!(f, "with beta = 0 the lowest weight must be kappa = -gamma/alpha")
            }
            WeightsError::NoLowestWeightSequence => {
                write!(f, "alpha = beta = 0 with gamma != 0 admits no lowest-weight sequence")
            }
            WeightsError::Precondition(cond) => write!(f, "precondition violated: {cond}"),
            WeightsError::Scalar(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for WeightsError {}

impl From<ScalarError> for WeightsError {
    fn from(e: ScalarError) -> Self {
        WeightsError::Scalar(e)
    }
}

/// A weight: the joint eigenvalue pair of `(du, ud)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    /// Eigenvalue of `du`.
    pub nu1: Scalar,
    /// Eigenvalue of `ud`.
    pub nu2: Scalar,
}

impl Weight {
    pub fn new(nu1: Scalar, nu2: Scalar) -> Self {
        Weight { nu1, nu2 }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.nu1, self.nu2)
    }
}

/// `[lambda_0, ..., lambda_{n_max}]` by exact iteration.
pub fn lambda_seq(p: &Params, lambda: &Scalar, n_max: usize) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut prev = Scalar::zero();
    let mut cur = lambda.clone();
    out.push(cur.clone());
    for _ in 0..n_max {
        let next = &p.alpha * &cur + &p.beta * &prev + &p.gamma;
        prev = cur;
        cur = next;
        out.push(cur.clone());
    }
    out
}

/// The coefficient of `lambda` in `lambda_n` (same homogeneous
/// recurrence, seeded `m_{-1} = 0`, `m_0 = 1`); `lambda_n` is simple for
/// generic `lambda` exactly while these stay nonzero.
pub fn lambda_slope_seq(p: &Params, n_max: usize) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut prev = Scalar::zero();
    let mut cur = Scalar::one();
    out.push(cur.clone());
    for _ in 0..n_max {
        let next = &p.alpha * &cur + &p.beta * &prev;
        prev = cur;
        cur = next;
        out.push(cur.clone());
    }
    out
}

/// `[kappa_0, ..., kappa_{n_max}]`, per the case split on `beta`.
pub fn kappa_seq(p: &Params, kappa: &Scalar, n_max: usize) -> Result<Vec<Scalar>, WeightsError> {
    p.check_disc([kappa])?;
    let mut out = Vec::with_capacity(n_max + 1);
    if !p.beta.is_zero() {
        let mut prev = Scalar::zero();
        let mut cur = kappa.clone();
        out.push(cur.clone());
        for _ in 0..n_max {
            let next = (&(-(&p.alpha * &cur)) + &prev - &p.gamma).div(&p.beta)?;
            prev = cur;
            cur = next;
            out.push(cur.clone());
        }
        return Ok(out);
    }
    if !p.alpha.is_zero() {
        // beta = 0 collapses the recurrence to alpha*kappa_n = kappa_{n-1} - gamma,
        // whose n = 0 instance pins kappa to -gamma/alpha.
        let admissible = (-&p.gamma).div(&p.alpha)?;
        if kappa != &admissible {
            return Err(WeightsError::InadmissibleLowestWeight);
        }
        let mut cur = admissible;
        out.push(cur.clone());
        for _ in 0..n_max {
            cur = (&cur - &p.gamma).div(&p.alpha)?;
            out.push(cur.clone());
        }
        return Ok(out);
    }
    if p.gamma.is_zero() {
        out.extend(core::iter::repeat(Scalar::zero()).take(n_max + 1));
        Ok(out)
    } else {
        Err(WeightsError::NoLowestWeightSequence)
    }
}

/// How the inhomogeneous part of a closed form depends on `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Particular {
    Constant(Scalar),
    LinearInN(Scalar),
    QuadraticInN(Scalar),
}

impl Particular {
    pub fn eval(&self, n: u32) -> Scalar {
        let n_s = Scalar::rational(Rat::from_integer(n.into()));
        match self {
            Particular::Constant(c) => c.clone(),
            Particular::LinearInN(a) => a * &n_s,
            Particular::QuadraticInN(a) => a * &n_s * &n_s,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Particular::Constant(_) => "constant",
            Particular::LinearInN(_) => "linear-in-n",
            Particular::QuadraticInN(_) => "quadratic-in-n",
        }
    }

    pub fn coeff(&self) -> &Scalar {
        match self {
            Particular::Constant(c) | Particular::LinearInN(c) | Particular::QuadraticInN(c) => c,
        }
    }
}

/// The shape of a solved linear recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedFormCase {
    /// `c1 r1^n + c2 r2^n + x_n` with `r1 != r2` (convention `0^0 = 1`).
    DistinctRoots { r1: Scalar, r2: Scalar, c1: Scalar, c2: Scalar },
    /// `(c1 + c2 n) s^n + x_n`.
    RepeatedRoot { s: Scalar, c1: Scalar, c2: Scalar },
    /// `alpha = beta = 0`: the value is `gamma` for every `n >= 1`.
    BothZero,
}

/// An exact closed form for a weight sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub case: ClosedFormCase,
    pub particular: Particular,
    /// The n = 0 value, which the `BothZero` case needs separately.
    initial: Scalar,
}

impl ClosedForm {
    /// Evaluates the closed form at `n >= 0`, exactly.
    pub fn eval(&self, n: u32) -> Scalar {
        match &self.case {
            ClosedFormCase::DistinctRoots { r1, r2, c1, c2 } => {
                c1 * &r1.pow(n) + c2 * &r2.pow(n) + self.particular.eval(n)
            }
            ClosedFormCase::RepeatedRoot { s, c1, c2 } => {
                let n_s = Scalar::rational(Rat::from_integer(n.into()));
                (c1 + &(c2 * &n_s)) * &s.pow(n) + self.particular.eval(n)
            }
            ClosedFormCase::BothZero => {
                if n == 0 {
                    self.initial.clone()
                } else {
                    self.particular.coeff().clone()
                }
            }
        }
    }
}

fn two() -> Scalar {
    Scalar::from_int(2)
}

/// The particular solution of `x_n = alpha x_{n-1} + beta x_{n-2} + gamma`
/// (the highest-weight recurrence), valid when `1` is not a double root.
fn lambda_particular(p: &Params) -> Result<Particular, WeightsError> {
    let one_minus = &Scalar::one() - &p.alpha - &p.beta;
    if !one_minus.is_zero() {
        Ok(Particular::Constant(p.gamma.div(&one_minus)?))
    } else {
        // alpha + beta = 1 and, in the repeated-root case, alpha = 2:
        // there x_n is quadratic instead.
        let denom = &two() - &p.alpha;
        if denom.is_zero() {
            Ok(Particular::QuadraticInN(p.gamma.div(&two())?))
        } else {
            Ok(Particular::LinearInN(p.gamma.div(&denom)?))
        }
    }
}

/// Closed form for the highest-weight sequence.
pub fn lambda_closed(p: &Params, lambda: &Scalar) -> Result<ClosedForm, WeightsError> {
    p.check_disc([lambda])?;
    let disc = &p.alpha * &p.alpha + &(Scalar::from_int(4) * &p.beta);
    if disc.is_zero() && p.alpha.is_zero() {
        // beta = 0 as well: lambda_n = gamma from n = 1 on.
        return Ok(ClosedForm {
            case: ClosedFormCase::BothZero,
            particular: Particular::Constant(p.gamma.clone()),
            initial: lambda.clone(),
        });
    }
    let particular = lambda_particular(p)?;
    let x0 = particular.eval(0);
    let x1 = particular.eval(1);
    let l1 = &p.alpha * lambda + &p.gamma;
    let y0 = lambda - &x0;
    let y1 = &l1 - &x1;
    if disc.is_zero() {
        let s = p.alpha.div(&two())?;
        let c1 = y0;
        let c2 = &y1.div(&s)? - &c1;
        return Ok(ClosedForm {
            case: ClosedFormCase::RepeatedRoot { s, c1, c2 },
            particular,
            initial: lambda.clone(),
        });
    }
    let t = disc.div(&Scalar::from_int(4))?.sqrt()?;
    let half_alpha = p.alpha.div(&two())?;
    let r1 = &half_alpha + &t;
    let r2 = &half_alpha - &t;
    let (c1, c2) = fit_two_roots(&r1, &r2, &y0, &y1)?;
    Ok(ClosedForm {
        case: ClosedFormCase::DistinctRoots { r1, r2, c1, c2 },
        particular,
        initial: lambda.clone(),
    })
}

/// Solves `c1 + c2 = y0`, `c1 r1 + c2 r2 = y1`.
fn fit_two_roots(
    r1: &Scalar,
    r2: &Scalar,
    y0: &Scalar,
    y1: &Scalar,
) -> Result<(Scalar, Scalar), WeightsError> {
    let det = r2 - r1;
    let c1 = (&(r2 * y0) - y1).div(&det)?;
    let c2 = (y1 - &(r1 * y0)).div(&det)?;
    Ok((c1, c2))
}

/// The particular solution of the lowest-weight recurrence
/// `beta x_n + alpha x_{n-1} - x_{n-2} = -gamma`.
fn kappa_particular(p: &Params) -> Result<Particular, WeightsError> {
    let one_minus = &Scalar::one() - &p.alpha - &p.beta;
    if !one_minus.is_zero() {
        Ok(Particular::Constant(p.gamma.div(&one_minus)?))
    } else {
        let denom = &p.alpha - &two();
        if denom.is_zero() {
            // alpha = 2, beta = -1: a quadratic particular term.
            Ok(Particular::QuadraticInN(p.gamma.div(&two())?))
        } else {
            Ok(Particular::LinearInN(p.gamma.div(&denom)?))
        }
    }
}

/// Closed form for the lowest-weight sequence; requires `beta != 0`.
///
/// The characteristic equation is `beta x^2 + alpha x - 1 = 0`, so the
/// roots are `-alpha/(2 beta) +- t` with `t^2 = (alpha^2 + 4 beta) /
/// (4 beta^2)`.
pub fn kappa_closed(p: &Params, kappa: &Scalar) -> Result<ClosedForm, WeightsError> {
    p.check_disc([kappa])?;
    if p.beta.is_zero() {
        return Err(WeightsError::BetaZero);
    }
    let disc = &p.alpha * &p.alpha + &(Scalar::from_int(4) * &p.beta);
    let particular = kappa_particular(p)?;
    let x0 = particular.eval(0);
    let x1 = particular.eval(1);
    let k1 = (-&(&p.gamma + &(&p.alpha * kappa))).div(&p.beta)?;
    let y0 = kappa - &x0;
    let y1 = &k1 - &x1;
    let neg_a_over_2b = (-&p.alpha).div(&(&two() * &p.beta))?;
    if disc.is_zero() {
        // alpha != 0 here, since alpha = 0 would force beta = 0.
        let s = neg_a_over_2b;
        let c1 = y0;
        let c2 = &y1.div(&s)? - &c1;
        return Ok(ClosedForm {
            case: ClosedFormCase::RepeatedRoot { s, c1, c2 },
            particular,
            initial: kappa.clone(),
        });
    }
    let four_b2 = Scalar::from_int(4) * &p.beta * &p.beta;
    let t = disc.div(&four_b2)?.sqrt()?;
    let r1 = &neg_a_over_2b + &t;
    let r2 = &neg_a_over_2b - &t;
    let (c1, c2) = fit_two_roots(&r1, &r2, &y0, &y1)?;
    Ok(ClosedForm {
        case: ClosedFormCase::DistinctRoots { r1, r2, c1, c2 },
        particular,
        initial: kappa.clone(),
    })
}

/// The weight of `d . m` when `m` has weight `nu`; requires `beta != 0`.
pub fn delta_map(p: &Params, nu: &Weight) -> Result<Weight, WeightsError> {
    p.check_disc([&nu.nu1, &nu.nu2])?;
    if p.beta.is_zero() {
        return Err(WeightsError::BetaZero);
    }
    let second = (&(&nu.nu1 - &(&p.alpha * &nu.nu2)) - &p.gamma).div(&p.beta)?;
    Ok(Weight::new(nu.nu2.clone(), second))
}

/// The weight of `u . m` when `m` has weight `nu`.
pub fn mu_map(p: &Params, nu: &Weight) -> Result<Weight, WeightsError> {
    p.check_disc([&nu.nu1, &nu.nu2])?;
    let first = &(&p.alpha * &nu.nu1) + &(&p.beta * &nu.nu2) + &p.gamma;
    Ok(Weight::new(first, nu.nu1.clone()))
}

/// The result of iterating `delta` from a starting weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orbit {
    /// `delta^p(nu) == nu`; the orbit lists `nu, delta(nu), ...,
    /// delta^(p-1)(nu)` and is closed under both `delta` and `mu`.
    Periodic(Vec<Weight>),
    /// No period up to the bound; the visited prefix in order.
    AcyclicPrefix(Vec<Weight>),
}

/// Iterates `delta` up to `bound` steps looking for a return to `nu`.
pub fn orbit(p: &Params, nu: &Weight, bound: usize) -> Result<Orbit, WeightsError> {
    let mut seen = Vec::new();
    let mut cur = nu.clone();
    for _ in 0..=bound {
        seen.push(cur.clone());
        cur = delta_map(p, &cur)?;
        if &cur == nu {
            return Ok(Orbit::Periodic(seen));
        }
    }
    Ok(Orbit::AcyclicPrefix(seen))
}

/// Which coincidence pattern the weight sequence falls into.  The labels
/// follow the case split of the classification theorem for repeated
/// weight pairs `(lambda_l, lambda_{l-1}) = (lambda_k, lambda_{k-1})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoincidenceCase {
    /// Distinct roots, `gamma = 0`, all weights zero.
    A1,
    /// Distinct roots with `beta = 0`: the constant sequence `gamma/(1-alpha)`.
    A2,
    /// One surviving geometric term whose root is a root of unity.
    A3,
    /// Both geometric terms survive and both roots are roots of unity.
    A4,
    /// `alpha + beta = 1`, `gamma = 0`, constant sequence (zero, or `alpha = 1`).
    B1,
    /// `alpha + beta = 1`, `gamma = 0`, `alpha - 1` a root of unity.
    B2,
    /// Repeated root, `gamma = 0`, all weights zero.
    C1,
    /// Repeated root `s = alpha/2` a root of unity, `lambda = 2 gamma/(2-alpha)`.
    C2,
    /// `alpha = 2, beta = -1`: coincidence only for `gamma = lambda = 0`.
    D,
    /// `alpha = beta = 0`: the sequence is `gamma` from `n = 1` on.
    E,
    NoCoincidence,
}

impl CoincidenceCase {
    pub fn label(&self) -> &'static str {
        match self {
            CoincidenceCase::A1 => "a1",
            CoincidenceCase::A2 => "a2",
            CoincidenceCase::A3 => "a3",
            CoincidenceCase::A4 => "a4",
            CoincidenceCase::B1 => "b1",
            CoincidenceCase::B2 => "b2",
            CoincidenceCase::C1 => "c1",
            CoincidenceCase::C2 => "c2",
            CoincidenceCase::D => "d",
            CoincidenceCase::E => "e",
            CoincidenceCase::NoCoincidence => "no-coincidence",
        }
    }
}

/// Verdict of the coincidence classifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoincidenceReport {
    pub case: CoincidenceCase,
    /// When present, `lambda_{n+p} = lambda_n` holds for every `n >= 0`.
    pub period: Option<u32>,
    /// The smallest witness `(k, l)`, `l > k`, with equal weight pairs.
    pub witness: Option<(u32, u32)>,
}

impl CoincidenceReport {
    pub fn coincides(&self) -> bool {
        self.case != CoincidenceCase::NoCoincidence
    }

    fn none() -> Self {
        CoincidenceReport { case: CoincidenceCase::NoCoincidence, period: None, witness: None }
    }

    fn found(p: &Params, lambda: &Scalar, case: CoincidenceCase, period: Option<u32>) -> Self {
        let scan_to = period.map(|p| 2 * p + 4).unwrap_or(8).max(8) as usize;
        let witness = scan_coincidence(p, lambda, scan_to);
        debug_assert!(witness.is_some(), "classifier found {case:?} but no witness in range");
        CoincidenceReport { case, period, witness }
    }
}

/// Brute-force scan for the minimal repeated weight pair with
/// `l <= bound`; the independent oracle for the classifier.
pub fn scan_coincidence(p: &Params, lambda: &Scalar, bound: usize) -> Option<(u32, u32)> {
    let seq = lambda_seq(p, lambda, bound);
    // Pairs (lambda_n, lambda_{n-1}) for n = 0..=bound, with lambda_{-1} = 0.
    let pair = |n: usize| {
        let prev = if n == 0 { Scalar::zero() } else { seq[n - 1].clone() };
        (seq[n].clone(), prev)
    };
    for l in 1..=bound {
        for k in 0..l {
            let (a1, b1) = pair(l);
            let (a2, b2) = pair(k);
            if a1 == a2 && b1 == b2 {
                return Some((k as u32, l as u32));
            }
        }
    }
    None
}

/// Decides whether two weight pairs of `V(lambda)` ever coincide, by the
/// closed-form case analysis (root-of-unity tests are exact and finite
/// in a quadratic field).
pub fn classify_coincidence(
    p: &Params,
    lambda: &Scalar,
) -> Result<CoincidenceReport, WeightsError> {
    p.check_disc([lambda])?;
    let alpha = &p.alpha;
    let beta = &p.beta;
    let gamma = &p.gamma;
    let all_zero = gamma.is_zero() && lambda.is_zero();

    // alpha = beta = 0: the sequence is gamma from n = 1 on, so pairs
    // repeat from n = 2 (or earlier).  A period valid from n = 0 exists
    // only when lambda itself equals gamma.
    if alpha.is_zero() && beta.is_zero() {
        let period = if lambda == gamma { Some(1) } else { None };
        return Ok(CoincidenceReport::found(p, lambda, CoincidenceCase::E, period));
    }

    let disc = alpha * alpha + Scalar::from_int(4) * beta;

    if disc.is_zero() {
        // Repeated root s = alpha/2, alpha != 0.
        if alpha == &two() {
            // A(2, -1, gamma): only the all-zero sequence repeats.
            return Ok(if all_zero {
                CoincidenceReport::found(p, lambda, CoincidenceCase::D, Some(1))
            } else {
                CoincidenceReport::none()
            });
        }
        if all_zero {
            return Ok(CoincidenceReport::found(p, lambda, CoincidenceCase::C1, Some(1)));
        }
        // Coincidence needs the n s^n coefficient to vanish, which pins
        // lambda = 2 gamma / (2 - alpha), and s to be a root of unity.
        let s = alpha.div(&two())?;
        let pinned = (&two() * gamma).div(&(&two() - alpha))?;
        if lambda != &pinned {
            return Ok(CoincidenceReport::none());
        }
        // lambda = pinned with gamma = 0 implies lambda = 0, handled above.
        debug_assert!(!gamma.is_zero());
        return Ok(match s.root_of_unity_order()? {
            Some(ord) => CoincidenceReport::found(p, lambda, CoincidenceCase::C2, Some(ord)),
            None => CoincidenceReport::none(),
        });
    }

    let one_minus = &Scalar::one() - alpha - beta;
    if one_minus.is_zero() {
        // Roots {1, alpha - 1}; coincidences force gamma = 0.
        if !gamma.is_zero() {
            return Ok(CoincidenceReport::none());
        }
        if lambda.is_zero() || alpha.is_one() {
            return Ok(CoincidenceReport::found(p, lambda, CoincidenceCase::B1, Some(1)));
        }
        let r = alpha - &Scalar::one();
        return Ok(match r.root_of_unity_order()? {
            Some(ord) => CoincidenceReport::found(p, lambda, CoincidenceCase::B2, Some(ord)),
            None => CoincidenceReport::none(),
        });
    }

    if beta.is_zero() {
        // Roots {0, alpha} with alpha != 0, 1.
        let fixed = gamma.div(&one_minus)?;
        let c = lambda - &fixed;
        if c.is_zero() {
            return Ok(if gamma.is_zero() {
                CoincidenceReport::found(p, lambda, CoincidenceCase::A1, Some(1))
            } else {
                CoincidenceReport::found(p, lambda, CoincidenceCase::A2, Some(1))
            });
        }
        return Ok(match alpha.root_of_unity_order()? {
            Some(ord) => CoincidenceReport::found(p, lambda, CoincidenceCase::A3, Some(ord)),
            None => CoincidenceReport::none(),
        });
    }

    // Distinct nonzero roots.  The all-zero check avoids computing roots
    // that may not be representable.
    if all_zero {
        return Ok(CoincidenceReport::found(p, lambda, CoincidenceCase::A1, Some(1)));
    }
    let cf = lambda_closed(p, lambda)?;
    let (r1, r2, c1, c2) = match &cf.case {
        ClosedFormCase::DistinctRoots { r1, r2, c1, c2 } => (r1, r2, c1, c2),
        _ => unreachable!("nonzero discriminant yields distinct roots"),
    };
    match (c1.is_zero(), c2.is_zero()) {
        (true, true) => {
            // Constant from n = 0 with beta != 0 forces the zero sequence.
            debug_assert!(all_zero);
            Ok(CoincidenceReport::found(p, lambda, CoincidenceCase::A1, Some(1)))
        }
        (false, true) => Ok(match r1.root_of_unity_order()? {
            Some(ord) => CoincidenceReport::found(p, lambda, CoincidenceCase::A3, Some(ord)),
            None => CoincidenceReport::none(),
        }),
        (true, false) => Ok(match r2.root_of_unity_order()? {
            Some(ord) => CoincidenceReport::found(p, lambda, CoincidenceCase::A3, Some(ord)),
            None => CoincidenceReport::none(),
        }),
        (false, false) => {
            let o1 = r1.root_of_unity_order()?;
            let o2 = r2.root_of_unity_order()?;
            Ok(match (o1, o2) {
                (Some(p1), Some(p2)) => {
                    let ord = lcm(p1, p2);
                    CoincidenceReport::found(p, lambda, CoincidenceCase::A4, Some(ord))
                }
                _ => CoincidenceReport::none(),
            })
        }
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

/// Whether `pi` is linked to `lambda`: `pi == lambda_{n+1}` for some
/// `n <= bound` with `lambda_n == 0`.  Linked weights share central
/// characters.
pub fn linked(p: &Params, pi: &Scalar, lambda: &Scalar, bound: usize) -> bool {
    let seq = lambda_seq(p, lambda, bound + 1);
    (0..=bound).any(|n| seq[n].is_zero() && &seq[n + 1] == pi)
}

/// Sufficient condition for infinitely many simple Verma modules: in the
/// distinct-root case the ratio of the characteristic roots must not be
/// a root of unity; a repeated nonzero root always qualifies; for
/// `alpha = beta = 0` the condition is `gamma != 0`.
pub fn infinitely_many_simple_vermas(p: &Params) -> Result<bool, WeightsError> {
    let disc = &p.alpha * &p.alpha + &(Scalar::from_int(4) * &p.beta);
    if disc.is_zero() {
        return Ok(if p.alpha.is_zero() { !p.gamma.is_zero() } else { true });
    }
    if p.beta.is_zero() {
        // Roots {0, alpha}: the lambda-coefficient is alpha^n, never zero.
        return Ok(true);
    }
    let t = disc.div(&Scalar::from_int(4))?.sqrt()?;
    let half_alpha = p.alpha.div(&two())?;
    let r1 = &half_alpha + &t;
    let r2 = &half_alpha - &t;
    let ratio = r1.div(&r2)?;
    Ok(ratio.root_of_unity_order()?.is_none())
}

/// Parameter conversions from other presentations.
pub mod convert {
    use super::*;

    /// From the seven-parameter deformation with
    /// `xi_6 = 0`, `xi_5 xi_7 != 0`, `xi_1 = xi_3`, `xi_2 = xi_4`:
    /// `alpha = (1 + xi_1 xi_5)/xi_5`, `beta = -xi_1/xi_5`,
    /// `gamma = -xi_2 xi_7 / xi_5`.
    pub fn witten(xi: &[Scalar; 7]) -> Result<Params, WeightsError> {
        crate::scalar::common_disc(xi.iter())?;
        if !xi[5].is_zero() {
            return Err(WeightsError::Precondition("xi_6 = 0"));
        }
        if xi[4].is_zero() || xi[6].is_zero() {
            return Err(WeightsError::Precondition("xi_5 * xi_7 != 0"));
        }
        if xi[0] != xi[2] {
            return Err(WeightsError::Precondition("xi_1 = xi_3"));
        }
        if xi[1] != xi[3] {
            return Err(WeightsError::Precondition("xi_2 = xi_4"));
        }
        let alpha = (&Scalar::one() + &(&xi[0] * &xi[4])).div(&xi[4])?;
        let beta = (-&xi[0]).div(&xi[4])?;
        let gamma = (-&(&xi[1] * &xi[6])).div(&xi[4])?;
        Ok(Params { alpha, beta, gamma })
    }

    /// From the conformal presentation: for `c != 0`, `b = 0` the triple
    /// is `(c^{-1}(1 + ac), -a c^{-1}, -c^{-1})`; for `b = c = 0`,
    /// `a != 0` it is `(a^{-1}, 0, -a^{-1})`.
    pub fn conformal(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<Params, WeightsError> {
        crate::scalar::common_disc([a, b, c])?;
        if !b.is_zero() {
            return Err(WeightsError::Precondition("b = 0"));
        }
        if !c.is_zero() {
            let c_inv = c.inv().map_err(WeightsError::Scalar)?;
            let alpha = &c_inv * &(&Scalar::one() + &(a * c));
            let beta = -&(a * &c_inv);
            let gamma = -&c_inv;
            return Ok(Params { alpha, beta, gamma });
        }
        if a.is_zero() {
            return Err(WeightsError::Precondition("c != 0, or b = c = 0 with a != 0"));
        }
        let a_inv = a.inv().map_err(WeightsError::Scalar)?;
        Ok(Params { alpha: a_inv.clone(), beta: Scalar::zero(), gamma: -&a_inv })
    }

    /// From the one-parameter twisted presentation, `zeta` outside
    /// `{0, 1, -1}`: `(zeta^2 (1 + zeta^2), -zeta^6, zeta (1 + zeta^2))`.
    pub fn woronowicz(zeta: &Scalar) -> Result<Params, WeightsError> {
        if zeta.is_zero() || zeta.is_one() || (-zeta).is_one() {
            return Err(WeightsError::Precondition("zeta not in {0, 1, -1}"));
        }
        let z2 = zeta.pow(2);
        let one_plus = &Scalar::one() + &z2;
        Ok(Params {
            alpha: &z2 * &one_plus,
            beta: -&zeta.pow(6),
            gamma: zeta * &one_plus,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn frac(n: i64, m: i64) -> Scalar {
        Scalar::fraction(n, m)
    }

    fn params(a: i64, b: i64, g: i64) -> Params {
        Params::from_ints(a, b, g)
    }

    #[test]
    fn fibonacci_weights() {
        let seq = lambda_seq(&params(1, 1, 0), &s(1), 6);
        let want: Vec<Scalar> = [1, 1, 2, 3, 5, 8, 13].iter().map(|&n| s(n)).collect();
        assert_eq!(seq, want);
    }

    #[test]
    fn sl2_weights_match_product_form() {
        // lambda_n = (gamma/2 n + lambda)(n + 1) for A(2, -1, gamma).
        let p = params(2, -1, -2);
        let seq = lambda_seq(&p, &s(3), 4);
        let want: Vec<Scalar> = (0..=4)
            .map(|n| (frac(-2, 2) * s(n) + s(3)) * s(n + 1))
            .collect();
        assert_eq!(seq, want);
        assert_eq!(seq, [3, 4, 3, 0, -5].map(s).to_vec());
    }

    #[test]
    fn zero_seed_with_zero_gamma_stays_zero() {
        let p = Params::new(frac(3, 7), frac(-2, 5), Scalar::zero()).unwrap();
        assert!(lambda_seq(&p, &Scalar::zero(), 10).iter().all(Scalar::is_zero));
    }

    fn assert_closed_matches_seq(p: &Params, lambda: &Scalar, n: usize) {
        let seq = lambda_seq(p, lambda, n);
        let cf = lambda_closed(p, lambda).unwrap();
        for (i, v) in seq.iter().enumerate() {
            assert_eq!(&cf.eval(i as u32), v, "{p} lambda={lambda} n={i}");
        }
    }

    #[test]
    fn lambda_closed_cases_agree_with_iteration() {
        // Distinct roots, repeated root, zero root (beta = 0), both zero,
        // alpha + beta = 1 (linear particular), alpha = 2, beta = -1
        // (quadratic particular).
        for (a, b, g) in [
            (1, 1, 0),
            (2, -1, -2),
            (2, -1, 5),
            (3, 0, 6),
            (0, 1, 0),
            (0, 0, 7),
            (0, 0, 0),
            (3, -2, 4),
            (-1, 2, 1),
            (5, 2, -3),
        ] {
            for l in [-2, 0, 1, 3] {
                assert_closed_matches_seq(&params(a, b, g), &s(l), 25);
            }
        }
    }

    #[test]
    fn lambda_closed_quantum_specialization() {
        // alpha = p + 1/p with p = 2: lambda_n = [n+1] lambda with
        // [n+1] = (2^{n+1} - 2^{-(n+1)})/(3/2).
        let p = Params::new(frac(5, 2), s(-1), s(0)).unwrap();
        let lambda = s(3);
        let seq = lambda_seq(&p, &lambda, 10);
        for (n, v) in seq.iter().enumerate() {
            let e = (n + 1) as u32;
            let bracket =
                (frac(2, 1).pow(e) - frac(1, 2).pow(e)).div(&frac(3, 2)).unwrap();
            assert_eq!(v, &(bracket * lambda.clone()));
        }
        assert_closed_matches_seq(&p, &lambda, 10);
    }

    #[test]
    fn lambda_closed_fibonacci_discriminant() {
        let p = params(1, 1, 0);
        let cf = lambda_closed(&p, &s(1)).unwrap();
        match &cf.case {
            ClosedFormCase::DistinctRoots { r1, .. } => {
                let t = frac(1, 2) * Scalar::sqrt_of(5);
                assert_eq!(r1, &(frac(1, 2) + t));
            }
            other => panic!("expected distinct roots, got {other:?}"),
        }
        assert_closed_matches_seq(&p, &s(1), 20);
    }

    #[test]
    fn kappa_seq_beta_nonzero_satisfies_recurrence() {
        let p = params(2, -1, -2);
        let seq = kappa_seq(&p, &s(0), 20).unwrap();
        for n in 2..seq.len() {
            let residual = &p.beta * &seq[n] + &p.alpha * &seq[n - 1] - &seq[n - 2] + &p.gamma;
            assert!(residual.is_zero(), "n = {n}");
        }
        // And the n = 1 instance against kappa_{-1} = 0.
        let r1 = &p.beta * &seq[1] + &p.alpha * &seq[0] + &p.gamma;
        assert!(r1.is_zero());
    }

    #[test]
    fn kappa_seq_beta_zero_matches_geometric_sum() {
        // A(3, 0, 6): kappa = -2 and kappa_n = -6 sum_{j=1}^{n+1} 3^{-j}.
        let p = params(3, 0, 6);
        let seq = kappa_seq(&p, &s(-2), 6).unwrap();
        assert_eq!(seq[0], s(-2));
        assert_eq!(seq[1], frac(-8, 3));
        for (n, v) in seq.iter().enumerate() {
            let mut sum = Scalar::zero();
            for j in 1..=(n as u32 + 1) {
                sum = sum + frac(1, 3).pow(j);
            }
            assert_eq!(v, &(s(-6) * sum));
        }
        assert_eq!(
            kappa_seq(&p, &s(1), 3),
            Err(WeightsError::InadmissibleLowestWeight)
        );
    }

    #[test]
    fn kappa_seq_degenerate_cases() {
        assert!(kappa_seq(&params(0, 0, 0), &s(0), 5)
            .unwrap()
            .iter()
            .all(Scalar::is_zero));
        assert_eq!(
            kappa_seq(&params(0, 0, 3), &s(0), 5),
            Err(WeightsError::NoLowestWeightSequence)
        );
    }

    #[test]
    fn kappa_closed_agrees_with_iteration() {
        for (a, b, g) in [(2, -1, -2), (0, 1, 0), (3, 2, 1), (1, 1, 0), (-2, 3, -4), (2, -1, 6)] {
            let p = params(a, b, g);
            for k in [-1, 0, 2] {
                let seq = kappa_seq(&p, &s(k), 30).unwrap();
                let cf = kappa_closed(&p, &s(k)).unwrap();
                for (i, v) in seq.iter().enumerate() {
                    assert_eq!(&cf.eval(i as u32), v, "A({a},{b},{g}) kappa={k} n={i}");
                }
            }
        }
        assert_eq!(kappa_closed(&params(3, 0, 6), &s(-2)), Err(WeightsError::BetaZero));
    }

    #[test]
    fn kappa_closed_repeated_root_shape() {
        // A(2, -1, gamma): s = -alpha/(2 beta) = 1 and x_n = (gamma/2) n^2.
        let p = params(2, -1, -2);
        let cf = kappa_closed(&p, &s(0)).unwrap();
        match &cf.case {
            ClosedFormCase::RepeatedRoot { s: root, .. } => assert_eq!(root, &s(1)),
            other => panic!("expected repeated root, got {other:?}"),
        }
        assert_eq!(cf.particular, Particular::QuadraticInN(s(-1)));
    }

    #[test]
    fn delta_and_mu_are_inverse() {
        let p = params(0, 1, 0);
        let nu = Weight::new(s(1), s(2));
        let d = delta_map(&p, &nu).unwrap();
        assert_eq!(d, Weight::new(s(2), s(1)));
        assert_eq!(mu_map(&p, &d).unwrap(), nu);
        let m = mu_map(&p, &nu).unwrap();
        assert_eq!(m, Weight::new(s(2), s(1)));
        assert_eq!(delta_map(&p, &m).unwrap(), nu);

        let q = params(2, -1, -2);
        for (x, y) in [(3, 5), (-1, 0), (7, -2)] {
            let w = Weight::new(s(x), s(y));
            assert_eq!(mu_map(&q, &delta_map(&q, &w).unwrap()).unwrap(), w);
            assert_eq!(delta_map(&q, &mu_map(&q, &w).unwrap()).unwrap(), w);
        }
        assert_eq!(
            delta_map(&params(1, 0, 0), &nu),
            Err(WeightsError::BetaZero)
        );
    }

    #[test]
    fn mu_iterates_the_weight_sequence() {
        let p = params(2, -1, -2);
        let lambda = s(2);
        let seq = lambda_seq(&p, &lambda, 30);
        let mut w = Weight::new(lambda, Scalar::zero());
        for n in 0..30 {
            assert_eq!(w.nu1, seq[n]);
            if n > 0 {
                assert_eq!(w.nu2, seq[n - 1]);
            }
            w = mu_map(&p, &w).unwrap();
        }
    }

    #[test]
    fn delta_fixed_point() {
        // nu' = nu'' = c with (1 - alpha - beta) c = gamma.
        let p = params(3, -4, 6);
        let c = s(3);
        let nu = Weight::new(c.clone(), c);
        assert_eq!(delta_map(&p, &nu).unwrap(), nu);
        assert_eq!(orbit(&p, &nu, 10).unwrap(), Orbit::Periodic(alloc::vec![nu]));
    }

    #[test]
    fn orbit_period_two() {
        let p = params(0, 1, 0);
        let nu = Weight::new(s(1), s(2));
        match orbit(&p, &nu, 10).unwrap() {
            Orbit::Periodic(f) => {
                assert_eq!(f, alloc::vec![nu, Weight::new(s(2), s(1))]);
            }
            other => panic!("expected periodic, got {other:?}"),
        }
    }

    #[test]
    fn orbit_acyclic() {
        let p = params(2, -1, -2);
        match orbit(&p, &Weight::new(s(1), s(0)), 50).unwrap() {
            Orbit::AcyclicPrefix(prefix) => assert_eq!(prefix.len(), 51),
            other => panic!("expected acyclic, got {other:?}"),
        }
    }

    #[test]
    fn classifier_matches_brute_force() {
        // Grid over parameters and seeds; oracle is the direct pair scan.
        let grid: Vec<(i64, i64, i64)> = alloc::vec![
            (2, -1, 0),
            (2, -1, -2),
            (0, 0, 5),
            (0, 1, 0),
            (1, 1, 0),
            (0, -1, 0),
            (-1, -1, 2),
            (3, 0, 6),
            (2, 0, 3),
            (-1, 0, 2),
            (0, 2, 0),
            (1, 0, 0),
        ];
        for (a, b, g) in grid {
            let p = params(a, b, g);
            for l in [-2, -1, 0, 1, 2, 3] {
                let lambda = s(l);
                let report = classify_coincidence(&p, &lambda).unwrap();
                let brute = scan_coincidence(&p, &lambda, 48);
                assert_eq!(
                    report.coincides(),
                    brute.is_some(),
                    "A({a},{b},{g}) lambda={l}: {report:?} vs {brute:?}"
                );
                if let Some(w) = brute {
                    assert_eq!(report.witness, Some(w), "A({a},{b},{g}) lambda={l}");
                }
                if let Some(per) = report.period {
                    let seq = lambda_seq(&p, &lambda, 40 + per as usize);
                    for n in 0..=40usize {
                        assert_eq!(seq[n + per as usize], seq[n], "period at n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn classifier_named_cases() {
        let r = classify_coincidence(&params(2, -1, 0), &s(0)).unwrap();
        assert_eq!(r.case, CoincidenceCase::D);
        let r = classify_coincidence(&params(0, 0, 5), &s(7)).unwrap();
        assert_eq!(r.case, CoincidenceCase::E);
        assert_eq!(r.period, None);
        let r = classify_coincidence(&params(0, 0, 5), &s(5)).unwrap();
        assert_eq!(r.period, Some(1));
        // A(0, 1, 0): alpha + beta = 1, (alpha - 1)^2 = 1, period 2,
        // alternating lambda, 0.
        let r = classify_coincidence(&params(0, 1, 0), &s(1)).unwrap();
        assert_eq!(r.case, CoincidenceCase::B2);
        assert_eq!(r.period, Some(2));
        let seq = lambda_seq(&params(0, 1, 0), &s(1), 6);
        assert_eq!(seq, [1, 0, 1, 0, 1, 0, 1].map(s).to_vec());
        // Constant nonzero with beta = 0: A2.
        let r = classify_coincidence(&params(3, 0, 6), &s(-3)).unwrap();
        assert_eq!(r.case, CoincidenceCase::A2);
        // Geometric with alpha = -1: A3.
        let r = classify_coincidence(&params(-1, 0, 0), &s(4)).unwrap();
        assert_eq!(r.case, CoincidenceCase::A3);
        assert_eq!(r.period, Some(2));
        // Both roots are roots of unity: A(0, -1, 0) has roots +-i.
        let r = classify_coincidence(&params(0, -1, 0), &s(1)).unwrap();
        assert_eq!(r.case, CoincidenceCase::A4);
        assert_eq!(r.period, Some(4));
    }

    #[test]
    fn linkage_on_sl2() {
        let p = params(2, -1, -2);
        // lambda = 2: lambda_2 = 0, lambda_3 = -4.
        assert!(linked(&p, &s(-4), &s(2), 10));
        assert!(!linked(&p, &s(5), &s(2), 10));
        assert!(!linked(&p, &s(-4), &s(-1), 40));
    }

    #[test]
    fn simple_verma_predicate() {
        assert!(infinitely_many_simple_vermas(&params(2, -1, -2)).unwrap());
        assert!(infinitely_many_simple_vermas(&params(1, 1, 0)).unwrap());
        assert!(infinitely_many_simple_vermas(&params(3, 0, 1)).unwrap());
        assert!(infinitely_many_simple_vermas(&params(0, 0, 2)).unwrap());
        assert!(!infinitely_many_simple_vermas(&params(0, 0, 0)).unwrap());
        // Roots +-1: ratio -1 is a root of unity.
        assert!(!infinitely_many_simple_vermas(&params(0, 1, 0)).unwrap());
        // Slopes stay nonzero when the predicate holds.
        for (a, b, g) in [(2, -1, -2), (1, 1, 0), (3, 0, 1)] {
            let slopes = lambda_slope_seq(&params(a, b, g), 60);
            assert!(slopes.iter().all(|m| !m.is_zero()));
        }
        let slopes = lambda_slope_seq(&params(0, 1, 0), 6);
        assert!(slopes.iter().any(Scalar::is_zero));
    }

    #[test]
    fn conversions() {
        let xi = [s(1), s(1), s(1), s(1), s(1), s(0), s(1)];
        let p = convert::witten(&xi).unwrap();
        assert_eq!((p.alpha, p.beta, p.gamma), (s(2), s(-1), s(-1)));

        let bad = [s(1), s(1), s(1), s(1), s(1), s(2), s(1)];
        assert_eq!(
            convert::witten(&bad),
            Err(WeightsError::Precondition("xi_6 = 0"))
        );

        let p = convert::conformal(&s(0), &s(0), &s(1)).unwrap();
        assert_eq!((p.alpha, p.beta, p.gamma), (s(1), s(0), s(-1)));
        let p = convert::conformal(&s(2), &s(0), &s(0)).unwrap();
        assert_eq!((p.alpha, p.beta, p.gamma), (frac(1, 2), s(0), frac(-1, 2)));
        assert!(convert::conformal(&s(0), &s(1), &s(1)).is_err());

        let p = convert::woronowicz(&s(2)).unwrap();
        assert_eq!((p.alpha, p.beta, p.gamma), (s(20), s(-64), s(10)));
        assert!(convert::woronowicz(&s(1)).is_err());
    }

    #[test]
    fn converted_params_satisfy_defining_relations() {
        // Reducing both relators must give zero by construction; this is
        // the degree-3 identity check used for every conversion target.
        use crate::expr::parse_element;
        use crate::pbw::Algebra;
        for p in [
            convert::witten(&[s(1), s(1), s(1), s(1), s(1), s(0), s(1)]).unwrap(),
            convert::conformal(&s(0), &s(0), &s(1)).unwrap(),
            convert::woronowicz(&s(2)).unwrap(),
        ] {
            let alg = Algebra::new(p.clone());
            let r1 = parse_element("d^2*u").unwrap();
            let lhs = alg.reduce(&r1).unwrap();
            let rhs_free = parse_element("d*u*d").unwrap().scale(&p.alpha).add(
                &parse_element("u*d^2")
                    .unwrap()
                    .scale(&p.beta)
                    .add(&parse_element("d").unwrap().scale(&p.gamma)),
            );
            let rhs = alg.reduce(&rhs_free).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
