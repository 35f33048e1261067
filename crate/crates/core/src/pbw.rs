//! The down-up algebra itself: free words in `{d,u}`, rewriting to the
//! PBW basis `u^i (du)^j d^k`, products, the Z-grading, filtration
//! counts, the antiautomorphism `eta`, and centrality tests.
//!
//! Rewriting is a literal transcription of the defining relations, read
//! left to right:
//!
//! ```text
//! d d u  ->  alpha (d u d) + beta (u d d) + gamma (d)
//! d u u  ->  alpha (u d u) + beta (u u d) + gamma (u)
//! ```
//!
//! Each step keeps or lowers the word length and strictly decreases in
//! the (degree, lexicographic with d > u) order, so rewriting terminates;
//! the redex-free words are exactly the `u^i (du)^j d^k` patterns.  The
//! two relator heads overlap only in `d d u u`, and both reduction orders
//! of that word agree, so the normal form is independent of strategy
//! (asserted by tests rather than re-proved here).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::scalar::{common_disc, Int, Scalar, ScalarError};

/// A generator of the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    D,
    U,
}

/// A word in the free algebra on `{d, u}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, rhs: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + rhs.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&rhs.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            match g {
                Gen::D => write!(f, "d")?,
                Gen::U => write!(f, "u")?,
            }
        }
        Ok(())
    }
}

/// A PBW basis monomial `u^i (du)^j d^k`.
///
/// Total degree is `i + 2j + k`; the Z-grade is `i - k`.  The derived
/// `Ord` is lexicographic on `(i, j, k)`, which is also the canonical
/// output order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub u_pow: u32,
    pub du_pow: u32,
    pub d_pow: u32,
}

impl Monomial {
    pub fn new(u_pow: u32, du_pow: u32, d_pow: u32) -> Self {
        Monomial { u_pow, du_pow, d_pow }
    }

    pub fn one() -> Self {
        Monomial::new(0, 0, 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.u_pow + 2 * self.du_pow + self.d_pow
    }

    pub fn z_grade(&self) -> i64 {
        self.u_pow as i64 - self.d_pow as i64
    }

    /// The underlying free word.
    pub fn word(&self) -> Word {
        let mut v = Vec::with_capacity(self.total_degree() as usize);
        v.extend(core::iter::repeat(Gen::U).take(self.u_pow as usize));
        for _ in 0..self.du_pow {
            v.push(Gen::D);
            v.push(Gen::U);
        }
        v.extend(core::iter::repeat(Gen::D).take(self.d_pow as usize));
        Word(v)
    }

    /// Recognizes a redex-free word as `u^i (du)^j d^k`.
    pub fn from_word(w: &Word) -> Option<Monomial> {
        let ls = &w.0;
        let mut pos = 0;
        while pos < ls.len() && ls[pos] == Gen::U {
            pos += 1;
        }
        let i = pos as u32;
        let mut j = 0u32;
        while pos + 1 < ls.len() && ls[pos] == Gen::D && ls[pos + 1] == Gen::U {
            j += 1;
            pos += 2;
        }
        let k = (ls.len() - pos) as u32;
        if ls[pos..].iter().all(|&g| g == Gen::D) {
            Some(Monomial::new(i, j, k))
        } else {
            None
        }
    }
}

/// An element of the algebra in PBW normal form: a finite map from
/// monomials to nonzero scalars.  The empty map is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::from_term(Monomial::one(), Scalar::one())
    }

    /// The generator `d`.
    pub fn d() -> Self {
        Element::from_term(Monomial::new(0, 0, 1), Scalar::one())
    }

    /// The generator `u`.
    pub fn u() -> Self {
        Element::from_term(Monomial::new(1, 0, 0), Scalar::one())
    }

    /// The monomial `du`.
    pub fn du() -> Self {
        Element::from_term(Monomial::new(0, 1, 0), Scalar::one())
    }

    pub fn from_term(m: Monomial, c: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    pub fn scalar(c: Scalar) -> Self {
        Element::from_term(Monomial::one(), c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `m` (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Adds `c * m`, pruning a zero combined coefficient.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = &old + &c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    pub fn add(&self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = Element::zero();
        for (m, x) in self.terms() {
            out.add_term(*m, x * c);
        }
        out
    }

    /// The maximal total degree among terms (zero for the zero element).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub(crate) fn scalars(&self) -> impl Iterator<Item = &Scalar> {
        self.terms.values()
    }
}

/// A scalar-weighted combination of free words: the pre-reduction
/// representation of an algebra element.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeElement {
    terms: BTreeMap<Word, Scalar>,
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement::default()
    }

    pub fn one() -> Self {
        FreeElement::from_word(Word::empty(), Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        FreeElement::from_word(Word::empty(), c)
    }

    pub fn gen(g: Gen) -> Self {
        FreeElement::from_word(Word(vec![g]), Scalar::one())
    }

    pub fn from_word(w: Word, c: Scalar) -> Self {
        let mut e = FreeElement::zero();
        e.add_word(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_word(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            None => {
                self.terms.insert(w, c);
            }
            Some(old) => {
                let sum = &old + &c;
                if !sum.is_zero() {
                    self.terms.insert(w, sum);
                }
            }
        }
    }

    pub fn add(&self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_word(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_word(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> FreeElement {
        let mut out = FreeElement::zero();
        for (w, x) in self.terms() {
            out.add_word(w.clone(), x * c);
        }
        out
    }

    /// Concatenation product, extended bilinearly.  No rewriting happens
    /// here, so no parameters are needed.
    pub fn mul(&self, rhs: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in rhs.terms() {
                out.add_word(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> FreeElement {
        let mut acc = FreeElement::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The longest word present.
    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub(crate) fn scalars(&self) -> impl Iterator<Item = &Scalar> {
        self.terms.values()
    }
}

impl From<&Element> for FreeElement {
    fn from(e: &Element) -> FreeElement {
        let mut out = FreeElement::zero();
        for (m, c) in e.terms() {
            out.add_word(m.word(), c.clone());
        }
        out
    }
}

/// The defining parameters `(alpha, beta, gamma)` of `A(alpha, beta, gamma)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
}

impl Params {
    /// Builds a parameter triple, rejecting mixed discriminants.
    pub fn new(alpha: Scalar, beta: Scalar, gamma: Scalar) -> Result<Self, ScalarError> {
        common_disc([&alpha, &beta, &gamma])?;
        Ok(Params { alpha, beta, gamma })
    }

    pub fn from_ints(alpha: i64, beta: i64, gamma: i64) -> Self {
        Params {
            alpha: Scalar::from_int(alpha),
            beta: Scalar::from_int(beta),
            gamma: Scalar::from_int(gamma),
        }
    }

    /// The discriminant shared by the parameters (`1` when all rational).
    pub fn disc(&self) -> Int {
        common_disc([&self.alpha, &self.beta, &self.gamma]).expect("checked at construction")
    }

    /// Checks additional scalars against the parameters' field.
    pub fn check_disc<'a, I: IntoIterator<Item = &'a Scalar>>(
        &'a self,
        extra: I,
    ) -> Result<(), ScalarError> {
        common_disc([&self.alpha, &self.beta, &self.gamma].into_iter().chain(extra))?;
        Ok(())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

/// Errors from rewriting and products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PbwError {
    /// An input word exceeds the configured safety cap.
    WordTooLong { len: usize, max: usize },
    Scalar(ScalarError),
}

impl fmt::Display for PbwError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PbwError::WordTooLong { len, max } => {
                write!(f, "word of length {len} exceeds the cap of {max}")
            }
            PbwError::Scalar(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PbwError {}

impl From<ScalarError> for PbwError {
    fn from(e: ScalarError) -> Self {
        PbwError::Scalar(e)
    }
}

/// Which redex to contract first.  All strategies yield the same normal
/// form; having two distinct ones makes confluence testable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteStrategy {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Copy)]
enum Redex {
    Ddu,
    Duu,
}

fn redex_at(ls: &[Gen], i: usize) -> Option<Redex> {
    match ls[i..] {
        [Gen::D, Gen::D, Gen::U, ..] => Some(Redex::Ddu),
        [Gen::D, Gen::U, Gen::U, ..] => Some(Redex::Duu),
        _ => None,
    }
}

fn find_redex(w: &Word, strategy: RewriteStrategy) -> Option<(usize, Redex)> {
    let ls = &w.0;
    if ls.len() < 3 {
        return None;
    }
    match strategy {
        RewriteStrategy::Leftmost => {
            (0..=ls.len() - 3).find_map(|i| redex_at(ls, i).map(|r| (i, r)))
        }
        RewriteStrategy::Rightmost => {
            (0..=ls.len() - 3).rev().find_map(|i| redex_at(ls, i).map(|r| (i, r)))
        }
    }
}

fn splice(w: &Word, at: usize, mid: &[Gen]) -> Word {
    let mut v = Vec::with_capacity(w.len() - 3 + mid.len());
    v.extend_from_slice(&w.0[..at]);
    v.extend_from_slice(mid);
    v.extend_from_slice(&w.0[at + 3..]);
    Word(v)
}

/// Default cap on word length accepted by the rewriting engine.
pub const DEFAULT_MAX_WORD_LEN: usize = 64;

/// The down-up algebra `A(alpha, beta, gamma)` with a rewriting engine.
#[derive(Clone, Debug)]
pub struct Algebra {
    params: Params,
    max_word_len: usize,
}

impl Algebra {
    pub fn new(params: Params) -> Self {
        Algebra { params, max_word_len: DEFAULT_MAX_WORD_LEN }
    }

    pub fn with_max_word_len(params: Params, max_word_len: usize) -> Self {
        Algebra { params, max_word_len }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Rewrites a combination of free words to its unique normal form.
    pub fn reduce(&self, input: &FreeElement) -> Result<Element, PbwError> {
        self.reduce_with_strategy(input, RewriteStrategy::Leftmost)
    }

    /// Like [`Algebra::reduce`] with an explicit redex-selection strategy.
    pub fn reduce_with_strategy(
        &self,
        input: &FreeElement,
        strategy: RewriteStrategy,
    ) -> Result<Element, PbwError> {
        self.params.check_disc(input.scalars())?;
        let mut out = Element::zero();
        let mut work: Vec<(Scalar, Word)> = Vec::new();
        for (w, c) in input.terms() {
            self.admit(w)?;
            work.push((c.clone(), w.clone()));
        }
        let p = &self.params;
        while let Some((c, w)) = work.pop() {
            match find_redex(&w, strategy) {
                None => {
                    let m = Monomial::from_word(&w)
                        .expect("a redex-free word matches u^i (du)^j d^k");
                    out.add_term(m, c);
                }
                Some((at, redex)) => {
                    let (mid_a, mid_b, mid_c): (&[Gen], &[Gen], &[Gen]) = match redex {
                        Redex::Ddu => {
                            (&[Gen::D, Gen::U, Gen::D], &[Gen::U, Gen::D, Gen::D], &[Gen::D])
                        }
                        Redex::Duu => {
                            (&[Gen::U, Gen::D, Gen::U], &[Gen::U, Gen::U, Gen::D], &[Gen::U])
                        }
                    };
                    for (coeff, mid) in [(&p.alpha, mid_a), (&p.beta, mid_b), (&p.gamma, mid_c)] {
                        if !coeff.is_zero() {
                            work.push((&c * coeff, splice(&w, at, mid)));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn admit(&self, w: &Word) -> Result<(), PbwError> {
        if w.len() > self.max_word_len {
            Err(PbwError::WordTooLong { len: w.len(), max: self.max_word_len })
        } else {
            Ok(())
        }
    }

    /// The product of two normal-form elements (concatenate, then reduce).
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element, PbwError> {
        self.params.check_disc(x.scalars().chain(y.scalars()))?;
        let free = FreeElement::from(x).mul(&FreeElement::from(y));
        self.reduce(&free)
    }

    /// The commutator `xy - yx` in normal form.
    pub fn commutator(&self, x: &Element, y: &Element) -> Result<Element, PbwError> {
        Ok(self.multiply(x, y)?.sub(&self.multiply(y, x)?))
    }

    /// Whether `z` commutes with both generators (hence with all of `A`).
    pub fn is_central(&self, z: &Element) -> Result<bool, PbwError> {
        Ok(self.commutator(z, &Element::d())?.is_zero()
            && self.commutator(z, &Element::u())?.is_zero())
    }
}

/// The antiautomorphism of order 2 with `eta(d) = u` and `eta(u) = d`.
///
/// On normal monomials it is the relabeling of `u^i (du)^j d^k` to
/// `u^k (du)^j d^i` (reverse the word, swap the letters), which is
/// already in normal form, so no parameters are needed.
pub fn eta(x: &Element) -> Element {
    let mut out = Element::zero();
    for (m, c) in x.terms() {
        out.add_term(Monomial::new(m.d_pow, m.du_pow, m.u_pow), c.clone());
    }
    out
}

/// Splits an element into its Z-homogeneous parts, keyed by grade
/// `i - k` (with `deg u = 1`, `deg d = -1`).
pub fn grade_decompose(x: &Element) -> BTreeMap<i64, Element> {
    let mut out: BTreeMap<i64, Element> = BTreeMap::new();
    for (m, c) in x.terms() {
        out.entry(m.z_grade()).or_default().add_term(*m, c.clone());
    }
    out
}

/// Returns `(count at exact total degree ell, dim of the filtration
/// space A^(ell))`.
///
/// The exact count is `(m+1)^2` for `ell = 2m` and `(m+1)(m+2)` for
/// `ell = 2m+1`; the cumulative dimension grows like a cubic, which is
/// how the Gelfand-Kirillov dimension 3 shows up.
pub fn filtration_count(ell: u32) -> (u64, u64) {
    fn exact(l: u64) -> u64 {
        let m = l / 2;
        if l % 2 == 0 {
            (m + 1) * (m + 1)
        } else {
            (m + 1) * (m + 2)
        }
    }
    let cumulative = (0..=ell as u64).map(exact).sum();
    (exact(ell as u64), cumulative)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_element;

    fn sl2() -> Algebra {
        Algebra::new(Params::from_ints(2, -1, -2))
    }

    fn elem(a: &Algebra, text: &str) -> Element {
        a.reduce(&parse_element(text).unwrap()).unwrap()
    }

    #[test]
    fn relation_r1_reduces() {
        // d d u -> alpha (du)d + beta u d^2 + gamma d, read off the first
        // defining relation.
        let a = sl2();
        let got = elem(&a, "d*d*u");
        let mut want = Element::zero();
        want.add_term(Monomial::new(0, 1, 1), Scalar::from_int(2));
        want.add_term(Monomial::new(1, 0, 2), Scalar::from_int(-1));
        want.add_term(Monomial::new(0, 0, 1), Scalar::from_int(-2));
        assert_eq!(got, want);
    }

    #[test]
    fn empty_word_is_one() {
        let a = sl2();
        let one = a.reduce(&FreeElement::one()).unwrap();
        assert_eq!(one, Element::one());
    }

    #[test]
    fn overlap_word_is_confluent() {
        // d^2 u^2 contains both redexes; the two orders must agree.
        let a = Algebra::new(Params {
            alpha: Scalar::fraction(3, 5),
            beta: Scalar::fraction(-7, 2),
            gamma: Scalar::fraction(1, 3),
        });
        let w = FreeElement::from_word(Word(vec![Gen::D, Gen::D, Gen::U, Gen::U]), Scalar::one());
        let left = a.reduce_with_strategy(&w, RewriteStrategy::Leftmost).unwrap();
        let right = a.reduce_with_strategy(&w, RewriteStrategy::Rightmost).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn du_and_ud_commute() {
        let a = sl2();
        let du = elem(&a, "d*u");
        let ud = elem(&a, "u*d");
        assert_eq!(a.commutator(&du, &ud).unwrap(), Element::zero());
    }

    #[test]
    fn one_is_neutral() {
        let a = sl2();
        let x = elem(&a, "2*u^2*d + 3*d*u - 1/2*u");
        assert_eq!(a.multiply(&Element::one(), &x).unwrap(), x);
        assert_eq!(a.multiply(&x, &Element::one()).unwrap(), x);
    }

    #[test]
    fn a0_monomials_commute() {
        // u (du) d and u^2 (du) d^2 lie in A_0 and must commute.
        let a = sl2();
        let x = Element::from_term(Monomial::new(1, 1, 1), Scalar::one());
        let y = Element::from_term(Monomial::new(2, 1, 2), Scalar::one());
        assert_eq!(a.commutator(&x, &y).unwrap(), Element::zero());
    }

    #[test]
    fn eta_swaps_generators() {
        assert_eq!(eta(&Element::d()), Element::u());
        assert_eq!(eta(&Element::u()), Element::d());
        assert_eq!(eta(&Element::du()), Element::du());
    }

    #[test]
    fn eta_maps_first_relator_to_second() {
        // As an antiautomorphism, eta(d^2 u) = d u^2; reducing either side
        // must give equal normal forms.
        let a = sl2();
        let lhs = eta(&elem(&a, "d^2*u"));
        let rhs = elem(&a, "d*u^2");
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn eta_is_involutive_antiautomorphism() {
        let a = sl2();
        let x = elem(&a, "d*u*d + 2*u");
        let y = elem(&a, "u*u*d - 3*d");
        assert_eq!(eta(&eta(&x)), x);
        let lhs = eta(&a.multiply(&x, &y).unwrap());
        let rhs = a.multiply(&eta(&y), &eta(&x)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn grading_splits_and_sums() {
        let a = sl2();
        let x = elem(&a, "d*u + u*d + u");
        let parts = grade_decompose(&x);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&0], elem(&a, "d*u + u*d"));
        assert_eq!(parts[&1], elem(&a, "u"));
        assert!(grade_decompose(&Element::zero()).is_empty());
        let back = parts.values().fold(Element::zero(), |acc, p| acc.add(p));
        assert_eq!(back, x);
    }

    #[test]
    fn filtration_counts_match_formula() {
        assert_eq!(filtration_count(0), (1, 1));
        assert_eq!(filtration_count(2).0, 4);
        assert_eq!(filtration_count(5), (12, 34));
        // Oracle: enumerate (i, j, k) with i + 2j + k == ell directly.
        for ell in 0..=20u32 {
            let brute = (0..=ell)
                .flat_map(|i| (0..=ell).map(move |j| (i, j)))
                .flat_map(|(i, j)| (0..=ell).map(move |k| (i, j, k)))
                .filter(|&(i, j, k)| i + 2 * j + k == ell)
                .count() as u64;
            assert_eq!(filtration_count(ell).0, brute, "ell = {ell}");
        }
    }

    #[test]
    fn centrality_checks() {
        // 1 is always central; d^2 is central in A(0,1,0);
        // du - ud is central in A(2,-1,0) but not in A(2,-1,-2).
        let sl = sl2();
        assert!(sl.is_central(&Element::one()).unwrap());
        let sl11 = Algebra::new(Params::from_ints(0, 1, 0));
        let d2 = Element::from_term(Monomial::new(0, 0, 2), Scalar::one());
        assert!(sl11.is_central(&d2).unwrap());
        let heis = Algebra::new(Params::from_ints(2, -1, 0));
        let h = elem(&heis, "d*u - u*d");
        assert!(heis.is_central(&h).unwrap());
        let h2 = elem(&sl, "d*u - u*d");
        assert!(!sl.is_central(&h2).unwrap());
    }

    #[test]
    fn word_cap_is_enforced() {
        let a = Algebra::with_max_word_len(Params::from_ints(1, 1, 1), 4);
        let w = FreeElement::from_word(Word(vec![Gen::D; 5]), Scalar::one());
        assert_eq!(a.reduce(&w), Err(PbwError::WordTooLong { len: 5, max: 4 }));
    }

    #[test]
    fn monomial_word_round_trip() {
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let m = Monomial::new(i, j, k);
                    assert_eq!(Monomial::from_word(&m.word()), Some(m));
                }
            }
        }
        assert_eq!(
            Monomial::from_word(&Word(vec![Gen::U, Gen::D])),
            Some(Monomial::new(1, 0, 1))
        );
        assert_eq!(Monomial::from_word(&Word(vec![Gen::D, Gen::D, Gen::U])), None);
    }
}
