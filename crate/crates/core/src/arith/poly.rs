use std::cell::Cell;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::rational::{bigint_sign_positive, format_rational, BigRat};
use super::ArithError;

/// Largest supported number of variables.
pub const MAX_ARITY: usize = 8;
/// Largest supported total degree of any polynomial.
pub const MAX_DEGREE: u32 = (1 << VAR_BITS) - 1;

const VAR_BITS: u32 = 14;
const DEG_SHIFT: u32 = VAR_BITS * MAX_ARITY as u32;
const VAR_MASK: u128 = (1 << VAR_BITS) - 1;

/// Products with more coefficient multiplications than this are split
/// across the rayon pool.
const PARALLEL_MUL_THRESHOLD: usize = 1 << 17;

/// Packed exponent vector.
///
/// Layout, most significant first: total degree (16 bits), then one 14-bit
/// field per variable with variable 0 highest. Integer comparison of the
/// packed word is therefore graded lexicographic order, and multiplying
/// monomials is integer addition.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub(crate) struct Mono(u128);

impl Mono {
    pub(crate) const ONE: Mono = Mono(0);

    fn shift(var: usize) -> u32 {
        VAR_BITS * (MAX_ARITY - 1 - var) as u32
    }

    pub(crate) fn from_exponents(exps: &[u32]) -> Mono {
        let mut packed = 0u128;
        let mut degree = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= MAX_DEGREE, "exponent {e} exceeds {MAX_DEGREE}");
            packed |= (e as u128) << Self::shift(i);
            degree += e;
        }
        assert!(degree <= MAX_DEGREE, "degree {degree} exceeds {MAX_DEGREE}");
        Mono(packed | ((degree as u128) << DEG_SHIFT))
    }

    pub(crate) fn var(var: usize) -> Mono {
        Mono((1u128 << Self::shift(var)) | (1u128 << DEG_SHIFT))
    }

    pub(crate) fn exponent(self, var: usize) -> u32 {
        ((self.0 >> Self::shift(var)) & VAR_MASK) as u32
    }

    pub(crate) fn degree(self) -> u32 {
        (self.0 >> DEG_SHIFT) as u32
    }

    pub(crate) fn exponents(self, arity: usize) -> Vec<u32> {
        (0..arity).map(|i| self.exponent(i)).collect()
    }

    fn times(self, other: Mono) -> Mono {
        Mono(self.0 + other.0)
    }

    /// Caller guarantees `other` divides `self`.
    fn divided_by(self, other: Mono) -> Mono {
        Mono(self.0 - other.0)
    }

    fn gcd(self, other: Mono, arity: usize) -> Mono {
        let exps: Vec<u32> = (0..arity)
            .map(|i| self.exponent(i).min(other.exponent(i)))
            .collect();
        Mono::from_exponents(&exps)
    }
}

/// Variable names used when printing and parsing polynomials of a given
/// arity: `a b c d` for the single-rectangle ring and
/// `a1 b1 c1 d1 a2 b2` for the two-rectangle ring.
pub fn var_names(arity: usize) -> Vec<String> {
    match arity {
        0..=4 => ["a", "b", "c", "d"][..arity]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        6 => ["a1", "b1", "c1", "d1", "a2", "b2"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        _ => (0..arity).map(|i| format!("x{i}")).collect(),
    }
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// Stored as integer coefficients over one shared positive denominator,
/// with terms sorted by descending graded-lex order and
/// `gcd(content, denom) = 1`. The representation is canonical, so the
/// derived `PartialEq` is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    terms: Vec<(Mono, BigInt)>,
    denom: BigInt,
}

/// Ring operation selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Applies `op` to `p` and `q`; `q` is ignored for [`PolyOp::Neg`].
pub fn poly_arith(op: PolyOp, p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly, ArithError> {
    match op {
        PolyOp::Neg => Ok(-p),
        PolyOp::Add => p.try_add(q),
        PolyOp::Sub => p.try_sub(q),
        PolyOp::Mul => p.try_mul(q),
    }
}

impl MultiPoly {
    fn check_arity(arity: usize) {
        assert!(arity <= MAX_ARITY, "arity {arity} exceeds {MAX_ARITY}");
    }

    pub fn zero(arity: usize) -> Self {
        Self::check_arity(arity);
        MultiPoly {
            arity,
            terms: Vec::new(),
            denom: BigInt::one(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, &BigRat::one())
    }

    pub fn constant(arity: usize, value: &BigRat) -> Self {
        Self::check_arity(arity);
        if value.is_zero() {
            return Self::zero(arity);
        }
        MultiPoly {
            arity,
            terms: vec![(Mono::ONE, value.numer().clone())],
            denom: value.denom().clone(),
        }
    }

    pub fn from_int(arity: usize, value: i64) -> Self {
        Self::constant(arity, &BigRat::from_integer(value.into()))
    }

    /// The polynomial `x_var`.
    pub fn var(arity: usize, var: usize) -> Self {
        Self::check_arity(arity);
        assert!(var < arity, "variable {var} out of range for arity {arity}");
        MultiPoly {
            arity,
            terms: vec![(Mono::var(var), BigInt::one())],
            denom: BigInt::one(),
        }
    }

    /// All `arity` variables in order.
    pub fn vars(arity: usize) -> Vec<Self> {
        (0..arity).map(|i| Self::var(arity, i)).collect()
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs. Repeated
    /// monomials are summed and zero coefficients dropped.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self, ArithError>
    where
        I: IntoIterator<Item = (Vec<u32>, BigRat)>,
    {
        if arity > MAX_ARITY {
            return Err(ArithError::UnsupportedArity(arity));
        }
        let mut acc = Self::zero(arity);
        for (exps, coeff) in terms {
            if exps.len() != arity {
                return Err(ArithError::LengthMismatch {
                    arity,
                    got: exps.len(),
                });
            }
            if coeff.is_zero() {
                continue;
            }
            let term = MultiPoly {
                arity,
                terms: vec![(Mono::from_exponents(&exps), coeff.numer().clone())],
                denom: coeff.denom().clone(),
            };
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Canonicalizes sorted, merged, nonzero terms over `denom`.
    fn normalized(arity: usize, mut terms: Vec<(Mono, BigInt)>, mut denom: BigInt) -> Self {
        if terms.is_empty() {
            return Self::zero(arity);
        }
        if denom.is_negative() {
            denom = -denom;
            for (_, c) in terms.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        if !denom.is_one() {
            let mut g = denom.clone();
            for (_, c) in &terms {
                g = g.gcd(c);
                if g.is_one() {
                    break;
                }
            }
            if !g.is_one() {
                for (_, c) in terms.iter_mut() {
                    *c /= &g;
                }
                denom /= &g;
            }
        }
        MultiPoly {
            arity,
            terms,
            denom,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of stored (nonzero) terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True iff the term map is empty.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.denom.is_one()
            && self.terms.len() == 1
            && self.terms[0].0 == Mono::ONE
            && self.terms[0].1.is_one()
    }

    /// The value if this is a constant polynomial (including zero).
    pub fn as_constant(&self) -> Option<BigRat> {
        match self.terms.as_slice() {
            [] => Some(BigRat::zero()),
            [(m, c)] if *m == Mono::ONE => Some(BigRat::new(c.clone(), self.denom.clone())),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        // Terms are sorted by degree first.
        self.terms.first().map_or(0, |(m, _)| m.degree())
    }

    /// Iterates `(exponents, coefficient)` in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<u32>, BigRat)> + '_ {
        self.terms.iter().map(|(m, c)| {
            (
                m.exponents(self.arity),
                BigRat::new(c.clone(), self.denom.clone()),
            )
        })
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRat {
        assert_eq!(exps.len(), self.arity);
        let m = Mono::from_exponents(exps);
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => BigRat::new(self.terms[i].1.clone(), self.denom.clone()),
            Err(_) => BigRat::zero(),
        }
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> BigRat {
        self.coefficient(&vec![0; self.arity])
    }

    fn same_arity(&self, other: &Self) -> Result<(), ArithError> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(ArithError::ArityMismatch {
                left: self.arity,
                right: other.arity,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.same_arity(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.same_arity(other)?;
        Ok(self.combine(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ArithError> {
        self.same_arity(other)?;
        Ok(self.product(other))
    }

    /// `self ± other` by merging the two sorted term lists.
    fn combine(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let (fa, fb, denom) = if self.denom == other.denom {
            (None, None, self.denom.clone())
        } else {
            let l = self.denom.lcm(&other.denom);
            (Some(&l / &self.denom), Some(&l / &other.denom), l)
        };
        let lift = |c: &BigInt, f: &Option<BigInt>| match f {
            Some(f) => c * f,
            None => c.clone(),
        };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some((ma, _)), Some((mb, _))) => mb.cmp(ma),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            match ord {
                std::cmp::Ordering::Less => {
                    out.push((a[i].0, lift(&a[i].1, &fa)));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = lift(&b[j].1, &fb);
                    out.push((b[j].0, if negate { -c } else { c }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let ca = lift(&a[i].1, &fa);
                    let cb = lift(&b[j].1, &fb);
                    let c = if negate { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self::normalized(self.arity, out, denom)
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.arity);
        }
        if product_refused(self.terms.len(), other.terms.len()) {
            return Self::one(self.arity);
        }
        let degree = self.total_degree() + other.total_degree();
        assert!(
            degree <= MAX_DEGREE,
            "product degree {degree} exceeds {MAX_DEGREE}"
        );
        let denom = &self.denom * &other.denom;
        // Make `big` the operand with more terms.
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (&self.terms, &other.terms)
        } else {
            (&other.terms, &self.terms)
        };
        if small.len() == 1 {
            let (m, c) = &small[0];
            let terms = big.iter().map(|(bm, bc)| (bm.times(*m), bc * c)).collect();
            return Self::normalized(self.arity, terms, denom);
        }
        let terms = if let Some(terms) = product_small(big, small) {
            terms
        } else {
            product_big(big, small)
        };
        Self::normalized(self.arity, terms, denom)
    }

    /// Multiplies by a rational constant.
    pub fn scale(&self, factor: &BigRat) -> Self {
        if factor.is_zero() {
            return Self::zero(self.arity);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (*m, c * factor.numer()))
            .collect();
        Self::normalized(self.arity, terms, &self.denom * factor.denom())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.arity);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Splits `self = scale * prim` with `prim` having coprime integer
    /// coefficients and a positive leading coefficient. Zero maps to
    /// `(0, 0)`.
    pub fn primitive(&self) -> (BigRat, Self) {
        if self.is_zero() {
            return (BigRat::zero(), self.clone());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if !bigint_sign_positive(&self.terms[0].1) {
            g = -g;
        }
        let terms = self.terms.iter().map(|(m, c)| (*m, c / &g)).collect();
        let prim = MultiPoly {
            arity: self.arity,
            terms,
            denom: BigInt::one(),
        };
        (BigRat::new(g, self.denom.clone()), prim)
    }

    /// Largest monomial dividing every term; `Mono::ONE` for zero.
    pub(crate) fn monomial_content(&self) -> Mono {
        let mut iter = self.terms.iter();
        let Some((first, _)) = iter.next() else {
            return Mono::ONE;
        };
        let mut g = *first;
        for (m, _) in iter {
            if g == Mono::ONE {
                break;
            }
            g = g.gcd(*m, self.arity);
        }
        g
    }

    pub(crate) fn monomial_gcd(a: Mono, b: Mono, arity: usize) -> Mono {
        a.gcd(b, arity)
    }

    /// Divides every term by a monomial that divides all of them.
    pub(crate) fn div_monomial(&self, m: Mono) -> Self {
        if m == Mono::ONE {
            return self.clone();
        }
        // Dividing by a common monomial preserves the term order.
        MultiPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.divided_by(m), c.clone()))
                .collect(),
            denom: self.denom.clone(),
        }
    }

    /// Exact value at `point`.
    pub fn eval(&self, point: &[BigRat]) -> Result<BigRat, ArithError> {
        if point.len() != self.arity {
            return Err(ArithError::LengthMismatch {
                arity: self.arity,
                got: point.len(),
            });
        }
        if self.is_zero() {
            return Ok(BigRat::zero());
        }
        // Evaluate over the common denominator prod_i d_i^maxdeg_i so the
        // inner loop stays in the integers.
        let maxdeg: Vec<u32> = (0..self.arity)
            .map(|i| {
                self.terms
                    .iter()
                    .map(|(m, _)| m.exponent(i))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let powers = |base: &BigInt, upto: u32| {
            let mut v = Vec::with_capacity(upto as usize + 1);
            v.push(BigInt::one());
            for k in 1..=upto as usize {
                let next = &v[k - 1] * base;
                v.push(next);
            }
            v
        };
        let num_pows: Vec<Vec<BigInt>> = point
            .iter()
            .zip(&maxdeg)
            .map(|(x, &e)| powers(x.numer(), e))
            .collect();
        let den_pows: Vec<Vec<BigInt>> = point
            .iter()
            .zip(&maxdeg)
            .map(|(x, &e)| powers(x.denom(), e))
            .collect();
        let mut sum = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..self.arity {
                let e = m.exponent(i) as usize;
                let top = maxdeg[i] as usize;
                if e > 0 {
                    t *= &num_pows[i][e];
                }
                if top > e {
                    t *= &den_pows[i][top - e];
                }
            }
            sum += t;
        }
        let mut den = self.denom.clone();
        for i in 0..self.arity {
            den *= &den_pows[i][maxdeg[i] as usize];
        }
        Ok(BigRat::new(sum, den))
    }

    /// Deterministic text form, e.g. `-1*a^1*c^1 + 1*b^2`, with monomials
    /// in descending graded-lex order and variables named by
    /// [`var_names`].
    pub fn serialize(&self) -> String {
        self.serialize_with(&var_names(self.arity))
    }

    pub fn serialize_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let coeff = BigRat::new(c.clone(), self.denom.clone());
            let shown = if k == 0 {
                coeff
            } else if coeff.is_negative() {
                out.push_str(" - ");
                -coeff
            } else {
                out.push_str(" + ");
                coeff
            };
            out.push_str(&format_rational(&shown));
            for (i, name) in names.iter().enumerate().take(self.arity) {
                let e = m.exponent(i);
                if e > 0 {
                    out.push_str(&format!("*{name}^{e}"));
                }
            }
        }
        out
    }

    /// Largest absolute integer coefficient bit length, a rough size gauge.
    pub fn max_coefficient_bits(&self) -> u64 {
        self.terms.iter().map(|(_, c)| c.bits()).max().unwrap_or(0)
    }
}

thread_local! {
    static PRODUCT_LIMIT: Cell<Option<usize>> = const { Cell::new(None) };
    static PRODUCT_REFUSED: Cell<Option<(usize, usize)>> = const { Cell::new(None) };
}

/// Runs `f` with a cap on the number of term pairs a single product on
/// this thread may expand to before like terms are collected.
///
/// A product over the cap is not computed: it yields the constant 1 and
/// its operand sizes are returned alongside `f`'s result, which the caller
/// must then discard.
pub fn with_product_limit<R>(limit: usize, f: impl FnOnce() -> R) -> (R, Option<(usize, usize)>) {
    let saved = PRODUCT_LIMIT.with(|l| l.replace(Some(limit)));
    let saved_refused = PRODUCT_REFUSED.with(|r| r.replace(None));
    let out = f();
    PRODUCT_LIMIT.with(|l| l.set(saved));
    let refused = PRODUCT_REFUSED.with(|r| r.replace(saved_refused));
    (out, refused)
}

fn product_refused(n: usize, m: usize) -> bool {
    let Some(limit) = PRODUCT_LIMIT.with(Cell::get) else {
        return false;
    };
    if n.saturating_mul(m) <= limit {
        return false;
    }
    PRODUCT_REFUSED.with(|r| {
        if r.get().is_none() {
            r.set(Some((n, m)));
        }
    });
    true
}

/// Products whose coefficients fit comfortably in `i128` accumulators.
fn product_small(big: &[(Mono, BigInt)], small: &[(Mono, BigInt)]) -> Option<Vec<(Mono, BigInt)>> {
    let to_i64 = |terms: &[(Mono, BigInt)]| -> Option<(Vec<(Mono, i64)>, u64)> {
        let mut bits = 0;
        let v = terms
            .iter()
            .map(|(m, c)| {
                bits = bits.max(c.bits());
                c.to_i64().map(|c| (*m, c))
            })
            .collect::<Option<Vec<_>>>()?;
        Some((v, bits))
    };
    let (a, abits) = to_i64(big)?;
    let (b, bbits) = to_i64(small)?;
    let count_bits = 64 - (small.len() as u64).leading_zeros() as u64;
    if abits + bbits + count_bits > 125 {
        return None;
    }
    let accumulate = |chunk: &[(Mono, i64)]| {
        let mut acc: FxHashMap<Mono, i128> = FxHashMap::default();
        acc.reserve(chunk.len() * b.len());
        for (ma, ca) in chunk {
            for (mb, cb) in &b {
                *acc.entry(ma.times(*mb)).or_insert(0) += *ca as i128 * *cb as i128;
            }
        }
        acc
    };
    let acc = if a.len() * b.len() >= PARALLEL_MUL_THRESHOLD {
        let chunk = a
            .len()
            .div_ceil(rayon::current_num_threads().max(1) * 4)
            .max(1);
        a.par_chunks(chunk)
            .map(accumulate)
            .reduce(FxHashMap::default, |mut x, y| {
                if x.len() < y.len() {
                    return merge_i128(y, x);
                }
                for (m, c) in y {
                    *x.entry(m).or_insert(0) += c;
                }
                x
            })
    } else {
        accumulate(&a)
    };
    let mut out: Vec<(Mono, BigInt)> = acc
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|(m, c)| (m, BigInt::from(c)))
        .collect();
    out.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
    Some(out)
}

fn merge_i128(mut x: FxHashMap<Mono, i128>, y: FxHashMap<Mono, i128>) -> FxHashMap<Mono, i128> {
    for (m, c) in y {
        *x.entry(m).or_insert(0) += c;
    }
    x
}

fn product_big(big: &[(Mono, BigInt)], small: &[(Mono, BigInt)]) -> Vec<(Mono, BigInt)> {
    let accumulate = |chunk: &[(Mono, BigInt)]| {
        let mut acc: FxHashMap<Mono, BigInt> = FxHashMap::default();
        acc.reserve(chunk.len() * small.len());
        for (ma, ca) in chunk {
            for (mb, cb) in small {
                let p = ca * cb;
                acc.entry(ma.times(*mb))
                    .and_modify(|c| *c += &p)
                    .or_insert(p);
            }
        }
        acc
    };
    let acc = if big.len() * small.len() >= PARALLEL_MUL_THRESHOLD {
        let chunk = big
            .len()
            .div_ceil(rayon::current_num_threads().max(1) * 4)
            .max(1);
        big.par_chunks(chunk)
            .map(accumulate)
            .reduce(FxHashMap::default, |x, y| {
                let (mut x, y) = if x.len() >= y.len() { (x, y) } else { (y, x) };
                for (m, c) in y {
                    x.entry(m).and_modify(|e| *e += &c).or_insert(c);
                }
                x
            })
    } else {
        accumulate(big)
    };
    let mut out: Vec<(Mono, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
    out
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.arity, self.serialize())
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
            denom: self.denom.clone(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for (_, c) in self.terms.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

// Operator forms panic on arity mismatch; use `poly_arith` or the `try_*`
// methods for fallible arithmetic.
macro_rules! poly_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$try(rhs).expect("polynomial arity mismatch")
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

#[cfg(test)]
mod tests {
    use super::super::rational::{rat, rat_int};
    use super::*;

    fn abcd() -> Vec<MultiPoly> {
        MultiPoly::vars(4)
    }

    #[test]
    fn difference_of_squares() {
        let v = abcd();
        let (a, b) = (&v[0], &v[1]);
        let lhs = (a + b) * (a - b);
        let rhs = a * a - b * b;
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.serialize(), "1*a^2 - 1*b^2");
    }

    #[test]
    fn additive_inverse() {
        let v = abcd();
        let s = &v[0] + &v[2];
        let z = poly_arith(PolyOp::Add, &s, &(-&s)).unwrap();
        assert!(z.is_zero());
        assert!(poly_arith(PolyOp::Sub, &s, &s).unwrap().is_zero());
    }

    #[test]
    fn eq17_denominator_value() {
        let v = abcd();
        let p = MultiPoly::from_int(4, 3) * &v[0] * &v[2] - &v[1] * &v[3];
        let x = [rat_int(1), rat_int(2), rat_int(3), rat_int(5)];
        assert_eq!(p.eval(&x).unwrap(), rat_int(-1));
    }

    #[test]
    fn evaluation() {
        let v = abcd();
        let p = &v[0] * &v[0] - &v[1] * &v[1];
        let x = [rat_int(3), rat_int(1), rat(7, 3), rat(-1, 2)];
        assert_eq!(p.eval(&x).unwrap(), rat_int(8));
        assert_eq!(MultiPoly::zero(4).eval(&x).unwrap(), rat_int(0));
        let slope_num = -(&v[1] + &v[3]);
        let y = [rat_int(1), rat_int(2), rat_int(3), rat_int(5)];
        assert_eq!(slope_num.eval(&y).unwrap(), rat_int(-7));
        // Rational points and coefficients.
        let q = (&v[0] * &v[2]).scale(&rat(3, 4)) + MultiPoly::constant(4, &rat(1, 6));
        let z = [rat(1, 2), rat_int(9), rat(2, 3), rat_int(0)];
        assert_eq!(q.eval(&z).unwrap(), rat(3, 4) * rat(1, 3) + rat(1, 6));
    }

    #[test]
    fn errors() {
        let p = MultiPoly::var(4, 0);
        let q = MultiPoly::var(6, 0);
        assert_eq!(
            poly_arith(PolyOp::Add, &p, &q),
            Err(ArithError::ArityMismatch { left: 4, right: 6 })
        );
        assert!(poly_arith(PolyOp::Neg, &p, &q).is_ok());
        assert_eq!(
            p.eval(&[rat_int(1)]),
            Err(ArithError::LengthMismatch { arity: 4, got: 1 })
        );
    }

    #[test]
    fn zero_test() {
        let a = MultiPoly::var(4, 0);
        assert!((&a - &a).is_zero());
        assert!(!a.is_zero());
    }

    #[test]
    fn canonical_form_ignores_construction_order() {
        let t1 = (vec![1, 0, 1, 0], rat_int(-1));
        let t2 = (vec![0, 2, 0, 0], rat_int(1));
        let p = MultiPoly::from_terms(4, [t1.clone(), t2.clone()]).unwrap();
        let q = MultiPoly::from_terms(4, [t2, t1, (vec![0, 0, 0, 1], rat(0, 1))]).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.serialize(), "-1*a^1*c^1 + 1*b^2");
    }

    #[test]
    fn rational_coefficients_share_denominator() {
        let v = abcd();
        let p = v[0].scale(&rat(1, 2)) + v[1].scale(&rat(1, 3));
        assert_eq!(p.serialize(), "1/2*a^1 + 1/3*b^1");
        let twice = p.scale(&rat_int(6));
        assert_eq!(twice.serialize(), "3*a^1 + 2*b^1");
        assert_eq!(twice.coefficient(&[1, 0, 0, 0]), rat_int(3));
    }

    #[test]
    fn primitive_part() {
        let v = abcd();
        let p = (&v[0] * &v[1]).scale(&rat(-4, 3)) + v[2].scale(&rat(2, 3));
        let (s, prim) = p.primitive();
        assert_eq!(s, rat(-2, 3));
        assert_eq!(prim.serialize(), "2*a^1*b^1 - 1*c^1");
        assert_eq!(prim.scale(&s), p);
    }

    #[test]
    fn large_products_match_schoolbook() {
        // Exercises both accumulator paths and the parallel split.
        let v = abcd();
        let base = &v[0] + &v[1] + &v[2] + &v[3] + MultiPoly::from_int(4, 1);
        let p = base.pow(9);
        let q = base.pow(10);
        assert_eq!(&p * &base, q);
        let huge = (&v[0].scale(&rat_int(1 << 40)) + &v[1]).pow(3);
        let h2 = &huge * &huge;
        assert_eq!(h2, (&v[0].scale(&rat_int(1 << 40)) + &v[1]).pow(6));
        let wide = base.pow(12);
        let w2 = &wide * &wide;
        assert_eq!(w2.total_degree(), 24);
        let x = [rat_int(1), rat_int(-2), rat(1, 3), rat_int(2)];
        let bx = base.eval(&x).unwrap();
        assert_eq!(w2.eval(&x).unwrap(), num_traits::Pow::pow(bx, 24u32));
    }
}
