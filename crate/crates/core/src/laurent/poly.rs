//! Sparse multivariate Laurent polynomials over an exact field.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::cyclotomic::CyclotomicNumber;
use crate::error::{check_dim, Error, Result};
use crate::rational::{format_rational, Q};

/// Exact field coefficients. Method names carry a `c_` prefix so they never
/// shadow the `num_traits` ones on `Q`.
pub trait Coeff: Clone + PartialEq + fmt::Display {
    fn c_zero() -> Self;
    fn c_one() -> Self;
    fn c_is_zero(&self) -> bool;
    fn c_add(&self, other: &Self) -> Self;
    fn c_neg(&self) -> Self;
    fn c_mul(&self, other: &Self) -> Self;
    fn c_inv(&self) -> Option<Self>;
    fn from_q(x: Q) -> Self;
    fn to_cyclotomic(&self) -> CyclotomicNumber;
}

impl Coeff for Q {
    fn c_zero() -> Self {
        Q::zero()
    }
    fn c_one() -> Self {
        Q::one()
    }
    fn c_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn c_add(&self, other: &Self) -> Self {
        self + other
    }
    fn c_neg(&self) -> Self {
        -self
    }
    fn c_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn c_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn from_q(x: Q) -> Self {
        x
    }
    fn to_cyclotomic(&self) -> CyclotomicNumber {
        CyclotomicNumber::from_rational(self.clone())
    }
}

impl Coeff for CyclotomicNumber {
    fn c_zero() -> Self {
        CyclotomicNumber::zero()
    }
    fn c_one() -> Self {
        CyclotomicNumber::one()
    }
    fn c_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn c_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn c_neg(&self) -> Self {
        self.neg()
    }
    fn c_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn c_inv(&self) -> Option<Self> {
        self.inv()
    }
    fn from_q(x: Q) -> Self {
        CyclotomicNumber::from_rational(x)
    }
    fn to_cyclotomic(&self) -> CyclotomicNumber {
        self.clone()
    }
}

pub type Exponent = Vec<i64>;

/// `Σ c_a t^a` with no zero coefficients stored.
#[derive(Clone, PartialEq)]
pub struct Laurent<C: Coeff> {
    nvars: usize,
    terms: BTreeMap<Exponent, C>,
}

pub type LaurentPoly = Laurent<Q>;
pub type CycloLaurentPoly = Laurent<CyclotomicNumber>;

impl<C: Coeff> Laurent<C> {
    pub fn zero(nvars: usize) -> Self {
        Laurent { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::c_one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exp: Exponent, c: C) -> Self {
        let mut p = Laurent::zero(exp.len());
        if !c.c_is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The variable `t_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, C::c_one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, C)>) -> Result<Self> {
        let mut p = Laurent::zero(nvars);
        for (e, c) in terms {
            check_dim(nvars, e.len())?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Exponent> {
        self.terms.keys().cloned().collect()
    }

    pub fn coeff(&self, exp: &[i64]) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::c_zero)
    }

    fn add_term(&mut self, e: Exponent, c: C) {
        if c.c_is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = old.c_add(&c);
                if s.c_is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        check_dim(self.nvars, other.nvars)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Laurent { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c.c_neg())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = Laurent::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x.c_mul(y));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Laurent::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.c_mul(k));
        }
        out
    }

    /// Multiply by the monomial `t^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        Laurent {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Integer powers; negative exponents only for monomials.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            if self.terms.len() != 1 {
                return Err(Error::InvalidArgument("negative power of a non-monomial".into()));
            }
            let (e, c) = self.terms.iter().next().expect("one term");
            let inv = c.c_inv().expect("stored coefficients are nonzero");
            let m = Laurent::monomial(e.iter().map(|x| -x).collect(), inv);
            return m.pow(-k);
        }
        let mut acc = Laurent::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `f(1, ..., 1)`, the coefficient sum.
    pub fn value_at_one(&self) -> C {
        self.terms.values().fold(C::c_zero(), |acc, c| acc.c_add(c))
    }

    /// Componentwise minimum of the support exponents.
    pub fn min_exponents(&self) -> Option<Exponent> {
        self.fold_exponents(i64::min)
    }

    pub fn max_exponents(&self) -> Option<Exponent> {
        self.fold_exponents(i64::max)
    }

    fn fold_exponents(&self, f: fn(i64, i64) -> i64) -> Option<Exponent> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| acc.iter().zip(e).map(|(&a, &b)| f(a, b)).collect()))
    }

    pub fn leading_term(&self) -> Option<(&Exponent, &C)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` when `d` does
    /// not divide. Lex-leading-term division, with the Newton box of the
    /// would-be quotient bounding the search so it always terminates.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() || self.nvars != d.nvars {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent::zero(self.nvars));
        }
        let (lo_f, hi_f) = (self.min_exponents()?, self.max_exponents()?);
        let (lo_d, hi_d) = (d.min_exponents()?, d.max_exponents()?);
        let lo: Vec<i64> = lo_f.iter().zip(&lo_d).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = hi_f.iter().zip(&hi_d).map(|(a, b)| a - b).collect();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return None;
        }
        let (ld_e, ld_c) = d.leading_term()?;
        let ld_inv = ld_c.c_inv()?;
        let mut rem = self.clone();
        let mut quot = Laurent::zero(self.nvars);
        while let Some((re, rc)) = rem.leading_term() {
            let e: Exponent = re.iter().zip(ld_e).map(|(a, b)| a - b).collect();
            if e.iter().zip(lo.iter().zip(&hi)).any(|(x, (l, h))| x < l || x > h) {
                return None;
            }
            let c = rc.c_mul(&ld_inv);
            let t = Laurent::monomial(e.clone(), c.clone());
            rem = rem.sub(&t.mul(d).ok()?).ok()?;
            quot.add_term(e, c);
        }
        Some(quot)
    }

    /// Substitute `t_i = u^{map[i]}`: the exponent `a` becomes `Σ a_i map[i]`.
    pub fn monomial_substitution(&self, map: &[Vec<i64>], k: usize) -> Result<Self> {
        check_dim(self.nvars, map.len())?;
        let mut out = Laurent::zero(k);
        for (a, c) in &self.terms {
            let mut e = vec![0i64; k];
            for (ai, row) in a.iter().zip(map) {
                check_dim(k, row.len())?;
                for (ej, r) in e.iter_mut().zip(row) {
                    *ej += ai * r;
                }
            }
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn to_cyclotomic(&self) -> CycloLaurentPoly {
        let mut out = Laurent::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.to_cyclotomic());
        }
        out
    }

    /// Value at the torsion point `exp(2πi λ)`: `Σ c_a ζ_m^{m (a·λ)}` with `m`
    /// the lcm of the denominators of `λ`.
    pub fn evaluate_at(&self, lambda: &[Q]) -> Result<CyclotomicNumber> {
        check_dim(self.nvars, lambda.len())?;
        let m = crate::rational::denominator_lcm(lambda);
        let mq = Q::from_integer(m.clone());
        let m64 = m.to_u64().ok_or_else(|| Error::InvalidArgument("character order too large".into()))?;
        let mut acc = CyclotomicNumber::zero();
        for (a, c) in &self.terms {
            let s: Q = a.iter().zip(lambda).map(|(&ai, x)| Q::from_integer(BigInt::from(ai)) * x).sum();
            let k = (s * &mq).to_integer().mod_floor(&m);
            let z = CyclotomicNumber::root_power(m64, k.to_i64().expect("reduced mod m"));
            acc = acc.add(&c.to_cyclotomic().mul(&z));
        }
        Ok(acc)
    }

    /// Substitute `t_i = ζ^{λ_i} Π_j u_j^{B_ji}` for the integer `k × n` matrix `B`.
    pub fn substitute_translated(&self, lambda: &[Q], basis: &[Vec<BigInt>]) -> Result<CycloLaurentPoly> {
        check_dim(self.nvars, lambda.len())?;
        let k = basis.len();
        let mut map = vec![vec![0i64; k]; self.nvars];
        for (j, row) in basis.iter().enumerate() {
            check_dim(self.nvars, row.len())?;
            for (i, b) in row.iter().enumerate() {
                map[i][j] = b.to_i64().ok_or_else(|| Error::InvalidArgument("lattice entry too large".into()))?;
            }
        }
        let mut out = Laurent::zero(k);
        for (a, c) in &self.terms {
            let point = Laurent::<C>::monomial(a.clone(), c.clone());
            let value = point.evaluate_at(lambda)?;
            let mut e = vec![0i64; k];
            for (ai, row) in a.iter().zip(&map) {
                for (ej, r) in e.iter_mut().zip(row) {
                    *ej += ai * r;
                }
            }
            out.add_term(e, value);
        }
        Ok(out)
    }
}

impl LaurentPoly {
    pub fn from_int_terms(nvars: usize, terms: &[(&[i64], i64)]) -> Self {
        let mut p = Laurent::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e.to_vec(), Q::from_integer(BigInt::from(*c)));
        }
        p
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &[i64]) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if k == 1 {
            write!(f, "t{}", i + 1)?;
        } else {
            write!(f, "t{}^{}", i + 1, k)?;
        }
    }
    Ok(())
}

impl<C: Coeff> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let constant = e.iter().all(|&k| k == 0);
            let text = c.to_string();
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if constant {
                write!(f, "{body}")?;
            } else {
                if body != "1" {
                    write!(f, "{body}*")?;
                }
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Coefficients as `"p/q"` strings, in lexicographic exponent order.
pub fn rational_terms(p: &LaurentPoly) -> Vec<(Exponent, String)> {
    p.terms().map(|(e, c)| (e.clone(), format_rational(c))).collect()
}
