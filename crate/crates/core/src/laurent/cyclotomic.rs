//! Exact arithmetic in cyclotomic fields `Q(ζ_m) = Q[x]/Φ_m(x)`.
//!
//! Values of different orders are combined by lifting both to the lcm of
//! their orders (`ζ_m = ζ_M^(M/m)`).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::rational::{format_rational, Q};

type IntPoly = Vec<BigInt>;

fn phi_cache() -> &'static RwLock<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `Φ_m` (coefficients low to high), via `x^m - 1 = Π_{d | m} Φ_d`.
pub fn cyclotomic_polynomial(m: u64) -> Arc<IntPoly> {
    assert!(m >= 1, "cyclotomic order must be positive");
    if let Some(p) = phi_cache().read().expect("cache lock").get(&m) {
        return p.clone();
    }
    let mut num: IntPoly = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in (1..m).filter(|d| m % d == 0) {
        let div = cyclotomic_polynomial(d);
        num = exact_monic_division(&num, &div);
    }
    let p = Arc::new(num);
    phi_cache().write().expect("cache lock").insert(m, p.clone());
    p
}

fn exact_monic_division(num: &IntPoly, den: &IntPoly) -> IntPoly {
    let mut rem = num.clone();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

pub fn euler_phi(m: u64) -> usize {
    cyclotomic_polynomial(m).len() - 1
}

/// An element of `Q(ζ_m)` as a polynomial of degree `< φ(m)` in `ζ_m`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    order: u64,
    coeffs: Vec<Q>,
}

impl CyclotomicNumber {
    pub fn zero() -> Self {
        Self::from_rational(Q::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Q::one())
    }

    pub fn from_rational(x: Q) -> Self {
        CyclotomicNumber { order: 1, coeffs: vec![x] }
    }

    /// `ζ_m^e` for any integer `e`.
    pub fn root_power(m: u64, e: i64) -> Self {
        let e = e.rem_euclid(m as i64) as usize;
        let mut c = vec![Q::zero(); e + 1];
        c[e] = Q::one();
        Self::reduced(m, c)
    }

    /// Reduce an arbitrary polynomial in `ζ_m` modulo `Φ_m`.
    pub fn reduced(m: u64, mut c: Vec<Q>) -> Self {
        let phi = cyclotomic_polynomial(m);
        let d = phi.len() - 1;
        for k in (d..c.len()).rev() {
            if c[k].is_zero() {
                continue;
            }
            let lead = c[k].clone();
            for (i, p) in phi.iter().enumerate().take(d) {
                if !p.is_zero() {
                    c[k - d + i] -= &lead * Q::from_integer(p.clone());
                }
            }
            c[k] = Q::zero();
        }
        c.resize(d, Q::zero());
        CyclotomicNumber { order: m, coeffs: c }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The same number written in `Q(ζ_big)`; `self.order` must divide `big`.
    pub fn lift(&self, big: u64) -> Self {
        if big == self.order {
            return self.clone();
        }
        assert!(big % self.order == 0, "cannot lift order {} to {}", self.order, big);
        let step = (big / self.order) as usize;
        let mut c = vec![Q::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[i * step] = x.clone();
        }
        Self::reduced(big, c)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let m = self.order.lcm(&other.order);
        (self.lift(m), other.lift(m))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.order == other.order {
            let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
            return CyclotomicNumber { order: self.order, coeffs };
        }
        let (a, b) = self.common(other);
        a.add(&b)
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber { order: self.order, coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.order != other.order {
            let (a, b) = self.common(other);
            return a.mul(&b);
        }
        if self.coeffs.len() == 1 {
            return CyclotomicNumber { order: self.order, coeffs: vec![&self.coeffs[0] * &other.coeffs[0]] };
        }
        let mut c = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        Self::reduced(self.order, c)
    }

    pub fn scale(&self, k: &Q) -> Self {
        CyclotomicNumber { order: self.order, coeffs: self.coeffs.iter().map(|x| x * k).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Φ_m`.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.coeffs.len() == 1 {
            return Some(CyclotomicNumber { order: self.order, coeffs: vec![Q::one() / &self.coeffs[0]] });
        }
        let phi: Vec<Q> = cyclotomic_polynomial(self.order).iter().map(|c| Q::from_integer(c.clone())).collect();
        // Invariant: s * self ≡ r (mod Φ).
        let (mut r0, mut r1) = (phi, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::<Q>::new(), vec![Q::one()]);
        while !(r1.len() == 1) {
            let (quo, rem) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&quo, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                unreachable!("Φ_m is irreducible, so nonzero elements are units");
            }
        }
        let c = r1[0].clone();
        let s: Vec<Q> = s1.iter().map(|x| x / &c).collect();
        Some(Self::reduced(self.order, s))
    }

    /// Numerical value at `ζ_m = exp(2πi/m)`; sanity checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let cf = c.numer().to_f64().unwrap_or(f64::NAN) / c.denom().to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / m;
            re += cf * ang.cos();
            im += cf * ang.sin();
        }
        (re, im)
    }

    /// The rational value, if this number lies in `Q`.
    pub fn as_rational(&self) -> Option<Q> {
        // Reduce to the canonical basis of order 1 when possible.
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            return Some(self.coeffs.first().cloned().unwrap_or_else(Q::zero));
        }
        None
    }
}

fn trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    trim(c)
}

fn poly_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut c = vec![Q::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        c[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        c[i] -= y;
    }
    trim(c)
}

fn poly_divmod(a: &[Q], b: &[Q]) -> (Vec<Q>, Vec<Q>) {
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quo = vec![Q::zero(); rem.len() - db];
    let lead = b[db].clone();
    for k in (0..quo.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (i, y) in b.iter().enumerate() {
            rem[k + i] -= &c * y;
        }
        quo[k] = c;
    }
    (trim(quo), trim(rem))
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(x) = self.as_rational() {
            return write!(f, "{}", format_rational(&x));
        }
        let z = format!("z{}", self.order);
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => z.clone(),
                _ => format!("{z}^{k}"),
            };
            parts.push(match (k, c.is_one()) {
                (0, _) => format_rational(c),
                (_, true) => mono,
                _ if c == &-Q::one() => format!("-{mono}"),
                _ => format!("{}*{mono}", format_rational(c)),
            });
        }
        write!(f, "({})", parts.join(" + ").replace("+ -", "- "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qr};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ints(p: &IntPoly) -> Vec<i64> {
        p.iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(ints(&cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(ints(&cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(105), 48);
        // Φ_105 is the first with a coefficient -2.
        assert!(ints(&cyclotomic_polynomial(105)).contains(&-2));
    }

    #[test]
    fn roots_of_unity() {
        let z3 = CyclotomicNumber::root_power(3, 1);
        assert!(!z3.is_zero());
        let one = z3.mul(&z3).mul(&z3);
        assert_eq!(one, CyclotomicNumber::one());
        // 1 + ζ3 + ζ3² = 0
        let s = CyclotomicNumber::one().add(&z3).add(&z3.mul(&z3));
        assert!(s.is_zero());
        assert_eq!(CyclotomicNumber::root_power(2, 1), CyclotomicNumber::from_rational(q(-1)));
        // ζ4 lifted to order 12 is ζ12^3.
        assert_eq!(CyclotomicNumber::root_power(4, 1).lift(12), CyclotomicNumber::root_power(12, 3));
        assert_eq!(CyclotomicNumber::root_power(6, 3), CyclotomicNumber::from_rational(q(-1)));
    }

    #[test]
    fn inverses() {
        let x = CyclotomicNumber::reduced(5, vec![q(2), q(-1), qr(1, 3)]);
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), CyclotomicNumber::one());
        assert!(CyclotomicNumber::zero().inv().is_none());
    }

    #[test]
    fn zero_test_matches_numerics() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let m = rng.gen_range(1..=12u64);
            // Random sums of roots of unity, including genuine cancellations.
            let mut acc = CyclotomicNumber::zero();
            for _ in 0..rng.gen_range(0..6) {
                let e = rng.gen_range(0..m as i64);
                let c = q(rng.gen_range(-2..=2));
                acc = acc.add(&CyclotomicNumber::root_power(m, e).scale(&c));
            }
            let (re, im) = acc.to_complex();
            let numerically_zero = re.abs() < 1e-9 && im.abs() < 1e-9;
            assert_eq!(acc.is_zero(), numerically_zero, "{acc}");
        }
    }
}
