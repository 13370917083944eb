use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::angle::{angle_exponent_mod, RationalAngle};
use super::matrix::Scalar;
use super::rational::{format_rational, Rational};
use super::ExactError;

/// Element of the cyclotomic field Q(zeta_N): a polynomial in zeta_N of
/// degree < phi(N), reduced modulo the N-th cyclotomic polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    conductor: u64,
    /// Length phi(N); coeffs[k] multiplies zeta_N^k.
    coeffs: Vec<Rational>,
}

/// Per-conductor reduction data, computed once and shared.
struct FieldTable {
    phi: usize,
    /// Monic integer coefficients of Phi_N, length phi+1.
    minpoly: Vec<BigInt>,
    /// zeta^k reduced mod Phi_N for k in phi .. 2*phi-1.
    high_powers: Vec<Vec<Rational>>,
}

fn tables() -> &'static Mutex<HashMap<u64, Arc<FieldTable>>> {
    static TABLES: OnceLock<Mutex<HashMap<u64, Arc<FieldTable>>>> = OnceLock::new();
    TABLES.get_or_init(|| Mutex::new(HashMap::new()))
}

fn table_for(n: u64) -> Arc<FieldTable> {
    let mut guard = tables().lock().unwrap();
    if let Some(t) = guard.get(&n) {
        return t.clone();
    }
    let minpoly = cyclotomic_polynomial(n);
    let phi = minpoly.len() - 1;
    // x^k mod Phi_N for k = phi .. 2*phi-1, built incrementally:
    // x^{k+1} = shift(x^k) then subtract lead * Phi_N.
    let mut high_powers = Vec::with_capacity(phi.max(1));
    let mut cur: Vec<Rational> = vec![Rational::zero(); phi];
    if phi > 0 {
        // start with x^{phi-1}, shift into x^phi
        cur[phi - 1] = Rational::one();
    }
    for _ in 0..phi {
        cur = reduce_shift(&cur, &minpoly);
        high_powers.push(cur.clone());
    }
    let t = Arc::new(FieldTable { phi, minpoly, high_powers });
    guard.insert(n, t.clone());
    t
}

/// Multiply by x and reduce modulo the monic minpoly. Input and output have
/// length phi.
fn reduce_shift(p: &[Rational], minpoly: &[BigInt]) -> Vec<Rational> {
    let phi = p.len();
    let mut out = vec![Rational::zero(); phi];
    for k in (0..phi.saturating_sub(1)).rev() {
        out[k + 1] = p[k].clone();
    }
    let lead = p[phi - 1].clone();
    if !lead.is_zero() {
        for k in 0..phi {
            out[k] -= &lead * Rational::from(minpoly[k].clone());
        }
    }
    out
}

/// Integer coefficients of Phi_n, low degree first, via repeated exact
/// division of x^n - 1 by Phi_d for proper divisors d.
fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    let mut poly: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial_memo(d);
            poly = divide_exact(&poly, &phi_d);
        }
    }
    poly
}

fn cyclotomic_polynomial_memo(n: u64) -> Vec<BigInt> {
    static MEMO: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = memo.lock().unwrap().get(&n) {
        return p.clone();
    }
    let p = cyclotomic_polynomial(n);
    memo.lock().unwrap().insert(n, p.clone());
    p
}

/// Exact division of integer polynomials (divisor monic).
fn divide_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    assert!(den[dn].is_one());
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(BigInt::is_zero), "division not exact");
    quot
}

impl Cyclotomic {
    pub fn zero(conductor: u64) -> Self {
        let phi = table_for(conductor).phi;
        Cyclotomic { conductor, coeffs: vec![Rational::zero(); phi] }
    }

    pub fn one(conductor: u64) -> Self {
        Self::from_rational(conductor, Rational::one())
    }

    pub fn from_rational(conductor: u64, r: Rational) -> Self {
        let mut c = Self::zero(conductor);
        c.coeffs[0] = r;
        c
    }

    /// zeta_N^k.
    pub fn root_power(conductor: u64, k: u64) -> Self {
        let t = table_for(conductor);
        let k = (k % conductor) as usize;
        let mut coeffs = vec![Rational::zero(); t.phi];
        if k < t.phi {
            coeffs[k] = Rational::one();
        } else {
            // reduce by repeated shifting of x^{phi-1}
            let mut cur = vec![Rational::zero(); t.phi];
            cur[t.phi - 1] = Rational::one();
            for _ in 0..(k - t.phi + 1) {
                cur = reduce_shift(&cur, &t.minpoly);
            }
            coeffs = cur;
        }
        Cyclotomic { conductor, coeffs }
    }

    /// Embeds a root of unity; its order must divide the conductor.
    pub fn from_angle(conductor: u64, a: &RationalAngle) -> Result<Self, ExactError> {
        let k = angle_exponent_mod(a, conductor)?;
        Ok(Self::root_power(conductor, k))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The rational value, if this element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.conductor, other.conductor,
            "cyclotomic arithmetic across different conductors"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Cyclotomic { conductor: self.conductor, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Cyclotomic { conductor: self.conductor, coeffs }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let t = table_for(self.conductor);
        let phi = t.phi;
        let mut prod = vec![Rational::zero(); 2 * phi.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let mut coeffs: Vec<Rational> = prod[..phi].to_vec();
        for k in phi..2 * phi - 1 {
            if prod[k].is_zero() {
                continue;
            }
            let red = &t.high_powers[k - phi];
            for (c, r) in coeffs.iter_mut().zip(red) {
                *c += &prod[k] * r;
            }
        }
        Cyclotomic { conductor: self.conductor, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the minimal polynomial. Panics on zero.
    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let t = table_for(self.conductor);
        // Work in Q[x]: gcd(self, Phi_N) = 1, find u with u*self = 1 mod Phi_N.
        let phi_poly: Vec<Rational> =
            t.minpoly.iter().map(|c| Rational::from(c.clone())).collect();
        let (mut r0, mut r1) = (phi_poly, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (vec![], vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd (a nonzero constant), s0 * self = r0 mod Phi_N
        assert!(r0.len() == 1, "element not invertible");
        let inv_gcd = Rational::one() / r0[0].clone();
        let mut coeffs = vec![Rational::zero(); t.phi];
        // s0 may have degree >= phi in principle; reduce via mul with 1.
        let mut reduced = Cyclotomic::zero(self.conductor);
        for (k, c) in s0.iter().enumerate() {
            let term = Cyclotomic::root_power(self.conductor, k as u64);
            for (dst, src) in reduced
                .coeffs
                .iter_mut()
                .zip(term.coeffs.iter().map(|x| x * c * &inv_gcd))
            {
                *dst += src;
            }
        }
        coeffs.clone_from_slice(&reduced.coeffs);
        Cyclotomic { conductor: self.conductor, coeffs }
    }

    /// Image under Q(zeta_N) -> Q(zeta_M) for N | M, sending zeta_N to
    /// zeta_M^{M/N}.
    pub fn embed(&self, new_conductor: u64) -> Result<Self, ExactError> {
        if new_conductor % self.conductor != 0 {
            return Err(ExactError::ConductorMismatch(self.conductor, new_conductor));
        }
        let step = new_conductor / self.conductor;
        let mut out = Cyclotomic::zero(new_conductor);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Cyclotomic::root_power(new_conductor, k as u64 * step);
            for (dst, src) in out.coeffs.iter_mut().zip(&term.coeffs) {
                *dst += c * src;
            }
        }
        Ok(out)
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().map_or(false, Rational::is_zero) {
        p.pop();
    }
    p
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    if num.len() <= dn {
        return (vec![], trim(rem));
    }
    let mut quot = vec![Rational::zero(); num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dn] / &den[dn];
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    (trim(quot), trim(rem))
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

impl Scalar for Cyclotomic {
    fn is_zero_elem(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Cyclotomic::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Cyclotomic::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Cyclotomic::mul(self, other)
    }
    fn exact_div(&self, other: &Self) -> Self {
        Cyclotomic::mul(self, &other.inverse())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", format_rational(c))?;
            } else if c.is_one() {
                write!(f, "z{}^{}", self.conductor, k)?;
            } else {
                write!(f, "{}*z{}^{}", format_rational(c), self.conductor, k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn phi(n: u64) -> Vec<i64> {
        cyclotomic_polynomial(n)
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(phi(1), vec![-1, 1]);
        assert_eq!(phi(2), vec![1, 1]);
        assert_eq!(phi(3), vec![1, 1, 1]);
        assert_eq!(phi(4), vec![1, 0, 1]);
        assert_eq!(phi(6), vec![1, -1, 1]);
        assert_eq!(phi(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(phi(12), vec![1, 0, -1, 0, 1]);
        // first index with a coefficient outside {-1,0,1}
        assert!(phi(105).contains(&-2));
    }

    #[test]
    fn root_powers_multiply() {
        let z = Cyclotomic::root_power(12, 1);
        let mut acc = Cyclotomic::one(12);
        for _ in 0..12 {
            acc = acc.mul(&z);
        }
        assert_eq!(acc, Cyclotomic::one(12));
        // zeta_12^6 = -1
        let m = Cyclotomic::root_power(12, 6);
        assert_eq!(m.as_rational(), Some(rat(-1, 1)));
    }

    #[test]
    fn angle_embedding_respects_products() {
        let a = RationalAngle::from_ratio(1, 3);
        let b = RationalAngle::from_ratio(1, 4);
        let ab = &a * &b;
        let ca = Cyclotomic::from_angle(12, &a).unwrap();
        let cb = Cyclotomic::from_angle(12, &b).unwrap();
        let cab = Cyclotomic::from_angle(12, &ab).unwrap();
        assert_eq!(ca.mul(&cb), cab);
        assert!(Cyclotomic::from_angle(8, &a).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let x = Cyclotomic::root_power(5, 2)
            .add(&Cyclotomic::from_rational(5, rat(3, 2)));
        assert_eq!(x.mul(&x.inverse()), Cyclotomic::one(5));
    }

    #[test]
    fn field_embedding_is_homomorphic() {
        let x = Cyclotomic::root_power(6, 1).add(&Cyclotomic::one(6));
        let y = Cyclotomic::root_power(6, 5).sub(&Cyclotomic::from_rational(6, rat(1, 3)));
        let lhs = x.mul(&y).embed(18).unwrap();
        let rhs = x.embed(18).unwrap().mul(&y.embed(18).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn primitive_cube_root_sums_to_minus_one() {
        // 1 + zeta_3 + zeta_3^2 = 0
        let z = Cyclotomic::root_power(3, 1);
        let sum = Cyclotomic::one(3).add(&z).add(&z.mul(&z));
        assert!(sum.is_zero());
    }
}
