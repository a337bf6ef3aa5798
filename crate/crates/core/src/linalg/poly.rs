use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Dense univariate polynomial over the integers, lowest degree first.
/// The leading coefficient is non-zero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::new(vec![c])
    }

    /// `a + b·x`.
    pub fn linear(a: BigInt, b: BigInt) -> Self {
        IntPolynomial::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    #[must_use]
    pub fn derivative(&self) -> Self {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    #[must_use]
    pub fn scale(&self, c: &BigInt) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    #[must_use]
    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(IntPolynomial::constant(BigInt::one()), |acc, _| &acc * self)
    }

    /// `p(-x)`.
    #[must_use]
    pub fn reflect(&self) -> Self {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content; the sign of the leading coefficient is kept.
    #[must_use]
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPolynomial::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Remainder of `lc(d)^(deg self - deg d + 1) · self` by `d`, computed
    /// without fractions.
    pub fn pseudo_rem(&self, d: &IntPolynomial) -> IntPolynomial {
        let dd = d.degree().expect("pseudo-division by zero polynomial");
        let lc = d.leading().expect("non-zero");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return self.clone();
        }
        // exactly deg(self) - deg(d) + 1 multiplications by lc
        for top in (dd..r.len()).rev() {
            let lead = std::mem::take(&mut r[top]);
            for c in r[..top].iter_mut() {
                *c *= lc;
            }
            let shift = top - dd;
            for (i, dc) in d.coeffs[..dd].iter().enumerate() {
                r[i + shift] -= &lead * dc;
            }
        }
        r.truncate(dd);
        IntPolynomial::new(r)
    }

    /// Exact division; `None` unless `d` divides `self` over the integers.
    pub fn div_exact(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        let dd = d.degree()?;
        let lc = d.leading()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return r.is_empty().then(IntPolynomial::zero);
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        while r.len() > dd {
            let shift = r.len() - 1 - dd;
            let (c, rem) = r.last().expect("non-empty").div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[i + shift] -= &c * dc;
            }
            q[shift] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        r.is_empty().then(|| IntPolynomial::new(q))
    }

    /// Greatest common divisor by the primitive remainder sequence; the
    /// result is primitive with positive leading coefficient.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        if a.leading().is_some_and(Signed::is_negative) {
            -a
        } else {
            a
        }
    }

    /// `p / gcd(p, p')`: same roots, all simple.
    pub fn square_free_part(&self) -> IntPolynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd divides the primitive part")
    }

    /// Sturm sequence `p, p', -rem(p, p'), ..` with each remainder scaled by a
    /// positive factor (pseudo-remainder with `|lc|`, then primitive part),
    /// which leaves all sign patterns intact.
    pub fn sturm_chain(&self) -> Vec<IntPolynomial> {
        let mut chain = vec![self.primitive_part()];
        let d = self.derivative().primitive_part();
        if d.is_zero() {
            return chain;
        }
        chain.push(d);
        loop {
            let n = chain.len();
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            let mut r = a.pseudo_rem(b);
            let exponent = a.degree().unwrap_or(0) + 1 - b.degree().unwrap_or(0);
            if b.leading().is_some_and(Signed::is_negative) && exponent % 2 == 1 {
                r = -r;
            }
            let next = (-r).primitive_part();
            if next.is_zero() {
                break;
            }
            chain.push(next);
        }
        chain
    }

    /// Number of distinct real roots (Sturm's theorem on the whole line).
    pub fn count_distinct_real_roots(&self) -> usize {
        let chain = self.sturm_chain();
        let at_pos_inf = super::matrix::sign_variations(
            chain
                .iter()
                .map(|p| p.leading().map(|c| c.signum()).unwrap_or_default()),
        );
        let at_neg_inf = super::matrix::sign_variations(chain.iter().map(|p| {
            let s = p.leading().map(|c| c.signum()).unwrap_or_default();
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }));
        at_neg_inf - at_pos_inf
    }

    /// Renders with the variable `var`, highest degree first, e.g.
    /// `3*n^2 - 8*n + 4`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

/// Exact Horner evaluation at a rational point.
pub fn eval_rational(p: &IntPolynomial, x: &Rational) -> Rational {
    p.coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
        acc * x + Rational::from_integer(c.clone())
    })
}

/// Whether every complex root of `p` is real, counted with multiplicity.
///
/// Reduces to the square-free part (same root set, all simple) and compares
/// its degree with its number of distinct real roots from a Sturm chain.
pub fn sturm_is_real_rooted(p: &IntPolynomial) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::invalid("real-rootedness of the zero polynomial"));
    }
    let sf = p.square_free_part();
    let degree = sf.degree().unwrap_or(0);
    Ok(sf.count_distinct_real_roots() == degree)
}
