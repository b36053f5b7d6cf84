//! Exact scalar arithmetic: rational numbers and univariate rational
//! functions in one transcendental parameter `q`.
//!
//! Every coefficient in the library is a [`Scalar`]: a quotient of two
//! polynomials in `q` over the rationals, kept in a canonical form so that
//! structural equality decides mathematical equality. A plain rational
//! number is the degree-zero case.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::Error;

/// Univariate polynomial over ℚ, dense coefficients, index = power of `q`.
/// Invariant: no trailing zero coefficients (zero polynomial is an empty list).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Poly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// The monomial q^1.
    pub fn q() -> Self {
        Poly {
            coeffs: vec![BigRational::zero(), BigRational::one()],
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        let dlead = divisor.leading();
        let ddeg = divisor.degree();
        let mut quot = vec![BigRational::zero(); self.coeffs.len()];
        while !rem.is_zero() && rem.degree() >= ddeg && !(rem.coeffs.len() < divisor.coeffs.len())
        {
            let shift = rem.degree() - ddeg;
            let factor = rem.leading() / dlead.clone();
            quot[shift] = factor.clone();
            // rem -= factor * q^shift * divisor
            let mut sub = vec![BigRational::zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|c| c * &factor));
            rem = rem.sub(&Poly::from_coeffs(sub));
        }
        (Poly::from_coeffs(quot), rem)
    }

    /// Monic gcd over ℚ[q].
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lead = a.leading();
            a.scale(&lead.recip())
        }
    }
}

/// An element of the exact coefficient field ℚ(q).
///
/// Canonical form: the zero scalar is 0/1; otherwise gcd(num, den) = 1 over
/// ℚ[q] and the denominator is monic. Equality is structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn q() -> Self {
        Scalar {
            num: Poly::q(),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            num: Poly::constant(BigRational::from_integer(BigInt::from(n))),
            den: Poly::one(),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Result<Self, Error> {
        if d == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Scalar::new(
            Poly::constant(BigRational::new(BigInt::from(n), BigInt::from(d))),
            Poly::one(),
        ))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar {
            num: Poly::constant(r),
            den: Poly::one(),
        }
    }

    /// Build and normalize num/den. Panics on a zero denominator polynomial;
    /// use [`Scalar::try_new`] for fallible construction.
    pub fn new(num: Poly, den: Poly) -> Self {
        Scalar::try_new(num, den).expect("zero denominator")
    }

    pub fn try_new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut s = Scalar { num, den };
        s.normalize();
        Ok(s)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_rem(&g).0;
            self.den = self.den.div_rem(&g).0;
        }
        let lead = self.den.leading();
        if !lead.is_one() {
            let inv = lead.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// True when the scalar is a plain rational number (no `q` dependence).
    pub fn is_rational(&self) -> bool {
        self.num.degree() == 0 && self.den.is_one()
    }

    pub fn inv(&self) -> Result<Scalar, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Scalar::try_new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "scalar division by zero");
        Scalar::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

// ---------------------------------------------------------------------------
// Textual syntax: "p/q" for rationals, integer-coefficient polynomial strings
// like "q^2 - 1" with a top-level "/" separating numerator and denominator.
// ---------------------------------------------------------------------------

impl Scalar {
    pub fn parse(input: &str) -> Result<Scalar, Error> {
        let s = input.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        // Split on a single top-level '/'.
        let mut depth = 0usize;
        let mut split: Option<usize> = None;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| Error::Parse(format!("unbalanced ')' in '{s}'")))?
                }
                '/' if depth == 0 => {
                    if split.is_some() {
                        return Err(Error::Parse(format!("multiple top-level '/' in '{s}'")));
                    }
                    split = Some(i);
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(Error::Parse(format!("unbalanced '(' in '{s}'")));
        }
        match split {
            None => Scalar::try_new(parse_poly(s)?, Poly::one()),
            Some(i) => {
                let num = s[..i].trim();
                let den = s[i + 1..].trim();
                if num.is_empty() || den.is_empty() {
                    return Err(Error::Parse(format!("missing operand around '/' in '{s}'")));
                }
                let den = parse_poly(den)?;
                if den.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Scalar::try_new(parse_poly(num)?, den)
            }
        }
    }
}

/// Parse an integer-coefficient polynomial in `q`, optionally wrapped in one
/// pair of parentheses.
fn parse_poly(input: &str) -> Result<Poly, Error> {
    let mut s = input.trim();
    while s.starts_with('(') && s.ends_with(')') && balanced_strip(s) {
        s = s[1..s.len() - 1].trim();
    }
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms: Vec<(bool, &str)> = Vec::new(); // (negative, term text)
    let mut start = 0usize;
    let mut neg = false;
    let bytes = s.as_bytes();
    let mut i = 0usize;
    // leading sign
    if bytes[0] == b'+' || bytes[0] == b'-' {
        neg = bytes[0] == b'-';
        start = 1;
        i = 1;
    }
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c == '+' || c == '-' {
            terms.push((neg, s[start..i].trim()));
            neg = c == '-';
            start = i + 1;
        }
        i += 1;
    }
    terms.push((neg, s[start..].trim()));
    let mut acc = Poly::zero();
    for (negative, t) in terms {
        let p = parse_term(t)?;
        acc = if negative { acc.sub(&p) } else { acc.add(&p) };
    }
    Ok(acc)
}

fn balanced_strip(s: &str) -> bool {
    // check whether the outermost parens wrap the whole string
    let mut depth = 0i64;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i + 1 != s.len() {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

/// A single term: `[int] ['*'] ['q' ['^' uint]]`.
fn parse_term(t: &str) -> Result<Poly, Error> {
    let t = t.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let (coef_str, q_str) = match t.find('q') {
        Some(pos) => (t[..pos].trim().trim_end_matches('*').trim(), &t[pos..]),
        None => (t, ""),
    };
    let coef: BigInt = if coef_str.is_empty() {
        BigInt::one()
    } else {
        coef_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient '{coef_str}'")))?
    };
    let power: usize = if q_str.is_empty() {
        0
    } else {
        let rest = &q_str[1..];
        if rest.is_empty() {
            1
        } else {
            let rest = rest.trim();
            let stripped = rest
                .strip_prefix('^')
                .ok_or_else(|| Error::Parse(format!("bad term '{t}'")))?
                .trim();
            stripped
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent '{stripped}'")))?
        }
    };
    let mut coeffs = vec![BigRational::zero(); power + 1];
    coeffs[power] = BigRational::from_integer(coef);
    Ok(Poly::from_coeffs(coeffs))
}

// ---------------------------------------------------------------------------
// Display: integer-coefficient form, denominator with positive leading
// coefficient, omitted when it is 1.
// ---------------------------------------------------------------------------

/// Least common multiple of the coefficient denominators.
fn denominator_lcm(p: &Poly) -> BigInt {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        let d = c.denom();
        l = num::integer::lcm(l, d.clone());
    }
    l
}

fn content(p: &Poly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p.coeffs() {
        g = num::integer::gcd(g, c.numer().clone());
    }
    g.abs()
}

fn poly_string(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (pos, (pow, c)) in p
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .enumerate()
    {
        let c = c.to_integer();
        let negative = c < BigInt::zero();
        let mag = c.abs();
        if pos == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let coef_part = if mag.is_one() && pow > 0 {
            String::new()
        } else {
            mag.to_string()
        };
        out.push_str(&coef_part);
        if pow > 0 {
            out.push('q');
            if pow > 1 {
                out.push_str(&format!("^{pow}"));
            }
        }
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Rescale so both polynomials have integer coefficients with
        // coprime contents and a positive denominator.
        let ln = denominator_lcm(&self.num);
        let ld = denominator_lcm(&self.den);
        let num_i = self.num.scale(&BigRational::from_integer(ln.clone()));
        let den_i = self.den.scale(&BigRational::from_integer(ld.clone()));
        // current value = (num_i/ln) / (den_i/ld) = (num_i * ld)/(den_i * ln)
        let num_i = num_i.scale(&BigRational::from_integer(ld));
        let den_i = den_i.scale(&BigRational::from_integer(ln));
        let g = num::integer::gcd(content(&num_i), content(&den_i));
        let ginv = BigRational::from_integer(g).recip();
        let mut num_i = num_i.scale(&ginv);
        let mut den_i = den_i.scale(&ginv);
        if den_i.leading() < BigRational::zero() {
            num_i = num_i.neg();
            den_i = den_i.neg();
        }
        if den_i.is_one() {
            write!(f, "{}", poly_string(&num_i))
        } else {
            let ns = poly_string(&num_i);
            let ds = poly_string(&den_i);
            let nw = if num_i.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({ns})")
            } else {
                ns
            };
            let dw = if den_i.coeffs().iter().filter(|c| !c.is_zero()).count() > 1
                || den_i.degree() > 0
            {
                format!("({ds})")
            } else {
                ds
            };
            write!(f, "{nw}/{dw}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        Scalar::parse(text).unwrap()
    }

    #[test]
    fn gcd_reduction() {
        assert_eq!(s("2/4"), s("1/2"));
        assert_eq!(s("2/4").to_string(), "1/2");
    }

    #[test]
    fn polynomial_cancellation() {
        // (q^2 - 1)/(q - 1) reduces to q + 1; cross-checked below by long
        // division against the remainder.
        let reduced = s("(q^2 - 1)/(q - 1)");
        assert_eq!(reduced, s("q + 1"));
        let (quot, rem) = parse_poly("q^2 - 1").unwrap().div_rem(&parse_poly("q - 1").unwrap());
        assert!(rem.is_zero());
        assert_eq!(quot, parse_poly("q + 1").unwrap());
    }

    #[test]
    fn zero_canonicalization() {
        let z = s("0/(q^3 + 2)");
        assert!(z.is_zero());
        assert_eq!(z, Scalar::zero());
        assert!(z.denominator().is_one());
    }

    #[test]
    fn double_slash_rejected() {
        assert!(Scalar::parse("1//2").is_err());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(Scalar::parse("1/0").is_err());
        assert!(matches!(
            Scalar::try_new(Poly::one(), Poly::zero()),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn display_roundtrip() {
        for text in [
            "0",
            "1",
            "-1",
            "1/2",
            "-3/7",
            "q",
            "q^2 - 1",
            "(q^2 - 1)/(q - 1)",
            "(q + 1)/(2q - 3)",
            "2q^3 + q - 5",
            "1/(q^2 + q + 1)",
        ] {
            let v = s(text);
            assert_eq!(Scalar::parse(&v.to_string()).unwrap(), v, "case {text}");
        }
    }

    #[test]
    fn field_ops() {
        let a = s("(q + 1)/2");
        let b = s("q - 1");
        assert_eq!(&a * &b, s("(q^2 - 1)/2"));
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&a - &a, Scalar::zero());
        assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
    }

    #[test]
    fn normalize_idempotent() {
        let a = s("(2q^2 - 2)/(4q - 4)");
        let again = Scalar::try_new(a.numerator().clone(), a.denominator().clone()).unwrap();
        assert_eq!(a, again);
    }
}
