//! Dense univariate polynomials over a [`Scalar`] field.
//!
//! Degrees in this problem stay small (≲ 10), so coefficients are stored
//! densely, index = power of x. The zero polynomial has no degree; callers get
//! `None` rather than a sentinel number.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<T: Scalar> {
    coeffs: Vec<T>, // trailing coefficient nonzero unless empty
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Polynomial::new(vec![c])
    }

    /// c·x^k
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// Degree of the polynomial, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Leading coefficient; zero polynomial has none.
    pub fn leading(&self) -> Option<T> {
        self.coeffs.last().cloned()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Smallest power with a nonzero coefficient, `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, s: &T) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.clone() * T::from_i64(i as i64 + 1))
                .collect(),
        )
    }

    /// Antiderivative with value zero at the origin.
    pub fn antiderivative(&self) -> Self {
        if self.coeffs.is_empty() {
            return Polynomial::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(T::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            out.push(c.clone() / T::from_i64(i as i64 + 1));
        }
        Polynomial::new(out)
    }

    /// Quotient and remainder of self / divisor; `deg rem < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let q = rem[k].clone() / lead.clone();
            if !q.is_zero() {
                for i in 0..dd {
                    rem[k - dd + i] =
                        rem[k - dd + i].clone() - q.clone() * divisor.coeffs[i].clone();
                }
            }
            rem[k] = T::zero();
            quot[k - dd] = q;
        }
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// p(x + b)
    pub fn translate(&self, b: &T) -> Self {
        // synthetic division by (x - (-b)) repeated
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let add = c[j + 1].clone() * b.clone();
                c[j] = c[j].clone() + add;
            }
        }
        Polynomial::new(c)
    }

    /// (even part e with e(x²)=… , odd part o with x·o(x²)=…): self = e(x²) + x·o(x²)
    /// when self only has the matching parities; here simply splits by index parity.
    pub fn split_parity(&self) -> (Polynomial<T>, Polynomial<T>) {
        let mut even = vec![T::zero(); self.coeffs.len()];
        let mut odd = vec![T::zero(); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 0 {
                even[i] = c.clone();
            } else {
                odd[i] = c.clone();
            }
        }
        (Polynomial::new(even), Polynomial::new(odd))
    }

    /// For a polynomial with only even powers, the polynomial g with g(x²) = self(x).
    pub fn even_part_in_square(&self) -> Option<Polynomial<T>> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Polynomial::new(
            self.coeffs.iter().step_by(2).cloned().collect(),
        ))
    }

    /// For a polynomial with only odd powers, the polynomial g with x·g(x²) = self(x).
    pub fn odd_part_in_square(&self) -> Option<Polynomial<T>> {
        if self.coeffs.iter().step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Polynomial::new(
            self.coeffs.iter().skip(1).step_by(2).cloned().collect(),
        ))
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

// ---------------------------------------------------------------------------
// Parsing. Two text forms are accepted everywhere a polynomial is read:
//   "c0,c1,c2,..."       comma-separated coefficients, index = power
//   "1+2x^3-x^5"         monomial sum with integer or decimal coefficients
// ---------------------------------------------------------------------------

/// (decimal text, power) pairs of a polynomial string; shared by the exact and
/// floating-point materializations so both parse the same grammar.
fn parse_terms(s: &str) -> Result<Vec<(String, usize)>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if !s.contains('x') {
        // coefficient list
        return s
            .split(',')
            .enumerate()
            .map(|(i, tok)| {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(Error::Parse(format!("empty coefficient at index {i}")));
                }
                check_number(tok)?;
                Ok((tok.to_string(), i))
            })
            .collect();
    }
    if s.contains(',') {
        return Err(Error::Parse(
            "monomial form must not contain commas".into(),
        ));
    }
    let mut terms = Vec::new();
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    while pos < chars.len() {
        let mut sign = 1i64;
        while pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        }
        if pos >= chars.len() {
            return Err(Error::Parse("dangling sign".into()));
        }
        let start = pos;
        while pos < chars.len() && (chars[pos].is_ascii_digit() || chars[pos] == '.') {
            pos += 1;
        }
        let mut num: String = chars[start..pos].iter().collect();
        let power = if pos < chars.len() && chars[pos] == 'x' {
            pos += 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let pstart = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pstart == pos {
                    return Err(Error::Parse("missing exponent after '^'".into()));
                }
                let ptext: String = chars[pstart..pos].iter().collect();
                ptext
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad exponent '{ptext}'")))?
            } else {
                1
            }
        } else {
            if num.is_empty() {
                return Err(Error::Parse(format!(
                    "unexpected character '{}'",
                    chars[pos]
                )));
            }
            0
        };
        if num.is_empty() {
            num = "1".to_string();
        }
        check_number(&num)?;
        if sign < 0 {
            num.insert(0, '-');
        }
        terms.push((num, power));
    }
    Ok(terms)
}

fn check_number(tok: &str) -> Result<()> {
    let body = tok.strip_prefix('-').unwrap_or(tok);
    let ok = !body.is_empty()
        && body.chars().all(|c| c.is_ascii_digit() || c == '.')
        && body.chars().filter(|&c| c == '.').count() <= 1
        && body.chars().any(|c| c.is_ascii_digit());
    if ok {
        Ok(())
    } else {
        Err(Error::Parse(format!("bad coefficient '{tok}'")))
    }
}

/// Decimal text to an exact rational, e.g. "1.25" → 5/4.
fn decimal_to_rational(tok: &str) -> Result<BigRational> {
    let (neg, body) = match tok.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, tok),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((a, b)) => (a, b),
        None => (body, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    let num = BigInt::from_str(if digits.is_empty() { "0" } else { &digits })
        .map_err(|_| Error::Parse(format!("bad coefficient '{tok}'")))?;
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    let r = BigRational::new(num, den);
    Ok(if neg { -r } else { r })
}

impl Polynomial<BigRational> {
    /// Parse with exact rational coefficients (decimals are exact fractions).
    pub fn parse(s: &str) -> Result<Self> {
        let mut coeffs: Vec<BigRational> = Vec::new();
        for (num, power) in parse_terms(s)? {
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigRational::zero());
            }
            coeffs[power] += decimal_to_rational(&num)?;
        }
        Ok(Polynomial::new(coeffs))
    }

    pub fn to_f64(&self) -> Polynomial<f64> {
        self.map(|c| c.to_f64().unwrap_or(f64::NAN))
    }
}

impl Polynomial<f64> {
    /// Parse with double-precision coefficients (correctly rounded decimals).
    pub fn parse(s: &str) -> Result<Self> {
        let mut coeffs: Vec<f64> = Vec::new();
        for (num, power) in parse_terms(s)? {
            if coeffs.len() <= power {
                coeffs.resize(power + 1, 0.0);
            }
            coeffs[power] += num
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad coefficient '{num}'")))?;
        }
        Ok(Polynomial::new(coeffs))
    }
}

fn fmt_terms<T: Scalar>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[T],
    is_one: impl Fn(&T) -> bool,
    is_negative: impl Fn(&T) -> bool,
    write_abs: impl Fn(&mut fmt::Formatter<'_>, &T) -> fmt::Result,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if is_negative(c) {
            write!(f, "-")?;
        } else if !first {
            write!(f, "+")?;
        }
        first = false;
        if k == 0 {
            write_abs(f, c)?;
        } else {
            if !is_one(c) {
                write_abs(f, c)?;
            }
            if k == 1 {
                write!(f, "x")?;
            } else {
                write!(f, "x^{k}")?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial<f64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            &self.coeffs,
            |c| c.abs() == 1.0,
            |c| *c < 0.0,
            |f, c| write!(f, "{}", c.abs()),
        )
    }
}

impl fmt::Display for Polynomial<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            &self.coeffs,
            |c| c.clone().abs().is_one(),
            |c| c < &BigRational::zero(),
            |f, c| write!(f, "{}", c.clone().abs()),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_examples() {
        // x + x^3 at 1
        let p = Polynomial::new(vec![0.0, 1.0, 0.0, 1.0]);
        assert_eq!(p.eval(&1.0), 2.0);
        // zero polynomial
        let z = Polynomial::new(vec![0.0]);
        assert_eq!(z.eval(&3.7), 0.0);
        assert_eq!(z.degree(), None);
        // 2x + x^4 at 2 -> 20
        let p = Polynomial::new(vec![0.0, 2.0, 0.0, 0.0, 1.0]);
        assert_eq!(p.eval(&2.0), 20.0);
    }

    #[test]
    fn degree_trims_trailing_zeros() {
        let p = Polynomial::new(vec![1.0, 0.0, 0.0]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(p.coeffs().len(), 1);
    }

    #[test]
    fn parse_both_forms() {
        let a = Polynomial::<f64>::parse("0,1,0,1").unwrap();
        let b = Polynomial::<f64>::parse("x+x^3").unwrap();
        assert_eq!(a, b);
        let c = Polynomial::<f64>::parse("1+2x^3-x^5").unwrap();
        assert_eq!(c.coeffs(), &[1.0, 0.0, 0.0, 2.0, 0.0, -1.0]);
        let d = Polynomial::<f64>::parse(" - x ^ 2 + 1.5x").unwrap();
        assert_eq!(d.coeffs(), &[0.0, 1.5, -1.0]);
        assert!(Polynomial::<f64>::parse("").is_err());
        assert!(Polynomial::<f64>::parse("x^").is_err());
        assert!(Polynomial::<f64>::parse("2y").is_err());
        assert!(Polynomial::<f64>::parse("1..2").is_err());
    }

    #[test]
    fn parse_exact_decimals() {
        let p = Polynomial::<BigRational>::parse("0.5+0.25x").unwrap();
        assert_eq!(p.coeff(0), BigRational::from_ratio(1, 2));
        assert_eq!(p.coeff(1), BigRational::from_ratio(1, 4));
    }

    #[test]
    fn display_round_trip() {
        for s in ["1+2x^3-x^5", "x", "-x^2", "0,0,3", "2", "0"] {
            let p = Polynomial::<f64>::parse(s).unwrap();
            let shown = format!("{p}");
            let q = Polynomial::<f64>::parse(&shown).unwrap();
            assert_eq!(p, q, "{s} -> {shown}");
        }
    }

    #[test]
    fn div_rem_identity() {
        let p = Polynomial::<BigRational>::parse("1+3x+2x^2+x^5").unwrap();
        let d = Polynomial::<BigRational>::parse("1+x^2").unwrap();
        let (q, r) = p.div_rem(&d).unwrap();
        let back = &(&q * &d) + &r;
        assert_eq!(back, p);
        assert!(r.degree().unwrap_or(0) < d.degree().unwrap());
    }

    #[test]
    fn translate_shifts_argument() {
        let p = Polynomial::<f64>::parse("1+x+x^2").unwrap();
        let q = p.translate(&2.0); // p(x+2)
        for x in [-1.0, 0.0, 0.7, 3.2] {
            assert!((q.eval(&x) - p.eval(&(x + 2.0))).abs() < 1e-12);
        }
    }

    #[test]
    fn parity_helpers() {
        let p = Polynomial::<f64>::parse("x+2x^3").unwrap();
        let g = p.odd_part_in_square().unwrap();
        assert_eq!(g.coeffs(), &[1.0, 2.0]); // x·(1 + 2y) with y = x²
        let e = Polynomial::<f64>::parse("1+x^2+x^4").unwrap();
        let h = e.even_part_in_square().unwrap();
        assert_eq!(h.coeffs(), &[1.0, 1.0, 1.0]);
        assert!(p.even_part_in_square().is_none());
    }
}
