use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// The highest stored coefficient is always nonzero, so the zero polynomial
/// has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `x - r`
    pub fn linear_root(r: T) -> Self {
        Self::new(vec![-r, T::one()])
    }

    /// Falling factorial `x(x-1)...(x-i+1)`.
    pub fn falling_factorial(i: usize) -> Self {
        (0..i).fold(Self::one(), |acc, j| acc * Self::linear_root(T::from_int(j as i64)))
    }

    /// Rising factorial `x(x+1)...(x+i-1)`.
    pub fn rising_factorial(i: usize) -> Self {
        (0..i).fold(Self::one(), |acc, j| acc * Self::linear_root(-T::from_int(j as i64)))
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    /// Evaluates with coefficients lifted into another ring.
    pub fn eval_in<U: Scalar>(&self, at: &U, lift: impl Fn(&T) -> U) -> U {
        self.coeffs
            .iter()
            .rev()
            .fold(U::zero(), |acc, c| acc * at.clone() + lift(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_int(i as i64))
                .collect(),
        )
    }

    /// `self(inner(x))` by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc * inner.clone() + Self::constant(c.clone()))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out * self.clone();
        }
        out
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Coefficient sequence padded with zeros to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<T> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    /// The substitution `x -> -x`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }
}

impl<T: Field> Poly<T> {
    /// Binomial polynomial `C(x + shift, k)`.
    pub fn binomial(shift: i64, k: usize) -> Self {
        let mut num = Self::one();
        let mut fact = T::one();
        for j in 0..k {
            num = num * Self::linear_root(T::from_int(j as i64 - shift));
            fact = fact * T::from_int(j as i64 + 1);
        }
        num.scale(&(T::one() / fact))
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?.clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i].clone() / dlead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = rem[idx].clone() - c.clone() * dc.clone();
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// The unique polynomial of degree below `points.len()` through the
    /// given points (Newton divided differences). Abscissas must differ.
    pub fn interpolate(points: &[(T, T)]) -> Result<Self> {
        let mut table: Vec<T> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..points.len() {
            for i in (level..points.len()).rev() {
                let dx = points[i].0.clone() - points[i - level].0.clone();
                if dx.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                table[i] = (table[i].clone() - table[i - 1].clone()) / dx;
            }
        }
        let mut out = Self::zero();
        for i in (0..points.len()).rev() {
            out = out * Self::linear_root(points[i].0.clone()) + Self::constant(table[i].clone());
        }
        Ok(out)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&(T::one() / l.clone())),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Exact quotient; errors if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Precondition("polynomial division is not exact".into()));
        }
        Ok(q)
    }

    /// Yun's square-free decomposition: `self = c * prod_i factors[i]^(i+1)`
    /// with pairwise coprime square-free monic factors.
    pub fn square_free_factors(&self) -> Vec<Self> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.exact_div(&a).expect("gcd divides");
        let mut c = df.exact_div(&a).expect("gcd divides derivative");
        let mut out = Vec::new();
        loop {
            let d = c - b.derivative();
            if b.degree() == Some(0) {
                break;
            }
            let g = b.gcd(&d);
            out.push(g.clone());
            b = b.exact_div(&g).expect("gcd divides");
            c = d.exact_div(&g).expect("gcd divides");
            a = a.exact_div(&g).unwrap_or(a);
        }
        while out.last().is_some_and(|g| g.degree() == Some(0)) {
            out.pop();
        }
        out
    }
}

impl<T: Scalar> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Poly<T> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<T: Scalar> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> AddAssign for Poly<T> {
    fn add_assign(&mut self, rhs: Self) {
        *self = &*self + &rhs;
    }
}

impl<T: Scalar> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> SubAssign for Poly<T> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = &*self - &rhs;
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Self {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
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
        Poly::new(out)
    }
}

impl<T: Scalar> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Conventional notation, highest power first: `x^3 - 6x^2 + 11x - 6`.
impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c.clone(), monomial_name("x", i))),
        )
    }
}

pub(crate) fn monomial_name(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

/// Shared by univariate and bivariate display.
pub(crate) fn write_terms<T: Scalar>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (T, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let unit = mag == "1";
        match (mono.is_empty(), unit) {
            (true, _) => write!(f, "{mag}")?,
            (false, true) => write!(f, "{mono}")?,
            (false, false) if mag.contains('/') => write!(f, "({mag}){mono}")?,
            (false, false) => write!(f, "{mag}{mono}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use crate::{QPoly, ZPoly};
    use crate::scalar::rational;

    #[test]
    fn product_of_linear_factors() {
        let p = ZPoly::linear_root(1.into()) * ZPoly::linear_root(3.into());
        assert_eq!(p, ZPoly::from_ints(&[3, -4, 1]));
        assert_eq!(p.eval(&2.into()), (-1).into());
    }

    #[test]
    fn derivative_of_cube() {
        assert_eq!(ZPoly::monomial(1.into(), 3).derivative(), ZPoly::from_ints(&[0, 0, 3]));
    }

    #[test]
    fn display_matches_conventional_notation() {
        let p = ZPoly::from_ints(&[-6, 11, -6, 1]);
        assert_eq!(p.to_string(), "x^3 - 6x^2 + 11x - 6");
        assert_eq!(ZPoly::zero().to_string(), "0");
        let q = QPoly::new(vec![rational(0, 1), rational(-3, 2)]);
        assert_eq!(q.to_string(), "-(3/2)x");
    }

    #[test]
    fn division_and_gcd() {
        let a = QPoly::from_ints(&[3, -4, 1]);
        let b = QPoly::from_ints(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, QPoly::from_ints(&[-3, 1]));
        assert!(r.is_zero());
        let g = a.gcd(&QPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(g, b);
        assert!(a.div_rem(&QPoly::zero()).is_err());
    }

    #[test]
    fn square_free_decomposition_of_repeated_roots() {
        // (x-1)^2 (x+2)^3 x
        let f = QPoly::from_ints(&[-1, 1]).pow(2) * QPoly::from_ints(&[2, 1]).pow(3) * QPoly::x();
        let parts = f.square_free_factors();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], QPoly::x());
        assert_eq!(parts[1], QPoly::from_ints(&[-1, 1]));
        assert_eq!(parts[2], QPoly::from_ints(&[2, 1]));
    }

    #[test]
    fn binomial_polynomial_values() {
        let b = QPoly::binomial(2, 3);
        assert_eq!(b.eval(&rational(4, 1)), rational(20, 1));
        assert_eq!(b.eval(&rational(-2, 1)), rational(0, 1));
    }

    #[test]
    fn compose_and_reflect() {
        let p = ZPoly::from_ints(&[1, 2, 1]);
        let shifted = p.compose(&ZPoly::from_ints(&[-1, 1]));
        assert_eq!(shifted, ZPoly::from_ints(&[0, 0, 1]));
        assert_eq!(ZPoly::from_ints(&[1, 1, 1]).reflect(), ZPoly::from_ints(&[1, -1, 1]));
    }
}
