use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::{monomial_name, write_terms, Poly};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sparse bivariate polynomial; the key `(i, j)` stands for `x^i y^j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiPoly<T> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Scalar> Default for BiPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> BiPoly<T> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(T::one(), 0, 0)
    }

    pub fn x() -> Self {
        Self::term(T::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::term(T::one(), 0, 1)
    }

    pub fn constant(c: T) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn term(c: T, i: u32, j: u32) -> Self {
        let mut out = Self::zero();
        out.add_term(i, j, c);
        out
    }

    pub fn from_terms(items: impl IntoIterator<Item = ((u32, u32), T)>) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in items {
            out.add_term(i, j, c);
        }
        out
    }

    /// Embeds a univariate polynomial in `x`.
    pub fn from_x(p: &Poly<T>) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| ((i as u32, 0), c.clone())))
    }

    /// Embeds a univariate polynomial in `y`.
    pub fn from_y(p: &Poly<T>) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(j, c)| ((0, j as u32), c.clone())))
    }

    /// `p(xy)`.
    pub fn from_product_var(p: &Poly<T>) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| ((i as u32, i as u32), c.clone())),
        )
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> T {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn eval(&self, x: &T, y: &T) -> T {
        self.terms.iter().fold(T::zero(), |acc, ((i, j), c)| {
            acc + c.clone() * pow_scalar(x, *i) * pow_scalar(y, *j)
        })
    }

    /// Fixes `y`, leaving a polynomial in `x`.
    pub fn eval_y(&self, y: &T) -> Poly<T> {
        let deg = self.degree_x().map_or(0, |d| d as usize + 1);
        let mut v = vec![T::zero(); deg];
        for ((i, j), c) in &self.terms {
            v[*i as usize] = v[*i as usize].clone() + c.clone() * pow_scalar(y, *j);
        }
        Poly::new(v)
    }

    /// Fixes `x`, leaving a polynomial in `y`.
    pub fn eval_x(&self, x: &T) -> Poly<T> {
        self.swap().eval_y(x)
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|((i, j), c)| ((*j, *i), c.clone())))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, v)| (*k, v.clone() * c.clone())))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `self(xs, ys)` with polynomial substitutions for both variables.
    pub fn compose(&self, xs: &Self, ys: &Self) -> Self {
        let max_i = self.degree_x().unwrap_or(0);
        let max_j = self.degree_y().unwrap_or(0);
        let xp = powers(xs, max_i);
        let yp = powers(ys, max_j);
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            let t = (&xp[*i as usize] * &yp[*j as usize]).scale(c);
            out = out + t;
        }
        out
    }

    /// Exact division by the monomial `x^a y^b`.
    pub fn div_monomial(&self, a: u32, b: u32) -> Result<Self> {
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            if *i < a || *j < b {
                return Err(Error::Precondition(format!(
                    "monomial x^{a} y^{b} does not divide term x^{i} y^{j}"
                )));
            }
            out.add_term(i - a, j - b, c.clone());
        }
        Ok(out)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> BiPoly<U> {
        BiPoly::from_terms(self.terms.iter().map(|(k, v)| (*k, f(v))))
    }
}

impl<T: Scalar> Poly<T> {
    /// `self(inner)` for a bivariate inner polynomial.
    pub fn compose_bi(&self, inner: &BiPoly<T>) -> BiPoly<T> {
        self.coeffs().iter().rev().fold(BiPoly::zero(), |acc, c| {
            &(&acc * inner) + &BiPoly::constant(c.clone())
        })
    }
}

fn powers<T: Scalar>(base: &BiPoly<T>, max: u32) -> Vec<BiPoly<T>> {
    let mut out = vec![BiPoly::one()];
    for k in 1..=max as usize {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}

pub(crate) fn pow_scalar<T: Scalar>(base: &T, e: u32) -> T {
    (0..e).fold(T::one(), |acc, _| acc * base.clone())
}

impl<T: Scalar> Add for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn add(self, rhs: Self) -> BiPoly<T> {
        let mut out = self.clone();
        for ((i, j), c) in &rhs.terms {
            out.add_term(*i, *j, c.clone());
        }
        out
    }
}

impl<T: Scalar> Add for BiPoly<T> {
    type Output = BiPoly<T>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn sub(self, rhs: Self) -> BiPoly<T> {
        let mut out = self.clone();
        for ((i, j), c) in &rhs.terms {
            out.add_term(*i, *j, -c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for BiPoly<T> {
    type Output = BiPoly<T>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Scalar> Neg for BiPoly<T> {
    type Output = BiPoly<T>;
    fn neg(self) -> Self {
        BiPoly::from_terms(self.terms.into_iter().map(|(k, v)| (k, -v)))
    }
}

impl<T: Scalar> Mul for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn mul(self, rhs: Self) -> BiPoly<T> {
        let mut out = BiPoly::zero();
        for ((i1, j1), c1) in &self.terms {
            for ((i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Mul for BiPoly<T> {
    type Output = BiPoly<T>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> fmt::Debug for BiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl<T: Scalar> fmt::Display for BiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ordered = self.terms.iter().rev().map(|((i, j), c)| {
            let xs = monomial_name("x", *i as usize);
            let ys = monomial_name("y", *j as usize);
            let mono = match (xs.is_empty(), ys.is_empty()) {
                (true, _) => ys,
                (_, true) => xs,
                _ => format!("{xs}*{ys}"),
            };
            (c.clone(), mono)
        });
        write_terms(f, ordered)
    }
}

#[cfg(test)]
mod tests {
    use crate::{ZBiPoly, ZPoly};

    #[test]
    fn cycle_tutte_shape_displays() {
        let t = ZBiPoly::x() + ZBiPoly::term(1.into(), 2, 0) + ZBiPoly::y();
        assert_eq!(t.to_string(), "x^2 + x + y");
        assert_eq!(t.eval(&2.into(), &3.into()), 9.into());
    }

    #[test]
    fn compose_binomial_square() {
        let sum = ZBiPoly::x() + ZBiPoly::y();
        let sq = ZPoly::from_ints(&[0, 0, 1]).compose_bi(&sum);
        assert_eq!(sq.coeff(1, 1), 2.into());
        assert_eq!(sq.len(), 3);
    }

    #[test]
    fn monomial_division_checks_exponents() {
        let p = ZBiPoly::term(3.into(), 2, 1);
        assert_eq!(p.div_monomial(1, 1).unwrap(), ZBiPoly::term(3.into(), 1, 0));
        assert!(p.div_monomial(0, 2).is_err());
    }

    #[test]
    fn slices_and_swap() {
        let p = ZBiPoly::from_terms([((1, 0), 1.into()), ((0, 2), 5.into())]);
        assert_eq!(p.eval_y(&1.into()), ZPoly::from_ints(&[5, 1]));
        assert_eq!(p.swap().coeff(2, 0), 5.into());
        assert_eq!(p.eval_x(&0.into()), ZPoly::from_ints(&[0, 0, 5]));
    }
}
