//! Exact real-root counting and isolation with Sturm sequences.

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::scalar::OrderedField;

/// Canonical Sturm sequence `f, f', -rem(f, f'), ...`.
pub fn sturm_chain<T: OrderedField>(f: &Poly<T>) -> Vec<Poly<T>> {
    let mut chain = vec![f.clone()];
    let d = f.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero chain entry");
        if r.is_zero() {
            break;
        }
        chain.push(-r);
    }
    chain
}

fn count_changes<T: OrderedField>(signs: impl Iterator<Item = T>) -> usize {
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for s in signs.filter(|s| !s.is_zero()) {
        let pos = s.is_positive();
        if last.is_some_and(|l| l != pos) {
            changes += 1;
        }
        last = Some(pos);
    }
    changes
}

fn changes_at<T: OrderedField>(chain: &[Poly<T>], x: &T) -> usize {
    count_changes(chain.iter().map(|p| p.eval(x)))
}

/// Sign changes at `+inf` (`positive`) or `-inf`.
fn changes_at_infinity<T: OrderedField>(chain: &[Poly<T>], positive: bool) -> usize {
    count_changes(chain.iter().map(|p| {
        let lead = p.leading().cloned().unwrap_or_else(T::zero);
        let odd = p.degree().unwrap_or(0) % 2 == 1;
        if !positive && odd {
            -lead
        } else {
            lead
        }
    }))
}

/// Interval for [`sturm_real_roots`]; `Between(a, b)` is the half-open `(a, b]`.
#[derive(Debug, Clone, PartialEq)]
pub enum Interval<T> {
    Whole,
    Between(T, T),
}

fn square_free_part<T: OrderedField>(f: &Poly<T>) -> Poly<T> {
    let g = f.gcd(&f.derivative());
    f.exact_div(&g).expect("gcd divides")
}

/// Number of distinct real roots in the interval.
pub fn sturm_real_roots<T: OrderedField>(f: &Poly<T>, interval: &Interval<T>) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let chain = sturm_chain(&square_free_part(f));
    Ok(match interval {
        Interval::Whole => changes_at_infinity(&chain, false) - changes_at_infinity(&chain, true),
        Interval::Between(a, b) => {
            if a >= b {
                0
            } else {
                changes_at(&chain, a) - changes_at(&chain, b)
            }
        }
    })
}

/// True iff every complex root is real, multiplicities included.
pub fn all_roots_real<T: OrderedField>(f: &Poly<T>) -> Result<bool> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    let mut counted = 0;
    for (i, g) in f.square_free_factors().iter().enumerate() {
        counted += (i + 1) * sturm_real_roots(g, &Interval::Whole)?;
    }
    Ok(counted == deg)
}

/// Multiplicity of `r` as a root of `f`, by repeated exact division.
pub fn root_multiplicity_at<T: OrderedField>(f: &Poly<T>, r: &T) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lin = Poly::linear_root(r.clone());
    let mut cur = f.clone();
    let mut m = 0;
    loop {
        let (q, rem) = cur.div_rem(&lin)?;
        if !rem.is_zero() {
            return Ok(m);
        }
        cur = q;
        m += 1;
    }
}

/// Bound exceeding the absolute value of every root.
pub fn cauchy_bound<T: OrderedField>(f: &Poly<T>) -> Result<T> {
    let lead = f.leading().ok_or(Error::ZeroPolynomial)?.abs();
    let max = f
        .coeffs()
        .iter()
        .map(|c| c.abs() / lead.clone())
        .fold(T::zero(), |m, c| if c > m { c } else { m });
    Ok(T::one() + max)
}

/// Disjoint intervals `(a, b]`, each holding exactly one distinct real root,
/// with `b - a <= width`, in increasing order.
pub fn isolate_real_roots<T: OrderedField>(f: &Poly<T>, width: &T) -> Result<Vec<(T, T)>> {
    let sf = square_free_part(f);
    let chain = sturm_chain(&sf);
    let bound = cauchy_bound(&sf)?;
    let two = T::one() + T::one();
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        let n = changes_at(&chain, &a) - changes_at(&chain, &b);
        if n == 0 {
            continue;
        }
        if n == 1 && b.clone() - a.clone() <= *width {
            out.push((a, b));
            continue;
        }
        let mid = (a.clone() + b.clone()) / two.clone();
        stack.push((mid.clone(), b));
        stack.push((a, mid));
    }
    out.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("ordered"));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;
    use crate::QPoly;

    #[test]
    fn quadratic_with_two_roots() {
        let f = QPoly::from_ints(&[3, -4, 1]);
        assert!(all_roots_real(&f).unwrap());
        let n = sturm_real_roots(&f, &Interval::Between(rational(0, 1), rational(4, 1))).unwrap();
        assert_eq!(n, 2);
        assert_eq!(sturm_real_roots(&f, &Interval::Between(rational(1, 1), rational(2, 1))).unwrap(), 0);
    }

    #[test]
    fn complex_pair_is_not_real() {
        let f = QPoly::from_ints(&[1, 4, 7]);
        assert!(!all_roots_real(&f).unwrap());
        assert_eq!(sturm_real_roots(&f, &Interval::Whole).unwrap(), 0);
    }

    #[test]
    fn repeated_roots_do_not_confuse_realness() {
        let f = QPoly::from_ints(&[-1, 1]).pow(2) * QPoly::from_ints(&[2, 1]).pow(3);
        assert!(all_roots_real(&f).unwrap());
        assert_eq!(root_multiplicity_at(&f, &rational(1, 1)).unwrap(), 2);
        assert_eq!(root_multiplicity_at(&f, &rational(-2, 1)).unwrap(), 3);
        assert_eq!(root_multiplicity_at(&f, &rational(0, 1)).unwrap(), 0);
        let g = f * QPoly::from_ints(&[1, 0, 1]);
        assert!(!all_roots_real(&g).unwrap());
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert!(all_roots_real(&QPoly::zero()).is_err());
        assert!(root_multiplicity_at(&QPoly::zero(), &rational(1, 1)).is_err());
    }

    #[test]
    fn isolation_brackets_sqrt_two() {
        let f = QPoly::from_ints(&[-2, 0, 1]);
        let iv = isolate_real_roots(&f, &rational(1, 1000)).unwrap();
        assert_eq!(iv.len(), 2);
        let (a, b) = &iv[1];
        assert!(a * a < rational(2, 1) && b * b >= rational(2, 1));
    }
}
