//! Sparse multivariate polynomials over [`Scalar`].
//!
//! Used to expand and compare algebraic identities exactly (reciprocal
//! product identities, the regulus determinant, expression families).
//! Degrees stay tiny here, so a `BTreeMap` keyed by exponent vectors is
//! plenty.

use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in `nvars` variables with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, Scalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars);
        let mut exps = vec![0u16; nvars];
        exps[idx] = 1;
        let mut p = MultiPoly::zero(nvars);
        p.terms.insert(exps, Scalar::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    fn insert_term(&mut self, exps: Vec<u16>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = &*e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, o.nvars);
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c);
        }
        out
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, o.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let exps: Vec<u16> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let sc = c * s;
            if !sc.is_zero() {
                out.terms.insert(e.clone(), sc);
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(self.nvars, Scalar::one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Re-embed into a wider variable space, shifting variable indices.
    pub fn embed(&self, nvars: usize, offset: usize) -> MultiPoly {
        assert!(self.nvars + offset <= nvars);
        let mut out = MultiPoly::zero(nvars);
        for (e, c) in &self.terms {
            let mut exps = vec![0u16; nvars];
            exps[offset..offset + self.nvars].copy_from_slice(e);
            out.terms.insert(exps, c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        let mut total = Scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = &t * &x.pow(k as u32);
                }
            }
            total += t;
        }
        total
    }

    /// Coefficient of a monomial given as `(var, exponent)` pairs.
    pub fn coeff(&self, monomial: &[(usize, u16)]) -> Scalar {
        let mut exps = vec![0u16; self.nvars];
        for &(v, k) in monomial {
            exps[v] = k;
        }
        self.terms.get(&exps).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Scalar)> {
        self.terms.iter()
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &k) in e.iter().enumerate() {
                if k == 1 {
                    write!(f, "*x{i}")?;
                } else if k > 1 {
                    write!(f, "*x{i}^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(4, i)
    }

    #[test]
    fn ring_identities() {
        let a = x(0).add(&x(1));
        let b = x(2).sub(&MultiPoly::constant(4, Scalar::from_int(3)));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.sub(&a), MultiPoly::zero(4));
        // (x0 + x1)^2 = x0^2 + 2 x0 x1 + x1^2
        let sq = a.pow(2);
        assert_eq!(sq.coeff(&[(0, 2)]), Scalar::from_int(1));
        assert_eq!(sq.coeff(&[(0, 1), (1, 1)]), Scalar::from_int(2));
    }

    #[test]
    fn eval_matches_expansion() {
        let p = x(0).mul(&x(2)).sub(&x(1).mul(&x(3)));
        let pt = [
            Scalar::from_int(2),
            Scalar::from_int(3),
            Scalar::ratio(1, 2),
            Scalar::from_int(1),
        ];
        assert_eq!(p.eval(&pt), Scalar::from_int(-2));
    }

    #[test]
    fn embed_shifts_vars() {
        let p = MultiPoly::var(2, 0).mul(&MultiPoly::var(2, 1));
        let q = p.embed(4, 2);
        assert_eq!(q.coeff(&[(2, 1), (3, 1)]), Scalar::one());
    }
}
