//! Dense polynomials in an auxiliary variable `v` whose coefficients are
//! Laurent polynomials in `t`.

use super::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyV {
    coeffs: Vec<LaurentPoly>,
}

impl PolyV {
    pub fn new(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![LaurentPoly::one()])
    }

    /// `1 + v + ... + v^{k-1}`.
    pub fn v_bracket(k: usize) -> Self {
        Self::new(vec![LaurentPoly::one(); k])
    }

    /// Coefficient of `v^i`; zero past the end.
    pub fn coeff(&self, i: usize) -> LaurentPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// Highest power present, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul_truncated(&self, rhs: &Self, truncate_at: Option<usize>) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::default();
        }
        let mut len = self.coeffs.len() + rhs.coeffs.len() - 1;
        if let Some(d) = truncate_at {
            len = len.min(d + 1);
        }
        let mut out = vec![LaurentPoly::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

/// Product of all factors, dropping powers of `v` above `truncate_at`.
pub fn polyv_product(factors: &[PolyV], truncate_at: Option<usize>) -> PolyV {
    let mut acc = PolyV::one();
    for f in factors {
        acc = acc.mul_truncated(f, truncate_at);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(i: i64) -> LaurentPoly {
        LaurentPoly::constant(i)
    }

    #[test]
    fn square_of_one_plus_v() {
        let f = PolyV::new(vec![c(1), c(1)]);
        assert_eq!(polyv_product(&[f.clone(), f.clone()], None), PolyV::new(vec![c(1), c(2), c(1)]));
        assert_eq!(polyv_product(&[f.clone(), f], Some(1)), PolyV::new(vec![c(1), c(2)]));
    }

    #[test]
    fn t_inverse_factor() {
        let a = PolyV::new(vec![c(1), LaurentPoly::monomial(-1, -1)]);
        let b = PolyV::new(vec![c(1), c(1)]);
        let p = polyv_product(&[a, b], None);
        let expected = PolyV::new(vec![
            c(1),
            LaurentPoly::from_terms([(0, 1), (-1, -1)]),
            LaurentPoly::monomial(-1, -1),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(polyv_product(&[], None), PolyV::one());
        assert_eq!(polyv_product(&[], Some(0)), PolyV::one());
    }
}
