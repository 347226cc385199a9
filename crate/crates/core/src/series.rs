//! Truncated power series with integer coefficients (Hilbert series).

/// Coefficients of a power series in `t` up to and including `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub coeffs: Vec<i128>,
}

impl Series {
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![0; order + 1];
        coeffs[0] = 1;
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn mul(&self, o: &Series) -> Series {
        let n = self.order().min(o.order());
        let mut c = vec![0i128; n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n + 1 - i) {
                c[i + j] += a * b;
            }
        }
        Series { coeffs: c }
    }

    /// Multiplies by `1 - t^k`.
    pub fn times_one_minus(&self, k: usize) -> Series {
        let mut c = self.coeffs.clone();
        for i in (k..c.len()).rev() {
            c[i] -= self.coeffs[i - k];
        }
        Series { coeffs: c }
    }

    /// Divides by `1 - t^k` (multiplies by the geometric series).
    pub fn over_one_minus(&self, k: usize) -> Series {
        assert!(k > 0);
        let mut c = self.coeffs.clone();
        for i in k..c.len() {
            c[i] += c[i - k];
        }
        Series { coeffs: c }
    }

    /// `1 / prod (1 - t^d)` over the given degrees.
    pub fn free_commutative(degrees: &[usize], order: usize) -> Series {
        degrees
            .iter()
            .fold(Series::one(order), |s, &d| s.over_one_minus(d))
    }
}

/// Bivariate series truncated at total degree `order`: `coeffs[a][b]` is the
/// coefficient of `t1^a t2^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series2 {
    pub coeffs: Vec<Vec<i128>>,
    order: usize,
}

impl Series2 {
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![vec![0; order + 1]; order + 1];
        coeffs[0][0] = 1;
        Series2 { coeffs, order }
    }

    /// Multiplies by `1 - t1^a t2^b`.
    pub fn times_one_minus(&self, a: usize, b: usize) -> Self {
        let mut r = self.clone();
        for i in a..=self.order {
            for j in b..=self.order - i {
                r.coeffs[i][j] -= self.coeffs[i - a][j - b];
            }
        }
        r
    }

    /// Divides by `1 - t1^a t2^b`.
    pub fn over_one_minus(&self, a: usize, b: usize) -> Self {
        assert!(a + b > 0);
        let mut r = self.clone();
        for i in a..=self.order {
            for j in b..=self.order - i {
                let v = r.coeffs[i - a][j - b];
                r.coeffs[i][j] += v;
            }
        }
        r
    }

    /// Specialisation `t1 = t2 = t`.
    pub fn diagonal(&self) -> Series {
        let mut c = vec![0; self.order + 1];
        for i in 0..=self.order {
            for j in 0..=self.order - i {
                c[i + j] += self.coeffs[i][j];
            }
        }
        Series { coeffs: c }
    }
}

/// Hilbert series of the diagonal centraliser of sl(3) in two copies, by
/// bidegree.
pub fn centraliser_bigraded(order: usize) -> Series2 {
    let dens = [
        (2, 0),
        (1, 1),
        (0, 2),
        (3, 0),
        (2, 1),
        (1, 2),
        (0, 3),
        (2, 2),
        (3, 3),
    ];
    dens.iter()
        .fold(Series2::one(order).times_one_minus(6, 6), |s, &(a, b)| {
            s.over_one_minus(a, b)
        })
}

/// The single-variable series `(1 - t^12) / ((1-t^2)^3 (1-t^3)^4 (1-t^4)(1-t^6))`.
pub fn presentation_series(order: usize) -> Series {
    Series::free_commutative(&[2, 2, 2, 3, 3, 3, 3, 4, 6], order).times_one_minus(12)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric() {
        let s = Series::free_commutative(&[3, 4, 6], 12);
        assert_eq!(s.coeffs[7], 1);
        assert_eq!(s.coeffs[12], 4);
        assert_eq!(
            s.times_one_minus(3).times_one_minus(4).times_one_minus(6),
            Series::one(12)
        );
    }

    #[test]
    fn low_degrees() {
        let s = centraliser_bigraded(24).diagonal();
        assert_eq!(&s.coeffs[..4], &[1, 0, 3, 4]);
    }
}
