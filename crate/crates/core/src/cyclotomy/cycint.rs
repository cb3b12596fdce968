//! Exact elements of `Z[zeta_p]`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// `sum coeffs[t] * zeta_p^t` over the basis `1, zeta, ..., zeta^(p-2)`.
///
/// The basis makes the representation canonical, so equality is
/// coefficient-wise and rationality is a syntactic check.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    p: u32,
    coeffs: Vec<i128>,
}

impl CycInt {
    pub fn zero(p: u32) -> CycInt {
        CycInt {
            p,
            coeffs: vec![0; (p - 1) as usize],
        }
    }

    pub fn from_int(p: u32, v: i128) -> CycInt {
        let mut z = CycInt::zero(p);
        z.coeffs[0] = v;
        z
    }

    pub fn one(p: u32) -> CycInt {
        CycInt::from_int(p, 1)
    }

    /// `zeta_p^t` for any integer `t`.
    pub fn zeta_pow(p: u32, t: i64) -> CycInt {
        let mut counts = vec![0i128; p as usize];
        counts[t.rem_euclid(p as i64) as usize] = 1;
        CycInt::from_exponent_counts(p, counts)
    }

    /// `sum counts[t] * zeta^t` for `t` in `[0, p)`, reduced to canonical form.
    pub fn from_exponent_counts(p: u32, mut counts: Vec<i128>) -> CycInt {
        assert_eq!(counts.len(), p as usize, "need one count per power of zeta");
        let top = counts.pop().unwrap_or(0);
        for c in counts.iter_mut() {
            *c -= top;
        }
        CycInt { p, coeffs: counts }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn to_integer(&self) -> Option<i128> {
        self.is_rational().then_some(self.coeffs[0])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Nonzero `(power, coefficient)` pairs in the canonical basis.
    pub fn terms(&self) -> Vec<(usize, i128)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(t, &c)| (t, c))
            .collect()
    }

    pub fn scale(&self, k: i128) -> CycInt {
        CycInt {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    fn check_same_ring(&self, other: &CycInt) {
        assert_eq!(self.p, other.p, "mixing Z[zeta_p] for different p");
    }
}

/// A sum of products held as unreduced exponent counts and reduced once.
#[derive(Clone, Debug)]
pub struct ProductSum {
    p: u32,
    counts: Vec<i128>,
}

impl ProductSum {
    pub fn new(p: u32) -> ProductSum {
        ProductSum {
            p,
            counts: vec![0; p as usize],
        }
    }

    /// Adds `a * b`.
    pub fn add_product(&mut self, a: &CycInt, b: &CycInt) {
        a.check_same_ring(b);
        assert_eq!(a.p, self.p, "mixing Z[zeta_p] for different p");
        if let Some(k) = a.to_integer() {
            return self.add_scaled(b, k);
        }
        if let Some(k) = b.to_integer() {
            return self.add_scaled(a, k);
        }
        self.add_terms_product(&a.terms(), &b.terms());
    }

    /// Adds the product of two elements given by their [`CycInt::terms`].
    pub fn add_terms_product(&mut self, a: &[(usize, i128)], b: &[(usize, i128)]) {
        let p = self.p as usize;
        for &(i, x) in a {
            for &(j, y) in b {
                let t = if i + j >= p { i + j - p } else { i + j };
                self.counts[t] += x * y;
            }
        }
    }

    fn add_scaled(&mut self, x: &CycInt, k: i128) {
        for (c, &v) in self.counts.iter_mut().zip(&x.coeffs) {
            *c += k * v;
        }
    }

    pub fn finish(self) -> CycInt {
        CycInt::from_exponent_counts(self.p, self.counts)
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(v) => write!(f, "{v}"),
            None => {
                let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

impl Add<&CycInt> for &CycInt {
    type Output = CycInt;

    fn add(self, rhs: &CycInt) -> CycInt {
        self.check_same_ring(rhs);
        CycInt {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Add for CycInt {
    type Output = CycInt;

    fn add(self, rhs: CycInt) -> CycInt {
        &self + &rhs
    }
}

impl AddAssign<&CycInt> for CycInt {
    fn add_assign(&mut self, rhs: &CycInt) {
        self.check_same_ring(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Neg for &CycInt {
    type Output = CycInt;

    fn neg(self) -> CycInt {
        self.scale(-1)
    }
}

impl Sub<&CycInt> for &CycInt {
    type Output = CycInt;

    fn sub(self, rhs: &CycInt) -> CycInt {
        self + &(-rhs)
    }
}

impl Sub for CycInt {
    type Output = CycInt;

    fn sub(self, rhs: CycInt) -> CycInt {
        &self - &rhs
    }
}

impl Mul<&CycInt> for &CycInt {
    type Output = CycInt;

    fn mul(self, rhs: &CycInt) -> CycInt {
        self.check_same_ring(rhs);
        let p = self.p as usize;
        if self.is_rational() {
            return rhs.scale(self.coeffs[0]);
        }
        if rhs.is_rational() {
            return self.scale(rhs.coeffs[0]);
        }
        // cyclic convolution mod zeta^p = 1, then reduce
        let mut counts = vec![0i128; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                counts[(i + j) % p] += a * b;
            }
        }
        CycInt::from_exponent_counts(self.p, counts)
    }
}

impl Mul for CycInt {
    type Output = CycInt;

    fn mul(self, rhs: CycInt) -> CycInt {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zeta_relations() {
        for p in [2u32, 3, 5, 7] {
            let z = CycInt::zeta_pow(p, 1);
            let mut acc = CycInt::one(p);
            let mut sum = CycInt::zero(p);
            for _ in 0..p {
                sum += &acc;
                acc = &acc * &z;
            }
            // zeta^p = 1 and 1 + zeta + ... + zeta^(p-1) = 0
            assert_eq!(acc, CycInt::one(p));
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn binary_case_is_signs() {
        assert_eq!(CycInt::zeta_pow(2, 1).to_integer(), Some(-1));
        assert_eq!(CycInt::zeta_pow(2, 4).to_integer(), Some(1));
    }

    #[test]
    fn rationality() {
        let z = CycInt::zeta_pow(5, 2);
        assert!(!z.is_rational());
        assert_eq!(z.to_integer(), None);
        // zeta + zeta^2 + zeta^3 + zeta^4 = -1
        let s = (1..5).fold(CycInt::zero(5), |acc, t| acc + CycInt::zeta_pow(5, t));
        assert_eq!(s.to_integer(), Some(-1));
        assert_eq!(format!("{s}"), "-1");
        assert_eq!(format!("{z}"), "[0, 0, 1, 0]");
    }

    fn cyc(p: u32) -> impl Strategy<Value = CycInt> {
        proptest::collection::vec(-20i128..20, p as usize)
            .prop_map(move |c| CycInt::from_exponent_counts(p, c))
    }

    proptest! {
        #[test]
        fn product_sum_matches_ring_ops(pairs in prop::collection::vec((cyc(7), cyc(7)), 0..6)) {
            let mut acc = ProductSum::new(7);
            let mut expected = CycInt::zero(7);
            for (a, b) in &pairs {
                acc.add_product(a, b);
                expected += &(a * b);
            }
            prop_assert_eq!(acc.finish(), expected);
        }

        #[test]
        fn distributive((x, y, z) in (cyc(7), cyc(7), cyc(7))) {
            prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        }

        #[test]
        fn commutative_and_associative((x, y, z) in (cyc(5), cyc(5), cyc(5))) {
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&(&x - &y) + &y, x);
        }
    }
}
