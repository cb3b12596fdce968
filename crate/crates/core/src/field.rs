//! Small finite fields GF(p^(s*m)) in discrete-log representation.
//!
//! Nonzero elements are stored as their logarithm to the base of a fixed
//! primitive element `alpha`; addition goes through a Zech logarithm table.
//! The subfield GF(q), q = p^s, lives inside the big field as
//! `<alpha^((r-1)/(q-1))> + {0}`.

use std::fmt;

use crate::arith::{checked_pow, is_prime, prime_factors};
use crate::error::{internal, Error, Result};
use crate::poly;

/// Largest supported field is `2^MAX_FIELD_LOG2` elements.
pub const MAX_FIELD_LOG2: u32 = 22;

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElement {
    Zero,
    /// `alpha^e` with `e` in `[0, r-2]`.
    Log(u32),
}

impl FieldElement {
    pub fn is_zero(self) -> bool {
        self == FieldElement::Zero
    }

    pub fn log(self) -> Option<u32> {
        match self {
            FieldElement::Zero => None,
            FieldElement::Log(e) => Some(e),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Zero => write!(f, "0"),
            FieldElement::Log(e) => write!(f, "a^{e}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceTarget {
    /// Trace down to GF(q).
    Subfield,
    /// Absolute trace down to GF(p).
    Prime,
}

/// A constructed field `GF(r)`, `r = q^m`, `q = p^s`.
///
/// Immutable after construction.
#[derive(Clone)]
pub struct Field {
    p: u64,
    s: u32,
    m: u32,
    q: u64,
    r: u64,
    modulus: Vec<u64>,
    alpha: Vec<u64>,
    // log -> base-p packed polynomial
    exp: Vec<u32>,
    // packed -> log, NONE at 0
    log: Vec<u32>,
    zech: Vec<u32>,
    // log -> Tr_{r/p} as an integer in [0, p)
    trace_prime: Vec<u32>,
    // log -> log of Tr_{r/q}, NONE when the trace vanishes
    trace_sub: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("s", &self.s)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("alpha", &self.alpha)
            .finish()
    }
}

impl Field {
    /// Builds `GF(p^(s*m))` with the smallest monic irreducible modulus and the
    /// smallest primitive element, both in base-p packed order.
    pub fn new(p: u64, s: u32, m: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 || m == 0 {
            return Err(Error::InvalidParameter("s and m must be positive".into()));
        }
        let degree = s
            .checked_mul(m)
            .ok_or_else(|| Error::InvalidParameter("degree overflow".into()))?;
        let too_large = Error::FieldTooLarge {
            p,
            degree,
            max_log2: MAX_FIELD_LOG2,
        };
        let r = checked_pow(p, degree).ok_or(too_large.clone())?;
        if r > 1 << MAX_FIELD_LOG2 {
            return Err(too_large);
        }
        let q = p.pow(s);
        let d = degree as usize;

        let modulus = (0..r)
            .map(|v| {
                let mut f = poly::unpack(v, p, d);
                f.push(1);
                f
            })
            .find(|f| poly::is_irreducible(f, p))
            .ok_or_else(|| internal("no irreducible polynomial found"))?;

        let order = r - 1;
        let cofactors: Vec<u64> = prime_factors(order).into_iter().map(|l| order / l).collect();
        let alpha = (1..r)
            .map(|v| poly::trim(poly::unpack(v, p, d)))
            .find(|g| {
                cofactors
                    .iter()
                    .all(|&c| poly::pow_mod_poly(g, c as u128, &modulus, p) != vec![1])
            })
            .ok_or_else(|| internal("no primitive element found"))?;

        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![NONE; r as usize];
        let mut cur: Vec<u64> = vec![1];
        for e in 0..order {
            let packed = poly::pack(&cur, p) as usize;
            if log[packed] != NONE {
                return Err(internal("alpha is not primitive"));
            }
            log[packed] = e as u32;
            exp.push(packed as u32);
            cur = poly::mul_mod(&cur, &alpha, &modulus, p);
        }

        let zech = exp
            .iter()
            .map(|&packed| {
                // adding 1 only touches the constant digit
                let c0 = packed as u64 % p;
                let bumped = packed as u64 - c0 + (c0 + 1) % p;
                if bumped == 0 {
                    NONE
                } else {
                    log[bumped as usize]
                }
            })
            .collect();

        let mut field = Field {
            p,
            s,
            m,
            q,
            r,
            modulus,
            alpha,
            exp,
            log,
            zech,
            trace_prime: Vec::new(),
            trace_sub: Vec::new(),
        };
        let trace_sub: Vec<u32> = (0..order as u32)
            .map(|e| match field.power_sum(FieldElement::Log(e), q, m) {
                FieldElement::Zero => NONE,
                FieldElement::Log(t) => t,
            })
            .collect();
        let trace_prime: Vec<u32> = (0..order as u32)
            .map(|e| field.packed(field.power_sum(FieldElement::Log(e), p, degree)) as u32)
            .collect();
        if trace_prime.iter().any(|&t| t as u64 >= p) {
            return Err(internal("absolute trace left the prime field"));
        }
        field.trace_sub = trace_sub;
        field.trace_prime = trace_prime;
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// `r - 1`, the order of the multiplicative group.
    pub fn group_order(&self) -> u64 {
        self.r - 1
    }

    /// `(r-1)/(q-1)`; `alpha` to this power generates `GF(q)*`.
    pub fn subfield_generator_exponent(&self) -> u64 {
        (self.r - 1) / (self.q - 1)
    }

    /// Monic modulus, lowest coefficient first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Polynomial form of the primitive element, lowest coefficient first.
    pub fn alpha_poly(&self) -> &[u64] {
        &self.alpha
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::Zero
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::Log(0)
    }

    pub fn alpha(&self) -> FieldElement {
        self.element(1)
    }

    /// `alpha^e`, reducing `e` modulo `r - 1`.
    pub fn element(&self, e: i64) -> FieldElement {
        FieldElement::Log(e.rem_euclid(self.group_order() as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        std::iter::once(FieldElement::Zero).chain(self.nonzero_elements())
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.group_order() as u32).map(FieldElement::Log)
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        match (x, y) {
            (FieldElement::Log(a), FieldElement::Log(b)) => {
                FieldElement::Log(((a as u64 + b as u64) % self.group_order()) as u32)
            }
            _ => FieldElement::Zero,
        }
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        match (x, y) {
            (FieldElement::Zero, v) | (v, FieldElement::Zero) => v,
            (FieldElement::Log(a), FieldElement::Log(b)) => {
                let n = self.group_order();
                let diff = (b as u64 + n - a as u64) % n;
                match self.zech[diff as usize] {
                    NONE => FieldElement::Zero,
                    z => FieldElement::Log(((a as u64 + z as u64) % n) as u32),
                }
            }
        }
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        match x {
            FieldElement::Zero => FieldElement::Zero,
            FieldElement::Log(_) if self.p == 2 => x,
            FieldElement::Log(_) => self.mul(x, self.element((self.group_order() / 2) as i64)),
        }
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    /// `x^k` for any integer `k`; `0^k` is `0` for `k > 0` and `1` for `k = 0`.
    /// Negative powers of zero are a domain error.
    pub fn pow(&self, x: FieldElement, k: i64) -> Result<FieldElement> {
        match x {
            FieldElement::Zero if k == 0 => Ok(self.one()),
            FieldElement::Zero if k > 0 => Ok(FieldElement::Zero),
            FieldElement::Zero => Err(Error::Domain("negative power of zero".into())),
            FieldElement::Log(e) => {
                let n = self.group_order() as i128;
                let t = (e as i128 * k as i128).rem_euclid(n);
                Ok(FieldElement::Log(t as u32))
            }
        }
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        self.pow(x, -1)
            .map_err(|_| Error::Domain("zero has no inverse".into()))
    }

    pub fn dlog(&self, x: FieldElement) -> Result<u64> {
        x.log()
            .map(u64::from)
            .ok_or_else(|| Error::Domain("discrete log of zero".into()))
    }

    /// Multiplicative order, `(r-1)/gcd(r-1, dlog x)`.
    pub fn order(&self, x: FieldElement) -> Result<u64> {
        let e = self.dlog(x)?;
        let n = self.group_order();
        Ok(n / crate::arith::gcd(n, e))
    }

    /// Base-p packed polynomial form (`sum c_i p^i`).
    pub fn packed(&self, x: FieldElement) -> u64 {
        match x {
            FieldElement::Zero => 0,
            FieldElement::Log(e) => self.exp[e as usize] as u64,
        }
    }

    pub fn from_packed(&self, v: u64) -> Result<FieldElement> {
        if v >= self.r {
            return Err(Error::Domain(format!("{v} is not a packed element of GF({})", self.r)));
        }
        Ok(match self.log[v as usize] {
            NONE => FieldElement::Zero,
            e => FieldElement::Log(e),
        })
    }

    /// Coefficients of `x` as a polynomial in the modulus' root, lowest first.
    pub fn to_poly(&self, x: FieldElement) -> Vec<u64> {
        poly::unpack(self.packed(x), self.p, (self.s * self.m) as usize)
    }

    pub fn from_poly(&self, coeffs: &[u64]) -> Result<FieldElement> {
        let reduced = poly::rem(
            &coeffs.iter().map(|c| c % self.p).collect::<Vec<_>>(),
            &self.modulus,
            self.p,
        );
        self.from_packed(poly::pack(&reduced, self.p))
    }

    /// `x + x^b + x^(b^2) + ... + x^(b^(terms-1))`.
    fn power_sum(&self, x: FieldElement, base: u64, terms: u32) -> FieldElement {
        let FieldElement::Log(e) = x else {
            return FieldElement::Zero;
        };
        let n = self.group_order();
        let mut acc = FieldElement::Zero;
        let mut t = e as u64;
        for _ in 0..terms {
            acc = self.add(acc, FieldElement::Log(t as u32));
            t = (t as u128 * base as u128 % n as u128) as u64;
        }
        acc
    }

    /// Trace computed from its definition as a sum of conjugates.
    pub fn trace(&self, x: FieldElement, target: TraceTarget) -> FieldElement {
        match target {
            TraceTarget::Subfield => self.power_sum(x, self.q, self.m),
            TraceTarget::Prime => self.power_sum(x, self.p, self.s * self.m),
        }
    }

    /// Tabulated `Tr_{r/q}(x)`.
    pub fn trace_to_subfield(&self, x: FieldElement) -> FieldElement {
        match x {
            FieldElement::Zero => FieldElement::Zero,
            FieldElement::Log(e) => match self.trace_sub[e as usize] {
                NONE => FieldElement::Zero,
                t => FieldElement::Log(t),
            },
        }
    }

    /// Tabulated `Tr_{r/p}(x)` as an integer in `[0, p)`.
    pub fn trace_to_prime(&self, x: FieldElement) -> u32 {
        match x {
            FieldElement::Zero => 0,
            FieldElement::Log(e) => self.trace_prime[e as usize],
        }
    }

    /// `Tr_{q/p}(y)` as an integer in `[0, p)`; `y` must lie in `GF(q)`.
    pub fn subfield_trace_to_prime(&self, y: FieldElement) -> Result<u32> {
        if !self.in_subfield(y) {
            return Err(Error::Domain(format!("{y} is not in GF({})", self.q)));
        }
        let t = self.power_sum(y, self.p, self.s);
        Ok(self.packed(t) as u32)
    }

    pub fn in_subfield(&self, x: FieldElement) -> bool {
        match x {
            FieldElement::Zero => true,
            FieldElement::Log(e) => (e as u64).is_multiple_of(self.subfield_generator_exponent()),
        }
    }

    /// Table of `Tr_{r/p}` indexed by logarithm, for hot loops.
    pub(crate) fn trace_prime_table(&self) -> &[u32] {
        &self.trace_prime
    }

    /// Table of `Tr_{r/q}` packed values indexed by logarithm.
    pub(crate) fn trace_sub_packed_table(&self) -> Vec<u32> {
        self.trace_sub
            .iter()
            .map(|&t| if t == NONE { 0 } else { self.exp[t as usize] })
            .collect()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}) = GF({}^{}) over GF({}), modulus {}, alpha = {}",
            self.r,
            self.q,
            self.m,
            self.q,
            render_poly(&self.modulus),
            render_poly(&self.alpha)
        )
    }
}

/// Renders a coefficient vector (lowest first) as `x^4+x+1`.
pub fn render_poly(coeffs: &[u64]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".to_string(),
            (1, c) => format!("{c}x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::sync::OnceLock;

    fn gf16() -> &'static Field {
        static F: OnceLock<Field> = OnceLock::new();
        F.get_or_init(|| Field::new(2, 2, 2).unwrap())
    }

    fn gf81() -> &'static Field {
        static F: OnceLock<Field> = OnceLock::new();
        F.get_or_init(|| Field::new(3, 2, 2).unwrap())
    }

    #[test]
    fn construction_examples() {
        let f = Field::new(2, 1, 4).unwrap();
        assert_eq!(f.r(), 16);
        assert_eq!(f.order(f.alpha()).unwrap(), 15);
        assert_eq!(f.modulus(), &[1, 1, 0, 0, 1]);

        let g = gf16();
        assert_eq!(g.r(), 16);
        assert_eq!(g.q(), 4);
        assert_eq!(g.subfield_generator_exponent(), 5);

        let h = gf81();
        assert_eq!(h.r(), 81);
        assert_eq!(h.subfield_generator_exponent(), 10);
        assert_eq!(h.order(h.alpha()).unwrap(), 80);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(4, 1, 2).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            Field::new(2, 1, 23),
            Err(Error::FieldTooLarge { .. })
        ));
        assert!(Field::new(2, 0, 3).is_err());
    }

    #[test]
    fn deterministic() {
        let a = Field::new(3, 1, 3).unwrap();
        let b = Field::new(3, 1, 3).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.alpha_poly(), b.alpha_poly());
    }

    #[test]
    fn prime_field_has_linear_modulus() {
        let f = Field::new(7, 1, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        // 3 is the least primitive root mod 7
        assert_eq!(f.alpha_poly(), &[3]);
        let g = Field::new(2, 1, 1).unwrap();
        assert_eq!(g.alpha(), g.one());
    }

    #[test]
    fn basic_ops() {
        let f = gf16();
        let x = f.element(7);
        assert_eq!(f.mul(FieldElement::Zero, x), FieldElement::Zero);
        assert_eq!(f.add(x, x), FieldElement::Zero);
        assert_eq!(f.pow(f.alpha(), 15).unwrap(), f.one());
        assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
        assert!(matches!(f.inv(FieldElement::Zero), Err(Error::Domain(_))));
        assert!(f.dlog(FieldElement::Zero).is_err());
        assert_eq!(f.dlog(f.one()).unwrap(), 0);
        // order(alpha^N1) = n1 when r-1 = n1 N1
        assert_eq!(f.order(f.element(3)).unwrap(), 5);
        assert_eq!(f.order(f.element(5)).unwrap(), 3);

        let h = gf81();
        let y = h.element(11);
        assert_eq!(h.add(y, h.neg(y)), FieldElement::Zero);
        assert_eq!(h.sub(y, y), FieldElement::Zero);
    }

    #[test]
    fn zech_table_invariant() {
        for f in [gf16(), gf81()] {
            for e in 0..f.group_order() as i64 {
                let x = f.element(e);
                let sum = f.add(f.one(), x);
                // compare against schoolbook polynomial addition
                let mut c = f.to_poly(x);
                c[0] = (c[0] + 1) % f.p();
                assert_eq!(sum, f.from_poly(&c).unwrap());
            }
        }
    }

    #[test]
    fn exhaustive_add_laws_gf16() {
        let f = gf16();
        let all: Vec<_> = f.elements().collect();
        for &a in &all {
            for &b in &all {
                assert_eq!(f.add(a, b), f.add(b, a));
                for &c in &all {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(
                        f.mul(a, f.add(b, c)),
                        f.add(f.mul(a, b), f.mul(a, c))
                    );
                }
            }
        }
    }

    #[test]
    fn subfield_trace_fibers() {
        for (p, s, m) in [(2, 2, 2), (2, 1, 4), (3, 2, 2), (2, 3, 2), (7, 1, 2), (2, 4, 3)] {
            let f = Field::new(p, s, m).unwrap();
            let mut counts = std::collections::HashMap::new();
            for x in f.elements() {
                let t = f.trace_to_subfield(x);
                assert!(f.in_subfield(t));
                *counts.entry(t).or_insert(0u64) += 1;
            }
            assert_eq!(counts.len() as u64, f.q());
            assert!(counts.values().all(|&c| c == f.r() / f.q()));
        }
    }

    #[test]
    fn gf16_over_gf2_trace_balance() {
        let f = Field::new(2, 1, 4).unwrap();
        let zeros = f
            .elements()
            .filter(|&x| f.trace(x, TraceTarget::Subfield).is_zero())
            .count();
        assert_eq!(zeros, 8);
    }

    #[test]
    fn trace_of_alpha_in_gf16_over_gf4() {
        // polynomial oracle: alpha = x modulo x^4+x+1, Tr(x) = x + x^4
        let f = gf16();
        let modulus = [1u64, 1, 0, 0, 1];
        let x4 = poly::pow_mod_poly(&[0, 1], 4, &modulus, 2);
        let expected = poly::trim(
            (0..4)
                .map(|i| (x4.get(i).copied().unwrap_or(0) + u64::from(i == 1)) % 2)
                .collect(),
        );
        assert_eq!(expected, vec![1]);
        let t = f.trace(f.alpha(), TraceTarget::Subfield);
        assert_eq!(poly::trim(f.to_poly(t)), expected);
        assert_eq!(f.trace_to_subfield(f.alpha()), t);
        assert_eq!(f.trace(FieldElement::Zero, TraceTarget::Subfield), FieldElement::Zero);
    }

    #[test]
    fn trace_tables_match_definition() {
        let f = gf81();
        for x in f.elements() {
            assert_eq!(f.trace(x, TraceTarget::Subfield), f.trace_to_subfield(x));
            assert_eq!(
                f.packed(f.trace(x, TraceTarget::Prime)) as u32,
                f.trace_to_prime(x)
            );
        }
    }

    fn field_strategy() -> impl Strategy<Value = &'static Field> {
        prop_oneof![Just(gf16()), Just(gf81())]
    }

    proptest! {
        #[test]
        fn dlog_is_a_homomorphism(f in field_strategy(), a in 0i64..1000, b in 0i64..1000) {
            let (x, y) = (f.element(a), f.element(b));
            let n = f.group_order();
            let lhs = f.dlog(f.mul(x, y)).unwrap();
            prop_assert_eq!(lhs, (f.dlog(x).unwrap() + f.dlog(y).unwrap()) % n);
            prop_assert_eq!(f.pow(x, b).unwrap(), f.element(a * b));
        }

        #[test]
        fn trace_transitivity(f in field_strategy(), a in 0i64..80) {
            let x = f.element(a);
            let via_subfield = f.subfield_trace_to_prime(f.trace_to_subfield(x)).unwrap();
            prop_assert_eq!(via_subfield, f.trace_to_prime(x));
        }

        #[test]
        fn trace_is_additive(f in field_strategy(), a in 0i64..80, b in 0i64..80) {
            let (x, y) = (f.element(a), f.element(b));
            prop_assert_eq!(
                f.trace_to_subfield(f.add(x, y)),
                f.add(f.trace_to_subfield(x), f.trace_to_subfield(y))
            );
        }
    }

    #[test]
    fn trace_transitivity_large_field() {
        use rand::{Rng, SeedableRng};
        let f = Field::new(2, 3, 4).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let x = f.element(rng.gen_range(0..f.group_order() as i64));
            let t = f.subfield_trace_to_prime(f.trace_to_subfield(x)).unwrap();
            assert_eq!(t, f.trace_to_prime(x));
        }
    }

    #[test]
    fn trace_fibers_exhaustive_up_to_4096() {
        for (p, s, m) in [(2, 3, 4), (2, 6, 2), (2, 2, 6), (3, 1, 7), (5, 1, 5)] {
            let f = Field::new(p, s, m).unwrap();
            assert!(f.r() <= 1 << 12);
            let mut counts = vec![0u64; f.r() as usize];
            for x in f.elements() {
                counts[f.packed(f.trace_to_subfield(x)) as usize] += 1;
            }
            let nonempty: Vec<_> = counts.into_iter().filter(|&c| c > 0).collect();
            assert_eq!(nonempty.len() as u64, f.q());
            assert!(nonempty.iter().all(|&c| c == f.r() / f.q()));
        }
    }

    #[test]
    fn render() {
        assert_eq!(render_poly(&[1, 1, 0, 0, 1]), "x^4+x+1");
        assert_eq!(render_poly(&[2, 0, 1]), "x^2+2");
        assert_eq!(render_poly(&[]), "0");
    }
}
