//! The trace codes `c(a_1, ..., a_u) = (Tr_{r/q}(sum_i a_i g_i^t))_{t < n}`,
//! `g_i = alpha^(N_i)` of pairwise coprime orders `n_i`, `n = n_1 ... n_u`.
//!
//! Per-tuple weights are available two ways: by counting coordinates and by
//! the character-sum identity
//! `wt = (q-1)n/q - (1/q) sum_{y in GF(q)*} prod_i sum_{x in C_0^(N_i)} psi(y a_i x)`.
//! [`distribution_bruteforce`] enumerates every tuple and is the reference
//! oracle for the closed-form tables.

use std::sync::Arc;

use rayon::prelude::*;

use crate::arith::{gcd, multiplicative_order, prime_power};
use crate::cyclotomy::{CycInt, GaussPeriodTable};
use crate::distribution::{Level, WeightDistribution};
use crate::error::{internal, invalid, Error, Result};
use crate::field::{Field, FieldElement};

/// Default cap on enumerated tuples.
pub const DEFAULT_MAX_TUPLES: u128 = 1 << 26;

/// A validated code description.
#[derive(Clone, Debug)]
pub struct CodeSpec {
    field: Arc<Field>,
    orders: Vec<u64>,
    with_unit_term: bool,
    cofactors: Vec<u64>,
    length: u64,
}

impl CodeSpec {
    /// Checks that every order divides `r - 1` and the orders are pairwise coprime.
    /// `with_unit_term` appends the order-1 component `Tr(c)`.
    pub fn new(field: Arc<Field>, orders: Vec<u64>, with_unit_term: bool) -> Result<CodeSpec> {
        if orders.is_empty() {
            return Err(invalid("at least one order is required"));
        }
        let group = field.group_order();
        for &n in &orders {
            if n == 0 || !group.is_multiple_of(n) {
                return Err(invalid(format!("order {n} does not divide r - 1 = {group}")));
            }
        }
        let mut all = orders.clone();
        if with_unit_term {
            all.push(1);
        }
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                if gcd(all[i], all[j]) != 1 {
                    return Err(invalid(format!(
                        "orders {} and {} are not coprime",
                        all[i], all[j]
                    )));
                }
                if all[i] == 1 && all[j] == 1 {
                    return Err(invalid(
                        "two components of order 1 share the same generator",
                    ));
                }
            }
        }
        let length: u64 = all.iter().product();
        let cofactors: Vec<u64> = all.iter().map(|&n| group / n).collect();
        let delta = cofactors.iter().fold(group, |acc, &c| gcd(acc, c));
        if group / delta != length {
            return Err(internal(format!(
                "length {length} disagrees with (r-1)/gcd(r-1, N_i) = {}",
                group / delta
            )));
        }
        Ok(CodeSpec {
            field,
            orders,
            with_unit_term,
            cofactors,
            length,
        })
    }

    /// Builds `GF(q^m)` and validates the orders against it.
    pub fn from_params(q: u64, m: u32, orders: Vec<u64>, with_unit_term: bool) -> Result<CodeSpec> {
        let (p, s) = prime_power(q).ok_or_else(|| invalid(format!("q = {q} is not a prime power")))?;
        let field = Field::new(p, s, m)?;
        CodeSpec::new(Arc::new(field), orders, with_unit_term)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> Arc<Field> {
        Arc::clone(&self.field)
    }

    /// The orders as given, without the unit term.
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn with_unit_term(&self) -> bool {
        self.with_unit_term
    }

    /// Orders of every coefficient slot, the unit term last.
    pub fn component_orders(&self) -> Vec<u64> {
        let mut all = self.orders.clone();
        if self.with_unit_term {
            all.push(1);
        }
        all
    }

    /// `N_i = (r-1)/n_i` per slot.
    pub fn cofactors(&self) -> &[u64] {
        &self.cofactors
    }

    pub fn generators(&self) -> Vec<FieldElement> {
        self.cofactors
            .iter()
            .map(|&c| self.field.element(c as i64))
            .collect()
    }

    /// Number of coefficient slots, counting the unit term.
    pub fn arity(&self) -> usize {
        self.cofactors.len()
    }

    /// `n = n_1 ... n_u`.
    pub fn length(&self) -> u64 {
        self.length
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    /// `sum_i ord_{n_i}(q)`: the degrees of the minimal polynomials of `g_i^-1`.
    pub fn dimension(&self) -> u32 {
        self.component_orders()
            .iter()
            .map(|&n| multiplicative_order(self.q(), n).expect("q is coprime to n | r-1") as u32)
            .sum()
    }

    /// Number of tuples [`distribution_bruteforce`] visits.
    pub fn tuple_count(&self) -> u128 {
        let r = self.field.r() as u128;
        let base = r.saturating_pow(self.orders.len() as u32);
        if self.with_unit_term {
            base.saturating_mul(self.q() as u128)
        } else {
            base
        }
    }

    /// One `c` per trace value: `c_w = w * tau` with `Tr(tau) = 1`.
    pub fn unit_representatives(&self) -> Vec<FieldElement> {
        let f = &self.field;
        let tau = f
            .nonzero_elements()
            .find(|&x| f.trace_to_subfield(x) == f.one())
            .expect("the trace is onto");
        let n0 = f.subfield_generator_exponent() as i64;
        std::iter::once(FieldElement::Zero)
            .chain((0..f.q() as i64 - 1).map(|j| f.mul(f.element(n0 * j), tau)))
            .collect()
    }

    fn check_tuple(&self, a: &[FieldElement]) -> Result<()> {
        if a.len() != self.arity() {
            return Err(invalid(format!(
                "expected {} coefficients, got {}",
                self.arity(),
                a.len()
            )));
        }
        Ok(())
    }
}

/// The codeword of `a`, coordinates as elements of `GF(q)` inside `GF(r)`.
pub fn codeword(spec: &CodeSpec, a: &[FieldElement]) -> Result<Vec<FieldElement>> {
    spec.check_tuple(a)?;
    let f = spec.field();
    let gens = spec.generators();
    Ok((0..spec.length() as i64)
        .map(|t| {
            let sum = a.iter().zip(&gens).fold(FieldElement::Zero, |acc, (&ai, &g)| {
                let term = f.mul(ai, f.pow(g, t).expect("g is nonzero"));
                f.add(acc, term)
            });
            f.trace_to_subfield(sum)
        })
        .collect())
}

/// Hamming weight by counting nonzero coordinates.
pub fn weight_bruteforce(spec: &CodeSpec, a: &[FieldElement]) -> Result<u64> {
    Ok(codeword(spec, a)?.iter().filter(|x| !x.is_zero()).count() as u64)
}

/// Hamming weight from the character-sum identity, given one period table of
/// order `N_i` over `GF(r)` per slot.
pub fn weight_closedform(
    spec: &CodeSpec,
    a: &[FieldElement],
    periods: &[&GaussPeriodTable],
) -> Result<u64> {
    spec.check_tuple(a)?;
    if periods.len() != spec.arity() {
        return Err(invalid("one period table per slot is required"));
    }
    let f = spec.field();
    for (t, &n) in periods.iter().zip(spec.cofactors()) {
        if t.order() != n || t.field_order() != f.r() {
            return Err(invalid(format!(
                "period table of order {} over GF({}) where order {n} over GF({}) is needed",
                t.order(),
                t.field_order(),
                f.r()
            )));
        }
    }
    let p = f.p() as u32;
    let orders = spec.component_orders();
    let n0 = f.subfield_generator_exponent() as i64;
    let mut total = CycInt::zero(p);
    for j in 0..f.q() as i64 - 1 {
        let y = f.element(n0 * j);
        let mut prod = CycInt::one(p);
        for ((&ai, table), &ni) in a.iter().zip(periods).zip(&orders) {
            let factor = match f.mul(y, ai) {
                FieldElement::Zero => CycInt::from_int(p, ni as i128),
                FieldElement::Log(e) => table.get(e as i64).clone(),
            };
            prod = &prod * &factor;
        }
        total += &prod;
    }
    let s = total
        .to_integer()
        .ok_or_else(|| internal(format!("character sum {total} is not rational")))?;
    let q = f.q() as i128;
    let numer = (q - 1) * spec.length() as i128 - s;
    if numer % q != 0 {
        return Err(internal(format!("weight numerator {numer} is not divisible by q = {q}")));
    }
    let w = numer / q;
    if w < 0 || w > spec.length() as i128 {
        return Err(internal(format!("weight {w} outside [0, {}]", spec.length())));
    }
    Ok(w as u64)
}

/// Digitwise addition of base-p packed vectors.
#[inline]
fn add_packed(a: u32, b: u32, p: u32) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    let (mut a, mut b) = (a, b);
    let mut out = 0;
    let mut place = 1;
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

struct Enumerator<'a> {
    p: u32,
    length: usize,
    group: u64,
    trace: &'a [u32],
    cofactors: &'a [u64],
    // per slot: candidate coefficients, as log or None for zero
    choices: Vec<Vec<Option<u32>>>,
    // the unit slot adds the packed Tr(c) to every coordinate
    unit_values: Option<Vec<u32>>,
}

impl Enumerator<'_> {
    fn contribution(&self, slot: usize, e: u32, out: &mut [u32]) {
        let step = self.cofactors[slot] % self.group;
        let mut idx = e as u64;
        for o in out.iter_mut() {
            *o = add_packed(*o, self.trace[idx as usize], self.p);
            idx += step;
            if idx >= self.group {
                idx -= self.group;
            }
        }
    }

    fn walk(&self, slot: usize, partial: &mut Vec<u32>, counts: &mut [u64]) {
        if slot == self.choices.len() {
            match &self.unit_values {
                None => {
                    let zeros = partial.iter().filter(|&&v| v == 0).count();
                    counts[self.length - zeros] += 1;
                }
                Some(values) => {
                    // coordinate is zero iff partial = -Tr(c); count per value of Tr(c)
                    for &w in values {
                        let zeros = partial
                            .iter()
                            .filter(|&&v| add_packed(v, w, self.p) == 0)
                            .count();
                        counts[self.length - zeros] += 1;
                    }
                }
            }
            return;
        }
        for choice in &self.choices[slot] {
            match *choice {
                None => self.walk(slot + 1, partial, counts),
                Some(e) => {
                    let mut next = partial.clone();
                    self.contribution(slot, e, &mut next);
                    self.walk(slot + 1, &mut next, counts);
                }
            }
        }
    }
}

/// Weight distribution over every coefficient tuple, by direct counting.
///
/// Non-unit slots range over all of `GF(r)`; the unit slot ranges over one
/// representative per trace value, so the total is `r^u` times `q` with a unit
/// term. Work is split over the first slot's coefficients.
pub fn distribution_bruteforce(spec: &CodeSpec, max_tuples: u128) -> Result<WeightDistribution> {
    let needed = spec.tuple_count();
    if needed > max_tuples {
        return Err(Error::BudgetExceeded {
            needed,
            limit: max_tuples,
        });
    }
    let f = spec.field();
    let trace = f.trace_sub_packed_table();
    let r_choices: Vec<Option<u32>> = std::iter::once(None)
        .chain((0..f.group_order() as u32).map(Some))
        .collect();
    let slots = spec.orders().len();
    let unit_values = spec.with_unit_term().then(|| {
        spec.unit_representatives()
            .into_iter()
            .map(|c| f.packed(f.trace_to_subfield(c)) as u32)
            .collect()
    });
    let en = Enumerator {
        p: f.p() as u32,
        length: spec.length() as usize,
        group: f.group_order(),
        trace: &trace,
        cofactors: spec.cofactors(),
        choices: vec![r_choices.clone(); slots],
        unit_values,
    };
    let counts = r_choices
        .par_iter()
        .map(|first| {
            let mut counts = vec![0u64; en.length + 1];
            let mut partial = vec![0u32; en.length];
            if let Some(e) = *first {
                en.contribution(0, e, &mut partial);
            }
            en.walk(1, &mut partial, &mut counts);
            counts
        })
        .reduce(
            || vec![0u64; en.length + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    WeightDistribution::from_counts(Level::Tuple, spec.length(), spec.q(), &counts)
}

/// Brute-force distribution collapsed to codewords, checked against the
/// dimension `sum ord_{n_i}(q)`.
pub fn codeword_distribution_bruteforce(
    spec: &CodeSpec,
    max_tuples: u128,
) -> Result<WeightDistribution> {
    let tuples = distribution_bruteforce(spec, max_tuples)?;
    let (codewords, _) = tuples.collapse_to_codewords()?;
    let k = codewords.dimension().ok_or_else(|| internal("total is not a power of q"))?;
    if k != spec.dimension() {
        return Err(internal(format!(
            "enumeration gives dimension {k}, minimal polynomials give {}",
            spec.dimension()
        )));
    }
    Ok(codewords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomy::gauss_period_direct;
    use num_bigint::BigUint;

    fn spec(q: u64, m: u32, orders: &[u64], unit: bool) -> CodeSpec {
        CodeSpec::from_params(q, m, orders.to_vec(), unit).unwrap()
    }

    #[test]
    fn validate_examples() {
        let s = spec(4, 2, &[5, 3], false);
        assert_eq!(s.length(), 15);
        assert_eq!(s.cofactors(), &[3, 5]);
        assert_eq!(s.dimension(), 3);
        let s = spec(8, 2, &[9, 7], false);
        assert_eq!(s.length(), 63);
        assert!(matches!(
            CodeSpec::from_params(4, 2, vec![5, 5], false),
            Err(Error::InvalidParameter(_))
        ));
        assert!(CodeSpec::from_params(4, 2, vec![7], false).is_err());
        assert!(CodeSpec::from_params(4, 2, vec![1, 3], true).is_err());
        assert!(CodeSpec::from_params(6, 2, vec![5], false).is_err());
        assert_eq!(spec(2, 4, &[5, 3], true).dimension(), 7);
    }

    #[test]
    fn codeword_shape_and_zero() {
        let s = spec(4, 2, &[5, 3], false);
        let f = s.field();
        let z = codeword(&s, &[FieldElement::Zero, FieldElement::Zero]).unwrap();
        assert_eq!(z.len(), 15);
        assert!(z.iter().all(|x| x.is_zero()));
        let c = codeword(&s, &[f.element(4), f.element(9)]).unwrap();
        assert!(c.iter().all(|&x| f.in_subfield(x)));
        assert!(codeword(&s, &[f.one()]).is_err());
    }

    #[test]
    fn codeword_map_is_additive() {
        let s = spec(9, 2, &[5, 16], false);
        let f = s.field();
        for (i, j, k, l) in [(0, 3, 17, 40), (5, 5, 79, 2), (33, 60, 12, 1)] {
            let a = [f.element(i), f.element(j)];
            let b = [f.element(k), f.element(l)];
            let sum = [f.add(a[0], b[0]), f.add(a[1], b[1])];
            let lhs = codeword(&s, &sum).unwrap();
            let ca = codeword(&s, &a).unwrap();
            let cb = codeword(&s, &b).unwrap();
            let rhs: Vec<_> = ca.iter().zip(&cb).map(|(&x, &y)| f.add(x, y)).collect();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn bruteforce_weights_example() {
        let s = spec(4, 2, &[5, 3], false);
        let f = s.field();
        assert_eq!(weight_bruteforce(&s, &[FieldElement::Zero; 2]).unwrap(), 0);
        // a in a class with eta^(1,16) = -1 ... every nonzero a, b = 0: weight 12
        for e in 0..15 {
            assert_eq!(weight_bruteforce(&s, &[f.element(e), FieldElement::Zero]).unwrap(), 12);
        }
        let zero_weight = f
            .elements()
            .flat_map(|a| f.elements().map(move |b| [a, b]))
            .filter(|t| weight_bruteforce(&s, t).unwrap() == 0)
            .collect::<Vec<_>>();
        assert_eq!(zero_weight.len(), 4);
        assert!(zero_weight.iter().all(|t| t[0].is_zero()));
    }

    fn tables(s: &CodeSpec) -> Vec<GaussPeriodTable> {
        s.cofactors()
            .iter()
            .map(|&n| gauss_period_direct(s.field(), n).unwrap())
            .collect()
    }

    #[test]
    fn closedform_zero_and_binary() {
        let s = spec(2, 4, &[5, 3], true);
        let t = tables(&s);
        let refs: Vec<_> = t.iter().collect();
        let zero = [FieldElement::Zero; 3];
        assert_eq!(weight_closedform(&s, &zero, &refs).unwrap(), 0);
        // q = 2: n/2 - (1/2) prod of eta-bar
        let f = s.field();
        let a = [f.element(1), f.element(2), FieldElement::Zero];
        let eta1 = t[0].get(1).to_integer().unwrap();
        let eta2 = t[1].get(2).to_integer().unwrap();
        let expected = (15 - eta1 * eta2) / 2;
        assert_eq!(weight_closedform(&s, &a, &refs).unwrap() as i128, expected);
        assert!(weight_closedform(&s, &a, &refs[..2]).is_err());
    }

    #[test]
    fn closedform_matches_bruteforce_example() {
        let s = spec(4, 2, &[5, 3], false);
        let t = tables(&s);
        let refs: Vec<_> = t.iter().collect();
        let f = s.field();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(
                    weight_closedform(&s, &[a, b], &refs).unwrap(),
                    weight_bruteforce(&s, &[a, b]).unwrap()
                );
            }
        }
    }

    #[test]
    fn oracle_example_4_3() {
        let s = spec(4, 2, &[5, 3], false);
        let d = distribution_bruteforce(&s, DEFAULT_MAX_TUPLES).unwrap();
        let expect = [(0u64, 4u32), (11, 180), (12, 60), (15, 12)];
        assert_eq!(d.entries().len(), expect.len());
        for (w, c) in expect {
            assert_eq!(d.frequency(w), BigUint::from(c));
        }
        assert_eq!(d.total(), BigUint::from(256u32));
    }

    #[test]
    fn oracle_trivial_kernel() {
        let s = spec(9, 2, &[5, 16], false);
        let d = distribution_bruteforce(&s, DEFAULT_MAX_TUPLES).unwrap();
        assert_eq!(d.frequency(0), BigUint::from(1u32));
        assert_eq!(d.total(), BigUint::from(6561u32));
    }

    #[test]
    fn oracle_unit_term_total() {
        let s = spec(2, 4, &[5, 3], true);
        let c = codeword_distribution_bruteforce(&s, DEFAULT_MAX_TUPLES).unwrap();
        assert_eq!(c.total(), BigUint::from(128u32));
        assert_eq!(c.min_nonzero_weight(), Some(3));
    }

    #[test]
    fn oracle_agrees_with_per_tuple_weights() {
        let s = spec(3, 2, &[4, 1], false);
        let d = distribution_bruteforce(&s, DEFAULT_MAX_TUPLES).unwrap();
        let f = s.field();
        let mut direct = WeightDistribution::new(Level::Tuple, s.length(), s.q());
        for a in f.elements() {
            for b in f.elements() {
                direct.add(weight_bruteforce(&s, &[a, b]).unwrap(), BigUint::from(1u32)).unwrap();
            }
        }
        assert_eq!(d, direct);
    }

    #[test]
    fn unit_representatives_cover_subfield() {
        let s = spec(4, 2, &[5], true);
        let f = s.field();
        let mut traces: Vec<_> = s
            .unit_representatives()
            .iter()
            .map(|&c| f.trace_to_subfield(c))
            .collect();
        traces.sort();
        traces.dedup();
        assert_eq!(traces.len(), 4);
    }

    #[test]
    fn budget() {
        let s = spec(8, 2, &[9, 7], false);
        assert!(matches!(
            distribution_bruteforce(&s, 1000),
            Err(Error::BudgetExceeded { needed: 4096, limit: 1000 })
        ));
    }

    #[test]
    fn packed_addition() {
        // in base 3: 5 = 12_3, 7 = 21_3, sum digitwise = 00_3
        assert_eq!(add_packed(5, 7, 3), 0);
        assert_eq!(add_packed(5, 1, 3), 3);
        assert_eq!(add_packed(6, 3, 2), 5);
    }
}
