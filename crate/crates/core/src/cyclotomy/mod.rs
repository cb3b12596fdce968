//! Cyclotomic classes, the canonical additive character and Gauss periods.
//!
//! `C_i^(N,r) = alpha^i <alpha^N>` and `eta_i^(N,r) = sum_{x in C_i} psi(x)`,
//! with every class label pinned to the field's primitive element `alpha`.

mod class_number;
mod cycint;
mod lemmas;

pub use class_number::class_number_imaginary;
pub use cycint::{CycInt, ProductSum};
pub use lemmas::{
    index2_parameters, orient_index2, period_index2, period_quadratic, period_semiprimitive, semiprimitive_params,
    Index2Data,
};

use crate::error::{invalid, Error, Result};
use crate::field::{Field, FieldElement};

/// Upper bound on `N * p` dense coefficients held by one direct period table.
pub const MAX_TABLE_COEFFS: u64 = 1 << 27;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeriodSource {
    Direct,
    Quadratic,
    SemiPrimitive,
    Index2,
}

/// The `N` Gauss periods of order `N` over a field of `field_order` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussPeriodTable {
    p: u32,
    field_order: u64,
    values: Vec<CycInt>,
    source: PeriodSource,
}

impl GaussPeriodTable {
    pub fn new(p: u32, field_order: u64, values: Vec<CycInt>, source: PeriodSource) -> Self {
        assert!(!values.is_empty(), "a period table has at least one class");
        GaussPeriodTable {
            p,
            field_order,
            values,
            source,
        }
    }

    pub fn order(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn field_order(&self) -> u64 {
        self.field_order
    }

    pub fn source(&self) -> PeriodSource {
        self.source
    }

    pub fn values(&self) -> &[CycInt] {
        &self.values
    }

    /// `eta_i`, with `i` taken modulo the order.
    pub fn get(&self, i: i64) -> &CycInt {
        &self.values[i.rem_euclid(self.values.len() as i64) as usize]
    }

    /// All values as integers, if every one is rational.
    pub fn integers(&self) -> Option<Vec<i128>> {
        self.values.iter().map(CycInt::to_integer).collect()
    }

    pub fn sum(&self) -> CycInt {
        self.values
            .iter()
            .fold(CycInt::zero(self.p), |acc, v| &acc + v)
    }

    /// Overwrites one value. Only meant for fault-injection harnesses.
    pub fn perturb(&mut self, i: usize, value: CycInt) {
        self.values[i] = value;
    }
}

fn check_divides(n: u64, total: u64) -> Result<()> {
    if n == 0 || !total.is_multiple_of(n) {
        return Err(invalid(format!("{n} does not divide {total}")));
    }
    Ok(())
}

/// Elements of `C_i^(N,r)`.
pub fn cyclotomic_class(
    field: &Field,
    n: u64,
    i: i64,
) -> Result<impl Iterator<Item = FieldElement> + '_> {
    let order = field.group_order();
    check_divides(n, order)?;
    let size = order / n;
    Ok((0..size).map(move |j| field.element(i + (n * j) as i64)))
}

/// `psi(x) = zeta_p^Tr_{r/p}(x)`.
pub fn additive_character(field: &Field, x: FieldElement) -> CycInt {
    CycInt::zeta_pow(field.p() as u32, field.trace_to_prime(x) as i64)
}

fn dense_guard(n: u64, p: u64) -> Result<()> {
    if n.saturating_mul(p) > MAX_TABLE_COEFFS {
        return Err(invalid(format!(
            "period table of order {n} over characteristic {p} is too large to hold densely"
        )));
    }
    Ok(())
}

/// Periods of order `N` over `GF(r)` by summing the character over each class.
pub fn gauss_period_direct(field: &Field, n: u64) -> Result<GaussPeriodTable> {
    check_divides(n, field.group_order())?;
    let p = field.p();
    dense_guard(n, p)?;
    let traces = field.trace_prime_table();
    let stride = p as usize;
    let mut counts = vec![0i128; n as usize * stride];
    for (e, &t) in traces.iter().enumerate() {
        let class = e % n as usize;
        counts[class * stride + t as usize] += 1;
    }
    let values = counts
        .chunks(stride)
        .map(|c| CycInt::from_exponent_counts(p as u32, c.to_vec()))
        .collect();
    Ok(GaussPeriodTable::new(
        p as u32,
        field.r(),
        values,
        PeriodSource::Direct,
    ))
}

/// Periods of order `t` over the subfield `GF(q)`, using its canonical
/// character `phi(y) = zeta_p^Tr_{q/p}(y)` and the classes
/// `C_i^(t,q) = alpha^(N0 i) <alpha^(N0 t)>`, `N0 = (r-1)/(q-1)`.
pub fn gauss_period_subfield(field: &Field, t: u64) -> Result<GaussPeriodTable> {
    let q1 = field.q() - 1;
    check_divides(t, q1)?;
    let p = field.p();
    dense_guard(t, p)?;
    let n0 = field.subfield_generator_exponent() as i64;
    let mut counts = vec![0i128; (t * p) as usize];
    for i in 0..q1 {
        let y = field.element(n0 * i as i64);
        let tr = field.subfield_trace_to_prime(y)?;
        counts[((i % t) * p + tr as u64) as usize] += 1;
    }
    let values = counts
        .chunks(p as usize)
        .map(|c| CycInt::from_exponent_counts(p as u32, c.to_vec()))
        .collect();
    Ok(GaussPeriodTable::new(
        p as u32,
        field.q(),
        values,
        PeriodSource::Direct,
    ))
}

/// Compares a closed-form table against the direct one entrywise.
pub fn agrees_with_direct(field: &Field, table: &GaussPeriodTable) -> Result<bool> {
    if table.field_order() != field.r() {
        return Err(Error::InvalidParameter(format!(
            "table is over GF({}), field is GF({})",
            table.field_order(),
            field.r()
        )));
    }
    let direct = gauss_period_direct(field, table.order())?;
    Ok(direct.values() == table.values())
}
