//! Closed-form weight distributions for two coprime orders, with and without
//! the unit term, assembled from Gauss periods.
//!
//! Each table row is evaluated per index tuple and merged by weight. Rows
//! are tuple-level: with an order-1 slot the coefficient of that slot is
//! counted once per trace value rather than once per field element.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigUint;

use crate::arith::gcd;
use crate::cyclotomy::{
    gauss_period_direct, gauss_period_subfield, orient_index2, period_index2, period_quadratic,
    period_semiprimitive, semiprimitive_params, CycInt, GaussPeriodTable, ProductSum,
};
use crate::distribution::{Level, WeightDistribution};
use crate::error::{internal, invalid, Error, Result};
use crate::field::Field;
use crate::trace_code::CodeSpec;

/// Derived parameters shared by all tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DerivedParams {
    /// `(r-1)/(q-1)`
    pub n0: u64,
    pub n1: u64,
    pub n2: u64,
    /// `N_i = (r-1)/n_i`
    pub big_n1: u64,
    pub big_n2: u64,
    /// `gcd(N0, N1)`
    pub d1: u64,
    /// `gcd(N0, N2)`
    pub d2: u64,
    /// `gcd(N0 N2 / d2, N1)`
    pub d: u64,
}

/// Parameters for a spec with exactly two listed orders.
pub fn derive_params(spec: &CodeSpec) -> Result<DerivedParams> {
    let &[n1, n2] = spec.orders() else {
        return Err(invalid(format!(
            "closed forms need exactly two orders, got {}",
            spec.orders().len()
        )));
    };
    let f = spec.field();
    let group = f.group_order();
    let q1 = f.q() - 1;
    let n0 = f.subfield_generator_exponent();
    let (big_n1, big_n2) = (group / n1, group / n2);
    let d1 = gcd(n0, big_n1);
    let d2 = gcd(n0, big_n2);
    let d = gcd(n0 * big_n2 / d2, big_n1);
    let params = DerivedParams {
        n0,
        n1,
        n2,
        big_n1,
        big_n2,
        d1,
        d2,
        d,
    };
    let fail = |what: &str| invalid(format!("{what} fails for {params:?}"));
    if big_n1 % d1 != 0 || big_n2 % d2 != 0 || big_n1 % d != 0 {
        return Err(fail("d1 | N1, d2 | N2, d | N1"));
    }
    if !q1.is_multiple_of(big_n2 / d2) {
        return Err(fail("N2/d2 | q-1"));
    }
    Ok(params)
}

/// Lazily computed period tables over `GF(r)` and over the subfield `GF(q)`.
///
/// Tables are direct character sums unless [`PeriodBook::prefer_lemmas`] is
/// set, in which case the quadratic, semi-primitive and index-2 closed forms
/// are used where their preconditions hold, and checked against the direct
/// sum before use.
pub struct PeriodBook<'a> {
    field: &'a Field,
    prefer_lemmas: bool,
    big: RefCell<HashMap<u64, Rc<GaussPeriodTable>>>,
    small: RefCell<HashMap<u64, Rc<GaussPeriodTable>>>,
}

impl<'a> PeriodBook<'a> {
    pub fn new(field: &'a Field) -> Self {
        PeriodBook {
            field,
            prefer_lemmas: false,
            big: RefCell::default(),
            small: RefCell::default(),
        }
    }

    pub fn prefer_lemmas(mut self, yes: bool) -> Self {
        self.prefer_lemmas = yes;
        self
    }

    pub fn field(&self) -> &Field {
        self.field
    }

    fn lemma_table(&self, n: u64) -> Result<Option<GaussPeriodTable>> {
        let f = self.field;
        let (p, r) = (f.p(), f.r());
        let degree = f.s() * f.m();
        if n == 2 && p != 2 && degree.is_multiple_of(2) {
            return period_quadratic(p, f.s(), f.m()).map(Some);
        }
        if let Some((e, ff)) = semiprimitive_params(p, n, r) {
            return period_semiprimitive(p, e, ff, n).map(Some);
        }
        let half = (n.saturating_sub(1) / 2) as u32;
        if half > 0 && degree.is_multiple_of(half) {
            if let Ok(t) = period_index2(n, p, degree / half) {
                return orient_index2(&t, f).map(Some);
            }
        }
        Ok(None)
    }

    /// `eta^(n, r)`.
    pub fn over_field(&self, n: u64) -> Result<Rc<GaussPeriodTable>> {
        if let Some(t) = self.big.borrow().get(&n) {
            return Ok(Rc::clone(t));
        }
        let direct = gauss_period_direct(self.field, n)?;
        let table = match self.prefer_lemmas {
            true => match self.lemma_table(n)? {
                Some(t) if t.values() == direct.values() => t,
                Some(t) => {
                    return Err(internal(format!(
                        "{:?} periods of order {n} disagree with the direct sum",
                        t.source()
                    )))
                }
                None => direct,
            },
            false => direct,
        };
        let table = Rc::new(table);
        self.big.borrow_mut().insert(n, Rc::clone(&table));
        Ok(table)
    }

    /// `eta^(t, q)`, classes indexed by powers of `alpha^N0`.
    pub fn over_subfield(&self, t: u64) -> Result<Rc<GaussPeriodTable>> {
        if let Some(table) = self.small.borrow().get(&t) {
            return Ok(Rc::clone(table));
        }
        let table = Rc::new(gauss_period_subfield(self.field, t)?);
        self.small.borrow_mut().insert(t, Rc::clone(&table));
        Ok(table)
    }

    /// Orders of the `GF(r)` tables computed so far, ascending.
    pub fn cached_orders(&self) -> Vec<u64> {
        let mut orders: Vec<u64> = self.big.borrow().keys().copied().collect();
        orders.sort_unstable();
        orders
    }

    /// Replaces `eta_index^(n, r)`; for fault-injection harnesses.
    pub fn inject_fault(&self, n: u64, index: usize, value: CycInt) -> Result<()> {
        let mut table = (*self.over_field(n)?).clone();
        table.perturb(index % n as usize, value);
        self.big.borrow_mut().insert(n, Rc::new(table));
        Ok(())
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// `a / b` for frequencies that must divide exactly.
fn exact_freq(num: BigUint, den: BigUint) -> Result<BigUint> {
    if (&num % &den) != BigUint::from(0u32) {
        return Err(internal(format!("frequency {num}/{den} is not an integer")));
    }
    Ok(num / den)
}

/// `n - Z` with `Z = n/q + (c_num / (q c_den)) S`, checked to be an integer in `[0, n]`.
fn row_weight(n: u64, q: u64, c_num: u64, c_den: u64, s: &CycInt) -> Result<u64> {
    let s = s
        .to_integer()
        .ok_or_else(|| internal(format!("row sum {s} is not rational")))?;
    let (n, q, c_num, c_den) = (n as i128, q as i128, c_num as i128, c_den as i128);
    let numer = c_den * (q - 1) * n - c_num * s;
    let den = q * c_den;
    if numer % den != 0 {
        return Err(internal(format!("weight {numer}/{den} is not an integer")));
    }
    let w = numer / den;
    if !(0..=n).contains(&w) {
        return Err(internal(format!("weight {w} is outside [0, {n}]")));
    }
    Ok(w as u64)
}

/// Period values as sparse term lists, for repeated products.
struct Terms {
    p: u32,
    values: Vec<Vec<(usize, i128)>>,
}

impl Terms {
    fn of(table: &GaussPeriodTable) -> Terms {
        Terms {
            p: table.p(),
            values: table.values().iter().map(CycInt::terms).collect(),
        }
    }

    fn get(&self, i: u64) -> &[(usize, i128)] {
        &self.values[(i % self.values.len() as u64) as usize]
    }
}

/// `sum_{i < count} eta^(N2,r)_{N0 i + j} * other(i)`.
fn twisted_sum<'t>(
    count: u64,
    n0: u64,
    j: u64,
    outer: &Terms,
    other: impl Fn(u64) -> &'t [(usize, i128)],
) -> CycInt {
    let mut acc = ProductSum::new(outer.p);
    for i in 0..count {
        acc.add_terms_product(outer.get(n0 * i + j), other(i));
    }
    acc.finish()
}

fn new_dist(spec: &CodeSpec) -> WeightDistribution {
    let mut d = WeightDistribution::new(Level::Tuple, spec.length(), spec.q());
    d.add(0, big(1)).expect("weight 0 fits");
    d
}

/// Rows for `a = 0, b != 0`-type slots: weight from `eta^(d_x)_j`, `(r-1)/d_x` times each.
fn single_slot_rows(
    dist: &mut WeightDistribution,
    book: &PeriodBook,
    n: u64,
    q: u64,
    d_x: u64,
    n_other: u64,
    big_n: u64,
) -> Result<()> {
    let table = book.over_field(d_x)?;
    let freq = exact_freq(big(book.field().group_order()), big(d_x))?;
    for j in 0..d_x {
        let w = row_weight(n, q, (q - 1) * d_x * n_other, big_n, table.get(j as i64))?;
        dist.add(w, freq.clone())?;
    }
    Ok(())
}

/// Rows with one `GF(r)` slot nonzero and the order-1 coefficient's trace nonzero.
#[allow(clippy::too_many_arguments)]
fn subfield_mixed_rows(
    dist: &mut WeightDistribution,
    book: &PeriodBook,
    n: u64,
    q: u64,
    n0: u64,
    big_n: u64,
    d_x: u64,
    multiplier: u64,
) -> Result<()> {
    let r1 = book.field().group_order();
    let t = big_n / d_x;
    let outer = Terms::of(&*book.over_field(big_n)?);
    let inner = Terms::of(&*book.over_subfield(t)?);
    let freq = exact_freq(big(d_x) * big(q - 1) * big(r1), big(big_n) * big(big_n))?;
    for j in 0..big_n {
        for l in 0..t {
            let s = twisted_sum(t, n0, j, &outer, |i| inner.get(i + l));
            let w = row_weight(n, q, multiplier, 1, &s)?;
            dist.add(w, freq.clone())?;
        }
    }
    Ok(())
}

/// Rows with both `GF(r)` slots nonzero and no unit contribution.
fn double_rows(
    dist: &mut WeightDistribution,
    book: &PeriodBook,
    spec: &CodeSpec,
    dp: &DerivedParams,
) -> Result<()> {
    let q = spec.q();
    let r1 = book.field().group_order();
    let outer = Terms::of(&*book.over_field(dp.big_n2)?);
    let inner = Terms::of(&*book.over_field(dp.d)?);
    let count = dp.big_n2 / dp.d2;
    let freq = exact_freq(big(r1) * big(r1), big(dp.d) * big(dp.big_n2))?;
    for j in 0..dp.big_n2 {
        for k in 0..dp.d {
            let s = twisted_sum(count, dp.n0, j, &outer, |i| inner.get(dp.n0 * i + k));
            let w = row_weight(
                spec.length(),
                q,
                (q - 1) * dp.d * dp.d2,
                dp.big_n1 * dp.big_n2,
                &s,
            )?;
            dist.add(w, freq.clone())?;
        }
    }
    Ok(())
}

/// Two coprime orders, no unit term.
pub fn table1(spec: &CodeSpec, book: &PeriodBook) -> Result<WeightDistribution> {
    if spec.with_unit_term() {
        return Err(invalid("table1 covers codes without the unit term"));
    }
    let dp = derive_params(spec)?;
    let (n, q) = (spec.length(), spec.q());
    let mut dist = new_dist(spec);
    single_slot_rows(&mut dist, book, n, q, dp.d1, dp.n2, dp.big_n1)?;
    single_slot_rows(&mut dist, book, n, q, dp.d2, dp.n1, dp.big_n2)?;
    double_rows(&mut dist, book, spec, &dp)?;
    Ok(dist)
}

/// One of the two orders is 1 (either slot), no unit term. The order-1
/// coefficient is counted once per trace value, so the total is `q r`.
pub fn table2(spec: &CodeSpec, book: &PeriodBook) -> Result<WeightDistribution> {
    if spec.with_unit_term() {
        return Err(invalid("table2 covers codes without the unit term"));
    }
    let n2 = match spec.orders() {
        &[1, n2] | &[n2, 1] if n2 != 1 => n2,
        other => {
            return Err(invalid(format!(
                "table2 needs two orders, exactly one equal to 1, got {other:?}"
            )))
        }
    };
    let f = spec.field();
    let (q, r1) = (f.q(), f.group_order());
    let n0 = f.subfield_generator_exponent();
    let big_n2 = r1 / n2;
    let d2 = gcd(n0, big_n2);
    if (q - 1) % (big_n2 / d2) != 0 {
        return Err(invalid("N2/d2 does not divide q-1"));
    }
    let mut dist = new_dist(spec);
    dist.add(n2, big(q - 1))?;
    single_slot_rows(&mut dist, book, n2, q, d2, 1, big_n2)?;
    subfield_mixed_rows(&mut dist, book, n2, q, n0, big_n2, d2, 1)?;
    Ok(dist)
}

/// Two coprime orders plus the unit term; total `q r^2`.
pub fn table3(spec: &CodeSpec, book: &PeriodBook) -> Result<WeightDistribution> {
    if !spec.with_unit_term() {
        return Err(invalid("table3 covers codes with the unit term"));
    }
    let dp = derive_params(spec)?;
    let f = spec.field();
    let (n, q, r1) = (spec.length(), f.q(), f.group_order());
    let l_order = dp.big_n1 * dp.big_n2 / (dp.d * dp.d2);
    if (dp.big_n1 * dp.big_n2) % (dp.d * dp.d2) != 0 || (q - 1) % l_order != 0 {
        return Err(invalid(format!(
            "N1 N2/(d d2) must divide q-1 for the subfield periods, got N1={} N2={} d={} d2={} q={q}",
            dp.big_n1, dp.big_n2, dp.d, dp.d2
        )));
    }
    let mut dist = new_dist(spec);
    // a = b = 0, Tr(c) != 0
    dist.add(n, big(q - 1))?;
    // a = 0, b != 0
    single_slot_rows(&mut dist, book, n, q, dp.d2, dp.n1, dp.big_n2)?;
    subfield_mixed_rows(&mut dist, book, n, q, dp.n0, dp.big_n2, dp.d2, dp.n1)?;
    // a != 0, b = 0
    single_slot_rows(&mut dist, book, n, q, dp.d1, dp.n2, dp.big_n1)?;
    subfield_mixed_rows(&mut dist, book, n, q, dp.n0, dp.big_n1, dp.d1, dp.n2)?;
    // a, b != 0, Tr(c) = 0
    double_rows(&mut dist, book, spec, &dp)?;
    // a, b != 0, Tr(c) != 0
    let eta1 = Terms::of(&*book.over_field(dp.big_n1)?);
    let eta2 = Terms::of(&*book.over_field(dp.big_n2)?);
    let eta_sub = Terms::of(&*book.over_subfield(l_order)?);
    let outer_count = dp.big_n2 / dp.d2;
    let inner_count = dp.big_n1 / dp.d;
    let freq = exact_freq(
        big(dp.d) * big(dp.d2) * big(q - 1) * big(r1) * big(r1),
        big(dp.big_n1) * big(dp.big_n1) * big(dp.big_n2) * big(dp.big_n2),
    )?;
    for j in 0..dp.big_n1 {
        for l in 0..l_order {
            let inner: Vec<Vec<(usize, i128)>> = (0..outer_count)
                .map(|i| {
                    let mut acc = ProductSum::new(f.p() as u32);
                    for i2 in 0..inner_count {
                        let shifted = i + outer_count * i2;
                        acc.add_terms_product(eta1.get(dp.n0 * shifted + j), eta_sub.get(shifted + l));
                    }
                    acc.finish().terms()
                })
                .collect();
            for k in 0..dp.big_n2 {
                let s = twisted_sum(outer_count, dp.n0, k, &eta2, |i| &inner[i as usize]);
                let w = row_weight(n, q, 1, 1, &s)?;
                dist.add(w, freq.clone())?;
            }
        }
    }
    Ok(dist)
}

/// The binary case of [`table3`]: here `d1 = N1`, `d2 = N2`, `d = N1`.
pub fn table4(spec: &CodeSpec, book: &PeriodBook) -> Result<WeightDistribution> {
    if spec.q() != 2 {
        return Err(invalid(format!("table4 needs q = 2, got q = {}", spec.q())));
    }
    let dp = derive_params(spec)?;
    if dp.d1 != dp.big_n1 || dp.d2 != dp.big_n2 || dp.d != dp.big_n1 {
        return Err(internal(format!("binary parameters do not degenerate: {dp:?}")));
    }
    table3(spec, book)
}

/// Which table applies to a spec.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Table1,
    Table2,
    Table3,
    Table4,
}

pub fn select_table(spec: &CodeSpec) -> Result<TableKind> {
    let orders = spec.orders();
    match (orders.len(), spec.with_unit_term()) {
        (2, false) if orders.contains(&1) => Ok(TableKind::Table2),
        (2, false) => Ok(TableKind::Table1),
        (2, true) if spec.q() == 2 => Ok(TableKind::Table4),
        (2, true) => Ok(TableKind::Table3),
        _ => Err(Error::InvalidParameter(format!(
            "no closed-form table for {} orders{}",
            orders.len(),
            if spec.with_unit_term() { " plus the unit term" } else { "" }
        ))),
    }
}

/// Evaluates the applicable table.
pub fn closed_form_distribution(spec: &CodeSpec, book: &PeriodBook) -> Result<WeightDistribution> {
    match select_table(spec)? {
        TableKind::Table1 => table1(spec, book),
        TableKind::Table2 => table2(spec, book),
        TableKind::Table3 => table3(spec, book),
        TableKind::Table4 => table4(spec, book),
    }
}

/// Closed-form distribution collapsed to distinct codewords.
pub fn closed_form_codewords(spec: &CodeSpec, book: &PeriodBook) -> Result<WeightDistribution> {
    let tuples = closed_form_distribution(spec, book)?;
    Ok(tuples.collapse_to_codewords()?.0)
}

/// `1+45x^11+15x^12+3x^15`: ascending weights, unit coefficients omitted.
pub fn enumerator_string(dist: &WeightDistribution) -> Result<String> {
    if dist.level() != Level::Codeword {
        return Err(invalid("enumerator strings are for codeword-level distributions"));
    }
    let one = BigUint::from(1u32);
    let terms: Vec<String> = dist
        .entries()
        .iter()
        .map(|(&w, f)| match w {
            0 => f.to_string(),
            _ => {
                let coeff = if *f == one { String::new() } else { f.to_string() };
                let power = if w == 1 { "x".to_string() } else { format!("x^{w}") };
                format!("{coeff}{power}")
            }
        })
        .collect();
    Ok(terms.join("+"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace_code::{distribution_bruteforce, DEFAULT_MAX_TUPLES};

    fn spec(q: u64, m: u32, orders: &[u64], unit: bool) -> CodeSpec {
        CodeSpec::from_params(q, m, orders.to_vec(), unit).unwrap()
    }

    fn enumerator(spec: &CodeSpec) -> String {
        let book = PeriodBook::new(spec.field());
        enumerator_string(&closed_form_codewords(spec, &book).unwrap()).unwrap()
    }

    fn oracle_enumerator(spec: &CodeSpec) -> String {
        let d = distribution_bruteforce(spec, DEFAULT_MAX_TUPLES).unwrap();
        enumerator_string(&d.collapse_to_codewords().unwrap().0).unwrap()
    }

    #[test]
    fn derived_examples() {
        let dp = derive_params(&spec(4, 2, &[5, 3], false)).unwrap();
        assert_eq!((dp.n0, dp.d1, dp.d2, dp.d), (5, 1, 5, 1));
        assert_eq!((dp.big_n1, dp.big_n2), (3, 5));
        let dp = derive_params(&spec(9, 2, &[5, 16], false)).unwrap();
        assert_eq!((dp.n0, dp.d1, dp.d2, dp.d), (10, 2, 5, 2));
        let dp = derive_params(&spec(7, 2, &[3, 16], false)).unwrap();
        assert_eq!((dp.n0, dp.d1, dp.d2, dp.d), (8, 8, 1, 8));
        assert!(derive_params(&spec(4, 2, &[5], false)).is_err());
    }

    #[test]
    fn table1_examples() {
        assert_eq!(enumerator(&spec(4, 2, &[5, 3], false)), "1+45x^11+15x^12+3x^15");
        assert_eq!(enumerator(&spec(8, 2, &[9, 7], false)), "1+441x^55+63x^56+7x^63");
        assert_eq!(
            enumerator(&spec(9, 2, &[5, 16], false)),
            "1+16x^40+40x^64+640x^68+2560x^70+2560x^72+640x^75+104x^80"
        );
        assert_eq!(enumerator(&spec(7, 2, &[3, 16], false)), "1+288x^41+48x^42+6x^48");
    }

    #[test]
    fn table1_tuple_total() {
        let s = spec(9, 2, &[5, 16], false);
        let d = table1(&s, &PeriodBook::new(s.field())).unwrap();
        assert_eq!(d.total(), BigUint::from(81u32 * 81));
    }

    #[test]
    fn table3_examples() {
        assert_eq!(
            enumerator(&spec(4, 2, &[5, 3], true)),
            "1+30x^9+54x^10+45x^11+105x^12+21x^15"
        );
        assert_eq!(
            enumerator(&spec(8, 2, &[9, 7], true)),
            "1+252x^49+1372x^54+441x^55+1827x^56+203x^63"
        );
        let s = spec(4, 2, &[5, 3], true);
        let d = table3(&s, &PeriodBook::new(s.field())).unwrap();
        assert_eq!(d.total(), BigUint::from(4u32 * 16 * 16));
    }

    #[test]
    fn table4_example() {
        let s = spec(2, 4, &[5, 3], true);
        assert_eq!(select_table(&s).unwrap(), TableKind::Table4);
        assert_eq!(
            enumerator(&s),
            "1+5x^3+3x^5+25x^6+30x^7+30x^8+25x^9+3x^10+5x^12+x^15"
        );
        assert!(table4(&spec(4, 2, &[5, 3], true), &PeriodBook::new(s.field())).is_err());
    }

    #[test]
    fn table4_weight_symmetry() {
        // n1 n2 / 2 +- eta_j eta_k / 2 both occur for every (j, k)
        let s = spec(2, 4, &[5, 3], true);
        let book = PeriodBook::new(s.field());
        let d = table4(&s, &book).unwrap();
        let e1 = book.over_field(3).unwrap();
        let e2 = book.over_field(5).unwrap();
        for j in 0..3 {
            for k in 0..5 {
                let prod = (e1.get(j) * e2.get(k)).to_integer().unwrap();
                for sign in [-1, 1] {
                    let w = (15 + sign * prod) / 2;
                    assert!(d.frequency(w as u64) > BigUint::from(0u32), "weight {w}");
                }
            }
        }
    }

    #[test]
    fn table2_matches_oracle_and_table1() {
        for (q, m, orders) in [(4, 2, [1, 3]), (8, 2, [1, 7]), (4, 2, [5, 1]), (9, 2, [1, 16]), (2, 4, [1, 5])] {
            let s = spec(q, m, &orders, false);
            assert_eq!(select_table(&s).unwrap(), TableKind::Table2);
            let book = PeriodBook::new(s.field());
            let t2 = table2(&s, &book).unwrap();
            assert_eq!(t2.total(), BigUint::from(q * s.field().r()));
            let from2 = enumerator_string(&t2.collapse_to_codewords().unwrap().0).unwrap();
            let from1 = enumerator_string(
                &table1(&s, &book).unwrap().collapse_to_codewords().unwrap().0,
            )
            .unwrap();
            assert_eq!(from2, oracle_enumerator(&s), "{q} {m} {orders:?}");
            assert_eq!(from1, from2);
        }
    }

    #[test]
    fn lemma_sourced_tables_agree() {
        for (q, m, orders, unit) in [(4, 2, vec![5, 3], false), (8, 2, vec![9, 7], true), (9, 2, vec![5, 16], false)] {
            let s = spec(q, m, &orders, unit);
            let direct = closed_form_codewords(&s, &PeriodBook::new(s.field())).unwrap();
            let lemma = closed_form_codewords(&s, &PeriodBook::new(s.field()).prefer_lemmas(true)).unwrap();
            assert_eq!(direct, lemma);
        }
    }

    #[test]
    fn zero_weight_tuples_example_4_3() {
        let s = spec(4, 2, &[5, 3], false);
        let d = table1(&s, &PeriodBook::new(s.field())).unwrap();
        // (r-1)/d2 = 3 tuples with b != 0 land on weight 0, plus the zero tuple
        assert_eq!(d.frequency(0), BigUint::from(4u32));
    }

    #[test]
    fn fault_changes_the_result() {
        let s = spec(4, 2, &[5, 3], false);
        let book = PeriodBook::new(s.field());
        let good = closed_form_distribution(&s, &book).unwrap();
        book.inject_fault(5, 1, CycInt::from_int(2, 7)).unwrap();
        if let Ok(bad) = closed_form_distribution(&s, &book) { assert_ne!(bad, good) }
    }

    #[test]
    fn enumerator_formatting() {
        let mut d = WeightDistribution::new(Level::Codeword, 5, 2);
        d.add(0, BigUint::from(1u32)).unwrap();
        assert_eq!(enumerator_string(&d).unwrap(), "1");
        d.add(1, BigUint::from(1u32)).unwrap();
        d.add(3, BigUint::from(2u32)).unwrap();
        assert_eq!(enumerator_string(&d).unwrap(), "1+x+2x^3");
        let t = WeightDistribution::new(Level::Tuple, 5, 2);
        assert!(enumerator_string(&t).is_err());
    }

    #[test]
    fn shapes_without_tables() {
        assert!(select_table(&spec(4, 2, &[15], false)).is_err());
        assert!(select_table(&spec(16, 1, &[3, 5], false)).is_ok());
    }
}
