//! Closed forms for Gauss periods in the quadratic, semi-primitive and
//! index-2 regimes. All values come out as rational integers.

use super::{class_number_imaginary, cyclotomic_class, additive_character};
use super::{CycInt, GaussPeriodTable, PeriodSource};
use crate::arith::{checked_pow, isqrt, is_prime, legendre, multiplicative_order, pow_mod};
use crate::error::{internal, Error, Result};
use crate::field::Field;

fn precondition(msg: impl Into<String>) -> Error {
    Error::LemmaPrecondition(msg.into())
}

fn exact_div(num: i128, den: i128, what: &str) -> Result<i128> {
    if num % den != 0 {
        return Err(internal(format!("{what}: {num} is not divisible by {den}")));
    }
    Ok(num / den)
}

fn int_table(p: u64, field_order: u64, values: Vec<i128>, source: PeriodSource) -> GaussPeriodTable {
    let values = values
        .into_iter()
        .map(|v| CycInt::from_int(p as u32, v))
        .collect();
    GaussPeriodTable::new(p as u32, field_order, values, source)
}

fn field_order(p: u64, exp: u64) -> Result<u64> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| checked_pow(p, e))
        .ok_or_else(|| precondition(format!("{p}^{exp} overflows")))
}

/// Quadratic periods `eta^(2, r)`, `r = p^(sm)`.
///
/// Only the case `sm` even is accepted, where `sqrt(r)` is an integer and
/// both periods are rational; odd `sm` must go through the direct sum.
pub fn period_quadratic(p: u64, s: u32, m: u32) -> Result<GaussPeriodTable> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(precondition("quadratic periods need odd characteristic"));
    }
    let sm = s as u64 * m as u64;
    if sm == 0 || sm % 2 == 1 {
        return Err(precondition(format!(
            "s*m = {sm} is odd, the period is irrational; use direct computation"
        )));
    }
    let r = field_order(p, sm)?;
    let root = field_order(p, sm / 2)? as i128;
    let sign_odd = if (sm - 1).is_multiple_of(2) { 1 } else { -1 };
    let numerator = if p % 4 == 1 {
        -1 + sign_odd * root
    } else {
        // (sqrt(-1))^(sm) = (-1)^(sm/2)
        let i_pow = if (sm / 2).is_multiple_of(2) { 1 } else { -1 };
        -1 + sign_odd * i_pow * root
    };
    let eta0 = exact_div(numerator, 2, "quadratic period")?;
    Ok(int_table(p, r, vec![eta0, -1 - eta0], PeriodSource::Quadratic))
}

/// Finds `(e, f)` with `e` least such that `p^e = -1 (mod N)` and `r = p^(2ef)`.
pub fn semiprimitive_params(p: u64, n: u64, r: u64) -> Option<(u32, u32)> {
    if n < 2 {
        return None;
    }
    let ord = multiplicative_order(p, n)?;
    let e = (1..=ord).find(|&e| pow_mod(p, e, n) == n - 1)? as u32;
    let mut exp = 0u32;
    let mut rest = r;
    while rest.is_multiple_of(p) {
        rest /= p;
        exp += 1;
    }
    if rest != 1 || !exp.is_multiple_of(2 * e) {
        return None;
    }
    Some((e, exp / (2 * e)))
}

/// Semi-primitive periods of order `N` over `GF(p^(2ef))`.
pub fn period_semiprimitive(p: u64, e: u32, f: u32, n: u64) -> Result<GaussPeriodTable> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n < 2 || e == 0 || f == 0 {
        return Err(precondition("need N >= 2 and positive e, f"));
    }
    if pow_mod(p, e as u64, n) != n - 1 {
        return Err(precondition(format!("{p}^{e} is not -1 mod {n}")));
    }
    if let Some(smaller) = (1..e).find(|&k| pow_mod(p, k as u64, n) == n - 1) {
        return Err(precondition(format!(
            "e = {e} is not minimal, {p}^{smaller} = -1 mod {n}"
        )));
    }
    let r = field_order(p, 2 * e as u64 * f as u64)?;
    let root = field_order(p, e as u64 * f as u64)? as i128;
    let pe1 = field_order(p, e as u64)? as i128 + 1;
    let ni = n as i128;
    let mut values = vec![0i128; n as usize];
    let all_odd = f % 2 == 1 && p % 2 == 1 && (pe1 / ni) % 2 == 1;
    if all_odd {
        let other = exact_div(-(root + 1), ni, "semi-primitive period")?;
        values.fill(other);
        values[(n / 2) as usize] = exact_div((ni - 1) * root - 1, ni, "semi-primitive period")?;
    } else {
        let sign_f: i128 = if f.is_multiple_of(2) { 1 } else { -1 };
        let other = exact_div(sign_f * root - 1, ni, "semi-primitive period")?;
        values.fill(other);
        values[0] = exact_div(-sign_f * (ni - 1) * root - 1, ni, "semi-primitive period")?;
    }
    Ok(int_table(p, r, values, PeriodSource::SemiPrimitive))
}

/// Intermediate quantities of the index-2 evaluation, exposed for diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Index2Data {
    pub class_number: u64,
    pub a: i128,
    pub b: i128,
    /// `P^(k)`
    pub scale: i128,
    /// `2 A^(k)` and `2 B^(k)`: `((a + b sqrt(-N))/2)^k = (u + v sqrt(-N))/2`.
    pub u: i128,
    pub v: i128,
}

/// Solves `4p^h = a^2 + N b^2`, `a = -2 p^((N-1+2h)/4) (mod N)`, `b > 0`, `p` not dividing `b`.
fn index2_representation(n: u64, p: u64, h: u64) -> Result<(i128, i128)> {
    let four_ph = 4 * field_order(p, h)? as i128;
    let ni = n as i128;
    let exp = n - 1 + 2 * h;
    if !exp.is_multiple_of(4) {
        return Err(internal(format!("(N-1+2h)/4 is not integral for N={n}, h={h}")));
    }
    let target = (ni - 2 * pow_mod(p, exp / 4, n) as i128).rem_euclid(ni);
    let mut found = Vec::new();
    let b_max = isqrt((four_ph / ni) as u128) as i128;
    for b in 1..=b_max {
        if b % p as i128 == 0 {
            continue;
        }
        let rest = four_ph - ni * b * b;
        if rest < 0 {
            break;
        }
        let root = isqrt(rest as u128) as i128;
        if root * root != rest {
            continue;
        }
        for a in [root, -root] {
            if a.rem_euclid(ni) == target && !found.contains(&(a, b)) {
                found.push((a, b));
            }
        }
    }
    match found.as_slice() {
        [single] => Ok(*single),
        [] => Err(precondition(format!(
            "no (a, b) with 4*{p}^{h} = a^2 + {n} b^2 meets the congruence"
        ))),
        many => Err(internal(format!("(a, b) is not unique: {many:?}"))),
    }
}

fn index2_data(n: u64, p: u64, k: u32) -> Result<Index2Data> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n <= 3 || n % 4 != 3 || !is_prime(n) {
        return Err(precondition(format!(
            "N = {n} must be a prime > 3 with N = 3 mod 4"
        )));
    }
    if p == n {
        return Err(precondition("p must differ from N"));
    }
    if multiplicative_order(p, n) != Some((n - 1) / 2) {
        return Err(precondition(format!(
            "<{p}> does not have index 2 in (Z/{n})*"
        )));
    }
    if k == 0 {
        return Err(precondition("k must be positive"));
    }
    let h = class_number_imaginary(n)?;
    let (a, b) = index2_representation(n, p, h)?;

    let ni = n as i128;
    let mut u = a;
    let mut v = b;
    for _ in 1..k {
        let nu = a * u - ni * b * v;
        let nv = a * v + b * u;
        if nu % 2 != 0 || nv % 2 != 0 {
            return Err(internal("odd intermediate in (a + b sqrt(-N))/2 power"));
        }
        u = nu / 2;
        v = nv / 2;
    }

    let num = k as i128 * (ni - 1 - 2 * h as i128);
    if num < 0 || num % 4 != 0 {
        return Err(precondition(format!(
            "P^(k) exponent k(N-1-2h)/4 = {num}/4 is not a non-negative integer \
             (N={n}, h={h}, k={k})"
        )));
    }
    let mag = field_order(p, (num / 4) as u64)? as i128;
    let scale = if (k - 1).is_multiple_of(2) { mag } else { -mag };
    Ok(Index2Data {
        class_number: h,
        a,
        b,
        scale,
        u,
        v,
    })
}

/// Index-2 periods of order `N` over `GF(p^((N-1)k/2))`.
///
/// Residue classes (`(u/N) = 1`) and non-residue classes get the two
/// non-trivial values in the lemma's own labelling. That labelling matches a
/// particular choice of primitive element; use [`orient_index2`] to pin it to
/// a constructed field.
pub fn period_index2(n: u64, p: u64, k: u32) -> Result<GaussPeriodTable> {
    let data = index2_data(n, p, k)?;
    let r = field_order(p, (n - 1) / 2 * k as u64)?;
    let ni = n as i128;
    let pa2 = data.scale * data.u; // 2 P A
    let pb2n = data.scale * data.v * ni; // 2 P B N
    let eta0 = exact_div(pa2 * (ni - 1) - 2, 2 * ni, "index-2 period")?;
    let residue = exact_div(-(pa2 + pb2n + 2), 2 * ni, "index-2 period")?;
    let nonresidue = exact_div(-(pa2 - pb2n + 2), 2 * ni, "index-2 period")?;
    let values = (0..n)
        .map(|i| match legendre(i as i64, n) {
            0 => eta0,
            1 => residue,
            _ => nonresidue,
        })
        .collect();
    Ok(int_table(p, r, values, PeriodSource::Index2))
}

/// Public access to the representation found for `(N, p, k)`.
pub fn index2_parameters(n: u64, p: u64, k: u32) -> Result<Index2Data> {
    index2_data(n, p, k)
}

/// Relabels an index-2 table so its class indices refer to `field`'s `alpha`.
///
/// Changing the primitive element can only swap the residue and non-residue
/// values, so one class sum over `C_1` decides the orientation.
pub fn orient_index2(table: &GaussPeriodTable, field: &Field) -> Result<GaussPeriodTable> {
    let n = table.order();
    if table.field_order() != field.r() {
        return Err(Error::InvalidParameter(format!(
            "table is over GF({}), field is GF({})",
            table.field_order(),
            field.r()
        )));
    }
    let p = field.p() as u32;
    let eta1 = cyclotomic_class(field, n, 1)?
        .fold(CycInt::zero(p), |acc, x| acc + additive_character(field, x));
    if &eta1 == table.get(1) {
        return Ok(table.clone());
    }
    let nonresidue = (2..n)
        .find(|&t| legendre(t as i64, n) == -1)
        .ok_or_else(|| internal("no quadratic non-residue"))?;
    if &eta1 != table.get(nonresidue as i64) {
        return Err(internal(format!(
            "C_1 sums to {eta1}, which matches neither index-2 value"
        )));
    }
    let values = (0..n as i64)
        .map(|i| table.get(i * nonresidue as i64).clone())
        .collect();
    Ok(GaussPeriodTable::new(p, field.r(), values, table.source()))
}
