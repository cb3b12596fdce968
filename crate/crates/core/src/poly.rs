//! Dense polynomials over GF(p), only as much as field construction needs.
//!
//! Coefficients are stored lowest degree first and kept trimmed (no trailing
//! zeros; the zero polynomial is the empty vector).

use crate::arith::pow_mod;

pub(crate) type Poly = Vec<u64>;

pub(crate) fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let len = a.len().max(b.len());
    let out = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn rem(a: &[u64], m: &[u64], p: u64) -> Poly {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    rem(&prod, m, p)
}

pub(crate) fn pow_mod_poly(base: &[u64], mut exp: u128, m: &[u64], p: u64) -> Poly {
    let mut acc = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(&acc, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// Rabin's test: `f` of degree `D` is irreducible iff `x^(p^D) = x (mod f)`
/// and `gcd(f, x^(p^(D/l)) - x) = 1` for every prime `l | D`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 1 {
        return true;
    }
    let x = vec![0, 1];
    // frob[i] = x^(p^i) mod f
    let mut frob = vec![rem(&x, f, p)];
    for i in 1..=deg {
        let next = pow_mod_poly(&frob[i - 1], p as u128, f, p);
        frob.push(next);
    }
    if sub(&frob[deg], &x, p) != Vec::<u64>::new() {
        return false;
    }
    crate::arith::prime_factors(deg as u64).into_iter().all(|l| {
        let diff = sub(&frob[deg / l as usize], &x, p);
        let g = gcd(f, &diff, p);
        g.len() == 1
    })
}

/// Digits of `v` in base `p`, lowest first, padded to `len`.
pub(crate) fn unpack(mut v: u64, p: u64, len: usize) -> Poly {
    let mut out = vec![0; len];
    for slot in out.iter_mut() {
        *slot = v % p;
        v /= p;
    }
    out
}

pub(crate) fn pack(f: &[u64], p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| acc * p + c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_irreducibles() {
        // x^4 + x + 1 over GF(2)
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
        // x^4 + 1 = (x + 1)^4
        assert!(!is_irreducible(&[1, 0, 0, 0, 1], 2));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2, no roots but reducible
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        // x^2 + 1 over GF(7) since -1 is a non-residue
        assert!(is_irreducible(&[1, 0, 1], 7));
        assert!(!is_irreducible(&[1, 0, 1], 5));
    }

    #[test]
    fn count_irreducible_quartics_over_gf3() {
        // Gauss's formula: (3^4 - 3^2) / 4 = 18
        let count = (0..81u64)
            .filter(|&v| {
                let mut f = unpack(v, 3, 4);
                f.push(1);
                is_irreducible(&f, 3)
            })
            .count();
        assert_eq!(count, 18);
    }

    #[test]
    fn pack_roundtrip() {
        assert_eq!(pack(&unpack(70, 3, 4), 3), 70);
    }
}
