use crate::arith::{gcd, is_prime};
use crate::error::{invalid, Result};

/// Class number of `Q(sqrt(-N))` for a prime `N = 3 (mod 4)`.
///
/// Counts reduced primitive positive definite forms `(A, B, C)` with
/// `B^2 - 4AC = -N`, `|B| <= A <= C`, and `B >= 0` whenever `|B| = A` or `A = C`.
pub fn class_number_imaginary(n: u64) -> Result<u64> {
    if n % 4 != 3 || !is_prime(n) {
        return Err(invalid(format!(
            "class number needs a prime N = 3 mod 4, got {n}"
        )));
    }
    let disc = n as i64;
    let mut count = 0;
    // reduced forms satisfy 3A^2 <= N
    let mut a: i64 = 1;
    while 3 * a * a <= disc {
        for b in -a..=a {
            if b.rem_euclid(2) != 1 {
                continue;
            }
            let num = b * b + disc;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a {
                continue;
            }
            if (b.abs() == a || a == c) && b < 0 {
                continue;
            }
            if gcd(gcd(a as u64, b.unsigned_abs()), c as u64) != 1 {
                continue;
            }
            count += 1;
        }
        a += 1;
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(class_number_imaginary(3).unwrap(), 1);
        assert_eq!(class_number_imaginary(7).unwrap(), 1);
        assert_eq!(class_number_imaginary(11).unwrap(), 1);
        assert_eq!(class_number_imaginary(23).unwrap(), 3);
        assert_eq!(class_number_imaginary(31).unwrap(), 3);
        assert_eq!(class_number_imaginary(47).unwrap(), 5);
        assert_eq!(class_number_imaginary(163).unwrap(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(class_number_imaginary(5).is_err());
        assert!(class_number_imaginary(15).is_err());
    }
}
