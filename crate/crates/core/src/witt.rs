//! Witt numbers: the dimension of the weight-`w` part of the free Lie
//! algebra on `g` generators.

/// The Möbius function.
pub fn mobius(mut n: u64) -> i64 {
    assert!(n > 0, "mobius is defined on positive integers");
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `(1/w) Σ_{e | w} μ(e) g^{w/e}`, or `None` on overflow.
pub fn witt_number(g: u64, w: u64) -> Option<u64> {
    if w == 0 {
        return Some(0);
    }
    let mut total: i128 = 0;
    for e in (1..=w).filter(|e| w % e == 0) {
        let power = (g as i128).checked_pow((w / e).try_into().ok()?)?;
        total = total.checked_add(mobius(e) as i128 * power)?;
    }
    u64::try_from(total / w as i128).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        let mu: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(mu, [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn witt_values() {
        let two: Vec<u64> = (1..=6).map(|w| witt_number(2, w).unwrap()).collect();
        assert_eq!(two, [2, 1, 2, 3, 6, 9]);
        let one: Vec<u64> = (1..=4).map(|w| witt_number(1, w).unwrap()).collect();
        assert_eq!(one, [1, 0, 0, 0]);
        assert_eq!(witt_number(3, 3), Some(8));
    }
}
