//! Residue arithmetic modulo a small prime. Every function expects operands
//! already reduced into `0..p`.

/// Characteristics are capped so that sums of `2^32` products fit in a `u64`.
pub const MAX_CHARACTERISTIC: u32 = 1 << 16;

#[inline]
pub fn add(a: u32, b: u32, p: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn neg(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub fn pow(mut base: u32, mut exp: u64, p: u32) -> u32 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse by Fermat; `a` must be nonzero.
pub fn inv(a: u32, p: u32) -> u32 {
    debug_assert!(a != 0);
    pow(a, p as u64 - 2, p)
}

pub fn reduce(n: i64, p: u32) -> u32 {
    n.rem_euclid(p as i64) as u32
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        let primes: Vec<u32> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn inverses_mod_seven() {
        for a in 1..7 {
            assert_eq!(mul(a, inv(a, 7), 7), 1);
        }
        assert_eq!(mul(2, 2, 3), 1);
        assert_eq!(reduce(-1, 3), 2);
    }
}
