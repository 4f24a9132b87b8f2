//! p-adic lifting of a root mod p followed by rational reconstruction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PolySystem;
use crate::ring::{inv_mod, mul_mod, Polynomial, RingElem};

/// Numerators up to this size are recovered once the modulus allows it.
const NUMERATOR_BITS: u32 = 32;

fn modinv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn eval_mod(f: &Polynomial, x: &[BigInt], m: &BigInt) -> Option<BigInt> {
    let mut acc = BigInt::zero();
    for (mono, c) in f.terms() {
        let mut t = (c.numer() * modinv(c.denom(), m)?).mod_floor(m);
        for (i, &e) in mono.exponents().iter().enumerate() {
            if e > 0 {
                t = (t * x[i].modpow(&BigInt::from(e), m)).mod_floor(m);
            }
        }
        acc += t;
    }
    Some(acc.mod_floor(m))
}

fn derivative(f: &Polynomial, var: usize) -> Polynomial {
    Polynomial::from_terms(
        f.vars().clone(),
        f.terms().iter().filter(|(m, _)| m.exponents()[var] > 0).map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            let k = e[var];
            e[var] -= 1;
            (crate::ring::Monomial::from_exponents(e), c * BigRational::from_integer(k.into()))
        }),
    )
}

/// Solves `a·x = b` over GF(p) with free variables set to zero.
fn solve_mod_p(mut a: Vec<Vec<u64>>, mut b: Vec<u64>, ncols: usize, p: u64) -> Option<Vec<u64>> {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(piv) = (row..nrows).find(|&r| a[r][col] != 0) else { continue };
        a.swap(row, piv);
        b.swap(row, piv);
        let inv = inv_mod(a[row][col], p);
        for j in 0..ncols {
            a[row][j] = mul_mod(a[row][j], inv, p);
        }
        b[row] = mul_mod(b[row], inv, p);
        for r in 0..nrows {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for j in 0..ncols {
                    a[r][j] = (a[r][j] + p - mul_mod(f, a[row][j], p)) % p;
                }
                b[r] = (b[r] + p - mul_mod(f, b[row], p)) % p;
            }
        }
        pivots.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    if b[row..].iter().any(|&x| x != 0) {
        return None;
    }
    let mut x = vec![0u64; ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = b[r];
    }
    Some(x)
}

/// Rational `n/d` with `|n| ≤ num_bound`, `0 < d ≤ den_bound` and `n ≡ d·x (mod m)`.
fn reconstruct(x: &BigInt, m: &BigInt, num_bound: &BigInt, den_bound: &BigInt) -> Option<BigRational> {
    let (mut r0, mut r1) = (m.clone(), x.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > num_bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        (r0, r1, t0, t1) = (r1, r2, t1, t2);
    }
    if t1.is_zero() || &t1.abs() > den_bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// Lifts a root of `sys` mod p to a rational root with denominators at most
/// `den_bound`, verified exactly over ℚ; `None` when no such lift is found.
pub fn lift_witness(sys: &PolySystem, p: u64, root: &[u64], den_bound: u64) -> Option<Vec<BigRational>> {
    let nvars = sys.vars().len();
    let pb = BigInt::from(p);
    let den = BigInt::from(den_bound);
    let num_bound = BigInt::one() << NUMERATOR_BITS;
    let target = &num_bound * &den * 2u32;
    let jac: Vec<Vec<Polynomial>> =
        sys.polys().iter().map(|f| (0..nvars).map(|v| derivative(f, v)).collect()).collect();
    let root_big: Vec<BigInt> = root.iter().map(|&r| BigInt::from(r)).collect();
    let jmat: Vec<Vec<u64>> = jac
        .iter()
        .map(|row| row.iter().map(|d| eval_mod(d, &root_big, &pb).map(|v| v.to_u64().unwrap())).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;

    let mut x = root_big;
    let mut modulus = pb.clone();
    while modulus <= target {
        let next = &modulus * &pb;
        let mut rhs = Vec::with_capacity(sys.polys().len());
        for f in sys.polys() {
            let v = eval_mod(f, &x, &next)?;
            if !(&v % &modulus).is_zero() {
                return None;
            }
            let r = (&v / &modulus).to_u64().unwrap();
            rhs.push((p - r) % p);
        }
        let delta = solve_mod_p(jmat.clone(), rhs, nvars, p)?;
        for (xi, d) in x.iter_mut().zip(delta) {
            *xi = (&*xi + &modulus * BigInt::from(d)).mod_floor(&next);
        }
        modulus = next;
    }
    let values: Vec<BigRational> =
        x.iter().map(|xi| reconstruct(xi, &modulus, &num_bound, &den)).collect::<Option<Vec<_>>>()?;
    let elems: Vec<RingElem> = values.iter().cloned().map(RingElem::Rational).collect();
    sys.is_root(&elems).ok()?.then_some(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{q, rational_mod_p};

    #[test]
    fn reconstructs_small_fractions() {
        let m = BigInt::from(5u64).pow(20);
        let nb = BigInt::one() << 32;
        let db = BigInt::from(64);
        for (n, d) in [(1, 3), (-2, 9), (7, 1), (0, 1), (-1, 64)] {
            let x = q(n, d);
            let res = (x.numer() * modinv(x.denom(), &m).unwrap()).mod_floor(&m);
            assert_eq!(reconstruct(&res, &m, &nb, &db), Some(x));
        }
    }

    #[test]
    fn lifts_isolated_rational_root() {
        // 3x - 1 = 0, y^2 - x*y = 0 has the rational root (1/3, 1/3)
        let sys = PolySystem::parse(&["x", "y"], &["3*x - 1", "y - x"]).unwrap();
        let r = rational_mod_p(&q(1, 3), 7).unwrap();
        let lifted = lift_witness(&sys, 7, &[r, r], 64).unwrap();
        assert_eq!(lifted, vec![q(1, 3), q(1, 3)]);
    }

    #[test]
    fn irrational_root_does_not_lift() {
        // x^2 = 2 has roots 3, 4 mod 7 but none over Q
        let sys = PolySystem::parse(&["x"], &["x^2 - 2"]).unwrap();
        assert_eq!(lift_witness(&sys, 7, &[3], 64), None);
    }
}
