#![allow(dead_code)]

use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use trialg::ring::q;
use trialg::{BasisChange, Matrix, Msc, Ring, RingElem};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> BigRational {
    q(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn random_elem(rng: &mut ChaCha8Rng, ring: &Ring) -> RingElem {
    match ring {
        Ring::PrimeField(p) => ring.from_int(rng.gen_range(0..*p as i64)),
        _ => ring.from_rational(&small_rational(rng)).unwrap(),
    }
}

pub fn random_matrix(rng: &mut ChaCha8Rng, ring: &Ring, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(ring, rows, cols, |_, _| random_elem(rng, ring))
}

/// Entries are zero with probability 1/2, so identities are not trivially violated.
pub fn random_msc(rng: &mut ChaCha8Rng, ring: &Ring, dim: usize, arity: usize) -> Msc {
    let cols = dim.pow(arity as u32);
    let m = Matrix::from_fn(ring, dim, cols, |_, _| if rng.gen_bool(0.5) { ring.zero() } else { random_elem(rng, ring) });
    Msc::new(dim, arity, m).unwrap()
}

pub fn random_gl(rng: &mut ChaCha8Rng, ring: &Ring, dim: usize) -> BasisChange {
    loop {
        if let Ok(g) = BasisChange::new(random_matrix(rng, ring, dim, dim)) {
            return g;
        }
    }
}

/// Every element of GL(2, GF(p)).
pub fn all_gl2(p: u64) -> Vec<BasisChange> {
    let ring = Ring::prime_field(p).unwrap();
    let mut out = Vec::new();
    for idx in 0..p.pow(4) {
        let e: Vec<i64> = (0..4).map(|k| ((idx / p.pow(3 - k)) % p) as i64).collect();
        let m = Matrix::from_rows(
            &ring,
            vec![vec![ring.from_int(e[0]), ring.from_int(e[1])], vec![ring.from_int(e[2]), ring.from_int(e[3])]],
        )
        .unwrap();
        if let Ok(g) = BasisChange::new(m) {
            out.push(g);
        }
    }
    out
}

pub fn rat(text: &str) -> BigRational {
    match Ring::Rationals.parse(text).unwrap() {
        RingElem::Rational(x) => x,
        _ => unreachable!(),
    }
}
