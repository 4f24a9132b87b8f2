//! Buchberger's algorithm over ℚ in grevlex order.
//!
//! Polynomials are kept fraction-free as primitive integer polynomials
//! (content removed after every reduction step); pairs are selected by the
//! sugar strategy with ties broken by lcm and then by index, so runs are
//! reproducible.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Effort, PolySystem, SolveOutcome, SolveStatus};
use crate::error::Result;
use crate::ring::{Monomial, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_pairs: u64,
    /// Pairs whose lcm exceeds this total degree are not reduced.
    pub max_degree: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_pairs: 20_000, max_degree: 12 }
    }
}

#[derive(Debug, Clone)]
struct GPoly {
    /// Descending grevlex order, primitive, positive leading coefficient.
    terms: Vec<(Monomial, BigInt)>,
    sugar: u32,
}

impl GPoly {
    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }
}

type Work = BTreeMap<Monomial, BigInt>;

fn add_into(h: &mut Work, m: Monomial, c: BigInt) {
    use std::collections::btree_map::Entry;
    match h.entry(m) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn make_primitive(h: &mut Work) {
    let mut g = BigInt::zero();
    for c in h.values() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if let Some((_, lc)) = h.iter().next_back() {
        if lc.is_negative() {
            g = -g;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for c in h.values_mut() {
            *c = &*c / &g;
        }
    }
}

fn to_gpoly(h: Work, sugar: u32) -> GPoly {
    GPoly { terms: h.into_iter().rev().collect(), sugar }
}

/// Fully reduces `h` modulo `basis`. Returns the remainder and its sugar.
fn reduce(mut h: Work, mut sugar: u32, basis: &[GPoly], active: &[bool]) -> (Work, u32) {
    let mut cursor: Option<Monomial> = None;
    loop {
        let range: Box<dyn DoubleEndedIterator<Item = (&Monomial, &BigInt)>> = match &cursor {
            Some(c) => Box::new(h.range(..c.clone())),
            None => Box::new(h.iter()),
        };
        let mut found = None;
        for (m, c) in range.rev() {
            if let Some(gi) = (0..basis.len()).find(|&i| active[i] && basis[i].lm().divides(m)) {
                found = Some((m.clone(), c.clone(), gi));
                break;
            }
        }
        let Some((m, c, gi)) = found else { break };
        let g = &basis[gi];
        let q = g.lm().quotient_of(&m);
        let d = c.gcd(g.lc());
        let fh = g.lc() / &d;
        let fg = &c / &d;
        if !fh.is_one() {
            for v in h.values_mut() {
                *v *= &fh;
            }
        }
        for (gm, gc) in &g.terms {
            add_into(&mut h, gm.mul(&q), -(&fg * gc));
        }
        debug_assert!(!h.contains_key(&m));
        sugar = sugar.max(q.degree() + g.sugar);
        make_primitive(&mut h);
        cursor = Some(m);
    }
    (h, sugar)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

fn make_pair(basis: &[GPoly], i: usize, j: usize) -> Pair {
    let lcm = basis[i].lm().lcm(basis[j].lm());
    let si = basis[i].sugar + lcm.degree() - basis[i].lm().degree();
    let sj = basis[j].sugar + lcm.degree() - basis[j].lm().degree();
    Pair { i, j, lcm, sugar: si.max(sj) }
}

fn s_work(f: &GPoly, g: &GPoly, lcm: &Monomial) -> Work {
    let d = f.lc().gcd(g.lc());
    let cf = g.lc() / &d;
    let cg = f.lc() / &d;
    let qf = f.lm().quotient_of(lcm);
    let qg = g.lm().quotient_of(lcm);
    let mut h = Work::new();
    for (m, c) in &f.terms {
        add_into(&mut h, m.mul(&qf), &cf * c);
    }
    for (m, c) in &g.terms {
        add_into(&mut h, m.mul(&qg), -(&cg * c));
    }
    make_primitive(&mut h);
    h
}

fn from_polynomial(p: &Polynomial) -> GPoly {
    let terms = p.primitive_integer_terms();
    let sugar = p.total_degree();
    GPoly { terms, sugar }
}

fn to_monic_polynomial(g: &GPoly, vars: &Arc<[String]>) -> Polynomial {
    let lc = BigRational::from_integer(g.lc().clone());
    Polynomial::from_terms(
        vars.clone(),
        g.terms.iter().map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone()) / &lc)),
    )
}

/// Runs Buchberger's algorithm on `sys` under `caps`.
///
/// A reduced basis `{1}` certifies that the system has no common zero over
/// the algebraic closure of ℚ; hitting a cap yields `Inconclusive`.
pub fn buchberger(sys: &PolySystem, caps: Caps) -> Result<SolveOutcome> {
    let vars = sys.shared_vars();
    let nvars = vars.len();
    let mut basis: Vec<GPoly> = Vec::new();
    let mut effort = Effort { pairs_considered: Some(0), pairs_reduced_to_zero: Some(0), max_degree_reached: Some(0), ..Effort::default() };
    let certified = |effort: Effort| SolveOutcome {
        status: SolveStatus::CertifiedEmptyOverClosure,
        witness: None,
        prime: None,
        basis: Some(vec![Polynomial::constant(vars.clone(), BigRational::one())]),
        exhaustive: true,
        effort,
    };
    for p in sys.polys() {
        let g = from_polynomial(p);
        if g.is_constant() {
            return Ok(certified(effort));
        }
        basis.push(g);
    }
    let mut active = vec![true; basis.len()];
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push(make_pair(&basis, i, j));
            pending.insert((i, j));
        }
    }
    let mut considered = 0u64;
    let mut zero_reductions = 0u64;
    let mut max_deg = basis.iter().map(|g| g.lm().degree()).max().unwrap_or(0);
    let mut cap_hit: Option<String> = None;

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (x, y) = (&pairs[a], &pairs[b]);
                x.sugar.cmp(&y.sugar).then_with(|| x.lcm.cmp(&y.lcm)).then_with(|| (x.i, x.j).cmp(&(y.i, y.j)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        pending.remove(&(pair.i, pair.j));
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        if fi.lm().is_coprime(fj.lm()) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].lm().divides(&pair.lcm)
                && !pending.contains(&(pair.i.min(k), pair.i.max(k)))
                && !pending.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chain {
            continue;
        }
        if pair.lcm.degree() > caps.max_degree {
            cap_hit.get_or_insert_with(|| format!("max_degree {}", caps.max_degree));
            continue;
        }
        considered += 1;
        if considered > caps.max_pairs {
            cap_hit = Some(format!("max_pairs {}", caps.max_pairs));
            break;
        }
        max_deg = max_deg.max(pair.lcm.degree());
        let s = s_work(fi, fj, &pair.lcm);
        let (h, sugar) = reduce(s, pair.sugar, &basis, &active);
        if h.is_empty() {
            zero_reductions += 1;
            continue;
        }
        let g = to_gpoly(h, sugar);
        max_deg = max_deg.max(g.lm().degree());
        if g.is_constant() {
            effort.pairs_considered = Some(considered);
            effort.pairs_reduced_to_zero = Some(zero_reductions);
            effort.max_degree_reached = Some(max_deg);
            return Ok(certified(effort));
        }
        let n = basis.len();
        basis.push(g);
        active.push(true);
        for k in 0..n {
            pairs.push(make_pair(&basis, k, n));
            pending.insert((k, n));
        }
    }
    effort.pairs_considered = Some(considered.min(caps.max_pairs));
    effort.pairs_reduced_to_zero = Some(zero_reductions);
    effort.max_degree_reached = Some(max_deg);
    if let Some(cap) = cap_hit {
        effort.cap_hit = Some(cap);
        return Ok(SolveOutcome {
            status: SolveStatus::Inconclusive,
            witness: None,
            prime: None,
            basis: None,
            exhaustive: false,
            effort,
        });
    }

    let reduced = reduce_basis(basis);
    let polys: Vec<Polynomial> = reduced.iter().map(|g| to_monic_polynomial(g, &vars)).collect();
    let witness = extract_linear_point(&polys, nvars);
    Ok(SolveOutcome {
        status: if witness.is_some() { SolveStatus::Witness } else { SolveStatus::ConsistentOverClosure },
        witness,
        prime: None,
        basis: Some(polys),
        exhaustive: true,
        effort,
    })
}

/// Minimal, inter-reduced basis sorted by ascending leading monomial.
fn reduce_basis(basis: Vec<GPoly>) -> Vec<GPoly> {
    let mut keep: Vec<GPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && h.lm().divides(g.lm()) && (h.lm() != g.lm() || j < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let active: Vec<bool> = (0..keep.len()).map(|j| j != i).collect();
        let work: Work = keep[i].terms.iter().cloned().collect();
        let (h, sugar) = reduce(work, keep[i].sugar, &keep, &active);
        out.push(to_gpoly(h, sugar));
    }
    out.sort_by(|a, b| a.lm().cmp(b.lm()));
    out
}

/// If the basis is `{x_i − c_i}` for every variable, the unique rational root.
fn extract_linear_point(basis: &[Polynomial], nvars: usize) -> Option<Vec<crate::ring::RingElem>> {
    if basis.len() != nvars {
        return None;
    }
    let mut values: Vec<Option<BigRational>> = vec![None; nvars];
    for p in basis {
        let (lm, _) = p.leading_term()?;
        if lm.degree() != 1 || p.terms().len() > 2 {
            return None;
        }
        let var = lm.exponents().iter().position(|&e| e == 1)?;
        let constant = p.terms().iter().find(|(m, _)| m.is_one()).map(|(_, c)| -c.clone()).unwrap_or_else(BigRational::zero);
        if p.terms().len() == 2 && p.terms().keys().all(|m| !m.is_one()) {
            return None;
        }
        values[var] = Some(constant);
    }
    values.into_iter().map(|v| v.map(crate::ring::RingElem::Rational)).collect()
}

/// `S(f, g) = lcm/lt(f)·f − lcm/lt(g)·g` with rational coefficients.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (Some((fm, fc)), Some((gm, gc))) = (f.leading_term(), g.leading_term()) else {
        return Polynomial::zero(f.vars().clone());
    };
    let lcm = fm.lcm(gm);
    let mono = |m: Monomial, c: BigRational| Polynomial::from_terms(f.vars().clone(), [(m, c)]);
    let a = f.mul(&mono(fm.quotient_of(&lcm), fc.recip()));
    let b = g.mul(&mono(gm.quotient_of(&lcm), gc.recip()));
    a.sub(&b)
}

/// Remainder of multivariate division of `f` by `divisors` (rational
/// coefficients, grevlex), independent of the engine's fraction-free path.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let vars = f.vars().clone();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(vars.clone());
    while let Some((m, c)) = p.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        let divisor = divisors.iter().find(|d| d.leading_term().is_some_and(|(dm, _)| dm.divides(&m)));
        match divisor {
            Some(d) => {
                let (dm, dc) = d.leading_term().unwrap();
                let factor = Polynomial::from_terms(vars.clone(), [(dm.quotient_of(&m), &c / dc)]);
                p = p.sub(&d.mul(&factor));
            }
            None => {
                let lt = Polynomial::from_terms(vars.clone(), [(m, c)]);
                p = p.sub(&lt);
                rem = rem.add(&lt);
            }
        }
    }
    rem
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn basis_strings(out: &SolveOutcome) -> Vec<String> {
        out.basis.as_ref().unwrap().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn linear_system_yields_point() {
        let sys = PolySystem::parse(&["x"], &["x - 2"]).unwrap();
        let out = buchberger(&sys, Caps::default()).unwrap();
        assert_eq!(basis_strings(&out), vec!["x - 2"]);
        assert_eq!(out.status, SolveStatus::Witness);
        assert_eq!(out.witness.unwrap()[0].to_string(), "2");
    }

    #[test]
    fn inconsistent_pair_certifies_one() {
        let sys = PolySystem::parse(&["x"], &["x", "x + 1"]).unwrap();
        let out = buchberger(&sys, Caps::default()).unwrap();
        assert_eq!(out.status, SolveStatus::CertifiedEmptyOverClosure);
        assert_eq!(basis_strings(&out), vec!["1"]);
    }

    #[test]
    fn hand_computed_reduced_basis() {
        let sys = PolySystem::parse(&["x", "y"], &["x^2 - 1", "x*y - 1"]).unwrap();
        let out = buchberger(&sys, Caps::default()).unwrap();
        assert_eq!(basis_strings(&out), vec!["x - y", "y^2 - 1"]);
        assert_eq!(out.status, SolveStatus::ConsistentOverClosure);
    }

    #[test]
    fn degree_cap_is_inconclusive() {
        let sys = PolySystem::parse(&["x", "y"], &["x^3 - y", "x*y^2 - 1"]).unwrap();
        let out = buchberger(&sys, Caps { max_pairs: 100, max_degree: 2 }).unwrap();
        assert_eq!(out.status, SolveStatus::Inconclusive);
        assert!(out.effort.cap_hit.is_some());
        let out = buchberger(&sys, Caps { max_pairs: 0, max_degree: 12 }).unwrap();
        assert_eq!(out.status, SolveStatus::Inconclusive);
    }

    #[test]
    fn normal_form_and_s_polynomial() {
        let r = Ring::polynomial(&["x", "y"]).unwrap();
        let p = |s: &str| r.parse(s).unwrap().as_poly().unwrap().clone();
        let s = s_polynomial(&p("x^2 - 1"), &p("x*y - 1"));
        assert_eq!(s.to_string(), "x - y");
        let nf = normal_form(&p("x^2*y + y"), &[p("x - y"), p("y^2 - 1")]);
        assert_eq!(nf.to_string(), "2*y");
    }
}
