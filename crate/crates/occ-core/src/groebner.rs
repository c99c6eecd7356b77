//! Reduced Groebner bases and the ideal-theoretic predicates built on them.
//!
//! The engine is Buchberger's algorithm with the Gebauer-Moeller pair
//! update and normal pair selection. That is comfortably enough for the
//! ideals handled here (dozens of generators in at most seventeen
//! variables). The reduced basis for a fixed order is unique, so ideal
//! equality is decided by comparing bases termwise after making them
//! monic.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{same_ring, Polynomial, Ring, RingRef, VariableSet};
use crate::polymat::PolyMatrix;
use crate::scalar::{FieldSpec, Scalar};

/// An ideal given by generators, with optionally cached reduced bases.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    cache: Vec<(MonomialOrder, Arc<Vec<Polynomial>>)>,
}

/// Operands live in different rings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingMismatch;

impl fmt::Display for RingMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "operands belong to different rings")
    }
}

/// Krull dimension of the quotient ring, with the unit ideal flagged
/// separately (its variety is empty).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KrullDim {
    EmptyVariety,
    Dim(usize),
}

impl KrullDim {
    /// Conventional integer form, -1 for the empty variety.
    pub fn as_i64(&self) -> i64 {
        match self {
            KrullDim::EmptyVariety => -1,
            KrullDim::Dim(d) => *d as i64,
        }
    }
}

impl Ideal {
    /// Zero generators are dropped; all generators must share the ring.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Ideal {
        for g in &gens {
            assert!(same_ring(g.ring(), ring), "generator from a different ring");
        }
        Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),

            cache: Vec::new(),
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert!(same_ring(&self.ring, &other.ring));
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Compute and cache the reduced basis for `ord`.
    pub fn ensure_basis(&mut self, ord: &MonomialOrder) {
        if self.cached_basis(ord).is_none() {
            let b = groebner_basis(self, ord);
            self.cache.push((ord.clone(), Arc::new(b)));
        }
    }

    pub fn cached_basis(&self, ord: &MonomialOrder) -> Option<Arc<Vec<Polynomial>>> {
        self.cache
            .iter()
            .find(|(o, _)| o == ord)
            .map(|(_, b)| b.clone())
    }

    /// Cached basis if present, otherwise a fresh computation.
    pub fn basis(&self, ord: &MonomialOrder) -> Arc<Vec<Polynomial>> {
        match self.cached_basis(ord) {
            Some(b) => b,
            None => Arc::new(groebner_basis(self, ord)),
        }
    }
}

// ---------------------------------------------------------------------------
// engine internals

/// Working polynomial: terms sorted descending under the active order.
#[derive(Clone, Debug)]
struct GPoly {
    terms: Vec<(Monomial, Scalar)>,
}

impl GPoly {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lt(&self) -> &(Monomial, Scalar) {
        &self.terms[0]
    }
}

fn to_gpoly(p: &Polynomial, ord: &MonomialOrder) -> GPoly {
    let mut terms: Vec<(Monomial, Scalar)> = p.terms().to_vec();
    terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    GPoly { terms }
}

fn from_gpoly(ring: &RingRef, gp: GPoly) -> Polynomial {
    Polynomial::from_terms(ring, gp.terms)
}

/// `f - c * m * g` where `f` is a slice of terms sorted descending
/// under `ord`; the result is sorted the same way.
fn sub_mul(
    f: &[(Monomial, Scalar)],
    c: &Scalar,
    m: &Monomial,
    g: &GPoly,
    ord: &MonomialOrder,
    field: &FieldSpec,
) -> Vec<(Monomial, Scalar)> {
    let mut out = Vec::with_capacity(f.len() + g.terms.len());
    let mut i = 0;
    let mut j = 0;
    while i < f.len() && j < g.terms.len() {
        let gm = g.terms[j].0.mul(m);
        match ord.cmp(&f[i].0, &gm) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let coeff = field.neg(&field.mul(c, &g.terms[j].1));
                out.push((gm, coeff));
                j += 1;
            }
            Ordering::Equal => {
                let coeff = field.sub(&f[i].1, &field.mul(c, &g.terms[j].1));
                if !coeff.is_zero() {
                    out.push((gm, coeff));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    while j < g.terms.len() {
        let gm = g.terms[j].0.mul(m);
        let coeff = field.neg(&field.mul(c, &g.terms[j].1));
        out.push((gm, coeff));
        j += 1;
    }
    out
}

/// Full normal form: every term of the result is reducible by no basis
/// leading term.
fn normal_form_g(
    f: GPoly,
    basis: &[GPoly],
    ord: &MonomialOrder,
    field: &FieldSpec,
) -> GPoly {
    let mut work = f.terms;
    let mut head = 0;
    let mut rem: Vec<(Monomial, Scalar)> = Vec::new();
    'outer: while head < work.len() {
        let (lm, lc) = work[head].clone();
        for g in basis {
            let (gm, gc) = g.lt();
            if gm.divides(&lm) {
                let q = gm.divide_into(&lm);
                let c = field.div(&lc, gc).expect("leading coefficient is a unit");
                work = sub_mul(&work[head..], &c, &q, g, ord, field);
                head = 0;
                continue 'outer;
            }
        }
        rem.push((lm, lc));
        head += 1;
    }
    GPoly { terms: rem }
}

/// Over the rationals, rescale to integer coefficients with content 1 and
/// positive lead; over GF(p), make monic. Keeps reduction arithmetic tame
/// and the run deterministic.
fn normalize_g(gp: GPoly, ring: &RingRef, ord: &MonomialOrder) -> GPoly {
    if gp.is_zero() {
        return gp;
    }
    match ring.field {
        FieldSpec::Rationals => {
            let p = from_gpoly(ring, gp).primitive_part();
            to_gpoly(&p, ord)
        }
        FieldSpec::Prime(_) => {
            let inv = ring.field.inv(&gp.lt().1).unwrap();
            GPoly {
                terms: gp
                    .terms
                    .into_iter()
                    .map(|(m, c)| {
                        let v = ring.field.mul(&c, &inv);
                        (m, v)
                    })
                    .collect(),
            }
        }
    }
}

fn spoly(f: &GPoly, g: &GPoly, ord: &MonomialOrder, field: &FieldSpec) -> GPoly {
    let (fm, fc) = f.lt();
    let (gm, gc) = g.lt();
    let l = fm.lcm(gm);
    let uf = fm.divide_into(&l);
    let ug = gm.divide_into(&l);
    // g_c * u_f * f - f_c * u_g * g
    let left: Vec<(Monomial, Scalar)> = f
        .terms
        .iter()
        .map(|(m, c)| (m.mul(&uf), field.mul(c, gc)))
        .collect();
    GPoly {
        terms: sub_mul(&left, fc, &ug, g, ord, field),
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer-Moeller pair update when `t = basis.len() - 1` was just added.
fn gm_update(basis: &[GPoly], pairs: &mut Vec<Pair>, t: usize) {
    let lt_t = &basis[t].lt().0;

    // prune old pairs by the chain criterion
    pairs.retain(|p| {
        let divisible = lt_t.divides(&p.lcm);
        if !divisible {
            return true;
        }
        let li = basis[p.i].lt().0.lcm(lt_t);
        let lj = basis[p.j].lt().0.lcm(lt_t);
        !(li != p.lcm && lj != p.lcm)
    });

    // candidate pairs with the new element
    let mut cand: Vec<Pair> = (0..t)
        .map(|i| Pair {
            i,
            j: t,
            lcm: basis[i].lt().0.lcm(lt_t),
        })
        .collect();

    // M criterion: drop candidates whose lcm is a proper multiple of another
    let mut keep: Vec<bool> = alloc::vec![true; cand.len()];
    for a in 0..cand.len() {
        for b in 0..cand.len() {
            if a != b && cand[b].lcm != cand[a].lcm && cand[b].lcm.divides(&cand[a].lcm) {
                keep[a] = false;
                break;
            }
        }
    }
    let mut cand: Vec<Pair> = cand
        .drain(..)
        .zip(keep)
        .filter_map(|(p, k)| if k { Some(p) } else { None })
        .collect();

    // F criterion: one representative per lcm, preferring to drop groups
    // that contain a coprime pair
    cand.sort_by(|a, b| MonomialOrder::Grevlex.cmp(&a.lcm, &b.lcm));
    let mut filtered: Vec<Pair> = Vec::new();
    let mut idx = 0;
    while idx < cand.len() {
        let mut end = idx + 1;
        while end < cand.len() && cand[end].lcm == cand[idx].lcm {
            end += 1;
        }
        let group = &cand[idx..end];
        let coprime = group
            .iter()
            .any(|p| basis[p.i].lt().0.coprime(lt_t));
        if !coprime {
            filtered.push(group[0].clone());
        }
        idx = end;
    }

    pairs.extend(filtered);
}

fn pop_best_pair(pairs: &mut Vec<Pair>) -> Option<Pair> {
    if pairs.is_empty() {
        return None;
    }
    let mut best = 0;
    for k in 1..pairs.len() {
        let a = &pairs[k];
        let b = &pairs[best];
        let c = a
            .lcm
            .degree()
            .cmp(&b.lcm.degree())
            .then_with(|| MonomialOrder::Grevlex.cmp(&a.lcm, &b.lcm))
            .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
        if c == Ordering::Less {
            best = k;
        }
    }
    Some(pairs.swap_remove(best))
}

fn buchberger(gens: &[Polynomial], ring: &RingRef, ord: &MonomialOrder) -> Vec<GPoly> {
    let field = &ring.field;
    let mut input: Vec<GPoly> = gens.iter().map(|g| to_gpoly(g, ord)).collect();
    input.sort_by(|a, b| {
        if a.is_zero() || b.is_zero() {
            return b.terms.len().cmp(&a.terms.len());
        }
        ord.cmp(&a.lt().0, &b.lt().0)
    });

    let mut basis: Vec<GPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let enqueue = |f: GPoly, basis: &mut Vec<GPoly>, pairs: &mut Vec<Pair>| {
        let r = normal_form_g(f, basis, ord, field);
        if r.is_zero() {
            return;
        }
        let r = normalize_g(r, ring, ord);
        basis.push(r);
        let t = basis.len() - 1;
        gm_update(basis, pairs, t);
    };

    for g in input {
        if !g.is_zero() {
            enqueue(g, &mut basis, &mut pairs);
        }
    }

    while let Some(p) = pop_best_pair(&mut pairs) {
        let s = spoly(&basis[p.i], &basis[p.j], ord, field);
        enqueue(s, &mut basis, &mut pairs);
    }

    basis
}

fn reduce_basis(mut basis: Vec<GPoly>, ring: &RingRef, ord: &MonomialOrder) -> Vec<Polynomial> {
    let field = &ring.field;
    // minimal: drop elements whose lead is a multiple of another lead
    let mut alive = alloc::vec![true; basis.len()];
    for a in 0..basis.len() {
        if !alive[a] {
            continue;
        }
        for b in 0..basis.len() {
            if a != b
                && alive[b]
                && basis[b].lt().0.divides(&basis[a].lt().0)
                && (basis[b].lt().0 != basis[a].lt().0 || b < a)
            {
                alive[a] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<GPoly> = basis
        .drain(..)
        .zip(alive)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();

    // tail-reduce each element against the others
    for i in 0..minimal.len() {
        let g = minimal[i].clone();
        let others: Vec<GPoly> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, h)| if j != i { Some(h.clone()) } else { None })
            .collect();
        let r = normal_form_g(g, &others, ord, field);
        minimal[i] = r;
    }
    minimal.retain(|g| !g.is_zero());

    // monic, sorted ascending by leading term
    minimal.sort_by(|a, b| ord.cmp(&a.lt().0, &b.lt().0));
    minimal
        .into_iter()
        .map(|g| from_gpoly(ring, g).make_monic(ord))
        .collect()
}

// ---------------------------------------------------------------------------
// public operations

/// The unique reduced Groebner basis of `i` under `ord`: pairwise
/// reduced, monic, sorted ascending by leading term.
pub fn groebner_basis(i: &Ideal, ord: &MonomialOrder) -> Vec<Polynomial> {
    if let Some(b) = i.cached_basis(ord) {
        return (*b).clone();
    }
    let raw = buchberger(i.generators(), i.ring(), ord);
    reduce_basis(raw, i.ring(), ord)
}

/// Normal form of `f` modulo a (Groebner) basis.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: &MonomialOrder) -> Polynomial {
    let ring = f.ring().clone();
    let gb: Vec<GPoly> = basis.iter().map(|g| to_gpoly(g, ord)).collect();
    let r = normal_form_g(to_gpoly(f, ord), &gb, ord, &ring.field);
    from_gpoly(&ring, r)
}

/// Post-hoc Buchberger certificate: every S-polynomial of the basis
/// reduces to zero against it.
pub fn verify_buchberger(basis: &[Polynomial], ord: &MonomialOrder) -> bool {
    if basis.is_empty() {
        return true;
    }
    let ring = basis[0].ring().clone();
    let gb: Vec<GPoly> = basis.iter().map(|g| to_gpoly(g, ord)).collect();
    for i in 0..gb.len() {
        for j in (i + 1)..gb.len() {
            let s = spoly(&gb[i], &gb[j], ord, &ring.field);
            if !normal_form_g(s, &gb, ord, &ring.field).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Ideal equality via uniqueness of the reduced basis.
pub fn ideal_equal(a: &Ideal, b: &Ideal, ord: &MonomialOrder) -> Result<bool, RingMismatch> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(RingMismatch);
    }
    Ok(*a.basis(ord) == *b.basis(ord))
}

/// Membership via zero normal form.
pub fn ideal_member(f: &Polynomial, i: &Ideal, ord: &MonomialOrder) -> Result<bool, RingMismatch> {
    if !same_ring(f.ring(), i.ring()) {
        return Err(RingMismatch);
    }
    let basis = i.basis(ord);
    Ok(normal_form(f, &basis, ord).is_zero())
}

/// Krull dimension of R/I from the leading-term ideal: the largest set of
/// variables containing the support of no leading monomial.
pub fn ideal_dimension(i: &Ideal, ord: &MonomialOrder) -> KrullDim {
    let basis = i.basis(ord);
    let nvars = i.ring().nvars();
    let mut supports: Vec<u64> = Vec::new();
    for g in basis.iter() {
        let (m, _) = g.leading_term(ord).unwrap();
        if m.is_one() {
            return KrullDim::EmptyVariety;
        }
        supports.push(m.support_mask());
    }
    supports.sort();
    supports.dedup();
    // keep only minimal supports
    let minimal: Vec<u64> = supports
        .iter()
        .copied()
        .filter(|&s| !supports.iter().any(|&t| t != s && (t & s) == t))
        .collect();

    let full: u64 = if nvars == 64 {
        u64::MAX
    } else {
        (1u64 << nvars) - 1
    };

    fn go(allowed: u64, supports: &[u64], memo: &mut alloc::collections::BTreeMap<u64, usize>) -> usize {
        if let Some(&v) = memo.get(&allowed) {
            return v;
        }
        // find a violated support, branching on the smallest one
        let mut branch: Option<u64> = None;
        for &s in supports {
            if s & !allowed == 0 {
                match branch {
                    None => branch = Some(s),
                    Some(b) => {
                        if s.count_ones() < b.count_ones() {
                            branch = Some(s);
                        }
                    }
                }
            }
        }
        let v = match branch {
            None => allowed.count_ones() as usize,
            Some(s) => {
                let mut best = 0;
                let mut bits = s;
                while bits != 0 {
                    let v = bits & bits.wrapping_neg();
                    bits ^= v;
                    best = best.max(go(allowed & !v, supports, memo));
                }
                best
            }
        };
        memo.insert(allowed, v);
        v
    }

    let mut memo = alloc::collections::BTreeMap::new();
    KrullDim::Dim(go(full, &minimal, &mut memo))
}

fn permuted_ring(ring: &RingRef, perm: &[usize]) -> RingRef {
    let names: Vec<&str> = perm.iter().map(|&i| ring.vars.name(i)).collect();
    Ring::new(ring.field.clone(), VariableSet::new(names))
}

fn permute_poly(p: &Polynomial, perm: &[usize], target: &RingRef) -> Polynomial {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let exps: Vec<u32> = perm.iter().map(|&i| m.exp(i)).collect();
            (Monomial::from_exps(&exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(target, terms)
}

/// Generators of `i` intersected with the subring omitting the variables
/// in `drop`, computed with a block elimination order.
pub fn eliminate(i: &Ideal, drop: &[usize]) -> Ideal {
    let ring = i.ring();
    let n = ring.nvars();
    let mut front: Vec<usize> = drop.to_vec();
    front.sort();
    front.dedup();
    let mut perm: Vec<usize> = front.clone();
    for v in 0..n {
        if !front.contains(&v) {
            perm.push(v);
        }
    }
    let work_ring = permuted_ring(ring, &perm);
    let work_gens: Vec<Polynomial> = i
        .generators()
        .iter()
        .map(|g| permute_poly(g, &perm, &work_ring))
        .collect();
    let work = Ideal::new(&work_ring, work_gens);
    let basis = groebner_basis(&work, &MonomialOrder::Block { split: front.len() });

    // invert the permutation and keep the front-free elements
    let mut inv = alloc::vec![0usize; n];
    for (newi, &old) in perm.iter().enumerate() {
        inv[old] = newi;
    }
    let kept: Vec<Polynomial> = basis
        .iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|(m, _)| (0..front.len()).all(|k| m.exp(k) == 0))
        })
        .map(|g| permute_poly(g, &inv, ring))
        .collect();
    Ideal::new(ring, kept)
}

/// The saturation `(i : f^infinity)` by the Rabinowitsch trick: adjoin
/// `t` with `t*f - 1` and eliminate `t`.
pub fn saturate(i: &Ideal, f: &Polynomial) -> Ideal {
    assert!(!f.is_zero(), "saturation by zero");
    let ring = i.ring();
    // fresh auxiliary name
    let mut aux = alloc::string::String::from("t_0");
    let mut k = 0;
    while ring.vars.index_of(&aux).is_some() {
        k += 1;
        aux = alloc::format!("t_{}", k);
    }
    let mut names: Vec<alloc::string::String> = alloc::vec![aux];
    names.extend(ring.vars.names().iter().cloned());
    let ext_ring = Ring::new(ring.field.clone(), VariableSet::new(names));

    let lift = |p: &Polynomial| -> Polynomial {
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| (m.insert_var(0), c.clone()))
            .collect();
        Polynomial::from_terms(&ext_ring, terms)
    };

    let mut gens: Vec<Polynomial> = i.generators().iter().map(lift).collect();
    let t = Polynomial::var(&ext_ring, 0);
    gens.push(t.mul(&lift(f)).sub(&Polynomial::one(&ext_ring)));
    let ext = Ideal::new(&ext_ring, gens);
    let elim = eliminate(&ext, &[0]);

    let back: Vec<Polynomial> = elim
        .generators()
        .iter()
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| (m.project_out(0), c.clone()))
                .collect();
            Polynomial::from_terms(ring, terms)
        })
        .collect();
    Ideal::new(ring, back)
}

/// A ring homomorphism determined by images of the source variables.
#[derive(Clone, Debug)]
pub struct RingMap {
    pub source: RingRef,
    pub target: RingRef,
    pub images: Vec<Polynomial>,
}

impl RingMap {
    pub fn new(source: &RingRef, target: &RingRef, images: Vec<Polynomial>) -> RingMap {
        assert_eq!(images.len(), source.nvars());
        assert_eq!(source.field, target.field, "field mismatch in ring map");
        for im in &images {
            assert!(same_ring(im.ring(), target));
        }
        RingMap {
            source: source.clone(),
            target: target.clone(),
            images,
        }
    }

    pub fn identity(ring: &RingRef) -> RingMap {
        let images = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        RingMap::new(ring, ring, images)
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        assert!(same_ring(f.ring(), &self.source));
        f.substitute(&self.images, &self.target)
    }
}

/// Image ideal generated by the images of the generators.
pub fn apply_map(m: &RingMap, i: &Ideal) -> Result<Ideal, RingMismatch> {
    if !same_ring(i.ring(), &m.source) {
        return Err(RingMismatch);
    }
    let gens = i.generators().iter().map(|g| m.apply(g)).collect();
    Ok(Ideal::new(&m.target, gens))
}

/// Matrix of formal partial derivatives: one row per generator, one
/// column per variable.
pub fn jacobian(gens: &[Polynomial]) -> PolyMatrix {
    assert!(!gens.is_empty());
    let ring = gens[0].ring().clone();
    for g in gens {
        assert!(same_ring(g.ring(), &ring));
    }
    PolyMatrix::from_fn(&ring, gens.len(), ring.nvars(), |r, c| gens[r].derivative(c))
}
