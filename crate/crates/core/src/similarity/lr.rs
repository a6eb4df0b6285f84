//! Laffey–Reams normal form: a pivot `b12` dividing every off-diagonal
//! entry and diagonal difference, with zeros above the superdiagonal.

use super::avoid::make_b12_nonzero_mod;
use super::reduce::{band_reduce, col_reduce, gather_row, row_reduce};
use crate::error::{Error, Result};
use crate::matrix::{elementary, swap_perm, Matrix, SimilarityWitness};
use crate::ring::{
    crt, divides, exact_div, ideal_generator, index_two_primes, is_associate, EuclidElem, FiniteField, Pid,
    PrimeElement, ResidueMap, RingElem,
};
use num_bigint::BigUint;

/// `A = a*1 + d*A'` with `I(A') = (1)`.
pub fn scalar_split<E: EuclidElem>(a: &Matrix<E>) -> Result<(E, E, Matrix<E>)> {
    if a.is_scalar() {
        return Err(Error::Precondition("scalar_split needs a non-scalar matrix".into()));
    }
    let s = a[(0, 0)].clone();
    let d = a.scalar_defect_generator();
    let shifted = a - &Matrix::scalar(a.n(), &s);
    Ok((s, d.clone(), shifted.exact_div(&d)?))
}

/// One applied descent step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeRecord<E> {
    pub probe: String,
    pub pivot_before: E,
    pub pivot_after: E,
    pub factors_before: u64,
    pub factors_after: u64,
}

#[derive(Clone, Debug)]
pub struct LaffeyReamsForm<E> {
    pub b: Matrix<E>,
    pub witness: SimilarityWitness<E>,
    pub pivot: E,
    pub probe_log: Vec<ProbeRecord<E>>,
}

impl<E: EuclidElem> LaffeyReamsForm<E> {
    /// Checks every defining property against the input `a`.
    pub fn check(&self, a: &Matrix<E>) -> Result<()> {
        self.witness.verify(a, &self.b)?;
        let n = self.b.n();
        let p = &self.pivot;
        if self.b[(0, 1)] != *p {
            return Err(Error::Internal("pivot differs from b12".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let bad = if i == j {
                    !divides(p, &(self.b[(i, i)].clone() - self.b[(0, 0)].clone()))
                } else {
                    !divides(p, &self.b[(i, j)]) || (j >= i + 2 && !self.b[(i, j)].is_zero())
                };
                if bad {
                    return Err(Error::Internal(format!("normal form fails at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        if !is_associate(p, &a.scalar_defect_generator()) {
            return Err(Error::Internal("pivot does not generate I(A)".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
enum Gather {
    Row1,
    Col2,
}

struct Descent<'a, R: Pid> {
    ring: &'a R,
    b: Matrix<R::Elem>,
    w: SimilarityWitness<R::Elem>,
    log: Vec<ProbeRecord<R::Elem>>,
}

fn omega<R: Pid>(ring: &R, x: &R::Elem) -> Result<u64> {
    Ok(ring.factor(x)?.omega_total())
}

fn conj<E: EuclidElem>(g: Matrix<E>, g_inv: Matrix<E>) -> SimilarityWitness<E> {
    SimilarityWitness { g, g_inv }
}

fn transvection<E: EuclidElem>(n: usize, i: usize, j: usize, lam: &E) -> SimilarityWitness<E> {
    conj(elementary(n, i, j, lam), elementary(n, i, j, &-lam.clone()))
}

fn swap<E: EuclidElem>(n: usize, a: usize, b: usize, t: &E) -> SimilarityWitness<E> {
    let p = swap_perm(n, a, b, t);
    conj(p.clone(), p)
}

impl<'a, R: Pid> Descent<'a, R> {
    fn pivot(&self) -> R::Elem {
        self.b[(0, 1)].clone()
    }

    fn n(&self) -> usize {
        self.b.n()
    }

    fn apply(&mut self, step: &SimilarityWitness<R::Elem>) {
        self.b = step.apply(&self.b);
        self.w = self.w.then(step);
    }

    /// Makes some off-diagonal entry of row 1 nonzero.
    fn seed_row1(&mut self) {
        let n = self.n();
        let t = self.ring.zero();
        if (1..n).any(|j| !self.b[(0, j)].is_zero()) {
            return;
        }
        let off = (1..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| i != j && !self.b[(i, j)].is_zero());
        let step = match off {
            Some((i, _)) => swap(n, 0, i, &t),
            None => {
                let j = (1..n).find(|&j| self.b[(j, j)] != self.b[(0, 0)]).expect("non-scalar");
                transvection(n, 0, j, &t.one_like())
            }
        };
        self.apply(&step);
    }

    /// Restores `b_{1j} = 0` for `j >= 3`.
    fn clear_row1(&mut self) -> Result<()> {
        let (b, w) = row_reduce(&self.b, 0)?;
        self.b = b;
        self.w = self.w.then(&w);
        Ok(())
    }

    /// The generator a row-1 or column-2 gather of `frame.apply(b)` would produce.
    fn gathered(&self, c: &Matrix<R::Elem>, kind: Gather) -> Result<R::Elem> {
        let n = self.n();
        let vals: Vec<R::Elem> = match kind {
            Gather::Row1 => (1..n).map(|j| c[(0, j)].clone()).collect(),
            Gather::Col2 => (0..n).filter(|&i| i != 1).map(|i| c[(i, 1)].clone()).collect(),
        };
        ideal_generator(&vals)
    }

    /// Applies `frame`, gathers, and keeps the result if the pivot shrank.
    fn probe(&mut self, name: &str, frame: &SimilarityWitness<R::Elem>, kind: Gather) -> Result<bool> {
        let p = self.pivot();
        let c = frame.apply(&self.b);
        debug_assert!(is_associate(&c[(0, 1)], &p));
        let r = self.gathered(&c, kind)?;
        if is_associate(&r, &p) {
            return Ok(false);
        }
        let before = omega(self.ring, &p)?;
        self.apply(frame);
        let (b, w) = match kind {
            Gather::Row1 => row_reduce(&self.b, 0)?,
            Gather::Col2 => col_reduce(&self.b, 1)?,
        };
        self.b = b;
        self.w = self.w.then(&w);
        self.clear_row1()?;
        let after_pivot = self.pivot();
        let after = omega(self.ring, &after_pivot)?;
        if after >= before || !divides(&after_pivot, &p) {
            return Err(Error::Internal(format!("probe {name} did not shrink the pivot")));
        }
        self.log.push(ProbeRecord {
            probe: name.to_string(),
            pivot_before: p,
            pivot_after: after_pivot,
            factors_before: before,
            factors_after: after,
        });
        Ok(true)
    }

    /// Units `lambda, lambda', lambda - lambda'` modulo the pivot.
    fn unit_triple(&self) -> Result<Vec<R::Elem>> {
        let p = self.pivot();
        let fac = self.ring.factor(&p)?;
        let mut residues = Vec::new();
        let mut moduli = Vec::new();
        for (q, e) in &fac.factors {
            if q.residue_field_size < BigUint::from(3u32) {
                return Err(Error::Internal(format!("pivot lies in the index-2 prime {}", q.value)));
            }
            let field = self.ring.residue_field(&q.value);
            residues.push(field.lift(&field.element(&BigUint::from(2u32))));
            moduli.push(q.value.pow(*e as u64));
        }
        let one = self.ring.one();
        let lam2 = crt(&residues, &moduli)?;
        Ok(vec![one.clone(), lam2.clone(), one - lam2])
    }

    /// Claim-type probes on the frame `base`: `1 + y E13` with a row-1
    /// gather and, when `with_col` holds, `1 + x E32` with a column-2 gather.
    fn claim_probes(
        &mut self,
        label: &str,
        base: &SimilarityWitness<R::Elem>,
        ys: &[R::Elem],
        with_col: bool,
    ) -> Result<bool> {
        let n = self.n();
        for y in ys {
            let f = base.then(&transvection(n, 0, 2, y));
            if self.probe(&format!("{label}: 1 + ({y})E13, row 1"), &f, Gather::Row1)? {
                return Ok(true);
            }
        }
        if with_col {
            for x in ys {
                let f = base.then(&transvection(n, 2, 1, x));
                if self.probe(&format!("{label}: 1 + ({x})E32, column 2"), &f, Gather::Col2)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// One descent step; false when no probe shrinks the pivot.
    fn step(&mut self) -> Result<bool> {
        let n = self.n();
        let t = self.ring.zero();
        let id = SimilarityWitness::identity(n, &t);
        if self.probe("column 2 gcd", &id, Gather::Col2)? {
            return Ok(true);
        }
        let ys = self.unit_triple()?;
        let p = self.pivot();
        for v in 2..n {
            let wv = if v == 2 { id.clone() } else { swap(n, 2, v, &t) };
            let label = if v == 2 { String::new() } else { format!("W_{} ", v + 1) };
            let c0 = wv.apply(&self.b);
            // Column 2 is already divisible by the pivot here.
            let a = exact_div(&c0[(2, 1)], &p)?;
            let f1 = wv.then(&transvection(n, 2, 0, &-a));
            let c1 = f1.apply(&self.b);
            if self.claim_probes(&format!("{label}1 - aE31"), &f1, &ys, false)? {
                return Ok(true);
            }
            let diff = c1[(2, 2)].clone() - c1[(0, 0)].clone();
            if !divides(&p, &diff) || !divides(&p, &c1[(2, 0)]) {
                return Err(Error::DescentStuck(
                    "Claim I divisibility failed without a shrinking probe".into(),
                ));
            }
            let alpha = exact_div(&diff, &p)?;
            let beta = exact_div(&c1[(2, 0)], &p)?;
            let f2 = f1
                .then(&transvection(n, 2, 0, &t.one_like()))
                .then(&transvection(n, 1, 0, &(beta - alpha)));
            let one = t.one_like();
            let f2a = f2.then(&transvection(n, 2, 0, &-one.clone()));
            let f2b = f2.then(&swap(n, 0, 2, &t)).then(&transvection(n, 2, 0, &-one));
            if self.claim_probes(&format!("{label}B2'"), &f2a, &ys, true)? {
                return Ok(true);
            }
            if self.claim_probes(&format!("{label}B2''"), &f2b, &ys, true)? {
                return Ok(true);
            }
        }
        for u in 2..n {
            let f = transvection(n, u, 1, &t.one_like());
            if self.probe(&format!("1 + E{}2, column 2", u + 1), &f, Gather::Col2)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Laffey–Reams form of a non-scalar `a` with `n >= 3`.
pub fn lr_form<R: Pid>(ring: &R, a: &Matrix<R::Elem>) -> Result<LaffeyReamsForm<R::Elem>> {
    let n = a.n();
    if n < 3 {
        return Err(Error::Precondition(format!("n ≥ 3 required, got n = {n}")));
    }
    let (s, d, a1) = scalar_split(a)?;
    let protected: Vec<PrimeElement<R::Elem>> = index_two_primes(ring);
    let (b, w) = make_b12_nonzero_mod(ring, &a1, &protected)?;
    let mut st = Descent {
        ring,
        b,
        w,
        log: Vec::new(),
    };
    if st.pivot().is_zero() {
        st.seed_row1();
    }
    st.clear_row1()?;
    loop {
        let p = st.pivot();
        if p.is_unit() {
            break;
        }
        if p.is_zero() {
            return Err(Error::Internal("pivot vanished during descent".into()));
        }
        if !st.step()? {
            return Err(Error::DescentStuck(format!("no probe reduces the non-unit pivot {p}")));
        }
    }
    // Scale the unit pivot to 1.
    let u = st.pivot();
    let mut g = Matrix::identity(n, &ring.zero());
    let mut g_inv = g.clone();
    g[(0, 0)] = u.unit_inv();
    g_inv[(0, 0)] = u;
    st.apply(&conj(g, g_inv));
    // Hessenberg sweep on rows 2..n-2.
    for i in 1..n.saturating_sub(2) {
        let js: Vec<usize> = (i + 2..n).collect();
        let (b, w) = gather_row(&st.b, i, i + 1, &js)?;
        st.b = b;
        st.w = st.w.then(&w);
        let (b, w) = band_reduce(&st.b, i + 1);
        st.b = b;
        st.w = st.w.then(&w);
    }
    let (b, w) = band_reduce(&st.b, n - 1);
    st.b = b;
    st.w = st.w.then(&w);
    let b = &Matrix::scalar(n, &s) + &st.b.scale(&d);
    let form = LaffeyReamsForm {
        pivot: b[(0, 1)].clone(),
        b,
        witness: st.w,
        probe_log: st.log,
    };
    form.check(a)?;
    Ok(form)
}
