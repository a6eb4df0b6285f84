//! The general decomposition over a PID for `n >= 3`.

use num_bigint::BigUint;

use super::clear::{descend, solve_over_ring};
use super::n2::decompose_2x2;
use super::{c_of, criterion_check, require_trace_zero, CommutatorWitness};
use crate::error::{Error, Result};
use crate::matrix::{
    common_denominator, elementary, embed_fractions, reduce_matrix, scale_to_base, solve, solve_commutator_equation,
    Matrix,
};
use crate::regularity::{is_regular_mod_prime, is_regular_over_fractions, jordan_block, p_n};
use crate::ring::{
    crt, divides, exact_div, gcd, in_prime, index_two_primes, EuclidElem, FiniteField, Pid, PrimeElement, ResidueMap,
    RingElem,
};
use crate::similarity::lr_form;

/// How the decomposition of the normal form was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MainBranch {
    /// `a12 | c(A)`: conjugate so that `P_n` works.
    Shortcut,
    /// The template `X` cleared every denominator directly.
    Direct,
    /// Primes of `x + qy` survived and `X` was replaced by `X_1`.
    Refined,
}

/// Every quantity chosen while decomposing a normal form with `(a11, a12) = (1)`.
#[derive(Clone, Debug)]
pub struct MainDecompositionState<E> {
    pub branch: MainBranch,
    /// The normal form divided by its content.
    pub a: Matrix<E>,
    /// Content removed from the normal form.
    pub content: E,
    pub c: E,
    pub d_sum: E,
    pub l: E,
    pub d: E,
    pub h: E,
    pub x: E,
    pub y: E,
    pub q: E,
    /// `x^2 a12 + xy(a11 - a22) - y^2(a21 + y a31 + x a32)`.
    pub not_zero: E,
    /// Index-2 primes; the primes of `not_zero` join them implicitly.
    pub s: Vec<PrimeElement<E>>,
    /// Primes of `x + qy` that divided the multiplier `m`.
    pub v: Vec<PrimeElement<E>>,
    pub kappa: u8,
    /// Multiplier left after dividing out every removable prime.
    pub m: E,
    pub m_factors: Vec<(PrimeElement<E>, u32)>,
    pub alpha: Option<E>,
    pub beta: Option<E>,
    pub gamma: Option<E>,
    pub t: Option<E>,
    pub x_matrix: Matrix<E>,
    pub x1: Option<Matrix<E>>,
}

/// The matrix `X` of the construction: `x21 = x`, `x31 = q`, ones on the rest
/// of the subdiagonal and `-y` at the even diagonal positions.
pub fn main_template<E: RingElem>(n: usize, x: &E, y: &E, q: &E) -> Matrix<E> {
    let mut m = Matrix::zeros(n, n, x);
    m[(1, 0)] = x.clone();
    if n > 2 {
        m[(2, 0)] = q.clone();
    }
    for j in 2..n {
        m[(j, j - 1)] = x.one_like();
    }
    for i in (1..n).step_by(2) {
        m[(i, i)] = -y.clone();
    }
    m
}

pub fn kappa(n: usize) -> u8 {
    u8::from(n % 2 == 0)
}

/// `E11`, `E12 + y E13` and `E_n1 + kappa y E_{n-1,1}`, which together with the
/// polynomials in `X_0` span its centralizer modulo a prime of `x + qy`.
pub fn centralizer_extras<E: RingElem>(n: usize, y: &E) -> [Matrix<E>; 3] {
    let zero = y.zero_like();
    let e11 = Matrix::unit(n, 0, 0, &zero);
    let mut e12 = Matrix::unit(n, 0, 1, &zero);
    e12[(0, 2)] = y.clone();
    let mut en1 = Matrix::unit(n, n - 1, 0, &zero);
    if kappa(n) == 1 {
        en1[(n - 2, 0)] = y.clone();
    }
    [e11, e12, en1]
}

/// `(X_0, N, N^{-1})` with `N = 1 + q E21` and `X_0 = N X N^{-1}`.
pub fn conjugated_template<E: RingElem>(n: usize, x: &E, y: &E, q: &E) -> (Matrix<E>, Matrix<E>, Matrix<E>) {
    let big_x = main_template(n, x, y, q);
    let nm = elementary(n, 1, 0, q);
    let nm_inv = elementary(n, 1, 0, &-q.clone());
    (big_x.conjugate_by(&nm, &nm_inv), nm, nm_inv)
}

pub fn decompose<R: Pid>(ring: &R, a: &Matrix<R::Elem>) -> Result<CommutatorWitness<R::Elem>> {
    decompose_with_state(ring, a).map(|(w, _)| w)
}

/// As [`decompose`], also returning the construction's choices when the
/// general branch ran.
pub fn decompose_with_state<R: Pid>(
    ring: &R,
    a: &Matrix<R::Elem>,
) -> Result<(CommutatorWitness<R::Elem>, Option<MainDecompositionState<R::Elem>>)> {
    require_trace_zero(a)?;
    let n = a.n();
    if n == 0 {
        return Err(Error::DegenerateInput("empty matrix".into()));
    }
    if n == 1 {
        return Ok((
            CommutatorWitness::new(a.zeros_like(), a.zeros_like()).with_log("n = 1"),
            None,
        ));
    }
    if n == 2 {
        return Ok((decompose_2x2(ring, a)?, None));
    }
    if a.is_scalar() {
        let x = jordan_block(n, &a.zero_elem());
        let y = solve_over_ring(ring, &x, a)?;
        let w = CommutatorWitness::new(x, y).with_log("scalar: X = J_n(0)");
        w.verify(a)?;
        return Ok((w, None));
    }
    let lr = lr_form(ring, a)?;
    let content = lr.b.content();
    let b = lr.b.exact_div(&content)?;
    let (inner, state) = normal_form_case(ring, &b, &content)?;
    let w = inner
        .scale_y(&content)
        .pull_back(&lr.witness.g, &lr.witness.g_inv)
        .with_log(format!("normal form pivot {}, content {}", lr.pivot, content));
    w.verify(a)?;
    Ok((w, state))
}

const Q_SEARCH: i64 = 16;

fn step_error(step: &str, msg: impl std::fmt::Display) -> Error {
    Error::Internal(format!("{step}: {msg}"))
}

/// The largest divisor of `a` coprime to `b`.
fn coprime_part<E: EuclidElem>(a: &E, b: &E) -> Result<E> {
    let mut a = a.clone();
    loop {
        let g = gcd(&a, b);
        if g.is_unit() {
            return Ok(a);
        }
        a = exact_div(&a, &g)?;
    }
}

type Decomposed<E> = (CommutatorWitness<E>, Option<MainDecompositionState<E>>);

/// `a` is in normal form with `(a11, a12) = (1)`.
fn normal_form_case<R: Pid>(ring: &R, a: &Matrix<R::Elem>, content: &R::Elem) -> Result<Decomposed<R::Elem>> {
    let n = a.n();
    let zero = ring.zero();
    let a12 = a[(0, 1)].clone();
    let c = c_of(a);

    if divides(&a12, &c) {
        let u = exact_div(&c, &a12)?;
        let m = elementary(n, 1, 0, &-u.clone());
        let m_inv = elementary(n, 1, 0, &u);
        let a1 = a.conjugate_by(&m, &m_inv);
        let pn = p_n(n, &zero);
        let rep = criterion_check(&pn, &a1)?;
        if !rep.satisfied {
            return Err(step_error("shortcut", "Tr(P_n^r MAM^-1) is not zero"));
        }
        let y = solve_over_ring(ring, &pn, &a1)?;
        let w = CommutatorWitness::new(pn, y)
            .with_log(format!("a12 = {a12} divides c(A) = {c}: X conjugate to P_n"))
            .pull_back(&m, &m_inv);
        return Ok((w, None));
    }

    // Tr(XA) = x a12 + (a23 + ... + a_{n-1,n}) - y c(A).
    let d_sum = (1..n - 1).fold(zero.clone(), |acc, i| acc + a[(i, i + 1)].clone());
    let l = exact_div(&d_sum, &a12).map_err(|_| step_error("Tr(XA) = 0", "a12 does not divide the superdiagonal"))?;
    let d = gcd(&a12, &c);
    let a12d = exact_div(&a12, &d)?;
    let cd = exact_div(&c, &d)?;
    let h = ring
        .factor(&a12d)?
        .factors
        .iter()
        .filter(|(p, _)| !in_prime(&l, &p.value))
        .fold(ring.one(), |acc, (p, _)| acc * p.value.clone());
    let x = h.clone() * cd - l.clone();
    let y = h.clone() * a12d;
    if !gcd(&x, &y).is_one() {
        return Err(step_error("choice of x, y", format!("({x}, {y}) != (1)")));
    }
    if y.is_unit() {
        return Err(step_error(
            "choice of x, y",
            "y is a unit although a12 does not divide c(A)",
        ));
    }

    let not_zero = x.clone() * x.clone() * a12.clone()
        + x.clone() * y.clone() * (a[(0, 0)].clone() - a[(1, 1)].clone())
        - y.clone() * y.clone() * (a[(1, 0)].clone() + y.clone() * a[(2, 0)].clone() + x.clone() * a[(2, 1)].clone());
    if not_zero.is_zero() {
        return Err(step_error("choice of q", "the avoidance quantity vanishes"));
    }
    // Any q with x + qy coprime to not_zero and to the index-2 primes will do.
    // Small candidates first; the part of that product coprime to x always
    // works and is the fallback.
    let s: Vec<_> = index_two_primes(ring);
    let s_prod = s.iter().fold(not_zero.clone(), |acc, p| acc * p.value.clone());
    let good = |q: &R::Elem| {
        let v = x.clone() + q.clone() * y.clone();
        !v.is_zero() && gcd(&v, &s_prod).is_one()
    };
    let q = match (0..=Q_SEARCH)
        .flat_map(|k| [ring.int(k), ring.int(-k)])
        .find(|q| good(q))
    {
        Some(q) => q,
        None => {
            let q = coprime_part(&s_prod, &x)?;
            if good(&q) {
                q
            } else {
                q + s_prod.clone()
            }
        }
    };
    let xqy = x.clone() + q.clone() * y.clone();
    if !gcd(&xqy, &s_prod).is_one() {
        return Err(step_error("choice of q", format!("x + qy = {xqy} meets S")));
    }

    let big_x = main_template(n, &x, &y, &q);
    let rep = criterion_check(&big_x, a)?;
    if !rep.satisfied {
        return Err(step_error(
            "trace criterion",
            format!("Tr(X^r A) != 0 at r = {:?}", rep.first_failure()),
        ));
    }
    if !is_regular_over_fractions(&big_x) {
        return Err(step_error(
            "regularity of X",
            "X is not regular over the fraction field",
        ));
    }

    let qf = solve_commutator_equation(&embed_fractions(&big_x), &embed_fractions(a))?;
    let den = common_denominator(&qf);
    let first = descend(ring, &big_x, &scale_to_base(&qf, &den)?, &den)?;
    for (p, _) in &first.stuck {
        if !in_prime(&xqy, &p.value) {
            return Err(step_error("minimal m", format!("prime {} outside V survived", p.value)));
        }
    }

    let mut state = MainDecompositionState {
        branch: MainBranch::Direct,
        a: a.clone(),
        content: content.clone(),
        c: c.clone(),
        d_sum,
        l,
        d,
        h,
        x: x.clone(),
        y: y.clone(),
        q: q.clone(),
        not_zero,
        s,
        v: Vec::new(),
        kappa: kappa(n),
        m: first.m.clone(),
        m_factors: first.stuck.clone(),
        alpha: None,
        beta: None,
        gamma: None,
        t: None,
        x_matrix: big_x.clone(),
        x1: None,
    };
    let log = format!("template X with x = {x}, y = {y}, q = {q}");

    if first.stuck.is_empty() {
        let y_mat = first.c.scale(&first.m.unit_inv());
        let w = CommutatorWitness::new(big_x, y_mat).with_log(log);
        w.verify(a)?;
        return Ok((w, Some(state)));
    }

    state.branch = MainBranch::Refined;
    state.v = first.stuck.iter().map(|(p, _)| p.clone()).collect();
    let m = first.m.clone();
    let (x0, nm, nm_inv) = conjugated_template(n, &x, &y, &q);
    let q0 = first.c.conjugate_by(&nm, &nm_inv);
    let a0 = a.conjugate_by(&nm, &nm_inv);
    let extras = centralizer_extras(n, &y);
    if !x0.commutator(&extras[2]).is_zero() {
        return Err(step_error(
            "centralizer basis",
            "E_n1 + kappa y E_{n-1,1} does not commute with X_0",
        ));
    }

    let primes: Vec<PrimeElement<R::Elem>> = first.stuck.iter().map(|(p, _)| p.clone()).collect();
    let moduli: Vec<R::Elem> = primes.iter().map(|p| p.value.clone()).collect();
    // Per prime: coefficients of I, X_0, ..., X_0^{n-2}, E11, E12 + yE13, G.
    let mut coeff_residues: Vec<Vec<R::Elem>> = vec![Vec::new(); n + 2];
    for p in &primes {
        let coeffs = centralizer_coordinates(ring, &x0, &q0, &extras, p)?;
        for (k, v) in coeffs.into_iter().enumerate() {
            coeff_residues[k].push(v);
        }
    }
    let coeffs: Vec<R::Elem> = coeff_residues.iter().map(|r| crt(r, &moduli)).collect::<Result<_>>()?;
    let f = &coeffs[..n - 1];
    let (alpha, beta, gamma) = (coeffs[n - 1].clone(), coeffs[n].clone(), coeffs[n + 1].clone());
    let q1 = &(&q0 - &x0.eval_poly(f)) - &extras[2].scale(&gamma);
    if x0.commutator(&q1) != a0.scale(&m) {
        return Err(step_error("Q_1", "[X_0, Q_1] != m A_0"));
    }
    for p in &primes {
        if in_prime(&alpha, &p.value) {
            return Err(step_error("alpha", format!("alpha = {alpha} lies in ({})", p.value)));
        }
    }

    let mut t_residues = Vec::new();
    for p in &primes {
        t_residues.push(choose_t(ring, &alpha, &y, p)?);
    }
    let t = crt(&t_residues, &moduli)?;
    let x1 = &x0 + &q1.scale(&t);
    for p in &primes {
        if !is_regular_mod_prime(ring, &x1, p).regular {
            return Err(step_error("X_1", format!("X_1 is not regular modulo {}", p.value)));
        }
    }
    let budget: u32 = first.stuck.iter().map(|(_, e)| *e).sum();
    let second = descend(ring, &x1, &q1, &m)?;
    if let Some((p, _)) = second.stuck.first() {
        return Err(step_error("descent against X_1", format!("stuck at {}", p.value)));
    }
    if second.steps > budget as usize {
        return Err(step_error("descent against X_1", "iteration budget exceeded"));
    }
    let y0 = second.c.scale(&second.m.unit_inv());
    state.alpha = Some(alpha);
    state.beta = Some(beta);
    state.gamma = Some(gamma);
    state.t = Some(t.clone());
    state.x1 = Some(x1.clone());
    let w = CommutatorWitness::new(x1, y0)
        .with_log(log)
        .with_log(format!("refined at {} prime(s) of x + qy with t = {t}", primes.len()))
        .pull_back(&nm, &nm_inv);
    w.verify(a)?;
    Ok((w, Some(state)))
}

/// Coordinates of `Q_0 mod p` in the basis `1, X_0, ..., X_0^{n-2}` and the
/// three extra centralizer elements, lifted to the base ring.
fn centralizer_coordinates<R: Pid>(
    ring: &R,
    x0: &Matrix<R::Elem>,
    q0: &Matrix<R::Elem>,
    extras: &[Matrix<R::Elem>; 3],
    p: &PrimeElement<R::Elem>,
) -> Result<Vec<R::Elem>> {
    let n = x0.n();
    let field = ring.residue_field(&p.value);
    let x0p = reduce_matrix(&field, x0);
    let mut basis = vec![x0p.identity_like()];
    for i in 1..n - 1 {
        basis.push(&basis[i - 1] * &x0p);
    }
    basis.extend(extras.iter().map(|e| reduce_matrix(&field, e)));
    let sys = Matrix::from_fn(n * n, basis.len(), |r, k| basis[k].entries()[r].clone());
    let sol = solve(&sys, reduce_matrix(&field, q0).entries()).ok_or_else(|| {
        step_error(
            "centralizer span",
            format!("Q_0 is outside the closed-form span modulo {}", p.value),
        )
    })?;
    Ok(sol.iter().map(|v| field.lift(v)).collect())
}

/// A residue `t` with `t` and `alpha t + y` nonzero modulo `p`.
fn choose_t<R: Pid>(ring: &R, alpha: &R::Elem, y: &R::Elem, p: &PrimeElement<R::Elem>) -> Result<R::Elem> {
    if p.residue_field_size < BigUint::from(3u32) {
        return Err(step_error(
            "choice of t",
            format!("R/({}) has fewer than 3 elements", p.value),
        ));
    }
    let field = ring.residue_field(&p.value);
    let (ap, yp) = (field.reduce(alpha), field.reduce(y));
    for k in 1u32..4 {
        let t = field.element(&BigUint::from(k));
        if !(ap.clone() * t.clone() + yp.clone()).is_zero() {
            return Ok(field.lift(&t));
        }
    }
    Err(step_error(
        "choice of t",
        format!("no residue works modulo {}", p.value),
    ))
}

/// Checks that `X_0 mod p` is subregular with the closed-form centralizer:
/// returns `(dim C, dim of the closed-form span)`.
pub fn subregular_dimensions<R: Pid>(
    ring: &R,
    x0: &Matrix<R::Elem>,
    y: &R::Elem,
    p: &PrimeElement<R::Elem>,
) -> (usize, usize) {
    let n = x0.n();
    let field = ring.residue_field(&p.value);
    let x0p = reduce_matrix(&field, x0);
    let centralizer = crate::regularity::centralizer_basis_mod_p(ring, x0, p).len();
    let mut basis = vec![x0p.identity_like()];
    for i in 1..n - 1 {
        basis.push(&basis[i - 1] * &x0p);
    }
    basis.extend(centralizer_extras(n, y).iter().map(|e| reduce_matrix(&field, e)));
    let span = Matrix::from_fn(n * n, basis.len(), |r, k| basis[k].entries()[r].clone());
    (centralizer, crate::matrix::rank(&span))
}
