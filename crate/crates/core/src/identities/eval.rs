//! Exact expansion of both sides of each catalogued identity.

use num_traits::{One, Zero};

use crate::classical;
use crate::combin::{binomial, falling_factorial, multinomial};
use crate::error::{Error, Result};
use crate::norlund::{norlund_numbers, norlund_poly, NorlundKind, ParamVec};
use crate::poly::{conjugate_dilation, linear, Poly};
use crate::rational::{rat, rat_int, rat_pow, sign_pow, Rational};

use super::correction::Correction;
use super::{IdentityId, TuplePoint};

/// Exactly expanded left- and right-hand sides of one tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct Sides {
    pub lhs: Poly,
    pub rhs: Poly,
}

impl Sides {
    pub fn residual(&self) -> Poly {
        &self.lhs - &self.rhs
    }
}

/// A tuple rejected by a side condition (reported, never silently dropped).
#[derive(Clone, Debug, PartialEq)]
pub struct Skip {
    pub reason: String,
}

fn skip<T>(reason: impl Into<String>) -> std::result::Result<T, Skip> {
    Err(Skip {
        reason: reason.into(),
    })
}

/// The Beta polynomial `x^k (1+x)^{n-k}`.
pub fn beta_poly(k: u64, n: u64) -> Result<Poly> {
    if k > n {
        return Err(Error::IndexOutOfRange { k, n });
    }
    Ok(&Poly::monomial(k as usize) * &linear(1, 1).pow((n - k) as usize))
}

/// The Bernstein polynomial `C(n,k) x^k (1-x)^{n-k}`.
pub fn bernstein_poly(k: u64, n: u64) -> Result<Poly> {
    if k > n {
        return Err(Error::IndexOutOfRange { k, n });
    }
    let base = &Poly::monomial(k as usize) * &linear(1, -1).pow((n - k) as usize);
    Ok(base.scale(&binomial(n, k)))
}

/// Expands both sides of `id` at `point`, optionally under a candidate
/// correction (sign corrections multiply the left-hand side; the
/// parameterized-Euler correction is specific to `EVEN_RAABE_HIGHER`).
pub fn identity_sides(
    id: IdentityId,
    point: &TuplePoint,
    correction: Option<Correction>,
) -> std::result::Result<Sides, Skip> {
    let mut sides = raw_sides(id, point, correction)?;
    if let Some(c) = correction {
        let factor = match c {
            Correction::GlobalSign => -Rational::one(),
            Correction::ExtraSignN => sign_pow(point.n),
            Correction::ExtraSignK => sign_pow(eff_k(point)),
            Correction::ExtraSignNK => sign_pow(point.n + eff_k(point)),
            Correction::ParamEulerLeft => Rational::one(),
        };
        sides.lhs = sides.lhs.scale(&factor);
    }
    Ok(sides)
}

fn eff_k(point: &TuplePoint) -> u64 {
    point
        .k
        .or(point.a.as_ref().map(|a| a.len() as u64))
        .unwrap_or(0)
}

fn b_poly(n: u64) -> Poly {
    classical::bernoulli_poly(n as usize)
}

fn e_poly(n: u64) -> Poly {
    classical::euler_poly(n as usize)
}

fn b_num(n: u64) -> Rational {
    classical::bernoulli_number(n as usize)
}

fn e_num(n: u64) -> Rational {
    classical::euler_number(n as usize)
}

fn nb_poly(a: &ParamVec, n: u64) -> Poly {
    norlund_poly(NorlundKind::Bernoulli, a, n as usize)
}

fn ne_poly(a: &ParamVec, n: u64) -> Poly {
    norlund_poly(NorlundKind::Euler, a, n as usize)
}

fn const_sides(lhs: Rational, rhs: Rational) -> Sides {
    Sides {
        lhs: Poly::constant(lhs),
        rhs: Poly::constant(rhs),
    }
}

fn req_k(point: &TuplePoint) -> u64 {
    point.k.expect("tuple missing k")
}

fn req_m(point: &TuplePoint) -> u64 {
    point.m.expect("tuple missing m")
}

fn req_p(point: &TuplePoint) -> u64 {
    point.p.expect("tuple missing p")
}

fn req_a(point: &TuplePoint) -> &ParamVec {
    point.a.as_ref().expect("tuple missing a")
}

fn raw_sides(
    id: IdentityId,
    t: &TuplePoint,
    correction: Option<Correction>,
) -> std::result::Result<Sides, Skip> {
    let n = t.n;
    match id {
        IdentityId::BernNum3Case => {
            let k = req_k(t);
            if k > n {
                return skip("side condition 0 <= k <= n");
            }
            let mut lhs = Rational::zero();
            for j in 0..=(n - k) {
                lhs += binomial(n - k, j) * b_num(j + k);
            }
            let mut rhs = Rational::zero();
            for j in 0..=k {
                rhs += binomial(k, j) * sign_pow(j) * b_num(n - j);
            }
            // The three cases add 0, (-1)^{n-1} or n(-1)^{n-1}; their n-floors
            // are automatic on the triangle 0 <= k <= n.
            if k + 1 == n {
                rhs += sign_pow(n + 1);
            } else if k == n {
                rhs += rat_int(n as i64) * sign_pow(n + 1);
            }
            Ok(const_sides(lhs, rhs))
        }

        IdentityId::Kim1Poly => {
            let k = req_k(t);
            if k > n {
                return skip("side condition 0 <= k <= n");
            }
            let mut lhs = Poly::zero();
            for j in 0..=(n - k) {
                lhs = &lhs + &b_poly(j + k).scale(&binomial(n - k, j));
            }
            let mut rhs = Poly::zero();
            for j in 0..=k {
                rhs = &rhs + &b_poly(n - j).scale(&(binomial(k, j) * sign_pow(j)));
            }
            rhs = &rhs + &kim1_extra(n, k);
            Ok(Sides { lhs, rhs })
        }

        IdentityId::KimEulerNum => {
            let k = req_k(t);
            if k > n {
                return skip("side condition 0 <= k <= n");
            }
            let mut lhs = Rational::zero();
            for j in 0..=(n - k) {
                lhs += binomial(n - k, j) * sign_pow(j) * e_num(j + k);
            }
            let mut sum = Rational::zero();
            for j in 0..=k {
                sum += binomial(k, j) * e_num(n - j);
            }
            let mut rhs = sum * sign_pow(n + k + 1);
            if k == 0 {
                rhs += rat_int(2);
            }
            Ok(const_sides(lhs, rhs))
        }

        IdentityId::KimPolyEuler => {
            let k = req_k(t);
            if k > n {
                return skip("side condition 0 <= k <= n");
            }
            let mut lhs = Poly::zero();
            for j in 0..=(n - k) {
                lhs = &lhs + &e_poly(j + k).scale(&(binomial(n - k, j) * sign_pow(j)));
            }
            let mut sum = Poly::zero();
            for j in 0..=k {
                sum = &sum + &e_poly(n - j).scale(&binomial(k, j));
            }
            let bernstein = &Poly::monomial(k as usize) * &linear(1, -1).pow((n - k) as usize);
            let rhs = &sum.scale(&sign_pow(n + k + 1)) + &bernstein.scale(&rat_int(2));
            Ok(Sides { lhs, rhs })
        }

        IdentityId::EulerSignLemma => {
            let k = req_k(t);
            if k > n {
                return skip("side condition 0 <= k <= n");
            }
            if k == n {
                // The lemma's proof drops a 2*0^{n-k} term, so on the
                // diagonal the two sides differ by exactly -2.
                return skip("side condition k < n (at k = n the sides differ by exactly -2)");
            }
            let mut lhs = Rational::zero();
            let mut rhs = Rational::zero();
            for j in 0..=k {
                let e = e_num(n - j);
                lhs += binomial(k, j) * &e;
                rhs += binomial(k, j) * sign_pow(k - j) * &e;
            }
            Ok(const_sides(lhs * sign_pow(n + k + 1), rhs))
        }

        IdentityId::BinomialBase => {
            let k = req_k(t);
            if k > n {
                return skip("side condition 0 <= k <= n");
            }
            let mut lhs = Poly::zero();
            for j in 0..=(n - k) {
                lhs = &lhs + &Poly::monomial((j + k) as usize).scale(&binomial(n - k, j));
            }
            let mut rhs = Poly::zero();
            for j in 0..=k {
                rhs = &rhs + &linear(1, 1).pow((n - j) as usize).scale(&(binomial(k, j) * sign_pow(j)));
            }
            Ok(Sides { lhs, rhs })
        }

        IdentityId::CancellationB => {
            let mut lhs = Poly::zero();
            for j in 0..=n {
                lhs = &lhs + &b_poly(j).scale(&binomial(n, j));
            }
            lhs = &lhs - &b_poly(n);
            let rhs = if n == 0 {
                Poly::zero()
            } else {
                Poly::monomial(n as usize - 1).scale(&rat_int(n as i64))
            };
            Ok(Sides { lhs, rhs })
        }

        IdentityId::CancellationE => {
            let mut lhs = e_poly(n);
            for j in 0..=n {
                lhs = &lhs + &e_poly(j).scale(&binomial(n, j));
            }
            let rhs = Poly::monomial(n as usize).scale(&rat_int(2));
            Ok(Sides { lhs, rhs })
        }

        IdentityId::Prop42 => {
            let a = req_a(t);
            debug_assert_eq!(a.len(), 1);
            let a0 = &a.entries()[0];
            let lhs = nb_poly(a, n);
            let rhs = conjugate_dilation(&b_poly(n), a0, n as i64);
            Ok(Sides { lhs, rhs })
        }

        IdentityId::Prop43 => {
            let a = req_a(t);
            let y = t.y.as_ref().expect("tuple missing y");
            let mut lhs = Poly::zero();
            for l in 0..=n {
                let value = binomial(n, l) * nb_poly(a, n - l).eval(y);
                lhs = &lhs + &Poly::monomial(l as usize).scale(&value);
            }
            let rhs = nb_poly(a, n).shift(y);
            Ok(Sides { lhs, rhs })
        }

        IdentityId::Prop44 => {
            // Tuple n is the theorem's index: the polynomial degree is 2n+1.
            let a = req_a(t);
            let midpoint = a.sum() * rat(1, 2);
            let lhs = nb_poly(a, 2 * n + 1).eval(&midpoint);
            Ok(const_sides(lhs, Rational::zero()))
        }

        IdentityId::MultinomialBPoly => {
            let a = req_a(t);
            let k = a.len();
            let xs = t.xs.as_ref().expect("tuple missing xs");
            if xs.len() == k {
                // Point check: both sides fully evaluated.
                let total: Rational = xs.iter().sum();
                let lhs = nb_poly(a, n).eval(&total);
                let mut rhs = Rational::zero();
                for parts in compositions(n, k) {
                    let mut term = multinomial(n, &parts).expect("parts sum to n");
                    for (j, (i, x)) in parts.iter().zip(xs).enumerate() {
                        term *= order_one_poly(a, j, *i).eval(x);
                    }
                    rhs += term;
                }
                Ok(const_sides(lhs, rhs))
            } else {
                // Polynomial identity in x_1 with x_2..x_k fixed at offsets.
                debug_assert_eq!(xs.len() + 1, k);
                let offset: Rational = xs.iter().sum();
                let lhs = nb_poly(a, n).shift(&offset);
                let mut rhs = Poly::zero();
                for parts in compositions(n, k) {
                    let coeff = multinomial(n, &parts).expect("parts sum to n");
                    let mut term = order_one_poly(a, 0, parts[0]).scale(&coeff);
                    for (j, (i, x)) in parts[1..].iter().zip(xs).enumerate() {
                        term = term.scale(&order_one_poly(a, j + 1, *i).eval(x));
                    }
                    rhs = &rhs + &term;
                }
                Ok(Sides { lhs, rhs })
            }
        }

        IdentityId::MultinomialBNum => {
            let a = req_a(t);
            let k = a.len();
            let table = norlund_numbers(NorlundKind::Bernoulli, a, n as usize);
            let lhs = table.number(n as usize).clone();
            let mut rhs = Rational::zero();
            for parts in compositions(n, k) {
                let mut term = multinomial(n, &parts).expect("parts sum to n");
                for (j, i) in parts.iter().enumerate() {
                    term *= order_one_number(a, j, *i);
                }
                rhs += term;
            }
            Ok(const_sides(lhs, rhs))
        }

        IdentityId::NorlundKim => {
            let k = req_k(t);
            let p = req_p(t);
            if k > n {
                return skip("side condition 0 <= k <= n");
            }
            if p == 0 {
                return skip("side condition p >= 1 (the right-hand side uses order p-1)");
            }
            let ones_p = ParamVec::ones(p as usize);
            let ones_pm1 = ParamVec::ones(p as usize - 1);
            let mut lhs = Poly::zero();
            for j in 0..=(n - k) {
                lhs = &lhs + &nb_poly(&ones_p, j + k).scale(&binomial(n - k, j));
            }
            let mut rhs = Poly::zero();
            for j in 0..=k {
                let mut braced = nb_poly(&ones_p, n - j);
                if n - j >= 1 {
                    braced =
                        &braced + &nb_poly(&ones_pm1, n - j - 1).scale(&rat_int((n - j) as i64));
                }
                rhs = &rhs + &braced.scale(&(binomial(k, j) * sign_pow(j)));
            }
            Ok(Sides { lhs, rhs })
        }

        IdentityId::MultidimEulerKim => {
            let k = req_k(t);
            let p = req_p(t);
            if k > n {
                return skip("side condition 0 <= k <= n");
            }
            if p == 0 {
                return skip("side condition p >= 1 (the right-hand side uses order p-1)");
            }
            let ones_p = ParamVec::ones(p as usize);
            let ones_pm1 = ParamVec::ones(p as usize - 1);
            let mut lhs = Poly::zero();
            for j in 0..=(n - k) {
                lhs = &lhs + &ne_poly(&ones_p, j + k).scale(&(binomial(n - k, j) * sign_pow(j)));
            }
            let mut first = Poly::zero();
            let mut second = Poly::zero();
            let minus_one = rat_int(-1);
            for j in 0..=k {
                let c = binomial(k, j);
                first = &first + &ne_poly(&ones_p, n - j).scale(&c);
                second = &second + &ne_poly(&ones_pm1, n - j).shift(&minus_one).scale(&c);
            }
            let rhs = &first.scale(&sign_pow(n + k + 1))
                + &second.scale(&(rat_int(2) * sign_pow(n + k)));
            Ok(Sides { lhs, rhs })
        }

        IdentityId::RaabeB => {
            let m = req_m(t);
            if m == 0 {
                return skip("side condition m >= 1");
            }
            let a = req_a(t);
            let k = a.len() as u64;
            let poly = nb_poly(a, n);
            let lhs = poly
                .scale_arg(&rat_int(m as i64))
                .scale(&rat_pow(&rat_int(m as i64), k as i64 - n as i64));
            let mut rhs = Poly::zero();
            for shifts in grid_shifts(a, m) {
                rhs = &rhs + &poly.shift(&shifts.offset);
            }
            Ok(Sides { lhs, rhs })
        }

        IdentityId::RaabeEOdd => {
            let m = req_m(t);
            if m == 0 {
                return skip("side condition m >= 1");
            }
            if m.is_multiple_of(2) {
                return skip("side condition m odd");
            }
            let a = req_a(t);
            let poly = ne_poly(a, n);
            let lhs = poly
                .scale_arg(&rat_int(m as i64))
                .scale(&rat_pow(&rat_int(m as i64), -(n as i64)));
            let mut rhs = Poly::zero();
            for shifts in grid_shifts(a, m) {
                rhs = &rhs + &poly.shift(&shifts.offset).scale(&sign_pow(shifts.parity));
            }
            Ok(Sides { lhs, rhs })
        }

        IdentityId::NielsenEven => {
            let m = req_m(t);
            if m == 0 {
                return skip("side condition m >= 1");
            }
            if m % 2 == 1 {
                return skip("side condition m even");
            }
            let lhs = e_poly(n)
                .scale_arg(&rat_int(m as i64))
                .scale(&rat_pow(&rat_int(m as i64), -(n as i64)));
            let mut sum = Poly::zero();
            let b = b_poly(n + 1);
            for l in 0..m {
                let shift = Rational::new((l as i64).into(), (m as i64).into());
                sum = &sum + &b.shift(&shift).scale(&sign_pow(l));
            }
            let rhs = sum.scale(&rat(-2, n as i64 + 1));
            Ok(Sides { lhs, rhs })
        }

        IdentityId::EvenRaabeHigher => {
            let m = req_m(t);
            if m == 0 {
                return skip("side condition m >= 1");
            }
            if m % 2 == 1 {
                return skip("side condition m even");
            }
            let a = req_a(t);
            let k = a.len() as u64;
            let ff = falling_factorial(n, k);
            let lhs = if ff.is_zero() {
                // k > n: the falling factorial annihilates the left-hand side.
                Poly::zero()
            } else {
                // As printed the Euler factor is the all-ones E^(k)_{n-k}(mx);
                // the ParamEulerLeft correction carries the parameter vector a.
                let e_params = if correction == Some(Correction::ParamEulerLeft) {
                    a.clone()
                } else {
                    ParamVec::ones(k as usize)
                };
                let factor = rat_pow(&rat_int(m as i64), k as i64 - n as i64)
                    * rat_pow(&rat(-1, 2), k as i64)
                    * ff
                    * a.product();
                ne_poly(&e_params, n - k)
                    .scale_arg(&rat_int(m as i64))
                    .scale(&factor)
            };
            let poly = nb_poly(a, n);
            let mut rhs = Poly::zero();
            for shifts in grid_shifts(a, m) {
                rhs = &rhs + &poly.shift(&shifts.offset).scale(&sign_pow(shifts.parity));
            }
            Ok(Sides { lhs, rhs })
        }
    }
}

/// The correction term of the first Kim polynomial identity,
/// `(nx - (n-k)) x^{n-k-1} (x-1)^{k-1}`, with negative exponents resolved by
/// exact division (the divisibility is part of the theorem).
fn kim1_extra(n: u64, k: u64) -> Poly {
    let mut num = Poly::new(vec![rat_int(-((n - k) as i64)), rat_int(n as i64)]);
    num = &num * &Poly::monomial((n - k).saturating_sub(1) as usize);
    num = &num * &linear(-1, 1).pow(k.saturating_sub(1) as usize);
    if n == k {
        num = num
            .div_exact(&Poly::x())
            .expect("x divides the k = n correction term");
    }
    if k == 0 {
        num = num
            .div_exact(&linear(-1, 1))
            .expect("x - 1 divides the k = 0 correction term");
    }
    num
}

/// `B_i^(1)(x | a_j)` as a polynomial.
fn order_one_poly(a: &ParamVec, j: usize, i: u64) -> Poly {
    let single = ParamVec::new(vec![a.entries()[j].clone()]).expect("entry already validated");
    norlund_poly(NorlundKind::Bernoulli, &single, i as usize)
}

/// `B_i^(1)(a_j) = B_i^(1)(0 | a_j)`, the order-one number.
fn order_one_number(a: &ParamVec, j: usize, i: u64) -> Rational {
    let single = ParamVec::new(vec![a.entries()[j].clone()]).expect("entry already validated");
    norlund_numbers(NorlundKind::Bernoulli, &single, i as usize)
        .number(i as usize)
        .clone()
}

/// All ordered `k`-compositions of `n` into nonnegative parts.
fn compositions(n: u64, k: usize) -> Vec<Vec<u64>> {
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut current = vec![0u64; k];
    fill_compositions(n, 0, &mut current, &mut out);
    out
}

fn fill_compositions(rest: u64, idx: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if idx + 1 == current.len() {
        current[idx] = rest;
        out.push(current.clone());
        return;
    }
    for v in 0..=rest {
        current[idx] = v;
        fill_compositions(rest - v, idx + 1, current, out);
    }
}

struct GridShift {
    offset: Rational,
    parity: u64,
}

/// Enumerates `l ∈ {0..m-1}^k` as the shift `(Σ a_i l_i)/m` plus the parity
/// of `|l|`; `k = 0` yields the single empty tuple.
fn grid_shifts(a: &ParamVec, m: u64) -> Vec<GridShift> {
    let k = a.len();
    let m_rat = rat_int(m as i64);
    let mut out = Vec::with_capacity((m as usize).pow(k as u32));
    let mut l = vec![0u64; k];
    loop {
        let mut sum = Rational::zero();
        let mut parity = 0u64;
        for (li, ai) in l.iter().zip(a.entries()) {
            sum += rat_int(*li as i64) * ai;
            parity += *li;
        }
        out.push(GridShift {
            offset: sum / &m_rat,
            parity,
        });
        // Mixed-radix increment in base m.
        let mut idx = 0;
        loop {
            if idx == k {
                return out;
            }
            l[idx] += 1;
            if l[idx] < m {
                break;
            }
            l[idx] = 0;
            idx += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point_nk(n: u64, k: u64) -> TuplePoint {
        let mut t = TuplePoint::new(n);
        t.k = Some(k);
        t
    }

    fn residual(id: IdentityId, t: &TuplePoint) -> Poly {
        identity_sides(id, t, None).unwrap().residual()
    }

    #[test]
    fn beta_and_bernstein_anchor_values() {
        assert_eq!(beta_poly(0, 0).unwrap(), Poly::one());
        assert_eq!(beta_poly(1, 2).unwrap(), Poly::from_ints(&[0, 1, 1]));
        assert_eq!(bernstein_poly(1, 2).unwrap(), Poly::from_ints(&[0, 2, -2]));
        assert!(beta_poly(3, 2).is_err());
        assert!(bernstein_poly(3, 2).is_err());
    }

    #[test]
    fn bern_num_3case_anchors() {
        // (n=2, k=1): both sides -1/3.
        let s = identity_sides(IdentityId::BernNum3Case, &point_nk(2, 1), None).unwrap();
        assert_eq!(s.lhs, Poly::constant(rat(-1, 3)));
        assert_eq!(s.rhs, Poly::constant(rat(-1, 3)));
        // (n=1, k=0): both sides 1/2.
        let s = identity_sides(IdentityId::BernNum3Case, &point_nk(1, 0), None).unwrap();
        assert_eq!(s.lhs, Poly::constant(rat(1, 2)));
        assert!(s.residual().is_zero());
    }

    #[test]
    fn kim1_poly_anchor() {
        // (n=2, k=1): both sides x^2 - 1/3.
        let s = identity_sides(IdentityId::Kim1Poly, &point_nk(2, 1), None).unwrap();
        let expected = Poly::new(vec![rat(-1, 3), rat_int(0), rat_int(1)]);
        assert_eq!(s.lhs, expected);
        assert_eq!(s.rhs, expected);
    }

    #[test]
    fn kim1_extra_edge_cases() {
        // k = 0: the term collapses to n x^{n-1}.
        assert_eq!(kim1_extra(4, 0), Poly::monomial(3).scale(&rat_int(4)));
        // k = n: the term collapses to n (x-1)^{n-1}.
        assert_eq!(kim1_extra(3, 3), linear(-1, 1).pow(2).scale(&rat_int(3)));
        assert_eq!(kim1_extra(0, 0), Poly::zero());
    }

    #[test]
    fn kim_poly_euler_anchor() {
        // (n=2, k=1): both sides -x^2 + 2x - 1/2.
        let s = identity_sides(IdentityId::KimPolyEuler, &point_nk(2, 1), None).unwrap();
        let expected = Poly::new(vec![rat(-1, 2), rat_int(2), rat_int(-1)]);
        assert_eq!(s.lhs, expected);
        assert_eq!(s.rhs, expected);
    }

    #[test]
    fn kim_euler_num_passes_on_the_diagonal_where_the_quoted_form_fails() {
        // The restated form (global (-1)^{n+k+1}) holds at n = k, while the
        // form with (-1)^{k-j} inside the sum misses it by exactly 2 there.
        for n in 0..=8u64 {
            assert!(residual(IdentityId::KimEulerNum, &point_nk(n, n)).is_zero());

            let mut quoted_rhs = Rational::zero();
            for j in 0..=n {
                quoted_rhs += binomial(n, j) * sign_pow(n - j) * e_num(n - j);
            }
            if n == 0 {
                quoted_rhs += rat_int(2);
            }
            let lhs = e_num(n); // n = k collapses the left side to E_n.
            assert_eq!(lhs - quoted_rhs, rat_int(-2), "diagonal gap at n = {n}");
        }
    }

    #[test]
    fn euler_sign_lemma_diagonal_is_skipped_with_documented_gap() {
        let err = identity_sides(IdentityId::EulerSignLemma, &point_nk(4, 4), None).unwrap_err();
        assert!(err.reason.contains("k < n"), "reason: {}", err.reason);
        // Pin the gap itself: LHS - RHS = -2 on the diagonal.
        for n in 0..=6u64 {
            let mut lhs = Rational::zero();
            let mut rhs = Rational::zero();
            for j in 0..=n {
                let e = e_num(n - j);
                lhs += binomial(n, j) * &e;
                rhs += binomial(n, j) * sign_pow(n - j) * &e;
            }
            assert_eq!(lhs * sign_pow(2 * n + 1) - rhs, rat_int(-2));
        }
    }

    #[test]
    fn multidim_euler_kim_anchor() {
        // (p=1, k=0, n=1): both sides 3/2 - x.
        let mut t = point_nk(1, 0);
        t.p = Some(1);
        let s = identity_sides(IdentityId::MultidimEulerKim, &t, None).unwrap();
        let expected = Poly::new(vec![rat(3, 2), rat_int(-1)]);
        assert_eq!(s.lhs, expected);
        assert_eq!(s.rhs, expected);
    }

    #[test]
    fn raabe_b_anchors() {
        // m = 1 collapses to a single term.
        let mut t = TuplePoint::new(7);
        t.m = Some(1);
        t.a = Some("2,-1/3".parse().unwrap());
        assert!(residual(IdentityId::RaabeB, &t).is_zero());
        // (m=2, a=(1), n=2): both sides 2x^2 - x + 1/12.
        let mut t = TuplePoint::new(2);
        t.m = Some(2);
        t.a = Some("1".parse().unwrap());
        let s = identity_sides(IdentityId::RaabeB, &t, None).unwrap();
        assert_eq!(s.lhs, Poly::new(vec![rat(1, 12), rat_int(-1), rat_int(2)]));
        assert!(s.residual().is_zero());
    }

    #[test]
    fn raabe_e_odd_anchor() {
        // (n=1, k=1, m=3, a=(1)): both sides x - 1/6.
        let mut t = TuplePoint::new(1);
        t.m = Some(3);
        t.a = Some("1".parse().unwrap());
        let s = identity_sides(IdentityId::RaabeEOdd, &t, None).unwrap();
        assert_eq!(s.lhs, Poly::new(vec![rat(-1, 6), rat_int(1)]));
        assert!(s.residual().is_zero());
        // Even m violates the side condition.
        t.m = Some(2);
        assert!(identity_sides(IdentityId::RaabeEOdd, &t, None).is_err());
    }

    #[test]
    fn nielsen_even_anchor() {
        // (n=0, m=2): both sides 1.
        let mut t = TuplePoint::new(0);
        t.m = Some(2);
        let s = identity_sides(IdentityId::NielsenEven, &t, None).unwrap();
        assert_eq!(s.lhs, Poly::one());
        assert!(s.residual().is_zero());
    }

    #[test]
    fn even_raabe_higher_printed_form_anchor_and_failure() {
        // (n=1, k=1, m=2, a=(1)): residual zero as printed (both sides -1/2).
        let mut t = TuplePoint::new(1);
        t.m = Some(2);
        t.a = Some("1".parse().unwrap());
        let s = identity_sides(IdentityId::EvenRaabeHigher, &t, None).unwrap();
        assert_eq!(s.lhs, Poly::constant(rat(-1, 2)));
        assert!(s.residual().is_zero());

        // (n=2, k=1, m=2, a=(2)): fails as printed, passes with the
        // parameterized Euler factor on the left.
        let mut t = TuplePoint::new(2);
        t.m = Some(2);
        t.a = Some("2".parse().unwrap());
        assert!(!residual(IdentityId::EvenRaabeHigher, &t).is_zero());
        let corrected =
            identity_sides(IdentityId::EvenRaabeHigher, &t, Some(Correction::ParamEulerLeft))
                .unwrap();
        assert!(corrected.residual().is_zero());
        assert_eq!(corrected.rhs, Poly::new(vec![rat_int(1), rat_int(-2)]));
    }

    #[test]
    fn compositions_enumerate_exactly() {
        assert_eq!(compositions(0, 0), vec![Vec::<u64>::new()]);
        assert!(compositions(3, 0).is_empty());
        assert_eq!(compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        // C(n+k-1, k-1) ordered compositions.
        assert_eq!(compositions(10, 3).len(), 66);
    }

    #[test]
    fn grid_shifts_cover_the_lattice() {
        let a: ParamVec = "1,1".parse().unwrap();
        let shifts = grid_shifts(&a, 2);
        assert_eq!(shifts.len(), 4);
        let parities: u64 = shifts.iter().map(|s| s.parity % 2).sum();
        assert_eq!(parities, 2);
        // k = 0: exactly the empty tuple.
        assert_eq!(grid_shifts(&ParamVec::empty(), 5).len(), 1);
    }
}
