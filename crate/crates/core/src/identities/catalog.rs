//! The identity catalog: every record, its domain, and its exact evaluators.

use num_traits::{One, Signed, Zero};

use crate::exactmath::{binomial, exact_div, ipow, pow2, ExactInt, Poly};
use crate::genfun::{self, GfId};
use crate::pathoracle;
use crate::polyfam;
use crate::triangles;

use super::{Identity, Value};

// ---- shared small oracles ------------------------------------------------

fn cat(n: i64, k: i64) -> ExactInt {
    triangles::catalan_entry(n as usize, k)
}

fn ajt(m: i64, t: i64) -> ExactInt {
    triangles::alt_jacobsthal_entry(m as usize, t)
}

fn ak(k: i64, m: i64, t: i64) -> ExactInt {
    triangles::k_analog_entry(k, m as usize, t)
}

fn btri(m: i64, t: i64) -> ExactInt {
    triangles::b_entry(m as usize, t)
}

fn bino(n: i64, k: i64) -> ExactInt {
    binomial(n as u64, k)
}

/// Fibonacci by its own recurrence; deliberately not routed through any
/// other module so it can serve as an oracle for them.
fn fib(n: i64) -> ExactInt {
    let (mut a, mut b) = (ExactInt::zero(), ExactInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// Jacobsthal numbers by their recurrence, J(1) = J(2) = 1.
fn jac(m: i64) -> ExactInt {
    let (mut a, mut b) = (ExactInt::zero(), ExactInt::one());
    for _ in 1..m {
        let next = &b + &(ExactInt::from(2) * &a);
        a = b;
        b = next;
    }
    b
}

fn fact(n: i64) -> ExactInt {
    let mut acc = ExactInt::one();
    for i in 2..=n {
        acc *= ExactInt::from(i);
    }
    acc
}

fn exact_div_by(a: &ExactInt, d: &ExactInt) -> ExactInt {
    let (q, r) = (a / d, a % d);
    assert!(r.is_zero(), "exact division expected: {a} / {d}");
    q
}

/// Diagonal sum of the alternating triangle along `t + m - 2 = s`, `t > 0`.
fn diag_sum(s: i64) -> ExactInt {
    (1..=(s + 2) / 2).map(|t| ajt(s + 2 - t, t)).sum()
}

/// `a_{m,t} = A(t+2m-2, t)` and `b_{m,t} = -A(t+2m-1, t)`.
fn sub_a(m: i64, t: i64) -> ExactInt {
    ajt(t + 2 * m - 2, t)
}

fn sub_b(m: i64, t: i64) -> ExactInt {
    -ajt(t + 2 * m - 1, t)
}

fn iv(v: ExactInt) -> Value {
    Value::Int(v)
}

/// Extract the coefficient of `q^l` from each `x`-coefficient of a stream.
fn q_slice(stream: &[Poly], l: usize) -> Vec<ExactInt> {
    stream.iter().map(|p| p.coeff(l)).collect()
}

// ---- evaluators ------------------------------------------------------------

fn eval_main1(p: &[i64]) -> (Value, Value) {
    let (n, k) = (p[0], p[1]);
    let rhs = (0..=k).map(|s| cat(n, s) * pow2((k - s) as u64)).sum();
    (iv(bino(n + k + 1, k)), iv(rhs))
}

fn eval_main2(p: &[i64]) -> (Value, Value) {
    let (n, k) = (p[0], p[1]);
    let rhs = (0..=k)
        .map(|s| cat(n + 1, s) * pow2((k - 1 - s).max(0) as u64))
        .sum();
    (iv(bino(n + 1 + k, k)), iv(rhs))
}

fn eval_mm(p: &[i64]) -> (Value, Value) {
    let n = p[0];
    let half_up = (n + 1) / 2; // ceil(n/2)
    let half_down = n / 2;
    let lhs = bino(n + 1, (n + 2) / 2);
    let rhs = (0..=half_up)
        .map(|s| cat(half_up, s) * pow2((half_down - s).max(0) as u64))
        .sum();
    (iv(lhs), iv(rhs))
}

fn eval_dn(p: &[i64]) -> (Value, Value) {
    let n = p[0];
    let lhs = exact_div(
        &(ExactInt::from(n + 3) * triangles::catalan_number(n as usize)),
        2,
    );
    let rhs = (0..=n - 1)
        .map(|k| cat(n, k) * pow2((n - 2 - k).unsigned_abs()))
        .sum();
    (iv(lhs), iv(rhs))
}

fn eval_dual(p: &[i64]) -> (Value, Value) {
    let n = p[0];
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    // Dual ceiling form.
    lhs.push(iv(bino(n + 1, (n + 1) / 2)));
    rhs.push(iv((0..=n / 2)
        .map(|s| cat(n / 2, s) * pow2(((n + 1) / 2 - s) as u64))
        .sum()));
    if n >= 1 {
        // Central binomial as a triangle-row sum, as a closed-form sum, and
        // as the sum of squared binomials.
        let central = bino(2 * n, n);
        lhs.push(iv(central.clone()));
        rhs.push(iv((0..=n - 1)
            .map(|s| cat(n - 1, s) * pow2((n - s) as u64))
            .sum()));
        lhs.push(iv(central.clone()));
        rhs.push(iv((0..=n)
            .map(|s| {
                let num = fact(n + s - 1) * ExactInt::from(n - s) * pow2((n - s) as u64);
                exact_div_by(&num, &(fact(s) * fact(n)))
            })
            .sum()));
        lhs.push(iv(central));
        rhs.push(iv((0..=n).map(|s| bino(n, s).pow(2)).sum()));
    }
    (Value::Tuple(lhs), Value::Tuple(rhs))
}

fn eval_s1(p: &[i64]) -> (Value, Value) {
    let k = p[0];
    let rhs = (0..=k - 1)
        .map(|s| cat(k, s) * pow2((k - 1 - s) as u64))
        .sum();
    (iv(bino(2 * k, k - 1)), iv(rhs))
}

fn eval_larger(p: &[i64]) -> (Value, Value) {
    let (n, k) = (p[0], p[1]);
    let rhs = (0..=n.min(k))
        .map(|s| cat(n, s) * pow2((k - s) as u64))
        .sum();
    (iv(bino(n + k + 1, k)), iv(rhs))
}

fn eval_trap(p: &[i64]) -> (Value, Value) {
    let (m, k, n) = (p[0], p[1], p[2]);
    let v1 = bino(n + k + 1, k);
    let v2: ExactInt = (0..=k).map(|s| cat(n, s) * pow2((k - s) as u64)).sum();
    let head: ExactInt = (0..=k - m)
        .map(|s| cat(n + m, s) * pow2((k - m - s) as u64))
        .sum();
    let tail: ExactInt = (0..=m - 1).map(|s| cat(n + 1 + s, k - s)).sum();
    (
        Value::Tuple(vec![iv(v1), iv(v2.clone())]),
        Value::Tuple(vec![iv(v2), iv(head + tail)]),
    )
}

fn eval_cnk(p: &[i64]) -> (Value, Value) {
    let (n, k) = (p[0], p[1]);
    let rhs = ExactInt::from(2) * bino(n + k, k) - bino(n + k + 1, k);
    (iv(cat(n, k)), iv(rhs))
}

fn eval_bino_gen(p: &[i64]) -> (Value, Value) {
    let (d, n, k) = (p[0], p[1], p[2]);
    let dv = ExactInt::from(d);
    let at = |poly: Poly| poly.eval(&dv);
    let plain = &dv * at(polyfam::catalan_poly(n as usize - 1, k as usize).expect("domain"))
        - ExactInt::from(d - 1)
            * at(polyfam::catalan_poly(n as usize, k as usize).expect("domain"));
    // The modified-family combination needs a (d-2) C(n+1,k-1) correction:
    // Ft_{n,k}(d) = F_{n+1,k-1}(d) + C(n+1,k), so the plain-family identity
    // on (n+1, k-1) plus the triangle rule gives
    //   d Ft_{n-1,k}(d) - (d-1) Ft_{n,k}(d) = C(n,k) - (d-2) C(n+1,k-1).
    // The uncorrected combination equals C(n,k) only at d = 2.
    let modified = &dv
        * at(polyfam::modified_catalan_poly(n as usize - 1, k as usize).expect("domain"))
        - ExactInt::from(d - 1)
            * at(polyfam::modified_catalan_poly(n as usize, k as usize).expect("domain"))
        + ExactInt::from(d - 2) * cat(n + 1, k - 1);
    let c = cat(n, k);
    (
        Value::Tuple(vec![iv(c.clone()), iv(c)]),
        Value::Tuple(vec![iv(plain), iv(modified)]),
    )
}

fn eval_eval_f(p: &[i64]) -> (Value, Value) {
    let (n, k) = (p[0], p[1]);
    let poly = polyfam::catalan_poly(n as usize, k as usize).expect("domain");
    let mut lhs = vec![
        iv(poly.eval(&ExactInt::zero())),
        iv(poly.eval(&ExactInt::one())),
        iv(poly.eval(&ExactInt::one())),
        iv(poly.eval(&ExactInt::from(2))),
    ];
    let mut rhs = vec![
        iv(cat(n, k)),
        iv(cat(n + 1, k)),
        iv(triangles::trapezoid_entry(2, n as usize, k)),
        iv(bino(n + k + 1, k)),
    ];
    if n >= 1 && k < n {
        // The trapezoid form of the x = 2 evaluation holds on the pure
        // binomial branch, i.e. for columns k < m = n.
        lhs.push(iv(poly.eval(&ExactInt::from(2))));
        rhs.push(iv(triangles::trapezoid_entry(n as u32, n as usize + 1, k)));
    }
    (Value::Tuple(lhs), Value::Tuple(rhs))
}

fn eval_eval_ft(p: &[i64]) -> (Value, Value) {
    let (n, k) = (p[0], p[1]);
    let poly = polyfam::modified_catalan_poly(n as usize, k as usize).expect("domain");
    let lhs = vec![
        iv(poly.eval(&ExactInt::zero())),
        iv(poly.eval(&ExactInt::one())),
        iv(poly.eval(&ExactInt::from(2))),
    ];
    let rhs = vec![
        iv(cat(n + 1, k - 1) + cat(n + 1, k)),
        iv(cat(n + 2, k)),
        iv(bino(n + k + 1, k)),
    ];
    (Value::Tuple(lhs), Value::Tuple(rhs))
}

fn eval_nmk(p: &[i64]) -> (Value, Value) {
    let (n, k, m) = (p[0], p[1], p[2]);
    let head: ExactInt = (0..=k - m)
        .map(|s| cat(n + m, s) * pow2((k - m - s) as u64))
        .sum();
    let tail: ExactInt = (1..=m).map(|t| ajt(m, t) * cat(n + m, k - m + t)).sum();
    (iv(bino(n + k + 1, k)), iv(head + tail))
}

fn eval_ac(p: &[i64]) -> (Value, Value) {
    let (n, k) = (p[0], p[1]);
    let rhs = (0..=k).map(|t| ajt(k, t) * cat(n + k, t)).sum();
    (iv(bino(n + k + 1, k)), iv(rhs))
}

fn eval_rowsum(p: &[i64]) -> (Value, Value) {
    let m = p[0];
    let sum: ExactInt = (1..=m).map(|t| ajt(m, t)).sum();
    (
        Value::Tuple(vec![iv(sum), iv(ajt(m, m))]),
        Value::Tuple(vec![iv(ExactInt::one()), iv(ExactInt::one())]),
    )
}

fn eval_colgf(p: &[i64]) -> (Value, Value) {
    let t = p[0];
    const ORDER: usize = 40;
    let stream = genfun::coefficient_stream(GfId::Column { t: t as u32 }, ORDER)
        .expect("column entry is always valid");
    let got: Vec<ExactInt> = stream.iter().map(|c| c.coeff(0)).collect();
    let want: Vec<ExactInt> = (0..=ORDER as i64).map(|j| ajt(t + j, t)).collect();
    (Value::Ints(got), Value::Ints(want))
}

fn eval_sub(p: &[i64]) -> (Value, Value) {
    let n = p[0];
    let nn = ExactInt::from(n);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    // Closed forms for the even/odd column subsequences.
    let closed: [(ExactInt, ExactInt); 8] = [
        (sub_a(n, 2), nn.clone()),
        (sub_b(n, 2), nn.clone()),
        (sub_a(n, 3), &nn * &nn),
        (sub_b(n, 3), &nn * &(&nn + 1)),
        (
            sub_a(n, 4),
            exact_div(&(&nn * &(&nn + 1) * ExactInt::from(4 * n - 1)), 6),
        ),
        (
            sub_b(n, 4),
            exact_div(&(&nn * &(&nn + 1) * ExactInt::from(4 * n + 5)), 6),
        ),
        (
            sub_a(n, 5),
            exact_div(
                &(&nn * &(&nn + 1) * ExactInt::from(2 * n * n + 2 * n - 1)),
                6,
            ),
        ),
        (
            sub_b(n, 5),
            exact_div(&(&nn * (&nn + 1i64).pow(2u32) * &(&nn + 2i64)), 3),
        ),
    ];
    for (l, r) in closed {
        lhs.push(iv(l));
        rhs.push(iv(r));
    }
    // Defining recurrences, checked for every column reachable below t = 7.
    for t in 2..=6 {
        let a_rec: ExactInt = (1..=n).map(|j| sub_a(j, t - 1)).sum::<ExactInt>()
            + (1..=n - 1).map(|j| sub_b(j, t - 1)).sum::<ExactInt>();
        let b_rec: ExactInt = (1..=n).map(|j| sub_b(j, t - 1)).sum::<ExactInt>()
            + (1..=n).map(|j| sub_a(j, t - 1)).sum::<ExactInt>();
        lhs.push(iv(sub_a(n, t)));
        rhs.push(iv(a_rec));
        lhs.push(iv(sub_b(n, t)));
        rhs.push(iv(b_rec));
    }
    (Value::Tuple(lhs), Value::Tuple(rhs))
}

fn eval_lembk(p: &[i64]) -> (Value, Value) {
    let (m, t) = (p[0], p[1]);
    let mut lhs = vec![iv(btri(m, t))];
    let mut rhs = vec![iv(
        ExactInt::one() - (t..=m - 1).map(|j| btri(j, t - 1)).sum::<ExactInt>()
    )];
    let mm = ExactInt::from(m);
    match t {
        1 => {
            lhs.push(iv(btri(m, 1)));
            rhs.push(iv(ExactInt::from(2 - m)));
        }
        2 => {
            lhs.push(iv(btri(m, 2)));
            rhs.push(iv(
                ExactInt::from(4) + exact_div(&(&mm * ExactInt::from(m - 5)), 2)
            ));
        }
        3 => {
            lhs.push(iv(btri(m, 3)));
            rhs.push(iv(
                ExactInt::from(8) - exact_div(&(&mm * ExactInt::from(m * m - 9 * m + 32)), 6)
            ));
        }
        _ => {}
    }
    (Value::Tuple(lhs), Value::Tuple(rhs))
}

fn eval_bs(p: &[i64]) -> (Value, Value) {
    let s = p[0];
    let mut lhs = vec![iv(diag_sum(s))];
    let sign = if s % 2 == 0 { 1 } else { -1 };
    let mut rhs = vec![iv(ExactInt::one() + ExactInt::from(sign) * fib(s))];
    if s >= 1 {
        lhs.push(iv(diag_sum(s + 1)));
        rhs.push(iv(-diag_sum(s) + diag_sum(s - 1) + 1));
    }
    (Value::Tuple(lhs), Value::Tuple(rhs))
}

fn eval_bsq(p: &[i64]) -> (Value, Value) {
    let s = p[0] as usize;
    let q = Poly::variable();
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    if s >= 1 {
        // B_{s+1}(q) = -q B_s(q) + B_{s-1}(q) + q^(s+1). The correction
        // exponent follows from (1+qx-x^2) * F(x,q) = 1/(1-qx); machine
        // checking rejects q^s, which only agrees at q = 1.
        lhs.push(Value::Poly(polyfam::bq_poly(s + 1)));
        rhs.push(Value::Poly(
            &(&(-&q) * &polyfam::bq_poly(s))
                + &(&polyfam::bq_poly(s - 1) + &Poly::monomial(1, s + 1)),
        ));
    }
    // Both defining formulas of the deformed diagonal polynomial.
    lhs.push(Value::Poly(polyfam::bq_tilde_poly(s)));
    rhs.push(Value::Poly(polyfam::bq_tilde_poly_abs_route(s)));
    // Series routes reproduce the triangle routes.
    let f_stream = genfun::coefficient_stream(GfId::Fq, s).expect("registry");
    lhs.push(Value::Poly(f_stream[s].clone()));
    rhs.push(Value::Poly(polyfam::bq_poly(s)));
    let cf_stream = genfun::coefficient_stream(GfId::CFq, s).expect("registry");
    lhs.push(Value::Poly(cf_stream[s].clone()));
    rhs.push(Value::Poly(polyfam::bq_tilde_poly(s)));
    (Value::Tuple(lhs), Value::Tuple(rhs))
}

fn eval_h(p: &[i64]) -> (Value, Value) {
    let m = p[0];
    let h = polyfam::h_poly(m as usize).expect("m >= 1");
    let j = polyfam::j_poly(m as usize).expect("m >= 1");
    let binom_route: ExactInt = (0..=(m - 1) / 2)
        .map(|r| bino(m - r - 1, r) * pow2(r as u64))
        .sum();
    let q_stream = genfun::coefficient_stream(GfId::Q, m as usize).expect("registry");
    let qminus_stream = genfun::coefficient_stream(GfId::QMinus, m as usize).expect("registry");
    let lhs = vec![
        iv(h.eval(&ExactInt::zero())),
        iv(h.eval(&ExactInt::one())),
        iv(h.eval(&ExactInt::from(-1))),
        iv(j.eval(&ExactInt::one())),
        iv(binom_route),
        Value::Poly(q_stream[m as usize].clone()),
        Value::Poly(qminus_stream[m as usize].clone()),
    ];
    let rhs = vec![
        iv(ExactInt::one()),
        iv(ExactInt::one()),
        iv(jac(m)),
        iv(jac(m)),
        iv(jac(m)),
        Value::Poly(h),
        Value::Poly(j),
    ];
    (Value::Tuple(lhs), Value::Tuple(rhs))
}

const L_ORDER: usize = 60;

/// Closed forms for the first four q-expansion coefficients of the row
/// generating function, as numerator/denominator pairs in `x`.
fn l_closed_form(l: usize, order: usize) -> Vec<ExactInt> {
    use crate::exactmath::{BiPoly, RationalGF};
    let one_minus_x = BiPoly::from_coeffs(vec![Poly::one(), Poly::constant(-1)]);
    let (num, den_pow): (BiPoly, u32) = match l {
        0 => (BiPoly::monomial(Poly::one(), 1), 1),
        1 => (BiPoly::monomial(Poly::constant(-1), 3), 2),
        2 => (
            BiPoly::from_coeffs(vec![
                Poly::zero(),
                Poly::zero(),
                Poly::zero(),
                Poly::one(),
                Poly::constant(-1),
                Poly::one(),
            ]),
            3,
        ),
        3 => (
            BiPoly::from_coeffs(vec![
                Poly::zero(),
                Poly::zero(),
                Poly::zero(),
                Poly::zero(),
                Poly::zero(),
                Poly::constant(-2),
                Poly::constant(2),
                Poly::constant(-1),
            ]),
            4,
        ),
        _ => panic!("no closed form beyond l = 3"),
    };
    let gf = RationalGF::new(num, one_minus_x.pow(den_pow)).expect("unit constant term");
    gf.expand(order).iter().map(|c| c.coeff(0)).collect()
}

fn eval_l(p: &[i64]) -> (Value, Value) {
    let l = p[0] as usize;
    let recursion = polyfam::l_series(l, L_ORDER);
    let q_stream = genfun::coefficient_stream(GfId::Q, L_ORDER).expect("registry");
    let transpose = q_slice(&q_stream, l);
    let mut lhs = vec![Value::Ints(recursion.clone())];
    let mut rhs = vec![Value::Ints(transpose)];
    if l <= 3 {
        lhs.push(Value::Ints(recursion.clone()));
        rhs.push(Value::Ints(l_closed_form(l, L_ORDER)));
    }
    // The lowest-degree claim is only observable while it fits under the
    // truncation order.
    if l + 1 + l % 2 <= L_ORDER {
        let lowest = recursion.iter().position(|c| !c.is_zero());
        lhs.push(iv(ExactInt::from(lowest.map_or(-1, |v| v as i64))));
        rhs.push(iv(ExactInt::from((l + 1 + l % 2) as i64)));
    }
    (Value::Tuple(lhs), Value::Tuple(rhs))
}

fn eval_k(p: &[i64]) -> (Value, Value) {
    let (k, m) = (p[0], p[1]);
    let mu = m as usize;
    let hk = polyfam::hk_poly(k, mu).expect("domain");
    let qk1 = genfun::coefficient_stream(GfId::QkAtOne { k }, 2 * mu).expect("registry");
    let qk = genfun::coefficient_stream(GfId::Qk { k }, 40.max(mu)).expect("registry");
    let lk = polyfam::lk_series(k, mu, 40).expect("domain");
    let lhs = vec![
        iv(hk.eval(&ExactInt::one())),
        Value::Poly(qk1[2 * mu - 1].clone()),
        Value::Poly(qk1[2 * mu].clone()),
        Value::Poly(qk[mu].clone()),
        Value::Ints(lk),
    ];
    let kpow = Poly::constant(ipow(k, (m - 1) as u64));
    let rhs = vec![
        iv(ipow(k, ((m - 1) / 2) as u64)),
        Value::Poly(kpow.clone()),
        Value::Poly(kpow),
        Value::Poly(hk),
        Value::Ints(q_slice(&qk[..=40], mu)),
    ];
    (Value::Tuple(lhs), Value::Tuple(rhs))
}

fn eval_k2diag(p: &[i64]) -> (Value, Value) {
    let s = p[0];
    let pos: ExactInt = (1..=s).map(|t| ak(2, 2 * s - t, t)).sum();
    let neg: ExactInt = (1..=s).map(|t| ak(2, 2 * s + 1 - t, t)).sum();
    (
        Value::Tuple(vec![iv(pos), iv(-neg)]),
        Value::Tuple(vec![
            iv(fib(2 * s)),
            iv(pathoracle::count_dyck_height(2 * (s as u32 + 1), 3)),
        ]),
    )
}

fn eval_km1diag(p: &[i64]) -> (Value, Value) {
    let s = p[0];
    let diag: ExactInt = (0..=s).map(|t| ak(-1, 2 * s - t, t)).sum();
    let mut lhs = vec![iv(diag)];
    let mut rhs = vec![iv(fib(s - 1).pow(2))];
    if s >= 4 {
        lhs.push(iv(ak(-1, s, 4).abs()));
        rhs.push(iv(bino(s - 1, 2) / ExactInt::from(2)));
    }
    let rowsum: ExactInt = (2..=s).map(|t| ak(-1, s, t).abs()).sum();
    let alt_pow: ExactInt = (0..=(s - 2) / 2)
        .map(|j| ExactInt::from(if j % 2 == 0 { 1 } else { -1 }) * pow2((s - 2 - 2 * j) as u64))
        .sum();
    lhs.push(iv(rowsum));
    rhs.push(iv(alt_pow));
    (Value::Tuple(lhs), Value::Tuple(rhs))
}

// ---- the catalog -----------------------------------------------------------

pub(super) fn build() -> Vec<Identity> {
    vec![
        Identity {
            id: "I-main1",
            statement: "binom(n+k+1, k) = sum_{s=0..k} C(n,s) 2^(k-s)",
            params: &["n", "k"],
            domain: "n >= 1, 0 <= k <= n+1",
            in_domain: |p| p[0] >= 1 && p[1] >= 0 && p[1] <= p[0] + 1,
            exploratory_domain: None,
            eval: eval_main1,
            default_box: &[(1, 40), (0, 41)],
            example: &[3, 2],
        },
        Identity {
            id: "I-main2",
            statement: "binom(n+1+k, k) = sum_{s=0..k} C(n+1,s) 2^(max(k-1-s, 0))",
            params: &["n", "k"],
            domain: "n >= 1, 0 <= k <= n+1",
            in_domain: |p| p[0] >= 1 && p[1] >= 0 && p[1] <= p[0] + 1,
            exploratory_domain: None,
            eval: eval_main2,
            default_box: &[(1, 40), (0, 41)],
            example: &[3, 2],
        },
        Identity {
            id: "I-mm",
            statement: "binom(n+1, ceil((n+1)/2)) = sum_{s=0..ceil(n/2)} C(ceil(n/2),s) 2^(max(floor(n/2)-s, 0))",
            params: &["n"],
            domain: "n >= 0",
            in_domain: |p| p[0] >= 0,
            exploratory_domain: None,
            eval: eval_mm,
            default_box: &[(0, 80)],
            example: &[5],
        },
        Identity {
            id: "I-Dn",
            statement: "(n+3)/2 C_n = sum_{k=0..n-1} C(n,k) 2^|n-2-k|",
            params: &["n"],
            domain: "n >= 1",
            in_domain: |p| p[0] >= 1,
            exploratory_domain: None,
            eval: eval_dn,
            default_box: &[(1, 40)],
            example: &[1],
        },
        Identity {
            id: "I-dual",
            statement: "binom(n+1, floor((n+1)/2)) = sum_{s=0..floor(n/2)} C(floor(n/2),s) 2^(ceil(n/2)-s); binom(2n,n) = sum C(n-1,s) 2^(n-s) = sum binom(n,s)^2",
            params: &["n"],
            domain: "n >= 0",
            in_domain: |p| p[0] >= 0,
            exploratory_domain: None,
            eval: eval_dual,
            default_box: &[(0, 40)],
            example: &[3],
        },
        Identity {
            id: "I-s1",
            statement: "binom(2k, k-1) = sum_{s=0..k-1} C(k,s) 2^(k-1-s)",
            params: &["k"],
            domain: "k >= 1",
            in_domain: |p| p[0] >= 1,
            exploratory_domain: None,
            eval: eval_s1,
            default_box: &[(1, 40)],
            example: &[3],
        },
        Identity {
            id: "I-larger",
            statement: "binom(n+k+1, k) = sum_{s=0..min(n,k)} C(n,s) 2^(k-s)",
            params: &["n", "k"],
            domain: "n >= 0, 0 <= k <= n+1",
            in_domain: |p| p[0] >= 0 && p[1] >= 0 && p[1] <= p[0] + 1,
            exploratory_domain: None,
            eval: eval_larger,
            default_box: &[(0, 40), (0, 41)],
            example: &[4, 3],
        },
        Identity {
            id: "I-trap",
            statement: "binom(n+k+1, k) = sum_{s=0..k} C(n,s) 2^(k-s) = sum_{s=0..k-m} C(n+m,s) 2^(k-m-s) + sum_{s=0..m-1} C(n+1+s, k-s)",
            params: &["m", "k", "n"],
            // The wider quantifier k <= n+m admits counterexamples in the
            // middle member (m=3, k=4, n=1 gives 15 vs 20 vs 20); the chain
            // needs k <= n+1. The wide box stays reachable exploratorily.
            domain: "1 <= m <= k <= n+1",
            in_domain: |p| p[0] >= 1 && p[0] <= p[1] && p[2] >= 0 && p[1] <= p[2] + 1,
            exploratory_domain: Some(|p| p[0] >= 1 && p[0] <= p[1] && p[2] >= 0 && p[1] <= p[2] + p[0]),
            eval: eval_trap,
            default_box: &[(1, 31), (1, 31), (0, 30)],
            example: &[3, 4, 5],
        },
        Identity {
            id: "I-cnk",
            statement: "C(n,k) = 2 binom(n+k, k) - binom(n+k+1, k)",
            params: &["n", "k"],
            domain: "0 <= k <= n",
            in_domain: |p| p[0] >= 0 && p[1] >= 0 && p[1] <= p[0],
            exploratory_domain: None,
            eval: eval_cnk,
            default_box: &[(0, 60), (0, 60)],
            example: &[5, 3],
        },
        Identity {
            id: "I-bino",
            statement: "C(n,k) = d F_{n-1,k}(d) - (d-1) F_{n,k}(d); modified family: C(n,k) = d Ft_{n-1,k}(d) - (d-1) Ft_{n,k}(d) + (d-2) C(n+1,k-1) (the correction term vanishes only at d = 2)",
            params: &["d", "n", "k"],
            domain: "d >= 1, n >= 1, 0 <= k <= n-1",
            in_domain: |p| p[0] >= 1 && p[1] >= 1 && p[2] >= 0 && p[2] < p[1],
            exploratory_domain: None,
            eval: eval_bino_gen,
            default_box: &[(1, 6), (1, 30), (0, 29)],
            example: &[2, 5, 3],
        },
        Identity {
            id: "I-evalF",
            statement: "F_{n,k}(0) = C(n,k); F_{n,k}(1) = C(n+1,k) = C_2(n,k); F_{n,k}(2) = binom(n+k+1,k), = C_n(n+1,k) for k < n",
            params: &["n", "k"],
            domain: "0 <= k <= n",
            in_domain: |p| p[0] >= 0 && p[1] >= 0 && p[1] <= p[0],
            exploratory_domain: None,
            eval: eval_eval_f,
            default_box: &[(0, 30), (0, 30)],
            example: &[5, 3],
        },
        Identity {
            id: "I-evalFt",
            statement: "Ft_{n,k}(0) = C(n+1,k-1)+C(n+1,k); Ft_{n,k}(1) = C(n+2,k); Ft_{n,k}(2) = binom(n+k+1,k)",
            params: &["n", "k"],
            domain: "0 <= k <= n",
            in_domain: |p| p[0] >= 0 && p[1] >= 0 && p[1] <= p[0],
            exploratory_domain: None,
            eval: eval_eval_ft,
            default_box: &[(0, 30), (0, 30)],
            example: &[5, 3],
        },
        Identity {
            id: "I-nmk",
            statement: "binom(n+k+1, k) = sum_{s=0..k-m} C(n+m,s) 2^(k-m-s) + sum_{t=1..m} A(m,t) C(n+m, k-m+t)",
            params: &["n", "k", "m"],
            domain: "n > k >= m >= 1",
            in_domain: |p| p[0] > p[1] && p[1] >= p[2] && p[2] >= 1,
            exploratory_domain: None,
            eval: eval_nmk,
            default_box: &[(2, 30), (1, 29), (1, 29)],
            example: &[5, 3, 2],
        },
        Identity {
            id: "I-AC",
            statement: "binom(n+k+1, k) = sum_{t=0..k} A(k,t) C(n+k, t)",
            params: &["n", "k"],
            domain: "n > k >= 0",
            in_domain: |p| p[0] > p[1] && p[1] >= 0,
            // Whether the identity extends to k = n is probed exploratorily.
            exploratory_domain: Some(|p| p[0] >= p[1] && p[1] >= 0 && p[0] >= 1),
            eval: eval_ac,
            default_box: &[(1, 30), (0, 29)],
            example: &[4, 3],
        },
        Identity {
            id: "I-rowsum",
            statement: "sum_{t=1..m} A(m,t) = 1 and A(m,m) = 1",
            params: &["m"],
            domain: "m >= 1",
            in_domain: |p| p[0] >= 1,
            exploratory_domain: None,
            eval: eval_rowsum,
            default_box: &[(1, 100)],
            example: &[1],
        },
        Identity {
            id: "I-colgf",
            statement: "expansion of 1/((1-x)(1+x)^t) has x^(m-t) coefficient A(m,t)",
            params: &["t"],
            domain: "t >= 0",
            in_domain: |p| p[0] >= 0,
            exploratory_domain: None,
            eval: eval_colgf,
            default_box: &[(0, 8)],
            example: &[3],
        },
        Identity {
            id: "I-sub",
            statement: "a_{n,2}=n, b_{n,2}=n, a_{n,3}=n^2, b_{n,3}=n(n+1), a_{n,4}=n(n+1)(4n-1)/6, b_{n,4}=n(n+1)(4n+5)/6, a_{n,5}=n(n+1)(2n^2+2n-1)/6, b_{n,5}=n(n+1)^2(n+2)/3, plus the two column recurrences",
            params: &["n"],
            domain: "n >= 1",
            in_domain: |p| p[0] >= 1,
            exploratory_domain: None,
            eval: eval_sub,
            default_box: &[(1, 50)],
            example: &[4],
        },
        Identity {
            id: "I-lembk",
            statement: "B(m,t) = 1 - sum_{j=t..m-1} B(j,t-1); B(n,1)=2-n, B(n,2)=4+n(n-5)/2, B(n,3)=8-n(n^2-9n+32)/6",
            params: &["m", "t"],
            domain: "m >= t >= 1",
            in_domain: |p| p[0] >= p[1] && p[1] >= 1,
            exploratory_domain: None,
            eval: eval_lembk,
            default_box: &[(1, 60), (1, 60)],
            example: &[8, 3],
        },
        Identity {
            id: "I-Bs",
            statement: "B_s = 1 + (-1)^s Fib(s); B_{s+1} = -B_s + B_{s-1} + 1",
            params: &["s"],
            domain: "s >= 0",
            in_domain: |p| p[0] >= 0,
            exploratory_domain: None,
            eval: eval_bs,
            default_box: &[(0, 60)],
            example: &[5],
        },
        Identity {
            id: "I-Bsq",
            statement: "B_{s+1}(q) = -q B_s(q) + B_{s-1}(q) + q^(s+1); the two definitions of Bt_s(q) agree; series and triangle routes agree",
            params: &["s"],
            domain: "s >= 0",
            in_domain: |p| p[0] >= 0,
            exploratory_domain: None,
            eval: eval_bsq,
            default_box: &[(0, 40)],
            example: &[8],
        },
        Identity {
            id: "I-H",
            statement: "H_m(0) = H_m(1) = 1; H_m(-1) = J_m; J_m = J_{m-1} + 2 J_{m-2}; J_m = sum_r binom(m-r-1, r) 2^r; series routes agree",
            params: &["m"],
            domain: "m >= 1",
            in_domain: |p| p[0] >= 1,
            exploratory_domain: None,
            eval: eval_h,
            default_box: &[(1, 50)],
            example: &[5],
        },
        Identity {
            id: "I-L",
            statement: "L_l recursion matches the q^l slice of the row generating function; closed forms for l <= 3; lowest degree is l+1+(l mod 2)",
            params: &["l"],
            domain: "l >= 0",
            in_domain: |p| p[0] >= 0,
            exploratory_domain: None,
            eval: eval_l,
            default_box: &[(0, 15)],
            example: &[2],
        },
        Identity {
            id: "I-k",
            statement: "H_{k,m}(1) = k^floor((m-1)/2); Q_k(x,1) has coefficient k^(m-1) at x^(2m-1) and x^(2m); series and triangle routes agree; L_{k,l} recursion matches the q-slice",
            params: &["k", "m"],
            domain: "k != 0, m >= 1",
            in_domain: |p| p[0] != 0 && p[1] >= 1,
            exploratory_domain: None,
            eval: eval_k,
            default_box: &[(-3, 3), (1, 30)],
            example: &[2, 5],
        },
        Identity {
            id: "I-k2diag",
            statement: "sum_{m+t=2s} A_2(m,t) = Fib(2s); -sum_{m+t=2s+1} A_2(m,t) = Dyck paths of length 2(s+1) with height exactly 3",
            params: &["s"],
            domain: "s >= 1",
            in_domain: |p| p[0] >= 1,
            exploratory_domain: None,
            eval: eval_k2diag,
            default_box: &[(1, 20)],
            example: &[3],
        },
        Identity {
            id: "I-km1diag",
            statement: "sum_{m+t=2s, t>=0} A_{-1}(m,t) = Fib(s-1)^2; |A_{-1}(m,4)| = floor(binom(m-1,2)/2); sum_{t>=2} |A_{-1}(m,t)| matches the 1/((1-2x)(1+x^2)) expansion",
            params: &["s"],
            domain: "s >= 2",
            in_domain: |p| p[0] >= 2,
            exploratory_domain: None,
            eval: eval_km1diag,
            default_box: &[(2, 20)],
            example: &[5],
        },
    ]
}
