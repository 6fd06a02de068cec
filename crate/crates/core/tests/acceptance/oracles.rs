//! Reference computations written independently of the library: plain
//! coefficient vectors, textbook recurrences and brute force.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use repdiff::Rational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

pub fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn padd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect()
}

fn pmul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn pscale(a: &[Rational], c: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * c).collect()
}

/// `a + b·s` with `s² = 1 + sign·ξ²`, coefficients in `ξ`.
#[derive(Clone, Debug)]
pub struct Elem {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    sign: i64,
}

impl Elem {
    pub fn poly(a: Vec<Rational>, sign: i64) -> Self {
        Elem {
            a,
            b: Vec::new(),
            sign,
        }
    }

    pub fn s(sign: i64) -> Self {
        Elem {
            a: Vec::new(),
            b: vec![q(1)],
            sign,
        }
    }

    fn add(&self, o: &Elem) -> Elem {
        Elem {
            a: padd(&self.a, &o.a),
            b: padd(&self.b, &o.b),
            sign: self.sign,
        }
    }

    fn mul(&self, o: &Elem) -> Elem {
        let sigma = vec![q(1), q(0), q(self.sign)];
        let bb = pmul(&pmul(&self.b, &o.b), &sigma);
        Elem {
            a: padd(&pmul(&self.a, &o.a), &bb),
            b: padd(&pmul(&self.a, &o.b), &pmul(&self.b, &o.a)),
            sign: self.sign,
        }
    }

    fn scale(&self, c: &Rational) -> Elem {
        Elem {
            a: pscale(&self.a, c),
            b: pscale(&self.b, c),
            sign: self.sign,
        }
    }

    pub fn trimmed(self) -> (Vec<Rational>, Vec<Rational>) {
        (trim(self.a), trim(self.b))
    }
}

/// Power series in `t` truncated after `t^order`, with [`Elem`] coefficients.
#[derive(Clone, Debug)]
pub struct Series(pub Vec<Elem>);

impl Series {
    pub fn from_scalars(c: &[Rational], unit: &Elem) -> Series {
        Series(c.iter().map(|x| unit.scale(x)).collect())
    }

    pub fn constant(e: Elem, order: usize) -> Series {
        let zero = Elem::poly(Vec::new(), e.sign);
        let mut v = vec![zero; order + 1];
        v[0] = e;
        Series(v)
    }

    pub fn add(&self, o: &Series) -> Series {
        Series(self.0.iter().zip(&o.0).map(|(x, y)| x.add(y)).collect())
    }

    pub fn neg(&self) -> Series {
        Series(self.0.iter().map(|x| x.scale(&q(-1))).collect())
    }

    pub fn mul(&self, o: &Series) -> Series {
        let n = self.0.len();
        Series(
            (0..n)
                .map(|k| {
                    (0..=k)
                        .map(|i| self.0[i].mul(&o.0[k - i]))
                        .reduce(|x, y| x.add(&y))
                        .unwrap()
                })
                .collect(),
        )
    }

    pub fn pow(&self, j: usize) -> Series {
        let unit = Elem::poly(vec![q(1)], self.0[0].sign);
        (0..j).fold(Series::constant(unit, self.0.len() - 1), |acc, _| {
            acc.mul(self)
        })
    }

    /// `1 / self` for a series whose constant term is exactly 1.
    pub fn recip(&self) -> Series {
        let one = &self.0[0];
        assert!(one.b.is_empty() && trim(one.a.clone()) == vec![q(1)]);
        let mut g = vec![one.clone()];
        for n in 1..self.0.len() {
            let mut acc = Elem::poly(Vec::new(), one.sign);
            for k in 1..=n {
                acc = acc.add(&self.0[k].mul(&g[n - k]));
            }
            g.push(acc.scale(&q(-1)));
        }
        Series(g)
    }

    /// `n! [t^n]`.
    pub fn egf(&self, n: usize) -> Elem {
        self.0[n].scale(&Rational::from_integer(factorial(n)))
    }
}

pub fn cos_taylor(order: usize) -> Vec<Rational> {
    (0..=order)
        .map(|k| match k % 4 {
            0 => Rational::new(BigInt::one(), factorial(k)),
            2 => -Rational::new(BigInt::one(), factorial(k)),
            _ => q(0),
        })
        .collect()
}

pub fn sin_taylor(order: usize) -> Vec<Rational> {
    (0..=order)
        .map(|k| match k % 4 {
            1 => Rational::new(BigInt::one(), factorial(k)),
            3 => -Rational::new(BigInt::one(), factorial(k)),
            _ => q(0),
        })
        .collect()
}

/// `Π_n`, `Q_n`, `λ_{m,j}` and `Δ_{m,j}` read off their generating functions.
pub struct Generating {
    order: usize,
    tan: Vec<Rational>,
    sec: Vec<Rational>,
    cos: Vec<Rational>,
}

impl Generating {
    pub fn new(order: usize) -> Self {
        let unit = Elem::poly(vec![q(1)], 1);
        let cos_s = Series::from_scalars(&cos_taylor(order), &unit);
        let sec_s = cos_s.recip();
        let tan_s = Series::from_scalars(&sin_taylor(order), &unit).mul(&sec_s);
        let scalar = |s: &Series| -> Vec<Rational> {
            s.0.iter()
                .map(|e| e.a.first().cloned().unwrap_or_default())
                .collect()
        };
        Generating {
            order,
            tan: scalar(&tan_s),
            sec: scalar(&sec_s),
            cos: cos_taylor(order),
        }
    }

    fn series(&self, c: &[Rational], unit: &Elem) -> Series {
        Series::from_scalars(c, unit)
    }

    fn xi(&self, sign: i64) -> Series {
        Series::constant(Elem::poly(vec![q(0), q(1)], sign), self.order)
    }

    fn one(&self, sign: i64) -> Series {
        Series::constant(Elem::poly(vec![q(1)], sign), self.order)
    }

    /// `(ξ + tan t) / (1 − ξ tan t)`.
    pub fn pi(&self) -> Series {
        let tan = self.series(&self.tan, &Elem::poly(vec![q(1)], 1));
        let xi_tan = tan.mul(&self.xi(1));
        self.xi(1)
            .add(&tan)
            .mul(&self.one(1).add(&xi_tan.neg()).recip())
    }

    /// `sec t / (1 − ξ tan t)`.
    pub fn q(&self) -> Series {
        let unit = Elem::poly(vec![q(1)], 1);
        let xi_tan = self.series(&self.tan, &unit).mul(&self.xi(1));
        self.series(&self.sec, &unit)
            .mul(&self.one(1).add(&xi_tan.neg()).recip())
    }

    /// `(1 − ξ tan t)^j cos^j t`.
    pub fn lambda(&self, j: usize) -> Series {
        let unit = Elem::poly(vec![q(1)], 1);
        let xi_tan = self.series(&self.tan, &unit).mul(&self.xi(1));
        self.one(1)
            .add(&xi_tan.neg())
            .pow(j)
            .mul(&self.series(&self.cos, &unit).pow(j))
    }

    /// `(ξ − s tan t)^j cos^j t` with `s² = 1 − ξ²`.
    pub fn delta(&self, j: usize) -> Series {
        let s_tan = self.series(&self.tan, &Elem::s(-1));
        let cos = self.series(&self.cos, &Elem::poly(vec![q(1)], -1));
        self.xi(-1).add(&s_tan.neg()).pow(j).mul(&cos.pow(j))
    }
}

/// `n! [t^n] 1/(1 − tz + t²)` from `c_n = z c_{n−1} − c_{n−2}`.
pub fn pn_one_var(n_max: usize) -> Vec<Vec<Rational>> {
    let mut c: Vec<Vec<Rational>> = vec![vec![q(1)], vec![q(0), q(1)]];
    while c.len() <= n_max {
        let k = c.len();
        let shifted: Vec<Rational> = std::iter::once(q(0))
            .chain(c[k - 1].iter().cloned())
            .collect();
        let prev: Vec<Rational> = c[k - 2].iter().map(|x| -x).collect();
        c.push(padd(&shifted, &prev));
    }
    c.truncate(n_max + 1);
    c.into_iter()
        .enumerate()
        .map(|(n, p)| trim(pscale(&p, &Rational::from_integer(factorial(n)))))
        .collect()
}

/// `U_n` from `U_{n+1} = 2x U_n − U_{n−1}`.
pub fn chebyshev_u(n_max: usize) -> Vec<Vec<i128>> {
    let mut u: Vec<Vec<i128>> = vec![vec![1], vec![0, 2]];
    while u.len() <= n_max {
        let k = u.len();
        let mut next = vec![0i128; k + 1];
        for (i, c) in u[k - 1].iter().enumerate() {
            next[i + 1] += 2 * c;
        }
        for (i, c) in u[k - 2].iter().enumerate() {
            next[i] -= c;
        }
        u.push(next);
    }
    u.truncate(n_max + 1);
    u
}

/// `S(n, k)` by `S(n+1, k) = k S(n, k) + S(n, k−1)`.
pub fn stirling_triangle(n_max: usize) -> Vec<Vec<i128>> {
    let mut rows = vec![vec![1i128]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row: Vec<i128> = (0..=n)
            .map(|k| {
                let keep = if k < n { k as i128 * prev[k] } else { 0 };
                let new = if k > 0 { prev[k - 1] } else { 0 };
                keep + new
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Bell numbers from the Peirce (Aitken) triangle.
pub fn bell_peirce(n_max: usize) -> Vec<i128> {
    let mut bell = vec![1i128];
    let mut row = vec![1i128];
    for _ in 0..n_max {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        bell.push(next[0]);
        row = next;
    }
    bell
}

/// Set partitions of `{1..n}` counted by enumerating restricted growth strings.
pub fn bell_brute(n: usize) -> u64 {
    fn walk(pos: usize, n: usize, max: usize) -> u64 {
        if pos == n {
            return 1;
        }
        (0..=max + 1).map(|v| walk(pos + 1, n, max.max(v))).sum()
    }
    match n {
        0 => 1,
        _ => walk(1, n, 0),
    }
}

/// Rational function `num / den` with integer polynomial parts.
#[derive(Clone, Debug)]
pub struct RatFn {
    pub num: Vec<BigInt>,
    pub den: Vec<BigInt>,
}

fn ip_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn ip_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigInt> = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect();
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn ip_derive(a: &[BigInt]) -> Vec<BigInt> {
    if a.len() <= 1 {
        return vec![BigInt::zero()];
    }
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect()
}

/// Exact division by `1 + x²`, if it divides.
fn div_one_plus_sq(a: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rem = a.to_vec();
    if rem.len() < 3 {
        return None;
    }
    let mut quot = vec![BigInt::zero(); rem.len() - 2];
    for i in (0..quot.len()).rev() {
        let c = rem[i + 2].clone();
        rem[i] -= &c;
        rem[i + 2] = BigInt::zero();
        quot[i] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

impl RatFn {
    pub fn lorentzian() -> Self {
        let i = |v: i64| BigInt::from(v);
        RatFn {
            num: vec![i(1)],
            den: vec![i(1), i(0), i(1)],
        }
    }

    /// `(N'D − ND') / D²`, then cancel common factors of `1 + x²`.
    pub fn derive(&self) -> Self {
        let num = ip_sub(
            &ip_mul(&ip_derive(&self.num), &self.den),
            &ip_mul(&self.num, &ip_derive(&self.den)),
        );
        let mut r = RatFn {
            num,
            den: ip_mul(&self.den, &self.den),
        };
        while let (Some(n), Some(d)) = (div_one_plus_sq(&r.num), div_one_plus_sq(&r.den)) {
            r = RatFn { num: n, den: d };
        }
        r
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let horner = |p: &[BigInt]| {
            p.iter().rev().fold(Rational::zero(), |acc, c| {
                acc * x + Rational::from_integer(c.clone())
            })
        };
        horner(&self.num) / horner(&self.den)
    }
}
