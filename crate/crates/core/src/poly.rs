//! Univariate polynomials over the rationals and exact positive-root isolation.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::exact::{to_f64, Rational};

/// Dense polynomial, lowest degree first, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&(Rational::one() / l)),
            None => Self::zero(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Self::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Multiplicity of the root at zero.
    pub fn order_at_zero(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `x^k`.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Yun's square-free decomposition: `self = c * prod f_i^i` with each
    /// `f_i` monic, square-free and pairwise coprime. Returns the non-constant
    /// factors as `(f_i, i)`.
    pub fn square_free_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let a0 = self.gcd(&d);
        let mut b = self.div_rem(&a0).0;
        let mut c = d.div_rem(&a0).0;
        let mut dd = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = dd.div_rem(&a).0;
            dd = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    pub fn is_square_free(&self) -> bool {
        self.gcd(&self.derivative()).degree().unwrap_or(0) == 0
    }

    /// Scaled to integer coefficients with content 1 and positive leading term.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if self.leading().is_some_and(Signed::is_negative) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    /// Sturm sequence `p0 = f, p1 = f', p_{k+1} = -rem(p_{k-1}, p_k)`.
    pub fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            seq.push(r.scale(&-Rational::one()));
        }
        seq.pop();
        seq
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*t")?,
                _ => write!(f, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}

fn sign_changes(seq: &[Poly], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// A real root known to lie in `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub lo: Rational,
    pub hi: Rational,
    /// Set when the root is rational; then `lo == hi == exact`.
    pub exact: Option<Rational>,
}

impl IsolatedRoot {
    pub fn midpoint(&self) -> f64 {
        match &self.exact {
            Some(r) => to_f64(r),
            None => to_f64(&((&self.lo + &self.hi) / Rational::from_integer(2.into()))),
        }
    }

    fn exact(r: Rational) -> Self {
        Self {
            lo: r.clone(),
            hi: r.clone(),
            exact: Some(r),
        }
    }
}

/// Smallest-denominator rational in `[lo, hi]`, `0 < lo <= hi`.
pub fn simplest_rational_between(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    if &fl == lo {
        return lo.clone();
    }
    let ce = lo.ceil();
    if &ce <= hi {
        return ce;
    }
    let one = Rational::one();
    let inner = simplest_rational_between(&(&one / (hi - &fl)), &(&one / (lo - &fl)));
    fl + one / inner
}

/// Isolates every root of the square-free polynomial `f` in `(0, inf)`.
///
/// Roots are separated with Sturm sequences and refined by bisection until
/// the interval is narrower than `width`. A rational root is always detected
/// and returned exactly: each interval is first refined below `1/(2 a_n^2)`
/// (with `a_n` the leading coefficient of the primitive integer form), inside
/// which at most one rational with denominator dividing `a_n` can lie, and
/// the simplest rational of the interval is tested.
pub fn isolate_positive_roots(f: &Poly, width: &Rational) -> Vec<IsolatedRoot> {
    let Some(deg) = f.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let k = f.order_at_zero();
    let f = f.shift_down(k);
    if f.degree() == Some(0) {
        return Vec::new();
    }
    let sturm = f.sturm_sequence();
    let lead = f.leading().unwrap().abs();
    let bound = f.coeffs()[..f.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero)
        + Rational::from_integer(2.into());

    let ints = f.primitive_integer();
    let an = Rational::from_integer(ints.last().unwrap().abs());
    let separation = Rational::one() / (Rational::from_integer(2.into()) * &an * &an);

    let mut out = Vec::new();
    let mut stack = vec![(Rational::zero(), bound)];
    let two = Rational::from_integer(2.into());
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&sturm, &lo) - sign_changes(&sturm, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(refine_single(&f, lo, hi, &separation, width));
            continue;
        }
        let mid = (&lo + &hi) / &two;
        if f.eval(&mid).is_zero() {
            out.push(IsolatedRoot::exact(mid.clone()));
            // step off the root far enough that nothing else is skipped
            let mut delta = (&hi - &lo) / Rational::from_integer(4.into());
            loop {
                let (a, b) = (&mid - &delta, &mid + &delta);
                let around = sign_changes(&sturm, &a) - sign_changes(&sturm, &b);
                if around == 1 && !f.eval(&a).is_zero() && !f.eval(&b).is_zero() {
                    stack.push((lo, a));
                    stack.push((b, hi));
                    break;
                }
                delta /= &two;
            }
        } else {
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// `(lo, hi]` holds exactly one simple root of `f`, `f(hi) != 0` or root at hi.
fn refine_single(
    f: &Poly,
    mut lo: Rational,
    mut hi: Rational,
    separation: &Rational,
    width: &Rational,
) -> IsolatedRoot {
    let two = Rational::from_integer(2.into());
    if f.eval(&hi).is_zero() {
        return IsolatedRoot::exact(hi);
    }
    let sign_hi = f.eval(&hi).is_positive();
    let target = if separation < width { separation } else { width };
    while &(&hi - &lo) >= target || lo.is_zero() {
        let mid = (&lo + &hi) / &two;
        let v = f.eval(&mid);
        if v.is_zero() {
            return IsolatedRoot::exact(mid);
        }
        if v.is_positive() == sign_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let cand = simplest_rational_between(&lo, &hi);
    if f.eval(&cand).is_zero() {
        return IsolatedRoot::exact(cand);
    }
    IsolatedRoot {
        lo,
        hi,
        exact: None,
    }
}

/// Orders two isolated roots of coprime polynomials, refining is not needed
/// when the intervals are disjoint.
pub fn compare_isolated(a: &IsolatedRoot, b: &IsolatedRoot) -> Ordering {
    if a.hi < b.lo {
        Ordering::Less
    } else if b.hi < a.lo {
        Ordering::Greater
    } else {
        a.midpoint().total_cmp(&b.midpoint())
    }
}
