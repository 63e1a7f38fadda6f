//! Double-double arithmetic: a value is the unevaluated sum `hi + lo` of two
//! f64 terms with `|lo| <= ulp(hi)/2`, giving roughly 31 significant decimal
//! digits. The reference evaluation of gamma-ratio quantities runs entirely in
//! this representation and rounds to f64 once at the end, so the oracle's
//! error stays far below one ulp of the returned value.
//!
//! The algorithms are the standard error-free transformations (Knuth two-sum,
//! FMA two-product) plus the qd-library formulations of `/`, `sqrt`, `exp`
//! and `ln`.

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Requires |a| >= |b| (or a == 0).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd::new(0.0, 0.0);
    pub const ONE: Dd = Dd::new(1.0, 0.0);

    pub const LN_2: Dd = Dd::new(0.6931471805599453, 2.3190468138462996e-17);

    #[inline]
    pub const fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact sum of two f64 values.
    #[inline]
    pub fn from_sum(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        Dd { hi, lo }
    }

    /// Quotient of two f64 values with an FMA-corrected low part.
    #[inline]
    pub fn from_quotient(a: f64, b: f64) -> Self {
        let q1 = a / b;
        let q2 = (-q1).mul_add(b, a) / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn neg(self) -> Self {
        Dd::new(-self.hi, -self.lo)
    }

    #[inline]
    pub fn add(self, rhs: Dd) -> Self {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, rhs: f64) -> Self {
        let (s1, s2) = two_sum(self.hi, rhs);
        let (hi, lo) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, rhs: Dd) -> Self {
        self.add(rhs.neg())
    }

    #[inline]
    pub fn mul(self, rhs: Dd) -> Self {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, rhs: f64) -> Self {
        let (p1, p2) = two_prod(self.hi, rhs);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * rhs);
        Dd { hi, lo }
    }

    pub fn div(self, rhs: Dd) -> Self {
        let q1 = self.hi / rhs.hi;
        let r = self.sub(rhs.mul_f64(q1));
        let q2 = r.hi / rhs.hi;
        let r = r.sub(rhs.mul_f64(q2));
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd::new(s, e).add_f64(q3)
    }

    #[inline]
    pub fn div_f64(self, rhs: f64) -> Self {
        self.div(Dd::from_f64(rhs))
    }

    /// Karp's square root: one f64 seed plus a single correction step.
    pub fn sqrt(self) -> Self {
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let (p, e) = two_prod(ax, ax);
        let err = self.sub(Dd::new(p, e));
        let (hi, lo) = quick_two_sum(ax, err.hi * (x * 0.5));
        Dd { hi, lo }
    }

    /// exp via range reduction by ln 2 and a plain Taylor sum on |r| <= ln2/2.
    pub fn exp(self) -> Self {
        if self.hi > 709.0 {
            return Dd::new(f64::INFINITY, 0.0);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / Dd::LN_2.hi).round();
        let r = self.sub(Dd::LN_2.mul_f64(k));

        let mut term = r;
        let mut sum = Dd::ONE.add(r);
        for n in 2..=26u32 {
            term = term.mul(r).div_f64(f64::from(n));
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
        }
        sum.scale_pow2(k as i32)
    }

    /// Natural log by one Newton step on top of the f64 seed:
    /// ln a = x0 + (a e^{-x0} - 1), which doubles the seed's precision.
    pub fn ln(self) -> Self {
        debug_assert!(self.hi > 0.0, "Dd::ln needs a positive argument");
        let x0 = self.hi.ln();
        let t = self.mul(Dd::from_f64(-x0).exp());
        Dd::from_f64(x0).add(t.sub(Dd::ONE))
    }

    /// Multiply by 2^k (exact while both components stay normal).
    #[inline]
    fn scale_pow2(self, k: i32) -> Self {
        let f = 2.0f64.powi(k);
        Dd::new(self.hi * f, self.lo * f)
    }
}
