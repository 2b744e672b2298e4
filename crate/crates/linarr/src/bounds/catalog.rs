//! The lower-bound catalogue: classical closed forms plus the certified
//! quadratic bound, each a strategy behind [`LowerBound`].

use num::BigInt;

use super::LowerBound;
use crate::rational::{int, Rational};

fn big(v: u64) -> Rational {
    Rational::from(BigInt::from(v))
}

/// ((m+2)n^2 + (3m-6)n)/(6m) + 1, the raw closed form with no guard.
pub fn theorem1_formula(n: u64, m: u64) -> Rational {
    let (n, m) = (big(n), big(m));
    ((&m + int(2)) * &n * &n + (int(3) * &m - int(6)) * &n) / (int(6) * m) + int(1)
}

/// f >= 2n - 2 for m < n.
pub struct GrunbaumFirst;

impl LowerBound for GrunbaumFirst {
    fn name(&self) -> &'static str {
        "grunbaum_first"
    }

    fn guard_text(&self) -> &'static str {
        "m < n"
    }

    fn applicable(&self, n: u64, m: u64) -> bool {
        m < n
    }

    fn value(&self, n: u64, _m: u64) -> Rational {
        big(2 * n - 2)
    }
}

/// f >= 3n - 6 for m <= n - 2.
pub struct GrunbaumSecond;

impl LowerBound for GrunbaumSecond {
    fn name(&self) -> &'static str {
        "grunbaum_second"
    }

    fn guard_text(&self) -> &'static str {
        "m <= n - 2"
    }

    fn applicable(&self, n: u64, m: u64) -> bool {
        m + 2 <= n
    }

    fn value(&self, n: u64, _m: u64) -> Rational {
        big(3 * n) - int(6)
    }
}

/// f >= m(n + 1 - m).
pub struct ArnoldProduct;

impl LowerBound for ArnoldProduct {
    fn name(&self) -> &'static str {
        "arnold_product"
    }

    fn guard_text(&self) -> &'static str {
        "2 <= m <= n"
    }

    fn applicable(&self, n: u64, m: u64) -> bool {
        2 <= m && m <= n
    }

    fn value(&self, n: u64, m: u64) -> Rational {
        big(m) * (big(n) + int(1) - big(m))
    }
}

/// f >= n(n-1)/(2(m-1)) for m > 2.
pub struct ArnoldRatio;

impl LowerBound for ArnoldRatio {
    fn name(&self) -> &'static str {
        "arnold_ratio"
    }

    fn guard_text(&self) -> &'static str {
        "m > 2"
    }

    fn applicable(&self, _n: u64, m: u64) -> bool {
        m > 2
    }

    fn value(&self, n: u64, m: u64) -> Rational {
        big(n) * big(n - 1) / (int(2) * (big(m) - int(1)))
    }
}

/// f >= (m+1)(n-m).
pub struct ArnoldPurdy;

impl LowerBound for ArnoldPurdy {
    fn name(&self) -> &'static str {
        "arnold_purdy"
    }

    fn guard_text(&self) -> &'static str {
        "2 <= m <= n"
    }

    fn applicable(&self, n: u64, m: u64) -> bool {
        2 <= m && m <= n
    }

    fn value(&self, n: u64, m: u64) -> Rational {
        big(m + 1) * (big(n) - big(m))
    }
}

/// f >= (r+1)(n-r) for some integer r with m <= n - r and
/// n >= (r^2 + r)/2 + 3; reported as the maximum over all valid r, since
/// the statement quantifies existentially.
pub struct ShnurnikovR;

impl ShnurnikovR {
    fn best_r(n: u64, m: u64) -> Option<u64> {
        let mut best: Option<(u64, u64)> = None;
        for r in 0..=n.saturating_sub(m) {
            if r * r + r + 6 > 2 * n {
                break;
            }
            let value = (r + 1) * (n - r);
            if best.is_none_or(|(_, v)| value > v) {
                best = Some((r, value));
            }
        }
        best.map(|(r, _)| r)
    }
}

impl LowerBound for ShnurnikovR {
    fn name(&self) -> &'static str {
        "shnurnikov_r"
    }

    fn guard_text(&self) -> &'static str {
        "max over r with m <= n - r and n >= (r^2+r)/2 + 3"
    }

    fn applicable(&self, n: u64, m: u64) -> bool {
        Self::best_r(n, m).is_some()
    }

    fn value(&self, n: u64, m: u64) -> Rational {
        let r = Self::best_r(n, m).expect("guard checked");
        big((r + 1) * (n - r))
    }
}

/// f >= 2(n^2 - n + 2m)/(m + 3). Tight at the near-pencil (where it equals
/// 2n - 2); the pencil itself violates it, so m < n is required.
pub struct ShnurnikovSimple;

impl LowerBound for ShnurnikovSimple {
    fn name(&self) -> &'static str {
        "shnurnikov_simple"
    }

    fn guard_text(&self) -> &'static str {
        "m < n"
    }

    fn applicable(&self, n: u64, m: u64) -> bool {
        m < n
    }

    fn value(&self, n: u64, m: u64) -> Rational {
        int(2) * (big(n) * big(n) - big(n) + int(2) * big(m)) / (big(m) + int(3))
    }
}

/// f >= ((3m-10)n^2 + (m^2-6m+12)n)/(m^2+3m-18) + 1 for 5 <= m < n - 2.
pub struct ShnurnikovQuadratic;

impl LowerBound for ShnurnikovQuadratic {
    fn name(&self) -> &'static str {
        "shnurnikov_quadratic"
    }

    fn guard_text(&self) -> &'static str {
        "5 <= m < n - 2"
    }

    fn applicable(&self, n: u64, m: u64) -> bool {
        5 <= m && m + 2 < n
    }

    fn value(&self, n: u64, m: u64) -> Rational {
        let (n, m) = (big(n), big(m));
        let numer = (int(3) * &m - int(10)) * &n * &n + (&m * &m - int(6) * &m + int(12)) * &n;
        let denom = &m * &m + int(3) * &m - int(18);
        numer / denom + int(1)
    }
}

/// f >= ((m+2)n^2 + (3m-6)n)/(6m) + 1 for 3m <= 2n.
pub struct Theorem1Bound;

impl LowerBound for Theorem1Bound {
    fn name(&self) -> &'static str {
        "theorem1"
    }

    fn guard_text(&self) -> &'static str {
        "3m <= 2n"
    }

    fn applicable(&self, n: u64, m: u64) -> bool {
        m >= 2 && 3 * m <= 2 * n
    }

    fn value(&self, n: u64, m: u64) -> Rational {
        theorem1_formula(n, m)
    }
}

/// Every bound, in report order; the certified quadratic bound comes last.
pub fn catalogue() -> Vec<Box<dyn LowerBound>> {
    vec![
        Box::new(GrunbaumFirst),
        Box::new(GrunbaumSecond),
        Box::new(ArnoldProduct),
        Box::new(ArnoldRatio),
        Box::new(ArnoldPurdy),
        Box::new(ShnurnikovR),
        Box::new(ShnurnikovSimple),
        Box::new(ShnurnikovQuadratic),
        Box::new(Theorem1Bound),
    ]
}
