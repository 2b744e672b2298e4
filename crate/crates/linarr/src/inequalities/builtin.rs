//! The five builtin incidence inequalities.
//!
//! Bojanowski is stored in the rearranged form t_2 + (3/4)t_3 +
//! sum_{k>=5} (k - k^2/4) t_k >= n used by the certificate machinery; the
//! usual display form differs by a sign flip of the tail.

use super::{ApplicabilityGuard, Inequality};
use crate::rational::{int, ratio, Rational};

/// t_2 >= 3 + sum_{k>=4} (k-3) t_k, for non-pencil arrangements.
pub struct Melchior;

impl Inequality for Melchior {
    fn name(&self) -> &str {
        "melchior"
    }

    fn alpha0(&self, _n: u64) -> Rational {
        int(3)
    }

    fn alpha(&self, k: u64) -> Rational {
        int(3 - k as i64)
    }

    fn guard(&self) -> ApplicabilityGuard {
        ApplicabilityGuard::NotPencil
    }

    fn alpha0_symbol(&self) -> String {
        "3".into()
    }
}

/// t_2 >= (6/13) n, for n >= 8.
pub struct CsimaSawyer;

impl Inequality for CsimaSawyer {
    fn name(&self) -> &str {
        "csima_sawyer"
    }

    fn alpha0(&self, n: u64) -> Rational {
        ratio(6 * n as i64, 13)
    }

    fn alpha(&self, k: u64) -> Rational {
        if k == 2 {
            int(1)
        } else {
            int(0)
        }
    }

    fn guard(&self) -> ApplicabilityGuard {
        ApplicabilityGuard::NGe8
    }

    fn alpha0_symbol(&self) -> String {
        "6n/13".into()
    }
}

/// t_2 + (3/4) t_3 >= n + sum_{k>=5} (2k-9) t_k, when t_{n-1} = t_{n-2} = 0.
pub struct Hirzebruch;

impl Inequality for Hirzebruch {
    fn name(&self) -> &str {
        "hirzebruch"
    }

    fn alpha0(&self, n: u64) -> Rational {
        int(n as i64)
    }

    fn alpha(&self, k: u64) -> Rational {
        match k {
            2 => int(1),
            3 => ratio(3, 4),
            4 => int(0),
            _ => int(9 - 2 * k as i64),
        }
    }

    fn guard(&self) -> ApplicabilityGuard {
        ApplicabilityGuard::TopTwoZero
    }

    fn alpha0_symbol(&self) -> String {
        "n".into()
    }
}

/// t_2 + (3/4) t_3 + sum_{k>=5} (k - k^2/4) t_k >= n, when 3m <= 2n.
/// The coefficient k - k^2/4 also reproduces alpha_2 = 1, alpha_3 = 3/4
/// and alpha_4 = 0, so it is used uniformly for every k.
pub struct Bojanowski;

impl Inequality for Bojanowski {
    fn name(&self) -> &str {
        "bojanowski"
    }

    fn alpha0(&self, n: u64) -> Rational {
        int(n as i64)
    }

    fn alpha(&self, k: u64) -> Rational {
        let k = k as i64;
        int(k) - ratio(k * k, 4)
    }

    fn guard(&self) -> ApplicabilityGuard {
        ApplicabilityGuard::MLeTwoThirdsN
    }

    fn alpha0_symbol(&self) -> String {
        "n".into()
    }
}

/// t_2 >= n/2 for even n, t_2 >= 3 floor(n/4) for odd n, both only for
/// sufficiently large n. No effective threshold is known here, so the
/// inequality is report-only.
pub struct GreenTao;

impl Inequality for GreenTao {
    fn name(&self) -> &str {
        "green_tao"
    }

    fn alpha0(&self, n: u64) -> Rational {
        if n.is_multiple_of(2) {
            ratio(n as i64, 2)
        } else {
            int(3 * (n as i64 / 4))
        }
    }

    fn alpha(&self, k: u64) -> Rational {
        if k == 2 {
            int(1)
        } else {
            int(0)
        }
    }

    fn guard(&self) -> ApplicabilityGuard {
        ApplicabilityGuard::Always
    }

    fn assertable(&self) -> bool {
        false
    }

    fn alpha0_symbol(&self) -> String {
        "n/2 (even n) or 3*floor(n/4) (odd n)".into()
    }
}

/// The registry, in the order the reports print them.
pub fn builtin_inequalities() -> Vec<Box<dyn Inequality>> {
    vec![
        Box::new(Melchior),
        Box::new(CsimaSawyer),
        Box::new(Hirzebruch),
        Box::new(Bojanowski),
        Box::new(GreenTao),
    ]
}

/// Look up a builtin by name; hyphens and case are normalized, so
/// "Csima-Sawyer" finds "csima_sawyer".
pub fn find_builtin(name: &str) -> Option<Box<dyn Inequality>> {
    let wanted = name.to_ascii_lowercase().replace('-', "_");
    builtin_inequalities()
        .into_iter()
        .find(|spec| spec.name() == wanted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_coefficients_match_statements() {
        assert_eq!(Melchior.alpha(5), int(-2));
        assert_eq!(Bojanowski.alpha(6), int(-3));
        assert_eq!(Hirzebruch.alpha(5), int(-1));
    }

    #[test]
    fn head_coefficients() {
        for spec in builtin_inequalities() {
            assert_eq!(spec.alpha(2), int(1), "{}", spec.name());
        }
        assert_eq!(Melchior.alpha(3), int(0));
        assert_eq!(Melchior.alpha(4), int(-1));
        assert_eq!(Hirzebruch.alpha(3), ratio(3, 4));
        assert_eq!(Hirzebruch.alpha(4), int(0));
        assert_eq!(Bojanowski.alpha(3), ratio(3, 4));
        assert_eq!(Bojanowski.alpha(4), int(0));
        assert_eq!(Bojanowski.alpha(5), ratio(-5, 4));
    }

    #[test]
    fn lookup_normalizes_names() {
        assert!(find_builtin("csima-sawyer").is_some());
        assert!(find_builtin("Green-Tao").is_some());
        assert!(find_builtin("bojanowski").is_some());
        assert!(find_builtin("unknown").is_none());
    }
}
