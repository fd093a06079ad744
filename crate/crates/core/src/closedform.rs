//! Closed-form maj distributions: the q-multinomial for Delannoy families,
//! the shifted copy for bad square paths, and the q-Catalan style quotient
//! for Schröder paths.
//!
//! Out-of-range parameters yield the zero polynomial (the empty sum), so
//! verification sweeps can call these uniformly. The only property of the
//! step ordering any of them consults is whether E ranks below N.

use crate::error::Result;
use crate::qpoly::QPoly;
use crate::stats::StepOrder;

/// Distribution of maj over `Del(m,n,l)`, for every ordering of the
/// alphabet: the q-multinomial `[l; l-m, l-n, m+n-l]`.
pub fn mdel_closed(m: i64, n: i64, l: i64) -> QPoly {
    if m < 0 || n < 0 || l < m.max(n) || l > m + n {
        return QPoly::zero();
    }
    QPoly::q_multinomial(l as u64, &[(l - m) as u64, (l - n) as u64, (m + n - l) as u64])
        .expect("parts sum to l by construction")
}

/// Distribution of maj over the bad paths in `Del(n,n,l)`:
/// `q * MDel(n+1,n-1,l)` when E < N, and `MDel(n+1,n-1,l)` when E > N.
pub fn mbdel_closed(n: i64, l: i64, order: StepOrder) -> QPoly {
    let base = mdel_closed(n + 1, n - 1, l);
    if order.e_before_n() {
        base.shift(1)
    } else {
        base
    }
}

/// Distribution of maj over the Schröder paths `Sch(n,l)`:
///
/// ```text
///   [2(l-n) choose l-n] * [l choose 2n-l] / [l-n+1]          if E < N
///   q^(l-n) * the same quotient                              if E > N
/// ```
///
/// The division is performed after the binomial product: the product is
/// divisible by `[l-n+1]`, the individual factors need not be. A
/// [`crate::error::Error::NonExactDivision`] here would indicate an
/// implementation bug, not a user error, so it is propagated rather than
/// swallowed.
pub fn msch_closed(n: i64, l: i64, order: StepOrder) -> Result<QPoly> {
    if n < 0 || l < n || l > 2 * n {
        return Ok(QPoly::zero());
    }
    let a = (l - n) as u64;
    let product = QPoly::q_binomial(2 * a, a as i64).mul(&QPoly::q_binomial(l as u64, 2 * n - l));
    let quotient = product.exact_div(&QPoly::q_int(a + 1))?;
    Ok(if order.e_before_n() {
        quotient
    } else {
        quotient.shift(a as usize)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::PathFamily;
    use crate::stats::maj_distribution;
    use num_bigint::BigUint;

    #[test]
    fn mdel_examples() {
        assert_eq!(mdel_closed(1, 1, 2), QPoly::from_u64_coeffs(&[1, 1]));
        assert_eq!(mdel_closed(5, 5, 5), QPoly::one());
        assert_eq!(mdel_closed(3, 3, 6), QPoly::q_binomial(6, 3));
        assert_eq!(mdel_closed(1, 3, 1), QPoly::zero());
        assert_eq!(mdel_closed(2, -1, 2), QPoly::zero());
    }

    #[test]
    fn mbdel_examples() {
        assert_eq!(mbdel_closed(1, 2, StepOrder::EDN), QPoly::from_u64_coeffs(&[0, 1]));
        assert_eq!(mbdel_closed(1, 2, StepOrder::NED), QPoly::one());
        for order in StepOrder::ALL {
            for n in 0..=4 {
                assert_eq!(mbdel_closed(n, n, order), QPoly::zero());
            }
        }
    }

    #[test]
    fn msch_examples() {
        assert_eq!(
            msch_closed(3, 6, StepOrder::EDN).unwrap(),
            QPoly::from_u64_coeffs(&[1, 0, 1, 1, 1, 0, 1])
        );
        for order in StepOrder::ALL {
            for n in 0..=5 {
                assert_eq!(msch_closed(n, n, order).unwrap(), QPoly::one());
            }
        }
        assert_eq!(
            msch_closed(1, 2, StepOrder::NED).unwrap(),
            QPoly::from_u64_coeffs(&[0, 1])
        );
        assert_eq!(msch_closed(2, 5, StepOrder::EDN).unwrap(), QPoly::zero());
        assert_eq!(msch_closed(-1, 0, StepOrder::EDN).unwrap(), QPoly::zero());
    }

    #[test]
    fn schroeder_closed_form_is_delannoy_minus_bad() {
        for n in 0..=8i64 {
            for l in n..=2 * n {
                for order in StepOrder::ALL {
                    let sch = msch_closed(n, l, order).unwrap();
                    let bad = mbdel_closed(n, l, order);
                    let del = mdel_closed(n, n, l);
                    assert_eq!(sch.add(&bad), del, "n={n} l={l} order={order}");
                }
            }
        }
    }

    #[test]
    fn multinomial_factorizes_into_binomials() {
        for n in 0..=8i64 {
            for l in n..=2 * n {
                let a = (l - n) as u64;
                let lhs =
                    QPoly::q_multinomial(l as u64, &[a, a, (2 * n - l) as u64]).unwrap();
                let rhs =
                    QPoly::q_binomial(2 * a, a as i64).mul(&QPoly::q_binomial(l as u64, 2 * n - l));
                assert_eq!(lhs, rhs, "n={n} l={l}");
            }
        }
    }

    #[test]
    fn counting_specialization_matches_enumeration() {
        for n in 0..=6i64 {
            for l in n..=2 * n {
                let family = PathFamily::Sch { n, l };
                let expected = BigUint::from(family.count());
                for order in StepOrder::ALL {
                    let closed = msch_closed(n, l, order).unwrap();
                    assert_eq!(closed.eval_at_one(), expected, "n={n} l={l} order={order}");
                }
            }
        }
    }

    #[test]
    fn closed_forms_match_brute_force_at_small_scale() {
        for n in 0..=5i64 {
            for l in n..=2 * n {
                for order in StepOrder::ALL {
                    assert_eq!(
                        maj_distribution(&PathFamily::Sch { n, l }, order).unwrap(),
                        msch_closed(n, l, order).unwrap(),
                        "sch n={n} l={l} order={order}"
                    );
                    assert_eq!(
                        maj_distribution(&PathFamily::BDel { n, l }, order).unwrap(),
                        mbdel_closed(n, l, order),
                        "bdel n={n} l={l} order={order}"
                    );
                    assert_eq!(
                        maj_distribution(&PathFamily::Del { m: n, n, l }, order).unwrap(),
                        mdel_closed(n, n, l),
                        "del n={n} l={l} order={order}"
                    );
                }
            }
        }
    }
}
