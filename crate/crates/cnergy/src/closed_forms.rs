//! Exact CN-Laplacian spectra and energies for the analytically solvable
//! families. These serve as the oracle the numeric pipeline is validated
//! against: spectrum values are exact integers, energies exact rationals.

use num_rational::Ratio;
use thiserror::Error;

/// Exact spectra and energies of one family instance. Spectra are merged
/// multisets sorted by decreasing value; multiplicities sum to the vertex
/// count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub cnl_spectrum: Vec<(i64, usize)>,
    pub cnq_spectrum: Vec<(i64, usize)>,
    pub le_cn: Ratio<i64>,
    pub le_plus_cn: Ratio<i64>,
}

impl ClosedForm {
    pub fn le_cn_f64(&self) -> f64 {
        ratio_to_f64(self.le_cn)
    }

    pub fn le_plus_cn_f64(&self) -> f64 {
        ratio_to_f64(self.le_plus_cn)
    }
}

fn ratio_to_f64(r: Ratio<i64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Complete-graph baselines used by the hyperenergeticity classifier.
/// All three coincide at `2(n-1)(n-2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnBaselineValues {
    pub le_cn: i64,
    pub le_plus_cn: i64,
    pub e_cn: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("family size parameter must be >= 1, got {0}")]
    SizeTooSmall(u64),
    #[error("join of zero complete graphs")]
    EmptyJoin,
}

/// Merges duplicate values, drops zero multiplicities, sorts decreasing.
fn normalize(entries: Vec<(i64, usize)>, n: u64) -> Vec<(i64, usize)> {
    let mut merged: Vec<(i64, usize)> = Vec::new();
    for (value, mult) in entries {
        if mult == 0 {
            continue;
        }
        match merged.iter_mut().find(|(v, _)| *v == value) {
            Some((_, m)) => *m += mult,
            None => merged.push((value, mult)),
        }
    }
    merged.sort_by_key(|&(value, _)| std::cmp::Reverse(value));
    let total: usize = merged.iter().map(|(_, m)| m).sum();
    assert_eq!(total as u64, n, "multiplicities must sum to the vertex count");
    merged
}

/// Closed form for the complete graph `K_n`:
/// CNL spectrum `{0^1, (n(n-2))^(n-1)}`, CNSL spectrum
/// `{(2(n-1)(n-2))^1, ((n-2)^2)^(n-1)}`, both energies `2(n-1)(n-2)`.
pub fn kn_closed_form(n: u64) -> Result<ClosedForm, ClosedFormError> {
    if n < 1 {
        return Err(ClosedFormError::SizeTooSmall(n));
    }
    if n == 1 {
        return Ok(ClosedForm {
            cnl_spectrum: vec![(0, 1)],
            cnq_spectrum: vec![(0, 1)],
            le_cn: Ratio::from_integer(0),
            le_plus_cn: Ratio::from_integer(0),
        });
    }
    let ni = n as i64;
    let energy = 2 * (ni - 1) * (ni - 2);
    Ok(ClosedForm {
        cnl_spectrum: normalize(vec![(0, 1), (ni * (ni - 2), n as usize - 1)], n),
        cnq_spectrum: normalize(
            vec![(energy, 1), ((ni - 2) * (ni - 2), n as usize - 1)],
            n,
        ),
        le_cn: Ratio::from_integer(energy),
        le_plus_cn: Ratio::from_integer(energy),
    })
}

/// Closed form for the complete bipartite graph `K_{m,n}`:
/// CNL spectrum `{0^2, (mn)^(m+n-2)}` with energy `4mn(m+n-2)/(m+n)`;
/// the CNSL side merges the four block eigenvalues and the energy is
/// piecewise in whether a part has a single vertex.
pub fn kmn_closed_form(m: u64, n: u64) -> Result<ClosedForm, ClosedFormError> {
    for s in [m, n] {
        if s < 1 {
            return Err(ClosedFormError::SizeTooSmall(s));
        }
    }
    let (mi, ni) = (m as i64, n as i64);
    let total = m + n;

    let cnl = normalize(vec![(0, 2), (mi * ni, (total - 2) as usize)], total);
    let le_cn = Ratio::new(4 * mi * ni * (mi + ni - 2), mi + ni);

    let cnq = normalize(
        vec![
            (2 * ni * (mi - 1), 1),
            (ni * (mi - 2), (m - 1) as usize),
            (2 * mi * (ni - 1), 1),
            (mi * (ni - 2), (n - 1) as usize),
        ],
        total,
    );
    let le_plus_cn = match (m, n) {
        (1, 1) => Ratio::from_integer(0),
        (1, _) => Ratio::new(2 * (ni - 1) * (ni + 2), ni + 1),
        (_, 1) => Ratio::new(2 * (mi - 1) * (mi + 2), mi + 1),
        _ => Ratio::new(4 * (mi * mi * (ni - 1) + ni * ni * (mi - 1)), mi + ni),
    };

    Ok(ClosedForm { cnl_spectrum: cnl, cnq_spectrum: cnq, le_cn, le_plus_cn })
}

/// Closed form for the star `S_k` (one center, `k` leaves):
/// CNL spectrum `{0^2, k^(k-1)}` with energy `4k(k-1)/(k+1)`; CNSL
/// spectrum `{0^1, (2(k-1))^1, (k-2)^(k-1)}` with energy
/// `2(k-1)(k+2)/(k+1)`.
pub fn star_closed_form(k: u64) -> Result<ClosedForm, ClosedFormError> {
    if k < 1 {
        return Err(ClosedFormError::SizeTooSmall(k));
    }
    let ki = k as i64;
    let total = k + 1;
    Ok(ClosedForm {
        cnl_spectrum: normalize(vec![(0, 2), (ki, (k - 1) as usize)], total),
        cnq_spectrum: normalize(
            vec![(0, 1), (2 * (ki - 1), 1), (ki - 2, (k - 1) as usize)],
            total,
        ),
        le_cn: Ratio::new(4 * ki * (ki - 1), ki + 1),
        le_plus_cn: Ratio::new(2 * (ki - 1) * (ki + 2), ki + 1),
    })
}

/// A join of complete graphs is the complete graph on the summed vertex
/// count; delegates there.
pub fn join_of_completes_closed_form(parts: &[u64]) -> Result<ClosedForm, ClosedFormError> {
    if parts.is_empty() {
        return Err(ClosedFormError::EmptyJoin);
    }
    for &p in parts {
        if p < 1 {
            return Err(ClosedFormError::SizeTooSmall(p));
        }
    }
    kn_closed_form(parts.iter().sum())
}

/// The three `K_n` baselines: `E_CN`, `LE_CN` and `LE+_CN` all equal
/// `2(n-1)(n-2)` (via `CN(K_n) = (n-2) A(K_n)` and `E(K_n) = 2(n-1)`).
pub fn kn_hyper_baselines(n: u64) -> KnBaselineValues {
    let ni = n as i64;
    let value = if n < 2 { 0 } else { 2 * (ni - 1) * (ni - 2) };
    KnBaselineValues { le_cn: value, le_plus_cn: value, e_cn: value }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn kn_examples() {
        let k4 = kn_closed_form(4).unwrap();
        assert_eq!(k4.cnl_spectrum, vec![(8, 3), (0, 1)]);
        assert_eq!(k4.le_cn, ratio(12, 1));

        assert_eq!(kn_closed_form(6).unwrap().le_cn, ratio(40, 1));

        let k2 = kn_closed_form(2).unwrap();
        assert_eq!(k2.cnl_spectrum, vec![(0, 2)]);
        assert_eq!(k2.le_cn, ratio(0, 1));

        let k1 = kn_closed_form(1).unwrap();
        assert_eq!(k1.cnl_spectrum, vec![(0, 1)]);
        assert_eq!(k1.le_plus_cn, ratio(0, 1));

        assert!(kn_closed_form(0).is_err());
    }

    #[test]
    fn kmn_examples() {
        // equal parts collapse to 4m(m-1)
        for m in 1..=10u64 {
            let form = kmn_closed_form(m, m).unwrap();
            let mi = m as i64;
            assert_eq!(form.le_cn, ratio(4 * mi * (mi - 1), 1));
            assert_eq!(form.le_plus_cn, ratio(4 * mi * (mi - 1), 1));
        }

        let k23 = kmn_closed_form(2, 3).unwrap();
        assert_eq!(k23.le_cn, ratio(72, 5));
        assert_eq!(k23.le_plus_cn, ratio(68, 5));
        assert_eq!(k23.cnl_spectrum, vec![(6, 3), (0, 2)]);
        assert_eq!(k23.cnq_spectrum, vec![(8, 1), (6, 1), (2, 2), (0, 1)]);

        let k11 = kmn_closed_form(1, 1).unwrap();
        assert_eq!(k11.le_plus_cn, ratio(0, 1));
        assert_eq!(k11.cnl_spectrum, vec![(0, 2)]);
        assert_eq!(k11.cnq_spectrum, vec![(0, 2)]);
    }

    #[test]
    fn star_examples() {
        let s3 = star_closed_form(3).unwrap();
        assert_eq!(s3.le_cn, ratio(6, 1));
        assert_eq!(s3.le_plus_cn, ratio(5, 1));

        assert_eq!(star_closed_form(1).unwrap().le_cn, ratio(0, 1));

        let s2 = star_closed_form(2).unwrap();
        assert_eq!(s2.cnl_spectrum, vec![(2, 1), (0, 2)]);
    }

    #[test]
    fn star_matches_bipartite_with_one_center() {
        for k in 1..=30 {
            assert_eq!(star_closed_form(k).unwrap(), kmn_closed_form(1, k).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn join_examples() {
        assert_eq!(
            join_of_completes_closed_form(&[2, 3]).unwrap(),
            kn_closed_form(5).unwrap()
        );
        assert_eq!(join_of_completes_closed_form(&[2, 3]).unwrap().le_cn, ratio(24, 1));
        assert_eq!(join_of_completes_closed_form(&[1, 1]).unwrap().le_cn, ratio(0, 1));
        assert_eq!(join_of_completes_closed_form(&[2, 2, 2]).unwrap().le_cn, ratio(40, 1));
        assert!(join_of_completes_closed_form(&[]).is_err());
    }

    #[test]
    fn baseline_examples() {
        assert_eq!(kn_hyper_baselines(10).le_cn, 144);
        assert_eq!(kn_hyper_baselines(4).le_cn, 12);
        assert_eq!(kn_hyper_baselines(1).e_cn, 0);
    }

    #[test]
    fn baselines_strictly_increase_from_two() {
        let mut prev = kn_hyper_baselines(2).le_cn;
        for n in 3..=60 {
            let next = kn_hyper_baselines(n).le_cn;
            assert!(next > prev, "baseline not increasing at n = {n}");
            prev = next;
        }
    }

    #[test]
    fn multiplicities_sum_to_vertex_count() {
        for (m, n) in [(1u64, 1u64), (1, 5), (4, 4), (3, 7), (20, 20)] {
            let form = kmn_closed_form(m, n).unwrap();
            let total: usize = form.cnl_spectrum.iter().map(|(_, c)| c).sum();
            assert_eq!(total as u64, m + n);
            let total_q: usize = form.cnq_spectrum.iter().map(|(_, c)| c).sum();
            assert_eq!(total_q as u64, m + n);
            assert!(form.cnl_spectrum.iter().all(|&(v, _)| v >= 0));
            assert!(form.cnq_spectrum.iter().all(|&(v, _)| v >= 0));
        }
    }
}
