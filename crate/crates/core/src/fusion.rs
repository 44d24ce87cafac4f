//! Braid generators for the Ising and Fibonacci anyon models.
//!
//! The Hilbert space of N identical anyons is spanned by fusion paths
//! `q_0 = vacuum, q_1 = a, q_2, ..., q_N`, where `q_i` is the total
//! charge of the first i anyons and consecutive labels are constrained
//! by the fusion rules. The elementary braid of anyons i and i+1 acts
//! only on the label `q_i`, through `F R F^{-1}` in the basis selected
//! by its neighbours `q_{i-1}`, `q_{i+1}`.
//!
//! Fibonacci (`tau x tau = 1 + tau`): dimensions follow the Fibonacci
//! sequence, `D_{N+1} = D_N + D_{N-1}`. Ising (`sigma x sigma = 1 + psi`,
//! `sigma x psi = sigma`): dimensions grow as `2^(floor((N-1)/2))`, roughly
//! `sqrt(2)^N`.
//!
//! R-symbol chirality is fixed so that the nearest-neighbour exchange
//! spectrum is `{exp(-3 i pi/5), exp(4 i pi/5)}` for Fibonacci and
//! `{exp(-i pi/8), exp(3 i pi/8)}` for Ising; the opposite chirality
//! conjugates every generator.

use crate::braid::Chirality;
use crate::error::CoreError;
use crate::linalg::CMat;
use crate::Result;
use num_complex::Complex64;
use std::collections::HashMap;

const MAX_DIM: usize = 4096;

fn phase(units_of_pi: f64) -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::PI * units_of_pi)
}

/// Charge labels. Fibonacci uses {Vac, Tau}; Ising uses {Vac, Sigma, Psi}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Charge {
    Vac,
    Tau,
    Sigma,
    Psi,
}

struct ModelRules {
    anyon: Charge,
    /// allowed next labels after fusing one more anyon onto `q`
    next: fn(Charge) -> &'static [Charge],
    /// R-symbol for a pair in channel `c`
    r_symbol: fn(Charge) -> Complex64,
    /// 2x2 F-matrix in the fixed two-channel basis, when applicable
    f_matrix: [[f64; 2]; 2],
    /// the two channels spanned by the mid label in the 2D case
    mid_channels: [Charge; 2],
}

fn fib_next(q: Charge) -> &'static [Charge] {
    match q {
        Charge::Vac => &[Charge::Tau],
        Charge::Tau => &[Charge::Vac, Charge::Tau],
        _ => &[],
    }
}

fn ising_next(q: Charge) -> &'static [Charge] {
    match q {
        Charge::Vac | Charge::Psi => &[Charge::Sigma],
        Charge::Sigma => &[Charge::Vac, Charge::Psi],
        _ => &[],
    }
}

fn fib_r(c: Charge) -> Complex64 {
    match c {
        Charge::Vac => phase(4.0 / 5.0),
        Charge::Tau => phase(-3.0 / 5.0),
        _ => unreachable!("fibonacci channel"),
    }
}

fn ising_r(c: Charge) -> Complex64 {
    match c {
        Charge::Vac => phase(-1.0 / 8.0),
        Charge::Psi => phase(3.0 / 8.0),
        _ => unreachable!("ising channel"),
    }
}

fn rules(model_is_fibonacci: bool) -> ModelRules {
    if model_is_fibonacci {
        let inv_phi = 2.0 / (1.0 + 5.0_f64.sqrt());
        let s = inv_phi.sqrt();
        ModelRules {
            anyon: Charge::Tau,
            next: fib_next,
            r_symbol: fib_r,
            f_matrix: [[inv_phi, s], [s, -inv_phi]],
            mid_channels: [Charge::Vac, Charge::Tau],
        }
    } else {
        let h = 1.0 / 2.0_f64.sqrt();
        ModelRules {
            anyon: Charge::Sigma,
            next: ising_next,
            r_symbol: ising_r,
            f_matrix: [[h, h], [h, -h]],
            mid_channels: [Charge::Vac, Charge::Psi],
        }
    }
}

/// Enumerate all fusion paths `q_0..q_N` with `q_0 = Vac`.
fn enumerate_paths(rules: &ModelRules, n: usize) -> Vec<Vec<Charge>> {
    let mut paths = vec![vec![Charge::Vac]];
    for _ in 0..n {
        let mut grown = Vec::new();
        for p in &paths {
            let last = *p.last().unwrap();
            for &q in (rules.next)(last) {
                let mut np = p.clone();
                np.push(q);
                grown.push(np);
            }
        }
        paths = grown;
    }
    paths
}

/// Braid generators for N Fibonacci or Ising anyons, as dense unitaries
/// on the path basis.
pub fn fusion_generators(
    fibonacci: bool,
    n: usize,
    chirality: Chirality,
) -> Result<(usize, Vec<CMat>)> {
    if n < 2 {
        return Err(CoreError::invalid("fusion representation needs N >= 2"));
    }
    let rules = rules(fibonacci);
    let paths = enumerate_paths(&rules, n);
    let dim = paths.len();
    if dim > MAX_DIM {
        return Err(CoreError::DimensionTooLarge { dim, max: MAX_DIM });
    }
    let index: HashMap<&[Charge], usize> =
        paths.iter().enumerate().map(|(k, p)| (p.as_slice(), k)).collect();

    // braid matrix F R F^{-1} on the two-channel mid label; F is real
    // symmetric and self-inverse for both models
    let two_by_two = {
        let f = rules.f_matrix;
        let r = [(rules.r_symbol)(rules.mid_channels[0]), (rules.r_symbol)(rules.mid_channels[1])];
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = Complex64::new(0.0, 0.0);
                for (c, rc) in r.iter().enumerate() {
                    acc += Complex64::new(f[i][c], 0.0) * rc * Complex64::new(f[c][j], 0.0);
                }
                out[i][j] = acc;
            }
        }
        out
    };

    let conj = matches!(chirality, Chirality::Minus);
    let mut gens = Vec::with_capacity(n - 1);
    for g in 1..n {
        let mut m = CMat::zeros(dim, dim);
        for (col, p) in paths.iter().enumerate() {
            let (left, mid, right) = (p[g - 1], p[g], p[g + 1]);
            let is_2d = left == rules.anyon && right == rules.anyon;
            if !is_2d {
                // mid label frozen; the pair channel c is fixed by left -> right
                let c = pair_channel(&rules, left, right);
                let amp = (rules.r_symbol)(c);
                let amp = if conj { amp.conj() } else { amp };
                m[(col, col)] += amp;
            } else {
                let b = two_by_two(left, right);
                let mi = rules.mid_channels.iter().position(|&c| c == mid).unwrap();
                for (oi, &out_mid) in rules.mid_channels.iter().enumerate() {
                    let amp = if conj { b[oi][mi].conj() } else { b[oi][mi] };
                    if amp.norm() < 1e-300 {
                        continue;
                    }
                    let mut np = p.clone();
                    np[g] = out_mid;
                    if let Some(&row) = index.get(np.as_slice()) {
                        m[(row, col)] += amp;
                    }
                }
            }
        }
        gens.push(m);
    }
    Ok((dim, gens))
}

/// Channel of the braided pair when the mid label is frozen: the unique
/// charge `c` with `right` contained in `left x c`.
fn pair_channel(rules: &ModelRules, left: Charge, right: Charge) -> Charge {
    match rules.anyon {
        Charge::Tau => {
            // left, right in {Vac, Tau}, at least one Vac
            if left == Charge::Vac && right == Charge::Vac {
                Charge::Vac
            } else {
                Charge::Tau
            }
        }
        Charge::Sigma => {
            // left, right in {Vac, Psi}
            if left == right {
                Charge::Vac
            } else {
                Charge::Psi
            }
        }
        _ => unreachable!(),
    }
}

/// Fusion-space dimension without building matrices.
pub fn fusion_dimension(fibonacci: bool, n: usize) -> usize {
    let rules = rules(fibonacci);
    // dynamic count over reachable charges
    let mut counts: HashMap<Charge, usize> = HashMap::new();
    counts.insert(Charge::Vac, 1);
    for _ in 0..n {
        let mut grown: HashMap<Charge, usize> = HashMap::new();
        for (&q, &c) in &counts {
            for &nq in (rules.next)(q) {
                *grown.entry(nq).or_insert(0) += c;
            }
        }
        counts = grown;
    }
    counts.values().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_dimensions_follow_recurrence() {
        let dims: Vec<usize> = (2..=12).map(|n| fusion_dimension(true, n)).collect();
        // D_2 = 2, D_3 = 3, D_4 = 5, ...
        assert_eq!(dims[0], 2);
        assert_eq!(dims[1], 3);
        assert_eq!(dims[2], 5);
        for k in 2..dims.len() {
            assert_eq!(dims[k], dims[k - 1] + dims[k - 2]);
        }
        // ratio approaches the golden ratio
        let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
        let r = dims[10] as f64 / dims[9] as f64;
        assert!((r - phi).abs() < 5e-3);
    }

    #[test]
    fn ising_dimensions_grow_as_sqrt2() {
        for n in 2..=11usize {
            assert_eq!(fusion_dimension(false, n), 1usize << ((n - 1) / 2), "n={n}");
        }
    }

    #[test]
    fn dimension_matches_enumeration() {
        for n in 2..=9 {
            let (d, gens) = fusion_generators(true, n, Chirality::Plus).unwrap();
            assert_eq!(d, fusion_dimension(true, n));
            assert_eq!(gens.len(), n - 1);
            let (d, _) = fusion_generators(false, n, Chirality::Plus).unwrap();
            assert_eq!(d, fusion_dimension(false, n));
        }
    }
}
