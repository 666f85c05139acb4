//! Parameter grids: per-identity defaults and deterministic enumeration.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::norlund::ParamVec;
use crate::rational::{rat, rat_int, Rational};

use super::{IdentityId, TuplePoint};

/// Seed of the default grids (random parameter vectors and point checks are
/// drawn from it, so default reports are bit-stable run to run).
pub const DEFAULT_SEED: u64 = 0x006e_6f72_6c75_6e64;

/// Fixed offsets used for the polynomial-mode multinomial checks
/// (`x_2, x_3, ...`).
const MULTINOMIAL_OFFSETS: [(i64, i64); 3] = [(1, 2), (-1, 3), (2, 1)];

/// A finite parameter grid for one identity.
///
/// `default_for` reproduces the documented acceptance grid of each identity;
/// the command-line front end overrides individual fields.  Enumeration is a
/// pure function of the grid (random draws are taken from `seed`), so two
/// runs over equal grids verify exactly the same tuples in the same order.
#[derive(Clone, Debug)]
pub struct Grid {
    pub n_max: u64,
    /// Cap on k; the triangle identities additionally cap k at n, and
    /// prefix-enumerated identities cap k at the parameter-vector length.
    pub k_max: u64,
    pub p_values: Vec<u64>,
    pub m_values: Vec<u64>,
    pub a_vectors: Vec<ParamVec>,
    pub y_values: Vec<Rational>,
    /// Number of random point checks per polynomial-mode tuple
    /// (`MULTINOMIAL_B_POLY` only).
    pub point_checks: u64,
    pub seed: u64,
}

impl Grid {
    /// The documented default grid of `id`.
    pub fn default_for(id: IdentityId) -> Grid {
        let mut grid = Grid {
            n_max: 0,
            k_max: 0,
            p_values: Vec::new(),
            m_values: Vec::new(),
            a_vectors: Vec::new(),
            y_values: Vec::new(),
            point_checks: 0,
            seed: DEFAULT_SEED,
        };
        match id {
            IdentityId::BernNum3Case | IdentityId::BinomialBase => {
                grid.n_max = 30;
                grid.k_max = 30;
            }
            IdentityId::Kim1Poly
            | IdentityId::KimEulerNum
            | IdentityId::KimPolyEuler
            | IdentityId::EulerSignLemma => {
                grid.n_max = 25;
                grid.k_max = 25;
            }
            IdentityId::CancellationB | IdentityId::CancellationE => {
                grid.n_max = 30;
            }
            IdentityId::Prop42 => {
                grid.n_max = 20;
                grid.a_vectors = ["1", "2", "-1", "3/2", "-2/3"]
                    .iter()
                    .map(|s| s.parse().unwrap())
                    .collect();
            }
            IdentityId::Prop43 => {
                grid.n_max = 20;
                grid.k_max = 4;
                grid.a_vectors = vec![ParamVec::ones(4)];
                grid.y_values = vec![rat_int(0), rat_int(1), rat(-1, 2)];
            }
            IdentityId::Prop44 => {
                grid.n_max = 8;
                grid.k_max = 4;
                let mut rng = ChaCha8Rng::seed_from_u64(grid.seed);
                for len in 1..=4 {
                    for _ in 0..5 {
                        grid.a_vectors.push(random_param_vec(&mut rng, len));
                    }
                }
            }
            IdentityId::MultinomialBPoly | IdentityId::MultinomialBNum => {
                grid.n_max = 10;
                grid.k_max = 3;
                grid.a_vectors = ["1,1,1", "2,-1/3,1", "1/2,3,-1"]
                    .iter()
                    .map(|s| s.parse().unwrap())
                    .collect();
                grid.point_checks = 1;
            }
            IdentityId::NorlundKim | IdentityId::MultidimEulerKim => {
                grid.n_max = 15;
                grid.k_max = 15;
                grid.p_values = vec![1, 2, 3];
            }
            IdentityId::RaabeB => {
                grid.n_max = 12;
                grid.k_max = 3;
                grid.m_values = vec![1, 2, 3, 5];
                grid.a_vectors = ["1", "1,1", "2,-1/3,1"]
                    .iter()
                    .map(|s| s.parse().unwrap())
                    .collect();
            }
            IdentityId::RaabeEOdd => {
                grid.n_max = 12;
                grid.k_max = 3;
                grid.m_values = vec![1, 3, 5];
                grid.a_vectors = ["1", "1,1", "2,-1/3,1"]
                    .iter()
                    .map(|s| s.parse().unwrap())
                    .collect();
            }
            IdentityId::NielsenEven => {
                grid.n_max = 12;
                grid.m_values = vec![2, 4];
            }
            IdentityId::EvenRaabeHigher => {
                grid.n_max = 10;
                grid.k_max = 3;
                grid.m_values = vec![2, 4];
                grid.a_vectors = ["1", "1,1", "2,1/2"]
                    .iter()
                    .map(|s| s.parse().unwrap())
                    .collect();
            }
        }
        grid
    }

    /// Enumerates the grid's tuples for `id` in lexicographic order
    /// (outermost loop first: m, then a, then p/k, then y, then n).
    pub fn tuples(&self, id: IdentityId) -> Vec<TuplePoint> {
        let mut out = Vec::new();
        match id {
            IdentityId::BernNum3Case
            | IdentityId::Kim1Poly
            | IdentityId::KimEulerNum
            | IdentityId::KimPolyEuler
            | IdentityId::EulerSignLemma
            | IdentityId::BinomialBase => {
                for n in 0..=self.n_max {
                    for k in 0..=n.min(self.k_max) {
                        let mut t = TuplePoint::new(n);
                        t.k = Some(k);
                        out.push(t);
                    }
                }
            }

            IdentityId::CancellationB | IdentityId::CancellationE => {
                for n in 0..=self.n_max {
                    out.push(TuplePoint::new(n));
                }
            }

            IdentityId::Prop42 => {
                for a in &self.a_vectors {
                    debug_assert_eq!(a.len(), 1, "PROP42 takes scalar parameters");
                    for n in 0..=self.n_max {
                        let mut t = TuplePoint::new(n);
                        t.a = Some(a.clone());
                        out.push(t);
                    }
                }
            }

            IdentityId::Prop43 => {
                for a in &self.a_vectors {
                    for k in 0..=self.k_max.min(a.len() as u64) {
                        for y in &self.y_values {
                            for n in 0..=self.n_max {
                                let mut t = TuplePoint::new(n);
                                t.k = Some(k);
                                t.y = Some(y.clone());
                                t.a = Some(a.prefix(k as usize));
                                out.push(t);
                            }
                        }
                    }
                }
            }

            IdentityId::Prop44 => {
                for a in &self.a_vectors {
                    if a.is_empty() || a.len() as u64 > self.k_max {
                        continue;
                    }
                    for n in 0..=self.n_max {
                        let mut t = TuplePoint::new(n);
                        t.k = Some(a.len() as u64);
                        t.a = Some(a.clone());
                        out.push(t);
                    }
                }
            }

            IdentityId::MultinomialBPoly => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                for a in &self.a_vectors {
                    for k in 1..=self.k_max.min(a.len() as u64) {
                        for n in 0..=self.n_max {
                            let prefix = a.prefix(k as usize);
                            let offsets: Vec<Rational> = MULTINOMIAL_OFFSETS
                                [..k as usize - 1]
                                .iter()
                                .map(|&(p, q)| rat(p, q))
                                .collect();
                            let mut t = TuplePoint::new(n);
                            t.k = Some(k);
                            t.a = Some(prefix.clone());
                            t.xs = Some(offsets);
                            out.push(t);
                            for _ in 0..self.point_checks {
                                let xs =
                                    (0..k).map(|_| small_rational(&mut rng)).collect::<Vec<_>>();
                                let mut t = TuplePoint::new(n);
                                t.k = Some(k);
                                t.a = Some(prefix.clone());
                                t.xs = Some(xs);
                                out.push(t);
                            }
                        }
                    }
                }
            }

            IdentityId::MultinomialBNum => {
                for a in &self.a_vectors {
                    for k in 1..=self.k_max.min(a.len() as u64) {
                        for n in 0..=self.n_max {
                            let mut t = TuplePoint::new(n);
                            t.k = Some(k);
                            t.a = Some(a.prefix(k as usize));
                            out.push(t);
                        }
                    }
                }
            }

            IdentityId::NorlundKim | IdentityId::MultidimEulerKim => {
                for p in &self.p_values {
                    for n in 0..=self.n_max {
                        for k in 0..=n.min(self.k_max) {
                            let mut t = TuplePoint::new(n);
                            t.k = Some(k);
                            t.p = Some(*p);
                            out.push(t);
                        }
                    }
                }
            }

            IdentityId::RaabeB | IdentityId::RaabeEOdd | IdentityId::EvenRaabeHigher => {
                for m in &self.m_values {
                    for a in &self.a_vectors {
                        for k in 0..=self.k_max.min(a.len() as u64) {
                            for n in 0..=self.n_max {
                                let mut t = TuplePoint::new(n);
                                t.k = Some(k);
                                t.m = Some(*m);
                                t.a = Some(a.prefix(k as usize));
                                out.push(t);
                            }
                        }
                    }
                }
            }

            IdentityId::NielsenEven => {
                for m in &self.m_values {
                    for n in 0..=self.n_max {
                        let mut t = TuplePoint::new(n);
                        t.m = Some(*m);
                        out.push(t);
                    }
                }
            }
        }
        out
    }
}

/// Uniform-ish draw of a small nonzero rational (numerator in ±1..=5,
/// denominator in 1..=4); bias is irrelevant, these are only test points.
fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let numer = (rng.next_u64() % 5 + 1) as i64;
    let sign = if rng.next_u64().is_multiple_of(2) { 1 } else { -1 };
    let denom = (rng.next_u64() % 4 + 1) as i64;
    rat(sign * numer, denom)
}

fn random_param_vec(rng: &mut ChaCha8Rng, len: usize) -> ParamVec {
    let entries = (0..len).map(|_| small_rational(rng)).collect();
    ParamVec::new(entries).expect("draws are nonzero")
}
