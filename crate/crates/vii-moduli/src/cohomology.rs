//! Cohomology dimensions of line bundles and the membership sets driving the
//! extension construction.
//!
//! On these surfaces `h^0` of a line bundle is 0 or 1: sections vanish on an
//! effective divisor supported on the curves, and each class holds at most
//! one such divisor. Everything else follows from the Euler characteristic
//! (`c_1(K)^2 = -1` makes it `-n(n-1)/2` on `K^n ⊗ t`) together with duality
//! `h^2(M) = h^0(M^* ⊗ K)`.
//!
//! Two Pic0 subsets control rank-2 extensions with determinant K and
//! vanishing second Chern class:
//!
//! * `R(S)`: parameters `R` with `H^0(R^2) ≠ 0`; the A-side extension
//!   `0 → R^* ⊗ K → A → R → 0` is nontrivial exactly there.
//! * `Q(S)`: parameters `L` with `H^0(L^2 ⊗ K^*) ≠ 0`; the E-side family
//!   `0 → L → E → L^* ⊗ K → 0` degenerates to a projective line of
//!   non-simple bundles exactly there.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::picard::LineBundle;
use crate::rat::{frac_mod1, rat, Rat};
use crate::surface::{SurfaceKind, SurfaceModel};

/// All four dimension invariants of one line bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRecord {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
    pub chi: i64,
}

/// Euler characteristic of `K^n ⊗ t`; independent of the twist and of the
/// surface parameters because `c_1(K)^2 = -1` and `chi(O) = 0`.
pub fn euler_char(a: &LineBundle) -> i64 {
    let n = a.n();
    -(n * (n - 1)) / 2
}

/// Integer solutions of `z + n(n-1) = 0` with `|n| <= max_n`, `z >= 0`: the
/// numerical constraint forcing the two extension shapes. The degenerate
/// locus of the discriminant leaves only `(0, 0)` and `(1, 0)`.
pub fn zlr_solutions(max_n: i64) -> Vec<(i64, i64)> {
    let mut out: Vec<(i64, i64)> = (-max_n..=max_n)
        .filter_map(|n| {
            let z = -n * (n - 1);
            (z >= 0).then_some((n, z))
        })
        .collect();
    out.sort_unstable();
    out
}

impl SurfaceModel {
    /// `h^0` through the unique-divisor property: 1 if the class holds an
    /// effective divisor, 0 otherwise.
    pub(crate) fn h0(&self, a: &LineBundle) -> i64 {
        i64::from(self.effective_divisor(a).is_some())
    }

    pub fn dims(&self, a: &LineBundle) -> Result<DimRecord, Error> {
        let h0 = self.h0(a);
        let h2 = self.h0(&a.dual().tensor(&LineBundle::k()));
        let chi = euler_char(a);
        let h1 = h0 + h2 - chi;
        if h1 < 0 {
            return Err(Error::InternalInconsistency(format!(
                "negative h1 = {h1} at {a}"
            )));
        }
        Ok(DimRecord { h0, h1, h2, chi })
    }

    /// Membership in R(S), computed from the definition.
    pub(crate) fn member_r(&self, r: &LineBundle) -> bool {
        self.h0(&r.tensor(r)) != 0
    }

    /// Membership in Q(S), computed from the definition.
    pub(crate) fn member_q(&self, l: &LineBundle) -> bool {
        self.h0(&l.tensor(l).tensor(&LineBundle::k().dual())) != 0
    }

    /// Does `H^0(R^2)` vanish? Decides whether the A-side extension is
    /// nontrivial.
    pub fn in_r(&self, r: &LineBundle) -> Result<bool, Error> {
        if !r.is_pic0() {
            return Err(Error::WrongChernClass(r.n()));
        }
        Ok(self.member_r(r))
    }

    /// Does `H^0(L^2 ⊗ K^*)` vanish? Decides whether the E-side extension is
    /// unique up to isomorphism.
    pub fn in_q(&self, l: &LineBundle) -> Result<bool, Error> {
        if !l.is_pic0() {
            return Err(Error::WrongChernClass(l.n()));
        }
        Ok(self.member_q(l))
    }

    /// Dimension of the extension space behind the E-side family: 2 exactly
    /// on Q(S), 1 elsewhere.
    pub fn ext_dim_e(&self, l: &LineBundle) -> Result<u32, Error> {
        if !l.is_pic0() {
            return Err(Error::WrongChernClass(l.n()));
        }
        Ok(1 + u32::from(self.member_q(l)))
    }

    /// Dimension of the extension space behind the A-side family: 1 exactly
    /// on R(S), 0 elsewhere.
    pub fn ext_dim_a(&self, r: &LineBundle) -> Result<u32, Error> {
        if !r.is_pic0() {
            return Err(Error::WrongChernClass(r.n()));
        }
        Ok(u32::from(self.member_r(r)))
    }

    /// All of R(S) with degree at most `bound`, sorted by (degree, arg).
    ///
    /// On half Inoue surfaces R(S) = {O, F}. On the other families R(S) is
    /// the union of the square roots of every O(rC), r >= 0: two torsion
    /// twists at each degree r·vol_C and each degree (r+1/2)·vol_C. Members
    /// of the two families never share a degree, and twist partners at one
    /// degree differ in arg by 1/2, so the sort order is total and stable
    /// across runs.
    pub fn enumerate_r_below(&self, bound: Rat) -> Vec<LineBundle> {
        let mut out = Vec::new();
        match self.kind() {
            SurfaceKind::HalfInoue => {
                if bound >= rat(0, 1) {
                    out.push(LineBundle::o());
                    out.push(LineBundle::f());
                }
            }
            _ => {
                let vol = self.vol_c();
                let theta = self.theta_c();
                for shift in [rat(0, 1), rat(1, 2)] {
                    let mut k = shift;
                    while k * vol <= bound {
                        for b in [rat(0, 1), rat(1, 2)] {
                            out.push(LineBundle::new(0, k * vol, frac_mod1(k * theta + b)));
                        }
                        k += 1;
                    }
                }
                out.sort_unstable_by_key(|m| (m.logmod(), m.arg()));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::SurfaceModel;

    fn half() -> SurfaceModel {
        SurfaceModel::half_inoue(rat(2, 1)).unwrap()
    }

    fn enoki5() -> SurfaceModel {
        SurfaceModel::enoki(rat(1, 1), rat(5, 1), rat(0, 1)).unwrap()
    }

    fn parabolic11() -> SurfaceModel {
        SurfaceModel::parabolic(rat(1, 1), rat(1, 1), rat(0, 1)).unwrap()
    }

    #[test]
    fn euler_table() {
        let values: Vec<i64> = (-3..=3)
            .map(|n| euler_char(&LineBundle::k().pow(n)))
            .collect();
        assert_eq!(values, vec![-6, -3, -1, 0, 0, -1, -3]);
        // The twist is irrelevant.
        assert_eq!(euler_char(&LineBundle::new(2, rat(9, 7), rat(1, 3))), -1);
    }

    #[test]
    fn dims_of_the_structure_sheaf() {
        for s in [half(), enoki5(), parabolic11()] {
            let d = s.dims(&LineBundle::o()).unwrap();
            assert_eq!(
                d,
                DimRecord {
                    h0: 1,
                    h1: 1,
                    h2: 0,
                    chi: 0
                }
            );
        }
    }

    #[test]
    fn dims_of_canonical_powers() {
        for s in [half(), enoki5(), parabolic11()] {
            let d = s.dims(&LineBundle::k()).unwrap();
            assert_eq!((d.h0, d.h1, d.h2, d.chi), (0, 1, 1, 0));
        }
        // h2(K^2) = h0(K^{-1}), and K^{-1} = O(C+E) is effective exactly on
        // the parabolic surface.
        let k2 = LineBundle::k().pow(2);
        for s in [half(), enoki5()] {
            let d = s.dims(&k2).unwrap();
            assert_eq!((d.h0, d.h1, d.h2, d.chi), (0, 1, 0, -1));
        }
        let d = parabolic11().dims(&k2).unwrap();
        assert_eq!((d.h0, d.h1, d.h2, d.chi), (0, 2, 1, -1));
    }

    #[test]
    fn membership_on_half_inoue() {
        let s = half();
        // R = {O, F}; Q = both square roots of F.
        assert!(s.in_r(&LineBundle::o()).unwrap());
        assert!(s.in_r(&LineBundle::f()).unwrap());
        assert!(!s.in_r(&LineBundle::new(0, rat(1, 1), rat(0, 1))).unwrap());
        assert!(s.in_q(&LineBundle::new(0, rat(0, 1), rat(1, 4))).unwrap());
        assert!(s.in_q(&LineBundle::new(0, rat(0, 1), rat(3, 4))).unwrap());
        assert!(!s.in_q(&LineBundle::o()).unwrap());
        assert_eq!(
            s.ext_dim_e(&LineBundle::new(0, rat(0, 1), rat(1, 4)))
                .unwrap(),
            2
        );
    }

    #[test]
    fn membership_on_enoki() {
        let s = enoki5();
        // Q is empty; R carries two twists per half-integer multiple of vol_C.
        assert!(s.in_r(&LineBundle::o()).unwrap());
        assert!(s.in_r(&LineBundle::new(0, rat(1, 2), rat(0, 1))).unwrap());
        assert!(s.in_r(&LineBundle::new(0, rat(1, 2), rat(1, 2))).unwrap());
        assert!(!s.in_r(&LineBundle::new(0, rat(1, 1), rat(1, 7))).unwrap());
        assert!(!s.in_r(&LineBundle::new(0, rat(-1, 2), rat(0, 1))).unwrap());
        assert!(!s.in_q(&LineBundle::o()).unwrap());
        assert_eq!(
            s.ext_dim_e(&LineBundle::new(0, rat(-3, 1), rat(1, 3)))
                .unwrap(),
            1
        );
        assert_eq!(s.ext_dim_a(&LineBundle::o()).unwrap(), 1);
        assert_eq!(
            s.ext_dim_a(&LineBundle::new(0, rat(1, 1), rat(1, 7)))
                .unwrap(),
            0
        );
    }

    #[test]
    fn membership_on_parabolic() {
        let p = parabolic11();
        // Q = R ∪ sqrt(O(-C)): the extra members sit at degree -vol_C/2.
        assert!(p.in_q(&LineBundle::o()).unwrap());
        assert!(p.in_q(&LineBundle::new(0, rat(-1, 2), rat(0, 1))).unwrap());
        assert!(p.in_q(&LineBundle::new(0, rat(-1, 2), rat(1, 2))).unwrap());
        assert!(!p.in_q(&LineBundle::new(0, rat(-1, 1), rat(0, 1))).unwrap());
        assert_eq!(
            p.ext_dim_e(&LineBundle::new(0, rat(-1, 2), rat(0, 1)))
                .unwrap(),
            2
        );
    }

    #[test]
    fn pic0_guard() {
        let s = enoki5();
        assert_eq!(s.in_r(&LineBundle::k()), Err(Error::WrongChernClass(1)));
        assert_eq!(
            s.ext_dim_e(&LineBundle::k()),
            Err(Error::WrongChernClass(1))
        );
        assert!(s.dims(&LineBundle::k()).is_ok());
    }

    #[test]
    fn enumeration_is_sorted_and_definitional() {
        let s = enoki5();
        let members = s.enumerate_r_below(s.rho());
        assert_eq!(members.len(), 12);
        let degrees: Vec<Rat> = members.iter().map(|m| s.degree(m)).collect();
        let mut sorted = degrees.clone();
        sorted.sort();
        assert_eq!(degrees, sorted);
        for m in &members {
            assert!(s.in_r(m).unwrap());
            assert!(s.degree(m) <= s.rho());
        }
        assert!(s.enumerate_r_below(rat(-1, 1)).is_empty());

        // Half Inoue: only the torsion pair, and only at non-negative bounds.
        let h = half();
        assert_eq!(
            h.enumerate_r_below(rat(0, 1)),
            vec![LineBundle::o(), LineBundle::f()]
        );
        assert!(h.enumerate_r_below(rat(-1, 10)).is_empty());
    }

    #[test]
    fn numerical_solutions() {
        assert_eq!(zlr_solutions(100), vec![(0, 0), (1, 0)]);
        assert_eq!(zlr_solutions(0), vec![(0, 0)]);
    }
}
