//! Assembled views of the two moduli spaces.
//!
//! The polystable moduli space is a closed disc: the open part is indexed by
//! Pic0 parameters of degree below `rho = deg(K)/2` plus one central point,
//! the boundary circle by split bundles at degree exactly `rho`. On an Enoki
//! surface with positive `deg K` the disc degenerates: each torsion parameter
//! `R` of degree below `rho` is a nodal point glued to a puncture at the
//! reflected parameter `R^* ⊗ O(-C)`, and torsion parameters of degree
//! exactly `rho` touch the boundary circle from inside.
//!
//! The simple moduli space is larger and non-Hausdorff: over every torsion
//! parameter the E-side and A-side extensions refuse to separate. The simple
//! report lists those groups inside a degree window, since on an Enoki
//! surface there are countably many.

use serde::{Deserialize, Serialize};

use crate::bundles::{CanonicalPoint, FiltrableBundle};
use crate::error::Error;
use crate::picard::LineBundle;
use crate::rat::{rat_string, u64_string, Rat};
use crate::surface::{SurfaceKind, SurfaceModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CenterKind {
    /// The half-Inoue center: the A-side extension over the trivial bundle,
    /// which is filtrable.
    FiltrableA0,
    /// The unique non-filtrable bundle, with no Pic0 coordinate.
    NonFiltrable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterDescriptor {
    pub kind: CenterKind,
    /// Whether tensoring the central bundle by the torsion twist F returns
    /// the same point.
    pub f_invariant: bool,
}

/// The boundary circle of split bundles `L + L^* ⊗ K` at `deg L = rho`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryDescriptor {
    #[serde(with = "rat_string")]
    pub degree: Rat,
    pub touch_count: u64,
    /// False as soon as an interior family touches the circle; the closure
    /// then fails to be a manifold with boundary at the touch points.
    pub smooth_boundary: bool,
}

/// A nodal point of the disc together with the puncture it is glued to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularPair {
    #[serde(rename = "R")]
    pub node: LineBundle,
    #[serde(with = "rat_string")]
    pub node_degree: Rat,
    pub puncture: LineBundle,
    #[serde(with = "rat_string")]
    pub puncture_degree: Rat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    #[serde(rename = "card_R_le_rho", with = "u64_string")]
    pub card_r_le_rho: u64,
    #[serde(rename = "card_U", with = "u64_string")]
    pub card_u: u64,
    #[serde(with = "u64_string")]
    pub card_boundary_touch: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliReport {
    pub surface: SurfaceModel,
    #[serde(with = "rat_string")]
    pub rho: Rat,
    pub center: CenterDescriptor,
    pub boundary: BoundaryDescriptor,
    pub singular_pairs: Vec<SingularPair>,
    /// Torsion parameters of degree exactly `rho`, kept out of both the
    /// singular pairs and the moduli points.
    pub boundary_touches: Vec<LineBundle>,
    /// The removed parameters `R^* ⊗ O(-C)`, one per torsion parameter of
    /// degree at most `rho`.
    #[serde(rename = "punctures_U")]
    pub punctures_u: Vec<LineBundle>,
    pub counts: Counts,
    /// True exactly when there are no singular pairs.
    pub smooth: bool,
}

pub fn build_polystable_moduli(s: &SurfaceModel) -> ModuliReport {
    let rho = s.rho();
    let members = s.enumerate_r_below(rho);
    let reflect = |r: &LineBundle| r.dual().tensor(&s.o_c().dual());

    let singular_pairs: Vec<SingularPair> = members
        .iter()
        .filter(|r| s.degree(r) < rho)
        .map(|r| {
            let puncture = reflect(r);
            SingularPair {
                node: *r,
                node_degree: s.degree(r),
                puncture,
                puncture_degree: s.degree(&puncture),
            }
        })
        .collect();
    let boundary_touches: Vec<LineBundle> = members
        .iter()
        .filter(|r| s.degree(r) == rho)
        .copied()
        .collect();
    let punctures_u: Vec<LineBundle> = members.iter().map(reflect).collect();

    let kind = match s.kind() {
        SurfaceKind::HalfInoue => CenterKind::FiltrableA0,
        _ => CenterKind::NonFiltrable,
    };
    let f_invariant = match s.kind() {
        // Computed: twisting the filtrable center by F lands on the same
        // canonical point.
        SurfaceKind::HalfInoue => FiltrableBundle::ext_a(s, LineBundle::o())
            .and_then(|a| a.twist_by_f(s))
            .map(|t| t.canonical_form(s) == CanonicalPoint::PointA0)
            .unwrap_or(false),
        // The non-filtrable center has no coordinate; the flag records its
        // known invariance under the torsion twist.
        _ => true,
    };

    ModuliReport {
        surface: *s,
        rho,
        center: CenterDescriptor { kind, f_invariant },
        boundary: BoundaryDescriptor {
            degree: rho,
            touch_count: boundary_touches.len() as u64,
            smooth_boundary: boundary_touches.is_empty(),
        },
        counts: Counts {
            card_r_le_rho: members.len() as u64,
            card_u: punctures_u.len() as u64,
            card_boundary_touch: boundary_touches.len() as u64,
        },
        smooth: singular_pairs.is_empty(),
        singular_pairs,
        boundary_touches,
        punctures_u,
    }
}

/// Where a point of the simple moduli space is addressed: by its E-side or
/// A-side Pic0 parameter, or as the distinguished central point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamPoint {
    ESide(LineBundle),
    ASide(LineBundle),
    Center,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalStructure {
    /// A one-parameter family through a generic point.
    SmoothCurve,
    /// Two families crossing at the E-side point over a torsion parameter.
    NodalCrossing,
    /// A smooth point that cannot be separated from the nodal crossing at
    /// its torsion parameter.
    SmoothNonSeparatedPartner,
    /// The moduli space is smooth at the central point.
    CenterSmooth,
}

/// Local shape of the simple moduli space at a parameter point.
///
/// Points with no simple bundle behind them are refused: E-side parameters
/// inside Q(S), and A-side parameters outside R(S) (only the split extension
/// exists) or inside Q(S) (the extension is not simple).
pub fn local_structure(s: &SurfaceModel, p: &ParamPoint) -> Result<LocalStructure, Error> {
    match p {
        ParamPoint::Center => Ok(LocalStructure::CenterSmooth),
        ParamPoint::ESide(l) => {
            if !l.is_pic0() {
                return Err(Error::WrongChernClass(l.n()));
            }
            if s.in_q(l)? {
                return Err(Error::UndefinedPoint(*l));
            }
            if s.in_r(l)? {
                return Ok(LocalStructure::NodalCrossing);
            }
            // On an Enoki surface the A-side bundle over R reappears as the
            // E-side bundle over R^* ⊗ O(-C); those parameters are partner
            // points, not generic ones.
            if s.kind() == SurfaceKind::Enoki && s.in_r(&l.dual().tensor(&s.o_c().dual()))? {
                return Ok(LocalStructure::SmoothNonSeparatedPartner);
            }
            Ok(LocalStructure::SmoothCurve)
        }
        ParamPoint::ASide(r) => {
            if !r.is_pic0() {
                return Err(Error::WrongChernClass(r.n()));
            }
            if s.in_q(r)? || !s.in_r(r)? {
                return Err(Error::UndefinedPoint(*r));
            }
            Ok(LocalStructure::SmoothNonSeparatedPartner)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeWindow {
    #[serde(with = "rat_string")]
    pub lo: Rat,
    #[serde(with = "rat_string")]
    pub hi: Rat,
}

/// One maximal set of pairwise non-separated points of the simple moduli
/// space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonSeparatedGroup {
    /// The E-side and A-side extensions over `r`; on an Enoki surface the
    /// A-side member is itself the E-side bundle over `partner_param`.
    Pair {
        r: LineBundle,
        partner_param: LineBundle,
    },
    /// The half-Inoue group of three: the central A-side bundle together
    /// with the E-side extensions over O and F.
    HalfInoueTriple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleModuliReport {
    pub surface: SurfaceModel,
    pub window: DegreeWindow,
    pub nonseparated_groups: Vec<NonSeparatedGroup>,
    /// Q(S) members inside the window: parameters carrying no simple
    /// extension at all.
    #[serde(rename = "punctures_Q")]
    pub punctures_q: Vec<LineBundle>,
    /// Set on parabolic surfaces, where the simple moduli space is a
    /// complex plane minus the discrete puncture set.
    pub plane_minus_discrete: bool,
}

/// The simple moduli space restricted to parameters with degree inside
/// `[lo, hi]`. The window keeps the group and puncture lists finite; an
/// empty window (`lo > hi`) is allowed and produces empty lists.
pub fn build_simple_moduli(s: &SurfaceModel, lo: Rat, hi: Rat) -> SimpleModuliReport {
    let in_window = |d: Rat| lo <= d && d <= hi;
    let zero = Rat::from_integer(0);

    let (nonseparated_groups, punctures_q) = match s.kind() {
        SurfaceKind::HalfInoue => {
            // Every special parameter of a half Inoue surface has degree 0:
            // the triple sits over O and F, and Q(S) is the two square
            // roots of F.
            if in_window(zero) {
                let (q1, q2) = LineBundle::f()
                    .square_roots()
                    .expect("F has even canonical power");
                (vec![NonSeparatedGroup::HalfInoueTriple], vec![q1, q2])
            } else {
                (Vec::new(), Vec::new())
            }
        }
        SurfaceKind::Enoki => {
            let groups = s
                .enumerate_r_below(hi)
                .into_iter()
                .filter(|r| in_window(s.degree(r)))
                .map(|r| NonSeparatedGroup::Pair {
                    r,
                    partner_param: r.dual().tensor(&s.o_c().dual()),
                })
                .collect();
            (groups, Vec::new())
        }
        SurfaceKind::ParabolicInoue => {
            // No groups: every A-side extension over R(S) splits here. The
            // punctures are the square roots of O(kC) for k >= -1, two per
            // k, sitting at degree k vol_C / 2.
            let vol = s.vol_c();
            let lo_k = (lo * 2 / vol).ceil().to_integer().max(-1);
            let hi_k = (hi * 2 / vol).floor().to_integer();
            let mut q = Vec::new();
            for k in lo_k..=hi_k {
                let (r1, r2) = s
                    .o_c()
                    .pow(k)
                    .square_roots()
                    .expect("multiples of O(C) stay in Pic0");
                q.push(r1);
                q.push(r2);
            }
            (Vec::new(), q)
        }
    };

    SimpleModuliReport {
        surface: *s,
        window: DegreeWindow { lo, hi },
        nonseparated_groups,
        punctures_q,
        plane_minus_discrete: s.kind() == SurfaceKind::ParabolicInoue,
    }
}
