//! Acceptance gate for the moduli calculator.
//!
//! One test per acceptance criterion, numbered 01..09. Each test prints a
//! single `acceptance NN (<name>): PASS` line on success, so a full run of
//! `cargo test --test acceptance -- --nocapture` shows one line per criterion.
//!
//! Expected values for the Enoki counting criteria were frozen from the
//! brute-force enumeration in `oracle` below, which was written before the
//! library and must stay independent of it: it walks the two torsion families
//! by repeated addition and reduces angles mod 1 with its own helper, instead
//! of calling any closed-form library path.

use std::process::Command;

use vii_moduli::bundles::{CanonicalPoint, FiltrableBundle};
use vii_moduli::cohomology::{euler_char, zlr_solutions};
use vii_moduli::moduli::{build_polystable_moduli, build_simple_moduli, CenterKind, ModuliReport};
use vii_moduli::picard::LineBundle;
use vii_moduli::rat::{rat, Rat};
use vii_moduli::render::{render_svg, RenderSpec};
use vii_moduli::surface::{SurfaceKind, SurfaceModel};

fn pass(n: u32, name: &str) {
    println!("acceptance {n:02} ({name}): PASS");
}

/// Brute-force reference enumeration, independent of the library internals.
mod oracle {
    use vii_moduli::rat::{rat, Rat};

    pub fn mod1(x: Rat) -> Rat {
        x - x.floor()
    }

    /// All square roots of the bundles `O(rC)`, `r >= 0`, with degree at most
    /// `bound`, as raw `(logmod, arg)` pairs sorted by `(logmod, arg)`.
    ///
    /// Walks each family by repeated addition: the integer family starts at
    /// `(0, 0)` and the half family at `(vol/2, theta/2)`, both stepping by
    /// `(vol, theta)`, and each step contributes the two torsion twists
    /// `b in {0, 1/2}`.
    pub fn r_members(vol: Rat, theta: Rat, bound: Rat) -> Vec<(Rat, Rat)> {
        let mut out = Vec::new();
        for start in [(rat(0, 1), rat(0, 1)), (vol / 2, theta / 2)] {
            let (mut lm, mut ang) = start;
            while lm <= bound {
                out.push((lm, mod1(ang)));
                out.push((lm, mod1(ang + rat(1, 2))));
                lm += vol;
                ang += theta;
            }
        }
        out.sort();
        out
    }

    /// Solution count of `z + n(n-1) = 0` over `|n| <= max_n`, `0 <= z <= cap`,
    /// by exhaustive search.
    pub fn zlr(max_n: i64, cap: i64) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for n in -max_n..=max_n {
            for z in 0..=cap {
                if z + n * (n - 1) == 0 {
                    out.push((n, z));
                }
            }
        }
        out.sort();
        out
    }
}

/// Closed-form count of the torsion families below `rho`, kept in test code so
/// the library path is always compared against an external formula.
fn closed_form_count(vol: Rat, rho: Rat) -> usize {
    if rho < rat(0, 1) {
        return 0;
    }
    let whole = (rho / vol).floor().to_integer();
    let half = (rho / vol + rat(1, 2)).floor().to_integer();
    (2 * (whole + 1).max(0) + 2 * half.max(0)) as usize
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_vii-moduli"))
}

fn run_ok(args: &[&str]) -> String {
    let out = bin().args(args).output().expect("binary runs");
    assert!(
        out.status.success(),
        "vii-moduli {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 stdout")
}

#[test]
fn acceptance_01_half_inoue_closed_disc() {
    let s = SurfaceModel::half_inoue(rat(2, 1)).unwrap();
    let report = build_polystable_moduli(&s);

    assert!(report.smooth, "half Inoue moduli must be smooth");
    assert!(report.singular_pairs.is_empty());
    assert!(report.boundary_touches.is_empty());
    assert!(report.punctures_u.is_empty(), "no punctures on half Inoue");
    assert!(report.boundary.smooth_boundary);
    assert_eq!(report.center.kind, CenterKind::FiltrableA0);
    assert!(report.center.f_invariant);
    assert_eq!(report.rho, rat(-1, 1));

    // The central bundle is the nontrivial extension of K by O, and it is
    // stable and simple.
    let a0 = FiltrableBundle::ext_a(&s, LineBundle::o()).unwrap();
    assert!(a0.is_stable(&s));
    assert!(a0.is_simple(&s));
    assert_eq!(a0.canonical_form(&s), CanonicalPoint::PointA0);

    let text = run_ok(&[
        "classify",
        "--surface",
        "half",
        "--vol-c",
        "2",
        "--bundle",
        "A:0,0,0",
    ]);
    assert_eq!(text.trim_end(), "stable simple; canonical=PointA0");

    pass(1, "half Inoue closed disc");
}

#[test]
fn acceptance_02_parabolic_center_and_split() {
    let s = SurfaceModel::parabolic(rat(1, 1), rat(1, 1), rat(0, 1)).unwrap();
    let report = build_polystable_moduli(&s);

    assert_eq!(report.center.kind, CenterKind::NonFiltrable);
    assert!(report.smooth);
    assert!(report.punctures_u.is_empty());
    assert!(report.boundary_touches.is_empty());

    // The trivial-parameter extension splits as O(-E) + O(-C); it is
    // polystable here (both summands have degree -1) but never simple.
    let a = FiltrableBundle::ext_a(&s, LineBundle::o()).unwrap();
    assert!(!a.is_simple(&s));
    assert!(!a.is_stable(&s));
    assert!(a.is_polystable(&s));
    let o_minus_e = LineBundle::new(1, rat(1, 1), rat(0, 1));
    let o_minus_c = LineBundle::new(0, rat(-1, 1), rat(0, 1));
    assert_eq!(s.degree(&o_minus_e), rat(-1, 1));
    assert_eq!(s.degree(&o_minus_c), rat(-1, 1));
    let form = a.canonical_form(&s);
    assert_eq!(form, CanonicalPoint::PointSplit(o_minus_e));
    assert_eq!(form.to_string(), "PointSplit(1,1,0|0,-1,0)");

    let simple = build_simple_moduli(&s, rat(-1, 1), rat(1, 1));
    assert!(simple.plane_minus_discrete);
    assert!(simple.nonseparated_groups.is_empty());
    // Punctures in the window: degrees -1/2, 0, 1/2, 1, two twists each.
    assert_eq!(simple.punctures_q.len(), 8);
    for q in &simple.punctures_q {
        assert!(s.in_q(q).unwrap());
    }

    pass(2, "parabolic center and split");
}

#[test]
fn acceptance_03_enoki_negative_degree() {
    let s = SurfaceModel::enoki(rat(1, 1), rat(-1, 1), rat(0, 1)).unwrap();
    let report = build_polystable_moduli(&s);

    assert!(report.smooth);
    assert!(report.punctures_u.is_empty());
    assert!(report.singular_pairs.is_empty());
    assert!(report.boundary_touches.is_empty());
    assert_eq!(report.counts.card_r_le_rho, 0);

    let l = LineBundle::new(0, rat(-1, 1), rat(0, 1));
    let e = FiltrableBundle::ext_e(&s, l).unwrap();
    assert!(e.is_stable(&s));
    assert!(e.is_simple(&s));

    pass(3, "Enoki negative degree smooth disc");
}

#[test]
fn acceptance_04_enoki_positive_degree_counts() {
    let vol = rat(1, 1);
    let theta = rat(0, 1);
    let s = SurfaceModel::enoki(vol, rat(5, 1), theta).unwrap();
    let rho = s.rho();
    assert_eq!(rho, rat(5, 2));

    // Frozen reference data, computed by the independent oracle.
    let reference = oracle::r_members(vol, theta, rho);
    assert_eq!(reference.len(), 12);
    let interior: Vec<_> = reference.iter().filter(|(lm, _)| *lm < rho).collect();
    let boundary: Vec<_> = reference.iter().filter(|(lm, _)| *lm == rho).collect();
    assert_eq!(interior.len(), 10);
    assert_eq!(boundary.len(), 2);

    let enumerated = s.enumerate_r_below(rho);
    let coords: Vec<(Rat, Rat)> = enumerated.iter().map(|r| (r.logmod(), r.arg())).collect();
    assert_eq!(
        coords, reference,
        "library enumeration must match the oracle"
    );
    for r in &enumerated {
        assert_eq!(r.n(), 0);
        assert!(s.in_r(r).unwrap());
    }

    let report = build_polystable_moduli(&s);
    assert_eq!(report.counts.card_r_le_rho, 12);
    assert_eq!(report.counts.card_u, 12);
    assert_eq!(report.counts.card_boundary_touch, 2);
    assert_eq!(report.singular_pairs.len(), 10);
    assert_eq!(report.punctures_u.len(), 12);
    assert!(!report.smooth);
    assert!(!report.boundary.smooth_boundary);

    // Every node is glued to the puncture at the reflected parameter; check
    // the reflection with oracle-side arithmetic.
    for pair in &report.singular_pairs {
        assert!(pair.node_degree < rho);
        assert_eq!(pair.puncture.logmod(), -pair.node.logmod() - vol);
        assert_eq!(pair.puncture.arg(), oracle::mod1(-pair.node.arg() - theta));
        assert_eq!(pair.puncture_degree, -pair.node_degree - vol);
    }

    pass(4, "Enoki positive degree counts");
}

#[test]
fn acceptance_05_count_growth_and_random_agreement() {
    use rand::{Rng, SeedableRng};

    // Linear growth of the family count in deg K.
    for (deg_k, want) in [(1i64, 4usize), (10, 22), (100, 202)] {
        let s = SurfaceModel::enoki(rat(1, 1), rat(deg_k, 1), rat(0, 1)).unwrap();
        let report = build_polystable_moduli(&s);
        assert_eq!(
            report.counts.card_r_le_rho, want as u64,
            "count at deg K = {deg_k}"
        );
        assert_eq!(report.counts.card_u, want as u64);
    }

    // Closed form, oracle, and library agree on 200 random surfaces.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x0acce5);
    for _ in 0..200 {
        let dv = rng.random_range(1..=8i64);
        let vol = rat(rng.random_range(1..=3 * dv), dv);
        let dk = rng.random_range(1..=6i64);
        let deg_k = rat(rng.random_range(-5 * dk..=50 * dk), dk);
        let theta = rat(rng.random_range(0..12i64), 12);

        let s = SurfaceModel::enoki(vol, deg_k, theta).unwrap();
        let rho = s.rho();
        let from_lib = s.enumerate_r_below(rho).len();
        let from_oracle = if rho < rat(0, 1) {
            0
        } else {
            oracle::r_members(vol, theta, rho).len()
        };
        let from_formula = closed_form_count(vol, rho);
        assert_eq!(from_lib, from_oracle, "vol={vol} degK={deg_k}");
        assert_eq!(from_lib, from_formula, "vol={vol} degK={deg_k}");
    }

    pass(5, "count growth and random agreement");
}

#[test]
fn acceptance_06_euler_characteristics_and_dims() {
    let chis: Vec<i64> = (-3..=3)
        .map(|n| euler_char(&LineBundle::k().pow(n)))
        .collect();
    assert_eq!(chis, vec![-6, -3, -1, 0, 0, -1, -3]);

    let rr = run_ok(&["rr", "--n", "3"]);
    let want = "chi(K^-3) = -6\nchi(K^-2) = -3\nchi(K^-1) = -1\nchi(K^0) = 0\n\
                chi(K^1) = 0\nchi(K^2) = -1\nchi(K^3) = -3\n";
    assert_eq!(rr, want);

    for s in [
        SurfaceModel::half_inoue(rat(2, 1)).unwrap(),
        SurfaceModel::enoki(rat(1, 1), rat(5, 1), rat(0, 1)).unwrap(),
        SurfaceModel::parabolic(rat(1, 1), rat(1, 1), rat(0, 1)).unwrap(),
    ] {
        let d = s.dims(&LineBundle::o()).unwrap();
        assert_eq!((d.h0, d.h1, d.h2, d.chi), (1, 1, 0, 0));
    }

    pass(6, "Euler characteristics and dims");
}

#[test]
fn acceptance_07_extension_dimensions_on_grids() {
    // Closed-form membership predicates, kept test-side.
    fn in_r_closed(kind: SurfaceKind, vol: Rat, theta: Rat, lm: Rat, arg: Rat) -> bool {
        match kind {
            SurfaceKind::HalfInoue => lm == rat(0, 1) && (arg == rat(0, 1) || arg == rat(1, 2)),
            _ => {
                let q = lm * 2 / vol;
                if !q.is_integer() || q < rat(0, 1) {
                    return false;
                }
                let base = oracle::mod1(q * theta / 2);
                arg == base || arg == oracle::mod1(base + rat(1, 2))
            }
        }
    }
    fn in_q_closed(kind: SurfaceKind, vol: Rat, theta: Rat, lm: Rat, arg: Rat) -> bool {
        match kind {
            SurfaceKind::HalfInoue => lm == rat(0, 1) && (arg == rat(1, 4) || arg == rat(3, 4)),
            SurfaceKind::Enoki => false,
            SurfaceKind::ParabolicInoue => {
                if in_r_closed(kind, vol, theta, lm, arg) {
                    return true;
                }
                let base = oracle::mod1(-theta / 2);
                lm == -vol / 2 && (arg == base || arg == oracle::mod1(base + rat(1, 2)))
            }
        }
    }

    let surfaces = [
        SurfaceModel::half_inoue(rat(2, 1)).unwrap(),
        SurfaceModel::enoki(rat(1, 1), rat(5, 1), rat(1, 3)).unwrap(),
        SurfaceModel::parabolic(rat(1, 1), rat(2, 1), rat(1, 4)).unwrap(),
    ];
    for s in &surfaces {
        let mut points = 0usize;
        for k in -28..=28i64 {
            for j in 0..8i64 {
                let l = LineBundle::new(0, rat(k, 4), rat(j, 8));
                let in_q = s.in_q(&l).unwrap();
                let in_r = s.in_r(&l).unwrap();
                assert_eq!(
                    in_q,
                    in_q_closed(s.kind(), s.vol_c(), s.theta_c(), l.logmod(), l.arg()),
                    "Q membership at {l} on {:?}",
                    s.kind()
                );
                assert_eq!(
                    in_r,
                    in_r_closed(s.kind(), s.vol_c(), s.theta_c(), l.logmod(), l.arg()),
                    "R membership at {l} on {:?}",
                    s.kind()
                );
                assert_eq!(s.ext_dim_e(&l).unwrap(), if in_q { 2 } else { 1 });
                assert_eq!(s.ext_dim_a(&l).unwrap(), if in_r { 1 } else { 0 });
                points += 1;
            }
        }
        assert!(points >= 200, "grid too small: {points}");
    }

    pass(7, "extension dimensions on grids");
}

#[test]
fn acceptance_08_property_suites() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5ee0);

    let random_surface = |rng: &mut rand_chacha::ChaCha8Rng| -> SurfaceModel {
        let vol = rat(rng.random_range(1..=6i64), rng.random_range(1..=4i64));
        match rng.random_range(0..3u8) {
            0 => SurfaceModel::half_inoue(vol).unwrap(),
            1 => {
                let deg_k = rat(rng.random_range(-8..=20i64), rng.random_range(1..=4i64));
                let theta = rat(rng.random_range(0..8i64), 8);
                SurfaceModel::enoki(vol, deg_k, theta).unwrap()
            }
            _ => {
                let vol_e = rat(rng.random_range(1..=6i64), rng.random_range(1..=4i64));
                let theta = rat(rng.random_range(0..8i64), 8);
                SurfaceModel::parabolic(vol, vol_e, theta).unwrap()
            }
        }
    };
    let random_bundle = |rng: &mut rand_chacha::ChaCha8Rng| -> LineBundle {
        LineBundle::new(
            rng.random_range(-4..=4i64),
            rat(rng.random_range(-60..=60i64), rng.random_range(1..=6i64)),
            rat(rng.random_range(0..24i64), 24),
        )
    };

    // Degree is a homomorphism and square roots behave.
    for _ in 0..256 {
        let s = random_surface(&mut rng);
        let (a, b) = (random_bundle(&mut rng), random_bundle(&mut rng));
        assert_eq!(s.degree(&a.tensor(&b)), s.degree(&a) + s.degree(&b));
        assert_eq!(s.degree(&a.dual()), -s.degree(&a));

        let even = a.tensor(&a);
        let (r1, r2) = even.square_roots().unwrap();
        assert_eq!(r1.tensor(&r1), even);
        assert_eq!(r2.tensor(&r2), even);
        assert_eq!(r1.tensor(&LineBundle::f()), r2);
        assert_ne!(r1, r2);
        let odd = LineBundle::new(2 * a.n() + 1, a.logmod(), a.arg());
        assert!(odd.square_roots().is_err());

        // Serre symmetry and the Euler identity.
        let d = s.dims(&a).unwrap();
        let dual_twist = a.dual().tensor(&LineBundle::k());
        assert_eq!(d.h2, s.dims(&dual_twist).unwrap().h0);
        assert_eq!(d.h0 - d.h1 + d.h2, d.chi);
    }

    // Stability implies simplicity across constructible bundles.
    for _ in 0..256 {
        let s = random_surface(&mut rng);
        let l = LineBundle::new(
            0,
            rat(rng.random_range(-40..=40i64), rng.random_range(1..=4i64)),
            rat(rng.random_range(0..24i64), 24),
        );
        if let Ok(e) = FiltrableBundle::ext_e(&s, l) {
            if e.is_stable(&s) {
                assert!(e.is_simple(&s), "stable non-simple E at {l}");
            }
        }
        if let Ok(a) = FiltrableBundle::ext_a(&s, l) {
            if a.is_stable(&s) {
                assert!(a.is_simple(&s), "stable non-simple A at {l}");
            }
        }
        let split = FiltrableBundle::split(l, l.dual().tensor(&LineBundle::k())).unwrap();
        assert!(!split.is_stable(&s));
        assert!(!split.is_simple(&s));
    }

    // On Enoki surfaces the two extensions over a torsion parameter are never
    // both stable, and F-twisting permutes every report stratum.
    let mut checked = 0usize;
    while checked < 200 {
        let vol = rat(rng.random_range(1..=4i64), rng.random_range(1..=2i64));
        let deg_k = rat(rng.random_range(0..=30i64), rng.random_range(1..=2i64));
        let theta = rat(rng.random_range(0..8i64), 8);
        let s = SurfaceModel::enoki(vol, deg_k, theta).unwrap();
        for r in s.enumerate_r_below(s.rho() + rat(1, 1)) {
            let e = FiltrableBundle::ext_e(&s, r).unwrap();
            let a = FiltrableBundle::ext_a(&s, r).unwrap();
            assert!(
                !(e.is_stable(&s) && a.is_stable(&s)),
                "both extensions stable at {r}"
            );
            checked += 1;
        }

        let report = build_polystable_moduli(&s);
        let f = LineBundle::f();
        for (set, name) in [
            (
                &report
                    .singular_pairs
                    .iter()
                    .map(|p| p.node)
                    .collect::<Vec<_>>(),
                "nodes",
            ),
            (&report.boundary_touches, "touches"),
            (&report.punctures_u, "punctures"),
        ] {
            for member in set.iter() {
                assert!(
                    set.contains(&member.tensor(&f)),
                    "{name} not closed under the torsion twist"
                );
            }
        }
    }

    // The half-Inoue center is fixed by the torsion twist.
    let half = SurfaceModel::half_inoue(rat(1, 1)).unwrap();
    let a0 = FiltrableBundle::ext_a(&half, LineBundle::o()).unwrap();
    let twisted = a0.twist_by_f(&half).unwrap();
    assert_eq!(twisted.canonical_form(&half), CanonicalPoint::PointA0);

    // Vanishing locus of the second Chern class, against exhaustive search.
    assert_eq!(zlr_solutions(100), vec![(0, 0), (1, 0)]);
    assert_eq!(zlr_solutions(100), oracle::zlr(100, 101 * 100));

    // Q never meets the open sub-rho disc.
    for _ in 0..256 {
        let s = random_surface(&mut rng);
        let below = s.rho() - rat(rng.random_range(1..=50i64), rng.random_range(1..=4i64));
        let l = LineBundle::new(0, below, rat(rng.random_range(0..24i64), 24));
        assert!(s.degree(&l) < s.rho());
        assert!(!s.in_q(&l).unwrap(), "Q member below rho at {l}");
    }

    pass(8, "property suites");
}

#[test]
fn acceptance_09_cli_determinism_and_round_trips() {
    let examples: Vec<Vec<&str>> = vec![
        vec![
            "report",
            "--surface",
            "enoki",
            "--vol-c",
            "1",
            "--deg-k",
            "5",
            "--format",
            "json",
        ],
        vec![
            "report",
            "--surface",
            "enoki",
            "--vol-c",
            "1",
            "--deg-k",
            "5",
            "--format",
            "svg",
        ],
        vec!["report", "--surface", "half", "--vol-c", "2"],
        vec![
            "report",
            "--surface",
            "parabolic",
            "--vol-c",
            "1",
            "--vol-e",
            "1",
            "--format",
            "json",
        ],
        vec![
            "simple-report",
            "--surface",
            "parabolic",
            "--vol-c",
            "1",
            "--vol-e",
            "1",
            "--lo",
            "-1",
            "--hi",
            "1",
            "--format",
            "json",
        ],
        vec![
            "simple-report",
            "--surface",
            "half",
            "--vol-c",
            "2",
            "--lo",
            "-1",
            "--hi",
            "1",
        ],
        vec![
            "classify",
            "--surface",
            "enoki",
            "--vol-c",
            "1",
            "--deg-k",
            "5",
            "--bundle",
            "E:0,-1,0",
        ],
        vec!["rr", "--n", "3"],
        vec![
            "enumerate-r",
            "--surface",
            "enoki",
            "--vol-c",
            "1",
            "--deg-k",
            "5",
            "--max-degree",
            "5/2",
        ],
        vec![
            "render",
            "--surface",
            "enoki",
            "--vol-c",
            "1",
            "--deg-k",
            "5",
        ],
    ];
    for args in &examples {
        let first = run_ok(args);
        let second = run_ok(args);
        assert_eq!(first, second, "non-deterministic output for {args:?}");
        assert!(!first.is_empty());
    }

    // JSON round-trip is the identity on the report.
    let s = SurfaceModel::enoki(rat(1, 1), rat(5, 1), rat(0, 1)).unwrap();
    let report = build_polystable_moduli(&s);
    let json = run_ok(&[
        "report",
        "--surface",
        "enoki",
        "--vol-c",
        "1",
        "--deg-k",
        "5",
        "--format",
        "json",
    ]);
    let parsed: ModuliReport = serde_json::from_str(&json).expect("report parses back");
    assert_eq!(parsed, report);
    assert_eq!(
        serde_json::to_string_pretty(&parsed).unwrap(),
        json.trim_end()
    );

    // SVG element counts match the report counts exactly.
    let svg = render_svg(&report, &RenderSpec::default());
    let count = |class: &str| svg.matches(&format!("class=\"{class}\"")).count();
    assert_eq!(count("chord"), report.singular_pairs.len());
    assert_eq!(count("node"), report.singular_pairs.len());
    assert_eq!(count("puncture"), report.punctures_u.len());
    assert_eq!(count("touch"), report.boundary_touches.len());
    assert_eq!(count("boundary"), 1);
    assert_eq!(count("center"), 1);
    let cli_svg = run_ok(&[
        "report",
        "--surface",
        "enoki",
        "--vol-c",
        "1",
        "--deg-k",
        "5",
        "--format",
        "svg",
    ]);
    assert_eq!(cli_svg.trim_end(), svg.trim_end());

    // The enumeration listing is the frozen 12-element family list.
    let listing = run_ok(&[
        "enumerate-r",
        "--surface",
        "enoki",
        "--vol-c",
        "1",
        "--deg-k",
        "5",
        "--max-degree",
        "5/2",
    ]);
    let want = "0,0,0\n0,0,1/2\n0,1/2,0\n0,1/2,1/2\n0,1,0\n0,1,1/2\n0,3/2,0\n0,3/2,1/2\n\
                0,2,0\n0,2,1/2\n0,5/2,0\n0,5/2,1/2\n";
    assert_eq!(listing, want);

    pass(9, "CLI determinism and round trips");
}
