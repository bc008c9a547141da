//! Exhaustive identity sweeps with machine-readable reports.
//!
//! Every sweep enumerates basis elements (tuples, tuple pairs, basis cochains
//! or pairs of them), checks one identity per element and parameter choice,
//! and records a witness for each failure. Work fans out over the current
//! rayon pool; results are collected in enumeration order, so a report does
//! not depend on the pool width.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cochain::{
    bar_cup, bar_cup_by_pairing, cross, cup, cup_by_pairing, differential,
    differential_by_pairing, g_action, g_action_by_pairing, homotopy_action,
    homotopy_action_by_pairing, homotopy_cup, homotopy_cup_by_pairing, Cochain, Variant,
};
use crate::error::Result;
use crate::group::{Elem, Group};
use crate::homotopies::{lambda, lambda_alt, phi_pair, phi_s, phi_s_alt, SignConvention};
use crate::module::{tensor_modules, twist, GModule};
use crate::oracle::Oracle;
use crate::resolution::{
    alexander_whitney, augmentation, basis_tuples, boundary_augmented, boundary_unaugmented,
    left_act, left_act_tensor, normalize, normalize_tensor, psi, psi_pair, swap, tensor,
    tensor_basis, tensor_boundary_augmented, tensor_boundary_unaugmented, translate, BarTuple,
    Chain, TensorChain,
};

pub const REPORT_SCHEMA: &str = "barhom.report/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Which check failed: parameters and the basis element under test.
    pub descriptor: String,
    /// The input at which the two sides were compared.
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub group: String,
    pub module: String,
    pub degrees: String,
    pub attempted: u64,
    pub passed: u64,
    pub failures: Vec<Witness>,
    pub pass: bool,
}

impl VerificationReport {
    fn from_outcomes(
        identity: impl Into<String>,
        group: &str,
        module: &str,
        degrees: String,
        (attempted, failures): Tally,
    ) -> Self {
        VerificationReport {
            identity: identity.into(),
            group: group.to_string(),
            module: module.to_string(),
            degrees,
            attempted,
            passed: attempted - failures.len() as u64,
            pass: failures.is_empty(),
            failures,
        }
    }

    pub fn first_failure(&self) -> Option<&Witness> {
        self.failures.first()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}; {}; degrees {}]: {}/{} passed",
            if self.pass { "PASS" } else { "FAIL" },
            self.identity,
            self.group,
            self.module,
            self.degrees,
            self.passed,
            self.attempted
        )?;
        if let Some(w) = self.first_failure() {
            write!(
                f,
                "\n    first failure: {} at {}: lhs = {}, rhs = {}",
                w.descriptor, w.input, w.lhs, w.rhs
            )?;
        }
        Ok(())
    }
}

/// `{"schema": .., "pass": .., "reports": [..]}`.
pub fn envelope(reports: &[VerificationReport]) -> Value {
    json!({
        "schema": REPORT_SCHEMA,
        "pass": reports.iter().all(|r| r.pass),
        "reports": reports,
    })
}

fn expect_eq<T: PartialEq + fmt::Display>(
    descriptor: impl FnOnce() -> String,
    input: &dyn fmt::Display,
    lhs: &T,
    rhs: &T,
) -> Option<Witness> {
    (lhs != rhs).then(|| Witness {
        descriptor: descriptor(),
        input: input.to_string(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

/// Checks run and the failures, in enumeration order.
type Tally = (u64, Vec<Witness>);

fn sweep<I, F>(items: I, f: F) -> Tally
where
    I: IntoParallelIterator,
    F: Fn(I::Item) -> Option<Witness> + Sync + Send,
{
    items
        .into_par_iter()
        .map(f)
        .fold(
            || (0u64, Vec::new()),
            |(n, mut v), w| {
                v.extend(w);
                (n + 1, v)
            },
        )
        .reduce(
            || (0, Vec::new()),
            |(a, mut v), (b, w)| {
                v.extend(w);
                (a + b, v)
            },
        )
}

fn range(lo: i64, hi: i64) -> String {
    format!("{lo}..={hi}")
}

/// Basis chains of degrees `lo..=hi`; degree `-1` is the unit.
fn chains(order: usize, lo: i64, hi: i64) -> Vec<Chain> {
    let mut out = Vec::new();
    for n in lo..=hi {
        if n < 0 {
            out.push(Chain::unit());
        } else {
            out.extend(basis_tuples(order, n as usize).map(Chain::basis));
        }
    }
    out
}

fn tensor_chains(order: usize, lo: i64, hi: i64) -> Vec<TensorChain> {
    let mut out = Vec::new();
    for n in lo..=hi {
        if n < 0 {
            out.push(TensorChain::unit());
        } else {
            out.extend(tensor_basis(order, n as usize).map(|(x, y)| TensorChain::basis(x, y)));
        }
    }
    out
}

/// Every `(parameter, item)` combination, parameter-major, without
/// materializing the product.
fn with_params<'a, P: Copy + Send + Sync, T: Sync>(
    params: &'a [P],
    items: &'a [T],
) -> impl IndexedParallelIterator<Item = (P, &'a T)> + 'a {
    let n = items.len();
    (0..params.len() * n)
        .into_par_iter()
        .map(move |k| (params[k / n], &items[k % n]))
}

fn pairs(g: &Group) -> Vec<(Elem, Elem)> {
    g.elements()
        .flat_map(|s| g.elements().map(move |t| (s, t)))
        .collect()
}

/// The contracting homotopy of `F ⊗ F` assembled from homotopies `h` of the
/// first factor and `h'` of the second: `h(x) ⊗ y`, plus
/// `h_{-1}ε(x) ⊗ h'(y)` when `deg x = 0`, and `h_{-1} ⊗ h'_{-1}` on the unit.
pub fn product_homotopy(
    h: &dyn Fn(&Chain) -> Chain,
    h2: &dyn Fn(&Chain) -> Chain,
    z: &TensorChain,
) -> TensorChain {
    let mut out = TensorChain::zero(z.degree() + 1);
    for ((x, y), &c) in z.iter() {
        if x.is_empty() {
            out.add_scaled(&tensor(&h(&Chain::unit()), &h2(&Chain::unit())), c);
            continue;
        }
        let xc = Chain::basis(x.clone());
        let yc = Chain::basis(y.clone());
        out.add_scaled(&tensor(&h(&xc), &yc), c);
        if x.degree() == 0 {
            let e = augmentation(&xc).expect("degree 0");
            out.add_scaled(&tensor(&h(&e), &h2(&yc)), c);
        }
    }
    out
}

/// The structural identities of the bar resolution and of `F ⊗ F`.
pub fn verify_resolution_suite(g: &Group, max_degree: usize) -> Vec<VerificationReport> {
    let d = max_degree as i64;
    let order = g.order();
    let label = g.label();
    let elems: Vec<Elem> = g.elements().collect();
    let mut reports = Vec::new();
    let report = |name: &str, degrees: String, outcomes| {
        VerificationReport::from_outcomes(name, label, "-", degrees, outcomes)
    };
    let ps = pairs(g);
    let chains_0 = chains(order, 0, d);
    let chains_m1 = chains(order, -1, d);
    let tensors_m1 = tensor_chains(order, -1, d);

    let xs = chains(order, 2, d + 1);
    reports.push(report("boundary-squared", range(2, d + 1), sweep(xs, |x| {
        let dd = boundary_augmented(&boundary_augmented(&x).unwrap()).unwrap();
        expect_eq(String::new, &x, &dd, &Chain::zero(x.degree() - 2))
    })));
    let zs = tensor_chains(order, 2, d + 1);
    reports.push(report("tensor-boundary-squared", range(2, d + 1), sweep(zs, |z| {
        let dd = tensor_boundary_augmented(&tensor_boundary_augmented(&z).unwrap()).unwrap();
        expect_eq(String::new, &z, &dd, &TensorChain::zero(z.degree() - 2))
    })));
    let xs = chains(order, 1, 1);
    reports.push(report("augmentation-boundary", range(1, 1), sweep(xs, |x| {
        let e = augmentation(&boundary_augmented(&x).unwrap()).unwrap();
        expect_eq(String::new, &x, &e, &Chain::zero(-1))
    })));
    let zs = tensor_chains(order, 1, 1);
    reports.push(report("tensor-augmentation-boundary", range(1, 1), sweep(zs, |z| {
        let e = tensor_boundary_augmented(&tensor_boundary_augmented(&z).unwrap()).unwrap();
        expect_eq(String::new, &z, &e, &TensorChain::zero(-1))
    })));

    let items = with_params(&elems, &chains_0);
    reports.push(report("chain-map-translate", range(0, d), sweep(items, |(s, x)| {
        let lhs = boundary_augmented(&translate(g, s, &x)).unwrap();
        let rhs = translate(g, s, &boundary_augmented(&x).unwrap());
        expect_eq(|| format!("s={}", g.name(s)), &x, &lhs, &rhs)
    })));
    let zs = tensor_chains(order, 0, d);
    reports.push(report("chain-map-swap", range(0, d), sweep(zs, |z| {
        let lhs = tensor_boundary_augmented(&swap(&z)).unwrap();
        let rhs = swap(&tensor_boundary_augmented(&z).unwrap());
        expect_eq(String::new, &z, &lhs, &rhs)
    })));
    let xs = chains(order, 0, d);
    reports.push(report("chain-map-diagonal", range(0, d), sweep(xs, |x| {
        let lhs = tensor_boundary_augmented(&alexander_whitney(&x)).unwrap();
        let rhs = alexander_whitney(&boundary_augmented(&x).unwrap());
        expect_eq(String::new, &x, &lhs, &rhs)
    })));

    let items = with_params(&elems, &chains_m1);
    reports.push(report("contracting-psi", range(-1, d), sweep(items, |(t, x)| {
        let mut lhs = boundary_augmented(&psi(t, &x)).unwrap();
        if x.degree() >= 0 {
            lhs = lhs.plus(&psi(t, &boundary_augmented(&x).unwrap()));
        }
        expect_eq(|| format!("t={}", g.name(t)), &x, &lhs, &x)
    })));
    let items = with_params(&ps, &tensors_m1);
    reports.push(report("contracting-psi-pair", range(-1, d), sweep(items, |((s, t), z)| {
        let mut lhs = tensor_boundary_augmented(&psi_pair(s, t, &z)).unwrap();
        if z.degree() >= 0 {
            lhs = lhs.plus(&psi_pair(s, t, &tensor_boundary_augmented(&z).unwrap()));
        }
        expect_eq(|| format!("s={} t={}", g.name(s), g.name(t)), &z, &lhs, &z)
    })));

    let items = with_params(&elems, &chains_m1);
    reports.push(report("normalized-psi-squared", range(-1, d), sweep(items, |(t, x)| {
        let lhs = normalize(&psi(t, &psi(t, &x)));
        expect_eq(|| format!("t={}", g.name(t)), &x, &lhs, &Chain::zero(x.degree() + 2))
    })));
    let items = with_params(&ps, &tensors_m1);
    reports.push(report("normalized-psi-pair-squared", range(-1, d), sweep(items, |((s, t), z)| {
        let lhs = normalize_tensor(&psi_pair(s, t, &psi_pair(s, t, &z)));
        expect_eq(
            || format!("s={} t={}", g.name(s), g.name(t)),
            &z,
            &lhs,
            &TensorChain::zero(z.degree() + 2),
        )
    })));

    let items = with_params(&ps, &chains_m1);
    reports.push(report("equivariance-psi", range(-1, d), sweep(items, |((u, t), x)| {
        let lhs = psi(g.mul(u, t), &left_act(g, u, &x));
        let rhs = left_act(g, u, &psi(t, &x));
        expect_eq(|| format!("u={} t={}", g.name(u), g.name(t)), &x, &lhs, &rhs)
    })));
    let zs = tensor_chains(order, -1, d);
    let triples: Vec<(Elem, Elem, Elem)> = elems
        .iter()
        .flat_map(|&u| pairs(g).into_iter().map(move |(s, t)| (u, s, t)))
        .collect();
    let items = with_params(&triples, &zs);
    reports.push(report("equivariance-psi-pair", range(-1, d), sweep(items, |((u, s, t), z)| {
        let lhs = psi_pair(g.mul(u, s), g.mul(u, t), &left_act_tensor(g, u, &z));
        let rhs = left_act_tensor(g, u, &psi_pair(s, t, &z));
        expect_eq(
            || format!("u={} s={} t={}", g.name(u), g.name(s), g.name(t)),
            &z,
            &lhs,
            &rhs,
        )
    })));

    let items = with_params(&ps, &tensors_m1);
    reports.push(report("product-homotopy", range(-1, d), sweep(items, |((s, t), z)| {
        let lhs = product_homotopy(&|c| psi(s, c), &|c| psi(t, c), &z);
        let rhs = psi_pair(s, t, &z);
        expect_eq(|| format!("s={} t={}", g.name(s), g.name(t)), &z, &lhs, &rhs)
    })));
    reports
}

/// `τΔ - Δ = ∂λ + λ∂` (or with `λ'`) on basis tuples of degree `0..=max_degree`.
pub fn verify_diagonal(
    g: &Group,
    max_degree: usize,
    variant: Variant,
    conv: SignConvention,
) -> VerificationReport {
    let xs = chains(g.order(), 0, max_degree as i64);
    let outcomes = sweep(xs, |x| {
        let l = |c: &Chain| match variant {
            Variant::Main => lambda(c, conv),
            Variant::Alt => lambda_alt(c, conv),
        };
        let ax = alexander_whitney(&x);
        let lhs = swap(&ax).minus(&ax);
        let rhs = tensor_boundary_unaugmented(&l(&x)).plus(&l(&boundary_unaugmented(&x)));
        expect_eq(|| format!("degree {}", x.degree()), &x, &lhs, &rhs)
    });
    VerificationReport::from_outcomes(
        format!("diagonal-homotopy/{}/{}", variant.name(), conv.name()),
        g.label(),
        "-",
        range(0, max_degree as i64),
        outcomes,
    )
}

/// The closed-form homotopies: `φ_s`, `φ'_s`, `φ`, `λ`, `λ'`, and `λ ≡ φΔ`
/// modulo degenerate terms.
pub fn verify_homotopies(g: &Group, max_degree: usize, conv: SignConvention) -> Vec<VerificationReport> {
    let d = max_degree as i64;
    let order = g.order();
    let elems: Vec<Elem> = g.elements().collect();
    let mut reports = Vec::new();
    let chains_0 = chains(order, 0, d);
    for variant in [Variant::Main, Variant::Alt] {
        let items = with_params(&elems, &chains_0);
        let outcomes = sweep(items, |(s, x)| {
            let h = |c: &Chain| match variant {
                Variant::Main => phi_s(g, s, c),
                Variant::Alt => phi_s_alt(g, s, c),
            };
            let lhs = translate(g, s, &x).minus(&x);
            let rhs = boundary_unaugmented(&h(&x)).plus(&h(&boundary_unaugmented(&x)));
            expect_eq(|| format!("s={}", g.name(s)), &x, &lhs, &rhs)
        });
        reports.push(VerificationReport::from_outcomes(
            format!("action-chain-homotopy/{}", variant.name()),
            g.label(),
            "-",
            range(0, d),
            outcomes,
        ));
    }
    let zs = tensor_chains(order, 0, d);
    let outcomes = sweep(zs, |z| {
        let lhs = swap(&z).minus(&z);
        let rhs = tensor_boundary_unaugmented(&phi_pair(&z))
            .plus(&phi_pair(&tensor_boundary_unaugmented(&z)));
        expect_eq(String::new, &z, &lhs, &rhs)
    });
    reports.push(VerificationReport::from_outcomes(
        "swap-chain-homotopy",
        g.label(),
        "-",
        range(0, d),
        outcomes,
    ));
    for variant in [Variant::Main, Variant::Alt] {
        reports.push(verify_diagonal(g, max_degree, variant, conv));
    }
    let xs = chains(order, 0, d);
    let outcomes = sweep(xs, |x| {
        let lhs = normalize_tensor(&phi_pair(&alexander_whitney(&x)).minus(&lambda(&x, conv)));
        expect_eq(String::new, &x, &lhs, &TensorChain::zero(x.degree() + 1))
    });
    reports.push(VerificationReport::from_outcomes(
        format!("diagonal-as-swap-homotopy/{}", conv.name()),
        g.label(),
        "-",
        range(0, d),
        outcomes,
    ));
    reports
}

/// Inductive lifts against the closed forms, on the normalized resolution
/// (exact equality) and on the unnormalized one (equal modulo degenerate
/// terms).
pub fn verify_oracle(g: &Group, max_degree: usize) -> Vec<VerificationReport> {
    let d = max_degree as i64;
    let order = g.order();
    let elems: Vec<Elem> = g.elements().collect();
    let mut reports = Vec::new();
    for normalized in [true, false] {
        let mode = if normalized { "normalized" } else { "unnormalized" };
        let oracle = Oracle::new(g, normalized);
        let tuples = basis_tuples_upto(order, d);
        let items = with_params(&elems, &tuples);
        let outcomes = sweep(items, |(s, x)| {
            let lifted = oracle.phi_s(s, &x);
            let closed = phi_s(g, s, &Chain::basis(x.clone()));
            let (lhs, rhs) = if normalized {
                ((*lifted).clone(), normalize(&closed))
            } else {
                (normalize(&lifted.minus(&closed)), Chain::zero(x.degree() + 1))
            };
            expect_eq(|| format!("s={}", g.name(s)), &x, &lhs, &rhs)
        });
        reports.push(VerificationReport::from_outcomes(
            format!("oracle-action/{mode}"),
            g.label(),
            "-",
            range(0, d),
            outcomes,
        ));
        let items: Vec<(BarTuple, BarTuple)> =
            (0..=max_degree).flat_map(|n| tensor_basis(order, n)).collect();
        let outcomes = sweep(items, |(x, y)| {
            let lifted = oracle.phi_pair(&x, &y);
            let z = TensorChain::basis(x.clone(), y.clone());
            let closed = phi_pair(&z);
            let (lhs, rhs) = if normalized {
                ((*lifted).clone(), normalize_tensor(&closed))
            } else {
                (
                    normalize_tensor(&lifted.minus(&closed)),
                    TensorChain::zero(z.degree() + 1),
                )
            };
            expect_eq(String::new, &z, &lhs, &rhs)
        });
        reports.push(VerificationReport::from_outcomes(
            format!("oracle-swap/{mode}"),
            g.label(),
            "-",
            range(0, d),
            outcomes,
        ));
    }
    reports
}

fn basis_tuples_upto(order: usize, d: i64) -> Vec<BarTuple> {
    (0..=d).flat_map(|n| basis_tuples(order, n as usize)).collect()
}

/// Everything at chain level: resolution structure, closed-form homotopies
/// under `conv`, and the oracle comparison.
pub fn verify_resolution(g: &Group, max_degree: usize, conv: SignConvention) -> Vec<VerificationReport> {
    let mut reports = verify_resolution_suite(g, max_degree);
    reports.extend(verify_homotopies(g, max_degree, conv));
    reports.extend(verify_oracle(g, max_degree));
    reports
}

/// Which implementation of the cochain operations a sweep uses: the
/// inhomogeneous formulas, or pairing of homogeneous views against the chain
/// maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Path {
    #[default]
    Formula,
    Pairing,
}

impl Path {
    pub fn name(self) -> &'static str {
        match self {
            Path::Formula => "formula",
            Path::Pairing => "pairing",
        }
    }
}

fn fmt_args(g: &Group, args: &[Elem]) -> String {
    let names: Vec<&str> = args.iter().map(|&x| g.name(x)).collect();
    format!("({})", names.join(","))
}

fn basis_label(g: &Group, args: &[Elem], j: usize) -> String {
    format!("e{j}@{}", fmt_args(g, args))
}

fn compare_cochains(
    descriptor: impl FnOnce() -> String,
    lhs: &Result<Cochain>,
    rhs: &Result<Cochain>,
) -> Option<Witness> {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) if l.degree() == r.degree() && l.module() == r.module() => {
            let (args, lv, rv) = l.first_difference(r)?;
            Some(Witness {
                descriptor: descriptor(),
                input: fmt_args(l.group(), &args),
                lhs: format!("{lv:?}"),
                rhs: format!("{rv:?}"),
            })
        }
        (l, r) => {
            let show = |x: &Result<Cochain>| match x {
                Ok(c) => format!("degree-{} cochain over {}", c.degree(), c.module().label()),
                Err(e) => format!("error: {e}"),
            };
            Some(Witness {
                descriptor: descriptor(),
                input: "-".into(),
                lhs: show(l),
                rhs: show(r),
            })
        }
    }
}

fn add(a: Result<Cochain>, b: Result<Cochain>) -> Result<Cochain> {
    a?.plus(&b?)
}

/// Cochain operations used by the identity sweeps, for one [`Path`].
#[derive(Clone, Copy)]
struct Ops {
    path: Path,
}

impl Ops {
    fn d(&self, a: &Cochain) -> Cochain {
        match self.path {
            Path::Formula => differential(a),
            Path::Pairing => differential_by_pairing(a),
        }
    }

    fn act(&self, s: Elem, a: &Cochain) -> Cochain {
        match self.path {
            Path::Formula => g_action(s, a),
            Path::Pairing => g_action_by_pairing(s, a),
        }
    }

    fn cup(&self, a: &Cochain, b: &Cochain) -> Result<Cochain> {
        match self.path {
            Path::Formula => cup(a, b),
            Path::Pairing => cup_by_pairing(a, b),
        }
    }

    fn bar_cup(&self, a: &Cochain, b: &Cochain) -> Result<Cochain> {
        match self.path {
            Path::Formula => bar_cup(a, b),
            Path::Pairing => bar_cup_by_pairing(a, b),
        }
    }
}

/// `s·a - a = h_s(da) + d(h_s a)` (only `h_s(da)` in degree 0) for every
/// `s` and every basis cochain of degree `0..=max_degree`.
pub fn verify_action_identity(
    module: &Arc<GModule>,
    max_degree: usize,
    variant: Variant,
    path: Path,
) -> VerificationReport {
    let h = move |s: Elem, a: &Cochain| match path {
        Path::Formula => homotopy_action(s, a, variant),
        Path::Pairing => homotopy_action_by_pairing(s, a, variant),
    };
    verify_action_identity_with(
        module,
        max_degree,
        &format!("{}/{}", variant.name(), path.name()),
        path,
        &h,
    )
}

/// [`verify_action_identity`] with a caller-supplied homotopy `h(s, a)`.
pub fn verify_action_identity_with(
    module: &Arc<GModule>,
    max_degree: usize,
    tag: &str,
    path: Path,
    h: &(dyn Fn(Elem, &Cochain) -> Result<Cochain> + Sync),
) -> VerificationReport {
    let g = Arc::clone(module.group());
    let ops = Ops { path };
    let basis: Vec<_> = (0..=max_degree)
        .flat_map(|n| Cochain::basis_all(module, n))
        .collect();
    let per_cochain: Vec<Vec<Option<Witness>>> = basis
        .into_par_iter()
        .map(|(args, j, a)| {
            let da = ops.d(&a);
            g.elements()
                .map(|s| {
                    let lhs = ops.act(s, &a).minus(&a);
                    let rhs = if a.degree() == 0 {
                        h(s, &da)
                    } else {
                        add(h(s, &da), h(s, &a).map(|x| ops.d(&x)))
                    };
                    compare_cochains(
                        || format!("s={} a={}", g.name(s), basis_label(&g, &args, j)),
                        &lhs,
                        &rhs,
                    )
                })
                .collect()
        })
        .collect();
    VerificationReport::from_outcomes(
        format!("action-homotopy/{tag}"),
        g.label(),
        module.label(),
        range(0, max_degree as i64),
        per_cochain.into_iter().flatten().fold((0, Vec::new()), |(n, mut v), w| {
            v.extend(w);
            (n + 1, v)
        }),
    )
}

/// `(-1)^{pq} t_*(b ∪ a) - a ∪ b = h(da ⊗ b) + (-1)^p h(a ⊗ db) + d(h(a ⊗ b))`
/// for basis pairs `a ∈ C^p(M)`, `b ∈ C^q(N)` with `p + q ≤ max_total`.
pub fn verify_cup_identity(
    m: &Arc<GModule>,
    n: &Arc<GModule>,
    max_total: usize,
    variant: Variant,
    conv: SignConvention,
    path: Path,
) -> VerificationReport {
    let h = move |a: &Cochain, b: &Cochain| match path {
        Path::Formula => homotopy_cup(a, b, variant, conv),
        Path::Pairing => homotopy_cup_by_pairing(a, b, variant, conv),
    };
    verify_cup_identity_with(
        m,
        n,
        max_total,
        &format!("{}/{}/{}", variant.name(), conv.name(), path.name()),
        path,
        &h,
    )
}

/// [`verify_cup_identity`] with a caller-supplied homotopy `h(a, b)`.
pub fn verify_cup_identity_with(
    m: &Arc<GModule>,
    n: &Arc<GModule>,
    max_total: usize,
    tag: &str,
    path: Path,
    h: &(dyn Fn(&Cochain, &Cochain) -> Result<Cochain> + Sync),
) -> VerificationReport {
    let g = Arc::clone(m.group());
    let ops = Ops { path };
    let target_label = tensor_modules(m, n)
        .map(|t| t.label().to_string())
        .unwrap_or_else(|e| e.to_string());
    let mut items = Vec::new();
    for total in 0..=max_total {
        for p in 0..=total {
            let left = Cochain::basis_all(m, p);
            let right = Cochain::basis_all(n, total - p);
            for l in &left {
                for r in &right {
                    items.push((l.clone(), r.clone()));
                }
            }
        }
    }
    let outcomes = sweep(items, |((aargs, aj, a), (bargs, bj, b))| {
        let p = a.degree();
        let lhs = ops
            .bar_cup(&a, &b)
            .and_then(|bc| bc.minus(&ops.cup(&a, &b)?));
        let sign = if p % 2 == 0 { 1 } else { -1 };
        let mut rhs = add(
            h(&ops.d(&a), &b),
            h(&a, &ops.d(&b)).map(|x| x.scaled(sign)),
        );
        if p + b.degree() > 0 {
            rhs = add(rhs, h(&a, &b).map(|x| ops.d(&x)));
        }
        compare_cochains(
            || {
                format!(
                    "p={} q={} a={} b={}",
                    p,
                    b.degree(),
                    basis_label(&g, &aargs, aj),
                    basis_label(&g, &bargs, bj)
                )
            },
            &lhs,
            &rhs,
        )
    });
    VerificationReport::from_outcomes(
        format!("cup-homotopy/{tag}"),
        g.label(),
        &target_label,
        range(0, max_total as i64),
        outcomes,
    )
}

/// Formula against pairing for every cochain operation with two
/// implementations.
pub fn verify_dual_paths(
    m: &Arc<GModule>,
    n: &Arc<GModule>,
    max_degree: usize,
    conv: SignConvention,
) -> Vec<VerificationReport> {
    let g = Arc::clone(m.group());
    let d = max_degree as i64;
    let mut reports = Vec::new();
    let report = |name: &str, module: &str, outcomes| {
        VerificationReport::from_outcomes(name, g.label(), module, range(0, d), outcomes)
    };

    let basis: Vec<_> = (0..=max_degree).flat_map(|k| Cochain::basis_all(m, k)).collect();
    let desc = |args: &[Elem], j: usize| basis_label(&g, args, j);
    reports.push(report("dual-path-differential", m.label(), sweep(basis.clone(), |(args, j, a)| {
        compare_cochains(|| desc(&args, j), &Ok(differential(&a)), &Ok(differential_by_pairing(&a)))
    })));
    let items: Vec<_> = basis
        .iter()
        .flat_map(|b| g.elements().map(move |s| (s, b.clone())))
        .collect();
    reports.push(report("dual-path-action", m.label(), sweep(items.clone(), |(s, (args, j, a))| {
        compare_cochains(
            || format!("s={} a={}", g.name(s), desc(&args, j)),
            &Ok(g_action(s, &a)),
            &Ok(g_action_by_pairing(s, &a)),
        )
    })));
    for variant in [Variant::Main, Variant::Alt] {
        let items: Vec<_> = items.iter().filter(|(_, (_, _, a))| a.degree() > 0).cloned().collect();
        reports.push(report(
            &format!("dual-path-action-homotopy/{}", variant.name()),
            m.label(),
            sweep(items, |(s, (args, j, a))| {
                compare_cochains(
                    || format!("s={} a={}", g.name(s), desc(&args, j)),
                    &homotopy_action(s, &a, variant),
                    &homotopy_action_by_pairing(s, &a, variant),
                )
            }),
        ));
    }

    let mut pair_items = Vec::new();
    for total in 0..=max_degree {
        for p in 0..=total {
            for l in Cochain::basis_all(m, p) {
                for r in Cochain::basis_all(n, total - p) {
                    pair_items.push((l.clone(), r));
                }
            }
        }
    }
    let tlabel = tensor_modules(m, n).map(|t| t.label().to_string()).unwrap_or_default();
    let pdesc = |(aa, aj, _): &(Vec<Elem>, usize, Cochain), (ba, bj, _): &(Vec<Elem>, usize, Cochain)| {
        format!("a={} b={}", desc(aa, *aj), desc(ba, *bj))
    };
    reports.push(report("dual-path-cup", &tlabel, sweep(pair_items.clone(), |(l, r)| {
        compare_cochains(|| pdesc(&l, &r), &cup(&l.2, &r.2), &cup_by_pairing(&l.2, &r.2))
    })));
    reports.push(report("dual-path-bar-cup", &tlabel, sweep(pair_items.clone(), |(l, r)| {
        compare_cochains(|| pdesc(&l, &r), &bar_cup(&l.2, &r.2), &bar_cup_by_pairing(&l.2, &r.2))
    })));
    for variant in [Variant::Main, Variant::Alt] {
        reports.push(report(
            &format!("dual-path-cup-homotopy/{}/{}", variant.name(), conv.name()),
            &tlabel,
            sweep(pair_items.clone(), |(l, r)| {
                compare_cochains(
                    || pdesc(&l, &r),
                    &homotopy_cup(&l.2, &r.2, variant, conv),
                    &homotopy_cup_by_pairing(&l.2, &r.2, variant, conv),
                )
            }),
        ));
    }

    reports
}

/// `t_* × T = τ^* ×`: `(-1)^{pq} t((b × a)(z)) = (a × b)(τz)` for basis pairs
/// `a ∈ C^p(M)`, `b ∈ C^q(N)` with `p + q ≤ max_total` and every tensor basis
/// chain `z` of degree `p + q`.
pub fn verify_cross_compatibility(
    m: &Arc<GModule>,
    n: &Arc<GModule>,
    max_total: usize,
) -> VerificationReport {
    let g = Arc::clone(m.group());
    let order = g.order();
    let tlabel = tensor_modules(m, n).map(|t| t.label().to_string()).unwrap_or_default();
    let left: Vec<_> = (0..=max_total).map(|p| Cochain::basis_all(m, p)).collect();
    let right: Vec<_> = (0..=max_total).map(|q| Cochain::basis_all(n, q)).collect();
    let mut tally: Tally = (0, Vec::new());
    for total in 0..=max_total {
        let zs: Vec<TensorChain> = tensor_basis(order, total)
            .map(|(x, y)| TensorChain::basis(x, y))
            .collect();
        let pairs: Vec<_> = (0..=total)
            .flat_map(|p| {
                let right = &right[total - p];
                left[p].iter().flat_map(move |l| right.iter().map(move |r| (l, r)))
            })
            .collect();
        let (count, failures) = sweep(with_params(&pairs, &zs), |((l, r), z)| {
            let ((aa, aj, a), (ba, bj, b)) = (l, r);
            let sign = if (a.degree() * b.degree()) % 2 == 0 { 1 } else { -1 };
            let lhs = cross(b, a, z)
                .and_then(|v| twist(&v))
                .and_then(|v| v.scale(sign))
                .map(|v| format!("{:?}", v.coords()));
            let rhs = cross(a, b, &swap(z)).map(|v| format!("{:?}", v.coords()));
            let show = |x: Result<String>| x.unwrap_or_else(|e| format!("error: {e}"));
            expect_eq(
                || format!("a={} b={}", basis_label(&g, aa, *aj), basis_label(&g, ba, *bj)),
                z,
                &show(lhs),
                &show(rhs),
            )
        });
        tally.0 += count;
        tally.1.extend(failures);
    }
    VerificationReport::from_outcomes(
        "cross-twist-compatibility",
        g.label(),
        &tlabel,
        range(0, max_total as i64),
        tally,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};
    use crate::module::{build_gmodule, ModuleSpec};

    fn group(s: &str) -> Arc<Group> {
        Arc::new(build_group(&s.parse::<GroupSpec>().unwrap()).unwrap())
    }

    fn module(g: &Arc<Group>, s: &str) -> Arc<GModule> {
        build_gmodule(&s.parse::<ModuleSpec>().unwrap(), g).unwrap()
    }

    fn assert_all_pass(reports: &[VerificationReport]) {
        for r in reports {
            assert!(r.pass, "{r}");
            assert!(r.attempted > 0, "{r}");
        }
    }

    #[test]
    fn resolution_cyclic_three() {
        let g = group("cyclic:3");
        assert_all_pass(&verify_resolution(&g, 3, SignConvention::Ascending));
    }

    #[test]
    fn resolution_symmetric_three() {
        let g = group("symmetric:3");
        assert_all_pass(&verify_resolution(&g, 2, SignConvention::Ascending));
    }

    #[test]
    fn action_identity_examples() {
        let g = group("cyclic:2");
        let m = module(&g, "trivial-int");
        let r = verify_action_identity(&m, 2, Variant::Main, Path::Formula);
        assert!(r.pass, "{r}");
        assert_eq!(r.attempted, 2 * (1 + 2 + 4));
        let r0 = verify_action_identity(&m, 0, Variant::Main, Path::Formula);
        assert!(r0.pass && r0.attempted == 2);
        // h_s with the sign of the i = 0 term flipped
        let flipped = |s: Elem, a: &Cochain| -> Result<Cochain> {
            let n = a.degree() - 1;
            Ok(Cochain::from_fn(a.module(), n, |args, out| {
                for i in 0..=n {
                    let mut t: Vec<Elem> = args[..i].to_vec();
                    t.push(s);
                    t.extend(args[i..].iter().map(|&x| g.conj(s, x)));
                    let sign = if i % 2 == 0 { 1 } else { -1 } * if i == 0 { -1 } else { 1 };
                    for (o, v) in out.iter_mut().zip(a.value(&t)) {
                        *o += sign * v;
                    }
                }
            }))
        };
        let bad = verify_action_identity_with(&m, 2, "flipped", Path::Formula, &flipped);
        assert!(!bad.pass);
        assert_eq!(bad.passed + bad.failures.len() as u64, bad.attempted);
    }

    #[test]
    fn cup_identity_examples() {
        let g = group("cyclic:2");
        let z = module(&g, "trivial-int");
        let r = verify_cup_identity(&z, &z, 3, Variant::Main, SignConvention::Ascending, Path::Formula);
        assert!(r.pass, "{r}");
        let bad = verify_cup_identity(&z, &z, 3, Variant::Main, SignConvention::Offset, Path::Formula);
        assert!(!bad.pass);
        assert!(bad.failures.iter().any(|w| w.descriptor.starts_with("p=1 q=1")), "{bad}");
        let r = verify_cup_identity(&z, &z, 3, Variant::Alt, SignConvention::Ascending, Path::Pairing);
        assert!(r.pass, "{r}");
    }

    #[test]
    fn dual_paths_sign_module() {
        let g = group("cyclic:2");
        let m = module(&g, "sign");
        let n = module(&g, "regular");
        assert_all_pass(&verify_dual_paths(&m, &n, 2, SignConvention::Ascending));
        assert_all_pass(&[verify_cross_compatibility(&m, &n, 3)]);
    }

    #[test]
    fn reports_are_independent_of_pool_width() {
        let g = group("symmetric:3");
        let m = module(&g, "sign");
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| {
                    let flipped = |s: Elem, a: &Cochain| {
                        homotopy_action(s, a, Variant::Alt).map(|c| c.scaled(2))
                    };
                    let r = verify_action_identity_with(&m, 2, "x", Path::Formula, &flipped);
                    serde_json::to_string(&envelope(&[r])).unwrap()
                })
        };
        assert_eq!(run(1), run(4));
    }
}
