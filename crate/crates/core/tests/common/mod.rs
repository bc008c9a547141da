#![allow(dead_code)]

use std::sync::Arc;

use barhom::cochain::{differential, Cochain};
use barhom::group::{build_group, Elem, Group, GroupSpec};
use barhom::homotopies::SignConvention;
use barhom::module::{build_gmodule, pure_tensor_coords, tensor_modules, GModule, ModuleSpec};
use barhom::Result;

pub const GROUPS: [&str; 5] = ["cyclic:2", "cyclic:3", "cyclic:4", "cyclic:2xcyclic:2", "symmetric:3"];

pub fn group(s: &str) -> Arc<Group> {
    Arc::new(build_group(&s.parse::<GroupSpec>().unwrap()).unwrap())
}

pub fn module(g: &Arc<Group>, s: &str) -> Arc<GModule> {
    build_gmodule(&s.parse::<ModuleSpec>().unwrap(), g).unwrap()
}

/// Coefficient modules swept for a group: trivial-int, trivial-mod:4, the
/// sign module over cyclic:2, and the regular module.
pub fn action_modules(g: &Arc<Group>) -> Vec<Arc<GModule>> {
    let mut out = vec![module(g, "trivial-int"), module(g, "trivial-mod:4")];
    if g.label() == "cyclic:2" {
        out.push(module(g, "sign"));
    }
    if g.order() <= 6 {
        out.push(module(g, "regular"));
    }
    out
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `h_s` written out independently, with the sign of term `flip` reversed.
/// `flip = None` gives the unmutated homotopy.
pub fn action_homotopy_mutant(flip: Option<usize>) -> impl Fn(Elem, &Cochain) -> Result<Cochain> + Sync {
    move |s, a| {
        let g = Arc::clone(a.group());
        let n = a.degree() - 1;
        Ok(Cochain::from_fn(a.module(), n, |args, out| {
            for i in 0..=n {
                let mut t: Vec<Elem> = args[..i].to_vec();
                t.push(s);
                t.extend(args[i..].iter().map(|&x| g.conj(s, x)));
                let c = sign(i) * if flip == Some(i) { -1 } else { 1 };
                for (o, v) in out.iter_mut().zip(a.value(&t)) {
                    *o += c * v;
                }
            }
        }))
    }
}

/// `h` on cochain pairs written out independently, with the sign of term
/// `flip` reversed.
pub fn cup_homotopy_mutant(
    conv: SignConvention,
    flip: Option<usize>,
) -> impl Fn(&Cochain, &Cochain) -> Result<Cochain> + Sync {
    move |a, b| {
        let target = tensor_modules(a.module(), b.module())?;
        let (p, q) = (a.degree(), b.degree());
        if p == 0 || q == 0 {
            return Ok(Cochain::zero(&target, (p + q).saturating_sub(1)));
        }
        let g = Arc::clone(a.group());
        Ok(Cochain::from_fn(&target, p + q - 1, |s, out| {
            for i in 0..p {
                let mut aargs: Vec<Elem> = s[..i].to_vec();
                aargs.push(g.product(&s[i..i + q]));
                aargs.extend_from_slice(&s[i + q..]);
                let bv = b.module().act_coords(g.product(&s[..i]), b.value(&s[i..i + q]));
                let v = pure_tensor_coords(&target, a.value(&aargs), &bv);
                let mut c = sign(p * q + q) * sign(conv.inner_exponent(q, i));
                if flip == Some(i) {
                    c = -c;
                }
                for (o, x) in out.iter_mut().zip(&v) {
                    *o += c * x;
                }
            }
        }))
    }
}

/// `|H^n(G, M)|` for a finite module, by counting: `|Z^n| · |Z^{n-1}| / |C^{n-1}|`
/// with cocycles found by enumerating every cochain.
pub fn brute_force_order(module: &Arc<GModule>, n: usize) -> u128 {
    let count_cocycles = |deg: usize| -> (u128, u128) {
        let size = module.group().order().pow(deg as u32) * module.rank();
        let moduli: Vec<i64> = module.moduli().repeat(size / module.rank());
        assert!(moduli.iter().all(|&m| m > 0), "finite modules only");
        let total: u128 = moduli.iter().map(|&m| m as u128).product();
        let mut cocycles = 0u128;
        let mut coords = vec![0i64; size];
        for _ in 0..total {
            let c = Cochain::from_fn(module, deg, |args, out| {
                let order = module.group().order();
                let idx = args.iter().fold(0, |acc, &x| acc * order + x as usize);
                out.copy_from_slice(&coords[idx * module.rank()..(idx + 1) * module.rank()]);
            });
            if differential(&c).is_zero() {
                cocycles += 1;
            }
            for (x, &m) in coords.iter_mut().zip(&moduli) {
                *x += 1;
                if *x < m {
                    break;
                }
                *x = 0;
            }
        }
        (cocycles, total)
    };
    let (zn, _) = count_cocycles(n);
    if n == 0 {
        return zn;
    }
    let (zprev, cprev) = count_cocycles(n - 1);
    zn * zprev / cprev
}
