//! `H^n(G, M)` from the inhomogeneous cochain complex, by Smith normal form.
//!
//! `C^n` is presented as `⊕ Z/μ_r` over the basis `(args, generator)`, with
//! `μ_r = 0` for a free coordinate. Cocycles are the lattice
//! `{x : d x ≡ 0 modulo the target relations}`; coboundaries together with
//! the source relations form a sublattice, and the quotient is read off from
//! one more Smith form.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::smith::{smith_normal_form, IntMatrix};
use crate::cochain::{differential, Cochain};
use crate::error::{Error, Result};
use crate::group::Elem;
use crate::module::GModule;

pub const DEFAULT_SIZE_LIMIT: u128 = 20_000;

/// `Z^r ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with `d_1 | … | d_k`, each `d_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(r: usize) -> Self {
        AbelianInvariants {
            free_rank: r,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(d: i64) -> Self {
        match d {
            0 => Self::free(1),
            1 => Self::trivial(),
            d => AbelianInvariants {
                free_rank: 0,
                torsion: vec![d.abs()],
            },
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<u128> {
        (self.free_rank == 0).then(|| self.torsion.iter().map(|&d| d as u128).product())
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

fn basis_size(module: &GModule, n: usize) -> u128 {
    (module.group().order() as u128).pow(n as u32) * module.rank() as u128
}

fn guard(module: &GModule, n: usize, limit: u128) -> Result<()> {
    let size = basis_size(module, n + 1);
    if size > limit {
        return Err(Error::SizeGuard { basis: size, limit });
    }
    Ok(())
}

/// Matrix of `d : C^n → C^{n+1}`: column `c` is `d` of the `c`-th basis
/// cochain, in the flat order of [`Cochain::values`]. The coefficient
/// relations are not part of the matrix; see [`cochain_moduli`].
pub fn differential_matrix(module: &Arc<GModule>, n: usize, limit: u128) -> Result<IntMatrix> {
    guard(module, n, limit)?;
    let rows = basis_size(module, n + 1) as usize;
    let columns: Vec<Vec<i64>> = Cochain::basis_all(module, n)
        .iter()
        .map(|(_, _, b)| differential(b).values().to_vec())
        .collect();
    Ok(IntMatrix::from_columns(rows, &columns))
}

/// Relation moduli of the coordinates of `C^n`.
pub fn cochain_moduli(module: &GModule, n: usize) -> Vec<i64> {
    let copies = module.group().order().pow(n as u32);
    module.moduli().repeat(copies)
}

fn relation_columns(moduli: &[i64]) -> IntMatrix {
    let cols: Vec<Vec<i64>> = moduli
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(i, &m)| {
            let mut c = vec![0; moduli.len()];
            c[i] = m;
            c
        })
        .collect();
    IntMatrix::from_columns(moduli.len(), &cols)
}

/// `ker(outgoing) / im(incoming)` for `A --incoming--> B --outgoing--> C` where
/// `B = ⊕ Z/mid_moduli` and `C = ⊕ Z/target_moduli`.
pub fn subquotient(
    incoming: &IntMatrix,
    outgoing: &IntMatrix,
    mid_moduli: &[i64],
    target_moduli: &[i64],
) -> Result<AbelianInvariants> {
    let n = mid_moduli.len();
    assert_eq!(incoming.rows(), n);
    assert_eq!(outgoing.cols(), n);
    assert_eq!(outgoing.rows(), target_moduli.len());

    // Cocycle lattice: kernel of [outgoing | relations], projected to B.
    let aug = outgoing.hcat(&relation_columns(target_moduli));
    let s = smith_normal_form(&aug, true)?;
    let rank = s.rank();
    let v = s.v.expect("transforms requested");
    let kernel_cols: Vec<Vec<i64>> = (rank..aug.cols())
        .map(|c| (0..n).map(|r| v.get(r, c)).collect())
        .collect();
    let dim = kernel_cols.len();
    if dim == 0 {
        return Ok(AbelianInvariants::trivial());
    }
    let basis = IntMatrix::from_columns(n, &kernel_cols);

    // Coboundaries plus relations, in coordinates of the cocycle basis.
    let w = incoming.hcat(&relation_columns(mid_moduli));
    let sb = smith_normal_form(&basis, true)?;
    debug_assert_eq!(sb.rank(), dim);
    let (u, vb) = (sb.u.expect("transforms"), sb.v.expect("transforms"));
    let uw = u.mul(&w)?;
    let mut y = IntMatrix::zeros(dim, w.cols());
    for c in 0..w.cols() {
        for r in 0..uw.rows() {
            let z = uw.get(r, c);
            if r < dim {
                let d = sb.diagonal[r];
                if z % d != 0 {
                    return Err(Error::field("subquotient", "image is not contained in the kernel"));
                }
                y.set(r, c, z / d);
            } else if z != 0 {
                return Err(Error::field("subquotient", "image is not contained in the kernel"));
            }
        }
    }
    let coords = vb.mul(&y)?;
    let q = smith_normal_form(&coords, false)?;
    Ok(AbelianInvariants {
        free_rank: dim - q.rank(),
        torsion: q.diagonal.into_iter().filter(|&d| d > 1).collect(),
    })
}

/// `H^n(G, M)` through the bar resolution.
pub fn cohomology_group(module: &Arc<GModule>, n: usize, limit: u128) -> Result<AbelianInvariants> {
    let outgoing = differential_matrix(module, n, limit)?;
    let mid = basis_size(module, n) as usize;
    let incoming = if n == 0 {
        IntMatrix::zeros(mid, 0)
    } else {
        differential_matrix(module, n - 1, limit)?
    };
    subquotient(
        &incoming,
        &outgoing,
        &cochain_moduli(module, n),
        &cochain_moduli(module, n + 1),
    )
}

fn action_matrix(module: &GModule, s: Elem) -> IntMatrix {
    let k = module.rank();
    let columns: Vec<Vec<i64>> = (0..k)
        .map(|j| {
            let mut e = vec![0; k];
            e[j] = 1;
            module.act_coords(s, &e)
        })
        .collect();
    IntMatrix::from_columns(k, &columns)
}

/// `H^n(G, M)` for cyclic `G = ⟨g⟩` from the periodic resolution: the complex
/// `M --(g-1)--> M --N--> M --(g-1)--> …` with `N = Σ g^k`. Used as an
/// independent check on [`cohomology_group`].
pub fn cyclic_cohomology(module: &Arc<GModule>, n: usize) -> Result<AbelianInvariants> {
    let g = module.group();
    let order = g.order();
    let gen = g
        .elements()
        .find(|&x| g.element_order(x) == order)
        .ok_or_else(|| Error::InvalidGroup(format!("{} is not cyclic", g.label())))?;
    let k = module.rank();
    let mut t = action_matrix(module, gen);
    for i in 0..k {
        t.set(i, i, t.get(i, i) - 1);
    }
    let mut norm = IntMatrix::zeros(k, k);
    let mut p = g.id();
    for _ in 0..order {
        let a = action_matrix(module, p);
        for r in 0..k {
            for c in 0..k {
                norm.set(r, c, norm.get(r, c) + a.get(r, c));
            }
        }
        p = g.mul(p, gen);
    }
    let map = |i: usize| if i % 2 == 0 { t.clone() } else { norm.clone() };
    let incoming = if n == 0 { IntMatrix::zeros(k, 0) } else { map(n - 1) };
    subquotient(&incoming, &map(n), module.moduli(), module.moduli())
}
