//! The kernel V = {I + pA} of GL₂(ℤ/p²ℤ) → GL₂(𝔽ₚ) as 𝔽ₚ⁴ and its subspaces.
//!
//! A vector is the matrix `A` mod p, indexed by its matrix code
//! `a + p(b + p(c + p d))`.

use std::collections::BTreeSet;

use crate::gl2::Mat;

pub type Vector = [u32; 4];

pub fn to_mat(p: u32, v: &Vector) -> Mat {
    Mat { m: p, a: v[0], b: v[1], c: v[2], d: v[3] }
}

pub fn from_mat(a: &Mat) -> Vector {
    [a.a, a.b, a.c, a.d]
}

pub fn index(p: u32, v: &Vector) -> u32 {
    v[0] + p * (v[1] + p * (v[2] + p * v[3]))
}

pub fn from_index(p: u32, i: u32) -> Vector {
    from_mat(&Mat::from_code(p, i))
}

pub fn add(p: u32, x: &Vector, y: &Vector) -> Vector {
    [(x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2]) % p, (x[3] + y[3]) % p]
}

pub fn scale(p: u32, x: &Vector, c: u32) -> Vector {
    [x[0] * c % p, x[1] * c % p, x[2] * c % p, x[3] * c % p]
}

pub fn neg(p: u32, x: &Vector) -> Vector {
    scale(p, x, p - 1)
}

/// `g A g⁻¹` for `g ∈ GL₂(𝔽ₚ)`.
pub fn conjugate(p: u32, g: &Mat, v: &Vector) -> Vector {
    from_mat(&g.mul(&to_mat(p, v)).mul(&g.inv()))
}

/// The kernel element `I + pA` of GL₂(ℤ/p²ℤ).
pub fn kernel_element(p: u32, v: &Vector) -> Mat {
    let m = p * p;
    Mat { m, a: (1 + p * v[0]) % m, b: p * v[1], c: p * v[2], d: (1 + p * v[3]) % m }
}

/// For `h ≡ I (mod p)`, the vector `A` with `h = I + pA`.
pub fn kernel_vector(p: u32, h: &Mat) -> Option<Vector> {
    let m = p * p;
    let one = |x: u32| (x + m - 1) % m;
    let e = [one(h.a), h.b, h.c, one(h.d)];
    e.iter().all(|x| x % p == 0).then(|| [e[0] / p, e[1] / p, e[2] / p, e[3] / p])
}

/// A subspace of 𝔽ₚ⁴ in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    pub p: u32,
    /// RREF rows; pivots strictly increasing.
    pub basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(p: u32) -> Self {
        Subspace { p, basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn size(&self) -> usize {
        (self.p as usize).pow(self.dim() as u32)
    }

    fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect()
    }

    /// Canonical representative of `v + K`: zero at every pivot column.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let p = self.p;
        let mut v = *v;
        for (row, piv) in self.basis.iter().zip(self.pivots()) {
            let c = v[piv];
            if c != 0 {
                v = add(p, &v, &scale(p, row, p - c));
            }
        }
        v
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v) == [0; 4]
    }

    /// All elements of the subspace.
    pub fn elements(&self) -> Vec<Vector> {
        let p = self.p;
        let mut out = vec![[0u32; 4]];
        for row in &self.basis {
            let mut next = Vec::with_capacity(out.len() * p as usize);
            for c in 0..p {
                let r = scale(p, row, c);
                next.extend(out.iter().map(|v| add(p, v, &r)));
            }
            out = next;
        }
        out
    }

    /// Representatives of the quotient 𝔽ₚ⁴ / K (zero at pivot columns).
    pub fn quotient_reps(&self) -> Vec<Vector> {
        let piv = self.pivots();
        (0..self.p.pow(4)).map(|i| from_index(self.p, i)).filter(|v| piv.iter().all(|&c| v[c] == 0)).collect()
    }

    /// Row-reduces an arbitrary spanning set.
    pub fn span(p: u32, vectors: &[Vector]) -> Self {
        let mut rows: Vec<Vector> = vectors.to_vec();
        let mut basis: Vec<Vector> = Vec::new();
        let mut col = 0;
        while col < 4 {
            if let Some(i) = rows.iter().position(|r| r[col] != 0) {
                let r = rows.swap_remove(i);
                let inv = crate::gl2::mat::inv_u32(r[col], p).unwrap();
                let r = scale(p, &r, inv);
                for other in rows.iter_mut().chain(basis.iter_mut()) {
                    let c = other[col];
                    if c != 0 {
                        *other = add(p, other, &scale(p, &r, p - c));
                    }
                }
                basis.push(r);
            }
            col += 1;
        }
        basis.sort_by_key(|r| r.iter().position(|&x| x != 0).unwrap());
        Subspace { p, basis }
    }

    pub fn is_stable_under(&self, g: &Mat) -> bool {
        self.basis.iter().all(|v| self.contains(&conjugate(self.p, g, v)))
    }

    pub fn conjugate(&self, g: &Mat) -> Self {
        let imgs: Vec<Vector> = self.basis.iter().map(|v| conjugate(self.p, g, v)).collect();
        Subspace::span(self.p, &imgs)
    }
}

/// Every subspace of 𝔽ₚ⁴, by dimension then pivot set then free entries.
pub fn all_subspaces(p: u32) -> Vec<Subspace> {
    let mut out = Vec::new();
    for k in 0..=4usize {
        for pivots in pivot_sets(k) {
            // Free positions: in row r, columns after the pivot that are not pivots.
            let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &pc)| {
                    let ps = pivot_set.clone();
                    ((pc + 1)..4).filter(move |c| !ps.contains(c)).map(move |c| (r, c))
                })
                .collect();
            let total = (p as usize).pow(free.len() as u32);
            for mut idx in 0..total {
                let mut basis = vec![[0u32; 4]; k];
                for (r, &pc) in pivots.iter().enumerate() {
                    basis[r][pc] = 1;
                }
                for &(r, c) in &free {
                    basis[r][c] = (idx % p as usize) as u32;
                    idx /= p as usize;
                }
                out.push(Subspace { p, basis });
            }
        }
    }
    out
}

fn pivot_sets(k: usize) -> Vec<Vec<usize>> {
    (0u32..16)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..4).filter(|i| s >> i & 1 == 1).collect())
        .collect::<BTreeSet<Vec<usize>>>()
        .into_iter()
        .collect()
}
