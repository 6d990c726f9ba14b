//! Finite groups as validated Cayley tables, and group actions by
//! automorphisms. Everything is exhaustive: group laws are checked on all
//! triples, actions on all pairs, which is cheap at the orders used here.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::Result;

/// A finite group given by its multiplication table on element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Builds and fully validates a group from labels and a Cayley table.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::NotAGroup("table shape does not match order".into()));
        }
        for row in &table {
            for &e in row {
                if e >= n {
                    return Err(Error::NotAGroup("table entry out of range".into()));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("no inverse for element {x}")))?;
            inverse[x] = inv;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            labels,
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Closure of a set of elements under multiplication.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut stack: Vec<usize> = vec![self.identity];
        let mut frontier: Vec<usize> = gens.to_vec();
        while let Some(x) = frontier.pop() {
            if seen[x] {
                continue;
            }
            seen[x] = true;
            stack.push(x);
            for &y in stack.iter() {
                frontier.push(self.mul(x, y));
                frontier.push(self.mul(y, x));
            }
        }
        let mut out: Vec<usize> = (0..self.order()).filter(|&i| seen[i]).collect();
        out.sort_unstable();
        out
    }

    /// Subgroup on a closed index set; returns the subgroup together with
    /// the list mapping each subgroup index to its index in the big group.
    pub fn subgroup(&self, elements: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let pos = |x: usize| elems.binary_search(&x).ok();
        let labels = elems.iter().map(|&i| self.labels[i].clone()).collect();
        let mut table = vec![vec![0usize; elems.len()]; elems.len()];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                table[i][j] = pos(self.mul(a, b)).ok_or_else(|| {
                    Error::NotAGroup("element set is not closed under multiplication".into())
                })?;
            }
        }
        Ok((FiniteGroup::new(labels, table)?, elems))
    }

    /// The Sylow p-subgroup as an element list, when the elements of
    /// p-power order close up to a subgroup of the right size (always the
    /// case for abelian groups).
    pub fn sylow_subgroup(&self, p: u64) -> Option<Vec<usize>> {
        let mut p_part = 1usize;
        let mut n = self.order();
        while n % p as usize == 0 {
            p_part *= p as usize;
            n /= p as usize;
        }
        let gens: Vec<usize> = (0..self.order())
            .filter(|&x| {
                let o = self.element_order(x) as u64;
                let mut o = o;
                while o % p == 0 {
                    o /= p;
                }
                o == 1
            })
            .collect();
        let closed = self.closure(&gens);
        if closed.len() == p_part {
            Some(closed)
        } else {
            None
        }
    }
}

/// Direct product of cyclic groups Z_{o_1} x ... x Z_{o_k}; elements are
/// tuples in lexicographic order (first coordinate major) and generators
/// get letter names a, b, c, ...
pub fn product_of_cyclics(orders: &[u32]) -> FiniteGroup {
    assert!(!orders.is_empty(), "need at least one factor");
    let n: usize = orders.iter().map(|&o| o as usize).product();
    let letters = "abcdefgh";
    let label_of = |coords: &[u32]| -> String {
        let mut parts: Vec<String> = Vec::new();
        for (t, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let name = letters
                .chars()
                .nth(t)
                .map(|ch| ch.to_string())
                .unwrap_or_else(|| format!("g{t}"));
            if c == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{c}"));
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    };
    let mut labels = Vec::with_capacity(n);
    for i in 0..n {
        labels.push(label_of(&cyclic_coords(i, orders)));
    }
    let mut table = vec![vec![0usize; n]; n];
    for i in 0..n {
        let a = cyclic_coords(i, orders);
        for j in 0..n {
            let b = cyclic_coords(j, orders);
            let sum: Vec<u32> = a
                .iter()
                .zip(b.iter())
                .zip(orders.iter())
                .map(|((&x, &y), &o)| (x + y) % o)
                .collect();
            table[i][j] = cyclic_index(&sum, orders);
        }
    }
    FiniteGroup::new(labels, table).expect("cyclic product is a group")
}

/// Coordinates of an element index in a product of cyclics.
pub fn cyclic_coords(mut idx: usize, orders: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; orders.len()];
    for t in (0..orders.len()).rev() {
        out[t] = (idx % orders[t] as usize) as u32;
        idx /= orders[t] as usize;
    }
    out
}

/// Index of a coordinate tuple in a product of cyclics.
pub fn cyclic_index(coords: &[u32], orders: &[u32]) -> usize {
    let mut idx = 0usize;
    for (c, o) in coords.iter().zip(orders.iter()) {
        idx = idx * *o as usize + *c as usize;
    }
    idx
}

/// Indices of the standard generators of a product of cyclics.
pub fn cyclic_generators(orders: &[u32]) -> Vec<usize> {
    (0..orders.len())
        .map(|t| {
            let mut c = vec![0u32; orders.len()];
            c[t] = 1;
            cyclic_index(&c, orders)
        })
        .collect()
}

/// Permutation of a product of cyclics that swaps coordinates i and j.
pub fn coordinate_swap_perm(orders: &[u32], i: usize, j: usize) -> Vec<usize> {
    assert_eq!(orders[i], orders[j], "swapped factors must match");
    let n: usize = orders.iter().map(|&o| o as usize).product();
    (0..n)
        .map(|idx| {
            let mut c = cyclic_coords(idx, orders);
            c.swap(i, j);
            cyclic_index(&c, orders)
        })
        .collect()
}

/// Permutation of a product of cyclics that cyclically shifts the
/// coordinates by one place (coordinate t of the image is coordinate
/// t - 1 of the argument), an automorphism when all factors agree.
pub fn coordinate_cycle_perm(orders: &[u32]) -> Vec<usize> {
    let k = orders.len();
    assert!(orders.iter().all(|&o| o == orders[0]));
    let n: usize = orders.iter().map(|&o| o as usize).product();
    (0..n)
        .map(|idx| {
            let c = cyclic_coords(idx, orders);
            let mut d = vec![0u32; k];
            for t in 0..k {
                d[(t + 1) % k] = c[t];
            }
            cyclic_index(&d, orders)
        })
        .collect()
}

/// The inversion map l -> l^{-1}, an automorphism for abelian groups.
pub fn inversion_perm(group: &FiniteGroup) -> Vec<usize> {
    group.inverse.clone()
}

/// An action of a finite group `acting` on a finite group `target` by
/// automorphisms: one permutation of the target per acting element,
/// forming a homomorphism into Aut(target).
#[derive(Debug, Clone)]
pub struct GroupAction {
    pub acting: Arc<FiniteGroup>,
    pub target: Arc<FiniteGroup>,
    pub perms: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(
        acting: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        perms: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let ng = acting.order();
        let nl = target.order();
        if perms.len() != ng {
            return Err(Error::NotAnAction("one permutation per acting element".into()));
        }
        for (g, perm) in perms.iter().enumerate() {
            if perm.len() != nl {
                return Err(Error::NotAnAction(format!("permutation {g} has wrong length")));
            }
            let mut seen = vec![false; nl];
            for &img in perm {
                if img >= nl || seen[img] {
                    return Err(Error::NotAnAction(format!("map {g} is not a bijection")));
                }
                seen[img] = true;
            }
            for l in 0..nl {
                for m in 0..nl {
                    if perm[target.mul(l, m)] != target.mul(perm[l], perm[m]) {
                        return Err(Error::NotAnAction(format!(
                            "map {g} is not an automorphism at ({l}, {m})"
                        )));
                    }
                }
            }
        }
        for g in 0..ng {
            for h in 0..ng {
                let gh = acting.mul(g, h);
                for l in 0..nl {
                    if perms[g][perms[h][l]] != perms[gh][l] {
                        return Err(Error::NotAnAction(format!(
                            "assignment is not a homomorphism at ({g}, {h})"
                        )));
                    }
                }
            }
        }
        if perms[acting.identity].iter().enumerate().any(|(l, &i)| l != i) {
            return Err(Error::NotAnAction("identity must act trivially".into()));
        }
        Ok(GroupAction {
            acting,
            target,
            perms,
        })
    }

    pub fn trivial(acting: Arc<FiniteGroup>, target: Arc<FiniteGroup>) -> Self {
        let id: Vec<usize> = (0..target.order()).collect();
        GroupAction {
            perms: vec![id; acting.order()],
            acting,
            target,
        }
    }

    /// g . l
    pub fn apply(&self, g: usize, l: usize) -> usize {
        self.perms[g][l]
    }

    /// g^{-1} . l
    pub fn apply_inv(&self, g: usize, l: usize) -> usize {
        self.perms[self.acting.inv(g)][l]
    }
}

/// Action of the cyclic group Z_m generated by a single automorphism
/// whose order divides m.
pub fn cyclic_action(
    acting: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    generator_perm: Vec<usize>,
) -> Result<GroupAction> {
    let m = acting.order();
    let nl = target.order();
    let mut perms = Vec::with_capacity(m);
    let mut cur: Vec<usize> = (0..nl).collect();
    for _ in 0..m {
        perms.push(cur.clone());
        cur = (0..nl).map(|l| generator_perm[cur[l]]).collect();
    }
    GroupAction::new(acting, target, perms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_products() {
        let z2 = product_of_cyclics(&[2]);
        assert_eq!(z2.order(), 2);
        let klein = product_of_cyclics(&[2, 2]);
        assert_eq!(klein.order(), 4);
        for x in 0..4 {
            if x != klein.identity {
                assert_eq!(klein.element_order(x), 2);
            }
        }
        let l = product_of_cyclics(&[2, 2, 3, 3]);
        assert_eq!(l.order(), 36);
        assert!(l.is_abelian());
        assert_eq!(l.labels[0], "1");
    }

    #[test]
    fn bad_table_is_rejected() {
        // "multiplication" a*b = a has no identity
        let table = vec![vec![0, 0], vec![1, 1]];
        assert!(FiniteGroup::new(vec!["1".into(), "g".into()], table).is_err());
    }

    #[test]
    fn generators_and_coordinates_round_trip() {
        let orders = [2u32, 3, 3];
        for idx in 0..18usize {
            assert_eq!(cyclic_index(&cyclic_coords(idx, &orders), &orders), idx);
        }
        let gens = cyclic_generators(&orders);
        let g = product_of_cyclics(&orders);
        assert_eq!(g.element_order(gens[0]), 2);
        assert_eq!(g.element_order(gens[1]), 3);
    }

    #[test]
    fn swap_action_on_two_z3_factors() {
        let l = Arc::new(product_of_cyclics(&[2, 2, 3, 3]));
        let g = Arc::new(product_of_cyclics(&[2]));
        let swap = coordinate_swap_perm(&[2, 2, 3, 3], 2, 3);
        let action = cyclic_action(g.clone(), l.clone(), swap).unwrap();
        // h acts with order 2, identity acts trivially
        assert_eq!(action.perms[g.identity], (0..36).collect::<Vec<_>>());
        let h = 1 - g.identity;
        for x in 0..36 {
            assert_eq!(action.apply(h, action.apply(h, x)), x);
        }
    }

    #[test]
    fn inversion_is_an_automorphism_of_abelian_groups() {
        let z3 = Arc::new(product_of_cyclics(&[3]));
        let z2 = Arc::new(product_of_cyclics(&[2]));
        let act = cyclic_action(z2, z3.clone(), inversion_perm(&z3)).unwrap();
        assert_eq!(act.apply(1, 1), 2);
    }

    #[test]
    fn sylow_subgroups_of_abelian_groups() {
        let l = product_of_cyclics(&[2, 2, 3, 3]);
        let syl3 = l.sylow_subgroup(3).unwrap();
        assert_eq!(syl3.len(), 9);
        let (p, embed) = l.subgroup(&syl3).unwrap();
        assert_eq!(p.order(), 9);
        assert!(embed.iter().all(|&i| l.element_order(i) % 2 != 0 || i == l.identity));
        let syl2 = l.sylow_subgroup(2).unwrap();
        assert_eq!(syl2.len(), 4);
    }

    #[test]
    fn non_automorphism_is_rejected() {
        let z4 = Arc::new(product_of_cyclics(&[4]));
        let z2 = Arc::new(product_of_cyclics(&[2]));
        // the transposition (1 2) on Z_4 is not an automorphism
        let bad = vec![0usize, 2, 1, 3];
        assert!(cyclic_action(z2, z4, bad).is_err());
    }
}
