//! Exhaustive list-colouring check, used as an oracle for f-AT soundness.
//!
//! A list assignment is described up to renaming of colours by its colour
//! classes (the set of vertices whose list holds a given colour). If every
//! `G - v` is choosable, a colour held by a single vertex can always be
//! given to it last, so only assignments without singleton classes need
//! to be tried on `G` itself.

use std::collections::HashMap;

use super::ListSizeAssignment;
use crate::error::Result;
use crate::graph::Graph;
use crate::limits::Limits;

pub fn choosability_brute_force(g: &Graph, f: &ListSizeAssignment) -> Result<bool> {
    choosability_brute_force_with(g, f, &Limits::default())
}

pub fn choosability_brute_force_with(
    g: &Graph,
    f: &ListSizeAssignment,
    limits: &Limits,
) -> Result<bool> {
    Limits::check("choosability order", limits.max_choosability_order, g.order())?;
    Limits::check("choosability list size", limits.max_choosability_list, f.max())?;
    f.check_covers(g)?;
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut solver = Solver {
        adj,
        f: f.values().to_vec(),
        memo: HashMap::new(),
    };
    let all = if g.order() == 0 { 0 } else { (1u32 << g.order()) - 1 };
    Ok(solver.choosable(all))
}

struct Solver {
    adj: Vec<u32>,
    f: Vec<usize>,
    memo: HashMap<u32, bool>,
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| mask & (1 << i) != 0)
}

impl Solver {
    fn choosable(&mut self, mask: u32) -> bool {
        if let Some(&r) = self.memo.get(&mask) {
            return r;
        }
        let r = self.compute(mask);
        self.memo.insert(mask, r);
        r
    }

    fn compute(&mut self, mut mask: u32) -> bool {
        // a vertex with more colours than neighbours can be coloured last
        loop {
            if bits(mask).any(|v| self.f[v] == 0) {
                return false;
            }
            match bits(mask).find(|&v| self.f[v] > (self.adj[v] & mask).count_ones() as usize) {
                Some(v) => mask &= !(1 << v),
                None => break,
            }
        }
        if mask == 0 {
            return true;
        }
        let comp = self.component(mask);
        if comp != mask {
            return self.choosable(comp) && self.choosable(mask & !comp);
        }
        if bits(mask).any(|v| !self.choosable(mask & !(1 << v))) {
            return false;
        }
        let demand: Vec<usize> = (0..self.f.len())
            .map(|v| if mask & (1 << v) != 0 { self.f[v] } else { 0 })
            .collect();
        let mut classes = Vec::new();
        !self.find_bad(mask, demand, 0, u32::MAX, &mut classes)
    }

    fn component(&self, mask: u32) -> u32 {
        let start = mask.trailing_zeros();
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & mask & !seen;
            seen |= new;
            frontier |= new;
        }
        seen
    }

    /// Extends `classes` to a full singleton-free assignment; true when some
    /// completion admits no proper colouring.
    fn find_bad(
        &self,
        mask: u32,
        mut demand: Vec<usize>,
        pivot_floor: usize,
        bound: u32,
        classes: &mut Vec<u32>,
    ) -> bool {
        let pivot = match (pivot_floor..demand.len()).find(|&v| demand[v] > 0) {
            Some(p) => p,
            None => return !self.colourable(mask, classes),
        };
        let bound = if pivot == pivot_floor { bound } else { u32::MAX };
        // other members of the pivot's class: vertices above it with demand
        let open: u32 = (pivot + 1..demand.len())
            .filter(|&v| demand[v] > 0)
            .fold(0, |m, v| m | 1 << v);
        let p = 1u32 << pivot;
        let mut sub = open;
        loop {
            let class = sub | p;
            if sub != 0 && class <= bound {
                for v in bits(class) {
                    demand[v] -= 1;
                }
                classes.push(class);
                let bad = self.find_bad(mask, demand.clone(), pivot, class, classes);
                classes.pop();
                for v in bits(class) {
                    demand[v] += 1;
                }
                if bad {
                    return true;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & open;
        }
        false
    }

    fn colourable(&self, mask: u32, classes: &[u32]) -> bool {
        let verts: Vec<usize> = bits(mask).collect();
        let mut colour = vec![usize::MAX; self.f.len()];
        self.assign(&verts, 0, classes, &mut colour)
    }

    fn assign(&self, verts: &[usize], i: usize, classes: &[u32], colour: &mut [usize]) -> bool {
        let Some(&v) = verts.get(i) else {
            return true;
        };
        for (c, &class) in classes.iter().enumerate() {
            if class & (1 << v) == 0 {
                continue;
            }
            if bits(self.adj[v]).any(|w| colour[w] == c) {
                continue;
            }
            colour[v] = c;
            if self.assign(verts, i + 1, classes, colour) {
                colour[v] = usize::MAX;
                return true;
            }
            colour[v] = usize::MAX;
        }
        false
    }
}
