//! Isomorphism search for groups and skew braces.
//!
//! Both searches share one engine: find a bijection of carriers that is
//! simultaneously a homomorphism for every operation pair it is given —
//! one pair for groups, two (additive and multiplicative) for braces. The
//! search backtracks over images of a small generating set (generating
//! under *all* operations at once), prunes candidates by per-element
//! invariants, and derives the rest of the map by closing under products;
//! a found map is verified on all pairs before being returned.

use crate::brace::SkewBrace;
use crate::group::FiniteGroup;
use crate::SubSet;

/// An isomorphism `a -> b` of groups, as the image vector, or `None`.
pub fn group_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    iso_search(&[(a, b)])
}

/// An isomorphism of skew braces: one bijection that is additive and
/// multiplicative at once.
pub fn brace_isomorphism(a: &SkewBrace, b: &SkewBrace) -> Option<Vec<usize>> {
    iso_search(&[
        (a.add_group(), b.add_group()),
        (a.mul_group(), b.mul_group()),
    ])
}

/// Whether `phi` maps subset `s` of `a`'s carrier exactly onto subset `t`.
pub fn maps_subset_onto(phi: &[usize], s: &SubSet, t: &SubSet) -> bool {
    if s.len() != t.len() {
        return false;
    }
    s.elements().iter().all(|&x| t.contains(phi[x]))
}

fn iso_search(pairs: &[(&FiniteGroup, &FiniteGroup)]) -> Option<Vec<usize>> {
    let n = pairs[0].0.order();
    if pairs.iter().any(|(x, y)| x.order() != n || y.order() != n) {
        return None;
    }
    if n == 1 {
        return Some(vec![0]);
    }
    // Per-element invariant: the tuple of element orders in each source
    // structure, which any isomorphism must preserve. Require equal
    // multisets up front.
    let profile = |gs: &[&FiniteGroup], x: usize| -> Vec<usize> {
        gs.iter().map(|g| g.element_order(x)).collect()
    };
    let src: Vec<&FiniteGroup> = pairs.iter().map(|&(a, _)| a).collect();
    let dst: Vec<&FiniteGroup> = pairs.iter().map(|&(_, b)| b).collect();
    let src_prof: Vec<Vec<usize>> = (0..n).map(|x| profile(&src, x)).collect();
    let dst_prof: Vec<Vec<usize>> = (0..n).map(|x| profile(&dst, x)).collect();
    {
        let mut a = src_prof.clone();
        let mut b = dst_prof.clone();
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
    }
    // Generating set under all source operations at once.
    let closure = |gs: &[&FiniteGroup], seeds: &[usize]| -> Vec<bool> {
        let mut member = vec![false; n];
        let mut list: Vec<usize> = vec![0];
        member[0] = true;
        for &s in seeds {
            if !member[s] {
                member[s] = true;
                list.push(s);
            }
        }
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for g in gs {
                let ix = g.inv(x);
                if !member[ix] {
                    member[ix] = true;
                    list.push(ix);
                }
                let mut j = 0;
                while j < list.len() {
                    let y = list[j];
                    for p in [g.op(x, y), g.op(y, x)] {
                        if !member[p] {
                            member[p] = true;
                            list.push(p);
                        }
                    }
                    j += 1;
                }
            }
            i += 1;
        }
        member
    };
    let mut gens: Vec<usize> = Vec::new();
    let mut span = closure(&src, &[]);
    while let Some(g) = (0..n).find(|&g| !span[g]) {
        gens.push(g);
        span = closure(&src, &gens);
    }
    let mut images = vec![0usize; gens.len()];
    backtrack(&src, &dst, &src_prof, &dst_prof, &gens, 0, &mut images)
}

fn backtrack(
    src: &[&FiniteGroup],
    dst: &[&FiniteGroup],
    src_prof: &[Vec<usize>],
    dst_prof: &[Vec<usize>],
    gens: &[usize],
    depth: usize,
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let n = src[0].order();
    if depth == gens.len() {
        return extend(src, dst, gens, images);
    }
    for h in 0..n {
        if dst_prof[h] == src_prof[gens[depth]] {
            images[depth] = h;
            if let Some(phi) = backtrack(src, dst, src_prof, dst_prof, gens, depth + 1, images) {
                return Some(phi);
            }
        }
    }
    None
}

/// Closes `gens[i] -> images[i]` under products of every structure;
/// returns the total map if it is consistent, bijective, and verifies as a
/// homomorphism for every pair on the full carrier.
fn extend(
    src: &[&FiniteGroup],
    dst: &[&FiniteGroup],
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let n = src[0].order();
    let mut phi: Vec<Option<usize>> = vec![None; n];
    phi[0] = Some(0);
    let mut defined = vec![0usize];
    for (&g, &h) in gens.iter().zip(images) {
        match phi[g] {
            Some(prev) if prev != h => return None,
            Some(_) => {}
            None => {
                phi[g] = Some(h);
                defined.push(g);
            }
        }
    }
    let mut i = 0;
    while i < defined.len() {
        let x = defined[i];
        for (s, d) in src.iter().zip(dst) {
            let pairs = [(s.inv(x), d.inv(phi[x].unwrap()))];
            for (from, to) in pairs {
                match phi[from] {
                    Some(prev) if prev != to => return None,
                    Some(_) => {}
                    None => {
                        phi[from] = Some(to);
                        defined.push(from);
                    }
                }
            }
        }
        let mut j = 0;
        while j < defined.len() {
            let y = defined[j];
            for (s, d) in src.iter().zip(dst) {
                let (px, py) = (phi[x].unwrap(), phi[y].unwrap());
                for (from, to) in [
                    (s.op(x, y), d.op(px, py)),
                    (s.op(y, x), d.op(py, px)),
                ] {
                    match phi[from] {
                        Some(prev) if prev != to => return None,
                        Some(_) => {}
                        None => {
                            phi[from] = Some(to);
                            defined.push(from);
                        }
                    }
                }
            }
            j += 1;
        }
        i += 1;
    }
    let phi: Vec<usize> = phi.into_iter().collect::<Option<Vec<_>>>()?;
    let mut seen = vec![false; n];
    for &v in &phi {
        if seen[v] {
            return None;
        }
        seen[v] = true;
    }
    for (s, d) in src.iter().zip(dst) {
        for x in 0..n {
            for y in 0..n {
                if phi[s.op(x, y)] != d.op(phi[x], phi[y]) {
                    return None;
                }
            }
        }
    }
    Some(phi)
}
