//! Finite groups presented as dense Cayley tables.
//!
//! Elements of a group of order `n` are the indices `0..n`, and index `0` is
//! always the identity: constructors relabel on ingest when the identity is
//! found elsewhere, so downstream code can rely on `0` unconditionally.
//! Construction validates everything (Latin square, identity, associativity),
//! which makes `FiniteGroup` a proof-carrying value: if you hold one, the
//! table is a group.

use rayon::prelude::*;
use std::collections::BTreeSet;
use thiserror::Error;

/// Largest table edge the crate will accept. Keeps entries inside `u16` with
/// plenty of headroom and bounds the O(n^3) validation scans.
pub const MAX_ORDER: usize = 2048;

/// Orders above this are rejected by [`FiniteGroup::automorphism_group`];
/// the image-backtracking search is only tuned for small tables.
pub const MAX_AUT_ORDER: usize = 12;

/// Validation threshold above which the associativity scan runs row-parallel.
const PAR_THRESHOLD: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed table: {detail}")]
    BadShape { detail: String },
    /// The first cell (row-major; rows first, then columns) at which the
    /// table stops being a Latin square: out-of-range entry or a repeat
    /// within its row or column.
    #[error("not a Latin square at cell ({row}, {col})")]
    NotLatin { row: usize, col: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    /// Lexicographically first triple with `(a*b)*c != a*(b*c)`.
    #[error("not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("unsupported group description: {0}")]
    UnsupportedSpec(String),
    #[error("the element set is not a subgroup")]
    NotASubgroup,
    #[error("group is not nilpotent")]
    NotNilpotent,
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
}

/// Descriptions accepted by [`standard_group`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// Cyclic group of order `n` (n >= 1), addition mod n.
    Cyclic(usize),
    /// Elementary abelian group of order `p^k`: elements are base-`p` digit
    /// strings packed as `sum d_i * p^i`, added digit-wise mod p. For p = 2
    /// this is the usual bitmask encoding (xor addition).
    ElemAbelian { p: usize, k: u32 },
    /// Symmetric group on `k <= 4` letters. Elements are the permutations of
    /// `0..k` in lexicographic one-line order (so index 0 is the identity),
    /// multiplied by function composition: `(s*t)(i) = s(t(i))`.
    Sym(usize),
}

/// A finite group on `0..order` with identity `0`, stored as a flat
/// row-major Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverses: Vec<u16>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

/// A validated subgroup: a sorted element list, closed under the parent's
/// operation and inverses, containing 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    /// Validates that `elements` (in any order, duplicates tolerated) form a
    /// subgroup of `g`.
    pub fn new(g: &FiniteGroup, elements: &[usize]) -> Result<Subgroup, GroupError> {
        let mut elems: Vec<usize> = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.iter().any(|&x| x >= g.order()) {
            return Err(GroupError::NotASubgroup);
        }
        let mut member = vec![false; g.order()];
        for &x in &elems {
            member[x] = true;
        }
        if !member[0] {
            return Err(GroupError::NotASubgroup);
        }
        for &x in &elems {
            if !member[g.inv(x)] {
                return Err(GroupError::NotASubgroup);
            }
            for &y in &elems {
                if !member[g.op(x, y)] {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        Ok(Subgroup { elements: elems })
    }

    pub(crate) fn from_sorted_closure(elements: Vec<usize>) -> Subgroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(elements.first(), Some(&0));
        Subgroup { elements }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a subgroup always contains the identity
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// The upper central series of a group: `Z_0 = 1 <= Z_1 <= ...`, where
/// `Z_{k+1}/Z_k` is the center of `G/Z_k`. Members are listed up to and
/// including the first stable term; `class` is `Some(c)` iff the series
/// reaches the whole group, at index `c`.
#[derive(Debug, Clone)]
pub struct CentralSeries {
    pub members: Vec<Subgroup>,
    pub nilpotent: bool,
    pub class: Option<usize>,
}

/// Builds and fully validates a group from a Cayley table.
///
/// Checks run in order: shape, Latin square (rows then columns, row-major
/// first offender reported), two-sided identity, associativity
/// (lexicographically first failing triple reported). If the identity is at
/// an index other than 0, the table is relabelled by swapping that index
/// with 0 before the associativity scan, so the returned group always has
/// identity 0.
pub fn make_group(rows: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
    let n = rows.len();
    if n == 0 {
        return Err(GroupError::BadShape {
            detail: "empty table".into(),
        });
    }
    if n > MAX_ORDER {
        return Err(GroupError::OrderTooLarge {
            order: n,
            max: MAX_ORDER,
        });
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(GroupError::BadShape {
                detail: format!("row {r} has {} entries, expected {n}", row.len()),
            });
        }
    }
    // Latin property, rows first then columns, reporting the row-major first
    // offending cell of each pass.
    for (r, row) in rows.iter().enumerate() {
        let mut seen = vec![false; n];
        for (c, &v) in row.iter().enumerate() {
            if v >= n || seen[v] {
                return Err(GroupError::NotLatin { row: r, col: c });
            }
            seen[v] = true;
        }
    }
    for c in 0..n {
        let mut seen = vec![false; n];
        for (r, row) in rows.iter().enumerate() {
            let v = row[c];
            if seen[v] {
                return Err(GroupError::NotLatin { row: r, col: c });
            }
            seen[v] = true;
        }
    }
    // Two-sided identity.
    let e = (0..n)
        .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
        .ok_or(GroupError::NoIdentity)?;
    // Flatten, relabelling by the transposition (0 e) if needed.
    let mut table = vec![0u16; n * n];
    let p = |x: usize| -> usize {
        if x == e {
            0
        } else if x == 0 {
            e
        } else {
            x
        }
    };
    for x in 0..n {
        for y in 0..n {
            // p is an involution, so new[x][y] = p(old[p(x)][p(y)]).
            table[x * n + y] = p(rows[p(x)][p(y)]) as u16;
        }
    }
    // Associativity on the relabelled table.
    let violation = if n <= PAR_THRESHOLD {
        first_assoc_violation_serial(&table, n, 0..n)
    } else {
        (0..n)
            .into_par_iter()
            .filter_map(|a| first_assoc_violation_serial(&table, n, a..a + 1))
            .min()
    };
    if let Some((a, b, c)) = violation {
        return Err(GroupError::NotAssociative { a, b, c });
    }
    // Inverses: Latin rows each contain 0 exactly once.
    let mut inverses = vec![0u16; n];
    for x in 0..n {
        let y = (0..n).find(|&y| table[x * n + y] == 0).unwrap();
        debug_assert_eq!(table[y * n + x], 0, "one-sided inverse in a group");
        inverses[x] = y as u16;
    }
    Ok(FiniteGroup {
        order: n,
        table,
        inverses,
    })
}

fn first_assoc_violation_serial(
    table: &[u16],
    n: usize,
    a_range: std::ops::Range<usize>,
) -> Option<(usize, usize, usize)> {
    for a in a_range {
        for b in 0..n {
            let ab = table[a * n + b] as usize;
            for c in 0..n {
                let bc = table[b * n + c] as usize;
                if table[ab * n + c] != table[a * n + bc] {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Builds one of the stock groups. See [`GroupSpec`] for encodings.
pub fn standard_group(spec: GroupSpec) -> Result<FiniteGroup, GroupError> {
    let rows: Vec<Vec<usize>> = match spec {
        GroupSpec::Cyclic(n) => {
            if n == 0 {
                return Err(GroupError::UnsupportedSpec("cyclic(0)".into()));
            }
            if n > MAX_ORDER {
                return Err(GroupError::OrderTooLarge {
                    order: n,
                    max: MAX_ORDER,
                });
            }
            (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect()
        }
        GroupSpec::ElemAbelian { p, k } => {
            if !is_prime(p) {
                return Err(GroupError::UnsupportedSpec(format!(
                    "elem_abelian: {p} is not prime"
                )));
            }
            if k == 0 {
                return Err(GroupError::UnsupportedSpec("elem_abelian: k = 0".into()));
            }
            let n = p
                .checked_pow(k)
                .filter(|&n| n <= MAX_ORDER)
                .ok_or(GroupError::UnsupportedSpec(format!(
                    "elem_abelian: {p}^{k} exceeds the maximum order {MAX_ORDER}"
                )))?;
            let add = |x: usize, y: usize| -> usize {
                let (mut x, mut y, mut out, mut place) = (x, y, 0usize, 1usize);
                for _ in 0..k {
                    out += (x % p + y % p) % p * place;
                    x /= p;
                    y /= p;
                    place *= p;
                }
                out
            };
            (0..n).map(|x| (0..n).map(|y| add(x, y)).collect()).collect()
        }
        GroupSpec::Sym(k) => {
            if k == 0 || k > 4 {
                return Err(GroupError::UnsupportedSpec(format!(
                    "sym({k}): only 1 <= k <= 4 is supported"
                )));
            }
            let perms = permutations_lex(k);
            let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
            perms
                .iter()
                .map(|s| {
                    perms
                        .iter()
                        .map(|t| {
                            let st: Vec<usize> = (0..k).map(|i| s[t[i]]).collect();
                            index_of(&st)
                        })
                        .collect()
                })
                .collect()
        }
    };
    let g = make_group(&rows)?;
    debug_assert_eq!(g.op(0, 0), 0);
    Ok(g)
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// All permutations of `0..k` in lexicographic one-line order.
fn permutations_lex(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut used = vec![false; k];
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(k, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(k, &mut cur, &mut used, &mut out);
    out
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    /// The product `x * y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverses[x] as usize
    }

    /// The commutator `x * y * x^-1 * y^-1`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.op(self.op(self.op(x, y), self.inv(x)), self.inv(y))
    }

    /// The conjugate `g * x * g^-1`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.op(self.op(g, x), self.inv(g))
    }

    /// Smallest `m >= 1` with `x^m = 0`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut p = x;
        let mut m = 1;
        while p != 0 {
            p = self.op(p, x);
            m += 1;
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (x + 1..n).all(|y| self.op(x, y) == self.op(y, x)))
    }

    /// The table row-by-row, for serialization and structural comparison.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| (0..self.order).map(|y| self.op(x, y)).collect())
            .collect()
    }

    /// Closure of `seeds` under the operation and inverses, sorted; the
    /// identity is always included. Aborts with `None` once the closure
    /// grows past `bound`.
    pub(crate) fn closure_bounded(&self, seeds: &[usize], bound: usize) -> Option<Vec<usize>> {
        let mut member = vec![false; self.order];
        let mut elems: Vec<usize> = Vec::new();
        let push = |x: usize, member: &mut Vec<bool>, elems: &mut Vec<usize>| -> bool {
            if !member[x] {
                member[x] = true;
                elems.push(x);
            }
            elems.len() <= bound
        };
        if !push(0, &mut member, &mut elems) {
            return None;
        }
        for &s in seeds {
            if !push(s, &mut member, &mut elems) {
                return None;
            }
        }
        // Worklist closure: products with every element already present, in
        // both orders, plus inverses.
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            if !push(self.inv(x), &mut member, &mut elems) {
                return None;
            }
            let mut j = 0;
            while j < elems.len() {
                let y = elems[j];
                if !push(self.op(x, y), &mut member, &mut elems)
                    || !push(self.op(y, x), &mut member, &mut elems)
                {
                    return None;
                }
                j += 1;
            }
            i += 1;
        }
        elems.sort_unstable();
        Some(elems)
    }

    /// The subgroup generated by `seeds` (empty seeds give the trivial
    /// subgroup).
    pub fn generated_subgroup(&self, seeds: &[usize]) -> Subgroup {
        assert!(
            seeds.iter().all(|&s| s < self.order),
            "generator out of range"
        );
        let elems = self.closure_bounded(seeds, self.order).unwrap();
        Subgroup::from_sorted_closure(elems)
    }

    /// The center `{z : zg = gz for all g}`.
    pub fn center(&self) -> Subgroup {
        let n = self.order;
        let elems: Vec<usize> = (0..n)
            .filter(|&z| (0..n).all(|g| self.op(z, g) == self.op(g, z)))
            .collect();
        Subgroup::from_sorted_closure(elems)
    }

    /// Whether `h` is a normal subgroup. Re-verifies subgroup-ness against
    /// this group first (a `Subgroup` built against a different parent is
    /// rejected rather than trusted).
    pub fn is_normal(&self, h: &Subgroup) -> Result<bool, GroupError> {
        let h = Subgroup::new(self, h.elements())?;
        Ok((0..self.order).all(|g| {
            h.elements()
                .iter()
                .all(|&x| h.contains(self.conjugate(g, x)))
        }))
    }

    /// Upper central series, ascending from the trivial subgroup until it
    /// stabilizes. Strictly ascending members; the first stable term is not
    /// repeated.
    pub fn upper_central_series(&self) -> CentralSeries {
        let n = self.order;
        let mut member = vec![false; n];
        member[0] = true;
        let mut members = vec![Subgroup::from_sorted_closure(vec![0])];
        loop {
            let current = &members[members.len() - 1];
            if current.len() == n {
                break;
            }
            // Z_{k+1} = { x : [x, g] in Z_k for every g }.
            let next: Vec<usize> = (0..n)
                .filter(|&x| (0..n).all(|g| member[self.commutator(x, g)]))
                .collect();
            if next.len() == current.len() {
                break;
            }
            for &x in &next {
                member[x] = true;
            }
            members.push(Subgroup::from_sorted_closure(next));
        }
        let class = members
            .iter()
            .position(|m| m.len() == n);
        CentralSeries {
            nilpotent: class.is_some(),
            class,
            members,
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.upper_central_series().nilpotent
    }

    /// The (unique) Sylow p-subgroup of a nilpotent group: the set of
    /// elements of p-power order. Panics if `p` is not prime; errors if the
    /// group is not nilpotent (where Sylow subgroups need not be unique and
    /// this characterization breaks down).
    pub fn sylow_subgroup(&self, p: usize) -> Result<Subgroup, GroupError> {
        assert!(is_prime(p), "sylow_subgroup requires a prime, got {p}");
        if !self.is_nilpotent() {
            return Err(GroupError::NotNilpotent);
        }
        let elems: Vec<usize> = (0..self.order)
            .filter(|&x| {
                let mut m = self.element_order(x);
                while m.is_multiple_of(p) {
                    m /= p;
                }
                m == 1
            })
            .collect();
        let s = Subgroup::new(self, &elems)
            .expect("p-torsion of a nilpotent group is a subgroup");
        Ok(s)
    }

    /// Every subgroup, sorted by (order, elements). Exponential in general;
    /// meant for small orders (the crate uses it up to order 32).
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let trivial = vec![0usize];
        let mut frontier: Vec<Vec<usize>> = vec![trivial.clone()];
        seen.insert(trivial);
        while let Some(s) = frontier.pop() {
            for g in 1..self.order {
                if s.binary_search(&g).is_ok() {
                    continue;
                }
                let mut seeds = s.clone();
                seeds.push(g);
                let t = self.closure_bounded(&seeds, self.order).unwrap();
                if seen.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
        let mut out: Vec<Subgroup> = seen
            .into_iter()
            .map(Subgroup::from_sorted_closure)
            .collect();
        out.sort_by_key(|s| (s.len(), s.elements().to_vec()));
        out
    }

    /// All automorphisms, as permutations of `0..n`, sorted lexicographically
    /// (so the first entry is the identity). Backtracks over images of a
    /// generating set, pruning candidates by element order and conjugacy
    /// class size; every returned map is verified to be a bijective
    /// homomorphism on all pairs.
    pub fn automorphism_group(&self) -> Result<Vec<Vec<usize>>, GroupError> {
        let n = self.order;
        if n > MAX_AUT_ORDER {
            return Err(GroupError::OrderTooLarge {
                order: n,
                max: MAX_AUT_ORDER,
            });
        }
        // Greedy small generating set.
        let mut gens: Vec<usize> = Vec::new();
        let mut span = self.generated_subgroup(&[]);
        while span.len() < n {
            let g = (0..n).find(|&g| !span.contains(g)).unwrap();
            gens.push(g);
            span = self.generated_subgroup(&gens);
        }
        // Invariants for pruning: element order and conjugacy class size.
        let orders: Vec<usize> = (0..n).map(|x| self.element_order(x)).collect();
        let class_size: Vec<usize> = (0..n)
            .map(|x| {
                let mut class: Vec<usize> = (0..n).map(|g| self.conjugate(g, x)).collect();
                class.sort_unstable();
                class.dedup();
                class.len()
            })
            .collect();
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut images = vec![0usize; gens.len()];
        self.aut_backtrack(&gens, &orders, &class_size, 0, &mut images, &mut out);
        out.sort();
        out.dedup();
        debug_assert!(out.contains(&(0..n).collect::<Vec<_>>()));
        Ok(out)
    }

    fn aut_backtrack(
        &self,
        gens: &[usize],
        orders: &[usize],
        class_size: &[usize],
        depth: usize,
        images: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = self.order;
        if depth == gens.len() {
            if let Some(phi) = self.extend_hom(gens, images) {
                out.push(phi);
            }
            return;
        }
        let g = gens[depth];
        for h in 0..n {
            if orders[h] == orders[g] && class_size[h] == class_size[g] {
                images[depth] = h;
                self.aut_backtrack(gens, orders, class_size, depth + 1, images, out);
            }
        }
    }

    /// Tries to extend `gens[i] -> images[i]` to a full automorphism by
    /// closing the partial map under products; returns it only if the
    /// extension is consistent, bijective, and a homomorphism everywhere.
    fn extend_hom(&self, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let n = self.order;
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
            let mut j = 0;
            while j < defined.len() {
                let y = defined[j];
                for (src, dst) in [
                    (self.op(x, y), self.op(phi[x].unwrap(), phi[y].unwrap())),
                    (self.op(y, x), self.op(phi[y].unwrap(), phi[x].unwrap())),
                ] {
                    match phi[src] {
                        Some(prev) if prev != dst => return None,
                        Some(_) => {}
                        None => {
                            phi[src] = Some(dst);
                            defined.push(src);
                        }
                    }
                }
                j += 1;
            }
            i += 1;
        }
        // gens generate, so the closure must have defined every element.
        let phi: Vec<usize> = phi.into_iter().collect::<Option<Vec<_>>>()?;
        let mut seen = vec![false; n];
        for &v in &phi {
            if seen[v] {
                return None;
            }
            seen[v] = true;
        }
        for x in 0..n {
            for y in 0..n {
                if phi[self.op(x, y)] != self.op(phi[x], phi[y]) {
                    return None;
                }
            }
        }
        Some(phi)
    }
}

/// Direct product; element `(a, b)` is encoded as `a * |B| + b`.
pub fn direct_product_groups(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let (na, nb) = (a.order(), b.order());
    let n = na.checked_mul(nb).filter(|&n| n <= MAX_ORDER).ok_or(
        GroupError::OrderTooLarge {
            order: na.saturating_mul(nb),
            max: MAX_ORDER,
        },
    )?;
    let mut rows = vec![vec![0usize; n]; n];
    for xa in 0..na {
        for xb in 0..nb {
            for ya in 0..na {
                for yb in 0..nb {
                    rows[xa * nb + xb][ya * nb + yb] = a.op(xa, ya) * nb + b.op(xb, yb);
                }
            }
        }
    }
    make_group(&rows)
}

/// Dihedral group of order `2m` (symmetries of the regular m-gon), m >= 1.
/// Element `i < m` is the rotation by `i`; element `m + i` is the reflection
/// `r^i s`.
pub fn dihedral_group(m: usize) -> Result<FiniteGroup, GroupError> {
    if m == 0 || 2 * m > MAX_ORDER {
        return Err(GroupError::UnsupportedSpec(format!("dihedral({m})")));
    }
    let n = 2 * m;
    let mut rows = vec![vec![0usize; n]; n];
    for i in 0..m {
        for j in 0..m {
            rows[i][j] = (i + j) % m; // r^i r^j
            rows[i][m + j] = m + (i + j) % m; // r^i (r^j s)
            rows[m + i][j] = m + (i + m - j % m) % m; // (r^i s) r^j = r^{i-j} s
            rows[m + i][m + j] = (i + m - j % m) % m; // (r^i s)(r^j s) = r^{i-j}
        }
    }
    make_group(&rows)
}

/// The quaternion group of order 8: `{1, i, j, k, -1, -i, -j, -k}` encoded
/// as `0..8` with `4 + x` the negative of `x`.
pub fn quaternion_group() -> FiniteGroup {
    // Multiplication via the sign/axis presentation: indices 0..4 are
    // 1, i, j, k; adding 4 negates.
    let mul_base = [
        // 1    i    j    k   (row * col), value (axis, sign)
        [(0, 1), (1, 1), (2, 1), (3, 1)],
        [(1, 1), (0, -1), (3, 1), (2, -1)],
        [(2, 1), (3, -1), (0, -1), (1, 1)],
        [(3, 1), (2, 1), (1, -1), (0, -1)],
    ];
    let mut rows = vec![vec![0usize; 8]; 8];
    for x in 0..8 {
        for y in 0..8 {
            let (axis, sign) = mul_base[x % 4][y % 4];
            let neg = (x >= 4) ^ (y >= 4) ^ (sign < 0);
            rows[x][y] = axis + if neg { 4 } else { 0 };
        }
    }
    make_group(&rows).expect("quaternion table is a group")
}
