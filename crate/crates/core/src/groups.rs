//! Finite groups with explicit multiplication tables, G-Tables, and
//! permutation actions.
//!
//! Permutations act on the right: `i·σ` is the image of point `i`, and the
//! product `στ` means "apply `σ`, then `τ`", so `i·(στ) = (i·σ)·τ`. Under this
//! convention the matrix with a 1 at `(i, i·σ)` in every row is multiplicative:
//! `perm_matrix(στ) = perm_matrix(σ)·perm_matrix(τ)`.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation of `n` points from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                if p == 0 || p > n || next == 0 || next > n || touched[p - 1] {
                    return Err(Error::NotAPermutation(format!("{cycles:?} on {n} points")));
                }
                touched[p - 1] = true;
                images[p - 1] = next - 1;
            }
        }
        Self::new(images)
    }

    /// Parses cycle notation such as `(12)(34)`, `(1 2 3)` or `()`.
    /// Single digits may be run together; larger points need separators.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "1" || t == "()" || t.is_empty() {
            return Ok(Self::identity(n));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected `(` in `{t}`")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{t}`")))?;
            let body = &open[..close];
            let points: Vec<usize> = if body.contains([' ', ',']) {
                body.split([' ', ','])
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::Parse(format!("bad cycle `({body})`")))?
            } else {
                body.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::Parse(format!("bad cycle `({body})`")))?
            };
            cycles.push(points);
            rest = open[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `i·σ` (0-based).
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "permutation degrees differ");
        Self {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    /// `v^σ` with `(v^σ)_i = v_{i·σ}`.
    pub fn act_on<T: Clone>(&self, v: &[T]) -> Vec<T> {
        self.images.iter().map(|&x| v[x].clone()).collect()
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Self { images }
    }

    /// All permutations of `n` points in lexicographic order of their image lists.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation {
                    images: prefix.clone(),
                });
                return;
            }
            for x in 0..used.len() {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

/// Cycle notation with 1-based points; identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        let sep = if self.degree() > 9 { " " } else { "" };
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// 0/1 matrix with the 1 of row `i` in column `i·p`.
pub fn perm_matrix(p: &Permutation) -> SquareMatrix {
    let n = p.degree();
    let mut m = SquareMatrix::zero(n);
    for i in 0..n {
        m.set(i, p.image(i), Scalar::one());
    }
    m
}

/// Inverse of [`perm_matrix`]: `i·σ(P) = j` where row `i` of `P` has its 1 in column `j`.
pub fn sigma_of(m: &SquareMatrix) -> Result<Permutation> {
    let n = m.dim();
    let mut images = Vec::with_capacity(n);
    let mut col_used = vec![false; n];
    for i in 0..n {
        let mut found = None;
        for j in 0..n {
            let e = m.get(i, j);
            if e.is_one() {
                if found.is_some() {
                    return Err(Error::NotPermutationMatrix { row: i });
                }
                found = Some(j);
            } else if !e.is_zero() {
                return Err(Error::NotPermutationMatrix { row: i });
            }
        }
        match found {
            Some(j) if !col_used[j] => {
                col_used[j] = true;
                images.push(j);
            }
            _ => return Err(Error::NotPermutationMatrix { row: i }),
        }
    }
    Ok(Permutation { images })
}

/// A validated finite group, stored as a multiplication table over a fixed
/// element listing `g_0, …, g_{n-1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

/// Which group [`group_make`] should build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Klein4,
    Symmetric(usize),
    Explicit {
        names: Vec<String>,
        table: Vec<Vec<usize>>,
    },
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    /// `c3`, `c6`, `klein4`/`v4`, `s3`, `s4`, …
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        if t == "klein4" || t == "v4" || t == "k4" {
            return Ok(GroupSpec::Klein4);
        }
        let parse_n = |rest: &str| {
            rest.parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| Error::UnknownName(s.to_string()))
        };
        if let Some(rest) = t.strip_prefix('c') {
            return Ok(GroupSpec::Cyclic(parse_n(rest)?));
        }
        if let Some(rest) = t.strip_prefix('s') {
            return Ok(GroupSpec::Symmetric(parse_n(rest)?));
        }
        Err(Error::UnknownName(s.to_string()))
    }
}

pub fn group_make(spec: &GroupSpec) -> Result<Group> {
    match spec {
        GroupSpec::Cyclic(n) => Ok(Group::cyclic(*n)),
        GroupSpec::Klein4 => Ok(Group::klein4()),
        GroupSpec::Symmetric(n) => Ok(symmetric_with_perms(*n)?.0),
        GroupSpec::Explicit { names, table } => Group::from_table(names.clone(), table.clone()),
    }
}

const MAX_SYMMETRIC_DEGREE: usize = 6;

impl Group {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable {
                axiom: "non-empty",
                row: 0,
                col: 0,
            });
        }
        if names.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: names.len(),
            });
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable {
                    axiom: "square table",
                    row: r,
                    col: row.len(),
                });
            }
            if let Some(c) = row.iter().position(|&x| x >= n) {
                return Err(Error::InvalidTable {
                    axiom: "closure",
                    row: r,
                    col: c,
                });
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(Error::InvalidTable {
                axiom: "identity",
                row: 0,
                col: 0,
            })?;
        let mut inverse = Vec::with_capacity(n);
        for (g, row) in table.iter().enumerate() {
            let invs: Vec<usize> = (0..n)
                .filter(|&h| row[h] == identity && table[h][g] == identity)
                .collect();
            if invs.len() != 1 {
                return Err(Error::InvalidTable {
                    axiom: "unique inverse",
                    row: g,
                    col: invs.first().copied().unwrap_or(0),
                });
            }
            inverse.push(invs[0]);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidTable {
                            axiom: "associativity",
                            row: a,
                            col: b,
                        });
                    }
                }
            }
        }
        Ok(Self {
            names,
            table,
            inverse,
            identity,
        })
    }

    /// `C_n = {1, S, S^2, …}` with `S^n = 1`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group needs positive order");
        let names = (0..n).map(|k| power_name("S", k)).collect();
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        Self::from_table(names, table).expect("cyclic table is a group")
    }

    /// `{1, A, B, C}` with `A² = B² = C² = 1`, `AB = BA = C`.
    pub fn klein4() -> Self {
        let names = ["1", "A", "B", "C"].map(String::from).to_vec();
        let table = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        Self::from_table(names, table).expect("klein table is a group")
    }

    /// Permutation group on the given elements (closed under [`Permutation::then`]).
    pub fn from_permutations(names: Vec<String>, perms: &[Permutation]) -> Result<Self> {
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let ab = a.then(b);
                        perms
                            .iter()
                            .position(|p| *p == ab)
                            .ok_or_else(|| Error::NotAPermutation(format!("{ab} not in set")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_table(names, table)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Product of a word of element ids, left to right.
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(self.identity, |acc, &g| self.mul(acc, g))
    }

    pub fn render_table(&self, table: &[Vec<usize>]) -> String {
        render_name_table(&self.names, table)
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group{:?}", self.names)
    }
}

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => base.into(),
        _ => format!("{base}^{k}"),
    }
}

/// Cells padded to a common width, separated by one space, trailing space trimmed.
fn render_name_table(names: &[String], table: &[Vec<usize>]) -> String {
    let width = names.iter().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for row in table {
        let cells: Vec<String> = row
            .iter()
            .map(|&g| format!("{:<width$}", names[g]))
            .collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// `S_n` together with the natural action of each element on `n` points.
///
/// `S_3` is listed as `{1, R, R^2, F, RF, R^2F}` with `R = (123)`, `F = (23)`,
/// which gives `FR = R^2F`. Other degrees list all permutations
/// lexicographically and name them in cycle notation.
pub fn symmetric_with_perms(n: usize) -> Result<(Group, Vec<Permutation>)> {
    if n == 0 || n > MAX_SYMMETRIC_DEGREE {
        return Err(Error::SizeLimit {
            what: "symmetric group degree",
            max: MAX_SYMMETRIC_DEGREE,
            got: n,
        });
    }
    if n == 3 {
        let r = Permutation::from_cycles(3, &[&[1, 2, 3]])?;
        let f = Permutation::from_cycles(3, &[&[2, 3]])?;
        let r2 = r.then(&r);
        let perms = vec![
            Permutation::identity(3),
            r.clone(),
            r2.clone(),
            f.clone(),
            r.then(&f),
            r2.then(&f),
        ];
        let names = ["1", "R", "R^2", "F", "RF", "R^2F"]
            .map(String::from)
            .to_vec();
        return Ok((Group::from_permutations(names, &perms)?, perms));
    }
    let perms = Permutation::all(n);
    let names = perms.iter().map(|p| p.to_string()).collect();
    Ok((Group::from_permutations(names, &perms)?, perms))
}

/// G-Table: entry `(i, j) = g_i⁻¹·g_j`; the identity fills the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GTable {
    pub table: Vec<Vec<usize>>,
}

pub fn g_table(g: &Group) -> GTable {
    let n = g.order();
    GTable {
        table: (0..n)
            .map(|i| (0..n).map(|j| g.mul(g.inv(i), j)).collect())
            .collect(),
    }
}

impl GTable {
    /// `P_g`: 1 wherever the table shows `g`.
    pub fn placement_matrix(&self, g: usize) -> SquareMatrix {
        let n = self.table.len();
        SquareMatrix::from_fn(n, |i, j| {
            if self.table[i][j] == g {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn render(&self, group: &Group) -> String {
        group.render_table(&self.table)
    }

    pub fn is_latin_square(&self) -> bool {
        let n = self.table.len();
        let full = |cells: Vec<usize>| {
            let mut seen = vec![false; n];
            cells
                .into_iter()
                .all(|x| x < n && !std::mem::replace(&mut seen[x], true))
        };
        (0..n).all(|i| full(self.table[i].clone()))
            && (0..n).all(|j| full((0..n).map(|i| self.table[i][j]).collect()))
    }
}

/// A group acting on `{0, …, degree-1}` on the right.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAction {
    group: Group,
    perms: Vec<Permutation>,
    label: String,
}

impl GroupAction {
    /// Checks `i·1 = i` and `(i·g)·h = i·(gh)` for every pair.
    pub fn new(group: Group, perms: Vec<Permutation>, label: impl Into<String>) -> Result<Self> {
        if perms.len() != group.order() {
            return Err(Error::DimensionMismatch {
                expected: group.order(),
                got: perms.len(),
            });
        }
        let degree = perms[0].degree();
        if perms.iter().any(|p| p.degree() != degree) {
            return Err(Error::NotAPermutation("mixed degrees".into()));
        }
        if !perms[group.identity()].is_identity() {
            return Err(Error::NotAPermutation("identity acts non-trivially".into()));
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                if perms[group.mul(g, h)] != perms[g].then(&perms[h]) {
                    return Err(Error::NotAPermutation(format!(
                        "action is not a homomorphism at ({}, {})",
                        group.name(g),
                        group.name(h)
                    )));
                }
            }
        }
        Ok(Self {
            group,
            perms,
            label: label.into(),
        })
    }

    /// `S_n` on `n` points: the action underlying `A_n`.
    pub fn natural_symmetric(n: usize) -> Result<Self> {
        let (g, perms) = symmetric_with_perms(n)?;
        Self::new(g, perms, format!("A_{n}"))
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.perms[0].degree()
    }

    pub fn perm(&self, g: usize) -> &Permutation {
        &self.perms[g]
    }

    pub fn act(&self, g: usize, point: usize) -> usize {
        self.perms[g].image(point)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// True when the action is the right regular one (degree = order, simply transitive).
    pub fn is_regular(&self) -> bool {
        self.degree() == self.group.order()
            && (0..self.group.order()).all(|g| {
                g == self.group.identity()
                    || self.perms[g]
                        .images()
                        .iter()
                        .enumerate()
                        .all(|(i, &x)| i != x)
            })
    }

    pub fn find(&self, p: &Permutation) -> Option<usize> {
        self.perms.iter().position(|q| q == p)
    }

    /// Element id by group name or, failing that, by cycle notation.
    pub fn element(&self, name: &str) -> Result<usize> {
        if let Ok(g) = self.group.element(name) {
            return Ok(g);
        }
        let p = Permutation::parse_cycles(self.degree(), name)
            .map_err(|_| Error::UnknownName(name.to_string()))?;
        self.find(&p)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }
}

impl fmt::Debug for GroupAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupAction({}, degree {})", self.label, self.degree())
    }
}

/// Right regular representation: `i·ρ(g) = k` where `g_i·g = g_k`.
pub fn regular_action(g: &Group) -> GroupAction {
    let n = g.order();
    let perms = (0..n)
        .map(|h| Permutation {
            images: (0..n).map(|i| g.mul(i, h)).collect(),
        })
        .collect();
    GroupAction::new(g.clone(), perms, "regular").expect("regular action is a homomorphism")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn builtins() -> Vec<Group> {
        vec![
            Group::cyclic(3),
            Group::cyclic(6),
            Group::klein4(),
            group_make(&GroupSpec::Symmetric(3)).unwrap(),
            Group::cyclic(8),
        ]
    }

    #[test]
    fn cyclic_three() {
        let g = Group::cyclic(3);
        assert_eq!(g.names(), ["1", "S", "S^2"]);
        let s = g.element("S").unwrap();
        assert_eq!(g.product(&[s, s, s]), g.identity());
    }

    #[test]
    fn klein_relations() {
        let g = Group::klein4();
        let [a, b, c] = ["A", "B", "C"].map(|n| g.element(n).unwrap());
        for x in [a, b, c] {
            assert_eq!(g.mul(x, x), g.identity());
        }
        assert_eq!(g.mul(a, b), c);
        assert_eq!(g.mul(b, a), c);
    }

    #[test]
    fn s3_relations() {
        let g = group_make(&GroupSpec::Symmetric(3)).unwrap();
        assert_eq!(g.order(), 6);
        let [r, r2, f, r2f] = ["R", "R^2", "F", "R^2F"].map(|n| g.element(n).unwrap());
        assert_eq!(g.product(&[r, r, r]), g.identity());
        assert_eq!(g.mul(f, f), g.identity());
        assert_eq!(g.mul(r, r), r2);
        // the relation that matches the displayed multiplication table
        assert_eq!(g.mul(f, r), r2f);
        assert_eq!(g.mul(f, r), g.mul(r2, f));
    }

    #[test]
    fn explicit_table_validation() {
        let names = ["e", "a"].map(String::from).to_vec();
        assert!(group_make(&GroupSpec::Explicit {
            names: names.clone(),
            table: vec![vec![0, 1], vec![1, 0]],
        })
        .is_ok());
        let err = Group::from_table(names.clone(), vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidTable {
                axiom: "unique inverse",
                row: 1,
                ..
            }
        ));
        let err = Group::from_table(names, vec![vec![0, 2], vec![1, 0]]).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidTable {
                axiom: "closure",
                row: 0,
                col: 1
            }
        );
        // a Latin square with identity but no associativity
        let names5: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = Group::from_table(names5, t).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidTable {
                axiom: "associativity",
                ..
            }
        ));
    }

    #[test]
    fn gtables_are_latin_with_identity_diagonal() {
        for g in builtins() {
            let t = g_table(&g);
            assert!(t.is_latin_square(), "{g:?}");
            for i in 0..g.order() {
                assert_eq!(t.table[i][i], g.identity());
            }
        }
    }

    #[test]
    fn gtable_rows_match_displays() {
        let c3 = Group::cyclic(3);
        assert_eq!(
            g_table(&c3).render(&c3),
            "1   S   S^2\nS^2 1   S\nS   S^2 1\n"
        );
        let c6 = Group::cyclic(6);
        let row2: Vec<&str> = g_table(&c6).table[1].iter().map(|&x| c6.name(x)).collect();
        assert_eq!(row2, ["S^5", "1", "S", "S^2", "S^3", "S^4"]);
        let s3 = group_make(&GroupSpec::Symmetric(3)).unwrap();
        let row2: Vec<&str> = g_table(&s3).table[1].iter().map(|&x| s3.name(x)).collect();
        assert_eq!(row2, ["R^2", "1", "R", "R^2F", "F", "RF"]);
    }

    #[test]
    fn placement_matrices_are_the_regular_representation() {
        for g in builtins() {
            let t = g_table(&g);
            let rho = regular_action(&g);
            for h in 0..g.order() {
                assert_eq!(t.placement_matrix(h), perm_matrix(rho.perm(h)));
                assert_eq!(&sigma_of(&t.placement_matrix(h)).unwrap(), rho.perm(h));
            }
            for a in 0..g.order() {
                for b in 0..g.order() {
                    assert_eq!(rho.perm(g.mul(a, b)), &rho.perm(a).then(rho.perm(b)));
                }
            }
        }
    }

    #[test]
    fn permutation_matrices() {
        assert!(perm_matrix(&Permutation::identity(4)).is_identity());
        let a = Permutation::parse_cycles(4, "(12)(34)").unwrap();
        let expected_a =
            SquareMatrix::from_ints(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        assert_eq!(perm_matrix(&a), expected_a);
        let s = Permutation::parse_cycles(3, "(123)").unwrap();
        let expected_s = SquareMatrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        assert_eq!(perm_matrix(&s), expected_s);
        let b =
            SquareMatrix::from_ints(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(sigma_of(&b).unwrap().to_string(), "(13)(24)");
        assert!(sigma_of(&SquareMatrix::identity(5)).unwrap().is_identity());
    }

    #[test]
    fn sigma_of_rejects_non_permutations() {
        let m = SquareMatrix::from_ints(&[&[1, 0], &[1, 0]]);
        assert_eq!(sigma_of(&m), Err(Error::NotPermutationMatrix { row: 1 }));
        let m = SquareMatrix::from_ints(&[&[1, 0], &[0, 2]]);
        assert_eq!(sigma_of(&m), Err(Error::NotPermutationMatrix { row: 1 }));
        let m = SquareMatrix::from_ints(&[&[0, 0], &[0, 1]]);
        assert_eq!(sigma_of(&m), Err(Error::NotPermutationMatrix { row: 0 }));
    }

    #[test]
    fn matrix_and_sigma_are_homomorphisms() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8);
            let p = Permutation::random(n, &mut rng);
            let q = Permutation::random(n, &mut rng);
            assert_eq!(sigma_of(&perm_matrix(&p)).unwrap(), p);
            assert_eq!(
                perm_matrix(&p.then(&q)),
                &perm_matrix(&p) * &perm_matrix(&q)
            );
        }
    }

    #[test]
    fn regular_action_examples() {
        let c3 = Group::cyclic(3);
        let rho = regular_action(&c3);
        assert_eq!(rho.perm(1).to_string(), "(123)");
        assert!(rho.perm(c3.identity()).is_identity());
        let s3 = group_make(&GroupSpec::Symmetric(3)).unwrap();
        let rho = regular_action(&s3);
        let psi = SquareMatrix::from_ints(&[
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
            &[1, 0, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
        ]);
        assert_eq!(perm_matrix(rho.perm(s3.element("F").unwrap())), psi);
        assert!(rho.is_regular());
    }

    #[test]
    fn cycle_notation_round_trip() {
        for text in ["()", "(123)", "(13)(24)", "(1 10)(2 3)"] {
            let n = if text.contains("10") { 10 } else { 4 };
            let p = Permutation::parse_cycles(n, text).unwrap();
            assert_eq!(p.to_string(), text);
        }
        assert!(Permutation::parse_cycles(3, "(14)").is_err());
        assert!(Permutation::parse_cycles(3, "(12").is_err());
    }

    #[test]
    fn spec_names() {
        assert_eq!("c6".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(6));
        assert_eq!("S3".parse::<GroupSpec>().unwrap(), GroupSpec::Symmetric(3));
        assert_eq!("klein4".parse::<GroupSpec>().unwrap(), GroupSpec::Klein4);
        assert!("q8".parse::<GroupSpec>().is_err());
    }
}
