//! Finite bounded posets, order ideals, ranks and order complexes.
//!
//! The order relation is stored as its full reflexive-transitive closure, one
//! bit row per element. Labels are carried for reporting only; every algorithm
//! works on element indices.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::complex::{SimplicialComplex, Vertex, MAX_VERTICES};
use crate::error::{Error, Result};

/// Largest boolean lattice the standard constructions will build.
pub const MAX_BOOLEAN_RANK: usize = 12;

#[derive(Debug, Clone)]
pub struct Poset {
    labels: Vec<String>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    covers: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
    length: usize,
}

/// Ranks of a graded poset, indexed by element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankFunction {
    pub rank: Vec<usize>,
}

/// A downward-closed set of elements of some host poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    members: Vec<bool>,
}

impl Poset {
    /// Builds a poset from labels and `(lower, upper)` relation pairs; the
    /// order is their reflexive-transitive closure.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Poset> {
        let m = labels.len();
        if m == 0 {
            return Err(Error::NotBounded("no elements".into()));
        }
        let mut succ = vec![Vec::new(); m];
        let mut indegree = vec![0usize; m];
        for &(i, j) in covers {
            if i >= m || j >= m {
                return Err(Error::BadParameter(format!("cover ({i},{j}) outside 0..{m}")));
            }
            if i == j {
                return Err(Error::CyclicCovers);
            }
            succ[i].push(j);
            indegree[j] += 1;
        }
        let mut queue: VecDeque<usize> = (0..m).filter(|&i| indegree[i] == 0).collect();
        let mut topo = Vec::with_capacity(m);
        while let Some(i) = queue.pop_front() {
            topo.push(i);
            for &j in &succ[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    queue.push_back(j);
                }
            }
        }
        if topo.len() < m {
            return Err(Error::CyclicCovers);
        }
        let mut up = vec![BitSet::new(m); m];
        for &i in topo.iter().rev() {
            let mut row = BitSet::new(m);
            row.insert(i);
            for &j in &succ[i] {
                row.union_with(&up[j]);
            }
            up[i] = row;
        }
        Self::from_closure(labels, up)
    }

    /// Builds a poset from a relation predicate `leq(i, j)`, which must be a
    /// partial order.
    pub fn from_relation(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Poset> {
        let m = labels.len();
        let mut up = vec![BitSet::new(m); m];
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..m {
                if leq(i, j) {
                    row.insert(j);
                }
            }
        }
        for i in 0..m {
            if !up[i].contains(i) {
                return Err(Error::BadParameter(format!("relation is not reflexive at {}", labels[i])));
            }
            for j in up[i].iter().filter(|&j| j != i) {
                if up[j].contains(i) {
                    return Err(Error::CyclicCovers);
                }
                if !up[j].is_subset(&up[i]) {
                    return Err(Error::BadParameter(format!("relation is not transitive through {}", labels[j])));
                }
            }
        }
        Self::from_closure(labels, up)
    }

    fn from_closure(labels: Vec<String>, up: Vec<BitSet>) -> Result<Poset> {
        let m = labels.len();
        if m == 0 {
            return Err(Error::NotBounded("no elements".into()));
        }
        let mut down = vec![BitSet::new(m); m];
        for (i, row) in up.iter().enumerate() {
            for j in row.iter() {
                down[j].insert(i);
            }
        }
        let minimal: Vec<usize> = (0..m).filter(|&i| down[i].count() == 1).collect();
        let maximal: Vec<usize> = (0..m).filter(|&i| up[i].count() == 1).collect();
        if minimal.len() != 1 {
            let names: Vec<&str> = minimal.iter().map(|&i| labels[i].as_str()).collect();
            return Err(Error::NotBounded(format!("minimal elements {names:?}")));
        }
        if maximal.len() != 1 {
            let names: Vec<&str> = maximal.iter().map(|&i| labels[i].as_str()).collect();
            return Err(Error::NotBounded(format!("maximal elements {names:?}")));
        }
        let covers: Vec<Vec<usize>> = (0..m)
            .map(|i| {
                let mut strict = up[i].clone();
                strict.remove(i);
                strict
                    .iter()
                    .filter(|&j| {
                        let mut between = strict.intersection(&down[j]);
                        between.remove(j);
                        between.is_empty()
                    })
                    .collect()
            })
            .collect();
        let mut poset = Poset { labels, up, down, covers, bottom: minimal[0], top: maximal[0], length: 0 };
        poset.length = poset.longest_from(poset.bottom)[poset.top].expect("top above bottom");
        Ok(poset)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Length of a longest chain.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    /// All cover pairs `(lower, upper)`, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            self.covers.iter().enumerate().flat_map(|(i, c)| c.iter().map(move |&j| (i, j))).collect();
        out.sort_unstable();
        out
    }

    /// Elements of the closed interval `[x, y]`, ascending by index.
    pub fn interval(&self, x: usize, y: usize) -> Vec<usize> {
        self.up[x].intersection(&self.down[y]).iter().collect()
    }

    /// A linear extension: elements sorted by how many elements lie below them.
    fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.down[i].count(), i));
        order
    }

    /// `ℓ(x, y)` for every `y`: the length of a longest chain from `x` to `y`,
    /// `None` when `y` is not above `x`.
    pub fn longest_from(&self, x: usize) -> Vec<Option<usize>> {
        let mut best: Vec<Option<usize>> = vec![None; self.len()];
        best[x] = Some(0);
        for i in self.linear_extension() {
            if let Some(d) = best[i] {
                for &j in &self.covers[i] {
                    if best[j].is_none_or(|b| b < d + 1) {
                        best[j] = Some(d + 1);
                    }
                }
            }
        }
        best
    }

    /// `ℓ(x, y)`, the length of a longest chain in `[x, y]`.
    pub fn interval_length(&self, x: usize, y: usize) -> Option<usize> {
        self.longest_from(x)[y]
    }

    /// The interval `[x, y]` as a poset, together with the host index of each
    /// of its elements.
    pub fn interval_poset(&self, x: usize, y: usize) -> Result<(Poset, Vec<usize>)> {
        if !self.leq(x, y) {
            return Err(Error::BadParameter(format!("{} is not below {}", self.labels[x], self.labels[y])));
        }
        let members = self.interval(x, y);
        let labels = members.iter().map(|&i| self.labels[i].clone()).collect();
        let sub = Poset::from_relation(labels, |a, b| self.leq(members[a], members[b]))?;
        Ok((sub, members))
    }

    /// Meet of `a` and `b`, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let common = self.down[a].intersection(&self.down[b]);
        let found = common.iter().find(|&s| common.is_subset(&self.down[s]));
        found
    }

    /// Join of `a` and `b`, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let common = self.up[a].intersection(&self.up[b]);
        let found = common.iter().find(|&s| common.is_subset(&self.up[s]));
        found
    }

    pub fn is_lattice(&self) -> bool {
        (0..self.len()).all(|a| (a + 1..self.len()).all(|b| self.meet(a, b).is_some() && self.join(a, b).is_some()))
    }

    /// Graded iff every maximal chain has length `length()`; the rank function
    /// is returned only in that case.
    pub fn rank_and_graded(&self) -> (bool, Option<RankFunction>) {
        let long: Vec<usize> = self.longest_from(self.bottom).into_iter().map(|d| d.expect("bounded")).collect();
        let graded = (0..self.len()).all(|x| self.covers[x].iter().all(|&y| long[y] == long[x] + 1));
        if graded {
            (true, Some(RankFunction { rank: long }))
        } else {
            (false, None)
        }
    }

    pub fn rank_function(&self) -> Result<RankFunction> {
        self.rank_and_graded().1.ok_or(Error::NotGraded)
    }

    /// Every interval `[x, y]` with `x < y` has as many elements of odd rank as of even rank.
    pub fn is_eulerian(&self) -> Result<bool> {
        let rank = self.rank_function()?.rank;
        let m = self.len();
        let mut even = BitSet::new(m);
        for (i, &r) in rank.iter().enumerate() {
            if r % 2 == 0 {
                even.insert(i);
            }
        }
        for x in 0..m {
            for y in self.up[x].iter().filter(|&y| y != x) {
                let interval = self.up[x].intersection(&self.down[y]);
                let evens = interval.intersection(&even).count();
                if 2 * evens != interval.count() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Element counts by rank, `f_i` = number of elements of rank `i`.
    pub fn rank_counts(&self) -> Result<Vec<i64>> {
        let rank = self.rank_function()?.rank;
        let mut f = vec![0i64; self.length + 1];
        for r in rank {
            f[r] += 1;
        }
        Ok(f)
    }

    /// Whether `subset` is downward closed.
    pub fn is_ideal(&self, subset: &[usize]) -> bool {
        let mut members = BitSet::new(self.len());
        for &i in subset {
            if i >= self.len() {
                return false;
            }
            members.insert(i);
        }
        subset.iter().all(|&i| self.down[i].is_subset(&members))
    }

    /// The order complex of the proper part, on vertices `Plain(index)`.
    pub fn order_complex(&self) -> Result<SimplicialComplex> {
        let proper: Vec<usize> = (0..self.len()).filter(|&i| i != self.bottom && i != self.top).collect();
        if proper.len() > MAX_VERTICES {
            return Err(Error::TooLarge(format!("order complex on {} vertices", proper.len())));
        }
        let position: Vec<Option<usize>> = {
            let mut p = vec![None; self.len()];
            for (k, &i) in proper.iter().enumerate() {
                p[i] = Some(k);
            }
            p
        };
        let universe = proper.iter().map(|&i| Vertex::Plain(i as u32)).collect();
        let mut chains = Vec::new();
        let mut stack = vec![(self.bottom, 0u64)];
        while let Some((x, mask)) = stack.pop() {
            if x == self.top {
                chains.push(mask);
                continue;
            }
            for &y in &self.covers[x] {
                let extended = match position[y] {
                    Some(k) => mask | 1 << k,
                    None => mask,
                };
                stack.push((y, extended));
            }
        }
        SimplicialComplex::from_masks(universe, chains)
    }

    /// Boolean lattice of subsets of `[1, n]`; element `i` is the subset with mask `i`.
    pub fn boolean(n: usize) -> Result<Poset> {
        if n == 0 || n > MAX_BOOLEAN_RANK {
            return Err(Error::BadParameter(format!("boolean({n}): need 1 <= n <= {MAX_BOOLEAN_RANK}")));
        }
        let labels = (0..1usize << n).map(|s| subset_label(s as u64)).collect();
        let covers: Vec<(usize, usize)> = (0..1usize << n)
            .flat_map(|s| (0..n).filter(move |b| s >> b & 1 == 0).map(move |b| (s, s | 1 << b)))
            .collect();
        Poset::from_covers(labels, &covers)
    }

    /// Face lattice of an `m`-gon: `0̂`, vertices `v1..vm`, edges `e1..em`
    /// (`e_i = {v_i, v_(i+1)}`), `1̂`.
    pub fn polygon(m: usize) -> Result<Poset> {
        if m < 3 {
            return Err(Error::BadParameter(format!("polygon({m}): need m >= 3")));
        }
        let mut labels = vec!["bottom".to_string()];
        labels.extend((1..=m).map(|i| format!("v{i}")));
        labels.extend((1..=m).map(|i| format!("e{i}")));
        labels.push("top".into());
        let top = 2 * m + 1;
        let mut covers = Vec::new();
        for i in 1..=m {
            covers.push((0, i));
            let edge = m + i;
            covers.push((i, edge));
            covers.push((i % m + 1, edge));
            covers.push((edge, top));
        }
        Poset::from_covers(labels, &covers)
    }

    /// The chain `0 < 1 < ... < len`.
    pub fn chain(len: usize) -> Result<Poset> {
        let labels = (0..=len).map(|i| i.to_string()).collect();
        let covers: Vec<(usize, usize)> = (0..len).map(|i| (i, i + 1)).collect();
        Poset::from_covers(labels, &covers)
    }

    /// `P × Q` ordered componentwise; element `(p, q)` has index `p * |Q| + q`.
    pub fn product(p: &Poset, q: &Poset) -> Result<Poset> {
        let (a, b) = (p.len(), q.len());
        let labels = (0..a * b).map(|k| format!("({},{})", p.label(k / b), q.label(k % b))).collect();
        Poset::from_relation(labels, |i, j| p.leq(i / b, j / b) && q.leq(i % b, j % b))
    }

    /// The same elements with the order reversed.
    pub fn opposite(p: &Poset) -> Result<Poset> {
        Poset::from_relation(p.labels.clone(), |i, j| p.leq(j, i))
    }

    /// Faces of `k` ordered by inclusion, with a top element adjoined; the empty
    /// face is the bottom.
    pub fn face_poset(k: &SimplicialComplex) -> Result<Poset> {
        let faces = k.faces();
        let mut labels: Vec<String> = faces.iter().map(|&f| k.format_face(f)).collect();
        labels.push("top".into());
        let m = faces.len();
        Poset::from_relation(labels, |i, j| j == m || (i < m && faces[i] & !faces[j] == 0))
    }

    pub fn to_file(&self) -> PosetFile {
        PosetFile { elements: self.labels.clone(), covers: self.cover_pairs().into_iter().map(|(i, j)| [i, j]).collect() }
    }
}

/// `{1,3}` style label of a subset mask; `{}` for the empty set.
pub fn subset_label(mask: u64) -> String {
    let items: Vec<String> = crate::complex::bits(mask).map(|b| (b + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Which standard poset to build.
#[derive(Debug, Clone)]
pub enum StandardPoset<'a> {
    Boolean(usize),
    Polygon(usize),
    Chain(usize),
    Product(&'a Poset, &'a Poset),
    Opposite(&'a Poset),
}

pub fn standard_poset(kind: StandardPoset<'_>) -> Result<Poset> {
    match kind {
        StandardPoset::Boolean(n) => Poset::boolean(n),
        StandardPoset::Polygon(m) => Poset::polygon(m),
        StandardPoset::Chain(len) => Poset::chain(len),
        StandardPoset::Product(p, q) => Poset::product(p, q),
        StandardPoset::Opposite(p) => Poset::opposite(p),
    }
}

/// Whether `map` (indices of `p` to indices of `q`) is an order isomorphism.
pub fn is_order_isomorphism(p: &Poset, q: &Poset, map: &[usize]) -> bool {
    if p.len() != q.len() || map.len() != p.len() {
        return false;
    }
    let mut hit = vec![false; q.len()];
    for &j in map {
        if j >= q.len() || std::mem::replace(&mut hit[j], true) {
            return false;
        }
    }
    (0..p.len()).all(|a| (0..p.len()).all(|b| p.leq(a, b) == q.leq(map[a], map[b])))
}

impl Ideal {
    pub fn new(poset: &Poset, members: &[usize]) -> Result<Ideal> {
        if !poset.is_ideal(members) {
            return Err(Error::ImproperIdeal("subset is not downward closed".into()));
        }
        let mut flags = vec![false; poset.len()];
        for &i in members {
            flags[i] = true;
        }
        Ok(Ideal { members: flags })
    }

    /// A downward-closed set that contains `0̂` and misses `1̂`.
    pub fn proper(poset: &Poset, members: &[usize]) -> Result<Ideal> {
        let ideal = Ideal::new(poset, members)?;
        ideal.check_proper(poset)?;
        Ok(ideal)
    }

    /// Downward closure of `generators`.
    pub fn generated_by(poset: &Poset, generators: &[usize]) -> Result<Ideal> {
        let mut flags = vec![false; poset.len()];
        for &g in generators {
            if g >= poset.len() {
                return Err(Error::BadParameter(format!("element {g} outside the poset")));
            }
            for i in poset.down[g].iter() {
                flags[i] = true;
            }
        }
        Ok(Ideal { members: flags })
    }

    pub fn check_proper(&self, poset: &Poset) -> Result<()> {
        if self.members.len() != poset.len() {
            return Err(Error::ImproperIdeal("ideal belongs to another poset".into()));
        }
        if !self.members[poset.bottom()] {
            return Err(Error::ImproperIdeal("ideal is empty".into()));
        }
        if self.members[poset.top()] {
            return Err(Error::ImproperIdeal("ideal is the whole poset".into()));
        }
        Ok(())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.get(i).copied().unwrap_or(false)
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.members.len()).filter(|&i| self.members[i]).collect()
    }

    /// Every proper ideal of `poset`, as downward closures of antichains.
    pub fn all_proper(poset: &Poset) -> Vec<Ideal> {
        let mut found = std::collections::BTreeSet::new();
        let mut frontier = vec![vec![poset.bottom()]];
        let mut seen = std::collections::HashSet::new();
        while let Some(members) = frontier.pop() {
            let mut key = members.clone();
            key.sort_unstable();
            if !seen.insert(key.clone()) {
                continue;
            }
            found.insert(key.clone());
            // grow by one minimal element of the complement whose lower covers are all inside
            for c in 0..poset.len() {
                if c == poset.top() || key.binary_search(&c).is_ok() {
                    continue;
                }
                let below_inside = poset.down[c].iter().all(|d| d == c || key.binary_search(&d).is_ok());
                if below_inside {
                    let mut grown = key.clone();
                    grown.push(c);
                    frontier.push(grown);
                }
            }
        }
        found.into_iter().map(|m| Ideal::new(poset, &m).expect("downward closed")).collect()
    }
}

/// JSON poset file: `{"elements": [labels], "covers": [[i, j], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
}

impl PosetFile {
    pub fn build(&self) -> Result<Poset> {
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|c| (c[0], c[1])).collect();
        Poset::from_covers(self.elements.clone(), &covers)
    }
}

/// JSON ideal file: `{"members": [i, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub members: Vec<usize>,
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let file: PosetFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.build()
}

pub fn parse_ideal(poset: &Poset, text: &str) -> Result<Ideal> {
    let file: IdealFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ideal::proper(poset, &file.members)
}
