use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Integer partition, stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, serde::Serialize, serde::Deserialize)]
pub struct Node {
    pub row: u32,
    pub col: u32,
}

impl Node {
    pub fn new(row: u32, col: u32) -> Node {
        assert!(row >= 1 && col >= 1, "node coordinates are 1-based");
        Node { row, col }
    }

    /// Column minus row.
    pub fn content(&self) -> i32 {
        self.col as i32 - self.row as i32
    }
}

/// Verdict of a partial-order comparison `a ? b`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum Dominance {
    /// `a ◁ b`
    Below,
    Equal,
    /// `a ▷ b`
    Above,
    Incomparable,
}

impl Dominance {
    pub fn symbol(&self) -> &'static str {
        match self {
            Dominance::Below => "◁",
            Dominance::Equal => "=",
            Dominance::Above => "▷",
            Dominance::Incomparable => "incomparable",
        }
    }
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidInput(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length, 0 beyond the last row.
    pub fn row(&self, i: usize) -> u32 {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, p: Node) -> bool {
        self.row(p.row as usize) >= p.col
    }

    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &r) in self.parts.iter().enumerate() {
            for j in 1..=r {
                out.push(Node::new(i as u32 + 1, j));
            }
        }
        out
    }

    /// Removable nodes, top to bottom.
    pub fn removable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for i in 1..=self.len() {
            if self.row(i) > self.row(i + 1) {
                out.push(Node::new(i as u32, self.row(i)));
            }
        }
        out
    }

    /// Addable nodes, top to bottom.
    pub fn addable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for i in 1..=self.len() + 1 {
            if i == 1 || self.row(i - 1) > self.row(i) {
                out.push(Node::new(i as u32, self.row(i) + 1));
            }
        }
        out
    }

    pub fn add_node(&self, p: Node) -> Result<Partition> {
        let mut parts = self.parts.clone();
        let r = p.row as usize;
        if r == parts.len() + 1 {
            parts.push(0);
        }
        if r > parts.len() || parts[r - 1] + 1 != p.col {
            return Err(Error::InvalidInput(format!("{p:?} is not addable to {self}")));
        }
        parts[r - 1] += 1;
        Partition::new(parts).map_err(|_| Error::InvalidInput(format!("{p:?} is not addable to {self}")))
    }

    pub fn remove_node(&self, p: Node) -> Result<Partition> {
        if !self.removable().contains(&p) {
            return Err(Error::InvalidInput(format!("{p:?} is not removable from {self}")));
        }
        let mut parts = self.parts.clone();
        parts[p.row as usize - 1] -= 1;
        Partition::new(parts)
    }

    /// The single node by which `self` and `other` differ, if they differ by one.
    pub fn node_difference(&self, other: &Partition) -> Option<Node> {
        let rows = self.len().max(other.len());
        let mut diff = None;
        for i in 1..=rows {
            let (a, b) = (self.row(i), other.row(i));
            if a == b {
                continue;
            }
            if diff.is_some() || a.abs_diff(b) != 1 {
                return None;
            }
            diff = Some(Node::new(i as u32, a.max(b)));
        }
        diff
    }

    /// `e`-restricted: `λ_i - λ_{i+1} < e` for every `i`.
    pub fn is_restricted(&self, e: u32) -> bool {
        (1..=self.len()).all(|i| self.row(i) - self.row(i + 1) < e)
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.row(1);
        Partition { parts: (1..=m).map(|j| self.parts.iter().filter(|&&r| r >= j).count() as u32).collect() }
    }

    /// Lexicographic order on parts; a linear extension of dominance.
    pub fn lex_cmp(&self, other: &Partition) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

/// Dominance order on partitions of equal size.
pub fn dominance(a: &Partition, b: &Partition) -> Result<Dominance> {
    if a.size() != b.size() {
        return Err(Error::InvalidInput(format!("dominance needs equal sizes, got {a} and {b}")));
    }
    if a == b {
        return Ok(Dominance::Equal);
    }
    let (mut sa, mut sb) = (0u32, 0u32);
    let (mut le, mut ge) = (true, true);
    for i in 1..=a.len().max(b.len()) {
        sa += a.row(i);
        sb += b.row(i);
        le &= sa <= sb;
        ge &= sa >= sb;
    }
    Ok(match (le, ge) {
        (true, false) => Dominance::Below,
        (false, true) => Dominance::Above,
        _ => Dominance::Incomparable,
    })
}

/// All partitions of `d`, optionally `e`-restricted, in decreasing lexicographic order.
pub fn partitions(d: usize, e: Option<u32>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen(d as u32, d as u32, &mut cur, &mut out);
    out.into_iter().filter(|p| e.is_none_or(|e| p.is_restricted(e))).collect()
}

fn gen(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for k in (1..=max.min(rest)).rev() {
        cur.push(k);
        gen(rest - k, k, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;
    /// Accepts `[3,1,1]`, `3,1,1`, `[]` and `∅`.
    fn from_str(s: &str) -> Result<Partition> {
        let t = s.trim();
        let t = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')).unwrap_or(t).trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Partition, D::Error> {
        Partition::new(Vec::<u32>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions(3, None), vec![p("3"), p("2,1"), p("1,1,1")]);
        assert_eq!(partitions(0, None), vec![Partition::empty()]);
        assert_eq!(partitions(4, Some(2)), vec![p("2,1,1"), p("1,1,1,1")]);
        assert_eq!(partitions(7, None).len(), 15);
    }

    #[test]
    fn dominance_verdicts() {
        assert_eq!(dominance(&p("2,1"), &p("1,1,1")).unwrap(), Dominance::Above);
        assert_eq!(dominance(&p("3,3"), &p("4,1,1")).unwrap(), Dominance::Incomparable);
        assert!(dominance(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn nodes_of_small_shapes() {
        let l = p("2,1");
        assert_eq!(l.removable(), vec![Node::new(1, 2), Node::new(2, 1)]);
        assert_eq!(l.addable(), vec![Node::new(1, 3), Node::new(2, 2), Node::new(3, 1)]);
        assert_eq!(Partition::empty().removable(), vec![]);
        assert_eq!(Partition::empty().addable(), vec![Node::new(1, 1)]);
        assert_eq!(Node::new(1, 3).content(), 2);
        assert_eq!(l.add_node(Node::new(3, 1)).unwrap(), p("2,1,1"));
        assert!(l.add_node(Node::new(2, 3)).is_err());
        assert_eq!(p("2,1").node_difference(&p("2")), Some(Node::new(2, 1)));
        assert_eq!(p("1,1").conjugate(), p("2"));
    }
}
