use super::partition::{Node, Partition};
use super::perm::Perm;
use crate::error::{Error, Result};
use std::fmt;

/// Standard filling of a Young diagram by the consecutive letters `start..start+|λ|-1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    shape: Partition,
    start: u32,
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<StandardTableau> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        let mut all: Vec<u32> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        let start = all.first().copied().unwrap_or(1);
        let bad = || Error::InvalidInput(format!("{rows:?} is not a standard tableau"));
        if all.iter().enumerate().any(|(i, &x)| x != start + i as u32) {
            return Err(bad());
        }
        for (i, r) in rows.iter().enumerate() {
            if r.windows(2).any(|w| w[0] >= w[1]) {
                return Err(bad());
            }
            if i > 0 && r.iter().zip(&rows[i - 1]).any(|(a, b)| a <= b) {
                return Err(bad());
            }
        }
        Ok(StandardTableau { shape, start, rows })
    }

    /// `t^λ`: letters entered along rows in order.
    pub fn superstandard(shape: &Partition, start: u32) -> StandardTableau {
        let mut next = start;
        let rows = shape
            .parts()
            .iter()
            .map(|&r| {
                let row: Vec<u32> = (next..next + r).collect();
                next += r;
                row
            })
            .collect();
        StandardTableau { shape: shape.clone(), start, rows }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn entry(&self, p: Node) -> u32 {
        self.rows[p.row as usize - 1][p.col as usize - 1]
    }

    /// Node holding the letter `x`.
    pub fn position(&self, x: u32) -> Option<Node> {
        for (i, r) in self.rows.iter().enumerate() {
            if let Some(j) = r.iter().position(|&y| y == x) {
                return Some(Node::new(i as u32 + 1, j as u32 + 1));
            }
        }
        None
    }

    /// Tableau with the largest letter removed.
    pub fn restrict(&self) -> Option<StandardTableau> {
        if self.rows.is_empty() {
            return None;
        }
        let top = self.start + self.shape.size() as u32 - 1;
        let mut rows = self.rows.clone();
        for r in rows.iter_mut() {
            if r.last() == Some(&top) {
                r.pop();
            }
        }
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        Some(StandardTableau { shape: Partition::new(rows.iter().map(|r| r.len() as u32).collect()).unwrap(), start: self.start, rows })
    }
}

/// All standard tableaux of shape `λ` on the letters `start..`, ordered by the length of `d(t)`.
pub fn std_tableaux(shape: &Partition, start: u32) -> Vec<StandardTableau> {
    let mut out = Vec::new();
    let mut fill: Vec<Vec<u32>> = shape.parts().iter().map(|&r| vec![0; r as usize]).collect();
    place(shape.clone(), start + shape.size() as u32 - 1, start, &mut fill, &mut out);
    let n = (start - 1) as usize + shape.size();
    out.sort_by_cached_key(|t| {
        let d = coset_word(t, n);
        (d.length(), d)
    });
    out
}

fn place(shape: Partition, top: u32, start: u32, fill: &mut Vec<Vec<u32>>, out: &mut Vec<StandardTableau>) {
    if shape.is_empty() {
        out.push(StandardTableau { shape: Partition::new(fill.iter().map(|r| r.len() as u32).collect()).unwrap(), start, rows: fill.clone() });
        return;
    }
    for p in shape.removable() {
        fill[p.row as usize - 1][p.col as usize - 1] = top;
        place(shape.remove_node(p).unwrap(), top.wrapping_sub(1), start, fill, out);
    }
}

/// `d(t)` in `S_n`, the permutation with `t = t^λ·d(t)`; letters outside the alphabet are fixed.
pub fn coset_word(t: &StandardTableau, n: usize) -> Perm {
    let sup = StandardTableau::superstandard(&t.shape, t.start);
    let mut images: Vec<usize> = (1..=n).collect();
    for p in t.shape.nodes() {
        images[sup.entry(p) as usize - 1] = t.entry(p) as usize;
    }
    Perm::from_images(&images).expect("tableau letters fit in the window")
}

/// Simple generators `s_i` of the row stabilizer of `t^λ` on the letters `start..`.
pub fn row_stabilizer_generators(shape: &Partition, start: u32) -> Vec<usize> {
    let mut out = Vec::new();
    let mut a = start as usize;
    for &r in shape.parts() {
        out.extend(a..a + r as usize - 1);
        a += r as usize;
    }
    out
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_one() {
        let l: Partition = "2,1".parse().unwrap();
        let ts = std_tableaux(&l, 1);
        assert_eq!(ts.len(), 2);
        assert!(coset_word(&ts[0], 3).is_identity());
        assert_eq!(coset_word(&ts[1], 3), Perm::s(3, 2));
    }

    #[test]
    fn shifted_alphabet() {
        let l: Partition = "2".parse().unwrap();
        let ts = std_tableaux(&l, 3);
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].rows(), &[vec![3, 4]]);
        assert_eq!(row_stabilizer_generators(&l, 3), vec![3]);
    }

    #[test]
    fn hook_length_counts() {
        for (s, c) in [("3,2", 5), ("2,2,1", 5), ("3,1,1", 6), ("4,2", 9)] {
            assert_eq!(std_tableaux(&s.parse().unwrap(), 1).len(), c, "{s}");
        }
    }

    #[test]
    fn restriction_drops_top_letter() {
        let t = StandardTableau::new(vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(t.restrict().unwrap().rows(), &[vec![1], vec![2]]);
    }
}
