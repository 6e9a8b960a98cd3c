use super::cosets::coset_count;
use super::partition::{dominance, partitions, Dominance, Node, Partition};
use super::tableau::std_tableaux;
use crate::coefficients::{Coeff, Ground, Int, LaurentPoly, Mono};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Index `(f, λ)` of a cell module, `λ ⊢ n - 2f`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, serde::Serialize, serde::Deserialize)]
pub struct CellLabel {
    pub f: usize,
    pub lambda: Partition,
}

impl CellLabel {
    pub fn new(f: usize, lambda: Partition) -> CellLabel {
        CellLabel { f, lambda }
    }

    /// The `n` this label belongs to.
    pub fn level(&self) -> usize {
        2 * self.f + self.lambda.size()
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.level() != n {
            return Err(Error::InvalidInput(format!("{self} is not a label for n={n}")));
        }
        Ok(())
    }

    /// `|D_{f,n}| · #Std(λ)`.
    pub fn dimension(&self) -> usize {
        coset_count(self.f, self.level()) as usize * std_tableaux(&self.lambda, 1).len()
    }

    /// Sort key of a linear extension of [`label_order`], smaller first.
    pub fn rank_key(&self) -> (usize, Vec<u32>) {
        (self.f, self.lambda.parts().to_vec())
    }
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.f, self.lambda)
    }
}

/// All labels for `n`, by deficiency and then decreasing partitions.
pub fn labels(n: usize) -> Vec<CellLabel> {
    (0..=n / 2).flat_map(|f| partitions(n - 2 * f, None).into_iter().map(move |l| CellLabel::new(f, l))).collect()
}

/// Partial order on labels of the same `n`: a label of smaller deficiency lies
/// below any label of larger deficiency; equal deficiencies compare by dominance.
pub fn label_order(a: &CellLabel, b: &CellLabel) -> Result<Dominance> {
    if a.level() != b.level() {
        return Err(Error::InvalidInput(format!("labels {a} and {b} belong to different n")));
    }
    Ok(match a.f.cmp(&b.f) {
        Ordering::Less => Dominance::Below,
        Ordering::Greater => Dominance::Above,
        Ordering::Equal => dominance(&a.lambda, &b.lambda)?,
    })
}

/// One step of an up-down tableau.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    Add(Node),
    Remove(Node),
}

/// Path `∅ = t_0, t_1, …, t_n` in the branching graph, each step adding or removing a node.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpDownTableau {
    path: Vec<Partition>,
}

impl UpDownTableau {
    pub fn new(path: Vec<Partition>) -> Result<UpDownTableau> {
        if path.first().is_none_or(|p| !p.is_empty()) {
            return Err(Error::InvalidInput("an up-down tableau starts at the empty partition".into()));
        }
        for (k, w) in path.windows(2).enumerate() {
            if w[0].node_difference(&w[1]).is_none() {
                return Err(Error::InvalidInput(format!("{} and {} differ by more than one node at step {}", w[0], w[1], k + 1)));
            }
        }
        Ok(UpDownTableau { path })
    }

    pub fn n(&self) -> usize {
        self.path.len() - 1
    }

    pub fn path(&self) -> &[Partition] {
        &self.path
    }

    /// `t_k`.
    pub fn at(&self, k: usize) -> &Partition {
        &self.path[k]
    }

    pub fn shape(&self) -> &Partition {
        self.path.last().unwrap()
    }

    /// Label of `t_k` among the labels for `k`.
    pub fn label_at(&self, k: usize) -> CellLabel {
        CellLabel::new((k - self.path[k].size()) / 2, self.path[k].clone())
    }

    pub fn label(&self) -> CellLabel {
        self.label_at(self.n())
    }

    pub fn step(&self, k: usize) -> Step {
        let (a, b) = (&self.path[k - 1], &self.path[k]);
        let p = a.node_difference(b).expect("validated path");
        if b.size() > a.size() {
            Step::Add(p)
        } else {
            Step::Remove(p)
        }
    }

    /// `t` with its last step dropped.
    pub fn truncate(&self) -> UpDownTableau {
        UpDownTableau { path: self.path[..self.path.len() - 1].to_vec() }
    }

    /// Sort key of a linear extension of `≺`, smaller first.
    pub fn rank_key(&self) -> Vec<(usize, Vec<u32>)> {
        (1..=self.n()).rev().map(|k| self.label_at(k).rank_key()).collect()
    }
}

impl fmt::Display for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.path.iter().map(|p| if p.is_empty() { "∅".to_string() } else { p.to_string() }).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for UpDownTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.path.serialize(s)
    }
}

/// Number of node moves separating two partitions.
fn distance(a: &Partition, b: &Partition) -> usize {
    (1..=a.len().max(b.len())).map(|i| a.row(i).abs_diff(b.row(i)) as usize).sum()
}

/// All up-down tableaux of length `n` ending at `λ`, in increasing `≺`-compatible order.
pub fn updown_tableaux(n: usize, lambda: &Partition) -> Result<Vec<UpDownTableau>> {
    if lambda.size() > n || !(n - lambda.size()).is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("{lambda} cannot end an up-down tableau of length {n}")));
    }
    let mut out = Vec::new();
    let mut path = vec![Partition::empty()];
    walk(n, lambda, &mut path, &mut out);
    out.sort_by_cached_key(|t| t.rank_key());
    Ok(out)
}

fn walk(n: usize, target: &Partition, path: &mut Vec<Partition>, out: &mut Vec<UpDownTableau>) {
    let k = path.len() - 1;
    let cur = path[k].clone();
    if k == n {
        out.push(UpDownTableau { path: path.clone() });
        return;
    }
    let left = n - k - 1;
    let mut next: Vec<Partition> = cur.addable().into_iter().map(|p| cur.add_node(p).unwrap()).collect();
    next.extend(cur.removable().into_iter().map(|p| cur.remove_node(p).unwrap()));
    for m in next {
        if distance(&m, target) <= left {
            path.push(m);
            walk(n, target, path, out);
            path.pop();
        }
    }
}

/// Outcome of comparing two up-down tableaux.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UdVerdict {
    Equal,
    /// `s ≻^k t`
    Above(usize),
    /// `s ≺^k t`
    Below(usize),
    /// The paths first differ (from the top) at `k` with incomparable labels.
    Incomparable(usize),
}

/// Compares `s` with `t` at the largest step where they differ.
pub fn ud_compare(s: &UpDownTableau, t: &UpDownTableau) -> Result<UdVerdict> {
    if s.n() != t.n() || s.shape() != t.shape() {
        return Err(Error::InvalidInput(format!("{s} and {t} are not comparable paths")));
    }
    let Some(k) = (1..=s.n()).rev().find(|&k| s.at(k) != t.at(k)) else {
        return Ok(UdVerdict::Equal);
    };
    Ok(match label_order(&s.label_at(k), &t.label_at(k))? {
        Dominance::Above => UdVerdict::Above(k),
        Dominance::Below => UdVerdict::Below(k),
        Dominance::Incomparable => UdVerdict::Incomparable(k),
        Dominance::Equal => unreachable!("paths differ at {k}"),
    })
}

/// Eigenvalue of `L_k` on the basis vector indexed by `t`, in the ground ring.
///
/// Adding a node of content `c` gives `(q^{2c} - 1)/(q - q^-1)`; removing one gives
/// `(z^-2 q^{2-2c} - 1)/(q - q^-1)`.
pub fn ct_eigenvalue_ground(t: &UpDownTableau, k: usize) -> Ground {
    let mono = match t.step(k) {
        Step::Add(p) => Mono::new(2 * p.content(), 0),
        Step::Remove(p) => Mono::new(2 - 2 * p.content(), -2),
    };
    let num = LaurentPoly::from_terms([(mono, Int::one()), (Mono::ONE, -Int::one())]);
    Ground::from_parts(num, 1)
}

pub fn ct_eigenvalue(t: &UpDownTableau, k: usize) -> Coeff {
    ct_eigenvalue_ground(t, k).to_coeff()
}

/// Ordered restriction data of `C(f, λ)` to `n - 1`.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub struct Branching {
    /// `λ` minus a removable node, decreasing.
    pub removals: Vec<Partition>,
    /// `λ` plus an addable node, decreasing; empty when `f = 0`.
    pub additions: Vec<Partition>,
    pub f: usize,
}

impl Branching {
    /// `μ^(1), …, μ^(m)`.
    pub fn list(&self) -> Vec<Partition> {
        self.removals.iter().chain(&self.additions).cloned().collect()
    }

    /// The split index `a`, the number of removals.
    pub fn split(&self) -> usize {
        self.removals.len()
    }

    /// The labels for `n - 1` of each entry.
    pub fn labels(&self) -> Vec<CellLabel> {
        let r = self.removals.iter().map(|m| CellLabel::new(self.f, m.clone()));
        let a = self.additions.iter().map(|m| CellLabel::new(self.f - 1, m.clone()));
        r.chain(a).collect()
    }
}

/// Removal block then addition block, each in decreasing lexicographic order
/// (which refines dominance).
pub fn branching_list(f: usize, lambda: &Partition, n: usize) -> Result<Branching> {
    CellLabel::new(f, lambda.clone()).check(n)?;
    if n == 0 {
        return Err(Error::InvalidInput("no restriction below n=0".into()));
    }
    let desc = |mut v: Vec<Partition>| {
        v.sort_by(|a, b| b.lex_cmp(a));
        v
    };
    let removals = desc(lambda.removable().into_iter().map(|p| lambda.remove_node(p).unwrap()).collect());
    let additions = if f == 0 { vec![] } else { desc(lambda.addable().into_iter().map(|p| lambda.add_node(p).unwrap()).collect()) };
    Ok(Branching { removals, additions, f })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ud(v: &[&str]) -> UpDownTableau {
        UpDownTableau::new(v.iter().map(|s| p(s)).collect()).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(updown_tableaux(3, &p("1")).unwrap().len(), 3);
        assert_eq!(updown_tableaux(4, &p("2")).unwrap().len(), 6);
        assert_eq!(updown_tableaux(2, &p("")).unwrap().len(), 1);
        assert!(updown_tableaux(3, &p("2")).is_err());
    }

    #[test]
    fn comparisons() {
        let s = ud(&["", "1", "2", "1"]);
        let t = ud(&["", "1", "1,1", "1"]);
        assert_eq!(ud_compare(&s, &t).unwrap(), UdVerdict::Above(2));
        assert_eq!(ud_compare(&t, &t).unwrap(), UdVerdict::Equal);
        // the empty middle step has the larger deficiency
        let e = ud(&["", "1", "", "1"]);
        assert_eq!(ud_compare(&e, &s).unwrap(), UdVerdict::Above(2));
    }

    #[test]
    fn label_orders() {
        let a = CellLabel::new(1, p("2"));
        let b = CellLabel::new(0, p("4"));
        assert_eq!(label_order(&a, &b).unwrap(), Dominance::Above);
        assert!(label_order(&a, &CellLabel::new(0, p("3"))).is_err());
    }

    #[test]
    fn eigenvalues() {
        let t = ud(&["", "1", "2"]);
        assert!(ct_eigenvalue(&t, 1).is_zero());
        assert_eq!(ct_eigenvalue(&t, 2), Coeff::q());
        let e = ud(&["", "1", ""]);
        let want: Coeff = "-1*q^0*z^0+1*q^2*z^-2/1*q^0*z^0".parse::<Coeff>().unwrap().div(&"-1*q^-1*z^0+1*q^1*z^0/1*q^0*z^0".parse().unwrap()).unwrap();
        assert_eq!(ct_eigenvalue(&e, 2), want);
    }

    #[test]
    fn branching_examples() {
        let b = branching_list(1, &p("2"), 4).unwrap();
        assert_eq!(b.list(), vec![p("1"), p("3"), p("2,1")]);
        assert_eq!(b.split(), 1);
        let b = branching_list(0, &p("1,1"), 2).unwrap();
        assert_eq!((b.list(), b.split()), (vec![p("1")], 1));
        let b = branching_list(1, &p(""), 2).unwrap();
        assert_eq!((b.list(), b.split()), (vec![p("1")], 0));
        assert!(branching_list(1, &p("1"), 4).is_err());
    }
}
