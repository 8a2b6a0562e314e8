//! Constructors for staircase algebras and the named families.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::partition::{Partition, ShiftedPartition};
use crate::quiver::{Arrow, Quiver, Relation};

/// Commutative-square algebra on a set of boxes listed row by row.
fn grid_algebra(boxes: &[(usize, usize)]) -> Result<BoundQuiverAlgebra> {
    let pos: HashMap<(usize, usize), usize> = boxes.iter().enumerate().map(|(k, &b)| (b, k)).collect();
    let labels = boxes.iter().map(|(i, j)| format!("({i},{j})")).collect();
    let mut arrows = Vec::new();
    let mut right = HashMap::new();
    let mut down = HashMap::new();
    for (k, &(i, j)) in boxes.iter().enumerate() {
        if let Some(&t) = pos.get(&(i, j + 1)) {
            right.insert((i, j), arrows.len());
            arrows.push(Arrow { name: format!("α{i},{j}"), src: k, dst: t });
        }
        if let Some(&t) = pos.get(&(i + 1, j)) {
            down.insert((i, j), arrows.len());
            arrows.push(Arrow { name: format!("β{i},{j}"), src: k, dst: t });
        }
    }
    let mut rels = Vec::new();
    for &(i, j) in boxes {
        if pos.contains_key(&(i + 1, j + 1)) && pos.contains_key(&(i, j + 1)) && pos.contains_key(&(i + 1, j)) {
            rels.push(Relation::commutativity(
                vec![right[&(i, j)], down[&(i, j + 1)]],
                vec![down[&(i, j)], right[&(i + 1, j)]],
            ));
        }
    }
    BoundQuiverAlgebra::assemble(Quiver::new(labels, arrows)?, rels, true)
}

/// The staircase algebra of a Young diagram: all commutativity relations on unit squares.
pub fn staircase(lambda: &Partition) -> Result<BoundQuiverAlgebra> {
    grid_algebra(&lambda.boxes())
}

/// The shifted-staircase algebra of a shifted Young diagram.
pub fn shifted_staircase(lambda: &ShiftedPartition) -> Result<BoundQuiverAlgebra> {
    grid_algebra(&lambda.boxes())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    LinearA { n: usize },
    D { n: usize },
    Lambda { n: usize },
    A1 { n: usize },
    Grid { m: usize, n: usize },
    Triangle { n: usize },
    AuslanderA { m: usize },
}

impl Family {
    pub fn build(&self) -> Result<BoundQuiverAlgebra> {
        named_family(*self)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::LinearA { n } => write!(f, "linear_a:{n}"),
            Family::D { n } => write!(f, "d:{n}"),
            Family::Lambda { n } => write!(f, "lambda:{n}"),
            Family::A1 { n } => write!(f, "a1:{n}"),
            Family::Grid { m, n } => write!(f, "grid:{m},{n}"),
            Family::Triangle { n } => write!(f, "triangle:{n}"),
            Family::AuslanderA { m } => write!(f, "auslander_a:{m}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `name:params`, e.g. `lambda:4`, `grid:2,4`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse family `{s}`"));
        let (name, params) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let one = || {
            if nums.len() == 1 {
                Ok(nums[0])
            } else {
                Err(bad())
            }
        };
        Ok(match name.trim().to_ascii_lowercase().as_str() {
            "linear_a" | "a" => Family::LinearA { n: one()? },
            "d" => Family::D { n: one()? },
            "lambda" => Family::Lambda { n: one()? },
            "a1" => Family::A1 { n: one()? },
            "grid" if nums.len() == 2 => Family::Grid { m: nums[0], n: nums[1] },
            "triangle" => Family::Triangle { n: one()? },
            "auslander_a" => Family::AuslanderA { m: one()? },
            _ => return Err(bad()),
        })
    }
}

fn chain(n: usize, from: usize, arrows: &mut Vec<Arrow>) {
    for k in from..n {
        arrows.push(Arrow { name: format!("γ{k}"), src: k - 1, dst: k });
    }
}

fn too_small(what: &str, min: usize) -> Error {
    Error::InvalidParameter(format!("{what} needs parameter at least {min}"))
}

pub fn named_family(fam: Family) -> Result<BoundQuiverAlgebra> {
    let arrow = |name: &str, s: usize, t: usize| Arrow { name: name.into(), src: s - 1, dst: t - 1 };
    match fam {
        Family::LinearA { n } => {
            if n < 1 {
                return Err(too_small("linear_a", 1));
            }
            let mut arrows = Vec::new();
            chain(n, 1, &mut arrows);
            BoundQuiverAlgebra::assemble(Quiver::with_numbered_vertices(n, arrows)?, vec![], true)
        }
        Family::D { n } => {
            if n < 3 {
                return Err(too_small("d", 3));
            }
            let mut arrows = vec![arrow("α", 1, 3), arrow("β", 2, 3)];
            chain(n, 3, &mut arrows);
            BoundQuiverAlgebra::assemble(Quiver::with_numbered_vertices(n, arrows)?, vec![], true)
        }
        Family::Lambda { n } => {
            if n < 3 {
                return Err(too_small("lambda", 3));
            }
            if n == 3 {
                let arrows = vec![arrow("α", 1, 2), arrow("β", 1, 3)];
                return BoundQuiverAlgebra::assemble(Quiver::with_numbered_vertices(3, arrows)?, vec![], true);
            }
            let mut arrows = vec![arrow("α", 1, 2), arrow("β", 1, 3), arrow("μ", 2, 4), arrow("ν", 3, 4)];
            chain(n, 4, &mut arrows);
            let rel = Relation::commutativity(vec![0, 2], vec![1, 3]);
            BoundQuiverAlgebra::assemble(Quiver::with_numbered_vertices(n, arrows)?, vec![rel], true)
        }
        Family::A1 { n } => {
            if n < 2 {
                return Err(too_small("a1", 2));
            }
            if n == 2 {
                return named_family(Family::LinearA { n: 2 });
            }
            let mut arrows = vec![arrow("α", 1, 2), arrow("β", 2, 3)];
            chain(n, 3, &mut arrows);
            let rel = Relation::monomial(vec![0, 1]);
            BoundQuiverAlgebra::assemble(Quiver::with_numbered_vertices(n, arrows)?, vec![rel], true)
        }
        Family::Grid { m, n } => {
            if m < 1 || n < 1 {
                return Err(too_small("grid", 1));
            }
            staircase(&Partition::new(vec![m; n])?)
        }
        Family::Triangle { n } => {
            if n < 1 {
                return Err(too_small("triangle", 1));
            }
            shifted_staircase(&ShiftedPartition::new((1..=n).rev().collect())?)
        }
        Family::AuslanderA { m } => {
            if m < 1 {
                return Err(too_small("auslander_a", 1));
            }
            let base = shifted_staircase(&ShiftedPartition::new((1..=m).rev().collect())?)?;
            let q = base.quiver().clone();
            let find = |src: (usize, usize), dst: (usize, usize)| {
                let s = q.vertex_by_label(&format!("({},{})", src.0, src.1)).unwrap();
                let t = q.vertex_by_label(&format!("({},{})", dst.0, dst.1)).unwrap();
                q.arrows().iter().position(|a| a.src == s && a.dst == t).unwrap()
            };
            let mut rels = base.relations().to_vec();
            for i in 1..m {
                rels.push(Relation::monomial(vec![find((i, i), (i, i + 1)), find((i, i + 1), (i + 1, i + 1))]));
            }
            BoundQuiverAlgebra::assemble(q, rels, true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(a: &BoundQuiverAlgebra) -> (usize, usize, usize) {
        (a.n(), a.quiver().arrows().len(), a.relations().len())
    }

    #[test]
    fn staircase_examples() {
        let a = staircase(&"3^2,2".parse().unwrap()).unwrap();
        assert_eq!(counts(&a), (8, 10, 3));
        let line = staircase(&"5".parse().unwrap()).unwrap();
        assert_eq!(counts(&line), (5, 4, 0));
        let sq = staircase(&"2,2".parse().unwrap()).unwrap();
        assert_eq!(counts(&sq), (4, 4, 1));
        assert_eq!(a.render_relations()[0], "α1,1·β1,2 - β1,1·α2,1");
    }

    #[test]
    fn shifted_examples() {
        let t = shifted_staircase(&"4,3,2,1".parse().unwrap()).unwrap();
        assert_eq!(counts(&t), (10, 12, 3));
        let line = shifted_staircase(&"4".parse().unwrap()).unwrap();
        assert_eq!(counts(&line), (4, 3, 0));
    }

    #[test]
    fn named_examples() {
        let l4 = named_family(Family::Lambda { n: 4 }).unwrap();
        assert_eq!(counts(&l4), (4, 4, 1));
        assert_eq!(l4.render_relations(), vec!["αμ - βν".to_string()]);
        assert_eq!(l4.dim_slice(0, 3), 1);
        let a13 = named_family(Family::A1 { n: 3 }).unwrap();
        assert_eq!(counts(&a13), (3, 2, 1));
        assert_eq!(a13.render_relations(), vec!["αβ".to_string()]);
        let e2 = named_family(Family::AuslanderA { m: 4 }).unwrap();
        assert_eq!(counts(&e2), (10, 12, 6));
        assert!(named_family(Family::Lambda { n: 2 }).is_err());
        assert!(named_family(Family::D { n: 2 }).is_err());
        let l3 = named_family(Family::Lambda { n: 3 }).unwrap();
        assert_eq!(counts(&l3), (3, 2, 0));
    }

    #[test]
    fn family_parsing_round_trips() {
        for s in ["lambda:4", "grid:2,4", "linear_a:3", "d:4", "a1:5", "triangle:3", "auslander_a:4"] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("grid:2".parse::<Family>().is_err());
        assert!("foo:1".parse::<Family>().is_err());
    }
}
