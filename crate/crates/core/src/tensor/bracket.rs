use super::{TensorElement, Word};
use crate::error::{Error, Result};
use crate::linalg::sign;

/// A formal bracket expression in letters of `V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BracketTree {
    Leaf(usize),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn node(left: BracketTree, right: BracketTree) -> Self {
        BracketTree::Node(Box::new(left), Box::new(right))
    }

    /// Right-nested tree `[x_1,[x_2,[⋯[x_{n-1},x_n]⋯]`; `None` for the empty word.
    pub fn right_nested(word: &[usize]) -> Option<Self> {
        let (&last, init) = word.split_last()?;
        Some(
            init.iter()
                .rev()
                .fold(BracketTree::Leaf(last), |acc, &l| {
                    BracketTree::node(BracketTree::Leaf(l), acc)
                }),
        )
    }

    /// Number of leaves, which is the degree of the expansion.
    pub fn degree(&self) -> usize {
        match self {
            BracketTree::Leaf(_) => 1,
            BracketTree::Node(a, b) => a.degree() + b.degree(),
        }
    }

    fn max_leaf(&self) -> usize {
        match self {
            BracketTree::Leaf(l) => *l,
            BracketTree::Node(a, b) => a.max_leaf().max(b.max_leaf()),
        }
    }

    /// Expands the tree in `T(V,1)` using `[a,b] = a⊗b − (−1)^{|a||b|} b⊗a`.
    pub fn expand(&self, dim_v: usize) -> Result<TensorElement> {
        if self.max_leaf() >= dim_v {
            return Err(Error::InvalidArgument(format!(
                "bracket leaf {} outside V of dimension {dim_v}",
                self.max_leaf()
            )));
        }
        Ok(self.expand_unchecked())
    }

    fn expand_unchecked(&self) -> TensorElement {
        match self {
            BracketTree::Leaf(l) => TensorElement::word(vec![*l]),
            BracketTree::Node(a, b) => graded_bracket(&a.expand_unchecked(), &b.expand_unchecked()),
        }
    }
}

/// Graded commutator of homogeneous tensors in `T(V,1)`.
pub fn graded_bracket(a: &TensorElement, b: &TensorElement) -> TensorElement {
    let mut out = a.tensor(b);
    out.add_scaled(&-sign(a.degree() * b.degree()), &b.tensor(a));
    out
}

/// `[[x_1,⋯,x_n]]` expanded in `V^{⊗n}`; the empty word maps to zero.
pub fn nested_bracket(word: &[usize]) -> TensorElement {
    let Some((&first, rest)) = word.split_first() else {
        return TensorElement::zero(0);
    };
    if rest.is_empty() {
        return TensorElement::word(vec![first]);
    }
    let inner = nested_bracket(rest);
    // x ⊗ τ − (−1)^{|τ|} τ ⊗ x
    let s = -sign(rest.len());
    let mut out = TensorElement::zero(word.len());
    for (w, c) in inner.terms() {
        let mut front: Word = Vec::with_capacity(word.len());
        front.push(first);
        front.extend_from_slice(w);
        out.add_term(front, c.clone());
        let mut back = w.clone();
        back.push(first);
        out.add_term(back, &s * c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn leaf(l: usize) -> BracketTree {
        BracketTree::Leaf(l)
    }

    #[test]
    fn degree_one_bracket_is_symmetric() {
        let t = BracketTree::node(leaf(0), leaf(1)).expand(2).unwrap();
        let expected = TensorElement::from_terms(2, [(vec![0, 1], int(1)), (vec![1, 0], int(1))]).unwrap();
        assert_eq!(t, expected);
        let xx = BracketTree::node(leaf(0), leaf(0)).expand(1).unwrap();
        assert_eq!(xx, TensorElement::term(vec![0, 0], int(2)));
    }

    #[test]
    fn triple_bracket_in_one_letter_vanishes() {
        let t = BracketTree::node(BracketTree::node(leaf(0), leaf(0)), leaf(0));
        assert!(t.expand(1).unwrap().is_zero());
    }

    #[test]
    fn leaf_outside_v_is_rejected() {
        assert!(BracketTree::node(leaf(0), leaf(2)).expand(2).is_err());
    }

    #[test]
    fn nested_examples() {
        assert_eq!(nested_bracket(&[1]), TensorElement::word(vec![1]));
        let xyz = nested_bracket(&[0, 1, 2]);
        // x⊗τ − τ⊗x with τ = y⊗z + z⊗y of degree 2
        let expected = TensorElement::from_terms(
            3,
            [
                (vec![0, 1, 2], int(1)),
                (vec![0, 2, 1], int(1)),
                (vec![1, 2, 0], int(-1)),
                (vec![2, 1, 0], int(-1)),
            ],
        )
        .unwrap();
        assert_eq!(xyz, expected);
        let tree = BracketTree::right_nested(&[0, 1, 2]).unwrap();
        assert_eq!(tree.expand(3).unwrap(), xyz);
    }
}
