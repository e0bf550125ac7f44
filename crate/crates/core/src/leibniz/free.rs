use std::collections::{BTreeMap, HashMap};

use super::LeibnizAlgebra;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::linalg::{one, Scalar};
use crate::tensor::Word;

type Combination = BTreeMap<Word, Scalar>;

fn letter_name(g: usize, l: usize) -> String {
    if g <= 26 {
        ((b'a' + l as u8) as char).to_string()
    } else {
        format!("g{l}")
    }
}

fn word_name(g: usize, w: &[usize]) -> String {
    let parts: Vec<String> = w.iter().map(|&l| letter_name(g, l)).collect();
    parts.join(if g <= 26 { "" } else { "_" })
}

fn add_into(target: &mut Combination, factor: &Scalar, source: &Combination) {
    for (w, c) in source {
        let slot = target.entry(w.clone()).or_insert_with(|| Scalar::from_integer(0.into()));
        *slot += factor * c;
        if num_traits::Zero::is_zero(slot) {
            target.remove(w);
        }
    }
}

/// Bracket of two words in the free Leibniz algebra truncated above
/// `max_weight`:
/// `{a, y} = a⊗y` for a letter `y` and `{a, b⊗y} = {a,b}⊗y − {a⊗y, b}`.
struct FreeBracket {
    max_weight: usize,
    memo: HashMap<(Word, Word), Combination>,
}

impl FreeBracket {
    fn bracket(&mut self, a: &[usize], r: &[usize]) -> Combination {
        if a.len() + r.len() > self.max_weight {
            return Combination::new();
        }
        let key = (a.to_vec(), r.to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let (&y, b) = r.split_last().expect("right argument is a nonempty word");
        let result = if b.is_empty() {
            let mut w = a.to_vec();
            w.push(y);
            [(w, one())].into()
        } else {
            let mut out = Combination::new();
            for (w, c) in self.bracket(a, b) {
                let mut wy = w;
                wy.push(y);
                out.insert(wy, c);
            }
            let mut ay = a.to_vec();
            ay.push(y);
            let tail = self.bracket(&ay, b);
            add_into(&mut out, &-one(), &tail);
            out
        };
        self.memo.insert(key, result.clone());
        result
    }
}

/// Weight (tensor length) of each basis element of [`free_leibniz`]`(g, W)`.
pub fn free_word_weight(g: usize, index: usize) -> usize {
    let mut remaining = index;
    let mut len = 1;
    let mut count = g;
    while remaining >= count {
        remaining -= count;
        len += 1;
        count *= g;
    }
    len
}

/// The free Leibniz algebra on `g` generators modulo brackets of weight
/// above `max_weight`, modelled on `⊕_{w=1}^{W} V^{⊗w}`.
///
/// Basis: words of length 1..=W ordered by (length, lexicographic), each of
/// weight equal to its length.
pub fn free_leibniz(g: usize, max_weight: usize, caps: &Caps) -> Result<LeibnizAlgebra> {
    if g == 0 || max_weight == 0 {
        return Err(Error::InvalidArgument(format!(
            "free Leibniz algebra needs g >= 1 and W >= 1, got g = {g}, W = {max_weight}"
        )));
    }
    let total: u128 = (1..=max_weight as u32).map(|w| (g as u128).saturating_pow(w)).sum();
    caps.check_count(&format!("free Leibniz algebra on {g} generators up to weight {max_weight}"), total)?;

    let mut words: Vec<Word> = Vec::new();
    for len in 1..=max_weight {
        words.extend(crate::tensor::all_words(g, len));
    }
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();

    let mut br = FreeBracket {
        max_weight,
        memo: HashMap::new(),
    };
    let mut brackets = Vec::new();
    for (i, a) in words.iter().enumerate() {
        for (j, r) in words.iter().enumerate() {
            let value = br.bracket(a, r);
            if !value.is_empty() {
                brackets.push((
                    (i, j),
                    value.into_iter().map(|(w, c)| (index[&w], c)).collect(),
                ));
            }
        }
    }
    let names = words.iter().map(|w| word_name(g, w)).collect();
    let weights = words.iter().map(|w| w.len() as u32).collect();
    LeibnizAlgebra::new(format!("free-{g}-{max_weight}"), names, brackets, Some(weights))
}
