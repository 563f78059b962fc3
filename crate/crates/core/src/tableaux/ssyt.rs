//! Semistandard Young tableaux, the cocharge statistic, and Kostka numbers.

use num_bigint::BigInt;

use crate::algebra::{IntPoly, Partition};
use crate::error::{Error, Result};

/// A semistandard Young tableau: rows weakly increase left to right,
/// columns strictly increase top to bottom (English notation).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ssyt {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Ssyt {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Multiset of entries as occurrence counts of 1, 2, ...
    pub fn content(&self) -> Vec<u32> {
        let mut counts = Vec::new();
        for row in &self.rows {
            for &e in row {
                let idx = (e - 1) as usize;
                if counts.len() <= idx {
                    counts.resize(idx + 1, 0);
                }
                counts[idx] += 1;
            }
        }
        counts
    }

    /// Rows read left to right, bottom row first.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

/// All semistandard tableaux of the given shape and content, ordered
/// lexicographically by row-major reading.
pub fn enumerate_ssyt(shape: &Partition, content: &Partition) -> Result<Vec<Ssyt>> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch(shape.size(), content.size()));
    }
    let mut remaining: Vec<u32> = content.parts().to_vec();
    let mut rows: Vec<Vec<u32>> = shape
        .parts()
        .iter()
        .map(|&w| Vec::with_capacity(w as usize))
        .collect();
    let mut out = Vec::new();
    fill_ssyt(shape, 0, 0, &mut rows, &mut remaining, &mut out);
    Ok(out)
}

fn fill_ssyt(
    shape: &Partition,
    r: usize,
    c: usize,
    rows: &mut Vec<Vec<u32>>,
    remaining: &mut Vec<u32>,
    out: &mut Vec<Ssyt>,
) {
    if r == shape.len() {
        out.push(Ssyt {
            shape: shape.clone(),
            rows: rows.clone(),
        });
        return;
    }
    if c == shape.part(r) as usize {
        fill_ssyt(shape, r + 1, 0, rows, remaining, out);
        return;
    }
    let min_left = if c > 0 { rows[r][c - 1] } else { 1 };
    let min_above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    let lo = min_left.max(min_above);
    for v in lo..=remaining.len() as u32 {
        let idx = (v - 1) as usize;
        if remaining[idx] == 0 {
            continue;
        }
        remaining[idx] -= 1;
        rows[r].push(v);
        fill_ssyt(shape, r, c + 1, rows, remaining, out);
        rows[r].pop();
        remaining[idx] += 1;
    }
}

/// Kostka number: the number of semistandard tableaux of the given shape
/// and content.
pub fn kostka_number(shape: &Partition, content: &Partition) -> Result<u64> {
    Ok(enumerate_ssyt(shape, content)?.len() as u64)
}

/// Cocharge of a word whose content is a partition: decompose into
/// standard subwords by the cyclic right-to-left selection rule, then sum
/// each subword's index, where the index of `r + 1` grows by one exactly
/// when `r + 1` sits to the left of `r`.
pub fn cocharge_word(word: &[u32]) -> Result<u64> {
    let mut counts: Vec<u32> = Vec::new();
    for &v in word {
        let idx = (v - 1) as usize;
        if counts.len() <= idx {
            counts.resize(idx + 1, 0);
        }
        counts[idx] += 1;
    }
    for w in counts.windows(2) {
        if w[0] < w[1] {
            return Err(Error::InvalidTableau(format!(
                "word content {counts:?} is not a partition"
            )));
        }
    }
    if counts.contains(&0) && !counts.is_empty() {
        return Err(Error::InvalidTableau(format!(
            "word content {counts:?} is not a partition"
        )));
    }

    let mut alive: Vec<(usize, u32)> = word.iter().copied().enumerate().collect();
    let mut total = 0u64;
    while !alive.is_empty() {
        // Rightmost 1, then scan leftward cyclically for 2, 3, ...
        let mut selected: Vec<usize> = Vec::new(); // indices into `alive`
        let mut cursor = alive
            .iter()
            .rposition(|&(_, v)| v == 1)
            .expect("partition content contains a 1");
        selected.push(cursor);
        let mut target = 2;
        loop {
            let n = alive.len();
            let mut found = None;
            for step in 1..n {
                let k = (cursor + n - step) % n;
                if alive[k].1 == target && !selected.contains(&k) {
                    found = Some(k);
                    break;
                }
            }
            match found {
                Some(k) => {
                    selected.push(k);
                    cursor = k;
                    target += 1;
                }
                None => break,
            }
        }
        // Positions in the original word, by letter value 1, 2, ...
        let positions: Vec<usize> = selected.iter().map(|&k| alive[k].0).collect();
        let mut index = 0u64;
        for r in 1..positions.len() {
            if positions[r] < positions[r - 1] {
                index += 1;
            }
            total += index;
        }
        let mut sel = selected;
        sel.sort_unstable();
        for k in sel.into_iter().rev() {
            alive.remove(k);
        }
    }
    Ok(total)
}

/// Cocharge of a semistandard tableau whose content is a partition.
pub fn cocharge(t: &Ssyt) -> Result<u64> {
    cocharge_word(&t.reading_word())
}

/// Modified Kostka-Foulkes polynomial: the cocharge generating polynomial
/// over semistandard tableaux of the given shape and content.
pub fn kostka_foulkes(shape: &Partition, content: &Partition) -> Result<IntPoly> {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for t in enumerate_ssyt(shape, content)? {
        let c = cocharge(&t)? as usize;
        if coeffs.len() <= c {
            coeffs.resize(c + 1, BigInt::from(0));
        }
        coeffs[c] += 1;
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn ssyt_enumeration_small() {
        // Shape equal to content forces the superstandard filling.
        for shape in [part(&[3]), part(&[2, 1]), part(&[2, 2, 1])] {
            let ts = enumerate_ssyt(&shape, &shape).unwrap();
            assert_eq!(ts.len(), 1, "shape {shape}");
            for (i, row) in ts[0].rows().iter().enumerate() {
                assert!(row.iter().all(|&e| e == i as u32 + 1));
            }
        }
        assert_eq!(
            enumerate_ssyt(&part(&[2, 1]), &part(&[1, 1, 1]))
                .unwrap()
                .len(),
            2
        );
        // Column strictness forbids a repeated entry in a column.
        assert_eq!(
            enumerate_ssyt(&part(&[1, 1]), &part(&[2])).unwrap().len(),
            0
        );
        assert!(enumerate_ssyt(&part(&[2]), &part(&[1])).is_err());
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_number(&part(&[2, 1]), &part(&[2, 1])).unwrap(), 1);
        for lam in crate::algebra::partitions_of(5) {
            assert_eq!(kostka_number(&part(&[5]), &lam).unwrap(), 1);
        }
        assert_eq!(kostka_number(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), 2);
    }

    #[test]
    fn cocharge_known_words() {
        assert_eq!(cocharge_word(&[1, 2]).unwrap(), 0);
        assert_eq!(cocharge_word(&[2, 1]).unwrap(), 1);
        assert_eq!(cocharge_word(&[3, 2, 1]).unwrap(), 3);
        assert_eq!(cocharge_word(&[1, 1, 2]).unwrap(), 0);
        assert_eq!(cocharge_word(&[2, 1, 1]).unwrap(), 1);
        assert_eq!(cocharge_word(&[2, 2, 1, 1]).unwrap(), 2);
        // Single-row readings have cocharge 0.
        assert_eq!(cocharge_word(&[1, 1, 2, 2, 3]).unwrap(), 0);
        assert!(cocharge_word(&[2, 2, 1]).is_err());
    }

    #[test]
    fn superstandard_cocharge_is_the_partition_weight() {
        // The unique tableau of shape lambda and content lambda has
        // cocharge n(lambda) = sum over rows of (row index) * (row size).
        for n in 1..=6 {
            for lam in crate::algebra::partitions_of(n) {
                let ts = enumerate_ssyt(&lam, &lam).unwrap();
                assert_eq!(ts.len(), 1);
                let expected: u64 = lam
                    .parts()
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| i as u64 * p as u64)
                    .sum();
                assert_eq!(cocharge(&ts[0]).unwrap(), expected, "shape {lam}");
            }
        }
    }

    #[test]
    fn kostka_foulkes_forced_values() {
        // Degree 2: the column content splits as 1 + t over the two shapes.
        assert_eq!(
            kostka_foulkes(&part(&[2]), &part(&[1, 1])).unwrap(),
            IntPoly::one()
        );
        assert_eq!(
            kostka_foulkes(&part(&[1, 1]), &part(&[1, 1])).unwrap(),
            IntPoly::from_ints(&[0, 1])
        );
        // Single-row shape pairs to 1 for every content.
        for lam in crate::algebra::partitions_of(4) {
            assert_eq!(
                kostka_foulkes(&part(&[4]), &lam).unwrap(),
                IntPoly::one(),
                "content {lam}"
            );
        }
        // Evaluation at t = 1 forgets the statistic.
        let kf = kostka_foulkes(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap();
        assert_eq!(kf, IntPoly::from_ints(&[0, 1, 1]));
        assert_eq!(
            kf.eval_int(&1.into()),
            kostka_number(&part(&[2, 1]), &part(&[1, 1, 1]))
                .unwrap()
                .into()
        );
    }
}
