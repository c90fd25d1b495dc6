//! Smith normal form over the integers.
//!
//! Only the diagonal is returned; the unimodular transforms are never needed
//! by anything in this crate.

/// Invariant factors of an integer matrix.
///
/// Returns the nonzero diagonal entries `d_1 | d_2 | ... | d_s` of the Smith
/// normal form (all positive), so `s` is the rank of the matrix.
pub fn invariant_factors(matrix: &[Vec<i64>]) -> Vec<i64> {
    let rows = matrix.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<i128>> = matrix
        .iter()
        .map(|row| {
            assert_eq!(row.len(), cols, "ragged matrix");
            row.iter().map(|&x| x as i128).collect()
        })
        .collect();

    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest nonzero pivot in the trailing block
        let Some((pi, pj)) = min_nonzero(&m, t) else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                let q = m[i][t].div_euclid(m[t][t]);
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j].div_euclid(m[t][t]);
                if q != 0 {
                    for i in t..rows {
                        m[i][j] -= q * m[i][t];
                    }
                }
                if m[t][j] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // pivot must divide the whole trailing block
                let offender = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| m[i][j] % m[t][t] != 0);
                match offender {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            m[t][j] += m[i][j];
                        }
                        continue;
                    }
                }
            }
            if let Some((pi, pj)) = min_nonzero_cross(&m, t) {
                m.swap(t, pi);
                for row in m.iter_mut() {
                    row.swap(t, pj);
                }
            }
        }
        diag.push(m[t][t].unsigned_abs() as i64);
    }
    diag
}

fn min_nonzero(m: &[Vec<i128>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, &x) in row.iter().enumerate().skip(t) {
            if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < m[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

// Smallest nonzero entry in row t or column t (at or past the pivot).
fn min_nonzero_cross(m: &[Vec<i128>], t: usize) -> Option<(usize, usize)> {
    let col = (t..m.len()).map(|i| (i, t));
    let row = (t..m[0].len()).map(|j| (t, j));
    col.chain(row)
        .filter(|&(i, j)| m[i][j] != 0)
        .min_by_key(|&(i, j)| m[i][j].abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_coprime_merges() {
        assert_eq!(invariant_factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn d4_cartan_has_two_factors_of_two() {
        let d4 = vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, -1],
            vec![0, -1, 2, 0],
            vec![0, -1, 0, 2],
        ];
        assert_eq!(invariant_factors(&d4), vec![1, 1, 2, 2]);
    }

    #[test]
    fn singular_and_rectangular() {
        assert_eq!(invariant_factors(&[vec![2, 4], vec![1, 2]]), vec![1]);
        assert_eq!(invariant_factors(&[vec![4, 6, 8]]), vec![2]);
        assert!(invariant_factors(&[vec![0, 0]]).is_empty());
        assert!(invariant_factors(&[]).is_empty());
    }

    #[test]
    fn needs_divisibility_fixup() {
        // diag(2, 3) disguised: off-diagonal start
        assert_eq!(invariant_factors(&[vec![0, 2], vec![3, 0]]), vec![1, 6]);
        assert_eq!(invariant_factors(&[vec![4, 0], vec![0, 6]]), vec![2, 12]);
    }
}
