//! Tensor decompositions, Littlewood-Richardson coefficients and Schur
//! polynomials.
//!
//! The decomposition of a tensor product of two components is computed from
//! crystals alone: highest-weight vertices of the product are the pairs
//! `u (x) v` with `u` the fixed highest reading and `eps_i(v) <= phi_i(u)`
//! for every color. Only full-size components survive at infinite rank; the
//! surviving multiplicities match a classical, completely independent count
//! of Littlewood-Richardson skew tableaux.

use std::collections::BTreeMap;

use crate::crystal::{enumerate_component, weight_as_top_shape};
use crate::error::{Error, Result};
use crate::letters::LieType;
use crate::partition::Partition;
use crate::poly::MultiPoly;
use crate::rs::p_symbol;
use crate::tableau::{highest_tableau, Tableau};

/// Multiset of components: shape -> multiplicity.
pub type DecompositionMultiset = BTreeMap<Partition, u64>;

/// Decomposes the tensor product of the `lambda` and `mu` components at
/// infinite rank, keeping only the components of full size
/// `|lambda| + |mu|`; smaller shapes are rank-truncation artifacts.
pub fn tensor_decompose(
    lambda: &Partition,
    mu: &Partition,
    ty: LieType,
    budget: usize,
) -> Result<DecompositionMultiset> {
    let rank = (lambda.size() + mu.size()) as usize + lambda.len() + mu.len();
    let rank = rank.max(1);
    let u = highest_tableau(rank, lambda, ty)?.reading();
    let hw_mu = highest_tableau(rank, mu, ty)?.reading();
    let phis: Vec<u32> = ty.colors_below(rank).map(|i| u.phi(i)).collect();
    let full = lambda.size() + mu.size();
    let mut out = DecompositionMultiset::new();
    for v in enumerate_component(&hw_mu, rank, budget)? {
        let dominated = ty
            .colors_below(rank)
            .zip(phis.iter())
            .all(|(i, &phi_u)| v.eps(i) <= phi_u);
        if !dominated {
            continue;
        }
        let weight = u.weight().add(&v.weight());
        if let Some(shape) = weight_as_top_shape(&weight, rank) {
            if shape.size() == full {
                *out.entry(shape).or_insert(0) += 1;
            }
        }
    }
    Ok(out)
}

/// Classical Littlewood-Richardson rule, independent of everything above:
/// counts semistandard skew fillings of `nu/lambda` with content `mu` whose
/// reverse reading word is a lattice word.
pub fn lr_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !nu.contains(lambda) || lambda.size() + mu.size() != nu.size() {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    // cells in reverse reading order: rows top to bottom, right to left
    let mut cells = Vec::new();
    for r in 0..nu.len() {
        for c in (lambda.part(r) as usize..nu.part(r) as usize).rev() {
            cells.push((r, c));
        }
    }
    let mut filling: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    let mut remaining: Vec<u32> = mu.parts().to_vec();
    let mut counts = vec![0u32; mu.len() + 1];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        lambda: &Partition,
        filling: &mut BTreeMap<(usize, usize), u32>,
        remaining: &mut Vec<u32>,
        counts: &mut Vec<u32>,
        total: &mut u64,
    ) {
        if idx == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[idx];
        for v in 1..=remaining.len() as u32 {
            if remaining[v as usize - 1] == 0 {
                continue;
            }
            // lattice condition on the reverse reading word
            if v > 1 && counts[v as usize] + 1 > counts[v as usize - 1] {
                continue;
            }
            // row weakly increasing left to right: the cell to the right was
            // already placed (reverse order within the row)
            if let Some(&right) = filling.get(&(r, c + 1)) {
                if v > right {
                    continue;
                }
            }
            // column strictly increasing: cell above
            if r > 0 && c >= lambda.part(r - 1) as usize {
                match filling.get(&(r - 1, c)) {
                    Some(&above) if above >= v => continue,
                    Some(_) => {}
                    None => {}
                }
            }
            filling.insert((r, c), v);
            remaining[v as usize - 1] -= 1;
            counts[v as usize] += 1;
            rec(idx + 1, cells, lambda, filling, remaining, counts, total);
            filling.remove(&(r, c));
            remaining[v as usize - 1] += 1;
            counts[v as usize] -= 1;
        }
    }
    let mut total = 0;
    rec(
        0,
        &cells,
        lambda,
        &mut filling,
        &mut remaining,
        &mut counts,
        &mut total,
    );
    total
}

/// The Schur polynomial of `shape` in `vars` commuting variables, as a sum
/// over semistandard tableaux with entries at most `vars`.
pub fn schur_poly(shape: &Partition, vars: usize) -> MultiPoly {
    if shape.len() > vars {
        return MultiPoly::zero(vars);
    }
    let mut out = MultiPoly::zero(vars);
    // fill row by row; entries in row r are >= r+1 (column strictness)
    fn rec(
        shape: &Partition,
        vars: usize,
        row: usize,
        col: usize,
        rows: &mut Vec<Vec<u32>>,
        out: &mut MultiPoly,
    ) {
        if row == shape.len() {
            let mut expo = vec![0u16; vars];
            for v in rows.iter().flatten() {
                expo[*v as usize - 1] += 1;
            }
            out.add_term(expo, 1);
            return;
        }
        if col == shape.part(row) as usize {
            rec(shape, vars, row + 1, 0, rows, out);
            return;
        }
        let min = {
            let mut m = 1;
            if col > 0 {
                m = m.max(rows[row][col - 1]);
            }
            if row > 0 && col < rows[row - 1].len() {
                m = m.max(rows[row - 1][col] + 1);
            }
            m
        };
        for v in min..=vars as u32 {
            rows[row].push(v);
            rec(shape, vars, row, col + 1, rows, out);
            rows[row].pop();
        }
    }
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.len()];
    rec(shape, vars, 0, 0, &mut rows, &mut out);
    out
}

/// Result of a plactic product count, with the rank-stability re-run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductCount {
    pub count: u64,
    /// the count was unchanged when the letter-support cap grew by one
    pub stable: bool,
}

/// Counts the pairs `(T', T'')` of tableaux in the rank-`cap` components of
/// `lambda` and `mu` whose concatenated readings have P-symbol `t`. This is
/// the coefficient of `t`'s class in the product of the two plactic Schur
/// functions, evaluated at finite letter support; the result is re-counted
/// at `cap + 1` and flagged stable when unchanged.
pub fn plactic_product_multiplicity(
    t: &Tableau,
    lambda: &Partition,
    mu: &Partition,
    cap: usize,
    budget: usize,
) -> Result<ProductCount> {
    if t.size() as u64 != lambda.size() + mu.size() {
        return Err(Error::ShapeMismatch);
    }
    let count = count_product_pairs(t, lambda, mu, cap, budget)?;
    let again = count_product_pairs(t, lambda, mu, cap + 1, budget)?;
    Ok(ProductCount {
        count,
        stable: count == again,
    })
}

fn count_product_pairs(
    t: &Tableau,
    lambda: &Partition,
    mu: &Partition,
    cap: usize,
    budget: usize,
) -> Result<u64> {
    let ty = t.ty();
    let cap = cap.max(lambda.len()).max(mu.len()).max(1);
    let left = enumerate_component(&highest_tableau(cap, lambda, ty)?.reading(), cap, budget)?;
    let right = enumerate_component(&highest_tableau(cap, mu, ty)?.reading(), cap, budget)?;
    let mut count = 0;
    for l in &left {
        for r in &right {
            let prod = l.concat(r)?;
            if p_symbol(&prod)? == *t {
                count += 1;
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letters::LieType::{A, C};
    use crate::letters::{Letter, Word};
    use crate::partition::count_syt;

    fn part(parts: &[u32]) -> Partition {
        Partition::from_slice(parts)
    }

    #[test]
    fn vector_square_decomposes_into_two_components() {
        for ty in LieType::ALL {
            let d = tensor_decompose(&part(&[1]), &part(&[1]), ty, 100_000).unwrap();
            let expect: DecompositionMultiset =
                [(part(&[2]), 1), (part(&[1, 1]), 1)].into_iter().collect();
            assert_eq!(d, expect, "type {ty}");
        }
    }

    #[test]
    fn tensor_with_empty_is_identity() {
        for ty in LieType::ALL {
            let lam = part(&[2, 1]);
            let d = tensor_decompose(&lam, &Partition::empty(), ty, 100_000).unwrap();
            assert_eq!(d, [(lam.clone(), 1)].into_iter().collect());
        }
    }

    #[test]
    fn hook_times_box() {
        let d = tensor_decompose(&part(&[1]), &part(&[1, 1]), C, 100_000).unwrap();
        let expect: DecompositionMultiset = [(part(&[2, 1]), 1), (part(&[1, 1, 1]), 1)]
            .into_iter()
            .collect();
        assert_eq!(d, expect);
    }

    #[test]
    fn lr_values() {
        assert_eq!(lr_oracle(&part(&[1]), &part(&[2]), &part(&[2, 1])), 1);
        assert_eq!(
            lr_oracle(&part(&[2, 1]), &Partition::empty(), &part(&[2, 1])),
            1
        );
        assert_eq!(lr_oracle(&part(&[2]), &part(&[1, 1]), &part(&[2, 2])), 0);
        assert_eq!(
            lr_oracle(&part(&[2, 1]), &part(&[2, 1]), &part(&[3, 2, 1])),
            2
        );
        assert_eq!(lr_oracle(&part(&[1]), &part(&[1]), &part(&[2])), 1);
    }

    #[test]
    fn lr_sum_rule() {
        // sum over nu of c^nu * f^nu = f^lambda * f^mu * binomial(n, |lambda|)
        // checked indirectly: decompositions match the oracle for small pairs
        for lam in Partition::all_of_size(2) {
            for mu in Partition::all_of_size(2) {
                let d = tensor_decompose(&lam, &mu, A, 100_000).unwrap();
                for nu in Partition::all_of_size(4) {
                    assert_eq!(
                        d.get(&nu).copied().unwrap_or(0),
                        lr_oracle(&lam, &mu, &nu),
                        "{lam} x {mu} -> {nu}"
                    );
                }
            }
        }
    }

    #[test]
    fn lr_is_symmetric() {
        for total in 0..=4u32 {
            for a in 0..=total {
                for lam in Partition::all_of_size(a) {
                    for mu in Partition::all_of_size(total - a) {
                        for nu in Partition::all_of_size(total) {
                            assert_eq!(
                                lr_oracle(&lam, &mu, &nu),
                                lr_oracle(&mu, &lam, &nu),
                                "{lam} {mu} {nu}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn product_counts_equal_lr_for_all_small_targets() {
        // the plactic Schur product theorem at desk scale: for every target
        // tableau in the decomposition of (1) x (2) and (1) x (1,1), the
        // number of factor pairs inserting to it is the LR coefficient
        use crate::crystal::enumerate_component;
        use crate::tableau::{highest_tableau, Tableau};
        for ty in [A, C] {
            for mu in [part(&[2]), part(&[1, 1])] {
                let lam = part(&[1]);
                for nu in Partition::all_of_size(3) {
                    let want = lr_oracle(&lam, &mu, &nu);
                    let cap = 4usize;
                    if nu.len() > cap {
                        continue;
                    }
                    let hw = highest_tableau(cap, &nu, ty).unwrap().reading();
                    for v in enumerate_component(&hw, cap, 100_000).unwrap() {
                        let t = Tableau::from_reading(&v, &nu).unwrap();
                        if !t.is_tableau().unwrap() {
                            continue;
                        }
                        let got =
                            plactic_product_multiplicity(&t, &lam, &mu, cap, 100_000).unwrap();
                        assert!(got.stable, "unstable count for {t:?}");
                        assert_eq!(got.count, want, "type {ty}, {lam} x {mu} -> {nu}");
                    }
                }
            }
        }
    }

    #[test]
    fn schur_polys() {
        let p = schur_poly(&part(&[1]), 2);
        assert_eq!(p.to_string_with(&["y1", "y2"]), "y1 + y2");
        let p = schur_poly(&part(&[2]), 2);
        assert_eq!(p.to_string_with(&["y1", "y2"]), "y1^2 + y1*y2 + y2^2");
        assert!(schur_poly(&part(&[1, 1]), 1).is_zero());
        // dimension check: s_lambda(1^k) counts SSYT
        let p = schur_poly(&part(&[2, 1]), 3);
        assert_eq!(p.eval_all_ones(), 8);
    }

    #[test]
    fn product_multiplicities_match_lr() {
        let row = Tableau::new(vec![vec![Letter::new(-1), Letter::new(-1)]], A).unwrap();
        let r = plactic_product_multiplicity(&row, &part(&[1]), &part(&[1]), 3, 100_000).unwrap();
        assert_eq!(r.count, 1);
        assert!(r.stable);

        let col = Tableau::new(vec![vec![Letter::new(-2)], vec![Letter::new(-1)]], C).unwrap();
        let r = plactic_product_multiplicity(&col, &part(&[1]), &part(&[1]), 3, 100_000).unwrap();
        assert_eq!(r.count, 1);
        assert!(r.stable);

        // an empty factor: the count is 1 exactly when the target lies in
        // the other component
        let r = plactic_product_multiplicity(&col, &part(&[1, 1]), &Partition::empty(), 3, 100_000)
            .unwrap();
        assert_eq!(r.count, 1);
        let row = Tableau::new(vec![vec![Letter::new(-1), Letter::new(-1)]], C).unwrap();
        let r = plactic_product_multiplicity(&row, &part(&[1, 1]), &Partition::empty(), 3, 100_000)
            .unwrap();
        assert_eq!(r.count, 0);
    }

    #[test]
    fn word_crystal_multiplicities_are_syt_counts() {
        // every length-2 word at rank 2, grouped by component
        for ty in LieType::ALL {
            let letters: Vec<Letter> = (-2..=2)
                .map(Letter::new)
                .filter(|l| l.is_legal(ty))
                .collect();
            let mut endpoints: BTreeMap<Word, ()> = BTreeMap::new();
            for &a in &letters {
                for &b in &letters {
                    let w = Word::new(vec![a, b], ty).unwrap();
                    let (hw, _) = w.raise_to_highest(2).unwrap();
                    endpoints.entry(hw).or_insert(());
                }
            }
            let mut by_shape: BTreeMap<Partition, u64> = BTreeMap::new();
            for hw in endpoints.keys() {
                if let Some(shape) = weight_as_top_shape(&hw.weight(), 2) {
                    if shape.size() == 2 {
                        *by_shape.entry(shape).or_insert(0) += 1;
                    }
                }
            }
            for shape in Partition::all_of_size(2) {
                assert_eq!(
                    by_shape.get(&shape).copied().unwrap_or(0),
                    count_syt(&shape),
                    "type {ty} shape {shape}"
                );
            }
        }
    }
}
