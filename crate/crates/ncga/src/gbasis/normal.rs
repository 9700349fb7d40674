//! Normal-element detection: exact rank comparisons of `g*A_e` against
//! `A_e*g` inside normal forms.

use super::GbError;
use crate::freealg::FreePoly;
use crate::linalg::{QMatrix, RowSpan};
use crate::quotient::QuotientAlgebra;
use crate::rat::Rat;
use num_traits::Zero;

/// Is `g` normal up to degree `check_to`: does `span(g*A_e) = span(A_e*g)`
/// hold for every `e <= check_to`?
///
/// A yes is reported as "normal up to degree `check_to`"; the conditions in
/// the generator degrees already force normality in all degrees for a
/// degree-wise certified algebra, higher `e` re-verify it.
pub fn is_normal_element(
    g: &FreePoly,
    alg: &QuotientAlgebra,
    check_to: usize,
) -> Result<bool, GbError> {
    if g.is_zero() {
        return Err(GbError::FreeAlg(
            crate::freealg::FreeAlgError::ZeroPolynomial,
        ));
    }
    let d = g
        .homogeneous_degree(alg.gens())
        .ok_or(GbError::FreeAlg(crate::freealg::FreeAlgError::Inhomogeneous))?;
    if d + check_to > alg.max_degree() {
        return Err(GbError::TruncationInsufficient(
            d + check_to,
            alg.max_degree(),
        ));
    }
    let g = alg.nf(g);
    for e in 1..=check_to {
        let basis_e = alg.basis(e);
        let target = d + e;
        let mut left = QMatrix::zero(0, alg.dim(target));
        let mut right = QMatrix::zero(0, alg.dim(target));
        for w in basis_e.iter() {
            let wp = FreePoly::term(w.clone(), num_traits::One::one());
            left.push_row(alg.coords(&g.mul(&wp), target));
            right.push_row(alg.coords(&wp.mul(&g), target));
        }
        let rank_left = left.rank();
        let rank_right = right.rank();
        if rank_left != rank_right {
            return Ok(false);
        }
        let mut joint = left;
        for i in 0..right.rows {
            joint.push_row(right.row(i).to_vec());
        }
        if joint.rank() != rank_left {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A basis of certified normal elements of degree `d`, valid up to degree
/// `check_to`.
///
/// Two exactly solvable families are combined: the degree-`d` center (a
/// linear solve), and reduced-word basis vectors that are individually
/// normal. The set of all normal elements need not be a linear space; every
/// returned generator is individually certified.
pub fn find_normal_elements(
    alg: &QuotientAlgebra,
    d: usize,
    check_to: usize,
) -> Result<Vec<FreePoly>, GbError> {
    if d + check_to > alg.max_degree() || d == 0 {
        return Err(GbError::TruncationInsufficient(
            d + check_to,
            alg.max_degree(),
        ));
    }
    let gens = alg.gens().clone();
    let dim_d = alg.dim(d);
    let basis_d = alg.basis(d);

    // Center in degree d: g with g*x_i - x_i*g = 0 for every generator.
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut n_rows = 0;
    for i in 0..gens.len() {
        n_rows += alg.dim(d + gens.weight(i));
    }
    for _ in 0..n_rows {
        rows.push(vec![Rat::zero(); dim_d]);
    }
    let mut row_offset = 0;
    for i in 0..gens.len() {
        let target = d + gens.weight(i);
        let xi = FreePoly::generator(i);
        for (col, w) in basis_d.iter().enumerate() {
            let wp = FreePoly::term(w.clone(), num_traits::One::one());
            let comm = alg.nf(&wp.mul(&xi)).sub(&alg.nf(&xi.mul(&wp)));
            for (coef_idx, c) in alg.coords(&comm, target).into_iter().enumerate() {
                rows[row_offset + coef_idx][col] = c;
            }
        }
        row_offset += alg.dim(target);
    }
    let central = QMatrix::from_rows(rows).nullspace();

    let mut span = RowSpan::new(dim_d);
    let mut out = Vec::new();
    for v in central {
        if span.insert(v.clone()) {
            out.push(alg.from_coords(&v, d));
        }
    }
    // Reduced words, ascending for a friendly output order.
    for w in basis_d.iter().rev() {
        let wp = FreePoly::term(w.clone(), num_traits::One::one());
        if is_normal_element(&wp, alg, check_to)? {
            let coords = alg.coords(&wp, d);
            if span.insert(coords) {
                out.push(wp);
            }
        }
    }
    Ok(out)
}
