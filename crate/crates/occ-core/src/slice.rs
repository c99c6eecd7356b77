//! Normal-slice charts through an orbit representative, the rank
//! equations cutting out orbit closures inside them, and the three
//! varieties the verification revolves around.
//!
//! The chart at a clan's representative g is the matrix family
//! (Id + sum_k t_k A_k) g, where the A_k form a basis of the
//! intersection of the opposite nilradical Ad(g)(n^-) with the
//! off-diagonal block space. Setting every coordinate to zero recovers
//! g, and the number of coordinates equals the codimension of the
//! orbit inside the flag variety.
//!
//! For a rank condition list, the equations are corner determinants and
//! the minors of bordered column blocks of the chart; the preset
//! returned by [`theorem_a_conditions`] is the full list needed for the
//! 8x8 slice study. [`ideal_y`] is the 2x2-minor form of the slice
//! variety, [`ideal_z`] its matrix-pair realization, and [`ideal_zks`]
//! the larger matrix-quadruple singularity that Z embeds into.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::clan::Clan;
use crate::groebner::{ideal_member, Ideal, RingMap};
use crate::monomial::MonomialOrder;
use crate::poly::{Polynomial, Ring, RingRef, VariableSet};
use crate::polymat::PolyMatrix;
use crate::qmat::{intersect_row_spaces, QMat};
use crate::scalar::{FieldSpec, Scalar};

/// Affine chart (Id + sum t_k A_k) g through a clan's representative.
#[derive(Clone, Debug)]
pub struct SliceChart {
    pub clan: Clan,
    pub representative: QMat,
    pub ring: RingRef,
    /// basis[k] is the direction multiplied by ring variable k
    pub basis: Vec<QMat>,
    pub matrix: PolyMatrix,
}

/// One family of vanishing conditions restricted to the slice.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RankCondition {
    /// determinant of the upper-left p x p corner
    CornerNw,
    /// determinant of the lower-left q x q corner
    CornerSw,
    /// minors of size min(n, i+j) of the bordered column-block matrix
    Pair(usize, usize),
}

/// The condition list for the 8x8 slice study: both corners and the
/// eight nontrivial column pairs.
pub fn theorem_a_conditions() -> Vec<RankCondition> {
    let mut v = alloc::vec![RankCondition::CornerNw, RankCondition::CornerSw];
    for (i, j) in [(2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6)] {
        v.push(RankCondition::Pair(i, j));
    }
    v
}

fn scalar_from_rational(field: &FieldSpec, r: &BigRational) -> Scalar {
    field
        .from_ratio(r.numer(), r.denom())
        .expect("denominator invertible in the coefficient field")
}

fn poly_from_rational(ring: &RingRef, r: &BigRational) -> Polynomial {
    Polynomial::constant(ring, scalar_from_rational(&ring.field, r))
}

/// Basis of Ad(g)(strictly lower triangular) meet the off-diagonal
/// blocks, as canonical echelon rows of the n^2-dimensional matrix
/// space.
fn opposite_nilradical_meet_p(c: &Clan) -> (QMat, Vec<QMat>) {
    let n = c.n();
    let p = c.p();
    let g = c.representative();
    let gi = g.inverse().expect("representative is invertible");

    let mut lower_rows = QMat::zero(n * (n - 1) / 2, n * n);
    let mut r = 0;
    for j in 0..n {
        for i in (j + 1)..n {
            for a in 0..n {
                let g_ai = g.get(a, i);
                if g_ai.is_zero() {
                    continue;
                }
                for b in 0..n {
                    let v = g_ai * gi.get(j, b);
                    if !v.is_zero() {
                        lower_rows.set(r, a * n + b, v);
                    }
                }
            }
            r += 1;
        }
    }

    let mut p_rows = QMat::zero(2 * p * (n - p), n * n);
    let mut r = 0;
    for a in 0..n {
        for b in 0..n {
            if (a < p) != (b < p) {
                p_rows.set(r, a * n + b, BigRational::from_integer(1.into()));
                r += 1;
            }
        }
    }

    let meet = intersect_row_spaces(&lower_rows, &p_rows);
    let mats = (0..meet.rows())
        .map(|k| QMat::from_fn(n, n, |a, b| meet.get(k, a * n + b).clone()))
        .collect();
    (g, mats)
}

/// Build the slice chart for a clan. The chart of the 20-dimensional
/// reference orbit carries the published x/y coordinate names; other
/// clans get t_1..t_d.
pub fn slice_chart(c: &Clan, field: &FieldSpec) -> SliceChart {
    let n = c.n();
    let (g, basis_echelon) = opposite_nilradical_meet_p(c);
    let d = basis_echelon.len();

    // coordinate names, listed in echelon (pivot) order
    let golden = c == &Clan::parse("(12213443)").unwrap();
    let pivot_names: Vec<&str> = if golden {
        assert_eq!(d, 8);
        alloc::vec!["x_2", "x_1", "x_4", "x_3", "y_1", "y_2", "y_3", "y_4"]
    } else {
        Vec::new()
    };

    let var_names: Vec<alloc::string::String> = if golden {
        ["x_1", "x_2", "x_3", "x_4", "y_1", "y_2", "y_3", "y_4"]
            .iter()
            .map(|s| alloc::string::String::from(*s))
            .collect()
    } else {
        (1..=d).map(|i| alloc::format!("t_{}", i)).collect()
    };
    let ring = Ring::new(field.clone(), VariableSet::new(var_names));

    // pair basis[k] with ring variable k
    let mut basis: Vec<QMat> = Vec::with_capacity(d);
    for k in 0..d {
        let src = if golden {
            pivot_names
                .iter()
                .position(|nm| *nm == ring.vars.name(k))
                .unwrap()
        } else {
            k
        };
        basis.push(basis_echelon[src].clone());
    }

    // (Id + sum_k t_k basis[k]) * g
    let id_plus = PolyMatrix::from_fn(&ring, n, n, |r, cidx| {
        let mut acc = if r == cidx {
            Polynomial::one(&ring)
        } else {
            Polynomial::zero(&ring)
        };
        for (k, bk) in basis.iter().enumerate() {
            let coeff = bk.get(r, cidx);
            if !coeff.is_zero() {
                let t = Polynomial::var(&ring, k).mul(&poly_from_rational(&ring, coeff));
                acc = acc.add(&t);
            }
        }
        acc
    });
    let g_poly =
        PolyMatrix::from_fn(&ring, n, n, |r, cidx| poly_from_rational(&ring, g.get(r, cidx)));
    let matrix = id_plus.mul(&g_poly);

    SliceChart {
        clan: c.clone(),
        representative: g,
        ring,
        basis,
        matrix,
    }
}

/// The bordered column-block matrix of a pair condition: the first i
/// columns of the chart with the last q rows zeroed out, followed by
/// the first j columns unchanged.
pub fn wy_pair_matrix(chart: &SliceChart, i: usize, j: usize) -> PolyMatrix {
    let n = chart.clan.n();
    let q = chart.clan.q();
    assert!(i <= n && j <= n, "column indices exceed the chart");
    PolyMatrix::from_fn(&chart.ring, n, i + j, |r, c| {
        if c < i {
            if r >= n - q {
                Polynomial::zero(&chart.ring)
            } else {
                chart.matrix.get(r, c).clone()
            }
        } else {
            chart.matrix.get(r, c - i).clone()
        }
    })
}

/// Ideal of the rank conditions restricted to the slice.
pub fn wyser_yong_ideal(chart: &SliceChart, conditions: &[RankCondition]) -> Ideal {
    let n = chart.clan.n();
    let p = chart.clan.p();
    let q = chart.clan.q();
    let mut gens: Vec<Polynomial> = Vec::new();
    for cond in conditions {
        match cond {
            RankCondition::CornerNw => {
                let rows: Vec<usize> = (0..p).collect();
                let cols: Vec<usize> = (0..p).collect();
                gens.push(chart.matrix.submatrix(&rows, &cols).determinant().unwrap());
            }
            RankCondition::CornerSw => {
                let rows: Vec<usize> = (n - q..n).collect();
                let cols: Vec<usize> = (0..q).collect();
                gens.push(chart.matrix.submatrix(&rows, &cols).determinant().unwrap());
            }
            RankCondition::Pair(i, j) => {
                let m = wy_pair_matrix(chart, *i, *j);
                let size = n.min(i + j);
                gens.extend(m.minors(size));
            }
        }
    }
    Ideal::new(&chart.ring, gens)
}

fn ring_xy(field: &FieldSpec) -> RingRef {
    Ring::new(
        field.clone(),
        VariableSet::new(["x_1", "x_2", "x_3", "x_4", "y_1", "y_2", "y_3", "y_4"]),
    )
}

fn ring_ab(field: &FieldSpec) -> RingRef {
    Ring::new(
        field.clone(),
        VariableSet::new(["a_1", "a_2", "a_3", "a_4", "b_1", "b_2", "b_3", "b_4"]),
    )
}

fn ring_quad(field: &FieldSpec) -> RingRef {
    Ring::new(
        field.clone(),
        VariableSet::new([
            "a_1", "a_2", "a_3", "a_4", "b_1", "b_2", "b_3", "b_4", "c_1", "c_2", "c_3", "c_4",
            "d_1", "d_2", "d_3", "d_4",
        ]),
    )
}

fn pmat(ring: &RingRef, rows: usize, cols: usize, entries: &[&str]) -> PolyMatrix {
    PolyMatrix::new(
        ring,
        rows,
        cols,
        entries
            .iter()
            .map(|s| crate::poly::parse_polynomial(s, ring).unwrap())
            .collect(),
    )
}

/// The two 4x2 column matrices whose 2x2 minors cut out the slice
/// variety Y.
pub fn y_matrices(field: &FieldSpec) -> (PolyMatrix, PolyMatrix) {
    let r = ring_xy(field);
    let a1 = pmat(&r, 4, 2, &["x_1", "x_2", "x_3", "x_4", "y_2", "y_1", "y_4", "y_3"]);
    let a2 = pmat(&r, 4, 2, &["x_1", "x_3", "x_2", "x_4", "y_3", "y_1", "y_4", "y_2"]);
    (a1, a2)
}

/// Ideal of Y in x_1..x_4, y_1..y_4: all 2x2 minors of both column
/// matrices, twelve generators.
pub fn ideal_y(field: &FieldSpec) -> Ideal {
    let (a1, a2) = y_matrices(field);
    let ring = a1.ring().clone();
    let mut gens = a1.minors(2);
    gens.extend(a2.minors(2));
    Ideal::new(&ring, gens)
}

/// The overlap-free alternative: minors of the first matrix plus three
/// cross determinants.
pub fn ideal_y_alternate(field: &FieldSpec) -> Ideal {
    let (a1, _) = y_matrices(field);
    let ring = a1.ring().clone();
    let mut gens = a1.minors(2);
    for (top, bottom) in [
        (["x_1", "x_3"], ["y_4", "y_2"]),
        (["x_1", "x_3"], ["y_3", "y_1"]),
        (["x_2", "x_4"], ["y_3", "y_1"]),
    ] {
        let m = pmat(&ring, 2, 2, &[top[0], top[1], bottom[0], bottom[1]]);
        gens.push(m.determinant().unwrap());
    }
    Ideal::new(&ring, gens)
}

/// Ideal of Z in the entries of a matrix pair (A_1, A_2): both
/// determinants, the entries of A_1 J A_2^tr and of A_2^tr T A_1.
pub fn ideal_z(field: &FieldSpec) -> Ideal {
    let r = ring_ab(field);
    let a1 = pmat(&r, 2, 2, &["a_1", "a_2", "a_3", "a_4"]);
    let a2 = pmat(&r, 2, 2, &["b_1", "b_2", "b_3", "b_4"]);
    let j = pmat(&r, 2, 2, &["0", "-1", "1", "0"]);
    let t = pmat(&r, 2, 2, &["0", "1", "1", "0"]);
    let mut gens = alloc::vec![a1.determinant().unwrap(), a2.determinant().unwrap()];
    gens.extend(a1.mul(&j).mul(&a2.transpose()).minors(1));
    gens.extend(a2.transpose().mul(&t).mul(&a1).minors(1));
    Ideal::new(&r, gens)
}

/// The coordinate change identifying Y with Z, as a map on polynomial
/// rings: generators of the Z ideal pull back into the Y ring.
pub fn phi_map(field: &FieldSpec) -> RingMap {
    let source = ring_ab(field);
    let target = ring_xy(field);
    let images = ["y_3", "-y_4", "x_2", "-x_1", "y_1", "-y_2", "-x_4", "x_3"]
        .iter()
        .map(|s| crate::poly::parse_polynomial(s, &target).unwrap())
        .collect();
    RingMap::new(&source, &target, images)
}

/// Ideal of the eight-dimensional matrix-quadruple singularity in
/// sixteen variables: det(A_i) and det(A_i A_{i+1}) for i mod 4.
pub fn ideal_zks(field: &FieldSpec) -> Ideal {
    let r = ring_quad(field);
    let blocks: Vec<PolyMatrix> = ["a", "b", "c", "d"]
        .iter()
        .map(|pfx| {
            let names: Vec<alloc::string::String> =
                (1..=4).map(|i| alloc::format!("{}_{}", pfx, i)).collect();
            let strs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            pmat(&r, 2, 2, &strs)
        })
        .collect();
    let mut gens = Vec::with_capacity(8);
    for m in &blocks {
        gens.push(m.determinant().unwrap());
    }
    for i in 0..4 {
        gens.push(blocks[i].mul(&blocks[(i + 1) % 4]).determinant().unwrap());
    }
    Ideal::new(&r, gens)
}

/// The linear embedding (B_1, B_2) -> (J B_1^tr J, B_1, J B_2^tr J, B_2)
/// as a pullback map from the quadruple ring to the pair ring.
pub fn ks_embedding_map(field: &FieldSpec) -> RingMap {
    let source = ring_quad(field);
    let target = ring_ab(field);
    // J B^tr J = [[-b4, b2], [b3, -b1]]
    let images = [
        "-a_4", "a_2", "a_3", "-a_1", // A_0 = J B_1^tr J
        "a_1", "a_2", "a_3", "a_4", // A_1 = B_1
        "-b_4", "b_2", "b_3", "-b_1", // A_2 = J B_2^tr J
        "b_1", "b_2", "b_3", "b_4", // A_3 = B_2
    ]
    .iter()
    .map(|s| crate::poly::parse_polynomial(s, &target).unwrap())
    .collect();
    RingMap::new(&source, &target, images)
}

/// Every generator of the quadruple ideal pulls back into the ideal of
/// Z along the embedding.
pub fn ks_embedding_check(field: &FieldSpec) -> bool {
    let psi = ks_embedding_map(field);
    let mut z = ideal_z(field);
    z.ensure_basis(&MonomialOrder::Grevlex);
    ideal_zks(field)
        .generators()
        .iter()
        .all(|g| ideal_member(&psi.apply(g), &z, &MonomialOrder::Grevlex).unwrap())
}

/// Integer point in a ring's coefficient field, for evaluating ideals.
pub fn scalar_point(ring: &RingRef, coords: &[i64]) -> Vec<Scalar> {
    assert_eq!(coords.len(), ring.nvars());
    coords.iter().map(|&v| ring.field.from_i64(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{groebner_basis, ideal_dimension, ideal_equal, KrullDim};
    use crate::poly::parse_polynomial;

    fn gf101() -> FieldSpec {
        FieldSpec::prime(101).unwrap()
    }

    #[test]
    fn golden_representative_matrix() {
        let c = Clan::parse("(12213443)").unwrap();
        let expected = QMat::from_i64_rows(&[
            &[1, 0, 0, -1, 0, 0, 0, 0],
            &[0, 1, -1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, -1],
            &[0, 0, 0, 0, 0, 1, -1, 0],
            &[1, 0, 0, 1, 0, 0, 0, 0],
            &[0, 1, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, 1, 0, 0, 1],
        ]);
        assert_eq!(c.representative(), expected);
    }

    #[test]
    fn golden_slice_chart_matrix() {
        let c = Clan::parse("(12213443)").unwrap();
        let chart = slice_chart(&c, &FieldSpec::Rationals);
        assert_eq!(chart.basis.len(), 8);
        let r = &chart.ring;
        let rows: [[&str; 8]; 8] = [
            ["1", "0", "0", "-1", "0", "0", "0", "0"],
            ["0", "1", "-1", "0", "0", "0", "0", "0"],
            ["x_2", "x_1", "x_1", "x_2", "1", "0", "0", "-1"],
            ["x_4", "x_3", "x_3", "x_4", "0", "1", "-1", "0"],
            ["1", "0", "0", "1", "0", "0", "0", "0"],
            ["0", "1", "1", "0", "0", "0", "0", "0"],
            ["y_1", "y_2", "-y_2", "-y_1", "0", "1", "1", "0"],
            ["y_3", "y_4", "-y_4", "-y_3", "1", "0", "0", "1"],
        ];
        for (i, row) in rows.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                assert_eq!(
                    chart.matrix.get(i, j),
                    &parse_polynomial(s, r).unwrap(),
                    "entry ({}, {})",
                    i,
                    j
                );
            }
        }
    }

    #[test]
    fn open_clan_chart_has_no_coordinates() {
        let c = Clan::parse("(11)").unwrap();
        let chart = slice_chart(&c, &FieldSpec::Rationals);
        assert!(chart.basis.is_empty());
        assert_eq!(chart.ring.nvars(), 0);
        for i in 0..2 {
            for j in 0..2 {
                let v = chart.representative.get(i, j);
                assert_eq!(
                    chart.matrix.get(i, j),
                    &poly_from_rational(&chart.ring, v)
                );
            }
        }
    }

    #[test]
    fn closed_clan_chart_has_full_block() {
        let c = Clan::parse("++++----").unwrap();
        let chart = slice_chart(&c, &FieldSpec::Rationals);
        assert_eq!(chart.basis.len(), 16);
    }

    #[test]
    fn chart_codimension_matches_orbit() {
        for text in ["(12213443)", "(12324341)", "(1212)", "(11)"] {
            let c = Clan::parse(text).unwrap();
            let chart = slice_chart(&c, &FieldSpec::Rationals);
            let flag_dim = c.n() * (c.n() - 1) / 2;
            assert_eq!(chart.basis.len(), flag_dim - c.orbit_dimension(), "{}", text);
        }
    }

    #[test]
    fn corner_determinants_reduce_to_quadrics() {
        // the upper-left corner carries the x-quadric and the lower-left
        // the y-quadric, each scaled by 4; the surrounding prose labels
        // them the other way around, so both are recorded here and both
        // quadrics land in the ideal either way
        let c = Clan::parse("(12213443)").unwrap();
        let chart = slice_chart(&c, &FieldSpec::Rationals);
        let r = &chart.ring;
        let nw = wyser_yong_ideal(&chart, &[RankCondition::CornerNw]);
        assert_eq!(
            nw.generators(),
            &[parse_polynomial("4*x_1*x_4 - 4*x_2*x_3", r).unwrap()]
        );
        let sw = wyser_yong_ideal(&chart, &[RankCondition::CornerSw]);
        assert_eq!(
            sw.generators(),
            &[parse_polynomial("-4*y_1*y_4 + 4*y_2*y_3", r).unwrap()]
        );
    }

    #[test]
    fn empty_condition_list_gives_zero_ideal() {
        let c = Clan::parse("(12213443)").unwrap();
        let chart = slice_chart(&c, &gf101());
        let i = wyser_yong_ideal(&chart, &[]);
        assert!(i.generators().is_empty());
    }

    #[test]
    fn pair_24_with_corners_equals_first_matrix_minors() {
        let c = Clan::parse("(12213443)").unwrap();
        let chart = slice_chart(&c, &gf101());
        let i = wyser_yong_ideal(
            &chart,
            &[
                RankCondition::CornerNw,
                RankCondition::CornerSw,
                RankCondition::Pair(2, 4),
            ],
        );
        let (a1, _) = y_matrices(&gf101());
        let j = Ideal::new(&chart.ring, a1.minors(2));
        assert!(ideal_equal(&i, &j, &MonomialOrder::Grevlex).unwrap());
    }

    #[test]
    fn y_ideal_basics() {
        let i = ideal_y(&gf101());
        assert_eq!(i.generators().len(), 12);
        assert_eq!(ideal_dimension(&i, &MonomialOrder::Grevlex), KrullDim::Dim(4));
        // the two quadrics added explicitly alongside the pair ideals
        let r = i.ring().clone();
        for s in ["x_1*x_4 - x_2*x_3", "y_1*y_4 - y_2*y_3"] {
            let f = parse_polynomial(s, &r).unwrap();
            assert!(ideal_member(&f, &i, &MonomialOrder::Grevlex).unwrap());
        }
    }

    #[test]
    fn y_equals_overlap_free_alternate() {
        for field in [gf101(), FieldSpec::Rationals] {
            let a = ideal_y(&field);
            let b = ideal_y_alternate(&field);
            assert!(ideal_equal(&a, &b, &MonomialOrder::Grevlex).unwrap());
        }
    }

    #[test]
    fn z_pullback_is_y() {
        for field in [gf101(), FieldSpec::Rationals] {
            let z = ideal_z(&field);
            let phi = phi_map(&field);
            let pulled = crate::groebner::apply_map(&phi, &z).unwrap();
            let y = ideal_y(&field);
            assert!(ideal_equal(&pulled, &y, &MonomialOrder::Grevlex).unwrap());
        }
    }

    #[test]
    fn pullback_of_first_determinant() {
        let field = FieldSpec::Rationals;
        let z = ideal_z(&field);
        let phi = phi_map(&field);
        let det_a1 = &z.generators()[0];
        let expect = parse_polynomial("x_2*y_4 - x_1*y_3", &ring_xy(&field)).unwrap();
        assert_eq!(phi.apply(det_a1), expect);
        let y = ideal_y(&field);
        assert!(ideal_member(&expect, &y, &MonomialOrder::Grevlex).unwrap());
    }

    #[test]
    fn z_contains_origin_and_reference_points() {
        let z = ideal_z(&FieldSpec::Rationals);
        let r = z.ring().clone();
        let origin = scalar_point(&r, &[0; 8]);
        for g in z.generators() {
            assert!(g.eval(&origin).is_zero());
        }
        for eps in [1i64, 2, 3, -5] {
            let v = scalar_point(&r, &[0, eps, 0, 0, 0, eps, 0, 0]);
            for g in z.generators() {
                assert!(g.eval(&v).is_zero(), "eps = {}", eps);
            }
        }
    }

    #[test]
    fn one_not_in_y() {
        let y = ideal_y(&gf101());
        let one = Polynomial::one(y.ring());
        assert!(!ideal_member(&one, &y, &MonomialOrder::Grevlex).unwrap());
    }

    #[test]
    fn zks_generators_and_embedding() {
        let field = gf101();
        let zks = ideal_zks(&field);
        assert_eq!(zks.generators().len(), 8);
        let origin = scalar_point(zks.ring(), &[0; 16]);
        for g in zks.generators() {
            assert!(g.eval(&origin).is_zero());
        }
        assert!(ks_embedding_check(&field));
    }

    #[test]
    fn embedded_determinant_is_a_square() {
        // det(A_0 A_1) pulls back to det(B_1)^2
        let field = FieldSpec::Rationals;
        let psi = ks_embedding_map(&field);
        let zks = ideal_zks(&field);
        let det_a0a1 = &zks.generators()[4];
        let z = ideal_z(&field);
        let det_b1 = &z.generators()[0];
        assert_eq!(psi.apply(det_a0a1), det_b1.mul(det_b1));
    }

    #[test]
    fn y_generators_are_quadrics_with_zero_jacobian_at_origin() {
        let y = ideal_y(&FieldSpec::Rationals);
        let jac = crate::groebner::jacobian(y.generators());
        let origin = scalar_point(y.ring(), &[0; 8]);
        for r in 0..jac.rows() {
            assert!(y.generators()[r].is_homogeneous());
            assert_eq!(y.generators()[r].total_degree(), Some(2));
            for c in 0..jac.cols() {
                assert!(jac.get(r, c).eval(&origin).is_zero());
            }
        }
    }

    #[test]
    fn basis_certificates_for_y_and_z() {
        let ord = MonomialOrder::Grevlex;
        for field in [gf101(), FieldSpec::Rationals] {
            for ideal in [ideal_y(&field), ideal_z(&field)] {
                let b = groebner_basis(&ideal, &ord);
                assert!(crate::groebner::verify_buchberger(&b, &ord));
            }
        }
    }
}
