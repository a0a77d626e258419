//! Gassmann equivalence and subgroup conjugacy.
//!
//! `H, H' ≤ G` are Gassmann equivalent when `|g^G ∩ H| = |g^G ∩ H'|` for
//! every conjugacy class `g^G`. Equivalently, the double coset types
//! `(C,H)` and `(C,H')` agree for every cyclic `C ≤ G`. Both
//! characterizations are computed independently and must agree.

use rayon::prelude::*;
use serde::Serialize;

use crate::coset::{double_coset_type, local_degree_type};
use crate::error::{Error, Result};
use crate::group::{ElemId, PermGroup, Subgroup};
use crate::groupfile::GroupSpec;
use crate::perm::{Permutation, Point};

/// One conjugacy class of `G` with its intersection sizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub class_rep: String,
    pub size: usize,
    #[serde(rename = "in_H")]
    pub in_h: usize,
    #[serde(rename = "in_H2")]
    pub in_h2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GassmannReport {
    pub equivalent: bool,
    pub conjugate: bool,
    pub class_table: Vec<ClassRow>,
    /// `(C,H) = (C,H')` for every cyclic `C`.
    pub cyclic_check: bool,
    /// Smallest `g` with `g⁻¹Hg = H'`, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjugating_element: Option<String>,
}

/// Class-intersection table for `H` and `H'`, one row per class of `G`.
pub fn class_table(h: &Subgroup<'_>, h2: &Subgroup<'_>) -> Vec<ClassRow> {
    let g = h.group();
    g.conjugacy_classes()
        .classes()
        .par_iter()
        .map(|class| ClassRow {
            class_rep: g.element(class[0]).to_string(),
            size: class.len(),
            in_h: class.iter().filter(|&&e| h.contains(e)).count(),
            in_h2: class.iter().filter(|&&e| h2.contains(e)).count(),
        })
        .collect()
}

/// Whether `(C,H)` and `(C,H')` have the same double coset type for every
/// cyclic subgroup `C`.
pub fn cyclic_coset_types_agree(h: &Subgroup<'_>, h2: &Subgroup<'_>) -> bool {
    h.group()
        .cyclic_subgroups()
        .par_iter()
        .all(|c| double_coset_type(c, h).sizes == double_coset_type(c, h2).sizes)
}

/// Smallest `g ∈ G` with `g⁻¹Hg = H'`.
pub fn are_conjugate_subgroups(h: &Subgroup<'_>, h2: &Subgroup<'_>) -> Option<ElemId> {
    let g = h.group();
    if h.order() != h2.order() {
        return None;
    }
    g.ids().find(|&x| {
        h.generators()
            .iter()
            .all(|&s| h2.contains(g.conj(s, x)))
    })
}

/// Full report; panics if the two characterizations disagree.
pub fn gassmann_equivalent(h: &Subgroup<'_>, h2: &Subgroup<'_>) -> GassmannReport {
    let g = h.group();
    assert!(std::ptr::eq(g, h2.group()), "subgroups of different groups");
    let class_table = class_table(h, h2);
    let rows_equal = class_table.iter().all(|r| r.in_h == r.in_h2);
    let cyclic_check = cyclic_coset_types_agree(h, h2);
    assert_eq!(
        rows_equal, cyclic_check,
        "class intersections and cyclic coset types disagree"
    );
    if rows_equal {
        assert_eq!(h.order(), h2.order());
    }
    let witness = are_conjugate_subgroups(h, h2);
    GassmannReport {
        equivalent: rows_equal,
        conjugate: witness.is_some(),
        class_table,
        cyclic_check,
        conjugating_element: witness.map(|x| g.element(x).to_string()),
    }
}

/// For Gassmann equivalent `H, H'`: `(C,H)/|H| = (C,H')/|H'|` for every
/// cyclic `C`.
pub fn unramified_local_degree_match(h: &Subgroup<'_>, h2: &Subgroup<'_>) -> Result<bool> {
    if !class_table(h, h2).iter().all(|r| r.in_h == r.in_h2) {
        return Err(Error::precondition("H and H' are not Gassmann equivalent"));
    }
    Ok(h.group()
        .cyclic_subgroups()
        .par_iter()
        .all(|c| local_degree_type(c, h) == local_degree_type(c, h2)))
}

/// Moves `p` onto the points `offset+1..offset+deg(p)` of a set of `degree` points.
pub fn shift_points(p: &Permutation, offset: usize, degree: usize) -> Result<Permutation> {
    if offset + p.degree() > degree {
        return Err(Error::DegreeMismatch {
            left: offset + p.degree(),
            right: degree,
        });
    }
    let mut images: Vec<Point> = (0..degree as Point).collect();
    for (i, &j) in p.raw_images().iter().enumerate() {
        images[offset + i] = (offset + j as usize) as Point;
    }
    Ok(Permutation::from_raw(images))
}

/// `A × B` acting on `deg(A) + deg(B)` points, `A` on the first block.
pub fn direct_product_embed(a: &PermGroup, b: &PermGroup, cap: usize) -> Result<PermGroup> {
    let order = a.order().checked_mul(b.order()).filter(|&o| o <= cap);
    if order.is_none() {
        return Err(Error::CapExceeded {
            what: format!("direct product of order {}·{}", a.order(), b.order()),
            cap,
        });
    }
    let degree = a.degree() + b.degree();
    let gens = a
        .generators()
        .iter()
        .map(|p| shift_points(p, 0, degree))
        .chain(b.generators().iter().map(|p| shift_points(p, a.degree(), degree)))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::generate_capped(degree, &gens, cap)
}

/// `PSL(3,2)` on the seven points of the Fano plane, with a point
/// stabilizer and a line stabilizer.
pub mod psl32 {
    use super::*;

    /// Group file for `PSL(3,2)`.
    pub const GROUP_FILE: &str = include_str!("../data/psl32.group");
    /// Generators of the stabilizer of the point 7.
    pub const POINT_STABILIZER: &str = "(1,6,3,2)(4,5); (2,4)(5,6)";
    /// Generators of the stabilizer of the line `{1,2,4}`.
    pub const LINE_STABILIZER: &str = "(2,4)(3,5,7,6); (1,4)(3,6,5,7)";

    pub fn group() -> PermGroup {
        let g = GroupSpec::parse(GROUP_FILE)
            .and_then(|s| s.generate())
            .expect("stored PSL(3,2) data is valid");
        assert_eq!(g.order(), 168);
        g
    }

    /// The point and line stabilizers as subgroups of `g`.
    pub fn pair(g: &PermGroup) -> Result<(Subgroup<'_>, Subgroup<'_>)> {
        let parse = |s| crate::groupfile::parse_generator_list(s, g.degree());
        let h = g.subgroup_from_perms(&parse(POINT_STABILIZER)?)?;
        let h2 = g.subgroup_from_perms(&parse(LINE_STABILIZER)?)?;
        Ok((h, h2))
    }
}
